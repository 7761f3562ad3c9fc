//! All connected graphs of small order, one per isomorphism class.

use crate::error::{Error, Result};
use crate::graph::Graph;
use rayon::prelude::*;
use std::collections::BTreeSet;

/// Largest order [`connected_graphs`] accepts.
pub const CENSUS_MAX_ORDER: usize = 7;

/// Connected graphs on `n` vertices up to isomorphism, in a fixed order.
///
/// Every connected graph has a vertex whose removal leaves it connected, so
/// extending each class on `n - 1` vertices by a new vertex with a nonempty
/// neighbourhood reaches every class on `n` vertices. Classes are told apart
/// by the least adjacency code over all relabellings.
pub fn connected_graphs(n: usize) -> Result<Vec<Graph>> {
    if n == 0 {
        return Err(Error::Empty);
    }
    if n > CENSUS_MAX_ORDER {
        return Err(Error::TooLarge {
            n,
            limit: CENSUS_MAX_ORDER,
        });
    }
    let mut codes: BTreeSet<u32> = BTreeSet::from([0]);
    for order in 2..=n {
        let perms = permutations(order);
        let next: BTreeSet<u32> = codes
            .par_iter()
            .flat_map_iter(|&code| {
                let perms = &perms;
                (1u32..1 << (order - 1)).map(move |nbrs| {
                    let mut grown = code;
                    for v in 0..order - 1 {
                        if nbrs >> v & 1 == 1 {
                            grown |= 1 << pair_bit(v, order - 1);
                        }
                    }
                    canonical(grown, order, perms)
                })
            })
            .collect::<Vec<_>>()
            .into_iter()
            .collect();
        codes = next;
    }
    codes.into_iter().map(|code| decode(code, n)).collect()
}

/// Bit index of the pair `u < v`: pairs are ordered by `v`, then `u`.
fn pair_bit(u: usize, v: usize) -> usize {
    v * (v - 1) / 2 + u
}

fn canonical(code: u32, n: usize, perms: &[Vec<usize>]) -> u32 {
    let edges: Vec<(usize, usize)> = (1..n)
        .flat_map(|v| (0..v).map(move |u| (u, v)))
        .filter(|&(u, v)| code >> pair_bit(u, v) & 1 == 1)
        .collect();
    perms
        .iter()
        .map(|p| {
            edges.iter().fold(0u32, |acc, &(u, v)| {
                let (a, b) = (p[u].min(p[v]), p[u].max(p[v]));
                acc | 1 << pair_bit(a, b)
            })
        })
        .min()
        .unwrap_or(code)
}

fn decode(code: u32, n: usize) -> Result<Graph> {
    let edges = (1..n)
        .flat_map(|v| (0..v).map(move |u| (u, v)))
        .filter(|&(u, v)| code >> pair_bit(u, v) & 1 == 1);
    Graph::new(n, edges)
}

fn permutations(n: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut p: Vec<usize> = (0..n).collect();
    heap(n, &mut p, &mut out);
    out
}

fn heap(k: usize, p: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
    if k <= 1 {
        out.push(p.clone());
        return;
    }
    for i in 0..k - 1 {
        heap(k - 1, p, out);
        if k % 2 == 0 {
            p.swap(i, k - 1);
        } else {
            p.swap(0, k - 1);
        }
    }
    heap(k - 1, p, out);
}
