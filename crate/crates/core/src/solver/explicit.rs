//! Hand-built strong geodetic sets with prescribed geodesics.

use super::certificate::{all_pairs, PairPath, SgCertificate};
use crate::distance::DistanceOracle;
use crate::error::{Error, Result};
use crate::families::{
    cartesian_product, complete, counterexample_graph, counterexample_middle_index,
};
use crate::graph::{Graph, Path};
use crate::vertex_set::VertexSet;
use std::collections::HashMap;

/// The strong geodetic set of size `kn + 1` in `cex(k,n) □ K_n`: every
/// `(x_i, y_j)` plus `(u, y_1)`, where `u` is the universal vertex.
///
/// For `i < i'` the pair `(x_i, y_j), (x_{i'}, y_{j'})` runs through the
/// middle vertex `x_{ii'}^{(j')}` in layer `y_j` (through `x_{ii'}^{(j)}`
/// when `j = j'`), and `(u, y_1), (x_1, y_j)` runs through `(u, y_j)`. All
/// other pairs take their first canonical geodesic.
pub fn counterexample_product_certificate(k: usize, n: usize) -> Result<(Graph, SgCertificate)> {
    if k < 2 || n < 2 {
        return Err(Error::invalid("need k >= 2 and n >= 2"));
    }
    let g = counterexample_graph(k, n)?;
    let (p, map) = cartesian_product(&g, &complete(n)?)?;
    let u = g.order() - 1;
    let x = |i: usize, j: usize| map.index(i, j);
    let mid = |i: usize, i2: usize, j: usize| counterexample_middle_index(k, n, i, i2, j + 1);

    let mut prescribed: HashMap<(usize, usize), Vec<usize>> = HashMap::new();
    let mut put = |walk: Vec<usize>| {
        let (a, b) = (walk[0], walk[walk.len() - 1]);
        let walk = if a < b {
            walk
        } else {
            walk.into_iter().rev().collect()
        };
        prescribed.insert((a.min(b), a.max(b)), walk);
    };
    for i in 0..k {
        for i2 in i + 1..k {
            for j in 0..n {
                for j2 in 0..n {
                    let via = mid(i, i2, j2);
                    if j == j2 {
                        put(vec![x(i, j), map.index(via, j), x(i2, j)]);
                    } else {
                        put(vec![x(i, j), map.index(via, j), x(i2, j), x(i2, j2)]);
                    }
                }
            }
        }
    }
    for j in 1..n {
        put(vec![map.index(u, 0), map.index(u, j), x(0, j)]);
    }

    let mut members: Vec<usize> = (0..k).flat_map(|i| (0..n).map(move |j| x(i, j))).collect();
    members.push(map.index(u, 0));
    members.sort_unstable();
    let oracle = DistanceOracle::new(&p)?;
    let paths = all_pairs(&members, &members)
        .into_iter()
        .map(|pair| PairPath {
            pair,
            path: prescribed
                .remove(&pair)
                .map(Path)
                .unwrap_or_else(|| oracle.first_geodesic(pair.0, pair.1)),
        })
        .collect();
    let set = VertexSet::from_vertices(p.order(), members);
    Ok((p, SgCertificate { set, paths }))
}
