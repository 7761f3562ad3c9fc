//! Partitions of `V(G)` into two nonempty convex parts.

use crate::distance::DistanceOracle;
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::vertex_set::VertexSet;

/// Largest order accepted by [`has_convex_2_partition`].
pub const CONVEX_PARTITION_MAX_ORDER: usize = 24;

/// Both parts nonempty, disjoint, covering `V(G)` and convex.
pub fn is_convex_2_partition(g: &Graph, a: &VertexSet, b: &VertexSet) -> Result<bool> {
    let n = g.order();
    if a.universe() != n || b.universe() != n {
        return Err(Error::invalid(
            "partition sets must range over the graph's vertices",
        ));
    }
    if a.is_empty() || b.is_empty() || !a.intersection(b).is_empty() || a.len() + b.len() != n {
        return Ok(false);
    }
    g.require_connected()?;
    let oracle = DistanceOracle::new(g)?;
    Ok(oracle.is_convex(a) && oracle.is_convex(b))
}

/// Finds a convex 2-partition, vertex 0 always in the first part.
///
/// Both parts are grown as convex hulls: each step adds the least unassigned
/// vertex to one side and closes it under intervals, and a branch dies as
/// soon as one hull reaches into the other side.
pub fn has_convex_2_partition(g: &Graph) -> Result<Option<(VertexSet, VertexSet)>> {
    let n = g.order();
    if n < 2 {
        return Err(Error::invalid("a 2-partition needs at least two vertices"));
    }
    if n > CONVEX_PARTITION_MAX_ORDER {
        return Err(Error::TooLarge {
            n,
            limit: CONVEX_PARTITION_MAX_ORDER,
        });
    }
    g.require_connected()?;
    let oracle = DistanceOracle::new(g)?;
    let mut intervals = vec![0u32; n * n];
    for u in 0..n {
        for v in 0..n {
            intervals[u * n + v] = oracle.interval(u, v).iter().fold(0, |m, w| m | 1 << w);
        }
    }
    let search = Hulls { n, intervals };
    let all = (1u32 << n) - 1;
    Ok(search.grow(search.hull(1), 0, all).map(|(a, b)| {
        let to_set = |m: u32| VertexSet::from_vertices(n, (0..n).filter(|&v| m >> v & 1 == 1));
        (to_set(a), to_set(b))
    }))
}

struct Hulls {
    n: usize,
    intervals: Vec<u32>,
}

impl Hulls {
    fn hull(&self, mut set: u32) -> u32 {
        loop {
            let mut next = set;
            for u in bits(set) {
                for v in bits(set) {
                    if u < v {
                        next |= self.intervals[u * self.n + v];
                    }
                }
            }
            if next == set {
                return set;
            }
            set = next;
        }
    }

    fn grow(&self, a: u32, b: u32, all: u32) -> Option<(u32, u32)> {
        let free = all & !(a | b);
        if free == 0 {
            return (b != 0).then_some((a, b));
        }
        let v = free.trailing_zeros();
        let a2 = self.hull(a | 1 << v);
        if a2 & b == 0 {
            if let Some(found) = self.grow(a2, b, all) {
                return Some(found);
            }
        }
        let b2 = self.hull(b | 1 << v);
        if b2 & a == 0 {
            return self.grow(a, b2, all);
        }
        None
    }
}

fn bits(mut m: u32) -> impl Iterator<Item = usize> {
    std::iter::from_fn(move || {
        if m == 0 {
            return None;
        }
        let v = m.trailing_zeros() as usize;
        m &= m - 1;
        Some(v)
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families::*;

    #[test]
    fn small_cases() {
        let (a, b) = has_convex_2_partition(&path(4).unwrap()).unwrap().unwrap();
        assert_eq!(a.to_vec(), vec![0, 1, 2]);
        assert_eq!(b.to_vec(), vec![3]);
        assert!(
            has_convex_2_partition(&complete_multipartite(&[3, 3]).unwrap())
                .unwrap()
                .is_none()
        );
        assert!(has_convex_2_partition(&complete(2).unwrap())
            .unwrap()
            .is_some());
        assert!(has_convex_2_partition(&cycle(5).unwrap())
            .unwrap()
            .is_some());
        assert!(has_convex_2_partition(&cycle(4).unwrap())
            .unwrap()
            .is_some());
    }

    #[test]
    fn witnesses_check_out() {
        let hat = hat_subdivision(&complete(4).unwrap()).unwrap();
        let (a, b) = has_convex_2_partition(&hat).unwrap().unwrap();
        assert!(is_convex_2_partition(&hat, &a, &b).unwrap());
    }

    #[test]
    fn limits() {
        assert!(has_convex_2_partition(&complete(1).unwrap()).is_err());
        assert!(matches!(
            has_convex_2_partition(&path(25).unwrap()),
            Err(Error::TooLarge { .. })
        ));
    }
}
