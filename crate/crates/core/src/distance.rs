//! All-pairs hop distances and the shortest-path DAG they induce.

use crate::error::Result;
use crate::graph::{Graph, Path};
use crate::limits::{Bracket, Limit, Outcome, SearchLimits};
use crate::vertex_set::{Bits, VertexSet};
use std::fmt;

/// Number of shortest paths between two vertices; saturates instead of
/// wrapping.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub struct GeodesicCount(u128);

impl GeodesicCount {
    pub fn get(self) -> Option<u128> {
        (self.0 != u128::MAX).then_some(self.0)
    }

    pub fn is_saturated(self) -> bool {
        self.0 == u128::MAX
    }

    fn add(self, o: Self) -> Self {
        GeodesicCount(self.0.saturating_add(o.0))
    }
}

impl fmt::Display for GeodesicCount {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.get() {
            Some(c) => write!(f, "{c}"),
            None => f.write_str(">=2^128"),
        }
    }
}

#[derive(Clone, Debug)]
pub struct DistanceOracle {
    graph: Graph,
    dist: Vec<u32>,
    diameter: usize,
}

impl DistanceOracle {
    /// Breadth-first search from every vertex. Fails on disconnected input.
    pub fn new(graph: &Graph) -> Result<Self> {
        graph.require_connected()?;
        let n = graph.order();
        let mut dist = vec![0u32; n * n];
        for s in 0..n {
            for (t, d) in graph.bfs(s).into_iter().enumerate() {
                dist[s * n + t] = d.expect("connected") as u32;
            }
        }
        let diameter = dist.iter().copied().max().unwrap_or(0) as usize;
        Ok(DistanceOracle {
            graph: graph.clone(),
            dist,
            diameter,
        })
    }

    pub fn graph(&self) -> &Graph {
        &self.graph
    }

    pub fn order(&self) -> usize {
        self.graph.order()
    }

    #[inline]
    pub fn dist(&self, u: usize, v: usize) -> usize {
        self.dist[u * self.graph.order() + v] as usize
    }

    pub fn diameter(&self) -> usize {
        self.diameter
    }

    /// Neighbors `w` of `u` with `d(w, target) = d(u, target) - 1`.
    pub fn downhill(&self, u: usize, target: usize) -> impl Iterator<Item = usize> + '_ {
        let du = self.dist(u, target);
        self.graph
            .neighbors(u)
            .iter()
            .copied()
            .filter(move |&w| du > 0 && self.dist(w, target) + 1 == du)
    }

    #[inline]
    pub fn on_geodesic(&self, u: usize, w: usize, v: usize) -> bool {
        self.dist(u, w) + self.dist(w, v) == self.dist(u, v)
    }

    pub fn interval(&self, u: usize, v: usize) -> VertexSet {
        let n = self.order();
        VertexSet::from_vertices(n, (0..n).filter(|&w| self.on_geodesic(u, w, v)))
    }

    pub(crate) fn interval_bits<const W: usize>(&self, u: usize, v: usize) -> Bits<W> {
        let mut b = Bits::EMPTY;
        for w in 0..self.order() {
            if self.on_geodesic(u, w, v) {
                b.insert(w);
            }
        }
        b
    }

    /// Exact number of shortest `u,v`-paths by dynamic programming over the DAG.
    pub fn count_geodesics(&self, u: usize, v: usize) -> GeodesicCount {
        let n = self.order();
        let mut layer: Vec<usize> = (0..n).filter(|&w| self.on_geodesic(u, w, v)).collect();
        layer.sort_by_key(|&w| self.dist(w, v));
        let mut count = vec![GeodesicCount(0); n];
        for &w in &layer {
            count[w] = if w == v {
                GeodesicCount(1)
            } else {
                self.downhill(w, v)
                    .fold(GeodesicCount(0), |acc, x| acc.add(count[x]))
            };
        }
        count[u]
    }

    /// All shortest `u,v`-paths (through `through`, when given) in
    /// lexicographic order of their vertex sequences. Exceeding the geodesic
    /// cap is reported as inconclusive, never truncated.
    pub fn enumerate_geodesics(
        &self,
        u: usize,
        v: usize,
        through: Option<usize>,
        limits: &SearchLimits,
    ) -> Outcome<Vec<Path>> {
        match through {
            None => self.enumerate_plain(u, v, limits),
            Some(w) => {
                if !self.on_geodesic(u, w, v) {
                    return Outcome::Proved(Vec::new());
                }
                let total = saturating_mul(self.count_geodesics(u, w), self.count_geodesics(w, v));
                if total > limits.geodesic_cap as u128 {
                    return cap_hit(limits, total);
                }
                let heads = self
                    .enumerate_plain(u, w, limits)
                    .expect_proved("bounded by total");
                let tails = self
                    .enumerate_plain(w, v, limits)
                    .expect_proved("bounded by total");
                let mut out = Vec::with_capacity(heads.len() * tails.len());
                for h in &heads {
                    for t in &tails {
                        let mut seq = h.0.clone();
                        seq.extend_from_slice(&t.0[1..]);
                        out.push(Path(seq));
                    }
                }
                Outcome::Proved(out)
            }
        }
    }

    fn enumerate_plain(&self, u: usize, v: usize, limits: &SearchLimits) -> Outcome<Vec<Path>> {
        let total = self.count_geodesics(u, v).0;
        if total > limits.geodesic_cap as u128 {
            return cap_hit(limits, total);
        }
        let mut out = Vec::with_capacity(total as usize);
        let mut stack = vec![u];
        self.walk(v, &mut stack, &mut |p| out.push(Path(p.to_vec())));
        Outcome::Proved(out)
    }

    fn walk(&self, target: usize, stack: &mut Vec<usize>, emit: &mut impl FnMut(&[usize])) {
        let cur = *stack.last().unwrap();
        if cur == target {
            emit(stack);
            return;
        }
        for w in self.downhill(cur, target) {
            stack.push(w);
            self.walk(target, stack, emit);
            stack.pop();
        }
    }

    /// Vertex masks of every `u,v`-geodesic in canonical order, or the
    /// geodesic-cap limit.
    pub(crate) fn geodesic_masks<const W: usize>(
        &self,
        u: usize,
        v: usize,
        cap: u64,
    ) -> std::result::Result<Vec<Bits<W>>, Limit> {
        let total = self.count_geodesics(u, v).0;
        if total > cap as u128 {
            return Err(Limit::GeodesicCap);
        }
        let mut out = Vec::with_capacity(total as usize);
        let mut stack = vec![u];
        self.walk(v, &mut stack, &mut |p| {
            let mut b = Bits::EMPTY;
            for &x in p {
                b.insert(x);
            }
            out.push(b);
        });
        Ok(out)
    }

    /// Recovers the vertex sequence of a geodesic from its vertex set.
    pub(crate) fn path_from_mask<const W: usize>(&self, u: usize, mask: Bits<W>) -> Path {
        let mut seq: Vec<usize> = mask.iter().collect();
        seq.sort_by_key(|&x| self.dist(u, x));
        Path(seq)
    }

    /// First geodesic in canonical order.
    pub fn first_geodesic(&self, u: usize, v: usize) -> Path {
        let mut seq = vec![u];
        let mut cur = u;
        while cur != v {
            cur = self.downhill(cur, v).next().expect("connected");
            seq.push(cur);
        }
        Path(seq)
    }

    pub fn is_geodesic(&self, p: &Path) -> bool {
        match (p.first(), p.last()) {
            (Some(a), Some(b)) => p.is_path_in(&self.graph) && p.len() == self.dist(a, b),
            _ => false,
        }
    }

    /// Every shortest path between two members stays inside the set.
    pub fn is_convex(&self, set: &VertexSet) -> bool {
        let members = set.to_vec();
        let n = self.order();
        members.iter().enumerate().all(|(i, &a)| {
            members[i + 1..]
                .iter()
                .all(|&b| (0..n).all(|w| set.contains(w) || !self.on_geodesic(a, w, b)))
        })
    }
}

fn saturating_mul(a: GeodesicCount, b: GeodesicCount) -> u128 {
    a.0.saturating_mul(b.0)
}

fn cap_hit<T>(limits: &SearchLimits, total: u128) -> Outcome<T> {
    Outcome::Inconclusive(Bracket {
        lower: (limits.geodesic_cap as usize).saturating_add(1),
        upper: usize::try_from(total).unwrap_or(usize::MAX),
        limit: Limit::GeodesicCap,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cycle(n: usize) -> Graph {
        Graph::new(n, (0..n).map(|i| (i, (i + 1) % n))).unwrap()
    }

    fn path(n: usize) -> Graph {
        Graph::new(n, (1..n).map(|i| (i - 1, i))).unwrap()
    }

    #[test]
    fn distances() {
        let o = DistanceOracle::new(&path(3)).unwrap();
        assert_eq!(o.dist(0, 2), 2);
        let c6 = DistanceOracle::new(&cycle(6)).unwrap();
        assert_eq!(c6.dist(0, 3), 3);
        assert_eq!(c6.diameter(), 3);
    }

    #[test]
    fn disconnected_rejected() {
        let g = Graph::new(4, [(0, 1), (2, 3)]).unwrap();
        assert!(DistanceOracle::new(&g).is_err());
    }

    #[test]
    fn intervals() {
        let c6 = DistanceOracle::new(&cycle(6)).unwrap();
        assert_eq!(c6.interval(0, 3).len(), 6);
        assert_eq!(c6.interval(0, 2).to_vec(), vec![0, 1, 2]);
        let p4 = DistanceOracle::new(&path(4)).unwrap();
        assert_eq!(p4.interval(0, 3).len(), 4);
    }

    #[test]
    fn counts_and_enumeration() {
        let c6 = DistanceOracle::new(&cycle(6)).unwrap();
        let lim = SearchLimits::default();
        assert_eq!(c6.count_geodesics(0, 3).get(), Some(2));
        assert_eq!(c6.count_geodesics(0, 0).get(), Some(1));
        let paths = c6.enumerate_geodesics(0, 3, None, &lim).proved().unwrap();
        assert_eq!(paths, vec![Path(vec![0, 1, 2, 3]), Path(vec![0, 5, 4, 3])]);
        assert_eq!(
            c6.enumerate_geodesics(0, 1, None, &lim)
                .proved()
                .unwrap()
                .len(),
            1
        );
        let via = c6
            .enumerate_geodesics(0, 3, Some(4), &lim)
            .proved()
            .unwrap();
        assert_eq!(via, vec![Path(vec![0, 5, 4, 3])]);
        assert!(c6
            .enumerate_geodesics(0, 2, Some(4), &lim)
            .proved()
            .unwrap()
            .is_empty());
        let capped = c6.enumerate_geodesics(0, 3, None, &lim.with_geodesic_cap(1));
        assert_eq!(capped.bracket().unwrap().limit, Limit::GeodesicCap);
    }

    #[test]
    fn downhill_matches_definition() {
        let c6 = DistanceOracle::new(&cycle(6)).unwrap();
        assert_eq!(c6.downhill(0, 3).collect::<Vec<_>>(), vec![1, 5]);
        assert_eq!(c6.downhill(3, 3).count(), 0);
    }

    #[test]
    fn convexity() {
        let c4 = DistanceOracle::new(&cycle(4)).unwrap();
        assert!(c4.is_convex(&VertexSet::from_vertices(4, [2])));
        assert!(c4.is_convex(&VertexSet::from_vertices(4, [0, 1])));
        assert!(!c4.is_convex(&VertexSet::from_vertices(4, [0, 2])));
    }

    #[test]
    fn mask_round_trip() {
        let c6 = DistanceOracle::new(&cycle(6)).unwrap();
        let masks = c6.geodesic_masks::<1>(0, 3, 10).unwrap();
        assert_eq!(masks.len(), 2);
        assert_eq!(c6.path_from_mask(0, masks[1]), Path(vec![0, 5, 4, 3]));
        assert_eq!(c6.geodesic_masks::<1>(0, 3, 1), Err(Limit::GeodesicCap));
        assert_eq!(c6.first_geodesic(0, 3), Path(vec![0, 1, 2, 3]));
    }
}
