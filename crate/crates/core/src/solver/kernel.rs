//! Search kernels shared by every solver.
//!
//! A [`Kernel`] is built once per solver call. It caches interval masks for
//! all pairs and, lazily, the vertex masks of every geodesic of a pair. The
//! cover search decides whether a list of vertex pairs admits one geodesic per
//! pair whose union covers the uncovered vertices.
//!
//! Branching: pick the uncovered vertex with the fewest (pair, geodesic)
//! options, then try each free pair with each non-dominated geodesic through
//! it. Any cover must cover that vertex with some pair's geodesic, so the
//! search is complete; pairs never branched on take their first canonical
//! geodesic at the end. Before branching, a b-matching relaxation (each free
//! pair can absorb at most as many uncovered vertices as its best geodesic)
//! must saturate the uncovered set.

use crate::distance::DistanceOracle;
use crate::graph::Path;
use crate::limits::{Budget, Limit, SearchLimits};
use crate::vertex_set::Bits;
use std::sync::OnceLock;

pub(crate) struct PairGeodesics<const W: usize> {
    pub masks: Vec<Bits<W>>,
}

pub(crate) struct Kernel<'a, const W: usize> {
    pub oracle: &'a DistanceOracle,
    pub n: usize,
    pub all: Bits<W>,
    intervals: Vec<Bits<W>>,
    geodesics: Vec<OnceLock<Result<PairGeodesics<W>, Limit>>>,
    cap: u64,
    pub budget: Budget,
}

/// One geodesic per pair, aligned with the pair list handed to
/// [`Kernel::find_cover`].
pub(crate) type Cover = Vec<Path>;

impl<'a, const W: usize> Kernel<'a, W> {
    pub fn new(oracle: &'a DistanceOracle, limits: &SearchLimits) -> Self {
        let n = oracle.order();
        assert!(n <= 64 * W);
        let mut intervals = vec![Bits::EMPTY; n * n];
        for u in 0..n {
            for v in u..n {
                let b = oracle.interval_bits::<W>(u, v);
                intervals[u * n + v] = b;
                intervals[v * n + u] = b;
            }
        }
        Kernel {
            oracle,
            n,
            all: Bits::prefix(n),
            intervals,
            geodesics: (0..n * n).map(|_| OnceLock::new()).collect(),
            cap: limits.geodesic_cap,
            budget: Budget::new(limits),
        }
    }

    #[inline]
    pub fn interval(&self, u: usize, v: usize) -> Bits<W> {
        self.intervals[u * self.n + v]
    }

    pub fn geodesics(&self, u: usize, v: usize) -> Result<&PairGeodesics<W>, Limit> {
        let (a, b) = (u.min(v), u.max(v));
        let slot = &self.geodesics[a * self.n + b];
        match slot.get_or_init(|| {
            self.oracle
                .geodesic_masks::<W>(a, b, self.cap)
                .map(|masks| PairGeodesics { masks })
        }) {
            Ok(g) => Ok(g),
            Err(l) => Err(self.budget.trip(*l)),
        }
    }

    pub fn mask_of(&self, vertices: &[usize]) -> Bits<W> {
        let mut b = Bits::EMPTY;
        for &v in vertices {
            b.insert(v);
        }
        b
    }

    /// Union of pairwise intervals over `set`.
    pub fn geodetic_closure(&self, set: &[usize]) -> Bits<W> {
        let mut acc = self.mask_of(set);
        for (i, &a) in set.iter().enumerate() {
            for &b in &set[i + 1..] {
                acc = acc.or(self.interval(a, b));
            }
        }
        acc
    }

    /// Looks for one geodesic per pair covering every vertex outside
    /// `covered`. `Ok(None)` proves that no such choice exists.
    pub fn find_cover(
        &self,
        pairs: &[(usize, usize)],
        covered: Bits<W>,
    ) -> Result<Option<Cover>, Limit> {
        let uncovered = self.all.and_not(covered);
        if !self.quick_feasible(pairs, uncovered) {
            return Ok(None);
        }
        let mut relevant = Vec::new();
        for (idx, &(u, v)) in pairs.iter().enumerate() {
            if self
                .interval(u, v)
                .and_not(self.mask_of(&[u, v]))
                .intersects(&uncovered)
            {
                relevant.push(RelPair {
                    index: idx,
                    u: u.min(v),
                    interior: self.oracle.dist(u, v).saturating_sub(1),
                    interval: self.interval(u, v),
                    masks: &self.geodesics(u, v)?.masks,
                });
            }
        }
        let mut search = CoverSearch {
            kernel: self,
            free: vec![true; relevant.len()],
            choice: vec![None; relevant.len()],
            pairs: relevant,
        };
        let mut rest = uncovered;
        for p in 0..search.pairs.len() {
            if search.pairs[p].masks.len() == 1 {
                search.free[p] = false;
                search.choice[p] = Some(0);
                rest = rest.and_not(search.pairs[p].masks[0]);
            }
        }
        if !search.dfs(rest)? {
            return Ok(None);
        }
        let mut paths: Vec<Option<Path>> = vec![None; pairs.len()];
        for (p, rel) in search.pairs.iter().enumerate() {
            if let Some(c) = search.choice[p] {
                paths[rel.index] = Some(self.oracle.path_from_mask(rel.u, rel.masks[c]));
            }
        }
        Ok(Some(
            paths
                .into_iter()
                .zip(pairs)
                .map(|(p, &(u, v))| {
                    p.unwrap_or_else(|| self.oracle.first_geodesic(u.min(v), u.max(v)))
                })
                .collect(),
        ))
    }

    /// Necessary conditions checkable from intervals alone: the intervals
    /// reach every uncovered vertex, and the interiors are long enough.
    fn quick_feasible(&self, pairs: &[(usize, usize)], uncovered: Bits<W>) -> bool {
        if uncovered.is_empty() {
            return true;
        }
        let mut reach = Bits::EMPTY;
        let mut room = 0usize;
        for &(u, v) in pairs {
            let hit = self.interval(u, v).and(uncovered);
            reach = reach.or(hit);
            room += hit.count().min(self.oracle.dist(u, v).saturating_sub(1));
        }
        uncovered.is_subset(&reach) && room >= uncovered.count()
    }
}

struct RelPair<'k, const W: usize> {
    index: usize,
    u: usize,
    interior: usize,
    interval: Bits<W>,
    masks: &'k [Bits<W>],
}

struct CoverSearch<'k, 'a, const W: usize> {
    kernel: &'k Kernel<'a, W>,
    pairs: Vec<RelPair<'k, W>>,
    free: Vec<bool>,
    choice: Vec<Option<usize>>,
}

impl<const W: usize> CoverSearch<'_, '_, W> {
    fn dfs(&mut self, uncovered: Bits<W>) -> Result<bool, Limit> {
        self.kernel.budget.tick()?;
        if uncovered.is_empty() {
            return Ok(true);
        }
        let free: Vec<usize> = (0..self.pairs.len())
            .filter(|&p| self.free[p] && self.pairs[p].interval.intersects(&uncovered))
            .collect();
        if !self.relaxation_ok(uncovered, &free) {
            return Ok(false);
        }

        // Branch vertex: fewest (pair, geodesic) options.
        let mut best: Option<(usize, usize)> = None;
        for w in uncovered.iter() {
            let mut count = 0usize;
            for &p in &free {
                if self.pairs[p].interval.contains(w) {
                    count += self.pairs[p].masks.iter().filter(|m| m.contains(w)).count();
                }
            }
            if best.is_none_or(|(_, c)| count < c) {
                best = Some((w, count));
                if count <= 1 {
                    break;
                }
            }
        }
        let (w, count) = best.expect("uncovered is non-empty");
        if count == 0 {
            return Ok(false);
        }

        let mut options: Vec<(usize, usize, Bits<W>)> = Vec::new();
        for &p in &free {
            let rel = &self.pairs[p];
            if !rel.interval.contains(w) {
                continue;
            }
            let through: Vec<(usize, Bits<W>)> = rel
                .masks
                .iter()
                .enumerate()
                .filter(|(_, m)| m.contains(w))
                .map(|(i, m)| (i, m.and(uncovered)))
                .collect();
            for (k, &(i, gain)) in through.iter().enumerate() {
                let dominated = through.iter().enumerate().any(|(k2, &(_, other))| {
                    k2 != k && gain.is_subset(&other) && (gain != other || k2 < k)
                });
                if !dominated {
                    options.push((p, i, gain));
                }
            }
        }
        options.sort_by(|a, b| {
            b.2.count()
                .cmp(&a.2.count())
                .then(a.0.cmp(&b.0))
                .then(a.1.cmp(&b.1))
        });

        for (p, i, gain) in options {
            self.free[p] = false;
            self.choice[p] = Some(i);
            if self.dfs(uncovered.and_not(gain))? {
                return Ok(true);
            }
            self.free[p] = true;
            self.choice[p] = None;
        }
        Ok(false)
    }

    /// Bipartite b-matching: pair `p` may absorb up to `cap(p)` uncovered
    /// vertices of its interval, where `cap(p)` is the largest number of
    /// uncovered vertices on a single geodesic of `p`. Every uncovered vertex
    /// must be absorbed.
    fn relaxation_ok(&self, uncovered: Bits<W>, free: &[usize]) -> bool {
        let need = uncovered.count();
        let mut room = 0usize;
        let mut reach = Bits::EMPTY;
        for &p in free {
            let hit = self.pairs[p].interval.and(uncovered);
            reach = reach.or(hit);
            room += hit.count().min(self.pairs[p].interior);
        }
        if room < need || !uncovered.is_subset(&reach) {
            return false;
        }
        let caps: Vec<usize> = free
            .iter()
            .map(|&p| {
                self.pairs[p]
                    .masks
                    .iter()
                    .map(|m| m.and(uncovered).count())
                    .max()
                    .unwrap_or(0)
            })
            .collect();
        if caps.iter().sum::<usize>() < need {
            return false;
        }
        let targets: Vec<usize> = uncovered.iter().collect();
        let options: Vec<Vec<usize>> = targets
            .iter()
            .map(|&w| {
                (0..free.len())
                    .filter(|&j| caps[j] > 0 && self.pairs[free[j]].interval.contains(w))
                    .collect()
            })
            .collect();
        let mut holder: Vec<Option<usize>> = vec![None; targets.len()];
        let mut load = vec![0usize; free.len()];
        let mut assigned: Vec<Vec<usize>> = vec![Vec::new(); free.len()];
        for t in 0..targets.len() {
            let mut seen = vec![false; free.len()];
            if !augment(
                t,
                &options,
                &caps,
                &mut load,
                &mut assigned,
                &mut holder,
                &mut seen,
            ) {
                return false;
            }
        }
        true
    }
}

fn augment(
    t: usize,
    options: &[Vec<usize>],
    caps: &[usize],
    load: &mut [usize],
    assigned: &mut [Vec<usize>],
    holder: &mut [Option<usize>],
    seen: &mut [bool],
) -> bool {
    for &j in &options[t] {
        if seen[j] {
            continue;
        }
        seen[j] = true;
        if load[j] < caps[j] {
            load[j] += 1;
            assigned[j].push(t);
            holder[t] = Some(j);
            return true;
        }
        for k in 0..assigned[j].len() {
            let other = assigned[j][k];
            if augment(other, options, caps, load, assigned, holder, seen) {
                assigned[j][k] = t;
                holder[t] = Some(j);
                return true;
            }
        }
    }
    false
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families;

    #[test]
    fn c6_antipodal_pair_cannot_cover() {
        let g = families::cycle(6).unwrap();
        let o = DistanceOracle::new(&g).unwrap();
        let k = Kernel::<1>::new(&o, &SearchLimits::default());
        let covered = k.mask_of(&[0, 3]);
        assert_eq!(k.find_cover(&[(0, 3)], covered), Ok(None));
        let set = [0, 2, 4];
        let pairs = [(0, 2), (0, 4), (2, 4)];
        let cover = k.find_cover(&pairs, k.mask_of(&set)).unwrap().unwrap();
        assert_eq!(cover.len(), 3);
        assert!(cover.iter().all(|p| o.is_geodesic(p)));
    }

    #[test]
    fn forced_branching_on_bipartite() {
        // K_{3,3}: pairs inside one side each cover one vertex of the other.
        let g = families::complete_multipartite(&[3, 3]).unwrap();
        let o = DistanceOracle::new(&g).unwrap();
        let k = Kernel::<1>::new(&o, &SearchLimits::default());
        let set = [0, 1, 2];
        let pairs = [(0, 1), (0, 2), (1, 2)];
        let cover = k.find_cover(&pairs, k.mask_of(&set)).unwrap().unwrap();
        let mut mids: Vec<usize> = cover.iter().map(|p| p.0[1]).collect();
        mids.sort();
        assert_eq!(mids, vec![3, 4, 5]);
    }

    #[test]
    fn geodesic_cap_is_reported() {
        let g = families::cycle(6).unwrap();
        let o = DistanceOracle::new(&g).unwrap();
        let k = Kernel::<1>::new(&o, &SearchLimits::default().with_geodesic_cap(1));
        let r = k.find_cover(&[(0, 3), (1, 4), (2, 5)], k.mask_of(&[0, 1, 2, 3, 4, 5]));
        assert_eq!(r.map(|c| c.is_some()), Ok(true));
        let r = k.find_cover(&[(0, 3), (1, 4)], k.mask_of(&[0, 1, 3, 4]));
        assert_eq!(r, Err(Limit::GeodesicCap));
    }
}
