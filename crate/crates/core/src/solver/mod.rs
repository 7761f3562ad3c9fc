//! Exact solvers for geodetic and strong geodetic problems.
//!
//! Every solver validates connectivity, builds a [`DistanceOracle`] and a
//! search kernel sized to the graph, and answers with an [`Outcome`]: a
//! proved value with a checkable certificate, or the bracket reached before a
//! [`SearchLimits`] cap stopped it.
//!
//! Set searches run sizes in ascending order and, within a size,
//! lexicographically over candidate sets. Simplicial vertices lie in every
//! geodetic and every strong geodetic set (no geodesic passes through them),
//! so they are forced into every candidate. "Smallest" answers are always the
//! lexicographically least among the optimal ones.

mod certificate;
mod convex;
mod explicit;
mod kernel;
mod subsets;

pub use certificate::{
    CertificateError, CertificateJson, CoreCertificate, PairPath, SgCertificate,
};
pub use convex::{has_convex_2_partition, is_convex_2_partition, CONVEX_PARTITION_MAX_ORDER};
pub use explicit::counterexample_product_certificate;

use crate::distance::DistanceOracle;
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::limits::{Bracket, Limit, Outcome, SearchLimits};
use crate::vertex_set::VertexSet;
use certificate::all_pairs;
use kernel::Kernel;
use subsets::{scan, Mode};

/// Largest order the set solvers accept.
pub const SOLVER_MAX_ORDER: usize = 256;

macro_rules! with_kernel {
    ($oracle:expr, $limits:expr, |$k:ident| $body:expr) => {{
        let oracle: &DistanceOracle = $oracle;
        match oracle.order() {
            0..=64 => {
                let $k = Kernel::<1>::new(oracle, $limits);
                $body
            }
            65..=128 => {
                let $k = Kernel::<2>::new(oracle, $limits);
                $body
            }
            129..=256 => {
                let $k = Kernel::<4>::new(oracle, $limits);
                $body
            }
            n => Err(Error::TooLarge {
                n,
                limit: SOLVER_MAX_ORDER,
            }),
        }
    }};
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GeodeticSolution {
    pub value: usize,
    pub set: VertexSet,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SgSolution {
    pub value: usize,
    pub certificate: SgCertificate,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CoreSolution {
    pub value: usize,
    pub certificate: CoreCertificate,
}

/// All minimum strong geodetic sets. `complete` is false when a limit
/// stopped the enumeration after `sg` itself was proved; `sets` then holds
/// the lexicographic prefix found so far.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MinSgSets {
    pub value: usize,
    pub sets: Vec<VertexSet>,
    pub complete: bool,
    pub limit: Option<Limit>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum LowerBoundCheck {
    /// No strong geodetic set smaller than the requested size exists.
    Holds,
    /// A smaller strong geodetic set, with its certificate.
    Violated(SgCertificate),
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct SgOptions {
    /// Also start the size search at `g(G)`. Off by default: computing
    /// `g(G)` is itself an exponential search.
    pub use_geodetic_bound: bool,
}

fn oracle_for(g: &Graph) -> Result<DistanceOracle> {
    g.require_connected()?;
    DistanceOracle::new(g)
}

fn check_set(g: &Graph, s: &VertexSet) -> Result<Vec<usize>> {
    if s.universe() != g.order() {
        return Err(Error::invalid(format!(
            "set over {} vertices used with a graph of order {}",
            s.universe(),
            g.order()
        )));
    }
    if s.is_empty() {
        return Err(Error::invalid("empty vertex set"));
    }
    Ok(s.to_vec())
}

fn inconclusive<T>(lower: usize, upper: usize, limit: Limit) -> Outcome<T> {
    Outcome::Inconclusive(Bracket {
        lower,
        upper,
        limit,
    })
}

/// Union of the intervals over all pairs of `s` covers `V(G)`.
pub fn is_geodetic_set(g: &Graph, s: &VertexSet) -> Result<bool> {
    let members = check_set(g, s)?;
    let oracle = oracle_for(g)?;
    if g.order() == 1 {
        return Ok(true);
    }
    let mut covered = s.clone();
    for (i, &a) in members.iter().enumerate() {
        for &b in &members[i + 1..] {
            covered.union_with(&oracle.interval(a, b));
        }
    }
    Ok(covered.len() == g.order())
}

pub fn geodetic_number(g: &Graph, limits: &SearchLimits) -> Result<Outcome<GeodeticSolution>> {
    let oracle = oracle_for(g)?;
    with_kernel!(&oracle, limits, |k| Ok(geodetic_min(&k, g)))
}

fn geodetic_min<const W: usize>(k: &Kernel<'_, W>, g: &Graph) -> Outcome<GeodeticSolution> {
    let n = g.order();
    if n == 1 {
        return Outcome::Proved(GeodeticSolution {
            value: 1,
            set: VertexSet::full(1),
        });
    }
    let (forced, pool) = split_forced(g);
    let lower = forced.len().max(2);
    for size in lower..=n {
        let (found, limit) = scan(
            &pool,
            &forced,
            size - forced.len(),
            Mode::First,
            &k.budget,
            |set| Ok((k.geodetic_closure(set) == k.all).then_some(())),
        );
        if let Some((set, ())) = found.into_iter().next() {
            return Outcome::Proved(GeodeticSolution {
                value: size,
                set: VertexSet::from_vertices(n, set),
            });
        }
        if let Some(l) = limit {
            return inconclusive(size, n, l);
        }
    }
    unreachable!("V(G) is a geodetic set")
}

fn split_forced(g: &Graph) -> (Vec<usize>, Vec<usize>) {
    let simplicial = g.simplicial_vertices();
    let forced = simplicial.to_vec();
    let pool = (0..g.order())
        .filter(|&v| !simplicial.contains(v))
        .collect();
    (forced, pool)
}

fn sg_cover<const W: usize>(
    k: &Kernel<'_, W>,
    set: &[usize],
) -> std::result::Result<Option<SgCertificate>, Limit> {
    let n = k.n;
    if n == 1 {
        return Ok(Some(SgCertificate {
            set: VertexSet::full(1),
            paths: Vec::new(),
        }));
    }
    if set.len() < 2 {
        return Ok(None);
    }
    let pairs = all_pairs(set, set);
    Ok(k.find_cover(&pairs, k.mask_of(set))?
        .map(|paths| SgCertificate {
            set: VertexSet::from_vertices(n, set.iter().copied()),
            paths: pair_paths(&pairs, paths),
        }))
}

fn core_cover<const W: usize>(
    k: &Kernel<'_, W>,
    set: &[usize],
    core: &[usize],
) -> std::result::Result<Option<CoreCertificate>, Limit> {
    let n = k.n;
    let cert = |paths| CoreCertificate {
        set: VertexSet::from_vertices(n, set.iter().copied()),
        core: VertexSet::from_vertices(n, core.iter().copied()),
        paths,
    };
    if n == 1 {
        return Ok((!core.is_empty()).then(|| cert(Vec::new())));
    }
    if core.is_empty() || set.len() < 2 {
        return Ok(None);
    }
    let pairs = all_pairs(core, set);
    Ok(k.find_cover(&pairs, k.mask_of(set))?
        .map(|paths| cert(pair_paths(&pairs, paths))))
}

fn pair_paths(pairs: &[(usize, usize)], paths: Vec<crate::graph::Path>) -> Vec<PairPath> {
    pairs
        .iter()
        .zip(paths)
        .map(|(&pair, path)| PairPath { pair, path })
        .collect()
}

/// Decides whether some choice of one geodesic per pair of `s` covers `V(G)`.
/// `Proved(Some(certificate))` when it does, `Proved(None)` when provably not.
pub fn is_strong_geodetic_set(
    g: &Graph,
    s: &VertexSet,
    limits: &SearchLimits,
) -> Result<Outcome<Option<SgCertificate>>> {
    let members = check_set(g, s)?;
    let oracle = oracle_for(g)?;
    with_kernel!(&oracle, limits, |k| Ok(match sg_cover(&k, &members) {
        Ok(c) => Outcome::Proved(c),
        Err(l) => inconclusive(0, 1, l),
    }))
}

pub fn strong_geodetic_number(g: &Graph, limits: &SearchLimits) -> Result<Outcome<SgSolution>> {
    strong_geodetic_number_with(g, limits, SgOptions::default())
}

pub fn strong_geodetic_number_with(
    g: &Graph,
    limits: &SearchLimits,
    options: SgOptions,
) -> Result<Outcome<SgSolution>> {
    let oracle = oracle_for(g)?;
    with_kernel!(&oracle, limits, |k| Ok(sg_min(&k, g, options)))
}

fn sg_lower_start<const W: usize>(k: &Kernel<'_, W>, g: &Graph, options: SgOptions) -> usize {
    let (forced, _) = split_forced(g);
    let mut lower = forced.len().max(2);
    if options.use_geodetic_bound {
        if let Outcome::Proved(gs) = geodetic_min(k, g) {
            lower = lower.max(gs.value);
        }
    }
    lower
}

fn sg_min<const W: usize>(k: &Kernel<'_, W>, g: &Graph, options: SgOptions) -> Outcome<SgSolution> {
    let n = g.order();
    if n == 1 {
        let certificate = sg_cover(k, &[0]).unwrap().unwrap();
        return Outcome::Proved(SgSolution {
            value: 1,
            certificate,
        });
    }
    let (forced, pool) = split_forced(g);
    for size in sg_lower_start(k, g, options)..=n {
        let (found, limit) = scan(
            &pool,
            &forced,
            size - forced.len(),
            Mode::First,
            &k.budget,
            |set| sg_cover(k, set),
        );
        if let Some((_, certificate)) = found.into_iter().next() {
            return Outcome::Proved(SgSolution {
                value: size,
                certificate,
            });
        }
        if let Some(l) = limit {
            return inconclusive(size, n, l);
        }
    }
    unreachable!("V(G) is a strong geodetic set")
}

/// Checks that no strong geodetic set has fewer than `at_least` vertices.
pub fn sg_lower_bound(
    g: &Graph,
    at_least: usize,
    limits: &SearchLimits,
) -> Result<Outcome<LowerBoundCheck>> {
    let oracle = oracle_for(g)?;
    with_kernel!(&oracle, limits, |k| {
        let n = g.order();
        if n == 1 {
            return Ok(Outcome::Proved(if at_least <= 1 {
                LowerBoundCheck::Holds
            } else {
                LowerBoundCheck::Violated(sg_cover(&k, &[0]).unwrap().unwrap())
            }));
        }
        let (forced, pool) = split_forced(g);
        let start = sg_lower_start(&k, g, SgOptions::default());
        for size in start..at_least.min(n + 1) {
            let (found, limit) = scan(
                &pool,
                &forced,
                size - forced.len(),
                Mode::First,
                &k.budget,
                |set| sg_cover(&k, set),
            );
            if let Some((_, cert)) = found.into_iter().next() {
                return Ok(Outcome::Proved(LowerBoundCheck::Violated(cert)));
            }
            if let Some(l) = limit {
                return Ok(inconclusive(size, n, l));
            }
        }
        Ok(Outcome::Proved(LowerBoundCheck::Holds))
    })
}

pub fn enumerate_min_sg_sets(g: &Graph, limits: &SearchLimits) -> Result<Outcome<MinSgSets>> {
    let oracle = oracle_for(g)?;
    with_kernel!(&oracle, limits, |k| Ok(min_sets(&k, g).map(
        |(value, found, limit)| MinSgSets {
            value,
            sets: found
                .into_iter()
                .map(|(s, _)| VertexSet::from_vertices(g.order(), s))
                .collect(),
            complete: limit.is_none(),
            limit,
        }
    )))
}

type SetsWithCerts = Vec<(Vec<usize>, SgCertificate)>;

fn min_sets<const W: usize>(
    k: &Kernel<'_, W>,
    g: &Graph,
) -> Outcome<(usize, SetsWithCerts, Option<Limit>)> {
    let value = match sg_min(k, g, SgOptions::default()) {
        Outcome::Proved(s) => s.value,
        Outcome::Inconclusive(b) => return Outcome::Inconclusive(b),
    };
    if g.order() == 1 {
        return Outcome::Proved((
            1,
            vec![(vec![0], sg_cover(k, &[0]).unwrap().unwrap())],
            None,
        ));
    }
    let (forced, pool) = split_forced(g);
    let (found, limit) = scan(
        &pool,
        &forced,
        value - forced.len(),
        Mode::All,
        &k.budget,
        |set| sg_cover(k, set),
    );
    Outcome::Proved((value, found, limit))
}

/// Smallest core `X ⊆ S` of size at most `max_size`: only geodesics of pairs
/// meeting `X` are used for coverage.
fn core_min<const W: usize>(
    k: &Kernel<'_, W>,
    set: &[usize],
    max_size: usize,
) -> std::result::Result<Option<CoreCertificate>, (usize, Limit)> {
    for size in 1..=max_size.min(set.len()) {
        let (found, limit) = scan(set, &[], size, Mode::First, &k.budget, |core| {
            core_cover(k, set, core)
        });
        if let Some((_, cert)) = found.into_iter().next() {
            return Ok(Some(cert));
        }
        if let Some(l) = limit {
            return Err((size, l));
        }
    }
    Ok(None)
}

/// `sgc(S)`: the smallest strong geodetic core of the strong geodetic set `s`.
pub fn sgc_of_set(
    g: &Graph,
    s: &VertexSet,
    limits: &SearchLimits,
) -> Result<Outcome<CoreSolution>> {
    let members = check_set(g, s)?;
    let oracle = oracle_for(g)?;
    with_kernel!(&oracle, limits, |k| {
        match sg_cover(&k, &members) {
            Ok(Some(_)) => {}
            Ok(None) => return Err(Error::NotStrongGeodetic),
            Err(l) => return Ok(inconclusive(1, members.len(), l)),
        }
        Ok(match core_min(&k, &members, members.len()) {
            Ok(Some(certificate)) => Outcome::Proved(CoreSolution {
                value: certificate.core.len(),
                certificate,
            }),
            Ok(None) => unreachable!("S is a core of itself"),
            Err((size, l)) => inconclusive(size, members.len(), l),
        })
    })
}

/// `sgc(G)`: minimum of `sgc(S)` over all minimum strong geodetic sets `S`.
/// Ties go to the lexicographically least `S`, then the least core.
pub fn strong_geodetic_core_number(
    g: &Graph,
    limits: &SearchLimits,
) -> Result<Outcome<CoreSolution>> {
    let oracle = oracle_for(g)?;
    with_kernel!(&oracle, limits, |k| {
        let (sg, sets, limit) = match min_sets(&k, g) {
            Outcome::Proved(x) => x,
            Outcome::Inconclusive(b) => {
                return Ok(Outcome::Inconclusive(Bracket { lower: 1, ..b }))
            }
        };
        let mut best: Option<CoreCertificate> = None;
        for (set, _) in &sets {
            let cap = best.as_ref().map_or(set.len(), |b| b.core.len() - 1);
            if cap == 0 {
                break;
            }
            match core_min(&k, set, cap) {
                Ok(Some(c)) => best = Some(c),
                Ok(None) => {}
                Err((_, l)) => {
                    let upper = best.as_ref().map_or(sg, |b| b.core.len());
                    return Ok(inconclusive(1, upper, l));
                }
            }
        }
        let best = best.expect("a minimum strong geodetic set is a core of itself");
        if let Some(l) = limit {
            return Ok(inconclusive(1, best.core.len(), l));
        }
        Ok(Outcome::Proved(CoreSolution {
            value: best.core.len(),
            certificate: best,
        }))
    })
}

/// Unique shortest path between every pair of vertices.
pub fn is_geodetic_graph(g: &Graph) -> Result<bool> {
    let oracle = oracle_for(g)?;
    let n = g.order();
    Ok((0..n).all(|u| (u + 1..n).all(|v| oracle.count_geodesics(u, v).get() == Some(1))))
}

/// `g(G) = sg(G)`. Geodetic graphs qualify without a search.
pub fn is_generalized_geodetic(g: &Graph, limits: &SearchLimits) -> Result<Outcome<bool>> {
    if is_geodetic_graph(g)? {
        return Ok(Outcome::Proved(true));
    }
    let oracle = oracle_for(g)?;
    with_kernel!(&oracle, limits, |k| {
        let gv = match geodetic_min(&k, g) {
            Outcome::Proved(s) => s.value,
            Outcome::Inconclusive(b) => return Ok(inconclusive(0, 1, b.limit)),
        };
        Ok(match sg_min(&k, g, SgOptions::default()) {
            Outcome::Proved(s) => Outcome::Proved(s.value == gv),
            Outcome::Inconclusive(b) => {
                // sg >= b.lower > g settles it even without the exact value.
                if b.lower > gv {
                    Outcome::Proved(false)
                } else {
                    inconclusive(0, 1, b.limit)
                }
            }
        })
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families::*;

    fn lim() -> SearchLimits {
        SearchLimits::default()
    }

    fn set(n: usize, vs: &[usize]) -> VertexSet {
        VertexSet::from_vertices(n, vs.iter().copied())
    }

    fn sg(g: &Graph) -> SgSolution {
        strong_geodetic_number(g, &lim())
            .unwrap()
            .expect_proved("sg")
    }

    fn gnum(g: &Graph) -> usize {
        geodetic_number(g, &lim()).unwrap().expect_proved("g").value
    }

    fn sgc(g: &Graph) -> CoreSolution {
        strong_geodetic_core_number(g, &lim())
            .unwrap()
            .expect_proved("sgc")
    }

    #[test]
    fn geodetic_sets() {
        let c6 = cycle(6).unwrap();
        assert!(is_geodetic_set(&c6, &set(6, &[0, 3])).unwrap());
        let k13 = star(3).unwrap();
        assert!(is_geodetic_set(&k13, &set(4, &[1, 2, 3])).unwrap());
        assert!(!is_geodetic_set(&k13, &set(4, &[0, 1])).unwrap());
        assert!(is_geodetic_set(&complete(1).unwrap(), &set(1, &[0])).unwrap());
    }

    #[test]
    fn geodetic_numbers() {
        assert_eq!(gnum(&cycle(6).unwrap()), 2);
        assert_eq!(gnum(&complete(5).unwrap()), 5);
        assert_eq!(gnum(&split_graph(3, 3).unwrap()), 3);
        let sol = geodetic_number(&cycle(6).unwrap(), &lim())
            .unwrap()
            .proved()
            .unwrap();
        assert_eq!(sol.set.to_vec(), vec![0, 3]);
    }

    #[test]
    fn strong_geodetic_sets() {
        let k46 = complete_multipartite(&[4, 6]).unwrap();
        let side = set(10, &[0, 1, 2, 3]);
        let cert = is_strong_geodetic_set(&k46, &side, &lim())
            .unwrap()
            .proved()
            .unwrap()
            .unwrap();
        assert_eq!(cert.verify(&k46), Ok(()));
        let c6 = cycle(6).unwrap();
        assert_eq!(
            is_strong_geodetic_set(&c6, &set(6, &[0, 3]), &lim()).unwrap(),
            Outcome::Proved(None)
        );
        let p5 = path(5).unwrap();
        assert!(is_strong_geodetic_set(&p5, &set(5, &[0, 4]), &lim())
            .unwrap()
            .proved()
            .unwrap()
            .is_some());
    }

    #[test]
    fn strong_geodetic_numbers() {
        let hat = hat_subdivision(&complete(4).unwrap()).unwrap();
        let s = sg(&hat);
        assert_eq!(s.value, 4);
        assert_eq!(s.certificate.set.to_vec(), vec![0, 1, 2, 3]);
        assert_eq!(s.certificate.verify(&hat), Ok(()));
        assert_eq!(sg(&complete_multipartite(&[7, 11]).unwrap()).value, 7);
        assert_eq!(sg(&cocktail_party(6).unwrap()).value, 4);
        let c6 = sg(&cycle(6).unwrap());
        assert_eq!(c6.value, 3);
        assert_eq!(c6.certificate.set.to_vec(), vec![0, 1, 3]);
        assert_eq!(sg(&complete(1).unwrap()).value, 1);
        assert_eq!(sg(&path(2).unwrap()).value, 2);
    }

    #[test]
    fn min_set_enumeration() {
        let hat = hat_subdivision(&complete(4).unwrap()).unwrap();
        let all = enumerate_min_sg_sets(&hat, &lim())
            .unwrap()
            .proved()
            .unwrap();
        assert!(all.complete);
        assert_eq!(all.sets, vec![set(10, &[0, 1, 2, 3])]);
        let p3 = enumerate_min_sg_sets(&path(3).unwrap(), &lim())
            .unwrap()
            .proved()
            .unwrap();
        assert_eq!(p3.sets, vec![set(3, &[0, 2])]);
    }

    #[test]
    fn cores() {
        let k711 = complete_multipartite(&[7, 11]).unwrap();
        let s = set(18, &(0..7).collect::<Vec<_>>());
        let cs = sgc_of_set(&k711, &s, &lim()).unwrap().proved().unwrap();
        assert_eq!(cs.value, 2);
        assert_eq!(cs.certificate.core.to_vec(), vec![0, 1]);
        assert_eq!(cs.certificate.verify(&k711), Ok(()));
        let t = set(18, &[0, 1, 2, 3, 4, 7, 8, 9]);
        let ct = sgc_of_set(&k711, &t, &lim()).unwrap().proved().unwrap();
        assert_eq!(ct.value, 4);
        assert_eq!(ct.certificate.verify(&k711), Ok(()));
        assert_eq!(
            sgc_of_set(&k711, &set(18, &[0, 1]), &lim()),
            Err(Error::NotStrongGeodetic)
        );
    }

    #[test]
    fn core_numbers() {
        assert_eq!(sgc(&cocktail_party(6).unwrap()).value, 2);
        let hat = hat_subdivision(&complete(4).unwrap()).unwrap();
        let c = sgc(&hat);
        assert_eq!(c.value, 3);
        assert_eq!(c.certificate.verify(&hat), Ok(()));
        assert_eq!(sgc(&complete(4).unwrap()).value, 1);
        assert_eq!(sgc(&complete(1).unwrap()).value, 1);
        let t = tree_from_edges(6, &[(0, 1), (1, 2), (1, 3), (3, 4), (3, 5)]).unwrap();
        assert_eq!(sgc(&t).value, 1);
    }

    #[test]
    fn geodetic_graph_predicates() {
        assert!(is_geodetic_graph(&star(4).unwrap()).unwrap());
        assert!(is_geodetic_graph(&cycle(5).unwrap()).unwrap());
        assert!(!is_geodetic_graph(&cycle(6).unwrap()).unwrap());
        assert_eq!(
            is_generalized_geodetic(&split_graph(3, 3).unwrap(), &lim()).unwrap(),
            Outcome::Proved(true)
        );
        assert_eq!(
            is_generalized_geodetic(&cycle(6).unwrap(), &lim()).unwrap(),
            Outcome::Proved(false)
        );
        assert_eq!(
            is_generalized_geodetic(&path(5).unwrap(), &lim()).unwrap(),
            Outcome::Proved(true)
        );
    }

    #[test]
    fn lower_bound_checks() {
        let hat = hat_subdivision(&complete(4).unwrap()).unwrap();
        assert_eq!(
            sg_lower_bound(&hat, 4, &lim()).unwrap(),
            Outcome::Proved(LowerBoundCheck::Holds)
        );
        match sg_lower_bound(&hat, 5, &lim()).unwrap() {
            Outcome::Proved(LowerBoundCheck::Violated(c)) => assert_eq!(c.set.len(), 4),
            other => panic!("{other:?}"),
        }
    }

    #[test]
    fn limits_produce_inconclusive() {
        let g = complete_multipartite(&[7, 11]).unwrap();
        let out = strong_geodetic_number(&g, &lim().with_node_budget(50)).unwrap();
        let b = out.bracket().unwrap();
        assert_eq!(b.limit, Limit::NodeBudget);
        assert!(b.lower <= b.upper);
        let c6 = cycle(6).unwrap();
        let capped =
            is_strong_geodetic_set(&c6, &set(6, &[0, 1, 3, 4]), &lim().with_geodesic_cap(1))
                .unwrap();
        assert_eq!(capped.bracket().unwrap().limit, Limit::GeodesicCap);
    }

    #[test]
    fn disconnected_and_oversized_inputs() {
        let g = Graph::new(4, [(0, 1), (2, 3)]).unwrap();
        assert_eq!(strong_geodetic_number(&g, &lim()), Err(Error::Disconnected));
        let big = path(300).unwrap();
        assert!(matches!(
            strong_geodetic_number(&big, &lim()),
            Err(Error::TooLarge { .. })
        ));
        let p130 = path(130).unwrap();
        assert_eq!(sg(&p130).value, 2);
    }
}
