//! Registry of reproducible claims with pinned expected values.

use crate::input::read_graph;
use geodekit::bounds::{
    self, eq1_sides, hat_lower, product_upper_old, product_upper_sgc, sgc_bounds,
};
use geodekit::census::connected_graphs;
use geodekit::families::{self, cartesian_product, Factor};
use geodekit::solver::{self, LowerBoundCheck};
use geodekit::{DistanceOracle, Graph, Outcome, SearchLimits, VertexSet};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;
use serde_json::Value;
use std::collections::BTreeMap;
use std::fmt;

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Class {
    Fast,
    Standard,
    Long,
}

impl fmt::Display for Class {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Class::Fast => "fast",
            Class::Standard => "standard",
            Class::Long => "long",
        })
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Relation {
    Equality,
    Inequality,
    Uniqueness,
    Counterexample,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Status {
    Pass,
    Fail,
    Inconclusive,
}

impl fmt::Display for Status {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Status::Pass => "pass",
            Status::Fail => "FAIL",
            Status::Inconclusive => "inconclusive",
        })
    }
}

pub struct Ctx {
    pub limits: SearchLimits,
    pub seed: u64,
}

pub struct Claim {
    pub id: &'static str,
    pub class: Class,
    pub statement: &'static str,
    pub graphs: &'static [&'static str],
    pub relation: Relation,
    /// Where the expected values come from: a closed form, or exhaustive
    /// computation.
    pub provenance: &'static str,
    run: fn(&Ctx, &mut Probe) -> Result<(), Stop>,
}

#[derive(Debug, Serialize)]
pub struct ClaimRecord {
    pub id: &'static str,
    pub class: Class,
    pub statement: &'static str,
    pub graphs: &'static [&'static str],
    pub relation: Relation,
    pub provenance: &'static str,
    pub status: Status,
    pub measured: BTreeMap<String, Value>,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub failures: Vec<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub stopped: Option<String>,
}

enum Stop {
    Inconclusive(String),
    Error(String),
}

impl From<geodekit::Error> for Stop {
    fn from(e: geodekit::Error) -> Self {
        Stop::Error(e.to_string())
    }
}

#[derive(Default)]
struct Probe {
    measured: BTreeMap<String, Value>,
    failures: Vec<String>,
}

impl Probe {
    fn record(&mut self, key: impl Into<String>, value: impl Serialize) {
        self.measured
            .insert(key.into(), serde_json::to_value(value).expect("plain data"));
    }

    fn expect<T: PartialEq + Serialize + fmt::Debug>(&mut self, key: &str, got: T, want: T) {
        if got != want {
            self.failures
                .push(format!("{key}: measured {got:?}, expected {want:?}"));
        }
        self.record(key, got);
    }

    fn require(&mut self, ok: bool, msg: impl FnOnce() -> String) {
        if !ok {
            self.failures.push(msg());
        }
    }
}

fn proved<T>(o: geodekit::Result<Outcome<T>>, what: &str) -> Result<T, Stop> {
    match o? {
        Outcome::Proved(t) => Ok(t),
        Outcome::Inconclusive(b) => Err(Stop::Inconclusive(format!(
            "{what}: bracket [{}, {}], limit {}",
            b.lower, b.upper, b.limit
        ))),
    }
}

fn graph(spec: &str) -> Result<Graph, Stop> {
    read_graph(spec).map_err(|e| Stop::Error(format!("{e:#}")))
}

fn sg(ctx: &Ctx, g: &Graph, what: &str) -> Result<usize, Stop> {
    let s = proved(solver::strong_geodetic_number(g, &ctx.limits), what)?;
    s.certificate
        .verify(g)
        .map_err(|e| Stop::Error(format!("{what}: certificate rejected: {e}")))?;
    Ok(s.value)
}

fn sgc(ctx: &Ctx, g: &Graph, what: &str) -> Result<usize, Stop> {
    let c = proved(solver::strong_geodetic_core_number(g, &ctx.limits), what)?;
    c.certificate
        .verify(g)
        .map_err(|e| Stop::Error(format!("{what}: certificate rejected: {e}")))?;
    Ok(c.value)
}

fn min_sets(ctx: &Ctx, g: &Graph, what: &str) -> Result<Vec<Vec<usize>>, Stop> {
    let all = proved(solver::enumerate_min_sg_sets(g, &ctx.limits), what)?;
    if let Some(l) = all.limit {
        return Err(Stop::Inconclusive(format!(
            "{what}: enumeration stopped by {l}"
        )));
    }
    Ok(all.sets.iter().map(VertexSet::to_vec).collect())
}

fn hat_k4(ctx: &Ctx, p: &mut Probe) -> Result<(), Stop> {
    let g = graph("hat(K4)")?;
    p.expect("sg", sg(ctx, &g, "sg")?, 4);
    p.expect(
        "sg_sets",
        min_sets(ctx, &g, "sg-sets")?,
        vec![vec![0, 1, 2, 3]],
    );
    p.expect("sgc", sgc(ctx, &g, "sgc")?, 3);
    Ok(())
}

fn seven_eleven(ctx: &Ctx, p: &mut Probe) -> Result<(), Stop> {
    let g = graph("K(7,11)")?;
    let s = VertexSet::from_vertices(18, 0..7);
    let t = VertexSet::from_vertices(18, (0..5).chain(7..10));
    p.expect("sg", sg(ctx, &g, "sg")?, 7);
    p.expect("sg_sets", min_sets(ctx, &g, "sg-sets")?, vec![s.to_vec()]);
    p.expect(
        "sgc_S",
        proved(solver::sgc_of_set(&g, &s, &ctx.limits), "sgc(S)")?.value,
        2,
    );
    p.expect(
        "sgc_T",
        proved(solver::sgc_of_set(&g, &t, &ctx.limits), "sgc(T)")?.value,
        4,
    );
    Ok(())
}

fn cocktail(ctx: &Ctx, p: &mut Probe) -> Result<(), Stop> {
    for n in 6..=9 {
        let g = graph(&format!("cocktail({n})"))?;
        p.expect(&format!("sg_cocktail_{n}"), sg(ctx, &g, "sg")?, n - n / 3);
        p.expect(&format!("sgc_cocktail_{n}"), sgc(ctx, &g, "sgc")?, n / 3);
    }
    Ok(())
}

fn bipartite(ctx: &Ctx, p: &mut Probe) -> Result<(), Stop> {
    for n in [3usize, 4] {
        let g = graph(&format!("K({},{})", n, n * (n - 1) / 2))?;
        p.expect(
            &format!("sg_K_{n}_{}", n * (n - 1) / 2),
            sg(ctx, &g, "sg")?,
            n,
        );
    }
    Ok(())
}

fn h324(ctx: &Ctx, p: &mut Probe) -> Result<(), Stop> {
    let g = graph("H(3,2,4)")?;
    let d = DistanceOracle::new(&g)?.diameter();
    let s = sg(ctx, &g, "sg")?;
    let c = sgc(ctx, &g, "sgc")?;
    p.expect("order", g.order(), 32);
    p.expect("diameter", d, 4);
    p.expect("sg", s, 5);
    p.expect("sgc", c, 3);
    let (lhs, rhs) = eq1_sides(c as u64, s as u64, d as u64, 32);
    p.record("counting_bound", (lhs, rhs));
    p.require(lhs == rhs, || {
        format!("counting bound not tight: {lhs} vs {rhs}")
    });
    Ok(())
}

fn small_graphs(ctx: &Ctx, p: &mut Probe) -> Result<(), Stop> {
    let mut count = 0;
    for n in 1..=6 {
        for g in connected_graphs(n)? {
            let report = bounds::check_bounds(&g, &ctx.limits)?;
            if report.sgc.value().is_none() || report.g.value().is_none() {
                return Err(Stop::Inconclusive(format!(
                    "{:?}: not solved within limits",
                    g.edges()
                )));
            }
            for v in report.violations() {
                p.failures
                    .push(format!("{:?}: {} ({})", g.edges(), v.name, v.detail));
            }
            count += 1;
        }
    }
    p.record("graphs", count);
    Ok(())
}

fn trees(ctx: &Ctx, p: &mut Probe) -> Result<(), Stop> {
    let mut rng = ChaCha8Rng::seed_from_u64(ctx.seed);
    for _ in 0..200 {
        let n = rng.gen_range(2..=12);
        let t = families::random_tree(n, &mut rng)?;
        let c = sgc(ctx, &t, "sgc")?;
        p.require(c == 1, || format!("tree {:?}: sgc = {c}", t.edges()));
    }
    p.record("trees", 200);
    p.record("seed", ctx.seed);
    Ok(())
}

const PRODUCTS: [(&str, &str, usize); 7] = [
    ("K3", "K3", 5),
    ("P3", "P3", 4),
    ("P4", "P3", 4),
    ("P5", "P3", 4),
    ("P6", "P3", 4),
    ("K4", "K2", 4),
    ("cliquetree(tree(0-1,1-2),2,2)", "K2", 4),
];

fn products(ctx: &Ctx, p: &mut Probe) -> Result<(), Stop> {
    for (a, b, want) in PRODUCTS {
        let (ga, gb) = (graph(a)?, graph(b)?);
        let (prod, _) = cartesian_product(&ga, &gb)?;
        let got = sg(ctx, &prod, "sg")?;
        p.expect(&format!("sg({a} x {b})"), got, want);
        let (sa, sb) = (sg(ctx, &ga, "sg")? as u64, sg(ctx, &gb, "sg")? as u64);
        let (ca, cb) = (sgc(ctx, &ga, "sgc")? as u64, sgc(ctx, &gb, "sgc")? as u64);
        let bound = product_upper_sgc(sa, ca, ga.order() as u64, sb, cb, gb.order() as u64);
        p.require(got as u64 <= bound, || {
            format!("{a} x {b}: sg {got} above the core-based bound {bound}")
        });
    }
    Ok(())
}

fn complete_products(ctx: &Ctx, p: &mut Probe) -> Result<(), Stop> {
    for n in [3usize, 4] {
        let k = graph(&format!("K{n}"))?;
        let (prod, _) = cartesian_product(&k, &k)?;
        let m = n as u64;
        p.record(
            format!("core_bound_K{n}"),
            product_upper_sgc(m, 1, m, m, 1, m),
        );
        p.record(format!("old_bound_K{n}"), product_upper_old(m, m, m, m));
        p.expect(
            &format!("sg(K{n} x K{n})"),
            sg(ctx, &prod, "sg")?,
            2 * n - 1,
        );
    }
    Ok(())
}

fn projection(ctx: &Ctx, p: &mut Probe) -> Result<(), Stop> {
    let mut checked = 0;
    for (a, b, _) in PRODUCTS.iter().chain(&[("K4", "K4", 0)]) {
        let (ga, gb) = (graph(a)?, graph(b)?);
        let (prod, map) = cartesian_product(&ga, &gb)?;
        for s in min_sets(ctx, &prod, "sg-sets")? {
            let s = VertexSet::from_vertices(prod.order(), s);
            for (factor, g) in [(Factor::Left, &ga), (Factor::Right, &gb)] {
                let proj = map.project_set(&s, factor);
                let ok = solver::is_geodetic_set(g, &proj)?;
                p.require(ok, || {
                    format!("{a} x {b}: projection {proj} of {s} is not geodetic")
                });
            }
            checked += 1;
        }
    }
    p.record("sg_sets_checked", checked);
    Ok(())
}

fn convex2(ctx: &Ctx, p: &mut Probe) -> Result<(), Stop> {
    let g = graph("hat(K4)")?;
    let k2 = graph("K2")?;
    p.expect(
        "g",
        proved(solver::geodetic_number(&g, &ctx.limits), "g")?.value,
        4,
    );
    p.expect("sg", sg(ctx, &g, "sg")?, 4);
    p.expect(
        "generalized_geodetic",
        proved(solver::is_generalized_geodetic(&g, &ctx.limits), "g = sg")?,
        true,
    );
    let c = sgc(ctx, &g, "sgc")?;
    p.expect("sgc", c, 3);
    p.expect(
        "K2_convex_2_partition",
        solver::has_convex_2_partition(&k2)?.is_some(),
        true,
    );
    let (prod, _) = cartesian_product(&g, &k2)?;
    let holds = proved(solver::sg_lower_bound(&prod, 5, &ctx.limits), "lower bound")?;
    p.expect(
        "sg(hat(K4) x K2) >= 5",
        holds == LowerBoundCheck::Holds,
        true,
    );
    Ok(())
}

fn counterexample(ctx: &Ctx, p: &mut Probe) -> Result<(), Stop> {
    let g = graph("cex(4,2)")?;
    let forms = bounds::counterexample_closed_forms(4, 2)?;
    p.expect("sg(G_4_2)", sg(ctx, &g, "sg")?, forms.sg as usize);
    let (prod, cert) = solver::counterexample_product_certificate(4, 2)?;
    p.expect(
        "explicit_set_size",
        cert.set.len(),
        forms.product_upper as usize,
    );
    p.record("explicit_set", cert.set.to_vec());
    p.require(cert.verify(&prod).is_ok(), || {
        "explicit certificate rejected".into()
    });
    let solved = proved(
        solver::is_strong_geodetic_set(&prod, &cert.set, &ctx.limits),
        "check",
    )?;
    p.require(solved.is_some(), || {
        "solver rejects the explicit set".into()
    });
    p.record("gap_lower", forms.gap);
    Ok(())
}

fn hat_strict(ctx: &Ctx, p: &mut Probe) -> Result<(), Stop> {
    p.expect("hat_lower(10,24)", hat_lower(10, 24)?, 3);
    let g = graph("hat(K(4,6))")?;
    p.expect("sg", sg(ctx, &g, "sg")?, 10);
    p.expect("sgc", sgc(ctx, &g, "sgc")?, 4);
    Ok(())
}

fn prism(ctx: &Ctx, p: &mut Probe) -> Result<(), Stop> {
    let k2 = graph("K2")?;
    let mut count = 0;
    for n in 1..=5 {
        for g in connected_graphs(n)? {
            let (prod, _) = cartesian_product(&g, &k2)?;
            let (a, b) = (sg(ctx, &g, "sg(G)")?, sg(ctx, &prod, "sg(G x K2)")?);
            p.require(b >= a, || {
                format!("{:?}: sg(G x K2) = {b} < sg(G) = {a}", g.edges())
            });
            count += 1;
        }
    }
    p.record("graphs", count);
    Ok(())
}

fn formulas(_: &Ctx, p: &mut Probe) -> Result<(), Stop> {
    p.expect("counting_bound(3,5,4,32)", eq1_sides(3, 5, 4, 32), (27, 27));
    p.expect("sgc_bounds(6,4,2)", sgc_bounds(6, 4, 2)?, (1, 2));
    p.expect("sgc_bounds(32,5,4)", sgc_bounds(32, 5, 4)?, (3, 4));
    p.expect("sgc_bounds(10,4,2)", sgc_bounds(10, 4, 2)?, (3, 3));
    p.expect("hat_lower(4,6)", hat_lower(4, 6)?, 3);
    p.expect(
        "product_upper_old(4,4,4,4)",
        product_upper_old(4, 4, 4, 4),
        13,
    );
    p.expect(
        "product_upper_sgc(4,1,4,4,1,4)",
        product_upper_sgc(4, 1, 4, 4, 1, 4),
        7,
    );
    let f = bounds::counterexample_closed_forms(5, 2)?;
    p.expect(
        "counterexample_forms(5,2)",
        (f.sg, f.product_upper),
        (15, 11),
    );
    Ok(())
}

fn generalized(ctx: &Ctx, p: &mut Probe) -> Result<(), Stop> {
    let split = graph("split(3,3)")?;
    p.expect(
        "g(split(3,3))",
        proved(solver::geodetic_number(&split, &ctx.limits), "g")?.value,
        3,
    );
    p.expect("sg(split(3,3))", sg(ctx, &split, "sg")?, 3);
    let c6 = graph("C6")?;
    p.expect(
        "generalized(C6)",
        proved(solver::is_generalized_geodetic(&c6, &ctx.limits), "C6")?,
        false,
    );
    Ok(())
}

pub fn registry() -> Vec<Claim> {
    vec![
        Claim {
            id: "C-FORMULAS",
            class: Class::Fast,
            statement: "closed-form bounds evaluate to their stated values",
            graphs: &[],
            relation: Relation::Equality,
            provenance: "closed form",
            run: formulas,
        },
        Claim {
            id: "C-HAT-K4",
            class: Class::Fast,
            statement: "sg(hat(K4)) = 4 with the originals as unique sg-set, sgc(hat(K4)) = 3",
            graphs: &["hat(K4)"],
            relation: Relation::Uniqueness,
            provenance: "closed form",
            run: hat_k4,
        },
        Claim {
            id: "C-711",
            class: Class::Fast,
            statement: "K(7,11): sg = 7 with the 7-side unique, sgc(S) = 2, sgc(T) = 4",
            graphs: &["K(7,11)"],
            relation: Relation::Uniqueness,
            provenance: "closed form",
            run: seven_eleven,
        },
        Claim {
            id: "C-COCKTAIL",
            class: Class::Fast,
            statement: "cocktail(n), n = 6..9: sg = n - floor(n/3), sgc = floor(n/3)",
            graphs: &["cocktail(6)", "cocktail(7)", "cocktail(8)", "cocktail(9)"],
            relation: Relation::Equality,
            provenance: "closed form",
            run: cocktail,
        },
        Claim {
            id: "C-KNC2",
            class: Class::Fast,
            statement: "sg(K(n, C(n,2))) = n for n = 3, 4",
            graphs: &["K(3,3)", "K(4,6)"],
            relation: Relation::Equality,
            provenance: "closed form",
            run: bipartite,
        },
        Claim {
            id: "C-GENERALIZED",
            class: Class::Fast,
            statement: "split(3,3) has g = sg = 3; C6 is not generalized geodetic",
            graphs: &["split(3,3)", "C6"],
            relation: Relation::Equality,
            provenance: "closed form and exhaustive search",
            run: generalized,
        },
        Claim {
            id: "C-TREES",
            class: Class::Fast,
            statement: "sgc(T) = 1 for 200 random trees with at most 12 vertices",
            graphs: &[],
            relation: Relation::Equality,
            provenance: "closed form",
            run: trees,
        },
        Claim {
            id: "C-CONVEX2",
            class: Class::Fast,
            statement: "hat(K4) is generalized geodetic with sgc > sg/2, K2 splits convexly, sg(hat(K4) x K2) >= 5",
            graphs: &["hat(K4)", "K2", "product(hat(K4),K2)"],
            relation: Relation::Inequality,
            provenance: "closed form",
            run: convex2,
        },
        Claim {
            id: "C-H324",
            class: Class::Standard,
            statement: "H(3,2,4): sg = 5, sgc = 3, diameter 4, counting bound tight",
            graphs: &["H(3,2,4)"],
            relation: Relation::Equality,
            provenance: "closed form",
            run: h324,
        },
        Claim {
            id: "C-SMALL-GRAPHS",
            class: Class::Standard,
            statement: "every bound holds on all connected graphs with at most 6 vertices",
            graphs: &[],
            relation: Relation::Inequality,
            provenance: "exhaustive search",
            run: small_graphs,
        },
        Claim {
            id: "C-PRODUCTS",
            class: Class::Standard,
            statement: "sg(K3 x K3) = 5, sg(Pn x P3) = 4 for n = 3..6, sg(K4 x K2) = 4, sg(cliquetree x K2) = 4",
            graphs: &["product(K3,K3)", "product(P6,P3)", "product(K4,K2)", "product(cliquetree(tree(0-1,1-2),2,2),K2)"],
            relation: Relation::Equality,
            provenance: "closed form",
            run: products,
        },
        Claim {
            id: "C-KNKN",
            class: Class::Standard,
            statement: "sg(Kn x Kn) = 2n - 1, the core-based product bound, for n = 3, 4",
            graphs: &["product(K3,K3)", "product(K4,K4)"],
            relation: Relation::Equality,
            provenance: "closed form",
            run: complete_products,
        },
        Claim {
            id: "C-PROJECTION",
            class: Class::Standard,
            statement: "every minimum strong geodetic set of a product projects to geodetic sets of both factors",
            graphs: &[],
            relation: Relation::Inequality,
            provenance: "exhaustive search",
            run: projection,
        },
        Claim {
            id: "C-CONJ-SMALL",
            class: Class::Standard,
            statement: "sg(G x K2) >= sg(G) for all connected graphs with at most 5 vertices",
            graphs: &[],
            relation: Relation::Inequality,
            provenance: "exhaustive search",
            run: prism,
        },
        Claim {
            id: "C-COUNTEREXAMPLE",
            class: Class::Long,
            statement: "sg(cex(4,2)) = 10 while cex(4,2) x K2 has a strong geodetic set of size 9",
            graphs: &["cex(4,2)", "product(cex(4,2),K2)"],
            relation: Relation::Counterexample,
            provenance: "closed form",
            run: counterexample,
        },
        Claim {
            id: "C-HAT-STRICT",
            class: Class::Long,
            statement: "hat_lower(10,24) = 3 while sgc(hat(K(4,6))) = 4",
            graphs: &["hat(K(4,6))"],
            relation: Relation::Inequality,
            provenance: "closed form",
            run: hat_strict,
        },
    ]
}

/// Claims picked by the selectors. A class name selects that class and every
/// cheaper one; `all` selects everything; anything else must be a claim id.
pub fn select(selectors: &[String]) -> Result<Vec<Claim>, String> {
    let mut picked = vec![false; registry().len()];
    let reg = registry();
    for sel in selectors {
        let class = match sel.as_str() {
            "all" | "long" => Some(Class::Long),
            "standard" => Some(Class::Standard),
            "fast" => Some(Class::Fast),
            _ => None,
        };
        match class {
            Some(c) => reg
                .iter()
                .enumerate()
                .filter(|(_, cl)| cl.class <= c)
                .for_each(|(i, _)| picked[i] = true),
            None => match reg.iter().position(|cl| cl.id.eq_ignore_ascii_case(sel)) {
                Some(i) => picked[i] = true,
                None => return Err(format!("unknown claim or class {sel:?}")),
            },
        }
    }
    Ok(reg
        .into_iter()
        .zip(picked)
        .filter(|(_, p)| *p)
        .map(|(c, _)| c)
        .collect())
}

pub fn run_claims(claims: &[Claim], ctx: &Ctx) -> Vec<ClaimRecord> {
    claims
        .par_iter()
        .map(|claim| {
            let mut probe = Probe::default();
            let outcome = (claim.run)(ctx, &mut probe);
            let (status, stopped) = match outcome {
                Ok(()) if probe.failures.is_empty() => (Status::Pass, None),
                Ok(()) => (Status::Fail, None),
                Err(Stop::Inconclusive(why)) if probe.failures.is_empty() => {
                    (Status::Inconclusive, Some(why))
                }
                Err(Stop::Inconclusive(why)) => (Status::Fail, Some(why)),
                Err(Stop::Error(why)) => (Status::Fail, Some(why)),
            };
            ClaimRecord {
                id: claim.id,
                class: claim.class,
                statement: claim.statement,
                graphs: claim.graphs,
                relation: claim.relation,
                provenance: claim.provenance,
                status,
                measured: probe.measured,
                failures: probe.failures,
                stopped,
            }
        })
        .collect()
}
