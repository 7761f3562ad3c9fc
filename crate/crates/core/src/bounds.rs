//! Closed-form bounds on strong geodetic invariants, in exact integer
//! arithmetic, and a checker that compares them with solver results.

use crate::distance::DistanceOracle;
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::limits::{Limit, Outcome, SearchLimits};
use crate::solver;
use serde::Serialize;
use std::fmt::{self, Write as _};

fn choose2(k: u128) -> u128 {
    k * k.saturating_sub(1) / 2
}

/// Both sides of the core coverage inequality
/// `(k(s-k) + C(k,2))(d-1) >= n - s`.
pub fn eq1_sides(k: u64, s: u64, d: u64, n: u64) -> (u128, u128) {
    let (k, s, d, n) = (k as u128, s as u128, d as u128, n as u128);
    let lhs = (k * s.saturating_sub(k) + choose2(k)) * d.saturating_sub(1);
    (lhs, n.saturating_sub(s))
}

/// Whether a core of size `k` in a strong geodetic set of size `s` can cover
/// a graph of order `n` and diameter `d`, by counting.
pub fn eq1_holds(k: u64, s: u64, d: u64, n: u64) -> bool {
    let (lhs, rhs) = eq1_sides(k, s, d, n);
    lhs >= rhs
}

/// Lower and upper bounds on `sgc(G)` for a non-complete graph with
/// `n(G) = n`, `sg(G) = s` and diameter `d`.
///
/// The lower bound is the least `k >= 1` passing [`eq1_holds`], found by
/// search rather than through the square-root form.
pub fn sgc_bounds(n: u64, s: u64, d: u64) -> Result<(u64, u64)> {
    if d < 2 {
        return Err(Error::invalid("diameter must be at least 2"));
    }
    if s < 2 || s >= n {
        return Err(Error::invalid(format!(
            "need 2 <= s < n, got s = {s}, n = {n}"
        )));
    }
    let lower = (1..=s).find(|&k| eq1_holds(k, s, d, n)).ok_or_else(|| {
        Error::invalid(format!(
            "no core size satisfies the counting bound for (n, s, d) = ({n}, {s}, {d})"
        ))
    })?;
    Ok((lower, (s - 1).min(n - s)))
}

/// Least `k` with `(n-1) + (n-2) + ... + (n-k) >= m`.
pub fn hat_lower(n: u64, m: u64) -> Result<u64> {
    if n < 2 || m < 1 {
        return Err(Error::invalid("need n >= 2 and m >= 1"));
    }
    if m > n * (n - 1) / 2 {
        return Err(Error::invalid(format!("m = {m} exceeds C({n}, 2)")));
    }
    let mut sum = 0;
    for k in 1..n {
        sum += n - k;
        if sum >= m {
            return Ok(k);
        }
    }
    unreachable!("the full sum is C(n, 2)")
}

/// `min{sg(H)n(G) - sg(G) + 1, sg(G)n(H) - sg(H) + 1}`.
pub fn product_upper_old(sg_g: u64, n_g: u64, sg_h: u64, n_h: u64) -> u64 {
    let one = (sg_h * n_g + 1).saturating_sub(sg_g);
    let other = (sg_g * n_h + 1).saturating_sub(sg_h);
    one.min(other)
}

/// `min{sgc(H)(n(G)-1) + sg(H), sgc(G)(n(H)-1) + sg(G)}`.
pub fn product_upper_sgc(sg_g: u64, sgc_g: u64, n_g: u64, sg_h: u64, sgc_h: u64, n_h: u64) -> u64 {
    let one = sgc_h * n_g.saturating_sub(1) + sg_h;
    let other = sgc_g * n_h.saturating_sub(1) + sg_g;
    one.min(other)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct CounterexampleForms {
    /// `sg` of the counterexample graph.
    pub sg: u64,
    /// Size of the explicit strong geodetic set in its product with `K_n`.
    pub product_upper: u64,
    /// `sg - product_upper`.
    pub gap: u64,
}

pub fn counterexample_closed_forms(k: u64, n: u64) -> Result<CounterexampleForms> {
    if k < 4 || n < 2 {
        return Err(Error::invalid("need k >= 4 and n >= 2"));
    }
    let sg = k * (k - 1) / 2 * (n - 1) + k;
    let product_upper = k * n + 1;
    let gap = (k * (n - 1) * (k - 3) - 2) / 2;
    debug_assert_eq!(sg - product_upper, gap);
    Ok(CounterexampleForms {
        sg,
        product_upper,
        gap,
    })
}

/// A solver value: exact, or the bracket reached before a limit.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "status", rename_all = "snake_case")]
pub enum Measured {
    Proved {
        value: usize,
    },
    Bracketed {
        lower: usize,
        upper: usize,
        limit: Limit,
    },
}

impl Measured {
    fn from_outcome<T>(o: &Outcome<T>, value: impl Fn(&T) -> usize) -> Self {
        match o {
            Outcome::Proved(t) => Measured::Proved { value: value(t) },
            Outcome::Inconclusive(b) => Measured::Bracketed {
                lower: b.lower,
                upper: b.upper,
                limit: b.limit,
            },
        }
    }

    pub fn value(&self) -> Option<usize> {
        match *self {
            Measured::Proved { value } => Some(value),
            Measured::Bracketed { .. } => None,
        }
    }

    fn range(&self) -> (usize, usize) {
        match *self {
            Measured::Proved { value } => (value, value),
            Measured::Bracketed { lower, upper, .. } => (lower, upper),
        }
    }
}

impl fmt::Display for Measured {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Measured::Proved { value } => write!(f, "{value}"),
            Measured::Bracketed {
                lower,
                upper,
                limit,
            } => write!(f, "[{lower}, {upper}] ({limit})"),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Verdict {
    /// Satisfied with equality.
    Tight,
    Satisfied,
    Violated,
    /// Undecided because an input is only bracketed.
    Bracketed,
    /// The bound does not apply to this graph.
    Exempt,
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Verdict::Tight => "tight",
            Verdict::Satisfied => "satisfied",
            Verdict::Violated => "VIOLATED",
            Verdict::Bracketed => "bracketed",
            Verdict::Exempt => "exempt",
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct BoundCheck {
    pub name: String,
    pub verdict: Verdict,
    pub detail: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct BoundsReport {
    #[serde(skip_serializing_if = "Option::is_none")]
    pub graph: Option<String>,
    pub n: usize,
    pub m: usize,
    pub diameter: usize,
    /// Diameter below 2: the core bounds do not apply.
    pub exempt: bool,
    pub g: Measured,
    pub sg: Measured,
    pub sgc: Measured,
    /// `(lower, upper)` on `sgc` from `n`, `sg` and the diameter.
    pub sgc_bounds: Option<(u64, u64)>,
    pub checks: Vec<BoundCheck>,
}

impl BoundsReport {
    pub fn with_label(mut self, label: impl Into<String>) -> Self {
        self.graph = Some(label.into());
        self
    }

    pub fn violations(&self) -> Vec<&BoundCheck> {
        self.checks
            .iter()
            .filter(|c| c.verdict == Verdict::Violated)
            .collect()
    }

    pub fn check(&self, name: &str) -> Option<&BoundCheck> {
        self.checks.iter().find(|c| c.name == name)
    }

    /// Aligned plain-text table.
    pub fn to_text(&self) -> String {
        let mut out = String::new();
        if let Some(label) = &self.graph {
            let _ = writeln!(out, "graph     {label}");
        }
        let _ = writeln!(out, "n         {}", self.n);
        let _ = writeln!(out, "m         {}", self.m);
        let _ = writeln!(out, "diameter  {}", self.diameter);
        let _ = writeln!(out, "g         {}", self.g);
        let _ = writeln!(out, "sg        {}", self.sg);
        let _ = writeln!(out, "sgc       {}", self.sgc);
        match self.sgc_bounds {
            Some((lo, hi)) => {
                let _ = writeln!(out, "sgc range [{lo}, {hi}]");
            }
            None if self.exempt => {
                let _ = writeln!(out, "sgc range exempt (diameter < 2)");
            }
            None => {}
        }
        let name_w = self
            .checks
            .iter()
            .map(|c| c.name.len())
            .max()
            .unwrap_or(0)
            .max(5);
        let verdict_w = 9;
        let _ = writeln!(out);
        let _ = writeln!(out, "{:name_w$}  {:verdict_w$}  detail", "check", "verdict");
        for c in &self.checks {
            let _ = writeln!(
                out,
                "{:name_w$}  {:verdict_w$}  {}",
                c.name,
                c.verdict.to_string(),
                c.detail
            );
        }
        out
    }
}

pub const CHECK_G_LE_SG: &str = "g <= sg";
pub const CHECK_SG_LT_N: &str = "sg <= n - 1";
pub const CHECK_SGC_LOWER: &str = "sgc >= counting lower bound";
pub const CHECK_SGC_LE_SG: &str = "sgc <= sg - 1";
pub const CHECK_SGC_LE_REST: &str = "sgc <= n - sg";
pub const CHECK_COUNTING: &str = "core counting inequality";

/// `a <= b` where both sides are known up to ranges.
fn le(a: (usize, usize), b: (usize, usize)) -> Verdict {
    if a.1 <= b.0 {
        if a.0 == a.1 && b.0 == b.1 && a.0 == b.0 {
            Verdict::Tight
        } else {
            Verdict::Satisfied
        }
    } else if a.0 > b.1 {
        Verdict::Violated
    } else {
        Verdict::Bracketed
    }
}

fn check(name: &str, verdict: Verdict, detail: String) -> BoundCheck {
    BoundCheck {
        name: name.to_string(),
        verdict,
        detail,
    }
}

/// Solves `g`, `sg` and `sgc` within `limits` and evaluates every bound.
/// A `Violated` verdict means a solver or construction bug.
pub fn check_bounds(g: &Graph, limits: &SearchLimits) -> Result<BoundsReport> {
    g.require_connected()?;
    let oracle = DistanceOracle::new(g)?;
    let (n, d) = (g.order(), oracle.diameter());
    let gv = Measured::from_outcome(&solver::geodetic_number(g, limits)?, |s| s.value);
    let sg = Measured::from_outcome(&solver::strong_geodetic_number(g, limits)?, |s| s.value);
    let sgc = match sg {
        Measured::Proved { .. } => {
            Measured::from_outcome(&solver::strong_geodetic_core_number(g, limits)?, |s| {
                s.value
            })
        }
        Measured::Bracketed { limit, .. } => Measured::Bracketed {
            lower: 1,
            upper: n,
            limit,
        },
    };
    let exempt = d < 2;
    let mut checks = vec![check(
        CHECK_G_LE_SG,
        le(gv.range(), sg.range()),
        format!("g = {gv}, sg = {sg}"),
    )];
    let mut sgc_range = None;
    if exempt {
        for name in [
            CHECK_SG_LT_N,
            CHECK_SGC_LOWER,
            CHECK_SGC_LE_SG,
            CHECK_SGC_LE_REST,
            CHECK_COUNTING,
        ] {
            checks.push(check(name, Verdict::Exempt, "diameter < 2".into()));
        }
    } else {
        let (slo, shi) = sg.range();
        checks.push(check(
            CHECK_SG_LT_N,
            le(sg.range(), (n - 1, n - 1)),
            format!("sg = {sg}, n = {n}"),
        ));
        match (sg.value(), sgc.value()) {
            (Some(s), _) => {
                let (lo, hi) = sgc_bounds(n as u64, s as u64, d as u64)?;
                sgc_range = Some((lo, hi));
                checks.push(check(
                    CHECK_SGC_LOWER,
                    le((lo as usize, lo as usize), sgc.range()),
                    format!("lower = {lo}, sgc = {sgc}"),
                ));
            }
            (None, _) => checks.push(check(
                CHECK_SGC_LOWER,
                Verdict::Bracketed,
                format!("sg = {sg}"),
            )),
        }
        checks.push(check(
            CHECK_SGC_LE_SG,
            le(sgc.range(), (slo.saturating_sub(1), shi.saturating_sub(1))),
            format!("sgc = {sgc}, sg = {sg}"),
        ));
        checks.push(check(
            CHECK_SGC_LE_REST,
            le(sgc.range(), (n.saturating_sub(shi), n.saturating_sub(slo))),
            format!("sgc = {sgc}, n - sg with sg = {sg}"),
        ));
        match (sg.value(), sgc.value()) {
            (Some(s), Some(k)) => {
                let (lhs, rhs) = eq1_sides(k as u64, s as u64, d as u64, n as u64);
                let verdict = match lhs.cmp(&rhs) {
                    std::cmp::Ordering::Equal => Verdict::Tight,
                    std::cmp::Ordering::Greater => Verdict::Satisfied,
                    std::cmp::Ordering::Less => Verdict::Violated,
                };
                checks.push(check(CHECK_COUNTING, verdict, format!("{lhs} >= {rhs}")));
            }
            _ => checks.push(check(
                CHECK_COUNTING,
                Verdict::Bracketed,
                format!("sg = {sg}, sgc = {sgc}"),
            )),
        }
    }
    Ok(BoundsReport {
        graph: None,
        n,
        m: g.size(),
        diameter: d,
        exempt,
        g: gv,
        sg,
        sgc,
        sgc_bounds: sgc_range,
        checks,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families::*;

    #[test]
    fn counting_inequality() {
        assert_eq!(eq1_sides(3, 5, 4, 32), (27, 27));
        assert!(eq1_holds(3, 5, 4, 32));
        assert!(!eq1_holds(2, 5, 4, 32));
        assert!(eq1_holds(0, 7, 3, 7));
    }

    #[test]
    fn core_bounds() {
        assert_eq!(sgc_bounds(6, 4, 2).unwrap(), (1, 2));
        assert_eq!(sgc_bounds(32, 5, 4).unwrap(), (3, 4));
        assert_eq!(sgc_bounds(10, 4, 2).unwrap(), (3, 3));
        assert!(sgc_bounds(5, 5, 2).is_err());
        assert!(sgc_bounds(6, 4, 1).is_err());
        assert!(sgc_bounds(100, 2, 2).is_err());
    }

    #[test]
    fn hat_bound() {
        assert_eq!(hat_lower(4, 6).unwrap(), 3);
        assert_eq!(hat_lower(10, 24).unwrap(), 3);
        assert_eq!(hat_lower(7, 1).unwrap(), 1);
        assert!(hat_lower(4, 7).is_err());
    }

    #[test]
    fn product_bounds() {
        for n in 2..8 {
            assert_eq!(product_upper_old(n, n, n, n), n * n - n + 1);
            assert_eq!(product_upper_sgc(n, 1, n, n, 1, n), 2 * n - 1);
        }
        assert_eq!(product_upper_old(2, 5, 2, 3), 5);
        assert_eq!(product_upper_old(1, 1, 4, 9), 4);
        assert_eq!(product_upper_sgc(2, 1, 6, 2, 1, 3), 4);
    }

    #[test]
    fn counterexample_forms() {
        let f = counterexample_closed_forms(4, 2).unwrap();
        assert_eq!((f.sg, f.product_upper, f.gap), (10, 9, 1));
        let f = counterexample_closed_forms(5, 2).unwrap();
        assert_eq!((f.sg, f.product_upper), (15, 11));
        assert!(counterexample_closed_forms(3, 2).is_err());
    }

    #[test]
    fn reports() {
        let lim = SearchLimits::default();
        let r = check_bounds(&cocktail_party(6).unwrap(), &lim).unwrap();
        assert_eq!(r.sgc_bounds, Some((1, 2)));
        assert_eq!(r.sgc.value(), Some(2));
        assert_eq!(r.check(CHECK_SGC_LE_REST).unwrap().verdict, Verdict::Tight);
        assert!(r.violations().is_empty());

        let k5 = check_bounds(&complete(5).unwrap(), &lim).unwrap();
        assert!(k5.exempt);
        assert_eq!(k5.check(CHECK_COUNTING).unwrap().verdict, Verdict::Exempt);

        let t = tree_from_edges(7, &[(0, 1), (1, 2), (2, 3), (1, 4), (2, 5), (5, 6)]).unwrap();
        let rt = check_bounds(&t, &lim).unwrap();
        assert_eq!(rt.check(CHECK_SGC_LOWER).unwrap().verdict, Verdict::Tight);
        assert!(rt.to_text().contains("sgc >= counting lower bound"));

        let capped = check_bounds(&cycle(8).unwrap(), &lim.with_node_budget(1)).unwrap();
        assert!(capped.violations().is_empty());
        assert!(capped
            .checks
            .iter()
            .any(|c| c.verdict == Verdict::Bracketed));
    }
}
