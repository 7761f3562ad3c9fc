use serde::{Deserialize, Serialize};
use std::fmt;
use std::sync::atomic::{AtomicBool, AtomicU64, Ordering};
use std::time::{Duration, Instant};

/// Resource caps for the exact searches.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SearchLimits {
    /// Maximum number of geodesics enumerated for a single vertex pair.
    pub geodesic_cap: u64,
    /// Maximum number of search-tree nodes over a whole solver call.
    pub node_budget: u64,
    pub time_budget: Option<Duration>,
}

impl Default for SearchLimits {
    fn default() -> Self {
        SearchLimits {
            geodesic_cap: 100_000,
            node_budget: 100_000_000,
            time_budget: None,
        }
    }
}

impl SearchLimits {
    pub fn with_geodesic_cap(mut self, cap: u64) -> Self {
        self.geodesic_cap = cap;
        self
    }

    pub fn with_node_budget(mut self, nodes: u64) -> Self {
        self.node_budget = nodes;
        self
    }

    pub fn with_time_budget(mut self, budget: Duration) -> Self {
        self.time_budget = Some(budget);
        self
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Limit {
    GeodesicCap,
    NodeBudget,
    TimeBudget,
}

impl fmt::Display for Limit {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Limit::GeodesicCap => "geodesic_cap",
            Limit::NodeBudget => "node_budget",
            Limit::TimeBudget => "time_budget",
        })
    }
}

/// Best bracket known when a search stopped early.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Bracket {
    pub lower: usize,
    pub upper: usize,
    pub limit: Limit,
}

/// Result of an exact computation: either proved, or stopped by a limit.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Outcome<T> {
    Proved(T),
    Inconclusive(Bracket),
}

impl<T> Outcome<T> {
    pub fn proved(self) -> Option<T> {
        match self {
            Outcome::Proved(t) => Some(t),
            Outcome::Inconclusive(_) => None,
        }
    }

    pub fn as_proved(&self) -> Option<&T> {
        match self {
            Outcome::Proved(t) => Some(t),
            Outcome::Inconclusive(_) => None,
        }
    }

    pub fn is_proved(&self) -> bool {
        matches!(self, Outcome::Proved(_))
    }

    pub fn bracket(&self) -> Option<Bracket> {
        match self {
            Outcome::Proved(_) => None,
            Outcome::Inconclusive(b) => Some(*b),
        }
    }

    pub fn map<U>(self, f: impl FnOnce(T) -> U) -> Outcome<U> {
        match self {
            Outcome::Proved(t) => Outcome::Proved(f(t)),
            Outcome::Inconclusive(b) => Outcome::Inconclusive(b),
        }
    }

    /// Panics with the bracket when the outcome is inconclusive.
    pub fn expect_proved(self, what: &str) -> T {
        match self {
            Outcome::Proved(t) => t,
            Outcome::Inconclusive(b) => panic!("{what}: inconclusive {b:?}"),
        }
    }
}

/// Shared node/time accounting for one solver call. Workers poll it; once a
/// limit trips every worker sees it.
#[derive(Debug)]
pub(crate) struct Budget {
    nodes: AtomicU64,
    node_budget: u64,
    deadline: Option<Instant>,
    tripped: AtomicBool,
    limit: std::sync::Mutex<Option<Limit>>,
}

impl Budget {
    pub fn new(limits: &SearchLimits) -> Self {
        Budget {
            nodes: AtomicU64::new(0),
            node_budget: limits.node_budget,
            deadline: limits.time_budget.map(|d| Instant::now() + d),
            tripped: AtomicBool::new(false),
            limit: std::sync::Mutex::new(None),
        }
    }

    /// Counts one search node. `Err` once any limit has been reached.
    #[inline]
    pub fn tick(&self) -> Result<(), Limit> {
        if self.tripped.load(Ordering::Relaxed) {
            return Err(self.hit().unwrap_or(Limit::NodeBudget));
        }
        let used = self.nodes.fetch_add(1, Ordering::Relaxed) + 1;
        if used > self.node_budget {
            return Err(self.trip(Limit::NodeBudget));
        }
        if used % 1024 == 0 {
            if let Some(deadline) = self.deadline {
                if Instant::now() >= deadline {
                    return Err(self.trip(Limit::TimeBudget));
                }
            }
        }
        Ok(())
    }

    pub fn trip(&self, limit: Limit) -> Limit {
        let mut slot = self.limit.lock().unwrap();
        let first = *slot.get_or_insert(limit);
        self.tripped.store(true, Ordering::Relaxed);
        first
    }

    pub fn hit(&self) -> Option<Limit> {
        *self.limit.lock().unwrap()
    }
}
