//! Exact metric dimension.
//!
//! The search runs over increasing sizes starting at [`lower_bound`]. Each
//! size is decided by a fail-first branch and bound over the distinguisher
//! sets (always branching on the unhit set with the fewest usable vertices).
//! Once the minimum size is known, the reported witness is the
//! lexicographically smallest resolving set of that size, so the answer does
//! not depend on how the parallel search was scheduled.
//!
//! Twin classes are handled before the search: all members of a class but the
//! last are forced into every candidate set.

mod bounds;
mod family;

pub use bounds::{greedy_upper_bound, lower_bound, BoundSource, LowerBound};

use std::ops::ControlFlow;
use std::time::{Duration, Instant};

use serde::Serialize;
use serde_json::{json, Value};

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::metric::{distance_matrix, twin_classes, DistanceMatrix};
use family::{for_each_hitting_set, BranchAndBound, BudgetTracker, HittingFamily, Outcome};

/// Optional caps on the exact search. Tripping either one yields an interval.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct SearchBudget {
    pub max_subsets: Option<u64>,
    pub max_seconds: Option<u64>,
}

impl SearchBudget {
    pub const UNLIMITED: SearchBudget = SearchBudget {
        max_subsets: None,
        max_seconds: None,
    };

    /// 10^8 search nodes or 300 s.
    pub const DEFAULT: SearchBudget = SearchBudget {
        max_subsets: Some(100_000_000),
        max_seconds: Some(300),
    };

    fn tracker(&self, start: Instant) -> BudgetTracker {
        BudgetTracker::new(
            self.max_subsets,
            self.max_seconds.map(|s| start + Duration::from_secs(s)),
        )
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Dimension {
    Exact(usize),
    /// Budget ran out: every size below `lo` was ruled out, `hi` is achieved.
    Interval {
        lo: usize,
        hi: usize,
    },
}

impl Dimension {
    pub fn exact(&self) -> Option<usize> {
        match *self {
            Dimension::Exact(d) => Some(d),
            Dimension::Interval { .. } => None,
        }
    }

    pub fn bounds(&self) -> (usize, usize) {
        match *self {
            Dimension::Exact(d) => (d, d),
            Dimension::Interval { lo, hi } => (lo, hi),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum SizeOutcome {
    Exhausted,
    Found,
    OutOfBudget,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SizeStats {
    pub size: usize,
    pub subsets: u64,
    pub prunes: u64,
    pub outcome: SizeOutcome,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SearchStats {
    pub pairs: usize,
    pub distinct_sets: usize,
    pub forced: Vec<usize>,
    pub per_size: Vec<SizeStats>,
    pub canonical_subsets: u64,
}

#[derive(Debug, Clone)]
pub struct DimensionReport {
    pub graph: String,
    pub n: usize,
    pub dimension: Dimension,
    /// Minimum resolving set when exact; otherwise the best set known.
    pub witness: Vec<usize>,
    pub lower_bound: LowerBound,
    pub greedy: Vec<usize>,
    pub stats: SearchStats,
    pub wall_time: Duration,
}

impl DimensionReport {
    pub fn is_exact(&self) -> bool {
        matches!(self.dimension, Dimension::Exact(_))
    }

    /// JSON payload. Everything except `"timing"` is identical across runs
    /// and thread counts.
    pub fn to_json(&self) -> Value {
        let (lo, hi) = self.dimension.bounds();
        json!({
            "graph": self.graph,
            "n": self.n,
            "dim": self.dimension.exact(),
            "dim_lo": lo,
            "dim_hi": hi,
            "exact": self.is_exact(),
            "witness": self.witness,
            "lower_bound": self.lower_bound,
            "upper_bound": { "value": self.greedy.len(), "witness": self.greedy },
            "stats": self.stats,
            "timing": { "wall_ms": self.wall_time.as_millis() as u64 },
        })
    }
}

pub(crate) fn connected_matrix(g: &Graph) -> Result<DistanceMatrix> {
    let dm = distance_matrix(g)?;
    if !dm.is_connected() {
        return Err(Error::Disconnected(g.name().to_owned()));
    }
    Ok(dm)
}

pub fn metric_dimension_exact(g: &Graph, budget: SearchBudget) -> Result<DimensionReport> {
    let start = Instant::now();
    if g.n() < 2 {
        return Err(Error::InvalidParameter("metric dimension needs n >= 2".into()));
    }
    let dm = connected_matrix(g)?;
    let lower = bounds::lower_bound_with(g, &dm);
    let greedy = bounds::greedy_with(&dm);
    let forced: Vec<usize> = twin_classes(g)
        .iter()
        .flat_map(|class| class[..class.len() - 1].iter().copied())
        .collect();

    let full = HittingFamily::new(&dm, &[]);
    let reduced = HittingFamily::new(&dm, &forced);
    let tracker = budget.tracker(start);
    let mut stats = SearchStats {
        pairs: g.n() * (g.n() - 1) / 2,
        distinct_sets: full.len(),
        forced: forced.clone(),
        per_size: Vec::new(),
        canonical_subsets: 0,
    };

    let first = lower.value.max(forced.len());
    let mut found = None;
    let mut size = first;
    while size < greedy.len() {
        let (outcome, counters) = BranchAndBound::new(&reduced, &tracker).search(&forced, size - forced.len());
        let label = match &outcome {
            Outcome::Found(_) => SizeOutcome::Found,
            Outcome::Exhausted => SizeOutcome::Exhausted,
            Outcome::OutOfBudget => SizeOutcome::OutOfBudget,
        };
        stats.per_size.push(SizeStats {
            size,
            subsets: counters.nodes,
            prunes: counters.prunes,
            outcome: label,
        });
        match outcome {
            Outcome::Exhausted => size += 1,
            Outcome::Found(w) => {
                found = Some(w);
                break;
            }
            Outcome::OutOfBudget => {
                return Ok(DimensionReport {
                    graph: g.name().to_owned(),
                    n: g.n(),
                    dimension: Dimension::Interval {
                        lo: size,
                        hi: greedy.len(),
                    },
                    witness: greedy.clone(),
                    lower_bound: lower,
                    greedy,
                    stats,
                    wall_time: start.elapsed(),
                });
            }
        }
    }
    let dim = size;
    let fallback = found.unwrap_or_else(|| greedy.clone());
    let mut canonical = None;
    stats.canonical_subsets = for_each_hitting_set(&full, dim, |w| {
        canonical = Some(w.to_vec());
        ControlFlow::Break(())
    });
    Ok(DimensionReport {
        graph: g.name().to_owned(),
        n: g.n(),
        dimension: Dimension::Exact(dim),
        witness: canonical.unwrap_or(fallback),
        lower_bound: lower,
        greedy,
        stats,
        wall_time: start.elapsed(),
    })
}

/// Calls `visit` on every resolving set of exactly `size` vertices, in
/// lexicographic order, until it returns `Break`. Returns the number of
/// search nodes visited.
pub fn for_each_resolving_set<F>(g: &Graph, size: usize, visit: F) -> Result<u64>
where
    F: FnMut(&[usize]) -> ControlFlow<()>,
{
    let dm = connected_matrix(g)?;
    if size > g.n() {
        return Err(Error::InvalidParameter(format!(
            "size {size} exceeds vertex count {}",
            g.n()
        )));
    }
    Ok(for_each_hitting_set(&HittingFamily::new(&dm, &[]), size, visit))
}

/// Collects every resolving set of exactly `size` vertices, lexicographically.
pub fn resolving_sets_of_size(g: &Graph, size: usize) -> Result<Vec<Vec<usize>>> {
    let mut out = Vec::new();
    for_each_resolving_set(g, size, |w| {
        out.push(w.to_vec());
        ControlFlow::Continue(())
    })?;
    Ok(out)
}

/// True when no resolving set of `size` vertices exists, by exhaustion.
pub fn no_resolving_set_of_size(g: &Graph, size: usize) -> Result<bool> {
    let mut any = false;
    for_each_resolving_set(g, size, |_| {
        any = true;
        ControlFlow::Break(())
    })?;
    Ok(!any)
}
