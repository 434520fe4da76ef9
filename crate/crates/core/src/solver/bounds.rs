use serde::Serialize;

use crate::error::Result;
use crate::graph::Graph;
use crate::metric::{twin_classes, DistanceMatrix};

use super::connected_matrix;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum BoundSource {
    Twins,
    DiameterCount,
    Trivial,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct LowerBound {
    pub value: usize,
    pub source: BoundSource,
}

/// Largest of the twin bound, the code-counting bound and 1. Ties go to the
/// twin bound first, then the counting bound.
pub fn lower_bound(g: &Graph) -> Result<LowerBound> {
    let dm = connected_matrix(g)?;
    Ok(lower_bound_with(g, &dm))
}

pub(crate) fn lower_bound_with(g: &Graph, dm: &DistanceMatrix) -> LowerBound {
    let twins: usize = twin_classes(g).iter().map(|c| c.len() - 1).sum();
    let counting = counting_bound(g.n(), dm.diameter().unwrap_or(0) as u64);
    [
        (twins, BoundSource::Twins),
        (counting, BoundSource::DiameterCount),
        (1, BoundSource::Trivial),
    ]
    .into_iter()
    .rev()
    .max_by_key(|&(v, _)| v)
    .map(|(value, source)| LowerBound { value, source })
    .expect("three candidates")
}

/// Smallest `b` with `b + diam^b >= n`: landmarks carry a zero, every other
/// vertex a code in `{1..diam}^b`.
fn counting_bound(n: usize, diam: u64) -> usize {
    let n = n as u64;
    (1..=n)
        .find(|&b| {
            let codes = diam.checked_pow(b as u32).unwrap_or(u64::MAX);
            b.saturating_add(codes) >= n
        })
        .unwrap_or(n) as usize
}

/// Greedy resolving set: repeatedly take the vertex separating the most
/// still-unresolved pairs, smallest id on ties.
pub fn greedy_upper_bound(g: &Graph) -> Result<(usize, Vec<usize>)> {
    let dm = connected_matrix(g)?;
    let w = greedy_with(&dm);
    Ok((w.len(), w))
}

pub(crate) fn greedy_with(dm: &DistanceMatrix) -> Vec<usize> {
    let n = dm.n();
    let mut unresolved: Vec<(usize, usize)> = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v))).collect();
    let mut chosen = Vec::new();
    while !unresolved.is_empty() {
        let score = |x: usize| {
            let row = dm.row(x);
            unresolved.iter().filter(|&&(u, v)| row[u] != row[v]).count()
        };
        // max_by_key keeps the last maximum, so scan in reverse
        let best = (0..n).rev().max_by_key(|&x| score(x)).expect("n >= 1");
        let row = dm.row(best);
        unresolved.retain(|&(u, v)| row[u] == row[v]);
        chosen.push(best);
    }
    chosen.sort_unstable();
    chosen
}
