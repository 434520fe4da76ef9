//! Minimum resolving set as minimum hitting set.
//!
//! Every unordered pair `u < v` contributes its distinguisher set; a vertex
//! set resolves the graph iff it meets all of them. Duplicate sets and
//! supersets of other sets are dropped since hitting the smaller one already
//! hits them.

use std::ops::ControlFlow;
use std::sync::atomic::{AtomicBool, AtomicU64, Ordering};
use std::time::Instant;

use fixedbitset::FixedBitSet;
use rayon::prelude::*;

use crate::metric::DistanceMatrix;

#[derive(Debug, Clone)]
pub(crate) struct HittingFamily {
    n: usize,
    /// Non-dominated sets, ascending by size.
    sets: Vec<FixedBitSet>,
    sizes: Vec<usize>,
    /// Largest member of each set.
    maxima: Vec<usize>,
}

impl HittingFamily {
    /// Family over all pairs whose distinguisher set misses `already_chosen`.
    pub(crate) fn new(dm: &DistanceMatrix, already_chosen: &[usize]) -> Self {
        let n = dm.n();
        let mut raw: Vec<FixedBitSet> = Vec::with_capacity(n * n.saturating_sub(1) / 2);
        for u in 0..n {
            let ru = dm.row(u);
            for v in u + 1..n {
                let rv = dm.row(v);
                if already_chosen.iter().any(|&x| ru[x] != rv[x]) {
                    continue;
                }
                let mut set = FixedBitSet::with_capacity(n);
                set.extend((0..n).filter(|&x| ru[x] != rv[x]));
                raw.push(set);
            }
        }
        raw.sort_by(|a, b| {
            a.count_ones(..)
                .cmp(&b.count_ones(..))
                .then_with(|| a.as_slice().cmp(b.as_slice()))
        });
        raw.dedup();
        let mut sets: Vec<FixedBitSet> = Vec::new();
        for set in raw {
            if !sets.iter().any(|kept| kept.is_subset(&set)) {
                sets.push(set);
            }
        }
        let sizes = sets.iter().map(|s| s.count_ones(..)).collect();
        let maxima = sets
            .iter()
            .map(|s| s.maximum().expect("distinguisher sets are non-empty"))
            .collect();
        HittingFamily { n, sets, sizes, maxima }
    }

    pub(crate) fn n(&self) -> usize {
        self.n
    }

    pub(crate) fn len(&self) -> usize {
        self.sets.len()
    }

    #[cfg(test)]
    pub(crate) fn sets(&self) -> &[FixedBitSet] {
        &self.sets
    }

    pub(crate) fn is_hit_by(&self, chosen: &FixedBitSet) -> bool {
        self.sets.iter().all(|s| !s.is_disjoint(chosen))
    }
}

/// Node/time limits shared by all workers of one solve.
#[derive(Debug)]
pub(crate) struct BudgetTracker {
    max_nodes: Option<u64>,
    deadline: Option<Instant>,
    nodes: AtomicU64,
    tripped: AtomicBool,
}

impl BudgetTracker {
    pub(crate) fn new(max_nodes: Option<u64>, deadline: Option<Instant>) -> Self {
        BudgetTracker {
            max_nodes,
            deadline,
            nodes: AtomicU64::new(0),
            tripped: AtomicBool::new(false),
        }
    }

    /// Counts one node; returns false once the budget is exhausted.
    fn tick(&self) -> bool {
        if self.tripped.load(Ordering::Relaxed) {
            return false;
        }
        let count = self.nodes.fetch_add(1, Ordering::Relaxed) + 1;
        let over_nodes = self.max_nodes.is_some_and(|m| count > m);
        let over_time = count.is_multiple_of(1024) && self.deadline.is_some_and(|d| Instant::now() >= d);
        if over_nodes || over_time {
            self.tripped.store(true, Ordering::Relaxed);
            return false;
        }
        true
    }

    pub(crate) fn tripped(&self) -> bool {
        self.tripped.load(Ordering::Relaxed)
    }
}

#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub(crate) struct Counters {
    pub nodes: u64,
    pub prunes: u64,
}

impl Counters {
    fn merge(mut self, other: Counters) -> Counters {
        self.nodes += other.nodes;
        self.prunes += other.prunes;
        self
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub(crate) enum Outcome {
    Found(Vec<usize>),
    Exhausted,
    OutOfBudget,
}

/// Fail-first branch and bound for a hitting set of at most `limit` extra
/// vertices on top of `forced`.
pub(crate) struct BranchAndBound<'a> {
    family: &'a HittingFamily,
    budget: &'a BudgetTracker,
}

struct Scratch {
    chosen: FixedBitSet,
    excluded: FixedBitSet,
    used: FixedBitSet,
    avail: FixedBitSet,
    counters: Counters,
}

enum Step {
    Done(Outcome),
    Branch(Vec<usize>),
}

impl<'a> BranchAndBound<'a> {
    pub(crate) fn new(family: &'a HittingFamily, budget: &'a BudgetTracker) -> Self {
        BranchAndBound { family, budget }
    }

    pub(crate) fn search(&self, forced: &[usize], limit: usize) -> (Outcome, Counters) {
        let n = self.family.n();
        let mut chosen = FixedBitSet::with_capacity(n);
        chosen.extend(forced.iter().copied());
        let mut root = Scratch {
            chosen,
            excluded: FixedBitSet::with_capacity(n),
            used: FixedBitSet::with_capacity(n),
            avail: FixedBitSet::with_capacity(n),
            counters: Counters::default(),
        };
        let candidates = match self.expand(&mut root, limit) {
            Step::Done(outcome) => return (outcome, root.counters),
            Step::Branch(c) => c,
        };
        // Root children run in parallel; child i excludes candidates[..i].
        // Children are never cancelled early, so counters do not depend on
        // the schedule.
        let results: Vec<(Outcome, Counters)> = candidates
            .par_iter()
            .enumerate()
            .map(|(i, &x)| {
                let mut s = Scratch {
                    chosen: root.chosen.clone(),
                    excluded: root.excluded.clone(),
                    used: FixedBitSet::with_capacity(n),
                    avail: FixedBitSet::with_capacity(n),
                    counters: Counters::default(),
                };
                s.excluded.extend(candidates[..i].iter().copied());
                s.chosen.insert(x);
                let outcome = self.recurse(&mut s, limit - 1);
                (outcome, s.counters)
            })
            .collect();
        let mut counters = root.counters;
        let mut found = None;
        let mut out_of_budget = false;
        for (outcome, c) in results {
            counters = counters.merge(c);
            match outcome {
                Outcome::Found(w) if found.is_none() => found = Some(w),
                Outcome::OutOfBudget => out_of_budget = true,
                _ => {}
            }
        }
        let outcome = match found {
            Some(w) => Outcome::Found(w),
            None if out_of_budget || self.budget.tripped() => Outcome::OutOfBudget,
            None => Outcome::Exhausted,
        };
        (outcome, counters)
    }

    fn recurse(&self, s: &mut Scratch, limit: usize) -> Outcome {
        let candidates = match self.expand(s, limit) {
            Step::Done(outcome) => return outcome,
            Step::Branch(c) => c,
        };
        let mut result = Outcome::Exhausted;
        for &x in &candidates {
            s.chosen.insert(x);
            let r = self.recurse(s, limit - 1);
            s.chosen.set(x, false);
            s.excluded.insert(x);
            match r {
                Outcome::Exhausted => {}
                other => {
                    result = other;
                    break;
                }
            }
        }
        for &x in &candidates {
            s.excluded.set(x, false);
        }
        result
    }

    /// Visits a node: decides it, or returns the branching candidates.
    fn expand(&self, s: &mut Scratch, limit: usize) -> Step {
        if !self.budget.tick() {
            return Step::Done(Outcome::OutOfBudget);
        }
        s.counters.nodes += 1;
        let family = self.family;
        let mut best: Option<(usize, usize)> = None;
        let mut packing = 0usize;
        s.used.clear();
        for (idx, set) in family.sets.iter().enumerate() {
            if !set.is_disjoint(&s.chosen) {
                continue;
            }
            let avail = family.sizes[idx] - set.intersection_count(&s.excluded);
            if avail == 0 {
                s.counters.prunes += 1;
                return Step::Done(Outcome::Exhausted);
            }
            if best.is_none_or(|(_, a)| avail < a) {
                best = Some((idx, avail));
            }
            if limit == 0 {
                continue;
            }
            s.avail.clone_from(set);
            s.avail.difference_with(&s.excluded);
            if s.avail.is_disjoint(&s.used) {
                packing += 1;
                s.used.union_with(&s.avail);
            }
        }
        let Some((idx, _)) = best else {
            return Step::Done(Outcome::Found(s.chosen.ones().collect()));
        };
        if limit == 0 || packing > limit {
            s.counters.prunes += 1;
            return Step::Done(Outcome::Exhausted);
        }
        let mut avail = family.sets[idx].clone();
        avail.difference_with(&s.excluded);
        Step::Branch(avail.ones().collect())
    }
}

/// Lexicographic enumeration of every hitting set of exactly `size`
/// vertices, with the pruning that keeps the desk-scale cases cheap.
pub(crate) fn for_each_hitting_set<F>(family: &HittingFamily, size: usize, mut visit: F) -> u64
where
    F: FnMut(&[usize]) -> ControlFlow<()>,
{
    let n = family.n();
    let mut walk = LexWalk {
        family,
        size,
        chosen: Vec::with_capacity(size),
        chosen_bits: FixedBitSet::with_capacity(n),
        tail_masks: (0..=n)
            .map(|i| {
                let mut m = FixedBitSet::with_capacity(n);
                m.insert_range(i..n);
                m
            })
            .collect(),
        used: FixedBitSet::with_capacity(n),
        scratch: FixedBitSet::with_capacity(n),
        nodes: 0,
    };
    let _ = walk.step(0, &mut visit);
    walk.nodes
}

struct LexWalk<'a> {
    family: &'a HittingFamily,
    size: usize,
    chosen: Vec<usize>,
    chosen_bits: FixedBitSet,
    tail_masks: Vec<FixedBitSet>,
    used: FixedBitSet,
    scratch: FixedBitSet,
    nodes: u64,
}

impl LexWalk<'_> {
    fn step<F>(&mut self, next: usize, visit: &mut F) -> ControlFlow<()>
    where
        F: FnMut(&[usize]) -> ControlFlow<()>,
    {
        self.nodes += 1;
        let n = self.family.n();
        let remaining = self.size - self.chosen.len();
        if remaining == 0 {
            if self.family.is_hit_by(&self.chosen_bits) {
                return visit(&self.chosen);
            }
            return ControlFlow::Continue(());
        }
        if n - next < remaining {
            return ControlFlow::Continue(());
        }
        // every unhit set needs a member in next..n, and pairwise-disjoint
        // unhit sets each need their own vertex
        let mut packing = 0;
        self.used.clear();
        for (idx, set) in self.family.sets.iter().enumerate() {
            if !set.is_disjoint(&self.chosen_bits) {
                continue;
            }
            if self.family.maxima[idx] < next {
                return ControlFlow::Continue(());
            }
            self.scratch.clone_from(set);
            self.scratch.intersect_with(&self.tail_masks[next]);
            if self.scratch.is_disjoint(&self.used) {
                packing += 1;
                if packing > remaining {
                    return ControlFlow::Continue(());
                }
                self.used.union_with(&self.scratch);
            }
        }
        self.chosen.push(next);
        self.chosen_bits.insert(next);
        let flow = self.step(next + 1, visit);
        self.chosen.pop();
        self.chosen_bits.set(next, false);
        flow?;
        self.step(next + 1, visit)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{andrasfai, complete, cycle, path};
    use crate::metric::distance_matrix;

    fn family(g: &crate::graph::Graph) -> HittingFamily {
        HittingFamily::new(&distance_matrix(g).unwrap(), &[])
    }

    fn all_of_size(f: &HittingFamily, size: usize) -> Vec<Vec<usize>> {
        let mut out = Vec::new();
        for_each_hitting_set(f, size, |w| {
            out.push(w.to_vec());
            ControlFlow::Continue(())
        });
        out
    }

    #[test]
    fn reduction_drops_supersets() {
        // K3: distinguisher sets are exactly the three pairs
        let f = family(&complete(3).unwrap());
        assert_eq!(f.len(), 3);
        assert!(f.sets().iter().all(|s| s.count_ones(..) == 2));
    }

    #[test]
    fn enumerator_matches_brute_force() {
        let g = cycle(4).unwrap();
        let dm = distance_matrix(&g).unwrap();
        let f = family(&g);
        let brute: Vec<Vec<usize>> = (0..4)
            .flat_map(|a| (a + 1..4).map(move |b| vec![a, b]))
            .filter(|w| crate::metric::resolving_certificate(&dm, w).unwrap().is_resolving())
            .collect();
        assert_eq!(all_of_size(&f, 2), brute);
        assert!(brute.contains(&vec![0, 1]));
        assert_eq!(all_of_size(&family(&path(2).unwrap()), 1), vec![vec![0], vec![1]]);
        assert!(all_of_size(&family(&andrasfai(3).unwrap()), 2).is_empty());
    }

    #[test]
    fn branch_and_bound_decides() {
        let f = family(&andrasfai(4).unwrap());
        let budget = BudgetTracker::new(None, None);
        let (out, c) = BranchAndBound::new(&f, &budget).search(&[], 3);
        assert_eq!(out, Outcome::Exhausted);
        assert!(c.nodes > 0);
        let bb = BranchAndBound::new(&f, &budget);
        match bb.search(&[], 4).0 {
            Outcome::Found(w) => {
                assert_eq!(w.len(), 4);
                let mut bits = FixedBitSet::with_capacity(11);
                bits.extend(w);
                assert!(f.is_hit_by(&bits));
            }
            other => panic!("{other:?}"),
        }
    }

    #[test]
    fn budget_trips() {
        let f = family(&andrasfai(6).unwrap());
        let budget = BudgetTracker::new(Some(5), None);
        let (out, _) = BranchAndBound::new(&f, &budget).search(&[], 5);
        assert_eq!(out, Outcome::OutOfBudget);
    }
}
