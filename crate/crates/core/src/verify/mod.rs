//! Exhaustive verification over small graphs and all their orientations.

mod canon;
mod checks;
pub mod graph6;
mod report;

pub use canon::{canonical_form, canonical_graph, enumerate_graphs, is_isomorphic, relabel, CANON_MAX_ORDER, ENUMERATION_MAX_ORDER};
pub use report::{VerificationReport, Violation, VIOLATION_CAP};

use rayon::prelude::*;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::{EdgeState, MixedGraph, UnderlyingGraph};

use checks::GraphContext;

/// Default orientation budget per graph: `3^13`.
pub const DEFAULT_ORIENTATION_CAP: u64 = 1_594_323;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct EnumerationScope {
    /// Smallest order enumerated.
    pub n_min: usize,
    pub n_max: usize,
    pub e_max: usize,
    pub connected_only: bool,
    /// Largest `3^|E|` accepted for a single graph.
    pub orientation_cap: u64,
    /// Check only one of each orientation and its reverse.
    pub halve: bool,
}

impl Default for EnumerationScope {
    fn default() -> Self {
        EnumerationScope {
            n_min: 1,
            n_max: 6,
            e_max: 9,
            connected_only: true,
            orientation_cap: DEFAULT_ORIENTATION_CAP,
            halve: false,
        }
    }
}

impl EnumerationScope {
    pub fn new(n_max: usize, e_max: usize) -> Self {
        EnumerationScope { n_max, e_max, ..Default::default() }
    }

    /// Graphs of exactly `n` vertices.
    pub fn exact_order(n: usize, e_max: usize) -> Self {
        EnumerationScope { n_min: n, n_max: n, e_max, ..Default::default() }
    }

    pub fn validate(&self) -> Result<()> {
        if self.n_max > ENUMERATION_MAX_ORDER {
            return Err(Error::TooLarge(format!("n_max = {} exceeds {ENUMERATION_MAX_ORDER}", self.n_max)));
        }
        if self.n_min == 0 || self.n_min > self.n_max {
            return Err(Error::InvalidParameter(format!("need 1 ≤ n_min ≤ n_max, got {}..{}", self.n_min, self.n_max)));
        }
        let edges = self.e_max.min(self.n_max * (self.n_max - 1) / 2);
        check_cap(edges, self.orientation_cap)
    }
}

fn orientation_count(edges: usize) -> Option<u64> {
    3u64.checked_pow(edges.try_into().ok()?)
}

fn check_cap(edges: usize, cap: u64) -> Result<()> {
    match orientation_count(edges) {
        Some(k) if k <= cap => Ok(()),
        _ => Err(Error::TooLarge(format!("3^{edges} orientations exceed the cap of {cap}"))),
    }
}

fn state_code(s: EdgeState) -> usize {
    EdgeState::ALL.iter().position(|&t| t == s).expect("listed state")
}

/// Edge states for orientation number `index`, first edge most significant.
fn decode_orientation(mut index: u64, edges: usize, out: &mut [EdgeState]) {
    for slot in out[..edges].iter_mut().rev() {
        *slot = EdgeState::ALL[(index % 3) as usize];
        index /= 3;
    }
}

/// Whether `states` is the representative of its pair under reversal of
/// every directed edge: the lexicographically smaller of the two.
fn is_reversal_representative(states: &[EdgeState]) -> bool {
    for &s in states {
        let (a, b) = (state_code(s), state_code(s.reversed()));
        if a != b {
            return a < b;
        }
    }
    true
}

/// Calls `f` on every orientation's edge states in a fixed order.
fn for_each_orientation(edges: usize, halve: bool, mut f: impl FnMut(&[EdgeState])) {
    let total = orientation_count(edges).expect("checked against the cap");
    let mut states = vec![EdgeState::Undirected; edges];
    for index in 0..total {
        decode_orientation(index, edges, &mut states);
        if !halve || is_reversal_representative(&states) {
            f(&states);
        }
    }
}

/// All `3^|E|` orientations of `g` (or one of each reversal pair when
/// `halve` is set), in a fixed order.
pub fn enumerate_orientations(g: &UnderlyingGraph, cap: u64, halve: bool) -> Result<Vec<MixedGraph>> {
    check_cap(g.size(), cap)?;
    let mut out = Vec::new();
    for_each_orientation(g.size(), halve, |s| out.push(g.orient(s)));
    Ok(out)
}

pub fn enumerate_underlying(scope: &EnumerationScope) -> Result<Vec<UnderlyingGraph>> {
    scope.validate()?;
    enumerate_graphs(scope.n_min, scope.n_max, scope.e_max, scope.connected_only)
}

/// Runs every check on `g` and each of its orientations.
pub fn verify_graph(g: &UnderlyingGraph, halve: bool) -> VerificationReport {
    let ctx = GraphContext::new(g);
    let mut report = VerificationReport { graphs_checked: 1, ..Default::default() };
    ctx.check_structure(&mut report);
    for_each_orientation(g.size(), halve, |s| ctx.check_orientation(s, &mut report));
    report.normalize();
    report
}

/// Runs every check on one given orientation only.
pub fn verify_mixed(g: &MixedGraph) -> VerificationReport {
    let u = g.underlying();
    let ctx = GraphContext::new(&u);
    let mut report = VerificationReport { graphs_checked: 1, ..Default::default() };
    ctx.check_structure(&mut report);
    ctx.check_orientation(&g.states(), &mut report);
    report.normalize();
    report
}

/// Verifies an explicit list of graphs on `jobs` worker threads.
pub fn verify_graphs(graphs: &[UnderlyingGraph], orientation_cap: u64, halve: bool, jobs: usize) -> Result<VerificationReport> {
    for g in graphs {
        check_cap(g.size(), orientation_cap)?;
    }
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(jobs.max(1))
        .build()
        .map_err(|e| Error::InvalidParameter(format!("cannot start worker pool: {e}")))?;
    Ok(pool.install(|| {
        graphs
            .par_iter()
            .map(|g| verify_graph(g, halve))
            .reduce(VerificationReport::default, VerificationReport::merge)
    }))
}

/// Enumerates the scope and verifies every graph in it.
pub fn verify_all(scope: &EnumerationScope, jobs: usize) -> Result<VerificationReport> {
    let graphs = enumerate_underlying(scope)?;
    verify_graphs(&graphs, scope.orientation_cap, scope.halve, jobs)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families::gen_d;
    use crate::linalg::rank;

    fn cycle(n: usize) -> UnderlyingGraph {
        UnderlyingGraph::new(n, (0..n).map(|i| (i, (i + 1) % n))).unwrap()
    }

    #[test]
    fn orientation_counts() {
        let edge = UnderlyingGraph::new(2, [(0, 1)]).unwrap();
        assert_eq!(enumerate_orientations(&edge, 100, false).unwrap().len(), 3);
        assert_eq!(enumerate_orientations(&gen_d(), 1000, false).unwrap().len(), 729);
        assert!(enumerate_orientations(&gen_d(), 728, false).is_err());
        let c3 = enumerate_orientations(&cycle(3), 100, false).unwrap();
        assert_eq!(c3.len(), 27);
        let full_rank = c3
            .iter()
            .filter(|g| crate::invariants::signature(g, &[0, 1, 2]).unwrap().sigma.is_multiple_of(2))
            .inspect(|g| assert_eq!(rank(g), 3))
            .count();
        assert!(full_rank > 0);
    }

    #[test]
    fn orientations_are_distinct_and_ordered() {
        let all = enumerate_orientations(&cycle(4), 100, false).unwrap();
        let set: std::collections::BTreeSet<_> = all.iter().map(|g| g.to_text()).collect();
        assert_eq!(set.len(), 81);
        assert!(all[0].edges().iter().all(|e| e.state == EdgeState::Undirected));
    }

    #[test]
    fn halving_keeps_one_of_each_reversal_pair() {
        let g = cycle(4);
        let half = enumerate_orientations(&g, 100, true).unwrap();
        assert_eq!(half.len(), 81_usize.div_ceil(2));
        let texts: std::collections::BTreeSet<_> = half.iter().map(|g| g.to_text()).collect();
        for h in &half {
            let r = h.reversed();
            assert!(r == *h || !texts.contains(&r.to_text()));
        }
    }

    #[test]
    fn scope_guards() {
        assert!(EnumerationScope::new(9, 9).validate().is_err());
        assert!(EnumerationScope::new(6, 9).validate().is_ok());
        assert!(EnumerationScope::new(8, 28).validate().is_err());
        assert!(EnumerationScope { n_min: 0, ..Default::default() }.validate().is_err());
    }

    #[test]
    fn small_scope_is_clean() {
        let r = verify_all(&EnumerationScope::new(4, 6), 1).unwrap();
        assert!(r.is_clean(), "{}", r.to_json());
        assert_eq!(r.graphs_checked, 1 + 1 + 2 + 6);
        assert!(r.s_histogram.keys().all(|&(c, s)| s != 1 && (0..=3 * c as i64).contains(&s)));
    }

    #[test]
    fn all_graphs_mode_covers_disconnected_graphs() {
        let scope = EnumerationScope { connected_only: false, ..EnumerationScope::new(4, 6) };
        let r = verify_all(&scope, 1).unwrap();
        assert!(r.is_clean(), "{}", r.to_json());
        assert_eq!(r.graphs_checked, 1 + 2 + 4 + 11);
    }

    #[test]
    fn worker_count_does_not_change_the_report() {
        let scope = EnumerationScope::new(5, 6);
        let one = verify_all(&scope, 1).unwrap();
        assert_eq!(one, verify_all(&scope, 3).unwrap());
        assert_eq!(one.to_json(), verify_all(&scope, 1).unwrap().to_json());
    }

    #[test]
    fn halving_preserves_the_verdict() {
        let scope = EnumerationScope { halve: true, ..EnumerationScope::new(4, 6) };
        let half = verify_all(&scope, 1).unwrap();
        let full = verify_all(&EnumerationScope::new(4, 6), 1).unwrap();
        assert!(half.is_clean());
        assert!(half.orientations_checked < full.orientations_checked);
        assert_eq!(half.s_histogram.keys().collect::<Vec<_>>(), full.s_histogram.keys().collect::<Vec<_>>());
    }

    #[test]
    fn graph_d_minimum_rank() {
        let r = verify_graph(&gen_d(), false);
        assert_eq!(r.orientations_checked, 729);
        assert!(r.min_rank_graph_d.unwrap() >= 2);
        assert!(r.is_clean());
    }
}
