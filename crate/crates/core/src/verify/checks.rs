//! Per-graph and per-orientation checks run by the verifier.

use std::collections::BTreeSet;
use std::sync::OnceLock;

use crate::characterization::{contracted_matching_condition, cycle_rank, BoundParams, IncidenceReading, UnicyclicTable};
use crate::graph::{EdgeState, MixedGraph, UnderlyingGraph, VertexId};
use crate::invariants::{
    component_labels, contract_cycles, cycle_membership, cycles_vertex_disjoint, cyclomatic_number, matching_bruteforce,
    matching_number, matching_number_without, ped_closure_steps, signature, CycleMembership, BRUTEFORCE_EDGE_LIMIT,
};
use crate::linalg::{int_rank, two_paths, IntMatrix};

use super::canon::canonical_form;
use super::graph6;
use super::report::{VerificationReport, Violation};

fn graph_d_code() -> u64 {
    static CODE: OnceLock<u64> = OnceLock::new();
    *CODE.get_or_init(|| canonical_form(&crate::families::gen_d()).0)
}

/// Orientation-independent data for one underlying graph.
pub(crate) struct GraphContext<'a> {
    g: &'a UnderlyingGraph,
    graph6: String,
    params: BoundParams,
    /// Vertex sets of the components, when there are at least two.
    components: Vec<Vec<VertexId>>,
    membership: CycleMembership,
    pendant_pairs: Vec<(VertexId, VertexId)>,
    quasi_pendant_on_cycle: bool,
    cycles: Option<Vec<Vec<VertexId>>>,
    cond_iii: Option<bool>,
    /// Traversal order when the graph is a single cycle.
    cycle_order: Option<Vec<VertexId>>,
    unicyclic: Option<(UnicyclicTable, UnicyclicTable)>,
    is_graph_d: bool,
    /// Vertices surviving the pendant-deletion closure.
    closure_keep: Vec<VertexId>,
}

impl<'a> GraphContext<'a> {
    pub fn new(g: &'a UnderlyingGraph) -> Self {
        let n = g.order();
        let params = BoundParams::of(g);
        let (labels, count) = component_labels(g);
        let components = if count > 1 {
            (0..count).map(|k| (0..n).filter(|&v| labels[v] == k).collect()).collect()
        } else {
            Vec::new()
        };
        let membership = cycle_membership(g);
        let pendant_pairs: Vec<_> = (0..n).filter(|&v| g.degree(v) == 1).map(|v| (v, g.neighbors(v)[0])).collect();
        let quasi_pendant_on_cycle = pendant_pairs.iter().any(|&(_, y)| membership.on_cycle[y]);
        let cycles = cycles_vertex_disjoint(g);
        let cond_iii = contracted_matching_condition(g);
        let connected = count <= 1;
        let is_cycle = connected && n >= 3 && g.size() == n && (0..n).all(|v| g.degree(v) == 2);
        let cycle_order = is_cycle.then(|| cycles.as_ref().expect("a cycle has one cycle")[0].clone());
        let unicyclic = (connected && params.c == 1).then(|| {
            (
                UnicyclicTable::new(g, IncidenceReading::Attached).expect("unicyclic"),
                UnicyclicTable::new(g, IncidenceReading::AnyEndpoint).expect("unicyclic"),
            )
        });
        let is_graph_d = n == 5 && g.size() == 6 && canonical_form(g).0 == graph_d_code();

        let mut closure_keep: Vec<VertexId> = (0..n).collect();
        for step in ped_closure_steps(&g.to_mixed()) {
            let mut next = vec![0; step.graph.order()];
            for (old, new) in step.map.iter().enumerate() {
                if let Some(new) = new {
                    next[*new] = closure_keep[old];
                }
            }
            closure_keep = next;
        }

        GraphContext {
            g,
            graph6: graph6::encode(g),
            params,
            components,
            membership,
            pendant_pairs,
            quasi_pendant_on_cycle,
            cycles,
            cond_iii,
            cycle_order,
            unicyclic,
            is_graph_d,
            closure_keep,
        }
    }

    fn violation(&self, check: &str, mixed: Option<(&[EdgeState], &MixedGraph)>, detail: String) -> Violation {
        Violation {
            check: check.into(),
            graph6: self.graph6.clone(),
            orientation: mixed.map(|(s, _)| s.iter().map(|s| s.symbol()).collect()),
            mixed_graph: mixed.map(|(_, g)| g.to_text()),
            detail,
        }
    }

    /// Matching and cyclomatic-number facts about the underlying graph.
    pub fn check_structure(&self, report: &mut VerificationReport) {
        let g = self.g;
        let n = g.order();
        let m = self.params.m;
        let c = self.params.c;
        let mut fail = |check: &str, detail: String| report.push_violation(self.violation(check, None, detail));

        let (m_blossom, witness) = matching_number(g);
        if !(witness.is_valid(g) && witness.is_maximum(g) && witness.len() == m_blossom) {
            fail("matching_certified", format!("blossom matching {:?} is not a certified maximum", witness.edges()));
        }
        if g.size() <= BRUTEFORCE_EDGE_LIMIT {
            let brute = matching_bruteforce(g).expect("within limit");
            if brute != m_blossom {
                fail("matching_certified", format!("blossom {m_blossom} but exhaustive search {brute}"));
            }
        }
        for v in 0..n {
            let mv = matching_number_without(g, &[v]);
            if mv > m || mv + 1 < m {
                fail("matching_vertex_deletion", format!("m = {m} but m(G - {v}) = {mv}"));
            }
            let (h, _) = g.delete_vertices(&BTreeSet::from([v])).expect("vertex in range");
            let cv = cyclomatic_number(&h);
            // Two cycles through v may share edges at v (a degree-2 vertex of
            // a theta graph), and then c drops by one only. The bound of two
            // is checked when v joins two blocks that each carry a cycle.
            let on_cycle = self.membership.on_cycle[v];
            let ok = cv + self.membership.cyclomatic_drop[v] == c
                && (on_cycle || cv == c)
                && (!on_cycle || cv < c)
                && (self.membership.cyclic_blocks[v] < 2 || cv + 2 <= c);
            if !ok {
                fail("cyclomatic_vertex_deletion", format!("c = {c} but c(G - {v}) = {cv}"));
            }
        }
        for &(x, y) in &self.pendant_pairs {
            let my = matching_number_without(g, &[y]);
            let mxy = matching_number_without(g, &[x, y]);
            if my + 1 != m || mxy + 1 != m {
                fail("pendant_matching", format!("pendant {x} at {y}: m = {m}, m(G - y) = {my}, m(G - x - y) = {mxy}"));
            }
        }
        if let Some(cycles) = &self.cycles {
            match contract_cycles(g) {
                Ok(r) if cyclomatic_number(&r.t_g) == 0 && r.w_g.len() == cycles.len() => {}
                other => fail("contraction_forest", format!("contraction gave {other:?}")),
            }
        }
    }

    /// Every spectral check for one orientation.
    pub fn check_orientation(&self, states: &[EdgeState], report: &mut VerificationReport) {
        let g = self.g;
        let n = g.order();
        let BoundParams { m, c, .. } = self.params;
        let mixed = g.orient(states);
        let mat = IntMatrix::adjacency(&mixed);
        let (rank, summary) = two_paths(&mat);
        let eta = n - rank;
        let bounds = self.params.with_nullity(eta);
        let s = bounds.s;

        report.orientations_checked += 1;
        *report.s_histogram.entry((c, s)).or_default() += 1;
        let tree_gap = eta as i64 - (n as i64 - 2 * m as i64);
        let e = report.min_eta_minus_tree_value.entry(c).or_insert(tree_gap);
        *e = (*e).min(tree_gap);

        let mut failures: Vec<(&str, String)> = Vec::new();
        let mut fail = |check: &'static str, detail: String| failures.push((check, detail));

        if summary.rank != rank || summary.positive + summary.negative != rank {
            fail("spectral_agreement", format!("elimination rank {rank}, characteristic polynomial gives {summary:?}"));
        }
        if !bounds.holds() {
            fail("nullity_bounds", format!("{bounds:?}"));
        }
        if s == 1 {
            fail("forbidden_gap", format!("η = {eta} is one below the upper bound {}", bounds.upper));
        }

        let signed = self
            .cycles
            .as_ref()
            .map(|cs| cs.iter().map(|cyc| signature(&mixed, cyc).expect("block cycle")).collect::<Vec<_>>());
        let verdict = crate::characterization::UpperBoundVerdict::from_parts(signed.as_deref(), || {
            self.cond_iii.expect("defined when cycles are disjoint")
        });
        if verdict.attains != (s == 0) {
            fail("upper_bound_characterization", format!("{verdict:?} but s = {s}"));
        }

        if let Some(order) = &self.cycle_order {
            let sigma = signature(&mixed, order).expect("cycle").sigma;
            let want = cycle_rank(n, sigma).expect("valid cycle");
            if want != rank {
                fail("cycle_rank", format!("n = {n}, σ = {sigma}: table {want}, exact {rank}"));
            }
        }

        if let Some((attached, any_endpoint)) = &self.unicyclic {
            let sigma = signature(&mixed, &attached.cycle).expect("cycle").sigma;
            let exact = (summary.positive, summary.negative);
            report.unicyclic_checked += 1;
            let (case, p, q) = attached.predict(sigma);
            if (p, q) != exact {
                report.unicyclic_mismatches += 1;
                fail("unicyclic_inertia", format!("σ = {sigma}: table {case:?} ({p}, {q}), exact {exact:?}"));
            }
            let (_, p, q) = any_endpoint.predict(sigma);
            if (p, q) != exact {
                report.unicyclic_any_endpoint_mismatches += 1;
            }
        }

        for x in 0..n {
            let r = int_rank(&mat.without(x));
            if r > rank {
                fail("induced_subgraph_rank", format!("rank {rank} but rank(G - {x}) = {r}"));
            }
            let eta_x = n - 1 - r;
            if eta_x.abs_diff(eta) > 1 {
                fail("vertex_deletion_nullity", format!("η = {eta} but η(G - {x}) = {eta_x}"));
            }
        }

        for &(x, y) in &self.pendant_pairs {
            let keep: Vec<_> = (0..n).filter(|&v| v != x && v != y).collect();
            let eta_xy = keep.len() - int_rank(&mat.principal_submatrix(&keep));
            if eta_xy != eta {
                fail("pendant_deletion_nullity", format!("η = {eta} but η(G - {x} - {y}) = {eta_xy}"));
            }
        }

        if !self.components.is_empty() {
            let total: usize = self.components.iter().map(|k| int_rank(&mat.principal_submatrix(k))).sum();
            if total != rank {
                fail("component_rank_additivity", format!("rank {rank} but components sum to {total}"));
            }
        }

        if c == 0 && rank != 2 * m {
            fail("tree_rank", format!("forest with m = {m} has rank {rank}"));
        }

        if self.is_graph_d {
            report.min_rank_graph_d = Some(report.min_rank_graph_d.map_or(rank, |r| r.min(rank)));
            if rank < 2 {
                fail("graph_d_rank", format!("rank {rank}"));
            }
        }

        if self.quasi_pendant_on_cycle && s < 2 {
            fail("quasi_pendant_on_cycle", format!("s = {s} with a pendant attached to a cycle"));
        }

        let keep = &self.closure_keep;
        let eta_closure = keep.len() - int_rank(&mat.principal_submatrix(keep));
        if eta_closure != eta {
            fail("ped_closure_nullity", format!("η = {eta} but the pendant-free reduction has η = {eta_closure}"));
        }

        for (check, detail) in failures {
            report.push_violation(self.violation(check, Some((states, &mixed)), detail));
        }
    }
}
