//! Combinatorial invariants of the underlying graph.

mod contraction;
mod cycles;
mod matching;
mod ped;

pub use contraction::{contract_cycles, ContractionResult};
pub use cycles::{
    blocks, component_labels, components, cycle_membership, cycles_vertex_disjoint, cyclomatic_number, girth,
    is_connected, signature, Block, CycleMembership, CycleWithSignature, Girth,
};
pub use matching::{matching_bruteforce, matching_number, matching_number_without, Matching, BRUTEFORCE_EDGE_LIMIT};
pub use ped::{ped, ped_closure, ped_closure_steps, PedStep};

use serde::Serialize;

use crate::graph::MixedGraph;

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct StructureReport {
    /// Matching number.
    pub m: usize,
    /// Cyclomatic number.
    pub c: usize,
    /// Number of connected components.
    pub omega: usize,
    pub girth: Girth,
    pub cycles_vertex_disjoint: bool,
    /// Present only when the cycles are pairwise vertex-disjoint.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub cycles: Option<Vec<CycleWithSignature>>,
}

/// Mixed-graph cycles with signatures, if the cycles are vertex-disjoint.
pub fn signed_cycles(g: &MixedGraph) -> Option<Vec<CycleWithSignature>> {
    let cycles = cycles_vertex_disjoint(&g.underlying())?;
    Some(
        cycles
            .iter()
            .map(|c| signature(g, c).expect("block cycles are cycles of the graph"))
            .collect(),
    )
}

pub fn structure_report(g: &MixedGraph) -> StructureReport {
    let u = g.underlying();
    let cycles = signed_cycles(g);
    StructureReport {
        m: matching_number(&u).0,
        c: cyclomatic_number(&u),
        omega: components(&u),
        girth: girth(&u),
        cycles_vertex_disjoint: cycles.is_some(),
        cycles,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::EdgeState::*;

    #[test]
    fn report_for_triangle_with_tail() {
        let g = MixedGraph::new(4, [(0, 1, Forward), (1, 2, Forward), (0, 2, Undirected), (2, 3, Backward)]).unwrap();
        let r = structure_report(&g);
        assert_eq!((r.m, r.c, r.omega, r.girth), (2, 1, 1, Girth::Finite(3)));
        let cycles = r.cycles.unwrap();
        assert_eq!(cycles.len(), 1);
        assert_eq!(cycles[0].vertices, vec![0, 1, 2]);
        assert_eq!((cycles[0].f, cycles[0].b, cycles[0].sigma), (2, 0, 2));
    }

    #[test]
    fn report_omits_cycles_when_shared() {
        let k4 = MixedGraph::new(4, [(0, 1, Undirected), (0, 2, Undirected), (0, 3, Undirected), (1, 2, Undirected), (1, 3, Undirected), (2, 3, Undirected)])
            .unwrap();
        let r = structure_report(&k4);
        assert!(!r.cycles_vertex_disjoint && r.cycles.is_none());
        let json = serde_json::to_string(&r).unwrap();
        assert!(!json.contains("\"cycles\""));
        assert_eq!(serde_json::to_value(structure_report(&MixedGraph::empty(2))).unwrap()["girth"], "inf");
    }
}
