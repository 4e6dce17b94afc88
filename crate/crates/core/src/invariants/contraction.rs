use std::collections::BTreeSet;

use crate::error::{Error, Result};
use crate::graph::{UnderlyingGraph, VertexId};

use super::cycles::cycles_vertex_disjoint;

/// Forest obtained by collapsing every cycle of a graph whose cycles are
/// pairwise vertex-disjoint.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ContractionResult {
    /// The contracted forest.
    pub t_g: UnderlyingGraph,
    /// Vertices of `t_g` that stand for a collapsed cycle.
    pub w_g: BTreeSet<VertexId>,
    /// Original vertices lying on some cycle.
    pub o_g: BTreeSet<VertexId>,
    /// Subforest of `t_g` induced by the non-cyclic vertices.
    pub bracket_t_g: UnderlyingGraph,
    /// Image in `t_g` of every original vertex.
    pub vertex_map: Vec<VertexId>,
}

/// Collapses each cycle to a single cyclic vertex. Original vertices keep
/// their relative order; a cycle takes the slot of its smallest vertex.
///
/// Fails with [`Error::CyclesNotDisjoint`] when two cycles share a vertex,
/// since the forest is not defined then.
pub fn contract_cycles(g: &UnderlyingGraph) -> Result<ContractionResult> {
    let cycles = cycles_vertex_disjoint(g).ok_or(Error::CyclesNotDisjoint)?;
    let n = g.order();
    let mut cycle_of = vec![None; n];
    for (i, c) in cycles.iter().enumerate() {
        for &v in c {
            cycle_of[v] = Some(i);
        }
    }
    let mut vertex_map = vec![usize::MAX; n];
    let mut cycle_slot = vec![None; cycles.len()];
    let mut w_g = BTreeSet::new();
    let mut next = 0;
    for v in 0..n {
        match cycle_of[v] {
            None => {
                vertex_map[v] = next;
                next += 1;
            }
            Some(i) => {
                let slot = *cycle_slot[i].get_or_insert_with(|| {
                    w_g.insert(next);
                    next += 1;
                    next - 1
                });
                vertex_map[v] = slot;
            }
        }
    }
    let cycle_edge = |u: VertexId, v: VertexId| cycle_of[u].is_some() && cycle_of[u] == cycle_of[v];
    let mut edges = BTreeSet::new();
    for &(u, v) in g.edges() {
        if cycle_edge(u, v) {
            continue;
        }
        let (a, b) = (vertex_map[u], vertex_map[v]);
        assert_ne!(a, b, "chord ({u},{v}) survived contraction");
        assert!(edges.insert((a.min(b), a.max(b))), "contraction produced a multiple edge at ({u},{v})");
    }
    let t_g = UnderlyingGraph::new(next, edges)?;
    debug_assert_eq!(super::cycles::cyclomatic_number(&t_g), 0);
    let keep: BTreeSet<_> = (0..next).filter(|v| !w_g.contains(v)).collect();
    let (bracket_t_g, _) = t_g.induced_subgraph(&keep)?;
    let o_g = (0..n).filter(|&v| cycle_of[v].is_some()).collect();
    Ok(ContractionResult { t_g, w_g, o_g, bracket_t_g, vertex_map })
}
