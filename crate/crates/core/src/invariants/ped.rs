//! Pendant edge deletion: remove a degree-1 vertex together with its
//! neighbour. The nullity of a mixed graph is unchanged by this step.

use std::collections::BTreeSet;

use crate::error::{Error, Result};
use crate::graph::{IndexMap, MixedGraph, VertexId};

use super::cycles::cycle_membership;

/// One pendant edge deletion.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PedStep {
    pub pendant: VertexId,
    pub neighbor: VertexId,
    pub graph: MixedGraph,
    pub map: IndexMap,
}

fn delete_pair(g: &MixedGraph, x: VertexId) -> PedStep {
    let y = g.pendant_neighbor(x).expect("pendant vertex has one neighbour");
    let (graph, map) = g.delete_vertices(&BTreeSet::from([x, y])).expect("vertices in range");
    PedStep { pendant: x, neighbor: y, graph, map }
}

/// Deletes the lowest-indexed pendant vertex and its neighbour.
pub fn ped(g: &MixedGraph) -> Result<PedStep> {
    let x = *g.pendant_vertices().iter().next().ok_or(Error::NoPendant)?;
    Ok(delete_pair(g, x))
}

/// Applies pendant edge deletion until no pendant vertex is left. At each
/// step the lowest-indexed pendant whose neighbour lies on no cycle is
/// preferred; failing that, the lowest-indexed pendant is taken.
pub fn ped_closure(g: &MixedGraph) -> MixedGraph {
    ped_closure_steps(g).last().map(|s| s.graph.clone()).unwrap_or_else(|| g.clone())
}

/// All steps taken by [`ped_closure`], in order.
pub fn ped_closure_steps(g: &MixedGraph) -> Vec<PedStep> {
    let mut steps: Vec<PedStep> = Vec::new();
    loop {
        let cur = steps.last().map_or(g, |s| &s.graph);
        let pendants = cur.pendant_vertices();
        if pendants.is_empty() {
            return steps;
        }
        let on_cycle = cycle_membership(&cur.underlying()).on_cycle;
        let x = pendants
            .iter()
            .copied()
            .find(|&x| !on_cycle[cur.pendant_neighbor(x).expect("pendant")])
            .unwrap_or_else(|| *pendants.iter().next().unwrap());
        let step = delete_pair(cur, x);
        steps.push(step);
    }
}
