//! Components, cyclomatic number, girth, block decomposition and cycle
//! signatures.

use std::collections::{BTreeSet, VecDeque};
use std::fmt;

use serde::{Serialize, Serializer};

use crate::error::{Error, Result};
use crate::graph::{EdgeState, MixedGraph, UnderlyingGraph, VertexId};

/// Component index of every vertex, and the number of components.
pub fn component_labels(g: &UnderlyingGraph) -> (Vec<usize>, usize) {
    let mut label = vec![usize::MAX; g.order()];
    let mut count = 0;
    for s in 0..g.order() {
        if label[s] != usize::MAX {
            continue;
        }
        label[s] = count;
        let mut stack = vec![s];
        while let Some(v) = stack.pop() {
            for &w in g.neighbors(v) {
                if label[w] == usize::MAX {
                    label[w] = count;
                    stack.push(w);
                }
            }
        }
        count += 1;
    }
    (label, count)
}

pub fn components(g: &UnderlyingGraph) -> usize {
    component_labels(g).1
}

pub fn is_connected(g: &UnderlyingGraph) -> bool {
    components(g) <= 1
}

/// `|E| - |V| + ω`.
pub fn cyclomatic_number(g: &UnderlyingGraph) -> usize {
    g.size() + components(g) - g.order()
}

/// Length of a shortest cycle; forests have infinite girth.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Girth {
    Finite(usize),
    Infinite,
}

impl fmt::Display for Girth {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Girth::Finite(n) => write!(f, "{n}"),
            Girth::Infinite => write!(f, "inf"),
        }
    }
}

impl Serialize for Girth {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        match self {
            Girth::Finite(n) => s.serialize_u64(*n as u64),
            Girth::Infinite => s.serialize_str("inf"),
        }
    }
}

pub fn girth(g: &UnderlyingGraph) -> Girth {
    let n = g.order();
    let mut best = usize::MAX;
    for root in 0..n {
        let mut dist = vec![usize::MAX; n];
        let mut parent = vec![usize::MAX; n];
        dist[root] = 0;
        let mut queue = VecDeque::from([root]);
        while let Some(v) = queue.pop_front() {
            for &w in g.neighbors(v) {
                if dist[w] == usize::MAX {
                    dist[w] = dist[v] + 1;
                    parent[w] = v;
                    queue.push_back(w);
                } else if parent[v] != w {
                    best = best.min(dist[v] + dist[w] + 1);
                }
            }
        }
    }
    if best == usize::MAX {
        Girth::Infinite
    } else {
        Girth::Finite(best)
    }
}

/// A biconnected component with at least one edge.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Block {
    pub vertices: BTreeSet<VertexId>,
    pub edges: Vec<(VertexId, VertexId)>,
}

impl Block {
    pub fn is_bridge(&self) -> bool {
        self.edges.len() == 1
    }

    /// A biconnected block with as many edges as vertices is a single cycle.
    pub fn is_cycle(&self) -> bool {
        self.edges.len() >= 3 && self.edges.len() == self.vertices.len()
    }
}

/// Biconnected components by Hopcroft–Tarjan on an explicit edge stack.
pub fn blocks(g: &UnderlyingGraph) -> Vec<Block> {
    struct Dfs<'a> {
        g: &'a UnderlyingGraph,
        disc: Vec<usize>,
        low: Vec<usize>,
        time: usize,
        stack: Vec<(VertexId, VertexId)>,
        out: Vec<Block>,
    }

    impl Dfs<'_> {
        fn visit(&mut self, u: VertexId, parent: Option<VertexId>) {
            self.time += 1;
            self.disc[u] = self.time;
            self.low[u] = self.time;
            for &v in self.g.neighbors(u) {
                if self.disc[v] == 0 {
                    self.stack.push((u, v));
                    self.visit(v, Some(u));
                    self.low[u] = self.low[u].min(self.low[v]);
                    if self.low[v] >= self.disc[u] {
                        let mut edges = Vec::new();
                        while let Some(e) = self.stack.pop() {
                            edges.push((e.0.min(e.1), e.0.max(e.1)));
                            if e == (u, v) {
                                break;
                            }
                        }
                        edges.sort_unstable();
                        let vertices = edges.iter().flat_map(|&(a, b)| [a, b]).collect();
                        self.out.push(Block { vertices, edges });
                    }
                } else if Some(v) != parent && self.disc[v] < self.disc[u] {
                    self.stack.push((u, v));
                    self.low[u] = self.low[u].min(self.disc[v]);
                }
            }
        }
    }

    let n = g.order();
    let mut dfs = Dfs { g, disc: vec![0; n], low: vec![0; n], time: 0, stack: Vec::new(), out: Vec::new() };
    for v in 0..n {
        if dfs.disc[v] == 0 {
            dfs.visit(v, None);
        }
    }
    let mut out = dfs.out;
    out.sort_by(|a, b| a.edges.cmp(&b.edges));
    out
}

/// Per-vertex cycle membership derived from the block decomposition.
#[derive(Debug, Clone)]
pub struct CycleMembership {
    /// Vertex lies on at least one cycle.
    pub on_cycle: Vec<bool>,
    /// Vertex lies on at least two distinct cycles.
    pub on_two_cycles: Vec<bool>,
    /// Number of blocks containing the vertex that are not bridges.
    pub cyclic_blocks: Vec<usize>,
    /// `c(G) - c(G - v)`: the sum over non-bridge blocks `B` containing `v`
    /// of `deg_B(v) - 1`.
    pub cyclomatic_drop: Vec<usize>,
}

/// A vertex lies on a cycle iff it belongs to a block that is not a bridge.
/// It lies on two distinct cycles iff it belongs to a block that is not
/// itself a cycle, or to two cyclic blocks.
pub fn cycle_membership(g: &UnderlyingGraph) -> CycleMembership {
    let n = g.order();
    let mut cyclic_blocks = vec![0usize; n];
    let mut rich = vec![false; n];
    let mut cyclomatic_drop = vec![0usize; n];
    for b in blocks(g).iter().filter(|b| !b.is_bridge()) {
        for &v in &b.vertices {
            cyclic_blocks[v] += 1;
            if !b.is_cycle() {
                rich[v] = true;
            }
            cyclomatic_drop[v] += b.edges.iter().filter(|&&(x, y)| x == v || y == v).count() - 1;
        }
    }
    CycleMembership {
        on_cycle: cyclic_blocks.iter().map(|&k| k > 0).collect(),
        on_two_cycles: (0..n).map(|v| rich[v] || cyclic_blocks[v] >= 2).collect(),
        cyclic_blocks,
        cyclomatic_drop,
    }
}

/// Walks a cycle block from its smallest vertex towards the smaller of that
/// vertex's two neighbours on the cycle.
fn cycle_sequence(block: &Block) -> Vec<VertexId> {
    let neighbors = |v: VertexId| -> Vec<VertexId> {
        let mut ns: Vec<_> = block
            .edges
            .iter()
            .filter_map(|&(a, b)| if a == v { Some(b) } else if b == v { Some(a) } else { None })
            .collect();
        ns.sort_unstable();
        ns
    };
    let start = *block.vertices.iter().next().expect("nonempty block");
    let mut seq = vec![start];
    let mut prev = start;
    let mut cur = neighbors(start)[0];
    while cur != start {
        seq.push(cur);
        let next = neighbors(cur).into_iter().find(|&w| w != prev).expect("cycle vertices have degree 2");
        prev = cur;
        cur = next;
    }
    seq
}

/// The cycles of `g` when no vertex lies on two distinct cycles, `None`
/// otherwise. Cycles are returned as vertex sequences in canonical traversal
/// order, sorted by their first vertex.
pub fn cycles_vertex_disjoint(g: &UnderlyingGraph) -> Option<Vec<Vec<VertexId>>> {
    let bs = blocks(g);
    if bs.iter().any(|b| !b.is_bridge() && !b.is_cycle()) {
        return None;
    }
    let mut seen = BTreeSet::new();
    let mut cycles = Vec::new();
    for b in bs.iter().filter(|b| b.is_cycle()) {
        if b.vertices.iter().any(|v| !seen.insert(*v)) {
            return None;
        }
        cycles.push(cycle_sequence(b));
    }
    cycles.sort();
    Some(cycles)
}

/// A mixed cycle with its forward/backward counts along the canonical
/// traversal and its signature `|f - b|`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CycleWithSignature {
    pub vertices: Vec<VertexId>,
    pub f: usize,
    pub b: usize,
    pub sigma: usize,
}

impl CycleWithSignature {
    pub fn len(&self) -> usize {
        self.vertices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vertices.is_empty()
    }
}

/// Signature of the cycle `cycle` in `g`. The sequence may start anywhere
/// and run in either direction; it is normalised to start at its smallest
/// vertex and continue towards that vertex's smaller cycle neighbour.
pub fn signature(g: &MixedGraph, cycle: &[VertexId]) -> Result<CycleWithSignature> {
    let k = cycle.len();
    if k < 3 {
        return Err(Error::NotACycle(format!("{cycle:?} has fewer than 3 vertices")));
    }
    if cycle.iter().collect::<BTreeSet<_>>().len() != k {
        return Err(Error::NotACycle(format!("{cycle:?} repeats a vertex")));
    }
    if let Some(&v) = cycle.iter().find(|&&v| v >= g.order()) {
        return Err(Error::VertexOutOfRange { vertex: v, order: g.order() });
    }
    let start = (0..k).min_by_key(|&i| cycle[i]).unwrap();
    let next = cycle[(start + 1) % k];
    let prev = cycle[(start + k - 1) % k];
    let vertices: Vec<_> = if next < prev {
        (0..k).map(|i| cycle[(start + i) % k]).collect()
    } else {
        (0..k).map(|i| cycle[(start + k - i) % k]).collect()
    };
    let (mut f, mut b) = (0, 0);
    for i in 0..k {
        let (x, y) = (vertices[i], vertices[(i + 1) % k]);
        let e = g
            .edge(x, y)
            .ok_or_else(|| Error::NotACycle(format!("{x} and {y} are not adjacent")))?;
        match e.state {
            EdgeState::Undirected => {}
            _ if e.points_from(x) => f += 1,
            _ => b += 1,
        }
    }
    Ok(CycleWithSignature { vertices, f, b, sigma: f.abs_diff(b) })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::EdgeState::*;

    fn graph(n: usize, edges: &[(usize, usize)]) -> UnderlyingGraph {
        UnderlyingGraph::new(n, edges.iter().copied()).unwrap()
    }

    fn k23() -> UnderlyingGraph {
        graph(5, &[(0, 1), (0, 2), (0, 3), (4, 1), (4, 2), (4, 3)])
    }

    /// Every cycle as a vertex set, by brute force over vertex subsets and
    /// orderings. Small graphs only.
    fn cycles_by_enumeration(g: &UnderlyingGraph) -> Vec<BTreeSet<usize>> {
        fn extend(g: &UnderlyingGraph, path: &mut Vec<usize>, out: &mut BTreeSet<Vec<usize>>) {
            let last = *path.last().unwrap();
            for &w in g.neighbors(last) {
                if w == path[0] && path.len() >= 3 {
                    let mut key = path.clone();
                    // canonical rotation/direction
                    let rev: Vec<_> = std::iter::once(key[0]).chain(key[1..].iter().rev().copied()).collect();
                    if rev < key {
                        key = rev;
                    }
                    out.insert(key);
                } else if w > path[0] && !path.contains(&w) {
                    path.push(w);
                    extend(g, path, out);
                    path.pop();
                }
            }
        }
        let mut out = BTreeSet::new();
        for s in 0..g.order() {
            extend(g, &mut vec![s], &mut out);
        }
        out.into_iter().map(|c| c.into_iter().collect()).collect()
    }

    #[test]
    fn cyclomatic_components_girth() {
        assert_eq!(cyclomatic_number(&k23()), 2);
        assert_eq!(girth(&k23()), Girth::Finite(4));
        let tree = graph(8, &[(0, 1), (1, 2), (1, 3), (3, 4), (4, 5), (0, 6), (6, 7)]);
        assert_eq!(cyclomatic_number(&tree), 0);
        assert_eq!(girth(&tree), Girth::Infinite);
        assert_eq!(components(&graph(4, &[(0, 1)])), 3);
        let c7 = graph(7, &(0..7).map(|i| (i, (i + 1) % 7)).collect::<Vec<_>>());
        assert_eq!(girth(&c7), Girth::Finite(7));
    }

    #[test]
    fn disjoint_cycle_detection() {
        // triangles 0-1-2 and 4-5-6 joined by path 2-3-4
        let g = graph(7, &[(0, 1), (1, 2), (2, 0), (2, 3), (3, 4), (4, 5), (5, 6), (6, 4)]);
        let cycles = cycles_vertex_disjoint(&g).unwrap();
        assert_eq!(cycles, vec![vec![0, 1, 2], vec![4, 5, 6]]);

        // two triangles sharing vertex 2
        let bowtie = graph(5, &[(0, 1), (1, 2), (2, 0), (2, 3), (3, 4), (4, 2)]);
        assert!(cycles_vertex_disjoint(&bowtie).is_none());
        assert!(cycles_vertex_disjoint(&k23()).is_none());
        let bs = blocks(&k23());
        assert_eq!(bs.len(), 1);
        assert_eq!(cycles_by_enumeration(&k23()).len(), 3);

        assert_eq!(cycles_vertex_disjoint(&graph(3, &[(0, 1)])), Some(vec![]));
    }

    #[test]
    fn membership_matches_enumeration() {
        let graphs = [
            k23(),
            graph(5, &[(0, 1), (1, 2), (2, 0), (2, 3), (3, 4), (4, 2)]),
            graph(7, &[(0, 1), (1, 2), (2, 0), (2, 3), (3, 4), (4, 5), (5, 6), (6, 4)]),
            graph(6, &[(0, 1), (1, 2), (2, 3), (3, 0), (0, 2), (3, 4), (4, 5)]),
        ];
        for g in &graphs {
            let cycles = cycles_by_enumeration(g);
            let m = cycle_membership(g);
            for v in 0..g.order() {
                let count = cycles.iter().filter(|c| c.contains(&v)).count();
                assert_eq!(m.on_cycle[v], count >= 1, "vertex {v}");
                assert_eq!(m.on_two_cycles[v], count >= 2, "vertex {v}");
                let (h, _) = g.delete_vertices(&BTreeSet::from([v])).unwrap();
                assert_eq!(cyclomatic_number(&h) + m.cyclomatic_drop[v], cyclomatic_number(g), "vertex {v}");
            }
        }
    }

    #[test]
    fn signature_examples() {
        let c4 = MixedGraph::new(4, (0..4).map(|i| (i, (i + 1) % 4, Undirected))).unwrap();
        let s = signature(&c4, &[0, 1, 2, 3]).unwrap();
        assert_eq!((s.f, s.b, s.sigma), (0, 0, 0));

        let c3 = MixedGraph::new(3, [(0, 1, Forward), (1, 2, Forward), (2, 0, Forward)]).unwrap();
        assert_eq!(signature(&c3, &[0, 1, 2]).unwrap().sigma, 3);

        let g = MixedGraph::new(4, [(0, 1, Forward), (1, 2, Forward), (3, 2, Forward), (3, 0, Undirected)]).unwrap();
        let s = signature(&g, &[0, 1, 2, 3]).unwrap();
        assert_eq!((s.f, s.b, s.sigma), (2, 1, 1));
        // the reverse traversal normalises to the same orientation
        assert_eq!(signature(&g, &[2, 1, 0, 3]).unwrap(), s);
    }

    #[test]
    fn signature_rejects_non_cycles() {
        let p3 = MixedGraph::new(3, [(0, 1, Undirected), (1, 2, Undirected)]).unwrap();
        assert!(matches!(signature(&p3, &[0, 1, 2]), Err(Error::NotACycle(_))));
        assert!(matches!(signature(&p3, &[0, 1]), Err(Error::NotACycle(_))));
        assert!(matches!(signature(&p3, &[0, 1, 1]), Err(Error::NotACycle(_))));
        assert!(signature(&p3, &[0, 1, 9]).is_err());
    }
}
