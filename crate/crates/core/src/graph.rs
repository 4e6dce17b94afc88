//! Mixed graphs, their underlying simple graphs, and the plain-text
//! graph format.
//!
//! Every edge is stored with its endpoints in increasing order. A directed
//! edge is recorded as [`EdgeState::Forward`] when it points from the smaller
//! endpoint to the larger one and [`EdgeState::Backward`] otherwise, so each
//! mixed graph has exactly one representation.

use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Dense 0-based vertex index.
pub type VertexId = usize;

/// Orientation state of one edge, relative to its stored endpoint order.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum EdgeState {
    Undirected,
    /// Directed from the first endpoint to the second.
    Forward,
    /// Directed from the second endpoint to the first.
    Backward,
}

impl EdgeState {
    pub const ALL: [EdgeState; 3] = [EdgeState::Undirected, EdgeState::Forward, EdgeState::Backward];

    /// The same edge seen with its endpoints swapped.
    pub fn reversed(self) -> Self {
        match self {
            EdgeState::Undirected => EdgeState::Undirected,
            EdgeState::Forward => EdgeState::Backward,
            EdgeState::Backward => EdgeState::Forward,
        }
    }

    pub fn symbol(self) -> char {
        match self {
            EdgeState::Undirected => 'u',
            EdgeState::Forward => 'f',
            EdgeState::Backward => 'b',
        }
    }

    pub fn from_symbol(c: char) -> Option<Self> {
        match c {
            'u' => Some(EdgeState::Undirected),
            'f' => Some(EdgeState::Forward),
            'b' => Some(EdgeState::Backward),
            _ => None,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct MixedEdge {
    pub u: VertexId,
    pub v: VertexId,
    pub state: EdgeState,
}

impl MixedEdge {
    /// Builds an edge in canonical form. `state` is read relative to `a -> b`.
    pub fn new(a: VertexId, b: VertexId, state: EdgeState) -> Result<Self> {
        if a == b {
            return Err(Error::Loop(a));
        }
        Ok(if a < b {
            MixedEdge { u: a, v: b, state }
        } else {
            MixedEdge { u: b, v: a, state: state.reversed() }
        })
    }

    /// True when the edge is directed from `from` to the other endpoint.
    pub fn points_from(&self, from: VertexId) -> bool {
        match self.state {
            EdgeState::Undirected => false,
            EdgeState::Forward => from == self.u,
            EdgeState::Backward => from == self.v,
        }
    }
}

fn check_edges<I>(order: usize, pairs: I) -> Result<()>
where
    I: IntoIterator<Item = (VertexId, VertexId)>,
{
    let mut seen = BTreeSet::new();
    for (u, v) in pairs {
        for x in [u, v] {
            if x >= order {
                return Err(Error::VertexOutOfRange { vertex: x, order });
            }
        }
        if u == v {
            return Err(Error::Loop(u));
        }
        let key = (u.min(v), u.max(v));
        if !seen.insert(key) {
            return Err(Error::MultiEdge(key.0, key.1));
        }
    }
    Ok(())
}

/// Old-to-new vertex index map produced by vertex deletion.
pub type IndexMap = Vec<Option<VertexId>>;

fn reindex(order: usize, removed: &BTreeSet<VertexId>) -> Result<(usize, IndexMap)> {
    if let Some(&x) = removed.iter().find(|&&x| x >= order) {
        return Err(Error::VertexOutOfRange { vertex: x, order });
    }
    let mut map = vec![None; order];
    let mut next = 0;
    for (old, slot) in map.iter_mut().enumerate() {
        if !removed.contains(&old) {
            *slot = Some(next);
            next += 1;
        }
    }
    Ok((next, map))
}

fn complement(order: usize, keep: &BTreeSet<VertexId>) -> Result<BTreeSet<VertexId>> {
    if let Some(&x) = keep.iter().find(|&&x| x >= order) {
        return Err(Error::VertexOutOfRange { vertex: x, order });
    }
    Ok((0..order).filter(|v| !keep.contains(v)).collect())
}

/// A simple undirected graph with a dense vertex set.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct UnderlyingGraph {
    order: usize,
    edges: Vec<(VertexId, VertexId)>,
    adj: Vec<Vec<VertexId>>,
}

impl UnderlyingGraph {
    pub fn new<I>(order: usize, edges: I) -> Result<Self>
    where
        I: IntoIterator<Item = (VertexId, VertexId)>,
    {
        let edges: Vec<_> = edges.into_iter().collect();
        check_edges(order, edges.iter().copied())?;
        let mut edges: Vec<_> = edges.into_iter().map(|(u, v)| (u.min(v), u.max(v))).collect();
        edges.sort_unstable();
        Ok(Self::from_sorted(order, edges))
    }

    fn from_sorted(order: usize, edges: Vec<(VertexId, VertexId)>) -> Self {
        let mut adj = vec![Vec::new(); order];
        for &(u, v) in &edges {
            adj[u].push(v);
            adj[v].push(u);
        }
        for list in &mut adj {
            list.sort_unstable();
        }
        UnderlyingGraph { order, edges, adj }
    }

    pub fn empty(order: usize) -> Self {
        Self::from_sorted(order, Vec::new())
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn size(&self) -> usize {
        self.edges.len()
    }

    pub fn edges(&self) -> &[(VertexId, VertexId)] {
        &self.edges
    }

    pub fn neighbors(&self, v: VertexId) -> &[VertexId] {
        &self.adj[v]
    }

    pub fn degree(&self, v: VertexId) -> usize {
        self.adj[v].len()
    }

    pub fn has_edge(&self, u: VertexId, v: VertexId) -> bool {
        u < self.order && self.adj[u].binary_search(&v).is_ok()
    }

    pub fn delete_vertices(&self, removed: &BTreeSet<VertexId>) -> Result<(Self, IndexMap)> {
        let (order, map) = reindex(self.order, removed)?;
        let edges = self
            .edges
            .iter()
            .filter_map(|&(u, v)| Some((map[u]?, map[v]?)))
            .collect();
        Ok((Self::from_sorted(order, edges), map))
    }

    pub fn induced_subgraph(&self, keep: &BTreeSet<VertexId>) -> Result<(Self, IndexMap)> {
        self.delete_vertices(&complement(self.order, keep)?)
    }

    /// Graph with every edge left undirected.
    pub fn to_mixed(&self) -> MixedGraph {
        let edges = self
            .edges
            .iter()
            .map(|&(u, v)| MixedEdge { u, v, state: EdgeState::Undirected })
            .collect();
        MixedGraph::from_sorted(self.order, edges)
    }

    /// Assigns `states[i]` to the i-th edge in sorted order.
    pub fn orient(&self, states: &[EdgeState]) -> MixedGraph {
        assert_eq!(states.len(), self.edges.len(), "one state per edge");
        let edges = self
            .edges
            .iter()
            .zip(states)
            .map(|(&(u, v), &state)| MixedEdge { u, v, state })
            .collect();
        MixedGraph::from_sorted(self.order, edges)
    }
}

/// A simple graph whose edges are each undirected or carry one direction.
///
/// Values are immutable after construction.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct MixedGraph {
    order: usize,
    edges: Vec<MixedEdge>,
}

impl MixedGraph {
    /// Builds a mixed graph from `(a, b, state)` triples, where `state` is
    /// relative to `a -> b`. Endpoints are canonicalised.
    pub fn new<I>(order: usize, edges: I) -> Result<Self>
    where
        I: IntoIterator<Item = (VertexId, VertexId, EdgeState)>,
    {
        let raw: Vec<_> = edges.into_iter().collect();
        check_edges(order, raw.iter().map(|&(a, b, _)| (a, b)))?;
        let mut edges = raw
            .into_iter()
            .map(|(a, b, s)| MixedEdge::new(a, b, s))
            .collect::<Result<Vec<_>>>()?;
        edges.sort_unstable();
        Ok(Self::from_sorted(order, edges))
    }

    pub(crate) fn from_sorted(order: usize, edges: Vec<MixedEdge>) -> Self {
        debug_assert!(edges.windows(2).all(|w| (w[0].u, w[0].v) < (w[1].u, w[1].v)));
        MixedGraph { order, edges }
    }

    pub fn empty(order: usize) -> Self {
        MixedGraph { order, edges: Vec::new() }
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn size(&self) -> usize {
        self.edges.len()
    }

    pub fn edges(&self) -> &[MixedEdge] {
        &self.edges
    }

    pub fn states(&self) -> Vec<EdgeState> {
        self.edges.iter().map(|e| e.state).collect()
    }

    pub fn edge(&self, a: VertexId, b: VertexId) -> Option<&MixedEdge> {
        let key = (a.min(b), a.max(b));
        self.edges
            .binary_search_by(|e| (e.u, e.v).cmp(&key))
            .ok()
            .map(|i| &self.edges[i])
    }

    pub fn underlying(&self) -> UnderlyingGraph {
        UnderlyingGraph::from_sorted(self.order, self.edges.iter().map(|e| (e.u, e.v)).collect())
    }

    /// Reverses every directed edge. The Hermitian adjacency matrix becomes
    /// its complex conjugate.
    pub fn reversed(&self) -> Self {
        let edges = self
            .edges
            .iter()
            .map(|e| MixedEdge { state: e.state.reversed(), ..*e })
            .collect();
        Self::from_sorted(self.order, edges)
    }

    /// Disjoint union; vertices of `other` are shifted by `self.order()`.
    pub fn disjoint_union(&self, other: &MixedGraph) -> Self {
        let shift = self.order;
        let mut edges = self.edges.clone();
        edges.extend(other.edges.iter().map(|e| MixedEdge { u: e.u + shift, v: e.v + shift, state: e.state }));
        Self::from_sorted(self.order + other.order, edges)
    }

    /// Induced mixed subgraph on the surviving vertices, densely re-indexed.
    pub fn delete_vertices(&self, removed: &BTreeSet<VertexId>) -> Result<(Self, IndexMap)> {
        let (order, map) = reindex(self.order, removed)?;
        let edges = self
            .edges
            .iter()
            .filter_map(|e| Some(MixedEdge { u: map[e.u]?, v: map[e.v]?, state: e.state }))
            .collect();
        Ok((Self::from_sorted(order, edges), map))
    }

    pub fn induced_subgraph(&self, keep: &BTreeSet<VertexId>) -> Result<(Self, IndexMap)> {
        self.delete_vertices(&complement(self.order, keep)?)
    }

    pub fn degree(&self, v: VertexId) -> usize {
        self.edges.iter().filter(|e| e.u == v || e.v == v).count()
    }

    fn degrees(&self) -> Vec<usize> {
        let mut deg = vec![0; self.order];
        for e in &self.edges {
            deg[e.u] += 1;
            deg[e.v] += 1;
        }
        deg
    }

    pub fn pendant_vertices(&self) -> BTreeSet<VertexId> {
        self.degrees()
            .iter()
            .enumerate()
            .filter(|(_, &d)| d == 1)
            .map(|(v, _)| v)
            .collect()
    }

    /// Pairs `(pendant, quasi_pendant)`: `pendant` has degree 1 and its unique
    /// neighbour has degree at least 2.
    pub fn quasi_pendants(&self) -> BTreeSet<(VertexId, VertexId)> {
        let deg = self.degrees();
        self.edges
            .iter()
            .flat_map(|e| [(e.u, e.v), (e.v, e.u)])
            .filter(|&(x, y)| deg[x] == 1 && deg[y] >= 2)
            .collect()
    }

    /// Unique neighbour of a pendant vertex.
    pub fn pendant_neighbor(&self, x: VertexId) -> Option<VertexId> {
        let mut it = self.edges.iter().filter(|e| e.u == x || e.v == x);
        let e = it.next()?;
        if it.next().is_some() {
            return None;
        }
        Some(if e.u == x { e.v } else { e.u })
    }

    /// Canonical text form: `n <order>` followed by sorted `e <u> <v> <s>` lines.
    pub fn to_text(&self) -> String {
        self.to_string()
    }

    pub fn parse(text: &str) -> Result<Self> {
        let mut order: Option<usize> = None;
        let mut edges = Vec::new();
        let mut lines_of = Vec::new();
        for (idx, raw) in text.lines().enumerate() {
            let line_no = idx + 1;
            let content = raw.split('#').next().unwrap_or("");
            let tokens: Vec<&str> = content.split_whitespace().collect();
            let syntax = |message: &str| Error::Syntax { line: line_no, message: message.to_string() };
            match tokens.as_slice() {
                [] => continue,
                ["n", count] => {
                    if order.is_some() {
                        return Err(syntax("duplicate order line"));
                    }
                    order = Some(count.parse().map_err(|_| syntax("order is not a natural number"))?);
                }
                ["e", a, b, s] => {
                    let n = order.ok_or_else(|| syntax("edge before order line"))?;
                    let a: usize = a.parse().map_err(|_| syntax("bad vertex index"))?;
                    let b: usize = b.parse().map_err(|_| syntax("bad vertex index"))?;
                    let state = match *s {
                        "u" | "f" | "b" => EdgeState::from_symbol(s.chars().next().unwrap()).unwrap(),
                        _ => return Err(syntax("edge state must be one of u, f, b")),
                    };
                    for x in [a, b] {
                        if x >= n {
                            return Err(syntax(&format!("vertex {x} out of range for order {n}")));
                        }
                    }
                    if a == b {
                        return Err(syntax(&format!("loop at vertex {a}")));
                    }
                    edges.push((a, b, state));
                    lines_of.push(line_no);
                }
                _ => return Err(syntax("expected `n <order>` or `e <u> <v> <u|f|b>`")),
            }
        }
        let order = order.ok_or(Error::Syntax { line: text.lines().count().max(1), message: "missing order line".into() })?;
        let mut seen = BTreeSet::new();
        for (&(a, b, _), &line) in edges.iter().zip(&lines_of) {
            if !seen.insert((a.min(b), a.max(b))) {
                return Err(Error::Syntax {
                    line,
                    message: format!("multiple edges between {} and {}", a.min(b), a.max(b)),
                });
            }
        }
        MixedGraph::new(order, edges)
    }
}

impl fmt::Display for MixedGraph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "n {}", self.order)?;
        for e in &self.edges {
            writeln!(f, "e {} {} {}", e.u, e.v, e.state.symbol())?;
        }
        Ok(())
    }
}

impl FromStr for MixedGraph {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        MixedGraph::parse(s)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use EdgeState::*;

    fn set(xs: &[usize]) -> BTreeSet<usize> {
        xs.iter().copied().collect()
    }

    fn mixed_c4() -> MixedGraph {
        MixedGraph::new(4, [(0, 1, Forward), (1, 2, Undirected), (3, 2, Forward), (3, 0, Backward)]).unwrap()
    }

    #[test]
    fn canonical_endpoint_order() {
        let g = MixedGraph::new(2, [(1, 0, Forward)]).unwrap();
        assert_eq!(g.edges(), &[MixedEdge { u: 0, v: 1, state: Backward }]);
        assert!(g.edges()[0].points_from(1));
    }

    #[test]
    fn underlying_forgets_orientation() {
        let g = MixedGraph::new(2, [(0, 1, Forward)]).unwrap();
        assert_eq!(g.underlying().edges(), &[(0, 1)]);
        assert_eq!(MixedGraph::empty(3).underlying(), UnderlyingGraph::empty(3));
        let c4 = UnderlyingGraph::new(4, [(0, 1), (1, 2), (2, 3), (3, 0)]).unwrap();
        assert_eq!(mixed_c4().underlying(), c4);
        assert_eq!(mixed_c4().reversed().underlying(), c4);
    }

    #[test]
    fn delete_vertices_cases() {
        let p3 = MixedGraph::new(3, [(0, 1, Undirected), (1, 2, Undirected)]).unwrap();
        let (g, map) = p3.delete_vertices(&set(&[1])).unwrap();
        assert_eq!(g, MixedGraph::empty(2));
        assert_eq!(map, vec![Some(0), None, Some(1)]);

        let (p, _) = mixed_c4().delete_vertices(&set(&[0])).unwrap();
        // 1-2 undirected, 3->2 becomes 2->1 after shifting, i.e. (1,2) Backward
        let expected = MixedGraph::new(3, [(0, 1, Undirected), (2, 1, Forward)]).unwrap();
        assert_eq!(p, expected);

        let (same, _) = mixed_c4().delete_vertices(&BTreeSet::new()).unwrap();
        assert_eq!(same, mixed_c4());
        assert!(matches!(
            mixed_c4().delete_vertices(&set(&[7])),
            Err(Error::VertexOutOfRange { vertex: 7, order: 4 })
        ));
    }

    #[test]
    fn induced_subgraph_cases() {
        let c3 = MixedGraph::new(3, [(0, 1, Undirected), (1, 2, Undirected), (0, 2, Undirected)]).unwrap();
        let (e, _) = c3.induced_subgraph(&set(&[0, 2])).unwrap();
        assert_eq!(e, MixedGraph::new(2, [(0, 1, Undirected)]).unwrap());
        let (all, _) = c3.induced_subgraph(&set(&[0, 1, 2])).unwrap();
        assert_eq!(all, c3);
    }

    #[test]
    fn degrees_and_pendants() {
        let star = MixedGraph::new(4, [(0, 1, Undirected), (0, 2, Forward), (3, 0, Forward)]).unwrap();
        assert_eq!(star.degree(0), 3);
        assert_eq!(star.pendant_vertices(), set(&[1, 2, 3]));
        assert_eq!(star.quasi_pendants().len(), 3);

        let k2 = MixedGraph::new(2, [(0, 1, Undirected)]).unwrap();
        assert_eq!(k2.pendant_vertices(), set(&[0, 1]));
        assert!(k2.quasi_pendants().is_empty());

        // C4 on 0..3 plus pendant 4 attached at 0
        let h = MixedGraph::new(
            5,
            [(0, 1, Undirected), (1, 2, Undirected), (2, 3, Undirected), (3, 0, Undirected), (0, 4, Forward)],
        )
        .unwrap();
        assert_eq!(h.pendant_vertices(), set(&[4]));
        assert_eq!(h.quasi_pendants().into_iter().collect::<Vec<_>>(), vec![(4, 0)]);
    }

    #[test]
    fn parse_examples() {
        let g: MixedGraph = "n 2\ne 0 1 u".parse().unwrap();
        assert_eq!(g.edges()[0].state, Undirected);
        let g: MixedGraph = "n 2\ne 0 1 f".parse().unwrap();
        assert!(g.edges()[0].points_from(0));
        let err = MixedGraph::parse("n 2\ne 0 1 u\ne 0 1 f").unwrap_err();
        assert!(matches!(err, Error::Syntax { line: 3, .. }), "{err}");
    }

    #[test]
    fn parse_errors() {
        assert!(matches!(MixedGraph::parse(""), Err(Error::Syntax { .. })));
        assert!(matches!(MixedGraph::parse("n 2\ne 1 1 u"), Err(Error::Syntax { line: 2, .. })));
        assert!(matches!(MixedGraph::parse("n 2\ne 0 2 u"), Err(Error::Syntax { line: 2, .. })));
        assert!(matches!(MixedGraph::parse("e 0 1 u\nn 2"), Err(Error::Syntax { line: 1, .. })));
        assert!(matches!(MixedGraph::parse("n 2\ne 0 1 x"), Err(Error::Syntax { line: 2, .. })));
        assert!(matches!(MixedGraph::parse("n x"), Err(Error::Syntax { line: 1, .. })));
        assert!(matches!(MixedGraph::parse("n 2\nn 3"), Err(Error::Syntax { line: 2, .. })));
    }

    #[test]
    fn parse_comments_and_canonical_output() {
        let text = "# a triangle\nn 3   # order\n\ne 2 1 f\ne 0 1 u # first\n e 0 2 b\n";
        let g = MixedGraph::parse(text).unwrap();
        assert_eq!(g.to_text(), "n 3\ne 0 1 u\ne 0 2 b\ne 1 2 b\n");
    }

    #[test]
    fn constructor_rejects_bad_edges() {
        assert_eq!(MixedGraph::new(2, [(1, 1, Undirected)]), Err(Error::Loop(1)));
        assert_eq!(
            MixedGraph::new(2, [(0, 1, Undirected), (1, 0, Forward)]),
            Err(Error::MultiEdge(0, 1))
        );
        assert!(UnderlyingGraph::new(2, [(0, 5)]).is_err());
    }
}
