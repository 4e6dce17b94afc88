//! Maximum matchings in general graphs (Edmonds' blossom algorithm) and an
//! exhaustive reference search.

use std::collections::VecDeque;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::{UnderlyingGraph, VertexId};

/// Largest edge count accepted by [`matching_bruteforce`].
pub const BRUTEFORCE_EDGE_LIMIT: usize = 24;

/// A set of pairwise vertex-disjoint edges, each stored as `(u, v)` with `u < v`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Matching {
    edges: Vec<(VertexId, VertexId)>,
}

impl Matching {
    pub fn edges(&self) -> &[(VertexId, VertexId)] {
        &self.edges
    }

    pub fn len(&self) -> usize {
        self.edges.len()
    }

    pub fn is_empty(&self) -> bool {
        self.edges.is_empty()
    }

    fn mates(&self, order: usize) -> Vec<Option<VertexId>> {
        let mut mate = vec![None; order];
        for &(u, v) in &self.edges {
            mate[u] = Some(v);
            mate[v] = Some(u);
        }
        mate
    }

    /// True if every edge is in `g` and no vertex is covered twice.
    pub fn is_valid(&self, g: &UnderlyingGraph) -> bool {
        let mut used = vec![false; g.order()];
        self.edges.iter().all(|&(u, v)| {
            let ok = u < g.order() && v < g.order() && g.has_edge(u, v) && !used[u] && !used[v];
            if ok {
                used[u] = true;
                used[v] = true;
            }
            ok
        })
    }

    /// Berge's criterion: a valid matching is maximum iff no augmenting path
    /// exists.
    pub fn is_maximum(&self, g: &UnderlyingGraph) -> bool {
        let mate = self.mates(g.order());
        (0..g.order()).filter(|&v| mate[v].is_none()).all(|root| Blossom::new(g, &mate).augmenting_path_end(root).is_none())
    }
}

/// Search state for one augmenting-path search.
struct Blossom<'a> {
    g: &'a UnderlyingGraph,
    mate: &'a [Option<VertexId>],
    parent: Vec<Option<VertexId>>,
    base: Vec<VertexId>,
    used: Vec<bool>,
    in_blossom: Vec<bool>,
    queue: VecDeque<VertexId>,
}

impl<'a> Blossom<'a> {
    fn new(g: &'a UnderlyingGraph, mate: &'a [Option<VertexId>]) -> Self {
        let n = g.order();
        Blossom {
            g,
            mate,
            parent: vec![None; n],
            base: (0..n).collect(),
            used: vec![false; n],
            in_blossom: vec![false; n],
            queue: VecDeque::new(),
        }
    }

    fn lca(&self, mut a: VertexId, mut b: VertexId) -> VertexId {
        let mut seen = vec![false; self.g.order()];
        loop {
            a = self.base[a];
            seen[a] = true;
            match self.mate[a] {
                Some(m) => a = self.parent[m].expect("matched vertex in tree has a parent"),
                None => break,
            }
        }
        loop {
            b = self.base[b];
            if seen[b] {
                return b;
            }
            b = self.parent[self.mate[b].expect("walk stays inside the tree")].expect("tree parent");
        }
    }

    fn mark_path(&mut self, mut v: VertexId, b: VertexId, mut child: VertexId) {
        while self.base[v] != b {
            let m = self.mate[v].expect("blossom path alternates");
            self.in_blossom[self.base[v]] = true;
            self.in_blossom[self.base[m]] = true;
            self.parent[v] = Some(child);
            child = m;
            v = self.parent[m].expect("blossom path alternates");
        }
    }

    /// BFS over alternating paths from the unmatched `root`; returns the
    /// unmatched endpoint of an augmenting path, leaving `parent` links to
    /// trace it.
    fn augmenting_path_end(&mut self, root: VertexId) -> Option<VertexId> {
        self.used[root] = true;
        self.queue.push_back(root);
        while let Some(v) = self.queue.pop_front() {
            for &to in self.g.neighbors(v) {
                if self.base[v] == self.base[to] || self.mate[v] == Some(to) {
                    continue;
                }
                let odd_cycle = to == root || self.mate[to].is_some_and(|m| self.parent[m].is_some());
                if odd_cycle {
                    let cur = self.lca(v, to);
                    self.in_blossom.iter_mut().for_each(|x| *x = false);
                    self.mark_path(v, cur, to);
                    self.mark_path(to, cur, v);
                    for i in 0..self.g.order() {
                        if self.in_blossom[self.base[i]] {
                            self.base[i] = cur;
                            if !self.used[i] {
                                self.used[i] = true;
                                self.queue.push_back(i);
                            }
                        }
                    }
                } else if self.parent[to].is_none() {
                    self.parent[to] = Some(v);
                    match self.mate[to] {
                        None => return Some(to),
                        Some(m) => {
                            self.used[m] = true;
                            self.queue.push_back(m);
                        }
                    }
                }
            }
        }
        None
    }
}

/// Maximum matching number and a witness matching. The witness is certified
/// by [`Matching::is_maximum`] in debug builds.
pub fn matching_number(g: &UnderlyingGraph) -> (usize, Matching) {
    let n = g.order();
    let mut mate: Vec<Option<VertexId>> = vec![None; n];
    // greedy start
    for &(u, v) in g.edges() {
        if mate[u].is_none() && mate[v].is_none() {
            mate[u] = Some(v);
            mate[v] = Some(u);
        }
    }
    for root in 0..n {
        if mate[root].is_some() {
            continue;
        }
        let (end, parent) = {
            let mut search = Blossom::new(g, &mate);
            match search.augmenting_path_end(root) {
                Some(end) => (end, search.parent),
                None => continue,
            }
        };
        let mut v = Some(end);
        while let Some(x) = v {
            let px = parent[x].expect("augmenting path is linked");
            let next = mate[px];
            mate[x] = Some(px);
            mate[px] = Some(x);
            v = next;
        }
    }
    let edges: Vec<_> = (0..n).filter_map(|u| mate[u].filter(|&v| u < v).map(|v| (u, v))).collect();
    let matching = Matching { edges };
    debug_assert!(matching.is_valid(g) && matching.is_maximum(g));
    (matching.len(), matching)
}

/// Matching number by exhaustive search over all matchings.
pub fn matching_bruteforce(g: &UnderlyingGraph) -> Result<usize> {
    if g.size() > BRUTEFORCE_EDGE_LIMIT {
        return Err(Error::TooLarge(format!("{} edges exceeds the exhaustive-matching limit of {BRUTEFORCE_EDGE_LIMIT}", g.size())));
    }
    fn go(edges: &[(usize, usize)], used: &mut Vec<bool>, size: usize) -> usize {
        let Some((&(u, v), rest)) = edges.split_first() else {
            return size;
        };
        let mut best = go(rest, used, size);
        if !used[u] && !used[v] {
            used[u] = true;
            used[v] = true;
            best = best.max(go(rest, used, size + 1));
            used[u] = false;
            used[v] = false;
        }
        best
    }
    Ok(go(g.edges(), &mut vec![false; g.order()], 0))
}

/// `m(G - removed)` without materialising the reindexed graph.
pub fn matching_number_without(g: &UnderlyingGraph, removed: &[VertexId]) -> usize {
    let set = removed.iter().copied().collect();
    let (h, _) = g.delete_vertices(&set).expect("removed vertices are in range");
    matching_number(&h).0
}
