//! Canonical labelling of small graphs and isomorph-free enumeration.

use std::collections::BTreeMap;

use crate::error::{Error, Result};
use crate::graph::{UnderlyingGraph, VertexId};

/// Largest order accepted by [`canonical_form`]; the code must fit in a `u64`.
pub const CANON_MAX_ORDER: usize = 11;

/// Largest order the enumerator will generate.
pub const ENUMERATION_MAX_ORDER: usize = 8;

fn bitsets(g: &UnderlyingGraph) -> Vec<u16> {
    let mut adj = vec![0u16; g.order()];
    for &(u, v) in g.edges() {
        adj[u] |= 1 << v;
        adj[v] |= 1 << u;
    }
    adj
}

struct Search<'a> {
    adj: &'a [u16],
    /// Vertices allowed at each position.
    cell_at: Vec<&'a [VertexId]>,
    total_bits: usize,
    perm: Vec<VertexId>,
    used: u16,
    best: Option<(u64, Vec<VertexId>)>,
}

impl Search<'_> {
    fn run(&mut self, pos: usize, code: u64) {
        let n = self.adj.len();
        if pos == n {
            if self.best.as_ref().is_none_or(|(b, _)| code < *b) {
                self.best = Some((code, self.perm.clone()));
            }
            return;
        }
        let remaining = self.total_bits - (pos + 1) * pos / 2;
        for &v in self.cell_at[pos] {
            if self.used & (1 << v) != 0 {
                continue;
            }
            let mut next = code;
            for &w in &self.perm {
                next = next << 1 | u64::from(self.adj[w] >> v & 1);
            }
            // Column `pos` is final once placed; a larger prefix cannot win.
            if let Some((b, _)) = &self.best {
                if next > b >> remaining {
                    continue;
                }
            }
            self.perm.push(v);
            self.used |= 1 << v;
            self.run(pos + 1, next);
            self.used &= !(1 << v);
            self.perm.pop();
        }
    }
}

/// Minimum upper-triangle code over vertex orders that list vertices by
/// increasing refinement key (degree, then sorted neighbour degrees).
///
/// Bits are taken column by column, `(0,1), (0,2), (1,2), (0,3), …`, the
/// first pair being most significant. Returns the code and the order
/// `perm` where `perm[i]` is the original vertex placed at position `i`.
pub fn canonical_form(g: &UnderlyingGraph) -> (u64, Vec<VertexId>) {
    let n = g.order();
    assert!(n <= CANON_MAX_ORDER, "canonical form supports at most {CANON_MAX_ORDER} vertices");
    let adj = bitsets(g);
    let key = |v: VertexId| {
        let mut nd: Vec<_> = g.neighbors(v).iter().map(|&w| g.degree(w)).collect();
        nd.sort_unstable();
        (g.degree(v), nd)
    };
    let mut order: Vec<VertexId> = (0..n).collect();
    order.sort_by_key(|&v| key(v));
    let mut cells: Vec<Vec<VertexId>> = Vec::new();
    for (i, &v) in order.iter().enumerate() {
        if i > 0 && key(order[i - 1]) == key(v) {
            cells.last_mut().unwrap().push(v);
        } else {
            cells.push(vec![v]);
        }
    }
    let cell_at = cells.iter().flat_map(|c| std::iter::repeat_n(c.as_slice(), c.len())).collect();
    let mut search =
        Search { adj: &adj, cell_at, total_bits: n * n.saturating_sub(1) / 2, perm: Vec::new(), used: 0, best: None };
    search.run(0, 0);
    search.best.expect("at least one ordering")
}

/// Relabels `g` so that vertex `i` is `perm[i]`.
pub fn relabel(g: &UnderlyingGraph, perm: &[VertexId]) -> UnderlyingGraph {
    let mut pos = vec![0; perm.len()];
    for (i, &v) in perm.iter().enumerate() {
        pos[v] = i;
    }
    UnderlyingGraph::new(g.order(), g.edges().iter().map(|&(u, v)| (pos[u], pos[v]))).expect("relabelling keeps simplicity")
}

/// The canonical representative of the isomorphism class of `g`.
pub fn canonical_graph(g: &UnderlyingGraph) -> (u64, UnderlyingGraph) {
    let (code, perm) = canonical_form(g);
    (code, relabel(g, &perm))
}

pub fn is_isomorphic(a: &UnderlyingGraph, b: &UnderlyingGraph) -> bool {
    a.order() == b.order() && a.size() == b.size() && canonical_form(a).0 == canonical_form(b).0
}

/// Every simple graph with `n_min ≤ n ≤ n_max` vertices and at most `e_max`
/// edges, one per isomorphism class, ordered by order then canonical code.
///
/// Graphs of order `n` are grown from those of order `n - 1` by adding a
/// vertex with every possible neighbourhood. In connected mode only connected
/// parents and non-empty neighbourhoods are used; every connected graph has a
/// vertex whose removal leaves it connected, so nothing is missed.
pub fn enumerate_graphs(n_min: usize, n_max: usize, e_max: usize, connected_only: bool) -> Result<Vec<UnderlyingGraph>> {
    if n_max > ENUMERATION_MAX_ORDER {
        return Err(Error::TooLarge(format!("n_max = {n_max} exceeds {ENUMERATION_MAX_ORDER}")));
    }
    if n_min == 0 || n_min > n_max {
        return Err(Error::InvalidParameter(format!("need 1 ≤ n_min ≤ n_max, got {n_min}..{n_max}")));
    }
    let mut out = Vec::new();
    let mut level: BTreeMap<u64, UnderlyingGraph> = BTreeMap::from([(0, UnderlyingGraph::empty(1))]);
    for n in 1..=n_max {
        if n > 1 {
            let mut next = BTreeMap::new();
            for parent in level.values() {
                let base = parent.edges().to_vec();
                for mask in u32::from(connected_only)..1u32 << (n - 1) {
                    if parent.size() + mask.count_ones() as usize > e_max {
                        continue;
                    }
                    let mut edges = base.clone();
                    edges.extend((0..n - 1).filter(|&v| mask >> v & 1 == 1).map(|v| (v, n - 1)));
                    let child = UnderlyingGraph::new(n, edges).expect("new vertex adds simple edges");
                    next.entry(canonical_form(&child).0).or_insert_with(|| canonical_graph(&child).1);
                }
            }
            level = next;
        }
        if n >= n_min {
            out.extend(level.values().cloned());
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn all_orders(n: usize) -> Vec<Vec<usize>> {
        if n == 0 {
            return vec![vec![]];
        }
        let mut out = Vec::new();
        for p in all_orders(n - 1) {
            for i in 0..=p.len() {
                let mut q = p.clone();
                q.insert(i, n - 1);
                out.push(q);
            }
        }
        out
    }

    #[test]
    fn canonical_form_is_invariant() {
        let g = UnderlyingGraph::new(6, [(0, 1), (1, 2), (2, 0), (2, 3), (3, 4), (4, 5)]).unwrap();
        let code = canonical_form(&g).0;
        for perm in all_orders(6) {
            assert_eq!(canonical_form(&relabel(&g, &perm)).0, code);
        }
    }

    #[test]
    fn canonical_graph_has_the_canonical_code() {
        let g = UnderlyingGraph::new(5, [(0, 4), (1, 4), (2, 3)]).unwrap();
        let (code, h) = canonical_graph(&g);
        let (same, perm) = canonical_form(&h);
        assert_eq!(code, same);
        assert_eq!(relabel(&h, &perm), h);
    }

    #[test]
    fn separates_non_isomorphic_graphs() {
        let p4 = UnderlyingGraph::new(4, [(0, 1), (1, 2), (2, 3)]).unwrap();
        let star = UnderlyingGraph::new(4, [(0, 1), (0, 2), (0, 3)]).unwrap();
        assert!(!is_isomorphic(&p4, &star));
        assert!(is_isomorphic(&p4, &UnderlyingGraph::new(4, [(3, 1), (1, 0), (0, 2)]).unwrap()));
    }

    #[test]
    fn small_counts() {
        let count = |n, connected| enumerate_graphs(n, n, usize::MAX, connected).unwrap().len();
        assert_eq!([1, 2, 3, 4, 5].map(|n| count(n, true)), [1, 1, 2, 6, 21]);
        assert_eq!([1, 2, 3, 4, 5].map(|n| count(n, false)), [1, 2, 4, 11, 34]);
        assert_eq!(enumerate_graphs(1, 3, usize::MAX, true).unwrap().len(), 4);
    }

    #[test]
    fn edge_limit_and_guards() {
        let trees = enumerate_graphs(6, 6, 5, true).unwrap();
        assert_eq!(trees.len(), 6);
        assert!(enumerate_graphs(1, 9, 9, true).is_err());
        assert!(enumerate_graphs(0, 3, 9, true).is_err());
        assert!(enumerate_graphs(4, 3, 9, true).is_err());
    }
}
