//! Generators for named graph families.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::{EdgeState, MixedGraph, UnderlyingGraph, VertexId};
use crate::invariants::{cyclomatic_number, matching_number, signature};

/// Mixed `C_n` on vertices `0..n` whose signature is exactly `sigma`: the
/// first `sigma` edges of the traversal `0, 1, …, n-1` point forward and the
/// rest are undirected.
pub fn gen_cycle(n: usize, sigma: usize) -> Result<MixedGraph> {
    if n < 3 {
        return Err(Error::InvalidParameter(format!("a cycle needs at least 3 vertices, got {n}")));
    }
    if sigma > n {
        return Err(Error::InvalidParameter(format!("signature {sigma} exceeds cycle length {n}")));
    }
    let states: Vec<_> = (0..n).map(|i| if i < sigma { EdgeState::Forward } else { EdgeState::Undirected }).collect();
    let g = MixedGraph::new(n, (0..n).map(|i| (i, (i + 1) % n, states[i])))?;
    let vertices: Vec<_> = (0..n).collect();
    assert_eq!(signature(&g, &vertices)?.sigma, sigma);
    Ok(g)
}

/// Parameters of the star-with-attachments construction: `s1` triangles,
/// `s2` four-cycles and `s3` four-cycles carrying a pendant edge, hung off
/// the leaves of a star `K_{1, c+1}` with `c = s1 + s2 + s3`.
///
/// `orientation_seed = 0` leaves every edge undirected; other seeds pick
/// random orientations within the allowed signature classes.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default, Serialize)]
pub struct FamilySpec {
    pub s1: usize,
    pub s2: usize,
    pub s3: usize,
    pub orientation_seed: u64,
}

impl FamilySpec {
    pub fn new(s1: usize, s2: usize, s3: usize) -> Self {
        FamilySpec { s1, s2, s3, orientation_seed: 0 }
    }

    pub fn with_seed(self, orientation_seed: u64) -> Self {
        FamilySpec { orientation_seed, ..self }
    }

    pub fn c(&self) -> usize {
        self.s1 + self.s2 + self.s3
    }

    /// Deficiency from the nullity upper bound, `3 s1 + 2 s3`.
    pub fn k(&self) -> usize {
        3 * self.s1 + 2 * self.s3
    }

    pub fn expected(&self) -> FamilyExpectation {
        let (s1, s2, s3) = (self.s1, self.s2, self.s3);
        FamilyExpectation {
            s1,
            s2,
            s3,
            n: 3 * s1 + 4 * s2 + 5 * s3 + 2,
            m: s1 + 2 * s2 + 2 * s3 + 1,
            c: self.c(),
            eta: 2 * s2 + s3,
            k: self.k(),
        }
    }
}

/// Invariants a generated family graph must have.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct FamilyExpectation {
    pub s1: usize,
    pub s2: usize,
    pub s3: usize,
    pub n: usize,
    pub m: usize,
    pub c: usize,
    pub eta: usize,
    pub k: usize,
}

fn signed_sum(states: &[EdgeState]) -> usize {
    let f = states.iter().filter(|&&s| s == EdgeState::Forward).count();
    let b = states.iter().filter(|&&s| s == EdgeState::Backward).count();
    f.abs_diff(b)
}

/// Random edge states along a cycle traversal whose signature passes `accept`.
fn random_cycle_states(rng: &mut ChaCha8Rng, len: usize, accept: impl Fn(usize) -> bool) -> Vec<EdgeState> {
    loop {
        let states: Vec<_> = (0..len).map(|_| EdgeState::ALL[rng.random_range(0..3)]).collect();
        if accept(signed_sum(&states)) {
            return states;
        }
    }
}

struct Builder {
    order: usize,
    edges: Vec<(VertexId, VertexId, EdgeState)>,
    rng: Option<ChaCha8Rng>,
}

impl Builder {
    fn fresh(&mut self) -> VertexId {
        self.order += 1;
        self.order - 1
    }

    fn edge_state(&mut self) -> EdgeState {
        match &mut self.rng {
            None => EdgeState::Undirected,
            Some(rng) => EdgeState::ALL[rng.random_range(0..3)],
        }
    }

    fn cycle(&mut self, vertices: &[VertexId], accept: impl Fn(usize) -> bool) {
        let len = vertices.len();
        let states = match &mut self.rng {
            None => vec![EdgeState::Undirected; len],
            Some(rng) => random_cycle_states(rng, len, accept),
        };
        for i in 0..len {
            self.edges.push((vertices[i], vertices[(i + 1) % len], states[i]));
        }
    }
}

/// Builds the family graph for `spec`. Its nullity is `2 s2 + s3`, which is
/// `k = 3 s1 + 2 s3` below the upper bound `n - 2m + 2c`.
///
/// Panics if the built graph does not have the expected order, matching
/// number or cyclomatic number.
pub fn gen_family(spec: &FamilySpec) -> Result<MixedGraph> {
    let c = spec.c();
    if c == 0 {
        return Err(Error::InvalidParameter("need s1 + s2 + s3 ≥ 1".into()));
    }
    let rng = (spec.orientation_seed != 0).then(|| ChaCha8Rng::seed_from_u64(spec.orientation_seed));
    let mut b = Builder { order: c + 2, edges: Vec::new(), rng };
    let center = 0;
    for leaf in 1..=c + 1 {
        let s = b.edge_state();
        b.edges.push((center, leaf, s));
    }
    let mut leaf = 1;
    for _ in 0..spec.s1 {
        let (x, y) = (b.fresh(), b.fresh());
        b.cycle(&[leaf, x, y], |sigma| sigma % 2 == 0);
        leaf += 1;
    }
    for _ in 0..spec.s2 {
        let (x, y, z) = (b.fresh(), b.fresh(), b.fresh());
        b.cycle(&[leaf, x, y, z], |sigma| sigma % 4 == 0);
        leaf += 1;
    }
    for _ in 0..spec.s3 {
        // four-cycle w0..w3 with the star leaf as the pendant end at w0
        let w: Vec<_> = (0..4).map(|_| b.fresh()).collect();
        b.cycle(&w, |sigma| sigma % 4 == 0);
        let s = b.edge_state();
        b.edges.push((w[0], leaf, s));
        leaf += 1;
    }
    let g = MixedGraph::new(b.order, b.edges)?;

    let want = spec.expected();
    let u = g.underlying();
    assert_eq!(g.order(), want.n, "family order");
    assert_eq!(matching_number(&u).0, want.m, "family matching number");
    assert_eq!(cyclomatic_number(&u), want.c, "family cyclomatic number");
    Ok(g)
}

/// Chooses `(s1, s2, s3)` with `s1 + s2 + s3 = c` and `3 s1 + 2 s3 = k`,
/// taking the smallest feasible `s1`.
pub fn gen_for_k(c: usize, k: usize) -> Result<FamilySpec> {
    if c == 0 {
        return Err(Error::InvalidParameter("cyclomatic number must be at least 1".into()));
    }
    if k == 1 {
        return Err(Error::InvalidParameter(
            "k = 1 is impossible: no mixed graph has nullity n - 2m + 2c - 1".into(),
        ));
    }
    if k > 3 * c {
        return Err(Error::InvalidParameter(format!("k = {k} exceeds 3c = {}", 3 * c)));
    }
    (0..=c)
        .flat_map(|s1| (0..=c - s1).map(move |s3| (s1, s3)))
        .find(|&(s1, s3)| 3 * s1 + 2 * s3 == k)
        .map(|(s1, s3)| FamilySpec::new(s1, c - s1 - s3, s3))
        .ok_or_else(|| Error::InvalidParameter(format!("no partition of c = {c} reaches k = {k}")))
}

/// Two cycles `C_p` and `C_q` joined by a path of length `l - 1`; for
/// `l = 1` the cycles share a vertex.
pub fn gen_infinity(p: usize, l: usize, q: usize) -> Result<UnderlyingGraph> {
    if p < 3 || q < 3 || l < 1 {
        return Err(Error::InvalidParameter(format!("∞-({p}, {l}, {q}) needs p, q ≥ 3 and l ≥ 1")));
    }
    let mut edges: Vec<(usize, usize)> = (0..p).map(|i| (i, (i + 1) % p)).collect();
    let mut next = p;
    let mut anchor = 0;
    for _ in 1..l {
        edges.push((anchor, next));
        anchor = next;
        next += 1;
    }
    let second: Vec<_> = std::iter::once(anchor).chain(next..next + q - 1).collect();
    next += q - 1;
    edges.extend((0..q).map(|i| (second[i], second[(i + 1) % q])));
    UnderlyingGraph::new(next, edges)
}

/// Three internally disjoint paths with `p`, `l` and `q` interior vertices
/// between two common endpoints `0` and `1`.
pub fn gen_theta(p: usize, l: usize, q: usize) -> Result<UnderlyingGraph> {
    if [p, l, q].iter().filter(|&&x| x == 0).count() > 1 {
        return Err(Error::InvalidParameter(format!("θ-({p}, {l}, {q}) would have a multiple edge")));
    }
    let mut edges = Vec::new();
    let mut next = 2;
    for len in [p, l, q] {
        let mut prev = 0;
        for _ in 0..len {
            edges.push((prev, next));
            prev = next;
            next += 1;
        }
        edges.push((prev, 1));
    }
    UnderlyingGraph::new(next, edges)
}

/// `K_{1, leaves}` with centre `0`.
pub fn gen_star(leaves: usize) -> UnderlyingGraph {
    UnderlyingGraph::new(leaves + 1, (1..=leaves).map(|v| (0, v))).expect("star is simple")
}

/// The complete bipartite graph `K_{2,3}` with parts `{0, 4}` and `{1, 2, 3}`.
pub fn gen_d() -> UnderlyingGraph {
    UnderlyingGraph::new(5, [(0, 1), (0, 2), (0, 3), (4, 1), (4, 2), (4, 3)]).expect("K_{2,3} is simple")
}
