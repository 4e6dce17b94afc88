//! Closed-form relations between the nullity of a mixed graph and the
//! order `n`, matching number `m` and cyclomatic number `c` of its
//! underlying graph.
//!
//! * bounds: `n - 2m - c ≤ η ≤ n - 2m + 2c` for connected graphs,
//! * the structural characterisation of graphs reaching the upper bound,
//! * rank of a mixed cycle from its length and signature,
//! * inertia of unicyclic mixed graphs,
//! * the forbidden value `η = n - 2m + 2c - 1`.

use std::collections::BTreeSet;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::{MixedGraph, UnderlyingGraph, VertexId};
use crate::invariants::{
    component_labels, contract_cycles, cycles_vertex_disjoint, cyclomatic_number, is_connected, matching_number,
    matching_number_without, signature, signed_cycles, CycleWithSignature,
};
use crate::linalg::{nullity, spectrum, SpectralSummary};

/// Orientation-independent quantities entering the nullity bounds.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct BoundParams {
    pub n: usize,
    pub m: usize,
    pub c: usize,
    /// `n - 2m - c`.
    pub lower_raw: i64,
    /// Sum over components of `max(0, n_i - 2m_i - c_i)`.
    pub lower: i64,
    /// `n - 2m + 2c`.
    pub upper: i64,
}

impl BoundParams {
    pub fn of(g: &UnderlyingGraph) -> Self {
        let n = g.order();
        let m = matching_number(g).0;
        let c = cyclomatic_number(g);
        let lower_raw = n as i64 - 2 * m as i64 - c as i64;
        let upper = n as i64 - 2 * m as i64 + 2 * c as i64;
        let (labels, count) = component_labels(g);
        let lower = if count <= 1 {
            lower_raw.max(0)
        } else {
            (0..count)
                .map(|k| {
                    let keep: BTreeSet<VertexId> = (0..n).filter(|&v| labels[v] == k).collect();
                    let (h, _) = g.induced_subgraph(&keep).expect("component vertices in range");
                    let raw = h.order() as i64 - 2 * matching_number(&h).0 as i64 - cyclomatic_number(&h) as i64;
                    raw.max(0)
                })
                .sum()
        };
        BoundParams { n, m, c, lower_raw, lower, upper }
    }

    pub fn with_nullity(&self, eta: usize) -> NullityBounds {
        let eta = eta as i64;
        NullityBounds { lower_raw: self.lower_raw, lower: self.lower, upper: self.upper, eta, s: self.upper - eta }
    }
}

/// Bounds together with the exact nullity and its deficiency `s` from the
/// upper bound.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct NullityBounds {
    pub lower_raw: i64,
    pub lower: i64,
    pub upper: i64,
    pub eta: i64,
    /// `upper - eta`.
    pub s: i64,
}

impl NullityBounds {
    pub fn holds(&self) -> bool {
        self.lower_raw <= self.eta && self.lower <= self.eta && self.eta <= self.upper
    }
}

pub fn nullity_bounds(g: &MixedGraph) -> NullityBounds {
    BoundParams::of(&g.underlying()).with_nullity(nullity(g))
}

/// The three structural conditions for `η = n - 2m + 2c`. Conditions (ii)
/// and (iii) are only evaluated when (i) holds and are reported false
/// otherwise.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct UpperBoundVerdict {
    pub attains: bool,
    /// Cycles are pairwise vertex-disjoint.
    pub cond_i: bool,
    /// Every cycle is even with `σ ≡ length (mod 4)`.
    pub cond_ii: bool,
    /// `m(T_G) = m(G - O(G))`.
    pub cond_iii: bool,
}

impl UpperBoundVerdict {
    /// Combines signed cycles (`None` if cycles share vertices) with the
    /// matching condition on the contracted forest.
    pub fn from_parts(cycles: Option<&[CycleWithSignature]>, cond_iii: impl FnOnce() -> bool) -> Self {
        let Some(cycles) = cycles else {
            return UpperBoundVerdict { attains: false, cond_i: false, cond_ii: false, cond_iii: false };
        };
        let cond_ii = cycles.iter().all(|c| c.len() % 2 == 0 && c.sigma % 4 == c.len() % 4);
        let cond_iii = cond_iii();
        UpperBoundVerdict { attains: cond_ii && cond_iii, cond_i: true, cond_ii, cond_iii }
    }
}

/// `m(T_G) = m(G - O(G))`, or `None` if the cycle contraction is undefined.
pub fn contracted_matching_condition(g: &UnderlyingGraph) -> Option<bool> {
    let r = contract_cycles(g).ok()?;
    let on_cycle: Vec<_> = r.o_g.iter().copied().collect();
    Some(matching_number(&r.t_g).0 == matching_number_without(g, &on_cycle))
}

/// Decides whether `g` reaches the nullity upper bound from its structure
/// alone, without computing any spectrum.
pub fn attains_upper(g: &MixedGraph) -> UpperBoundVerdict {
    let cycles = signed_cycles(g);
    UpperBoundVerdict::from_parts(cycles.as_deref(), || {
        contracted_matching_condition(&g.underlying()).expect("cycles are disjoint")
    })
}

/// Rank of a mixed cycle of length `n` and signature `sigma`.
pub fn cycle_rank(n: usize, sigma: usize) -> Result<usize> {
    if n < 3 {
        return Err(Error::InvalidParameter(format!("a cycle needs at least 3 vertices, got {n}")));
    }
    if sigma > n {
        return Err(Error::InvalidParameter(format!("signature {sigma} exceeds cycle length {n}")));
    }
    Ok(match (n % 2, sigma % 2) {
        (1, 1) => n - 1,
        (1, 0) => n,
        (0, 1) => n,
        _ if (n + sigma) % 4 == 2 => n,
        _ => n - 2,
    })
}

/// `true` iff `η = n - 2m + 2c - 1`, a value no mixed graph attains.
pub fn forbidden_gap(g: &MixedGraph) -> bool {
    nullity_bounds(g).s == 1
}

/// Which edges count as "incident to the cycle" in the unicyclic inertia
/// table.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize)]
pub enum IncidenceReading {
    /// Edges off the cycle with exactly one endpoint on it.
    #[default]
    Attached,
    /// Every edge with at least one endpoint on the cycle, cycle edges
    /// included.
    AnyEndpoint,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum UnicyclicCase {
    /// Even cycle, `q - σ ≡ 0 (mod 4)`, no maximum matching uses an incident
    /// edge: `(m - 1, m - 1)`.
    EvenDeficient,
    /// Odd cycle with even `σ`, `q - σ ≡ 1 (mod 4)`, cycle saturated by a
    /// maximum matching: `(m + 1, m)`.
    OddPositive,
    /// As above with `q - σ ≡ 3 (mod 4)`: `(m, m + 1)`.
    OddNegative,
    /// `(m, m)`.
    Generic,
}

/// Orientation-independent data for the unicyclic inertia table of one
/// connected unicyclic graph.
#[derive(Debug, Clone)]
pub struct UnicyclicTable {
    pub cycle: Vec<VertexId>,
    pub m: usize,
    /// `m(G - V(C))`.
    pub m_without_cycle: usize,
    /// No maximum matching contains an edge incident to the cycle.
    pub avoids_cycle: bool,
}

impl UnicyclicTable {
    pub fn new(g: &UnderlyingGraph, reading: IncidenceReading) -> Result<Self> {
        if !is_connected(g) || cyclomatic_number(g) != 1 {
            return Err(Error::NotUnicyclic);
        }
        let cycle = cycles_vertex_disjoint(g).and_then(|cs| cs.into_iter().next()).ok_or(Error::NotUnicyclic)?;
        let on_cycle: BTreeSet<_> = cycle.iter().copied().collect();
        let m = matching_number(g).0;
        let m_without_cycle = matching_number_without(g, &cycle);
        // Edge {a, b} lies in some maximum matching iff m(G - a - b) = m - 1.
        let avoids_cycle = g
            .edges()
            .iter()
            .filter(|&&(a, b)| match reading {
                IncidenceReading::Attached => on_cycle.contains(&a) != on_cycle.contains(&b),
                IncidenceReading::AnyEndpoint => on_cycle.contains(&a) || on_cycle.contains(&b),
            })
            .all(|&(a, b)| matching_number_without(g, &[a, b]) + 1 < m);
        Ok(UnicyclicTable { cycle, m, m_without_cycle, avoids_cycle })
    }

    /// Table value `(case, p⁺, n⁻)` for a cycle of signature `sigma`.
    pub fn predict(&self, sigma: usize) -> (UnicyclicCase, usize, usize) {
        let q = self.cycle.len();
        let m = self.m;
        let saturated = 2 * (m - self.m_without_cycle) + 1 == q;
        if q.is_multiple_of(2) && sigma.is_multiple_of(2) && (q - sigma).is_multiple_of(4) && self.avoids_cycle {
            (UnicyclicCase::EvenDeficient, m - 1, m - 1)
        } else if q % 2 == 1 && sigma.is_multiple_of(2) && (q - sigma) % 4 == 1 && saturated {
            (UnicyclicCase::OddPositive, m + 1, m)
        } else if q % 2 == 1 && sigma.is_multiple_of(2) && (q - sigma) % 4 == 3 && saturated {
            (UnicyclicCase::OddNegative, m, m + 1)
        } else {
            (UnicyclicCase::Generic, m, m)
        }
    }
}

/// Largest edge count for which [`unicyclic_inertia`] cross-checks the table
/// against the exact spectrum.
pub const UNICYCLIC_CROSS_CHECK_EDGES: usize = 24;

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct UnicyclicInertia {
    pub positive: usize,
    pub negative: usize,
    pub case: UnicyclicCase,
    pub cycle: CycleWithSignature,
    /// Exact inertia, when the graph is small enough to cross-check.
    pub exact: Option<SpectralSummary>,
    /// Table value differs from the exact inertia. Carried as data rather
    /// than an error so the reading in use can be audited.
    pub mismatch: bool,
}

/// Inertia of a connected unicyclic mixed graph from its cycle length,
/// signature and matching structure.
pub fn unicyclic_inertia(g: &MixedGraph) -> Result<UnicyclicInertia> {
    unicyclic_inertia_with(g, IncidenceReading::default())
}

pub fn unicyclic_inertia_with(g: &MixedGraph, reading: IncidenceReading) -> Result<UnicyclicInertia> {
    let table = UnicyclicTable::new(&g.underlying(), reading)?;
    let cycle = signature(g, &table.cycle)?;
    let (case, positive, negative) = table.predict(cycle.sigma);
    let exact = (g.size() <= UNICYCLIC_CROSS_CHECK_EDGES).then(|| spectrum(g));
    let mismatch = exact.is_some_and(|s| (s.positive, s.negative) != (positive, negative));
    Ok(UnicyclicInertia { positive, negative, case, cycle, exact, mismatch })
}
