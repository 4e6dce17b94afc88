//! Full analysis of a single mixed graph, serialised as JSON.

use serde::Serialize;

use crate::characterization::{attains_upper, unicyclic_inertia, BoundParams, NullityBounds, UnicyclicInertia, UpperBoundVerdict};
use crate::graph::MixedGraph;
use crate::invariants::{structure_report, StructureReport};
use crate::linalg::{char_poly, hermitian_adjacency, spectrum, SpectralSummary};

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SpectralReport {
    #[serde(flatten)]
    pub summary: SpectralSummary,
    /// `det(λI - H)`, highest degree first.
    pub char_poly: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct AnalysisReport {
    /// The input in text format.
    pub graph: String,
    pub spectral: SpectralReport,
    pub structure: StructureReport,
    pub bounds: NullityBounds,
    pub upper_verdict: UpperBoundVerdict,
    pub forbidden_gap: bool,
    /// Present for connected unicyclic graphs.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub unicyclic: Option<UnicyclicInertia>,
}

pub fn analyze(g: &MixedGraph) -> AnalysisReport {
    let summary = spectrum(g);
    let bounds = BoundParams::of(&g.underlying()).with_nullity(summary.nullity);
    AnalysisReport {
        graph: g.to_text(),
        spectral: SpectralReport { summary, char_poly: char_poly(&hermitian_adjacency(g)).to_string() },
        structure: structure_report(g),
        bounds,
        upper_verdict: attains_upper(g),
        forbidden_gap: bounds.s == 1,
        unicyclic: unicyclic_inertia(g).ok(),
    }
}
