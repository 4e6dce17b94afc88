use std::collections::BTreeMap;

use serde::{Serialize, Serializer};

/// Violations kept verbatim in a report; further ones are only counted.
pub const VIOLATION_CAP: usize = 100;

#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Serialize)]
pub struct Violation {
    pub check: String,
    /// Underlying graph in graph6.
    pub graph6: String,
    /// Edge states (`u`, `f`, `b`) in edge order, absent for checks on the
    /// underlying graph alone.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub orientation: Option<String>,
    /// The offending graph in text format, ready to feed back to `analyze`.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub mixed_graph: Option<String>,
    pub detail: String,
}

#[derive(Serialize)]
struct HistogramEntry {
    c: usize,
    s: i64,
    count: u64,
}

fn histogram_as_list<S: Serializer>(h: &BTreeMap<(usize, i64), u64>, ser: S) -> Result<S::Ok, S::Error> {
    ser.collect_seq(h.iter().map(|(&(c, s), &count)| HistogramEntry { c, s, count }))
}

#[derive(Serialize)]
struct MinEntry {
    c: usize,
    min: i64,
}

fn min_as_list<S: Serializer>(h: &BTreeMap<usize, i64>, ser: S) -> Result<S::Ok, S::Error> {
    ser.collect_seq(h.iter().map(|(&c, &min)| MinEntry { c, min }))
}

/// Outcome of a verification run. Reports from disjoint pieces of work
/// combine with [`VerificationReport::merge`].
#[derive(Debug, Clone, PartialEq, Eq, Default, Serialize)]
pub struct VerificationReport {
    pub graphs_checked: u64,
    pub orientations_checked: u64,
    pub violation_count: u64,
    /// Number of violations per check, including those not kept.
    pub violations_by_check: BTreeMap<String, u64>,
    /// The first [`VIOLATION_CAP`] violations in sorted order.
    pub violations: Vec<Violation>,
    /// Number of `(c, s)` occurrences with `s = upper - η`, unclamped.
    #[serde(serialize_with = "histogram_as_list")]
    pub s_histogram: BTreeMap<(usize, i64), u64>,
    /// Smallest `η - (n - 2m)` seen for each cyclomatic number.
    #[serde(serialize_with = "min_as_list")]
    pub min_eta_minus_tree_value: BTreeMap<usize, i64>,
    /// Smallest rank over orientations of `K_{2,3}`, if any were checked.
    pub min_rank_graph_d: Option<usize>,
    pub unicyclic_checked: u64,
    /// Table disagreements under the adopted reading of cycle incidence.
    pub unicyclic_mismatches: u64,
    /// Table disagreements when any edge touching the cycle counts as
    /// incident; informational only.
    pub unicyclic_any_endpoint_mismatches: u64,
}

impl VerificationReport {
    pub fn is_clean(&self) -> bool {
        self.violation_count == 0
    }

    pub fn push_violation(&mut self, v: Violation) {
        self.violation_count += 1;
        *self.violations_by_check.entry(v.check.clone()).or_default() += 1;
        self.violations.push(v);
        if self.violations.len() > 2 * VIOLATION_CAP {
            self.normalize();
        }
    }

    pub(crate) fn normalize(&mut self) {
        self.violations.sort();
        self.violations.truncate(VIOLATION_CAP);
    }

    /// Associative and commutative combination of two reports.
    pub fn merge(mut self, other: VerificationReport) -> VerificationReport {
        self.graphs_checked += other.graphs_checked;
        self.orientations_checked += other.orientations_checked;
        self.violation_count += other.violation_count;
        for (k, v) in other.violations_by_check {
            *self.violations_by_check.entry(k).or_default() += v;
        }
        self.violations.extend(other.violations);
        self.normalize();
        for (k, v) in other.s_histogram {
            *self.s_histogram.entry(k).or_default() += v;
        }
        for (c, v) in other.min_eta_minus_tree_value {
            let e = self.min_eta_minus_tree_value.entry(c).or_insert(v);
            *e = (*e).min(v);
        }
        self.min_rank_graph_d = match (self.min_rank_graph_d, other.min_rank_graph_d) {
            (Some(a), Some(b)) => Some(a.min(b)),
            (a, b) => a.or(b),
        };
        self.unicyclic_checked += other.unicyclic_checked;
        self.unicyclic_mismatches += other.unicyclic_mismatches;
        self.unicyclic_any_endpoint_mismatches += other.unicyclic_any_endpoint_mismatches;
        self
    }

    pub fn violations_of(&self, check: &str) -> u64 {
        self.violations_by_check.get(check).copied().unwrap_or(0)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serialises")
    }
}
