//! Acceptance suite: one PASS/FAIL line per criterion. Exits non-zero if any
//! criterion fails.

use std::time::Instant;

use mixnull::characterization::cycle_rank;
use mixnull::families::{gen_d, gen_for_k, gen_family};
use mixnull::invariants::{cyclomatic_number, matching_number, signature};
use mixnull::linalg::{hermitian_adjacency, rank, rank_elimination};
use mixnull::verify::{enumerate_orientations, verify_all, verify_graph, verify_mixed, EnumerationScope, VerificationReport};
use mixnull::{EdgeState, MixedGraph, UnderlyingGraph};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

const IDENTITY_CHECKS: [&str; 12] = [
    "induced_subgraph_rank",
    "component_rank_additivity",
    "tree_rank",
    "matching_certified",
    "matching_vertex_deletion",
    "pendant_matching",
    "pendant_deletion_nullity",
    "ped_closure_nullity",
    "vertex_deletion_nullity",
    "cyclomatic_vertex_deletion",
    "contraction_forest",
    "quasi_pendant_on_cycle",
];

struct Outcome {
    failed: usize,
}

impl Outcome {
    fn record(&mut self, id: usize, name: &str, ok: bool, detail: String, started: Instant) {
        let verdict = if ok { "PASS" } else { "FAIL" };
        println!("criterion {id} [{verdict}] {name}: {detail} ({:.1}s)", started.elapsed().as_secs_f64());
        if !ok {
            self.failed += 1;
        }
    }
}

fn jobs() -> usize {
    std::thread::available_parallelism().map_or(1, |n| n.get())
}

/// Connected graphs with n ≤ 5 (all edge counts) and n = 6 with |E| ≤ 9.
fn main_sweep() -> VerificationReport {
    let small = verify_all(&EnumerationScope::new(5, 10), jobs()).expect("valid scope");
    let six = verify_all(&EnumerationScope::exact_order(6, 9), jobs()).expect("valid scope");
    small.merge(six)
}

fn random_mixed_graph(rng: &mut ChaCha8Rng) -> MixedGraph {
    let n = rng.random_range(1..=10);
    let p: f64 = rng.random_range(0.1..0.7);
    let mut edges = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            if rng.random_bool(p) {
                edges.push((u, v, EdgeState::ALL[rng.random_range(0..3)]));
            }
        }
    }
    MixedGraph::new(n, edges).expect("simple by construction")
}

fn main() {
    let mut out = Outcome { failed: 0 };

    let t = Instant::now();
    let sweep = main_sweep();
    let sweep_time = t;
    let gap_bucket = sweep.s_histogram.keys().any(|&(_, s)| s == 1);
    out.record(
        1,
        "forbidden gap",
        sweep.violations_of("forbidden_gap") == 0 && !gap_bucket,
        format!(
            "{} graphs, {} orientations, {} violations",
            sweep.graphs_checked,
            sweep.orientations_checked,
            sweep.violations_of("forbidden_gap")
        ),
        sweep_time,
    );

    let t = Instant::now();
    let out_of_range = sweep.s_histogram.keys().filter(|&&(c, s)| s < 0 || s > 3 * c as i64 || s == 1).count();
    out.record(
        2,
        "nullity bounds",
        sweep.violations_of("nullity_bounds") == 0 && out_of_range == 0,
        format!(
            "{} violations, {} histogram buckets outside 0..=3c or at s = 1, min η-(n-2m) by c {:?}",
            sweep.violations_of("nullity_bounds"),
            out_of_range,
            sweep.min_eta_minus_tree_value
        ),
        t,
    );

    let t = Instant::now();
    out.record(
        3,
        "upper-bound characterisation",
        sweep.violations_of("upper_bound_characterization") == 0,
        format!("{} mismatches", sweep.violations_of("upper_bound_characterization")),
        t,
    );

    let t = Instant::now();
    let mut checked = 0;
    let mut wrong = 0;
    for n in 3..=8 {
        let c = UnderlyingGraph::new(n, (0..n).map(|i| (i, (i + 1) % n))).unwrap();
        let order: Vec<_> = (0..n).collect();
        for g in enumerate_orientations(&c, u64::MAX, false).unwrap() {
            let sigma = signature(&g, &order).unwrap().sigma;
            checked += 1;
            if cycle_rank(n, sigma).unwrap() != rank_elimination(&hermitian_adjacency(&g)) {
                wrong += 1;
            }
        }
    }
    out.record(4, "cycle rank table", wrong == 0, format!("{checked} mixed cycles, {wrong} mismatches"), t);

    let t = Instant::now();
    let unicyclic: Vec<_> = mixnull::verify::enumerate_underlying(&EnumerationScope::new(7, 7))
        .unwrap()
        .into_iter()
        .filter(|g| g.size() == g.order() && cyclomatic_number(g) == 1)
        .collect();
    let report = unicyclic.iter().map(|g| verify_graph(g, false)).fold(VerificationReport::default(), VerificationReport::merge);
    out.record(
        5,
        "unicyclic inertia table",
        report.unicyclic_mismatches == 0 && report.unicyclic_checked == report.orientations_checked,
        format!(
            "{} graphs, {} orientations, {} mismatches ({} under the any-endpoint reading of incidence)",
            unicyclic.len(),
            report.unicyclic_checked,
            report.unicyclic_mismatches,
            report.unicyclic_any_endpoint_mismatches
        ),
        t,
    );

    let t = Instant::now();
    let d = gen_d();
    let orientations = enumerate_orientations(&d, u64::MAX, false).unwrap();
    let min_rank = orientations.iter().map(rank).min().unwrap();
    out.record(
        6,
        "graph D",
        orientations.len() == 729 && min_rank >= 2,
        format!("{} orientations, minimum rank {min_rank}", orientations.len()),
        t,
    );

    let t = Instant::now();
    let mut families = 0;
    let mut bad = Vec::new();
    for c in 1..=4usize {
        for k in (0..=3 * c).filter(|&k| k != 1) {
            for seed in [0, 1, 2, 3] {
                let spec = gen_for_k(c, k).unwrap().with_seed(seed);
                let g = gen_family(&spec).unwrap();
                let u = g.underlying();
                let (n, m, cc) = (g.order(), matching_number(&u).0, cyclomatic_number(&u));
                let eta = g.order() - rank(&g);
                let e = spec.expected();
                families += 1;
                let upper = n as i64 - 2 * m as i64 + 2 * cc as i64;
                if eta as i64 != upper - k as i64 || (n, m, cc) != (e.n, e.m, e.c) || spec.k() != k || cc != c {
                    bad.push((c, k, seed));
                }
            }
        }
    }
    out.record(7, "family construction", bad.is_empty(), format!("{families} graphs, failures {bad:?}"), t);

    let t = Instant::now();
    out.record(
        8,
        "two-path spectral agreement",
        sweep.violations_of("spectral_agreement") == 0,
        format!("{} disagreements over {} orientations", sweep.violations_of("spectral_agreement"), sweep.orientations_checked),
        t,
    );

    let t = Instant::now();
    let mut rng = ChaCha8Rng::seed_from_u64(2024);
    let random = (0..1000).map(|_| verify_mixed(&random_mixed_graph(&mut rng))).fold(VerificationReport::default(), VerificationReport::merge);
    let all_small = verify_all(&EnumerationScope { connected_only: false, ..EnumerationScope::new(5, 10) }, jobs()).unwrap();
    let identity_failures: Vec<_> = IDENTITY_CHECKS
        .iter()
        .map(|c| (*c, random.violations_of(c) + all_small.violations_of(c)))
        .filter(|&(_, k)| k > 0)
        .collect();
    out.record(
        9,
        "structural identities",
        identity_failures.is_empty() && random.is_clean() && all_small.is_clean(),
        format!(
            "1000 random graphs, {} exhaustive graphs ({} orientations), failures {identity_failures:?}",
            all_small.graphs_checked, all_small.orientations_checked
        ),
        t,
    );

    if out.failed > 0 {
        for v in sweep.violations.iter().chain(&random.violations).chain(&all_small.violations).take(10) {
            eprintln!("{v:?}");
        }
        std::process::exit(1);
    }
}
