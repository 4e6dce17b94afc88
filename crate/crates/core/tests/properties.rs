//! Randomised properties over small mixed graphs.

use std::collections::BTreeSet;

use mixnull::characterization::{attains_upper, cycle_rank, nullity_bounds};
use mixnull::families::{gen_cycle, gen_family, FamilySpec};
use mixnull::invariants::{
    components, cycles_vertex_disjoint, cyclomatic_number, matching_bruteforce, matching_number, ped, ped_closure,
    signature, BRUTEFORCE_EDGE_LIMIT,
};
use mixnull::linalg::{hermitian_adjacency, inertia, nullity, rank, rank_elimination};
use mixnull::verify::{canonical_form, graph6, relabel};
use mixnull::{spectrum, EdgeState, MixedGraph};
use proptest::prelude::*;

fn mixed_graph(max_n: usize) -> impl Strategy<Value = MixedGraph> {
    (1..=max_n).prop_flat_map(|n| {
        let pairs: Vec<(usize, usize)> = (0..n).flat_map(|v| (0..v).map(move |u| (u, v))).collect();
        let k = pairs.len();
        (Just(n), Just(pairs), proptest::collection::vec(0u8..6, k)).prop_map(|(n, pairs, picks)| {
            // half of the pairs are non-edges; the rest take one of three states
            let edges = pairs
                .into_iter()
                .zip(picks)
                .filter(|&(_, p)| p >= 3)
                .map(|((u, v), p)| (u, v, EdgeState::ALL[(p - 3) as usize]));
            MixedGraph::new(n, edges).unwrap()
        })
    })
}

fn without(g: &MixedGraph, vs: &[usize]) -> MixedGraph {
    g.delete_vertices(&vs.iter().copied().collect()).unwrap().0
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(300))]

    #[test]
    fn text_round_trip(g in mixed_graph(10)) {
        prop_assert_eq!(MixedGraph::parse(&g.to_text()).unwrap(), g);
    }

    #[test]
    fn graph6_round_trip(g in mixed_graph(10)) {
        let u = g.underlying();
        prop_assert_eq!(graph6::decode(&graph6::encode(&u)).unwrap(), u);
    }

    #[test]
    fn deletion_commutes_with_the_adjacency_matrix(g in mixed_graph(8), x in 0usize..8) {
        let x = x % g.order();
        let keep: Vec<_> = (0..g.order()).filter(|&v| v != x).collect();
        prop_assert_eq!(hermitian_adjacency(&without(&g, &[x])), hermitian_adjacency(&g).principal_submatrix(&keep));
    }

    #[test]
    fn spectral_routes_agree(g in mixed_graph(9)) {
        let h = hermitian_adjacency(&g);
        let s = inertia(&h);
        prop_assert_eq!(s.rank, rank_elimination(&h));
        prop_assert_eq!(s.positive + s.negative + s.nullity, g.order());
        prop_assert_eq!(spectrum(&g.reversed()), s);
    }

    #[test]
    fn rank_is_monotone_and_nullity_moves_by_one(g in mixed_graph(10)) {
        let (r, eta) = (rank(&g), nullity(&g));
        for x in 0..g.order() {
            let h = without(&g, &[x]);
            prop_assert!(rank(&h) <= r);
            prop_assert!(nullity(&h).abs_diff(eta) <= 1);
        }
    }

    #[test]
    fn rank_adds_over_components(a in mixed_graph(6), b in mixed_graph(6)) {
        prop_assert_eq!(rank(&a.disjoint_union(&b)), rank(&a) + rank(&b));
    }

    #[test]
    fn bounds_hold(g in mixed_graph(10)) {
        let b = nullity_bounds(&g);
        prop_assert!(b.holds(), "{:?}", b);
        prop_assert_ne!(b.s, 1);
        prop_assert_eq!(attains_upper(&g).attains, b.s == 0);
    }

    #[test]
    fn pendant_deletion_keeps_nullity_and_matching(g in mixed_graph(10)) {
        let u = g.underlying();
        let m = matching_number(&u).0;
        for x in g.pendant_vertices() {
            let y = g.pendant_neighbor(x).unwrap();
            let h = without(&g, &[x, y]);
            prop_assert_eq!(nullity(&h), nullity(&g));
            prop_assert_eq!(matching_number(&h.underlying()).0 + 1, m);
            prop_assert_eq!(matching_number(&without(&g, &[y]).underlying()).0 + 1, m);
        }
        if let Ok(step) = ped(&g) {
            prop_assert_eq!(nullity(&step.graph), nullity(&g));
        }
        let closed = ped_closure(&g);
        prop_assert!(closed.pendant_vertices().is_empty());
        prop_assert_eq!(nullity(&closed), nullity(&g));
    }

    #[test]
    fn quasi_pendant_on_a_cycle_costs_two(g in mixed_graph(10)) {
        let u = g.underlying();
        let on_cycle = mixnull::invariants::cycle_membership(&u).on_cycle;
        if g.pendant_vertices().iter().any(|&x| on_cycle[g.pendant_neighbor(x).unwrap()]) {
            prop_assert!(nullity_bounds(&g).s >= 2);
        }
    }

    #[test]
    fn matching_number_vs_exhaustive_search(g in mixed_graph(10)) {
        let u = g.underlying();
        let (m, witness) = matching_number(&u);
        prop_assert!(witness.is_valid(&u) && witness.is_maximum(&u));
        if u.size() <= BRUTEFORCE_EDGE_LIMIT {
            prop_assert_eq!(m, matching_bruteforce(&u).unwrap());
        }
        for v in 0..u.order() {
            let mv = matching_number(&u.delete_vertices(&BTreeSet::from([v])).unwrap().0).0;
            prop_assert!(mv <= m && m <= mv + 1);
        }
    }

    #[test]
    fn cyclomatic_number_formula(g in mixed_graph(10)) {
        let u = g.underlying();
        prop_assert_eq!(cyclomatic_number(&u) + u.order(), u.size() + components(&u));
    }

    #[test]
    fn signature_is_direction_free(g in mixed_graph(9)) {
        if let Some(cycles) = cycles_vertex_disjoint(&g.underlying()) {
            for c in cycles {
                let s = signature(&g, &c).unwrap();
                let mut back = c.clone();
                back.reverse();
                let r = signature(&g, &back).unwrap();
                prop_assert_eq!(r.sigma, s.sigma);
                prop_assert_eq!(s.sigma, s.f.abs_diff(s.b));
                let undirected = c.len() - s.f - s.b;
                prop_assert_eq!(s.sigma % 2, (c.len() - undirected) % 2);
            }
        }
    }

    #[test]
    fn canonical_form_ignores_labels(g in mixed_graph(8), seed in any::<u64>()) {
        let u = g.underlying();
        let mut perm: Vec<_> = (0..u.order()).collect();
        let mut s = seed;
        for i in (1..perm.len()).rev() {
            s = s.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
            perm.swap(i, (s >> 33) as usize % (i + 1));
        }
        prop_assert_eq!(canonical_form(&relabel(&u, &perm)).0, canonical_form(&u).0);
    }
}

#[test]
fn generated_cycles_match_the_rank_table() {
    for n in 3..=10 {
        for sigma in 0..=n {
            let g = gen_cycle(n, sigma).unwrap();
            let order: Vec<_> = (0..n).collect();
            assert_eq!(signature(&g, &order).unwrap().sigma, sigma);
            assert_eq!(cycle_rank(n, sigma).unwrap(), rank(&g), "n = {n}, σ = {sigma}");
        }
    }
}

#[test]
fn families_over_many_seeds() {
    for c in 1..=4 {
        for s1 in 0..=c {
            for s3 in 0..=c - s1 {
                for seed in 0..8 {
                    let spec = FamilySpec::new(s1, c - s1 - s3, s3).with_seed(seed);
                    let g = gen_family(&spec).unwrap();
                    let e = spec.expected();
                    let b = nullity_bounds(&g);
                    assert_eq!(b.eta as usize, e.eta, "{spec:?}");
                    assert_eq!(b.s as usize, e.k, "{spec:?}");
                }
            }
        }
    }
}
