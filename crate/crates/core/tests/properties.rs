//! Property tests: series arithmetic against coefficient expansion, format
//! round-trips, and the standardization/unmixedness contract.

use num_bigint::BigInt;
use proptest::prelude::*;

use cover_algebra::complex::lattice_h_vector;
use cover_algebra::{
    build_lattice, is_unmixed_bruteforce, standardize, BipartiteGraph, IntPolynomial,
    RationalSeries, StandardGraph,
};

fn poly() -> impl Strategy<Value = IntPolynomial> {
    prop::collection::vec(-6i64..=6, 0..7).prop_map(|c| IntPolynomial::from_coeffs(&c))
}

fn arb_graph(max_n: usize) -> impl Strategy<Value = BipartiteGraph> {
    (1usize..=max_n).prop_flat_map(|n| {
        prop::collection::vec(any::<bool>(), n * n).prop_map(move |bits| {
            let edges: Vec<(usize, usize)> = bits
                .iter()
                .enumerate()
                .filter_map(|(p, &on)| on.then_some((p / n, p % n)))
                .collect();
            BipartiteGraph::new(n, &edges).unwrap()
        })
    })
}

fn arb_standard(max_n: usize) -> impl Strategy<Value = StandardGraph> {
    (1usize..=max_n).prop_flat_map(|n| {
        prop::collection::vec(any::<bool>(), n * n).prop_map(move |bits| {
            let mut rows: Vec<u64> = (0..n).map(|i| 1u64 << i).collect();
            for (p, &on) in bits.iter().enumerate() {
                if on {
                    rows[p / n] |= 1 << (p % n);
                }
            }
            for k in 0..n {
                for i in 0..n {
                    if rows[i] >> k & 1 == 1 {
                        rows[i] |= rows[k];
                    }
                }
            }
            let edges: Vec<(usize, usize)> = (0..n)
                .flat_map(|i| {
                    let row = rows[i];
                    (0..n).filter(move |&j| row >> j & 1 == 1).map(move |j| (i, j))
                })
                .collect();
            StandardGraph::try_new(BipartiteGraph::new(n, &edges).unwrap()).unwrap()
        })
    })
}

proptest! {
    #[test]
    fn common_denominator_factors_cancel(p in poly(), k in 0usize..4, d in 0usize..5) {
        let scaled = p.mul(&IntPolynomial::one_minus_z_pow(k));
        prop_assert_eq!(RationalSeries::new(scaled, d + k), RationalSeries::new(p, d));
    }

    #[test]
    fn series_arithmetic_matches_expansion(
        a in poly(),
        b in poly(),
        da in 0usize..4,
        db in 0usize..4,
    ) {
        let sa = RationalSeries::new(a, da);
        let sb = RationalSeries::new(b, db);
        let (ea, eb) = (sa.expand(8), sb.expand(8));
        let esum = sa.add(&sb).expand(8);
        let eprod = sa.mul(&sb).expand(8);
        for i in 0..8 {
            prop_assert_eq!(&esum[i], &(&ea[i] + &eb[i]));
            let conv: BigInt = (0..=i).map(|j| &ea[j] * &eb[i - j]).sum();
            prop_assert_eq!(&eprod[i], &conv);
        }
    }

    #[test]
    fn graph_json_roundtrip(g in arb_graph(5)) {
        prop_assert_eq!(BipartiteGraph::from_json(&g.to_json()).unwrap(), g);
    }

    #[test]
    fn standardize_acceptance_implies_unmixed(g in arb_graph(4)) {
        if let Ok(s) = standardize(&g) {
            prop_assert!(is_unmixed_bruteforce(&g, 24).unwrap());
            prop_assert!(is_unmixed_bruteforce(s.graph.as_graph(), 24).unwrap());
            let again = standardize(s.graph.as_graph()).unwrap();
            prop_assert!(again.relabeling.is_identity());
        }
    }

    #[test]
    fn basic_h_vector_contract(g in arb_standard(5)) {
        let lattice = build_lattice(&g).unwrap();
        let (hv, rank) = lattice_h_vector(&lattice).unwrap();
        prop_assert_eq!(hv.sum(), lattice.count_maximal_chains());
        prop_assert!(hv.h.iter().all(|c| c >= &BigInt::from(0)));
        prop_assert_eq!(&hv.h[rank], &BigInt::from(0));
        prop_assert_eq!(&hv.h[rank + 1], &BigInt::from(0));
    }
}
