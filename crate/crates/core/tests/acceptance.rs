//! Acceptance suite: one test per criterion, each printing a pass line.
//!
//! The corpus is the exhaustive family of standardized graphs (all reflexive
//! edge relations closed under condition (b)) for small pair counts, plus
//! seeded random instances for larger ones.

use num_bigint::BigInt;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use cover_algebra::corpus::{enumerate_standard_graphs, random_permutation, random_standard_graph};
use cover_algebra::lattice::{
    complement_sublattice, delta_completion_targets, verify_cover_bijection,
};
use cover_algebra::series::{h_polynomial_from, multiplicity_routes_from, vertex_cover_series_from};
use cover_algebra::toric::{hilbert_function_direct, series_via_initial_ideal};
use cover_algebra::{
    build_lattice, cm_reduce, delta_completion, groebner_basis, knn_series, lattice_embedding,
    multiplicity_bounds, vertex_cover_series, BipartiteGraph, IntPolynomial, RationalSeries,
    StandardGraph, SubsetSweep,
};

fn standard(n: usize, edges: &[(usize, usize)]) -> StandardGraph {
    StandardGraph::try_new(BipartiteGraph::new(n, edges).unwrap()).unwrap()
}

fn complete(n: usize) -> StandardGraph {
    let mut edges = Vec::new();
    for i in 0..n {
        for j in 0..n {
            edges.push((i, j));
        }
    }
    standard(n, &edges)
}

fn g3() -> StandardGraph {
    standard(3, &[(0, 0), (1, 1), (2, 2), (1, 2), (2, 1)])
}

fn chain3() -> StandardGraph {
    standard(3, &[(0, 0), (1, 1), (2, 2), (0, 1), (0, 2), (1, 2)])
}

fn antichain(n: usize) -> StandardGraph {
    let edges: Vec<(usize, usize)> = (0..n).map(|i| (i, i)).collect();
    standard(n, &edges)
}

fn corpus_up_to(max_n: usize) -> Vec<StandardGraph> {
    (1..=max_n).flat_map(enumerate_standard_graphs).collect()
}

#[test]
fn criterion_1_knn_golden_series() {
    for n in 1..=6 {
        let g = complete(n);
        let sweep = SubsetSweep::compute(&g, 12).unwrap();
        assert_eq!(vertex_cover_series_from(&sweep), knn_series(n), "n={n}");
        assert_eq!(
            h_polynomial_from(&sweep).eval_one(),
            BigInt::from(n as u64 + 1),
            "n={n}"
        );
    }
    println!("criterion 1 (K_nn golden series, n=1..6): PASS");
}

/// Exhaustive graph-isomorphism search over all bijections of the 2n
/// vertices.
fn isomorphic_bruteforce(a: &BipartiteGraph, b: &BipartiteGraph) -> bool {
    assert_eq!(a.n(), b.n());
    let n = a.n();
    let edge_set = |g: &BipartiteGraph| -> Vec<(usize, usize)> {
        let mut e: Vec<(usize, usize)> = g
            .edges()
            .into_iter()
            .map(|(i, j)| (i.min(n + j), i.max(n + j)))
            .collect();
        e.sort_unstable();
        e
    };
    let target = edge_set(b);
    let mut perm: Vec<usize> = (0..2 * n).collect();
    permute_and_check(&mut perm, 0, &edge_set(a), &target)
}

fn permute_and_check(
    perm: &mut Vec<usize>,
    pos: usize,
    edges: &[(usize, usize)],
    target: &[(usize, usize)],
) -> bool {
    if pos == perm.len() {
        let mut mapped: Vec<(usize, usize)> = edges
            .iter()
            .map(|&(u, v)| {
                let (a, b) = (perm[u], perm[v]);
                (a.min(b), a.max(b))
            })
            .collect();
        mapped.sort_unstable();
        return mapped == target;
    }
    for i in pos..perm.len() {
        perm.swap(pos, i);
        if permute_and_check(perm, pos + 1, edges, target) {
            perm.swap(pos, i);
            return true;
        }
        perm.swap(pos, i);
    }
    false
}

#[test]
fn criterion_2_non_isomorphic_pair_with_equal_series() {
    let expect = RationalSeries::new(IntPolynomial::from_coeffs(&[1, 3, 3, 1]), 7);
    assert_eq!(vertex_cover_series(&g3()).unwrap(), expect);
    assert_eq!(vertex_cover_series(&chain3()).unwrap(), expect);
    assert!(!isomorphic_bruteforce(g3().as_graph(), chain3().as_graph()));
    // sanity for the isomorphism oracle itself
    assert!(isomorphic_bruteforce(g3().as_graph(), g3().as_graph()));
    println!("criterion 2 (equal series, non-isomorphic pair): PASS");
}

#[test]
fn criterion_3_subset_formula_consistency() {
    let mut graphs = corpus_up_to(4);
    let mut rng = ChaCha8Rng::seed_from_u64(0xC0FFEE);
    for _ in 0..50 {
        graphs.push(random_standard_graph(5, &mut rng));
    }
    for _ in 0..50 {
        graphs.push(random_standard_graph(6, &mut rng));
    }
    graphs.par_iter().for_each(|g| {
        let sweep = SubsetSweep::compute(g, 12).unwrap();
        let series = vertex_cover_series_from(&sweep);
        let h = h_polynomial_from(&sweep);
        assert_eq!(series.numer(), &h, "graph {:?}", g.as_graph());
        assert_eq!(series.denom_pow(), 2 * g.n() + 1);
    });
    println!(
        "criterion 3 (series formula vs h-polynomial, {} graphs): PASS",
        graphs.len()
    );
}

#[test]
fn criterion_4_initial_ideal_oracle() {
    let graphs = corpus_up_to(4);
    graphs.par_iter().for_each(|g| {
        assert_eq!(
            series_via_initial_ideal(g).unwrap(),
            vertex_cover_series(g).unwrap(),
            "graph {:?}",
            g.as_graph()
        );
    });
    println!(
        "criterion 4 (initial-ideal series oracle, {} graphs): PASS",
        graphs.len()
    );
}

#[test]
fn criterion_5_buchberger_verification() {
    let graphs: Vec<StandardGraph> = corpus_up_to(4)
        .into_iter()
        .filter(|g| build_lattice(g).unwrap().len() <= 16)
        .collect();
    graphs.par_iter().for_each(|g| {
        let lattice = build_lattice(g).unwrap();
        let gb = groebner_basis(&lattice);
        assert!(
            cover_algebra::buchberger_verify(&gb, 16).unwrap(),
            "graph {:?}",
            g.as_graph()
        );
    });
    println!(
        "criterion 5 (Buchberger S-pair verification, {} graphs): PASS",
        graphs.len()
    );
}

#[test]
fn criterion_6_direct_counting_oracle() {
    let small = corpus_up_to(3);
    small.par_iter().for_each(|g| {
        let coeffs = vertex_cover_series(g).unwrap().expand(7);
        for d in 0..=6 {
            assert_eq!(
                hilbert_function_direct(g, d, 4, 6).unwrap(),
                coeffs[d],
                "graph {:?} degree {d}",
                g.as_graph()
            );
        }
    });
    let larger = enumerate_standard_graphs(4);
    larger.par_iter().for_each(|g| {
        let coeffs = vertex_cover_series(g).unwrap().expand(5);
        for d in 0..=4 {
            assert_eq!(
                hilbert_function_direct(g, d, 4, 6).unwrap(),
                coeffs[d],
                "graph {:?} degree {d}",
                g.as_graph()
            );
        }
    });
    println!(
        "criterion 6 (direct count oracle, {} + {} graphs): PASS",
        small.len(),
        larger.len()
    );
}

#[test]
fn criterion_7_structural_identities() {
    let graphs = corpus_up_to(4);
    graphs.par_iter().for_each(|g| {
        let n = g.n();
        let sweep = SubsetSweep::compute(g, 12).unwrap();
        let h = h_polynomial_from(&sweep);
        // h_n = 1, h_{n+1} = 0, palindromic
        assert_eq!(h.degree(), Some(n), "graph {:?}", g.as_graph());
        assert_eq!(h.coeff(n), BigInt::from(1));
        for i in 0..=n {
            assert_eq!(h.coeff(i), h.coeff(n - i));
            assert!(h.coeff(i) >= BigInt::from(0));
        }
        // h^F vanishes at rank and rank+1 for every nonempty F
        for mask in 1u64..(1 << n) {
            let hf = sweep.h_poly_of(mask);
            let r = sweep.rank_of(mask);
            assert_eq!(hf.coeff(r), BigInt::from(0));
            assert_eq!(hf.coeff(r + 1), BigInt::from(0));
        }
        // three multiplicity routes agree
        let routes = multiplicity_routes_from(&sweep);
        assert_eq!(routes[0], routes[1]);
        assert_eq!(routes[1], routes[2]);
        let e = routes[0].clone();
        // sharp bounds with their equality characterizations
        let (lo, hi) = multiplicity_bounds(n);
        assert!(lo <= e && e <= hi);
        let lattice = build_lattice(g).unwrap();
        assert_eq!(e == lo, lattice.len() == 2, "graph {:?}", g.as_graph());
        assert_eq!(
            e == hi,
            lattice.len() == 1 << n,
            "graph {:?}",
            g.as_graph()
        );
    });
    // bound-equality witnesses at n = 3
    let e_k33 = vertex_cover_series(&complete(3)).unwrap().numer().eval_one();
    assert_eq!(e_k33, BigInt::from(4));
    let e_anti = vertex_cover_series(&antichain(3)).unwrap().numer().eval_one();
    assert_eq!(e_anti, BigInt::from(16));
    println!(
        "criterion 7 (structural identities, {} graphs): PASS",
        graphs.len()
    );
}

#[test]
fn criterion_8_isomorphism_suite() {
    // Lemma-style cover bijection wherever an induced complete pair exists.
    let with_pairs = corpus_up_to(5);
    with_pairs.par_iter().for_each(|g| {
        for i in 0..g.n() {
            for j in (i + 1)..g.n() {
                if g.has_induced_complete_pair(i, j) {
                    assert!(
                        verify_cover_bijection(g, i, j),
                        "graph {:?} pair ({i},{j})",
                        g.as_graph()
                    );
                }
            }
        }
    });

    // ν and φ as poset isomorphisms, and the CM reduction contract.
    let graphs = corpus_up_to(4);
    graphs.par_iter().for_each(|g| {
        let n = g.n();
        let reduction = cm_reduce(g).unwrap();
        let sub_lattice = build_lattice(&reduction.subgraph).unwrap();
        assert_eq!(
            sub_lattice.rank().unwrap(),
            reduction.subset.len(),
            "reduction of {:?} is not CM",
            g.as_graph()
        );
        let nu = lattice_embedding(g, &reduction.subset).unwrap();
        assert!(nu.is_isomorphism);
        assert_eq!(nu.pairs.len(), build_lattice(g).unwrap().len());

        for f_mask in 1u64..((1 << n) - 1) {
            let domain = complement_sublattice(g, f_mask).unwrap();
            let images: Vec<u64> = domain
                .iter()
                .map(|&alpha| delta_completion(g, f_mask, alpha).unwrap())
                .collect();
            let mut sorted = images.clone();
            sorted.sort_unstable();
            let mut targets = delta_completion_targets(g, f_mask).unwrap();
            targets.sort_unstable();
            assert_eq!(sorted, targets, "graph {:?} F={f_mask:b}", g.as_graph());
            for (ai, &a) in domain.iter().enumerate() {
                for (bi, &b) in domain.iter().enumerate() {
                    assert_eq!(
                        a & b == a,
                        images[ai] & images[bi] == images[ai],
                        "completion not order-faithful on {:?}",
                        g.as_graph()
                    );
                }
            }
        }
    });
    println!(
        "criterion 8 (cover bijection n<=5, embeddings and completions n<=4): PASS"
    );
}

#[test]
fn criterion_9_permutation_invariance() {
    let mut rng = ChaCha8Rng::seed_from_u64(0xBEEF);
    for trial in 0..20 {
        let g = random_standard_graph(5, &mut rng);
        let sigma = random_permutation(5, &mut rng);
        let permuted = g.apply_permutation(&sigma).unwrap();
        assert_eq!(
            vertex_cover_series(&g).unwrap(),
            vertex_cover_series(&permuted).unwrap(),
            "trial {trial}: sigma {sigma:?} on {:?}",
            g.as_graph()
        );
    }
    println!("criterion 9 (permutation invariance, 20 trials at n=5): PASS");
}
