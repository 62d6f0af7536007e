//! Corpora of standardized graphs for verification: exhaustive enumeration
//! of all standardized edge relations at small `n`, and seeded random
//! instances for larger `n`.

use rand::Rng;

use crate::graph::{BipartiteGraph, StandardGraph};

/// Exhaustive enumeration walks all `2^{n(n-1)}` off-diagonal relations.
pub const ENUMERATION_MAX_N: usize = 5;

/// All standardized graphs on `n` pairs: reflexive edge relations closed
/// under condition (b). Panics if `n` exceeds [`ENUMERATION_MAX_N`].
pub fn enumerate_standard_graphs(n: usize) -> Vec<StandardGraph> {
    assert!(
        (1..=ENUMERATION_MAX_N).contains(&n),
        "exhaustive enumeration supports 1..={ENUMERATION_MAX_N}"
    );
    let positions: Vec<(usize, usize)> = (0..n)
        .flat_map(|i| (0..n).filter(move |&j| j != i).map(move |j| (i, j)))
        .collect();
    let mut out = Vec::new();
    let mut rows = vec![0u64; n];
    for mask in 0u64..(1 << positions.len()) {
        for (i, row) in rows.iter_mut().enumerate() {
            *row = 1 << i;
        }
        for (b, &(i, j)) in positions.iter().enumerate() {
            if mask >> b & 1 == 1 {
                rows[i] |= 1 << j;
            }
        }
        if rows_transitive(&rows) {
            let edges: Vec<(usize, usize)> = (0..n)
                .flat_map(|i| {
                    let row = rows[i];
                    (0..n).filter(move |&j| row >> j & 1 == 1).map(move |j| (i, j))
                })
                .collect();
            let g = BipartiteGraph::new(n, &edges).unwrap();
            out.push(StandardGraph::try_new(g).unwrap());
        }
    }
    out
}

fn rows_transitive(rows: &[u64]) -> bool {
    for (i, &row) in rows.iter().enumerate() {
        let mut rest = row & !(1 << i);
        while rest != 0 {
            let j = rest.trailing_zeros() as usize;
            rest &= rest - 1;
            if rows[j] & !row & !(1u64 << i) != 0 {
                return false;
            }
        }
    }
    true
}

/// A random standardized graph: sample an edge relation and close it under
/// reflexivity and transitivity.
pub fn random_standard_graph<R: Rng>(n: usize, rng: &mut R) -> StandardGraph {
    let density: f64 = rng.gen_range(0.05..0.5);
    let mut rows = vec![0u64; n];
    for (i, row) in rows.iter_mut().enumerate() {
        *row = 1 << i;
        for j in 0..n {
            if j != i && rng.gen_bool(density) {
                *row |= 1 << j;
            }
        }
    }
    // Warshall closure.
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
}

pub fn random_permutation<R: Rng>(n: usize, rng: &mut R) -> Vec<usize> {
    let mut perm: Vec<usize> = (0..n).collect();
    for i in (1..n).rev() {
        let j = rng.gen_range(0..=i);
        perm.swap(i, j);
    }
    perm
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    #[test]
    fn enumeration_counts_match_known_values() {
        // Standardized edge relations are the reflexive transitive relations;
        // their counts per n are 1, 4, 29, 355, 6942.
        assert_eq!(enumerate_standard_graphs(1).len(), 1);
        assert_eq!(enumerate_standard_graphs(2).len(), 4);
        assert_eq!(enumerate_standard_graphs(3).len(), 29);
        assert_eq!(enumerate_standard_graphs(4).len(), 355);
    }

    #[test]
    fn random_graphs_are_standardized() {
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        for _ in 0..50 {
            let g = random_standard_graph(6, &mut rng);
            assert!(g.as_graph().is_standardized());
        }
    }

    #[test]
    fn random_permutations_are_bijections() {
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        for _ in 0..20 {
            let mut p = random_permutation(5, &mut rng);
            p.sort_unstable();
            assert_eq!(p, vec![0, 1, 2, 3, 4]);
        }
    }
}
