//! Order complexes of cover lattices: f-vectors, h-vectors and the Hilbert
//! series of the basic cover algebra.
//!
//! The faces of the order complex are the chains of the lattice. Face counts
//! are obtained by dynamic programming over the comparability relation (count
//! chains by length), never by materializing the chains; explicit face lists
//! are available separately for small lattices.

use num_bigint::BigInt;
use thiserror::Error;

use crate::graph::StandardGraph;
use crate::lattice::{CoverLattice, LatticeError};
use crate::series::{IntPolynomial, RationalSeries};

#[derive(Debug, Error)]
pub enum ComplexError {
    #[error(transparent)]
    Lattice(#[from] LatticeError),
    #[error("face counts exceed 128-bit integers")]
    CountOverflow,
}

/// Chain counts of an order complex: `counts[k]` is the number of chains
/// with `k` elements (faces of dimension `k − 1`); `counts[0] = 1` is the
/// empty face.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FaceComplex {
    pub counts: Vec<u128>,
}

impl FaceComplex {
    /// Dimension of the complex plus one: the size of the longest chain.
    pub fn max_face_size(&self) -> usize {
        self.counts.len() - 1
    }
}

/// Count the chains of the lattice by length.
pub fn order_complex(lattice: &CoverLattice) -> Result<FaceComplex, ComplexError> {
    let elems = lattice.elements();
    let m = elems.len();
    // ending[v][k]: chains with k+1 elements whose top is v. Elements come in
    // (cardinality, lex) order, so strict containments only point backwards.
    let mut ending: Vec<Vec<u128>> = Vec::with_capacity(m);
    let mut max_len = 0usize;
    for v in 0..m {
        let mut row = vec![1u128];
        for u in 0..v {
            if elems[u] & elems[v] == elems[u] && elems[u] != elems[v] {
                for (k, &cnt) in ending[u].iter().enumerate() {
                    if row.len() <= k + 1 {
                        row.push(0);
                    }
                    row[k + 1] = row[k + 1].checked_add(cnt).ok_or(ComplexError::CountOverflow)?;
                }
            }
        }
        max_len = max_len.max(row.len());
        ending.push(row);
    }
    let mut counts = vec![0u128; max_len + 1];
    counts[0] = 1;
    for row in &ending {
        for (k, &cnt) in row.iter().enumerate() {
            counts[k + 1] = counts[k + 1].checked_add(cnt).ok_or(ComplexError::CountOverflow)?;
        }
    }
    Ok(FaceComplex { counts })
}

/// All chains of the lattice as element-mask lists, grouped by size
/// (`faces[k]` holds the chains with `k` elements). Exponential; intended
/// for small lattices only.
pub fn enumerate_faces(lattice: &CoverLattice) -> Vec<Vec<Vec<u64>>> {
    let elems = lattice.elements();
    let mut faces: Vec<Vec<Vec<u64>>> = vec![vec![Vec::new()]];
    let mut frontier: Vec<Vec<usize>> = (0..elems.len()).map(|i| vec![i]).collect();
    while !frontier.is_empty() {
        faces.push(
            frontier
                .iter()
                .map(|c| c.iter().map(|&i| elems[i]).collect())
                .collect(),
        );
        let mut next = Vec::new();
        for chain in &frontier {
            let last = *chain.last().unwrap();
            for v in (last + 1)..elems.len() {
                if elems[last] & elems[v] == elems[last] && elems[last] != elems[v] {
                    let mut longer = chain.clone();
                    longer.push(v);
                    next.push(longer);
                }
            }
        }
        frontier = next;
    }
    faces
}

/// The f-vector `(f_{-1}, f_0, ..., f_{d-1})` with `f_{-1} = 1` and
/// `d = rank + 1` the Krull dimension of the Stanley–Reisner ring.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FVector {
    pub f: Vec<BigInt>,
    pub d: usize,
}

impl FVector {
    pub fn from_complex(complex: &FaceComplex) -> Self {
        Self {
            f: complex.counts.iter().map(|&c| BigInt::from(c)).collect(),
            d: complex.max_face_size(),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HVector {
    pub h: Vec<BigInt>,
}

impl HVector {
    pub fn polynomial(&self) -> IntPolynomial {
        IntPolynomial::from_bigints(self.h.clone())
    }

    pub fn sum(&self) -> BigInt {
        self.h.iter().sum()
    }
}

/// The standard f-to-h transform: `Σ_i f_{i-1} z^i (1-z)^{d-i} = Σ_j h_j z^j`,
/// in exact integer arithmetic. The result has `d + 1` entries `h_0..h_d`
/// (trailing zeros kept).
pub fn h_vector(fv: &FVector) -> HVector {
    let d = fv.d;
    let mut acc = IntPolynomial::zero();
    for (i, fi) in fv.f.iter().enumerate() {
        let term = IntPolynomial::one_minus_z_pow(d - i)
            .mul(&IntPolynomial::from_bigints(vec![fi.clone()]))
            .shift(i);
        acc = acc.add(&term);
    }
    let mut h: Vec<BigInt> = (0..=d).map(|j| acc.coeff(j)).collect();
    debug_assert!(acc.degree().map_or(true, |deg| deg <= d));
    // pad in case the accumulator trimmed trailing zeros
    while h.len() < d + 1 {
        h.push(BigInt::from(0));
    }
    HVector { h }
}

/// h-vector and rank of a lattice in one pass.
pub fn lattice_h_vector(lattice: &CoverLattice) -> Result<(HVector, usize), ComplexError> {
    let rank = lattice.rank()?;
    let complex = order_complex(lattice)?;
    debug_assert_eq!(complex.max_face_size(), rank + 1);
    Ok((h_vector(&FVector::from_complex(&complex)), rank))
}

/// Hilbert series of the basic cover algebra of `G_F`:
/// `h^F(z) / (1-z)^{r_F + 1}`, where `h^F` is the h-vector of the order
/// complex of `L_{G_F}`. The subset is given as a bitmask; `f_mask = 0`
/// selects the empty subset, for which the series is `1/(1-z)` by
/// convention (`h^∅ = 1`, `r_∅ = 0`).
pub fn basic_cover_series(g: &StandardGraph, f_mask: u64) -> Result<RationalSeries, ComplexError> {
    if f_mask == 0 {
        return Ok(RationalSeries::new(IntPolynomial::one(), 1));
    }
    let lattice = CoverLattice::build_masked(g, f_mask)?;
    let (hv, rank) = lattice_h_vector(&lattice)?;
    Ok(RationalSeries::new(hv.polynomial(), rank + 1))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::BipartiteGraph;
    use crate::lattice::build_lattice;

    fn standard(n: usize, edges: &[(usize, usize)]) -> StandardGraph {
        StandardGraph::try_new(BipartiteGraph::new(n, edges).unwrap()).unwrap()
    }

    fn g3() -> StandardGraph {
        standard(3, &[(0, 0), (1, 1), (2, 2), (1, 2), (2, 1)])
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

    fn fv(counts: &[u128]) -> FVector {
        FVector::from_complex(&FaceComplex {
            counts: counts.to_vec(),
        })
    }

    fn ints(v: &[i64]) -> Vec<BigInt> {
        v.iter().map(|&x| BigInt::from(x)).collect()
    }

    #[test]
    fn face_counts_for_known_lattices() {
        let two = build_lattice(&complete(2)).unwrap();
        assert_eq!(order_complex(&two).unwrap().counts, vec![1, 2, 1]);

        let l = build_lattice(&g3()).unwrap();
        assert_eq!(order_complex(&l).unwrap().counts, vec![1, 4, 5, 2]);

        let single = CoverLattice::from_elements_unchecked(1, vec![0]);
        assert_eq!(order_complex(&single).unwrap().counts, vec![1, 1]);
    }

    #[test]
    fn explicit_faces_agree_with_counts() {
        let l = build_lattice(&g3()).unwrap();
        let faces = enumerate_faces(&l);
        let counts = order_complex(&l).unwrap().counts;
        assert_eq!(faces.len(), counts.len());
        for (k, group) in faces.iter().enumerate() {
            assert_eq!(group.len() as u128, counts[k]);
        }
    }

    #[test]
    fn h_vector_examples() {
        assert_eq!(h_vector(&fv(&[1, 2, 1])).h, ints(&[1, 0, 0]));
        assert_eq!(h_vector(&fv(&[1, 4, 5, 2])).h, ints(&[1, 1, 0, 0]));
        assert_eq!(h_vector(&fv(&[1, 1])).h, ints(&[1, 0]));
    }

    #[test]
    fn h_sum_counts_maximal_chains() {
        for g in [g3(), complete(3), standard(2, &[(0, 0), (1, 1)])] {
            let lat = build_lattice(&g).unwrap();
            let (hv, _) = lattice_h_vector(&lat).unwrap();
            assert_eq!(hv.sum(), lat.count_maximal_chains());
        }
    }

    #[test]
    fn basic_series_examples() {
        let g = g3();
        let empty = basic_cover_series(&g, 0).unwrap();
        assert_eq!(empty, RationalSeries::new(IntPolynomial::one(), 1));

        let full = basic_cover_series(&g, 0b111).unwrap();
        assert_eq!(
            full,
            RationalSeries::new(IntPolynomial::from_coeffs(&[1, 1]), 3)
        );

        let k = complete(3);
        assert_eq!(
            basic_cover_series(&k, 0b111).unwrap(),
            RationalSeries::new(IntPolynomial::one(), 2)
        );
    }
}
