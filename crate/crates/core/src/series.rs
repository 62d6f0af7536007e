//! Exact rational Hilbert series arithmetic and the series formulas for the
//! vertex cover algebra.
//!
//! Series are integer polynomials over a `(1-z)^d` denominator, kept in
//! canonical form (numerator not divisible by `1-z` unless zero). The main
//! entry points sum the basic cover series of all induced subgraphs `G_F`
//! over the `2^n` subsets `F`; per-subset lattice data is computed once and
//! shared by the series, the h-polynomial and the multiplicity.

use num_bigint::BigInt;
use num_traits::{One, Zero};
use rayon::prelude::*;

use crate::complex::{lattice_h_vector, ComplexError};
use crate::graph::StandardGraph;
use crate::lattice::{CoverLattice, LatticeError};

/// Integer polynomial in `z`, dense coefficients, trailing zeros trimmed.
#[derive(Clone, PartialEq, Eq, Debug, Default)]
pub struct IntPolynomial {
    coeffs: Vec<BigInt>,
}

impl IntPolynomial {
    pub fn zero() -> Self {
        Self { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Self::from_coeffs(&[1])
    }

    pub fn from_coeffs(coeffs: &[i64]) -> Self {
        Self::from_bigints(coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    pub fn from_bigints(coeffs: Vec<BigInt>) -> Self {
        let mut p = Self { coeffs };
        p.trim();
        p
    }

    fn trim(&mut self) {
        while self.coeffs.last().is_some_and(|c| c.is_zero()) {
            self.coeffs.pop();
        }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn coeff(&self, i: usize) -> BigInt {
        self.coeffs.get(i).cloned().unwrap_or_else(BigInt::zero)
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn add(&self, other: &Self) -> Self {
        let len = self.coeffs.len().max(other.coeffs.len());
        let mut out = Vec::with_capacity(len);
        for i in 0..len {
            out.push(self.coeff(i) + other.coeff(i));
        }
        Self::from_bigints(out)
    }

    pub fn sub(&self, other: &Self) -> Self {
        let len = self.coeffs.len().max(other.coeffs.len());
        let mut out = Vec::with_capacity(len);
        for i in 0..len {
            out.push(self.coeff(i) - other.coeff(i));
        }
        Self::from_bigints(out)
    }

    pub fn mul(&self, other: &Self) -> Self {
        if self.is_zero() || other.is_zero() {
            return Self::zero();
        }
        let mut out = vec![BigInt::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in other.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        Self::from_bigints(out)
    }

    /// Multiply by `z^k`.
    pub fn shift(&self, k: usize) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        let mut out = vec![BigInt::zero(); k];
        out.extend(self.coeffs.iter().cloned());
        Self { coeffs: out }
    }

    /// The expansion of `(1 - z)^k`.
    pub fn one_minus_z_pow(k: usize) -> Self {
        let mut p = Self::one();
        let step = Self::from_coeffs(&[1, -1]);
        for _ in 0..k {
            p = p.mul(&step);
        }
        p
    }

    /// Exact quotient by `(1 - z)`, if divisible.
    pub fn div_one_minus_z(&self) -> Option<Self> {
        if self.is_zero() {
            return Some(Self::zero());
        }
        // p = (1 - z) q  =>  q_0 = p_0, q_i = p_i + q_{i-1}; exact iff the
        // carried remainder vanishes.
        let mut q = Vec::with_capacity(self.coeffs.len());
        let mut carry = BigInt::zero();
        for c in &self.coeffs {
            carry = c + &carry;
            q.push(carry.clone());
        }
        if carry.is_zero() {
            q.pop();
            Some(Self::from_bigints(q))
        } else {
            None
        }
    }

    pub fn eval_one(&self) -> BigInt {
        self.coeffs.iter().sum()
    }
}

impl std::fmt::Display for IntPolynomial {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            if first {
                first = false;
            } else {
                write!(f, " + ")?;
            }
            match i {
                0 => write!(f, "{c}")?,
                1 if c.is_one() => write!(f, "z")?,
                1 => write!(f, "{c}*z")?,
                _ if c.is_one() => write!(f, "z^{i}")?,
                _ => write!(f, "{c}*z^{i}")?,
            }
        }
        Ok(())
    }
}

/// `numerator / (1 - z)^denom_pow` in canonical form: the numerator is not
/// divisible by `1 - z` unless it is zero (then the denominator power is 0).
/// Equality is equality of canonical forms.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct RationalSeries {
    numer: IntPolynomial,
    denom_pow: usize,
}

impl RationalSeries {
    pub fn new(numer: IntPolynomial, denom_pow: usize) -> Self {
        let mut s = Self { numer, denom_pow };
        s.canonicalize();
        s
    }

    pub fn zero() -> Self {
        Self::new(IntPolynomial::zero(), 0)
    }

    fn canonicalize(&mut self) {
        if self.numer.is_zero() {
            self.denom_pow = 0;
            return;
        }
        while self.denom_pow > 0 {
            match self.numer.div_one_minus_z() {
                Some(q) => {
                    self.numer = q;
                    self.denom_pow -= 1;
                }
                None => break,
            }
        }
    }

    pub fn numer(&self) -> &IntPolynomial {
        &self.numer
    }

    pub fn denom_pow(&self) -> usize {
        self.denom_pow
    }

    pub fn add(&self, other: &Self) -> Self {
        let d = self.denom_pow.max(other.denom_pow);
        let a = self
            .numer
            .mul(&IntPolynomial::one_minus_z_pow(d - self.denom_pow));
        let b = other
            .numer
            .mul(&IntPolynomial::one_minus_z_pow(d - other.denom_pow));
        Self::new(a.add(&b), d)
    }

    pub fn mul(&self, other: &Self) -> Self {
        Self::new(
            self.numer.mul(&other.numer),
            self.denom_pow + other.denom_pow,
        )
    }

    /// Taylor coefficients of the series up to degree `terms - 1`, using
    /// `1/(1-z)^d = Σ_k C(k+d-1, d-1) z^k`.
    pub fn expand(&self, terms: usize) -> Vec<BigInt> {
        let d = self.denom_pow;
        let mut inv = Vec::with_capacity(terms);
        let mut binom = BigInt::one();
        for k in 0..terms {
            if d == 0 {
                inv.push(if k == 0 { BigInt::one() } else { BigInt::zero() });
            } else {
                if k > 0 {
                    binom = &binom * BigInt::from((k + d - 1) as u64) / BigInt::from(k as u64);
                }
                inv.push(binom.clone());
            }
        }
        let mut out = vec![BigInt::zero(); terms];
        for (i, c) in self.numer.coeffs().iter().enumerate() {
            for (k, b) in inv.iter().enumerate() {
                if i + k >= terms {
                    break;
                }
                out[i + k] += c * b;
            }
        }
        out
    }
}

impl std::fmt::Display for RationalSeries {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self.denom_pow {
            0 => write!(f, "{}", self.numer),
            1 => write!(f, "({}) / (1 - z)", self.numer),
            d => write!(f, "({}) / (1 - z)^{d}", self.numer),
        }
    }
}

/// Per-subset lattice data shared by the series formulas: for each
/// `F ⊆ [n]`, the rank of `L_{G_F}`, the h-polynomial `h^F(z)` of its order
/// complex and its maximal-chain count. `F = ∅` carries the convention
/// `h^∅ = 1`, `r_∅ = 0`.
pub struct SubsetSweep {
    n: usize,
    ranks: Vec<usize>,
    h_polys: Vec<IntPolynomial>,
    max_chains: Vec<BigInt>,
}

impl SubsetSweep {
    pub fn compute(g: &StandardGraph, max_n: usize) -> Result<Self, ComplexError> {
        let n = g.n();
        if n > max_n {
            return Err(LatticeError::TooLarge { n }.into());
        }
        let per: Vec<(usize, IntPolynomial, BigInt)> = (0u64..(1 << n))
            .into_par_iter()
            .map(|mask| -> Result<_, ComplexError> {
                if mask == 0 {
                    return Ok((0, IntPolynomial::one(), BigInt::one()));
                }
                let lattice = CoverLattice::build_masked(g, mask)?;
                let (hv, rank) = lattice_h_vector(&lattice)?;
                let chains = lattice.count_maximal_chains();
                Ok((rank, hv.polynomial(), chains))
            })
            .collect::<Result<_, _>>()?;
        let mut ranks = Vec::with_capacity(per.len());
        let mut h_polys = Vec::with_capacity(per.len());
        let mut max_chains = Vec::with_capacity(per.len());
        for (r, h, c) in per {
            ranks.push(r);
            h_polys.push(h);
            max_chains.push(c);
        }
        Ok(Self {
            n,
            ranks,
            h_polys,
            max_chains,
        })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn rank_of(&self, f_mask: u64) -> usize {
        self.ranks[f_mask as usize]
    }

    pub fn h_poly_of(&self, f_mask: u64) -> &IntPolynomial {
        &self.h_polys[f_mask as usize]
    }

    /// Cohen–Macaulay test for `G_F`; the empty subset counts as CM by
    /// convention.
    pub fn is_cm(&self, f_mask: u64) -> bool {
        self.ranks[f_mask as usize] == f_mask.count_ones() as usize
    }
}

/// Hilbert series of the vertex cover algebra:
/// `H(z) = (1-z)^{-n} Σ_F H_{Ā(G_F)}(z) (z/(1-z))^{n-|F|}`, in canonical
/// form with denominator power `2n + 1`.
pub fn vertex_cover_series_from(sweep: &SubsetSweep) -> RationalSeries {
    let n = sweep.n;
    let mut acc = RationalSeries::zero();
    for mask in 0u64..(1 << n) {
        let size = mask.count_ones() as usize;
        let rank = sweep.rank_of(mask);
        let term = RationalSeries::new(
            sweep.h_poly_of(mask).shift(n - size),
            rank + 1 + (n - size) + n,
        );
        acc = acc.add(&term);
    }
    debug_assert_eq!(acc.denom_pow(), 2 * n + 1);
    acc
}

/// The h-polynomial `h(z) = Σ_F h^F(z) (1-z)^{|F|-r_F} z^{n-|F|}`, evaluated
/// purely in polynomial arithmetic. Equals the numerator of
/// [`vertex_cover_series_from`]; the two routes are kept independent so their
/// agreement can be asserted.
pub fn h_polynomial_from(sweep: &SubsetSweep) -> IntPolynomial {
    let n = sweep.n;
    let mut acc = IntPolynomial::zero();
    for mask in 0u64..(1 << n) {
        let size = mask.count_ones() as usize;
        let rank = sweep.rank_of(mask);
        let term = sweep
            .h_poly_of(mask)
            .mul(&IntPolynomial::one_minus_z_pow(size - rank))
            .shift(n - size);
        acc = acc.add(&term);
    }
    acc
}

/// Multiplicity `e(A(G)) = Σ_{F : G_F Cohen–Macaulay} e(Ā(G_F))`, the empty
/// subset included by convention, with `e(Ā(G_F)) = h^F(1)`.
pub fn multiplicity_from(sweep: &SubsetSweep) -> BigInt {
    let n = sweep.n;
    let mut total = BigInt::zero();
    for mask in 0u64..(1 << n) {
        if sweep.is_cm(mask) {
            total += sweep.h_poly_of(mask).eval_one();
        }
    }
    total
}

/// The three independent multiplicity routes, in order: `h(1)` from the
/// h-polynomial, the Cohen–Macaulay subset sum of `h^F(1)`, and the
/// Cohen–Macaulay subset sum of maximal-chain counts.
pub fn multiplicity_routes_from(sweep: &SubsetSweep) -> [BigInt; 3] {
    let n = sweep.n;
    let via_h = h_polynomial_from(sweep).eval_one();
    let via_hf = multiplicity_from(sweep);
    let mut via_chains = BigInt::zero();
    for mask in 0u64..(1 << n) {
        if sweep.is_cm(mask) {
            via_chains += &sweep.max_chains[mask as usize];
        }
    }
    [via_h, via_hf, via_chains]
}

pub fn vertex_cover_series(g: &StandardGraph) -> Result<RationalSeries, ComplexError> {
    Ok(vertex_cover_series_from(&SubsetSweep::compute(
        g,
        crate::DEFAULT_SWEEP_MAX_N,
    )?))
}

pub fn h_polynomial(g: &StandardGraph) -> Result<IntPolynomial, ComplexError> {
    Ok(h_polynomial_from(&SubsetSweep::compute(
        g,
        crate::DEFAULT_SWEEP_MAX_N,
    )?))
}

pub fn multiplicity(g: &StandardGraph) -> Result<BigInt, ComplexError> {
    Ok(multiplicity_from(&SubsetSweep::compute(
        g,
        crate::DEFAULT_SWEEP_MAX_N,
    )?))
}

pub fn multiplicity_routes(g: &StandardGraph) -> Result<[BigInt; 3], ComplexError> {
    Ok(multiplicity_routes_from(&SubsetSweep::compute(
        g,
        crate::DEFAULT_SWEEP_MAX_N,
    )?))
}

/// Sharp multiplicity bounds `(n + 1, n! Σ_{l=0}^{n} 1/l!)`; the upper sum
/// is the integer `Σ_l n!/l!`.
pub fn multiplicity_bounds(n: usize) -> (BigInt, BigInt) {
    let lower = BigInt::from(n as u64 + 1);
    let mut upper = BigInt::one();
    let mut falling = BigInt::one();
    for l in (1..=n).rev() {
        falling *= BigInt::from(l as u64);
        upper += &falling;
    }
    (lower, upper)
}

/// Gorenstein symmetry of the h-polynomial: degree exactly `n` with
/// `h_n = 1` and `h_i = h_{n-i}` throughout (so in particular `h_{n+1} = 0`).
pub fn check_gorenstein_symmetry(h: &IntPolynomial, n: usize) -> bool {
    if h.degree() != Some(n) || !h.coeff(n).is_one() {
        return false;
    }
    (0..=n).all(|i| h.coeff(i) == h.coeff(n - i))
}

/// The series `(1 + z + ... + z^n) / (1-z)^{2n+1}` of the complete graph.
pub fn knn_series(n: usize) -> RationalSeries {
    RationalSeries::new(
        IntPolynomial::from_bigints(vec![BigInt::one(); n + 1]),
        2 * n + 1,
    )
}

/// Series characterization of the complete bipartite graph: `G = K_{n,n}`
/// iff its series is `(1+z+...+z^n)/(1-z)^{2n+1}`. Cross-checked against the
/// structural criterion `|L_G| = 2`; a disagreement would mean an internal
/// inconsistency and panics.
pub fn is_knn_by_series(g: &StandardGraph) -> Result<bool, ComplexError> {
    let by_series = vertex_cover_series(g)? == knn_series(g.n());
    let by_lattice = CoverLattice::build(g)?.len() == 2;
    assert_eq!(
        by_series, by_lattice,
        "series and lattice K_nn criteria disagree"
    );
    Ok(by_series)
}
