//! Toric ideal of the vertex cover algebra: the closed-form reduced Gröbner
//! basis, its initial monomial ideal, and independent verification engines.
//!
//! The presentation ring has one degree-1 variable per vertex
//! (`x_1..x_n, y_1..y_n`) and one per lattice element (`u_α`). The monomial
//! order is the product of lex on the vertex block
//! (`x_1 > ... > x_n > y_1 > ... > y_n`) with graded reverse lex on the `u`
//! block, where `u_α > u_β` whenever `β ⊂ α`; incomparable pairs are tied by
//! the canonical element index, a fixed linear extension.
//!
//! The basis consists of one binomial `x_{β∖α} u_α − y_{β∖α} u_β` per
//! covering pair `α ⋖ β` and one `u_α u_β − u_{α∪β} u_{α∩β}` per unordered
//! incomparable pair. Verification never assumes the theorem: Buchberger
//! S-pair reduction, the Hilbert series of the initial ideal, and direct
//! degree-by-degree monomial counting each re-derive the consequences.

use std::cmp::Ordering;
use std::collections::HashMap;

use num_bigint::BigInt;
use num_traits::{One, Zero};
use rayon::prelude::*;
use thiserror::Error;

use crate::complex::ComplexError;
use crate::graph::StandardGraph;
use crate::lattice::{mask_to_indices, CoverLattice, LatticeError};
use crate::series::{IntPolynomial, RationalSeries};

#[derive(Debug, Error)]
pub enum ToricError {
    #[error("{what} exceeds the verification limit ({value} > {limit})")]
    LimitExceeded {
        what: &'static str,
        value: usize,
        limit: usize,
    },
    #[error(transparent)]
    Lattice(#[from] LatticeError),
    #[error(transparent)]
    Complex(#[from] ComplexError),
}

/// Exponent vector over the presentation variables of a fixed [`ToricRing`].
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Monomial {
    exps: Vec<u16>,
}

impl Monomial {
    pub fn one(num_vars: usize) -> Self {
        Self {
            exps: vec![0; num_vars],
        }
    }

    pub fn exps(&self) -> &[u16] {
        &self.exps
    }

    pub fn exponent(&self, var: usize) -> u16 {
        self.exps[var]
    }

    pub fn total_degree(&self) -> u32 {
        self.exps.iter().map(|&e| e as u32).sum()
    }

    pub fn is_one(&self) -> bool {
        self.exps.iter().all(|&e| e == 0)
    }

    pub fn is_squarefree(&self) -> bool {
        self.exps.iter().all(|&e| e <= 1)
    }

    pub fn mul(&self, other: &Self) -> Self {
        Self {
            exps: self
                .exps
                .iter()
                .zip(&other.exps)
                .map(|(a, b)| a + b)
                .collect(),
        }
    }

    pub fn divides(&self, other: &Self) -> bool {
        self.exps.iter().zip(&other.exps).all(|(a, b)| a <= b)
    }

    /// `other / self`; caller must ensure divisibility.
    pub fn quotient_into(&self, other: &Self) -> Self {
        Self {
            exps: other
                .exps
                .iter()
                .zip(&self.exps)
                .map(|(b, a)| b - a)
                .collect(),
        }
    }

    pub fn lcm(&self, other: &Self) -> Self {
        Self {
            exps: self
                .exps
                .iter()
                .zip(&other.exps)
                .map(|(&a, &b)| a.max(b))
                .collect(),
        }
    }
}

/// Binomial `lead − trail` with the lead first under the ring's order.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Binomial {
    pub lead: Monomial,
    pub trail: Monomial,
}

/// Variable bookkeeping of the presentation ring `K[x, y, {u_α}]`: variable
/// indices `0..n` are `x_1..x_n`, `n..2n` are `y_1..y_n`, and `2n + t` is
/// `u_α` for the `t`-th lattice element in canonical order.
#[derive(Clone, Debug)]
pub struct ToricRing {
    n: usize,
    u_elems: Vec<u64>,
}

impl ToricRing {
    pub fn new(lattice: &CoverLattice) -> Self {
        Self {
            n: lattice.n(),
            u_elems: lattice.elements().to_vec(),
        }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn lattice_size(&self) -> usize {
        self.u_elems.len()
    }

    pub fn num_vars(&self) -> usize {
        2 * self.n + self.u_elems.len()
    }

    pub fn x_var(&self, i: usize) -> usize {
        i
    }

    pub fn y_var(&self, j: usize) -> usize {
        self.n + j
    }

    pub fn u_var(&self, element_index: usize) -> usize {
        2 * self.n + element_index
    }

    pub fn u_element(&self, element_index: usize) -> u64 {
        self.u_elems[element_index]
    }

    pub fn monomial(&self, vars: &[(usize, u16)]) -> Monomial {
        let mut m = Monomial::one(self.num_vars());
        for &(v, e) in vars {
            m.exps[v] += e;
        }
        m
    }

    /// The product order: lex on the vertex block, then graded reverse lex
    /// on the `u` block (larger canonical index = larger variable).
    pub fn cmp_monomials(&self, a: &Monomial, b: &Monomial) -> Ordering {
        let split = 2 * self.n;
        for v in 0..split {
            if a.exps[v] != b.exps[v] {
                return a.exps[v].cmp(&b.exps[v]);
            }
        }
        let da: u32 = a.exps[split..].iter().map(|&e| e as u32).sum();
        let db: u32 = b.exps[split..].iter().map(|&e| e as u32).sum();
        if da != db {
            return da.cmp(&db);
        }
        // Reverse lex: the monomial with the smaller exponent on the least
        // significant differing variable is the larger one.
        for t in 0..self.u_elems.len() {
            let (ea, eb) = (a.exps[split + t], b.exps[split + t]);
            if ea != eb {
                return eb.cmp(&ea);
            }
        }
        Ordering::Equal
    }

    pub fn fmt_monomial(&self, m: &Monomial) -> String {
        if m.is_one() {
            return "1".into();
        }
        let mut parts = Vec::new();
        for i in 0..self.n {
            let e = m.exps[self.x_var(i)];
            if e > 0 {
                parts.push(format!("x{}{}", i + 1, exp_suffix(e)));
            }
        }
        for j in 0..self.n {
            let e = m.exps[self.y_var(j)];
            if e > 0 {
                parts.push(format!("y{}{}", j + 1, exp_suffix(e)));
            }
        }
        for (t, &elem) in self.u_elems.iter().enumerate() {
            let e = m.exps[self.u_var(t)];
            if e > 0 {
                let indices: Vec<String> = mask_to_indices(elem)
                    .iter()
                    .map(|&i| (i + 1).to_string())
                    .collect();
                parts.push(format!("u{{{}}}{}", indices.join(","), exp_suffix(e)));
            }
        }
        parts.join("*")
    }

    pub fn fmt_binomial(&self, b: &Binomial) -> String {
        format!("{} - {}", self.fmt_monomial(&b.lead), self.fmt_monomial(&b.trail))
    }
}

fn exp_suffix(e: u16) -> String {
    if e == 1 {
        String::new()
    } else {
        format!("^{e}")
    }
}

#[derive(Clone, Debug)]
pub struct GroebnerBasis {
    pub ring: ToricRing,
    pub binomials: Vec<Binomial>,
}

impl GroebnerBasis {
    pub fn to_text(&self) -> String {
        self.binomials
            .iter()
            .map(|b| self.ring.fmt_binomial(b))
            .collect::<Vec<_>>()
            .join("\n")
    }
}

/// The reduced Gröbner basis of the toric ideal: the covering-pair binomials
/// `x_{β∖α} u_α − y_{β∖α} u_β` plus the incomparable-pair binomials
/// `u_α u_β − u_{α∪β} u_{α∩β}`, lead first.
pub fn groebner_basis(lattice: &CoverLattice) -> GroebnerBasis {
    let ring = ToricRing::new(lattice);
    let mut binomials = Vec::new();
    let hasse = lattice.hasse();
    for (a_idx, covers) in hasse.iter().enumerate() {
        let alpha = lattice.element(a_idx);
        for &b_idx in covers {
            let beta = lattice.element(b_idx as usize);
            let diff = mask_to_indices(beta & !alpha);
            let mut lead_vars: Vec<(usize, u16)> =
                diff.iter().map(|&i| (ring.x_var(i), 1)).collect();
            lead_vars.push((ring.u_var(a_idx), 1));
            let mut trail_vars: Vec<(usize, u16)> =
                diff.iter().map(|&i| (ring.y_var(i), 1)).collect();
            trail_vars.push((ring.u_var(b_idx as usize), 1));
            binomials.push(Binomial {
                lead: ring.monomial(&lead_vars),
                trail: ring.monomial(&trail_vars),
            });
        }
    }
    let m = lattice.len();
    for s in 0..m {
        for t in (s + 1)..m {
            let alpha = lattice.element(s);
            let beta = lattice.element(t);
            let meet = alpha & beta;
            if meet == alpha || meet == beta {
                continue;
            }
            let join = alpha | beta;
            let join_idx = lattice.index_of(join).expect("lattice closed under union");
            let meet_idx = lattice
                .index_of(meet)
                .expect("lattice closed under intersection");
            binomials.push(Binomial {
                lead: ring.monomial(&[(ring.u_var(s), 1), (ring.u_var(t), 1)]),
                trail: ring.monomial(&[(ring.u_var(join_idx), 1), (ring.u_var(meet_idx), 1)]),
            });
        }
    }
    debug_assert!(binomials
        .iter()
        .all(|b| ring.cmp_monomials(&b.lead, &b.trail) == Ordering::Greater));
    GroebnerBasis { ring, binomials }
}

/// Minimal generating set of the ideal of lead terms.
pub fn initial_ideal(gb: &GroebnerBasis) -> Vec<Monomial> {
    let mut leads: Vec<Monomial> = gb.binomials.iter().map(|b| b.lead.clone()).collect();
    leads.sort_by(|a, b| gb.ring.cmp_monomials(a, b));
    leads.dedup();
    let minimal: Vec<Monomial> = leads
        .iter()
        .filter(|m| {
            !leads
                .iter()
                .any(|other| other != *m && other.divides(m))
        })
        .cloned()
        .collect();
    minimal
}

// --- Buchberger verification ----------------------------------------------

/// Sparse polynomial as order-descending `(monomial, coefficient)` terms.
type Poly = Vec<(Monomial, i64)>;

fn add_term(ring: &ToricRing, poly: &mut Poly, mono: Monomial, coeff: i64) {
    if coeff == 0 {
        return;
    }
    match poly.binary_search_by(|(m, _)| ring.cmp_monomials(&mono, m)) {
        Ok(pos) => {
            poly[pos].1 += coeff;
            if poly[pos].1 == 0 {
                poly.remove(pos);
            }
        }
        Err(pos) => poly.insert(pos, (mono, coeff)),
    }
}

fn s_polynomial(ring: &ToricRing, f: &Binomial, g: &Binomial) -> Poly {
    let lcm = f.lead.lcm(&g.lead);
    let qf = f.lead.quotient_into(&lcm);
    let qg = g.lead.quotient_into(&lcm);
    let mut poly = Poly::new();
    add_term(ring, &mut poly, qg.mul(&g.trail), 1);
    add_term(ring, &mut poly, qf.mul(&f.trail), -1);
    poly
}

fn reduces_to_zero(ring: &ToricRing, mut poly: Poly, basis: &[Binomial]) -> bool {
    while let Some((lead, coeff)) = poly.first().cloned() {
        let Some(g) = basis.iter().find(|g| g.lead.divides(&lead)) else {
            return false;
        };
        let q = g.lead.quotient_into(&lead);
        poly.remove(0);
        add_term(ring, &mut poly, q.mul(&g.trail), coeff);
    }
    true
}

/// Verify the Gröbner property and reducedness: every S-polynomial of every
/// pair reduces to zero, no lead divides another, and no trail term is
/// divisible by any lead. `max_lattice` bounds the lattice size (S-pair
/// count grows quadratically in the basis).
pub fn buchberger_verify(gb: &GroebnerBasis, max_lattice: usize) -> Result<bool, ToricError> {
    let size = gb.ring.lattice_size();
    if size > max_lattice {
        return Err(ToricError::LimitExceeded {
            what: "lattice size for Buchberger verification",
            value: size,
            limit: max_lattice,
        });
    }
    let ring = &gb.ring;
    let basis = &gb.binomials;
    for (i, f) in basis.iter().enumerate() {
        if ring.cmp_monomials(&f.lead, &f.trail) != Ordering::Greater {
            return Ok(false);
        }
        for (j, g) in basis.iter().enumerate() {
            if i != j && g.lead.divides(&f.lead) {
                return Ok(false);
            }
            if g.lead.divides(&f.trail) {
                return Ok(false);
            }
        }
    }
    let pairs: Vec<(usize, usize)> = (0..basis.len())
        .flat_map(|i| ((i + 1)..basis.len()).map(move |j| (i, j)))
        .collect();
    Ok(pairs
        .par_iter()
        .all(|&(i, j)| reduces_to_zero(ring, s_polynomial(ring, &basis[i], &basis[j]), basis)))
}

// --- Hilbert series of monomial quotients ----------------------------------

/// Hilbert series of `K[v_1..v_{num_vars}] / (gens)` for a monomial ideal,
/// all variables in degree one, by pivot-variable recursion with
/// memoization. Exact; generators need not be squarefree or minimal.
pub fn monomial_quotient_series(num_vars: usize, gens: &[Monomial]) -> RationalSeries {
    let gens: Vec<Vec<u16>> = gens.iter().map(|m| m.exps.to_vec()).collect();
    let mut memo: HashMap<Vec<Vec<u16>>, IntPolynomial> = HashMap::new();
    let numer = quotient_numerator(minimalize(gens), &mut memo);
    RationalSeries::new(numer, num_vars)
}

fn minimalize(mut gens: Vec<Vec<u16>>) -> Vec<Vec<u16>> {
    gens.sort_unstable();
    gens.dedup();
    let keep: Vec<bool> = gens
        .iter()
        .map(|g| {
            !gens
                .iter()
                .any(|h| h != g && h.iter().zip(g).all(|(a, b)| a <= b))
        })
        .collect();
    gens.into_iter()
        .zip(keep)
        .filter_map(|(g, k)| k.then_some(g))
        .collect()
}

/// Strip unused variables and sort rows, so structurally equal subproblems
/// share a memo entry.
fn compress(gens: &[Vec<u16>]) -> Vec<Vec<u16>> {
    if gens.is_empty() {
        return Vec::new();
    }
    let width = gens[0].len();
    let used: Vec<usize> = (0..width)
        .filter(|&v| gens.iter().any(|g| g[v] > 0))
        .collect();
    let mut out: Vec<Vec<u16>> = gens
        .iter()
        .map(|g| used.iter().map(|&v| g[v]).collect())
        .collect();
    out.sort_unstable();
    out
}

fn quotient_numerator(gens: Vec<Vec<u16>>, memo: &mut HashMap<Vec<Vec<u16>>, IntPolynomial>) -> IntPolynomial {
    if gens.is_empty() {
        return IntPolynomial::one();
    }
    if gens.iter().any(|g| g.iter().all(|&e| e == 0)) {
        return IntPolynomial::zero();
    }
    let gens = compress(&gens);
    if let Some(hit) = memo.get(&gens) {
        return hit.clone();
    }
    let numer = quotient_numerator_uncached(&gens, memo);
    memo.insert(gens, numer.clone());
    numer
}

fn quotient_numerator_uncached(
    gens: &[Vec<u16>],
    memo: &mut HashMap<Vec<Vec<u16>>, IntPolynomial>,
) -> IntPolynomial {
    let width = gens[0].len();

    // Disjoint variable supports factor the quotient ring.
    let components = split_components(gens, width);
    if components.len() > 1 {
        let mut numer = IntPolynomial::one();
        for comp in components {
            numer = numer.mul(&quotient_numerator(comp, memo));
        }
        return numer;
    }

    // Pure variable powers on distinct variables have numerator
    // prod (1 - z^{a_i}).
    if gens.iter().all(|g| g.iter().filter(|&&e| e > 0).count() == 1) {
        let mut numer = IntPolynomial::one();
        for g in gens {
            let a = g.iter().map(|&e| e as usize).sum::<usize>();
            let mut factor = vec![BigInt::zero(); a + 1];
            factor[0] = BigInt::one();
            factor[a] = -BigInt::one();
            numer = numer.mul(&IntPolynomial::from_bigints(factor));
        }
        return numer;
    }

    // Pivot on the most frequent variable among the non-pure generators.
    let mut freq = vec![0usize; width];
    for g in gens {
        if g.iter().filter(|&&e| e > 0).count() > 1 {
            for (v, &e) in g.iter().enumerate() {
                if e > 0 {
                    freq[v] += 1;
                }
            }
        }
    }
    let pivot = (0..width).max_by_key(|&v| freq[v]).unwrap();

    // N(I) = N(I + (v)) + z * N(I : v)
    let mut plus: Vec<Vec<u16>> = gens.iter().filter(|g| g[pivot] == 0).cloned().collect();
    let mut unit = vec![0u16; width];
    unit[pivot] = 1;
    plus.push(unit);
    let colon: Vec<Vec<u16>> = gens
        .iter()
        .map(|g| {
            let mut h = g.clone();
            if h[pivot] > 0 {
                h[pivot] -= 1;
            }
            h
        })
        .collect();
    let left = quotient_numerator(plus, memo);
    let right = quotient_numerator(minimalize(colon), memo);
    left.add(&right.shift(1))
}

fn split_components(gens: &[Vec<u16>], width: usize) -> Vec<Vec<Vec<u16>>> {
    let mut parent: Vec<usize> = (0..gens.len()).collect();
    fn find(parent: &mut Vec<usize>, a: usize) -> usize {
        if parent[a] != a {
            let root = find(parent, parent[a]);
            parent[a] = root;
        }
        parent[a]
    }
    for v in 0..width {
        let mut first: Option<usize> = None;
        for (gi, g) in gens.iter().enumerate() {
            if g[v] > 0 {
                match first {
                    None => first = Some(gi),
                    Some(f) => {
                        let (ra, rb) = (find(&mut parent, f), find(&mut parent, gi));
                        parent[ra] = rb;
                    }
                }
            }
        }
    }
    let mut groups: HashMap<usize, Vec<Vec<u16>>> = HashMap::new();
    for (gi, g) in gens.iter().enumerate() {
        groups
            .entry(find(&mut parent, gi))
            .or_default()
            .push(g.clone());
    }
    let mut out: Vec<Vec<Vec<u16>>> = groups.into_values().collect();
    out.sort_unstable();
    out
}

/// Hilbert series of the quotient by the initial ideal of the Gröbner basis.
/// Initial-ideal degeneration preserves the Hilbert series, so this must
/// equal [`crate::series::vertex_cover_series`] exactly; the equality is the
/// principal cross-check of the whole pipeline.
pub fn series_via_initial_ideal(g: &StandardGraph) -> Result<RationalSeries, ToricError> {
    let lattice = CoverLattice::build(g)?;
    let gb = groebner_basis(&lattice);
    let gens = initial_ideal(&gb);
    Ok(monomial_quotient_series(gb.ring.num_vars(), &gens))
}

/// Check that the incomparable-pair monomials `u_α u_β` generate exactly the
/// Stanley–Reisner ideal of the order complex: the minimal non-chains of the
/// lattice are precisely the incomparable pairs (verified up to size 3; a
/// larger non-chain always contains a non-chain pair).
pub fn stanley_reisner_check(lattice: &CoverLattice) -> bool {
    let elems = lattice.elements();
    let m = elems.len();
    let comparable =
        |a: u64, b: u64| -> bool { a & b == a || a & b == b };
    let is_chain = |subset: &[usize]| -> bool {
        subset
            .iter()
            .all(|&i| subset.iter().all(|&j| comparable(elems[i], elems[j])))
    };
    let mut incomparable_pairs = Vec::new();
    for s in 0..m {
        for t in (s + 1)..m {
            if !comparable(elems[s], elems[t]) {
                incomparable_pairs.push((s, t));
            }
        }
    }
    // Size-2 minimal non-faces are exactly the incomparable pairs.
    for s in 0..m {
        for t in (s + 1)..m {
            let is_non_face = !is_chain(&[s, t]);
            if is_non_face != incomparable_pairs.contains(&(s, t)) {
                return false;
            }
        }
    }
    // No minimal non-face of size 3: every non-chain triple contains a
    // non-chain pair.
    for a in 0..m {
        for b in (a + 1)..m {
            for c in (b + 1)..m {
                if !is_chain(&[a, b, c])
                    && is_chain(&[a, b])
                    && is_chain(&[a, c])
                    && is_chain(&[b, c])
                {
                    return false;
                }
            }
        }
    }
    true
}

// --- Direct Hilbert function counting ---------------------------------------

/// Dimension of the degree-`d` graded component of the cover algebra,
/// counted directly: monomials `x^a y^b t^k` with `k <= d`,
/// `|a| + |b| = kn + (d-k)`, and `x^a y^b` divisible by a product of `k`
/// minimal cover monomials. Membership in the `k`-th power is decided by
/// depth-first choice of cover summands with memoization on the residual
/// exponent vector. Must equal the degree-`d` series coefficient.
pub fn hilbert_function_direct(
    g: &StandardGraph,
    d: usize,
    max_n: usize,
    max_degree: usize,
) -> Result<BigInt, ToricError> {
    let n = g.n();
    if n > max_n {
        return Err(ToricError::LimitExceeded {
            what: "pair count for direct counting",
            value: n,
            limit: max_n,
        });
    }
    if d > max_degree {
        return Err(ToricError::LimitExceeded {
            what: "degree for direct counting",
            value: d,
            limit: max_degree,
        });
    }
    let lattice = CoverLattice::build(g)?;
    let covers: Vec<Vec<u16>> = lattice
        .elements()
        .iter()
        .map(|&alpha| {
            (0..n)
                .map(|i| u16::from(alpha >> i & 1 == 1))
                .chain((0..n).map(|j| u16::from(alpha >> j & 1 == 0)))
                .collect()
        })
        .collect();
    let edges = g.edges();

    let mut total = binomial(d + 2 * n - 1, 2 * n - 1);
    for k in 1..=d {
        let target = k * n + (d - k);
        let mut counter = DirectCounter {
            n,
            k: k as u16,
            edges: &edges,
            covers: &covers,
            memo: HashMap::new(),
            exps: vec![0u16; 2 * n],
            count: BigInt::zero(),
        };
        counter.enumerate_pairs(0, target);
        total += counter.count;
    }
    Ok(total)
}

struct DirectCounter<'a> {
    n: usize,
    k: u16,
    edges: &'a [(usize, usize)],
    covers: &'a [Vec<u16>],
    memo: HashMap<(Vec<u16>, u16), bool>,
    exps: Vec<u16>,
    count: BigInt,
}

impl DirectCounter<'_> {
    /// Walk the pairs assigning `(a_i, b_i)`; the diagonal edges force every
    /// pair sum to at least `k`, which prunes the enumeration hard.
    fn enumerate_pairs(&mut self, pair: usize, remaining: usize) {
        let k = self.k as usize;
        if pair == self.n {
            if remaining == 0 && self.is_k_cover() && self.decomposes(self.exps.clone(), self.k) {
                self.count += 1;
            }
            return;
        }
        let pairs_left = self.n - pair - 1;
        if remaining < k * (pairs_left + 1) {
            return;
        }
        let max_sum = remaining - k * pairs_left;
        for sum in k..=max_sum {
            for a in 0..=sum {
                self.exps[pair] = a as u16;
                self.exps[self.n + pair] = (sum - a) as u16;
                self.enumerate_pairs(pair + 1, remaining - sum);
            }
        }
        self.exps[pair] = 0;
        self.exps[self.n + pair] = 0;
    }

    fn is_k_cover(&self) -> bool {
        self.edges
            .iter()
            .all(|&(i, j)| self.exps[i] + self.exps[self.n + j] >= self.k)
    }

    fn decomposes(&mut self, residual: Vec<u16>, k: u16) -> bool {
        if k == 0 {
            return true;
        }
        let key = (residual.clone(), k);
        if let Some(&hit) = self.memo.get(&key) {
            return hit;
        }
        let mut found = false;
        for cover in self.covers {
            if cover.iter().zip(&residual).all(|(c, r)| c <= r) {
                let next: Vec<u16> = residual.iter().zip(cover).map(|(r, c)| r - c).collect();
                if self.decomposes(next, k - 1) {
                    found = true;
                    break;
                }
            }
        }
        self.memo.insert(key, found);
        found
    }
}

fn binomial(n: usize, k: usize) -> BigInt {
    if k > n {
        return BigInt::zero();
    }
    let mut num = BigInt::one();
    for i in 0..k.min(n - k) {
        num = num * BigInt::from((n - i) as u64) / BigInt::from((i + 1) as u64);
    }
    num
}
