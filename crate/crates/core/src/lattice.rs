//! Cover lattices of standardized graphs and the Cohen–Macaulay reduction.
//!
//! For a standardized graph the minimal vertex covers pick exactly one vertex
//! per pair, so a cover is the set `α ⊆ {p_1..p_n}` of its x-side choices.
//! The valid `α` are exactly the down-sets of the edge relation (`p_j ∈ α`
//! forces `p_i ∈ α` for every edge `(i, j)`), which form a sublattice of the
//! Boolean lattice containing `∅` and the full set. Elements are stored as
//! `u64` bitmasks ordered by (cardinality, index-lexicographic).

use std::collections::HashMap;
use std::sync::OnceLock;

use num_bigint::BigInt;
use thiserror::Error;

use crate::graph::{is_cover, is_minimal_cover, BipartiteGraph, GraphError, StandardGraph};

/// Direct down-set filtering enumerates all `2^n` subsets; beyond this the
/// lattice is refused.
pub const LATTICE_MAX_N: usize = 20;

#[derive(Debug, Error)]
pub enum LatticeError {
    #[error("pair count {n} exceeds the lattice enumeration limit {LATTICE_MAX_N}")]
    TooLarge { n: usize },
    #[error("{0} is not an element of the lattice")]
    NotAnElement(String),
    #[error("maximal chains have different lengths ({min} and {max}); not a valid cover lattice")]
    NonGraded { min: usize, max: usize },
    #[error("element set is not closed under union/intersection or misses bottom/top")]
    NotClosed,
    #[error("the computed map is not a lattice isomorphism")]
    NotIsomorphism,
    #[error(transparent)]
    Graph(#[from] GraphError),
}

/// Sublattice of the Boolean lattice on `{p_1..p_n}`, elements as bitmasks.
#[derive(Debug)]
pub struct CoverLattice {
    n: usize,
    top: u64,
    elements: Vec<u64>,
    pos: HashMap<u64, u32>,
    hasse: OnceLock<Vec<Vec<u32>>>,
}

impl Clone for CoverLattice {
    fn clone(&self) -> Self {
        Self {
            n: self.n,
            top: self.top,
            elements: self.elements.clone(),
            pos: self.pos.clone(),
            hasse: OnceLock::new(),
        }
    }
}

/// (cardinality, index-lexicographic) order on element masks; index-lex
/// compares the sorted index lists, not the raw mask values.
pub(crate) fn canonical_cmp(a: u64, b: u64) -> std::cmp::Ordering {
    let ca = a.count_ones();
    let cb = b.count_ones();
    ca.cmp(&cb).then_with(|| {
        let mut ra = a;
        let mut rb = b;
        while ra != 0 && rb != 0 {
            let ia = ra.trailing_zeros();
            let ib = rb.trailing_zeros();
            if ia != ib {
                return ia.cmp(&ib);
            }
            ra &= ra - 1;
            rb &= rb - 1;
        }
        std::cmp::Ordering::Equal
    })
}

impl CoverLattice {
    /// The cover lattice `L_G`: down-sets of the edge relation over all of
    /// `[n]`.
    pub fn build(g: &StandardGraph) -> Result<Self, LatticeError> {
        let n = g.n();
        Self::build_masked(g, if n == 64 { u64::MAX } else { (1 << n) - 1 })
    }

    /// The cover lattice of the induced subgraph `G_F`, with elements kept in
    /// the ambient index space (all masks are subsets of `f_mask`).
    pub fn build_masked(g: &StandardGraph, f_mask: u64) -> Result<Self, LatticeError> {
        let n = g.n();
        if f_mask.count_ones() as usize > LATTICE_MAX_N {
            return Err(LatticeError::TooLarge {
                n: f_mask.count_ones() as usize,
            });
        }
        let cols: Vec<u64> = (0..n).map(|j| g.adj_col(j) & f_mask).collect();
        let mut elements = Vec::new();
        // Enumerate the subsets of f_mask via the standard submask walk.
        let mut sub = f_mask;
        loop {
            if down_closed(&cols, sub) {
                elements.push(sub);
            }
            if sub == 0 {
                break;
            }
            sub = (sub - 1) & f_mask;
        }
        elements.sort_unstable_by(|&a, &b| canonical_cmp(a, b));
        let pos = elements
            .iter()
            .enumerate()
            .map(|(i, &m)| (m, i as u32))
            .collect();
        Ok(Self {
            n,
            top: f_mask,
            elements,
            pos,
            hasse: OnceLock::new(),
        })
    }

    /// Build from an explicit element list, validating lattice closure.
    pub fn from_elements(n: usize, elements: Vec<u64>) -> Result<Self, LatticeError> {
        let lat = Self::from_elements_unchecked(n, elements);
        if !lat.is_closed() {
            return Err(LatticeError::NotClosed);
        }
        Ok(lat)
    }

    /// Build from an element list without validation. Intended for feeding
    /// invalid inputs to the validators.
    pub fn from_elements_unchecked(n: usize, mut elements: Vec<u64>) -> Self {
        elements.sort_unstable_by(|&a, &b| canonical_cmp(a, b));
        elements.dedup();
        let top = elements.iter().copied().fold(0, |a, b| a | b);
        let pos = elements
            .iter()
            .enumerate()
            .map(|(i, &m)| (m, i as u32))
            .collect();
        Self {
            n,
            top,
            elements,
            pos,
            hasse: OnceLock::new(),
        }
    }

    fn is_closed(&self) -> bool {
        if !self.contains(0) || !self.contains(self.top) {
            return false;
        }
        for (i, &a) in self.elements.iter().enumerate() {
            for &b in &self.elements[i + 1..] {
                if !self.contains(a | b) || !self.contains(a & b) {
                    return false;
                }
            }
        }
        true
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    pub fn top(&self) -> u64 {
        self.top
    }

    pub fn elements(&self) -> &[u64] {
        &self.elements
    }

    pub fn element(&self, idx: usize) -> u64 {
        self.elements[idx]
    }

    pub fn contains(&self, mask: u64) -> bool {
        self.pos.contains_key(&mask)
    }

    pub fn index_of(&self, mask: u64) -> Option<usize> {
        self.pos.get(&mask).map(|&i| i as usize)
    }

    /// Elements as sorted 0-based index lists, in canonical order.
    pub fn element_lists(&self) -> Vec<Vec<usize>> {
        self.elements.iter().map(|&m| mask_to_indices(m)).collect()
    }

    /// Upper neighbors (covers) of `alpha` in the lattice.
    pub fn upper_neighbors(&self, alpha: u64) -> Result<Vec<u64>, LatticeError> {
        let idx = self
            .index_of(alpha)
            .ok_or_else(|| LatticeError::NotAnElement(format!("{:?}", mask_to_indices(alpha))))?;
        Ok(self.hasse()[idx]
            .iter()
            .map(|&j| self.elements[j as usize])
            .collect())
    }

    /// Hasse diagram: for each element index, the indices of its covers.
    /// Elements are scanned in canonical order, so candidates appear in
    /// increasing cardinality and a strict superset is a cover iff no
    /// already-accepted cover sits below it.
    pub fn hasse(&self) -> &Vec<Vec<u32>> {
        self.hasse.get_or_init(|| {
            let m = self.elements.len();
            let mut covers: Vec<Vec<u32>> = vec![Vec::new(); m];
            for i in 0..m {
                let a = self.elements[i];
                for j in (i + 1)..m {
                    let b = self.elements[j];
                    if a & b == a && a != b {
                        let dominated = covers[i]
                            .iter()
                            .any(|&c| self.elements[c as usize] & b == self.elements[c as usize]);
                        if !dominated {
                            covers[i].push(j as u32);
                        }
                    }
                }
            }
            covers
        })
    }

    /// Common length of the maximal chains (the rank), or `NonGraded` when
    /// chain lengths differ — which signals an invalid input, since genuine
    /// cover lattices are graded.
    pub fn rank(&self) -> Result<usize, LatticeError> {
        let hasse = self.hasse();
        let m = self.elements.len();
        // Max/min Hasse path length from bottom, processed in canonical
        // order (covers only point forward).
        let mut shortest = vec![usize::MAX; m];
        let mut longest = vec![0usize; m];
        shortest[0] = 0;
        for i in 0..m {
            if shortest[i] == usize::MAX {
                continue;
            }
            for &j in &hasse[i] {
                let j = j as usize;
                shortest[j] = shortest[j].min(shortest[i] + 1);
                longest[j] = longest[j].max(longest[i] + 1);
            }
        }
        let top_idx = m - 1;
        let (min, max) = (shortest[top_idx], longest[top_idx]);
        if min != max {
            return Err(LatticeError::NonGraded { min, max });
        }
        Ok(max)
    }

    /// All maximal chains, as element masks bottom-to-top. Exponential in
    /// general; meant for small lattices.
    pub fn maximal_chains(&self) -> Vec<Vec<u64>> {
        let hasse = self.hasse();
        let mut out = Vec::new();
        let mut stack = vec![0usize];
        self.chains_dfs(hasse, &mut stack, &mut out);
        out
    }

    fn chains_dfs(&self, hasse: &[Vec<u32>], stack: &mut Vec<usize>, out: &mut Vec<Vec<u64>>) {
        let last = *stack.last().unwrap();
        if hasse[last].is_empty() {
            out.push(stack.iter().map(|&i| self.elements[i]).collect());
            return;
        }
        for &j in &hasse[last] {
            stack.push(j as usize);
            self.chains_dfs(hasse, stack, out);
            stack.pop();
        }
    }

    /// Number of maximal chains, by DP over the Hasse diagram.
    pub fn count_maximal_chains(&self) -> BigInt {
        let hasse = self.hasse();
        let m = self.elements.len();
        let mut paths: Vec<BigInt> = vec![BigInt::from(0); m];
        paths[0] = BigInt::from(1);
        for i in 0..m {
            if paths[i] == BigInt::from(0) {
                continue;
            }
            for &j in &hasse[i] {
                let add = paths[i].clone();
                paths[j as usize] += add;
            }
        }
        paths[m - 1].clone()
    }
}

fn down_closed(cols: &[u64], mask: u64) -> bool {
    let mut rest = mask;
    while rest != 0 {
        let j = rest.trailing_zeros() as usize;
        if cols[j] & !mask != 0 {
            return false;
        }
        rest &= rest - 1;
    }
    true
}

pub(crate) fn mask_to_indices(mask: u64) -> Vec<usize> {
    let mut out = Vec::new();
    let mut rest = mask;
    while rest != 0 {
        out.push(rest.trailing_zeros() as usize);
        rest &= rest - 1;
    }
    out
}

pub fn build_lattice(g: &StandardGraph) -> Result<CoverLattice, LatticeError> {
    CoverLattice::build(g)
}

/// All inclusion-minimal vertex covers as bitmasks over the `2n` vertices
/// (bit `i` is `x_{i+1}`, bit `n+j` is `y_{j+1}`), by scanning all subsets.
/// `max_vertices` bounds `2n`.
pub fn minimal_covers_bruteforce(
    g: &BipartiteGraph,
    max_vertices: usize,
) -> Result<Vec<u64>, LatticeError> {
    let n = g.n();
    if 2 * n > max_vertices {
        return Err(GraphError::LimitExceeded {
            what: "vertex count for cover enumeration",
            value: 2 * n,
            limit: max_vertices,
        }
        .into());
    }
    let adj: Vec<u64> = (0..n).map(|i| g.adj_row(i)).collect();
    let cols: Vec<u64> = (0..n).map(|j| g.adj_col(j)).collect();
    let mut out = Vec::new();
    for mask in 0u64..(1u64 << (2 * n)) {
        if is_cover(&adj, n, mask) && is_minimal_cover(&adj, &cols, n, mask) {
            out.push(mask);
        }
    }
    Ok(out)
}

/// `true` iff `rank(L_G) = n`, the lattice-theoretic Cohen–Macaulay
/// criterion for standardized graphs.
pub fn is_cohen_macaulay(g: &StandardGraph) -> Result<bool, LatticeError> {
    Ok(CoverLattice::build(g)?.rank()? == g.n())
}

#[derive(Clone, Debug)]
pub struct CmReduction {
    /// Retained pair indices (0-based, sorted).
    pub subset: Vec<usize>,
    /// The induced Cohen–Macaulay subgraph `G_F`.
    pub subgraph: StandardGraph,
}

/// The Cohen–Macaulay reduction: `F` is the lexicographically smallest
/// maximal subset of `[n]` such that no two of its members span an induced
/// `K_{{i,j}}`, and `G_F` is Cohen–Macaulay with `L_{G_F} ≅ L_G`.
pub fn cm_reduce(g: &StandardGraph) -> Result<CmReduction, LatticeError> {
    let n = g.n();
    let mut subset: Vec<usize> = Vec::new();
    for i in 0..n {
        if subset
            .iter()
            .all(|&j| !g.has_induced_complete_pair(j, i))
        {
            subset.push(i);
        }
    }
    let (subgraph, _) = g.induced_subgraph(&subset)?;
    Ok(CmReduction { subset, subgraph })
}

/// Element-wise map between two lattices, with the isomorphism verdict of an
/// explicit bijectivity and two-sided order-preservation check.
#[derive(Clone, Debug)]
pub struct LatticeMap {
    /// `(domain element, image element)` pairs, domain in canonical order.
    pub pairs: Vec<(u64, u64)>,
    pub is_isomorphism: bool,
}

impl LatticeMap {
    pub fn apply(&self, alpha: u64) -> Option<u64> {
        self.pairs.iter().find(|&&(a, _)| a == alpha).map(|&(_, b)| b)
    }

    fn check_isomorphism(pairs: &[(u64, u64)], codomain: &[u64]) -> bool {
        if pairs.len() != codomain.len() {
            return false;
        }
        let mut seen: Vec<u64> = pairs.iter().map(|&(_, b)| b).collect();
        seen.sort_unstable();
        seen.dedup();
        if seen.len() != codomain.len() {
            return false;
        }
        let mut codomain_sorted = codomain.to_vec();
        codomain_sorted.sort_unstable();
        if seen != codomain_sorted {
            return false;
        }
        for &(a1, b1) in pairs {
            for &(a2, b2) in pairs {
                let le_dom = a1 & a2 == a1;
                let le_img = b1 & b2 == b1;
                if le_dom != le_img {
                    return false;
                }
            }
        }
        true
    }
}

/// The lattice isomorphism `ν : L_{G_F} → L_G` of the Cohen–Macaulay
/// reduction: `ν(α′) = α′ ∪ {p_j : j ∉ F, p_i ∈ α′, K_{{i,j}} ⊆ G}`.
/// `subset` must come from [`cm_reduce`]; domain elements are expressed in
/// the ambient index space.
pub fn lattice_embedding(g: &StandardGraph, subset: &[usize]) -> Result<LatticeMap, LatticeError> {
    let n = g.n();
    let f_mask: u64 = subset.iter().fold(0, |m, &i| m | (1 << i));
    let sub_lattice = CoverLattice::build_masked(g, f_mask)?;
    let full_lattice = CoverLattice::build(g)?;
    let outside: Vec<usize> = (0..n).filter(|i| f_mask >> i & 1 == 0).collect();
    let mut pairs = Vec::with_capacity(sub_lattice.len());
    for &alpha in sub_lattice.elements() {
        let mut image = alpha;
        for &j in &outside {
            let mut rest = alpha;
            while rest != 0 {
                let i = rest.trailing_zeros() as usize;
                rest &= rest - 1;
                if g.has_induced_complete_pair(i, j) {
                    image |= 1 << j;
                    break;
                }
            }
        }
        pairs.push((alpha, image));
    }
    let is_isomorphism = LatticeMap::check_isomorphism(&pairs, full_lattice.elements());
    if !is_isomorphism {
        return Err(LatticeError::NotIsomorphism);
    }
    Ok(LatticeMap {
        pairs,
        is_isomorphism,
    })
}

/// Completion of `alpha ∈ L_{G_F̄}` to `β = α ∪ δ_α ∈ L_G`, where `δ_α` is
/// the maximal subset of `{p_i : i ∈ F}` whose union with `alpha` stays a
/// down-set of the full graph. `f_mask` must be a proper nonempty subset of
/// `[n]`; `alpha` lives in the complement.
pub fn delta_completion(
    g: &StandardGraph,
    f_mask: u64,
    alpha: u64,
) -> Result<u64, LatticeError> {
    let n = g.n();
    let full: u64 = if n == 64 { u64::MAX } else { (1 << n) - 1 };
    let complement = full & !f_mask;
    let cols_sub: Vec<u64> = (0..n).map(|j| g.adj_col(j) & complement).collect();
    if alpha & !complement != 0 || !down_closed(&cols_sub, alpha) {
        return Err(LatticeError::NotAnElement(format!(
            "{:?} (in the complement sublattice)",
            mask_to_indices(alpha)
        )));
    }
    let cols: Vec<u64> = (0..n).map(|j| g.adj_col(j)).collect();
    // δ_α is the union of all γ ⊆ F with α ∪ γ a down-set; the union of valid
    // γ is valid because down-sets are closed under union.
    let mut delta = 0u64;
    let mut gamma = f_mask;
    loop {
        if down_closed(&cols, alpha | gamma) {
            delta |= gamma;
        }
        if gamma == 0 {
            break;
        }
        gamma = (gamma - 1) & f_mask;
    }
    debug_assert!(down_closed(&cols, alpha | delta));
    Ok(alpha | delta)
}

/// The image set `S` of the completion map: elements of `L_G` with no upper
/// neighbor differing from them only inside `{p_i : i ∈ F}`.
pub fn delta_completion_targets(
    g: &StandardGraph,
    f_mask: u64,
) -> Result<Vec<u64>, LatticeError> {
    let lattice = CoverLattice::build(g)?;
    let mut out = Vec::new();
    for &beta in lattice.elements() {
        let stuck = lattice
            .upper_neighbors(beta)?
            .iter()
            .all(|&up| (up & !beta) & !f_mask != 0);
        if stuck {
            out.push(beta);
        }
    }
    Ok(out)
}

/// Elements of the complement sublattice `L_{G_F̄}` in canonical order,
/// ambient index space.
pub fn complement_sublattice(
    g: &StandardGraph,
    f_mask: u64,
) -> Result<Vec<u64>, LatticeError> {
    let n = g.n();
    let full: u64 = if n == 64 { u64::MAX } else { (1 << n) - 1 };
    Ok(CoverLattice::build_masked(g, full & !f_mask)?
        .elements()
        .to_vec())
}

/// Verify the minimal-cover bijection between `G` and the subgraph obtained
/// by deleting the pair `j`, given an induced `K_{{i,j}}`: over all subsets
/// `C` of the remaining vertices, `C` is a minimal cover of the reduced graph
/// iff `C ∪ {x_j}` (when `x_i ∈ C`) or `C ∪ {y_j}` (otherwise) is one of `G`,
/// and the induced map is a bijection of the two cover families.
pub fn verify_cover_bijection(g: &StandardGraph, i: usize, j: usize) -> bool {
    let n = g.n();
    debug_assert!(g.has_induced_complete_pair(i, j));
    let adj_g: Vec<u64> = (0..n).map(|r| g.adj_row(r)).collect();
    let cols_g: Vec<u64> = (0..n).map(|c| g.adj_col(c)).collect();
    // The reduced graph keeps the original labels; pair j just loses all
    // of its edges.
    let adj_h: Vec<u64> = (0..n)
        .map(|r| if r == j { 0 } else { adj_g[r] & !(1u64 << j) })
        .collect();
    let cols_h: Vec<u64> = (0..n)
        .map(|c| if c == j { 0 } else { cols_g[c] & !(1u64 << j) })
        .collect();
    let in_mh = |mask: u64| {
        is_cover(&adj_h, n, mask) && {
            // Minimality within the reduced vertex set: ignore the deleted
            // pair, which is isolated in H.
            let cx = mask & ((1u64 << n) - 1);
            let cy = mask >> n;
            (0..n).all(|r| {
                (r == j || cx >> r & 1 == 0 || adj_h[r] & !cy != 0)
                    && (r == j || cy >> r & 1 == 0 || cols_h[r] & !cx != 0)
            })
        }
    };
    let in_mg = |mask: u64| is_cover(&adj_g, n, mask) && is_minimal_cover(&adj_g, &cols_g, n, mask);
    let transfer = |mask: u64| {
        if mask >> i & 1 == 1 {
            mask | (1u64 << j)
        } else {
            mask | (1u64 << (n + j))
        }
    };

    let reduced_vertices: Vec<usize> = (0..2 * n).filter(|&v| v != j && v != n + j).collect();
    let mut mh_count = 0usize;
    for sel in 0u64..(1u64 << reduced_vertices.len()) {
        let mut mask = 0u64;
        for (b, &v) in reduced_vertices.iter().enumerate() {
            if sel >> b & 1 == 1 {
                mask |= 1 << v;
            }
        }
        let lhs = in_mh(mask);
        if in_mg(transfer(mask)) != lhs {
            return false;
        }
        if lhs {
            mh_count += 1;
        }
    }
    // Surjectivity: every minimal cover of G restricts back and transfers
    // forward to itself.
    let mut mg_count = 0usize;
    for mask in 0u64..(1u64 << (2 * n)) {
        if !in_mg(mask) {
            continue;
        }
        mg_count += 1;
        let restricted = mask & !(1u64 << j) & !(1u64 << (n + j));
        if !in_mh(restricted) || transfer(restricted) != mask {
            return false;
        }
    }
    mh_count == mg_count
}
