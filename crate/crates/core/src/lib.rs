//! Exact invariants of vertex cover algebras of unmixed bipartite graphs.
//!
//! The pipeline starts from a bipartite graph on matched vertex pairs
//! `{x_1..x_n} ∪ {y_1..y_n}`, standardizes it so that every pair is an edge
//! and the edge relation is transitively closed, and then computes:
//!
//! * the cover lattice (the down-sets of the edge relation, in bijection
//!   with the minimal vertex covers),
//! * the order complex of the lattice with its f- and h-vectors,
//! * the Hilbert series of the cover algebra together with its h-polynomial,
//!   multiplicity and sharp multiplicity bounds,
//! * the reduced Gröbner basis of the defining toric ideal.
//!
//! Every non-trivial result is backed by an independent brute-force route
//! (exhaustive cover enumeration, Buchberger S-pair reduction, monomial-ideal
//! Hilbert series, direct degree-by-degree monomial counting), so the library
//! doubles as its own verification harness.

pub mod complex;
pub mod corpus;
pub mod graph;
pub mod lattice;
pub mod series;
pub mod toric;

pub use complex::{
    basic_cover_series, h_vector, order_complex, ComplexError, FVector, FaceComplex, HVector,
};
pub use graph::{
    is_unmixed_bruteforce, standardize, BipartiteGraph, GraphError, Relabeling, StandardGraph,
    Standardized, VertexCoverVector,
};
pub use lattice::{
    build_lattice, cm_reduce, delta_completion, is_cohen_macaulay, lattice_embedding,
    minimal_covers_bruteforce, CmReduction, CoverLattice, LatticeError, LatticeMap,
};
pub use series::{
    check_gorenstein_symmetry, h_polynomial, is_knn_by_series, knn_series, multiplicity,
    multiplicity_bounds, multiplicity_routes, vertex_cover_series, IntPolynomial, RationalSeries,
    SubsetSweep,
};
pub use toric::{
    buchberger_verify, groebner_basis, hilbert_function_direct, initial_ideal,
    monomial_quotient_series, series_via_initial_ideal, stanley_reisner_check, Binomial,
    GroebnerBasis, Monomial, ToricError, ToricRing,
};

/// Default cap on `2n` for exhaustive vertex-cover enumeration.
pub const DEFAULT_COVER_ENUM_LIMIT: usize = 24;
/// Default cap on `n` for the subset sweep behind the Hilbert series formulas.
pub const DEFAULT_SWEEP_MAX_N: usize = 12;
/// Default cap on the lattice size accepted by Buchberger verification.
pub const DEFAULT_BUCHBERGER_MAX_LATTICE: usize = 32;
/// Default caps for the direct degree-by-degree Hilbert function counter.
pub const DEFAULT_DIRECT_MAX_N: usize = 4;
pub const DEFAULT_DIRECT_MAX_DEGREE: usize = 6;
