//! Independence complexes, exact reduced homology, and Cohen-Macaulay /
//! Gorenstein recognition for graphs and simplicial complexes.
//!
//! The homology engine is generic over an exact scalar
//! ([`EliminationScalar`]); [`FieldSpec`] picks one at run time. The
//! aliases below name the concrete scalars in use.

pub mod complex;
pub mod criteria;
pub mod error;
pub mod graph;
pub mod graph6;
pub mod homology;
pub mod scalar;

pub use complex::{independence_complex, Core, FVector, Face, SimplicialComplex};
pub use criteria::{
    check_theorem, is_cm_graph, is_cohen_macaulay, is_doubly_cm, is_eulerian, is_gorenstein,
    is_gorenstein_graph, is_second_power_cm, reisner_witness, TheoremVerdict,
};
pub use error::{Error, Result};
pub use graph::{ExtendedGirth, Family, Graph, Subgraph, VertexSet};
pub use graph6::{parse_graph6, to_graph6};
pub use homology::{
    boundary_matrix, boundary_matrix_over, is_k_acyclic, matrix_rank, rank, reduced_betti,
    reduced_betti_in, BettiTable, FieldSpec, SparseMatrix,
};
pub use scalar::{EliminationScalar, Zp};

/// Integer scalar for fraction-free elimination; its ranks are ranks over ℚ.
pub type Integer = num_bigint::BigInt;
/// Rational scalar.
pub type Q = num_rational::BigRational;
pub type F2 = Zp<2>;
pub type F3 = Zp<3>;
pub type F5 = Zp<5>;
