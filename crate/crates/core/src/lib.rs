//! Koszul homology of monomial ideals.
//!
//! Monomials are exponent vectors ([`Multidegree`]) and ideals are kept by
//! their minimal generators ([`MonomialIdeal`]). The `n-1`st Koszul homology
//! is supported exactly on the maximal corners, which a pruned
//! Mayer-Vietoris tree search finds ([`compute_b_n_minus_1`]). Irreducible
//! decompositions, Stanley decompositions and Hilbert series are read off
//! those corners. [`oracle`] holds slow independent reference computations.

pub mod decompose;
pub mod error;
pub mod koszul;
pub mod linalg;
pub mod monomial;
pub mod mvt;
pub mod oracle;
pub mod random;
pub mod simplicial;
pub mod text;

use num_bigint::{BigInt, BigUint};

pub use decompose::{
    hilbert_series, irreducible_decomposition, irreducible_decomposition_with, krull_dimension, remove_redundant,
    stanley_artinian, stanley_artinian_with, stanley_general, HilbertSeries, IrreducibleComponent, StanleyCone,
    StanleyDecomposition,
};
pub use error::{Error, Result};
pub use koszul::{gfd, is_closed_corner, is_maximal_corner, koszul_homology_dim, lfd, lower_complex, upper_complex};
pub use linalg::{exact_rank, ExactInt, IntMatrix};
pub use monomial::{Exponent, MonomialIdeal, Multidegree};
pub use mvt::{
    betti_bounds, build_mvt, build_mvt_with, compute_b_n_minus_1, compute_b_n_minus_1_with, mvt_children, BettiBound,
    BettiBounds, CornerSearch, MvtNode, MvtOptions, MvtTree, PivotStrategy, PruneReason, PruneRules, SearchStats,
};
pub use random::{random_ideal, BenchSpec};
pub use simplicial::{reduced_homology, HomologyProfile, SimplicialComplex};
pub use text::{format_monomial, parse_ideal, IdealDocument, ParseError};

/// Boundary matrices with machine-word entries.
pub type SmallIntMatrix = IntMatrix<i64>;
/// Boundary matrices with arbitrary-precision entries.
pub type BigIntMatrix = IntMatrix<BigInt>;
/// Hilbert function values without overflow.
pub type HilbertCoefficient = BigUint;
