//! Exact computations for the Gelfand triples (G ≀ S_{2n}, HG_n, Θ_{ξ,π}).
//!
//! The crate is layered bottom-up:
//!
//! * [`cyclo`]: exact cyclotomic numbers, the coefficient field of every
//!   character value.
//! * [`groups`]: finite groups given by tables or permutation generators,
//!   validated character tables, twisted Frobenius–Schur indicators.
//! * [`partitions`]: partitions, multipartitions and their statistics.
//! * [`symfunc`]: symmetric functions over a finite label alphabet in the
//!   power-sum basis, with Schur, Schur-Q and Jack expansions.
//! * [`wreath`]: wreath products, their characters, the subgroup HG_n and
//!   the decomposition of the induced characters Θ_{ξ,π}↑.
//! * [`spherical`]: Θ_{ξ,π}-spherical functions by three engines and their
//!   reconciliation.
//!
//! The arithmetic layers are generic over the exact rational type through
//! [`scalar::Coefficient`]; the aliases below fix the arbitrary-precision
//! choice used by the group-theoretic layers.

pub mod cyclo;
pub mod data;
pub mod error;
pub mod groups;
pub mod partitions;
pub mod perm;
pub mod scalar;
pub mod selftest;
pub mod spherical;
pub mod symfunc;
pub mod wreath;

pub use error::{Error, Result};

/// Arbitrary-precision rationals.
pub type Rational = num_rational::BigRational;

/// Cyclotomic numbers with arbitrary-precision rational coefficients.
pub type CycNum = cyclo::Cyclotomic<Rational>;

/// Symmetric functions with cyclotomic coefficients.
pub type SymFuncElem = symfunc::SymFunc<CycNum>;

/// Symmetric functions with rational coefficients.
pub type RationalSymFunc = symfunc::SymFunc<Rational>;

pub use groups::{CharacterTable, ClassFusion, FiniteGroup, GroupData};
pub use partitions::{MultiPartition, Partition};
pub use spherical::{Setup, SphericalTable};
pub use wreath::{Pi, ThetaCharacter, WreathElement};
