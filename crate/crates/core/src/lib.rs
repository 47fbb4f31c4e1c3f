//! Exact engine for singular vectors of the scalar generalized Verma module of
//! `so(7)` induced from the conformal parabolic, restricted to the exceptional
//! subalgebra `G2`.
//!
//! Everything is computed in exact rational arithmetic. The pipeline runs from
//! matrix realizations of the Lie algebras, through a PBW model of the Verma
//! module, to differential operators on polynomials in `xi_1..xi_5` and the
//! parametric linear systems whose solutions are the singular vectors.

#![no_std]

extern crate alloc;

pub mod diffop;
pub mod embedding;
pub mod error;
pub mod fmethod;
pub mod lie;
pub mod linalg;
pub mod poly;
pub mod scalar;
pub mod solver;
pub mod text;
pub mod verma;

pub use diffop::DiffOperator;
pub use embedding::{EmbeddedSubalgebra, ParabolicSelection};
pub use error::Error;
pub use fmethod::Engine;
pub use lie::{AlgebraElement, StructureTable, WeightBasis, WeightVec};
pub use poly::{Monomial, Poly, XiPolynomial};
pub use scalar::{ParamScalar, Rational};
pub use solver::SingularCertificate;
pub use verma::{VermaModule, VermaMonomial, VermaVector};
