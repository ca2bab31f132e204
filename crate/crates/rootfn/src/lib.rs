//! Exact computation with root functionals of square polynomial systems.
//!
//! The crate computes Bezoutians and bordered determinants, extends bounded
//! root functionals through the star operation, solves for unit root
//! functionals, and reduces polynomials to normal forms modulo the ideal of
//! a zero-dimensional system, all over the rationals or a prime field, with
//! no floating point anywhere.

#[cfg(doctest)]
mod book;

pub mod bezout;
pub mod catalog;
pub mod context;
pub mod error;
pub mod field;
pub mod functional;
pub mod linalg;
pub mod monomial;
pub mod oracle;
pub mod parse;
pub mod poly;
pub mod reduce;
pub mod slice;
pub mod system;
pub mod unit;

pub use bezout::{bezoutian, bordered_det, divided_differences, nabla_system};
pub use bezout::{BorderExpansion, BottomRow, Convention, NablaSystem, PolyMatrix};
pub use context::{Block, VarContext};
pub use error::{Error, Result};
pub use field::{FieldSpec, Scalar};
pub use functional::{star_func, star_poly, Functional, StarContext};
pub use linalg::ExactMatrix;
pub use monomial::{x_monomials_upto, Monomial};
pub use poly::Polynomial;
pub use oracle::{brute_slice_enumerate, division_remainder, CatalogSystem, RootData};
pub use parse::{parse_poly, parse_system_file, SystemFile};
pub use reduce::{
    is_member, normal_form, quotient_representatives, telescoped_member_decomposition,
    EngineConfig, ReductionTrace,
};
pub use slice::{annihilator_basis, ideal_slice_basis, slice_membership_solve, SliceBasis};
pub use system::PolySystem;
pub use unit::{unit_functional, unit_functional_escalating, UnitFunctional};
