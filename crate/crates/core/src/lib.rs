//! High-precision toolkit for period groups of conifold degenerations of
//! one-parameter Calabi-Yau families and their modular-form invariants.
//!
//! The pipeline: an order-4 Fuchsian operator in θ-form ([`opcore`]) is
//! analyzed locally (singular points, exponents, Frobenius bases,
//! [`frobenius`]), solutions are continued analytically along polyline paths
//! to obtain transfer and monodromy matrices ([`continuation`]), and the
//! resulting period-group generators are compared against special values and
//! partial Mellin transforms of weight-4 Hecke eigenforms ([`modforms`])
//! through lattice-reduction based integer-relation certificates
//! ([`relations`]). Coefficient data and the reference tables used by the
//! verification suite live in [`ingest`].

pub mod continuation;
pub mod frobenius;
pub mod ingest;
pub mod modforms;
pub mod num;
pub mod opcore;
pub mod relations;

pub use num::{Ctx, Cplx};
