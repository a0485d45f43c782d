//! Truncated matrix-basis representation of the Moyal algebra.
//!
//! Fields are expanded over the harmonic-oscillator eigenfunction basis
//! `b_{mn}`, in which the star product becomes matrix multiplication and the
//! integral becomes `(2πθ)^{D/2}` times the matrix trace. The crate provides
//! the basis functions themselves, coefficient/grid conversions by
//! quadrature, coordinate multiplier matrices, and a symplectic Fourier
//! transform on 2D grids.

mod basis;
mod coords;
mod error;
mod field;
mod grid;
mod laguerre;
pub mod numerics;
mod params;

pub use basis::basis_eval;
pub use coords::{coordinate_field, Coordinate};
pub use error::MoyalError;
pub use field::Field;
pub use grid::{
    coeffs_from_function, coeffs_from_function_checked, eval_field, symplectic_fourier, GridField,
    QuadSpec,
};
pub use laguerre::laguerre;
pub use params::MoyalParams;

pub type Complex = num_complex::Complex64;
