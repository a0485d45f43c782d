//! Commutation factors over finitely generated abelian groups, their
//! multipliers and crossed products, the ε-structure (trace, bracket,
//! center, derivations) of elementary and fine graded matrix algebras, and
//! the Z₂-graded Moyal superalgebra with its graded connection and
//! curvature.
//!
//! Scalar values of commutation factors and factor sets are exact roots of
//! unity ([`Root`]); matrix-level computations use complex floats. The
//! superalgebra layer works on truncated matrix fields from `moyal-core`;
//! polynomial multipliers (ξ_μ = −½x̃_μ, η_{μν} = ½x̃_μx̃_ν = 2ξ_μξ_ν) are
//! only exact on interior matrix blocks, so all superbracket and curvature
//! defects are interior-masked with margin 2.

mod crossed;
mod curvature;
mod factor;
mod fine;
mod generators;
mod group;
mod linalg;
mod matrix;
mod root;
mod superfield;

pub use crossed::{crossed_product, CrossedProduct};
pub use curvature::{
    action_reduction, component_closed, component_definition, field_exp, gauge_covariance_defect,
    graded_curvature, Covariant, CurvatureComponent, Potentials,
};
pub use factor::{
    cf_validate, eps_from_sigma, sigma_from_eps, CfReport, CommutationFactor, FactorSet,
};
pub use fine::{DerivationSpace, FineAlgebra};
pub use generators::{derivation_table_check, eta, theta_inv, xi, Gen};
pub use group::{Element, GradingGroup};
pub use matrix::ElementaryAlgebra;
pub use root::Root;
pub use superfield::SuperField;

use thiserror::Error;

#[derive(Debug, Error)]
pub enum EpsError {
    #[error("domain error: {0}")]
    Domain(String),
    #[error("derivation axiom violated at (E_{i}{j}, E_{k}{l}), defect {defect:.2e}")]
    DerivationAxiom {
        i: usize,
        j: usize,
        k: usize,
        l: usize,
        defect: f64,
    },
    #[error(transparent)]
    Moyal(#[from] moyal_core::MoyalError),
}
