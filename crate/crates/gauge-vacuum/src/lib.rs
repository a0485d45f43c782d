//! Induced gauge theory on the Moyal plane in covariant coordinates: the
//! matrix-basis gauge action and its equation of motion (D = 2), the
//! complete vacuum-sequence solvers (five Ω branches in 2D, hypergeometric
//! closed form in 4D), configuration-space profile reconstruction via
//! Bessel integrals, and the commutative-limit scaling check.

mod field2d;
mod model;
mod profile;
mod sequence;

pub use field2d::{
    gauge_action_2d, gauge_action_2d_axform, gauge_eom_residual_2d, hessian_probe, CovariantField2D,
};
pub use model::GaugeModel;
pub use profile::{bessel_j, vacuum_profile_xspace};
pub use sequence::{
    characteristic_root, commutative_limit_check, v4_ratio_exact, vacuum_sequence_2d,
    vacuum_sequence_4d, VacuumBranch, VacuumSequence,
};
