//! Scalar field theory with harmonic confinement on the Moyal plane
//! (the Grosse-Wulkenhaar model): matrix-basis action and kinetic operator,
//! propagators (matrix closed form, α-integral, configuration-space Mehler
//! kernel), the diagonal vacuum solution in the broken phase with its
//! stability diagnostics, and the Langmann-Szabo duality check.

mod duality;
mod kinetic;
mod model;
mod propagator;
mod vacuum;

pub use duality::{grid_action, ls_duality_check, DualityReport};
pub use kinetic::{apply_kinetic, gw_action, kinetic_dense};
pub use model::ScalarModel;
pub use propagator::{matrix_kernel, mehler_kernel, propagator_matrix};
pub use vacuum::{
    scalar_eom_residual, scalar_vacuum, sigma_quadratic_spectrum, unstable_modes_at_zero,
    vacuum_stability, SigmaEntry, StabilityReport, VacuumScalar,
};
