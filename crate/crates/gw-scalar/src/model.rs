use moyal_core::{MoyalError, MoyalParams};
use serde::{Deserialize, Serialize};

/// Parameters of the harmonic scalar model
///
///   S = ∫ (½(∂φ)² + (Ω²/2) x̃²φ² ± (μ²/2)φ² + λ φ⋆φ⋆φ⋆φ).
///
/// `broken_phase = false` means the mass term enters with +μ²/2;
/// `broken_phase = true` flips it to −μ²/2 (with μ² ≥ 0), the convention in
/// which the nontrivial vacua live. The vacuum operations require the
/// broken phase explicitly instead of guessing from the sign of `mu2`.
#[derive(Debug, Clone, Copy, Serialize, Deserialize)]
pub struct ScalarModel {
    pub params: MoyalParams,
    pub omega: f64,
    pub mu2: f64,
    pub lambda: f64,
    pub broken_phase: bool,
}

impl ScalarModel {
    pub fn new(params: MoyalParams, omega: f64, mu2: f64, lambda: f64) -> Result<Self, MoyalError> {
        if !(omega >= 0.0) {
            return Err(MoyalError::Domain(format!(
                "omega must be >= 0, got {omega}"
            )));
        }
        if !(lambda > 0.0) {
            return Err(MoyalError::Domain(format!(
                "lambda must be > 0, got {lambda}"
            )));
        }
        Ok(ScalarModel {
            params,
            omega,
            mu2,
            lambda,
            broken_phase: false,
        })
    }

    pub fn broken(mut self) -> Self {
        self.broken_phase = true;
        self
    }

    /// Sign of the μ² term in the action: +1 normal phase, −1 broken phase.
    pub fn mass_sign(&self) -> f64 {
        if self.broken_phase {
            -1.0
        } else {
            1.0
        }
    }

    pub(crate) fn require_self_dual(&self) -> Result<(), MoyalError> {
        if (self.omega - 1.0).abs() > 1e-12 {
            return Err(MoyalError::Domain(format!(
                "operation requires the self-dual point omega = 1, got {}",
                self.omega
            )));
        }
        Ok(())
    }
}
