use crate::MoyalError;
use serde::{Deserialize, Serialize};

/// Deformation parameters of the Moyal algebra: the noncommutativity scale
/// θ > 0 and the (even) space dimension D ∈ {2, 4}.
///
/// The noncommutativity matrix is block diagonal, `Θ = θ·[[0,1],[-1,0]]`
/// per coordinate pair, so `Θ⁻¹_{12} = -1/θ` within each pair.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct MoyalParams {
    pub theta: f64,
    pub dim: usize,
}

impl MoyalParams {
    pub fn new(theta: f64, dim: usize) -> Result<Self, MoyalError> {
        if !(theta > 0.0) || !theta.is_finite() {
            return Err(MoyalError::Domain(format!(
                "theta must be positive, got {theta}"
            )));
        }
        if dim != 2 && dim != 4 {
            return Err(MoyalError::Domain(format!("dim must be 2 or 4, got {dim}")));
        }
        Ok(Self { theta, dim })
    }

    /// Number of coordinate pairs D/2 (= number of multi-index components).
    pub fn pairs(self) -> usize {
        self.dim / 2
    }

    /// The volume factor (2πθ)^{D/2} relating trace and integral.
    pub fn trace_volume(self) -> f64 {
        (2.0 * std::f64::consts::PI * self.theta).powi(self.pairs() as i32)
    }

    /// Entry (μ,ν) of Θ⁻¹ (1-based coordinate labels).
    pub fn theta_inv(self, mu: usize, nu: usize) -> f64 {
        assert!(mu >= 1 && mu <= self.dim && nu >= 1 && nu <= self.dim);
        if (mu - 1) / 2 != (nu - 1) / 2 {
            return 0.0; // different pairs never mix
        }
        if mu + 1 == nu && mu % 2 == 1 {
            -1.0 / self.theta
        } else if nu + 1 == mu && nu % 2 == 1 {
            1.0 / self.theta
        } else {
            0.0
        }
    }
}
