use moyal_core::{MoyalError, MoyalParams};
use serde::{Deserialize, Serialize};

/// Parameters of the induced gauge action in covariant coordinates,
///
///   S(A) = ∫ (¼ F_{μν}⋆F_{μν} + (Ω²/4){𝒜_μ,𝒜_ν}⋆² + κ 𝒜_μ⋆𝒜_μ),
///
/// with coupling g = 1. κ is a mass-type parameter (dimension 2) that can
/// take either sign; the vacuum structure depends on its sign.
#[derive(Debug, Clone, Copy, Serialize, Deserialize)]
pub struct GaugeModel {
    pub params: MoyalParams,
    /// Ω² ∈ [0, 1].
    pub omega2: f64,
    pub kappa: f64,
}

impl GaugeModel {
    pub fn new(params: MoyalParams, omega2: f64, kappa: f64) -> Result<Self, MoyalError> {
        if !(0.0..=1.0).contains(&omega2) {
            return Err(MoyalError::Domain(format!(
                "omega2 must lie in [0, 1], got {omega2}"
            )));
        }
        Ok(GaugeModel {
            params,
            omega2,
            kappa,
        })
    }
}
