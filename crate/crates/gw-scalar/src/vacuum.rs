use crate::ScalarModel;
use moyal_core::{Complex, Field, MoyalError};
use serde::Serialize;

/// The rotation-invariant vacuum of the broken-phase model at Ω = 1:
/// φ_{mn} = a_{|m|} δ_{mn} with
///
///   a_k² = (1/λθ)(μ²θ/4 − D/2 − 2|k|)   for |k| ≤ p,
///   p = ⌊(μ²θ/4 − D/2)/2⌋.
///
/// Degenerate boundary entries a_k = 0 are stored explicitly so invariant
/// checks stay uniform. The canonical sign choice is a_k ≥ 0; any sign
/// pattern solves the equation of motion and can be applied afterwards.
#[derive(Debug, Clone, Serialize)]
pub struct VacuumScalar {
    pub model: ScalarModel,
    /// Cutoff index; negative means the zero vacuum.
    pub p: i64,
    /// a indexed by the multi-index weight |k| ∈ {0..p}.
    pub a: Vec<f64>,
}

/// Solve for the vacuum. Requires Ω = 1 and the broken phase.
pub fn scalar_vacuum(model: &ScalarModel) -> Result<VacuumScalar, MoyalError> {
    model.require_self_dual()?;
    if !model.broken_phase {
        return Err(MoyalError::Domain(
            "scalar_vacuum applies to the broken phase (negative mass term)".into(),
        ));
    }
    let theta = model.params.theta;
    let d_half = model.params.pairs() as f64;
    let margin = model.mu2 * theta / 4.0 - d_half;
    let p = (margin / 2.0).floor() as i64;
    let mut a = Vec::new();
    if p >= 0 {
        for k in 0..=p {
            let a2 = (margin - 2.0 * k as f64) / (model.lambda * theta);
            // a2 ≥ 0 by construction of p; clamp away negative rounding fuzz
            a.push(a2.max(0.0).sqrt());
        }
    }
    Ok(VacuumScalar {
        model: *model,
        p,
        a,
    })
}

impl VacuumScalar {
    /// The vacuum as a truncated diagonal field.
    pub fn as_field(&self, trunc: usize) -> Field {
        let mut f = Field::zero(self.model.params, trunc);
        let k = f.coeffs.nrows();
        for i in 0..k {
            let w = f.index_weight(i) as i64;
            if w <= self.p {
                f.coeffs[(i, i)] = Complex::new(self.a[w as usize], 0.0);
            }
        }
        f
    }

    /// Exact action value in D = 2:
    ///   S[v] = −(8π/λθ) Σ_{k≤p} (μ²θ/8 − ½ − k)².
    pub fn action_closed_form(&self) -> f64 {
        assert_eq!(self.model.params.dim, 2, "closed form stated for D = 2");
        if self.p < 0 {
            return 0.0;
        }
        let theta = self.model.params.theta;
        let mut acc = 0.0;
        for k in 0..=self.p {
            let c = self.model.mu2 * theta / 8.0 - 0.5 - k as f64;
            acc += c * c;
        }
        -8.0 * std::f64::consts::PI / (self.model.lambda * theta) * acc
    }
}

/// Residual of the Ω = 1 equation of motion in the broken phase:
///
///   (4/θ)(|m|+|n|+D/2) φ − μ²φ + 4λ φ⋆φ⋆φ.
///
/// (In the normal phase the mass term enters with +μ² and only φ = 0
/// solves it; the sign follows the model flag.)
pub fn scalar_eom_residual(f: &Field, model: &ScalarModel) -> Result<Field, MoyalError> {
    model.require_self_dual()?;
    if f.params != model.params {
        return Err(MoyalError::Dimension(
            "field/model parameter mismatch".into(),
        ));
    }
    let theta = model.params.theta;
    let d_half = model.params.pairs() as f64;
    let s = model.mass_sign();
    let cube = f.star(f)?.star(f)?;
    let mut out = Field::zero(f.params, f.trunc);
    for ((i, j), &c) in f.coeffs.indexed_iter() {
        let w = (f.index_weight(i) + f.index_weight(j)) as f64;
        out.coeffs[(i, j)] = c * ((4.0 / theta) * (w + d_half) + s * model.mu2);
    }
    out.add(&cube.scale_re(4.0 * model.lambda))
}

#[derive(Debug, Clone, Serialize)]
pub struct StabilityReport {
    /// C⁻¹_{mn} over m, n < trunc.
    pub cinv: Vec<Vec<f64>>,
    pub min_value: f64,
    /// True when μ²θ/8 − ½ ∈ ℕ, which produces an exact zero mode.
    pub degenerate: bool,
    pub degenerate_index: Option<usize>,
}

/// Inverse-propagator diagnostics around the vacuum (D = 2):
///
///   C⁻¹_{mn} = α_{mn} + 4λπθ Σ_k a_k²(δ_{mk}+δ_{nk}) + 4λπθ a_m a_n,
///   α_{mn} = 4π(m+n+1) − μ²πθ.
pub fn vacuum_stability(v: &VacuumScalar, trunc: usize) -> Result<StabilityReport, MoyalError> {
    if v.model.params.dim != 2 {
        return Err(MoyalError::Domain(
            "stability scan is established for D = 2 (the D = 4 variant is heuristic)".into(),
        ));
    }
    let theta = v.model.params.theta;
    let mu2 = v.model.mu2;
    let lam = v.model.lambda;
    let pi = std::f64::consts::PI;
    let a2 = |k: usize| -> f64 {
        if (k as i64) <= v.p {
            v.a[k] * v.a[k]
        } else {
            0.0
        }
    };
    let a = |k: usize| -> f64 {
        if (k as i64) <= v.p {
            v.a[k]
        } else {
            0.0
        }
    };
    let mut cinv = vec![vec![0.0; trunc]; trunc];
    let mut min_value = f64::INFINITY;
    for m in 0..trunc {
        for n in 0..trunc {
            let alpha = 4.0 * pi * (m as f64 + n as f64 + 1.0) - mu2 * pi * theta;
            let val = alpha
                + 4.0 * lam * pi * theta * (a2(m) + a2(n))
                + 4.0 * lam * pi * theta * a(m) * a(n);
            cinv[m][n] = val;
            min_value = min_value.min(val);
        }
    }
    let crit = mu2 * theta / 8.0 - 0.5;
    let rounded = crit.round();
    let degenerate = crit >= 0.0 && (crit - rounded).abs() < 1e-12;
    Ok(StabilityReport {
        cinv,
        min_value,
        degenerate,
        degenerate_index: if degenerate {
            Some(rounded as usize)
        } else {
            None
        },
    })
}

/// Scan α_{mn} = 4π(m+n+1) − μ²πθ for negative entries: these witness that
/// φ = 0 is not a local minimum once p ≥ 0 (D = 2).
pub fn unstable_modes_at_zero(model: &ScalarModel, trunc: usize) -> Vec<(usize, usize)> {
    let pi = std::f64::consts::PI;
    let mut out = Vec::new();
    for m in 0..trunc {
        for n in 0..trunc {
            let alpha =
                4.0 * pi * (m as f64 + n as f64 + 1.0) - model.mu2 * pi * model.params.theta;
            if alpha < 0.0 {
                out.push((m, n));
            }
        }
    }
    out
}

#[derive(Debug, Clone, Serialize)]
pub struct SigmaEntry {
    pub m: usize,
    pub n: usize,
    /// (2/θ)(|m|+|n|+D/2−μ²θ/4), reported verbatim.
    pub coefficient: f64,
    /// True when the entry survives the shift mask (|m| > p).
    pub in_mask: bool,
}

/// Quadratic coefficients of the sigma-model transverse modes after the
/// vacuum shift. Entries are reported verbatim; the mask records which
/// pairs remain in the shifted action (|m| > p). Interpretation (absence of
/// flat directions) is left to the docs, as the statement in the source is
/// about the masked form, not positivity.
pub fn sigma_quadratic_spectrum(v: &VacuumScalar, trunc: usize) -> Vec<SigmaEntry> {
    let theta = v.model.params.theta;
    let d_half = v.model.params.pairs() as f64;
    let mut out = Vec::new();
    for m in 0..trunc {
        for n in 0..trunc {
            let coefficient =
                (2.0 / theta) * (m as f64 + n as f64 + d_half - v.model.mu2 * theta / 4.0);
            out.push(SigmaEntry {
                m,
                n,
                coefficient,
                in_mask: (m as i64) > v.p,
            });
        }
    }
    out
}
