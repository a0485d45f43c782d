use crate::ScalarModel;
use moyal_core::{coeffs_from_function, symplectic_fourier, GridField, MoyalError};
use serde::Serialize;

#[derive(Debug, Clone, Serialize)]
pub struct DualityReport {
    pub s_direct: f64,
    pub s_dual: f64,
    pub defect: f64,
}

/// Full action on the grid for given couplings: quadratic part by finite
/// differences and quadrature, quartic part by transporting the field to
/// the matrix basis and taking λ(2πθ)tr(M⁴). Also serves as the
/// position-space oracle for the matrix action.
pub fn grid_action(
    g: &GridField,
    omega: f64,
    mu2: f64,
    lambda: f64,
    trunc: usize,
) -> Result<f64, MoyalError> {
    let theta = g.params.theta;
    let n = g.spec.resolution;
    let h = g.spec.step();
    let w = h * h;
    let mut quad = 0.0;
    for i in 0..n {
        let x1 = g.spec.node(i);
        for j in 0..n {
            let x2 = g.spec.node(j);
            let v = g.samples[(i, j)].re;
            // central differences; the field is Schwartz-small at the edges
            let d1 = if i > 0 && i + 1 < n {
                (g.samples[(i + 1, j)].re - g.samples[(i - 1, j)].re) / (2.0 * h)
            } else {
                0.0
            };
            let d2 = if j > 0 && j + 1 < n {
                (g.samples[(i, j + 1)].re - g.samples[(i, j - 1)].re) / (2.0 * h)
            } else {
                0.0
            };
            let xt2 = 4.0 / (theta * theta) * (x1 * x1 + x2 * x2);
            quad +=
                0.5 * (d1 * d1 + d2 * d2) + 0.5 * omega * omega * xt2 * v * v + 0.5 * mu2 * v * v;
        }
    }
    quad *= w;
    let (f, _) = coeffs_from_function(g, trunc)?;
    let m2 = f.coeffs.dot(&f.coeffs);
    let m4 = m2.dot(&m2);
    let quart: num_complex::Complex64 = m4.diag().iter().sum();
    Ok(quad + lambda * f.params.trace_volume() * quart.re)
}

/// Covariance of the harmonic action under the symplectic Fourier
/// transform: S[φ; μ, λ, Ω] = Ω² S[φ̃; μ/Ω, λ/Ω², 1/Ω]. Both sides are
/// evaluated numerically and the relative defect returned. `f` must be a
/// real D = 2 field.
pub fn ls_duality_check(
    g: &GridField,
    model: &ScalarModel,
    trunc: usize,
) -> Result<DualityReport, MoyalError> {
    if model.params.dim != 2 {
        return Err(MoyalError::Domain("duality check is for D = 2".into()));
    }
    if model.omega <= 0.0 {
        return Err(MoyalError::Domain("duality requires omega > 0".into()));
    }
    if model.broken_phase {
        return Err(MoyalError::Domain(
            "duality check uses the +mu^2/2 convention".into(),
        ));
    }
    let imag_max = g.samples.iter().map(|c| c.im.abs()).fold(0.0, f64::max);
    if imag_max > 1e-10 * (1.0 + g.max_abs()) {
        return Err(MoyalError::Domain(
            "duality check needs a real field".into(),
        ));
    }
    let omega = model.omega;
    let s_direct = grid_action(g, omega, model.mu2, model.lambda, trunc)?;
    let dual = symplectic_fourier(g, 1.0);
    let s_dual = omega
        * omega
        * grid_action(
            &dual,
            1.0 / omega,
            model.mu2 / (omega * omega),
            model.lambda / (omega * omega),
            trunc,
        )?;
    let defect = (s_direct - s_dual).abs() / s_direct.abs().max(1.0);
    Ok(DualityReport {
        s_direct,
        s_dual,
        defect,
    })
}
