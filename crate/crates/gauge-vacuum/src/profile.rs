use crate::{VacuumBranch, VacuumSequence};
use moyal_core::numerics::integrate_gl_composite;
use moyal_core::MoyalError;

/// Bessel J_n by power series for small argument and the integral
/// representation J_n(w) = (1/π)∫₀^π cos(nτ − w sin τ) dτ (composite
/// Simpson) for larger w, where the series would cancel badly.
pub fn bessel_j(n: u32, w: f64) -> f64 {
    if w.abs() < 8.0 {
        let half = w / 2.0;
        let x = half * half;
        // term_0 = (w/2)^n / n!
        let mut term = 1.0;
        for k in 1..=n {
            term *= half / k as f64;
        }
        let mut acc = 0.0;
        for k in 0..60 {
            acc += term;
            term *= -x / ((k + 1) as f64 * (k as f64 + 1.0 + n as f64));
            if term.abs() < 1e-18 * acc.abs().max(1e-30) {
                break;
            }
        }
        acc
    } else {
        let steps = 512;
        let h = std::f64::consts::PI / steps as f64;
        let f = |tau: f64| (n as f64 * tau - w * tau.sin()).cos();
        let mut acc = f(0.0) + f(std::f64::consts::PI);
        for i in 1..steps {
            let t = i as f64 * h;
            acc += f(t) * if i % 2 == 1 { 4.0 } else { 2.0 };
        }
        acc * h / 3.0 / std::f64::consts::PI
    }
}

/// J₁(2√(tz))/√z = √t Σ_k (−1)^k (tz)^k / (k!(k+1)!), finite at z = 0.
fn j1_over_sqrt_z(t: f64, z: f64) -> f64 {
    let tz = t * z;
    if tz < 16.0 {
        let mut term = 1.0;
        let mut acc = 0.0;
        for k in 0..80 {
            acc += term;
            term *= -tz / ((k + 1) as f64 * (k + 2) as f64);
            if term.abs() < 1e-18 * acc.abs().max(1e-30) {
                break;
            }
        }
        t.sqrt() * acc
    } else {
        bessel_j(1, 2.0 * tz.sqrt()) / z.sqrt()
    }
}

/// J₂(2√(tz))/z = t Σ_k (−1)^k (tz)^k / (k!(k+2)!), finite at z = 0.
fn j2_over_z(t: f64, z: f64) -> f64 {
    let tz = t * z;
    if tz < 16.0 {
        let mut term = 0.5;
        let mut acc = 0.0;
        for k in 0..80 {
            acc += term;
            term *= -tz / ((k + 1) as f64 * (k + 3) as f64);
            if term.abs() < 1e-18 * acc.abs().max(1e-30) {
                break;
            }
        }
        t * acc
    } else {
        bessel_j(2, 2.0 * tz.sqrt()) / z
    }
}

const T_MAX: f64 = 40.0;

/// Upper bound on Σ_{m≥M} t^m/m! (Chernoff-style tail of the exponential
/// series) used for the truncation estimate.
fn exp_tail(t: f64, m0: usize) -> f64 {
    if m0 as f64 <= t + 1.0 {
        return t.exp();
    }
    let mut term = 1.0f64;
    for k in 1..=m0 {
        term *= t / k as f64;
    }
    term / (1.0 - t / (m0 as f64 + 1.0))
}

/// Vacuum gauge profile in configuration space. 2D:
///
///   𝒜_μ(x) = 2√θ (e^{z/2}/√z) ∫₀^∞ dt e^{−t} √t J₁(2√(tz))
///            Σ_m ((−1)^m √(u_{m+1})/(m!√(m+1))) t^m
///            (x̃_μ cos ξ_m + (2/θ) x_μ sin ξ_m),   z = 2x²/θ,
///
/// and the analogous J₂ form in 4D with t^{m+1} weights and prefactor
/// 2√(2θ) e^{z/2}/z. With ξ_m = 0 the profile is purely along x̃_μ. The
/// t-integral is cut at T = 40 (e^{−t} bound below double precision) and
/// the m-series at the available sequence length; if the truncation
/// estimate at the cut exceeds tolerance an accuracy error is returned.
pub fn vacuum_profile_xspace(seq: &VacuumSequence, x: &[f64]) -> Result<Vec<f64>, MoyalError> {
    let dim = seq.model.params.dim;
    if x.len() != dim {
        return Err(MoyalError::Dimension(format!(
            "point has {} components, model is D = {dim}",
            x.len()
        )));
    }
    let four_d = seq.branch == VacuumBranch::FourD;
    if four_d != (dim == 4) {
        return Err(MoyalError::Dimension(
            "sequence branch and model dimension disagree".into(),
        ));
    }
    let theta = seq.model.params.theta;
    let x2: f64 = x.iter().map(|v| v * v).sum();
    let z = 2.0 * x2 / theta;

    // c_m = √(u_{m+1})/√(m+1) (2D) or √(v_{m+1}) (4D); the m-sum carries
    // the (−1)^m/m! factor. Split by phase into the x̃ and x directions.
    let mlen = seq.u.len() - 1;
    let mut c_cos = Vec::with_capacity(mlen);
    let mut c_sin = Vec::with_capacity(mlen);
    for m in 0..mlen {
        let base = if four_d {
            seq.u[m + 1].max(0.0).sqrt()
        } else {
            seq.u[m + 1].max(0.0).sqrt() / ((m + 1) as f64).sqrt()
        };
        c_cos.push(base * seq.xi[m].cos());
        c_sin.push(base * seq.xi[m].sin());
    }
    let cabs: Vec<f64> = c_cos.iter().zip(&c_sin).map(|(a, b)| a.hypot(*b)).collect();
    // truncation estimate at the upper end of the t range; a growing
    // coefficient sequence (4D closed form) is extrapolated geometrically
    let end_max = |hi: usize| -> f64 {
        cabs[hi.saturating_sub(4)..hi]
            .iter()
            .fold(0.0f64, |a, &b| a.max(b))
    };
    let c_last = end_max(mlen);
    let ratio = if mlen > 16 && end_max(mlen - 12) > 0.0 && c_last > 0.0 {
        (c_last / end_max(mlen - 12)).powf(1.0 / 12.0).max(1.0)
    } else {
        1.0
    };
    let tail = c_last * exp_tail(ratio * T_MAX, mlen) * (-T_MAX).exp();
    if tail > 1e-8 {
        return Err(MoyalError::Accuracy(format!(
            "series truncation estimate {tail:.3e} above tolerance; supply a longer sequence"
        )));
    }

    let series = |t: f64, c: &[f64]| -> f64 {
        let mut acc = 0.0;
        let mut fact = 1.0; // t^m/m!
        for (m, cm) in c.iter().enumerate() {
            acc += cm * fact * if m % 2 == 0 { 1.0 } else { -1.0 };
            fact *= t / (m + 1) as f64;
        }
        acc
    };

    // 2D weight: √t J₁(2√(tz))/√z; 4D weight: t J₂(2√(tz))/z (the extra t
    // from the t^{m+1} series is absorbed here).
    let weight = |t: f64| -> f64 {
        if four_d {
            t * j2_over_z(t, z)
        } else {
            t.sqrt() * j1_over_sqrt_z(t, z)
        }
    };
    let integrand_cos = |t: f64| (-t).exp() * weight(t) * series(t, &c_cos);
    let integrand_sin = |t: f64| (-t).exp() * weight(t) * series(t, &c_sin);

    let i_cos = integrate_gl_composite(integrand_cos, 0.0, T_MAX, 32, 40);
    let has_sin = c_sin.iter().any(|&v| v != 0.0);
    let i_sin = if has_sin {
        integrate_gl_composite(integrand_sin, 0.0, T_MAX, 32, 40)
    } else {
        0.0
    };

    let pref = if four_d {
        2.0 * (2.0 * theta).sqrt() * (z / 2.0).exp()
    } else {
        2.0 * theta.sqrt() * (z / 2.0).exp()
    };

    // x̃ per pair: x̃_{2j+1} = −(2/θ)x_{2j+2}, x̃_{2j+2} = (2/θ)x_{2j+1}
    let mut out = vec![0.0; dim];
    for j in 0..dim / 2 {
        let (x_odd, x_even) = (x[2 * j], x[2 * j + 1]);
        let xt = [-(2.0 / theta) * x_even, (2.0 / theta) * x_odd];
        for (c, xc) in [(2 * j, x_odd), (2 * j + 1, x_even)] {
            out[c] = pref * (xt[c - 2 * j] * i_cos + (2.0 / theta) * xc * i_sin);
        }
    }
    Ok(out)
}
