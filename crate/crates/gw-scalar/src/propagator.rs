use crate::ScalarModel;
use moyal_core::numerics::integrate_gl_composite;
use moyal_core::MoyalError;

/// Matrix-basis propagator entry C_{mn,kl}.
///
/// At Ω = 1 the closed form
///   C = (θ/4) δ_{ml} δ_{nk} / (|m|+|n| + μ²θ/4 + D/2)
/// is returned exactly. For general Ω the one-dimensional α-integral
/// representation is evaluated by Gauss-Legendre quadrature after the
/// substitution α = 1 − u², which removes the endpoint singularity of the
/// (1−α)^{·−1} factor.
pub fn propagator_matrix(
    m: &[usize],
    n: &[usize],
    k: &[usize],
    l: &[usize],
    model: &ScalarModel,
) -> Result<f64, MoyalError> {
    let pairs = model.params.pairs();
    assert!(
        m.len() == pairs && n.len() == pairs && k.len() == pairs && l.len() == pairs,
        "multi-index length"
    );
    let theta = model.params.theta;
    let omega = model.omega;
    let mu2 = model.mu2;
    let d = model.params.dim as f64;

    if (omega - 1.0).abs() < 1e-14 {
        let diag = m == l && n == k;
        if !diag {
            return Ok(0.0);
        }
        let wm: usize = m.iter().sum();
        let wn: usize = n.iter().sum();
        return Ok(theta / 4.0 / (wm as f64 + wn as f64 + mu2 * theta / 4.0 + d / 2.0));
    }
    if omega <= 0.0 {
        return Err(MoyalError::Domain(
            "alpha-integral form needs omega > 0".into(),
        ));
    }
    // support constraint m + k = n + l componentwise
    for j in 0..pairs {
        if m[j] + k[j] != n[j] + l[j] {
            return Ok(0.0);
        }
    }

    let beta = (1.0 - omega) * (1.0 - omega) / (4.0 * omega); // (1−Ω)²/(4Ω)
    let gamma = (1.0 - omega * omega) / (4.0 * omega); // (1−Ω²)/(4Ω)
    let exp0 = mu2 * theta / (8.0 * omega) + d / 4.0 - 1.0;

    let integrand = |u: f64| -> f64 {
        // α = 1 − u², so (1−α) = u², dα = 2u du
        let alpha = 1.0 - u * u;
        let sq1ma = u; // √(1−α)
        let b = 1.0 + beta * alpha;
        let mut val = u.powf(2.0 * exp0) / b.powf(d / 2.0) * 2.0 * u;
        for j in 0..pairs {
            let (mj, nj, kj, lj) = (m[j], n[j], k[j], l[j]);
            let mut factor = (sq1ma / b).powi((nj + lj) as i32);
            let ratio = gamma * alpha / sq1ma;
            let i_lo = mj.saturating_sub(nj);
            let i_hi = mj.min(lj);
            let mut series = 0.0;
            for i in i_lo..=i_hi {
                let a_coef =
                    (binom(mj, mj - i) * binom(nj, mj - i) * binom(lj, lj - i) * binom(kj, lj - i))
                        .sqrt();
                let p = (mj + lj - 2 * i) as i32;
                let pw = if p == 0 { 1.0 } else { ratio.powi(p) };
                series += a_coef * pw;
            }
            factor *= series;
            val *= factor;
        }
        val
    };

    let v = integrate_gl_composite(integrand, 0.0, 1.0, 32, 12);
    Ok(theta / (8.0 * omega) * v)
}

fn binom(n: usize, k: usize) -> f64 {
    if k > n {
        return 0.0;
    }
    let k = k.min(n - k);
    let mut acc = 1.0f64;
    for i in 0..k {
        acc = acc * (n - i) as f64 / (i + 1) as f64;
    }
    acc
}

/// Configuration-space (Mehler) propagator
///
///   C(x,y) = (θ/4Ω)(Ω/πθ)^{D/2} ∫₀^∞ dα sinh^{−D/2}(α) e^{−μ²α/(2Ω̃)}
///            exp(−(Ω̃/4) coth(α/2)(x−y)² − (Ω̃/4) tanh(α/2)(x+y)²),
///
/// with Ω̃ = 2Ω/θ. The α → 0 endpoint is integrable only for x ≠ y, so
/// coincident points are rejected (a small-α cutoff would be required).
pub fn mehler_kernel(x: &[f64], y: &[f64], model: &ScalarModel) -> Result<f64, MoyalError> {
    let d = model.params.dim as f64;
    assert_eq!(x.len(), model.params.dim);
    assert_eq!(y.len(), model.params.dim);
    if model.omega <= 0.0 {
        return Err(MoyalError::Domain("mehler_kernel needs omega > 0".into()));
    }
    let theta = model.params.theta;
    let omega = model.omega;
    let ot = 2.0 * omega / theta; // Ω̃
    let dist2: f64 = x.iter().zip(y).map(|(a, b)| (a - b) * (a - b)).sum();
    let sum2: f64 = x.iter().zip(y).map(|(a, b)| (a + b) * (a + b)).sum();
    if dist2 < 1e-9 {
        return Err(MoyalError::Domain(
            "mehler_kernel diverges at coincident points; a small-alpha cutoff is required".into(),
        ));
    }
    let mass_rate = model.mu2 / (2.0 * ot);
    let f = |alpha: f64| -> f64 {
        let sh = alpha.sinh();
        let half = alpha / 2.0;
        let coth = 1.0 / half.tanh();
        let tanh = half.tanh();
        let expo = -mass_rate * alpha - ot / 4.0 * (coth * dist2 + tanh * sum2);
        if expo < -700.0 {
            return 0.0;
        }
        expo.exp() / sh.powf(d / 2.0)
    };
    // α = u² flattens the essential singularity near 0; the large-α tail is
    // cut where sinh^{-D/2} e^{-μ²α/2Ω̃} is below double precision.
    let near = integrate_gl_composite(|u| f(u * u) * 2.0 * u, 0.0, 1.0, 32, 24);
    let alpha_max = (1400.0 / d)
        .min(700.0 * 2.0 * ot / model.mu2.max(1e-30))
        .min(200.0);
    let far = integrate_gl_composite(&f, 1.0, alpha_max.max(2.0), 32, 48);
    let pref = theta / (4.0 * omega) * (omega / (std::f64::consts::PI * theta)).powf(d / 2.0);
    Ok(pref * (near + far))
}

/// Radial parts R_{mn}(r) of the matrix basis, R_{mn} = R_{nm}, so
/// f_{mn}(x) = R_{mn}(r) e^{i(n−m)φ}. Packed as table[a][m] for
/// a = |n − m| and m = min(m, n), with 2m + a ≤ smax. The Laguerre
/// recurrence is rescaled by √(m!/(m+a)!) z^{a/2} e^{−z/2} so every stored
/// value is bounded (the raw L_m^a overflow around a ≈ 10³).
fn radial_table(r2: f64, theta: f64, smax: usize) -> Vec<Vec<f64>> {
    let z = 2.0 * r2 / theta;
    let lnz = if z > 0.0 { z.ln() } else { f64::NEG_INFINITY };
    let mut lnfact = vec![0.0f64; smax + 2];
    for k in 1..=smax + 1 {
        lnfact[k] = lnfact[k - 1] + (k as f64).ln();
    }
    let mut out = Vec::with_capacity(smax + 1);
    for a in 0..=smax {
        let mmax = (smax - a) / 2;
        let mut col = vec![0.0f64; mmax + 1];
        let af = a as f64;
        let h0 = if z == 0.0 {
            if a == 0 {
                1.0
            } else {
                0.0
            }
        } else {
            (0.5 * (af * lnz - lnfact[a]) - z / 2.0).exp()
        };
        col[0] = h0;
        if mmax >= 1 {
            col[1] = h0 * (1.0 + af - z) / (1.0 + af).sqrt();
        }
        for m in 1..mmax {
            let mf = m as f64;
            let c1 = ((mf + 1.0) / (mf + 1.0 + af)).sqrt() * (2.0 * mf + 1.0 + af - z);
            let c2 = (mf * (mf + 1.0) * (mf + af) / (mf + 1.0 + af)).sqrt();
            col[m + 1] = (c1 * col[m] - c2 * col[m - 1]) / (mf + 1.0);
        }
        for (m, v) in col.iter_mut().enumerate() {
            *v *= 2.0 * if m % 2 == 0 { 1.0 } else { -1.0 };
        }
        out.push(col);
    }
    out
}

/// Resummation of the Ω = 1 matrix propagator into a position kernel:
///
///   K(x,y) = (2πθ)^{−D/2} Σ_{mn} C_{mn} b_{mn}(x) b_{nm}(y)
///
/// (diagonal support C_{mn,kl} = C_{mn} δ_{ml} δ_{nk}; D = 2). The
/// normalization (2πθ)^{−D/2} is fixed analytically by the x = y = 0 limit
/// of the Mehler α-integral and double-checked by test.
///
/// With C_{mn} ~ 1/(m+n) the series is only conditionally convergent, so it
/// is summed over complete shells s = m + n up to `smax` and the partial
/// sums over the upper half of the range are averaged, which damps the
/// slowly decaying oscillatory tail. smax ≈ 1200 gives absolute accuracy
/// well below 1e−4 for well-separated points at moderate |x|.
pub fn matrix_kernel(
    x: &[f64],
    y: &[f64],
    model: &ScalarModel,
    smax: usize,
) -> Result<f64, MoyalError> {
    model.require_self_dual()?;
    if model.params.dim != 2 {
        return Err(MoyalError::Domain(
            "matrix_kernel implemented for dim = 2".into(),
        ));
    }
    assert_eq!(x.len(), 2);
    assert_eq!(y.len(), 2);
    let theta = model.params.theta;
    let rx2 = x[0] * x[0] + x[1] * x[1];
    let ry2 = y[0] * y[0] + y[1] * y[1];
    let dphi = x[1].atan2(x[0]) - y[1].atan2(y[0]);
    let tx = radial_table(rx2, theta, smax);
    let ty = radial_table(ry2, theta, smax);
    let c0 = model.mu2 * theta / 4.0 + 1.0;
    // f_{mn}(x) f_{nm}(y) = R^x_{mn} R^y_{mn} e^{i(n−m)(φ_x−φ_y)}; the
    // conjugate pair (m,n) ↔ (n,m) doubles the real part for a > 0.
    let mut shells = vec![0.0f64; smax + 1];
    for a in 0..=smax {
        let weight = (a as f64 * dphi).cos() * if a == 0 { 1.0 } else { 2.0 };
        for m in 0..tx[a].len() {
            shells[2 * m + a] += weight * tx[a][m] * ty[a][m];
        }
    }
    let avg_from = smax / 2;
    let mut partial = 0.0;
    let mut acc = 0.0;
    let mut count = 0usize;
    for (s, k) in shells.iter().enumerate() {
        partial += k / (s as f64 + c0);
        if s >= avg_from {
            acc += partial;
            count += 1;
        }
    }
    let pref = theta / 4.0 / model.params.trace_volume();
    Ok(pref * acc / count as f64)
}
