use crate::GaugeModel;
use moyal_core::{MoyalError, MoyalParams};
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::Serialize;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum VacuumBranch {
    /// Ω² = 0, κ = 0: u_m = α m.
    Omega0,
    /// 0 < Ω² < 1/3: u_m = α(r^m − r^{−m}) − (κ/4Ω²)(1 − r^{−m}), r > 1.
    LowOmega,
    /// Ω² = 1/3, κ ≤ 0: u_m = −3κ/4 for m ≥ 1.
    OneThird,
    /// 1/3 < Ω² < 1, κ ≤ 0: u_m = −(κ/4Ω²)(1 − r^{−m}), r < −1.
    MidOmega,
    /// Ω² = 1, κ ≤ 0: u_m = −(κ/4)(1 − (−1)^m).
    OmegaOne,
    /// D = 4 hypergeometric closed form at κ = 0.
    FourD,
}

/// A symmetric vacuum sequence: u_m = |a_{m−1}|² in 2D (resp. v_m in 4D),
/// with u_0 = 0, u_m ≥ 0 and free phases ξ_m (defaulting to 0) so that
/// a_m = e^{iξ_m} √(u_{m+1}).
#[derive(Debug, Clone, Serialize)]
pub struct VacuumSequence {
    pub model: GaugeModel,
    pub branch: VacuumBranch,
    /// u_0 .. u_{m_max} (2D) or v_0 .. v_{m_max} (4D).
    pub u: Vec<f64>,
    /// Free scale of the homogeneous part (2D branches).
    pub alpha: f64,
    /// Boundary value v_1 (4D branch), 0 otherwise.
    pub v1: f64,
    /// Phases ξ_m of a_m, same length as the a-sequence (len(u) − 1).
    pub xi: Vec<f64>,
}

impl VacuumSequence {
    pub fn with_phases(mut self, xi: Vec<f64>) -> Self {
        assert_eq!(xi.len() + 1, self.u.len(), "one phase per a_m");
        self.xi = xi;
        self
    }
}

/// Characteristic root r of the homogeneous recurrence,
/// (3Ω²−1)(1 + r²) + 2(1+Ω²) r = 0, for Ω² ≠ 1/3.
pub fn characteristic_root(omega2: f64) -> f64 {
    (1.0 + omega2 + (8.0 * omega2 * (1.0 - omega2)).sqrt()) / (1.0 - 3.0 * omega2)
}

fn near(a: f64, b: f64) -> bool {
    (a - b).abs() < 1e-12
}

/// Solve (3Ω²−1)(u_m + u_{m+2}) + 2(1+Ω²)u_{m+1} + 2κ = 0 with u_0 = 0 and
/// u_m ≥ 0, returning u_0..u_{m_max}. The recurrence is θ-independent; θ
/// enters only through the dimension of κ (κ → κ/θ rescales u → u/θ).
///
/// α scales the homogeneous part where the branch admits one. For
/// 0 < Ω² < 1/3 the growing mode r^m takes the solution out of the Moyal
/// algebra, so α = 0 is the physical choice; nonzero α is still accepted
/// since the sequence itself is well defined.
pub fn vacuum_sequence_2d(
    model: &GaugeModel,
    alpha: f64,
    m_max: usize,
) -> Result<VacuumSequence, MoyalError> {
    if alpha < 0.0 {
        return Err(MoyalError::Domain("alpha must be >= 0".into()));
    }
    let w = model.omega2;
    let k = model.kappa;
    let third = 1.0 / 3.0;
    let (branch, u): (VacuumBranch, Vec<f64>) = if near(w, 0.0) {
        if !near(k, 0.0) {
            return Err(MoyalError::Domain(
                "Omega = 0 branch requires kappa = 0".into(),
            ));
        }
        (
            VacuumBranch::Omega0,
            (0..=m_max).map(|m| alpha * m as f64).collect(),
        )
    } else if near(w, third) {
        if k > 0.0 {
            return Err(MoyalError::Domain(
                "Omega^2 = 1/3 branch requires kappa <= 0".into(),
            ));
        }
        let val = -0.75 * k;
        (
            VacuumBranch::OneThird,
            (0..=m_max)
                .map(|m| if m == 0 { 0.0 } else { val })
                .collect(),
        )
    } else if near(w, 1.0) {
        if k > 0.0 {
            return Err(MoyalError::Domain(
                "Omega^2 = 1 branch requires kappa <= 0".into(),
            ));
        }
        (
            VacuumBranch::OmegaOne,
            (0..=m_max)
                .map(|m| if m % 2 == 1 { -k / 2.0 } else { 0.0 })
                .collect(),
        )
    } else if w < third {
        let r = characteristic_root(w);
        let seq: Vec<f64> = (0..=m_max)
            .map(|m| {
                let rm = r.powi(m as i32);
                alpha * (rm - 1.0 / rm) - k / (4.0 * w) * (1.0 - 1.0 / rm)
            })
            .collect();
        if k > 0.0 && alpha == 0.0 {
            return Err(MoyalError::Domain(
                "0 < Omega^2 < 1/3 with alpha = 0 requires kappa <= 0 (u_m >= 0)".into(),
            ));
        }
        (VacuumBranch::LowOmega, seq)
    } else {
        // 1/3 < Ω² < 1
        if k > 0.0 {
            return Err(MoyalError::Domain(
                "1/3 < Omega^2 < 1 branch requires kappa <= 0".into(),
            ));
        }
        let r = characteristic_root(w); // r < −1
        (
            VacuumBranch::MidOmega,
            (0..=m_max)
                .map(|m| -k / (4.0 * w) * (1.0 - r.powi(-(m as i32))))
                .collect(),
        )
    };
    let seq = VacuumSequence {
        model: *model,
        branch,
        xi: vec![0.0; u.len().saturating_sub(1)],
        u,
        alpha,
        v1: 0.0,
    };
    validate_2d(&seq)?;
    Ok(seq)
}

fn validate_2d(seq: &VacuumSequence) -> Result<(), MoyalError> {
    let w = seq.model.omega2;
    let k = seq.model.kappa;
    if seq.u[0] != 0.0 {
        return Err(MoyalError::Domain("u_0 must vanish".into()));
    }
    let scale = seq.u.iter().fold(1.0f64, |a, &b| a.max(b.abs()));
    for (m, &um) in seq.u.iter().enumerate() {
        if um < -1e-12 * scale {
            return Err(MoyalError::Domain(format!("u_{m} = {um} is negative")));
        }
    }
    for m in 0..seq.u.len().saturating_sub(2) {
        let res =
            (3.0 * w - 1.0) * (seq.u[m] + seq.u[m + 2]) + 2.0 * (1.0 + w) * seq.u[m + 1] + 2.0 * k;
        if res.abs() > 1e-12 * scale.max(k.abs()).max(1.0) {
            return Err(MoyalError::Accuracy(format!(
                "recurrence residual {res:.3e} at m = {m}"
            )));
        }
    }
    Ok(())
}

/// Γ(k+1/2)/√π = (2k)!/(4^k k!) as an exact rational.
fn half_gamma(k: usize) -> BigRational {
    let mut acc = BigRational::one();
    // (2k)!/(4^k k!) = Π_{j=1..k} (2j−1)/2
    for j in 1..=k {
        acc *= BigRational::new(BigInt::from(2 * j as i64 - 1), BigInt::from(2));
    }
    acc
}

/// Exact ratio v_{m+1}/v_1 of the 4D closed form at κ = 0,
///
///   v_{m+1}/v_1 = (1+Ω²)²/(4√π Ω²(1−Ω²)) · Γ(3/2)Γ(m+3/2)/(Γ(m/2+3/2)Γ(m/2+2))
///                 · ((1+Ω²)/(1−3Ω²))^m · ₂F₁(−m/2−½, −m/2−1; −m−½; z),
///
/// z = (1−3Ω²)²/(1+Ω²)². All Γ arguments are integers or half-integers, so
/// with g(k) = Γ(k+½)/√π the √π factors cancel against the prefactor and
/// the whole expression is rational in Ω². The ₂F₁ terminates (one of the
/// upper parameters is a nonpositive integer or half-integer that kills the
/// Pochhammer product), giving a polynomial of degree ⌊(m+2)/2⌋ in z; the
/// lower parameter −m−½ is never a nonpositive integer, so no poles occur.
pub fn v4_ratio_exact(omega2: &BigRational, m: usize) -> BigRational {
    let one = BigRational::one();
    let w = omega2.clone();
    let opw = &one + &w; // 1+Ω²
    let omw = &one - &w; // 1−Ω²
    let thr = &one - BigRational::from_integer(BigInt::from(3)) * &w; // 1−3Ω²
    let z = (&thr * &thr) / (&opw * &opw);

    // rational part of Γ(3/2)Γ(m+3/2)/(Γ(m/2+3/2)Γ(m/2+2)), with the √π
    // already cancelled against the 1/(4√π) prefactor (its 1/4 kept here)
    let num = half_gamma(1) * half_gamma(m + 1);
    let den = if m % 2 == 0 {
        let j = m / 2;
        half_gamma(j + 1) * BigRational::from_integer(factorial(j + 1))
    } else {
        let j = (m - 1) / 2;
        BigRational::from_integer(factorial(j + 1)) * half_gamma(j + 2)
    };
    let gamma_part = num / (den * BigRational::from_integer(BigInt::from(4)));

    let mut ratio_pow = BigRational::one();
    for _ in 0..m {
        ratio_pow *= &opw / &thr;
    }

    // terminating ₂F₁ with rational parameters
    let a = BigRational::new(BigInt::from(-(m as i64) - 1), BigInt::from(2));
    let b = BigRational::new(BigInt::from(-(m as i64) - 2), BigInt::from(2));
    let c = BigRational::new(BigInt::from(-2 * (m as i64) - 1), BigInt::from(2));
    let mut f = BigRational::zero();
    let mut term = BigRational::one();
    let mut kk = 0usize;
    loop {
        f += &term;
        let ak = &a + BigRational::from_integer(BigInt::from(kk as i64));
        let bk = &b + BigRational::from_integer(BigInt::from(kk as i64));
        if ak.is_zero() || bk.is_zero() || kk > m + 2 {
            break;
        }
        let ck = &c + BigRational::from_integer(BigInt::from(kk as i64));
        term = term * ak * bk * &z / (ck * BigRational::from_integer(BigInt::from(kk as i64 + 1)));
        kk += 1;
    }

    (&opw * &opw) / (&w * &omw) * gamma_part * ratio_pow * f
}

fn factorial(n: usize) -> BigInt {
    let mut acc = BigInt::one();
    for i in 2..=n {
        acc *= BigInt::from(i);
    }
    acc
}

/// 4D vacuum sequence v_0..v_{m_max} from the hypergeometric closed form at
/// κ = 0, cross-checked termwise against the recurrence
///
///   (3Ω²−1)(m v_m + (m+3) v_{m+2}) + (1+Ω²)(2m+3) v_{m+1} + 2κ = 0,
///
/// to relative 10⁻¹⁰. Negative closed-form values (possible outside the
/// small-(1−3Ω²)²/(1+Ω²)² validity region) are reported as an error rather
/// than clamped.
pub fn vacuum_sequence_4d(
    model: &GaugeModel,
    v1: f64,
    m_max: usize,
) -> Result<VacuumSequence, MoyalError> {
    if model.kappa != 0.0 {
        return Err(MoyalError::Domain(
            "the 4D closed form is established for kappa = 0".into(),
        ));
    }
    if v1 < 0.0 {
        return Err(MoyalError::Domain("v1 must be >= 0".into()));
    }
    let w = model.omega2;
    if near(w, 0.0) || near(w, 1.0) {
        return Err(MoyalError::Domain(
            "closed form needs 0 < Omega^2 < 1".into(),
        ));
    }
    if near(w, 1.0 / 3.0) {
        return Err(MoyalError::Domain(
            "at Omega^2 = 1/3 with kappa = 0 the recurrence forces v = 0".into(),
        ));
    }
    let w_exact = BigRational::from_float(w)
        .ok_or_else(|| MoyalError::Domain("omega2 must be finite".into()))?;
    let mut v = vec![0.0; m_max + 1];
    for m in 1..=m_max {
        let q = v4_ratio_exact(&w_exact, m - 1);
        if q.is_negative() && v1 > 0.0 {
            return Err(MoyalError::Domain(format!(
                "closed form is negative at m = {m} (outside the validity region)"
            )));
        }
        v[m] = v1
            * q.to_f64().ok_or_else(|| {
                MoyalError::Accuracy(format!("closed-form value at m = {m} overflows f64"))
            })?;
    }
    // recurrence cross-check
    for m in 0..m_max.saturating_sub(1) {
        let t1 = (3.0 * w - 1.0) * (m as f64 * v[m] + (m as f64 + 3.0) * v[m + 2]);
        let t2 = (1.0 + w) * (2.0 * m as f64 + 3.0) * v[m + 1];
        let scale = t1.abs().max(t2.abs()).max(1e-300);
        if (t1 + t2).abs() > 1e-10 * scale {
            return Err(MoyalError::Accuracy(format!(
                "4D recurrence residual {:.3e} at m = {m}",
                (t1 + t2).abs() / scale
            )));
        }
    }
    Ok(VacuumSequence {
        model: *model,
        branch: VacuumBranch::FourD,
        xi: vec![0.0; m_max],
        u: v,
        alpha: 0.0,
        v1,
    })
}

/// κ(Ω) = −Ω√2/θ recovers the commutative vacuum u_m = m/θ up to O(Ω):
/// for each Ω the table reports max_{m ≤ m_max} |u_m − m/θ| / Ω, which must
/// stay bounded as Ω → 0.
pub fn commutative_limit_check(
    omegas: &[f64],
    theta: f64,
    m_max: usize,
) -> Result<Vec<(f64, f64)>, MoyalError> {
    let params = MoyalParams::new(theta, 2)?;
    let mut out = Vec::with_capacity(omegas.len());
    for &omega in omegas {
        if !(omega > 0.0 && omega <= 0.1) {
            return Err(MoyalError::Domain(format!(
                "commutative-limit sweep expects omega in (0, 0.1], got {omega}"
            )));
        }
        let model = GaugeModel::new(params, omega * omega, -omega * 2.0f64.sqrt() / theta)?;
        let seq = vacuum_sequence_2d(&model, 0.0, m_max)?;
        let defect = seq
            .u
            .iter()
            .enumerate()
            .map(|(m, &um)| (um - m as f64 / theta).abs())
            .fold(0.0, f64::max)
            / omega;
        out.push((omega, defect));
    }
    Ok(out)
}
