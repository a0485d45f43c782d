use gauge_vacuum::{
    bessel_j, vacuum_profile_xspace, vacuum_sequence_2d, vacuum_sequence_4d, GaugeModel,
};
use moyal_core::MoyalParams;

fn model2(omega2: f64, kappa: f64, theta: f64) -> GaugeModel {
    GaugeModel::new(MoyalParams::new(theta, 2).unwrap(), omega2, kappa).unwrap()
}

#[test]
fn bessel_matches_reference_values() {
    // J₀(1), J₁(1), J₂(5), J₁(10) to 12 digits (standard table values)
    assert!((bessel_j(0, 1.0) - 0.7651976865579666).abs() < 1e-12);
    assert!((bessel_j(1, 1.0) - 0.4400505857449335).abs() < 1e-12);
    assert!((bessel_j(2, 5.0) - 0.04656511627775222).abs() < 1e-12);
    assert!((bessel_j(1, 10.0) - 0.04347274616886144).abs() < 1e-10);
    // series/integral crossover consistency
    for w in [7.5f64, 8.5] {
        let a = bessel_j(1, w);
        // Bessel recurrence J₀ − (2/w)J₁ + J₂ = 0 as an internal check
        let res = bessel_j(0, w) - 2.0 / w * a + bessel_j(2, w);
        assert!(res.abs() < 1e-10, "w={w}: {res}");
    }
}

#[test]
fn trivial_sequence_gives_zero_profile() {
    let m = model2(0.5, 0.0, 1.0);
    let seq = vacuum_sequence_2d(&m, 0.0, 120).unwrap();
    let a = vacuum_profile_xspace(&seq, &[0.3, -0.2]).unwrap();
    assert_eq!(a, vec![0.0, 0.0]);
}

#[test]
fn zero_phases_give_a_profile_along_x_tilde() {
    let m = model2(0.25, -1.0, 1.0);
    let seq = vacuum_sequence_2d(&m, 0.0, 120).unwrap();
    let x = [0.7, 0.4];
    let a = vacuum_profile_xspace(&seq, &x).unwrap();
    // x̃ ⊥ x, so the profile must be orthogonal to x and nonzero
    let dot = a[0] * x[0] + a[1] * x[1];
    let norm = (a[0] * a[0] + a[1] * a[1]).sqrt();
    assert!(norm > 1e-6, "profile vanished unexpectedly");
    assert!(dot.abs() < 1e-10 * norm, "profile not transverse: {dot}");
    // and along x̃ = (−2x₂/θ, 2x₁/θ) with a positive or negative scalar
    let xt = [-2.0 * x[1], 2.0 * x[0]];
    let cross = a[0] * xt[1] - a[1] * xt[0];
    assert!(cross.abs() < 1e-10 * norm);
}

#[test]
fn small_z_limit_matches_series_oracle() {
    // Ω² = 1/3 branch at z = 1e−8: the J₁(2√(tz))/√z → √t limit must be
    // finite and match an independently coded truncated-Taylor integrand
    // (three-term J₁ series, Simpson quadrature).
    let theta = 1.0;
    let m = model2(1.0 / 3.0, -1.0, theta);
    let seq = vacuum_sequence_2d(&m, 0.0, 160).unwrap();
    let z = 1e-8f64;
    let x1 = (theta * z / 2.0).sqrt();
    let x = [x1, 0.0];
    let a = vacuum_profile_xspace(&seq, &x).unwrap();

    // oracle: A_2(x) = 2√θ e^{z/2} x̃_2 ∫ e^{−t} t (1 − tz/2 + (tz)²/12) S(t) dt
    let s = |t: f64| -> f64 {
        let mut acc = 0.0;
        let mut fact = 1.0;
        for mm in 0..160 {
            let c = (seq.u[mm + 1] / (mm as f64 + 1.0)).sqrt();
            acc += c * fact * if mm % 2 == 0 { 1.0 } else { -1.0 };
            fact *= t / (mm as f64 + 1.0);
        }
        acc
    };
    let f = |t: f64| (-t).exp() * t * (1.0 - t * z / 2.0 + t * t * z * z / 12.0) * s(t);
    let steps = 8000usize;
    let h = 40.0 / steps as f64;
    let mut integral = f(0.0) + f(40.0);
    for i in 1..steps {
        integral += f(i as f64 * h) * if i % 2 == 1 { 4.0 } else { 2.0 };
    }
    integral *= h / 3.0;
    let xt2 = 2.0 / theta * x[0];
    let want = 2.0 * theta.sqrt() * (z / 2.0).exp() * xt2 * integral;
    assert!(
        (a[1] - want).abs() < 1e-6 * want.abs().max(1e-12),
        "profile {} vs oracle {want}",
        a[1]
    );
    assert!(a[0].abs() < 1e-12 * want.abs().max(1e-12));
}

#[test]
fn four_d_profile_is_finite_and_transverse() {
    let m = GaugeModel::new(MoyalParams::new(1.0, 4).unwrap(), 0.05, 0.0).unwrap();
    let seq = vacuum_sequence_4d(&m, 1.0, 200).unwrap();
    let x = [0.4, 0.1, -0.2, 0.3];
    let a = vacuum_profile_xspace(&seq, &x).unwrap();
    assert!(a.iter().all(|v| v.is_finite()));
    let dot: f64 = a.iter().zip(&x).map(|(u, v)| u * v).sum();
    let norm: f64 = a.iter().map(|v| v * v).sum::<f64>().sqrt();
    assert!(norm > 1e-8);
    assert!(dot.abs() < 1e-6 * norm, "4D profile not transverse: {dot}");
}

#[test]
fn short_sequences_are_rejected() {
    let m = model2(0.25, -1.0, 1.0);
    let seq = vacuum_sequence_2d(&m, 0.0, 12).unwrap();
    assert!(vacuum_profile_xspace(&seq, &[0.5, 0.5]).is_err());
}
