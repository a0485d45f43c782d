use gauge_vacuum::{
    gauge_action_2d, gauge_action_2d_axform, gauge_eom_residual_2d, hessian_probe,
    vacuum_sequence_2d, CovariantField2D, GaugeModel,
};
use moyal_core::{Complex, Field, MoyalParams};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn model(omega2: f64, kappa: f64) -> GaugeModel {
    GaugeModel::new(MoyalParams::new(1.0, 2).unwrap(), omega2, kappa).unwrap()
}

fn random_field(params: MoyalParams, trunc: usize, rng: &mut ChaCha8Rng) -> Field {
    let mut f = Field::zero(params, trunc);
    for v in f.coeffs.iter_mut() {
        *v = Complex::new(rng.gen_range(-1.0..1.0), rng.gen_range(-1.0..1.0));
    }
    f
}

#[test]
fn zero_field_zero_action_and_residual() {
    let m = model(0.4, 0.7);
    let z = CovariantField2D::new(Field::zero(m.params, 8)).unwrap();
    assert_eq!(gauge_action_2d(&z, &m).unwrap(), 0.0);
    assert_eq!(gauge_eom_residual_2d(&z, &m).unwrap().norm_inf(), 0.0);
}

#[test]
fn z_form_equals_covariant_coordinate_form() {
    // The two action forms are related by an algebra identity (trace
    // cyclicity plus the linear change A ↔ Z), so they agree on arbitrary
    // truncated fields to rounding.
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    for (w, k) in [(0.0, 0.3), (0.3, -0.5), (1.0, 1.2)] {
        let m = model(w, k);
        for _ in 0..5 {
            let z = CovariantField2D::new(random_field(m.params, 10, &mut rng)).unwrap();
            let a = gauge_action_2d(&z, &m).unwrap();
            let b = gauge_action_2d_axform(&z, &m).unwrap();
            assert!((a - b).abs() < 1e-10 * a.abs().max(1.0), "{a} vs {b}");
        }
    }
}

#[test]
fn positive_kappa_action_is_nonnegative() {
    // For κ ≥ 0 the covariant-coordinate form is a sum of squares.
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    let m = model(0.6, 0.9);
    for _ in 0..10 {
        let z = CovariantField2D::new(random_field(m.params, 8, &mut rng)).unwrap();
        assert!(gauge_action_2d(&z, &m).unwrap() >= -1e-10);
    }
}

#[test]
fn vacuum_field_annihilates_equation_of_motion() {
    for (w, k) in [
        (0.25, -1.0),
        (1.0 / 3.0, -4.0 / 3.0),
        (0.7, -1.0),
        (1.0, -2.0),
    ] {
        let m = model(w, k);
        let seq = vacuum_sequence_2d(&m, 0.0, 40).unwrap();
        let z = CovariantField2D::from_sequence(&seq, 16).unwrap();
        let r = gauge_eom_residual_2d(&z, &m).unwrap();
        // the truncation cuts the bidiagonal at the edge; score the interior
        assert!(
            r.norm_inf_interior(2) < 1e-12,
            "w={w}: interior residual {}",
            r.norm_inf_interior(2)
        );
    }
}

#[test]
fn bidiagonal_residual_has_the_scalar_form() {
    // For arbitrary Z_{mn} = −i a_m δ_{m+1,n}, the residual entry (m, m+1)
    // is −i a_m ((3Ω²−1)(|a_{m−1}|²+|a_{m+1}|²) + 2(1+Ω²)|a_m|² + 2κ).
    let m = model(0.45, -0.6);
    let mut rng = ChaCha8Rng::seed_from_u64(3);
    let n = 10usize;
    let a: Vec<Complex> = (0..n - 1)
        .map(|_| Complex::new(rng.gen_range(-1.0..1.0), rng.gen_range(-1.0..1.0)))
        .collect();
    let mut zf = Field::zero(m.params, n);
    for (i, &ai) in a.iter().enumerate() {
        zf.coeffs[(i, i + 1)] = -Complex::i() * ai;
    }
    let r = gauge_eom_residual_2d(&CovariantField2D::new(zf).unwrap(), &m).unwrap();
    for i in 0..n - 2 {
        let prev = if i == 0 { 0.0 } else { a[i - 1].norm_sqr() };
        let next = a[i + 1].norm_sqr();
        let factor = (3.0 * m.omega2 - 1.0) * (prev + next)
            + 2.0 * (1.0 + m.omega2) * a[i].norm_sqr()
            + 2.0 * m.kappa;
        let want = -Complex::i() * a[i] * factor;
        let got = r.coeffs[(i, i + 1)];
        assert!((got - want).norm() < 1e-12, "entry {i}: {got} vs {want}");
    }
}

#[test]
fn one_third_vacuum_action_matches_hand_trace() {
    // u_m = 1: for bidiagonal a_m = 1 on an N-truncation,
    // tr(ZZZ†Z†) = N−2, tr(ZZ†ZZ†) = N−1, tr(ZZ†) = N−1, so
    // S = 2πθ [(3Ω²−1)(N−2) + (1+Ω²)(N−1) + 2κ(N−1)].
    let m = model(1.0 / 3.0, -4.0 / 3.0);
    let seq = vacuum_sequence_2d(&m, 0.0, 40).unwrap();
    let n = 12usize;
    let z = CovariantField2D::from_sequence(&seq, n).unwrap();
    let s = gauge_action_2d(&z, &m).unwrap();
    let nf = n as f64;
    let want = 2.0
        * std::f64::consts::PI
        * ((3.0 * m.omega2 - 1.0) * (nf - 2.0)
            + (1.0 + m.omega2) * (nf - 1.0)
            + 2.0 * m.kappa * (nf - 1.0));
    assert!((s - want).abs() < 1e-10 * want.abs(), "{s} vs {want}");
    // cross-path: covariant-coordinate form
    let s2 = gauge_action_2d_axform(&z, &m).unwrap();
    assert!((s - s2).abs() < 1e-10 * s.abs().max(1.0));
}

#[test]
fn hessian_probe_at_one_third_vacuum_is_nonnegative() {
    // Ω² = 1/3, κ < 0: the nontrivial vacua are (degenerate) minima, so the
    // sampled directional curvatures should be ≥ 0 up to probe error. The
    // probe is a heuristic: directions are kept away from the truncation
    // edge so the finite matrix faithfully represents the operator.
    let m = model(1.0 / 3.0, -4.0 / 3.0);
    let seq = vacuum_sequence_2d(&m, 0.0, 80).unwrap();
    let trunc = 24usize;
    let z = CovariantField2D::from_sequence(&seq, trunc).unwrap();
    let mut rng = ChaCha8Rng::seed_from_u64(19);
    for _ in 0..8 {
        let mut dir = Field::zero(m.params, trunc);
        for i in 0..8 {
            for j in 0..8 {
                dir.coeffs[(i, j)] =
                    Complex::new(rng.gen_range(-1.0..1.0), rng.gen_range(-1.0..1.0));
            }
        }
        let c = hessian_probe(&z, &m, &dir, 1e-3).unwrap();
        assert!(c > -1e-4, "directional curvature {c}");
    }
}
