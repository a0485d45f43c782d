use gw_scalar::{ls_duality_check, ScalarModel};
use moyal_core::{Complex, GridField, MoyalParams, QuadSpec};

fn gaussian(params: MoyalParams, amp: f64, res: usize) -> GridField {
    let spec = QuadSpec::with_resolution(params, res);
    GridField::from_fn(params, spec, |x1, x2| {
        Complex::new(amp * (-(x1 * x1 + x2 * x2) / params.theta).exp(), 0.0)
    })
    .unwrap()
}

#[test]
fn self_dual_point_is_exactly_covariant() {
    // At Ω = 1 the Gaussian is a fixed point of the symplectic Fourier
    // transform and the two sides coincide up to quadrature noise.
    let params = MoyalParams::new(1.0, 2).unwrap();
    let model = ScalarModel::new(params, 1.0, 2.0, 0.5).unwrap();
    let g = gaussian(params, 0.8, 128);
    let rep = ls_duality_check(&g, &model, 16).unwrap();
    assert!(rep.defect < 1e-6, "defect {}", rep.defect);
}

#[test]
fn duality_covariance_away_from_self_duality() {
    let params = MoyalParams::new(1.0, 2).unwrap();
    let model = ScalarModel::new(params, 0.5, 2.0, 0.5).unwrap();
    let g = gaussian(params, 0.8, 256);
    let rep = ls_duality_check(&g, &model, 16).unwrap();
    assert!(rep.defect < 1e-3, "defect {}", rep.defect);
    // the two sides are genuinely different functionals here
    assert!(rep.s_direct > 0.0 && rep.s_dual > 0.0);
}

#[test]
fn duality_check_guards_its_domain() {
    let params = MoyalParams::new(1.0, 2).unwrap();
    let g = gaussian(params, 0.5, 64);
    let broken = ScalarModel::new(params, 0.5, 2.0, 0.5).unwrap().broken();
    assert!(ls_duality_check(&g, &broken, 8).is_err());
    let degenerate = ScalarModel::new(params, 0.0, 2.0, 0.5).unwrap();
    assert!(ls_duality_check(&g, &degenerate, 8).is_err());
    let spec = QuadSpec::with_resolution(params, 64);
    let complex_field = GridField::from_fn(params, spec, |x1, x2| {
        Complex::new(0.0, (-(x1 * x1 + x2 * x2)).exp())
    })
    .unwrap();
    let model = ScalarModel::new(params, 0.5, 2.0, 0.5).unwrap();
    assert!(ls_duality_check(&complex_field, &model, 8).is_err());
}
