use gw_scalar::{apply_kinetic, grid_action, gw_action, kinetic_dense, scalar_vacuum, ScalarModel};
use moyal_core::{coeffs_from_function, Complex, Field, GridField, MoyalParams, QuadSpec};
use ndarray::Array2;

fn params2(theta: f64) -> MoyalParams {
    MoyalParams::new(theta, 2).unwrap()
}

/// Dense kinetic matrix built directly from the banded formula
///
///   Δ_{mn,kl} = ((2(1+Ω²)/θ)(m+n+1) + s μ²) δ_{ml} δ_{nk}
///     − (2(1−Ω²)/θ)[√((m+1)(n+1)) δ_{m+1,l} δ_{n+1,k} + √(mn) δ_{m−1,l} δ_{n−1,k}]
///
/// (D = 2), independent of the apply-based code path.
fn dense_from_formula(model: &ScalarModel, trunc: usize) -> Array2<f64> {
    let theta = model.params.theta;
    let s = if model.broken_phase { -1.0 } else { 1.0 };
    let off = 2.0 * (1.0 - model.omega * model.omega) / theta;
    let dim = trunc * trunc;
    let mut mat = Array2::zeros((dim, dim));
    for m in 0..trunc {
        for n in 0..trunc {
            let row = m * trunc + n;
            let diag = (2.0 * (1.0 + model.omega * model.omega) / theta) * ((m + n) as f64 + 1.0)
                + s * model.mu2;
            mat[(row, n * trunc + m)] += diag;
            if m + 1 < trunc && n + 1 < trunc {
                let amp = (((m + 1) * (n + 1)) as f64).sqrt();
                // l = m+1, k = n+1; column index is (k, l)
                mat[(row, (n + 1) * trunc + (m + 1))] -= off * amp;
            }
            if m >= 1 && n >= 1 {
                let amp = ((m * n) as f64).sqrt();
                mat[(row, (n - 1) * trunc + (m - 1))] -= off * amp;
            }
        }
    }
    mat
}

#[test]
fn dense_matches_formula_exactly() {
    let model = ScalarModel::new(params2(0.7), 0.45, 1.3, 0.2).unwrap();
    let a = kinetic_dense(&model, 4);
    let b = dense_from_formula(&model, 4);
    for (x, y) in a.iter().zip(b.iter()) {
        assert_eq!(
            *x, *y,
            "matricization must reproduce the banded formula exactly"
        );
    }
}

#[test]
fn dense_is_symmetric_as_quadratic_form() {
    // Δ_{mn,kl} = Δ_{kl,mn}: the matrix over composite indices is symmetric.
    let model = ScalarModel::new(params2(1.0), 0.6, 2.0, 0.1).unwrap();
    let a = kinetic_dense(&model, 5);
    for i in 0..a.nrows() {
        for j in 0..a.ncols() {
            assert!((a[(i, j)] - a[(j, i)]).abs() < 1e-14);
        }
    }
}

#[test]
fn self_dual_point_is_diagonal_on_basis_units() {
    // At Ω = 1 the off-bands vanish: Δ b_{00} = (4/θ)(1 + μ²θ/4) b_{00}.
    let model = ScalarModel::new(params2(1.0), 1.0, 0.0, 0.1).unwrap();
    let mut f = Field::zero(model.params, 6);
    f.coeffs[(0, 0)] = Complex::new(1.0, 0.0);
    let g = apply_kinetic(&f, &model).unwrap();
    assert!((g.coeffs[(0, 0)].re - 4.0).abs() < 1e-14);
    let mut off_max = 0.0f64;
    for ((i, j), c) in g.coeffs.indexed_iter() {
        if (i, j) != (0, 0) {
            off_max = off_max.max(c.norm());
        }
    }
    assert_eq!(off_max, 0.0);
}

#[test]
fn action_of_zero_field_is_zero() {
    let model = ScalarModel::new(params2(1.0), 0.8, 1.0, 0.5).unwrap();
    let f = Field::zero(model.params, 6);
    assert_eq!(gw_action(&f, &model).unwrap(), 0.0);
}

#[test]
fn action_rejects_non_hermitian_input() {
    let model = ScalarModel::new(params2(1.0), 0.8, 1.0, 0.5).unwrap();
    let mut f = Field::zero(model.params, 4);
    f.coeffs[(0, 1)] = Complex::new(1.0, 0.0);
    assert!(gw_action(&f, &model).is_err());
}

#[test]
fn vacuum_action_benchmark() {
    // θ = 1, μ² = 24, λ = 1, Ω = 1, broken phase: S[v] = −70π.
    let model = ScalarModel::new(params2(1.0), 1.0, 24.0, 1.0)
        .unwrap()
        .broken();
    let v = scalar_vacuum(&model).unwrap();
    let f = v.as_field(8);
    let s = gw_action(&f, &model).unwrap();
    let expect = -70.0 * std::f64::consts::PI;
    assert!((s - expect).abs() < 1e-8, "got {s}, want {expect}");
    assert!((v.action_closed_form() - expect).abs() < 1e-10);
}

#[test]
fn matrix_action_matches_grid_action_on_gaussian() {
    // φ = c · f_{00} (a Gaussian): matrix action is exact, grid action is a
    // position-space quadrature of the same functional.
    let params = params2(1.0);
    let (omega, mu2, lambda, c) = (0.7, 0.3, 0.4, 0.5);
    let model = ScalarModel::new(params, omega, mu2, lambda).unwrap();
    let mut f = Field::zero(params, 8);
    f.coeffs[(0, 0)] = Complex::new(c, 0.0);
    let s_matrix = gw_action(&f, &model).unwrap();

    let spec = QuadSpec::with_resolution(params, 256);
    let g = GridField::from_fn(params, spec, |x1, x2| {
        Complex::new(2.0 * c * (-(x1 * x1 + x2 * x2) / params.theta).exp(), 0.0)
    })
    .unwrap();
    // sanity: the grid field expands back to c · b_{00}
    let (fb, tail) = coeffs_from_function(&g, 8).unwrap();
    assert!((fb.coeffs[(0, 0)].re - c).abs() < 1e-9);
    assert!(tail < 1e-9);

    let s_grid = grid_action(&g, omega, mu2, lambda, 8).unwrap();
    assert!(
        (s_matrix - s_grid).abs() < 2e-3 * s_matrix.abs(),
        "matrix {s_matrix} vs grid {s_grid}"
    );
}
