use moyal_core::{symplectic_fourier, Complex, GridField, MoyalParams, QuadSpec};

fn gaussian(p: MoyalParams, spec: QuadSpec) -> GridField {
    GridField::from_fn(p, spec, |x1, x2| {
        Complex::new((-(x1 * x1 + x2 * x2) / p.theta).exp(), 0.0)
    })
    .unwrap()
}

#[test]
fn gaussian_is_a_fixed_point() {
    // F(e^{-x²/θ})(k) = e^{-k²/θ}
    let p = MoyalParams::new(1.0, 2).unwrap();
    let spec = QuadSpec::default_for(p);
    let g = gaussian(p, spec);
    let ghat = symplectic_fourier(&g, 1.0);
    let mut worst = 0.0f64;
    for i in 0..spec.resolution {
        for j in 0..spec.resolution {
            worst = worst.max((ghat.samples[(i, j)] - g.samples[(i, j)]).norm());
        }
    }
    assert!(worst < 1e-9, "worst deviation {worst}");
}

#[test]
fn parseval_identity() {
    let p = MoyalParams::new(1.0, 2).unwrap();
    let spec = QuadSpec::default_for(p);
    let f = GridField::from_fn(p, spec, |x1, x2| {
        Complex::new(x1 * (-(x1 * x1 + x2 * x2) / 1.5).exp(), 0.0)
    })
    .unwrap();
    let g = GridField::from_fn(p, spec, |x1, x2| {
        Complex::new(
            (-(x1 * x1 + x2 * x2)).exp(),
            x2 * (-(x1 * x1 + x2 * x2)).exp(),
        )
    })
    .unwrap();
    let lhs = f.inner(&g).unwrap();
    let rhs = symplectic_fourier(&f, 1.0)
        .inner(&symplectic_fourier(&g, 1.0))
        .unwrap();
    assert!((lhs - rhs).norm() < 1e-8, "{lhs} vs {rhs}");
}

#[test]
fn transform_square_conventions() {
    // Same-sign double transform is the identity; opposite signs give parity.
    let p = MoyalParams::new(1.0, 2).unwrap();
    let spec = QuadSpec::default_for(p);
    let g = GridField::from_fn(p, spec, |x1, x2| {
        Complex::new(x1 * (-(x1 * x1 + x2 * x2)).exp(), 0.0)
    })
    .unwrap();
    let same = symplectic_fourier(&symplectic_fourier(&g, 1.0), 1.0);
    let opp = symplectic_fourier(&symplectic_fourier(&g, 1.0), -1.0);
    let n = spec.resolution;
    let mut worst_same = 0.0f64;
    let mut worst_opp = 0.0f64;
    for i in 0..n {
        for j in 0..n {
            worst_same = worst_same.max((same.samples[(i, j)] - g.samples[(i, j)]).norm());
            // midpoint grid: node(n-1-i) = -node(i)
            worst_opp =
                worst_opp.max((opp.samples[(i, j)] - g.samples[(n - 1 - i, n - 1 - j)]).norm());
        }
    }
    assert!(worst_same < 1e-8, "identity defect {worst_same}");
    assert!(worst_opp < 1e-8, "parity defect {worst_opp}");
}
