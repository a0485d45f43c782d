use moyal_core::{coordinate_field, eval_field, Complex, Coordinate, Field, MoyalParams};

fn p2(theta: f64) -> MoyalParams {
    MoyalParams::new(theta, 2).unwrap()
}

#[test]
fn x_squared_is_diagonal() {
    let theta = 1.0;
    let p = p2(theta);
    let f = coordinate_field(Coordinate::XSquared, 5, p);
    for m in 0..5usize {
        let d = f.get(&[m], &[m]);
        assert!((d.re - theta * (2.0 * m as f64 + 1.0)).abs() < 1e-15);
    }
    assert_eq!(f.get(&[0], &[1]).norm(), 0.0);

    let p4 = MoyalParams::new(0.5, 4).unwrap();
    let f = coordinate_field(Coordinate::XSquared, 3, p4);
    let d = f.get(&[1, 2], &[1, 2]);
    assert!((d.re - 0.5 * (2.0 * 3.0 + 2.0)).abs() < 1e-15);
}

#[test]
fn x1_tridiagonal_entries() {
    let theta = 1.0;
    let p = p2(theta);
    let f = coordinate_field(Coordinate::X(1), 4, p);
    assert!((f.get(&[0], &[1]).re - (theta / 2.0).sqrt()).abs() < 1e-15);
    assert!((f.get(&[1], &[0]).re - (theta / 2.0).sqrt()).abs() < 1e-15);
    let g = coordinate_field(Coordinate::X(2), 4, p);
    assert!((g.get(&[0], &[1]) - Complex::new(0.0, -(theta / 2.0f64).sqrt())).norm() < 1e-15);
    assert!((g.get(&[1], &[0]) - Complex::new(0.0, (theta / 2.0f64).sqrt())).norm() < 1e-15);
    assert!(f.is_hermitian(0.0) && g.is_hermitian(0.0));
}

#[test]
fn coordinate_commutator_reproduces_theta() {
    // [x₁, x₂]⋆ = iΘ₁₂ = iθ on the interior block
    let theta = 0.8;
    let p = p2(theta);
    let n = 10;
    let x1 = coordinate_field(Coordinate::X(1), n, p);
    let x2 = coordinate_field(Coordinate::X(2), n, p);
    let comm = x1.commutator(&x2).unwrap();
    let expect = Field::one(p, n).scale(Complex::new(0.0, theta));
    let defect = comm.sub(&expect).unwrap();
    assert!(
        defect.norm_inf_interior(2) < 1e-13,
        "defect {}",
        defect.norm_inf_interior(2)
    );
}

#[test]
fn multiplication_by_x_is_anticommutator() {
    // {x_μ, f}⋆ = 2 x_μ·f pointwise; checked via eval_field on b₁₁
    let theta = 1.0;
    let p = p2(theta);
    let n = 12;
    let b11 = Field::basis(p, n, &[1], &[1]);
    for mu in 1..=2usize {
        let xmu = coordinate_field(Coordinate::X(mu), n, p);
        let anti = xmu.anticommutator(&b11).unwrap();
        for &(x1, x2) in &[(0.4, 0.1), (-0.7, 0.9), (1.2, -0.5)] {
            let coord = if mu == 1 { x1 } else { x2 };
            let want = basis_eval_pt(&b11, x1, x2) * 2.0 * coord;
            let got = eval_field(&anti, &[x1, x2]);
            assert!((got - want).norm() < 1e-10, "mu={mu} at ({x1},{x2})");
        }
    }
}

fn basis_eval_pt(f: &Field, x1: f64, x2: f64) -> Complex {
    eval_field(f, &[x1, x2])
}

#[test]
fn xtilde_commutator_is_derivative() {
    // [x̃_μ, f]⋆ = 2i ∂_μ f, checked against an O(h²) central difference
    let theta = 1.0;
    let p = p2(theta);
    let n = 16;
    let h = 1e-4;
    for field in [
        Field::basis(p, n, &[0], &[0]),
        Field::basis(p, n, &[1], &[2]),
    ] {
        for mu in 1..=2usize {
            let xt = coordinate_field(Coordinate::XTilde(mu), n, p);
            let comm = xt.commutator(&field).unwrap();
            for &(x1, x2) in &[(0.3, -0.2), (0.9, 0.6)] {
                let (dx1, dx2) = if mu == 1 { (h, 0.0) } else { (0.0, h) };
                let plus = eval_field(&field, &[x1 + dx1, x2 + dx2]);
                let minus = eval_field(&field, &[x1 - dx1, x2 - dx2]);
                let deriv = (plus - minus) / (2.0 * h);
                let want = Complex::new(0.0, 2.0) * deriv;
                let got = eval_field(&comm, &[x1, x2]);
                assert!(
                    (got - want).norm() < 1e-6,
                    "mu={mu} at ({x1},{x2}): {got} vs {want}"
                );
            }
        }
    }
}

#[test]
fn xtilde_anticommutator_is_pointwise_product() {
    // {x̃_μ, f}⋆ = 2 x̃_μ·f with x̃₁ = -(2/θ)x₂, x̃₂ = (2/θ)x₁
    let theta = 1.0;
    let p = p2(theta);
    let n = 16;
    let f = Field::basis(p, n, &[0], &[1]);
    for mu in 1..=2usize {
        let xt = coordinate_field(Coordinate::XTilde(mu), n, p);
        let anti = xt.anticommutator(&f).unwrap();
        for &(x1, x2) in &[(0.5, 0.2), (-0.3, 0.8)] {
            let xtv = if mu == 1 {
                -(2.0 / theta) * x2
            } else {
                (2.0 / theta) * x1
            };
            let want = eval_field(&f, &[x1, x2]) * 2.0 * xtv;
            let got = eval_field(&anti, &[x1, x2]);
            assert!((got - want).norm() < 1e-9, "mu={mu}: {got} vs {want}");
        }
    }
}
