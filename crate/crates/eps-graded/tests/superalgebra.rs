use eps_graded::{derivation_table_check, eta, theta_inv, xi, Gen, SuperField};
use moyal_core::{Complex, Field, MoyalParams};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn params(theta: f64) -> MoyalParams {
    MoyalParams::new(theta, 2).unwrap()
}

fn random_field(p: MoyalParams, trunc: usize, rng: &mut ChaCha8Rng) -> Field {
    let mut f = Field::zero(p, trunc);
    for v in f.coeffs.iter_mut() {
        *v = Complex::new(rng.gen_range(-1.0..1.0), rng.gen_range(-1.0..1.0));
    }
    f
}

fn random_super(p: MoyalParams, trunc: usize, alpha: f64, rng: &mut ChaCha8Rng) -> SuperField {
    SuperField::new(
        random_field(p, trunc, rng),
        random_field(p, trunc, rng),
        alpha,
    )
    .unwrap()
}

#[test]
fn unit_involution_and_alpha_mismatch() {
    let p = params(1.0);
    let mut rng = ChaCha8Rng::seed_from_u64(3);
    let one = SuperField::one(p, 6, 0.7);
    let q = random_super(p, 6, 0.7, &mut rng);
    assert!(one.product(&q).unwrap().sub(&q).unwrap().norm_inf() < 1e-15);
    assert!(q.product(&one).unwrap().sub(&q).unwrap().norm_inf() < 1e-15);
    // (pq)* = q*p* for the even/odd involution with real α
    let r = random_super(p, 6, 0.7, &mut rng);
    let lhs = q.product(&r).unwrap().adjoint();
    let rhs = r.adjoint().product(&q.adjoint()).unwrap();
    assert!(lhs.sub(&rhs).unwrap().norm_inf() < 1e-12);
    // α mismatch is a domain error
    let s = random_super(p, 6, 0.5, &mut rng);
    assert!(q.product(&s).is_err());
}

#[test]
fn product_is_associative() {
    let p = params(1.0);
    let mut rng = ChaCha8Rng::seed_from_u64(5);
    for alpha in [0.5, 1.0, -0.25] {
        for _ in 0..5 {
            let a = random_super(p, 6, alpha, &mut rng);
            let b = random_super(p, 6, alpha, &mut rng);
            let c = random_super(p, 6, alpha, &mut rng);
            let lhs = a.product(&b).unwrap().product(&c).unwrap();
            let rhs = a.product(&b.product(&c).unwrap()).unwrap();
            assert!(lhs.sub(&rhs).unwrap().norm_inf() < 1e-12);
        }
    }
}

#[test]
fn bracket_equals_graded_commutator() {
    let p = params(1.3);
    let mut rng = ChaCha8Rng::seed_from_u64(9);
    for _ in 0..10 {
        let a = random_super(p, 6, 0.8, &mut rng);
        let b = random_super(p, 6, 0.8, &mut rng);
        let lhs = a.bracket(&b).unwrap();
        let rhs = a.bracket_graded(&b).unwrap();
        assert!(lhs.sub(&rhs).unwrap().norm_inf() < 1e-13);
    }
}

#[test]
fn xi_brackets_reproduce_theta_inverse() {
    // [(iξ₁,0),(iξ₂,0)] = (iΘ⁻¹₁₂, 0) with Θ⁻¹₁₂ = −1/θ
    for theta in [1.0, 2.5] {
        let p = params(theta);
        let trunc = 10;
        let x1 = Gen::Xi0(1).field(trunc, p, 0.5).unwrap();
        let x2 = Gen::Xi0(2).field(trunc, p, 0.5).unwrap();
        let br = x1.bracket(&x2).unwrap();
        let want = SuperField::from_even(
            Field::one(p, trunc).scale(Complex::new(0.0, -1.0 / theta)),
            0.5,
        );
        assert!(br.sub(&want).unwrap().norm_inf_interior(2) < 1e-12);
        assert_eq!(theta_inv(1, 2, theta), -1.0 / theta);
    }
}

#[test]
fn eta_is_half_xtilde_xtilde() {
    // η₁₂ = ½ x̃₁x̃₂: check a few matrix entries against the star
    // anticommutator of the ξ's built independently from x̃
    let p = params(1.7);
    let trunc = 12;
    let e12 = eta(1, 2, trunc, p).unwrap();
    let xt1 = moyal_core::coordinate_field(moyal_core::Coordinate::XTilde(1), trunc, p);
    let xt2 = moyal_core::coordinate_field(moyal_core::Coordinate::XTilde(2), trunc, p);
    let half = xt1.anticommutator(&xt2).unwrap().scale_re(0.25); // x̃₁x̃₂ = ½{x̃₁,x̃₂}⋆ for linear functions, so η = ¼{x̃₁,x̃₂}⋆
    assert!(e12.sub(&half).unwrap().norm_inf_interior(2) < 1e-12);
    // and η is Hermitian
    assert!(e12.is_hermitian(1e-12));
    assert!(xi(1, trunc, p).is_hermitian(1e-12));
}

#[test]
fn derivation_table_all_relations() {
    for (theta, alpha) in [(1.0, 0.5), (1.0, 1.0), (2.0, 0.8)] {
        let report = derivation_table_check(10, theta, alpha).unwrap();
        assert!(report.len() >= 10);
        for (label, defect) in &report {
            assert!(
                defect < &1e-10,
                "{label}: defect {defect:.2e} at θ={theta}, α={alpha}"
            );
        }
    }
    // named examples from the relation list
    let report = derivation_table_check(10, 1.0, 0.5).unwrap();
    for needle in [
        "[(iξ1,0),(iξ2,0)]",
        "[(0,iξ1),(0,iξ1)]",
        "[(iη12,0),(0,iγ)]",
    ] {
        assert!(report.iter().any(|(l, _)| l == needle), "missing {needle}");
    }
    assert!(derivation_table_check(4, 1.0, 0.5).is_err());
}
