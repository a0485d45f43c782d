use moyal_core::{Complex, Field, MoyalParams};
use ndarray::Array2;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn p2(theta: f64) -> MoyalParams {
    MoyalParams::new(theta, 2).unwrap()
}

fn random_field(params: MoyalParams, trunc: usize, rng: &mut impl Rng) -> Field {
    let k = Field::side(params, trunc);
    let data: Vec<Complex> = (0..k * k)
        .map(|_| Complex::new(rng.gen_range(-1.0..1.0), rng.gen_range(-1.0..1.0)))
        .collect();
    Field::from_coeffs(params, trunc, Array2::from_shape_vec((k, k), data).unwrap()).unwrap()
}

#[test]
fn basis_star_is_matrix_product() {
    let p = p2(1.3);
    let b01 = Field::basis(p, 4, &[0], &[1]);
    let b12 = Field::basis(p, 4, &[1], &[2]);
    let b02 = Field::basis(p, 4, &[0], &[2]);
    assert_eq!(b01.star(&b12).unwrap(), b02);
    // mismatched inner index annihilates
    let b00 = Field::basis(p, 4, &[0], &[0]);
    assert_eq!(b01.star(&b00).unwrap().norm_inf(), 0.0);
}

#[test]
fn integral_of_diagonal_basis() {
    let theta = 0.9;
    let p = p2(theta);
    let b00 = Field::basis(p, 4, &[0], &[0]);
    let v = b00.integral();
    assert!((v.re - 2.0 * std::f64::consts::PI * theta).abs() < 1e-14);
    assert_eq!(v.im, 0.0);
    let b01 = Field::basis(p, 4, &[0], &[1]);
    assert_eq!(b01.integral().norm(), 0.0);
}

#[test]
fn adjoint_is_involutive_antihomomorphism() {
    let p = p2(1.0);
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    let f = random_field(p, 6, &mut rng);
    let g = random_field(p, 6, &mut rng);
    let twice = f.adjoint().adjoint();
    assert!(twice.sub(&f).unwrap().norm_inf() == 0.0);
    let lhs = f.star(&g).unwrap().adjoint();
    let rhs = g.adjoint().star(&f.adjoint()).unwrap();
    assert!(lhs.sub(&rhs).unwrap().norm_inf() < 1e-13);
}

#[test]
fn associativity_and_trace_property_exact() {
    let p = p2(0.75);
    let mut rng = ChaCha8Rng::seed_from_u64(42);
    for _ in 0..20 {
        let f = random_field(p, 8, &mut rng);
        let g = random_field(p, 8, &mut rng);
        let h = random_field(p, 8, &mut rng);
        let lhs = f.star(&g).unwrap().star(&h).unwrap();
        let rhs = f.star(&g.star(&h).unwrap()).unwrap();
        assert!(lhs.sub(&rhs).unwrap().norm_inf() < 1e-12);
        let tfg = f.star(&g).unwrap().integral();
        let tgf = g.star(&f).unwrap().integral();
        assert!((tfg - tgf).norm() < 1e-12);
    }
}

#[test]
fn approximate_unit_acts_as_identity_on_low_support() {
    // e_k = Σ_{m ≤ k} b_mm absorbs anything supported on first index ≤ k.
    let p = p2(1.0);
    let trunc = 6;
    let mut ek = Field::zero(p, trunc);
    for m in 0..4 {
        ek.set(&[m], &[m], Complex::new(1.0, 0.0));
    }
    let mut g = Field::zero(p, trunc);
    g.set(&[2], &[5], Complex::new(0.3, -0.4));
    g.set(&[3], &[0], Complex::new(-1.0, 0.2));
    let prod = ek.star(&g).unwrap();
    assert_eq!(prod, g);
}

#[test]
fn four_dim_flattening_is_row_major() {
    let p = MoyalParams::new(1.0, 4).unwrap();
    let f = Field::zero(p, 3);
    assert_eq!(f.flat(&[0, 0]), 0);
    assert_eq!(f.flat(&[0, 2]), 2);
    assert_eq!(f.flat(&[1, 0]), 3);
    assert_eq!(f.unflat(5), vec![1, 2]);
    // star contracts the full multi-index
    let a = Field::basis(p, 3, &[0, 1], &[1, 2]);
    let b = Field::basis(p, 3, &[1, 2], &[2, 0]);
    let c = a.star(&b).unwrap();
    assert_eq!(c, Field::basis(p, 3, &[0, 1], &[2, 0]));
}

#[test]
fn json_round_trip() {
    let p = p2(1.7);
    let mut rng = ChaCha8Rng::seed_from_u64(3);
    let f = random_field(p, 4, &mut rng);
    let j = f.to_json();
    let back = Field::from_json(&j).unwrap();
    assert!(back.sub(&f).unwrap().norm_inf() == 0.0);
}
