use effective_action::{
    anticommutator_coefficient, assembly_defect, diagram_table, fstarf_coefficient, loop_sum,
    max_assembly_defect, Diagram, Tag,
};
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{ToPrimitive, Zero};

fn br(n: i64, d: i64) -> BigRational {
    BigRational::new(BigInt::from(n), BigInt::from(d))
}

#[test]
fn assembly_defect_vanishes_exactly() {
    // Ω ∈ {1/5, 2/5, 3/5, 4/5, 1} plus generic rational points. The defect
    // is computed in exact rational arithmetic, so "vanishes" means the
    // zero rational, not a small float.
    for w in [
        br(1, 25),
        br(4, 25),
        br(9, 25),
        br(16, 25),
        br(1, 1),
        br(1, 2),
        br(1, 3),
        br(3, 7),
    ] {
        for (tag, c) in assembly_defect(&w) {
            assert!(c.is_zero(), "w={w}: tag {tag:?} defect {c:?}");
        }
        assert_eq!(max_assembly_defect(&w), 0.0);
    }
}

#[test]
fn curvature_sector_coefficients() {
    // C_F = −(1−w)⁴/192(1+w)⁴ + w²/8(1+w)⁴, C_A = w²/8(1+w)⁴
    assert_eq!(fstarf_coefficient(&br(0, 1)), br(-1, 192));
    assert!(anticommutator_coefficient(&br(0, 1)).is_zero());
    // w = 1: the F⋆F part collapses to the anticommutator coefficient
    assert_eq!(fstarf_coefficient(&br(1, 1)), br(1, 128));
    assert_eq!(anticommutator_coefficient(&br(1, 1)), br(1, 128));
    // generic point, against the literal formula
    let w = br(1, 4);
    let expect = br(-1, 192) * br(81, 256) / br(625, 256) + br(1, 8) * br(1, 16) / br(625, 256);
    assert_eq!(fstarf_coefficient(&w), expect);
}

#[test]
fn tadpole_diagram_coefficients() {
    // at w = 1/4: 1/ε coefficient of ∫x̃A is −w/4(1+w)³ = −4/125
    let w = br(1, 4);
    let rows = diagram_table(Diagram::OnePoint, &w);
    let ua = rows.iter().find(|(t, _)| *t == Tag::UA).unwrap();
    assert_eq!(ua.1.eps, br(-4, 125));
    assert_eq!(ua.1.mass_log, br(-4, 125));
    assert!(ua.1.log.is_zero());
    // ln ε coefficient of ∫x²x̃A is −w²/(1+w)⁴ = −16/625
    let u2 = rows.iter().find(|(t, _)| *t == Tag::U2Ua).unwrap();
    assert_eq!(u2.1.log, br(-16, 625));
    assert!(u2.1.eps.is_zero());
}

#[test]
fn two_point_diagrams_against_literal_formulas() {
    let wf = 0.37f64;
    let w = BigRational::from_float(wf).unwrap();
    let wv = w.to_f64().unwrap();
    let rows = diagram_table(Diagram::TwoPointA, &w);
    let get = |tag: Tag| -> f64 {
        rows.iter()
            .find(|(t, _)| *t == tag)
            .map(|(_, c)| c.log.to_f64().unwrap())
            .unwrap()
    };
    let om = 1.0 - wv;
    let op = 1.0 + wv;
    assert!((get(Tag::U2ASq) - wv * om * om / (4.0 * op.powi(4))).abs() < 1e-14);
    assert!((get(Tag::UASq) + wv * wv / (2.0 * op.powi(4))).abs() < 1e-14);
    assert!(
        (get(Tag::ALaplA) + om * om * (1.0 + 4.0 * wv + wv * wv) / (96.0 * op.powi(4))).abs()
            < 1e-14
    );
    assert!((get(Tag::DivASq) + om.powi(4) / (96.0 * op.powi(4))).abs() < 1e-14);

    let rows_b = diagram_table(Diagram::TwoPointB, &w);
    let asq = rows_b.iter().find(|(t, _)| *t == Tag::ASq).unwrap();
    assert!((asq.1.eps.to_f64().unwrap() + 1.0 / (16.0 * op)).abs() < 1e-14);
}

#[test]
fn loop_sum_mass_sector_is_uniform() {
    // Σ diagrams gives the same coefficient −w/4(1+w)³ for both ∫x̃A and
    // ∫A² in the 1/ε and m²lnε channels: the signature of the covariant
    // combination ∫(𝒜⋆𝒜 − ¼x̃²).
    let w = br(2, 5);
    let sum = loop_sum(&w);
    let want = -br(2, 5) / (br(4, 1) * br(343, 125));
    let ua = &sum[&Tag::UA];
    let asq = &sum[&Tag::ASq];
    assert_eq!(ua.eps, want);
    assert_eq!(ua.mass_log, want);
    assert_eq!(asq.eps, want);
    assert_eq!(asq.mass_log, want);
}
