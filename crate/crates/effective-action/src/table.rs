use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use std::collections::BTreeMap;

/// Gauge-field invariants that carry the one-loop UV divergences. The
/// coefficients are rational functions of w = Ω²; a common factor 1/π² and
/// the 1/θ² accompanying `U2Ua` and `U2ASq` are dropped uniformly (they
/// appear identically on the diagram side and on the assembled side).
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Tag {
    /// ∫ x̃_μ A_μ
    UA,
    /// ∫ A_μ A_μ
    ASq,
    /// ∫ x² x̃_μ A_μ  (carries 1/θ²)
    U2Ua,
    /// ∫ x² A_μ A_μ  (carries 1/θ²)
    U2ASq,
    /// ∫ (x̃_μ A_μ)²
    UASq,
    /// ∫ A_μ ∂² A_μ
    ALaplA,
    /// ∫ (∂_μ A_μ)²
    DivASq,
    /// ∫ x̃_μ A_ν {A_μ, A_ν}_⋆
    UAAnti,
    /// ∫ (−i ∂_μ A_ν) [A_μ, A_ν]_⋆
    DAComm,
    /// ∫ (A_μ ⋆ A_ν)²
    QuartMixed,
    /// ∫ (A_μ ⋆ A_μ)²
    QuartDiag,
}

pub const ALL_TAGS: [Tag; 11] = [
    Tag::UA,
    Tag::ASq,
    Tag::U2Ua,
    Tag::U2ASq,
    Tag::UASq,
    Tag::ALaplA,
    Tag::DivASq,
    Tag::UAAnti,
    Tag::DAComm,
    Tag::QuartMixed,
    Tag::QuartDiag,
];

/// One-loop diagrams of the minimally coupled model: the tadpole, the two
/// two-point topologies, the two three-point topologies and the three
/// four-point topologies.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Diagram {
    OnePoint,
    TwoPointA,
    TwoPointB,
    ThreePointA,
    ThreePointB,
    FourPointA,
    FourPointB,
    FourPointC,
}

pub const ALL_DIAGRAMS: [Diagram; 8] = [
    Diagram::OnePoint,
    Diagram::TwoPointA,
    Diagram::TwoPointB,
    Diagram::ThreePointA,
    Diagram::ThreePointB,
    Diagram::FourPointA,
    Diagram::FourPointB,
    Diagram::FourPointC,
];

/// Divergent part of one invariant: c_eps/ε + (c_mass_log·m² + c_log)·ln ε.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DivCoeff {
    pub eps: BigRational,
    pub log: BigRational,
    pub mass_log: BigRational,
}

impl DivCoeff {
    pub fn zero() -> Self {
        DivCoeff {
            eps: BigRational::zero(),
            log: BigRational::zero(),
            mass_log: BigRational::zero(),
        }
    }

    pub fn is_zero(&self) -> bool {
        self.eps.is_zero() && self.log.is_zero() && self.mass_log.is_zero()
    }

    fn add_assign(&mut self, other: &DivCoeff) {
        self.eps += &other.eps;
        self.log += &other.log;
        self.mass_log += &other.mass_log;
    }
}

fn br(n: i64, d: i64) -> BigRational {
    BigRational::new(BigInt::from(n), BigInt::from(d))
}

fn pow(x: &BigRational, n: u32) -> BigRational {
    let mut acc = BigRational::one();
    for _ in 0..n {
        acc *= x;
    }
    acc
}

/// Shared building blocks: (1−w)^a (1+w)^b and w powers.
struct W {
    w: BigRational,
    om: BigRational, // 1 − w
    op: BigRational, // 1 + w
}

impl W {
    fn new(w: &BigRational) -> Self {
        W {
            w: w.clone(),
            om: BigRational::one() - w,
            op: BigRational::one() + w,
        }
    }
    /// c · w^p (1−w)^a / (1+w)^b
    fn term(&self, c: BigRational, p: u32, a: u32, b: u32) -> BigRational {
        c * pow(&self.w, p) * pow(&self.om, a) / pow(&self.op, b)
    }
}

/// Divergent coefficients carried by one diagram, as exact rational
/// functions of w = Ω².
pub fn diagram_table(d: Diagram, w: &BigRational) -> Vec<(Tag, DivCoeff)> {
    let v = W::new(w);
    let mut out: Vec<(Tag, DivCoeff)> = Vec::new();
    let mut push = |tag: Tag, eps: BigRational, log: BigRational, mass_log: BigRational| {
        out.push((tag, DivCoeff { eps, log, mass_log }));
    };
    let zero = BigRational::zero;
    match d {
        Diagram::OnePoint => {
            let c = v.term(br(-1, 4), 1, 0, 3);
            push(Tag::UA, c.clone(), zero(), c);
            push(Tag::U2Ua, zero(), v.term(br(-1, 1), 2, 0, 4), zero());
        }
        Diagram::TwoPointA => {
            let c = v.term(br(1, 16), 0, 2, 3);
            push(Tag::ASq, c.clone(), zero(), c);
            push(Tag::U2ASq, zero(), v.term(br(1, 4), 1, 2, 4), zero());
            push(Tag::UASq, zero(), v.term(br(-1, 2), 2, 0, 4), zero());
            // (1−w)²(1+4w+w²) = (1−w)²((1+w)² + 2w)
            let quad = pow(&v.op, 2) + br(2, 1) * &v.w;
            push(
                Tag::ALaplA,
                zero(),
                v.term(br(-1, 96), 0, 2, 4) * &quad,
                zero(),
            );
            push(Tag::DivASq, zero(), v.term(br(-1, 96), 0, 4, 4), zero());
        }
        Diagram::TwoPointB => {
            let c = v.term(br(-1, 16), 0, 0, 1);
            push(Tag::ASq, c.clone(), zero(), c);
            push(Tag::U2ASq, zero(), v.term(br(-1, 4), 1, 0, 2), zero());
            push(Tag::ALaplA, zero(), v.term(br(1, 16), 1, 0, 2), zero());
        }
        Diagram::ThreePointA => {
            push(Tag::UAAnti, zero(), v.term(br(1, 8), 1, 2, 4), zero());
            let quad = pow(&v.op, 2) + br(2, 1) * &v.w;
            push(
                Tag::DAComm,
                zero(),
                v.term(br(1, 48), 0, 2, 4) * &quad,
                zero(),
            );
        }
        Diagram::ThreePointB => {
            push(Tag::UAAnti, zero(), v.term(br(-1, 8), 1, 0, 2), zero());
            push(Tag::DAComm, zero(), v.term(br(-1, 8), 1, 0, 2), zero());
        }
        Diagram::FourPointA => {
            push(Tag::QuartMixed, zero(), v.term(br(-1, 96), 0, 4, 4), zero());
            push(Tag::QuartDiag, zero(), v.term(br(-1, 48), 0, 4, 4), zero());
        }
        Diagram::FourPointB => {
            push(Tag::QuartDiag, zero(), v.term(br(1, 16), 0, 2, 2), zero());
        }
        Diagram::FourPointC => {
            push(Tag::QuartDiag, zero(), v.term(br(-1, 32), 0, 0, 0), zero());
        }
    }
    out
}

/// Sum of all one-loop diagram coefficients, per invariant.
pub fn loop_sum(w: &BigRational) -> BTreeMap<Tag, DivCoeff> {
    let mut table: BTreeMap<Tag, DivCoeff> =
        ALL_TAGS.iter().map(|&t| (t, DivCoeff::zero())).collect();
    for &d in &ALL_DIAGRAMS {
        for (tag, c) in diagram_table(d, w) {
            table.get_mut(&tag).unwrap().add_assign(&c);
        }
    }
    table
}

/// ln ε coefficient of ∫ F_μν ⋆ F_μν in the assembled effective action:
/// −(1−w)⁴/192(1+w)⁴ + w²/8(1+w)⁴ (in units of 1/π²).
pub fn fstarf_coefficient(w: &BigRational) -> BigRational {
    let v = W::new(w);
    v.term(br(-1, 192), 0, 4, 4) + v.term(br(1, 8), 2, 0, 4)
}

/// ln ε coefficient of ∫ {𝒜_μ, 𝒜_ν}_⋆² in the assembled effective action:
/// w²/8(1+w)⁴.
pub fn anticommutator_coefficient(w: &BigRational) -> BigRational {
    let v = W::new(w);
    v.term(br(1, 8), 2, 0, 4)
}

/// The assembled, gauge-covariant form of the divergent effective action,
///
///   Γ = c_m (∫ 𝒜⋆𝒜 − ¼x̃²)(1/ε + m² ln ε)
///     + [C_F ∫ F⋆F + C_A ∫ ({𝒜,𝒜}² − ¼(x̃²)²)] ln ε,
///
/// with c_m = w/4(1+w)³, C_F = `fstarf_coefficient`, C_A =
/// `anticommutator_coefficient`, expanded onto the same invariant basis as
/// the diagram table (field-independent pieces drop out of the basis).
pub fn effective_action_table(w: &BigRational) -> BTreeMap<Tag, DivCoeff> {
    let v = W::new(w);
    let mass = v.term(br(1, 4), 1, 0, 3);
    let cf = fstarf_coefficient(w);
    let ca = anticommutator_coefficient(w);
    let two = br(2, 1);
    let four = br(4, 1);
    let eight = br(8, 1);

    let mut table: BTreeMap<Tag, DivCoeff> =
        ALL_TAGS.iter().map(|&t| (t, DivCoeff::zero())).collect();
    let mut set = |tag: Tag, eps: BigRational, log: BigRational, mass_log: BigRational| {
        *table.get_mut(&tag).unwrap() = DivCoeff { eps, log, mass_log };
    };
    let zero = BigRational::zero;

    // ∫𝒜⋆𝒜 = ∫(¼x̃² + x̃A + A²): the mass sector feeds UA and A².
    set(Tag::UA, mass.clone(), zero(), mass.clone());
    set(Tag::ASq, mass.clone(), zero(), mass);
    // ∫F⋆F = ∫(−2 A∂²A − 2(∂A)² + 4(−i∂_μA_ν)[A_μ,A_ν] − [A,A]²),
    // ∫{𝒜,𝒜}² = ∫(¼(x̃²)² + 2x̃²x̃A + 4(x̃A)² + 2x̃²A² + 2(∂A)²
    //            + 4x̃_μA_ν{A_μ,A_ν} + {A,A}²),
    // [A,A]² = 2 QuartMixed − 2 QuartDiag, {A,A}² = 2 QuartMixed + 2 QuartDiag,
    // and x̃² = (4/θ²)x² (the θ power is dropped with the tag convention).
    set(Tag::U2Ua, zero(), eight.clone() * &ca, zero());
    set(Tag::U2ASq, zero(), eight * &ca, zero());
    set(Tag::UASq, zero(), four.clone() * &ca, zero());
    set(Tag::UAAnti, zero(), four.clone() * &ca, zero());
    set(Tag::ALaplA, zero(), -two.clone() * &cf, zero());
    set(
        Tag::DivASq,
        zero(),
        -two.clone() * &cf + two.clone() * &ca,
        zero(),
    );
    set(Tag::DAComm, zero(), four * &cf, zero());
    set(
        Tag::QuartMixed,
        zero(),
        -two.clone() * &cf + two.clone() * &ca,
        zero(),
    );
    set(
        Tag::QuartDiag,
        zero(),
        two.clone() * &cf + two * &ca,
        zero(),
    );
    table
}

/// Defect of the assembly: the covariant form plus the diagram sum (the
/// one-loop expansion is Γ = −Σ T), per invariant. An exact assembly gives
/// the zero coefficient on every tag.
pub fn assembly_defect(w: &BigRational) -> BTreeMap<Tag, DivCoeff> {
    let mut gamma = effective_action_table(w);
    for (tag, c) in loop_sum(w) {
        gamma.get_mut(&tag).unwrap().add_assign(&c);
    }
    gamma
}

/// Largest absolute defect coefficient across all tags and divergence
/// channels, as f64 (for reporting; the underlying arithmetic is exact).
pub fn max_assembly_defect(w: &BigRational) -> f64 {
    assembly_defect(w)
        .values()
        .flat_map(|c| [&c.eps, &c.log, &c.mass_log])
        .map(|q| q.abs().to_f64().unwrap_or(f64::INFINITY))
        .fold(0.0, f64::max)
}
