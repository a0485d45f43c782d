use crate::superfield::SuperField;
use crate::EpsError;
use moyal_core::{coordinate_field, Coordinate, Field, MoyalParams};

/// ξ_μ = −½ x̃_μ as a truncated matrix field (D = 2, μ ∈ {1,2}).
pub fn xi(mu: usize, trunc: usize, params: MoyalParams) -> Field {
    coordinate_field(Coordinate::XTilde(mu), trunc, params).scale_re(-0.5)
}

/// η_{μν} = ½ x̃_μ x̃_ν = 2 ξ_μ ξ_ν. For linear functions the star
/// anticommutator has no correction term, so the matrix representative is
/// ξ_μ ⋆ ξ_ν + ξ_ν ⋆ ξ_μ (exact in the interior).
pub fn eta(mu: usize, nu: usize, trunc: usize, params: MoyalParams) -> Result<Field, EpsError> {
    let a = xi(mu, trunc, params);
    let b = xi(nu, trunc, params);
    Ok(a.anticommutator(&b)?)
}

/// Θ⁻¹_{μν} for D = 2 with Θ = θ [[0,1],[−1,0]]: Θ⁻¹₁₂ = −1/θ.
pub fn theta_inv(mu: usize, nu: usize, theta: f64) -> f64 {
    match (mu, nu) {
        (1, 2) => -1.0 / theta,
        (2, 1) => 1.0 / theta,
        _ => 0.0,
    }
}

/// The superalgebra generators: (0,iγ), (iξ_μ,0), (0,iξ_μ), (iη_{μν},0),
/// with γ = 1.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Gen {
    Gamma,
    Xi0(usize),
    Xi1(usize),
    Eta(usize, usize),
}

impl Gen {
    /// Parity of the derivation ad of this generator.
    pub fn parity(self) -> usize {
        match self {
            Gen::Gamma | Gen::Xi1(_) => 1,
            Gen::Xi0(_) | Gen::Eta(_, _) => 0,
        }
    }

    /// All generators in D = 2 (η over ordered index pairs).
    pub fn list() -> Vec<Gen> {
        let mut v = vec![Gen::Gamma];
        for mu in 1..=2 {
            v.push(Gen::Xi0(mu));
        }
        for mu in 1..=2 {
            v.push(Gen::Xi1(mu));
        }
        for mu in 1..=2 {
            for nu in 1..=2 {
                v.push(Gen::Eta(mu, nu));
            }
        }
        v
    }

    /// The generator as a superalgebra element.
    pub fn field(
        self,
        trunc: usize,
        params: MoyalParams,
        alpha: f64,
    ) -> Result<SuperField, EpsError> {
        let i = moyal_core::Complex::new(0.0, 1.0);
        Ok(match self {
            Gen::Gamma => SuperField::from_odd(Field::one(params, trunc).scale(i), alpha),
            Gen::Xi0(mu) => SuperField::from_even(xi(mu, trunc, params).scale(i), alpha),
            Gen::Xi1(mu) => SuperField::from_odd(xi(mu, trunc, params).scale(i), alpha),
            Gen::Eta(mu, nu) => SuperField::from_even(eta(mu, nu, trunc, params)?.scale(i), alpha),
        })
    }
}

impl std::fmt::Display for Gen {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Gen::Gamma => write!(f, "(0,iγ)"),
            Gen::Xi0(mu) => write!(f, "(iξ{mu},0)"),
            Gen::Xi1(mu) => write!(f, "(0,iξ{mu})"),
            Gen::Eta(mu, nu) => write!(f, "(iη{mu}{nu},0)"),
        }
    }
}

/// Evaluate the ten structure relations among the generators as truncated
/// matrix fields and compare with the closed forms on the interior block
/// (margin 2). Returns one (label, defect) pair per relation instance.
pub fn derivation_table_check(
    trunc: usize,
    theta: f64,
    alpha: f64,
) -> Result<Vec<(String, f64)>, EpsError> {
    if trunc < 6 {
        return Err(EpsError::Domain(
            "derivation table check needs trunc ≥ 6".into(),
        ));
    }
    let params = MoyalParams::new(theta, 2)?;
    let i = moyal_core::Complex::new(0.0, 1.0);
    let margin = 2;
    let ev = |f: Field| SuperField::from_even(f, alpha);
    let od = |f: Field| SuperField::from_odd(f, alpha);
    let one = || Field::one(params, trunc);
    let zero = || SuperField::zero(params, trunc, alpha);
    let xi_ = |mu: usize| xi(mu, trunc, params);
    let eta_ = |mu: usize, nu: usize| eta(mu, nu, trunc, params);
    let gen = |g: Gen| g.field(trunc, params, alpha);

    let mut out = Vec::new();
    let mut push = |label: String, lhs: SuperField, rhs: SuperField| -> Result<(), EpsError> {
        let defect = lhs.sub(&rhs)?.norm_inf_interior(margin);
        out.push((label, defect));
        Ok(())
    };

    // 1. [(0,iγ),(0,iγ)] = (−2α, 0)
    push(
        "[(0,iγ),(0,iγ)]".into(),
        gen(Gen::Gamma)?.bracket(&gen(Gen::Gamma)?)?,
        ev(one().scale_re(-2.0 * alpha)),
    )?;
    for mu in 1..=2 {
        // 2. [(iξμ,0),(0,iγ)] = 0
        push(
            format!("[(iξ{mu},0),(0,iγ)]"),
            gen(Gen::Xi0(mu))?.bracket(&gen(Gen::Gamma)?)?,
            zero(),
        )?;
        // 3. [(0,iξμ),(0,iγ)] = (−2α ξμ, 0)
        push(
            format!("[(0,iξ{mu}),(0,iγ)]"),
            gen(Gen::Xi1(mu))?.bracket(&gen(Gen::Gamma)?)?,
            ev(xi_(mu).scale_re(-2.0 * alpha)),
        )?;
    }
    for mu in 1..=2 {
        for nu in 1..=2 {
            // 4. [(iημν,0),(0,iγ)] = 0
            push(
                format!("[(iη{mu}{nu},0),(0,iγ)]"),
                gen(Gen::Eta(mu, nu))?.bracket(&gen(Gen::Gamma)?)?,
                zero(),
            )?;
            // 5. [(iξμ,0),(iξν,0)] = (iΘ⁻¹μν, 0)
            push(
                format!("[(iξ{mu},0),(iξ{nu},0)]"),
                gen(Gen::Xi0(mu))?.bracket(&gen(Gen::Xi0(nu))?)?,
                ev(one().scale(i * theta_inv(mu, nu, theta))),
            )?;
            // 6. [(iξμ,0),(0,iξν)] = (0, iΘ⁻¹μν)
            push(
                format!("[(iξ{mu},0),(0,iξ{nu})]"),
                gen(Gen::Xi0(mu))?.bracket(&gen(Gen::Xi1(nu))?)?,
                od(one().scale(i * theta_inv(mu, nu, theta))),
            )?;
            // 7. [(0,iξμ),(0,iξν)] = (−α ημν, 0)
            push(
                format!("[(0,iξ{mu}),(0,iξ{nu})]"),
                gen(Gen::Xi1(mu))?.bracket(&gen(Gen::Xi1(nu))?)?,
                ev(eta_(mu, nu)?.scale_re(-alpha)),
            )?;
            for rho in 1..=2 {
                // 8. [(iημν,0),(iξρ,0)] = (2i(Θ⁻¹νρ ξμ + Θ⁻¹μρ ξν), 0).
                // The coefficient 2 follows from [iημν,φ] = 2ξμ∂νφ + 2ξν∂μφ,
                // which is forced by η = 2ξμξν and [xa,xb] = iΘab.
                let lin = xi_(mu)
                    .scale_re(theta_inv(nu, rho, theta))
                    .add(&xi_(nu).scale_re(theta_inv(mu, rho, theta)))?
                    .scale(i * 2.0);
                push(
                    format!("[(iη{mu}{nu},0),(iξ{rho},0)]"),
                    gen(Gen::Eta(mu, nu))?.bracket(&gen(Gen::Xi0(rho))?)?,
                    ev(lin.clone()),
                )?;
                // 9. [(iημν,0),(0,iξρ)] = (0, same)
                push(
                    format!("[(iη{mu}{nu},0),(0,iξ{rho})]"),
                    gen(Gen::Eta(mu, nu))?.bracket(&gen(Gen::Xi1(rho))?)?,
                    od(lin),
                )?;
                for sig in 1..=2 {
                    // 10. [(iημν,0),(iηρσ,0)] = (2i(ημρΘ⁻¹νσ + ημσΘ⁻¹νρ
                    //      + ηνρΘ⁻¹μσ + ηνσΘ⁻¹μρ), 0), same coefficient
                    //      normalization as relation 8
                    if rho < mu || (rho == mu && sig < nu) {
                        continue; // antisymmetric in the pair of pairs
                    }
                    let quad = eta_(mu, rho)?
                        .scale_re(theta_inv(nu, sig, theta))
                        .add(&eta_(mu, sig)?.scale_re(theta_inv(nu, rho, theta)))?
                        .add(&eta_(nu, rho)?.scale_re(theta_inv(mu, sig, theta)))?
                        .add(&eta_(nu, sig)?.scale_re(theta_inv(mu, rho, theta)))?
                        .scale(i * 2.0);
                    push(
                        format!("[(iη{mu}{nu},0),(iη{rho}{sig},0)]"),
                        gen(Gen::Eta(mu, nu))?.bracket(&gen(Gen::Eta(rho, sig))?)?,
                        ev(quad),
                    )?;
                }
            }
        }
    }
    Ok(out)
}
