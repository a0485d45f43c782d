use crate::{Complex, Field, MoyalParams};

/// Coordinate-type multipliers with exact sparse matrix-basis coefficients.
/// Coordinate labels μ are 1-based (x₁..x_D); pair j holds (x_{2j-1}, x_{2j}).
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Coordinate {
    /// x_μ
    X(usize),
    /// x̃_μ = 2 Θ⁻¹_{μν} x_ν (within the pair: x̃_{2j-1} = −(2/θ)x_{2j},
    /// x̃_{2j} = +(2/θ)x_{2j-1})
    XTilde(usize),
    /// x² = Σ_μ x_μ², diagonal θ(2|m| + D/2)
    XSquared,
}

/// Matrix coefficients of the coordinate distributions.
///
/// First coordinate of a pair (symmetric real tridiagonal):
///   t_{m,m+e_j} = t_{m+e_j,m} = √(θ/2)·√(m_j+1).
/// Second coordinate (antisymmetric imaginary):
///   t_{m,m+e_j} = −i√(θ/2)·√(m_j+1),  t_{m+e_j,m} = +i√(θ/2)·√(m_j+1).
pub fn coordinate_field(which: Coordinate, trunc: usize, params: MoyalParams) -> Field {
    match which {
        Coordinate::XSquared => {
            let mut f = Field::zero(params, trunc);
            let d_half = params.pairs() as f64;
            for i in 0..f.coeffs.nrows() {
                let w = f.index_weight(i) as f64;
                f.coeffs[(i, i)] = Complex::new(params.theta * (2.0 * w + d_half), 0.0);
            }
            f
        }
        Coordinate::X(mu) => {
            assert!(mu >= 1 && mu <= params.dim, "coordinate label out of range");
            let j = (mu - 1) / 2;
            let first_of_pair = mu % 2 == 1;
            let c = (params.theta / 2.0).sqrt();
            let mut f = Field::zero(params, trunc);
            let k = f.coeffs.nrows();
            for idx in 0..k {
                let m = f.unflat(idx);
                if m[j] + 1 >= trunc {
                    continue;
                }
                let mut up = m.clone();
                up[j] += 1;
                let amp = c * ((m[j] + 1) as f64).sqrt();
                let (lo, hi) = (idx, f.flat(&up));
                if first_of_pair {
                    f.coeffs[(lo, hi)] = Complex::new(amp, 0.0);
                    f.coeffs[(hi, lo)] = Complex::new(amp, 0.0);
                } else {
                    f.coeffs[(lo, hi)] = Complex::new(0.0, -amp);
                    f.coeffs[(hi, lo)] = Complex::new(0.0, amp);
                }
            }
            f
        }
        Coordinate::XTilde(mu) => {
            assert!(mu >= 1 && mu <= params.dim, "coordinate label out of range");
            let scale = 2.0 / params.theta;
            if mu % 2 == 1 {
                coordinate_field(Coordinate::X(mu + 1), trunc, params).scale_re(-scale)
            } else {
                coordinate_field(Coordinate::X(mu - 1), trunc, params).scale_re(scale)
            }
        }
    }
}
