use crate::{basis_eval, Complex, Field, MoyalError, MoyalParams};
use ndarray::Array2;

/// Quadrature grid specification: uniform midpoint tensor grid on
/// [−L, L]^D. The default extent satisfies e^{−L²/θ} < 10⁻¹⁴ so Schwartz
/// tails are below quadrature accuracy; midpoint rules on rapidly decaying
/// smooth integrands converge spectrally.
#[derive(Debug, Clone, Copy)]
pub struct QuadSpec {
    pub extent: f64,
    pub resolution: usize,
}

impl QuadSpec {
    pub fn default_for(params: MoyalParams) -> Self {
        let extent = (params.theta * 1e14f64.ln()).sqrt();
        QuadSpec {
            extent,
            resolution: 128,
        }
    }

    pub fn with_resolution(params: MoyalParams, resolution: usize) -> Self {
        QuadSpec {
            extent: (params.theta * 1e14f64.ln()).sqrt(),
            resolution,
        }
    }

    pub fn step(&self) -> f64 {
        2.0 * self.extent / self.resolution as f64
    }

    pub fn node(&self, i: usize) -> f64 {
        -self.extent + (i as f64 + 0.5) * self.step()
    }

    pub fn nodes(&self) -> Vec<f64> {
        (0..self.resolution).map(|i| self.node(i)).collect()
    }
}

/// A complex scalar field sampled on a uniform 2D grid (D = 2 only).
/// `samples[(i, j)]` is the value at (x₁, x₂) = (node(i), node(j)).
#[derive(Debug, Clone)]
pub struct GridField {
    pub params: MoyalParams,
    pub spec: QuadSpec,
    pub samples: Array2<Complex>,
}

impl GridField {
    pub fn from_fn(
        params: MoyalParams,
        spec: QuadSpec,
        f: impl Fn(f64, f64) -> Complex,
    ) -> Result<Self, MoyalError> {
        if params.dim != 2 {
            return Err(MoyalError::Domain("GridField supports dim = 2 only".into()));
        }
        let n = spec.resolution;
        let mut samples = Array2::zeros((n, n));
        for i in 0..n {
            for j in 0..n {
                samples[(i, j)] = f(spec.node(i), spec.node(j));
            }
        }
        Ok(GridField {
            params,
            spec,
            samples,
        })
    }

    /// Quadrature of the samples: Σ f(x) h².
    pub fn integral(&self) -> Complex {
        let w = self.spec.step() * self.spec.step();
        self.samples.iter().sum::<Complex>() * w
    }

    /// L² pairing ∫ conj(f) g.
    pub fn inner(&self, other: &GridField) -> Result<Complex, MoyalError> {
        if self.spec.resolution != other.spec.resolution
            || (self.spec.extent - other.spec.extent).abs() > 1e-12
        {
            return Err(MoyalError::Dimension("grid mismatch".into()));
        }
        let w = self.spec.step() * self.spec.step();
        let mut acc = Complex::new(0.0, 0.0);
        for (a, b) in self.samples.iter().zip(other.samples.iter()) {
            acc += a.conj() * b;
        }
        Ok(acc * w)
    }

    pub fn max_abs(&self) -> f64 {
        self.samples.iter().map(|c| c.norm()).fold(0.0, f64::max)
    }

    /// CSV with header "x1,x2,re,im", 17 significant digits.
    pub fn to_csv<W: std::io::Write>(&self, mut w: W) -> std::io::Result<()> {
        writeln!(w, "x1,x2,re,im")?;
        for i in 0..self.spec.resolution {
            for j in 0..self.spec.resolution {
                let v = self.samples[(i, j)];
                writeln!(
                    w,
                    "{:.17e},{:.17e},{:.17e},{:.17e}",
                    self.spec.node(i),
                    self.spec.node(j),
                    v.re,
                    v.im
                )?;
            }
        }
        Ok(())
    }
}

/// Expansion coefficients by quadrature against the basis:
/// φ_{mn} = (2πθ)^{−D/2} ∫ f(x) b_{nm}(x) dx. Returns the Field and a tail
/// estimate (largest coefficient magnitude on the outermost index shell),
/// which bounds the truncation error for rapidly decaying inputs.
///
/// Implemented for D = 2 (grid-based); D = 4 coefficients of the tensor
/// products used in this crate are all built exactly instead.
pub fn coeffs_from_function(g: &GridField, trunc: usize) -> Result<(Field, f64), MoyalError> {
    let params = g.params;
    let n = g.spec.resolution;
    let w = g.spec.step() * g.spec.step();
    let norm = 1.0 / params.trace_volume();
    let mut field = Field::zero(params, trunc);

    // Basis values factorize over the radial/angular structure, but a direct
    // table is fast enough for the truncations used here (N ≤ 32).
    for m in 0..trunc {
        for nn in 0..trunc {
            let mut acc = Complex::new(0.0, 0.0);
            for i in 0..n {
                let x1 = g.spec.node(i);
                for j in 0..n {
                    let x2 = g.spec.node(j);
                    // b_{nm} with the *transposed* index order per the
                    // inverse-isomorphism formula.
                    acc += g.samples[(i, j)] * basis_eval(&[nn], &[m], &[x1, x2], params);
                }
            }
            field.coeffs[(m, nn)] = acc * w * norm;
        }
    }

    let mut tail = 0.0f64;
    for m in 0..trunc {
        for nn in 0..trunc {
            if m == trunc - 1 || nn == trunc - 1 {
                tail = tail.max(field.coeffs[(m, nn)].norm());
            }
        }
    }
    Ok((field, tail))
}

/// Checked variant: fails with an accuracy error when the tail estimate
/// exceeds `tol`.
pub fn coeffs_from_function_checked(
    g: &GridField,
    trunc: usize,
    tol: f64,
) -> Result<Field, MoyalError> {
    let (f, tail) = coeffs_from_function(g, trunc)?;
    if tail > tol {
        return Err(MoyalError::Accuracy(format!(
            "coefficient tail {tail:.3e} above tolerance {tol:.3e}"
        )));
    }
    Ok(f)
}

/// Synthesis Σ_{mn} φ_{mn} b_{mn}(x).
pub fn eval_field(f: &Field, x: &[f64]) -> Complex {
    let mut acc = Complex::new(0.0, 0.0);
    for ((i, j), &c) in f.coeffs.indexed_iter() {
        if c.norm_sqr() == 0.0 {
            continue;
        }
        let m = f.unflat(i);
        let n = f.unflat(j);
        acc += c * basis_eval(&m, &n, x, f.params);
    }
    acc
}

/// Symplectic Fourier transform on the grid (D = 2):
///
///   ĝ(k) = (πθ)⁻¹ ∫ g(x) e^{−i·sign·k∧x} dx,  k∧x = (2/θ)(k₂x₁ − k₁x₂).
///
/// `sign = 1` is the plain transform; `sign = −1` its inverse-phase variant
/// (the modified transform used in the duality covariance depends on a
/// vertex index, so the sign is a caller choice). The kernel separates, so
/// the double sum is done in two O(n³) passes.
pub fn symplectic_fourier(g: &GridField, sign: f64) -> GridField {
    let n = g.spec.resolution;
    let h = g.spec.step();
    let c = 2.0 / g.params.theta;
    let nodes = g.spec.nodes();

    // pass 1: t[(k2, j)] = Σ_i g[(i, j)] e^{−i·sign·c·k2·x1_i} h
    let mut t: Array2<Complex> = Array2::zeros((n, n));
    for k2 in 0..n {
        for j in 0..n {
            let mut acc = Complex::new(0.0, 0.0);
            for i in 0..n {
                let phase = -sign * c * nodes[k2] * nodes[i];
                acc += g.samples[(i, j)] * Complex::from_polar(1.0, phase);
            }
            t[(k2, j)] = acc * h;
        }
    }
    // pass 2: ĝ[(k1, k2)] = (πθ)⁻¹ Σ_j t[(k2, j)] e^{+i·sign·c·k1·x2_j} h
    let norm = 1.0 / (std::f64::consts::PI * g.params.theta);
    let mut out: Array2<Complex> = Array2::zeros((n, n));
    for k1 in 0..n {
        for k2 in 0..n {
            let mut acc = Complex::new(0.0, 0.0);
            for j in 0..n {
                let phase = sign * c * nodes[k1] * nodes[j];
                acc += t[(k2, j)] * Complex::from_polar(1.0, phase);
            }
            out[(k1, k2)] = acc * h * norm;
        }
    }
    GridField {
        params: g.params,
        spec: g.spec,
        samples: out,
    }
}
