use crate::{Complex, MoyalError, MoyalParams};
use ndarray::Array2;
use serde::{Deserialize, Serialize};

/// An element of the truncated Moyal algebra: the coefficient matrix
/// φ_{mn} over multi-indices m, n ∈ {0..N-1}^{D/2}.
///
/// For D = 4 multi-indices are flattened row-major, `idx = m₁·N + m₂`
/// (m₁ outer). The star product is the matrix product of coefficient
/// matrices; the integral is `(2πθ)^{D/2}` times the trace.
#[derive(Debug, Clone, PartialEq)]
pub struct Field {
    pub params: MoyalParams,
    pub trunc: usize,
    pub coeffs: Array2<Complex>,
}

impl Field {
    /// Matrix side length N^{D/2}.
    pub fn side(params: MoyalParams, trunc: usize) -> usize {
        trunc.pow(params.pairs() as u32)
    }

    pub fn zero(params: MoyalParams, trunc: usize) -> Self {
        let k = Self::side(params, trunc);
        Field {
            params,
            trunc,
            coeffs: Array2::zeros((k, k)),
        }
    }

    pub fn from_coeffs(
        params: MoyalParams,
        trunc: usize,
        coeffs: Array2<Complex>,
    ) -> Result<Self, MoyalError> {
        let k = Self::side(params, trunc);
        if coeffs.dim() != (k, k) {
            return Err(MoyalError::Dimension(format!(
                "expected {k}x{k} coefficient matrix, got {:?}",
                coeffs.dim()
            )));
        }
        if coeffs
            .iter()
            .any(|c| !c.re.is_finite() || !c.im.is_finite())
        {
            return Err(MoyalError::Domain("non-finite coefficient".into()));
        }
        Ok(Field {
            params,
            trunc,
            coeffs,
        })
    }

    /// Flatten a multi-index (row-major, first component outer).
    pub fn flat(&self, m: &[usize]) -> usize {
        assert_eq!(m.len(), self.params.pairs());
        let mut idx = 0;
        for &c in m {
            assert!(c < self.trunc, "multi-index component out of range");
            idx = idx * self.trunc + c;
        }
        idx
    }

    /// Inverse of [`flat`].
    pub fn unflat(&self, mut idx: usize) -> Vec<usize> {
        let p = self.params.pairs();
        let mut out = vec![0; p];
        for slot in out.iter_mut().rev() {
            *slot = idx % self.trunc;
            idx /= self.trunc;
        }
        out
    }

    /// |m| = sum of multi-index components for a flat index.
    pub fn index_weight(&self, idx: usize) -> usize {
        self.unflat(idx).iter().sum()
    }

    /// The basis element b_{mn}: single unit coefficient.
    pub fn basis(params: MoyalParams, trunc: usize, m: &[usize], n: &[usize]) -> Self {
        let mut f = Self::zero(params, trunc);
        let (i, j) = (f.flat(m), f.flat(n));
        f.coeffs[(i, j)] = Complex::new(1.0, 0.0);
        f
    }

    pub fn get(&self, m: &[usize], n: &[usize]) -> Complex {
        self.coeffs[(self.flat(m), self.flat(n))]
    }

    pub fn set(&mut self, m: &[usize], n: &[usize], v: Complex) {
        let (i, j) = (self.flat(m), self.flat(n));
        self.coeffs[(i, j)] = v;
    }

    fn check_compat(&self, other: &Self) -> Result<(), MoyalError> {
        if self.params != other.params || self.trunc != other.trunc {
            return Err(MoyalError::Dimension(
                "fields have different params or truncation".into(),
            ));
        }
        Ok(())
    }

    /// Star product: matrix product of coefficient matrices.
    pub fn star(&self, other: &Self) -> Result<Self, MoyalError> {
        self.check_compat(other)?;
        Ok(Field {
            params: self.params,
            trunc: self.trunc,
            coeffs: self.coeffs.dot(&other.coeffs),
        })
    }

    /// ∫ f = (2πθ)^{D/2} Σ_m φ_{mm}.
    pub fn integral(&self) -> Complex {
        let tr: Complex = self.coeffs.diag().iter().sum();
        tr * self.params.trace_volume()
    }

    /// Involution f†: conjugate transpose of the coefficient matrix.
    pub fn adjoint(&self) -> Self {
        Field {
            params: self.params,
            trunc: self.trunc,
            coeffs: self.coeffs.t().mapv(|c| c.conj()),
        }
    }

    pub fn add(&self, other: &Self) -> Result<Self, MoyalError> {
        self.check_compat(other)?;
        Ok(Field {
            params: self.params,
            trunc: self.trunc,
            coeffs: &self.coeffs + &other.coeffs,
        })
    }

    pub fn sub(&self, other: &Self) -> Result<Self, MoyalError> {
        self.check_compat(other)?;
        Ok(Field {
            params: self.params,
            trunc: self.trunc,
            coeffs: &self.coeffs - &other.coeffs,
        })
    }

    pub fn scale(&self, c: Complex) -> Self {
        Field {
            params: self.params,
            trunc: self.trunc,
            coeffs: self.coeffs.mapv(|v| v * c),
        }
    }

    pub fn scale_re(&self, c: f64) -> Self {
        self.scale(Complex::new(c, 0.0))
    }

    /// Star commutator [f, g] = f⋆g − g⋆f.
    pub fn commutator(&self, other: &Self) -> Result<Self, MoyalError> {
        self.star(other)?.sub(&other.star(self)?)
    }

    /// Star anticommutator {f, g} = f⋆g + g⋆f.
    pub fn anticommutator(&self, other: &Self) -> Result<Self, MoyalError> {
        self.star(other)?.add(&other.star(self)?)
    }

    pub fn norm_inf(&self) -> f64 {
        self.coeffs.iter().map(|c| c.norm()).fold(0.0, f64::max)
    }

    /// Max entry magnitude over the interior block: both multi-indices with
    /// every component < trunc − margin. Truncation pollutes the outer band
    /// when unbounded multipliers (x, x̃, x²) are involved, so identities are
    /// asserted on the interior only.
    pub fn norm_inf_interior(&self, margin: usize) -> f64 {
        let lim = self.trunc.saturating_sub(margin);
        let mut worst = 0.0f64;
        for ((i, j), c) in self.coeffs.indexed_iter() {
            let mi = self.unflat(i);
            let ni = self.unflat(j);
            if mi.iter().chain(ni.iter()).all(|&c| c < lim) {
                worst = worst.max(c.norm());
            }
        }
        worst
    }

    pub fn is_hermitian(&self, tol: f64) -> bool {
        self.sub(&self.adjoint())
            .map(|d| d.norm_inf() <= tol)
            .unwrap_or(false)
    }

    /// The identity element (diagonal ones).
    pub fn one(params: MoyalParams, trunc: usize) -> Self {
        let mut f = Self::zero(params, trunc);
        for i in 0..f.coeffs.nrows() {
            f.coeffs[(i, i)] = Complex::new(1.0, 0.0);
        }
        f
    }

    /// Serialize to the interchange JSON object
    /// `{theta, dim, trunc, coeffs: [[re,im],...]}` (row-major).
    pub fn to_json(&self) -> serde_json::Value {
        let coeffs: Vec<[f64; 2]> = self.coeffs.iter().map(|c| [c.re, c.im]).collect();
        serde_json::json!({
            "theta": self.params.theta,
            "dim": self.params.dim,
            "trunc": self.trunc,
            "coeffs": coeffs,
        })
    }

    pub fn from_json(v: &serde_json::Value) -> Result<Self, MoyalError> {
        #[derive(Deserialize)]
        struct Wire {
            theta: f64,
            dim: usize,
            trunc: usize,
            coeffs: Vec<[f64; 2]>,
        }
        let w: Wire = serde_json::from_value(v.clone())
            .map_err(|e| MoyalError::Domain(format!("bad field JSON: {e}")))?;
        let params = MoyalParams::new(w.theta, w.dim)?;
        let k = Self::side(params, w.trunc);
        if w.coeffs.len() != k * k {
            return Err(MoyalError::Dimension(format!(
                "expected {} coefficients, got {}",
                k * k,
                w.coeffs.len()
            )));
        }
        let data: Vec<Complex> = w
            .coeffs
            .iter()
            .map(|&[re, im]| Complex::new(re, im))
            .collect();
        let coeffs = Array2::from_shape_vec((k, k), data).unwrap();
        Self::from_coeffs(params, w.trunc, coeffs)
    }
}

// serde passthrough used by CLI output structs
impl Serialize for Field {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        self.to_json().serialize(s)
    }
}
