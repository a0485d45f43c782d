use crate::factor::{eps_from_sigma, CommutationFactor, FactorSet};
use crate::group::Element;
use crate::linalg::nullspace;
use crate::EpsError;
use ndarray::{array, Array2};
use num_complex::Complex64;

/// Fine grading: every homogeneous component is one-dimensional,
/// e_α e_β = σ(α,β) e_{α+β} with support the whole (finite) group.
#[derive(Debug, Clone)]
pub struct FineAlgebra {
    pub sigma: FactorSet,
    pub elems: Vec<Element>,
    /// matrix representative of e_α, aligned with `elems`
    pub basis: Vec<Array2<Complex64>>,
}

/// Homogeneous ε-derivation space of a fixed degree, in the coordinates
/// X(e_α) = σ(|X|,α) x_α e_{α+|X|}.
#[derive(Debug, Clone)]
pub struct DerivationSpace {
    pub degree: Element,
    /// basis of coordinate vectors (x_α), aligned with the group elements
    pub coords: Vec<Vec<Complex64>>,
    /// dimension of the inner part C·(1 − εε_σ⁻¹(|X|,α))
    pub inner_dim: usize,
}

impl DerivationSpace {
    pub fn dim(&self) -> usize {
        self.coords.len()
    }
}

impl FineAlgebra {
    /// The fine (Pauli) grading of M₂ over Z₂×Z₂.
    pub fn pauli() -> Self {
        let sigma = FactorSet::pauli();
        let one = Complex64::new(1.0, 0.0);
        let i = Complex64::new(0.0, 1.0);
        let zero = Complex64::new(0.0, 0.0);
        let elems = sigma.group.elements().expect("finite group");
        // (0,0)→1, (0,1)→τ₂, (1,0)→τ₁, (1,1)→τ₃ in lexicographic order
        let by_elem = |e: &Element| -> Array2<Complex64> {
            match (e[0], e[1]) {
                (0, 0) => array![[one, zero], [zero, one]],
                (1, 0) => array![[zero, one], [one, zero]],
                (0, 1) => array![[zero, -i], [i, zero]],
                _ => array![[one, zero], [zero, -one]],
            }
        };
        let basis = elems.iter().map(by_elem).collect();
        FineAlgebra {
            sigma,
            elems,
            basis,
        }
    }

    pub fn eps_sigma(&self) -> CommutationFactor {
        eps_from_sigma(&self.sigma)
    }

    fn index_of(&self, e: &Element) -> usize {
        let e = self.sigma.group.reduce(e);
        self.elems
            .iter()
            .position(|x| *x == e)
            .expect("support is the whole group")
    }

    /// Check e_α e_β = σ(α,β) e_{α+β} on the matrix representatives.
    pub fn check_basis(&self) -> Result<(), EpsError> {
        for (a, ea) in self.elems.iter().zip(&self.basis) {
            for (b, eb) in self.elems.iter().zip(&self.basis) {
                let c = self.sigma.group.add(a, b);
                let want =
                    self.basis[self.index_of(&c)].mapv(|v| self.sigma.eval(a, b).to_complex() * v);
                let defect = (&ea.dot(eb) - &want)
                    .iter()
                    .map(|v| v.norm())
                    .fold(0.0, f64::max);
                if defect > 1e-12 {
                    return Err(EpsError::Domain(format!(
                        "basis does not realize σ at {a:?}, {b:?} (defect {defect:.2e})"
                    )));
                }
            }
        }
        Ok(())
    }

    /// Γ_{ε₁,ε₂} = {i : ε₁(i,j) = ε₂(i,j) ∀j}.
    pub fn gamma_set(&self, eps: &CommutationFactor) -> Vec<Element> {
        let es = self.eps_sigma();
        self.elems
            .iter()
            .filter(|i| self.elems.iter().all(|j| eps.eval(i, j) == es.eval(i, j)))
            .cloned()
            .collect()
    }

    /// R_{ε₁,ε₂} = {i : ε₁(i−j,j) = ε₂(i−j,j) ∀j}.
    pub fn r_set(&self, eps: &CommutationFactor) -> Vec<Element> {
        let es = self.eps_sigma();
        let g = &self.sigma.group;
        self.elems
            .iter()
            .filter(|i| {
                self.elems
                    .iter()
                    .all(|j| eps.eval(&g.sub(i, j), j) == es.eval(&g.sub(i, j), j))
            })
            .cloned()
            .collect()
    }

    /// ε-center = ⊕_{α ∈ Γ_{ε,ε_σ}} A^α, returned as matrices.
    pub fn center_basis(&self, eps: &CommutationFactor) -> Vec<Array2<Complex64>> {
        self.gamma_set(eps)
            .iter()
            .map(|a| self.basis[self.index_of(a)].clone())
            .collect()
    }

    /// Degrees on which ε-traces may be non-zero: R_{ε,ε_σ}; traces are
    /// exactly the linear forms supported there.
    pub fn trace_support(&self, eps: &CommutationFactor) -> Vec<Array2<Complex64>> {
        self.r_set(eps)
            .iter()
            .map(|a| self.basis[self.index_of(a)].clone())
            .collect()
    }

    /// Classify the homogeneous ε-derivations of a given degree by solving
    /// x_{α+β} = x_α + (εε_σ⁻¹)(|X|,α) x_β over the coordinates
    /// (exhaustive, |Supp| ≤ 16).
    pub fn derivation_space(
        &self,
        eps: &CommutationFactor,
        degree: &Element,
    ) -> Result<DerivationSpace, EpsError> {
        let n = self.elems.len();
        if n > 16 {
            return Err(EpsError::Domain(
                "derivation solve limited to |Supp| ≤ 16".into(),
            ));
        }
        let es = self.eps_sigma();
        let g = &self.sigma.group;
        let degree = g.reduce(degree);
        let c = |a: &Element| -> Complex64 {
            eps.eval(&degree, a)
                .mul(es.eval(&degree, a).inv())
                .to_complex()
        };
        let mut rows = Vec::new();
        for (ia, a) in self.elems.iter().enumerate() {
            for (ib, b) in self.elems.iter().enumerate() {
                let iab = self.index_of(&g.add(a, b));
                let mut row = vec![Complex64::new(0.0, 0.0); n];
                row[iab] += Complex64::new(1.0, 0.0);
                row[ia] -= Complex64::new(1.0, 0.0);
                row[ib] -= c(a);
                rows.push(row);
            }
        }
        let coords = nullspace(&rows, n, 1e-9);
        let inner_vec: Vec<Complex64> = self
            .elems
            .iter()
            .map(|a| Complex64::new(1.0, 0.0) - c(a))
            .collect();
        let inner_dim = if inner_vec.iter().any(|v| v.norm() > 1e-12) {
            1
        } else {
            0
        };
        Ok(DerivationSpace {
            degree,
            coords,
            inner_dim,
        })
    }

    /// Matrix images X(e_α) of the derivation with the given coordinates.
    pub fn derivation_images(
        &self,
        degree: &Element,
        coords: &[Complex64],
    ) -> Vec<Array2<Complex64>> {
        let g = &self.sigma.group;
        let degree = g.reduce(degree);
        self.elems
            .iter()
            .enumerate()
            .map(|(ia, a)| {
                let target = self.index_of(&g.add(&degree, a));
                self.basis[target]
                    .mapv(|v| self.sigma.eval(&degree, a).to_complex() * coords[ia] * v)
            })
            .collect()
    }
}
