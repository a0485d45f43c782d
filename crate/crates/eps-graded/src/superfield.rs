use crate::EpsError;
use moyal_core::{Complex, Field, MoyalParams};

/// Element (a, b) of the Moyal superalgebra: even part a, odd part b,
/// deformation parameter α. The product is
/// (a,b)·(c,d) = (a⋆c + α b⋆d, a⋆d + b⋆c).
#[derive(Debug, Clone, PartialEq)]
pub struct SuperField {
    pub even: Field,
    pub odd: Field,
    pub alpha: f64,
}

impl SuperField {
    pub fn new(even: Field, odd: Field, alpha: f64) -> Result<Self, EpsError> {
        if even.params != odd.params || even.trunc != odd.trunc {
            return Err(EpsError::Domain(
                "even/odd parts live on different truncations".into(),
            ));
        }
        Ok(SuperField { even, odd, alpha })
    }

    pub fn zero(params: MoyalParams, trunc: usize, alpha: f64) -> Self {
        SuperField {
            even: Field::zero(params, trunc),
            odd: Field::zero(params, trunc),
            alpha,
        }
    }

    /// The unit (1, 0).
    pub fn one(params: MoyalParams, trunc: usize, alpha: f64) -> Self {
        SuperField {
            even: Field::one(params, trunc),
            odd: Field::zero(params, trunc),
            alpha,
        }
    }

    pub fn from_even(f: Field, alpha: f64) -> Self {
        let z = Field::zero(f.params, f.trunc);
        SuperField {
            even: f,
            odd: z,
            alpha,
        }
    }

    pub fn from_odd(f: Field, alpha: f64) -> Self {
        let z = Field::zero(f.params, f.trunc);
        SuperField {
            even: z,
            odd: f,
            alpha,
        }
    }

    fn check_compat(&self, o: &Self) -> Result<(), EpsError> {
        if self.alpha != o.alpha {
            return Err(EpsError::Domain(format!(
                "superalgebra parameter mismatch: α = {} vs {}",
                self.alpha, o.alpha
            )));
        }
        if self.even.params != o.even.params || self.even.trunc != o.even.trunc {
            return Err(EpsError::Domain(
                "superfields live on different truncations".into(),
            ));
        }
        Ok(())
    }

    pub fn product(&self, o: &Self) -> Result<Self, EpsError> {
        self.check_compat(o)?;
        let even = self
            .even
            .star(&o.even)?
            .add(&self.odd.star(&o.odd)?.scale_re(self.alpha))?;
        let odd = self.even.star(&o.odd)?.add(&self.odd.star(&o.even)?)?;
        Ok(SuperField {
            even,
            odd,
            alpha: self.alpha,
        })
    }

    /// Involution (a,b)* = (a†, b†).
    pub fn adjoint(&self) -> Self {
        SuperField {
            even: self.even.adjoint(),
            odd: self.odd.adjoint(),
            alpha: self.alpha,
        }
    }

    pub fn add(&self, o: &Self) -> Result<Self, EpsError> {
        self.check_compat(o)?;
        Ok(SuperField {
            even: self.even.add(&o.even)?,
            odd: self.odd.add(&o.odd)?,
            alpha: self.alpha,
        })
    }

    pub fn sub(&self, o: &Self) -> Result<Self, EpsError> {
        self.check_compat(o)?;
        Ok(SuperField {
            even: self.even.sub(&o.even)?,
            odd: self.odd.sub(&o.odd)?,
            alpha: self.alpha,
        })
    }

    pub fn scale(&self, c: Complex) -> Self {
        SuperField {
            even: self.even.scale(c),
            odd: self.odd.scale(c),
            alpha: self.alpha,
        }
    }

    pub fn scale_re(&self, c: f64) -> Self {
        self.scale(Complex::new(c, 0.0))
    }

    /// Graded bracket, closed form:
    /// [p,q] = ([p₀,q₀]⋆ + α{p₁,q₁}⋆, [p₀,q₁]⋆ + [p₁,q₀]⋆).
    pub fn bracket(&self, o: &Self) -> Result<Self, EpsError> {
        self.check_compat(o)?;
        let even = self
            .even
            .commutator(&o.even)?
            .add(&self.odd.anticommutator(&o.odd)?.scale_re(self.alpha))?;
        let odd = self
            .even
            .commutator(&o.odd)?
            .add(&self.odd.commutator(&o.even)?)?;
        Ok(SuperField {
            even,
            odd,
            alpha: self.alpha,
        })
    }

    /// Same bracket via the graded commutator of the product,
    /// pq − (−1)^{|p||q|}qp summed over homogeneous parts; used as an
    /// internal consistency oracle for `bracket`.
    pub fn bracket_graded(&self, o: &Self) -> Result<Self, EpsError> {
        self.check_compat(o)?;
        let a = self.alpha;
        let parts_p = [
            (0, SuperField::from_even(self.even.clone(), a)),
            (1, SuperField::from_odd(self.odd.clone(), a)),
        ];
        let parts_q = [
            (0, SuperField::from_even(o.even.clone(), a)),
            (1, SuperField::from_odd(o.odd.clone(), a)),
        ];
        let mut out = SuperField::zero(self.even.params, self.even.trunc, a);
        for (dp, p) in &parts_p {
            for (dq, q) in &parts_q {
                let sign = if dp * dq % 2 == 1 { 1.0 } else { -1.0 };
                out = out.add(&p.product(q)?.add(&q.product(p)?.scale_re(sign))?)?;
            }
        }
        Ok(out)
    }

    /// Trace tr(a,b) = ∫ a.
    pub fn trace(&self) -> Complex {
        self.even.integral()
    }

    pub fn norm_inf(&self) -> f64 {
        self.even.norm_inf().max(self.odd.norm_inf())
    }

    pub fn norm_inf_interior(&self, margin: usize) -> f64 {
        self.even
            .norm_inf_interior(margin)
            .max(self.odd.norm_inf_interior(margin))
    }
}
