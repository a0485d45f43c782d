use crate::group::{Element, GradingGroup};
use crate::root::Root;
use crate::EpsError;
use std::collections::HashMap;

fn gcd(a: u64, b: u64) -> u64 {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

/// Commutation factor ε: Γ×Γ → K*, stored by its generator table
/// ε(e_r, e_s) and extended biadditively:
/// ε(i,j) = ∏_{r,s} ε(e_r,e_s)^{i_r j_s}.
#[derive(Debug, Clone)]
pub struct CommutationFactor {
    pub group: GradingGroup,
    pub gen_table: Vec<Vec<Root>>,
}

impl CommutationFactor {
    pub fn new(group: GradingGroup, gen_table: Vec<Vec<Root>>) -> Result<Self, EpsError> {
        let r = group.rank();
        if gen_table.len() != r || gen_table.iter().any(|row| row.len() != r) {
            return Err(EpsError::Domain(format!("generator table must be {r}x{r}")));
        }
        Ok(CommutationFactor { group, gen_table })
    }

    /// Γ = Z₂ with ε(1,1) = ε₁; ε₁ = −1 is the super factor.
    pub fn z2(eps1: i64) -> Self {
        CommutationFactor {
            group: GradingGroup::new(vec![2]),
            gen_table: vec![vec![Root::from_sign(eps1)]],
        }
    }

    /// Γ = Z₂×Z₂, general form ε(i,j) = ε₁^{i₁j₁} ε₂^{i₂j₂} ε₃^{i₁j₂−i₂j₁}.
    pub fn z2z2(eps1: i64, eps2: i64, eps3: i64) -> Self {
        CommutationFactor {
            group: GradingGroup::new(vec![2, 2]),
            gen_table: vec![
                vec![Root::from_sign(eps1), Root::from_sign(eps3)],
                vec![Root::from_sign(eps3).inv(), Root::from_sign(eps2)],
            ],
        }
    }

    pub fn eval(&self, i: &[i64], j: &[i64]) -> Root {
        let i = self.group.reduce(i);
        let j = self.group.reduce(j);
        let mut out = Root::one();
        for (r, &ir) in i.iter().enumerate() {
            for (s, &js) in j.iter().enumerate() {
                if ir != 0 && js != 0 {
                    out = out.mul(self.gen_table[r][s].pow(ir.wrapping_mul(js)));
                }
            }
        }
        out
    }

    /// Signature ψ_ε(i) = ε(i,i); a homomorphism Γ → {±1} for valid factors.
    pub fn psi(&self, i: &[i64]) -> Root {
        self.eval(i, i)
    }

    /// Proper iff ψ_ε ≡ 1, decided on generators (ψ is a homomorphism once
    /// the skew axiom holds).
    pub fn is_proper(&self) -> bool {
        (0..self.group.rank()).all(|r| self.psi(&self.group.generator(r)).is_one())
    }
}

/// Validation report for a commutation factor. `violations` is empty for a
/// valid factor; properness is reported alongside.
#[derive(Debug, Clone)]
pub struct CfReport {
    pub violations: Vec<String>,
    pub proper: bool,
}

impl CfReport {
    pub fn valid(&self) -> bool {
        self.violations.is_empty()
    }
}

/// Check the commutation-factor axioms on a generator-spanning sample plus
/// the order constraints: odd m_r forces ε(e_r,e_r)=1, even m_r forces
/// ε(e_r,e_r)=±1, and ε(e_r,e_s)^{gcd(m_r,m_s)}=1.
pub fn cf_validate(cf: &CommutationFactor) -> CfReport {
    let g = &cf.group;
    let r = g.rank();
    let mut violations = Vec::new();

    for a in 0..r {
        for b in 0..r {
            let v = cf.gen_table[a][b];
            if !v.mul(cf.gen_table[b][a]).is_one() {
                violations.push(format!(
                    "skew axiom: ε(e_{a},e_{b})ε(e_{b},e_{a}) = {} ≠ 1",
                    v.mul(cf.gen_table[b][a])
                ));
            }
            let (ma, mb) = (g.orders[a], g.orders[b]);
            let m = if ma == 0 {
                mb
            } else if mb == 0 {
                ma
            } else {
                gcd(ma, mb)
            };
            if m > 0 && !v.pow(m as i64).is_one() {
                violations.push(format!(
                    "order constraint: ε(e_{a},e_{b})^{m} = {} ≠ 1",
                    v.pow(m as i64)
                ));
            }
        }
        let d = cf.gen_table[a][a];
        match g.orders[a] {
            0 => {}
            m if m % 2 == 1 => {
                if !d.is_one() {
                    violations.push(format!(
                        "odd-order generator e_{a} needs ε(e_{a},e_{a}) = 1, got {d}"
                    ));
                }
            }
            _ => {
                if d.as_sign().is_none() {
                    violations.push(format!(
                        "even-order generator e_{a} needs ε(e_{a},e_{a}) = ±1, got {d}"
                    ));
                }
            }
        }
    }

    // biadditivity + skew on a sample spanning sums of up to two generators
    let mut sample: Vec<Element> = vec![g.zero()];
    for a in 0..r {
        sample.push(g.generator(a));
        sample.push(g.neg(&g.generator(a)));
        for b in a..r {
            sample.push(g.add(&g.generator(a), &g.generator(b)));
        }
    }
    for i in &sample {
        for j in &sample {
            if !cf.eval(i, j).mul(cf.eval(j, i)).is_one() {
                violations.push(format!("skew axiom fails at {i:?}, {j:?}"));
            }
            for k in &sample {
                let lhs = cf.eval(&g.add(i, j), k);
                if lhs != cf.eval(i, k).mul(cf.eval(j, k)) {
                    violations.push(format!("first-slot additivity fails at {i:?}+{j:?}, {k:?}"));
                }
                let rhs = cf.eval(i, &g.add(j, k));
                if rhs != cf.eval(i, j).mul(cf.eval(i, k)) {
                    violations.push(format!(
                        "second-slot additivity fails at {i:?}, {j:?}+{k:?}"
                    ));
                }
            }
        }
    }

    let proper = violations.is_empty() && cf.is_proper();
    CfReport { violations, proper }
}

/// Factor set (multiplier) σ: Γ×Γ → K* on a finite group, stored as a full
/// table. σ(i, j+k) σ(j,k) = σ(i,j) σ(i+j,k).
#[derive(Debug, Clone)]
pub struct FactorSet {
    pub group: GradingGroup,
    table: HashMap<(Element, Element), Root>,
}

impl FactorSet {
    pub fn from_fn(
        group: GradingGroup,
        f: impl Fn(&Element, &Element) -> Root,
    ) -> Result<Self, EpsError> {
        let elems = group.elements()?;
        let mut table = HashMap::new();
        for i in &elems {
            for j in &elems {
                table.insert((i.clone(), j.clone()), f(i, j));
            }
        }
        Ok(FactorSet { group, table })
    }

    pub fn trivial(group: GradingGroup) -> Result<Self, EpsError> {
        Self::from_fn(group, |_, _| Root::one())
    }

    /// σ(i,j) = (−1)^{Σ_{p<q} i_p j_q} on (Z₂)ⁿ; the crossed product is the
    /// complex Clifford algebra Cl(n).
    pub fn clifford(n: usize) -> Self {
        let group = GradingGroup::new(vec![2; n]);
        Self::from_fn(group, |i, j| {
            let mut s = 0;
            for p in 0..n {
                for q in (p + 1)..n {
                    s += i[p] * j[q];
                }
            }
            Root::minus_one().pow(s)
        })
        .expect("finite group")
    }

    /// Real variant with diagonal signs η: σ(i,j) = (−1)^{Σ_{p<q} i_p j_q}
    /// ∏_p η_p^{i_p j_p} on (Z₂)ⁿ, giving γ_p² = η_p·e₀.
    pub fn clifford_signed(eta: &[i64]) -> Self {
        let n = eta.len();
        let group = GradingGroup::new(vec![2; n]);
        let eta: Vec<Root> = eta.iter().map(|&s| Root::from_sign(s)).collect();
        Self::from_fn(group, |i, j| {
            let mut out = Root::one();
            for p in 0..n {
                for q in (p + 1)..n {
                    out = out.mul(Root::minus_one().pow(i[p] * j[q]));
                }
                out = out.mul(eta[p].pow(i[p] * j[p]));
            }
            out
        })
        .expect("finite group")
    }

    /// The factor set of the fine (Pauli) grading of M₂ over Z₂×Z₂:
    /// e_{(1,0)} = τ₁, e_{(0,1)} = τ₂, e_{(1,1)} = τ₃.
    pub fn pauli() -> Self {
        let group = GradingGroup::new(vec![2, 2]);
        Self::from_fn(group, |i, j| {
            let key = ((i[0], i[1]), (j[0], j[1]));
            match key {
                ((1, 0), (0, 1)) | ((1, 1), (1, 0)) | ((0, 1), (1, 1)) => Root::i_unit(),
                ((0, 1), (1, 0)) | ((1, 0), (1, 1)) | ((1, 1), (0, 1)) => Root::i_unit().inv(),
                _ => Root::one(),
            }
        })
        .expect("finite group")
    }

    pub fn eval(&self, i: &[i64], j: &[i64]) -> Root {
        let key = (self.group.reduce(i), self.group.reduce(j));
        *self.table.get(&key).expect("factor set table is total")
    }

    /// Exhaustive cocycle check (|Γ| ≤ 64).
    pub fn validate(&self) -> Result<(), EpsError> {
        let elems = self.group.elements()?;
        if elems.len() > 64 {
            return Err(EpsError::Domain(format!(
                "cocycle check limited to |Γ| ≤ 64, got {}",
                elems.len()
            )));
        }
        for i in &elems {
            for j in &elems {
                for k in &elems {
                    let lhs = self.eval(i, &self.group.add(j, k)).mul(self.eval(j, k));
                    let rhs = self.eval(i, j).mul(self.eval(&self.group.add(i, j), k));
                    if lhs != rhs {
                        return Err(EpsError::Domain(format!(
                            "factor-set identity fails at {i:?}, {j:?}, {k:?}: {lhs} ≠ {rhs}"
                        )));
                    }
                }
            }
        }
        Ok(())
    }
}

/// ε_σ(i,j) = σ(i,j) σ(j,i)⁻¹: the proper commutation factor of a
/// multiplier, returned by its generator table.
pub fn eps_from_sigma(sigma: &FactorSet) -> CommutationFactor {
    let g = sigma.group.clone();
    let r = g.rank();
    let gen_table = (0..r)
        .map(|a| {
            (0..r)
                .map(|b| {
                    let (ea, eb) = (g.generator(a), g.generator(b));
                    sigma.eval(&ea, &eb).mul(sigma.eval(&eb, &ea).inv())
                })
                .collect()
        })
        .collect();
    CommutationFactor {
        group: g,
        gen_table,
    }
}

/// Representative multiplier of a proper commutation factor:
/// σ(i,j) = ∏_{r<s} ε(e_r,e_s)^{i_r j_s}. Round-trip ε → σ → ε_σ is the
/// identity. Non-proper input is a domain error.
pub fn sigma_from_eps(cf: &CommutationFactor) -> Result<FactorSet, EpsError> {
    let report = cf_validate(cf);
    if !report.valid() {
        return Err(EpsError::Domain(format!(
            "invalid commutation factor: {}",
            report.violations.join("; ")
        )));
    }
    if !report.proper {
        return Err(EpsError::Domain(
            "multiplier construction needs a proper commutation factor".into(),
        ));
    }
    let rank = cf.group.rank();
    let gen = cf.gen_table.clone();
    FactorSet::from_fn(cf.group.clone(), move |i, j| {
        let mut out = Root::one();
        for r in 0..rank {
            for s in (r + 1)..rank {
                if i[r] != 0 && j[s] != 0 {
                    out = out.mul(gen[r][s].pow(i[r] * j[s]));
                }
            }
        }
        out
    })
}
