use crate::EpsError;

/// Group element as an integer tuple, one coordinate per generator,
/// canonically reduced modulo the generator orders.
pub type Element = Vec<i64>;

/// Finitely generated abelian group Γ = Z_{m_1} × … × Z_{m_r}, with
/// m_r = 0 denoting an infinite cyclic factor.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GradingGroup {
    pub orders: Vec<u64>,
}

impl GradingGroup {
    pub fn new(orders: Vec<u64>) -> Self {
        assert!(!orders.is_empty(), "group needs at least one generator");
        GradingGroup { orders }
    }

    pub fn rank(&self) -> usize {
        self.orders.len()
    }

    pub fn is_finite(&self) -> bool {
        self.orders.iter().all(|&m| m > 0)
    }

    pub fn size(&self) -> Option<usize> {
        self.orders.iter().try_fold(
            1usize,
            |acc, &m| if m == 0 { None } else { Some(acc * m as usize) },
        )
    }

    pub fn reduce(&self, e: &[i64]) -> Element {
        assert_eq!(e.len(), self.rank(), "element rank mismatch");
        e.iter()
            .zip(&self.orders)
            .map(|(&x, &m)| if m == 0 { x } else { x.rem_euclid(m as i64) })
            .collect()
    }

    pub fn zero(&self) -> Element {
        vec![0; self.rank()]
    }

    pub fn generator(&self, r: usize) -> Element {
        let mut e = self.zero();
        e[r] = 1;
        e
    }

    pub fn add(&self, a: &[i64], b: &[i64]) -> Element {
        self.reduce(&a.iter().zip(b).map(|(x, y)| x + y).collect::<Vec<_>>())
    }

    pub fn sub(&self, a: &[i64], b: &[i64]) -> Element {
        self.reduce(&a.iter().zip(b).map(|(x, y)| x - y).collect::<Vec<_>>())
    }

    pub fn neg(&self, a: &[i64]) -> Element {
        self.reduce(&a.iter().map(|x| -x).collect::<Vec<_>>())
    }

    /// All elements, in lexicographic coordinate order. Finite groups only.
    pub fn elements(&self) -> Result<Vec<Element>, EpsError> {
        let n = self
            .size()
            .ok_or_else(|| EpsError::Domain("enumeration requires a finite group".into()))?;
        let mut out = Vec::with_capacity(n);
        let mut cur = self.zero();
        loop {
            out.push(cur.clone());
            let mut k = self.rank();
            loop {
                if k == 0 {
                    return Ok(out);
                }
                k -= 1;
                cur[k] += 1;
                if cur[k] < self.orders[k] as i64 {
                    break;
                }
                cur[k] = 0;
            }
        }
    }
}

impl std::str::FromStr for GradingGroup {
    type Err = EpsError;

    /// Parse "Z2xZ2", "Z4xZ", "Z3" etc. ("Z" alone = infinite cyclic).
    fn from_str(s: &str) -> Result<Self, EpsError> {
        let mut orders = Vec::new();
        for tok in s.split('x') {
            let tok = tok.trim();
            let rest = tok
                .strip_prefix('Z')
                .ok_or_else(|| EpsError::Domain(format!("bad group factor `{tok}`")))?;
            if rest.is_empty() {
                orders.push(0);
            } else {
                let m: u64 = rest
                    .parse()
                    .map_err(|_| EpsError::Domain(format!("bad group factor `{tok}`")))?;
                if m == 1 {
                    return Err(EpsError::Domain("Z1 factor is trivial; drop it".into()));
                }
                orders.push(m);
            }
        }
        if orders.is_empty() {
            return Err(EpsError::Domain("empty group spec".into()));
        }
        Ok(GradingGroup::new(orders))
    }
}
