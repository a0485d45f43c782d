use crate::factor::FactorSet;
use crate::group::Element;
use crate::root::Root;
use crate::EpsError;
use std::collections::HashMap;

/// Crossed product K ⋊_σ Γ: basis {e_i}_{i∈Γ} with e_i·e_j = σ(i,j) e_{i+j}.
#[derive(Debug, Clone)]
pub struct CrossedProduct {
    pub elems: Vec<Element>,
    index: HashMap<Element, usize>,
    /// table[i][j] = (index of i+j, σ(i,j))
    pub table: Vec<Vec<(usize, Root)>>,
}

impl CrossedProduct {
    pub fn index_of(&self, e: &Element) -> Option<usize> {
        self.index.get(e).copied()
    }

    /// e_i · e_j as (basis index, scalar).
    pub fn mul(&self, i: usize, j: usize) -> (usize, Root) {
        self.table[i][j]
    }
}

/// Build the structure-constant table of K ⋊_σ Γ and verify associativity
/// exhaustively (|Γ| ≤ 64). An associativity failure means σ is not a
/// factor set.
pub fn crossed_product(sigma: &FactorSet) -> Result<CrossedProduct, EpsError> {
    let elems = sigma.group.elements()?;
    if elems.len() > 64 {
        return Err(EpsError::Domain(format!(
            "crossed product limited to |Γ| ≤ 64, got {}",
            elems.len()
        )));
    }
    let index: HashMap<Element, usize> = elems
        .iter()
        .cloned()
        .enumerate()
        .map(|(k, e)| (e, k))
        .collect();
    let table: Vec<Vec<(usize, Root)>> = elems
        .iter()
        .map(|i| {
            elems
                .iter()
                .map(|j| (index[&sigma.group.add(i, j)], sigma.eval(i, j)))
                .collect()
        })
        .collect();
    let cp = CrossedProduct {
        elems: elems.clone(),
        index,
        table,
    };

    for i in 0..elems.len() {
        for j in 0..elems.len() {
            for k in 0..elems.len() {
                let (ij, s_ij) = cp.mul(i, j);
                let (l1, s1) = cp.mul(ij, k);
                let (jk, s_jk) = cp.mul(j, k);
                let (l2, s2) = cp.mul(i, jk);
                if l1 != l2 || s_ij.mul(s1) != s_jk.mul(s2) {
                    return Err(EpsError::Domain(format!(
                        "crossed product not associative at {:?}, {:?}, {:?}",
                        elems[i], elems[j], elems[k]
                    )));
                }
            }
        }
    }
    Ok(cp)
}
