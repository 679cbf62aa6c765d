//! Conditions under which almost monomiality passes from `G` to a normal
//! subgroup `N`:
//! (i) every irreducible of `G` restricts irreducibly to `N`;
//! (ii) for every subgroup `H`, linear `λ` of `H` and irreducible `φ` with
//! `⟨λ^G, φ⟩ = 0`, the characters `λ^{NH}` and `(φ_N)^{NH}` are orthogonal.

use std::sync::Arc;

use crate::bitset::BitSet;
use crate::classfun::{induce, is_irreducible_restriction, restrict, scalar_product, GroupData};
use crate::error::{Error, Result};

use super::Analysis;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DescentConditions {
    pub restricts_irreducibly: bool,
    pub induced_orthogonal: bool,
    /// Irreducibles of `G` whose restriction to `N` is reducible.
    pub reducible: Vec<usize>,
    /// `(subgroup class id, linear index, irreducible index)` triples
    /// violating the orthogonality condition.
    pub violations: Vec<(usize, usize, usize)>,
}

impl Analysis {
    pub fn descent_conditions(&self, n: &BitSet) -> Result<DescentConditions> {
        let g = self.group();
        if !g.is_closed(n) {
            return Err(Error::NotSubgroup);
        }
        if !g.is_normal_set(n) {
            return Err(Error::NotNormal);
        }
        let n_data = GroupData::subgroup(g, n)?;
        let irr = self.irreducibles();
        let mut reducible = Vec::new();
        for (i, chi) in irr.iter().enumerate() {
            if !is_irreducible_restriction(chi, &n_data)? {
                reducible.push(i);
            }
        }
        let restricted = irr
            .iter()
            .map(|chi| restrict(chi, &n_data))
            .collect::<Result<Vec<_>>>()?;
        let mut violations = Vec::new();
        for class_id in 0..self.lattice().classes().len() {
            let li = self.linear_inductions(class_id)?;
            let h = li.group.elements_in_top();
            let nh: Arc<GroupData> = GroupData::subgroup(g, &g.product_set(n, h))?;
            let mut phi_up = vec![None; irr.len()];
            for (l, lam) in li.characters.iter().enumerate() {
                let d = &li.decompositions[l];
                let lam_up = induce(lam, &nh)?;
                for phi in (0..irr.len()).filter(|&i| d[i] == 0) {
                    if phi_up[phi].is_none() {
                        phi_up[phi] = Some(induce(&restricted[phi], &nh)?);
                    }
                    let up = phi_up[phi].as_ref().expect("filled");
                    if scalar_product(&lam_up, up)? != 0 {
                        violations.push((class_id, l, phi));
                    }
                }
            }
        }
        Ok(DescentConditions {
            restricts_irreducibly: reducible.is_empty(),
            induced_orthogonal: violations.is_empty(),
            reducible,
            violations,
        })
    }
}
