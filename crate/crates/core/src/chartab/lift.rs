use std::fmt;

use super::{AnalysisContext, ModularCharacterTable};
use crate::error::{Error, Result};
use crate::permcore::PermGroup;

/// A character value written as `Σ_k coeffs[k] ζ^k` with `ζ = exp(2πi/e)`.
///
/// The coefficients are eigenvalue multiplicities, hence nonnegative and
/// summing to the degree.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CyclotomicValue {
    pub e: u64,
    pub coeffs: Vec<u64>,
}

impl CyclotomicValue {
    /// Image under `ζ ↦ ω` in F_p.
    pub fn reduce(&self, ctx: &AnalysisContext) -> u64 {
        let f = ctx.field();
        self.coeffs.iter().enumerate().fold(0, |acc, (k, &c)| {
            f.add(acc, f.mul(f.reduce(c), f.pow(ctx.omega(), k as u64)))
        })
    }
}

impl fmt::Display for CyclotomicValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (k, &c) in self.coeffs.iter().enumerate() {
            if c == 0 {
                continue;
            }
            if !first {
                f.write_str(" + ")?;
            }
            first = false;
            if k == 0 {
                write!(f, "{c}")?;
            } else {
                write!(f, "{c}*z^{k}")?;
            }
        }
        if first {
            f.write_str("0")?;
        }
        Ok(())
    }
}

/// Lifts `χ_i(g_j)`: `m_k = e⁻¹ Σ_t χ(g^t) ω^{−tk}` is the multiplicity of
/// the eigenvalue `ζ^k` of `g` in the representation affording `χ_i`.
pub fn lift_value(
    ctx: &AnalysisContext,
    g: &PermGroup,
    table: &ModularCharacterTable,
    i: usize,
    j: usize,
) -> Result<CyclotomicValue> {
    let f = ctx.field();
    let e = ctx.exponent();
    let cd = table.classes();
    let rep = cd.rep(j);
    // χ(g^t) for t = 0..e.
    let mut powers = Vec::with_capacity(e as usize);
    let mut y = g.identity();
    for _ in 0..e {
        powers.push(table.value(i, cd.class_of(y)));
        y = g.mul(y, rep);
    }
    let inv_e = f.inv(f.reduce(e));
    let omega_inv = f.inv(ctx.omega());
    let degree = table.degree(i);
    let mut coeffs = Vec::with_capacity(e as usize);
    for k in 0..e {
        let step = f.pow(omega_inv, k);
        let mut w = 1;
        let mut s = 0;
        for &v in &powers {
            s = f.add(s, f.mul(v, w));
            w = f.mul(w, step);
        }
        let m = f.mul(s, inv_e);
        if m > degree {
            return Err(Error::CharacterTable(format!(
                "lifted multiplicity {m} exceeds degree {degree}"
            )));
        }
        coeffs.push(m);
    }
    let lifted = CyclotomicValue { e, coeffs };
    if lifted.coeffs.iter().sum::<u64>() != degree || lifted.reduce(ctx) != table.value(i, j) {
        return Err(Error::CharacterTable("cyclotomic lift does not reduce back".into()));
    }
    Ok(lifted)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::chartab::character_table;
    use crate::construct::*;
    use crate::permcore::{ConjugacyData, DEFAULT_MAX_ORDER as CAP};
    use std::sync::Arc;

    #[test]
    fn lifts_of_small_tables() {
        for g in [symmetric(3, CAP).unwrap(), sl2_3(), cyclic(5, CAP).unwrap()] {
            let ctx = AnalysisContext::for_group(&g);
            let t = character_table(&ctx, &g, Arc::new(ConjugacyData::new(&g))).unwrap();
            for i in 0..t.len() {
                let at_one = lift_value(&ctx, &g, &t, i, 0).unwrap();
                assert_eq!(at_one.coeffs[0], t.degree(i));
                for j in 0..t.len() {
                    let v = lift_value(&ctx, &g, &t, i, j).unwrap();
                    if t.degree(i) == 1 {
                        assert_eq!(v.coeffs.iter().filter(|&&c| c == 1).count(), 1);
                    }
                }
            }
        }
    }

    #[test]
    fn s3_degree_two_at_three_cycle() {
        let g = symmetric(3, CAP).unwrap();
        let ctx = AnalysisContext::for_group(&g);
        let t = character_table(&ctx, &g, Arc::new(ConjugacyData::new(&g))).unwrap();
        let cd = t.classes();
        let three = (0..cd.len()).find(|&c| cd.element_order(c) == 3).unwrap();
        let v = lift_value(&ctx, &g, &t, 2, three).unwrap();
        // e = 6: ζ₃ = ζ₆², ζ₃² = ζ₆⁴.
        assert_eq!(v.coeffs, vec![0, 0, 1, 0, 1, 0]);
        assert_eq!(v.to_string(), "1*z^2 + 1*z^4");
        // −1 in F_7.
        assert_eq!(t.value(2, three), 6);
    }
}
