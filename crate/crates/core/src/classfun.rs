//! Class functions over F_p: scalar products, induction, restriction,
//! constituents, linear characters and inflation.
//!
//! All groups involved in one computation are subgroups of a common top
//! group and carry their element embedding into it ([`GroupData`]), which is
//! what fusion maps are computed from.

use std::sync::Arc;

use crate::bitset::BitSet;
use crate::chartab::{character_table, inner_product, AnalysisContext, ModularCharacterTable};
use crate::construct::{quotient_by_set, Quotient};
use crate::error::{Error, Result};
use crate::field::PrimeField;
use crate::permcore::{ConjugacyData, PermGroup};

/// Constituent sets are bitmasks over table rows.
pub const MAX_IRREDUCIBLES: usize = 64;

/// A group, its classes, and its position inside a top group.
#[derive(Debug)]
pub struct GroupData {
    pub group: PermGroup,
    pub classes: Arc<ConjugacyData>,
    /// Element index here → element index in the top group (ascending).
    to_top: Vec<usize>,
    in_top: BitSet,
}

impl GroupData {
    /// A group that is its own top group.
    pub fn top(group: PermGroup) -> Arc<GroupData> {
        let n = group.order();
        Arc::new(GroupData {
            classes: Arc::new(ConjugacyData::new(&group)),
            to_top: (0..n).collect(),
            in_top: BitSet::full(n),
            group,
        })
    }

    /// The subgroup of `top` with element set `set`.
    pub fn subgroup(top: &PermGroup, set: &BitSet) -> Result<Arc<GroupData>> {
        let group = top.subgroup_from_elements(set)?;
        Ok(Arc::new(GroupData {
            classes: Arc::new(ConjugacyData::new(&group)),
            to_top: set.iter().collect(),
            in_top: set.clone(),
            group,
        }))
    }

    pub fn order(&self) -> usize {
        self.group.order()
    }

    /// Element set inside the top group.
    pub fn elements_in_top(&self) -> &BitSet {
        &self.in_top
    }

    pub fn to_top(&self, x: usize) -> usize {
        self.to_top[x]
    }

    /// Local index of a top-group element, if it lies here.
    pub fn from_top(&self, t: usize) -> Option<usize> {
        self.to_top.binary_search(&t).ok()
    }

    pub fn contains_group(&self, other: &GroupData) -> bool {
        other.in_top.universe() == self.in_top.universe() && other.in_top.is_subset(&self.in_top)
    }
}

/// Class map of `H ≤ K`: H-class index → K-class index.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FusionMap(pub Vec<usize>);

pub fn fusion(h: &GroupData, k: &GroupData) -> Result<FusionMap> {
    if !k.contains_group(h) {
        return Err(Error::NotSubgroup);
    }
    Ok(FusionMap(
        h.classes
            .reps()
            .iter()
            .map(|&x| {
                let local = k.from_top(h.to_top(x)).expect("H ≤ K");
                k.classes.class_of(local)
            })
            .collect(),
    ))
}

#[derive(Clone, Debug)]
pub struct ClassFunction {
    pub group: Arc<GroupData>,
    pub field: PrimeField,
    pub values: Vec<u64>,
    pub provenance: String,
}

impl ClassFunction {
    pub fn new(group: Arc<GroupData>, field: PrimeField, values: Vec<u64>, provenance: impl Into<String>) -> Self {
        assert_eq!(values.len(), group.classes.len());
        ClassFunction {
            group,
            field,
            values,
            provenance: provenance.into(),
        }
    }

    pub fn trivial(group: &Arc<GroupData>, field: PrimeField) -> Self {
        let r = group.classes.len();
        Self::new(group.clone(), field, vec![1; r], "trivial")
    }

    /// Row `i` of a character table of `group`.
    pub fn from_row(group: &Arc<GroupData>, table: &ModularCharacterTable, i: usize) -> Self {
        Self::new(group.clone(), table.field(), table.row(i).to_vec(), format!("irreducible {i}"))
    }

    pub fn degree(&self) -> u64 {
        self.values[0]
    }

    fn same_group(&self, other: &ClassFunction) -> Result<()> {
        if Arc::ptr_eq(&self.group, &other.group) && self.field == other.field {
            Ok(())
        } else {
            Err(Error::ClassFunction("class functions live on different groups".into()))
        }
    }
}

/// `⟨a, b⟩` lifted to the least nonnegative residue; exact for characters.
pub fn scalar_product(a: &ClassFunction, b: &ClassFunction) -> Result<u64> {
    a.same_group(b)?;
    Ok(inner_product(a.field, &a.group.classes, &a.values, &b.values))
}

/// Induction through the fusion map:
/// `θ^K(C) = |K| / (|H| |C|) · Σ_{c ↦ C} |c| θ(c)`.
pub fn induce(theta: &ClassFunction, k: &Arc<GroupData>) -> Result<ClassFunction> {
    let h = &theta.group;
    let f = theta.field;
    let fus = fusion(h, k)?;
    let mut sums = vec![0; k.classes.len()];
    for (c, &kc) in fus.0.iter().enumerate() {
        let term = f.mul(f.reduce(h.classes.size(c) as u64), theta.values[c]);
        sums[kc] = f.add(sums[kc], term);
    }
    let scale = f.mul(f.reduce(k.order() as u64), f.inv(f.reduce(h.order() as u64)));
    let values = sums
        .into_iter()
        .enumerate()
        .map(|(kc, s)| f.mul(f.mul(s, scale), f.inv(f.reduce(k.classes.size(kc) as u64))))
        .collect();
    Ok(ClassFunction::new(
        k.clone(),
        f,
        values,
        format!("induced from order {} ({})", h.order(), theta.provenance),
    ))
}

/// The literal averaging formula `θ^K(g) = |H|⁻¹ Σ_{x∈K} θ°(x g x⁻¹)`.
pub fn induce_naive(theta: &ClassFunction, k: &Arc<GroupData>) -> Result<ClassFunction> {
    let h = &theta.group;
    if !k.contains_group(h) {
        return Err(Error::NotSubgroup);
    }
    let f = theta.field;
    let kg = &k.group;
    let inv_h = f.inv(f.reduce(h.order() as u64));
    let values = k
        .classes
        .reps()
        .iter()
        .map(|&g| {
            let mut s = 0;
            for x in 0..kg.order() {
                let y = kg.mul(kg.mul(x, g), kg.inv(x));
                if let Some(local) = h.from_top(k.to_top(y)) {
                    s = f.add(s, theta.values[h.classes.class_of(local)]);
                }
            }
            f.mul(s, inv_h)
        })
        .collect();
    Ok(ClassFunction::new(k.clone(), f, values, format!("naive induction ({})", theta.provenance)))
}

pub fn restrict(chi: &ClassFunction, h: &Arc<GroupData>) -> Result<ClassFunction> {
    let fus = fusion(h, &chi.group)?;
    let values = fus.0.iter().map(|&c| chi.values[c]).collect();
    Ok(ClassFunction::new(
        h.clone(),
        chi.field,
        values,
        format!("restriction of {}", chi.provenance),
    ))
}

/// Multiplicities `⟨χ_i, chi⟩` against every table row.
pub fn decompose(chi: &ClassFunction, table: &ModularCharacterTable) -> Result<Vec<u64>> {
    if !Arc::ptr_eq(table.classes(), &chi.group.classes) || table.field() != chi.field {
        return Err(Error::ClassFunction("table belongs to another group".into()));
    }
    Ok(table.rows().iter().map(|row| table.inner(row, &chi.values)).collect())
}

/// `Cons(chi)` as a bitmask over table rows.
pub fn constituents(chi: &ClassFunction, table: &ModularCharacterTable) -> Result<u64> {
    if table.len() > MAX_IRREDUCIBLES {
        return Err(Error::TooManyIrreducibles {
            r: table.len(),
            limit: MAX_IRREDUCIBLES,
        });
    }
    Ok(decompose(chi, table)?
        .into_iter()
        .enumerate()
        .filter(|(_, m)| *m > 0)
        .fold(0u64, |mask, (i, _)| mask | 1 << i))
}

/// Whether `psi` restricts irreducibly to `n`.
pub fn is_irreducible_restriction(psi: &ClassFunction, n: &Arc<GroupData>) -> Result<bool> {
    let res = restrict(psi, n)?;
    Ok(scalar_product(&res, &res)? == 1)
}

/// Linear characters of `h`, obtained by inflating the character table of
/// the abelianization `h/h'`. Sorted lexicographically by values, so the
/// trivial character comes first.
pub fn linear_characters(ctx: &AnalysisContext, h: &Arc<GroupData>) -> Result<Vec<ClassFunction>> {
    let g = &h.group;
    let derived = g.derived_set(&g.all_elements());
    let q = quotient_by_set(g, &derived)?;
    let qdata = GroupData::top(q.group.clone());
    let table = character_table(ctx, &qdata.group, qdata.classes.clone())?;
    let mut out = (0..table.len())
        .map(|i| inflate(&ClassFunction::from_row(&qdata, &table, i), h, &q))
        .collect::<Result<Vec<_>>>()?;
    out.sort_by(|a, b| a.values.cmp(&b.values));
    for (i, chi) in out.iter_mut().enumerate() {
        chi.provenance = format!("linear character {i} of order-{} subgroup", h.order());
    }
    Ok(out)
}

/// Pulls a class function of `G/N` back to `G`.
pub fn inflate(chi_bar: &ClassFunction, g: &Arc<GroupData>, quotient: &Quotient) -> Result<ClassFunction> {
    let qd = &chi_bar.group;
    if qd.order() != quotient.group.order()
        || quotient.images().len() != g.order()
        || qd.group.generators() != quotient.group.generators()
    {
        return Err(Error::ClassFunction("quotient map does not match the class function".into()));
    }
    let values = g
        .classes
        .reps()
        .iter()
        .map(|&x| chi_bar.values[qd.classes.class_of(quotient.map(x))])
        .collect();
    Ok(ClassFunction::new(
        g.clone(),
        chi_bar.field,
        values,
        format!("inflation of {}", chi_bar.provenance),
    ))
}

/// Irreducible characters of a group with a freshly computed table.
pub fn irreducibles(ctx: &AnalysisContext, h: &Arc<GroupData>) -> Result<(ModularCharacterTable, Vec<ClassFunction>)> {
    let table = character_table(ctx, &h.group, h.classes.clone())?;
    let chars = (0..table.len()).map(|i| ClassFunction::from_row(h, &table, i)).collect();
    Ok((table, chars))
}
