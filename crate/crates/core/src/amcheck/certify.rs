//! Independent re-validation of a property report.
//!
//! Witness subgroups are rebuilt from their generators, their characters are
//! recomputed, and every induced character is evaluated with the literal
//! averaging formula rather than the fusion shortcut used by the search.

use std::collections::{BTreeSet, HashMap};

use crate::bitset::BitSet;
use crate::chartab::{character_table, AnalysisContext};
use crate::classfun::{
    decompose, induce_naive, is_irreducible_restriction, linear_characters, ClassFunction, GroupData,
};
use crate::error::{Error, Result};
use crate::permcore::{PermGroup, Permutation};
use crate::subgroups::enumerate_with_limit;

use super::{CharacterKind, Limits, Property, PropertyReport, SubgroupRef};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CertifyOutcome {
    pub valid: bool,
    pub problems: Vec<String>,
}

fn subgroup_set(g: &PermGroup, sub: &SubgroupRef) -> Result<BitSet> {
    let mut gens = Vec::with_capacity(sub.generators.len());
    for s in &sub.generators {
        let p = Permutation::parse_cycles(g.degree(), s)?;
        let idx = g
            .index_of(&p)
            .ok_or_else(|| Error::Certificate(format!("generator {s} is not in the group")))?;
        gens.push(idx);
    }
    Ok(g.closure(&gens))
}

pub fn certify(group: &PermGroup, report: &PropertyReport, limits: Limits) -> Result<CertifyOutcome> {
    if report.group.order != group.order() || report.group.degree != group.degree() {
        return Err(Error::Certificate(format!(
            "report is for a group of order {} on {} points, not order {} on {}",
            report.group.order,
            report.group.degree,
            group.order(),
            group.degree()
        )));
    }
    let ctx = AnalysisContext::for_group(group);
    let top = GroupData::top(group.clone());
    let table = character_table(&ctx, group, top.classes.clone())?;
    let r = table.len();
    if report.group.num_irreducibles != r {
        return Err(Error::Certificate(format!(
            "report claims {} irreducibles, the group has {r}",
            report.group.num_irreducibles
        )));
    }
    let lattice = enumerate_with_limit(group, limits.subgroup_limit)?;

    let mut problems = Vec::new();
    if !report.verdict {
        problems.push("report verdict is false".to_string());
    }

    let normal = match (report.property, &report.normal_subgroup) {
        (Property::RelativeAm, Some(n)) => {
            let set = subgroup_set(group, n)?;
            if !group.is_normal_set(&set) {
                return Err(Error::Certificate("normal subgroup is not normal".into()));
            }
            Some(GroupData::subgroup(group, &set)?)
        }
        (Property::RelativeAm, None) => {
            return Err(Error::Certificate("relative report without a normal subgroup".into()))
        }
        _ => None,
    };

    let mut cache: HashMap<(BitSet, CharacterKind, usize), std::result::Result<Vec<u64>, String>> =
        HashMap::new();
    let mut seen = BTreeSet::new();
    for cert in &report.certificates {
        let [j, k] = cert.pair;
        let tag = format!("pair [{j},{k}]");
        if j >= r || k >= r || j == k {
            problems.push(format!("{tag}: not an ordered pair of distinct irreducibles"));
            continue;
        }
        if !seen.insert((j, k)) {
            problems.push(format!("{tag}: listed twice"));
            continue;
        }
        let set = match subgroup_set(group, &cert.subgroup) {
            Ok(s) => s,
            Err(e) => {
                problems.push(format!("{tag}: {e}"));
                continue;
            }
        };
        let class_ok = lattice
            .find(&set)
            .map(|i| lattice.record(i).class_id == cert.subgroup.class_id)
            .unwrap_or(false);
        if set.count() != cert.subgroup.order || !class_ok {
            problems.push(format!("{tag}: generators do not match subgroup class {}", cert.subgroup.class_id));
            continue;
        }
        let structural = match report.property {
            Property::Nam if !group.is_normal_set(&set) => Some("subgroup is not normal"),
            Property::Sam if !group.is_subnormal_set(&set) => Some("subgroup is not subnormal"),
            Property::RelativeAm
                if !normal.as_ref().expect("checked").elements_in_top().is_subset(&set) =>
            {
                Some("subgroup does not contain the normal subgroup")
            }
            _ => None,
        };
        if let Some(msg) = structural {
            problems.push(format!("{tag}: {msg}"));
            continue;
        }
        let expected_kind = if report.property == Property::RelativeAm {
            CharacterKind::Irreducible
        } else {
            CharacterKind::Linear
        };
        if cert.character.kind != expected_kind {
            problems.push(format!("{tag}: wrong character kind"));
            continue;
        }
        let key = (set.clone(), cert.character.kind, cert.character.index);
        let decomposition = cache
            .entry(key)
            .or_insert_with(|| {
                witness_decomposition(&ctx, group, &top, &table, &set, cert.character.index, normal.as_ref())
                    .map_err(|e| e.to_string())
            })
            .clone();
        let d = match decomposition {
            Ok(d) => d,
            Err(e) => {
                problems.push(format!("{tag}: {e}"));
                continue;
            }
        };
        if d[j] == 0 {
            problems.push(format!("{tag}: {j} is not a constituent"));
        } else if d[k] != 0 {
            problems.push(format!("{tag}: {k} is a constituent"));
        } else if matches!(report.property, Property::Monomial | Property::QuasiMonomial)
            && d.iter().enumerate().any(|(i, &m)| i != j && m != 0)
        {
            problems.push(format!("{tag}: induced character has other constituents"));
        } else if report.property == Property::Monomial && d[j] != 1 {
            problems.push(format!("{tag}: induced character is a proper multiple"));
        }
    }
    let missing: Vec<[usize; 2]> = (0..r)
        .flat_map(|j| (0..r).filter(move |&k| k != j).map(move |k| [j, k]))
        .filter(|&[j, k]| !seen.contains(&(j, k)))
        .collect();
    if let Some(first) = missing.first() {
        problems.push(format!(
            "incomplete coverage: {} pairs missing, first [{},{}]",
            missing.len(),
            first[0],
            first[1]
        ));
    }
    Ok(CertifyOutcome {
        valid: problems.is_empty(),
        problems,
    })
}

fn witness_decomposition(
    ctx: &AnalysisContext,
    group: &PermGroup,
    top: &std::sync::Arc<GroupData>,
    table: &crate::chartab::ModularCharacterTable,
    set: &BitSet,
    index: usize,
    normal: Option<&std::sync::Arc<GroupData>>,
) -> Result<Vec<u64>> {
    let h = GroupData::subgroup(group, set)?;
    let psi: ClassFunction = match normal {
        None => linear_characters(ctx, &h)?
            .into_iter()
            .nth(index)
            .ok_or_else(|| Error::Certificate(format!("no linear character {index}")))?,
        Some(n) => {
            let ht = character_table(ctx, &h.group, h.classes.clone())?;
            if index >= ht.len() {
                return Err(Error::Certificate(format!("no irreducible character {index}")));
            }
            let psi = ClassFunction::from_row(&h, &ht, index);
            if !is_irreducible_restriction(&psi, n)? {
                return Err(Error::Certificate(
                    "character does not restrict irreducibly to the normal subgroup".into(),
                ));
            }
            psi
        }
    };
    decompose(&induce_naive(&psi, top)?, table)
}
