//! Decision procedures for the monomiality hierarchy.
//!
//! Every property is decided by scanning candidate (subgroup, character)
//! pairs in canonical order: subgroup classes by ascending class id, then
//! characters by index. Each candidate is induced to the top group once and
//! reduced to its constituent set. Only class representatives are scanned,
//! since conjugate subgroups induce the same characters.

mod certify;
mod descent;
mod lt;
mod report;

use std::sync::{Arc, OnceLock};
use std::time::Instant;

use rayon::prelude::*;

use crate::bitset::BitSet;
use crate::chartab::{character_table, AnalysisContext, ModularCharacterTable};
use crate::classfun::{
    decompose, induce, is_irreducible_restriction, linear_characters, ClassFunction, GroupData,
    MAX_IRREDUCIBLES,
};
use crate::construct::build_str;
use crate::error::{Error, Result};
use crate::permcore::{PermGroup, DEFAULT_MAX_ORDER};
use crate::subgroups::{enumerate_with_limit, overgroups_of, SubgroupLattice, DEFAULT_SUBGROUP_LIMIT};

pub use certify::{certify, CertifyOutcome};
pub use descent::DescentConditions;
pub use lt::{binomial, n_rt, LtCrosscheck, LtProfile, MAX_LT_IRREDUCIBLES};
pub use report::{
    CharacterKind, CharacterRef, GroupInfo, Property, PropertyReport, Stats, SubgroupRef,
    WitnessCertificate,
};

use report::mask_members;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Limits {
    pub max_order: usize,
    pub subgroup_limit: usize,
}

impl Default for Limits {
    fn default() -> Self {
        Limits {
            max_order: DEFAULT_MAX_ORDER,
            subgroup_limit: DEFAULT_SUBGROUP_LIMIT,
        }
    }
}

/// Which (subgroup, character) pairs may serve as witnesses.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum CandidateSource {
    AllSubgroupsLinear,
    NormalLinear,
    SubnormalLinear,
    /// Irreducible characters of overgroups of the normal subgroup `N`
    /// (element set over the top group) that restrict irreducibly to `N`.
    RelativeIrr(BitSet),
}

/// Linear characters of one subgroup class representative and the
/// decompositions of their induced characters.
#[derive(Debug)]
pub struct LinearInductions {
    pub group: Arc<GroupData>,
    pub characters: Vec<ClassFunction>,
    pub decompositions: Vec<Vec<u64>>,
}

impl LinearInductions {
    pub fn mask(&self, i: usize) -> u64 {
        mask_of(&self.decompositions[i])
    }
}

#[derive(Debug)]
pub struct SubgroupIrreducibles {
    pub group: Arc<GroupData>,
    pub table: ModularCharacterTable,
    pub characters: Vec<ClassFunction>,
}

pub(crate) fn mask_of(decomposition: &[u64]) -> u64 {
    decomposition
        .iter()
        .enumerate()
        .filter(|(_, &m)| m > 0)
        .fold(0, |acc, (i, _)| acc | 1 << i)
}

struct ClassCandidates {
    class_id: usize,
    entries: Vec<(CharacterRef, Option<Vec<u64>>)>,
}

#[derive(Clone, Debug)]
struct Witness {
    class_id: usize,
    character: CharacterRef,
    mask: u64,
}

/// A top group together with everything the property checks share: its
/// character table, subgroup lattice and per-class caches.
pub struct Analysis {
    spec: String,
    ctx: AnalysisContext,
    top: Arc<GroupData>,
    table: ModularCharacterTable,
    lattice: SubgroupLattice,
    threads: usize,
    pool: Option<rayon::ThreadPool>,
    groups: Vec<OnceLock<Arc<GroupData>>>,
    linear: Vec<OnceLock<Arc<LinearInductions>>>,
    irreducible: Vec<OnceLock<Arc<SubgroupIrreducibles>>>,
}

impl std::fmt::Debug for Analysis {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("Analysis")
            .field("spec", &self.spec)
            .field("order", &self.top.order())
            .field("irreducibles", &self.table.len())
            .field("subgroups", &self.lattice.len())
            .finish()
    }
}

impl Analysis {
    pub fn new(spec: impl Into<String>, group: PermGroup, limits: Limits) -> Result<Self> {
        let ctx = AnalysisContext::for_group(&group);
        let lattice = enumerate_with_limit(&group, limits.subgroup_limit)?;
        let top = GroupData::top(group);
        if top.classes.len() > MAX_IRREDUCIBLES {
            return Err(Error::TooManyIrreducibles {
                r: top.classes.len(),
                limit: MAX_IRREDUCIBLES,
            });
        }
        let table = character_table(&ctx, &top.group, top.classes.clone())?;
        let n = lattice.classes().len();
        Ok(Analysis {
            spec: spec.into(),
            ctx,
            top,
            table,
            lattice,
            threads: 1,
            pool: None,
            groups: (0..n).map(|_| OnceLock::new()).collect(),
            linear: (0..n).map(|_| OnceLock::new()).collect(),
            irreducible: (0..n).map(|_| OnceLock::new()).collect(),
        })
    }

    /// Parses and builds a group expression such as `S4` or `S3wrC2`.
    pub fn from_spec(text: &str, limits: Limits) -> Result<Self> {
        let g = build_str(text, limits.max_order)?;
        Self::new(text.trim(), g, limits)
    }

    /// Evaluates candidates on `k` worker threads. Reports do not depend on `k`.
    pub fn with_threads(mut self, k: usize) -> Result<Self> {
        let k = k.max(1);
        self.pool = if k > 1 {
            Some(
                rayon::ThreadPoolBuilder::new()
                    .num_threads(k)
                    .build()
                    .map_err(|e| Error::ClassFunction(format!("thread pool: {e}")))?,
            )
        } else {
            None
        };
        self.threads = k;
        Ok(self)
    }

    pub fn spec(&self) -> &str {
        &self.spec
    }

    pub fn context(&self) -> &AnalysisContext {
        &self.ctx
    }

    pub fn top(&self) -> &Arc<GroupData> {
        &self.top
    }

    pub fn group(&self) -> &PermGroup {
        &self.top.group
    }

    pub fn table(&self) -> &ModularCharacterTable {
        &self.table
    }

    pub fn lattice(&self) -> &SubgroupLattice {
        &self.lattice
    }

    pub fn threads(&self) -> usize {
        self.threads
    }

    pub fn irreducibles(&self) -> Vec<ClassFunction> {
        (0..self.table.len())
            .map(|i| ClassFunction::from_row(&self.top, &self.table, i))
            .collect()
    }

    pub fn group_info(&self) -> GroupInfo {
        GroupInfo {
            spec: self.spec.clone(),
            order: self.top.order(),
            degree: self.top.group.degree(),
            num_irreducibles: self.table.len(),
        }
    }

    /// Representative of subgroup class `class_id` as a standalone group.
    pub fn subgroup(&self, class_id: usize) -> Result<Arc<GroupData>> {
        if let Some(g) = self.groups[class_id].get() {
            return Ok(g.clone());
        }
        let rep = self.lattice.class_rep(class_id);
        let g = GroupData::subgroup(&self.top.group, &rep.elems)?;
        Ok(self.groups[class_id].get_or_init(|| g).clone())
    }

    pub fn linear_inductions(&self, class_id: usize) -> Result<Arc<LinearInductions>> {
        if let Some(v) = self.linear[class_id].get() {
            return Ok(v.clone());
        }
        let group = self.subgroup(class_id)?;
        let characters = linear_characters(&self.ctx, &group)?;
        let decompositions = characters
            .iter()
            .map(|lam| decompose(&induce(lam, &self.top)?, &self.table))
            .collect::<Result<Vec<_>>>()?;
        let v = Arc::new(LinearInductions {
            group,
            characters,
            decompositions,
        });
        Ok(self.linear[class_id].get_or_init(|| v).clone())
    }

    pub fn subgroup_irreducibles(&self, class_id: usize) -> Result<Arc<SubgroupIrreducibles>> {
        if let Some(v) = self.irreducible[class_id].get() {
            return Ok(v.clone());
        }
        let group = self.subgroup(class_id)?;
        let table = character_table(&self.ctx, &group.group, group.classes.clone())?;
        let characters = (0..table.len())
            .map(|i| ClassFunction::from_row(&group, &table, i))
            .collect();
        let v = Arc::new(SubgroupIrreducibles {
            group,
            table,
            characters,
        });
        Ok(self.irreducible[class_id].get_or_init(|| v).clone())
    }

    pub fn subgroup_ref(&self, class_id: usize) -> SubgroupRef {
        let rep = self.lattice.class_rep(class_id);
        SubgroupRef {
            class_id,
            order: rep.order,
            generators: rep
                .gens
                .iter()
                .map(|&x| self.top.group.element(x).to_string())
                .collect(),
        }
    }

    /// Element set of a normal subgroup given by its class id.
    pub fn normal_subgroup_by_class(&self, class_id: usize) -> Result<BitSet> {
        if class_id >= self.lattice.classes().len() {
            return Err(Error::Certificate(format!(
                "no subgroup class {class_id} (there are {})",
                self.lattice.classes().len()
            )));
        }
        let class = self.lattice.class(class_id);
        if class.size() != 1 {
            return Err(Error::NotNormal);
        }
        Ok(self.lattice.record(class.rep).elems.clone())
    }

    fn require_normal(&self, n: &BitSet) -> Result<usize> {
        let idx = self.lattice.find(n).ok_or(Error::NotSubgroup)?;
        let rec = self.lattice.record(idx);
        if !rec.normal {
            return Err(Error::NotNormal);
        }
        Ok(rec.class_id)
    }

    fn source_classes(&self, source: &CandidateSource) -> Result<Vec<usize>> {
        let all = 0..self.lattice.classes().len();
        Ok(match source {
            CandidateSource::AllSubgroupsLinear => all.collect(),
            CandidateSource::NormalLinear => all.filter(|&c| self.lattice.class_rep(c).normal).collect(),
            CandidateSource::SubnormalLinear => {
                all.filter(|&c| self.lattice.class_rep(c).subnormal).collect()
            }
            CandidateSource::RelativeIrr(n) => {
                let mut v = overgroups_of(&self.top.group, &self.lattice, n)?;
                v.sort_unstable();
                v
            }
        })
    }

    fn class_candidates(&self, class_id: usize, n: Option<&Arc<GroupData>>) -> Result<ClassCandidates> {
        let entries = match n {
            None => {
                let li = self.linear_inductions(class_id)?;
                li.decompositions
                    .iter()
                    .enumerate()
                    .map(|(i, d)| {
                        let ch = CharacterRef {
                            kind: CharacterKind::Linear,
                            index: i,
                        };
                        (ch, Some(d.clone()))
                    })
                    .collect()
            }
            Some(n) => {
                let si = self.subgroup_irreducibles(class_id)?;
                let mut entries = Vec::with_capacity(si.characters.len());
                for (i, psi) in si.characters.iter().enumerate() {
                    let ch = CharacterRef {
                        kind: CharacterKind::Irreducible,
                        index: i,
                    };
                    let d = if is_irreducible_restriction(psi, n)? {
                        Some(decompose(&induce(psi, &self.top)?, &self.table)?)
                    } else {
                        None
                    };
                    entries.push((ch, d));
                }
                entries
            }
        };
        Ok(ClassCandidates { class_id, entries })
    }

    /// Feeds candidates to `visit` in canonical order until it returns true.
    /// Blocks of `threads` classes are evaluated concurrently and then
    /// reduced sequentially, so counters and witnesses never depend on the
    /// thread count.
    fn scan<F>(&self, classes: &[usize], n: Option<&Arc<GroupData>>, mut visit: F) -> Result<Stats>
    where
        F: FnMut(usize, CharacterRef, &[u64]) -> bool,
    {
        let mut stats = Stats::default();
        for block in classes.chunks(self.threads) {
            let computed: Vec<Result<ClassCandidates>> = match &self.pool {
                Some(pool) => pool.install(|| {
                    block
                        .par_iter()
                        .map(|&c| self.class_candidates(c, n))
                        .collect()
                }),
                None => block.iter().map(|&c| self.class_candidates(c, n)).collect(),
            };
            for cc in computed {
                let cc = cc?;
                for (ch, d) in cc.entries {
                    stats.candidates += 1;
                    if let Some(d) = d {
                        stats.inductions += 1;
                        if visit(cc.class_id, ch, &d) {
                            return Ok(stats);
                        }
                    }
                }
            }
        }
        Ok(stats)
    }

    /// Witness-matrix coverage: every ordered pair `(j, k)` of distinct
    /// irreducibles must be separated by some candidate with `j` a
    /// constituent and `k` not. The first witness per pair is kept.
    pub fn coverage_check(&self, source: &CandidateSource) -> Result<PropertyReport> {
        let start = Instant::now();
        let (property, n_data, normal_ref) = match source {
            CandidateSource::AllSubgroupsLinear => (Property::Am, None, None),
            CandidateSource::NormalLinear => (Property::Nam, None, None),
            CandidateSource::SubnormalLinear => (Property::Sam, None, None),
            CandidateSource::RelativeIrr(n) => {
                let class_id = self.require_normal(n)?;
                let data = GroupData::subgroup(&self.top.group, n)?;
                (Property::RelativeAm, Some(data), Some(self.subgroup_ref(class_id)))
            }
        };
        let classes = self.source_classes(source)?;
        let r = self.table.len();
        let mut witness: Vec<Option<Witness>> = vec![None; r * r];
        let mut remaining = r * r.saturating_sub(1);
        let full = if r == 64 { u64::MAX } else { (1u64 << r) - 1 };
        let mut stats = Stats::default();
        if remaining > 0 {
            stats = self.scan(&classes, n_data.as_ref(), |class_id, character, d| {
                let mask = mask_of(d);
                let outside = full & !mask;
                if outside == 0 {
                    return false;
                }
                for j in mask_members(mask) {
                    for k in mask_members(outside) {
                        let slot = &mut witness[j * r + k];
                        if slot.is_none() {
                            *slot = Some(Witness {
                                class_id,
                                character,
                                mask,
                            });
                            remaining -= 1;
                        }
                    }
                }
                remaining == 0
            })?;
        }
        let verdict = remaining == 0;
        let mut certificates = Vec::new();
        let mut uncovered = None;
        for j in 0..r {
            for k in (0..r).filter(|&k| k != j) {
                match &witness[j * r + k] {
                    Some(w) => certificates.push(self.certificate([j, k], w)),
                    None if uncovered.is_none() => uncovered = Some([j, k]),
                    None => {}
                }
            }
        }
        if !verdict {
            certificates.clear();
        }
        stats.millis = start.elapsed().as_millis() as u64;
        Ok(PropertyReport {
            group: self.group_info(),
            property,
            normal_subgroup: normal_ref,
            verdict,
            certificates,
            uncovered_pair: uncovered,
            stats,
        })
    }

    fn certificate(&self, pair: [usize; 2], w: &Witness) -> WitnessCertificate {
        WitnessCertificate {
            pair,
            subgroup: self.subgroup_ref(w.class_id),
            character: w.character,
            constituents: mask_members(w.mask),
        }
    }

    pub fn is_almost_monomial(&self) -> Result<PropertyReport> {
        self.coverage_check(&CandidateSource::AllSubgroupsLinear)
    }

    pub fn is_normally_am(&self) -> Result<PropertyReport> {
        self.coverage_check(&CandidateSource::NormalLinear)
    }

    pub fn is_subnormally_am(&self) -> Result<PropertyReport> {
        self.coverage_check(&CandidateSource::SubnormalLinear)
    }

    /// Relative almost monomiality with respect to the normal subgroup `n`.
    pub fn is_relative_am(&self, n: &BitSet) -> Result<PropertyReport> {
        self.coverage_check(&CandidateSource::RelativeIrr(n.clone()))
    }

    /// Every irreducible equals some induced linear character.
    pub fn is_monomial(&self) -> Result<PropertyReport> {
        self.single_constituent(Property::Monomial)
    }

    /// Every irreducible `χ` has a linear `λ` with `λ^G` a multiple of `χ`.
    pub fn is_quasi_monomial(&self) -> Result<PropertyReport> {
        self.single_constituent(Property::QuasiMonomial)
    }

    fn single_constituent(&self, property: Property) -> Result<PropertyReport> {
        let start = Instant::now();
        let classes = self.source_classes(&CandidateSource::AllSubgroupsLinear)?;
        let r = self.table.len();
        let mut witness: Vec<Option<Witness>> = vec![None; r];
        let mut remaining = r;
        let mut stats = self.scan(&classes, None, |class_id, character, d| {
            let mask = mask_of(d);
            if mask.count_ones() != 1 {
                return false;
            }
            let i = mask.trailing_zeros() as usize;
            if property == Property::Monomial && d[i] != 1 {
                return false;
            }
            if witness[i].is_none() {
                witness[i] = Some(Witness {
                    class_id,
                    character,
                    mask,
                });
                remaining -= 1;
            }
            remaining == 0
        })?;
        let verdict = remaining == 0;
        let mut certificates = Vec::new();
        let mut uncovered = None;
        if verdict {
            for j in 0..r {
                let w = witness[j].as_ref().expect("all witnessed");
                for k in (0..r).filter(|&k| k != j) {
                    certificates.push(self.certificate([j, k], w));
                }
            }
        } else if let Some(j) = witness.iter().position(Option::is_none) {
            let k = if j == 0 { 1 } else { 0 };
            uncovered = Some([j, k]);
        }
        stats.millis = start.elapsed().as_millis() as u64;
        Ok(PropertyReport {
            group: self.group_info(),
            property,
            normal_subgroup: None,
            verdict,
            certificates,
            uncovered_pair: uncovered,
            stats,
        })
    }

    /// Runs one of the absolute properties; relative checks need a subgroup.
    pub fn check(&self, property: Property) -> Result<PropertyReport> {
        match property {
            Property::Am => self.is_almost_monomial(),
            Property::Nam => self.is_normally_am(),
            Property::Sam => self.is_subnormally_am(),
            Property::Monomial => self.is_monomial(),
            Property::QuasiMonomial => self.is_quasi_monomial(),
            Property::RelativeAm => Err(Error::Certificate(
                "relative_am needs a normal subgroup".into(),
            )),
        }
    }
}

#[cfg(test)]
mod tests;
