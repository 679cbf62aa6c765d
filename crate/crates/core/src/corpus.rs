//! The built-in group catalog with the verdicts it is expected to reproduce.

use std::time::Instant;

use crate::amcheck::{Analysis, Limits, Property};
use crate::error::Result;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Tier {
    Fast,
    Slow,
}

#[derive(Clone, Debug)]
pub struct CorpusEntry {
    pub spec: &'static str,
    pub tier: Tier,
    /// Verdicts that must hold.
    pub expected: &'static [(Property, bool)],
    /// Verdicts are recorded but never gate a run.
    pub observation: bool,
    pub note: &'static str,
}

const fn entry(spec: &'static str, tier: Tier, expected: &'static [(Property, bool)]) -> CorpusEntry {
    CorpusEntry {
        spec,
        tier,
        expected,
        observation: false,
        note: "",
    }
}

const fn weyl(spec: &'static str, tier: Tier) -> CorpusEntry {
    CorpusEntry {
        spec,
        tier,
        expected: &[],
        observation: true,
        note: "Weyl group of type B; conjectured almost monomial",
    }
}

use Property::*;
use Tier::*;

pub static CATALOG: &[CorpusEntry] = &[
    entry("C2", Fast, &[(Monomial, true), (Am, true)]),
    entry("C3", Fast, &[(Monomial, true), (Am, true)]),
    entry("C4", Fast, &[(Monomial, true), (Am, true)]),
    entry("C2xC2", Fast, &[(Monomial, true), (Am, true)]),
    entry("C5", Fast, &[(Monomial, true), (Am, true)]),
    entry("C6", Fast, &[(Monomial, true), (Am, true)]),
    entry("S3", Fast, &[(Am, true)]),
    entry("D8", Fast, &[]),
    entry("D10", Fast, &[]),
    entry("A4", Fast, &[]),
    entry("D12", Fast, &[]),
    entry("S3xC2", Fast, &[]),
    entry("S4", Fast, &[(Am, true)]),
    entry("SL2_3", Fast, &[(Monomial, false), (Am, true), (Sam, false)]),
    entry("S3xC4", Fast, &[]),
    entry("GL2_3", Fast, &[(Am, false)]),
    weyl("WB2", Fast),
    weyl("WB3", Fast),
    entry("S3xS3", Fast, &[]),
    CorpusEntry {
        spec: "S3wrC2",
        tier: Fast,
        expected: &[(Sam, true), (Nam, false)],
        observation: false,
        note: "stand-in for (S3 x S3):C2 of order 72, identification assumed",
    },
    entry("A5", Fast, &[]),
    entry("S5", Fast, &[(Am, true)]),
    entry("A6", Slow, &[(Am, false)]),
    entry("S6", Slow, &[(Am, true)]),
    weyl("WB4", Slow),
];

/// Entries run for a tier; the slow tier includes the fast one.
pub fn entries(tier: Tier) -> impl Iterator<Item = &'static CorpusEntry> {
    CATALOG
        .iter()
        .filter(move |e| tier == Slow || e.tier == Fast)
}

pub const CHECKED: [Property; 5] = [Monomial, QuasiMonomial, Am, Nam, Sam];

#[derive(Clone, Debug)]
pub struct CorpusResult {
    pub spec: &'static str,
    pub order: usize,
    pub irreducibles: usize,
    pub verdicts: Vec<(Property, bool)>,
    pub lt_consistent: Option<bool>,
    /// Expected verdicts that were not reproduced.
    pub mismatches: Vec<(Property, bool)>,
    pub observation: bool,
    pub millis: u128,
}

impl CorpusResult {
    pub fn passed(&self) -> bool {
        self.mismatches.is_empty() && self.lt_consistent != Some(false)
    }

    pub fn verdict(&self, p: Property) -> Option<bool> {
        self.verdicts.iter().find(|(q, _)| *q == p).map(|&(_, v)| v)
    }
}

pub fn run_entry(entry: &'static CorpusEntry, limits: Limits, threads: usize) -> Result<CorpusResult> {
    let start = Instant::now();
    let a = Analysis::from_spec(entry.spec, limits)?.with_threads(threads)?;
    let verdicts = CHECKED
        .iter()
        .map(|&p| Ok((p, a.check(p)?.verdict)))
        .collect::<Result<Vec<_>>>()?;
    let lt_consistent = if a.table().len() <= crate::amcheck::MAX_LT_IRREDUCIBLES {
        Some(a.lt_crosscheck()?.consistent())
    } else {
        None
    };
    let mismatches = entry
        .expected
        .iter()
        .filter(|(p, v)| verdicts.iter().any(|(q, w)| q == p && w != v))
        .copied()
        .collect();
    Ok(CorpusResult {
        spec: entry.spec,
        order: a.group().order(),
        irreducibles: a.table().len(),
        verdicts,
        lt_consistent,
        mismatches,
        observation: entry.observation,
        millis: start.elapsed().as_millis(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn catalog_specs_parse_and_fit() {
        for e in CATALOG {
            let g = crate::construct::build_str(e.spec, crate::DEFAULT_MAX_ORDER).unwrap();
            assert!(g.order() <= 720, "{}", e.spec);
        }
        assert_eq!(entries(Fast).count() + 3, entries(Slow).count());
    }

    #[test]
    fn fast_sample() {
        let e = CATALOG.iter().find(|e| e.spec == "SL2_3").unwrap();
        let r = run_entry(e, Limits::default(), 1).unwrap();
        assert!(r.passed());
        assert_eq!(r.verdict(Monomial), Some(false));
    }
}
