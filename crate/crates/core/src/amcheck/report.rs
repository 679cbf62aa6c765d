//! JSON report and certificate types.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::Error;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Property {
    Am,
    Nam,
    Sam,
    RelativeAm,
    Monomial,
    QuasiMonomial,
}

impl Property {
    pub const ALL: [Property; 6] = [
        Property::Monomial,
        Property::QuasiMonomial,
        Property::Am,
        Property::Nam,
        Property::Sam,
        Property::RelativeAm,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Property::Am => "am",
            Property::Nam => "nam",
            Property::Sam => "sam",
            Property::RelativeAm => "relative_am",
            Property::Monomial => "monomial",
            Property::QuasiMonomial => "quasi_monomial",
        }
    }
}

impl fmt::Display for Property {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Property {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Error> {
        Property::ALL
            .into_iter()
            .find(|p| p.name() == s)
            .ok_or_else(|| Error::Certificate(format!("unknown property `{s}`")))
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GroupInfo {
    pub spec: String,
    pub order: usize,
    pub degree: usize,
    pub num_irreducibles: usize,
}

/// A subgroup addressed by its lattice class id, with generators in cycle notation.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SubgroupRef {
    pub class_id: usize,
    pub order: usize,
    pub generators: Vec<String>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum CharacterKind {
    /// Index into the sorted linear characters of the subgroup.
    Linear,
    /// Row index into the character table of the subgroup.
    Irreducible,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CharacterRef {
    pub kind: CharacterKind,
    pub index: usize,
}

/// Proof that `pair[0]` is a constituent of the induced character and
/// `pair[1]` is not.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct WitnessCertificate {
    pub pair: [usize; 2],
    pub subgroup: SubgroupRef,
    pub character: CharacterRef,
    #[serde(default)]
    pub constituents: Vec<usize>,
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct Stats {
    pub candidates: u64,
    pub inductions: u64,
    pub millis: u64,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PropertyReport {
    pub group: GroupInfo,
    pub property: Property,
    pub normal_subgroup: Option<SubgroupRef>,
    pub verdict: bool,
    pub certificates: Vec<WitnessCertificate>,
    pub uncovered_pair: Option<[usize; 2]>,
    pub stats: Stats,
}

impl PropertyReport {
    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }

    pub fn from_json(text: &str) -> crate::Result<Self> {
        Ok(serde_json::from_str(text)?)
    }

    /// The report with timing removed, for comparing runs.
    pub fn without_timing(&self) -> Self {
        let mut r = self.clone();
        r.stats.millis = 0;
        r
    }
}

pub(crate) fn mask_members(mask: u64) -> Vec<usize> {
    (0..64).filter(|i| mask >> i & 1 == 1).collect()
}
