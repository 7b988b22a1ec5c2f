//! Versioned JSON run reports.

use serde::{Deserialize, Serialize};
use terracini_core::segre::SegreVerdict;
use terracini_core::terracini::{Evidence, Outcome, TrailEntry};
use terracini_core::{LinearSystemReport, TerraciniVerdict};

use crate::formats::SCHEMA_VERSION;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct RunReport {
    pub schema_version: u32,
    pub command: String,
    pub input: InputEcho,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub system: Option<SystemReport>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub verdict: Option<VerdictReport>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub segre: Option<SegreReport>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub trail: Vec<TrailRow>,
    pub timing_us: u64,
    pub seed: Option<u64>,
    pub arithmetic: Arithmetic,
}

impl RunReport {
    pub fn new(command: &str, input: InputEcho, seed: Option<u64>, arithmetic: Arithmetic) -> Self {
        RunReport {
            schema_version: SCHEMA_VERSION,
            command: command.into(),
            input,
            system: None,
            verdict: None,
            segre: None,
            trail: Vec::new(),
            timing_us: 0,
            seed,
            arithmetic,
        }
    }

    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("serializable");
        s.push('\n');
        s
    }

    pub fn from_json(text: &str) -> Result<Self, serde_json::Error> {
        serde_json::from_str(text)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct InputEcho {
    /// Projective dimension, or the factor dimensions for Segre inputs.
    pub n: Vec<usize>,
    pub d: Option<u32>,
    pub r: usize,
    pub source: String,
    /// Coordinates as `"p/q"` strings; Segre points list their factors in turn.
    pub points: Vec<Vec<String>>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct SystemReport {
    pub length: usize,
    pub rank: usize,
    pub h0: usize,
    pub h1: usize,
    pub expected_h0: usize,
    pub defect: usize,
}

impl From<&LinearSystemReport> for SystemReport {
    fn from(r: &LinearSystemReport) -> Self {
        SystemReport {
            length: r.length,
            rank: r.rank,
            h0: r.h0,
            h1: r.h1,
            expected_h0: r.expected_h0,
            defect: r.defect,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerdictReport {
    pub member: bool,
    pub defect: Option<usize>,
    pub evidence: String,
    pub criterion: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub witness: Option<Vec<usize>>,
    /// Both sides of the split inequality when the split criterion decided.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub inequality: Option<(u64, u64)>,
}

impl From<&TerraciniVerdict> for VerdictReport {
    fn from(v: &TerraciniVerdict) -> Self {
        let (witness, inequality) = match &v.evidence {
            Evidence::Split { witness, lhs, rhs, .. } => (Some(witness.clone()), Some((*lhs, *rhs))),
            Evidence::Augment { added, .. } => (Some(vec![*added]), None),
            _ => (None, None),
        };
        VerdictReport {
            member: v.member,
            defect: v.defect,
            evidence: v.evidence.label(),
            criterion: v.evidence.criterion().into(),
            witness,
            inequality,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TrailRow {
    pub criterion: String,
    pub params: String,
    pub outcome: String,
}

impl From<&TrailEntry> for TrailRow {
    fn from(t: &TrailEntry) -> Self {
        TrailRow {
            criterion: t.criterion.into(),
            params: t.params.clone(),
            outcome: match &t.outcome {
                Outcome::Certificate(ev) => format!("certificate {}", ev.label()),
                Outcome::Silent => "silent".into(),
                Outcome::Skipped(why) => format!("skipped: {why}"),
            },
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SegreReport {
    pub ambient: usize,
    pub rank: usize,
    pub expected: usize,
    pub member: bool,
    pub drop: usize,
}

impl From<&SegreVerdict> for SegreReport {
    fn from(v: &SegreVerdict) -> Self {
        SegreReport {
            ambient: v.ambient,
            rank: v.rank,
            expected: v.expected,
            member: v.member,
            drop: v.drop,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "mode", rename_all = "lowercase")]
pub enum Arithmetic {
    Exact,
    Modular {
        /// `(prime, rank mod prime)` pairs.
        primes: Vec<(u64, usize)>,
        /// `"confirmed"` when two primes reach the reported rank, else `"unverified"`.
        status: String,
    },
}
