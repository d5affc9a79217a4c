//! Constructibility verdicts: per-method membership and the minimal tier.

mod table1;

pub use table1::{table1_matrix, Table1Cell, Table1Entry, TABLE1};

use crate::algnum::{AlgebraicNumber, NamedConstant};
use crate::expr::{eval, EvalError, Expr, Value};
use crate::tower::{smoothness_report, splitting_degree, SplitDegree, Smoothness};
use serde::Serialize;
use std::collections::BTreeMap;
use std::fmt;

/// Construction methods in increasing strength, followed by `Beyond`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Tier {
    RulerCompass,
    OrigamiNeusis,
    Conic,
    Linkage,
    TranscendentalCurve,
    Beyond,
}

impl Tier {
    /// The five methods that carry a membership flag.
    pub const METHODS: [Tier; 5] = [
        Tier::RulerCompass,
        Tier::OrigamiNeusis,
        Tier::Conic,
        Tier::Linkage,
        Tier::TranscendentalCurve,
    ];

    pub fn key(self) -> &'static str {
        match self {
            Tier::RulerCompass => "ruler_compass",
            Tier::OrigamiNeusis => "origami_neusis",
            Tier::Conic => "conic",
            Tier::Linkage => "linkage",
            Tier::TranscendentalCurve => "transcendental_curve",
            Tier::Beyond => "beyond",
        }
    }

    pub fn label(self) -> &'static str {
        match self {
            Tier::RulerCompass => "ruler-compass",
            Tier::OrigamiNeusis => "origami/neusis",
            Tier::Conic => "conic sections",
            Tier::Linkage => "mechanical linkages",
            Tier::TranscendentalCurve => "transcendental curves",
            Tier::Beyond => "beyond every method",
        }
    }
}

impl fmt::Display for Tier {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.label())
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Membership {
    Yes,
    No,
    Unknown,
}

impl Membership {
    fn from_bool(b: bool) -> Self {
        if b {
            Membership::Yes
        } else {
            Membership::No
        }
    }
}

impl fmt::Display for Membership {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Membership::Yes => "yes",
            Membership::No => "no",
            Membership::Unknown => "unknown",
        })
    }
}

/// Least tier with membership, or `Unknown` when an undecided lower tier
/// blocks the answer.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum MinimalTier {
    Tier(Tier),
    Unknown,
}

impl Serialize for MinimalTier {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        match self {
            MinimalTier::Tier(t) => s.serialize_str(t.key()),
            MinimalTier::Unknown => s.serialize_str("unknown"),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Default, Serialize)]
pub struct Witness {
    #[serde(skip_serializing_if = "Option::is_none")]
    pub minpoly_degree: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub splitting_degree: Option<SplitDegree>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub shortcut: Option<&'static str>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub named_constant: Option<NamedConstant>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct TierVerdict {
    pub input: String,
    pub minimal_tier: MinimalTier,
    pub membership: BTreeMap<&'static str, Membership>,
    pub witness: Witness,
    #[serde(skip)]
    flags: Vec<(Tier, Membership)>,
}

impl TierVerdict {
    fn new(input: String, flags: Vec<(Tier, Membership)>, witness: Witness) -> Self {
        let mut minimal = MinimalTier::Tier(Tier::Beyond);
        for &(t, m) in &flags {
            match m {
                Membership::Yes => {
                    minimal = MinimalTier::Tier(t);
                    break;
                }
                Membership::Unknown => {
                    minimal = MinimalTier::Unknown;
                    break;
                }
                Membership::No => {}
            }
        }
        TierVerdict {
            input,
            minimal_tier: minimal,
            membership: flags.iter().map(|(t, m)| (t.key(), *m)).collect(),
            witness,
            flags,
        }
    }

    pub fn member(&self, t: Tier) -> Membership {
        self.flags
            .iter()
            .find(|(u, _)| *u == t)
            .map_or(Membership::No, |(_, m)| *m)
    }

    /// Membership flags in tier order.
    pub fn flags(&self) -> &[(Tier, Membership)] {
        &self.flags
    }

    pub fn has_unknown(&self) -> bool {
        self.flags.iter().any(|(_, m)| *m == Membership::Unknown)
    }

    /// One-line human summary.
    pub fn summary(&self) -> String {
        let tier = match self.minimal_tier {
            MinimalTier::Tier(t) => t.label().to_string(),
            MinimalTier::Unknown => "unknown (at most mechanical linkages)".to_string(),
        };
        let mut notes = Vec::new();
        if let Some(d) = self.witness.minpoly_degree {
            notes.push(format!("minpoly degree {d}"));
        }
        if let Some(d) = self.witness.splitting_degree {
            notes.push(format!("splitting degree {d}"));
        }
        if notes.is_empty() {
            format!("minimal tier: {tier}")
        } else {
            format!("minimal tier: {tier} ({})", notes.join(", "))
        }
    }
}

/// Evaluates `e` and classifies its value.
pub fn classify(e: &Expr, cap: u64) -> Result<TierVerdict, EvalError> {
    let value = eval(e)?;
    Ok(classify_value(&e.to_string(), &value, cap))
}

pub fn classify_value(input: &str, value: &Value, cap: u64) -> TierVerdict {
    match value {
        Value::NotAlgebraic(c) => classify_constant(input, *c),
        Value::Algebraic(a) => classify_algebraic(input, a, cap),
    }
}

fn classify_constant(input: &str, c: NamedConstant) -> TierVerdict {
    let curve = c.curve_constructible();
    let flags = Tier::METHODS
        .iter()
        .map(|&t| {
            let yes = t == Tier::TranscendentalCurve && curve;
            (t, Membership::from_bool(yes))
        })
        .collect();
    let witness = Witness { named_constant: Some(c), ..Witness::default() };
    TierVerdict::new(input.to_string(), flags, witness)
}

fn classify_algebraic(input: &str, a: &AlgebraicNumber, cap: u64) -> TierVerdict {
    let f = a.minpoly();
    let report = smoothness_report(f, cap);
    let (rc, on) = match report.verdict {
        Smoothness::TwoGroup => (Membership::Yes, Membership::Yes),
        Smoothness::TwoThreeSmooth => (Membership::No, Membership::Yes),
        Smoothness::NotSmooth => (Membership::No, Membership::No),
        Smoothness::Unknown => (Membership::Unknown, Membership::Unknown),
    };
    let splitting = match (&report.splitting, report.shortcut) {
        (Some(s), _) if s.shortcut != Some("unsmooth_step") => Some(s.degree),
        // the degree shortcuts skip the tower; small degrees are cheap to fill in
        (None, Some(_)) if f.deg() <= 4 => {
            Some(splitting_degree(f, cap).degree).filter(|d| d.exact().is_some())
        }
        _ => None,
    };
    let shortcut = report
        .shortcut
        .or_else(|| report.splitting.as_ref().and_then(|s| s.shortcut));
    let flags = vec![
        (Tier::RulerCompass, rc),
        (Tier::OrigamiNeusis, on),
        (Tier::Conic, on),
        (Tier::Linkage, Membership::Yes),
        (Tier::TranscendentalCurve, Membership::Yes),
    ];
    let witness = Witness {
        minpoly_degree: Some(f.deg()),
        splitting_degree: splitting,
        shortcut,
        named_constant: None,
    };
    TierVerdict::new(input.to_string(), flags, witness)
}
