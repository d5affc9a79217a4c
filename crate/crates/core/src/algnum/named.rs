use serde::Serialize;
use std::fmt;

/// Transcendental or uncomputable constants that can be named but not
/// computed with.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum NamedConstant {
    Pi,
    E,
    Ln2,
    Sin1,
    ChaitinOmega,
}

impl NamedConstant {
    pub const ALL: [NamedConstant; 5] = [
        NamedConstant::Pi,
        NamedConstant::E,
        NamedConstant::Ln2,
        NamedConstant::Sin1,
        NamedConstant::ChaitinOmega,
    ];

    /// Keyword used in the expression language.
    pub fn keyword(self) -> &'static str {
        match self {
            NamedConstant::Pi => "pi",
            NamedConstant::E => "e",
            NamedConstant::Ln2 => "ln2",
            NamedConstant::Sin1 => "sin1",
            NamedConstant::ChaitinOmega => "omega",
        }
    }

    pub fn from_keyword(s: &str) -> Option<Self> {
        Self::ALL.into_iter().find(|c| c.keyword() == s)
    }

    /// Whether the constant is reachable with the standard transcendental curves.
    pub fn curve_constructible(self) -> bool {
        !matches!(self, NamedConstant::ChaitinOmega)
    }
}

impl fmt::Display for NamedConstant {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.keyword())
    }
}
