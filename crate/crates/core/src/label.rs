use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

/// Gold or predicted class of a solution pair.
///
/// `NP` orders before `P`; ties in votes and argmaxes resolve to `NP`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum Label {
    NP,
    P,
}

impl Label {
    pub const ALL: [Label; 2] = [Label::NP, Label::P];

    pub fn index(self) -> usize {
        match self {
            Label::NP => 0,
            Label::P => 1,
        }
    }

    pub fn from_index(i: usize) -> Label {
        if i == 0 {
            Label::NP
        } else {
            Label::P
        }
    }

    /// `P` encoded as 1.0, `NP` as 0.0.
    pub fn indicator(self) -> f64 {
        self.index() as f64
    }

    pub fn as_str(self) -> &'static str {
        match self {
            Label::NP => "NP",
            Label::P => "P",
        }
    }
}

impl fmt::Display for Label {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("unknown label {0:?} (expected P or NP)")]
pub struct UnknownLabel(pub String);

impl FromStr for Label {
    type Err = UnknownLabel;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s.trim() {
            "P" => Ok(Label::P),
            "NP" => Ok(Label::NP),
            other => Err(UnknownLabel(other.to_string())),
        }
    }
}
