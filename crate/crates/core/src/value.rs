//! Two- and three-valued truth values.

use std::fmt;
use std::ops::Not;

use serde::{Deserialize, Serialize};

/// A bivalent truth value.
///
/// Displays as `t`/`f`. Peirce's own letters (**v** for *verum*, **f** for
/// *falsum*) are available through [`TruthValue::peirce_letter`].
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum TruthValue {
    #[serde(rename = "t")]
    T,
    #[serde(rename = "f")]
    F,
}

impl TruthValue {
    /// Both values, `t` first.
    pub const ALL: [TruthValue; 2] = [TruthValue::T, TruthValue::F];

    pub fn from_bool(b: bool) -> Self {
        if b {
            TruthValue::T
        } else {
            TruthValue::F
        }
    }

    pub fn is_true(self) -> bool {
        self == TruthValue::T
    }

    pub fn letter(self) -> char {
        match self {
            TruthValue::T => 't',
            TruthValue::F => 'f',
        }
    }

    pub fn peirce_letter(self) -> char {
        match self {
            TruthValue::T => 'v',
            TruthValue::F => 'f',
        }
    }

    /// Accepts `t`/`f`, `v`, `T`/`F`, `1`/`0` and the words `true`/`false`.
    pub fn parse(s: &str) -> Option<Self> {
        match s.trim() {
            "t" | "T" | "v" | "V" | "1" | "true" => Some(TruthValue::T),
            "f" | "F" | "0" | "false" => Some(TruthValue::F),
            _ => None,
        }
    }
}

impl Not for TruthValue {
    type Output = TruthValue;

    fn not(self) -> TruthValue {
        match self {
            TruthValue::T => TruthValue::F,
            TruthValue::F => TruthValue::T,
        }
    }
}

impl From<bool> for TruthValue {
    fn from(b: bool) -> Self {
        TruthValue::from_bool(b)
    }
}

impl fmt::Display for TruthValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.letter())
    }
}

/// A triadic truth value: `V` (true), `L` ("limit", indeterminate) and `F`
/// (false).
///
/// The derived ordering is declaration order, so `V < L < F`; use
/// [`Triadic::rank`] for the truth ordering `F < L < V`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Triadic {
    V,
    L,
    F,
}

impl Triadic {
    /// Label order used by every triadic matrix: V, L, F.
    pub const ALL: [Triadic; 3] = [Triadic::V, Triadic::L, Triadic::F];

    /// Position in the truth ordering, F = 0, L = 1, V = 2.
    pub fn rank(self) -> u8 {
        match self {
            Triadic::F => 0,
            Triadic::L => 1,
            Triadic::V => 2,
        }
    }

    /// Row/column index in the V, L, F label order.
    pub fn index(self) -> usize {
        match self {
            Triadic::V => 0,
            Triadic::L => 1,
            Triadic::F => 2,
        }
    }

    pub fn letter(self) -> char {
        match self {
            Triadic::V => 'V',
            Triadic::L => 'L',
            Triadic::F => 'F',
        }
    }

    pub fn parse(s: &str) -> Option<Self> {
        match s.trim() {
            "V" | "v" => Some(Triadic::V),
            "L" | "l" => Some(Triadic::L),
            "F" | "f" => Some(Triadic::F),
            _ => None,
        }
    }

    /// The bivalent value this lies over, if any.
    pub fn to_bivalent(self) -> Option<TruthValue> {
        match self {
            Triadic::V => Some(TruthValue::T),
            Triadic::F => Some(TruthValue::F),
            Triadic::L => None,
        }
    }
}

impl From<TruthValue> for Triadic {
    fn from(v: TruthValue) -> Self {
        match v {
            TruthValue::T => Triadic::V,
            TruthValue::F => Triadic::F,
        }
    }
}

impl fmt::Display for Triadic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.letter())
    }
}
