//! The sixteen binary truth functions.
//!
//! A [`Connective`] is identified by its output vector over the input pairs
//! in the fixed order `(t,t), (t,f), (f,t), (f,f)`. The catalog numbers the
//! sixteen vectors 1..=16 in the column order of Peirce's 1902 table, from
//! the all-false column 1 to the all-true column 16.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::value::TruthValue;

/// Input pairs in canonical order; index `i` of a connective vector is the
/// output on `INPUT_PAIRS[i]`.
pub const INPUT_PAIRS: [(TruthValue, TruthValue); 4] = [
    (TruthValue::T, TruthValue::T),
    (TruthValue::T, TruthValue::F),
    (TruthValue::F, TruthValue::T),
    (TruthValue::F, TruthValue::F),
];

/// Index of an input pair in [`INPUT_PAIRS`].
pub fn pair_index(left: TruthValue, right: TruthValue) -> usize {
    (usize::from(left == TruthValue::F) << 1) | usize::from(right == TruthValue::F)
}

/// Short label of an input pair, e.g. `tf`.
pub fn pair_label(index: usize) -> String {
    let (l, r) = INPUT_PAIRS[index];
    format!("{}{}", l.letter(), r.letter())
}

/// One of the sixteen binary connectives.
///
/// Internally a 4-bit mask: bit `i` is set iff the output on
/// `INPUT_PAIRS[i]` is `t`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Connective(u8);

struct CatalogEntry {
    column: u8,
    bits: u8,
    name: &'static str,
    aliases: &'static [&'static str],
    provenance: &'static str,
}

const fn bits(v: [bool; 4]) -> u8 {
    (v[0] as u8) | ((v[1] as u8) << 1) | ((v[2] as u8) << 2) | ((v[3] as u8) << 3)
}

const T: bool = true;
const F: bool = false;

const PRINTED: &str = "as printed";

// Ordered by column.
static CATALOG: [CatalogEntry; 16] = [
    CatalogEntry { column: 1, bits: bits([F, F, F, F]), name: "constant-false", aliases: &["false", "falsum", "contradiction"], provenance: PRINTED },
    CatalogEntry { column: 2, bits: bits([F, F, F, T]), name: "joint-denial", aliases: &["nor"], provenance: PRINTED },
    CatalogEntry { column: 3, bits: bits([F, F, T, F]), name: "converse-nonimplication", aliases: &["converse-abjunction"], provenance: PRINTED },
    CatalogEntry { column: 4, bits: bits([F, T, F, F]), name: "nonimplication", aliases: &["abjunction"], provenance: PRINTED },
    CatalogEntry { column: 5, bits: bits([T, F, F, F]), name: "conjunction", aliases: &["and"], provenance: PRINTED },
    CatalogEntry { column: 6, bits: bits([T, T, F, F]), name: "left-projection", aliases: &["left"], provenance: PRINTED },
    CatalogEntry { column: 7, bits: bits([T, F, T, F]), name: "right-projection", aliases: &["right"], provenance: PRINTED },
    CatalogEntry {
        column: 8,
        bits: bits([T, F, F, T]),
        name: "equivalence",
        aliases: &["iff", "biconditional"],
        provenance: "corrected: printed as (F,F,F,T), a duplicate of column 2; (T,F,F,T) is the only vector missing from the printed grid and is the complement of column 9, matching the column k / column 17-k complement pattern of every other pair",
    },
    CatalogEntry { column: 9, bits: bits([F, T, T, F]), name: "exclusive-disjunction", aliases: &["xor"], provenance: PRINTED },
    CatalogEntry { column: 10, bits: bits([F, T, F, T]), name: "right-negation", aliases: &["not-right"], provenance: PRINTED },
    CatalogEntry { column: 11, bits: bits([F, F, T, T]), name: "left-negation", aliases: &["not-left"], provenance: PRINTED },
    CatalogEntry { column: 12, bits: bits([F, T, T, T]), name: "alternative-denial", aliases: &["nand"], provenance: PRINTED },
    CatalogEntry { column: 13, bits: bits([T, F, T, T]), name: "implication", aliases: &["implies", "illation", "conditional"], provenance: PRINTED },
    CatalogEntry { column: 14, bits: bits([T, T, F, T]), name: "converse-implication", aliases: &["converse"], provenance: PRINTED },
    CatalogEntry { column: 15, bits: bits([T, T, T, F]), name: "disjunction", aliases: &["or"], provenance: PRINTED },
    CatalogEntry { column: 16, bits: bits([T, T, T, T]), name: "constant-true", aliases: &["true", "verum", "tautology"], provenance: PRINTED },
];

// Mask -> catalog index.
static BY_BITS: [u8; 16] = {
    let mut out = [0u8; 16];
    let mut i = 0;
    while i < 16 {
        out[CATALOG[i].bits as usize] = i as u8;
        i += 1;
    }
    out
};

impl Connective {
    pub const CONSTANT_FALSE: Connective = Connective(bits([F, F, F, F]));
    pub const JOINT_DENIAL: Connective = Connective(bits([F, F, F, T]));
    pub const CONVERSE_NONIMPLICATION: Connective = Connective(bits([F, F, T, F]));
    pub const NONIMPLICATION: Connective = Connective(bits([F, T, F, F]));
    pub const CONJUNCTION: Connective = Connective(bits([T, F, F, F]));
    pub const LEFT_PROJECTION: Connective = Connective(bits([T, T, F, F]));
    pub const RIGHT_PROJECTION: Connective = Connective(bits([T, F, T, F]));
    pub const EQUIVALENCE: Connective = Connective(bits([T, F, F, T]));
    pub const EXCLUSIVE_DISJUNCTION: Connective = Connective(bits([F, T, T, F]));
    pub const RIGHT_NEGATION: Connective = Connective(bits([F, T, F, T]));
    pub const LEFT_NEGATION: Connective = Connective(bits([F, F, T, T]));
    pub const ALTERNATIVE_DENIAL: Connective = Connective(bits([F, T, T, T]));
    pub const IMPLICATION: Connective = Connective(bits([T, F, T, T]));
    pub const CONVERSE_IMPLICATION: Connective = Connective(bits([T, T, F, T]));
    pub const DISJUNCTION: Connective = Connective(bits([T, T, T, F]));
    pub const CONSTANT_TRUE: Connective = Connective(bits([T, T, T, T]));

    /// All sixteen connectives in column order.
    pub fn all() -> impl Iterator<Item = Connective> + Clone {
        CATALOG.iter().map(|e| Connective(e.bits))
    }

    pub fn from_vector(v: [TruthValue; 4]) -> Connective {
        Connective(bits([v[0].is_true(), v[1].is_true(), v[2].is_true(), v[3].is_true()]))
    }

    /// Builds a connective from its 4-bit mask (bit `i` = output on pair `i`).
    pub fn from_mask(mask: u8) -> Option<Connective> {
        (mask < 16).then_some(Connective(mask))
    }

    pub fn from_column(column: u8) -> Option<Connective> {
        CATALOG.get(usize::from(column).checked_sub(1)?).map(|e| Connective(e.bits))
    }

    /// Looks up a connective by canonical name or alias (case-insensitive,
    /// `_` and `-` interchangeable).
    pub fn from_name(name: &str) -> Option<Connective> {
        let wanted = name.trim().to_ascii_lowercase().replace('_', "-");
        CATALOG
            .iter()
            .find(|e| e.name == wanted || e.aliases.contains(&wanted.as_str()))
            .map(|e| Connective(e.bits))
    }

    pub fn mask(self) -> u8 {
        self.0
    }

    pub fn vector(self) -> [TruthValue; 4] {
        [0, 1, 2, 3].map(|i| TruthValue::from_bool(self.0 >> i & 1 == 1))
    }

    pub fn apply(self, left: TruthValue, right: TruthValue) -> TruthValue {
        TruthValue::from_bool(self.0 >> pair_index(left, right) & 1 == 1)
    }

    fn entry(self) -> &'static CatalogEntry {
        &CATALOG[usize::from(BY_BITS[usize::from(self.0)])]
    }

    pub fn name(self) -> &'static str {
        self.entry().name
    }

    pub fn aliases(self) -> &'static [&'static str] {
        self.entry().aliases
    }

    pub fn peirce_column(self) -> u8 {
        self.entry().column
    }

    /// Where this column's vector comes from relative to the printed 1902 grid.
    pub fn provenance(self) -> &'static str {
        self.entry().provenance
    }

    /// Number of `t` entries in the vector.
    pub fn true_count(self) -> u32 {
        self.0.count_ones()
    }

    /// Vector as four letters, e.g. `tftt` for implication.
    pub fn vector_string(self) -> String {
        self.vector().iter().map(|v| v.letter()).collect()
    }
}

impl fmt::Debug for Connective {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Connective({} {})", self.name(), self.vector_string())
    }
}

impl fmt::Display for Connective {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// Error returned when a connective designator is not recognised.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("unknown connective `{0}`: expected a name, a column 1-16, or a 4-letter vector such as `tftt`")]
pub struct UnknownConnective(pub String);

impl FromStr for Connective {
    type Err = UnknownConnective;

    /// Accepts a name or alias, a column number `1`..`16`, or a vector of four
    /// truth letters (`t`/`v`/`1` and `f`/`0`), optionally separated by commas.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        if let Some(c) = Connective::from_name(s) {
            return Ok(c);
        }
        if let Ok(col) = s.trim().parse::<u8>() {
            if let Some(c) = Connective::from_column(col) {
                return Ok(c);
            }
        }
        let letters: Vec<char> = s
            .chars()
            .filter(|c| !c.is_whitespace() && !matches!(c, ',' | '(' | ')'))
            .collect();
        if letters.len() == 4 {
            let mut v = [TruthValue::T; 4];
            for (slot, ch) in v.iter_mut().zip(&letters) {
                *slot = TruthValue::parse(&ch.to_string()).ok_or_else(|| UnknownConnective(s.to_string()))?;
            }
            return Ok(Connective::from_vector(v));
        }
        Err(UnknownConnective(s.to_string()))
    }
}

impl Serialize for Connective {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.serialize_str(self.name())
    }
}

impl<'de> Deserialize<'de> for Connective {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let s = String::deserialize(deserializer)?;
        Connective::from_name(&s).ok_or_else(|| serde::de::Error::custom(UnknownConnective(s)))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use TruthValue::{F as f, T as t};

    #[test]
    fn vector_bijection() {
        let mut seen = std::collections::HashSet::new();
        for c in Connective::all() {
            assert_eq!(Connective::from_vector(c.vector()), c);
            assert!(seen.insert(c.vector()));
        }
        assert_eq!(seen.len(), 16);
    }

    #[test]
    fn columns_are_a_bijection_onto_1_to_16() {
        let mut cols: Vec<u8> = Connective::all().map(Connective::peirce_column).collect();
        cols.sort();
        assert_eq!(cols, (1..=16).collect::<Vec<_>>());
        assert_eq!(Connective::from_column(1).unwrap().vector(), [f, f, f, f]);
        assert_eq!(Connective::from_column(16).unwrap().vector(), [t, t, t, t]);
        assert_eq!(Connective::from_column(0), None);
        assert_eq!(Connective::from_column(17), None);
    }

    #[test]
    fn named_vectors() {
        assert_eq!(Connective::from_vector([t, f, t, t]), Connective::IMPLICATION);
        assert_eq!(Connective::from_vector([t, f, t, t]).name(), "implication");
        let top = Connective::from_vector([t, t, t, t]);
        assert_eq!(top.name(), "constant-true");
        assert_eq!(top.peirce_column(), 16);
        assert_eq!(Connective::from_vector([t, f, f, t]).name(), "equivalence");
    }

    #[test]
    fn equivalence_brute_force_against_the_1902_xyz_table() {
        // x y z rows: v v v / v f f / f v f / f f v
        let rows = [(t, t, t), (t, f, f), (f, t, f), (f, f, t)];
        let matches: Vec<Connective> = Connective::all()
            .filter(|c| rows.iter().all(|&(x, y, z)| c.apply(x, y) == z))
            .collect();
        assert_eq!(matches, vec![Connective::EQUIVALENCE]);
    }

    #[test]
    fn complementary_columns_sum_to_17() {
        for c in Connective::all() {
            let complement = Connective::from_mask(!c.mask() & 0xF).unwrap();
            assert_eq!(c.peirce_column() + complement.peirce_column(), 17);
        }
    }

    #[test]
    fn apply_matches_vector() {
        for c in Connective::all() {
            for (i, (l, r)) in INPUT_PAIRS.iter().enumerate() {
                assert_eq!(c.apply(*l, *r), c.vector()[i]);
                assert_eq!(pair_index(*l, *r), i);
            }
        }
    }

    #[test]
    fn designators() {
        assert_eq!("implication".parse::<Connective>().unwrap(), Connective::IMPLICATION);
        assert_eq!("IFF".parse::<Connective>().unwrap(), Connective::EQUIVALENCE);
        assert_eq!("13".parse::<Connective>().unwrap(), Connective::IMPLICATION);
        assert_eq!("tftt".parse::<Connective>().unwrap(), Connective::IMPLICATION);
        assert_eq!("v,f,f,v".parse::<Connective>().unwrap(), Connective::EQUIVALENCE);
        assert!("sometimes".parse::<Connective>().is_err());
        assert!("tft".parse::<Connective>().is_err());
    }

    #[test]
    fn serde_uses_names() {
        let json = serde_json::to_string(&Connective::DISJUNCTION).unwrap();
        assert_eq!(json, "\"disjunction\"");
        let back: Connective = serde_json::from_str(&json).unwrap();
        assert_eq!(back, Connective::DISJUNCTION);
    }
}
