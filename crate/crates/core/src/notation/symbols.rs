//! Symbol tables for the four notations.

use crate::connective::Connective;
use crate::value::TruthValue;

use super::{Encoding, NotationId};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub(crate) enum Sym {
    Binary(Connective),
    /// Prefix negation: `∼`, `¬`, and Peirce's `-`.
    NotPrefix,
    /// Postfix negation: Schröder's prime and Peirce's combining overbar.
    NotPostfix,
    Constant(TruthValue),
}

/// Combining macron, Peirce's overbar.
pub const MACRON: char = '\u{0304}';
/// Combining caron, Peirce's mark for the particular (I/O) forms.
pub const PARTICULAR_MARK: char = '\u{030C}';

pub(crate) struct Table {
    /// Every lexeme this notation accepts on input, in both encodings.
    pub lexemes: &'static [(&'static str, Sym)],
    /// Identifiers that denote constants instead of variables.
    pub reserved: &'static [(&'static str, TruthValue)],
}

const IMP: Sym = Sym::Binary(Connective::IMPLICATION);
const AND: Sym = Sym::Binary(Connective::CONJUNCTION);
const OR: Sym = Sym::Binary(Connective::DISJUNCTION);
const EQV: Sym = Sym::Binary(Connective::EQUIVALENCE);
const TOP: Sym = Sym::Constant(TruthValue::T);
const BOT: Sym = Sym::Constant(TruthValue::F);

static PEIRCE: Table = Table {
    lexemes: &[
        ("≺", IMP),
        ("-<", IMP),
        ("-", Sym::NotPrefix),
        ("\u{0304}", Sym::NotPostfix),
        ("·", AND),
        ("⋅", AND),
        ("*", AND),
        ("+", OR),
    ],
    reserved: &[("v", TruthValue::T), ("f", TruthValue::F)],
};

static SCHROEDER: Table = Table {
    lexemes: &[
        ("⋐", IMP),
        ("⊆", IMP),
        ("⫅", IMP),
        ("=<", IMP),
        ("′", Sym::NotPostfix),
        ("'", Sym::NotPostfix),
        ("·", AND),
        ("⋅", AND),
        ("*", AND),
        ("+", OR),
        ("1", TOP),
        ("0", BOT),
    ],
    reserved: &[],
};

static PEANO_RUSSELL: Table = Table {
    lexemes: &[
        ("⊃", IMP),
        (">", IMP),
        ("∼", Sym::NotPrefix),
        ("~", Sym::NotPrefix),
        ("·", AND),
        ("⋅", AND),
        (".", AND),
        ("∨", OR),
        ("|", OR),
        ("≡", EQV),
        ("==", EQV),
        ("1", TOP),
        ("0", BOT),
    ],
    reserved: &[],
};

static MODERN: Table = Table {
    lexemes: &[
        ("→", IMP),
        ("->", IMP),
        ("¬", Sym::NotPrefix),
        ("!", Sym::NotPrefix),
        ("∧", AND),
        ("&", AND),
        ("∨", OR),
        ("|", OR),
        ("↔", EQV),
        ("<->", EQV),
        ("⊤", TOP),
        ("⊥", BOT),
    ],
    reserved: &[("T", TruthValue::T), ("F", TruthValue::F)],
};

pub(crate) fn table(notation: NotationId) -> &'static Table {
    match notation {
        NotationId::Peirce => &PEIRCE,
        NotationId::Schroeder => &SCHROEDER,
        NotationId::PeanoRussell => &PEANO_RUSSELL,
        NotationId::Modern => &MODERN,
    }
}

/// Output spellings for one (notation, encoding) pair.
pub(crate) struct Spelling {
    pub implication: &'static str,
    pub conjunction: &'static str,
    pub disjunction: &'static str,
    pub equivalence: Option<&'static str>,
    pub negation: Negation,
    pub top: &'static str,
    pub bottom: &'static str,
}

#[derive(Clone, Copy)]
pub(crate) enum Negation {
    Prefix(&'static str),
    Postfix(&'static str),
    /// Combining overbar on single letters, `-` prefix otherwise.
    Overbar,
}

pub(crate) fn spelling(notation: NotationId, encoding: Encoding) -> Spelling {
    use Encoding::*;
    use NotationId::*;
    match (notation, encoding) {
        (Peirce, Unicode) => Spelling {
            implication: "≺",
            conjunction: "·",
            disjunction: "+",
            equivalence: None,
            negation: Negation::Overbar,
            top: "v",
            bottom: "f",
        },
        (Peirce, Ascii) => Spelling {
            implication: "-<",
            conjunction: "*",
            disjunction: "+",
            equivalence: None,
            negation: Negation::Prefix("-"),
            top: "v",
            bottom: "f",
        },
        (Schroeder, Unicode) => Spelling {
            implication: "⋐",
            conjunction: "·",
            disjunction: "+",
            equivalence: None,
            negation: Negation::Postfix("′"),
            top: "1",
            bottom: "0",
        },
        (Schroeder, Ascii) => Spelling {
            implication: "=<",
            conjunction: "*",
            disjunction: "+",
            equivalence: None,
            negation: Negation::Postfix("'"),
            top: "1",
            bottom: "0",
        },
        (PeanoRussell, Unicode) => Spelling {
            implication: "⊃",
            conjunction: "·",
            disjunction: "∨",
            equivalence: Some("≡"),
            negation: Negation::Prefix("∼"),
            top: "1",
            bottom: "0",
        },
        (PeanoRussell, Ascii) => Spelling {
            implication: ">",
            conjunction: ".",
            disjunction: "|",
            equivalence: Some("=="),
            negation: Negation::Prefix("~"),
            top: "1",
            bottom: "0",
        },
        (Modern, Unicode) => Spelling {
            implication: "→",
            conjunction: "∧",
            disjunction: "∨",
            equivalence: Some("↔"),
            negation: Negation::Prefix("¬"),
            top: "⊤",
            bottom: "⊥",
        },
        (Modern, Ascii) => Spelling {
            implication: "->",
            conjunction: "&",
            disjunction: "|",
            equivalence: Some("<->"),
            negation: Negation::Prefix("!"),
            top: "T",
            bottom: "F",
        },
    }
}

/// Notations (other than `except`) that use `lexeme` at the start of `rest`.
pub(crate) fn foreign_owner(rest: &[char], except: NotationId) -> Option<(NotationId, String)> {
    let mut best: Option<(NotationId, &str)> = None;
    for n in NotationId::ALL {
        if n == except {
            continue;
        }
        for (lex, _) in table(n).lexemes {
            if starts_with(rest, lex) && best.is_none_or(|(_, b)| lex.chars().count() > b.chars().count()) {
                best = Some((n, lex));
            }
        }
    }
    best.map(|(n, l)| (n, l.to_string()))
}

pub(crate) fn starts_with(rest: &[char], lexeme: &str) -> bool {
    lexeme.chars().enumerate().all(|(i, c)| rest.get(i) == Some(&c))
}
