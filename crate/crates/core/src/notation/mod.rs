//! Reading and writing formulas in four notations.
//!
//! | notation        | implication | negation         | conjunction | disjunction | equivalence | constants |
//! |-----------------|-------------|------------------|-------------|-------------|-------------|-----------|
//! | `peirce`        | `≺` / `-<`  | overbar / `-x`   | `·` / `*`   | `+`         | (expanded)  | `v` `f`   |
//! | `schroeder`     | `⋐` / `=<`  | `x′` / `x'`      | `·` / `*`   | `+`         | (expanded)  | `1` `0`   |
//! | `peano-russell` | `⊃` / `>`   | `∼x` / `~x`      | `·` / `.`   | `∨` / `\|`  | `≡` / `==`  | `1` `0`   |
//! | `modern`        | `→` / `->`  | `¬x` / `!x`      | `∧` / `&`   | `∨` / `\|`  | `↔` / `<->` | `⊤` `⊥` / `T` `F` |
//!
//! The parser accepts both encodings of the selected notation (plus `⊆` and
//! `⫅` for Schröder's subsumption, and `[]`/`{}` as brackets); the encoding
//! only decides what [`render`] writes. Connectives a notation has no symbol
//! for are rewritten by [`expand_for`] before rendering.

mod parser;
mod render;
pub(crate) mod symbols;

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::error::Error;
use crate::formula::Formula;

pub use render::{expand_for, is_primitive, render_with, ParenStyle};
pub use symbols::{MACRON, PARTICULAR_MARK};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum NotationId {
    Peirce,
    Schroeder,
    PeanoRussell,
    Modern,
}

impl NotationId {
    pub const ALL: [NotationId; 4] =
        [NotationId::Peirce, NotationId::Schroeder, NotationId::PeanoRussell, NotationId::Modern];

    pub fn as_str(self) -> &'static str {
        match self {
            NotationId::Peirce => "peirce",
            NotationId::Schroeder => "schroeder",
            NotationId::PeanoRussell => "peano-russell",
            NotationId::Modern => "modern",
        }
    }

    /// Identifiers this notation reads as constants.
    pub fn reserved_words(self) -> impl Iterator<Item = &'static str> {
        symbols::table(self).reserved.iter().map(|(w, _)| *w)
    }
}

impl fmt::Display for NotationId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for NotationId {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s.to_ascii_lowercase().as_str() {
            "peirce" => Ok(NotationId::Peirce),
            "schroeder" | "schröder" | "schroder" => Ok(NotationId::Schroeder),
            "peano-russell" | "peano" | "russell" => Ok(NotationId::PeanoRussell),
            "modern" => Ok(NotationId::Modern),
            other => Err(format!("unknown notation `{other}`")),
        }
    }
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Encoding {
    #[default]
    Unicode,
    Ascii,
}

impl Encoding {
    pub const ALL: [Encoding; 2] = [Encoding::Unicode, Encoding::Ascii];
}

impl fmt::Display for Encoding {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Encoding::Unicode => "unicode",
            Encoding::Ascii => "ascii",
        })
    }
}

impl FromStr for Encoding {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s.to_ascii_lowercase().as_str() {
            "unicode" | "utf8" | "utf-8" => Ok(Encoding::Unicode),
            "ascii" => Ok(Encoding::Ascii),
            other => Err(format!("unknown encoding `{other}`")),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct SyntaxConfig {
    pub notation: NotationId,
    pub encoding: Encoding,
}

impl SyntaxConfig {
    pub const fn new(notation: NotationId, encoding: Encoding) -> Self {
        SyntaxConfig { notation, encoding }
    }

    /// All eight (notation, encoding) pairs.
    pub fn all() -> impl Iterator<Item = SyntaxConfig> {
        NotationId::ALL
            .into_iter()
            .flat_map(|n| Encoding::ALL.into_iter().map(move |e| SyntaxConfig::new(n, e)))
    }
}

impl Default for SyntaxConfig {
    fn default() -> Self {
        SyntaxConfig::new(NotationId::Modern, Encoding::Unicode)
    }
}

/// Why a formula could not be parsed. `position` is a character offset.
#[derive(Clone, Debug, PartialEq, Eq, Error, Serialize)]
#[error("parse error at position {position}: {message}")]
pub struct ParseDiagnostic {
    pub position: usize,
    pub message: String,
    pub expected: Vec<String>,
}

impl ParseDiagnostic {
    pub fn new(position: usize, message: impl Into<String>, expected: Vec<String>) -> Self {
        ParseDiagnostic { position, message: message.into(), expected }
    }
}

pub fn parse(text: &str, config: SyntaxConfig) -> Result<Formula, ParseDiagnostic> {
    parser::parse(text, config)
}

/// Renders with the notation's default parenthesization.
///
/// Peirce and Schröder get [`ParenStyle::Grouped`]; Peano-Russell and modern
/// get [`ParenStyle::Minimal`].
pub fn render(f: &Formula, config: SyntaxConfig) -> String {
    render_with(f, config, ParenStyle::default_for(config.notation))
}

/// `render(parse(text, from), to)`.
///
/// Fails if the text does not parse, or if a variable name is a reserved
/// word in the target notation (e.g. a variable `v` cannot be written in
/// Peirce's notation, where `v` is the constant true).
pub fn translate(text: &str, from: SyntaxConfig, to: SyntaxConfig) -> Result<String, Error> {
    let f = parse(text, from)?;
    check_reserved(&f, to.notation)?;
    Ok(render(&f, to))
}

/// Errors if any variable of `f` is spelled like a constant of `notation`.
pub fn check_reserved(f: &Formula, notation: NotationId) -> Result<(), Error> {
    for name in f.variables() {
        if notation.reserved_words().any(|w| w == name.as_str()) {
            return Err(Error::ReservedName { name, notation });
        }
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(text: &str, n: NotationId) -> Formula {
        parse(text, SyntaxConfig::new(n, Encoding::Unicode)).unwrap()
    }

    #[test]
    fn barbara_translates_to_peirce() {
        let out = translate(
            "(x > y) . (y > z) > (x > z)",
            SyntaxConfig::new(NotationId::PeanoRussell, Encoding::Ascii),
            SyntaxConfig::new(NotationId::Peirce, Encoding::Ascii),
        )
        .unwrap();
        assert_eq!(out, "((x -< y) * (y -< z)) -< (x -< z)");
    }

    #[test]
    fn identity_translation_reparses() {
        for cfg in SyntaxConfig::all() {
            let f = Formula::iff(Formula::var("a"), Formula::not(Formula::and(Formula::var("b"), Formula::var("a"))));
            let text = render(&f, cfg);
            let again = translate(&text, cfg, cfg).unwrap();
            assert_eq!(parse(&again, cfg).unwrap(), parse(&text, cfg).unwrap(), "{cfg:?}");
        }
    }

    #[test]
    fn three_notations_of_one_formula_agree() {
        let pr = p("[(∼c ⊃ a) ⊃ (∼a ⊃ c)] ⊃ {(∼c ⊃ a) ⊃ [(c ⊃ a) ⊃ a]}", NotationId::PeanoRussell);
        let pe = p("[(c̄ ≺ a) ≺ (ā ≺ c)] ≺ {(c̄ ≺ a) ≺ [(c ≺ a) ≺ a]}", NotationId::Peirce);
        let sc = p("[(c′ ⋐ a) ⋐ (a′ ⋐ c)] ⋐ {(c′ ⋐ a) ⋐ [(c ⋐ a) ⋐ a]}", NotationId::Schroeder);
        assert_eq!(pr, pe);
        assert_eq!(pr, sc);
    }

    #[test]
    fn reserved_names_block_translation() {
        let err = translate(
            "v & w",
            SyntaxConfig::new(NotationId::Modern, Encoding::Ascii),
            SyntaxConfig::new(NotationId::Peirce, Encoding::Ascii),
        )
        .unwrap_err();
        assert!(matches!(err, Error::ReservedName { notation: NotationId::Peirce, .. }));
        assert!(translate(
            "v & w",
            SyntaxConfig::new(NotationId::Modern, Encoding::Ascii),
            SyntaxConfig::new(NotationId::Schroeder, Encoding::Ascii),
        )
        .is_ok());
    }

    #[test]
    fn translate_propagates_diagnostics() {
        let err = translate("a ->", SyntaxConfig::default(), SyntaxConfig::default()).unwrap_err();
        assert!(matches!(err, Error::Parse(_)));
    }

    #[test]
    fn notation_names() {
        for n in NotationId::ALL {
            assert_eq!(n.as_str().parse::<NotationId>().unwrap(), n);
        }
        assert_eq!(NotationId::Peirce.reserved_words().collect::<Vec<_>>(), ["v", "f"]);
    }
}
