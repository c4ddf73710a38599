//! The 1880 A/E/I/O scheme in Peirce's notation, and Barbara as a formula.
//!
//! Universal forms are implications (`A: a ≺ b`, `E: a ≺ b̄`). Particular
//! forms mark the subject with a caron (`ǎ`), which stands for a
//! quantifier; they can be written and read back but not evaluated. In
//! ascii the mark is a `?` before the subject.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};
use unicode_width::UnicodeWidthStr;

use crate::bivalent::{classify, Verdict};
use crate::connective::Connective;
use crate::error::Error;
use crate::formula::{Formula, VariableName};
use crate::notation::{parse, render, Encoding, NotationId, SyntaxConfig, PARTICULAR_MARK};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Figure {
    A,
    E,
    I,
    O,
}

impl Figure {
    pub const ALL: [Figure; 4] = [Figure::A, Figure::E, Figure::I, Figure::O];

    pub fn is_particular(self) -> bool {
        matches!(self, Figure::I | Figure::O)
    }

    pub fn is_negative(self) -> bool {
        matches!(self, Figure::E | Figure::O)
    }

    /// English reading and traditional name.
    pub fn gloss(self) -> (&'static str, &'static str) {
        match self {
            Figure::A => ("All A are B", "universal affirmative"),
            Figure::E => ("No A is B", "universal negative"),
            Figure::I => ("Some A is B", "particular affirmative"),
            Figure::O => ("Some A is not B", "particular negative"),
        }
    }
}

impl fmt::Display for Figure {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self:?}")
    }
}

impl FromStr for Figure {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "A" | "a" => Ok(Figure::A),
            "E" | "e" => Ok(Figure::E),
            "I" | "i" => Ok(Figure::I),
            "O" | "o" => Ok(Figure::O),
            other => Err(format!("unknown figure `{other}` (expected A, E, I or O)")),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct CategoricalForm {
    pub figure: Figure,
    pub subject: VariableName,
    pub predicate: VariableName,
}

impl CategoricalForm {
    pub fn new(figure: Figure, subject: &str, predicate: &str) -> Result<Self, Error> {
        Ok(CategoricalForm { figure, subject: VariableName::new(subject)?, predicate: VariableName::new(predicate)? })
    }

    /// The implication with the particular mark dropped.
    fn skeleton(&self) -> Formula {
        let s = Formula::variable(self.subject.clone());
        let p = Formula::variable(self.predicate.clone());
        Formula::implies(s, if self.figure.is_negative() { Formula::not(p) } else { p })
    }
}

/// A → subject ≺ predicate; E → subject ≺ ¬predicate. Particular forms
/// need quantification and are refused.
pub fn as_formula(c: &CategoricalForm) -> Result<Formula, Error> {
    match c.figure {
        Figure::A | Figure::E => Ok(c.skeleton()),
        Figure::I => Err(Error::QuantifiedForm('I')),
        Figure::O => Err(Error::QuantifiedForm('O')),
    }
}

pub fn render_categorical(c: &CategoricalForm, config: SyntaxConfig) -> String {
    let text = render(&c.skeleton(), config);
    if !c.figure.is_particular() {
        return text;
    }
    // The skeleton is an implication with a bare variable on the left, so
    // the rendering starts with the subject's name.
    let subject = c.subject.as_str();
    debug_assert!(text.starts_with(subject));
    match config.encoding {
        Encoding::Unicode => format!("{subject}{PARTICULAR_MARK}{}", &text[subject.len()..]),
        Encoding::Ascii => format!("?{text}"),
    }
}

/// Reads back what [`render_categorical`] writes.
pub fn parse_categorical(text: &str, config: SyntaxConfig) -> Result<CategoricalForm, Error> {
    let trimmed = text.trim_start();
    let (particular, rest) = if let Some(rest) = trimmed.strip_prefix('?') {
        (true, rest.to_string())
    } else if trimmed.contains(PARTICULAR_MARK) {
        (true, trimmed.replacen(PARTICULAR_MARK, "", 1))
    } else {
        (false, trimmed.to_string())
    };
    let f = parse(&rest, config)?;
    let shape_error = || Error::InvalidName(format!("`{text}` is not a categorical form"));
    let Formula::Binary { connective: Connective::IMPLICATION, left, right } = f else {
        return Err(shape_error());
    };
    let Formula::Variable { name: subject } = *left else {
        return Err(shape_error());
    };
    let (negative, predicate) = match *right {
        Formula::Variable { name } => (false, name),
        Formula::Negation { operand } => match *operand {
            Formula::Variable { name } => (true, name),
            _ => return Err(shape_error()),
        },
        _ => return Err(shape_error()),
    };
    let figure = match (particular, negative) {
        (false, false) => Figure::A,
        (false, true) => Figure::E,
        (true, false) => Figure::I,
        (true, true) => Figure::O,
    };
    Ok(CategoricalForm { figure, subject, predicate })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Barbara {
    /// `(x ≺ y) ≺ ((y ≺ z) ≺ (x ≺ z))`
    pub nested: Formula,
    /// `((x ≺ y) · (y ≺ z)) ≺ (x ≺ z)`
    pub conjunctive: Formula,
    pub nested_verdict: Verdict,
    pub conjunctive_verdict: Verdict,
}

pub fn barbara(x: &VariableName, y: &VariableName, z: &VariableName) -> Barbara {
    let v = |n: &VariableName| Formula::variable(n.clone());
    let xy = Formula::implies(v(x), v(y));
    let yz = Formula::implies(v(y), v(z));
    let xz = Formula::implies(v(x), v(z));
    let nested = Formula::implies(xy.clone(), Formula::implies(yz.clone(), xz.clone()));
    let conjunctive = Formula::implies(Formula::and(xy, yz), xz);
    let verdict = |f: &Formula| classify(f).expect("three variables at most");
    Barbara { nested_verdict: verdict(&nested), conjunctive_verdict: verdict(&conjunctive), nested, conjunctive }
}

/// The four-line scheme: figure letter, formula, reading, name.
pub fn aeio_table(config: SyntaxConfig) -> String {
    let rows: Vec<[String; 3]> = Figure::ALL
        .iter()
        .map(|&fig| {
            let c = CategoricalForm::new(fig, "a", "b").expect("valid names");
            let (reading, name) = fig.gloss();
            [format!("{fig}. {}", render_categorical(&c, config)), reading.to_string(), format!("({name})")]
        })
        .collect();
    let widths: Vec<usize> = (0..2).map(|i| rows.iter().map(|r| r[i].width()).max().unwrap_or(0)).collect();
    let mut out = String::new();
    for r in rows {
        for (i, w) in widths.iter().enumerate() {
            out.push_str(&r[i]);
            out.push_str(&" ".repeat(w - r[i].width() + 3));
        }
        out.push_str(&r[2]);
        out.push('\n');
    }
    out
}

/// Peirce notation in the given encoding.
pub fn peirce(encoding: Encoding) -> SyntaxConfig {
    SyntaxConfig::new(NotationId::Peirce, encoding)
}
