//! Three-valued matrices over V (true), L ("limit") and F (false), from the
//! February 1909 logic notebook.
//!
//! Only negation, `⊕` and `Z̲` are defined there. Formulas evaluated here may
//! use negation, disjunction (read as `⊕`) and conjunction (read as `Z̲`);
//! every other connective, implication included, is rejected with
//! [`Error::UnsupportedConnective`].

use serde::Serialize;

use crate::bivalent::Classification;
use crate::connective::Connective;
use crate::error::Error;
use crate::formula::{Assignment3, Formula, VariableName};
use crate::notation::Encoding;
use crate::value::{Triadic, TruthValue};

use Triadic::{F, L, V};

/// Row/column labels, in the notebook's header order.
pub const LABELS: [Triadic; 3] = [V, L, F];

/// `x̄`: V→F, L→L, F→V.
pub const NEG: [Triadic; 3] = [F, L, V];

/// `⊕`, rows = left operand, columns = right operand, both in [`LABELS`] order.
pub const OPLUS: [[Triadic; 3]; 3] = [[V, V, V], [V, L, L], [V, L, F]];

/// `Z̲`, same layout as [`OPLUS`].
pub const ZCONJ: [[Triadic; 3]; 3] = [[V, L, F], [L, L, F], [F, F, F]];

pub fn neg(x: Triadic) -> Triadic {
    NEG[x.index()]
}

pub fn oplus(x: Triadic, y: Triadic) -> Triadic {
    OPLUS[x.index()][y.index()]
}

pub fn zconj(x: Triadic, y: Triadic) -> Triadic {
    ZCONJ[x.index()][y.index()]
}

/// All three matrices, for serialization.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct TriadicTables {
    pub labels: [Triadic; 3],
    pub neg: [Triadic; 3],
    pub oplus: [[Triadic; 3]; 3],
    pub zconj: [[Triadic; 3]; 3],
}

pub const TABLES: TriadicTables = TriadicTables { labels: LABELS, neg: NEG, oplus: OPLUS, zconj: ZCONJ };

fn binary_op(c: Connective) -> Result<fn(Triadic, Triadic) -> Triadic, Error> {
    match c {
        Connective::DISJUNCTION => Ok(oplus),
        Connective::CONJUNCTION => Ok(zconj),
        other => Err(Error::UnsupportedConnective(other)),
    }
}

/// Rejects formulas using anything but negation, disjunction, conjunction.
pub fn check_supported(f: &Formula) -> Result<(), Error> {
    match f {
        Formula::Constant { .. } | Formula::Variable { .. } => Ok(()),
        Formula::Negation { operand } => check_supported(operand),
        Formula::Binary { connective, left, right } => {
            binary_op(*connective)?;
            check_supported(left)?;
            check_supported(right)
        }
    }
}

pub fn eval3(f: &Formula, a: &Assignment3) -> Result<Triadic, Error> {
    check_supported(f)?;
    eval_checked(f, a)
}

fn eval_checked(f: &Formula, a: &Assignment3) -> Result<Triadic, Error> {
    match f {
        Formula::Constant { value } => Ok(Triadic::from(*value)),
        Formula::Variable { name } => a.lookup(name),
        Formula::Negation { operand } => Ok(neg(eval_checked(operand, a)?)),
        Formula::Binary { connective, left, right } => {
            Ok(binary_op(*connective)?(eval_checked(left, a)?, eval_checked(right, a)?))
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Row3 {
    pub values: Vec<Triadic>,
    pub value: Triadic,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct TruthTable3 {
    pub variables: Vec<VariableName>,
    pub rows: Vec<Row3>,
}

impl TruthTable3 {
    pub fn values(&self) -> Vec<Triadic> {
        self.rows.iter().map(|r| r.value).collect()
    }
}

/// Triadic rows are 3^n, so the default limit is lower than the bivalent one.
pub const DEFAULT_VARIABLE_LIMIT: usize = 12;

pub fn table3(f: &Formula) -> Result<TruthTable3, Error> {
    table3_with(f, DEFAULT_VARIABLE_LIMIT)
}

/// 3^n rows, V before L before F, leftmost variable slowest.
pub fn table3_with(f: &Formula, variable_limit: usize) -> Result<TruthTable3, Error> {
    check_supported(f)?;
    let variables = f.variables();
    let n = variables.len();
    if n > variable_limit {
        return Err(Error::VariableLimit { found: n, limit: variable_limit });
    }
    let total = 3usize.pow(n as u32);
    let mut rows = Vec::with_capacity(total);
    for r in 0..total {
        let mut values = vec![V; n];
        let mut rest = r;
        for slot in values.iter_mut().rev() {
            *slot = LABELS[rest % 3];
            rest /= 3;
        }
        let a: Assignment3 = variables.iter().cloned().zip(values.iter().copied()).collect();
        let value = eval_checked(f, &a)?;
        rows.push(Row3 { values, value });
    }
    Ok(TruthTable3 { variables, rows })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Mismatch {
    pub table: &'static str,
    pub cell: Vec<Triadic>,
    pub triadic: Triadic,
    pub bivalent: TruthValue,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct RestrictionReport {
    pub cells_checked: usize,
    pub mismatches: Vec<Mismatch>,
}

impl RestrictionReport {
    pub fn passed(&self) -> bool {
        self.mismatches.is_empty()
    }
}

/// Compares each matrix, restricted to {V, F}, with bivalent negation,
/// disjunction and conjunction under V↔t, F↔f.
pub fn restriction_check() -> RestrictionReport {
    restriction_check_of(&TABLES)
}

pub fn restriction_check_of(tables: &TriadicTables) -> RestrictionReport {
    let classical = [TruthValue::T, TruthValue::F];
    let mut cells_checked = 0;
    let mut mismatches = Vec::new();
    let mut compare = |table: &'static str, cell: Vec<Triadic>, triadic: Triadic, bivalent: TruthValue| {
        cells_checked += 1;
        if triadic != Triadic::from(bivalent) {
            mismatches.push(Mismatch { table, cell, triadic, bivalent });
        }
    };
    for x in classical {
        let tx = Triadic::from(x);
        compare("neg", vec![tx], tables.neg[tx.index()], !x);
        for y in classical {
            let ty = Triadic::from(y);
            compare("oplus", vec![tx, ty], tables.oplus[tx.index()][ty.index()], Connective::DISJUNCTION.apply(x, y));
            compare("zconj", vec![tx, ty], tables.zconj[tx.index()][ty.index()], Connective::CONJUNCTION.apply(x, y));
        }
    }
    RestrictionReport { cells_checked, mismatches }
}

/// Designated-value classification. This goes beyond the notebook, which
/// defines no notion of triadic validity: a formula counts as a tautology
/// when every row takes a designated value, a contradiction when none does.
pub fn classify3(f: &Formula, designated: &[Triadic]) -> Result<Classification, Error> {
    let table = table3(f)?;
    let hits = table.rows.iter().filter(|r| designated.contains(&r.value)).count();
    Ok(if hits == table.rows.len() {
        Classification::Tautology
    } else if hits == 0 {
        Classification::Contradiction
    } else {
        Classification::Contingent
    })
}

fn triadic_letter(v: Triadic) -> char {
    v.letter()
}

/// The three notebook matrices as tab-separated blocks, separated by a
/// blank line. Headers are `x̄`, `⊕`, `Z̲` in unicode and `-x`, `(+)`, `Z_`
/// in ascii.
pub fn render_tables(encoding: Encoding) -> String {
    [render_neg(encoding), render_oplus(encoding), render_zconj(encoding)].join("\n")
}

pub fn render_neg(encoding: Encoding) -> String {
    let header = match encoding {
        Encoding::Unicode => "x\tx\u{0304}",
        Encoding::Ascii => "x\t-x",
    };
    let mut out = format!("{header}\n");
    for x in LABELS {
        out.push_str(&format!("{}\t{}\n", triadic_letter(x), triadic_letter(neg(x))));
    }
    out
}

fn render_matrix(corner: &str, m: &[[Triadic; 3]; 3]) -> String {
    let mut out = corner.to_string();
    for c in LABELS {
        out.push('\t');
        out.push(triadic_letter(c));
    }
    out.push('\n');
    for (r, row) in LABELS.iter().zip(m) {
        out.push(triadic_letter(*r));
        for cell in row {
            out.push('\t');
            out.push(triadic_letter(*cell));
        }
        out.push('\n');
    }
    out
}

pub fn render_oplus(encoding: Encoding) -> String {
    render_matrix(if encoding == Encoding::Unicode { "⊕" } else { "(+)" }, &OPLUS)
}

pub fn render_zconj(encoding: Encoding) -> String {
    render_matrix(if encoding == Encoding::Unicode { "Z\u{0332}" } else { "Z_" }, &ZCONJ)
}
