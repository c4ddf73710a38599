//! Two-valued semantics: evaluation, direct truth tables, the 2×2 matrix
//! presentation, classification and entailment.
//!
//! Tabulation is brute force by design. Rows are evaluated 64 at a time as
//! bit columns: bit `r` of a column is the value in canonical row `r`, where
//! row 0 assigns `t` to every variable and the leftmost variable varies
//! slowest.

use serde::Serialize;

use crate::connective::Connective;
use crate::error::Error;
use crate::formula::{Assignment2, Formula, VariableName};
use crate::notation::{render, NotationId, SyntaxConfig};
use crate::value::TruthValue;

pub const DEFAULT_VARIABLE_LIMIT: usize = 20;

pub fn eval(f: &Formula, a: &Assignment2) -> Result<TruthValue, Error> {
    match f {
        Formula::Constant { value } => Ok(*value),
        Formula::Variable { name } => a.lookup(name),
        Formula::Negation { operand } => Ok(!eval(operand, a)?),
        Formula::Binary { connective, left, right } => Ok(connective.apply(eval(left, a)?, eval(right, a)?)),
    }
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum RowOrder {
    /// `t` before `f`, as in the 1902 x/y/z table.
    #[default]
    TFirst,
    /// `f` before `t`, as in the 1880s list form of the conditional.
    FFirst,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct TableOptions {
    pub variable_limit: usize,
    pub row_order: RowOrder,
}

impl Default for TableOptions {
    fn default() -> Self {
        TableOptions { variable_limit: DEFAULT_VARIABLE_LIMIT, row_order: RowOrder::TFirst }
    }
}

/// A bit-column truth function over `n` variables, canonical row order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub(crate) struct Columns {
    pub n: usize,
    pub words: Vec<u64>,
}

impl Columns {
    fn rows(n: usize) -> usize {
        1usize << n
    }

    fn word_count(n: usize) -> usize {
        Self::rows(n).div_ceil(64)
    }

    fn last_mask(n: usize) -> u64 {
        match Self::rows(n) % 64 {
            0 => u64::MAX,
            r => (1u64 << r) - 1,
        }
    }

    fn constant(n: usize, v: TruthValue) -> Columns {
        let mut words = vec![if v.is_true() { u64::MAX } else { 0 }; Self::word_count(n)];
        if let Some(last) = words.last_mut() {
            *last &= Self::last_mask(n);
        }
        Columns { n, words }
    }

    /// Variable `i` (0 = leftmost) is `t` in row `r` iff bit `n-1-i` of `r` is clear.
    fn variable(n: usize, i: usize) -> Columns {
        let shift = n - 1 - i;
        let rows = Self::rows(n);
        let mut words = vec![0u64; Self::word_count(n)];
        for (w, word) in words.iter_mut().enumerate() {
            if shift >= 6 {
                let base = w * 64;
                if base < rows && (base >> shift) & 1 == 0 {
                    *word = u64::MAX;
                }
            } else {
                for b in 0..64 {
                    let r = w * 64 + b;
                    if r < rows && (r >> shift) & 1 == 0 {
                        *word |= 1 << b;
                    }
                }
            }
        }
        if let Some(last) = words.last_mut() {
            *last &= Self::last_mask(n);
        }
        Columns { n, words }
    }

    fn not(mut self) -> Columns {
        for w in &mut self.words {
            *w = !*w;
        }
        if let Some(last) = self.words.last_mut() {
            *last &= Self::last_mask(self.n);
        }
        self
    }

    fn combine(c: Connective, a: &Columns, b: &Columns) -> Columns {
        let v = c.vector();
        let sel = |i: usize| if v[i].is_true() { u64::MAX } else { 0 };
        let (m0, m1, m2, m3) = (sel(0), sel(1), sel(2), sel(3));
        let words = a
            .words
            .iter()
            .zip(&b.words)
            .map(|(&x, &y)| (m0 & x & y) | (m1 & x & !y) | (m2 & !x & y) | (m3 & !x & !y))
            .collect();
        let mut out = Columns { n: a.n, words };
        if let Some(last) = out.words.last_mut() {
            *last &= Self::last_mask(a.n);
        }
        out
    }

    pub fn get(&self, row: usize) -> TruthValue {
        TruthValue::from_bool(self.words[row / 64] >> (row % 64) & 1 == 1)
    }

    fn last(&self, v: TruthValue) -> Option<usize> {
        (0..Self::rows(self.n)).rev().find(|&r| self.get(r) == v)
    }

    fn first(&self, v: TruthValue) -> Option<usize> {
        let full = Self::word_count(self.n);
        (0..full).find_map(|w| {
            let mut word = if v.is_true() { self.words[w] } else { !self.words[w] };
            if w == full - 1 {
                word &= Self::last_mask(self.n);
            }
            (word != 0).then(|| w * 64 + word.trailing_zeros() as usize)
        })
    }
}

/// Evaluates `f` on every canonical row over `vars`.
pub(crate) fn columns(f: &Formula, vars: &[VariableName]) -> Result<Columns, Error> {
    let n = vars.len();
    Ok(match f {
        Formula::Constant { value } => Columns::constant(n, *value),
        Formula::Variable { name } => {
            let i = vars.iter().position(|v| v == name).ok_or_else(|| Error::UnboundVariable(name.clone()))?;
            Columns::variable(n, i)
        }
        Formula::Negation { operand } => columns(operand, vars)?.not(),
        Formula::Binary { connective, left, right } => {
            Columns::combine(*connective, &columns(left, vars)?, &columns(right, vars)?)
        }
    })
}

fn check_limit(found: usize, limit: usize) -> Result<(), Error> {
    if found > limit {
        Err(Error::VariableLimit { found, limit })
    } else {
        Ok(())
    }
}

/// Values of the variables in canonical row `r`.
pub fn row_values(n: usize, r: usize) -> Vec<TruthValue> {
    (0..n).map(|i| TruthValue::from_bool((r >> (n - 1 - i)) & 1 == 0)).collect()
}

fn row_assignment(vars: &[VariableName], r: usize) -> Assignment2 {
    vars.iter().cloned().zip(row_values(vars.len(), r)).collect()
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Row {
    /// One value per variable, aligned with [`TruthTable::variables`].
    pub values: Vec<TruthValue>,
    pub value: TruthValue,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct TruthTable {
    pub variables: Vec<VariableName>,
    pub row_order: RowOrder,
    pub rows: Vec<Row>,
}

impl TruthTable {
    pub fn assignment(&self, row: usize) -> Assignment2 {
        self.variables.iter().cloned().zip(self.rows[row].values.iter().copied()).collect()
    }

    /// The value column.
    pub fn values(&self) -> Vec<TruthValue> {
        self.rows.iter().map(|r| r.value).collect()
    }
}

pub fn truth_table(f: &Formula) -> Result<TruthTable, Error> {
    truth_table_with(f, TableOptions::default())
}

pub fn truth_table_with(f: &Formula, options: TableOptions) -> Result<TruthTable, Error> {
    let variables = f.variables();
    check_limit(variables.len(), options.variable_limit)?;
    let cols = columns(f, &variables)?;
    let n = variables.len();
    let total = 1usize << n;
    let rows = (0..total)
        .map(|i| {
            // Reversing the canonical index flips every variable, giving f-first order.
            let r = match options.row_order {
                RowOrder::TFirst => i,
                RowOrder::FFirst => total - 1 - i,
            };
            Row { values: row_values(n, r), value: cols.get(r) }
        })
        .collect();
    Ok(TruthTable { variables, row_order: options.row_order, rows })
}

/// A connective as a 2×2 grid: rows are the left operand (antecedent),
/// columns the right operand (consequent), both labelled `t`, `f`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct MatrixTable {
    pub connective: Connective,
    pub row_labels: [TruthValue; 2],
    pub column_labels: [TruthValue; 2],
    pub cells: [[TruthValue; 2]; 2],
}

impl MatrixTable {
    pub fn cell(&self, row: TruthValue, column: TruthValue) -> TruthValue {
        let idx = |v: TruthValue| usize::from(v == TruthValue::F);
        self.cells[idx(row)][idx(column)]
    }

    /// Cells read row by row, which is the connective vector.
    pub fn flatten(&self) -> [TruthValue; 4] {
        [self.cells[0][0], self.cells[0][1], self.cells[1][0], self.cells[1][1]]
    }
}

pub fn matrix_table(c: Connective) -> MatrixTable {
    let labels = TruthValue::ALL;
    let cells = labels.map(|r| labels.map(|col| c.apply(r, col)));
    MatrixTable { connective: c, row_labels: labels, column_labels: labels, cells }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Classification {
    Tautology,
    Contradiction,
    Contingent,
}

impl Classification {
    pub fn as_str(self) -> &'static str {
        match self {
            Classification::Tautology => "tautology",
            Classification::Contradiction => "contradiction",
            Classification::Contingent => "contingent",
        }
    }
}

/// Classification with the first witnesses in canonical row order.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Verdict {
    pub class: Classification,
    /// First row valued `f`; absent for tautologies.
    pub falsifying: Option<Assignment2>,
    /// First row valued `t`; absent for contradictions.
    pub satisfying: Option<Assignment2>,
}

impl Verdict {
    pub fn is_tautology(&self) -> bool {
        self.class == Classification::Tautology
    }
}

pub fn classify(f: &Formula) -> Result<Verdict, Error> {
    classify_with(f, DEFAULT_VARIABLE_LIMIT)
}

pub fn classify_with(f: &Formula, variable_limit: usize) -> Result<Verdict, Error> {
    let vars = f.variables();
    check_limit(vars.len(), variable_limit)?;
    let cols = columns(f, &vars)?;
    let falsifying = cols.first(TruthValue::F).map(|r| row_assignment(&vars, r));
    let satisfying = cols.first(TruthValue::T).map(|r| row_assignment(&vars, r));
    let class = match (&falsifying, &satisfying) {
        (None, _) => Classification::Tautology,
        (_, None) => Classification::Contradiction,
        _ => Classification::Contingent,
    };
    Ok(Verdict { class, falsifying, satisfying })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Entailment {
    pub valid: bool,
    /// A row making every premise `t` and the conclusion `f`: the first
    /// such row in f-first order, so variables lean towards `f`.
    pub counterexample: Option<Assignment2>,
}

pub fn entails(premises: &[Formula], conclusion: &Formula) -> Result<Entailment, Error> {
    entails_with(premises, conclusion, DEFAULT_VARIABLE_LIMIT)
}

pub fn entails_with(premises: &[Formula], conclusion: &Formula, variable_limit: usize) -> Result<Entailment, Error> {
    let mut vars: Vec<VariableName> = Vec::new();
    for f in premises.iter().chain(std::iter::once(conclusion)) {
        for v in f.variables() {
            if !vars.contains(&v) {
                vars.push(v);
            }
        }
    }
    check_limit(vars.len(), variable_limit)?;
    // Counterexample rows: every premise t, conclusion f.
    let mut bad = columns(conclusion, &vars)?.not();
    for p in premises {
        bad = Columns::combine(Connective::CONJUNCTION, &bad, &columns(p, &vars)?);
    }
    let counterexample = bad.last(TruthValue::T).map(|r| row_assignment(&vars, r));
    Ok(Entailment { valid: counterexample.is_none(), counterexample })
}

/// Letter for a truth value in the given notation: Peirce writes `v`/`f`.
pub fn value_letter(v: TruthValue, notation: NotationId) -> char {
    match notation {
        NotationId::Peirce => v.peirce_letter(),
        _ => v.letter(),
    }
}

/// The 2×2 grid, e.g. for implication:
///
/// ```text
///   | t f
/// t | t f
/// f | t t
/// ```
pub fn render_matrix(m: &MatrixTable, notation: NotationId) -> String {
    let l = |v: TruthValue| value_letter(v, notation);
    let mut out = format!("  | {} {}\n", l(m.column_labels[0]), l(m.column_labels[1]));
    for (r, label) in m.row_labels.iter().enumerate() {
        out.push_str(&format!("{} | {} {}\n", l(*label), l(m.cells[r][0]), l(m.cells[r][1])));
    }
    out
}

/// Row-list layout: one column per variable, then the formula.
pub fn render_table(table: &TruthTable, f: &Formula, config: SyntaxConfig) -> String {
    use unicode_width::UnicodeWidthStr;
    let widths: Vec<usize> = table.variables.iter().map(|v| v.as_str().width().max(1)).collect();
    let mut out = String::new();
    let mut header: Vec<String> = Vec::new();
    for (v, w) in table.variables.iter().zip(&widths) {
        header.push(format!("{:<w$}", v.as_str()));
    }
    let sep = if header.is_empty() { "| " } else { " | " };
    out.push_str(&header.join(" "));
    out.push_str(sep);
    out.push_str(&render(f, config));
    out.push('\n');
    for row in &table.rows {
        let cells: Vec<String> = row
            .values
            .iter()
            .zip(&widths)
            .map(|(v, w)| format!("{:<w$}", value_letter(*v, config.notation)))
            .collect();
        out.push_str(&cells.join(" "));
        out.push_str(sep);
        out.push(value_letter(row.value, config.notation));
        out.push('\n');
    }
    out
}

/// Truth-condition list: the rows where the formula is true, then the rows
/// where it is false, each in the table's row order.
pub fn render_conditions(table: &TruthTable, f: &Formula, config: SyntaxConfig) -> String {
    let mut out = render(f, config);
    out.push('\n');
    for wanted in [TruthValue::T, TruthValue::F] {
        out.push_str(if wanted.is_true() { "is true when:\n" } else { "is false when:\n" });
        let mut any = false;
        for row in table.rows.iter().filter(|r| r.value == wanted) {
            any = true;
            let parts: Vec<String> = table
                .variables
                .iter()
                .zip(&row.values)
                .map(|(n, v)| format!("{n} = {}", value_letter(*v, config.notation)))
                .collect();
            out.push_str("  ");
            out.push_str(if parts.is_empty() { "always" } else { "" });
            out.push_str(&parts.join(", "));
            out.push('\n');
        }
        if !any {
            out.push_str("  never\n");
        }
    }
    out
}
