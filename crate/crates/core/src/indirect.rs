//! The indirect (abbreviated) truth table: suppose the formula false, push
//! the forced values down through its subformulas, split into cases where
//! nothing is forced, and look for a case that survives.
//!
//! Each constrained node `c(P, Q) = w` offers a set of *options*: the prime
//! implicants of the pairs on which `c` yields `w`, as partial assignments
//! to `P` and `Q`, ordered by the first input pair they cover (left operand
//! before right on ties). Implication valued `t` thus offers `Q = t` and
//! `P = f` rather than three separate input pairs. An option is consistent
//! when applying it forces no subformula to both values.
//!
//! Per round, the pending (assigned but not yet justified) nodes are
//! scanned from the root downward. A node with no consistent option closes
//! the branch; a node with exactly one is forced. Otherwise the first
//! pending node is split, trying its options in order. The search stops at
//! the first branch in which every assigned node is justified.

use std::collections::HashMap;
use std::fmt;

use serde::Serialize;
use unicode_width::UnicodeWidthStr;

use crate::bivalent::value_letter;
use crate::connective::{pair_label, Connective, INPUT_PAIRS};
use crate::formula::{Assignment2, Formula, VariableName};
use crate::notation::{render, SyntaxConfig};
use crate::value::TruthValue;

/// Values per subformula column; `None` is unconstrained.
pub type PartialAssignment = Vec<Option<TruthValue>>;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum StepNote {
    RootAssumption,
    Forced,
    BranchOpen,
    BranchClosed,
}

impl StepNote {
    pub fn as_str(self) -> &'static str {
        match self {
            StepNote::RootAssumption => "root-assumption",
            StepNote::Forced => "forced",
            StepNote::BranchOpen => "branch-open",
            StepNote::BranchClosed => "branch-closed",
        }
    }
}

impl fmt::Display for StepNote {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Step {
    pub assignment: PartialAssignment,
    pub note: StepNote,
    /// The step this one extends.
    pub parent: Option<usize>,
    /// Column whose rule produced the step.
    pub node: Option<usize>,
    /// For closed branches, a column that would need both values.
    pub conflict: Option<usize>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct IndirectTrace {
    /// Distinct subformulas, operands before the formulas containing them;
    /// the whole formula is last.
    pub columns: Vec<Formula>,
    pub steps: Vec<Step>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Outcome {
    Tautology,
    Falsifiable,
}

impl Outcome {
    pub fn as_str(self) -> &'static str {
        match self {
            Outcome::Tautology => "tautology",
            Outcome::Falsifiable => "falsifiable",
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct IndirectResult {
    pub outcome: Outcome,
    /// Variables forced in the surviving branch.
    pub countermodel: Option<Assignment2>,
    /// Variables the surviving branch leaves free; any completion falsifies.
    pub unconstrained: Vec<VariableName>,
    pub trace: IndirectTrace,
}

/// A literal: column index and the value it must take.
type Literal = (usize, TruthValue);

#[derive(Clone, Copy, Debug)]
enum Node {
    Leaf,
    Constant(TruthValue),
    Negation(usize),
    Binary(Connective, usize, usize),
}

/// Prime implicants of the input pairs where `c` yields `w`, as
/// (left literal, right literal), ordered by first covered pair.
pub fn options_for(c: Connective, w: TruthValue) -> Vec<(Option<TruthValue>, Option<TruthValue>)> {
    let v = c.vector();
    let in_set = |i: usize| v[i] == w;
    let covers = |cube: (Option<TruthValue>, Option<TruthValue>)| -> Vec<usize> {
        (0..4)
            .filter(|&i| {
                let (l, r) = INPUT_PAIRS[i];
                cube.0.is_none_or(|x| x == l) && cube.1.is_none_or(|y| y == r)
            })
            .collect()
    };
    let mut cubes = vec![(None, None)];
    for x in TruthValue::ALL {
        cubes.push((Some(x), None));
        cubes.push((None, Some(x)));
    }
    for (l, r) in INPUT_PAIRS {
        cubes.push((Some(l), Some(r)));
    }
    let inside: Vec<_> = cubes.into_iter().filter(|c| covers(*c).into_iter().all(in_set)).collect();
    let mut primes: Vec<_> = inside
        .iter()
        .copied()
        .filter(|c| {
            let mine = covers(*c);
            !inside.iter().any(|o| {
                let theirs = covers(*o);
                theirs.len() > mine.len() && mine.iter().all(|i| theirs.contains(i))
            })
        })
        .collect();
    let rank = |c: &(Option<TruthValue>, Option<TruthValue>)| {
        let side = match c {
            (Some(_), None) => 0,
            (None, Some(_)) => 1,
            _ => 2,
        };
        (covers(*c)[0], side)
    };
    primes.sort_by_key(rank);
    primes
}

struct Search {
    nodes: Vec<Node>,
    steps: Vec<Step>,
}

impl Search {
    fn options(&self, state: &PartialAssignment, i: usize) -> Vec<Vec<Literal>> {
        let Some(w) = state[i] else { return Vec::new() };
        match self.nodes[i] {
            Node::Leaf => vec![Vec::new()],
            Node::Constant(c) if c == w => vec![Vec::new()],
            Node::Constant(_) => Vec::new(),
            Node::Negation(p) => vec![vec![(p, !w)]],
            Node::Binary(c, p, q) => options_for(c, w)
                .into_iter()
                .map(|(l, r)| l.map(|v| (p, v)).into_iter().chain(r.map(|v| (q, v))).collect())
                .collect(),
        }
    }

    /// Applies literals, returning the first conflicting column on failure.
    fn apply(&self, state: &PartialAssignment, literals: &[Literal]) -> Result<PartialAssignment, usize> {
        let mut next = state.clone();
        for &(i, v) in literals {
            if next[i] == Some(!v) {
                return Err(i);
            }
            if let Node::Constant(c) = self.nodes[i] {
                if c != v {
                    return Err(i);
                }
            }
            next[i] = Some(v);
        }
        Ok(next)
    }

    fn justified(&self, state: &PartialAssignment, i: usize) -> bool {
        self.options(state, i).iter().any(|lits| lits.iter().all(|&(j, v)| state[j] == Some(v)))
    }

    fn push(&mut self, step: Step) -> usize {
        self.steps.push(step);
        self.steps.len() - 1
    }

    fn explore(&mut self, mut state: PartialAssignment, mut parent: usize) -> Option<PartialAssignment> {
        'round: loop {
            let pending: Vec<usize> =
                (0..self.nodes.len()).rev().filter(|&i| state[i].is_some() && !self.justified(&state, i)).collect();
            if pending.is_empty() {
                return Some(state);
            }
            let mut split: Option<(usize, Vec<PartialAssignment>)> = None;
            for &i in &pending {
                let mut consistent = Vec::new();
                let mut conflict = None;
                for lits in self.options(&state, i) {
                    match self.apply(&state, &lits) {
                        Ok(next) => consistent.push(next),
                        Err(j) => conflict = conflict.or(Some(j)),
                    }
                }
                match consistent.len() {
                    0 => {
                        self.push(Step {
                            assignment: state,
                            note: StepNote::BranchClosed,
                            parent: Some(parent),
                            node: Some(i),
                            conflict: conflict.or(Some(i)),
                        });
                        return None;
                    }
                    1 => {
                        state = consistent.pop().expect("one option");
                        parent = self.push(Step {
                            assignment: state.clone(),
                            note: StepNote::Forced,
                            parent: Some(parent),
                            node: Some(i),
                            conflict: None,
                        });
                        continue 'round;
                    }
                    _ => {
                        if split.is_none() {
                            split = Some((i, consistent));
                        }
                    }
                }
            }
            let (i, cases) = split.expect("pending node with several options");
            for next in cases {
                let at = self.push(Step {
                    assignment: next.clone(),
                    note: StepNote::BranchOpen,
                    parent: Some(parent),
                    node: Some(i),
                    conflict: None,
                });
                if let Some(open) = self.explore(next, at) {
                    return Some(open);
                }
            }
            return None;
        }
    }
}

fn build(f: &Formula) -> (Vec<Formula>, Vec<Node>) {
    let subs = f.subformulas();
    let index: HashMap<&Formula, usize> = subs.iter().enumerate().map(|(i, s)| (*s, i)).collect();
    let nodes = subs
        .iter()
        .map(|s| match s {
            Formula::Variable { .. } => Node::Leaf,
            Formula::Constant { value } => Node::Constant(*value),
            Formula::Negation { operand } => Node::Negation(index[operand.as_ref()]),
            Formula::Binary { connective, left, right } => {
                Node::Binary(*connective, index[left.as_ref()], index[right.as_ref()])
            }
        })
        .collect();
    (subs.into_iter().cloned().collect(), nodes)
}

pub fn indirect_check(f: &Formula) -> IndirectResult {
    let (columns, nodes) = build(f);
    let root = columns.len() - 1;
    let mut search = Search { nodes, steps: Vec::new() };
    let mut start = vec![None; columns.len()];
    start[root] = Some(TruthValue::F);
    search.push(Step { assignment: start.clone(), note: StepNote::RootAssumption, parent: None, node: None, conflict: None });
    let open = search.explore(start, 0);
    let trace = IndirectTrace { columns, steps: search.steps };
    match open {
        None => IndirectResult { outcome: Outcome::Tautology, countermodel: None, unconstrained: Vec::new(), trace },
        Some(state) => {
            let mut countermodel = Assignment2::new();
            let mut unconstrained = Vec::new();
            for (i, col) in trace.columns.iter().enumerate() {
                if let Formula::Variable { name } = col {
                    match state[i] {
                        Some(v) => {
                            countermodel.insert(name.clone(), v);
                        }
                        None => unconstrained.push(name.clone()),
                    }
                }
            }
            IndirectResult { outcome: Outcome::Falsifiable, countermodel: Some(countermodel), unconstrained, trace }
        }
    }
}

/// Re-derives every step of a trace from its parent and the option rule,
/// returning a description of the first step that does not follow.
pub fn replay(f: &Formula, trace: &IndirectTrace) -> Result<(), String> {
    let (columns, nodes) = build(f);
    if columns != trace.columns {
        return Err("columns do not match the formula".into());
    }
    let search = Search { nodes, steps: Vec::new() };
    let root = columns.len() - 1;
    let first = trace.steps.first().ok_or("empty trace")?;
    let mut expected_root = vec![None; columns.len()];
    expected_root[root] = Some(TruthValue::F);
    if first.note != StepNote::RootAssumption || first.assignment != expected_root || first.parent.is_some() {
        return Err("step 0 must assume only the whole formula false".into());
    }
    for (k, step) in trace.steps.iter().enumerate().skip(1) {
        let p = step.parent.filter(|&p| p < k).ok_or(format!("step {k} has no earlier parent"))?;
        let before = &trace.steps[p].assignment;
        let i = step.node.ok_or(format!("step {k} names no node"))?;
        if before[i].is_none() {
            return Err(format!("step {k} applies a rule at an unconstrained column"));
        }
        let results: Vec<Result<PartialAssignment, usize>> =
            search.options(before, i).iter().map(|lits| search.apply(before, lits)).collect();
        let consistent: Vec<&PartialAssignment> = results.iter().filter_map(|r| r.as_ref().ok()).collect();
        let ok = match step.note {
            StepNote::RootAssumption => false,
            StepNote::Forced => consistent.len() == 1 && consistent[0] == &step.assignment,
            StepNote::BranchOpen => consistent.len() > 1 && consistent.contains(&&step.assignment),
            StepNote::BranchClosed => consistent.is_empty() && &step.assignment == before,
        };
        if !ok {
            return Err(format!("step {k} ({}) does not follow from step {p}", step.note));
        }
    }
    Ok(())
}

/// One header row of subformulas, then one row per step with `-` in
/// unconstrained cells and the step number and note at the end.
pub fn render_trace(trace: &IndirectTrace, config: SyntaxConfig) -> String {
    let headers: Vec<String> = trace.columns.iter().map(|c| render(c, config)).collect();
    let widths: Vec<usize> = headers.iter().map(|h| h.width().max(1)).collect();
    let pad = |s: &str, w: usize| format!("{s}{}", " ".repeat(w.saturating_sub(s.width())));
    let mut out = String::new();
    let header: Vec<String> = headers.iter().zip(&widths).map(|(h, w)| pad(h, *w)).collect();
    out.push_str(&header.join(" | "));
    out.push_str(" | step\n");
    for (k, step) in trace.steps.iter().enumerate() {
        let cells: Vec<String> = step
            .assignment
            .iter()
            .zip(&widths)
            .map(|(v, w)| {
                let cell = v.map_or('-', |v| value_letter(v, config.notation)).to_string();
                pad(&cell, *w)
            })
            .collect();
        out.push_str(&cells.join(" | "));
        out.push_str(&format!(" | #{k} {}", step.note));
        if let Some(p) = step.parent {
            out.push_str(&format!(" from #{p}"));
        }
        if let Some(c) = step.conflict {
            out.push_str(&format!(", conflict at {}", headers[c]));
        }
        out.push('\n');
    }
    out
}

/// Describes an option as text, e.g. `(t,*)` for "left operand t".
pub fn describe_option(option: (Option<TruthValue>, Option<TruthValue>)) -> String {
    let s = |v: Option<TruthValue>| v.map_or('*', |v| v.letter());
    format!("({},{})", s(option.0), s(option.1))
}

/// Input-pair labels covered by a connective's value, for diagnostics.
pub fn pairs_with_value(c: Connective, w: TruthValue) -> Vec<String> {
    (0..4).filter(|&i| c.vector()[i] == w).map(pair_label).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::bivalent::{classify, eval};
    use crate::notation::{parse, Encoding, NotationId};
    use TruthValue::{F as f, T as t};

    fn pr(text: &str) -> Formula {
        parse(text, SyntaxConfig::new(NotationId::PeanoRussell, Encoding::Ascii)).unwrap()
    }

    #[test]
    fn implication_options() {
        assert_eq!(options_for(Connective::IMPLICATION, t), vec![(None, Some(t)), (Some(f), None)]);
        assert_eq!(options_for(Connective::IMPLICATION, f), vec![(Some(t), Some(f))]);
        assert_eq!(options_for(Connective::EQUIVALENCE, t), vec![(Some(t), Some(t)), (Some(f), Some(f))]);
        assert_eq!(options_for(Connective::DISJUNCTION, t), vec![(Some(t), None), (None, Some(t))]);
        assert_eq!(options_for(Connective::CONSTANT_TRUE, t), vec![(None, None)]);
        assert!(options_for(Connective::CONSTANT_TRUE, f).is_empty());
        assert_eq!(options_for(Connective::LEFT_PROJECTION, f), vec![(Some(f), None)]);
    }

    #[test]
    fn option_labels() {
        assert_eq!(describe_option((None, Some(t))), "(*,t)");
        assert_eq!(pairs_with_value(Connective::IMPLICATION, f), vec!["tf"]);
    }

    #[test]
    fn peirces_law() {
        let law = pr("((A > B) > A) > A");
        let r = indirect_check(&law);
        assert_eq!(r.outcome, Outcome::Tautology);
        replay(&law, &r.trace).unwrap();
        let notes: Vec<StepNote> = r.trace.steps.iter().map(|s| s.note).collect();
        assert_eq!(notes, vec![StepNote::RootAssumption, StepNote::Forced, StepNote::Forced, StepNote::BranchClosed]);
        // columns: A, B, A>B, (A>B)>A, whole
        let s1 = &r.trace.steps[1].assignment;
        assert_eq!(s1, &vec![Some(f), None, None, Some(t), Some(f)]);
        let s2 = &r.trace.steps[2].assignment;
        assert_eq!(s2[2], Some(f));
        assert_eq!(r.trace.steps[3].conflict, Some(0));
    }

    #[test]
    fn chain_countermodel_leaves_dashes() {
        let g = pr("(((a > b) > c) > d) > e");
        let r = indirect_check(&g);
        assert_eq!(r.outcome, Outcome::Falsifiable);
        assert_eq!(r.countermodel, Some(Assignment2::new().with("d", t).with("e", f)));
        let names: Vec<&str> = r.unconstrained.iter().map(|v| v.as_str()).collect();
        assert_eq!(names, ["a", "b", "c"]);
        replay(&g, &r.trace).unwrap();
        for fill in TruthValue::ALL {
            let a = Assignment2::new().with("a", fill).with("b", fill).with("c", fill).with("d", t).with("e", f);
            assert_eq!(eval(&g, &a).unwrap(), f);
        }
        let text = render_trace(&r.trace, SyntaxConfig::new(NotationId::Peirce, Encoding::Ascii));
        let last = text.lines().last().unwrap();
        assert!(last.starts_with("- | - |"), "{text}");
    }

    #[test]
    fn self_implication_closes_at_once() {
        let r = indirect_check(&pr("x > x"));
        assert_eq!(r.outcome, Outcome::Tautology);
        assert_eq!(r.trace.steps.len(), 2);
        assert_eq!(r.trace.steps[1].note, StepNote::BranchClosed);
        assert_eq!(r.trace.steps[1].conflict, Some(0));
    }

    #[test]
    fn constants() {
        assert_eq!(indirect_check(&Formula::constant(t)).outcome, Outcome::Tautology);
        let r = indirect_check(&Formula::constant(f));
        assert_eq!(r.outcome, Outcome::Falsifiable);
        assert_eq!(r.countermodel, Some(Assignment2::new()));
        assert_eq!(indirect_check(&pr("0 > a")).outcome, Outcome::Tautology);
    }

    #[test]
    fn branches_are_recorded() {
        let g = pr("(a == b) > (a . b)");
        let r = indirect_check(&g);
        assert_eq!(r.outcome, Outcome::Falsifiable);
        assert!(r.trace.steps.iter().any(|s| s.note == StepNote::BranchOpen));
        assert_eq!(r.countermodel, Some(Assignment2::new().with("a", f).with("b", f)));
        replay(&g, &r.trace).unwrap();
    }

    #[test]
    fn replay_rejects_tampering() {
        let law = pr("((A > B) > A) > A");
        let mut trace = indirect_check(&law).trace;
        trace.steps[2].assignment[1] = Some(t);
        assert!(replay(&law, &trace).is_err());
    }

    #[test]
    fn header_lists_subformulas() {
        let law = pr("((A > B) > A) > A");
        let text = render_trace(&indirect_check(&law).trace, SyntaxConfig::new(NotationId::PeanoRussell, Encoding::Ascii));
        assert!(text.starts_with("A | B | A > B | (A > B) > A | ((A > B) > A) > A | step\n"), "{text}");
    }

    #[test]
    fn agrees_with_classify_on_small_formulas() {
        let texts = [
            "a > (b > a)",
            "(a > (b > c)) > ((a > b) > (a > c))",
            "(~a > ~b) > (b > a)",
            "a | ~a",
            "a . ~a",
            "(a == b) == (b == a)",
            "(a > b) > (b > a)",
            "~(a . b) == (~a | ~b)",
        ];
        for text in texts {
            let g = pr(text);
            let r = indirect_check(&g);
            assert_eq!(r.outcome == Outcome::Tautology, classify(&g).unwrap().is_tautology(), "{text}");
            replay(&g, &r.trace).unwrap();
        }
    }
}
