//! Pretty printing and connective expansion.

use crate::connective::Connective;
use crate::formula::Formula;
use crate::value::TruthValue;

use super::symbols::{spelling, Negation, Spelling, MACRON};
use super::{NotationId, SyntaxConfig};

/// How many parentheses the renderer writes around binary subformulas.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ParenStyle {
    /// Only where the precedence table requires them. Nested implications
    /// and equivalences are always parenthesized, even where right
    /// association would allow `x ≺ y ≺ z`.
    Minimal,
    /// Around every binary operand except a left-nested chain of
    /// conjunctions or disjunctions (`a · b · c`).
    Grouped,
    /// Around every binary operand.
    Full,
}

impl ParenStyle {
    pub fn default_for(notation: NotationId) -> ParenStyle {
        match notation {
            NotationId::Peirce | NotationId::Schroeder => ParenStyle::Grouped,
            NotationId::PeanoRussell | NotationId::Modern => ParenStyle::Minimal,
        }
    }
}

/// Whether `notation` has its own symbol for `c`.
pub fn is_primitive(notation: NotationId, c: Connective) -> bool {
    match c {
        Connective::IMPLICATION | Connective::CONJUNCTION | Connective::DISJUNCTION => true,
        Connective::EQUIVALENCE => matches!(notation, NotationId::PeanoRussell | NotationId::Modern),
        _ => false,
    }
}

/// Rewrites every connective `notation` lacks into negation, conjunction,
/// disjunction and implication, preserving the truth vector and the
/// first-occurrence order of variables. Writing `P`, `Q` for the operands
/// and `≺`, `·`, `+`, `¬` for the primitives:
///
/// | connective              | expansion              |
/// |-------------------------|------------------------|
/// | constant-true           | `P ≺ (Q ≺ P)`          |
/// | constant-false          | `¬(P ≺ (Q ≺ P))`       |
/// | joint-denial            | `¬(P + Q)`             |
/// | converse-nonimplication | `¬P · Q`               |
/// | nonimplication          | `P · ¬Q`               |
/// | left-projection         | `P · (Q ≺ Q)`          |
/// | right-projection        | `(P ≺ P) · Q`          |
/// | equivalence             | `(P ≺ Q) · (Q ≺ P)`    |
/// | exclusive-disjunction   | `(P + Q) · ¬(P · Q)`   |
/// | right-negation          | `(P ≺ P) · ¬Q`         |
/// | left-negation           | `¬P · (Q ≺ Q)`         |
/// | alternative-denial      | `¬(P · Q)`             |
/// | converse-implication    | `¬P ≺ ¬Q`              |
pub fn expand_for(f: &Formula, notation: NotationId) -> Formula {
    match f {
        Formula::Constant { .. } | Formula::Variable { .. } => f.clone(),
        Formula::Negation { operand } => Formula::not(expand_for(operand, notation)),
        Formula::Binary { connective, left, right } => {
            let p = expand_for(left, notation);
            let q = expand_for(right, notation);
            if is_primitive(notation, *connective) {
                Formula::binary(*connective, p, q)
            } else {
                expand_connective(*connective, p, q)
            }
        }
    }
}

fn expand_connective(c: Connective, p: Formula, q: Formula) -> Formula {
    use Formula as Fm;
    let imp = Fm::implies;
    let and = Fm::and;
    let or = Fm::or;
    let not = Fm::not;
    match c {
        Connective::CONSTANT_TRUE => imp(p.clone(), imp(q, p)),
        Connective::CONSTANT_FALSE => not(imp(p.clone(), imp(q, p))),
        Connective::JOINT_DENIAL => not(or(p, q)),
        Connective::CONVERSE_NONIMPLICATION => and(not(p), q),
        Connective::NONIMPLICATION => and(p, not(q)),
        Connective::LEFT_PROJECTION => and(p, imp(q.clone(), q)),
        Connective::RIGHT_PROJECTION => and(imp(p.clone(), p), q),
        Connective::EQUIVALENCE => and(imp(p.clone(), q.clone()), imp(q, p)),
        Connective::EXCLUSIVE_DISJUNCTION => and(or(p.clone(), q.clone()), not(and(p, q))),
        Connective::RIGHT_NEGATION => and(imp(p.clone(), p), not(q)),
        Connective::LEFT_NEGATION => and(not(p), imp(q.clone(), q)),
        Connective::ALTERNATIVE_DENIAL => not(and(p, q)),
        Connective::CONVERSE_IMPLICATION => imp(not(p), not(q)),
        primitive => Fm::binary(primitive, p, q),
    }
}

fn strength(c: Connective) -> u8 {
    match c {
        Connective::EQUIVALENCE => 1,
        Connective::IMPLICATION => 2,
        Connective::DISJUNCTION => 3,
        Connective::CONJUNCTION => 4,
        _ => unreachable!("expanded before rendering"),
    }
}

#[derive(Clone, Copy, PartialEq)]
enum Side {
    Left,
    Right,
}

fn needs_parens(parent: Connective, child: Connective, side: Side, style: ParenStyle) -> bool {
    let chain = parent == child && side == Side::Left && matches!(parent, Connective::CONJUNCTION | Connective::DISJUNCTION);
    match style {
        ParenStyle::Full => true,
        ParenStyle::Grouped => !chain,
        ParenStyle::Minimal => strength(child) < strength(parent) || (strength(child) == strength(parent) && !chain),
    }
}

/// Renders `f` in `config` with an explicit parenthesization style.
pub fn render_with(f: &Formula, config: SyntaxConfig, style: ParenStyle) -> String {
    let expanded = expand_for(f, config.notation);
    let sp = spelling(config.notation, config.encoding);
    let mut out = String::new();
    write(&expanded, &sp, style, &mut out);
    out
}

fn write(f: &Formula, sp: &Spelling, style: ParenStyle, out: &mut String) {
    match f {
        Formula::Constant { value } => out.push_str(match value {
            TruthValue::T => sp.top,
            TruthValue::F => sp.bottom,
        }),
        Formula::Variable { name } => out.push_str(name.as_str()),
        Formula::Negation { operand } => match sp.negation {
            Negation::Prefix(s) => {
                out.push_str(s);
                write_atom(operand, sp, style, out);
            }
            Negation::Postfix(s) => {
                write_atom(operand, sp, style, out);
                out.push_str(s);
            }
            Negation::Overbar => match operand.as_ref() {
                Formula::Variable { .. } | Formula::Constant { .. } => {
                    write(operand, sp, style, out);
                    out.push(MACRON);
                }
                _ => {
                    out.push('-');
                    write_atom(operand, sp, style, out);
                }
            },
        },
        Formula::Binary { connective, left, right } => {
            write_operand(*connective, left, Side::Left, sp, style, out);
            out.push(' ');
            out.push_str(symbol(*connective, sp));
            out.push(' ');
            write_operand(*connective, right, Side::Right, sp, style, out);
        }
    }
}

fn symbol(c: Connective, sp: &Spelling) -> &'static str {
    match c {
        Connective::IMPLICATION => sp.implication,
        Connective::CONJUNCTION => sp.conjunction,
        Connective::DISJUNCTION => sp.disjunction,
        Connective::EQUIVALENCE => sp.equivalence.expect("expanded before rendering"),
        _ => unreachable!("expanded before rendering"),
    }
}

fn write_atom(f: &Formula, sp: &Spelling, style: ParenStyle, out: &mut String) {
    if matches!(f, Formula::Binary { .. }) {
        out.push('(');
        write(f, sp, style, out);
        out.push(')');
    } else {
        write(f, sp, style, out);
    }
}

fn write_operand(parent: Connective, f: &Formula, side: Side, sp: &Spelling, style: ParenStyle, out: &mut String) {
    match f {
        Formula::Binary { connective, .. } if needs_parens(parent, *connective, side, style) => {
            out.push('(');
            write(f, sp, style, out);
            out.push(')');
        }
        _ => write(f, sp, style, out),
    }
}
