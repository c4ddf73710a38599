//! Formulas, variable names and assignments.

use std::collections::{BTreeMap, HashSet};
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::connective::Connective;
use crate::error::Error;
use crate::value::{Triadic, TruthValue};

/// A propositional variable: ASCII letters, digits and `_`, starting with a
/// letter. Case-sensitive.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(try_from = "String", into = "String")]
pub struct VariableName(String);

impl VariableName {
    pub fn new(name: impl Into<String>) -> Result<Self, Error> {
        let name = name.into();
        if Self::is_valid(&name) {
            Ok(VariableName(name))
        } else {
            Err(Error::InvalidName(name))
        }
    }

    pub fn is_valid(name: &str) -> bool {
        let mut chars = name.chars();
        matches!(chars.next(), Some(c) if c.is_ascii_alphabetic())
            && chars.all(|c| c.is_ascii_alphanumeric() || c == '_')
    }

    pub fn as_str(&self) -> &str {
        &self.0
    }
}

impl TryFrom<String> for VariableName {
    type Error = Error;

    fn try_from(value: String) -> Result<Self, Self::Error> {
        VariableName::new(value)
    }
}

impl From<VariableName> for String {
    fn from(v: VariableName) -> String {
        v.0
    }
}

impl fmt::Display for VariableName {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0)
    }
}

/// A propositional formula.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "kebab-case")]
pub enum Formula {
    Constant { value: TruthValue },
    Variable { name: VariableName },
    Negation { operand: Box<Formula> },
    Binary { connective: Connective, left: Box<Formula>, right: Box<Formula> },
}

impl Formula {
    pub fn constant(value: TruthValue) -> Formula {
        Formula::Constant { value }
    }

    /// # Panics
    ///
    /// If `name` is not a valid [`VariableName`].
    pub fn var(name: &str) -> Formula {
        Formula::Variable { name: VariableName::new(name).expect("invalid variable name") }
    }

    pub fn variable(name: VariableName) -> Formula {
        Formula::Variable { name }
    }

    pub fn not(operand: Formula) -> Formula {
        Formula::Negation { operand: Box::new(operand) }
    }

    pub fn binary(connective: Connective, left: Formula, right: Formula) -> Formula {
        Formula::Binary { connective, left: Box::new(left), right: Box::new(right) }
    }

    pub fn implies(left: Formula, right: Formula) -> Formula {
        Formula::binary(Connective::IMPLICATION, left, right)
    }

    pub fn and(left: Formula, right: Formula) -> Formula {
        Formula::binary(Connective::CONJUNCTION, left, right)
    }

    pub fn or(left: Formula, right: Formula) -> Formula {
        Formula::binary(Connective::DISJUNCTION, left, right)
    }

    pub fn iff(left: Formula, right: Formula) -> Formula {
        Formula::binary(Connective::EQUIVALENCE, left, right)
    }

    /// Distinct variables in first-occurrence order (left to right, depth first).
    pub fn variables(&self) -> Vec<VariableName> {
        let mut seen = HashSet::new();
        let mut out = Vec::new();
        self.collect_variables(&mut seen, &mut out);
        out
    }

    fn collect_variables<'a>(&'a self, seen: &mut HashSet<&'a VariableName>, out: &mut Vec<VariableName>) {
        match self {
            Formula::Constant { .. } => {}
            Formula::Variable { name } => {
                if seen.insert(name) {
                    out.push(name.clone());
                }
            }
            Formula::Negation { operand } => operand.collect_variables(seen, out),
            Formula::Binary { left, right, .. } => {
                left.collect_variables(seen, out);
                right.collect_variables(seen, out);
            }
        }
    }

    /// Every distinct subformula, innermost first; the last entry is `self`.
    pub fn subformulas(&self) -> Vec<&Formula> {
        let mut seen = HashSet::new();
        let mut out = Vec::new();
        self.collect_subformulas(&mut seen, &mut out);
        out
    }

    fn collect_subformulas<'a>(&'a self, seen: &mut HashSet<&'a Formula>, out: &mut Vec<&'a Formula>) {
        match self {
            Formula::Negation { operand } => operand.collect_subformulas(seen, out),
            Formula::Binary { left, right, .. } => {
                left.collect_subformulas(seen, out);
                right.collect_subformulas(seen, out);
            }
            Formula::Constant { .. } | Formula::Variable { .. } => {}
        }
        if seen.insert(self) {
            out.push(self);
        }
    }

    /// Number of connective occurrences (negations and binary nodes).
    pub fn connective_count(&self) -> usize {
        match self {
            Formula::Constant { .. } | Formula::Variable { .. } => 0,
            Formula::Negation { operand } => 1 + operand.connective_count(),
            Formula::Binary { left, right, .. } => 1 + left.connective_count() + right.connective_count(),
        }
    }

    /// Height of the tree; a leaf has depth 0.
    pub fn depth(&self) -> usize {
        match self {
            Formula::Constant { .. } | Formula::Variable { .. } => 0,
            Formula::Negation { operand } => 1 + operand.depth(),
            Formula::Binary { left, right, .. } => 1 + left.depth().max(right.depth()),
        }
    }

    /// Connectives used by binary nodes, deduplicated, in first-occurrence order.
    pub fn binary_connectives(&self) -> Vec<Connective> {
        fn walk(f: &Formula, out: &mut Vec<Connective>) {
            match f {
                Formula::Negation { operand } => walk(operand, out),
                Formula::Binary { connective, left, right } => {
                    if !out.contains(connective) {
                        out.push(*connective);
                    }
                    walk(left, out);
                    walk(right, out);
                }
                _ => {}
            }
        }
        let mut out = Vec::new();
        walk(self, &mut out);
        out
    }
}

impl fmt::Display for Formula {
    /// Modern notation, unicode symbols.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&crate::notation::render(self, crate::notation::SyntaxConfig::default()))
    }
}

/// A map from variables to values of type `V`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Assignment<V: Ord> {
    values: BTreeMap<VariableName, V>,
}

pub type Assignment2 = Assignment<TruthValue>;
pub type Assignment3 = Assignment<Triadic>;

impl<V: Copy + Ord> Default for Assignment<V> {
    fn default() -> Self {
        Assignment { values: BTreeMap::new() }
    }
}

impl<V: Copy + Ord> Assignment<V> {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn insert(&mut self, name: VariableName, value: V) -> Option<V> {
        self.values.insert(name, value)
    }

    pub fn with(mut self, name: &str, value: V) -> Self {
        self.insert(VariableName::new(name).expect("invalid variable name"), value);
        self
    }

    pub fn get(&self, name: &VariableName) -> Option<V> {
        self.values.get(name).copied()
    }

    pub fn lookup(&self, name: &VariableName) -> Result<V, Error> {
        self.get(name).ok_or_else(|| Error::UnboundVariable(name.clone()))
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    pub fn contains(&self, name: &VariableName) -> bool {
        self.values.contains_key(name)
    }

    pub fn iter(&self) -> impl Iterator<Item = (&VariableName, V)> {
        self.values.iter().map(|(k, v)| (k, *v))
    }
}

impl<V: Copy + Ord> FromIterator<(VariableName, V)> for Assignment<V> {
    fn from_iter<I: IntoIterator<Item = (VariableName, V)>>(iter: I) -> Self {
        Assignment { values: iter.into_iter().collect() }
    }
}

impl<V: Copy + Ord + fmt::Display> fmt::Display for Assignment<V> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("{")?;
        for (i, (k, v)) in self.values.iter().enumerate() {
            if i > 0 {
                f.write_str(", ")?;
            }
            write!(f, "{k}:{v}")?;
        }
        f.write_str("}")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn x() -> Formula {
        Formula::var("x")
    }
    fn y() -> Formula {
        Formula::var("y")
    }

    #[test]
    fn variable_names() {
        assert!(VariableName::new("x").is_ok());
        assert!(VariableName::new("A_1").is_ok());
        assert!(VariableName::new("1a").is_err());
        assert!(VariableName::new("").is_err());
        assert!(VariableName::new("a-b").is_err());
        assert_ne!(VariableName::new("a").unwrap(), VariableName::new("A").unwrap());
    }

    #[test]
    fn variables_in_first_occurrence_order() {
        assert_eq!(x().variables(), vec![VariableName::new("x").unwrap()]);
        let f = Formula::implies(x(), Formula::implies(y(), x()));
        let names: Vec<_> = f.variables().iter().map(|v| v.to_string()).collect();
        assert_eq!(names, ["x", "y"]);
        assert!(Formula::constant(TruthValue::T).variables().is_empty());
    }

    #[test]
    fn subformulas_innermost_first() {
        assert_eq!(x().subformulas(), vec![&x()]);
        let nx = Formula::not(x());
        assert_eq!(nx.subformulas(), vec![&x(), &nx]);
        let imp = Formula::implies(x(), y());
        assert_eq!(imp.subformulas(), vec![&x(), &y(), &imp]);
    }

    #[test]
    fn subformulas_of_peirces_law_are_deduplicated() {
        let a = Formula::var("A");
        let b = Formula::var("B");
        let ab = Formula::implies(a.clone(), b.clone());
        let aba = Formula::implies(ab.clone(), a.clone());
        let law = Formula::implies(aba.clone(), a.clone());
        assert_eq!(law.subformulas(), vec![&a, &b, &ab, &aba, &law]);
    }

    #[test]
    fn structural_queries_are_pure() {
        let f = Formula::iff(Formula::not(x()), Formula::and(y(), x()));
        assert_eq!(f.variables(), f.variables());
        assert_eq!(f.subformulas(), f.subformulas());
        assert_eq!(f.depth(), 2);
        assert_eq!(f.connective_count(), 3);
    }

    #[test]
    fn json_shape() {
        let f = Formula::implies(x(), Formula::constant(TruthValue::F));
        let json = serde_json::to_value(&f).unwrap();
        assert_eq!(json["kind"], "binary");
        assert_eq!(json["connective"], "implication");
        assert_eq!(json["left"]["name"], "x");
        assert_eq!(json["right"]["value"], "f");
        let back: Formula = serde_json::from_value(json).unwrap();
        assert_eq!(back, f);
    }

    #[test]
    fn assignment_display_and_lookup() {
        let a = Assignment2::new().with("y", TruthValue::F).with("x", TruthValue::T);
        assert_eq!(a.to_string(), "{x:t, y:f}");
        let z = VariableName::new("z").unwrap();
        assert!(matches!(a.lookup(&z), Err(Error::UnboundVariable(n)) if n == z));
    }
}
