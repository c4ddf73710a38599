//! A propositional logic engine built around Peirce's illation (`≺`).
//!
//! * [`formula`], [`value`], [`connective`]: formulas, truth values and the
//!   catalog of the sixteen binary connectives.
//! * [`notation`]: parsing and printing in Peirce, Schröder, Peano-Russell
//!   and modern notation.
//! * [`bivalent`]: evaluation, direct truth tables, 2×2 matrices,
//!   tautology classification and entailment.
//! * [`indirect`]: the indirect (abbreviated) truth table: assume the
//!   formula false and propagate.
//! * [`triadic`]: the V/L/F matrices for negation, `⊕` and `Z̲`.
//! * [`atlas`]: the 1902 sixteen-column table, X-frames, connective
//!   identification and the tautology enumerator.
//! * [`syllogism`]: the A/E/I/O scheme and Barbara.

pub mod atlas;
pub mod bivalent;
pub mod connective;
pub mod error;
pub mod formula;
pub mod indirect;
pub mod notation;
pub mod syllogism;
pub mod triadic;
pub mod value;

pub use connective::Connective;
pub use error::Error;
pub use formula::{Assignment, Assignment2, Assignment3, Formula, VariableName};
pub use notation::{parse, render, translate, Encoding, NotationId, ParseDiagnostic, SyntaxConfig};
pub use value::{Triadic, TruthValue};
