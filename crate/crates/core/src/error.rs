use thiserror::Error;

use crate::connective::Connective;
use crate::formula::VariableName;
use crate::notation::{NotationId, ParseDiagnostic};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("variable `{0}` is not bound by the assignment")]
    UnboundVariable(VariableName),

    #[error("formula has {found} variables; the tabulation limit is {limit}")]
    VariableLimit { found: usize, limit: usize },

    #[error("connective `{0}` has no triadic matrix (only disjunction and conjunction do)")]
    UnsupportedConnective(Connective),

    #[error(transparent)]
    Parse(#[from] ParseDiagnostic),

    #[error("invalid variable name `{0}`")]
    InvalidName(String),

    #[error("variable `{name}` collides with a reserved word of the {notation} notation")]
    ReservedName { name: VariableName, notation: NotationId },

    #[error("particular form {0} needs quantification and cannot be evaluated propositionally")]
    QuantifiedForm(char),

    #[error("enumeration bound violated: {0}")]
    EnumerationBounds(String),
}

impl Error {
    /// Resource-limit failures, as opposed to bad input or unsupported requests.
    pub fn is_limit(&self) -> bool {
        matches!(self, Error::VariableLimit { .. } | Error::EnumerationBounds(_))
    }

    pub fn is_unsupported(&self) -> bool {
        matches!(self, Error::UnsupportedConnective(_) | Error::QuantifiedForm(_))
    }
}
