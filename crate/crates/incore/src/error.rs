//! Error type shared by all analyses.

use crate::formal::{Formula, ValidationIssue};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    /// System file could not be parsed; `line` is 1-based.
    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },

    /// A value failed its construction invariant.
    #[error("{0}")]
    Invalid(String),

    /// A system violates structural invariants (all violations listed).
    #[error("invalid system: {}", format_issues(.0))]
    Validation(Vec<ValidationIssue>),

    /// A formula was used with a system that does not declare it.
    #[error("formula `{0}` is not a declared wff")]
    NotAWff(Formula),

    /// The sentence is not in the theory of the given base.
    #[error("sentence `{0}` is not derivable")]
    NotDerivable(Formula),

    /// Axioms have derivation depth 0 and therefore no index.
    #[error("`{0}` is an axiom and has no index")]
    AxiomHasNoIndex(Formula),

    /// Support enumeration aborted; partial results are discarded, never
    /// silently truncated.
    #[error("search budget exceeded after {explored} candidates (budget {budget})")]
    BudgetExceeded { explored: u64, budget: u64 },

    /// The sentence is in the consistent core, so its index does not bound
    /// kappa from above.
    #[error("`{0}` is in the consistent core, not a valid kappa witness")]
    NotKappaWitness(Formula),

    /// Axiomatizations can only be compared over identical alphabet, wffs
    /// and rules.
    #[error("systems differ in {0}; only the axiom sets may differ")]
    SystemMismatch(&'static str),

    /// A sentence guaranteed safe by the index threshold turned out
    /// non-core. Indicates an implementation bug, never valid output.
    #[error("classification soundness failure: {0}")]
    Soundness(String),

    /// The requested machine bound exceeds the configured cap.
    #[error("machine bound {m} exceeds the cap {cap}")]
    MachineBoundTooLarge { m: u32, cap: u32 },

    /// An arithmetic expression could not be parsed or evaluated.
    #[error("expression error: {0}")]
    Expr(String),
}

fn format_issues(issues: &[ValidationIssue]) -> String {
    issues
        .iter()
        .map(|i| i.to_string())
        .collect::<Vec<_>>()
        .join("; ")
}
