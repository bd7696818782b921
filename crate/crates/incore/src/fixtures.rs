//! Shared unit-test fixtures.

use crate::formal::{formula_set, Alphabet, DeductionSystem, FormulaSet, RuleInstance};

/// Five-sentence demo system: W = {p,q,r,s,t}, A = {p,s}, rules
/// {p}→{q}, {s}→{t}, {q,t}→{p,q,r,s,t}. Inconsistent.
pub fn ex1() -> DeductionSystem {
    ex1_with_axioms(formula_set(&["p", "s"]))
}

/// The ex1 rule base with a caller-chosen axiom set.
pub fn ex1_with_axioms(axioms: FormulaSet) -> DeductionSystem {
    let alphabet = Alphabet::new(['p', 'q', 'r', 's', 't']).unwrap();
    let wffs = formula_set(&["p", "q", "r", "s", "t"]);
    let rules = vec![
        RuleInstance::new(formula_set(&["p"]), formula_set(&["q"])).unwrap(),
        RuleInstance::new(formula_set(&["s"]), formula_set(&["t"])).unwrap(),
        RuleInstance::new(
            formula_set(&["q", "t"]),
            formula_set(&["p", "q", "r", "s", "t"]),
        )
        .unwrap(),
    ];
    DeductionSystem::new(alphabet, wffs, rules, axioms).unwrap()
}

/// A system with no rules at all.
pub fn rule_free() -> DeductionSystem {
    let alphabet = Alphabet::new(['p', 'q']).unwrap();
    DeductionSystem::new(
        alphabet,
        formula_set(&["p", "q"]),
        Vec::new(),
        formula_set(&["p"]),
    )
    .unwrap()
}
