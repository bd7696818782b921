//! Formulas, ground rule instances and deduction systems.
//!
//! A [`DeductionSystem`] fixes a finite universe of well-formed formulas
//! `W` over a single-character alphabet, a finite set of ground rule
//! instances and an axiom set `A ⊆ W`. The rules induce the one-step
//! consequence map `S ↦ consequences(S)`: the union of the conclusions of
//! every rule whose premises are contained in `S`. The map is finitely
//! generated by construction (each rule has finitely many premises) and
//! is *not* inflationary: `S` is not automatically part of its own
//! consequences.

use std::collections::BTreeSet;
use std::fmt;

use serde::Serialize;

use crate::error::Error;

/// Finite ordered set of single-character symbols.
///
/// Declaration order is preserved; it is part of system equality and of
/// the serialized form.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Alphabet {
    symbols: Vec<char>,
}

impl Alphabet {
    pub fn new(symbols: impl IntoIterator<Item = char>) -> Result<Self, Error> {
        let symbols: Vec<char> = symbols.into_iter().collect();
        if symbols.is_empty() {
            return Err(Error::Invalid("alphabet must be non-empty".into()));
        }
        let mut seen = BTreeSet::new();
        for &c in &symbols {
            if c.is_whitespace() || c == '#' {
                return Err(Error::Invalid(format!(
                    "alphabet symbol `{}` is not allowed (whitespace and '#' are reserved)",
                    c.escape_default()
                )));
            }
            if !seen.insert(c) {
                return Err(Error::Invalid(format!("duplicate alphabet symbol `{c}`")));
            }
        }
        Ok(Alphabet { symbols })
    }

    pub fn contains(&self, c: char) -> bool {
        self.symbols.contains(&c)
    }

    pub fn symbols(&self) -> &[char] {
        &self.symbols
    }
}

/// Non-empty finite symbol string; ordered lexicographically.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
#[serde(transparent)]
pub struct Formula(String);

impl Formula {
    pub fn new(text: impl Into<String>) -> Result<Self, Error> {
        let text = text.into();
        if text.is_empty() {
            return Err(Error::Invalid("formula must be non-empty".into()));
        }
        if let Some(c) = text.chars().find(|c| c.is_whitespace() || *c == '#') {
            return Err(Error::Invalid(format!(
                "formula `{text}` contains the reserved character `{}`",
                c.escape_default()
            )));
        }
        Ok(Formula(text))
    }

    pub fn as_str(&self) -> &str {
        &self.0
    }

    /// Number of symbols, repetitions counted.
    pub fn len(&self) -> usize {
        self.0.chars().count()
    }

    #[allow(clippy::len_without_is_empty)] // formulas are non-empty by construction
    pub fn chars(&self) -> impl Iterator<Item = char> + '_ {
        self.0.chars()
    }
}

impl fmt::Display for Formula {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0)
    }
}

/// Finite formula set with canonical (lexicographic) iteration order.
#[derive(Debug, Clone, Default, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
#[serde(transparent)]
pub struct FormulaSet(BTreeSet<Formula>);

impl FormulaSet {
    pub fn new() -> Self {
        FormulaSet(BTreeSet::new())
    }

    pub fn singleton(f: Formula) -> Self {
        let mut s = BTreeSet::new();
        s.insert(f);
        FormulaSet(s)
    }

    pub fn insert(&mut self, f: Formula) -> bool {
        self.0.insert(f)
    }

    pub fn remove(&mut self, f: &Formula) -> bool {
        self.0.remove(f)
    }

    pub fn contains(&self, f: &Formula) -> bool {
        self.0.contains(f)
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn is_subset(&self, other: &FormulaSet) -> bool {
        self.0.is_subset(&other.0)
    }

    pub fn union(&self, other: &FormulaSet) -> FormulaSet {
        FormulaSet(self.0.union(&other.0).cloned().collect())
    }

    pub fn extend(&mut self, other: &FormulaSet) {
        self.0.extend(other.0.iter().cloned());
    }

    pub fn iter(&self) -> impl Iterator<Item = &Formula> {
        self.0.iter()
    }

    /// Sum of formula lengths over the members.
    pub fn total_length(&self) -> usize {
        self.0.iter().map(Formula::len).sum()
    }
}

impl FromIterator<Formula> for FormulaSet {
    fn from_iter<I: IntoIterator<Item = Formula>>(iter: I) -> Self {
        FormulaSet(iter.into_iter().collect())
    }
}

impl<'a> IntoIterator for &'a FormulaSet {
    type Item = &'a Formula;
    type IntoIter = std::collections::btree_set::Iter<'a, Formula>;

    fn into_iter(self) -> Self::IntoIter {
        self.0.iter()
    }
}

impl fmt::Display for FormulaSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (i, m) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{m}")?;
        }
        write!(f, "}}")
    }
}

/// Ground rule instance: fires on any set containing all premises.
///
/// Premises may be empty; such rules fire on every set, including the
/// empty one. Conclusions are non-empty.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub struct RuleInstance {
    pub premises: FormulaSet,
    pub conclusions: FormulaSet,
}

impl RuleInstance {
    pub fn new(premises: FormulaSet, conclusions: FormulaSet) -> Result<Self, Error> {
        if conclusions.is_empty() {
            return Err(Error::Invalid("rule conclusions must be non-empty".into()));
        }
        Ok(RuleInstance {
            premises,
            conclusions,
        })
    }

    pub fn fires_on(&self, s: &FormulaSet) -> bool {
        self.premises.is_subset(s)
    }
}

impl fmt::Display for RuleInstance {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let side = |set: &FormulaSet| {
            set.iter()
                .map(|m| m.as_str().to_owned())
                .collect::<Vec<_>>()
                .join(" ")
        };
        if self.premises.is_empty() {
            write!(f, "-> {}", side(&self.conclusions))
        } else {
            write!(f, "{} -> {}", side(&self.premises), side(&self.conclusions))
        }
    }
}

/// One structural invariant violation found by [`DeductionSystem::validate`].
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum ValidationIssue {
    EmptyAlphabet,
    EmptyWffs,
    FormulaNotOverAlphabet { formula: Formula, symbol: char },
    AxiomNotWff { formula: Formula },
    RulePremiseNotWff { formula: Formula },
    RuleConclusionNotWff { formula: Formula },
    RuleWithoutConclusions,
}

impl fmt::Display for ValidationIssue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ValidationIssue::EmptyAlphabet => write!(f, "alphabet is empty"),
            ValidationIssue::EmptyWffs => write!(f, "wff set is empty"),
            ValidationIssue::FormulaNotOverAlphabet { formula, symbol } => write!(
                f,
                "formula `{formula}` uses `{symbol}` which is not in the alphabet"
            ),
            ValidationIssue::AxiomNotWff { formula } => {
                write!(f, "axiom `{formula}` is not a declared wff")
            }
            ValidationIssue::RulePremiseNotWff { formula } => {
                write!(f, "rule premise `{formula}` is not a declared wff")
            }
            ValidationIssue::RuleConclusionNotWff { formula } => {
                write!(f, "rule conclusion `{formula}` is not a declared wff")
            }
            ValidationIssue::RuleWithoutConclusions => {
                write!(f, "rule has no conclusions")
            }
        }
    }
}

/// Finite deduction system: alphabet, wff universe `W`, ground rules and
/// axiom set `A ⊆ W`.
///
/// Values are immutable after construction and safe to share across
/// threads. Rules are kept sorted and deduplicated so equal systems have
/// equal representations.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DeductionSystem {
    alphabet: Alphabet,
    wffs: FormulaSet,
    rules: Vec<RuleInstance>,
    axioms: FormulaSet,
}

impl DeductionSystem {
    pub fn new(
        alphabet: Alphabet,
        wffs: FormulaSet,
        rules: Vec<RuleInstance>,
        axioms: FormulaSet,
    ) -> Result<Self, Error> {
        let sys = Self::new_unchecked(alphabet, wffs, rules, axioms);
        let issues = sys.validate();
        if issues.is_empty() {
            Ok(sys)
        } else {
            Err(Error::Validation(issues))
        }
    }

    /// Builds without validating. Intended for tooling that wants to run
    /// [`DeductionSystem::validate`] on ill-formed input.
    pub fn new_unchecked(
        alphabet: Alphabet,
        wffs: FormulaSet,
        mut rules: Vec<RuleInstance>,
        axioms: FormulaSet,
    ) -> Self {
        rules.sort();
        rules.dedup();
        DeductionSystem {
            alphabet,
            wffs,
            rules,
            axioms,
        }
    }

    pub fn alphabet(&self) -> &Alphabet {
        &self.alphabet
    }

    pub fn wffs(&self) -> &FormulaSet {
        &self.wffs
    }

    pub fn rules(&self) -> &[RuleInstance] {
        &self.rules
    }

    pub fn axioms(&self) -> &FormulaSet {
        &self.axioms
    }

    /// Lists every structural invariant violation; empty means valid.
    pub fn validate(&self) -> Vec<ValidationIssue> {
        let mut issues = Vec::new();
        if self.alphabet.symbols().is_empty() {
            issues.push(ValidationIssue::EmptyAlphabet);
        }
        if self.wffs.is_empty() {
            issues.push(ValidationIssue::EmptyWffs);
        }
        for wff in &self.wffs {
            if let Some(symbol) = wff.chars().find(|c| !self.alphabet.contains(*c)) {
                issues.push(ValidationIssue::FormulaNotOverAlphabet {
                    formula: wff.clone(),
                    symbol,
                });
            }
        }
        for axiom in &self.axioms {
            if !self.wffs.contains(axiom) {
                issues.push(ValidationIssue::AxiomNotWff {
                    formula: axiom.clone(),
                });
            }
        }
        for rule in &self.rules {
            if rule.conclusions.is_empty() {
                issues.push(ValidationIssue::RuleWithoutConclusions);
            }
            for p in &rule.premises {
                if !self.wffs.contains(p) {
                    issues.push(ValidationIssue::RulePremiseNotWff { formula: p.clone() });
                }
            }
            for c in &rule.conclusions {
                if !self.wffs.contains(c) {
                    issues.push(ValidationIssue::RuleConclusionNotWff { formula: c.clone() });
                }
            }
        }
        issues
    }

    /// One-step consequences: the union of the conclusions of every rule
    /// whose premises are contained in `s`.
    ///
    /// The result does not automatically include `s` itself.
    pub fn consequences(&self, s: &FormulaSet) -> Result<FormulaSet, Error> {
        if let Some(f) = s.iter().find(|f| !self.wffs.contains(f)) {
            return Err(Error::NotAWff(f.clone()));
        }
        Ok(self.consequences_unchecked(s))
    }

    pub(crate) fn consequences_unchecked(&self, s: &FormulaSet) -> FormulaSet {
        let mut out = FormulaSet::new();
        for rule in &self.rules {
            if rule.fires_on(s) {
                out.extend(&rule.conclusions);
            }
        }
        out
    }

    /// Requires `f` to be a declared wff.
    pub fn require_wff(&self, f: &Formula) -> Result<(), Error> {
        if self.wffs.contains(f) {
            Ok(())
        } else {
            Err(Error::NotAWff(f.clone()))
        }
    }
}

/// Builds a formula, panicking on invalid text. Test/fixture convenience.
pub fn formula(text: &str) -> Formula {
    Formula::new(text).expect("invalid formula literal")
}

/// Builds a formula set from literals. Test/fixture convenience.
pub fn formula_set(texts: &[&str]) -> FormulaSet {
    texts.iter().map(|t| formula(t)).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;

    #[test]
    fn formula_length_counts_repetitions() {
        assert_eq!(formula("p").len(), 1);
        assert_eq!(formula("0=0").len(), 3);
        assert_eq!(formula("sss0=ss0").len(), 8);
    }

    #[test]
    fn formula_rejects_empty_and_reserved() {
        assert!(Formula::new("").is_err());
        assert!(Formula::new("a b").is_err());
        assert!(Formula::new("a#b").is_err());
    }

    #[test]
    fn alphabet_rejects_duplicates_and_reserved() {
        assert!(Alphabet::new(['p', 'p']).is_err());
        assert!(Alphabet::new([' ']).is_err());
        assert!(Alphabet::new(['#']).is_err());
        assert!(Alphabet::new([]).is_err());
    }

    #[test]
    fn consequences_fire_matching_rules() {
        let sys = fixtures::ex1();
        let got = sys.consequences(&formula_set(&["p", "s"])).unwrap();
        assert_eq!(got, formula_set(&["q", "t"]));

        let got = sys.consequences(&formula_set(&["q", "t"])).unwrap();
        assert_eq!(got, formula_set(&["p", "q", "r", "s", "t"]));
    }

    #[test]
    fn consequences_of_empty_set_without_nullary_rules() {
        let sys = fixtures::ex1();
        let got = sys.consequences(&FormulaSet::new()).unwrap();
        assert!(got.is_empty());
    }

    #[test]
    fn consequences_reject_foreign_formulas() {
        let sys = fixtures::ex1();
        let err = sys.consequences(&formula_set(&["z"])).unwrap_err();
        assert_eq!(err, Error::NotAWff(formula("z")));
    }

    #[test]
    fn empty_premise_rules_fire_on_everything() {
        let alphabet = Alphabet::new(['p', 'q']).unwrap();
        let wffs = formula_set(&["p", "q"]);
        let rules = vec![RuleInstance::new(FormulaSet::new(), formula_set(&["q"])).unwrap()];
        let sys = DeductionSystem::new(alphabet, wffs, rules, formula_set(&["p"])).unwrap();
        assert_eq!(
            sys.consequences(&FormulaSet::new()).unwrap(),
            formula_set(&["q"])
        );
    }

    #[test]
    fn validate_reports_each_violation() {
        let sys = fixtures::ex1();
        assert!(sys.validate().is_empty());

        let bad_rule = DeductionSystem::new_unchecked(
            Alphabet::new(['p']).unwrap(),
            formula_set(&["p"]),
            vec![RuleInstance {
                premises: formula_set(&["p"]),
                conclusions: formula_set(&["q"]),
            }],
            FormulaSet::new(),
        );
        let issues = bad_rule.validate();
        assert_eq!(issues.len(), 1);
        assert!(matches!(
            &issues[0],
            ValidationIssue::RuleConclusionNotWff { formula } if formula.as_str() == "q"
        ));

        let empty_wffs = DeductionSystem::new_unchecked(
            Alphabet::new(['p']).unwrap(),
            FormulaSet::new(),
            Vec::new(),
            FormulaSet::new(),
        );
        assert_eq!(empty_wffs.validate(), vec![ValidationIssue::EmptyWffs]);
    }

    #[test]
    fn rules_are_canonicalized() {
        let r1 = RuleInstance::new(formula_set(&["p"]), formula_set(&["q"])).unwrap();
        let r2 = RuleInstance::new(FormulaSet::new(), formula_set(&["p"])).unwrap();
        let a = DeductionSystem::new(
            Alphabet::new(['p', 'q']).unwrap(),
            formula_set(&["p", "q"]),
            vec![r1.clone(), r2.clone(), r1.clone()],
            FormulaSet::new(),
        )
        .unwrap();
        let b = DeductionSystem::new(
            Alphabet::new(['p', 'q']).unwrap(),
            formula_set(&["p", "q"]),
            vec![r2, r1],
            FormulaSet::new(),
        )
        .unwrap();
        assert_eq!(a, b);
        assert_eq!(a.rules().len(), 2);
    }
}
