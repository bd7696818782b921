//! Iterated theory closure.
//!
//! Starting from a base set `T_0`, each step applies the one-step
//! consequence map: `T_{n+1} = consequences(T_n)`. The map need not be
//! inflationary, so the state sequence is not necessarily increasing; it
//! lives in the finite powerset of `W` and is therefore eventually
//! periodic. Iteration stops at the first repeated state, which is enough
//! to know the full union `T = ⋃ T_n` and the minimal derivation depth of
//! every member.

use std::collections::HashMap;

use serde::Serialize;

use crate::error::Error;
use crate::formal::{DeductionSystem, Formula, FormulaSet};

/// How the state sequence was observed to repeat.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Termination {
    /// `states[step]` maps to itself.
    Fixpoint { step: usize },
    /// `states[start + period]` equals `states[start]` with `period > 1`.
    Cycle { start: usize, period: usize },
}

/// The recorded closure run: `states[0] = base`, each next state is the
/// consequences of the previous one, and the final entry repeats an
/// earlier state so the termination evidence is checkable from `states`
/// alone.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ClosureTrace {
    pub states: Vec<FormulaSet>,
    pub termination: Termination,
    /// Union of all states; equals the union over every `n ∈ ℕ` because
    /// the sequence only revisits recorded states after the first repeat.
    pub union: FormulaSet,
}

impl ClosureTrace {
    fn cycle(&self) -> (usize, usize) {
        match self.termination {
            Termination::Fixpoint { step } => (step, 1),
            Termination::Cycle { start, period } => (start, period),
        }
    }

    /// The state `T_n` for arbitrary `n`, using periodicity past the
    /// recorded prefix.
    pub fn state_at(&self, n: usize) -> &FormulaSet {
        if n < self.states.len() {
            return &self.states[n];
        }
        let (start, period) = self.cycle();
        &self.states[start + (n - start) % period]
    }

    /// Smallest `n` with `f ∈ T_n`, if any.
    pub fn depth_of(&self, f: &Formula) -> Option<usize> {
        self.states.iter().position(|s| s.contains(f))
    }
}

/// Iterates the consequence map from `base` until a state repeats.
pub fn closure_trace(sys: &DeductionSystem, base: &FormulaSet) -> Result<ClosureTrace, Error> {
    if let Some(f) = base.iter().find(|f| !sys.wffs().contains(f)) {
        return Err(Error::NotAWff(f.clone()));
    }

    let mut states = vec![base.clone()];
    let mut union = base.clone();
    let mut seen: HashMap<FormulaSet, usize> = HashMap::new();
    seen.insert(base.clone(), 0);

    loop {
        let next = sys.consequences_unchecked(states.last().expect("states is non-empty"));
        union.extend(&next);
        if let Some(&start) = seen.get(&next) {
            let period = states.len() - start;
            states.push(next);
            let termination = if period == 1 {
                Termination::Fixpoint { step: start }
            } else {
                Termination::Cycle { start, period }
            };
            return Ok(ClosureTrace {
                states,
                termination,
                union,
            });
        }
        seen.insert(next.clone(), states.len());
        states.push(next);
    }
}

/// The theory of `base`: the union of every iterate.
pub fn theory_of(sys: &DeductionSystem, base: &FormulaSet) -> Result<FormulaSet, Error> {
    Ok(closure_trace(sys, base)?.union)
}

/// A base is inconsistent exactly when its theory is all of `W`.
pub fn is_inconsistent(sys: &DeductionSystem, base: &FormulaSet) -> Result<bool, Error> {
    Ok(&theory_of(sys, base)? == sys.wffs())
}

/// Minimal derivation depth of `sentence` from the system's axioms.
pub fn depth_of(sys: &DeductionSystem, sentence: &Formula) -> Result<usize, Error> {
    sys.require_wff(sentence)?;
    let trace = closure_trace(sys, sys.axioms())?;
    trace
        .depth_of(sentence)
        .ok_or_else(|| Error::NotDerivable(sentence.clone()))
}
