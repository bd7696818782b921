//! Line-based text format for deduction systems.
//!
//! ```text
//! alphabet p q r s t
//! wffs p q r s t
//! axiom p
//! axiom s
//! rule p -> q
//! rule s -> t
//! rule q t -> p q r s t
//! ```
//!
//! `#` starts a comment anywhere in a line. `alphabet` lists
//! single-character symbols, `wffs` the whole universe, one `axiom` line
//! per axiom, and `rule <premises> -> <conclusions>` with space-separated
//! formulas on both sides (empty premise side written `rule -> ...`).
//! Serialization is canonical: parsing its output reproduces the system
//! exactly.

use std::fmt::Write as _;

use crate::error::Error;
use crate::formal::{Alphabet, DeductionSystem, Formula, FormulaSet, RuleInstance};

fn parse_err(line: usize, message: impl Into<String>) -> Error {
    Error::Parse {
        line,
        message: message.into(),
    }
}

/// Parses the text format, reporting the first error with its line number.
pub fn parse_system(text: &str) -> Result<DeductionSystem, Error> {
    let mut alphabet: Option<Alphabet> = None;
    let mut wffs: Option<FormulaSet> = None;
    // (line, formula) pairs so membership errors can cite their source line
    let mut axioms: Vec<(usize, Formula)> = Vec::new();
    let mut rules: Vec<(usize, RuleInstance)> = Vec::new();

    for (idx, raw) in text.lines().enumerate() {
        let line_no = idx + 1;
        let line = raw.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        let mut tokens = line.split_whitespace();
        let directive = tokens.next().expect("non-empty line has a first token");
        let rest: Vec<&str> = tokens.collect();
        match directive {
            "alphabet" => {
                if alphabet.is_some() {
                    return Err(parse_err(line_no, "duplicate alphabet directive"));
                }
                if rest.is_empty() {
                    return Err(parse_err(line_no, "alphabet must list at least one symbol"));
                }
                let mut symbols = Vec::new();
                for tok in &rest {
                    let mut chars = tok.chars();
                    match (chars.next(), chars.next()) {
                        (Some(c), None) => symbols.push(c),
                        _ => {
                            return Err(parse_err(
                                line_no,
                                format!("alphabet symbol `{tok}` must be a single character"),
                            ))
                        }
                    }
                }
                alphabet =
                    Some(Alphabet::new(symbols).map_err(|e| parse_err(line_no, e.to_string()))?);
            }
            "wffs" => {
                if wffs.is_some() {
                    return Err(parse_err(line_no, "duplicate wffs directive"));
                }
                if rest.is_empty() {
                    return Err(parse_err(line_no, "wffs must list at least one formula"));
                }
                let mut set = FormulaSet::new();
                for tok in &rest {
                    let f = Formula::new(*tok).map_err(|e| parse_err(line_no, e.to_string()))?;
                    if !set.insert(f) {
                        return Err(parse_err(line_no, format!("duplicate wff `{tok}`")));
                    }
                }
                wffs = Some(set);
            }
            "axiom" => match rest.as_slice() {
                [tok] => {
                    let f = Formula::new(*tok).map_err(|e| parse_err(line_no, e.to_string()))?;
                    if axioms.iter().any(|(_, a)| a == &f) {
                        return Err(parse_err(line_no, format!("duplicate axiom `{tok}`")));
                    }
                    axioms.push((line_no, f));
                }
                _ => {
                    return Err(parse_err(
                        line_no,
                        "axiom directive takes exactly one formula",
                    ))
                }
            },
            "rule" => {
                let Some(arrow) = rest.iter().position(|t| *t == "->") else {
                    return Err(parse_err(line_no, "rule is missing `->`"));
                };
                let parse_side = |toks: &[&str]| -> Result<FormulaSet, Error> {
                    toks.iter()
                        .map(|t| Formula::new(*t).map_err(|e| parse_err(line_no, e.to_string())))
                        .collect()
                };
                let premises = parse_side(&rest[..arrow])?;
                let conclusions = parse_side(&rest[arrow + 1..])?;
                if conclusions.is_empty() {
                    return Err(parse_err(line_no, "rule must have at least one conclusion"));
                }
                rules.push((
                    line_no,
                    RuleInstance::new(premises, conclusions)
                        .map_err(|e| parse_err(line_no, e.to_string()))?,
                ));
            }
            other => {
                return Err(parse_err(line_no, format!("unknown directive `{other}`")));
            }
        }
    }

    let alphabet = alphabet.ok_or_else(|| parse_err(text.lines().count(), "missing alphabet"))?;
    let wffs = wffs.ok_or_else(|| parse_err(text.lines().count(), "missing wffs"))?;

    // Membership checks here so errors carry line numbers; the constructor
    // re-validates globally.
    for wff in &wffs {
        if let Some(c) = wff.chars().find(|c| !alphabet.contains(*c)) {
            return Err(parse_err(
                1,
                format!("formula `{wff}` uses `{c}` which is not in the alphabet"),
            ));
        }
    }
    for (line_no, axiom) in &axioms {
        if !wffs.contains(axiom) {
            return Err(parse_err(
                *line_no,
                format!("axiom not a declared wff: `{axiom}`"),
            ));
        }
    }
    for (line_no, rule) in &rules {
        for f in rule.premises.iter().chain(rule.conclusions.iter()) {
            if !wffs.contains(f) {
                return Err(parse_err(
                    *line_no,
                    format!("rule formula not a declared wff: `{f}`"),
                ));
            }
        }
    }

    DeductionSystem::new(
        alphabet,
        wffs,
        rules.into_iter().map(|(_, r)| r).collect(),
        axioms.into_iter().map(|(_, f)| f).collect(),
    )
}

/// Emits the canonical text form: one alphabet line (declaration order),
/// one wffs line, axiom lines and rule lines in canonical set order.
pub fn serialize_system(sys: &DeductionSystem) -> String {
    let mut out = String::new();
    let join = |set: &FormulaSet| {
        set.iter()
            .map(|f| f.as_str().to_owned())
            .collect::<Vec<_>>()
            .join(" ")
    };

    let symbols: Vec<String> = sys
        .alphabet()
        .symbols()
        .iter()
        .map(|c| c.to_string())
        .collect();
    writeln!(out, "alphabet {}", symbols.join(" ")).unwrap();
    writeln!(out, "wffs {}", join(sys.wffs())).unwrap();
    for axiom in sys.axioms() {
        writeln!(out, "axiom {axiom}").unwrap();
    }
    for rule in sys.rules() {
        writeln!(out, "rule {rule}").unwrap();
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;
    use crate::formal::{formula_set, FormulaSet};

    const EX1_TEXT: &str = "\
alphabet p q r s t
wffs p q r s t
axiom p
axiom s
rule p -> q
rule s -> t
rule q t -> p q r s t
";

    #[test]
    fn parses_the_demo_file() {
        let sys = parse_system(EX1_TEXT).unwrap();
        assert_eq!(sys.wffs().len(), 5);
        assert_eq!(sys.axioms().len(), 2);
        assert_eq!(sys.rules().len(), 3);
        assert_eq!(sys, fixtures::ex1());
    }

    #[test]
    fn rejects_axiom_outside_wffs() {
        let text = "alphabet p z\nwffs p\naxiom z\n";
        let err = parse_system(text).unwrap_err();
        match err {
            Error::Parse { line, message } => {
                assert_eq!(line, 3);
                assert!(message.contains("axiom not a declared wff"), "{message}");
            }
            other => panic!("unexpected error {other:?}"),
        }
    }

    #[test]
    fn rejects_formula_outside_alphabet() {
        let text = "alphabet p\nwffs p q\naxiom p\n";
        let err = parse_system(text).unwrap_err();
        match err {
            Error::Parse { message, .. } => {
                assert!(message.contains('q'), "error should name the symbol: {message}");
            }
            other => panic!("unexpected error {other:?}"),
        }
    }

    #[test]
    fn rejects_unknown_directive_and_duplicates() {
        assert!(matches!(
            parse_system("alphabet p\nwffs p\ntheorem p\n"),
            Err(Error::Parse { line: 3, .. })
        ));
        assert!(matches!(
            parse_system("alphabet p\nwffs p p\n"),
            Err(Error::Parse { line: 2, .. })
        ));
        assert!(matches!(
            parse_system("alphabet p\nwffs p\naxiom p\naxiom p\n"),
            Err(Error::Parse { line: 4, .. })
        ));
        assert!(matches!(
            parse_system("alphabet p\nalphabet p\n"),
            Err(Error::Parse { line: 2, .. })
        ));
    }

    #[test]
    fn rejects_malformed_rules() {
        assert!(matches!(
            parse_system("alphabet p\nwffs p\nrule p p\n"),
            Err(Error::Parse { line: 3, .. })
        ));
        assert!(matches!(
            parse_system("alphabet p\nwffs p\nrule p ->\n"),
            Err(Error::Parse { line: 3, .. })
        ));
    }

    #[test]
    fn comments_and_blank_lines_are_ignored(){
        let text = "# demo\nalphabet p q # trailing\n\nwffs p q\naxiom p # why not\n";
        let sys = parse_system(text).unwrap();
        assert_eq!(sys.wffs().len(), 2);
        assert_eq!(sys.axioms(), &formula_set(&["p"]));
    }

    #[test]
    fn round_trips_the_demo_system() {
        let sys = fixtures::ex1();
        let text = serialize_system(&sys);
        assert_eq!(parse_system(&text).unwrap(), sys);
        assert_eq!(text.lines().count(), 7);
    }

    #[test]
    fn round_trips_empty_axiom_sets() {
        let sys = fixtures::ex1_with_axioms(FormulaSet::new());
        let text = serialize_system(&sys);
        assert!(!text.contains("axiom"));
        assert_eq!(parse_system(&text).unwrap(), sys);
    }

    #[test]
    fn empty_premise_rules_round_trip() {
        let text = "alphabet p q\nwffs p q\nrule -> q\n";
        let sys = parse_system(text).unwrap();
        assert!(sys.rules()[0].premises.is_empty());
        assert_eq!(parse_system(&serialize_system(&sys)).unwrap(), sys);
    }
}
