//! Re-runnable verification suite: every registered closed form and table
//! row is recomputed and compared against the brute-force oracle, and the
//! structural maps are round-tripped, at configurable size caps.  Known
//! corrections to the published forms are reported as warnings.

use std::fmt;

use serde::Serialize;

use crate::bijections;
use crate::formulas;
use crate::oracle::{AvoidanceClass, Oracle, OracleError, Population, Weight};
use crate::perm::{perm, PermError, Permutation};
use crate::syt;
use crate::tables;
use crate::words;

#[derive(Debug, thiserror::Error)]
pub enum VerifyError {
    #[error(transparent)]
    Oracle(#[from] OracleError),
    #[error(transparent)]
    Perm(#[from] PermError),
}

/// Size caps for the suite.  Defaults keep a debug-build run under a few
/// seconds; the acceptance tests use larger caps in release builds.
#[derive(Debug, Clone, Copy, Serialize)]
pub struct VerifyOptions {
    /// Largest involution size checked against each involution formula/row.
    pub involution_cap: usize,
    /// Largest permutation size for formulas over all permutations.
    pub permutation_cap: usize,
    /// Largest (even) size for fixed-point-free formulas.
    pub fpf_cap: usize,
    /// Largest size for bijection round trips.
    pub bijection_cap: usize,
}

impl Default for VerifyOptions {
    fn default() -> Self {
        VerifyOptions { involution_cap: 9, permutation_cap: 7, fpf_cap: 8, bijection_cap: 8 }
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct CheckOutcome {
    pub name: String,
    pub passed: bool,
    pub detail: String,
}

/// A known discrepancy between a published statement and the verified form
/// implemented here.
#[derive(Debug, Clone, Copy, Serialize)]
pub struct Erratum {
    pub id: &'static str,
    pub summary: &'static str,
}

pub fn known_errata() -> Vec<Erratum> {
    vec![
        Erratum {
            id: "maj-231-product-index",
            summary: "the maj product formula for the 231 class is sometimes quoted with the \
                      factor index starting at 0, which doubles every coefficient; the product \
                      must start at index 1 (implemented and verified with k >= 1)",
        },
        Erratum {
            id: "two-pattern-table-duplicate-row",
            summary: "the two-pattern table circulates with the row for {123, 231} mislabelled \
                      as a second {123, 213} row; the closed form matches the {123, 231} class \
                      (key `123,231` here) and provably differs from {123, 213} at size 4",
        },
        Erratum {
            id: "row-132-231-exponent",
            summary: "the {132, 231} row is quoted with a p-exponent depending on n; the \
                      oracle-confirmed exponent is C(k, 2) in the summation index k",
        },
        Erratum {
            id: "row-213-312-exponent",
            summary: "the {213, 312}-family row is quoted with q-exponent k(k-1); the \
                      oracle-confirmed exponent is k(n-k-1)",
        },
        Erratum {
            id: "four-pattern-row-t-factor",
            summary: "the four-pattern rows require an extra t^(n-1) factor and explicit \
                      values at sizes below 3 (the classes are all of I_2 at size 2)",
        },
    ]
}

#[derive(Debug, Clone, Serialize)]
pub struct VerifyReport {
    pub options: VerifyOptions,
    pub checks: Vec<CheckOutcome>,
    pub warnings: Vec<Erratum>,
}

impl VerifyReport {
    pub fn all_passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }
}

impl fmt::Display for VerifyReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for c in &self.checks {
            let mark = if c.passed { "pass" } else { "FAIL" };
            writeln!(f, "[{mark}] {}: {}", c.name, c.detail)?;
        }
        for w in &self.warnings {
            writeln!(f, "[warn] {}: {}", w.id, w.summary)?;
        }
        let verdict = if self.all_passed() { "all checks passed" } else { "CHECKS FAILED" };
        writeln!(
            f,
            "{verdict} ({} checks, {} known-discrepancy warnings)",
            self.checks.len(),
            self.warnings.len()
        )
    }
}

pub fn run(oracle: &Oracle, options: VerifyOptions) -> Result<VerifyReport, VerifyError> {
    let mut checks = Vec::new();
    checks.extend(check_formula_registry(oracle, options)?);
    checks.extend(check_table_rows(oracle, options)?);
    checks.extend(check_bijections(oracle, options)?);
    Ok(VerifyReport { options, checks, warnings: known_errata() })
}

fn cap_for(options: VerifyOptions, population: Population) -> usize {
    match population {
        Population::Permutations => options.permutation_cap,
        Population::Involutions => options.involution_cap,
        Population::FixedPointFree => options.fpf_cap,
    }
}

fn check_formula_registry(
    oracle: &Oracle,
    options: VerifyOptions,
) -> Result<Vec<CheckOutcome>, VerifyError> {
    let mut out = Vec::new();
    for formula in formulas::registry() {
        let cap = cap_for(options, formula.population);
        let mut passed = true;
        let mut detail = format!("matches oracle for sizes 0..={cap}");
        for n in 0..=cap {
            if formula.population == Population::FixedPointFree && n % 2 == 1 {
                continue;
            }
            let class = AvoidanceClass {
                population: formula.population,
                n,
                patterns: formula.patterns.iter().map(|s| perm(s)).collect(),
            };
            let expected = oracle.genfun(&class, formula.weight)?;
            let got = (formula.eval)(n);
            if got != expected {
                passed = false;
                detail = format!("size {n}: formula gives {got}, oracle gives {expected}");
                break;
            }
        }
        out.push(CheckOutcome { name: format!("formula {}", formula.id), passed, detail });
    }
    Ok(out)
}

fn check_table_rows(
    oracle: &Oracle,
    options: VerifyOptions,
) -> Result<Vec<CheckOutcome>, VerifyError> {
    let mut out = Vec::new();
    let cap = options.involution_cap.min(9);
    for row in tables::rows() {
        let patterns: Vec<Permutation> = row.key.split(',').map(perm).collect();
        let mut passed = true;
        let mut detail = format!("matches joint (inv, maj, des) oracle for sizes 0..={cap}");
        for n in 0..=cap {
            let class = AvoidanceClass {
                population: Population::Involutions,
                n,
                patterns: patterns.clone(),
            };
            let expected = oracle.genfun(&class, Weight::joint())?;
            let got = row.eval_f(n);
            if got != expected {
                passed = false;
                detail = format!("size {n}: row gives {got}, oracle gives {expected}");
                break;
            }
        }
        out.push(CheckOutcome { name: format!("table row {{{}}}", row.key), passed, detail });
    }
    Ok(out)
}

fn check_bijections(
    oracle: &Oracle,
    options: VerifyOptions,
) -> Result<Vec<CheckOutcome>, VerifyError> {
    let cap = options.bijection_cap;
    let mut out = Vec::new();

    let mut word_ok = true;
    let mut transfer_ok = true;
    let mut transpose_ok = true;
    let mut removal_ok = true;
    let mut theta_ok = true;
    let mut witness = String::new();

    for n in 0..=cap {
        let all = AvoidanceClass { population: Population::Involutions, n, patterns: vec![] };
        oracle.visit_class(&all, |iota| {
            if iota.avoids(&perm("321")) {
                let w = words::phi_321(iota).unwrap();
                if w.des_set() != iota.stats().des_set
                    || words::phi_321_inverse(&w).unwrap() != *iota
                {
                    word_ok = false;
                    witness = format!("word encoding fails on {iota}");
                }
            }
            if iota.avoids(&perm("213")) {
                let image = bijections::transfer_213_to_132(iota).unwrap();
                if !image.avoids(&perm("132"))
                    || iota.stats().maj + image.stats().maj != (n * n.saturating_sub(1) / 2) as u64
                {
                    transfer_ok = false;
                    witness = format!("descent transfer fails on {iota}");
                }
            }
            let t = syt::involution_tableau(iota).unwrap();
            if syt::tableau_to_involution(&t.transpose()).map(|j| j.is_involution()) != Ok(true) {
                transpose_ok = false;
                witness = format!("tableau transpose fails on {iota}");
            }
            if iota.avoids(&perm("123")) {
                let seq = bijections::decompose_123(iota).unwrap();
                if !bijections::family_contains(seq.family, seq.m, &seq.entries)
                    || bijections::rebuild_123(&seq).unwrap() != *iota
                {
                    removal_ok = false;
                    witness = format!("cycle removal fails on {iota}");
                }
            }
            if iota.avoids(&perm("132")) {
                let image = bijections::theta(iota).unwrap();
                if !image.is_involution()
                    || image.stats().des_set != iota.stats().asc_set
                    || bijections::theta_inverse(&image).unwrap() != *iota
                {
                    theta_ok = false;
                    witness = format!("theta fails on {iota}");
                }
            }
        })?;
    }

    let push = |out: &mut Vec<CheckOutcome>, name: &str, ok: bool| {
        out.push(CheckOutcome {
            name: name.to_string(),
            passed: ok,
            detail: if ok {
                format!("round trips for all involutions of size <= {cap}")
            } else {
                witness.clone()
            },
        });
    };
    push(&mut out, "binary-word encoding of the 321 class", word_ok);
    push(&mut out, "descent-set transfer 213 -> 132", transfer_ok);
    push(&mut out, "tableau transposition on involutions", transpose_ok);
    push(&mut out, "cycle-removal decomposition of the 123 class", removal_ok);
    push(&mut out, "ascent-to-descent map 132 -> 213", theta_ok);
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn suite_passes_with_reduced_caps() {
        let oracle = Oracle::new();
        let options = VerifyOptions {
            involution_cap: 7,
            permutation_cap: 6,
            fpf_cap: 6,
            bijection_cap: 7,
        };
        let report = run(&oracle, options).unwrap();
        assert!(report.all_passed(), "{report}");
        assert!(!report.warnings.is_empty());
        let text = report.to_string();
        assert!(text.contains("all checks passed"));
        assert!(text.contains("[warn]"));
    }
}
