//! Sweeps for the distribution-equivalence conjectures: equality classes of
//! single patterns under the inv and maj distributions over involutions, the
//! reversal symmetry for layered-type pattern pairs, and its corollary pairs.

use std::fmt;

use serde::Serialize;

use crate::oracle::{AvoidanceClass, Oracle, OracleError, Population, Weight};
use crate::perm::{Permutation, SquareOp};
use crate::qpoly::MultiPoly;

/// One verified (or refuted) statement.
#[derive(Debug, Clone, Serialize)]
pub struct ConjectureCheck {
    pub label: String,
    pub holds: bool,
    pub detail: String,
}

#[derive(Debug, Clone, Default, Serialize)]
pub struct ConjectureReport {
    pub checks: Vec<ConjectureCheck>,
}

impl ConjectureReport {
    pub fn all_hold(&self) -> bool {
        self.checks.iter().all(|c| c.holds)
    }

    pub fn push(&mut self, label: impl Into<String>, holds: bool, detail: impl Into<String>) {
        self.checks.push(ConjectureCheck { label: label.into(), holds, detail: detail.into() });
    }

    pub fn merge(&mut self, other: ConjectureReport) {
        self.checks.extend(other.checks);
    }
}

impl fmt::Display for ConjectureReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for c in &self.checks {
            let mark = if c.holds { "holds" } else { "FAILS" };
            writeln!(f, "[{mark}] {}: {}", c.label, c.detail)?;
        }
        Ok(())
    }
}

fn orbit(pi: &Permutation, ops: &[SquareOp]) -> Vec<Permutation> {
    let mut out: Vec<Permutation> = ops.iter().map(|&op| pi.apply_symmetry(op)).collect();
    out.sort();
    out.dedup();
    out
}

/// Partition a list of patterns into orbits under the given symmetries,
/// formatted like [`Oracle::fingerprint_partition`]: sorted index lists,
/// ordered by first member.
fn predicted_partition(patterns: &[Permutation], ops: &[SquareOp]) -> Vec<Vec<usize>> {
    let mut classes: Vec<(Vec<Permutation>, Vec<usize>)> = Vec::new();
    for (i, pi) in patterns.iter().enumerate() {
        let orb = orbit(pi, ops);
        match classes.iter_mut().find(|(o, _)| *o == orb) {
            Some((_, members)) => members.push(i),
            None => classes.push((orb, vec![i])),
        }
    }
    classes.into_iter().map(|(_, members)| members).collect()
}

fn partition_display(partition: &[Vec<usize>], patterns: &[Permutation]) -> String {
    let parts: Vec<String> = partition
        .iter()
        .map(|class| {
            let names: Vec<String> = class.iter().map(|&i| patterns[i].to_string()).collect();
            format!("{{{}}}", names.join(","))
        })
        .collect();
    parts.join(" ")
}

fn wilf_sweep(
    oracle: &Oracle,
    population: Population,
    weight: Weight,
    ops: &[SquareOp],
    stat_name: &str,
    max_len: usize,
    n_max: usize,
) -> Result<ConjectureReport, OracleError> {
    let mut report = ConjectureReport::default();
    for len in 1..=max_len {
        let patterns = oracle.members(&AvoidanceClass {
            population: Population::Permutations,
            n: len,
            patterns: vec![],
        })?;
        let sets: Vec<Vec<Permutation>> = patterns.iter().map(|p| vec![p.clone()]).collect();
        let observed = oracle.fingerprint_partition(population, &sets, n_max, weight)?;
        let predicted = predicted_partition(&patterns, ops);
        let holds = observed == predicted;
        let detail = if holds {
            format!(
                "{} classes over sizes <= {n_max}: {}",
                predicted.len(),
                partition_display(&predicted, &patterns)
            )
        } else {
            format!(
                "predicted {} but observed {}",
                partition_display(&predicted, &patterns),
                partition_display(&observed, &patterns)
            )
        };
        report.push(
            format!("{stat_name} equivalence classes of length-{len} patterns"),
            holds,
            detail,
        );
    }
    Ok(report)
}

/// Classes of single patterns under the inv distribution over involutions:
/// predicted orbits under inverse, the slope `-1` reflection, and the
/// half-turn.
pub fn inv_wilf_sweep(
    oracle: &Oracle,
    max_len: usize,
    n_max: usize,
) -> Result<ConjectureReport, OracleError> {
    wilf_sweep(
        oracle,
        Population::Involutions,
        Weight::inv(),
        &[SquareOp::Rot0, SquareOp::RefSlope1, SquareOp::RefSlopeNeg1, SquareOp::Rot180],
        "involution inv",
        max_len,
        n_max,
    )
}

/// Classes of single patterns under the maj distribution over involutions:
/// predicted orbits under inverse only.
pub fn maj_wilf_sweep(
    oracle: &Oracle,
    max_len: usize,
    n_max: usize,
) -> Result<ConjectureReport, OracleError> {
    wilf_sweep(
        oracle,
        Population::Involutions,
        Weight::maj(),
        &[SquareOp::Rot0, SquareOp::RefSlope1],
        "involution maj",
        max_len,
        n_max,
    )
}

/// The length-6 pair `231564` and `312564`: their inv distributions over
/// involutions agree for all sizes below 8 and separate at size 8, showing
/// that agreement at small sizes does not settle an equivalence.
pub fn inv_wilf_length6_split(oracle: &Oracle) -> Result<ConjectureCheck, OracleError> {
    let a = crate::perm::perm("231564");
    let b = crate::perm::perm("312564");
    let fa = oracle.fingerprint(Population::Involutions, &[a.clone()], 8, Weight::inv())?;
    let fb = oracle.fingerprint(Population::Involutions, &[b.clone()], 8, Weight::inv())?;
    let agree_below = fa[..8] == fb[..8];
    let split_at_8 = fa[8] != fb[8];
    Ok(ConjectureCheck {
        label: format!("inv distributions of {a} vs {b}"),
        holds: agree_below && split_at_8,
        detail: format!(
            "agree for sizes 0..=7: {agree_below}; differ at size 8: {split_at_8}"
        ),
    })
}

/// The layered pair: `pi1` is increasing-then-decreasing with an increasing
/// head of length `k`, `pi2` is decreasing-then-increasing with a decreasing
/// head of length `k + 1`, both of length `m`.
pub fn symmetry_pair_patterns(m: usize, k: usize) -> Option<(Permutation, Permutation)> {
    if m == 0 || k >= m {
        return None;
    }
    let pi1 = Permutation::identity(k).direct_sum(&Permutation::reversal(m - k));
    let pi2 = Permutation::reversal(k + 1).direct_sum(&Permutation::identity(m - k - 1));
    Some((pi1, pi2))
}

fn maj_genfun(
    oracle: &Oracle,
    population: Population,
    n: usize,
    pattern: &Permutation,
) -> Result<MultiPoly, OracleError> {
    oracle.genfun(
        &AvoidanceClass { population, n, patterns: vec![pattern.clone()] },
        Weight::maj(),
    )
}

/// Check `M_n(pi1; q) = q^C(n,2) M_n(pi2; 1/q)` for the layered pairs over a
/// population, for all `m <= m_max`, `k < m`, `n <= n_max`.
pub fn reversal_symmetry_sweep(
    oracle: &Oracle,
    population: Population,
    m_max: usize,
    n_max: usize,
) -> Result<ConjectureReport, OracleError> {
    let mut report = ConjectureReport::default();
    for m in 1..=m_max {
        for k in 0..m {
            let (pi1, pi2) = symmetry_pair_patterns(m, k).expect("k < m");
            let mut holds = true;
            let mut detail = format!("sizes 0..={n_max}");
            for n in 0..=n_max {
                let lhs = maj_genfun(oracle, population, n, &pi1)?;
                let rhs = maj_genfun(oracle, population, n, &pi2)?
                    .reverse_in_q((n * n.saturating_sub(1) / 2) as u32)
                    .expect("maj distribution is q-only within degree bound");
                if lhs != rhs {
                    holds = false;
                    detail = format!("fails at size {n}: {lhs} vs reversed {rhs}");
                    break;
                }
            }
            report.push(
                format!("maj reversal symmetry for {pi1} / {pi2} over {population:?}"),
                holds,
                detail,
            );
        }
    }
    Ok(report)
}

/// The corollary pairs: maj-equidistribution over all permutations for
/// `132`- vs `231`-inflations (increasing head, single max, decreasing tail)
/// and `213`- vs `312`-inflations, for all `m <= m_max`, `k <= k_max`,
/// `n <= n_max`.
pub fn corollary_pairs_sweep(
    oracle: &Oracle,
    m_max: usize,
    k_max: usize,
    n_max: usize,
) -> Result<ConjectureReport, OracleError> {
    let mut report = ConjectureReport::default();
    for m in 1..=m_max {
        for k in 0..=k_max {
            let i_m = Permutation::identity(m);
            let d_m = Permutation::reversal(m);
            let i_k = Permutation::identity(k);
            let d_k = Permutation::reversal(k);
            let one = Permutation::identity(1);
            let pairs = [
                (
                    crate::perm::inflate(&crate::perm::perm("132"), &[i_m.clone(), one.clone(), d_k.clone()]),
                    crate::perm::inflate(&crate::perm::perm("231"), &[i_m, one.clone(), d_k]),
                ),
                (
                    crate::perm::inflate(&crate::perm::perm("213"), &[d_m.clone(), one.clone(), i_k.clone()]),
                    crate::perm::inflate(&crate::perm::perm("312"), &[d_m, one, i_k]),
                ),
            ];
            for (pi1, pi2) in pairs {
                let (pi1, pi2) = (pi1.expect("inflation shapes fit"), pi2.expect("inflation shapes fit"));
                let mut holds = true;
                let mut detail = format!("sizes 0..={n_max}");
                for n in 0..=n_max {
                    let lhs = maj_genfun(oracle, Population::Permutations, n, &pi1)?;
                    let rhs = maj_genfun(oracle, Population::Permutations, n, &pi2)?;
                    if lhs != rhs {
                        holds = false;
                        detail = format!("fails at size {n}: {lhs} vs {rhs}");
                        break;
                    }
                }
                report.push(format!("maj equidistribution for {pi1} / {pi2}"), holds, detail);
            }
        }
    }
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::perm::perm;

    #[test]
    fn predicted_orbits_of_length_three() {
        let oracle = Oracle::new();
        let patterns = oracle
            .members(&AvoidanceClass {
                population: Population::Permutations,
                n: 3,
                patterns: vec![],
            })
            .unwrap();
        let four = predicted_partition(
            &patterns,
            &[SquareOp::Rot0, SquareOp::RefSlope1, SquareOp::RefSlopeNeg1, SquareOp::Rot180],
        );
        assert_eq!(four.len(), 4);
        let two_el: Vec<Vec<String>> = four
            .iter()
            .map(|c| c.iter().map(|&i| patterns[i].to_string()).collect())
            .collect();
        assert!(two_el.contains(&vec!["132".to_string(), "213".to_string()]));
        assert!(two_el.contains(&vec!["231".to_string(), "312".to_string()]));
    }

    #[test]
    fn inv_sweep_holds_for_short_patterns() {
        let oracle = Oracle::new();
        let report = inv_wilf_sweep(&oracle, 3, 7).unwrap();
        assert!(report.all_hold(), "{report}");
    }

    #[test]
    fn maj_sweep_holds_for_short_patterns() {
        let oracle = Oracle::new();
        let report = maj_wilf_sweep(&oracle, 3, 7).unwrap();
        assert!(report.all_hold(), "{report}");
    }

    #[test]
    fn symmetry_pairs_are_well_formed() {
        let (pi1, pi2) = symmetry_pair_patterns(5, 2).unwrap();
        assert_eq!(pi1, perm("12543"));
        assert_eq!(pi2, perm("32145"));
        assert!(symmetry_pair_patterns(3, 3).is_none());
    }

    #[test]
    fn reversal_symmetry_small_sweep() {
        let oracle = Oracle::new();
        for population in [Population::Permutations, Population::Involutions] {
            let report = reversal_symmetry_sweep(&oracle, population, 4, 6).unwrap();
            assert!(report.all_hold(), "{report}");
        }
    }

    #[test]
    fn corollary_pairs_small_sweep() {
        let oracle = Oracle::new();
        let report = corollary_pairs_sweep(&oracle, 2, 2, 6).unwrap();
        assert!(report.all_hold(), "{report}");
    }
}
