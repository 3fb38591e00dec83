//! Brute-force oracle: exhaustive enumeration of permutations, involutions
//! and fixed-point-free involutions, restricted to pattern-avoidance classes,
//! and the exact distribution of any statistic combination over such a class.
//!
//! Enumeration is streaming (a visitor is called on each member, nothing is
//! collected unless asked for) and deterministic.  Involutions are built by
//! deciding the fate of the largest remaining index: it is either a fixed
//! point or is paired with a smaller index.  The first such decision doubles
//! as a chunk boundary for the parallel generating-function path, which must
//! produce bit-identical results to the serial one.

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::perm::{PermError, Permutation, StatBundle};
use crate::qpoly::{Exp, MultiPoly};

#[derive(Clone, Copy, PartialEq, Eq, Debug, Hash, Serialize, Deserialize)]
pub enum Population {
    Permutations,
    Involutions,
    FixedPointFree,
}

impl Population {
    pub fn token(self) -> &'static str {
        match self {
            Population::Permutations => "perm",
            Population::Involutions => "inv",
            Population::FixedPointFree => "fpf",
        }
    }

    pub fn parse(s: &str) -> Option<Population> {
        match s {
            "perm" => Some(Population::Permutations),
            "inv" => Some(Population::Involutions),
            "fpf" => Some(Population::FixedPointFree),
            _ => None,
        }
    }
}

/// Size caps guarding against accidental exponential blow-ups.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Caps {
    pub permutations: usize,
    pub involutions: usize,
}

impl Default for Caps {
    fn default() -> Self {
        Caps { permutations: 10, involutions: 14 }
    }
}

#[derive(Debug, thiserror::Error, PartialEq, Eq)]
pub enum OracleError {
    #[error("size {n} exceeds the enumeration cap {cap} for this population")]
    CapExceeded { n: usize, cap: usize },
    #[error("fixed-point-free involutions require even size, got {0}")]
    OddFixedPointFree(usize),
    #[error(transparent)]
    Perm(#[from] PermError),
}

/// Which statistic each polynomial variable records.
///
/// `None` leaves the variable unused (exponent 0).
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Weight {
    pub p: Option<CountStat>,
    pub q: Option<CountStat>,
    pub t: Option<CountStat>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum CountStat {
    Inv,
    Coinv,
    Maj,
    Comaj,
    Des,
    Asc,
}

impl CountStat {
    pub fn of(self, stats: &StatBundle) -> u64 {
        match self {
            CountStat::Inv => stats.inv,
            CountStat::Coinv => stats.coinv,
            CountStat::Maj => stats.maj,
            CountStat::Comaj => stats.comaj,
            CountStat::Des => stats.des,
            CountStat::Asc => stats.asc,
        }
    }

    pub fn token(self) -> &'static str {
        match self {
            CountStat::Inv => "inv",
            CountStat::Coinv => "coinv",
            CountStat::Maj => "maj",
            CountStat::Comaj => "comaj",
            CountStat::Des => "des",
            CountStat::Asc => "asc",
        }
    }

    pub fn parse(s: &str) -> Option<CountStat> {
        match s {
            "inv" => Some(CountStat::Inv),
            "coinv" => Some(CountStat::Coinv),
            "maj" => Some(CountStat::Maj),
            "comaj" => Some(CountStat::Comaj),
            "des" => Some(CountStat::Des),
            "asc" => Some(CountStat::Asc),
            _ => None,
        }
    }
}

impl Weight {
    pub fn q_only(stat: CountStat) -> Weight {
        Weight { p: None, q: Some(stat), t: None }
    }

    pub fn inv() -> Weight {
        Weight::q_only(CountStat::Inv)
    }

    pub fn coinv() -> Weight {
        Weight::q_only(CountStat::Coinv)
    }

    pub fn maj() -> Weight {
        Weight::q_only(CountStat::Maj)
    }

    pub fn comaj() -> Weight {
        Weight::q_only(CountStat::Comaj)
    }

    /// `(comaj, asc)` in `(q, t)`.
    pub fn comaj_asc() -> Weight {
        Weight { p: None, q: Some(CountStat::Comaj), t: Some(CountStat::Asc) }
    }

    /// `(inv, maj, des)` in `(p, q, t)`.
    pub fn joint() -> Weight {
        Weight { p: Some(CountStat::Inv), q: Some(CountStat::Maj), t: Some(CountStat::Des) }
    }

    /// `(coinv, comaj, asc)` in `(p, q, t)`.
    pub fn joint_reversed() -> Weight {
        Weight { p: Some(CountStat::Coinv), q: Some(CountStat::Comaj), t: Some(CountStat::Asc) }
    }

    pub fn monomial_exp(&self, stats: &StatBundle) -> Exp {
        let get = |slot: Option<CountStat>| -> u32 {
            slot.map(|s| u32::try_from(s.of(stats)).expect("statistic fits in u32")).unwrap_or(0)
        };
        Exp::new(get(self.p), get(self.q), get(self.t))
    }
}

/// A pattern-avoidance class inside one population at one size.
#[derive(Clone, Debug)]
pub struct AvoidanceClass {
    pub population: Population,
    pub n: usize,
    pub patterns: Vec<Permutation>,
}

/// The oracle: enumeration with caps.
#[derive(Clone, Debug, Default)]
pub struct Oracle {
    pub caps: Caps,
}

impl Oracle {
    pub fn new() -> Self {
        Oracle::default()
    }

    pub fn with_caps(caps: Caps) -> Self {
        Oracle { caps }
    }

    fn check_cap(&self, population: Population, n: usize) -> Result<(), OracleError> {
        let cap = match population {
            Population::Permutations => self.caps.permutations,
            Population::Involutions | Population::FixedPointFree => self.caps.involutions,
        };
        if n > cap {
            return Err(OracleError::CapExceeded { n, cap });
        }
        if population == Population::FixedPointFree && n % 2 != 0 {
            return Err(OracleError::OddFixedPointFree(n));
        }
        Ok(())
    }

    /// Number of top-level chunks for parallel enumeration of size `n`.
    pub fn chunk_count(population: Population, n: usize) -> usize {
        if n == 0 {
            return 1;
        }
        match population {
            Population::Permutations => n,
            Population::Involutions => n,     // n fixed, or paired with one of n-1 indices
            Population::FixedPointFree => n.saturating_sub(1).max(1),
        }
    }

    /// Visit every member of the class, in a fixed deterministic order.
    pub fn visit_class<F: FnMut(&Permutation)>(
        &self,
        class: &AvoidanceClass,
        mut f: F,
    ) -> Result<(), OracleError> {
        self.check_cap(class.population, class.n)?;
        for chunk in 0..Self::chunk_count(class.population, class.n) {
            visit_population_chunk(class.population, class.n, chunk, &mut |perm| {
                if perm.avoids_all(&class.patterns) {
                    f(perm);
                }
            });
        }
        Ok(())
    }

    pub fn members(&self, class: &AvoidanceClass) -> Result<Vec<Permutation>, OracleError> {
        let mut out = Vec::new();
        self.visit_class(class, |p| out.push(p.clone()))?;
        Ok(out)
    }

    pub fn count(&self, class: &AvoidanceClass) -> Result<u64, OracleError> {
        let mut c = 0u64;
        self.visit_class(class, |_| c += 1)?;
        Ok(c)
    }

    /// Distribution of the weighted statistics over the class.
    pub fn genfun(&self, class: &AvoidanceClass, weight: Weight) -> Result<MultiPoly, OracleError> {
        let mut poly = MultiPoly::zero();
        self.visit_class(class, |perm| {
            poly.add_term(weight.monomial_exp(&perm.stats()), 1);
        })?;
        Ok(poly)
    }

    /// Same distribution, computed with one rayon task per top-level chunk
    /// and the per-chunk polynomials summed in chunk order.
    pub fn genfun_parallel(
        &self,
        class: &AvoidanceClass,
        weight: Weight,
    ) -> Result<MultiPoly, OracleError> {
        self.check_cap(class.population, class.n)?;
        let chunks: Vec<MultiPoly> = (0..Self::chunk_count(class.population, class.n))
            .into_par_iter()
            .map(|chunk| {
                let mut poly = MultiPoly::zero();
                visit_population_chunk(class.population, class.n, chunk, &mut |perm| {
                    if perm.avoids_all(&class.patterns) {
                        poly.add_term(weight.monomial_exp(&perm.stats()), 1);
                    }
                });
                poly
            })
            .collect();
        let mut total = MultiPoly::zero();
        for c in chunks {
            total = total.add(&c);
        }
        Ok(total)
    }

    /// Fingerprint of a pattern set: the sequence of genfuns for sizes
    /// `0..=n_max`.
    pub fn fingerprint(
        &self,
        population: Population,
        patterns: &[Permutation],
        n_max: usize,
        weight: Weight,
    ) -> Result<Vec<MultiPoly>, OracleError> {
        let mut out = Vec::with_capacity(n_max + 1);
        for n in 0..=n_max {
            if population == Population::FixedPointFree && n % 2 != 0 {
                out.push(MultiPoly::zero());
                continue;
            }
            let class =
                AvoidanceClass { population, n, patterns: patterns.to_vec() };
            out.push(self.genfun(&class, weight)?);
        }
        Ok(out)
    }

    /// Partition pattern sets into classes with identical fingerprints.
    /// Returns lists of indices into `sets`, each list sorted, the lists
    /// ordered by first member.
    pub fn fingerprint_partition(
        &self,
        population: Population,
        sets: &[Vec<Permutation>],
        n_max: usize,
        weight: Weight,
    ) -> Result<Vec<Vec<usize>>, OracleError> {
        let prints: Vec<Vec<MultiPoly>> = sets
            .iter()
            .map(|patterns| self.fingerprint(population, patterns, n_max, weight))
            .collect::<Result<_, _>>()?;
        let mut classes: Vec<Vec<usize>> = Vec::new();
        for (i, print) in prints.iter().enumerate() {
            match classes.iter_mut().find(|c| &prints[c[0]] == print) {
                Some(class) => class.push(i),
                None => classes.push(vec![i]),
            }
        }
        Ok(classes)
    }
}

/// Visit one top-level chunk of a population.
///
/// Chunks partition the population; visiting chunks `0..chunk_count` in order
/// is the canonical serial order.
fn visit_population_chunk<F: FnMut(&Permutation)>(
    population: Population,
    n: usize,
    chunk: usize,
    f: &mut F,
) {
    match population {
        Population::Permutations => visit_permutations_chunk(n, chunk, f),
        Population::Involutions => visit_involutions_chunk(n, chunk, false, f),
        Population::FixedPointFree => visit_involutions_chunk(n, chunk, true, f),
    }
}

fn visit_permutations_chunk<F: FnMut(&Permutation)>(n: usize, chunk: usize, f: &mut F) {
    if n == 0 {
        if chunk == 0 {
            f(&Permutation::empty());
        }
        return;
    }
    // chunk fixes the first entry to chunk + 1
    let mut word = vec![0u8; n];
    let mut used = vec![false; n + 1];
    word[0] = chunk as u8 + 1;
    used[chunk + 1] = true;
    fill(&mut word, &mut used, 1, f);

    fn fill<F: FnMut(&Permutation)>(word: &mut Vec<u8>, used: &mut Vec<bool>, pos: usize, f: &mut F) {
        let n = word.len();
        if pos == n {
            let perm = Permutation::new(word.clone()).expect("constructed word is a permutation");
            f(&perm);
            return;
        }
        for v in 1..=n {
            if !used[v] {
                used[v] = true;
                word[pos] = v as u8;
                fill(word, used, pos + 1, f);
                used[v] = false;
            }
        }
    }
}

/// Involutions are generated by matching the largest free index first:
/// chunk 0 leaves `n` fixed (absent for fixed-point-free), chunk `j >= 1`
/// pairs `n` with the j-th smallest index.
fn visit_involutions_chunk<F: FnMut(&Permutation)>(n: usize, chunk: usize, fpf: bool, f: &mut F) {
    if n == 0 {
        if chunk == 0 {
            f(&Permutation::empty());
        }
        return;
    }
    let mut word = vec![0u8; n];
    let free: Vec<usize> = (1..=n).collect();
    let choices = choices_for(&free, fpf);
    if chunk >= choices.len() {
        return;
    }
    descend(&mut word, free, choices[chunk], fpf, f);

    /// Possible decisions for the largest free index: `None` = fixed point,
    /// `Some(j)` = pair with index `j`.
    fn choices_for(free: &[usize], fpf: bool) -> Vec<Option<usize>> {
        let mut out = Vec::new();
        if !fpf {
            out.push(None);
        }
        for &j in &free[..free.len() - 1] {
            out.push(Some(j));
        }
        out
    }

    fn descend<F: FnMut(&Permutation)>(
        word: &mut Vec<u8>,
        mut free: Vec<usize>,
        choice: Option<usize>,
        fpf: bool,
        f: &mut F,
    ) {
        let top = *free.last().expect("free set nonempty");
        free.pop();
        match choice {
            None => word[top - 1] = top as u8,
            Some(j) => {
                word[top - 1] = j as u8;
                word[j - 1] = top as u8;
                free.retain(|&x| x != j);
            }
        }
        if free.is_empty() {
            let perm = Permutation::new(word.clone()).expect("constructed word is an involution");
            f(&perm);
        } else {
            for choice in choices_for(&free, fpf) {
                descend(word, free.clone(), choice, fpf, f);
            }
        }
        // no cleanup needed: every slot is overwritten before being read again
    }
}

/// Number of involutions of `n` by the telephone recurrence
/// `T(n) = T(n-1) + (n-1) T(n-2)`.
pub fn involution_count(n: usize) -> u64 {
    let mut a = 1u64;
    let mut b = 1u64;
    for k in 2..=n {
        let next = b + (k as u64 - 1) * a;
        a = b;
        b = next;
    }
    if n == 0 {
        1
    } else {
        b
    }
}

/// Number of fixed-point-free involutions: `(2m-1)!!` for even `n = 2m`.
pub fn fpf_involution_count(n: usize) -> u64 {
    if n % 2 == 1 {
        return 0;
    }
    let mut out = 1u64;
    let mut k = 1u64;
    while k < n as u64 {
        out *= k;
        k += 2;
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::perm::perm;
    use crate::qpoly::q_factorial;

    fn class(pop: Population, n: usize, pats: &[&str]) -> AvoidanceClass {
        AvoidanceClass {
            population: pop,
            n,
            patterns: pats.iter().map(|s| perm(s)).collect(),
        }
    }

    #[test]
    fn enumeration_counts() {
        let oracle = Oracle::new();
        let mut factorial = 1u64;
        for n in 0..=7usize {
            if n > 0 {
                factorial *= n as u64;
            }
            assert_eq!(oracle.count(&class(Population::Permutations, n, &[])).unwrap(), factorial);
        }
        for n in 0..=10usize {
            assert_eq!(
                oracle.count(&class(Population::Involutions, n, &[])).unwrap(),
                involution_count(n),
                "involutions of size {n}"
            );
        }
        for m in 0..=5usize {
            assert_eq!(
                oracle.count(&class(Population::FixedPointFree, 2 * m, &[])).unwrap(),
                fpf_involution_count(2 * m)
            );
        }
    }

    #[test]
    fn members_are_distinct_and_valid() {
        let oracle = Oracle::new();
        let mut members = oracle.members(&class(Population::Involutions, 6, &[])).unwrap();
        assert!(members.iter().all(|p| p.is_involution()));
        let len = members.len();
        members.sort();
        members.dedup();
        assert_eq!(members.len(), len);

        let fpf = oracle.members(&class(Population::FixedPointFree, 6, &[])).unwrap();
        assert!(fpf.iter().all(|p| p.is_fixed_point_free_involution()));
    }

    #[test]
    fn caps_are_enforced() {
        let oracle = Oracle::with_caps(Caps { permutations: 4, involutions: 6 });
        assert!(matches!(
            oracle.count(&class(Population::Permutations, 5, &[])),
            Err(OracleError::CapExceeded { .. })
        ));
        assert!(oracle.count(&class(Population::Involutions, 6, &[])).is_ok());
        assert!(matches!(
            oracle.count(&class(Population::FixedPointFree, 3, &[])),
            Err(OracleError::OddFixedPointFree(3))
        ));
    }

    #[test]
    fn small_genfun_values() {
        let oracle = Oracle::new();
        // maj over involutions of size 3 avoiding 321
        let g = oracle.genfun(&class(Population::Involutions, 3, &["321"]), Weight::maj()).unwrap();
        assert_eq!(g.to_string(), "1 + q + q^2");
        // inv over involutions of size 3 avoiding 132
        let g = oracle.genfun(&class(Population::Involutions, 3, &["132"]), Weight::inv()).unwrap();
        assert_eq!(g.to_string(), "1 + q + q^3");
        // coinv over involutions of size 3 avoiding 123
        let g = oracle.genfun(&class(Population::Involutions, 3, &["123"]), Weight::coinv()).unwrap();
        assert_eq!(g.to_string(), "1 + 2*q^2");
        // inv over involutions of size 3 avoiding 231
        let g = oracle.genfun(&class(Population::Involutions, 3, &["231"]), Weight::inv()).unwrap();
        assert_eq!(g.to_string(), "1 + 2*q + q^3");
    }

    #[test]
    fn maj_over_all_permutations_is_the_q_factorial() {
        let oracle = Oracle::new();
        for n in 0..=8usize {
            let g = oracle.genfun(&class(Population::Permutations, n, &[]), Weight::maj()).unwrap();
            assert_eq!(g, q_factorial(n as u32), "size {n}");
            // inv is equidistributed with maj
            let h = oracle.genfun(&class(Population::Permutations, n, &[]), Weight::inv()).unwrap();
            assert_eq!(h, g);
        }
    }

    #[test]
    fn parallel_genfun_is_bit_identical() {
        let oracle = Oracle::new();
        for (pop, n) in [
            (Population::Permutations, 6),
            (Population::Involutions, 9),
            (Population::FixedPointFree, 8),
        ] {
            for pats in [vec![], vec!["321"], vec!["132", "213"]] {
                let c = class(pop, n, &pats);
                let serial = oracle.genfun(&c, Weight::joint()).unwrap();
                let parallel = oracle.genfun_parallel(&c, Weight::joint()).unwrap();
                assert_eq!(serial, parallel);
            }
        }
    }

    #[test]
    fn fingerprints_partition_the_length_3_patterns() {
        let oracle = Oracle::new();
        let sets: Vec<Vec<Permutation>> = ["123", "132", "213", "231", "312", "321"]
            .iter()
            .map(|s| vec![perm(s)])
            .collect();
        let classes = oracle
            .fingerprint_partition(Population::Involutions, &sets, 7, Weight::inv())
            .unwrap();
        // inv-distribution classes: {123}, {132, 213}, {231, 312}, {321}
        assert_eq!(classes, vec![vec![0], vec![1, 2], vec![3, 4], vec![5]]);
    }
}
