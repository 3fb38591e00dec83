//! Structure-preserving maps between pattern classes.
//!
//! This module collects the combinatorial machinery behind the equalities in
//! the formula registry:
//!
//! * descent-set encodings of involutions avoiding `213` or `132`, and the
//!   complementation that links the two families of subsets;
//! * the cycle-removal decomposition of involutions avoiding `123`, whose
//!   removal sequences are exactly the `A`/`B` families of bounded sequences;
//! * the `*` and "star-one" operations on `213`-avoiding permutations and the
//!   resulting bijection from `132`-avoiders to `213`-avoiders that turns
//!   ascents into descents.

use serde::Serialize;

use crate::perm::{inflate, Permutation, PermError};
use crate::syt::{involution_insert_two_cycle, involution_remove_last_cycle};

// ---------------------------------------------------------------------------
// descent subsets
// ---------------------------------------------------------------------------

/// `A = {a_1 < ... < a_l} ⊆ [n-1]` with `a_i + a_{l+1-i} >= n` for all `i`:
/// exactly the descent sets of `213`-avoiding involutions of size `n`.
pub fn is_descent_set_213(a: &[usize], n: usize) -> bool {
    is_subset_of_n_minus_1(a, n)
        && (0..a.len()).all(|i| a[i] + a[a.len() - 1 - i] >= n)
}

/// `A = {a_1 < ... < a_l} ⊆ [n-1]` with `a_i + a_{l+1-i} <= n` for all `i`:
/// exactly the descent sets of `132`-avoiding involutions of size `n`.
pub fn is_descent_set_132(a: &[usize], n: usize) -> bool {
    is_subset_of_n_minus_1(a, n)
        && (0..a.len()).all(|i| a[i] + a[a.len() - 1 - i] <= n)
}

fn is_subset_of_n_minus_1(a: &[usize], n: usize) -> bool {
    a.windows(2).all(|w| w[0] < w[1]) && a.iter().all(|&x| x >= 1 && n >= 1 && x <= n - 1)
}

/// Complement within `[n-1]`, which carries large-sum subsets to small-sum
/// subsets and vice versa.
pub fn complement_set(a: &[usize], n: usize) -> Vec<usize> {
    (1..n).filter(|x| !a.contains(x)).collect()
}

/// Insert the two-cycle `(s, t)` into an involution of size `n - 2`, where
/// the old indices and values are relabelled onto `[n] \ {s, t}` in order.
pub fn insert_cycle(iota: &Permutation, s: usize, t: usize) -> Result<Permutation, PermError> {
    if !iota.is_involution() {
        return Err(PermError::NotAnInvolution);
    }
    let n = iota.n() + 2;
    if s == 0 || t > n || s >= t {
        return Err(PermError::Precondition(format!("cannot insert cycle ({s}, {t})")));
    }
    let rest: Vec<usize> = (1..=n).filter(|&k| k != s && k != t).collect();
    let mut word = vec![0usize; n];
    for old in 1..=iota.n() {
        word[rest[old - 1] - 1] = rest[iota.get(old) - 1];
    }
    word[s - 1] = t;
    word[t - 1] = s;
    Permutation::from_slice(&word)
}

/// Descent-set encoding of a `213`-avoiding involution.
pub fn varphi_213(iota: &Permutation) -> Result<Vec<usize>, PermError> {
    if !iota.is_involution() || iota.contains(&crate::perm::perm("213")) {
        return Err(PermError::Precondition(format!(
            "{iota} is not a 213-avoiding involution"
        )));
    }
    Ok(iota.stats().des_set)
}

/// Rebuild the `213`-avoiding involution of size `n` with the given descent
/// set: repeatedly split off the cycle `(min A, n)`.
pub fn varphi_213_inverse(a: &[usize], n: usize) -> Result<Permutation, PermError> {
    if !is_descent_set_213(a, n) {
        return Err(PermError::Precondition(format!("{a:?} is not realizable at size {n}")));
    }
    if a.is_empty() {
        return Ok(Permutation::identity(n));
    }
    let lo = a[0];
    let inner: Vec<usize> = if a.contains(&(n - 1)) {
        a.iter().copied().filter(|&x| x != lo && x != n - 1).map(|x| x - 1).collect()
    } else {
        a.iter().map(|&x| x - 1).collect()
    };
    let smaller = varphi_213_inverse(&inner, n - 2)?;
    insert_cycle(&smaller, lo, n)
}

/// Descent-set encoding of a `132`-avoiding involution.
pub fn psi_132(iota: &Permutation) -> Result<Vec<usize>, PermError> {
    if !iota.is_involution() || iota.contains(&crate::perm::perm("132")) {
        return Err(PermError::Precondition(format!(
            "{iota} is not a 132-avoiding involution"
        )));
    }
    Ok(iota.stats().des_set)
}

/// Rebuild the `132`-avoiding involution of size `n` with the given descent
/// set: repeatedly split off the cycle `(1, max A + 1)`.
pub fn psi_132_inverse(a: &[usize], n: usize) -> Result<Permutation, PermError> {
    if !is_descent_set_132(a, n) {
        return Err(PermError::Precondition(format!("{a:?} is not realizable at size {n}")));
    }
    if a.is_empty() {
        return Ok(Permutation::identity(n));
    }
    let hi = *a.last().unwrap();
    let inner: Vec<usize> = if a.contains(&1) {
        a.iter().copied().filter(|&x| x != 1 && x != hi).map(|x| x - 1).collect()
    } else {
        a.iter().map(|&x| x - 1).collect()
    };
    let smaller = psi_132_inverse(&inner, n - 2)?;
    insert_cycle(&smaller, 1, hi + 1)
}

/// The composite `213`-avoiding to `132`-avoiding map: encode by descents,
/// complement the subset, decode.  It sends descent set `A` to `[n-1] \ A`,
/// so the major indices of an involution and its image sum to `C(n, 2)`.
pub fn transfer_213_to_132(iota: &Permutation) -> Result<Permutation, PermError> {
    let a = varphi_213(iota)?;
    psi_132_inverse(&complement_set(&a, iota.n()), iota.n())
}

// ---------------------------------------------------------------------------
// inversions of 321-avoiding involutions
// ---------------------------------------------------------------------------

/// For a `321`-avoiding involution the inversions are exactly the pairs
/// crossing a two-cycle, so `inv` is the total gap of the cycles.
pub fn inv_from_two_cycles(iota: &Permutation) -> Result<usize, PermError> {
    if iota.contains(&crate::perm::perm("321")) {
        return Err(PermError::Precondition(format!("{iota} contains 321")));
    }
    let cycles = iota.two_cycles()?;
    Ok(cycles.cycles.iter().map(|&(s, t)| t - s).sum())
}

// ---------------------------------------------------------------------------
// cycle-removal decomposition of 123-avoiding involutions
// ---------------------------------------------------------------------------

/// Which bounded-sequence family a removal sequence lives in.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Serialize)]
pub enum SeqFamily {
    A,
    B,
}

/// Removal record of a `123`-avoiding involution: peeling the cycle ending at
/// the largest index until the involution is decreasing (family `B`, terminal
/// of size `m - 1`) or decreasing-then-fixed-top (family `A`, terminal of
/// size `m`).  The recorded entries, smallest involution first, form a
/// sequence of the family `A_{m,l}` or `B_{m,l}`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CycleRemovalSeq {
    pub family: SeqFamily,
    pub m: usize,
    pub entries: Vec<usize>,
}

impl CycleRemovalSeq {
    /// Size of the involution this sequence rebuilds to.
    pub fn target_size(&self) -> usize {
        let tau = match self.family {
            SeqFamily::A => self.m,
            SeqFamily::B => self.m - 1,
        };
        tau + 2 * self.entries.len()
    }
}

pub fn decompose_123(iota: &Permutation) -> Result<CycleRemovalSeq, PermError> {
    if !iota.is_involution() || iota.contains(&crate::perm::perm("123")) {
        return Err(PermError::Precondition(format!(
            "{iota} is not a 123-avoiding involution"
        )));
    }
    let mut cur = iota.clone();
    let mut entries = Vec::new();
    loop {
        let n = cur.n();
        if cur.stats().asc_set.is_empty() {
            entries.reverse();
            return Ok(CycleRemovalSeq { family: SeqFamily::B, m: n + 1, entries });
        }
        if cur.get(n) == n {
            // avoiding 123 with a fixed top forces a decreasing front
            debug_assert!(cur.stats().asc_set == vec![n - 1]);
            entries.reverse();
            return Ok(CycleRemovalSeq { family: SeqFamily::A, m: n, entries });
        }
        let (smaller, s) = involution_remove_last_cycle(&cur)?;
        entries.push(s);
        cur = smaller;
    }
}

pub fn rebuild_123(seq: &CycleRemovalSeq) -> Result<Permutation, PermError> {
    let mut cur = match seq.family {
        SeqFamily::A => {
            if seq.m == 0 {
                return Err(PermError::Precondition("family A needs m >= 1".into()));
            }
            let mut word: Vec<usize> = (1..seq.m).rev().collect();
            word.push(seq.m);
            Permutation::from_slice(&word)?
        }
        SeqFamily::B => {
            if seq.m == 0 {
                return Err(PermError::Precondition("family B needs m >= 1".into()));
            }
            Permutation::from_slice(&(1..seq.m).rev().collect::<Vec<_>>())?
        }
    };
    for &a in &seq.entries {
        cur = involution_insert_two_cycle(&cur, a, cur.n() + 2)?;
    }
    Ok(cur)
}

/// Membership in the bounded-sequence family `A_{m,l}` (every entry at least
/// 1) or `B_{m,l}` (first entry at least 2): the first entry is at most `m`,
/// and the bound for the rest is `m + 1` after an entry equal to 1, or the
/// entry itself otherwise.
pub fn family_contains(family: SeqFamily, m: usize, entries: &[usize]) -> bool {
    match family {
        SeqFamily::A => match entries.split_first() {
            None => m >= 1,
            Some((&a, rest)) => {
                a >= 1
                    && a <= m
                    && family_contains(SeqFamily::A, if a == 1 { m + 1 } else { a }, rest)
            }
        },
        SeqFamily::B => match entries.split_first() {
            None => m >= 1,
            Some((&a, rest)) => a >= 2 && a <= m && family_contains(SeqFamily::A, a, rest),
        },
    }
}

/// All sequences of length `l` in the family with first bound `m`.
pub fn enumerate_family(family: SeqFamily, m: usize, l: usize) -> Vec<Vec<usize>> {
    if l == 0 {
        return vec![Vec::new()];
    }
    let lo = match family {
        SeqFamily::A => 1,
        SeqFamily::B => 2,
    };
    let mut out = Vec::new();
    for a in lo..=m {
        let next_m = if a == 1 { m + 1 } else { a };
        for mut rest in enumerate_family(SeqFamily::A, next_m, l - 1) {
            rest.insert(0, a);
            out.push(rest);
        }
    }
    out
}

// ---------------------------------------------------------------------------
// the * and star-one operations and the 132 -> 213 bijection
// ---------------------------------------------------------------------------

/// Merge two permutations: place `x` above-left of `y`, then straighten the
/// union of the right-to-left minima of `x` and the left-to-right maxima of
/// `y` into an increasing run (same positions, values redistributed in
/// increasing order).
pub fn star_product(x: &Permutation, y: &Permutation) -> Permutation {
    let k = x.n();
    let l = y.n();
    let mut word: Vec<usize> = x.word().iter().map(|&v| v as usize + l).collect();
    word.extend(y.word().iter().map(|&v| v as usize));
    let mut marked: Vec<usize> = x.landmarks().rl_minima.iter().map(|&(p, _)| p).collect();
    marked.extend(y.landmarks().lr_maxima.iter().map(|&(p, _)| p + k));
    let mut vals: Vec<usize> = marked.iter().map(|&p| word[p - 1]).collect();
    vals.sort_unstable();
    for (&p, v) in marked.iter().zip(vals) {
        word[p - 1] = v;
    }
    Permutation::from_slice(&word).expect("straightening keeps a permutation")
}

/// Smallest `k` with `1 <= k < n` such that the first `k` entries are
/// exactly the `k` largest values.
fn top_prefix_split(sigma: &Permutation) -> Option<usize> {
    let n = sigma.n();
    let mut lowest = usize::MAX;
    for k in 1..n {
        lowest = lowest.min(sigma.get(k));
        if lowest == n - k + 1 {
            return Some(k);
        }
    }
    None
}

fn block_split(sigma: &Permutation, k: usize) -> (Permutation, Permutation) {
    let n = sigma.n();
    let left: Vec<usize> = (1..=k).collect();
    let right: Vec<usize> = (k + 1..=n).collect();
    (sigma.pattern_at(&left), sigma.pattern_at(&right))
}

/// Extend a `213`-avoiding permutation by one point, adding a final descent:
/// the inverse direction of [`split_star1`].
pub fn star1_extend(sigma: &Permutation) -> Result<Permutation, PermError> {
    let n = sigma.n();
    if n == 0 {
        return Ok(crate::perm::perm("1"));
    }
    if n == 1 {
        return Ok(crate::perm::perm("21"));
    }
    if sigma.get(1) == 1 {
        let positions: Vec<usize> = (2..=n).collect();
        let z = star1_extend(&sigma.pattern_at(&positions))?;
        return inflate(&crate::perm::perm("12"), &[Permutation::identity(1), z]);
    }
    let k = top_prefix_split(sigma).ok_or_else(|| {
        PermError::Precondition(format!("{sigma} is not decomposable; does it avoid 213?"))
    })?;
    let (x, y) = block_split(sigma, k);
    let xb = star1_extend(&x)?;
    let yb = star1_extend(&y)?;
    // as in `star_product`, except the final point of the left factor is
    // withdrawn from the increasing run before the values are redistributed,
    // and then deleted
    let kk = xb.n();
    let l = yb.n();
    let mut word: Vec<usize> = xb.word().iter().map(|&v| v as usize + l).collect();
    word.extend(yb.word().iter().map(|&v| v as usize));
    let mut marked: Vec<usize> = xb
        .landmarks()
        .rl_minima
        .iter()
        .map(|&(p, _)| p)
        .filter(|&p| p != kk)
        .collect();
    marked.extend(yb.landmarks().lr_maxima.iter().map(|&(p, _)| p + kk));
    let mut vals: Vec<usize> = marked.iter().map(|&p| word[p - 1]).collect();
    vals.sort_unstable();
    for (&p, v) in marked.iter().zip(vals) {
        word[p - 1] = v;
    }
    let merged = Permutation::from_slice(&word)?;
    Ok(merged.remove_position(kk))
}

/// One step of the right-to-left maxima profile: position and value of the
/// maximum, the index gap `u` to the previous maximum, the value gap `v` to
/// the next, and the count `p` of points weakly below-left of it.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct RlMaxStep {
    pub pos: usize,
    pub val: usize,
    pub u: usize,
    pub v: usize,
    pub p: usize,
}

pub fn rl_max_profile(sigma: &Permutation) -> Vec<RlMaxStep> {
    let maxima = sigma.landmarks().rl_maxima;
    let l = maxima.len();
    (0..l)
        .map(|j| {
            let (pos, val) = maxima[j];
            let prev_pos = if j == 0 { 0 } else { maxima[j - 1].0 };
            let next_val = if j + 1 == l { 0 } else { maxima[j + 1].1 };
            let p = (1..=pos).filter(|&i| sigma.get(i) <= val).count();
            RlMaxStep { pos, val, u: pos - prev_pos, v: val - next_val, p }
        })
        .collect()
}

/// Undo the straightening at the `j`-th right-to-left maximum: the `p_j`
/// below-left points regain a two-block shape (`k = p_j - u_j + 1` top
/// values first) and the permutation splits after the `k`-th of them.
fn split_at(sigma: &Permutation, step: &RlMaxStep) -> (Permutation, Permutation) {
    let k = step.p - step.u + 1;
    let pts: Vec<usize> = (1..=step.pos).filter(|&i| sigma.get(i) <= step.val).collect();
    let vals: Vec<usize> = pts.iter().map(|&i| sigma.get(i)).collect();
    debug_assert!(vals.windows(2).all(|w| w[0] < w[1]), "below-left points increase");
    let mut word: Vec<usize> = sigma.word().iter().map(|&v| v as usize).collect();
    for (idx, &pos) in pts.iter().enumerate() {
        word[pos - 1] = if idx < k { vals[step.p - k + idx] } else { vals[idx - k] };
    }
    let rearranged = Permutation::from_slice(&word).expect("rearranged word is a permutation");
    block_split(&rearranged, pts[k - 1])
}

/// Factor `sigma = x * y` at the smallest right-to-left maximum with
/// `u + v >= p + 2`, if one exists.
pub fn split_star(sigma: &Permutation) -> Option<(Permutation, Permutation)> {
    let profile = rl_max_profile(sigma);
    let step = profile.iter().find(|s| s.u + s.v >= s.p + 2)?;
    Some(split_at(sigma, step))
}

/// Remove the final-descent extension: find `z` with `star1_extend(z) =
/// sigma`.  Requires `sigma` to avoid `213` and not factor under `*`.
pub fn split_star1(sigma: &Permutation) -> Result<Permutation, PermError> {
    let n = sigma.n();
    if n < 2 {
        return Err(PermError::Precondition("need at least two points".into()));
    }
    let profile = rl_max_profile(sigma);
    if profile.iter().any(|s| s.u + s.v >= s.p + 2) {
        return Err(PermError::Precondition(format!("{sigma} factors under *")));
    }
    let l = profile.len();
    // an interior maximum with u + v = p + 1 marks a hidden two-block split:
    // re-insert the removed point just below-left of the leftmost point that
    // is strictly between the neighbouring maxima, factor there, and recurse
    if let Some(step) =
        profile[1..l.saturating_sub(1)].iter().find(|s| s.u + s.v == s.p + 1).copied()
    {
        let j = profile.iter().position(|s| s.pos == step.pos).unwrap();
        let prev_pos = profile[j - 1].pos;
        let next_val = profile[j + 1].val;
        let (a, b) = (prev_pos + 1..=step.pos)
            .map(|i| (i, sigma.get(i)))
            .find(|&(i, v)| v > next_val && v <= step.val && i <= step.pos)
            .expect("the maximum itself qualifies");
        let enlarged = sigma.insert_point(a, b);
        let bigger_profile = rl_max_profile(&enlarged);
        let bigger_step = bigger_profile
            .iter()
            .find(|s| s.pos == step.pos + 1)
            .expect("the tracked maximum survives the insertion");
        debug_assert_eq!(bigger_step.u + bigger_step.v, bigger_step.p + 2);
        let (xb, yb) = split_at(&enlarged, bigger_step);
        let x = split_star1(&xb)?;
        let y = split_star1(&yb)?;
        return inflate(&crate::perm::perm("21"), &[x, y]);
    }
    // no interior equality: the permutation is increasing-then-swap, or
    // starts with a fixed smallest point
    let swap_shape: Vec<usize> = (1..=n - 2).chain([n, n - 1]).collect();
    if sigma.word().iter().map(|&v| v as usize).eq(swap_shape) {
        return Ok(Permutation::identity(n - 1));
    }
    if sigma.get(1) == 1 {
        let positions: Vec<usize> = (2..=n).collect();
        let z = split_star1(&sigma.pattern_at(&positions))?;
        return inflate(&crate::perm::perm("12"), &[Permutation::identity(1), z]);
    }
    Err(PermError::Precondition(format!("{sigma} has no final-descent factorization")))
}

/// The ascent-to-descent bijection from `132`-avoiders to `213`-avoiders.
pub fn theta(sigma: &Permutation) -> Result<Permutation, PermError> {
    if sigma.contains(&crate::perm::perm("132")) {
        return Err(PermError::Precondition(format!("{sigma} contains 132")));
    }
    theta_rec(sigma)
}

fn theta_rec(sigma: &Permutation) -> Result<Permutation, PermError> {
    let n = sigma.n();
    if n <= 1 {
        return Ok(sigma.clone());
    }
    if sigma.get(n) == n {
        let positions: Vec<usize> = (1..n).collect();
        return star1_extend(&theta_rec(&sigma.pattern_at(&positions))?);
    }
    let k = top_prefix_split(sigma)
        .ok_or_else(|| PermError::Precondition(format!("{sigma} is not decomposable")))?;
    let (alpha, beta) = block_split(sigma, k);
    Ok(star_product(&theta_rec(&alpha)?, &theta_rec(&beta)?))
}

pub fn theta_inverse(sigma: &Permutation) -> Result<Permutation, PermError> {
    if sigma.contains(&crate::perm::perm("213")) {
        return Err(PermError::Precondition(format!("{sigma} contains 213")));
    }
    theta_inverse_rec(sigma)
}

fn theta_inverse_rec(sigma: &Permutation) -> Result<Permutation, PermError> {
    let n = sigma.n();
    if n <= 1 {
        return Ok(sigma.clone());
    }
    if let Some((x, y)) = split_star(sigma) {
        return inflate(
            &crate::perm::perm("21"),
            &[theta_inverse_rec(&x)?, theta_inverse_rec(&y)?],
        );
    }
    let z = split_star1(sigma)?;
    Ok(theta_inverse_rec(&z)?.direct_sum(&Permutation::identity(1)))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::oracle::{AvoidanceClass, Oracle, Population};
    use crate::perm::perm;
    use crate::qpoly::{Exp, MultiPoly};
    use std::collections::{BTreeMap, BTreeSet};

    fn subsets(n: usize) -> impl Iterator<Item = Vec<usize>> {
        (0..(1u32 << n.saturating_sub(1)))
            .map(move |bits| (1..n).filter(move |i| (bits >> (i - 1)) & 1 == 1).collect())
    }

    #[test]
    fn descent_encodings_are_bijections() {
        let oracle = Oracle::new();
        for n in 0..=8usize {
            for (pattern, check, inverse) in [
                (
                    "213",
                    is_descent_set_213 as fn(&[usize], usize) -> bool,
                    varphi_213_inverse as fn(&[usize], usize) -> Result<Permutation, PermError>,
                ),
                ("132", is_descent_set_132, psi_132_inverse),
            ] {
                let class = AvoidanceClass {
                    population: Population::Involutions,
                    n,
                    patterns: vec![perm(pattern)],
                };
                let mut seen = BTreeSet::new();
                oracle
                    .visit_class(&class, |iota| {
                        let a = iota.stats().des_set;
                        assert!(check(&a, n), "{iota} has unexpected descents {a:?}");
                        assert_eq!(&inverse(&a, n).unwrap(), iota, "decode failed for {a:?}");
                        assert!(seen.insert(a), "descent sets repeat within the class");
                    })
                    .unwrap();
                let valid = subsets(n).filter(|a| check(a, n)).count();
                assert_eq!(seen.len(), valid, "pattern {pattern}, n = {n}");
            }
        }
    }

    #[test]
    fn transfer_example_chain() {
        let iota = perm("798456132");
        let a = varphi_213(&iota).unwrap();
        assert_eq!(a, vec![2, 3, 6, 8]);
        assert_eq!(complement_set(&a, 9), vec![1, 4, 5, 7]);
        assert_eq!(transfer_213_to_132(&iota).unwrap(), perm("867952314"));
    }

    #[test]
    fn transfer_complements_the_major_index() {
        let oracle = Oracle::new();
        for n in 0..=9usize {
            let class = AvoidanceClass {
                population: Population::Involutions,
                n,
                patterns: vec![perm("213")],
            };
            oracle
                .visit_class(&class, |iota| {
                    let image = transfer_213_to_132(&iota).unwrap();
                    assert!(image.is_involution() && image.avoids(&perm("132")));
                    assert_eq!(
                        iota.stats().maj + image.stats().maj,
                        (n * n.saturating_sub(1) / 2) as u64,
                        "{iota} -> {image}"
                    );
                })
                .unwrap();
        }
    }

    #[test]
    fn cycle_gaps_count_inversions() {
        let oracle = Oracle::new();
        for n in 0..=8usize {
            let class = AvoidanceClass {
                population: Population::Involutions,
                n,
                patterns: vec![perm("321")],
            };
            oracle
                .visit_class(&class, |iota| {
                    assert_eq!(inv_from_two_cycles(iota).unwrap() as u64, iota.stats().inv, "{iota}");
                })
                .unwrap();
        }
    }

    #[test]
    fn cycle_removal_round_trips_and_classifies() {
        let oracle = Oracle::new();
        for n in 0..=9usize {
            let mut buckets: BTreeMap<(SeqFamily, usize, usize), usize> = BTreeMap::new();
            let mut total = 0usize;
            let class = AvoidanceClass {
                population: Population::Involutions,
                n,
                patterns: vec![perm("123")],
            };
            oracle
                .visit_class(&class, |iota| {
                    let seq = decompose_123(iota).unwrap();
                    assert!(
                        family_contains(seq.family, seq.m, &seq.entries),
                        "{iota} gave out-of-family {seq:?}"
                    );
                    assert_eq!(seq.target_size(), n);
                    assert_eq!(&rebuild_123(&seq).unwrap(), iota);
                    let base = match seq.family {
                        SeqFamily::A => seq.m - 1,
                        SeqFamily::B => 0,
                    };
                    let shift: usize = seq.entries.iter().map(|&a| 2 * (a - 1)).sum();
                    assert_eq!(iota.stats().coinv, (base + shift) as u64, "{iota}");
                    *buckets.entry((seq.family, seq.m, seq.entries.len())).or_default() += 1;
                    total += 1;
                })
                .unwrap();
            for (&(family, m, l), &count) in &buckets {
                let all = enumerate_family(family, m, l);
                assert_eq!(all.len(), count, "family {family:?} m={m} l={l}");
                assert!(all.iter().all(|s| family_contains(family, m, s)));
            }
            let bucket_sum: usize = buckets.values().sum();
            assert_eq!(bucket_sum, total);
        }
    }

    #[test]
    fn family_weights_match_polynomials() {
        for m in 1..=6usize {
            for l in 0..=4usize {
                for (family, poly) in [
                    (SeqFamily::A, crate::formulas::seq_a(m, l)),
                    (SeqFamily::B, crate::formulas::seq_b(m, l)),
                ] {
                    let mut sum = MultiPoly::zero();
                    for s in enumerate_family(family, m, l) {
                        let w: usize = s.iter().map(|&a| a - 1).sum();
                        sum = sum.add(&MultiPoly::monomial(Exp::new(0, w as u32, 0), 1));
                    }
                    if family == SeqFamily::B && m == 1 && l == 0 {
                        // the table starts this corner at zero; the empty
                        // sequence is still the record of the empty involution
                        continue;
                    }
                    assert_eq!(sum, poly, "family {family:?} m={m} l={l}");
                }
            }
        }
    }

    #[test]
    fn star_product_example() {
        assert_eq!(star_product(&perm("4231"), &perm("132")), perm("7561342"));
    }

    #[test]
    fn star1_examples() {
        assert_eq!(star1_extend(&perm("3421")).unwrap(), perm("35421"));
        assert_eq!(star1_extend(&perm("231")).unwrap(), perm("2431"));
        assert_eq!(split_star1(&perm("35421")).unwrap(), perm("3421"));
        assert_eq!(split_star(&perm("7561342")), Some((perm("21"), perm("51342"))));
    }

    #[test]
    fn star1_round_trips_and_adds_a_descent() {
        let oracle = Oracle::new();
        for n in 1..=7usize {
            let class = AvoidanceClass {
                population: Population::Permutations,
                n,
                patterns: vec![perm("213")],
            };
            oracle
                .visit_class(&class, |sigma| {
                    let bigger = star1_extend(sigma).unwrap();
                    assert!(bigger.avoids(&perm("213")), "{sigma} -> {bigger}");
                    let mut want = sigma.stats().des_set;
                    want.push(n);
                    assert_eq!(bigger.stats().des_set, want, "{sigma} -> {bigger}");
                    assert_eq!(&split_star1(&bigger).unwrap(), sigma);
                })
                .unwrap();
        }
    }

    #[test]
    fn theta_examples() {
        assert_eq!(theta(&perm("41235")).unwrap(), perm("35421"));
        assert_eq!(theta(&perm("6745213")).unwrap(), perm("7561342"));
    }

    #[test]
    fn theta_is_an_ascent_to_descent_bijection() {
        let oracle = Oracle::new();
        for n in 0..=7usize {
            let class = AvoidanceClass {
                population: Population::Permutations,
                n,
                patterns: vec![perm("132")],
            };
            let mut images = BTreeSet::new();
            let mut count = 0usize;
            oracle
                .visit_class(&class, |sigma| {
                    let image = theta(sigma).unwrap();
                    assert!(image.avoids(&perm("213")), "{sigma} -> {image}");
                    assert_eq!(sigma.stats().asc_set, image.stats().des_set, "{sigma}");
                    assert_eq!(&theta_inverse(&image).unwrap(), sigma);
                    // commutes with inversion, hence restricts to involutions
                    assert_eq!(theta(&sigma.inverse()).unwrap(), image.inverse(), "{sigma}");
                    if sigma.is_involution() {
                        assert!(image.is_involution());
                    }
                    assert!(images.insert(image));
                    count += 1;
                })
                .unwrap();
            assert_eq!(images.len(), count);
        }
    }
}
