//! Binary words, their descent statistics, the matching core, and the
//! word encoding of 321-avoiding involutions.
//!
//! Reading `1` as an opener and `0` as a closer, repeatedly matching
//! adjacent pairs leaves the unmatched letters in the shape `0...01...1`;
//! the matched letters form the *core* of the word.  An involution avoiding
//! `321` is encoded by writing `1` at the smaller entry of each two-cycle,
//! `0` at the larger, and filling the fixed-point slots with zeros then
//! ones; the two-cycles are recovered by pairing the i-th core one with the
//! i-th core zero.

use std::fmt;
use std::str::FromStr;

use serde::Serialize;

use crate::perm::{PermError, Permutation};

#[derive(Clone, PartialEq, Eq, Hash, Serialize)]
pub struct BinaryWord {
    letters: Vec<u8>,
}

#[derive(Debug, thiserror::Error, PartialEq, Eq)]
pub enum WordError {
    #[error("cannot parse `{0}` as a binary word")]
    Parse(String),
    #[error("word has {ones} ones; cannot encode with target count {target}")]
    OnesCount { ones: usize, target: usize },
    #[error(transparent)]
    Perm(#[from] PermError),
}

impl BinaryWord {
    pub fn new(letters: Vec<u8>) -> Result<Self, WordError> {
        if letters.iter().any(|&b| b > 1) {
            return Err(WordError::Parse(format!("{letters:?}")));
        }
        Ok(BinaryWord { letters })
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    pub fn letters(&self) -> &[u8] {
        &self.letters
    }

    pub fn ones(&self) -> usize {
        self.letters.iter().filter(|&&b| b == 1).count()
    }

    /// Descent positions: `i` with `w_i = 1` and `w_{i+1} = 0` (1-based).
    pub fn des_set(&self) -> Vec<usize> {
        (1..self.len())
            .filter(|&i| self.letters[i - 1] > self.letters[i])
            .collect()
    }

    pub fn des(&self) -> usize {
        self.des_set().len()
    }

    pub fn maj(&self) -> usize {
        self.des_set().iter().sum()
    }

    /// Positions (1-based, increasing) of the matched letters: pair each `0`
    /// with the nearest unmatched `1` to its left, parenthesis style.
    pub fn core_positions(&self) -> Vec<usize> {
        let mut stack = Vec::new();
        let mut matched = vec![false; self.len()];
        for (idx, &b) in self.letters.iter().enumerate() {
            if b == 1 {
                stack.push(idx);
            } else if let Some(open) = stack.pop() {
                matched[open] = true;
                matched[idx] = true;
            }
        }
        (1..=self.len()).filter(|&i| matched[i - 1]).collect()
    }

    /// Same set computed by repeatedly deleting adjacent `10` factors; used
    /// to check that the matching is independent of evaluation order.
    #[cfg(test)]
    fn core_positions_naive(&self) -> Vec<usize> {
        let mut alive: Vec<usize> = (1..=self.len()).collect();
        loop {
            let mut removed = None;
            for k in 0..alive.len().saturating_sub(1) {
                if self.letters[alive[k] - 1] == 1 && self.letters[alive[k + 1] - 1] == 0 {
                    removed = Some(k);
                    break;
                }
            }
            match removed {
                Some(k) => {
                    alive.drain(k..=k + 1);
                }
                None => break,
            }
        }
        (1..=self.len()).filter(|i| !alive.contains(i)).collect()
    }
}

impl fmt::Display for BinaryWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for &b in &self.letters {
            write!(f, "{b}")?;
        }
        Ok(())
    }
}

impl fmt::Debug for BinaryWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl FromStr for BinaryWord {
    type Err = WordError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let letters: Result<Vec<u8>, _> = s
            .chars()
            .map(|c| match c {
                '0' => Ok(0),
                '1' => Ok(1),
                _ => Err(WordError::Parse(s.to_string())),
            })
            .collect();
        BinaryWord::new(letters?)
    }
}

/// Encode a 321-avoiding involution as a word with `k` ones: `1` at the
/// smaller entry of each two-cycle, `0` at the larger, and the fixed-point
/// slots filled (left to right) with zeros followed by `k - cyc` ones.
/// Requires `cyc <= k <= n - cyc`, which always holds for
/// `k = ceil(n / 2)` (see [`phi_321`]).
pub fn phi_321_with_ones(iota: &Permutation, k: usize) -> Result<BinaryWord, WordError> {
    if !iota.is_involution() || iota.contains(&crate::perm::perm("321")) {
        return Err(WordError::Perm(PermError::Precondition(format!(
            "{iota} is not a 321-avoiding involution"
        ))));
    }
    let n = iota.n();
    let cycles = iota.two_cycles().map_err(PermError::from)?;
    let m = cycles.cycles.len();
    if k < m || k + m > n {
        return Err(WordError::OnesCount { ones: m, target: k });
    }
    let mut letters = vec![0u8; n];
    for &(s, t) in &cycles.cycles {
        letters[s - 1] = 1;
        letters[t - 1] = 0;
    }
    let trailing_ones = k - m;
    let fixed = &cycles.fixed_points;
    for &p in &fixed[fixed.len() - trailing_ones..] {
        letters[p - 1] = 1;
    }
    Ok(BinaryWord { letters })
}

/// The standard encoding, with `ceil(n / 2)` ones in total.
pub fn phi_321(iota: &Permutation) -> Result<BinaryWord, WordError> {
    let k = (iota.n() + 1) / 2;
    phi_321_with_ones(iota, k)
}

/// Decode a binary word: pair the i-th core one with the i-th core zero to
/// form the two-cycles, and leave the remaining positions fixed.
pub fn phi_321_inverse(word: &BinaryWord) -> Result<Permutation, WordError> {
    let n = word.len();
    let core = word.core_positions();
    let mut w = vec![0usize; n];
    for i in 1..=n {
        w[i - 1] = i;
    }
    let ones: Vec<usize> = core.iter().copied().filter(|&p| word.letters[p - 1] == 1).collect();
    let zeros: Vec<usize> = core.iter().copied().filter(|&p| word.letters[p - 1] == 0).collect();
    debug_assert_eq!(ones.len(), zeros.len());
    for (&s, &t) in ones.iter().zip(&zeros) {
        if s >= t {
            return Err(WordError::Parse(format!("core pairing failed for {word}")));
        }
        w[s - 1] = t;
        w[t - 1] = s;
    }
    Ok(Permutation::from_slice(&w)?)
}
