//! Permutations in one-line notation with the classical statistics,
//! pattern containment, the dihedral symmetries of the permutation diagram,
//! and inflation / block decomposition.
//!
//! Values are 1-based throughout: a permutation of size `n` is a word over
//! `1..=n`.  Sizes up to 64 are supported, which is far beyond anything the
//! exhaustive enumerations in this crate can reach.

use std::fmt;
use std::str::FromStr;

use serde::Serialize;

pub const MAX_N: usize = 64;

#[derive(Debug, thiserror::Error, PartialEq, Eq)]
pub enum PermError {
    #[error("word is not a permutation of 1..={0}")]
    NotAPermutation(usize),
    #[error("permutation size {0} exceeds the supported maximum {MAX_N}")]
    TooLong(usize),
    #[error("cannot parse `{0}` as a permutation")]
    Parse(String),
    #[error("permutation is not an involution")]
    NotAnInvolution,
    #[error("inflation arity mismatch: pattern has {expected} slots, got {got} blocks")]
    InflationArity { expected: usize, got: usize },
    #[error("{0}")]
    Precondition(String),
}

/// A permutation of `{1, ..., n}` in one-line notation.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub struct Permutation {
    word: Vec<u8>,
}

impl Permutation {
    pub fn new(word: Vec<u8>) -> Result<Self, PermError> {
        let n = word.len();
        if n > MAX_N {
            return Err(PermError::TooLong(n));
        }
        let mut seen = [false; MAX_N + 1];
        for &v in &word {
            let v = v as usize;
            if v == 0 || v > n || seen[v] {
                return Err(PermError::NotAPermutation(n));
            }
            seen[v] = true;
        }
        Ok(Permutation { word })
    }

    /// Build from a 1-based `usize` slice.
    pub fn from_slice(word: &[usize]) -> Result<Self, PermError> {
        if word.len() > MAX_N {
            return Err(PermError::TooLong(word.len()));
        }
        if word.iter().any(|&v| v == 0 || v > MAX_N) {
            return Err(PermError::NotAPermutation(word.len()));
        }
        Permutation::new(word.iter().map(|&v| v as u8).collect())
    }

    pub fn empty() -> Self {
        Permutation { word: Vec::new() }
    }

    /// The identity `1 2 ... n`.
    pub fn identity(n: usize) -> Self {
        Permutation { word: (1..=n as u8).collect() }
    }

    /// The reversal `n ... 2 1`.
    pub fn reversal(n: usize) -> Self {
        Permutation { word: (1..=n as u8).rev().collect() }
    }

    pub fn n(&self) -> usize {
        self.word.len()
    }

    /// Value at 1-based position `i`.
    pub fn get(&self, i: usize) -> usize {
        self.word[i - 1] as usize
    }

    pub fn word(&self) -> &[u8] {
        &self.word
    }

    /// Position (1-based) of value `v`.
    pub fn position_of(&self, v: usize) -> usize {
        self.word.iter().position(|&x| x as usize == v).expect("value in range") + 1
    }

    pub fn is_involution(&self) -> bool {
        (1..=self.n()).all(|i| self.get(self.get(i)) == i)
    }

    pub fn is_fixed_point_free_involution(&self) -> bool {
        self.is_involution() && (1..=self.n()).all(|i| self.get(i) != i)
    }

    pub fn inverse(&self) -> Permutation {
        let mut word = vec![0u8; self.n()];
        for (i, &v) in self.word.iter().enumerate() {
            word[v as usize - 1] = i as u8 + 1;
        }
        Permutation { word }
    }

    pub fn reverse(&self) -> Permutation {
        Permutation { word: self.word.iter().rev().copied().collect() }
    }

    pub fn complement(&self) -> Permutation {
        let n = self.n() as u8;
        Permutation { word: self.word.iter().map(|&v| n + 1 - v).collect() }
    }

    pub fn apply_symmetry(&self, op: SquareOp) -> Permutation {
        use SquareOp::*;
        match op {
            Rot0 => self.clone(),
            // counter-clockwise quarter turn = reflect in the main diagonal,
            // then in the vertical axis
            Rot90 => self.inverse().reverse(),
            Rot180 => self.reverse().complement(),
            Rot270 => self.reverse().inverse(),
            RefSlope1 => self.inverse(),
            RefSlope0 => self.reverse(),
            RefSlopeInf => self.complement(),
            RefSlopeNeg1 => self.reverse().complement().inverse(),
        }
    }

    /// Statistics of the permutation.
    pub fn stats(&self) -> StatBundle {
        let n = self.n();
        let mut inv = 0u64;
        for i in 0..n {
            for j in i + 1..n {
                if self.word[i] > self.word[j] {
                    inv += 1;
                }
            }
        }
        let des_set: Vec<usize> =
            (1..n).filter(|&i| self.word[i - 1] > self.word[i]).collect();
        let asc_set: Vec<usize> =
            (1..n).filter(|&i| self.word[i - 1] < self.word[i]).collect();
        let pairs = (n as u64) * (n as u64 - if n == 0 { 0 } else { 1 }) / 2;
        let maj: u64 = des_set.iter().map(|&i| i as u64).sum();
        let comaj: u64 = asc_set.iter().map(|&i| i as u64).sum();
        StatBundle {
            n,
            inv,
            coinv: pairs - inv,
            maj,
            comaj,
            des: des_set.len() as u64,
            asc: asc_set.len() as u64,
            des_set,
            asc_set,
        }
    }

    /// Does `self` contain `pattern` as a classical pattern?
    pub fn contains(&self, pattern: &Permutation) -> bool {
        let k = pattern.n();
        if k == 0 {
            return true;
        }
        if k > self.n() {
            return false;
        }
        if k == 3 {
            return self.contains3(pattern);
        }
        self.contains_backtrack(pattern)
    }

    /// Backtracking search for an occurrence, extending a partial match one
    /// pattern position at a time and pruning on relative order.
    fn contains_backtrack(&self, pattern: &Permutation) -> bool {
        let n = self.n();
        let k = pattern.n();
        let pat = pattern.word();
        let word = &self.word;
        // chosen[r] = index in self of the r-th pattern position matched so far
        let mut chosen = vec![0usize; k];
        fn rec(word: &[u8], pat: &[u8], chosen: &mut [usize], r: usize, n: usize) -> bool {
            let k = pat.len();
            if r == k {
                return true;
            }
            let start = if r == 0 { 0 } else { chosen[r - 1] + 1 };
            // still need k - r positions
            for i in start..=(n - (k - r)) {
                let mut ok = true;
                for s in 0..r {
                    let order_pattern = pat[s] < pat[r];
                    let order_word = word[chosen[s]] < word[i];
                    if order_pattern != order_word {
                        ok = false;
                        break;
                    }
                }
                if ok {
                    chosen[r] = i;
                    if rec(word, pat, chosen, r + 1, n) {
                        return true;
                    }
                }
            }
            false
        }
        rec(word, pat, &mut chosen, 0, n)
    }

    /// Quadratic scan specialised to patterns of length 3.
    fn contains3(&self, pattern: &Permutation) -> bool {
        let n = self.n();
        let w = &self.word;
        // For each middle index j, precompute the relevant extremes to the
        // left / right and test the three roles in one pass.
        let pat: [u8; 3] = [pattern.word[0], pattern.word[1], pattern.word[2]];
        for j in 1..n.saturating_sub(1) {
            for i in 0..j {
                if cmp_role(w[i], w[j], pat[0], pat[1]) {
                    for l in j + 1..n {
                        if cmp_role(w[i], w[l], pat[0], pat[2])
                            && cmp_role(w[j], w[l], pat[1], pat[2])
                        {
                            return true;
                        }
                    }
                }
            }
        }
        fn cmp_role(a: u8, b: u8, ra: u8, rb: u8) -> bool {
            (a < b) == (ra < rb)
        }
        false
    }

    pub fn avoids(&self, pattern: &Permutation) -> bool {
        !self.contains(pattern)
    }

    pub fn avoids_all(&self, patterns: &[Permutation]) -> bool {
        patterns.iter().all(|p| self.avoids(p))
    }

    /// Two-cycles `(s_i, t_i)` with `s_i < t_i`, sorted by `s_i`, together
    /// with the fixed points.  Errors if `self` is not an involution.
    pub fn two_cycles(&self) -> Result<TwoCycleList, PermError> {
        if !self.is_involution() {
            return Err(PermError::NotAnInvolution);
        }
        let mut cycles = Vec::new();
        let mut fixed = Vec::new();
        for i in 1..=self.n() {
            let j = self.get(i);
            if j == i {
                fixed.push(i);
            } else if i < j {
                cycles.push((i, j));
            }
        }
        Ok(TwoCycleList { cycles, fixed_points: fixed })
    }

    /// Left-to-right maxima, right-to-left minima and right-to-left maxima
    /// as `(position, value)` lists, positions increasing.
    pub fn landmarks(&self) -> Landmarks {
        let n = self.n();
        let mut lr_maxima = Vec::new();
        let mut best = 0u8;
        for i in 0..n {
            if self.word[i] > best {
                best = self.word[i];
                lr_maxima.push((i + 1, best as usize));
            }
        }
        let mut rl_minima = Vec::new();
        let mut low = u8::MAX;
        let mut rl_maxima = Vec::new();
        let mut high = 0u8;
        for i in (0..n).rev() {
            if self.word[i] < low {
                low = self.word[i];
                rl_minima.push((i + 1, low as usize));
            }
            if self.word[i] > high {
                high = self.word[i];
                rl_maxima.push((i + 1, high as usize));
            }
        }
        rl_minima.reverse();
        rl_maxima.reverse();
        Landmarks { lr_maxima, rl_minima, rl_maxima }
    }

    /// Pattern (order-isomorphic relabelling) of the subword at the given
    /// 1-based positions, which must be increasing.
    pub fn pattern_at(&self, positions: &[usize]) -> Permutation {
        let mut vals: Vec<usize> = positions.iter().map(|&i| self.get(i)).collect();
        let mut sorted = vals.clone();
        sorted.sort_unstable();
        for v in &mut vals {
            *v = sorted.binary_search(v).unwrap() + 1;
        }
        Permutation::from_slice(&vals).expect("relabelled subword is a permutation")
    }

    /// Direct sum `self ⊕ other` (other shifted above and to the right).
    pub fn direct_sum(&self, other: &Permutation) -> Permutation {
        let shift = self.n() as u8;
        let mut word = self.word.clone();
        word.extend(other.word.iter().map(|&v| v + shift));
        Permutation { word }
    }

    /// Remove the point at 1-based position `pos` and renumber.
    pub fn remove_position(&self, pos: usize) -> Permutation {
        let gone = self.word[pos - 1];
        let word = self
            .word
            .iter()
            .enumerate()
            .filter(|&(i, _)| i != pos - 1)
            .map(|(_, &v)| if v > gone { v - 1 } else { v })
            .collect();
        Permutation { word }
    }

    /// Insert a new point at position `pos` with value `val` (both 1-based in
    /// the enlarged permutation): existing values `>= val` are shifted up.
    pub fn insert_point(&self, pos: usize, val: usize) -> Permutation {
        let mut word: Vec<u8> = self
            .word
            .iter()
            .map(|&v| if v as usize >= val { v + 1 } else { v })
            .collect();
        word.insert(pos - 1, val as u8);
        Permutation { word }
    }
}

/// The dihedral group of the square acting on permutation diagrams.
///
/// Reflections are named by the slope of their axis: slope 1 is inversion,
/// slope 0 is reversal, slope infinity is complementation, and slope -1 is
/// the inverse of the reverse-complement.  Rotations are counter-clockwise.
#[derive(Clone, Copy, PartialEq, Eq, Debug, Hash)]
pub enum SquareOp {
    Rot0,
    Rot90,
    Rot180,
    Rot270,
    RefSlope1,
    RefSlope0,
    RefSlopeNeg1,
    RefSlopeInf,
}

impl SquareOp {
    pub const ALL: [SquareOp; 8] = [
        SquareOp::Rot0,
        SquareOp::Rot90,
        SquareOp::Rot180,
        SquareOp::Rot270,
        SquareOp::RefSlope1,
        SquareOp::RefSlope0,
        SquareOp::RefSlopeNeg1,
        SquareOp::RefSlopeInf,
    ];

    pub fn token(self) -> &'static str {
        match self {
            SquareOp::Rot0 => "R0",
            SquareOp::Rot90 => "R90",
            SquareOp::Rot180 => "R180",
            SquareOp::Rot270 => "R270",
            SquareOp::RefSlope1 => "r1",
            SquareOp::RefSlope0 => "r0",
            SquareOp::RefSlopeNeg1 => "r-1",
            SquareOp::RefSlopeInf => "rinf",
        }
    }

    pub fn parse(s: &str) -> Option<SquareOp> {
        SquareOp::ALL.into_iter().find(|op| op.token() == s)
    }
}

/// All classical statistics of one permutation, computed in one pass.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct StatBundle {
    pub n: usize,
    pub inv: u64,
    pub coinv: u64,
    pub maj: u64,
    pub comaj: u64,
    pub des: u64,
    pub asc: u64,
    pub des_set: Vec<usize>,
    pub asc_set: Vec<usize>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct TwoCycleList {
    /// `(s, t)` pairs with `s < t`, sorted by `s`.
    pub cycles: Vec<(usize, usize)>,
    pub fixed_points: Vec<usize>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Landmarks {
    pub lr_maxima: Vec<(usize, usize)>,
    pub rl_minima: Vec<(usize, usize)>,
    pub rl_maxima: Vec<(usize, usize)>,
}

/// Inflation `tau[b_1, ..., b_k]`: replace the i-th point of `tau` by the
/// block `b_i`, blocks keeping the relative order prescribed by `tau`.
pub fn inflate(tau: &Permutation, blocks: &[Permutation]) -> Result<Permutation, PermError> {
    let k = tau.n();
    if blocks.len() != k {
        return Err(PermError::InflationArity { expected: k, got: blocks.len() });
    }
    let total: usize = blocks.iter().map(|b| b.n()).sum();
    if total > MAX_N {
        return Err(PermError::TooLong(total));
    }
    // value offset of block i: total size of blocks whose tau-value is smaller
    let mut val_offset = vec![0usize; k];
    for i in 0..k {
        for j in 0..k {
            if tau.get(j + 1) < tau.get(i + 1) {
                val_offset[i] += blocks[j].n();
            }
        }
    }
    let mut word = Vec::with_capacity(total);
    for (i, b) in blocks.iter().enumerate() {
        for &v in b.word() {
            word.push((v as usize + val_offset[i]) as u8);
        }
    }
    Permutation::new(word)
}

/// Block decompositions of avoiders around the extreme point.
///
/// For the four patterns of length 3 with a corner point, every avoider
/// factors through the corresponding inflation with a singleton block:
/// a 132-avoider is `231[s1, 1, s2]` (split at the maximum, prefix values
/// above suffix values), and analogously for the other three.
pub fn corner_factor(sigma: &Permutation, avoided: &Permutation) -> Result<(Permutation, Permutation), PermError> {
    let n = sigma.n();
    if n == 0 {
        return Err(PermError::Precondition("cannot factor the empty permutation".into()));
    }
    if sigma.contains(avoided) {
        return Err(PermError::Precondition(format!("{sigma} does not avoid {avoided}")));
    }
    let (pivot_value, prefix_high): (usize, bool) = match avoided.word() {
        [1, 3, 2] => (n, true),  // 231[s1, 1, s2]
        [2, 3, 1] => (n, false), // 132[s1, 1, s2]
        [2, 1, 3] => (1, true),  // 312[s1, 1, s2]
        [3, 1, 2] => (1, false), // 213[s1, 1, s2]
        _ => {
            return Err(PermError::Precondition(
                "corner factorisation requires a single pattern of length 3 other than 123/321".into(),
            ))
        }
    };
    let j = sigma.position_of(pivot_value);
    let left: Vec<usize> = (1..j).collect();
    let right: Vec<usize> = (j + 1..=n).collect();
    let s1 = sigma.pattern_at(&left);
    let s2 = sigma.pattern_at(&right);
    // check the value split that the avoidance guarantees
    let min_left = left.iter().map(|&i| sigma.get(i)).min().unwrap_or(usize::MAX);
    let max_left = left.iter().map(|&i| sigma.get(i)).max().unwrap_or(0);
    let min_right = right.iter().map(|&i| sigma.get(i)).min().unwrap_or(usize::MAX);
    let max_right = right.iter().map(|&i| sigma.get(i)).max().unwrap_or(0);
    let ok = if prefix_high { min_left > max_right } else { max_left < min_right };
    if !ok {
        return Err(PermError::Precondition("value split violated; input does not avoid the pattern".into()));
    }
    Ok((s1, s2))
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.n() == 0 {
            return write!(f, "()");
        }
        if self.n() <= 9 {
            for &v in &self.word {
                write!(f, "{v}")?;
            }
            Ok(())
        } else {
            let parts: Vec<String> = self.word.iter().map(|v| v.to_string()).collect();
            write!(f, "{}", parts.join(","))
        }
    }
}

impl fmt::Debug for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl FromStr for Permutation {
    type Err = PermError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let s = s.trim();
        if s == "()" || s.is_empty() {
            return Ok(Permutation::empty());
        }
        let vals: Vec<usize> = if s.contains(',') {
            s.split(',')
                .map(|part| part.trim().parse::<usize>().map_err(|_| PermError::Parse(s.to_string())))
                .collect::<Result<_, _>>()?
        } else {
            s.chars()
                .map(|c| c.to_digit(10).map(|d| d as usize).ok_or_else(|| PermError::Parse(s.to_string())))
                .collect::<Result<_, _>>()?
        };
        Permutation::from_slice(&vals).map_err(|_| PermError::Parse(s.to_string()))
    }
}

pub fn perm(s: &str) -> Permutation {
    s.parse().expect("valid permutation literal")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parsing_and_display() {
        assert_eq!(perm("216543").word(), &[2, 1, 6, 5, 4, 3]);
        assert_eq!(perm("2,1,6,5,4,3"), perm("216543"));
        assert_eq!(perm("216543").to_string(), "216543");
        let long = Permutation::identity(11);
        assert_eq!(long.to_string().parse::<Permutation>().unwrap(), long);
        assert!("217".parse::<Permutation>().is_err());
        assert!("".parse::<Permutation>().unwrap().n() == 0);
    }

    #[test]
    fn stats_of_216543() {
        let s = perm("216543").stats();
        assert_eq!(s.inv, 7);
        assert_eq!(s.coinv, 15 - 7);
        assert_eq!(s.des_set, vec![1, 3, 4, 5]);
        assert_eq!(s.maj, 13);
        assert_eq!(s.des, 4);
        assert_eq!(s.asc, 1);
        assert_eq!(s.comaj, 2);
    }

    #[test]
    fn stats_of_extremes() {
        let d4 = Permutation::reversal(4).stats();
        assert_eq!((d4.inv, d4.maj, d4.coinv), (6, 6, 0));
        let i5 = Permutation::identity(5).stats();
        assert_eq!((i5.inv, i5.maj, i5.comaj, i5.asc), (0, 0, 10, 4));
        let e = Permutation::empty().stats();
        assert_eq!((e.inv, e.maj, e.des, e.asc), (0, 0, 0, 0));
    }

    #[test]
    fn complementary_statistics() {
        for word in ["1", "21", "4231", "216543", "371958264"] {
            let s = perm(word).stats();
            let n = s.n as u64;
            assert_eq!(s.inv + s.coinv, n * (n - 1) / 2);
            assert_eq!(s.maj + s.comaj, n * (n - 1) / 2);
            assert_eq!(s.des + s.asc, n - 1);
        }
    }

    #[test]
    fn containment_examples() {
        assert!(perm("216543").contains(&perm("321")));
        assert!(perm("216543").avoids(&perm("123")));
        assert!(perm("132458967").avoids(&perm("321")));
        assert!(perm("12").avoids(&perm("123")));
        assert!(perm("1234").contains(&perm("123")));
        // every permutation contains the empty pattern
        assert!(perm("1").contains(&Permutation::empty()));
    }

    #[test]
    fn length3_scan_agrees_with_backtracking() {
        let patterns: Vec<Permutation> =
            ["123", "132", "213", "231", "312", "321"].iter().map(|s| perm(s)).collect();
        let mut sigma = Permutation::identity(7);
        // walk through all of S_7 lexicographically
        loop {
            for p in &patterns {
                assert_eq!(sigma.contains(p), sigma.contains_backtrack(p), "{sigma} vs {p}");
            }
            match next_perm(&sigma) {
                Some(next) => sigma = next,
                None => break,
            }
        }
        fn next_perm(p: &Permutation) -> Option<Permutation> {
            let mut w: Vec<u8> = p.word().to_vec();
            let n = w.len();
            let i = (1..n).rev().find(|&i| w[i - 1] < w[i])?;
            let j = (i..n).rev().find(|&j| w[j] > w[i - 1]).unwrap();
            w.swap(i - 1, j);
            w[i..].reverse();
            Permutation::new(w).ok()
        }
    }

    #[test]
    fn symmetries_of_132() {
        let p = perm("132");
        assert_eq!(p.apply_symmetry(SquareOp::RefSlope1), perm("132"));
        assert_eq!(p.apply_symmetry(SquareOp::RefSlope0), perm("231"));
        assert_eq!(p.apply_symmetry(SquareOp::RefSlopeInf), perm("312"));
        assert_eq!(p.apply_symmetry(SquareOp::RefSlopeNeg1), perm("213"));
        assert_eq!(p.apply_symmetry(SquareOp::Rot180), perm("213"));
    }

    #[test]
    fn symmetry_group_is_dihedral_of_order_8() {
        // the eight operations act pairwise differently on a suitably
        // asymmetric permutation
        let witness = perm("25134");
        let mut images: Vec<Permutation> =
            SquareOp::ALL.iter().map(|&op| witness.apply_symmetry(op)).collect();
        images.sort();
        images.dedup();
        assert_eq!(images.len(), 8, "images: {images:?}");
        // composition table spot checks: R90 = r0 after r1, R270 = r1 after r0
        for word in ["2413", "31452", "216543"] {
            let p = perm(word);
            assert_eq!(p.apply_symmetry(SquareOp::Rot90), p.apply_symmetry(SquareOp::RefSlope1).reverse());
            assert_eq!(p.apply_symmetry(SquareOp::Rot270), p.apply_symmetry(SquareOp::RefSlope0).inverse());
            assert_eq!(
                p.apply_symmetry(SquareOp::Rot180),
                p.apply_symmetry(SquareOp::Rot90).apply_symmetry(SquareOp::Rot90)
            );
            // each reflection is an involution
            for op in [SquareOp::RefSlope1, SquareOp::RefSlope0, SquareOp::RefSlopeNeg1, SquareOp::RefSlopeInf] {
                assert_eq!(p.apply_symmetry(op).apply_symmetry(op), p);
            }
        }
    }

    #[test]
    fn involution_preserving_symmetries() {
        let iota = perm("216543");
        assert!(iota.is_involution());
        assert_eq!(iota.apply_symmetry(SquareOp::RefSlope1), iota);
        for op in [SquareOp::RefSlopeNeg1, SquareOp::Rot180] {
            let image = iota.apply_symmetry(op);
            assert!(image.is_involution());
            assert_eq!(image.stats().inv, iota.stats().inv);
        }
        assert_eq!(
            iota.apply_symmetry(SquareOp::RefSlopeNeg1),
            iota.apply_symmetry(SquareOp::Rot180)
        );
    }

    #[test]
    fn two_cycles_examples() {
        let tc = perm("216543").two_cycles().unwrap();
        assert_eq!(tc.cycles, vec![(1, 2), (3, 6), (4, 5)]);
        assert!(tc.fixed_points.is_empty());
        let tc = perm("132458967").two_cycles().unwrap();
        assert_eq!(tc.cycles, vec![(2, 3), (6, 8), (7, 9)]);
        assert_eq!(tc.fixed_points, vec![1, 4, 5]);
        assert!(perm("231").two_cycles().is_err());
    }

    #[test]
    fn landmarks_example() {
        let lm = perm("371958264").landmarks();
        let values = |v: &[(usize, usize)]| v.iter().map(|&(_, x)| x).collect::<Vec<_>>();
        assert_eq!(values(&lm.lr_maxima), vec![3, 7, 9]);
        assert_eq!(values(&lm.rl_minima), vec![1, 2, 4]);
        assert_eq!(values(&lm.rl_maxima), vec![9, 8, 6, 4]);
    }

    #[test]
    fn inflation_example() {
        let out = inflate(
            &perm("3124"),
            &[Permutation::identity(3), Permutation::reversal(2), perm("213"), perm("1")],
        )
        .unwrap();
        assert_eq!(out, perm("678214359"));
    }

    #[test]
    fn inflation_degenerate_cases() {
        assert_eq!(inflate(&perm("1"), &[perm("231")]).unwrap(), perm("231"));
        let empty_block = inflate(&perm("12"), &[Permutation::empty(), perm("21")]).unwrap();
        assert_eq!(empty_block, perm("21"));
        assert!(inflate(&perm("12"), &[perm("1")]).is_err());
    }

    #[test]
    fn corner_factorisation_round_trips() {
        // check on all avoiders of each corner pattern for n <= 6
        for pat_word in ["132", "213", "231", "312"] {
            let pat = perm(pat_word);
            let template = match pat_word {
                "132" => perm("231"),
                "231" => perm("132"),
                "312" => perm("213"),
                "213" => perm("312"),
                _ => unreachable!(),
            };
            let mut sigma = Some(Permutation::identity(6));
            while let Some(s) = sigma {
                if s.avoids(&pat) {
                    let (s1, s2) = corner_factor(&s, &pat).unwrap();
                    let rebuilt = inflate(&template, &[s1.clone(), perm("1"), s2.clone()]).unwrap();
                    assert_eq!(rebuilt, s, "pattern {pat_word}");
                    assert!(s1.avoids(&pat) && s2.avoids(&pat));
                }
                sigma = next(&s);
            }
        }
        fn next(p: &Permutation) -> Option<Permutation> {
            let mut w: Vec<u8> = p.word().to_vec();
            let n = w.len();
            let i = (1..n).rev().find(|&i| w[i - 1] < w[i])?;
            let j = (i..n).rev().find(|&j| w[j] > w[i - 1]).unwrap();
            w.swap(i - 1, j);
            w[i..].reverse();
            Permutation::new(w).ok()
        }
    }

    #[test]
    fn insert_and_remove_are_inverse() {
        let p = perm("35421");
        let bigger = p.insert_point(4, 2);
        assert_eq!(bigger, perm("465231"));
        assert_eq!(bigger.remove_position(4), p);
    }
}
