//! Standard Young tableaux, Robinson–Schensted insertion, the two-row-at-a-
//! time insertion of a two-cycle, and the tableau-transposition maps.
//!
//! For an involution the two RS tableaux coincide, so a single standard
//! tableau records it; transposing that tableau swaps the roles of rows and
//! columns and realises the `321 <-> 123` symmetry on avoidance classes.

use std::fmt;

use serde::Serialize;

use crate::perm::{PermError, Permutation};

#[derive(Clone, PartialEq, Eq, Hash, Serialize)]
pub struct Tableau {
    rows: Vec<Vec<usize>>,
}

#[derive(Debug, thiserror::Error, PartialEq, Eq)]
pub enum TableauError {
    #[error("rows do not form a standard Young tableau")]
    NotStandard,
    #[error(transparent)]
    Perm(#[from] PermError),
}

impl Tableau {
    pub fn new(rows: Vec<Vec<usize>>) -> Result<Self, TableauError> {
        let t = Tableau { rows };
        if !t.is_standard() {
            return Err(TableauError::NotStandard);
        }
        Ok(t)
    }

    pub fn empty() -> Self {
        Tableau { rows: Vec::new() }
    }

    pub fn rows(&self) -> &[Vec<usize>] {
        &self.rows
    }

    pub fn size(&self) -> usize {
        self.rows.iter().map(|r| r.len()).sum()
    }

    pub fn shape(&self) -> Vec<usize> {
        self.rows.iter().map(|r| r.len()).collect()
    }

    fn is_standard(&self) -> bool {
        let n = self.size();
        let mut seen = vec![false; n + 1];
        for (r, row) in self.rows.iter().enumerate() {
            if row.is_empty() {
                return false;
            }
            if r + 1 < self.rows.len() && self.rows[r + 1].len() > row.len() {
                return false;
            }
            for (c, &v) in row.iter().enumerate() {
                if v == 0 || v > n || seen[v] {
                    return false;
                }
                seen[v] = true;
                if c > 0 && row[c - 1] >= v {
                    return false;
                }
                if r > 0 && self.rows[r - 1][c] >= v {
                    return false;
                }
            }
        }
        true
    }

    pub fn transpose(&self) -> Tableau {
        let cols = self.rows.first().map(|r| r.len()).unwrap_or(0);
        let rows = (0..cols)
            .map(|c| self.rows.iter().filter_map(|row| row.get(c).copied()).collect())
            .collect();
        Tableau { rows }
    }

    /// Descents of the tableau: fillings `i` such that `i + 1` sits in a
    /// strictly lower row.
    pub fn des_set(&self) -> Vec<usize> {
        let n = self.size();
        let mut row_of = vec![0usize; n + 1];
        for (r, row) in self.rows.iter().enumerate() {
            for &v in row {
                row_of[v] = r;
            }
        }
        (1..n).filter(|&i| row_of[i + 1] > row_of[i]).collect()
    }

    /// Row-insert `value`, returning the row index where insertion settled.
    fn row_insert(&mut self, mut value: usize) -> usize {
        for (r, row) in self.rows.iter_mut().enumerate() {
            match row.iter().position(|&x| x > value) {
                None => {
                    row.push(value);
                    return r;
                }
                Some(c) => {
                    std::mem::swap(&mut row[c], &mut value);
                }
            }
        }
        self.rows.push(vec![value]);
        self.rows.len() - 1
    }

    /// Reverse one row-insertion that ended by appending to row `r`; returns
    /// the value that was originally inserted.
    fn row_uninsert(&mut self, r: usize) -> usize {
        let mut value = self.rows[r].pop().expect("row is nonempty");
        if self.rows[r].is_empty() {
            self.rows.pop();
        }
        for row in self.rows[..r].iter_mut().rev() {
            let c = row.iter().rposition(|&x| x < value).expect("bump path exists");
            std::mem::swap(&mut row[c], &mut value);
        }
        value
    }
}

impl fmt::Display for Tableau {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self
            .rows
            .iter()
            .map(|row| row.iter().map(|v| v.to_string()).collect::<Vec<_>>().join(","))
            .collect();
        write!(f, "[{}]", parts.join(" / "))
    }
}

impl fmt::Debug for Tableau {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

/// Robinson–Schensted correspondence: insertion and recording tableaux.
pub fn rsk(sigma: &Permutation) -> (Tableau, Tableau) {
    let mut p = Tableau::empty();
    let mut q = Tableau::empty();
    for i in 1..=sigma.n() {
        let r = p.row_insert(sigma.get(i));
        if q.rows.len() <= r {
            q.rows.push(Vec::new());
        }
        q.rows[r].push(i);
    }
    (p, q)
}

/// Invert the correspondence.
pub fn inverse_rsk(p: &Tableau, q: &Tableau) -> Result<Permutation, TableauError> {
    if p.shape() != q.shape() {
        return Err(TableauError::NotStandard);
    }
    let n = p.size();
    let mut p = p.clone();
    let mut row_of = vec![0usize; n + 1];
    for (r, row) in q.rows.iter().enumerate() {
        for &v in row {
            if v == 0 || v > n {
                return Err(TableauError::NotStandard);
            }
            row_of[v] = r;
        }
    }
    let mut word = vec![0usize; n];
    for i in (1..=n).rev() {
        word[i - 1] = p.row_uninsert(row_of[i]);
    }
    Ok(Permutation::from_slice(&word)?)
}

/// The single tableau of an involution (`P = Q` under RS).
pub fn involution_tableau(iota: &Permutation) -> Result<Tableau, TableauError> {
    if !iota.is_involution() {
        return Err(TableauError::Perm(PermError::NotAnInvolution));
    }
    Ok(rsk(iota).0)
}

/// Rebuild the involution whose RS tableau pair is `(t, t)`.
pub fn tableau_to_involution(t: &Tableau) -> Result<Permutation, TableauError> {
    inverse_rsk(t, t)
}

/// Insert the two-cycle `(i, n)` into the tableau of an involution of size
/// `n - 2` in one step: relabel (`>= i` up by one, then `>= n` — vacuous),
/// row-insert `i`, and place `n` at the end of the row below where the
/// insertion settled.
pub fn insert_two_cycle(t: &Tableau, i: usize, n: usize) -> Result<Tableau, TableauError> {
    if t.size() + 2 != n || i >= n {
        return Err(TableauError::NotStandard);
    }
    let mut out = Tableau {
        rows: t
            .rows
            .iter()
            .map(|row| row.iter().map(|&v| if v >= i { v + 1 } else { v }).collect())
            .collect(),
    };
    let r = out.row_insert(i);
    if out.rows.len() <= r + 1 {
        out.rows.push(Vec::new());
    }
    out.rows[r + 1].push(n);
    if !out.is_standard() {
        return Err(TableauError::NotStandard);
    }
    Ok(out)
}

/// Insert the two-cycle `(i, n)` directly on an involution of size `n - 2`:
/// relabel values, append index `n` and set `iota(i) = n`, `iota(n) = i`.
pub fn involution_insert_two_cycle(
    iota: &Permutation,
    i: usize,
    n: usize,
) -> Result<Permutation, PermError> {
    if !iota.is_involution() {
        return Err(PermError::NotAnInvolution);
    }
    if iota.n() + 2 != n || i >= n || i == 0 {
        return Err(PermError::Precondition(format!(
            "cannot insert cycle ({i}, {n}) into an involution of size {}",
            iota.n()
        )));
    }
    // old indices/values >= i shift up by one; index n is new
    let mut word = vec![0usize; n];
    for old in 1..=iota.n() {
        let idx = if old >= i { old + 1 } else { old };
        let val = if iota.get(old) >= i { iota.get(old) + 1 } else { iota.get(old) };
        word[idx - 1] = val;
    }
    word[i - 1] = n;
    word[n - 1] = i;
    Permutation::from_slice(&word)
}

/// Remove the two-cycle `(i, n)` (with `iota(n) = i < n`), inverting
/// [`involution_insert_two_cycle`].
pub fn involution_remove_last_cycle(iota: &Permutation) -> Result<(Permutation, usize), PermError> {
    let n = iota.n();
    if !iota.is_involution() {
        return Err(PermError::NotAnInvolution);
    }
    let i = iota.get(n);
    if i >= n {
        return Err(PermError::Precondition("largest index is not in a two-cycle".into()));
    }
    let mut word = Vec::with_capacity(n - 2);
    for idx in 1..=n {
        if idx == i || idx == n {
            continue;
        }
        let v = iota.get(idx);
        debug_assert!(v != i && v != n);
        word.push(if v > i { v - 1 } else { v });
    }
    Ok((Permutation::from_slice(&word)?, i))
}

/// Map an involution to the involution of the transposed tableau.
pub fn transpose_involution(iota: &Permutation) -> Result<Permutation, TableauError> {
    let t = involution_tableau(iota)?;
    tableau_to_involution(&t.transpose())
}

/// Map a permutation to the permutation of the transposed tableau pair.
pub fn transpose_permutation(sigma: &Permutation) -> Result<Permutation, TableauError> {
    let (p, q) = rsk(sigma);
    inverse_rsk(&p.transpose(), &q.transpose())
}
