//! Exact integer polynomials in the three statistic-tracking variables
//! `p`, `q`, `t`.
//!
//! A [`MultiPoly`] is a sparse map from exponent triples to `i64`
//! coefficients.  All arithmetic is checked: the counting problems in this
//! crate stay far below `i64::MAX`, so an overflow always indicates a bug and
//! aborts loudly instead of wrapping.
//!
//! Two serialisations are supported and both round-trip exactly: a human form
//! like `1 + 2*q^2*t + p*q^3` (terms sorted by exponent) and a JSON form
//! `[[e_p, e_q, e_t, coeff], ...]`.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

/// Exponent triple of a monomial `p^p q^q t^t`.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Debug, Hash, Serialize, Deserialize)]
pub struct Exp {
    pub p: u32,
    pub q: u32,
    pub t: u32,
}

impl Exp {
    pub const ONE: Exp = Exp { p: 0, q: 0, t: 0 };

    pub fn new(p: u32, q: u32, t: u32) -> Self {
        Exp { p, q, t }
    }
}

#[derive(Debug, thiserror::Error, PartialEq, Eq)]
pub enum PolyError {
    #[error("degree in {var} is {deg} which exceeds the reversal bound {bound}")]
    ReversalBound { var: char, deg: u32, bound: u32 },
    #[error("polynomial mentions {var}, which this operation forbids")]
    UnexpectedVariable { var: char },
    #[error("inexact polynomial division")]
    InexactDivision,
    #[error("division by zero polynomial")]
    DivisionByZero,
    #[error("cannot parse polynomial term `{0}`")]
    Parse(String),
    #[error("substitution t^{et} -> q^({numer}*{et}/2) t^{et} is not integral")]
    HalfExponent { numer: u32, et: u32 },
}

/// Sparse exact polynomial in `p`, `q`, `t` with `i64` coefficients.
///
/// The zero polynomial is the empty map; no zero coefficients are stored.
#[derive(Clone, PartialEq, Eq, Default, Hash)]
pub struct MultiPoly {
    terms: BTreeMap<Exp, i64>,
}

fn checked_add(a: i64, b: i64) -> i64 {
    a.checked_add(b).expect("coefficient overflow in polynomial addition")
}

fn checked_mul(a: i64, b: i64) -> i64 {
    a.checked_mul(b).expect("coefficient overflow in polynomial multiplication")
}

impl MultiPoly {
    pub fn zero() -> Self {
        MultiPoly::default()
    }

    pub fn one() -> Self {
        MultiPoly::constant(1)
    }

    pub fn constant(c: i64) -> Self {
        MultiPoly::monomial(Exp::ONE, c)
    }

    pub fn monomial(exp: Exp, coeff: i64) -> Self {
        let mut terms = BTreeMap::new();
        if coeff != 0 {
            terms.insert(exp, coeff);
        }
        MultiPoly { terms }
    }

    pub fn p_pow(k: u32) -> Self {
        MultiPoly::monomial(Exp::new(k, 0, 0), 1)
    }

    pub fn q_pow(k: u32) -> Self {
        MultiPoly::monomial(Exp::new(0, k, 0), 1)
    }

    pub fn t_pow(k: u32) -> Self {
        MultiPoly::monomial(Exp::new(0, 0, k), 1)
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (Exp, i64)> + '_ {
        self.terms.iter().map(|(&e, &c)| (e, c))
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn coeff(&self, exp: Exp) -> i64 {
        self.terms.get(&exp).copied().unwrap_or(0)
    }

    pub fn add_term(&mut self, exp: Exp, coeff: i64) {
        if coeff == 0 {
            return;
        }
        let entry = self.terms.entry(exp).or_insert(0);
        *entry = checked_add(*entry, coeff);
        if *entry == 0 {
            self.terms.remove(&exp);
        }
    }

    pub fn add(&self, other: &MultiPoly) -> MultiPoly {
        let mut out = self.clone();
        for (e, c) in other.terms() {
            out.add_term(e, c);
        }
        out
    }

    pub fn sub(&self, other: &MultiPoly) -> MultiPoly {
        let mut out = self.clone();
        for (e, c) in other.terms() {
            out.add_term(e, c.checked_neg().expect("coefficient overflow in negation"));
        }
        out
    }

    pub fn mul(&self, other: &MultiPoly) -> MultiPoly {
        let mut out = MultiPoly::zero();
        for (ea, ca) in self.terms() {
            for (eb, cb) in other.terms() {
                let exp = Exp::new(
                    ea.p.checked_add(eb.p).expect("exponent overflow"),
                    ea.q.checked_add(eb.q).expect("exponent overflow"),
                    ea.t.checked_add(eb.t).expect("exponent overflow"),
                );
                out.add_term(exp, checked_mul(ca, cb));
            }
        }
        out
    }

    pub fn scale(&self, c: i64) -> MultiPoly {
        let mut out = MultiPoly::zero();
        for (e, a) in self.terms() {
            out.add_term(e, checked_mul(a, c));
        }
        out
    }

    /// Sum of all coefficients, i.e. the evaluation at `p = q = t = 1`.
    pub fn eval_all_one(&self) -> i64 {
        let mut total = 0i64;
        for (_, c) in self.terms() {
            total = checked_add(total, c);
        }
        total
    }

    pub fn deg_p(&self) -> u32 {
        self.terms().map(|(e, _)| e.p).max().unwrap_or(0)
    }

    pub fn deg_q(&self) -> u32 {
        self.terms().map(|(e, _)| e.q).max().unwrap_or(0)
    }

    pub fn deg_t(&self) -> u32 {
        self.terms().map(|(e, _)| e.t).max().unwrap_or(0)
    }

    /// Substitute `q -> q^r`.
    pub fn subst_q_power(&self, r: u32) -> MultiPoly {
        let mut out = MultiPoly::zero();
        for (e, c) in self.terms() {
            let q = e.q.checked_mul(r).expect("exponent overflow");
            out.add_term(Exp::new(e.p, q, e.t), c);
        }
        out
    }

    /// Substitute `t -> q^a t`.
    pub fn subst_t_to_qa_t(&self, a: u32) -> MultiPoly {
        self.subst_t_half_shift(2 * a).expect("even shift is always integral")
    }

    /// Substitute `t^e -> q^(numer*e/2) t^e`.
    ///
    /// This realises shifts by half-integer powers of `q`; every term must
    /// have `numer * e` even or the substitution fails.
    pub fn subst_t_half_shift(&self, numer: u32) -> Result<MultiPoly, PolyError> {
        let mut out = MultiPoly::zero();
        for (e, c) in self.terms() {
            let prod = (numer as u64) * (e.t as u64);
            if prod % 2 != 0 {
                return Err(PolyError::HalfExponent { numer, et: e.t });
            }
            let shift = u32::try_from(prod / 2).expect("exponent overflow");
            let q = e.q.checked_add(shift).expect("exponent overflow");
            out.add_term(Exp::new(e.p, q, e.t), c);
        }
        Ok(out)
    }

    /// Set one variable to 1 (merging terms).
    pub fn set_var_one(&self, var: char) -> MultiPoly {
        let mut out = MultiPoly::zero();
        for (e, c) in self.terms() {
            let e = match var {
                'p' => Exp::new(0, e.q, e.t),
                'q' => Exp::new(e.p, 0, e.t),
                't' => Exp::new(e.p, e.q, 0),
                _ => panic!("unknown variable {var}"),
            };
            out.add_term(e, c);
        }
        out
    }

    /// Replace `q^k` by `q^(bound-k)`, i.e. compute `q^bound * f(1/q)`.
    ///
    /// Requires `deg_q <= bound` and that `p`, `t` do not occur.
    pub fn reverse_in_q(&self, bound: u32) -> Result<MultiPoly, PolyError> {
        if self.terms().any(|(e, _)| e.p != 0) {
            return Err(PolyError::UnexpectedVariable { var: 'p' });
        }
        if self.terms().any(|(e, _)| e.t != 0) {
            return Err(PolyError::UnexpectedVariable { var: 't' });
        }
        if self.deg_q() > bound {
            return Err(PolyError::ReversalBound { var: 'q', deg: self.deg_q(), bound });
        }
        let mut out = MultiPoly::zero();
        for (e, c) in self.terms() {
            out.add_term(Exp::new(0, bound - e.q, 0), c);
        }
        Ok(out)
    }

    /// Reverse in all three variables: `p^a q^b t^c -> p^(np-a) q^(nq-b) t^(nt-c)`.
    pub fn reverse_all(&self, np: u32, nq: u32, nt: u32) -> Result<MultiPoly, PolyError> {
        for (var, deg, bound) in [('p', self.deg_p(), np), ('q', self.deg_q(), nq), ('t', self.deg_t(), nt)] {
            if deg > bound {
                return Err(PolyError::ReversalBound { var, deg, bound });
            }
        }
        let mut out = MultiPoly::zero();
        for (e, c) in self.terms() {
            out.add_term(Exp::new(np - e.p, nq - e.q, nt - e.t), c);
        }
        Ok(out)
    }

    /// Exact division for polynomials in `q` alone.
    pub fn div_exact_q(&self, divisor: &MultiPoly) -> Result<MultiPoly, PolyError> {
        for poly in [self, divisor] {
            if poly.terms().any(|(e, _)| e.p != 0 || e.t != 0) {
                return Err(PolyError::UnexpectedVariable { var: 'p' });
            }
        }
        if divisor.is_zero() {
            return Err(PolyError::DivisionByZero);
        }
        let mut rem: Vec<i64> = self.q_dense();
        let div: Vec<i64> = divisor.q_dense();
        let dd = div.len() - 1;
        let lead = div[dd];
        if self.is_zero() {
            return Ok(MultiPoly::zero());
        }
        if rem.len() < div.len() {
            return Err(PolyError::InexactDivision);
        }
        let mut quot = vec![0i64; rem.len() - dd];
        for k in (0..quot.len()).rev() {
            let c = rem[k + dd];
            if c == 0 {
                continue;
            }
            if c % lead != 0 {
                return Err(PolyError::InexactDivision);
            }
            let f = c / lead;
            quot[k] = f;
            for (i, &d) in div.iter().enumerate() {
                rem[k + i] = checked_add(rem[k + i], -checked_mul(f, d));
            }
        }
        if rem.iter().any(|&c| c != 0) {
            return Err(PolyError::InexactDivision);
        }
        let mut out = MultiPoly::zero();
        for (k, &c) in quot.iter().enumerate() {
            out.add_term(Exp::new(0, k as u32, 0), c);
        }
        Ok(out)
    }

    /// Dense coefficient list in `q` after setting `p = t = 1`.
    pub fn q_dense(&self) -> Vec<i64> {
        let merged = self.set_var_one('p').set_var_one('t');
        let mut out = vec![0i64; merged.deg_q() as usize + 1];
        for (e, c) in merged.terms() {
            out[e.q as usize] = c;
        }
        out
    }

    pub fn coefficient_profile(&self) -> CoefficientProfile {
        CoefficientProfile::new(self.q_dense())
    }

    /// JSON form: list of `[e_p, e_q, e_t, coeff]`, sorted by exponent.
    pub fn to_json(&self) -> serde_json::Value {
        serde_json::json!(self
            .terms()
            .map(|(e, c)| serde_json::json!([e.p, e.q, e.t, c]))
            .collect::<Vec<_>>())
    }

    pub fn from_json(value: &serde_json::Value) -> Result<MultiPoly, PolyError> {
        let rows: Vec<(u32, u32, u32, i64)> = serde_json::from_value(value.clone())
            .map_err(|e| PolyError::Parse(e.to_string()))?;
        let mut out = MultiPoly::zero();
        for (p, q, t, c) in rows {
            out.add_term(Exp::new(p, q, t), c);
        }
        Ok(out)
    }
}

impl fmt::Display for MultiPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (e, c) in self.terms() {
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            let mut factors: Vec<String> = Vec::new();
            for (var, exp) in [('p', e.p), ('q', e.q), ('t', e.t)] {
                match exp {
                    0 => {}
                    1 => factors.push(var.to_string()),
                    _ => factors.push(format!("{var}^{exp}")),
                }
            }
            if factors.is_empty() {
                write!(f, "{c}")?;
            } else if c == 1 {
                write!(f, "{}", factors.join("*"))?;
            } else if c == -1 {
                write!(f, "-{}", factors.join("*"))?;
            } else {
                write!(f, "{c}*{}", factors.join("*"))?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for MultiPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl FromStr for MultiPoly {
    type Err = PolyError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let s = s.trim();
        if s == "0" {
            return Ok(MultiPoly::zero());
        }
        let mut out = MultiPoly::zero();
        for part in s.split(" + ") {
            let part = part.trim();
            if part.is_empty() {
                return Err(PolyError::Parse(s.to_string()));
            }
            let (sign, body) = match part.strip_prefix('-') {
                Some(rest) => (-1i64, rest),
                None => (1i64, part),
            };
            let mut coeff: Option<i64> = None;
            let mut exp = Exp::ONE;
            for factor in body.split('*') {
                let factor = factor.trim();
                if factor.is_empty() {
                    return Err(PolyError::Parse(part.to_string()));
                }
                if factor.chars().next().unwrap().is_ascii_digit() {
                    let c: i64 = factor.parse().map_err(|_| PolyError::Parse(part.to_string()))?;
                    if coeff.is_some() {
                        return Err(PolyError::Parse(part.to_string()));
                    }
                    coeff = Some(c);
                } else {
                    let (var, power) = match factor.split_once('^') {
                        Some((v, pw)) => {
                            (v, pw.parse::<u32>().map_err(|_| PolyError::Parse(part.to_string()))?)
                        }
                        None => (factor, 1),
                    };
                    match var {
                        "p" => exp.p += power,
                        "q" => exp.q += power,
                        "t" => exp.t += power,
                        _ => return Err(PolyError::Parse(part.to_string())),
                    }
                }
            }
            out.add_term(exp, sign * coeff.unwrap_or(1));
        }
        Ok(out)
    }
}

/// Shape facts about a dense coefficient list (taken in `q` at `p = t = 1`).
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CoefficientProfile {
    pub coeffs: Vec<i64>,
    pub symmetric: bool,
    pub unimodal: bool,
    pub log_concave: bool,
    /// Inclusive exponent ranges of zero coefficients that lie strictly
    /// between non-zero coefficients.
    pub internal_zero_ranges: Vec<(usize, usize)>,
}

impl CoefficientProfile {
    pub fn new(coeffs: Vec<i64>) -> Self {
        let n = coeffs.len();
        let symmetric = (0..n).all(|i| coeffs[i] == coeffs[n - 1 - i]);
        let unimodal = {
            let mut rising = true;
            let mut ok = true;
            for w in coeffs.windows(2) {
                if w[1] < w[0] {
                    rising = false;
                } else if w[1] > w[0] && !rising {
                    ok = false;
                }
            }
            ok
        };
        let log_concave = (1..n.saturating_sub(1)).all(|i| {
            let sq = checked_mul(coeffs[i], coeffs[i]);
            sq >= checked_mul(coeffs[i - 1], coeffs[i + 1])
        });
        let first_nonzero = coeffs.iter().position(|&c| c != 0);
        let last_nonzero = coeffs.iter().rposition(|&c| c != 0);
        let mut internal_zero_ranges = Vec::new();
        if let (Some(lo), Some(hi)) = (first_nonzero, last_nonzero) {
            let mut i = lo;
            while i <= hi {
                if coeffs[i] == 0 {
                    let start = i;
                    while coeffs[i] == 0 {
                        i += 1;
                    }
                    internal_zero_ranges.push((start, i - 1));
                } else {
                    i += 1;
                }
            }
        }
        CoefficientProfile { coeffs, symmetric, unimodal, log_concave, internal_zero_ranges }
    }
}

/// `[n]_q = 1 + q + ... + q^(n-1)`.
pub fn q_int(n: u32) -> MultiPoly {
    let mut out = MultiPoly::zero();
    for k in 0..n {
        out.add_term(Exp::new(0, k, 0), 1);
    }
    out
}

/// `[n]_q! = [1]_q [2]_q ... [n]_q`.
pub fn q_factorial(n: u32) -> MultiPoly {
    let mut out = MultiPoly::one();
    for k in 1..=n {
        out = out.mul(&q_int(k));
    }
    out
}

/// Gaussian binomial `[n choose k]_q` via the Pascal recurrence
/// `[n k] = [n-1 k-1] + q^k [n-1 k]`.
pub fn q_binomial(n: u32, k: u32) -> MultiPoly {
    if k > n {
        return MultiPoly::zero();
    }
    // row-by-row dense Pascal triangle in polynomials
    let mut row: Vec<MultiPoly> = vec![MultiPoly::one()];
    for m in 1..=n {
        let mut next: Vec<MultiPoly> = Vec::with_capacity(m as usize + 1);
        for j in 0..=m {
            let left = if j > 0 { row.get(j as usize - 1) } else { None };
            let right = row.get(j as usize);
            let mut val = MultiPoly::zero();
            if let Some(l) = left {
                val = val.add(l);
            }
            if let Some(r) = right {
                val = val.add(&MultiPoly::q_pow(j).mul(r));
            }
            next.push(val);
        }
        row = next;
    }
    row[k as usize].clone()
}

/// Gaussian binomial via the product formula
/// `prod_{i=1}^{k} (1 - q^{n-k+i}) / (1 - q^i)`, using exact division.
pub fn q_binomial_by_division(n: u32, k: u32) -> MultiPoly {
    if k > n {
        return MultiPoly::zero();
    }
    let mut acc = MultiPoly::one();
    for i in 1..=k {
        let factor = MultiPoly::one().sub(&MultiPoly::q_pow(n - k + i));
        acc = acc.mul(&factor);
    }
    for i in 1..=k {
        let divisor = MultiPoly::one().sub(&MultiPoly::q_pow(i));
        acc = acc.div_exact_q(&divisor).expect("q-binomial division is exact");
    }
    acc
}
