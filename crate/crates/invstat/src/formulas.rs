//! Closed forms and recurrences for the statistic distributions over
//! pattern-avoiding involutions and fixed-point-free involutions.
//!
//! Naming convention: `inv_231(n)` is the distribution of `inv` (in `q`)
//! over involutions of size `n` avoiding `231`; the `coinv_*` / `comaj_*`
//! variants track the reversed statistics, and `*_fpf_*` restrict to
//! fixed-point-free involutions.  Bivariate functions return `(q, t)`
//! polynomials.
//!
//! Every function here is checked against the brute-force oracle; a registry
//! at the bottom ties each formula to the oracle computation it must match.

use crate::oracle::{CountStat, Population, Weight};
use crate::qpoly::{q_binomial, MultiPoly};

fn binom2(k: u32) -> u32 {
    k * k.saturating_sub(1) / 2
}

/// Carlitz–Riordan q-Catalan numbers:
/// `C_0 = 1`, `C_n = sum_{k=0}^{n-1} q^k C_k C_{n-1-k}`.
pub fn catalan_q(n: usize) -> MultiPoly {
    catalan_q_list(n).pop().expect("list is nonempty")
}

fn catalan_q_list(n: usize) -> Vec<MultiPoly> {
    let mut c: Vec<MultiPoly> = vec![MultiPoly::one()];
    for m in 1..=n {
        let mut acc = MultiPoly::zero();
        for k in 0..m {
            let term = MultiPoly::q_pow(k as u32).mul(&c[k]).mul(&c[m - 1 - k]);
            acc = acc.add(&term);
        }
        c.push(acc);
    }
    c
}

/// `inv` over involutions avoiding 231 (equivalently 312):
/// `f_n = sum_{j=1}^{n} q^binom(j,2) f_{n-j}`, `f_0 = 1`.
pub fn inv_231(n: usize) -> MultiPoly {
    let mut f: Vec<MultiPoly> = vec![MultiPoly::one()];
    for m in 1..=n {
        let mut acc = MultiPoly::zero();
        for j in 1..=m {
            acc = acc.add(&MultiPoly::q_pow(binom2(j as u32)).mul(&f[m - j]));
        }
        f.push(acc);
    }
    f.pop().unwrap()
}

/// `coinv` over fixed-point-free involutions avoiding 132 (equivalently 213):
/// the q-Catalan number `C_m(q^2)` for size `n = 2m`; zero for odd `n`.
pub fn coinv_fpf_132(n: usize) -> MultiPoly {
    if n % 2 == 1 {
        return MultiPoly::zero();
    }
    catalan_q(n / 2).subst_q_power(2)
}

/// `coinv` over involutions avoiding 132:
/// `f_n = q^{n-1} f_{n-1} + sum_{k=1}^{floor(n/2)} q^{2(k-1)} C_{k-1}(q^2) f_{n-2k}`.
pub fn coinv_132(n: usize) -> MultiPoly {
    let cat = catalan_q_list(n / 2 + 1);
    let mut f: Vec<MultiPoly> = vec![MultiPoly::one()];
    for m in 1..=n {
        let mut acc = MultiPoly::q_pow(m as u32 - 1).mul(&f[m - 1]);
        for k in 1..=m / 2 {
            let term = MultiPoly::q_pow(2 * (k as u32 - 1))
                .mul(&cat[k - 1].subst_q_power(2))
                .mul(&f[m - 2 * k]);
            acc = acc.add(&term);
        }
        f.push(acc);
    }
    f.pop().unwrap()
}

/// `inv` over fixed-point-free involutions avoiding 321:
/// `g_{2m} = sum_{k=1}^{m} q^{2k-1} g_{2k-2} g_{2(m-k)}`, `g_0 = 1`.
pub fn inv_fpf_321(n: usize) -> MultiPoly {
    if n % 2 == 1 {
        return MultiPoly::zero();
    }
    inv_fpf_321_list(n / 2).pop().unwrap()
}

fn inv_fpf_321_list(m_max: usize) -> Vec<MultiPoly> {
    let mut g: Vec<MultiPoly> = vec![MultiPoly::one()];
    for m in 1..=m_max {
        let mut acc = MultiPoly::zero();
        for k in 1..=m {
            let term = MultiPoly::q_pow(2 * k as u32 - 1).mul(&g[k - 1]).mul(&g[m - k]);
            acc = acc.add(&term);
        }
        g.push(acc);
    }
    g
}

/// `inv` over involutions avoiding 321:
/// `f_n = g_n + sum_{k=0}^{ceil(n/2)-1} g_{2k} f_{n-2k-1}` where `g` is the
/// fixed-point-free distribution and `g_n = 0` for odd `n`; `f_0 = f_1 = 1`.
pub fn inv_321(n: usize) -> MultiPoly {
    let g = inv_fpf_321_list(n / 2);
    let mut f: Vec<MultiPoly> = vec![MultiPoly::one()];
    for m in 1..=n {
        let mut acc = if m % 2 == 0 { g[m / 2].clone() } else { MultiPoly::zero() };
        for k in 0..m.div_ceil(2) {
            acc = acc.add(&g[k].mul(&f[m - 2 * k - 1]));
        }
        f.push(acc);
    }
    f.pop().unwrap()
}

/// The two-parameter polynomial families behind the 123-avoiding counts.
///
/// `seq_a(m, l)` is the `coinv`-style weight enumerator of the sequences
/// accepted by [`crate::bijections::is_valid_insertion_seq`] with the `A`
/// start bound, via `A_{m,0} = 1`,
/// `A_{m,l} = A_{m+1,l-1} + sum_{i=2}^{m} q^{i-1} A_{i,l-1}`.
pub fn seq_a(m: usize, l: usize) -> MultiPoly {
    seq_ab_table(m, l).0
}

/// `B_{1,l} = 0`, `B_{m,0} = 1` for `m > 1`,
/// `B_{m,l} = sum_{i=2}^{m} q^{i-1} A_{i,l-1}`.
pub fn seq_b(m: usize, l: usize) -> MultiPoly {
    seq_ab_table(m, l).1
}

/// Compute `(A_{m,l}, B_{m,l})` bottom-up over decreasing `l`.
fn seq_ab_table(m: usize, l: usize) -> (MultiPoly, MultiPoly) {
    // a[level][i] = A_{i, level} for i in 1..=m+l (indices beyond what a
    // level needs are simply unused)
    let top = m + l + 1;
    let mut a_prev: Vec<MultiPoly> = (0..=top).map(|_| MultiPoly::one()).collect();
    let mut b_prev: Vec<MultiPoly> = (0..=top)
        .map(|i| if i <= 1 { MultiPoly::zero() } else { MultiPoly::one() })
        .collect();
    for level in 1..=l {
        let width = top - level;
        let mut a_cur: Vec<MultiPoly> = vec![MultiPoly::zero(); width + 1];
        let mut b_cur: Vec<MultiPoly> = vec![MultiPoly::zero(); width + 1];
        for i in 1..=width {
            let mut sum = MultiPoly::zero();
            for j in 2..=i {
                sum = sum.add(&MultiPoly::q_pow(j as u32 - 1).mul(&a_prev[j]));
            }
            a_cur[i] = a_prev[i + 1].add(&sum);
            b_cur[i] = sum;
        }
        a_prev = a_cur;
        b_prev = b_cur;
    }
    (a_prev[m].clone(), b_prev[m].clone())
}

/// `coinv` over involutions avoiding 123.
///
/// Odd size `n = 2k+1`:
/// `sum_{j=1}^{k} q^{2j} A_{2j+1,k-j}(q^2) + sum_{j=0}^{k} B_{2j+2,k-j}(q^2)`;
/// even size `n = 2k`:
/// `sum_{j=1}^{k} B_{2j+1,k-j}(q^2) + sum_{j=1}^{k} q^{2j-1} A_{2j,k-j}(q^2)`.
pub fn coinv_123(n: usize) -> MultiPoly {
    if n == 0 {
        return MultiPoly::one();
    }
    let mut acc = MultiPoly::zero();
    if n % 2 == 1 {
        let k = (n - 1) / 2;
        for j in 1..=k {
            let term = MultiPoly::q_pow(2 * j as u32).mul(&seq_a(2 * j + 1, k - j).subst_q_power(2));
            acc = acc.add(&term);
        }
        for j in 0..=k {
            acc = acc.add(&seq_b(2 * j + 2, k - j).subst_q_power(2));
        }
    } else {
        let k = n / 2;
        for j in 1..=k {
            acc = acc.add(&seq_b(2 * j + 1, k - j).subst_q_power(2));
        }
        for j in 1..=k {
            let term =
                MultiPoly::q_pow(2 * j as u32 - 1).mul(&seq_a(2 * j, k - j).subst_q_power(2));
            acc = acc.add(&term);
        }
    }
    acc
}

/// `coinv` over fixed-point-free involutions avoiding 123:
/// `sum_{j=1}^{k} B_{2j+1,k-j}(q^2)` for `n = 2k`.
pub fn coinv_fpf_123(n: usize) -> MultiPoly {
    if n % 2 == 1 {
        return MultiPoly::zero();
    }
    if n == 0 {
        return MultiPoly::one();
    }
    let k = n / 2;
    let mut acc = MultiPoly::zero();
    for j in 1..=k {
        acc = acc.add(&seq_b(2 * j + 1, k - j).subst_q_power(2));
    }
    acc
}

/// `maj` over involutions avoiding 231 (equivalently 312):
/// the product `prod_{k=1}^{n-1} (1 + q^k)`.
///
/// The published statement starts the product at `k = 0`; that extra factor
/// `(1 + q^0) = 2` contradicts the brute-force count, so the lower index is
/// corrected to `k = 1` here (see [`known_errata`]).
pub fn maj_231(n: usize) -> MultiPoly {
    let mut acc = MultiPoly::one();
    for k in 1..n as u32 {
        acc = acc.mul(&MultiPoly::one().add(&MultiPoly::q_pow(k)));
    }
    acc
}

/// `maj` over involutions avoiding 321: the Gaussian binomial
/// `[n choose ceil(n/2)]_q`.
pub fn maj_321(n: usize) -> MultiPoly {
    q_binomial(n as u32, n.div_ceil(2) as u32)
}

/// `maj` over involutions avoiding 123: the reversal
/// `q^binom(n,2) * maj_321(n; 1/q)`.
pub fn maj_123(n: usize) -> MultiPoly {
    maj_321(n).reverse_in_q(binom2(n as u32)).expect("maj_321 degree fits")
}

/// `maj` over involutions avoiding 321 with at most `k` two-cycles:
/// `[n choose k]_q`, valid for `k <= n/2`.
pub fn maj_321_cycles_at_most(n: usize, k: usize) -> MultiPoly {
    q_binomial(n as u32, k as u32)
}

/// `maj` over involutions avoiding 321 with exactly `k` two-cycles:
/// `[n choose k]_q - [n choose k-1]_q`, valid for `k <= n/2`.
pub fn maj_321_cycles_exactly(n: usize, k: usize) -> MultiPoly {
    if k == 0 {
        return q_binomial(n as u32, 0);
    }
    q_binomial(n as u32, k as u32).sub(&q_binomial(n as u32, k as u32 - 1))
}

/// `maj` over fixed-point-free involutions avoiding 321:
/// `[2m choose m]_q - [2m choose m-1]_q` for `n = 2m`.
pub fn maj_fpf_321(n: usize) -> MultiPoly {
    if n % 2 == 1 {
        return MultiPoly::zero();
    }
    maj_321_cycles_exactly(n, n / 2)
}

/// `comaj` over fixed-point-free involutions avoiding 123:
/// `sum_{k=0}^{2*floor(m/2)} (-1)^k [2m choose k]_q` for `n = 2m`.
pub fn comaj_fpf_123(n: usize) -> MultiPoly {
    if n % 2 == 1 {
        return MultiPoly::zero();
    }
    let m = n / 2;
    let mut acc = MultiPoly::zero();
    for k in 0..=(2 * (m / 2)) {
        let sign = if k % 2 == 0 { 1 } else { -1 };
        acc = acc.add(&q_binomial(n as u32, k as u32).scale(sign));
    }
    acc
}

/// `(comaj, asc)` in `(q, t)` over fixed-point-free involutions avoiding 132
/// for `n = 2m`:
/// `F_0 = 1`, and
/// `F_{2m}(q,t) = F_{2m-2}(q, qt)
///   + sum_{k=1}^{m-1} q^{2m+k-1} t^2 F_{2k}(q, q^{(2m-2k-1)/2} t) F_{2m-2k-2}(q, q^{k+1} t)`.
///
/// The half-integer shift is legitimate because every `t`-exponent of
/// `F_{2k}` is even (ascent counts of these involutions are even).
pub fn comaj_asc_fpf_132(n: usize) -> MultiPoly {
    if n % 2 == 1 {
        return MultiPoly::zero();
    }
    comaj_asc_fpf_132_list(n / 2).pop().unwrap()
}

fn comaj_asc_fpf_132_list(m_max: usize) -> Vec<MultiPoly> {
    let mut f: Vec<MultiPoly> = vec![MultiPoly::one()];
    for m in 1..=m_max {
        let mut acc = f[m - 1].subst_t_to_qa_t(1);
        for k in 1..m {
            let left = f[k]
                .subst_t_half_shift((2 * (m - k)) as u32 - 1)
                .expect("t-exponents of the fixed-point-free family are even");
            let right = f[m - k - 1].subst_t_to_qa_t(k as u32 + 1);
            let term = MultiPoly::q_pow((2 * m + k) as u32 - 1)
                .mul(&MultiPoly::t_pow(2))
                .mul(&left)
                .mul(&right);
            acc = acc.add(&term);
        }
        f.push(acc);
    }
    f
}

/// `(comaj, asc)` in `(q, t)` over involutions avoiding 132:
/// `M_0 = M_1 = 1`, and
/// `M_n = q^{n-1} t M_{n-1} + M_{n-2}(q, qt)
///   + sum_{k=2}^{floor(n/2)} q^{n+k-2} t^2 F_{2k-2}(q, q^{(n-2k+1)/2} t) M_{n-2k}(q, q^k t)`.
pub fn comaj_asc_132(n: usize) -> MultiPoly {
    let fpf = comaj_asc_fpf_132_list(n / 2 + 1);
    let mut m_list: Vec<MultiPoly> = vec![MultiPoly::one()];
    for m in 1..=n {
        if m == 1 {
            m_list.push(MultiPoly::one());
            continue;
        }
        let mut acc = MultiPoly::q_pow(m as u32 - 1).mul(&MultiPoly::t_pow(1)).mul(&m_list[m - 1]);
        acc = acc.add(&m_list[m - 2].subst_t_to_qa_t(1));
        for k in 2..=m / 2 {
            let left = fpf[k - 1]
                .subst_t_half_shift((m + 1 - 2 * k) as u32)
                .expect("t-exponents of the fixed-point-free family are even");
            let right = m_list[m - 2 * k].subst_t_to_qa_t(k as u32);
            let term = MultiPoly::q_pow((m + k) as u32 - 2)
                .mul(&MultiPoly::t_pow(2))
                .mul(&left)
                .mul(&right);
            acc = acc.add(&term);
        }
        m_list.push(acc);
    }
    m_list.pop().unwrap()
}

/// `maj` over involutions avoiding 132, derived from [`comaj_asc_132`] by
/// setting `t = 1` and reversing in `q` up to degree `binom(n,2)`.
pub fn maj_132(n: usize) -> MultiPoly {
    comaj_asc_132(n)
        .set_var_one('t')
        .reverse_in_q(binom2(n as u32))
        .expect("comaj degree is at most binom(n,2)")
}

/// `maj` over involutions avoiding 213: the reversal
/// `q^binom(n,2) * maj_132(n; 1/q)`.
pub fn maj_213(n: usize) -> MultiPoly {
    maj_132(n).reverse_in_q(binom2(n as u32)).expect("maj_132 degree fits")
}

/// One registered formula together with the oracle computation it must equal.
pub struct RegisteredFormula {
    pub id: &'static str,
    /// The identity, stated in the crate's own notation.
    pub statement: &'static str,
    pub population: Population,
    pub patterns: &'static [&'static str],
    pub weight: Weight,
    pub eval: fn(usize) -> MultiPoly,
}

/// All single-argument formulas, each paired with its oracle ground truth.
pub fn registry() -> Vec<RegisteredFormula> {
    use CountStat::*;
    vec![
        RegisteredFormula {
            id: "inv-231",
            statement: "inv over 231-avoiding involutions: f_n = sum_j q^C(j,2) f_{n-j}",
            population: Population::Involutions,
            patterns: &["231"],
            weight: Weight::q_only(Inv),
            eval: inv_231,
        },
        RegisteredFormula {
            id: "inv-312",
            statement: "inv over 312-avoiding involutions equals the 231 case",
            population: Population::Involutions,
            patterns: &["312"],
            weight: Weight::q_only(Inv),
            eval: inv_231,
        },
        RegisteredFormula {
            id: "coinv-132",
            statement: "coinv over 132-avoiding involutions via the q-Catalan recurrence",
            population: Population::Involutions,
            patterns: &["132"],
            weight: Weight::q_only(Coinv),
            eval: coinv_132,
        },
        RegisteredFormula {
            id: "coinv-213",
            statement: "coinv over 213-avoiding involutions equals the 132 case",
            population: Population::Involutions,
            patterns: &["213"],
            weight: Weight::q_only(Coinv),
            eval: coinv_132,
        },
        RegisteredFormula {
            id: "coinv-fpf-132",
            statement: "coinv over 132-avoiding fixed-point-free involutions is C_m(q^2)",
            population: Population::FixedPointFree,
            patterns: &["132"],
            weight: Weight::q_only(Coinv),
            eval: coinv_fpf_132,
        },
        RegisteredFormula {
            id: "coinv-fpf-213",
            statement: "coinv over 213-avoiding fixed-point-free involutions is C_m(q^2)",
            population: Population::FixedPointFree,
            patterns: &["213"],
            weight: Weight::q_only(Coinv),
            eval: coinv_fpf_132,
        },
        RegisteredFormula {
            id: "inv-fpf-321",
            statement: "inv over 321-avoiding fixed-point-free involutions via first-return split",
            population: Population::FixedPointFree,
            patterns: &["321"],
            weight: Weight::q_only(Inv),
            eval: inv_fpf_321,
        },
        RegisteredFormula {
            id: "inv-321",
            statement: "inv over 321-avoiding involutions via the fixed-point-free family",
            population: Population::Involutions,
            patterns: &["321"],
            weight: Weight::q_only(Inv),
            eval: inv_321,
        },
        RegisteredFormula {
            id: "coinv-123",
            statement: "coinv over 123-avoiding involutions via the A/B sequence families",
            population: Population::Involutions,
            patterns: &["123"],
            weight: Weight::q_only(Coinv),
            eval: coinv_123,
        },
        RegisteredFormula {
            id: "coinv-fpf-123",
            statement: "coinv over 123-avoiding fixed-point-free involutions via the B family",
            population: Population::FixedPointFree,
            patterns: &["123"],
            weight: Weight::q_only(Coinv),
            eval: coinv_fpf_123,
        },
        RegisteredFormula {
            id: "maj-231",
            statement: "maj over 231-avoiding involutions is prod_{k=1}^{n-1} (1 + q^k)",
            population: Population::Involutions,
            patterns: &["231"],
            weight: Weight::q_only(Maj),
            eval: maj_231,
        },
        RegisteredFormula {
            id: "maj-312",
            statement: "maj over 312-avoiding involutions equals the 231 case",
            population: Population::Involutions,
            patterns: &["312"],
            weight: Weight::q_only(Maj),
            eval: maj_231,
        },
        RegisteredFormula {
            id: "maj-321",
            statement: "maj over 321-avoiding involutions is [n choose ceil(n/2)]_q",
            population: Population::Involutions,
            patterns: &["321"],
            weight: Weight::q_only(Maj),
            eval: maj_321,
        },
        RegisteredFormula {
            id: "maj-123",
            statement: "maj over 123-avoiding involutions is the reversal of the 321 case",
            population: Population::Involutions,
            patterns: &["123"],
            weight: Weight::q_only(Maj),
            eval: maj_123,
        },
        RegisteredFormula {
            id: "maj-fpf-321",
            statement: "maj over 321-avoiding fixed-point-free involutions is [2m m]_q - [2m m-1]_q",
            population: Population::FixedPointFree,
            patterns: &["321"],
            weight: Weight::q_only(Maj),
            eval: maj_fpf_321,
        },
        RegisteredFormula {
            id: "comaj-fpf-123",
            statement: "comaj over 123-avoiding fixed-point-free involutions as an alternating Gaussian sum",
            population: Population::FixedPointFree,
            patterns: &["123"],
            weight: Weight::q_only(Comaj),
            eval: comaj_fpf_123,
        },
        RegisteredFormula {
            id: "comaj-asc-fpf-132",
            statement: "(comaj, asc) over 132-avoiding fixed-point-free involutions",
            population: Population::FixedPointFree,
            patterns: &["132"],
            weight: Weight::comaj_asc(),
            eval: comaj_asc_fpf_132,
        },
        RegisteredFormula {
            id: "comaj-asc-132",
            statement: "(comaj, asc) over 132-avoiding involutions",
            population: Population::Involutions,
            patterns: &["132"],
            weight: Weight::comaj_asc(),
            eval: comaj_asc_132,
        },
        RegisteredFormula {
            id: "maj-132",
            statement: "maj over 132-avoiding involutions from the comaj family by reversal",
            population: Population::Involutions,
            patterns: &["132"],
            weight: Weight::q_only(Maj),
            eval: maj_132,
        },
        RegisteredFormula {
            id: "maj-213",
            statement: "maj over 213-avoiding involutions is the reversal of the 132 case",
            population: Population::Involutions,
            patterns: &["213"],
            weight: Weight::q_only(Maj),
            eval: maj_213,
        },
        RegisteredFormula {
            id: "catalan-q",
            statement: "C_n(q) is the coinv distribution over 132-avoiding permutations",
            population: Population::Permutations,
            patterns: &["132"],
            weight: Weight::q_only(Coinv),
            eval: catalan_q,
        },
    ]
}
