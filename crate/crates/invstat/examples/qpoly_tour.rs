//! Tour of the polynomial layer: Gaussian binomials, reversal symmetry, and
//! coefficient-shape facts such as the internal zeros of the maj
//! distribution over 132-avoiding involutions.
//!
//! Run with: `cargo run --example qpoly_tour`

use invstat::oracle::{AvoidanceClass, Oracle, Population, Weight};
use invstat::perm::perm;
use invstat::qpoly::{q_binomial, q_binomial_by_division, q_factorial, q_int};

fn main() {
    let oracle = Oracle::new();

    println!("q-integers, q-factorials and Gaussian binomials:");
    println!("  [4]_q        = {}", q_int(4));
    println!("  [4]_q!       = {}", q_factorial(4));
    println!("  [6 choose 2] = {}", q_binomial(6, 2));
    assert_eq!(q_binomial(6, 2), q_binomial_by_division(6, 2));

    // maj over I_n(321) is the Gaussian binomial [n choose ceil(n/2)].
    println!("\nmaj distribution over I_n(321) vs [n choose ceil(n/2)]_q:");
    for n in 0..=8u32 {
        let class = AvoidanceClass {
            population: Population::Involutions,
            n: n as usize,
            patterns: vec![perm("321")],
        };
        let f = oracle.genfun(&class, Weight::maj()).unwrap();
        assert_eq!(f, q_binomial(n, n.div_ceil(2)));
        println!("  n={n}: {f}");
    }

    // Reversing maj against its maximum C(n,2) maps the 213 class onto the
    // 132 class.
    let n = 6u32;
    let top = n * (n - 1) / 2;
    let maj_213 = oracle
        .genfun(
            &AvoidanceClass {
                population: Population::Involutions,
                n: n as usize,
                patterns: vec![perm("213")],
            },
            Weight::maj(),
        )
        .unwrap();
    let maj_132 = oracle
        .genfun(
            &AvoidanceClass {
                population: Population::Involutions,
                n: n as usize,
                patterns: vec![perm("132")],
            },
            Weight::maj(),
        )
        .unwrap();
    assert_eq!(maj_213.reverse_in_q(top).unwrap(), maj_132);
    println!("\nmaj over I_{n}(213)            : {maj_213}");
    println!("reversed against q^{top}   : {}", maj_213.reverse_in_q(top).unwrap());
    println!("maj over I_{n}(132)            : {maj_132}");

    // The maj distribution over I_n(132) has a gap: every coefficient
    // strictly between exponents C(n,2) - ceil(n/2) and C(n,2) vanishes.
    println!("\ninternal zeros of maj over I_n(132):");
    for n in 3..=9u32 {
        let class = AvoidanceClass {
            population: Population::Involutions,
            n: n as usize,
            patterns: vec![perm("132")],
        };
        let profile = oracle.genfun(&class, Weight::maj()).unwrap().coefficient_profile();
        println!(
            "  n={n}: coefficients {:?}, zero runs {:?}",
            profile.coeffs, profile.internal_zero_ranges
        );
    }
}
