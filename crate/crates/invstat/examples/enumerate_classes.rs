//! Enumerate pattern-avoiding involutions and tabulate their statistics.
//!
//! Run with: `cargo run --example enumerate_classes`

use invstat::oracle::{AvoidanceClass, Oracle, Population};
use invstat::perm::perm;

fn main() {
    let oracle = Oracle::new();

    // The members of I_4(321) with their statistics.
    let class = AvoidanceClass {
        population: Population::Involutions,
        n: 4,
        patterns: vec![perm("321")],
    };
    println!("involutions of size 4 avoiding 321:");
    for iota in oracle.members(&class).unwrap() {
        let st = iota.stats();
        println!(
            "  {iota}  inv={:>2}  maj={:>2}  des={}  descent set {:?}",
            st.inv, st.maj, st.des, st.des_set
        );
    }

    // Counting sequences for one class over each population.
    println!("\ncounts for the class avoiding 321, sizes 0..=8:");
    for population in [Population::Permutations, Population::Involutions, Population::FixedPointFree] {
        let mut row = Vec::new();
        for n in 0..=8 {
            if population == Population::FixedPointFree && n % 2 == 1 {
                row.push("-".to_string());
                continue;
            }
            let class = AvoidanceClass { population, n, patterns: vec![perm("321")] };
            row.push(oracle.count(&class).unwrap().to_string());
        }
        println!("  {:>4}: {}", population.token(), row.join(", "));
    }

    // Every single-pattern class of length-3 patterns over involutions has
    // one of two counting sequences.
    println!("\n|I_n(pattern)| for each length-3 pattern, sizes 0..=8:");
    for pat in ["123", "132", "213", "231", "312", "321"] {
        let mut row = Vec::new();
        for n in 0..=8 {
            let class = AvoidanceClass {
                population: Population::Involutions,
                n,
                patterns: vec![perm(pat)],
            };
            row.push(oracle.count(&class).unwrap().to_string());
        }
        println!("  {pat}: {}", row.join(", "));
    }
}
