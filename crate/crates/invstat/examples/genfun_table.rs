//! Evaluate the registered closed forms and the joint-distribution table
//! rows, cross-checking each against the brute-force oracle.
//!
//! Run with: `cargo run --example genfun_table`

use invstat::formulas;
use invstat::oracle::{AvoidanceClass, Oracle, Population, Weight};
use invstat::perm::perm;
use invstat::tables;

fn main() {
    let oracle = Oracle::new();

    println!("registered closed forms (value at n = 5, checked against the oracle):");
    for formula in formulas::registry() {
        let n = if formula.population == Population::FixedPointFree { 6 } else { 5 };
        let value = (formula.eval)(n);
        let class = AvoidanceClass {
            population: formula.population,
            n,
            patterns: formula.patterns.iter().map(|s| perm(s)).collect(),
        };
        let check = if oracle.genfun(&class, formula.weight).unwrap() == value { "ok" } else { "MISMATCH" };
        println!("  [{check}] {}: {}", formula.id, formula.statement);
        println!("           F_{n} = {value}");
    }

    println!("\njoint (p^inv q^maj t^des) distribution rows at n = 4:");
    for row in tables::rows() {
        let value = row.eval_f(4);
        let patterns: Vec<_> = row.key.split(',').map(perm).collect();
        let class = AvoidanceClass { population: Population::Involutions, n: 4, patterns };
        let check = if oracle.genfun(&class, Weight::joint()).unwrap() == value { "ok" } else { "MISMATCH" };
        let bar = if row.barred { " (reversed form)" } else { "" };
        println!("  [{check}] {{{}}}{bar}: {value}", row.key);
        if let Some(note) = row.note {
            println!("           note: {note}");
        }
    }
}
