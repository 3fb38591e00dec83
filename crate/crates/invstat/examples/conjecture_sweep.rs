//! Run the equidistribution sweeps: Wilf-style classification of patterns
//! by the inv and maj distributions over involutions, the reversal symmetry
//! for layered pattern pairs, and the near-coincidence of two length-6
//! patterns that only separates at size 8.
//!
//! Run with: `cargo run --release --example conjecture_sweep`

use invstat::conjectures;
use invstat::oracle::{Oracle, Population};

fn main() {
    let oracle = Oracle::new();

    println!("inv equivalence classes over involutions (patterns up to length 3, sizes <= 7):");
    print!("{}", conjectures::inv_wilf_sweep(&oracle, 3, 7).unwrap());

    println!("\nmaj equivalence classes over involutions (patterns up to length 3, sizes <= 7):");
    print!("{}", conjectures::maj_wilf_sweep(&oracle, 3, 7).unwrap());

    println!("\nreversal symmetry of maj for layered pattern pairs (sizes <= 6):");
    print!(
        "{}",
        conjectures::reversal_symmetry_sweep(&oracle, Population::Involutions, 4, 6).unwrap()
    );

    println!("\nmaj-equidistributed inflation pairs over all permutations (sizes <= 6):");
    print!("{}", conjectures::corollary_pairs_sweep(&oracle, 2, 2, 6).unwrap());

    println!("\nthe length-6 near-coincidence:");
    let check = conjectures::inv_wilf_length6_split(&oracle).unwrap();
    println!("  {}: {}", check.label, check.detail);
}
