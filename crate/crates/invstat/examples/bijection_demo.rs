//! Walk through each structural map: RSK and tableau transposition, the
//! binary-word encoding of the 321 class, the descent-set encodings of the
//! 213 and 132 classes, the cycle-removal decomposition of the 123 class,
//! and the ascent-to-descent recursion from the 132 class to the 213 class.
//!
//! Run with: `cargo run --example bijection_demo`

use invstat::bijections;
use invstat::perm::perm;
use invstat::syt;
use invstat::words;

fn main() {
    // RSK: an involution has equal insertion and recording tableaux, and the
    // tableau descents are the involution's descents.
    let iota = perm("21785634");
    let t = syt::involution_tableau(&iota).unwrap();
    println!("RSK tableau of {iota}: {t}");
    println!("  tableau descents {:?} = involution descents {:?}", t.des_set(), iota.stats().des_set);

    // Transposing the tableau swaps avoidance of 123 and 321.
    let image = syt::transpose_involution(&iota).unwrap();
    println!("  transpose image: {image}");

    // The 321 class is encoded by binary words; descents line up exactly.
    let iota = perm("132458967");
    let w = words::phi_321(&iota).unwrap();
    println!("\nword encoding of {iota}: {w}");
    println!("  word descent set {:?}, maj {}", w.des_set(), w.maj());
    assert_eq!(words::phi_321_inverse(&w).unwrap(), iota);

    // The 213 and 132 classes are determined by their descent sets; the two
    // encodings are linked by set complementation, so maj values pair up to
    // C(n, 2).
    let iota = perm("798456132");
    let a = bijections::varphi_213(&iota).unwrap();
    let image = bijections::transfer_213_to_132(&iota).unwrap();
    println!("\ndescent set of 213-avoiding {iota}: {a:?}");
    println!("  complementary 132-avoiding partner: {image} with descent set {:?}", image.stats().des_set);
    println!("  maj {} + maj {} = {}", iota.stats().maj, image.stats().maj, iota.stats().maj + image.stats().maj);

    // A 123-avoiding involution unwinds into a sequence of removed cycle
    // openers; the sequence determines coinv.
    let iota = perm("653421");
    let seq = bijections::decompose_123(&iota).unwrap();
    println!("\ncycle-removal record of {iota}: family {:?}, m = {}, entries {:?}", seq.family, seq.m, seq.entries);
    assert_eq!(bijections::rebuild_123(&seq).unwrap(), iota);

    // theta maps the 132 class onto the 213 class turning ascent sets into
    // descent sets, and commutes with inversion.
    for s in ["41235", "6745213"] {
        let sigma = perm(s);
        let image = bijections::theta(&sigma).unwrap();
        println!("\ntheta({sigma}) = {image}");
        println!("  ascent set {:?} -> descent set {:?}", sigma.stats().asc_set, image.stats().des_set);
        assert_eq!(bijections::theta_inverse(&image).unwrap(), sigma);
    }
}
