//! Enumerate level-n characters landing in the center of a Levi and test
//! each for Levi-suitability: the SL2 quarter sweep and a G2 sweep that
//! hits a non-Levi centralizer.
//!
//! Run with: cargo run -p rignewton --example levi_suitable_sweep

use rignewton::galois::build_action;
use rignewton::linalg::IntMatrix;
use rignewton::rootdata::{build_root_datum, Family, Isogeny, Subsystem};
use rignewton::tate::{group_by_relative_weyl, levi_suitable_characters};

fn main() {
    // SL2 with the anisotropic torus at level 4: classes with zeta^2 = 1
    // centralize all of SL2, the others centralize the torus, and all four
    // are Levi-suitable
    let sl2 = build_root_datum(Family::A, 1, Isogeny::SimplyConnected).unwrap();
    let inv = build_action(&sl2, &[IntMatrix::identity(1).neg()]).unwrap();
    println!("SL2, torus Levi, level 4:");
    let entries = levi_suitable_characters(&sl2, &Subsystem::empty(), &inv, 4).unwrap();
    for entry in &entries {
        println!(
            "  nu = {:<10} centralizer {:<6} Levi-suitable: {}",
            entry.nu.to_string(),
            entry.report.type_gamma.to_string(),
            entry.levi_suitable
        );
    }
    // outputs are taken up to the rational relative Weyl group, which here
    // identifies k/4 with -k/4
    let orbits = group_by_relative_weyl(&sl2, &Subsystem::empty(), &inv, &entries).unwrap();
    println!("relative-Weyl orbits (by entry index): {orbits:?}");

    // G2 at level 2: the sweep includes the class whose centralizer is the
    // non-Levi A1xA1
    let g2 = build_root_datum(Family::G, 2, Isogeny::SimplyConnected).unwrap();
    let inv = build_action(&g2, &[IntMatrix::identity(2).neg()]).unwrap();
    println!("\nG2, torus Levi, level 2:");
    for entry in levi_suitable_characters(&g2, &Subsystem::empty(), &inv, 2).unwrap() {
        println!(
            "  nu = {:<14} centralizer {:<7} Levi-suitable: {}",
            entry.nu.to_string(),
            entry.report.type_gamma.to_string(),
            entry.levi_suitable
        );
    }
}
