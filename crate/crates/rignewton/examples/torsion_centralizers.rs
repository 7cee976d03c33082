//! Centralizer subsystems of torsion cocharacters: the G2 class whose
//! centralizer is an SO4 that is not a Levi subgroup.
//!
//! Run with: cargo run -p rignewton --example torsion_centralizers

use rignewton::galois::build_action;
use rignewton::linalg::{rat, IntMatrix};
use rignewton::newton::{centralizer_roots, gamma_centralizer, TorsionCocharacter};
use rignewton::rootdata::{build_root_datum, Family, Isogeny};

fn main() {
    let g2 = build_root_datum(Family::G, 2, Isogeny::SimplyConnected).unwrap();
    // an anisotropic torus split by a quadratic extension: Galois inverts
    let action = build_action(&g2, &[IntMatrix::identity(2).neg()]).unwrap();

    // the 2-torsion class pairing 1/2 with the short simple root a and 0
    // with the long simple root b
    let nu = TorsionCocharacter::new(&[rat(1, 2), rat(0, 1)]);
    println!("nu = {nu} at denominator {}", nu.denominator());

    let single = centralizer_roots(&g2, &nu);
    println!("roots pairing integrally with nu (by (a,b)-coefficients):");
    for &i in &single.root_indices {
        println!("  root #{i} = {:?}", g2.root(i));
    }

    let report = gamma_centralizer(&g2, &nu, &action).unwrap();
    println!("Cartan type: {}", report.type_gamma);
    println!(
        "cyclic witness (single = intersected): {}",
        report.is_cyclic_witness
    );
    println!("Levi subsystem: {}", report.is_levi_regular);
    println!();
    println!(
        "so the centralizer is an A1xA1 spanned by b and 2a+b: an SO4 inside G2 \
         that is not a twisted Levi subgroup"
    );

    // by contrast, the class along the coroot direction at denominator 2
    // centralizes everything on SL2
    let sl2 = build_root_datum(Family::A, 1, Isogeny::SimplyConnected).unwrap();
    let inv = build_action(&sl2, &[IntMatrix::identity(1).neg()]).unwrap();
    for k in 0..4 {
        let nu = TorsionCocharacter::new(&[rat(k, 4)]);
        let r = gamma_centralizer(&sl2, &nu, &inv).unwrap();
        println!("SL2, nu = k/4 with k = {k}: centralizer {}", r.type_gamma);
    }
}
