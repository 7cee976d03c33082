//! Root data for the classical families, Weyl groups, and exhaustive
//! closed-subsystem search, including the Sp8 embedding obstruction.
//!
//! Run with: cargo run -p rignewton --example weyl_and_subsystems

use rignewton::rootdata::{
    build_root_datum, closed_subsystems_of_type, is_levi_subsystem, parse_cartan_type, weyl_group,
    Family, Isogeny,
};

fn main() {
    for (family, rank) in [(Family::A, 2), (Family::C, 4), (Family::G, 2)] {
        let datum = build_root_datum(family, rank, Isogeny::SimplyConnected).unwrap();
        let w = weyl_group(&datum).unwrap();
        println!(
            "{}: {} roots, |W| = {}",
            datum.label,
            datum.num_roots(),
            w.len()
        );
    }

    // Sp4 x Sp4 sits inside Sp8 as the centralizer of an involution, so the
    // C-side root system C4 has closed C2xC2 subsystems...
    let c4 = build_root_datum(Family::C, 4, Isogeny::SimplyConnected).unwrap();
    let target = parse_cartan_type("C2xC2").unwrap();
    let inside_c4 = closed_subsystems_of_type(&c4, &target).unwrap();
    println!(
        "closed C2xC2 inside C4: {} (the coordinate pairings)",
        inside_c4.len()
    );
    for sub in &inside_c4 {
        println!(
            "  indices {:?}, Levi: {}",
            sub.root_indices,
            is_levi_subsystem(&c4, sub).unwrap()
        );
    }

    // ...but the dual group SO9 has root system B4, and there the search
    // comes back empty: SO5 x SO5 does not embed into SO9
    let b4 = build_root_datum(Family::B, 4, Isogeny::Adjoint).unwrap();
    let inside_b4 = closed_subsystems_of_type(&b4, &target).unwrap();
    println!("closed C2xC2 = B2xB2 inside B4: {}", inside_b4.len());

    // positive control: orthogonal A1 pairs inside A3
    let a3 = build_root_datum(Family::A, 3, Isogeny::SimplyConnected).unwrap();
    let a1a1 = parse_cartan_type("A1xA1").unwrap();
    println!(
        "closed A1xA1 inside A3: {}",
        closed_subsystems_of_type(&a3, &a1a1).unwrap().len()
    );
}
