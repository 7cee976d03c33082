//! Alcove normalization: walk a rational cocharacter into the closed
//! fundamental alcove and read off the facet index set.
//!
//! Run with: cargo run -p rignewton --example alcove_walk

use rignewton::linalg::rat;
use rignewton::newton::alcove_normalize;
use rignewton::rootdata::{base_and_highest, build_root_datum, Family, Isogeny};

fn main() {
    let g2 = build_root_datum(Family::G, 2, Isogeny::SimplyConnected).unwrap();
    let base = base_and_highest(&g2, None).unwrap();
    println!(
        "G2 base: simple roots {:?}, highest root {:?}",
        base.simple_roots, base.highest_roots
    );

    let lift = vec![rat(7, 3), rat(-5, 4)];
    let form = alcove_normalize(&g2, &base, &lift).unwrap();
    println!("lift ({}, {})", lift[0], lift[1]);
    println!("normalized point: ({}, {})", form.point[0], form.point[1]);
    println!("affine word ({} steps):", form.affine_word.len());
    for step in &form.affine_word {
        println!("  reflect in root #{} at level {}", step.root, step.level);
    }
    println!("facet vertices: {:?}", form.facet_indices);
    // replaying the recorded word reproduces the normal form exactly
    assert_eq!(form.apply_word(&g2, &lift), form.point);

    // normalizing again is a fixed point
    let again = alcove_normalize(&g2, &base, &form.point).unwrap();
    assert!(again.affine_word.is_empty());

    // a vertex of the alcove has the full facet set
    let sl2 = build_root_datum(Family::A, 1, Isogeny::SimplyConnected).unwrap();
    let base = base_and_highest(&sl2, None).unwrap();
    for lift in [vec![rat(0, 1)], vec![rat(1, 2)], vec![rat(1, 4)]] {
        let form = alcove_normalize(&sl2, &base, &lift).unwrap();
        println!(
            "SL2 point {}: {} facet vertices",
            form.point[0],
            form.facet_indices.len()
        );
    }
}
