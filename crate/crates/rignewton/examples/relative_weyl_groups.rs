//! Rational relative Weyl groups: stabilizer cosets of a stable Levi
//! subsystem fixed by the Galois action.
//!
//! Run with: cargo run -p rignewton --example relative_weyl_groups

use rignewton::galois::{build_action, relative_weyl_f};
use rignewton::linalg::{int, IntMatrix};
use rignewton::rootdata::{build_root_datum, weyl_group, Family, Isogeny, Subsystem};

fn main() {
    // the anisotropic torus of SL2: the whole Weyl group is rational
    // because inversion is central in GL(X_*)
    let sl2 = build_root_datum(Family::A, 1, Isogeny::SimplyConnected).unwrap();
    let inv = build_action(&sl2, &[IntMatrix::identity(1).neg()]).unwrap();
    let r = relative_weyl_f(&sl2, &Subsystem::empty(), &inv).unwrap();
    println!(
        "SL2 torus under inversion: |W| = {}, fixed cosets = {}",
        r.ambient_weyl_order,
        r.f_rational_elements.len()
    );

    // A2 with the outer involution -w0: the fixed subgroup of S3 under the
    // induced conjugation has order 2
    let a2 = build_root_datum(Family::A, 2, Isogeny::SimplyConnected).unwrap();
    let w = weyl_group(&a2).unwrap();
    let positives = a2.lex_positive_roots();
    let w0 = w
        .iter()
        .find(|m| {
            let perm = a2.root_permutation(m).unwrap();
            positives.iter().all(|&p| !positives.contains(&perm[p]))
        })
        .unwrap();
    let action = build_action(&a2, &[w0.neg()]).unwrap();
    let r = relative_weyl_f(&a2, &Subsystem::empty(), &action).unwrap();
    println!(
        "A2 torus under -w0: |W| = {}, fixed cosets = {}",
        r.ambient_weyl_order,
        r.f_rational_elements.len()
    );

    // a proper Levi of A2: an A1 line; its stabilizer cosets under the
    // trivial action give the full relative Weyl group
    let i = a2.index_of_root(&[int(2), int(-1)]).unwrap();
    let levi = Subsystem::new(vec![i, a2.negative_of(i)]);
    let trivial = build_action(&a2, &[]).unwrap();
    let r = relative_weyl_f(&a2, &levi, &trivial).unwrap();
    println!(
        "A2, A1 Levi, trivial action: stabilizer = {}, relative Weyl order = {}",
        r.stabilizer_order,
        r.f_rational_elements.len()
    );
}
