//! Galois actions on cocharacter lattices: norms, augmentation
//! sublattices, ellipticity, and rational relative Weyl groups.
//!
//! Run with: cargo run -p rignewton --example galois_actions

use rignewton::galois::{build_action, is_elliptic, norm_and_augmentation, relative_weyl_f};
use rignewton::linalg::IntMatrix;
use rignewton::rootdata::{build_root_datum, torus, Family, Isogeny, Subsystem};

fn main() {
    // the norm-one torus of a quadratic extension: Galois inverts
    let t1 = torus(1);
    let inv = build_action(&t1, &[IntMatrix::identity(1).neg()]).unwrap();
    let (norm, aug) = norm_and_augmentation(&inv);
    println!(
        "rank-1 inversion: |Gamma| = {}, N = {norm:?}, I*X = {aug:?}",
        inv.order()
    );

    // restriction of scalars of a quadratic extension: Galois swaps
    let t2 = torus(2);
    let swap = build_action(&t2, &[IntMatrix::from_i64(2, 2, &[0, 1, 1, 0])]).unwrap();
    let (norm, _) = norm_and_augmentation(&swap);
    println!("rank-2 swap: N = {norm:?}");

    // ellipticity of the inversion action on SL2 vs the split torus
    let sl2 = build_root_datum(Family::A, 1, Isogeny::SimplyConnected).unwrap();
    let inv = build_action(&sl2, &[IntMatrix::identity(1).neg()]).unwrap();
    let triv = build_action(&sl2, &[]).unwrap();
    println!("SL2 inversion elliptic: {}", is_elliptic(&sl2, &inv));
    println!("SL2 split torus elliptic: {}", is_elliptic(&sl2, &triv));

    // the rational relative Weyl group of the anisotropic torus of SL2 is
    // the full Weyl group: inversion is central in GL(X_*)
    let report = relative_weyl_f(&sl2, &Subsystem::empty(), &inv).unwrap();
    println!(
        "SL2 torus: |W| = {}, stabilizer = {}, Galois-fixed cosets = {}",
        report.ambient_weyl_order,
        report.stabilizer_order,
        report.f_rational_elements.len()
    );

    // G2 under inversion is elliptic because -1 lies in W(G2)
    let g2 = build_root_datum(Family::G, 2, Isogeny::SimplyConnected).unwrap();
    let inv = build_action(&g2, &[IntMatrix::identity(2).neg()]).unwrap();
    println!("G2 inversion elliptic: {}", is_elliptic(&g2, &inv));
}
