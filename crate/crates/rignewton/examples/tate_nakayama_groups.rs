//! Finite-level Tate-Nakayama groups of tori and the band-image
//! membership criterion.
//!
//! Run with: cargo run -p rignewton --example tate_nakayama_groups

use rignewton::galois::build_action;
use rignewton::linalg::{int, rat, IntMatrix};
use rignewton::newton::TorsionCocharacter;
use rignewton::rootdata::torus;
use rignewton::tate::{band_image_contains, tn_group_torus};

fn main() {
    // the norm-one torus of a quadratic extension: ker(N)/I*(nX) at n = 2
    // is cyclic of order 4
    let t1 = torus(1);
    let inv = build_action(&t1, &[IntMatrix::identity(1).neg()]).unwrap();
    for n in 1i64..=4 {
        let result = tn_group_torus(1, &inv, &int(n)).unwrap();
        println!("norm-one torus, level {n}: {}", result.group);
    }

    // restriction of scalars (swap action) at level 2 gives Z/2
    let t2 = torus(2);
    let swap = build_action(&t2, &[IntMatrix::from_i64(2, 2, &[0, 1, 1, 0])]).unwrap();
    let result = tn_group_torus(2, &swap, &int(2)).unwrap();
    println!(
        "Res torus, level 2: {} (kernel basis {:?})",
        result.group, result.kernel_basis
    );

    // band image: under inversion the norm vanishes, so every torsion
    // class has a norm-killed lift
    let nu = TorsionCocharacter::new(&[rat(3, 4)]);
    let (ok, witness) = band_image_contains(&t1, &inv, &nu);
    println!("inversion, nu = 3/4: in image = {ok}, witness = {witness:?}");

    // with the trivial action the norm is the identity and 1/2 is not in
    // the image
    let triv = build_action(&t1, &[]).unwrap();
    let nu = TorsionCocharacter::new(&[rat(1, 2)]);
    let (ok, _) = band_image_contains(&t1, &triv, &nu);
    println!("trivial action, nu = 1/2: in image = {ok}");
}
