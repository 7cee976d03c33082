//! Exact integer linear algebra: Smith normal form, saturated kernels,
//! lattice solving, and finite abelian quotients.
//!
//! Run with: cargo run -p rignewton --example smith_normal_form

use rignewton::linalg::{
    cokernel_invariants, kernel_basis, saturate, snf, solve_in_lattice, IntMatrix,
};

fn main() {
    let a = IntMatrix::from_i64(2, 3, &[2, 4, 4, -6, 6, 12]);
    println!("A = {a:?}");

    let s = snf(&a);
    println!("Smith form D = {:?}", s.d);
    println!("U A V = D holds: {}", s.u.mul(&a).mul(&s.v) == s.d);
    println!("det U = {}, det V = {}", s.u.det(), s.v.det());

    // saturated integer kernel
    let k = kernel_basis(&a);
    println!("kernel basis: {k:?}");

    // solve A x = b over the integers
    let b = [2i64, 6].map(i64::into).to_vec();
    match solve_in_lattice(&a, &b) {
        Some(x) => println!("A x = (2, 6) has integral solution x = {x:?}"),
        None => println!("A x = (2, 6) has no integral solution"),
    }

    // the quotient Z^2 / <(2,0), (0,3)> collapses to one cyclic factor
    let gens = IntMatrix::from_i64(2, 2, &[2, 0, 0, 3]);
    let quotient = cokernel_invariants(2, &gens).unwrap();
    println!("Z^2 / <(2,0),(0,3)> = {quotient}");

    // saturation replaces (2,4) by the primitive (1,2)
    let sub = IntMatrix::from_i64(2, 1, &[2, 4]);
    println!("saturation of span{{(2,4)}}: {:?}", saturate(&sub));
}
