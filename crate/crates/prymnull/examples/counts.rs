//! Parity counts and boundary-fiber degrees.
//!
//! Run with: cargo run --example counts

use num::{BigUint, One};
use prymnull::counting::{boundary_degree_r, boundary_degree_s, count_table};
use prymnull::BasisClass;

fn main() {
    println!("genus |      #S+      #S-    #R_g       N+       N-      N+-");
    for g in 1..=8 {
        let t = count_table(g).unwrap();
        println!(
            "{:5} | {:8} {:8} {:7} {:8} {:8} {:8}",
            g, t.s_plus, t.s_minus, t.prym_roots, t.n_plus, t.n_minus, t.n_pm
        );
    }

    // The fibers of the Prym cover over a boundary divisor partition its
    // degree 2^{2g} - 1.
    let g = 5u32;
    println!("\nfiber degrees over the boundary of the Prym cover, g={g}:");
    for i in 1..g {
        let dn = boundary_degree_r(g, &BasisClass::DeltaN(i)).unwrap();
        let dt = boundary_degree_r(g, &BasisClass::DeltaT(i)).unwrap();
        let dp = boundary_degree_r(g, &BasisClass::DeltaP(i)).unwrap();
        let total = &dn + &dt + &dp;
        println!("  over Delta_{i}: n={dn} t={dt} p={dp}  (sum {total})");
    }
    let dt = boundary_degree_r(g, &BasisClass::Delta0T).unwrap();
    let dp = boundary_degree_r(g, &BasisClass::Delta0P).unwrap();
    let db = boundary_degree_r(g, &BasisClass::Delta0B).unwrap();
    let total = &dt + &dp + BigUint::from(2u32) * &db;
    println!("  over Delta_0: t={dt} p={dp} b={db}  (t + p + 2b = {total})");
    assert_eq!(total, (BigUint::one() << (2 * g)) - 1u32);

    println!("\nspin fiber degrees over Delta_1, g={g}:");
    let sp = boundary_degree_s(g, &BasisClass::DeltaPlus(1)).unwrap();
    let sm = boundary_degree_s(g, &BasisClass::DeltaMinus(1)).unwrap();
    println!("  plus={sp} minus={sm}  (sum {} = 2 * #S+)", &sp + &sm);
}
