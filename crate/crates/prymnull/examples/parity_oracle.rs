//! Brute-force check of the parity counts: enumerate all quadratic
//! refinements of the symplectic form on GF(2)^{2g}, classify them by Arf
//! invariant, and compare with the closed formulas.
//!
//! Run with: cargo run --example parity_oracle

use prymnull::arf::{oracle_counts, QuadraticForm, SymplecticSpace};
use prymnull::counting::count_table;

fn main() {
    for g in 1..=4 {
        let enumerated = oracle_counts(g).unwrap();
        let closed = count_table(g).unwrap();
        let verdict = if enumerated == closed { "MATCH" } else { "MISMATCH" };
        println!(
            "g={g}: enum (S+={}, S-={}, N+={}, N-={}, N+-={})  closed form: {verdict}",
            enumerated.s_plus,
            enumerated.s_minus,
            enumerated.n_plus,
            enumerated.n_minus,
            enumerated.n_pm
        );
    }

    // A single twist, spelled out: fix one even form at g=2 and watch its
    // parity flip under q(x) + <x, eta>.
    let space = SymplecticSpace::new(2).unwrap();
    let q = QuadraticForm::new(space, 0b0000);
    println!("\ng=2, q = zero form (arf {}):", q.arf());
    for eta in [0b0001u64, 0b0011, 0b0101, 0b1111] {
        let twisted = q.twist(eta).unwrap();
        println!("  twist by {eta:04b} -> arf {}", twisted.arf());
    }
}
