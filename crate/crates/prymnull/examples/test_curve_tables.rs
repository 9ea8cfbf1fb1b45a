//! Test-curve intersection rows and their pairings with the Prym-null
//! classes.
//!
//! Run with: cargo run --example test_curve_tables

use prymnull::basis;
use prymnull::known_classes::{prym_null_even, prym_null_odd, theta_null_class};
use prymnull::test_curves::{catalog, prym_null_numbers, row, CurveName};
use prymnull::{Genus, Space};

fn main() {
    let genus = Genus::new(5).unwrap();

    // Print the full table for genus 5, one row per cataloged family.
    let labels = basis(genus, Space::R);
    let header: Vec<String> = labels.iter().map(|l| format!("{l:>6}")).collect();
    println!("genus 5 intersection table      {}      P+     P-", header.join(" "));
    let even = prym_null_even(genus);
    let odd = prym_null_odd(genus);
    for curve in catalog(genus) {
        let cells: Vec<String> =
            labels.iter().map(|l| format!("{:>6}", curve.row.coeff(l).to_string())).collect();
        println!(
            "{:>28}   {}   {:>5} {:>6}",
            curve.display_name(),
            cells.join(" "),
            curve.pair(&even).unwrap(),
            curve.pair(&odd).unwrap()
        );
    }

    // The cataloged numbers agree with the pairings above.
    let z0 = prym_null_numbers(CurveName::Z0, genus, None).unwrap();
    println!("\nZ0 cataloged numbers: even={} odd={}", z0.even, z0.odd);

    // The spin lift pairs with the theta-null class to mu(g).
    let y0n = row(CurveName::Y0n, genus, None).unwrap();
    println!(
        "Y0n . theta_null = {} (number of nodal fibers with a vanishing theta-null)",
        y0n.pair(&theta_null_class(genus)).unwrap()
    );
}
