//! The closed-form divisor classes: JSON and LaTeX renderings, plus the
//! two double-checks (even + odd = total, total = pullback).
//!
//! Run with: cargo run --example known_classes

use prymnull::known_classes::{
    mnull_class, prym_null_even, prym_null_odd, prym_null_total, theta_null_class,
};
use prymnull::latex::class_to_latex;
use prymnull::{pullback_r, Genus};

fn main() {
    let genus = Genus::new(5).unwrap();

    let even = prym_null_even(genus);
    let odd = prym_null_odd(genus);
    println!("even Prym-null class, g=5:");
    println!("{}", serde_json::to_string_pretty(&even.to_json()).unwrap());
    println!("\nLaTeX, common factor 2^(g-3) pulled out:");
    println!("  {}", class_to_latex(&even, Some(2)));
    println!("  {}", class_to_latex(&odd, Some(2)));

    println!("\ntheta-null class on the spin side:");
    println!("  {}", class_to_latex(&theta_null_class(genus), None));

    // The two consistency routes.
    let total = prym_null_total(genus);
    let sum = even.checked_add(&odd).unwrap();
    println!("\neven + odd == total: {}", sum == total);
    let pulled = pullback_r(&mnull_class(genus)).unwrap();
    println!("total == pullback of the theta-null pushforward: {}", total == pulled);
}
