//! The quartic-pencil computation: restrict a pencil of plane quartics to
//! the tangent line at a basepoint, extract the residual quadric and count
//! the roots of its octic discriminant.
//!
//! Run with: cargo run --example quartic_discriminant

use prymnull::quartic::{
    bitangent_count_check, discriminant, extract_quadric, restrict_to_tangent, PencilQuartic,
};
use prymnull::Genus;

fn main() {
    let pencil = PencilQuartic::random(7);
    let restriction = restrict_to_tangent(&pencil);
    println!(
        "v^0 and v^1 terms vanish identically: {}",
        restriction.term(4).is_zero() && restriction.term(3).is_zero()
    );

    let (c3, c4, c5) = extract_quadric(&restriction).unwrap();
    println!(
        "quadric coefficient degrees in lambda: ({}, {}, {})",
        c3.degree(),
        c4.degree(),
        c5.degree()
    );

    let delta = discriminant(&c3, &c4, &c5).unwrap();
    println!("discriminant degree: {}", delta.degree());
    let coeffs: Vec<String> = delta.coeffs().iter().map(|c| c.to_string()).collect();
    println!("coefficients (ascending lambda0 power): [{}]", coeffs.join(", "));
    println!("distinct projective roots: {}", delta.distinct_root_count().unwrap());

    // Those 8 roots, times the parity-change counts three genera down,
    // reproduce the quartic-tail intersection numbers.
    for g in 5..=8 {
        println!("bitangent count check, g={g}: {}", bitangent_count_check(Genus::new(g).unwrap()));
    }
}
