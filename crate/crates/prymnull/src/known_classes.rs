//! The closed-form divisor classes this crate computes against: the
//! theta-null class on `S̄_g⁺`, its pushforward class on `M̄_g`, and the
//! total, even and odd Prym-null classes on `R̄_g`.
//!
//! The even/odd expansions use the index bound `k = ⌈g/2⌉ − 1` and the
//! parity indicator `ψ(g)`: for even g the summation stops one index short
//! of g/2 and a separate pair of δ_{g/2}^n, δ_{g/2}^p terms is added, since
//! the canonical basis has no δ_{g/2}^t.

use num::BigRational;

use crate::class_space::{BasisClass, ClassVector, Genus, Space};
use crate::rat::{int, pow2};

/// Index bound `k = ⌈g/2⌉ − 1`: equals ⌊g/2⌋ for odd g and ⌊g/2⌋ − 1 for
/// even g. Not to be confused with the Prym-root count `k` used by the
/// irreducible-nodal test curves.
pub fn k_bound(g: u32) -> u32 {
    g.div_ceil(2) - 1
}

/// Parity indicator ψ(g) = (1 + (−1)^g)/2 ∈ {0, 1}.
pub fn psi(g: u32) -> u32 {
    u32::from(g % 2 == 0)
}

/// The theta-null class on `S̄_g⁺`:
/// `(1/4)λ − (1/16)δ_0^n − (1/2)Σ_{i=1}^{⌊g/2⌋} δ_i^-`.
pub fn theta_null_class(genus: Genus) -> ClassVector {
    let mut entries = vec![
        (BasisClass::Lambda, pow2(-2)),
        (BasisClass::Delta0N, -pow2(-4)),
    ];
    for i in 1..=genus.half() {
        entries.push((BasisClass::DeltaMinus(i), -pow2(-1)));
    }
    ClassVector::from_entries(genus, Space::SPlus, entries).expect("canonical basis entries")
}

/// The theta-null pushforward class on `M̄_g`:
/// `2^{g-3}((2^g + 1)λ − 2^{g-3}δ_0 − Σ_{i=1}^{⌊g/2⌋}(2^i − 1)(2^{g-i} − 1)δ_i)`.
pub fn mnull_class(genus: Genus) -> ClassVector {
    let g = genus.get() as i64;
    let lead = pow2(g - 3);
    let mut entries = vec![
        (BasisClass::Lambda, &lead * (pow2(g) + int(1))),
        (BasisClass::Delta(0), -(&lead * pow2(g - 3))),
    ];
    for i in 1..=genus.half() {
        let c = (pow2(i as i64) - int(1)) * (pow2(g - i as i64) - int(1));
        entries.push((BasisClass::Delta(i), -(&lead * c)));
    }
    ClassVector::from_entries(genus, Space::M, entries).expect("canonical basis entries")
}

/// The total Prym-null class on `R̄_g`, written out directly:
/// `2^{g-3}((2^g + 1)λ − 2^{g-3}(δ_0^t + δ_0^p + 2δ_0^b)
///  − Σ_{i=1}^{k}(2^i − 1)(2^{g-i} − 1)(δ_i^n + δ_i^t + δ_i^p)
///  − ψ(g)(2^{g/2} − 1)²(δ_{g/2}^n + δ_{g/2}^p))`.
///
/// This must agree with `pullback_r(mnull_class(g))`, which gives the class
/// by an independent route; the equality is asserted in the test suites.
pub fn prym_null_total(genus: Genus) -> ClassVector {
    let g = genus.get() as i64;
    let lead = pow2(g - 3);
    let d0 = &lead * pow2(g - 3);
    let mut entries = vec![
        (BasisClass::Lambda, &lead * (pow2(g) + int(1))),
        (BasisClass::Delta0T, -d0.clone()),
        (BasisClass::Delta0P, -d0.clone()),
        (BasisClass::Delta0B, -(d0 * int(2))),
    ];
    for i in 1..=k_bound(genus.get()) {
        let c = &lead * (pow2(i as i64) - int(1)) * (pow2(g - i as i64) - int(1));
        entries.push((BasisClass::DeltaN(i), -c.clone()));
        entries.push((BasisClass::DeltaT(i), -c.clone()));
        entries.push((BasisClass::DeltaP(i), -c));
    }
    if genus.is_even() {
        let h = genus.half();
        let root = pow2(h as i64) - int(1);
        let c = &lead * (&root * &root);
        entries.push((BasisClass::DeltaN(h), -c.clone()));
        entries.push((BasisClass::DeltaP(h), -c));
    }
    ClassVector::from_entries(genus, Space::R, entries).expect("canonical basis entries")
}

/// Coefficients shared by the even and odd expansions. `boundary(i)` gives
/// the positive (subtracted) coefficients on (δ_i^n, δ_i^t, δ_i^p) up to the
/// common factor 2^{g-3}; `d0` likewise for (δ_0^t, δ_0^p, δ_0^b); `lambda`
/// is the λ coefficient over the same factor.
struct Expansion {
    lambda: BigRational,
    d0: (BigRational, BigRational, BigRational),
    boundary: Box<dyn Fn(i64) -> (BigRational, BigRational, BigRational)>,
}

fn prym_null_from(genus: Genus, e: Expansion) -> ClassVector {
    let g = genus.get();
    let lead = pow2(g as i64 - 3);
    let (d0t, d0p, d0b) = e.d0;
    let mut entries = vec![
        (BasisClass::Lambda, &lead * e.lambda),
        (BasisClass::Delta0T, -(&lead * d0t)),
        (BasisClass::Delta0P, -(&lead * d0p)),
        (BasisClass::Delta0B, -(&lead * d0b)),
    ];
    for i in 1..=k_bound(g) {
        let (n, t, p) = (e.boundary)(i as i64);
        entries.push((BasisClass::DeltaN(i), -(&lead * n)));
        entries.push((BasisClass::DeltaT(i), -(&lead * t)));
        entries.push((BasisClass::DeltaP(i), -(&lead * p)));
    }
    if genus.is_even() {
        let h = genus.half();
        let (n, _, p) = (e.boundary)(h as i64);
        entries.push((BasisClass::DeltaN(h), -(&lead * n)));
        entries.push((BasisClass::DeltaP(h), -(&lead * p)));
    }
    ClassVector::from_entries(genus, Space::R, entries).expect("canonical basis entries")
}

/// The even Prym-null class on `R̄_g`:
/// `2^{g-3}((2^{g-1} + 1)λ − (1/4)(2^{g-2}δ_0^p + (2^{g-1} + 1)δ_0^b)
///  − Σ((2^{i-1} − 1)(2^{g-i} − 1)δ_i^n + (2^i − 1)(2^{g-i-1} − 1)δ_i^t
///     + (2^{g-1} − 2^{i-1} − 2^{g-i-1} + 1)δ_i^p))`,
/// with the i = g/2 terms restricted to n and p for even g.
pub fn prym_null_even(genus: Genus) -> ClassVector {
    let g = genus.get() as i64;
    prym_null_from(
        genus,
        Expansion {
            lambda: pow2(g - 1) + int(1),
            d0: (
                int(0),
                pow2(-2) * pow2(g - 2),
                pow2(-2) * (pow2(g - 1) + int(1)),
            ),
            boundary: Box::new(move |i| {
                (
                    (pow2(i - 1) - int(1)) * (pow2(g - i) - int(1)),
                    (pow2(i) - int(1)) * (pow2(g - i - 1) - int(1)),
                    pow2(g - 1) - pow2(i - 1) - pow2(g - i - 1) + int(1),
                )
            }),
        },
    )
}

/// The odd Prym-null class on `R̄_g`:
/// `2^{g-3}(2^{g-1}λ − (1/4)(2^{g-1}δ_0^t + 2^{g-2}δ_0^p + (2^{g-1} − 1)δ_0^b)
///  − Σ(2^{i-1}(2^{g-i} − 1)δ_i^n + (2^i − 1)2^{g-i-1}δ_i^t
///     + (2^{g-1} − 2^{i-1} − 2^{g-i-1})δ_i^p))`,
/// with the i = g/2 terms restricted to n and p for even g.
pub fn prym_null_odd(genus: Genus) -> ClassVector {
    let g = genus.get() as i64;
    prym_null_from(
        genus,
        Expansion {
            lambda: pow2(g - 1),
            d0: (
                pow2(-2) * pow2(g - 1),
                pow2(-2) * pow2(g - 2),
                pow2(-2) * (pow2(g - 1) - int(1)),
            ),
            boundary: Box::new(move |i| {
                (
                    pow2(i - 1) * (pow2(g - i) - int(1)),
                    (pow2(i) - int(1)) * pow2(g - i - 1),
                    pow2(g - 1) - pow2(i - 1) - pow2(g - i - 1),
                )
            }),
        },
    )
}
