//! Acceptance suite: one test per criterion, each printing a PASS/FAIL line
//! (visible with `cargo test --test acceptance -- --nocapture`).
//!
//! Every identity is exact; tolerances appear only in the numerical root
//! oracle of criterion 7, which independently confirms the exact counts.

use std::collections::BTreeSet;
use std::panic;
use std::time::{Duration, Instant};

use num::{BigInt, BigRational, ToPrimitive};
use num_complex::Complex64;

use prymnull::arf::oracle_counts;
use prymnull::class_space::{basis, pullback_r, pullback_splus, ClassVector, Space, SpinPullback};
use prymnull::counting::count_table;
use prymnull::known_classes::{
    mnull_class, prym_null_even, prym_null_odd, theta_null_class,
};
use prymnull::quartic::{
    bitangent_count_check, discriminant, extract_quadric, restrict_to_tangent, PencilQuartic,
};
use prymnull::solver::assemble_and_verify;
use prymnull::test_curves::{catalog, mu, prym_null_numbers, row, CurveName};
use prymnull::{BasisClass, Genus};

fn criterion<F>(number: u32, description: &str, body: F)
where
    F: FnOnce() + panic::UnwindSafe,
{
    match panic::catch_unwind(body) {
        Ok(()) => println!("criterion {number} [{description}]: PASS"),
        Err(cause) => {
            println!("criterion {number} [{description}]: FAIL");
            panic::resume_unwind(cause);
        }
    }
}

fn genus(g: u32) -> Genus {
    Genus::new(g).unwrap()
}

fn int(n: i64) -> BigRational {
    BigRational::from_integer(BigInt::from(n))
}

#[test]
fn criterion_1_closed_form_reproduction() {
    criterion(1, "solver pipeline reproduces the even/odd classes exactly", || {
        let started = Instant::now();
        for g in 5..=12 {
            let report = assemble_and_verify(genus(g)).unwrap();
            assert!(
                report.even.matches_closed_form,
                "even mismatch at g={g}: {:?}",
                report.even.residuals
            );
            assert!(
                report.odd.matches_closed_form,
                "odd mismatch at g={g}: {:?}",
                report.odd.residuals
            );
            if g == 5 {
                assert_eq!(report.even.class.coeff(&BasisClass::Lambda), int(68));
                assert_eq!(report.even.class.coeff(&BasisClass::Delta0B), int(-17));
                assert_eq!(report.odd.class.coeff(&BasisClass::Delta0T), int(-16));
            }
        }
        let elapsed = started.elapsed();
        assert!(elapsed < Duration::from_secs(1), "pipeline took {elapsed:?}, budget 1 s");
    });
}

#[test]
fn criterion_2_sum_check() {
    criterion(2, "even + odd equals the pullback of the theta-null pushforward", || {
        for g in 5..=12 {
            let gn = genus(g);
            let sum = prym_null_even(gn).checked_add(&prym_null_odd(gn)).unwrap();
            assert_eq!(sum, pullback_r(&mnull_class(gn)).unwrap(), "g={g}");
        }
    });
}

#[test]
fn criterion_3_oracle_equivalence() {
    criterion(3, "brute-force enumeration matches the closed-form counts", || {
        let started = Instant::now();
        for g in 1..=5 {
            // `oracle_counts` re-derives the twist counts for every one of
            // the 2^{2g}−1 nonzero twist vectors and errors out if they
            // ever disagree, so a successful return certifies
            // eta-independence as well.
            let enumerated = oracle_counts(g).unwrap();
            let closed = count_table(g).unwrap();
            assert_eq!(enumerated, closed, "g={g}");
        }
        let g3 = oracle_counts(3).unwrap();
        assert_eq!(g3.s_plus, 36u32.into());
        assert_eq!(g3.s_minus, 28u32.into());
        let elapsed = started.elapsed();
        assert!(elapsed < Duration::from_secs(10), "enumeration took {elapsed:?}, budget 10 s");
    });
}

#[test]
fn criterion_4_table_adjunction() {
    criterion(4, "projection formula holds for every declared pushforward", || {
        for g in 5..=10 {
            let gn = genus(g);
            for curve in catalog(gn) {
                let (Some(m), Some(base_name)) =
                    (curve.pushforward_multiplicity.clone(), curve.base_curve)
                else {
                    continue;
                };
                let base = row(base_name, gn, curve.index).unwrap();
                for class in basis(gn, Space::M) {
                    let c = ClassVector::from_entries(gn, Space::M, [(class, int(1))]).unwrap();
                    assert_eq!(
                        curve.pair(&pullback_r(&c).unwrap()).unwrap(),
                        &m * base.pair(&c).unwrap(),
                        "{} over {} at g={g}",
                        curve.display_name(),
                        class
                    );
                }
            }
            // The even-spin lift checks out against the coarse convention.
            let y0n = row(CurveName::Y0n, gn, None).unwrap();
            let base = row(CurveName::Y, gn, None).unwrap();
            let m = y0n.pushforward_multiplicity.clone().unwrap();
            assert_eq!(y0n.spin_convention, Some(SpinPullback::Coarse));
            for class in basis(gn, Space::M) {
                let c = ClassVector::from_entries(gn, Space::M, [(class, int(1))]).unwrap();
                assert_eq!(
                    y0n.pair(&pullback_splus(&c, SpinPullback::Coarse).unwrap()).unwrap(),
                    &m * base.pair(&c).unwrap(),
                    "Y0n over {class} at g={g}"
                );
            }
        }
    });
}

#[test]
fn criterion_5_intersection_consistency() {
    criterion(5, "cataloged intersection numbers match the classes", || {
        for g in 5..=10 {
            let gn = genus(g);
            let even = prym_null_even(gn);
            let odd = prym_null_odd(gn);
            for curve in catalog(gn) {
                let numbers = prym_null_numbers(curve.name, gn, curve.index).unwrap();
                assert_eq!(
                    curve.pair(&even).unwrap(),
                    BigRational::from_integer(numbers.even.clone()),
                    "{} · even at g={g}",
                    curve.display_name()
                );
                assert_eq!(
                    curve.pair(&odd).unwrap(),
                    BigRational::from_integer(numbers.odd.clone()),
                    "{} · odd at g={g}",
                    curve.display_name()
                );
            }
        }
        let g5 = genus(5);
        let r = prym_null_numbers(CurveName::R, g5, None).unwrap();
        assert_eq!((r.even, r.odd), (BigInt::from(16), BigInt::from(32)));
        let y0 = prym_null_numbers(CurveName::Y0, g5, None).unwrap();
        assert_eq!((y0.even, y0.odd), (BigInt::from(0), BigInt::from(68)));
    });
}

#[test]
fn criterion_6_mu_recomputation() {
    criterion(6, "Y0n pairs with the theta-null class to mu(g)", || {
        for g in 5..=12 {
            let gn = genus(g);
            let y0n = row(CurveName::Y0n, gn, None).unwrap();
            let pairing = y0n.pair(&theta_null_class(gn)).unwrap();
            assert_eq!(pairing, BigRational::from_integer(mu(gn)), "g={g}");
            if g == 5 {
                assert_eq!(pairing, int(68));
            }
        }
    });
}

/// Durand-Kerner iteration on a monic complex polynomial; the independent
/// numerical oracle for criterion 7. Coefficients ascending.
fn numerical_roots(coeffs: &[f64]) -> Vec<Complex64> {
    let n = coeffs.len() - 1;
    let lead = coeffs[n];
    let monic: Vec<f64> = coeffs.iter().map(|c| c / lead).collect();
    let eval = |z: Complex64| {
        let mut acc = Complex64::new(0.0, 0.0);
        for &c in monic.iter().rev() {
            acc = acc * z + c;
        }
        acc
    };
    let bound = 1.0 + monic.iter().take(n).map(|c| c.abs()).fold(0.0, f64::max);
    let mut roots: Vec<Complex64> = (0..n)
        .map(|k| {
            let angle = 2.0 * std::f64::consts::PI * k as f64 / n as f64 + 0.37;
            Complex64::from_polar(bound.sqrt(), angle)
        })
        .collect();
    for _ in 0..2000 {
        let mut biggest_step = 0.0f64;
        for i in 0..n {
            let mut denom = Complex64::new(1.0, 0.0);
            for j in 0..n {
                if i != j {
                    denom *= roots[i] - roots[j];
                }
            }
            let step = eval(roots[i]) / denom;
            roots[i] -= step;
            biggest_step = biggest_step.max(step.norm());
        }
        if biggest_step < 1e-13 {
            break;
        }
    }
    roots
}

#[test]
fn criterion_7_quartic_discriminant() {
    criterion(7, "seeded pencils yield a squarefree octic discriminant", || {
        let started = Instant::now();
        // Twenty recorded seeds giving general pencils. Seed 2 is excluded:
        // its second quartic is singular at the basepoint (both tangent
        // coefficients vanish), so the tangent line degenerates and lambda0^6
        // divides its discriminant; the engine reports that case rather than
        // erroring, and a unit test pins it down.
        let seeds: Vec<u64> = (0..=20).filter(|&s| s != 2).collect();
        assert_eq!(seeds.len(), 20);
        for seed in seeds {
            let pencil = PencilQuartic::random(seed);
            let restriction = restrict_to_tangent(&pencil);
            assert!(restriction.term(4).is_zero(), "v^0 term nonzero at seed {seed}");
            assert!(restriction.term(3).is_zero(), "v^1 term nonzero at seed {seed}");

            let (c3, c4, c5) = extract_quadric(&restriction).unwrap();
            assert_eq!((c3.degree(), c4.degree(), c5.degree()), (3, 4, 5));

            let delta = discriminant(&c3, &c4, &c5).unwrap();
            assert_eq!(delta.degree(), 8, "seed {seed}");
            assert_eq!(
                delta.dehomogenized_degree(),
                Some(8),
                "leading coefficient vanished at seed {seed}"
            );
            assert_eq!(
                delta.distinct_root_count().unwrap(),
                8,
                "exact squarefree count at seed {seed}"
            );

            // Independent numerical confirmation: 8 well-separated roots
            // with tiny normalized residuals.
            let coeffs: Vec<f64> =
                delta.coeffs().iter().map(|c| c.to_f64().unwrap()).collect();
            let roots = numerical_roots(&coeffs);
            assert_eq!(roots.len(), 8);
            let lead = coeffs[8];
            let monic: Vec<f64> = coeffs.iter().map(|c| c / lead).collect();
            for z in &roots {
                let mut value = Complex64::new(0.0, 0.0);
                for &c in monic.iter().rev() {
                    value = value * z + c;
                }
                let scale = z.norm().max(1.0).powi(8);
                let residual = value.norm() / scale;
                assert!(residual < 1e-9, "residual {residual:e} at seed {seed}");
            }
            let mut seen = BTreeSet::new();
            for (i, zi) in roots.iter().enumerate() {
                for zj in roots.iter().skip(i + 1) {
                    assert!(
                        (zi - zj).norm() > 1e-6,
                        "numerically coincident roots at seed {seed}"
                    );
                }
                seen.insert(i);
            }
            assert_eq!(seen.len(), 8);
        }
        for g in 5..=10 {
            assert!(bitangent_count_check(genus(g)), "bitangent count at g={g}");
        }
        let elapsed = started.elapsed();
        assert!(elapsed < Duration::from_secs(5), "quartic run took {elapsed:?}, budget 5 s");
    });
}
