//! Rederivation of the even and odd Prym-null class coefficients from
//! test-curve data alone.
//!
//! Every cataloged family T imposes one linear relation on the unknown
//! coefficients of the expansion `ρ^± = λ^±·λ − Σ_b δ_b^±·b`, namely
//! `pair(T, ρ^±) = T · P̄^±`. The pipeline mirrors the order in which the
//! relations become single-unknown:
//!
//! 1. the reducible-nodal families `F_i/G_i/H_i` each meet exactly one
//!    generating class, so they pin the δ_i coefficients outright
//!    (`G_{g-1}/F_{g-1}/H_{g-1}` cover i = 1);
//! 2. the irreducible-nodal family `Y0` then determines δ_0^t;
//! 3. the elliptic-tail pencils `F0/G0/H0` leave a 3×3 system for
//!    (λ, δ_0^p, δ_0^b), solved by exact Gaussian elimination.
//!
//! The assembled classes are compared coefficientwise against the closed
//! forms in [`crate::known_classes`]; everything is exact rational
//! arithmetic, so the verdicts are equalities, not approximations.

use std::collections::BTreeMap;
use std::fmt;

use num::{BigInt, BigRational, One, Zero};

use crate::class_space::{basis, BasisClass, ClassVector, Genus, Space};
use crate::known_classes::{prym_null_even, prym_null_odd, prym_null_total};
use crate::test_curves::{prym_null_numbers, row, CurveName, PrymNullPair};
use crate::{Error, Result};

/// Which Prym-null divisor a relation refers to.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Parity {
    Even,
    Odd,
}

impl Parity {
    pub fn as_str(self) -> &'static str {
        match self {
            Parity::Even => "even",
            Parity::Odd => "odd",
        }
    }

    pub fn select(self, pair: &PrymNullPair) -> BigInt {
        match self {
            Parity::Even => pair.even.clone(),
            Parity::Odd => pair.odd.clone(),
        }
    }
}

impl fmt::Display for Parity {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

/// A square exact-rational linear system.
#[derive(Debug, Clone)]
pub struct LinearSystem {
    pub matrix: Vec<Vec<BigRational>>,
    pub rhs: Vec<BigRational>,
    pub unknowns: Vec<String>,
}

impl LinearSystem {
    pub fn new(
        matrix: Vec<Vec<BigRational>>,
        rhs: Vec<BigRational>,
        unknowns: Vec<String>,
    ) -> Self {
        let n = matrix.len();
        assert!(matrix.iter().all(|r| r.len() == n), "matrix must be square");
        assert_eq!(rhs.len(), n);
        assert_eq!(unknowns.len(), n);
        LinearSystem { matrix, rhs, unknowns }
    }

    /// Forward elimination shared by `determinant` and `solve`. Pivoting
    /// takes the first row with a nonzero entry; exactness makes the choice
    /// irrelevant to the result, fixed for determinism.
    fn eliminate(&self) -> (Vec<Vec<BigRational>>, Vec<BigRational>, BigRational) {
        let n = self.matrix.len();
        let mut m = self.matrix.clone();
        let mut b = self.rhs.clone();
        let mut det = BigRational::one();
        for col in 0..n {
            let Some(pivot) = (col..n).find(|&r| !m[r][col].is_zero()) else {
                return (m, b, BigRational::zero());
            };
            if pivot != col {
                m.swap(pivot, col);
                b.swap(pivot, col);
                det = -det;
            }
            det *= m[col][col].clone();
            for r in col + 1..n {
                if m[r][col].is_zero() {
                    continue;
                }
                let factor = &m[r][col] / &m[col][col];
                for c in col..n {
                    let delta = &factor * &m[col][c];
                    m[r][c] -= delta;
                }
                let delta = &factor * &b[col];
                b[r] -= delta;
            }
        }
        (m, b, det)
    }

    pub fn determinant(&self) -> BigRational {
        self.eliminate().2
    }

    /// Exact solution by Gaussian elimination with back-substitution.
    pub fn solve(&self) -> Result<Vec<BigRational>> {
        let n = self.matrix.len();
        let (m, b, det) = self.eliminate();
        if det.is_zero() {
            return Err(Error::SingularSystem);
        }
        let mut x = vec![BigRational::zero(); n];
        for r in (0..n).rev() {
            let mut acc = b[r].clone();
            for c in r + 1..n {
                acc -= &m[r][c] * &x[c];
            }
            x[r] = acc / &m[r][r];
        }
        Ok(x)
    }
}

/// One solved coefficient together with the family whose relation pinned it.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SolvedCoeff {
    pub value: BigRational,
    pub source: String,
}

/// Derive one coefficient from a single-entry test-curve row: the relation
/// `−δ_b^±·(row entry) = T · P̄^±` has exactly one unknown.
fn pin(genus: Genus, parity: Parity, name: CurveName, i: u32) -> (BasisClass, SolvedCoeff) {
    let curve = row(name, genus, Some(i)).expect("indexed family in range");
    let mut entries = curve.row.iter();
    let (label, entry) = entries.next().expect("single-entry row");
    assert!(entries.next().is_none(), "F/G/H rows meet exactly one class");
    let inter = parity.select(&prym_null_numbers(name, genus, Some(i)).expect("cataloged"));
    let value = -BigRational::from_integer(inter) / entry;
    (*label, SolvedCoeff { value, source: curve.display_name() })
}

/// The δ_i coefficients for every i ≥ 1, each from the one reducible-nodal
/// family whose row meets it. Division is always by 2 − 2i with i ≥ 2 on
/// the used curves, so it never degenerates.
pub fn solve_boundary_coeffs(
    genus: Genus,
    parity: Parity,
) -> BTreeMap<BasisClass, SolvedCoeff> {
    let g = genus.get();
    let h = genus.half();
    let mut out = BTreeMap::new();
    // i = 1 has no families of its own; the index-(g−1) curves normalize
    // onto the i = 1 labels.
    for name in [CurveName::Gi, CurveName::Fi, CurveName::Hi] {
        let (label, solved) = pin(genus, parity, name, g - 1);
        out.insert(label, solved);
    }
    for i in 2..=h {
        let (label, solved) = pin(genus, parity, CurveName::Fi, i);
        out.insert(label, solved);
        if !(genus.is_even() && i == h) {
            let (label, solved) = pin(genus, parity, CurveName::Gi, i);
            out.insert(label, solved);
        }
        let (label, solved) = pin(genus, parity, CurveName::Hi, i);
        out.insert(label, solved);
    }
    out
}

/// δ_0^t from the `Y0` relation, once δ_1^n is known:
/// `−δ_0^t·(2−2g) − δ_1^n = Y0 · P̄^±`.
pub fn solve_d0t(genus: Genus, parity: Parity, d1n: &BigRational) -> BigRational {
    let curve = row(CurveName::Y0, genus, None).expect("Y0 row");
    let e0 = curve.row.coeff(&BasisClass::Delta0T);
    let e1 = curve.row.coeff(&BasisClass::DeltaN(1));
    let inter = parity.select(&prym_null_numbers(CurveName::Y0, genus, None).expect("cataloged"));
    -(BigRational::from_integer(inter) + d1n * e1) / e0
}

/// The 3×3 system imposed by the elliptic-tail pencils `F0`, `G0`, `H0` on
/// the remaining unknowns (λ, δ_0^p, δ_0^b). Each relation is normalized by
/// its λ entry and the already-solved coefficients move to the right-hand
/// side, which produces the matrix
/// `[[1, −12, 0], [1, 0, −4], [1, −4, −4]]` of determinant −16.
pub fn elliptic_tail_system(
    genus: Genus,
    parity: Parity,
    known: &BTreeMap<BasisClass, BigRational>,
) -> Result<LinearSystem> {
    let mut matrix = Vec::new();
    let mut rhs = Vec::new();
    for name in [CurveName::F0, CurveName::G0, CurveName::H0] {
        let curve = row(name, genus, None)?;
        let lambda_entry = curve.row.coeff(&BasisClass::Lambda);
        let inter = parity.select(&prym_null_numbers(name, genus, None)?);
        let mut coeff_p = BigRational::zero();
        let mut coeff_b = BigRational::zero();
        let mut b = BigRational::from_integer(inter) / &lambda_entry;
        for (label, entry) in curve.row.iter() {
            let scaled = entry / &lambda_entry;
            match label {
                BasisClass::Lambda => {}
                BasisClass::Delta0P => coeff_p = -scaled,
                BasisClass::Delta0B => coeff_b = -scaled,
                other => {
                    let value = known
                        .get(other)
                        .ok_or_else(|| Error::LabelNotInBasis { label: other.label() })?;
                    b += scaled * value;
                }
            }
        }
        matrix.push(vec![BigRational::one(), coeff_p, coeff_b]);
        rhs.push(b);
    }
    Ok(LinearSystem::new(
        matrix,
        rhs,
        vec!["lambda".to_string(), "d0_p".to_string(), "d0_b".to_string()],
    ))
}

/// Solve the elliptic-tail system for (λ, δ_0^p, δ_0^b).
pub fn solve_lambda_d0p_d0b(
    genus: Genus,
    parity: Parity,
    known: &BTreeMap<BasisClass, BigRational>,
) -> Result<(BigRational, BigRational, BigRational)> {
    let sol = elliptic_tail_system(genus, parity, known)?.solve()?;
    let [lambda, d0p, d0b]: [BigRational; 3] =
        sol.try_into().expect("three unknowns");
    Ok((lambda, d0p, d0b))
}

/// One solved-coefficient mismatch against the closed form.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Residual {
    pub class: BasisClass,
    pub solved: BigRational,
    pub expected: BigRational,
}

/// Outcome of the pipeline for one parity: the assembled class, which
/// family pinned each coefficient, and the comparison with the closed form.
#[derive(Debug, Clone)]
pub struct SolveReport {
    pub genus: Genus,
    pub parity: Parity,
    pub class: ClassVector,
    pub provenance: BTreeMap<BasisClass, String>,
    pub matches_closed_form: bool,
    pub residuals: Vec<Residual>,
}

/// Both parities plus the sum cross-check against the total class.
#[derive(Debug, Clone)]
pub struct VerifyReport {
    pub even: SolveReport,
    pub odd: SolveReport,
    pub sum_matches_total: bool,
}

impl VerifyReport {
    pub fn all_verified(&self) -> bool {
        self.even.matches_closed_form && self.odd.matches_closed_form && self.sum_matches_total
    }
}

fn solve_one(genus: Genus, parity: Parity) -> Result<SolveReport> {
    let boundary = solve_boundary_coeffs(genus, parity);
    let d1n = boundary
        .get(&BasisClass::DeltaN(1))
        .expect("pinned by the index g-1 curves")
        .value
        .clone();
    let d0t = solve_d0t(genus, parity, &d1n);

    let mut known: BTreeMap<BasisClass, BigRational> =
        boundary.iter().map(|(label, sc)| (*label, sc.value.clone())).collect();
    known.insert(BasisClass::Delta0T, d0t.clone());
    let (lambda, d0p, d0b) = solve_lambda_d0p_d0b(genus, parity, &known)?;

    let mut class = ClassVector::zero(genus, Space::R);
    let mut provenance = BTreeMap::new();
    class.set_coeff(BasisClass::Lambda, lambda)?;
    provenance.insert(BasisClass::Lambda, "F0/G0/H0 system".to_string());
    class.set_coeff(BasisClass::Delta0T, -d0t)?;
    provenance.insert(BasisClass::Delta0T, "Y0".to_string());
    class.set_coeff(BasisClass::Delta0P, -d0p)?;
    provenance.insert(BasisClass::Delta0P, "F0/G0/H0 system".to_string());
    class.set_coeff(BasisClass::Delta0B, -d0b)?;
    provenance.insert(BasisClass::Delta0B, "F0/G0/H0 system".to_string());
    for (label, sc) in boundary {
        class.set_coeff(label, -sc.value)?;
        provenance.insert(label, sc.source);
    }

    let expected = match parity {
        Parity::Even => prym_null_even(genus),
        Parity::Odd => prym_null_odd(genus),
    };
    let residuals: Vec<Residual> = basis(genus, Space::R)
        .into_iter()
        .filter_map(|label| {
            let solved = class.coeff(&label);
            let want = expected.coeff(&label);
            (solved != want).then_some(Residual { class: label, solved, expected: want })
        })
        .collect();

    Ok(SolveReport {
        genus,
        parity,
        matches_closed_form: residuals.is_empty(),
        residuals,
        class,
        provenance,
    })
}

/// Run the full pipeline for both parities and cross-check the sum against
/// the total class. Mismatches are reported in the result, never thrown.
pub fn assemble_and_verify(genus: Genus) -> Result<VerifyReport> {
    let even = solve_one(genus, Parity::Even)?;
    let odd = solve_one(genus, Parity::Odd)?;
    let sum = even.class.checked_add(&odd.class)?;
    let sum_matches_total = sum == prym_null_total(genus);
    Ok(VerifyReport { even, odd, sum_matches_total })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rat::int;

    fn g(n: u32) -> Genus {
        Genus::new(n).unwrap()
    }

    #[test]
    fn boundary_coefficient_examples() {
        let even = solve_boundary_coeffs(g(5), Parity::Even);
        assert_eq!(even[&BasisClass::DeltaN(2)].value, int(28));
        assert_eq!(even[&BasisClass::DeltaN(1)].value, int(0));
        assert_eq!(even[&BasisClass::DeltaN(1)].source, "G_4");

        let odd = solve_boundary_coeffs(g(5), Parity::Odd);
        assert_eq!(odd[&BasisClass::DeltaN(1)].value, int(60));
    }

    #[test]
    fn boundary_coeffs_cover_the_basis() {
        for n in [5, 6, 9, 10] {
            let genus = g(n);
            let solved = solve_boundary_coeffs(genus, Parity::Even);
            let expected: Vec<BasisClass> = basis(genus, Space::R)
                .into_iter()
                .filter(|c| {
                    matches!(
                        c,
                        BasisClass::DeltaN(_) | BasisClass::DeltaT(_) | BasisClass::DeltaP(_)
                    )
                })
                .collect();
            assert_eq!(solved.keys().copied().collect::<Vec<_>>(), expected, "g={n}");
        }
    }

    #[test]
    fn redundant_relations_agree() {
        // δ_i^n can be pinned by F_i or by G_{g−i}; the results coincide.
        for n in 5..=10 {
            let genus = g(n);
            for parity in [Parity::Even, Parity::Odd] {
                for i in 2..=genus.half() {
                    let (label_f, from_f) = pin(genus, parity, CurveName::Fi, i);
                    let (label_g, from_g) = pin(genus, parity, CurveName::Gi, genus.get() - i);
                    assert_eq!(label_f, BasisClass::DeltaN(i));
                    assert_eq!(label_g, BasisClass::DeltaN(i));
                    assert_eq!(from_f.value, from_g.value, "g={n} i={i} {parity}");
                }
            }
        }
    }

    #[test]
    fn d0t_examples() {
        let genus = g(5);
        let odd_d1n = solve_boundary_coeffs(genus, Parity::Odd)[&BasisClass::DeltaN(1)]
            .value
            .clone();
        assert_eq!(solve_d0t(genus, Parity::Odd, &odd_d1n), int(16));

        let even_d1n = solve_boundary_coeffs(genus, Parity::Even)[&BasisClass::DeltaN(1)]
            .value
            .clone();
        assert_eq!(solve_d0t(genus, Parity::Even, &even_d1n), int(0));

        let g7 = g(7);
        let d1n = solve_boundary_coeffs(g7, Parity::Odd)[&BasisClass::DeltaN(1)].value.clone();
        assert_eq!(solve_d0t(g7, Parity::Odd, &d1n), int(256));
    }

    fn known_map(genus: Genus, parity: Parity) -> BTreeMap<BasisClass, BigRational> {
        let mut known: BTreeMap<BasisClass, BigRational> = solve_boundary_coeffs(genus, parity)
            .into_iter()
            .map(|(label, sc)| (label, sc.value))
            .collect();
        let d1n = known[&BasisClass::DeltaN(1)].clone();
        known.insert(BasisClass::Delta0T, solve_d0t(genus, parity, &d1n));
        known
    }

    #[test]
    fn elliptic_tail_system_shape() {
        let genus = g(5);
        let sys = elliptic_tail_system(genus, Parity::Even, &known_map(genus, Parity::Even))
            .unwrap();
        let want: Vec<Vec<BigRational>> = vec![
            vec![int(1), int(-12), int(0)],
            vec![int(1), int(0), int(-4)],
            vec![int(1), int(-4), int(-4)],
        ];
        assert_eq!(sys.matrix, want);
        assert_eq!(sys.determinant(), int(-16));
    }

    #[test]
    fn three_by_three_solutions() {
        let genus = g(5);
        let even =
            solve_lambda_d0p_d0b(genus, Parity::Even, &known_map(genus, Parity::Even)).unwrap();
        assert_eq!(even, (int(68), int(8), int(17)));
        let odd =
            solve_lambda_d0p_d0b(genus, Parity::Odd, &known_map(genus, Parity::Odd)).unwrap();
        assert_eq!(odd, (int(64), int(8), int(15)));
    }

    #[test]
    fn singular_systems_are_rejected() {
        let sys = LinearSystem::new(
            vec![vec![int(1), int(2)], vec![int(2), int(4)]],
            vec![int(1), int(2)],
            vec!["x".into(), "y".into()],
        );
        assert_eq!(sys.determinant(), int(0));
        assert_eq!(sys.solve(), Err(Error::SingularSystem));
    }

    #[test]
    fn end_to_end_verdicts() {
        for n in 5..=12 {
            let report = assemble_and_verify(g(n)).unwrap();
            assert!(report.even.matches_closed_form, "even g={n}: {:?}", report.even.residuals);
            assert!(report.odd.matches_closed_form, "odd g={n}: {:?}", report.odd.residuals);
            assert!(report.sum_matches_total, "sum g={n}");
        }
    }

    #[test]
    fn solved_coefficients_are_integers() {
        for n in 5..=12 {
            let report = assemble_and_verify(g(n)).unwrap();
            for side in [&report.even, &report.odd] {
                for (label, value) in side.class.iter() {
                    assert!(value.is_integer(), "{label} g={n} {}", side.parity);
                }
            }
        }
    }
}
