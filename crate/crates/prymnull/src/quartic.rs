//! Exact polynomial engine for the quartic-pencil computation: restriction
//! of a pencil of plane quartics to the tangent line at a basepoint,
//! extraction of the residual quadric, and its degree-8 discriminant in the
//! pencil parameters.
//!
//! A pencil `H_λ(x) = λ0·F(x) + λ1·G(x)` of plane quartics with basepoint
//! `z = (1:0:0)` has `c_400(λ) = 0`. Its tangent line at z is
//! `c_310(λ)x_1 + c_301(λ)x_2 = 0`; substituting
//! `x_0 = u, x_1 = −c_301(λ)v, x_2 = c_310(λ)v` restricts `H_λ` to a binary
//! quartic in (u, v) whose v^0 and v^1 coefficients vanish identically
//! (z counts twice in the intersection). Factoring out v² leaves a quadric
//! `q_λ = c3(λ)u² + c4(λ)uv + c5(λ)v²` with λ-degrees (3, 4, 5), and the
//! values of λ where its two roots collide are the roots of the octic
//! `Δ(λ) = c4² − 4·c3·c5`.
//!
//! All coefficients are exact rationals; the numerical root checks used by
//! the test suites live in test code only.

use std::collections::BTreeMap;

use num::{BigInt, BigRational, One, Zero};
use rand_chacha::ChaCha8Rng;
use rand_core::{RngCore, SeedableRng};

use crate::class_space::Genus;
use crate::counting::count_table;
use crate::test_curves::{prym_null_numbers, CurveName};
use crate::{Error, Result};

/// Homogeneous binary form of fixed degree; `coeffs[i]` multiplies
/// `λ0^i λ1^{d−i}`. The zero form of each degree is represented by an
/// all-zero coefficient vector.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BinaryForm {
    degree: usize,
    coeffs: Vec<BigRational>,
}

impl BinaryForm {
    pub fn new(degree: usize, coeffs: Vec<BigRational>) -> Self {
        assert_eq!(coeffs.len(), degree + 1, "need degree+1 coefficients");
        BinaryForm { degree, coeffs }
    }

    pub fn zero(degree: usize) -> Self {
        BinaryForm { degree, coeffs: vec![BigRational::zero(); degree + 1] }
    }

    pub fn constant(value: BigRational) -> Self {
        BinaryForm { degree: 0, coeffs: vec![value] }
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn coeffs(&self) -> &[BigRational] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(BigRational::is_zero)
    }

    /// Coefficient of λ0^d.
    pub fn leading(&self) -> &BigRational {
        &self.coeffs[self.degree]
    }

    /// Coefficient of λ1^d.
    pub fn trailing(&self) -> &BigRational {
        &self.coeffs[0]
    }

    pub fn add(&self, rhs: &BinaryForm) -> BinaryForm {
        assert_eq!(self.degree, rhs.degree, "degree mismatch in add");
        let coeffs =
            self.coeffs.iter().zip(&rhs.coeffs).map(|(a, b)| a + b).collect();
        BinaryForm { degree: self.degree, coeffs }
    }

    pub fn sub(&self, rhs: &BinaryForm) -> BinaryForm {
        assert_eq!(self.degree, rhs.degree, "degree mismatch in sub");
        let coeffs =
            self.coeffs.iter().zip(&rhs.coeffs).map(|(a, b)| a - b).collect();
        BinaryForm { degree: self.degree, coeffs }
    }

    pub fn scale(&self, q: &BigRational) -> BinaryForm {
        let coeffs = self.coeffs.iter().map(|a| a * q).collect();
        BinaryForm { degree: self.degree, coeffs }
    }

    /// Product; degrees add, so homogeneity is preserved by construction.
    pub fn mul(&self, rhs: &BinaryForm) -> BinaryForm {
        let degree = self.degree + rhs.degree;
        let mut coeffs = vec![BigRational::zero(); degree + 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                coeffs[i + j] += a * b;
            }
        }
        BinaryForm { degree, coeffs }
    }

    pub fn pow(&self, e: usize) -> BinaryForm {
        let mut acc = BinaryForm::constant(BigRational::one());
        for _ in 0..e {
            acc = acc.mul(self);
        }
        acc
    }

    pub fn eval(&self, l0: &BigRational, l1: &BigRational) -> BigRational {
        let mut acc = BigRational::zero();
        let mut p0 = BigRational::one();
        let mut powers0 = Vec::with_capacity(self.degree + 1);
        for _ in 0..=self.degree {
            powers0.push(p0.clone());
            p0 *= l0;
        }
        for (i, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let mut term = c * &powers0[i];
            for _ in 0..self.degree - i {
                term *= l1;
            }
            acc += term;
        }
        acc
    }

    /// Degree of the dehomogenization at λ1 = 1, i.e. the largest power of
    /// λ0 with nonzero coefficient; `None` for the zero form. A value below
    /// `degree()` means λ1 divides the form (a root at (1:0)).
    pub fn dehomogenized_degree(&self) -> Option<usize> {
        self.coeffs.iter().rposition(|c| !c.is_zero())
    }

    /// Number of distinct projective roots over ℂ: the degree of the
    /// squarefree part of the dehomogenization, plus one if λ1 divides the
    /// form. The squarefree part is computed via exact gcd with the
    /// derivative.
    pub fn distinct_root_count(&self) -> Result<usize> {
        if self.is_zero() {
            return Err(Error::ZeroForm);
        }
        let mut p = self.coeffs.clone();
        poly_trim(&mut p);
        let root_at_infinity = usize::from(self.coeffs[self.degree].is_zero());
        let d = p.len() - 1;
        if d == 0 {
            return Ok(root_at_infinity);
        }
        let g = poly_gcd(p.clone(), poly_derivative(&p));
        let (squarefree, rem) = poly_divmod(p, &g);
        debug_assert!(rem.is_empty(), "gcd must divide exactly");
        Ok(squarefree.len() - 1 + root_at_infinity)
    }
}

// ---- dense univariate helpers (ascending coefficients, trimmed) ----

fn poly_trim(p: &mut Vec<BigRational>) {
    while p.last().is_some_and(BigRational::is_zero) {
        p.pop();
    }
}

fn poly_derivative(p: &[BigRational]) -> Vec<BigRational> {
    let mut out: Vec<BigRational> = p
        .iter()
        .enumerate()
        .skip(1)
        .map(|(i, c)| c * BigRational::from_integer(BigInt::from(i)))
        .collect();
    poly_trim(&mut out);
    out
}

/// Euclidean division; the divisor must be nonzero.
fn poly_divmod(
    mut a: Vec<BigRational>,
    b: &[BigRational],
) -> (Vec<BigRational>, Vec<BigRational>) {
    assert!(!b.is_empty(), "division by the zero polynomial");
    poly_trim(&mut a);
    let db = b.len() - 1;
    let lead = &b[db];
    if a.len() <= db {
        return (Vec::new(), a);
    }
    let mut q = vec![BigRational::zero(); a.len() - db];
    while a.len() > db {
        let da = a.len() - 1;
        let factor = a.last().unwrap() / lead;
        q[da - db] = factor.clone();
        for (i, c) in b.iter().enumerate() {
            let delta = &factor * c;
            a[da - db + i] -= delta;
        }
        // The leading term cancels exactly, so the degree strictly drops.
        poly_trim(&mut a);
        debug_assert!(a.len() <= da);
    }
    poly_trim(&mut q);
    (q, a)
}

/// Monic gcd over ℚ by the Euclidean algorithm.
fn poly_gcd(mut a: Vec<BigRational>, mut b: Vec<BigRational>) -> Vec<BigRational> {
    poly_trim(&mut a);
    poly_trim(&mut b);
    while !b.is_empty() {
        let (_, r) = poly_divmod(a, &b);
        a = b;
        b = r;
    }
    if let Some(lead) = a.last().cloned() {
        for c in &mut a {
            *c /= &lead;
        }
    }
    a
}

/// A pencil `λ0·F + λ1·G` of plane quartics with basepoint (1:0:0), stored
/// as the pair (a_ijk, b_ijk) of rational coefficients for each monomial
/// x0^i x1^j x2^k of total degree 4. The basepoint condition
/// a_400 = b_400 = 0 is enforced at construction.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PencilQuartic {
    coeffs: BTreeMap<(u8, u8, u8), (BigRational, BigRational)>,
}

/// The 15 quartic monomial exponents in the fixed generation order
/// (descending x0 power, then descending x1 power).
pub fn quartic_monomials() -> Vec<(u8, u8, u8)> {
    let mut out = Vec::with_capacity(15);
    for i in (0..=4u8).rev() {
        for j in (0..=4 - i).rev() {
            out.push((i, j, 4 - i - j));
        }
    }
    out
}

impl PencilQuartic {
    pub fn from_coeffs(
        entries: impl IntoIterator<Item = ((u8, u8, u8), (BigRational, BigRational))>,
    ) -> Result<Self> {
        let mut coeffs = BTreeMap::new();
        for ((i, j, k), pair) in entries {
            if i + j + k != 4 {
                return Err(Error::DegreeMismatch {
                    expected: 4,
                    found: (i + j + k) as usize,
                });
            }
            if (i, j, k) == (4, 0, 0) && (!pair.0.is_zero() || !pair.1.is_zero()) {
                return Err(Error::BasepointNotCentered);
            }
            coeffs.insert((i, j, k), pair);
        }
        Ok(PencilQuartic { coeffs })
    }

    /// Seeded random pencil with integer coefficients uniform in −9..=9 and
    /// the basepoint invariant imposed. Deterministic for a fixed seed:
    /// monomials are filled in the [`quartic_monomials`] order from a
    /// ChaCha8 stream with rejection sampling.
    pub fn random(seed: u64) -> Self {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let mut draw = || loop {
            let v = rng.next_u32() & 31;
            if v < 19 {
                return BigRational::from_integer(BigInt::from(v as i64 - 9));
            }
        };
        let mut coeffs = BTreeMap::new();
        for m in quartic_monomials() {
            let pair = if m == (4, 0, 0) {
                (BigRational::zero(), BigRational::zero())
            } else {
                (draw(), draw())
            };
            coeffs.insert(m, pair);
        }
        PencilQuartic { coeffs }
    }

    /// The λ-linear coefficient `c_ijk(λ) = λ0·a_ijk + λ1·b_ijk`.
    pub fn coeff_form(&self, i: u8, j: u8, k: u8) -> BinaryForm {
        let (a, b) = self
            .coeffs
            .get(&(i, j, k))
            .cloned()
            .unwrap_or_else(|| (BigRational::zero(), BigRational::zero()));
        BinaryForm::new(1, vec![b, a])
    }

    pub fn coeff_pair(&self, i: u8, j: u8, k: u8) -> (BigRational, BigRational) {
        self.coeffs
            .get(&(i, j, k))
            .cloned()
            .unwrap_or_else(|| (BigRational::zero(), BigRational::zero()))
    }
}

/// The restriction of the pencil to its tangent line at the basepoint, as a
/// binary quartic in (u, v) with λ-form coefficients: `term(i)` multiplies
/// `u^i v^{4−i}` and is homogeneous of λ-degree 5−i.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TangentRestriction {
    terms: Vec<BinaryForm>,
}

impl TangentRestriction {
    /// Coefficient of `u^{u_power} v^{4−u_power}`.
    pub fn term(&self, u_power: usize) -> &BinaryForm {
        &self.terms[u_power]
    }
}

/// Substitute `x0 = u, x1 = −c_301(λ)v, x2 = c_310(λ)v` into the pencil:
/// the coefficient of `u^i v^{4−i}` is
/// `Σ_{j+k=4−i} (−1)^j c_301(λ)^j c_310(λ)^k c_ijk(λ)`.
pub fn restrict_to_tangent(pencil: &PencilQuartic) -> TangentRestriction {
    let c301 = pencil.coeff_form(3, 0, 1);
    let c310 = pencil.coeff_form(3, 1, 0);
    let pow301: Vec<BinaryForm> = (0..=4).map(|e| c301.pow(e)).collect();
    let pow310: Vec<BinaryForm> = (0..=4).map(|e| c310.pow(e)).collect();
    let mut terms = Vec::with_capacity(5);
    for i in 0..=4u8 {
        let mut acc = BinaryForm::zero(5 - i as usize);
        for j in 0..=4 - i {
            let k = 4 - i - j;
            let mut term = pow301[j as usize]
                .mul(&pow310[k as usize])
                .mul(&pencil.coeff_form(i, j, k));
            if j % 2 == 1 {
                term = term.scale(&-BigRational::one());
            }
            acc = acc.add(&term);
        }
        terms.push(acc);
    }
    TangentRestriction { terms }
}

/// Factor v² out of the restriction: requires the v^0 and v^1 terms to
/// vanish (they do identically under the basepoint invariant) and returns
/// the quadric coefficients (c3, c4, c5) of λ-degrees (3, 4, 5).
pub fn extract_quadric(
    restriction: &TangentRestriction,
) -> Result<(BinaryForm, BinaryForm, BinaryForm)> {
    if !restriction.term(4).is_zero() || !restriction.term(3).is_zero() {
        return Err(Error::LowOrderTermsNonzero);
    }
    Ok((
        restriction.term(2).clone(),
        restriction.term(1).clone(),
        restriction.term(0).clone(),
    ))
}

/// The discriminant `Δ(λ) = c4² − 4·c3·c5` of the quadric, homogeneous of
/// degree 8. A vanishing leading coefficient (or the zero form altogether)
/// is possible for special pencils and is reported by the form itself, not
/// treated as an error.
pub fn discriminant(
    c3: &BinaryForm,
    c4: &BinaryForm,
    c5: &BinaryForm,
) -> Result<BinaryForm> {
    for (form, expected) in [(c3, 3), (c4, 4), (c5, 5)] {
        if form.degree() != expected {
            return Err(Error::DegreeMismatch { expected, found: form.degree() });
        }
    }
    let four = BigRational::from_integer(BigInt::from(4));
    Ok(c4.mul(c4).sub(&c3.mul(c5).scale(&four)))
}

/// Cross-check of the geometric count behind the quartic-tail family `R`:
/// the 8 tangent-line degenerations of a general pencil, times the
/// parity-change counts in genus g−3, must reproduce the cataloged
/// intersection numbers `R · P̄^±`:
/// `8·N_{g-3}^- = R·P̄^+` and `8·N_{g-3}^± = R·P̄^-`.
pub fn bitangent_count_check(genus: Genus) -> bool {
    let g = genus.get();
    let Ok(table) = count_table(g - 3) else {
        return false;
    };
    let Ok(numbers) = prym_null_numbers(CurveName::R, genus, None) else {
        return false;
    };
    let eight = BigInt::from(8);
    &eight * BigInt::from(table.n_minus) == numbers.even
        && eight * BigInt::from(table.n_pm) == numbers.odd
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rat::int;
    use proptest::prelude::*;

    fn form(coeffs: &[i64]) -> BinaryForm {
        BinaryForm::new(coeffs.len() - 1, coeffs.iter().map(|&c| int(c)).collect())
    }

    #[test]
    fn basepoint_invariant_enforced() {
        assert!(PencilQuartic::from_coeffs([((4, 0, 0), (int(1), int(0)))]).is_err());
        assert!(PencilQuartic::from_coeffs([((3, 1, 0), (int(1), int(0)))]).is_ok());
        assert!(PencilQuartic::from_coeffs([((3, 1, 1), (int(1), int(0)))]).is_err());
    }

    #[test]
    fn low_order_terms_vanish_for_seeded_pencils() {
        for seed in 0..10 {
            let r = restrict_to_tangent(&PencilQuartic::random(seed));
            assert!(r.term(4).is_zero(), "v^0 term, seed {seed}");
            assert!(r.term(3).is_zero(), "v^1 term, seed {seed}");
            assert_eq!(r.term(2).degree(), 3);
            assert_eq!(r.term(1).degree(), 4);
            assert_eq!(r.term(0).degree(), 5);
        }
    }

    #[test]
    fn zero_pencil_gives_zero_forms() {
        let pencil = PencilQuartic::from_coeffs([]).unwrap();
        let (c3, c4, c5) = extract_quadric(&restrict_to_tangent(&pencil)).unwrap();
        assert!(c3.is_zero() && c4.is_zero() && c5.is_zero());
        assert_eq!((c3.degree(), c4.degree(), c5.degree()), (3, 4, 5));
    }

    #[test]
    fn extract_quadric_rejects_nonvanishing_low_terms() {
        let bad = TangentRestriction {
            terms: vec![
                BinaryForm::zero(5),
                BinaryForm::zero(4),
                BinaryForm::zero(3),
                form(&[1, 0]).mul(&form(&[1])),
                BinaryForm::zero(1),
            ],
        };
        assert_eq!(extract_quadric(&bad), Err(Error::LowOrderTermsNonzero));
    }

    #[test]
    fn discriminant_of_a_square() {
        // c3 = c5 = 0 and c4 = λ0^4 give Δ = λ0^8.
        let c3 = BinaryForm::zero(3);
        let c5 = BinaryForm::zero(5);
        let c4 = form(&[0, 0, 0, 0, 1]);
        let delta = discriminant(&c3, &c4, &c5).unwrap();
        assert_eq!(delta, form(&[0, 0, 0, 0, 0, 0, 0, 0, 1]));
        assert_eq!(delta.distinct_root_count().unwrap(), 1);
        assert!(discriminant(&c4, &c4, &c5).is_err());
    }

    #[test]
    fn distinct_root_count_examples() {
        // λ0·λ1·(λ0−λ1)·(λ0+λ1)·(λ0²+λ1²)² has 6 distinct projective roots:
        // 0, ∞, ±1 and the double pair ±i.
        let f = form(&[0, 1])
            .mul(&form(&[1, 0]))
            .mul(&form(&[-1, 1]))
            .mul(&form(&[1, 1]))
            .mul(&form(&[1, 0, 1]).mul(&form(&[1, 0, 1])));
        assert_eq!(f.degree(), 8);
        assert_eq!(f.distinct_root_count().unwrap(), 6);

        assert_eq!(form(&[5]).distinct_root_count().unwrap(), 0);
        assert_eq!(form(&[1, 0]).distinct_root_count().unwrap(), 1);
        assert!(BinaryForm::zero(4).distinct_root_count().is_err());
    }

    #[test]
    fn evaluation_commutes_with_restriction() {
        // Direct-substitution oracle: restrict the scalar quartic obtained
        // by fixing λ, and compare with evaluating the λ-forms.
        let lambdas = [
            (int(1), int(2)),
            (int(-3), int(5)),
            (BigRational::new(2.into(), 3.into()), int(1)),
            (int(7), BigRational::new((-1).into(), 4.into())),
            (int(0), int(1)),
        ];
        for seed in [3u64, 11, 19] {
            let pencil = PencilQuartic::random(seed);
            let restriction = restrict_to_tangent(&pencil);
            for (l0, l1) in &lambdas {
                let scalar = |i: u8, j: u8, k: u8| {
                    let (a, b) = pencil.coeff_pair(i, j, k);
                    l0 * a + l1 * b
                };
                let c301 = scalar(3, 0, 1);
                let c310 = scalar(3, 1, 0);
                for i in 0..=4u8 {
                    let mut want = BigRational::zero();
                    for j in 0..=4 - i {
                        let k = 4 - i - j;
                        let sign = if j % 2 == 1 { int(-1) } else { int(1) };
                        let mut term = sign * scalar(i, j, k);
                        for _ in 0..j {
                            term *= &c301;
                        }
                        for _ in 0..k {
                            term *= &c310;
                        }
                        want += term;
                    }
                    assert_eq!(
                        restriction.term(i as usize).eval(l0, l1),
                        want,
                        "seed {seed}, u^{i}"
                    );
                }
            }
        }
    }

    #[test]
    fn discriminant_evaluation_homomorphism() {
        // 20 rational evaluation points: specializing λ first and taking
        // the scalar quadratic discriminant agrees with evaluating Δ.
        let points: Vec<(BigRational, BigRational)> = (1..=20i64)
            .map(|n| {
                (
                    BigRational::new((3 * n - 17).into(), (n % 5 + 1).into()),
                    BigRational::new((2 * n + 1).into(), (n % 3 + 2).into()),
                )
            })
            .collect();
        for seed in [0u64, 5, 9] {
            let pencil = PencilQuartic::random(seed);
            let (c3, c4, c5) = extract_quadric(&restrict_to_tangent(&pencil)).unwrap();
            let delta = discriminant(&c3, &c4, &c5).unwrap();
            for (l0, l1) in &points {
                let (a, b, c) = (c3.eval(l0, l1), c4.eval(l0, l1), c5.eval(l0, l1));
                assert_eq!(delta.eval(l0, l1), &b * &b - int(4) * a * c);
            }
        }
    }

    #[test]
    fn degenerate_pencil_is_reported_not_rejected() {
        // Seed 2 draws b_310 = b_301 = 0, so the second quartic of the
        // pencil is singular at the basepoint and the tangent line collapses
        // at λ0 = 0. The discriminant picks up a sixfold root there and the
        // engine stays total: 3 distinct roots instead of the generic 8.
        let pencil = PencilQuartic::random(2);
        assert!(pencil.coeff_pair(3, 1, 0).1.is_zero());
        assert!(pencil.coeff_pair(3, 0, 1).1.is_zero());
        let (c3, c4, c5) = extract_quadric(&restrict_to_tangent(&pencil)).unwrap();
        let delta = discriminant(&c3, &c4, &c5).unwrap();
        assert_eq!(delta.degree(), 8);
        assert!(delta.coeffs()[..6].iter().all(BigRational::is_zero));
        assert_eq!(delta.distinct_root_count().unwrap(), 3);
    }

    #[test]
    fn bitangent_count_examples() {
        for n in [5u32, 6, 7] {
            assert!(bitangent_count_check(Genus::new(n).unwrap()), "g={n}");
        }
    }

    proptest! {
        #[test]
        fn low_order_vanishing_is_identical(
            values in proptest::collection::vec(
                ((-30i64..30, 1i64..9), (-30i64..30, 1i64..9)), 14)
        ) {
            // Any rational pencil with the basepoint invariant, not just the
            // seeded ones, has identically vanishing v^0/v^1 restriction terms.
            let monomials = quartic_monomials();
            let entries = monomials.iter().filter(|&&m| m != (4, 0, 0)).zip(values)
                .map(|(&m, ((an, ad), (bn, bd)))| {
                    (m, (BigRational::new(an.into(), ad.into()),
                         BigRational::new(bn.into(), bd.into())))
                });
            let pencil = PencilQuartic::from_coeffs(entries).unwrap();
            let r = restrict_to_tangent(&pencil);
            prop_assert!(r.term(4).is_zero());
            prop_assert!(r.term(3).is_zero());
        }

        #[test]
        fn homogeneity_bookkeeping(
            a in proptest::collection::vec(-20i64..20, 4),
            b in proptest::collection::vec(-20i64..20, 5),
        ) {
            let fa = BinaryForm::new(3, a.iter().map(|&c| int(c)).collect());
            let fb = BinaryForm::new(4, b.iter().map(|&c| int(c)).collect());
            prop_assert_eq!(fa.mul(&fb).degree(), 7);
            prop_assert_eq!(fa.pow(3).degree(), 9);
            prop_assert_eq!(fa.add(&fa).degree(), 3);
        }
    }
}
