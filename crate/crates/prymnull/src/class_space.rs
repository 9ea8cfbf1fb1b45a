//! Basis catalogs for the rational Picard groups of `M̄_g`, `R̄_g` and
//! `S̄_g⁺`, sparse class vectors over them, and the pullback maps between
//! them.
//!
//! For g ≥ 5 the three Picard groups decompose over ℚ as a λ line plus one
//! line per boundary class:
//!
//! * `M̄_g`:  λ, δ_0, …, δ_⌊g/2⌋
//! * `R̄_g`:  λ, δ_0^t, δ_0^p, δ_0^b, and δ_i^n, δ_i^t, δ_i^p for
//!   1 ≤ i ≤ ⌊g/2⌋, except that δ_{g/2}^t is dropped for even g, where the
//!   two sides of the node can be swapped and the nontrivial/trivial
//!   components coincide.
//! * `S̄_g⁺`: λ, δ_0^n, δ_0^b, and δ_i^+, δ_i^- for 1 ≤ i ≤ ⌊g/2⌋.
//!
//! The basis order is fixed once and for all (λ first, then boundary
//! classes by index, then by sub-label) so that every emitted report is
//! byte-for-byte reproducible.

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;

use num::{BigRational, Zero};
use serde_json::{json, Map, Value};

use crate::{rat, Error, Result};

/// Curve genus, validated for class-space use. The Picard decompositions
/// behind [`basis`] hold for g ≥ 5, so smaller genera are rejected here;
/// the pure counting functions in [`crate::counting`] take plain integers.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Genus(u32);

impl Genus {
    /// Smallest genus with the stated Picard decompositions.
    pub const MIN: u32 = 5;

    pub fn new(g: u32) -> Result<Self> {
        if g >= Self::MIN {
            Ok(Genus(g))
        } else {
            Err(Error::GenusTooSmall { g, min: Self::MIN })
        }
    }

    pub fn get(self) -> u32 {
        self.0
    }

    /// ⌊g/2⌋, the largest boundary index.
    pub fn half(self) -> u32 {
        self.0 / 2
    }

    pub fn is_even(self) -> bool {
        self.0 % 2 == 0
    }
}

impl fmt::Display for Genus {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

/// Ambient space of a divisor class.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Space {
    /// Moduli of stable curves `M̄_g`.
    M,
    /// Moduli of stable Prym pairs `R̄_g`.
    R,
    /// Moduli of stable even spin curves `S̄_g⁺`.
    SPlus,
}

impl Space {
    pub fn as_str(self) -> &'static str {
        match self {
            Space::M => "M",
            Space::R => "R",
            Space::SPlus => "S+",
        }
    }

    pub fn parse(s: &str) -> Result<Self> {
        match s {
            "M" => Ok(Space::M),
            "R" => Ok(Space::R),
            "S+" => Ok(Space::SPlus),
            other => Err(Error::UnknownLabel { label: other.to_string() }),
        }
    }
}

impl fmt::Display for Space {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

/// One generating class of a rational Picard group.
///
/// The label `d0_b` names the blow-up component over Δ_0 on both `R̄_g` and
/// `S̄_g⁺`; the shared [`BasisClass::Delta0B`] variant serves both spaces,
/// and a vector's space tag disambiguates. Validity of a label relative to
/// a concrete `(genus, space)` is checked by [`class_in_basis`].
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum BasisClass {
    /// The Hodge class λ (any space).
    Lambda,
    /// δ_i on `M̄_g`, 0 ≤ i ≤ ⌊g/2⌋.
    Delta(u32),
    /// δ_0^t on `R̄_g`: the Prym root pulls back trivially to the
    /// normalization.
    Delta0T,
    /// δ_0^p on `R̄_g`: the pullback to the normalization stays nontrivial.
    Delta0P,
    /// δ_0^b: the blow-up (ramification) component over Δ_0, on `R̄_g` and
    /// on `S̄_g⁺`.
    Delta0B,
    /// δ_i^n on `R̄_g` (i ≥ 1): the root is nontrivial on the genus-i side.
    DeltaN(u32),
    /// δ_i^t on `R̄_g` (i ≥ 1): the root is trivial on the genus-i side.
    DeltaT(u32),
    /// δ_i^p on `R̄_g` (i ≥ 1): nontrivial on both sides.
    DeltaP(u32),
    /// δ_0^n on `S̄_g⁺`: the component over Δ_0 without exceptional curve.
    Delta0N,
    /// δ_i^+ on `S̄_g⁺` (i ≥ 1): both halves carry even characteristics.
    DeltaPlus(u32),
    /// δ_i^- on `S̄_g⁺` (i ≥ 1): both halves carry odd characteristics.
    DeltaMinus(u32),
}

impl BasisClass {
    /// Canonical text label, as used in every JSON report.
    pub fn label(&self) -> String {
        match self {
            BasisClass::Lambda => "lambda".to_string(),
            BasisClass::Delta(i) => format!("d{i}"),
            BasisClass::Delta0T => "d0_t".to_string(),
            BasisClass::Delta0P => "d0_p".to_string(),
            BasisClass::Delta0B => "d0_b".to_string(),
            BasisClass::DeltaN(i) => format!("d{i}_n"),
            BasisClass::DeltaT(i) => format!("d{i}_t"),
            BasisClass::DeltaP(i) => format!("d{i}_p"),
            BasisClass::Delta0N => "d0_n".to_string(),
            BasisClass::DeltaPlus(i) => format!("d{i}_plus"),
            BasisClass::DeltaMinus(i) => format!("d{i}_minus"),
        }
    }

    /// Inverse of [`BasisClass::label`]. Parsing is space-independent;
    /// membership in a concrete basis is a separate check.
    pub fn parse(label: &str) -> Result<Self> {
        let err = || Error::UnknownLabel { label: label.to_string() };
        if label == "lambda" {
            return Ok(BasisClass::Lambda);
        }
        let rest = label.strip_prefix('d').ok_or_else(err)?;
        let (index, suffix) = match rest.split_once('_') {
            None => (rest, None),
            Some((idx, sfx)) => (idx, Some(sfx)),
        };
        if index.is_empty() || index.len() > 1 && index.starts_with('0') {
            return Err(err());
        }
        let i: u32 = index.parse().map_err(|_| err())?;
        match (i, suffix) {
            (_, None) => Ok(BasisClass::Delta(i)),
            (0, Some("t")) => Ok(BasisClass::Delta0T),
            (0, Some("p")) => Ok(BasisClass::Delta0P),
            (0, Some("b")) => Ok(BasisClass::Delta0B),
            (0, Some("n")) => Ok(BasisClass::Delta0N),
            (_, Some("n")) => Ok(BasisClass::DeltaN(i)),
            (_, Some("t")) => Ok(BasisClass::DeltaT(i)),
            (_, Some("p")) => Ok(BasisClass::DeltaP(i)),
            (_, Some("plus")) => Ok(BasisClass::DeltaPlus(i)),
            (_, Some("minus")) => Ok(BasisClass::DeltaMinus(i)),
            _ => Err(err()),
        }
    }

    /// Sort key implementing the fixed basis order: λ first, then boundary
    /// classes by index, then sub-label (n < t < p < b over Δ_0;
    /// n < t < p and + < - for i ≥ 1). The final component is a variant
    /// tag so classes of different spaces never compare equal.
    fn sort_key(&self) -> (u8, u32, u8, u8) {
        match self {
            BasisClass::Lambda => (0, 0, 0, 0),
            BasisClass::Delta(i) => (1, *i, 0, 1),
            BasisClass::Delta0N => (1, 0, 0, 2),
            BasisClass::Delta0T => (1, 0, 1, 3),
            BasisClass::Delta0P => (1, 0, 2, 4),
            BasisClass::Delta0B => (1, 0, 3, 5),
            BasisClass::DeltaN(i) => (1, *i, 0, 6),
            BasisClass::DeltaT(i) => (1, *i, 1, 7),
            BasisClass::DeltaP(i) => (1, *i, 2, 8),
            BasisClass::DeltaPlus(i) => (1, *i, 3, 9),
            BasisClass::DeltaMinus(i) => (1, *i, 4, 10),
        }
    }
}

impl Ord for BasisClass {
    fn cmp(&self, other: &Self) -> Ordering {
        self.sort_key().cmp(&other.sort_key())
    }
}

impl PartialOrd for BasisClass {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for BasisClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.label())
    }
}

/// The ordered basis of `Pic` of the given space in the given genus.
///
/// Sizes: 2 + ⌊g/2⌋ for `M̄_g`, 4 + 3⌊g/2⌋ − [g even] for `R̄_g`, and
/// 3 + 2⌊g/2⌋ for `S̄_g⁺`.
pub fn basis(genus: Genus, space: Space) -> Vec<BasisClass> {
    let h = genus.half();
    let mut out = vec![BasisClass::Lambda];
    match space {
        Space::M => {
            for i in 0..=h {
                out.push(BasisClass::Delta(i));
            }
        }
        Space::R => {
            out.push(BasisClass::Delta0T);
            out.push(BasisClass::Delta0P);
            out.push(BasisClass::Delta0B);
            for i in 1..=h {
                out.push(BasisClass::DeltaN(i));
                if !(genus.is_even() && i == h) {
                    out.push(BasisClass::DeltaT(i));
                }
                out.push(BasisClass::DeltaP(i));
            }
        }
        Space::SPlus => {
            out.push(BasisClass::Delta0N);
            out.push(BasisClass::Delta0B);
            for i in 1..=h {
                out.push(BasisClass::DeltaPlus(i));
                out.push(BasisClass::DeltaMinus(i));
            }
        }
    }
    out
}

/// Whether `class` belongs to the canonical basis of `(genus, space)`.
pub fn class_in_basis(genus: Genus, space: Space, class: &BasisClass) -> bool {
    let h = genus.half();
    match (space, class) {
        (_, BasisClass::Lambda) => true,
        (Space::M, BasisClass::Delta(i)) => *i <= h,
        (Space::R, BasisClass::Delta0T | BasisClass::Delta0P | BasisClass::Delta0B) => true,
        (Space::R, BasisClass::DeltaN(i) | BasisClass::DeltaP(i)) => 1 <= *i && *i <= h,
        (Space::R, BasisClass::DeltaT(i)) => {
            1 <= *i && *i <= h && !(genus.is_even() && *i == h)
        }
        (Space::SPlus, BasisClass::Delta0N | BasisClass::Delta0B) => true,
        (Space::SPlus, BasisClass::DeltaPlus(i) | BasisClass::DeltaMinus(i)) => {
            1 <= *i && *i <= h
        }
        _ => false,
    }
}

/// Raw sub-label of a boundary class of `R̄_g` over Δ_i with i ≥ 1, before
/// normalization to the canonical index range.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum RawKind {
    N,
    T,
    P,
}

/// Fold a raw `R̄_g` boundary label with index 1 ≤ i ≤ g−1 onto the
/// canonical basis. Indices above g/2 swap n ↔ t and replace i by g−i
/// (the two sides of the node trade roles); p is symmetric in i ↔ g−i.
/// For even g the label t at i = g/2 folds into n, which is why the
/// canonical basis has no δ_{g/2}^t.
pub fn normalize_label(genus: Genus, kind: RawKind, index: u32) -> Result<BasisClass> {
    let g = genus.get();
    if index < 1 || index > g - 1 {
        return Err(Error::IndexOutOfRange { index, min: 1, max: g - 1 });
    }
    let h = genus.half();
    if index <= h {
        Ok(match kind {
            RawKind::N => BasisClass::DeltaN(index),
            RawKind::T if genus.is_even() && index == h => BasisClass::DeltaN(index),
            RawKind::T => BasisClass::DeltaT(index),
            RawKind::P => BasisClass::DeltaP(index),
        })
    } else {
        let j = g - index;
        Ok(match kind {
            RawKind::N => BasisClass::DeltaT(j),
            RawKind::T => BasisClass::DeltaN(j),
            RawKind::P => BasisClass::DeltaP(j),
        })
    }
}

/// Sparse exact-rational class vector over the basis of one `(genus, space)`.
///
/// Zero coefficients are never stored, so structural equality is exact
/// coefficientwise equality.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ClassVector {
    genus: Genus,
    space: Space,
    coeffs: BTreeMap<BasisClass, BigRational>,
}

impl ClassVector {
    pub fn zero(genus: Genus, space: Space) -> Self {
        ClassVector { genus, space, coeffs: BTreeMap::new() }
    }

    /// Build a vector from `(class, coefficient)` entries, validating each
    /// class against the basis. Later entries overwrite earlier ones.
    pub fn from_entries(
        genus: Genus,
        space: Space,
        entries: impl IntoIterator<Item = (BasisClass, BigRational)>,
    ) -> Result<Self> {
        let mut v = ClassVector::zero(genus, space);
        for (class, value) in entries {
            v.set_coeff(class, value)?;
        }
        Ok(v)
    }

    pub fn genus(&self) -> Genus {
        self.genus
    }

    pub fn space(&self) -> Space {
        self.space
    }

    /// Coefficient of `class` (zero when absent).
    pub fn coeff(&self, class: &BasisClass) -> BigRational {
        self.coeffs.get(class).cloned().unwrap_or_else(BigRational::zero)
    }

    /// Set a coefficient, pruning zeros to keep the representation sparse.
    pub fn set_coeff(&mut self, class: BasisClass, value: BigRational) -> Result<()> {
        if !class_in_basis(self.genus, self.space, &class) {
            return Err(Error::LabelNotInBasis { label: class.label() });
        }
        if value.is_zero() {
            self.coeffs.remove(&class);
        } else {
            self.coeffs.insert(class, value);
        }
        Ok(())
    }

    /// Nonzero entries in basis order.
    pub fn iter(&self) -> impl Iterator<Item = (&BasisClass, &BigRational)> {
        self.coeffs.iter()
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    fn check_compatible(&self, other: &Self) -> Result<()> {
        if self.space != other.space {
            return Err(Error::SpaceMismatch { expected: self.space, found: other.space });
        }
        if self.genus != other.genus {
            return Err(Error::GenusMismatch {
                left: self.genus.get(),
                right: other.genus.get(),
            });
        }
        Ok(())
    }

    /// Componentwise sum; errors on genus or space mismatch.
    pub fn checked_add(&self, other: &Self) -> Result<Self> {
        self.check_compatible(other)?;
        let mut out = self.clone();
        for (class, value) in &other.coeffs {
            let sum = out.coeff(class) + value;
            out.set_coeff(*class, sum)?;
        }
        Ok(out)
    }

    /// Scalar multiple.
    pub fn scale(&self, q: &BigRational) -> Self {
        if q.is_zero() {
            return ClassVector::zero(self.genus, self.space);
        }
        let coeffs = self.coeffs.iter().map(|(c, v)| (*c, v * q)).collect();
        ClassVector { genus: self.genus, space: self.space, coeffs }
    }

    /// Σ over the basis of the two coefficient maps multiplied entrywise.
    /// This is the pairing underlying test-curve intersection numbers.
    pub fn dot(&self, other: &Self) -> Result<BigRational> {
        self.check_compatible(other)?;
        let mut acc = BigRational::zero();
        for (class, value) in &self.coeffs {
            if let Some(w) = other.coeffs.get(class) {
                acc += value * w;
            }
        }
        Ok(acc)
    }

    /// JSON form: `{"genus": g, "space": "M"|"R"|"S+", "coeffs": {label: "p/q"}}`
    /// with coefficients in basis order and rationals in lowest terms,
    /// sign on the numerator.
    pub fn to_json(&self) -> Value {
        let mut coeffs = Map::new();
        for (class, value) in &self.coeffs {
            coeffs.insert(class.label(), Value::String(value.to_string()));
        }
        json!({
            "genus": self.genus.get(),
            "space": self.space.as_str(),
            "coeffs": Value::Object(coeffs),
        })
    }

    /// Inverse of [`ClassVector::to_json`], validating labels against the
    /// declared basis.
    pub fn from_json(value: &Value) -> Result<Self> {
        let obj = value
            .as_object()
            .ok_or_else(|| Error::InvalidJson("expected an object".to_string()))?;
        let g = obj
            .get("genus")
            .and_then(Value::as_u64)
            .and_then(|g| u32::try_from(g).ok())
            .ok_or_else(|| Error::InvalidJson("missing or oversized integer `genus`".to_string()))?;
        let genus = Genus::new(g)?;
        let space = obj
            .get("space")
            .and_then(Value::as_str)
            .ok_or_else(|| Error::InvalidJson("missing string `space`".to_string()))
            .and_then(Space::parse)?;
        let coeffs = obj
            .get("coeffs")
            .and_then(Value::as_object)
            .ok_or_else(|| Error::InvalidJson("missing object `coeffs`".to_string()))?;
        let mut out = ClassVector::zero(genus, space);
        for (label, v) in coeffs {
            let class = BasisClass::parse(label)?;
            let s = v
                .as_str()
                .ok_or_else(|| Error::InvalidJson(format!("coefficient of `{label}` is not a string")))?;
            out.set_coeff(class, rat::parse(s)?)?;
        }
        Ok(out)
    }
}

/// Pullback along the forgetful cover `R̄_g → M̄_g`:
/// λ ↦ λ, δ_0 ↦ δ_0^t + δ_0^p + 2δ_0^b, δ_i ↦ δ_i^n + δ_i^t + δ_i^p for
/// 1 ≤ i < g/2, and δ_{g/2} ↦ δ_{g/2}^n + δ_{g/2}^p for even g.
pub fn pullback_r(c: &ClassVector) -> Result<ClassVector> {
    if c.space() != Space::M {
        return Err(Error::SpaceMismatch { expected: Space::M, found: c.space() });
    }
    let genus = c.genus();
    let h = genus.half();
    let mut out = ClassVector::zero(genus, Space::R);
    for (class, q) in c.iter() {
        match class {
            BasisClass::Lambda => {
                let v = out.coeff(&BasisClass::Lambda) + q;
                out.set_coeff(BasisClass::Lambda, v)?;
            }
            BasisClass::Delta(0) => {
                for (target, mult) in [
                    (BasisClass::Delta0T, 1),
                    (BasisClass::Delta0P, 1),
                    (BasisClass::Delta0B, 2),
                ] {
                    let v = out.coeff(&target) + q * rat::int(mult);
                    out.set_coeff(target, v)?;
                }
            }
            BasisClass::Delta(i) => {
                let mut targets = vec![BasisClass::DeltaN(*i), BasisClass::DeltaP(*i)];
                if !(genus.is_even() && *i == h) {
                    targets.push(BasisClass::DeltaT(*i));
                }
                for target in targets {
                    let v = out.coeff(&target) + q;
                    out.set_coeff(target, v)?;
                }
            }
            other => {
                return Err(Error::LabelNotInBasis { label: other.label() });
            }
        }
    }
    Ok(out)
}

/// Convention for the spin pullback: on the moduli stack the boundary
/// relation over Δ_i (i ≥ 1) carries a factor 2 from the exceptional-curve
/// automorphism; over the coarse space it does not.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SpinPullback {
    Stack,
    Coarse,
}

/// Pullback along `S̄_g⁺ → M̄_g`:
/// λ ↦ λ, δ_0 ↦ δ_0^n + 2δ_0^b in both conventions, and
/// δ_i ↦ 2(δ_i^+ + δ_i^-) on the stack, δ_i ↦ δ_i^+ + δ_i^- coarsely.
pub fn pullback_splus(c: &ClassVector, convention: SpinPullback) -> Result<ClassVector> {
    if c.space() != Space::M {
        return Err(Error::SpaceMismatch { expected: Space::M, found: c.space() });
    }
    let genus = c.genus();
    let factor = match convention {
        SpinPullback::Stack => rat::int(2),
        SpinPullback::Coarse => rat::int(1),
    };
    let mut out = ClassVector::zero(genus, Space::SPlus);
    for (class, q) in c.iter() {
        match class {
            BasisClass::Lambda => {
                let v = out.coeff(&BasisClass::Lambda) + q;
                out.set_coeff(BasisClass::Lambda, v)?;
            }
            BasisClass::Delta(0) => {
                for (target, mult) in [(BasisClass::Delta0N, 1), (BasisClass::Delta0B, 2)] {
                    let v = out.coeff(&target) + q * rat::int(mult);
                    out.set_coeff(target, v)?;
                }
            }
            BasisClass::Delta(i) => {
                for target in [BasisClass::DeltaPlus(*i), BasisClass::DeltaMinus(*i)] {
                    let v = out.coeff(&target) + q * &factor;
                    out.set_coeff(target, v)?;
                }
            }
            other => {
                return Err(Error::LabelNotInBasis { label: other.label() });
            }
        }
    }
    Ok(out)
}
