//! Catalog of the named test-curve families and their exact intersection
//! rows against the basis classes, together with their intersection numbers
//! with the even/odd Prym-null divisors.
//!
//! Three base families live on `M̄_g`: the reducible-nodal pencils `C_i`
//! (a genus-i curve glued to a moving point), the degree-12 elliptic-tail
//! pencil `C0`, and the irreducible-nodal family `Y` (two points of a fixed
//! curve glued together, one of them moving). Their lifts to `R̄_g` pick a
//! Prym root on each side of the node (`F/G/H` variants), or pull the
//! family back through one boundary component over Δ_0 (`Y0`, `Z0`, `T0`),
//! plus the quartic-tail pencil `R`. `Y0n` is the analogous lift to `S̄_g⁺`.
//!
//! Rows are published data, not computed geometry: each entry is the exact
//! intersection number of the family with one generating class, stored on
//! the canonical basis (so the index folding at g = 2i is already applied).

use std::fmt;

use num::{BigInt, BigRational};

use crate::class_space::{
    normalize_label, BasisClass, ClassVector, Genus, RawKind, Space, SpinPullback,
};
use crate::rat::{big2, int, pow2};
use crate::{Error, Result};

/// The named test-curve families. `Ci`, `Fi`, `Gi`, `Hi` take a boundary
/// index 2 ≤ i ≤ g−1; every other family is a single curve per genus.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CurveName {
    Ci,
    C0,
    Y,
    Fi,
    Gi,
    Hi,
    F0,
    G0,
    H0,
    Y0,
    Z0,
    T0,
    Y0n,
    R,
}

impl CurveName {
    pub fn parse(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().as_str() {
            "ci" => Ok(CurveName::Ci),
            "c0" => Ok(CurveName::C0),
            "y" => Ok(CurveName::Y),
            "fi" => Ok(CurveName::Fi),
            "gi" => Ok(CurveName::Gi),
            "hi" => Ok(CurveName::Hi),
            "f0" => Ok(CurveName::F0),
            "g0" => Ok(CurveName::G0),
            "h0" => Ok(CurveName::H0),
            "y0" => Ok(CurveName::Y0),
            "z0" => Ok(CurveName::Z0),
            "t0" => Ok(CurveName::T0),
            "y0n" => Ok(CurveName::Y0n),
            "r" => Ok(CurveName::R),
            other => Err(Error::UnknownCurve { name: other.to_string() }),
        }
    }

    pub fn takes_index(self) -> bool {
        matches!(self, CurveName::Ci | CurveName::Fi | CurveName::Gi | CurveName::Hi)
    }

    fn stem(self) -> &'static str {
        match self {
            CurveName::Ci => "C",
            CurveName::C0 => "C0",
            CurveName::Y => "Y",
            CurveName::Fi => "F",
            CurveName::Gi => "G",
            CurveName::Hi => "H",
            CurveName::F0 => "F0",
            CurveName::G0 => "G0",
            CurveName::H0 => "H0",
            CurveName::Y0 => "Y0",
            CurveName::Z0 => "Z0",
            CurveName::T0 => "T0",
            CurveName::Y0n => "Y0n",
            CurveName::R => "R",
        }
    }
}

impl fmt::Display for CurveName {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.stem())
    }
}

fn display_name(name: CurveName, index: Option<u32>) -> String {
    match index {
        Some(i) => format!("{}_{i}", name.stem()),
        None => name.stem().to_string(),
    }
}

/// One cataloged family: its intersection row plus pushforward data.
///
/// When both `pushforward_multiplicity` m and `base_curve` B are present,
/// the projection formula `T · π*(c) = m · (B · c)` holds for every basis
/// class c of `M̄_g`; `Y0n` satisfies it with the coarse spin pullback, as
/// recorded in `spin_convention`. The quartic-tail family `R` pushes
/// forward to a pencil that is not cataloged, so it declares neither.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TestCurveRow {
    pub name: CurveName,
    pub index: Option<u32>,
    pub row: ClassVector,
    pub pushforward_multiplicity: Option<BigRational>,
    pub base_curve: Option<CurveName>,
    pub spin_convention: Option<SpinPullback>,
}

impl TestCurveRow {
    pub fn genus(&self) -> Genus {
        self.row.genus()
    }

    pub fn space(&self) -> Space {
        self.row.space()
    }

    /// Subscripted name, e.g. `F_2` or `Y0n`.
    pub fn display_name(&self) -> String {
        display_name(self.name, self.index)
    }

    pub fn base_display_name(&self) -> Option<String> {
        self.base_curve.map(|b| display_name(b, self.index))
    }

    /// Intersection number of the family with a divisor class: the sum over
    /// the basis of row entry times class coefficient.
    pub fn pair(&self, class: &ClassVector) -> Result<BigRational> {
        self.row.dot(class)
    }
}

/// Intersection numbers of one `R̄_g` family with the even and odd
/// Prym-null divisors.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PrymNullPair {
    pub even: BigInt,
    pub odd: BigInt,
}

/// μ(g) = 2^{g-3}(2^{g-2}(g-3) + 1): the number of irreducible-nodal curves
/// in the family `Y` that admit a vanishing theta-null. Equals the pairing
/// of `Y0n` with the theta-null class.
pub fn mu(genus: Genus) -> BigInt {
    let g = genus.get();
    big2(g - 3) * (big2(g - 2) * BigInt::from(g - 3) + 1)
}

fn check_index(name: CurveName, genus: Genus, index: Option<u32>) -> Result<Option<u32>> {
    let g = genus.get();
    match (name.takes_index(), index) {
        (true, Some(i)) if (2..=g - 1).contains(&i) => Ok(Some(i)),
        (true, Some(i)) => Err(Error::IndexOutOfRange { index: i, min: 2, max: g - 1 }),
        (true, None) => Err(Error::MissingIndex { curve: name.to_string() }),
        (false, Some(_)) => Err(Error::UnexpectedIndex { curve: name.to_string() }),
        (false, None) => Ok(None),
    }
}

/// The exact intersection row of one family, on the canonical basis of its
/// ambient space.
pub fn row(name: CurveName, genus: Genus, index: Option<u32>) -> Result<TestCurveRow> {
    let index = check_index(name, genus, index)?;
    let g = genus.get() as i64;
    // #R_{g-1}(B) = 2^{2g-2} − 1, the Prym-root count entering Z0 and T0.
    let k = pow2(2 * g - 2) - int(1);
    let entries: Vec<(BasisClass, BigRational)>;
    let space;
    let mut mult: Option<BigRational> = None;
    let mut base: Option<CurveName> = None;
    let mut spin: Option<SpinPullback> = None;

    match name {
        CurveName::Ci => {
            let i = index.unwrap();
            space = Space::M;
            entries = vec![(BasisClass::Delta(i.min(genus.get() - i)), int(2 - 2 * i as i64))];
        }
        CurveName::C0 => {
            space = Space::M;
            entries = vec![
                (BasisClass::Lambda, int(1)),
                (BasisClass::Delta(0), int(12)),
                (BasisClass::Delta(1), int(-1)),
            ];
        }
        CurveName::Y => {
            space = Space::M;
            entries = vec![
                (BasisClass::Delta(0), int(2 - 2 * g)),
                (BasisClass::Delta(1), int(1)),
            ];
        }
        CurveName::Fi | CurveName::Gi | CurveName::Hi => {
            let i = index.unwrap();
            let kind = match name {
                CurveName::Fi => RawKind::N,
                CurveName::Gi => RawKind::T,
                _ => RawKind::P,
            };
            space = Space::R;
            entries = vec![(normalize_label(genus, kind, i)?, int(2 - 2 * i as i64))];
            mult = Some(int(1));
            base = Some(CurveName::Ci);
        }
        CurveName::F0 => {
            space = Space::R;
            entries = vec![
                (BasisClass::Lambda, int(1)),
                (BasisClass::Delta0P, int(12)),
                (BasisClass::DeltaT(1), int(-1)),
            ];
            mult = Some(int(1));
            base = Some(CurveName::C0);
        }
        CurveName::G0 => {
            space = Space::R;
            entries = vec![
                (BasisClass::Lambda, int(3)),
                (BasisClass::Delta0T, int(12)),
                (BasisClass::Delta0B, int(12)),
                (BasisClass::DeltaN(1), int(-3)),
            ];
            mult = Some(int(3));
            base = Some(CurveName::C0);
        }
        CurveName::H0 => {
            space = Space::R;
            entries = vec![
                (BasisClass::Lambda, int(3)),
                (BasisClass::Delta0P, int(12)),
                (BasisClass::Delta0B, int(12)),
                (BasisClass::DeltaP(1), int(-3)),
            ];
            mult = Some(int(3));
            base = Some(CurveName::C0);
        }
        CurveName::Y0 => {
            space = Space::R;
            entries = vec![
                (BasisClass::Delta0T, int(2 - 2 * g)),
                (BasisClass::DeltaN(1), int(1)),
            ];
            mult = Some(int(1));
            base = Some(CurveName::Y);
        }
        CurveName::Z0 => {
            space = Space::R;
            entries = vec![
                (BasisClass::Delta0P, int(4) * &k * int(1 - g)),
                (BasisClass::DeltaT(1), k.clone()),
                (BasisClass::DeltaP(1), k.clone()),
            ];
            // deg(Δ_0^p | Δ_0) = 2k fibers over each point of the base.
            mult = Some(int(2) * &k);
            base = Some(CurveName::Y);
        }
        CurveName::T0 => {
            space = Space::R;
            entries = vec![
                (BasisClass::Delta0B, pow2(2 * g - 2) * int(1 - g)),
                (BasisClass::DeltaN(1), int(1)),
                (BasisClass::DeltaP(1), k.clone()),
            ];
            // deg(Δ_0^b | Δ_0) = 2^{2g-2} = k + 1.
            mult = Some(pow2(2 * g - 2));
            base = Some(CurveName::Y);
        }
        CurveName::Y0n => {
            space = Space::SPlus;
            entries = vec![
                (BasisClass::Delta0N, pow2(2 * g - 1) * int(1 - g)),
                (BasisClass::DeltaPlus(1), pow2(g - 2) * (pow2(g - 1) + int(1))),
                (BasisClass::DeltaMinus(1), pow2(g - 2) * (pow2(g - 1) - int(1))),
            ];
            mult = Some(pow2(2 * g - 2));
            base = Some(CurveName::Y);
            // The projection formula holds with the coarse pullback; the
            // stack convention misses it by the automorphism factor 2.
            spin = Some(SpinPullback::Coarse);
        }
        CurveName::R => {
            space = Space::R;
            entries = vec![
                (BasisClass::Lambda, int(3)),
                (BasisClass::Delta0P, int(27)),
                (normalize_label(genus, RawKind::T, 3)?, int(-1)),
            ];
        }
    }

    Ok(TestCurveRow {
        name,
        index,
        row: ClassVector::from_entries(genus, space, entries)?,
        pushforward_multiplicity: mult,
        base_curve: base,
        spin_convention: spin,
    })
}

/// Intersection numbers of one `R̄_g` family with the even and odd
/// Prym-null divisors. The base families and the spin lift `Y0n` have no
/// such pair and are rejected.
pub fn prym_null_numbers(name: CurveName, genus: Genus, index: Option<u32>) -> Result<PrymNullPair> {
    let index = check_index(name, genus, index)?;
    let g = genus.get();
    let two = |e: u32| big2(e);
    let pair = match name {
        CurveName::Fi | CurveName::Gi | CurveName::Hi => {
            let i = index.unwrap();
            // Common factor r = 2^{g-2}(i-1) from the moving gluing point.
            let r = two(g - 2) * BigInt::from(i - 1);
            match name {
                CurveName::Fi => PrymNullPair {
                    even: (two(i - 1) - 1) * (two(g - i) - 1) * &r,
                    odd: two(i - 1) * (two(g - i) - 1) * &r,
                },
                CurveName::Gi => PrymNullPair {
                    even: (two(i) - 1) * (two(g - i - 1) - 1) * &r,
                    odd: (two(i) - 1) * two(g - i - 1) * &r,
                },
                _ => PrymNullPair {
                    even: (two(g - 1) - two(i - 1) - two(g - i - 1) + 1u32) * &r,
                    odd: (two(g - 1) - two(i - 1) - two(g - i - 1)) * &r,
                },
            }
        }
        CurveName::F0 | CurveName::G0 | CurveName::H0 => {
            PrymNullPair { even: BigInt::from(0), odd: BigInt::from(0) }
        }
        CurveName::Y0 => PrymNullPair { even: BigInt::from(0), odd: mu(genus) },
        CurveName::Z0 => {
            let k = two(2 * g - 2) - 1;
            PrymNullPair { even: &k * mu(genus), odd: k * mu(genus) }
        }
        CurveName::T0 => PrymNullPair {
            even: two(g - 2) * (two(g - 1) + 1u32) * mu(genus),
            odd: two(g - 2) * (two(g - 1) - 1u32) * mu(genus),
        },
        CurveName::R => PrymNullPair {
            even: two(g - 1) * (two(g - 4) - 1u32),
            odd: two(2 * g - 5),
        },
        CurveName::Ci | CurveName::C0 | CurveName::Y | CurveName::Y0n => {
            return Err(Error::NoIntersectionNumbers { curve: name.to_string() })
        }
    };
    Ok(pair)
}

/// Every cataloged `R̄_g` family for one genus, in deterministic order:
/// `F_i, G_i, H_i` for 2 ≤ i ≤ g−1, then `F0, G0, H0, Y0, Z0, T0, R`.
pub fn catalog(genus: Genus) -> Vec<TestCurveRow> {
    let mut out = Vec::new();
    for i in 2..genus.get() {
        for name in [CurveName::Fi, CurveName::Gi, CurveName::Hi] {
            out.push(row(name, genus, Some(i)).expect("indexed family in range"));
        }
    }
    for name in [
        CurveName::F0,
        CurveName::G0,
        CurveName::H0,
        CurveName::Y0,
        CurveName::Z0,
        CurveName::T0,
        CurveName::R,
    ] {
        out.push(row(name, genus, None).expect("non-indexed family"));
    }
    out
}
