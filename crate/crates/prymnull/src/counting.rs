//! Closed-form combinatorial counts: theta characteristics by parity, Prym
//! roots, the parity-change counts under tensoring by a Prym root, and the
//! boundary-fiber degrees of the two forgetful covers.
//!
//! Everything is an exact integer; counts grow like 2^{2g}, so all values
//! are arbitrary-precision.

use num::{BigUint, One};

use crate::class_space::BasisClass;
use crate::{Error, Result};

/// 2^e.
fn p2(e: u32) -> BigUint {
    BigUint::one() << e
}

/// The six parity counts of one genus.
///
/// `s_plus`/`s_minus` count even/odd theta characteristics, `prym_roots`
/// the nontrivial 2-torsion classes, and `n_plus`/`n_minus`/`n_pm` the
/// theta characteristics that stay even / stay odd / change parity when
/// tensored by a fixed Prym root. They satisfy
/// `n_plus + n_minus + 2·n_pm = s_plus + s_minus = 2^{2g}`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CountTable {
    pub genus: u32,
    pub s_plus: BigUint,
    pub s_minus: BigUint,
    pub prym_roots: BigUint,
    pub n_plus: BigUint,
    pub n_minus: BigUint,
    pub n_pm: BigUint,
}

/// Closed-form count table:
/// `s± = 2^{g-1}(2^g ± 1)`, `#R_g = 2^{2g} - 1`,
/// `N± = 2^{g-1}(2^{g-1} ± 1)`, `N^± = 2^{2g-2}`.
pub fn count_table(g: u32) -> Result<CountTable> {
    if g < 1 {
        return Err(Error::GenusTooSmall { g, min: 1 });
    }
    Ok(CountTable {
        genus: g,
        s_plus: p2(g - 1) * (p2(g) + 1u32),
        s_minus: p2(g - 1) * (p2(g) - 1u32),
        prym_roots: p2(2 * g) - 1u32,
        n_plus: p2(g - 1) * (p2(g - 1) + 1u32),
        n_minus: p2(g - 1) * (p2(g - 1) - 1u32),
        n_pm: p2(2 * g - 2),
    })
}

/// Fiber degree of one boundary component of `R̄_g` over its image Δ_i.
///
/// Over Δ_i with i ≥ 1 the cover splits by where the Prym root is
/// nontrivial: `deg(Δ_i^n|Δ_i) = 2^{2i} - 1`, `deg(Δ_i^t|Δ_i) = 2^{2(g-i)} - 1`,
/// `deg(Δ_i^p|Δ_i)` their product. Over Δ_0: `deg(Δ_0^t|Δ_0) = 1`,
/// `deg(Δ_0^p|Δ_0) = 2(2^{2(g-1)} - 1)`, `deg(Δ_0^b|Δ_0) = 2^{2(g-1)}`.
///
/// Indices run over the full range 1 ≤ i ≤ g−1; the i ↔ g−i symmetry is
/// deliberately not folded here so that the partition identity
/// `n + t + n·t = 2^{2g} - 1` can be checked verbatim.
pub fn boundary_degree_r(g: u32, label: &BasisClass) -> Result<BigUint> {
    if g < 2 {
        return Err(Error::GenusTooSmall { g, min: 2 });
    }
    let check_index = |i: u32| -> Result<()> {
        if i < 1 || i > g - 1 {
            Err(Error::IndexOutOfRange { index: i, min: 1, max: g - 1 })
        } else {
            Ok(())
        }
    };
    match label {
        BasisClass::Delta0T => Ok(BigUint::one()),
        BasisClass::Delta0P => Ok(2u32 * (p2(2 * (g - 1)) - 1u32)),
        BasisClass::Delta0B => Ok(p2(2 * (g - 1))),
        BasisClass::DeltaN(i) => {
            check_index(*i)?;
            Ok(p2(2 * i) - 1u32)
        }
        BasisClass::DeltaT(i) => {
            check_index(*i)?;
            Ok(p2(2 * (g - i)) - 1u32)
        }
        BasisClass::DeltaP(i) => {
            check_index(*i)?;
            Ok((p2(2 * i) - 1u32) * (p2(2 * (g - i)) - 1u32))
        }
        other => Err(Error::LabelNotInBasis { label: other.label() }),
    }
}

/// Fiber degree of one boundary component of `S̄_g⁺` over its image Δ_i.
///
/// `deg(Δ_i^+|Δ_i) = 2^{g-1}(2^i + 1)(2^{g-i} + 1)`,
/// `deg(Δ_i^-|Δ_i) = 2^{g-1}(2^i - 1)(2^{g-i} - 1)` for 1 ≤ i ≤ ⌊g/2⌋, and
/// over Δ_0: `deg(Δ_0^n|Δ_0) = 2^{2g-2}`, `deg(Δ_0^b|Δ_0) = 2^{g-2}(2^{g-1} + 1)`.
pub fn boundary_degree_s(g: u32, label: &BasisClass) -> Result<BigUint> {
    if g < 2 {
        return Err(Error::GenusTooSmall { g, min: 2 });
    }
    let check_index = |i: u32| -> Result<()> {
        if i < 1 || i > g / 2 {
            Err(Error::IndexOutOfRange { index: i, min: 1, max: g / 2 })
        } else {
            Ok(())
        }
    };
    match label {
        BasisClass::Delta0N => Ok(p2(2 * g - 2)),
        BasisClass::Delta0B => Ok(p2(g - 2) * (p2(g - 1) + 1u32)),
        BasisClass::DeltaPlus(i) => {
            check_index(*i)?;
            Ok(p2(g - 1) * (p2(*i) + 1u32) * (p2(g - i) + 1u32))
        }
        BasisClass::DeltaMinus(i) => {
            check_index(*i)?;
            Ok(p2(g - 1) * (p2(*i) - 1u32) * (p2(g - i) - 1u32))
        }
        other => Err(Error::LabelNotInBasis { label: other.label() }),
    }
}
