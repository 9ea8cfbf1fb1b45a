//! Brute-force verification of the parity counts via quadratic refinements
//! of the standard symplectic form on `GF(2)^{2g}` and the Arf invariant.
//!
//! A theta characteristic is modeled by a quadratic form
//! `q: GF(2)^{2g} → GF(2)` refining the symplectic pairing, i.e. satisfying
//! `q(x+y) = q(x) + q(y) + ⟨x,y⟩`; its parity is the Arf invariant
//! `Σ q(a_i)q(b_i)`, and tensoring by a 2-torsion class η is the twist
//! `q ↦ q + ⟨·, η⟩`. All counts are then obtained by plain enumeration of
//! the 2^{2g} forms, with no formula in sight, which is what makes this
//! module an independent oracle for [`crate::counting`].

use num::BigUint;

use crate::counting::CountTable;
use crate::{Error, Result};

/// Bits 0, 2, 4, … of a `u64`.
const EVEN_BITS: u64 = 0x5555_5555_5555_5555;

/// Swap each adjacent bit pair (a_i ↔ b_i in the interleaved layout).
fn swap_pairs(x: u64) -> u64 {
    ((x & EVEN_BITS) << 1) | ((x >> 1) & EVEN_BITS)
}

/// `GF(2)^{2g}` with the standard symplectic basis `a_1, b_1, …, a_g, b_g`,
/// stored interleaved: bit 2m is a_{m+1}, bit 2m+1 is b_{m+1}. The pairing
/// is `⟨a_i, b_i⟩ = 1` with all other basis pairings zero.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SymplecticSpace {
    g: u32,
}

impl SymplecticSpace {
    /// Vectors are packed in a `u64`, so 2g ≤ 64.
    pub fn new(g: u32) -> Result<Self> {
        if (1..=32).contains(&g) {
            Ok(SymplecticSpace { g })
        } else {
            Err(Error::GenusOutOfRange { g, min: 1, max: 32 })
        }
    }

    pub fn genus(self) -> u32 {
        self.g
    }

    pub fn dim(self) -> u32 {
        2 * self.g
    }

    fn mask(self) -> u64 {
        if self.dim() == 64 {
            u64::MAX
        } else {
            (1u64 << self.dim()) - 1
        }
    }

    /// The symplectic pairing ⟨x, y⟩ = Σ_i (x_{a_i} y_{b_i} + x_{b_i} y_{a_i}).
    pub fn pairing(self, x: u64, y: u64) -> u8 {
        ((x & swap_pairs(y) & self.mask()).count_ones() & 1) as u8
    }
}

/// A quadratic refinement of the symplectic pairing, encoded by its values
/// on the 2g basis vectors. There are exactly 2^{2g} such forms.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct QuadraticForm {
    space: SymplecticSpace,
    values: u64,
}

impl QuadraticForm {
    pub fn new(space: SymplecticSpace, values: u64) -> Self {
        QuadraticForm { space, values: values & space.mask() }
    }

    pub fn space(self) -> SymplecticSpace {
        self.space
    }

    /// Values on the basis vectors, bit i = q(e_i).
    pub fn basis_values(self) -> u64 {
        self.values
    }

    /// Evaluate on an arbitrary vector by the polarization expansion
    /// `q(Σ e_i) = Σ q(e_i) + Σ_{i<j} ⟨e_i, e_j⟩`: the cross terms
    /// contribute one per complete (a_m, b_m) pair present in `x`.
    pub fn eval(self, x: u64) -> u8 {
        let x = x & self.space.mask();
        let base = (self.values & x).count_ones();
        let cross = (x & (x >> 1) & EVEN_BITS).count_ones();
        ((base + cross) & 1) as u8
    }

    /// Arf invariant `Σ_i q(a_i)·q(b_i)`. Zero exactly on the forms
    /// modeling even theta characteristics.
    pub fn arf(self) -> u8 {
        ((self.values & (self.values >> 1) & EVEN_BITS).count_ones() & 1) as u8
    }

    /// Twist by a nonzero vector: `q_η(x) = q(x) + ⟨x, η⟩`. On basis values
    /// this is an XOR with the pairing row of η, so the result is again a
    /// quadratic refinement; twisting twice gives back `q`.
    pub fn twist(self, eta: u64) -> Result<Self> {
        let eta = eta & self.space.mask();
        if eta == 0 {
            return Err(Error::ZeroTwist);
        }
        Ok(QuadraticForm::new(self.space, self.values ^ swap_pairs(eta)))
    }
}

/// Largest genus accepted by [`oracle_counts`]; enumeration visits
/// 2^{2g}·(2^{2g}−1) (form, twist) pairs, which stays in the seconds range
/// up to here.
pub const MAX_ORACLE_GENUS: u32 = 6;

/// Count parities and parity changes by full enumeration.
///
/// The twist counts are recomputed for every one of the 2^{2g}−1 nonzero
/// twist vectors and required to agree; the symplectic group acts
/// transitively on nonzero vectors, so any disagreement would expose a bug
/// in the evaluation rule rather than genuine η-dependence.
pub fn oracle_counts(g: u32) -> Result<CountTable> {
    if !(1..=MAX_ORACLE_GENUS).contains(&g) {
        return Err(Error::GenusOutOfRange { g, min: 1, max: MAX_ORACLE_GENUS });
    }
    let space = SymplecticSpace::new(g)?;
    let n_forms: u64 = 1 << space.dim();

    let arf_of: Vec<u8> =
        (0..n_forms).map(|v| QuadraticForm::new(space, v).arf()).collect();
    let s_plus = arf_of.iter().filter(|&&a| a == 0).count() as u64;
    let s_minus = n_forms - s_plus;

    let mut reference: Option<(u64, u64, u64)> = None;
    for eta in 1..n_forms {
        let row = swap_pairs(eta);
        let (mut n_plus, mut n_minus, mut even_to_odd, mut odd_to_even) = (0u64, 0u64, 0u64, 0u64);
        for v in 0..n_forms {
            match (arf_of[v as usize], arf_of[(v ^ row) as usize]) {
                (0, 0) => n_plus += 1,
                (1, 1) => n_minus += 1,
                (0, 1) => even_to_odd += 1,
                (_, _) => odd_to_even += 1,
            }
        }
        if even_to_odd != odd_to_even {
            return Err(Error::InconsistentEnumeration(format!(
                "g={g} eta={eta}: {even_to_odd} even→odd vs {odd_to_even} odd→even"
            )));
        }
        let triple = (n_plus, n_minus, even_to_odd);
        match reference {
            None => reference = Some(triple),
            Some(r) if r != triple => {
                return Err(Error::InconsistentEnumeration(format!(
                    "g={g}: twist counts depend on eta ({r:?} vs {triple:?} at eta={eta})"
                )));
            }
            Some(_) => {}
        }
    }
    let (n_plus, n_minus, n_pm) = reference.expect("at least one nonzero twist vector");

    Ok(CountTable {
        genus: g,
        s_plus: BigUint::from(s_plus),
        s_minus: BigUint::from(s_minus),
        prym_roots: BigUint::from(n_forms - 1),
        n_plus: BigUint::from(n_plus),
        n_minus: BigUint::from(n_minus),
        n_pm: BigUint::from(n_pm),
    })
}
