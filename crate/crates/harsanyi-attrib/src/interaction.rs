//! AND and OR interaction spectra and the universal-matching
//! reconstruction.
//!
//! Given a split v = v_and + v_or, the AND spectrum assigns each subset S
//! the joint-presence effect
//!
//! ```text
//! I_and(S) = Σ_{L⊆S} (−1)^{|S|−|L|} v_and(L)
//! ```
//!
//! (the Möbius transform of v_and), and the OR spectrum assigns each
//! nonempty S the any-presence effect
//!
//! ```text
//! I_or(S) = −Σ_{L⊆S} (−1)^{|S|−|L|} v_or(N∖L)
//! ```
//!
//! (a negated Möbius transform of the reflected table). Together they
//! reconstruct every masked output:
//!
//! ```text
//! v(S) = v(∅) + Σ_{L⊆S, L≠∅} I_and(L) + Σ_{L∩S≠∅} I_or(L)
//! ```
//!
//! for every S and every γ — the AND effects of subsets fully present in S
//! plus the OR effects of subsets S touches at all.

use crate::error::{Error, Result};
use crate::lattice::{mobius_transform, reflect, zeta_transform, CoalitionMask, LatticeVector};
use crate::split::AndOrSplit;

/// AND spectrum of an AND-component table: the Möbius transform. The ∅
/// entry carries v_and(∅), which reconstruction needs.
pub fn and_interactions_of(v_and: &LatticeVector) -> LatticeVector {
    mobius_transform(v_and)
}

/// OR spectrum of an OR-component table: −Möbius of the reflected table,
/// with the ∅ entry fixed to 0 (the OR effect is defined only for nonempty
/// subsets).
pub fn or_interactions_of(v_or: &LatticeVector) -> LatticeVector {
    let mut out = mobius_transform(&reflect(v_or));
    for m in 0..out.len() {
        // `0.0 - x` rather than `-x` so exact zeros stay +0.0 instead of
        // turning into -0.0 in reports.
        out[m] = 0.0 - out[m];
    }
    out[0] = 0.0;
    out
}

/// Both interaction spectra of a split, plus the baseline v(∅).
#[derive(Debug, Clone, PartialEq)]
pub struct InteractionSpectrum {
    i_and: LatticeVector,
    i_or: LatticeVector,
    baseline: f64,
}

impl InteractionSpectrum {
    pub fn from_split(split: &AndOrSplit) -> Self {
        Self {
            i_and: and_interactions_of(&split.v_and()),
            i_or: or_interactions_of(&split.v_or()),
            baseline: split.table().baseline(),
        }
    }

    pub fn n(&self) -> usize {
        self.i_and.n()
    }

    pub fn len(&self) -> usize {
        self.i_and.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    /// I_and per mask; the ∅ slot holds v_and(∅).
    pub fn i_and(&self) -> &LatticeVector {
        &self.i_and
    }

    /// I_or per mask; the ∅ slot is 0 by convention.
    pub fn i_or(&self) -> &LatticeVector {
        &self.i_or
    }

    /// v(∅), the additive constant of the reconstruction identity.
    pub fn baseline(&self) -> f64 {
        self.baseline
    }

    /// Combined effect I_and(S) + I_or(S) of a nonempty mask.
    pub fn total(&self, mask: usize) -> f64 {
        debug_assert_ne!(mask, 0);
        self.i_and[mask] + self.i_or[mask]
    }

    /// Σ over nonempty S of I_and(S) + I_or(S); equals v(N) − v(∅) by the
    /// reconstruction identity at S = N.
    pub fn total_effect(&self) -> f64 {
        let mut acc = 0.0;
        for m in 1..self.len() {
            acc += self.i_and[m] + self.i_or[m];
        }
        acc
    }

    /// Builds a spectrum from raw parts (rarely needed outside tests).
    pub fn from_parts(i_and: LatticeVector, i_or: LatticeVector, baseline: f64) -> Result<Self> {
        if i_and.n() != i_or.n() {
            return Err(Error::SizeMismatch {
                left: i_and.n(),
                right: i_or.n(),
            });
        }
        Ok(Self {
            i_and,
            i_or,
            baseline,
        })
    }
}

/// AND spectrum of a split.
pub fn and_interactions(split: &AndOrSplit) -> LatticeVector {
    and_interactions_of(&split.v_and())
}

/// OR spectrum of a split.
pub fn or_interactions(split: &AndOrSplit) -> LatticeVector {
    or_interactions_of(&split.v_or())
}

/// Reconstructs one masked output from the spectrum, straight from the
/// identity's two sums. O(2^n) per call; see [`reconstruct_all`] for the
/// batched form.
pub fn reconstruct_value(spectrum: &InteractionSpectrum, s: CoalitionMask) -> f64 {
    debug_assert_eq!(spectrum.n(), s.n());
    let s = s.index();
    let mut acc = spectrum.baseline;
    // AND effects of the nonempty subsets of S.
    for l in 1..spectrum.len() {
        if l & s == l {
            acc += spectrum.i_and[l];
        }
    }
    // OR effects of every subset that intersects S.
    for l in 1..spectrum.len() {
        if l & s != 0 {
            acc += spectrum.i_or[l];
        }
    }
    acc
}

/// Reconstructs all 2^n masked outputs in O(n·2^n) via zeta transforms:
/// the AND sum is a subset sum of I_and, and the OR sum over intersecting
/// subsets is the total OR mass minus the subset sum over N∖S.
pub fn reconstruct_all(spectrum: &InteractionSpectrum) -> LatticeVector {
    let za = zeta_transform(&spectrum.i_and);
    let zo = zeta_transform(&spectrum.i_or);
    let full = spectrum.len() - 1;
    let i_and_empty = spectrum.i_and[0];
    let or_total = zo[full];
    let data = (0..spectrum.len())
        .map(|s| spectrum.baseline + (za[s] - i_and_empty) + (or_total - zo[full ^ s]))
        .collect();
    LatticeVector::from_vec(spectrum.n(), data).expect("same shape as spectrum")
}

/// Largest absolute reconstruction error against the original table.
pub fn reconstruction_max_error(spectrum: &InteractionSpectrum, table: &LatticeVector) -> f64 {
    let rebuilt = reconstruct_all(spectrum);
    rebuilt
        .as_slice()
        .iter()
        .zip(table.as_slice())
        .fold(0.0, |m, (a, b)| m.max((a - b).abs()))
}
