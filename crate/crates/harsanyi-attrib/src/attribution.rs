//! Attribution values computed from an interaction spectrum, and the exact
//! decomposition identities relating them.
//!
//! Every identity here allocates the combined effects
//! I(T) = I_and(T) + I_or(T) across variables or coalitions:
//!
//! * Shapley: φ(i) = Σ_{T∋i} I(T)/|T| — each interaction shared evenly
//!   among its members.
//! * Banzhaf: B(i) = Σ_{T∋i} I(T)/2^{|T|−1}.
//! * Coalition: φ(S) = Σ_{T⊇S} (|S|/|T|)·I(T) — only interactions fully
//!   containing S count, each yielding S's per-member shares.
//! * Conflict: φ(S) = Σ_{i∈S} φ(i) − residual, where the residual is the
//!   mass of interactions that straddle S's boundary (∅ ≠ T∩S ≠ S). It is
//!   exactly the gap between attributing to S jointly and summing its
//!   members' individual attributions.
//! * Efficiency: φ(S) + Σ_{i∉S} φ(i) + residual = v(N) − v(∅).

use crate::error::{Error, Result};
use crate::interaction::InteractionSpectrum;
use crate::lattice::{supersets_of, CoalitionMask};

/// Per-variable Shapley and Banzhaf values of a spectrum.
#[derive(Debug, Clone, PartialEq)]
pub struct AttributionVector {
    phi: Vec<f64>,
    banzhaf: Vec<f64>,
}

impl AttributionVector {
    pub fn compute(spectrum: &InteractionSpectrum) -> Self {
        Self {
            phi: shapley_from_interactions(spectrum),
            banzhaf: banzhaf_from_interactions(spectrum),
        }
    }

    pub fn n(&self) -> usize {
        self.phi.len()
    }

    /// φ(i) for each variable.
    pub fn phi(&self) -> &[f64] {
        &self.phi
    }

    /// B(i) for each variable.
    pub fn banzhaf(&self) -> &[f64] {
        &self.banzhaf
    }

    /// Σ_i φ(i); equals v(N) − v(∅) by efficiency.
    pub fn phi_total(&self) -> f64 {
        self.phi.iter().sum()
    }
}

/// Shapley values via the interaction form: φ(i) = Σ_{T∋i} I(T)/|T|.
///
/// One ascending pass over the lattice, adding each interaction's
/// per-member share to every member — O(n·2^n) for all variables at once.
pub fn shapley_from_interactions(spectrum: &InteractionSpectrum) -> Vec<f64> {
    let n = spectrum.n();
    let mut phi = vec![0.0; n];
    for t in 1..spectrum.len() {
        let share = spectrum.total(t) / t.count_ones() as f64;
        let mut rest = t;
        while rest != 0 {
            let i = rest.trailing_zeros() as usize;
            phi[i] += share;
            rest &= rest - 1;
        }
    }
    phi
}

/// Banzhaf values via the interaction form: B(i) = Σ_{T∋i} I(T)/2^{|T|−1}.
pub fn banzhaf_from_interactions(spectrum: &InteractionSpectrum) -> Vec<f64> {
    let n = spectrum.n();
    let mut b = vec![0.0; n];
    for t in 1..spectrum.len() {
        let share = spectrum.total(t) / (1u64 << (t.count_ones() - 1)) as f64;
        let mut rest = t;
        while rest != 0 {
            let i = rest.trailing_zeros() as usize;
            b[i] += share;
            rest &= rest - 1;
        }
    }
    b
}

/// Coalition attribution φ(S) = Σ_{T⊇S} (|S|/|T|)·I(T).
///
/// For |S| = 1 this enumerates exactly the masks the batched Shapley pass
/// adds into variable i, in the same ascending order with the same term
/// values, so φ({i}) reproduces φ(i) bit for bit.
pub fn coalition_attribution(spectrum: &InteractionSpectrum, s: CoalitionMask) -> Result<f64> {
    if s.is_empty() {
        return Err(Error::EmptyCoalition);
    }
    let s_card = s.cardinality() as f64;
    let mut acc = 0.0;
    for t in supersets_of(s) {
        let t_card = t.cardinality() as f64;
        acc += s_card * spectrum.total(t.index()) / t_card;
    }
    Ok(acc)
}

/// One partial-overlap interaction in a [`ConflictReport`].
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ConflictTerm {
    /// The interaction's subset T, with ∅ ≠ T∩S ≠ S.
    pub mask: CoalitionMask,
    /// Allocation weight |T∩S|/|T|.
    pub weight: f64,
    /// weight · (I_and(T) + I_or(T)).
    pub contribution: f64,
}

/// The exact decomposition φ(S) = Σ_{i∈S} φ(i) − residual.
#[derive(Debug, Clone, PartialEq)]
pub struct ConflictReport {
    pub coalition: CoalitionMask,
    /// φ(S), the joint attribution.
    pub varphi: f64,
    /// Σ_{i∈S} φ(i), the naive per-member total.
    pub shapley_sum: f64,
    /// Σ over partial-overlap T of (|T∩S|/|T|)·I(T); the exact conflict
    /// between the two numbers above.
    pub partial_overlap_residual: f64,
    /// The residual itemized per interaction, in ascending mask order.
    /// Summing the contributions reproduces the residual exactly.
    pub per_term_breakdown: Vec<ConflictTerm>,
}

/// Decomposes a coalition's attribution into its members' Shapley values
/// minus the partial-overlap residual.
pub fn conflict_decomposition(
    spectrum: &InteractionSpectrum,
    s: CoalitionMask,
) -> Result<ConflictReport> {
    if s.is_empty() {
        return Err(Error::EmptyCoalition);
    }
    let varphi = coalition_attribution(spectrum, s)?;
    let phi = shapley_from_interactions(spectrum);
    let shapley_sum = s.members().map(|i| phi[i]).sum();

    let (residual, terms) = partial_overlap_residual(spectrum, s);
    Ok(ConflictReport {
        coalition: s,
        varphi,
        shapley_sum,
        partial_overlap_residual: residual,
        per_term_breakdown: terms,
    })
}

/// The residual Σ_{∅ ≠ T∩S ≠ S} (|T∩S|/|T|)·I(T) and its per-term
/// breakdown (zero contributions omitted).
fn partial_overlap_residual(
    spectrum: &InteractionSpectrum,
    s: CoalitionMask,
) -> (f64, Vec<ConflictTerm>) {
    let s_bits = s.index();
    let n = s.n();
    let mut residual = 0.0;
    let mut terms = Vec::new();
    for t in 1..spectrum.len() {
        let overlap = t & s_bits;
        if overlap == 0 || overlap == s_bits {
            continue;
        }
        let weight = overlap.count_ones() as f64 / t.count_ones() as f64;
        let contribution = overlap.count_ones() as f64 * spectrum.total(t) / t.count_ones() as f64;
        residual += contribution;
        if contribution != 0.0 {
            terms.push(ConflictTerm {
                mask: CoalitionMask::new(t as u64, n).expect("mask in range"),
                weight,
                contribution,
            });
        }
    }
    (residual, terms)
}

/// Splits one member's Shapley value into its equal share of the coalition
/// attribution plus an individual remainder:
/// φ(i) = φ(S)/|S| + Σ_{T∋i, T⊉S} I(T)/|T|.
///
/// Returns `(share, residual_i)`.
pub fn per_variable_decomposition(
    spectrum: &InteractionSpectrum,
    s: CoalitionMask,
    i: usize,
) -> Result<(f64, f64)> {
    if s.is_empty() {
        return Err(Error::EmptyCoalition);
    }
    if i >= s.n() {
        return Err(Error::IndexOutOfRange { index: i, n: s.n() });
    }
    if !s.contains(i) {
        return Err(Error::VariableNotInCoalition { index: i });
    }
    let share = coalition_attribution(spectrum, s)? / s.cardinality() as f64;
    let bit = 1usize << i;
    let s_bits = s.index();
    let mut residual_i = 0.0;
    for t in 1..spectrum.len() {
        if t & bit == 0 || t & s_bits == s_bits {
            continue;
        }
        residual_i += spectrum.total(t) / t.count_ones() as f64;
    }
    Ok((share, residual_i))
}

/// The full-output decomposition anchored at one coalition.
#[derive(Debug, Clone, PartialEq)]
pub struct EfficiencyReport {
    pub coalition: CoalitionMask,
    /// φ(S).
    pub varphi: f64,
    /// Σ_{i∉S} φ(i).
    pub outside_phi: f64,
    /// The partial-overlap residual of S.
    pub residual: f64,
    /// varphi + outside_phi + residual.
    pub total: f64,
    /// v(N) − v(∅) as carried by the spectrum.
    pub target: f64,
}

impl EfficiencyReport {
    pub fn max_abs_error(&self) -> f64 {
        (self.total - self.target).abs()
    }
}

/// Decomposes v(N) − v(∅) into the coalition's attribution, the outside
/// variables' Shapley values, and the boundary residual.
pub fn efficiency_report(
    spectrum: &InteractionSpectrum,
    s: CoalitionMask,
) -> Result<EfficiencyReport> {
    if s.is_empty() {
        return Err(Error::EmptyCoalition);
    }
    let varphi = coalition_attribution(spectrum, s)?;
    let phi = shapley_from_interactions(spectrum);
    // fold from +0.0: the complement may be empty, and the std Sum identity
    // is -0.0.
    let outside_phi = s.complement().members().fold(0.0, |acc, i| acc + phi[i]);
    let (residual, _) = partial_overlap_residual(spectrum, s);
    let total = varphi + outside_phi + residual;
    let target = spectrum.total_effect();
    Ok(EfficiencyReport {
        coalition: s,
        varphi,
        outside_phi,
        residual,
        total,
        target,
    })
}
