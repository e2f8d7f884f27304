//! Masks, subset enumeration, and fast zeta/Möbius transforms over the
//! 2^n subset lattice.
//!
//! Every other module indexes dense per-subset data through this one.
//! A subset S of the variable set {0, .., n-1} is encoded as an integer
//! mask with bit i set iff variable i is in S; a [`LatticeVector`] holds
//! one f64 per mask. The transforms run in O(n * 2^n) with one in-place
//! pass per bit.

use crate::error::{Error, Result};

/// Default upper bound on the variable count. 2^24 doubles is 128 MiB per
/// lattice vector; beyond that memory dominates every other cost. The CLI
/// lets the environment raise or lower this.
pub const DEFAULT_N_CAP: usize = 24;

/// Hard ceiling regardless of configuration: mask arithmetic uses u64 and
/// dense vectors above 2^30 entries are not a sensible use of this crate.
pub const MAX_SUPPORTED_N: usize = 30;

pub(crate) fn check_n(n: usize, cap: usize) -> Result<()> {
    if n == 0 {
        return Err(Error::ZeroVariables);
    }
    let cap = cap.min(MAX_SUPPORTED_N);
    if n > cap {
        return Err(Error::CapExceeded { n, cap });
    }
    Ok(())
}

/// A coalition S ⊆ {0, .., n-1} encoded as a bit mask, bit i ⇔ variable i.
///
/// Variables are 0-indexed. The full set N is `CoalitionMask::full(n)`,
/// i.e. mask 2^n - 1.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct CoalitionMask {
    bits: u64,
    n: usize,
}

impl CoalitionMask {
    /// Builds a mask, rejecting bits outside the n-variable range.
    pub fn new(bits: u64, n: usize) -> Result<Self> {
        check_n(n, MAX_SUPPORTED_N)?;
        if bits >= (1u64 << n) {
            return Err(Error::MaskOutOfRange { mask: bits, n });
        }
        Ok(Self { bits, n })
    }

    pub fn empty(n: usize) -> Self {
        Self { bits: 0, n }
    }

    /// The grand coalition N = {0, .., n-1}.
    pub fn full(n: usize) -> Self {
        Self {
            bits: (1u64 << n) - 1,
            n,
        }
    }

    /// Builds the mask containing exactly the given variable.
    pub fn singleton(i: usize, n: usize) -> Result<Self> {
        if i >= n {
            return Err(Error::IndexOutOfRange { index: i, n });
        }
        Ok(Self { bits: 1u64 << i, n })
    }

    pub fn bits(&self) -> u64 {
        self.bits
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// |S|.
    pub fn cardinality(&self) -> u32 {
        self.bits.count_ones()
    }

    pub fn is_empty(&self) -> bool {
        self.bits == 0
    }

    pub fn contains(&self, i: usize) -> bool {
        i < self.n && (self.bits >> i) & 1 == 1
    }

    pub fn is_subset_of(&self, other: Self) -> bool {
        self.bits & !other.bits == 0
    }

    pub fn intersects(&self, other: Self) -> bool {
        self.bits & other.bits != 0
    }

    /// N ∖ S within the same variable range.
    pub fn complement(&self) -> Self {
        Self {
            bits: !self.bits & ((1u64 << self.n) - 1),
            n: self.n,
        }
    }

    /// Index into a dense lattice vector.
    pub fn index(&self) -> usize {
        self.bits as usize
    }

    /// Member variables in increasing order.
    pub fn members(&self) -> impl Iterator<Item = usize> + '_ {
        let mut rest = self.bits;
        std::iter::from_fn(move || {
            if rest == 0 {
                None
            } else {
                let i = rest.trailing_zeros() as usize;
                rest &= rest - 1;
                Some(i)
            }
        })
    }

    /// Human-readable member list, e.g. `{0,2}`.
    pub fn describe(&self) -> String {
        let parts: Vec<String> = self.members().map(|i| i.to_string()).collect();
        format!("{{{}}}", parts.join(","))
    }
}

/// Dense vector of 2^n doubles indexed by subset mask.
#[derive(Debug, Clone, PartialEq)]
pub struct LatticeVector {
    n: usize,
    data: Vec<f64>,
}

impl LatticeVector {
    /// All-zero vector over an n-variable lattice.
    pub fn zeros(n: usize) -> Result<Self> {
        check_n(n, MAX_SUPPORTED_N)?;
        Ok(Self {
            n,
            data: vec![0.0; 1usize << n],
        })
    }

    /// Wraps an existing dense table; the length must be exactly 2^n and
    /// every entry finite.
    pub fn from_vec(n: usize, data: Vec<f64>) -> Result<Self> {
        check_n(n, MAX_SUPPORTED_N)?;
        let expected = 1usize << n;
        if data.len() != expected {
            return Err(Error::BadLength {
                len: data.len(),
                n,
                expected,
            });
        }
        if let Some(mask) = data.iter().position(|x| !x.is_finite()) {
            return Err(Error::NonFinite { mask: mask as u64 });
        }
        Ok(Self { n, data })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn len(&self) -> usize {
        self.data.len()
    }

    pub fn is_empty(&self) -> bool {
        false // 2^n >= 2 always
    }

    pub fn as_slice(&self) -> &[f64] {
        &self.data
    }

    pub fn get(&self, mask: CoalitionMask) -> f64 {
        debug_assert_eq!(mask.n(), self.n);
        self.data[mask.index()]
    }

    pub fn set(&mut self, mask: CoalitionMask, value: f64) {
        debug_assert_eq!(mask.n(), self.n);
        self.data[mask.index()] = value;
    }

    /// Iterates (mask, value) in increasing mask order.
    pub fn entries(&self) -> impl Iterator<Item = (CoalitionMask, f64)> + '_ {
        self.data.iter().enumerate().map(move |(i, &v)| {
            (
                CoalitionMask {
                    bits: i as u64,
                    n: self.n,
                },
                v,
            )
        })
    }

    pub fn max_abs(&self) -> f64 {
        self.data.iter().fold(0.0, |m, x| m.max(x.abs()))
    }

    /// Entrywise a*self + b*other.
    pub fn axpby(&self, a: f64, other: &LatticeVector, b: f64) -> Result<LatticeVector> {
        if self.n != other.n {
            return Err(Error::SizeMismatch {
                left: self.n,
                right: other.n,
            });
        }
        let data = self
            .data
            .iter()
            .zip(&other.data)
            .map(|(x, y)| a * x + b * y)
            .collect();
        Ok(LatticeVector { n: self.n, data })
    }
}

impl std::ops::Index<usize> for LatticeVector {
    type Output = f64;
    fn index(&self, mask: usize) -> &f64 {
        &self.data[mask]
    }
}

impl std::ops::IndexMut<usize> for LatticeVector {
    fn index_mut(&mut self, mask: usize) -> &mut f64 {
        &mut self.data[mask]
    }
}

fn for_each_bit_pair(data: &mut [f64], mut update: impl FnMut(&mut f64, &mut f64)) {
    // One pass per bit; within a pass, each index pair (m, m | bit) is
    // touched exactly once, low half first. Splitting at the bit keeps
    // the two halves disjoint so the pairing is safe and cache-friendly.
    let len = data.len();
    let mut bit = 1usize;
    while bit < len {
        for block in data.chunks_exact_mut(bit * 2) {
            let (lo, hi) = block.split_at_mut(bit);
            for (z, o) in lo.iter_mut().zip(hi.iter_mut()) {
                update(z, o);
            }
        }
        bit <<= 1;
    }
}

/// Möbius transform: g(S) = Σ_{L⊆S} (-1)^{|S|-|L|} f(L) for every mask S.
///
/// Inverse of [`zeta_transform`]. g(∅) = f(∅).
pub fn mobius_transform(f: &LatticeVector) -> LatticeVector {
    let mut out = f.clone();
    for_each_bit_pair(&mut out.data, |z, o| *o -= *z);
    debug_assert!(out.data.iter().all(|x| x.is_finite()));
    out
}

/// Zeta transform (subset sums): f(S) = Σ_{L⊆S} g(L) for every mask S.
pub fn zeta_transform(g: &LatticeVector) -> LatticeVector {
    let mut out = g.clone();
    for_each_bit_pair(&mut out.data, |z, o| *o += *z);
    debug_assert!(out.data.iter().all(|x| x.is_finite()));
    out
}

/// Reflection h(L) = f(N∖L): reverses the lattice through bit complement.
pub fn reflect(f: &LatticeVector) -> LatticeVector {
    let full = f.len() - 1;
    let data = (0..f.len()).map(|m| f.data[full ^ m]).collect();
    LatticeVector { n: f.n, data }
}

/// Enumerates the masks T with S ⊆ T ⊆ N in increasing numeric order.
pub fn supersets_of(s: CoalitionMask) -> impl Iterator<Item = CoalitionMask> {
    let comp = s.complement().bits();
    let n = s.n();
    let base = s.bits();
    let mut u: u64 = 0;
    let mut done = false;
    std::iter::from_fn(move || {
        if done {
            return None;
        }
        let t = CoalitionMask { bits: base | u, n };
        if u == comp {
            done = true;
        } else {
            u = u.wrapping_sub(comp) & comp;
        }
        Some(t)
    })
}
