//! Slow, independent reference implementations used to validate the fast
//! paths.
//!
//! Everything here is written straight from the defining formulas —
//! explicit submask loops, alternating-sign sums, and (for Shapley) an
//! average over permutations — with no shared code or algorithmic tricks
//! from the production modules. The oracles are capped at n ≤ 12 (the
//! submask loops are O(3^n)).

use crate::error::{Error, Result};
use crate::lattice::LatticeVector;

/// Largest lattice the O(3^n) oracles will accept.
pub const ORACLE_N_CAP: usize = 12;

fn check_oracle_n(n: usize) -> Result<()> {
    if n > ORACLE_N_CAP {
        return Err(Error::CapExceeded { n, cap: ORACLE_N_CAP });
    }
    Ok(())
}

/// Iterates every submask of `mask`, including 0 and `mask` itself.
fn submasks(mask: usize) -> impl Iterator<Item = usize> {
    let mut sub = mask;
    let mut done = false;
    std::iter::from_fn(move || {
        if done {
            return None;
        }
        let cur = sub;
        if sub == 0 {
            done = true;
        } else {
            sub = (sub - 1) & mask;
        }
        Some(cur)
    })
}

fn parity_sign(s: usize, l: usize) -> f64 {
    if (s.count_ones() - l.count_ones()) % 2 == 0 {
        1.0
    } else {
        -1.0
    }
}

/// g(S) = Σ_{L⊆S} (-1)^{|S|-|L|} f(L), evaluated literally per mask.
pub fn mobius_naive(f: &LatticeVector) -> Result<LatticeVector> {
    check_oracle_n(f.n())?;
    let mut out = LatticeVector::zeros(f.n())?;
    for s in 0..f.len() {
        let mut acc = 0.0;
        for l in submasks(s) {
            acc += parity_sign(s, l) * f[l];
        }
        out[s] = acc;
    }
    Ok(out)
}

/// f(S) = Σ_{L⊆S} g(L), evaluated literally per mask.
pub fn zeta_naive(g: &LatticeVector) -> Result<LatticeVector> {
    check_oracle_n(g.n())?;
    let mut out = LatticeVector::zeros(g.n())?;
    for s in 0..g.len() {
        let mut acc = 0.0;
        for l in submasks(s) {
            acc += g[l];
        }
        out[s] = acc;
    }
    Ok(out)
}

/// AND interaction of a game, directly from the alternating-sign formula:
/// I_and(S) = Σ_{L⊆S} (-1)^{|S|-|L|} v(L).
pub fn harsanyi_and_direct(v: &LatticeVector) -> Result<LatticeVector> {
    mobius_naive(v)
}

/// OR interaction of a game, directly from the alternating-sign formula:
/// I_or(S) = -Σ_{L⊆S} (-1)^{|S|-|L|} v(N∖L) for S ≠ ∅, and I_or(∅) = 0.
pub fn harsanyi_or_direct(v: &LatticeVector) -> Result<LatticeVector> {
    check_oracle_n(v.n())?;
    let full = v.len() - 1;
    let mut out = LatticeVector::zeros(v.n())?;
    for s in 1..v.len() {
        let mut acc = 0.0;
        for l in submasks(s) {
            acc += parity_sign(s, l) * v[full ^ l];
        }
        out[s] = -acc;
    }
    Ok(out)
}

fn factorial(k: usize) -> f64 {
    (1..=k).map(|i| i as f64).product()
}

fn binomial(n: usize, k: usize) -> f64 {
    factorial(n) / (factorial(k) * factorial(n - k))
}

/// Shapley values straight from the subset-weighted marginal sum:
/// φ(i) = Σ_{S ⊆ N∖{i}} |S|!(n-|S|-1)!/n! · [v(S∪{i}) - v(S)].
pub fn shapley_direct(v: &LatticeVector) -> Result<Vec<f64>> {
    check_oracle_n(v.n())?;
    let n = v.n();
    let mut phi = vec![0.0; n];
    for (i, phi_i) in phi.iter_mut().enumerate() {
        let bit = 1usize << i;
        let mut acc = 0.0;
        for s in 0..v.len() {
            if s & bit != 0 {
                continue;
            }
            let size = s.count_ones() as usize;
            // |S|!(n-|S|-1)!/n! == 1 / (n * C(n-1, |S|))
            let weight = 1.0 / (n as f64 * binomial(n - 1, size));
            acc += weight * (v[s | bit] - v[s]);
        }
        *phi_i = acc;
    }
    Ok(phi)
}

/// Banzhaf values straight from the uniform marginal sum:
/// B(i) = 2^{-(n-1)} Σ_{S ⊆ N∖{i}} [v(S∪{i}) - v(S)].
pub fn banzhaf_direct(v: &LatticeVector) -> Result<Vec<f64>> {
    check_oracle_n(v.n())?;
    let n = v.n();
    let scale = 1.0 / (1u64 << (n - 1)) as f64;
    let mut b = vec![0.0; n];
    for (i, b_i) in b.iter_mut().enumerate() {
        let bit = 1usize << i;
        let mut acc = 0.0;
        for s in 0..v.len() {
            if s & bit != 0 {
                continue;
            }
            acc += v[s | bit] - v[s];
        }
        *b_i = scale * acc;
    }
    Ok(b)
}

/// Shapley values as the exact average of marginal contributions over all
/// n! orderings. Only for tiny n — the loop is O(n! · n).
pub fn shapley_permutation_average(v: &LatticeVector) -> Result<Vec<f64>> {
    let n = v.n();
    if n > 5 {
        return Err(Error::CapExceeded { n, cap: 5 });
    }
    let mut phi = vec![0.0; n];
    let mut order: Vec<usize> = (0..n).collect();
    let mut count = 0usize;
    permute(&mut order, 0, &mut |perm| {
        count += 1;
        let mut s = 0usize;
        for &i in perm {
            let next = s | (1 << i);
            phi[i] += v[next] - v[s];
            s = next;
        }
    });
    let total = count as f64;
    for p in &mut phi {
        *p /= total;
    }
    Ok(phi)
}

fn permute(order: &mut Vec<usize>, k: usize, visit: &mut impl FnMut(&[usize])) {
    if k == order.len() {
        visit(order);
        return;
    }
    for i in k..order.len() {
        order.swap(k, i);
        permute(order, k + 1, visit);
        order.swap(k, i);
    }
}
