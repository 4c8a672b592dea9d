//! Brauer line and Brauer cycle algebras, through their radical-square-zero
//! quotients, and the closed-form counts of their support τ-tilting modules.

use num_bigint::BigUint;
use num_traits::{One, Zero};

use crate::dynkin::{binomial, catalan};
use crate::error::{Error, Result};
use crate::quiver::{SignVector, ValuedQuiver};

/// Loops at `1` and `n`, and arrows `i -> i+1`, `i+1 -> i` for `1 ≤ i < n`.
/// For `n = 1` the two end loops sit at the same vertex.
pub fn brauer_line_rsz(n: usize) -> Result<ValuedQuiver> {
    if n < 1 {
        return Err(Error::BrauerSize { kind: "line" });
    }
    let mut arrows = vec![(1, 1), (n, n)];
    for i in 1..n {
        arrows.push((i, i + 1));
        arrows.push((i + 1, i));
    }
    ValuedQuiver::from_unit_arrows(n, &arrows)
}

/// Arrows `α_i: i -> i+1` and `β_i: i+1 -> i` around an `n`-cycle. For
/// `n = 1` these are two loops; for `n = 2` the parallel pairs merge into
/// arrows valued `(2, 2)`.
pub fn brauer_cycle_rsz(n: usize) -> Result<ValuedQuiver> {
    if n < 1 {
        return Err(Error::BrauerSize { kind: "cycle" });
    }
    let mut arrows = Vec::with_capacity(2 * n);
    for i in 1..=n {
        let j = i % n + 1;
        arrows.push((i, j));
        arrows.push((j, i));
    }
    ValuedQuiver::from_unit_arrows(n, &arrows)
}

/// `binom(2n, n)`.
pub fn line_count(n: usize) -> BigUint {
    binomial(2 * n as u64, n as u64)
}

/// `2^(2n − 1)` for odd `n`; even cycles are τ-tilting-infinite.
pub fn cycle_count(n: usize) -> Result<BigUint> {
    if n < 1 {
        return Err(Error::BrauerSize { kind: "cycle" });
    }
    if n.is_multiple_of(2) {
        return Err(Error::EvenCycle(n));
    }
    Ok(BigUint::one() << (2 * n - 1))
}

/// The composition `(b_1, …, b_r)` of `n` cut at every `i` with
/// `ε(i) = ε(i+1)` (and at `n`). For the Brauer line with `ε(1) = +1`, the
/// parts are the sizes of the components of `Γ_ε`.
pub fn composition_of(e: &SignVector) -> Vec<usize> {
    let s = e.as_slice();
    let mut parts = Vec::new();
    let mut last = 0;
    for i in 1..=s.len() {
        if i == s.len() || s[i - 1] == s[i] {
            parts.push(i - last);
            last = i;
        }
    }
    parts
}

/// `P[n][r]`: sum over compositions of `n` into `r` positive parts of the
/// product of the Catalan numbers of the parts.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CompositionSum {
    table: Vec<Vec<BigUint>>,
}

impl CompositionSum {
    pub fn n_max(&self) -> usize {
        self.table.len() - 1
    }

    pub fn get(&self, n: usize, r: usize) -> BigUint {
        self.table.get(n).and_then(|row| row.get(r)).cloned().unwrap_or_default()
    }

    pub fn set(&mut self, n: usize, r: usize, v: BigUint) {
        self.table[n][r] = v;
    }

    /// Sum over all `r`, optionally restricted to one parity of `r`.
    fn row_sum(&self, n: usize, parity: Option<usize>) -> BigUint {
        (1..=n)
            .filter(|r| parity.is_none_or(|p| r % 2 == p))
            .map(|r| self.get(n, r))
            .fold(BigUint::zero(), |a, b| a + b)
    }
}

/// `P[n][1] = C_n` and `P[n][r] = Σ_k C_k P[n−k][r−1]`.
pub fn composition_sums(n_max: usize) -> CompositionSum {
    let c: Vec<BigUint> = (0..=n_max as u64).map(catalan).collect();
    let mut table = vec![vec![BigUint::zero(); n_max + 1]; n_max + 1];
    for n in 1..=n_max {
        table[n][1] = c[n].clone();
        for r in 2..=n {
            let mut acc = BigUint::zero();
            for k in 1..=n - r + 1 {
                acc += &c[k] * &table[n - k][r - 1];
            }
            table[n][r] = acc;
        }
    }
    CompositionSum { table }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IdentityCheck {
    pub name: &'static str,
    pub n: usize,
    pub lhs: BigUint,
    pub rhs: BigUint,
}

impl IdentityCheck {
    pub fn passed(&self) -> bool {
        self.lhs == self.rhs
    }
}

/// Checks, for `1 ≤ n ≤ n_max`:
/// `Σ_r P[n][r] = binom(2n, n) / 2`, `Σ_{r odd} P[n][r] = n C_{n−1}` and
/// `Σ_{r even} P[n][r] = (n − 1) C_{n−1}`.
pub fn verify_identities(n_max: usize) -> Vec<IdentityCheck> {
    verify_identities_with(&composition_sums(n_max))
}

/// [`verify_identities`] against a supplied table.
pub fn verify_identities_with(table: &CompositionSum) -> Vec<IdentityCheck> {
    let mut out = Vec::new();
    for n in 1..=table.n_max() {
        let cn1 = catalan(n as u64 - 1);
        out.push(IdentityCheck {
            name: "total-sum",
            n,
            lhs: table.row_sum(n, None),
            rhs: binomial(2 * n as u64, n as u64) / BigUint::from(2u32),
        });
        out.push(IdentityCheck {
            name: "odd-parts",
            n,
            lhs: table.row_sum(n, Some(1)),
            rhs: BigUint::from(n) * &cn1,
        });
        out.push(IdentityCheck {
            name: "even-parts",
            n,
            lhs: table.row_sum(n, Some(0)),
            rhs: BigUint::from(n - 1) * &cn1,
        });
    }
    out
}

/// The Catalan identities for `0 ≤ n ≤ n_max`: the convolution recurrence,
/// `(n+2) C_{n+1} = 2(2n+1) C_n`, and `Σ_t binom(2t,t) binom(2(n−t),n−t) = 4ⁿ`.
pub fn catalan_identities(n_max: usize) -> Vec<IdentityCheck> {
    let mut out = Vec::new();
    for n in 0..=n_max as u64 {
        out.push(IdentityCheck {
            name: "catalan-convolution",
            n: n as usize,
            lhs: catalan(n + 1),
            rhs: (0..=n).map(|k| catalan(k) * catalan(n - k)).fold(BigUint::zero(), |a, b| a + b),
        });
        out.push(IdentityCheck {
            name: "catalan-ratio",
            n: n as usize,
            lhs: BigUint::from(n + 2) * catalan(n + 1),
            rhs: BigUint::from(2 * (2 * n + 1)) * catalan(n),
        });
        out.push(IdentityCheck {
            name: "central-binomial-sum",
            n: n as usize,
            lhs: (0..=n)
                .map(|t| binomial(2 * t, t) * binomial(2 * (n - t), n - t))
                .fold(BigUint::zero(), |a, b| a + b),
            rhs: BigUint::from(4u32).pow(n as u32),
        });
    }
    out
}
