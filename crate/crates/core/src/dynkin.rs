//! Dynkin classification of connected valued graphs and the tilting-module
//! counts of the corresponding hereditary algebras.

use std::fmt;
use std::ops::{Add, Mul};

use num_bigint::BigUint;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::quiver::ValuedGraph;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum DynkinType {
    A(usize),
    /// `B_n` and `C_n` differ only in orientation of the valuation, which an
    /// undirected valued graph does not record.
    BC(usize),
    D(usize),
    E6,
    E7,
    E8,
    F4,
    G2,
    NonDynkin,
}

impl DynkinType {
    pub fn is_dynkin(self) -> bool {
        self != DynkinType::NonDynkin
    }

    pub fn rank(self) -> Option<usize> {
        use DynkinType::*;
        match self {
            A(n) | BC(n) | D(n) => Some(n),
            E6 => Some(6),
            E7 => Some(7),
            E8 => Some(8),
            F4 => Some(4),
            G2 => Some(2),
            NonDynkin => None,
        }
    }
}

impl fmt::Display for DynkinType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        use DynkinType::*;
        match self {
            A(n) => write!(f, "A{n}"),
            BC(n) => write!(f, "BC{n}"),
            D(n) => write!(f, "D{n}"),
            E6 => write!(f, "E6"),
            E7 => write!(f, "E7"),
            E8 => write!(f, "E8"),
            F4 => write!(f, "F4"),
            G2 => write!(f, "G2"),
            NonDynkin => write!(f, "non-Dynkin"),
        }
    }
}

/// An exact count that may be infinite.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum Count {
    Finite(BigUint),
    Infinite,
}

impl Count {
    pub fn one() -> Self {
        Count::Finite(BigUint::one())
    }

    pub fn zero() -> Self {
        Count::Finite(BigUint::zero())
    }

    pub fn is_finite(&self) -> bool {
        matches!(self, Count::Finite(_))
    }

    pub fn finite(&self) -> Option<&BigUint> {
        match self {
            Count::Finite(v) => Some(v),
            Count::Infinite => None,
        }
    }
}

impl From<u64> for Count {
    fn from(v: u64) -> Self {
        Count::Finite(BigUint::from(v))
    }
}

impl Add for Count {
    type Output = Count;
    fn add(self, rhs: Count) -> Count {
        match (self, rhs) {
            (Count::Finite(a), Count::Finite(b)) => Count::Finite(a + b),
            _ => Count::Infinite,
        }
    }
}

/// `0 · ∞` does not arise (every tilting count is positive), so any infinite
/// factor makes the product infinite.
impl Mul for Count {
    type Output = Count;
    fn mul(self, rhs: Count) -> Count {
        match (self, rhs) {
            (Count::Finite(a), Count::Finite(b)) => Count::Finite(a * b),
            _ => Count::Infinite,
        }
    }
}

impl std::iter::Sum for Count {
    fn sum<I: Iterator<Item = Count>>(iter: I) -> Count {
        iter.fold(Count::zero(), |acc, c| acc + c)
    }
}

impl std::iter::Product for Count {
    fn product<I: Iterator<Item = Count>>(iter: I) -> Count {
        iter.fold(Count::one(), |acc, c| acc * c)
    }
}

impl fmt::Display for Count {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Count::Finite(v) => write!(f, "{v}"),
            Count::Infinite => write!(f, "infinite"),
        }
    }
}

pub fn binomial(n: u64, k: u64) -> BigUint {
    if k > n {
        return BigUint::zero();
    }
    let k = k.min(n - k);
    let mut acc = BigUint::one();
    for i in 0..k {
        // acc = binom(n, i) here, so the division is exact
        acc = acc * BigUint::from(n - i) / BigUint::from(i + 1);
    }
    acc
}

/// `C_n = binom(2n, n) / (n + 1)`.
pub fn catalan(n: u64) -> BigUint {
    binomial(2 * n, n) / BigUint::from(n + 1)
}

fn exact_div(num: BigUint, den: BigUint) -> BigUint {
    let q = &num / &den;
    assert!(q.clone() * &den == num, "non-integral tilting count {num}/{den}");
    q
}

/// `((3n − 4) / (2n − 2)) · binom(2n − 2, n − 2)`, evaluated exactly.
/// Valid as a formula for every `n ≥ 2`; only `n ≥ 4` is a `D` type.
pub fn d_formula(n: u64) -> BigUint {
    assert!(n >= 2, "D formula needs n >= 2");
    exact_div(BigUint::from(3 * n - 4) * binomial(2 * n - 2, n - 2), BigUint::from(2 * n - 2))
}

/// Number of tilting modules over a hereditary algebra of the given type.
pub fn tilting_count(t: DynkinType) -> Count {
    use DynkinType::*;
    let v = match t {
        A(n) => catalan(n as u64),
        BC(n) => binomial(2 * n as u64 - 1, n as u64 - 1),
        D(n) => d_formula(n as u64),
        E6 => BigUint::from(418u32),
        E7 => BigUint::from(2431u32),
        E8 => BigUint::from(17342u32),
        F4 => BigUint::from(66u32),
        G2 => BigUint::from(5u32),
        NonDynkin => return Count::Infinite,
    };
    Count::Finite(v)
}

/// Classifies a connected valued graph. Disconnected input is an error; the
/// empty graph is not a valid input either (its count is handled by callers
/// as the empty product).
pub fn classify(g: &ValuedGraph) -> Result<DynkinType> {
    use DynkinType::*;
    let n = g.vertices().len();
    if n == 0 || !g.is_connected() {
        return Err(Error::Disconnected);
    }
    let edges = g.edges();
    if edges.len() != n - 1 {
        return Ok(NonDynkin);
    }
    if n == 1 {
        return Ok(A(1));
    }

    let mut doubles = Vec::new();
    let mut triples = 0;
    for e in edges {
        match e.val {
            (1, 1) => {}
            (1, 2) => doubles.push(*e),
            (1, 3) => triples += 1,
            _ => return Ok(NonDynkin),
        }
    }
    let max_degree = g.vertices().iter().map(|&v| g.degree(v)).max().unwrap_or(0);

    if triples > 0 {
        return Ok(if n == 2 { G2 } else { NonDynkin });
    }
    match doubles.len() {
        0 => {}
        1 => {
            if max_degree > 2 {
                return Ok(NonDynkin);
            }
            let e = doubles[0];
            let terminal = g.degree(e.a) == 1 || g.degree(e.b) == 1;
            return Ok(if terminal {
                BC(n)
            } else if n == 4 {
                F4
            } else {
                NonDynkin
            });
        }
        _ => return Ok(NonDynkin),
    }

    if max_degree <= 2 {
        return Ok(A(n));
    }
    let branch: Vec<usize> = g.vertices().iter().copied().filter(|&v| g.degree(v) >= 3).collect();
    if branch.len() != 1 || max_degree != 3 {
        return Ok(NonDynkin);
    }
    let center = branch[0];
    // lengths of the three arms hanging off the branch vertex
    let mut arms: Vec<usize> = g
        .neighbors(center)
        .map(|(start, _)| {
            let (mut prev, mut cur, mut len) = (center, start, 1);
            loop {
                let next = g.neighbors(cur).map(|(w, _)| w).find(|&w| w != prev);
                match next {
                    Some(w) => {
                        prev = cur;
                        cur = w;
                        len += 1;
                    }
                    None => break len,
                }
            }
        })
        .collect();
    arms.sort_unstable();
    Ok(match arms.as_slice() {
        [1, 1, _] => D(n),
        [1, 2, 2] => E6,
        [1, 2, 3] => E7,
        [1, 2, 4] => E8,
        _ => NonDynkin,
    })
}
