//! Cartan matrices, sign diagonals and sink reflections over hereditary
//! radical-square-zero quivers.

use std::fmt;
use std::ops::Mul;

use crate::error::{Error, Result};
use crate::quiver::{SignVector, ValuedQuiver};

pub type IntVector = Vec<i64>;

/// Dense square integer matrix, row-major.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct IntMatrix {
    n: usize,
    data: Vec<i64>,
}

impl IntMatrix {
    pub fn zeros(n: usize) -> Self {
        IntMatrix { n, data: vec![0; n * n] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n);
        for i in 0..n {
            m.data[i * n + i] = 1;
        }
        m
    }

    pub fn from_rows(rows: &[Vec<i64>]) -> Self {
        let n = rows.len();
        assert!(rows.iter().all(|r| r.len() == n), "matrix must be square");
        IntMatrix { n, data: rows.concat() }
    }

    pub fn size(&self) -> usize {
        self.n
    }

    /// Entry at 0-based `(row, col)`.
    pub fn get(&self, row: usize, col: usize) -> i64 {
        self.data[row * self.n + col]
    }

    pub fn set(&mut self, row: usize, col: usize, v: i64) {
        self.data[row * self.n + col] = v;
    }

    pub fn rows(&self) -> Vec<Vec<i64>> {
        self.data.chunks(self.n.max(1)).take(self.n).map(|r| r.to_vec()).collect()
    }

    pub fn scale(&self, k: i64) -> Self {
        IntMatrix { n: self.n, data: self.data.iter().map(|x| x * k).collect() }
    }

    pub fn sub(&self, other: &IntMatrix) -> Self {
        assert_eq!(self.n, other.n);
        IntMatrix { n: self.n, data: self.data.iter().zip(&other.data).map(|(a, b)| a - b).collect() }
    }

    pub fn apply(&self, x: &[i64]) -> Result<IntVector> {
        if x.len() != self.n {
            return Err(Error::LengthMismatch(self.n, x.len()));
        }
        Ok((0..self.n)
            .map(|i| (0..self.n).map(|j| self.get(i, j) * x[j]).sum())
            .collect())
    }
}

impl Mul for &IntMatrix {
    type Output = IntMatrix;
    fn mul(self, rhs: &IntMatrix) -> IntMatrix {
        assert_eq!(self.n, rhs.n, "matrix size mismatch");
        let n = self.n;
        let mut out = IntMatrix::zeros(n);
        for i in 0..n {
            for k in 0..n {
                let a = self.get(i, k);
                if a == 0 {
                    continue;
                }
                for j in 0..n {
                    out.data[i * n + j] += a * rhs.get(k, j);
                }
            }
        }
        out
    }
}

impl fmt::Display for IntMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for row in self.rows() {
            let cells: Vec<String> = row.iter().map(|v| format!("{v:>3}")).collect();
            writeln!(f, "[{}]", cells.join(" "))?;
        }
        Ok(())
    }
}

fn check_acyclic(q: &ValuedQuiver) -> Result<()> {
    if let Some(a) = q.arrows().iter().find(|a| a.src == a.tgt) {
        return Err(Error::Loop(a.src));
    }
    // Kahn's algorithm
    let n = q.n();
    let mut indeg = vec![0usize; n + 1];
    for a in q.arrows() {
        indeg[a.tgt] += 1;
    }
    let mut stack: Vec<usize> = (1..=n).filter(|&v| indeg[v] == 0).collect();
    let mut seen = 0;
    while let Some(v) = stack.pop() {
        seen += 1;
        for a in q.arrows().iter().filter(|a| a.src == v) {
            indeg[a.tgt] -= 1;
            if indeg[a.tgt] == 0 {
                stack.push(a.tgt);
            }
        }
    }
    if seen == n {
        Ok(())
    } else {
        Err(Error::OrientedCycle)
    }
}

/// Cartan matrix: column `i` is the dimension vector of `P(i)`, i.e.
/// `e_i + Σ_{i→j} d'_{ij} e_j`.
pub fn cartan(q: &ValuedQuiver) -> Result<IntMatrix> {
    check_acyclic(q)?;
    let mut c = IntMatrix::identity(q.n());
    for a in q.arrows() {
        c.set(a.tgt - 1, a.src - 1, i64::from(a.val.d_prime));
    }
    Ok(c)
}

/// `diag(ε(1), …, ε(n))`.
pub fn b_epsilon(e: &SignVector) -> IntMatrix {
    let mut m = IntMatrix::zeros(e.len());
    for (i, &s) in e.as_slice().iter().enumerate() {
        m.set(i, i, i64::from(s));
    }
    m
}

/// Reflection at the sink `a`: `y_a = −x_a + Σ_{i→a} d'_{ia} x_i`, other
/// coordinates unchanged.
pub fn reflect_at(q: &ValuedQuiver, a: usize, x: &[i64]) -> Result<IntVector> {
    if x.len() != q.n() {
        return Err(Error::LengthMismatch(q.n(), x.len()));
    }
    if a == 0 || a > q.n() {
        return Err(Error::VertexOutOfRange { vertex: a, n: q.n() });
    }
    if !q.is_sink(a) {
        return Err(Error::NotASink(a));
    }
    let inflow: i64 = q
        .arrows()
        .iter()
        .filter(|arr| arr.tgt == a)
        .map(|arr| i64::from(arr.val.d_prime) * x[arr.src - 1])
        .sum();
    let mut y = x.to_vec();
    y[a - 1] = -x[a - 1] + inflow;
    Ok(y)
}

/// Applies [`reflect_at`] at every vertex of `sinks`. The set must consist of
/// sinks that receive no arrow from another member, so the reflections commute.
pub fn reflect_at_sinks(q: &ValuedQuiver, sinks: &[usize], x: &[i64]) -> Result<IntVector> {
    for a in q.arrows() {
        if sinks.contains(&a.src) {
            return Err(Error::NotASink(a.src));
        }
    }
    sinks.iter().try_fold(x.to_vec(), |acc, &a| reflect_at(q, a, &acc))
}

fn check_witness(q: &ValuedQuiver, e: &SignVector) -> Result<()> {
    e.check_len(q.n())?;
    for a in q.arrows() {
        if !(e.at(a.src) == 1 && e.at(a.tgt) == -1) {
            return Err(Error::NotBipartiteWitness(a.src, a.tgt));
        }
    }
    Ok(())
}

/// Matrix of the simultaneous reflection at all `−1` vertices, computed as
/// `C_A · B_ε`. Every arrow must run from a `+1` vertex to a `−1` vertex.
pub fn s_epsilon(q: &ValuedQuiver, e: &SignVector) -> Result<IntMatrix> {
    check_witness(q, e)?;
    Ok(&cartan(q)? * &b_epsilon(e))
}

/// g-vector from a dimension vector: `B_ε · c`.
pub fn g_from_c(e: &SignVector, c: &[i64]) -> Result<IntVector> {
    if c.len() != e.len() {
        return Err(Error::LengthMismatch(e.len(), c.len()));
    }
    Ok(c.iter().zip(e.as_slice()).map(|(x, &s)| x * i64::from(s)).collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::quiver::{is_rsz_hereditary_bipartite, Arrow, Valuation};
    use proptest::prelude::*;

    fn sv(s: &[i8]) -> SignVector {
        SignVector::new(s.to_vec()).unwrap()
    }

    fn one_arrow(dp: u32, dpp: u32) -> ValuedQuiver {
        ValuedQuiver::new(2, [Arrow { src: 1, tgt: 2, val: Valuation { d_prime: dp, d_dprime: dpp } }]).unwrap()
    }

    #[test]
    fn cartan_examples() {
        assert_eq!(cartan(&one_arrow(1, 1)).unwrap(), IntMatrix::from_rows(&[vec![1, 0], vec![1, 1]]));
        assert_eq!(cartan(&ValuedQuiver::new(3, []).unwrap()).unwrap(), IntMatrix::identity(3));
        assert_eq!(cartan(&one_arrow(2, 1)).unwrap(), IntMatrix::from_rows(&[vec![1, 0], vec![2, 1]]));
        let cyc = ValuedQuiver::from_unit_arrows(3, &[(1, 2), (2, 3), (3, 1)]).unwrap();
        assert_eq!(cartan(&cyc), Err(Error::OrientedCycle));
        let looped = ValuedQuiver::from_unit_arrows(1, &[(1, 1)]).unwrap();
        assert_eq!(cartan(&looped), Err(Error::Loop(1)));
        // non-bipartite but acyclic is fine
        let path = ValuedQuiver::from_unit_arrows(3, &[(1, 2), (2, 3)]).unwrap();
        assert_eq!(cartan(&path).unwrap().get(2, 1), 1);
    }

    #[test]
    fn b_epsilon_examples() {
        assert_eq!(b_epsilon(&sv(&[1, -1])), IntMatrix::from_rows(&[vec![1, 0], vec![0, -1]]));
        assert_eq!(b_epsilon(&SignVector::all_plus(4)), IntMatrix::identity(4));
    }

    #[test]
    fn reflect_examples() {
        let q = one_arrow(1, 1);
        assert_eq!(reflect_at(&q, 2, &[1, 0]).unwrap(), vec![1, 1]);
        assert_eq!(reflect_at(&q, 1, &[1, 0]), Err(Error::NotASink(1)));
        let edgeless = ValuedQuiver::new(2, []).unwrap();
        assert_eq!(reflect_at(&edgeless, 1, &[1, 0]).unwrap(), vec![-1, 0]);
        let x = vec![3, -5];
        assert_eq!(reflect_at(&q, 2, &reflect_at(&q, 2, &x).unwrap()).unwrap(), x);
    }

    #[test]
    fn s_epsilon_examples() {
        let q = one_arrow(1, 1);
        let e = is_rsz_hereditary_bipartite(&q).unwrap();
        assert_eq!(e, sv(&[1, -1]));
        assert_eq!(s_epsilon(&q, &e).unwrap(), IntMatrix::from_rows(&[vec![1, 0], vec![1, -1]]));
        let edgeless = ValuedQuiver::new(2, []).unwrap();
        assert_eq!(s_epsilon(&edgeless, &sv(&[1, -1])).unwrap(), b_epsilon(&sv(&[1, -1])));
        assert_eq!(s_epsilon(&q, &sv(&[-1, 1])), Err(Error::NotBipartiteWitness(1, 2)));
    }

    #[test]
    fn g_from_c_examples() {
        assert_eq!(g_from_c(&sv(&[1, -1, 1]), &[2, 1, 1]).unwrap(), vec![2, -1, 1]);
        assert_eq!(g_from_c(&SignVector::all_plus(3), &[2, 1, 1]).unwrap(), vec![2, 1, 1]);
        let e = sv(&[-1, 1, -1]);
        let c = vec![4, 0, -2];
        assert_eq!(g_from_c(&e, &g_from_c(&e, &c).unwrap()).unwrap(), c);
        assert_eq!(g_from_c(&e, &[1]), Err(Error::LengthMismatch(3, 1)));
    }

    fn bipartite_quiver() -> impl Strategy<Value = ValuedQuiver> {
        (1usize..=8)
            .prop_flat_map(|n| {
                (
                    Just(n),
                    proptest::collection::vec(any::<bool>(), n),
                    proptest::collection::vec((0u32..=3, 1u32..=3), n * n),
                )
            })
            .prop_map(|(n, is_source, weights)| {
                let mut arrows = Vec::new();
                for i in 1..=n {
                    for j in 1..=n {
                        let (dp, dpp) = weights[(i - 1) * n + (j - 1)];
                        if is_source[i - 1] && !is_source[j - 1] && dp > 0 {
                            arrows.push(Arrow { src: i, tgt: j, val: Valuation { d_prime: dp, d_dprime: dpp } });
                        }
                    }
                }
                ValuedQuiver::new(n, arrows).unwrap()
            })
    }

    proptest! {
        #[test]
        fn matrix_identities(q in bipartite_quiver()) {
            let e = is_rsz_hereditary_bipartite(&q).expect("generator yields bipartite quivers");
            let n = q.n();
            let c = cartan(&q).unwrap();
            let b = b_epsilon(&e);
            let s = s_epsilon(&q, &e).unwrap();
            prop_assert_eq!(&s, &(&c * &b));
            prop_assert_eq!(&s * &s, IntMatrix::identity(n));
            prop_assert_eq!(&b * &b, IntMatrix::identity(n));
            prop_assert_eq!(IntMatrix::identity(n).scale(2).sub(&c), &(&b * &c) * &b);
        }

        #[test]
        fn sink_reflections_match_s_epsilon(q in bipartite_quiver(), seed in proptest::collection::vec(-5i64..5, 8)) {
            let e = is_rsz_hereditary_bipartite(&q).unwrap();
            let x = &seed[..q.n()];
            let mut sinks: Vec<usize> = (1..=q.n()).filter(|&v| e.at(v) == -1).collect();
            let via_matrix = s_epsilon(&q, &e).unwrap().apply(x).unwrap();
            prop_assert_eq!(reflect_at_sinks(&q, &sinks, x).unwrap(), via_matrix.clone());
            sinks.reverse();
            prop_assert_eq!(reflect_at_sinks(&q, &sinks, x).unwrap(), via_matrix);
        }
    }
}
