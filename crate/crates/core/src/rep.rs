//! Representations of disjoint unions of type-A quivers.
//!
//! Every indecomposable module over a type-A path algebra is an interval
//! module: `k` on a contiguous run of vertices, identity maps along the run
//! and zero elsewhere. Modules are identified with their support sets, using
//! global vertex ids, so intervals over two quivers that share a vertex set
//! compare equal.

use std::cmp::Ordering;
use std::collections::{BTreeMap, HashMap};
use std::fmt;

use num_rational::Rational64;
use num_traits::Zero;

use crate::error::{Error, Result};
use crate::matrices::IntVector;
use crate::quiver::ValuedQuiver;

/// A quiver whose connected components are paths with arbitrary orientation.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct PathQuiver {
    vertices: Vec<usize>,
    edges: Vec<(usize, usize)>,
    /// Components in path order, sorted by their minimal vertex.
    paths: Vec<Vec<usize>>,
    /// `vertex -> (component, position in path)`.
    place: BTreeMap<usize, (usize, usize)>,
}

impl PathQuiver {
    pub fn new(vertices: impl IntoIterator<Item = usize>, edges: impl IntoIterator<Item = (usize, usize)>) -> Result<Self> {
        let mut vertices: Vec<usize> = vertices.into_iter().collect();
        vertices.sort_unstable();
        vertices.dedup();
        let mut edges: Vec<(usize, usize)> = edges.into_iter().collect();
        edges.sort_unstable();

        let mut adj: BTreeMap<usize, Vec<usize>> = vertices.iter().map(|&v| (v, Vec::new())).collect();
        for &(s, t) in &edges {
            if s == t {
                return Err(Error::NotTypeA(format!("loop at {s}")));
            }
            for v in [s, t] {
                if !adj.contains_key(&v) {
                    return Err(Error::NotTypeA(format!("edge endpoint {v} outside vertex set")));
                }
            }
            if adj[&s].contains(&t) {
                return Err(Error::NotTypeA(format!("multiple edges between {s} and {t}")));
            }
            adj.get_mut(&s).unwrap().push(t);
            adj.get_mut(&t).unwrap().push(s);
        }
        if let Some((v, _)) = adj.iter().find(|(_, nb)| nb.len() > 2) {
            return Err(Error::NotTypeA(format!("vertex {v} has degree > 2")));
        }

        let mut place = BTreeMap::new();
        let mut paths = Vec::new();
        let mut visited: BTreeMap<usize, bool> = vertices.iter().map(|&v| (v, false)).collect();
        // Start every path at its smallest endpoint. Iterating vertices in
        // increasing order visits components by minimal vertex, but the first
        // vertex seen may be interior, so find an endpoint first.
        for &v in &vertices {
            if visited[&v] {
                continue;
            }
            let mut comp = vec![v];
            let mut stack = vec![v];
            visited.insert(v, true);
            while let Some(x) = stack.pop() {
                for &y in &adj[&x] {
                    if !visited[&y] {
                        visited.insert(y, true);
                        comp.push(y);
                        stack.push(y);
                    }
                }
            }
            let comp_edges = edges.iter().filter(|(s, _)| comp.contains(s)).count();
            if comp_edges + 1 != comp.len() {
                return Err(Error::NotTypeA(format!("component containing {v} has a cycle")));
            }
            let start = comp.iter().copied().filter(|x| adj[x].len() <= 1).min().expect("a path has an endpoint");
            let mut path = vec![start];
            let mut prev = None;
            let mut cur = start;
            while let Some(&next) = adj[&cur].iter().find(|&&y| Some(y) != prev) {
                prev = Some(cur);
                cur = next;
                path.push(cur);
            }
            let ci = paths.len();
            for (pos, &x) in path.iter().enumerate() {
                place.insert(x, (ci, pos));
            }
            paths.push(path);
        }
        Ok(PathQuiver { vertices, edges, paths, place })
    }

    /// Accepts a quiver whose components are simply-laced type-A paths.
    pub fn from_quiver(q: &ValuedQuiver) -> Result<Self> {
        if let Some(a) = q.arrows().iter().find(|a| !a.val.is_unit()) {
            return Err(Error::NotTypeA(format!(
                "arrow {}->{} has valuation ({},{})",
                a.src, a.tgt, a.val.d_prime, a.val.d_dprime
            )));
        }
        Self::new(1..=q.n(), q.arrows().iter().map(|a| (a.src, a.tgt)))
    }

    /// The linearly oriented path `1 -> 2 -> … -> m`.
    pub fn linear(m: usize) -> Self {
        Self::new(1..=m, (1..m).map(|i| (i, i + 1))).expect("a path")
    }

    /// Path `1 - 2 - … - m`; bit `k` of `orientation` reverses edge `{k+1, k+2}`.
    pub fn oriented_path(m: usize, orientation: u64) -> Self {
        let edges = (1..m).map(|i| if orientation >> (i - 1) & 1 == 1 { (i + 1, i) } else { (i, i + 1) });
        Self::new(1..=m, edges).expect("a path")
    }

    /// Full subquiver on all vertices except `v`.
    pub fn without_vertex(&self, v: usize) -> Self {
        Self::new(
            self.vertices.iter().copied().filter(|&x| x != v),
            self.edges.iter().copied().filter(|&(s, t)| s != v && t != v),
        )
        .expect("deleting a vertex keeps paths")
    }

    pub fn vertices(&self) -> &[usize] {
        &self.vertices
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn paths(&self) -> &[Vec<usize>] {
        &self.paths
    }

    pub fn len(&self) -> usize {
        self.vertices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vertices.is_empty()
    }

    fn position(&self, v: usize) -> Option<usize> {
        self.vertices.binary_search(&v).ok()
    }

    /// Checks that `m` is an interval module over this quiver.
    pub fn check_interval(&self, m: &IntervalModule) -> Result<()> {
        let bad = || Error::NotAnInterval(m.to_string());
        let mut comp = None;
        let mut positions = Vec::with_capacity(m.support.len());
        for v in &m.support {
            let &(c, p) = self.place.get(v).ok_or_else(bad)?;
            if *comp.get_or_insert(c) != c {
                return Err(bad());
            }
            positions.push(p);
        }
        positions.sort_unstable();
        if positions.is_empty() || positions.last().unwrap() - positions[0] + 1 != positions.len() {
            return Err(bad());
        }
        Ok(())
    }

    /// Dimension vector indexed by position in [`PathQuiver::vertices`].
    pub fn dim_vector(&self, m: &IntervalModule) -> IntVector {
        let mut x = vec![0; self.vertices.len()];
        for v in &m.support {
            if let Some(p) = self.position(*v) {
                x[p] = 1;
            }
        }
        x
    }
}

/// Indecomposable module given by its (contiguous) support.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct IntervalModule {
    support: Vec<usize>,
}

impl IntervalModule {
    pub fn new(support: impl IntoIterator<Item = usize>) -> Self {
        let mut support: Vec<usize> = support.into_iter().collect();
        support.sort_unstable();
        support.dedup();
        IntervalModule { support }
    }

    pub fn support(&self) -> &[usize] {
        &self.support
    }

    pub fn contains(&self, v: usize) -> bool {
        self.support.binary_search(&v).is_ok()
    }

    fn min(&self) -> usize {
        self.support.first().copied().unwrap_or(0)
    }
}

/// Ordered by minimal vertex, then size, then support.
impl Ord for IntervalModule {
    fn cmp(&self, other: &Self) -> Ordering {
        (self.min(), self.support.len(), &self.support).cmp(&(other.min(), other.support.len(), &other.support))
    }
}

impl PartialOrd for IntervalModule {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for IntervalModule {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.support.iter().map(|v| v.to_string()).collect();
        write!(f, "{{{}}}", parts.join(","))
    }
}

/// A basic tilting module, summands kept sorted.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct TiltingModule {
    summands: Vec<IntervalModule>,
}

impl TiltingModule {
    pub fn new(summands: impl IntoIterator<Item = IntervalModule>) -> Self {
        let mut summands: Vec<IntervalModule> = summands.into_iter().collect();
        summands.sort();
        summands.dedup();
        TiltingModule { summands }
    }

    pub fn summands(&self) -> &[IntervalModule] {
        &self.summands
    }

    pub fn contains(&self, m: &IntervalModule) -> bool {
        self.summands.binary_search(m).is_ok()
    }

    /// Sum of the summands' support indicators over vertices `1..=n`.
    pub fn dim_vector_global(&self, n: usize) -> IntVector {
        let mut c = vec![0; n];
        for m in &self.summands {
            for &v in &m.support {
                c[v - 1] += 1;
            }
        }
        c
    }
}

impl fmt::Display for TiltingModule {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.summands.iter().map(|m| m.to_string()).collect();
        write!(f, "{}", parts.join(" + "))
    }
}

/// All interval modules, ordered by minimal vertex and then size.
pub fn indecomposables(p: &PathQuiver) -> Vec<IntervalModule> {
    let mut out: Vec<IntervalModule> = p.paths.iter().flat_map(|path| path_intervals(path)).collect();
    out.sort();
    out
}

fn path_intervals(path: &[usize]) -> Vec<IntervalModule> {
    let mut out = Vec::new();
    for start in 0..path.len() {
        for end in start..path.len() {
            out.push(IntervalModule::new(path[start..=end].iter().copied()));
        }
    }
    out.sort();
    out
}

/// `dim Hom(M, N)` between intervals. With `I = M ∩ N`, a nonzero map exists
/// exactly when `I` is nonempty, no arrow enters `I` from `M \ I` (so `I` is
/// a quotient of `M`) and no arrow leaves `I` into `N \ I` (so `I` is a
/// submodule of `N`); it is then unique up to scalar.
pub fn hom_dim(p: &PathQuiver, m: &IntervalModule, n: &IntervalModule) -> Result<usize> {
    p.check_interval(m)?;
    p.check_interval(n)?;
    Ok(hom_dim_unchecked(p, m, n))
}

fn hom_dim_unchecked(p: &PathQuiver, m: &IntervalModule, n: &IntervalModule) -> usize {
    let in_both = |v: usize| m.contains(v) && n.contains(v);
    if !m.support.iter().any(|&v| n.contains(v)) {
        return 0;
    }
    for &(s, t) in &p.edges {
        if m.contains(s) && !n.contains(s) && in_both(t) {
            return 0;
        }
        if in_both(s) && n.contains(t) && !m.contains(t) {
            return 0;
        }
    }
    1
}

/// `dim Hom(M, N)` from the definition: stalk maps `f_v` on `supp M ∩ supp N`
/// subject to one commutation equation per arrow, solved by exact rank.
pub fn hom_dim_linear(p: &PathQuiver, m: &IntervalModule, n: &IntervalModule) -> Result<usize> {
    p.check_interval(m)?;
    p.check_interval(n)?;
    let vars: Vec<usize> = m.support.iter().copied().filter(|&v| n.contains(v)).collect();
    let var_of = |v: usize| vars.iter().position(|&x| x == v);
    let mut rows: Vec<Vec<Rational64>> = Vec::new();
    for &(s, t) in &p.edges {
        // N(s->t) ∘ f_s = f_t ∘ M(s->t) as maps M_s -> N_t
        if !m.contains(s) || !n.contains(t) {
            continue;
        }
        let mut row = vec![Rational64::zero(); vars.len()];
        if n.contains(s) {
            row[var_of(s).expect("s in both")] += Rational64::from_integer(1);
        }
        if m.contains(t) {
            row[var_of(t).expect("t in both")] -= Rational64::from_integer(1);
        }
        rows.push(row);
    }
    Ok(vars.len() - rank(rows))
}

fn rank(mut rows: Vec<Vec<Rational64>>) -> usize {
    let cols = rows.first().map_or(0, |r| r.len());
    let mut r = 0;
    for c in 0..cols {
        let Some(pivot) = (r..rows.len()).find(|&i| !rows[i][c].is_zero()) else {
            continue;
        };
        rows.swap(r, pivot);
        let pv = rows[r][c];
        for i in 0..rows.len() {
            if i != r && !rows[i][c].is_zero() {
                let factor = rows[i][c] / pv;
                let pivot_row = rows[r].clone();
                for (x, p) in rows[i][c..].iter_mut().zip(&pivot_row[c..]) {
                    *x -= *p * factor;
                }
            }
        }
        r += 1;
    }
    r
}

/// `⟨x, y⟩ = Σ_v x_v y_v − Σ_{i→j} x_i y_j`, vectors indexed by position in
/// [`PathQuiver::vertices`].
pub fn euler_form(p: &PathQuiver, x: &[i64], y: &[i64]) -> Result<i64> {
    let n = p.vertices.len();
    if x.len() != n || y.len() != n {
        return Err(Error::LengthMismatch(x.len(), y.len()));
    }
    let diag: i64 = x.iter().zip(y).map(|(a, b)| a * b).sum();
    let off: i64 = p
        .edges
        .iter()
        .map(|&(s, t)| x[p.position(s).unwrap()] * y[p.position(t).unwrap()])
        .sum();
    Ok(diag - off)
}

/// `dim Ext¹(M, N) = dim Hom(M, N) − ⟨dim M, dim N⟩`.
pub fn ext_dim(p: &PathQuiver, m: &IntervalModule, n: &IntervalModule) -> Result<usize> {
    p.check_interval(m)?;
    p.check_interval(n)?;
    ext_dim_unchecked(p, m, n)
}

fn ext_dim_unchecked(p: &PathQuiver, m: &IntervalModule, n: &IntervalModule) -> Result<usize> {
    let hom = hom_dim_unchecked(p, m, n) as i64;
    let euler = euler_form(p, &p.dim_vector(m), &p.dim_vector(n))?;
    let ext = hom - euler;
    if ext < 0 {
        return Err(Error::Invariant(format!("negative Ext({m}, {n}) = {ext}")));
    }
    Ok(ext as usize)
}

fn compatible(p: &PathQuiver, a: &IntervalModule, b: &IntervalModule) -> Result<bool> {
    Ok(ext_dim_unchecked(p, a, b)? == 0 && ext_dim_unchecked(p, b, a)? == 0)
}

/// Bron–Kerbosch with pivoting over a dense compatibility matrix.
fn maximal_cliques(adj: &[Vec<bool>]) -> Vec<Vec<usize>> {
    fn expand(adj: &[Vec<bool>], r: &mut Vec<usize>, p: Vec<usize>, x: Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if p.is_empty() {
            if x.is_empty() {
                out.push(r.clone());
            }
            return;
        }
        let pivot = *p
            .iter()
            .chain(&x)
            .max_by_key(|&&u| p.iter().filter(|&&v| adj[u][v]).count())
            .unwrap();
        let candidates: Vec<usize> = p.iter().copied().filter(|&v| !adj[pivot][v]).collect();
        let (mut p, mut x) = (p, x);
        for v in candidates {
            r.push(v);
            let np = p.iter().copied().filter(|&w| adj[v][w]).collect();
            let nx = x.iter().copied().filter(|&w| adj[v][w]).collect();
            expand(adj, r, np, nx, out);
            r.pop();
            p.retain(|&w| w != v);
            x.push(v);
        }
    }
    let mut out = Vec::new();
    expand(adj, &mut Vec::new(), (0..adj.len()).collect(), Vec::new(), &mut out);
    out
}

/// All maximal rigid sets of interval modules supported on one path component.
pub fn maximal_rigid_sets(p: &PathQuiver, component: usize) -> Result<Vec<Vec<IntervalModule>>> {
    let intervals = path_intervals(&p.paths[component]);
    let k = intervals.len();
    let mut adj = vec![vec![false; k]; k];
    for i in 0..k {
        for j in i + 1..k {
            let c = compatible(p, &intervals[i], &intervals[j])?;
            adj[i][j] = c;
            adj[j][i] = c;
        }
    }
    Ok(maximal_cliques(&adj)
        .into_iter()
        .map(|c| {
            let mut set: Vec<IntervalModule> = c.into_iter().map(|i| intervals[i].clone()).collect();
            set.sort();
            set
        })
        .collect())
}

/// All tilting modules: per component the maximal rigid sets (each must have
/// as many summands as the component has vertices), combined as a product.
pub fn tilting_modules(p: &PathQuiver) -> Result<Vec<TiltingModule>> {
    let mut per_component = Vec::with_capacity(p.paths.len());
    for (ci, path) in p.paths.iter().enumerate() {
        let mut sets = maximal_rigid_sets(p, ci)?;
        if let Some(bad) = sets.iter().find(|s| s.len() != path.len()) {
            return Err(Error::Invariant(format!(
                "maximal rigid set of size {} on a path with {} vertices",
                bad.len(),
                path.len()
            )));
        }
        sets.sort();
        per_component.push(sets);
    }
    let mut acc: Vec<Vec<IntervalModule>> = vec![Vec::new()];
    for sets in &per_component {
        acc = acc
            .iter()
            .flat_map(|prefix| {
                sets.iter().map(move |s| {
                    let mut v = prefix.clone();
                    v.extend(s.iter().cloned());
                    v
                })
            })
            .collect();
    }
    Ok(acc.into_iter().map(TiltingModule::new).collect())
}

/// For tilting `T` over a hereditary algebra, `X ∈ Fac T` iff `Ext¹(T, X) = 0`.
pub fn fac_contains(p: &PathQuiver, t: &TiltingModule, x: &IntervalModule) -> Result<bool> {
    p.check_interval(x)?;
    for s in &t.summands {
        p.check_interval(s)?;
        if ext_dim_unchecked(p, s, x)? != 0 {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Hasse quiver of the tilting poset: `arrows[k] = (i, j)` means
/// `Fac modules[j] ⊊ Fac modules[i]` and the two differ in one summand.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TiltHasse {
    pub modules: Vec<TiltingModule>,
    pub arrows: Vec<(usize, usize)>,
}

/// Orders a mutation pair `T = U ⊕ X`, `T' = U ⊕ Y`. Returns `true` when
/// `T -> T'`.
fn mutation_direction(
    p: &PathQuiver,
    t: &TiltingModule,
    x: &IntervalModule,
    t2: &TiltingModule,
    y: &IntervalModule,
) -> Result<bool> {
    let down = fac_contains(p, t, y)? && !fac_contains(p, t2, x)?;
    let up = fac_contains(p, t2, x)? && !fac_contains(p, t, y)?;
    match (down, up) {
        (true, false) => Ok(true),
        (false, true) => Ok(false),
        _ => Err(Error::Invariant(format!("incomparable mutation pair {t} / {t2}"))),
    }
}

pub fn tilt_hasse(p: &PathQuiver) -> Result<TiltHasse> {
    let modules = tilting_modules(p)?;
    tilt_hasse_of(p, modules)
}

/// Builds the Hasse arrows for an already enumerated list of tilting modules.
pub fn tilt_hasse_of(p: &PathQuiver, modules: Vec<TiltingModule>) -> Result<TiltHasse> {
    let mut groups: HashMap<Vec<IntervalModule>, Vec<(usize, usize)>> = HashMap::new();
    for (ti, t) in modules.iter().enumerate() {
        for k in 0..t.summands.len() {
            let mut rest = t.summands.clone();
            rest.remove(k);
            groups.entry(rest).or_default().push((ti, k));
        }
    }
    let mut arrows = Vec::new();
    for members in groups.values() {
        match members.as_slice() {
            [_] => {}
            [(a, ka), (b, kb)] => {
                let (ta, tb) = (&modules[*a], &modules[*b]);
                if mutation_direction(p, ta, &ta.summands[*ka], tb, &tb.summands[*kb])? {
                    arrows.push((*a, *b));
                } else {
                    arrows.push((*b, *a));
                }
            }
            more => {
                return Err(Error::Invariant(format!(
                    "almost complete module with {} complements",
                    more.len()
                )))
            }
        }
    }
    arrows.sort_unstable();
    Ok(TiltHasse { modules, arrows })
}

/// The unique tilting module `U ⊕ X` over `p` when `U` is tilting over `p`
/// with vertex `v` removed.
pub fn bongartz_complete(p: &PathQuiver, u: &[IntervalModule], v: usize) -> Result<TiltingModule> {
    if p.position(v).is_none() {
        return Err(Error::VertexOutOfRange { vertex: v, n: p.len() });
    }
    if u.len() + 1 != p.len() {
        return Err(Error::Invariant(format!("{} summands cannot complete over {} vertices", u.len(), p.len())));
    }
    for m in u {
        p.check_interval(m)?;
        if m.contains(v) {
            return Err(Error::Invariant(format!("{m} is supported at deleted vertex {v}")));
        }
    }
    for (i, a) in u.iter().enumerate() {
        for b in &u[i..] {
            if !compatible(p, a, b)? {
                return Err(Error::Invariant(format!("{a} and {b} are not rigid together")));
            }
        }
    }
    let mut found = Vec::new();
    for x in indecomposables(p) {
        if u.contains(&x) {
            continue;
        }
        let mut ok = true;
        for m in u {
            if !compatible(p, m, &x)? {
                ok = false;
                break;
            }
        }
        if ok {
            found.push(x);
        }
    }
    match found.len() {
        1 => Ok(TiltingModule::new(u.iter().cloned().chain(found))),
        k => Err(Error::Invariant(format!("found {k} complements at vertex {v}"))),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::dynkin::catalan;
    use num_bigint::BigUint;

    fn iv(s: &[usize]) -> IntervalModule {
        IntervalModule::new(s.iter().copied())
    }

    fn two_to_one() -> PathQuiver {
        PathQuiver::new([1, 2], [(2, 1)]).unwrap()
    }

    #[test]
    fn path_quiver_validation() {
        assert!(PathQuiver::new([1, 2, 3], [(1, 2), (2, 3), (3, 1)]).is_err());
        assert!(PathQuiver::new([1, 2, 3, 4], [(1, 2), (1, 3), (1, 4)]).is_err());
        assert!(PathQuiver::new([1], [(1, 1)]).is_err());
        assert!(PathQuiver::new([1, 2], [(1, 2), (2, 1)]).is_err());
        let p = PathQuiver::new([1, 2, 3, 4], [(3, 1), (4, 3)]).unwrap();
        assert_eq!(p.paths(), &[vec![1, 3, 4], vec![2]]);
    }

    #[test]
    fn indecomposable_counts() {
        assert_eq!(indecomposables(&PathQuiver::linear(1)).len(), 1);
        assert_eq!(indecomposables(&PathQuiver::linear(2)).len(), 3);
        assert_eq!(indecomposables(&PathQuiver::linear(3)).len(), 6);
        let list = indecomposables(&PathQuiver::linear(2));
        assert_eq!(list, vec![iv(&[1]), iv(&[1, 2]), iv(&[2])]);
    }

    #[test]
    fn interval_checks() {
        let p = PathQuiver::new([1, 2, 3], [(1, 3), (3, 2)]).unwrap();
        assert!(p.check_interval(&iv(&[1, 3])).is_ok());
        assert!(p.check_interval(&iv(&[1, 2])).is_err());
        assert!(p.check_interval(&iv(&[4])).is_err());
        assert!(p.check_interval(&iv(&[])).is_err());
        let other = PathQuiver::new([5, 6], [(5, 6)]).unwrap();
        assert!(hom_dim(&other, &iv(&[1]), &iv(&[5])).is_err());
    }

    #[test]
    fn hom_examples() {
        let p = two_to_one();
        assert_eq!(hom_dim(&p, &iv(&[1, 2]), &iv(&[2])).unwrap(), 1);
        assert_eq!(hom_dim_linear(&p, &iv(&[1, 2]), &iv(&[2])).unwrap(), 1);
        assert_eq!(hom_dim(&p, &iv(&[1, 2]), &iv(&[1, 2])).unwrap(), 1);
        assert_eq!(hom_dim(&p, &iv(&[2]), &iv(&[1])).unwrap(), 0);
        assert_eq!(hom_dim_linear(&p, &iv(&[2]), &iv(&[1])).unwrap(), 0);
        assert_eq!(hom_dim(&p, &iv(&[1, 2]), &iv(&[1])).unwrap(), 0);
        assert_eq!(hom_dim(&p, &iv(&[1]), &iv(&[1, 2])).unwrap(), 1);
    }

    #[test]
    fn euler_examples() {
        let p = two_to_one();
        assert_eq!(euler_form(&p, &[0, 1], &[0, 1]).unwrap(), 1);
        assert_eq!(euler_form(&p, &[0, 1], &[1, 0]).unwrap(), -1);
        assert_eq!(euler_form(&p, &[1, 0], &[0, 1]).unwrap(), 0);
        assert!(euler_form(&p, &[1], &[0, 1]).is_err());
    }

    #[test]
    fn ext_examples() {
        let p = two_to_one();
        assert_eq!(ext_dim(&p, &iv(&[2]), &iv(&[1])).unwrap(), 1);
        // projectives {1} and {1,2}
        for proj in [iv(&[1]), iv(&[1, 2])] {
            for x in indecomposables(&p) {
                assert_eq!(ext_dim(&p, &proj, &x).unwrap(), 0);
            }
        }
        for x in indecomposables(&PathQuiver::oriented_path(5, 0b1010)) {
            assert_eq!(ext_dim(&PathQuiver::oriented_path(5, 0b1010), &x, &x).unwrap(), 0);
        }
    }

    #[test]
    fn combinatorial_hom_matches_linear_exhaustively() {
        for m in 1..=5 {
            for orient in 0..1u64 << (m - 1) {
                let p = PathQuiver::oriented_path(m, orient);
                let list = indecomposables(&p);
                for a in &list {
                    for b in &list {
                        assert_eq!(hom_dim(&p, a, b).unwrap(), hom_dim_linear(&p, a, b).unwrap(), "{a} {b}");
                    }
                }
            }
        }
    }

    #[test]
    fn tilting_examples() {
        let p = two_to_one();
        let ts = tilting_modules(&p).unwrap();
        assert_eq!(
            ts,
            vec![
                TiltingModule::new([iv(&[1]), iv(&[1, 2])]),
                TiltingModule::new([iv(&[1, 2]), iv(&[2])]),
            ]
        );
        assert_eq!(tilting_modules(&PathQuiver::linear(1)).unwrap().len(), 1);
        for orient in 0..8 {
            assert_eq!(tilting_modules(&PathQuiver::oriented_path(4, orient)).unwrap().len(), 14);
        }
    }

    #[test]
    fn tilting_count_is_catalan_for_every_orientation() {
        for m in 1..=8usize {
            let orientations: Vec<u64> = if m <= 6 {
                (0..1u64 << (m - 1)).collect()
            } else {
                vec![0, 0b0101010, 0b1100110 & ((1 << (m - 1)) - 1)]
            };
            for orient in orientations {
                let p = PathQuiver::oriented_path(m, orient);
                let sets = maximal_rigid_sets(&p, 0).unwrap();
                assert!(sets.iter().all(|s| s.len() == m));
                assert_eq!(BigUint::from(sets.len()), catalan(m as u64), "m={m} orient={orient:b}");
            }
        }
    }

    #[test]
    fn disjoint_union_is_product() {
        let p = PathQuiver::new(1..=5, [(2, 1), (3, 4), (5, 4)]).unwrap();
        assert_eq!(tilting_modules(&p).unwrap().len(), 2 * 5);
    }

    #[test]
    fn fac_examples() {
        let p = two_to_one();
        let projective = TiltingModule::new([iv(&[1]), iv(&[1, 2])]);
        for x in indecomposables(&p) {
            assert!(fac_contains(&p, &projective, &x).unwrap());
        }
        let t = TiltingModule::new([iv(&[1, 2]), iv(&[2])]);
        for s in t.summands() {
            assert!(fac_contains(&p, &t, s).unwrap());
        }
        assert!(!fac_contains(&p, &t, &iv(&[1])).unwrap());
    }

    #[test]
    fn hasse_examples() {
        let h = tilt_hasse(&two_to_one()).unwrap();
        assert_eq!(h.modules[0], TiltingModule::new([iv(&[1]), iv(&[1, 2])]));
        assert_eq!(h.arrows, vec![(0, 1)]);
        assert!(tilt_hasse(&PathQuiver::linear(1)).unwrap().arrows.is_empty());
    }

    fn sources(h: &TiltHasse) -> Vec<usize> {
        (0..h.modules.len()).filter(|&i| !h.arrows.iter().any(|&(_, t)| t == i)).collect()
    }

    #[test]
    fn hasse_unique_source_is_projective() {
        for m in 1..=5 {
            for orient in 0..1u64 << (m - 1) {
                let p = PathQuiver::oriented_path(m, orient);
                let h = tilt_hasse(&p).unwrap();
                let src = sources(&h);
                assert_eq!(src.len(), 1);
                // projective P(v): everything reachable from v along arrows
                let projective = TiltingModule::new(p.vertices().iter().map(|&v| {
                    let mut reach = vec![v];
                    let mut frontier = vec![v];
                    while let Some(x) = frontier.pop() {
                        for &(s, t) in p.edges() {
                            if s == x && !reach.contains(&t) {
                                reach.push(t);
                                frontier.push(t);
                            }
                        }
                    }
                    IntervalModule::new(reach)
                }));
                assert_eq!(h.modules[src[0]], projective);
                // each module has one neighbour per summand on a connected path
                for i in 0..h.modules.len() {
                    let deg = h.arrows.iter().filter(|&&(s, t)| s == i || t == i).count();
                    assert!(deg <= m);
                }
            }
        }
    }

    #[test]
    fn linear_hasse_is_connected_tamari() {
        for m in 1..=6 {
            let h = tilt_hasse(&PathQuiver::linear(m)).unwrap();
            assert_eq!(BigUint::from(h.modules.len()), catalan(m as u64));
            let k = h.modules.len();
            let mut seen = vec![false; k];
            let mut stack = vec![0];
            seen[0] = true;
            while let Some(x) = stack.pop() {
                for &(s, t) in &h.arrows {
                    for (a, b) in [(s, t), (t, s)] {
                        if a == x && !seen[b] {
                            seen[b] = true;
                            stack.push(b);
                        }
                    }
                }
            }
            assert!(seen.iter().all(|&s| s));
            // Tamari lattice on C_m elements has (m-1) C_m / 2 cover relations
            let covers = (m - 1) * k / 2;
            assert_eq!(h.arrows.len(), covers);
        }
    }

    #[test]
    fn bongartz_examples() {
        let p = PathQuiver::new([1, 2, 3], [(2, 1)]).unwrap();
        let t = bongartz_complete(&p, &[iv(&[2]), iv(&[3])], 1).unwrap();
        assert_eq!(t, TiltingModule::new([iv(&[2]), iv(&[1, 2]), iv(&[3])]));

        let p = PathQuiver::new([1, 2, 3], [(1, 3)]).unwrap();
        let t = bongartz_complete(&p, &[iv(&[2]), iv(&[3])], 1).unwrap();
        assert_eq!(t, TiltingModule::new([iv(&[1, 3]), iv(&[2]), iv(&[3])]));

        let p = PathQuiver::new([1, 2], []).unwrap();
        let t = bongartz_complete(&p, &[iv(&[2])], 1).unwrap();
        assert_eq!(t, TiltingModule::new([iv(&[1]), iv(&[2])]));

        // U touching the deleted vertex is rejected
        let p = two_to_one();
        assert!(bongartz_complete(&p, &[iv(&[1, 2])], 1).is_err());
    }

    #[test]
    fn bongartz_completion_is_a_neighbour_in_the_hasse_quiver() {
        // completing a non-sincere almost complete module gives a tilting
        // module containing it, for every tilting module of the deleted quiver
        for orient in 0..8u64 {
            let p = PathQuiver::oriented_path(4, orient);
            let all = tilting_modules(&p).unwrap();
            for v in 1..=4 {
                let q = p.without_vertex(v);
                for u in tilting_modules(&q).unwrap() {
                    let t = bongartz_complete(&p, u.summands(), v).unwrap();
                    assert!(all.contains(&t));
                    assert!(u.summands().iter().all(|s| t.contains(s)));
                }
            }
        }
    }
}
