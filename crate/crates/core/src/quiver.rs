//! Valued quivers presenting radical-square-zero algebras.
//!
//! Vertices are numbered `1..=n`. An arrow `i -> j` carries a valuation
//! `(d', d'')`; a bundle of `m` parallel unit arrows is stored as a single
//! arrow valued `(m, m)`.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Valuation {
    pub d_prime: u32,
    pub d_dprime: u32,
}

impl Valuation {
    pub const UNIT: Valuation = Valuation { d_prime: 1, d_dprime: 1 };

    pub fn new(d_prime: u32, d_dprime: u32) -> Result<Self> {
        if d_prime == 0 || d_dprime == 0 {
            return Err(Error::NonPositiveValuation(d_prime, d_dprime));
        }
        Ok(Valuation { d_prime, d_dprime })
    }

    pub fn transpose(self) -> Self {
        Valuation { d_prime: self.d_dprime, d_dprime: self.d_prime }
    }

    pub fn is_unit(self) -> bool {
        self == Self::UNIT
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Arrow {
    pub src: usize,
    pub tgt: usize,
    pub val: Valuation,
}

/// Input to [`normalize`]: either one plain arrow or one explicitly valued arrow.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum RawArrow {
    Unit { src: usize, tgt: usize },
    Valued { src: usize, tgt: usize, val: Valuation },
}

impl RawArrow {
    fn ends(&self) -> (usize, usize) {
        match *self {
            RawArrow::Unit { src, tgt } | RawArrow::Valued { src, tgt, .. } => (src, tgt),
        }
    }
}

/// A finite valued quiver. Arrows are sorted by `(src, tgt)` with at most
/// one arrow per ordered pair.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct ValuedQuiver {
    n: usize,
    arrows: Vec<Arrow>,
}

impl ValuedQuiver {
    /// Builds a quiver from already-merged arrows. Fails on duplicate ordered
    /// pairs or out-of-range vertices.
    pub fn new(n: usize, arrows: impl IntoIterator<Item = Arrow>) -> Result<Self> {
        let mut map = BTreeMap::new();
        for a in arrows {
            check_vertex(a.src, n)?;
            check_vertex(a.tgt, n)?;
            Valuation::new(a.val.d_prime, a.val.d_dprime)?;
            if map.insert((a.src, a.tgt), a.val).is_some() {
                return Err(Error::AmbiguousArrow { src: a.src, tgt: a.tgt });
            }
        }
        Ok(Self::from_map(n, map))
    }

    /// Quiver with unit arrows; repeated pairs are merged.
    pub fn from_unit_arrows(n: usize, arrows: &[(usize, usize)]) -> Result<Self> {
        let raw: Vec<_> = arrows.iter().map(|&(src, tgt)| RawArrow::Unit { src, tgt }).collect();
        normalize(n, &raw)
    }

    fn from_map(n: usize, map: BTreeMap<(usize, usize), Valuation>) -> Self {
        let arrows = map.into_iter().map(|((src, tgt), val)| Arrow { src, tgt, val }).collect();
        ValuedQuiver { n, arrows }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn arrows(&self) -> &[Arrow] {
        &self.arrows
    }

    pub fn arrow(&self, src: usize, tgt: usize) -> Option<&Arrow> {
        self.arrows
            .binary_search_by(|a| (a.src, a.tgt).cmp(&(src, tgt)))
            .ok()
            .map(|k| &self.arrows[k])
    }

    pub fn has_loops(&self) -> bool {
        self.arrows.iter().any(|a| a.src == a.tgt)
    }

    pub fn is_source(&self, v: usize) -> bool {
        !self.arrows.iter().any(|a| a.tgt == v)
    }

    pub fn is_sink(&self, v: usize) -> bool {
        !self.arrows.iter().any(|a| a.src == v)
    }

    /// True when `j -> i` is present with transposed valuation whenever
    /// `i -> j` is.
    pub fn is_symmetric(&self) -> bool {
        self.arrows
            .iter()
            .all(|a| self.arrow(a.tgt, a.src).map(|b| b.val) == Some(a.val.transpose()))
    }

    /// Serializes in the line-based quiver file format.
    pub fn to_file_string(&self) -> String {
        let mut out = format!("n {}\n", self.n);
        for a in &self.arrows {
            if a.val.is_unit() {
                out.push_str(&format!("a {} {}\n", a.src, a.tgt));
            } else {
                out.push_str(&format!("a {} {} {} {}\n", a.src, a.tgt, a.val.d_prime, a.val.d_dprime));
            }
        }
        out
    }
}

fn check_vertex(v: usize, n: usize) -> Result<()> {
    if v == 0 || v > n {
        Err(Error::VertexOutOfRange { vertex: v, n })
    } else {
        Ok(())
    }
}

/// Merges parallel unit arrows: `m` copies of `i -> j` become one arrow
/// valued `(m, m)`. An explicitly valued arrow must be the only arrow on its
/// ordered pair.
pub fn normalize(n: usize, raw: &[RawArrow]) -> Result<ValuedQuiver> {
    let mut units: BTreeMap<(usize, usize), u32> = BTreeMap::new();
    let mut valued: BTreeMap<(usize, usize), Valuation> = BTreeMap::new();
    for r in raw {
        let (src, tgt) = r.ends();
        check_vertex(src, n)?;
        check_vertex(tgt, n)?;
        match *r {
            RawArrow::Unit { .. } => *units.entry((src, tgt)).or_default() += 1,
            RawArrow::Valued { val, .. } => {
                Valuation::new(val.d_prime, val.d_dprime)?;
                if valued.insert((src, tgt), val).is_some() {
                    return Err(Error::AmbiguousArrow { src, tgt });
                }
            }
        }
    }
    let mut map = valued;
    for (key, m) in units {
        if map.contains_key(&key) {
            return Err(Error::AmbiguousArrow { src: key.0, tgt: key.1 });
        }
        map.insert(key, Valuation { d_prime: m, d_dprime: m });
    }
    Ok(ValuedQuiver::from_map(n, map))
}

/// Parses the quiver file format:
///
/// ```text
/// # comment
/// n 3
/// a 1 2
/// a 2 3 1 2
/// ```
pub fn parse_quiver(text: &str) -> Result<ValuedQuiver> {
    let mut n: Option<usize> = None;
    let mut raw = Vec::new();
    for (idx, line) in text.lines().enumerate() {
        let line_no = idx + 1;
        let content = line.split('#').next().unwrap_or("").trim();
        if content.is_empty() {
            continue;
        }
        let mut tokens = content.split_whitespace();
        let head = tokens.next().unwrap_or_default();
        let nums = tokens
            .map(|t| {
                t.parse::<u64>().map_err(|_| Error::Parse {
                    line: line_no,
                    msg: format!("expected a non-negative integer, got {t:?}"),
                })
            })
            .collect::<Result<Vec<u64>>>()?;
        let parse_err = |msg: &str| Error::Parse { line: line_no, msg: msg.to_string() };
        match head {
            "n" => {
                if n.is_some() {
                    return Err(parse_err("duplicate 'n' line"));
                }
                if !raw.is_empty() {
                    return Err(parse_err("'n' must precede all arrows"));
                }
                match nums.as_slice() {
                    [count] if *count >= 1 => n = Some(*count as usize),
                    [_] => return Err(parse_err("vertex count must be at least 1")),
                    _ => return Err(parse_err("'n' takes exactly one integer")),
                }
            }
            "a" => {
                let count = n.ok_or_else(|| parse_err("arrow before 'n' line"))?;
                let vertex = |v: u64| -> Result<usize> {
                    let v = v as usize;
                    if v == 0 || v > count {
                        Err(Error::Parse {
                            line: line_no,
                            msg: Error::VertexOutOfRange { vertex: v, n: count }.to_string(),
                        })
                    } else {
                        Ok(v)
                    }
                };
                match nums.as_slice() {
                    [s, t] => raw.push(RawArrow::Unit { src: vertex(*s)?, tgt: vertex(*t)? }),
                    [s, t, dp, dpp] => {
                        if *dp == 0 || *dpp == 0 {
                            return Err(Error::Parse {
                                line: line_no,
                                msg: Error::NonPositiveValuation(*dp as u32, *dpp as u32)
                                    .to_string(),
                            });
                        }
                        let val = Valuation { d_prime: *dp as u32, d_dprime: *dpp as u32 };
                        raw.push(RawArrow::Valued { src: vertex(*s)?, tgt: vertex(*t)?, val });
                    }
                    _ => return Err(parse_err("'a' takes 2 or 4 integers")),
                }
            }
            other => return Err(parse_err(&format!("unknown directive {other:?}"))),
        }
    }
    let n = n.ok_or(Error::Parse { line: 0, msg: "missing 'n' line".into() })?;
    normalize(n, &raw)
}

/// A sign vector `ε ∈ {±1}ⁿ`, indexed by vertices `1..=n`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SignVector(Vec<i8>);

impl SignVector {
    pub fn new(signs: Vec<i8>) -> Result<Self> {
        if let Some(&bad) = signs.iter().find(|&&s| s != 1 && s != -1) {
            return Err(Error::BadSign(bad as i64));
        }
        Ok(SignVector(signs))
    }

    pub fn all_plus(n: usize) -> Self {
        SignVector(vec![1; n])
    }

    pub fn all_minus(n: usize) -> Self {
        SignVector(vec![-1; n])
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// Sign at vertex `v` (1-based).
    pub fn at(&self, v: usize) -> i8 {
        self.0[v - 1]
    }

    pub fn is_plus(&self, v: usize) -> bool {
        self.at(v) == 1
    }

    pub fn as_slice(&self) -> &[i8] {
        &self.0
    }

    pub fn negated(&self) -> Self {
        SignVector(self.0.iter().map(|s| -s).collect())
    }

    /// Copy with the sign at vertex `v` reversed.
    pub fn flipped(&self, v: usize) -> Self {
        let mut s = self.0.clone();
        s[v - 1] = -s[v - 1];
        SignVector(s)
    }

    pub fn check_len(&self, n: usize) -> Result<()> {
        if self.0.len() != n {
            return Err(Error::SignLength { got: self.0.len(), expected: n });
        }
        Ok(())
    }
}

impl fmt::Display for SignVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (k, s) in self.0.iter().enumerate() {
            if k > 0 {
                write!(f, ",")?;
            }
            write!(f, "{s}")?;
        }
        write!(f, ")")
    }
}

/// `Γ_ε`: keeps exactly the arrows `i -> j` with `ε(i) = +1`, `ε(j) = −1`.
pub fn gamma_epsilon(q: &ValuedQuiver, e: &SignVector) -> Result<ValuedQuiver> {
    e.check_len(q.n)?;
    let arrows = q
        .arrows
        .iter()
        .filter(|a| e.at(a.src) == 1 && e.at(a.tgt) == -1)
        .copied()
        .collect();
    Ok(ValuedQuiver { n: q.n, arrows })
}

/// Reverses every arrow and transposes its valuation.
pub fn opposite(q: &ValuedQuiver) -> ValuedQuiver {
    let mut arrows: Vec<Arrow> = q
        .arrows
        .iter()
        .map(|a| Arrow { src: a.tgt, tgt: a.src, val: a.val.transpose() })
        .collect();
    arrows.sort();
    ValuedQuiver { n: q.n, arrows }
}

/// A weakly connected component, keeping the global vertex numbering.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Component {
    pub vertices: Vec<usize>,
    pub arrows: Vec<Arrow>,
}

fn union_find_groups(n: usize, edges: impl Iterator<Item = (usize, usize)>) -> Vec<Vec<usize>> {
    let mut parent: Vec<usize> = (0..=n).collect();
    fn find(p: &mut [usize], mut x: usize) -> usize {
        while p[x] != x {
            p[x] = p[p[x]];
            x = p[x];
        }
        x
    }
    for (a, b) in edges {
        let (ra, rb) = (find(&mut parent, a), find(&mut parent, b));
        if ra != rb {
            parent[ra.max(rb)] = ra.min(rb);
        }
    }
    let mut groups: BTreeMap<usize, Vec<usize>> = BTreeMap::new();
    for v in 1..=n {
        let r = find(&mut parent, v);
        groups.entry(r).or_default().push(v);
    }
    // roots are minimal vertices, so BTreeMap order is by minimal vertex
    groups.into_values().collect()
}

/// Weakly connected components sorted by their minimal vertex.
pub fn components(q: &ValuedQuiver) -> Vec<Component> {
    union_find_groups(q.n, q.arrows.iter().map(|a| (a.src, a.tgt)))
        .into_iter()
        .map(|vertices| {
            let set: BTreeSet<usize> = vertices.iter().copied().collect();
            let arrows = q.arrows.iter().filter(|a| set.contains(&a.src)).copied().collect();
            Component { vertices, arrows }
        })
        .collect()
}

/// Undirected edge `{a, b}` with `a < b`; `val` is the unordered valuation
/// pair stored as `(min, max)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Edge {
    pub a: usize,
    pub b: usize,
    pub val: (u32, u32),
}

/// Undirected valued graph on an explicit vertex set (global ids).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ValuedGraph {
    vertices: Vec<usize>,
    edges: Vec<Edge>,
}

impl ValuedGraph {
    /// Fails on self-edges, repeated edges or edges leaving the vertex set.
    pub fn new(mut vertices: Vec<usize>, edges: impl IntoIterator<Item = Edge>) -> Result<Self> {
        vertices.sort_unstable();
        vertices.dedup();
        let mut seen = BTreeSet::new();
        let mut out = Vec::new();
        for e in edges {
            let (a, b) = (e.a.min(e.b), e.a.max(e.b));
            if a == b {
                return Err(Error::Loop(a));
            }
            for v in [a, b] {
                if vertices.binary_search(&v).is_err() {
                    return Err(Error::VertexOutOfRange { vertex: v, n: vertices.len() });
                }
            }
            if !seen.insert((a, b)) {
                return Err(Error::TwoCycle(a, b));
            }
            let val = (e.val.0.min(e.val.1), e.val.0.max(e.val.1));
            out.push(Edge { a, b, val });
        }
        out.sort();
        Ok(ValuedGraph { vertices, edges: out })
    }

    pub fn vertices(&self) -> &[usize] {
        &self.vertices
    }

    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }

    pub fn neighbors(&self, v: usize) -> impl Iterator<Item = (usize, (u32, u32))> + '_ {
        self.edges.iter().filter_map(move |e| {
            if e.a == v {
                Some((e.b, e.val))
            } else if e.b == v {
                Some((e.a, e.val))
            } else {
                None
            }
        })
    }

    pub fn degree(&self, v: usize) -> usize {
        self.neighbors(v).count()
    }

    /// Induced subgraphs on connected components, ordered by minimal vertex.
    pub fn components(&self) -> Vec<ValuedGraph> {
        let max = self.vertices.last().copied().unwrap_or(0);
        let present: BTreeSet<usize> = self.vertices.iter().copied().collect();
        union_find_groups(max, self.edges.iter().map(|e| (e.a, e.b)))
            .into_iter()
            .filter(|g| present.contains(&g[0]))
            .map(|vertices| {
                let set: BTreeSet<usize> = vertices.iter().copied().collect();
                let edges = self.edges.iter().filter(|e| set.contains(&e.a)).copied().collect();
                ValuedGraph { vertices, edges }
            })
            .collect()
    }

    pub fn is_connected(&self) -> bool {
        self.components().len() <= 1
    }

    /// Applies a vertex relabeling (the map must be injective on the vertex set).
    pub fn relabel(&self, map: impl Fn(usize) -> usize) -> Result<ValuedGraph> {
        let vertices = self.vertices.iter().map(|&v| map(v)).collect();
        let edges = self.edges.iter().map(|e| Edge { a: map(e.a), b: map(e.b), val: e.val });
        ValuedGraph::new(vertices, edges)
    }
}

/// Forgets orientation. The quiver must be free of loops and 2-cycles.
pub fn underlying_graph(q: &ValuedQuiver) -> Result<ValuedGraph> {
    for a in &q.arrows {
        if a.src == a.tgt {
            return Err(Error::Loop(a.src));
        }
        if q.arrow(a.tgt, a.src).is_some() {
            return Err(Error::TwoCycle(a.src.min(a.tgt), a.src.max(a.tgt)));
        }
    }
    let edges = q.arrows.iter().map(|a| Edge { a: a.src, b: a.tgt, val: (a.val.d_prime, a.val.d_dprime) });
    ValuedGraph::new((1..=q.n).collect(), edges)
}

/// If every vertex is a source or a sink, returns `ε_A` (+1 on sources, −1
/// on sinks, +1 on isolated vertices).
pub fn is_rsz_hereditary_bipartite(q: &ValuedQuiver) -> Option<SignVector> {
    let mut has_out = vec![false; q.n + 1];
    let mut has_in = vec![false; q.n + 1];
    for a in &q.arrows {
        has_out[a.src] = true;
        has_in[a.tgt] = true;
    }
    let mut signs = Vec::with_capacity(q.n);
    for v in 1..=q.n {
        match (has_out[v], has_in[v]) {
            (true, true) => return None,
            (false, true) => signs.push(-1),
            _ => signs.push(1),
        }
    }
    Some(SignVector(signs))
}

/// `e^{ε,−} A e^{ε,+} = 0`: no arrow runs from a `−1` vertex to a `+1` vertex.
pub fn two_term_tilting_predicate(q: &ValuedQuiver, e: &SignVector) -> Result<bool> {
    e.check_len(q.n)?;
    Ok(!q.arrows.iter().any(|a| e.at(a.src) == -1 && e.at(a.tgt) == 1))
}

/// Full subquiver of `q` on `vertices`, renumbered `1..=k` in the given order.
pub fn induced_subquiver(q: &ValuedQuiver, vertices: &[usize]) -> Result<ValuedQuiver> {
    let pos: BTreeMap<usize, usize> = vertices.iter().enumerate().map(|(k, &v)| (v, k + 1)).collect();
    let arrows = q.arrows.iter().filter_map(|a| {
        Some(Arrow { src: *pos.get(&a.src)?, tgt: *pos.get(&a.tgt)?, val: a.val })
    });
    ValuedQuiver::new(vertices.len(), arrows)
}

/// The separated quiver: vertices `i⁺ = i` and `i⁻ = n + i`, one arrow
/// `i⁺ -> j⁻` per arrow `i -> j`.
pub fn separated_quiver(q: &ValuedQuiver) -> ValuedQuiver {
    let arrows = q
        .arrows
        .iter()
        .map(|a| Arrow { src: a.src, tgt: q.n + a.tgt, val: a.val })
        .collect::<Vec<_>>();
    ValuedQuiver::new(2 * q.n, arrows).expect("separated quiver is well formed")
}

#[cfg(test)]
mod tests {
    use super::*;

    fn arrow(src: usize, tgt: usize, dp: u32, dpp: u32) -> Arrow {
        Arrow { src, tgt, val: Valuation { d_prime: dp, d_dprime: dpp } }
    }

    fn three_cycle() -> ValuedQuiver {
        ValuedQuiver::from_unit_arrows(3, &[(1, 2), (2, 3), (3, 1)]).unwrap()
    }

    fn sv(s: &[i8]) -> SignVector {
        SignVector::new(s.to_vec()).unwrap()
    }

    #[test]
    fn parse_examples() {
        let q = parse_quiver("n 2\na 1 2\na 2 1").unwrap();
        assert_eq!(q.n(), 2);
        assert_eq!(q.arrows(), &[arrow(1, 2, 1, 1), arrow(2, 1, 1, 1)]);

        let q = parse_quiver("n 1\na 1 1").unwrap();
        assert_eq!(q.arrows(), &[arrow(1, 1, 1, 1)]);

        let q = parse_quiver("n 2\na 1 2\na 1 2").unwrap();
        assert_eq!(q.arrows(), &[arrow(1, 2, 2, 2)]);
    }

    #[test]
    fn parse_comments_and_valued() {
        let q = parse_quiver("# header\n\nn 3 # three vertices\na 1 2 1 2\na 3 2\n").unwrap();
        assert_eq!(q.arrows(), &[arrow(1, 2, 1, 2), arrow(3, 2, 1, 1)]);
    }

    #[test]
    fn parse_errors_carry_line_numbers() {
        assert!(matches!(parse_quiver("n 2\na 1 x"), Err(Error::Parse { line: 2, .. })));
        assert!(matches!(parse_quiver("n 2\n\na 1 3"), Err(Error::Parse { line: 3, .. })));
        assert!(matches!(parse_quiver("n 2\na 1 2 0 1"), Err(Error::Parse { line: 2, .. })));
        assert!(matches!(parse_quiver("a 1 2\nn 2"), Err(Error::Parse { line: 1, .. })));
        assert!(matches!(parse_quiver("n 2\nn 2"), Err(Error::Parse { line: 2, .. })));
        assert!(matches!(parse_quiver("n 2\nb 1 2"), Err(Error::Parse { line: 2, .. })));
        assert!(matches!(parse_quiver("n 2\na 1 2 3"), Err(Error::Parse { line: 2, .. })));
        assert!(matches!(parse_quiver("# nothing"), Err(Error::Parse { .. })));
        assert!(matches!(parse_quiver("n 0"), Err(Error::Parse { line: 1, .. })));
    }

    #[test]
    fn normalize_examples() {
        let unit = RawArrow::Unit { src: 1, tgt: 2 };
        let q = normalize(2, &[unit, unit, unit]).unwrap();
        assert_eq!(q.arrows(), &[arrow(1, 2, 3, 3)]);

        let valued = RawArrow::Valued { src: 1, tgt: 2, val: Valuation { d_prime: 1, d_dprime: 2 } };
        let q = normalize(2, &[valued]).unwrap();
        assert_eq!(q.arrows(), &[arrow(1, 2, 1, 2)]);

        assert_eq!(normalize(2, &[valued, unit]), Err(Error::AmbiguousArrow { src: 1, tgt: 2 }));
        assert_eq!(normalize(2, &[valued, valued]), Err(Error::AmbiguousArrow { src: 1, tgt: 2 }));
    }

    #[test]
    fn file_format_round_trip() {
        let q = ValuedQuiver::new(3, [arrow(1, 2, 1, 2), arrow(2, 2, 3, 3), arrow(3, 1, 1, 1)]).unwrap();
        assert_eq!(parse_quiver(&q.to_file_string()).unwrap(), q);
    }

    #[test]
    fn gamma_epsilon_examples() {
        let g = gamma_epsilon(&three_cycle(), &sv(&[1, -1, 1])).unwrap();
        assert_eq!(g.arrows(), &[arrow(1, 2, 1, 1)]);

        assert!(gamma_epsilon(&three_cycle(), &SignVector::all_plus(3)).unwrap().arrows().is_empty());

        let line = ValuedQuiver::from_unit_arrows(2, &[(1, 1), (2, 2), (1, 2), (2, 1)]).unwrap();
        let g = gamma_epsilon(&line, &sv(&[-1, 1])).unwrap();
        assert_eq!(g.arrows(), &[arrow(2, 1, 1, 1)]);

        assert!(gamma_epsilon(&line, &sv(&[1])).is_err());
    }

    #[test]
    fn opposite_examples() {
        let q = ValuedQuiver::new(2, [arrow(1, 2, 1, 2), arrow(1, 1, 1, 1)]).unwrap();
        let op = opposite(&q);
        assert_eq!(op.arrows(), &[arrow(1, 1, 1, 1), arrow(2, 1, 2, 1)]);
        assert_eq!(opposite(&op), q);
    }

    #[test]
    fn components_examples() {
        let q = ValuedQuiver::from_unit_arrows(3, &[(1, 2)]).unwrap();
        let cs: Vec<_> = components(&q).into_iter().map(|c| c.vertices).collect();
        assert_eq!(cs, vec![vec![1, 2], vec![3]]);

        let q = ValuedQuiver::new(3, []).unwrap();
        assert_eq!(components(&q).len(), 3);

        assert_eq!(components(&three_cycle()).len(), 1);

        let q = ValuedQuiver::from_unit_arrows(4, &[(4, 1), (3, 2)]).unwrap();
        let cs: Vec<_> = components(&q).into_iter().map(|c| c.vertices).collect();
        assert_eq!(cs, vec![vec![1, 4], vec![2, 3]]);
    }

    #[test]
    fn underlying_graph_examples() {
        let g = underlying_graph(&ValuedQuiver::from_unit_arrows(2, &[(1, 2)]).unwrap()).unwrap();
        assert_eq!(g.edges(), &[Edge { a: 1, b: 2, val: (1, 1) }]);

        let g = underlying_graph(&ValuedQuiver::new(2, [arrow(2, 1, 2, 1)]).unwrap()).unwrap();
        assert_eq!(g.edges(), &[Edge { a: 1, b: 2, val: (1, 2) }]);

        let looped = ValuedQuiver::from_unit_arrows(1, &[(1, 1)]).unwrap();
        assert_eq!(underlying_graph(&looped), Err(Error::Loop(1)));

        let two = ValuedQuiver::from_unit_arrows(2, &[(1, 2), (2, 1)]).unwrap();
        assert_eq!(underlying_graph(&two), Err(Error::TwoCycle(1, 2)));
    }

    #[test]
    fn bipartite_examples() {
        let q = ValuedQuiver::from_unit_arrows(3, &[(1, 2), (3, 2)]).unwrap();
        assert_eq!(is_rsz_hereditary_bipartite(&q), Some(sv(&[1, -1, 1])));

        let q = ValuedQuiver::from_unit_arrows(3, &[(1, 2), (2, 3)]).unwrap();
        assert_eq!(is_rsz_hereditary_bipartite(&q), None);

        let q = ValuedQuiver::new(1, []).unwrap();
        assert_eq!(is_rsz_hereditary_bipartite(&q), Some(sv(&[1])));

        let q = ValuedQuiver::from_unit_arrows(1, &[(1, 1)]).unwrap();
        assert_eq!(is_rsz_hereditary_bipartite(&q), None);
    }

    #[test]
    fn two_term_examples() {
        assert!(!two_term_tilting_predicate(&three_cycle(), &sv(&[1, -1, 1])).unwrap());
        assert!(two_term_tilting_predicate(&three_cycle(), &SignVector::all_minus(3)).unwrap());
        let q = ValuedQuiver::from_unit_arrows(2, &[(1, 2)]).unwrap();
        assert!(two_term_tilting_predicate(&q, &sv(&[1, -1])).unwrap());
    }

    #[test]
    fn sign_vector_validation_and_display() {
        assert_eq!(SignVector::new(vec![1, 0]), Err(Error::BadSign(0)));
        assert_eq!(sv(&[1, -1, 1]).to_string(), "(1,-1,1)");
        assert_eq!(sv(&[1, -1]).flipped(1), sv(&[-1, -1]));
        assert_eq!(sv(&[1, -1]).negated(), sv(&[-1, 1]));
    }

    #[test]
    fn separated_quiver_single_subquiver_is_gamma_epsilon() {
        let q = three_cycle();
        let s = separated_quiver(&q);
        let e = sv(&[1, -1, 1]);
        let chosen: Vec<usize> = (1..=3).map(|i| if e.is_plus(i) { i } else { 3 + i }).collect();
        let sub = induced_subquiver(&s, &chosen).unwrap();
        assert_eq!(sub, gamma_epsilon(&q, &e).unwrap());
    }
}
