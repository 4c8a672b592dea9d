//! The Hasse quiver of all support τ-tilting modules, assembled from the
//! tilt posets of the hereditary algebras `A_ε^!` (quiver `Γ_ε^op`) plus
//! gluing arrows between neighbouring sign vectors.
//!
//! A gluing arrow comes from a sign flip `ε₁ -> ε₂` at vertex `i` (`+1` to
//! `−1`) and a tilting module `U` over `Γ_ε₁^op` with `i` deleted. `U` has a
//! unique completion `T_k` over each side; the arrow runs `T₁ -> T₂`.

use std::collections::HashMap;

use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::matrices::{g_from_c, IntVector};
use crate::quiver::{gamma_epsilon, opposite, SignVector, ValuedQuiver};
use crate::rep::{bongartz_complete, tilt_hasse_of, tilting_modules, PathQuiver, TiltingModule};
use crate::signdec::{enumerate_signs, sign_at, sign_index};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct StauNode {
    pub eps: SignVector,
    /// Tilting module over `Γ_ε^op`.
    pub tilt: TiltingModule,
    pub g: IntVector,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum ArrowKind {
    /// Mutation inside one sign slice.
    Internal,
    /// Arrow between slices whose signs differ at one vertex.
    Gluing,
}

impl ArrowKind {
    pub fn as_str(self) -> &'static str {
        match self {
            ArrowKind::Internal => "internal",
            ArrowKind::Gluing => "gluing",
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct HasseArrow {
    pub from: usize,
    pub to: usize,
    pub kind: ArrowKind,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GluedHasse {
    pub nodes: Vec<StauNode>,
    pub arrows: Vec<HasseArrow>,
}

impl GluedHasse {
    pub fn in_degree(&self, v: usize) -> usize {
        self.arrows.iter().filter(|a| a.to == v).count()
    }

    pub fn out_degree(&self, v: usize) -> usize {
        self.arrows.iter().filter(|a| a.from == v).count()
    }

    pub fn sources(&self) -> Vec<usize> {
        let mut has_in = vec![false; self.nodes.len()];
        for a in &self.arrows {
            has_in[a.to] = true;
        }
        (0..self.nodes.len()).filter(|&v| !has_in[v]).collect()
    }

    pub fn sinks(&self) -> Vec<usize> {
        let mut has_out = vec![false; self.nodes.len()];
        for a in &self.arrows {
            has_out[a.from] = true;
        }
        (0..self.nodes.len()).filter(|&v| !has_out[v]).collect()
    }

    pub fn count_kind(&self, kind: ArrowKind) -> usize {
        self.arrows.iter().filter(|a| a.kind == kind).count()
    }

    pub fn is_acyclic(&self) -> bool {
        let k = self.nodes.len();
        let mut indeg = vec![0usize; k];
        let mut out: Vec<Vec<usize>> = vec![Vec::new(); k];
        for a in &self.arrows {
            indeg[a.to] += 1;
            out[a.from].push(a.to);
        }
        let mut stack: Vec<usize> = (0..k).filter(|&v| indeg[v] == 0).collect();
        let mut seen = 0;
        while let Some(v) = stack.pop() {
            seen += 1;
            for &w in &out[v] {
                indeg[w] -= 1;
                if indeg[w] == 0 {
                    stack.push(w);
                }
            }
        }
        seen == k
    }

    pub fn find(&self, eps: &SignVector, tilt: &TiltingModule) -> Option<usize> {
        self.nodes.iter().position(|n| &n.eps == eps && &n.tilt == tilt)
    }
}

/// `Γ_ε^op` as a path quiver, or `UnsupportedComponent` when some component
/// is not a simply-laced type-A path.
pub fn slice_path_quiver(q: &ValuedQuiver, e: &SignVector) -> Result<PathQuiver> {
    let op = opposite(&gamma_epsilon(q, e)?);
    PathQuiver::from_quiver(&op).map_err(|err| Error::UnsupportedComponent {
        eps: e.to_string(),
        reason: match err {
            Error::NotTypeA(r) => r,
            other => other.to_string(),
        },
    })
}

fn node_for(e: &SignVector, tilt: TiltingModule) -> StauNode {
    let c = tilt.dim_vector_global(e.len());
    let g = g_from_c(e, &c).expect("lengths agree");
    StauNode { eps: e.clone(), tilt, g }
}

struct Slice {
    quiver: PathQuiver,
    nodes: Vec<StauNode>,
    internal: Vec<(usize, usize)>,
}

fn build_slices(q: &ValuedQuiver) -> Result<Vec<Slice>> {
    let n = q.n();
    // sequential so the reported unsupported ε is the first in order
    let quivers: Vec<(SignVector, PathQuiver)> = enumerate_signs(n)?
        .map(|e| Ok((e.clone(), slice_path_quiver(q, &e)?)))
        .collect::<Result<_>>()?;
    quivers
        .into_par_iter()
        .map(|(e, quiver)| {
            let hasse = tilt_hasse_of(&quiver, tilting_modules(&quiver)?)?;
            let nodes = hasse.modules.into_iter().map(|t| node_for(&e, t)).collect();
            Ok(Slice { quiver, nodes, internal: hasse.arrows })
        })
        .collect()
}

/// All support τ-tilting modules, as tilting modules over `Γ_ε^op` with
/// their g-vectors, ordered by `ε` and then enumeration order.
pub fn stau_nodes(q: &ValuedQuiver) -> Result<Vec<StauNode>> {
    Ok(build_slices(q)?.into_iter().flat_map(|s| s.nodes).collect())
}

/// `(slice of ε₁, slice of ε₂, flipped vertex)` for every sign flip.
fn flips(n: usize) -> Vec<(u64, u64, usize)> {
    let mut out = Vec::new();
    for k in 0..1u64 << n {
        let e = sign_at(n, k);
        for i in 1..=n {
            if e.is_plus(i) {
                out.push((k, sign_index(&e.flipped(i)), i));
            }
        }
    }
    out
}

/// A node addressed as `(slice index, module index)`.
type NodeRef = (u64, usize);

fn gluing_arrow_indices(slices: &[Slice], n: usize) -> Result<Vec<(NodeRef, NodeRef)>> {
    let lookup: Vec<HashMap<&TiltingModule, usize>> = slices
        .iter()
        .map(|s| s.nodes.iter().enumerate().map(|(i, node)| (&node.tilt, i)).collect())
        .collect();
    let per_flip: Vec<Vec<_>> = flips(n)
        .into_par_iter()
        .map(|(k1, k2, v)| {
            let (s1, s2) = (&slices[k1 as usize], &slices[k2 as usize]);
            let deleted = s1.quiver.without_vertex(v);
            if deleted != s2.quiver.without_vertex(v) {
                return Err(Error::Invariant(format!("slices differ away from vertex {v}")));
            }
            let mut out = Vec::new();
            for u in tilting_modules(&deleted)? {
                let t1 = bongartz_complete(&s1.quiver, u.summands(), v)?;
                let t2 = bongartz_complete(&s2.quiver, u.summands(), v)?;
                let missing = |t: &TiltingModule| Error::Invariant(format!("completion {t} not enumerated"));
                let i1 = *lookup[k1 as usize].get(&t1).ok_or_else(|| missing(&t1))?;
                let i2 = *lookup[k2 as usize].get(&t2).ok_or_else(|| missing(&t2))?;
                out.push(((k1, i1), (k2, i2)));
            }
            Ok(out)
        })
        .collect::<Result<_>>()?;
    Ok(per_flip.into_iter().flatten().collect())
}

/// The gluing arrows `T₁ -> T₂` between neighbouring sign slices.
pub fn gluing_arrows(q: &ValuedQuiver) -> Result<Vec<(StauNode, StauNode)>> {
    let slices = build_slices(q)?;
    Ok(gluing_arrow_indices(&slices, q.n())?
        .into_iter()
        .map(|((k1, i1), (k2, i2))| {
            (slices[k1 as usize].nodes[i1].clone(), slices[k2 as usize].nodes[i2].clone())
        })
        .collect())
}

/// Full Hasse quiver of support τ-tilting modules.
pub fn glued_hasse(q: &ValuedQuiver) -> Result<GluedHasse> {
    let slices = build_slices(q)?;
    let gluing = gluing_arrow_indices(&slices, q.n())?;

    let mut offsets = Vec::with_capacity(slices.len());
    let mut total = 0;
    for s in &slices {
        offsets.push(total);
        total += s.nodes.len();
    }
    let mut arrows: Vec<HasseArrow> = Vec::new();
    for (k, s) in slices.iter().enumerate() {
        arrows.extend(s.internal.iter().map(|&(a, b)| HasseArrow {
            from: offsets[k] + a,
            to: offsets[k] + b,
            kind: ArrowKind::Internal,
        }));
    }
    arrows.extend(gluing.into_iter().map(|((k1, i1), (k2, i2))| HasseArrow {
        from: offsets[k1 as usize] + i1,
        to: offsets[k2 as usize] + i2,
        kind: ArrowKind::Gluing,
    }));
    arrows.sort();
    let nodes = slices.into_iter().flat_map(|s| s.nodes).collect();
    Ok(GluedHasse { nodes, arrows })
}
