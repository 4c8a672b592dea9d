//! Support τ-tilting theory for radical-square-zero algebras, computed
//! through the sign-decomposition.
//!
//! A radical-square-zero algebra is described by its valued quiver
//! ([`ValuedQuiver`]). For every sign vector `ε ∈ {±1}ⁿ` the subquiver
//! `Γ_ε` keeps the arrows running from `+1` vertices to `−1` vertices; the
//! support τ-tilting modules with sign `ε` are in bijection with the tilting
//! modules over the hereditary algebra whose quiver is `Γ_ε^op`. This crate
//! uses that bijection to
//!
//! * decide τ-tilting-finiteness and count support τ-tilting modules
//!   exactly ([`signdec`], [`dynkin`]),
//! * enumerate the modules explicitly with their g-vectors and assemble the
//!   full Hasse quiver ([`rep`], [`glue`]),
//! * reproduce the closed formulas for Brauer line and odd Brauer cycle
//!   algebras ([`brauer`]).

pub mod brauer;
pub mod dynkin;
pub mod error;
pub mod glue;
pub mod matrices;
pub mod quiver;
pub mod rep;
pub mod signdec;

pub use dynkin::{catalan, classify, tilting_count, Count, DynkinType};
pub use error::{Error, Result};
pub use glue::{glued_hasse, ArrowKind, GluedHasse, HasseArrow, StauNode};
pub use matrices::{IntMatrix, IntVector};
pub use quiver::{parse_quiver, Arrow, SignVector, Valuation, ValuedGraph, ValuedQuiver};
pub use rep::{IntervalModule, PathQuiver, TiltingModule};
pub use signdec::{count_stau, count_stau_epsilon, enumerate_signs, is_tau_tilting_finite};
