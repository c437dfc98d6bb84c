//! Finite bounded lattices, finite/cofinite subsets of ℕ, lattice maps, and
//! inverse limits of truncation towers.

mod fincof;
mod finite;
mod hom;
mod limit;

use std::fmt::Write as _;

use thiserror::Error;

pub use fincof::{FinCofSet, Polarity};
pub use finite::{FiniteLattice, LatticeJson, MAX_CARRIER};
pub use hom::{compose_homs, LatticeHom};
pub use limit::{inverse_limit, InverseLimit};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum LatticeError {
    #[error("empty carrier")]
    Empty,
    #[error("carrier of {size} elements exceeds the cap of {cap}")]
    TooLarge { size: usize, cap: usize },
    #[error("not a partial order: {0}")]
    NotPartialOrder(String),
    #[error("no {kind} for {a} and {b}")]
    MissingBound {
        kind: &'static str,
        a: String,
        b: String,
    },
    #[error("lattice law violated: {0}")]
    LawViolation(String),
    #[error("{element} has {count} complements")]
    AmbiguousComplement { element: String, count: usize },
    #[error("unknown element {0}")]
    UnknownElement(String),
    #[error("mismatched lattices: {0}")]
    Mismatch(String),
}

/// Subsets of `{0, …, n}` ordered by inclusion.
pub fn power_set_lattice(n: u32) -> Result<FiniteLattice, LatticeError> {
    FiniteLattice::power_set(n)
}

pub fn fincof_union(a: &FinCofSet, b: &FinCofSet) -> FinCofSet {
    a.union(b)
}

pub fn fincof_intersect(a: &FinCofSet, b: &FinCofSet) -> FinCofSet {
    a.intersect(b)
}

pub fn fincof_complement(a: &FinCofSet) -> FinCofSet {
    a.complement()
}

pub fn is_distributive(lat: &FiniteLattice) -> bool {
    lat.is_distributive()
}

pub fn is_boolean(lat: &FiniteLattice) -> bool {
    lat.is_boolean()
}

pub fn complement_of(lat: &FiniteLattice, x: usize) -> Result<Option<usize>, LatticeError> {
    lat.complement_of(x)
}

pub fn check_hom(h: &LatticeHom) -> bool {
    h.check_hom()
}

fn dot_escape(s: &str) -> String {
    s.replace('\\', "\\\\").replace('"', "\\\"")
}

/// Hasse diagram in Graphviz DOT, covering relations only, bottom at the
/// bottom.
pub fn to_dot(lat: &FiniteLattice, name: &str) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "digraph \"{}\" {{", dot_escape(name));
    let _ = writeln!(out, "  rankdir=BT;");
    let _ = writeln!(out, "  node [shape=plaintext];");
    for x in lat.elements() {
        let _ = writeln!(out, "  n{x} [label=\"{}\"];", dot_escape(lat.label(x)));
    }
    for (a, b) in lat.covers() {
        let _ = writeln!(out, "  n{a} -> n{b} [arrowhead=none];");
    }
    out.push_str("}\n");
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn dot_lists_covers_only() {
        let lat = FiniteLattice::two_element("⟨0⟩", "⟨K(2)⟩");
        let dot = to_dot(&lat, "K(2)-local");
        assert!(dot.contains("n0 -> n1"));
        assert!(dot.contains("label=\"⟨K(2)⟩\""));
        assert_eq!(dot.matches("->").count(), 1);
    }
}
