//! Canonical forms, enumeration of connected graphs up to isomorphism and the
//! exhaustive theorem checks built on them.

mod canon;
mod enumerate;
mod verify;

pub use canon::{canonical_form, canonical_graph, CanonicalForm};
pub use enumerate::{Enumerator, MAX_ORDER};
pub use verify::{
    verify_edge_lemma, verify_edge_lemmas, verify_edge_lemmas_with, verify_theorem, verify_theorem_dcc,
    verify_theorem_dcc1, verify_theorem_k1p4, EdgeSummary, Tolerances, TheoremId, VerificationReport, RECHECK_TOL,
    TABLE_TOL,
};

/// All connected graphs on `n` vertices, one per isomorphism class.
pub fn enumerate_connected(n: usize) -> crate::Result<Vec<crate::Graph>> {
    Enumerator::new(n)?.collect()
}
