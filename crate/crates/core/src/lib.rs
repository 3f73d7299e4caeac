//! Exact small-graph toolkit for K6 and K7 minor questions.
//!
//! * [`graph`], [`named`], [`graph6`]: the [`SmallGraph`] value type, fixed
//!   constructors (including H8) and graph6 I/O.
//! * [`canon`], [`cliques`]: canonical labeling, cliques, independent sets,
//!   subgraph embedding, five-clique triple shapes.
//! * [`minors`]: K_p and general minor search, rooted K4 minors, planarity,
//!   vertex connectivity, disjoint paths, certificate checking.
//! * [`checks`]: extremal edge bound, degree census, neighborhood audits.
//! * [`enumeration`]: isomorph-free generation and the verification
//!   campaigns built on it.

pub mod canon;
pub mod checks;
pub mod cliques;
pub mod enumeration;
mod error;
pub mod exec;
pub mod graph;
pub mod graph6;
pub mod harness;
pub mod minors;
pub mod named;

pub use canon::{canonical_form, canonical_key, is_isomorphic, CanonicalForm, CanonicalKey};
pub use error::{Error, Result};
pub use exec::Exec;
pub use graph::{SmallGraph, VertexSet, MAX_VERTICES};
pub use graph6::{parse_graph6, serialize_graph6, Graph6Error};
pub use minors::{MinorCertificate, MinorTarget};

/// Startup check of the frozen H8 labeling: 4-regular, K4-free, α = 2.
pub fn self_check() -> Result<()> {
    let h = named::h8();
    h.validate()?;
    let regular = (0..8).all(|v| h.degree(v) == 4);
    let omega = cliques::clique_number(&h);
    let alpha = cliques::independence_number(&h);
    if !regular || omega != 3 || alpha != 2 {
        return Err(Error::Invariant(format!(
            "H8 self-check failed: 4-regular={regular}, omega={omega}, alpha={alpha}"
        )));
    }
    Ok(())
}
