//! Exact minor containment and the path and connectivity tools around it.
//!
//! Every positive answer comes with a [`MinorCertificate`]; every negative
//! answer is the result of an exhaustive search. [`verify_certificate`]
//! rechecks certificates without sharing code with the searches.

mod clique;
mod connectivity;
mod general;
mod paths;
mod rooted;

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};
use crate::graph::{SmallGraph, VertexSet};
use crate::graph6::{parse_graph6, serialize_graph6};
use crate::named::{self, Named};

pub use clique::{has_clique_minor, has_clique_minor_with, CliqueMinorOptions};
pub use connectivity::{local_connectivity, vertex_connectivity};
pub use general::{has_minor, is_planar};
pub use paths::disjoint_paths_outside;
pub use rooted::rooted_k4_minor;

/// The graph a certificate claims as a minor.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum MinorTarget {
    Clique(usize),
    Graph(SmallGraph),
}

impl MinorTarget {
    pub fn graph(&self) -> Result<SmallGraph> {
        match self {
            MinorTarget::Clique(p) => named::complete(*p),
            MinorTarget::Graph(h) => Ok(*h),
        }
    }

    pub fn order(&self) -> usize {
        match self {
            MinorTarget::Clique(p) => *p,
            MinorTarget::Graph(h) => h.order(),
        }
    }
}

impl fmt::Display for MinorTarget {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            MinorTarget::Clique(p) => write!(f, "K{p}"),
            MinorTarget::Graph(h) => f.write_str(&serialize_graph6(h)),
        }
    }
}

impl FromStr for MinorTarget {
    type Err = Error;

    /// `K6` is a clique target; other names (`K3,3`, `petersen`, ...) and
    /// raw graph6 strings are graph targets.
    fn from_str(s: &str) -> Result<Self> {
        match s.parse::<Named>() {
            Ok(Named::Complete(p)) => Ok(MinorTarget::Clique(p)),
            Ok(name) => Ok(MinorTarget::Graph(named::make_named(name)?)),
            Err(_) => parse_graph6(s.as_bytes())
                .map(MinorTarget::Graph)
                .map_err(|e| Error::InvalidArgument(format!("target {s:?}: {e}"))),
        }
    }
}

/// Branch sets witnessing a minor; `branch_sets[i]` models target vertex `i`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MinorCertificate {
    pub target: MinorTarget,
    pub branch_sets: Vec<VertexSet>,
    /// Rooted models only: `roots[i]` must lie in `branch_sets[i]`.
    pub roots: Option<Vec<usize>>,
}

#[derive(Serialize, Deserialize)]
struct CertificateRepr {
    target: String,
    branch_sets: Vec<Vec<usize>>,
    roots: Option<Vec<usize>>,
}

impl Serialize for MinorCertificate {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        CertificateRepr {
            target: self.target.to_string(),
            branch_sets: self.branch_sets.iter().map(|b| b.to_vec()).collect(),
            roots: self.roots.clone(),
        }
        .serialize(s)
    }
}

impl<'de> Deserialize<'de> for MinorCertificate {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        use serde::de::Error as _;
        let repr = CertificateRepr::deserialize(d)?;
        let target = repr.target.parse().map_err(D::Error::custom)?;
        let mut branch_sets = Vec::with_capacity(repr.branch_sets.len());
        for set in repr.branch_sets {
            if let Some(&v) = set.iter().find(|&&v| v >= 32) {
                return Err(D::Error::custom(format!("vertex {v} out of range")));
            }
            branch_sets.push(set.into_iter().collect());
        }
        Ok(MinorCertificate {
            target,
            branch_sets,
            roots: repr.roots,
        })
    }
}

impl MinorCertificate {
    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("certificate serializes")
    }

    pub fn from_json(text: &str) -> Result<Self> {
        Ok(serde_json::from_str(text)?)
    }
}

/// Why a certificate fails to verify.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum CertificateDefect {
    BadTarget(String),
    WrongSetCount { expected: usize, found: usize },
    OutOfRange(usize),
    EmptySet(usize),
    Disconnected(usize),
    Overlap(usize, usize),
    MissingEdge(usize, usize),
    RootMismatch(usize),
}

impl fmt::Display for CertificateDefect {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CertificateDefect::BadTarget(e) => write!(f, "bad target: {e}"),
            CertificateDefect::WrongSetCount { expected, found } => {
                write!(f, "expected {expected} branch sets, found {found}")
            }
            CertificateDefect::OutOfRange(i) => write!(f, "branch set {i} leaves the host"),
            CertificateDefect::EmptySet(i) => write!(f, "branch set {i} is empty"),
            CertificateDefect::Disconnected(i) => write!(f, "branch set {i} is not connected"),
            CertificateDefect::Overlap(i, j) => write!(f, "branch sets {i} and {j} overlap"),
            CertificateDefect::MissingEdge(i, j) => {
                write!(f, "no host edge joins branch sets {i} and {j}")
            }
            CertificateDefect::RootMismatch(i) => write!(f, "root {i} is not in its branch set"),
        }
    }
}

/// Checks every certificate invariant against `host`.
pub fn check_certificate(
    host: &SmallGraph,
    cert: &MinorCertificate,
) -> std::result::Result<(), CertificateDefect> {
    let target = cert
        .target
        .graph()
        .map_err(|e| CertificateDefect::BadTarget(e.to_string()))?;
    let sets = &cert.branch_sets;
    if sets.len() != target.order() {
        return Err(CertificateDefect::WrongSetCount {
            expected: target.order(),
            found: sets.len(),
        });
    }
    let n = host.order();
    for (i, set) in sets.iter().enumerate() {
        let members = set.to_vec();
        if members.iter().any(|&v| v >= n) {
            return Err(CertificateDefect::OutOfRange(i));
        }
        let Some(&start) = members.first() else {
            return Err(CertificateDefect::EmptySet(i));
        };
        // plain breadth-first search over the member list
        let mut seen = vec![start];
        let mut k = 0;
        while k < seen.len() {
            let u = seen[k];
            for &w in &members {
                if host.has_edge(u, w) && !seen.contains(&w) {
                    seen.push(w);
                }
            }
            k += 1;
        }
        if seen.len() != members.len() {
            return Err(CertificateDefect::Disconnected(i));
        }
    }
    for i in 0..sets.len() {
        for j in i + 1..sets.len() {
            if sets[i].iter().any(|v| sets[j].contains(v)) {
                return Err(CertificateDefect::Overlap(i, j));
            }
        }
    }
    for (a, b) in target.edges() {
        let joined = sets[a]
            .iter()
            .any(|u| sets[b].iter().any(|v| host.has_edge(u, v)));
        if !joined {
            return Err(CertificateDefect::MissingEdge(a, b));
        }
    }
    if let Some(roots) = &cert.roots {
        if roots.len() != sets.len() {
            return Err(CertificateDefect::WrongSetCount {
                expected: sets.len(),
                found: roots.len(),
            });
        }
        for (i, &r) in roots.iter().enumerate() {
            if !sets[i].contains(r) {
                return Err(CertificateDefect::RootMismatch(i));
            }
        }
    }
    Ok(())
}

pub fn verify_certificate(host: &SmallGraph, cert: &MinorCertificate) -> bool {
    check_certificate(host, cert).is_ok()
}
