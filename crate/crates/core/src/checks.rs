//! Degree arithmetic and neighborhood audits.
//!
//! The audits classify a candidate neighborhood graph; they make no
//! assumption about any host it came from.

use serde::Serialize;

use crate::cliques::{clique_number, find_disjoint_cliques, independence_number, k_cliques, subgraph_embed};
use crate::error::{Error, Result};
use crate::graph::{SmallGraph, VertexSet};
use crate::named;

/// Edge count forcing a K_p minor on `n >= p` vertices, for `1 <= p <= 7`:
/// `(p-2)n - C(p-1, 2) + 1`.
pub fn mader_bound(p: usize, n: usize) -> Result<i64> {
    if !(1..=7).contains(&p) {
        return Err(Error::InvalidArgument(format!("p = {p} outside [1, 7]")));
    }
    if n < p {
        return Err(Error::InvalidArgument(format!("n = {n} < p = {p}")));
    }
    let (p, n) = (p as i64, n as i64);
    Ok((p - 2) * n - (p - 1) * (p - 2) / 2 + 1)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct DegreeCensus {
    pub n: usize,
    pub e: usize,
    /// Number of vertices of degree 8.
    pub n8: usize,
    /// Number of vertices of degree 9.
    pub n9: usize,
    pub delta: usize,
}

pub fn degree_census(g: &SmallGraph) -> DegreeCensus {
    let degrees = g.degrees();
    DegreeCensus {
        n: g.order(),
        e: g.size(),
        n8: degrees.iter().filter(|&&d| d == 8).count(),
        n9: degrees.iter().filter(|&&d| d == 9).count(),
        delta: g.min_degree(),
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "verdict", rename_all = "SCREAMING_SNAKE_CASE")]
pub enum CensusVerdict {
    /// δ < 8 or e > 5n − 15.
    NotApplicable,
    /// `8 n8 + 9 n9 + 10 (n − n8 − n9) <= 2e <= 10n − 30` holds, hence
    /// `2 n8 + n9 >= 30`; `slack = 2 n8 + n9 − 30`.
    Holds { slack: i64 },
    /// The chain fails: these counts cannot come from a graph meeting the
    /// hypotheses.
    Violated { slack: i64 },
}

/// Evaluates the degree-sum chain under δ >= 8 and e <= 5n − 15.
pub fn check_census_inequality(c: &DegreeCensus) -> CensusVerdict {
    let (n, e, n8, n9) = (c.n as i64, c.e as i64, c.n8 as i64, c.n9 as i64);
    if c.delta < 8 || e > 5 * n - 15 {
        return CensusVerdict::NotApplicable;
    }
    let slack = 2 * n8 + n9 - 30;
    let lower = 8 * n8 + 9 * n9 + 10 * (n - n8 - n9);
    if n8 + n9 <= n && lower <= 2 * e && 2 * e <= 10 * n - 30 {
        debug_assert!(slack >= 0);
        CensusVerdict::Holds { slack }
    } else {
        CensusVerdict::Violated { slack }
    }
}

/// α(G[N(v)]) <= d(v) − k + 2.
pub fn dirac_alpha_bound(g: &SmallGraph, v: usize, k: usize) -> Result<bool> {
    g.check_vertex(v)?;
    let alpha = independence_number(&g.induced(g.neighbors(v))) as i64;
    Ok(alpha <= g.degree(v) as i64 - k as i64 + 2)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "SCREAMING_SNAKE_CASE")]
pub enum AuditTag {
    /// ω(N(v)) >= 4, i.e. a 5-clique in the closed neighborhood.
    Has5CliqueClosed,
    TwoDisjoint4Cliques,
    H8Present,
    /// α(N(v)) exceeds d(v) − 8 + 2.
    DiracViolation,
    DeltaZero,
    DeltaHigh,
    AlphaBad,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "SCREAMING_SNAKE_CASE")]
pub enum AuditVerdict {
    Pass,
    Violation,
}

/// Shape of the four vertices left after removing a 4-clique from an
/// 8-vertex neighborhood, tested in the order listed.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "SCREAMING_SNAKE_CASE")]
pub enum JShape {
    Complete,
    InducedP3,
    TwoK2,
    TriangleK1,
    Other,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct JClass {
    /// The 4-clique removed (least bitmask).
    pub clique: Vec<usize>,
    pub shape: JShape,
    /// For `InducedP3`, the path in order; otherwise the remaining vertices.
    pub witness: Vec<usize>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct NeighborhoodAudit {
    pub vertex: Option<usize>,
    pub degree: usize,
    pub alpha: usize,
    pub omega: usize,
    pub delta_local: usize,
    pub findings: Vec<AuditTag>,
    pub verdict: AuditVerdict,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub j_class: Option<JClass>,
}

impl NeighborhoodAudit {
    pub fn has(&self, tag: AuditTag) -> bool {
        self.findings.contains(&tag)
    }
}

fn base_audit(h: &SmallGraph, k: usize) -> NeighborhoodAudit {
    let alpha = independence_number(h);
    let omega = clique_number(h);
    let mut findings = Vec::new();
    if omega >= 4 {
        findings.push(AuditTag::Has5CliqueClosed);
    }
    if alpha as i64 > h.order() as i64 - k as i64 + 2 {
        findings.push(AuditTag::DiracViolation);
    }
    NeighborhoodAudit {
        vertex: None,
        degree: h.order(),
        alpha,
        omega,
        delta_local: h.min_degree(),
        findings,
        verdict: AuditVerdict::Violation,
        j_class: None,
    }
}

/// Audit of `h = G[N(v)]` for an 8-vertex `v`; passes when `h` has two
/// disjoint 4-cliques.
pub fn audit_deg8_neighborhood(h: &SmallGraph) -> Result<NeighborhoodAudit> {
    if h.order() != 8 {
        return Err(Error::Precondition(format!(
            "expected order 8, got {}",
            h.order()
        )));
    }
    let mut audit = base_audit(h, 8);
    if find_disjoint_cliques(h, 4)?.is_some() {
        audit.findings.push(AuditTag::TwoDisjoint4Cliques);
        audit.verdict = AuditVerdict::Pass;
    }
    if subgraph_embed(h, &named::h8()).is_some() {
        audit.findings.push(AuditTag::H8Present);
    }
    audit.j_class = k_cliques(h, 4).first().map(|&w| classify_j(h, w));
    audit.findings.sort();
    Ok(audit)
}

fn classify_j(h: &SmallGraph, clique: VertexSet) -> JClass {
    let rest = h.vertices().difference(clique);
    let vs = rest.to_vec();
    let edges = h.edges_within(rest);
    let class = |shape, witness| JClass {
        clique: clique.to_vec(),
        shape,
        witness,
    };
    if h.is_clique(rest) {
        return class(JShape::Complete, vs);
    }
    // induced P3: a middle vertex with two non-adjacent neighbors in J
    for &mid in &vs {
        let nb = h.neighbors(mid).intersection(rest).to_vec();
        for (i, &a) in nb.iter().enumerate() {
            if let Some(&b) = nb[i + 1..].iter().find(|&&b| !h.has_edge(a, b)) {
                return class(JShape::InducedP3, vec![a, mid, b]);
            }
        }
    }
    let degs: Vec<usize> = vs
        .iter()
        .map(|&v| h.neighbors(v).intersection(rest).len())
        .collect();
    if edges == 2 && degs.iter().all(|&d| d == 1) {
        return class(JShape::TwoK2, vs);
    }
    if edges == 3 && degs.iter().filter(|&&d| d == 2).count() == 3 {
        return class(JShape::TriangleK1, vs);
    }
    class(JShape::Other, vs)
}

/// Audit of `h = G[N(v)]` for a 9-vertex `v`. Passes when `h` has a
/// 4-clique, or when α(h) = 3 and 1 <= δ(h) <= 4.
pub fn audit_deg9_neighborhood(h: &SmallGraph) -> Result<NeighborhoodAudit> {
    if h.order() != 9 {
        return Err(Error::Precondition(format!(
            "expected order 9, got {}",
            h.order()
        )));
    }
    let mut audit = base_audit(h, 8);
    if audit.omega >= 4 {
        audit.verdict = AuditVerdict::Pass;
    } else {
        let mut bad = Vec::new();
        match audit.delta_local {
            0 => bad.push(AuditTag::DeltaZero),
            d if d >= 5 => bad.push(AuditTag::DeltaHigh),
            _ => {}
        }
        if audit.alpha != 3 {
            bad.push(AuditTag::AlphaBad);
        }
        if bad.is_empty() {
            audit.verdict = AuditVerdict::Pass;
        }
        audit.findings.extend(bad);
    }
    audit.findings.sort();
    Ok(audit)
}

/// Audits the open neighborhood of `v` in a host graph, dispatching on
/// `d(v)` in {8, 9}.
pub fn audit_vertex(g: &SmallGraph, v: usize) -> Result<NeighborhoodAudit> {
    g.check_vertex(v)?;
    let h = g.induced(g.neighbors(v));
    let mut audit = match g.degree(v) {
        8 => audit_deg8_neighborhood(&h)?,
        9 => audit_deg9_neighborhood(&h)?,
        d => {
            return Err(Error::Precondition(format!(
                "vertex {v} has degree {d}, not 8 or 9"
            )))
        }
    };
    audit.vertex = Some(v);
    Ok(audit)
}
