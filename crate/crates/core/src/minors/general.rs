//! Minor containment for an arbitrary pattern.
//!
//! `H` is a minor of `G` exactly when some quotient of `G` by a partition
//! into connected parts contains `H` as a subgraph. The search walks edge
//! contractions depth first, testing subgraph containment at each quotient
//! and skipping quotients isomorphic to one already refuted.

use std::collections::HashSet;

use crate::canon::{canonical_key, CanonicalKey};
use crate::cliques::subgraph_embed;
use crate::graph::{SmallGraph, VertexSet};
use crate::minors::{MinorCertificate, MinorTarget};
use crate::named;

pub fn has_minor(g: &SmallGraph, h: &SmallGraph) -> Option<MinorCertificate> {
    let parts: Vec<u32> = (0..g.order()).map(|v| 1 << v).collect();
    let mut refuted = HashSet::new();
    explore(g, h, &parts, &mut refuted).map(|branch_sets| MinorCertificate {
        target: MinorTarget::Graph(*h),
        branch_sets,
        roots: None,
    })
}

fn explore(
    q: &SmallGraph,
    h: &SmallGraph,
    parts: &[u32],
    refuted: &mut HashSet<CanonicalKey>,
) -> Option<Vec<VertexSet>> {
    if q.order() < h.order() || q.size() < h.size() {
        return None;
    }
    if let Some(map) = subgraph_embed(q, h) {
        return Some(map.into_iter().map(|x| VertexSet(parts[x])).collect());
    }
    if q.order() == h.order() || !refuted.insert(canonical_key(q)) {
        return None;
    }
    for (a, b) in q.edges() {
        let merged = q.contract(a, b).expect("edge exists");
        let mut next = parts.to_vec();
        next[a] |= next[b];
        next.remove(b);
        if let Some(found) = explore(&merged, h, &next, refuted) {
            return Some(found);
        }
    }
    None
}

/// Planarity as the absence of K5 and K3,3 minors. Exponential; meant for
/// graphs of a dozen vertices or fewer.
pub fn is_planar(g: &SmallGraph) -> bool {
    let (n, e) = (g.order(), g.size());
    if n <= 4 {
        return true;
    }
    if e > 3 * n - 6 {
        return false;
    }
    let k5 = named::complete(5).expect("K5");
    let k33 = named::complete_bipartite(3, 3).expect("K3,3");
    has_minor(g, &k5).is_none() && has_minor(g, &k33).is_none()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::minors::verify_certificate;

    #[test]
    fn cycle_has_triangle_minor() {
        let c6 = named::cycle(6).unwrap();
        let k3 = named::complete(3).unwrap();
        let cert = has_minor(&c6, &k3).unwrap();
        assert!(verify_certificate(&c6, &cert));
    }

    #[test]
    fn host_too_small() {
        assert!(has_minor(&named::complete(4).unwrap(), &named::complete(5).unwrap()).is_none());
    }

    #[test]
    fn k1_h8_has_no_k6() {
        assert!(has_minor(&named::k1_join_h8(), &named::complete(6).unwrap()).is_none());
    }

    #[test]
    fn petersen_has_both_kuratowski_minors() {
        let p = named::petersen();
        for h in [
            named::complete(5).unwrap(),
            named::complete_bipartite(3, 3).unwrap(),
        ] {
            let cert = has_minor(&p, &h).unwrap();
            assert!(verify_certificate(&p, &cert));
        }
    }

    #[test]
    fn planarity() {
        assert!(is_planar(&named::complete(4).unwrap()));
        assert!(is_planar(&named::octahedron()));
        assert!(!is_planar(&named::complete_bipartite(3, 3).unwrap()));
        assert!(!is_planar(&named::k3bar_join_c6()));
        assert!(!is_planar(&named::petersen()));
        assert!(is_planar(&named::cycle(12).unwrap()));
    }
}
