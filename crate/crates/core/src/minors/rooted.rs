use crate::error::{Error, Result};
use crate::graph::{SmallGraph, VertexSet};
use crate::minors::{MinorCertificate, MinorTarget};

/// A K4 model with `roots[i]` in branch set `i`.
///
/// Non-root vertices are assigned to one of the four sets or left out, in
/// index order; the cost is `5^(n-4)` leaves in the worst case.
pub fn rooted_k4_minor(g: &SmallGraph, roots: [usize; 4]) -> Result<Option<MinorCertificate>> {
    for &r in &roots {
        g.check_vertex(r)?;
    }
    let root_set: VertexSet = roots.iter().copied().collect();
    if root_set.len() != 4 {
        return Err(Error::Precondition(format!("roots {roots:?} are not distinct")));
    }
    let free: Vec<usize> = g.vertices().difference(root_set).to_vec();
    let mut sets = roots.map(VertexSet::singleton);
    Ok(assign(g, &free, 0, &mut sets).then(|| MinorCertificate {
        target: MinorTarget::Clique(4),
        branch_sets: sets.to_vec(),
        roots: Some(roots.to_vec()),
    }))
}

fn complete(g: &SmallGraph, sets: &[VertexSet; 4]) -> bool {
    sets.iter().all(|&s| g.is_connected_set(s))
        && (0..4).all(|i| (i + 1..4).all(|j| g.sets_adjacent(sets[i], sets[j])))
}

fn assign(g: &SmallGraph, free: &[usize], depth: usize, sets: &mut [VertexSet; 4]) -> bool {
    let Some(&v) = free.get(depth) else {
        return complete(g, sets);
    };
    if assign(g, free, depth + 1, sets) {
        return true;
    }
    for i in 0..4 {
        let before = sets[i];
        sets[i] = before.with(v);
        if assign(g, free, depth + 1, sets) {
            return true;
        }
        sets[i] = before;
    }
    false
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::minors::verify_certificate;
    use crate::named;

    #[test]
    fn k4_roots_are_singletons() {
        let k4 = named::complete(4).unwrap();
        let cert = rooted_k4_minor(&k4, [0, 1, 2, 3]).unwrap().unwrap();
        assert!(verify_certificate(&k4, &cert));
        assert!(cert.branch_sets.iter().all(|s| s.len() == 1));
    }

    #[test]
    fn cycle_has_no_rooted_k4() {
        let c4 = named::cycle(4).unwrap();
        assert!(rooted_k4_minor(&c4, [0, 1, 2, 3]).unwrap().is_none());
    }

    #[test]
    fn octahedron_every_quadruple() {
        let g = named::octahedron();
        for mask in 0u32..64 {
            if mask.count_ones() != 4 {
                continue;
            }
            let r: Vec<usize> = VertexSet(mask).to_vec();
            let cert = rooted_k4_minor(&g, [r[0], r[1], r[2], r[3]]).unwrap().unwrap();
            assert!(verify_certificate(&g, &cert));
        }
    }

    #[test]
    fn bad_roots() {
        let k5 = named::complete(5).unwrap();
        assert!(rooted_k4_minor(&k5, [0, 1, 1, 2]).is_err());
        assert!(rooted_k4_minor(&k5, [0, 1, 2, 7]).is_err());
    }
}
