use crate::error::{Error, Result};
use crate::graph::{SmallGraph, VertexSet};

/// Pairwise vertex-disjoint paths joining each pair, with every internal
/// vertex outside `interior_forbidden`. Pairs are routed in input order,
/// each path extended through neighbors in index order, so the first
/// witness found is deterministic. `None` means no such system exists.
pub fn disjoint_paths_outside(
    g: &SmallGraph,
    pairs: &[(usize, usize)],
    interior_forbidden: VertexSet,
) -> Result<Option<Vec<Vec<usize>>>> {
    if pairs.len() > 4 {
        return Err(Error::Precondition(format!(
            "at most 4 pairs, got {}",
            pairs.len()
        )));
    }
    let mut terminals = VertexSet::EMPTY;
    for &(u, v) in pairs {
        g.check_vertex(u)?;
        g.check_vertex(v)?;
        if terminals.contains(u) || terminals.contains(v) || u == v {
            return Err(Error::Precondition(format!(
                "endpoints of {pairs:?} are not distinct"
            )));
        }
        terminals = terminals.with(u).with(v);
    }
    let open = g.vertices().difference(interior_forbidden).difference(terminals);
    let mut paths = Vec::with_capacity(pairs.len());
    Ok(route(g, pairs, open, &mut paths).then_some(paths))
}

fn route(g: &SmallGraph, pairs: &[(usize, usize)], open: VertexSet, paths: &mut Vec<Vec<usize>>) -> bool {
    let Some((&(s, t), rest)) = pairs.split_first() else {
        return true;
    };
    // every remaining pair must still be connectable through open vertices
    for &(a, b) in pairs {
        let reach = g.reach_within(a, open.with(a).with(b));
        if !reach.contains(b) {
            return false;
        }
    }
    let mut path = vec![s];
    extend(g, t, rest, open, &mut path, paths)
}

fn extend(
    g: &SmallGraph,
    t: usize,
    rest: &[(usize, usize)],
    open: VertexSet,
    path: &mut Vec<usize>,
    paths: &mut Vec<Vec<usize>>,
) -> bool {
    let here = *path.last().expect("path starts at s");
    for next in g.neighbors(here).intersection(open.with(t)) {
        if next == t {
            path.push(t);
            paths.push(path.clone());
            if route(g, rest, open, paths) {
                return true;
            }
            paths.pop();
            path.pop();
            continue;
        }
        if !g.reach_within(next, open.with(t)).contains(t) {
            continue;
        }
        path.push(next);
        if extend(g, t, rest, open.without(next), path, paths) {
            return true;
        }
        path.pop();
    }
    false
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::named::{self, set};

    #[test]
    fn two_disjoint_edges() {
        let g = SmallGraph::from_edges(4, &[(0, 1), (2, 3)]).unwrap();
        let paths = disjoint_paths_outside(&g, &[(0, 1), (2, 3)], VertexSet::EMPTY)
            .unwrap()
            .unwrap();
        assert_eq!(paths, vec![vec![0, 1], vec![2, 3]]);
    }

    #[test]
    fn crossing_pairs_on_a_hexagon() {
        let c6 = named::cycle(6).unwrap();
        assert_eq!(
            disjoint_paths_outside(&c6, &[(0, 3), (1, 4)], VertexSet::EMPTY).unwrap(),
            None
        );
        // non-crossing pairs route around
        let paths = disjoint_paths_outside(&c6, &[(0, 2), (3, 5)], VertexSet::EMPTY)
            .unwrap()
            .unwrap();
        assert_eq!(paths, vec![vec![0, 1, 2], vec![3, 4, 5]]);
        assert_eq!(
            disjoint_paths_outside(&c6, &[(0, 2)], set(&[1, 3])).unwrap(),
            None
        );
    }

    #[test]
    fn complete_graph_uses_direct_edges() {
        let k4 = named::complete(4).unwrap();
        let paths = disjoint_paths_outside(&k4, &[(0, 1), (2, 3)], VertexSet::EMPTY)
            .unwrap()
            .unwrap();
        assert_eq!(paths, vec![vec![0, 1], vec![2, 3]]);
    }

    #[test]
    fn forbidden_interior_is_avoided() {
        // 0 and 2 joined through 1 or through 3-4
        let g = SmallGraph::from_edges(5, &[(0, 1), (1, 2), (0, 3), (3, 4), (4, 2)]).unwrap();
        let paths = disjoint_paths_outside(&g, &[(0, 2)], set(&[1])).unwrap().unwrap();
        assert_eq!(paths, vec![vec![0, 3, 4, 2]]);
    }

    #[test]
    fn overlapping_endpoints_rejected() {
        let k5 = named::complete(5).unwrap();
        assert!(disjoint_paths_outside(&k5, &[(0, 1), (1, 2)], VertexSet::EMPTY).is_err());
        assert!(disjoint_paths_outside(&k5, &[(0, 0)], VertexSet::EMPTY).is_err());
        let many = [(0, 1), (2, 3), (4, 5), (6, 7), (8, 9)];
        assert!(disjoint_paths_outside(&named::complete(10).unwrap(), &many, VertexSet::EMPTY).is_err());
    }
}
