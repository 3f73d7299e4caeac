//! Cliques, independent sets, subgraph embedding and the five-clique triple
//! classifier.

use std::fmt;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::{SmallGraph, VertexSet};

/// Maximum clique by branch and bound with a greedy coloring bound.
pub fn max_clique(g: &SmallGraph) -> VertexSet {
    max_clique_within(g, g.vertices())
}

/// Maximum clique of `G[within]`, as a set of `g`'s vertices.
pub fn max_clique_within(g: &SmallGraph, within: VertexSet) -> VertexSet {
    let mut best = VertexSet::EMPTY;
    expand(g, VertexSet::EMPTY, within, &mut best, usize::MAX);
    best
}

pub fn clique_number(g: &SmallGraph) -> usize {
    max_clique(g).len()
}

/// Some clique of exactly `k` vertices inside `within`, if one exists.
pub fn find_clique_within(g: &SmallGraph, within: VertexSet, k: usize) -> Option<VertexSet> {
    if k == 0 {
        return Some(VertexSet::EMPTY);
    }
    let mut best = VertexSet::EMPTY;
    expand(g, VertexSet::EMPTY, within, &mut best, k);
    (best.len() >= k).then(|| best.iter().take(k).collect())
}

pub fn independence_number(g: &SmallGraph) -> usize {
    clique_number(&g.complement())
}

pub fn max_independent_set(g: &SmallGraph) -> VertexSet {
    max_clique(&g.complement())
}

/// Orders `candidates` by greedy coloring and returns `(vertex, color)`
/// pairs with nondecreasing color count.
fn color_order(g: &SmallGraph, candidates: VertexSet) -> Vec<(usize, usize)> {
    let mut out = Vec::with_capacity(candidates.len());
    let mut uncolored = candidates;
    let mut color = 0;
    while !uncolored.is_empty() {
        color += 1;
        let mut available = uncolored;
        while let Some(v) = available.first() {
            available = available.without(v).difference(g.neighbors(v));
            uncolored = uncolored.without(v);
            out.push((v, color));
        }
    }
    out
}

/// Returns true once `best` reaches `stop_at`.
fn expand(
    g: &SmallGraph,
    current: VertexSet,
    mut candidates: VertexSet,
    best: &mut VertexSet,
    stop_at: usize,
) -> bool {
    let order = color_order(g, candidates);
    for &(v, color) in order.iter().rev() {
        if current.len() + color <= best.len() {
            return false;
        }
        let next = current.with(v);
        let sub = candidates.intersection(g.neighbors(v));
        if sub.is_empty() {
            if next.len() > best.len() {
                *best = next;
                if best.len() >= stop_at {
                    return true;
                }
            }
        } else if expand(g, next, sub, best, stop_at) {
            return true;
        }
        candidates = candidates.without(v);
    }
    false
}

/// All cliques of size exactly `k`, in increasing bitmask order.
pub fn k_cliques(g: &SmallGraph, k: usize) -> Vec<VertexSet> {
    fn grow(g: &SmallGraph, current: VertexSet, candidates: VertexSet, k: usize, out: &mut Vec<VertexSet>) {
        if current.len() == k {
            out.push(current);
            return;
        }
        if current.len() + candidates.len() < k {
            return;
        }
        let mut rest = candidates;
        for v in candidates {
            rest = rest.without(v);
            grow(g, current.with(v), rest.intersection(g.neighbors(v)), k, out);
        }
    }
    let mut out = Vec::new();
    grow(g, VertexSet::EMPTY, g.vertices(), k, &mut out);
    out.sort_unstable();
    out
}

/// Two disjoint `k`-cliques; the lexicographically least bitmask pair.
pub fn find_disjoint_cliques(g: &SmallGraph, k: usize) -> Result<Option<(VertexSet, VertexSet)>> {
    if k == 0 {
        return Err(Error::InvalidArgument("clique size must be at least 1".into()));
    }
    let cliques = k_cliques(g, k);
    for (i, &a) in cliques.iter().enumerate() {
        if let Some(&b) = cliques[i + 1..].iter().find(|b| b.is_disjoint(a)) {
            return Ok(Some((a, b)));
        }
    }
    Ok(None)
}

/// An injective edge-preserving map `map[u]` from `pattern` into `host`
/// (not necessarily induced).
pub fn subgraph_embed(host: &SmallGraph, pattern: &SmallGraph) -> Option<Vec<usize>> {
    let (n, m) = (host.order(), pattern.order());
    if m > n || pattern.size() > host.size() {
        return None;
    }
    // pattern vertices in a connected-first, high-degree-first order
    let mut order = Vec::with_capacity(m);
    let mut placed = VertexSet::EMPTY;
    while order.len() < m {
        let frontier: VertexSet = placed
            .iter()
            .fold(VertexSet::EMPTY, |s, v| s.union(pattern.neighbors(v)));
        let pool = frontier.difference(placed);
        let pool = if pool.is_empty() {
            pattern.vertices().difference(placed)
        } else {
            pool
        };
        let v = pool
            .iter()
            .max_by_key(|&v| {
                (
                    pattern.neighbors(v).intersection(placed).len(),
                    pattern.degree(v),
                    usize::MAX - v,
                )
            })
            .expect("nonempty pool");
        order.push(v);
        placed = placed.with(v);
    }
    let mut map = vec![usize::MAX; m];
    let host_deg: Vec<usize> = host.degrees();
    fn place(
        host: &SmallGraph,
        pattern: &SmallGraph,
        host_deg: &[usize],
        order: &[usize],
        depth: usize,
        used: VertexSet,
        map: &mut [usize],
    ) -> bool {
        let Some(&u) = order.get(depth) else {
            return true;
        };
        let mut candidates = host.vertices().difference(used);
        for w in pattern.neighbors(u) {
            if map[w] != usize::MAX {
                candidates = candidates.intersection(host.neighbors(map[w]));
            }
        }
        let need = pattern.degree(u);
        for x in candidates {
            if host_deg[x] < need {
                continue;
            }
            map[u] = x;
            if place(host, pattern, host_deg, order, depth + 1, used.with(x), map) {
                return true;
            }
        }
        map[u] = usize::MAX;
        false
    }
    place(host, pattern, &host_deg, &order, 0, VertexSet::EMPTY, &mut map).then_some(map)
}

/// Rechecks an embedding produced by [`subgraph_embed`].
pub fn verify_embedding(host: &SmallGraph, pattern: &SmallGraph, map: &[usize]) -> bool {
    if map.len() != pattern.order() || map.iter().any(|&x| x >= host.order()) {
        return false;
    }
    let image: VertexSet = map.iter().copied().collect();
    image.len() == map.len()
        && pattern
            .edges()
            .iter()
            .all(|&(u, v)| host.has_edge(map[u], map[v]))
}

/// Intersection shape of three five-cliques.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "SCREAMING_SNAKE_CASE")]
pub enum CliqueTriplePattern {
    /// Some pair shares exactly three vertices.
    ThreeCommon,
    /// Pairwise intersections of sizes 2, 1, 1 with no common vertex.
    FigA,
    /// Pairwise intersections of sizes 2, 2, 1 with no common vertex.
    FigB,
    /// The union has at least twelve vertices.
    Knz,
    Other,
}

impl fmt::Display for CliqueTriplePattern {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            CliqueTriplePattern::ThreeCommon => "THREE_COMMON",
            CliqueTriplePattern::FigA => "FIG_A",
            CliqueTriplePattern::FigB => "FIG_B",
            CliqueTriplePattern::Knz => "KNZ",
            CliqueTriplePattern::Other => "OTHER",
        })
    }
}

/// Classifies three five-cliques by intersection sizes. The shapes are
/// recognized under any ordering of the three cliques.
pub fn clique_triple_pattern(
    g: &SmallGraph,
    l1: VertexSet,
    l2: VertexSet,
    l3: VertexSet,
) -> Result<CliqueTriplePattern> {
    for (i, l) in [l1, l2, l3].into_iter().enumerate() {
        if l.len() != 5 || !l.is_subset(g.vertices()) || !g.is_clique(l) {
            return Err(Error::Precondition(format!(
                "L{} = {l:?} is not a 5-clique",
                i + 1
            )));
        }
    }
    let pair = [
        l1.intersection(l2).len(),
        l1.intersection(l3).len(),
        l2.intersection(l3).len(),
    ];
    if pair.contains(&3) {
        return Ok(CliqueTriplePattern::ThreeCommon);
    }
    let common = l1.intersection(l2).intersection(l3);
    let mut sizes = pair;
    sizes.sort_unstable();
    if common.is_empty() {
        if sizes == [1, 1, 2] {
            return Ok(CliqueTriplePattern::FigA);
        }
        if sizes == [1, 2, 2] {
            return Ok(CliqueTriplePattern::FigB);
        }
    }
    if l1.union(l2).union(l3).len() >= 12 {
        return Ok(CliqueTriplePattern::Knz);
    }
    Ok(CliqueTriplePattern::Other)
}
