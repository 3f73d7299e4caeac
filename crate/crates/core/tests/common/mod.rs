//! Independent reference implementations used to cross-check the library.
//! None of them call the library's canonical labeling or minor search.

#![allow(dead_code)]

use std::collections::HashSet;

use k7lab::{SmallGraph, VertexSet};

/// Every labeled graph on `n <= 7` vertices.
pub fn all_labeled(n: usize) -> impl Iterator<Item = SmallGraph> {
    let pairs: Vec<(usize, usize)> = (0..n).flat_map(|j| (0..j).map(move |i| (i, j))).collect();
    (0u64..1 << pairs.len()).map(move |mask| {
        let edges: Vec<_> = pairs
            .iter()
            .enumerate()
            .filter(|(b, _)| mask >> b & 1 == 1)
            .map(|(_, &e)| e)
            .collect();
        SmallGraph::from_edges(n, &edges).unwrap()
    })
}

/// Upper triangle of `g` relabeled by `pos` (vertex `v` goes to `pos[v]`).
fn triangle(g: &SmallGraph, pos: &[usize]) -> u64 {
    let n = g.order();
    let mut inv = vec![0; n];
    for (v, &p) in pos.iter().enumerate() {
        inv[p] = v;
    }
    let mut bits = 0u64;
    for j in 1..n {
        for i in 0..j {
            bits = bits << 1 | g.has_edge(inv[i], inv[j]) as u64;
        }
    }
    bits
}

/// Minimum relabeled triangle over all `n!` permutations.
pub fn brute_key(g: &SmallGraph) -> u64 {
    let n = g.order();
    let mut perm: Vec<usize> = (0..n).collect();
    let mut best = u64::MAX;
    permutations(&mut perm, 0, &mut |p| best = best.min(triangle(g, p)));
    best
}

fn permutations(a: &mut Vec<usize>, k: usize, f: &mut dyn FnMut(&[usize])) {
    if k == a.len() {
        f(a);
        return;
    }
    for i in k..a.len() {
        a.swap(k, i);
        permutations(a, k + 1, f);
        a.swap(k, i);
    }
}

/// Like [`brute_key`] but only over labelings that order vertices by the
/// invariant (degree, sorted neighbor degrees). Still exact: every graph
/// isomorphism preserves the invariant, so the minimum is a class property.
pub fn refined_key(g: &SmallGraph) -> (usize, u64) {
    let n = g.order();
    let inv: Vec<(usize, Vec<usize>)> = (0..n)
        .map(|v| {
            let mut nd: Vec<usize> = g.neighbors(v).iter().map(|u| g.degree(u)).collect();
            nd.sort();
            (g.degree(v), nd)
        })
        .collect();
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by(|&a, &b| inv[a].cmp(&inv[b]));
    // cells of equal invariant, as position ranges
    let mut cells = Vec::new();
    let mut start = 0;
    for i in 1..=n {
        if i == n || inv[order[i]] != inv[order[start]] {
            cells.push((start, i));
            start = i;
        }
    }
    let mut best = u64::MAX;
    let mut pos = vec![0; n];
    assign_cells(g, &order, &cells, 0, &mut pos, &mut best);
    (n, best)
}

fn assign_cells(
    g: &SmallGraph,
    order: &[usize],
    cells: &[(usize, usize)],
    c: usize,
    pos: &mut [usize],
    best: &mut u64,
) {
    let Some(&(lo, hi)) = cells.get(c) else {
        *best = (*best).min(triangle(g, pos));
        return;
    };
    let mut slots: Vec<usize> = (lo..hi).collect();
    let members = &order[lo..hi];
    let mut f = |p: &[usize]| {
        for (i, &v) in members.iter().enumerate() {
            pos[v] = p[i];
        }
        assign_cells(g, order, cells, c + 1, &mut pos.to_vec(), best);
    };
    permutations(&mut slots, 0, &mut f);
}

/// Classes of a hereditary property on `n` vertices, built by adding one
/// vertex in every possible way to each class on `n - 1` vertices and
/// deduplicating with [`refined_key`].
pub fn extension_classes(n: usize, keep: &dyn Fn(&SmallGraph) -> bool) -> Vec<SmallGraph> {
    let mut level = vec![SmallGraph::empty(0).unwrap()];
    for k in 0..n {
        let mut seen = HashSet::new();
        let mut next = Vec::new();
        for g in &level {
            for mask in 0u32..1 << k {
                let h = g.add_vertex(VertexSet(mask)).unwrap();
                if keep(&h) && seen.insert(refined_key(&h)) {
                    next.push(h);
                }
            }
        }
        level = next;
    }
    level
}

/// K_p minor by direct search over vertex-to-block assignments (blocks
/// opened in order, vertices may stay unused).
pub fn partition_clique_minor(g: &SmallGraph, p: usize) -> bool {
    let mut blocks = vec![0u32; p];
    assign(g, p, 0, 0, &mut blocks)
}

fn assign(g: &SmallGraph, p: usize, v: usize, used: usize, blocks: &mut Vec<u32>) -> bool {
    let n = g.order();
    if used + (n - v) < p {
        return false;
    }
    if v == n {
        return is_model(g, blocks);
    }
    if assign(g, p, v + 1, used, blocks) {
        return true;
    }
    for b in 0..(used + 1).min(p) {
        blocks[b] |= 1 << v;
        let ok = assign(g, p, v + 1, used.max(b + 1), blocks);
        blocks[b] &= !(1 << v);
        if ok {
            return true;
        }
    }
    false
}

fn is_model(g: &SmallGraph, blocks: &[u32]) -> bool {
    blocks.iter().all(|&b| b != 0 && g.is_connected_set(VertexSet(b)))
        && (0..blocks.len()).all(|i| {
            (i + 1..blocks.len()).all(|j| {
                VertexSet(blocks[i])
                    .iter()
                    .any(|u| g.neighbors(u).bits() & blocks[j] != 0)
            })
        })
}

/// Clique number by subset enumeration.
pub fn brute_omega(g: &SmallGraph) -> usize {
    (0u32..1 << g.order())
        .filter(|&m| g.is_clique(VertexSet(m)))
        .map(|m| m.count_ones() as usize)
        .max()
        .unwrap_or(0)
}

pub fn brute_alpha(g: &SmallGraph) -> usize {
    brute_omega(&g.complement())
}
