use std::collections::VecDeque;

use crate::graph::SmallGraph;

/// κ(G): `n - 1` for complete graphs, otherwise the least local
/// connectivity over non-adjacent pairs.
pub fn vertex_connectivity(g: &SmallGraph) -> usize {
    let n = g.order();
    if n <= 1 {
        return 0;
    }
    if !g.is_connected() {
        return 0;
    }
    let mut best = n - 1;
    for s in 0..n {
        for t in s + 1..n {
            if !g.has_edge(s, t) {
                best = best.min(local_connectivity(g, s, t));
            }
        }
    }
    best
}

/// Maximum number of internally disjoint `s`–`t` paths for non-adjacent
/// `s != t`, by unit-capacity augmenting paths on the split graph.
pub fn local_connectivity(g: &SmallGraph, s: usize, t: usize) -> usize {
    assert!(
        s != t && !g.has_edge(s, t),
        "local connectivity needs a non-adjacent pair"
    );
    let n = g.order();
    // node 2v is v's entry, 2v+1 its exit
    let size = 2 * n;
    let big = n as i32;
    let mut cap = vec![0i32; size * size];
    for v in 0..n {
        cap[2 * v * size + 2 * v + 1] = if v == s || v == t { big } else { 1 };
        for u in g.neighbors(v) {
            cap[(2 * v + 1) * size + 2 * u] = big;
        }
    }
    let (source, sink) = (2 * s + 1, 2 * t);
    let mut flow = 0;
    loop {
        let mut prev = vec![usize::MAX; size];
        prev[source] = source;
        let mut queue = VecDeque::from([source]);
        while let Some(x) = queue.pop_front() {
            if x == sink {
                break;
            }
            for y in 0..size {
                if prev[y] == usize::MAX && cap[x * size + y] > 0 {
                    prev[y] = x;
                    queue.push_back(y);
                }
            }
        }
        if prev[sink] == usize::MAX {
            return flow;
        }
        let mut y = sink;
        while y != source {
            let x = prev[y];
            cap[x * size + y] -= 1;
            cap[y * size + x] += 1;
            y = x;
        }
        flow += 1;
    }
}
