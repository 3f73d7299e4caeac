//! K_p minor search.
//!
//! The search repeatedly takes a minimum-degree vertex `v` of the residual
//! graph and branches three ways: contract `v` into a neighbor, freeze the
//! current branch set of `v` as a final branch set, or delete `v`. Frozen
//! sets leave the residual graph; residual vertices remember which frozen
//! sets they touch. Every K_p model survives along at least one branch, so
//! the search is exhaustive. Failed residual states are memoized per call.

use std::collections::HashSet;

use crate::checks::mader_bound;
use crate::cliques::find_clique_within;
use crate::graph::{SmallGraph, VertexSet, MAX_VERTICES};
use crate::minors::{MinorCertificate, MinorTarget};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct CliqueMinorOptions {
    /// Order contractions by the extremal edge bound: when a residual graph
    /// carries enough edges to force a K_q minor, contract along edges with
    /// the fewest common neighbors first. Changes speed, never answers.
    pub mader_guidance: bool,
    /// Memoize failed residual states.
    pub memo: bool,
}

impl Default for CliqueMinorOptions {
    fn default() -> Self {
        CliqueMinorOptions {
            mader_guidance: true,
            memo: true,
        }
    }
}

pub fn has_clique_minor(g: &SmallGraph, p: usize) -> Option<MinorCertificate> {
    has_clique_minor_with(g, p, CliqueMinorOptions::default())
}

pub fn has_clique_minor_with(
    g: &SmallGraph,
    p: usize,
    options: CliqueMinorOptions,
) -> Option<MinorCertificate> {
    let n = g.order();
    if p > n {
        return None;
    }
    let mut residual = Residual {
        alive: g.vertices().bits(),
        adj: [0; MAX_VERTICES],
        touch: [0; MAX_VERTICES],
        sets: [0; MAX_VERTICES],
    };
    for v in 0..n {
        residual.adj[v] = g.neighbors(v).bits();
        residual.sets[v] = 1 << v;
    }
    let mut search = Search {
        n,
        p,
        options,
        failed: HashSet::new(),
    };
    let mut frozen = Vec::with_capacity(p);
    search.run(&residual, &mut frozen).map(|sets| MinorCertificate {
        target: MinorTarget::Clique(p),
        branch_sets: sets.into_iter().map(VertexSet).collect(),
        roots: None,
    })
}

#[derive(Clone)]
struct Residual {
    alive: u32,
    adj: [u32; MAX_VERTICES],
    /// Bit `i` set when the vertex touches frozen set `i`.
    touch: [u32; MAX_VERTICES],
    /// Original vertices merged into each residual vertex.
    sets: [u32; MAX_VERTICES],
}

impl Residual {
    fn edge_count(&self) -> usize {
        VertexSet(self.alive)
            .iter()
            .map(|v| self.adj[v].count_ones() as usize)
            .sum::<usize>()
            / 2
    }

    fn remove(&mut self, v: usize) {
        self.alive &= !(1 << v);
        for w in VertexSet(self.adj[v]) {
            self.adj[w] &= !(1 << v);
        }
        self.adj[v] = 0;
        self.touch[v] = 0;
        self.sets[v] = 0;
    }

    /// Merges `v` into its neighbor `u`.
    fn contract(&mut self, v: usize, u: usize) {
        let gained = self.adj[v] & !(1 << u);
        self.adj[u] |= gained;
        for w in VertexSet(gained) {
            self.adj[w] |= 1 << u;
        }
        self.touch[u] |= self.touch[v];
        self.sets[u] |= self.sets[v];
        self.remove(v);
    }

    /// Freezes `v` as final branch set number `index`.
    fn freeze(&mut self, v: usize, index: usize) {
        for w in VertexSet(self.adj[v]) {
            self.touch[w] |= 1 << index;
        }
        self.remove(v);
    }

    fn key(&self, frozen: usize, n: usize) -> Vec<u32> {
        let mut key = Vec::with_capacity(2 + 2 * n);
        key.push(self.alive);
        key.push(frozen as u32);
        for v in VertexSet(self.alive) {
            key.push(self.adj[v]);
            key.push(self.touch[v]);
        }
        key
    }
}

struct Search {
    n: usize,
    p: usize,
    options: CliqueMinorOptions,
    failed: HashSet<Vec<u32>>,
}

impl Search {
    fn run(&mut self, r: &Residual, frozen: &mut Vec<u32>) -> Option<Vec<u32>> {
        let f = frozen.len();
        let q = self.p - f;
        if q == 0 {
            return Some(frozen.clone());
        }
        let all_frozen = (1u32 << f) - 1;
        let ready: VertexSet = VertexSet(r.alive)
            .iter()
            .filter(|&w| r.touch[w] & all_frozen == all_frozen)
            .collect();
        if ready.len() >= q {
            let view = SmallGraph::from_rows_unchecked(&r.adj[..self.n]);
            if let Some(clique) = find_clique_within(&view, ready, q) {
                let mut sets = frozen.clone();
                sets.extend(clique.iter().map(|v| r.sets[v]));
                return Some(sets);
            }
        }
        let alive = r.alive.count_ones() as usize;
        let edges = r.edge_count();
        if alive < q || edges < q * (q - 1) / 2 {
            return None;
        }
        let key = self.options.memo.then(|| r.key(f, self.n));
        if let Some(k) = &key {
            if self.failed.contains(k) {
                return None;
            }
        }

        let guaranteed = self.options.mader_guidance
            && f == 0
            && (1..=7).contains(&q)
            && mader_bound(q, alive).is_ok_and(|b| edges as i64 >= b);

        let v = VertexSet(r.alive)
            .iter()
            .min_by_key(|&v| (r.adj[v].count_ones(), v))
            .expect("alive is nonempty");
        let mut targets: Vec<usize> = VertexSet(r.adj[v]).to_vec();
        if guaranteed {
            targets.sort_by_key(|&u| ((r.adj[u] & r.adj[v]).count_ones(), u));
        }
        for u in targets {
            let mut child = r.clone();
            child.contract(v, u);
            if let Some(found) = self.run(&child, frozen) {
                return Some(found);
            }
        }
        let degree = r.adj[v].count_ones() as usize;
        if r.touch[v] & all_frozen == all_frozen && degree + 1 >= q {
            let mut child = r.clone();
            child.freeze(v, f);
            frozen.push(r.sets[v]);
            let found = self.run(&child, frozen);
            frozen.pop();
            if found.is_some() {
                return found;
            }
        }
        let mut child = r.clone();
        child.remove(v);
        if let Some(found) = self.run(&child, frozen) {
            return Some(found);
        }

        debug_assert!(
            !guaranteed,
            "extremal bound forces a K{q} minor the search missed"
        );
        if let Some(k) = key {
            self.failed.insert(k);
        }
        None
    }
}
