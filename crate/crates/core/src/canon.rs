//! Canonical labeling by partition refinement and individualization.
//!
//! The search refines an ordered vertex partition to an equitable one,
//! then individualizes each vertex of the first non-singleton cell in turn.
//! Every discrete partition reached is a candidate labeling; the canonical
//! one is the labeling whose relabeled adjacency rows compare greatest.
//! Automorphisms discovered at equal leaves prune sibling branches that lie
//! in a common orbit of the automorphisms fixing the current prefix.

use std::fmt;

use serde::{Serialize, Serializer};

use crate::graph::{SmallGraph, VertexSet, MAX_VERTICES};

/// Upper triangle of the canonically relabeled graph, column order, packed
/// most significant bit first. Equal keys mean isomorphic graphs.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct CanonicalKey {
    n: u8,
    words: [u64; 8],
}

impl CanonicalKey {
    fn from_graph(g: &SmallGraph) -> Self {
        let mut words = [0u64; 8];
        let mut bit = 0usize;
        for j in 1..g.order() {
            for i in 0..j {
                if g.has_edge(i, j) {
                    words[bit / 64] |= 1 << (63 - bit % 64);
                }
                bit += 1;
            }
        }
        CanonicalKey {
            n: g.order() as u8,
            words,
        }
    }

    pub fn order(&self) -> usize {
        self.n as usize
    }

    /// Order byte followed by the packed triangle, as lowercase hex.
    pub fn hex(&self) -> String {
        let n = self.order();
        let bytes = (n * n.saturating_sub(1) / 2).div_ceil(8);
        let mut s = format!("{:02x}", self.n);
        for b in 0..bytes {
            let byte = (self.words[b / 8] >> (56 - 8 * (b % 8))) as u8;
            s.push_str(&format!("{byte:02x}"));
        }
        s
    }
}

impl fmt::Debug for CanonicalKey {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "CanonicalKey({})", self.hex())
    }
}

impl fmt::Display for CanonicalKey {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.hex())
    }
}

impl Serialize for CanonicalKey {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(&self.hex())
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CanonicalForm {
    pub key: CanonicalKey,
    /// `perm[v]` is the canonical label of vertex `v`.
    pub perm: Vec<usize>,
}

impl CanonicalForm {
    /// Applies `perm` to `g`; its triangle is exactly `key`.
    pub fn relabel(&self, g: &SmallGraph) -> SmallGraph {
        g.permute(&self.perm)
            .expect("canonical permutation matches its graph")
    }
}

pub fn canonical_form(g: &SmallGraph) -> CanonicalForm {
    let n = g.order();
    if n == 0 {
        return CanonicalForm {
            key: CanonicalKey::from_graph(g),
            perm: Vec::new(),
        };
    }
    let mut search = Search {
        g,
        n,
        first: None,
        best: None,
        autos: Vec::new(),
    };
    let mut cells = vec![VertexSet::full(n).bits()];
    refine(g, &mut cells);
    search.descend(cells, &mut Vec::with_capacity(n));
    let (_, lab) = search.best.expect("at least one leaf");
    let mut perm = vec![0; n];
    for (pos, &v) in lab.iter().enumerate() {
        perm[v] = pos;
    }
    let canon = g.permute(&perm).expect("leaf labeling is a permutation");
    CanonicalForm {
        key: CanonicalKey::from_graph(&canon),
        perm,
    }
}

pub fn canonical_key(g: &SmallGraph) -> CanonicalKey {
    canonical_form(g).key
}

/// The canonical representative of `g`'s isomorphism class.
pub fn canonical_graph(g: &SmallGraph) -> SmallGraph {
    canonical_form(g).relabel(g)
}

pub fn is_isomorphic(g: &SmallGraph, h: &SmallGraph) -> bool {
    g.order() == h.order()
        && g.size() == h.size()
        && sorted_degrees(g) == sorted_degrees(h)
        && canonical_key(g) == canonical_key(h)
}

/// An isomorphism `map` with `map[v]` in `h` for each `v` in `g`, if any.
pub fn isomorphism(g: &SmallGraph, h: &SmallGraph) -> Option<Vec<usize>> {
    if !is_isomorphic(g, h) {
        return None;
    }
    let (cg, ch) = (canonical_form(g), canonical_form(h));
    let mut inv_h = vec![0; h.order()];
    for (v, &p) in ch.perm.iter().enumerate() {
        inv_h[p] = v;
    }
    Some(cg.perm.iter().map(|&p| inv_h[p]).collect())
}

fn sorted_degrees(g: &SmallGraph) -> Vec<usize> {
    let mut d = g.degrees();
    d.sort_unstable();
    d
}

/// Refines an ordered partition to the coarsest equitable refinement.
/// Cells split by each vertex's vector of neighbor counts into every cell,
/// ordered ascending by that vector, so the result is labeling-invariant.
fn refine(g: &SmallGraph, cells: &mut Vec<u32>) {
    let mut sig: Vec<(Vec<u8>, usize)> = Vec::with_capacity(MAX_VERTICES);
    loop {
        let mut next = Vec::with_capacity(cells.len());
        for &cell in cells.iter() {
            if cell.count_ones() == 1 {
                next.push(cell);
                continue;
            }
            sig.clear();
            for v in VertexSet(cell) {
                let row = g.neighbors(v).bits();
                let counts = cells.iter().map(|&c| (row & c).count_ones() as u8).collect();
                sig.push((counts, v));
            }
            sig.sort();
            let mut current = 1u32 << sig[0].1;
            for w in sig.windows(2) {
                if w[0].0 != w[1].0 {
                    next.push(current);
                    current = 0;
                }
                current |= 1 << w[1].1;
            }
            next.push(current);
        }
        let stable = next.len() == cells.len();
        *cells = next;
        if stable {
            return;
        }
    }
}

struct Search<'a> {
    g: &'a SmallGraph,
    n: usize,
    first: Option<(Vec<u32>, Vec<usize>)>,
    best: Option<(Vec<u32>, Vec<usize>)>,
    /// Automorphisms as images: `auto[v]`.
    autos: Vec<Vec<u8>>,
}

impl Search<'_> {
    fn descend(&mut self, cells: Vec<u32>, prefix: &mut Vec<usize>) {
        if cells.len() == self.n {
            self.leaf(&cells);
            return;
        }
        let target = cells
            .iter()
            .position(|c| c.count_ones() > 1)
            .expect("non-discrete partition has a non-singleton cell");
        let cell = cells[target];
        let mut explored = 0u32;
        for v in VertexSet(cell) {
            if explored != 0 && self.equivalent_to_explored(v, explored, prefix) {
                continue;
            }
            explored |= 1 << v;
            let mut child = Vec::with_capacity(cells.len() + 1);
            child.extend_from_slice(&cells[..target]);
            child.push(1 << v);
            child.push(cell & !(1 << v));
            child.extend_from_slice(&cells[target + 1..]);
            refine(self.g, &mut child);
            prefix.push(v);
            self.descend(child, prefix);
            prefix.pop();
        }
    }

    /// Whether `v` shares an orbit with an explored sibling under the
    /// automorphisms found so far that fix `prefix` pointwise.
    fn equivalent_to_explored(&self, v: usize, explored: u32, prefix: &[usize]) -> bool {
        let mut parent: [u8; MAX_VERTICES] = std::array::from_fn(|i| i as u8);
        fn find(parent: &mut [u8; MAX_VERTICES], mut x: usize) -> usize {
            while parent[x] as usize != x {
                parent[x] = parent[parent[x] as usize];
                x = parent[x] as usize;
            }
            x
        }
        let mut any = false;
        for auto in &self.autos {
            if prefix.iter().any(|&p| auto[p] as usize != p) {
                continue;
            }
            any = true;
            for (x, &y) in auto.iter().enumerate() {
                let (a, b) = (find(&mut parent, x), find(&mut parent, y as usize));
                if a != b {
                    parent[a] = b as u8;
                }
            }
        }
        if !any {
            return false;
        }
        let root = find(&mut parent, v);
        VertexSet(explored).iter().any(|u| find(&mut parent, u) == root)
    }

    fn leaf(&mut self, cells: &[u32]) {
        let lab: Vec<usize> = cells.iter().map(|c| c.trailing_zeros() as usize).collect();
        let rows: Vec<u32> = lab
            .iter()
            .map(|&u| {
                let nb = self.g.neighbors(u).bits();
                lab.iter()
                    .enumerate()
                    .fold(0u32, |r, (j, &w)| r | ((nb >> w & 1) << j))
            })
            .collect();
        let Some((first_rows, first_lab)) = &self.first else {
            self.first = Some((rows.clone(), lab.clone()));
            self.best = Some((rows, lab));
            return;
        };
        if &rows == first_rows {
            let auto = compose(first_lab, &lab, self.n);
            self.autos.push(auto);
            return;
        }
        let (best_rows, best_lab) = self.best.as_ref().expect("set with first");
        match rows.cmp(best_rows) {
            std::cmp::Ordering::Equal => {
                let auto = compose(best_lab, &lab, self.n);
                self.autos.push(auto);
            }
            std::cmp::Ordering::Greater => self.best = Some((rows, lab)),
            std::cmp::Ordering::Less => {}
        }
    }
}

/// The automorphism sending `from[i]` to `to[i]`.
fn compose(from: &[usize], to: &[usize], n: usize) -> Vec<u8> {
    let mut auto = vec![0u8; n];
    for (&a, &b) in from.iter().zip(to) {
        auto[a] = b as u8;
    }
    auto
}
