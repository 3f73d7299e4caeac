//! The small-graph value type.
//!
//! A [`SmallGraph`] stores at most [`MAX_VERTICES`] vertices as one neighbor
//! bitmask per vertex. It is `Copy`; every operation returns a new value.

use std::fmt;

use crate::error::{Error, Result};

/// Largest supported vertex count; a vertex set fits in one `u32`.
pub const MAX_VERTICES: usize = 31;

/// A set of vertex indices of some host graph, stored as a bitmask.
#[derive(Clone, Copy, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct VertexSet(pub u32);

impl VertexSet {
    pub const EMPTY: VertexSet = VertexSet(0);

    /// All vertices `0..n`.
    pub fn full(n: usize) -> Self {
        debug_assert!(n <= MAX_VERTICES);
        if n == 0 {
            VertexSet(0)
        } else {
            VertexSet(u32::MAX >> (32 - n))
        }
    }

    pub fn singleton(v: usize) -> Self {
        VertexSet(1 << v)
    }

    pub fn from_slice(vertices: &[usize]) -> Self {
        vertices.iter().fold(VertexSet(0), |s, &v| s.with(v))
    }

    #[inline]
    pub fn bits(self) -> u32 {
        self.0
    }

    #[inline]
    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    #[inline]
    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    #[inline]
    pub fn contains(self, v: usize) -> bool {
        v < 32 && self.0 >> v & 1 == 1
    }

    #[inline]
    pub fn with(self, v: usize) -> Self {
        VertexSet(self.0 | 1 << v)
    }

    #[inline]
    pub fn without(self, v: usize) -> Self {
        VertexSet(self.0 & !(1 << v))
    }

    #[inline]
    pub fn union(self, other: Self) -> Self {
        VertexSet(self.0 | other.0)
    }

    #[inline]
    pub fn intersection(self, other: Self) -> Self {
        VertexSet(self.0 & other.0)
    }

    #[inline]
    pub fn difference(self, other: Self) -> Self {
        VertexSet(self.0 & !other.0)
    }

    #[inline]
    pub fn is_subset(self, other: Self) -> bool {
        self.0 & !other.0 == 0
    }

    #[inline]
    pub fn is_disjoint(self, other: Self) -> bool {
        self.0 & other.0 == 0
    }

    /// Smallest member.
    #[inline]
    pub fn first(self) -> Option<usize> {
        (self.0 != 0).then(|| self.0.trailing_zeros() as usize)
    }

    pub fn iter(self) -> VertexIter {
        VertexIter(self.0)
    }

    pub fn to_vec(self) -> Vec<usize> {
        self.iter().collect()
    }
}

impl fmt::Debug for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

impl IntoIterator for VertexSet {
    type Item = usize;
    type IntoIter = VertexIter;

    fn into_iter(self) -> VertexIter {
        self.iter()
    }
}

impl FromIterator<usize> for VertexSet {
    fn from_iter<I: IntoIterator<Item = usize>>(iter: I) -> Self {
        iter.into_iter().fold(VertexSet(0), |s, v| s.with(v))
    }
}

/// Ascending iterator over the members of a [`VertexSet`].
#[derive(Clone, Debug)]
pub struct VertexIter(u32);

impl Iterator for VertexIter {
    type Item = usize;

    #[inline]
    fn next(&mut self) -> Option<usize> {
        if self.0 == 0 {
            return None;
        }
        let v = self.0.trailing_zeros() as usize;
        self.0 &= self.0 - 1;
        Some(v)
    }

    fn size_hint(&self) -> (usize, Option<usize>) {
        let k = self.0.count_ones() as usize;
        (k, Some(k))
    }
}

impl ExactSizeIterator for VertexIter {}

/// Simple undirected graph on `n <= 31` vertices.
///
/// Rows beyond `n` and bits at positions `>= n` are always zero, so the
/// derived `PartialEq`/`Hash` compare labeled graphs exactly.
#[derive(Clone, Copy, PartialEq, Eq, Hash)]
pub struct SmallGraph {
    n: u8,
    adj: [u32; MAX_VERTICES],
}

impl SmallGraph {
    /// Edgeless graph on `n` vertices.
    pub fn empty(n: usize) -> Result<Self> {
        if n > MAX_VERTICES {
            return Err(Error::TooManyVertices(n));
        }
        Ok(SmallGraph {
            n: n as u8,
            adj: [0; MAX_VERTICES],
        })
    }

    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Self> {
        let mut g = Self::empty(n)?;
        for &(u, v) in edges {
            g.check_vertex(u)?;
            g.check_vertex(v)?;
            if u == v {
                return Err(Error::Precondition(format!("loop at vertex {u}")));
            }
            g.set_edge(u, v, true);
        }
        Ok(g)
    }

    /// Builds a graph from adjacency rows, validating every invariant.
    pub fn from_rows(rows: &[u32]) -> Result<Self> {
        let mut g = Self::empty(rows.len())?;
        g.adj[..rows.len()].copy_from_slice(rows);
        g.validate()?;
        Ok(g)
    }

    /// Checks symmetry, loop-freeness and zero padding.
    pub fn validate(&self) -> Result<()> {
        let n = self.order();
        let full = VertexSet::full(n).0;
        for v in 0..MAX_VERTICES {
            let row = self.adj[v];
            if v >= n {
                if row != 0 {
                    return Err(Error::Invariant(format!("row {v} beyond order {n} is nonzero")));
                }
                continue;
            }
            if row & !full != 0 {
                return Err(Error::Invariant(format!("row {v} has bits beyond order {n}")));
            }
            if row >> v & 1 == 1 {
                return Err(Error::Invariant(format!("loop at vertex {v}")));
            }
            for u in VertexSet(row) {
                if self.adj[u] >> v & 1 == 0 {
                    return Err(Error::Invariant(format!("edge {v}-{u} is not symmetric")));
                }
            }
        }
        Ok(())
    }

    /// |G|
    #[inline]
    pub fn order(&self) -> usize {
        self.n as usize
    }

    /// e(G)
    pub fn size(&self) -> usize {
        self.rows().iter().map(|r| r.count_ones() as usize).sum::<usize>() / 2
    }

    #[inline]
    pub fn rows(&self) -> &[u32] {
        &self.adj[..self.n as usize]
    }

    #[inline]
    pub fn vertices(&self) -> VertexSet {
        VertexSet::full(self.order())
    }

    /// N(v)
    #[inline]
    pub fn neighbors(&self, v: usize) -> VertexSet {
        VertexSet(self.adj[v])
    }

    /// N[v]
    #[inline]
    pub fn closed_neighbors(&self, v: usize) -> VertexSet {
        VertexSet(self.adj[v] | 1 << v)
    }

    #[inline]
    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].count_ones() as usize
    }

    #[inline]
    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.adj[u] >> v & 1 == 1
    }

    pub fn degrees(&self) -> Vec<usize> {
        (0..self.order()).map(|v| self.degree(v)).collect()
    }

    /// δ(G); zero for the null graph.
    pub fn min_degree(&self) -> usize {
        (0..self.order()).map(|v| self.degree(v)).min().unwrap_or(0)
    }

    /// Δ(G); zero for the null graph.
    pub fn max_degree(&self) -> usize {
        (0..self.order()).map(|v| self.degree(v)).max().unwrap_or(0)
    }

    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::with_capacity(self.size());
        for u in 0..self.order() {
            for v in VertexSet(self.adj[u] & !((2u32 << u) - 1)) {
                out.push((u, v));
            }
        }
        out
    }

    /// Edges with both ends in `set`.
    pub fn edges_within(&self, set: VertexSet) -> usize {
        set.iter()
            .map(|v| (self.adj[v] & set.0).count_ones() as usize)
            .sum::<usize>()
            / 2
    }

    /// Whether any edge joins `a` and `b`.
    pub fn sets_adjacent(&self, a: VertexSet, b: VertexSet) -> bool {
        a.iter().any(|v| self.adj[v] & b.0 != 0)
    }

    pub fn is_clique(&self, set: VertexSet) -> bool {
        set.iter()
            .all(|v| set.without(v).is_subset(VertexSet(self.adj[v])))
    }

    pub fn is_independent(&self, set: VertexSet) -> bool {
        set.iter().all(|v| self.adj[v] & set.0 == 0)
    }

    /// Whether `G[set]` is connected. The empty set counts as disconnected.
    pub fn is_connected_set(&self, set: VertexSet) -> bool {
        let Some(start) = set.first() else {
            return false;
        };
        self.reach_within(start, set) == set
    }

    pub fn is_connected(&self) -> bool {
        self.order() <= 1 || self.is_connected_set(self.vertices())
    }

    /// Vertices reachable from `start` inside `set`.
    pub fn reach_within(&self, start: usize, set: VertexSet) -> VertexSet {
        let mut seen = 1u32 << start;
        let mut frontier = seen;
        while frontier != 0 {
            let mut next = 0;
            for v in VertexSet(frontier) {
                next |= self.adj[v];
            }
            next &= set.0 & !seen;
            seen |= next;
            frontier = next;
        }
        VertexSet(seen)
    }

    pub fn add_edge(&self, u: usize, v: usize) -> Result<Self> {
        self.check_vertex(u)?;
        self.check_vertex(v)?;
        if u == v {
            return Err(Error::Precondition(format!("loop at vertex {u}")));
        }
        let mut g = *self;
        g.set_edge(u, v, true);
        Ok(g)
    }

    pub fn remove_edge(&self, u: usize, v: usize) -> Result<Self> {
        self.check_vertex(u)?;
        self.check_vertex(v)?;
        let mut g = *self;
        g.set_edge(u, v, false);
        Ok(g)
    }

    /// G[set], relabeled to `0..|set|` in increasing vertex order.
    pub fn induced(&self, set: VertexSet) -> SmallGraph {
        let keep = set.intersection(self.vertices()).to_vec();
        let mut g = SmallGraph {
            n: keep.len() as u8,
            adj: [0; MAX_VERTICES],
        };
        for (i, &u) in keep.iter().enumerate() {
            for (j, &v) in keep.iter().enumerate() {
                if self.has_edge(u, v) {
                    g.adj[i] |= 1 << j;
                }
            }
        }
        g
    }

    /// G \ set
    pub fn remove_vertices(&self, set: VertexSet) -> SmallGraph {
        self.induced(self.vertices().difference(set))
    }

    pub fn remove_vertex(&self, v: usize) -> Result<SmallGraph> {
        self.check_vertex(v)?;
        Ok(self.remove_vertices(VertexSet::singleton(v)))
    }

    /// Appends one vertex adjacent to `neighbors`.
    pub fn add_vertex(&self, neighbors: VertexSet) -> Result<SmallGraph> {
        let n = self.order();
        if n + 1 > MAX_VERTICES {
            return Err(Error::TooManyVertices(n + 1));
        }
        if !neighbors.is_subset(self.vertices()) {
            return Err(Error::Precondition(format!(
                "neighbor set {neighbors:?} exceeds order {n}"
            )));
        }
        let mut g = *self;
        g.n += 1;
        g.adj[n] = neighbors.0;
        for u in neighbors {
            g.adj[u] |= 1 << n;
        }
        Ok(g)
    }

    /// G/uv. The merged vertex keeps index `min(u, v)`; every vertex above
    /// `max(u, v)` shifts down by one.
    pub fn contract(&self, u: usize, v: usize) -> Result<SmallGraph> {
        self.check_vertex(u)?;
        self.check_vertex(v)?;
        if u == v || !self.has_edge(u, v) {
            return Err(Error::Precondition(format!("no edge {u}-{v} to contract")));
        }
        let (keep, gone) = (u.min(v), u.max(v));
        let mut g = *self;
        let merged = (g.adj[keep] | g.adj[gone]) & !(1 << keep) & !(1 << gone);
        g.adj[keep] = merged;
        for w in VertexSet(merged) {
            g.adj[w] |= 1 << keep;
        }
        Ok(g.remove_vertices(VertexSet::singleton(gone)))
    }

    pub fn complement(&self) -> SmallGraph {
        let full = VertexSet::full(self.order()).0;
        let mut g = *self;
        for v in 0..self.order() {
            g.adj[v] = !self.adj[v] & full & !(1 << v);
        }
        g
    }

    /// Disjoint union; vertices of `other` follow those of `self`.
    pub fn union(&self, other: &SmallGraph) -> Result<SmallGraph> {
        let (a, b) = (self.order(), other.order());
        if a + b > MAX_VERTICES {
            return Err(Error::TooManyVertices(a + b));
        }
        let mut g = *self;
        g.n = (a + b) as u8;
        for v in 0..b {
            g.adj[a + v] = other.adj[v] << a;
        }
        Ok(g)
    }

    /// Disjoint union plus every edge between the two sides.
    pub fn join(&self, other: &SmallGraph) -> Result<SmallGraph> {
        let mut g = self.union(other)?;
        let (a, b) = (self.order(), other.order());
        let left = VertexSet::full(a).0;
        let right = VertexSet::full(b).0 << a;
        for v in 0..a {
            g.adj[v] |= right;
        }
        for v in a..a + b {
            g.adj[v] |= left;
        }
        Ok(g)
    }

    /// Relabels vertex `v` as `perm[v]`.
    pub fn permute(&self, perm: &[usize]) -> Result<SmallGraph> {
        let n = self.order();
        if perm.len() != n {
            return Err(Error::Precondition(format!(
                "permutation has length {}, graph has order {n}",
                perm.len()
            )));
        }
        let mut seen = 0u32;
        for &p in perm {
            if p >= n || seen >> p & 1 == 1 {
                return Err(Error::Precondition(format!("{perm:?} is not a permutation")));
            }
            seen |= 1 << p;
        }
        let mut g = SmallGraph::empty(n)?;
        for u in 0..n {
            for v in self.neighbors(u) {
                g.adj[perm[u]] |= 1 << perm[v];
            }
        }
        Ok(g)
    }

    #[inline]
    pub(crate) fn set_edge(&mut self, u: usize, v: usize, present: bool) {
        if present {
            self.adj[u] |= 1 << v;
            self.adj[v] |= 1 << u;
        } else {
            self.adj[u] &= !(1 << v);
            self.adj[v] &= !(1 << u);
        }
    }

    pub(crate) fn check_vertex(&self, v: usize) -> Result<()> {
        if v >= self.order() {
            Err(Error::VertexOutOfRange {
                vertex: v,
                order: self.order(),
            })
        } else {
            Ok(())
        }
    }

    /// Builds from rows without validation; callers guarantee the invariants.
    pub(crate) fn from_rows_unchecked(rows: &[u32]) -> SmallGraph {
        let mut g = SmallGraph {
            n: rows.len() as u8,
            adj: [0; MAX_VERTICES],
        };
        g.adj[..rows.len()].copy_from_slice(rows);
        debug_assert!(g.validate().is_ok());
        g
    }
}

impl fmt::Debug for SmallGraph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "SmallGraph(n={}, edges={:?})", self.order(), self.edges())
    }
}

impl Default for SmallGraph {
    fn default() -> Self {
        SmallGraph {
            n: 0,
            adj: [0; MAX_VERTICES],
        }
    }
}
