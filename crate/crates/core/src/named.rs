//! Named constructors with fixed, documented labelings.

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::graph::{SmallGraph, VertexSet, MAX_VERTICES};

/// A named graph family member.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Named {
    Complete(usize),
    Cycle(usize),
    Path(usize),
    Empty(usize),
    CompleteBipartite(usize, usize),
    H8,
    Petersen,
    Octahedron,
}

pub fn make_named(name: Named) -> Result<SmallGraph> {
    match name {
        Named::Complete(k) => complete(k),
        Named::Cycle(k) => cycle(k),
        Named::Path(k) => path(k),
        Named::Empty(k) => empty(k),
        Named::CompleteBipartite(a, b) => complete_bipartite(a, b),
        Named::H8 => Ok(h8()),
        Named::Petersen => Ok(petersen()),
        Named::Octahedron => Ok(octahedron()),
    }
}

impl fmt::Display for Named {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Named::Complete(k) => write!(f, "K{k}"),
            Named::Cycle(k) => write!(f, "C{k}"),
            Named::Path(k) => write!(f, "P{k}"),
            Named::Empty(k) => write!(f, "E{k}"),
            Named::CompleteBipartite(a, b) => write!(f, "K{a},{b}"),
            Named::H8 => f.write_str("H8"),
            Named::Petersen => f.write_str("petersen"),
            Named::Octahedron => f.write_str("octahedron"),
        }
    }
}

impl FromStr for Named {
    type Err = Error;

    /// Accepts `K7`, `K3,3`, `C6`, `P4`, `E3`, `H8`, `petersen`, `octahedron`.
    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::InvalidArgument(format!("unknown graph name {s:?}"));
        match s.to_ascii_lowercase().as_str() {
            "h8" => return Ok(Named::H8),
            "petersen" => return Ok(Named::Petersen),
            "octahedron" => return Ok(Named::Octahedron),
            _ => {}
        }
        let (head, rest) = s.split_at(s.char_indices().nth(1).map_or(s.len(), |(i, _)| i));
        let num = |t: &str| t.parse::<usize>().map_err(|_| bad());
        match head {
            "K" => match rest.split_once(',') {
                Some((a, b)) => Ok(Named::CompleteBipartite(num(a)?, num(b)?)),
                None => Ok(Named::Complete(num(rest)?)),
            },
            "C" => Ok(Named::Cycle(num(rest)?)),
            "P" => Ok(Named::Path(num(rest)?)),
            "E" => Ok(Named::Empty(num(rest)?)),
            _ => Err(bad()),
        }
    }
}

fn check_order(k: usize, min: usize) -> Result<()> {
    if k < min || k > MAX_VERTICES {
        return Err(Error::InvalidArgument(format!(
            "order {k} outside [{min}, {MAX_VERTICES}]"
        )));
    }
    Ok(())
}

pub fn complete(k: usize) -> Result<SmallGraph> {
    Ok(empty(k)?.complement())
}

pub fn empty(k: usize) -> Result<SmallGraph> {
    check_order(k, 0)?;
    SmallGraph::empty(k)
}

/// Cycle `0-1-...-(k-1)-0`, `k >= 3`.
pub fn cycle(k: usize) -> Result<SmallGraph> {
    check_order(k, 3)?;
    let edges: Vec<_> = (0..k).map(|i| (i, (i + 1) % k)).collect();
    SmallGraph::from_edges(k, &edges)
}

/// Path `0-1-...-(k-1)` on `k >= 1` vertices.
pub fn path(k: usize) -> Result<SmallGraph> {
    check_order(k, 1)?;
    let edges: Vec<_> = (1..k).map(|i| (i - 1, i)).collect();
    SmallGraph::from_edges(k, &edges)
}

/// Sides `0..a` and `a..a+b`.
pub fn complete_bipartite(a: usize, b: usize) -> Result<SmallGraph> {
    check_order(a + b, 0)?;
    empty(a)?.join(&empty(b)?)
}

/// Complement of H8's labeled complement.
///
/// Labels: `w=0, w1=1, w2=2, w3=3, x1=4, x2=5, x3=6, x4=7`. The complement
/// has edges `w-w1, w-w2, w-w3`, the path `x1-x2-x3-x4`, and
/// `w1-x1, w1-x3, w2-x1, w2-x4, w3-x2, w3-x4`.
pub fn h8() -> SmallGraph {
    const CO_EDGES: [(usize, usize); 12] = [
        (0, 1),
        (0, 2),
        (0, 3),
        (4, 5),
        (5, 6),
        (6, 7),
        (1, 4),
        (1, 6),
        (2, 4),
        (2, 7),
        (3, 5),
        (3, 7),
    ];
    SmallGraph::from_edges(8, &CO_EDGES)
        .expect("static edge list")
        .complement()
}

/// Outer cycle `0..5`, inner pentagram `5..10`, spokes `i -- i+5`.
pub fn petersen() -> SmallGraph {
    let mut edges = Vec::with_capacity(15);
    for i in 0..5 {
        edges.push((i, (i + 1) % 5));
        edges.push((5 + i, 5 + (i + 2) % 5));
        edges.push((i, i + 5));
    }
    SmallGraph::from_edges(10, &edges).expect("static edge list")
}

/// K_{2,2,2}; the antipodal pairs are `{0,1}`, `{2,3}`, `{4,5}`.
pub fn octahedron() -> SmallGraph {
    let mut g = complete(6).expect("order 6");
    for i in [0, 2, 4] {
        g.set_edge(i, i + 1, false);
    }
    g
}

/// The join of three isolated vertices (`0..3`) with the cycle `3..9`.
pub fn k3bar_join_c6() -> SmallGraph {
    empty(3).and_then(|e| e.join(&cycle(6)?)).expect("order 9")
}

/// K1 + H8, apex at vertex 0.
pub fn k1_join_h8() -> SmallGraph {
    complete(1).and_then(|k| k.join(&h8())).expect("order 9")
}

/// Vertex set helper for tests and fixtures: `{i : bit i set}`.
pub fn set(vertices: &[usize]) -> VertexSet {
    VertexSet::from_slice(vertices)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn h8_is_four_regular_with_sixteen_edges() {
        let h = h8();
        assert_eq!(h.order(), 8);
        assert_eq!(h.size(), 16);
        assert!((0..8).all(|v| h.degree(v) == 4));
    }

    #[test]
    fn simple_families() {
        assert_eq!(complete(7).unwrap().size(), 21);
        let c6 = cycle(6).unwrap();
        assert!((0..6).all(|v| c6.degree(v) == 2));
        // bipartite: even/odd split is independent on both sides
        assert!(c6.is_independent(set(&[0, 2, 4])) && c6.is_independent(set(&[1, 3, 5])));
        assert_eq!(path(1).unwrap().size(), 0);
        assert!(cycle(2).is_err());
        assert!(complete(32).is_err());
        assert_eq!(petersen().size(), 15);
        assert!((0..10).all(|v| petersen().degree(v) == 3));
        assert_eq!(octahedron().size(), 12);
        assert_eq!(complete_bipartite(3, 3).unwrap().size(), 9);
    }

    #[test]
    fn parse_names() {
        assert_eq!("K6".parse::<Named>().unwrap(), Named::Complete(6));
        assert_eq!("K3,3".parse::<Named>().unwrap(), Named::CompleteBipartite(3, 3));
        assert_eq!("h8".parse::<Named>().unwrap(), Named::H8);
        assert_eq!("C9".parse::<Named>().unwrap(), Named::Cycle(9));
        assert!("Q5".parse::<Named>().is_err());
        assert!("K".parse::<Named>().is_err());
        for name in [
            Named::Complete(4),
            Named::CompleteBipartite(2, 3),
            Named::Petersen,
        ] {
            assert_eq!(name.to_string().parse::<Named>().unwrap(), name);
        }
    }
}
