//! Canonical deletion generation.
//!
//! Graphs grow one vertex at a time. A child `H = P + v` is kept only when
//! `v` has minimum degree in `H` and deleting the canonically chosen
//! minimum-degree vertex `m(H)` gives a graph isomorphic to `P`; children
//! of one node are deduplicated by canonical key. Every class is then
//! reached from exactly one parent node, so each level holds one graph per
//! isomorphism class. All constraints are hereditary on induced subgraphs
//! (minimum degree in its "can still be repaired" form), so pruning a node
//! never loses a descendant.

use std::collections::HashSet;

use crate::canon::{canonical_form, canonical_graph, canonical_key, CanonicalKey};
use crate::cliques::find_clique_within;
use crate::enumeration::{Checkpoint, EnumerationTask, Filter};
use crate::error::{Error, Result};
use crate::exec::Exec;
use crate::graph::{SmallGraph, VertexSet};

#[derive(Clone, Copy, Debug)]
struct Constraints {
    n: usize,
    min_deg: usize,
    max_deg: usize,
    omega_max: Option<usize>,
    alpha_max: Option<usize>,
}

impl Constraints {
    fn of(task: &EnumerationTask) -> Self {
        let n = task.n;
        let mut c = Constraints {
            n,
            min_deg: task.min_degree.unwrap_or(0),
            max_deg: task.max_degree.unwrap_or(n.saturating_sub(1)),
            omega_max: None,
            alpha_max: None,
        };
        for f in &task.filters {
            let (slot, k) = match *f {
                Filter::K4Free => (&mut c.omega_max, 3),
                Filter::AlphaLe(k) => (&mut c.alpha_max, k),
                Filter::TriangleFreeComplement => (&mut c.alpha_max, 2),
            };
            *slot = Some(slot.map_or(k, |old| old.min(k)));
        }
        c
    }

    /// The same constraints read on complements.
    fn complemented(self) -> Self {
        let top = self.n.saturating_sub(1);
        Constraints {
            n: self.n,
            min_deg: top - self.max_deg,
            max_deg: top - self.min_deg,
            omega_max: self.alpha_max,
            alpha_max: self.omega_max,
        }
    }

    /// Checks `h = parent + new vertex` against every hereditary bound.
    fn admits(&self, parent: &SmallGraph, nbrs: VertexSet, h: &SmallGraph) -> bool {
        let k = h.order();
        let slack = self.n - k;
        if h.vertices().iter().any(|v| h.degree(v) + slack < self.min_deg) {
            return false;
        }
        if let Some(w) = self.omega_max {
            if find_clique_within(parent, nbrs, w).is_some() {
                return false;
            }
        }
        if let Some(a) = self.alpha_max {
            let rest = parent.vertices().difference(nbrs);
            if find_clique_within(&parent.complement(), rest, a).is_some() {
                return false;
            }
        }
        true
    }
}

/// A generation plan: the constraints, the orientation (direct or on
/// complements), and the work units at the split level.
#[derive(Clone, Debug)]
pub struct Enumerator {
    task: EnumerationTask,
    cons: Constraints,
    complement: bool,
    units: Vec<(SmallGraph, CanonicalKey)>,
}

impl Enumerator {
    pub fn new(task: &EnumerationTask) -> Result<Self> {
        task.validate()?;
        let direct = Constraints::of(task);
        let complement = task.n > 0 && task.min_degree.is_some_and(|d| d + 4 >= task.n);
        let cons = if complement { direct.complemented() } else { direct };
        let mut e = Enumerator {
            task: task.clone(),
            cons,
            complement,
            units: Vec::new(),
        };
        let split = split_level(task.n);
        let root = SmallGraph::empty(0)?;
        let mut units = Vec::new();
        e.walk(&root, canonical_key(&root), split, &mut |g, key| {
            units.push((*g, key))
        });
        e.units = units;
        Ok(e)
    }

    pub fn task(&self) -> &EnumerationTask {
        &self.task
    }

    /// True when generation runs on complements.
    pub fn on_complement(&self) -> bool {
        self.complement
    }

    /// Units of the whole plan, across all shards.
    pub fn unit_count(&self) -> usize {
        self.units.len()
    }

    /// Plan-wide indices of the units this task's shard owns, in order.
    pub fn shard_units(&self) -> Vec<usize> {
        let s = self.task.shard;
        (0..self.units.len()).filter(|i| i % s.count == s.index).collect()
    }

    /// The unit root graph (in generation orientation).
    pub fn unit_root(&self, unit: usize) -> &SmallGraph {
        &self.units[unit].0
    }

    /// Every graph under `unit`, canonically labeled, in output orientation.
    pub fn run_unit(&self, unit: usize) -> Vec<(CanonicalKey, SmallGraph)> {
        let (root, key) = &self.units[unit];
        let mut out = Vec::new();
        self.walk(root, *key, self.cons.n, &mut |g, key| {
            if self.complement {
                let c = canonical_graph(&g.complement());
                out.push((canonical_key(&c), c));
            } else {
                out.push((key, canonical_graph(g)));
            }
        });
        out
    }

    /// Runs every unit of the shard under `exec` and applies `f` to each
    /// graph inside the worker. Results come back in unit order.
    pub fn map_units<R, F>(&self, exec: Exec, f: F) -> Vec<Vec<(CanonicalKey, R)>>
    where
        R: Send,
        F: Fn(&SmallGraph) -> R + Sync + Send,
    {
        exec.map(&self.shard_units(), |&u| {
            self.run_unit(u).into_iter().map(|(k, g)| (k, f(&g))).collect()
        })
    }

    /// Checkpoint after `done` of this shard's units have been emitted.
    pub fn checkpoint(&self, done: usize, emitted: u64) -> Checkpoint {
        let mine = self.shard_units();
        Checkpoint {
            task: self.task.to_string(),
            units: mine.len(),
            next: done,
            emitted,
            prefix: mine
                .get(done)
                .map(|&u| crate::graph6::serialize_graph6(self.unit_root(u))),
        }
    }

    /// Validates `cp` against this plan and returns the position to resume at.
    pub fn resume_position(&self, cp: &Checkpoint) -> Result<usize> {
        let fresh = self.checkpoint(cp.next.min(self.shard_units().len()), cp.emitted);
        if cp.task != fresh.task {
            return Err(Error::Checkpoint(format!(
                "checkpoint is for task [{}], not [{}]",
                cp.task, fresh.task
            )));
        }
        if cp.units != fresh.units || cp.next > cp.units || cp.prefix != fresh.prefix {
            return Err(Error::Checkpoint(
                "checkpoint does not match the unit plan".into(),
            ));
        }
        Ok(cp.next)
    }

    fn walk(
        &self,
        g: &SmallGraph,
        key: CanonicalKey,
        depth: usize,
        emit: &mut dyn FnMut(&SmallGraph, CanonicalKey),
    ) {
        if g.order() == depth {
            emit(g, key);
            return;
        }
        for (child, child_key) in self.children(g, key) {
            self.walk(&child, child_key, depth, emit);
        }
    }

    fn children(&self, p: &SmallGraph, pkey: CanonicalKey) -> Vec<(SmallGraph, CanonicalKey)> {
        let k = p.order();
        let c = &self.cons;
        // vertices already at the degree ceiling cannot take the new one
        let open = p
            .vertices()
            .iter()
            .filter(|&u| p.degree(u) < c.max_deg)
            .collect::<VertexSet>();
        let mut seen = HashSet::new();
        let mut out = Vec::new();
        for mask in 0u32..1 << k {
            let nbrs = VertexSet(mask);
            if !nbrs.is_subset(open) || nbrs.len() > c.max_deg {
                continue;
            }
            let h = p.add_vertex(nbrs).expect("order stays within limits");
            if h.degree(k) != h.min_degree() || !c.admits(p, nbrs, &h) {
                continue;
            }
            let form = canonical_form(&h);
            let delta = h.min_degree();
            let m = h
                .vertices()
                .iter()
                .filter(|&x| h.degree(x) == delta)
                .max_by_key(|&x| form.perm[x])
                .expect("nonempty");
            if m != k && canonical_key(&h.remove_vertex(m).expect("vertex exists")) != pkey {
                continue;
            }
            if seen.insert(form.key) {
                out.push((h, form.key));
            }
        }
        out
    }
}

fn split_level(n: usize) -> usize {
    n.saturating_sub(3).min(6)
}

/// Streams the shard's graphs unit by unit, checking key uniqueness inline.
pub struct GraphStream {
    plan: Enumerator,
    units: Vec<usize>,
    pos: usize,
    buffer: std::vec::IntoIter<(CanonicalKey, SmallGraph)>,
    seen: HashSet<CanonicalKey>,
}

impl GraphStream {
    /// Shard-local index of the next unit to be expanded.
    pub fn position(&self) -> usize {
        self.pos
    }

    pub fn plan(&self) -> &Enumerator {
        &self.plan
    }
}

impl Iterator for GraphStream {
    type Item = SmallGraph;

    fn next(&mut self) -> Option<SmallGraph> {
        loop {
            if let Some((key, g)) = self.buffer.next() {
                assert!(self.seen.insert(key), "generator emitted {key} twice");
                return Some(g);
            }
            let &unit = self.units.get(self.pos)?;
            self.pos += 1;
            self.buffer = self.plan.run_unit(unit).into_iter();
        }
    }
}

/// One representative per isomorphism class meeting `task`, restricted to
/// the task's shard.
pub fn enumerate_graphs(task: &EnumerationTask) -> Result<GraphStream> {
    let plan = Enumerator::new(task)?;
    let units = plan.shard_units();
    Ok(GraphStream {
        plan,
        units,
        pos: 0,
        buffer: Vec::new().into_iter(),
        seen: HashSet::new(),
    })
}

/// Collects the shard's graphs, expanding units under `exec`.
pub fn enumerate_all(task: &EnumerationTask, exec: Exec) -> Result<Vec<SmallGraph>> {
    let plan = Enumerator::new(task)?;
    let mut seen = HashSet::new();
    let mut out = Vec::new();
    for unit in plan.map_units(exec, |g| *g) {
        for (key, g) in unit {
            if !seen.insert(key) {
                return Err(Error::Invariant(format!("generator emitted {key} twice")));
            }
            out.push(g);
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::enumeration::Shard;
    use crate::named;

    fn count(task: EnumerationTask) -> usize {
        enumerate_graphs(&task).unwrap().count()
    }

    #[test]
    fn small_orders_match_known_counts() {
        let counts: Vec<usize> = (0..=7).map(|n| count(EnumerationTask::order(n))).collect();
        assert_eq!(counts, [1, 1, 2, 4, 11, 34, 156, 1044]);
    }

    #[test]
    fn empty_order_yields_the_null_graph() {
        let all: Vec<_> = enumerate_graphs(&EnumerationTask::order(0).filter(Filter::K4Free))
            .unwrap()
            .collect();
        assert_eq!(all.len(), 1);
        assert_eq!(all[0].order(), 0);
    }

    #[test]
    fn constraints_hold_on_output() {
        let task = EnumerationTask::order(7)
            .min_degree(2)
            .max_degree(4)
            .filter(Filter::K4Free);
        let graphs: Vec<_> = enumerate_graphs(&task).unwrap().collect();
        assert!(!graphs.is_empty());
        for g in &graphs {
            assert!(g.min_degree() >= 2 && g.max_degree() <= 4);
            assert!(crate::cliques::clique_number(g) <= 3);
        }
        // same answer by filtering the unconstrained list
        let brute = enumerate_graphs(&EnumerationTask::order(7))
            .unwrap()
            .filter(|g| g.min_degree() >= 2 && g.max_degree() <= 4)
            .filter(|g| crate::cliques::clique_number(g) <= 3)
            .count();
        assert_eq!(graphs.len(), brute);
    }

    #[test]
    fn complement_mode_agrees_with_direct_filtering() {
        // min degree 3 on 7 vertices triggers generation on complements
        let task = EnumerationTask::order(7).min_degree(3).filter(Filter::AlphaLe(3));
        assert!(Enumerator::new(&task).unwrap().on_complement());
        let fast: HashSet<_> = enumerate_graphs(&task)
            .unwrap()
            .map(|g| canonical_key(&g))
            .collect();
        let slow: HashSet<_> = enumerate_graphs(&EnumerationTask::order(7))
            .unwrap()
            .filter(|g| g.min_degree() >= 3 && crate::cliques::independence_number(g) <= 3)
            .map(|g| canonical_key(&g))
            .collect();
        assert_eq!(fast, slow);
    }

    #[test]
    fn shards_partition_the_output() {
        let whole: HashSet<_> = enumerate_graphs(&EnumerationTask::order(6))
            .unwrap()
            .map(|g| canonical_key(&g))
            .collect();
        for m in 1..=5 {
            let mut union = HashSet::new();
            for i in 0..m {
                let task = EnumerationTask::order(6).shard(Shard::new(i, m).unwrap());
                for g in enumerate_graphs(&task).unwrap() {
                    assert!(union.insert(canonical_key(&g)));
                }
            }
            assert_eq!(union, whole);
        }
    }

    #[test]
    fn parallel_matches_stream_order() {
        let task = EnumerationTask::order(7).max_degree(4);
        let streamed: Vec<_> = enumerate_graphs(&task).unwrap().collect();
        let seq = enumerate_all(&task, Exec::Sequential).unwrap();
        let par = crate::exec::with_threads(3, || enumerate_all(&task, Exec::Parallel).unwrap());
        assert_eq!(streamed, seq);
        assert_eq!(seq, par);
    }

    #[test]
    fn alpha_two_at_eight_contains_h8_and_k8() {
        let task = EnumerationTask::order(8).filter(Filter::TriangleFreeComplement);
        let keys: HashSet<_> = enumerate_graphs(&task)
            .unwrap()
            .map(|g| canonical_key(&g))
            .collect();
        assert!(keys.contains(&canonical_key(&named::h8())));
        assert!(keys.contains(&canonical_key(&named::complete(8).unwrap())));
    }

    #[test]
    fn checkpoints_validate_against_the_plan() {
        let task = EnumerationTask::order(7);
        let plan = Enumerator::new(&task).unwrap();
        let cp = plan.checkpoint(3, 17);
        assert_eq!(plan.resume_position(&cp).unwrap(), 3);
        let other = Enumerator::new(&EnumerationTask::order(7).max_degree(5)).unwrap();
        assert!(other.resume_position(&cp).is_err());
        let mut bad = cp.clone();
        bad.prefix = Some("@".into());
        assert!(plan.resume_position(&bad).is_err());
    }
}
