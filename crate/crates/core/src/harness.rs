//! Seeded random checks of the extremal K_p edge bound.

use rand::seq::index::sample;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::checks::mader_bound;
use crate::error::Result;
use crate::exec::Exec;
use crate::graph::SmallGraph;
use crate::graph6::serialize_graph6;
use crate::minors::{has_clique_minor, verify_certificate};

pub const DEFAULT_SEED: u64 = 20_251_016;

/// Outcome of the edge-bound property on one graph.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum MaderOutcome {
    /// Fewer edges than the bound; nothing to check.
    Vacuous,
    Certified,
    Violated,
}

/// `e(G) ≥ mader_bound(p, n)` must give a verified K_p model.
pub fn mader_check(g: &SmallGraph, p: usize) -> Result<MaderOutcome> {
    if g.order() < p {
        return Ok(MaderOutcome::Vacuous);
    }
    if (g.size() as i64) < mader_bound(p, g.order())? {
        return Ok(MaderOutcome::Vacuous);
    }
    Ok(match has_clique_minor(g, p) {
        Some(cert) if verify_certificate(g, &cert) => MaderOutcome::Certified,
        _ => MaderOutcome::Violated,
    })
}

/// Uniform over labeled graphs on `n` vertices with exactly `m` edges.
pub fn random_graph(rng: &mut impl Rng, n: usize, m: usize) -> SmallGraph {
    let pairs: Vec<(usize, usize)> = (0..n).flat_map(|j| (0..j).map(move |i| (i, j))).collect();
    let chosen: Vec<_> = sample(rng, pairs.len(), m)
        .into_iter()
        .map(|i| pairs[i])
        .collect();
    SmallGraph::from_edges(n, &chosen).expect("pairs are in range")
}

#[derive(Clone, Debug, Serialize)]
pub struct MaderSweep {
    pub p: usize,
    pub n: usize,
    pub seed: u64,
    pub samples: usize,
    pub certified: usize,
    pub violations: Vec<String>,
}

/// `samples` random graphs on `n` vertices whose edge count is uniform
/// between the bound and C(n, 2). Generation is sequential from `seed`;
/// only checking is parallel, so results do not depend on `exec`.
pub fn mader_sweep(p: usize, n: usize, samples: usize, seed: u64, exec: Exec) -> Result<MaderSweep> {
    let top = n * n.saturating_sub(1) / 2;
    let bound = if n < p { i64::MAX } else { mader_bound(p, n)? };
    let mut rng = ChaCha8Rng::seed_from_u64(seed ^ ((p as u64) << 32 | n as u64));
    let graphs: Vec<SmallGraph> = if bound > top as i64 {
        Vec::new()
    } else {
        let lo = bound.max(0) as usize;
        (0..samples)
            .map(|_| {
                let m = rng.gen_range(lo..=top);
                random_graph(&mut rng, n, m)
            })
            .collect()
    };
    let outcomes = exec.map(&graphs, |g| mader_check(g, p));
    let mut sweep = MaderSweep {
        p,
        n,
        seed,
        samples: graphs.len(),
        certified: 0,
        violations: Vec::new(),
    };
    for (g, outcome) in graphs.iter().zip(outcomes) {
        match outcome? {
            MaderOutcome::Certified => sweep.certified += 1,
            MaderOutcome::Violated => sweep.violations.push(serialize_graph6(g)),
            MaderOutcome::Vacuous => unreachable!("sampled at or above the bound"),
        }
    }
    Ok(sweep)
}
