//! Acceptance suite: one PASS/FAIL line per criterion, nonzero exit on any
//! failure. Tolerances are exact counts; each criterion also has a pinned
//! wall-clock budget and runs single-threaded unless stated otherwise.

mod common;

use std::collections::HashSet;
use std::process::ExitCode;
use std::time::{Duration, Instant};

use common::*;
use k7lab::checks::{check_census_inequality, CensusVerdict, DegreeCensus};
use k7lab::enumeration::{
    clique_minor_survey, enumerate_graphs, find_minimal_k6_free, verify_deg9_lemma, verify_h8_lemma,
    CampaignOptions, CampaignReport, EnumerationTask, Shard,
};
use k7lab::exec::with_threads;
use k7lab::harness::{mader_check, mader_sweep, MaderOutcome, DEFAULT_SEED};
use k7lab::minors::{
    has_clique_minor, has_minor, is_planar, rooted_k4_minor, verify_certificate, vertex_connectivity,
};
use k7lab::{canonical_key, named, parse_graph6, serialize_graph6, Exec, SmallGraph, VertexSet};

type Outcome = Result<String, String>;

/// Id, title, budget in seconds, check.
type Criterion = (u32, &'static str, u64, fn() -> Outcome);

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn graphs(task: EnumerationTask) -> Vec<SmallGraph> {
    enumerate_graphs(&task).expect("valid task").collect()
}

fn replay_all(report: &CampaignReport) -> Result<(), String> {
    for v in &report.verdicts {
        ensure(v.replay().map_err(|e| e.to_string())?, || {
            format!("verdict for {} does not replay", v.g6)
        })?;
    }
    Ok(())
}

fn distinct_survivors(report: &CampaignReport) -> Result<(), String> {
    let keys: HashSet<_> = report.survivors.iter().map(|s| &s.key).collect();
    ensure(keys.len() == report.survivors.len(), || {
        "survivors share a canonical key".into()
    })
}

fn appendix_five() -> Outcome {
    let report = find_minimal_k6_free(&CampaignOptions::default()).map_err(|e| e.to_string())?;
    ensure(report.expected_outcome, || format!("{:?}", report.diff()))?;
    replay_all(&report)?;
    distinct_survivors(&report)?;
    let oracle = extension_classes(9, &|g| g.max_degree() <= 3).len() as u64;
    ensure(report.examined == oracle, || {
        format!("examined {} classes, oracle has {oracle}", report.examined)
    })?;
    let k6 = named::complete(6).unwrap();
    let mut with_k4 = 0;
    let mut named_hits = Vec::new();
    for s in &report.survivors {
        let g = parse_graph6(s.g6.as_bytes()).map_err(|e| e.to_string())?;
        ensure(g.order() == 9 && g.min_degree() >= 5, || {
            format!("{} breaks the degree hypothesis", s.g6)
        })?;
        ensure(
            g.edges()
                .iter()
                .all(|&(u, v)| g.degree(u) == 5 || g.degree(v) == 5),
            || format!("{} is not edge-minimal", s.g6),
        )?;
        ensure(has_minor(&g, &k6).is_none(), || {
            format!("{} has a K6 minor by quotient search", s.g6)
        })?;
        ensure(!partition_clique_minor(&g, 6), || {
            format!("{} has a K6 minor by partition search", s.g6)
        })?;
        if brute_omega(&g) >= 4 {
            with_k4 += 1;
        }
        if let Some(name) = &s.name {
            named_hits.push(format!("{name}={}", s.key));
        }
    }
    // minimal graphs with a K6 minor: the search must agree with the quotient search
    for v in report.verdicts.iter().filter(|v| v.outcome == "k6") {
        let g = v.graph().map_err(|e| e.to_string())?;
        ensure(has_minor(&g, &k6).is_some(), || {
            format!("{} K6 verdict not confirmed", v.g6)
        })?;
    }
    ensure(
        report.survivors.len() == 5 && named_hits.len() == 2 && with_k4 == 4,
        || {
            format!(
                "{} survivors, named {named_hits:?}, {with_k4} with K4",
                report.survivors.len()
            )
        },
    )?;
    Ok(format!(
        "5 survivors of {} classes, {}, 4 of 5 contain K4",
        report.examined,
        named_hits.join(" ")
    ))
}

fn deg9() -> Outcome {
    let report = verify_deg9_lemma(&CampaignOptions::default()).map_err(|e| e.to_string())?;
    ensure(report.expected_outcome, || format!("{:?}", report.diff()))?;
    replay_all(&report)?;
    let oracle = extension_classes(9, &|g| g.max_degree() <= 3 && brute_alpha(g) <= 3).len() as u64;
    ensure(report.examined == oracle, || {
        format!("examined {} classes, oracle has {oracle}", report.examined)
    })?;
    let certified = report.verdicts.iter().filter(|v| v.outcome == "k6").count();
    ensure(certified as u64 + 1 == report.examined, || {
        format!("{certified} certificates")
    })?;
    let special = &report.survivors[0];
    let g = parse_graph6(special.g6.as_bytes()).map_err(|e| e.to_string())?;
    ensure(has_minor(&g, &named::complete(6).unwrap()).is_none(), || {
        "exception has a K6 minor".into()
    })?;
    Ok(format!(
        "{certified} verified K6 certificates, 1 exception ({})",
        special.key
    ))
}

fn h8() -> Outcome {
    let report = verify_h8_lemma(&CampaignOptions::default()).map_err(|e| e.to_string())?;
    ensure(report.expected_outcome, || format!("{:?}", report.diff()))?;
    replay_all(&report)?;
    let oracle = extension_classes(8, &|g| brute_alpha(g) <= 2).len() as u64;
    ensure(report.examined == oracle, || {
        format!("examined {} classes, oracle has {oracle}", report.examined)
    })?;
    let regular: Vec<_> = report
        .verdicts
        .iter()
        .filter_map(|v| v.graph().ok())
        .filter(|g| brute_omega(g) < 4 && (0..8).all(|v| g.degree(v) == 4))
        .collect();
    ensure(
        regular.len() == 1 && canonical_key(&regular[0]) == canonical_key(&named::h8()),
        || format!("{} 4-regular K4-free classes", regular.len()),
    )?;
    Ok(format!(
        "{} classes with alpha <= 2, 0 counterexamples, unique 4-regular K4-free class is H8",
        report.examined
    ))
}

fn mader() -> Outcome {
    let mut checked = 0;
    for p in 4..=7 {
        for n in p..=6 {
            for g in graphs(EnumerationTask::order(n)) {
                match mader_check(&g, p).map_err(|e| e.to_string())? {
                    MaderOutcome::Violated => return Err(format!("p={p}: {}", serialize_graph6(&g))),
                    MaderOutcome::Certified => checked += 1,
                    MaderOutcome::Vacuous => {}
                }
            }
        }
        for n in 7..=9 {
            let sweep = mader_sweep(p, n, 1000, DEFAULT_SEED, Exec::Sequential).map_err(|e| e.to_string())?;
            ensure(sweep.violations.is_empty(), || {
                format!("p={p} n={n}: {:?}", sweep.violations)
            })?;
            ensure(sweep.samples == 1000, || {
                format!("p={p} n={n}: only {} samples", sweep.samples)
            })?;
            checked += sweep.certified;
        }
    }
    Ok(format!(
        "{checked} graphs at or above the bound, all with verified K_p models (seed {DEFAULT_SEED})"
    ))
}

fn oracle_equivalence() -> Outcome {
    let mut cases = 0;
    for n in 0..=7 {
        for g in graphs(EnumerationTask::order(n)) {
            for p in 3..=5 {
                let found = has_clique_minor(&g, p);
                ensure(found.is_some() == partition_clique_minor(&g, p), || {
                    format!("disagreement on {} for p={p}", serialize_graph6(&g))
                })?;
                if let Some(cert) = found {
                    ensure(verify_certificate(&g, &cert), || {
                        format!("bad certificate on {}", serialize_graph6(&g))
                    })?;
                }
                cases += 1;
            }
        }
    }
    Ok(format!("{cases} (graph, p) cases, 0 disagreements"))
}

fn rooted_dichotomy() -> Outcome {
    let (mut hosts, mut quads, mut unrooted) = (0, 0, 0);
    for n in 5..=8 {
        for g in graphs(EnumerationTask::order(n).min_degree(4)) {
            if vertex_connectivity(&g) < 4 {
                continue;
            }
            hosts += 1;
            let planar = is_planar(&g);
            for mask in 0u32..1 << n {
                if mask.count_ones() != 4 {
                    continue;
                }
                let r = VertexSet(mask).to_vec();
                quads += 1;
                match rooted_k4_minor(&g, [r[0], r[1], r[2], r[3]]).map_err(|e| e.to_string())? {
                    Some(cert) => ensure(verify_certificate(&g, &cert), || "bad rooted certificate".into())?,
                    None => {
                        unrooted += 1;
                        ensure(planar, || {
                            format!("{} non-planar without rooted K4 at {r:?}", serialize_graph6(&g))
                        })?;
                    }
                }
            }
        }
    }
    let oct = named::octahedron();
    for mask in 0u32..64 {
        if mask.count_ones() == 4 {
            let r = VertexSet(mask).to_vec();
            let cert = rooted_k4_minor(&oct, [r[0], r[1], r[2], r[3]]).map_err(|e| e.to_string())?;
            ensure(cert.is_some_and(|c| verify_certificate(&oct, &c)), || {
                format!("octahedron roots {r:?}")
            })?;
        }
    }
    Ok(format!("{hosts} 4-connected hosts, {quads} root sets, {unrooted} without rooted K4 (all planar); octahedron 15/15"))
}

fn ramsey() -> Outcome {
    let mut count = 0;
    for g in all_labeled(6) {
        let full = g.vertices();
        let has = (0u32..64).any(|m| {
            let s = VertexSet(m);
            s.len() == 3 && s.is_subset(full) && (g.is_clique(s) || g.is_independent(s))
        });
        ensure(has, || {
            format!("{} has neither K3 nor independent 3-set", serialize_graph6(&g))
        })?;
        count += 1;
    }
    ensure(count == 32768, || format!("{count} graphs"))?;
    Ok("32768 labeled graphs on 6 vertices, each with K3 or an independent 3-set".into())
}

fn census() -> Outcome {
    // n8 = 1: the chain holds only when n9 >= 28; tightness at 2 n8 + n9 = 30
    let n = 31;
    let e = 5 * n - 15;
    let census = |n8: usize, n9: usize| DegreeCensus {
        n,
        e,
        n8,
        n9,
        delta: 8,
    };
    for n9 in 0..=30 {
        let holds = matches!(
            check_census_inequality(&census(1, n9)),
            CensusVerdict::Holds { .. }
        );
        ensure(holds == (n9 >= 28), || format!("n8=1 n9={n9}: holds={holds}"))?;
    }
    ensure(
        check_census_inequality(&census(1, 28)) == CensusVerdict::Holds { slack: 0 },
        || "n8=1 n9=28 not tight".into(),
    )?;
    for n8 in 0..=15 {
        let n9 = 30 - 2 * n8;
        let v = check_census_inequality(&DegreeCensus {
            n: 40,
            e: 185,
            n8,
            n9,
            delta: 8,
        });
        ensure(v == CensusVerdict::Holds { slack: 0 }, || {
            format!("tight case n8={n8}: {v:?}")
        })?;
    }
    Ok("n8=1 forces n9 >= 28; every 2n8+n9 = 30 split is tight".into())
}

fn infrastructure() -> Outcome {
    let mut round_trips = 0;
    for n in 0..=6 {
        let mut brute = HashSet::new();
        let mut canon = HashSet::new();
        for g in all_labeled(n) {
            let text = serialize_graph6(&g);
            ensure(parse_graph6(text.as_bytes()).ok() == Some(g), || {
                format!("graph6 round trip failed on {text}")
            })?;
            round_trips += 1;
            brute.insert(brute_key(&g));
            canon.insert(canonical_key(&g));
        }
        let generated = graphs(EnumerationTask::order(n)).len();
        ensure(canon.len() == brute.len() && generated == brute.len(), || {
            format!(
                "n={n}: oracle {} canonical {} generated {generated}",
                brute.len(),
                canon.len()
            )
        })?;
        if n == 6 {
            ensure(brute.len() == 156, || format!("{} classes at n=6", brute.len()))?;
        }
    }
    let task = EnumerationTask::order(7);
    let reference = clique_minor_survey(&task, 5, &CampaignOptions::default()).map_err(|e| e.to_string())?;
    for threads in [1, 2, 4, 8] {
        let report = with_threads(threads, || {
            let opts = CampaignOptions {
                exec: Exec::for_threads(threads),
                ..Default::default()
            };
            clique_minor_survey(&task, 5, &opts)
        })
        .map_err(|e| e.to_string())?;
        ensure(report.to_json() == reference.to_json(), || {
            format!("report differs with {threads} workers")
        })?;
    }
    let whole: HashSet<_> = reference.survivors.iter().map(|s| s.key.clone()).collect();
    for m in 1..=8 {
        let mut union = HashSet::new();
        for i in 0..m {
            let opts = CampaignOptions {
                shard: Shard::new(i, m).unwrap(),
                ..Default::default()
            };
            let part =
                clique_minor_survey(&task.clone().shard(opts.shard), 5, &opts).map_err(|e| e.to_string())?;
            union.extend(part.survivors.into_iter().map(|s| s.key));
        }
        ensure(union == whole, || format!("{m} shards lose or add survivors"))?;
    }
    Ok(format!(
        "{round_trips} graph6 round trips; class counts 1,1,2,4,11,34,156 match; n=7 reports identical for 1/2/4/8 workers and 1..8 shards"
    ))
}

fn main() -> ExitCode {
    let criteria: [Criterion; 9] = [
        (1, "appendix five", 600, appendix_five),
        (2, "degree-9 K4-free graphs", 600, deg9),
        (3, "alpha-2 graphs on 8 vertices", 300, h8),
        (4, "extremal bound", 300, mader),
        (5, "minor oracle equivalence", 600, oracle_equivalence),
        (6, "rooted K4 dichotomy", 600, rooted_dichotomy),
        (7, "Ramsey sanity", 60, ramsey),
        (8, "census arithmetic", 5, census),
        (9, "infrastructure", 600, infrastructure),
    ];
    let only: Option<u32> = std::env::args().skip(1).find_map(|a| a.parse().ok());
    let mut failed = 0;
    for (id, title, budget, run) in criteria {
        if only.is_some_and(|o| o != id) {
            continue;
        }
        let start = Instant::now();
        let outcome = run();
        let elapsed = start.elapsed();
        let outcome = match outcome {
            Ok(msg) if elapsed > Duration::from_secs(budget) => {
                Err(format!("{msg}; over the {budget}s budget"))
            }
            other => other,
        };
        match outcome {
            Ok(msg) => println!("criterion {id} PASS {title}: {msg} [{elapsed:.2?}, budget {budget}s]"),
            Err(msg) => {
                failed += 1;
                println!("criterion {id} FAIL {title}: {msg} [{elapsed:.2?}, budget {budget}s]");
            }
        }
    }
    if failed > 0 {
        ExitCode::FAILURE
    } else {
        ExitCode::SUCCESS
    }
}
