use std::fs::{self, File, OpenOptions};
use std::io::{self, BufWriter, Write};
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use k7lab::enumeration::{
    run_campaign, Campaign, CampaignOptions, Checkpoint, EnumerationTask, Enumerator, Filter, Shard, Witness,
};
use k7lab::graph6::parse_corpus;
use k7lab::harness::mader_sweep;
use k7lab::minors::{has_clique_minor, has_minor, verify_certificate, MinorTarget};
use k7lab::{serialize_graph6, Error, Exec};

use crate::{CampaignName, EnumArgs, MaderArgs, MinorArgs, VerifyArgs};

pub const UNEXPECTED: u8 = 1;
pub const USAGE: u8 = 2;
pub const IO: u8 = 3;

pub struct Failure {
    pub code: u8,
    pub message: String,
}

impl Failure {
    fn usage(message: impl Into<String>) -> Self {
        Failure {
            code: USAGE,
            message: message.into(),
        }
    }

    fn io(path: &Path, e: io::Error) -> Self {
        Failure {
            code: IO,
            message: format!("{}: {e}", path.display()),
        }
    }
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let code = match e {
            Error::Io(_) => IO,
            Error::Invariant(_) => UNEXPECTED,
            _ => USAGE,
        };
        Failure {
            code,
            message: e.to_string(),
        }
    }
}

type Outcome = Result<ExitCode, Failure>;

/// Writes to `path`, or stdout when absent.
fn sink(path: Option<&Path>) -> Result<Box<dyn Write>, Failure> {
    Ok(match path {
        Some(p) => Box::new(BufWriter::new(File::create(p).map_err(|e| Failure::io(p, e))?)),
        None => Box::new(BufWriter::new(io::stdout())),
    })
}

fn write_all(out: &mut dyn Write, text: &str, path: Option<&Path>) -> Result<(), Failure> {
    let label = path.map_or_else(|| PathBuf::from("<stdout>"), Path::to_path_buf);
    out.write_all(text.as_bytes())
        .and_then(|_| out.flush())
        .map_err(|e| Failure::io(&label, e))
}

fn parse_shard(s: Option<&str>) -> Result<Shard, Failure> {
    Ok(match s {
        Some(s) => s.parse()?,
        None => Shard::WHOLE,
    })
}

pub fn verify(args: VerifyArgs, threads: usize) -> Outcome {
    let campaign = match args.campaign {
        CampaignName::H8 => Campaign::H8,
        CampaignName::Deg9 => Campaign::Deg9,
        CampaignName::AppendixFive => Campaign::AppendixFive,
    };
    let opts = CampaignOptions {
        exec: Exec::for_threads(threads),
        shard: parse_shard(args.shard.as_deref())?,
        expect: args.expect,
        timing: args.timing,
    };
    let mut report = run_campaign(campaign, &opts)?;
    match &args.certificates {
        Some(dir) => {
            fs::create_dir_all(dir).map_err(|e| Failure::io(dir, e))?;
            for (i, verdict) in report.verdicts.iter_mut().enumerate() {
                let Some(Witness::Minor { certificate }) = verdict
                    .witness
                    .iter()
                    .find(|w| matches!(w, Witness::Minor { .. }))
                else {
                    continue;
                };
                let path = dir.join(format!("{:04}-{}.json", i, verdict.key));
                fs::write(&path, certificate.to_json()).map_err(|e| Failure::io(&path, e))?;
                verdict.certificate_file = Some(path.display().to_string());
            }
        }
        None => report.verdicts.clear(),
    }
    let mut out = sink(args.report.as_deref())?;
    write_all(&mut out, &report.to_json(), args.report.as_deref())?;
    if report.expected_outcome {
        Ok(ExitCode::SUCCESS)
    } else {
        eprintln!("k7lab: {} did not reach the expected outcome:", campaign.name());
        for line in report.diff() {
            eprintln!("  {line}");
        }
        Ok(ExitCode::from(UNEXPECTED))
    }
}

pub fn minor(args: MinorArgs, threads: usize) -> Outcome {
    let target: MinorTarget = args.target.parse()?;
    let pattern = target.graph()?;
    let text = fs::read_to_string(&args.input).map_err(|e| Failure::io(&args.input, e))?;
    let mut graphs = Vec::new();
    for entry in parse_corpus(&text) {
        match entry {
            Ok((_, g)) => graphs.push(g),
            Err(e) if args.strict => return Err(Failure::usage(format!("{}: {e}", args.input.display()))),
            Err(e) => eprintln!("k7lab: {}: {e} (skipped)", args.input.display()),
        }
    }
    let verdicts = Exec::for_threads(threads).map(&graphs, |g| match target {
        MinorTarget::Clique(p) => has_clique_minor(g, p),
        MinorTarget::Graph(_) => has_minor(g, &pattern),
    });
    if let Some(dir) = &args.certificates {
        fs::create_dir_all(dir).map_err(|e| Failure::io(dir, e))?;
    }
    let mut lines = String::new();
    for (i, (g, cert)) in graphs.iter().zip(&verdicts).enumerate() {
        let g6 = serialize_graph6(g);
        let (verdict, file) = match (cert, &args.certificates) {
            (Some(cert), Some(dir)) => {
                if !verify_certificate(g, cert) {
                    return Err(Failure {
                        code: UNEXPECTED,
                        message: format!("certificate for {g6} fails"),
                    });
                }
                let path = dir.join(format!("{i:06}.json"));
                fs::write(&path, cert.to_json()).map_err(|e| Failure::io(&path, e))?;
                ("minor", path.display().to_string())
            }
            (Some(_), None) => ("minor", "none".to_string()),
            (None, _) => ("no-minor", "none".to_string()),
        };
        lines.push_str(&format!("{g6} {verdict} {file}\n"));
    }
    let mut out = sink(args.output.as_deref())?;
    write_all(&mut out, &lines, args.output.as_deref())?;
    Ok(ExitCode::SUCCESS)
}

pub fn enumerate(args: EnumArgs, threads: usize) -> Outcome {
    let mut task = EnumerationTask::order(args.n);
    task.min_degree = args.min_degree;
    task.max_degree = args.max_degree;
    for f in &args.filters {
        task.filters.push(f.parse::<Filter>()?);
    }
    task.shard = parse_shard(args.shard.as_deref())?;
    let plan = Enumerator::new(&task)?;
    let exec = Exec::for_threads(threads);
    let Some(cp_path) = &args.checkpoint else {
        let graphs = k7lab::enumeration::enumerate_all(&task, exec)?;
        let mut out = sink(args.output.as_deref())?;
        write_all(
            &mut out,
            &k7lab::graph6::write_corpus(&graphs),
            args.output.as_deref(),
        )?;
        return Ok(ExitCode::SUCCESS);
    };
    let Some(output) = &args.output else {
        return Err(Failure::usage("--checkpoint needs --output"));
    };
    let (start, emitted) = resume(&plan, cp_path, output)?;
    let units = plan.shard_units();
    let mut file = OpenOptions::new()
        .append(true)
        .create(true)
        .open(output)
        .map_err(|e| Failure::io(output, e))?;
    let mut emitted = emitted;
    // one batch of units per round keeps every worker busy between checkpoints
    let batch = threads.max(1);
    let mut pos = start;
    while pos < units.len() {
        let end = (pos + batch).min(units.len());
        let chunk: Vec<usize> = units[pos..end].to_vec();
        let results = exec.map(&chunk, |&u| plan.run_unit(u));
        let mut text = String::new();
        for (_, g) in results.iter().flatten() {
            text.push_str(&serialize_graph6(g));
            text.push('\n');
            emitted += 1;
        }
        file.write_all(text.as_bytes())
            .and_then(|_| file.sync_data())
            .map_err(|e| Failure::io(output, e))?;
        pos = end;
        save_checkpoint(cp_path, &plan.checkpoint(pos, emitted))?;
    }
    Ok(ExitCode::SUCCESS)
}

/// Position and emitted count to continue from; truncates `output` to the
/// checkpointed line count so a crash between writes cannot duplicate.
fn resume(plan: &Enumerator, cp_path: &Path, output: &Path) -> Result<(usize, u64), Failure> {
    if !cp_path.exists() {
        File::create(output).map_err(|e| Failure::io(output, e))?;
        return Ok((0, 0));
    }
    let text = fs::read_to_string(cp_path).map_err(|e| Failure::io(cp_path, e))?;
    let cp: Checkpoint = text.parse()?;
    let pos = plan.resume_position(&cp)?;
    let corpus = fs::read_to_string(output).map_err(|e| Failure::io(output, e))?;
    let keep: Vec<&str> = corpus.lines().take(cp.emitted as usize).collect();
    if keep.len() as u64 != cp.emitted {
        return Err(Failure::usage(format!(
            "{} holds {} graphs, checkpoint expects {}",
            output.display(),
            keep.len(),
            cp.emitted
        )));
    }
    let mut body = keep.join("\n");
    if !body.is_empty() {
        body.push('\n');
    }
    fs::write(output, body).map_err(|e| Failure::io(output, e))?;
    Ok((pos, cp.emitted))
}

fn save_checkpoint(path: &Path, cp: &Checkpoint) -> Result<(), Failure> {
    let tmp = path.with_extension("tmp");
    fs::write(&tmp, cp.to_string()).map_err(|e| Failure::io(&tmp, e))?;
    fs::rename(&tmp, path).map_err(|e| Failure::io(path, e))
}

pub fn check_mader(args: MaderArgs, threads: usize) -> Outcome {
    let orders = if args.orders.is_empty() {
        vec![4, 5, 6, 7]
    } else {
        args.orders
    };
    let sizes = if args.sizes.is_empty() {
        vec![7, 8, 9]
    } else {
        args.sizes
    };
    let exec = Exec::for_threads(threads);
    let mut sweeps = Vec::new();
    for &p in &orders {
        for &n in &sizes {
            if !(1..=7).contains(&p) || n > 12 {
                return Err(Failure::usage(format!(
                    "unsupported p={p}, n={n} (p in 1..=7, n <= 12)"
                )));
            }
            sweeps.push(mader_sweep(p, n, args.samples, args.seed, exec)?);
        }
    }
    let violations: usize = sweeps.iter().map(|s| s.violations.len()).sum();
    let json = serde_json::to_string_pretty(&sweeps).expect("sweeps serialize") + "\n";
    write_all(&mut *sink(None)?, &json, None)?;
    Ok(if violations == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(UNEXPECTED)
    })
}
