use std::fmt::Write as _;
use std::fs;
use std::path::Path;

use rand::rngs::StdRng;
use rand::SeedableRng;
use rayon::prelude::*;
use serde_json::json;

use mgs_core::census::{census_row, CensusOptions, CensusRow};
use mgs_core::engine::{apply_to_seed, search_report, shortest_mgs_with, ReportFields, SearchOptions};
use mgs_core::export::{quiver_dot, seed_dot, triangulation_dot, triangulation_svg};
use mgs_core::text::{parse_document, Document};
use mgs_core::triangulation::enumerate_triangulations;
use mgs_core::typea::{cycle_count, minimal_mgs};
use mgs_core::{Error, MutationSequence, Quiver, Seed};

use crate::config::{CensusArgs, Command, Format, RunConfig, SearchArgs};

pub const EXIT_FAILED: u8 = 1;
pub const EXIT_REJECTED: u8 = 2;
pub const EXIT_USAGE: u8 = 64;
pub const EXIT_NO_INPUT: u8 = 66;
pub const EXIT_INTERNAL: u8 = 70;

/// A command outcome other than success: what to print on stderr and the exit code.
#[derive(Debug)]
pub struct Failure {
    pub code: u8,
    pub message: String,
}

impl Failure {
    fn new(code: u8, message: impl Into<String>) -> Self {
        Failure {
            code,
            message: message.into(),
        }
    }
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let code = match e {
            Error::Parse { .. } => EXIT_USAGE,
            Error::Structure(_)
            | Error::Precondition(_)
            | Error::VertexOutOfRange { .. }
            | Error::FrozenMutation(_) => EXIT_REJECTED,
            Error::NoMgs => EXIT_FAILED,
            Error::Integrity(_) | Error::Resource(_) => EXIT_INTERNAL,
        };
        Failure::new(code, e.to_string())
    }
}

type Outcome = Result<String, Failure>;

pub fn run(cfg: RunConfig) -> Outcome {
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(cfg.jobs)
        .build()
        .map_err(|e| Failure::new(EXIT_INTERNAL, e.to_string()))?;
    let format = cfg.format;
    let parallel = cfg.jobs > 1;
    pool.install(|| match &cfg.command {
        Command::Generate { file, oracle } => generate(file, *oracle, format),
        Command::Verify {
            file,
            sequence,
            right_to_left,
        } => verify(file, sequence, *right_to_left, format),
        Command::Search(a) => search(a, parallel),
        Command::Census(a) => census(a, format, parallel),
        Command::Dot { file, framed, quiver } => dot(file, *framed, *quiver, format),
    })
}

fn load(path: &Path) -> Result<Document, Failure> {
    let text = fs::read_to_string(path).map_err(|e| Failure::new(EXIT_NO_INPUT, format!("{}: {e}", path.display())))?;
    parse_document(&text).map_err(|e| {
        let f = Failure::from(e);
        Failure::new(f.code, format!("{}: {}", path.display(), f.message))
    })
}

/// The quiver a construction or search runs on. Seeds are accepted only when framed.
fn quiver_of(doc: Document) -> Result<Quiver, Failure> {
    match doc {
        Document::Quiver(q) => Ok(q),
        Document::Polygon(t) => Ok(t.quiver()),
        Document::Seed(s) if s == Seed::framed(s.quiver()) => Ok(s.quiver().clone()),
        Document::Seed(_) => Err(Failure::new(
            EXIT_REJECTED,
            "expected a quiver, a polygon or a framed seed",
        )),
    }
}

fn json_line(v: &serde_json::Value) -> String {
    format!("{v}\n")
}

fn generate(file: &Path, oracle: bool, format: Format) -> Outcome {
    let q = quiver_of(load(file)?)?;
    let seq = minimal_mgs(&q)?;
    let t = cycle_count(&q);
    if oracle {
        let shortest = shortest_mgs_with(&q, SearchOptions::default())?;
        if shortest.len() != seq.len() {
            return Err(Failure::new(
                EXIT_FAILED,
                format!(
                    "constructed length {} but the shortest is {}",
                    seq.len(),
                    shortest.len()
                ),
            ));
        }
        eprintln!("oracle: shortest length {}", shortest.len());
    }
    Ok(match format {
        Format::Json => json_line(&json!({
            "schema": 1,
            "n": q.n(),
            "t": t,
            "length": seq.len(),
            "sequence": seq.steps(),
        })),
        _ => format!("{seq}\nlength: {}\n", seq.len()),
    })
}

fn verify(file: &Path, sequence: &str, right_to_left: bool, format: Format) -> Outcome {
    let seed = match load(file)? {
        Document::Seed(s) => s,
        doc => Seed::framed(&quiver_of(doc)?),
    };
    let parsed: MutationSequence = sequence.parse()?;
    let seq = if right_to_left {
        MutationSequence::from_composition(parsed.into_vec())
    } else {
        parsed
    };
    let (trace, verdict) = match apply_to_seed(&seed, &seq) {
        Ok(app) => {
            let verdict = if let Some(i) = app.first_non_green {
                Err(format!("step {} mutates red vertex {}", i + 1, app.trace[i].vertex))
            } else {
                let green = app.endpoint.green_vertices()?;
                if green.is_empty() {
                    Ok(())
                } else {
                    let g: Vec<String> = green.iter().map(|v| v.to_string()).collect();
                    Err(format!("vertices {} are still green", g.join(",")))
                }
            };
            (app.trace, verdict)
        }
        Err(e @ Error::VertexOutOfRange { .. }) => (Vec::new(), Err(e.to_string())),
        Err(e) => return Err(e.into()),
    };
    let out = match format {
        Format::Json => {
            let steps: Vec<_> = trace
                .iter()
                .map(|s| json!({"vertex": s.vertex, "color": s.color.to_string()}))
                .collect();
            json_line(&json!({
                "schema": 1,
                "valid": verdict.is_ok(),
                "length": seq.len(),
                "trace": steps,
                "reason": verdict.as_ref().err(),
            }))
        }
        _ => {
            let mut out = String::new();
            for (i, s) in trace.iter().enumerate() {
                let _ = writeln!(out, "step {}: mutate {} ({})", i + 1, s.vertex, s.color);
            }
            match &verdict {
                Ok(()) => {
                    let _ = writeln!(out, "VALID: maximal green sequence of length {}", seq.len());
                }
                Err(why) => {
                    let _ = writeln!(out, "INVALID: {why}");
                }
            }
            out
        }
    };
    match verdict {
        Ok(()) => Ok(out),
        Err(_) => {
            print!("{out}");
            Err(Failure::new(EXIT_FAILED, ""))
        }
    }
}

fn search(a: &SearchArgs, parallel: bool) -> Outcome {
    let q = quiver_of(load(&a.file)?)?;
    let mut fields = ReportFields {
        shortest: a.shortest,
        longest: a.longest,
        spectrum: a.spectrum,
        count: a.count,
    };
    if fields
        == (ReportFields {
            shortest: false,
            longest: false,
            spectrum: false,
            count: false,
        })
    {
        fields = ReportFields::all();
    }
    let opts = SearchOptions {
        parallel,
        max_nodes: a.max_nodes,
        ..SearchOptions::default()
    };
    let report = search_report(&q, fields, opts)?;
    let value = serde_json::to_value(&report).map_err(|e| Failure::new(EXIT_INTERNAL, e.to_string()))?;
    Ok(json_line(&value))
}

fn census(a: &CensusArgs, format: Format, parallel: bool) -> Outcome {
    let mut jobs = Vec::new();
    for m in a.min_m..=a.limit_m {
        for (id, t) in enumerate_triangulations(m)?.into_iter().enumerate() {
            jobs.push((id, t));
        }
    }
    if let Some(k) = a.sample {
        let mut rng = StdRng::seed_from_u64(a.seed);
        let mut keep = rand::seq::index::sample(&mut rng, jobs.len(), k.min(jobs.len())).into_vec();
        keep.sort_unstable();
        jobs = keep.into_iter().map(|i| jobs[i].clone()).collect();
    }
    let opts = CensusOptions {
        parallel: false,
        witness_max_m: a.witness_max_m,
    };
    let rows: Vec<CensusRow> = if parallel {
        jobs.par_iter()
            .map(|(id, t)| census_row(*id, t, opts))
            .collect::<Result<_, _>>()?
    } else {
        jobs.iter()
            .map(|(id, t)| census_row(*id, t, opts))
            .collect::<Result<_, _>>()?
    };
    let out = match format {
        Format::Json => json_line(&serde_json::Value::Array(rows.iter().map(row_json).collect())),
        _ => rows_csv(&rows)?,
    };
    let bad = rows.iter().filter(|r| !row_ok(r)).count();
    if bad > 0 {
        print!("{out}");
        return Err(Failure::new(
            EXIT_FAILED,
            format!("{bad} of {} rows failed a check", rows.len()),
        ));
    }
    Ok(out)
}

fn row_ok(r: &CensusRow) -> bool {
    r.minimal_ok && r.tau_ok && r.witness_ok != Some(false) && r.length_min == r.n + r.t
}

fn joined(v: &[usize], sep: &str) -> String {
    v.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(sep)
}

fn rows_csv(rows: &[CensusRow]) -> Result<String, Failure> {
    let internal = |e: csv::Error| Failure::new(EXIT_INTERNAL, e.to_string());
    let mut w = csv::Writer::from_writer(Vec::new());
    w.write_record([
        "m",
        "id",
        "n",
        "t",
        "length_min",
        "length_max",
        "spectrum",
        "count",
        "minimal_sequence",
        "minimal_ok",
        "tau_ok",
        "witness_ok",
    ])
    .map_err(internal)?;
    for r in rows {
        let witness = r.witness_ok.map_or(String::new(), |b| b.to_string());
        w.write_record([
            r.m.to_string(),
            r.id.to_string(),
            r.n.to_string(),
            r.t.to_string(),
            r.length_min.to_string(),
            r.length_max.to_string(),
            joined(&r.spectrum, " "),
            r.count.to_string(),
            joined(&r.minimal_sequence, " "),
            r.minimal_ok.to_string(),
            r.tau_ok.to_string(),
            witness,
        ])
        .map_err(internal)?;
    }
    let bytes = w.into_inner().map_err(|e| Failure::new(EXIT_INTERNAL, e.to_string()))?;
    String::from_utf8(bytes).map_err(|e| Failure::new(EXIT_INTERNAL, e.to_string()))
}

fn row_json(r: &CensusRow) -> serde_json::Value {
    json!({
        "m": r.m,
        "id": r.id,
        "n": r.n,
        "t": r.t,
        "length_min": r.length_min,
        "length_max": r.length_max,
        "spectrum": r.spectrum,
        "count": r.count.to_string(),
        "minimal_sequence": r.minimal_sequence,
        "minimal_ok": r.minimal_ok,
        "tau_ok": r.tau_ok,
        "witness_ok": r.witness_ok,
    })
}

fn dot(file: &Path, framed: bool, as_quiver: bool, format: Format) -> Outcome {
    let doc = load(file)?;
    if format == Format::Svg {
        return match doc {
            Document::Polygon(t) if !as_quiver => Ok(triangulation_svg(&t)),
            _ => Err(Failure::new(EXIT_REJECTED, "svg output needs a polygon file")),
        };
    }
    Ok(match doc {
        Document::Quiver(q) if framed => seed_dot(&Seed::framed(&q)),
        Document::Quiver(q) => quiver_dot(&q),
        Document::Seed(s) => seed_dot(&s),
        Document::Polygon(t) if as_quiver => quiver_dot(&t.quiver()),
        Document::Polygon(t) => triangulation_dot(&t),
    })
}
