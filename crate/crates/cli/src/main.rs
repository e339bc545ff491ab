//! Batch command-line surface for the knot diagram engine.
//!
//! Inputs are text files with one PD code (or braid word) per line; `#`
//! starts a trailing comment. Outputs are JSON lines, sorted by input line
//! number, so results are byte-identical across runs and parallelism
//! degrees. A malformed line yields an error record without aborting the
//! batch.

use std::fs;
use std::io::{self, Read, Write};
use std::time::Duration;

use clap::{Args, Parser, Subcommand};
use rayon::prelude::*;
use serde_json::{json, Value};

use knot_core::braid::{
    braid_connected_sum, closure, default_identity_library, insert_identity_words,
    slice_bennequin, BraidWord,
};
use knot_core::hardness::{
    dedup_and_partition, filter_candidate, is_hard, r3_orbit, HardnessVerdict, OrbitLimits,
    OrbitResult,
};
use knot_core::invariants::{
    alexander, determinant, feature_vector, is_alternating, jones_capped, signature, writhe,
    FeatureConfig,
};
use knot_core::moves::{global_simplify, GlobalConfig};
use knot_core::replay::{default_budget, replay_all};
use knot_core::unknotting::{
    brute_force_min_unknotting, certify_unknot, run_strategy, Certification, CertifyBudget,
    EnvConfig, Strategy,
};
use knot_core::{BracketStyle, Diagram};

#[derive(Parser)]
#[command(name = "knot", version, about = "Knot diagram engine")]
struct Cli {
    /// Worker threads for batch subcommands (default: $KNOT_JOBS or 1).
    #[arg(long, global = true)]
    jobs: Option<usize>,

    /// Reject input diagrams with more crossings than this.
    #[arg(long, global = true, default_value_t = 256)]
    max_crossings: usize,

    /// Seed for all randomized budgets.
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,

    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct InputArg {
    /// Input file of PD codes, one per line (`-` for stdin).
    input: String,
}

#[derive(Subcommand)]
enum Command {
    /// Parse and validate PD codes.
    Validate(InputArg),
    /// Writhe, alternation, determinant, signature, Alexander, Jones and
    /// the numeric feature vector of each diagram.
    Invariants(InputArg),
    /// Greedy simplification with randomized R3 and pass moves.
    Simplify {
        #[command(flatten)]
        input: InputArg,
        #[arg(long, default_value_t = 1000)]
        max_r3: usize,
        #[arg(long, default_value_t = 100)]
        max_rounds: usize,
    },
    /// Search for unknotting sequences with a fixed strategy.
    Unknot {
        #[command(flatten)]
        input: InputArg,
        /// random | weighted:a,b,c,d,e,f | simplify-random | simplify-min-crossing
        #[arg(long, default_value = "simplify-min-crossing")]
        strategy: String,
        #[arg(long, default_value_t = 1)]
        repeats: usize,
        #[arg(long, default_value_t = 30)]
        max_steps: usize,
        /// Crossing indices that must end up switched an odd number of times.
        #[arg(long, value_delimiter = ',')]
        force_crossings: Vec<usize>,
        /// Skip the search: switch exactly these crossings, then certify.
        #[arg(long, value_delimiter = ',')]
        replay: Option<Vec<usize>>,
    },
    /// Exact minimal unknotting number by subset enumeration.
    Brute {
        #[command(flatten)]
        input: InputArg,
        #[arg(long, default_value_t = 6)]
        max_size: usize,
        #[arg(long, default_value_t = 10_000_000)]
        work_cap: u64,
    },
    /// Braid-word tools (input lines: `strands=N;l1,l2,...`).
    #[command(subcommand)]
    Braid(BraidCommand),
    /// Hard-diagram pipeline: filter, orbit check, dedup and partition.
    Hardness {
        #[command(flatten)]
        input: InputArg,
        /// Independent simplification attempts in the candidate filter.
        #[arg(long, default_value_t = 5)]
        retries: usize,
        #[arg(long, default_value_t = 120)]
        timeout_secs: u64,
        #[arg(long, default_value_t = 100_000)]
        max_diagrams: usize,
    },
    /// R3-orbit size of each diagram.
    Orbit {
        #[command(flatten)]
        input: InputArg,
        #[arg(long, default_value_t = 120)]
        timeout_secs: u64,
        #[arg(long, default_value_t = 100_000)]
        max_diagrams: usize,
    },
    /// Replay the bundled connected-sum unknotting fixtures end to end.
    ReplayAppendix,
}

#[derive(Subcommand)]
enum BraidCommand {
    /// Closure diagram of each braid word.
    Closure(InputArg),
    /// Slice-Bennequin style bounds on twice the unknotting number.
    Bounds(InputArg),
    /// Connected sum of two braids per line, separated by `|`.
    Sum(InputArg),
    /// Obfuscate each word by inserting random identity words.
    Mix {
        #[command(flatten)]
        input: InputArg,
        #[arg(long, default_value_t = 3)]
        count: usize,
    },
}

fn main() {
    let cli = Cli::parse();
    let jobs = cli
        .jobs
        .or_else(|| std::env::var("KNOT_JOBS").ok().and_then(|v| v.parse().ok()))
        .unwrap_or(1)
        .max(1);
    rayon::ThreadPoolBuilder::new()
        .num_threads(jobs)
        .build_global()
        .expect("rayon pool");
    let code = run(cli);
    std::process::exit(code);
}

fn run(cli: Cli) -> i32 {
    match &cli.command {
        Command::Validate(input) => batch(&input.input, &cli, |d, _| {
            Ok(json!({
                "pd": d.serialize_pd(BracketStyle::Square),
                "n": d.n(),
                "writhe": d.writhe(),
            }))
        }),
        Command::Invariants(input) => batch(&input.input, &cli, |d, cli| {
            let alex = alexander(d).map(|p| format!("{p:?}")).ok();
            let jones = jones_capped(d, cli.max_crossings).map(|p| format!("{p:?}")).ok();
            let features = feature_vector(d, &FeatureConfig::default());
            Ok(json!({
                "pd": d.serialize_pd(BracketStyle::Square),
                "writhe": writhe(d),
                "alternating": is_alternating(d),
                "det": determinant(d).to_string(),
                "signature": signature(d),
                "alexander": alex,
                "jones": jones,
                "features": features.values,
            }))
        }),
        Command::Simplify { input, max_r3, max_rounds } => batch(&input.input, &cli, |d, cli| {
            let cfg = GlobalConfig { max_r3: *max_r3, max_rounds: *max_rounds };
            let rep = global_simplify(d, cli.seed, &cfg);
            Ok(json!({
                "n_in": d.n(),
                "n_out": rep.diagram.n(),
                "pd_out": rep.diagram.serialize_pd(BracketStyle::Square),
                "reached_trivial": rep.reached_trivial,
                "trace_len": rep.trace.len(),
            }))
        }),
        Command::Unknot { input, strategy, repeats, max_steps, force_crossings, replay } => {
            let strategy = match parse_strategy(strategy) {
                Ok(s) => s,
                Err(e) => {
                    eprintln!("error: {e}");
                    return 2;
                }
            };
            let lines = match read_lines(&input.input) {
                Ok(l) => l,
                Err(e) => {
                    eprintln!("error: {e}");
                    return 2;
                }
            };
            let mut records = process_lines(&lines, &cli, |d, cli| {
                if let Some(switches) = replay {
                    let mut cur = d.clone();
                    for &i in switches {
                        cur = cur.change_crossing(i)?;
                    }
                    let (outcome, certificate_len) =
                        match certify_unknot(&cur, &CertifyBudget::default()) {
                            Certification::Yes { trace } => ("Unknotted", Some(trace.len())),
                            Certification::NotUnknot { .. } => ("Exhausted", None),
                            Certification::Unknown => ("Unknown", None),
                        };
                    return Ok(json!({
                        "outcome": outcome,
                        "length": switches.len(),
                        "reduced": switches,
                        "certificate_len": certificate_len,
                    }));
                }
                let config = EnvConfig {
                    max_steps: *max_steps,
                    forced: force_crossings.clone(),
                    ..EnvConfig::default()
                };
                let t = run_strategy(d, &strategy, cli.seed, *repeats, &config);
                Ok(json!({
                    "outcome": format!("{:?}", t.outcome),
                    "length": t.reduced.len(),
                    "reduced": t.reduced,
                    "certificate_len": t.certificate_len,
                    "forced_satisfied": t.forced_satisfied,
                }))
            });
            let data: Vec<_> =
                records.iter().filter(|r| r.get("error").is_none()).collect();
            let solved: Vec<u64> = data
                .iter()
                .filter(|r| r.get("outcome").and_then(Value::as_str) == Some("Unknotted"))
                .filter_map(|r| r.get("length").and_then(Value::as_u64))
                .collect();
            let mean_len = if solved.is_empty() {
                0.0
            } else {
                solved.iter().sum::<u64>() as f64 / solved.len() as f64
            };
            let unsolved_pct = if data.is_empty() {
                0.0
            } else {
                100.0 * (data.len() - solved.len()) as f64 / data.len() as f64
            };
            records.push(json!({
                "summary": {
                    "strategy": strategy_name(&strategy),
                    "mean_reduced_len": mean_len,
                    "unsolved_pct": unsolved_pct,
                }
            }));
            emit(&records)
        }
        Command::Brute { input, max_size, work_cap } => batch(&input.input, &cli, |d, _| {
            let r = brute_force_min_unknotting(d, *max_size, &CertifyBudget::default(), *work_cap)?;
            Ok(json!({
                "min_size": r.min_size,
                "sets": r.sets,
                "tested": r.tested,
                "any_unknown": r.any_unknown,
            }))
        }),
        Command::Braid(sub) => run_braid(sub, &cli),
        Command::Hardness { input, retries, timeout_secs, max_diagrams } => {
            let limits = OrbitLimits {
                max_diagrams: *max_diagrams,
                timeout: Duration::from_secs(*timeout_secs),
                ..OrbitLimits::default()
            };
            let lines = match read_lines(&input.input) {
                Ok(l) => l,
                Err(e) => {
                    eprintln!("error: {e}");
                    return 2;
                }
            };
            let mut records = process_lines(&lines, &cli, |d, _| {
                if !filter_candidate(d, *retries, &limits) {
                    return Ok(json!({ "verdict": "Filtered" }));
                }
                Ok(match is_hard(d, &limits) {
                    HardnessVerdict::Hard { orbit_size } => {
                        json!({ "verdict": "Hard", "orbit_size": orbit_size })
                    }
                    HardnessVerdict::NotHard { path, simplifying } => json!({
                        "verdict": "NotHard",
                        "witness": { "path": path, "simplifying": simplifying },
                    }),
                    HardnessVerdict::Timeout { explored } => {
                        json!({ "verdict": "Timeout", "explored": explored })
                    }
                })
            });
            let diagrams: Vec<Diagram> = lines
                .iter()
                .filter_map(|(_, text)| Diagram::parse_pd(text).ok())
                .collect();
            let (distinct, partition) = dedup_and_partition(&diagrams, &limits);
            let classes = partition.class_of.values().collect::<std::collections::BTreeSet<_>>();
            records.push(json!({
                "summary": {
                    "inputs": diagrams.len(),
                    "distinct": distinct,
                    "r3_classes": classes.len(),
                    "unresolved_classes": partition.unresolved.len(),
                }
            }));
            emit(&records)
        }
        Command::Orbit { input, timeout_secs, max_diagrams } => {
            let limits = OrbitLimits {
                max_diagrams: *max_diagrams,
                timeout: Duration::from_secs(*timeout_secs),
                ..OrbitLimits::default()
            };
            batch(&input.input, &cli, move |d, _| {
                Ok(match r3_orbit(d, &limits) {
                    OrbitResult::Complete(codes) => json!({ "orbit_size": codes.len() }),
                    OrbitResult::Timeout { explored } => {
                        json!({ "timeout": true, "explored": explored })
                    }
                })
            })
        }
        Command::ReplayAppendix => {
            let report = replay_all(&default_budget());
            println!("{}", serde_json::to_string_pretty(&report).expect("serialize report"));
            if report.ok {
                0
            } else {
                let first = report
                    .fixtures
                    .iter()
                    .find(|r| r.index_base.is_none() || r.mid_invariants_match == Some(false))
                    .map(|r| r.name.clone())
                    .unwrap_or_else(|| "shared initial codes".into());
                eprintln!("replay failed; first divergence: {first}");
                1
            }
        }
    }
}

fn run_braid(sub: &BraidCommand, cli: &Cli) -> i32 {
    match sub {
        BraidCommand::Closure(input) => braid_batch(&input.input, cli, |b, _| {
            let d = closure(b)?;
            Ok(json!({
                "pd": d.serialize_pd(BracketStyle::Square),
                "n": d.n(),
                "writhe": d.writhe(),
            }))
        }),
        BraidCommand::Bounds(input) => braid_batch(&input.input, cli, |b, _| {
            let (lower, upper) = slice_bennequin(b)?;
            Ok(json!({ "lower_2u": lower, "upper_2u": upper }))
        }),
        BraidCommand::Sum(input) => {
            let lines = match read_lines(&input.input) {
                Ok(l) => l,
                Err(e) => {
                    eprintln!("error: {e}");
                    return 2;
                }
            };
            let records = lines
                .par_iter()
                .map(|(line_no, text)| {
                    let result = (|| {
                        let (a, b) = text
                            .split_once('|')
                            .ok_or_else(|| "expected two braids separated by `|`".to_string())?;
                        let b1 = parse_braid_line(a).map_err(|e| e.to_string())?;
                        let b2 = parse_braid_line(b).map_err(|e| e.to_string())?;
                        let sum = braid_connected_sum(&b1, &b2).map_err(|e| e.to_string())?;
                        let d = closure(&sum).map_err(|e| e.to_string())?;
                        Ok::<Value, String>(json!({
                            "strands": sum.strands,
                            "letters": sum.letters,
                            "pd": d.serialize_pd(BracketStyle::Square),
                        }))
                    })();
                    finish_record(*line_no, result)
                })
                .collect::<Vec<_>>();
            emit(&records)
        }
        BraidCommand::Mix { input, count } => braid_batch(&input.input, cli, |b, cli| {
            let lib = default_identity_library();
            let mixed = insert_identity_words(b, cli.seed, *count, &lib)?;
            Ok(json!({
                "strands": mixed.strands,
                "letters": mixed.letters,
            }))
        }),
    }
}

// ---------------------------------------------------------------------------
// batch plumbing
// ---------------------------------------------------------------------------

/// Non-empty input lines with their 1-based line numbers, comments stripped.
fn read_lines(path: &str) -> io::Result<Vec<(usize, String)>> {
    let text = if path == "-" {
        let mut s = String::new();
        io::stdin().read_to_string(&mut s)?;
        s
    } else {
        fs::read_to_string(path)?
    };
    Ok(text
        .lines()
        .enumerate()
        .filter_map(|(i, line)| {
            let body = line.split('#').next().unwrap_or("").trim();
            (!body.is_empty()).then(|| (i + 1, body.to_string()))
        })
        .collect())
}

fn finish_record(line_no: usize, result: Result<Value, String>) -> Value {
    match result {
        Ok(Value::Object(mut map)) => {
            let mut out = serde_json::Map::new();
            out.insert("line".into(), json!(line_no));
            out.append(&mut map);
            Value::Object(out)
        }
        Ok(other) => json!({ "line": line_no, "result": other }),
        Err(e) => json!({ "line": line_no, "error": e }),
    }
}

fn process_lines(
    lines: &[(usize, String)],
    cli: &Cli,
    f: impl Fn(&Diagram, &Cli) -> knot_core::Result<Value> + Sync,
) -> Vec<Value> {
    lines
        .par_iter()
        .map(|(line_no, text)| {
            let result = Diagram::parse_pd(text)
                .and_then(|d| {
                    if d.n() > cli.max_crossings {
                        return Err(knot_core::KnotError::CrossingBudget {
                            n: d.n(),
                            cap: cli.max_crossings,
                        });
                    }
                    f(&d, cli)
                })
                .map_err(|e| e.to_string());
            finish_record(*line_no, result)
        })
        .collect()
}

fn emit(records: &[Value]) -> i32 {
    let stdout = io::stdout();
    let mut out = stdout.lock();
    for r in records {
        writeln!(out, "{r}").expect("write stdout");
    }
    let data: Vec<_> = records.iter().filter(|r| r.get("summary").is_none()).collect();
    if !data.is_empty() && data.iter().all(|r| r.get("error").is_some()) {
        1
    } else {
        0
    }
}

fn batch(
    path: &str,
    cli: &Cli,
    f: impl Fn(&Diagram, &Cli) -> knot_core::Result<Value> + Sync,
) -> i32 {
    match read_lines(path) {
        Ok(lines) => emit(&process_lines(&lines, cli, f)),
        Err(e) => {
            eprintln!("error: {e}");
            2
        }
    }
}

/// `strands=N;l1,l2,...` on one line (`;` standing in for the newline of the
/// file format used by the braid module).
fn parse_braid_line(text: &str) -> knot_core::Result<BraidWord> {
    BraidWord::parse(&text.trim().replacen(';', "\n", 1))
}

fn braid_batch(
    path: &str,
    cli: &Cli,
    f: impl Fn(&BraidWord, &Cli) -> knot_core::Result<Value> + Sync,
) -> i32 {
    match read_lines(path) {
        Ok(lines) => {
            let records = lines
                .par_iter()
                .map(|(line_no, text)| {
                    let result = parse_braid_line(text)
                        .and_then(|b| f(&b, cli))
                        .map_err(|e| e.to_string());
                    finish_record(*line_no, result)
                })
                .collect::<Vec<_>>();
            emit(&records)
        }
        Err(e) => {
            eprintln!("error: {e}");
            2
        }
    }
}

fn strategy_name(s: &Strategy) -> String {
    match s {
        Strategy::Random => "random".into(),
        Strategy::SimplifyRandom => "simplify-random".into(),
        Strategy::SimplifyMinCrossing => "simplify-min-crossing".into(),
        Strategy::WeightedRandom(w) => format!(
            "weighted:{}",
            w.iter().map(u32::to_string).collect::<Vec<_>>().join(",")
        ),
    }
}

fn parse_strategy(text: &str) -> Result<Strategy, String> {
    match text {
        "random" => Ok(Strategy::Random),
        "simplify-random" => Ok(Strategy::SimplifyRandom),
        "simplify-min-crossing" => Ok(Strategy::SimplifyMinCrossing),
        other => {
            if let Some(rest) = other.strip_prefix("weighted:") {
                let parts: Vec<u32> = rest
                    .split(',')
                    .map(|p| p.trim().parse::<u32>().map_err(|e| e.to_string()))
                    .collect::<Result<_, _>>()?;
                let weights: [u32; 6] = parts
                    .try_into()
                    .map_err(|_| "weighted strategy needs 6 weights".to_string())?;
                Ok(Strategy::WeightedRandom(weights))
            } else {
                Err(format!("unknown strategy `{other}`"))
            }
        }
    }
}
