use std::path::PathBuf;
use std::process::ExitCode;
use std::time::Instant;

use anyhow::{bail, Context, Result};
use chordweave::chromatic::{gamma_bar, ChromaticReducer, WeightedGraph};
use chordweave::diagrams::{enumerate_diagrams_with, ChordDiagram};
use chordweave::lambda_chi::{chi_eval, Superalgebra};
use chordweave::skein::{self, corpus_knot, LinkDiagram, SkeinEvaluator, SkeinFamily, CORPUS_NAMES};
use chordweave::stateweights::{w21_embeddings, w_gl, w_rx, w_so};
use chordweave::verify::{run_suite, Bounds, CheckResult, Suite};
use chordweave::{Execution, MPoly};
use clap::{Parser, Subcommand, ValueEnum};
use serde::Serialize;
use serde_json::{json, Value};

#[derive(Parser)]
#[command(name = "chordweave", version, about = "Exact weight systems, chromatic reductions and skein polynomials")]
struct Cli {
    /// Print the run report as JSON.
    #[arg(long, global = true)]
    json: bool,
    /// Worker threads; 1 runs everything sequentially.
    #[arg(long, global = true, value_name = "K")]
    jobs: Option<usize>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// List canonical chord diagrams of one degree.
    Enumerate {
        #[arg(long)]
        degree: usize,
    },
    /// Evaluate weight systems on a chord diagram word such as 1212.
    Weights {
        #[arg(long)]
        diagram: String,
        /// Comma-separated subset of gl, so, chrom, wrx, w21.
        #[arg(long, value_delimiter = ',', default_value = "gl,so,chrom,w21")]
        systems: Vec<System>,
        /// Number of colors for wrx.
        #[arg(long)]
        r: Option<usize>,
    },
    /// Reduce a weighted graph (JSON) in the chromatic algebra.
    GraphReduce {
        #[arg(long)]
        file: PathBuf,
    },
    /// Evaluate a skein invariant on a PD-coded diagram.
    Knot {
        /// PD file, one X[a,b,c,d] per line.
        #[arg(long, conflicts_with = "builtin", required_unless_present = "builtin")]
        pd: Option<PathBuf>,
        /// A built-in knot instead of a file.
        #[arg(long)]
        builtin: Option<String>,
        #[arg(long, value_enum)]
        invariant: Invariant,
        /// Also extract the diagonal series to this order and compare it with Υ.
        #[arg(long, value_name = "N")]
        diagonal: Option<usize>,
    },
    /// Run a property suite.
    Verify {
        #[arg(long)]
        suite: String,
        #[arg(long)]
        max_degree: Option<usize>,
        /// Comma-separated matrix sizes for the oracle suites.
        #[arg(long, value_delimiter = ',')]
        n: Option<Vec<usize>>,
        #[arg(long)]
        r: Option<usize>,
        /// Random samples for chromrel.
        #[arg(long)]
        samples: Option<usize>,
        #[arg(long)]
        seed: Option<u64>,
    },
    /// Apply the G(3) or F(4) character to a polynomial in t and odd x(n).
    Chi {
        #[arg(long)]
        expr: String,
        #[arg(long)]
        algebra: String,
    },
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum, Serialize)]
#[serde(rename_all = "lowercase")]
enum System {
    Gl,
    So,
    Chrom,
    Wrx,
    W21,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum, Serialize)]
#[serde(rename_all = "lowercase")]
enum Invariant {
    Upsilon,
    Homfly,
    Kauffman,
}

#[derive(Serialize)]
struct RunReport {
    command: String,
    inputs: Value,
    results: Value,
    checks: Vec<CheckResult>,
}

impl RunReport {
    fn passed(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }
}

fn configure_jobs(jobs: Option<usize>) -> Result<Execution> {
    match jobs {
        Some(0) => bail!("--jobs must be at least 1"),
        Some(1) => Ok(Execution::Sequential),
        Some(_k) => {
            #[cfg(feature = "parallel")]
            rayon::ThreadPoolBuilder::new().num_threads(_k).build_global().context("configuring worker pool")?;
            Ok(Execution::Parallel)
        }
        None => Ok(Execution::Parallel),
    }
}

fn enumerate(degree: usize, exec: Execution) -> Result<RunReport> {
    let ds = enumerate_diagrams_with(degree, exec)?;
    let words: Vec<String> = ds.iter().map(ChordDiagram::to_word).collect();
    Ok(RunReport {
        command: "enumerate".into(),
        inputs: json!({ "degree": degree }),
        results: json!({ "count": words.len(), "diagrams": words }),
        checks: vec![],
    })
}

fn weights(word: &str, systems: &[System], r: Option<usize>) -> Result<RunReport> {
    let d = ChordDiagram::from_word(word)?;
    let mut results = serde_json::Map::new();
    for &s in systems {
        let value = match s {
            System::Gl => w_gl(&d).to_string(),
            System::So => w_so(&d).to_string(),
            System::Chrom => gamma_bar(&d)?.to_string(),
            System::W21 => w21_embeddings(&d).to_string(),
            System::Wrx => match r {
                Some(r) if r >= 1 => w_rx(&d, r).to_string(),
                _ => bail!("the wrx system needs --r at least 1"),
            },
        };
        results.insert(serde_json::to_value(s)?.as_str().unwrap_or_default().to_string(), Value::String(value));
    }
    Ok(RunReport {
        command: "weights".into(),
        inputs: json!({ "diagram": d.to_word(), "systems": systems, "r": r }),
        results: Value::Object(results),
        checks: vec![],
    })
}

fn graph_reduce(file: &PathBuf) -> Result<RunReport> {
    let text = std::fs::read_to_string(file).with_context(|| format!("reading {}", file.display()))?;
    let g = WeightedGraph::from_json(&text)?;
    let value = ChromaticReducer::from_env().reduce(&g)?;
    Ok(RunReport {
        command: "graph-reduce".into(),
        inputs: json!({ "file": file.display().to_string(), "vertices": g.vertex_count(), "edges": g.edge_count() }),
        results: json!({ "value": value.to_string() }),
        checks: vec![],
    })
}

fn knot(pd: Option<&PathBuf>, builtin: Option<&str>, invariant: Invariant, diagonal: Option<usize>) -> Result<RunReport> {
    let (k, source) = match (pd, builtin) {
        (Some(path), _) => {
            let text = std::fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?;
            (LinkDiagram::parse(&text)?, path.display().to_string())
        }
        (None, Some(name)) => match corpus_knot(name) {
            Some(k) => (k, name.to_string()),
            None => bail!("unknown built-in knot {name:?}; choose from {}", CORPUS_NAMES.join(", ")),
        },
        (None, None) => bail!("give --pd or --builtin"),
    };
    let mut ev = SkeinEvaluator::new();
    let value = match invariant {
        Invariant::Upsilon => ev.upsilon(&k)?,
        Invariant::Homfly => ev.homfly(&k)?,
        Invariant::Kauffman => ev.kauffman(&k)?,
    };
    let name = serde_json::to_value(invariant)?;
    let mut results = json!({ "invariant": name, "value": value.to_string() });
    let mut checks = Vec::new();
    if let Some(order) = diagonal {
        let ups = if invariant == Invariant::Upsilon { value.clone() } else { ev.upsilon(&k)? };
        let want = skein::upsilon_series(&ups, order)?;
        let series = match invariant {
            Invariant::Kauffman => skein::diagonal_table(&k, SkeinFamily::Kauffman, order)?.diagonal(),
            _ => skein::diagonal_table(&k, SkeinFamily::Homfly, order)?.diagonal(),
        };
        let passed = series == want;
        results["diagonal"] = json!(series.to_string());
        results["upsilon_series"] = json!(want.to_string());
        checks.push(CheckResult {
            name: format!("diagonal to order {order} = upsilon series"),
            cases: 1,
            passed,
            counterexample: (!passed).then(|| format!("{series} != {want}")),
        });
    }
    Ok(RunReport {
        command: "knot".into(),
        inputs: json!({
            "source": source,
            "crossings": k.crossing_count(),
            "components": k.component_count(),
            "writhe": k.writhe(),
            "invariant": name,
            "diagonal": diagonal,
        }),
        results,
        checks,
    })
}

fn verify(suite: &str, bounds: Bounds, exec: Execution) -> Result<RunReport> {
    let suite: Suite = suite.parse()?;
    let report = run_suite(suite, &bounds, exec)?;
    Ok(RunReport {
        command: "verify".into(),
        inputs: json!({ "suite": suite, "bounds": report.bounds }),
        results: json!({ "passed": report.passed() }),
        checks: report.checks,
    })
}

fn chi(expr: &str, algebra: &str) -> Result<RunReport> {
    let e: MPoly = expr.parse()?;
    let which: Superalgebra = algebra.parse()?;
    let value = chi_eval(&e, which)?;
    Ok(RunReport {
        command: "chi".into(),
        inputs: json!({ "expr": e.to_string(), "algebra": which.to_string() }),
        results: json!({ "value": value.to_string() }),
        checks: vec![],
    })
}

fn render_text(report: &RunReport) -> String {
    let mut out = String::new();
    match &report.results {
        Value::Object(map) => {
            for (k, v) in map {
                match v {
                    Value::String(s) => out.push_str(&format!("{k}: {s}\n")),
                    Value::Array(items) => {
                        for item in items {
                            out.push_str(&format!("{}\n", item.as_str().map(str::to_string).unwrap_or_else(|| item.to_string())));
                        }
                    }
                    other => out.push_str(&format!("{k}: {other}\n")),
                }
            }
        }
        other => out.push_str(&format!("{other}\n")),
    }
    for c in &report.checks {
        let verdict = if c.passed { "PASS" } else { "FAIL" };
        out.push_str(&format!("{verdict} {} ({} cases)\n", c.name, c.cases));
        if let Some(x) = &c.counterexample {
            out.push_str(&format!("  counterexample: {x}\n"));
        }
    }
    out
}

fn run(cli: Cli) -> Result<RunReport> {
    let exec = configure_jobs(cli.jobs)?;
    match cli.command {
        Command::Enumerate { degree } => enumerate(degree, exec),
        Command::Weights { diagram, systems, r } => weights(&diagram, &systems, r),
        Command::GraphReduce { file } => graph_reduce(&file),
        Command::Knot { pd, builtin, invariant, diagonal } => knot(pd.as_ref(), builtin.as_deref(), invariant, diagonal),
        Command::Verify { suite, max_degree, n, r, samples, seed } => {
            let parsed: Suite = suite.parse()?;
            let d = Bounds::default_for(parsed);
            let bounds = Bounds {
                max_degree: max_degree.unwrap_or(d.max_degree),
                ns: n.unwrap_or(d.ns),
                r: r.unwrap_or(d.r),
                samples: samples.unwrap_or(d.samples),
                seed: seed.unwrap_or(d.seed),
            };
            verify(&suite, bounds, exec)
        }
        Command::Chi { expr, algebra } => chi(&expr, &algebra),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let json_out = cli.json;
    let start = Instant::now();
    let report = match run(cli) {
        Ok(r) => r,
        Err(e) => {
            eprintln!("error: {e:#}");
            return ExitCode::from(2);
        }
    };
    if json_out {
        println!("{}", serde_json::to_string_pretty(&report).expect("report serializes"));
    } else {
        print!("{}", render_text(&report));
    }
    eprintln!("finished in {:.3}s", start.elapsed().as_secs_f64());
    if report.passed() {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
