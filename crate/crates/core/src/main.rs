use std::fs;
use std::io::{self, BufReader};
use std::path::PathBuf;
use std::process::ExitCode;

use anyhow::Context;
use clap::{Args, Parser, Subcommand, ValueEnum};

use visipoly::analysis::{run_poly, Engine, GraphSource};
use visipoly::batch::{run_batch, BatchOptions};
use visipoly::closed_form::{poly_join, JoinOperand};
use visipoly::verify::{cycle_sweep, family_suite, join_example, run_verify};
use visipoly::{
    build_class, compute_stats, parse_graph6, polynomial_pruned, ClassSpec, Error, Graph,
};

const EXIT_FORMAT: u8 = 2;
const EXIT_VERIFY: u8 = 3;
const EXIT_GUARDRAIL: u8 = 4;

#[derive(Parser)]
#[command(
    name = "visipoly",
    version,
    about = "Visibility polynomials of simple graphs"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Compute the visibility polynomial of one graph (or each record of a file).
    Poly {
        #[command(flatten)]
        input: InputArgs,
        #[arg(long, value_enum, default_value_t = EngineArg::Auto)]
        engine: EngineArg,
    },
    /// Print mu, r_mu, Θ_{k,d} and clique counts as JSON.
    Stats {
        #[command(flatten)]
        input: InputArgs,
        #[arg(long)]
        kmax: Option<usize>,
    },
    /// Check closed forms against pruned and exhaustive enumeration.
    Verify {
        #[arg(long, value_enum, default_value_t = Suite::Families)]
        suite: Suite,
        /// Additional instances, e.g. `--class bipartite:3,5`.
        #[arg(long = "class")]
        classes: Vec<String>,
        #[arg(long)]
        json: bool,
    },
    /// Group a graph6 stream by visibility polynomial.
    Batch {
        /// graph6 file, `-` for stdin.
        #[arg(long)]
        input: PathBuf,
        /// Also write the JSON report here.
        #[arg(long)]
        json: Option<PathBuf>,
        #[arg(long)]
        skip_bad: bool,
        /// Worker threads (default: VISIPOLY_THREADS or all cores).
        #[arg(long)]
        threads: Option<usize>,
    },
    /// Visibility polynomial of a join via the composition laws.
    Join {
        #[arg(long)]
        left: String,
        #[arg(long)]
        right: String,
        /// Cross-check against enumeration of the built join.
        #[arg(long)]
        check: bool,
    },
}

#[derive(Args)]
struct InputArgs {
    /// A single graph6 record.
    #[arg(long, conflicts_with_all = ["input", "class"])]
    g6: Option<String>,
    /// Graph file, `-` for stdin.
    #[arg(long, conflicts_with = "class")]
    input: Option<PathBuf>,
    #[arg(long, value_enum, default_value_t = Format::Graph6)]
    format: Format,
    /// Family instance such as `cycle:7`, `bipartite:3,4`, `join(paw,cycle:6)`.
    #[arg(long)]
    class: Option<String>,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Graph6,
    Edgelist,
}

#[derive(Clone, Copy, ValueEnum)]
enum EngineArg {
    Auto,
    Bruteforce,
    Pruned,
    ClosedForm,
}

#[derive(Clone, Copy, ValueEnum)]
enum Suite {
    /// All family instances, unions and the join example.
    #[value(name = "paper", alias = "families")]
    Families,
    Cycles,
    Join,
    None,
}

impl From<EngineArg> for Engine {
    fn from(e: EngineArg) -> Self {
        match e {
            EngineArg::Auto => Engine::Auto,
            EngineArg::Bruteforce => Engine::Bruteforce,
            EngineArg::Pruned => Engine::Pruned,
            EngineArg::ClosedForm => Engine::ClosedForm,
        }
    }
}

fn read_text(path: &PathBuf) -> anyhow::Result<String> {
    if path.as_os_str() == "-" {
        return io::read_to_string(io::stdin()).context("reading stdin");
    }
    fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))
}

fn sources(input: &InputArgs) -> anyhow::Result<Vec<(String, GraphSource)>> {
    if let Some(rec) = &input.g6 {
        return Ok(vec![(rec.clone(), GraphSource::Graph(parse_graph6(rec)?))]);
    }
    if let Some(spec) = &input.class {
        let spec: ClassSpec = spec.parse()?;
        return Ok(vec![(spec.to_string(), GraphSource::Class(spec))]);
    }
    let Some(path) = &input.input else {
        anyhow::bail!("one of --g6, --input or --class is required");
    };
    let text = read_text(path)?;
    match input.format {
        Format::Edgelist => {
            let g = Graph::parse_edge_list(&text)?;
            Ok(vec![(path.display().to_string(), GraphSource::Graph(g))])
        }
        Format::Graph6 => text
            .lines()
            .enumerate()
            .filter(|(_, l)| !l.trim().is_empty())
            .map(|(i, l)| {
                let g = parse_graph6(l.trim()).map_err(|e| e.at_line(i + 1))?;
                Ok((l.trim().to_string(), GraphSource::Graph(g)))
            })
            .collect(),
    }
}

fn run(cli: Cli) -> anyhow::Result<ExitCode> {
    match cli.command {
        Command::Poly { input, engine } => {
            for (label, src) in sources(&input)? {
                let r = run_poly(&src, engine.into())?;
                println!("graph:      {label}");
                println!("polynomial: {}", r.polynomial.to_canonical_string());
                println!("pretty:     {}", r.polynomial.pretty());
                println!("mu:         {}", r.mu());
                println!("r_mu:       {}", r.r_mu());
                println!("method:     {}", r.method);
                println!("time:       {:.3} ms", r.elapsed.as_secs_f64() * 1e3);
            }
        }
        Command::Stats { input, kmax } => {
            for (_, src) in sources(&input)? {
                let g = src.graph()?;
                let stats = compute_stats(&g, kmax.unwrap_or(g.order()).min(g.order()))?;
                println!("{}", serde_json::to_string(&stats.to_json())?);
            }
        }
        Command::Verify {
            suite,
            classes,
            json,
        } => {
            let mut specs = match suite {
                Suite::Families => family_suite(),
                Suite::Cycles => cycle_sweep(),
                Suite::Join => vec![join_example()],
                Suite::None => Vec::new(),
            };
            for c in &classes {
                specs.push(c.parse()?);
            }
            let report = run_verify(&specs)?;
            if json {
                println!("{}", serde_json::to_string_pretty(&report)?);
            } else {
                for e in &report.entries {
                    let status = if e.pass { "PASS" } else { "FAIL" };
                    println!("{status} {:<40} {:<28} {}", e.spec, e.route, e.pruned);
                }
                let failed = report.failures().count();
                println!("{} instances, {failed} failed", report.entries.len());
            }
            if !report.all_pass() {
                return Ok(ExitCode::from(EXIT_VERIFY));
            }
        }
        Command::Batch {
            input,
            json,
            skip_bad,
            threads,
        } => {
            let opts = BatchOptions { skip_bad, threads };
            let report = if input.as_os_str() == "-" {
                run_batch(io::stdin().lock(), &opts)?
            } else {
                let f = fs::File::open(&input)
                    .with_context(|| format!("opening {}", input.display()))?;
                run_batch(BufReader::new(f), &opts)?
            };
            print!("{}", report.to_table());
            if let Some(out) = json {
                fs::write(&out, report.to_json() + "\n")
                    .with_context(|| format!("writing {}", out.display()))?;
            }
        }
        Command::Join { left, right, check } => {
            let (ls, rs): (ClassSpec, ClassSpec) = (left.parse()?, right.parse()?);
            let (g, h) = (build_class(&ls)?, build_class(&rs)?);
            let p = poly_join(&g, &h)?;
            println!("join:       {ls} v {rs}");
            println!("polynomial: {}", p.to_canonical_string());
            println!("pretty:     {}", p.pretty());
            if !g.is_complete() && !h.is_complete() {
                let (a, b) = (JoinOperand::new(&g)?, JoinOperand::new(&h)?);
                for (name, op) in [("left", &a), ("right", &b)] {
                    println!("{name} stats: {}", op.stats().to_json());
                }
            }
            if check {
                let enumerated = polynomial_pruned(&g.join(&h))?;
                let ok = enumerated == p;
                println!(
                    "check:      {} (enumeration {})",
                    if ok { "PASS" } else { "FAIL" },
                    enumerated.to_canonical_string()
                );
                if !ok {
                    return Ok(ExitCode::from(EXIT_VERIFY));
                }
            }
        }
    }
    Ok(ExitCode::SUCCESS)
}

fn exit_code(err: &anyhow::Error) -> u8 {
    match err.downcast_ref::<Error>() {
        Some(Error::Format { .. } | Error::Parameter(_)) => EXIT_FORMAT,
        Some(Error::Guardrail { .. } | Error::Dispatch(_)) => EXIT_GUARDRAIL,
        _ => 1,
    }
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(code) => code,
        Err(err) => {
            eprintln!("error: {err:#}");
            ExitCode::from(exit_code(&err))
        }
    }
}
