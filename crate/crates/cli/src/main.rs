use std::path::Path;
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use serde_json::{json, Value};

use schurforge::exact::{Rational, Series};
use schurforge::lambda::{adams_on_witt, ghost, WittSeries};
use schurforge::partition::{dim_poly_eval, partitions_of, Partition};
use schurforge::repring::{ev, k0_class, K0Class};
use schurforge::symfunc::{lr, SymFunc};
use schurforge::symgroup::{character_table, Permutation};
use schurforge::tensor::{char_series, schur_objects, GObject, GradedObject, DEFAULT_TENSOR_BOUND};
use schurforge::Error;

mod verify;

const DEFAULT_SEED: u64 = 0x5eed;

#[derive(Parser)]
#[command(name = "schurforge", version, about = "Schur functors, λ-rings and characters in exact arithmetic")]
struct Cli {
    /// One JSON object per output line.
    #[arg(long, global = true)]
    json: bool,
    /// Seed for randomised checks (falls back to SCHURFORGE_SEED).
    #[arg(long, global = true)]
    seed: Option<u64>,
    /// Cap on tensor-power dimensions.
    #[arg(long, global = true, default_value_t = DEFAULT_TENSOR_BOUND)]
    bound: usize,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// List the partitions of n.
    Partitions { n: usize },
    /// Character table of the symmetric group on n points.
    CharTable { n: usize },
    /// Littlewood-Richardson coefficient c^pi_{mu,eta}.
    Lr { mu: Partition, eta: Partition, pi: Partition },
    /// Dimension of S_pi applied to an m-dimensional space.
    SchurDim {
        pi: Partition,
        #[arg(allow_negative_numbers = true)]
        m: i64,
    },
    /// Decompose the n-th tensor power of a graded object into Schur functors.
    SchurDecompose {
        #[arg(long)]
        dims: GradedObject,
        #[arg(long)]
        n: usize,
    },
    /// Characteristic series of a group element on a representation.
    CharSeries {
        /// Preset such as perm:sym3, or a path to a JSON description.
        #[arg(long)]
        rep: String,
        /// Group element in cycle notation, e.g. "(1 2 3)".
        #[arg(long)]
        element: String,
        #[arg(long)]
        order: usize,
    },
    /// Adams operation on a power series with constant term 1.
    Adams {
        #[arg(long)]
        series: String,
        #[arg(long)]
        n: usize,
        /// Output order; defaults to the order of the input.
        #[arg(long)]
        order: Option<usize>,
    },
    /// Evaluate a symmetric function at a class in Z[q, q^-1].
    Ev {
        #[arg(long)]
        class: K0Class,
        /// A partition or a combination such as "s[2] - s[1,1]".
        #[arg(long)]
        schur: String,
    },
    /// Run verification suites.
    Verify {
        #[arg(default_value = "all")]
        suite: String,
    },
}

/// A line of output in both text and JSON form.
struct Line {
    text: String,
    json: Value,
}

fn line(text: impl Into<String>, json: Value) -> Line {
    Line { text: text.into(), json }
}

fn seed(cli: &Cli) -> Result<u64, Error> {
    if let Some(s) = cli.seed {
        return Ok(s);
    }
    match std::env::var("SCHURFORGE_SEED") {
        Ok(v) => v.trim().parse().map_err(|_| Error::Parse(format!("SCHURFORGE_SEED={v:?} is not an integer"))),
        Err(_) => Ok(DEFAULT_SEED),
    }
}

fn load_rep(spec: &str) -> Result<GObject, Error> {
    if Path::new(spec).is_file() {
        let text = std::fs::read_to_string(spec).map_err(|e| Error::Parse(format!("{spec}: {e}")))?;
        GObject::from_json(&text)
    } else {
        GObject::preset(spec)
    }
}

fn parse_symfunc(s: &str) -> Result<SymFunc, Error> {
    if s.contains('s') {
        s.parse()
    } else {
        Ok(SymFunc::schur(s.parse()?))
    }
}

fn run(cli: &Cli) -> Result<(Vec<Line>, bool), Error> {
    let mut out = Vec::new();
    match &cli.command {
        Command::Partitions { n } => {
            for p in partitions_of(*n) {
                out.push(line(p.to_string(), json!({ "partition": p.to_string() })));
            }
        }
        Command::CharTable { n } => {
            let t = character_table(*n)?;
            let classes: Vec<String> = t.partitions().iter().map(|p| p.to_string()).collect();
            out.push(line(format!("classes: {}", classes.join(" | ")), json!({ "classes": classes })));
            for (i, p) in t.partitions().iter().enumerate() {
                let row = t.row(i);
                let cells: Vec<String> = row.iter().map(|v| v.to_string()).collect();
                out.push(line(format!("{p}: {}", cells.join(" ")), json!({ "partition": p.to_string(), "values": row })));
            }
        }
        Command::Lr { mu, eta, pi } => {
            let c = lr(mu, eta, pi);
            out.push(line(c.to_string(), json!({ "lr": c })));
        }
        Command::SchurDim { pi, m } => {
            let d = dim_poly_eval(pi, *m);
            out.push(line(d.to_string(), json!({ "dim": d.to_string() })));
        }
        Command::SchurDecompose { dims, n } => {
            let parts = schur_objects(dims, *n, cli.bound)?;
            let mut total = std::collections::BTreeMap::<i64, usize>::new();
            for pi in partitions_of(*n) {
                let s = parts.get(&pi).cloned().unwrap_or_else(GradedObject::zero);
                let f: usize = pi.num_standard_tableaux().try_into().expect("small");
                for (d, m) in s.dims() {
                    *total.entry(d).or_insert(0) += f * m;
                }
                let cl = k0_class(&s);
                out.push(line(
                    format!("{pi}: {s}  dim {}  class {cl}  multiplicity {f}", s.total_dim()),
                    json!({ "partition": pi.to_string(), "object": s.to_string(), "dim": s.total_dim(),
                            "class": cl.to_string(), "multiplicity": f }),
                ));
            }
            let power = dims.tensor_power(*n);
            let ok = GradedObject::new(total) == power;
            out.push(line(
                format!("tensor power: {power}  {}", if ok { "consistent" } else { "INCONSISTENT" }),
                json!({ "tensor_power": power.to_string(), "consistent": ok }),
            ));
        }
        Command::CharSeries { rep, element, order } => {
            let x = load_rep(rep)?;
            let g = Permutation::parse_cycles(element, Some(x.group().degree()))?;
            let s = char_series(&x, &g, *order, cli.bound)?;
            let gh: Vec<String> = ghost(&s).iter().map(|v| v.to_string()).collect();
            out.push(line(format!("series: {s}"), json!({ "series": s.to_string() })));
            out.push(line(format!("ghosts: [{}]", gh.join(", ")), json!({ "ghosts": gh })));
        }
        Command::Adams { series, n, order } => {
            if *n == 0 {
                return Err(Error::Parse("--n must be at least 1".into()));
            }
            let f: Series<Rational> = series.parse()?;
            let target = order.unwrap_or(f.order()).max(1);
            // the input is read as a polynomial, hence known to any order
            let long = Series::new(f.coeffs().to_vec(), target * n);
            let r = adams_on_witt(&WittSeries::new(long)?, *n)?;
            out.push(line(r.to_string(), json!({ "series": r.to_string() })));
        }
        Command::Ev { class, schur } => {
            let f = parse_symfunc(schur)?;
            let v = ev(class, &f)?;
            out.push(line(v.to_string(), json!({ "class": v.to_string() })));
        }
        Command::Verify { suite } => {
            let report = verify::run(suite, seed(cli)?, cli.bound)?;
            let ok = report.passed();
            out.extend(report.lines(cli.json).into_iter().map(|(text, json)| line(text, json)));
            return Ok((out, ok));
        }
    }
    Ok((out, true))
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { 2 } else { 0 });
        }
    };
    match run(&cli) {
        Ok((lines, ok)) => {
            for l in lines {
                if cli.json {
                    println!("{}", l.json);
                } else {
                    println!("{}", l.text);
                }
            }
            if ok {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            }
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}
