use std::path::PathBuf;
use std::process::ExitCode;
use std::time::Instant;

use anyhow::{anyhow, Context};
use clap::{Parser, Subcommand, ValueEnum};
use serde_json::json;

use ppav::bijections::{
    bijection_1234_1324, bijection_1324_1234, dyck_to_perm123, hole_bijection_to_path, path_to_hole_bijection,
    perm123_to_dyck, simion_schmidt, simion_schmidt_inverse, LatticePath, SsTarget,
};
use ppav::enumerate::{classify, closed_form, count, count_h, to_bfile, to_csv, to_json, CountCache, Method, Term};
use ppav::fillings::PartialFilling;
use ppav::matchings::{key_bijection_inverse, key_bijection_traced, partial_231_to_312, partial_312_to_231};
use ppav::verify::{self, Bounds, Target};
use ppav::{Error, HoleSet, PartialPerm, Pattern, Perm};

#[derive(Parser)]
#[command(name = "ppav", version, about = "Pattern avoidance in partial permutations")]
struct Cli {
    /// Worker threads (default: all cores).
    #[arg(long, global = true, env = "PPAV_JOBS")]
    jobs: Option<usize>,

    /// Directory for cached counts.
    #[arg(long, global = true, env = "PPAV_CACHE_DIR")]
    cache_dir: Option<PathBuf>,

    #[arg(long, global = true, value_enum)]
    format: Option<Format>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Csv,
    Bfile,
    Text,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum MethodArg {
    Brute,
    Direct,
    Formula,
}

impl From<MethodArg> for Method {
    fn from(m: MethodArg) -> Method {
        match m {
            MethodArg::Brute => Method::Brute,
            MethodArg::Direct => Method::Direct,
            MethodArg::Formula => Method::Formula,
        }
    }
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Which {
    /// Single-hole 1234-avoider to free path; hole-free 123-avoider to Dyck path.
    Dyck,
    /// Single-hole 1234-avoider to 1324-avoider.
    #[value(name = "1324")]
    B1324,
    /// The six-step map on a transversal, with every intermediate matching.
    #[value(name = "keylemma")]
    SixStep,
    /// 123-avoider to 132-avoider with the same left-to-right minima.
    Ss132,
    /// 123-avoider to 213-avoider with the same right-to-left maxima.
    Ss213,
    /// 312-avoiding partial transversal to 231-avoiding one on the same diagram.
    #[value(name = "312-231")]
    P312To231,
}

#[derive(Subcommand)]
enum Command {
    /// Count the partial permutations of length n with k holes avoiding a pattern.
    Count {
        #[arg(long)]
        pattern: String,
        #[arg(long)]
        n: usize,
        #[arg(long)]
        k: Option<usize>,
        /// Comma-separated 1-based hole positions; counts s_n^H instead of s_n^k.
        #[arg(long, value_delimiter = ',')]
        holes: Option<Vec<usize>>,
        #[arg(long, value_enum, default_value = "direct")]
        method: MethodArg,
        /// Also run the other methods and fail if any disagree.
        #[arg(long)]
        cross_check: bool,
    },
    /// Run an exhaustive verification sweep.
    Verify {
        #[arg(long)]
        target: String,
        #[arg(long)]
        max_n: Option<usize>,
        #[arg(long)]
        max_size: Option<usize>,
        #[arg(long)]
        length: Option<usize>,
    },
    /// Group the patterns of one length by their avoidance counts.
    Classify {
        #[arg(long)]
        length: usize,
        #[arg(long, default_value_t = 0)]
        k: usize,
        #[arg(long, default_value_t = ppav::enumerate::DEFAULT_HORIZON)]
        max_n: usize,
        /// Compare every hole set separately.
        #[arg(long)]
        strong: bool,
    },
    /// Apply one of the bijections to a single input.
    Biject {
        #[arg(long, value_enum)]
        which: Which,
        /// Permutation, partial permutation, U/D path, or filling (rows separated by '/').
        #[arg(long)]
        input: String,
        #[arg(long)]
        inverse: bool,
        /// Number of equal bottom rows for keylemma.
        #[arg(long, default_value_t = 0)]
        k: usize,
    },
    /// Print s_n^k(p) for a range of n.
    Sequence {
        #[arg(long)]
        pattern: String,
        #[arg(long, default_value_t = 1)]
        k: usize,
        #[arg(long, default_value_t = 1)]
        min_n: usize,
        #[arg(long)]
        max_n: usize,
        #[arg(long, value_enum, default_value = "direct")]
        method: MethodArg,
    },
}

/// Failure that maps to a specific exit code.
#[derive(Debug)]
enum Exit {
    Usage(anyhow::Error),
    Failed(anyhow::Error),
}

impl From<anyhow::Error> for Exit {
    fn from(e: anyhow::Error) -> Exit {
        match e.downcast_ref::<Error>() {
            Some(Error::InvalidInput(_) | Error::FormulaNotAvailable { .. } | Error::Condition { .. }) => {
                Exit::Usage(e)
            }
            _ => Exit::Failed(e),
        }
    }
}

impl From<Error> for Exit {
    fn from(e: Error) -> Exit {
        anyhow::Error::from(e).into()
    }
}

fn parse_pattern(s: &str) -> Result<Pattern, Exit> {
    s.parse::<Perm>()
        .with_context(|| format!("bad pattern {s:?}"))
        .map_err(Exit::Usage)
}

fn print_json(v: &serde_json::Value) {
    println!("{}", serde_json::to_string_pretty(v).expect("json value"));
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    if let Some(j) = cli.jobs {
        if let Err(e) = rayon::ThreadPoolBuilder::new().num_threads(j).build_global() {
            eprintln!("error: cannot start {j} workers: {e}");
            return ExitCode::from(2);
        }
    }
    match run(cli) {
        Ok(code) => code,
        Err(Exit::Usage(e)) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
        Err(Exit::Failed(e)) => {
            eprintln!("error: {e:#}");
            ExitCode::from(1)
        }
    }
}

fn run(cli: Cli) -> Result<ExitCode, Exit> {
    let cache = cli.cache_dir.map(CountCache::new);
    let format = cli.format;
    match cli.command {
        Command::Count {
            pattern,
            n,
            k,
            holes,
            method,
            cross_check,
        } => cmd_count(
            &pattern,
            n,
            k,
            holes,
            method.into(),
            cross_check,
            cache.as_ref(),
            format.unwrap_or(Format::Text),
        ),
        Command::Verify {
            target,
            max_n,
            max_size,
            length,
        } => {
            let target: Target = target.parse()?;
            cmd_verify(
                target,
                Bounds {
                    max_n,
                    max_size,
                    length,
                },
                format.unwrap_or(Format::Json),
            )
        }
        Command::Classify {
            length,
            k,
            max_n,
            strong,
        } => {
            let c = classify(length, k, max_n, strong)?;
            match format.unwrap_or(Format::Json) {
                Format::Text => {
                    println!(
                        "horizon-limited partition of S_{length}, k={k}, n up to {max_n}{}",
                        if strong { ", strong" } else { "" }
                    );
                    for b in &c.blocks {
                        let names: Vec<String> = b.iter().map(Perm::key).collect();
                        println!("{}: {}", b.len(), names.join(" "));
                    }
                }
                _ => print_json(&serde_json::to_value(&c).expect("partition serializes")),
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Biject {
            which,
            input,
            inverse,
            k,
        } => cmd_biject(which, &input, inverse, k, format.unwrap_or(Format::Text)),
        Command::Sequence {
            pattern,
            k,
            min_n,
            max_n,
            method,
        } => {
            let p = parse_pattern(&pattern)?;
            let method: Method = method.into();
            let mut terms = Vec::new();
            for n in min_n.max(k)..=max_n {
                let c = match (&cache, method) {
                    (Some(cache), Method::Direct) => cache.count(&p, n, k)?,
                    _ => count(n, k, &p, method)?,
                };
                terms.push(Term { n, count: c });
            }
            let out = match format.unwrap_or(Format::Csv) {
                Format::Csv => to_csv(&terms),
                Format::Json => to_json(&terms) + "\n",
                Format::Bfile => to_bfile(&terms, 0),
                Format::Text => terms.iter().map(|t| t.count.to_string()).collect::<Vec<_>>().join(", ") + "\n",
            };
            print!("{out}");
            Ok(ExitCode::SUCCESS)
        }
    }
}

#[allow(clippy::too_many_arguments)]
fn cmd_count(
    pattern: &str,
    n: usize,
    k: Option<usize>,
    holes: Option<Vec<usize>>,
    method: Method,
    cross_check: bool,
    cache: Option<&CountCache>,
    format: Format,
) -> Result<ExitCode, Exit> {
    let p = parse_pattern(pattern)?;
    let holes = holes.map(|h| HoleSet::new(h, n)).transpose()?;
    let k = match (&holes, k) {
        (Some(h), Some(k)) if h.len() != k => {
            return Err(Exit::Usage(anyhow!(
                "--k {k} does not match {} hole positions",
                h.len()
            )));
        }
        (Some(h), _) => h.len(),
        (None, Some(k)) => k,
        (None, None) => 0,
    };
    if k > n {
        return Err(Exit::Usage(anyhow!("k = {k} exceeds n = {n}")));
    }
    let value = match &holes {
        Some(h) => match method {
            Method::Direct => count_h(n, h, &p)?,
            Method::Brute => ppav::enumerate::count_h_brute(n, h, &p)?,
            Method::Formula => return Err(Exit::Usage(anyhow!("no closed form for a fixed hole set"))),
        },
        None => match (cache, method) {
            (Some(c), Method::Direct) => c.count(&p, n, k)?,
            _ => count(n, k, &p, method)?,
        },
    };
    let mut checks = Vec::new();
    if cross_check {
        let others: Vec<(Method, Option<u64>)> = match &holes {
            Some(h) => vec![
                (Method::Direct, Some(count_h(n, h, &p)?)),
                (Method::Brute, Some(ppav::enumerate::count_h_brute(n, h, &p)?)),
            ],
            None => vec![
                (Method::Direct, Some(count(n, k, &p, Method::Direct)?)),
                (Method::Brute, Some(count(n, k, &p, Method::Brute)?)),
                (Method::Formula, closed_form(&p, k, n)?),
            ],
        };
        checks = others;
    }
    let mismatch: Vec<String> = checks
        .iter()
        .filter_map(|(m, v)| v.filter(|&v| v != value).map(|v| format!("{m:?} gives {v}")))
        .collect();
    match format {
        Format::Json => print_json(&json!({
            "pattern": p.key(),
            "n": n,
            "k": k,
            "holes": holes.as_ref().map(|h| h.indices().to_vec()),
            "method": method,
            "count": value,
            "cross_check": checks.iter().map(|(m, v)| json!({"method": m, "count": v})).collect::<Vec<_>>(),
        })),
        _ => println!("{value}"),
    }
    if !mismatch.is_empty() {
        return Err(Exit::Failed(anyhow!(
            "cross-check mismatch against {value}: {}",
            mismatch.join(", ")
        )));
    }
    Ok(ExitCode::SUCCESS)
}

fn cmd_verify(target: Target, bounds: Bounds, format: Format) -> Result<ExitCode, Exit> {
    let start = Instant::now();
    let v = verify::run(target, bounds)?;
    let elapsed_ms = start.elapsed().as_millis() as u64;
    match format {
        Format::Text => {
            println!(
                "{} {}: {} ({} cases)",
                if v.passed { "PASS" } else { "FAIL" },
                v.target,
                v.claim,
                v.cases
            );
            for f in &v.failures {
                println!("  {f}");
            }
        }
        _ => {
            let mut value = serde_json::to_value(&v).expect("verdict serializes");
            value["elapsed_ms"] = json!(elapsed_ms);
            print_json(&value);
        }
    }
    Ok(if v.passed { ExitCode::SUCCESS } else { ExitCode::from(1) })
}

fn parse_filling(s: &str) -> Result<PartialFilling, Exit> {
    if s.contains("shape=") {
        return Ok(s.replace(['/', ';'], "\n").parse()?);
    }
    let p: Perm = s
        .parse()
        .with_context(|| format!("{s:?} is neither a filling nor a permutation"))
        .map_err(Exit::Usage)?;
    Ok(PartialFilling::from_perm(&p))
}

fn cmd_biject(which: Which, input: &str, inverse: bool, k: usize, format: Format) -> Result<ExitCode, Exit> {
    let mut steps: Vec<(&str, String)> = Vec::new();
    let mut trace = None;
    match which {
        Which::Dyck => {
            if inverse {
                let path: LatticePath = input.parse()?;
                let pi = path_to_hole_bijection(&path)?;
                steps.push(("path", path.to_string()));
                if path.is_dyck() {
                    steps.push(("as a Dyck path", dyck_to_perm123(&path)?.to_string()));
                }
                steps.push(("output", pi.to_string()));
            } else {
                let pi: PartialPerm = input.parse()?;
                match pi.k() {
                    0 => {
                        let sigma = pi.without_holes();
                        steps.push(("permutation", sigma.to_string()));
                        steps.push(("output", perm123_to_dyck(&sigma)?.to_string()));
                    }
                    1 => {
                        let sigma = pi.without_holes();
                        let dyck = perm123_to_dyck(&sigma)?;
                        steps.push(("without hole", sigma.to_string()));
                        steps.push(("dyck path", dyck.to_string()));
                        steps.push(("hole position", pi.holes().indices()[0].to_string()));
                        let out = hole_bijection_to_path(&pi)?;
                        steps.push(("length", out.len().to_string()));
                        steps.push(("output", out.to_string()));
                    }
                    _ => return Err(Exit::Usage(anyhow!("dyck takes at most one hole"))),
                }
            }
        }
        Which::B1324 => {
            let pi: PartialPerm = input.parse()?;
            let out = if inverse {
                bijection_1324_1234(&pi)?
            } else {
                bijection_1234_1324(&pi)?
            };
            steps.push(("input", pi.to_string()));
            steps.push(("output", out.to_string()));
        }
        Which::Ss132 | Which::Ss213 => {
            let target = if which == Which::Ss132 {
                SsTarget::P132
            } else {
                SsTarget::P213
            };
            let p: Perm = input.parse()?;
            let out = if inverse {
                simion_schmidt_inverse(&p, target)?
            } else {
                simion_schmidt(&p, target)?
            };
            steps.push(("input", p.to_string()));
            steps.push(("output", out.to_string()));
        }
        Which::SixStep => {
            let f = parse_filling(input)?;
            if inverse {
                let g = key_bijection_inverse(&f, k)?;
                steps.push(("output", g.to_string()));
            } else {
                let t = key_bijection_traced(&f, k)?;
                steps.push(("encoded", t.encoded.to_string()));
                steps.push(("step 1: psi", t.step1_psi.to_string()));
                steps.push(("step 2: add edge", t.step2_add_edge.to_string()));
                steps.push(("step 3: reverse", t.step3_reverse.to_string()));
                steps.push(("step 4: psi inverse", t.step4_psi_inverse.to_string()));
                steps.push(("step 5: remove edge", t.step5_remove_edge.to_string()));
                steps.push(("step 6: reverse", t.step6_reverse.to_string()));
                steps.push(("output", t.output.to_string()));
                trace = Some(serde_json::to_value(&t).expect("trace serializes"));
            }
        }
        Which::P312To231 => {
            let f = parse_filling(input)?;
            let g = if inverse {
                partial_231_to_312(&f)?
            } else {
                partial_312_to_231(&f)?
            };
            steps.push(("output", g.to_string()));
        }
    }
    match format {
        Format::Json => {
            let mut v = json!({ "input": input, "steps": steps.iter().map(|(a, b)| json!({"step": a, "value": b})).collect::<Vec<_>>() });
            if let Some(t) = trace {
                v["trace"] = t;
            }
            print_json(&v);
        }
        _ => {
            for (name, value) in &steps {
                if value.contains('\n') {
                    println!("{name}:\n{value}");
                } else {
                    println!("{name}: {value}");
                }
            }
        }
    }
    Ok(ExitCode::SUCCESS)
}
