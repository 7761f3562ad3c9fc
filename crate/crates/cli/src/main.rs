mod claims;
mod input;

use anyhow::{bail, Context, Result};
use clap::{Parser, Subcommand, ValueEnum};
use geodekit::bounds::{self, product_upper_old, product_upper_sgc};
use geodekit::families::cartesian_product;
use geodekit::solver::{self, CertificateJson, SgOptions};
use geodekit::{codec, Bracket, Graph, Outcome, SearchLimits};
use input::{parse_set, read_graph};
use serde::Serialize;
use serde_json::{json, Value};
use std::process::ExitCode;
use std::time::Duration;

/// `println!` that stops quietly when the reader hangs up, e.g. `| head`.
macro_rules! out {
    ($($arg:tt)*) => {{
        use std::io::Write;
        if let Err(e) = writeln!(std::io::stdout().lock(), $($arg)*) {
            if e.kind() != std::io::ErrorKind::BrokenPipe {
                eprintln!("error: writing output: {e}");
                std::process::exit(EXIT_ERROR.into());
            }
            std::process::exit(EXIT_OK.into());
        }
    }};
}

const EXIT_OK: u8 = 0;
const EXIT_ERROR: u8 = 1;
const EXIT_INCONCLUSIVE: u8 = 2;

/// Exact strong geodetic numbers, cores and certificates for small graphs.
///
/// Graph arguments are family specs (`K4`, `P5`, `C6`, `K(7,11)`,
/// `cocktail(6)`, `hat(K4)`, `H(3,2,4)`, `cex(4,2)`, `product(P4,P3)`, ...)
/// or `file:PATH` for an edge list or graph6 file.
#[derive(Parser)]
#[command(name = "geodekit", version)]
struct Cli {
    /// Print machine-readable JSON instead of text.
    #[arg(long, global = true)]
    json: bool,
    /// Worker threads (default: all cores).
    #[arg(long, global = true, value_name = "N")]
    workers: Option<usize>,
    /// Most geodesics enumerated for one vertex pair.
    #[arg(long, global = true, value_name = "N", default_value_t = 100_000)]
    geodesic_cap: u64,
    /// Most search nodes per solver call.
    #[arg(long, global = true, value_name = "N", default_value_t = 100_000_000)]
    node_budget: u64,
    /// Wall-clock limit per solver call.
    #[arg(long, global = true, value_name = "SECONDS")]
    time_budget: Option<f64>,
    /// Seed for randomized claims.
    #[arg(long, global = true, value_name = "N", default_value_t = 7)]
    seed: u64,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Build a graph and print it.
    Construct {
        graph: String,
        #[arg(long, value_enum, default_value_t = Format::Edges)]
        format: Format,
    },
    /// Compute an invariant with a certificate.
    Solve {
        #[arg(value_enum)]
        invariant: Invariant,
        graph: String,
        /// Vertex set for sgc-of-set: indices and inclusive ranges, e.g. 0-4,7-9.
        #[arg(long)]
        set: Option<String>,
        /// Start the sg search at g(G).
        #[arg(long)]
        use_geodetic_bound: bool,
    },
    /// Compare every bound with solved values.
    Bounds { graph: String },
    /// Build a Cartesian product, report both product upper bounds and
    /// optionally solve it.
    Product {
        left: String,
        right: String,
        #[arg(long, value_enum)]
        solve: Option<ProductSolve>,
        /// Also print the product graph.
        #[arg(long, value_enum)]
        emit: Option<Format>,
    },
    /// Run the claim registry: `all`, `fast`, `standard`, `long`, or claim ids.
    VerifyPaper {
        #[arg(
            env = "GEODEKIT_BUDGET_CLASS",
            value_delimiter = ',',
            default_value = "fast"
        )]
        selectors: Vec<String>,
        /// List the registered claims without running them.
        #[arg(long)]
        list: bool,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Edges,
    G6,
    Dot,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Invariant {
    G,
    Sg,
    Sgc,
    SgcOfSet,
    EnumerateSgSets,
}

#[derive(Clone, Copy, ValueEnum)]
enum ProductSolve {
    Sg,
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { EXIT_ERROR } else { EXIT_OK });
        }
    };
    match run(&cli) {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(EXIT_ERROR)
        }
    }
}

fn limits(cli: &Cli) -> Result<SearchLimits> {
    let mut limits = SearchLimits::default()
        .with_geodesic_cap(cli.geodesic_cap)
        .with_node_budget(cli.node_budget);
    if let Some(secs) = cli.time_budget {
        if !(secs > 0.0 && secs.is_finite()) {
            bail!("--time-budget must be positive");
        }
        limits = limits.with_time_budget(Duration::from_secs_f64(secs));
    }
    if cli.geodesic_cap == 0 || cli.node_budget == 0 {
        bail!("limits must be positive");
    }
    Ok(limits)
}

fn run(cli: &Cli) -> Result<u8> {
    if let Some(n) = cli.workers {
        rayon::ThreadPoolBuilder::new()
            .num_threads(n)
            .build_global()
            .context("configuring worker threads")?;
    }
    let limits = limits(cli)?;
    match &cli.command {
        Command::Construct { graph, format } => {
            let g = read_graph(graph)?;
            print!("{}", render(&g, *format)?);
            Ok(EXIT_OK)
        }
        Command::Solve {
            invariant,
            graph,
            set,
            use_geodetic_bound,
        } => solve(
            cli,
            &limits,
            *invariant,
            graph,
            set.as_deref(),
            *use_geodetic_bound,
        ),
        Command::Bounds { graph } => {
            let g = read_graph(graph)?;
            let report = bounds::check_bounds(&g, &limits)?.with_label(graph.clone());
            if cli.json {
                out!("{}", serde_json::to_string_pretty(&report)?);
            } else {
                print!("{}", report.to_text());
            }
            Ok(if !report.violations().is_empty() {
                EXIT_ERROR
            } else if report.sgc.value().is_none() || report.g.value().is_none() {
                EXIT_INCONCLUSIVE
            } else {
                EXIT_OK
            })
        }
        Command::Product {
            left,
            right,
            solve,
            emit,
        } => product(cli, &limits, left, right, solve.is_some(), *emit),
        Command::VerifyPaper { selectors, list } => verify(cli, &limits, selectors, *list),
    }
}

fn render(g: &Graph, format: Format) -> Result<String> {
    Ok(match format {
        Format::Edges => codec::write_edge_list(g),
        Format::G6 => codec::write_graph6(g)? + "\n",
        Format::Dot => codec::write_dot(g),
    })
}

#[derive(Serialize)]
struct Inconclusive<'a> {
    invariant: &'a str,
    graph: &'a str,
    status: &'static str,
    lower: usize,
    upper: usize,
    limit: String,
}

fn report_inconclusive(cli: &Cli, invariant: &str, graph: &str, b: &Bracket) -> Result<u8> {
    if cli.json {
        let out = Inconclusive {
            invariant,
            graph,
            status: "inconclusive",
            lower: b.lower,
            upper: b.upper,
            limit: b.limit.to_string(),
        };
        out!("{}", serde_json::to_string_pretty(&out)?);
    } else {
        out!(
            "{invariant}: inconclusive, value in [{}, {}], stopped by {}",
            b.lower, b.upper, b.limit
        );
    }
    Ok(EXIT_INCONCLUSIVE)
}

fn certificate_output(
    cli: &Cli,
    invariant: &str,
    graph: &str,
    cert: CertificateJson,
) -> Result<()> {
    if cli.json {
        let mut value = serde_json::to_value(&cert)?;
        let obj = value.as_object_mut().expect("certificate is an object");
        obj.insert("invariant".into(), json!(invariant));
        obj.insert("graph".into(), json!(graph));
        out!("{}", serde_json::to_string_pretty(&value)?);
        return Ok(());
    }
    out!("{invariant} = {}", cert.value);
    out!("set: {}", braces(&cert.set));
    if let Some(core) = &cert.core {
        out!("core: {}", braces(core));
    }
    out!("paths:");
    for pp in &cert.paths {
        let walk: Vec<String> = pp.path.vertices().iter().map(ToString::to_string).collect();
        out!("  {} {}: {}", pp.pair.0, pp.pair.1, walk.join(" "));
    }
    Ok(())
}

fn braces(vs: &[usize]) -> String {
    let items: Vec<String> = vs.iter().map(ToString::to_string).collect();
    format!("{{{}}}", items.join(","))
}

fn solve(
    cli: &Cli,
    limits: &SearchLimits,
    invariant: Invariant,
    graph: &str,
    set: Option<&str>,
    use_g: bool,
) -> Result<u8> {
    let g = read_graph(graph)?;
    if set.is_some() && invariant != Invariant::SgcOfSet {
        bail!("--set only applies to sgc-of-set");
    }
    match invariant {
        Invariant::G => match solver::geodetic_number(&g, limits)? {
            Outcome::Proved(s) => {
                if cli.json {
                    let out = json!({"invariant": "g", "graph": graph, "set": s.set, "value": s.value, "status": "proved"});
                    out!("{}", serde_json::to_string_pretty(&out)?);
                } else {
                    out!("g = {}\nset: {}", s.value, s.set);
                }
                Ok(EXIT_OK)
            }
            Outcome::Inconclusive(b) => report_inconclusive(cli, "g", graph, &b),
        },
        Invariant::Sg => {
            let options = SgOptions {
                use_geodetic_bound: use_g,
            };
            match solver::strong_geodetic_number_with(&g, limits, options)? {
                Outcome::Proved(s) => {
                    certificate_output(cli, "sg", graph, s.certificate.to_json())?;
                    Ok(EXIT_OK)
                }
                Outcome::Inconclusive(b) => report_inconclusive(cli, "sg", graph, &b),
            }
        }
        Invariant::Sgc => match solver::strong_geodetic_core_number(&g, limits)? {
            Outcome::Proved(c) => {
                certificate_output(cli, "sgc", graph, c.certificate.to_json())?;
                Ok(EXIT_OK)
            }
            Outcome::Inconclusive(b) => report_inconclusive(cli, "sgc", graph, &b),
        },
        Invariant::SgcOfSet => {
            let text = set.context("sgc-of-set needs --set")?;
            let s = parse_set(text, g.order())?;
            match solver::sgc_of_set(&g, &s, limits)? {
                Outcome::Proved(c) => {
                    certificate_output(cli, "sgc-of-set", graph, c.certificate.to_json())?;
                    Ok(EXIT_OK)
                }
                Outcome::Inconclusive(b) => report_inconclusive(cli, "sgc-of-set", graph, &b),
            }
        }
        Invariant::EnumerateSgSets => match solver::enumerate_min_sg_sets(&g, limits)? {
            Outcome::Proved(all) => {
                if cli.json {
                    let out = json!({
                        "invariant": "enumerate-sg-sets",
                        "graph": graph,
                        "value": all.value,
                        "sets": all.sets,
                        "complete": all.complete,
                        "limit": all.limit.map(|l| l.to_string()),
                        "status": if all.complete { "proved" } else { "inconclusive" },
                    });
                    out!("{}", serde_json::to_string_pretty(&out)?);
                } else {
                    out!("sg = {}", all.value);
                    out!("{} minimum strong geodetic set(s):", all.sets.len());
                    for s in &all.sets {
                        out!("  {s}");
                    }
                    if let Some(l) = all.limit {
                        out!("incomplete: stopped by {l}");
                    }
                }
                Ok(if all.complete {
                    EXIT_OK
                } else {
                    EXIT_INCONCLUSIVE
                })
            }
            Outcome::Inconclusive(b) => report_inconclusive(cli, "enumerate-sg-sets", graph, &b),
        },
    }
}

#[derive(Serialize)]
struct FactorReport {
    graph: String,
    n: usize,
    sg: Option<usize>,
    sgc: Option<usize>,
}

fn factor(spec: &str, g: &Graph, limits: &SearchLimits) -> Result<FactorReport> {
    let sg = solver::strong_geodetic_number(g, limits)?
        .proved()
        .map(|s| s.value);
    let sgc = match sg {
        Some(_) => solver::strong_geodetic_core_number(g, limits)?
            .proved()
            .map(|c| c.value),
        None => None,
    };
    Ok(FactorReport {
        graph: spec.to_string(),
        n: g.order(),
        sg,
        sgc,
    })
}

fn product(
    cli: &Cli,
    limits: &SearchLimits,
    left: &str,
    right: &str,
    solve_sg: bool,
    emit: Option<Format>,
) -> Result<u8> {
    let (a, b) = (read_graph(left)?, read_graph(right)?);
    let (p, _) = cartesian_product(&a, &b)?;
    let (fa, fb) = (factor(left, &a, limits)?, factor(right, &b, limits)?);
    let (old, core) = match (fa.sg, fa.sgc, fb.sg, fb.sgc) {
        (Some(sa), Some(ca), Some(sb), Some(cb)) => {
            let (sa, ca, sb, cb) = (sa as u64, ca as u64, sb as u64, cb as u64);
            let (na, nb) = (a.order() as u64, b.order() as u64);
            (
                Some(product_upper_old(sa, na, sb, nb)),
                Some(product_upper_sgc(sa, ca, na, sb, cb, nb)),
            )
        }
        _ => (None, None),
    };
    let mut code = if old.is_some() {
        EXIT_OK
    } else {
        EXIT_INCONCLUSIVE
    };
    let mut solved: Value = Value::Null;
    if solve_sg {
        match solver::strong_geodetic_number(&p, limits)? {
            Outcome::Proved(s) => {
                s.certificate
                    .verify(&p)
                    .context("product certificate failed verification")?;
                solved = json!({"status": "proved", "value": s.value, "certificate": s.certificate.to_json()});
            }
            Outcome::Inconclusive(br) => {
                code = EXIT_INCONCLUSIVE;
                solved = json!({"status": "inconclusive", "lower": br.lower, "upper": br.upper, "limit": br.limit.to_string()});
            }
        }
    }
    if cli.json {
        let mut out = json!({
            "left": fa,
            "right": fb,
            "n": p.order(),
            "m": p.size(),
            "product_upper_old": old,
            "product_upper_sgc": core,
        });
        if solve_sg {
            out["sg"] = solved;
        }
        if let Some(f) = emit {
            out["graph"] = json!(render(&p, f)?);
        }
        out!("{}", serde_json::to_string_pretty(&out)?);
        return Ok(code);
    }
    let show = |v: Option<usize>| v.map_or("?".to_string(), |x| x.to_string());
    out!("product   {left} x {right}");
    out!("n         {}", p.order());
    out!("m         {}", p.size());
    out!(
        "left      n = {}, sg = {}, sgc = {}",
        fa.n,
        show(fa.sg),
        show(fa.sgc)
    );
    out!(
        "right     n = {}, sg = {}, sgc = {}",
        fb.n,
        show(fb.sg),
        show(fb.sgc)
    );
    out!("old bound {}", old.map_or("?".into(), |x| x.to_string()));
    out!("sgc bound {}", core.map_or("?".into(), |x| x.to_string()));
    if solve_sg {
        match solved["status"].as_str() {
            Some("proved") => {
                let v = solved["value"].as_u64().unwrap_or_default();
                let tight = core == Some(v);
                out!(
                    "sg        {v}{}",
                    if tight {
                        " (core-based bound tight)"
                    } else {
                        ""
                    }
                );
                let set: Vec<usize> = serde_json::from_value(solved["certificate"]["set"].clone())?;
                out!("sg-set    {}", braces(&set));
            }
            _ => out!(
                "sg        inconclusive, value in [{}, {}], stopped by {}",
                solved["lower"],
                solved["upper"],
                solved["limit"].as_str().unwrap_or("")
            ),
        }
    }
    if let Some(f) = emit {
        print!("{}", render(&p, f)?);
    }
    Ok(code)
}

fn verify(cli: &Cli, limits: &SearchLimits, selectors: &[String], list: bool) -> Result<u8> {
    let picked = claims::select(selectors).map_err(anyhow::Error::msg)?;
    if list {
        for c in &picked {
            out!("{:<18} {:<9} {}", c.id, c.class.to_string(), c.statement);
        }
        return Ok(EXIT_OK);
    }
    let ctx = claims::Ctx {
        limits: *limits,
        seed: cli.seed,
    };
    let records = claims::run_claims(&picked, &ctx);
    if cli.json {
        out!("{}", serde_json::to_string_pretty(&records)?);
    } else {
        out!("{:<18} {:<9} {:<12} detail", "claim", "class", "status");
        for r in &records {
            let detail = if !r.failures.is_empty() {
                r.failures.join("; ")
            } else if let Some(why) = &r.stopped {
                why.clone()
            } else {
                r.statement.to_string()
            };
            out!(
                "{:<18} {:<9} {:<12} {}",
                r.id,
                r.class.to_string(),
                r.status.to_string(),
                detail
            );
        }
        let passed = records
            .iter()
            .filter(|r| r.status == claims::Status::Pass)
            .count();
        out!("{passed} of {} claims passed", records.len());
    }
    Ok(
        if records.iter().any(|r| r.status == claims::Status::Fail) {
            EXIT_ERROR
        } else if records
            .iter()
            .any(|r| r.status == claims::Status::Inconclusive)
        {
            EXIT_INCONCLUSIVE
        } else {
            EXIT_OK
        },
    )
}
