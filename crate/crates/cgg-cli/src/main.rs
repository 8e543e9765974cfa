//! Command-line front end: construct the extremal graphs, verify graph
//! files, evaluate the closed-form maximum, certify it by search, and print
//! value tables.
//!
//! Exit status: 0 on success or a passing verification, 1 on a failing
//! verification (or a search that provably disagrees with the closed form),
//! 2 on usage errors.

use std::fs;
use std::io::Write as _;
use std::path::PathBuf;
use std::process::ExitCode;

use anyhow::{anyhow, Context};
use clap::{Args, Parser, Subcommand, ValueEnum};

use cgg::{
    extended_arc_graph, extremal_graph, f_max, max_arc_graph, parse, render_dot, render_svg,
    search_f, serialize, verify_graph, Cgg, FmaxClause, Meta, RenderOptions, VerifyOptions,
};

#[derive(Parser)]
#[command(
    name = "cgg",
    version,
    about = "Extremal convex geometric graphs with a free boundary arc"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Build an extremal graph and write it as JSON, SVG, or DOT.
    Construct(ConstructArgs),
    /// Check a graph file against the extremal properties.
    Verify(VerifyArgs),
    /// Evaluate the closed-form maximum edge count.
    Fmax(FmaxArgs),
    /// Certify the closed form by exhaustive branch-and-bound search.
    Search(SearchArgs),
    /// Print the table of maximum edge counts.
    Table(TableArgs),
}

#[derive(Args)]
struct ConstructArgs {
    /// Number of vertices.
    #[arg(long)]
    n: u32,
    /// Cap on pairwise disjoint edges.
    #[arg(long)]
    k: u32,
    /// Extend the free arc by this many vertices beyond n-2k.
    #[arg(long, conflicts_with = "q")]
    ell: Option<u32>,
    /// Request a free arc of this order (picks the right construction).
    #[arg(long)]
    q: Option<u32>,
    /// Output file; standard output when omitted.
    #[arg(long)]
    out: Option<PathBuf>,
    #[arg(long, value_enum, default_value_t = Format::Json)]
    format: Format,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Svg,
    Dot,
}

#[derive(Args)]
struct VerifyArgs {
    /// Graph file produced by `construct` (JSON).
    file: PathBuf,
    /// Cap on pairwise disjoint edges to verify against.
    #[arg(long)]
    k: u32,
    /// Claimed free-arc order; falls back to the file's metadata.
    #[arg(long)]
    q: Option<u32>,
    /// Emit the full report as JSON instead of text.
    #[arg(long)]
    json: bool,
}

#[derive(Args)]
struct FmaxArgs {
    #[arg(long)]
    n: u32,
    #[arg(long)]
    k: u32,
    #[arg(long)]
    q: u32,
    #[arg(long)]
    json: bool,
}

#[derive(Args)]
struct SearchArgs {
    #[arg(long)]
    n: u32,
    #[arg(long)]
    k: u32,
    #[arg(long)]
    q: u32,
    /// Node budget; exhaustion is reported, not an error.
    #[arg(long, default_value_t = 10_000_000)]
    budget: u64,
    #[arg(long)]
    json: bool,
}

#[derive(Args)]
struct TableArgs {
    /// Largest n to tabulate (from 4 up).
    #[arg(long)]
    n_max: u32,
    #[arg(long, conflicts_with = "csv")]
    json: bool,
    #[arg(long)]
    csv: bool,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}

fn run(cli: Cli) -> anyhow::Result<ExitCode> {
    match cli.command {
        Command::Construct(args) => construct(args),
        Command::Verify(args) => verify(args),
        Command::Fmax(args) => fmax_cmd(args),
        Command::Search(args) => search_cmd(args),
        Command::Table(args) => table_cmd(args),
    }
}

fn build_graph(args: &ConstructArgs) -> anyhow::Result<(Cgg, Meta)> {
    let (n, k) = (args.n, args.k);
    match (args.ell, args.q) {
        (Some(ell), None) => {
            let g = extended_arc_graph(n, k, ell)?;
            let meta = Meta {
                construction: Some("extended_arc".into()),
                ell: Some(ell),
                k: Some(k),
                q: Some(n - 2 * k + ell),
            };
            Ok((g, meta))
        }
        (None, Some(q)) => {
            let g = extremal_graph(n, k, q)?;
            let name = if q <= n.saturating_sub(2 * k) {
                "max_arc"
            } else if q < n - k {
                "extended_arc"
            } else {
                "star"
            };
            let meta = Meta {
                construction: Some(name.into()),
                ell: (name == "extended_arc").then(|| q - (n - 2 * k)),
                k: Some(k),
                q: Some(q),
            };
            Ok((g, meta))
        }
        (None, None) => {
            let g = max_arc_graph(n, k)?;
            let meta = Meta {
                construction: Some("max_arc".into()),
                ell: None,
                k: Some(k),
                q: Some(n - 2 * k),
            };
            Ok((g, meta))
        }
        (Some(_), Some(_)) => unreachable!("clap rejects the combination"),
    }
}

fn construct(args: ConstructArgs) -> anyhow::Result<ExitCode> {
    let (g, meta) = build_graph(&args)?;
    let text = match args.format {
        Format::Json => serialize(&g, Some(&meta)),
        Format::Svg => render_svg(&g, &RenderOptions::for_construction(&g, &meta)),
        Format::Dot => render_dot(&g, &RenderOptions::for_construction(&g, &meta)),
    };
    match &args.out {
        Some(path) => {
            fs::write(path, text).with_context(|| format!("writing {}", path.display()))?
        }
        None => {
            std::io::stdout().write_all(text.as_bytes())?;
        }
    }
    Ok(ExitCode::SUCCESS)
}

fn verify(args: VerifyArgs) -> anyhow::Result<ExitCode> {
    let text = fs::read_to_string(&args.file)
        .with_context(|| format!("reading {}", args.file.display()))?;
    let (g, meta) = parse(&text)?;
    let meta = meta.unwrap_or_default();
    let q = args.q.or(meta.q).unwrap_or(0);
    let opts = VerifyOptions {
        expect_max_arc: meta.construction.as_deref() == Some("max_arc"),
    };
    let report = verify_graph(&g, args.k, q, opts);

    if args.json {
        println!("{}", serde_json::to_string_pretty(&report)?);
    } else {
        println!(
            "graph: n = {}, {} edges, max disjoint set {}, longest free arc {}",
            report.n, report.edge_count, report.max_disjoint.size, report.free_arcs.max_len
        );
        for check in &report.checks {
            println!(
                "  [{}] {}: {}",
                if check.passed { "pass" } else { "FAIL" },
                check.name,
                check.detail
            );
        }
        println!("{}", if report.passed { "PASS" } else { "FAIL" });
    }
    Ok(if report.passed {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(1)
    })
}

fn clause_text(clause: FmaxClause) -> &'static str {
    match clause {
        FmaxClause::QAtMostNMinus2k => "1",
        FmaxClause::Middle => "2",
        FmaxClause::QAtLeastNMinusK => "3",
    }
}

fn fmax_cmd(args: FmaxArgs) -> anyhow::Result<ExitCode> {
    let r = f_max(args.n, args.k, args.q)?;
    if args.json {
        println!("{}", serde_json::to_string_pretty(&r)?);
    } else {
        println!(
            "f({}, {}, {}) = {} (clause {}{})",
            args.n,
            args.k,
            args.q,
            r.value,
            clause_text(r.clause),
            if r.clause == FmaxClause::Middle {
                format!(", ell = {}", r.ell)
            } else {
                String::new()
            }
        );
    }
    Ok(ExitCode::SUCCESS)
}

fn search_cmd(args: SearchArgs) -> anyhow::Result<ExitCode> {
    let cert = search_f(args.n, args.k, args.q, args.budget)?;
    let expected = f_max(args.n, args.k, args.q)?.value;
    if args.json {
        let mut value = serde_json::to_value(&cert)?;
        value["fmax"] = serde_json::json!(expected);
        value["matches_fmax"] = serde_json::json!(cert.optimum as i64 == expected);
        println!("{}", serde_json::to_string_pretty(&value)?);
    } else {
        println!(
            "search optimum {} ({} nodes{}), closed form {}",
            cert.optimum,
            cert.nodes_explored,
            if cert.budget_exhausted {
                ", budget exhausted: value is only a lower bound"
            } else {
                ""
            },
            expected
        );
    }
    let disagrees = !cert.budget_exhausted && cert.optimum as i64 != expected;
    Ok(if disagrees {
        ExitCode::from(1)
    } else {
        ExitCode::SUCCESS
    })
}

fn table_cmd(args: TableArgs) -> anyhow::Result<ExitCode> {
    if args.n_max < 4 {
        return Err(anyhow!("--n-max must be at least 4"));
    }
    let q_max = args.n_max - 1;
    if args.json {
        let mut rows = Vec::new();
        for n in 4..=args.n_max {
            for k in 1..=(n / 2 - 1) {
                for q in 1..n {
                    let r = f_max(n, k, q)?;
                    rows.push(serde_json::json!({
                        "n": n, "k": k, "q": q,
                        "value": r.value,
                        "clause": clause_text(r.clause),
                    }));
                }
            }
        }
        println!("{}", serde_json::to_string_pretty(&rows)?);
        return Ok(ExitCode::SUCCESS);
    }

    let sep = if args.csv { "," } else { " " };
    let cell_width = if args.csv { 0 } else { 5 };
    let mut header = format!("{:>3}{sep}{:>3}", "n", "k");
    for q in 1..=q_max {
        header.push_str(sep);
        header.push_str(&format!("{:>cell_width$}", format!("q={q}")));
    }
    println!("{header}");
    for n in 4..=args.n_max {
        for k in 1..=(n / 2 - 1) {
            let mut row = format!("{n:>3}{sep}{k:>3}");
            for q in 1..=q_max {
                row.push_str(sep);
                let cell = if q < n {
                    f_max(n, k, q)?.value.to_string()
                } else {
                    String::new()
                };
                row.push_str(&format!("{cell:>cell_width$}"));
            }
            println!("{row}");
        }
    }
    Ok(ExitCode::SUCCESS)
}
