use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use fixnum_core::families;
use fixnum_core::fixing::DEFAULT_EXHAUSTIVE_CAP;
use fixnum_core::report::{analyze, AnalysisOptions};
use fixnum_core::verify;
use fixnum_core::{Error, FixingAnalysis, Graph};

#[derive(Parser)]
#[command(name = "fixnum", version, about = "Fixing numbers and fractional fixing numbers of graphs")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Generate a graph from a named family.
    Gen(GenArgs),
    /// Report symmetry and fixing invariants of a graph file.
    Analyze(AnalyzeArgs),
    /// Write the fixed graph I(G) and its incidence matrix B.
    Fixedgraph(FixedGraphArgs),
    /// Run a verification suite, or `all`.
    Verify(VerifyArgs),
}

#[derive(Args)]
struct GenArgs {
    /// path, cycle, complete, null, star, multipartite, complete-minus-edge,
    /// complete-minus-matching, wheel, fan, friendship, c-gadget, grid,
    /// hamming, johnson, spider, tree, er, random-tree, join, corona,
    /// composition, union, double
    family: String,
    /// Integer (or probability) parameters of the family.
    params: Vec<String>,
    /// Left operand of a product, as a graph file.
    #[arg(long)]
    left: Option<PathBuf>,
    /// Right operand of a product, as a graph file.
    #[arg(long)]
    right: Option<PathBuf>,
    #[arg(short, long)]
    out: Option<PathBuf>,
}

#[derive(Args)]
struct AnalyzeArgs {
    input: PathBuf,
    #[arg(long)]
    json: bool,
    #[arg(long)]
    with_upper_fixing: bool,
    #[arg(long)]
    with_fixed_number: bool,
    #[arg(long)]
    with_dimf: bool,
    /// Vertex cap for the exhaustive computations.
    #[arg(long, env = "FIXNUM_CAP")]
    cap: Option<usize>,
}

#[derive(Args)]
struct FixedGraphArgs {
    input: PathBuf,
    /// Output path for the fixed graph JSON.
    #[arg(short, long)]
    out: Option<PathBuf>,
    /// Output path for the B matrix text.
    #[arg(long)]
    matrix: Option<PathBuf>,
    #[arg(long)]
    json: bool,
    /// Vertex cap for the k-fixed check.
    #[arg(long, env = "FIXNUM_CAP")]
    cap: Option<usize>,
}

#[derive(Args)]
struct VerifyArgs {
    /// Suite name or `all`.
    suite: String,
    #[arg(long)]
    json: bool,
}

enum Failure {
    Lib(Error),
    Usage(String),
    Assertion(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Lib(e)
    }
}

type CmdResult = Result<(), Failure>;

fn main() -> ExitCode {
    let cli = Cli::parse();
    let res = match cli.command {
        Command::Gen(a) => cmd_gen(a),
        Command::Analyze(a) => cmd_analyze(a),
        Command::Fixedgraph(a) => cmd_fixedgraph(a),
        Command::Verify(a) => cmd_verify(a),
    };
    match res {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Assertion(msg)) => {
            eprintln!("fixnum: {msg}");
            ExitCode::from(1)
        }
        Err(Failure::Usage(msg)) => {
            eprintln!("fixnum: {msg}");
            ExitCode::from(2)
        }
        Err(Failure::Lib(e)) => {
            eprintln!("fixnum: {e}");
            match e {
                Error::CapExceeded { .. } => ExitCode::from(3),
                _ => ExitCode::from(2),
            }
        }
    }
}

fn usize_params(family: &str, params: &[String], want: usize) -> Result<Vec<usize>, Failure> {
    if params.len() != want {
        return Err(Failure::Usage(format!(
            "{family} takes {want} integer parameter(s), got {}",
            params.len()
        )));
    }
    params
        .iter()
        .map(|p| {
            p.parse::<usize>()
                .map_err(|_| Failure::Usage(format!("{family}: `{p}` is not a non-negative integer")))
        })
        .collect()
}

fn operand(path: &Option<PathBuf>, flag: &str, family: &str) -> Result<Graph, Failure> {
    let p = path
        .as_ref()
        .ok_or_else(|| Failure::Usage(format!("{family} needs --{flag} <graph file>")))?;
    Ok(Graph::read_file(p)?)
}

fn generate(a: &GenArgs) -> Result<Graph, Failure> {
    let f = a.family.as_str();
    let p = &a.params;
    let one = |n| usize_params(f, p, n);
    let g = match f {
        "path" => families::path(one(1)?[0])?,
        "cycle" => families::cycle(one(1)?[0])?,
        "complete" => families::complete(one(1)?[0])?,
        "null" => families::null(one(1)?[0])?,
        "star" => families::star(one(1)?[0])?,
        "multipartite" => {
            let parts = usize_params(f, p, p.len().max(1))?;
            families::complete_multipartite(&parts)?
        }
        "complete-minus-edge" => families::complete_minus_edge(one(1)?[0])?,
        "complete-minus-matching" => families::complete_minus_perfect_matching(one(1)?[0])?,
        "wheel" => families::wheel(one(1)?[0])?,
        "fan" => families::fan(one(1)?[0])?,
        "friendship" => families::friendship(one(1)?[0])?,
        "c-gadget" => families::c_gadget(one(1)?[0])?,
        "grid" => {
            let v = one(2)?;
            families::grid(v[0], v[1])?
        }
        "hamming" => {
            let v = one(2)?;
            families::hamming(v[0], v[1])?
        }
        "johnson" => {
            let v = one(2)?;
            families::johnson(v[0], v[1])?
        }
        "spider" => {
            let v = one(2)?;
            families::spider(v[0], v[1])?
        }
        "tree" => {
            let v = one(2)?;
            families::tree_with_fixf(v[0], v[1])?
        }
        "random-tree" => {
            let v = one(2)?;
            families::random_tree(v[0], v[1] as u64)?
        }
        "er" => {
            if p.len() != 3 {
                return Err(Failure::Usage("er takes <n> <p> <seed>".into()));
            }
            let n = p[0].parse::<usize>().map_err(|_| Failure::Usage(format!("er: bad n `{}`", p[0])))?;
            let prob = p[1]
                .parse::<f64>()
                .ok()
                .filter(|x| (0.0..=1.0).contains(x))
                .ok_or_else(|| Failure::Usage(format!("er: bad probability `{}`", p[1])))?;
            let seed = p[2].parse::<u64>().map_err(|_| Failure::Usage(format!("er: bad seed `{}`", p[2])))?;
            families::erdos_renyi(n, prob, seed)?
        }
        "join" | "corona" | "composition" | "union" => {
            one(0)?;
            let l = operand(&a.left, "left", f)?;
            let r = operand(&a.right, "right", f)?;
            match f {
                "join" => families::join(&l, &r)?,
                "corona" => families::corona(&l, &r)?,
                "composition" => families::composition(&l, &r)?,
                _ => families::disjoint_union(&l, &r)?,
            }
        }
        "double" => {
            one(0)?;
            families::double_graph(&operand(&a.left, "left", f)?)?
        }
        other => return Err(Failure::Usage(format!("unknown family `{other}`; see `fixnum gen --help`"))),
    };
    Ok(g)
}

fn cmd_gen(a: GenArgs) -> CmdResult {
    let g = generate(&a)?;
    let json = g.to_json();
    let label = g.name().unwrap_or(&a.family).to_string();
    match &a.out {
        Some(path) => {
            std::fs::write(path, &json).map_err(Error::from)?;
            println!("{label}: n={} m={} -> {}", g.order(), g.size(), path.display());
        }
        None => {
            eprintln!("{label}: n={} m={}", g.order(), g.size());
            println!("{json}");
        }
    }
    Ok(())
}

fn cap(flag: Option<usize>) -> usize {
    flag.unwrap_or(DEFAULT_EXHAUSTIVE_CAP)
}

fn cmd_analyze(a: AnalyzeArgs) -> CmdResult {
    let g = Graph::read_file(&a.input)?;
    let opts = AnalysisOptions {
        upper_fixing: a.with_upper_fixing,
        fixed_number: a.with_fixed_number,
        dim_f: a.with_dimf,
        cap: cap(a.cap),
    };
    let report = analyze(&g, &opts)?;
    if a.json {
        println!("{}", serde_json::to_string_pretty(&report).map_err(Error::from)?);
    } else {
        print!("{}", report.to_table());
    }
    let errors = report.consistency_errors();
    if errors.is_empty() {
        Ok(())
    } else {
        Err(Failure::Assertion(errors.join("; ")))
    }
}

fn write(path: &Path, text: &str) -> CmdResult {
    std::fs::write(path, text).map_err(Error::from)?;
    Ok(())
}

fn cmd_fixedgraph(a: FixedGraphArgs) -> CmdResult {
    let g = Graph::read_file(&a.input)?;
    let fa = FixingAnalysis::new(&g);
    let fg = fa.fixed_graph();
    let json = fg.to_json();
    if let Some(p) = &a.out {
        write(p, &json)?;
    }
    if let Some(p) = &a.matrix {
        write(p, &fg.b_matrix_text())?;
    }
    if a.json {
        println!("{json}");
        return Ok(());
    }
    println!("active pairs   {}", fg.pairs().len());
    println!("|E(I(G))|      {}", fg.edge_count());
    let cap = cap(a.cap);
    if fa.is_rigid() || g.order() > cap {
        return Ok(());
    }
    match fa.edge_bound_check(cap) {
        Ok(b) => {
            println!(
                "k-fixed        k = {}, l = {}: {} <= {} <= {} ({})",
                b.k,
                b.l,
                b.lower,
                b.edges,
                b.upper,
                if b.holds() { "holds" } else { "VIOLATED" }
            );
            if !b.holds() {
                return Err(Failure::Assertion("edge bound violated".into()));
            }
        }
        Err(Error::Precondition(msg)) => println!("k-fixed        no ({msg})"),
        Err(e) => return Err(e.into()),
    }
    Ok(())
}

fn cmd_verify(a: VerifyArgs) -> CmdResult {
    let reports = if a.suite == "all" {
        verify::run_all()
    } else {
        match verify::run_suite(&a.suite) {
            Ok(r) => vec![r],
            Err(_) => {
                return Err(Failure::Usage(format!(
                    "unknown suite `{}`; available: all, {}",
                    a.suite,
                    verify::suite_names().join(", ")
                )))
            }
        }
    };
    if a.json {
        println!("{}", serde_json::to_string_pretty(&reports).map_err(Error::from)?);
    } else {
        for r in &reports {
            print!("{}", r.render());
        }
    }
    let failed: Vec<&str> = reports.iter().filter(|r| !r.passed()).map(|r| r.name).collect();
    if failed.is_empty() {
        Ok(())
    } else {
        Err(Failure::Assertion(format!("failing suites: {}", failed.join(", "))))
    }
}
