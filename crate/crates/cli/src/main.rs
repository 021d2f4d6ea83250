use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::sync::Arc;

use clap::{Args, Parser, Subcommand};

use solvgraph_core::catalog::{self, CatalogObject};
use solvgraph_core::io::{
    describe_violations, emit_algebra, emit_graph, parse_algebra, GraphFormat, IoError,
};
use solvgraph_core::solvabilizer::PairOracle;
use solvgraph_core::{
    build_graph, components, measure, Closure, ElementSet, GraphKind, Parity, Solver, SuperAlgebra,
    Vector, VerifyConfig,
};

#[derive(Parser, Debug)]
#[command(
    name = "solvgraph",
    version,
    about = "Solvabilizers and solvable graphs of Lie superalgebras over GF(p)"
)]
struct Cli {
    /// Worker threads for the parallel kernels.
    #[arg(long, global = true, env = "SOLVGRAPH_WORKERS")]
    workers: Option<usize>,

    /// How generated subalgebras are closed.
    #[arg(long, global = true, default_value = "plain")]
    closure: Closure,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Strict check of a definition file, including the super Jacobi identity.
    Validate { file: PathBuf },
    /// Dimensions, series and solvability of an algebra.
    Info { file: PathBuf },
    /// sol(L), sol_L(z), or their nilpotent analogues.
    Sol {
        file: PathBuf,
        /// Coordinates of z, comma separated.
        #[arg(long)]
        element: Option<String>,
        #[arg(long)]
        nil: bool,
    },
    /// Build the solvable or non-solvable graph.
    Graph(GraphArgs),
    /// Run a theorem suite and print one line per check.
    Verify(VerifyArgs),
    /// Built-in algebras and morphisms.
    Catalog {
        #[command(subcommand)]
        action: CatalogAction,
    },
}

#[derive(Args, Debug)]
struct GraphArgs {
    file: PathBuf,
    #[arg(long)]
    kind: GraphKind,
    #[arg(long)]
    dot: Option<PathBuf>,
    #[arg(long)]
    csv: Option<PathBuf>,
    #[arg(long)]
    measure: bool,
}

#[derive(Args, Debug)]
struct VerifyArgs {
    suite: String,
    #[arg(long, default_value_t = 1)]
    seed: u64,
    /// Restrict generated instances to one prime.
    #[arg(long, value_parser = ["3", "5"])]
    p: Option<String>,
    #[arg(long, default_value_t = 4)]
    max_dim: usize,
    #[arg(long, default_value_t = 20)]
    trials: usize,
}

#[derive(Subcommand, Debug)]
enum CatalogAction {
    List,
    Show {
        name: String,
    },
    /// Write every algebra entry as a definition file into DIR.
    Export {
        dir: PathBuf,
    },
}

/// Exit status plus message; 1 for failed checks, 2 for usage and input errors.
struct Failure(u8, String);

type Outcome = Result<String, Failure>;

fn usage(msg: impl ToString) -> Failure {
    Failure(2, msg.to_string())
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    if let Some(n) = cli.workers {
        if n == 0 {
            eprintln!("error: --workers must be at least 1");
            return ExitCode::from(2);
        }
        if let Err(e) = rayon::ThreadPoolBuilder::new()
            .num_threads(n)
            .build_global()
        {
            eprintln!("error: {e}");
            return ExitCode::from(2);
        }
    }
    let result = run(&cli);
    let mut stdout = std::io::stdout().lock();
    match result {
        Ok(out) => {
            let _ = stdout.write_all(out.as_bytes());
            ExitCode::SUCCESS
        }
        Err(Failure(code, msg)) => {
            if code == 1 {
                let _ = stdout.write_all(msg.as_bytes());
            } else {
                eprintln!("error: {msg}");
            }
            ExitCode::from(code)
        }
    }
}

fn run(cli: &Cli) -> Outcome {
    match &cli.command {
        Command::Validate { file } => validate(file),
        Command::Info { file } => info(&*load(file)?),
        Command::Sol { file, element, nil } => sol(
            &Solver::with_closure(load(file)?, cli.closure),
            element.as_deref(),
            *nil,
        ),
        Command::Graph(args) => graph(&Solver::with_closure(load(&args.file)?, cli.closure), args),
        Command::Verify(args) => verify(args, cli.closure),
        Command::Catalog { action } => catalog_cmd(action),
    }
}

/// Reads a definition file, or `catalog:NAME` for a built-in algebra. Identity
/// violations are reported on stderr and the algebra is used as given.
fn load(file: &Path) -> Result<Arc<SuperAlgebra>, Failure> {
    let text = file.to_string_lossy();
    if let Some(name) = text.strip_prefix("catalog:") {
        let entry = catalog::catalog_get(name).map_err(usage)?;
        let CatalogObject::Algebra(a) = entry.object else {
            return Err(usage(format!("'{name}' is a morphism, not an algebra")));
        };
        warn_violations(file, &describe_violations(&a, &entry.identity_violations));
        return Ok(a);
    }
    let parsed = parse_algebra(file).map_err(|e| file_error(file, e))?;
    warn_violations(
        file,
        &describe_violations(&parsed.algebra, &parsed.violations),
    );
    Ok(Arc::new(parsed.algebra))
}

fn file_error(file: &Path, e: IoError) -> Failure {
    match e {
        IoError::Read { .. } => usage(e),
        other => usage(format!("{}: {other}", file.display())),
    }
}

fn warn_violations(file: &Path, violations: &[String]) {
    for v in violations {
        eprintln!("warning: {}: {v}", file.display());
    }
}

fn validate(file: &Path) -> Outcome {
    let parsed = parse_algebra(file).map_err(|e| file_error(file, e))?;
    let violations = describe_violations(&parsed.algebra, &parsed.violations);
    let l = &parsed.algebra;
    if violations.is_empty() {
        return Ok(format!(
            "valid: p={} dim={} ({}|{})\n",
            l.field().p(),
            l.dim(),
            l.dim_even(),
            l.dim_odd()
        ));
    }
    let mut out = format!("invalid: {} identity violation(s)\n", violations.len());
    for v in violations {
        out.push_str(&format!("  {v}\n"));
    }
    Err(Failure(1, out))
}

fn series_dims(series: &[solvgraph_core::Subspace]) -> String {
    let dims: Vec<String> = series.iter().map(|s| s.dim().to_string()).collect();
    dims.join(" > ")
}

fn info(l: &SuperAlgebra) -> Outcome {
    let full = l.full_space();
    let basis: Vec<String> = (0..l.dim())
        .map(|i| {
            format!(
                "{}:{}",
                l.names()[i],
                if l.parity(i) == Parity::Even {
                    "even"
                } else {
                    "odd"
                }
            )
        })
        .collect();
    let mut out = String::new();
    out.push_str(&format!("p = {}\n", l.field().p()));
    out.push_str(&format!(
        "dim = {} (even {}, odd {})\n",
        l.dim(),
        l.dim_even(),
        l.dim_odd()
    ));
    out.push_str(&format!("basis = {}\n", basis.join(" ")));
    out.push_str(&format!(
        "derived series dims = {}\n",
        series_dims(&l.derived_series(&full))
    ));
    out.push_str(&format!(
        "lower central series dims = {}\n",
        series_dims(&l.lower_central_series(&full))
    ));
    out.push_str(&format!("solvable = {}\n", l.is_solvable(&full)));
    out.push_str(&format!("nilpotent = {}\n", l.is_nilpotent(&full)));
    Ok(out)
}

fn parse_element(l: &SuperAlgebra, csv: &str) -> Result<Vector, Failure> {
    let p = i64::from(l.field().p());
    let coords = csv
        .split(',')
        .map(|c| {
            c.trim()
                .parse::<i64>()
                .map(|v| v.rem_euclid(p) as u32)
                .map_err(|_| usage(format!("--element: '{c}' is not an integer")))
        })
        .collect::<Result<Vec<u32>, Failure>>()?;
    if coords.len() != l.dim() {
        return Err(usage(format!(
            "--element has {} coordinates, the algebra has dimension {}",
            coords.len(),
            l.dim()
        )));
    }
    Ok(Vector::new(coords))
}

fn show_set(l: &SuperAlgebra, name: &str, set: &ElementSet) -> String {
    if set.is_empty() {
        return format!("{name} = {{}} (empty)\n");
    }
    let parts: Vec<String> = set.iter().map(|v| l.format_element(v)).collect();
    format!(
        "{name} = {{{}}} ({} elements)\n",
        parts.join(", "),
        set.len()
    )
}

fn sol(solver: &Solver, element: Option<&str>, nil: bool) -> Outcome {
    let l = solver.algebra();
    let prefix = if nil { "nil" } else { "sol" };
    Ok(match element {
        None => {
            let set = if nil {
                solver.nilpotentizer()
            } else {
                solver.solvabilizer()
            };
            show_set(l, &format!("{prefix}(L)"), &set)
        }
        Some(csv) => {
            let z = parse_element(l, csv)?;
            let set = if nil {
                solver.nilpotentizer_of(&z)
            } else {
                solver.solvabilizer_of(&z)
            };
            show_set(l, &format!("{prefix}_L({})", l.format_element(&z)), &set)
        }
    })
}

fn write_file(path: &Path, text: &str) -> Result<(), Failure> {
    fs::write(path, text).map_err(|e| usage(format!("{}: {e}", path.display())))
}

fn graph(solver: &Solver, args: &GraphArgs) -> Outcome {
    let g = build_graph(solver, args.kind).map_err(|e| Failure(1, format!("{e}\n")))?;
    if let Some(path) = &args.dot {
        write_file(path, &emit_graph(&g, GraphFormat::Dot))?;
    }
    if let Some(path) = &args.csv {
        write_file(path, &emit_graph(&g, GraphFormat::EdgeCsv))?;
    }
    let mut out = format!(
        "kind={}\n|V|={}\n|E|={}\n",
        g.kind(),
        g.vertex_count(),
        g.edge_count()
    );
    out.push_str(&format!("components={}\n", components(&g)));
    if args.measure {
        let view = match args.kind {
            GraphKind::Solvable => g.clone(),
            GraphKind::Nonsolvable => g.complement(),
        };
        match measure(&view) {
            Ok(nu) => out.push_str(&format!("nu={nu}\n")),
            Err(e) => out.push_str(&format!("nu=undefined ({e})\n")),
        }
    }
    Ok(out)
}

fn verify(args: &VerifyArgs, closure: Closure) -> Outcome {
    let mut cfg = VerifyConfig {
        seed: args.seed,
        max_dim: args.max_dim,
        trials: args.trials,
        closure,
        ..VerifyConfig::default()
    };
    if let Some(p) = &args.p {
        cfg.primes = vec![p.parse().expect("validated by clap")];
    }
    let report = solvgraph_core::run_suite(&args.suite, &cfg).map_err(usage)?;
    let text = report.render();
    if report.has_failures() {
        Err(Failure(1, text))
    } else {
        Ok(text)
    }
}

fn catalog_cmd(action: &CatalogAction) -> Outcome {
    match action {
        CatalogAction::List => {
            let mut out = String::new();
            for name in catalog::algebra_names() {
                out.push_str(&format!("algebra\t{name}\n"));
            }
            for name in catalog::morphism_names() {
                out.push_str(&format!("morphism\t{name}\n"));
            }
            Ok(out)
        }
        CatalogAction::Show { name } => {
            let entry = catalog::catalog_get(name).map_err(usage)?;
            let mut out = format!("name: {}\ndescription: {}\n", entry.name, entry.provenance);
            match &entry.object {
                CatalogObject::Algebra(a) => {
                    for v in describe_violations(a, &entry.identity_violations) {
                        out.push_str(&format!("identity violation: {v}\n"));
                    }
                    out.push_str(&emit_algebra(a));
                }
                CatalogObject::Morphism(m) => {
                    let (s, t) = (m.source(), m.target());
                    out.push_str(&format!(
                        "source: dim {} over GF({})\ntarget: dim {}\n",
                        s.dim(),
                        s.field().p(),
                        t.dim()
                    ));
                    for (i, img) in m.images().iter().enumerate() {
                        out.push_str(&format!(
                            "  {} -> {}\n",
                            s.names()[i],
                            t.format_element(img)
                        ));
                    }
                }
            }
            Ok(out)
        }
        CatalogAction::Export { dir } => {
            fs::create_dir_all(dir).map_err(|e| usage(format!("{}: {e}", dir.display())))?;
            let mut out = String::new();
            for name in catalog::algebra_names() {
                let a = catalog::algebra(name).expect("listed entry");
                let path = dir.join(format!("{}.json", name.replace('@', "_p")));
                write_file(&path, &emit_algebra(&a))?;
                out.push_str(&format!("{}\n", path.display()));
            }
            Ok(out)
        }
    }
}
