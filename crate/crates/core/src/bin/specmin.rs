use std::io::{self, BufRead, Read, Write};
use std::path::Path;
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use serde::Serialize;
use serde_json::json;

use specmin::campaign::{parse_checks, run_campaign_with_override};
use specmin::classify::classify_minus_one;
use specmin::constructors::{complete, cycle, diamond, extremal_diamond_family, path, DiamondSpec};
use specmin::enumerate::connected_graphs_with_override;
use specmin::graph::{canonical_form, diameter, parse_graph6, write_graph6};
use specmin::linalg::parse_rational;
use specmin::spectra::{distinct_eigenvalue_count, multiplicity};
use specmin::star::find_star_sets;
use specmin::Graph;

/// Exact eigenvalue multiplicities against the diameter bound m(μ) <= n - d.
///
/// Graphs are read as graph6: inline, from a file (one per line), or from
/// stdin when the argument is omitted or `-`. Reports go to stdout as one
/// JSON record per line; diagnostics go to stderr. Exit status is 0 on
/// success, 1 when a verification finds a counterexample, 2 on bad input.
#[derive(Parser)]
#[command(name = "specmin", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Multiplicity of μ, diameter, and whether m(μ) = n - d is attained.
    ///
    /// The bound m(μ) <= n - d holds for every connected graph; outside
    /// paths it can only be attained at μ = 0 or μ = -1.
    Check {
        /// Eigenvalue as an integer or p/q.
        #[arg(long, default_value = "-1", allow_hyphen_values = true)]
        mu: String,
        graph: Option<String>,
    },
    /// Decide structurally whether m(-1) = n - d.
    ///
    /// Extremal graphs are the complete graphs, graphs whose twin quotient
    /// is P_5, and blowups of a path P_{d+1} with triangles attached on
    /// edges v_j v_{j+1}, j in {3, 6, ..., d-4}, where d >= 7 and
    /// d ≡ 1 (mod 3).
    Classify { graph: Option<String> },
    /// Canonical graph6 (lexicographically least labelling).
    Canonical { graph: Option<String> },
    /// Emit graph6 for a named family.
    Construct {
        #[command(subcommand)]
        family: Family,
    },
    /// Star sets for μ: m(μ) vertices whose removal leaves μ out of the spectrum.
    ///
    /// Every returned set has a dominating complement and its
    /// eigenprojection columns form a basis of the eigenspace.
    Starset {
        #[arg(long, allow_hyphen_values = true)]
        mu: String,
        /// Stop after this many star sets.
        #[arg(long, default_value_t = 10)]
        limit: usize,
        graph: Option<String>,
    },
    /// Check every connected graph up to n vertices.
    ///
    /// Checks: codec (graph6 round trip), bounds (e(G) >= d + 1 and
    /// multiplicities <= n - d), minus-one (structural classification
    /// against m(-1) = n - d), extremal-eigenvalue (only 0 and -1 reach
    /// n - d outside paths), subgraphs (interlacing, pendant deletion, rank
    /// monotonicity), star (star set properties and the projection
    /// identity), quotient (twin quotient and blowup transfer).
    Enumerate {
        #[arg(long)]
        n: usize,
        /// Comma-separated check names, or `all`.
        #[arg(long, default_value = "all")]
        checks: String,
        /// Worker threads (default: available parallelism).
        #[arg(long)]
        jobs: Option<usize>,
        /// Permit n = 8, which takes a long time.
        #[arg(long)]
        allow_large: bool,
        /// Print the census as graph6 lines instead of running checks.
        #[arg(long)]
        list: bool,
    },
}

#[derive(Subcommand)]
enum Family {
    Path {
        #[arg(long)]
        n: usize,
    },
    Cycle {
        #[arg(long)]
        n: usize,
    },
    Complete {
        #[arg(long)]
        n: usize,
    },
    /// Path v_0..v_d with a vertex joined to v_j and v_{j+1} for each j in W.
    Diamond {
        #[arg(long)]
        d: usize,
        /// Comma-separated attachment indices.
        #[arg(long, default_value = "")]
        w: String,
    },
    /// Every diamond graph with W ⊆ {3, 6, ..., d-4}; d >= 7, d ≡ 1 (mod 3).
    Family {
        #[arg(long)]
        d: usize,
    },
}

/// Failure with the exit status it maps to.
enum Fail {
    Usage(String),
    Counterexample,
}

impl<E: std::fmt::Display> From<E> for Fail {
    fn from(e: E) -> Self {
        Fail::Usage(e.to_string())
    }
}

type Out<T = ()> = Result<T, Fail>;

fn main() -> ExitCode {
    env_logger::Builder::from_env(env_logger::Env::default().default_filter_or("warn")).init();
    let cli = Cli::parse();
    match run(cli.command) {
        Ok(()) => ExitCode::SUCCESS,
        Err(Fail::Counterexample) => ExitCode::from(1),
        Err(Fail::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}

fn run(command: Command) -> Out {
    let stdout = io::stdout();
    let mut out = stdout.lock();
    match command {
        Command::Check { mu, graph } => {
            let mu = parse_rational(&mu)?;
            for g in read_graphs(graph.as_deref())? {
                let d = diameter(&g);
                let m = multiplicity(&g, &mu);
                let record = json!({
                    "graph6": write_graph6(&g),
                    "n": g.order(),
                    "d": d,
                    "mu": mu.to_string(),
                    "multiplicity": m,
                    "distinct": distinct_eigenvalue_count(&g),
                    "extremal": d.finite().map(|d| m + d == g.order()),
                });
                emit(&mut out, &record)?;
            }
        }
        Command::Classify { graph } => {
            for g in read_graphs(graph.as_deref())? {
                let class = classify_minus_one(&g)?;
                let m1 = multiplicity(&g, &parse_rational("-1")?);
                let record = json!({
                    "graph6": write_graph6(&g),
                    "n": g.order(),
                    "d": diameter(&g),
                    "multiplicity": m1,
                    "classification": class,
                });
                emit(&mut out, &record)?;
            }
        }
        Command::Canonical { graph } => {
            for g in read_graphs(graph.as_deref())? {
                writeln!(out, "{}", canonical_form(&g)?)?;
            }
        }
        Command::Construct { family } => {
            let graphs = match family {
                Family::Path { n } => vec![path(n)?],
                Family::Cycle { n } => vec![cycle(n)?],
                Family::Complete { n } => vec![complete(n)?],
                Family::Diamond { d, w } => {
                    vec![diamond(&DiamondSpec::new(d, parse_indices(&w)?)?)?]
                }
                Family::Family { d } => extremal_diamond_family(d)?.map(|(_, g)| g).collect(),
            };
            for g in graphs {
                writeln!(out, "{}", write_graph6(&g))?;
            }
        }
        Command::Starset { mu, limit, graph } => {
            let mu = parse_rational(&mu)?;
            for g in read_graphs(graph.as_deref())? {
                let sets = find_star_sets(&g, &mu, limit)?;
                let record = json!({
                    "graph6": write_graph6(&g),
                    "mu": mu.to_string(),
                    "multiplicity": multiplicity(&g, &mu),
                    "star_sets": sets.iter().map(|s| json!({"star_set": s.star_set, "complement": s.complement})).collect::<Vec<_>>(),
                });
                emit(&mut out, &record)?;
            }
        }
        Command::Enumerate {
            n,
            checks,
            jobs,
            allow_large,
            list,
        } => {
            let checks = parse_checks(&checks)?;
            if let Some(jobs) = jobs {
                rayon::ThreadPoolBuilder::new()
                    .num_threads(jobs.max(1))
                    .build_global()?;
            }
            if list {
                let census = (1..=n.max(1))
                    .map(|k| connected_graphs_with_override(k, allow_large))
                    .collect::<Result<Vec<_>, _>>()?;
                for g in census.iter().take(n).flatten() {
                    writeln!(out, "{}", write_graph6(g))?;
                }
                return Ok(());
            }
            let report = run_campaign_with_override(n, &checks, allow_large)?;
            emit(&mut out, &report)?;
            out.flush()?;
            eprintln!(
                "checked {} graphs in {:.2}s, {} counterexamples",
                report.graphs(),
                report.elapsed.as_secs_f64(),
                report.counterexamples.len()
            );
            if !report.passed() {
                return Err(Fail::Counterexample);
            }
        }
    }
    out.flush()?;
    Ok(())
}

fn emit(out: &mut impl Write, record: &impl Serialize) -> Out {
    serde_json::to_writer(&mut *out, record)?;
    writeln!(out)?;
    Ok(())
}

fn parse_indices(text: &str) -> Out<Vec<usize>> {
    text.split(',')
        .map(str::trim)
        .filter(|s| !s.is_empty())
        .map(|s| {
            s.parse::<usize>()
                .map_err(|_| Fail::Usage(format!("bad index {s:?} in --w")))
        })
        .collect()
}

/// Inline graph6, a file of graph6 lines, or stdin for `None` / `-`.
fn read_graphs(source: Option<&str>) -> Out<Vec<Graph>> {
    let text = match source {
        None | Some("-") => {
            let mut buf = String::new();
            io::stdin().lock().read_to_string(&mut buf)?;
            buf
        }
        Some(s) if Path::new(s).is_file() => {
            let file = std::fs::File::open(s).map_err(|e| Fail::Usage(format!("{s}: {e}")))?;
            let mut lines = Vec::new();
            for line in io::BufReader::new(file).lines() {
                lines.push(line?);
            }
            lines.join("\n")
        }
        Some(s) => s.to_string(),
    };
    let graphs = text
        .lines()
        .map(str::trim)
        .filter(|l| !l.is_empty())
        .map(|l| parse_graph6(l).map_err(|e| Fail::Usage(format!("{l:?}: {e}"))))
        .collect::<Out<Vec<_>>>()?;
    if graphs.is_empty() {
        return Err(Fail::Usage("no graph given".into()));
    }
    Ok(graphs)
}
