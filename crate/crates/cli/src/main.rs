use std::fmt::Write as _;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use implbase::classes::acceptant::acceptance_degree;
use implbase::classes::acyclic::{delta_cycle, is_acyclic_geometry, random_acyclic_base};
use implbase::classes::affine::affine_base;
use implbase::classes::poset::double_shelling_base;
use implbase::format::{parse_base, parse_points, parse_poset, print_base};
use implbase::hypergraph::{all_hypergraphs_with, build_hqc_with, QuasiClosedHypergraph};
use implbase::lattice::{enumerate_lattice_with, LatticeView};
use implbase::optimize::{canonical_base_with, optimize_with, verify_optimum_with};
use implbase::oracle::{oracle_optimum_cg, oracle_quasi_closed_direct, oracle_sigma};
use implbase::{
    close, equivalent, left_reduce, minimize, right_reduce, ElementSet, Error, Exec,
    ImplicationalBase, OptimizationCertificate,
};

#[derive(Parser)]
#[command(name = "implbase", version, about = "Implicational bases of finite closure systems")]
struct Cli {
    /// Run every subset sweep on the calling thread.
    #[arg(long, global = true)]
    sequential: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Print the closure of a set.
    Close {
        base: PathBuf,
        /// Elements separated by commas or spaces; "" is the empty set.
        #[arg(long, allow_hyphen_values = true)]
        set: String,
    },
    /// Exit 0 iff the two bases define the same closure system.
    Equiv { first: PathBuf, second: PathBuf },
    /// Print the canonical base.
    Canonical { base: PathBuf },
    /// One implication per pseudo-closed set.
    Minimize { base: PathBuf },
    /// Drop premise elements while the base stays equivalent.
    LeftReduce { base: PathBuf },
    /// Drop conclusion elements while the base stays equivalent.
    RightReduce { base: PathBuf },
    /// Minimize, then left- and right-reduce.
    Optimize {
        base: PathBuf,
        /// Append the optimality certificate as comment records.
        #[arg(long)]
        certificate: bool,
    },
    /// Quasi-closed hypergraph of every essential set.
    Hqc {
        base: PathBuf,
        /// Only this essential set.
        #[arg(long)]
        essential: Option<String>,
    },
    /// Test class membership; exit 1 with a witness when it fails.
    Check {
        base: PathBuf,
        #[arg(long, value_enum)]
        class: Class,
    },
    /// Build a base from a poset, a point set or a seed.
    Gen {
        #[command(subcommand)]
        source: Source,
    },
    /// Certify a candidate base against a convex geometry.
    VerifyOptimum { base: PathBuf, candidate: PathBuf },
    /// Exhaustive reference computations.
    Oracle {
        base: PathBuf,
        #[arg(long, value_enum)]
        op: OracleOp,
        #[arg(long, allow_hyphen_values = true)]
        set: Option<String>,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum Class {
    Cg,
    Acyclic,
    Acceptant,
    DisjointEdges,
}

#[derive(Subcommand)]
enum Source {
    /// Order-convex sets of a poset file.
    Poset { file: PathBuf },
    /// Convex hulls of a point file.
    Affine { file: PathBuf },
    /// Random base whose implications follow a random linear order.
    RandomAcyclic {
        #[arg(long)]
        seed: u64,
        #[arg(long)]
        size: usize,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum OracleOp {
    Sigma,
    Quasi,
    OptimumCg,
}

struct Failure {
    code: &'static str,
    message: String,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure {
            code: e.code(),
            message: e.to_string(),
        }
    }
}

/// Printed text and whether the command's verdict held.
struct Report {
    text: String,
    verdict: bool,
}

impl Report {
    fn ok(text: String) -> Self {
        Report { text, verdict: true }
    }
}

fn read(path: &Path) -> Result<String, Failure> {
    std::fs::read_to_string(path).map_err(|e| Failure {
        code: "IO",
        message: format!("{}: {e}", path.display()),
    })
}

fn load(path: &Path) -> Result<ImplicationalBase, Failure> {
    Ok(parse_base(&read(path)?)?)
}

fn with_sizes(base: &ImplicationalBase) -> String {
    let sorted = base.sorted();
    format!("{}# size: {}\n", print_base(&sorted), sorted.sizes())
}

fn certificate_records(base: &ImplicationalBase, cert: &OptimizationCertificate) -> Vec<String> {
    let u = base.universe();
    let mut lines = vec![
        format!("convex_geometry: {}", cert.convex_geometry),
        format!("is_base: {}", cert.is_base),
        format!("is_left_optimum: {}", cert.is_left_optimum),
        format!("is_optimum: {}", cert.is_optimum),
        format!("stray_implications: {}", cert.stray_implications),
    ];
    for class in &cert.classes {
        let premises: Vec<String> = class.premises.iter().map(|&p| u.format_set(p)).collect();
        lines.push(format!(
            "class: essential={} extreme={} premises={} conclusion={} edges={} disjoint={} hitting={} minimum={}",
            u.format_set(class.essential_set),
            u.format_set(class.extreme),
            if premises.is_empty() { "-".to_string() } else { premises.join(";") },
            u.format_set(class.conclusion),
            class.edge_count,
            class.disjoint_edges,
            class.hitting,
            class.minimum,
        ));
    }
    lines
}

fn hypergraph_line(base: &ImplicationalBase, h: &QuasiClosedHypergraph) -> String {
    let u = base.universe();
    let edges: Vec<String> = h.edges.iter().map(|&e| u.format_set(e)).collect();
    format!(
        "essential={} extreme={} edges={} disjoint={}",
        u.format_set(h.essential_set),
        u.format_set(h.extreme),
        edges.join(" "),
        h.has_disjoint_edges()
    )
}

fn parse_set(base: &ImplicationalBase, text: &str) -> Result<ElementSet, Failure> {
    Ok(base.universe().parse_set(text)?)
}

fn check(base: &ImplicationalBase, view: &LatticeView, class: Class, exec: Exec) -> Result<Report, Failure> {
    let u = base.universe();
    let cg_witness = || -> Option<String> {
        if !view.is_closed(ElementSet::EMPTY) {
            return Some(format!("empty set closes to {}", u.format_set(close(base, ElementSet::EMPTY))));
        }
        let full = u.full();
        view.closed_sets()
            .iter()
            .find(|&&c| c != full && (full - c).iter().all(|x| !view.is_closed(c.with(x))))
            .map(|&c| format!("closed set {} has no one-element closed extension", u.format_set(c)))
    };
    let report = match class {
        Class::Cg => match cg_witness() {
            None => Report::ok("cg: true\n".to_string()),
            Some(w) => Report {
                text: format!("cg: false\nwitness: {w}\n"),
                verdict: false,
            },
        },
        Class::Acyclic => {
            if is_acyclic_geometry(base, view) {
                Report::ok("acyclic: true\n".to_string())
            } else {
                let witness = match (cg_witness(), delta_cycle(base)) {
                    (Some(w), _) => w,
                    (None, Some(cycle)) => format!("generator cycle through {}", u.format_set(cycle)),
                    (None, None) => "no cycle found".to_string(),
                };
                Report {
                    text: format!("acyclic: false\nwitness: {witness}\n"),
                    verdict: false,
                }
            }
        }
        Class::Acceptant => match acceptance_degree(view)? {
            Some(q) => Report::ok(format!("acceptant: true\ndegree: {q}\n")),
            None => {
                let q = view.extreme_points(u.full())?.len();
                let bad = view
                    .closed_sets()
                    .iter()
                    .map(|&c| (c, view.extreme_points(c).map(ElementSet::len).unwrap_or(0)))
                    .find(|&(c, ex)| ex != c.len().min(q))
                    .or_else(|| {
                        (1..u.len())
                            .flat_map(|k| u.full().subsets().filter(move |s| s.len() == k))
                            .find(|&s| s.len() < q && !view.is_closed(s))
                            .map(|s| (s, 0))
                    });
                let witness = match bad {
                    Some((c, ex)) if view.is_closed(c) => {
                        format!("closed set {} has {ex} extreme points", u.format_set(c))
                    }
                    Some((c, _)) => format!("{} is not closed", u.format_set(c)),
                    None => "no degree fits".to_string(),
                };
                Report {
                    text: format!("acceptant: false\nwitness: {witness}\n"),
                    verdict: false,
                }
            }
        },
        Class::DisjointEdges => {
            let hqcs = all_hypergraphs_with(base, view, exec)?;
            let overlap = hqcs.iter().find_map(|h| {
                h.edges.iter().enumerate().find_map(|(i, &a)| {
                    h.edges[i + 1..]
                        .iter()
                        .find(|b| a.intersects(**b))
                        .map(|&b| (h.essential_set, a, b))
                })
            });
            match overlap {
                None => Report::ok("disjoint-edges: true\n".to_string()),
                Some((c, a, b)) => Report {
                    text: format!(
                        "disjoint-edges: false\nwitness: edges {} and {} of {} overlap\n",
                        u.format_set(a),
                        u.format_set(b),
                        u.format_set(c)
                    ),
                    verdict: false,
                },
            }
        }
    };
    Ok(report)
}

fn run(cli: Cli) -> Result<Report, Failure> {
    let exec = if cli.sequential { Exec::Sequential } else { Exec::default() };
    match cli.command {
        Command::Close { base, set } => {
            let base = load(&base)?;
            let s = parse_set(&base, &set)?;
            Ok(Report::ok(format!("{}\n", base.universe().format_set(close(&base, s)))))
        }
        Command::Equiv { first, second } => {
            let verdict = equivalent(&load(&first)?, &load(&second)?)?;
            let text = if verdict { "equivalent\n" } else { "not equivalent\n" };
            Ok(Report {
                text: text.to_string(),
                verdict,
            })
        }
        Command::Canonical { base } => Ok(Report::ok(with_sizes(&canonical_base_with(&load(&base)?, exec)?))),
        Command::Minimize { base } => Ok(Report::ok(with_sizes(&minimize(&load(&base)?)))),
        Command::LeftReduce { base } => Ok(Report::ok(with_sizes(&left_reduce(&load(&base)?)))),
        Command::RightReduce { base } => Ok(Report::ok(with_sizes(&right_reduce(&load(&base)?)))),
        Command::Optimize { base, certificate } => {
            let (best, cert) = optimize_with(&load(&base)?, exec);
            let mut text = with_sizes(&best);
            if certificate {
                for line in certificate_records(&best, &cert) {
                    let _ = writeln!(text, "# {line}");
                }
            }
            Ok(Report::ok(text))
        }
        Command::Hqc { base, essential } => {
            let base = load(&base)?;
            let view = enumerate_lattice_with(&base, exec)?;
            let hqcs = match essential {
                Some(c) => vec![build_hqc_with(&base, &view, parse_set(&base, &c)?, exec)?],
                None => all_hypergraphs_with(&base, &view, exec)?,
            };
            let mut text = String::new();
            for h in &hqcs {
                let _ = writeln!(text, "{}", hypergraph_line(&base, h));
            }
            let _ = writeln!(text, "disjoint-edges: {}", hqcs.iter().all(|h| h.has_disjoint_edges()));
            Ok(Report::ok(text))
        }
        Command::Check { base, class } => {
            let base = load(&base)?;
            let view = enumerate_lattice_with(&base, exec)?;
            check(&base, &view, class, exec)
        }
        Command::Gen { source } => {
            let base = match source {
                Source::Poset { file } => double_shelling_base(&parse_poset(&read(&file)?)?),
                Source::Affine { file } => affine_base(&parse_points(&read(&file)?)?)?,
                Source::RandomAcyclic { seed, size } => {
                    if size > implbase::set::MAX_UNIVERSE {
                        return Err(Error::UniverseTooLarge {
                            size,
                            limit: implbase::set::MAX_UNIVERSE,
                        }
                        .into());
                    }
                    random_acyclic_base(seed, size)
                }
            };
            Ok(Report::ok(with_sizes(&base)))
        }
        Command::VerifyOptimum { base, candidate } => {
            let base = load(&base)?;
            let candidate = parse_base(&read(&candidate)?)?;
            let cert = verify_optimum_with(&base, &candidate, exec)?;
            let mut text = String::new();
            for line in certificate_records(&base, &cert) {
                let _ = writeln!(text, "{line}");
            }
            Ok(Report {
                text,
                verdict: cert.is_optimum,
            })
        }
        Command::Oracle { base, op, set } => {
            let base = load(&base)?;
            let seed = || -> Result<ElementSet, Failure> {
                match &set {
                    Some(s) => parse_set(&base, s),
                    None => Err(Failure {
                        code: "USAGE",
                        message: "--set is required for this operation".to_string(),
                    }),
                }
            };
            match op {
                OracleOp::Sigma => {
                    let s = oracle_sigma(&base, seed()?)?;
                    Ok(Report::ok(format!("{}\n", base.universe().format_set(s))))
                }
                OracleOp::Quasi => {
                    let verdict = oracle_quasi_closed_direct(&base, seed()?)?;
                    Ok(Report {
                        text: format!("quasi-closed: {verdict}\n"),
                        verdict,
                    })
                }
                OracleOp::OptimumCg => {
                    let (optimum, _) = oracle_optimum_cg(&base)?;
                    Ok(Report::ok(with_sizes(&optimum)))
                }
            }
        }
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) if !e.use_stderr() => {
            let _ = e.print();
            return ExitCode::SUCCESS;
        }
        Err(e) => {
            let rendered = e.to_string();
            let first = rendered
                .lines()
                .next()
                .unwrap_or("")
                .trim_start_matches("error: ")
                .to_string();
            eprintln!("error: USAGE: {first}");
            return ExitCode::from(2);
        }
    };
    match run(cli) {
        Ok(report) => {
            print!("{}", report.text);
            if report.verdict {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            }
        }
        Err(f) => {
            eprintln!("error: {}: {}", f.code, f.message);
            ExitCode::from(2)
        }
    }
}
