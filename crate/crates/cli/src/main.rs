use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::json;

use frame_graphs::burling::{self, Certificate};
use frame_graphs::decision::{classify_scott, decide_ge2_subdivisions, k4_status, K4Verdict};
use frame_graphs::frames::{self, emit_svg, validate};
use frame_graphs::graph::{parse_multigraph, recognize_shape, Shape};
use frame_graphs::{Error, FrameRepresentation, Multigraph, SimpleGraph};

#[derive(Parser)]
#[command(name = "frames", version, about = "Restricted frame graphs, their representations and the Burling construction")]
struct Cli {
    /// Seed for randomized steps.
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Decide whether the ≥2-subdivisions of a multigraph are restricted frame graphs.
    Decide { graph: PathBuf },
    /// Classify a simple graph with respect to Scott's conjecture.
    Classify { graph: PathBuf },
    /// Build a frame representation.
    Represent {
        graph: PathBuf,
        /// Subdivision counts per edge, comma separated (default: 2 on every edge).
        #[arg(long, value_delimiter = ',')]
        counts: Option<Vec<usize>>,
        #[arg(long, value_enum, default_value_t = ShapeArg::Subdivision)]
        shape: ShapeArg,
        /// Root of a tree or pivot of a chandelier (default: chosen automatically).
        #[arg(long)]
        vertex: Option<usize>,
        #[arg(long)]
        out: Option<PathBuf>,
        #[arg(long)]
        svg: Option<PathBuf>,
    },
    /// Check a representation file against all restrictions.
    Validate { rep: PathBuf },
    /// Iterate the construction from the one-vertex pair.
    Burling {
        #[arg(long)]
        steps: usize,
        #[arg(long)]
        out: Option<PathBuf>,
        /// Compute the chromatic number exactly.
        #[arg(long)]
        chi: bool,
        /// Search node budget for --chi.
        #[arg(long, default_value_t = 100_000_000)]
        budget: u64,
    },
    /// Certify that a graph is an induced subgraph of the construction.
    Construct {
        graph: PathBuf,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Replay a certificate and compare with its claimed pair.
    CheckCert {
        cert: PathBuf,
        /// Also embed the pair into this iterate of the construction.
        #[arg(long)]
        materialize: Option<usize>,
        #[arg(long, default_value_t = 100_000_000)]
        budget: u64,
    },
    /// Status of a subdivision of K4 given by six counts (edges 01,23,02,13,03,12).
    K4 {
        #[arg(long, value_delimiter = ',', num_args = 1)]
        profile: Vec<usize>,
        #[arg(long)]
        represent: Option<PathBuf>,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum ShapeArg {
    Subdivision,
    Tree,
    Chandelier,
}

enum Failure {
    Domain(String),
    Usage(String),
    Budget(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Failure {
        match e {
            Error::Parse { .. } | Error::Json(_) => Failure::Usage(e.to_string()),
            _ if e.is_budget() => Failure::Budget(e.to_string()),
            _ => Failure::Domain(e.to_string()),
        }
    }
}

type Outcome = std::result::Result<(), Failure>;

fn read(path: &Path) -> std::result::Result<String, Failure> {
    fs::read_to_string(path).map_err(|e| Failure::Usage(format!("{}: {e}", path.display())))
}

fn write(path: &Path, text: &str) -> Outcome {
    fs::write(path, text).map_err(|e| Failure::Domain(format!("{}: {e}", path.display())))
}

fn load_multigraph(path: &Path) -> std::result::Result<Multigraph, Failure> {
    parse_multigraph(&read(path)?).map_err(|e| Failure::Usage(format!("{}: {e}", path.display())))
}

fn load_simple(path: &Path) -> std::result::Result<SimpleGraph, Failure> {
    let g = load_multigraph(path)?;
    g.to_simple().map_err(|e| Failure::Domain(format!("{}: {e}", path.display())))
}

/// Writes to stdout, ignoring a closed pipe.
fn emit(text: &str) {
    let _ = std::io::stdout().lock().write_all(text.as_bytes());
}

fn print_json(value: &impl serde::Serialize) {
    emit(&(serde_json::to_string_pretty(value).expect("output serializes") + "\n"));
}

fn emit_rep(rep: &FrameRepresentation, out: Option<&Path>, svg: Option<&Path>) -> Outcome {
    let violations = validate(rep);
    if !violations.is_empty() {
        return Err(Failure::Domain(format!("built representation failed validation: {}", violations[0])));
    }
    match out {
        Some(p) => {
            write(p, &rep.to_json())?;
            print_json(&json!({ "vertices": rep.vertex_count(), "valid": true, "out": p.display().to_string() }));
        }
        None => emit(&rep.to_json()),
    }
    if let Some(p) = svg {
        write(p, &emit_svg(rep))?;
    }
    Ok(())
}

fn represent(
    graph: &Path,
    counts: Option<Vec<usize>>,
    shape: ShapeArg,
    vertex: Option<usize>,
    out: Option<&Path>,
    svg: Option<&Path>,
) -> Outcome {
    let rep = match shape {
        ShapeArg::Subdivision => {
            let g = load_multigraph(graph)?;
            let counts = counts.unwrap_or_else(|| vec![2; g.edge_count()]);
            if !decide_ge2_subdivisions(&g)?.is_yes() {
                return Err(Failure::Domain(
                    "no ≥2-subdivision of this multigraph is a restricted frame graph".to_string(),
                ));
            }
            frames::build_ge2_subdivision(&g, &counts)?
        }
        ShapeArg::Tree => {
            let t = load_simple(graph)?;
            frames::build_tree(&t, vertex.unwrap_or(0))?
        }
        ShapeArg::Chandelier => {
            let h = load_simple(graph)?;
            let pivot = match (vertex, recognize_shape(&h)) {
                (Some(v), _) => v,
                (None, Shape::LuxuryChandelier(p) | Shape::Chandelier(p)) => p,
                (None, _) => return Err(Failure::Domain("input is not a chandelier".to_string())),
            };
            frames::build_chandelier(&h, pivot)?
        }
    };
    emit_rep(&rep, out, svg)
}

fn run(cli: Cli) -> Outcome {
    log::debug!("seed {}", cli.seed);
    match cli.command {
        Command::Decide { graph } => {
            let g = load_multigraph(&graph)?;
            print_json(&decide_ge2_subdivisions(&g)?);
        }
        Command::Classify { graph } => print_json(&classify_scott(&load_simple(&graph)?)),
        Command::Represent { graph, counts, shape, vertex, out, svg } => {
            represent(&graph, counts, shape, vertex, out.as_deref(), svg.as_deref())?
        }
        Command::Validate { rep } => {
            let rep = FrameRepresentation::from_json(&read(&rep)?).map_err(|e| Failure::Usage(e.to_string()))?;
            let violations = validate(&rep);
            print_json(&json!({ "valid": violations.is_empty(), "violations": violations }));
            if !violations.is_empty() {
                return Err(Failure::Domain(format!("{} violation(s)", violations.len())));
            }
        }
        Command::Burling { steps, out, chi, budget } => {
            let p = burling::next_iterate(steps)?;
            let mut summary = json!({
                "steps": steps,
                "vertices": p.vertex_count(),
                "edges": p.graph.edge_count(),
                "stable_sets": p.stable_sets.len(),
            });
            if let Some(path) = &out {
                write(path, &p.to_json())?;
            }
            if chi {
                summary["chi"] = json!(burling::chromatic_number(&p.graph, budget)?);
            }
            print_json(&summary);
        }
        Command::Construct { graph, out } => {
            let h = load_simple(&graph)?;
            let c = burling::construct(&h)?;
            let text = c.certificate.to_json();
            match out {
                Some(path) => {
                    write(&path, &text)?;
                    print_json(&json!({
                        "vertices": c.certificate.claimed.vertex_count(),
                        "stable_sets": c.certificate.claimed.stable_sets.len(),
                        "depth": c.certificate.root.depth(),
                        "vertex_map": c.vertex_map,
                    }));
                }
                None => emit(&text),
            }
        }
        Command::CheckCert { cert, materialize, budget } => {
            let cert = Certificate::from_json(&read(&cert)?).map_err(|e| Failure::Usage(e.to_string()))?;
            let p = burling::verify(&cert)?;
            let mut summary = json!({
                "valid": true,
                "vertices": p.vertex_count(),
                "stable_sets": p.stable_sets.len(),
                "depth": cert.root.depth(),
            });
            if let Some(steps) = materialize {
                match burling::materialized_check(&cert.root, steps, budget)? {
                    Some(embedding) => summary["embedding"] = json!(embedding),
                    None => return Err(Failure::Domain(format!("no embedding into iterate {steps}"))),
                }
            }
            print_json(&summary);
        }
        Command::K4 { profile, represent } => {
            let profile: [usize; 6] = profile
                .try_into()
                .map_err(|p: Vec<usize>| Failure::Usage(format!("expected 6 counts, got {}", p.len())))?;
            let status = k4_status(&profile);
            print_json(&status);
            if let Some(path) = represent {
                if status.status != K4Verdict::RestrictedFrameGraph {
                    return Err(Failure::Domain(format!("profile is {:?}; nothing to represent", status.status)));
                }
                let rep = frames::build_k4_subdivision(&profile)?;
                if !validate(&rep).is_empty() {
                    return Err(Failure::Domain("built representation failed validation".to_string()));
                }
                write(&path, &rep.to_json())?;
            }
        }
    }
    Ok(())
}

fn main() -> ExitCode {
    env_logger::Builder::from_env(env_logger::Env::new().filter_or("FRAMES_LOG", "error")).init();
    let cli = Cli::parse();
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(f) => {
            let (code, msg) = match f {
                Failure::Domain(m) => (1, m),
                Failure::Usage(m) => (2, m),
                Failure::Budget(m) => (3, m),
            };
            eprintln!("error: {msg}");
            ExitCode::from(code)
        }
    }
}
