//! `salv`: build reflection arrangements on manifolds from spec files and
//! interrogate them — face posets, Salvetti complexes, quotients, homology,
//! fundamental groups.
//!
//! Exit codes: 0 success, 1 the input was rejected, 2 the request is
//! infeasible (an unbounded enumeration of an infinite group), 3 an internal
//! invariant failed.

mod check;
mod render;
mod spec;

use std::fmt;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use serde::Serialize;

use salv_core::arrangement::{Arrangement, ArrangementError, FacePoset};
use salv_core::chamber::{ChamberComplex, ChamberError};
use salv_core::coxeter::CoxeterError;
use salv_core::homology::{euler, homology, ChainComplex, HomologyError, HomologyResult};
use salv_core::salvetti::{
    build_sal, pi1_presentation, quotient_complex, sal_leq, sal_order_complex, SalvettiError,
};

use crate::render::{
    covering_edges, dot_digraph, subset_label, subset_names, to_json, word_label, word_names,
};
use crate::spec::{parse_spec, realize, ArrangementSpec, RealizeError, SpecError};

#[derive(Parser)]
#[command(name = "salv", version, about = "Reflection arrangements on manifolds")]
struct Cli {
    /// Output format.
    #[arg(long, global = true, value_enum, default_value_t = Format::Human)]
    format: Format,
    #[command(subcommand)]
    command: Command,
}

#[derive(Copy, Clone, PartialEq, Eq, ValueEnum)]
enum Format {
    Human,
    Json,
    Dot,
}

#[derive(Copy, Clone, PartialEq, Eq, ValueEnum)]
enum Space {
    Complement,
    Quotient,
    Manifold,
    Walls,
}

impl Space {
    fn name(self) -> &'static str {
        match self {
            Space::Complement => "complement",
            Space::Quotient => "quotient",
            Space::Manifold => "manifold",
            Space::Walls => "walls",
        }
    }
}

#[derive(Subcommand)]
enum Command {
    /// Parse a spec file and validate the chamber description.
    Validate { spec: PathBuf },
    /// Build the face poset of the arrangement.
    Faces { spec: PathBuf },
    /// Build the cells of the Salvetti complex.
    Salvetti { spec: PathBuf },
    /// Build the quotient of the Salvetti complex by the group action.
    Quotient { spec: PathBuf },
    /// Integer homology of a chosen space.
    Homology {
        spec: PathBuf,
        /// Which space to take homology of.
        #[arg(long, value_enum, default_value_t = Space::Complement)]
        space: Space,
    },
    /// Fundamental group presentation of the orbit space.
    Pi1 { spec: PathBuf },
    /// Euler characteristic of the Salvetti complex, with the group order.
    Euler { spec: PathBuf },
    /// Run the bundled verification suite.
    Check {
        /// Seed for the randomized samples.
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
}

enum Failure {
    Validation { module: &'static str, message: String },
    Infeasible { module: &'static str, message: String },
    Internal { module: &'static str, message: String },
}

impl Failure {
    fn code(&self) -> u8 {
        match self {
            Failure::Validation { .. } => 1,
            Failure::Infeasible { .. } => 2,
            Failure::Internal { .. } => 3,
        }
    }
}

impl fmt::Display for Failure {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let (module, message) = match self {
            Failure::Validation { module, message }
            | Failure::Infeasible { module, message }
            | Failure::Internal { module, message } => (module, message),
        };
        write!(f, "error[{module}]: {message}")
    }
}

fn from_spec(e: SpecError) -> Failure {
    Failure::Validation {
        module: "cli",
        message: e.to_string(),
    }
}

fn from_coxeter(e: CoxeterError) -> Failure {
    match &e {
        CoxeterError::WouldNotTerminate(_) => Failure::Infeasible {
            module: "coxeter",
            message: e.to_string(),
        },
        CoxeterError::MatrixAsymmetric { i, j } | CoxeterError::BadBondOrder { i, j } => {
            Failure::Validation {
                module: "coxeter",
                message: format!("coxeter_matrix[{i}][{j}]: {e}"),
            }
        }
        CoxeterError::BadDiagonal(i) => Failure::Validation {
            module: "coxeter",
            message: format!("coxeter_matrix[{i}][{i}]: {e}"),
        },
        _ => Failure::Validation {
            module: "coxeter",
            message: e.to_string(),
        },
    }
}

fn from_chamber(e: ChamberError) -> Failure {
    Failure::Validation {
        module: "chamber",
        message: e.to_string(),
    }
}

fn from_realize(e: RealizeError) -> Failure {
    match e {
        RealizeError::Coxeter(inner) => from_coxeter(inner),
        RealizeError::Chamber(inner) => from_chamber(inner),
    }
}

fn from_arrangement(e: ArrangementError) -> Failure {
    match e {
        ArrangementError::TruncatedPoset => Failure::Infeasible {
            module: "arrangement",
            message: e.to_string(),
        },
        ArrangementError::Coxeter(inner) => from_coxeter(inner),
        other => Failure::Internal {
            module: "arrangement",
            message: other.to_string(),
        },
    }
}

fn from_salvetti(e: SalvettiError) -> Failure {
    match e {
        SalvettiError::Coxeter(inner) => from_coxeter(inner),
        other => Failure::Internal {
            module: "salvetti",
            message: other.to_string(),
        },
    }
}

fn from_homology(e: HomologyError) -> Failure {
    Failure::Internal {
        module: "homology",
        message: e.to_string(),
    }
}

fn no_dot(command: &'static str) -> Failure {
    Failure::Validation {
        module: "cli",
        message: format!("dot output is not defined for `{command}`"),
    }
}

/// Accept both `foo/bar.toml` and `foo/bar`.
fn resolve(path: &Path) -> PathBuf {
    if path.exists() || path.extension().is_some() {
        path.to_path_buf()
    } else {
        path.with_extension("toml")
    }
}

fn load(path: &Path) -> Result<(ArrangementSpec, ChamberComplex), Failure> {
    let spec = parse_spec(&resolve(path)).map_err(from_spec)?;
    let cc = realize(&spec).map_err(from_realize)?;
    Ok((spec, cc))
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(failure) => {
            eprintln!("{failure}");
            ExitCode::from(failure.code())
        }
    }
}

fn run(cli: &Cli) -> Result<(), Failure> {
    match &cli.command {
        Command::Validate { spec } => cmd_validate(spec, cli.format),
        Command::Faces { spec } => cmd_faces(spec, cli.format),
        Command::Salvetti { spec } => cmd_salvetti(spec, cli.format),
        Command::Quotient { spec } => cmd_quotient(spec, cli.format),
        Command::Homology { spec, space } => cmd_homology(spec, *space, cli.format),
        Command::Pi1 { spec } => cmd_pi1(spec, cli.format),
        Command::Euler { spec } => cmd_euler(spec, cli.format),
        Command::Check { seed } => cmd_check(*seed, cli.format),
    }
}

fn cmd_validate(path: &Path, format: Format) -> Result<(), Failure> {
    let (spec, cc) = load(path)?;
    let warnings: Vec<String> = cc.warnings().iter().map(|w| w.to_string()).collect();
    match format {
        Format::Human => {
            println!("ok: rank {}, dimension {}", cc.rank(), cc.dim());
            println!("generators: {}", spec.generators.join(" "));
            println!("group order: {}", cc.group_order());
            println!(
                "acceptable family: {}",
                cc.acceptable()
                    .iter()
                    .map(|&t| subset_label(&spec.generators, t))
                    .collect::<Vec<_>>()
                    .join(" ")
            );
            for w in &warnings {
                println!("warning: {w}");
            }
        }
        Format::Json => {
            #[derive(Serialize)]
            struct Doc {
                rank: usize,
                dim: usize,
                generators: Vec<String>,
                group_order: String,
                acceptable: Vec<Vec<String>>,
                strict: bool,
                warnings: Vec<String>,
            }
            let doc = Doc {
                rank: cc.rank(),
                dim: cc.dim(),
                generators: spec.generators.clone(),
                group_order: cc.group_order().to_string(),
                acceptable: cc
                    .acceptable()
                    .iter()
                    .map(|&t| subset_names(&spec.generators, t))
                    .collect(),
                strict: spec.options.strict,
                warnings,
            };
            print!("{}", to_json(&doc));
        }
        Format::Dot => return Err(no_dot("validate")),
    }
    Ok(())
}

fn build_poset(spec: &ArrangementSpec, arr: &Arrangement) -> Result<FacePoset, Failure> {
    arr.build_faces(spec.options.max_length).map_err(from_arrangement)
}

fn cmd_faces(path: &Path, format: Format) -> Result<(), Failure> {
    let (spec, cc) = load(path)?;
    let arr = Arrangement::new(&cc);
    let poset = build_poset(&spec, &arr)?;
    match format {
        Format::Human => {
            println!("faces: {}", poset.len());
            println!("truncated: {}", if poset.truncated() { "yes" } else { "no" });
            for &ty in cc.acceptable() {
                let count = poset.faces().iter().filter(|f| f.ty() == ty).count();
                println!("  type {}: {}", subset_label(&spec.generators, ty), count);
            }
        }
        Format::Json => {
            #[derive(Serialize)]
            struct TypeCount {
                r#type: Vec<String>,
                count: usize,
            }
            #[derive(Serialize)]
            struct FaceDoc {
                rep: Vec<String>,
                r#type: Vec<String>,
            }
            #[derive(Serialize)]
            struct Doc {
                count: usize,
                truncated: bool,
                types: Vec<TypeCount>,
                faces: Vec<FaceDoc>,
            }
            let doc = Doc {
                count: poset.len(),
                truncated: poset.truncated(),
                types: cc
                    .acceptable()
                    .iter()
                    .map(|&ty| TypeCount {
                        r#type: subset_names(&spec.generators, ty),
                        count: poset.faces().iter().filter(|f| f.ty() == ty).count(),
                    })
                    .collect(),
                faces: poset
                    .faces()
                    .iter()
                    .map(|f| FaceDoc {
                        rep: word_names(&spec.generators, f.rep()),
                        r#type: subset_names(&spec.generators, f.ty()),
                    })
                    .collect(),
            };
            print!("{}", to_json(&doc));
        }
        Format::Dot => {
            let labels: Vec<String> = poset
                .faces()
                .iter()
                .map(|f| {
                    format!(
                        "{} | {}",
                        word_label(&spec.generators, f.rep()),
                        subset_label(&spec.generators, f.ty())
                    )
                })
                .collect();
            let edges = covering_edges(poset.len(), |a, b| {
                arr.face_leq(poset.face(a), poset.face(b))
            });
            print!("{}", dot_digraph("faces", &labels, &edges));
        }
    }
    Ok(())
}

fn cmd_salvetti(path: &Path, format: Format) -> Result<(), Failure> {
    let (spec, cc) = load(path)?;
    let poset = build_sal(&cc).map_err(from_salvetti)?;
    let by_dim = {
        let mut counts = vec![0usize; cc.dim() + 1];
        for cell in poset.cells() {
            counts[cell.dim()] += 1;
        }
        counts
    };
    let chi: i64 = poset
        .cells()
        .iter()
        .map(|c| if c.dim() % 2 == 0 { 1 } else { -1 })
        .sum();
    match format {
        Format::Human => {
            println!("cells: {}", poset.len());
            for (d, n) in by_dim.iter().enumerate() {
                println!("  dimension {d}: {n}");
            }
            println!("euler: {chi}");
        }
        Format::Json => {
            #[derive(Serialize)]
            struct CellDoc {
                r#type: Vec<String>,
                elem: Vec<String>,
            }
            #[derive(Serialize)]
            struct Doc {
                count: usize,
                by_dim: Vec<usize>,
                euler: i64,
                cells: Vec<CellDoc>,
            }
            let doc = Doc {
                count: poset.len(),
                by_dim,
                euler: chi,
                cells: poset
                    .cells()
                    .iter()
                    .map(|c| CellDoc {
                        r#type: subset_names(&spec.generators, c.ty()),
                        elem: word_names(&spec.generators, c.elem()),
                    })
                    .collect(),
            };
            print!("{}", to_json(&doc));
        }
        Format::Dot => {
            let sys = cc.system();
            let labels: Vec<String> = poset
                .cells()
                .iter()
                .map(|c| {
                    format!(
                        "{} | {}",
                        word_label(&spec.generators, c.elem()),
                        subset_label(&spec.generators, c.ty())
                    )
                })
                .collect();
            let edges = covering_edges(poset.len(), |a, b| {
                sal_leq(sys, poset.cell(a), poset.cell(b))
            });
            print!("{}", dot_digraph("salvetti", &labels, &edges));
        }
    }
    Ok(())
}

fn cmd_quotient(path: &Path, format: Format) -> Result<(), Failure> {
    let (spec, cc) = load(path)?;
    let q = quotient_complex(&cc);
    let counts = q.counts();
    match format {
        Format::Human => {
            println!(
                "simplices by dimension: [{}]",
                counts
                    .iter()
                    .map(|n| n.to_string())
                    .collect::<Vec<_>>()
                    .join(", ")
            );
            println!("euler: {}", q.euler());
        }
        Format::Json => {
            #[derive(Serialize)]
            struct CellDoc {
                r#type: Vec<String>,
                elem: Vec<String>,
            }
            #[derive(Serialize)]
            struct SimplexDoc {
                chain: Vec<CellDoc>,
            }
            #[derive(Serialize)]
            struct DimDoc {
                dim: usize,
                simplices: Vec<SimplexDoc>,
            }
            #[derive(Serialize)]
            struct Doc {
                counts: Vec<usize>,
                euler: i64,
                dimensions: Vec<DimDoc>,
            }
            let doc = Doc {
                counts: counts.clone(),
                euler: q.euler(),
                dimensions: (0..counts.len())
                    .map(|d| DimDoc {
                        dim: d,
                        simplices: q
                            .simplices(d)
                            .iter()
                            .map(|chain| SimplexDoc {
                                chain: chain
                                    .iter()
                                    .map(|c| CellDoc {
                                        r#type: subset_names(&spec.generators, c.ty()),
                                        elem: word_names(&spec.generators, c.elem()),
                                    })
                                    .collect(),
                            })
                            .collect(),
                    })
                    .collect(),
            };
            print!("{}", to_json(&doc));
        }
        Format::Dot => return Err(no_dot("quotient")),
    }
    Ok(())
}

fn homology_for(
    spec: &ArrangementSpec,
    cc: &ChamberComplex,
    space: Space,
) -> Result<(HomologyResult, i64), Failure> {
    let chain = match space {
        Space::Complement => {
            let poset = build_sal(cc).map_err(from_salvetti)?;
            ChainComplex::from_complex(&sal_order_complex(cc, &poset)).map_err(from_homology)?
        }
        Space::Quotient => {
            ChainComplex::from_complex(&quotient_complex(cc)).map_err(from_homology)?
        }
        Space::Manifold | Space::Walls => {
            let arr = Arrangement::new(cc);
            let poset = build_poset(spec, &arr)?;
            let sc = match space {
                Space::Manifold => arr.manifold_complex(&poset).map_err(from_arrangement)?,
                _ => arr.walls_subcomplex(&poset).map_err(from_arrangement)?,
            };
            ChainComplex::from_complex(&sc).map_err(from_homology)?
        }
    };
    Ok((homology(&chain), euler(&chain)))
}

fn cmd_homology(path: &Path, space: Space, format: Format) -> Result<(), Failure> {
    let (spec, cc) = load(path)?;
    let (result, chi) = homology_for(&spec, &cc, space)?;
    match format {
        Format::Human => {
            println!("space: {}", space.name());
            for (d, summand) in result.degrees.iter().enumerate() {
                println!("H_{d} = {summand}");
            }
            println!("euler: {chi}");
        }
        Format::Json => {
            #[derive(Serialize)]
            struct Doc {
                space: &'static str,
                betti: Vec<usize>,
                torsion: Vec<Vec<String>>,
                euler: i64,
            }
            let doc = Doc {
                space: space.name(),
                betti: result.betti_vector(),
                torsion: result
                    .degrees
                    .iter()
                    .map(|s| s.torsion.iter().map(|t| t.to_string()).collect())
                    .collect(),
                euler: chi,
            };
            print!("{}", to_json(&doc));
        }
        Format::Dot => return Err(no_dot("homology")),
    }
    Ok(())
}

fn cmd_pi1(path: &Path, format: Format) -> Result<(), Failure> {
    let (_, cc) = load(path)?;
    let p = pi1_presentation(&cc);
    match format {
        Format::Human => print!("{}", p.to_text()),
        Format::Json => {
            #[derive(Serialize)]
            struct RelationDoc {
                left: Vec<u8>,
                right: Vec<u8>,
            }
            #[derive(Serialize)]
            struct Doc {
                generators: usize,
                relations: Vec<RelationDoc>,
            }
            let doc = Doc {
                generators: p.generators,
                relations: p
                    .relations
                    .iter()
                    .map(|r| RelationDoc {
                        left: r.left.clone(),
                        right: r.right.clone(),
                    })
                    .collect(),
            };
            print!("{}", to_json(&doc));
        }
        Format::Dot => return Err(no_dot("pi1")),
    }
    Ok(())
}

fn cmd_euler(path: &Path, format: Format) -> Result<(), Failure> {
    let (_, cc) = load(path)?;
    let poset = build_sal(&cc).map_err(from_salvetti)?;
    let chi: i64 = poset
        .cells()
        .iter()
        .map(|c| if c.dim() % 2 == 0 { 1 } else { -1 })
        .sum();
    let order = cc.group_order();
    match format {
        Format::Human => {
            println!("euler: {chi}");
            println!("|W| = {order}");
        }
        Format::Json => {
            #[derive(Serialize)]
            struct Doc {
                euler: i64,
                group_order: String,
            }
            print!(
                "{}",
                to_json(&Doc {
                    euler: chi,
                    group_order: order.to_string(),
                })
            );
        }
        Format::Dot => return Err(no_dot("euler")),
    }
    Ok(())
}

fn cmd_check(seed: u64, format: Format) -> Result<(), Failure> {
    let outcomes = check::run_all(seed);
    let failed = outcomes.iter().filter(|o| o.error.is_some()).count();
    match format {
        Format::Human => {
            for o in &outcomes {
                match &o.error {
                    None => println!("check {} ... ok", o.name),
                    Some(e) => println!("check {} ... FAILED: {e}", o.name),
                }
            }
            if failed == 0 {
                println!("all {} checks passed (seed {seed})", outcomes.len());
            }
        }
        Format::Json => {
            #[derive(Serialize)]
            struct OutcomeDoc {
                name: &'static str,
                ok: bool,
                error: Option<String>,
            }
            #[derive(Serialize)]
            struct Doc {
                seed: u64,
                passed: usize,
                failed: usize,
                results: Vec<OutcomeDoc>,
            }
            let doc = Doc {
                seed,
                passed: outcomes.len() - failed,
                failed,
                results: outcomes
                    .iter()
                    .map(|o| OutcomeDoc {
                        name: o.name,
                        ok: o.error.is_none(),
                        error: o.error.clone(),
                    })
                    .collect(),
            };
            print!("{}", to_json(&doc));
        }
        Format::Dot => return Err(no_dot("check")),
    }
    if failed > 0 {
        return Err(Failure::Internal {
            module: "cli",
            message: format!("{failed} of {} checks failed", outcomes.len()),
        });
    }
    Ok(())
}
