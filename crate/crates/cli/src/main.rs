//! `frame-duals`: resultants, verification, Legendre transforms and SVG
//! projections for single-loop frames.
//!
//! Exit codes: 0 success, 1 a check failed, 2 bad input.

use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use anyhow::{anyhow, Context};
use clap::{Parser, Subcommand, ValueEnum};

use frame_duals::document::{emit_document, emit_dual_csv, parse_document, parse_field_csv, ProjectDocument};
use frame_duals::fixtures::FrameExample;
use frame_duals::legendre::diagram_of_stress;
use frame_duals::render::{render_projections, RenderTarget};
use frame_duals::verify::{run_suite, DEFAULT_SEED};
use frame_duals::{decompose, position_at, CutPoint};

#[derive(Parser)]
#[command(name = "frame-duals", version, about = "Dual loops, hybrid loops and stress resultants of 3D frames")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Print force, total, lever and internal moments at a cut.
    Resultants {
        doc: PathBuf,
        /// Cut as `segment:param` (param in [0,1] for straight bars, angle for arcs).
        #[arg(long, default_value = "0:0")]
        cut: String,
    },
    /// Check the moment identities at random cuts around the loop.
    Verify {
        doc: PathBuf,
        #[arg(long, default_value_t = 100)]
        samples: usize,
        #[arg(long, env = "FRAME_DUALS_SEED")]
        seed: Option<u64>,
    },
    /// Transform a sampled stress function into dual samples.
    Legendre {
        field: PathBuf,
        #[arg(long)]
        out: PathBuf,
    },
    /// Draw the six basis-plane projections of a loop.
    Render {
        doc: PathBuf,
        #[arg(long, value_enum, default_value_t = Target::Dual)]
        target: Target,
        #[arg(long)]
        cut: Option<String>,
        #[arg(long)]
        out: PathBuf,
    },
    /// Write the rectangular and curved example documents.
    Fixtures {
        #[arg(long)]
        emit: PathBuf,
    },
}

#[derive(Copy, Clone, ValueEnum)]
enum Target {
    Form,
    Dual,
    Hybrid,
}

/// Input problems exit with 2, failed checks with 1.
enum Failure {
    Input(anyhow::Error),
    Check(String),
}

impl From<anyhow::Error> for Failure {
    fn from(e: anyhow::Error) -> Self {
        Failure::Input(e)
    }
}

fn load(path: &Path) -> anyhow::Result<ProjectDocument> {
    let text = fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?;
    parse_document(&text).with_context(|| format!("parsing {}", path.display()))
}

fn parse_cut(doc: &ProjectDocument, text: &str) -> anyhow::Result<CutPoint> {
    let (seg, param) = text.split_once(':').ok_or_else(|| anyhow!("cut must be `segment:param`, got `{text}`"))?;
    let seg: usize = seg.trim().parse().with_context(|| format!("bad segment index `{seg}`"))?;
    let param: f64 = param.trim().parse().with_context(|| format!("bad cut parameter `{param}`"))?;
    Ok(doc.structure.cut(seg, param)?)
}

fn run(cli: Cli) -> Result<(), Failure> {
    match cli.command {
        Command::Resultants { doc, cut } => {
            let doc = load(&doc)?;
            let cut = parse_cut(&doc, &cut)?;
            let x = position_at(&doc.structure, cut).map_err(anyhow::Error::from)?;
            let r = decompose(&doc.dual, x).map_err(|e| Failure::Check(e.to_string()))?;
            println!("cut             = {}:{}", cut.segment, cut.param);
            println!("x               = {x}");
            println!("force P         = {}", r.force);
            println!("total moment    = {}", r.total_moment);
            println!("lever x × P     = {}", r.lever_moment);
            println!("internal moment = {}", r.internal_moment);
        }
        Command::Verify { doc, samples, seed } => {
            let doc = load(&doc)?;
            if samples == 0 {
                return Err(Failure::Input(anyhow!("--samples must be at least 1")));
            }
            let seed = seed.or(doc.meta.seed).unwrap_or(DEFAULT_SEED);
            let report = run_suite(&doc.structure, &doc.dual, samples, seed);
            print!("{report}");
            if !report.passed() {
                return Err(Failure::Check("verification failed".into()));
            }
        }
        Command::Legendre { field, out } => {
            let text = fs::read_to_string(&field).with_context(|| format!("reading {}", field.display()))?;
            let field = parse_field_csv(&text).context("parsing field")?;
            let samples = diagram_of_stress(&field).context("transforming field")?;
            fs::write(&out, emit_dual_csv(&samples, field.dim()))
                .with_context(|| format!("writing {}", out.display()))?;
            println!("{} dual samples written to {}", samples.len(), out.display());
        }
        Command::Render { doc, target, cut, out } => {
            let doc = load(&doc)?;
            let target = match target {
                Target::Form => RenderTarget::Form,
                Target::Dual => RenderTarget::Dual,
                Target::Hybrid => {
                    let text = cut.ok_or_else(|| anyhow!("--target hybrid needs --cut"))?;
                    RenderTarget::Hybrid(parse_cut(&doc, &text)?)
                }
            };
            let svg = render_projections(&doc, target).map_err(anyhow::Error::from)?;
            fs::write(&out, svg).with_context(|| format!("writing {}", out.display()))?;
        }
        Command::Fixtures { emit } => {
            fs::create_dir_all(&emit).with_context(|| format!("creating {}", emit.display()))?;
            let ex = FrameExample::default();
            for (name, doc) in [("rect.json", ex.rectangle_document()), ("curved.json", ex.curved_document())] {
                let doc = doc.map_err(anyhow::Error::from)?;
                let path = emit.join(name);
                fs::write(&path, emit_document(&doc)).with_context(|| format!("writing {}", path.display()))?;
                println!("{}", path.display());
            }
        }
    }
    Ok(())
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Check(msg)) => {
            eprintln!("check failed: {msg}");
            ExitCode::from(1)
        }
        Err(Failure::Input(e)) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}
