//! Command-line driver for complex-valued evidence fusion.
//!
//! [`run`] parses arguments, executes one subcommand and returns the
//! process exit code: 0 on success, 1 for input or validation errors, 2
//! when a fusion is singular (`K = 1`).

pub mod decision;
pub mod error;
pub mod evidence;
pub mod surface;

use std::ffi::OsString;
use std::fs::File;
use std::io::{BufWriter, Write};
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand};
use gds_core::{sweep, Cbba, Combiner, SweepSpec};
use serde::Serialize;

use crate::decision::{decide, DecisionJson};
use crate::error::{CliError, Result};
use crate::evidence::{Evidence, EvidenceFile, NamedBody};

/// Default normalization tolerance for evidence files. Hand-entered masses
/// are usually rounded to a few decimals.
pub const DEFAULT_FILE_TOLERANCE: f64 = 1e-3;

#[derive(Debug, Parser)]
#[command(
    name = "gds",
    version,
    about = "Complex-valued Dempster-Shafer evidence fusion"
)]
pub struct Cli {
    /// Normalization tolerance applied when validating evidence files.
    #[arg(long, global = true, default_value_t = DEFAULT_FILE_TOLERANCE)]
    tolerance: f64,

    /// Refuse fusion when |1 - K| falls below this value.
    #[arg(long, global = true, default_value_t = gds_core::SINGULARITY_THRESHOLD)]
    singularity: f64,

    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Check every body in an evidence file.
    Validate { file: PathBuf },
    /// Fuse bodies with the generalized combination rule.
    Fuse {
        file: PathBuf,
        /// Comma-separated body names, fused left to right (default: all).
        #[arg(long, value_delimiter = ',')]
        bodies: Option<Vec<String>>,
        /// Emit the fused body as a full-precision evidence file.
        #[arg(long)]
        json: bool,
    },
    /// Complex belief of a proposition.
    Bel(QueryArgs),
    /// Complex plausibility of a proposition.
    Pl(QueryArgs),
    /// Conflict coefficient between two bodies.
    Conflict {
        file: PathBuf,
        #[arg(long, value_delimiter = ',', required = true)]
        bodies: Vec<String>,
        #[arg(long)]
        json: bool,
    },
    /// Write the |K| surface of the two-parameter family to CSV.
    Sweep {
        #[arg(long, default_value_t = gds_core::sweep::DEFAULT_X_STEPS)]
        xsteps: usize,
        #[arg(long, default_value_t = gds_core::sweep::DEFAULT_Y_STEPS)]
        ysteps: usize,
        #[arg(long)]
        out: PathBuf,
        /// Evidence file holding an alternative reference body.
        #[arg(long)]
        m2: Option<PathBuf>,
        /// Body to take from --m2 (default: the first).
        #[arg(long, requires = "m2")]
        body: Option<String>,
    },
    /// Fuse bodies, then pick the singleton with the largest Bel_c.
    Decide {
        file: PathBuf,
        #[arg(long, value_delimiter = ',')]
        bodies: Option<Vec<String>>,
        #[arg(long)]
        json: bool,
    },
}

#[derive(Debug, Args)]
struct QueryArgs {
    file: PathBuf,
    #[arg(long)]
    body: String,
    /// Comma-separated element labels; empty for the empty set.
    #[arg(long, value_delimiter = ',', num_args = 0.., allow_hyphen_values = true)]
    prop: Vec<String>,
}

/// Runs the CLI with the given arguments (program name first).
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            use clap::error::ErrorKind;
            return match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => {
                    let _ = write!(out, "{e}");
                    0
                }
                _ => {
                    let _ = write!(err, "{}", e.render());
                    1
                }
            };
        }
    };
    match execute(&cli, out, err) {
        Ok(()) => 0,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            e.exit_code()
        }
    }
}

fn execute(cli: &Cli, out: &mut dyn Write, err: &mut dyn Write) -> Result<()> {
    let combiner = Combiner::new(cli.singularity);
    let load = |file: &PathBuf| Evidence::load(file, cli.tolerance);
    match &cli.command {
        Command::Validate { file } => {
            let ev = load(file)?;
            for body in &ev.bodies {
                writeln!(
                    out,
                    "{}: valid, {} focal element(s), total = {:.4}",
                    body.name,
                    body.cbba.focal_elements().len(),
                    body.cbba.total()
                )?;
            }
        }
        Command::Fuse { file, bodies, json } => {
            let ev = load(file)?;
            let fused = fuse_selected(&combiner, &ev, bodies.as_deref())?;
            warn_overflow(&fused, err)?;
            if *json {
                let doc = EvidenceFile::from_bodies(&ev.frame, [("fused", &fused)]);
                writeln!(out, "{}", doc.to_json_pretty())?;
            } else {
                for (p, m) in fused.focal_elements() {
                    let polar = m.to_polar();
                    writeln!(
                        out,
                        "M({}) = {:.4}  (|M| = {:.4}, phase = {:.4})",
                        p.label(),
                        m,
                        polar.magnitude(),
                        clean4(polar.phase())
                    )?;
                }
            }
        }
        Command::Bel(q) | Command::Pl(q) => {
            let ev = load(&q.file)?;
            let body = ev.body(&q.body)?;
            let labels: Vec<&str> = q
                .prop
                .iter()
                .map(|s| s.trim())
                .filter(|s| !s.is_empty())
                .collect();
            let prop = ev
                .frame
                .proposition(labels)
                .map_err(|e| CliError::Usage(format!("--prop: {e}")))?;
            let (name, value) = match &cli.command {
                Command::Bel(_) => ("Bel_c", body.cbba.bel_c(&prop)?),
                _ => ("Pl_c", body.cbba.pl_c(&prop)?),
            };
            writeln!(out, "{name}({}) = {value:.4}", prop.label())?;
        }
        Command::Conflict { file, bodies, json } => {
            if bodies.len() != 2 {
                return Err(CliError::Usage(format!(
                    "--bodies needs exactly two names, got {}",
                    bodies.len()
                )));
            }
            let ev = load(file)?;
            let (m1, m2) = (ev.body(&bodies[0])?, ev.body(&bodies[1])?);
            let report = combiner.conflict(&m1.cbba, &m2.cbba)?;
            if *json {
                let doc = ConflictJson {
                    re: report.k.re(),
                    im: report.k.im(),
                    magnitude: report.k_magnitude,
                    singular: report.singular,
                };
                writeln!(
                    out,
                    "{}",
                    serde_json::to_string_pretty(&doc).expect("serializable")
                )?;
            } else {
                writeln!(out, "K = {:.4}, |K| = {:.4}", report.k, report.k_magnitude)?;
                if report.singular {
                    writeln!(out, "singular: combination of these bodies is undefined")?;
                }
            }
        }
        Command::Sweep {
            xsteps,
            ysteps,
            out: path,
            m2,
            body,
        } => {
            let mut spec = SweepSpec::new(*xsteps, *ysteps)?;
            if let Some(m2_file) = m2 {
                let ev = load(m2_file)?;
                let chosen = match body {
                    Some(name) => ev.body(name)?,
                    None => ev
                        .bodies
                        .first()
                        .ok_or_else(|| CliError::Usage("--m2 file has no bodies".into()))?,
                };
                spec = spec.with_m2(chosen.cbba.clone())?;
            }
            let cells = sweep(&spec)?;
            let file = File::create(path).map_err(|source| CliError::Create {
                path: path.display().to_string(),
                source,
            })?;
            surface::write_csv(&cells, BufWriter::new(file))?;
            let feasible: Vec<_> = cells.iter().filter(|c| c.feasible()).collect();
            writeln!(
                out,
                "wrote {} cells ({} feasible) to {}",
                cells.len(),
                feasible.len(),
                path.display()
            )?;
            let by_k = |a: &&&gds_core::SweepCell, b: &&&gds_core::SweepCell| {
                a.k_magnitude
                    .partial_cmp(&b.k_magnitude)
                    .expect("finite |K|")
            };
            if let (Some(lo), Some(hi)) =
                (feasible.iter().min_by(by_k), feasible.iter().max_by(by_k))
            {
                writeln!(
                    out,
                    "min |K| = {:.4} at ({:.3}, {:.3}); max |K| = {:.4} at ({:.3}, {:.3})",
                    lo.k_magnitude.unwrap_or_default(),
                    lo.x,
                    clean4(lo.y),
                    hi.k_magnitude.unwrap_or_default(),
                    hi.x,
                    clean4(hi.y)
                )?;
            }
        }
        Command::Decide { file, bodies, json } => {
            let ev = load(file)?;
            let fused = fuse_selected(&combiner, &ev, bodies.as_deref())?;
            warn_overflow(&fused, err)?;
            let d = decide(&fused);
            if *json {
                let doc = DecisionJson::from(&d);
                writeln!(
                    out,
                    "{}",
                    serde_json::to_string_pretty(&doc).expect("serializable")
                )?;
            } else {
                let score = d
                    .scores
                    .iter()
                    .find(|(p, _)| *p == d.winner)
                    .map(|(_, s)| *s)
                    .unwrap_or_default();
                writeln!(out, "winner: {} (Bel_c = {score:.4})", d.winner.label())?;
                for (p, s) in &d.scores {
                    writeln!(out, "Bel_c({}) = {s:.4}", p.label())?;
                }
                writeln!(out, "tie: {}", if d.tie { "yes" } else { "no" })?;
            }
        }
    }
    Ok(())
}

fn fuse_selected(combiner: &Combiner, ev: &Evidence, names: Option<&[String]>) -> Result<Cbba> {
    let selected: Vec<&NamedBody> = ev.select(names)?;
    let masses: Vec<Cbba> = selected.iter().map(|b| b.cbba.clone()).collect();
    Ok(combiner.combine_all(&masses)?)
}

fn warn_overflow(fused: &Cbba, err: &mut dyn Write) -> Result<()> {
    for (p, r) in fused.magnitude_overflow() {
        writeln!(err, "warning: fused mass of {p} has magnitude {r:.4} > 1")?;
    }
    Ok(())
}

fn clean4(v: f64) -> f64 {
    if (v * 1e4).round() == 0.0 {
        0.0
    } else {
        v
    }
}

#[derive(Serialize)]
struct ConflictJson {
    re: f64,
    im: f64,
    magnitude: f64,
    singular: bool,
}
