//! `dyck-chi`: compute and verify characteristic functions of Dyck paths.
//!
//! Exit status: 0 when every check passes, 1 when a counterexample is found,
//! 2 on usage or input errors.

use std::fs::File;
use std::io::{self, BufWriter, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use anyhow::{bail, Context, Result};
use clap::{Args, Parser, Subcommand, ValueEnum};
use dyck_chi::chi::verify::{self, Report};
use dyck_chi::{all_paths, chi, partitions_of, Basis, DyckPath, Partition, SymFunc};
use rayon::prelude::*;
use serde_json::json;

/// Environment variable capping the semilength (or partition size) of any request.
const CAP_VAR: &str = "CHI_MAX_SEMILENGTH";

/// Reports are computed and flushed in chunks of this many instances.
const CHUNK: usize = 64;

#[derive(Parser)]
#[command(
    name = "dyck-chi",
    version,
    about = "Dyck path characteristic functions"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Statistics and maps of a single path.
    #[command(subcommand)]
    Dyck(DyckCmd),
    /// Compute chi of a path.
    #[command(subcommand)]
    Chi(ChiCmd),
    /// Paths and exponents attached to a partition.
    #[command(subcommand)]
    Lambda(LambdaCmd),
    /// Check identities; prints one JSON report per instance.
    #[command(subcommand)]
    Verify(VerifyCmd),
    /// Exhaustive scans over all paths up to a semilength.
    #[command(subcommand)]
    Scan(ScanCmd),
}

#[derive(Subcommand)]
enum DyckCmd {
    /// Area, corners, x-coordinates, reading labels and dinv pairs.
    Stats {
        path: String,
    },
    Zeta {
        path: String,
    },
    ZetaInv {
        path: String,
    },
    Rev {
        path: String,
    },
}

#[derive(Subcommand)]
enum ChiCmd {
    Compute {
        path: String,
        #[arg(long, value_enum, default_value_t = BasisArg::Monomial)]
        basis: BasisArg,
        /// `bottom`, `top`, or `t=K`.
        #[arg(long, value_parser = parse_slice)]
        slice: Option<Slice>,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum BasisArg {
    Monomial,
    Schur,
}

#[derive(Clone, Copy, Debug)]
enum Slice {
    Bottom,
    Top,
    Exponent(i32),
}

fn parse_slice(s: &str) -> std::result::Result<Slice, String> {
    match s {
        "bottom" => Ok(Slice::Bottom),
        "top" => Ok(Slice::Top),
        _ => s
            .strip_prefix("t=")
            .and_then(|k| k.parse().ok())
            .map(Slice::Exponent)
            .ok_or_else(|| format!("expected bottom, top or t=K, got {s:?}")),
    }
}

#[derive(Subcommand)]
enum LambdaCmd {
    /// The Inv, Quinv and balanced paths of a partition such as `3,2`.
    Paths { partition: String },
    /// The normalising exponents and the corner count.
    Alpha { partition: String },
}

#[derive(Args)]
#[group(required = true, multiple = false)]
struct LambdaSelect {
    /// Every partition of size 1 through N.
    #[arg(long)]
    max_size: Option<usize>,
    /// A single partition such as `3,2`.
    #[arg(long)]
    lambda: Option<String>,
}

#[derive(Subcommand)]
enum VerifyCmd {
    MainTheorem(LambdaSelect),
    RevInvariance {
        #[arg(long)]
        max_semilength: usize,
    },
    ZetaConjugation {
        #[arg(long)]
        max_size: usize,
    },
    CornerFlip {
        #[arg(long)]
        max_semilength: usize,
    },
    OmegaBar {
        #[arg(long)]
        max_semilength: usize,
    },
    ClosedForms {
        #[arg(long)]
        n: usize,
    },
    BlockSwap {
        /// Block lengths such as `1,2`.
        #[arg(long)]
        blocks: String,
        /// 1-based position of the left block.
        #[arg(long)]
        i: usize,
    },
}

#[derive(Subcommand)]
enum ScanCmd {
    SchurPositivity {
        #[arg(long)]
        max_semilength: usize,
        /// Write the JSON lines here instead of stdout.
        #[arg(long)]
        out: Option<PathBuf>,
        /// Worker threads; 1 runs serially.
        #[arg(long, default_value_t = 1)]
        jobs: usize,
    },
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() {
                ExitCode::from(2)
            } else {
                ExitCode::SUCCESS
            };
        }
    };
    match run(cli.command) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}

/// Returns whether every check passed.
fn run(command: Command) -> Result<bool> {
    match command {
        Command::Dyck(cmd) => run_dyck(cmd).map(|()| true),
        Command::Chi(cmd) => run_chi(cmd).map(|()| true),
        Command::Lambda(cmd) => run_lambda(cmd).map(|()| true),
        Command::Verify(cmd) => run_verify(cmd),
        Command::Scan(cmd) => run_scan(cmd),
    }
}

fn read_cap() -> Result<Option<usize>> {
    match std::env::var(CAP_VAR) {
        Ok(v) => v
            .trim()
            .parse()
            .map(Some)
            .with_context(|| format!("{CAP_VAR} must be a non-negative integer, got {v:?}")),
        Err(std::env::VarError::NotPresent) => Ok(None),
        Err(e) => bail!("{CAP_VAR}: {e}"),
    }
}

fn check_cap(size: usize) -> Result<()> {
    if let Some(cap) = read_cap()? {
        if size > cap {
            bail!("size {size} exceeds {CAP_VAR}={cap}");
        }
    }
    Ok(())
}

fn parse_path(text: &str) -> Result<DyckPath> {
    let path: DyckPath = text
        .parse()
        .with_context(|| format!("invalid path {text:?}"))?;
    check_cap(path.semilength())?;
    Ok(path)
}

fn parse_partition(text: &str) -> Result<Partition> {
    let lam: Partition = text
        .parse()
        .with_context(|| format!("invalid partition {text:?}"))?;
    if lam.is_empty() {
        bail!("partition must be non-empty");
    }
    check_cap(lam.size())?;
    Ok(lam)
}

fn print_json(value: &serde_json::Value) -> Result<()> {
    let mut out = io::stdout().lock();
    serde_json::to_writer(&mut out, value)?;
    writeln!(out)?;
    Ok(())
}

fn run_dyck(cmd: DyckCmd) -> Result<()> {
    match cmd {
        DyckCmd::Stats { path } => {
            let p = parse_path(&path)?;
            let labels = p.reading_labels();
            print_json(&json!({
                "path": p,
                "semilength": p.semilength(),
                "area": p.area_cells(),
                "corners": p.corners(),
                "x_coords": p.x_coords(),
                "labels": labels.label_of_row,
                "sigma": labels.sigma,
                "dinv_pairs": p.dinv_pairs(),
            }))
        }
        DyckCmd::Zeta { path } => print_line(parse_path(&path)?.zeta()),
        DyckCmd::ZetaInv { path } => print_line(parse_path(&path)?.zeta_inverse()),
        DyckCmd::Rev { path } => print_line(parse_path(&path)?.reverse()),
    }
}

fn print_line(p: DyckPath) -> Result<()> {
    writeln!(io::stdout().lock(), "{p}")?;
    Ok(())
}

fn run_chi(cmd: ChiCmd) -> Result<()> {
    let ChiCmd::Compute { path, basis, slice } = cmd;
    let p = parse_path(&path)?;
    let mut func: SymFunc = chi(&p).func;
    if let Some(slice) = slice {
        let k = match slice {
            Slice::Bottom => 0,
            Slice::Top => p.corners().len() as i32,
            Slice::Exponent(k) => k,
        };
        func = func.t_slice(k);
    }
    let func = match basis {
        BasisArg::Monomial => func.to_basis(Basis::Monomial),
        BasisArg::Schur => func.to_basis(Basis::Schur),
    };
    print_json(&serde_json::to_value(&func)?)
}

fn run_lambda(cmd: LambdaCmd) -> Result<()> {
    match cmd {
        LambdaCmd::Paths { partition } => {
            let lam = parse_partition(&partition)?;
            print_json(&json!({
                "lambda": lam,
                "inv": lam.path_inv(),
                "quinv": lam.path_quinv(),
                "balanced": lam.path_balanced(),
            }))
        }
        LambdaCmd::Alpha { partition } => {
            let lam = parse_partition(&partition)?;
            print_json(&json!({
                "lambda": lam,
                "alpha_inv": lam.alpha_inv(),
                "alpha_quinv": lam.alpha_quinv(),
                "corner_count": lam.corner_count(),
            }))
        }
    }
}

fn partitions_up_to(n: usize) -> Result<Vec<Partition>> {
    check_cap(n)?;
    Ok((1..=n).flat_map(partitions_of).collect())
}

fn paths_up_to(n: usize) -> Result<Vec<DyckPath>> {
    check_cap(n)?;
    Ok((0..=n).flat_map(all_paths).collect())
}

/// Runs `check` on each instance, writing reports in input order; returns
/// whether all passed.
fn emit_reports<T, F>(instances: &[T], jobs: usize, out: &mut dyn Write, check: F) -> Result<bool>
where
    T: Sync,
    F: Fn(&T) -> Report + Sync,
{
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(jobs.max(1))
        .build()
        .context("building the worker pool")?;
    let mut all_pass = true;
    for chunk in instances.chunks(CHUNK) {
        let reports: Vec<Report> = if jobs <= 1 {
            chunk.iter().map(&check).collect()
        } else {
            pool.install(|| chunk.par_iter().map(&check).collect())
        };
        for r in &reports {
            all_pass &= r.pass;
            serde_json::to_writer(&mut *out, r)?;
            writeln!(out)?;
        }
        out.flush()?;
    }
    Ok(all_pass)
}

fn emit_serial<T>(instances: &[T], check: impl Fn(&T) -> Report + Sync) -> Result<bool>
where
    T: Sync,
{
    let mut out = BufWriter::new(io::stdout().lock());
    emit_reports(instances, 1, &mut out, check)
}

fn run_verify(cmd: VerifyCmd) -> Result<bool> {
    match cmd {
        VerifyCmd::MainTheorem(select) => {
            let lambdas = match (select.max_size, select.lambda) {
                (Some(n), None) => partitions_up_to(n)?,
                (None, Some(text)) => vec![parse_partition(&text)?],
                _ => bail!("pass exactly one of --max-size or --lambda"),
            };
            emit_serial(&lambdas, |lam| verify::verify_main_theorem(lam).report)
        }
        VerifyCmd::RevInvariance { max_semilength } => {
            emit_serial(&paths_up_to(max_semilength)?, verify::verify_rev_invariance)
        }
        VerifyCmd::ZetaConjugation { max_size } => {
            let lambdas = partitions_up_to(max_size)?;
            let maps = emit_serial(&lambdas, verify::verify_zeta_conjugation)?;
            let sizes: Vec<usize> = (0..=max_size).collect();
            let bijective = emit_serial(&sizes, |&n| verify::verify_zeta_bijection(n))?;
            Ok(maps && bijective)
        }
        VerifyCmd::CornerFlip { max_semilength } => {
            emit_serial(&paths_up_to(max_semilength)?, verify::verify_corner_flip)
        }
        VerifyCmd::OmegaBar { max_semilength } => {
            emit_serial(&paths_up_to(max_semilength)?, verify::verify_omega_bar)
        }
        VerifyCmd::ClosedForms { n } => {
            if n == 0 {
                bail!("--n must be at least 1");
            }
            check_cap(n)?;
            let reports = verify::verify_closed_forms(n);
            emit_serial(&reports, Report::clone)
        }
        VerifyCmd::BlockSwap { blocks, i } => {
            let blocks = parse_blocks(&blocks)?;
            check_cap(blocks.iter().sum())?;
            let report = verify::verify_block_swap(&blocks, i)?;
            emit_serial(&[report], Report::clone)
        }
    }
}

fn parse_blocks(text: &str) -> Result<Vec<usize>> {
    text.split(',')
        .map(|s| {
            s.trim()
                .parse::<usize>()
                .with_context(|| format!("invalid block length {s:?}"))
        })
        .collect()
}

fn run_scan(cmd: ScanCmd) -> Result<bool> {
    let ScanCmd::SchurPositivity {
        max_semilength,
        out,
        jobs,
    } = cmd;
    if jobs == 0 {
        bail!("--jobs must be at least 1");
    }
    let paths = paths_up_to(max_semilength)?;
    let mut sink: Box<dyn Write> = match &out {
        Some(file) => Box::new(BufWriter::new(
            File::create(file).with_context(|| format!("creating {}", file.display()))?,
        )),
        None => Box::new(BufWriter::new(io::stdout().lock())),
    };
    let pass = emit_reports(&paths, jobs, &mut sink, verify::verify_schur_positivity)?;
    eprintln!(
        "scanned {} paths up to semilength {max_semilength}: {}",
        paths.len(),
        if pass {
            "all Schur positive"
        } else {
            "counterexample found"
        }
    );
    Ok(pass)
}
