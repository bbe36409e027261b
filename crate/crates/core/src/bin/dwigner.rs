//! Command-line interface over the phase-space library.
//!
//! Exit codes: 0 success, 1 invariant-suite failure, 2 invalid state,
//! 3 I/O or malformed input, 4 unsupported basis/dimension combination.

use clap::{Parser, Subcommand, ValueEnum};
use dwigner::io::{
    constants_to_json, generators_to_json, grid_to_csv, grid_to_json, DensityMatrixFile,
};
use dwigner::su3::{toy_model, ToyModelParams};
use dwigner::sun::{DensityMatrix, GeneratorSet, StructureConstants};
use dwigner::wigner::{wigner_direct, WignerBasis};
use dwigner::{Error, SchwingerPair};
use std::path::PathBuf;
use std::process::ExitCode;

#[derive(Parser)]
#[command(name = "dwigner", version, about = "Discrete phase-space grids, SU(N) generators, and invariant checks for N-level systems")]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Clone, Copy, ValueEnum)]
enum BasisArg {
    G,
    Delta,
}

#[derive(Clone, Copy, ValueEnum)]
enum OutFormat {
    Csv,
    Json,
}

#[derive(Clone, Copy, ValueEnum)]
enum TensorArg {
    F,
    D,
}

#[derive(Subcommand)]
enum Cmd {
    /// Wigner grid of a density matrix loaded from JSON
    Wigner {
        /// Hilbert-space dimension; must match the input file
        #[arg(long)]
        n: usize,
        /// Path to the density-matrix JSON file
        #[arg(long)]
        rho: PathBuf,
        /// Kernel family (delta requires odd n)
        #[arg(long, value_enum, default_value_t = BasisArg::G)]
        basis: BasisArg,
        #[arg(long, value_enum, default_value_t = OutFormat::Csv)]
        out: OutFormat,
        /// Output path; stdout when omitted
        #[arg(long)]
        output: Option<PathBuf>,
    },
    /// JSON dump of the su(n) generator matrices
    Generators {
        #[arg(long)]
        n: usize,
        /// Generator ordering (only the interleaved standard order exists)
        #[arg(long, default_value = "gellmann")]
        order: String,
        #[arg(long)]
        output: Option<PathBuf>,
    },
    /// Sparse structure-constant triples (1-based indices)
    Constants {
        #[arg(long)]
        n: usize,
        #[arg(long, value_enum)]
        tensor: TensorArg,
        #[arg(long)]
        output: Option<PathBuf>,
    },
    /// Equal-population three-level model: closed-form grid plus metadata
    Toy {
        #[arg(long)]
        p1: f64,
        #[arg(long)]
        p2: f64,
        #[arg(long)]
        p3: f64,
        #[arg(long, value_enum, default_value_t = OutFormat::Csv)]
        out: OutFormat,
        #[arg(long)]
        output: Option<PathBuf>,
    },
    /// Run the registered invariant suite
    Check {
        #[arg(long)]
        n: usize,
        /// Seed for the reproducible random states
        #[arg(long, default_value_t = 42)]
        seed: u64,
    },
}

const EXIT_CHECK_FAILED: u8 = 1;
const EXIT_INVALID_STATE: u8 = 2;
const EXIT_BAD_INPUT: u8 = 3;
const EXIT_UNSUPPORTED: u8 = 4;

struct CliFailure {
    code: u8,
    message: String,
}

fn fail(code: u8, message: impl Into<String>) -> CliFailure {
    CliFailure {
        code,
        message: message.into(),
    }
}

fn lib_error_code(e: &Error) -> u8 {
    match e {
        Error::InvalidState(_) => EXIT_INVALID_STATE,
        Error::EvenDimension(_) | Error::NonReal(_) => EXIT_UNSUPPORTED,
        _ => EXIT_BAD_INPUT,
    }
}

fn emit(text: &str, output: &Option<PathBuf>) -> Result<(), CliFailure> {
    match output {
        Some(path) => std::fs::write(path, text)
            .map_err(|e| fail(EXIT_BAD_INPUT, format!("cannot write {}: {e}", path.display()))),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

fn cmd_wigner(
    n: usize,
    rho_path: &PathBuf,
    basis: BasisArg,
    out: OutFormat,
    output: &Option<PathBuf>,
) -> Result<(), CliFailure> {
    if n < 2 {
        return Err(fail(EXIT_BAD_INPUT, format!("n must be at least 2, got {n}")));
    }
    if matches!(basis, BasisArg::Delta) && n % 2 == 0 {
        return Err(fail(
            EXIT_UNSUPPORTED,
            format!("the delta kernel requires odd n, got {n}"),
        ));
    }
    let text = std::fs::read_to_string(rho_path)
        .map_err(|e| fail(EXIT_BAD_INPUT, format!("cannot read {}: {e}", rho_path.display())))?;
    let file: DensityMatrixFile = serde_json::from_str(&text)
        .map_err(|e| fail(EXIT_BAD_INPUT, format!("malformed density matrix: {e}")))?;
    if file.n != n {
        return Err(fail(
            EXIT_BAD_INPUT,
            format!("--n {n} does not match file dimension {}", file.n),
        ));
    }
    let m = file
        .to_matrix()
        .map_err(|e| fail(EXIT_BAD_INPUT, e.to_string()))?;
    let rho = DensityMatrix::new(m).map_err(|e| fail(EXIT_INVALID_STATE, e.to_string()))?;
    let pair = SchwingerPair::new(n).map_err(|e| fail(EXIT_BAD_INPUT, e.to_string()))?;
    let grid = wigner_direct(
        &rho,
        &pair,
        match basis {
            BasisArg::G => WignerBasis::G,
            BasisArg::Delta => WignerBasis::Delta,
        },
    )
    .map_err(|e| fail(lib_error_code(&e), e.to_string()))?;
    let text = match out {
        OutFormat::Csv => grid_to_csv(&grid),
        OutFormat::Json => grid_to_json(&grid) + "\n",
    };
    emit(&text, output)
}

fn cmd_generators(n: usize, order: &str, output: &Option<PathBuf>) -> Result<(), CliFailure> {
    if order != "gellmann" {
        return Err(fail(
            EXIT_BAD_INPUT,
            format!("unknown ordering '{order}'; only 'gellmann' is defined"),
        ));
    }
    let gens = GeneratorSet::new(n).map_err(|e| fail(EXIT_BAD_INPUT, e.to_string()))?;
    emit(&(generators_to_json(&gens) + "\n"), output)
}

fn cmd_constants(n: usize, tensor: TensorArg, output: &Option<PathBuf>) -> Result<(), CliFailure> {
    let gens = GeneratorSet::new(n).map_err(|e| fail(EXIT_BAD_INPUT, e.to_string()))?;
    let sc = StructureConstants::new(&gens).map_err(|e| fail(EXIT_BAD_INPUT, e.to_string()))?;
    let text = constants_to_json(
        &sc,
        match tensor {
            TensorArg::F => 'f',
            TensorArg::D => 'd',
        },
    )
    .map_err(|e| fail(EXIT_BAD_INPUT, e.to_string()))?;
    emit(&(text + "\n"), output)
}

fn cmd_toy(
    p1: f64,
    p2: f64,
    p3: f64,
    out: OutFormat,
    output: &Option<PathBuf>,
) -> Result<(), CliFailure> {
    let params =
        ToyModelParams::new(p1, p2, p3).map_err(|e| fail(EXIT_INVALID_STATE, e.to_string()))?;
    let toy = toy_model(params).map_err(|e| fail(EXIT_INVALID_STATE, e.to_string()))?;
    let text = match out {
        OutFormat::Csv => {
            let mut s = grid_to_csv(&toy.grid);
            s.push_str(&format!("# purity,{}\n", toy.purity));
            s.push_str(&format!("# bloch_norm_sq,{}\n", toy.bloch_norm_sq));
            s.push_str(&format!("# min_eigenvalue,{}\n", toy.min_eigenvalue));
            s
        }
        OutFormat::Json => {
            let grid_json: serde_json::Value =
                serde_json::from_str(&grid_to_json(&toy.grid)).expect("grid json");
            let mut obj = grid_json.as_object().cloned().expect("grid object");
            obj.insert("purity".into(), toy.purity.into());
            obj.insert("bloch_norm_sq".into(), toy.bloch_norm_sq.into());
            obj.insert("min_eigenvalue".into(), toy.min_eigenvalue.into());
            serde_json::to_string_pretty(&obj).expect("toy json") + "\n"
        }
    };
    emit(&text, output)
}

fn cmd_check(n: usize, seed: u64) -> Result<(), CliFailure> {
    if n < 2 {
        return Err(fail(EXIT_BAD_INPUT, format!("n must be at least 2, got {n}")));
    }
    let reports =
        dwigner::check::run_checks(n, seed).map_err(|e| fail(EXIT_BAD_INPUT, e.to_string()))?;
    let mut all_ok = true;
    for r in &reports {
        let status = if r.passed() { "PASS" } else { "FAIL" };
        all_ok &= r.passed();
        println!(
            "{status} {name}: max deviation {dev:.3e} (tolerance {tol:.1e})",
            name = r.name,
            dev = r.max_deviation,
            tol = r.tolerance
        );
    }
    if all_ok {
        println!("all {} invariants passed (n={n}, seed={seed})", reports.len());
        Ok(())
    } else {
        Err(fail(EXIT_CHECK_FAILED, "invariant suite failed"))
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            // help/version requests are not errors
            if e.use_stderr() {
                eprintln!("{e}");
                return ExitCode::from(EXIT_BAD_INPUT);
            }
            print!("{e}");
            return ExitCode::SUCCESS;
        }
    };
    let result = match &cli.cmd {
        Cmd::Wigner {
            n,
            rho,
            basis,
            out,
            output,
        } => cmd_wigner(*n, rho, *basis, *out, output),
        Cmd::Generators { n, order, output } => cmd_generators(*n, order, output),
        Cmd::Constants { n, tensor, output } => cmd_constants(*n, *tensor, output),
        Cmd::Toy {
            p1,
            p2,
            p3,
            out,
            output,
        } => cmd_toy(*p1, *p2, *p3, *out, output),
        Cmd::Check { n, seed } => cmd_check(*n, *seed),
    };
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(f) => {
            eprintln!("error: {}", f.message);
            ExitCode::from(f.code)
        }
    }
}
