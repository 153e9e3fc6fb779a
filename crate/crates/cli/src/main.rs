mod commands;
mod output;
mod svg;

use clap::{Args, Parser, Subcommand};
use coxstokes::Error;
use num_rational::Rational64;
use std::path::PathBuf;
use std::process::ExitCode;

/// Coxeter planes, Steinberg cross-sections and Stokes data for simple Lie algebras.
#[derive(Debug, Parser)]
#[command(name = "coxstokes", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Coxeter number, exponents, marks and bipartition of a type.
    Describe {
        #[arg(long = "type", value_name = "TYPE")]
        ty: String,
        #[command(flatten)]
        out: Output,
    },
    /// Coxeter-plane projection of the root system, optionally rendered as SVG.
    Plane {
        #[arg(long = "type", value_name = "TYPE")]
        ty: String,
        #[arg(long, value_name = "PATH")]
        svg_out: Option<PathBuf>,
        #[command(flatten)]
        tol: Tolerances,
        #[command(flatten)]
        out: Output,
    },
    /// Check singular directions, head and tail, Kostant chains and the ad(E₊) spectrum.
    Verify {
        #[arg(long = "type", value_name = "TYPE", required_unless_present = "all", conflicts_with = "all")]
        ty: Option<String>,
        /// Run every supported type.
        #[arg(long)]
        all: bool,
        /// Override the Π₂ nodes (1-based, comma separated).
        #[arg(long, value_name = "NODES", value_delimiter = ',', conflicts_with = "all")]
        pi2: Option<Vec<usize>>,
        /// Skip the adjoint spectrum above this algebra dimension.
        #[arg(long, default_value_t = coxstokes::spectrum::DIMENSION_CAP)]
        max_dim: usize,
        #[command(flatten)]
        tol: Tolerances,
        #[command(flatten)]
        out: Output,
    },
    /// Stokes data M⁰ = K₁K₂A_γ from asymptotic data.
    Stokes {
        #[arg(long = "type", value_name = "TYPE")]
        ty: String,
        #[command(flatten)]
        data: Asymptotics,
        /// standard, adjoint or omegaK.
        #[arg(long, default_value = "standard")]
        rep: String,
        #[command(flatten)]
        tol: Tolerances,
        #[command(flatten)]
        out: Output,
    },
    /// Integrate the sl(n+1) system around a loop and compare with P₀^{-s}(M⁰)^s.
    Monodromy {
        /// An type, e.g. A2 for sl3.
        #[arg(long = "type", value_name = "TYPE")]
        ty: String,
        /// Exponents k_0..k_l.
        #[arg(long, value_name = "LIST", value_delimiter = ',', allow_hyphen_values = true)]
        k: Vec<Rational64>,
        #[arg(long, default_value_t = 1.0, allow_hyphen_values = true)]
        z: f64,
        /// Coefficients c_0..c_l, all 1 by default.
        #[arg(long, value_name = "LIST", value_delimiter = ',')]
        c: Option<Vec<f64>>,
        #[arg(long, default_value_t = 1.0, allow_hyphen_values = true)]
        radius: f64,
        #[command(flatten)]
        tol: Tolerances,
        #[command(flatten)]
        out: Output,
    },
}

#[derive(Debug, Args)]
#[group(required = true, multiple = false)]
struct Asymptotics {
    /// m in the H-basis, comma separated rationals.
    #[arg(long, value_name = "LIST", value_delimiter = ',', allow_hyphen_values = true)]
    m: Option<Vec<Rational64>>,
    /// Exponents k_0..k_l.
    #[arg(long, value_name = "LIST", value_delimiter = ',', allow_hyphen_values = true)]
    k: Option<Vec<Rational64>>,
}

#[derive(Debug, Args, Clone, Copy)]
struct Tolerances {
    /// Angle and radius clustering in the plane.
    #[arg(long, default_value_t = 1e-9, allow_hyphen_values = true)]
    tol_ray: f64,
    /// Spectral and char-poly comparisons.
    #[arg(long, default_value_t = 1e-6, allow_hyphen_values = true)]
    tol_spec: f64,
}

#[derive(Debug, Args)]
struct Output {
    /// Write the JSON report here instead of stdout.
    #[arg(long, value_name = "PATH")]
    json_out: Option<PathBuf>,
}

/// Parsed invocation, validated.
#[derive(Debug)]
pub struct RunConfig {
    pub command: commands::Job,
    pub tol_ray: f64,
    pub tol_spec: f64,
    pub json_out: Option<PathBuf>,
    pub svg_out: Option<PathBuf>,
}

pub enum Failure {
    Domain(String),
    Verification(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::Mismatch { .. }
            | Error::Consistency(_)
            | Error::InvariantViolation(_)
            | Error::NumericFailure(_)
            | Error::Integrator(_) => Failure::Verification(e.to_string()),
            _ => Failure::Domain(e.to_string()),
        }
    }
}

fn config(cli: Cli) -> Result<RunConfig, Failure> {
    use commands::Job;
    let (command, tol, out, svg_out) = match cli.command {
        Command::Describe { ty, out } => (Job::Describe { ty }, None, out, None),
        Command::Plane { ty, svg_out, tol, out } => (Job::Plane { ty }, Some(tol), out, svg_out),
        Command::Verify { ty, all, pi2, max_dim, tol, out } => {
            let types = match (ty, all) {
                (Some(t), false) => vec![t],
                _ => coxstokes::AlgebraType::standard_list().iter().map(|t| t.to_string()).collect(),
            };
            (Job::Verify { types, pi2, max_dim }, Some(tol), out, None)
        }
        Command::Stokes { ty, data, rep, tol, out } => {
            let data = match (data.m, data.k) {
                (Some(m), _) => commands::Data::M(m),
                (None, Some(k)) => commands::Data::K(k),
                (None, None) => unreachable!("clap enforces the group"),
            };
            (Job::Stokes { ty, data, rep }, Some(tol), out, None)
        }
        Command::Monodromy { ty, k, z, c, radius, tol, out } => {
            (Job::Monodromy { ty, k, z, c, radius }, Some(tol), out, None)
        }
    };
    let tol = tol.unwrap_or(Tolerances { tol_ray: 1e-9, tol_spec: 1e-6 });
    for (name, v) in [("--tol-ray", tol.tol_ray), ("--tol-spec", tol.tol_spec)] {
        if !(v > 0.0 && v.is_finite()) {
            return Err(Failure::Domain(format!("{name} must be positive, got {v}")));
        }
    }
    Ok(RunConfig { command, tol_ray: tol.tol_ray, tol_spec: tol.tol_spec, json_out: out.json_out, svg_out })
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { ExitCode::from(1) } else { ExitCode::SUCCESS };
        }
    };
    let result = config(cli).and_then(|cfg| commands::run(&cfg));
    match result {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(3),
        Err(Failure::Domain(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
        Err(Failure::Verification(msg)) => {
            eprintln!("verification failed: {msg}");
            ExitCode::from(3)
        }
    }
}
