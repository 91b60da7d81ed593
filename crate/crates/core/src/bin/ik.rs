//! Command-line front end: evaluate η, θ₁, Λ, Dedekind sums, and eta
//! multipliers; run the verification suite; dump Dedekind-sum tables.

use std::io::Write;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use num_complex::Complex64;

use iseki_kernel::verify::{render_complex, render_rational, run_suite, Family, SampleSpec};
use iseki_kernel::{
    dedekind_sum, eta, eta_character_dedekind, eta_character_rademacher, g0, gcd, lambda_series,
    theta1_product, theta1_series, LambdaParams, ModularMatrix, SeriesConfig, UpperHalfPoint,
};

#[derive(Parser)]
#[command(name = "ik", about = "Eta/theta transformation-law kernel", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Evaluate a single function at given arguments
    Eval {
        #[command(subcommand)]
        target: EvalCmd,
    },
    /// Run identity-verification suites and emit reports
    Verify {
        /// Check family: iseki, theta1, eta, quasiperiod, eq29, characters,
        /// reciprocity, fourier, sawtooth, or all
        family: String,
        /// RNG seed for sampled families
        #[arg(long, default_value_t = 42)]
        seed: u64,
        /// Number of seeded draws per sampled family
        #[arg(long, default_value_t = 200)]
        count: usize,
        /// Report format
        #[arg(long, value_enum, default_value_t = Format::Json)]
        format: Format,
        /// Output path (default: standard output)
        #[arg(long)]
        out: Option<std::path::PathBuf>,
        #[command(flatten)]
        precision: Precision,
    },
    /// Emit tables as CSV
    Table {
        #[command(subcommand)]
        target: TableCmd,
    },
}

#[derive(Subcommand)]
enum EvalCmd {
    /// Dedekind eta η(τ)
    Eta {
        /// τ as RE,IM with IM > 0
        #[arg(long, value_parser = parse_complex)]
        tau: Complex64,
        #[command(flatten)]
        precision: Precision,
    },
    /// Jacobi θ₁(z, τ)
    Theta1 {
        /// z as RE,IM
        #[arg(long, value_parser = parse_complex)]
        z: Complex64,
        /// τ as RE,IM with IM > 0
        #[arg(long, value_parser = parse_complex)]
        tau: Complex64,
        #[arg(long, value_enum, default_value_t = Theta1Method::Product)]
        method: Theta1Method,
        #[command(flatten)]
        precision: Precision,
    },
    /// Λ(α, β, w, θ) log-series and its correction g₀
    Lambda {
        #[arg(long)]
        alpha: f64,
        #[arg(long)]
        beta: f64,
        #[arg(long)]
        theta: f64,
        /// w as RE,IM with RE > 0
        #[arg(long, value_parser = parse_complex)]
        w: Complex64,
        #[command(flatten)]
        precision: Precision,
    },
    /// Exact Dedekind sum s(h, k)
    DedekindSum {
        #[arg(long)]
        h: i64,
        #[arg(long)]
        k: i64,
    },
    /// Eta multiplier ε(A) as an exact phase
    EtaChar {
        #[arg(long, allow_hyphen_values = true)]
        a: i64,
        #[arg(long, allow_hyphen_values = true)]
        b: i64,
        #[arg(long, allow_hyphen_values = true)]
        c: i64,
        #[arg(long, allow_hyphen_values = true)]
        d: i64,
        #[arg(long, value_enum, default_value_t = CharForm::Dedekind)]
        form: CharForm,
    },
}

#[derive(Subcommand)]
enum TableCmd {
    /// CSV table of s(h, k) for 0 < h < k ≤ k-max, gcd(h, k) = 1
    Dedekind {
        #[arg(long)]
        k_max: i64,
    },
}

#[derive(Copy, Clone, PartialEq, Eq, ValueEnum)]
enum Theta1Method {
    Product,
    Series,
}

#[derive(Copy, Clone, PartialEq, Eq, ValueEnum)]
enum CharForm {
    Dedekind,
    Rademacher,
}

#[derive(Copy, Clone, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Csv,
}

/// Precision controls shared by evaluation and verification; `IK_TAIL_EPS`
/// overrides the tail-bound default when the flag is absent.
#[derive(Args)]
struct Precision {
    /// Stop summation once the term-magnitude bound falls below this
    #[arg(long)]
    tail_eps: Option<f64>,
    /// Fail loudly after this many terms
    #[arg(long, default_value_t = 10_000)]
    max_terms: usize,
}

impl Precision {
    fn config(&self) -> Result<SeriesConfig, String> {
        let tail_eps = match self.tail_eps {
            Some(e) => e,
            None => match std::env::var("IK_TAIL_EPS") {
                Ok(s) => s
                    .parse::<f64>()
                    .map_err(|_| format!("IK_TAIL_EPS is not a number: {s}"))?,
                Err(_) => 1e-18,
            },
        };
        SeriesConfig::new(tail_eps, self.max_terms).map_err(|e| e.to_string())
    }
}

fn parse_complex(s: &str) -> Result<Complex64, String> {
    let (re, im) = s
        .split_once(',')
        .ok_or_else(|| format!("expected RE,IM, got {s}"))?;
    let re: f64 = re.trim().parse().map_err(|_| format!("bad real part: {re}"))?;
    let im: f64 = im.trim().parse().map_err(|_| format!("bad imaginary part: {im}"))?;
    Ok(Complex64::new(re, im))
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => code,
        Err(msg) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}

fn run(cli: Cli) -> Result<ExitCode, String> {
    match cli.command {
        Command::Eval { target } => {
            run_eval(target)?;
            Ok(ExitCode::SUCCESS)
        }
        Command::Verify {
            family,
            seed,
            count,
            format,
            out,
            precision,
        } => run_verify(&family, seed, count, format, out, &precision),
        Command::Table { target } => {
            run_table(target)?;
            Ok(ExitCode::SUCCESS)
        }
    }
}

fn run_eval(target: EvalCmd) -> Result<(), String> {
    match target {
        EvalCmd::Eta { tau, precision } => {
            let cfg = precision.config()?;
            let tau = UpperHalfPoint::new(tau).map_err(|e| e.to_string())?;
            let v = eta(tau, &cfg).map_err(|e| e.to_string())?;
            println!("{}", render_complex(v));
        }
        EvalCmd::Theta1 {
            z,
            tau,
            method,
            precision,
        } => {
            let cfg = precision.config()?;
            let tau = UpperHalfPoint::new(tau).map_err(|e| e.to_string())?;
            let v = match method {
                Theta1Method::Product => theta1_product(z, tau, &cfg),
                Theta1Method::Series => theta1_series(z, tau, &cfg),
            }
            .map_err(|e| e.to_string())?;
            println!("{}", render_complex(v));
        }
        EvalCmd::Lambda {
            alpha,
            beta,
            theta,
            w,
            precision,
        } => {
            let cfg = precision.config()?;
            let p = LambdaParams::new(alpha, beta, w, Complex64::new(theta, 0.0))
                .map_err(|e| e.to_string())?;
            let v = lambda_series(&p, &cfg).map_err(|e| e.to_string())?;
            println!("lambda = {}", render_complex(v));
            println!("g0 = {}", render_complex(g0(&p)));
        }
        EvalCmd::DedekindSum { h, k } => {
            let s = dedekind_sum(h, k).map_err(|e| e.to_string())?;
            println!("{}", render_rational(s));
        }
        EvalCmd::EtaChar { a, b, c, d, form } => {
            let m = ModularMatrix::new(a, b, c, d).map_err(|e| e.to_string())?;
            let eps = match form {
                CharForm::Dedekind => eta_character_dedekind(&m),
                CharForm::Rademacher => eta_character_rademacher(&m),
            }
            .map_err(|e| e.to_string())?;
            println!("t = {}", eps.t());
            println!("value = {}", render_complex(eps.to_complex()));
        }
    }
    Ok(())
}

fn run_verify(
    family: &str,
    seed: u64,
    count: usize,
    format: Format,
    out: Option<std::path::PathBuf>,
    precision: &Precision,
) -> Result<ExitCode, String> {
    let cfg = precision.config()?;
    let families = if family == "all" {
        Family::all()
    } else {
        vec![family.parse::<Family>()?]
    };
    let spec = SampleSpec {
        seed,
        count,
        ..SampleSpec::default()
    };
    let (reports, summary) = run_suite(&spec, &cfg, &families);

    let mut buf: Vec<u8> = Vec::new();
    match format {
        Format::Json => {
            for r in &reports {
                let line = serde_json::to_string(r).map_err(|e| e.to_string())?;
                buf.extend_from_slice(line.as_bytes());
                buf.push(b'\n');
            }
            let line = serde_json::to_string(&summary).map_err(|e| e.to_string())?;
            buf.extend_from_slice(line.as_bytes());
            buf.push(b'\n');
        }
        Format::Csv => {
            let mut wtr = csv::Writer::from_writer(&mut buf);
            wtr.write_record([
                "check_id",
                "residual",
                "tolerance",
                "passed",
                "skipped",
                "terms_used",
                "lhs",
                "rhs",
                "inputs",
            ])
            .map_err(|e| e.to_string())?;
            for r in &reports {
                let inputs = serde_json::to_string(&r.inputs).map_err(|e| e.to_string())?;
                wtr.write_record([
                    r.check_id.as_str(),
                    &r.residual.to_string(),
                    &r.tolerance.to_string(),
                    &r.passed.to_string(),
                    &r.skipped.to_string(),
                    &r.terms_used.to_string(),
                    r.lhs.as_str(),
                    r.rhs.as_str(),
                    inputs.as_str(),
                ])
                .map_err(|e| e.to_string())?;
            }
            wtr.flush().map_err(|e| e.to_string())?;
            drop(wtr);
            // summary rides on stderr so the CSV stream stays a single table
            eprintln!(
                "{}",
                serde_json::to_string(&summary).map_err(|e| e.to_string())?
            );
        }
    }

    match out {
        Some(path) => std::fs::write(&path, &buf)
            .map_err(|e| format!("cannot write {}: {e}", path.display()))?,
        None => std::io::stdout()
            .write_all(&buf)
            .map_err(|e| e.to_string())?,
    }

    Ok(if summary.failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(1)
    })
}

fn run_table(target: TableCmd) -> Result<(), String> {
    match target {
        TableCmd::Dedekind { k_max } => {
            if k_max < 1 {
                return Err(format!("k-max must be positive, got {k_max}"));
            }
            let mut wtr = csv::Writer::from_writer(std::io::stdout());
            wtr.write_record(["h", "k", "s"]).map_err(|e| e.to_string())?;
            for k in 1..=k_max {
                for h in 0..k.max(1) {
                    if gcd(h, k) != 1 {
                        continue;
                    }
                    let s = dedekind_sum(h, k).map_err(|e| e.to_string())?;
                    wtr.write_record([h.to_string(), k.to_string(), render_rational(s)])
                        .map_err(|e| e.to_string())?;
                }
            }
            wtr.flush().map_err(|e| e.to_string())?;
        }
    }
    Ok(())
}
