use std::fs;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

use hyperperiod::elliptic::{real_period_2f1, real_period_lambda, WeierstrassCurve};
use hyperperiod::finite_field::{
    default_snap_tolerance, gauss_sum, jacobi_sum, jacobsthal_phi_cubic, represent_a2_3b2, snap_to_rational,
    trace_frobenius, Character, CubicModP, GaussianHypergeometric, PrimeContext,
};
use hyperperiod::special::{agm, gamma_real, pfq, rational_binomial, EvalOptions, HypergeometricSpec};
use hyperperiod::verify::{self, format_float, HarnessConfig, Status, Suite, VerificationReport};
use hyperperiod::{BigInt, BigRational, Complex64, Error, Rational};

/// Classical and finite-field hypergeometric functions, real periods of
/// y² = (x − 1)(x² + λ), and verification of the identities between them.
///
/// Rationals are written "p/q" (or a plain integer). Real-valued arguments
/// (--z, --tol, agm, gamma, --lambda for period) accept decimals or "p/q".
#[derive(Parser)]
#[command(name = "hyperperiod", version)]
struct Cli {
    /// Write the output to PATH instead of standard output.
    #[arg(long, global = true, value_name = "PATH")]
    out: Option<PathBuf>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Evaluate pFq(upper; lower; z) by direct summation.
    Hyp {
        /// Comma-separated rational upper parameters.
        #[arg(long, value_delimiter = ',', allow_hyphen_values = true)]
        upper: Vec<String>,
        /// Comma-separated rational lower parameters.
        #[arg(long, value_delimiter = ',', allow_hyphen_values = true, default_value = "")]
        lower: Vec<String>,
        #[arg(long, allow_hyphen_values = true)]
        z: String,
        /// Relative truncation tolerance.
        #[arg(long, default_value = "1e-12")]
        tol: String,
    },
    /// Arithmetic-geometric mean of two positive reals.
    Agm {
        #[arg(allow_hyphen_values = true)]
        a: String,
        #[arg(allow_hyphen_values = true)]
        b: String,
        #[arg(long, default_value = "1e-15")]
        tol: String,
    },
    /// Gamma function of a real argument.
    Gamma {
        #[arg(allow_hyphen_values = true)]
        x: String,
    },
    /// Binomial coefficient Γ(n+1)/(Γ(k+1)Γ(n−k+1)) of two rationals.
    Binom {
        #[arg(allow_hyphen_values = true)]
        n: String,
        #[arg(allow_hyphen_values = true)]
        k: String,
    },
    /// Real period of E_λ: y² = (x − 1)(x² + λ), λ > 0.
    Period {
        #[arg(long)]
        lambda: String,
        #[arg(long, value_enum, default_value = "agm")]
        method: PeriodRoute,
    },
    /// Trace of Frobenius a_p of E_λ or of a Weierstrass curve.
    Trace {
        /// λ as "p/q".
        #[arg(long, allow_hyphen_values = true, conflicts_with = "curve", required_unless_present = "curve")]
        lambda: Option<String>,
        /// Weierstrass coefficients a1,a2,a3,a4,a6 (rationals).
        #[arg(long, value_delimiter = ',', allow_hyphen_values = true, num_args = 1)]
        curve: Option<Vec<String>>,
        #[arg(long)]
        prime: u64,
    },
    /// Gauss sum G(χ) of the character with exponent K against the smallest
    /// primitive root.
    Gauss {
        #[arg(long)]
        prime: u64,
        #[arg(long = "char", allow_hyphen_values = true)]
        k: i64,
    },
    /// Jacobi sum J(χ, ψ) of the characters with exponents K1 and K2.
    Jacobi {
        #[arg(long)]
        prime: u64,
        #[arg(long = "char1", allow_hyphen_values = true)]
        k1: i64,
        #[arg(long = "char2", allow_hyphen_values = true)]
        k2: i64,
    },
    /// Greene's Gaussian hypergeometric series at x ∈ F_p. With --phi-eps
    /// the series is ₃F₂(φ, φ, φ; ε, ε | x)_p; otherwise characters are
    /// given by exponent with --upper and --lower.
    Ghyp {
        #[arg(long)]
        prime: u64,
        /// Argument: an integer or "p/q", reduced mod p.
        #[arg(long, allow_hyphen_values = true)]
        x: String,
        #[arg(long, conflicts_with_all = ["upper", "lower"])]
        phi_eps: bool,
        #[arg(long, value_delimiter = ',', allow_hyphen_values = true, required_unless_present = "phi_eps")]
        upper: Vec<i64>,
        #[arg(long, value_delimiter = ',', allow_hyphen_values = true)]
        lower: Vec<i64>,
    },
    /// Σ_x φ_p(x³ + 1).
    Jacobsthal {
        #[arg(long)]
        prime: u64,
    },
    /// p = a² + 3b² with a ≡ −1 (mod 3), for p ≡ 1 (mod 3).
    Represent {
        #[arg(long)]
        prime: u64,
    },
    /// Run a verification suite, or all of them. Suites: theorem-period,
    /// corollary, ono, greene-inversion, theorem-binomial, transformations,
    /// twist, jacobsthal, oracles.
    Verify {
        suite: String,
        /// Upper end of every finite-field prime grid (default 499, and
        /// 199 for Ono's evaluation).
        #[arg(long)]
        primes_max: Option<u64>,
        #[arg(long, value_enum, default_value = "human")]
        format: OutputFormat,
        /// Seed for the random instances.
        #[arg(long)]
        seed: Option<u64>,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum PeriodRoute {
    Agm,
    #[value(name = "2f1")]
    Hypergeometric,
}

#[derive(Clone, Copy, ValueEnum)]
enum OutputFormat {
    Human,
    Json,
    Csv,
}

/// Result of a command: text to print and whether it counts as a failure.
struct Output {
    text: String,
    failed: bool,
}

impl From<String> for Output {
    fn from(text: String) -> Self {
        Output { text, failed: false }
    }
}

type CliResult = Result<Output, String>;

fn rational(s: &str) -> Result<Rational, String> {
    s.trim().parse::<Rational>().map_err(|_| format!("'{s}' is not a rational (expected p/q)"))
}

fn real(s: &str) -> Result<f64, String> {
    if s.contains('/') {
        let r = rational(s)?;
        return Ok(*r.numer() as f64 / *r.denom() as f64);
    }
    s.trim().parse::<f64>().map_err(|_| format!("'{s}' is not a number"))
}

fn rationals(items: &[String]) -> Result<Vec<Rational>, String> {
    items.iter().filter(|s| !s.trim().is_empty()).map(|s| rational(s)).collect()
}

fn big(r: Rational) -> BigRational {
    BigRational::new(BigInt::from(*r.numer()), BigInt::from(*r.denom()))
}

fn complex_text(v: Complex64) -> String {
    let sign = if v.im < 0.0 { '-' } else { '+' };
    format!("{} {} {}i", format_float(v.re), sign, format_float(v.im.abs()))
}

fn err(e: Error) -> String {
    e.to_string()
}

fn context(p: u64) -> Result<PrimeContext, String> {
    PrimeContext::new(p).map_err(err)
}

fn run(command: Command) -> CliResult {
    match command {
        Command::Hyp { upper, lower, z, tol } => {
            let spec = HypergeometricSpec::new(rationals(&upper)?, rationals(&lower)?, real(&z)?).map_err(err)?;
            let opts = EvalOptions::new(real(&tol)?, 200_000).map_err(err)?;
            let result = pfq(&spec, &opts).map_err(err)?;
            if !result.converged {
                return Err(format!(
                    "series did not converge within {} terms (partial sum {})",
                    result.terms_used,
                    format_float(result.value)
                ));
            }
            Ok(format_float(result.value).into())
        }
        Command::Agm { a, b, tol } => Ok(format_float(agm(real(&a)?, real(&b)?, real(&tol)?).map_err(err)?).into()),
        Command::Gamma { x } => Ok(format_float(gamma_real(real(&x)?).map_err(err)?).into()),
        Command::Binom { n, k } => Ok(format_float(rational_binomial(rational(&n)?, rational(&k)?).map_err(err)?).into()),
        Command::Period { lambda, method } => {
            let lambda = real(&lambda)?;
            let period = match method {
                PeriodRoute::Agm => real_period_lambda(lambda, 1e-15),
                PeriodRoute::Hypergeometric => real_period_2f1(lambda),
            }
            .map_err(err)?;
            Ok(format_float(period.omega).into())
        }
        Command::Trace { lambda, curve, prime } => {
            let ctx = context(prime)?;
            let cubic = match (lambda, curve) {
                (Some(l), None) => CubicModP::lambda(rational(&l)?, prime).map_err(err)?,
                (None, Some(coefficients)) => {
                    let c = rationals(&coefficients)?;
                    if c.len() != 5 {
                        return Err(format!("--curve needs 5 coefficients a1,a2,a3,a4,a6, got {}", c.len()));
                    }
                    let curve = WeierstrassCurve::new(big(c[0]), big(c[1]), big(c[2]), big(c[3]), big(c[4]));
                    CubicModP::from_curve(&curve, prime).map_err(err)?
                }
                _ => return Err("give exactly one of --lambda and --curve".into()),
            };
            Ok(trace_frobenius(&ctx, &cubic).map_err(err)?.to_string().into())
        }
        Command::Gauss { prime, k } => {
            let ctx = context(prime)?;
            Ok(complex_text(gauss_sum(&Character::new(&ctx, k))).into())
        }
        Command::Jacobi { prime, k1, k2 } => {
            let ctx = context(prime)?;
            let j = jacobi_sum(&Character::new(&ctx, k1), &Character::new(&ctx, k2)).map_err(err)?;
            Ok(complex_text(j).into())
        }
        Command::Ghyp { prime, x, phi_eps, upper, lower } => {
            let ctx = context(prime)?;
            let x = ctx.reduce_rational(rational(&x)?).ok_or_else(|| format!("{x} is not defined mod {prime}"))?;
            let series = if phi_eps {
                GaussianHypergeometric::phi_eps(&ctx, 2)
            } else {
                let up: Vec<_> = upper.iter().map(|&k| Character::new(&ctx, k)).collect();
                let low: Vec<_> = lower.iter().map(|&k| Character::new(&ctx, k)).collect();
                GaussianHypergeometric::new(&up, &low)
            }
            .map_err(err)?;
            let order = if phi_eps { 2 } else { lower.len() as u32 };
            let value = series.eval(x as i64);
            let den = (prime as i64).checked_pow(order);
            match den.map(|d| snap_to_rational(value, d, default_snap_tolerance(prime))) {
                Some(Ok(s)) => Ok(format!("{}/{}", s.value.numer(), s.value.denom()).into()),
                _ => Ok(complex_text(value).into()),
            }
        }
        Command::Jacobsthal { prime } => Ok(jacobsthal_phi_cubic(&context(prime)?).map_err(err)?.to_string().into()),
        Command::Represent { prime } => {
            let (a, b) = represent_a2_3b2(prime).map_err(err)?;
            Ok(format!("{prime} = {a}^2 + 3*{b}^2").into())
        }
        Command::Verify { suite, primes_max, format, seed } => {
            let suites = if suite == "all" { Suite::ALL.to_vec() } else { vec![suite.parse::<Suite>()?] };
            let mut config = HarnessConfig::default();
            if let Some(n) = primes_max {
                if n < 5 {
                    return Err(format!("--primes-max must be at least 5, got {n}"));
                }
                config = config.with_primes_max(n);
            }
            if let Some(s) = seed {
                config = config.with_seed(s);
            }
            let report = verify::run(&suites, &config);
            let text = match format {
                OutputFormat::Json => report.to_json() + "\n",
                OutputFormat::Csv => report.to_csv(),
                OutputFormat::Human => human(&report),
            };
            Ok(Output { text, failed: !report.is_success() })
        }
    }
}

fn human(report: &VerificationReport) -> String {
    let mut out = String::new();
    for suite in &report.suites {
        out += &format!("{:<18} passed {:>5}  failed {:>3}  skipped {:>3}\n", suite.suite, suite.passed, suite.failed, suite.skipped);
        for check in suite.results.iter().filter(|c| c.status == Status::Failed) {
            let params: Vec<_> = check.parameters.iter().map(|(k, v)| format!("{k}={v}")).collect();
            out += &format!(
                "  FAIL {} [{}] lhs={} rhs={} residual={}",
                check.name,
                params.join(" "),
                check.lhs.to_text(),
                check.rhs.to_text(),
                format_float(check.residual)
            );
            if let Some(d) = &check.detail {
                out += &format!(" ({d})");
            }
            out.push('\n');
        }
        for note in &suite.notes {
            out += &format!("  note: {note}\n");
        }
    }
    out += &format!("total: passed {}, failed {}, skipped {}\n", report.passed, report.failed, report.skipped);
    out
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.command) {
        Ok(output) => {
            let mut text = output.text;
            if !text.ends_with('\n') {
                text.push('\n');
            }
            match &cli.out {
                Some(path) => {
                    if let Err(e) = fs::write(path, &text) {
                        eprintln!("error: cannot write {}: {e}", path.display());
                        return ExitCode::from(2);
                    }
                }
                None => print!("{text}"),
            }
            if output.failed {
                ExitCode::from(1)
            } else {
                ExitCode::SUCCESS
            }
        }
        Err(message) => {
            eprintln!("error: {message}");
            ExitCode::from(2)
        }
    }
}
