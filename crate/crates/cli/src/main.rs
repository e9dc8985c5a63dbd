use std::io::Write;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use trace_products::commands::{self, Outcome, RunConfig};
use trace_products::output::{render, Format};
use trace_products_core::trace_sets::SurveyMethod;

const ENCODING_HELP: &str = "\
Elements of F_{q^n}, q = p^h, are written as n·h base-p digits, least
significant first: the h digits of the coefficient of α^0, then α^1, and so
on. For example, over F_{2^5} the string 00001 is α^4. They may also be
given as n comma-separated decimal F_q coefficients, or as a single decimal
F_q element. Scalars a, b are decimal F_q elements.

Exit codes: 0 success or member, 1 failed check or non-member, 2 error.
TRACE_PRODUCTS_THREADS caps the number of worker threads.";

#[derive(Parser)]
#[command(name = "trace-products", version, about = "Products of elements with prescribed trace in finite fields")]
#[command(after_help = ENCODING_HELP)]
struct Cli {
    #[command(subcommand)]
    command: Command,
    /// Minimal polynomial of the extension: comma-separated F_q coefficients, constant first.
    #[arg(long, global = true)]
    field: Option<String>,
    /// Shape of the extension: general, pure-cubic, pure-quartic, biquadratic or artin-schreier-cubic.
    #[arg(long, global = true)]
    tower_tag: Option<String>,
    /// Seed for sampled sweeps.
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,
    /// Largest coefficient space swept exhaustively before sampling.
    #[arg(long, global = true)]
    budget: Option<u64>,
    #[arg(long, global = true, value_enum)]
    format: Option<Format>,
}

#[derive(Clone, Copy, ValueEnum)]
enum Method {
    Oracle,
    ClosedForm,
}

#[derive(Subcommand)]
enum Command {
    /// Decide whether beta = x·y with Tr(x) = a and Tr(y) = b.
    Solve { q: u64, n: u32, a: String, b: String, beta: String },
    /// Decide every element of the field.
    Survey {
        q: u64,
        n: u32,
        a: String,
        b: String,
        #[arg(long, value_enum, default_value = "closed-form")]
        method: Method,
    },
    /// Run a verification suite, or all of them.
    Verify { suite: String },
    /// Count points on an Artin–Schreier curve.
    #[command(subcommand)]
    Curve(CurveCommand),
    /// Search for disjoint clubs and optionally check clubs against graphs of linearized polynomials.
    Clubs {
        q: u64,
        n: u32,
        /// Also check every f of q-degree at most this.
        #[arg(long)]
        meet_degree: Option<u32>,
    },
    /// Planarity of Tr(x)^2 + a x^2 for every a.
    Pn { q: u64, n: u32 },
    /// Presemifields Tr(x)L(y) − xy with L of small q-degree.
    Semifield {
        q: u64,
        n: u32,
        /// Number of polynomials also checked by the full double loop.
        #[arg(long, default_value_t = 256)]
        direct_limit: u64,
    },
    /// An irreducible polynomial of prime degree n with c1 = a and c(n-1)/c(n) = b.
    Prescribe { q: u64, n: u32, a: String, b: String },
}

#[derive(Subcommand)]
enum CurveCommand {
    /// z^q − z = alpha/(t^q − t + beta_b) − beta_a with Tr(beta_a) = a, Tr(beta_b) = b.
    Product {
        q: u64,
        n: u32,
        #[arg(long, default_value = "1")]
        alpha: String,
        #[arg(long, default_value = "1")]
        a: String,
        #[arg(long, default_value = "1")]
        b: String,
    },
    /// z^q − z = f(y)/y − beta1 for f = sum of coeff_i y^(q^i).
    Club {
        q: u64,
        n: u32,
        #[arg(long = "coeff", required = true)]
        coeffs: Vec<String>,
        #[arg(long)]
        beta1: Option<String>,
    },
}

impl Command {
    fn name(&self) -> &'static str {
        match self {
            Command::Solve { .. } => "solve",
            Command::Survey { .. } => "survey",
            Command::Verify { .. } => "verify",
            Command::Curve(CurveCommand::Product { .. }) => "curve product",
            Command::Curve(CurveCommand::Club { .. }) => "curve club",
            Command::Clubs { .. } => "clubs",
            Command::Pn { .. } => "pn",
            Command::Semifield { .. } => "semifield",
            Command::Prescribe { .. } => "prescribe",
        }
    }

    fn default_format(&self) -> Format {
        match self {
            Command::Survey { .. } => Format::Csv,
            _ => Format::Json,
        }
    }
}

fn run(cli: &Cli, cfg: &RunConfig) -> anyhow::Result<Outcome> {
    match &cli.command {
        Command::Solve { q, n, a, b, beta } => commands::solve(cfg, *q, *n, a, b, beta),
        Command::Survey { q, n, a, b, method } => {
            let method = match method {
                Method::Oracle => SurveyMethod::Oracle,
                Method::ClosedForm => SurveyMethod::ClosedForm,
            };
            commands::survey_cmd(cfg, *q, *n, a, b, method)
        }
        Command::Verify { suite } => commands::verify(cfg, suite),
        Command::Curve(CurveCommand::Product { q, n, alpha, a, b }) => commands::curve_product(cfg, *q, *n, alpha, a, b),
        Command::Curve(CurveCommand::Club { q, n, coeffs, beta1 }) => {
            commands::curve_club(cfg, *q, *n, coeffs, beta1.as_deref())
        }
        Command::Clubs { q, n, meet_degree } => commands::clubs(cfg, *q, *n, *meet_degree),
        Command::Pn { q, n } => commands::pn(cfg, *q, *n),
        Command::Semifield { q, n, direct_limit } => commands::semifield(cfg, *q, *n, *direct_limit),
        Command::Prescribe { q, n, a, b } => commands::prescribe(cfg, *q, *n, a, b),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let cfg = RunConfig {
        command: cli.command.name().into(),
        field: cli.field.clone(),
        tower_tag: cli.tower_tag.clone(),
        seed: cli.seed,
        budget: cli.budget,
        format: cli.format.unwrap_or_else(|| cli.command.default_format()),
    };
    match run(&cli, &cfg) {
        Ok(outcome) => {
            let mut out = std::io::stdout().lock();
            if let Err(e) = render(&mut out, &outcome.output, cfg.format).and_then(|_| Ok(out.flush()?)) {
                eprintln!("error: {e:#}");
                return ExitCode::from(2);
            }
            ExitCode::from(outcome.exit)
        }
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}
