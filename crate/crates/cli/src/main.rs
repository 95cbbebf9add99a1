use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use detloc::characters::{char_of, CharKind};
use detloc::loccoh::{h_class_d, h_class_q, h_class_s, iterate_loccoh, start_expr, GradedExpr, Start};
use detloc::lyubeznik::{lyub_gf, lyub_table};
use detloc::quiver::{build_rep, decompose_addq, simple_socle, AddQDecomposition, RepKind};
use detloc::shapes::{bott_tilde, BottResult, Weight};
use detloc::verify::{checks, run_suite};
use detloc::{Execution, GammaElem};

#[derive(Parser)]
#[command(name = "detloc", version, about = "Local cohomology and Lyubeznik numbers of generic determinantal varieties")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// H^*_{O_t} of S, D_p or Q_p, as a class and by cohomological degree.
    Loccoh(Params),
    /// Iterated local cohomology; --chain lists orbits in the order applied.
    Iterate(Params),
    /// Lyubeznik table of the ring of m x n matrices of rank <= p.
    Lyubeznik(Params),
    /// Truncated GL character of S, D_p, Q_p, or the rectangle ideal given by --a and --d.
    Character(Params),
    /// Bott's algorithm on a single weight.
    Bott(Params),
    /// The quiver representation of D_p or Q_p, its socle and add(Q) decomposition.
    Quiver(Params),
    /// Named property checks; `--suite list` shows them.
    Verify(Params),
}

#[derive(Args)]
struct Params {
    #[arg(long)]
    m: Option<usize>,
    #[arg(long)]
    n: Option<usize>,
    #[arg(long)]
    p: Option<usize>,
    #[arg(long)]
    t: Option<usize>,
    #[arg(long)]
    a: Option<usize>,
    #[arg(long)]
    d: Option<i64>,
    /// Comma-separated orbit indices, innermost functor first.
    #[arg(long, value_delimiter = ',')]
    chain: Option<Vec<usize>>,
    #[arg(long, value_enum)]
    start: Option<StartArg>,
    /// Comma-separated weight entries for `bott`.
    #[arg(long, value_delimiter = ',', allow_hyphen_values = true)]
    weight: Option<Vec<i64>>,
    #[arg(long, value_enum, default_value_t = Format::Text)]
    format: Format,
    /// Entry bound for truncated characters.
    #[arg(long, default_value_t = 2)]
    bound: i64,
    #[arg(long, default_value = "all")]
    suite: String,
    #[arg(long, default_value_t = 6)]
    max: usize,
    /// Run verification sweeps on one thread.
    #[arg(long)]
    sequential: bool,
}

#[derive(Clone, Copy, ValueEnum)]
#[value(rename_all = "UPPER")]
enum StartArg {
    S,
    D,
    Q,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
    Latex,
}

#[derive(Debug, thiserror::Error)]
enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error(transparent)]
    Core(#[from] detloc::Error),
    #[error("{0} check(s) failed")]
    Verification(usize),
}

fn usage<T>(msg: impl Into<String>) -> Result<T, CliError> {
    Err(CliError::Usage(msg.into()))
}

impl Params {
    fn need<T: Copy>(v: Option<T>, flag: &str) -> Result<T, CliError> {
        v.ok_or_else(|| CliError::Usage(format!("missing --{flag}")))
    }

    fn shape(&self) -> Result<(usize, usize), CliError> {
        let (m, n) = (Self::need(self.m, "m")?, Self::need(self.n, "n")?);
        if n == 0 || m < n {
            return usage(format!("need m >= n >= 1, got m = {m}, n = {n}"));
        }
        Ok((m, n))
    }

    /// The starting module and its `p`; `S` is `D_n`.
    fn start(&self, n: usize) -> Result<(Start, usize), CliError> {
        match self.start.unwrap_or(StartArg::S) {
            StartArg::S => Ok((Start::S, n)),
            StartArg::D => Ok((Start::D, self.bounded_p(n)?)),
            StartArg::Q => Ok((Start::Q, self.bounded_p(n)?)),
        }
    }

    fn bounded_p(&self, n: usize) -> Result<usize, CliError> {
        let p = Self::need(self.p, "p")?;
        if p > n {
            return usage(format!("need p <= n, got p = {p}, n = {n}"));
        }
        Ok(p)
    }

    fn no_latex(&self, what: &str) -> Result<(), CliError> {
        if self.format == Format::Latex {
            return usage(format!("{what} has no LaTeX rendering; use text or json"));
        }
        Ok(())
    }
}

fn graded_json(g: &GradedExpr) -> Value {
    Value::Array(g.iter().map(|(j, e)| json!({"degree": j, "module": e.to_json()})).collect())
}

fn loccoh(p: &Params) -> Result<String, CliError> {
    p.no_latex("loccoh")?;
    let (m, n) = p.shape()?;
    let t = Params::need(p.t, "t")?;
    let (kind, pp) = p.start(n)?;
    if t > n {
        return usage(format!("need t <= n, got t = {t}, n = {n}"));
    }
    let class: GammaElem = match kind {
        Start::S => h_class_s(m, n, t)?,
        Start::D => h_class_d(m, n, t, pp)?,
        Start::Q if m != n => return usage("Q_p exists only for square matrices"),
        Start::Q => h_class_q(n, t, pp)?,
    };
    let groups = start_expr(kind, pp, m, n, t)?;
    Ok(match p.format {
        Format::Json => json!({"class": class.to_json(), "groups": graded_json(&groups)}).to_string(),
        _ if groups.is_empty() => format!("class: {class}\n(all groups vanish)"),
        _ => format!("class: {class}\n{groups}"),
    })
}

fn iterate(p: &Params) -> Result<String, CliError> {
    p.no_latex("iterate")?;
    let (m, n) = p.shape()?;
    let (kind, pp) = p.start(n)?;
    let mut chain = p.chain.clone().unwrap_or_default();
    chain.reverse();
    if chain.windows(2).any(|w| w[0] >= w[1]) {
        return usage("--chain must be strictly decreasing in application order, e.g. 1,0");
    }
    if chain.iter().any(|&t| t > n) {
        return usage(format!("orbit indices must be <= n = {n}"));
    }
    let table = iterate_loccoh(kind, pp, m, n, &chain)?;
    Ok(match p.format {
        Format::Json => table.to_json().to_string(),
        _ => table.to_string(),
    })
}

fn lyubeznik(p: &Params) -> Result<String, CliError> {
    let (m, n) = p.shape()?;
    let pp = Params::need(p.p, "p")?;
    if pp >= n {
        return usage(format!("need p < n, got p = {pp}, n = {n}"));
    }
    let gf = lyub_gf(m, n, pp)?;
    let table = lyub_table(&gf, m, n, pp)?;
    Ok(match p.format {
        Format::Json => json!({"generating_function": gf.to_json(), "table": table.to_json()}).to_string(),
        Format::Latex => table.to_latex(),
        Format::Text => format!("L_{pp}(q,w) = {gf}\n{table}"),
    })
}

fn character(p: &Params) -> Result<String, CliError> {
    p.no_latex("character")?;
    let (m, n) = p.shape()?;
    if p.bound < 0 {
        return usage("--bound must be nonnegative");
    }
    let kind = match (p.a, p.d) {
        (Some(a), Some(d)) => CharKind::Irect { a, d },
        (None, None) => match p.start(n)? {
            (Start::S, _) => CharKind::S,
            (Start::D, pp) => CharKind::D(pp),
            (Start::Q, pp) => CharKind::Q(pp),
        },
        _ => return usage("--a and --d go together"),
    };
    let series = char_of(&kind, m, n, Some(p.bound))?;
    Ok(match p.format {
        Format::Json => series.to_json().to_string(),
        _ if series.is_empty() => "(no terms within the bound)".to_string(),
        _ => series.to_string(),
    })
}

fn bott(p: &Params) -> Result<String, CliError> {
    p.no_latex("bott")?;
    let Some(entries) = p.weight.clone() else {
        return usage("missing --weight, e.g. --weight 1,3,0");
    };
    let result = bott_tilde(&Weight::new(entries));
    Ok(match (p.format, &result) {
        (Format::Json, BottResult::Vanishes) => json!({"vanishes": true}).to_string(),
        (Format::Json, BottResult::NonVanishing { degree, weight }) => {
            json!({"vanishes": false, "degree": degree, "weight": weight.entries()}).to_string()
        }
        _ => result.to_string(),
    })
}

fn quiver(p: &Params) -> Result<String, CliError> {
    p.no_latex("quiver")?;
    let n = Params::need(p.n, "n")?;
    let kind = match p.start {
        Some(StartArg::D) => RepKind::D,
        Some(StartArg::Q) | None => RepKind::Q,
        Some(StartArg::S) => return usage("quiver takes --start D or --start Q"),
    };
    let pp = p.bounded_p(n)?;
    let rep = build_rep(kind, pp, n)?;
    let socle = simple_socle(&rep);
    let decomposition = decompose_addq(&rep);
    Ok(match p.format {
        Format::Json => {
            let dec = match &decomposition {
                AddQDecomposition::Sum(mult) => json!({"sum": mult}),
                AddQDecomposition::NotInAddQ { vertex, reason } => json!({"not_in_addq": {"vertex": vertex, "reason": reason}}),
            };
            json!({"rep": rep.to_json(), "socle": socle, "decomposition": dec}).to_string()
        }
        _ => {
            let socle: Vec<String> = socle.iter().map(|(v, k)| format!("D^({v})^{k}")).collect();
            let dec = match &decomposition {
                AddQDecomposition::Sum(mult) => {
                    let parts: Vec<String> =
                        mult.iter().enumerate().filter(|(_, &k)| k > 0).map(|(s, k)| format!("Q^({s})^{k}")).collect();
                    if parts.is_empty() { "0".to_string() } else { parts.join(" + ") }
                }
                AddQDecomposition::NotInAddQ { vertex, reason } => format!("not in add(Q) at vertex {vertex}: {reason}"),
            };
            format!("{rep}\nsocle: {}\nadd(Q): {dec}", socle.join(" + "))
        }
    })
}

fn verify(p: &Params) -> Result<String, CliError> {
    p.no_latex("verify")?;
    if p.suite == "list" {
        let lines: Vec<String> = checks().into_iter().map(|(name, module, what)| format!("{name} [{module}]: {what}")).collect();
        return Ok(lines.join("\n"));
    }
    let exec = if p.sequential { Execution::Sequential } else { Execution::default() };
    let Some(reports) = run_suite(&p.suite, p.max, exec) else {
        return usage(format!("unknown suite {:?}; try --suite list", p.suite));
    };
    let failed = reports.iter().filter(|r| !r.passed()).count();
    let out = match p.format {
        Format::Json => Value::Array(
            reports.iter().map(|r| json!({"name": r.name, "cases": r.cases, "failures": r.failures})).collect(),
        )
        .to_string(),
        _ => reports.iter().map(ToString::to_string).collect::<Vec<_>>().join("\n"),
    };
    println!("{out}");
    if failed > 0 {
        return Err(CliError::Verification(failed));
    }
    Ok(format!("{} checks passed", reports.len()))
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) if !e.use_stderr() => {
            print!("{e}");
            return ExitCode::SUCCESS;
        }
        Err(e) => {
            eprint!("{e}");
            return ExitCode::from(1);
        }
    };
    let result = match &cli.command {
        Command::Loccoh(p) => loccoh(p),
        Command::Iterate(p) => iterate(p),
        Command::Lyubeznik(p) => lyubeznik(p),
        Command::Character(p) => character(p),
        Command::Bott(p) => bott(p),
        Command::Quiver(p) => quiver(p),
        Command::Verify(p) => verify(p),
    };
    match result {
        Ok(out) => {
            println!("{out}");
            ExitCode::SUCCESS
        }
        Err(e @ CliError::Verification(_)) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(1)
        }
    }
}
