//! `qschroder`: sequences, triangles, Jacobi data, continued fractions,
//! Hankel determinants and path oracles for Schröder-like numbers.
//!
//! Exit status: 0 on success, 1 when a check fails (a JSON mismatch report
//! goes to standard output), 2 on usage errors, 3 when a request exceeds a
//! configured resource cap.

mod bindings;
mod commands;
mod config;
mod error;
mod render;

use std::io::Write;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

use crate::bindings::{Binding, Bindings};
use crate::config::Limits;
use crate::error::CliError;
use crate::render::Format;

#[derive(Parser, Debug)]
#[command(name = "qschroder", version, about = "Exact Schröder-like and q-Schröder-like number computations")]
struct Cli {
    #[command(subcommand)]
    command: Command,

    /// Output format.
    #[arg(long, value_enum, global = true, default_value_t = Format::Table)]
    format: Format,

    /// Value of x: a rational such as -3/4, or `formal`.
    #[arg(long, global = true, default_value = "formal", allow_hyphen_values = true)]
    x: Binding,

    /// Value of y: a rational, or `formal`.
    #[arg(long, global = true, default_value = "formal", allow_hyphen_values = true)]
    y: Binding,

    /// Value of q: a rational, or `formal`. `--q 1` gives the classical families.
    #[arg(long, global = true, default_value = "formal", allow_hyphen_values = true)]
    q: Binding,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Terms of a family.
    Seq(SeqArgs),
    /// Rows of the triangle a(n,k) built from a family's Jacobi data.
    Triangle(TriangleArgs),
    /// Jacobi data s(n), t(n) extracted from a family's terms.
    Stieltjes(StieltjesArgs),
    /// Continued-fraction expansion of a family's generating function.
    Cf(CfArgs),
    /// Hankel determinants against their closed forms.
    Hankel(HankelArgs),
    /// Brute-force lattice-path sums.
    Paths(PathsArgs),
    /// The full verification suite.
    Verify(VerifyArgs),
}

#[derive(Args, Debug)]
struct SeqArgs {
    /// Family name (see --list).
    #[arg(long, required_unless_present = "list")]
    family: Option<String>,
    /// Number of terms.
    #[arg(long, default_value_t = 10)]
    n: usize,
    /// Generation route, by index.
    #[arg(long, default_value_t = 0)]
    route: usize,
    /// List the families and their routes.
    #[arg(long)]
    list: bool,
}

#[derive(Args, Debug)]
struct TriangleArgs {
    /// Family name or named Jacobi datum (e.g. aerated/schroder-like).
    #[arg(long)]
    family: String,
    /// Number of rows.
    #[arg(long, default_value_t = 6)]
    rows: usize,
}

#[derive(Args, Debug)]
struct StieltjesArgs {
    /// Family name or named Jacobi datum.
    #[arg(long)]
    family: String,
    /// Extract s(0..=depth) and t(0..=depth).
    #[arg(long, default_value_t = 5)]
    depth: usize,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum CfKind {
    /// J-fraction from the Jacobi data.
    J,
    /// The family's S-fraction route.
    S,
}

#[derive(Args, Debug)]
struct CfArgs {
    /// Family name or named Jacobi datum.
    #[arg(long)]
    family: String,
    /// Expand through z^order.
    #[arg(long, default_value_t = 10)]
    order: usize,
    #[arg(long, value_enum, default_value_t = CfKind::J)]
    kind: CfKind,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum HankelMode {
    Symbolic,
    Random,
}

#[derive(Args, Debug)]
struct HankelArgs {
    /// Family whose determinants to compute.
    #[arg(long, required_unless_present = "identity")]
    family: Option<String>,
    /// Identity key such as schroder-like/D1; overrides --family/--offset.
    #[arg(long)]
    identity: Option<String>,
    /// The k in det(a(i+j+k)).
    #[arg(long, default_value_t = 0)]
    offset: usize,
    /// Largest matrix size.
    #[arg(long, default_value_t = 5)]
    max_n: usize,
    #[arg(long, value_enum, default_value_t = HankelMode::Symbolic)]
    mode: HankelMode,
    /// Seed for random points.
    #[arg(long, default_value_t = 42)]
    seed: u64,
    /// Number of random points.
    #[arg(long, default_value_t = 20)]
    points: usize,
    /// List the identities.
    #[arg(long)]
    list: bool,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum PathModel {
    Motzkin,
    Schroder,
}

#[derive(Args, Debug)]
struct PathsArgs {
    #[arg(long, value_enum)]
    model: PathModel,
    /// Path length (Motzkin) or size (Schröder).
    #[arg(long)]
    n: usize,
    /// End height (Motzkin only).
    #[arg(long, default_value_t = 0)]
    k: usize,
    /// Jacobi data for the Motzkin weights.
    #[arg(long, default_value = "schroder-like")]
    family: String,
}

#[derive(Args, Debug)]
struct VerifyArgs {
    #[arg(long, default_value = "all")]
    suite: qschroder::verify::Suite,
    #[arg(long, default_value_t = 42)]
    seed: u64,
    /// Random points per identity.
    #[arg(long, default_value_t = 20)]
    points: usize,
}

/// What a command produced: text for standard output and whether every
/// check passed.
pub struct Output {
    pub text: String,
    pub ok: bool,
}

impl Output {
    pub fn ok(text: String) -> Self {
        Self { text, ok: true }
    }
}

fn run(cli: Cli) -> Result<Output, CliError> {
    let limits = Limits::load()?;
    let bindings = Bindings { x: cli.x, y: cli.y, q: cli.q };
    let ctx = commands::Context::new(limits, bindings, cli.format);
    match cli.command {
        Command::Seq(a) if a.list => ctx.list_families(),
        Command::Seq(a) => ctx.seq(a.family.as_deref().expect("required unless --list"), a.n, a.route),
        Command::Triangle(a) => ctx.triangle(&a.family, a.rows),
        Command::Stieltjes(a) => ctx.stieltjes(&a.family, a.depth),
        Command::Cf(a) => ctx.cf(&a.family, a.order, a.kind == CfKind::S),
        Command::Hankel(a) if a.list => ctx.list_identities(),
        Command::Hankel(a) => {
            let random = (a.mode == HankelMode::Random).then_some((a.seed, a.points));
            ctx.hankel(a.family.as_deref(), a.identity.as_deref(), a.offset, a.max_n, random)
        }
        Command::Paths(a) => match a.model {
            PathModel::Motzkin => ctx.motzkin_paths(&a.family, a.n, a.k),
            PathModel::Schroder => ctx.schroder_paths(a.n),
        },
        Command::Verify(a) => ctx.verify(a.suite, a.seed, a.points),
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(out) => {
            let mut stdout = std::io::stdout().lock();
            // a closed pipe is not worth a panic
            let _ = stdout.write_all(out.text.as_bytes());
            if out.ok {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            }
        }
        Err(e) => {
            eprintln!("error: {e}");
            e.exit_code()
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use clap::CommandFactory;

    #[test]
    fn cli_definition_is_consistent() {
        Cli::command().debug_assert();
    }

    #[test]
    fn negative_bindings_parse() {
        let cli = Cli::try_parse_from(["qschroder", "seq", "--family", "schroder-like", "--x", "-1/2"]).unwrap();
        assert_eq!(cli.x, "-1/2".parse().unwrap());
    }
}
