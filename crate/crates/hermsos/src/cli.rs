//! Command-line front end.
//!
//! Exit codes: 0 success, 1 verification violations or IO failure,
//! 2 usage or parse error, 3 mathematical precondition failure.

use std::ffi::OsString;
use std::fs;
use std::io::{Read, Write};
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;

use hermsos_core::divide::divide_single;
use hermsos_core::matrix::{extremal_slice_bound, slices};
use hermsos_core::poly::{norm_power, pfister_base};
use hermsos_core::sos::{psd_check, squared_norm_decompose};
use hermsos_core::{CoeffMatrix, DiagPoly, Error, HermPoly, SquaredNormCert};

use crate::json::{self, HermDoc, HoloTermDoc, JsonRatio, Mode};
use crate::report::{json_lines, summary_table, violations};
use crate::suite::{self, Suite, SuiteOptions};
use crate::text;

pub const EXIT_OK: i32 = 0;
pub const EXIT_FAILURE: i32 = 1;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_MATH: i32 = 3;

#[derive(Parser, Debug)]
#[command(name = "hermsos", version, about = "Exact ranks, squared-norm certificates and divisibility for Hermitian symmetric polynomials")]
struct Cli {
    /// Output format.
    #[arg(long, value_enum, global = true)]
    format: Option<Format>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Text,
    Table,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum InputFormat {
    Auto,
    Json,
    Text,
}

#[derive(Args, Debug)]
struct Input {
    /// Input document; `-` or absent reads stdin.
    input: Option<PathBuf>,
    /// Input syntax; `auto` treats a leading `{` as JSON.
    #[arg(long, value_enum, default_value = "auto")]
    input_format: InputFormat,
    /// Reject non-canonical JSON (duplicates, zero terms, unreduced or unsorted entries).
    #[arg(long)]
    strict: bool,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Print the exact rank of the coefficient matrix.
    Rank(Input),
    /// Print a squared-norm certificate `Σ w_j |p_j|²`.
    Decompose(Input),
    /// Run a verification suite: pfister, prop21, huang, slices or lprime.
    Verify(VerifyArgs),
    /// Divide by `(1 + ‖z‖²)^d`, `‖z‖^{2d}` or another polynomial.
    Divide(DivideArgs),
    /// List the signed-offset slices and the extremal slice bound.
    Slices(Input),
    /// Show the coefficient matrix.
    Matrix(Input),
    /// Emit `(1 + ‖z‖²)^d`, or `‖z‖^{2d}` with `--norm`.
    Pfister(PfisterArgs),
    /// Re-emit a document in another format.
    Convert(Input),
}

#[derive(Args, Debug)]
struct VerifyArgs {
    suite: String,
    #[arg(long, default_value_t = 2)]
    n: usize,
    #[arg(long, default_value_t = 1)]
    d: u32,
    #[arg(long, default_value_t = 200)]
    trials: u64,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// Enumerate the coefficient grid instead of sampling (huang, lprime).
    #[arg(long)]
    exhaustive: bool,
    /// Largest `m + d` enumerated by the lprime suite.
    #[arg(long, default_value_t = 9)]
    max: usize,
    /// Write the JSON-lines report here instead of stdout.
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Args, Debug)]
#[group(required = true, multiple = false, id = "divisor")]
struct DivisorChoice {
    /// Divide by `(1 + ‖z‖²)^D`.
    #[arg(long, value_name = "D")]
    pfister: Option<u32>,
    /// Divide by `‖z‖^{2D}`.
    #[arg(long, value_name = "D")]
    norm: Option<u32>,
    /// Divide by the polynomial in this file.
    #[arg(long, value_name = "FILE")]
    by: Option<PathBuf>,
}

#[derive(Args, Debug)]
struct DivideArgs {
    #[command(flatten)]
    input: Input,
    #[command(flatten)]
    divisor: DivisorChoice,
}

#[derive(Args, Debug)]
struct PfisterArgs {
    #[arg(long)]
    n: usize,
    #[arg(long)]
    d: u32,
    /// Emit `‖z‖^{2d}` instead.
    #[arg(long)]
    norm: bool,
}

/// A failed command: exit code plus message for stderr.
struct Failure {
    code: i32,
    message: String,
}

impl Failure {
    fn usage(message: impl Into<String>) -> Self {
        Self { code: EXIT_USAGE, message: message.into() }
    }

    fn io(message: impl Into<String>) -> Self {
        Self { code: EXIT_FAILURE, message: message.into() }
    }
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Self { code: EXIT_MATH, message: e.to_string() }
    }
}

type Outcome = Result<i32, Failure>;

struct Io<'a> {
    stdin: &'a mut dyn Read,
    stdout: &'a mut dyn Write,
}

impl Io<'_> {
    fn out(&mut self, s: &str) -> Result<(), Failure> {
        self.stdout.write_all(s.as_bytes()).map_err(|e| Failure::io(format!("writing output: {e}")))
    }

    fn line(&mut self, s: &str) -> Result<(), Failure> {
        self.out(s)?;
        self.out("\n")
    }
}

fn read_source(path: Option<&PathBuf>, stdin: &mut dyn Read) -> Result<(String, String), Failure> {
    match path {
        Some(p) if p.as_os_str() != "-" => fs::read_to_string(p)
            .map(|s| (s, p.display().to_string()))
            .map_err(|e| Failure::usage(format!("{}: {e}", p.display()))),
        _ => {
            let mut s = String::new();
            stdin.read_to_string(&mut s).map_err(|e| Failure::usage(format!("<stdin>: {e}")))?;
            Ok((s, "<stdin>".to_string()))
        }
    }
}

fn parse_poly(src: &str, name: &str, format: InputFormat, strict: bool) -> Result<HermPoly, Failure> {
    let as_json = match format {
        InputFormat::Json => true,
        InputFormat::Text => false,
        InputFormat::Auto => src.trim_start().starts_with('{'),
    };
    let mode = if strict { Mode::Strict } else { Mode::Lenient };
    let parsed = if as_json { json::parse_herm(src, mode) } else { text::parse_herm(src) };
    parsed.map_err(|e| Failure::usage(format!("{name}: {e}")))
}

fn read_poly(input: &Input, stdin: &mut dyn Read) -> Result<HermPoly, Failure> {
    let (src, name) = read_source(input.input.as_ref(), stdin)?;
    parse_poly(&src, &name, input.input_format, input.strict)
}

fn render_poly(a: &HermPoly, format: Format) -> String {
    match format {
        Format::Json => json::herm_to_string(a),
        Format::Text => text::render_herm(a),
        Format::Table => a.to_string(),
    }
}

fn cert_text(cert: &SquaredNormCert) -> String {
    if cert.is_empty() {
        return "0\n".to_string();
    }
    cert.weights.iter().zip(&cert.polys).map(|(w, p)| format!("{w} |{p}|^2\n")).collect()
}

fn cert_table(cert: &SquaredNormCert) -> String {
    let mut out = format!("{:>4}  {:>10}  {}\n", "j", "weight", "p_j");
    for (j, (w, p)) in cert.weights.iter().zip(&cert.polys).enumerate() {
        out += &format!("{:>4}  {:>10}  {p}\n", j + 1, w.to_string());
    }
    out
}

fn cmd_decompose(a: &HermPoly, format: Format, io: &mut Io<'_>) -> Outcome {
    if !a.is_hermitian() {
        io.line("NOT_HERMITIAN")?;
        return Ok(EXIT_MATH);
    }
    let cert = if a.is_zero() {
        SquaredNormCert { nvars: a.nvars(), weights: Vec::new(), polys: Vec::new() }
    } else if !psd_check(a)? {
        io.line("NOT_PSD")?;
        return Ok(EXIT_MATH);
    } else {
        squared_norm_decompose(a)?
    };
    match format {
        Format::Json => io.line(&json::cert_to_string(&cert))?,
        Format::Text => io.out(&cert_text(&cert))?,
        Format::Table => io.out(&cert_table(&cert))?,
    }
    Ok(EXIT_OK)
}

#[derive(Serialize)]
struct DivisionDoc {
    quotient: HermDoc,
    remainder: HermDoc,
    divisible: bool,
}

fn cmd_divide(args: &DivideArgs, format: Format, io: &mut Io<'_>) -> Outcome {
    let a = read_poly(&args.input, io.stdin)?;
    let n = a.nvars();
    let divisor = match (&args.divisor.pfister, &args.divisor.norm, &args.divisor.by) {
        (Some(d), _, _) => pfister_base(n, *d),
        (_, Some(d), _) => norm_power(n, *d),
        (_, _, Some(path)) => {
            let (src, name) = read_source(Some(path), &mut std::io::empty())?;
            parse_poly(&src, &name, args.input.input_format, args.input.strict)?
        }
        _ => return Err(Failure::usage("one of --pfister, --norm or --by is required")),
    };
    let (q, r) = divide_single(&a, &divisor)?;
    match format {
        Format::Json => {
            let doc = DivisionDoc { quotient: HermDoc::from_poly(&q), remainder: HermDoc::from_poly(&r), divisible: r.is_zero() };
            io.line(&serde_json::to_string(&doc).expect("plain data serializes"))?;
        }
        Format::Text | Format::Table => {
            io.line(&format!("quotient: {}", render_poly(&q, format)))?;
            io.line(&format!("remainder: {}", render_poly(&r, format)))?;
        }
    }
    Ok(EXIT_OK)
}

#[derive(Serialize)]
struct DiagDoc {
    nvars: usize,
    terms: Vec<HoloTermDoc>,
}

impl DiagDoc {
    fn from_poly(p: &DiagPoly) -> Self {
        let ratio = |r: &num_rational::BigRational| -> JsonRatio { [r.numer().into(), r.denom().into()] };
        let terms = p
            .terms()
            .map(|(m, c)| HoloTermDoc { alpha: m.exponents().to_vec(), re: ratio(c.re()), im: ratio(c.im()) })
            .collect();
        Self { nvars: p.nvars(), terms }
    }
}

#[derive(Serialize)]
struct SliceDoc {
    offset: Vec<i64>,
    poly: DiagDoc,
}

#[derive(Serialize)]
struct SlicesDoc {
    slices: Vec<SliceDoc>,
    extremal_bound: usize,
}

fn cmd_slices(a: &HermPoly, format: Format, io: &mut Io<'_>) -> Outcome {
    if a.is_zero() {
        return Err(Error::ZeroPolynomial.into());
    }
    let parts = slices(a)?;
    let bound = extremal_slice_bound(a)?;
    match format {
        Format::Json => {
            let doc = SlicesDoc {
                slices: parts.iter().map(|s| SliceDoc { offset: s.offset.deltas().to_vec(), poly: DiagDoc::from_poly(&s.poly) }).collect(),
                extremal_bound: bound,
            };
            io.line(&serde_json::to_string(&doc).expect("plain data serializes"))?;
        }
        Format::Text | Format::Table => {
            for s in &parts {
                let offset: Vec<String> = s.offset.deltas().iter().map(i64::to_string).collect();
                io.line(&format!("({}): {}", offset.join(", "), s.poly))?;
            }
            io.line(&format!("extremal bound: {bound}"))?;
        }
    }
    Ok(EXIT_OK)
}

#[derive(Serialize)]
struct EntryDoc {
    re: JsonRatio,
    im: JsonRatio,
}

#[derive(Serialize)]
struct MatrixDoc {
    row_index: Vec<Vec<u32>>,
    col_index: Vec<Vec<u32>>,
    entries: Vec<Vec<EntryDoc>>,
    rank: usize,
}

fn cmd_matrix(a: &HermPoly, format: Format, io: &mut Io<'_>) -> Outcome {
    if a.is_zero() {
        return match format {
            Format::Json => {
                io.line(r#"{"row_index":[],"col_index":[],"entries":[],"rank":0}"#)?;
                Ok(EXIT_OK)
            }
            _ => {
                io.line("(empty)")?;
                Ok(EXIT_OK)
            }
        };
    }
    let m = CoeffMatrix::build(a)?;
    match format {
        Format::Json => {
            let ratio = |r: &num_rational::BigRational| -> JsonRatio { [r.numer().into(), r.denom().into()] };
            let doc = MatrixDoc {
                row_index: m.row_index().iter().map(|r| r.exponents().to_vec()).collect(),
                col_index: m.col_index().iter().map(|c| c.exponents().to_vec()).collect(),
                entries: m.rows().iter().map(|row| row.iter().map(|c| EntryDoc { re: ratio(c.re()), im: ratio(c.im()) }).collect()).collect(),
                rank: m.exact_rank(),
            };
            io.line(&serde_json::to_string(&doc).expect("plain data serializes"))?;
        }
        Format::Text | Format::Table => {
            io.out(&m.to_string())?;
            io.line(&format!("rank: {}", m.exact_rank()))?;
        }
    }
    Ok(EXIT_OK)
}

fn cmd_verify(args: &VerifyArgs, format: Format, io: &mut Io<'_>, stderr: &mut dyn Write) -> Outcome {
    let suite: Suite = args.suite.parse().map_err(Failure::usage)?;
    let opts = SuiteOptions {
        n: args.n,
        d: args.d,
        trials: args.trials,
        seed: args.seed,
        exhaustive: args.exhaustive,
        max: args.max,
        threads: suite::threads_from_env(),
    };
    let lines = suite::run(suite, &opts).map_err(Failure::usage)?;
    let report = json_lines(&lines);
    let table = summary_table(&lines);
    match &args.out {
        Some(path) => {
            fs::write(path, &report).map_err(|e| Failure::io(format!("{}: {e}", path.display())))?;
            io.out(&table)?;
        }
        None if format == Format::Json => {
            io.out(&report)?;
            let _ = stderr.write_all(table.as_bytes());
        }
        None => io.out(&table)?,
    }
    Ok(if violations(&lines) == 0 { EXIT_OK } else { EXIT_FAILURE })
}

fn dispatch(cli: Cli, io: &mut Io<'_>, stderr: &mut dyn Write) -> Outcome {
    let format = cli.format;
    let doc_format = format.unwrap_or(Format::Json);
    match &cli.command {
        Command::Rank(input) => {
            let a = read_poly(input, io.stdin)?;
            io.line(&hermsos_core::matrix::rank(&a).to_string())?;
            Ok(EXIT_OK)
        }
        Command::Decompose(input) => {
            let a = read_poly(input, io.stdin)?;
            cmd_decompose(&a, doc_format, io)
        }
        Command::Verify(args) => cmd_verify(args, doc_format, io, stderr),
        Command::Divide(args) => cmd_divide(args, doc_format, io),
        Command::Slices(input) => {
            let a = read_poly(input, io.stdin)?;
            cmd_slices(&a, format.unwrap_or(Format::Text), io)
        }
        Command::Matrix(input) => {
            let a = read_poly(input, io.stdin)?;
            cmd_matrix(&a, format.unwrap_or(Format::Table), io)
        }
        Command::Pfister(args) => {
            let a = if args.norm { norm_power(args.n, args.d) } else { pfister_base(args.n, args.d) };
            io.line(&render_poly(&a, doc_format))?;
            Ok(EXIT_OK)
        }
        Command::Convert(input) => {
            let a = read_poly(input, io.stdin)?;
            let target = format.unwrap_or(match input.input_format {
                InputFormat::Json => Format::Text,
                InputFormat::Text => Format::Json,
                InputFormat::Auto => Format::Json,
            });
            io.line(&render_poly(&a, target))?;
            Ok(EXIT_OK)
        }
    }
}

/// Runs the command line `args` (including the program name) and returns
/// the exit code.
pub fn run<I, T>(args: I, stdin: &mut dyn Read, stdout: &mut dyn Write, stderr: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let rendered = e.render().to_string();
            let _ = if e.use_stderr() { stderr.write_all(rendered.as_bytes()) } else { stdout.write_all(rendered.as_bytes()) };
            return code;
        }
    };
    let mut io = Io { stdin, stdout };
    match dispatch(cli, &mut io, stderr) {
        Ok(code) => code,
        Err(f) => {
            let _ = writeln!(stderr, "error: {}", f.message);
            f.code
        }
    }
}
