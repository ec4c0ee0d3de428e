//! Command-line front end: generate exact cyclic polygons, build and render
//! their Heronian friezes, and run the identity checks.
//!
//! Four subcommands cover the pipeline:
//!
//! * `gen` — deterministically generate a random cyclic polygon with exact
//!   rational data and write its polygon JSON;
//! * `build` — construct the Heronian frieze of a polygon and write the
//!   frieze JSON;
//! * `render` — print the frieze (optionally the plane frieze with its
//!   gluing diamonds) as ASCII art or JSON;
//! * `check` — run selected identity checks, write the report JSON, print a
//!   one-line summary per identity, and exit accordingly.
//!
//! Exit codes are stable: `0` when every run check holds (skipped checks do
//! not fail a run), `1` when at least one check is violated, `2` for usage,
//! parse, and I/O errors. All randomness flows from `--seed` flags; equal
//! invocations produce byte-identical outputs.
//!
//! Explicitly selecting identities (anything other than `all`) vouches for
//! the circle hypothesis: the concyclicity gate is skipped so that the named
//! checks run — and report honest violations — even on input that fails the
//! exact circumcircle test. `all` keeps the gate, skipping circle identities
//! on non-cyclic input instead of flooding the report with expected
//! failures.

use std::collections::BTreeMap;
use std::ffi::OsString;
use std::fs;
use std::path::{Path, PathBuf};

use clap::error::ErrorKind;
use clap::{Args, Parser, Subcommand, ValueEnum};
use thiserror::Error;

use crate::frieze::{
    build_frieze, build_plane_frieze, render_frieze, render_plane_frieze, RenderFormat,
};
use crate::geometry::{random_cyclic_polygon, GeometryError, Polygon};
use crate::identities::{run_all_checks, CheckOptions, CheckReport, Residuals, Selection, Verdict};
use crate::measurements::build_table;
use crate::rational::ExactRational;

/// Every run check holds (or was skipped with a reason).
pub const EXIT_OK: i32 = 0;
/// At least one check is violated.
pub const EXIT_VIOLATION: i32 = 1;
/// Usage, parse, or I/O error; no verdict was reached.
pub const EXIT_USAGE: i32 = 2;

/// At most this many violated reports are detailed per identity on stdout;
/// the full list is always in the report JSON.
const MAX_VIOLATION_DETAILS: usize = 5;

#[derive(Debug, Error)]
enum CliError {
    #[error("cannot read {path}: {source}")]
    Read {
        path: PathBuf,
        source: std::io::Error,
    },
    #[error("cannot write {path}: {source}")]
    Write {
        path: PathBuf,
        source: std::io::Error,
    },
    #[error("cannot write to stdout: {source}")]
    Stdout { source: std::io::Error },
    #[error(transparent)]
    Geometry(#[from] GeometryError),
}

#[derive(Parser)]
#[command(
    name = "heronian-frieze",
    version,
    about = "Exact Heronian friezes of rational polygons and their cyclic-polygon identities"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Generate a seeded random cyclic polygon with exact rational data.
    Gen(GenArgs),
    /// Build the Heronian frieze of a polygon and write it as JSON.
    Build(BuildArgs),
    /// Render the frieze of a polygon as ASCII art or JSON.
    Render(RenderArgs),
    /// Run identity checks and report the exact residuals.
    Check(CheckArgs),
}

#[derive(Args)]
struct GenArgs {
    /// Number of vertices (at least 3).
    #[arg(long)]
    n: usize,
    /// Seed; equal (n, seed, radius) triples yield byte-identical files.
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// Circumradius as an exact rational, e.g. "1" or "5/4".
    #[arg(long, default_value = "1")]
    radius: ExactRational,
    /// Path for the polygon JSON.
    #[arg(short, long)]
    output: PathBuf,
}

#[derive(Args)]
struct BuildArgs {
    /// Polygon JSON (as written by `gen`).
    input: PathBuf,
    /// Path for the frieze JSON; stdout when omitted.
    #[arg(short, long)]
    output: Option<PathBuf>,
}

#[derive(Args)]
struct RenderArgs {
    /// Polygon JSON (as written by `gen`).
    input: PathBuf,
    /// Output format.
    #[arg(long, value_enum, default_value_t = FormatArg::Ascii)]
    format: FormatArg,
    /// Render the plane frieze, including the n gluing-diamond entries.
    #[arg(long)]
    plane: bool,
    /// Destination path; stdout when omitted.
    #[arg(short, long)]
    output: Option<PathBuf>,
}

#[derive(Clone, Copy, ValueEnum)]
enum FormatArg {
    /// One fundamental domain of the strip, entries as exact rationals.
    Ascii,
    /// The lossless JSON schema.
    Json,
}

impl From<FormatArg> for RenderFormat {
    fn from(format: FormatArg) -> Self {
        match format {
            FormatArg::Ascii => RenderFormat::Ascii,
            FormatArg::Json => RenderFormat::Json,
        }
    }
}

#[derive(Args)]
struct CheckArgs {
    /// Polygon JSON (as written by `gen`).
    input: PathBuf,
    /// Comma-separated identity tags: diamonds, det3, cor-diamonds, chord,
    /// cor-chord, plane-det, main-theorem, oracle, all.
    #[arg(long, value_delimiter = ',', default_value = "all")]
    select: Vec<Selection>,
    /// Cases per exhaustive family on polygons with more than 10 vertices.
    #[arg(long, default_value_t = 500)]
    budget: usize,
    /// Seed for budgeted sampling.
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// Path for the report JSON; only the stdout summary when omitted.
    #[arg(short, long)]
    output: Option<PathBuf>,
}

/// Parses `std::env::args_os()` and runs the chosen command, returning the
/// process exit code (the binary's `main` is a one-line wrapper over this).
pub fn run() -> i32 {
    run_from(std::env::args_os())
}

/// [`run`] over explicit arguments, for driving the CLI in tests.
pub fn run_from<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(error) => {
            // --help and --version are successful terminations, not usage
            // errors.
            let code = match error.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => EXIT_OK,
                _ => EXIT_USAGE,
            };
            let _ = error.print();
            return code;
        }
    };
    match execute(cli.command) {
        Ok(code) => code,
        Err(error) => {
            eprintln!("error: {error}");
            EXIT_USAGE
        }
    }
}

fn execute(command: Command) -> Result<i32, CliError> {
    match command {
        Command::Gen(args) => cmd_gen(args),
        Command::Build(args) => cmd_build(args),
        Command::Render(args) => cmd_render(args),
        Command::Check(args) => cmd_check(args),
    }
}

fn cmd_gen(args: GenArgs) -> Result<i32, CliError> {
    let polygon = random_cyclic_polygon(args.n, args.seed, args.radius)?;
    write_text(&args.output, &polygon.to_json())?;
    Ok(EXIT_OK)
}

fn cmd_build(args: BuildArgs) -> Result<i32, CliError> {
    let polygon = read_polygon(&args.input)?;
    let frieze = build_frieze(&build_table(&polygon));
    emit(args.output.as_deref(), &render_frieze(&frieze, RenderFormat::Json))?;
    Ok(EXIT_OK)
}

fn cmd_render(args: RenderArgs) -> Result<i32, CliError> {
    let polygon = read_polygon(&args.input)?;
    let table = build_table(&polygon);
    let text = if args.plane {
        render_plane_frieze(&build_plane_frieze(&table), args.format.into())
    } else {
        render_frieze(&build_frieze(&table), args.format.into())
    };
    emit(args.output.as_deref(), &text)?;
    Ok(EXIT_OK)
}

fn cmd_check(args: CheckArgs) -> Result<i32, CliError> {
    let polygon = read_polygon(&args.input)?;
    // Naming identities explicitly asserts the circle hypothesis; see the
    // module docs.
    let assume_cyclic = !args.select.contains(&Selection::All);
    let options = CheckOptions {
        budget: args.budget,
        seed: args.seed,
        assume_cyclic,
    };
    let reports = run_all_checks(&polygon, &args.select, &options);
    if let Some(path) = &args.output {
        let json =
            serde_json::to_string_pretty(&reports).expect("report serialization cannot fail");
        write_text(path, &json)?;
    }
    print_stdout(&summarize(&reports))?;
    Ok(if reports.iter().any(CheckReport::is_violated) {
        EXIT_VIOLATION
    } else {
        EXIT_OK
    })
}

/// One line per identity, aggregating its reports by verdict, followed by
/// detail lines (parameters and exact residuals) for violations.
fn summarize(reports: &[CheckReport]) -> String {
    let mut by_identity: BTreeMap<&str, [usize; 3]> = BTreeMap::new();
    for report in reports {
        let counts = by_identity.entry(&report.identity).or_default();
        match report.verdict {
            Verdict::Holds => counts[0] += 1,
            Verdict::Violated => counts[1] += 1,
            Verdict::Skipped => counts[2] += 1,
        }
    }
    let mut out = String::new();
    for (identity, [holds, violated, skipped]) in &by_identity {
        let total = holds + violated + skipped;
        let mut parts = Vec::new();
        if *holds > 0 {
            parts.push(format!("{holds} hold"));
        }
        if *violated > 0 {
            parts.push(format!("{violated} VIOLATED"));
        }
        if *skipped > 0 {
            parts.push(format!("{skipped} skipped"));
        }
        out.push_str(&format!(
            "{identity}: {total} check(s) — {}\n",
            parts.join(", ")
        ));

        let mut detailed = 0usize;
        for report in reports
            .iter()
            .filter(|r| &r.identity == identity && r.is_violated())
        {
            if detailed == MAX_VIOLATION_DETAILS {
                out.push_str(&format!(
                    "    … and {} more (see the report JSON)\n",
                    violated - detailed
                ));
                break;
            }
            out.push_str(&format!(
                "    {}; residuals = [{}]\n",
                report.summary_line(),
                residual_display(&report.residuals)
            ));
            detailed += 1;
        }
    }
    out
}

/// Residuals for the stdout detail lines: exact ones print as rationals
/// (never decimals), oracle ones as floats — the report JSON does the same.
fn residual_display(residuals: &Residuals) -> String {
    let rendered: Vec<String> = match residuals {
        Residuals::Exact(values) => values.iter().map(ToString::to_string).collect(),
        Residuals::Float(values) => values.iter().map(|v| format!("{v:e}")).collect(),
    };
    rendered.join(", ")
}

fn read_polygon(path: &Path) -> Result<Polygon, CliError> {
    let text = fs::read_to_string(path).map_err(|source| CliError::Read {
        path: path.to_path_buf(),
        source,
    })?;
    Ok(Polygon::from_json(&text)?)
}

fn write_text(path: &Path, text: &str) -> Result<(), CliError> {
    let mut contents = text.to_owned();
    if !contents.ends_with('\n') {
        contents.push('\n');
    }
    fs::write(path, contents).map_err(|source| CliError::Write {
        path: path.to_path_buf(),
        source,
    })
}

fn emit(path: Option<&Path>, text: &str) -> Result<(), CliError> {
    match path {
        Some(path) => write_text(path, text),
        None => {
            let mut line = text.to_owned();
            if !line.ends_with('\n') {
                line.push('\n');
            }
            print_stdout(&line)
        }
    }
}

/// Writes to stdout, treating a broken pipe — the reader went away, as in
/// `render … | head` — as success rather than a panic, per Unix filter
/// convention.
fn print_stdout(text: &str) -> Result<(), CliError> {
    use std::io::Write;
    let mut stdout = std::io::stdout().lock();
    let outcome = stdout
        .write_all(text.as_bytes())
        .and_then(|()| stdout.flush());
    match outcome {
        Err(source) if source.kind() == std::io::ErrorKind::BrokenPipe => Ok(()),
        other => other.map_err(|source| CliError::Stdout { source }),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::frieze::FriezeTable;
    use crate::rational::rat;

    fn cli(args: &[&str]) -> i32 {
        run_from(std::iter::once("heronian-frieze").chain(args.iter().copied()))
    }

    fn temp_dir() -> tempfile::TempDir {
        tempfile::tempdir().expect("temp dir")
    }

    #[test]
    fn gen_writes_deterministic_polygon_json() {
        let dir = temp_dir();
        let first = dir.path().join("a.json");
        let second = dir.path().join("b.json");
        for path in [&first, &second] {
            let code = cli(&[
                "gen",
                "--n",
                "8",
                "--seed",
                "42",
                "--radius",
                "1/1",
                "-o",
                path.to_str().unwrap(),
            ]);
            assert_eq!(code, EXIT_OK);
        }
        let bytes_a = fs::read(&first).unwrap();
        let bytes_b = fs::read(&second).unwrap();
        assert_eq!(bytes_a, bytes_b, "equal flags must give byte-identical files");

        let polygon = read_polygon(&first).unwrap();
        assert_eq!(polygon.n(), 8);
        assert!(polygon.cyclic_data().is_some(), "gen emits the cyclic form");
    }

    #[test]
    fn gen_rejects_too_few_vertices() {
        let dir = temp_dir();
        let out = dir.path().join("p.json");
        let code = cli(&["gen", "--n", "2", "-o", out.to_str().unwrap()]);
        assert_eq!(code, EXIT_USAGE);
        assert!(!out.exists(), "no file may be written on a usage error");
    }

    #[test]
    fn usage_and_parse_errors_exit_2() {
        let dir = temp_dir();
        assert_eq!(cli(&["frobnicate"]), EXIT_USAGE, "unknown subcommand");
        assert_eq!(
            cli(&["gen", "--n", "6", "--radius", "1/0", "-o", "/dev/null"]),
            EXIT_USAGE,
            "zero denominator radius"
        );

        let missing = dir.path().join("nope.json");
        assert_eq!(
            cli(&["check", missing.to_str().unwrap()]),
            EXIT_USAGE,
            "missing input file"
        );

        let garbled = dir.path().join("garbled.json");
        fs::write(&garbled, "{ not json").unwrap();
        assert_eq!(
            cli(&["check", garbled.to_str().unwrap()]),
            EXIT_USAGE,
            "malformed polygon JSON"
        );

        let polygon = dir.path().join("p.json");
        assert_eq!(
            cli(&["gen", "--n", "6", "-o", polygon.to_str().unwrap()]),
            EXIT_OK
        );
        assert_eq!(
            cli(&[
                "check",
                polygon.to_str().unwrap(),
                "--select",
                "det-three",
            ]),
            EXIT_USAGE,
            "unknown identity tag"
        );
    }

    #[test]
    fn help_is_not_an_error() {
        assert_eq!(cli(&["--help"]), EXIT_OK);
        assert_eq!(cli(&["check", "--help"]), EXIT_OK);
    }

    #[test]
    fn check_round_trip_holds_and_writes_report() {
        let dir = temp_dir();
        let polygon = dir.path().join("hexagon.json");
        let report = dir.path().join("report.json");
        assert_eq!(
            cli(&["gen", "--n", "6", "--seed", "3", "-o", polygon.to_str().unwrap()]),
            EXIT_OK
        );
        let code = cli(&[
            "check",
            polygon.to_str().unwrap(),
            "--select",
            "main-theorem",
            "-o",
            report.to_str().unwrap(),
        ]);
        assert_eq!(code, EXIT_OK);

        let reports: Vec<CheckReport> =
            serde_json::from_str(&fs::read_to_string(&report).unwrap()).unwrap();
        assert_eq!(reports.len(), 1);
        assert_eq!(reports[0].identity, "main-theorem");
        assert_eq!(reports[0].verdict, Verdict::Holds);
    }

    #[test]
    fn check_exits_1_on_a_perturbed_polygon() {
        let dir = temp_dir();
        let good = dir.path().join("octagon.json");
        assert_eq!(
            cli(&["gen", "--n", "8", "--seed", "42", "-o", good.to_str().unwrap()]),
            EXIT_OK
        );

        // Radially perturb one vertex by 1/1000 and feed the raw polygon
        // back in.
        let perturbed_polygon = read_polygon(&good)
            .unwrap()
            .scale_vertex(3, &rat(1001, 1000).unwrap());
        let bad = dir.path().join("perturbed.json");
        fs::write(&bad, perturbed_polygon.to_json()).unwrap();

        let code = cli(&[
            "check",
            bad.to_str().unwrap(),
            "--select",
            "main-theorem,det3",
        ]);
        assert_eq!(code, EXIT_VIOLATION);

        // Under `all` the gate reports the broken hypothesis instead.
        assert_eq!(cli(&["check", bad.to_str().unwrap()]), EXIT_OK);
    }

    #[test]
    fn build_and_render_round_trip() {
        let dir = temp_dir();
        let polygon = dir.path().join("square.json");
        // A raw (vertex-form) unit square exercises the non-cyclic JSON arm.
        fs::write(
            &polygon,
            crate::geometry::tests::unit_square().to_json(),
        )
        .unwrap();

        let frieze_json = dir.path().join("frieze.json");
        assert_eq!(
            cli(&[
                "build",
                polygon.to_str().unwrap(),
                "-o",
                frieze_json.to_str().unwrap(),
            ]),
            EXIT_OK
        );
        let table = FriezeTable::from_json(&fs::read_to_string(&frieze_json).unwrap()).unwrap();
        assert_eq!(table.n(), 4);

        let rendered = dir.path().join("frieze.txt");
        assert_eq!(
            cli(&[
                "render",
                polygon.to_str().unwrap(),
                "--format",
                "ascii",
                "--plane",
                "-o",
                rendered.to_str().unwrap(),
            ]),
            EXIT_OK
        );
        let text = fs::read_to_string(&rendered).unwrap();
        assert!(text.contains("gluing diamonds"));
        assert!(text.lines().next().unwrap().starts_with("--"));
    }
}
