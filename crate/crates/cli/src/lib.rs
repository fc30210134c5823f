//! Command-line front end for `lieherm`. Every subcommand loads its inputs,
//! calls one library operation and prints a single JSON document on
//! standard output.

mod input;
mod output;

use std::ffi::OsString;
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand};
use lieherm::connections::{
    connection_from_torsion, gauduchon_torsion, hermitian_torsion, trivial_alpha,
    verify_j_parallel, verify_metric_compat,
};
use lieherm::curvature::{flat_t_values, gauduchon_curvature, gauduchon_curvature_poly, skt_report, SktReport};
use lieherm::hermitian::{
    d_omega, d_omega_plus, is_kahler, nijenhuis, nijenhuis_skew_witness, AlmostHermitianAlgebra,
    VectorTwoForm,
};
use lieherm::lie::{catalog, check_biinvariant_frame, product_with_abelian};
use lieherm::verify::{verify_suite, ConnectionSource};
use lieherm::{format_rational, ErrorClass};
use serde::Serialize;
use serde_json::{json, Value};

pub use input::{AlgebraDoc, AlphaDoc, CliError, EntryDoc};
use input::{algebra_doc, load_algebra, load_alpha, load_lie, parse_parameter, write_json};

#[derive(Debug, Parser)]
#[command(name = "lieherm", version, about = "Exact left-invariant Hermitian connections on Lie groups")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Check an algebra file and report its basic properties.
    Validate { algebra: PathBuf },
    /// Print (or write) a built-in algebra.
    Catalog {
        name: String,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// The product h + a with a abelian of the same dimension.
    ProductAbelian {
        h: PathBuf,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Nijenhuis tensor of the standard J.
    Nijenhuis {
        algebra: PathBuf,
        #[arg(long)]
        check_skew: bool,
    },
    /// Exterior derivative of the fundamental 2-form.
    Domega {
        algebra: PathBuf,
        #[arg(long)]
        plus: bool,
    },
    /// Torsion of a Hermitian connection.
    Torsion(SourceArgs),
    /// Coefficients of a Hermitian connection.
    Connection(SourceArgs),
    /// Curvature of the Gauduchon connection at t.
    Curvature {
        #[arg(long, allow_hyphen_values = true)]
        t: String,
        algebra: PathBuf,
        #[arg(long)]
        poly: bool,
    },
    /// Values of t at which the Gauduchon connection is flat.
    FlatScan { algebra: PathBuf },
    /// The alpha-form of the trivial connection on a product h + a.
    TrivialAlpha { algebra: PathBuf },
    /// Whether the t = 2 torsion 3-form is closed.
    Skt { algebra: PathBuf },
    /// Run every consistency check on one Hermitian connection.
    Verify(SourceArgs),
}

#[derive(Debug, Args)]
struct SourceArgs {
    #[command(flatten)]
    source: Source,
    algebra: PathBuf,
}

#[derive(Debug, Args)]
#[group(required = true, multiple = false)]
struct Source {
    /// Alpha-form file.
    #[arg(long)]
    alpha: Option<PathBuf>,
    /// Gauduchon parameter, "p" or "p/q".
    #[arg(long, allow_hyphen_values = true)]
    t: Option<String>,
}

impl Command {
    fn name(&self) -> &'static str {
        match self {
            Command::Validate { .. } => "validate",
            Command::Catalog { .. } => "catalog",
            Command::ProductAbelian { .. } => "product-abelian",
            Command::Nijenhuis { .. } => "nijenhuis",
            Command::Domega { .. } => "domega",
            Command::Torsion(_) => "torsion",
            Command::Connection(_) => "connection",
            Command::Curvature { .. } => "curvature",
            Command::FlatScan { .. } => "flat-scan",
            Command::TrivialAlpha { .. } => "trivial-alpha",
            Command::Skt { .. } => "skt",
            Command::Verify(_) => "verify",
        }
    }
}

/// What a run produced: the exit code and both output streams.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

#[derive(Serialize)]
struct ErrorDoc {
    kind: &'static str,
    message: String,
}

#[derive(Serialize)]
struct Document<'a> {
    status: &'static str,
    command: Option<&'a str>,
    #[serde(skip_serializing_if = "Option::is_none")]
    payload: Option<Value>,
    #[serde(skip_serializing_if = "Option::is_none")]
    error: Option<ErrorDoc>,
}

fn render(doc: &Document<'_>) -> String {
    let mut s = serde_json::to_string_pretty(doc).expect("documents serialize");
    s.push('\n');
    s
}

fn failure(command: Option<&str>, class: ErrorClass, kind: &'static str, message: String, stderr: String) -> Outcome {
    let (status, code) = match class {
        ErrorClass::Validation => ("validation_error", 1),
        ErrorClass::MathPrecondition => ("math_precondition_error", 2),
    };
    let doc = Document {
        status,
        command,
        payload: None,
        error: Some(ErrorDoc { kind, message }),
    };
    Outcome {
        code,
        stdout: render(&doc),
        stderr,
    }
}

/// Parses `args` (including the program name) and runs the command.
pub fn run<I, T>(args: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            use clap::error::ErrorKind;
            let text = e.render().to_string();
            return match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => Outcome {
                    code: 0,
                    stdout: text,
                    stderr: String::new(),
                },
                kind => {
                    let name = if kind == ErrorKind::InvalidSubcommand { "UnknownCommand" } else { "UsageError" };
                    let first = text.lines().next().unwrap_or_default().trim_start_matches("error: ").to_string();
                    failure(None, ErrorClass::Validation, name, first, text)
                }
            };
        }
    };
    let name = cli.command.name();
    match execute(&cli.command) {
        Ok(payload) => Outcome {
            code: 0,
            stdout: render(&Document {
                status: "ok",
                command: Some(name),
                payload: Some(payload),
                error: None,
            }),
            stderr: String::new(),
        },
        Err(e) => {
            let message = e.to_string();
            let stderr = format!("error: {message}\n");
            failure(Some(name), e.class(), e.kind(), message, stderr)
        }
    }
}

fn source_torsion(a: &AlmostHermitianAlgebra, s: &Source) -> Result<(Value, VectorTwoForm), CliError> {
    match (&s.alpha, &s.t) {
        (Some(path), _) => {
            let alpha = load_alpha(path, a.n())?;
            Ok((json!({ "alpha": path.display().to_string() }), hermitian_torsion(a, &alpha)?))
        }
        (None, Some(text)) => {
            let t = parse_parameter(text)?;
            Ok((json!({ "t": format_rational(&t) }), gauduchon_torsion(a, &t)))
        }
        (None, None) => unreachable!("clap requires one source"),
    }
}

fn emit_algebra(name: &str, lie: &lieherm::lie::LieAlgebra, out: Option<&Path>) -> Result<Value, CliError> {
    let doc = algebra_doc(name, lie);
    if let Some(path) = out {
        write_json(path, &doc)?;
    }
    let mut payload = json!({ "algebra": doc });
    if let Some(path) = out {
        payload["written"] = json!(path.display().to_string());
    }
    Ok(payload)
}

fn execute(command: &Command) -> Result<Value, CliError> {
    Ok(match command {
        Command::Validate { algebra } => {
            let (name, lie) = load_lie(algebra)?;
            lie.check_jacobi()?;
            let mut payload = json!({
                "name": name,
                "dim": lie.dim(),
                "jacobi_defect_zero": true,
                "biinvariant_frame": check_biinvariant_frame(&lie),
                "even_dimension": lie.dim() % 2 == 0,
            });
            if lie.dim() % 2 == 0 {
                let product_form = lie.product_form_witness().is_none();
                let a = AlmostHermitianAlgebra::new(lie)?;
                payload["product_form"] = json!(product_form);
                payload["integrable"] = json!(nijenhuis(&a).is_zero());
                payload["nijenhuis_totally_skew"] = json!(nijenhuis_skew_witness(&a).is_none());
                payload["kahler"] = json!(is_kahler(&a));
            }
            payload
        }
        Command::Catalog { name, output } => emit_algebra(name, &catalog(name)?, output.as_deref())?,
        Command::ProductAbelian { h, output } => {
            let (name, lie) = load_lie(h)?;
            let g = product_with_abelian(&lie)?;
            emit_algebra(&format!("{name}xR{}", lie.dim()), &g, output.as_deref())?
        }
        Command::Nijenhuis { algebra, check_skew } => {
            let a = load_algebra(algebra)?;
            let n = nijenhuis(&a);
            let mut payload = json!({
                "components": output::two_form(n.components()),
                "integrable": n.is_zero(),
            });
            if *check_skew {
                let w = nijenhuis_skew_witness(&a);
                payload["totally_skew"] = json!(w.is_none());
                payload["witness"] = output::witness(w.map(|(x, y, z)| vec![x, y, z]));
            }
            payload
        }
        Command::Domega { algebra, plus } => {
            let a = load_algebra(algebra)?;
            let (form, w) = if *plus { ("d_omega_plus", d_omega_plus(&a)) } else { ("d_omega", d_omega(&a)) };
            json!({ "form": form, "components": output::three_form(w.components()) })
        }
        Command::Torsion(args) => {
            let a = load_algebra(&args.algebra)?;
            let (source, t) = source_torsion(&a, &args.source)?;
            json!({ "source": source, "components": output::two_form(t.components()) })
        }
        Command::Connection(args) => {
            let a = load_algebra(&args.algebra)?;
            let (source, t) = source_torsion(&a, &args.source)?;
            let g = connection_from_torsion(&a, &t)?;
            json!({
                "source": source,
                "components": output::full3(g.coefficients()),
                "metric_compatible": verify_metric_compat(&g),
                "j_parallel": verify_j_parallel(&g),
            })
        }
        Command::Curvature { t, algebra, poly } => {
            let a = load_algebra(algebra)?;
            let t = parse_parameter(t)?;
            let r = gauduchon_curvature(&a, &t);
            let mut payload = json!({
                "t": format_rational(&t),
                "components": output::full4(r.components()),
                "flat": r.is_zero(),
            });
            if *poly {
                payload["polynomials"] = output::polynomials(&gauduchon_curvature_poly(&a));
            }
            payload
        }
        Command::FlatScan { algebra } => {
            let a = load_algebra(algebra)?;
            let report = flat_t_values(&a);
            let quadratics: Vec<Value> = report
                .unresolved_quadratics
                .iter()
                .map(|p| output::rationals(&p.coefficients().map(Clone::clone)))
                .collect();
            json!({
                "identically_flat": report.identically_flat,
                "rational_roots": output::rationals(&report.rational_roots),
                "unresolved_quadratics": quadratics,
            })
        }
        Command::TrivialAlpha { algebra } => {
            let a = load_algebra(algebra)?;
            let alpha = trivial_alpha(&a)?;
            json!({ "alpha": { "n": a.n(), "components": output::two_form(alpha.form().components()) } })
        }
        Command::Skt { algebra } => {
            let a = load_algebra(algebra)?;
            match skt_report(&a) {
                SktReport::Skt => json!({ "skt": true, "reason": null, "witness": null }),
                SktReport::NotSkew(x, y, z) => {
                    json!({ "skt": false, "reason": "torsion_not_totally_skew", "witness": [x, y, z] })
                }
                SktReport::NotClosed(x, y, z, w) => {
                    json!({ "skt": false, "reason": "three_form_not_closed", "witness": [x, y, z, w] })
                }
            }
        }
        Command::Verify(args) => {
            let a = load_algebra(&args.algebra)?;
            let (source_doc, source) = match (&args.source.alpha, &args.source.t) {
                (Some(path), _) => (
                    json!({ "alpha": path.display().to_string() }),
                    ConnectionSource::Alpha(load_alpha(path, a.n())?),
                ),
                (None, Some(text)) => {
                    let t = parse_parameter(text)?;
                    (json!({ "t": format_rational(&t) }), ConnectionSource::Gauduchon(t))
                }
                (None, None) => unreachable!("clap requires one source"),
            };
            let report = verify_suite(&a, &source)?;
            let checks: Vec<Value> = report
                .checks
                .iter()
                .map(|c| json!({ "name": c.name, "passed": c.passed, "witness": c.witness }))
                .collect();
            json!({ "source": source_doc, "all_passed": report.all_passed(), "checks": checks })
        }
    })
}
