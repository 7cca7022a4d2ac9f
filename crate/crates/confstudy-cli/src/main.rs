//! `confstudy` — exact conformal-kinematics computations over JSON files.
//!
//! Subcommands: `classify`, `decompose`, `factor`, `act`, `mul`,
//! `trajectory`. Results go to stdout as single-line JSON; diagnostics and
//! errors go to stderr, errors as `{"error": <code>, "detail": <text>}`.
//! Exit codes: 0 success, 1 usage/schema errors, 2 mathematical
//! precondition failures. Identical inputs produce byte-identical output.
//! The environment variable `CONFSTUDY_THREADS` caps internal parallelism
//! (0 or unset: automatic).

use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::error::ErrorKind;
use clap::{Parser, Subcommand};
use serde_json::{json, Map, Value};

use confstudy::dorst::{
    classify_motion, line_normalize, sandwich, sandwich_normalized, trajectory, wedge_decompose,
    TrajectorySample,
};
use confstudy::error::Error;
use confstudy::fourquat::FourQuat;
use confstudy::geometry::{classify_vector, embed_point, VectorKind};
use confstudy::json as wire;
use confstudy::rational::{format_rational, parse_rational, rational_to_f64, Rational};
use confstudy::rotorpoly::factorize;
use confstudy::study::{
    ideal_generators, null_value, on_study, rotor_norm, subgroup_member, GroupTag,
};

#[derive(Parser)]
#[command(
    name = "confstudy",
    version,
    about = "Exact conformal kinematics: classify displacements, decompose motions, \
             factor motion polynomials, and act on points",
    max_term_width = 100
)]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// Report variety membership, generator values, norm, subgroups, and
    /// the motion type of an even element (multivector or four-quaternion)
    Classify {
        /// Element JSON file
        input: PathBuf,
    },
    /// Decompose a displacement-line element into a wedge of two vectors
    Decompose {
        /// Element JSON file
        input: PathBuf,
    },
    /// Factor a motion polynomial into linear factors, one factorization
    /// per quadratic ordering of its norm polynomial
    Factor {
        /// Polynomial JSON file ({"coeffs": [...]}, ascending degree)
        input: PathBuf,
        /// Fail (exit 2) unless exactly this many factorizations are found
        #[arg(long)]
        require_count: Option<usize>,
    },
    /// Apply an even element to an embedded point by the sandwich action
    Act {
        /// Rotor JSON file (multivector or four-quaternion)
        input: PathBuf,
        /// Seed point as three comma-separated rationals, e.g. 1,2,3
        #[arg(long)]
        point: String,
        /// Rescale the image so its e_o coefficient is 1
        #[arg(long)]
        normalize: bool,
    },
    /// Geometric product of two elements (formats auto-detected; mixed
    /// operands multiply as multivectors)
    Mul {
        /// Left operand JSON file
        a: PathBuf,
        /// Right operand JSON file
        b: PathBuf,
    },
    /// Sample the one-parameter motion of a point along an elementary
    /// motion
    Trajectory {
        /// Motion JSON file ({"blade": {"a", "b"}} or {"direction": ...})
        input: PathBuf,
        /// Seed point as three comma-separated rationals
        #[arg(long)]
        point: String,
        /// Comma-separated rational parameter values
        #[arg(long)]
        t: String,
        /// Also write the samples as CSV (columns t,x,y,z,kind) to this file
        #[arg(long)]
        csv: Option<PathBuf>,
        /// Render CSV numbers as exact "p/q" strings instead of decimals
        #[arg(long)]
        exact: bool,
    },
}

/// A failed run: the machine-readable error code, a human-readable detail,
/// and the process exit code (1 schema/usage, 2 mathematics).
struct Failure {
    code: String,
    detail: String,
    exit: u8,
}

impl Failure {
    fn schema(code: &str, detail: String) -> Self {
        Failure { code: code.into(), detail, exit: 1 }
    }
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let exit = if matches!(e, Error::Parse(_)) { 1 } else { 2 };
        Failure { code: e.code().into(), detail: e.to_string(), exit }
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) if matches!(e.kind(), ErrorKind::DisplayHelp | ErrorKind::DisplayVersion) => {
            print!("{e}");
            return ExitCode::SUCCESS;
        }
        Err(e) => return fail(&Failure::schema("usage", e.to_string())),
    };
    if let Err(f) = configure_threads() {
        return fail(&f);
    }
    match run(cli.cmd) {
        Ok(()) => ExitCode::SUCCESS,
        Err(f) => fail(&f),
    }
}

fn fail(f: &Failure) -> ExitCode {
    eprintln!("{}", json!({ "error": f.code, "detail": f.detail }));
    ExitCode::from(f.exit)
}

/// Applies `CONFSTUDY_THREADS` to the global worker pool before any
/// parallel work runs. Unset or 0 leaves the automatic thread count.
fn configure_threads() -> Result<(), Failure> {
    let Ok(raw) = std::env::var("CONFSTUDY_THREADS") else {
        return Ok(());
    };
    let n: usize = raw
        .trim()
        .parse()
        .map_err(|_| Failure::schema("usage", format!("CONFSTUDY_THREADS must be a non-negative integer, got {raw:?}")))?;
    if n == 0 {
        return Ok(());
    }
    rayon::ThreadPoolBuilder::new()
        .num_threads(n)
        .build_global()
        .map_err(|e| Failure { code: "internal_error".into(), detail: e.to_string(), exit: 2 })
}

fn run(cmd: Cmd) -> Result<(), Failure> {
    match cmd {
        Cmd::Classify { input } => classify_cmd(&input),
        Cmd::Decompose { input } => decompose_cmd(&input),
        Cmd::Factor { input, require_count } => factor_cmd(&input, require_count),
        Cmd::Act { input, point, normalize } => act_cmd(&input, &point, normalize),
        Cmd::Mul { a, b } => mul_cmd(&a, &b),
        Cmd::Trajectory { input, point, t, csv, exact } => {
            trajectory_cmd(&input, &point, &t, csv.as_deref(), exact)
        }
    }
}

/// Prints one deterministic JSON line on stdout.
fn emit(v: &Value) {
    println!("{v}");
}

fn read_json(path: &Path) -> Result<Value, Failure> {
    let text = fs::read_to_string(path)
        .map_err(|e| Failure::schema("io_error", format!("{}: {e}", path.display())))?;
    serde_json::from_str(&text)
        .map_err(|e| Failure::schema("parse_error", format!("{}: {e}", path.display())))
}

/// Reads either element format down to a four-quaternion (multivectors
/// must be even).
fn element_as_fourquat(v: &Value) -> Result<FourQuat, Error> {
    match wire::element_from_json(v)? {
        wire::Element::Multivector(m) => FourQuat::split(&m),
        wire::Element::FourQuat(q) => Ok(q),
    }
}

fn parse_point(s: &str) -> Result<[Rational; 3], Error> {
    let parts: Vec<&str> = s.split(',').collect();
    if parts.len() != 3 {
        return Err(Error::Parse(format!(
            "point must be three comma-separated rationals, got {s:?}"
        )));
    }
    Ok([
        parse_rational(parts[0].trim())?,
        parse_rational(parts[1].trim())?,
        parse_rational(parts[2].trim())?,
    ])
}

fn parse_t_list(s: &str) -> Result<Vec<Rational>, Error> {
    s.split(',')
        .map(|part| parse_rational(part.trim()))
        .collect()
}

fn classify_cmd(input: &Path) -> Result<(), Failure> {
    let q = element_as_fourquat(&read_json(input)?)?;
    let on = on_study(&q)?;
    let mut out = Map::new();
    out.insert("on_study".into(), json!(on));
    out.insert("generators".into(), wire::residual_to_json(&ideal_generators(&q)));
    out.insert("null_value".into(), json!(format_rational(&null_value(&q))));
    if on {
        let norm = rotor_norm(&q).expect("norm of a displacement is scalar");
        out.insert("norm".into(), json!(format_rational(&norm)));
        let subgroups: Vec<Value> = GroupTag::ALL
            .iter()
            .filter(|tag| subgroup_member(&q, **tag).expect("membership is decidable on the variety"))
            .map(|tag| json!(tag.name()))
            .collect();
        out.insert("subgroups".into(), Value::Array(subgroups));
        if let Ok(direction) = line_normalize(&q) {
            out.insert("motion_type".into(), json!(classify_motion(&direction).name()));
        }
    } else {
        out.insert("subgroups".into(), json!([]));
    }
    emit(&Value::Object(out));
    Ok(())
}

fn decompose_cmd(input: &Path) -> Result<(), Failure> {
    let q = element_as_fourquat(&read_json(input)?)?;
    let direction = line_normalize(&q)?;
    let blade = wedge_decompose(&direction)?;
    emit(&wire::blade_to_json(&blade));
    Ok(())
}

fn factor_cmd(input: &Path, require_count: Option<usize>) -> Result<(), Failure> {
    let poly = wire::rotorpoly_from_json(&read_json(input)?)?;
    let result = factorize(&poly)?;
    for diag in &result.skipped {
        eprintln!("skipped: {diag}");
    }
    if let Some(expected) = require_count {
        let found = result.factorizations.len();
        if found != expected {
            return Err(Failure {
                code: "require_count_mismatch".into(),
                detail: format!("expected {expected} factorizations, found {found}"),
                exit: 2,
            });
        }
    }
    emit(&wire::factorizations_to_json(&result.factorizations));
    Ok(())
}

fn act_cmd(input: &Path, point: &str, normalize: bool) -> Result<(), Failure> {
    let rotor = element_as_fourquat(&read_json(input)?)?;
    let seed = embed_point(&parse_point(point)?);
    let image = if normalize {
        sandwich_normalized(&rotor, &seed)?
    } else {
        sandwich(&rotor, &seed)?
    };
    let kind = classify_vector(&image);
    emit(&json!({
        "image": wire::mv_to_json(&image),
        "kind": wire::kind_result_to_json(&kind),
    }));
    Ok(())
}

fn mul_cmd(a: &Path, b: &Path) -> Result<(), Failure> {
    let lhs = wire::element_from_json(&read_json(a)?)?;
    let rhs = wire::element_from_json(&read_json(b)?)?;
    let out = match (lhs, rhs) {
        (wire::Element::FourQuat(p), wire::Element::FourQuat(s)) => {
            wire::fourquat_to_json(&p.mul(&s))
        }
        (lhs, rhs) => {
            let to_mv = |e| match e {
                wire::Element::Multivector(m) => m,
                wire::Element::FourQuat(q) => q.join(),
            };
            wire::mv_to_json(&to_mv(lhs).gp(&to_mv(rhs)))
        }
    };
    emit(&out);
    Ok(())
}

fn trajectory_cmd(
    input: &Path,
    point: &str,
    t: &str,
    csv: Option<&Path>,
    exact: bool,
) -> Result<(), Failure> {
    let motion = wire::motion_from_json(&read_json(input)?)?;
    let p0 = parse_point(point)?;
    let params = parse_t_list(t)?;
    let samples = trajectory(&motion, &p0, &params)?;
    if let Some(path) = csv {
        fs::write(path, render_csv(&samples, exact))
            .map_err(|e| Failure::schema("io_error", format!("{}: {e}", path.display())))?;
    }
    emit(&wire::samples_to_json(&samples));
    Ok(())
}

/// One CSV number: shortest round-trip decimal by default, exact `p/q`
/// when requested.
fn csv_number(r: &Rational, exact: bool) -> String {
    if exact {
        format_rational(r)
    } else {
        rational_to_f64(r).to_string()
    }
}

/// Renders samples as CSV with columns `t,x,y,z,kind` and LF line endings.
/// Samples whose image carries no center (points at infinity, degenerate
/// images) leave x,y,z empty; `kind` is the classification tag or the
/// error code.
fn render_csv(samples: &[TrajectorySample], exact: bool) -> String {
    let mut out = String::from("t,x,y,z,kind\n");
    for s in samples {
        let coords: Option<&[Rational; 3]> = match &s.kind {
            Ok(VectorKind::FinitePoint { center, .. })
            | Ok(VectorKind::RealSphere { center, .. })
            | Ok(VectorKind::ImaginarySphere { center, .. }) => Some(center),
            _ => None,
        };
        let tag = match &s.kind {
            Ok(kind) => kind.tag(),
            Err(e) => e.code(),
        };
        let [x, y, z] = match coords {
            Some(c) => [
                csv_number(&c[0], exact),
                csv_number(&c[1], exact),
                csv_number(&c[2], exact),
            ],
            None => [String::new(), String::new(), String::new()],
        };
        out.push_str(&format!("{},{x},{y},{z},{tag}\n", csv_number(&s.t, exact)));
    }
    out
}
