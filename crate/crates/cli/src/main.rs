use std::io::{self, Write};
use std::process::ExitCode;
use std::str::FromStr;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use csl_core::counting::{hierarchy_counts, Counting};
use csl_core::engine::{
    classify_csls, denominator, enumerate_rotations, sigma_closed_form, sigma_oracle, sigma_oracle_value,
    CoincidenceResult, EnumOptions, Isometry, Method, ResumeToken, Sigma, Structure, StructureSpec,
};
use csl_core::matrix::QuadMat;
use csl_core::quadratic::Quad;
use csl_core::Error;

const EXIT_FAIL: u8 = 1;
const EXIT_PARSE: u8 = 2;
const EXIT_INFINITE: u8 = 3;
const EXIT_CAP: u8 = 4;

#[derive(Parser)]
#[command(name = "csl", version, about = "Coincidence site lattices and modules")]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// Coincidence index and CSL basis of one isometry.
    Index(IndexArgs),
    /// All coincidence rotations up to a given index.
    Enumerate(EnumerateArgs),
    /// Coefficients of a counting function.
    Count(CountArgs),
    /// Closed forms against the oracle and the counting function.
    Verify(VerifyArgs),
    /// CSLs of one index grouped into point-group orbits.
    Classify(ClassifyArgs),
    /// Sublattice, square, primitive square and CSL counts of Z².
    Hierarchy(HierarchyArgs),
}

#[derive(Clone, Copy, ValueEnum, Default, PartialEq, Eq)]
enum Format {
    Csv,
    #[default]
    Json,
}

#[derive(Args)]
struct IndexArgs {
    /// Structure name; a trailing `*` selects the dual.
    #[arg(long)]
    structure: String,
    /// Rows separated by `;`, entries by `,`; entries may use sqrt(5) or tau.
    #[arg(long, group = "handle")]
    matrix: Option<String>,
    /// `(a,b,c,d)`, integer or golden entries.
    #[arg(long, group = "handle")]
    quaternion: Option<String>,
    /// `(a,b,c,d),(e,f,g,h)`.
    #[arg(long, group = "handle")]
    pair: Option<String>,
    /// `num/den` over Z[i] (Z2) or Z[ξ₅] (M10).
    #[arg(long, group = "handle")]
    quotient: Option<String>,
    /// Compose the quotient with complex conjugation.
    #[arg(long, requires = "quotient")]
    reflect: bool,
    /// Use the oracle even where a closed form exists.
    #[arg(long)]
    oracle: bool,
    #[arg(long, value_enum, default_value_t)]
    format: Format,
}

#[derive(Args)]
struct EnumerateArgs {
    #[arg(long)]
    structure: String,
    #[arg(long)]
    max: u64,
    /// Rotations per page.
    #[arg(long, env = "CSL_CAP")]
    cap: Option<u64>,
    /// Token printed by a previous capped run.
    #[arg(long)]
    resume: Option<String>,
    #[arg(long, value_enum, default_value_t = Format::Csv)]
    format: Format,
}

#[derive(Args)]
struct CountArgs {
    /// Structure or counting-function name.
    #[arg(long)]
    structure: String,
    #[arg(long)]
    max: u64,
    /// Skip zero coefficients.
    #[arg(long)]
    nonzero: bool,
    #[arg(long, value_enum, default_value_t = Format::Csv)]
    format: Format,
}

#[derive(Args)]
struct VerifyArgs {
    #[arg(long)]
    structure: String,
    #[arg(long)]
    max: u64,
    #[arg(long, default_value_t = 1)]
    threads: usize,
    #[arg(long, value_enum, default_value_t = Format::Csv)]
    format: Format,
}

#[derive(Args)]
struct ClassifyArgs {
    #[arg(long)]
    structure: String,
    #[arg(long)]
    sigma: u64,
    #[arg(long, value_enum, default_value_t)]
    format: Format,
}

#[derive(Args)]
struct HierarchyArgs {
    #[arg(long)]
    max: u64,
    #[arg(long, value_enum, default_value_t = Format::Csv)]
    format: Format,
}

/// Failure with its exit code.
struct Fail {
    code: u8,
    msg: String,
}

impl From<Error> for Fail {
    fn from(e: Error) -> Self {
        let code = match e {
            Error::Parse(_) => EXIT_PARSE,
            Error::CapExceeded { .. } => EXIT_CAP,
            _ => EXIT_FAIL,
        };
        Fail { code, msg: e.to_string() }
    }
}

impl From<io::Error> for Fail {
    fn from(e: io::Error) -> Self {
        Fail { code: EXIT_FAIL, msg: e.to_string() }
    }
}

type Run = std::result::Result<u8, Fail>;

fn main() -> ExitCode {
    let cli = Cli::parse();
    let res = match cli.cmd {
        Cmd::Index(a) => index(a),
        Cmd::Enumerate(a) => enumerate(a),
        Cmd::Count(a) => count(a),
        Cmd::Verify(a) => verify(a),
        Cmd::Classify(a) => classify(a),
        Cmd::Hierarchy(a) => hierarchy(a),
    };
    match res {
        Ok(code) => ExitCode::from(code),
        Err(f) => {
            eprintln!("error: {}", f.msg);
            ExitCode::from(f.code)
        }
    }
}

fn parse_spec(s: &str) -> Result<StructureSpec, Fail> {
    let (name, dual) = match s.trim().strip_suffix('*') {
        Some(n) => (n, true),
        None => (s.trim(), false),
    };
    let spec = StructureSpec::new(Structure::from_str(name)?);
    Ok(if dual { spec.dual() } else { spec })
}

fn parse_handle(a: &IndexArgs, spec: &StructureSpec) -> Result<Isometry, Fail> {
    let iso = if let Some(m) = &a.matrix {
        Isometry::parse_matrix(m)?
    } else if let Some(q) = &a.quaternion {
        Isometry::parse_quaternion(q)?
    } else if let Some(p) = &a.pair {
        Isometry::parse_pair(p)?
    } else if let Some(z) = &a.quotient {
        match spec.structure {
            Structure::Z2 => Isometry::parse_gaussian(z, a.reflect)?,
            Structure::M10 => Isometry::parse_cyclotomic(z, a.reflect)?,
            s => {
                return Err(Fail {
                    code: EXIT_PARSE,
                    msg: format!("--quotient applies to Z2 and M10, not {}", s.name()),
                })
            }
        }
    } else {
        return Err(Fail { code: EXIT_PARSE, msg: "one of --matrix, --quaternion, --pair, --quotient is required".into() });
    };
    iso.validate()?;
    Ok(iso)
}

fn emit(v: &Value) -> Result<(), Fail> {
    let mut out = io::stdout().lock();
    serde_json::to_writer_pretty(&mut out, v).map_err(|e| Fail { code: EXIT_FAIL, msg: e.to_string() })?;
    writeln!(out)?;
    Ok(())
}

fn emit_csv(header: &[&str], rows: impl IntoIterator<Item = Vec<String>>) -> Result<(), Fail> {
    let mut out = io::BufWriter::new(io::stdout().lock());
    writeln!(out, "{}", header.join(","))?;
    for r in rows {
        let cells: Vec<String> = r.into_iter().map(csv_cell).collect();
        writeln!(out, "{}", cells.join(","))?;
    }
    out.flush()?;
    Ok(())
}

fn csv_cell(s: String) -> String {
    if s.contains([',', '"', '\n']) {
        format!("\"{}\"", s.replace('"', "\"\""))
    } else {
        s
    }
}

/// Axis and cosine of the angle of a rotation of R³, both exact.
fn axis_angle(m: &QuadMat) -> Option<(Vec<Quad>, Quad)> {
    let g = |i, j| m.get(i, j).clone();
    let two = Quad::int(2);
    let trace = g(0, 0) + g(1, 1) + g(2, 2);
    let cos = (trace - Quad::int(1)) / two;
    let mut axis = vec![g(2, 1) - g(1, 2), g(0, 2) - g(2, 0), g(1, 0) - g(0, 1)];
    if axis.iter().all(is_zero) {
        if m.is_identity() {
            return Some((vec![Quad::int(0); 3], Quad::int(1)));
        }
        // half turn: any nonzero column of R + I
        let p = m.add(&QuadMat::identity(3)).ok()?;
        axis = (0..3).map(|j| p.col(j)).find(|c| !c.iter().all(is_zero))?;
    }
    Some((axis, cos))
}

fn is_zero(q: &Quad) -> bool {
    *q == Quad::int(0)
}

fn index(a: IndexArgs) -> Run {
    let spec = parse_spec(&a.structure)?;
    let iso = parse_handle(&a, &spec)?;
    let closed = if a.oracle { None } else { Some(sigma_closed_form(&iso, &spec)?) };
    let oracle = sigma_oracle(&iso, &spec)?;
    let main: &CoincidenceResult = match &closed {
        Some(c) if c.method == Method::ClosedForm => c,
        _ => &oracle,
    };
    if let Some(c) = &closed {
        if c.sigma != oracle.sigma {
            return Err(Fail {
                code: EXIT_FAIL,
                msg: format!("closed form {} disagrees with oracle {} for {iso}", c.sigma, oracle.sigma),
            });
        }
    }
    let matrix = iso.matrix().ok();
    let den = match (&matrix, &iso) {
        (Some(m), _) => denominator(m).ok().map(|d| d.to_string()),
        (None, Isometry::Cyclotomic { den, .. }) => Some(den.to_string()),
        _ => None,
    };
    let basis = oracle.csl.as_ref().map(|h| h.to_string());
    let mut v = json!({
        "structure": spec.name(),
        "handle": iso.to_string(),
        "sigma": main.sigma,
        "method": main.method.to_string(),
        "denominator": den,
        "matrix": matrix.as_ref().map(|m| m.to_string()),
        "csl_basis": basis,
    });
    if iso.dim() == 3 && !iso.is_reflection()? {
        if let Some((mut axis, cos)) = matrix.as_ref().and_then(axis_angle) {
            if let Isometry::Quaternion(q) = &iso {
                axis = q.c[1..].to_vec();
            }
            v["axis"] = json!(axis.iter().map(|x| x.to_string()).collect::<Vec<_>>());
            v["cos_angle"] = json!(cos.to_string());
            v["angle_deg"] = json!(cos.to_f64().clamp(-1.0, 1.0).acos().to_degrees());
        }
    }
    match a.format {
        Format::Json => emit(&v)?,
        Format::Csv => emit_csv(
            &["structure", "handle", "sigma", "method", "denominator"],
            [vec![spec.name(), iso.to_string(), main.sigma.to_string(), main.method.to_string(), den.unwrap_or_default()]],
        )?,
    }
    Ok(if main.sigma == Sigma::Infinite { EXIT_INFINITE } else { 0 })
}

fn enumerate(a: EnumerateArgs) -> Run {
    let spec = parse_spec(&a.structure)?;
    let mut opts = EnumOptions { cap: a.cap, ..EnumOptions::default() };
    if let Some(t) = &a.resume {
        let t = ResumeToken::from_str(t)?;
        if t.structure != spec.name() || t.sigma_max != a.max {
            return Err(Fail {
                code: EXIT_PARSE,
                msg: format!("resume token {t} does not match {} with --max {}", spec.name(), a.max),
            });
        }
        opts.offset = t.offset;
    }
    let page = enumerate_rotations(&spec, a.max, opts)?;
    match a.format {
        Format::Json => emit(&serde_json::to_value(&page).expect("serializable"))?,
        Format::Csv => emit_csv(
            &["sigma", "handle", "matrix"],
            page.items.iter().map(|r| {
                let iso = r.isometry();
                vec![r.sigma.to_string(), iso.to_string(), iso.matrix().map(|m| m.to_string()).unwrap_or_default()]
            }),
        )?,
    }
    if let Some(t) = &page.resume {
        eprintln!("cap of {} reached after {} of {} rotations; resume with --resume {t}", a.cap.unwrap_or(0), page.offset + page.items.len(), page.total);
        return Ok(EXIT_CAP);
    }
    Ok(0)
}

fn parse_counting(s: &str) -> Result<Counting, Fail> {
    match parse_spec(s) {
        Ok(spec) => Ok(spec.structure.counting()),
        Err(_) => Ok(Counting::from_str(s)?),
    }
}

fn count(a: CountArgs) -> Run {
    let f = parse_counting(&a.structure)?;
    let t = f.table(a.max as usize)?;
    let rows: Vec<(u64, i128)> = t.iter().filter(|&(m, v)| m >= 1 && (!a.nonzero || v != 0)).collect();
    match a.format {
        Format::Csv => emit_csv(&["m", "f"], rows.iter().map(|(m, v)| vec![m.to_string(), v.to_string()]))?,
        Format::Json => emit(&json!({
            "function": f.name(),
            "max": a.max,
            "rows": rows.iter().map(|(m, v)| json!({"m": m, "f": v})).collect::<Vec<_>>(),
        }))?,
    }
    Ok(0)
}

struct Check {
    closed: Sigma,
    oracle: Sigma,
}

fn check_all(spec: &StructureSpec, isos: &[Isometry], threads: usize) -> Result<Vec<Check>, Fail> {
    let one = |iso: &Isometry| -> Result<Check, Error> {
        Ok(Check { closed: sigma_closed_form(iso, spec)?.sigma, oracle: sigma_oracle_value(iso, spec)? })
    };
    let threads = threads.max(1).min(isos.len().max(1));
    if threads == 1 {
        return Ok(isos.iter().map(one).collect::<Result<_, _>>()?);
    }
    let chunk = isos.len().div_ceil(threads);
    let parts: Vec<Result<Vec<Check>, Error>> = std::thread::scope(|s| {
        let hs: Vec<_> = isos.chunks(chunk).map(|c| s.spawn(move || c.iter().map(one).collect())).collect();
        hs.into_iter().map(|h| h.join().expect("worker panicked")).collect()
    });
    let mut out = Vec::with_capacity(isos.len());
    for p in parts {
        out.extend(p?);
    }
    Ok(out)
}

fn verify(a: VerifyArgs) -> Run {
    let spec = parse_spec(&a.structure)?;
    let page = enumerate_rotations(&spec, a.max, EnumOptions::default())?;
    let isos: Vec<Isometry> = page.items.iter().map(|r| r.isometry()).collect();
    let checks = check_all(&spec, &isos, a.threads)?;
    let mut first: Option<String> = None;
    for ((r, iso), c) in page.items.iter().zip(&isos).zip(&checks) {
        let e = Sigma::from(r.sigma);
        if c.closed != e || c.oracle != e {
            first = Some(format!("{iso}: enumerated {e}, closed form {}, oracle {}", c.closed, c.oracle));
            break;
        }
    }
    let f = spec.structure.counting();
    let k = f.rotation_multiplier();
    let hist = page.histogram();
    let mut rows = Vec::new();
    for m in 1..=a.max {
        let got = hist.get(&m).copied().unwrap_or(0);
        let want = match k {
            Some(k) => Some(k as i128 * f.value(m)?),
            None => None,
        };
        if want.is_some_and(|w| w != got as i128) && first.is_none() {
            first = Some(format!("index {m}: {got} rotations, expected {}", want.unwrap()));
        }
        if got > 0 || want.is_some_and(|w| w != 0) {
            rows.push((m, got, want));
        }
    }
    match a.format {
        Format::Csv => emit_csv(
            &["m", "rotations", "expected"],
            rows.iter().map(|(m, g, w)| vec![m.to_string(), g.to_string(), w.map(|w| w.to_string()).unwrap_or_default()]),
        )?,
        Format::Json => emit(&json!({
            "structure": spec.name(),
            "max": a.max,
            "rotations": page.total,
            "ok": first.is_none(),
            "mismatch": first,
            "rows": rows.iter().map(|(m, g, w)| json!({"m": m, "rotations": g, "expected": w})).collect::<Vec<_>>(),
        }))?,
    }
    if let Some(msg) = first {
        return Err(Fail { code: EXIT_FAIL, msg: format!("mismatch: {msg}") });
    }
    eprintln!("{}: {} rotations with index ≤ {} agree", spec.name(), page.total, a.max);
    Ok(0)
}

fn classify(a: ClassifyArgs) -> Run {
    let spec = parse_spec(&a.structure)?;
    let c = classify_csls(&spec, a.sigma)?;
    match a.format {
        Format::Json => emit(&serde_json::to_value(&c).expect("serializable"))?,
        Format::Csv => emit_csv(
            &["orbit", "size", "representative"],
            c.orbits.iter().enumerate().map(|(i, o)| vec![(i + 1).to_string(), o.size.to_string(), o.representative.to_string()]),
        )?,
    }
    Ok(0)
}

fn hierarchy(a: HierarchyArgs) -> Run {
    let rows = (1..=a.max).map(|m| Ok((m, hierarchy_counts(m)?))).collect::<Result<Vec<_>, Error>>()?;
    match a.format {
        Format::Csv => emit_csv(
            &["m", "sublattices", "square", "primitive_square", "csl"],
            rows.iter().map(|(m, h)| {
                vec![m.to_string(), h.all.to_string(), h.square.to_string(), h.primitive_square.to_string(), h.csl.to_string()]
            }),
        )?,
        Format::Json => emit(&Value::Array(
            rows.iter()
                .map(|(m, h)| {
                    json!({"m": m, "sublattices": h.all, "square": h.square,
                           "primitive_square": h.primitive_square, "csl": h.csl})
                })
                .collect(),
        ))?,
    }
    Ok(0)
}
