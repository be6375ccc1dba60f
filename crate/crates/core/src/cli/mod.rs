//! Command-line front end. [`run`] parses arguments, executes one command
//! and returns the exit code with everything destined for stdout/stderr, so
//! the whole interface can be driven in-process.
//!
//! Exit codes: 0 success or true, 1 predicate false or check failed,
//! 2 invalid input, 3 unsupported (dimension cap or unbounded operand).

pub mod document;

use std::ffi::OsString;
use std::io::Read;
use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand};
use serde_json::{json, Map, Value};
use sha2::{Digest, Sha256};

use crate::error::{Error, Result};
use crate::fuzzyset::{EnvelopeKind, PredicateKind, StepFuzzySet};
use crate::geometry::Region;
use crate::linalg::{Matrix, Vector};
use crate::oracle::{self, Axis, Grid, DEFAULT_MAX_GRID};
use crate::pairing::DualPair;
use crate::polar;
use crate::rational::{self, Rational};
use crate::topology::{self, FuzzyCollection, ScaleRange, WeakMode};
use document::{CollectionDocument, Document};

pub const EXIT_OK: i32 = 0;
pub const EXIT_FALSE: i32 = 1;
pub const EXIT_INVALID: i32 = 2;
pub const EXIT_UNSUPPORTED: i32 = 3;

/// Conventions every result depends on; reports carry its SHA-256.
pub const CONVENTIONS: &str = "\
level sets at grades <= 0 are the whole space
the polar of the empty set is the whole dual space
the polar of the whole space is the origin
the supremum of the empty set is 0
fuzzy polars take the supremum whether or not it is attained
the polar of the empty chain is the constant 1
weak-nbhd defaults to --mode definition
";

pub fn conventions_hash() -> String {
    hex::encode(Sha256::digest(CONVENTIONS.as_bytes()))
}

/// Environment variable overriding the oracle grid cap.
pub const MAX_GRID_VAR: &str = "FUZZYPOLAR_MAX_GRID";

#[derive(Parser, Debug)]
#[command(name = "fuzzypolar", version, about = "Exact calculus of step fuzzy sets, fuzzy polars and polar bases")]
pub struct Cli {
    #[command(subcommand)]
    command: Command,
    /// Write the result here instead of stdout
    #[arg(short = 'o', long, global = true)]
    output: Option<PathBuf>,
    /// Machine-readable JSON reports
    #[arg(long, global = true)]
    json: bool,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Fuzzy polar of a set
    Polar { input: PathBuf },
    /// Second polar of a set
    Bipolar { input: PathBuf },
    /// Fuzzy sum of two sets
    Add { a: PathBuf, b: PathBuf },
    /// Scalar multiple of a set
    Scale {
        input: PathBuf,
        #[arg(long, allow_hyphen_values = true)]
        by: String,
    },
    /// Pointwise maximum
    Sup { a: PathBuf, b: PathBuf },
    /// Pointwise minimum
    Inf { a: PathBuf, b: PathBuf },
    /// Level set at a grade
    Level {
        input: PathBuf,
        #[arg(long, allow_hyphen_values = true)]
        theta: String,
    },
    /// Test a predicate
    Check {
        input: PathBuf,
        /// balanced, convex, absolutely_convex, absorbing, seminorm, weakly_bounded or closed
        #[arg(long)]
        predicate: String,
    },
    /// Convex, absolutely convex or closed envelope
    Envelope {
        input: PathBuf,
        #[arg(long, default_value = "absolutely_convex")]
        kind: String,
    },
    /// Image under a linear map given as rows, e.g. "1,0;0,2"
    Pushforward {
        input: PathBuf,
        #[arg(long, allow_hyphen_values = true)]
        matrix: String,
    },
    /// Largest scale t with θ ∧ (t·ETA) <= MU for all θ < MU(0)
    Absorbs { mu: PathBuf, eta: PathBuf },
    /// Check conditions (c1)-(c3) on a collection
    BaseValidate {
        collection: PathBuf,
        /// Spanning vectors, e.g. "1,0;0,1" (default: unit vectors)
        #[arg(long, allow_hyphen_values = true)]
        basis: Option<String>,
        /// scaled_generators or finite_point_sets (overrides the document)
        #[arg(long)]
        kind: Option<String>,
        #[arg(long, allow_hyphen_values = true)]
        scale_range: Option<String>,
    },
    /// Polars of the generators of a collection
    BasePolar { collection: PathBuf },
    /// Neighborhood of zero in the dual generated by a finite point set
    WeakNbhd {
        /// Points, e.g. "1,0;0,1"
        #[arg(long, allow_hyphen_values = true)]
        points: String,
        #[arg(long)]
        lambda: String,
        /// definition or paper_literal
        #[arg(long, default_value = "definition")]
        mode: String,
    },
    /// First base member whose polar is positive at a functional
    DualWitness {
        base: PathBuf,
        #[arg(long, allow_hyphen_values = true)]
        functional: String,
    },
    /// Whether BASE1 refines BASE2
    Refines {
        base1: PathBuf,
        base2: PathBuf,
        #[arg(long, allow_hyphen_values = true)]
        scale_range: Option<String>,
    },
    /// Bipolar, compactness and dual-witness checklist for a base
    MackeyArens {
        base: PathBuf,
        #[arg(long)]
        functionals: Option<PathBuf>,
    },
    /// Brute-force membership, polar or sum table on a grid
    Oracle {
        input: PathBuf,
        /// membership, polar or add
        #[arg(long, default_value = "membership")]
        op: String,
        /// Second operand for --op add
        #[arg(long)]
        other: Option<PathBuf>,
        /// lo:hi:step, once per axis or comma-separated; a single axis is reused
        #[arg(long, allow_hyphen_values = true, required = true)]
        grid: Vec<String>,
        /// Comma-separated θ values for --op polar (default: grades, complements and midpoints)
        #[arg(long)]
        theta: Option<String>,
    },
    /// Compare an exact set with an oracle table
    Compare { exact: PathBuf, table: PathBuf },
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

struct Ctx {
    output: Option<PathBuf>,
    json: bool,
    max_grid: usize,
    stdout: String,
    stderr: String,
}

fn exit_code(e: &Error) -> i32 {
    if e.is_unsupported() {
        EXIT_UNSUPPORTED
    } else {
        EXIT_INVALID
    }
}

/// Reads the grid cap from the environment.
pub fn max_grid_from_env() -> Result<usize> {
    match std::env::var(MAX_GRID_VAR) {
        Ok(v) => v
            .parse()
            .map_err(|_| Error::Parse(format!("{MAX_GRID_VAR}: expected a positive integer, got {v:?}"))),
        Err(_) => Ok(DEFAULT_MAX_GRID),
    }
}

/// Parses `args` (including the program name) and runs the command.
pub fn run<I, T>(args: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_INVALID } else { EXIT_OK };
            let text = e.render().to_string();
            let (stdout, stderr) = if e.use_stderr() { (String::new(), text) } else { (text, String::new()) };
            return Outcome { code, stdout, stderr };
        }
    };
    match max_grid_from_env() {
        Ok(cap) => dispatch(cli, cap),
        Err(e) => Outcome {
            code: exit_code(&e),
            stdout: String::new(),
            stderr: format!("error: {e}\n"),
        },
    }
}

/// Runs a parsed command with the given grid cap.
pub fn dispatch(cli: Cli, max_grid: usize) -> Outcome {
    let mut ctx = Ctx {
        output: cli.output,
        json: cli.json,
        max_grid,
        stdout: String::new(),
        stderr: String::new(),
    };
    let code = match execute(&mut ctx, cli.command) {
        Ok(code) => code,
        Err(e) => {
            ctx.stderr.push_str(&format!("error: {e}\n"));
            exit_code(&e)
        }
    };
    Outcome {
        code,
        stdout: ctx.stdout,
        stderr: ctx.stderr,
    }
}

impl Ctx {
    fn emit(&mut self, text: &str) -> Result<()> {
        match &self.output {
            Some(p) => std::fs::write(p, text).map_err(|e| Error::Parse(format!("{}: {e}", p.display()))),
            None => {
                self.stdout.push_str(text);
                Ok(())
            }
        }
    }

    /// Writes a report in the requested style.
    fn report(&mut self, command: &str, body: Map<String, Value>, human: String) -> Result<()> {
        if self.json {
            let mut doc = Map::new();
            doc.insert("tool".into(), json!("fuzzypolar"));
            doc.insert("version".into(), json!(env!("CARGO_PKG_VERSION")));
            doc.insert("conventions".into(), json!(conventions_hash()));
            doc.insert("command".into(), json!(command));
            doc.extend(body);
            let mut s = serde_json::to_string(&Value::Object(doc)).expect("reports serialize");
            s.push('\n');
            self.emit(&s)
        } else {
            self.emit(&human)
        }
    }
}

fn read_text(path: &Path) -> Result<String> {
    let mut s = String::new();
    let r = if path == Path::new("-") {
        std::io::stdin().read_to_string(&mut s).map(|_| ())
    } else {
        std::fs::read_to_string(path).map(|t| s = t)
    };
    r.map_err(|e| Error::Parse(format!("{}: {e}", path.display())))?;
    Ok(s)
}

fn with_path<T>(path: &Path, r: Result<T>) -> Result<T> {
    r.map_err(|e| match e {
        Error::Parse(m) => Error::Parse(format!("{}: {m}", path.display())),
        other => other,
    })
}

fn read_doc(path: &Path) -> Result<Document> {
    with_path(path, document::parse_document(&read_text(path)?))
}

fn read_collection(path: &Path) -> Result<CollectionDocument> {
    with_path(path, document::parse_collection(&read_text(path)?))
}

fn parse_q(s: &str, what: &str) -> Result<Rational> {
    rational::parse(s.trim()).map_err(|e| Error::Parse(format!("{what}: {e}")))
}

fn parse_vector_flag(s: &str, what: &str) -> Result<Vector> {
    s.split(',').map(|x| parse_q(x, what)).collect::<Result<Vec<_>>>().map(Vector)
}

fn parse_vectors_flag(s: &str, what: &str) -> Result<Vec<Vector>> {
    let vs: Vec<Vector> = s.split(';').map(|r| parse_vector_flag(r, what)).collect::<Result<_>>()?;
    if vs.windows(2).any(|w| w[0].dim() != w[1].dim()) {
        return Err(Error::Parse(format!("{what}: rows have different lengths")));
    }
    Ok(vs)
}

fn parse_scale_range(s: Option<&str>) -> Result<ScaleRange> {
    let Some(s) = s else {
        return Ok(ScaleRange::default());
    };
    let bad = || Error::Parse(format!("--scale-range: expected exp_lo:exp_hi, got {s:?}"));
    let (lo, hi) = s.split_once(':').ok_or_else(bad)?;
    let lo: i32 = lo.trim().parse().map_err(|_| bad())?;
    let hi: i32 = hi.trim().parse().map_err(|_| bad())?;
    if lo < -64 || hi > 64 {
        return Err(Error::Parse("--scale-range: exponents must lie in [-64, 64]".into()));
    }
    ScaleRange::new(lo, hi).map_err(|_| bad())
}

fn same_pair(a: &Document, b: &Document) -> Result<DualPair> {
    if a.set.dim() != b.set.dim() {
        return Err(Error::DimensionMismatch {
            expected: a.set.dim(),
            found: b.set.dim(),
        });
    }
    if a.pairing.is_some() && b.pairing.is_some() && a.pairing != b.pairing {
        return Err(Error::Parse("operands declare different pairings".into()));
    }
    Ok(a.pair())
}

fn q(x: &Rational) -> Value {
    json!(rational::format(x))
}

fn qv(v: &Vector) -> Value {
    Value::Array(v.iter().map(q).collect())
}

fn b(flag: bool) -> i32 {
    if flag {
        EXIT_OK
    } else {
        EXIT_FALSE
    }
}

fn execute(ctx: &mut Ctx, cmd: Command) -> Result<i32> {
    match cmd {
        Command::Polar { input } => {
            let d = read_doc(&input)?;
            let p = polar::fuzzy_polar(&d.set, &d.pair())?;
            let pairing = d.pairing.as_ref().map(DualPair::transposed);
            ctx.emit(&document::write_document(&p, pairing.as_ref()))?;
            Ok(EXIT_OK)
        }
        Command::Bipolar { input } => {
            let d = read_doc(&input)?;
            let bb = polar::bipolar(&d.set, &d.pair())?;
            ctx.emit(&document::write_document(&bb, d.pairing.as_ref()))?;
            Ok(EXIT_OK)
        }
        Command::Add { a, b: bp } => binary(ctx, &a, &bp, StepFuzzySet::add),
        Command::Sup { a, b: bp } => binary(ctx, &a, &bp, StepFuzzySet::sup),
        Command::Inf { a, b: bp } => binary(ctx, &a, &bp, StepFuzzySet::inf),
        Command::Scale { input, by } => {
            let d = read_doc(&input)?;
            let t = parse_q(&by, "--by")?;
            ctx.emit(&document::write_document(&d.set.scalar_mul(&t)?, d.pairing.as_ref()))?;
            Ok(EXIT_OK)
        }
        Command::Level { input, theta } => {
            let d = read_doc(&input)?;
            let t = parse_q(&theta, "--theta")?;
            let r = d.set.level_set(&t);
            let mut body = Map::new();
            body.insert("dimension".into(), json!(d.set.dim()));
            body.insert("theta".into(), q(&t));
            body.insert("region".into(), serde_json::to_value(document::write_region(&r)).expect("regions serialize"));
            let mut s = serde_json::to_string(&Value::Object(body)).expect("regions serialize");
            s.push('\n');
            ctx.emit(&s)?;
            Ok(EXIT_OK)
        }
        Command::Check { input, predicate } => {
            let kind = PredicateKind::from_name(&predicate)
                .ok_or_else(|| Error::Parse(format!("--predicate: unknown predicate {predicate:?}")))?;
            let d = read_doc(&input)?;
            let value = d.set.predicate(kind)?;
            let mut body = Map::new();
            body.insert("predicate".into(), json!(kind.name()));
            body.insert("value".into(), json!(value));
            ctx.report("check", body, format!("{}: {value}\n", kind.name()))?;
            Ok(b(value))
        }
        Command::Envelope { input, kind } => {
            let k = EnvelopeKind::from_name(&kind)
                .ok_or_else(|| Error::Parse(format!("--kind: unknown envelope {kind:?}")))?;
            let d = read_doc(&input)?;
            ctx.emit(&document::write_document(&d.set.envelope(k)?, d.pairing.as_ref()))?;
            Ok(EXIT_OK)
        }
        Command::Pushforward { input, matrix } => {
            let d = read_doc(&input)?;
            let rows = parse_vectors_flag(&matrix, "--matrix")?;
            let ncols = rows[0].dim();
            let m = Matrix::new(rows.into_iter().map(|r| r.0).collect(), ncols);
            ctx.emit(&document::write_document(&d.set.pushforward(&m)?, None))?;
            Ok(EXIT_OK)
        }
        Command::Absorbs { mu, eta } => {
            let (dm, de) = (read_doc(&mu)?, read_doc(&eta)?);
            let t = topology::absorbs(&dm.set, &de.set)?;
            let mut body = Map::new();
            body.insert("witness".into(), t.as_ref().map_or(Value::Null, q));
            let human = match &t {
                Some(t) => format!("absorbs: t = {}\n", rational::format(t)),
                None => "absorbs: no positive scale\n".to_string(),
            };
            ctx.report("absorbs", body, human)?;
            Ok(b(t.is_some()))
        }
        Command::BaseValidate {
            collection,
            basis,
            kind,
            scale_range,
        } => {
            let c = read_collection(&collection)?;
            let kind = kind.as_deref().map_or(Ok(c.kind), document::parse_kind)?;
            let basis = match basis {
                Some(s) => parse_vectors_flag(&s, "--basis")?,
                None => (0..c.dim).map(|i| Vector::unit(c.dim, i)).collect(),
            };
            let range = parse_scale_range(scale_range.as_deref())?;
            let coll = FuzzyCollection::new(c.pair(), c.sets.clone(), kind)?.with_scale_range(range);
            let r = topology::validate_collection(&coll, &basis)?;
            base_report(ctx, &r)?;
            Ok(b(r.overall))
        }
        Command::BasePolar { collection } => {
            let c = read_collection(&collection)?;
            let coll = FuzzyCollection::new(c.pair(), c.sets.clone(), c.kind)?;
            let out = CollectionDocument {
                dim: c.dim,
                kind: topology::FamilyKind::ScaledGenerators,
                sets: topology::polar_base(&coll)?,
                pairing: c.pairing.as_ref().map(DualPair::transposed),
            };
            ctx.emit(&document::write_collection(&out))?;
            Ok(EXIT_OK)
        }
        Command::WeakNbhd { points, lambda, mode } => {
            let mode =
                WeakMode::from_name(&mode).ok_or_else(|| Error::Parse(format!("--mode: unknown mode {mode:?}")))?;
            let pts = parse_vectors_flag(&points, "--points")?;
            let lambda = parse_q(&lambda, "--lambda")?;
            let pair = DualPair::standard(pts[0].dim());
            let w = topology::weak_neighborhood(&pts, &lambda, &pair, mode)?;
            let other_mode = match mode {
                WeakMode::Definition => WeakMode::PaperLiteral,
                WeakMode::PaperLiteral => WeakMode::Definition,
            };
            let other = topology::weak_neighborhood(&pts, &lambda, &pair, other_mode)?;
            if !w.same_function(&other)? {
                ctx.stderr.push_str(&format!(
                    "notice: --mode {} gives a different fuzzy set for these inputs\n",
                    other_mode.name()
                ));
            }
            ctx.emit(&document::write_document(&w, None))?;
            Ok(EXIT_OK)
        }
        Command::DualWitness { base, functional } => {
            let c = read_collection(&base)?;
            let x = parse_vector_flag(&functional, "--functional")?;
            let w = topology::dual_witness(&c.sets, &x, &c.pair())?;
            let mut body = Map::new();
            body.insert("functional".into(), qv(&x));
            body.insert("witness".into(), witness_json(w.as_ref()));
            let human = match &w {
                Some((i, g)) => format!("witness: set {i} at grade {}\n", rational::format(g)),
                None => "witness: none\n".to_string(),
            };
            ctx.report("dual-witness", body, human)?;
            Ok(b(w.is_some()))
        }
        Command::Refines { base1, base2, scale_range } => {
            let (c1, c2) = (read_collection(&base1)?, read_collection(&base2)?);
            if c1.dim != c2.dim {
                return Err(Error::DimensionMismatch {
                    expected: c1.dim,
                    found: c2.dim,
                });
            }
            let value = topology::refines(&c1.sets, &c2.sets, parse_scale_range(scale_range.as_deref())?)?;
            let mut body = Map::new();
            body.insert("refines".into(), json!(value));
            ctx.report("refines", body, format!("refines: {value}\n"))?;
            Ok(b(value))
        }
        Command::MackeyArens { base, functionals } => {
            let c = read_collection(&base)?;
            let (fs, flags) = match functionals {
                Some(p) => with_path(&p, document::parse_functionals(&read_text(&p)?, c.dim))?,
                None => (Vec::new(), None),
            };
            let r = topology::verify_mackey_arens(&c.sets, &fs, flags.as_deref(), &c.pair())?;
            mackey_report(ctx, &r)?;
            Ok(b(r.overall))
        }
        Command::Oracle {
            input,
            op,
            other,
            grid,
            theta,
        } => {
            let d = read_doc(&input)?;
            let grid = build_grid(&grid, d.set.dim(), ctx.max_grid)?;
            let table = match op.as_str() {
                "membership" => oracle::oracle_membership(&d.set, &grid)?,
                "polar" => {
                    let thetas = match theta {
                        Some(s) => s.split(',').map(|x| parse_q(x, "--theta")).collect::<Result<_>>()?,
                        None => oracle::theta_lattice(&d.set),
                    };
                    oracle::oracle_polar(&d.set, &grid, &thetas, &d.pair())?
                }
                "add" => {
                    let p = other.ok_or_else(|| Error::Parse("--op add needs --other".into()))?;
                    let e = read_doc(&p)?;
                    same_pair(&d, &e)?;
                    oracle::oracle_add(&d.set, &e.set, &grid)?
                }
                _ => return Err(Error::Parse(format!("--op: unknown operation {op:?}"))),
            };
            ctx.emit(&document::write_table(&table))?;
            Ok(EXIT_OK)
        }
        Command::Compare { exact, table } => {
            let d = read_doc(&exact)?;
            let t = with_path(&table, document::parse_table(&read_text(&table)?))?;
            let r = oracle::compare(&d.set, &t)?;
            let mut body = Map::new();
            body.insert("checked".into(), json!(r.checked));
            body.insert(
                "differences".into(),
                Value::Array(
                    r.differences
                        .iter()
                        .map(|x| json!({"point": qv(&x.point), "exact": q(&x.exact), "table": q(&x.table)}))
                        .collect(),
                ),
            );
            body.insert("pass".into(), json!(r.passes()));
            let mut human = format!("checked {} points, {} differences\n", r.checked, r.differences.len());
            for x in &r.differences {
                human.push_str(&format!(
                    "  {}: exact {} table {}\n",
                    x.point,
                    rational::format(&x.exact),
                    rational::format(&x.table)
                ));
            }
            ctx.report("compare", body, human)?;
            Ok(b(r.passes()))
        }
    }
}

fn binary(
    ctx: &mut Ctx,
    a: &Path,
    bp: &Path,
    op: fn(&StepFuzzySet, &StepFuzzySet) -> Result<StepFuzzySet>,
) -> Result<i32> {
    let (da, db) = (read_doc(a)?, read_doc(bp)?);
    same_pair(&da, &db)?;
    let pairing = da.pairing.clone().or(db.pairing.clone());
    ctx.emit(&document::write_document(&op(&da.set, &db.set)?, pairing.as_ref()))?;
    Ok(EXIT_OK)
}

fn build_grid(specs: &[String], dim: usize, cap: usize) -> Result<Grid> {
    let axes: Vec<Axis> = specs
        .iter()
        .flat_map(|s| s.split(','))
        .map(|s| Axis::parse(s.trim()))
        .collect::<Result<_>>()?;
    match axes.len() {
        1 => Grid::cube(dim, axes[0].clone(), cap),
        n if n == dim => Grid::new(axes, cap),
        n => Err(Error::InvalidGrid(format!("{n} axes for dimension {dim}"))),
    }
}

fn witness_json(w: Option<&(usize, Rational)>) -> Value {
    w.map_or(Value::Null, |(i, g)| json!({"index": i, "grade": q(g)}))
}

fn base_report(ctx: &mut Ctx, r: &topology::BaseReport) -> Result<()> {
    let mut human = String::new();
    let c1: Vec<Value> = r
        .c1
        .iter()
        .map(|rec| {
            let (w, text) = match &rec.witness {
                Some(topology::C1Witness::Scaled { index, scale }) => (
                    json!({"scaled": {"index": index, "scale": q(scale)}}),
                    format!("{} * set {index}", rational::format(scale)),
                ),
                Some(topology::C1Witness::PointUnion(s)) => {
                    let (pts, grade) = match s.levels() {
                        [l] => match &l.region {
                            Region::Points(ps) => (ps.clone(), l.grade.clone()),
                            _ => unreachable!("point unions have one Points level"),
                        },
                        _ => unreachable!("point unions have one Points level"),
                    };
                    let text = format!(
                        "{{{}}} at grade {}",
                        pts.iter().map(ToString::to_string).collect::<Vec<_>>().join(", "),
                        rational::format(&grade)
                    );
                    (
                        json!({"point_union": {"points": pts.iter().map(qv).collect::<Vec<_>>(), "grade": q(&grade)}}),
                        text,
                    )
                }
                None => (Value::Null, "none".to_string()),
            };
            human.push_str(&format!(
                "c1 ({}, {}): {text}{}\n",
                rec.pair.0,
                rec.pair.1,
                if rec.witness.is_some() && !rec.strict { " (not strict)" } else { "" }
            ));
            json!({"pair": [rec.pair.0, rec.pair.1], "witness": w, "strict": rec.strict})
        })
        .collect();
    human.push_str(&format!("c2: {}\n", r.c2));
    let c3: Vec<Value> = r
        .c3
        .iter()
        .map(|rec| {
            let w = rec.witness.as_ref().map_or(Value::Null, |(i, t, g)| {
                json!({"index": i, "scale": q(t), "grade": q(g)})
            });
            let text = match &rec.witness {
                Some((i, t, g)) => format!(
                    "{} * set {i} at grade {}",
                    rational::format(t),
                    rational::format(g)
                ),
                None => "none".to_string(),
            };
            human.push_str(&format!("c3 {}: {text}\n", rec.vector));
            json!({"vector": qv(&rec.vector), "witness": w})
        })
        .collect();
    if r.strictness_warning() {
        human.push_str("warning: some pairs are dominated only non-strictly\n");
    }
    human.push_str(&format!("overall: {}\n", r.overall));
    let mut body = Map::new();
    body.insert("c1".into(), Value::Array(c1));
    body.insert("c2".into(), json!(r.c2));
    body.insert("c3".into(), Value::Array(c3));
    body.insert("strictness_warning".into(), json!(r.strictness_warning()));
    body.insert("overall".into(), json!(r.overall));
    ctx.report("base-validate", body, human)
}

fn mackey_report(ctx: &mut Ctx, r: &topology::MackeyReport) -> Result<()> {
    let mut human = String::new();
    let ns: Vec<Value> = r
        .neighborhoods
        .iter()
        .enumerate()
        .map(|(i, n)| {
            human.push_str(&format!(
                "neighborhood {i}: closed_ac={} bipolar_equal={} polar_weakly_compact={}{}\n",
                n.is_closed_ac,
                n.bipolar_equal,
                n.polar_weakly_compact,
                n.error.as_ref().map_or(String::new(), |e| format!(" error: {e}"))
            ));
            json!({
                "is_closed_ac": n.is_closed_ac,
                "bipolar_equal": n.bipolar_equal,
                "polar_weakly_compact": n.polar_weakly_compact,
                "error": n.error,
            })
        })
        .collect();
    let fs: Vec<Value> = r
        .functionals
        .iter()
        .map(|f| {
            let w = match &f.witness {
                Some((i, g)) => format!("set {i} at grade {}", rational::format(g)),
                None => "none".into(),
            };
            human.push_str(&format!(
                "functional {}: witness {w} (declared {})\n",
                f.functional,
                if f.declared_continuous { "continuous" } else { "discontinuous" }
            ));
            json!({
                "functional": qv(&f.functional),
                "declared_continuous": f.declared_continuous,
                "witness": witness_json(f.witness.as_ref()),
                "error": f.error,
            })
        })
        .collect();
    human.push_str(&format!("overall: {}\n", r.overall));
    let mut body = Map::new();
    body.insert("neighborhoods".into(), Value::Array(ns));
    body.insert("functionals".into(), Value::Array(fs));
    body.insert("overall".into(), json!(r.overall));
    ctx.report("mackey-arens", body, human)
}
