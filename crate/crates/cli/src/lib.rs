//! Command-line front end: argument parsing, dispatch to the library and
//! JSON or text reports.

pub mod args;
pub mod report;

use std::ffi::OsString;
use std::fs;
use std::path::Path;
use std::time::Instant;

use clap::Parser;
use edvar::class::{self, CMData, CMTable};
use edvar::closed::{self, ConicSpec, MatrixPoint, VeroneseQuadric};
use edvar::ed::{self, DataPoint, Transform, VarietySpec};
use edvar::text::{parse_point, parse_variety, print_variety};
use edvar::ideal::with_pair_budget;
use edvar::{Error, QuotientDim, Rational};
use serde_json::{json, Value};
use sha2::{Digest, Sha256};

use crate::args::{CmArg, Cli, Command, Format, Input, Other, PointArg, QuadricArg};

pub const EXIT_OK: i32 = 0;
pub const EXIT_VALIDATION: i32 = 2;
pub const EXIT_BUDGET: i32 = 3;
pub const EXIT_PARSE: i32 = 4;

/// Result of one invocation.
#[derive(Debug, Clone)]
pub struct Outcome {
    pub code: i32,
    /// `None` when clap handled the invocation (help, usage errors)
    pub report: Option<Value>,
    pub output: String,
}

#[derive(Debug)]
enum Failure {
    Core(Error),
    Usage(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Core(e)
    }
}

impl Failure {
    fn code(&self) -> i32 {
        match self {
            Failure::Core(Error::Parse { .. }) => EXIT_PARSE,
            Failure::Core(Error::Budget { .. } | Error::Limit(_)) => EXIT_BUDGET,
            _ => EXIT_VALIDATION,
        }
    }

    fn to_json(&self) -> Value {
        match self {
            Failure::Core(e @ Error::Parse { line, column, .. }) => {
                json!({ "kind": "parse", "message": e.to_string(), "line": line, "column": column })
            }
            Failure::Core(e @ Error::Budget { pairs }) => {
                json!({ "kind": "budget", "message": e.to_string(), "pairs_processed": pairs })
            }
            Failure::Core(e @ Error::Limit(_)) => json!({ "kind": "budget", "message": e.to_string() }),
            Failure::Core(e) => json!({ "kind": "validation", "message": e.to_string() }),
            Failure::Usage(m) => json!({ "kind": "validation", "message": m }),
        }
    }
}

type Res<T> = std::result::Result<T, Failure>;

/// Per-run state: the warnings collected so far and the bytes hashed into
/// `input_hash`.
struct Ctx {
    warnings: Vec<String>,
    hasher: Sha256,
    seed: u64,
}

impl Ctx {
    fn read(&mut self, path: &Path) -> Res<String> {
        let text = fs::read_to_string(path).map_err(|e| Failure::Usage(format!("{}: {e}", path.display())))?;
        self.hasher.update(text.as_bytes());
        self.hasher.update([0]);
        Ok(text)
    }

    fn variety(&mut self, input: &Input) -> Res<VarietySpec> {
        let text = match (&input.input, &input.inline) {
            (Some(p), _) => self.read(p)?,
            (None, Some(t)) => t.clone(),
            (None, None) => return Err(Failure::Usage("give --input or --inline".into())),
        };
        let parsed = parse_variety(&text)?;
        self.warnings.extend(parsed.warnings);
        Ok(parsed.spec)
    }

    fn other(&mut self, other: &Other) -> Res<Option<VarietySpec>> {
        if other.other_input.is_none() && other.other_inline.is_none() {
            return Ok(None);
        }
        let input = Input { input: other.other_input.clone(), inline: other.other_inline.clone() };
        self.variety(&input).map(Some)
    }
}

fn point(arg: &PointArg, default_symbolic: bool) -> Res<DataPoint> {
    match arg.point.as_deref().map(str::trim) {
        Some("symbolic") => Ok(DataPoint::Symbolic),
        Some(text) => Ok(DataPoint::Numeric(parse_point(text)?)),
        None if default_symbolic => Ok(DataPoint::Symbolic),
        None => Err(Failure::Usage("give --point (comma-separated rationals or `symbolic`)".into())),
    }
}

fn rationals(text: &str) -> Res<Vec<Rational>> {
    Ok(parse_point(text)?)
}

fn matrix(text: &str) -> Res<Vec<Vec<Rational>>> {
    text.split(';').map(rationals).collect()
}

fn cm_data(arg: &CmArg, table: &CMTable) -> Res<CMData> {
    match (&arg.cm, &arg.entry) {
        (Some(s), _) => Ok(s.parse()?),
        (None, Some(name)) => {
            table.get(name).cloned().ok_or_else(|| Failure::Usage(format!("no table entry `{name}`")))
        }
        (None, None) => Err(Failure::Usage("give --cm or --entry".into())),
    }
}

fn spec_json(spec: &VarietySpec) -> Value {
    json!({
        "text": print_variety(spec),
        "gens": spec.gens().iter().map(report::poly).collect::<Vec<_>>(),
        "codim": spec.codim(),
        "homogeneous": spec.is_homogeneous(),
    })
}

fn edpoly_job(ctx: &mut Ctx, spec: &VarietySpec, u: &DataPoint) -> Res<Value> {
    let r = ed::ed_polynomial(spec, u)?;
    ctx.warnings.extend(r.warnings.iter().cloned());
    if !r.edpoly.is_monic() {
        ctx.warnings.push("ED polynomial is not monic: the variety is not transversal to the isotropic quadric".into());
    }
    let mut v = report::edpoly(&r.edpoly);
    v["principal"] = json!(r.principal);
    v["leading"] = report::poly(&ed::leading_term(&r.edpoly));
    v["lowest"] = report::poly(&ed::lowest_term(&r.edpoly));
    if spec.is_homogeneous() && u.is_symbolic() {
        let viol: Vec<Value> = ed::grading_violations(&r.edpoly)
            .iter()
            .map(|g| json!({ "power": g.power, "expected": g.expected, "found": g.found }))
            .collect();
        if !viol.is_empty() {
            ctx.warnings.push("coefficients violate the homogeneity grading (non-transversal input)".into());
        }
        v["grading_violations"] = Value::Array(viol);
    }
    Ok(v)
}

fn execute(ctx: &mut Ctx, cmd: &Command) -> Res<Value> {
    match cmd {
        Command::Edpoly(a) => {
            let spec = ctx.variety(&a.input)?;
            let u = point(&a.point, false)?;
            edpoly_job(ctx, &spec, &u)
        }
        Command::Eddegree { input, no_cross_check } => {
            let spec = ctx.variety(input)?;
            let r = ed::ed_degree(&spec, ctx.seed, !no_cross_check)?;
            if !r.agree {
                ctx.warnings.push("the samples disagree on the degree".into());
            }
            let samples: Vec<Value> = r
                .samples
                .iter()
                .map(|s| {
                    json!({
                        "point": report::rationals(&s.point),
                        "degree": s.degree,
                        "quotient_dim": s.quotient_dim.map(|q| match q {
                            QuotientDim::Finite(k) => json!(k),
                            QuotientDim::Infinite => json!("infinite"),
                        }),
                        "error": s.error,
                    })
                })
                .collect();
            Ok(json!({ "eddegree": r.degree, "agree": r.agree, "samples": samples }))
        }
        Command::Dual(input) => {
            let spec = ctx.variety(input)?;
            Ok(spec_json(&ed::dual_variety(&spec)?))
        }
        Command::DualityCheck { spec, dual } => {
            let x = ctx.variety(&spec.input)?;
            let u = point(&spec.point, false)?;
            let xd = match ctx.other(dual)? {
                Some(d) => d,
                None => ed::dual_variety(&x)?,
            };
            let mut v = report::comparison(&ed::duality_reflection_check(&x, &xd, &u)?);
            v["dual"] = spec_json(&xd);
            Ok(v)
        }
        Command::Discriminant(a) => {
            let spec = ctx.variety(&a.input)?;
            let u = point(&a.point, true)?;
            let r = ed::ed_polynomial(&spec, &u)?;
            ctx.warnings.extend(r.warnings);
            let d = ed::ed_poly_discriminant(&r.edpoly)?;
            Ok(json!({
                "edpoly": report::edpoly(&r.edpoly),
                "discriminant": report::poly(&d),
                "total_degree": d.total_degree(),
            }))
        }
        Command::LowestTerm(input) => {
            let spec = ctx.variety(input)?;
            let r = ed::ed_polynomial(&spec, &DataPoint::Symbolic)?;
            ctx.warnings.extend(r.warnings);
            let f = ed::lowest_term_factor_check(&spec, &r.edpoly)?;
            if !f.f_sq_divides && spec.codim() == 1 {
                ctx.warnings.push("f² does not divide the lowest term (non-transversal input)".into());
            }
            Ok(json!({
                "edpoly": report::edpoly(&r.edpoly),
                "f_sq_divides": f.f_sq_divides,
                "g": report::poly(&f.g),
                "deg_p0": f.deg_p0,
                "deg_f": f.deg_f,
                "deg_g": f.deg_g,
                "ed_degree": f.ed_degree,
                "degree_identity": f.degree_identity,
                "vanishes_on_x": f.vanishes_on_x,
            }))
        }
        Command::UnionCheck { spec, other } => {
            let x1 = ctx.variety(&spec.input)?;
            let u = point(&spec.point, false)?;
            let x2 = ctx.other(other)?.ok_or_else(|| Failure::Usage("give --other-input or --other-inline".into()))?;
            let r = ed::union_check(&x1, &x2, &u)?;
            Ok(json!({
                "holds": r.holds,
                "union": report::edpoly(&r.union),
                "product": report::edpoly(&r.product),
                "union_spec": spec_json(&r.union_spec),
            }))
        }
        Command::InvarianceCheck { spec, orthogonal, scale, translate } => {
            let x = ctx.variety(&spec.input)?;
            let u = point(&spec.point, false)?;
            let t = match (orthogonal, scale, translate) {
                (Some(g), _, _) => Transform::Orthogonal(matrix(g)?),
                (_, Some(c), _) => {
                    let c = rationals(c)?;
                    if c.len() != 1 {
                        return Err(Failure::Usage("--scale takes one rational".into()));
                    }
                    Transform::Scaling(c[0].clone())
                }
                (_, _, Some(v)) => Transform::Translation(rationals(v)?),
                _ => return Err(Failure::Usage("give --orthogonal, --scale or --translate".into())),
            };
            Ok(report::comparison(&ed::invariance_suite(&x, &t, &u)?))
        }
        Command::ClosureCheck(input) => {
            let spec = ctx.variety(input)?;
            let r = ed::projective_closure_check(&spec, ctx.seed)?;
            if r.skipped {
                ctx.warnings.push("ED degrees of X and its closure differ; check skipped".into());
            }
            Ok(json!({
                "ed_degree": r.ed_degree,
                "closure_ed_degree": r.closure_ed_degree,
                "skipped": r.skipped,
                "holds": r.holds,
                "lhs": r.lhs.as_ref().map(report::edpoly),
                "rhs": r.rhs.as_ref().map(report::edpoly),
                "closure": spec_json(&r.closure),
            }))
        }
        Command::Affine { base, dirs, point: p } => {
            let base = rationals(base)?;
            let dirs: Vec<Vec<Rational>> = dirs.iter().map(|d| rationals(d)).collect::<Res<_>>()?;
            let u = point(p, false)?;
            Ok(report::edpoly(&closed::affine_subspace_edpoly(&base, &dirs, &u, None)?))
        }
        Command::Conic { conic, point: p } => {
            let c = if conic.trim() == "general" {
                ConicSpec::general()
            } else {
                let cs = rationals(conic)?;
                let arr: [Rational; 6] =
                    cs.try_into().map_err(|_| Failure::Usage("--conic takes six coefficients a,b,c,d,e,f".into()))?;
                ConicSpec::from_rationals(arr)
            };
            let u = point(p, false)?;
            Ok(report::edpoly(&closed::conic_edpoly_salmon(&c, &u)?))
        }
        Command::Rank { matrix: m, rank } => {
            let u = MatrixPoint::from_rows(&matrix(&m.matrix)?)?;
            Ok(report::edpoly(&closed::rank_variety_edpoly(&u, *rank)?))
        }
        Command::Symmetric(m) => Ok(report::edpoly(&closed::symmetric_matrix_edpoly(&matrix(&m.matrix)?)?)),
        Command::Hypersurface { n, d } => Ok(json!({ "eddegree": closed::generic_hypersurface_ed_degree(*n, *d)? })),
        Command::Singular { generic, e } => {
            Ok(json!({ "eddegree": closed::singular_hypersurface_ed_degree(*generic, e)? }))
        }
        Command::PlaneCurve { d, nodes, cusps } => {
            Ok(json!({ "eddegree": closed::plane_curve_ed_degree(*d, *nodes, *cusps)? }))
        }
        Command::Veronese { n, d, quadric } => {
            let q = match quadric {
                QuadricArg::Generic => VeroneseQuadric::Generic,
                QuadricArg::Frobenius => VeroneseQuadric::Frobenius,
            };
            Ok(json!({ "eddegree": closed::veronese_ed_degree(*n, *d, q)? }))
        }
        Command::Essential(m) => {
            let u = MatrixPoint::from_rows(&matrix(&m.matrix)?)?;
            let r = closed::essential_lowest_terms(&u)?;
            if !r.float_check || !r.dual_float_check {
                ctx.warnings.push("floating-point cross-check disagrees with the exact value".into());
            }
            Ok(json!({
                "a": report::rationals(&r.a),
                "edpoly0": report::rational(&r.edpoly0),
                "dual_edpoly0": report::rational(&r.dual_edpoly0),
                "float_check": r.float_check,
                "dual_float_check": r.dual_float_check,
            }))
        }
        Command::ChernEddegree(a) => {
            let y = cm_data(a, &CMTable::bundled())?;
            Ok(json!({ "cm": y.to_string(), "eddegree": class::ed_degree_cm(&y) }))
        }
        Command::ChernPolar(a) => {
            let y = cm_data(a, &CMTable::bundled())?;
            let delta = class::polar_classes(&y)?;
            let sum: i64 = delta.iter().sum();
            Ok(json!({ "cm": y.to_string(), "polar_classes": delta, "sum": sum }))
        }
        Command::ChernDualDegree(a) => {
            let y = cm_data(a, &CMTable::bundled())?;
            Ok(json!({ "cm": y.to_string(), "dual_degree": class::dual_degree_cm(&y)? }))
        }
        Command::ChernQuadricSection(a) => {
            let y = cm_data(a, &CMTable::bundled())?;
            let s = class::quadric_section_cm(&y)?;
            Ok(json!({ "cm": y.to_string(), "section": s.to_string(), "degrees": s.degrees() }))
        }
        Command::ChernTwoEddegree { cm, x_degree, hypersurface } => {
            let table = CMTable::bundled();
            if let (None, Some(name)) = (&cm.cm, &cm.entry) {
                if let Some(case) = table.two_ed.iter().find(|c| &c.name == name) {
                    return Ok(case_json(ctx, &table.run_case(case)?));
                }
            }
            let y = cm_data(cm, &table)?;
            let deg = x_degree.ok_or_else(|| Failure::Usage("give --x-degree".into()))?;
            Ok(two_ed_json(&class::check_two_eddegree(&y, deg, *hypersurface)?))
        }
        Command::ChernLemma { m, i } => {
            let r = class::lemma_two_sum(*m, *i)?;
            Ok(json!({ "lhs": r.lhs, "rhs": r.rhs, "holds": r.lhs == r.rhs }))
        }
        Command::ChernTable { table } => {
            let table: CMTable = match table {
                Some(p) => ctx.read(p)?.parse()?,
                None => CMTable::bundled(),
            };
            let mut entries = Vec::new();
            for (name, y) in &table.entries {
                let delta = class::polar_classes(y)?;
                let ed = class::ed_degree_cm(y);
                entries.push(json!({
                    "name": name,
                    "cm": y.to_string(),
                    "eddegree": ed,
                    "polar_classes": delta,
                    "polar_sum_holds": delta.iter().sum::<i64>() == ed,
                }));
            }
            let mut cases = Vec::new();
            for case in &table.two_ed {
                cases.push(case_json(ctx, &table.run_case(case)?));
            }
            Ok(json!({ "entries": entries, "two_eddegree": cases }))
        }
    }
}

fn two_ed_json(r: &class::TwoEdReport) -> Value {
    json!({
        "lhs": r.lhs,
        "rhs": r.rhs,
        "holds": r.holds,
        "section_dual_degree": r.section_dual_degree,
        "section_dual_even": r.section_dual_even,
    })
}

fn case_json(ctx: &mut Ctx, r: &class::TwoEdCaseReport) -> Value {
    if !r.transversal {
        ctx.warnings.push(format!(
            "{}: X∨ is not transversal to Q; 2·EDdegree = {} against {} from the formula",
            r.name, r.actual_lhs, r.report.rhs
        ));
    }
    let mut v = two_ed_json(&r.report);
    v["name"] = json!(r.name);
    v["transversal"] = json!(r.transversal);
    v["actual_lhs"] = json!(r.actual_lhs);
    v["actual_holds"] = json!(r.actual_holds);
    v
}

/// Runs `argv` (program name first) and renders the report.
pub fn run<I, T>(argv: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let argv: Vec<OsString> = argv.into_iter().map(Into::into).collect();
    let cli = match Cli::try_parse_from(&argv) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_VALIDATION } else { EXIT_OK };
            return Outcome { code, report: None, output: e.render().to_string() };
        }
    };
    let mut hasher = Sha256::new();
    for a in argv.iter().skip(1) {
        hasher.update(a.to_string_lossy().as_bytes());
        hasher.update([0]);
    }
    let mut ctx = Ctx { warnings: Vec::new(), hasher, seed: cli.global.seed };
    let start = Instant::now();
    let result = match cli.global.budget {
        Some(b) => with_pair_budget(b, || execute(&mut ctx, &cli.command)),
        None => execute(&mut ctx, &cli.command),
    };
    let elapsed = start.elapsed().as_secs_f64() * 1000.0;
    let timing = if cli.global.no_timing { Value::Null } else { json!((elapsed * 1000.0).round() / 1000.0) };
    let input_hash = format!("{:x}", ctx.hasher.clone().finalize());
    let mut report = json!({
        "command": cli.command.name(),
        "input_hash": input_hash,
        "seed": cli.global.seed,
        "warnings": ctx.warnings,
        "timing_ms": timing,
    });
    let code = match result {
        Ok(v) => {
            report["result"] = v;
            EXIT_OK
        }
        Err(f) => {
            report["error"] = f.to_json();
            f.code()
        }
    };
    let output = match cli.global.format {
        Format::Json => format!("{}\n", serde_json::to_string_pretty(&report).expect("serializable")),
        Format::Text => report::render_text(&report),
    };
    Outcome { code, report: Some(report), output }
}
