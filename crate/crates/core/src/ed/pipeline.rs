use std::cell::Cell;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::edpoly::EdPoly;
use super::interpolate::interpolate_ed_polynomial;
use super::spec::{DataPoint, VarietySpec};
use crate::error::{Error, Result};
use crate::ideal::{minimal_polynomial_modular, with_work_limit, Ideal, QuotientDim, MODULAR_CONFIRMATIONS};
use crate::poly::{multigcd_all, multilcm, MonomialOrder, MultiPoly, PolyMatrix, Rational, Ring, VarClass, VariableRing};

/// `J(f)`: entry `(i, j)` is `∂f_i/∂x_j` over the ambient coordinates.
pub fn jacobian(spec: &VarietySpec) -> PolyMatrix {
    let ambient = spec.ambient();
    let rows = spec
        .gens()
        .iter()
        .map(|f| ambient.iter().map(|&j| f.derivative(j)).collect())
        .collect();
    PolyMatrix::from_rows(spec.ring(), rows).expect("rectangular")
}

/// `I_X + ⟨c×c minors of J(f)⟩`.
pub fn singular_ideal(spec: &VarietySpec) -> Result<Ideal> {
    let c = spec.codim();
    let s = spec.gens().len();
    if c > s.min(spec.n()) {
        return Err(Error::invalid(format!(
            "codimension {c} needs at least {c} generators ({s} given)"
        )));
    }
    let mut gens = spec.gens().to_vec();
    gens.extend(jacobian(spec).minors(c)?);
    Ideal::new(spec.ring(), gens)
}

/// Working data shared by the critical-ideal and ED-polynomial builds.
pub(crate) struct Setup {
    /// spec variables followed by the symbolic data coordinates
    pub ring: Ring,
    pub x: Vec<usize>,
    pub u_vars: Vec<usize>,
    /// `I_X` plus the `(c+1)×(c+1)` minors of the stacked matrix
    pub base: Vec<MultiPoly>,
    /// `q(x - u)`
    pub dist: MultiPoly,
}

pub(crate) fn setup(spec: &VarietySpec, u: &DataPoint) -> Result<Setup> {
    let n = spec.n();
    u.check_len(n)?;
    let mut ring = spec.ring().clone();
    let mut u_vars = Vec::new();
    if u.is_symbolic() {
        for k in 0..n {
            let name = ring.fresh_name(&format!("u{}", k + 1));
            ring = ring.extended([(name, VarClass::Data)])?;
            u_vars.push(ring.len() - 1);
        }
    }
    let x = spec.ambient();
    let upolys: Vec<MultiPoly> = match u {
        DataPoint::Symbolic => u_vars.iter().map(|&i| MultiPoly::var(&ring, i)).collect(),
        DataPoint::Numeric(v) => v.iter().map(|c| MultiPoly::constant(&ring, c.clone())).collect(),
    };
    let xpolys: Vec<MultiPoly> = x.iter().map(|&i| MultiPoly::var(&ring, i)).collect();
    let diff: Vec<MultiPoly> = xpolys.iter().zip(&upolys).map(|(a, b)| a - b).collect();
    let dist = spec.q_of(&diff);

    let gens = spec.gens().iter().map(|g| g.to_ring(&ring)).collect::<Result<Vec<_>>>()?;
    let mut base = gens.clone();
    let c = spec.codim();
    if c < n {
        let top: Vec<MultiPoly> = spec.lower(&upolys.iter().zip(&xpolys).map(|(a, b)| a - b).collect::<Vec<_>>());
        let jac_rows: Vec<Vec<MultiPoly>> =
            gens.iter().map(|f| x.iter().map(|&j| f.derivative(j)).collect()).collect();
        let m = PolyMatrix::from_rows(&ring, jac_rows)?.with_row_on_top(top)?;
        if c < m.rows() {
            base.extend(m.minors(c + 1)?);
        }
    }
    Ok(Setup { ring, x, u_vars, base, dist })
}

/// The reduced grevlex basis of `I_{X_sing}`, or `None` when `X` is smooth
/// (the singular ideal is the unit ideal).
fn singular_basis(spec: &VarietySpec) -> Result<Option<Vec<MultiPoly>>> {
    let sing = singular_ideal(spec)?;
    let basis = sing.reduced_basis(&MonomialOrder::Grevlex)?.into_owned();
    if basis.len() == 1 && basis[0].is_constant() {
        Ok(None)
    } else {
        Ok(Some(basis))
    }
}

/// `(I_X + minors) : (I_{X_sing})^∞` over the spec ring extended by the
/// symbolic data coordinates when `u` is symbolic.
pub fn critical_ideal(spec: &VarietySpec, u: &DataPoint) -> Result<Ideal> {
    let st = setup(spec, u)?;
    let base = Ideal::new(&st.ring, st.base)?;
    match singular_basis(spec)? {
        None => Ok(base),
        Some(b) => {
            let gens = b.iter().map(|g| g.to_ring(&st.ring)).collect::<Result<Vec<_>>>()?;
            base.saturate(&Ideal::new(&st.ring, gens)?)
        }
    }
}

/// Outcome of [`ed_polynomial`].
#[derive(Debug, Clone)]
pub struct EdResult {
    pub edpoly: EdPoly,
    /// whether the elimination ideal was principal
    pub principal: bool,
    pub warnings: Vec<String>,
}

/// Heuristic test for `X ⊂ Q`: is `q(x)` or `q(x)²` in `I_X`?
pub fn contained_in_isotropic_quadric(spec: &VarietySpec) -> Result<bool> {
    let xs: Vec<MultiPoly> = spec.ambient().iter().map(|&i| MultiPoly::var(spec.ring(), i)).collect();
    let q = spec.q_of(&xs);
    let ideal = spec.ideal();
    let ord = MonomialOrder::Grevlex;
    Ok(ideal.normal_form(&q, &ord)?.is_zero() || ideal.normal_form(&q.pow(2), &ord)?.is_zero())
}

/// Term operations allowed for a direct symbolic elimination before the
/// interpolation fallback takes over.
const DIRECT_WORK_LIMIT: u64 = 1_000_000;

/// Term operations allowed for the exact minimal polynomial of a numeric
/// system before the multi-modular reconstruction takes over.
const NUMERIC_WORK_LIMIT: u64 = 30_000_000;

/// ED polynomial of `X` at `u`: adjoin `s - q(x-u)` to the critical ideal
/// and eliminate the ambient coordinates.
///
/// The saturation by the singular locus is folded into the elimination:
/// for every element `g` of the reduced basis of `I_{X_sing}` (or for two
/// random combinations of it when it is long) the ideal
/// `I + ⟨s - q(x-u)⟩ + ⟨1 - y·g⟩` is eliminated separately and the
/// resulting ideals are intersected. Numeric systems are zero-dimensional
/// and use the minimal polynomial of `s`, reconstructed modulo primes with a
/// warning when the rational computation grows too large; symbolic systems
/// whose direct elimination grows too large are reconstructed from numeric
/// specializations.
pub fn ed_polynomial(spec: &VarietySpec, u: &DataPoint) -> Result<EdResult> {
    if !u.is_symbolic() && spec.params().is_empty() {
        return ed_polynomial_direct(spec, u, false);
    }
    match with_work_limit(DIRECT_WORK_LIMIT, || ed_polynomial_direct(spec, u, false)) {
        Err(Error::Budget { .. }) => {}
        other => return other,
    }
    u.check_len(spec.n())?;
    let frame = frame(spec, u)?;
    let mut warnings = isotropic_warning(spec)?;
    warnings.push("direct elimination too large; reconstructed from exact numeric specializations".to_string());
    let poly = interpolate_ed_polynomial(spec, u, &frame.out, INTERPOLATION_SEED)?;
    Ok(EdResult { edpoly: EdPoly::new(&poly)?, principal: true, warnings })
}

const INTERPOLATION_SEED: u64 = 0x00ed_5eed;

fn isotropic_warning(spec: &VarietySpec) -> Result<Vec<String>> {
    Ok(if contained_in_isotropic_quadric(spec)? {
        vec!["X appears to lie in the isotropic quadric; the ED polynomial may be degenerate".to_string()]
    } else {
        Vec::new()
    })
}

/// Rings of the fused elimination.
struct Frame {
    st: Setup,
    /// setup ring extended by the saturation variable and `s`
    w: Ring,
    yi: usize,
    si: usize,
    out: Ring,
}

fn frame(spec: &VarietySpec, u: &DataPoint) -> Result<Frame> {
    let st = setup(spec, u)?;
    let yname = st.ring.fresh_name("y");
    let with_y = st.ring.extended([(yname, VarClass::Auxiliary)])?;
    let sname = with_y.fresh_name("s");
    let w = with_y.extended([(sname.clone(), VarClass::Radius)])?;
    let out = output_ring(spec, &st, &sname)?;
    Ok(Frame { yi: w.len() - 2, si: w.len() - 1, st, w, out })
}

/// [`ed_polynomial`] by elimination only. With `modular_first` numeric
/// systems skip the rational minimal polynomial.
pub(crate) fn ed_polynomial_direct(spec: &VarietySpec, u: &DataPoint, modular_first: bool) -> Result<EdResult> {
    let Frame { st, w, yi, si, out } = frame(spec, u)?;
    let mut warnings = isotropic_warning(spec)?;

    let mut gens = st.base.iter().map(|g| g.to_ring(&w)).collect::<Result<Vec<_>>>()?;
    gens.push(&MultiPoly::var(&w, si) - &st.dist.to_ring(&w)?);

    let mut drop = st.x.clone();
    drop.push(yi);

    // with no symbolic coordinates the system is zero-dimensional and the
    // eliminant is the minimal polynomial of s
    let numeric = st.u_vars.is_empty() && spec.params().is_empty();
    let modular = Cell::new(false);
    let piece = |gs: Vec<MultiPoly>| -> Result<Ideal> {
        let ideal = Ideal::new(&w, gs)?;
        if numeric {
            let exact = if modular_first {
                Err(Error::Budget { pairs: 0 })
            } else {
                with_work_limit(NUMERIC_WORK_LIMIT, || ideal.minimal_polynomial(si))
            };
            let m = match exact {
                Err(Error::Budget { .. }) => {
                    modular.set(true);
                    minimal_polynomial_modular(&w, ideal.gens(), si)?
                }
                other => other?,
            };
            if let Some(m) = m {
                return Ideal::new(&out, vec![m.to_ring(&out)?]);
            }
        }
        ideal.eliminate_into(&drop, &out)
    };
    let y = MultiPoly::var(&w, yi);
    let one = MultiPoly::one(&w);
    let pieces: Vec<Ideal> = match singular_basis(spec)? {
        // smooth: pin y = 1 so that numeric systems stay zero-dimensional
        None => {
            gens.push(&one - &y);
            vec![piece(gens)?]
        }
        Some(basis) => {
            saturation_elements(&basis)
                .iter()
                .map(|g| {
                    let mut gs = gens.clone();
                    gs.push(&one - &(&y * &g.to_ring(&w)?));
                    piece(gs)
                })
                .collect::<Result<_>>()?
        }
    };
    if modular.get() {
        warnings.push(format!(
            "rational elimination too large; minimal polynomial of s reconstructed from its images modulo primes (stable over {MODULAR_CONFIRMATIONS} further primes)"
        ));
    }
    let (generator, principal) = principal_generator(&pieces)?;
    if !principal {
        warnings.push("elimination ideal is not principal; using the gcd of its generators".to_string());
    }
    let edpoly = EdPoly::new(&generator)?;
    if edpoly.degree() == 0 {
        return Err(Error::Degenerate("the elimination ideal does not involve s".into()));
    }
    Ok(EdResult { edpoly, principal, warnings })
}

/// Number of random combinations used when the singular ideal has more
/// than [`SHORT_SINGULAR_BASIS`] generators.
const SATURATION_COMBINATIONS: usize = 2;
const SHORT_SINGULAR_BASIS: usize = 4;

/// Elements whose principal saturations are intersected in place of
/// `I_{X_sing}`: the basis itself when short, otherwise seeded random
/// integer combinations of it.
pub(crate) fn saturation_elements(basis: &[MultiPoly]) -> Vec<MultiPoly> {
    if basis.len() <= SHORT_SINGULAR_BASIS {
        return basis.to_vec();
    }
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed);
    (0..SATURATION_COMBINATIONS)
        .map(|_| {
            basis.iter().fold(MultiPoly::zero(basis[0].ring()), |acc, g| {
                let c: i64 = rng.gen_range(1..=97);
                &acc + &g.scale(&Rational::from_integer(c.into()))
            })
        })
        .collect()
}

/// Parameters, then data coordinates, then `s`.
fn output_ring(spec: &VarietySpec, st: &Setup, sname: &str) -> Result<Ring> {
    let mut vars: Vec<(String, VarClass)> = spec
        .params()
        .iter()
        .map(|&i| (spec.ring().name(i).to_string(), VarClass::Auxiliary))
        .collect();
    vars.extend(st.u_vars.iter().map(|&i| (st.ring.name(i).to_string(), VarClass::Data)));
    vars.push((sname.to_string(), VarClass::Radius));
    VariableRing::new(vars)
}

/// Intersects the eliminated pieces and extracts one generator.
fn principal_generator(pieces: &[Ideal]) -> Result<(MultiPoly, bool)> {
    if pieces.iter().any(Ideal::is_zero_ideal) {
        return Err(Error::Degenerate("elimination ideal is zero".into()));
    }
    let ideal = if pieces.iter().all(|p| p.gens().len() == 1) {
        let mut acc = pieces[0].gens()[0].clone();
        for p in &pieces[1..] {
            acc = multilcm(&acc, &p.gens()[0])?;
        }
        Ideal::principal(&acc)
    } else {
        let mut acc = pieces[0].clone();
        for p in &pieces[1..] {
            acc = acc.intersect(p)?;
        }
        acc
    };
    let gens = ideal.reduced_basis(&MonomialOrder::Grevlex)?.into_owned();
    if gens.is_empty() {
        return Err(Error::Degenerate("elimination ideal is zero".into()));
    }
    if gens.len() == 1 {
        return Ok((gens[0].clone(), true));
    }
    Ok((multigcd_all(&gens)?, false))
}

/// One generic sample of [`ed_degree`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EdDegreeSample {
    pub point: Vec<Rational>,
    pub degree: Option<u32>,
    /// vector-space dimension of the critical ideal, when cross-checked
    pub quotient_dim: Option<QuotientDim>,
    pub error: Option<String>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EdDegreeReport {
    pub degree: u32,
    pub agree: bool,
    pub samples: Vec<EdDegreeSample>,
}

pub const ED_DEGREE_SAMPLES: usize = 3;

/// Random rational with numerator in [-20, 20] and denominator in [1, 20].
pub fn random_rational(rng: &mut impl Rng) -> Rational {
    let num: i64 = rng.gen_range(-20..=20);
    let den: i64 = rng.gen_range(1..=20);
    Rational::new(num.into(), den.into())
}

pub fn random_point(n: usize, rng: &mut impl Rng) -> Vec<Rational> {
    (0..n).map(|_| random_rational(rng)).collect()
}

/// ED degree as the maximal `s`-degree over three seeded random data
/// points; `cross_check` also counts the critical points of each sample.
pub fn ed_degree(spec: &VarietySpec, seed: u64, cross_check: bool) -> Result<EdDegreeReport> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut samples = Vec::with_capacity(ED_DEGREE_SAMPLES);
    for _ in 0..ED_DEGREE_SAMPLES {
        let point = random_point(spec.n(), &mut rng);
        let u = DataPoint::Numeric(point.clone());
        let (degree, error) = match ed_polynomial(spec, &u) {
            Ok(r) => (Some(r.edpoly.degree()), None),
            Err(e @ Error::Budget { .. }) => return Err(e),
            Err(e) => (None, Some(e.to_string())),
        };
        let quotient_dim = if cross_check && degree.is_some() {
            Some(critical_ideal(spec, &u)?.quotient_dimension()?)
        } else {
            None
        };
        samples.push(EdDegreeSample { point, degree, quotient_dim, error });
    }
    let degrees: Vec<u32> = samples.iter().filter_map(|s| s.degree).collect();
    let Some(&degree) = degrees.iter().max() else {
        return Err(Error::Degenerate("every sampled data point was degenerate".into()));
    };
    let agree = degrees.len() == samples.len() && degrees.iter().all(|&d| d == degree);
    Ok(EdDegreeReport { degree, agree, samples })
}
