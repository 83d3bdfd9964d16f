use num_traits::{One, Zero};

use super::edpoly::EdPoly;
use super::pipeline::{ed_degree, ed_polynomial};
use super::spec::{DataPoint, VarietySpec};
use crate::error::{Error, Result};
use crate::linalg::{self, RatMatrix};
use crate::poly::{
    discriminant, primitive_normalize, MonomialOrder, MultiPoly, Rational, Ring, VarClass, VariableRing,
};

fn numeric_point(u: &DataPoint, n: usize) -> Result<Vec<Rational>> {
    match u {
        DataPoint::Numeric(v) if v.len() == n => Ok(v.clone()),
        DataPoint::Numeric(v) => Err(Error::invalid(format!("data point has {} coordinates, expected {n}", v.len()))),
        DataPoint::Symbolic => Err(Error::invalid("a numeric data point is required")),
    }
}

/// `E(a + b·s)` for rationals `a`, `b`.
fn affine_in_s(e: &EdPoly, a: &Rational, b: &Rational) -> Result<EdPoly> {
    let ring = e.ring();
    let s = MultiPoly::var(ring, e.radius());
    let image = &MultiPoly::constant(ring, a.clone()) + &s.scale(b);
    EdPoly::new(&e.substitute_s(&image))
}

/// Outcome of a comparison between two independently computed ED
/// polynomials.
#[derive(Debug, Clone)]
pub struct ComparisonReport {
    pub holds: bool,
    pub lhs: EdPoly,
    pub rhs: EdPoly,
}

impl ComparisonReport {
    fn new(lhs: EdPoly, rhs: EdPoly) -> Self {
        ComparisonReport { holds: lhs == rhs, lhs, rhs }
    }
}

/// `EDpoly_{X,u}(s)` against `EDpoly_{X∨,u}(q(u) - s)`.
pub fn duality_reflection_check(x: &VarietySpec, dual: &VarietySpec, u: &DataPoint) -> Result<ComparisonReport> {
    if !x.is_homogeneous() || !dual.is_homogeneous() {
        return Err(Error::invalid("both varieties must be homogeneous"));
    }
    let point = numeric_point(u, x.n())?;
    let qu = x.q_value(&point);
    let lhs = ed_polynomial(x, u)?.edpoly;
    let rhs = affine_in_s(&ed_polynomial(dual, u)?.edpoly, &qu, &-Rational::one())?;
    Ok(ComparisonReport::new(lhs, rhs))
}

/// `p_0`, the ED polynomial at `s = 0`.
pub fn lowest_term(e: &EdPoly) -> MultiPoly {
    e.lowest()
}

/// `p_d`, the coefficient of the top power of `s`.
pub fn leading_term(e: &EdPoly) -> MultiPoly {
    e.leading()
}

/// A coefficient `p_i` that is not homogeneous of degree `2d - 2i` in the
/// data coordinates.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GradingViolation {
    pub power: u32,
    pub expected: u32,
    /// `None` when `p_i` is not homogeneous
    pub found: Option<u32>,
}

/// Checks the grading `deg p_i = 2d - 2i` expected for homogeneous `X`
/// meeting the isotropic quadric transversally.
pub fn grading_violations(e: &EdPoly) -> Vec<GradingViolation> {
    let data = e.ring().indices_of(VarClass::Data);
    let d = e.degree();
    e.coeffs()
        .iter()
        .enumerate()
        .filter(|(_, p)| !p.is_zero())
        .filter_map(|(i, p)| {
            let expected = 2 * d - 2 * i as u32;
            let found = p.is_homogeneous_in(&data).then(|| p.degree_in_set(&data));
            (found != Some(expected)).then_some(GradingViolation { power: i as u32, expected, found })
        })
        .collect()
}

/// Outcome of [`lowest_term_factor_check`].
#[derive(Debug, Clone)]
pub struct FactorReport {
    /// hypersurface case: whether `f²` divides `p_0`
    pub f_sq_divides: bool,
    /// the cofactor `p_0 / f²`, or `p_0` itself
    pub g: MultiPoly,
    pub deg_p0: u32,
    pub deg_f: Option<u32>,
    pub deg_g: u32,
    pub ed_degree: u32,
    /// `2·EDdeg = 2·deg f + deg g` (hypersurface) or `deg g = 2·EDdeg`
    pub degree_identity: bool,
    /// codimension ≥ 2: whether a power `g^k` (k ≤ 3) lies in `I_X`
    pub vanishes_on_x: Option<bool>,
}

/// Images of the spec variables in the ring of `e`: ambient `x_k ↦ u_k`,
/// parameters to themselves.
fn x_to_u(spec: &VarietySpec, e: &EdPoly) -> Result<Vec<MultiPoly>> {
    let target = e.ring();
    let data = target.indices_of(VarClass::Data);
    let ambient = spec.ambient();
    (0..spec.ring().len())
        .map(|v| match ambient.iter().position(|&a| a == v) {
            Some(k) => Ok(MultiPoly::var(target, data[k])),
            None => MultiPoly::var_named(target, spec.ring().name(v)),
        })
        .collect()
}

/// Factors the constant term of a symbolic ED polynomial of homogeneous
/// `X`: `p_0 = f²·g` for a hypersurface `V(f)`, `p_0 = g` otherwise.
pub fn lowest_term_factor_check(spec: &VarietySpec, e: &EdPoly) -> Result<FactorReport> {
    if !spec.is_homogeneous() {
        return Err(Error::invalid("the factor check needs homogeneous generators"));
    }
    let data = e.ring().indices_of(VarClass::Data);
    if data.len() != spec.n() {
        return Err(Error::invalid("the factor check needs a symbolic ED polynomial"));
    }
    let p0 = e.lowest();
    let deg = |p: &MultiPoly| p.degree_in_set(&data);
    let d = e.degree();
    if spec.codim() == 1 && spec.gens().len() == 1 {
        let f = spec.gens()[0].compose(e.ring(), &x_to_u(spec, e)?)?;
        let once = p0.div_exact(&f).ok();
        let twice = once.as_ref().and_then(|q| q.div_exact(&f).ok());
        let (f_sq_divides, g) = match twice {
            Some(g) => (true, g),
            None => (false, p0.clone()),
        };
        let (deg_f, deg_g) = (deg(&f), deg(&g));
        return Ok(FactorReport {
            f_sq_divides,
            degree_identity: f_sq_divides && 2 * d == 2 * deg_f + deg_g,
            deg_p0: deg(&p0),
            deg_f: Some(deg_f),
            deg_g,
            ed_degree: d,
            g,
            vanishes_on_x: None,
        });
    }
    // move g back to the spec ring: u_k ↦ x_k
    let spec_ring = spec.ring();
    let ambient = spec.ambient();
    let images: Vec<MultiPoly> = (0..e.ring().len())
        .map(|v| match data.iter().position(|&k| k == v) {
            Some(k) => Ok(MultiPoly::var(spec_ring, ambient[k])),
            None if v == e.radius() => Ok(MultiPoly::zero(spec_ring)),
            None => MultiPoly::var_named(spec_ring, e.ring().name(v)),
        })
        .collect::<Result<_>>()?;
    let gx = p0.compose(spec_ring, &images)?;
    let ideal = spec.ideal();
    let mut vanishes = false;
    let mut power = gx.clone();
    for _ in 0..3 {
        if ideal.normal_form(&power, &MonomialOrder::Grevlex)?.is_zero() {
            vanishes = true;
            break;
        }
        power = &power * &gx;
    }
    let deg_g = deg(&p0);
    Ok(FactorReport {
        f_sq_divides: false,
        degree_identity: deg_g == 2 * d,
        deg_p0: deg_g,
        deg_f: None,
        deg_g,
        ed_degree: d,
        g: p0,
        vanishes_on_x: Some(vanishes),
    })
}

/// Discriminant of the ED polynomial with respect to `s`: a rational for
/// numeric data, otherwise a primitive-normalized polynomial in the data.
pub fn ed_poly_discriminant(e: &EdPoly) -> Result<MultiPoly> {
    if e.degree() < 2 {
        return Err(Error::DegreeTooLow {
            var: e.ring().name(e.radius()).to_string(),
            degree: e.degree(),
            required: 2,
        });
    }
    let disc = discriminant(e.poly(), e.radius())?;
    if disc.is_constant() {
        return Ok(disc);
    }
    primitive_normalize(&disc)
}

/// Group action tested by [`invariance_suite`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Transform {
    /// `x ↦ g·x` with `gᵀ·qform·g = qform`
    Orthogonal(RatMatrix),
    /// `x ↦ c·x`
    Scaling(Rational),
    /// `x ↦ x + v`
    Translation(Vec<Rational>),
}

/// Spec of the image of `X` under the affine map `x ↦ a·x + b`, given the
/// inverse map `y ↦ ainv·(y - b)`.
fn affine_image(spec: &VarietySpec, ainv: &RatMatrix, b: &[Rational]) -> Result<VarietySpec> {
    let ring = spec.ring();
    let ambient = spec.ambient();
    let vars: Vec<MultiPoly> = ambient.iter().map(|&i| MultiPoly::var(ring, i)).collect();
    let shifted: Vec<MultiPoly> =
        vars.iter().zip(b).map(|(y, bi)| y - &MultiPoly::constant(ring, bi.clone())).collect();
    let mut images: Vec<MultiPoly> = (0..ring.len()).map(|v| MultiPoly::var(ring, v)).collect();
    for (k, &i) in ambient.iter().enumerate() {
        images[i] = shifted
            .iter()
            .zip(&ainv[k])
            .fold(MultiPoly::zero(ring), |acc, (y, c)| &acc + &y.scale(c));
    }
    let gens = spec.gens().iter().map(|f| f.compose(ring, &images)).collect::<Result<_>>()?;
    spec.with_gens(gens)
}

/// Recomputes both sides of the equivariance identity for `transform`.
///
/// Orthogonal: `EDpoly_{gX,u} = EDpoly_{X,g⁻¹u}`. Scaling:
/// `EDpoly_{cX,u}(c²s) = EDpoly_{X,u/c}(s)`. Translation:
/// `EDpoly_{X+v,u} = EDpoly_{X,u-v}`.
pub fn invariance_suite(spec: &VarietySpec, transform: &Transform, u: &DataPoint) -> Result<ComparisonReport> {
    let n = spec.n();
    let point = numeric_point(u, n)?;
    let zero = vec![Rational::zero(); n];
    match transform {
        Transform::Orthogonal(g) => {
            if g.len() != n || !linalg::is_square(g) {
                return Err(Error::invalid(format!("orthogonal map must be {n}x{n}")));
            }
            let q = spec.qform();
            if linalg::mat_mul(&linalg::mat_mul(&linalg::transpose(g), q)?, g)? != *q {
                return Err(Error::invalid("map is not orthogonal for the quadratic form"));
            }
            let ginv = linalg::inverse(g)?;
            let moved = affine_image(spec, &ginv, &zero)?;
            let lhs = ed_polynomial(&moved, u)?.edpoly;
            let back = linalg::mat_vec(&ginv, &point);
            let rhs = ed_polynomial(spec, &DataPoint::Numeric(back))?.edpoly;
            Ok(ComparisonReport::new(lhs, rhs))
        }
        Transform::Scaling(c) => {
            if c.is_zero() {
                return Err(Error::invalid("scaling factor must be nonzero"));
            }
            let cinv = Rational::one() / c;
            let ainv: RatMatrix = linalg::identity(n)
                .into_iter()
                .map(|row| row.into_iter().map(|e| e * &cinv).collect())
                .collect();
            let scaled = affine_image(spec, &ainv, &zero)?;
            let lhs = affine_in_s(&ed_polynomial(&scaled, u)?.edpoly, &Rational::zero(), &(c * c))?;
            let shrunk: Vec<Rational> = point.iter().map(|x| x * &cinv).collect();
            let rhs = ed_polynomial(spec, &DataPoint::Numeric(shrunk))?.edpoly;
            Ok(ComparisonReport::new(lhs, rhs))
        }
        Transform::Translation(v) => {
            if v.len() != n {
                return Err(Error::invalid(format!("translation must have {n} coordinates")));
            }
            let moved = affine_image(spec, &linalg::identity(n), v)?;
            let lhs = ed_polynomial(&moved, u)?.edpoly;
            let back: Vec<Rational> = point.iter().zip(v).map(|(a, b)| a - b).collect();
            let rhs = ed_polynomial(spec, &DataPoint::Numeric(back))?.edpoly;
            Ok(ComparisonReport::new(lhs, rhs))
        }
    }
}

/// Outcome of [`union_check`].
#[derive(Debug, Clone)]
pub struct UnionReport {
    pub holds: bool,
    pub union: EdPoly,
    pub product: EdPoly,
    pub union_spec: VarietySpec,
}

/// `EDpoly_{X₁∪X₂,u} = EDpoly_{X₁,u}·EDpoly_{X₂,u}` up to scalar, with the
/// union given by the intersection of the two ideals.
pub fn union_check(x1: &VarietySpec, x2: &VarietySpec, u: &DataPoint) -> Result<UnionReport> {
    numeric_point(u, x1.n())?;
    if x1.ring() != x2.ring() {
        return Err(Error::RingMismatch("union of varieties over different rings".into()));
    }
    if x1.codim() != x2.codim() {
        return Err(Error::invalid("union check needs equidimensional components"));
    }
    if x1.ideal().same_ideal(&x2.ideal())? {
        return Err(Error::invalid("the two varieties coincide"));
    }
    let inter = x1.ideal().intersect(&x2.ideal())?;
    let gens = inter.reduced_basis(&MonomialOrder::Grevlex)?.into_owned();
    let union_spec = VarietySpec::new(x1.ring(), gens, x1.codim(), Some(x1.qform().clone()))?;
    let union = ed_polynomial(&union_spec, u)?.edpoly;
    let e1 = ed_polynomial(x1, u)?.edpoly;
    let e2 = ed_polynomial(x2, u)?.edpoly;
    let product = EdPoly::new(&(e1.poly() * &e2.poly().to_ring(e1.ring())?))?;
    Ok(UnionReport { holds: union == product, union, product, union_spec })
}

/// Outcome of [`projective_closure_check`].
#[derive(Debug, Clone)]
pub struct ClosureReport {
    pub ed_degree: u32,
    pub closure_ed_degree: u32,
    /// the degrees differ, so the identity was not evaluated
    pub skipped: bool,
    pub holds: Option<bool>,
    /// `EDpoly_{X,0}`
    pub lhs: Option<EdPoly>,
    /// `(1+s)^r·EDpoly_{X̄,u₀}(s/(1+s))`
    pub rhs: Option<EdPoly>,
    pub closure: VarietySpec,
}

/// Projective closure `X̄ ⊂ V ⊕ k` (new first coordinate `x0`) with
/// `q̄ = x0² + q`.
pub fn projective_closure(spec: &VarietySpec) -> Result<VarietySpec> {
    let ring = spec.ring();
    let h = ring.fresh_name("x0");
    let mut vars: Vec<(String, VarClass)> = vec![(h, VarClass::Ambient)];
    vars.extend((0..ring.len()).map(|i| (ring.name(i).to_string(), ring.class(i))));
    let bar = VariableRing::new(vars)?;
    let ambient = spec.ambient();
    let basis = spec.ideal().reduced_basis(&MonomialOrder::Grevlex)?.into_owned();
    let gens: Vec<MultiPoly> = basis.iter().map(|g| homogenize(g, &bar, &ambient)).collect::<Result<_>>()?;
    let n = spec.n();
    let mut qform = linalg::identity(n + 1);
    for i in 0..n {
        for j in 0..n {
            qform[i + 1][j + 1] = spec.qform()[i][j].clone();
        }
    }
    VarietySpec::new(&bar, gens, spec.codim(), Some(qform))
}

/// Homogenizes `g` in the ambient variables with the first variable of
/// `bar`.
fn homogenize(g: &MultiPoly, bar: &Ring, ambient: &[usize]) -> Result<MultiPoly> {
    let top = g.degree_in_set(ambient);
    let shifted: Vec<usize> = (0..g.ring().len()).map(|i| i + 1).collect();
    let lifted = g.map_vars(bar, &shifted);
    let terms = lifted.terms().iter().map(|(m, c)| {
        let deg: u32 = ambient.iter().map(|&i| m.deg_in(i + 1)).sum();
        let mut e = m.exponents().to_vec();
        e[0] = top - deg;
        (crate::poly::Monomial::from_exponents(&e), c.clone())
    });
    Ok(MultiPoly::from_terms(bar, terms.collect::<Vec<_>>()))
}

/// Checks `EDpoly_{X,0}(s) = (1+s)^r·EDpoly_{X̄,u₀}(s/(1+s))` with
/// `u₀ = (1, 0, …, 0)`, after comparing the ED degrees of `X` and `X̄`
/// (sampled with `seed`).
pub fn projective_closure_check(spec: &VarietySpec, seed: u64) -> Result<ClosureReport> {
    let closure = projective_closure(spec)?;
    let r = ed_degree(spec, seed, false)?.degree;
    let rbar = ed_degree(&closure, seed, false)?.degree;
    if r != rbar {
        return Ok(ClosureReport {
            ed_degree: r,
            closure_ed_degree: rbar,
            skipped: true,
            holds: None,
            lhs: None,
            rhs: None,
            closure,
        });
    }
    let n = spec.n();
    let lhs = ed_polynomial(spec, &DataPoint::Numeric(vec![Rational::zero(); n]))?.edpoly;
    let mut u0 = vec![Rational::zero(); n + 1];
    u0[0] = Rational::one();
    let ebar = ed_polynomial(&closure, &DataPoint::Numeric(u0))?.edpoly;
    // Σ c_i s^i (1+s)^(r-i), padded when deg Ē < i
    let ring = lhs.ring();
    let s = MultiPoly::var(ring, lhs.radius());
    let one_plus_s = &MultiPoly::one(ring) + &s;
    let coeffs = ebar.numeric_coeffs().ok_or_else(|| Error::invalid("closure ED polynomial is not numeric"))?;
    let top = r.max(ebar.degree());
    let mut acc = MultiPoly::zero(ring);
    for (i, c) in coeffs.iter().enumerate() {
        let term = &s.pow(i as u32) * &one_plus_s.pow(top - i as u32);
        acc = &acc + &term.scale(c);
    }
    let rhs = EdPoly::new(&acc)?;
    Ok(ClosureReport {
        ed_degree: r,
        closure_ed_degree: rbar,
        skipped: false,
        holds: Some(lhs == rhs),
        lhs: Some(lhs),
        rhs: Some(rhs),
        closure,
    })
}
