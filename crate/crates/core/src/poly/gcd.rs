use std::cmp::Ordering;

use num_bigint::{BigInt, Sign};
use num_traits::{One, Zero};

use super::monomial::{Monomial, MonomialOrder};
use super::multipoly::MultiPoly;
use super::rational::{gcd_int, lcm_int, Rational};
use super::ring::same_ring;
use crate::error::{Error, Result};

/// Order used to fix the sign of a canonical representative: degree in the
/// radius variable first, then grevlex over the whole ring.
fn normalization_cmp(radius: Option<usize>, a: &Monomial, b: &Monomial) -> Ordering {
    let by_radius = match radius {
        Some(s) => a.deg_in(s).cmp(&b.deg_in(s)),
        None => Ordering::Equal,
    };
    by_radius.then_with(|| MonomialOrder::Grevlex.cmp(a, b))
}

/// Leading coefficient under the normalization order.
pub fn normalization_leading_coeff(f: &MultiPoly) -> Option<&Rational> {
    let radius = f.ring().radius();
    f.terms()
        .iter()
        .max_by(|a, b| normalization_cmp(radius, &a.0, &b.0))
        .map(|(_, c)| c)
}

/// Rational `c` such that `c * f` has integer coefficients with gcd 1 and a
/// positive leading coefficient under the normalization order.
pub fn normalizing_factor(f: &MultiPoly) -> Result<Rational> {
    if f.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    let mut den = BigInt::one();
    for (_, c) in f.terms() {
        den = lcm_int(&den, c.denom());
    }
    let mut g = BigInt::zero();
    for (_, c) in f.terms() {
        let a = c.numer() * (&den / c.denom());
        g = gcd_int(&g, &a);
        if g.is_one() {
            break;
        }
    }
    let mut factor = Rational::new(den, g);
    if normalization_leading_coeff(f).expect("nonzero").numer().sign() == Sign::Minus {
        factor = -factor;
    }
    Ok(factor)
}

/// Canonical representative of `f` up to a nonzero rational scalar:
/// integer coefficients, numeric content 1, positive leading coefficient
/// (radius degree first, then grevlex).
pub fn primitive_normalize(f: &MultiPoly) -> Result<MultiPoly> {
    Ok(f.scale(&normalizing_factor(f)?))
}

/// `primitive_normalize` that maps zero to zero.
pub(crate) fn normalize_or_zero(f: &MultiPoly) -> MultiPoly {
    if f.is_zero() {
        f.clone()
    } else {
        primitive_normalize(f).expect("nonzero")
    }
}

/// Equality up to a nonzero scalar factor.
pub fn equal_up_to_scalar(f: &MultiPoly, g: &MultiPoly) -> bool {
    match (f.is_zero(), g.is_zero()) {
        (true, true) => true,
        (false, false) => primitive_normalize(f).ok() == primitive_normalize(g).ok(),
        _ => false,
    }
}

fn main_var(f: &MultiPoly) -> Option<usize> {
    (0..f.ring().len()).rev().find(|&i| f.uses_var(i))
}

/// Pseudo-remainder of `a` by `b` in variable `v`.
fn prem(a: &MultiPoly, b: &MultiPoly, v: usize) -> MultiPoly {
    let db = b.degree_in(v);
    let lb = b.leading_coeff_in(v);
    let ring = a.ring();
    let mut r = a.clone();
    while !r.is_zero() && r.degree_in(v) >= db {
        let dr = r.degree_in(v);
        let lr = r.leading_coeff_in(v);
        let shift = MultiPoly::monomial(ring, Monomial::var(ring.len(), v, dr - db), Rational::one());
        r = &(&lb * &r) - &(&(&lr * &shift) * b);
        r = normalize_or_zero(&r);
    }
    r
}

/// Content of `f` with respect to `v`: gcd of its coefficients in `v`.
fn content_in(f: &MultiPoly, v: usize) -> MultiPoly {
    let mut g = MultiPoly::zero(f.ring());
    for c in f.coeffs_in(v).into_iter().rev() {
        if c.is_zero() {
            continue;
        }
        g = gcd_nonzero_or(&g, &c);
        if g.is_constant() {
            break;
        }
    }
    g
}

fn gcd_nonzero_or(a: &MultiPoly, b: &MultiPoly) -> MultiPoly {
    match (a.is_zero(), b.is_zero()) {
        (true, _) => normalize_or_zero(b),
        (_, true) => normalize_or_zero(a),
        _ => gcd_rec(a, b),
    }
}

fn gcd_rec(f: &MultiPoly, g: &MultiPoly) -> MultiPoly {
    let ring = f.ring();
    if f.is_constant() || g.is_constant() {
        return MultiPoly::one(ring);
    }
    let v = match (main_var(f), main_var(g)) {
        (Some(a), Some(b)) => a.max(b),
        _ => return MultiPoly::one(ring),
    };
    if !f.uses_var(v) {
        return gcd_nonzero_or(f, &content_in(g, v));
    }
    if !g.uses_var(v) {
        return gcd_nonzero_or(&content_in(f, v), g);
    }
    let cf = content_in(f, v);
    let cg = content_in(g, v);
    let c = gcd_nonzero_or(&cf, &cg);
    let mut a = f.div_exact(&cf).expect("content divides");
    let mut b = g.div_exact(&cg).expect("content divides");
    if a.degree_in(v) < b.degree_in(v) {
        std::mem::swap(&mut a, &mut b);
    }
    loop {
        let r = prem(&a, &b, v);
        if r.is_zero() {
            break;
        }
        if r.degree_in(v) == 0 {
            b = MultiPoly::one(ring);
            break;
        }
        a = b;
        let cr = content_in(&r, v);
        b = r.div_exact(&cr).expect("content divides");
    }
    let pb = if b.is_constant() { b } else { b.div_exact(&content_in(&b, v)).expect("content divides") };
    normalize_or_zero(&(&c * &pb))
}

/// Greatest common divisor, canonicalized by [`primitive_normalize`].
pub fn multigcd(f: &MultiPoly, g: &MultiPoly) -> Result<MultiPoly> {
    if !same_ring(f.ring(), g.ring()) {
        return Err(Error::RingMismatch("gcd operands".into()));
    }
    if f.is_zero() && g.is_zero() {
        return Err(Error::ZeroPolynomial);
    }
    Ok(gcd_nonzero_or(f, g))
}

/// Gcd of a list of polynomials (zeros skipped).
pub fn multigcd_all(polys: &[MultiPoly]) -> Result<MultiPoly> {
    let mut it = polys.iter().filter(|p| !p.is_zero());
    let first = it.next().ok_or(Error::ZeroPolynomial)?;
    let mut g = primitive_normalize(first)?;
    for p in it {
        g = multigcd(&g, p)?;
    }
    Ok(g)
}

/// Least common multiple, canonicalized.
pub fn multilcm(f: &MultiPoly, g: &MultiPoly) -> Result<MultiPoly> {
    if f.is_zero() || g.is_zero() {
        return Ok(MultiPoly::zero(f.ring()));
    }
    let d = multigcd(f, g)?;
    primitive_normalize(&(&f.div_exact(&d)? * g))
}

/// Square-free part: `f / gcd(f, df/dx_1, ..., df/dx_n)`.
pub fn squarefree_part(f: &MultiPoly) -> Result<MultiPoly> {
    let p = primitive_normalize(f)?;
    let mut d = p.clone();
    for v in 0..f.ring().len() {
        if d.is_constant() {
            break;
        }
        if p.uses_var(v) {
            d = multigcd(&d, &p.derivative(v))?;
        }
    }
    primitive_normalize(&p.div_exact(&d)?)
}
