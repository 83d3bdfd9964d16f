use std::cmp::Ordering;
use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Signed, Zero};

use super::monomial::{Monomial, MonomialOrder};
use super::rational::{format_rational, int, Rational};
use super::ring::{same_ring, Ring};
use crate::error::{Error, Result};

/// Sparse multivariate polynomial with exact rational coefficients.
///
/// Terms are kept sorted in descending lexicographic order of their
/// exponent vectors with no zero coefficients, so structural equality is
/// polynomial equality.
#[derive(Clone)]
pub struct MultiPoly {
    ring: Ring,
    terms: Vec<(Monomial, Rational)>,
}

impl PartialEq for MultiPoly {
    fn eq(&self, other: &Self) -> bool {
        same_ring(&self.ring, &other.ring) && self.terms == other.terms
    }
}

impl Eq for MultiPoly {}

impl std::hash::Hash for MultiPoly {
    fn hash<H: std::hash::Hasher>(&self, state: &mut H) {
        for (m, c) in &self.terms {
            m.hash(state);
            c.hash(state);
        }
    }
}

fn canonicalize(mut terms: Vec<(Monomial, Rational)>) -> Vec<(Monomial, Rational)> {
    terms.sort_unstable_by(|a, b| b.0.cmp(&a.0));
    let mut out: Vec<(Monomial, Rational)> = Vec::with_capacity(terms.len());
    for (m, c) in terms {
        match out.last_mut() {
            Some((lm, lc)) if *lm == m => *lc += c,
            _ => {
                if let Some((_, lc)) = out.last() {
                    if lc.is_zero() {
                        out.pop();
                    }
                }
                out.push((m, c));
            }
        }
    }
    if matches!(out.last(), Some((_, c)) if c.is_zero()) {
        out.pop();
    }
    out
}

impl MultiPoly {
    pub fn zero(ring: &Ring) -> Self {
        MultiPoly { ring: ring.clone(), terms: Vec::new() }
    }

    pub fn one(ring: &Ring) -> Self {
        Self::constant(ring, Rational::one())
    }

    pub fn constant(ring: &Ring, c: Rational) -> Self {
        if c.is_zero() {
            return Self::zero(ring);
        }
        MultiPoly { ring: ring.clone(), terms: vec![(Monomial::one(ring.len()), c)] }
    }

    pub fn from_int(ring: &Ring, c: i64) -> Self {
        Self::constant(ring, int(c))
    }

    pub fn var(ring: &Ring, i: usize) -> Self {
        assert!(i < ring.len(), "variable index {i} out of range");
        MultiPoly { ring: ring.clone(), terms: vec![(Monomial::var(ring.len(), i, 1), Rational::one())] }
    }

    pub fn var_named(ring: &Ring, name: &str) -> Result<Self> {
        let i = ring
            .index_of(name)
            .ok_or_else(|| Error::RingMismatch(format!("no variable `{name}` in {ring}")))?;
        Ok(Self::var(ring, i))
    }

    pub fn monomial(ring: &Ring, m: Monomial, c: Rational) -> Self {
        assert_eq!(m.nvars(), ring.len());
        if c.is_zero() {
            return Self::zero(ring);
        }
        MultiPoly { ring: ring.clone(), terms: vec![(m, c)] }
    }

    pub fn from_terms(ring: &Ring, terms: impl IntoIterator<Item = (Monomial, Rational)>) -> Self {
        let terms: Vec<_> = terms.into_iter().collect();
        debug_assert!(terms.iter().all(|(m, _)| m.nvars() == ring.len()));
        MultiPoly { ring: ring.clone(), terms: canonicalize(terms) }
    }

    /// Builds from terms already in canonical (strictly descending, nonzero) order.
    pub(crate) fn from_sorted_terms(ring: &Ring, terms: Vec<(Monomial, Rational)>) -> Self {
        debug_assert!(terms.windows(2).all(|w| w[0].0 > w[1].0));
        debug_assert!(terms.iter().all(|(_, c)| !c.is_zero()));
        MultiPoly { ring: ring.clone(), terms }
    }

    pub fn ring(&self) -> &Ring {
        &self.ring
    }

    pub fn terms(&self) -> &[(Monomial, Rational)] {
        &self.terms
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_constant(&self) -> bool {
        self.terms.is_empty() || (self.terms.len() == 1 && self.terms[0].0.is_one())
    }

    pub fn as_constant(&self) -> Option<Rational> {
        match self.terms.as_slice() {
            [] => Some(Rational::zero()),
            [(m, c)] if m.is_one() => Some(c.clone()),
            _ => None,
        }
    }

    pub fn constant_term(&self) -> Rational {
        match self.terms.last() {
            Some((m, c)) if m.is_one() => c.clone(),
            _ => Rational::zero(),
        }
    }

    /// Total degree; zero for the zero polynomial.
    pub fn total_degree(&self) -> u32 {
        self.terms.iter().map(|(m, _)| m.degree()).max().unwrap_or(0)
    }

    pub fn degree_in(&self, i: usize) -> u32 {
        self.terms.iter().map(|(m, _)| m.deg_in(i)).max().unwrap_or(0)
    }

    /// Degree in the variables at `indices` jointly.
    pub fn degree_in_set(&self, indices: &[usize]) -> u32 {
        self.terms
            .iter()
            .map(|(m, _)| indices.iter().map(|&i| m.deg_in(i)).sum())
            .max()
            .unwrap_or(0)
    }

    pub fn uses_var(&self, i: usize) -> bool {
        self.terms.iter().any(|(m, _)| m.deg_in(i) > 0)
    }

    pub fn is_homogeneous(&self) -> bool {
        let mut degs = self.terms.iter().map(|(m, _)| m.degree());
        match degs.next() {
            None => true,
            Some(d) => degs.all(|e| e == d),
        }
    }

    /// Homogeneous with respect to the grading by the variables at `indices`.
    pub fn is_homogeneous_in(&self, indices: &[usize]) -> bool {
        let mut degs = self.terms.iter().map(|(m, _)| indices.iter().map(|&i| m.deg_in(i)).sum::<u32>());
        match degs.next() {
            None => true,
            Some(d) => degs.all(|e| e == d),
        }
    }

    /// Leading term under `ord`.
    pub fn leading_term(&self, ord: &MonomialOrder) -> Option<(&Monomial, &Rational)> {
        self.terms
            .iter()
            .max_by(|a, b| ord.cmp(&a.0, &b.0))
            .map(|(m, c)| (m, c))
    }

    fn check_ring(&self, other: &MultiPoly) -> Result<()> {
        if same_ring(&self.ring, &other.ring) {
            Ok(())
        } else {
            Err(Error::RingMismatch(format!("{} vs {}", self.ring, other.ring)))
        }
    }

    pub fn checked_add(&self, other: &MultiPoly) -> Result<MultiPoly> {
        self.check_ring(other)?;
        Ok(self.merge(other, false))
    }

    pub fn checked_sub(&self, other: &MultiPoly) -> Result<MultiPoly> {
        self.check_ring(other)?;
        Ok(self.merge(other, true))
    }

    pub fn checked_mul(&self, other: &MultiPoly) -> Result<MultiPoly> {
        self.check_ring(other)?;
        Ok(self.mul_impl(other))
    }

    fn merge(&self, other: &MultiPoly, negate: bool) -> MultiPoly {
        let mut out = Vec::with_capacity(self.terms.len() + other.terms.len());
        let (mut i, mut j) = (0, 0);
        let (a, b) = (&self.terms, &other.terms);
        while i < a.len() && j < b.len() {
            match a[i].0.cmp(&b[j].0) {
                Ordering::Greater => {
                    out.push(a[i].clone());
                    i += 1;
                }
                Ordering::Less => {
                    let c = if negate { -&b[j].1 } else { b[j].1.clone() };
                    out.push((b[j].0.clone(), c));
                    j += 1;
                }
                Ordering::Equal => {
                    let c = if negate { &a[i].1 - &b[j].1 } else { &a[i].1 + &b[j].1 };
                    if !c.is_zero() {
                        out.push((a[i].0.clone(), c));
                    }
                    i += 1;
                    j += 1;
                }
            }
        }
        out.extend(a[i..].iter().cloned());
        out.extend(b[j..].iter().map(|(m, c)| (m.clone(), if negate { -c } else { c.clone() })));
        MultiPoly { ring: self.ring.clone(), terms: out }
    }

    fn mul_impl(&self, other: &MultiPoly) -> MultiPoly {
        if self.is_zero() || other.is_zero() {
            return MultiPoly::zero(&self.ring);
        }
        let (small, big) = if self.len() <= other.len() { (self, other) } else { (other, self) };
        if small.len() == 1 {
            let (m, c) = &small.terms[0];
            return big.mul_term(m, c);
        }
        let mut acc: HashMap<Monomial, Rational> = HashMap::with_capacity(small.len() * big.len());
        for (ma, ca) in &small.terms {
            for (mb, cb) in &big.terms {
                let prod = ca * cb;
                acc.entry(ma.mul(mb))
                    .and_modify(|c| *c += &prod)
                    .or_insert(prod);
            }
        }
        let mut terms: Vec<_> = acc.into_iter().filter(|(_, c)| !c.is_zero()).collect();
        terms.sort_unstable_by(|a, b| b.0.cmp(&a.0));
        MultiPoly { ring: self.ring.clone(), terms }
    }

    /// `self * c * m`
    pub fn mul_term(&self, m: &Monomial, c: &Rational) -> MultiPoly {
        if c.is_zero() {
            return MultiPoly::zero(&self.ring);
        }
        // multiplying by a monomial preserves lex order
        let terms = self.terms.iter().map(|(mm, cc)| (mm.mul(m), cc * c)).collect();
        MultiPoly { ring: self.ring.clone(), terms }
    }

    pub fn scale(&self, c: &Rational) -> MultiPoly {
        if c.is_zero() {
            return MultiPoly::zero(&self.ring);
        }
        let terms = self.terms.iter().map(|(m, cc)| (m.clone(), cc * c)).collect();
        MultiPoly { ring: self.ring.clone(), terms }
    }

    pub fn pow(&self, mut e: u32) -> MultiPoly {
        let mut base = self.clone();
        let mut acc = MultiPoly::one(&self.ring);
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul_impl(&base);
            }
            e >>= 1;
            if e > 0 {
                base = base.mul_impl(&base);
            }
        }
        acc
    }

    pub fn checked_pow(&self, e: i64) -> Result<MultiPoly> {
        if e < 0 {
            return Err(Error::NegativeExponent(e));
        }
        let e = u32::try_from(e).map_err(|_| Error::invalid("exponent too large"))?;
        Ok(self.pow(e))
    }

    /// Evaluates at a full point (one value per ring variable).
    pub fn eval(&self, point: &[Rational]) -> Result<Rational> {
        if point.len() != self.ring.len() {
            return Err(Error::invalid(format!(
                "point has {} coordinates, ring has {} variables",
                point.len(),
                self.ring.len()
            )));
        }
        self.eval_with(|i| Some(&point[i]))
    }

    /// Evaluates, requiring a value for every variable that occurs.
    pub fn eval_named(&self, values: &[(&str, Rational)]) -> Result<Rational> {
        let mut slots: Vec<Option<&Rational>> = vec![None; self.ring.len()];
        for (name, v) in values {
            if let Some(i) = self.ring.index_of(name) {
                slots[i] = Some(v);
            }
        }
        self.eval_with(|i| slots[i])
    }

    fn eval_with<'a>(&self, value: impl Fn(usize) -> Option<&'a Rational>) -> Result<Rational> {
        let n = self.ring.len();
        let mut powers: Vec<Vec<Rational>> = vec![Vec::new(); n];
        let mut total = Rational::zero();
        for (m, c) in &self.terms {
            let mut t = c.clone();
            for (i, &e) in m.exponents().iter().enumerate() {
                if e == 0 {
                    continue;
                }
                let v = value(i).ok_or_else(|| Error::MissingValue(self.ring.name(i).to_string()))?;
                let p = &mut powers[i];
                if p.is_empty() {
                    p.push(Rational::one());
                }
                while p.len() <= e as usize {
                    let next = p.last().unwrap() * v;
                    p.push(next);
                }
                t *= &p[e as usize];
            }
            total += t;
        }
        Ok(total)
    }

    /// Substitutes rational values for some variables; the ring is kept.
    pub fn eval_partial(&self, assignments: &[(usize, Rational)]) -> MultiPoly {
        let mut terms = Vec::with_capacity(self.terms.len());
        for (m, c) in &self.terms {
            let mut m = m.clone();
            let mut c = c.clone();
            for (i, v) in assignments {
                let e = m.0[*i];
                if e > 0 {
                    c *= num_traits::pow(v.clone(), e as usize);
                    m.0[*i] = 0;
                }
            }
            if !c.is_zero() {
                terms.push((m, c));
            }
        }
        MultiPoly::from_terms(&self.ring, terms)
    }

    /// Coefficients with respect to variable `i`: entry `k` multiplies `x_i^k`.
    pub fn coeffs_in(&self, i: usize) -> Vec<MultiPoly> {
        let d = self.degree_in(i) as usize;
        let mut buckets: Vec<Vec<(Monomial, Rational)>> = vec![Vec::new(); d + 1];
        for (m, c) in &self.terms {
            let k = m.deg_in(i) as usize;
            let mut m = m.clone();
            m.0[i] = 0;
            buckets[k].push((m, c.clone()));
        }
        buckets
            .into_iter()
            .map(|t| MultiPoly::from_terms(&self.ring, t))
            .collect()
    }

    pub fn leading_coeff_in(&self, i: usize) -> MultiPoly {
        self.coeffs_in(i).pop().unwrap_or_else(|| MultiPoly::zero(&self.ring))
    }

    /// Rebuilds `sum_k coeffs[k] * x_i^k`.
    pub fn from_coeffs_in(ring: &Ring, i: usize, coeffs: &[MultiPoly]) -> MultiPoly {
        let mut terms = Vec::new();
        for (k, c) in coeffs.iter().enumerate() {
            for (m, v) in &c.terms {
                let mut m = m.clone();
                m.0[i] += k as u32;
                terms.push((m, v.clone()));
            }
        }
        MultiPoly::from_terms(ring, terms)
    }

    pub fn derivative(&self, i: usize) -> MultiPoly {
        let terms: Vec<(Monomial, Rational)> = self
            .terms
            .iter()
            .filter(|(m, _)| m.deg_in(i) > 0)
            .map(|(m, c)| {
                let mut m = m.clone();
                let e = m.0[i];
                m.0[i] = e - 1;
                (m, c * int(e as i64))
            })
            .collect();
        MultiPoly::from_terms(&self.ring, terms)
    }

    /// Replaces variable `i` by `value` (a polynomial over the same ring).
    pub fn substitute(&self, i: usize, value: &MultiPoly) -> MultiPoly {
        let coeffs = self.coeffs_in(i);
        // Horner
        let mut acc = MultiPoly::zero(&self.ring);
        for c in coeffs.iter().rev() {
            acc = &(&acc * value) + c;
        }
        acc
    }

    /// Ring homomorphism: variable `k` of `self.ring` maps to `images[k]`,
    /// all polynomials over `target`.
    pub fn compose(&self, target: &Ring, images: &[MultiPoly]) -> Result<MultiPoly> {
        if images.len() != self.ring.len() {
            return Err(Error::invalid("one image per variable is required"));
        }
        if let Some(bad) = images.iter().find(|p| !same_ring(p.ring(), target)) {
            return Err(Error::RingMismatch(format!("image over {} not {}", bad.ring, target)));
        }
        let mut powers: Vec<Vec<MultiPoly>> = vec![Vec::new(); images.len()];
        let mut acc: Vec<(Monomial, Rational)> = Vec::new();
        for (m, c) in &self.terms {
            let mut t = MultiPoly::constant(target, c.clone());
            for (i, &e) in m.exponents().iter().enumerate() {
                if e == 0 {
                    continue;
                }
                let p = &mut powers[i];
                if p.is_empty() {
                    p.push(MultiPoly::one(target));
                }
                while p.len() <= e as usize {
                    let next = p.last().unwrap() * &images[i];
                    p.push(next);
                }
                t = &t * &p[e as usize];
            }
            acc.extend(t.terms);
        }
        Ok(MultiPoly::from_terms(target, acc))
    }

    /// Re-indexes variables: variable `k` of `self` becomes variable
    /// `embedding[k]` of `target`.
    pub fn map_vars(&self, target: &Ring, embedding: &[usize]) -> MultiPoly {
        assert_eq!(embedding.len(), self.ring.len());
        let n = target.len();
        let terms: Vec<(Monomial, Rational)> = self
            .terms
            .iter()
            .map(|(m, c)| {
                let mut out = Monomial::one(n);
                for (k, &e) in m.exponents().iter().enumerate() {
                    out.0[embedding[k]] += e;
                }
                (out, c.clone())
            })
            .collect();
        MultiPoly::from_terms(target, terms)
    }

    /// Moves the polynomial into `target`, matching variables by name.
    /// Fails if a variable that occurs is missing from `target`.
    pub fn to_ring(&self, target: &Ring) -> Result<MultiPoly> {
        if same_ring(&self.ring, target) {
            return Ok(self.clone());
        }
        let mut embedding = Vec::with_capacity(self.ring.len());
        let mut used = vec![false; self.ring.len()];
        for (m, _) in &self.terms {
            for (k, &e) in m.exponents().iter().enumerate() {
                used[k] |= e > 0;
            }
        }
        for (k, &occurs) in used.iter().enumerate() {
            match target.index_of(self.ring.name(k)) {
                Some(j) => embedding.push(j),
                None if occurs => {
                    return Err(Error::RingMismatch(format!(
                        "variable `{}` missing from {}",
                        self.ring.name(k),
                        target
                    )))
                }
                None => embedding.push(usize::MAX),
            }
        }
        let n = target.len();
        let terms: Vec<(Monomial, Rational)> = self
            .terms
            .iter()
            .map(|(m, c)| {
                let mut out = Monomial::one(n);
                for (k, &e) in m.exponents().iter().enumerate() {
                    if e > 0 {
                        out.0[embedding[k]] += e;
                    }
                }
                (out, c.clone())
            })
            .collect();
        Ok(MultiPoly::from_terms(target, terms))
    }

    /// Exact quotient `self / d`; fails if `d` does not divide `self`.
    pub fn div_exact(&self, d: &MultiPoly) -> Result<MultiPoly> {
        self.check_ring(d)?;
        if d.is_zero() {
            return Err(Error::ZeroPolynomial);
        }
        if let Some(c) = d.as_constant() {
            return Ok(self.scale(&c.recip()));
        }
        let (q, r) = self.div_rem_lex(d);
        if r.is_zero() {
            Ok(q)
        } else {
            Err(Error::InexactDivision)
        }
    }

    /// Division with remainder by a single divisor under lex order.
    pub(crate) fn div_rem_lex(&self, d: &MultiPoly) -> (MultiPoly, MultiPoly) {
        let (ld, lc) = &d.terms[0];
        let mut rem: BTreeMap<Monomial, Rational> = self.terms.iter().cloned().collect();
        let mut quot: Vec<(Monomial, Rational)> = Vec::new();
        let mut leftover: Vec<(Monomial, Rational)> = Vec::new();
        while let Some((m, c)) = rem.pop_last() {
            match m.div(ld) {
                Some(qm) => {
                    let qc = &c / lc;
                    for (dm, dc) in &d.terms[1..] {
                        let mm = dm.mul(&qm);
                        let delta = &qc * dc;
                        match rem.entry(mm) {
                            std::collections::btree_map::Entry::Occupied(mut e) => {
                                *e.get_mut() -= delta;
                                if e.get().is_zero() {
                                    e.remove();
                                }
                            }
                            std::collections::btree_map::Entry::Vacant(e) => {
                                e.insert(-delta);
                            }
                        }
                    }
                    quot.push((qm, qc));
                }
                None => leftover.push((m, c)),
            }
        }
        // both vectors were produced in descending order
        (
            MultiPoly::from_sorted_terms(&self.ring, quot),
            MultiPoly::from_sorted_terms(&self.ring, leftover),
        )
    }

    /// Whether `d` divides `self` exactly.
    pub fn is_divisible_by(&self, d: &MultiPoly) -> bool {
        self.div_exact(d).is_ok()
    }
}

macro_rules! binop {
    ($trait:ident, $method:ident, $checked:ident) => {
        impl $trait<&MultiPoly> for &MultiPoly {
            type Output = MultiPoly;
            fn $method(self, rhs: &MultiPoly) -> MultiPoly {
                self.$checked(rhs).expect("ring mismatch")
            }
        }
        impl $trait<MultiPoly> for MultiPoly {
            type Output = MultiPoly;
            fn $method(self, rhs: MultiPoly) -> MultiPoly {
                (&self).$checked(&rhs).expect("ring mismatch")
            }
        }
        impl $trait<&MultiPoly> for MultiPoly {
            type Output = MultiPoly;
            fn $method(self, rhs: &MultiPoly) -> MultiPoly {
                (&self).$checked(rhs).expect("ring mismatch")
            }
        }
    };
}

binop!(Add, add, checked_add);
binop!(Sub, sub, checked_sub);
binop!(Mul, mul, checked_mul);

impl Neg for &MultiPoly {
    type Output = MultiPoly;
    fn neg(self) -> MultiPoly {
        MultiPoly {
            ring: self.ring.clone(),
            terms: self.terms.iter().map(|(m, c)| (m.clone(), -c)).collect(),
        }
    }
}

impl Neg for MultiPoly {
    type Output = MultiPoly;
    fn neg(self) -> MultiPoly {
        -&self
    }
}

impl fmt::Debug for MultiPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

/// Renders in grevlex order using the grammar accepted by the parser,
/// e.g. `4*x^2-9*y^2-1` or `1/2*x*y`.
impl fmt::Display for MultiPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let mut terms: Vec<&(Monomial, Rational)> = self.terms.iter().collect();
        terms.sort_by(|a, b| MonomialOrder::Grevlex.cmp(&b.0, &a.0));
        for (k, (m, c)) in terms.into_iter().enumerate() {
            let neg = c.is_negative();
            let a = c.abs();
            if k == 0 {
                if neg {
                    write!(f, "-")?;
                }
            } else {
                write!(f, "{}", if neg { "-" } else { "+" })?;
            }
            let mut factors: Vec<String> = Vec::new();
            if !a.is_one() || m.is_one() {
                factors.push(format_rational(&a));
            }
            for (i, &e) in m.exponents().iter().enumerate() {
                match e {
                    0 => {}
                    1 => factors.push(self.ring.name(i).to_string()),
                    _ => factors.push(format!("{}^{}", self.ring.name(i), e)),
                }
            }
            write!(f, "{}", factors.join("*"))?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::rational::rat;
    use crate::poly::ring::{VarClass, VariableRing};

    fn xy() -> (Ring, MultiPoly, MultiPoly) {
        let r = VariableRing::uniform(["x", "y"], VarClass::Ambient).unwrap();
        let x = MultiPoly::var(&r, 0);
        let y = MultiPoly::var(&r, 1);
        (r, x, y)
    }

    #[test]
    fn add_cancels() {
        let (r, x, y) = xy();
        assert_eq!(&(&x + &y) + &(&x - &y), x.scale(&int(2)));
        assert!((&x - &x).is_zero());
        assert_eq!((&x - &x), MultiPoly::zero(&r));
    }

    #[test]
    fn binomial_square() {
        let (r, x, _) = xy();
        let p = (&x + &MultiPoly::one(&r)).pow(2);
        assert_eq!(p.to_string(), "x^2+2*x+1");
        assert_eq!((&x + &MultiPoly::one(&r)).checked_pow(-1), Err(Error::NegativeExponent(-1)));
    }

    #[test]
    fn hyperbola_through_half_zero() {
        let (r, x, y) = xy();
        let f = &(&x.pow(2).scale(&int(4)) - &y.pow(2).scale(&int(9))) - &MultiPoly::one(&r);
        assert_eq!(f.eval(&[rat(1, 2), int(0)]).unwrap(), int(0));
        assert_eq!(f.eval_named(&[("x", rat(1, 2))]), Err(Error::MissingValue("y".into())));
    }

    #[test]
    fn ring_mismatch_is_an_error() {
        let (_, x, _) = xy();
        let other = VariableRing::uniform(["a"], VarClass::Ambient).unwrap();
        let a = MultiPoly::var(&other, 0);
        assert!(matches!(x.checked_add(&a), Err(Error::RingMismatch(_))));
    }

    #[test]
    fn exact_division() {
        let (r, x, y) = xy();
        let one = MultiPoly::one(&r);
        let f = &(&x - &one) * &(&(&x * &y) + &y.pow(3));
        assert_eq!(f.div_exact(&(&x - &one)).unwrap(), &(&x * &y) + &y.pow(3));
        assert_eq!(f.div_exact(&(&x + &one)), Err(Error::InexactDivision));
    }

    #[test]
    fn substitution_and_composition() {
        let (r, x, y) = xy();
        let f = &x.pow(2) + &y;
        let g = f.substitute(0, &(&y + &MultiPoly::one(&r)));
        assert_eq!(g.to_string(), "y^2+3*y+1");
        let swapped = f.compose(&r, &[y.clone(), x.clone()]).unwrap();
        assert_eq!(swapped, &y.pow(2) + &x);
    }

    #[test]
    fn coefficient_roundtrip() {
        let (r, x, y) = xy();
        let f = &(&x.pow(3) * &y) - &(&x * &y.pow(2)) + MultiPoly::from_int(&r, 5);
        let cs = f.coeffs_in(0);
        assert_eq!(cs.len(), 4);
        assert_eq!(MultiPoly::from_coeffs_in(&r, 0, &cs), f);
        assert_eq!(f.derivative(0).to_string(), "3*x^2*y-y^2");
    }
}
