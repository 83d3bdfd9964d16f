//! Ideals: Groebner bases, normal forms, elimination, saturation,
//! intersection and dimension counts.

mod groebner;
mod modular;

use std::borrow::Cow;
use std::collections::HashMap;
use std::fmt;

use num_traits::{One, Zero};

pub use groebner::{pair_budget, with_pair_budget, DEFAULT_PAIR_BUDGET};
pub(crate) use groebner::with_work_limit;
pub(crate) use modular::{minimal_polynomial_modular, STABLE_PRIMES as MODULAR_CONFIRMATIONS};

use crate::error::{Error, Result};
use crate::poly::ring::same_ring;
use crate::poly::{divmod_multi, Monomial, MonomialOrder, MultiPoly, Rational, Ring, VarClass};

/// Finitely generated ideal of a polynomial ring, optionally carrying its
/// reduced Groebner basis for one order.
#[derive(Clone)]
pub struct Ideal {
    ring: Ring,
    gens: Vec<MultiPoly>,
    basis: Option<(MonomialOrder, Vec<MultiPoly>)>,
}

/// Vector-space dimension of a quotient ring.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum QuotientDim {
    Finite(usize),
    Infinite,
}

impl Ideal {
    /// Ideal generated by `gens`; zero generators are dropped, so an empty
    /// list is the zero ideal.
    pub fn new(ring: &Ring, gens: Vec<MultiPoly>) -> Result<Self> {
        if let Some(g) = gens.iter().find(|g| !same_ring(g.ring(), ring)) {
            return Err(Error::RingMismatch(format!("generator over {} in an ideal of {}", g.ring(), ring)));
        }
        let gens = gens.into_iter().filter(|g| !g.is_zero()).collect();
        Ok(Ideal { ring: ring.clone(), gens, basis: None })
    }

    pub fn zero(ring: &Ring) -> Self {
        Ideal { ring: ring.clone(), gens: Vec::new(), basis: None }
    }

    pub fn unit(ring: &Ring) -> Self {
        Ideal { ring: ring.clone(), gens: vec![MultiPoly::one(ring)], basis: None }
    }

    pub fn principal(f: &MultiPoly) -> Self {
        Ideal::new(f.ring(), vec![f.clone()]).expect("same ring")
    }

    pub fn ring(&self) -> &Ring {
        &self.ring
    }

    pub fn gens(&self) -> &[MultiPoly] {
        &self.gens
    }

    pub fn is_zero_ideal(&self) -> bool {
        self.gens.is_empty()
    }

    /// Cached reduced basis and its order, when present.
    pub fn cached_basis(&self) -> Option<(&MonomialOrder, &[MultiPoly])> {
        self.basis.as_ref().map(|(o, b)| (o, b.as_slice()))
    }

    /// The same ideal carrying its reduced Groebner basis for `ord` (the
    /// basis also becomes the generator list).
    pub fn groebner(&self, ord: &MonomialOrder) -> Result<Ideal> {
        let basis = self.reduced_basis(ord)?.into_owned();
        Ok(Ideal { ring: self.ring.clone(), gens: basis.clone(), basis: Some((ord.clone(), basis)) })
    }

    /// Reduced Groebner basis for `ord`: monic, sorted by increasing leading
    /// monomial. Reuses the cache when the order matches.
    pub fn reduced_basis(&self, ord: &MonomialOrder) -> Result<Cow<'_, [MultiPoly]>> {
        if let Some((o, b)) = &self.basis {
            if o == ord {
                return Ok(Cow::Borrowed(b.as_slice()));
            }
        }
        check_order(ord, &self.ring)?;
        groebner::reduced_groebner(&self.ring, &self.gens, ord).map(Cow::Owned)
    }

    /// Remainder of `f` modulo the reduced basis for `ord`; zero iff `f` is
    /// in the ideal.
    pub fn normal_form(&self, f: &MultiPoly, ord: &MonomialOrder) -> Result<MultiPoly> {
        if !same_ring(f.ring(), &self.ring) {
            return Err(Error::RingMismatch("normal form of a polynomial over another ring".into()));
        }
        let basis = self.reduced_basis(ord)?;
        if basis.is_empty() {
            return Ok(f.clone());
        }
        Ok(divmod_multi(f, &basis, ord)?.1)
    }

    pub fn contains(&self, f: &MultiPoly) -> Result<bool> {
        Ok(self.normal_form(f, &self.preferred_order())?.is_zero())
    }

    /// `other ⊆ self`.
    pub fn contains_ideal(&self, other: &Ideal) -> Result<bool> {
        let ord = self.preferred_order();
        let basis = self.reduced_basis(&ord)?;
        for g in other.gens() {
            let g = g.to_ring(&self.ring)?;
            if !basis.is_empty() && !divmod_multi(&g, &basis, &ord)?.1.is_zero() {
                return Ok(false);
            }
            if basis.is_empty() && !g.is_zero() {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// Equality of ideals, decided by comparing reduced grevlex bases.
    pub fn same_ideal(&self, other: &Ideal) -> Result<bool> {
        if !same_ring(&self.ring, &other.ring) {
            return Err(Error::RingMismatch("comparing ideals of different rings".into()));
        }
        let ord = MonomialOrder::Grevlex;
        Ok(self.reduced_basis(&ord)? == other.reduced_basis(&ord)?)
    }

    pub fn is_unit(&self) -> Result<bool> {
        if self.gens.iter().any(|g| g.is_constant()) {
            return Ok(true);
        }
        let b = self.reduced_basis(&self.preferred_order())?;
        Ok(b.len() == 1 && b[0].is_constant())
    }

    fn preferred_order(&self) -> MonomialOrder {
        match &self.basis {
            Some((o, _)) => o.clone(),
            None => MonomialOrder::Grevlex,
        }
    }

    pub fn sum(&self, other: &Ideal) -> Result<Ideal> {
        if !same_ring(&self.ring, &other.ring) {
            return Err(Error::RingMismatch("sum of ideals of different rings".into()));
        }
        let mut gens = self.gens.clone();
        gens.extend(other.gens.iter().cloned());
        Ideal::new(&self.ring, gens)
    }

    pub fn with_generators(&self, extra: impl IntoIterator<Item = MultiPoly>) -> Result<Ideal> {
        let mut gens = self.gens.clone();
        gens.extend(extra);
        Ideal::new(&self.ring, gens)
    }

    /// Moves the generators into `target`, matching variables by name.
    pub fn to_ring(&self, target: &Ring) -> Result<Ideal> {
        let gens = self.gens.iter().map(|g| g.to_ring(target)).collect::<Result<Vec<_>>>()?;
        Ideal::new(target, gens)
    }

    /// `I ∩ k[vars not in drop]`: the elements of a block-order basis that
    /// avoid `drop`. The result stays in the same ring.
    pub fn eliminate(&self, drop: &[usize]) -> Result<Ideal> {
        if let Some(&bad) = drop.iter().find(|&&i| i >= self.ring.len()) {
            return Err(Error::invalid(format!("variable index {bad} outside {}", self.ring)));
        }
        if drop.is_empty() {
            return Ok(self.clone());
        }
        let ord = MonomialOrder::elimination(self.ring.len(), drop);
        let basis = self.reduced_basis(&ord)?;
        let kept: Vec<MultiPoly> =
            basis.iter().filter(|g| drop.iter().all(|&i| !g.uses_var(i))).cloned().collect();
        Ideal::new(&self.ring, kept)
    }

    /// Eliminates `drop` and moves the result into `target`, which must
    /// contain every remaining variable by name.
    pub fn eliminate_into(&self, drop: &[usize], target: &Ring) -> Result<Ideal> {
        self.eliminate(drop)?.to_ring(target)
    }

    /// `I : g^∞` by the Rabinowitsch trick.
    pub fn saturate_by(&self, g: &MultiPoly) -> Result<Ideal> {
        if !same_ring(g.ring(), &self.ring) {
            return Err(Error::RingMismatch("saturating by a polynomial over another ring".into()));
        }
        if g.is_zero() {
            return Err(Error::ZeroPolynomial);
        }
        if g.is_constant() || self.is_zero_ideal() {
            return Ok(self.clone());
        }
        let y = self.ring.fresh_name("sat");
        let ext = self.ring.extended([(y, VarClass::Auxiliary)])?;
        let yi = ext.len() - 1;
        let mut gens = self.gens.iter().map(|f| f.to_ring(&ext)).collect::<Result<Vec<_>>>()?;
        let gy = &MultiPoly::var(&ext, yi) * &g.to_ring(&ext)?;
        gens.push(&MultiPoly::one(&ext) - &gy);
        Ideal::new(&ext, gens)?.eliminate_into(&[yi], &self.ring)
    }

    /// `I : J^∞`, the intersection of the saturations by each generator of J.
    pub fn saturate(&self, j: &Ideal) -> Result<Ideal> {
        if !same_ring(&self.ring, &j.ring) {
            return Err(Error::RingMismatch("saturating by an ideal of another ring".into()));
        }
        if j.is_zero_ideal() {
            return Err(Error::ZeroPolynomial);
        }
        let jb = j.reduced_basis(&MonomialOrder::Grevlex)?;
        if jb.len() == 1 && jb[0].is_constant() {
            return Ok(self.clone());
        }
        let mut acc: Option<Ideal> = None;
        for g in jb.iter() {
            let s = self.saturate_by(g)?;
            acc = Some(match acc {
                None => s,
                Some(a) => a.intersect(&s)?,
            });
        }
        Ok(acc.expect("nonempty basis"))
    }

    /// `I ∩ J` by eliminating `w` from `w·I + (1-w)·J`.
    pub fn intersect(&self, other: &Ideal) -> Result<Ideal> {
        if !same_ring(&self.ring, &other.ring) {
            return Err(Error::RingMismatch("intersecting ideals of different rings".into()));
        }
        if self.is_zero_ideal() || other.is_zero_ideal() {
            return Ok(Ideal::zero(&self.ring));
        }
        let w = self.ring.fresh_name("w");
        let ext = self.ring.extended([(w, VarClass::Auxiliary)])?;
        let wi = ext.len() - 1;
        let wv = MultiPoly::var(&ext, wi);
        let one_minus_w = &MultiPoly::one(&ext) - &wv;
        let mut gens = Vec::with_capacity(self.gens.len() + other.gens.len());
        for f in &self.gens {
            gens.push(&wv * &f.to_ring(&ext)?);
        }
        for g in &other.gens {
            gens.push(&one_minus_w * &g.to_ring(&ext)?);
        }
        Ideal::new(&ext, gens)?.eliminate_into(&[wi], &self.ring)
    }

    /// Minimal polynomial of the variable `var` on `k[x]/I`, which generates
    /// `I ∩ k[var]`. `None` when the quotient is infinite-dimensional.
    pub fn minimal_polynomial(&self, var: usize) -> Result<Option<MultiPoly>> {
        if var >= self.ring.len() {
            return Err(Error::invalid(format!("variable index {var} outside {}", self.ring)));
        }
        let ord = MonomialOrder::Grevlex;
        let gb = self.groebner(&ord)?;
        let QuotientDim::Finite(dim) = gb.quotient_dimension()? else {
            return Ok(None);
        };
        let basis = gb.gens;
        if dim == 0 {
            return Ok(Some(MultiPoly::one(&self.ring)));
        }
        let x = MultiPoly::var(&self.ring, var);
        let mut columns: HashMap<Monomial, usize> = HashMap::new();
        // echelon rows: (pivot column, vector, combination of powers)
        let mut rows: Vec<(usize, Vec<Rational>, Vec<Rational>)> = Vec::new();
        let mut power = MultiPoly::one(&self.ring);
        for k in 0..=dim {
            if k > 0 {
                power = divmod_multi(&(&power * &x), &basis, &ord)?.1;
            }
            let mut v = vec![Rational::zero(); columns.len()];
            for (m, c) in power.terms() {
                let next = columns.len();
                let col = *columns.entry(m.clone()).or_insert(next);
                if col >= v.len() {
                    v.resize(col + 1, Rational::zero());
                }
                v[col] = c.clone();
            }
            let mut comb = vec![Rational::zero(); k + 1];
            comb[k] = Rational::one();
            for (pc, row, rc) in &rows {
                let Some(f) = v.get(*pc).filter(|f| !f.is_zero()).cloned() else {
                    continue;
                };
                for (j, r) in row.iter().enumerate() {
                    if !r.is_zero() {
                        v[j] -= &f * r;
                    }
                }
                for (j, r) in rc.iter().enumerate() {
                    comb[j] -= &f * r;
                }
            }
            match v.iter().position(|c| !c.is_zero()) {
                None => {
                    let terms = comb
                        .into_iter()
                        .enumerate()
                        .filter(|(_, c)| !c.is_zero())
                        .map(|(j, c)| (Monomial::var(self.ring.len(), var, j as u32), c));
                    return Ok(Some(MultiPoly::from_terms(&self.ring, terms)));
                }
                Some(pc) => {
                    let inv = Rational::one() / &v[pc];
                    let row: Vec<Rational> = v.iter().map(|c| c * &inv).collect();
                    let rc: Vec<Rational> = comb.iter().map(|c| c * &inv).collect();
                    // keep earlier rows reduced at the new pivot
                    for (_, r, c) in rows.iter_mut() {
                        let Some(f) = r.get(pc).filter(|f| !f.is_zero()).cloned() else {
                            continue;
                        };
                        r.resize(row.len().max(r.len()), Rational::zero());
                        for (j, x) in row.iter().enumerate() {
                            r[j] -= &f * x;
                        }
                        c.resize(rc.len().max(c.len()), Rational::zero());
                        for (j, x) in rc.iter().enumerate() {
                            c[j] -= &f * x;
                        }
                    }
                    rows.push((pc, row, rc));
                }
            }
        }
        Err(Error::invalid("minimal polynomial exceeds the quotient dimension"))
    }

    /// Leading monomials of the reduced grevlex basis.
    fn leading_monomials(&self) -> Result<Vec<Monomial>> {
        let ord = MonomialOrder::Grevlex;
        let basis = self.reduced_basis(&ord)?;
        Ok(basis.iter().map(|g| g.leading_term(&ord).expect("nonzero").0.clone()).collect())
    }

    /// Number of standard monomials when the quotient is finite dimensional.
    pub fn quotient_dimension(&self) -> Result<QuotientDim> {
        let n = self.ring.len();
        let lms = self.leading_monomials()?;
        let mut bounds = vec![u32::MAX; n];
        for m in &lms {
            let support: Vec<usize> = (0..n).filter(|&i| m.deg_in(i) > 0).collect();
            if support.len() == 1 {
                let i = support[0];
                bounds[i] = bounds[i].min(m.deg_in(i));
            } else if support.is_empty() {
                return Ok(QuotientDim::Finite(0));
            }
        }
        if bounds.contains(&u32::MAX) {
            return Ok(QuotientDim::Infinite);
        }
        let mut count = 0usize;
        let mut exps = vec![0u32; n];
        count_standard(&lms, &bounds, &mut exps, 0, &mut count);
        Ok(QuotientDim::Finite(count))
    }

    /// Krull dimension of the quotient ring; `None` for the unit ideal.
    pub fn dimension(&self) -> Result<Option<usize>> {
        let n = self.ring.len();
        let lms = self.leading_monomials()?;
        if lms.iter().any(Monomial::is_one) {
            return Ok(None);
        }
        if n > 30 {
            return Err(Error::invalid("dimension count supports at most 30 variables"));
        }
        let supports: Vec<u32> = lms
            .iter()
            .map(|m| (0..n).filter(|&i| m.deg_in(i) > 0).fold(0u32, |acc, i| acc | (1 << i)))
            .collect();
        let mut best = 0usize;
        for set in 0u32..(1u32 << n) {
            let size = set.count_ones() as usize;
            if size > best && supports.iter().all(|&s| s & !set != 0) {
                best = size;
            }
        }
        Ok(Some(best))
    }
}

fn count_standard(lms: &[Monomial], bounds: &[u32], exps: &mut Vec<u32>, var: usize, count: &mut usize) {
    if var == exps.len() {
        *count += 1;
        return;
    }
    for e in 0..bounds[var] {
        exps[var] = e;
        let m = Monomial::from_exponents(exps);
        // monomials with the remaining exponents zero: prune when already divisible
        if lms.iter().any(|l| l.divides(&m)) {
            break;
        }
        count_standard(lms, bounds, exps, var + 1, count);
    }
    exps[var] = 0;
}

fn check_order(ord: &MonomialOrder, ring: &Ring) -> Result<()> {
    if let MonomialOrder::Block(mask) = ord {
        if mask.len() != ring.len() {
            return Err(Error::invalid(format!("block order over {} variables used in {}", mask.len(), ring)));
        }
    }
    Ok(())
}

impl fmt::Debug for Ideal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let gens: Vec<String> = self.gens.iter().map(ToString::to_string).collect();
        write!(f, "<{}>", gens.join(", "))
    }
}

impl fmt::Display for Ideal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Debug::fmt(self, f)
    }
}

/// Reduced Groebner basis of `ideal` for `ord`.
pub fn groebner(ideal: &Ideal, ord: &MonomialOrder) -> Result<Ideal> {
    ideal.groebner(ord)
}

pub fn normal_form(f: &MultiPoly, ideal: &Ideal, ord: &MonomialOrder) -> Result<MultiPoly> {
    ideal.normal_form(f, ord)
}

pub fn eliminate(ideal: &Ideal, drop: &[usize]) -> Result<Ideal> {
    ideal.eliminate(drop)
}

pub fn saturate(ideal: &Ideal, by: &Ideal) -> Result<Ideal> {
    ideal.saturate(by)
}

pub fn ideal_intersection(a: &Ideal, b: &Ideal) -> Result<Ideal> {
    a.intersect(b)
}

pub fn quotient_dimension(ideal: &Ideal) -> Result<QuotientDim> {
    ideal.quotient_dimension()
}
