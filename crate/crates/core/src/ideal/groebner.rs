//! Buchberger's algorithm over fraction-free integer coefficients with the
//! sugar selection strategy and the Gebauer-Moeller pair criteria.

use std::cell::Cell;
use std::cmp::Ordering;

use num_bigint::{BigInt, Sign};
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::poly::rational::{lcm_int, Rational};
use crate::poly::{Monomial, MonomialOrder, MultiPoly, Ring};

pub const DEFAULT_PAIR_BUDGET: usize = 200_000;

thread_local! {
    static BUDGET_OVERRIDE: Cell<Option<usize>> = const { Cell::new(None) };
    static WORK_LIMIT: Cell<Option<u64>> = const { Cell::new(None) };
}

/// Current S-pair budget: a scoped override if one is active, otherwise
/// `EDVAR_BUDGET`, otherwise [`DEFAULT_PAIR_BUDGET`].
pub fn pair_budget() -> usize {
    BUDGET_OVERRIDE.with(Cell::get).unwrap_or_else(|| {
        std::env::var("EDVAR_BUDGET")
            .ok()
            .and_then(|v| v.trim().parse().ok())
            .unwrap_or(DEFAULT_PAIR_BUDGET)
    })
}

/// Runs `f` with the S-pair budget of every Groebner computation on this
/// thread set to `limit`.
pub fn with_pair_budget<T>(limit: usize, f: impl FnOnce() -> T) -> T {
    let prev = BUDGET_OVERRIDE.with(|b| b.replace(Some(limit)));
    let out = f();
    BUDGET_OVERRIDE.with(|b| b.set(prev));
    out
}

/// Runs `f` with every Groebner computation on this thread also capped at
/// `limit` term operations; exceeding it is reported as a budget error.
pub(crate) fn with_work_limit<T>(limit: u64, f: impl FnOnce() -> T) -> T {
    let prev = WORK_LIMIT.with(|b| b.replace(Some(limit)));
    let out = f();
    WORK_LIMIT.with(|b| b.set(prev));
    out
}

/// Order comparator specialised for the engine: grevlex inside each block,
/// blocks compared in turn.
pub(crate) struct OrderCtx {
    lex: bool,
    blocks: Vec<Vec<usize>>,
}

impl OrderCtx {
    pub(crate) fn new(ord: &MonomialOrder, nvars: usize) -> Self {
        match ord {
            MonomialOrder::Lex => OrderCtx { lex: true, blocks: Vec::new() },
            MonomialOrder::Grevlex => OrderCtx { lex: false, blocks: vec![(0..nvars).collect()] },
            MonomialOrder::Block(mask) => {
                let first: Vec<usize> = (0..nvars).filter(|&i| mask[i]).collect();
                let second: Vec<usize> = (0..nvars).filter(|&i| !mask[i]).collect();
                OrderCtx { lex: false, blocks: vec![first, second] }
            }
        }
    }

    #[inline]
    pub(crate) fn cmp(&self, a: &Monomial, b: &Monomial) -> Ordering {
        let (a, b) = (a.exponents(), b.exponents());
        if self.lex {
            return a.cmp(b);
        }
        for block in &self.blocks {
            let mut da = 0u32;
            let mut db = 0u32;
            for &i in block {
                da += a[i];
                db += b[i];
            }
            if da != db {
                return da.cmp(&db);
            }
            for &i in block.iter().rev() {
                if a[i] != b[i] {
                    return b[i].cmp(&a[i]);
                }
            }
        }
        Ordering::Equal
    }
}

/// Short exponent vector: `a | b` implies `sev(a) & !sev(b) == 0`.
#[inline]
fn sev(m: &Monomial) -> u64 {
    let e = m.exponents();
    let mut out = 0u64;
    if e.len() <= 21 {
        for (i, &x) in e.iter().enumerate() {
            let bits = match x {
                0 => 0,
                1 => 1,
                2 => 3,
                _ => 7,
            };
            out |= bits << (3 * i);
        }
    } else {
        for (i, &x) in e.iter().enumerate() {
            if x > 0 {
                out |= 1 << (i % 64);
            }
        }
    }
    out
}

type Term = (Monomial, BigInt);

struct GPoly {
    terms: Vec<Term>,
    sugar: u32,
    sev: u64,
}

impl GPoly {
    fn new(terms: Vec<Term>, sugar: u32) -> Self {
        let sev = sev(&terms[0].0);
        GPoly { terms, sugar, sev }
    }

    fn lm(&self) -> &Monomial {
        &self.terms[0].0
    }

    fn lc(&self) -> &BigInt {
        &self.terms[0].1
    }
}

struct Pair {
    i: usize,
    j: usize,
    lcm: Monomial,
    sugar: u32,
}

fn content(terms: &[Term]) -> BigInt {
    let mut g = BigInt::zero();
    for (_, c) in terms {
        g = g.gcd(c);
        if g.is_one() {
            break;
        }
    }
    g
}

/// Divides out the integer content and makes the leading coefficient positive.
fn make_primitive(terms: &mut [Term]) {
    if terms.is_empty() {
        return;
    }
    let mut g = content(terms);
    if terms[0].1.sign() == Sign::Minus {
        g = -g;
    }
    if !g.is_one() {
        for (_, c) in terms.iter_mut() {
            *c = &*c / &g;
        }
    }
}

struct Engine<'a> {
    ctx: &'a OrderCtx,
    store: Vec<GPoly>,
    active: Vec<bool>,
    pairs: Vec<Pair>,
    /// word operations performed so far, and the cap on them
    work: Cell<u64>,
    work_limit: u64,
}

impl<'a> Engine<'a> {
    /// `a * p - b * (q * g)` for term lists sorted by the engine order.
    fn combine(&self, p: &[Term], a: &BigInt, g: &[Term], q: &Monomial, b: &BigInt) -> Vec<Term> {
        let mut out = Vec::with_capacity(p.len() + g.len());
        let scale = |c: &BigInt| if a.is_one() { c.clone() } else { c * a };
        let mut i = 0;
        let mut j = 0;
        while i < p.len() && j < g.len() {
            let gm = g[j].0.mul(q);
            match self.ctx.cmp(&p[i].0, &gm) {
                Ordering::Greater => {
                    out.push((p[i].0.clone(), scale(&p[i].1)));
                    i += 1;
                }
                Ordering::Less => {
                    out.push((gm, -(&g[j].1 * b)));
                    j += 1;
                }
                Ordering::Equal => {
                    let c = scale(&p[i].1) - &g[j].1 * b;
                    if !c.is_zero() {
                        out.push((gm, c));
                    }
                    i += 1;
                    j += 1;
                }
            }
        }
        out.extend(p[i..].iter().map(|(m, c)| (m.clone(), scale(c))));
        out.extend(g[j..].iter().map(|(m, c)| (m.mul(q), -(c * b))));
        // word operations of the coefficient products
        let words = |c: &BigInt, k: &BigInt| (1 + c.bits() / 64) * (1 + k.bits() / 64);
        let mut work: u64 = g.iter().map(|(_, c)| words(c, b)).sum();
        if !a.is_one() {
            work += p.iter().map(|(_, c)| words(c, a)).sum::<u64>();
        }
        self.work.set(self.work.get() + work);
        out
    }

    fn find_reducer(&self, m: &Monomial, reducers: &[usize]) -> Option<usize> {
        let s = sev(m);
        reducers.iter().copied().find(|&r| {
            let g = &self.store[r];
            g.sev & !s == 0 && g.lm().divides(m)
        })
    }

    /// Full (head and tail) reduction. The result is primitive with positive
    /// leading coefficient, or empty.
    fn reduce(&self, mut p: Vec<Term>, mut sugar: u32, reducers: &[usize]) -> (Vec<Term>, u32) {
        let mut idx = 0;
        let mut growth = 0u32;
        while idx < p.len() {
            if self.work.get() > self.work_limit {
                break;
            }
            let Some(r) = self.find_reducer(&p[idx].0, reducers) else {
                idx += 1;
                continue;
            };
            let g = &self.store[r];
            let q = p[idx].0.div(g.lm()).expect("divisible");
            let c = &p[idx].1;
            let d = c.gcd(g.lc());
            let mut a = g.lc() / &d;
            let mut b = c / &d;
            if a.is_negative() {
                a = -a;
                b = -b;
            }
            sugar = sugar.max(q.degree() + g.sugar);
            let mut head: Vec<Term> = if a.is_one() {
                p.drain(..idx).collect()
            } else {
                growth += 1;
                p.drain(..idx).map(|(m, c)| (m, c * &a)).collect()
            };
            let tail = self.combine(&p[1..], &a, &g.terms[1..], &q, &b);
            // the leading terms cancel, so both are left out
            head.extend(tail);
            p = head;
            if growth >= 4 {
                make_primitive(&mut p);
                growth = 0;
            }
        }
        make_primitive(&mut p);
        (p, sugar)
    }

    fn check_work(&self, pairs: usize) -> Result<()> {
        if self.work.get() > self.work_limit {
            return Err(Error::Budget { pairs });
        }
        Ok(())
    }

    fn active_indices(&self) -> Vec<usize> {
        (0..self.store.len()).filter(|&k| self.active[k]).collect()
    }

    fn pair_sugar(&self, i: usize, j: usize, lcm: &Monomial) -> u32 {
        let d = lcm.degree();
        let (gi, gj) = (&self.store[i], &self.store[j]);
        (gi.sugar + d - gi.lm().degree()).max(gj.sugar + d - gj.lm().degree())
    }

    /// Gebauer-Moeller update after adding `store[h]`.
    fn update(&mut self, h: usize) {
        let lm_h = self.store[h].lm().clone();
        let mut c: Vec<(usize, Monomial, bool)> = self
            .active_indices()
            .into_iter()
            .map(|g| {
                let lm_g = self.store[g].lm();
                (g, lm_h.lcm(lm_g), lm_h.is_coprime(lm_g))
            })
            .collect();
        let mut d: Vec<(usize, Monomial, bool)> = Vec::new();
        while let Some((g1, l1, coprime)) = c.pop() {
            if coprime
                || (!c.iter().any(|(_, l2, _)| l2.divides(&l1)) && !d.iter().any(|(_, l2, _)| l2.divides(&l1)))
            {
                d.push((g1, l1, coprime));
            }
        }
        let store = &self.store;
        self.pairs.retain(|p| {
            !(lm_h.divides(&p.lcm)
                && store[p.i].lm().lcm(&lm_h) != p.lcm
                && store[p.j].lm().lcm(&lm_h) != p.lcm)
        });
        for (g, l, coprime) in d {
            if !coprime {
                let sugar = self.pair_sugar(g, h, &l);
                self.pairs.push(Pair { i: g, j: h, lcm: l, sugar });
            }
        }
        for g in 0..h {
            if self.active[g] && lm_h.divides(self.store[g].lm()) {
                self.active[g] = false;
            }
        }
        self.active[h] = true;
    }

    fn insert(&mut self, terms: Vec<Term>, sugar: u32) {
        self.store.push(GPoly::new(terms, sugar));
        self.active.push(false);
        let h = self.store.len() - 1;
        self.update(h);
    }

    fn next_pair(&mut self) -> Option<Pair> {
        let ctx = self.ctx;
        let best = self
            .pairs
            .iter()
            .enumerate()
            .min_by(|(_, a), (_, b)| {
                a.sugar
                    .cmp(&b.sugar)
                    .then_with(|| ctx.cmp(&a.lcm, &b.lcm))
                    .then_with(|| (a.j, a.i).cmp(&(b.j, b.i)))
            })
            .map(|(k, _)| k)?;
        Some(self.pairs.swap_remove(best))
    }

    fn spoly(&self, p: &Pair) -> (Vec<Term>, u32) {
        let (f, g) = (&self.store[p.i], &self.store[p.j]);
        let qf = p.lcm.div(f.lm()).expect("lcm");
        let qg = p.lcm.div(g.lm()).expect("lcm");
        let d = f.lc().gcd(g.lc());
        let a = g.lc() / &d;
        let b = f.lc() / &d;
        // a*qf*f - b*qg*g with the leading terms cancelling
        let fq: Vec<Term> = f.terms[1..].iter().map(|(m, c)| (m.mul(&qf), c.clone())).collect();
        let mut out = self.combine(&fq, &a, &g.terms[1..], &qg, &b);
        make_primitive(&mut out);
        (out, p.sugar)
    }
}

fn to_terms(f: &MultiPoly, ctx: &OrderCtx) -> Vec<Term> {
    let mut den = BigInt::one();
    for (_, c) in f.terms() {
        den = lcm_int(&den, c.denom());
    }
    let mut terms: Vec<Term> = f
        .terms()
        .iter()
        .map(|(m, c)| (m.clone(), c.numer() * (&den / c.denom())))
        .collect();
    terms.sort_by(|a, b| ctx.cmp(&b.0, &a.0));
    make_primitive(&mut terms);
    terms
}

fn to_monic(ring: &Ring, terms: &[Term]) -> MultiPoly {
    let lc = &terms[0].1;
    MultiPoly::from_terms(ring, terms.iter().map(|(m, c)| (m.clone(), Rational::new(c.clone(), lc.clone()))))
}

/// Reduced Groebner basis of the ideal generated by `gens` (monic, sorted by
/// increasing leading monomial). The zero ideal yields an empty basis.
pub(crate) fn reduced_groebner(ring: &Ring, gens: &[MultiPoly], ord: &MonomialOrder) -> Result<Vec<MultiPoly>> {
    let limit = pair_budget();
    let work_limit = WORK_LIMIT.with(Cell::get).unwrap_or(u64::MAX);
    let ctx = OrderCtx::new(ord, ring.len());
    let mut engine = Engine { ctx: &ctx, store: Vec::new(), active: Vec::new(), pairs: Vec::new(), work: Cell::new(0), work_limit };
    let mut inputs: Vec<Vec<Term>> = gens.iter().filter(|g| !g.is_zero()).map(|g| to_terms(g, &ctx)).collect();
    if inputs.iter().any(|t| t[0].0.is_one()) {
        return Ok(vec![MultiPoly::one(ring)]);
    }
    inputs.sort_by(|a, b| ctx.cmp(&a[0].0, &b[0].0).then_with(|| a.len().cmp(&b.len())));
    for t in inputs {
        let sugar = t.iter().map(|(m, _)| m.degree()).max().unwrap_or(0);
        let reducers = engine.active_indices();
        let (r, sugar) = engine.reduce(t, sugar, &reducers);
        engine.check_work(0)?;
        if r.is_empty() {
            continue;
        }
        if r[0].0.is_one() {
            return Ok(vec![MultiPoly::one(ring)]);
        }
        engine.insert(r, sugar);
    }
    let mut processed = 0usize;
    while let Some(pair) = engine.next_pair() {
        processed += 1;
        if processed > limit {
            return Err(Error::Budget { pairs: processed - 1 });
        }
        let (s, sugar) = engine.spoly(&pair);
        if s.is_empty() {
            continue;
        }
        let reducers = engine.active_indices();
        let (r, sugar) = engine.reduce(s, sugar, &reducers);
        engine.check_work(processed)?;
        if r.is_empty() {
            continue;
        }
        if r[0].0.is_one() {
            return Ok(vec![MultiPoly::one(ring)]);
        }
        engine.insert(r, sugar);
    }
    let mut basis = engine.active_indices();
    basis.sort_by(|&a, &b| ctx.cmp(engine.store[a].lm(), engine.store[b].lm()));
    let mut out = Vec::with_capacity(basis.len());
    for &k in &basis {
        let others: Vec<usize> = basis.iter().copied().filter(|&o| o != k).collect();
        // the basis is minimal, so only tail terms can be rewritten
        let g = &engine.store[k];
        let (terms, _) = engine.reduce(g.terms.clone(), g.sugar, &others);
        engine.check_work(0)?;
        out.push(to_monic(ring, &terms));
    }
    Ok(out)
}
