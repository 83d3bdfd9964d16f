//! Groebner bases over `Z/p` and multi-modular minimal polynomials.

use std::collections::HashMap;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};

use super::groebner::{pair_budget, OrderCtx};
use crate::error::{Error, Result};
use crate::poly::modp::{int_mod, inv_mod, primes, rat_mod, rational_reconstruction};
use crate::poly::{Monomial, MonomialOrder, MultiPoly, Rational, Ring};

type Term = (Monomial, u64);

/// Primes used before giving up on a reconstruction.
const MAX_PRIMES: usize = 400;
/// Consecutive primes that must leave the reconstruction unchanged.
pub(crate) const STABLE_PRIMES: usize = 2;

struct ModEngine<'a> {
    ctx: &'a OrderCtx,
    p: u64,
    store: Vec<(Vec<Term>, u32)>,
    active: Vec<bool>,
    pairs: Vec<(usize, usize, Monomial, u32)>,
}

impl<'a> ModEngine<'a> {
    fn lm(&self, k: usize) -> &Monomial {
        &self.store[k].0[0].0
    }

    fn monic(&self, mut t: Vec<Term>) -> Vec<Term> {
        if let Some(&(_, lc)) = t.first() {
            if lc != 1 {
                let inv = inv_mod(lc, self.p);
                for (_, c) in t.iter_mut() {
                    *c = *c * inv % self.p;
                }
            }
        }
        t
    }

    /// `f - b * q * g` for sorted term lists.
    fn combine(&self, f: &[Term], g: &[Term], q: &Monomial, b: u64) -> Vec<Term> {
        let p = self.p;
        let mut out = Vec::with_capacity(f.len() + g.len());
        let (mut i, mut j) = (0, 0);
        while i < f.len() && j < g.len() {
            let gm = g[j].0.mul(q);
            match self.ctx.cmp(&f[i].0, &gm) {
                std::cmp::Ordering::Greater => {
                    out.push(f[i].clone());
                    i += 1;
                }
                std::cmp::Ordering::Less => {
                    out.push((gm, (p - g[j].1 * b % p) % p));
                    j += 1;
                }
                std::cmp::Ordering::Equal => {
                    let c = (f[i].1 + p - g[j].1 * b % p) % p;
                    if c != 0 {
                        out.push((gm, c));
                    }
                    i += 1;
                    j += 1;
                }
            }
        }
        out.extend_from_slice(&f[i..]);
        out.extend(g[j..].iter().map(|(m, c)| (m.mul(q), (p - c * b % p) % p)));
        out
    }

    /// Full reduction by the listed (monic) reducers; the result is monic.
    fn reduce(&self, f: Vec<Term>, sugar: u32, reducers: &[usize]) -> (Vec<Term>, u32) {
        let (f, sugar) = self.reduce_raw(f, sugar, reducers);
        (self.monic(f), sugar)
    }

    /// Full reduction keeping the scale of `f`.
    fn reduce_raw(&self, mut f: Vec<Term>, mut sugar: u32, reducers: &[usize]) -> (Vec<Term>, u32) {
        let mut idx = 0;
        while idx < f.len() {
            let m = &f[idx].0;
            let Some(r) = reducers.iter().copied().find(|&r| self.lm(r).divides(m)) else {
                idx += 1;
                continue;
            };
            let (g, gs) = &self.store[r];
            let q = m.div(&g[0].0).expect("divisible");
            sugar = sugar.max(q.degree() + gs);
            let b = f[idx].1;
            let mut head: Vec<Term> = f.drain(..idx).collect();
            head.extend(self.combine(&f[1..], &g[1..], &q, b));
            f = head;
        }
        (f, sugar)
    }

    fn active_indices(&self) -> Vec<usize> {
        (0..self.store.len()).filter(|&k| self.active[k]).collect()
    }

    fn insert(&mut self, t: Vec<Term>, sugar: u32) {
        self.store.push((t, sugar));
        self.active.push(false);
        let h = self.store.len() - 1;
        let lm_h = self.lm(h).clone();
        let mut c: Vec<(usize, Monomial, bool)> = self
            .active_indices()
            .into_iter()
            .map(|g| (g, lm_h.lcm(self.lm(g)), lm_h.is_coprime(self.lm(g))))
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
        self.pairs.retain(|(i, j, l, _)| {
            !(lm_h.divides(l) && store[*i].0[0].0.lcm(&lm_h) != *l && store[*j].0[0].0.lcm(&lm_h) != *l)
        });
        for (g, l, coprime) in d {
            if !coprime {
                let dl = l.degree();
                let (a, b) = (&self.store[g], &self.store[h]);
                let sugar = (a.1 + dl - a.0[0].0.degree()).max(b.1 + dl - b.0[0].0.degree());
                self.pairs.push((g, h, l, sugar));
            }
        }
        for g in 0..h {
            if self.active[g] && lm_h.divides(self.lm(g)) {
                self.active[g] = false;
            }
        }
        self.active[h] = true;
    }

    fn next_pair(&mut self) -> Option<(usize, usize, Monomial, u32)> {
        let ctx = self.ctx;
        let best = self
            .pairs
            .iter()
            .enumerate()
            .min_by(|(_, a), (_, b)| a.3.cmp(&b.3).then_with(|| ctx.cmp(&a.2, &b.2)).then_with(|| (a.1, a.0).cmp(&(b.1, b.0))))
            .map(|(k, _)| k)?;
        Some(self.pairs.swap_remove(best))
    }
}

/// Reduced grevlex basis mod `p` (monic, sorted by decreasing leading
/// monomial within each element); `None` when `p` divides a denominator.
fn groebner_mod(gens: &[MultiPoly], ctx: &OrderCtx, p: u64) -> Result<Option<Vec<Vec<Term>>>> {
    let mut eng = ModEngine { ctx, p, store: Vec::new(), active: Vec::new(), pairs: Vec::new() };
    let mut inputs = Vec::new();
    for g in gens {
        let mut t = Vec::with_capacity(g.terms().len());
        for (m, c) in g.terms() {
            let Some(c) = rat_mod(c, p) else { return Ok(None) };
            if c != 0 {
                t.push((m.clone(), c));
            }
        }
        if !t.is_empty() {
            t.sort_by(|a, b| ctx.cmp(&b.0, &a.0));
            inputs.push(eng.monic(t));
        }
    }
    inputs.sort_by(|a, b| ctx.cmp(&a[0].0, &b[0].0).then_with(|| a.len().cmp(&b.len())));
    let unit = |eng: &ModEngine| Ok(Some(vec![vec![(Monomial::one(eng.lm(0).exponents().len()), 1)]]));
    for t in inputs {
        let sugar = t.iter().map(|(m, _)| m.degree()).max().unwrap_or(0);
        let (r, sugar) = eng.reduce(t, sugar, &eng.active_indices());
        if r.is_empty() {
            continue;
        }
        let one = r[0].0.is_one();
        eng.insert(r, sugar);
        if one {
            return unit(&eng);
        }
    }
    let limit = pair_budget();
    let mut processed = 0usize;
    while let Some((i, j, l, sugar)) = eng.next_pair() {
        processed += 1;
        if processed > limit {
            return Err(Error::Budget { pairs: processed - 1 });
        }
        let (f, g) = (&eng.store[i].0, &eng.store[j].0);
        let qf = l.div(&f[0].0).expect("lcm");
        let qg = l.div(&g[0].0).expect("lcm");
        let fq: Vec<Term> = f[1..].iter().map(|(m, c)| (m.mul(&qf), *c)).collect();
        let s = eng.combine(&fq, &g[1..], &qg, 1);
        if s.is_empty() {
            continue;
        }
        let s = eng.monic(s);
        let (r, sugar) = eng.reduce(s, sugar, &eng.active_indices());
        if r.is_empty() {
            continue;
        }
        let one = r[0].0.is_one();
        eng.insert(r, sugar);
        if one {
            return unit(&eng);
        }
    }
    let mut basis = eng.active_indices();
    basis.sort_by(|&a, &b| ctx.cmp(eng.lm(a), eng.lm(b)));
    let out = basis
        .iter()
        .map(|&k| {
            let others: Vec<usize> = basis.iter().copied().filter(|&o| o != k).collect();
            let (t, s) = &eng.store[k];
            eng.reduce(t.clone(), *s, &others).0
        })
        .collect();
    Ok(Some(out))
}

/// Outcome of one prime: the leading monomials of the basis (which detect
/// unlucky primes) and the monic minimal polynomial, low degree first.
struct ModResult {
    key: Vec<Monomial>,
    coeffs: Vec<u64>,
}

/// Minimal polynomial of `var` mod `p`; `Ok(Some(None))` when the ideal is
/// not zero-dimensional.
fn minimal_polynomial_mod(gens: &[MultiPoly], var: usize, ctx: &OrderCtx, p: u64) -> Result<Option<Option<ModResult>>> {
    let Some(basis) = groebner_mod(gens, ctx, p)? else { return Ok(None) };
    let n = gens[0].ring().len();
    let key: Vec<Monomial> = basis.iter().map(|g| g[0].0.clone()).collect();
    let pure = |i: usize| key.iter().any(|m| m.deg_in(i) > 0 && (0..n).all(|j| j == i || m.deg_in(j) == 0));
    if key.iter().any(Monomial::is_one) {
        return Ok(Some(Some(ModResult { key, coeffs: vec![1] })));
    }
    if !(0..n).all(pure) {
        return Ok(Some(None));
    }
    let eng = ModEngine { ctx, p, store: basis.into_iter().map(|t| (t, 0)).collect(), active: Vec::new(), pairs: Vec::new() };
    let all: Vec<usize> = (0..eng.store.len()).collect();
    let x = Monomial::var(n, var, 1);
    let mut columns: HashMap<Monomial, usize> = HashMap::new();
    // echelon rows: (pivot, vector, combination of powers), pivot entry 1
    let mut rows: Vec<(usize, Vec<u64>, Vec<u64>)> = Vec::new();
    let mut power: Vec<Term> = vec![(Monomial::one(n), 1)];
    for k in 0.. {
        if k > 0 {
            let mut shifted: Vec<Term> = power.iter().map(|(m, c)| (m.mul(&x), *c)).collect();
            shifted.sort_by(|a, b| ctx.cmp(&b.0, &a.0));
            power = eng.reduce_raw(shifted, 0, &all).0;
        }
        let mut v = vec![0u64; columns.len()];
        for (m, c) in &power {
            let next = columns.len();
            let col = *columns.entry(m.clone()).or_insert(next);
            if col >= v.len() {
                v.resize(col + 1, 0);
            }
            v[col] = *c;
        }
        let mut comb = vec![0u64; k + 1];
        comb[k] = 1;
        for (pc, row, rc) in &rows {
            let f = v.get(*pc).copied().unwrap_or(0);
            if f == 0 {
                continue;
            }
            for (j, r) in row.iter().enumerate() {
                v[j] = (v[j] + p - f * r % p) % p;
            }
            for (j, r) in rc.iter().enumerate() {
                comb[j] = (comb[j] + p - f * r % p) % p;
            }
        }
        match v.iter().position(|&c| c != 0) {
            None => {
                let inv = inv_mod(comb[k], p);
                let coeffs = comb.iter().map(|c| c * inv % p).collect();
                return Ok(Some(Some(ModResult { key, coeffs })));
            }
            Some(pc) => {
                let inv = inv_mod(v[pc], p);
                let row: Vec<u64> = v.iter().map(|c| c * inv % p).collect();
                let rc: Vec<u64> = comb.iter().map(|c| c * inv % p).collect();
                rows.push((pc, row, rc));
            }
        }
    }
    unreachable!("a zero-dimensional quotient is finite")
}

/// Multi-modular minimal polynomial of `var` over an ideal with rational
/// generators; `None` when the ideal is not zero-dimensional. Images mod
/// successive primes are combined by the Chinese remainder theorem until
/// the rational reconstruction is stable.
pub(crate) fn minimal_polynomial_modular(ring: &Ring, gens: &[MultiPoly], var: usize) -> Result<Option<MultiPoly>> {
    let gens: Vec<MultiPoly> = gens.iter().filter(|g| !g.is_zero()).cloned().collect();
    if gens.is_empty() {
        return Ok(None);
    }
    let ctx = OrderCtx::new(&MonomialOrder::Grevlex, ring.len());
    // per leading-monomial key: residues, modulus, last reconstruction, streak
    struct Acc {
        residues: Vec<BigInt>,
        modulus: BigInt,
        last: Option<Vec<Rational>>,
        streak: usize,
    }
    let mut accs: Vec<(Vec<Monomial>, usize, Acc)> = Vec::new();
    for (used, p) in primes().enumerate() {
        if used >= MAX_PRIMES {
            return Err(Error::Limit(format!("minimal polynomial did not stabilise within {MAX_PRIMES} primes")));
        }
        let Some(res) = minimal_polynomial_mod(&gens, var, &ctx, p)? else { continue };
        let Some(ModResult { key, coeffs }) = res else { return Ok(None) };
        let deg = coeffs.len();
        let slot = match accs.iter().position(|(k, d, _)| *k == key && *d == deg) {
            Some(s) => s,
            None => {
                let acc = Acc { residues: vec![BigInt::zero(); deg], modulus: BigInt::one(), last: None, streak: 0 };
                accs.push((key, deg, acc));
                accs.len() - 1
            }
        };
        let acc = &mut accs[slot].2;
        let pb = BigInt::from(p);
        // x ≡ r (mod M), x ≡ c (mod p)  ->  x = r + M·((c - r)·M⁻¹ mod p)
        let minv = BigInt::from(inv_mod(int_mod(&acc.modulus, p), p));
        for (r, &c) in acc.residues.iter_mut().zip(&coeffs) {
            let t = ((BigInt::from(c) - &*r) * &minv).mod_floor(&pb);
            *r = &*r + &acc.modulus * t;
        }
        acc.modulus = &acc.modulus * &pb;
        let rec: Option<Vec<Rational>> = acc.residues.iter().map(|r| rational_reconstruction(r, &acc.modulus)).collect();
        match rec {
            Some(rec) if acc.last.as_ref() == Some(&rec) => {
                acc.streak += 1;
                if acc.streak >= STABLE_PRIMES {
                    let terms = rec
                        .into_iter()
                        .enumerate()
                        .filter(|(_, c)| !c.is_zero())
                        .map(|(j, c)| (Monomial::var(ring.len(), var, j as u32), c));
                    return Ok(Some(MultiPoly::from_terms(ring, terms)));
                }
            }
            other => {
                acc.last = other;
                acc.streak = 0;
            }
        }
    }
    unreachable!("there are more than MAX_PRIMES primes below 2^31")
}
