//! Reconstruction of a symbolic ED polynomial from numeric specializations.
//!
//! Every symbolic coordinate (parameters and, when symbolic, the data point)
//! is replaced by random rationals, the resulting numeric ED polynomial is
//! made monic, and a dense ansatz `Σ c_{iα} z^α s^i` of growing total degree
//! is fitted to the samples. The kernel is found modulo word-sized primes,
//! lifted by Chinese remaindering and rational reconstruction, and finally
//! verified exactly on every sample plus fresh ones.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use super::pipeline::{ed_polynomial_direct, random_rational};
use super::spec::{DataPoint, VarietySpec};
use crate::error::{Error, Result};
use crate::poly::modp::{int_mod, inv_mod, pow_mod, primes, rat_mod, rational_reconstruction};
use crate::poly::{Monomial, MultiPoly, Rational, Ring, VarClass, VariableRing};

/// Largest ansatz size (unknown coefficients) attempted.
pub const MAX_UNKNOWNS: usize = 2500;
const MAX_DEGREE: u32 = 40;
const MAX_PRIMES: usize = 120;
const FRESH_CHECKS: usize = 3;

/// A symbolic coordinate: a parameter (index in the spec ring) or the k-th
/// data coordinate.
#[derive(Clone, Copy)]
enum Slot {
    Param(usize),
    Data(usize),
}

struct Sample {
    z: Vec<Rational>,
    /// monic coefficients `r_0..r_d`
    r: Vec<Rational>,
}

struct Problem<'a> {
    spec: &'a VarietySpec,
    u: &'a DataPoint,
    slots: Vec<Slot>,
    numeric_ring: Ring,
    rng: ChaCha8Rng,
}

impl Problem<'_> {
    /// Numeric ED polynomial at one random specialization; `None` when the
    /// specialization is degenerate.
    fn draw(&mut self) -> Result<Option<Sample>> {
        let z: Vec<Rational> = self.slots.iter().map(|_| random_rational(&mut self.rng)).collect();
        self.sample_at(z)
    }

    fn sample_at(&self, z: Vec<Rational>) -> Result<Option<Sample>> {
        let assign: Vec<(usize, Rational)> = self
            .slots
            .iter()
            .zip(&z)
            .filter_map(|(s, v)| match s {
                Slot::Param(i) => Some((*i, v.clone())),
                Slot::Data(_) => None,
            })
            .collect();
        let mut gens = Vec::with_capacity(self.spec.gens().len());
        for g in self.spec.gens() {
            let g = g.eval_partial(&assign).to_ring(&self.numeric_ring)?;
            if g.is_zero() {
                return Ok(None);
            }
            gens.push(g);
        }
        let Ok(spec) = VarietySpec::new(&self.numeric_ring, gens, self.spec.codim(), Some(self.spec.qform().clone()))
        else {
            return Ok(None);
        };
        let point = match self.u {
            DataPoint::Numeric(v) => v.clone(),
            DataPoint::Symbolic => {
                let mut p = vec![Rational::zero(); self.spec.n()];
                for (s, v) in self.slots.iter().zip(&z) {
                    if let Slot::Data(k) = s {
                        p[*k] = v.clone();
                    }
                }
                p
            }
        };
        match ed_polynomial_direct(&spec, &DataPoint::Numeric(point), true) {
            Ok(res) => {
                let coeffs = res.edpoly.numeric_coeffs().expect("numeric");
                let lead = coeffs.last().expect("nonempty").clone();
                let r = coeffs.iter().map(|c| c / &lead).collect();
                Ok(Some(Sample { z, r }))
            }
            Err(e @ Error::Budget { .. }) => Err(e),
            Err(_) => Ok(None),
        }
    }
}

/// Exponent vectors of total degree at most `deg` in `k` variables.
fn exponents_up_to(k: usize, deg: u32) -> Vec<Vec<u32>> {
    fn rec(k: usize, left: u32, cur: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for e in 0..=left {
            cur.push(e);
            rec(k, left - e, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(k, deg, &mut Vec::with_capacity(k), &mut out);
    out
}

/// Kernel of a matrix over `F_p` by reduction to row echelon form.
fn kernel_mod(mut rows: Vec<Vec<u64>>, cols: usize, p: u64) -> Vec<Vec<u64>> {
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..cols {
        let Some(k) = (r..rows.len()).find(|&k| rows[k][c] != 0) else {
            continue;
        };
        rows.swap(r, k);
        let inv = inv_mod(rows[r][c], p);
        for x in rows[r].iter_mut() {
            *x = *x * inv % p;
        }
        let pivot = std::mem::take(&mut rows[r]);
        for (k, row) in rows.iter_mut().enumerate() {
            if k == r || row.is_empty() || row[c] == 0 {
                continue;
            }
            let f = p - row[c];
            for j in c..cols {
                if pivot[j] != 0 {
                    row[j] = (row[j] + f * pivot[j]) % p;
                }
            }
        }
        rows[r] = pivot;
        pivots.push(c);
        r += 1;
        if r == rows.len() {
            break;
        }
    }
    let mut is_pivot = vec![false; cols];
    for &c in &pivots {
        is_pivot[c] = true;
    }
    (0..cols)
        .filter(|&f| !is_pivot[f])
        .map(|f| {
            let mut v = vec![0u64; cols];
            v[f] = 1;
            for (i, &c) in pivots.iter().enumerate() {
                v[c] = (p - rows[i][f]) % p;
            }
            v
        })
        .collect()
}

struct Ansatz {
    exps: Vec<Vec<u32>>,
    d: usize,
}

impl Ansatz {
    fn unknowns(&self) -> usize {
        (self.d + 1) * self.exps.len()
    }

    /// Rows of the linear system modulo `p`, or `None` when a sample does
    /// not reduce.
    fn rows_mod(&self, samples: &[Sample], p: u64) -> Option<Vec<Vec<u64>>> {
        let m = self.exps.len();
        let mut rows = Vec::with_capacity(samples.len() * self.d);
        for s in samples {
            let z: Vec<u64> = s.z.iter().map(|v| rat_mod(v, p)).collect::<Option<_>>()?;
            let r: Vec<u64> = s.r.iter().map(|v| rat_mod(v, p)).collect::<Option<_>>()?;
            let mono: Vec<u64> = self
                .exps
                .iter()
                .map(|e| e.iter().zip(&z).fold(1u64, |acc, (&k, &zi)| acc * pow_mod(zi, k as u64, p) % p))
                .collect();
            for i in 0..self.d {
                let mut row = vec![0u64; self.unknowns()];
                for a in 0..m {
                    row[i * m + a] = mono[a];
                    row[self.d * m + a] = (p - r[i] * mono[a] % p) % p;
                }
                rows.push(row);
            }
        }
        Some(rows)
    }

    fn polynomial(&self, ring: &Ring, coeffs: &[Rational]) -> MultiPoly {
        let m = self.exps.len();
        let nv = ring.len();
        let terms = coeffs.iter().enumerate().filter(|(_, c)| !c.is_zero()).map(|(idx, c)| {
            let (i, a) = (idx / m, idx % m);
            let mut e = self.exps[a].clone();
            e.resize(nv - 1, 0);
            e.push(i as u32);
            (Monomial::from_exponents(&e), c.clone())
        });
        MultiPoly::from_terms(ring, terms)
    }
}

/// Checks `E(z, s)` against a numeric sample up to scaling.
fn matches(e: &MultiPoly, sample: &Sample) -> bool {
    let nz = sample.z.len();
    let assign: Vec<(usize, Rational)> = sample.z.iter().cloned().enumerate().collect();
    let spec = e.eval_partial(&assign);
    let coeffs: Vec<Rational> = spec.coeffs_in(nz).iter().map(MultiPoly::constant_term).collect();
    if coeffs.len() != sample.r.len() {
        return false;
    }
    let lead = coeffs.last().expect("nonempty");
    !lead.is_zero() && coeffs.iter().zip(&sample.r).all(|(c, r)| &(c / lead) == r)
}

/// ED polynomial of `spec` at `u` over `out` (parameters, symbolic data
/// coordinates, then `s`), reconstructed from numeric specializations.
pub(crate) fn interpolate_ed_polynomial(spec: &VarietySpec, u: &DataPoint, out: &Ring, seed: u64) -> Result<MultiPoly> {
    let mut slots: Vec<Slot> = spec.params().into_iter().map(Slot::Param).collect();
    if u.is_symbolic() {
        slots.extend((0..spec.n()).map(Slot::Data));
    }
    let k = slots.len();
    let names: Vec<(String, VarClass)> =
        spec.ambient().iter().map(|&i| (spec.ring().name(i).to_string(), VarClass::Ambient)).collect();
    let mut prob = Problem { spec, u, slots, numeric_ring: VariableRing::new(names)?, rng: ChaCha8Rng::seed_from_u64(seed) };

    let mut samples: Vec<Sample> = Vec::new();
    let mut misses = 0usize;
    let mut draw = |prob: &mut Problem, samples: &mut Vec<Sample>, want: usize| -> Result<()> {
        while samples.len() < want {
            match prob.draw()? {
                Some(s) => samples.push(s),
                None => {
                    misses += 1;
                    if misses > 20 + samples.len() {
                        return Err(Error::Degenerate("too many degenerate specializations".into()));
                    }
                }
            }
        }
        Ok(())
    };
    draw(&mut prob, &mut samples, 5)?;
    // the generic degree is the largest observed one
    let d = samples.iter().map(|s| s.r.len() - 1).max().expect("samples");
    if d == 0 {
        return Err(Error::Degenerate("the elimination ideal does not involve s".into()));
    }
    samples.retain(|s| s.r.len() == d + 1);

    let mut primes = primes();
    let first = primes.next().expect("prime");
    for deg in 0..=MAX_DEGREE {
        let ansatz = Ansatz { exps: exponents_up_to(k, deg), d };
        let n = ansatz.unknowns();
        if n > MAX_UNKNOWNS {
            return Err(Error::Limit(format!(
                "interpolation ansatz of total degree {deg} needs {n} unknowns (limit {MAX_UNKNOWNS})"
            )));
        }
        let want = n.div_ceil(d) + 3;
        let mut kernel = Vec::new();
        for _ in 0..3 {
            draw(&mut prob, &mut samples, want)?;
            samples.retain(|s| s.r.len() == d + 1);
            let rows = ansatz.rows_mod(&samples, first).ok_or_else(|| Error::Degenerate("sample not reducible".into()))?;
            kernel = kernel_mod(rows, n, first);
            if kernel.len() <= 1 {
                break;
            }
            let more = samples.len() + 4;
            draw(&mut prob, &mut samples, more)?;
        }
        if kernel.len() != 1 {
            continue;
        }
        let pivot = kernel[0].iter().position(|&c| c != 0).expect("nonzero kernel vector");
        return lift(&ansatz, &samples, &mut prob, out, pivot, std::iter::once(first).chain(primes));
    }
    Err(Error::Limit(format!("no one-dimensional interpolation kernel up to total degree {MAX_DEGREE}")))
}

/// Multi-modular lift of the one-dimensional kernel, normalized to 1 at
/// `pivot`, followed by exact verification.
fn lift(
    ansatz: &Ansatz,
    samples: &[Sample],
    prob: &mut Problem,
    out: &Ring,
    pivot: usize,
    primes: impl Iterator<Item = u64>,
) -> Result<MultiPoly> {
    let n = ansatz.unknowns();
    let mut modulus = BigInt::one();
    let mut residues = vec![BigInt::zero(); n];
    let mut previous: Option<Vec<Rational>> = None;
    for p in primes.take(MAX_PRIMES) {
        let Some(rows) = ansatz.rows_mod(samples, p) else {
            continue;
        };
        let kernel = kernel_mod(rows, n, p);
        if kernel.len() != 1 || kernel[0][pivot] == 0 {
            continue;
        }
        let inv = inv_mod(kernel[0][pivot], p);
        let pb = BigInt::from(p);
        // x ≡ residues (mod modulus), x ≡ v (mod p)
        let m_inv_p = BigInt::from(inv_mod(int_mod(&modulus, p), p));
        for (res, &v) in residues.iter_mut().zip(&kernel[0]) {
            let v = BigInt::from(v * inv % p);
            let t = ((v - &*res) * &m_inv_p).mod_floor(&pb);
            *res += &modulus * t;
        }
        modulus *= &pb;
        let current: Option<Vec<Rational>> = residues.iter().map(|r| rational_reconstruction(r, &modulus)).collect();
        if let (Some(cur), Some(prev)) = (&current, &previous) {
            if cur == prev {
                let e = ansatz.polynomial(out, cur);
                if samples.iter().all(|s| matches(&e, s)) && fresh_checks(prob, &e)? {
                    return Ok(e);
                }
            }
        }
        previous = current;
    }
    Err(Error::Limit(format!("multi-modular lift did not stabilize within {MAX_PRIMES} primes")))
}

fn fresh_checks(prob: &mut Problem, e: &MultiPoly) -> Result<bool> {
    let mut done = 0;
    let mut tries = 0;
    while done < FRESH_CHECKS && tries < 4 * FRESH_CHECKS {
        tries += 1;
        if let Some(s) = prob.draw()? {
            if s.r.len() == e.degree_in(e.ring().len() - 1) as usize + 1 {
                if !matches(e, &s) {
                    return Ok(false);
                }
                done += 1;
            }
        }
    }
    Ok(done == FRESH_CHECKS)
}
