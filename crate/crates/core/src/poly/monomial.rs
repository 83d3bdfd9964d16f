use std::cmp::Ordering;

use smallvec::SmallVec;

pub(crate) type ExpVec = SmallVec<[u32; 12]>;

/// Dense exponent vector over a ring of fixed size. Zero exponents are
/// implicit in the representation: two monomials are equal iff their
/// exponent maps agree.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Monomial(pub(crate) ExpVec);

impl Monomial {
    pub fn one(nvars: usize) -> Self {
        Monomial(smallvec::smallvec![0; nvars])
    }

    pub fn var(nvars: usize, i: usize, exp: u32) -> Self {
        let mut m = Self::one(nvars);
        m.0[i] = exp;
        m
    }

    pub fn from_exponents(exps: &[u32]) -> Self {
        Monomial(exps.iter().copied().collect())
    }

    pub fn exponents(&self) -> &[u32] {
        &self.0
    }

    pub fn nvars(&self) -> usize {
        self.0.len()
    }

    pub fn degree(&self) -> u32 {
        self.0.iter().sum()
    }

    pub fn deg_in(&self, i: usize) -> u32 {
        self.0[i]
    }

    pub fn is_one(&self) -> bool {
        self.0.iter().all(|&e| e == 0)
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        Monomial(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }

    /// `self | other`
    pub fn divides(&self, other: &Monomial) -> bool {
        self.0.iter().zip(&other.0).all(|(a, b)| a <= b)
    }

    /// `self / other` when `other | self`.
    pub fn div(&self, other: &Monomial) -> Option<Monomial> {
        let mut out = ExpVec::with_capacity(self.0.len());
        for (a, b) in self.0.iter().zip(&other.0) {
            if a < b {
                return None;
            }
            out.push(a - b);
        }
        Some(Monomial(out))
    }

    pub fn lcm(&self, other: &Monomial) -> Monomial {
        Monomial(self.0.iter().zip(&other.0).map(|(a, b)| *a.max(b)).collect())
    }

    pub fn gcd(&self, other: &Monomial) -> Monomial {
        Monomial(self.0.iter().zip(&other.0).map(|(a, b)| *a.min(b)).collect())
    }

    pub fn is_coprime(&self, other: &Monomial) -> bool {
        self.0.iter().zip(&other.0).all(|(a, b)| *a == 0 || *b == 0)
    }
}

/// Monomial orders. Variable index 0 is the largest variable.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum MonomialOrder {
    Lex,
    Grevlex,
    /// Two-block elimination order: monomials are compared by grevlex on
    /// the variables flagged `true` first, ties broken by grevlex on the
    /// remaining variables.
    Block(Vec<bool>),
}

fn grevlex_masked(a: &[u32], b: &[u32], mask: impl Fn(usize) -> bool) -> Ordering {
    let mut da = 0u64;
    let mut db = 0u64;
    for i in 0..a.len() {
        if mask(i) {
            da += a[i] as u64;
            db += b[i] as u64;
        }
    }
    if da != db {
        return da.cmp(&db);
    }
    for i in (0..a.len()).rev() {
        if mask(i) && a[i] != b[i] {
            return b[i].cmp(&a[i]);
        }
    }
    Ordering::Equal
}

impl MonomialOrder {
    /// Block order eliminating the variables at `indices`.
    pub fn elimination(nvars: usize, indices: &[usize]) -> Self {
        let mut mask = vec![false; nvars];
        for &i in indices {
            mask[i] = true;
        }
        MonomialOrder::Block(mask)
    }

    pub fn cmp(&self, a: &Monomial, b: &Monomial) -> Ordering {
        let (a, b) = (&a.0[..], &b.0[..]);
        match self {
            MonomialOrder::Lex => a.cmp(b),
            MonomialOrder::Grevlex => grevlex_masked(a, b, |_| true),
            MonomialOrder::Block(mask) => grevlex_masked(a, b, |i| mask[i])
                .then_with(|| grevlex_masked(a, b, |i| !mask[i])),
        }
    }

    /// Integer key whose lexicographic order agrees with `self.cmp`.
    pub(crate) fn key(&self, m: &Monomial) -> SmallVec<[i64; 16]> {
        let e = &m.0;
        let grevlex_key = |out: &mut SmallVec<[i64; 16]>, mask: &dyn Fn(usize) -> bool| {
            out.push((0..e.len()).filter(|&i| mask(i)).map(|i| e[i] as i64).sum());
            for i in (0..e.len()).rev() {
                if mask(i) {
                    out.push(-(e[i] as i64));
                }
            }
        };
        let mut out = SmallVec::new();
        match self {
            MonomialOrder::Lex => out.extend(e.iter().map(|&x| x as i64)),
            MonomialOrder::Grevlex => grevlex_key(&mut out, &|_| true),
            MonomialOrder::Block(mask) => {
                grevlex_key(&mut out, &|i| mask[i]);
                grevlex_key(&mut out, &|i| !mask[i]);
            }
        }
        out
    }
}
