use std::collections::BTreeMap;

use num_traits::Zero;
use smallvec::SmallVec;

use super::monomial::{Monomial, MonomialOrder};
use super::multipoly::MultiPoly;
use super::rational::Rational;
use super::ring::same_ring;
use crate::error::{Error, Result};

type Key = SmallVec<[i64; 16]>;

/// Multivariate division: returns `(q, r)` with `f = sum q_i g_i + r` and no
/// term of `r` divisible by any leading term of the `g_i` under `ord`.
pub fn divmod_multi(
    f: &MultiPoly,
    divisors: &[MultiPoly],
    ord: &MonomialOrder,
) -> Result<(Vec<MultiPoly>, MultiPoly)> {
    if divisors.iter().any(MultiPoly::is_zero) {
        return Err(Error::ZeroPolynomial);
    }
    if let Some(g) = divisors.iter().find(|g| !same_ring(g.ring(), f.ring())) {
        return Err(Error::RingMismatch(format!("divisor over {}", g.ring())));
    }
    let ring = f.ring();
    let leads: Vec<(Monomial, Rational)> = divisors
        .iter()
        .map(|g| {
            let (m, c) = g.leading_term(ord).expect("nonzero");
            (m.clone(), c.clone())
        })
        .collect();
    let mut p: BTreeMap<Key, (Monomial, Rational)> =
        f.terms().iter().map(|(m, c)| (ord.key(m), (m.clone(), c.clone()))).collect();
    let mut quots: Vec<Vec<(Monomial, Rational)>> = vec![Vec::new(); divisors.len()];
    let mut rem: Vec<(Monomial, Rational)> = Vec::new();
    while let Some((_, (m, c))) = p.pop_last() {
        let hit = leads.iter().enumerate().find_map(|(i, (lm, lc))| m.div(lm).map(|q| (i, q, lc)));
        match hit {
            Some((i, qm, lc)) => {
                let qc = &c / lc;
                for (gm, gc) in divisors[i].terms() {
                    let mm = gm.mul(&qm);
                    if mm == m {
                        continue;
                    }
                    let k = ord.key(&mm);
                    let delta = &qc * gc;
                    match p.entry(k) {
                        std::collections::btree_map::Entry::Occupied(mut e) => {
                            e.get_mut().1 -= delta;
                            if e.get().1.is_zero() {
                                e.remove();
                            }
                        }
                        std::collections::btree_map::Entry::Vacant(e) => {
                            e.insert((mm, -delta));
                        }
                    }
                }
                quots[i].push((qm, qc));
            }
            None => rem.push((m, c)),
        }
    }
    let quots = quots.into_iter().map(|t| MultiPoly::from_terms(ring, t)).collect();
    Ok((quots, MultiPoly::from_terms(ring, rem)))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::ring::{VarClass, VariableRing};

    #[test]
    fn division_examples() {
        let r = VariableRing::uniform(["x", "y"], VarClass::Ambient).unwrap();
        let x = MultiPoly::var(&r, 0);
        let y = MultiPoly::var(&r, 1);
        let one = MultiPoly::one(&r);

        let (q, rem) = divmod_multi(&(&x.pow(2) - &one), &[&x - &one], &MonomialOrder::Lex).unwrap();
        assert_eq!(q[0], &x + &one);
        assert!(rem.is_zero());

        let (q, rem) = divmod_multi(&x, &[x.pow(2)], &MonomialOrder::Lex).unwrap();
        assert!(q[0].is_zero());
        assert_eq!(rem, x);

        // hand long division: x^2 y + x y^2 = (x + y)(xy - 1) + (x + y)
        let f = &(&x.pow(2) * &y) + &(&x * &y.pow(2));
        let (q, rem) = divmod_multi(&f, &[&(&x * &y) - &one], &MonomialOrder::Lex).unwrap();
        assert_eq!(q[0], &x + &y);
        assert_eq!(rem, &x + &y);

        assert_eq!(divmod_multi(&f, &[MultiPoly::zero(&r)], &MonomialOrder::Lex), Err(Error::ZeroPolynomial));
    }
}
