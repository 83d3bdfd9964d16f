use edvar::ideal::{with_pair_budget, QuotientDim};
use edvar::text::parse_variety;
use edvar::{ed, rat, Error, Ideal, Monomial, MonomialOrder, MultiPoly, Ring, VarClass, VariableRing};
use proptest::prelude::*;

fn ring() -> Ring {
    VariableRing::uniform(["x", "y", "z"], VarClass::Ambient).unwrap()
}

type Term = ([u32; 3], i64);

fn generator() -> impl Strategy<Value = Vec<Term>> {
    prop::collection::vec(([0u32..3, 0u32..2, 0u32..2], -4i64..=4), 1..4)
}

fn build(ring: &Ring, ts: &[Term]) -> MultiPoly {
    MultiPoly::from_terms(ring, ts.iter().map(|(e, c)| (Monomial::from_exponents(e), rat(*c, 1))))
}

fn ideal(gens: &[Vec<Term>]) -> Option<Ideal> {
    let r = ring();
    let gens: Vec<MultiPoly> = gens.iter().map(|g| build(&r, g)).filter(|g| !g.is_zero()).collect();
    if gens.is_empty() {
        return None;
    }
    Ideal::new(&r, gens).ok()
}

/// Runs `f` under a small pair budget; `None` when the budget runs out.
fn bounded<T>(f: impl FnOnce() -> edvar::Result<T>) -> Option<T> {
    match with_pair_budget(400, f) {
        Ok(v) => Some(v),
        Err(Error::Budget { .. }) => None,
        Err(e) => panic!("{e}"),
    }
}

fn s_polynomial(f: &MultiPoly, g: &MultiPoly, ord: &MonomialOrder) -> MultiPoly {
    let (mf, cf) = f.leading_term(ord).unwrap();
    let (mg, cg) = g.leading_term(ord).unwrap();
    let l = mf.lcm(mg);
    &f.mul_term(&l.div(mf).unwrap(), &(cf.recip())) - &g.mul_term(&l.div(mg).unwrap(), &(cg.recip()))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(32))]

    #[test]
    fn reduced_basis_is_canonical(gens in prop::collection::vec(generator(), 1..4), k in -5i64..=5, lex in any::<bool>()) {
        prop_assume!(k != 0);
        let Some(i) = ideal(&gens) else { return Ok(()) };
        let ord = if lex { MonomialOrder::Lex } else { MonomialOrder::Grevlex };
        let mut shuffled: Vec<MultiPoly> = i.gens().iter().rev().map(|g| g.scale(&rat(k, 3))).collect();
        shuffled.rotate_left(1);
        let j = Ideal::new(i.ring(), shuffled).unwrap();
        let (Some(a), Some(b)) = (bounded(|| Ok(i.reduced_basis(&ord)?.into_owned())), bounded(|| Ok(j.reduced_basis(&ord)?.into_owned()))) else {
            return Ok(());
        };
        prop_assert_eq!(a, b);
    }

    #[test]
    fn groebner_basis_is_closed(gens in prop::collection::vec(generator(), 1..4)) {
        let Some(i) = ideal(&gens) else { return Ok(()) };
        let ord = MonomialOrder::Grevlex;
        let Some(basis) = bounded(|| Ok(i.reduced_basis(&ord)?.into_owned())) else { return Ok(()) };
        let g = Ideal::new(i.ring(), basis.clone()).unwrap();
        for (a, p) in basis.iter().enumerate() {
            for q in &basis[a + 1..] {
                let s = s_polynomial(p, q, &ord);
                prop_assert!(bounded(|| g.normal_form(&s, &ord)).is_none_or(|nf| nf.is_zero()));
            }
        }
        for f in i.gens() {
            prop_assert!(g.normal_form(f, &ord).unwrap().is_zero());
        }
    }

    #[test]
    fn elimination_composes(gens in prop::collection::vec(generator(), 1..4)) {
        let Some(i) = ideal(&gens) else { return Ok(()) };
        let Some(both) = bounded(|| i.eliminate(&[0, 1])) else { return Ok(()) };
        let Some(step) = bounded(|| i.eliminate(&[0])?.eliminate(&[1])) else { return Ok(()) };
        prop_assert!(bounded(|| both.same_ideal(&step)).unwrap_or(true));
        for g in both.gens() {
            prop_assert!(!g.uses_var(0) && !g.uses_var(1));
            prop_assert!(bounded(|| i.contains(g)).unwrap_or(true));
        }
    }

    #[test]
    fn saturation_contains_and_is_idempotent(gens in prop::collection::vec(generator(), 1..3), v in 0usize..3) {
        let Some(i) = ideal(&gens) else { return Ok(()) };
        let x = MultiPoly::var(i.ring(), v);
        let Some(s1) = bounded(|| i.saturate_by(&x)) else { return Ok(()) };
        let Some(s2) = bounded(|| s1.saturate_by(&x)) else { return Ok(()) };
        prop_assert!(bounded(|| s1.same_ideal(&s2)).unwrap_or(true));
        prop_assert!(bounded(|| s1.contains_ideal(&i)).unwrap_or(true));
    }

    #[test]
    fn intersection_lies_in_both(a in prop::collection::vec(generator(), 1..3), b in prop::collection::vec(generator(), 1..3)) {
        let (Some(i), Some(j)) = (ideal(&a), ideal(&b)) else { return Ok(()) };
        let Some(k) = bounded(|| i.intersect(&j)) else { return Ok(()) };
        prop_assert!(bounded(|| i.contains_ideal(&k)).unwrap_or(true));
        prop_assert!(bounded(|| j.contains_ideal(&k)).unwrap_or(true));
        let prod: Vec<MultiPoly> = i.gens().iter().flat_map(|f| j.gens().iter().map(move |g| f * g)).collect();
        for p in &prod {
            prop_assert!(bounded(|| k.contains(p)).unwrap_or(true));
        }
    }
}

#[test]
fn quotient_dimension_counts_critical_points() {
    let cases = [
        ("vars x,y; gens x^2+y^2-1; codim 1", 2),
        ("vars x,y; gens y-x^2; codim 1", 3),
        ("vars x,y; gens 1/4*x^2+1/9*y^2-1; codim 1", 4),
        ("vars x,y; gens (x^2+y^2-2*x)^2-4*(x^2+y^2); codim 1", 3),
        ("vars a,b,c,d; gens a*d-b*c; codim 1", 2),
    ];
    for (text, want) in cases {
        let x = parse_variety(text).unwrap().spec;
        let r = ed::ed_degree(&x, 11, true).unwrap();
        assert_eq!(r.degree, want, "{text}");
        for s in &r.samples {
            assert_eq!(s.quotient_dim, Some(QuotientDim::Finite(want as usize)), "{text}");
        }
    }
}

#[test]
fn unit_and_zero_ideals() {
    let r = ring();
    assert!(Ideal::unit(&r).is_unit().unwrap());
    assert!(!Ideal::zero(&r).is_unit().unwrap());
    let x = MultiPoly::var(&r, 0);
    let i = Ideal::new(&r, vec![x.clone(), &x - &MultiPoly::one(&r)]).unwrap();
    assert!(i.is_unit().unwrap());
}

#[test]
fn minimal_polynomial_of_a_point_set() {
    let r = ring();
    let v = |k| MultiPoly::var(&r, k);
    let c = |n| MultiPoly::from_int(&r, n);
    // {(1,0,0), (2,0,0), (3,0,0)}
    let i = Ideal::new(&r, vec![&(&(&v(0) - &c(1)) * &(&v(0) - &c(2))) * &(&v(0) - &c(3)), v(1), v(2)]).unwrap();
    let m = i.minimal_polynomial(0).unwrap().unwrap();
    assert_eq!(m.degree_in(0), 3);
    assert_eq!(i.quotient_dimension().unwrap(), QuotientDim::Finite(3));
}
