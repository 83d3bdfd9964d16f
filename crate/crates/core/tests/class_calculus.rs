use edvar::class::{self, CMData, CMTable};
use edvar::closed;
use edvar::ed::{self, DataPoint};
use edvar::text::parse_variety;
use proptest::prelude::*;

fn cm(s: &str) -> CMData {
    s.parse().unwrap()
}

/// Chern classes of a smooth degree-`d` hypersurface of `P^N`: the
/// coefficients of `d·(1+h)^{N+1}/(1+dh)` up to `h^{N-1}`.
fn smooth_hypersurface(big_n: usize, d: i64) -> CMData {
    let m = big_n - 1;
    let binom = |n: usize, k: usize| (0..k).fold(1i64, |acc, i| acc * (n - i) as i64 / (i + 1) as i64);
    let degrees = (0..=m)
        .map(|i| d * (0..=i).map(|j| binom(big_n + 1, j) * (-d).pow((i - j) as u32)).sum::<i64>())
        .collect();
    CMData::new(m, big_n + 1, degrees).unwrap()
}

#[test]
fn small_examples() {
    let conic = cm("m=1;n=3;deg=2,2");
    assert_eq!(class::ed_degree_cm(&conic), 4);
    assert_eq!(class::polar_classes(&conic).unwrap(), vec![2, 2]);
    assert_eq!(class::dual_degree_cm(&conic).unwrap(), 2);
    assert_eq!(class::quadric_section_cm(&conic).unwrap(), cm("m=0;n=3;deg=4"));
    let line = cm("m=1;n=3;deg=1,2");
    assert_eq!(class::ed_degree_cm(&line), 1);
    assert_eq!(class::polar_classes(&line).unwrap(), vec![0, 1]);
    assert!(matches!(class::dual_degree_cm(&line), Err(edvar::Error::Degenerate(_))));
    assert_eq!(class::ed_degree_cm(&cm("m=0;n=3;deg=1")), 1);
    assert_eq!(class::dual_degree_cm(&cm("m=1;n=4;deg=3,2")).unwrap(), 4);
}

#[test]
fn surface_section_middle_term() {
    for (d, e) in [(5, 7), (2, 4), (4, 9)] {
        let s = CMData::new(2, 4, vec![d, e, 3]).unwrap();
        let sec = class::quadric_section_cm(&s).unwrap();
        assert_eq!(sec.degrees(), &[2 * d, 2 * (e - 2 * d)]);
    }
}

#[test]
fn lemma_examples() {
    let r = class::lemma_two_sum(3, 1).unwrap();
    assert_eq!((r.lhs, r.rhs), (7, 7));
    for m in 0..10 {
        let r = class::lemma_two_sum(m, m).unwrap();
        assert_eq!((r.lhs, r.rhs), (1, 1));
    }
    assert!(class::lemma_two_sum(2, 3).is_err());
}

#[test]
fn bundled_identities() {
    let table = CMTable::bundled();
    for name in ["conic", "hyperplane", "twisted_cubic", "rank_one_2x3"] {
        let case = table.two_ed.iter().find(|c| c.name == name).unwrap();
        let r = table.run_case(case).unwrap();
        assert!(r.report.holds && r.actual_holds && r.report.section_dual_even, "{name}: {r:?}");
    }
    let frob = table.two_ed.iter().find(|c| c.name == "veronese_frobenius").unwrap();
    let r = table.run_case(frob).unwrap();
    assert!(!r.transversal);
    assert!(!r.actual_holds);
    assert_eq!(r.actual_lhs, 6);
}

#[test]
fn table_ed_degrees_match_elimination() {
    // a random ternary quadric cone is self-dual up to a linear change and
    // transversal to the isotropic quadric; a plane has a point as dual
    let table = CMTable::bundled();
    let cone = parse_variety("vars x,y,z; gens 3*x^2-2*x*y+5*y^2+x*z-7*z^2+4*y*z; codim 1").unwrap().spec;
    let r = ed::ed_degree(&cone, 5, true).unwrap();
    assert!(r.agree);
    assert_eq!(r.degree as i64, class::ed_degree_cm(table.get("conic").unwrap()));
    let plane = parse_variety("vars x,y,z; gens 2*x-3*y+z; codim 1").unwrap().spec;
    assert_eq!(ed::ed_degree(&plane, 5, true).unwrap().degree as i64, class::ed_degree_cm(table.get("point").unwrap()));
}

#[test]
fn section_dual_matches_lowest_term_quotient() {
    // deg g of the hyperbola cone against deg((X∨ ∩ Q)∨) for the conic
    let x = parse_variety("vars x0,x1,x2; gens 4*x1^2-9*x2^2-x0^2; codim 1").unwrap().spec;
    let e = ed::ed_polynomial(&x, &DataPoint::Symbolic).unwrap().edpoly;
    let r = ed::lowest_term_factor_check(&x, &e).unwrap();
    let conic = CMTable::bundled().get("conic").unwrap().clone();
    let section = class::quadric_section_cm(&conic).unwrap();
    assert_eq!(r.deg_g as i64, class::dual_degree_cm(&section).unwrap());
}

proptest! {
    #[test]
    fn polar_classes_sum_to_ed_degree(big_n in 2usize..7, d in 1i64..7) {
        let y = smooth_hypersurface(big_n, d);
        let delta = class::polar_classes(&y).unwrap();
        prop_assert_eq!(delta.iter().sum::<i64>(), class::ed_degree_cm(&y));
    }

    #[test]
    fn smooth_hypersurfaces_match_generic_count(big_n in 2usize..7, d in 2i64..7) {
        let y = smooth_hypersurface(big_n, d);
        let generic = closed::generic_hypersurface_ed_degree(big_n as u64 + 1, d as u64).unwrap();
        prop_assert_eq!(class::ed_degree_cm(&y), generic as i64);
        prop_assert_eq!(class::dual_degree_cm(&y).unwrap(), d * (d - 1).pow(big_n as u32 - 1));
    }

    #[test]
    fn hyperplanes_have_ed_degree_one(big_n in 2usize..9) {
        let y = smooth_hypersurface(big_n, 1);
        prop_assert_eq!(class::ed_degree_cm(&y), 1);
        prop_assert!(class::dual_degree_cm(&y).is_err());
    }

    #[test]
    fn smooth_curves_match_closed_form(n in 3usize..8, d in 1i64..30, genus in 0i64..20) {
        // polar classes are nonnegative exactly when 2g - 2 + 2d >= 0
        let y = CMData::smooth_curve(n, d, genus).unwrap();
        let ct = class::catanese_trifogli_curve(d, genus);
        prop_assert_eq!(class::ed_degree_cm(&y), ct);
        if let Ok(delta) = class::polar_classes(&y) {
            prop_assert_eq!(delta.iter().sum::<i64>(), ct);
            prop_assert_eq!(delta[1], d);
        }
    }

    #[test]
    fn quadric_sections_are_even(m in 1usize..5, seed in prop::collection::vec(1i64..50, 5)) {
        let y = CMData::new(m, m + 3, seed[..=m].to_vec()).unwrap();
        let sec = class::quadric_section_cm(&y).unwrap();
        prop_assert_eq!(sec.dim(), m - 1);
        prop_assert_eq!(sec.degree(), 2 * y.degree());
        prop_assert!(sec.degrees().iter().all(|c| c % 2 == 0));
    }

    #[test]
    fn lemma_holds(m in 0usize..=60, i in 0usize..=60) {
        prop_assume!(i <= m);
        let r = class::lemma_two_sum(m, i).unwrap();
        prop_assert_eq!(r.lhs, r.rhs);
    }

    #[test]
    fn text_form_round_trips(m in 0usize..4, extra in 2usize..4, seed in prop::collection::vec(1i64..50, 4)) {
        let y = CMData::new(m, m + extra, seed[..=m].to_vec()).unwrap();
        prop_assert_eq!(y.to_string().parse::<CMData>().unwrap(), y);
    }
}
