use edvar::ed::{self, DataPoint, Transform, VarietySpec};
use edvar::ideal::{Ideal, QuotientDim};
use edvar::text::{parse_polynomial, parse_variety};
use edvar::{equal_up_to_scalar, int, rat, EdPoly, MultiPoly, Rational};
use num_traits::Zero;

fn spec(text: &str) -> VarietySpec {
    parse_variety(text).unwrap().spec
}

fn poly(x: &VarietySpec, text: &str) -> MultiPoly {
    parse_polynomial(x.ring(), text).unwrap()
}

fn ideal(x: &VarietySpec, gens: &[&str]) -> Ideal {
    Ideal::new(x.ring(), gens.iter().map(|g| poly(x, g)).collect()).unwrap()
}

fn edpoly_text(e: &EdPoly, text: &str) -> MultiPoly {
    parse_polynomial(e.ring(), text).unwrap()
}

fn numeric(x: &VarietySpec, u: &[i64]) -> EdPoly {
    ed::ed_polynomial(x, &DataPoint::ints(u)).unwrap().edpoly
}

#[test]
fn jacobian_examples() {
    let circle = spec("vars x,y; gens x^2+y^2-1; codim 1");
    let j = ed::jacobian(&circle);
    assert_eq!(j.entries(), &[poly(&circle, "2*x"), poly(&circle, "2*y")]);
    let det = spec("vars x1,x2,x3,x4; gens x1*x4-x2*x3; codim 1");
    let j = ed::jacobian(&det);
    let want: Vec<MultiPoly> = ["x4", "-x3", "-x2", "x1"].iter().map(|t| poly(&det, t)).collect();
    assert_eq!(j.entries(), &want[..]);
}

#[test]
fn singular_locus_examples() {
    let circle = spec("vars x,y; gens x^2+y^2-1; codim 1");
    assert!(ed::singular_ideal(&circle).unwrap().is_unit().unwrap());
    let cardioid = spec("vars x,y; gens (x^2+y^2-2*x)^2-4*(x^2+y^2); codim 1");
    let sing = ed::singular_ideal(&cardioid).unwrap();
    assert!(sing.gens().iter().all(|g| g.eval(&[int(0), int(0)]).unwrap().is_zero()));
    let node = spec("vars x,y; gens x*y; codim 1");
    let sing = ed::singular_ideal(&node).unwrap();
    assert!(sing.same_ideal(&ideal(&node, &["x", "y"])).unwrap());
}

#[test]
fn critical_ideal_examples() {
    let circle = spec("vars x,y; gens x^2+y^2-1; codim 1");
    let crit = ed::critical_ideal(&circle, &DataPoint::ints(&[2, 0])).unwrap();
    assert_eq!(crit.quotient_dimension().unwrap(), QuotientDim::Finite(2));
    assert!(crit.same_ideal(&ideal(&circle, &["x^2-1", "y"])).unwrap());

    let line = spec("vars x,y; gens y; codim 1");
    let crit = ed::critical_ideal(&line, &DataPoint::ints(&[3, 5])).unwrap();
    assert!(crit.same_ideal(&ideal(&line, &["x-3", "y"])).unwrap());

    let origin = spec("vars x,y; gens x, y; codim 2");
    let crit = ed::critical_ideal(&origin, &DataPoint::ints(&[4, -1])).unwrap();
    assert!(crit.same_ideal(&ideal(&origin, &["x", "y"])).unwrap());
}

#[test]
fn roots_are_critical_squared_distances() {
    let circle = spec("vars x,y; gens x^2+y^2-1; codim 1");
    let u = DataPoint::ints(&[2, 0]);
    let e = ed::ed_polynomial(&circle, &u).unwrap().edpoly;
    assert_eq!(e.to_string(), "s^2-10*s+9");
    let crit = ed::critical_ideal(&circle, &u).unwrap();
    let dist = poly(&circle, "(x-2)^2+y^2");
    for (s0, on) in [(1, true), (9, true), (4, false)] {
        let with = crit.with_generators([&dist - &MultiPoly::from_int(circle.ring(), s0)]).unwrap();
        assert_eq!(!with.is_unit().unwrap(), on, "s0 = {s0}");
        assert_eq!(e.poly().eval(&[int(s0)]).unwrap().is_zero(), on);
    }
}

#[test]
fn line_edpoly_and_extreme_terms() {
    let line = spec("vars x,y; gens y; codim 1");
    let e = ed::ed_polynomial(&line, &DataPoint::Symbolic).unwrap().edpoly;
    assert_eq!(e.to_string(), "-u2^2+s");
    assert_eq!(ed::lowest_term(&e), edpoly_text(&e, "-u2^2"));
    assert_eq!(ed::leading_term(&e), edpoly_text(&e, "1"));
}

#[test]
fn dual_of_hyperplane_is_a_point() {
    let h = spec("vars x0,x1,x2; gens 2*x0+3*x1-x2; codim 1");
    let d = ed::dual_variety(&h).unwrap();
    assert_eq!(d.codim(), 2);
    let minors = ideal(&d, &["3*x0-2*x1", "-x0-2*x2", "-x1-3*x2"]);
    assert!(d.ideal().same_ideal(&minors).unwrap());
}

#[test]
fn dual_of_conic_and_self_dual_cone() {
    let conic = spec("vars x0,x1,x2; gens x0*x2-x1^2; codim 1");
    let d = ed::dual_variety(&conic).unwrap();
    assert_eq!(d.gens().len(), 1);
    assert_eq!(d.gens()[0].total_degree(), 2);
    assert!(equal_up_to_scalar(&d.gens()[0], &poly(&d, "x1^2-4*x0*x2")));

    let det = spec("vars a,b,c,d; gens a*d-b*c; codim 1");
    let dd = ed::dual_variety(&det).unwrap();
    assert!(dd.ideal().same_ideal(&det.ideal()).unwrap());
}

#[test]
fn reflection_for_hyperplane_and_point() {
    let h = spec("vars x0,x1,x2; gens x0+2*x1-2*x2; codim 1");
    let p = ed::dual_variety(&h).unwrap();
    for u in [[1, 0, 3], [2, -1, 1], [0, 5, -4]] {
        let r = ed::duality_reflection_check(&h, &p, &DataPoint::ints(&u)).unwrap();
        assert!(r.holds, "{u:?}: {} vs {}", r.lhs, r.rhs);
    }
    let affine = spec("vars x,y; gens x^2+y^2-1; codim 1");
    assert!(ed::duality_reflection_check(&affine, &affine, &DataPoint::ints(&[1, 1])).is_err());
}

#[test]
fn factor_check_hyperplane_and_rank_one() {
    let h = spec("vars x0,x1,x2; gens x0+2*x1-2*x2; codim 1");
    let e = ed::ed_polynomial(&h, &DataPoint::Symbolic).unwrap().edpoly;
    let r = ed::lowest_term_factor_check(&h, &e).unwrap();
    assert!(r.f_sq_divides && r.g.is_constant() && r.degree_identity);

    let x = spec("vars a,b,c,d,e,f; gens a*e-b*d, a*f-c*d, b*f-c*e; codim 2");
    let e = ed::ed_polynomial(&x, &DataPoint::Symbolic).unwrap().edpoly;
    assert_eq!(e.degree(), 2);
    let r = ed::lowest_term_factor_check(&x, &e).unwrap();
    assert_eq!(r.deg_g, 2 * r.ed_degree);
    assert!(r.degree_identity);
}

#[test]
fn transversal_cone_is_monic_and_graded() {
    let x = spec("vars a,b,c,d; gens a*d-b*c; codim 1");
    let e = ed::ed_polynomial(&x, &DataPoint::Symbolic).unwrap().edpoly;
    assert!(e.is_monic());
    assert!(ed::grading_violations(&e).is_empty());
    let cardioid = spec("vars x,y; gens (x^2+y^2-2*x)^2-4*(x^2+y^2); codim 1");
    let e = ed::ed_polynomial(&cardioid, &DataPoint::Symbolic).unwrap().edpoly;
    assert!(!e.is_monic());
}

#[test]
fn discriminant_examples() {
    let circle = spec("vars x,y; gens x^2+y^2-1; codim 1");
    let at = ed::ed_poly_discriminant(&numeric(&circle, &[2, 0])).unwrap();
    // (s-1)(s-9): (9-1)^2
    assert_eq!(at.as_constant(), Some(int(64)));
    let radius2 = spec("vars x,y; gens x^2+y^2-4; codim 1");
    let e = ed::ed_polynomial(&radius2, &DataPoint::Symbolic).unwrap().edpoly;
    let d = ed::ed_poly_discriminant(&e).unwrap();
    let sphere = edpoly_text(&e, "u1^2+u2^2");
    let k = d.total_degree() / 2;
    assert!(equal_up_to_scalar(&d, &sphere.pow(k)), "{d}");
    let line = spec("vars x,y; gens y; codim 1");
    let e = ed::ed_polynomial(&line, &DataPoint::Symbolic).unwrap().edpoly;
    assert!(ed::ed_poly_discriminant(&e).is_err());
}

#[test]
fn invariance_examples() {
    let circle = spec("vars x,y; gens x^2+y^2-1; codim 1");
    let ellipse = spec("vars x,y; gens x^2+4*y^2-4; codim 1");
    let rot = vec![vec![rat(3, 5), rat(-4, 5)], vec![rat(4, 5), rat(3, 5)]];
    let id = vec![vec![int(1), int(0)], vec![int(0), int(1)]];
    for x in [&circle, &ellipse] {
        for t in [
            Transform::Orthogonal(rot.clone()),
            Transform::Orthogonal(id.clone()),
            Transform::Scaling(int(2)),
            Transform::Scaling(rat(-1, 3)),
            Transform::Translation(vec![int(1), rat(1, 2)]),
        ] {
            let r = ed::invariance_suite(x, &t, &DataPoint::ints(&[2, 1])).unwrap();
            assert!(r.holds, "{t:?}: {} vs {}", r.lhs, r.rhs);
        }
    }
    let shear = vec![vec![int(1), int(1)], vec![int(0), int(1)]];
    assert!(ed::invariance_suite(&circle, &Transform::Orthogonal(shear), &DataPoint::ints(&[2, 1])).is_err());
    assert!(ed::invariance_suite(&circle, &Transform::Scaling(Rational::zero()), &DataPoint::ints(&[2, 1])).is_err());
}

#[test]
fn union_of_two_lines_is_the_product() {
    let l1 = spec("vars x,y; gens y-1; codim 1");
    let l2 = spec("vars x,y; gens x+y; codim 1");
    let r = ed::union_check(&l1, &l2, &DataPoint::ints(&[3, -2])).unwrap();
    assert!(r.holds);
    // (s - 9)(s - 1/2)
    assert_eq!(r.union.to_string(), "2*s^2-19*s+9");
    assert!(ed::union_check(&l1, &l1, &DataPoint::ints(&[3, -2])).is_err());
}

#[test]
fn projective_closure_examples() {
    let line = spec("vars x,y; gens y-1; codim 1");
    let r = ed::projective_closure_check(&line, 3).unwrap();
    assert_eq!(r.holds, Some(true));
    assert_eq!(r.lhs.unwrap().to_string(), "s-1");

    let cardioid = spec("vars x,y; gens (x^2+y^2-2*x)^2-4*(x^2+y^2); codim 1");
    let r = ed::projective_closure_check(&cardioid, 3).unwrap();
    assert!(r.skipped);
    assert_eq!((r.ed_degree, r.closure_ed_degree), (3, 7));
    assert_eq!(r.holds, None);

    // the origin is not a general point for a centred circle: every point
    // is critical, so EDpoly_{X,0} = s - 1 has lower degree than r = 2
    let circle = spec("vars x,y; gens x^2+y^2-1; codim 1");
    let r = ed::projective_closure_check(&circle, 3).unwrap();
    assert_eq!(r.lhs.unwrap().to_string(), "s-1");
    assert_eq!(r.holds, Some(false));
}

#[test]
fn parse_print_round_trip() {
    for text in [
        "vars x,y; gens x^2+y^2-1; codim 1",
        "vars x0,x1,x2; gens x0*x2-x1^2; codim 1; homogeneous",
        "vars a,b,c; gens a*c-b^2; codim 1; qform 1 0 0 0 2 0 0 0 1",
        "vars x,y; params p; gens y-p*x^2; codim 1",
        "vars a,b,c,d,e,f; gens a*e-b*d, a*f-c*d, b*f-c*e; codim 2",
    ] {
        let x = spec(text);
        let again = spec(&edvar::text::print_variety(&x));
        assert_eq!(again.gens(), x.gens(), "{text}");
        assert_eq!(again.codim(), x.codim());
        assert_eq!(again.qform(), x.qform());
        assert_eq!(again.is_homogeneous(), x.is_homogeneous());
        assert_eq!(again.ring(), x.ring());
    }
}

#[test]
fn parse_errors_carry_positions() {
    for (text, line, col) in [
        ("vars x,y; gens x^-1; codim 1", 1, 18),
        ("vars x,y\ngens 2x+y", 2, 7),
        ("vars x, 1y; gens x", 1, 9),
        ("vars x; gens x; frobnicate", 1, 17),
    ] {
        match parse_variety(text) {
            Err(edvar::Error::Parse { line: l, column: c, .. }) => assert_eq!((l, c), (line, col), "{text}"),
            other => panic!("{text}: {other:?}"),
        }
    }
}

#[test]
fn declared_codimension_mismatch_warns() {
    let parsed = parse_variety("vars x,y; gens x^2+y^2-1; codim 2").unwrap();
    assert_eq!(parsed.warnings.len(), 1);
    let parsed = parse_variety("vars x,y; gens x^2+y^2-1").unwrap();
    assert_eq!(parsed.spec.codim(), 1);
    assert!(parsed.warnings.is_empty());
}
