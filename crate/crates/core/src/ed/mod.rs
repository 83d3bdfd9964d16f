//! Critical ideals, ED polynomials, ED degrees, dual varieties and the
//! structural checks built on them.

mod checks;
mod dual;
mod edpoly;
mod interpolate;
mod pipeline;
mod spec;

pub use checks::{
    duality_reflection_check, ed_poly_discriminant, grading_violations, invariance_suite, leading_term,
    lowest_term, lowest_term_factor_check, projective_closure, projective_closure_check, union_check,
    ClosureReport, ComparisonReport, FactorReport, GradingViolation, Transform, UnionReport,
};
pub use dual::dual_variety;
pub use edpoly::EdPoly;
pub use interpolate::MAX_UNKNOWNS;
pub use pipeline::{
    contained_in_isotropic_quadric, critical_ideal, ed_degree, ed_polynomial, jacobian, random_point,
    random_rational, singular_ideal, EdDegreeReport, EdDegreeSample, EdResult, ED_DEGREE_SAMPLES,
};
pub use spec::{DataPoint, VarietySpec};
