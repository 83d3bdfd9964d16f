//! Shared inputs for the benchmarks.

use edvar::closed::MatrixPoint;
use edvar::ed::VarietySpec;
use edvar::int;
use edvar::text::parse_variety;

pub const CIRCLE: &str = "vars x,y; gens x^2+y^2-1; codim 1";
pub const HYPERBOLA: &str = "vars x,y; gens 4*x^2-9*y^2-1; codim 1";
pub const CARDIOID: &str = "vars x,y; gens (x^2+y^2-2*x)^2-4*(x^2+y^2); codim 1";
pub const RANK_ONE_2X3: &str = "vars a,b,c,d,e,f; gens a*e-b*d, a*f-c*d, b*f-c*e; codim 2; homogeneous";

pub fn spec(text: &str) -> VarietySpec {
    parse_variety(text).expect("benchmark spec parses").spec
}

pub fn matrix(m: usize, n: usize, entries: &[i64]) -> MatrixPoint {
    MatrixPoint::new(m, n, entries.iter().map(|&v| int(v)).collect()).expect("benchmark matrix")
}
