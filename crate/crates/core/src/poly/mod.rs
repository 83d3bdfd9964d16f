//! Exact sparse multivariate polynomial arithmetic over the rationals.

pub mod division;
pub mod gcd;
pub mod matrix;
pub(crate) mod modp;
pub mod monomial;
pub mod multipoly;
pub mod rational;
pub mod resultant;
pub mod ring;

pub use division::divmod_multi;
pub use gcd::{equal_up_to_scalar, multigcd, multigcd_all, multilcm, primitive_normalize, squarefree_part};
pub use matrix::PolyMatrix;
pub use monomial::{Monomial, MonomialOrder};
pub use multipoly::MultiPoly;
pub use rational::{int, parse_rational, rat, Rational};
pub use resultant::{discriminant, resultant};
pub use ring::{Ring, VarClass, VariableRing};
