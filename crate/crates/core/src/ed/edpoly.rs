use std::fmt;

use crate::error::{Error, Result};
use crate::poly::{primitive_normalize, MultiPoly, Rational, Ring};

/// ED polynomial: a polynomial in the radius variable `s = t²` whose
/// coefficients live in the data coordinates (and symbolic parameters).
/// Always stored in canonical scalar normalization.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct EdPoly {
    poly: MultiPoly,
    s: usize,
}

impl EdPoly {
    /// Wraps and normalizes `poly`; its ring must declare a radius variable.
    pub fn new(poly: &MultiPoly) -> Result<Self> {
        let s = poly.ring().radius().ok_or_else(|| Error::invalid(format!("{} has no radius variable", poly.ring())))?;
        let poly = primitive_normalize(poly)?;
        Ok(EdPoly { poly, s })
    }

    pub fn poly(&self) -> &MultiPoly {
        &self.poly
    }

    pub fn ring(&self) -> &Ring {
        self.poly.ring()
    }

    /// Index of `s` in the ring.
    pub fn radius(&self) -> usize {
        self.s
    }

    /// Degree in `s`.
    pub fn degree(&self) -> u32 {
        self.poly.degree_in(self.s)
    }

    /// `p_0, ..., p_d` with `E = Σ p_i s^i`.
    pub fn coeffs(&self) -> Vec<MultiPoly> {
        self.poly.coeffs_in(self.s)
    }

    pub fn coeff(&self, i: u32) -> MultiPoly {
        self.coeffs().into_iter().nth(i as usize).unwrap_or_else(|| MultiPoly::zero(self.ring()))
    }

    /// `p_0`, the value at `s = 0`.
    pub fn lowest(&self) -> MultiPoly {
        self.coeff(0)
    }

    /// `p_d`, the coefficient of the top power of `s`.
    pub fn leading(&self) -> MultiPoly {
        self.poly.leading_coeff_in(self.s)
    }

    /// True when the leading coefficient is a nonzero constant.
    pub fn is_monic(&self) -> bool {
        self.leading().is_constant()
    }

    /// True when only `s` occurs (numeric data point, no parameters).
    pub fn is_numeric(&self) -> bool {
        (0..self.ring().len()).all(|i| i == self.s || !self.poly.uses_var(i))
    }

    /// Rational coefficients `p_0..p_d` of a numeric ED polynomial.
    pub fn numeric_coeffs(&self) -> Option<Vec<Rational>> {
        if !self.is_numeric() {
            return None;
        }
        Some(self.coeffs().iter().map(MultiPoly::constant_term).collect())
    }

    /// `E(image)` with `image` a polynomial over the same ring.
    pub fn substitute_s(&self, image: &MultiPoly) -> MultiPoly {
        self.poly.substitute(self.s, image)
    }
}

impl fmt::Display for EdPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(&self.poly, f)
    }
}

impl fmt::Debug for EdPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "EdPoly({})", self.poly)
    }
}
