use super::matrix::PolyMatrix;
use super::multipoly::MultiPoly;
use crate::error::{Error, Result};

/// Sylvester matrix of `f` and `g` with respect to variable `var`.
pub fn sylvester_matrix(f: &MultiPoly, g: &MultiPoly, var: usize) -> Result<PolyMatrix> {
    let ring = f.ring().clone();
    let name = || ring.name(var).to_string();
    let m = f.degree_in(var) as usize;
    let n = g.degree_in(var) as usize;
    if m == 0 || f.is_zero() {
        return Err(Error::ConstantInVariable(name()));
    }
    if n == 0 || g.is_zero() {
        return Err(Error::ConstantInVariable(name()));
    }
    let fc = f.coeffs_in(var);
    let gc = g.coeffs_in(var);
    let size = m + n;
    let zero = MultiPoly::zero(&ring);
    let mut entries = vec![zero; size * size];
    for i in 0..n {
        for (k, c) in fc.iter().rev().enumerate() {
            entries[i * size + i + k] = c.clone();
        }
    }
    for i in 0..m {
        for (k, c) in gc.iter().rev().enumerate() {
            entries[(n + i) * size + i + k] = c.clone();
        }
    }
    PolyMatrix::new(&ring, size, size, entries)
}

/// Resultant of `f` and `g` in `var`: the determinant of their Sylvester matrix.
pub fn resultant(f: &MultiPoly, g: &MultiPoly, var: usize) -> Result<MultiPoly> {
    if !crate::poly::ring::same_ring(f.ring(), g.ring()) {
        return Err(Error::RingMismatch("resultant operands".into()));
    }
    sylvester_matrix(f, g, var)?.det()
}

/// Discriminant in `var`: `(-1)^(d(d-1)/2) Res(f, f') / lc(f)`.
pub fn discriminant(f: &MultiPoly, var: usize) -> Result<MultiPoly> {
    let d = f.degree_in(var);
    if d < 2 {
        return Err(Error::DegreeTooLow { var: f.ring().name(var).to_string(), degree: d, required: 2 });
    }
    let res = resultant(f, &f.derivative(var), var)?;
    let q = res.div_exact(&f.leading_coeff_in(var))?;
    Ok(if (d * (d - 1) / 2) % 2 == 1 { -q } else { q })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::rational::int;
    use crate::poly::ring::{VarClass, VariableRing};

    #[test]
    fn resultant_examples() {
        let r = VariableRing::uniform(["x", "u", "a", "b"], VarClass::Ambient).unwrap();
        let v = |i| MultiPoly::var(&r, i);
        let f = &v(0).pow(2) - &v(1);
        assert_eq!(resultant(&f, &v(0), 0).unwrap(), -v(1));
        assert_eq!(resultant(&(&v(0) - &v(2)), &(&v(0) - &v(3)), 0).unwrap(), &v(2) - &v(3));
        assert!(resultant(&f, &f, 0).unwrap().is_zero());
        assert_eq!(resultant(&f, &v(1), 0), Err(Error::ConstantInVariable("x".into())));
    }

    #[test]
    fn discriminant_examples() {
        let r = VariableRing::uniform(["s", "a", "b", "c"], VarClass::Ambient).unwrap();
        let v = |i| MultiPoly::var(&r, i);
        let quad = &(&(&v(1) * &v(0).pow(2)) + &(&v(2) * &v(0))) + &v(3);
        let expect = &v(2).pow(2) - &(&v(1) * &v(3)).scale(&int(4));
        assert_eq!(discriminant(&quad, 0).unwrap(), expect);
        let one = MultiPoly::one(&r);
        let p = &(&v(0) - &one) * &(&v(0) - &one.scale(&int(9)));
        assert_eq!(discriminant(&p, 0).unwrap(), MultiPoly::from_int(&r, 64));
        assert!(discriminant(&v(0).pow(2), 0).unwrap().is_zero());
        assert!(matches!(discriminant(&v(0), 0), Err(Error::DegreeTooLow { .. })));
    }
}
