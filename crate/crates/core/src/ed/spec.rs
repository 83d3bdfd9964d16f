use std::fmt;

use num_traits::Zero;

use crate::error::{Error, Result};
use crate::ideal::Ideal;
use crate::linalg::{self, RatMatrix};
use crate::poly::ring::same_ring;
use crate::poly::{primitive_normalize, MultiPoly, Rational, Ring, VarClass};

/// A variety `X ⊂ V` given by generators of its ideal, with codimension,
/// homogeneity flag and the quadratic form `q` of the ambient space.
///
/// Ring variables of class `Ambient` are the coordinates of `V`; variables
/// of class `Auxiliary` are symbolic coefficients that survive every
/// elimination.
#[derive(Clone, PartialEq, Eq)]
pub struct VarietySpec {
    ring: Ring,
    gens: Vec<MultiPoly>,
    codim: usize,
    homogeneous: bool,
    qform: RatMatrix,
}

impl VarietySpec {
    /// Builds a spec; `qform` defaults to the identity (`q = Σ x_i²`).
    pub fn new(ring: &Ring, gens: Vec<MultiPoly>, codim: usize, qform: Option<RatMatrix>) -> Result<Self> {
        for i in 0..ring.len() {
            if !matches!(ring.class(i), VarClass::Ambient | VarClass::Auxiliary) {
                return Err(Error::invalid(format!(
                    "variable `{}` must be ambient or auxiliary in a variety spec",
                    ring.name(i)
                )));
            }
        }
        let n = ring.indices_of(VarClass::Ambient).len();
        if n == 0 {
            return Err(Error::invalid("no ambient variables"));
        }
        if gens.is_empty() || gens.iter().any(MultiPoly::is_zero) {
            return Err(Error::invalid("generators must be nonzero and nonempty"));
        }
        if let Some(g) = gens.iter().find(|g| !same_ring(g.ring(), ring)) {
            return Err(Error::RingMismatch(format!("generator over {}", g.ring())));
        }
        if codim == 0 || codim > n {
            return Err(Error::invalid(format!("codimension {codim} outside 1..={n}")));
        }
        let qform = qform.unwrap_or_else(|| linalg::identity(n));
        if qform.len() != n || !linalg::is_symmetric(&qform) {
            return Err(Error::invalid(format!("qform must be a symmetric {n}x{n} matrix")));
        }
        if linalg::det(&qform)?.is_zero() {
            return Err(Error::invalid("qform is degenerate"));
        }
        let ambient = ring.indices_of(VarClass::Ambient);
        let homogeneous = gens.iter().all(|g| g.is_homogeneous_in(&ambient));
        Ok(VarietySpec { ring: ring.clone(), gens, codim, homogeneous, qform })
    }

    /// Convenience constructor over a fresh ring of ambient variables.
    pub fn from_names(names: &[&str], gens: impl Fn(&Ring) -> Vec<MultiPoly>, codim: usize) -> Result<Self> {
        let ring = crate::poly::VariableRing::uniform(names.iter().copied(), VarClass::Ambient)?;
        let g = gens(&ring);
        VarietySpec::new(&ring, g, codim, None)
    }

    /// Requires the generators to be homogeneous when `flag` is set.
    pub fn require_homogeneous(self, flag: bool) -> Result<Self> {
        if flag && !self.homogeneous {
            return Err(Error::invalid("declared homogeneous but a generator is not"));
        }
        Ok(self)
    }

    pub fn ring(&self) -> &Ring {
        &self.ring
    }

    pub fn gens(&self) -> &[MultiPoly] {
        &self.gens
    }

    pub fn codim(&self) -> usize {
        self.codim
    }

    pub fn is_homogeneous(&self) -> bool {
        self.homogeneous
    }

    pub fn qform(&self) -> &RatMatrix {
        &self.qform
    }

    pub fn qform_is_identity(&self) -> bool {
        self.qform == linalg::identity(self.n())
    }

    /// Indices of the ambient coordinates.
    pub fn ambient(&self) -> Vec<usize> {
        self.ring.indices_of(VarClass::Ambient)
    }

    /// Indices of symbolic coefficients.
    pub fn params(&self) -> Vec<usize> {
        self.ring.indices_of(VarClass::Auxiliary)
    }

    /// Ambient dimension `n`.
    pub fn n(&self) -> usize {
        self.ambient().len()
    }

    pub fn ideal(&self) -> Ideal {
        Ideal::new(&self.ring, self.gens.clone()).expect("same ring")
    }

    /// `q(v) = vᵀ·qform·v` for a vector of polynomials over one ring.
    pub fn q_of(&self, v: &[MultiPoly]) -> MultiPoly {
        let ring = v[0].ring();
        let mut acc = MultiPoly::zero(ring);
        for i in 0..v.len() {
            for j in 0..v.len() {
                let c = &self.qform[i][j];
                if !c.is_zero() {
                    acc = &acc + &(&v[i] * &v[j]).scale(c);
                }
            }
        }
        acc
    }

    /// `q(u)` for a numeric point.
    pub fn q_value(&self, u: &[Rational]) -> Rational {
        linalg::dot(u, &linalg::mat_vec(&self.qform, u))
    }

    /// `vᵀ·qform`, the covector paired with `v` by `q`.
    pub fn lower(&self, v: &[MultiPoly]) -> Vec<MultiPoly> {
        let ring = v[0].ring();
        (0..v.len())
            .map(|j| {
                let mut acc = MultiPoly::zero(ring);
                for (i, vi) in v.iter().enumerate() {
                    let c = &self.qform[i][j];
                    if !c.is_zero() {
                        acc = &acc + &vi.scale(c);
                    }
                }
                acc
            })
            .collect()
    }

    /// Same variety with generators replaced (codim, qform kept).
    pub fn with_gens(&self, gens: Vec<MultiPoly>) -> Result<VarietySpec> {
        VarietySpec::new(&self.ring, gens, self.codim, Some(self.qform.clone()))
    }

    /// Generators in canonical scalar normalization.
    pub fn normalized_gens(&self) -> Vec<MultiPoly> {
        self.gens.iter().map(|g| primitive_normalize(g).expect("nonzero")).collect()
    }
}

impl fmt::Debug for VarietySpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let gens: Vec<String> = self.gens.iter().map(ToString::to_string).collect();
        write!(f, "V({}) in {} codim {}", gens.join(", "), self.ring, self.codim)?;
        if self.homogeneous {
            write!(f, " homogeneous")?;
        }
        Ok(())
    }
}

/// The data point `u`: numeric coordinates or the symbolic `u_1..u_n`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum DataPoint {
    Numeric(Vec<Rational>),
    Symbolic,
}

impl DataPoint {
    pub fn numeric(values: impl IntoIterator<Item = Rational>) -> Self {
        DataPoint::Numeric(values.into_iter().collect())
    }

    pub fn ints(values: &[i64]) -> Self {
        DataPoint::Numeric(values.iter().map(|&v| crate::poly::int(v)).collect())
    }

    pub fn is_symbolic(&self) -> bool {
        matches!(self, DataPoint::Symbolic)
    }

    pub(crate) fn check_len(&self, n: usize) -> Result<()> {
        match self {
            DataPoint::Numeric(v) if v.len() != n => {
                Err(Error::invalid(format!("data point has {} coordinates, expected {n}", v.len())))
            }
            _ => Ok(()),
        }
    }
}
