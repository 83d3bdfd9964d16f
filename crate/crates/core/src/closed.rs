//! Closed-form ED polynomials and ED-degree counts: affine subspaces,
//! Salmon's conic pencil, bounded-rank and symmetric matrices, generic and
//! singular hypersurfaces, Veronese varieties and the essential variety.

use nalgebra::{Matrix3, SymmetricEigen};
use num_traits::{One, ToPrimitive, Zero};

use crate::ed::{DataPoint, EdPoly};
use crate::error::{Error, Result};
use crate::linalg::{self, RatMatrix};
use crate::poly::{discriminant, int, MultiPoly, PolyMatrix, Rational, Ring, VarClass, VariableRing};

/// Ring `u1..un` (data, when symbolic) followed by `s`.
fn data_ring(n: usize, symbolic: bool) -> Result<Ring> {
    let mut vars: Vec<(String, VarClass)> = Vec::new();
    if symbolic {
        vars.extend((1..=n).map(|k| (format!("u{k}"), VarClass::Data)));
    }
    vars.push(("s".to_string(), VarClass::Radius));
    VariableRing::new(vars)
}

/// Coordinates of `u` as polynomials over `ring`.
fn data_polys(ring: &Ring, u: &DataPoint, n: usize) -> Result<Vec<MultiPoly>> {
    match u {
        DataPoint::Symbolic => Ok((0..n).map(|k| MultiPoly::var(ring, k)).collect()),
        DataPoint::Numeric(v) if v.len() == n => Ok(v.iter().map(|c| MultiPoly::constant(ring, c.clone())).collect()),
        DataPoint::Numeric(v) => Err(Error::invalid(format!("data point has {} coordinates, expected {n}", v.len()))),
    }
}

fn radius(ring: &Ring) -> MultiPoly {
    MultiPoly::var(ring, ring.radius().expect("radius variable"))
}

/// ED polynomial `s - q(π_{L⊥}(u - p))` of the affine subspace
/// `L = p + span(directions)`, with `q` given by `qform` (identity when
/// `None`).
pub fn affine_subspace_edpoly(
    base: &[Rational],
    directions: &[Vec<Rational>],
    u: &DataPoint,
    qform: Option<&RatMatrix>,
) -> Result<EdPoly> {
    let n = base.len();
    let q = qform.cloned().unwrap_or_else(|| linalg::identity(n));
    if q.len() != n || !linalg::is_symmetric(&q) {
        return Err(Error::invalid(format!("qform must be a symmetric {n}x{n} matrix")));
    }
    if directions.iter().any(|d| d.len() != n) {
        return Err(Error::invalid(format!("directions must have {n} coordinates")));
    }
    let ring = data_ring(n, u.is_symbolic())?;
    let upolys = data_polys(&ring, u, n)?;
    let w: Vec<MultiPoly> =
        upolys.iter().zip(base).map(|(ui, pi)| ui - &MultiPoly::constant(&ring, pi.clone())).collect();
    let qd: Vec<Vec<Rational>> = directions.iter().map(|d| linalg::mat_vec(&q, d)).collect();
    let k = directions.len();
    let perp = if k == 0 {
        w
    } else {
        let gram: RatMatrix = (0..k).map(|i| (0..k).map(|j| linalg::dot(&qd[i], &directions[j])).collect()).collect();
        if linalg::det(&gram)?.is_zero() {
            return Err(Error::invalid("directions are linearly dependent"));
        }
        let ginv = linalg::inverse(&gram)?;
        // coefficients c = G⁻¹·(dᵢᵀ·Q·w)
        let rhs: Vec<MultiPoly> = qd
            .iter()
            .map(|row| row.iter().zip(&w).fold(MultiPoly::zero(&ring), |acc, (c, wi)| &acc + &wi.scale(c)))
            .collect();
        let coeffs: Vec<MultiPoly> = ginv
            .iter()
            .map(|row| row.iter().zip(&rhs).fold(MultiPoly::zero(&ring), |acc, (c, r)| &acc + &r.scale(c)))
            .collect();
        (0..n)
            .map(|i| {
                let proj = coeffs
                    .iter()
                    .zip(directions)
                    .fold(MultiPoly::zero(&ring), |acc, (c, d)| &acc + &c.scale(&d[i]));
                &w[i] - &proj
            })
            .collect()
    };
    let mut dist = MultiPoly::zero(&ring);
    for i in 0..n {
        for j in 0..n {
            if !q[i][j].is_zero() {
                dist = &dist + &(&perp[i] * &perp[j]).scale(&q[i][j]);
            }
        }
    }
    EdPoly::new(&(&radius(&ring) - &dist))
}

/// Plane conic `a x² + b xy + c y² + d x + e y + f`, with polynomial
/// coefficients over a ring of symbolic parameters.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ConicSpec {
    coeffs: [MultiPoly; 6],
}

impl ConicSpec {
    /// Coefficients `a..f` over a common ring of parameters.
    pub fn new(coeffs: [MultiPoly; 6]) -> Result<Self> {
        let ring = coeffs[0].ring().clone();
        if coeffs.iter().any(|c| c.ring() != &ring) {
            return Err(Error::RingMismatch("conic coefficients over different rings".into()));
        }
        Ok(ConicSpec { coeffs })
    }

    pub fn from_rationals(c: [Rational; 6]) -> Self {
        let ring = VariableRing::new(Vec::<(String, VarClass)>::new()).expect("empty ring");
        ConicSpec { coeffs: c.map(|v| MultiPoly::constant(&ring, v)) }
    }

    pub fn from_ints(c: [i64; 6]) -> Self {
        ConicSpec::from_rationals(c.map(int))
    }

    /// The general conic with symbolic `a, b, c, d, e, f`.
    pub fn general() -> Self {
        let ring = VariableRing::uniform(["a", "b", "c", "d", "e", "f"], VarClass::Auxiliary).expect("distinct names");
        ConicSpec { coeffs: std::array::from_fn(|i| MultiPoly::var(&ring, i)) }
    }

    /// From the symmetric 3×3 matrix `A` of the projective conic.
    pub fn from_matrix(a: &RatMatrix) -> Result<Self> {
        if a.len() != 3 || !linalg::is_symmetric(a) {
            return Err(Error::invalid("conic matrix must be symmetric 3x3"));
        }
        let two = int(2);
        Ok(ConicSpec::from_rationals([
            a[0][0].clone(),
            &a[0][1] * &two,
            a[1][1].clone(),
            &a[0][2] * &two,
            &a[1][2] * &two,
            a[2][2].clone(),
        ]))
    }

    pub fn coeffs(&self) -> &[MultiPoly; 6] {
        &self.coeffs
    }

    pub fn ring(&self) -> &Ring {
        self.coeffs[0].ring()
    }

    /// `a x² + … + f` over `ring ⊕ {x, y}`.
    pub fn polynomial(&self) -> Result<MultiPoly> {
        let ring = self.ring().extended([("x", VarClass::Ambient), ("y", VarClass::Ambient)])?;
        let x = MultiPoly::var(&ring, ring.len() - 2);
        let y = MultiPoly::var(&ring, ring.len() - 1);
        let monos = [&x * &x, &x * &y, &y * &y, x.clone(), y.clone(), MultiPoly::one(&ring)];
        let mut acc = MultiPoly::zero(&ring);
        for (c, m) in self.coeffs.iter().zip(&monos) {
            acc = &acc + &(&c.to_ring(&ring)? * m);
        }
        Ok(acc)
    }
}

/// Salmon's formula: the ED polynomial of a conic is the discriminant in
/// `λ` of `det(A + λB)`, with `B` the matrix of `(x-u₁)² + (y-u₂)² - s`.
pub fn conic_edpoly_salmon(conic: &ConicSpec, u: &DataPoint) -> Result<EdPoly> {
    let params = conic.ring();
    let mut vars: Vec<(String, VarClass)> = (0..params.len()).map(|i| (params.name(i).to_string(), VarClass::Auxiliary)).collect();
    if u.is_symbolic() {
        vars.extend([("u1".to_string(), VarClass::Data), ("u2".to_string(), VarClass::Data)]);
    }
    vars.push(("s".to_string(), VarClass::Radius));
    vars.push(("lambda".to_string(), VarClass::Auxiliary));
    let ring = VariableRing::new(vars)?;
    let li = ring.len() - 1;
    let s = MultiPoly::var(&ring, li - 1);
    let lam = MultiPoly::var(&ring, li);
    let (u1, u2) = match u {
        DataPoint::Symbolic => (MultiPoly::var(&ring, params.len()), MultiPoly::var(&ring, params.len() + 1)),
        DataPoint::Numeric(v) if v.len() == 2 => {
            (MultiPoly::constant(&ring, v[0].clone()), MultiPoly::constant(&ring, v[1].clone()))
        }
        DataPoint::Numeric(v) => return Err(Error::invalid(format!("data point has {} coordinates, expected 2", v.len()))),
    };
    let c: Vec<MultiPoly> = conic.coeffs.iter().map(|c| c.to_ring(&ring)).collect::<Result<_>>()?;
    let half = Rational::new(1.into(), 2.into());
    let a = [
        [c[0].clone(), c[1].scale(&half), c[3].scale(&half)],
        [c[1].scale(&half), c[2].clone(), c[4].scale(&half)],
        [c[3].scale(&half), c[4].scale(&half), c[5].clone()],
    ];
    let zero = MultiPoly::zero(&ring);
    let one = MultiPoly::one(&ring);
    let b = [
        [one.clone(), zero.clone(), -&u1],
        [zero, one, -&u2],
        [-&u1, -&u2, &(&(&u1 * &u1) + &(&u2 * &u2)) - &s],
    ];
    let rows: Vec<Vec<MultiPoly>> =
        (0..3).map(|i| (0..3).map(|j| &a[i][j] + &(&lam * &b[i][j])).collect()).collect();
    let det = PolyMatrix::from_rows(&ring, rows)?.det()?;
    let disc = discriminant(&det, li)?;
    if disc.is_zero() {
        return Err(Error::Degenerate("the conic pencil has identically zero discriminant".into()));
    }
    let out_vars: Vec<(String, VarClass)> = (0..ring.len() - 1).map(|i| (ring.name(i).to_string(), ring.class(i))).collect();
    let out = VariableRing::new(out_vars)?;
    EdPoly::new(&disc.to_ring(&out)?)
}

/// Real `m×n` matrix with `m ≤ n`, stored row by row.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MatrixPoint {
    m: usize,
    n: usize,
    entries: Vec<Rational>,
}

impl MatrixPoint {
    pub fn new(m: usize, n: usize, entries: Vec<Rational>) -> Result<Self> {
        if m == 0 || n == 0 || m > n {
            return Err(Error::invalid(format!("matrix shape {m}x{n} needs 1 <= m <= n")));
        }
        if entries.len() != m * n {
            return Err(Error::invalid(format!("{m}x{n} matrix needs {} entries, got {}", m * n, entries.len())));
        }
        Ok(MatrixPoint { m, n, entries })
    }

    pub fn from_rows(rows: &[Vec<Rational>]) -> Result<Self> {
        let m = rows.len();
        let n = rows.first().map_or(0, Vec::len);
        if rows.iter().any(|r| r.len() != n) {
            return Err(Error::invalid("ragged matrix"));
        }
        MatrixPoint::new(m, n, rows.concat())
    }

    pub fn rows(&self) -> usize {
        self.m
    }

    pub fn cols(&self) -> usize {
        self.n
    }

    pub fn entries(&self) -> &[Rational] {
        &self.entries
    }

    pub fn to_matrix(&self) -> RatMatrix {
        self.entries.chunks(self.n).map(<[Rational]>::to_vec).collect()
    }

    /// `U·Uᵀ`.
    pub fn gram(&self) -> RatMatrix {
        let u = self.to_matrix();
        linalg::mat_mul(&u, &linalg::transpose(&u)).expect("conformable")
    }
}

fn trace(m: &RatMatrix) -> Rational {
    (0..m.len()).fold(Rational::zero(), |acc, i| acc + &m[i][i])
}

/// `det(M + c·s·I)` over the ring `{s}` for a rational square `M`.
fn det_shift(m: &RatMatrix, c: &Rational) -> Result<MultiPoly> {
    let ring = data_ring(0, false)?;
    let s = radius(&ring);
    let rows: Vec<Vec<MultiPoly>> = m
        .iter()
        .enumerate()
        .map(|(i, row)| {
            row.iter()
                .enumerate()
                .map(|(j, v)| {
                    let e = MultiPoly::constant(&ring, v.clone());
                    if i == j {
                        &e + &s.scale(c)
                    } else {
                        e
                    }
                })
                .collect()
        })
        .collect();
    PolyMatrix::from_rows(&ring, rows)?.det()
}

/// Power sums `p_1..p_count` of the eigenvalues of `m`.
fn power_sums(m: &RatMatrix, count: usize) -> Vec<Rational> {
    let mut out = Vec::with_capacity(count);
    let mut power = m.clone();
    for j in 0..count {
        if j > 0 {
            power = linalg::mat_mul(&power, m).expect("square");
        }
        out.push(trace(&power));
    }
    out
}

fn factorial(k: usize) -> Rational {
    (1..=k).fold(Rational::one(), |acc, i| acc * int(i as i64))
}

/// Monic polynomial in `s` whose roots are all `k`-element subset sums of
/// the eigenvalues of the `m×m` matrix `mat`.
///
/// Works with power sums: `∏_i (1 + y·e^{xλ_i})` has logarithm
/// `Σ_l (-1)^{l+1} y^l/l · Σ_j l^j p_j x^j/j!`, and its `y^k` coefficient is
/// the exponential generating series of the subset-sum power sums, which
/// Newton's identities turn back into coefficients.
fn subset_sum_polynomial(mat: &RatMatrix, k: usize) -> Result<MultiPoly> {
    let m = mat.len();
    let count = binomial(m, k);
    let mut p = vec![int(m as i64)];
    p.extend(power_sums(mat, count));
    // G_l(x) for l = 1..k, truncated at x^count
    let g: Vec<Vec<Rational>> = (1..=k)
        .map(|l| {
            let sign = if l % 2 == 1 { Rational::one() } else { -Rational::one() };
            let scale = sign / int(l as i64);
            (0..=count)
                .map(|j| {
                    let lj = num_traits::pow(int(l as i64), j);
                    &scale * &lj * &p[j] / factorial(j)
                })
                .collect()
        })
        .collect();
    // F_0 = 1, k F_k = Σ_{l=1..k} l G_l F_{k-l}
    let mut f: Vec<Vec<Rational>> = vec![{
        let mut one = vec![Rational::zero(); count + 1];
        one[0] = Rational::one();
        one
    }];
    for kk in 1..=k {
        let mut acc = vec![Rational::zero(); count + 1];
        for l in 1..=kk {
            let lf = int(l as i64);
            for (a, ga) in g[l - 1].iter().enumerate() {
                if ga.is_zero() {
                    continue;
                }
                for (b, fb) in f[kk - l].iter().enumerate().take(count + 1 - a) {
                    acc[a + b] += &lf * ga * fb;
                }
            }
        }
        let inv = Rational::one() / int(kk as i64);
        f.push(acc.into_iter().map(|c| c * &inv).collect());
    }
    let q: Vec<Rational> = (0..=count).map(|j| &f[k][j] * factorial(j)).collect();
    // Newton: i e_i = Σ_{j=1..i} (-1)^{j-1} e_{i-j} q_j
    let mut e = vec![Rational::one()];
    for i in 1..=count {
        let mut acc = Rational::zero();
        for j in 1..=i {
            let t = &e[i - j] * &q[j];
            if j % 2 == 1 {
                acc += t;
            } else {
                acc -= t;
            }
        }
        e.push(acc / int(i as i64));
    }
    let ring = data_ring(0, false)?;
    let s = radius(&ring);
    let mut poly = MultiPoly::zero(&ring);
    for (i, ei) in e.iter().enumerate() {
        let c = if i % 2 == 0 { ei.clone() } else { -ei.clone() };
        poly = &poly + &s.pow((count - i) as u32).scale(&c);
    }
    Ok(poly)
}

pub fn binomial(n: usize, k: usize) -> usize {
    if k > n {
        return 0;
    }
    (0..k.min(n - k)).fold(1usize, |acc, i| acc * (n - i) / (i + 1))
}

/// ED polynomial of the variety `X_r` of `m×n` matrices of rank at most
/// `r` at `U`: its roots are `tr(UUᵀ)` minus the sums of `r` eigenvalues
/// of `UUᵀ`, so it has degree `C(m, r)`.
pub fn rank_variety_edpoly(u: &MatrixPoint, r: usize) -> Result<EdPoly> {
    let m = u.rows();
    if r == 0 || r >= m {
        return Err(Error::invalid(format!("rank {r} outside 1..={}", m.saturating_sub(1))));
    }
    let gram = u.gram();
    let poly = if r == m - 1 {
        // det(UUᵀ - sI)
        det_shift(&gram, &-Rational::one())?
    } else if r == 1 {
        // (-1)^m det[sI + UUᵀ - tr(UUᵀ) I]
        let tr = trace(&gram);
        let shifted: RatMatrix = gram
            .iter()
            .enumerate()
            .map(|(i, row)| row.iter().enumerate().map(|(j, v)| if i == j { v - &tr } else { v.clone() }).collect())
            .collect();
        let d = det_shift(&shifted, &Rational::one())?;
        if m % 2 == 1 {
            -&d
        } else {
            d
        }
    } else {
        subset_sum_polynomial(&gram, m - r)?
    };
    EdPoly::new(&poly)
}

/// `det(U² - sI)`: the ED polynomial at a symmetric `U` of the hypersurface
/// of singular symmetric matrices.
pub fn symmetric_matrix_edpoly(u: &RatMatrix) -> Result<EdPoly> {
    if !linalg::is_symmetric(u) {
        return Err(Error::invalid("matrix must be symmetric"));
    }
    let sq = linalg::mat_mul(u, u)?;
    EdPoly::new(&det_shift(&sq, &-Rational::one())?)
}

fn checked_pow(b: u64, e: u64) -> Result<u64> {
    let e = u32::try_from(e).map_err(|_| overflow())?;
    b.checked_pow(e).ok_or_else(overflow)
}

fn overflow() -> Error {
    Error::invalid("count exceeds 64-bit range")
}

/// ED degree of a general hypersurface of degree `d` in `k^n`:
/// `2(n-1)` for `d = 2`, else `d((d-1)^{n-1} - 1)/(d - 2)`.
pub fn generic_hypersurface_ed_degree(n: u64, d: u64) -> Result<u64> {
    if n < 2 || d < 2 {
        return Err(Error::invalid(format!("need n >= 2 and d >= 2, got n={n}, d={d}")));
    }
    if d == 2 {
        return Ok(2 * (n - 1));
    }
    let num = checked_pow(d - 1, n - 1)? - 1;
    if num % (d - 2) != 0 {
        return Err(Error::InexactDivision);
    }
    (num / (d - 2)).checked_mul(d).ok_or_else(overflow)
}

/// Contribution of an `A_k` singular point (`μ = k`, generic hyperplane
/// section smooth) to the ED-degree drop.
pub fn a_k_contribution(k: u64) -> u64 {
    k + 1
}

/// `N - Σ e(X, x)` over the isolated singular points.
pub fn singular_hypersurface_ed_degree(n_generic: u64, e_list: &[u64]) -> Result<u64> {
    if e_list.contains(&0) {
        return Err(Error::invalid("singular point contributions must be positive"));
    }
    let total: u64 = e_list.iter().sum();
    n_generic
        .checked_sub(total)
        .ok_or_else(|| Error::invalid(format!("contributions {total} exceed the generic count {n_generic}")))
}

/// `d² - 2δ - 3κ` for a plane curve of degree `d` with `δ` nodes and `κ`
/// cusps.
pub fn plane_curve_ed_degree(d: u64, nodes: u64, cusps: u64) -> Result<u64> {
    if d == 0 {
        return Err(Error::invalid("curve degree must be positive"));
    }
    let mut e = vec![a_k_contribution(1); nodes as usize];
    e.extend(std::iter::repeat_n(a_k_contribution(2), cusps as usize));
    singular_hypersurface_ed_degree(d * d, &e)
}

/// Quadratic form on the space of symmetric tensors.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum VeroneseQuadric {
    Generic,
    /// the Frobenius (Bombieri-Weyl) inner product
    Frobenius,
}

/// ED degree of the Veronese embedding of degree `d` of `k^n`.
pub fn veronese_ed_degree(n: u64, d: u64, quadric: VeroneseQuadric) -> Result<u64> {
    if n == 0 || d == 0 {
        return Err(Error::invalid(format!("need n >= 1 and d >= 1, got n={n}, d={d}")));
    }
    match quadric {
        VeroneseQuadric::Generic => {
            let num = checked_pow(2 * d - 1, n)? - checked_pow(d - 1, n)?;
            if num % d != 0 {
                return Err(Error::InexactDivision);
            }
            Ok(num / d)
        }
        // ((d-1)^n - 1)/(d-2) as the geometric sum Σ_{i<n} (d-1)^i
        VeroneseQuadric::Frobenius => (0..n).try_fold(0u64, |acc, i| {
            acc.checked_add(checked_pow(d - 1, i)?).ok_or_else(overflow)
        }),
    }
}

/// Lowest terms of the ED polynomials of the essential variety and of its
/// dual at a 3×3 matrix.
#[derive(Debug, Clone, PartialEq)]
pub struct EssentialReport {
    /// `det(UUᵀ + λI) = λ³ + a₁λ² + a₂λ + a₃`
    pub a: [Rational; 3],
    pub edpoly0: Rational,
    pub dual_edpoly0: Rational,
    /// `64·∏[(σᵢ∓σⱼ)²/2 + σₖ²]` in floating point
    pub root_product: f64,
    pub float_check: bool,
    /// `∏_{i<j}(λᵢ-λⱼ)²` over the eigenvalues of `UUᵀ`, in floating point
    pub eigen_discriminant: f64,
    pub dual_float_check: bool,
}

pub const ESSENTIAL_TOLERANCE: f64 = 1e-9;

fn close(a: f64, b: f64, scale: f64) -> bool {
    (a - b).abs() <= ESSENTIAL_TOLERANCE * scale.max(1.0)
}

pub fn essential_lowest_terms(u: &MatrixPoint) -> Result<EssentialReport> {
    if u.rows() != 3 || u.cols() != 3 {
        return Err(Error::invalid("the essential variety lives in 3x3 matrices"));
    }
    let g = u.gram();
    let a1 = trace(&g);
    let a2 = &g[0][0] * &g[1][1] - &g[0][1] * &g[1][0] + &g[0][0] * &g[2][2] - &g[0][2] * &g[2][0]
        + &g[1][1] * &g[2][2]
        - &g[1][2] * &g[2][1];
    let a3 = linalg::det(&g)?;
    let p = |r: &Rational, e: usize| num_traits::pow(r.clone(), e);
    let c = |v: i64| int(v);
    let edpoly0 = c(4) * p(&a1, 6) - c(12) * p(&a1, 4) * &a2 - c(15) * p(&a1, 2) * p(&a2, 2)
        + c(144) * p(&a1, 3) * &a3
        - c(4) * p(&a2, 3)
        - c(90) * &a1 * &a2 * &a3
        - c(27) * p(&a3, 2);
    let dual_edpoly0 = p(&a1, 2) * p(&a2, 2) - c(4) * p(&a1, 3) * &a3 - c(4) * p(&a2, 3)
        + c(18) * &a1 * &a2 * &a3
        - c(27) * p(&a3, 2);

    let f = |r: &Rational| r.to_f64().unwrap_or(f64::NAN);
    let gm = Matrix3::from_fn(|i, j| f(&g[i][j]));
    let eig = SymmetricEigen::new(gm).eigenvalues;
    let sigma: Vec<f64> = eig.iter().map(|l| l.max(0.0).sqrt()).collect();
    let mut prod = 64.0;
    let mut scale = 64.0;
    for (i, j, k) in [(0, 1, 2), (1, 2, 0), (2, 0, 1)] {
        let minus = (sigma[i] - sigma[j]).powi(2) / 2.0 + sigma[k].powi(2);
        let plus = (sigma[i] + sigma[j]).powi(2) / 2.0 + sigma[k].powi(2);
        prod *= minus * plus;
        scale *= plus * plus;
    }
    let mut disc = 1.0;
    let mut dscale = 1.0;
    for (i, j) in [(0, 1), (0, 2), (1, 2)] {
        disc *= (eig[i] - eig[j]).powi(2);
        dscale *= (eig[i].abs() + eig[j].abs()).powi(2);
    }
    Ok(EssentialReport {
        float_check: close(prod, f(&edpoly0), scale),
        dual_float_check: close(disc, f(&dual_edpoly0), dscale),
        a: [a1, a2, a3],
        edpoly0,
        dual_edpoly0,
        root_product: prod,
        eigen_discriminant: disc,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn subset_sums_of_diagonal() {
        // eigenvalues 1, 2, 4: pair sums 3, 5, 6
        let m = vec![vec![int(1), int(0), int(0)], vec![int(0), int(2), int(0)], vec![int(0), int(0), int(4)]];
        let p = subset_sum_polynomial(&m, 2).unwrap();
        assert_eq!(p.to_string(), "s^3-14*s^2+63*s-90");
    }

    #[test]
    fn counts() {
        assert_eq!(generic_hypersurface_ed_degree(3, 2).unwrap(), 4);
        assert_eq!(generic_hypersurface_ed_degree(3, 3).unwrap(), 9);
        assert_eq!(generic_hypersurface_ed_degree(4, 3).unwrap(), 21);
        assert_eq!(plane_curve_ed_degree(4, 0, 3).unwrap(), 7);
        assert_eq!(plane_curve_ed_degree(3, 1, 0).unwrap(), 7);
        assert_eq!(singular_hypersurface_ed_degree(16, &[3, 3, 3]).unwrap(), 7);
        assert_eq!(veronese_ed_degree(2, 3, VeroneseQuadric::Generic).unwrap(), 7);
        assert_eq!(veronese_ed_degree(5, 2, VeroneseQuadric::Frobenius).unwrap(), 5);
        assert!(singular_hypersurface_ed_degree(2, &[3]).is_err());
    }

    #[test]
    fn affine_line_examples() {
        let diag = affine_subspace_edpoly(&[int(0), int(0)], &[vec![int(1), int(1)]], &DataPoint::ints(&[1, 0]), None)
            .unwrap();
        assert_eq!(diag.numeric_coeffs().unwrap(), vec![int(-1), int(2)]);
        let axis = affine_subspace_edpoly(&[int(0), int(0)], &[vec![int(1), int(0)]], &DataPoint::Symbolic, None).unwrap();
        assert_eq!(axis.to_string(), "-u2^2+s");
    }
}
