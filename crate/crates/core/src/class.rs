//! Integer calculus on Chern-Mather degrees: ED degrees, polar classes,
//! dual degrees and quadric sections.

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};

/// Chern-Mather degrees of a projective variety `Y ⊂ P^{n-1}` of
/// dimension `m`: `degrees[i] = c_i^M(Y)·h^{m-i}`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct CMData {
    m: usize,
    n: usize,
    degrees: Vec<i64>,
}

impl CMData {
    pub fn new(m: usize, n: usize, degrees: Vec<i64>) -> Result<Self> {
        if degrees.len() != m + 1 {
            return Err(Error::invalid(format!("dimension {m} needs {} degrees, got {}", m + 1, degrees.len())));
        }
        if degrees[0] <= 0 {
            return Err(Error::invalid(format!("degree c0 = {} must be positive", degrees[0])));
        }
        if n < m + 2 {
            return Err(Error::invalid(format!("a {m}-dimensional variety needs n >= {}, got {n}", m + 2)));
        }
        Ok(CMData { m, n, degrees })
    }

    /// From the list indexed by dimension (component of dimension `i` at
    /// position `i`).
    pub fn from_dimension_indexed(m: usize, n: usize, by_dim: Vec<i64>) -> Result<Self> {
        let mut degrees = by_dim;
        degrees.reverse();
        CMData::new(m, n, degrees)
    }

    /// Smooth curve of degree `d` and genus `g`: `[d, 2 - 2g]`.
    pub fn smooth_curve(n: usize, d: i64, genus: i64) -> Result<Self> {
        CMData::new(1, n, vec![d, 2 - 2 * genus])
    }

    pub fn dim(&self) -> usize {
        self.m
    }

    pub fn ambient(&self) -> usize {
        self.n
    }

    pub fn degrees(&self) -> &[i64] {
        &self.degrees
    }

    pub fn degree(&self) -> i64 {
        self.degrees[0]
    }
}

impl fmt::Display for CMData {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let degs: Vec<String> = self.degrees.iter().map(i64::to_string).collect();
        write!(f, "m={};n={};deg={}", self.m, self.n, degs.join(","))
    }
}

fn parse_int<T: FromStr>(key: &str, v: &str) -> Result<T> {
    v.trim().parse().map_err(|_| Error::invalid(format!("`{key}` expects an integer, got `{v}`")))
}

fn parse_list(key: &str, v: &str) -> Result<Vec<i64>> {
    v.split(',').map(|x| parse_int(key, x)).collect()
}

/// `key=value` pairs separated by `;`.
fn fields(text: &str) -> Result<Vec<(&str, &str)>> {
    text.split(';')
        .map(str::trim)
        .filter(|f| !f.is_empty())
        .map(|f| {
            f.split_once('=')
                .map(|(k, v)| (k.trim(), v.trim()))
                .ok_or_else(|| Error::invalid(format!("expected key=value, got `{f}`")))
        })
        .collect()
}

impl FromStr for CMData {
    type Err = Error;

    /// `m=1;n=3;deg=2,2`, or `aluffi=` for the dimension-indexed list.
    fn from_str(s: &str) -> Result<Self> {
        let (mut m, mut n, mut deg, mut by_dim) = (None, None, None, None);
        for (k, v) in fields(s)? {
            match k {
                "m" => m = Some(parse_int("m", v)?),
                "n" => n = Some(parse_int("n", v)?),
                "deg" => deg = Some(parse_list(k, v)?),
                "aluffi" => by_dim = Some(parse_list(k, v)?),
                _ => return Err(Error::invalid(format!("unknown key `{k}`"))),
            }
        }
        let m = m.ok_or_else(|| Error::invalid("missing `m`"))?;
        let n = n.ok_or_else(|| Error::invalid("missing `n`"))?;
        match (deg, by_dim) {
            (Some(d), None) => CMData::new(m, n, d),
            (None, Some(a)) => CMData::from_dimension_indexed(m, n, a),
            _ => Err(Error::invalid("give exactly one of `deg` and `aluffi`")),
        }
    }
}

fn sign(i: usize) -> i64 {
    if i.is_multiple_of(2) {
        1
    } else {
        -1
    }
}

fn binom(n: usize, k: usize) -> i64 {
    if k > n {
        return 0;
    }
    (0..k).fold(1i64, |acc, i| acc * (n - i) as i64 / (i + 1) as i64)
}

/// `Σ (-1)^i (2^{m+1-i} - 1)·c_i`.
pub fn ed_degree_cm(y: &CMData) -> i64 {
    let m = y.m;
    y.degrees.iter().enumerate().map(|(i, c)| sign(i) * ((1i64 << (m + 1 - i)) - 1) * c).sum()
}

/// Closed form `3d + 2g - 2` for a smooth curve of degree `d` and genus `g`
/// transversal to the isotropic quadric.
pub fn catanese_trifogli_curve(d: i64, genus: i64) -> i64 {
    3 * d + 2 * genus - 2
}

/// Polar degrees `δ_0..δ_{n-2}`, zero-padded.
pub fn polar_classes(y: &CMData) -> Result<Vec<i64>> {
    let m = y.m;
    let mut out = vec![0i64; y.n - 1];
    for (i, slot) in out.iter_mut().enumerate().take(m + 1) {
        let d: i64 = (0..=m - i).map(|j| sign(j) * binom(m + 1 - j, i + 1) * y.degrees[j]).sum();
        if d < 0 {
            return Err(Error::invalid(format!("negative polar class δ{i} = {d}")));
        }
        *slot = d;
    }
    Ok(out)
}

/// `deg(Y∨) = δ_0`; fails with the defect when the dual is not a
/// hypersurface.
pub fn dual_degree_cm(y: &CMData) -> Result<i64> {
    let delta = polar_classes(y)?;
    if delta[0] > 0 {
        return Ok(delta[0]);
    }
    let defect = delta.iter().position(|&d| d != 0).unwrap_or(delta.len());
    Err(Error::Degenerate(format!("the dual is not a hypersurface (defect {defect})")))
}

/// Chern-Mather degrees of `Y ∩ Q` for a smooth quadric `Q` transversal
/// to `Y`.
pub fn quadric_section_cm(y: &CMData) -> Result<CMData> {
    if y.m == 0 {
        return Err(Error::invalid("a quadric section of a point set is empty"));
    }
    let degrees = (0..y.m)
        .map(|j| 2 * (0..=j).map(|i| sign(j - i) * (1i64 << (j - i)) * y.degrees[i]).sum::<i64>())
        .collect();
    CMData::new(y.m - 1, y.n, degrees)
}

/// Both sides of the 2·EDdegree identity computed from the data of `X∨`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TwoEdReport {
    /// `2·EDdegree(X∨)` from the Chern-Mather degrees
    pub lhs: i64,
    /// `deg((X∨ ∩ Q)∨)`, plus `2·deg X` for hypersurfaces
    pub rhs: i64,
    pub section_dual_degree: i64,
    pub holds: bool,
    pub section_dual_even: bool,
}

pub fn check_two_eddegree(x_dual: &CMData, deg_x: i64, is_hypersurface: bool) -> Result<TwoEdReport> {
    let lhs = 2 * ed_degree_cm(x_dual);
    // X∨ a point: X∨ ∩ Q is empty and its dual is counted with degree 0
    let section_dual_degree = if x_dual.m == 0 { 0 } else { dual_degree_cm(&quadric_section_cm(x_dual)?)? };
    let rhs = section_dual_degree + if is_hypersurface { 2 * deg_x } else { 0 };
    Ok(TwoEdReport { lhs, rhs, section_dual_degree, holds: lhs == rhs, section_dual_even: section_dual_degree % 2 == 0 })
}

/// Both sides of `2^{m+1-i} - 1 = (m+1-i) + Σ_{j=i}^{m} (m-j)·2^{j-i}`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct LemmaTwoSum {
    pub lhs: i64,
    pub rhs: i64,
}

pub fn lemma_two_sum(m: usize, i: usize) -> Result<LemmaTwoSum> {
    if i > m || m > 60 {
        return Err(Error::invalid(format!("need 0 <= i <= m <= 60, got i={i}, m={m}")));
    }
    let lhs = (1i64 << (m + 1 - i)) - 1;
    let rhs = (m + 1 - i) as i64 + (i..=m).map(|j| (m - j) as i64 * (1i64 << (j - i))).sum::<i64>();
    Ok(LemmaTwoSum { lhs, rhs })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum TableQuadric {
    General,
    Frobenius,
}

/// A 2·EDdegree case from the bundled table.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TwoEdCase {
    pub name: String,
    pub dual: String,
    pub x_degree: i64,
    pub hypersurface: bool,
    pub quadric: TableQuadric,
    pub transversal: bool,
    /// ED degree of `X` under `quadric`, when it differs from the
    /// Chern-Mather count
    pub ed_degree: Option<i64>,
}

/// Outcome of a table case: the identity on the data, and whether the
/// actual ED degree is consistent with it.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TwoEdCaseReport {
    pub name: String,
    pub report: TwoEdReport,
    pub transversal: bool,
    /// `2·EDdegree(X)` under the table's quadric
    pub actual_lhs: i64,
    /// the identity holds for the actual ED degree
    pub actual_holds: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct CMTable {
    pub entries: Vec<(String, CMData)>,
    pub two_ed: Vec<TwoEdCase>,
}

pub const BUNDLED_TABLE: &str = include_str!("../data/chern_mather.txt");

fn parse_bool(key: &str, v: &str) -> Result<bool> {
    match v {
        "true" | "yes" => Ok(true),
        "false" | "no" => Ok(false),
        _ => Err(Error::invalid(format!("`{key}` expects true or false, got `{v}`"))),
    }
}

fn parse_case(name: &str, body: &str) -> Result<TwoEdCase> {
    let mut case = TwoEdCase {
        name: name.to_string(),
        dual: String::new(),
        x_degree: 0,
        hypersurface: false,
        quadric: TableQuadric::General,
        transversal: true,
        ed_degree: None,
    };
    for (k, v) in fields(body)? {
        match k {
            "dual" => case.dual = v.to_string(),
            "x_degree" => case.x_degree = parse_int(k, v)?,
            "hypersurface" => case.hypersurface = parse_bool(k, v)?,
            "transversal" => case.transversal = parse_bool(k, v)?,
            "ed_degree" => case.ed_degree = Some(parse_int(k, v)?),
            "quadric" => {
                case.quadric = match v {
                    "general" => TableQuadric::General,
                    "frobenius" => TableQuadric::Frobenius,
                    _ => return Err(Error::invalid(format!("unknown quadric `{v}`"))),
                }
            }
            _ => return Err(Error::invalid(format!("unknown key `{k}`"))),
        }
    }
    if case.dual.is_empty() || case.x_degree <= 0 {
        return Err(Error::invalid(format!("case `{name}` needs `dual` and a positive `x_degree`")));
    }
    Ok(case)
}

impl CMTable {
    pub fn bundled() -> Self {
        BUNDLED_TABLE.parse().expect("bundled table is well formed")
    }

    pub fn get(&self, name: &str) -> Option<&CMData> {
        self.entries.iter().find(|(n, _)| n == name).map(|(_, d)| d)
    }

    pub fn run_case(&self, case: &TwoEdCase) -> Result<TwoEdCaseReport> {
        let dual = self.get(&case.dual).ok_or_else(|| Error::invalid(format!("unknown entry `{}`", case.dual)))?;
        let report = check_two_eddegree(dual, case.x_degree, case.hypersurface)?;
        let actual_lhs = 2 * case.ed_degree.unwrap_or_else(|| ed_degree_cm(dual));
        Ok(TwoEdCaseReport {
            name: case.name.clone(),
            actual_holds: actual_lhs == report.rhs,
            transversal: case.transversal,
            report,
            actual_lhs,
        })
    }
}

impl FromStr for CMTable {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let mut table = CMTable::default();
        for (lineno, line) in s.lines().enumerate() {
            let line = line.trim();
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            let mut parts = line.splitn(3, char::is_whitespace);
            let (kind, name, body) = match (parts.next(), parts.next(), parts.next()) {
                (Some(k), Some(n), Some(b)) => (k, n, b),
                _ => return Err(Error::invalid(format!("line {}: expected `<kind> <name> <fields>`", lineno + 1))),
            };
            let at = |e: Error| Error::invalid(format!("line {}: {e}", lineno + 1));
            match kind {
                "cm" => table.entries.push((name.to_string(), body.parse().map_err(at)?)),
                "two_ed" => table.two_ed.push(parse_case(name, body).map_err(at)?),
                _ => return Err(Error::invalid(format!("line {}: unknown record `{kind}`", lineno + 1))),
            }
        }
        Ok(table)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cm(s: &str) -> CMData {
        s.parse().unwrap()
    }

    #[test]
    fn small_examples() {
        let conic = cm("m=1;n=3;deg=2,2");
        assert_eq!(ed_degree_cm(&conic), 4);
        assert_eq!(polar_classes(&conic).unwrap(), vec![2, 2]);
        assert_eq!(dual_degree_cm(&conic).unwrap(), 2);
        assert_eq!(quadric_section_cm(&conic).unwrap().degrees(), &[4]);
        let line = cm("m=1;n=3;deg=1,2");
        assert_eq!(ed_degree_cm(&line), 1);
        assert_eq!(polar_classes(&line).unwrap(), vec![0, 1]);
        assert!(dual_degree_cm(&line).is_err());
        assert_eq!(dual_degree_cm(&cm("m=1;n=4;deg=3,2")).unwrap(), 4);
        assert_eq!(ed_degree_cm(&cm("m=0;n=3;deg=1")), 1);
    }

    #[test]
    fn surface_section_middle_term() {
        let s = cm("m=2;n=4;deg=5,7,3");
        assert_eq!(quadric_section_cm(&s).unwrap().degrees()[1], 2 * (7 - 2 * 5));
    }

    #[test]
    fn dimension_indexed_input_is_reversed() {
        assert_eq!(cm("m=1;n=3;aluffi=2,3"), cm("m=1;n=3;deg=3,2"));
        assert!("m=1;n=3;deg=2".parse::<CMData>().is_err());
        assert!("m=1;n=3;deg=0,2".parse::<CMData>().is_err());
    }

    #[test]
    fn lemma_examples() {
        assert_eq!(lemma_two_sum(3, 1).unwrap(), LemmaTwoSum { lhs: 7, rhs: 7 });
        assert_eq!(lemma_two_sum(5, 5).unwrap(), LemmaTwoSum { lhs: 1, rhs: 1 });
        assert!(lemma_two_sum(2, 3).is_err());
    }

    #[test]
    fn bundled_table_parses() {
        let t = CMTable::bundled();
        assert_eq!(t.entries.len(), 9);
        assert_eq!(t.two_ed.len(), 5);
        for (name, d) in &t.entries {
            assert_eq!(d.to_string().parse::<CMData>().unwrap(), *d, "{name}");
        }
    }
}
