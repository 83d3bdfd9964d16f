//! Text format for polynomials and variety specs.
//!
//! ```text
//! vars x, y
//! gens 4*x^2-9*y^2-1
//! codim 1
//! ```
//!
//! Statements end at `;` or a newline; `#` starts a comment. Sections:
//! `vars`, `params` (symbolic coefficients), `gens` (comma separated, may
//! repeat), `codim`, `homogeneous`, `qform` (row-major rationals).
//! Polynomials use `+ - * ^`, parentheses, integer and `p/q` literals;
//! implicit multiplication is rejected.

use num_traits::Zero;

use crate::ed::VarietySpec;
use crate::error::{Error, Result};
use crate::poly::rational::format_rational;
use crate::poly::{MultiPoly, Rational, Ring, VarClass, VariableRing};

#[derive(Debug, Clone, PartialEq)]
enum Tok {
    Int(num_bigint::BigInt),
    Ident(String),
    Plus,
    Minus,
    Star,
    Slash,
    Caret,
    LParen,
    RParen,
    Comma,
}

#[derive(Debug, Clone)]
struct Token {
    tok: Tok,
    line: usize,
    col: usize,
}

fn parse_err(line: usize, column: usize, message: impl Into<String>) -> Error {
    Error::Parse { line, column, message: message.into() }
}

fn tokenize(src: &str, line: usize, col0: usize) -> Result<Vec<Token>> {
    let chars: Vec<char> = src.chars().collect();
    let mut out = Vec::new();
    let mut i = 0;
    while i < chars.len() {
        let c = chars[i];
        let col = col0 + i;
        if c.is_whitespace() {
            i += 1;
            continue;
        }
        let simple = match c {
            '+' => Some(Tok::Plus),
            '-' => Some(Tok::Minus),
            '*' => Some(Tok::Star),
            '/' => Some(Tok::Slash),
            '^' => Some(Tok::Caret),
            '(' => Some(Tok::LParen),
            ')' => Some(Tok::RParen),
            ',' => Some(Tok::Comma),
            _ => None,
        };
        if let Some(tok) = simple {
            out.push(Token { tok, line, col });
            i += 1;
        } else if c.is_ascii_digit() {
            let start = i;
            while i < chars.len() && chars[i].is_ascii_digit() {
                i += 1;
            }
            if i < chars.len() && (chars[i].is_ascii_alphabetic() || chars[i] == '_') {
                return Err(parse_err(line, col0 + i, "implicit multiplication is not allowed; use `*`"));
            }
            let digits: String = chars[start..i].iter().collect();
            out.push(Token { tok: Tok::Int(digits.parse().expect("digits")), line, col });
        } else if c.is_ascii_alphabetic() {
            let start = i;
            while i < chars.len() && (chars[i].is_ascii_alphanumeric() || chars[i] == '_') {
                i += 1;
            }
            out.push(Token { tok: Tok::Ident(chars[start..i].iter().collect()), line, col });
        } else {
            return Err(parse_err(line, col, format!("unexpected character `{c}`")));
        }
    }
    Ok(out)
}

struct Parser<'a> {
    toks: &'a [Token],
    pos: usize,
    ring: &'a Ring,
    end: (usize, usize),
}

impl<'a> Parser<'a> {
    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.pos).map(|t| &t.tok)
    }

    fn here(&self) -> (usize, usize) {
        self.toks.get(self.pos).map_or(self.end, |t| (t.line, t.col))
    }

    fn err(&self, msg: impl Into<String>) -> Error {
        let (l, c) = self.here();
        parse_err(l, c, msg)
    }

    fn bump(&mut self) -> Option<Tok> {
        let t = self.toks.get(self.pos).map(|t| t.tok.clone());
        self.pos += 1;
        t
    }

    fn expr(&mut self) -> Result<MultiPoly> {
        let mut neg = false;
        match self.peek() {
            Some(Tok::Minus) => {
                neg = true;
                self.pos += 1;
            }
            Some(Tok::Plus) => self.pos += 1,
            _ => {}
        }
        let first = self.term()?;
        let mut acc = if neg { -first } else { first };
        loop {
            match self.peek() {
                Some(Tok::Plus) => {
                    self.pos += 1;
                    acc = &acc + &self.term()?;
                }
                Some(Tok::Minus) => {
                    self.pos += 1;
                    acc = &acc - &self.term()?;
                }
                _ => return Ok(acc),
            }
        }
    }

    fn term(&mut self) -> Result<MultiPoly> {
        let mut acc = self.factor()?;
        while let Some(Tok::Star) = self.peek() {
            self.pos += 1;
            acc = &acc * &self.factor()?;
        }
        if matches!(self.peek(), Some(Tok::Ident(_)) | Some(Tok::Int(_)) | Some(Tok::LParen)) {
            return Err(self.err("implicit multiplication is not allowed; use `*`"));
        }
        Ok(acc)
    }

    fn factor(&mut self) -> Result<MultiPoly> {
        let base = self.base()?;
        if let Some(Tok::Caret) = self.peek() {
            self.pos += 1;
            match self.bump() {
                Some(Tok::Int(e)) => {
                    let e: u32 = e.try_into().map_err(|_| self.err("exponent too large"))?;
                    Ok(base.pow(e))
                }
                _ => {
                    self.pos -= 1;
                    Err(self.err("expected a non-negative integer exponent"))
                }
            }
        } else {
            Ok(base)
        }
    }

    fn base(&mut self) -> Result<MultiPoly> {
        match self.bump() {
            Some(Tok::Int(n)) => {
                if let Some(Tok::Slash) = self.peek() {
                    self.pos += 1;
                    match self.bump() {
                        Some(Tok::Int(d)) if !d.is_zero() => {
                            Ok(MultiPoly::constant(self.ring, Rational::new(n, d)))
                        }
                        _ => {
                            self.pos -= 1;
                            Err(self.err("expected a nonzero integer denominator"))
                        }
                    }
                } else {
                    Ok(MultiPoly::constant(self.ring, Rational::from_integer(n)))
                }
            }
            Some(Tok::Ident(name)) => match self.ring.index_of(&name) {
                Some(i) => Ok(MultiPoly::var(self.ring, i)),
                None => {
                    self.pos -= 1;
                    Err(self.err(format!("undeclared variable `{name}`")))
                }
            },
            Some(Tok::LParen) => {
                let e = self.expr()?;
                match self.bump() {
                    Some(Tok::RParen) => Ok(e),
                    _ => {
                        self.pos -= 1;
                        Err(self.err("expected `)`"))
                    }
                }
            }
            _ => {
                self.pos -= 1;
                Err(self.err("expected a number, a variable or `(`"))
            }
        }
    }
}

fn parse_list(ring: &Ring, src: &str, line: usize, col: usize) -> Result<Vec<MultiPoly>> {
    let toks = tokenize(src, line, col)?;
    let end = (line, col + src.chars().count());
    let mut p = Parser { toks: &toks, pos: 0, ring, end };
    let mut out = vec![p.expr()?];
    while p.pos < toks.len() {
        match p.bump() {
            Some(Tok::Comma) => out.push(p.expr()?),
            _ => {
                p.pos -= 1;
                return Err(p.err("expected `,` or end of statement"));
            }
        }
    }
    Ok(out)
}

/// Parses one polynomial over `ring`.
pub fn parse_polynomial(ring: &Ring, src: &str) -> Result<MultiPoly> {
    let mut list = parse_list(ring, src, 1, 1)?;
    if list.len() != 1 {
        return Err(parse_err(1, 1, "expected a single polynomial"));
    }
    Ok(list.remove(0))
}

/// A parsed spec together with non-fatal diagnostics.
#[derive(Debug, Clone)]
pub struct ParsedVariety {
    pub spec: VarietySpec,
    pub warnings: Vec<String>,
}

struct Statement<'a> {
    line: usize,
    col: usize,
    keyword: &'a str,
    body: &'a str,
    body_col: usize,
}

fn statements(text: &str) -> Vec<Statement<'_>> {
    let mut out = Vec::new();
    for (ln, raw) in text.lines().enumerate() {
        let line = raw.split('#').next().unwrap_or("");
        let mut offset = 0;
        for part in line.split(';') {
            let start = offset;
            offset += part.len() + 1;
            let trimmed = part.trim_start();
            if trimmed.trim().is_empty() {
                continue;
            }
            let lead = part.len() - trimmed.len();
            let col = start + lead + 1;
            let kw_len = trimmed.find(char::is_whitespace).unwrap_or(trimmed.len());
            let keyword = &trimmed[..kw_len];
            let body = &trimmed[kw_len..];
            out.push(Statement { line: ln + 1, col, keyword, body: body.trim_end(), body_col: col + kw_len });
        }
    }
    out
}

fn ident_list(body: &str, line: usize, col: usize) -> Result<Vec<String>> {
    let mut names = Vec::new();
    let mut offset = 0;
    for part in body.split(',') {
        let name = part.trim();
        let c = col + offset + (part.len() - part.trim_start().len());
        offset += part.len() + 1;
        let mut chars = name.chars();
        let ok = matches!(chars.next(), Some(ch) if ch.is_ascii_alphabetic())
            && chars.all(|ch| ch.is_ascii_alphanumeric() || ch == '_');
        if !ok {
            return Err(parse_err(line, c, format!("invalid identifier `{name}`")));
        }
        names.push(name.to_string());
    }
    Ok(names)
}

/// Parses a variety spec. Codimension is computed from a Groebner basis
/// when the `codim` section is absent; a declared value that disagrees
/// with the computed one is kept and reported as a warning.
pub fn parse_variety(text: &str) -> Result<ParsedVariety> {
    let stmts = statements(text);
    let mut vars: Option<Vec<String>> = None;
    let mut params: Vec<String> = Vec::new();
    let mut gens_src: Vec<(usize, usize, &str)> = Vec::new();
    let mut codim: Option<usize> = None;
    let mut homogeneous = false;
    let mut qform_src: Option<(usize, usize, &str)> = None;
    for st in &stmts {
        match st.keyword {
            "vars" => vars = Some(ident_list(st.body, st.line, st.body_col)?),
            "params" => params.extend(ident_list(st.body, st.line, st.body_col)?),
            "gens" => gens_src.push((st.line, st.body_col, st.body)),
            "codim" => {
                let v = st.body.trim();
                codim = Some(v.parse().map_err(|_| parse_err(st.line, st.body_col, format!("invalid codimension `{v}`")))?);
            }
            "homogeneous" => {
                if !st.body.trim().is_empty() {
                    return Err(parse_err(st.line, st.body_col, "`homogeneous` takes no argument"));
                }
                homogeneous = true;
            }
            "qform" => qform_src = Some((st.line, st.body_col, st.body)),
            other => return Err(parse_err(st.line, st.col, format!("unknown section `{other}`"))),
        }
    }
    let vars = vars.ok_or_else(|| parse_err(1, 1, "missing `vars` section"))?;
    if gens_src.is_empty() {
        return Err(parse_err(1, 1, "missing `gens` section"));
    }
    let ring = VariableRing::new(
        vars.iter()
            .map(|v| (v.clone(), VarClass::Ambient))
            .chain(params.iter().map(|p| (p.clone(), VarClass::Auxiliary))),
    )
    .map_err(|e| parse_err(1, 1, e.to_string()))?;
    let mut gens = Vec::new();
    for (line, col, body) in gens_src {
        gens.extend(parse_list(&ring, body, line, col)?);
    }
    let n = vars.len();
    let qform = match qform_src {
        None => None,
        Some((line, col, body)) => {
            let mut vals = Vec::new();
            for item in body.split(|c: char| c == ',' || c.is_whitespace()).filter(|s| !s.is_empty()) {
                vals.push(
                    crate::poly::parse_rational(item)
                        .ok_or_else(|| parse_err(line, col, format!("invalid rational `{item}` in qform")))?,
                );
            }
            if vals.len() != n * n {
                return Err(parse_err(line, col, format!("qform needs {} entries, found {}", n * n, vals.len())));
            }
            Some(vals.chunks(n).map(<[Rational]>::to_vec).collect())
        }
    };
    let mut warnings = Vec::new();
    let computed = computed_codim(&ring, &gens, n);
    let codim = match (codim, computed) {
        (Some(c), Some(k)) => {
            if c != k {
                warnings.push(format!("declared codim {c} differs from the computed codimension {k}"));
            }
            c
        }
        (Some(c), None) => c,
        (None, Some(k)) => k,
        (None, None) => return Err(Error::invalid("codimension could not be computed; declare `codim`")),
    };
    let spec = VarietySpec::new(&ring, gens, codim, qform)?.require_homogeneous(homogeneous)?;
    Ok(ParsedVariety { spec, warnings })
}

/// `n - dim V(I)` over the ambient variables, or `None` when the count is
/// unavailable (empty variety or budget).
fn computed_codim(ring: &Ring, gens: &[MultiPoly], n: usize) -> Option<usize> {
    let ideal = crate::ideal::Ideal::new(ring, gens.to_vec()).ok()?;
    let dim = crate::ideal::with_pair_budget(2000, || ideal.dimension()).ok()??;
    let params = ring.len() - n;
    dim.checked_sub(params).and_then(|d| n.checked_sub(d))
}

/// Prints a spec in the grammar accepted by [`parse_variety`].
pub fn print_variety(spec: &VarietySpec) -> String {
    let ring = spec.ring();
    let names = |class: VarClass| -> Vec<String> {
        ring.indices_of(class).iter().map(|&i| ring.name(i).to_string()).collect()
    };
    let mut out = format!("vars {}\n", names(VarClass::Ambient).join(", "));
    let params = names(VarClass::Auxiliary);
    if !params.is_empty() {
        out.push_str(&format!("params {}\n", params.join(", ")));
    }
    let gens: Vec<String> = spec.gens().iter().map(ToString::to_string).collect();
    out.push_str(&format!("gens {}\n", gens.join(", ")));
    out.push_str(&format!("codim {}\n", spec.codim()));
    if spec.is_homogeneous() {
        out.push_str("homogeneous\n");
    }
    if !spec.qform_is_identity() {
        let vals: Vec<String> = spec.qform().iter().flatten().map(format_rational).collect();
        out.push_str(&format!("qform {}\n", vals.join(", ")));
    }
    out
}

/// Parses a comma-separated list of rationals such as `2,0` or `1/2,-3`.
pub fn parse_point(text: &str) -> Result<Vec<Rational>> {
    text.split(',')
        .enumerate()
        .map(|(k, item)| {
            crate::poly::parse_rational(item.trim())
                .ok_or_else(|| parse_err(1, k + 1, format!("invalid rational `{}`", item.trim())))
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn hyperbola_spec() {
        let p = parse_variety("vars x,y; gens 4*x^2-9*y^2-1; codim 1").unwrap();
        assert_eq!(p.spec.n(), 2);
        assert_eq!(p.spec.codim(), 1);
        assert!(!p.spec.is_homogeneous());
        assert_eq!(p.spec.gens()[0].to_string(), "4*x^2-9*y^2-1");
        assert!(p.warnings.is_empty());
    }

    #[test]
    fn determinant_cone() {
        let p = parse_variety("vars x11,x12,x21,x22; gens x11*x22-x12*x21; codim 1; homogeneous").unwrap();
        assert!(p.spec.is_homogeneous());
        assert_eq!(p.spec.n(), 4);
    }

    #[test]
    fn malformed_inputs() {
        assert!(matches!(parse_variety("vars x; gens x^-1"), Err(Error::Parse { .. })));
        assert!(matches!(parse_variety("vars x,y; gens 2x"), Err(Error::Parse { .. })));
        assert!(matches!(parse_variety("vars x; gens x*y"), Err(Error::Parse { .. })));
        assert!(matches!(parse_variety("vars x; gens (x+1"), Err(Error::Parse { .. })));
        assert!(matches!(parse_variety("vars x; gens x; bogus 3"), Err(Error::Parse { .. })));
        match parse_variety("vars x,y\ngens x^2+ *y") {
            Err(Error::Parse { line, column, .. }) => assert_eq!((line, column), (2, 11)),
            other => panic!("unexpected {other:?}"),
        }
    }

    #[test]
    fn codim_is_computed_and_checked() {
        let p = parse_variety("vars x,y,z; gens x, y").unwrap();
        assert_eq!(p.spec.codim(), 2);
        let p = parse_variety("vars x,y,z; gens x; codim 2").unwrap();
        assert_eq!(p.warnings.len(), 1);
    }

    #[test]
    fn print_round_trip() {
        let src = "vars x, y\nparams a\ngens 1/2*x*y-a, x^2\ncodim 1\nqform 2, 1, 1, 2\n";
        let p = parse_variety(src).unwrap();
        let printed = print_variety(&p.spec);
        let again = parse_variety(&printed).unwrap();
        assert_eq!(again.spec, p.spec);
    }

    #[test]
    fn points() {
        assert_eq!(parse_point("2, 0").unwrap(), vec![crate::poly::int(2), crate::poly::int(0)]);
        assert!(parse_point("1/0").is_err());
    }
}
