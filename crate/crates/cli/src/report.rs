use edvar::ed::{ComparisonReport, EdPoly};
use edvar::poly::rational::format_rational;
use edvar::{MultiPoly, Rational};
use serde_json::{json, Map, Value};

pub fn rational(r: &Rational) -> Value {
    Value::String(format_rational(r))
}

pub fn rationals(rs: &[Rational]) -> Value {
    Value::Array(rs.iter().map(rational).collect())
}

pub fn poly(p: &MultiPoly) -> Value {
    Value::String(p.to_string())
}

/// Coefficients `p_0..p_d`: rationals when numeric, polynomials otherwise.
pub fn edpoly(e: &EdPoly) -> Value {
    let coefficients = match e.numeric_coeffs() {
        Some(cs) => rationals(&cs),
        None => Value::Array(e.coeffs().iter().map(poly).collect()),
    };
    json!({
        "polynomial": e.to_string(),
        "ring": e.ring().names(),
        "degree": e.degree(),
        "coefficients": coefficients,
        "monic": e.is_monic(),
    })
}

pub fn comparison(r: &ComparisonReport) -> Value {
    json!({ "holds": r.holds, "lhs": edpoly(&r.lhs), "rhs": edpoly(&r.rhs) })
}

/// Plain-text rendering of a report: one `key: value` line per scalar,
/// nested objects indented.
pub fn render_text(v: &Value) -> String {
    let mut out = String::new();
    render_into(&mut out, v, 0);
    out
}

fn scalar(v: &Value) -> Option<String> {
    match v {
        Value::Null => Some("-".into()),
        Value::Bool(b) => Some(b.to_string()),
        Value::Number(n) => Some(n.to_string()),
        Value::String(s) => Some(s.clone()),
        Value::Array(a) if a.iter().all(|x| !x.is_object() && !x.is_array()) => {
            Some(format!("[{}]", a.iter().filter_map(scalar).collect::<Vec<_>>().join(", ")))
        }
        _ => None,
    }
}

fn render_into(out: &mut String, v: &Value, depth: usize) {
    let pad = "  ".repeat(depth);
    match v {
        Value::Object(map) => render_map(out, map, depth),
        Value::Array(items) => {
            for item in items {
                match scalar(item) {
                    Some(s) => out.push_str(&format!("{pad}- {s}\n")),
                    None => {
                        out.push_str(&format!("{pad}-\n"));
                        render_into(out, item, depth + 1);
                    }
                }
            }
        }
        other => out.push_str(&format!("{pad}{}\n", scalar(other).unwrap_or_default())),
    }
}

fn render_map(out: &mut String, map: &Map<String, Value>, depth: usize) {
    let pad = "  ".repeat(depth);
    for (k, v) in map {
        match scalar(v) {
            Some(s) if !s.contains('\n') => out.push_str(&format!("{pad}{k}: {s}\n")),
            Some(s) => {
                out.push_str(&format!("{pad}{k}:\n"));
                for line in s.lines() {
                    out.push_str(&format!("{pad}  {line}\n"));
                }
            }
            None => {
                out.push_str(&format!("{pad}{k}:\n"));
                render_into(out, v, depth + 1);
            }
        }
    }
}
