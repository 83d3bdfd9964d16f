use super::pipeline::{saturation_elements, singular_ideal};
use super::spec::VarietySpec;
use crate::error::{Error, Result};
use crate::ideal::Ideal;
use crate::linalg;
use crate::poly::{MonomialOrder, MultiPoly, VarClass};

/// Dual variety of a homogeneous `X`, as a spec over the same ring (the
/// dual coordinates reuse the names of the ambient ones).
///
/// Builds the conormal ideal `I_X + ⟨y - qform⁻¹·Σ λ_i ∇f_i⟩`, saturates by
/// `I_{X_sing}·⟨x⟩` and eliminates `x` and the multipliers.
pub fn dual_variety(spec: &VarietySpec) -> Result<VarietySpec> {
    if !spec.is_homogeneous() {
        return Err(Error::invalid("the dual variety needs homogeneous generators"));
    }
    let base = spec.ring();
    let x = spec.ambient();
    let n = x.len();
    let s = spec.gens().len();

    let mut ring = base.clone();
    for i in 0..s {
        let name = ring.fresh_name(&format!("lambda{}", i + 1));
        ring = ring.extended([(name, VarClass::Auxiliary)])?;
    }
    let lam: Vec<usize> = (base.len()..ring.len()).collect();
    let y_start = ring.len();
    for &xj in x.iter().take(n) {
        let name = ring.fresh_name(&format!("{}_dual", base.name(xj)));
        ring = ring.extended([(name, VarClass::Auxiliary)])?;
    }
    let y: Vec<usize> = (y_start..ring.len()).collect();
    let tname = ring.fresh_name("t");
    let ring = ring.extended([(tname, VarClass::Auxiliary)])?;
    let ti = ring.len() - 1;

    let gens: Vec<MultiPoly> = spec.gens().iter().map(|f| f.to_ring(&ring)).collect::<Result<_>>()?;
    let qinv = linalg::inverse(spec.qform())?;
    // Σ λ_i ∂f_i/∂x_k
    let grad: Vec<MultiPoly> = x
        .iter()
        .map(|&k| {
            gens.iter()
                .zip(&lam)
                .fold(MultiPoly::zero(&ring), |acc, (f, &l)| &acc + &(&MultiPoly::var(&ring, l) * &f.derivative(k)))
        })
        .collect();
    let mut conormal = gens.clone();
    for j in 0..n {
        let mut rhs = MultiPoly::zero(&ring);
        for k in 0..n {
            rhs = &rhs + &grad[k].scale(&qinv[j][k]);
        }
        conormal.push(&MultiPoly::var(&ring, y[j]) - &rhs);
    }

    let sing = singular_ideal(spec)?.reduced_basis(&MonomialOrder::Grevlex)?.into_owned();
    let mut products = Vec::new();
    for g in &sing {
        for &k in &x {
            let p = &g.to_ring(&ring)? * &MultiPoly::var(&ring, k);
            if !products.contains(&p) {
                products.push(p);
            }
        }
    }
    let mut drop: Vec<usize> = x.clone();
    drop.extend(&lam);
    drop.push(ti);
    let t = MultiPoly::var(&ring, ti);
    let one = MultiPoly::one(&ring);
    let mut acc: Option<Ideal> = None;
    for h in saturation_elements(&products) {
        let mut gs = conormal.clone();
        gs.push(&one - &(&t * &h));
        let piece = Ideal::new(&ring, gs)?.eliminate(&drop)?;
        acc = Some(match acc {
            None => piece,
            Some(a) => a.intersect(&piece)?,
        });
    }
    let eliminated = acc.expect("at least one saturation element");

    // y_j becomes x_j again; parameters keep their names
    let images: Vec<MultiPoly> = (0..ring.len())
        .map(|v| {
            if let Some(j) = y.iter().position(|&yj| yj == v) {
                MultiPoly::var(base, x[j])
            } else if v < base.len() {
                MultiPoly::var(base, v)
            } else {
                MultiPoly::zero(base)
            }
        })
        .collect();
    let mapped: Vec<MultiPoly> =
        eliminated.gens().iter().map(|g| g.compose(base, &images)).collect::<Result<_>>()?;
    let ideal = Ideal::new(base, mapped)?;
    let basis = ideal.reduced_basis(&MonomialOrder::Grevlex)?.into_owned();
    if basis.is_empty() {
        return Err(Error::Degenerate("the conormal elimination is the zero ideal".into()));
    }
    if basis.len() == 1 && basis[0].is_constant() {
        return Err(Error::Degenerate("the dual variety is empty".into()));
    }
    let dim = ideal.dimension()?.expect("proper ideal");
    let codim = (n + spec.params().len()).saturating_sub(dim);
    VarietySpec::new(base, basis, codim.clamp(1, n), Some(spec.qform().clone()))
}
