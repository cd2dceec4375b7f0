//! Restriction to the fixed set `∐ B^{ij}`: the map `η` over ℍ, its reduction
//! `φ̄` over `ℤ[e^{±1}]`, and the inverse `ψ` of `φ̄` on the base-changed ring.
//!
//! A fixed-set element is a 4-tuple indexed by the components `00, 01, 10, 11`.
//! On component `k` every `ζ` except `ζ_k` is invertible.

use super::basechange::{Base, BcElem};
use super::{class_shape, evaluate, zeta, Ops, COMPONENTS, SCALAR, TARGET_VARS, X1, X2};
use crate::error::{Error, Result};
use crate::hcoeff::HCoeff;
use crate::laurent::{Exps, Laurent, Named};
use crate::rewrite::Poly;
use crate::rings::bt2::{Bt2Elem, CT, CW1, CW2, CXT, CXW1, CXW2, NVARS};

pub type Tuple<C> = [Laurent<C>; 4];

/// Variable names of a `φ̄` component.
pub const PHI_NAMES: [&str; TARGET_VARS] = ["e", "z00", "z01", "z10", "z11", "x1", "x2"];
/// Variable names of an `η` component; the scalar slot is unused.
pub const ETA_NAMES: [&str; TARGET_VARS] = ["_", "z00", "z01", "z10", "z11", "x1", "x2"];

fn exps(pairs: &[(usize, i64)]) -> Exps {
    let mut e = vec![0; TARGET_VARS];
    for &(v, k) in pairs {
        e[v] += k;
    }
    e
}

/// `ξ·∏_{j≠k} ζ_j⁻¹`, the value of `ζ_k` on component `k`.
fn missing_zeta(k: usize) -> Exps {
    exps(&(0..4).filter(|&j| j != k).map(|j| (zeta(j), -1)).collect::<Vec<_>>())
}

/// `η` of a flat generator on component `k`.
pub fn eta_generator(gen: usize, k: usize) -> Laurent<HCoeff> {
    match class_shape(gen) {
        None if gen == k => Laurent::term(HCoeff::xi(), missing_zeta(k)),
        None => Laurent::var(zeta(gen), TARGET_VARS),
        Some(s) if !s.contains(k) => s
            .linear_form::<HCoeff>()
            .mul(&Laurent::term(HCoeff::int(1), s.zeta_shift()))
            .expect("in fragment"),
        Some(s) => {
            let lin = s.linear_form::<HCoeff>().scale(&HCoeff::xi()).expect("in fragment");
            let mut f = Laurent::constant(HCoeff::e_pow(2), TARGET_VARS).add(&lin);
            f = f.mul(&Laurent::term(HCoeff::int(1), s.zeta_shift_sigma())).expect("in fragment");
            f
        }
    }
}

/// `φ̄` of a flat generator on component `k`.
pub fn phi_generator(gen: usize, k: usize) -> Laurent<i64> {
    match class_shape(gen) {
        None if gen == k => Laurent::zero(TARGET_VARS),
        None => Laurent::var(zeta(gen), TARGET_VARS),
        Some(s) if !s.contains(k) => s
            .linear_form::<i64>()
            .mul(&Laurent::term(1, s.zeta_shift()))
            .expect("integer product"),
        Some(s) => {
            let mut e = s.zeta_shift_sigma();
            e[SCALAR] = 2;
            Laurent::term(1, e)
        }
    }
}

fn eta_ops<'a>() -> Ops<'a, Laurent<HCoeff>> {
    Ops {
        zero: Laurent::zero(TARGET_VARS),
        one: Laurent::one(TARGET_VARS),
        add: &|a: &Laurent<HCoeff>, b: &Laurent<HCoeff>| a.add(b),
        mul: &|a: &Laurent<HCoeff>, b: &Laurent<HCoeff>| a.mul(b),
    }
}

fn phi_ops<'a>() -> Ops<'a, Laurent<i64>> {
    Ops {
        zero: Laurent::zero(TARGET_VARS),
        one: Laurent::one(TARGET_VARS),
        add: &|a: &Laurent<i64>, b: &Laurent<i64>| a.add(b),
        mul: &|a: &Laurent<i64>, b: &Laurent<i64>| a.mul(b),
    }
}

/// `η` of an unreduced flat polynomial.
pub fn eta_poly(x: &Poly<HCoeff>) -> Result<Tuple<HCoeff>> {
    let comp = |k: usize| -> Result<Laurent<HCoeff>> {
        let imgs: Vec<_> = (0..NVARS).map(|g| eta_generator(g, k)).collect();
        evaluate(x, &imgs, |c| Ok(Laurent::constant(c.clone(), TARGET_VARS)), &eta_ops())
    };
    Ok([comp(0)?, comp(1)?, comp(2)?, comp(3)?])
}

pub fn eta(x: &Bt2Elem) -> Result<Tuple<HCoeff>> {
    eta_poly(x.poly())
}

/// `h_phi` applied to the coefficients of an `η` component.
pub fn reduce_eta(x: &Laurent<HCoeff>) -> Laurent<i64> {
    let mut r = Laurent::zero(TARGET_VARS);
    for (e, c) in x.terms() {
        for (f, k) in c.h_phi().terms() {
            let mut ex = e.clone();
            ex[SCALAR] += f[0];
            r.add_term(ex, *k);
        }
    }
    r
}

fn phi_scalar(c: &HCoeff) -> Laurent<i64> {
    let mut r = Laurent::zero(TARGET_VARS);
    for (f, k) in c.h_phi().terms() {
        r.add_term(exps(&[(SCALAR, f[0])]), *k);
    }
    r
}

/// `φ̄` of an unreduced flat polynomial.
pub fn phi_poly(x: &Poly<HCoeff>) -> Result<Tuple<i64>> {
    let comp = |k: usize| -> Result<Laurent<i64>> {
        let imgs: Vec<_> = (0..NVARS).map(|g| phi_generator(g, k)).collect();
        evaluate(x, &imgs, |c| Ok(phi_scalar(c)), &phi_ops())
    };
    Ok([comp(0)?, comp(1)?, comp(2)?, comp(3)?])
}

pub fn phi(x: &Bt2Elem) -> Result<Tuple<i64>> {
    phi_poly(x.poly())
}

/// `φ̄` on `P ⊗ ℤ[e^{±1}]`.
pub fn phi_bc(x: &BcElem) -> Result<Tuple<i64>> {
    if x.base() != Base::Phi {
        return Err(Error::Domain("φ̄ needs the fixed-point base change".into()));
    }
    let mut out: Tuple<i64> = std::array::from_fn(|_| Laurent::zero(TARGET_VARS));
    for (k, slot) in out.iter_mut().enumerate() {
        let imgs: Vec<_> = (0..NVARS).map(|g| phi_generator(g, k)).collect();
        for (m, s) in x.terms() {
            let mut t = Laurent::zero(TARGET_VARS);
            for (f, c) in s.terms() {
                t.add_term(exps(&[(SCALAR, f[0])]), *c);
            }
            for (i, &p) in m.0.iter().enumerate() {
                if p > 0 {
                    t = t.mul(&imgs[i].pow(p)?)?;
                }
            }
            *slot = slot.add(&t);
        }
    }
    Ok(out)
}

/// The tuple with `x` on component `k` and zero elsewhere.
pub fn on_component(k: usize, x: Laurent<i64>) -> Tuple<i64> {
    let mut t: Tuple<i64> = std::array::from_fn(|_| Laurent::zero(TARGET_VARS));
    t[k] = x;
    t
}

/// The underlying fixed-set class: `φ̄` with `e` and every `ζ` set to 1,
/// keeping only the polynomial in `x1, x2`.
pub fn fixed_set(x: &Bt2Elem) -> Result<[Laurent<i64>; 4]> {
    let t = phi(x)?;
    Ok(t.map(|c| {
        let mut r = Laurent::zero(2);
        for (e, k) in c.terms() {
            r.add_term(vec![e[X1], e[X2]], *k);
        }
        r
    }))
}

/// Writes a fixed-set class as `(a,b,c,d)` in `x1, x2`.
pub fn fixed_set_string(t: &[Laurent<i64>; 4]) -> String {
    let parts: Vec<String> = t.iter().map(|c| Named(c, &["x1", "x2"]).to_string()).collect();
    format!("({})", parts.join(","))
}

/// Writes a `φ̄` tuple.
pub fn tuple_string<C: crate::rewrite::Coefficient + std::fmt::Display>(
    t: &Tuple<C>,
    names: &[&str],
) -> String {
    let parts: Vec<String> = t.iter().map(|c| Named(c, names).to_string()).collect();
    format!("({})", parts.join(", "))
}

/// The classes whose support contains component `k`.
fn classes_at(k: usize) -> Vec<usize> {
    [CXW1, CW1, CXW2, CW2, CXT, CT]
        .into_iter()
        .filter(|&g| class_shape(g).is_some_and(|s| s.contains(k)))
        .collect()
}

/// `e^{-4}·ζ^{…}·c·d` with the ζ-part chosen as the complements of the
/// supports of `c` and `d`, shifted by `extra`.
fn psi_product(c: usize, d: usize, extra: &Exps) -> Result<BcElem> {
    let sc = class_shape(c).expect("class");
    let sd = class_shape(d).expect("class");
    let mut z = [0i64; 4];
    for s in [sc, sd] {
        for j in s.complement() {
            z[j] += 1;
        }
    }
    for j in 0..4 {
        z[j] += extra[zeta(j)];
    }
    let mut pairs: Vec<(usize, u32)> = vec![(c, 1), (d, 1)];
    for (j, &k) in z.iter().enumerate() {
        if k < 0 {
            return Err(Error::NotInvertible(format!("z{}", COMPONENTS[j])));
        }
        if k > 0 {
            pairs.push((j, k as u32));
        }
    }
    BcElem::mono(Base::Phi, -4, &pairs)
}

/// `ψ(e_k)`, the idempotent of component `k`: the product of the row and
/// column classes (`cxw1` or `cw1`, `cxw2` or `cw2`) containing `k`.
pub fn psi_idempotent(k: usize) -> Result<BcElem> {
    let row = if k < 2 { CXW1 } else { CW1 };
    let col = if k.is_multiple_of(2) { CXW2 } else { CW2 };
    psi_product(row, col, &vec![0; TARGET_VARS])
}

/// `ψ(ζ_j⁻¹ e_k)`, `j ≠ k`: the two classes containing `k` other than the
/// one supported on `{k, j}`, with one fewer `ζ_j`.
pub fn psi_inverse_zeta(k: usize, j: usize) -> Result<BcElem> {
    if j == k {
        return Err(Error::NotInvertible(format!(
            "z{} on component {}",
            COMPONENTS[j], COMPONENTS[k]
        )));
    }
    let cs: Vec<usize> = classes_at(k)
        .into_iter()
        .filter(|&g| !class_shape(g).expect("class").contains(j))
        .collect();
    psi_product(cs[0], cs[1], &exps(&[(zeta(j), -1)]))
}

/// `e^{-2}·c·χc` for the pair of classes of factor `i` (1 or 2).
fn x_lift(i: usize) -> Result<BcElem> {
    let (c, d) = if i == 1 { (CW1, CXW1) } else { (CW2, CXW2) };
    BcElem::mono(Base::Phi, -2, &[(c, 1), (d, 1)])
}

/// `ψ`: the algebra map inverse to `φ̄`, extended additively from the values on
/// component generators.
pub fn psi(t: &Tuple<i64>) -> Result<BcElem> {
    let b = Base::Phi;
    let mut out = BcElem::zero(b);
    for (k, comp) in t.iter().enumerate() {
        if comp.is_zero() {
            continue;
        }
        let idem = psi_idempotent(k)?;
        let inv: Vec<Option<BcElem>> = (0..4)
            .map(|j| if j == k { Ok(None) } else { psi_inverse_zeta(k, j).map(Some) })
            .collect::<Result<_>>()?;
        let xs = [x_lift(1)?, x_lift(2)?];
        for (e, c) in comp.terms() {
            if e[zeta(k)] != 0 {
                return Err(Error::NotInvertible(format!(
                    "z{} on component {}",
                    COMPONENTS[k], COMPONENTS[k]
                )));
            }
            let mut term = idem.clone();
            for j in 0..4 {
                let p = e[zeta(j)];
                if p > 0 {
                    term = term.mul(&BcElem::gen(b, j).pow(p as u32)?)?;
                } else if p < 0 {
                    let y = inv[j].as_ref().expect("j ≠ k");
                    term = term.mul(&y.pow((-p) as u32)?)?;
                }
            }
            for (i, v) in [X1, X2].into_iter().enumerate() {
                let p = e[v];
                if p < 0 {
                    return Err(Error::Domain("negative power of x".into()));
                }
                term = term.mul(&xs[i].pow(p as u32)?)?;
            }
            let s = Laurent::term(*c, vec![e[SCALAR]]);
            out = out.add(&term.scale(&s)?)?;
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rings::bt2::{gens, presentation_relations};

    fn zero_tuple<C: crate::rewrite::Coefficient>(t: &Tuple<C>) -> bool {
        t.iter().all(|c| c.is_zero())
    }

    #[test]
    fn relations_vanish_under_eta_and_phi() {
        for r in presentation_relations() {
            assert!(zero_tuple(&eta_poly(&r.difference()).unwrap()), "{}", r.name);
            assert!(zero_tuple(&phi_poly(&r.difference()).unwrap()), "{}", r.name);
        }
    }

    #[test]
    fn phi_is_reduced_eta() {
        for g in 0..NVARS {
            for k in 0..4 {
                assert_eq!(reduce_eta(&eta_generator(g, k)), phi_generator(g, k));
            }
        }
    }

    #[test]
    fn idempotents() {
        let mut sum = BcElem::zero(Base::Phi);
        for k in 0..4 {
            let e = psi_idempotent(k).unwrap();
            assert_eq!(e.mul(&e).unwrap(), e);
            sum = sum.add(&e).unwrap();
        }
        assert_eq!(sum, BcElem::one(Base::Phi));
    }

    #[test]
    fn psi_inverts_phi_on_generators() {
        for g in 0..NVARS {
            let x = BcElem::gen(Base::Phi, g);
            assert_eq!(psi(&phi_bc(&x).unwrap()).unwrap(), x, "generator {g}");
        }
    }

    #[test]
    fn fixed_set_of_tensor_class() {
        let t = fixed_set(&gens::ct()).unwrap();
        assert_eq!(fixed_set_string(&t), "(x2 + x1,1,1,x2 + x1)");
    }
}
