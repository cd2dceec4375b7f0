//! Characteristic classes: the grading-0 elements `ε₁, ε₂, ε⊕`, the unit group,
//! Euler classes of dual bundles, Euler classes of `O(m,n)` and `χO(m,n)`, and
//! Waner classes.

pub mod euler;
pub mod units;
pub mod waner;

use crate::error::{Error, Result};
use crate::hcoeff::HCoeff;
use crate::rings::bt1::{self, Bt1Elem};
use crate::rings::bt2::{self, Bt2Elem, CT, CW1, CW2, CXT, CXW1, CXW2, Z00, Z01, Z10};

/// `ε₁ = e^{-2}κ·ζ00ζ01·c_{ω1}`.
pub fn eps1() -> Bt2Elem {
    Bt2Elem::mono(HCoeff::u(1), &[(Z00, 1), (Z01, 1), (CW1, 1)]).expect("in fragment")
}

/// `ε₂ = e^{-2}κ·ζ00ζ10·c_{ω2}`.
pub fn eps2() -> Bt2Elem {
    Bt2Elem::mono(HCoeff::u(1), &[(Z00, 1), (Z10, 1), (CW2, 1)]).expect("in fragment")
}

/// `ε⊕ = e^{-4}κ·ζ00²ζ01ζ10·c_{ω1}c_{ω2}`.
pub fn eps_sum() -> Bt2Elem {
    Bt2Elem::mono(HCoeff::u(2), &[(Z00, 2), (Z01, 1), (Z10, 1), (CW1, 1), (CW2, 1)])
        .expect("in fragment")
}

fn one_minus(x: &Bt2Elem) -> Bt2Elem {
    Bt2Elem::one().sub(x)
}

/// Euler class of the dual of the bundle whose Euler class is the generator `gen`.
pub fn dual_class(gen: usize) -> Result<Bt2Elem> {
    let g = Bt2Elem::gen(gen);
    let omk = HCoeff::one_minus_kappa();
    let (e1, e2) = (one_minus(&eps1()), one_minus(&eps2()));
    let r = match gen {
        CW1 => e1.mul(&g)?,
        CXW1 => e1.mul(&g)?.scale(&omk)?,
        CW2 => e2.mul(&g)?,
        CXW2 => e2.mul(&g)?.scale(&omk)?,
        CT => e1.mul(&e2)?.mul(&g)?,
        CXT => e1.mul(&e2)?.mul(&g)?.scale(&omk)?,
        _ => {
            return Err(Error::Unknown {
                kind: "class with a dual",
                name: bt2::NAMES.get(gen).copied().unwrap_or("?").into(),
            })
        }
    };
    Ok(r.neg())
}

/// `dual_class` by generator name.
pub fn dual_class_named(name: &str) -> Result<Bt2Elem> {
    let i = bt2::NAMES
        .iter()
        .position(|n| *n == name)
        .ok_or_else(|| Error::Unknown {
            kind: "class with a dual",
            name: name.into(),
        })?;
    dual_class(i)
}

/// `ε = e^{-2}κ·ζ0·c_ω` in H(BT¹₊).
pub fn eps_bt1() -> Bt1Elem {
    bt2::eps1_bt1()
}

/// Euler classes of the duals of `ω` and `χω` over BT¹.
pub fn dual_class_bt1(gen: usize) -> Result<Bt1Elem> {
    let unit = Bt1Elem::one().sub(&eps_bt1());
    let r = match gen {
        bt1::CW => unit.mul(&Bt1Elem::cw())?,
        bt1::CXW => unit.mul(&Bt1Elem::cxw())?.scale(&HCoeff::one_minus_kappa())?,
        _ => {
            return Err(Error::Unknown {
                kind: "class with a dual",
                name: bt1::NAMES.get(gen).copied().unwrap_or("?").into(),
            })
        }
    };
    Ok(r.neg())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::maps::pullback::{endo, MapName};

    #[test]
    fn dual_is_delta_and_involutive() {
        for gen in [CW1, CXW1, CW2, CXW2, CT, CXT] {
            let d = dual_class(gen).unwrap();
            assert_eq!(endo(MapName::Delta, &Bt2Elem::gen(gen)).unwrap(), d);
            assert_eq!(endo(MapName::Delta, &d).unwrap(), Bt2Elem::gen(gen));
        }
    }

    #[test]
    fn tensor_dual_expands() {
        let want = Bt2Elem::one()
            .sub(&eps1())
            .sub(&eps2())
            .add(&eps_sum().scale_int(2).unwrap())
            .mul(&Bt2Elem::gen(CT))
            .unwrap()
            .neg();
        assert_eq!(dual_class(CT).unwrap(), want);
    }

    #[test]
    fn zeta_has_no_dual() {
        assert!(dual_class(Z00).is_err());
        assert!(dual_class_named("cw9").is_err());
    }
}
