//! Euler classes of `O(m,n) = (ω1^∨)^m ⊗ (ω2^∨)^n` and `χO(m,n)`.

use super::{dual_class, dual_class_bt1};
use crate::error::Result;
use crate::hcoeff::HCoeff;
use crate::rings::bt1::{self, Bt1Elem};
use crate::rings::bt2::{gens, Bt2Elem, CT, CW1, CW2, CXT, CXW1, CXW2, Z00, Z01, Z10, Z11};

/// `Q = e(O(2)) = ĉ_ω(τ(ι^{-2})ζ0 + e^{-2}κ·ĉ_{χω})` over BT¹.
pub fn q_bt1() -> Result<Bt1Elem> {
    let inner = Bt1Elem::z0()
        .scale(&HCoeff::t(2)?)?
        .add(&dual_class_bt1(bt1::CXW)?.scale(&HCoeff::u(1))?);
    dual_class_bt1(bt1::CW)?.mul(&inner)
}

/// `Q₁` (`first = true`) or `Q₂`.
pub fn q(first: bool) -> Result<Bt2Elem> {
    let (cw, cxw, z) = if first {
        (CW1, CXW1, Z01)
    } else {
        (CW2, CXW2, Z10)
    };
    let inner = Bt2Elem::mono(HCoeff::t(2)?, &[(Z00, 1), (z, 1)])?
        .add(&dual_class(cxw)?.scale(&HCoeff::u(1))?);
    dual_class(cw)?.mul(&inner)
}

/// The class `ζ₁` pulled back along the map classifying `O(m,n)` or `χO(m,n)`.
pub fn zeta1(m: i64, n: i64, twisted: bool) -> Result<Bt2Elem> {
    let z = |a: usize, b: usize| Bt2Elem::mono(HCoeff::int(1), &[(a, 1), (b, 1)]);
    match (m.rem_euclid(2), n.rem_euclid(2), twisted) {
        (0, 0, false) => Ok(Bt2Elem::one()),
        (1, 0, false) => z(Z10, Z11),
        (0, 1, false) => z(Z01, Z11),
        (1, 1, false) => z(Z01, Z10),
        (0, 0, true) => Ok(Bt2Elem::h(HCoeff::xi())),
        (1, 0, true) => z(Z00, Z01),
        (0, 1, true) => z(Z00, Z10),
        _ => z(Z00, Z11),
    }
}

/// `e(O(m,n))`, or `e(χO(m,n))` when `twisted`.
pub fn euler_omn(m: i64, n: i64, twisted: bool) -> Result<Bt2Elem> {
    let (k, l) = (m.div_euclid(2), n.div_euclid(2));
    let base = match (m.rem_euclid(2), n.rem_euclid(2), twisted) {
        (0, 0, false) => Bt2Elem::zero(),
        (1, 0, false) => dual_class(CW1)?,
        (0, 1, false) => dual_class(CW2)?,
        (1, 1, false) => dual_class(CT)?,
        (0, 0, true) => Bt2Elem::h(HCoeff::e_pow(2)),
        (1, 0, true) => dual_class(CXW1)?,
        (0, 1, true) => dual_class(CXW2)?,
        _ => dual_class(CXT)?,
    };
    let even = q(true)?.scale_int(k)?.add(&q(false)?.scale_int(l)?);
    Ok(base.add(&zeta1(m, n, twisted)?.mul(&even)?))
}

/// `e(ω⊗μ) = e(ω) + ζ₁·e(μ)` for `μ` with fibers of trivial action.
pub fn euler_tensor_fixed(e_omega: &Bt2Elem, zeta1: &Bt2Elem, e_mu: &Bt2Elem) -> Result<Bt2Elem> {
    Ok(e_omega.add(&zeta1.mul(e_mu)?))
}

/// `e(O(m+2k, n+2ℓ))` computed from `e(O(m,n))` and `e(O(2k,2ℓ))`.
pub fn euler_by_recursion(m: i64, n: i64, k: i64, l: i64, twisted: bool) -> Result<Bt2Elem> {
    euler_tensor_fixed(
        &euler_omn(m, n, twisted)?,
        &zeta1(m, n, twisted)?,
        &euler_omn(2 * k, 2 * l, false)?,
    )
}

/// Checks the closed formulas against the recursion for `|m|,|n| ≤ bound`
/// and `k,ℓ ∈ {−1,0,1}`; returns the failing cases.
pub fn recursion_failures(bound: i64) -> Result<Vec<(i64, i64, i64, i64, bool)>> {
    let mut bad = Vec::new();
    for twisted in [false, true] {
        for m in -bound..=bound {
            for n in -bound..=bound {
                for k in -1..=1 {
                    for l in -1..=1 {
                        let lhs = euler_omn(m + 2 * k, n + 2 * l, twisted)?;
                        if lhs != euler_by_recursion(m, n, k, l, twisted)? {
                            bad.push((m, n, k, l, twisted));
                        }
                    }
                }
            }
        }
    }
    Ok(bad)
}

/// `Q₁ = π₁*Q` and `Q₂ = π₂*Q`.
pub fn q_pullbacks_agree() -> Result<bool> {
    use crate::maps::pullback::pi;
    let qb = q_bt1()?;
    Ok(pi(true, &qb)? == q(true)? && pi(false, &qb)? == q(false)?)
}

/// `Q₁ = e(O(2,0))` and `Q₂ = e(O(0,2))`.
pub fn q_is_euler() -> Result<bool> {
    Ok(euler_omn(2, 0, false)? == q(true)? && euler_omn(0, 2, false)? == q(false)?)
}

/// The tensor class relation specialized to `(ω, μ)`: the `ζ01ζ10ζ00` term dies.
pub fn tensor_relation_check() -> Result<bool> {
    let lhs = gens::z11().mul(&gens::ct())?;
    let rhs = gens::z01()
        .mul(&gens::cw1())?
        .add(&gens::z10().mul(&gens::cw2())?)
        .sub(&Bt2Elem::mono(
            HCoeff::u(1),
            &[(Z00, 1), (Z01, 1), (Z10, 1), (CW1, 1), (CW2, 1)],
        )?);
    Ok(lhs == rhs)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::maps::rho::rho;
    use crate::maps::{TARGET_VARS, X1, X2};
    use crate::laurent::Laurent;

    #[test]
    fn small_cases() {
        assert!(euler_omn(0, 0, false).unwrap().is_zero());
        assert_eq!(euler_omn(1, 0, false).unwrap(), dual_class(CW1).unwrap());
        assert_eq!(
            euler_omn(2, 2, false).unwrap(),
            q(true).unwrap().add(&q(false).unwrap())
        );
        let chi = euler_omn(2, 0, true).unwrap();
        let want = Bt2Elem::h(HCoeff::e_pow(2)).add(&q(true).unwrap().scale(&HCoeff::xi()).unwrap());
        assert_eq!(chi, want);
    }

    #[test]
    fn recursion_matches_closed_forms() {
        assert!(recursion_failures(3).unwrap().is_empty());
        assert!(q_is_euler().unwrap());
        assert!(q_pullbacks_agree().unwrap());
        assert!(tensor_relation_check().unwrap());
    }

    #[test]
    fn three_one_by_parity() {
        let direct = euler_omn(3, 1, false).unwrap();
        let want = dual_class(CT)
            .unwrap()
            .add(&gens::z01().mul(&gens::z10()).unwrap().mul(&q(true).unwrap()).unwrap());
        assert_eq!(direct, want);
    }

    #[test]
    fn underlying_first_chern_class() {
        // Nonequivariantly e(O(m,n)) is −(m·x1 + n·x2) times the image of ζ₁.
        for twisted in [false, true] {
            for m in -3..=3 {
                for n in -3..=3 {
                    let mut lin = Laurent::zero(TARGET_VARS);
                    lin.add_term(unit_exps(X1), -m);
                    lin.add_term(unit_exps(X2), -n);
                    let z = rho(&zeta1(m, n, twisted).unwrap()).unwrap();
                    let want = crate::maps::rho::canonical(&z.mul(&lin).unwrap());
                    assert_eq!(rho(&euler_omn(m, n, twisted).unwrap()).unwrap(), want, "{m} {n}");
                }
            }
        }
    }

    fn unit_exps(v: usize) -> Vec<i64> {
        let mut e = vec![0; TARGET_VARS];
        e[v] = 1;
        e
    }
}
