//! Waner classes and the total class `W(α) = Σ c_{ω−2k}(α)·t^{n−k}`, computed
//! through `W(ω1 ⊕ … ⊕ ωn) = ∏(ζ^{ωᵢ−2} + c_{ωᵢ}t)`.

use std::fmt;

use crate::error::{Error, Result};
use crate::laurent::Laurent;
use crate::maps::rho::{canonical, rho, Target};
use crate::maps::{class_shape, TARGET_VARS};
use crate::rings::bt2::Bt2Elem;
use crate::rings::bu2::{self, Bu2Elem};

/// A line bundle, given by `ζ^{L−2}` and its Euler class.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LineBundle {
    pub zeta: Bt2Elem,
    pub euler: Bt2Elem,
}

impl LineBundle {
    /// The bundle whose Euler class is the generator `gen`.
    pub fn of_generator(gen: usize) -> Result<Self> {
        let s = class_shape(gen).ok_or_else(|| Error::Domain("not an Euler class".into()))?;
        let pairs: Vec<(usize, u32)> = s.support.iter().map(|&k| (k, 1)).collect();
        Ok(LineBundle {
            zeta: Bt2Elem::mono(crate::hcoeff::HCoeff::int(1), &pairs)?,
            euler: Bt2Elem::gen(gen),
        })
    }

    /// `O(m,n)` or `χO(m,n)`.
    pub fn omn(m: i64, n: i64, twisted: bool) -> Result<Self> {
        Ok(LineBundle {
            zeta: super::euler::zeta1(m, n, twisted)?,
            euler: super::euler::euler_omn(m, n, twisted)?,
        })
    }
}

/// `Σ coeffs[j]·t^j`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WanerClass {
    pub coeffs: Vec<Bt2Elem>,
}

impl WanerClass {
    pub fn one() -> Self {
        WanerClass {
            coeffs: vec![Bt2Elem::one()],
        }
    }

    pub fn rank(&self) -> usize {
        self.coeffs.len() - 1
    }

    /// `c_{ω−2k}`, the coefficient of `t^{n−k}`.
    pub fn class(&self, k: usize) -> Option<&Bt2Elem> {
        self.rank().checked_sub(k).map(|j| &self.coeffs[j])
    }

    pub fn mul(&self, o: &Self) -> Result<Self> {
        let mut out = vec![Bt2Elem::zero(); self.coeffs.len() + o.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in o.coeffs.iter().enumerate() {
                out[i + j] = out[i + j].add(&a.mul(b)?);
            }
        }
        Ok(WanerClass { coeffs: out })
    }
}

impl fmt::Display for WanerClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (j, c) in self.coeffs.iter().enumerate() {
            if j > 0 {
                write!(f, " + ")?;
            }
            write!(f, "({c})")?;
            match j {
                0 => {}
                1 => write!(f, "*t")?,
                _ => write!(f, "*t^{j}")?,
            }
        }
        Ok(())
    }
}

/// `∏(ζ^{Lᵢ−2} + e(Lᵢ)t)`.
pub fn waner_total(bundles: &[LineBundle]) -> Result<WanerClass> {
    if bundles.is_empty() {
        return Err(Error::Domain("a Waner class needs at least one line bundle".into()));
    }
    bundles.iter().try_fold(WanerClass::one(), |acc, b| {
        acc.mul(&WanerClass {
            coeffs: vec![b.zeta.clone(), b.euler.clone()],
        })
    })
}

/// `W(ω1 ⊕ ω2)` and the claimed `s*(ζ^{ω−4}) + s*(ζ2²c_λ)t + s*(c_ω)t²`.
pub fn bu2_waner() -> Result<(WanerClass, WanerClass)> {
    let w = waner_total(&[
        LineBundle::of_generator(crate::rings::bt2::CW1)?,
        LineBundle::of_generator(crate::rings::bt2::CW2)?,
    ])?;
    let z = Bu2Elem::gen;
    let claimed = [
        z(bu2::Z1).mul(&z(bu2::Z2).mul(&z(bu2::Z2))?)?,
        z(bu2::Z2).mul(&z(bu2::Z2))?.mul(&z(bu2::CL))?,
        z(bu2::CW),
    ];
    Ok((
        w,
        WanerClass {
            coeffs: claimed.iter().map(|x| x.sstar().clone()).collect(),
        },
    ))
}

/// `ζ^{ω2−2}c_{ω1} + ζ^{ω1−2}c_{ω2}`.
pub fn middle_coefficient() -> Result<Bt2Elem> {
    let b1 = LineBundle::of_generator(crate::rings::bt2::CW1)?;
    let b2 = LineBundle::of_generator(crate::rings::bt2::CW2)?;
    Ok(b2.zeta.mul(&b1.euler)?.add(&b1.zeta.mul(&b2.euler)?))
}

/// Divides by a single-term unit of the nonequivariant target.
fn divide_by_unit(x: &Target, u: &Target) -> Result<Target> {
    let mut it = u.terms();
    let (e, c) = match (it.next(), it.next()) {
        (Some(t), None) if t.1.abs() == 1 => t,
        _ => return Err(Error::NotInvertible(format!("{}", crate::laurent::Named(u, &crate::maps::rho::NAMES)))),
    };
    let inv = Laurent::term(*c, e.iter().map(|k| -k).collect());
    Ok(canonical(&x.mul(&inv)?))
}

fn elementary_symmetric(ls: &[Target], k: usize) -> Result<Target> {
    let mut e = vec![Laurent::one(TARGET_VARS)];
    e.extend((0..ls.len()).map(|_| Laurent::zero(TARGET_VARS)));
    for l in ls {
        for j in (1..e.len()).rev() {
            e[j] = e[j].add(&e[j - 1].mul(l)?);
        }
    }
    Ok(e[k].clone())
}

/// Checks that the coefficient of `t^j` restricts to `ρ(∏ζ^{Lᵢ−2})·σ_j(ℓ₁,…,ℓₙ)`
/// with `ℓᵢ = ρ(e(Lᵢ))/ρ(ζ^{Lᵢ−2})`, so `c_{ω−2k}` restricts to the Chern class `c_{n−k}`.
pub fn rho_check(bundles: &[LineBundle]) -> Result<bool> {
    let w = waner_total(bundles)?;
    let mut ls = Vec::new();
    let mut unit = Laurent::one(TARGET_VARS);
    for b in bundles {
        let z = rho(&b.zeta)?;
        ls.push(divide_by_unit(&rho(&b.euler)?, &z)?);
        unit = canonical(&unit.mul(&z)?);
    }
    for (j, c) in w.coeffs.iter().enumerate() {
        let want = canonical(&unit.mul(&elementary_symmetric(&ls, j)?)?);
        if rho(c)? != want {
            return Ok(false);
        }
    }
    Ok(true)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rings::bt2::{CT, CW1, CW2, CXT, CXW1, CXW2};

    #[test]
    fn single_bundle() {
        let b = LineBundle::of_generator(CW1).unwrap();
        let w = waner_total(std::slice::from_ref(&b)).unwrap();
        assert_eq!(w.coeffs, vec![b.zeta, b.euler]);
    }

    #[test]
    fn bu2_values() {
        let (w, claimed) = bu2_waner().unwrap();
        assert_eq!(w, claimed);
        assert_eq!(w.coeffs[1], middle_coefficient().unwrap());
    }

    #[test]
    fn restricts_to_chern_classes() {
        let all: Vec<LineBundle> = [CW1, CW2, CXW1, CXW2, CT, CXT]
            .iter()
            .map(|&g| LineBundle::of_generator(g).unwrap())
            .collect();
        assert!(rho_check(&all[..2]).unwrap());
        assert!(rho_check(&all[2..5]).unwrap());
        let omn = [LineBundle::omn(2, 1, false).unwrap(), LineBundle::omn(-1, 3, true).unwrap()];
        assert!(rho_check(&omn).unwrap());
    }
}
