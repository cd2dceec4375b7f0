//! The ring P extended along `h_rho: ℍ → ℤ[ι^{±1}]` or `h_phi: ℍ → ℤ[e^{±1}]`.
//!
//! P is free over ℍ on its normal monomials, so an element of the base change
//! is a map from normal monomials to one-variable Laurent polynomials, and the
//! product of two normal monomials is their normal form with mapped coefficients.

use std::collections::BTreeMap;
use std::fmt;

use crate::error::{Error, Result};
use crate::hcoeff::HCoeff;
use crate::laurent::Laurent;
use crate::rewrite::{Monomial, Poly};
use crate::rings::bt2::{display_monomial, is_normal_monomial, Bt2Elem, NVARS};

/// Which ℍ-algebra P is extended to.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Base {
    Rho,
    Phi,
}

impl Base {
    pub fn map(self, c: &HCoeff) -> Laurent<i64> {
        match self {
            Base::Rho => c.h_rho(),
            Base::Phi => c.h_phi(),
        }
    }

    fn unit_name(self) -> &'static str {
        match self {
            Base::Rho => "iota",
            Base::Phi => "e",
        }
    }
}

type Scalar = Laurent<i64>;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BcElem {
    base: Base,
    terms: BTreeMap<Monomial, Scalar>,
}

impl BcElem {
    pub fn zero(base: Base) -> Self {
        BcElem {
            base,
            terms: BTreeMap::new(),
        }
    }

    pub fn scalar(base: Base, s: Scalar) -> Self {
        let mut r = BcElem::zero(base);
        r.add_term(Monomial::one(NVARS), s);
        r
    }

    pub fn one(base: Base) -> Self {
        BcElem::scalar(base, Laurent::one(1))
    }

    /// `k·u^n`, with `u` the base's unit `ι` or `e`.
    pub fn unit_pow(base: Base, k: i64, n: i64) -> Self {
        BcElem::scalar(base, Laurent::term(k, vec![n]))
    }

    /// Image of an element of the flat ring.
    pub fn from_bt2(base: Base, x: &Bt2Elem) -> Self {
        BcElem::from_normal_poly(base, x.poly())
    }

    pub fn gen(base: Base, i: usize) -> Self {
        BcElem::from_bt2(base, &Bt2Elem::gen(i))
    }

    /// `u^n · ∏ gᵢ^kᵢ`, normalized.
    pub fn mono(base: Base, n: i64, pairs: &[(usize, u32)]) -> Result<Self> {
        let m = Bt2Elem::mono(HCoeff::int(1), pairs)?;
        BcElem::from_bt2(base, &m).mul(&BcElem::unit_pow(base, 1, n))
    }

    fn from_normal_poly(base: Base, p: &Poly<HCoeff>) -> Self {
        let mut r = BcElem::zero(base);
        for (m, c) in p.terms() {
            r.add_term(m.clone(), base.map(c));
        }
        r
    }

    pub fn base(&self) -> Base {
        self.base
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &Scalar)> {
        self.terms.iter()
    }

    fn add_term(&mut self, m: Monomial, s: Scalar) {
        debug_assert!(is_normal_monomial(&m));
        let v = match self.terms.remove(&m) {
            Some(old) => old.add(&s),
            None => s,
        };
        if !v.is_zero() {
            self.terms.insert(m, v);
        }
    }

    fn check_base(&self, o: &Self) -> Result<()> {
        if self.base == o.base {
            Ok(())
        } else {
            Err(Error::Domain("elements of different base changes".into()))
        }
    }

    pub fn add(&self, o: &Self) -> Result<Self> {
        self.check_base(o)?;
        let mut r = self.clone();
        for (m, s) in &o.terms {
            r.add_term(m.clone(), s.clone());
        }
        Ok(r)
    }

    pub fn neg(&self) -> Self {
        BcElem {
            base: self.base,
            terms: self.terms.iter().map(|(m, s)| (m.clone(), s.neg())).collect(),
        }
    }

    pub fn sub(&self, o: &Self) -> Result<Self> {
        self.add(&o.neg())
    }

    pub fn scale(&self, s: &Scalar) -> Result<Self> {
        let mut r = BcElem::zero(self.base);
        for (m, c) in &self.terms {
            r.add_term(m.clone(), c.mul(s)?);
        }
        Ok(r)
    }

    pub fn mul(&self, o: &Self) -> Result<Self> {
        self.check_base(o)?;
        let mut r = BcElem::zero(self.base);
        for (m1, s1) in &self.terms {
            for (m2, s2) in &o.terms {
                let s = s1.mul(s2)?;
                let prod = Bt2Elem::from_poly(&Poly::term(HCoeff::int(1), m1.mul(m2)))?;
                for (m, c) in prod.poly().terms() {
                    r.add_term(m.clone(), self.base.map(c).mul(&s)?);
                }
            }
        }
        Ok(r)
    }

    pub fn pow(&self, k: u32) -> Result<Self> {
        let mut r = BcElem::one(self.base);
        for _ in 0..k {
            r = r.mul(self)?;
        }
        Ok(r)
    }
}

impl fmt::Display for BcElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let unit = [self.base.unit_name()];
        for (i, (m, s)) in self.terms.iter().enumerate() {
            if i > 0 {
                write!(f, " + ")?;
            }
            write!(f, "({})*{}", crate::laurent::Named(s, &unit), display_monomial(m))?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rings::bt2::{CW1, CXW1, Z00, Z01, Z10, Z11};

    #[test]
    fn zeta_product_is_iota_squared() {
        let z = BcElem::mono(Base::Rho, 0, &[(Z00, 1), (Z01, 1), (Z10, 1), (Z11, 1)]).unwrap();
        assert_eq!(z, BcElem::unit_pow(Base::Rho, 1, 2));
    }

    #[test]
    fn zeta_product_vanishes_at_fixed_points() {
        let z = BcElem::mono(Base::Phi, 0, &[(Z00, 1), (Z01, 1), (Z10, 1), (Z11, 1)]).unwrap();
        assert!(z.is_zero());
    }

    #[test]
    fn kappa_relation_after_rho() {
        let lhs = BcElem::mono(Base::Rho, 0, &[(Z10, 1), (Z11, 1), (CXW1, 1)]).unwrap();
        let rhs = BcElem::mono(Base::Rho, 0, &[(Z00, 1), (Z01, 1), (CW1, 1)]).unwrap();
        assert_eq!(lhs, rhs);
    }
}
