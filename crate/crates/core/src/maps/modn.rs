//! Reduction modulo the ideal `N ⊂ ℍ` generated by all elements in nonzero
//! gradings, with `ℍ/N ≅ ℤ/2` in grading 0.

use std::fmt;

use crate::error::Result;
use crate::hcoeff::HCoeff;
use crate::rewrite::{Coefficient, Monomial, Poly};
use crate::rings::bt2::{self, Bt2Elem, CT, CW1, CW2, CXT, CXW1, CXW2, Z00, Z01, Z10, Z11};
use crate::rings::bu2::{self, Bu2Elem};

/// An element of `ℍ/N = ℤ/2`.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct F2(bool);

impl F2 {
    pub fn new(n: i64) -> Self {
        F2(n.rem_euclid(2) == 1)
    }

    pub fn value(self) -> u8 {
        self.0 as u8
    }
}

impl Coefficient for F2 {
    fn zero() -> Self {
        F2(false)
    }
    fn from_int(n: i64) -> Self {
        F2::new(n)
    }
    fn is_zero(&self) -> bool {
        !self.0
    }
    fn add(&self, o: &Self) -> Self {
        F2(self.0 ^ o.0)
    }
    fn neg(&self) -> Self {
        *self
    }
    fn mul(&self, o: &Self) -> Result<Self> {
        Ok(F2(self.0 && o.0))
    }
}

impl fmt::Display for F2 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.value())
    }
}

pub fn coeff(c: &HCoeff) -> F2 {
    F2::new(c.mod_n() as i64)
}

/// Reduces the coefficients of a polynomial modulo `N`.
pub fn reduce(x: &Poly<HCoeff>) -> Poly<F2> {
    let mut r = Poly::zero(x.nvars());
    for (m, c) in x.terms() {
        r.add_term(m.clone(), coeff(c));
    }
    r
}

/// `x` modulo `N`, over the basis of normal monomials.
pub fn mod_n(x: &Bt2Elem) -> Poly<F2> {
    reduce(x.poly())
}

fn f2poly(nvars: usize, terms: &[&[(usize, u32)]]) -> Poly<F2> {
    let mut r = Poly::zero(nvars);
    for pairs in terms {
        r.add_term(Monomial::from_pairs(nvars, pairs), F2::new(1));
    }
    r
}

/// A relation over `ℤ/2`, as `lhs − rhs`.
#[derive(Clone, Debug)]
pub struct ModNRelation {
    pub name: &'static str,
    pub difference: Poly<F2>,
}

/// The relations of H(BT²₊)/N as they simplify from the presentation.
pub fn simplified_bt2() -> Vec<ModNRelation> {
    let r = |name, terms: &[&[(usize, u32)]]| ModNRelation {
        name,
        difference: f2poly(bt2::NVARS, terms),
    };
    vec![
        r("z00*z01*z10*z11 = 0", &[&[(Z00, 1), (Z01, 1), (Z10, 1), (Z11, 1)]]),
        r(
            "z10*z11*cxw1 = z00*z01*cw1",
            &[&[(Z10, 1), (Z11, 1), (CXW1, 1)], &[(Z00, 1), (Z01, 1), (CW1, 1)]],
        ),
        r(
            "z01*z11*cxw2 = z00*z10*cw2",
            &[&[(Z01, 1), (Z11, 1), (CXW2, 1)], &[(Z00, 1), (Z10, 1), (CW2, 1)]],
        ),
        r(
            "z00*cT = z10*cxw1 + z01*cxw2",
            &[&[(Z00, 1), (CT, 1)], &[(Z10, 1), (CXW1, 1)], &[(Z01, 1), (CXW2, 1)]],
        ),
        r(
            "z11*cT = z01*cw1 + z10*cw2",
            &[&[(Z11, 1), (CT, 1)], &[(Z01, 1), (CW1, 1)], &[(Z10, 1), (CW2, 1)]],
        ),
        r(
            "z01*cxT = z11*cxw1 + z00*cw2",
            &[&[(Z01, 1), (CXT, 1)], &[(Z11, 1), (CXW1, 1)], &[(Z00, 1), (CW2, 1)]],
        ),
        r(
            "z10*cxT = z00*cw1 + z11*cxw2",
            &[&[(Z10, 1), (CXT, 1)], &[(Z00, 1), (CW1, 1)], &[(Z11, 1), (CXW2, 1)]],
        ),
        r(
            "cT*cxT = cw1*cxw1 + cw2*cxw2",
            &[&[(CT, 1), (CXT, 1)], &[(CW1, 1), (CXW1, 1)], &[(CW2, 1), (CXW2, 1)]],
        ),
    ]
}

/// The relations of H(BU(2)₊)/N, in the formal BU(2) generators.
pub fn simplified_bu2() -> Vec<ModNRelation> {
    let r = |name, terms: &[&[(usize, u32)]]| ModNRelation {
        name,
        difference: f2poly(bu2::NVARS, terms),
    };
    vec![
        r("Z0*Z1*Z2 = 0", &[&[(bu2::Z0, 1), (bu2::Z1, 1), (bu2::Z2, 1)]]),
        r(
            "Z1*cxL = Z0*Z2*cL",
            &[&[(bu2::Z1, 1), (bu2::CXL, 1)], &[(bu2::Z0, 1), (bu2::Z2, 1), (bu2::CL, 1)]],
        ),
        r(
            "Z2^2*cxW = Z0^2*cW",
            &[&[(bu2::Z2, 2), (bu2::CXW, 1)], &[(bu2::Z0, 2), (bu2::CW, 1)]],
        ),
    ]
}

/// Lifts an `F2` polynomial to ℍ with coefficients 1.
fn lift(x: &Poly<F2>) -> Poly<HCoeff> {
    let mut r = Poly::zero(x.nvars());
    for (m, _) in x.terms() {
        r.add_term(m.clone(), HCoeff::int(1));
    }
    r
}

#[derive(Clone, Debug)]
pub struct ModNReport {
    /// Each presentation relation reduced mod N matches its simplified form.
    pub presentation_matches: Vec<(&'static str, bool)>,
    /// Each simplified BT² relation holds in H(BT²₊)/N.
    pub bt2_holds: Vec<(&'static str, bool)>,
    /// Each simplified BU(2) relation holds after `s*`, mod N.
    pub bu2_holds: Vec<(&'static str, bool)>,
    /// `s*(ζ0ζ1cχλ)·ζ01cω1 = s*(ζ0²ζ1cω)` mod N.
    pub witness: bool,
    /// `2, g, κ ∈ N` and `1 ∉ N`.
    pub membership: bool,
}

impl ModNReport {
    pub fn passed(&self) -> bool {
        let all = |v: &[(&str, bool)]| v.iter().all(|x| x.1);
        all(&self.presentation_matches)
            && all(&self.bt2_holds)
            && all(&self.bu2_holds)
            && self.witness
            && self.membership
    }
}

pub fn membership() -> bool {
    let z = |c: HCoeff| coeff(&c).is_zero();
    z(HCoeff::int(2))
        && z(HCoeff::g())
        && z(HCoeff::kappa())
        && z(HCoeff::xi())
        && z(HCoeff::e())
        && z(HCoeff::u(1))
        && !z(HCoeff::int(1))
}

pub fn check() -> Result<ModNReport> {
    let simple = simplified_bt2();
    let presentation_matches = bt2::presentation_relations()
        .iter()
        .zip(&simple)
        .map(|(r, s)| (s.name, reduce(&r.difference()) == s.difference))
        .collect();
    let bt2_holds = simple
        .iter()
        .map(|s| Ok((s.name, mod_n(&Bt2Elem::from_poly(&lift(&s.difference))?).is_zero())))
        .collect::<Result<Vec<_>>>()?;
    let bu2_holds = simplified_bu2()
        .iter()
        .map(|s| {
            let x = Bu2Elem::from_formal(lift(&s.difference))?;
            Ok((s.name, mod_n(x.sstar()).is_zero()))
        })
        .collect::<Result<Vec<_>>>()?;
    let m = |pairs: &[(usize, u32)]| Bu2Elem::from_formal(Poly::term(HCoeff::int(1), Monomial::from_pairs(bu2::NVARS, pairs)));
    let lhs = m(&[(bu2::Z0, 1), (bu2::Z1, 1), (bu2::CXL, 1)])?
        .sstar()
        .mul(&Bt2Elem::mono(HCoeff::int(1), &[(Z01, 1), (CW1, 1)])?)?;
    let rhs = m(&[(bu2::Z0, 2), (bu2::Z1, 1), (bu2::CW, 1)])?.sstar().clone();
    Ok(ModNReport {
        presentation_matches,
        bt2_holds,
        bu2_holds,
        witness: mod_n(&lhs.sub(&rhs)).is_zero(),
        membership: membership(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn quotient_is_f2() {
        assert!(membership());
        assert_eq!(coeff(&HCoeff::int(3)), F2::new(1));
    }

    #[test]
    fn relations_simplify() {
        let r = check().unwrap();
        for (n, ok) in r.presentation_matches.iter().chain(&r.bt2_holds).chain(&r.bu2_holds) {
            assert!(ok, "{n}");
        }
        assert!(r.witness);
    }
}
