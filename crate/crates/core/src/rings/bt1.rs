//! H(BT¹₊) as an algebra over ℍ: generators `z0, z1, cxw, cw` and three rules.

use std::fmt;
use std::sync::OnceLock;

use crate::error::{Error, Result};
use crate::grading::GradingBT1;
use crate::hcoeff::HCoeff;
use crate::rewrite::{Coefficient, GeneratorSet, Monomial, Poly, Reduction, RewriteSystem};

pub const Z0: usize = 0;
pub const Z1: usize = 1;
pub const CXW: usize = 2;
pub const CW: usize = 3;
pub const NVARS: usize = 4;

pub const NAMES: [&str; NVARS] = ["z0", "z1", "cxw", "cw"];
const WEIGHTS: [u32; NVARS] = [1, 1, 2, 2];

/// Gradings of `z0, z1, cxw, cw`.
pub fn generator_gradings() -> [GradingBT1; NVARS] {
    [
        GradingBT1::from_raw(0, 0, 1, 0),
        GradingBT1::from_raw(0, 0, 0, 1),
        GradingBT1::from_raw(2, 0, 1, 0),
        GradingBT1::from_raw(2, 0, 0, 1),
    ]
}

fn mono(pairs: &[(usize, u32)]) -> Monomial {
    Monomial::from_pairs(NVARS, pairs)
}

fn poly(terms: Vec<(HCoeff, Monomial)>) -> Poly<HCoeff> {
    let mut p = Poly::zero(NVARS);
    for (c, m) in terms {
        p.add_term(m, c);
    }
    p
}

/// The three reductions, optionally with the sign of the second rule's `e²` flipped.
pub fn rules(broken: bool) -> Vec<Reduction<HCoeff>> {
    let omk = HCoeff::one_minus_kappa;
    let e2 = if broken { HCoeff::e_pow(2).neg() } else { HCoeff::e_pow(2) };
    vec![
        Reduction {
            name: "z0*z1".into(),
            lhs: mono(&[(Z0, 1), (Z1, 1)]),
            rhs: poly(vec![(HCoeff::xi(), Monomial::one(NVARS))]),
        },
        Reduction {
            name: "z1*cxw".into(),
            lhs: mono(&[(Z1, 1), (CXW, 1)]),
            rhs: poly(vec![(omk(), mono(&[(Z0, 1), (CW, 1)])), (e2, Monomial::one(NVARS))]),
        },
        Reduction {
            name: "z0^2*cw".into(),
            lhs: mono(&[(Z0, 2), (CW, 1)]),
            rhs: poly(vec![
                (HCoeff::xi(), mono(&[(CXW, 1)])),
                (
                    omk().mul(&HCoeff::e_pow(2)).expect("in fragment").neg(),
                    mono(&[(Z0, 1)]),
                ),
            ]),
        },
    ]
}

pub fn generators() -> GeneratorSet {
    GeneratorSet::new(&NAMES, &WEIGHTS).expect("valid generator set")
}

pub fn build_system(broken: bool) -> Result<RewriteSystem<HCoeff>> {
    RewriteSystem::new(generators(), rules(broken))
}

/// The shared BT¹ system.
pub fn system() -> &'static RewriteSystem<HCoeff> {
    static SYS: OnceLock<RewriteSystem<HCoeff>> = OnceLock::new();
    SYS.get_or_init(|| build_system(false).expect("BT1 rules decrease"))
}

/// Grading of a BT¹ monomial times a coefficient of the given grading.
pub fn monomial_grading(m: &Monomial) -> GradingBT1 {
    let gs = generator_gradings();
    m.0.iter()
        .zip(gs.iter())
        .fold(GradingBT1::default(), |acc, (&k, g)| acc + g.scale(k as i64))
}

/// An element of H(BT¹₊), always in normal form.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Bt1Elem(Poly<HCoeff>);

impl Bt1Elem {
    pub fn zero() -> Self {
        Bt1Elem(Poly::zero(NVARS))
    }

    pub fn one() -> Self {
        Bt1Elem::h(HCoeff::int(1))
    }

    pub fn int(n: i64) -> Self {
        Bt1Elem::h(HCoeff::int(n))
    }

    pub fn h(c: HCoeff) -> Self {
        Bt1Elem(Poly::constant(c, NVARS))
    }

    pub fn gen(i: usize) -> Self {
        Bt1Elem::from_poly(&Poly::var(i, NVARS)).expect("generators are normal")
    }

    pub fn z0() -> Self {
        Bt1Elem::gen(Z0)
    }

    pub fn z1() -> Self {
        Bt1Elem::gen(Z1)
    }

    pub fn cxw() -> Self {
        Bt1Elem::gen(CXW)
    }

    pub fn cw() -> Self {
        Bt1Elem::gen(CW)
    }

    /// `c·m` for a coefficient and an exponent vector.
    pub fn term(c: HCoeff, exps: [u32; NVARS]) -> Result<Self> {
        Bt1Elem::from_poly(&Poly::term(c, Monomial(exps.to_vec())))
    }

    pub fn from_poly(p: &Poly<HCoeff>) -> Result<Self> {
        Ok(Bt1Elem(system().reduce(p)?))
    }

    pub fn poly(&self) -> &Poly<HCoeff> {
        &self.0
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_zero()
    }

    pub fn add(&self, o: &Self) -> Self {
        Bt1Elem(self.0.add(&o.0))
    }

    pub fn sub(&self, o: &Self) -> Self {
        Bt1Elem(self.0.sub(&o.0))
    }

    pub fn neg(&self) -> Self {
        Bt1Elem(self.0.neg())
    }

    pub fn mul(&self, o: &Self) -> Result<Self> {
        Ok(Bt1Elem(system().multiply(&self.0, &o.0)?))
    }

    pub fn scale(&self, c: &HCoeff) -> Result<Self> {
        Bt1Elem::from_poly(&self.0.scale(c)?)
    }

    pub fn pow(&self, k: u32) -> Result<Self> {
        let mut r = Bt1Elem::one();
        for _ in 0..k {
            r = r.mul(self)?;
        }
        Ok(r)
    }

    /// The single grading of a nonzero homogeneous element.
    pub fn grading(&self) -> Result<Option<GradingBT1>> {
        let mut out: Option<GradingBT1> = None;
        for (m, c) in self.0.terms() {
            let Some(h) = c.grading()? else { continue };
            let g = monomial_grading(m) + GradingBT1::ro2(h);
            match out {
                None => out = Some(g),
                Some(o) if o == g => {}
                Some(_) => return Err(Error::MixedGrading(self.to_string())),
            }
        }
        Ok(out)
    }

    /// The coefficient of the unit monomial.
    pub fn constant_coeff(&self) -> HCoeff {
        self.0.coeff(&Monomial::one(NVARS)).cloned().unwrap_or_default()
    }
}

impl Coefficient for Bt1Elem {
    fn zero() -> Self {
        Bt1Elem::zero()
    }
    fn from_int(n: i64) -> Self {
        Bt1Elem::int(n)
    }
    fn is_zero(&self) -> bool {
        self.0.is_zero()
    }
    fn add(&self, o: &Self) -> Self {
        Bt1Elem::add(self, o)
    }
    fn neg(&self) -> Self {
        Bt1Elem::neg(self)
    }
    fn mul(&self, o: &Self) -> Result<Self> {
        Bt1Elem::mul(self, o)
    }
}

impl fmt::Display for Bt1Elem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        super::fmt_poly(f, &self.0, &system().gens)
    }
}

/// Normal monomials of weight at most `max_weight`.
pub fn normal_monomials(max_weight: u64) -> Vec<Monomial> {
    system().normal_monomials(max_weight)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn confluent() {
        let report = system().check_confluence();
        assert!(report.passed());
        assert_eq!(report.overlaps.len(), 2);
    }

    #[test]
    fn broken_system_fails() {
        assert!(!build_system(true).unwrap().check_confluence().passed());
    }

    #[test]
    fn third_rule_follows_from_second() {
        // z0·(z1·cxw) computed both ways.
        let lhs = Bt1Elem::z0().mul(&Bt1Elem::z1()).unwrap().mul(&Bt1Elem::cxw()).unwrap();
        let rhs = Bt1Elem::term(HCoeff::one_minus_kappa(), [2, 0, 0, 1])
            .unwrap()
            .add(&Bt1Elem::term(HCoeff::e_pow(2), [1, 0, 0, 0]).unwrap());
        assert_eq!(lhs, rhs);
        assert_eq!(lhs, Bt1Elem::h(HCoeff::xi()).mul(&Bt1Elem::cxw()).unwrap());
    }

    #[test]
    fn gradings() {
        let x = Bt1Elem::z0().mul(&Bt1Elem::cw()).unwrap();
        assert_eq!(x.grading().unwrap(), Some(GradingBT1::from_raw(2, 0, 1, 1)));
        assert_eq!(
            GradingBT1::from_raw(2, 0, 1, 1),
            GradingBT1::from_raw(0, 2, 0, 0)
        );
    }
}
