//! Elements of H(BU(2)₊) in the image model: a formal ℍ-polynomial in the
//! BU(2) generators together with its pullback along `s: BT² → BU(2)`.

use std::fmt;

use super::bt2::{gens, Bt2Elem};
use crate::error::{Error, Result};
use crate::grading::{GradingBT2, GradingBU2};
use crate::hcoeff::HCoeff;
use crate::rewrite::{GeneratorSet, Monomial, Poly};

pub const Z0: usize = 0;
pub const Z1: usize = 1;
pub const Z2: usize = 2;
pub const CL: usize = 3;
pub const CXL: usize = 4;
pub const CW: usize = 5;
pub const CXW: usize = 6;
pub const NVARS: usize = 7;

pub const NAMES: [&str; NVARS] = ["Z0", "Z1", "Z2", "cL", "cxL", "cW", "cxW"];
const WEIGHTS: [u32; NVARS] = [1, 1, 1, 4, 4, 4, 4];

/// `s*` of each generator.
pub fn sstar_images() -> [Bt2Elem; NVARS] {
    let m = |a: Bt2Elem, b: Bt2Elem| a.mul(&b).expect("generator product");
    [
        gens::z00(),
        m(gens::z01(), gens::z10()),
        gens::z11(),
        gens::ct(),
        gens::cxt(),
        m(gens::cw1(), gens::cw2()),
        m(gens::cxw1(), gens::cxw2()),
    ]
}

fn generators() -> GeneratorSet {
    GeneratorSet::new(&NAMES, &WEIGHTS).expect("valid generator set")
}

/// Grading of a formal monomial, embedded in RO(ΠBT²).
fn monomial_grading(m: &Monomial) -> GradingBT2 {
    let gs: Vec<GradingBT2> = sstar_images()
        .iter()
        .map(|x| x.grading().expect("homogeneous").expect("nonzero"))
        .collect();
    m.0.iter()
        .zip(&gs)
        .fold(GradingBT2::ZERO, |acc, (&k, g)| acc + g.scale(k as i64))
}

#[derive(Clone, Debug)]
pub struct Bu2Elem {
    formal: Poly<HCoeff>,
    image: Bt2Elem,
}

impl Bu2Elem {
    pub fn zero() -> Self {
        Bu2Elem {
            formal: Poly::zero(NVARS),
            image: Bt2Elem::zero(),
        }
    }

    pub fn one() -> Self {
        Bu2Elem::h(HCoeff::int(1))
    }

    pub fn h(c: HCoeff) -> Self {
        Bu2Elem {
            formal: Poly::constant(c.clone(), NVARS),
            image: Bt2Elem::h(c),
        }
    }

    pub fn gen(i: usize) -> Self {
        Bu2Elem {
            formal: Poly::var(i, NVARS),
            image: sstar_images()[i].clone(),
        }
    }

    pub fn named(name: &str) -> Result<Self> {
        let i = NAMES.iter().position(|n| *n == name).ok_or_else(|| Error::Unknown {
            kind: "generator",
            name: name.into(),
        })?;
        Ok(Bu2Elem::gen(i))
    }

    /// Builds an element from a formal polynomial, computing its image.
    pub fn from_formal(formal: Poly<HCoeff>) -> Result<Self> {
        let image = sstar_poly(&formal)?;
        Ok(Bu2Elem { formal, image })
    }

    pub fn formal(&self) -> &Poly<HCoeff> {
        &self.formal
    }

    /// The pullback `s*(self)`.
    pub fn sstar(&self) -> &Bt2Elem {
        &self.image
    }

    pub fn add(&self, o: &Self) -> Self {
        Bu2Elem {
            formal: self.formal.add(&o.formal),
            image: self.image.add(&o.image),
        }
    }

    pub fn sub(&self, o: &Self) -> Self {
        self.add(&o.neg())
    }

    pub fn neg(&self) -> Self {
        Bu2Elem {
            formal: self.formal.neg(),
            image: self.image.neg(),
        }
    }

    pub fn mul(&self, o: &Self) -> Result<Self> {
        Ok(Bu2Elem {
            formal: self.formal.mul_raw(&o.formal)?,
            image: self.image.mul(&o.image)?,
        })
    }

    pub fn scale(&self, c: &HCoeff) -> Result<Self> {
        Ok(Bu2Elem {
            formal: self.formal.scale(c)?,
            image: self.image.scale(c)?,
        })
    }

    /// Grading of a homogeneous element, in the image model.
    pub fn grading(&self) -> Result<Option<GradingBU2>> {
        let mut out: Option<GradingBT2> = None;
        for (m, c) in self.formal.terms() {
            let Some(h) = c.grading()? else { continue };
            let g = monomial_grading(m) + GradingBT2::ro2(h);
            match out {
                None => out = Some(g),
                Some(o) if o == g => {}
                Some(_) => return Err(Error::MixedGrading(self.to_string())),
            }
        }
        Ok(out.map(|g| GradingBU2::from_bt2(&g).expect("image grading is symmetric")))
    }

    /// Equality, decided through `s*`, which is injective only in even gradings.
    pub fn equals(&self, o: &Self) -> Result<bool> {
        let d = self.sub(o);
        if d.formal.is_zero() {
            return Ok(true);
        }
        match d.grading()? {
            Some(g) if g.embed().is_even() => Ok(d.image.is_zero()),
            _ => Err(Error::Undecidable(format!(
                "equality of {self} and {o} outside even gradings"
            ))),
        }
    }
}

/// `s*` of a formal polynomial.
pub fn sstar_poly(x: &Poly<HCoeff>) -> Result<Bt2Elem> {
    let imgs = sstar_images();
    let mut out = Bt2Elem::zero();
    for (m, c) in x.terms() {
        let mut t = Bt2Elem::h(c.clone());
        for (i, &k) in m.0.iter().enumerate() {
            for _ in 0..k {
                t = t.mul(&imgs[i])?;
            }
        }
        out = out.add(&t);
    }
    Ok(out)
}

/// Every formal monomial of weight at most `max_weight`.
pub fn formal_monomials(max_weight: u64) -> Vec<Monomial> {
    crate::rewrite::RewriteSystem::<HCoeff>::new(generators(), Vec::new())
        .expect("empty system")
        .normal_monomials(max_weight)
}

impl fmt::Display for Bu2Elem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        super::fmt_poly(f, &self.formal, &generators())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn lambda_grading() {
        let g = Bu2Elem::gen(CL).grading().unwrap().unwrap();
        assert_eq!(g, GradingBU2::lambda());
        assert_eq!(g.embed(), super::super::bt2::monomial_grading(&Monomial::from_pairs(10, &[(9, 1)])));
    }

    #[test]
    fn odd_equality_is_undecidable() {
        let t3 = HCoeff::t(3).unwrap();
        let x = Bu2Elem::gen(Z0)
            .mul(&Bu2Elem::gen(Z0))
            .and_then(|x| x.mul(&Bu2Elem::gen(Z1)))
            .and_then(|x| x.mul(&Bu2Elem::gen(Z1)))
            .and_then(|x| x.mul(&Bu2Elem::gen(CW)))
            .and_then(|x| x.scale(&t3))
            .unwrap();
        assert!(x.sstar().is_zero());
        assert!(matches!(x.equals(&Bu2Elem::zero()), Err(Error::Undecidable(_))));
    }
}
