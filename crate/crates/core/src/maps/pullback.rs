//! Pullbacks along classifying maps: `s: BT² → BU(2)`, the dualizing involution
//! `δ`, the twist `χ₁`, the factor swap `γ`, `t: BT¹ → BT²` classifying
//! `(ω, ℂ^σ)`, and the projections `π₁, π₂: BT² → BT¹`.

use std::fmt;
use std::str::FromStr;

use super::{evaluate, Ops};
use crate::classes::dual_class;
use crate::error::{Error, Result};
use crate::hcoeff::HCoeff;
use crate::rewrite::Poly;
use crate::rings::bt1::{self, Bt1Elem};
use crate::rings::bt2::{self, gens, Bt2Elem, CT, CW1, CW2, CXT, CXW1, CXW2, Z00, Z01, Z10, Z11};
use crate::rings::bu2::Bu2Elem;

/// A classifying map whose pullback is available.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum MapName {
    Sstar,
    Delta,
    Chi1,
    Gamma,
    T,
    Pi1,
    Pi2,
}

impl MapName {
    pub const ALL: [MapName; 7] = [
        MapName::Sstar,
        MapName::Delta,
        MapName::Chi1,
        MapName::Gamma,
        MapName::T,
        MapName::Pi1,
        MapName::Pi2,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            MapName::Sstar => "sstar",
            MapName::Delta => "delta",
            MapName::Chi1 => "chi1",
            MapName::Gamma => "gamma",
            MapName::T => "t",
            MapName::Pi1 => "pi1",
            MapName::Pi2 => "pi2",
        }
    }
}

impl fmt::Display for MapName {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for MapName {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "tmap" => Ok(MapName::T),
            _ => MapName::ALL
                .into_iter()
                .find(|m| m.as_str() == s)
                .ok_or_else(|| Error::Unknown {
                    kind: "map",
                    name: s.into(),
                }),
        }
    }
}

fn bt2_ops<'a>() -> Ops<'a, Bt2Elem> {
    Ops {
        zero: Bt2Elem::zero(),
        one: Bt2Elem::one(),
        add: &|a: &Bt2Elem, b: &Bt2Elem| a.add(b),
        mul: &|a: &Bt2Elem, b: &Bt2Elem| a.mul(b),
    }
}

fn bt1_ops<'a>() -> Ops<'a, Bt1Elem> {
    Ops {
        zero: Bt1Elem::zero(),
        one: Bt1Elem::one(),
        add: &|a: &Bt1Elem, b: &Bt1Elem| a.add(b),
        mul: &|a: &Bt1Elem, b: &Bt1Elem| a.mul(b),
    }
}

/// Images of the flat BT² generators under a self-map of BT².
pub fn endo_images(map: MapName) -> Result<Vec<Bt2Elem>> {
    let g = Bt2Elem::gen;
    let swap = |pairs: &[(usize, usize)]| -> Vec<Bt2Elem> {
        (0..bt2::NVARS)
            .map(|i| {
                let j = pairs
                    .iter()
                    .find_map(|&(a, b)| {
                        if a == i {
                            Some(b)
                        } else if b == i {
                            Some(a)
                        } else {
                            None
                        }
                    })
                    .unwrap_or(i);
                g(j)
            })
            .collect()
    };
    match map {
        MapName::Delta => (0..bt2::NVARS)
            .map(|i| if i <= Z11 { Ok(g(i)) } else { dual_class(i) })
            .collect(),
        MapName::Chi1 => Ok(swap(&[(Z00, Z10), (Z01, Z11), (CW1, CXW1), (CT, CXT)])),
        MapName::Gamma => Ok(swap(&[(Z01, Z10), (CW1, CW2), (CXW1, CXW2)])),
        other => Err(Error::Domain(format!("{other} is not a self-map of BT²"))),
    }
}

/// `f*` for a self-map `f` of BT².
pub fn endo(map: MapName, x: &Bt2Elem) -> Result<Bt2Elem> {
    endo_poly(map, x.poly())
}

pub fn endo_poly(map: MapName, x: &Poly<HCoeff>) -> Result<Bt2Elem> {
    evaluate(x, &endo_images(map)?, |c| Ok(Bt2Elem::h(c.clone())), &bt2_ops())
}

/// Images of the flat BT² generators under `t*`.
pub fn t_images() -> Vec<Bt1Elem> {
    let mut v = vec![Bt1Elem::zero(); bt2::NVARS];
    v[Z00] = Bt1Elem::one();
    v[Z01] = Bt1Elem::z0();
    v[Z10] = Bt1Elem::one();
    v[Z11] = Bt1Elem::z1();
    v[CW1] = Bt1Elem::cw();
    v[CXW1] = Bt1Elem::cxw();
    v[CW2] = Bt1Elem::h(HCoeff::e_pow(2));
    v[CXW2] = Bt1Elem::zero();
    v[CT] = Bt1Elem::cxw();
    v[CXT] = Bt1Elem::cw();
    v
}

/// `t*: H(BT²₊) → H(BT¹₊)`.
pub fn tmap(x: &Bt2Elem) -> Result<Bt1Elem> {
    tmap_poly(x.poly())
}

pub fn tmap_poly(x: &Poly<HCoeff>) -> Result<Bt1Elem> {
    evaluate(x, &t_images(), |c| Ok(Bt1Elem::h(c.clone())), &bt1_ops())
}

/// Images of the BT¹ generators under `π₁*` (`first = true`) or `π₂*`.
pub fn pi_images(first: bool) -> Result<Vec<Bt2Elem>> {
    let (z0, z1, cw, cxw) = if first {
        (
            gens::z00().mul(&gens::z01())?,
            gens::z10().mul(&gens::z11())?,
            gens::cw1(),
            gens::cxw1(),
        )
    } else {
        (
            gens::z00().mul(&gens::z10())?,
            gens::z01().mul(&gens::z11())?,
            gens::cw2(),
            gens::cxw2(),
        )
    };
    let mut v = vec![Bt2Elem::zero(); bt1::NVARS];
    v[bt1::Z0] = z0;
    v[bt1::Z1] = z1;
    v[bt1::CW] = cw;
    v[bt1::CXW] = cxw;
    Ok(v)
}

/// `π₁*` or `π₂*`.
pub fn pi(first: bool, x: &Bt1Elem) -> Result<Bt2Elem> {
    pi_poly(first, x.poly())
}

pub fn pi_poly(first: bool, x: &Poly<HCoeff>) -> Result<Bt2Elem> {
    evaluate(x, &pi_images(first)?, |c| Ok(Bt2Elem::h(c.clone())), &bt2_ops())
}

/// An element of any of the three rings the pullbacks connect.
#[derive(Clone, Debug)]
pub enum RingElem {
    Bt1(Bt1Elem),
    Bt2(Bt2Elem),
    Bu2(Bu2Elem),
}

impl RingElem {
    pub fn ring_name(&self) -> &'static str {
        match self {
            RingElem::Bt1(_) => "bt1",
            RingElem::Bt2(_) => "bt2",
            RingElem::Bu2(_) => "bu2",
        }
    }
}

impl fmt::Display for RingElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            RingElem::Bt1(x) => x.fmt(f),
            RingElem::Bt2(x) => x.fmt(f),
            RingElem::Bu2(x) => x.fmt(f),
        }
    }
}

/// Applies the named pullback, checking that `x` lies in its source ring.
pub fn pullback(map: MapName, x: &RingElem) -> Result<RingElem> {
    let wrong = || {
        Error::Domain(format!(
            "{map}* does not accept an element of {}",
            x.ring_name()
        ))
    };
    match (map, x) {
        (MapName::Sstar, RingElem::Bu2(y)) => Ok(RingElem::Bt2(y.sstar().clone())),
        (MapName::Delta | MapName::Chi1 | MapName::Gamma, RingElem::Bt2(y)) => {
            Ok(RingElem::Bt2(endo(map, y)?))
        }
        (MapName::T, RingElem::Bt2(y)) => Ok(RingElem::Bt1(tmap(y)?)),
        (MapName::Pi1, RingElem::Bt1(y)) => Ok(RingElem::Bt2(pi(true, y)?)),
        (MapName::Pi2, RingElem::Bt1(y)) => Ok(RingElem::Bt2(pi(false, y)?)),
        _ => Err(wrong()),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rings::bt2::presentation_relations;

    #[test]
    fn names_round_trip() {
        for m in MapName::ALL {
            assert_eq!(m.as_str().parse::<MapName>().unwrap(), m);
        }
        assert!(matches!("swap".parse::<MapName>(), Err(Error::Unknown { .. })));
    }

    #[test]
    fn endomorphisms_respect_relations() {
        for map in [MapName::Delta, MapName::Chi1, MapName::Gamma] {
            for r in presentation_relations() {
                assert!(endo_poly(map, &r.difference()).unwrap().is_zero(), "{map} {}", r.name);
            }
        }
    }

    #[test]
    fn involutions() {
        for map in [MapName::Delta, MapName::Chi1, MapName::Gamma] {
            for i in 0..bt2::NVARS {
                let g = Bt2Elem::gen(i);
                assert_eq!(endo(map, &endo(map, &g).unwrap()).unwrap(), g, "{map} {i}");
            }
        }
    }

    #[test]
    fn t_and_pi_respect_relations() {
        for r in presentation_relations() {
            assert!(tmap_poly(&r.difference()).unwrap().is_zero(), "{}", r.name);
        }
        for r in bt1::rules(false) {
            let d = Poly::term(HCoeff::int(1), r.lhs.clone()).sub(&r.rhs);
            assert!(pi_poly(true, &d).unwrap().is_zero());
            assert!(pi_poly(false, &d).unwrap().is_zero());
        }
    }

    #[test]
    fn wrong_source_is_rejected() {
        let x = RingElem::Bt1(Bt1Elem::z0());
        assert!(pullback(MapName::Delta, &x).is_err());
    }
}
