//! The fragment of the coefficient ring ℍ = H^{RO(C₂)}(S⁰) that the presentation uses.
//!
//! Elements are integer combinations of normal monomials. A product of normal
//! monomials is normalized by a small rewrite system on atom multisets; a
//! product that no rule reduces and that is not a normal monomial is reported
//! as [`Error::OutsideFragment`] instead of being given a guessed value.
//!
//! Normal monomials: `1`, `κ`, `e^a ξ^b`, `u[n] = e^{-2n}κ` (n ≥ 1) and
//! `t[n] = τ(ι^{-n})` (n ≥ 2). The mixed monomials `e^a ξ^b` with `a, b ≥ 1`
//! and the odd transfers `t[2k+1]` are 2-torsion, so their coefficients are
//! kept in `{0, 1}`.

use std::collections::BTreeMap;
use std::fmt;

use crate::error::{Error, Result};
use crate::grading::GradingRO2;
use crate::laurent::Laurent;
use crate::rewrite::Coefficient;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum HMono {
    One,
    Kappa,
    /// `e^e ξ^xi`, not both exponents zero.
    Cone { e: u32, xi: u32 },
    U(u32),
    T(u32),
}

impl HMono {
    pub fn grading(&self) -> GradingRO2 {
        match *self {
            HMono::One | HMono::Kappa => GradingRO2::ZERO,
            HMono::Cone { e, xi } => GradingRO2::new(-2 * xi as i64, e as i64 + 2 * xi as i64),
            HMono::U(n) => GradingRO2::new(0, -2 * n as i64),
            HMono::T(n) => GradingRO2::new(n as i64, -(n as i64)),
        }
    }

    pub fn is_torsion(&self) -> bool {
        match *self {
            HMono::Cone { e, xi } => e >= 1 && xi >= 1,
            HMono::T(n) => n % 2 == 1,
            _ => false,
        }
    }

    pub fn atoms(&self) -> AtomMono {
        let mut a = AtomMono::default();
        match *self {
            HMono::One => {}
            HMono::Kappa => a.kappa = 1,
            HMono::Cone { e, xi } => {
                a.e = e;
                a.xi = xi;
            }
            HMono::U(n) => a.u.push(n),
            HMono::T(n) => a.t.push(n),
        }
        a
    }
}

impl fmt::Display for HMono {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            HMono::One => write!(f, "1"),
            HMono::Kappa => write!(f, "kappa"),
            HMono::Cone { e, xi } => {
                let mut parts = Vec::new();
                match e {
                    0 => {}
                    1 => parts.push("e".to_string()),
                    k => parts.push(format!("e^{k}")),
                }
                match xi {
                    0 => {}
                    1 => parts.push("xi".to_string()),
                    k => parts.push(format!("xi^{k}")),
                }
                write!(f, "{}", parts.join("*"))
            }
            HMono::U(n) => write!(f, "u[{n}]"),
            HMono::T(n) => write!(f, "t[{n}]"),
        }
    }
}

/// A multiset of atoms, the domain on which the coefficient rules act.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct AtomMono {
    pub e: u32,
    pub xi: u32,
    pub kappa: u32,
    pub g: u32,
    /// Sorted indices of `u` atoms.
    pub u: Vec<u32>,
    /// Sorted indices of `t` atoms.
    pub t: Vec<u32>,
}

fn merge(a: &[u32], b: &[u32]) -> Vec<u32> {
    let mut v: Vec<u32> = a.iter().chain(b).copied().collect();
    v.sort_unstable();
    v
}

fn multiset_max(a: &[u32], b: &[u32]) -> Vec<u32> {
    let mut out = Vec::new();
    let mut keys: Vec<u32> = a.iter().chain(b).copied().collect();
    keys.sort_unstable();
    keys.dedup();
    for k in keys {
        let n = a.iter().filter(|&&x| x == k).count().max(b.iter().filter(|&&x| x == k).count());
        out.extend(std::iter::repeat_n(k, n));
    }
    out
}

fn multiset_sub(a: &[u32], b: &[u32]) -> Option<Vec<u32>> {
    let mut out = a.to_vec();
    for x in b {
        let i = out.iter().position(|y| y == x)?;
        out.remove(i);
    }
    Some(out)
}

impl AtomMono {
    pub fn mul(&self, o: &AtomMono) -> AtomMono {
        AtomMono {
            e: self.e + o.e,
            xi: self.xi + o.xi,
            kappa: self.kappa + o.kappa,
            g: self.g + o.g,
            u: merge(&self.u, &o.u),
            t: merge(&self.t, &o.t),
        }
    }

    /// `self / o` when `o` divides `self`.
    pub fn div(&self, o: &AtomMono) -> Option<AtomMono> {
        Some(AtomMono {
            e: self.e.checked_sub(o.e)?,
            xi: self.xi.checked_sub(o.xi)?,
            kappa: self.kappa.checked_sub(o.kappa)?,
            g: self.g.checked_sub(o.g)?,
            u: multiset_sub(&self.u, &o.u)?,
            t: multiset_sub(&self.t, &o.t)?,
        })
    }

    pub fn lcm(&self, o: &AtomMono) -> AtomMono {
        AtomMono {
            e: self.e.max(o.e),
            xi: self.xi.max(o.xi),
            kappa: self.kappa.max(o.kappa),
            g: self.g.max(o.g),
            u: multiset_max(&self.u, &o.u),
            t: multiset_max(&self.t, &o.t),
        }
    }

    pub fn degree(&self) -> usize {
        (self.e + self.xi + self.kappa + self.g) as usize + self.u.len() + self.t.len()
    }

    pub fn shares_atom(&self, o: &AtomMono) -> bool {
        self.mul(o).degree() != self.lcm(o).degree()
    }

    pub fn grading(&self) -> GradingRO2 {
        let mut g = GradingRO2::new(-2 * self.xi as i64, self.e as i64 + 2 * self.xi as i64);
        for &n in &self.u {
            g = g + HMono::U(n).grading();
        }
        for &n in &self.t {
            g = g + HMono::T(n).grading();
        }
        g
    }

    fn e_pow(e: u32) -> AtomMono {
        AtomMono { e, ..Default::default() }
    }

    fn xi_pow(xi: u32) -> AtomMono {
        AtomMono { xi, ..Default::default() }
    }

    fn kappa() -> AtomMono {
        AtomMono { kappa: 1, ..Default::default() }
    }

    fn g() -> AtomMono {
        AtomMono { g: 1, ..Default::default() }
    }

    fn u(n: u32) -> AtomMono {
        if n == 0 {
            return AtomMono::kappa();
        }
        AtomMono { u: vec![n], ..Default::default() }
    }

    fn t(n: u32) -> AtomMono {
        AtomMono { t: vec![n], ..Default::default() }
    }

    /// The normal monomial this multiset is, if no rule applies to it.
    fn as_normal(&self) -> Option<HMono> {
        let others = self.g == 0;
        match (self.kappa, self.u.as_slice(), self.t.as_slice()) {
            (0, [], []) if others => Some(if self.e == 0 && self.xi == 0 {
                HMono::One
            } else {
                HMono::Cone { e: self.e, xi: self.xi }
            }),
            (1, [], []) if others && self.e == 0 && self.xi == 0 => Some(HMono::Kappa),
            (0, [n], []) if others && self.e == 0 && self.xi == 0 => Some(HMono::U(*n)),
            (0, [], [n]) if others && self.e == 0 && self.xi == 0 => Some(HMono::T(*n)),
            _ => None,
        }
    }
}

impl fmt::Display for AtomMono {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut parts = Vec::new();
        for (name, k) in [("e", self.e), ("xi", self.xi), ("kappa", self.kappa), ("g", self.g)] {
            match k {
                0 => {}
                1 => parts.push(name.to_string()),
                _ => parts.push(format!("{name}^{k}")),
            }
        }
        parts.extend(self.u.iter().map(|n| format!("u[{n}]")));
        parts.extend(self.t.iter().map(|n| format!("t[{n}]")));
        if parts.is_empty() {
            write!(f, "1")
        } else {
            write!(f, "{}", parts.join("*"))
        }
    }
}

/// One instance of a coefficient rewrite rule.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum HRule {
    /// `κ² → 2κ`
    KappaSquare,
    /// `e² u[n] → u[n−1]`, with `u[0] = κ`
    ESquareU(u32),
    /// `ξ u[n] → 0`
    XiU(u32),
    /// `g u[n] → 0`
    GU(u32),
    /// `ξ t[n]`: `g` for n = 2, `0` for n = 3, `t[n−2]` for n ≥ 4
    XiT(u32),
    /// `e t[n] → 0`
    ET(u32),
    /// `g → 2 − κ`
    GToBasis,
    /// `u[n] u[m] → 2u[n+m]`
    UU(u32, u32),
    /// `t[n] t[m] → 2t[n+m]` for n, m even, else `0`
    TT(u32, u32),
    /// `u[m] t[n] → 0`
    UT(u32, u32),
    /// `κ t[n] → 0`
    KappaT(u32),
    /// `g e → 0`
    GE,
    /// `κ e → 2e`
    KappaE,
    /// `κ ξ → 0`
    KappaXi,
    /// `κ u[n] → 2u[n]`
    KappaU(u32),
}

impl HRule {
    pub fn lhs(&self) -> AtomMono {
        use HRule::*;
        match *self {
            KappaSquare => AtomMono { kappa: 2, ..Default::default() },
            ESquareU(n) => AtomMono::e_pow(2).mul(&AtomMono::u(n)),
            XiU(n) => AtomMono::xi_pow(1).mul(&AtomMono::u(n)),
            GU(n) => AtomMono::g().mul(&AtomMono::u(n)),
            XiT(n) => AtomMono::xi_pow(1).mul(&AtomMono::t(n)),
            ET(n) => AtomMono::e_pow(1).mul(&AtomMono::t(n)),
            GToBasis => AtomMono::g(),
            UU(n, m) => AtomMono::u(n).mul(&AtomMono::u(m)),
            TT(n, m) => AtomMono::t(n).mul(&AtomMono::t(m)),
            UT(m, n) => AtomMono::u(m).mul(&AtomMono::t(n)),
            KappaT(n) => AtomMono::kappa().mul(&AtomMono::t(n)),
            GE => AtomMono::g().mul(&AtomMono::e_pow(1)),
            KappaE => AtomMono::kappa().mul(&AtomMono::e_pow(1)),
            KappaXi => AtomMono::kappa().mul(&AtomMono::xi_pow(1)),
            KappaU(n) => AtomMono::kappa().mul(&AtomMono::u(n)),
        }
    }

    pub fn rhs(&self) -> Vec<(i64, AtomMono)> {
        use HRule::*;
        match *self {
            KappaSquare => vec![(2, AtomMono::kappa())],
            ESquareU(n) => vec![(1, AtomMono::u(n - 1))],
            XiU(_) | GU(_) | ET(_) | UT(..) | KappaT(_) | GE | KappaXi => vec![],
            XiT(2) => vec![(1, AtomMono::g())],
            XiT(3) => vec![],
            XiT(n) => vec![(1, AtomMono::t(n - 2))],
            GToBasis => vec![(2, AtomMono::default()), (-1, AtomMono::kappa())],
            UU(n, m) => vec![(2, AtomMono::u(n + m))],
            TT(n, m) if n % 2 == 0 && m % 2 == 0 => vec![(2, AtomMono::t(n + m))],
            TT(..) => vec![],
            KappaE => vec![(2, AtomMono::e_pow(1))],
            KappaU(n) => vec![(2, AtomMono::u(n))],
        }
    }

    /// The first applicable rule, in a fixed priority order.
    pub fn find(m: &AtomMono) -> Option<HRule> {
        use HRule::*;
        let u0 = m.u.first().copied();
        let t0 = m.t.first().copied();
        if m.g > 0 {
            return Some(GToBasis);
        }
        if m.kappa >= 2 {
            return Some(KappaSquare);
        }
        if m.kappa >= 1 {
            if m.xi >= 1 {
                return Some(KappaXi);
            }
            if m.e >= 1 {
                return Some(KappaE);
            }
            if let Some(n) = u0 {
                return Some(KappaU(n));
            }
            if let Some(n) = t0 {
                return Some(KappaT(n));
            }
        }
        if let Some(n) = u0 {
            if m.xi >= 1 {
                return Some(XiU(n));
            }
            if m.e >= 2 {
                return Some(ESquareU(n));
            }
            if m.u.len() >= 2 {
                return Some(UU(n, m.u[1]));
            }
            if let Some(k) = t0 {
                return Some(UT(n, k));
            }
        }
        if let Some(n) = t0 {
            if m.xi >= 1 {
                return Some(XiT(n));
            }
            if m.e >= 1 {
                return Some(ET(n));
            }
            if m.t.len() >= 2 {
                return Some(TT(n, m.t[1]));
            }
        }
        None
    }

    /// Every rule instance with indices up to `bound`.
    pub fn instances(bound: u32) -> Vec<HRule> {
        use HRule::*;
        let mut v = vec![KappaSquare, GToBasis, GE, KappaE, KappaXi];
        for n in 1..=bound {
            v.extend([ESquareU(n), XiU(n), GU(n), KappaU(n)]);
            for m in n..=bound {
                v.push(UU(n, m));
            }
            for k in 2..=bound {
                v.push(UT(n, k));
            }
        }
        for n in 2..=bound {
            v.extend([XiT(n), ET(n), KappaT(n)]);
            for m in n..=bound {
                v.push(TT(n, m));
            }
        }
        v
    }
}

fn reduce_torsion(m: &HMono, c: i64) -> i64 {
    if m.is_torsion() {
        c.rem_euclid(2)
    } else {
        c
    }
}

/// Normalizes `c · m` into normal monomials.
pub fn normalize_atoms(c: i64, m: AtomMono) -> Result<HCoeff> {
    let mut out = HCoeff::zero();
    let mut work = vec![(c, m)];
    while let Some((c, m)) = work.pop() {
        if c == 0 {
            continue;
        }
        match HRule::find(&m) {
            Some(r) => {
                let rest = m.div(&r.lhs()).expect("rule lhs divides its redex");
                for (k, a) in r.rhs() {
                    work.push((c * k, a.mul(&rest)));
                }
            }
            None => match m.as_normal() {
                Some(h) => out.add_term(h, c),
                None => return Err(Error::OutsideFragment(m.to_string())),
            },
        }
    }
    Ok(out)
}

/// An element of the coefficient fragment.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct HCoeff {
    terms: BTreeMap<HMono, i64>,
}

impl HCoeff {
    pub fn zero() -> Self {
        HCoeff::default()
    }

    pub fn int(n: i64) -> Self {
        HCoeff::mono(HMono::One, n)
    }

    pub fn mono(m: HMono, c: i64) -> Self {
        let mut h = HCoeff::zero();
        h.add_term(m, c);
        h
    }

    pub fn e() -> Self {
        HCoeff::mono(HMono::Cone { e: 1, xi: 0 }, 1)
    }

    pub fn e_pow(k: u32) -> Self {
        if k == 0 {
            return HCoeff::int(1);
        }
        HCoeff::mono(HMono::Cone { e: k, xi: 0 }, 1)
    }

    pub fn xi() -> Self {
        HCoeff::mono(HMono::Cone { e: 0, xi: 1 }, 1)
    }

    pub fn kappa() -> Self {
        HCoeff::mono(HMono::Kappa, 1)
    }

    /// `g = 2 − κ`.
    pub fn g() -> Self {
        HCoeff::int(2).sub(&HCoeff::kappa())
    }

    /// `u[n] = e^{-2n}κ`; `u[0] = κ`.
    pub fn u(n: u32) -> Self {
        if n == 0 {
            HCoeff::kappa()
        } else {
            HCoeff::mono(HMono::U(n), 1)
        }
    }

    /// `t[n] = τ(ι^{-n})`, `n ≥ 2`.
    pub fn t(n: u32) -> Result<Self> {
        if n < 2 {
            return Err(Error::OutsideFragment(format!("t[{n}]")));
        }
        Ok(HCoeff::mono(HMono::T(n), 1))
    }

    /// `1 − κ`.
    pub fn one_minus_kappa() -> Self {
        HCoeff::int(1).sub(&HCoeff::kappa())
    }

    pub fn add_term(&mut self, m: HMono, c: i64) {
        let cur = self.terms.get(&m).copied().unwrap_or(0);
        let v = reduce_torsion(&m, cur + c);
        if v == 0 {
            self.terms.remove(&m);
        } else {
            self.terms.insert(m, v);
        }
    }

    pub fn terms(&self) -> impl Iterator<Item = (&HMono, &i64)> {
        self.terms.iter()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn add(&self, o: &HCoeff) -> HCoeff {
        let mut r = self.clone();
        for (m, c) in &o.terms {
            r.add_term(*m, *c);
        }
        r
    }

    pub fn neg(&self) -> HCoeff {
        let mut r = HCoeff::zero();
        for (m, c) in &self.terms {
            r.add_term(*m, -c);
        }
        r
    }

    pub fn sub(&self, o: &HCoeff) -> HCoeff {
        self.add(&o.neg())
    }

    pub fn scale(&self, k: i64) -> HCoeff {
        let mut r = HCoeff::zero();
        for (m, c) in &self.terms {
            r.add_term(*m, c * k);
        }
        r
    }

    pub fn mul(&self, o: &HCoeff) -> Result<HCoeff> {
        let mut r = HCoeff::zero();
        for (m1, c1) in &self.terms {
            for (m2, c2) in &o.terms {
                let p = normalize_atoms(c1 * c2, m1.atoms().mul(&m2.atoms()))?;
                r = r.add(&p);
            }
        }
        Ok(r)
    }

    pub fn pow(&self, k: u32) -> Result<HCoeff> {
        let mut r = HCoeff::int(1);
        for _ in 0..k {
            r = r.mul(self)?;
        }
        Ok(r)
    }

    /// The integer value, if this is a multiple of `1`.
    pub fn as_int(&self) -> Option<i64> {
        match self.terms.len() {
            0 => Some(0),
            1 => self.terms.get(&HMono::One).copied(),
            _ => None,
        }
    }

    /// The single grading of the element; `None` for zero.
    pub fn grading(&self) -> Result<Option<GradingRO2>> {
        let mut gs = self.terms.keys().map(HMono::grading);
        let Some(first) = gs.next() else { return Ok(None) };
        if gs.all(|g| g == first) {
            Ok(Some(first))
        } else {
            Err(Error::MixedGrading(self.to_string()))
        }
    }

    pub fn is_homogeneous(&self) -> bool {
        self.grading().is_ok()
    }

    /// Restriction to the underlying nonequivariant ring ℤ[ι^{±1}].
    pub fn h_rho(&self) -> Laurent<i64> {
        let mut r = Laurent::zero(1);
        for (m, c) in &self.terms {
            let (k, e) = match *m {
                HMono::One => (1, 0),
                HMono::Cone { e: 0, xi } => (1, 2 * xi as i64),
                HMono::T(n) if n % 2 == 0 => (2, -(n as i64)),
                _ => (0, 0),
            };
            r.add_term(vec![e], c * k);
        }
        r
    }

    /// Geometric fixed points, landing in ℤ[e^{±1}].
    pub fn h_phi(&self) -> Laurent<i64> {
        let mut r = Laurent::zero(1);
        for (m, c) in &self.terms {
            let (k, e) = match *m {
                HMono::One => (1, 0),
                HMono::Kappa => (2, 0),
                HMono::Cone { e, xi: 0 } => (1, e as i64),
                HMono::U(n) => (2, -2 * n as i64),
                _ => (0, 0),
            };
            r.add_term(vec![e], c * k);
        }
        r
    }

    /// Image in ℍ/N ≅ ℤ/2, where N is generated by all elements of nonzero grading.
    pub fn mod_n(&self) -> u8 {
        self.terms.get(&HMono::One).map_or(0, |c| c.rem_euclid(2) as u8)
    }
}

/// Image of an atom multiset under the restriction map, evaluated atom by atom.
pub fn rho_of_atoms(m: &AtomMono) -> Laurent<i64> {
    if m.e > 0 || m.kappa > 0 || !m.u.is_empty() {
        return Laurent::zero(1);
    }
    let mut r = Laurent::term(2i64.pow(m.g), vec![2 * m.xi as i64]);
    for &n in &m.t {
        if n % 2 == 1 {
            return Laurent::zero(1);
        }
        r = r.mul(&Laurent::term(2, vec![-(n as i64)])).expect("integer product");
    }
    r
}

/// Image of an atom multiset under the fixed-point map, evaluated atom by atom.
pub fn phi_of_atoms(m: &AtomMono) -> Laurent<i64> {
    if m.xi > 0 || m.g > 0 || !m.t.is_empty() {
        return Laurent::zero(1);
    }
    let mut r = Laurent::term(2i64.pow(m.kappa), vec![m.e as i64]);
    for &n in &m.u {
        r = r.mul(&Laurent::term(2, vec![-2 * n as i64])).expect("integer product");
    }
    r
}

fn image_of_rhs(rhs: &[(i64, AtomMono)], f: fn(&AtomMono) -> Laurent<i64>) -> Laurent<i64> {
    let mut r = Laurent::zero(1);
    for (c, a) in rhs {
        r = r.add(&f(a).map_coeffs(|x| x * c));
    }
    r
}

/// Outcome of checking one rule instance against both validation maps.
#[derive(Clone, Debug)]
pub struct RuleCheck {
    pub rule: HRule,
    pub rho_ok: bool,
    pub phi_ok: bool,
}

/// Checks that every rule instance up to `bound` is sent to a true identity by
/// both the restriction and the fixed-point maps, including the torsion rules
/// `2·e^aξ^b = 0` and `2·t[odd] = 0`.
pub fn validate_rules(bound: u32) -> (Vec<RuleCheck>, bool) {
    let mut out = Vec::new();
    for r in HRule::instances(bound) {
        let lhs = r.lhs();
        let rhs = r.rhs();
        let rho_ok = rho_of_atoms(&lhs) == image_of_rhs(&rhs, rho_of_atoms);
        let phi_ok = phi_of_atoms(&lhs) == image_of_rhs(&rhs, phi_of_atoms);
        out.push(RuleCheck { rule: r, rho_ok, phi_ok });
    }
    let mut torsion_ok = true;
    for a in 1..=bound {
        for b in 1..=bound {
            let m = AtomMono { e: a, xi: b, ..Default::default() };
            torsion_ok &= rho_of_atoms(&m).map_coeffs(|x| 2 * x).is_zero();
            torsion_ok &= phi_of_atoms(&m).map_coeffs(|x| 2 * x).is_zero();
        }
    }
    for n in (3..=bound).step_by(2) {
        let m = AtomMono::t(n);
        torsion_ok &= rho_of_atoms(&m).is_zero() && phi_of_atoms(&m).is_zero();
    }
    let ok = torsion_ok && out.iter().all(|c| c.rho_ok && c.phi_ok);
    (out, ok)
}

/// A critical pair of the coefficient rules that failed to join.
#[derive(Clone, Debug)]
pub struct HOverlapFailure {
    pub rules: (HRule, HRule),
    pub lcm: AtomMono,
    pub left: std::result::Result<HCoeff, Error>,
    pub right: std::result::Result<HCoeff, Error>,
}

/// Checks all critical pairs among rule instances with indices up to `bound`.
/// Returns the number of nontrivial overlaps examined and the failures.
pub fn check_confluence(bound: u32) -> (usize, Vec<HOverlapFailure>) {
    let rules = HRule::instances(bound);
    let mut count = 0;
    let mut failures = Vec::new();
    for (i, r1) in rules.iter().enumerate() {
        for r2 in &rules[i + 1..] {
            let (l1, l2) = (r1.lhs(), r2.lhs());
            if !l1.shares_atom(&l2) {
                continue;
            }
            count += 1;
            let lcm = l1.lcm(&l2);
            let branch = |r: &HRule, l: &AtomMono| -> Result<HCoeff> {
                let q = lcm.div(l).expect("lhs divides lcm");
                let mut acc = HCoeff::zero();
                for (c, a) in r.rhs() {
                    acc = acc.add(&normalize_atoms(c, a.mul(&q))?);
                }
                Ok(acc)
            };
            let left = branch(r1, &l1);
            let right = branch(r2, &l2);
            if left != right {
                failures.push(HOverlapFailure {
                    rules: (*r1, *r2),
                    lcm,
                    left,
                    right,
                });
            }
        }
    }
    (count, failures)
}

/// Multiplies two homogeneous coefficients, rejecting mixed-grading inputs.
pub fn h_mul(x: &HCoeff, y: &HCoeff) -> Result<HCoeff> {
    x.grading()?;
    y.grading()?;
    x.mul(y)
}

impl Coefficient for HCoeff {
    fn zero() -> Self {
        HCoeff::zero()
    }
    fn from_int(n: i64) -> Self {
        HCoeff::int(n)
    }
    fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }
    fn add(&self, o: &Self) -> Self {
        HCoeff::add(self, o)
    }
    fn neg(&self) -> Self {
        HCoeff::neg(self)
    }
    fn mul(&self, o: &Self) -> Result<Self> {
        HCoeff::mul(self, o)
    }
}

impl fmt::Display for HCoeff {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (i, (m, c)) in self.terms.iter().enumerate() {
            let mag = c.unsigned_abs();
            if i == 0 {
                if *c < 0 {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {} ", if *c < 0 { '-' } else { '+' })?;
            }
            match (m, mag) {
                (HMono::One, _) => write!(f, "{mag}")?,
                (_, 1) => write!(f, "{m}")?,
                _ => write!(f, "{mag}*{m}")?,
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn omk() -> HCoeff {
        HCoeff::one_minus_kappa()
    }

    #[test]
    fn one_minus_kappa_squares_to_one() {
        assert_eq!(h_mul(&omk(), &omk()).unwrap(), HCoeff::int(1));
    }

    #[test]
    fn xi_t2_is_g() {
        let p = h_mul(&HCoeff::xi(), &HCoeff::t(2).unwrap()).unwrap();
        assert_eq!(p, HCoeff::g());
        assert_eq!(p.to_string(), "2 - kappa");
    }

    #[test]
    fn u_xi_vanishes() {
        assert!(h_mul(&HCoeff::u(1), &HCoeff::xi()).unwrap().is_empty());
    }

    #[test]
    fn e_squared_u() {
        let e2 = HCoeff::e_pow(2);
        assert_eq!(e2.mul(&HCoeff::u(1)).unwrap(), HCoeff::kappa());
        assert_eq!(e2.mul(&HCoeff::u(3)).unwrap(), HCoeff::u(2));
        assert_eq!(HCoeff::e_pow(6).mul(&HCoeff::u(1)).unwrap(), HCoeff::e_pow(4).scale(2));
    }

    #[test]
    fn outside_fragment_is_error() {
        assert!(matches!(HCoeff::e().mul(&HCoeff::u(1)), Err(Error::OutsideFragment(_))));
    }

    #[test]
    fn torsion() {
        let ex = HCoeff::e().mul(&HCoeff::xi()).unwrap();
        assert!(ex.scale(2).is_empty());
        assert!(ex.add(&ex).is_empty());
        let t3 = HCoeff::t(3).unwrap();
        assert!(t3.scale(2).is_empty());
        assert!(HCoeff::xi().mul(&t3).unwrap().is_empty());
    }

    #[test]
    fn mixed_grading_rejected() {
        let x = HCoeff::int(1).add(&HCoeff::e());
        assert!(matches!(h_mul(&x, &x), Err(Error::MixedGrading(_))));
    }

    #[test]
    fn gradings() {
        assert_eq!(HCoeff::xi().grading().unwrap(), Some(GradingRO2::new(-2, 2)));
        assert_eq!(HCoeff::u(2).grading().unwrap(), Some(GradingRO2::new(0, -4)));
        assert_eq!(HCoeff::t(3).unwrap().grading().unwrap(), Some(GradingRO2::new(3, -3)));
    }

    #[test]
    fn rho_values() {
        assert_eq!(HCoeff::xi().h_rho(), Laurent::term(1, vec![2]));
        assert_eq!(HCoeff::t(2).unwrap().h_rho(), Laurent::term(2, vec![-2]));
        assert_eq!(HCoeff::int(1).h_rho(), Laurent::one(1));
        assert_eq!(HCoeff::g().h_rho(), Laurent::constant(2, 1));
    }

    #[test]
    fn phi_values() {
        assert_eq!(HCoeff::u(1).h_phi(), Laurent::term(2, vec![-2]));
        assert!(HCoeff::xi().h_phi().is_zero());
        assert_eq!(HCoeff::e().h_phi(), Laurent::term(1, vec![1]));
    }

    #[test]
    fn rules_respect_validation_maps() {
        let (checks, ok) = validate_rules(8);
        let bad: Vec<_> = checks.iter().filter(|c| !(c.rho_ok && c.phi_ok)).collect();
        assert!(ok, "{bad:?}");
    }

    #[test]
    fn rules_are_confluent() {
        let (n, failures) = check_confluence(7);
        assert!(n > 100);
        assert!(failures.is_empty(), "{:?}", failures.first());
    }

    #[test]
    fn mod_n_values() {
        assert_eq!(HCoeff::xi().mod_n(), 0);
        assert_eq!(HCoeff::int(2).mod_n(), 0);
        assert_eq!(HCoeff::int(1).mod_n(), 1);
        assert_eq!(HCoeff::kappa().mod_n(), 0);
        assert_eq!(HCoeff::g().mod_n(), 0);
    }

    fn mono() -> impl Strategy<Value = HCoeff> {
        prop_oneof![
            (0u32..4, 0u32..4).prop_map(|(a, b)| HCoeff::e_pow(a).mul(&HCoeff::xi().pow(b).unwrap()).unwrap()),
            Just(HCoeff::kappa()),
            Just(HCoeff::g()),
            (1u32..4).prop_map(HCoeff::u),
            (2u32..5).prop_map(|n| HCoeff::t(n).unwrap()),
        ]
    }

    proptest! {
        #[test]
        fn commutative(x in mono(), y in mono()) {
            prop_assert_eq!(x.mul(&y), y.mul(&x));
        }

        #[test]
        fn associative(x in mono(), y in mono(), z in mono()) {
            let l = x.mul(&y).and_then(|p| p.mul(&z));
            let r = y.mul(&z).and_then(|p| x.mul(&p));
            if let (Ok(l), Ok(r)) = (&l, &r) {
                prop_assert_eq!(l, r);
            }
        }

        #[test]
        fn rho_phi_multiplicative(x in mono(), y in mono()) {
            if let Ok(p) = x.mul(&y) {
                prop_assert_eq!(p.h_rho(), x.h_rho().mul(&y.h_rho()).unwrap());
                prop_assert_eq!(p.h_phi(), x.h_phi().mul(&y.h_phi()).unwrap());
            }
        }

        #[test]
        fn grading_additive(x in mono(), y in mono()) {
            if let Ok(p) = x.mul(&y) {
                if let (Some(gx), Some(gy), Some(gp)) = (x.grading().unwrap(), y.grading().unwrap(), p.grading().unwrap()) {
                    prop_assert_eq!(gp, gx + gy);
                }
            }
        }
    }
}
