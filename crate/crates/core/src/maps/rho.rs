//! Restriction to nonequivariant cohomology,
//! `ρ: H(BT²₊) → ℤ[x1, x2, ι^{±1}, ζᵢⱼ^{±1}]/(∏ζᵢⱼ = ι²)`.
//!
//! Target elements are kept with `ζ₁₁` eliminated through `ζ₁₁ = ι²ζ₀₀⁻¹ζ₀₁⁻¹ζ₁₀⁻¹`,
//! which makes the representation canonical.

use super::basechange::{Base, BcElem};
use super::{class_shape, evaluate, zeta, Ops, SCALAR, TARGET_VARS};
use crate::error::Result;
use crate::grading::GradingBT2;
use crate::hcoeff::HCoeff;
use crate::laurent::{Exps, Laurent};
use crate::rewrite::Monomial;
use crate::rings::basis::bt2_page_by_rho;
use crate::rings::bt2::{Bt2Elem, CT, CW1, CW2, CXT, CXW1, CXW2, NVARS, Z00, Z01, Z10, Z11};

pub type Target = Laurent<i64>;

pub const NAMES: [&str; TARGET_VARS] = ["iota", "z00", "z01", "z10", "z11", "x1", "x2"];

/// Imposes `∏ζ = ι²`.
pub fn canonical(x: &Target) -> Target {
    x.substitute_monomial(zeta(3), &vec![2, -1, -1, -1, 0, 0, 0])
}

fn scalar(c: &HCoeff) -> Target {
    let mut r = Laurent::zero(TARGET_VARS);
    for (e, k) in c.h_rho().terms() {
        let mut ex = vec![0; TARGET_VARS];
        ex[SCALAR] = e[0];
        r.add_term(ex, *k);
    }
    r
}

/// `ρ` of each flat generator, before imposing `∏ζ = ι²`.
pub fn generator_images() -> Vec<Target> {
    (0..NVARS)
        .map(|g| match class_shape(g) {
            None => Laurent::var(zeta(g), TARGET_VARS),
            Some(s) => s
                .linear_form::<i64>()
                .mul(&Laurent::term(1, s.zeta_shift()))
                .expect("integer product"),
        })
        .collect()
}

fn ops<'a>() -> Ops<'a, Target> {
    Ops {
        zero: Laurent::zero(TARGET_VARS),
        one: Laurent::one(TARGET_VARS),
        add: &|a: &Target, b: &Target| a.add(b),
        mul: &|a: &Target, b: &Target| a.mul(b),
    }
}

/// `ρ(x)`, canonical.
pub fn rho(x: &Bt2Elem) -> Result<Target> {
    rho_poly(x.poly())
}

/// `ρ` of an unreduced flat polynomial, canonical.
pub fn rho_poly(x: &crate::rewrite::Poly<HCoeff>) -> Result<Target> {
    let v = evaluate(x, &generator_images(), |c| Ok(scalar(c)), &ops())?;
    Ok(canonical(&v))
}

/// The induced map on `P ⊗ ℤ[ι^{±1}]`, canonical.
pub fn rho_bc(x: &BcElem) -> Result<Target> {
    let imgs = generator_images();
    let mut out = Laurent::zero(TARGET_VARS);
    for (m, s) in x.terms() {
        let mut t = Laurent::zero(TARGET_VARS);
        for (e, k) in s.terms() {
            let mut ex = vec![0; TARGET_VARS];
            ex[SCALAR] = e[0];
            t.add_term(ex, *k);
        }
        for (i, &k) in m.0.iter().enumerate() {
            t = t.mul(&imgs[i].pow(k)?)?;
        }
        out = out.add(&t);
    }
    Ok(canonical(&out))
}

/// One of the relations P satisfies after base change along `h_rho`.
#[derive(Clone, Debug)]
pub struct SimplifiedRelation {
    pub name: &'static str,
    pub lhs: BcElem,
    pub rhs: BcElem,
}

impl SimplifiedRelation {
    pub fn holds(&self) -> bool {
        self.lhs == self.rhs
    }
}

/// The eight presentation relations as they read over `ℤ[ι^{±1}]`, with
/// `ζ₁₁⁻¹` written as `ι⁻²ζ₀₀ζ₀₁ζ₁₀`.
pub fn simplified_relations() -> Result<Vec<SimplifiedRelation>> {
    let b = Base::Rho;
    let m = |n: i64, pairs: &[(usize, u32)]| BcElem::mono(b, n, pairs);
    let sum = |xs: Vec<BcElem>| -> Result<BcElem> {
        xs.iter().try_fold(BcElem::zero(b), |acc, x| acc.add(x))
    };
    let rel = |name, lhs, rhs| SimplifiedRelation { name, lhs, rhs };
    Ok(vec![
        rel(
            "z00*z01*z10*z11 = iota^2",
            m(0, &[(Z00, 1), (Z01, 1), (Z10, 1), (Z11, 1)])?,
            BcElem::unit_pow(b, 1, 2),
        ),
        rel(
            "z10*z11*cxw1 = z00*z01*cw1",
            m(0, &[(Z10, 1), (Z11, 1), (CXW1, 1)])?,
            m(0, &[(Z00, 1), (Z01, 1), (CW1, 1)])?,
        ),
        rel(
            "z01*z11*cxw2 = z00*z10*cw2",
            m(0, &[(Z01, 1), (Z11, 1), (CXW2, 1)])?,
            m(0, &[(Z00, 1), (Z10, 1), (CW2, 1)])?,
        ),
        rel(
            "z00*cT = z10*cxw1 + z01*cxw2",
            m(0, &[(Z00, 1), (CT, 1)])?,
            sum(vec![m(0, &[(Z10, 1), (CXW1, 1)])?, m(0, &[(Z01, 1), (CXW2, 1)])?])?,
        ),
        rel(
            "z11*cT = z01*cw1 + z10*cw2",
            m(0, &[(Z11, 1), (CT, 1)])?,
            sum(vec![m(0, &[(Z01, 1), (CW1, 1)])?, m(0, &[(Z10, 1), (CW2, 1)])?])?,
        ),
        rel(
            "z01*cxT = z11*cxw1 + z00*cw2",
            m(0, &[(Z01, 1), (CXT, 1)])?,
            sum(vec![m(0, &[(Z11, 1), (CXW1, 1)])?, m(0, &[(Z00, 1), (CW2, 1)])?])?,
        ),
        rel(
            "z10*cxT = z00*cw1 + z11*cxw2",
            m(0, &[(Z10, 1), (CXT, 1)])?,
            sum(vec![m(0, &[(Z00, 1), (CW1, 1)])?, m(0, &[(Z11, 1), (CXW2, 1)])?])?,
        ),
        rel(
            "cT*cxT = cw1*cxw1 + cw2*cxw2 + 2*z00*z11^-1*cw1*cw2",
            m(0, &[(CT, 1), (CXT, 1)])?,
            sum(vec![
                m(0, &[(CW1, 1), (CXW1, 1)])?,
                m(0, &[(CW2, 1), (CXW2, 1)])?,
                m(-2, &[(Z00, 2), (Z01, 1), (Z10, 1), (CW1, 1), (CW2, 1)])?
                    .scale(&Laurent::constant(2, 1))?,
            ])?,
        ),
    ])
}

/// Splits a target element as `ι^a ζ^b · f(x1, x2)`, returning the unit
/// exponents and `f` over the exponents of `x1, x2`, or `None` if the terms do
/// not share one unit.
pub fn split_unit(x: &Target) -> Option<(Exps, Vec<((i64, i64), i64)>)> {
    let mut unit: Option<Exps> = None;
    let mut f = Vec::new();
    for (e, c) in x.terms() {
        let u: Exps = e[..super::X1].to_vec();
        match &unit {
            None => unit = Some(u),
            Some(v) if *v == u => {}
            Some(_) => return None,
        }
        f.push(((e[super::X1], e[super::X2]), *c));
    }
    unit.map(|u| (u, f))
}

/// Determinant of a square integer matrix by fraction-free elimination.
pub fn bareiss_det(mut a: Vec<Vec<i128>>) -> i128 {
    let n = a.len();
    if n == 0 {
        return 1;
    }
    let mut sign = 1;
    let mut prev = 1i128;
    for k in 0..n - 1 {
        if a[k][k] == 0 {
            match (k + 1..n).find(|&r| a[r][k] != 0) {
                Some(r) => {
                    a.swap(k, r);
                    sign = -sign;
                }
                None => return 0,
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) / prev;
            }
        }
        prev = a[k][k];
    }
    sign * a[n - 1][n - 1]
}

/// Outcome of the basis-to-basis check on one page.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RhoBasisReport {
    pub coset: GradingBT2,
    /// Basis monomials examined.
    pub monomials: usize,
    /// Basis monomials whose image is not a unit times a monomial in `x1, x2`.
    pub non_monomial: Vec<Monomial>,
    /// ρ-degrees at which the stripped images fail to form a basis of the
    /// degree-`n` polynomials in `x1, x2`.
    pub bad_degrees: Vec<i64>,
}

impl RhoBasisReport {
    pub fn is_basis(&self) -> bool {
        self.bad_degrees.is_empty()
    }
}

/// Checks that ρ carries the basis monomials of a page with ρ-degree offset
/// at most `max_rho` to unit multiples of a ℤ-basis of `ℤ[x1, x2]` in each degree.
pub fn basis_to_basis(coset: GradingBT2, max_rho: i64) -> Result<RhoBasisReport> {
    let page = bt2_page_by_rho(coset, max_rho)?;
    let mut by_degree: std::collections::BTreeMap<i64, Vec<Vec<((i64, i64), i64)>>> =
        Default::default();
    let mut report = RhoBasisReport {
        coset,
        monomials: 0,
        non_monomial: Vec::new(),
        bad_degrees: Vec::new(),
    };
    for (off, ms) in &page {
        let n = off.a + off.b + coset.rho_deg();
        for m in ms {
            report.monomials += 1;
            let img = rho(&Bt2Elem::mono(HCoeff::int(1), &pairs(m))?)?;
            match split_unit(&img) {
                Some((_, f)) => {
                    if f.len() != 1 || f[0].1.abs() != 1 {
                        report.non_monomial.push(m.clone());
                    }
                    by_degree.entry(n).or_default().push(f);
                }
                None => {
                    report.non_monomial.push(m.clone());
                    by_degree.entry(n).or_default().push(Vec::new());
                }
            }
        }
    }
    for (n, polys) in by_degree {
        if n < 0 || n % 2 != 0 {
            report.bad_degrees.push(n);
            continue;
        }
        let d = n / 2;
        if polys.len() as i64 != d + 1 {
            report.bad_degrees.push(n);
            continue;
        }
        let mut mat = vec![vec![0i128; polys.len()]; polys.len()];
        let mut ok = true;
        for (r, f) in polys.iter().enumerate() {
            for &((i, j), c) in f {
                if i < 0 || j < 0 || i + j != d {
                    ok = false;
                    continue;
                }
                mat[r][i as usize] += c as i128;
            }
        }
        if !ok || bareiss_det(mat).abs() != 1 {
            report.bad_degrees.push(n);
        }
    }
    Ok(report)
}

fn pairs(m: &Monomial) -> Vec<(usize, u32)> {
    m.0.iter()
        .enumerate()
        .filter(|(_, &k)| k > 0)
        .map(|(i, &k)| (i, k))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rings::bt2::{gens, presentation_relations};

    fn t(c: i64, e: [i64; TARGET_VARS]) -> Target {
        canonical(&Laurent::term(c, e.to_vec()))
    }

    #[test]
    fn tensor_class_image() {
        // ρ(cT) = ζ01ζ10(x1 + x2)
        let want = t(1, [0, 0, 1, 1, 0, 1, 0]).add(&t(1, [0, 0, 1, 1, 0, 0, 1]));
        assert_eq!(rho(&gens::ct()).unwrap(), want);
    }

    #[test]
    fn zeta_product_is_iota_squared() {
        let x = Bt2Elem::product(&[gens::z00(), gens::z01(), gens::z10(), gens::z11()]).unwrap();
        assert_eq!(rho(&x).unwrap(), t(1, [2, 0, 0, 0, 0, 0, 0]));
    }

    #[test]
    fn relations_vanish() {
        for r in presentation_relations() {
            assert!(rho_poly(&r.difference()).unwrap().is_zero(), "{}", r.name);
        }
    }

    #[test]
    fn simplified_relations_hold() {
        for r in simplified_relations().unwrap() {
            assert!(r.holds(), "{}", r.name);
        }
    }

    #[test]
    fn bareiss_small() {
        assert_eq!(bareiss_det(vec![vec![2, 1], vec![1, 1]]), 1);
        assert_eq!(bareiss_det(vec![vec![0, 1, 0], vec![1, 0, 0], vec![0, 0, 1]]), -1);
        assert_eq!(bareiss_det(vec![vec![1, 1], vec![1, 1]]), 0);
    }
}
