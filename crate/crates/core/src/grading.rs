//! Grading groups and the homomorphisms between them.
//!
//! Every group here is free abelian on `1`, `σ` and a few `Ω` symbols modulo a
//! single relation saying that the `Ω` symbols sum to `2σ − 2`. Values are kept
//! in canonical form by eliminating the last `Ω` symbol, so structural equality
//! is group equality.

use std::fmt;
use std::ops::{Add, Neg, Sub};

/// An element `a + bσ` of RO(C₂).
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct GradingRO2 {
    pub a: i64,
    pub b: i64,
}

impl GradingRO2 {
    pub const ZERO: GradingRO2 = GradingRO2 { a: 0, b: 0 };

    pub const fn new(a: i64, b: i64) -> Self {
        GradingRO2 { a, b }
    }

    pub fn scale(self, k: i64) -> Self {
        GradingRO2::new(self.a * k, self.b * k)
    }
}

impl Add for GradingRO2 {
    type Output = Self;
    fn add(self, o: Self) -> Self {
        GradingRO2::new(self.a + o.a, self.b + o.b)
    }
}

impl Sub for GradingRO2 {
    type Output = Self;
    fn sub(self, o: Self) -> Self {
        GradingRO2::new(self.a - o.a, self.b - o.b)
    }
}

impl Neg for GradingRO2 {
    type Output = Self;
    fn neg(self) -> Self {
        GradingRO2::new(-self.a, -self.b)
    }
}

impl fmt::Display for GradingRO2 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_terms(f, &[(self.a, ""), (self.b, "s")])
    }
}

/// An element of RO(ΠBT²), stored with `Ω₁₁` eliminated.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct GradingBT2 {
    pub a: i64,
    pub b: i64,
    pub m00: i64,
    pub m01: i64,
    pub m10: i64,
}

impl GradingBT2 {
    pub const ZERO: GradingBT2 = GradingBT2 {
        a: 0,
        b: 0,
        m00: 0,
        m01: 0,
        m10: 0,
    };

    /// Canonicalizes a raw representative `a + bσ + Σ mᵢⱼΩᵢⱼ`.
    pub fn from_raw(a: i64, b: i64, m00: i64, m01: i64, m10: i64, m11: i64) -> Self {
        GradingBT2 {
            a: a - 2 * m11,
            b: b + 2 * m11,
            m00: m00 - m11,
            m01: m01 - m11,
            m10: m10 - m11,
        }
    }

    pub fn omega(i: usize, j: usize) -> Self {
        let mut m = [0i64; 4];
        m[2 * i + j] = 1;
        GradingBT2::from_raw(0, 0, m[0], m[1], m[2], m[3])
    }

    pub fn ro2(g: GradingRO2) -> Self {
        GradingBT2::from_raw(g.a, g.b, 0, 0, 0, 0)
    }

    /// The `RO(C₂)` part, when the `Ω` part vanishes.
    pub fn as_ro2(&self) -> Option<GradingRO2> {
        (self.m00 == 0 && self.m01 == 0 && self.m10 == 0).then_some(GradingRO2::new(self.a, self.b))
    }

    /// Raw coefficients `(a, b, m00, m01, m10, m11)` of the canonical representative.
    pub fn raw(&self) -> [i64; 6] {
        [self.a, self.b, self.m00, self.m01, self.m10, 0]
    }

    pub fn scale(self, k: i64) -> Self {
        GradingBT2 {
            a: self.a * k,
            b: self.b * k,
            m00: self.m00 * k,
            m01: self.m01 * k,
            m10: self.m10 * k,
        }
    }

    /// Image under the forgetful map to the integers: `1, σ ↦ 1`, `Ωᵢⱼ ↦ 0`.
    pub fn rho_deg(&self) -> i64 {
        self.a + self.b
    }

    /// Fixed-point degrees `(a − 2mᵢⱼ)` indexed by `00, 01, 10, 11`.
    pub fn phi_deg(&self) -> [i64; 4] {
        [
            self.a - 2 * self.m00,
            self.a - 2 * self.m01,
            self.a - 2 * self.m10,
            self.a,
        ]
    }

    /// Membership in the subgroup generated by pullbacks from the two factors,
    /// characterized by `m00 + m11 = m01 + m10`.
    pub fn is_sro(&self) -> bool {
        self.m00 == self.m01 + self.m10
    }

    pub fn is_even(&self) -> bool {
        self.a % 2 == 0 && self.b % 2 == 0
    }

    /// Same `Ω` part, so the difference lies in `RO(C₂)`.
    pub fn same_coset(&self, o: &GradingBT2) -> bool {
        (*self - *o).as_ro2().is_some()
    }
}

/// Membership in SRO evaluated on a raw representative.
pub fn is_sro_raw(m00: i64, m01: i64, m10: i64, m11: i64) -> bool {
    m00 + m11 == m01 + m10
}

impl Add for GradingBT2 {
    type Output = Self;
    fn add(self, o: Self) -> Self {
        GradingBT2 {
            a: self.a + o.a,
            b: self.b + o.b,
            m00: self.m00 + o.m00,
            m01: self.m01 + o.m01,
            m10: self.m10 + o.m10,
        }
    }
}

impl Sub for GradingBT2 {
    type Output = Self;
    fn sub(self, o: Self) -> Self {
        self + (-o)
    }
}

impl Neg for GradingBT2 {
    type Output = Self;
    fn neg(self) -> Self {
        self.scale(-1)
    }
}

impl From<GradingRO2> for GradingBT2 {
    fn from(g: GradingRO2) -> Self {
        GradingBT2::ro2(g)
    }
}

impl fmt::Display for GradingBT2 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_terms(
            f,
            &[
                (self.a, ""),
                (self.b, "s"),
                (self.m00, "W00"),
                (self.m01, "W01"),
                (self.m10, "W10"),
            ],
        )
    }
}

/// An element of RO(ΠBT¹), stored with `Ω₁` eliminated.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct GradingBT1 {
    pub a: i64,
    pub b: i64,
    pub m0: i64,
}

impl GradingBT1 {
    pub const ZERO: GradingBT1 = GradingBT1 { a: 0, b: 0, m0: 0 };

    pub fn from_raw(a: i64, b: i64, m0: i64, m1: i64) -> Self {
        GradingBT1 {
            a: a - 2 * m1,
            b: b + 2 * m1,
            m0: m0 - m1,
        }
    }

    pub fn ro2(g: GradingRO2) -> Self {
        GradingBT1 { a: g.a, b: g.b, m0: 0 }
    }

    pub fn scale(self, k: i64) -> Self {
        GradingBT1 {
            a: self.a * k,
            b: self.b * k,
            m0: self.m0 * k,
        }
    }

    pub fn as_ro2(&self) -> Option<GradingRO2> {
        (self.m0 == 0).then_some(GradingRO2::new(self.a, self.b))
    }

    pub fn rho_deg(&self) -> i64 {
        self.a + self.b
    }

    /// Pullback along the first projection: `Ω₀ ↦ Ω₀₀ + Ω₀₁`, `Ω₁ ↦ Ω₁₀ + Ω₁₁`.
    pub fn pi1(&self) -> GradingBT2 {
        GradingBT2::from_raw(self.a, self.b, self.m0, self.m0, 0, 0)
    }

    /// Pullback along the second projection: `Ω₀ ↦ Ω₀₀ + Ω₁₀`, `Ω₁ ↦ Ω₀₁ + Ω₁₁`.
    pub fn pi2(&self) -> GradingBT2 {
        GradingBT2::from_raw(self.a, self.b, self.m0, 0, self.m0, 0)
    }
}

impl Add for GradingBT1 {
    type Output = Self;
    fn add(self, o: Self) -> Self {
        GradingBT1 {
            a: self.a + o.a,
            b: self.b + o.b,
            m0: self.m0 + o.m0,
        }
    }
}

impl Sub for GradingBT1 {
    type Output = Self;
    fn sub(self, o: Self) -> Self {
        GradingBT1 {
            a: self.a - o.a,
            b: self.b - o.b,
            m0: self.m0 - o.m0,
        }
    }
}

impl fmt::Display for GradingBT1 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_terms(f, &[(self.a, ""), (self.b, "s"), (self.m0, "W0")])
    }
}

/// An element of RO(ΠBU(2)) in the image model: `Ω₂` eliminated, embedded in
/// RO(ΠBT²) with `m01 = m10`.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct GradingBU2 {
    pub a: i64,
    pub b: i64,
    pub n0: i64,
    pub n1: i64,
}

impl GradingBU2 {
    pub fn from_raw(a: i64, b: i64, n0: i64, n1: i64, n2: i64) -> Self {
        GradingBU2 {
            a: a - 2 * n2,
            b: b + 2 * n2,
            n0: n0 - n2,
            n1: n1 - n2,
        }
    }

    /// The grading `λ = 2 + Ω₁`.
    pub fn lambda() -> Self {
        GradingBU2::from_raw(2, 0, 0, 1, 0)
    }

    /// Pullback along the sum map: `Ω₀ ↦ Ω₀₀`, `Ω₁ ↦ Ω₀₁ + Ω₁₀`, `Ω₂ ↦ Ω₁₁`.
    pub fn embed(&self) -> GradingBT2 {
        GradingBT2::from_raw(self.a, self.b, self.n0, self.n1, self.n1, 0)
    }

    /// Inverse of [`GradingBU2::embed`] on its image.
    pub fn from_bt2(g: &GradingBT2) -> Option<Self> {
        (g.m01 == g.m10).then_some(GradingBU2 {
            a: g.a,
            b: g.b,
            n0: g.m00,
            n1: g.m01,
        })
    }
}

impl Add for GradingBU2 {
    type Output = Self;
    fn add(self, o: Self) -> Self {
        GradingBU2 {
            a: self.a + o.a,
            b: self.b + o.b,
            n0: self.n0 + o.n0,
            n1: self.n1 + o.n1,
        }
    }
}

fn write_terms(f: &mut fmt::Formatter<'_>, terms: &[(i64, &str)]) -> fmt::Result {
    let mut first = true;
    for &(c, sym) in terms {
        if c == 0 {
            continue;
        }
        let mag = c.unsigned_abs();
        if first {
            if c < 0 {
                write!(f, "-")?;
            }
        } else {
            write!(f, " {} ", if c < 0 { '-' } else { '+' })?;
        }
        first = false;
        match (sym.is_empty(), mag) {
            (true, _) => write!(f, "{mag}")?,
            (false, 1) => write!(f, "{sym}")?,
            (false, _) => write!(f, "{mag}*{sym}")?,
        }
    }
    if first {
        write!(f, "0")?;
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn g2() -> impl Strategy<Value = GradingBT2> {
        (-9i64..9, -9i64..9, -5i64..5, -5i64..5, -5i64..5, -5i64..5)
            .prop_map(|(a, b, p, q, r, s)| GradingBT2::from_raw(a, b, p, q, r, s))
    }

    #[test]
    fn cw1_plus_cxw1() {
        let cw1 = GradingBT2::from_raw(2, 0, 0, 0, 1, 1);
        let cxw1 = GradingBT2::from_raw(2, 0, 1, 1, 0, 0);
        assert_eq!(cw1 + cxw1, GradingBT2::ro2(GradingRO2::new(2, 2)));
    }

    #[test]
    fn omega_sum_is_relation() {
        let s = GradingBT2::from_raw(0, 0, 1, 1, 1, 1);
        assert_eq!(s, GradingBT2 { a: -2, b: 2, ..GradingBT2::ZERO });
        assert_eq!(s.rho_deg(), 0);
        assert_eq!(s.phi_deg(), [-2; 4]);
    }

    #[test]
    fn phi_deg_example() {
        let g = GradingBT2::from_raw(2, 4, 0, 1, 1, 0);
        assert_eq!(g.phi_deg(), [2, 0, 0, 2]);
        assert_eq!(g.rho_deg(), 6);
    }

    #[test]
    fn sro_examples() {
        assert!(!GradingBT2::from_raw(2, 0, 0, 1, 1, 0).is_sro());
        assert!(GradingBT2::ro2(GradingRO2::new(3, -7)).is_sro());
        assert!(!GradingBT2::from_raw(0, 0, 1, 0, 0, 1).is_sro());
        assert!(!is_sro_raw(1, 0, 0, 1));
        assert!(GradingBT1::from_raw(0, 0, 1, 0).pi1().is_sro());
    }

    #[test]
    fn even_examples() {
        assert!(GradingBT2::from_raw(2, 0, 0, 1, 1, 0).is_even());
        let bu = GradingBU2::from_raw(3, 1, 0, 1, 0);
        assert!(!bu.embed().is_even());
        assert!(!GradingBT2::ro2(GradingRO2::new(0, 1)).is_even());
    }

    #[test]
    fn embeddings() {
        assert_eq!(GradingBT1::from_raw(0, 0, 1, 0).pi1(), GradingBT2::from_raw(0, 0, 1, 1, 0, 0));
        assert_eq!(GradingBT1::from_raw(0, 0, 1, 0).pi2(), GradingBT2::from_raw(0, 0, 1, 0, 1, 0));
        assert_eq!(GradingBU2::lambda().embed(), GradingBT2::from_raw(2, 0, 0, 1, 1, 0));
        assert_eq!(GradingBT1::ZERO.pi1(), GradingBT2::ZERO);
        // relation maps to relation
        assert_eq!(GradingBT1::from_raw(0, 0, 1, 1).pi1(), GradingBT2::from_raw(0, 0, 1, 1, 1, 1));
        assert_eq!(GradingBU2::from_raw(0, 0, 1, 1, 1).embed(), GradingBT2::from_raw(0, 0, 1, 1, 1, 1));
    }

    #[test]
    fn embeddings_injective_on_box() {
        let mut seen1 = std::collections::HashSet::new();
        let mut seen2 = std::collections::HashSet::new();
        let mut seen3 = std::collections::HashSet::new();
        for a in -5..=5 {
            for b in -5..=5 {
                for m in -5..=5 {
                    let g = GradingBT1 { a, b, m0: m };
                    assert!(seen1.insert(g.pi1()));
                    assert!(seen2.insert(g.pi2()));
                    for n in -5..=5 {
                        let h = GradingBU2 { a, b, n0: m, n1: n };
                        assert!(seen3.insert(h.embed()));
                    }
                }
            }
        }
    }

    #[test]
    fn display() {
        assert_eq!(GradingBT2::from_raw(2, 0, 0, 1, 1, 0).to_string(), "2 + W01 + W10");
        assert_eq!(GradingBT2::ZERO.to_string(), "0");
        assert_eq!(GradingRO2::new(-2, 2).to_string(), "-2 + 2*s");
    }

    proptest! {
        #[test]
        fn rho_phi_additive(x in g2(), y in g2()) {
            prop_assert_eq!((x + y).rho_deg(), x.rho_deg() + y.rho_deg());
            let (p, q, r) = (x.phi_deg(), y.phi_deg(), (x + y).phi_deg());
            for i in 0..4 { prop_assert_eq!(r[i], p[i] + q[i]); }
        }

        #[test]
        fn sro_subgroup(x in g2(), y in g2()) {
            if x.is_sro() && y.is_sro() {
                prop_assert!((x + y).is_sro());
                prop_assert!((-x).is_sro());
            }
        }

        #[test]
        fn even_symmetric(x in g2()) {
            prop_assert_eq!(x.is_even(), (-x).is_even());
        }

        #[test]
        fn raw_and_canonical_agree(a in -9i64..9, b in -9i64..9, p in -5i64..5, q in -5i64..5, r in -5i64..5, s in -5i64..5) {
            let g = GradingBT2::from_raw(a, b, p, q, r, s);
            prop_assert_eq!(g.is_sro(), is_sro_raw(p, q, r, s));
            let phi_raw = [a - 2 * p, a - 2 * q, a - 2 * r, a - 2 * s];
            prop_assert_eq!(g.phi_deg(), phi_raw);
            prop_assert_eq!(g.rho_deg(), a + b);
        }
    }
}
