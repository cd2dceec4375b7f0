//! Ring homomorphisms out of H(BT²₊): restriction to the underlying and fixed
//! cohomology, the classifying-map pullbacks, the pushforward to BU(2), and
//! reduction modulo the ideal N.

pub mod basechange;
pub mod fixed;
pub mod modn;
pub mod pullback;
pub mod push;
pub mod rho;

use crate::error::Result;
use crate::hcoeff::HCoeff;
use crate::laurent::Laurent;
use crate::rewrite::{Coefficient, Poly};
use crate::rings::bt2::{CT, CW1, CW2, CXT, CXW1, CXW2};

/// Variable layout shared by every Laurent target: a scalar unit (`iota` for
/// ρ, `e` for φ, unused for η), the four ζ's, then `x1, x2`.
pub const SCALAR: usize = 0;
pub const X1: usize = 5;
pub const X2: usize = 6;
pub const TARGET_VARS: usize = 7;

/// Position of `ζ_k` in the target layout, `k` a component index 0..4.
pub const fn zeta(k: usize) -> usize {
    1 + k
}

/// Component labels in the order 00, 01, 10, 11.
pub const COMPONENTS: [&str; 4] = ["00", "01", "10", "11"];

/// The two fixed components on which a Euler class is not `ζ·x`-type, and its
/// underlying linear form `(x1, x2)` coefficients.
#[derive(Clone, Copy, Debug)]
pub struct ClassShape {
    pub support: [usize; 2],
    pub linear: [i64; 2],
}

/// Shape of each Euler-class generator, or `None` for a ζ.
pub fn class_shape(gen: usize) -> Option<ClassShape> {
    let s = |support, linear| Some(ClassShape { support, linear });
    match gen {
        CXW1 => s([0, 1], [1, 0]),
        CW1 => s([2, 3], [1, 0]),
        CXW2 => s([0, 2], [0, 1]),
        CW2 => s([1, 3], [0, 1]),
        CXT => s([0, 3], [1, 1]),
        CT => s([1, 2], [1, 1]),
        _ => None,
    }
}

impl ClassShape {
    pub fn contains(&self, k: usize) -> bool {
        self.support.contains(&k)
    }

    /// The two components outside the support.
    pub fn complement(&self) -> [usize; 2] {
        let mut out = [0; 2];
        let mut i = 0;
        for k in 0..4 {
            if !self.contains(k) {
                out[i] = k;
                i += 1;
            }
        }
        out
    }

    /// `ζ^{α−2}`: the product of the ζ's at the support.
    pub fn zeta_shift(&self) -> Vec<i64> {
        let mut e = vec![0; TARGET_VARS];
        for k in self.support {
            e[zeta(k)] += 1;
        }
        e
    }

    /// `ζ^{α−2σ}`: the inverse of the ζ's outside the support.
    pub fn zeta_shift_sigma(&self) -> Vec<i64> {
        let mut e = vec![0; TARGET_VARS];
        for k in self.complement() {
            e[zeta(k)] -= 1;
        }
        e
    }

    /// `a·x1 + b·x2` over the target layout.
    pub fn linear_form<C: Coefficient>(&self) -> Laurent<C> {
        let mut l = Laurent::zero(TARGET_VARS);
        for (v, k) in [(X1, self.linear[0]), (X2, self.linear[1])] {
            if k != 0 {
                let mut e = vec![0; TARGET_VARS];
                e[v] = 1;
                l.add_term(e, C::from_int(k));
            }
        }
        l
    }
}

/// The ring operations [`evaluate`] needs from a target.
pub struct Ops<'a, T> {
    pub zero: T,
    pub one: T,
    pub add: &'a dyn Fn(&T, &T) -> T,
    pub mul: &'a dyn Fn(&T, &T) -> Result<T>,
}

/// Evaluates a polynomial over ℍ at generator images, mapping coefficients by `coeff`.
pub fn evaluate<T: Clone>(
    x: &Poly<HCoeff>,
    images: &[T],
    coeff: impl Fn(&HCoeff) -> Result<T>,
    ops: &Ops<'_, T>,
) -> Result<T> {
    let mut powers: Vec<Vec<T>> = images
        .iter()
        .map(|g| vec![ops.one.clone(), g.clone()])
        .collect();
    let mut total = ops.zero.clone();
    for (m, c) in x.terms() {
        let mut t = coeff(c)?;
        for (i, &k) in m.0.iter().enumerate() {
            if k == 0 {
                continue;
            }
            while powers[i].len() <= k as usize {
                let next = (ops.mul)(powers[i].last().expect("nonempty"), &images[i])?;
                powers[i].push(next);
            }
            t = (ops.mul)(&t, &powers[i][k as usize])?;
        }
        total = (ops.add)(&total, &t);
    }
    Ok(total)
}
