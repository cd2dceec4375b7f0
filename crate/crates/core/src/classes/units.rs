//! The unit group of H(BT²₊), which lies in grading 0 with ℤ-basis
//! `1, g, ε₁, ε₂, ε⊕`.

use super::{eps1, eps2, eps_sum};
use crate::error::{Error, Result};
use crate::hcoeff::{HCoeff, HMono};
use crate::rewrite::Monomial;
use crate::rings::bt2::Bt2Elem;

pub const BASIS_NAMES: [&str; 5] = ["1", "g", "eps1", "eps2", "epsS"];

/// Coordinates in the basis `1, g, ε₁, ε₂, ε⊕`.
pub type Coords = [i64; 5];

pub fn basis() -> [Bt2Elem; 5] {
    [Bt2Elem::one(), Bt2Elem::h(HCoeff::g()), eps1(), eps2(), eps_sum()]
}

pub fn from_coords(a: &Coords) -> Result<Bt2Elem> {
    let mut out = Bt2Elem::zero();
    for (k, b) in a.iter().zip(basis()) {
        out = out.add(&b.scale_int(*k)?);
    }
    Ok(out)
}

fn single_term(x: &Bt2Elem) -> (Monomial, HCoeff) {
    x.sorted_terms().into_iter().next().expect("basis elements are nonzero")
}

/// Writes a grading-0 element in the basis `1, g, ε₁, ε₂, ε⊕`.
pub fn coords(x: &Bt2Elem) -> Result<Coords> {
    let b = basis();
    let mut out = [0; 5];
    let fail = || Error::Domain(format!("{x} is not in grading 0"));
    for (m, c) in x.sorted_terms() {
        if m.is_one() {
            for (h, k) in c.terms() {
                match h {
                    HMono::One => out[0] += k,
                    HMono::Kappa => {
                        out[0] += 2 * k;
                        out[1] -= k;
                    }
                    _ => return Err(fail()),
                }
            }
            continue;
        }
        let i = (2..5).find(|&i| single_term(&b[i]).0 == m).ok_or_else(fail)?;
        let unit = single_term(&b[i]).1;
        let k = (-64..=64)
            .find(|&k| unit.scale(k) == c)
            .ok_or_else(fail)?;
        out[i] += k;
    }
    Ok(out)
}

/// Structure constants: `table[i][j]` are the coordinates of `bᵢ·bⱼ`.
pub fn multiplication_table() -> Result<[[Coords; 5]; 5]> {
    let b = basis();
    let mut t = [[[0; 5]; 5]; 5];
    for i in 0..5 {
        for j in 0..5 {
            t[i][j] = coords(&b[i].mul(&b[j])?)?;
        }
    }
    Ok(t)
}

/// The products listed for the basis: `gεᵢ = 0`, `εᵢ² = 2εᵢ`, mixed products `2ε⊕`.
pub fn expected_table() -> [[Coords; 5]; 5] {
    let e = |i: usize, k: i64| {
        let mut c = [0; 5];
        c[i] = k;
        c
    };
    let mut t = [[[0; 5]; 5]; 5];
    for i in 0..5 {
        t[0][i] = e(i, 1);
        t[i][0] = e(i, 1);
    }
    t[1][1] = [0, 2, 0, 0, 0];
    for i in 2..5 {
        t[i][i] = e(i, 2);
        for j in 2..5 {
            if i != j {
                t[i][j] = e(4, 2);
            }
        }
    }
    t
}

pub fn mul_coords(t: &[[Coords; 5]; 5], a: &Coords, b: &Coords) -> Coords {
    let mut out = [0; 5];
    for i in 0..5 {
        for j in 0..5 {
            let s = a[i] * b[j];
            if s != 0 {
                for k in 0..5 {
                    out[k] += s * t[i][j][k];
                }
            }
        }
    }
    out
}

/// The 16 products `±(1−κ)^{a0}(1−ε₁)^{a1}(1−ε₂)^{a2}(1−ε⊕)^{a3}` with sign `+`.
pub fn candidates() -> Result<Vec<(String, Bt2Elem)>> {
    let b = basis();
    let factors = [
        ("(1-kappa)", Bt2Elem::h(HCoeff::one_minus_kappa())),
        ("(1-eps1)", Bt2Elem::one().sub(&b[2])),
        ("(1-eps2)", Bt2Elem::one().sub(&b[3])),
        ("(1-epsS)", Bt2Elem::one().sub(&b[4])),
    ];
    let mut out = Vec::new();
    for mask in 0..16u32 {
        let mut name = String::new();
        let mut x = Bt2Elem::one();
        for (i, (n, f)) in factors.iter().enumerate() {
            if mask & (1 << i) != 0 {
                name.push_str(n);
                x = x.mul(f)?;
            }
        }
        if name.is_empty() {
            name.push('1');
        }
        out.push((name, x));
    }
    Ok(out)
}

/// The inverse of `u` when it exists with integer coordinates.
fn inverse(t: &[[Coords; 5]; 5], u: &Coords) -> Option<Coords> {
    let mut m = [[0i128; 6]; 5];
    for j in 0..5 {
        let mut e = [0; 5];
        e[j] = 1;
        let col = mul_coords(t, u, &e);
        for i in 0..5 {
            m[i][j] = col[i] as i128;
        }
    }
    m[0][5] = 1;
    // Fraction-free elimination over ℤ, then back substitution checking divisibility.
    for c in 0..5 {
        let p = (c..5).find(|&r| m[r][c] != 0)?;
        m.swap(c, p);
        for r in c + 1..5 {
            let f = m[r][c];
            let g = m[c][c];
            for k in c..6 {
                m[r][k] = m[r][k] * g - m[c][k] * f;
            }
        }
    }
    let mut v = [0i128; 5];
    for c in (0..5).rev() {
        let mut s = m[c][5];
        for k in c + 1..5 {
            s -= m[c][k] * v[k];
        }
        if s % m[c][c] != 0 {
            return None;
        }
        v[c] = s / m[c][c];
    }
    Some(v.map(|x| x as i64))
}

#[derive(Clone, Debug)]
pub struct UnitReport {
    pub table: [[Coords; 5]; 5],
    pub table_matches: bool,
    pub squares: Vec<(String, bool)>,
    pub units: Vec<Coords>,
}

impl UnitReport {
    pub fn passed(&self) -> bool {
        self.table_matches && self.squares.iter().all(|s| s.1) && self.units.len() == 32
    }
}

/// All `u` with coordinates in `[−bound, bound]⁵` having an inverse with integer coordinates.
pub fn brute_force_units(t: &[[Coords; 5]; 5], bound: i64) -> Vec<Coords> {
    let r = -bound..=bound;
    let mut out = Vec::new();
    for a0 in r.clone() {
        for a1 in r.clone() {
            for a2 in r.clone() {
                for a3 in r.clone() {
                    for a4 in r.clone() {
                        let u = [a0, a1, a2, a3, a4];
                        if inverse(t, &u).is_some() {
                            out.push(u);
                        }
                    }
                }
            }
        }
    }
    out
}

pub fn unit_check() -> Result<UnitReport> {
    let table = multiplication_table()?;
    let squares = candidates()?
        .into_iter()
        .map(|(n, x)| Ok((n, x.mul(&x)? == Bt2Elem::one())))
        .collect::<Result<Vec<_>>>()?;
    Ok(UnitReport {
        table_matches: table == expected_table(),
        units: brute_force_units(&table, 3),
        table,
        squares,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn coords_round_trip() {
        for a in [[1, 0, 0, 0, 0], [3, -2, 1, 0, 5], [0, 1, -1, 2, -3]] {
            assert_eq!(coords(&from_coords(&a).unwrap()).unwrap(), a);
        }
    }

    #[test]
    fn eps_sum_squared() {
        let e = eps_sum();
        assert_eq!(e.mul(&e).unwrap(), e.scale_int(2).unwrap());
    }

    #[test]
    fn exactly_32_units_forming_a_group() {
        let r = unit_check().unwrap();
        assert!(r.table_matches);
        assert!(r.squares.iter().all(|s| s.1));
        assert_eq!(r.units.len(), 32);
        for a in &r.units {
            for b in &r.units {
                assert!(r.units.contains(&mul_coords(&r.table, a, b)));
            }
        }
        let listed: Vec<Coords> = candidates()
            .unwrap()
            .iter()
            .flat_map(|(_, x)| {
                let c = coords(x).unwrap();
                [c, c.map(|v| -v)]
            })
            .collect();
        for u in &r.units {
            assert!(listed.contains(u));
        }
    }
}
