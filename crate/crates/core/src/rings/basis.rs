//! Enumeration of ℍ-basis monomials on RO(C₂) pages.
//!
//! A page is a coset `g + RO(C₂)`. Every generator other than the ζ's has
//! positive underlying degree, which bounds the c-exponents, and no normal
//! monomial contains all four (resp. both) ζ's, which fixes the ζ-exponents once
//! the c-exponents and the coset are known.

use std::collections::BTreeMap;

use super::{bt1, bt2};
use crate::error::{Error, Result};
use crate::grading::{GradingBT1, GradingBT2, GradingRO2};
use crate::rewrite::Monomial;

/// Largest exponent the enumeration will produce before giving up.
pub const EXPONENT_CAP: u32 = 64;

/// A rectangle of `(a, b)` offsets from the coset representative, inclusive.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Window {
    pub a_min: i64,
    pub a_max: i64,
    pub b_min: i64,
    pub b_max: i64,
}

impl Window {
    pub fn new(a_min: i64, a_max: i64, b_min: i64, b_max: i64) -> Self {
        Window {
            a_min,
            a_max,
            b_min,
            b_max,
        }
    }

    pub fn is_empty(&self) -> bool {
        self.a_min > self.a_max || self.b_min > self.b_max
    }

    pub fn contains(&self, g: GradingRO2) -> bool {
        (self.a_min..=self.a_max).contains(&g.a) && (self.b_min..=self.b_max).contains(&g.b)
    }

    fn max_rho(&self) -> i64 {
        self.a_max + self.b_max
    }
}

/// The basis monomials in one grading.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Cell {
    pub offset: GradingRO2,
    pub monomials: Vec<Monomial>,
}

/// Basis monomials of a page, grouped by offset from the coset representative.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Page<G> {
    pub coset: G,
    pub cells: Vec<Cell>,
}

impl<G> Page<G> {
    pub fn count(&self, a: i64, b: i64) -> usize {
        self.cells
            .iter()
            .find(|c| c.offset == GradingRO2::new(a, b))
            .map_or(0, |c| c.monomials.len())
    }

    pub fn counts(&self) -> BTreeMap<(i64, i64), usize> {
        self.cells
            .iter()
            .map(|c| ((c.offset.a, c.offset.b), c.monomials.len()))
            .collect()
    }
}

fn into_cells(map: BTreeMap<GradingRO2, Vec<Monomial>>) -> Vec<Cell> {
    map.into_iter()
        .map(|(offset, monomials)| Cell { offset, monomials })
        .collect()
}

/// Exponent vectors over `n` variables of underlying degree 2 with total `2·Σ ≤ max_rho`.
fn c_exponents(n: usize, max_rho: i64) -> Vec<Vec<u32>> {
    let mut out = Vec::new();
    if max_rho < 0 {
        return out;
    }
    let max_sum = (max_rho / 2) as u32;
    let mut cur = vec![0u32; n];
    fn rec(i: usize, left: u32, cur: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
        if i == cur.len() {
            out.push(cur.clone());
            return;
        }
        for k in 0..=left {
            cur[i] = k;
            rec(i + 1, left - k, cur, out);
        }
        cur[i] = 0;
    }
    rec(0, max_sum, &mut cur, &mut out);
    out
}

fn check_cap(exps: &[u32]) -> Result<()> {
    if exps.iter().any(|&k| k > EXPONENT_CAP) {
        return Err(Error::Resource(format!(
            "basis enumeration needs an exponent above {EXPONENT_CAP}"
        )));
    }
    Ok(())
}

/// Flat normal monomials on the page through `coset` with ρ-degree offset at
/// most `max_rho`, grouped by offset.
pub fn bt2_page_by_rho(coset: GradingBT2, max_rho: i64) -> Result<BTreeMap<GradingRO2, Vec<Monomial>>> {
    bt2_page_with(coset, max_rho, bt2::is_normal_monomial)
}

/// As [`bt2_page_by_rho`], with a caller-supplied basis predicate; the
/// predicate must reject every multiple of `z00·z01·z10·z11`.
fn bt2_page_with(
    coset: GradingBT2,
    max_rho: i64,
    is_basis: impl Fn(&Monomial) -> bool,
) -> Result<BTreeMap<GradingRO2, Vec<Monomial>>> {
    use bt2::*;
    let mut out: BTreeMap<GradingRO2, Vec<Monomial>> = BTreeMap::new();
    let rho_cap = max_rho + coset.rho_deg();
    for cs in c_exponents(6, rho_cap) {
        let mut e = vec![0u32; NVARS];
        e[CXW1..].copy_from_slice(&cs);
        let cg = monomial_grading(&Monomial(e.clone()));
        // ζ-exponents d relative to ζ₁₁, from the canonical Ω-part.
        let d = [
            coset.m00 - cg.m00,
            coset.m01 - cg.m01,
            coset.m10 - cg.m10,
            0,
        ];
        let lift = -d.iter().copied().min().unwrap_or(0);
        let zs: Vec<i64> = d.iter().map(|x| x + lift).collect();
        if zs.iter().any(|&z| z > EXPONENT_CAP as i64) {
            return Err(Error::Resource(format!(
                "basis enumeration needs a ζ-exponent above {EXPONENT_CAP}"
            )));
        }
        for (i, z) in zs.iter().enumerate() {
            e[i] = *z as u32;
        }
        check_cap(&e)?;
        let m = Monomial(e);
        if !is_basis(&m) {
            continue;
        }
        let diff = monomial_grading(&m) - coset;
        let off = diff.as_ro2().expect("same coset");
        if off.a + off.b > max_rho {
            continue;
        }
        out.entry(off).or_default().push(m);
    }
    Ok(out)
}

fn sort_cells(map: &mut BTreeMap<GradingRO2, Vec<Monomial>>, gens: &crate::rewrite::GeneratorSet) {
    for v in map.values_mut() {
        v.sort_by(|a, b| gens.compare(b, a));
    }
}

/// Flat basis monomials on the page through `coset`, restricted to `window`.
pub fn basis_enumerate(coset: GradingBT2, window: Window) -> Result<Page<GradingBT2>> {
    if window.is_empty() {
        return Ok(Page {
            coset,
            cells: Vec::new(),
        });
    }
    let mut map = bt2_page_by_rho(coset, window.max_rho())?;
    map.retain(|g, _| window.contains(*g));
    sort_cells(&mut map, &bt2::flat_generators());
    Ok(Page {
        coset,
        cells: into_cells(map),
    })
}

/// Counts per cell of [`basis_enumerate`].
pub fn basis_count_grid(coset: GradingBT2, window: Window) -> Result<BTreeMap<(i64, i64), usize>> {
    Ok(basis_enumerate(coset, window)?.counts())
}

/// Counts of monomials avoiding every printed flat exclusion, on the same page
/// and window as [`basis_count_grid`].
pub fn printed_exclusion_count_grid(
    coset: GradingBT2,
    window: Window,
) -> Result<BTreeMap<(i64, i64), usize>> {
    if window.is_empty() {
        return Ok(BTreeMap::new());
    }
    let forbidden = bt2::flat_forbidden();
    let mut map = bt2_page_with(coset, window.max_rho(), |m| {
        !forbidden.iter().any(|f| f.divides(m))
    })?;
    map.retain(|g, _| window.contains(*g));
    Ok(map
        .into_iter()
        .map(|(g, v)| ((g.a, g.b), v.len()))
        .collect())
}

/// BT² basis counts on a page for every offset of ρ-degree at most `max_rho`.
pub fn bt2_counts_by_rho(coset: GradingBT2, max_rho: i64) -> Result<BTreeMap<(i64, i64), usize>> {
    Ok(bt2_page_by_rho(coset, max_rho)?
        .into_iter()
        .map(|(g, v)| ((g.a, g.b), v.len()))
        .collect())
}

fn bt1_page_by_rho(coset: GradingBT1, max_rho: i64) -> Result<BTreeMap<GradingRO2, Vec<Monomial>>> {
    let mut out: BTreeMap<GradingRO2, Vec<Monomial>> = BTreeMap::new();
    let sys = bt1::system();
    for cs in c_exponents(2, max_rho + coset.rho_deg()) {
        let mut e = vec![0u32, 0, cs[0], cs[1]];
        let cg = bt1::monomial_grading(&Monomial(e.clone()));
        let d = coset.m0 - cg.m0;
        if d.unsigned_abs() > EXPONENT_CAP as u64 {
            return Err(Error::Resource(format!(
                "basis enumeration needs a ζ-exponent above {EXPONENT_CAP}"
            )));
        }
        if d >= 0 {
            e[bt1::Z0] = d as u32;
        } else {
            e[bt1::Z1] = (-d) as u32;
        }
        let m = Monomial(e);
        if !sys.is_normal(&m) {
            continue;
        }
        let diff = bt1::monomial_grading(&m) - coset;
        let off = diff.as_ro2().expect("same coset");
        if off.a + off.b > max_rho {
            continue;
        }
        out.entry(off).or_default().push(m);
    }
    Ok(out)
}

/// BT¹ basis monomials on the page through `coset`, restricted to `window`.
pub fn bt1_basis_enumerate(coset: GradingBT1, window: Window) -> Result<Page<GradingBT1>> {
    if window.is_empty() {
        return Ok(Page {
            coset,
            cells: Vec::new(),
        });
    }
    let mut map = bt1_page_by_rho(coset, window.max_rho())?;
    map.retain(|g, _| window.contains(*g));
    sort_cells(&mut map, &bt1::generators());
    Ok(Page {
        coset,
        cells: into_cells(map),
    })
}

pub fn bt1_basis_count(coset: GradingBT1, window: Window) -> Result<BTreeMap<(i64, i64), usize>> {
    Ok(bt1_basis_enumerate(coset, window)?.counts())
}

/// BT¹ basis counts for every offset of ρ-degree at most `max_rho`.
pub fn bt1_counts_by_rho(coset: GradingBT1, max_rho: i64) -> Result<BTreeMap<(i64, i64), usize>> {
    Ok(bt1_page_by_rho(coset, max_rho)?
        .into_iter()
        .map(|(g, v)| ((g.a, g.b), v.len()))
        .collect())
}

/// Convolution of two count grids, keeping offsets of ρ-degree at most `max_rho`.
pub fn convolve(
    x: &BTreeMap<(i64, i64), usize>,
    y: &BTreeMap<(i64, i64), usize>,
    max_rho: i64,
) -> BTreeMap<(i64, i64), usize> {
    let mut out = BTreeMap::new();
    for (&(a1, b1), &c1) in x {
        for (&(a2, b2), &c2) in y {
            let (a, b) = (a1 + a2, b1 + b2);
            if a + b <= max_rho {
                *out.entry((a, b)).or_insert(0) += c1 * c2;
            }
        }
    }
    out
}

/// Compares BT² page counts on `π₁*(g1) + π₂*(g2)` with the convolution of the
/// two BT¹ pages; returns the mismatched cells.
pub fn kunneth_mismatches(
    g1: GradingBT1,
    g2: GradingBT1,
    max_rho: i64,
) -> Result<Vec<((i64, i64), usize, usize)>> {
    let coset = g1.pi1() + g2.pi2();
    let direct = bt2_counts_by_rho(coset, max_rho)?;
    let conv = convolve(
        &bt1_counts_by_rho(g1, max_rho)?,
        &bt1_counts_by_rho(g2, max_rho)?,
        max_rho,
    );
    let mut keys: Vec<(i64, i64)> = direct.keys().chain(conv.keys()).copied().collect();
    keys.sort_unstable();
    keys.dedup();
    Ok(keys
        .into_iter()
        .filter_map(|k| {
            let (d, c) = (
                direct.get(&k).copied().unwrap_or(0),
                conv.get(&k).copied().unwrap_or(0),
            );
            (d != c).then_some((k, d, c))
        })
        .collect())
}
