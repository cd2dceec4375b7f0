//! Sparse multivariate Laurent polynomials over a coefficient ring.

use std::collections::BTreeMap;
use std::fmt;

use crate::error::Result;
use crate::rewrite::Coefficient;

/// Exponent vector; entries may be negative.
pub type Exps = Vec<i64>;

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Laurent<C> {
    nvars: usize,
    terms: BTreeMap<Exps, C>,
}

impl<C: Coefficient> Laurent<C> {
    pub fn zero(nvars: usize) -> Self {
        Laurent {
            nvars,
            terms: BTreeMap::new(),
        }
    }

    pub fn one(nvars: usize) -> Self {
        Self::term(C::one(), vec![0; nvars])
    }

    pub fn constant(c: C, nvars: usize) -> Self {
        Self::term(c, vec![0; nvars])
    }

    pub fn term(c: C, exps: Exps) -> Self {
        let mut l = Laurent::zero(exps.len());
        l.add_term(exps, c);
        l
    }

    pub fn var(i: usize, nvars: usize) -> Self {
        Self::var_pow(i, 1, nvars)
    }

    pub fn var_pow(i: usize, k: i64, nvars: usize) -> Self {
        let mut e = vec![0; nvars];
        e[i] = k;
        Self::term(C::one(), e)
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Exps, &C)> {
        self.terms.iter()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn add_term(&mut self, exps: Exps, c: C) {
        debug_assert_eq!(exps.len(), self.nvars);
        if c.is_zero() {
            return;
        }
        match self.terms.remove(&exps) {
            Some(old) => {
                let s = old.add(&c);
                if !s.is_zero() {
                    self.terms.insert(exps, s);
                }
            }
            None => {
                self.terms.insert(exps, c);
            }
        }
    }

    pub fn add(&self, o: &Self) -> Self {
        let mut r = self.clone();
        for (e, c) in &o.terms {
            r.add_term(e.clone(), c.clone());
        }
        r
    }

    pub fn neg(&self) -> Self {
        Laurent {
            nvars: self.nvars,
            terms: self.terms.iter().map(|(e, c)| (e.clone(), c.neg())).collect(),
        }
    }

    pub fn sub(&self, o: &Self) -> Self {
        self.add(&o.neg())
    }

    pub fn mul(&self, o: &Self) -> Result<Self> {
        let mut r = Laurent::zero(self.nvars);
        for (e1, c1) in &self.terms {
            for (e2, c2) in &o.terms {
                let e: Exps = e1.iter().zip(e2).map(|(a, b)| a + b).collect();
                r.add_term(e, c1.mul(c2)?);
            }
        }
        Ok(r)
    }

    pub fn scale(&self, c: &C) -> Result<Self> {
        self.mul(&Laurent::constant(c.clone(), self.nvars))
    }

    pub fn pow(&self, k: u32) -> Result<Self> {
        let mut r = Laurent::one(self.nvars);
        for _ in 0..k {
            r = r.mul(self)?;
        }
        Ok(r)
    }

    /// Applies `f` to every coefficient, dropping resulting zeros.
    pub fn map_coeffs<D: Coefficient>(&self, f: impl Fn(&C) -> D) -> Laurent<D> {
        let mut r = Laurent::zero(self.nvars);
        for (e, c) in &self.terms {
            r.add_term(e.clone(), f(c));
        }
        r
    }

    /// Multiplies every exponent vector by a monomial change; used to impose
    /// relations such as `∏ζ = ι²` by rewriting one variable in terms of others.
    pub fn substitute_monomial(&self, var: usize, image: &Exps) -> Self {
        let mut r = Laurent::zero(self.nvars);
        for (e, c) in &self.terms {
            let k = e[var];
            let mut ne = e.clone();
            ne[var] = 0;
            for (x, d) in ne.iter_mut().zip(image) {
                *x += k * d;
            }
            r.add_term(ne, c.clone());
        }
        r
    }

    pub fn fmt_with(&self, names: &[&str], f: &mut fmt::Formatter<'_>) -> fmt::Result
    where
        C: fmt::Display,
    {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (i, (e, c)) in self.terms.iter().enumerate() {
            let mono: Vec<String> = e
                .iter()
                .zip(names)
                .filter(|(k, _)| **k != 0)
                .map(|(k, n)| if *k == 1 { n.to_string() } else { format!("{n}^{k}") })
                .collect();
            let cs = c.to_string();
            let body = if mono.is_empty() {
                cs
            } else if cs == "1" {
                mono.join("*")
            } else if cs == "-1" {
                format!("-{}", mono.join("*"))
            } else if cs.contains([' ', '+']) || cs[1..].contains('-') {
                format!("({cs})*{}", mono.join("*"))
            } else {
                format!("{cs}*{}", mono.join("*"))
            };
            if i > 0 {
                if let Some(rest) = body.strip_prefix('-') {
                    write!(f, " - {rest}")?;
                    continue;
                }
                write!(f, " + ")?;
            }
            write!(f, "{body}")?;
        }
        Ok(())
    }
}

/// Displays a Laurent polynomial with the given variable names.
pub struct Named<'a, C>(pub &'a Laurent<C>, pub &'a [&'a str]);

impl<C: Coefficient + fmt::Display> fmt::Display for Named<'_, C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.0.fmt_with(self.1, f)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn inverse_cancels() {
        let x = Laurent::<i64>::var(0, 2);
        let xi = Laurent::<i64>::var_pow(0, -1, 2);
        assert_eq!(x.mul(&xi).unwrap(), Laurent::one(2));
    }

    #[test]
    fn cancellation_drops_terms() {
        let x = Laurent::<i64>::var(1, 2);
        assert!(x.sub(&x).is_zero());
    }

    #[test]
    fn substitution() {
        // z ↦ a^2 b^-1
        let z = Laurent::<i64>::var_pow(2, 3, 3);
        let s = z.substitute_monomial(2, &vec![2, -1, 0]);
        assert_eq!(s, Laurent::term(1, vec![6, -3, 0]));
    }
}
