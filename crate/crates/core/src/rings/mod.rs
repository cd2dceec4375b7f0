//! The presented rings: BT¹ over ℍ, BT² as a two-level system and in flattened
//! form, the BU(2) image model, and module-basis enumeration.

pub mod basis;
pub mod bt1;
pub mod bt2;
pub mod bu2;

use std::fmt;

use crate::rewrite::{Coefficient, GeneratorSet, Monomial, Poly};

/// Writes `poly` with terms in decreasing monomial order.
pub(crate) fn fmt_poly<C: Coefficient + fmt::Display>(
    f: &mut fmt::Formatter<'_>,
    poly: &Poly<C>,
    gens: &GeneratorSet,
) -> fmt::Result {
    let mut terms: Vec<(&Monomial, &C)> = poly.terms().collect();
    terms.sort_by(|a, b| gens.compare(b.0, a.0));
    if terms.is_empty() {
        return write!(f, "0");
    }
    for (i, (m, c)) in terms.into_iter().enumerate() {
        let body = term_string(&c.to_string(), &gens.display_monomial(m));
        if i > 0 {
            match body.strip_prefix('-') {
                Some(rest) => write!(f, " - {rest}")?,
                None => write!(f, " + {body}")?,
            }
        } else {
            write!(f, "{body}")?;
        }
    }
    Ok(())
}

/// Joins a coefficient and a monomial, parenthesizing compound coefficients.
pub(crate) fn term_string(coeff: &str, mono: &str) -> String {
    let compound = coeff.contains(" + ") || coeff.contains(" - ");
    match (coeff, mono) {
        (c, "1") => {
            if compound {
                format!("({c})")
            } else {
                c.to_string()
            }
        }
        ("1", m) => m.to_string(),
        ("-1", m) => format!("-{m}"),
        (c, m) if compound => format!("({c})*{m}"),
        (c, m) => format!("{c}*{m}"),
    }
}
