use std::fmt;

use super::{Monomial, MonomialOrder, Polynomial, PolynomialRing};
use crate::scalar::Scalar;

/// Canonical text form of a polynomial: terms in descending grevlex order,
/// `*` between factors, `^` for powers. The output parses back to the same
/// polynomial.
pub struct PolyDisplay<'a, F> {
    poly: &'a Polynomial<F>,
    ring: Option<&'a PolynomialRing>,
}

impl<'a, F: Scalar> PolyDisplay<'a, F> {
    pub(crate) fn new(poly: &'a Polynomial<F>, ring: Option<&'a PolynomialRing>) -> Self {
        PolyDisplay { poly, ring }
    }
}

pub(crate) fn var_name(ring: Option<&PolynomialRing>, i: usize) -> String {
    match ring {
        Some(r) => r.name(i).to_string(),
        None => format!("x{}", i + 1),
    }
}

pub(crate) fn write_monomial(
    out: &mut impl fmt::Write,
    m: &Monomial,
    ring: Option<&PolynomialRing>,
) -> fmt::Result {
    let mut first = true;
    for (i, &e) in m.exponents().iter().enumerate() {
        if e == 0 {
            continue;
        }
        if !first {
            out.write_char('*')?;
        }
        first = false;
        out.write_str(&var_name(ring, i))?;
        if e > 1 {
            write!(out, "^{e}")?;
        }
    }
    Ok(())
}

/// Writes `|c| * m`, omitting a unit coefficient in front of a non-constant
/// monomial.
pub(crate) fn write_unsigned_term<F: Scalar>(
    out: &mut impl fmt::Write,
    m: &Monomial,
    c: &F,
    ring: Option<&PolynomialRing>,
) -> fmt::Result {
    let a = c.abs();
    if m.is_one() {
        return write!(out, "{a}");
    }
    if !a.is_one() {
        write!(out, "{a}*")?;
    }
    write_monomial(out, m, ring)
}

impl<F: Scalar> fmt::Display for PolyDisplay<'_, F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let terms = self.poly.sorted_terms(MonomialOrder::Grevlex);
        if terms.is_empty() {
            return f.write_str("0");
        }
        for (k, (m, c)) in terms.into_iter().enumerate() {
            match (k, c.is_negative()) {
                (0, true) => f.write_str("-")?,
                (0, false) => {}
                (_, true) => f.write_str(" - ")?,
                (_, false) => f.write_str(" + ")?,
            }
            write_unsigned_term(f, m, c, self.ring)?;
        }
        Ok(())
    }
}
