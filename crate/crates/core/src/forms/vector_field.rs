use std::fmt;

use super::DifferentialForm;
use crate::error::{Error, Result};
use crate::poly::{Polynomial, PolynomialRing};
use crate::scalar::Scalar;

/// `sum V_i * d/dx_i` with polynomial components.
#[derive(Clone, Debug, PartialEq)]
pub struct VectorField<F> {
    components: Vec<Polynomial<F>>,
}

impl<F: Scalar> VectorField<F> {
    pub fn new(components: Vec<Polynomial<F>>) -> Result<Self> {
        let n = components.len();
        if n == 0 {
            return Err(Error::InvalidRing("vector field with no components".into()));
        }
        if let Some(bad) = components.iter().find(|p| p.nvars() != n) {
            return Err(Error::DimensionMismatch { expected: n, found: bad.nvars() });
        }
        Ok(VectorField { components })
    }

    pub fn nvars(&self) -> usize {
        self.components.len()
    }

    pub fn components(&self) -> &[Polynomial<F>] {
        &self.components
    }

    /// The derivation `g -> sum V_i * dg/dx_i`.
    pub fn apply(&self, g: &Polynomial<F>) -> Result<Polynomial<F>> {
        if g.nvars() != self.nvars() {
            return Err(Error::RingMismatch { left: self.nvars(), right: g.nvars() });
        }
        let mut out = Polynomial::zero(self.nvars());
        for (i, v) in self.components.iter().enumerate() {
            out += &(v * &g.partial_derivative(i)?);
        }
        Ok(out)
    }

    pub fn display<'a>(&'a self, ring: &'a PolynomialRing) -> impl fmt::Display + 'a {
        struct D<'a, F>(&'a VectorField<F>, &'a PolynomialRing);
        impl<F: Scalar> fmt::Display for D<'_, F> {
            fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
                let parts: Vec<String> =
                    self.0.components.iter().map(|c| c.display(self.1).to_string()).collect();
                write!(f, "({})", parts.join(", "))
            }
        }
        D(self, ring)
    }
}

/// Sign relating the coefficient of `dx_1^..^(omit dx_i)^..^dx_n` to the
/// `i`-th vector field component under the volume form `dx_1^...^dx_n -> 1`.
fn omission_sign(n: usize, i: usize) -> bool {
    (n - 1 - i) % 2 == 1
}

fn omitting(n: usize, i: usize) -> Vec<usize> {
    (0..n).filter(|&j| j != i).collect()
}

/// The isomorphism from `(n-1)`-forms to vector fields characterised by
/// `w ^ dg = V(g) * dx_1^...^dx_n` for every polynomial `g`.
pub fn form_to_vector_field<F: Scalar>(w: &DifferentialForm<F>) -> Result<VectorField<F>> {
    let n = w.nvars();
    if w.degree() + 1 != n {
        return Err(Error::WrongDegree { expected: n - 1, found: w.degree() });
    }
    let components = (0..n)
        .map(|i| {
            let a = w.coefficient(&omitting(n, i));
            if omission_sign(n, i) {
                -a
            } else {
                a
            }
        })
        .collect();
    VectorField::new(components)
}

/// Inverse of [`form_to_vector_field`].
pub fn vector_field_to_form<F: Scalar>(v: &VectorField<F>) -> DifferentialForm<F> {
    let n = v.nvars();
    DifferentialForm::from_coefficients(
        n,
        n - 1,
        v.components.iter().enumerate().map(|(i, c)| {
            (omitting(n, i), if omission_sign(n, i) { -c } else { c.clone() })
        }),
    )
    .expect("tuples are increasing")
}

/// Coefficient of `dx_1^...^dx_n` in a top-degree form.
pub fn volume_coefficient<F: Scalar>(w: &DifferentialForm<F>) -> Result<Polynomial<F>> {
    let n = w.nvars();
    if w.degree() != n {
        return Err(Error::WrongDegree { expected: n, found: w.degree() });
    }
    Ok(w.coefficient(&(0..n).collect::<Vec<_>>()))
}
