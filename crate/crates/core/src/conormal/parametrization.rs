use super::Germ;
use crate::error::{Error, Result};
use crate::forms::{differential_of, DifferentialForm};
use crate::poly::{Polynomial, PolynomialRing};
use crate::scalar::Scalar;

/// A polynomial map `s -> (p_1(s), ..., p_n(s))` from parameter space onto
/// the germ, with `p(0) = 0`.
#[derive(Clone, Debug, PartialEq)]
pub struct Parametrization<F> {
    ring: PolynomialRing,
    components: Vec<Polynomial<F>>,
}

impl<F: Scalar> Parametrization<F> {
    /// Checks that the map sends the origin to the origin and every
    /// generator of `germ` to zero.
    pub fn new(germ: &Germ<F>, ring: PolynomialRing, components: Vec<Polynomial<F>>) -> Result<Self> {
        let p = Self::unchecked(ring, components)?;
        if p.components.len() != germ.nvars() {
            return Err(Error::DimensionMismatch { expected: germ.nvars(), found: p.components.len() });
        }
        for f in germ.generators() {
            let pulled = f.substitute(&p.components)?;
            if !pulled.is_zero() {
                return Err(Error::InvalidParametrization(format!(
                    "generator {} pulls back to {}",
                    f.display(germ.ring()),
                    pulled.display(&p.ring)
                )));
            }
        }
        Ok(p)
    }

    /// Only checks the ring and the base point; used for maps that are not
    /// tied to a particular germ.
    pub fn unchecked(ring: PolynomialRing, components: Vec<Polynomial<F>>) -> Result<Self> {
        let d = ring.nvars();
        if let Some(bad) = components.iter().find(|c| c.nvars() != d) {
            return Err(Error::RingMismatch { left: d, right: bad.nvars() });
        }
        let origin = vec![F::zero(); d];
        for c in &components {
            if !c.evaluate(&origin)?.is_zero() {
                return Err(Error::InvalidParametrization(format!(
                    "component {} does not vanish at the origin",
                    c.display(&ring)
                )));
            }
        }
        Ok(Parametrization { ring, components })
    }

    pub fn ring(&self) -> &PolynomialRing {
        &self.ring
    }

    pub fn components(&self) -> &[Polynomial<F>] {
        &self.components
    }

    /// Image of a parameter point.
    pub fn point(&self, s: &[F]) -> Result<Vec<F>> {
        self.components.iter().map(|c| c.evaluate(s)).collect()
    }

    /// Pullback of a homogeneous form: `x_j -> p_j`, `dx_j -> dp_j`.
    pub fn pullback(&self, w: &DifferentialForm<F>) -> Result<DifferentialForm<F>> {
        if w.nvars() != self.components.len() {
            return Err(Error::RingMismatch { left: self.components.len(), right: w.nvars() });
        }
        let d = self.ring.nvars();
        let dp: Vec<DifferentialForm<F>> = self.components.iter().map(differential_of).collect();
        let mut out = DifferentialForm::zero(d, w.degree());
        for (tuple, c) in w.coefficients() {
            let mut term = DifferentialForm::from_polynomial(c.substitute(&self.components)?);
            for &j in tuple {
                term = term.wedge(&dp[j])?;
            }
            out = &out + &term;
        }
        Ok(out)
    }
}

/// Direct tangent-space check: `w` is conormal on the image iff its pullback
/// along the parametrization is identically zero.
pub fn oracle_conormal_on_parametrization<F: Scalar>(
    w: &DifferentialForm<F>,
    p: &Parametrization<F>,
) -> Result<bool> {
    Ok(p.pullback(w)?.is_zero())
}
