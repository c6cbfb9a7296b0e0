//! Polynomial differential forms on affine space.
//!
//! A homogeneous `k`-form is stored as a map from strictly increasing index
//! tuples `(i1 < ... < ik)` (0-based variable positions) to polynomial
//! coefficients, so `x*dy^dz` over `(x, y, z)` is `{[1, 2]: x}`.

mod hyperplane;
mod vector_field;

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Neg, Sub};

pub use hyperplane::Hyperplane;
pub use vector_field::{form_to_vector_field, vector_field_to_form, volume_coefficient, VectorField};

use crate::error::{Error, Result};
use crate::parse;
use crate::poly::{display, Monomial, Polynomial, PolynomialRing};
use crate::scalar::Scalar;

/// Strictly increasing tuple of variable positions.
pub type IndexTuple = Vec<usize>;

#[derive(Clone, Debug, PartialEq)]
pub struct DifferentialForm<F> {
    nvars: usize,
    degree: usize,
    coeffs: BTreeMap<IndexTuple, Polynomial<F>>,
}

/// All `k`-element subsets of `0..n` as increasing tuples, in lexicographic
/// order. This is the coordinate order used whenever a `k`-form is viewed as
/// a vector of `C(n, k)` polynomials.
pub fn index_tuples(n: usize, k: usize) -> Vec<IndexTuple> {
    fn go(start: usize, n: usize, k: usize, cur: &mut Vec<usize>, out: &mut Vec<IndexTuple>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for i in start..n {
            if n - i < k - cur.len() {
                break;
            }
            cur.push(i);
            go(i + 1, n, k, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    if k <= n {
        go(0, n, k, &mut Vec::with_capacity(k), &mut out);
    }
    out
}

/// Sorts `indices`, returning the permutation sign, or `None` when an index
/// repeats (the wedge of the differentials is zero).
fn sort_with_sign(indices: &[usize]) -> Option<(IndexTuple, bool)> {
    let mut v = indices.to_vec();
    let mut negative = false;
    // insertion sort; tuples are short
    for i in 1..v.len() {
        let mut j = i;
        while j > 0 && v[j - 1] > v[j] {
            v.swap(j - 1, j);
            negative = !negative;
            j -= 1;
        }
    }
    if v.windows(2).any(|w| w[0] == w[1]) {
        None
    } else {
        Some((v, negative))
    }
}

/// Concatenation of two sorted tuples, with the sign of the shuffle.
fn merge(a: &[usize], b: &[usize]) -> Option<(IndexTuple, bool)> {
    let mut inversions = 0usize;
    let mut out = Vec::with_capacity(a.len() + b.len());
    let (mut i, mut j) = (0, 0);
    while i < a.len() || j < b.len() {
        if j == b.len() || (i < a.len() && a[i] < b[j]) {
            out.push(a[i]);
            i += 1;
        } else if i < a.len() && a[i] == b[j] {
            return None;
        } else {
            inversions += a.len() - i;
            out.push(b[j]);
            j += 1;
        }
    }
    Some((out, inversions % 2 == 1))
}

impl<F: Scalar> DifferentialForm<F> {
    pub fn zero(nvars: usize, degree: usize) -> Self {
        DifferentialForm { nvars, degree, coeffs: BTreeMap::new() }
    }

    /// A 0-form.
    pub fn from_polynomial(p: Polynomial<F>) -> Self {
        let mut w = Self::zero(p.nvars(), 0);
        w.add_coefficient(Vec::new(), p);
        w
    }

    /// `dx_i`.
    pub fn differential(nvars: usize, i: usize) -> Result<Self> {
        Self::from_term(vec![i], Polynomial::one(nvars))
    }

    /// `c * dx_{i1} ^ ... ^ dx_{ik}` for indices in any order; the sign of
    /// the sorting permutation goes into the coefficient, and a repeated
    /// index gives the zero form.
    pub fn from_term(indices: Vec<usize>, c: Polynomial<F>) -> Result<Self> {
        let n = c.nvars();
        if let Some(&bad) = indices.iter().find(|&&i| i >= n) {
            return Err(Error::IndexOutOfRange { index: bad, nvars: n });
        }
        let mut w = Self::zero(n, indices.len());
        if let Some((tuple, negative)) = sort_with_sign(&indices) {
            w.add_coefficient(tuple, if negative { -c } else { c });
        }
        Ok(w)
    }

    /// Builds a form from coefficients on already sorted tuples.
    pub fn from_coefficients(
        nvars: usize,
        degree: usize,
        coeffs: impl IntoIterator<Item = (IndexTuple, Polynomial<F>)>,
    ) -> Result<Self> {
        let mut w = Self::zero(nvars, degree);
        for (t, c) in coeffs {
            if t.len() != degree || t.windows(2).any(|p| p[0] >= p[1]) {
                return Err(Error::Precondition(format!("{t:?} is not an increasing {degree}-tuple")));
            }
            if let Some(&bad) = t.iter().find(|&&i| i >= nvars) {
                return Err(Error::IndexOutOfRange { index: bad, nvars });
            }
            if c.nvars() != nvars {
                return Err(Error::RingMismatch { left: nvars, right: c.nvars() });
            }
            w.add_coefficient(t, c);
        }
        Ok(w)
    }

    fn add_coefficient(&mut self, tuple: IndexTuple, c: Polynomial<F>) {
        if c.is_zero() {
            return;
        }
        use std::collections::btree_map::Entry;
        match self.coeffs.entry(tuple) {
            Entry::Vacant(v) => {
                v.insert(c);
            }
            Entry::Occupied(mut o) => {
                *o.get_mut() += &c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn coefficient(&self, tuple: &[usize]) -> Polynomial<F> {
        self.coeffs.get(tuple).cloned().unwrap_or_else(|| Polynomial::zero(self.nvars))
    }

    /// Nonzero coefficients in tuple order.
    pub fn coefficients(&self) -> impl Iterator<Item = (&IndexTuple, &Polynomial<F>)> {
        self.coeffs.iter()
    }

    /// Coefficient vector over [`index_tuples`]`(n, k)`, zeros included.
    pub fn coefficient_vector(&self) -> Vec<Polynomial<F>> {
        index_tuples(self.nvars, self.degree).iter().map(|t| self.coefficient(t)).collect()
    }

    /// The coefficient of a 0-form.
    pub fn as_polynomial(&self) -> Option<Polynomial<F>> {
        (self.degree == 0).then(|| self.coefficient(&[]))
    }

    pub fn mul_poly(&self, p: &Polynomial<F>) -> Self {
        let mut w = Self::zero(self.nvars, self.degree);
        for (t, c) in &self.coeffs {
            w.add_coefficient(t.clone(), c * p);
        }
        w
    }

    pub fn map_coefficients(&self, mut f: impl FnMut(&Polynomial<F>) -> Polynomial<F>) -> Self {
        let mut w = Self::zero(self.nvars, self.degree);
        for (t, c) in &self.coeffs {
            let image = f(c);
            w.nvars = image.nvars();
            w.add_coefficient(t.clone(), image);
        }
        w
    }

    pub fn wedge(&self, other: &Self) -> Result<Self> {
        if self.nvars != other.nvars {
            return Err(Error::RingMismatch { left: self.nvars, right: other.nvars });
        }
        let mut w = Self::zero(self.nvars, self.degree + other.degree);
        for (s, a) in &self.coeffs {
            for (t, b) in &other.coeffs {
                if let Some((u, negative)) = merge(s, t) {
                    let c = a * b;
                    w.add_coefficient(u, if negative { -c } else { c });
                }
            }
        }
        Ok(w)
    }

    /// Exterior derivative. Forms of top degree map to the zero form one
    /// degree up.
    pub fn exterior_derivative(&self) -> Self {
        let mut w = Self::zero(self.nvars, self.degree + 1);
        for (s, a) in &self.coeffs {
            for i in 0..self.nvars {
                if s.contains(&i) {
                    continue;
                }
                let da = a.partial_derivative(i).expect("index in range");
                if da.is_zero() {
                    continue;
                }
                let (u, negative) = merge(&[i], s).expect("i not in s");
                w.add_coefficient(u, if negative { -da } else { da });
            }
        }
        w
    }

    /// Coefficient-wise evaluation; the result has constant coefficients.
    pub fn evaluate(&self, point: &[F]) -> Result<Self> {
        let mut w = Self::zero(self.nvars, self.degree);
        for (t, c) in &self.coeffs {
            w.add_coefficient(t.clone(), Polynomial::constant(self.nvars, c.evaluate(point)?));
        }
        Ok(w)
    }

    pub fn vanishes_at(&self, point: &[F]) -> Result<bool> {
        Ok(self.evaluate(point)?.is_zero())
    }

    pub fn display<'a>(&'a self, ring: &'a PolynomialRing) -> FormDisplay<'a, F> {
        FormDisplay { form: self, ring: Some(ring) }
    }

    fn check_compatible(&self, other: &Self) {
        assert!(
            self.nvars == other.nvars && self.degree == other.degree,
            "cannot add a {}-form on {} variables to a {}-form on {} variables",
            self.degree,
            self.nvars,
            other.degree,
            other.nvars
        );
    }
}

impl<F: Scalar> Add for &DifferentialForm<F> {
    type Output = DifferentialForm<F>;
    fn add(self, rhs: &DifferentialForm<F>) -> DifferentialForm<F> {
        self.check_compatible(rhs);
        let mut w = self.clone();
        for (t, c) in &rhs.coeffs {
            w.add_coefficient(t.clone(), c.clone());
        }
        w
    }
}

impl<F: Scalar> Sub for &DifferentialForm<F> {
    type Output = DifferentialForm<F>;
    fn sub(self, rhs: &DifferentialForm<F>) -> DifferentialForm<F> {
        self + &(-rhs)
    }
}

impl<F: Scalar> Neg for &DifferentialForm<F> {
    type Output = DifferentialForm<F>;
    fn neg(self) -> DifferentialForm<F> {
        self.mul_poly(&-Polynomial::one(self.nvars))
    }
}

impl<F: Scalar> Add for DifferentialForm<F> {
    type Output = DifferentialForm<F>;
    fn add(self, rhs: DifferentialForm<F>) -> DifferentialForm<F> {
        &self + &rhs
    }
}

impl<F: Scalar> Sub for DifferentialForm<F> {
    type Output = DifferentialForm<F>;
    fn sub(self, rhs: DifferentialForm<F>) -> DifferentialForm<F> {
        &self - &rhs
    }
}

/// Exterior product of two homogeneous forms.
pub fn wedge<F: Scalar>(a: &DifferentialForm<F>, b: &DifferentialForm<F>) -> Result<DifferentialForm<F>> {
    a.wedge(b)
}

pub fn exterior_derivative<F: Scalar>(w: &DifferentialForm<F>) -> DifferentialForm<F> {
    w.exterior_derivative()
}

pub fn evaluate_form<F: Scalar>(w: &DifferentialForm<F>, point: &[F]) -> Result<DifferentialForm<F>> {
    w.evaluate(point)
}

/// `df` for a polynomial `f`.
pub fn differential_of<F: Scalar>(f: &Polynomial<F>) -> DifferentialForm<F> {
    DifferentialForm::from_polynomial(f.clone()).exterior_derivative()
}

/// Reads a form expression and splits it into homogeneous parts, lowest
/// degree first. Zero parts are dropped; the zero expression yields an
/// empty list.
pub fn parse_form<F: Scalar>(text: &str, ring: &PolynomialRing) -> Result<Vec<DifferentialForm<F>>> {
    Ok(parse::parse_expression(text, ring)?.into_values().filter(|w| !w.is_zero()).collect())
}

/// Like [`parse_form`] but insists on a single homogeneous degree. The zero
/// expression gives the zero form of degree `default_degree`.
pub fn parse_homogeneous_form<F: Scalar>(
    text: &str,
    ring: &PolynomialRing,
    default_degree: usize,
) -> Result<DifferentialForm<F>> {
    let mut parts = parse_form(text, ring)?;
    match parts.len() {
        0 => Ok(DifferentialForm::zero(ring.nvars(), default_degree)),
        1 => Ok(parts.pop().unwrap()),
        _ => Err(Error::Precondition(format!(
            "expected a homogeneous form, found parts of degrees {:?}",
            parts.iter().map(|w| w.degree()).collect::<Vec<_>>()
        ))),
    }
}

/// Polynomial primitive of a closed 1-form vanishing at the origin, from the
/// radial homotopy: a term `c*m*dx_i` with `deg m = d` contributes
/// `c*x_i*m/(d+1)`.
pub fn radial_potential<F: Scalar>(w: &DifferentialForm<F>) -> Result<Polynomial<F>> {
    if w.degree() != 1 {
        return Err(Error::WrongDegree { expected: 1, found: w.degree() });
    }
    if !w.exterior_derivative().is_zero() {
        return Err(Error::NotClosed);
    }
    let n = w.nvars();
    let mut g = Polynomial::zero(n);
    for (t, a) in w.coefficients() {
        let i = t[0];
        for (m, c) in a.terms() {
            let d = m.degree() as i64;
            let shifted = &Monomial::var_power(n, i, 1) * m;
            g.add_term(shifted, c.clone() / F::from_i64(d + 1));
        }
    }
    Ok(g)
}

pub struct FormDisplay<'a, F> {
    form: &'a DifferentialForm<F>,
    ring: Option<&'a PolynomialRing>,
}

impl<F: Scalar> fmt::Display for FormDisplay<'_, F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.form.degree == 0 {
            let p = self.form.coefficient(&[]);
            return match self.ring {
                Some(r) => write!(f, "{}", p.display(r)),
                None => write!(f, "{p}"),
            };
        }
        if self.form.is_zero() {
            return f.write_str("0");
        }
        for (k, (t, c)) in self.form.coeffs.iter().enumerate() {
            let diffs: Vec<String> =
                t.iter().map(|&i| format!("d{}", display::var_name(self.ring, i))).collect();
            let diffs = diffs.join("*");
            if c.len() == 1 {
                let (m, a) = c.terms().next().unwrap();
                match (k, a.is_negative()) {
                    (0, true) => f.write_str("-")?,
                    (0, false) => {}
                    (_, true) => f.write_str(" - ")?,
                    (_, false) => f.write_str(" + ")?,
                }
                if m.is_one() && a.abs().is_one() {
                    f.write_str(&diffs)?;
                } else {
                    display::write_unsigned_term(f, m, a, self.ring)?;
                    write!(f, "*{diffs}")?;
                }
            } else {
                if k > 0 {
                    f.write_str(" + ")?;
                }
                match self.ring {
                    Some(r) => write!(f, "({})*{diffs}", c.display(r))?,
                    None => write!(f, "({c})*{diffs}")?,
                }
            }
        }
        Ok(())
    }
}

impl<F: Scalar> fmt::Display for DifferentialForm<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        FormDisplay { form: self, ring: None }.fmt(f)
    }
}

#[cfg(test)]
mod tests;
