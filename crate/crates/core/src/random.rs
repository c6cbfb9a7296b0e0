//! Seeded generators for randomized checks.

use rand::Rng;

use crate::forms::{index_tuples, DifferentialForm};
use crate::poly::{Monomial, Polynomial};
use crate::scalar::Scalar;

/// Up to `max_terms` terms of total degree at most `max_degree`, integer
/// coefficients in `[-coeff_bound, coeff_bound]`.
pub fn random_polynomial<F: Scalar, R: Rng>(
    rng: &mut R,
    nvars: usize,
    max_degree: u32,
    max_terms: usize,
    coeff_bound: i64,
) -> Polynomial<F> {
    let count = rng.gen_range(0..=max_terms);
    let terms = (0..count).map(|_| {
        let budget = rng.gen_range(0..=max_degree);
        let mut e = vec![0u32; nvars];
        for _ in 0..budget {
            e[rng.gen_range(0..nvars)] += 1;
        }
        (Monomial::from_exponents(e), F::from_i64(rng.gen_range(-coeff_bound..=coeff_bound)))
    });
    Polynomial::from_terms(nvars, terms.collect::<Vec<_>>())
}

/// Random polynomial with no constant term.
pub fn random_polynomial_at_origin<F: Scalar, R: Rng>(
    rng: &mut R,
    nvars: usize,
    max_degree: u32,
    max_terms: usize,
    coeff_bound: i64,
) -> Polynomial<F> {
    let p: Polynomial<F> = random_polynomial(rng, nvars, max_degree, max_terms, coeff_bound);
    &p - &Polynomial::constant(nvars, p.constant_term())
}

/// Homogeneous `degree`-form with each coefficient drawn like
/// [`random_polynomial`].
pub fn random_form<F: Scalar, R: Rng>(
    rng: &mut R,
    nvars: usize,
    degree: usize,
    max_degree: u32,
    max_terms: usize,
    coeff_bound: i64,
) -> DifferentialForm<F> {
    let coeffs: Vec<_> = index_tuples(nvars, degree)
        .into_iter()
        .map(|t| (t, random_polynomial(rng, nvars, max_degree, max_terms, coeff_bound)))
        .collect();
    DifferentialForm::from_coefficients(nvars, degree, coeffs).expect("valid tuples")
}
