//! Singular loci, regularity in codimension `k`, hyperplane sections and a
//! checker for the Bertini-type statement: for a reduced hypersurface `X` in
//! `n >= 3` variables and a hyperplane `H` transversal to `X` and `Sing X`,
//! the section `X ∩ H` is reduced and `Sing(X ∩ H) = H ∩ Sing X`.

use std::fmt;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::conormal::Germ;
use crate::error::{Error, Result};
use crate::forms::Hyperplane;
use crate::groebner::Ideal;
use crate::poly::{MonomialOrder, Polynomial, PolynomialRing};
use crate::scalar::Scalar;

/// Determinant by cofactor expansion along the first row.
fn determinant<F: Scalar>(m: &[Vec<Polynomial<F>>], nvars: usize) -> Polynomial<F> {
    match m.len() {
        0 => Polynomial::one(nvars),
        1 => m[0][0].clone(),
        k => {
            let mut acc = Polynomial::zero(nvars);
            for col in 0..k {
                if m[0][col].is_zero() {
                    continue;
                }
                let minor: Vec<Vec<Polynomial<F>>> = m[1..]
                    .iter()
                    .map(|row| row.iter().enumerate().filter(|(c, _)| *c != col).map(|(_, p)| p.clone()).collect())
                    .collect();
                let term = &m[0][col] * &determinant(&minor, nvars);
                if col % 2 == 0 {
                    acc += &term;
                } else {
                    acc -= &term;
                }
            }
            acc
        }
    }
}

/// All `m x m` minors of an `m x n` matrix, columns chosen in lexicographic
/// order.
fn maximal_minors<F: Scalar>(rows: &[Vec<Polynomial<F>>], nvars: usize) -> Vec<Polynomial<F>> {
    let m = rows.len();
    let n = rows.first().map_or(0, Vec::len);
    crate::forms::index_tuples(n, m)
        .into_iter()
        .map(|cols| {
            let sub: Vec<Vec<Polynomial<F>>> =
                rows.iter().map(|r| cols.iter().map(|&c| r[c].clone()).collect()).collect();
            determinant(&sub, nvars)
        })
        .collect()
}

impl<F: Scalar> Germ<F> {
    /// Jacobian criterion ideal: the generators together with all maximal
    /// minors of the Jacobian matrix (just the partials for a hypersurface).
    /// Its zero set is `Sing X`.
    pub fn jacobian_ideal(&self) -> Result<&Ideal<F>> {
        if !self.is_complete_intersection() {
            return Err(Error::MissingFlag("complete_intersection"));
        }
        if let Some(j) = self.jacobian.get() {
            return Ok(j);
        }
        let n = self.nvars();
        let rows: Vec<Vec<Polynomial<F>>> = self.generators().iter().map(Polynomial::gradient).collect();
        let mut gens = self.generators().to_vec();
        gens.extend(maximal_minors(&rows, n));
        let ideal = Ideal::new(gens, MonomialOrder::Grevlex)?;
        Ok(self.jacobian.get_or_init(|| ideal))
    }

    /// Dimension of `Sing X`, `-1` when `X` is smooth.
    pub fn singular_dimension(&self) -> Result<i64> {
        Ok(self.jacobian_ideal()?.krull_dimension())
    }
}

pub fn jacobian_ideal<F: Scalar>(germ: &Germ<F>) -> Result<&Ideal<F>> {
    germ.jacobian_ideal()
}

/// `Sing X` has codimension greater than `k` in `X`.
pub fn regular_in_codimension<F: Scalar>(germ: &Germ<F>, k: i64) -> Result<bool> {
    let dim = germ.dimension();
    if k < 0 || k > dim {
        return Err(Error::Precondition(format!("codimension {k} outside 0..={dim}")));
    }
    Ok(germ.singular_dimension()? < dim - k)
}

/// Coordinates on `H`: the pivot coordinate `x_i` (first nonzero normal
/// entry) is solved for, the others are kept in order. Returns the images of
/// the ambient coordinates and the ring of `H`.
pub fn section_map<F: Scalar>(ring: &PolynomialRing, h: &Hyperplane) -> Result<(Vec<Polynomial<F>>, PolynomialRing)> {
    let n = ring.nvars();
    if h.nvars() != n {
        return Err(Error::DimensionMismatch { expected: n, found: h.nvars() });
    }
    let pivot = h.pivot();
    let sub_ring = ring.without(pivot)?;
    let normal: Vec<F> = h.normal().iter().map(F::from_bigint).collect();
    let mut images = Vec::with_capacity(n);
    let mut solved = Polynomial::zero(n - 1);
    for j in 0..n {
        if j == pivot {
            continue;
        }
        let k = if j < pivot { j } else { j - 1 };
        let coeff = -(normal[j].clone() / normal[pivot].clone());
        solved += &Polynomial::var(n - 1, k)?.scale(&coeff);
    }
    for j in 0..n {
        images.push(match j.cmp(&pivot) {
            std::cmp::Ordering::Equal => solved.clone(),
            std::cmp::Ordering::Less => Polynomial::var(n - 1, j)?,
            std::cmp::Ordering::Greater => Polynomial::var(n - 1, j - 1)?,
        });
    }
    Ok((images, sub_ring))
}

/// The hypersurface `X ∩ H` inside `H`.
pub fn hyperplane_section<F: Scalar>(germ: &Germ<F>, h: &Hyperplane) -> Result<Germ<F>> {
    let f = germ.require_hypersurface()?;
    if germ.nvars() < 3 {
        return Err(Error::Precondition("hyperplane sections need at least 3 variables".into()));
    }
    let (images, sub_ring) = section_map(germ.ring(), h)?;
    let g = f.substitute(&images)?;
    if g.is_zero() {
        return Err(Error::Precondition(format!("hyperplane {h} lies inside X")));
    }
    Germ::hypersurface(sub_ring, g)
}

/// A hypersurface `V(g)` in `d` variables is reduced iff its non-smooth
/// locus has codimension at least 2.
pub fn section_is_reduced<F: Scalar>(section: &Germ<F>) -> Result<bool> {
    section.require_hypersurface()?;
    Ok(section.singular_dimension()? <= section.nvars() as i64 - 2)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum BertiniVerdict {
    ConfirmsTheorem,
    /// The conclusion fails and a transversality defect explains why.
    TransversalityFails,
    /// The conclusion fails with no transversality defect found.
    Violation,
}

impl fmt::Display for BertiniVerdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            BertiniVerdict::ConfirmsTheorem => "ConfirmsTheorem",
            BertiniVerdict::TransversalityFails => "TransversalityFails",
            BertiniVerdict::Violation => "Violation",
        })
    }
}

#[derive(Clone, Debug)]
pub struct BertiniReport<F> {
    pub hyperplane: Hyperplane,
    /// Ring of `H` and the equation of the section; `None` when `H ⊆ X`.
    pub section: Option<(PolynomialRing, Polynomial<F>)>,
    pub section_reduced: bool,
    pub singular_loci_equal: bool,
    pub transversality_diagnostics: Vec<String>,
    pub verdict: BertiniVerdict,
}

fn radicals_equal<F: Scalar>(a: &Ideal<F>, b: &Ideal<F>) -> Result<bool> {
    for g in a.generators() {
        if !b.radical_contains(g)? {
            return Ok(false);
        }
    }
    for g in b.generators() {
        if !a.radical_contains(g)? {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Checks the conclusion of the Bertini statement for one hyperplane and
/// looks for transversality defects that would explain a failure:
///
/// * `H` lies in `X`;
/// * `H` contains a top-dimensional component of a positive-dimensional
///   `Sing X`;
/// * `H` is tangent to `X` at smooth points, i.e. the locus where `df` is
///   proportional to the normal of `H` is larger than `H ∩ Sing X`.
pub fn bertini_check<F: Scalar>(germ: &Germ<F>, h: &Hyperplane) -> Result<BertiniReport<F>> {
    let f = germ.require_hypersurface()?;
    let n = germ.nvars();
    if n < 3 {
        return Err(Error::Precondition("the Bertini check needs at least 3 variables".into()));
    }
    if h.nvars() != n {
        return Err(Error::DimensionMismatch { expected: n, found: h.nvars() });
    }
    let ell: Polynomial<F> = h.linear_form();
    let jac = germ.jacobian_ideal()?;
    let sing_dim = jac.krull_dimension();
    let sing_on_h = jac.plus(std::slice::from_ref(&ell))?;
    let mut diagnostics = Vec::new();

    let (images, sub_ring) = section_map(germ.ring(), h)?;
    let g = f.substitute(&images)?;
    if g.is_zero() {
        diagnostics.push("H is contained in X".to_string());
        return Ok(BertiniReport {
            hyperplane: h.clone(),
            section: None,
            section_reduced: false,
            singular_loci_equal: false,
            transversality_diagnostics: diagnostics,
            verdict: BertiniVerdict::TransversalityFails,
        });
    }
    let section = Germ::hypersurface(sub_ring.clone(), g.clone())?;
    let section_reduced = section_is_reduced(&section)?;
    let sing_section = section.jacobian_ideal()?;
    let restricted: Vec<Polynomial<F>> =
        jac.generators().iter().map(|p| p.substitute(&images)).collect::<Result<_>>()?;
    let sing_restricted = Ideal::new(restricted, MonomialOrder::Grevlex)?;
    let singular_loci_equal = radicals_equal(sing_section, &sing_restricted)?;

    let meet_dim = sing_on_h.krull_dimension();
    if sing_dim >= 1 && meet_dim >= sing_dim {
        diagnostics.push(format!(
            "H contains a component of Sing X (dim Sing X = {sing_dim}, dim H∩Sing X = {meet_dim})"
        ));
    }

    // tangency locus: f = ell = 0 and rank [grad f; normal] < 2
    let grad = f.gradient();
    let normal: Vec<F> = h.normal().iter().map(F::from_bigint).collect();
    let mut tangency_gens = vec![f.clone(), ell.clone()];
    for i in 0..n {
        for j in i + 1..n {
            let minor = &grad[i].scale(&normal[j]) - &grad[j].scale(&normal[i]);
            tangency_gens.push(minor);
        }
    }
    let tangency = Ideal::new(tangency_gens, MonomialOrder::Grevlex)?;
    let mut tangent_elsewhere = false;
    for p in sing_on_h.generators() {
        if !tangency.radical_contains(p)? {
            tangent_elsewhere = true;
            break;
        }
    }
    if tangent_elsewhere {
        diagnostics.push(format!(
            "H is tangent to X at smooth points (tangency locus of dimension {})",
            tangency.krull_dimension()
        ));
    }

    let verdict = if section_reduced && singular_loci_equal {
        BertiniVerdict::ConfirmsTheorem
    } else if !diagnostics.is_empty() {
        BertiniVerdict::TransversalityFails
    } else {
        BertiniVerdict::Violation
    };
    Ok(BertiniReport {
        hyperplane: h.clone(),
        section: Some((sub_ring, g)),
        section_reduced,
        singular_loci_equal,
        transversality_diagnostics: diagnostics,
        verdict,
    })
}

/// Deterministic hyperplane through the origin in `n` variables with integer
/// normal entries uniform in `[-bound, bound]`, redrawing the zero vector.
pub fn random_hyperplane(seed: u64, bound: u32, n: usize) -> Result<Hyperplane> {
    if bound == 0 {
        return Err(Error::Precondition("bound must be at least 1".into()));
    }
    if n == 0 {
        return Err(Error::Precondition("hyperplane in zero variables".into()));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let b = bound as i64;
    loop {
        let normal: Vec<i64> = (0..n).map(|_| rng.gen_range(-b..=b)).collect();
        if normal.iter().any(|&x| x != 0) {
            return Hyperplane::from_integers(&normal);
        }
    }
}

/// `trials` reports for hyperplanes drawn with seeds `seed, seed + 1, ...`.
pub fn bertini_trials<F: Scalar>(germ: &Germ<F>, seed: u64, bound: u32, trials: usize) -> Result<Vec<BertiniReport<F>>> {
    (0..trials as u64)
        .map(|i| bertini_check(germ, &random_hyperplane(seed.wrapping_add(i), bound, germ.nvars())?))
        .collect()
}

#[cfg(test)]
mod tests;
