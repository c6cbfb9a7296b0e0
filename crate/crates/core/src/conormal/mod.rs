//! Conormality, tangency and triviality decisions for germs at the origin.
//!
//! A form is conormal to `X` when it vanishes on the tangent spaces of `X`
//! at its smooth points. For a complete intersection `X = V(f_1..f_m)` this
//! is equivalent to `w ^ df_1 ^ ... ^ df_m` vanishing on `X`, which is what
//! [`is_conormal`] checks. Germs are represented by polynomial generators and
//! all membership questions are asked in the polynomial ring; see
//! [`Verdict`] for how that is reported.

mod parametrization;

use std::sync::OnceLock;

pub use parametrization::{oracle_conormal_on_parametrization, Parametrization};

use crate::error::{Error, Result};
use crate::forms::{differential_of, index_tuples, DifferentialForm, VectorField};
use crate::groebner::{Ideal, ModuleElement, Submodule};
use crate::poly::{MonomialOrder, Polynomial, PolynomialRing};
use crate::scalar::Scalar;

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct GermFlags {
    pub hypersurface: bool,
    pub complete_intersection: bool,
}

/// An embedded germ `X = V(f_1, ..., f_m)` at the origin of affine space.
///
/// The generators are expected to generate a radical ideal (the germ is
/// reduced); this is not checked, but decisions that would depend on it come
/// back as [`Status::NoCertificate`].
#[derive(Debug)]
pub struct Germ<F> {
    ring: PolynomialRing,
    generators: Vec<Polynomial<F>>,
    flags: GermFlags,
    ideal: Ideal<F>,
    pub(crate) jacobian: OnceLock<Ideal<F>>,
    trivial: Vec<OnceLock<Submodule<F>>>,
}

impl<F: Scalar> Clone for Germ<F> {
    fn clone(&self) -> Self {
        Germ {
            ring: self.ring.clone(),
            generators: self.generators.clone(),
            flags: self.flags,
            ideal: self.ideal.clone(),
            jacobian: self.jacobian.clone(),
            trivial: self.trivial.clone(),
        }
    }
}

impl<F: Scalar> Germ<F> {
    /// Validates the flags: a hypersurface has exactly one generator and is
    /// also a complete intersection; a complete intersection of `m`
    /// generators has dimension `n - m`.
    pub fn new(ring: PolynomialRing, generators: Vec<Polynomial<F>>, mut flags: GermFlags) -> Result<Self> {
        let n = ring.nvars();
        if generators.is_empty() {
            return Err(Error::InvalidGerm("no generators".into()));
        }
        if let Some(bad) = generators.iter().find(|g| g.nvars() != n) {
            return Err(Error::RingMismatch { left: n, right: bad.nvars() });
        }
        let origin = vec![F::zero(); n];
        for g in &generators {
            if !g.evaluate(&origin)?.is_zero() {
                return Err(Error::InvalidGerm(format!("generator {} does not vanish at the origin", g.display(&ring))));
            }
        }
        if flags.hypersurface {
            if generators.len() != 1 {
                return Err(Error::InvalidGerm(format!(
                    "a hypersurface needs exactly one generator, got {}",
                    generators.len()
                )));
            }
            flags.complete_intersection = true;
        }
        let ideal = Ideal::new(generators.clone(), MonomialOrder::Grevlex)?;
        if flags.complete_intersection {
            let expected = n as i64 - generators.len() as i64;
            let dim = ideal.krull_dimension();
            if dim != expected {
                return Err(Error::InvalidGerm(format!(
                    "not a complete intersection: dimension {dim}, expected {expected}"
                )));
            }
        }
        Ok(Germ {
            ring,
            generators,
            flags,
            ideal,
            jacobian: OnceLock::new(),
            trivial: (0..=n).map(|_| OnceLock::new()).collect(),
        })
    }

    pub fn hypersurface(ring: PolynomialRing, f: Polynomial<F>) -> Result<Self> {
        Self::new(ring, vec![f], GermFlags { hypersurface: true, complete_intersection: true })
    }

    pub fn complete_intersection(ring: PolynomialRing, generators: Vec<Polynomial<F>>) -> Result<Self> {
        Self::new(ring, generators, GermFlags { hypersurface: false, complete_intersection: true })
    }

    pub fn ring(&self) -> &PolynomialRing {
        &self.ring
    }

    pub fn nvars(&self) -> usize {
        self.ring.nvars()
    }

    pub fn generators(&self) -> &[Polynomial<F>] {
        &self.generators
    }

    pub fn flags(&self) -> GermFlags {
        self.flags
    }

    pub fn is_hypersurface(&self) -> bool {
        self.flags.hypersurface
    }

    pub fn is_complete_intersection(&self) -> bool {
        self.flags.complete_intersection
    }

    /// The ideal `I_X` generated by the generators.
    pub fn ideal(&self) -> &Ideal<F> {
        &self.ideal
    }

    pub fn dimension(&self) -> i64 {
        self.ideal.krull_dimension()
    }

    pub(crate) fn require_hypersurface(&self) -> Result<&Polynomial<F>> {
        if !self.flags.hypersurface {
            return Err(Error::MissingFlag("hypersurface"));
        }
        Ok(&self.generators[0])
    }

    fn check_nvars(&self, nvars: usize) -> Result<()> {
        if nvars != self.nvars() {
            return Err(Error::RingMismatch { left: self.nvars(), right: nvars });
        }
        Ok(())
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Status {
    CertifiedYes,
    CertifiedNo,
    /// Every test polynomial vanishes on the zero set, but some are not in
    /// the generator ideal; only possible when that ideal is not radical.
    NoCertificate,
}

/// What a verdict rests on. Each variant can be re-checked independently
/// with ideal or radical membership.
#[derive(Clone, Debug, PartialEq)]
pub enum Witness<F> {
    /// All of these lie in `I_X`.
    InIdeal(Vec<Polynomial<F>>),
    /// This one does not vanish on `V(I_X)`.
    OutsideRadical(Polynomial<F>),
    /// This one vanishes on `V(I_X)` but has the given nonzero normal form.
    OnlyInRadical { polynomial: Polynomial<F>, normal_form: Polynomial<F> },
}

#[derive(Clone, Debug, PartialEq)]
pub struct Verdict<F> {
    pub status: Status,
    pub witness: Witness<F>,
}

impl<F: Scalar> Verdict<F> {
    pub fn is_yes(&self) -> bool {
        self.status == Status::CertifiedYes
    }

    pub fn is_no(&self) -> bool {
        self.status == Status::CertifiedNo
    }

    /// Re-derives the verdict from its witness.
    pub fn verify(&self, ideal: &Ideal<F>) -> Result<bool> {
        Ok(match (&self.status, &self.witness) {
            (Status::CertifiedYes, Witness::InIdeal(ps)) => {
                for p in ps {
                    if !ideal.contains(p)? {
                        return Ok(false);
                    }
                }
                true
            }
            (Status::CertifiedNo, Witness::OutsideRadical(p)) => !ideal.radical_contains(p)?,
            (Status::NoCertificate, Witness::OnlyInRadical { polynomial, normal_form }) => {
                ideal.radical_contains(polynomial)?
                    && !normal_form.is_zero()
                    && ideal.normal_form(polynomial)? == *normal_form
            }
            _ => false,
        })
    }
}

/// Classifies "these polynomials vanish on `V(ideal)`".
pub(crate) fn decide<F: Scalar>(polys: Vec<Polynomial<F>>, ideal: &Ideal<F>) -> Result<Verdict<F>> {
    let mut outside_ideal = Vec::new();
    for p in &polys {
        let r = ideal.normal_form(p)?;
        if !r.is_zero() {
            outside_ideal.push((p, r));
        }
    }
    for (p, _) in &outside_ideal {
        if !ideal.radical_contains(p)? {
            return Ok(Verdict { status: Status::CertifiedNo, witness: Witness::OutsideRadical((*p).clone()) });
        }
    }
    Ok(match outside_ideal.into_iter().next() {
        Some((p, r)) => Verdict {
            status: Status::NoCertificate,
            witness: Witness::OnlyInRadical { polynomial: p.clone(), normal_form: r },
        },
        None => Verdict { status: Status::CertifiedYes, witness: Witness::InIdeal(polys) },
    })
}

/// `w ^ df_1 ^ ... ^ df_m`.
pub fn conormal_wedge<F: Scalar>(w: &DifferentialForm<F>, germ: &Germ<F>) -> Result<DifferentialForm<F>> {
    germ.check_nvars(w.nvars())?;
    let mut acc = w.clone();
    for f in germ.generators() {
        acc = acc.wedge(&differential_of(f))?;
    }
    Ok(acc)
}

/// Decides conormality of a homogeneous form on a complete intersection.
/// A 0-form is conormal iff it vanishes on `X`.
pub fn is_conormal<F: Scalar>(w: &DifferentialForm<F>, germ: &Germ<F>) -> Result<Verdict<F>> {
    if !germ.is_complete_intersection() {
        return Err(Error::MissingFlag("complete_intersection"));
    }
    germ.check_nvars(w.nvars())?;
    if w.degree() > germ.nvars() {
        return Err(Error::Precondition(format!("degree {} exceeds dimension {}", w.degree(), germ.nvars())));
    }
    let tests = if w.degree() == 0 {
        vec![w.coefficient(&[])]
    } else {
        conormal_wedge(w, germ)?.coefficients().map(|(_, c)| c.clone()).collect()
    };
    decide(tests, germ.ideal())
}

/// A vector field is tangent to `X` when it maps every generator into `I_X`
/// (up to the radical, see [`Verdict`]).
pub fn is_tangential<F: Scalar>(v: &VectorField<F>, germ: &Germ<F>) -> Result<Verdict<F>> {
    germ.check_nvars(v.nvars())?;
    let images = germ.generators().iter().map(|f| v.apply(f)).collect::<Result<Vec<_>>>()?;
    decide(images, germ.ideal())
}

/// Generators of the degree-`k` part of the differential ideal spanned by
/// `I_X`: every `f_j dx_S` and every `df_j ^ dx_T`. Zero and duplicate forms
/// are dropped.
pub fn trivial_form_generators<F: Scalar>(germ: &Germ<F>, k: usize) -> Result<Vec<DifferentialForm<F>>> {
    let n = germ.nvars();
    if k == 0 || k > n {
        return Err(Error::Precondition(format!("degree must be in 1..={n}, got {k}")));
    }
    let mut out: Vec<DifferentialForm<F>> = Vec::new();
    let mut push = |w: DifferentialForm<F>| {
        if !w.is_zero() && !out.contains(&w) {
            out.push(w);
        }
    };
    for f in germ.generators() {
        for s in index_tuples(n, k) {
            push(DifferentialForm::from_term(s, f.clone())?);
        }
        let df = differential_of(f);
        for t in index_tuples(n, k - 1) {
            push(df.wedge(&DifferentialForm::from_term(t, Polynomial::one(n))?)?);
        }
    }
    Ok(out)
}

fn trivial_submodule<F: Scalar>(germ: &Germ<F>, k: usize) -> Result<&Submodule<F>> {
    let n = germ.nvars();
    if let Some(m) = germ.trivial[k].get() {
        return Ok(m);
    }
    let rank = index_tuples(n, k).len();
    let gens = trivial_form_generators(germ, k)?
        .iter()
        .map(|w| ModuleElement::new(w.coefficient_vector()))
        .collect::<Result<Vec<_>>>()?;
    let module = Submodule::new(rank, n, gens, MonomialOrder::Grevlex)?;
    Ok(germ.trivial[k].get_or_init(|| module))
}

/// Whether `w` lies in the differential ideal generated by `I_X`, tested as
/// membership of its coefficient vector in the submodule spanned by
/// [`trivial_form_generators`].
pub fn is_trivial_form<F: Scalar>(w: &DifferentialForm<F>, germ: &Germ<F>) -> Result<bool> {
    germ.check_nvars(w.nvars())?;
    let k = w.degree();
    if k == 0 || k > germ.nvars() {
        return Err(Error::Precondition(format!("degree must be in 1..={}, got {k}", germ.nvars())));
    }
    if w.is_zero() {
        return Ok(true);
    }
    trivial_submodule(germ, k)?.contains(&ModuleElement::new(w.coefficient_vector())?)
}

/// Whether every coefficient of `w` vanishes on the singular locus of the
/// hypersurface `X`.
pub fn vanishes_on_singular_locus<F: Scalar>(w: &DifferentialForm<F>, germ: &Germ<F>) -> Result<bool> {
    germ.require_hypersurface()?;
    germ.check_nvars(w.nvars())?;
    let jac = germ.jacobian_ideal()?;
    for (_, c) in w.coefficients() {
        if !jac.radical_contains(c)? {
            return Ok(false);
        }
    }
    Ok(true)
}

/// A conormal `(n-1)`-form not vanishing at the origin splits a line off the
/// germ, `X = X' x (C, 0)`. Only this hypothesis is detected.
pub fn splits_off_line<F: Scalar>(w: &DifferentialForm<F>, germ: &Germ<F>) -> Result<bool> {
    let n = germ.nvars();
    if w.degree() + 1 != n {
        return Err(Error::WrongDegree { expected: n - 1, found: w.degree() });
    }
    Ok(is_conormal(w, germ)?.is_yes() && !w.vanishes_at(&vec![F::zero(); n])?)
}
