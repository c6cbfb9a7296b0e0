//! Exact computer algebra for conormal differential forms of affine germs.
//!
//! The building blocks are sparse polynomials over an exact field
//! ([`poly`]), Groebner bases for ideals and free-module submodules
//! ([`groebner`]), and polynomial differential forms ([`forms`]). On top of
//! them [`conormal`] decides whether a form vanishes on the tangent spaces
//! of a germ at its smooth points, and [`geometry`] handles singular loci and
//! hyperplane sections.
//!
//! All of it is generic over a [`Scalar`] field; the aliases below fix the
//! rationals, which is what every exact computation should use.

pub mod conormal;
pub mod error;
pub mod forms;
pub mod geometry;
pub mod groebner;
mod parse;
pub mod poly;
pub mod random;
pub mod scalar;

pub use conormal::{
    conormal_wedge, is_conormal, is_tangential, is_trivial_form, oracle_conormal_on_parametrization,
    splits_off_line, trivial_form_generators, vanishes_on_singular_locus, Germ, GermFlags,
    Parametrization, Status, Verdict, Witness,
};
pub use error::{Error, ParseError, Result};
pub use forms::{
    differential_of, evaluate_form, exterior_derivative, form_to_vector_field, index_tuples, parse_form,
    parse_homogeneous_form, radial_potential, vector_field_to_form, volume_coefficient, wedge, DifferentialForm, Hyperplane,
    VectorField,
};
pub use geometry::{
    bertini_check, bertini_trials, hyperplane_section, jacobian_ideal, random_hyperplane,
    regular_in_codimension, section_is_reduced, BertiniReport, BertiniVerdict,
};
pub use groebner::{
    buchberger, eliminate, ideal_membership, is_groebner_basis, krull_dimension, module_membership,
    radical_membership, reduce, s_polynomial, Ideal, ModuleElement, Submodule,
};
pub use parse::{parse_polynomial, parse_polynomial_list};
pub use poly::{Monomial, MonomialOrder, Polynomial, PolynomialRing};
pub use scalar::Scalar;

pub use num_bigint::BigInt;
pub use num_rational::BigRational;

/// Exact rational coefficients.
pub type Rational = BigRational;
pub type QPolynomial = Polynomial<Rational>;
pub type QForm = DifferentialForm<Rational>;
pub type QVectorField = VectorField<Rational>;
pub type QIdeal = Ideal<Rational>;
pub type QModuleElement = ModuleElement<Rational>;
pub type QGerm = Germ<Rational>;
pub type QVerdict = Verdict<Rational>;
pub type QParametrization = Parametrization<Rational>;
pub type QBertiniReport = BertiniReport<Rational>;
