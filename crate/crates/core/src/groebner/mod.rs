//! Groebner bases for polynomial ideals and for submodules of free modules.

mod engine;
mod module;

use std::sync::OnceLock;

pub use module::{module_membership, ModuleElement, Submodule};

use engine::{Monomials, Sparse};

use crate::error::{Error, Result};
use crate::poly::{Monomial, MonomialOrder, Polynomial};
use crate::scalar::Scalar;

fn to_sparse<F: Scalar>(p: &Polynomial<F>, order: MonomialOrder) -> Sparse<Monomial, F> {
    Sparse::new(&Monomials(order), p.terms().map(|(m, c)| (m.clone(), c.clone())))
}

fn from_sparse<F: Scalar>(nvars: usize, s: Sparse<Monomial, F>) -> Polynomial<F> {
    Polynomial::from_terms(nvars, s.terms)
}

fn same_ring<F: Scalar>(nvars: usize, polys: &[Polynomial<F>]) -> Result<()> {
    match polys.iter().find(|p| p.nvars() != nvars) {
        Some(p) => Err(Error::RingMismatch { left: nvars, right: p.nvars() }),
        None => Ok(()),
    }
}

/// An ideal given by generators, with its reduced Groebner basis computed on
/// first use and cached. The cache fill happens at most once, also under
/// concurrent readers.
#[derive(Clone, Debug)]
pub struct Ideal<F> {
    nvars: usize,
    generators: Vec<Polynomial<F>>,
    order: MonomialOrder,
    basis: OnceLock<Vec<Polynomial<F>>>,
}

impl<F: Scalar> Ideal<F> {
    pub fn new(generators: Vec<Polynomial<F>>, order: MonomialOrder) -> Result<Self> {
        let nvars = generators.first().ok_or(Error::NoGenerators)?.nvars();
        same_ring(nvars, &generators)?;
        Ok(Ideal { nvars, generators, order, basis: OnceLock::new() })
    }

    /// Grevlex ideal.
    pub fn from_generators(generators: Vec<Polynomial<F>>) -> Result<Self> {
        Self::new(generators, MonomialOrder::Grevlex)
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn generators(&self) -> &[Polynomial<F>] {
        &self.generators
    }

    pub fn order(&self) -> MonomialOrder {
        self.order
    }

    /// Reduced Groebner basis, monic, sorted by ascending leading term.
    /// Empty for the zero ideal.
    pub fn groebner_basis(&self) -> &[Polynomial<F>] {
        self.basis.get_or_init(|| buchberger(&self.generators, self.order))
    }

    pub fn is_basis_computed(&self) -> bool {
        self.basis.get().is_some()
    }

    fn check(&self, f: &Polynomial<F>) -> Result<()> {
        if f.nvars() != self.nvars {
            return Err(Error::RingMismatch { left: self.nvars, right: f.nvars() });
        }
        Ok(())
    }

    /// Normal form modulo the ideal.
    pub fn normal_form(&self, f: &Polynomial<F>) -> Result<Polynomial<F>> {
        self.check(f)?;
        reduce(f, self.groebner_basis(), self.order)
    }

    pub fn contains(&self, f: &Polynomial<F>) -> Result<bool> {
        Ok(self.normal_form(f)?.is_zero())
    }

    /// Whether the ideal is the whole ring (its zero set is empty).
    pub fn is_unit(&self) -> bool {
        self.groebner_basis().iter().any(Polynomial::is_constant)
    }

    /// `g` lies in the radical iff `1` lies in `I + (1 - y*g)` with `y` a new
    /// variable.
    pub fn radical_contains(&self, g: &Polynomial<F>) -> Result<bool> {
        self.check(g)?;
        if self.contains(g)? {
            return Ok(true);
        }
        let n = self.nvars;
        let y = Polynomial::var(n + 1, n)?;
        let mut gens: Vec<Polynomial<F>> = self.groebner_basis().iter().map(|b| b.extend(1)).collect();
        gens.push(&Polynomial::one(n + 1) - &(&y * &g.extend(1)));
        Ok(Ideal::new(gens, MonomialOrder::Grevlex)?.is_unit())
    }

    /// Dimension of the affine zero set, `-1` when it is empty. Computed as
    /// the size of a largest set of variables containing the support of no
    /// leading monomial.
    pub fn krull_dimension(&self) -> i64 {
        let basis = self.groebner_basis();
        if basis.iter().any(Polynomial::is_constant) {
            return -1;
        }
        let n = self.nvars;
        let leads: Vec<u64> = basis
            .iter()
            .map(|g| {
                let (m, _) = g.leading_term(self.order).expect("basis elements are nonzero");
                m.support().fold(0u64, |acc, i| acc | (1 << i))
            })
            .collect();
        assert!(n < 64, "too many variables for dimension computation");
        let mut best = 0;
        for set in 0u64..(1 << n) {
            let size = set.count_ones() as i64;
            if size > best && leads.iter().all(|&s| s & !set != 0) {
                best = size;
            }
        }
        best
    }

    /// `I + (extra)`, same order.
    pub fn plus(&self, extra: &[Polynomial<F>]) -> Result<Self> {
        same_ring(self.nvars, extra)?;
        let mut gens = self.generators.clone();
        gens.extend_from_slice(extra);
        Ideal::new(gens, self.order)
    }

    /// `I` intersected with the subring of the variables not in `drop`.
    /// The result lives in the ring of the kept variables, in their
    /// original relative order, with the grevlex order.
    pub fn eliminate(&self, drop: &[usize]) -> Result<Self> {
        let n = self.nvars;
        if let Some(&bad) = drop.iter().find(|&&i| i >= n) {
            return Err(Error::IndexOutOfRange { index: bad, nvars: n });
        }
        let dropped: Vec<usize> = (0..n).filter(|i| drop.contains(i)).collect();
        let kept: Vec<usize> = (0..n).filter(|i| !drop.contains(i)).collect();
        if kept.is_empty() {
            return Err(Error::NothingLeft);
        }
        let k = dropped.len();
        let mut map = vec![0; n];
        for (new, &old) in dropped.iter().chain(&kept).enumerate() {
            map[old] = new;
        }
        let moved: Vec<Polynomial<F>> =
            self.generators.iter().map(|g| g.rename(&map, n)).collect::<Result<_>>()?;
        let basis = buchberger(&moved, MonomialOrder::Block(k));
        let tail: Vec<usize> = (k..n).collect();
        let mut gens: Vec<Polynomial<F>> = basis
            .iter()
            .filter(|g| (0..k).all(|i| !g.depends_on(i)))
            .map(|g| g.restrict(&tail))
            .collect::<Result<_>>()?;
        if gens.is_empty() {
            gens.push(Polynomial::zero(kept.len()));
        }
        Ideal::new(gens, MonomialOrder::Grevlex)
    }
}

/// Normal form of `f` by the division algorithm against `divisors`. When
/// `divisors` is a Groebner basis the result is canonical.
pub fn reduce<F: Scalar>(f: &Polynomial<F>, divisors: &[Polynomial<F>], order: MonomialOrder) -> Result<Polynomial<F>> {
    same_ring(f.nvars(), divisors)?;
    let space = Monomials(order);
    let ds: Vec<_> = divisors.iter().filter(|g| !g.is_zero()).map(|g| to_sparse(g, order)).collect();
    Ok(from_sparse(f.nvars(), engine::normal_form(&space, &to_sparse(f, order), &ds)))
}

/// Reduced Groebner basis of the ideal generated by `gens`.
pub fn buchberger<F: Scalar>(gens: &[Polynomial<F>], order: MonomialOrder) -> Vec<Polynomial<F>> {
    let Some(first) = gens.first() else { return Vec::new() };
    let nvars = first.nvars();
    let space = Monomials(order);
    engine::buchberger(&space, gens.iter().map(|g| to_sparse(g, order)).collect())
        .into_iter()
        .map(|s| from_sparse(nvars, s))
        .collect()
}

/// The S-polynomial, normalized by the leading coefficients.
pub fn s_polynomial<F: Scalar>(f: &Polynomial<F>, g: &Polynomial<F>, order: MonomialOrder) -> Polynomial<F> {
    let space = Monomials(order);
    match engine::s_vector(&space, &to_sparse(f, order), &to_sparse(g, order)) {
        Some(s) => from_sparse(f.nvars(), s),
        None => Polynomial::zero(f.nvars()),
    }
}

/// Whether every S-polynomial of `basis` reduces to zero modulo `basis`.
pub fn is_groebner_basis<F: Scalar>(basis: &[Polynomial<F>], order: MonomialOrder) -> bool {
    let space = Monomials(order);
    let sparse: Vec<_> = basis.iter().filter(|g| !g.is_zero()).map(|g| to_sparse(g, order)).collect();
    engine::is_groebner(&space, &sparse)
}

pub fn ideal_membership<F: Scalar>(f: &Polynomial<F>, ideal: &Ideal<F>) -> Result<bool> {
    ideal.contains(f)
}

pub fn radical_membership<F: Scalar>(g: &Polynomial<F>, ideal: &Ideal<F>) -> Result<bool> {
    ideal.radical_contains(g)
}

pub fn eliminate<F: Scalar>(ideal: &Ideal<F>, drop: &[usize]) -> Result<Ideal<F>> {
    ideal.eliminate(drop)
}

pub fn krull_dimension<F: Scalar>(ideal: &Ideal<F>) -> i64 {
    ideal.krull_dimension()
}
