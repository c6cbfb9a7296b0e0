use std::sync::OnceLock;

use super::engine::{self, ModuleTerms, Sparse};
use crate::error::{Error, Result};
use crate::poly::{Monomial, MonomialOrder, Polynomial};
use crate::scalar::Scalar;

/// An element of the free module of rank `r` over a polynomial ring.
#[derive(Clone, Debug, PartialEq)]
pub struct ModuleElement<F> {
    components: Vec<Polynomial<F>>,
}

impl<F: Scalar> ModuleElement<F> {
    pub fn new(components: Vec<Polynomial<F>>) -> Result<Self> {
        let first = components.first().ok_or_else(|| Error::Precondition("rank 0 module element".into()))?;
        let n = first.nvars();
        if let Some(bad) = components.iter().find(|p| p.nvars() != n) {
            return Err(Error::RingMismatch { left: n, right: bad.nvars() });
        }
        Ok(ModuleElement { components })
    }

    /// `p * e_i` in rank `rank`.
    pub fn unit(rank: usize, i: usize, p: Polynomial<F>) -> Result<Self> {
        if i >= rank {
            return Err(Error::IndexOutOfRange { index: i, nvars: rank });
        }
        let n = p.nvars();
        let mut comps = vec![Polynomial::zero(n); rank];
        comps[i] = p;
        Self::new(comps)
    }

    pub fn rank(&self) -> usize {
        self.components.len()
    }

    pub fn nvars(&self) -> usize {
        self.components[0].nvars()
    }

    pub fn components(&self) -> &[Polynomial<F>] {
        &self.components
    }

    pub fn is_zero(&self) -> bool {
        self.components.iter().all(Polynomial::is_zero)
    }

    fn to_sparse(&self, space: &ModuleTerms) -> Sparse<(Monomial, usize), F> {
        Sparse::new(
            space,
            self.components
                .iter()
                .enumerate()
                .flat_map(|(i, p)| p.terms().map(move |(m, c)| ((m.clone(), i), c.clone()))),
        )
    }

    fn from_sparse(rank: usize, nvars: usize, s: &Sparse<(Monomial, usize), F>) -> Self {
        let mut comps = vec![Vec::new(); rank];
        for ((m, i), c) in &s.terms {
            comps[*i].push((m.clone(), c.clone()));
        }
        ModuleElement { components: comps.into_iter().map(|t| Polynomial::from_terms(nvars, t)).collect() }
    }
}

/// Submodule of a free module, with a lazily computed Groebner basis under
/// term-over-position.
#[derive(Clone, Debug)]
pub struct Submodule<F> {
    rank: usize,
    nvars: usize,
    generators: Vec<ModuleElement<F>>,
    order: MonomialOrder,
    basis: OnceLock<Vec<Sparse<(Monomial, usize), F>>>,
}

impl<F: Scalar> Submodule<F> {
    pub fn new(rank: usize, nvars: usize, generators: Vec<ModuleElement<F>>, order: MonomialOrder) -> Result<Self> {
        for g in &generators {
            if g.rank() != rank {
                return Err(Error::RankMismatch { left: rank, right: g.rank() });
            }
            if g.nvars() != nvars {
                return Err(Error::RingMismatch { left: nvars, right: g.nvars() });
            }
        }
        Ok(Submodule { rank, nvars, generators, order, basis: OnceLock::new() })
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn generators(&self) -> &[ModuleElement<F>] {
        &self.generators
    }

    fn space(&self) -> ModuleTerms {
        ModuleTerms(self.order)
    }

    fn basis(&self) -> &[Sparse<(Monomial, usize), F>] {
        self.basis.get_or_init(|| {
            let space = self.space();
            engine::buchberger(&space, self.generators.iter().map(|g| g.to_sparse(&space)).collect())
        })
    }

    pub fn groebner_basis(&self) -> Vec<ModuleElement<F>> {
        self.basis().iter().map(|s| ModuleElement::from_sparse(self.rank, self.nvars, s)).collect()
    }

    pub fn is_groebner_basis_valid(&self) -> bool {
        engine::is_groebner(&self.space(), self.basis())
    }

    fn check(&self, v: &ModuleElement<F>) -> Result<()> {
        if v.rank() != self.rank {
            return Err(Error::RankMismatch { left: self.rank, right: v.rank() });
        }
        if v.nvars() != self.nvars {
            return Err(Error::RingMismatch { left: self.nvars, right: v.nvars() });
        }
        Ok(())
    }

    pub fn normal_form(&self, v: &ModuleElement<F>) -> Result<ModuleElement<F>> {
        self.check(v)?;
        let space = self.space();
        let r = engine::normal_form(&space, &v.to_sparse(&space), self.basis());
        Ok(ModuleElement::from_sparse(self.rank, self.nvars, &r))
    }

    pub fn contains(&self, v: &ModuleElement<F>) -> Result<bool> {
        Ok(self.normal_form(v)?.is_zero())
    }
}

/// Whether `v` lies in the submodule generated by `gens`.
pub fn module_membership<F: Scalar>(
    v: &ModuleElement<F>,
    gens: &[ModuleElement<F>],
    order: MonomialOrder,
) -> Result<bool> {
    Submodule::new(v.rank(), v.nvars(), gens.to_vec(), order)?.contains(v)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::parse::parse_polynomial;
    use crate::poly::PolynomialRing;
    use num_rational::BigRational;

    type Q = BigRational;

    fn ring() -> PolynomialRing {
        PolynomialRing::new(["x", "y", "z"]).unwrap()
    }

    fn p(s: &str) -> Polynomial<Q> {
        parse_polynomial(s, &ring()).unwrap()
    }

    fn elem(parts: &[&str]) -> ModuleElement<Q> {
        ModuleElement::new(parts.iter().map(|s| p(s)).collect()).unwrap()
    }

    #[test]
    fn multiples_of_a_generator_are_members() {
        let f = "z^2 - x*y^2";
        // f e1 and f (e1 + e2) generate f e1, f e2
        let gens = vec![elem(&[f, "0"]), elem(&[f, f])];
        assert!(module_membership(&elem(&[f, "0"]), &gens, MonomialOrder::Grevlex).unwrap());
        assert!(module_membership(&elem(&["0", f]), &gens, MonomialOrder::Grevlex).unwrap());
        assert!(module_membership(&elem(&["x*(z^2 - x*y^2)", "y*(z^2 - x*y^2)"]), &gens, MonomialOrder::Grevlex).unwrap());
    }

    #[test]
    fn unit_vector_not_in_non_unit_multiple() {
        let gens = vec![elem(&["x^3 - y*z", "0"])];
        assert!(!module_membership(&elem(&["1", "0"]), &gens, MonomialOrder::Grevlex).unwrap());
        assert!(!module_membership(&elem(&["0", "x^3 - y*z"]), &gens, MonomialOrder::Grevlex).unwrap());
    }

    #[test]
    fn syzygy_mixing_positions() {
        // x*(y, -x) + z*(z, 0)
        let gens = vec![elem(&["y", "-x"]), elem(&["z", "0"])];
        let sub = Submodule::new(2, 3, gens, MonomialOrder::Grevlex).unwrap();
        assert!(sub.contains(&elem(&["x*y + z^2", "-x^2"])).unwrap());
        assert!(!sub.contains(&elem(&["x", "0"])).unwrap());
        assert!(sub.is_groebner_basis_valid());
    }

    #[test]
    fn rank_mismatch_rejected() {
        let gens = vec![elem(&["x"])];
        assert!(matches!(
            module_membership(&elem(&["x", "y"]), &gens, MonomialOrder::Grevlex),
            Err(Error::RankMismatch { .. })
        ));
    }
}
