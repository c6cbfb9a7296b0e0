//! Buchberger's algorithm over an abstract term space, shared by ideals
//! (terms are monomials) and submodules of free modules (terms are
//! monomial-position pairs).

use std::cmp::Ordering;
use std::collections::BTreeSet;
use std::fmt::Debug;

use crate::poly::{Monomial, MonomialOrder};
use crate::scalar::Scalar;

pub(crate) trait TermSpace {
    type Term: Clone + Eq + Debug;

    fn compare(&self, a: &Self::Term, b: &Self::Term) -> Ordering;
    /// `b / a` when `a` divides `b`.
    fn quotient(&self, b: &Self::Term, a: &Self::Term) -> Option<Monomial>;
    /// `None` when the two terms have no common multiple.
    fn lcm(&self, a: &Self::Term, b: &Self::Term) -> Option<Self::Term>;
    fn shift(&self, t: &Self::Term, m: &Monomial) -> Self::Term;
    /// Buchberger's first criterion: the pair reduces to zero for free.
    fn coprime(&self, a: &Self::Term, b: &Self::Term) -> bool;
}

pub(crate) struct Monomials(pub MonomialOrder);

impl TermSpace for Monomials {
    type Term = Monomial;

    fn compare(&self, a: &Monomial, b: &Monomial) -> Ordering {
        self.0.compare(a, b)
    }

    fn quotient(&self, b: &Monomial, a: &Monomial) -> Option<Monomial> {
        b.checked_div(a)
    }

    fn lcm(&self, a: &Monomial, b: &Monomial) -> Option<Monomial> {
        Some(a.lcm(b))
    }

    fn shift(&self, t: &Monomial, m: &Monomial) -> Monomial {
        t * m
    }

    fn coprime(&self, a: &Monomial, b: &Monomial) -> bool {
        a.is_coprime(b)
    }
}

/// Term-over-position: monomials first, then the lower position wins.
pub(crate) struct ModuleTerms(pub MonomialOrder);

impl TermSpace for ModuleTerms {
    type Term = (Monomial, usize);

    fn compare(&self, a: &Self::Term, b: &Self::Term) -> Ordering {
        self.0.compare(&a.0, &b.0).then_with(|| b.1.cmp(&a.1))
    }

    fn quotient(&self, b: &Self::Term, a: &Self::Term) -> Option<Monomial> {
        if a.1 == b.1 {
            b.0.checked_div(&a.0)
        } else {
            None
        }
    }

    fn lcm(&self, a: &Self::Term, b: &Self::Term) -> Option<Self::Term> {
        (a.1 == b.1).then(|| (a.0.lcm(&b.0), a.1))
    }

    fn shift(&self, t: &Self::Term, m: &Monomial) -> Self::Term {
        (&t.0 * m, t.1)
    }

    fn coprime(&self, _: &Self::Term, _: &Self::Term) -> bool {
        false
    }
}

/// Terms sorted ascending, so the leading term is last.
#[derive(Clone, Debug, PartialEq)]
pub(crate) struct Sparse<T, F> {
    pub terms: Vec<(T, F)>,
}

impl<T: Clone + Eq + Debug, F: Scalar> Sparse<T, F> {
    pub fn new<S: TermSpace<Term = T>>(space: &S, terms: impl IntoIterator<Item = (T, F)>) -> Self {
        let mut v: Vec<(T, F)> = terms.into_iter().filter(|(_, c)| !c.is_zero()).collect();
        v.sort_by(|a, b| space.compare(&a.0, &b.0));
        let mut out: Vec<(T, F)> = Vec::with_capacity(v.len());
        for (t, c) in v {
            match out.last_mut() {
                Some((last, acc)) if *last == t => {
                    *acc = acc.clone() + c;
                    if acc.is_zero() {
                        out.pop();
                    }
                }
                _ => out.push((t, c)),
            }
        }
        Sparse { terms: out }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn lead(&self) -> Option<&(T, F)> {
        self.terms.last()
    }

    pub fn monic(mut self) -> Self {
        if let Some((_, lc)) = self.terms.last() {
            let inv = F::one() / lc.clone();
            for (_, c) in &mut self.terms {
                *c = c.clone() * inv.clone();
            }
        }
        self
    }
}

/// `a - c * m * b`, both ascending; the result is ascending too since the
/// orders are multiplicative.
fn sub_mul<S: TermSpace, F: Scalar>(
    space: &S,
    a: &[(S::Term, F)],
    c: &F,
    m: &Monomial,
    b: &[(S::Term, F)],
) -> Vec<(S::Term, F)> {
    let mut out = Vec::with_capacity(a.len() + b.len());
    let mut bi = b.iter().map(|(t, x)| (space.shift(t, m), -(x.clone() * c.clone()))).peekable();
    let mut ai = a.iter().cloned().peekable();
    loop {
        let ord = match (ai.peek(), bi.peek()) {
            (Some(x), Some(y)) => space.compare(&x.0, &y.0),
            (Some(_), None) => Ordering::Less,
            (None, Some(_)) => Ordering::Greater,
            (None, None) => break,
        };
        match ord {
            Ordering::Less => out.push(ai.next().unwrap()),
            Ordering::Greater => out.push(bi.next().unwrap()),
            Ordering::Equal => {
                let (t, x) = ai.next().unwrap();
                let (_, y) = bi.next().unwrap();
                let s = x + y;
                if !s.is_zero() {
                    out.push((t, s));
                }
            }
        }
    }
    out
}

fn tail<T, F>(p: &Sparse<T, F>) -> &[(T, F)] {
    &p.terms[..p.terms.len().saturating_sub(1)]
}

/// Full reduction of `f` by `divisors` (nonzero). The remainder has no term
/// divisible by a leading term of a divisor.
pub(crate) fn normal_form<S: TermSpace, F: Scalar>(
    space: &S,
    f: &Sparse<S::Term, F>,
    divisors: &[Sparse<S::Term, F>],
) -> Sparse<S::Term, F> {
    let mut p = f.terms.clone();
    let mut rem_desc: Vec<(S::Term, F)> = Vec::new();
    while let Some((t, c)) = p.last() {
        let hit = divisors.iter().find_map(|g| {
            let (lt, lc) = g.lead().expect("nonzero divisor");
            space.quotient(t, lt).map(|q| (g, q, c.clone() / lc.clone()))
        });
        match hit {
            Some((g, q, coef)) => {
                let rest = &p[..p.len() - 1];
                p = sub_mul(space, rest, &coef, &q, tail(g));
            }
            None => rem_desc.push(p.pop().unwrap()),
        }
    }
    rem_desc.reverse();
    Sparse { terms: rem_desc }
}

/// S-vector of two nonzero elements with a common lead multiple.
pub(crate) fn s_vector<S: TermSpace, F: Scalar>(
    space: &S,
    f: &Sparse<S::Term, F>,
    g: &Sparse<S::Term, F>,
) -> Option<Sparse<S::Term, F>> {
    let (lf, cf) = f.lead()?;
    let (lg, cg) = g.lead()?;
    let l = space.lcm(lf, lg)?;
    let mf = space.quotient(&l, lf).expect("lcm divisible");
    let mg = space.quotient(&l, lg).expect("lcm divisible");
    // (1/cf) mf f - (1/cg) mg g, leading terms dropped
    let a: Vec<_> = tail(f).iter().map(|(t, x)| (space.shift(t, &mf), x.clone() / cf.clone())).collect();
    let terms = sub_mul(space, &a, &(F::one() / cg.clone()), &mg, tail(g));
    Some(Sparse { terms })
}

struct Pair<T> {
    i: usize,
    j: usize,
    lcm: T,
}

/// Reduced Groebner basis: monic, inter-reduced, sorted by ascending
/// leading term. Zero inputs are ignored; an all-zero input gives `[]`.
pub(crate) fn buchberger<S: TermSpace, F: Scalar>(
    space: &S,
    gens: Vec<Sparse<S::Term, F>>,
) -> Vec<Sparse<S::Term, F>> {
    let mut basis: Vec<Sparse<S::Term, F>> = Vec::new();
    let mut queue: Vec<Pair<S::Term>> = Vec::new();
    let mut pending: BTreeSet<(usize, usize)> = BTreeSet::new();

    let push = |g: Sparse<S::Term, F>,
                    basis: &mut Vec<Sparse<S::Term, F>>,
                    queue: &mut Vec<Pair<S::Term>>,
                    pending: &mut BTreeSet<(usize, usize)>| {
        let g = g.monic();
        let j = basis.len();
        let lt = g.lead().unwrap().0.clone();
        for (i, h) in basis.iter().enumerate() {
            if let Some(lcm) = space.lcm(&h.lead().unwrap().0, &lt) {
                queue.push(Pair { i, j, lcm });
                pending.insert((i, j));
            }
        }
        basis.push(g);
    };

    for g in gens.into_iter().filter(|g| !g.is_zero()) {
        push(g, &mut basis, &mut queue, &mut pending);
    }

    while !queue.is_empty() {
        // normal selection strategy: smallest lcm first
        let mut best = 0;
        for k in 1..queue.len() {
            if space.compare(&queue[k].lcm, &queue[best].lcm) == Ordering::Less {
                best = k;
            }
        }
        let Pair { i, j, lcm } = queue.swap_remove(best);
        pending.remove(&(i, j));

        let (li, lj) = (&basis[i].lead().unwrap().0, &basis[j].lead().unwrap().0);
        if space.coprime(li, lj) {
            continue;
        }
        let key = |a: usize, b: usize| (a.min(b), a.max(b));
        let chain = (0..basis.len()).any(|k| {
            k != i
                && k != j
                && space.quotient(&lcm, &basis[k].lead().unwrap().0).is_some()
                && !pending.contains(&key(i, k))
                && !pending.contains(&key(j, k))
        });
        if chain {
            continue;
        }
        let s = s_vector(space, &basis[i], &basis[j]).expect("pair has an lcm");
        let h = normal_form(space, &s, &basis);
        if !h.is_zero() {
            push(h, &mut basis, &mut queue, &mut pending);
        }
    }
    reduce_basis(space, basis)
}

/// Minimalizes and inter-reduces a Groebner basis.
pub(crate) fn reduce_basis<S: TermSpace, F: Scalar>(
    space: &S,
    mut basis: Vec<Sparse<S::Term, F>>,
) -> Vec<Sparse<S::Term, F>> {
    basis.sort_by(|a, b| space.compare(&a.lead().unwrap().0, &b.lead().unwrap().0));
    let mut minimal: Vec<Sparse<S::Term, F>> = Vec::new();
    for g in basis {
        let lt = &g.lead().unwrap().0;
        // ascending order: any divisor of lt was already seen
        if !minimal.iter().any(|h| space.quotient(lt, &h.lead().unwrap().0).is_some()) {
            minimal.push(g);
        }
    }
    let mut out = Vec::with_capacity(minimal.len());
    for k in 0..minimal.len() {
        let others: Vec<_> = minimal.iter().enumerate().filter(|(i, _)| *i != k).map(|(_, g)| g.clone()).collect();
        out.push(normal_form(space, &minimal[k], &others).monic());
    }
    out
}

/// Checks the Buchberger criterion directly: every S-vector reduces to 0.
pub(crate) fn is_groebner<S: TermSpace, F: Scalar>(space: &S, basis: &[Sparse<S::Term, F>]) -> bool {
    for i in 0..basis.len() {
        for j in i + 1..basis.len() {
            if let Some(s) = s_vector(space, &basis[i], &basis[j]) {
                if !normal_form(space, &s, basis).is_zero() {
                    return false;
                }
            }
        }
    }
    true
}
