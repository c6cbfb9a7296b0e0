use std::cmp::Ordering;

use super::Monomial;

/// Admissible monomial orders. Variables compare in declaration order,
/// `x1 > x2 > ... > xn`.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash)]
pub enum MonomialOrder {
    Lex,
    #[default]
    Grevlex,
    /// Two blocks split before variable `k`: the first `k` variables are
    /// compared by grevlex, ties broken by grevlex on the rest. Any monomial
    /// involving the first block beats every monomial free of it, which is
    /// what elimination needs.
    Block(usize),
}

impl MonomialOrder {
    pub fn compare(&self, a: &Monomial, b: &Monomial) -> Ordering {
        let (a, b) = (a.exponents(), b.exponents());
        match *self {
            MonomialOrder::Lex => a.cmp(b),
            MonomialOrder::Grevlex => grevlex(a, b),
            MonomialOrder::Block(k) => {
                let k = k.min(a.len());
                grevlex(&a[..k], &b[..k]).then_with(|| grevlex(&a[k..], &b[k..]))
            }
        }
    }
}

fn grevlex(a: &[u32], b: &[u32]) -> Ordering {
    let da: u32 = a.iter().sum();
    let db: u32 = b.iter().sum();
    da.cmp(&db).then_with(|| {
        for (x, y) in a.iter().zip(b).rev() {
            if x != y {
                return y.cmp(x);
            }
        }
        Ordering::Equal
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn m(e: &[u32]) -> Monomial {
        Monomial::from_exponents(e.to_vec())
    }

    #[test]
    fn known_comparisons() {
        // x*z^2 vs y^3: grevlex prefers the one with smaller power of the last variable
        assert_eq!(MonomialOrder::Grevlex.compare(&m(&[1, 0, 2]), &m(&[0, 3, 0])), Ordering::Less);
        assert_eq!(MonomialOrder::Lex.compare(&m(&[1, 0, 2]), &m(&[0, 3, 0])), Ordering::Greater);
        // degree dominates in grevlex
        assert_eq!(MonomialOrder::Grevlex.compare(&m(&[1, 0, 0]), &m(&[0, 0, 2])), Ordering::Less);
        // block: anything with t beats anything without
        let t = m(&[1, 0, 0]);
        let big = m(&[0, 5, 5]);
        assert_eq!(MonomialOrder::Block(1).compare(&t, &big), Ordering::Greater);
    }

    fn mono3() -> impl Strategy<Value = Monomial> {
        proptest::collection::vec(0u32..4, 3).prop_map(Monomial::from_exponents)
    }

    fn order() -> impl Strategy<Value = MonomialOrder> {
        prop_oneof![
            Just(MonomialOrder::Lex),
            Just(MonomialOrder::Grevlex),
            (0usize..4).prop_map(MonomialOrder::Block)
        ]
    }

    proptest! {
        #[test]
        fn multiplicative_and_well_founded(a in mono3(), b in mono3(), c in mono3(), o in order()) {
            prop_assert_eq!(o.compare(&a, &b), o.compare(&(&a * &c), &(&b * &c)));
            prop_assert_ne!(o.compare(&a, &Monomial::one(3)), Ordering::Less);
            prop_assert_eq!(o.compare(&a, &b) == Ordering::Equal, a == b);
        }
    }
}
