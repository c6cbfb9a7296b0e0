use num_rational::BigRational;
use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use super::*;
use crate::parse::parse_polynomial;
use crate::random::{random_form, random_polynomial, random_polynomial_at_origin};

type Q = BigRational;

fn xyz() -> PolynomialRing {
    PolynomialRing::new(["x", "y", "z"]).unwrap()
}

fn p(s: &str) -> Polynomial<Q> {
    parse_polynomial(s, &xyz()).unwrap()
}

fn form(s: &str) -> DifferentialForm<Q> {
    parse_homogeneous_form(s, &xyz(), 0).unwrap()
}

fn q(n: i64) -> Q {
    Q::from_i64(n)
}

#[test]
fn parses_the_cusp_two_form() {
    let w = form("x*dy*dz + 3*z*dx*dy");
    assert_eq!(w.degree(), 2);
    assert_eq!(w.coefficient(&[1, 2]), p("x"));
    assert_eq!(w.coefficient(&[0, 1]), p("3*z"));
    assert_eq!(w.coefficients().count(), 2);
}

#[test]
fn parser_normalizes_signs_and_repeats() {
    let w = form("y*dz*dx");
    assert_eq!(w.coefficient(&[0, 2]), p("-y"));
    assert!(parse_form::<Q>("x*dx*dx", &xyz()).unwrap().is_empty());
    let parts = parse_form::<Q>("x + dx - (x + 1)*dy + dx*dy*dz", &xyz()).unwrap();
    assert_eq!(parts.iter().map(|w| w.degree()).collect::<Vec<_>>(), vec![0, 1, 3]);
    assert!(parse_homogeneous_form::<Q>("x + dx", &xyz(), 0).is_err());
    assert!(parse_form::<Q>("dx^2", &xyz()).is_err());
    assert_eq!(form("(dx + dy)*(dx - dy)"), form("-2*dx*dy"));
}

#[test]
fn printing_round_trips() {
    let r = xyz();
    for src in ["x*dy*dz + 3*z*dx*dy", "y*z*dx + 2*x*z*dy - 2*x*y*dz", "(x + 1)*dx*dy - dy*dz", "dx", "0", "x^2 - 1/2"] {
        let w = form(src);
        let printed = w.display(&r).to_string();
        assert_eq!(form(&printed), w, "{src} -> {printed}");
    }
    assert_eq!(form("y*dz*dx").display(&r).to_string(), "-y*dx*dz");
}

#[test]
fn wedge_examples() {
    let w = form("x*dy*dz + 3*z*dx*dy");
    let df = differential_of(&p("x^3 - y*z"));
    let eta = wedge(&w, &df).unwrap();
    assert_eq!(eta, DifferentialForm::from_term(vec![0, 1, 2], p("3*x^3 - 3*y*z")).unwrap());
    assert!(form("dx").wedge(&form("dx")).unwrap().is_zero());
    let f = form("x^2 + y");
    assert_eq!(f.wedge(&w).unwrap(), w.mul_poly(&p("x^2 + y")));
    // too many differentials
    let top = form("dx*dy*dz");
    let w4 = top.wedge(&form("dx")).unwrap();
    assert_eq!(w4.degree(), 4);
    assert!(w4.is_zero());
}

#[test]
fn derivative_examples() {
    assert_eq!(differential_of(&p("x^3 - y*z")), form("3*x^2*dx - z*dy - y*dz"));
    assert!(differential_of(&p("5")).is_zero());
    assert_eq!(exterior_derivative(&form("x*dy")), form("dx*dy"));
    assert!(exterior_derivative(&form("x*dx*dy*dz")).is_zero());
}

#[test]
fn evaluation_examples() {
    let w1 = form("y*z*dx + 2*x*z*dy - 2*x*y*dz");
    assert!(evaluate_form(&w1, &[q(5), q(0), q(0)]).unwrap().is_zero());
    assert!(!w1.vanishes_at(&[q(1), q(1), q(1)]).unwrap());
    assert_eq!(evaluate_form(&form("dx"), &[q(3), q(-1), q(7)]).unwrap(), form("dx"));
    assert!(form("x*dy").vanishes_at(&[q(0), q(0), q(0)]).unwrap());
    assert!(evaluate_form(&w1, &[q(0)]).is_err());
}

#[test]
fn vector_field_examples() {
    let w = form("y*dx*dz - z*dx*dy");
    let v = form_to_vector_field(&w).unwrap();
    assert_eq!(v.components(), &[p("0"), p("-y"), p("-z")]);
    let f = p("z^2 - x*y^2");
    assert_eq!(v.apply(&f).unwrap(), f.scale(&q(-2)));
    // omitting the last differential gives d/dx_n
    let unit = form("dx*dy");
    assert_eq!(form_to_vector_field(&unit).unwrap().components(), &[p("0"), p("0"), p("1")]);
    assert_eq!(form_to_vector_field(&form("dx")), Err(Error::WrongDegree { expected: 2, found: 1 }));
}

#[test]
fn vector_field_round_trip() {
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    for _ in 0..20 {
        let w: DifferentialForm<Q> = random_form(&mut rng, 3, 2, 3, 3, 5);
        let v = form_to_vector_field(&w).unwrap();
        assert_eq!(vector_field_to_form(&v), w);
    }
}

#[test]
fn potential_examples() {
    let h = p("x^4 - x*y*z");
    assert_eq!(radial_potential(&differential_of(&h)).unwrap(), h);
    assert_eq!(radial_potential(&form("dx")).unwrap(), p("x"));
    assert_eq!(radial_potential(&form("y*dx - x*dy")), Err(Error::NotClosed));
    assert_eq!(radial_potential(&form("dx*dy")), Err(Error::WrongDegree { expected: 1, found: 2 }));
}

#[test]
fn d_map_identity_in_three_and_four_variables() {
    let mut rng = ChaCha8Rng::seed_from_u64(3);
    for n in [3usize, 4] {
        for _ in 0..50 {
            let w: DifferentialForm<Q> = random_form(&mut rng, n, n - 1, 2, 3, 4);
            let g: Polynomial<Q> = random_polynomial(&mut rng, n, 3, 4, 4);
            let lhs = volume_coefficient(&w.wedge(&differential_of(&g)).unwrap()).unwrap();
            let rhs = form_to_vector_field(&w).unwrap().apply(&g).unwrap();
            assert_eq!(lhs, rhs);
        }
    }
}

#[test]
fn index_tuples_are_lexicographic() {
    assert_eq!(index_tuples(4, 2), vec![vec![0, 1], vec![0, 2], vec![0, 3], vec![1, 2], vec![1, 3], vec![2, 3]]);
    assert_eq!(index_tuples(3, 0), vec![Vec::<usize>::new()]);
    assert!(index_tuples(2, 3).is_empty());
}

fn arb_form(max_degree: usize) -> impl Strategy<Value = DifferentialForm<Q>> {
    (0..=max_degree, any::<u64>()).prop_map(|(k, seed)| {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        random_form(&mut rng, 3, k, 2, 2, 3)
    })
}

fn arb_point() -> impl Strategy<Value = Vec<Q>> {
    proptest::collection::vec(-3i64..=3, 3).prop_map(|v| v.into_iter().map(q).collect())
}

fn sign(k: usize, l: usize) -> Q {
    if (k * l) % 2 == 1 {
        q(-1)
    } else {
        q(1)
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn graded_anticommutativity(a in arb_form(3), b in arb_form(3)) {
        let (k, l) = (a.degree(), b.degree());
        let lhs = a.wedge(&b).unwrap();
        let rhs = b.wedge(&a).unwrap().mul_poly(&Polynomial::constant(3, sign(k, l)));
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn d_squared_vanishes(a in arb_form(3)) {
        prop_assert!(a.exterior_derivative().exterior_derivative().is_zero());
    }

    #[test]
    fn graded_leibniz(a in arb_form(2), b in arb_form(2)) {
        let lhs = a.wedge(&b).unwrap().exterior_derivative();
        let first = a.exterior_derivative().wedge(&b).unwrap();
        let second = a.wedge(&b.exterior_derivative()).unwrap().mul_poly(&Polynomial::constant(3, sign(a.degree(), 1)));
        prop_assert_eq!(lhs, &first + &second);
    }

    #[test]
    fn evaluation_is_multiplicative(a in arb_form(2), b in arb_form(1), pt in arb_point()) {
        let lhs = a.wedge(&b).unwrap().evaluate(&pt).unwrap();
        let rhs = a.evaluate(&pt).unwrap().wedge(&b.evaluate(&pt).unwrap()).unwrap();
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn potential_recovers_functions(seed in any::<u64>()) {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let h: Polynomial<Q> = random_polynomial_at_origin(&mut rng, 3, 5, 6, 9);
        prop_assert_eq!(radial_potential(&differential_of(&h)).unwrap(), h);
    }
}
