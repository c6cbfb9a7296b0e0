use num_bigint::BigInt;
use num_rational::BigRational;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use super::*;
use crate::parse::parse_polynomial;
use crate::random::random_polynomial;

type Q = BigRational;

fn ring(names: &[&str]) -> PolynomialRing {
    PolynomialRing::new(names.iter().copied()).unwrap()
}

fn hyper(names: &[&str], f: &str) -> Germ<Q> {
    let r = ring(names);
    let f = parse_polynomial(f, &r).unwrap();
    Germ::hypersurface(r, f).unwrap()
}

fn umbrella() -> Germ<Q> {
    hyper(&["x", "y", "z"], "z^2 - x*y^2")
}

fn cusp() -> Germ<Q> {
    hyper(&["x", "y", "z"], "x^3 - y*z")
}

fn segre() -> Germ<Q> {
    hyper(&["x", "y", "z", "t"], "x*z - y*t")
}

fn plane(normal: &[i64]) -> Hyperplane {
    Hyperplane::from_integers(normal).unwrap()
}

#[test]
fn determinants() {
    let r = ring(&["a", "b", "c", "d"]);
    let m: Vec<Vec<Polynomial<Q>>> = vec![
        vec![parse_polynomial("a", &r).unwrap(), parse_polynomial("b", &r).unwrap()],
        vec![parse_polynomial("c", &r).unwrap(), parse_polynomial("d", &r).unwrap()],
    ];
    assert_eq!(determinant(&m, 4), parse_polynomial("a*d - b*c", &r).unwrap());
    let wide = vec![m[0].clone()];
    assert_eq!(maximal_minors(&wide, 4).len(), 2);
}

#[test]
fn jacobian_of_the_umbrella() {
    let u = umbrella();
    let r = u.ring().clone();
    let j = jacobian_ideal(&u).unwrap();
    let expected: Vec<Polynomial<Q>> =
        ["z^2 - x*y^2", "-y^2", "-2*x*y", "2*z"].iter().map(|s| parse_polynomial(s, &r).unwrap()).collect();
    assert_eq!(j.generators(), &expected[..]);
    assert_eq!(u.singular_dimension().unwrap(), 1);
    // Sing X is the x-axis
    assert!(j.radical_contains(&parse_polynomial("y", &r).unwrap()).unwrap());
    assert!(j.radical_contains(&parse_polynomial("z", &r).unwrap()).unwrap());
    assert!(!j.radical_contains(&parse_polynomial("x", &r).unwrap()).unwrap());
}

#[test]
fn isolated_singularities() {
    assert_eq!(cusp().singular_dimension().unwrap(), 0);
    let s = segre();
    assert_eq!(s.singular_dimension().unwrap(), 0);
    let j = jacobian_ideal(&s).unwrap();
    for v in ["x", "y", "z", "t"] {
        assert!(j.contains(&parse_polynomial(v, s.ring()).unwrap()).unwrap());
    }
    let smooth = hyper(&["x", "y", "z"], "x + y*z");
    assert_eq!(smooth.singular_dimension().unwrap(), -1);
}

#[test]
fn regularity_in_codimension() {
    assert!(regular_in_codimension(&cusp(), 1).unwrap());
    assert!(!regular_in_codimension(&umbrella(), 1).unwrap());
    assert!(regular_in_codimension(&umbrella(), 0).unwrap());
    assert!(regular_in_codimension(&segre(), 2).unwrap());
    assert!(!regular_in_codimension(&segre(), 3).unwrap());
    assert!(regular_in_codimension(&cusp(), -1).is_err());
    assert!(regular_in_codimension(&cusp(), 3).is_err());
}

#[test]
fn sections() {
    let u = umbrella();
    // x = 2y - 3z
    let s = hyperplane_section(&u, &plane(&[1, -2, 3])).unwrap();
    assert_eq!(s.ring().names(), &["y".to_string(), "z".to_string()]);
    assert_eq!(s.generators()[0], parse_polynomial("z^2 - (2*y - 3*z)*y^2", s.ring()).unwrap());
    let s = hyperplane_section(&u, &plane(&[1, -1, 0])).unwrap();
    assert_eq!(s.generators()[0], parse_polynomial("z^2 - y^3", s.ring()).unwrap());
    let s = hyperplane_section(&cusp(), &plane(&[0, 0, 1])).unwrap();
    assert_eq!(s.ring().names(), &["x".to_string(), "y".to_string()]);
    assert_eq!(s.generators()[0], parse_polynomial("x^3", s.ring()).unwrap());
    // a plane inside the germ has no section
    assert!(hyperplane_section(&hyper(&["x", "y", "z"], "x*y"), &plane(&[1, 0, 0])).is_err());
}

#[test]
fn reducedness_of_sections() {
    assert!(section_is_reduced(&hyper(&["y", "z"], "z^2 - (y + z)*y^2")).unwrap());
    assert!(!section_is_reduced(&hyper(&["x", "y"], "x^3")).unwrap());
    assert!(section_is_reduced(&hyper(&["y", "z"], "y")).unwrap());
}

#[test]
fn bertini_generic_plane_confirms() {
    let r = bertini_check(&umbrella(), &plane(&[1, -1, 0])).unwrap();
    assert_eq!(r.verdict, BertiniVerdict::ConfirmsTheorem);
    assert!(r.section_reduced && r.singular_loci_equal);
}

#[test]
fn bertini_tangent_plane() {
    let r = bertini_check(&umbrella(), &plane(&[1, 0, 0])).unwrap();
    assert_eq!(r.verdict, BertiniVerdict::TransversalityFails);
    assert!(!r.section_reduced);
    assert!(r.transversality_diagnostics.iter().any(|d| d.contains("tangent")));
}

#[test]
fn bertini_plane_through_the_singular_line() {
    let r = bertini_check(&umbrella(), &plane(&[0, 1, 0])).unwrap();
    assert_eq!(r.verdict, BertiniVerdict::TransversalityFails);
    assert!(r.transversality_diagnostics.iter().any(|d| d.contains("Sing X")));
}

#[test]
fn bertini_plane_inside_the_germ() {
    let r = bertini_check(&hyper(&["x", "y", "z"], "x*y"), &plane(&[0, 1, 0])).unwrap();
    assert_eq!(r.verdict, BertiniVerdict::TransversalityFails);
    assert!(r.section.is_none());
}

#[test]
fn random_hyperplanes() {
    assert_eq!(random_hyperplane(7, 10, 3).unwrap(), random_hyperplane(7, 10, 3).unwrap());
    assert!(random_hyperplane(0, 0, 3).is_err());
    let mut pos = [false; 3];
    let mut neg = [false; 3];
    for seed in 0..1000 {
        let h = random_hyperplane(seed, 2, 3).unwrap();
        assert!(h.normal().iter().any(|c| c != &BigInt::from(0)));
        for (i, c) in h.normal().iter().enumerate() {
            pos[i] |= c > &BigInt::from(0);
            neg[i] |= c < &BigInt::from(0);
        }
    }
    // the first nonzero entry is normalized positive, so only later ones can be negative
    assert!(pos.iter().all(|&b| b));
    assert!(neg[1] && neg[2]);
}

#[test]
fn smooth_germs_always_confirm() {
    let germ = hyper(&["x", "y", "z"], "x + 2*y - z + y*z");
    for r in bertini_trials(&germ, 0, 5, 20).unwrap() {
        assert_ne!(r.verdict, BertiniVerdict::Violation);
        if r.verdict == BertiniVerdict::TransversalityFails {
            assert!(!r.transversality_diagnostics.is_empty());
        }
    }
    let linear = hyper(&["x", "y", "z"], "x + 2*y - z");
    for r in bertini_trials(&linear, 0, 5, 20).unwrap() {
        if r.section.is_some() {
            assert_eq!(r.verdict, BertiniVerdict::ConfirmsTheorem);
        }
    }
}

#[test]
fn no_violations_on_the_cusp() {
    for r in bertini_trials(&cusp(), 100, 10, 30).unwrap() {
        assert_ne!(r.verdict, BertiniVerdict::Violation, "{}", r.hyperplane);
    }
}

#[test]
fn section_is_a_substitution() {
    let u = umbrella();
    let mut rng = ChaCha8Rng::seed_from_u64(3);
    for seed in 0..10 {
        let h = random_hyperplane(seed, 5, 3).unwrap();
        let (images, sub) = section_map::<Q>(u.ring(), &h).unwrap();
        assert_eq!(sub.nvars(), 2);
        // every image point lies on H
        let ell: Polynomial<Q> = h.linear_form();
        assert!(ell.substitute(&images).unwrap().is_zero());
        let a: Polynomial<Q> = random_polynomial(&mut rng, 3, 3, 3, 4);
        let b: Polynomial<Q> = random_polynomial(&mut rng, 3, 3, 3, 4);
        let lhs = (&a * &b).substitute(&images).unwrap();
        let rhs = &a.substitute(&images).unwrap() * &b.substitute(&images).unwrap();
        assert_eq!(lhs, rhs);
    }
}

#[test]
fn tangent_plane_to_a_smooth_germ() {
    // x = 0 is tangent to V(x + yz) at the origin; the section yz is singular there
    let germ = hyper(&["x", "y", "z"], "x + y*z");
    let r = bertini_check(&germ, &plane(&[1, 0, 0])).unwrap();
    assert!(r.section_reduced);
    assert!(!r.singular_loci_equal);
    assert_eq!(r.verdict, BertiniVerdict::TransversalityFails);
    assert!(r.transversality_diagnostics.iter().any(|d| d.contains("tangent")));
    let r = bertini_check(&germ, &plane(&[0, 1, 0])).unwrap();
    assert_eq!(r.verdict, BertiniVerdict::ConfirmsTheorem);
}
