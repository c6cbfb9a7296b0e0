use conormal_core::{
    differential_of, is_conormal, parse_homogeneous_form, parse_polynomial, radial_potential, Polynomial,
    PolynomialRing, QGerm, QPolynomial, Status,
};

#[test]
fn rational_pipeline() {
    let ring = PolynomialRing::new(["x", "y", "z"]).unwrap();
    let f: QPolynomial = parse_polynomial("z^2 - x*y^2", &ring).unwrap();
    let germ = QGerm::hypersurface(ring.clone(), f.clone()).unwrap();
    let w = parse_homogeneous_form("y*dx*dz - z*dx*dy", &ring, 2).unwrap();
    let v = is_conormal(&w, &germ).unwrap();
    assert_eq!(v.status, Status::CertifiedYes);
    assert!(v.verify(germ.ideal()).unwrap());
    assert_eq!(radial_potential(&differential_of(&f)).unwrap(), f);
    assert_eq!(f.display(&ring).to_string(), "-x*y^2 + z^2");
}

#[test]
fn floating_point_instantiation() {
    let ring = PolynomialRing::new(["x", "y"]).unwrap();
    let p: Polynomial<f64> = parse_polynomial("x^2 - 3*x*y + 1/2", &ring).unwrap();
    assert_eq!(p.evaluate(&[2.0, 1.0]).unwrap(), -1.5);
    let q: Polynomial<f64> = p.partial_derivative(0).unwrap();
    assert_eq!(q.evaluate(&[1.0, 1.0]).unwrap(), -1.0);
}
