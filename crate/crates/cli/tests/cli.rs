use conormal_cli::corpus::CORPUS;
use conormal_cli::{dispatch, GermFile};

fn run(args: &[&str]) -> (i32, String, String) {
    let mut out = Vec::new();
    let mut err = Vec::new();
    let argv = std::iter::once("conormal").chain(args.iter().copied());
    let code = dispatch(argv, &mut out, &mut err);
    (code, String::from_utf8(out).unwrap(), String::from_utf8(err).unwrap())
}

#[test]
fn corpus_round_trips() {
    for (name, text) in CORPUS {
        let file = GermFile::parse(text).unwrap_or_else(|e| panic!("{name}: {e}"));
        let printed = file.to_string();
        assert_eq!(GermFile::parse(&printed).unwrap(), file, "{name}");
        assert_eq!(GermFile::parse(&printed).unwrap().to_string(), printed, "{name}");
        file.germ().unwrap();
    }
}

#[test]
fn germ_file_errors_carry_line_numbers() {
    let e = GermFile::parse("ring x y\ngen x*y\nflag smooth\n").unwrap_err();
    assert_eq!(e.line, 3);
    let e = GermFile::parse("gen x\n").unwrap_err();
    assert_eq!(e.line, 1);
    let e = GermFile::parse("ring x y\n# nothing\n").unwrap_err();
    assert_eq!(e.line, 0);
    let e = GermFile::parse("ring x y\ngen x\nform w dx\nform w dy\n").unwrap_err();
    assert_eq!(e.line, 4);
    let e = GermFile::parse("ring x y\ngen x\nparam u -> u\n").unwrap_err();
    assert!(e.message.contains("components"));
}

#[test]
fn parametrization_is_checked() {
    let file = GermFile::parse("ring x y\ngen x*y\nflag hypersurface\nparam u -> u, 1 + u\n").unwrap();
    let germ = file.germ().unwrap();
    assert!(file.parametrization(&germ).is_err());
}

#[test]
fn check_certifies_the_umbrella_generator() {
    let (code, out, _) = run(&["check", "--germ", "umbrella.germ", "--form", "y*z*dx + 2*x*z*dy - 2*x*y*dz"]);
    assert_eq!(code, 0);
    assert!(out.contains("CONORMAL (certified)"));
}

#[test]
fn check_refutes_and_distinguishes_missing_certificates() {
    let (code, out, _) = run(&["check", "--germ", "umbrella", "--form", "dx"]);
    assert_eq!(code, 1);
    assert!(out.contains("NOT CONORMAL (refuted)"));

    let dir = std::env::temp_dir().join(format!("conormal-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join("double.germ");
    std::fs::write(&path, "ring x y z\ngen x^2\nflag hypersurface\n").unwrap();
    let (code, out, _) = run(&["check", "--germ", path.to_str().unwrap(), "--form", "dy"]);
    assert_eq!(code, 1);
    assert!(out.contains("NO CERTIFICATE"));
    std::fs::remove_dir_all(&dir).unwrap();
}

#[test]
fn usage_and_input_errors_exit_2() {
    assert_eq!(run(&["frobnicate"]).0, 2);
    assert_eq!(run(&["check", "--germ", "umbrella"]).0, 2);
    assert_eq!(run(&["check", "--germ", "umbrella", "--form", "x^"]).0, 2);
    assert_eq!(run(&["check", "--germ", "umbrella", "--named", "nope"]).0, 2);
    assert_eq!(run(&["check", "--germ", "no/such/file.germ", "--form", "dx"]).0, 2);
    assert_eq!(run(&["bertini", "--germ", "coordinate_subspace"]).0, 2);
    assert_eq!(run(&["bertini", "--germ", "umbrella", "--normal", "1, 0"]).0, 2);
    assert_eq!(run(&["potential", "--germ", "umbrella", "--named", "w2"]).0, 2);
    let (code, out, _) = run(&["--help"]);
    assert_eq!(code, 0);
    assert!(out.contains("verify-examples"));
}

#[test]
fn tangent_trivial_singular_potential() {
    let (code, out, _) = run(&["tangent", "--germ", "umbrella", "--field", "0, -y, -z"]);
    assert_eq!(code, 0);
    assert!(out.contains("TANGENT (certified)"));
    assert_eq!(run(&["tangent", "--germ", "umbrella", "--field", "1, 0, 0"]).0, 1);

    let (code, out, _) = run(&["trivial", "--germ", "cusp3", "--named", "w"]);
    assert_eq!(code, 1);
    assert!(out.contains("NON-TRIVIAL"));
    assert_eq!(run(&["trivial", "--germ", "cusp3", "--form", "(x^3 - y*z)*dx"]).0, 0);

    let (code, out, _) = run(&["singular", "--germ", "segre"]);
    assert_eq!(code, 0);
    assert!(out.contains("dim Sing X = 0"));
    assert!(out.contains("2  yes") && out.contains("3  no"));

    let (code, out, _) = run(&["potential", "--germ", "cusp3", "--form", "3*x^2*dx - z*dy - y*dz"]);
    assert_eq!(code, 0);
    assert!(out.contains("potential: x^3 - y*z"));
    let (code, out, _) = run(&["potential", "--germ", "cusp3", "--form", "y*dx"]);
    assert_eq!(code, 1);
    assert!(out.contains("NotClosed"));
}

#[test]
fn bertini_reports_are_deterministic() {
    let args = ["bertini", "--germ", "umbrella.germ", "--trials", "20", "--seed", "7", "--bound", "10"];
    let (code, first, _) = run(&args);
    assert_eq!(code, 0);
    assert!(first.contains("violations: 0"));
    assert_eq!(first.matches("trial ").count(), 20);
    assert_eq!(run(&args).1, first);
    let (code, out, _) = run(&["bertini", "--germ", "umbrella", "--normal", "0, 1, 0"]);
    assert_eq!(code, 0);
    assert!(out.contains("TransversalityFails") && out.contains("Sing X"));
}

#[test]
fn verify_examples_passes() {
    let (code, out, _) = run(&["verify-examples"]);
    assert_eq!(code, 0, "{out}");
    assert!(!out.contains("[FAIL]"));
    assert!(out.contains("all examples verified"));
}
