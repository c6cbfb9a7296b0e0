use std::io::Write;

use conormal_core::{
    bertini_check, conormal_wedge, form_to_vector_field, is_conormal, is_tangential, is_trivial_form,
    jacobian_ideal, oracle_conormal_on_parametrization, parse_homogeneous_form, parse_polynomial_list,
    radial_potential, random_hyperplane, regular_in_codimension, splits_off_line, trivial_form_generators,
    vanishes_on_singular_locus, BertiniVerdict, Error, Hyperplane, PolynomialRing, QBertiniReport, QForm, QGerm,
    QPolynomial, QVectorField, QVerdict, Status, Witness,
};
use rayon::prelude::*;

use crate::corpus::CORPUS;
use crate::germfile::GermFile;
use crate::{CliError, EXIT_CERTIFIED, EXIT_NOT_CERTIFIED};

type Out<'a> = &'a mut dyn Write;

fn describe(file: &GermFile) -> String {
    let gens: Vec<String> = file.generators.iter().map(|g| g.display(&file.ring).to_string()).collect();
    format!("V({}) in variables {}", gens.join(", "), file.ring.names().join(" "))
}

fn resolve_form(file: &GermFile, expr: Option<&str>, named: Option<&str>) -> Result<QForm, CliError> {
    match (expr, named) {
        (Some(text), _) => Ok(parse_homogeneous_form(text, &file.ring, 0)?),
        (None, Some(name)) => {
            file.form(name).cloned().ok_or_else(|| CliError::Input(format!("no form named `{name}` in the germ file")))
        }
        (None, None) => Err(CliError::Input("one of --form or --named is required".into())),
    }
}

fn exit_code(v: &QVerdict) -> i32 {
    if v.is_yes() {
        EXIT_CERTIFIED
    } else {
        EXIT_NOT_CERTIFIED
    }
}

fn write_verdict(out: Out, v: &QVerdict, ring: &PolynomialRing, yes: &str, no: &str) -> Result<(), CliError> {
    match (&v.status, &v.witness) {
        (Status::CertifiedYes, Witness::InIdeal(ps)) => {
            writeln!(out, "{yes} (certified)")?;
            writeln!(out, "witness: all {} test polynomial(s) reduce to 0 modulo the generators", ps.len())?;
        }
        (Status::CertifiedNo, Witness::OutsideRadical(p)) => {
            writeln!(out, "{no} (refuted)")?;
            writeln!(out, "witness: {} does not vanish on the germ", p.display(ring))?;
        }
        (Status::NoCertificate, Witness::OnlyInRadical { polynomial, normal_form }) => {
            writeln!(out, "NO CERTIFICATE (holds on the zero set, but the generators are not radical)")?;
            writeln!(
                out,
                "witness: {} vanishes on the germ but has normal form {}",
                polynomial.display(ring),
                normal_form.display(ring)
            )?;
        }
        _ => unreachable!("verdict and witness disagree"),
    }
    Ok(())
}

pub fn check(out: Out, file: &GermFile, expr: Option<&str>, named: Option<&str>) -> Result<i32, CliError> {
    let germ = file.germ()?;
    let w = resolve_form(file, expr, named)?;
    let ring = &file.ring;
    writeln!(out, "germ: {}", describe(file))?;
    writeln!(out, "form: {} (degree {})", w.display(ring), w.degree())?;
    if w.degree() > 0 {
        writeln!(out, "wedge with the differentials: {}", conormal_wedge(&w, &germ)?.display(ring))?;
    }
    let v = is_conormal(&w, &germ)?;
    write_verdict(out, &v, ring, "CONORMAL", "NOT CONORMAL")?;
    if v.is_yes() && w.degree() + 1 == germ.nvars() {
        if splits_off_line(&w, &germ)? {
            writeln!(out, "note: the form is nonzero at the origin, so a smooth line splits off the germ")?;
        } else {
            writeln!(out, "note: the form vanishes at the origin")?;
        }
    }
    Ok(exit_code(&v))
}

pub fn tangent(out: Out, file: &GermFile, field: &str) -> Result<i32, CliError> {
    let germ = file.germ()?;
    let ring = &file.ring;
    let comps: Vec<QPolynomial> = parse_polynomial_list(field, ring).map_err(Error::from)?;
    let v = QVectorField::new(comps)?;
    if v.nvars() != germ.nvars() {
        return Err(CliError::Input(format!("expected {} components, found {}", germ.nvars(), v.nvars())));
    }
    writeln!(out, "germ: {}", describe(file))?;
    writeln!(out, "field: {}", v.display(ring))?;
    for (i, f) in germ.generators().iter().enumerate() {
        writeln!(out, "V(f{}) = {}", i + 1, v.apply(f)?.display(ring))?;
    }
    let verdict = is_tangential(&v, &germ)?;
    write_verdict(out, &verdict, ring, "TANGENT", "NOT TANGENT")?;
    Ok(exit_code(&verdict))
}

pub fn trivial(out: Out, file: &GermFile, expr: Option<&str>, named: Option<&str>) -> Result<i32, CliError> {
    let germ = file.germ()?;
    let w = resolve_form(file, expr, named)?;
    writeln!(out, "germ: {}", describe(file))?;
    writeln!(out, "form: {} (degree {})", w.display(&file.ring), w.degree())?;
    if is_trivial_form(&w, &germ)? {
        writeln!(out, "TRIVIAL (in the differential ideal generated by the germ's ideal)")?;
        Ok(EXIT_CERTIFIED)
    } else {
        writeln!(out, "NON-TRIVIAL (outside the differential ideal generated by the germ's ideal)")?;
        Ok(EXIT_NOT_CERTIFIED)
    }
}

pub fn singular(out: Out, file: &GermFile) -> Result<i32, CliError> {
    let germ = file.germ()?;
    let ring = &file.ring;
    let jac = jacobian_ideal(&germ)?;
    let gens: Vec<String> = jac.generators().iter().map(|g| g.display(ring).to_string()).collect();
    writeln!(out, "germ: {}", describe(file))?;
    writeln!(out, "jacobian ideal: {}", gens.join(", "))?;
    writeln!(out, "dim X = {}", germ.dimension())?;
    writeln!(out, "dim Sing X = {} (-1 means empty)", germ.singular_dimension()?)?;
    writeln!(out, "k  regular in codimension k")?;
    for k in 0..=germ.dimension() {
        let yes = regular_in_codimension(&germ, k)?;
        writeln!(out, "{k}  {}", if yes { "yes" } else { "no" })?;
    }
    Ok(EXIT_CERTIFIED)
}

fn parse_normal(text: &str, n: usize) -> Result<Hyperplane, CliError> {
    let entries = text
        .split(',')
        .map(|s| s.trim().parse::<i64>().map_err(|e| CliError::Input(format!("bad normal entry `{}`: {e}", s.trim()))))
        .collect::<Result<Vec<_>, _>>()?;
    if entries.len() != n {
        return Err(CliError::Input(format!("expected {n} normal entries, found {}", entries.len())));
    }
    Ok(Hyperplane::from_integers(&entries)?)
}

fn write_bertini(out: Out, label: &str, r: &QBertiniReport) -> Result<(), CliError> {
    writeln!(out, "{label}: H = {} -> {}", r.hyperplane, r.verdict)?;
    match &r.section {
        Some((ring, g)) => {
            writeln!(out, "  section: {} in variables {}", g.display(ring), ring.names().join(" "))?;
            writeln!(
                out,
                "  reduced: {}, singular loci equal: {}",
                if r.section_reduced { "yes" } else { "no" },
                if r.singular_loci_equal { "yes" } else { "no" }
            )?;
        }
        None => writeln!(out, "  section: H lies in X")?,
    }
    for d in &r.transversality_diagnostics {
        writeln!(out, "  diagnostic: {d}")?;
    }
    Ok(())
}

pub fn bertini(
    out: Out,
    file: &GermFile,
    trials: usize,
    seed: u64,
    bound: u32,
    normal: Option<&str>,
) -> Result<i32, CliError> {
    let germ = file.germ()?;
    jacobian_ideal(&germ)?;
    writeln!(out, "germ: {}", describe(file))?;
    let reports: Vec<(String, QBertiniReport)> = match normal {
        Some(text) => {
            let h = parse_normal(text, germ.nvars())?;
            vec![("hyperplane".to_string(), bertini_check(&germ, &h)?)]
        }
        None => {
            let n = germ.nvars();
            (0..trials as u64)
                .into_par_iter()
                .map(|i| {
                    let s = seed.wrapping_add(i);
                    let h = random_hyperplane(s, bound, n)?;
                    Ok((format!("trial {i} (seed {s})"), bertini_check(&germ, &h)?))
                })
                .collect::<Result<_, conormal_core::Error>>()?
        }
    };
    let mut counts = [0usize; 3];
    for (label, r) in &reports {
        write_bertini(out, label, r)?;
        counts[match r.verdict {
            BertiniVerdict::ConfirmsTheorem => 0,
            BertiniVerdict::TransversalityFails => 1,
            BertiniVerdict::Violation => 2,
        }] += 1;
    }
    writeln!(
        out,
        "summary: {} checked, confirms: {}, transversality failures: {}, violations: {}",
        reports.len(),
        counts[0],
        counts[1],
        counts[2]
    )?;
    Ok(if counts[2] == 0 { EXIT_CERTIFIED } else { EXIT_NOT_CERTIFIED })
}

pub fn potential(out: Out, file: &GermFile, expr: Option<&str>, named: Option<&str>) -> Result<i32, CliError> {
    let germ = file.germ()?;
    let w = resolve_form(file, expr, named)?;
    let ring = &file.ring;
    if w.degree() != 1 {
        return Err(CliError::Input(format!("potential needs a 1-form, got degree {}", w.degree())));
    }
    writeln!(out, "germ: {}", describe(file))?;
    writeln!(out, "form: {}", w.display(ring))?;
    let g = match radial_potential(&w) {
        Ok(g) => g,
        Err(Error::NotClosed) => {
            writeln!(out, "NotClosed: d of the form is {}", w.exterior_derivative().display(ring))?;
            return Ok(EXIT_NOT_CERTIFIED);
        }
        Err(e) => return Err(e.into()),
    };
    writeln!(out, "potential: {}", g.display(ring))?;
    if germ.ideal().contains(&g)? {
        writeln!(out, "IN IDEAL (certified)")?;
        Ok(EXIT_CERTIFIED)
    } else {
        writeln!(out, "NOT IN IDEAL")?;
        Ok(EXIT_NOT_CERTIFIED)
    }
}

struct Claims<'a> {
    out: Out<'a>,
    failed: usize,
}

impl Claims<'_> {
    fn claim(&mut self, example: &str, text: &str, ok: bool) -> Result<(), CliError> {
        if !ok {
            self.failed += 1;
        }
        writeln!(self.out, "[{}] {example}: {text}", if ok { "PASS" } else { "FAIL" })?;
        Ok(())
    }
}

fn named(file: &GermFile, name: &str) -> Result<QForm, CliError> {
    file.form(name).cloned().ok_or_else(|| CliError::Input(format!("bundled file lacks form `{name}`")))
}

fn volume(germ: &QGerm, c: QPolynomial) -> conormal_core::Result<QForm> {
    QForm::from_term((0..germ.nvars()).collect(), c)
}

fn all_trivial_generators_conormal(germ: &QGerm) -> conormal_core::Result<bool> {
    for k in 1..=germ.nvars() {
        for w in trivial_form_generators(germ, k)? {
            if !is_conormal(&w, germ)?.is_yes() {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

fn example(c: &mut Claims, label: &str, file: &GermFile) -> Result<(), CliError> {
    let germ = file.germ()?;
    let ring = &file.ring;
    let f = germ.generators()[0].clone();
    let regular = |k: i64| regular_in_codimension(&germ, k);
    c.claim(label, "every trivial generator is conormal", all_trivial_generators_conormal(&germ)?)?;
    match label {
        "coordinate_subspace" => {
            c.claim(label, "the germ is smooth", germ.singular_dimension()? == -1)?;
            for k in 0..=germ.dimension() {
                c.claim(label, &format!("regular in codimension {k}"), regular(k)?)?;
            }
            for name in ["dx1", "x1dx3"] {
                let w = named(file, name)?;
                c.claim(label, &format!("{name} is conormal"), is_conormal(&w, &germ)?.is_yes())?;
                c.claim(label, &format!("{name} is trivial"), is_trivial_form(&w, &germ)?)?;
            }
            let dx3 = named(file, "dx3")?;
            c.claim(label, "dx3 is not conormal", is_conormal(&dx3, &germ)?.is_no())?;
        }
        "cusp3" => {
            let w = named(file, "w")?;
            c.claim(label, "w is conormal", is_conormal(&w, &germ)?.is_yes())?;
            let three_f = f.scale(&conormal_core::Rational::from_integer(3.into()));
            c.claim(label, "w ^ df = 3 f vol", conormal_wedge(&w, &germ)? == volume(&germ, three_f)?)?;
            c.claim(label, "w is non-trivial", !is_trivial_form(&w, &germ)?)?;
            c.claim(label, "regular in codimension 1", regular(1)?)?;
            c.claim(label, "not regular in codimension 2", !regular(2)?)?;
        }
        "umbrella" => {
            let (w1, w2) = (named(file, "w1")?, named(file, "w2")?);
            c.claim(label, "w1 is conormal", is_conormal(&w1, &germ)?.is_yes())?;
            c.claim(label, "w2 is conormal", is_conormal(&w2, &germ)?.is_yes())?;
            c.claim(label, "w1 is non-trivial", !is_trivial_form(&w1, &germ)?)?;
            c.claim(label, "w1 vanishes on the singular locus", vanishes_on_singular_locus(&w1, &germ)?)?;
            let v = form_to_vector_field(&w2)?;
            let minus_two_f = f.scale(&conormal_core::Rational::from_integer((-2).into()));
            c.claim(label, "the field of w2 is tangent", is_tangential(&v, &germ)?.is_yes())?;
            c.claim(label, "the field of w2 maps f to -2f", v.apply(&f)? == minus_two_f)?;
            let par = file
                .parametrization(&germ)?
                .ok_or_else(|| CliError::Input("bundled umbrella lacks its parametrization".into()))?;
            let dx = parse_homogeneous_form("dx", ring, 1)?;
            let mut agree = true;
            for w in [&w1, &w2, &dx] {
                agree &= is_conormal(w, &germ)?.is_yes() == oracle_conormal_on_parametrization(w, &par)?;
            }
            c.claim(label, "the parametrization agrees on w1, w2 and dx", agree)?;
            c.claim(label, "not regular in codimension 1", !regular(1)?)?;
        }
        "segre" => {
            let w = named(file, "w")?;
            c.claim(label, "w is conormal", is_conormal(&w, &germ)?.is_yes())?;
            let wedge = conormal_wedge(&w, &germ)?;
            let vol_f = volume(&germ, f.clone())?;
            c.claim(label, "w ^ df = +-f vol", wedge == vol_f || wedge == -&vol_f)?;
            c.claim(label, "w is non-trivial", !is_trivial_form(&w, &germ)?)?;
            c.claim(label, "regular in codimension 1 and 2", regular(1)? && regular(2)?)?;
        }
        _ => {}
    }
    Ok(())
}

pub fn verify_examples(out: Out) -> Result<i32, CliError> {
    let mut claims = Claims { out, failed: 0 };
    for (file_name, text) in CORPUS {
        let file = GermFile::parse(text)
            .map_err(|source| CliError::GermFile { name: file_name.to_string(), source })?;
        example(&mut claims, file_name.trim_end_matches(".germ"), &file)?;
    }
    let failed = claims.failed;
    if failed == 0 {
        writeln!(claims.out, "all examples verified")?;
        Ok(EXIT_CERTIFIED)
    } else {
        writeln!(claims.out, "{failed} claim(s) failed")?;
        Ok(EXIT_NOT_CERTIFIED)
    }
}
