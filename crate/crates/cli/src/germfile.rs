//! The line-oriented `.germ` format.
//!
//! ```text
//! # comment
//! ring x y z
//! gen z^2 - x*y^2
//! flag hypersurface
//! form w1 y*z*dx + 2*x*z*dy - 2*x*y*dz
//! param u v -> u^2, v, u*v
//! ```

use std::fmt;

use conormal_core::{
    parse_homogeneous_form, parse_polynomial, parse_polynomial_list, GermFlags, PolynomialRing, QForm, QGerm,
    QParametrization, QPolynomial,
};

#[derive(Debug, thiserror::Error)]
#[error("line {line}: {message}")]
pub struct GermFileError {
    pub line: usize,
    pub message: String,
}

#[derive(Clone, Debug, PartialEq)]
pub struct GermFile {
    pub ring: PolynomialRing,
    pub generators: Vec<QPolynomial>,
    pub flags: GermFlags,
    pub forms: Vec<(String, QForm)>,
    pub parametrization: Option<(PolynomialRing, Vec<QPolynomial>)>,
}

fn is_name(s: &str) -> bool {
    let mut chars = s.chars();
    matches!(chars.next(), Some(c) if c.is_ascii_alphabetic() || c == '_')
        && chars.all(|c| c.is_ascii_alphanumeric() || c == '_')
}

impl GermFile {
    pub fn parse(text: &str) -> Result<Self, GermFileError> {
        let mut ring: Option<PolynomialRing> = None;
        let mut generators = Vec::new();
        let mut flags = GermFlags::default();
        let mut forms: Vec<(String, QForm)> = Vec::new();
        let mut parametrization = None;

        for (idx, raw) in text.lines().enumerate() {
            let line = idx + 1;
            let err = |message: String| GermFileError { line, message };
            let trimmed = raw.trim();
            if trimmed.is_empty() || trimmed.starts_with('#') {
                continue;
            }
            let (keyword, rest) = trimmed.split_once(char::is_whitespace).unwrap_or((trimmed, ""));
            let rest = rest.trim();
            if keyword == "ring" {
                if ring.is_some() {
                    return Err(err("duplicate ring declaration".into()));
                }
                let r = PolynomialRing::new(rest.split_whitespace()).map_err(|e| err(e.to_string()))?;
                ring = Some(r);
                continue;
            }
            let Some(r) = ring.as_ref() else {
                return Err(err(format!("`{keyword}` before the ring declaration")));
            };
            match keyword {
                "gen" => generators.push(parse_polynomial(rest, r).map_err(|e| err(e.to_string()))?),
                "flag" => match rest {
                    "hypersurface" => flags.hypersurface = true,
                    "complete_intersection" => flags.complete_intersection = true,
                    other => return Err(err(format!("unknown flag `{other}`"))),
                },
                "form" => {
                    let (name, expr) =
                        rest.split_once(char::is_whitespace).ok_or_else(|| err("expected `form <name> <expr>`".into()))?;
                    if !is_name(name) {
                        return Err(err(format!("invalid form name `{name}`")));
                    }
                    if forms.iter().any(|(n, _)| n == name) {
                        return Err(err(format!("duplicate form `{name}`")));
                    }
                    let w = parse_homogeneous_form(expr.trim(), r, 0).map_err(|e| err(e.to_string()))?;
                    forms.push((name.to_string(), w));
                }
                "param" => {
                    if parametrization.is_some() {
                        return Err(err("duplicate parametrization".into()));
                    }
                    let (vars, comps) =
                        rest.split_once("->").ok_or_else(|| err("expected `param <vars> -> <polys>`".into()))?;
                    let pr = PolynomialRing::new(vars.split_whitespace()).map_err(|e| err(e.to_string()))?;
                    let comps = parse_polynomial_list(comps.trim(), &pr).map_err(|e| err(e.to_string()))?;
                    if comps.len() != r.nvars() {
                        return Err(err(format!("expected {} components, found {}", r.nvars(), comps.len())));
                    }
                    parametrization = Some((pr, comps));
                }
                other => return Err(err(format!("unknown keyword `{other}`"))),
            }
        }
        let ring = ring.ok_or(GermFileError { line: 0, message: "missing ring declaration".into() })?;
        if generators.is_empty() {
            return Err(GermFileError { line: 0, message: "no generators".into() });
        }
        Ok(GermFile { ring, generators, flags, forms, parametrization })
    }

    pub fn germ(&self) -> conormal_core::Result<QGerm> {
        QGerm::new(self.ring.clone(), self.generators.clone(), self.flags)
    }

    /// The parametrization, checked against `germ`.
    pub fn parametrization(&self, germ: &QGerm) -> conormal_core::Result<Option<QParametrization>> {
        self.parametrization
            .as_ref()
            .map(|(r, comps)| QParametrization::new(germ, r.clone(), comps.clone()))
            .transpose()
    }

    pub fn form(&self, name: &str) -> Option<&QForm> {
        self.forms.iter().find(|(n, _)| n == name).map(|(_, w)| w)
    }
}

impl fmt::Display for GermFile {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "ring {}", self.ring.names().join(" "))?;
        for g in &self.generators {
            writeln!(f, "gen {}", g.display(&self.ring))?;
        }
        if self.flags.hypersurface {
            writeln!(f, "flag hypersurface")?;
        }
        if self.flags.complete_intersection {
            writeln!(f, "flag complete_intersection")?;
        }
        for (name, w) in &self.forms {
            writeln!(f, "form {name} {}", w.display(&self.ring))?;
        }
        if let Some((r, comps)) = &self.parametrization {
            let comps: Vec<String> = comps.iter().map(|p| p.display(r).to_string()).collect();
            writeln!(f, "param {} -> {}", r.names().join(" "), comps.join(", "))?;
        }
        Ok(())
    }
}
