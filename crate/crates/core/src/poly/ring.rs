use crate::error::{Error, Result};

/// Named coordinates `x1..xn` of an affine space. Position is meaning: the
/// `i`-th name is the `i`-th coordinate everywhere in the crate.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct PolynomialRing {
    names: Vec<String>,
}

impl PolynomialRing {
    pub fn new<S: Into<String>>(names: impl IntoIterator<Item = S>) -> Result<Self> {
        let names: Vec<String> = names.into_iter().map(Into::into).collect();
        if names.is_empty() {
            return Err(Error::InvalidRing("no variables".into()));
        }
        for (i, name) in names.iter().enumerate() {
            if !is_identifier(name) {
                return Err(Error::InvalidRing(format!("`{name}` is not a valid variable name")));
            }
            if names[..i].contains(name) {
                return Err(Error::InvalidRing(format!("duplicate variable `{name}`")));
            }
        }
        Ok(PolynomialRing { names })
    }

    pub fn nvars(&self) -> usize {
        self.names.len()
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn name(&self, i: usize) -> &str {
        &self.names[i]
    }

    pub fn index_of(&self, name: &str) -> Option<usize> {
        self.names.iter().position(|n| n == name)
    }

    /// The ring with variable `i` removed, remaining names in order.
    pub fn without(&self, i: usize) -> Result<Self> {
        if i >= self.nvars() {
            return Err(Error::IndexOutOfRange { index: i, nvars: self.nvars() });
        }
        let mut names = self.names.clone();
        names.remove(i);
        PolynomialRing::new(names)
    }

    /// A name not yet used in this ring, starting from `base`.
    pub fn fresh_name(&self, base: &str) -> String {
        let mut candidate = base.to_string();
        let mut k = 0;
        while self.index_of(&candidate).is_some() {
            k += 1;
            candidate = format!("{base}{k}");
        }
        candidate
    }
}

fn is_identifier(s: &str) -> bool {
    let mut chars = s.chars();
    matches!(chars.next(), Some(c) if c.is_ascii_alphabetic() || c == '_')
        && chars.all(|c| c.is_ascii_alphanumeric() || c == '_')
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rejects_bad_rings() {
        assert!(PolynomialRing::new(Vec::<String>::new()).is_err());
        assert!(PolynomialRing::new(["x", "x"]).is_err());
        assert!(PolynomialRing::new(["2x"]).is_err());
        let r = PolynomialRing::new(["x", "y", "z"]).unwrap();
        assert_eq!(r.index_of("z"), Some(2));
        assert_eq!(r.without(0).unwrap().names(), &["y", "z"]);
        assert_eq!(r.fresh_name("x"), "x1");
        assert_eq!(r.fresh_name("w"), "w");
    }
}
