//! The four bundled example germs.

pub const CORPUS: [(&str, &str); 4] = [
    ("coordinate_subspace.germ", include_str!("../corpus/coordinate_subspace.germ")),
    ("cusp3.germ", include_str!("../corpus/cusp3.germ")),
    ("umbrella.germ", include_str!("../corpus/umbrella.germ")),
    ("segre.germ", include_str!("../corpus/segre.germ")),
];

/// Looks up a bundled file by name, with or without the `.germ` suffix.
pub fn bundled(name: &str) -> Option<&'static str> {
    CORPUS
        .iter()
        .find(|(file, _)| *file == name || file.strip_suffix(".germ") == Some(name))
        .map(|(_, text)| *text)
}
