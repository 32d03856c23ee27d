//! Model files shipped with the crate.

use super::{parse_file, ModelFile};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct BundledFile {
    pub file: &'static str,
    pub text: &'static str,
}

macro_rules! bundle {
    ($($name:literal),* $(,)?) => {
        [$(BundledFile { file: $name, text: include_str!(concat!("../../models/", $name)) }),*]
    };
}

/// The six reference models.
pub const BUNDLED: [BundledFile; 6] = bundle!(
    "s2.sm",
    "s3.sm",
    "heisenberg.sm",
    "three-step.sm",
    "non-coformal.sm",
    "random.sm",
);

/// Files that must be rejected: by the parser, by nilpotence, by `d² = 0`;
/// and the two-map example for the relative obstruction.
pub const FIXTURES: [BundledFile; 4] =
    bundle!("broken.sm", "so3.sm", "d-squared.sm", "relative.sm");

/// The parsed reference models.
pub fn bundled() -> Vec<ModelFile> {
    BUNDLED
        .iter()
        .map(|b| parse_file(b.text).unwrap_or_else(|e| panic!("{}: {e}", b.file)))
        .collect()
}

/// A reference model or fixture by file name, with or without `.sm`.
pub fn fixture(name: &str) -> Option<BundledFile> {
    BUNDLED
        .iter()
        .chain(FIXTURES.iter())
        .find(|b| b.file == name || b.file.strip_suffix(".sm") == Some(name))
        .copied()
}

pub fn fixtures() -> impl Iterator<Item = BundledFile> {
    FIXTURES.into_iter()
}
