//! Exact computer algebra for minimal Sullivan models.
//!
//! The crate is layered:
//!
//! - [`rational`] and [`linalg`]: exact arithmetic and row reduction over ℚ.
//! - [`gca`]: free graded-commutative algebras, derivations, monomial coordinates.
//! - [`model`]: minimal models, filtrations, weights and exponent tables.
//! - [`homotopy`]: the interval algebra, algebraic homotopies, obstructions, dilatation.
//! - [`lie`]: free graded Lie algebras in the tensor algebra and the mapping-torus brackets.
//! - [`io`], [`report`], [`suite`]: the model file format, structured reports, the bundled checks.
//!
//! ```
//! use sullivan::io::parse_model;
//!
//! let m = parse_model("model heis maxdeg 3\ngen x deg 1\ngen y deg 1\ngen z deg 1\nd z = x*y\n").unwrap();
//! assert!(m.validate().is_valid());
//! assert_eq!(m.nilpotency_class(), Some(2));
//! ```

pub mod gca;
pub mod homotopy;
pub mod io;
pub mod lie;
pub mod linalg;
pub mod model;
pub mod rational;
pub mod report;
pub mod suite;

#[cfg(doctest)]
mod book {
    macro_rules! chapter {
        ($name:ident, $path:literal) => {
            #[doc = include_str!($path)]
            mod $name {}
        };
    }
    chapter!(intro, "../../../book/src/introduction.md");
    chapter!(algebra, "../../../book/src/algebra.md");
    chapter!(models, "../../../book/src/models.md");
    chapter!(filtrations, "../../../book/src/filtrations.md");
    chapter!(weights, "../../../book/src/weights.md");
    chapter!(homotopies, "../../../book/src/homotopies.md");
    chapter!(whitehead, "../../../book/src/whitehead.md");
    chapter!(file_format, "../../../book/src/file-format.md");
    chapter!(cli, "../../../book/src/cli.md");
}
