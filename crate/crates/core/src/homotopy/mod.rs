//! The interval algebra `B ⊗ ℚ⟨t, dt⟩`, morphisms and algebraic homotopies
//! between free CDGAs, obstruction cochains and dilatation.

mod dilatation;
mod interval;
mod morphism;
mod obstruction;
pub mod sampling;

use thiserror::Error;

use crate::gca::{AlgebraError, Element};

pub use dilatation::{dilatation, formal_length, homotopy_dilatation, scale_degree, Dilatation};
pub use interval::{fundamental_theorem_residuals, IntervalElement};
pub use morphism::{AlgebraicHomotopy, DgaMorphism};
pub use obstruction::{
    push_forward, relative_d, solve_relative, surjectivity_gap, Extension, ExtensionData,
    RelativeCochain, RelativeData, RelativeObstruction, SlotObstruction,
};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum HomotopyError {
    #[error(transparent)]
    Algebra(#[from] AlgebraError),
    #[error("unknown generator `{0}`")]
    UnknownGenerator(String),
    #[error("image of `{generator}` must have degree {expected}, found {found}")]
    DegreeMismatch {
        generator: String,
        expected: u32,
        found: u32,
    },
    #[error("image of `{0}` lies in the wrong target algebra")]
    WrongTarget(String),
    #[error("no image assigned to `{0}`")]
    MissingImage(String),
    #[error("homotopy endpoint t={endpoint} does not match on `{generator}`")]
    EndpointMismatch { generator: String, endpoint: u8 },
    #[error("`{0}` is not an elementary-extension slot over the assigned generators")]
    BadSlot(String),
    #[error("d(b, c) differs from the obstruction at `{generator}`: residual ({residual_b}; {residual_c})")]
    NotExact {
        generator: String,
        residual_b: Element,
        residual_c: Element,
    },
    #[error("map does not commute with d on `{0}`")]
    NotCommuting(String),
    #[error("surjection fails in degree {0}")]
    NotSurjective(u32),
    #[error("homotopy after the surjection does not extend the pushed-forward homotopy at `{0}`")]
    NotAnExtension(String),
    #[error("differentials are not triangular in any generator order")]
    NotTriangular,
}
