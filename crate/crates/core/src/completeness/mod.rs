//! Homogeneity certificates, cube-condition checks and completion.

mod completion;
mod cube;
mod pseudolength;

pub use completion::{complete_presentation, one_completion, CompletionError, CompletionLog, CompletionRound, CompletionStatus, DEFAULT_MAX_ROUNDS};
pub use cube::{
    check_complete, check_cube_at, check_strong_cube_letters, check_strong_cube_letters_left, CubeAtResult, CubeMode,
    CubeReport, CubeVerdict, Obstruction, TripleStatus,
};
pub use pseudolength::{verify_pseudolength, HomogeneityCertificate, HomogeneityError, HomogeneitySide, PseudoLength};
