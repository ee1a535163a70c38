//! Facade over the workspace crates, plus the library half of the `qyang`
//! tool: configuration parsing, reports and the verification suites.

pub mod config;
mod report;
pub mod suites;

pub use report::{Check, Format, Report};

pub use loop_env;
pub use prep_rep;
pub use quiver_core;
pub use series;
pub use shuffle;
pub use weyl_braid;

/// Errors of the command-line layer; all of them are input errors (exit code 2).
#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error("{0}")]
    Input(String),
}

macro_rules! input_error {
    ($($t:ty),*) => {
        $(impl From<$t> for CliError {
            fn from(e: $t) -> Self {
                CliError::Input(e.to_string())
            }
        })*
    };
}

#[doc = include_str!("../../../book/src/introduction.md")]
pub mod book_introduction {}
#[doc = include_str!("../../../book/src/quivers.md")]
pub mod book_quivers {}
#[doc = include_str!("../../../book/src/characters.md")]
pub mod book_characters {}
#[doc = include_str!("../../../book/src/shuffle.md")]
pub mod book_shuffle {}
#[doc = include_str!("../../../book/src/loop_algebras.md")]
pub mod book_loop_algebras {}
#[doc = include_str!("../../../book/src/representations.md")]
pub mod book_representations {}
#[doc = include_str!("../../../book/src/cli.md")]
pub mod book_cli {}

input_error!(
    quiver_core::QuiverError,
    weyl_braid::WeylError,
    series::SeriesError,
    shuffle::ShuffleError,
    loop_env::LoopError,
    prep_rep::RepError
);
