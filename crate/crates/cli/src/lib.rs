//! Library side of the `oddform` command-line tool: file schemas and the
//! command implementations, kept out of `main.rs` so they are testable.

pub mod error;
pub mod formfile;
pub mod run;
pub mod solve;
pub mod verify;

pub use error::CliError;
pub use formfile::{Backend, FormFile, ScalarKind, SystemFile, TermRecord};
