//! Command-line front end and JSON formats for `steinberg-core`.

pub mod cli;
pub mod json;
pub mod table;
pub mod verify;

pub use cli::{run, Outcome};
