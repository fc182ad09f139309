//! Serialization, drawings, the example gallery and the command-line front end.

pub mod cli;
pub mod cloud;
pub mod gallery;
pub mod json;
pub mod svg;
