//! Parsing, sampling fixtures and the verification sweep behind the `ga`
//! command-line tool.

pub mod commands;
pub mod fixtures;
pub mod parse;
pub mod seeds;
pub mod verify;
