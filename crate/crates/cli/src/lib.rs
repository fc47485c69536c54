//! Command-line front end for `psi-umbral`: family specs, polynomial
//! expressions, identity suites and text/JSON/CSV rendering.

pub mod app;
pub mod checks;
pub mod expr;

pub use app::{run, Outcome};
pub use expr::{format_poly, parse_poly, ParseError};
