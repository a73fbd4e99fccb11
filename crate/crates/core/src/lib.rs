//! Homological algebra over bound quiver algebras: exact linear algebra over
//! prime fields, representations and morphisms, minimal resolutions, gluing
//! of relative resolutions along short exact sequences, Auslander-type
//! conditions and approximation presentations.

pub mod approx;
pub mod auscond;
pub mod cli;
pub mod error;
pub mod fixtures;
pub mod glue;
pub mod linalg;
pub mod quiver;
pub mod resolve;

pub use error::{Error, Result};
