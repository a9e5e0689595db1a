pub mod classify;
pub mod cli;
pub mod cyclo;
pub mod error;
pub mod groupalg;
pub mod groups;
pub mod linalg;
pub mod monomial;
pub mod mystic;
pub mod qpoly;
pub mod verify;

pub use error::{Error, Result};
