//! Computational toolkit for finite-dimensional local algebras over prime
//! fields and their finite-length modules.

pub mod error;
pub mod exactla;
pub mod closures;
pub mod flmod;
pub mod gencrit;
pub mod matlis;
pub mod oracle;
pub mod presentation;
pub mod ring;

pub use error::{Error, Result};
