pub mod catalog;
pub mod cli;
pub mod error;
pub mod exact;
pub mod fes;
pub mod gallery;
pub mod instances;
pub mod oracle;
pub mod scott;
pub mod verify;

pub use error::{Error, Result};
