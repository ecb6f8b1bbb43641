pub mod braid;
pub mod error;
pub mod halftwist;
pub mod link;
pub mod monodromy;
pub mod suite;

pub use error::{Error, Result};
