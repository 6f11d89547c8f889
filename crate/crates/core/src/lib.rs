pub mod error;
pub mod exact;
pub mod lambda;
pub mod partition;
pub mod repring;
pub mod symfunc;
pub mod symgroup;
pub mod tensor;

pub use error::{Error, Result};
