pub mod algebra;
pub mod bases;
pub mod error;
pub mod exec;
pub mod fillings;
pub mod operators;
pub mod shapes;
pub mod verify;

pub use error::{Error, Result};
