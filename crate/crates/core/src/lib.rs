pub mod error;
pub mod exactcore;

pub use error::{Error, Result};
pub mod splie;
pub mod weylosc;
pub mod orbits;
pub mod sampling;
pub mod varieties;
pub mod cherednik;
pub mod cli;
