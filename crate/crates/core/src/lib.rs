#![allow(clippy::needless_range_loop)]

pub mod algebra;
pub mod checks;
pub mod data;
pub mod error;
pub mod families;
pub mod group;
pub mod ppoly;
pub mod reptheory;
pub mod rootsystem;
pub mod subsystems;
pub mod weyl;

pub use error::{Error, Result};
