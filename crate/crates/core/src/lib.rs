//! Exact verification toolkit for tensor restrictions, degenerations and
//! partial degenerations, with aided-rank bounds, compressibility checks and
//! orbit-dimension computations.

pub mod aided_rank;
pub mod algebra;
pub mod compress;
pub mod degeneration;
pub mod error;
pub mod interpolation;
pub mod io;
pub mod orbits;
pub mod random;
pub mod suite;
pub mod tensor;

pub use error::{Error, Result};

#[cfg(doctest)]
#[doc = include_str!("../../../README.md")]
mod readme {}

#[cfg(doctest)]
mod book {
    #[doc = include_str!("../../../book/src/introduction.md")]
    mod introduction {}
    #[doc = include_str!("../../../book/src/exact-arithmetic.md")]
    mod exact_arithmetic {}
    #[doc = include_str!("../../../book/src/tensors.md")]
    mod tensors {}
    #[doc = include_str!("../../../book/src/degenerations.md")]
    mod degenerations {}
    #[doc = include_str!("../../../book/src/interpolation.md")]
    mod interpolation {}
    #[doc = include_str!("../../../book/src/aided-rank.md")]
    mod aided_rank {}
    #[doc = include_str!("../../../book/src/compressibility.md")]
    mod compressibility {}
    #[doc = include_str!("../../../book/src/orbits.md")]
    mod orbits {}
    #[doc = include_str!("../../../book/src/files-and-cli.md")]
    mod files_and_cli {}
}
