//! Binary matroid toolkit.
//!
//! The crate is organised in layers. [`gf2`] holds word-level GF(2) linear
//! algebra and is the only module that touches raw bits. [`matroid`] builds
//! labelled binary matroids in standard form `[I_r | D]` on top of it, with
//! rank, duality, minors, circuits and connectivity. [`iso`] provides
//! canonical forms, isomorphism bijections and minor testing with witnesses.
//! [`generate`] enumerates 3-connected single-element extensions and
//! coextensions and runs the splitter-pruned census. [`catalog`] constructs
//! the named matroids used throughout, and [`verify`] binds every published
//! table and identity to an executable, replayable check.

#![forbid(unsafe_code)]

pub mod catalog;
pub mod error;
pub mod generate;
pub mod gf2;
pub mod iso;
pub mod matroid;
pub mod util;
pub mod verify;

pub use error::{Error, Result};
pub use gf2::{BitMatrix, BitVec};
pub use matroid::{BinaryMatroid, Separation};
