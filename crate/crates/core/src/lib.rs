//! Exact evaluation of sliced oriented tangle diagrams.
//!
//! The crate is organised around a small tower: [`ring`] provides Laurent
//! polynomials over arbitrary-precision integers and dense matrices over them;
//! [`cobordism`] implements 1-dimensional cobordisms (perfect matchings with
//! free circles) and their finite-dimensional evaluation; [`tangle`] implements
//! sign words, sliced diagrams, moves and braid closures; [`evaluator`] turns a
//! diagram into a matrix slice by slice and derives link invariants from the
//! scalar case; [`kz`] integrates the Knizhnik-Zamolodchikov connection along
//! braid paths in the configuration space of points in the plane.
//!
//! Everything is `no_std` + `alloc`; the only float work (in [`kz`]) goes
//! through `libm`.

#![no_std]
#![deny(unsafe_code)]

extern crate alloc;

pub mod cobordism;
pub mod conventions;
pub mod evaluator;
pub mod kz;
pub mod ring;
pub mod tangle;

pub use evaluator::{default_theory, eval, link_invariant, TheoryData};
pub use ring::{LaurentPoly, RingMatrix, Var};
pub use tangle::{Generator, Sign, SignWord, SlicedDiagram};
