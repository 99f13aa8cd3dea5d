//! The plumbing behind the `tangle` binary, split out so tests can drive it
//! directly: text formats ([`formats`]), output rendering ([`report`]), and
//! the self-check suites ([`suites`]).

pub mod formats;
pub mod report;
pub mod suites;
