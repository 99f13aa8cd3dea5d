//! The oriented tangle category: sign words as objects, sliced diagrams as
//! morphisms, plus the equivalence moves and seeded generators used to
//! exercise them.

mod diagram;
pub mod moves;
pub mod random;
mod word;

pub use diagram::{Generator, SlicedDiagram, TangleError, ValidationError};
pub use moves::{apply_move, enumerate_moves, insert_kink, random_equivalent, Bend, Direction, Move};
pub use word::{Sign, SignWord};
