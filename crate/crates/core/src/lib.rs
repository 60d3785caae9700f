//! Primitive Pythagorean triples whose legs differ by a fixed odd gap.
//!
//! The hypotenuses for gap `N` are read off the solutions of
//! `p^2 - 2q^2 = +-N`: each fundamental solution in `[1 + sqrt2, 3 + 2sqrt2)`
//! seeds an orbit under the unit `1 + sqrt2`, the generator pair is
//! `(r, s) = (p + q, q)`, and the hypotenuses along an orbit obey
//! `z_k = 6 z_{k-1} - z_{k-2}`. For gap 7 both seed sequences (5, 13, 73, ...
//! and 5, 17, 97, ...) are the two halves of one two-sided orbit.
//!
//! All arithmetic is exact. [`oracle`] is an independent brute-force scan
//! used to check the whole pipeline.

pub mod error;
pub mod oracle;
pub mod pell;
pub mod quadring;
pub mod sequence;
pub mod triples;

pub use error::{Error, Result};
pub use pell::{fundamental_solutions, Direction, NormSign, PellSolution};
pub use quadring::QuadRat;
pub use sequence::{RecurrenceSpec, SequenceRow};
pub use triples::{ParamPair, PythTriple};
