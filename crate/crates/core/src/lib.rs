//! Exact computer algebra for noncommutative Bell polynomials.
//!
//! The crate covers:
//! - combinatorial objects ([`Word`], [`Permutation`], [`Composition`],
//!   [`SetPartition`], [`BinaryTree`]) and exact q-polynomials ([`QPoly`]);
//! - sparse linear combinations over tagged bases ([`freemod`]);
//! - the Hopf algebras FQSym, WQSym and QSym with their dendriform
//!   half-products ([`fqsym`], [`wqsym`], [`qsym`]);
//! - classical, q-deformed and free Bell polynomials ([`bell`]);
//! - Bell classes of permutations, their posets and the P basis ([`bellhopf`]);
//! - invariant suites used by the command-line `verify` command ([`verify`]).
//!
//! All arithmetic is exact (`i64` or integer polynomials in `q`).

pub mod bell;
pub mod bellhopf;
pub mod composition;
pub mod error;
pub mod fqsym;
pub mod freemod;
pub mod partition;
pub mod qpoly;
pub mod qsym;
pub mod tree;
pub mod verify;
pub mod word;
pub mod wqsym;

pub use composition::Composition;
pub use error::{Error, Result};
pub use freemod::{Basis, Coeff, LinComb, Tensor2};
pub use partition::SetPartition;
pub use qpoly::QPoly;
pub use tree::BinaryTree;
pub use word::{Permutation, Word};
pub use wqsym::PackedWord;
