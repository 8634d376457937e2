//! Squarefree lexsegment ideals: closed-form minimal primary decompositions,
//! homological invariants and the sequentially Cohen-Macaulay test, each
//! cross-checked against brute-force oracles.
//!
//! Variables are 1-based: `x_1 > x_2 > ... > x_n` in lex order.

pub mod complexes;
pub mod error;
pub mod expr;
pub mod homology;
pub mod ideals;
pub mod lexseg;
pub mod linalg;
pub mod monomials;
pub mod verify;

pub use complexes::{complex_of_ideal, decompose_via_facets, FVector, SimplicialComplex};
pub use error::{Error, Result};
pub use homology::{BettiTable, Homology, HomologyProfile, Subject};
pub use ideals::{Decomposition, MonomialIdeal, PrimeSupport};
pub use linalg::Field;
pub use monomials::{Ring, SqfMonomial};
