//! Exact computation in free dendriform and Zinbiel algebras.
//!
//! The free dendriform algebra has a basis of planar binary trees decorated
//! by words in the generators ([`dend`]). Its commutative quotient is the
//! free Zinbiel algebra on words with the half-shuffle ([`zinbiel`]).
//! [`series`] builds truncated graded series with an adjoined unit and the
//! denominator-free exponentials `e(x) = 1 + sum x^{<n}` and
//! `e'(x) = 1 + sum x^{>n}`, their logarithm, and the extraction of the
//! obstruction series `Z` with `e(x)e(y) = e(Z)`.
//!
//! All arithmetic is exact: over the integers or a prime field ([`Ring`]).

pub mod charp;
pub mod dend;
pub mod error;
pub mod json;
pub mod ring;
pub mod series;
pub mod tree;
pub mod zinbiel;

pub use charp::CharPSeries;
pub use dend::matrix::DendMatrix;
pub use dend::{DecoratedTree, DendElem, Generator};
pub use error::{AlgebraError, Result};
pub use ring::{Coeff, Ring};
pub use series::DendSeries;
pub use tree::{enumerate_trees, graft, left_comb, right_comb, Tree};
pub use zinbiel::{ZinbElem, ZinbWord};
