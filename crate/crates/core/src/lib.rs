//! Exact computations for generalised triangle groups
//! `⟨x, y | x² = y³ = W(x, y)² = 1⟩`.
//!
//! - [`words`]: words in `ℤ₂ ∗ ℤ₃`, block lists, canonical forms, parsing.
//! - [`polys`]: exact rings (integer polynomials, quadratic orders, `ℤ[ω]`,
//!   the sextic field `ℚ[t]/(t⁶-3t³+1)`) and small matrices over them.
//! - [`trace`]: trace polynomials and their coefficient identities.
//! - [`search`]: exhaustive parallel search for words with a prescribed trace
//!   polynomial.
//! - [`smallcancel`]: pieces, non-pieces and non-piece decompositions.
//! - [`repcheck`]: exact check of a 3-dimensional representation.
//! - [`tables`]: the reference word lists the verifiers run against.

pub mod polys;
pub mod repcheck;
pub mod search;
pub mod smallcancel;
pub mod tables;
pub mod trace;
pub mod words;

pub use polys::{
    CycloElem, IntPoly, Mat2, Mat3, NumFieldElem, QuadExtElem, QuadOrder, QuadOrderElem,
};
pub use search::{run_search, ScreenMode, SearchParams, SearchReport};
pub use smallcancel::{Decomposition, PieceIndex};
pub use trace::{target_poly, trace_poly, ElementaryForm};
pub use words::{parse_word, BlockList, BlockType, Fragment, Interval, Letter, Word, WordError};
