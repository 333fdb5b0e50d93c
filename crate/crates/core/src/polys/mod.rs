//! Exact rings used throughout: integer polynomials, the trace engine ring,
//! quadratic orders for root screening, `ℤ[ω]`, and the sextic number field.

mod cyclo;
mod int_poly;
mod numfield;
mod quad_ext;
mod quad_order;

pub use cyclo::CycloElem;
pub use int_poly::IntPoly;
pub use numfield::{dot, Mat3, NumFieldElem, Vec3, FIELD_DEGREE};
pub use quad_ext::{Mat2, QuadExtElem};
pub use quad_order::{QuadOrder, QuadOrderElem};

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PolyError {
    #[error("division by zero")]
    DivisionByZero,
    #[error("not divisible")]
    NotDivisible,
    #[error("pivot not invertible: shares factor {gcd} with the modulus")]
    NotInvertible { gcd: String },
    #[error("malformed polynomial list: {0}")]
    Parse(String),
}
