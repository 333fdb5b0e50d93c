//! Dense univariate polynomials over arbitrary-precision integers.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

use super::quad_order::QuadOrderElem;
use super::PolyError;

/// Polynomial in `λ` with integer coefficients, stored in ascending order.
///
/// The coefficient vector never has trailing zeros, so the zero polynomial is
/// the empty vector and structural equality is polynomial equality.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct IntPoly {
    coeffs: Vec<BigInt>,
}

impl IntPoly {
    pub fn zero() -> Self {
        IntPoly { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Self::constant(1)
    }

    pub fn constant<T: Into<BigInt>>(c: T) -> Self {
        Self::from_coeffs(vec![c.into()])
    }

    /// The monomial `λ`.
    pub fn lambda() -> Self {
        Self::from_i64(&[0, 1])
    }

    pub fn monomial<T: Into<BigInt>>(c: T, degree: usize) -> Self {
        let mut coeffs = vec![BigInt::zero(); degree + 1];
        coeffs[degree] = c.into();
        Self::from_coeffs(coeffs)
    }

    pub fn from_coeffs(mut coeffs: Vec<BigInt>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        IntPoly { coeffs }
    }

    pub fn from_i64(coeffs: &[i64]) -> Self {
        Self::from_coeffs(coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    /// Coefficient of `λ^i`, zero beyond the degree.
    pub fn coeff(&self, i: usize) -> BigInt {
        self.coeffs.get(i).cloned().unwrap_or_default()
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree, or `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn leading(&self) -> Option<&BigInt> {
        self.coeffs.last()
    }

    pub fn is_monic(&self) -> bool {
        self.leading().is_some_and(One::is_one)
    }

    /// True when only even (`want_odd = false`) or only odd powers occur.
    pub fn has_parity(&self, want_odd: bool) -> bool {
        self.coeffs
            .iter()
            .enumerate()
            .all(|(i, c)| c.is_zero() || (i % 2 == 1) == want_odd)
    }

    pub fn scale(&self, k: &BigInt) -> Self {
        Self::from_coeffs(self.coeffs.iter().map(|c| c * k).collect())
    }

    /// Multiply by `λ^k`.
    pub fn shift(&self, k: usize) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        let mut coeffs = vec![BigInt::zero(); k];
        coeffs.extend(self.coeffs.iter().cloned());
        IntPoly { coeffs }
    }

    pub fn pow(&self, mut exp: u32) -> Self {
        let mut base = self.clone();
        let mut acc = Self::one();
        while exp > 0 {
            if exp & 1 == 1 {
                acc = &acc * &base;
            }
            exp >>= 1;
            if exp > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    /// Exact quotient `self / den`, failing unless `den` divides `self` in `ℤ[λ]`.
    pub fn div_exact(&self, den: &IntPoly) -> Result<IntPoly, PolyError> {
        let dlen = den.coeffs.len();
        if dlen == 0 {
            return Err(PolyError::DivisionByZero);
        }
        if self.coeffs.len() < dlen {
            return if self.is_zero() {
                Ok(Self::zero())
            } else {
                Err(PolyError::NotDivisible)
            };
        }
        let lead = &den.coeffs[dlen - 1];
        let mut rem = self.coeffs.clone();
        let mut quot = vec![BigInt::zero(); rem.len() - dlen + 1];
        for k in (0..quot.len()).rev() {
            let top = &rem[k + dlen - 1];
            if top.is_zero() {
                continue;
            }
            let (q, r) = top.div_rem(lead);
            if !r.is_zero() {
                return Err(PolyError::NotDivisible);
            }
            for (j, d) in den.coeffs.iter().enumerate() {
                rem[k + j] -= &q * d;
            }
            quot[k] = q;
        }
        if rem.iter().any(|c| !c.is_zero()) {
            return Err(PolyError::NotDivisible);
        }
        Ok(Self::from_coeffs(quot))
    }

    pub fn eval_f64(&self, z: f64) -> f64 {
        self.coeffs
            .iter()
            .rev()
            .fold(0.0, |acc, c| acc * z + c.to_f64().unwrap_or(f64::NAN))
    }

    pub fn eval_int(&self, z: &BigInt) -> BigInt {
        self.coeffs
            .iter()
            .rev()
            .fold(BigInt::zero(), |acc, c| acc * z + c)
    }

    /// Horner evaluation at an element of a quadratic order.
    pub fn eval_quad(&self, at: &QuadOrderElem) -> QuadOrderElem {
        let mut acc = QuadOrderElem::zero(at.order());
        for c in self.coeffs.iter().rev() {
            acc = &(&acc * at) + &QuadOrderElem::from_int(c.clone(), at.order());
        }
        acc
    }

    /// Ascending coefficient list, e.g. `[0,-2,0,1]`.
    pub fn to_list_string(&self) -> String {
        let parts: Vec<String> = self.coeffs.iter().map(ToString::to_string).collect();
        format!("[{}]", parts.join(","))
    }
}

impl fmt::Display for IntPoly {
    /// Pretty form with descending powers, e.g. `λ^7-5λ^5+7λ^3-2λ`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let mag = c.abs();
            if c.is_negative() {
                write!(f, "-")?;
            } else if !first {
                write!(f, "+")?;
            }
            first = false;
            if i == 0 || !mag.is_one() {
                write!(f, "{mag}")?;
            }
            match i {
                0 => {}
                1 => write!(f, "λ")?,
                _ => write!(f, "λ^{i}")?,
            }
        }
        Ok(())
    }
}

impl fmt::Debug for IntPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "IntPoly({self})")
    }
}

impl FromStr for IntPoly {
    type Err = PolyError;

    /// Parses the ascending list form `[c0,c1,...]`.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let inner = s
            .trim()
            .strip_prefix('[')
            .and_then(|r| r.strip_suffix(']'))
            .ok_or_else(|| PolyError::Parse(s.to_string()))?;
        if inner.trim().is_empty() {
            return Ok(Self::zero());
        }
        inner
            .split(',')
            .map(|t| t.trim().parse::<BigInt>())
            .collect::<Result<Vec<_>, _>>()
            .map(Self::from_coeffs)
            .map_err(|_| PolyError::Parse(s.to_string()))
    }
}

impl Add for &IntPoly {
    type Output = IntPoly;
    fn add(self, rhs: &IntPoly) -> IntPoly {
        let (long, short) = if self.coeffs.len() >= rhs.coeffs.len() {
            (self, rhs)
        } else {
            (rhs, self)
        };
        let mut coeffs = long.coeffs.clone();
        for (c, d) in coeffs.iter_mut().zip(&short.coeffs) {
            *c += d;
        }
        IntPoly::from_coeffs(coeffs)
    }
}

impl Sub for &IntPoly {
    type Output = IntPoly;
    fn sub(self, rhs: &IntPoly) -> IntPoly {
        self + &(-rhs)
    }
}

impl Neg for &IntPoly {
    type Output = IntPoly;
    fn neg(self) -> IntPoly {
        IntPoly {
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }
}

impl Mul for &IntPoly {
    type Output = IntPoly;
    fn mul(self, rhs: &IntPoly) -> IntPoly {
        if self.is_zero() || rhs.is_zero() {
            return IntPoly::zero();
        }
        let mut coeffs = vec![BigInt::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                if !b.is_zero() {
                    coeffs[i + j] += a * b;
                }
            }
        }
        IntPoly::from_coeffs(coeffs)
    }
}

macro_rules! forward_owned {
    ($tr:ident, $m:ident) => {
        impl $tr for IntPoly {
            type Output = IntPoly;
            fn $m(self, rhs: IntPoly) -> IntPoly {
                (&self).$m(&rhs)
            }
        }
    };
}
forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

impl Neg for IntPoly {
    type Output = IntPoly;
    fn neg(self) -> IntPoly {
        -&self
    }
}
