//! Arithmetic in `K = ℚ[t]/(t⁶ - 3t³ + 1)` and 3×3 matrices over it.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use super::PolyError;

/// Degree of the defining polynomial.
pub const FIELD_DEGREE: usize = 6;

/// Ascending-coefficient polynomial over ℚ, trimmed.
#[derive(Clone, PartialEq, Eq, Debug, Default)]
pub(crate) struct RatPoly(pub Vec<BigRational>);

impl RatPoly {
    fn trimmed(mut v: Vec<BigRational>) -> Self {
        while v.last().is_some_and(Zero::is_zero) {
            v.pop();
        }
        RatPoly(v)
    }

    fn degree(&self) -> Option<usize> {
        self.0.len().checked_sub(1)
    }

    fn is_zero(&self) -> bool {
        self.0.is_empty()
    }

    fn sub(&self, o: &RatPoly) -> RatPoly {
        let n = self.0.len().max(o.0.len());
        let z = BigRational::zero();
        RatPoly::trimmed(
            (0..n)
                .map(|i| self.0.get(i).unwrap_or(&z) - o.0.get(i).unwrap_or(&z))
                .collect(),
        )
    }

    fn mul(&self, o: &RatPoly) -> RatPoly {
        if self.is_zero() || o.is_zero() {
            return RatPoly::default();
        }
        let mut v = vec![BigRational::zero(); self.0.len() + o.0.len() - 1];
        for (i, a) in self.0.iter().enumerate() {
            for (j, b) in o.0.iter().enumerate() {
                v[i + j] += a * b;
            }
        }
        RatPoly::trimmed(v)
    }

    fn div_rem(&self, d: &RatPoly) -> (RatPoly, RatPoly) {
        let dd = d.degree().expect("division by zero polynomial");
        let lead = &d.0[dd];
        let mut rem = self.0.clone();
        let mut quot = vec![BigRational::zero(); rem.len().saturating_sub(dd)];
        while rem.len() > dd {
            let k = rem.len() - 1 - dd;
            let q = &rem[rem.len() - 1] / lead;
            for (j, c) in d.0.iter().enumerate() {
                rem[k + j] -= &q * c;
            }
            quot[k] = q;
            rem.pop();
            while rem.last().is_some_and(Zero::is_zero) {
                rem.pop();
            }
        }
        (RatPoly::trimmed(quot), RatPoly::trimmed(rem))
    }
}

fn modulus() -> RatPoly {
    RatPoly::trimmed(
        [1, 0, 0, -3, 0, 0, 1]
            .iter()
            .map(|&c| BigRational::from_integer(BigInt::from(c)))
            .collect(),
    )
}

/// Residue class of a rational polynomial modulo `t⁶ - 3t³ + 1`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct NumFieldElem {
    coeffs: [BigRational; FIELD_DEGREE],
}

impl NumFieldElem {
    pub fn zero() -> Self {
        NumFieldElem {
            coeffs: std::array::from_fn(|_| BigRational::zero()),
        }
    }

    pub fn one() -> Self {
        Self::from_int(1)
    }

    pub fn from_int(c: i64) -> Self {
        let mut z = Self::zero();
        z.coeffs[0] = BigRational::from_integer(c.into());
        z
    }

    /// The class of `t`.
    pub fn t() -> Self {
        Self::from_ints(&[0, 1])
    }

    /// Reduces an integer polynomial of any degree (ascending coefficients).
    pub fn from_ints(coeffs: &[i64]) -> Self {
        Self::from_rationals(
            coeffs
                .iter()
                .map(|&c| BigRational::from_integer(c.into()))
                .collect(),
        )
    }

    pub fn from_rationals(mut v: Vec<BigRational>) -> Self {
        // t^k = 3 t^(k-3) - t^(k-6) for k >= 6
        for k in (FIELD_DEGREE..v.len()).rev() {
            let c = std::mem::take(&mut v[k]);
            if c.is_zero() {
                continue;
            }
            v[k - 3] += &c * BigRational::from_integer(3.into());
            v[k - 6] -= c;
        }
        v.resize(FIELD_DEGREE, BigRational::zero());
        NumFieldElem {
            coeffs: std::array::from_fn(|i| v[i].clone()),
        }
    }

    pub fn coeffs(&self) -> &[BigRational; FIELD_DEGREE] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Zero::is_zero)
    }

    pub fn is_one(&self) -> bool {
        *self == Self::one()
    }

    fn as_poly(&self) -> RatPoly {
        RatPoly::trimmed(self.coeffs.to_vec())
    }

    /// Inverse by the extended Euclidean algorithm against the modulus.
    ///
    /// If the residue shares a non-trivial factor with the modulus, the error
    /// carries that common factor (monic), which would mean the modulus is
    /// reducible.
    pub fn inv(&self) -> Result<Self, PolyError> {
        if self.is_zero() {
            return Err(PolyError::DivisionByZero);
        }
        // invariant: old_s * self ≡ old_r (mod f)
        let (mut old_r, mut r) = (self.as_poly(), modulus());
        let (mut old_s, mut s) = (RatPoly(vec![BigRational::one()]), RatPoly::default());
        while !r.is_zero() {
            let (q, rem) = old_r.div_rem(&r);
            old_r = std::mem::replace(&mut r, rem);
            let next_s = old_s.sub(&q.mul(&s));
            old_s = std::mem::replace(&mut s, next_s);
        }
        if old_r.degree() != Some(0) {
            let lead = old_r.0.last().cloned().unwrap_or_else(BigRational::one);
            let monic: Vec<BigRational> = old_r.0.iter().map(|c| c / &lead).collect();
            return Err(PolyError::NotInvertible {
                gcd: NumFieldElem::fmt_poly(&monic),
            });
        }
        let g = &old_r.0[0];
        Ok(Self::from_rationals(
            old_s.0.iter().map(|c| c / g).collect(),
        ))
    }

    fn fmt_poly(coeffs: &[BigRational]) -> String {
        let mut out = String::new();
        for (i, c) in coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let mag = c.abs();
            if c.is_negative() {
                out.push('-');
            } else if !out.is_empty() {
                out.push('+');
            }
            let unit = mag.is_one();
            if i == 0 || !unit {
                out.push_str(&mag.to_string());
                if i > 0 {
                    out.push('*');
                }
            }
            match i {
                0 => {}
                1 => out.push('t'),
                _ => out.push_str(&format!("t^{i}")),
            }
        }
        if out.is_empty() {
            out.push('0');
        }
        out
    }
}

impl fmt::Display for NumFieldElem {
    /// GAP-style form, e.g. `-t^5+3*t^2`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&Self::fmt_poly(&self.coeffs))
    }
}

impl fmt::Debug for NumFieldElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl Add for &NumFieldElem {
    type Output = NumFieldElem;
    fn add(self, r: &NumFieldElem) -> NumFieldElem {
        NumFieldElem {
            coeffs: std::array::from_fn(|i| &self.coeffs[i] + &r.coeffs[i]),
        }
    }
}

impl Sub for &NumFieldElem {
    type Output = NumFieldElem;
    fn sub(self, r: &NumFieldElem) -> NumFieldElem {
        NumFieldElem {
            coeffs: std::array::from_fn(|i| &self.coeffs[i] - &r.coeffs[i]),
        }
    }
}

impl Neg for &NumFieldElem {
    type Output = NumFieldElem;
    fn neg(self) -> NumFieldElem {
        NumFieldElem {
            coeffs: std::array::from_fn(|i| -&self.coeffs[i]),
        }
    }
}

impl Mul for &NumFieldElem {
    type Output = NumFieldElem;
    fn mul(self, r: &NumFieldElem) -> NumFieldElem {
        let mut v = vec![BigRational::zero(); 2 * FIELD_DEGREE - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in r.coeffs.iter().enumerate() {
                if !b.is_zero() {
                    v[i + j] += a * b;
                }
            }
        }
        NumFieldElem::from_rationals(v)
    }
}

/// Column (or row) vector of length 3.
pub type Vec3 = [NumFieldElem; 3];

pub fn dot(a: &Vec3, b: &Vec3) -> NumFieldElem {
    a.iter()
        .zip(b)
        .fold(NumFieldElem::zero(), |acc, (x, y)| &acc + &(x * y))
}

/// 3×3 matrix over the number field, row-major.
#[derive(Clone, PartialEq, Eq)]
pub struct Mat3 {
    pub m: [[NumFieldElem; 3]; 3],
}

impl Mat3 {
    pub fn new(m: [[NumFieldElem; 3]; 3]) -> Self {
        Mat3 { m }
    }

    pub fn identity() -> Self {
        Mat3::new(std::array::from_fn(|i| {
            std::array::from_fn(|j| {
                if i == j {
                    NumFieldElem::one()
                } else {
                    NumFieldElem::zero()
                }
            })
        }))
    }

    pub fn from_ints(rows: [[i64; 3]; 3]) -> Self {
        Mat3::new(rows.map(|r| r.map(NumFieldElem::from_int)))
    }

    pub fn is_identity(&self) -> bool {
        *self == Mat3::identity()
    }

    pub fn trace(&self) -> NumFieldElem {
        &(&self.m[0][0] + &self.m[1][1]) + &self.m[2][2]
    }

    pub fn det(&self) -> NumFieldElem {
        let m = &self.m;
        let minor = |r1: usize, r2: usize, c1: usize, c2: usize| {
            &(&m[r1][c1] * &m[r2][c2]) - &(&m[r1][c2] * &m[r2][c1])
        };
        let t0 = &m[0][0] * &minor(1, 2, 1, 2);
        let t1 = &m[0][1] * &minor(1, 2, 0, 2);
        let t2 = &m[0][2] * &minor(1, 2, 0, 1);
        &(&t0 - &t1) + &t2
    }

    pub fn pow(&self, exp: u32) -> Mat3 {
        (0..exp).fold(Mat3::identity(), |acc, _| &acc * self)
    }

    pub fn mul_vec(&self, v: &Vec3) -> Vec3 {
        std::array::from_fn(|i| dot(&self.m[i], v))
    }

    /// Row vector times matrix.
    pub fn vec_mul(v: &Vec3, m: &Mat3) -> Vec3 {
        std::array::from_fn(|j| {
            (0..3).fold(NumFieldElem::zero(), |acc, i| &acc + &(&v[i] * &m.m[i][j]))
        })
    }

    /// Rank by Gaussian elimination with exact pivot inversion.
    pub fn rank(&self) -> Result<usize, PolyError> {
        let mut rows: Vec<Vec<NumFieldElem>> = self.m.iter().map(|r| r.to_vec()).collect();
        let mut rank = 0;
        for col in 0..3 {
            let Some(pivot) = (rank..3).find(|&r| !rows[r][col].is_zero()) else {
                continue;
            };
            rows.swap(rank, pivot);
            let inv = rows[rank][col].inv()?;
            for r in 0..3 {
                if r == rank || rows[r][col].is_zero() {
                    continue;
                }
                let factor = &rows[r][col] * &inv;
                for c in col..3 {
                    let delta = &factor * &rows[rank][c];
                    rows[r][c] = &rows[r][c] - &delta;
                }
            }
            rank += 1;
        }
        Ok(rank)
    }
}

impl fmt::Debug for Mat3 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let rows: Vec<String> = self
            .m
            .iter()
            .map(|r| {
                let cells: Vec<String> = r.iter().map(ToString::to_string).collect();
                format!("[ {} ]", cells.join(", "))
            })
            .collect();
        write!(f, "[ {} ]", rows.join(", "))
    }
}

impl Add for &Mat3 {
    type Output = Mat3;
    fn add(self, r: &Mat3) -> Mat3 {
        Mat3::new(std::array::from_fn(|i| {
            std::array::from_fn(|j| &self.m[i][j] + &r.m[i][j])
        }))
    }
}

impl Sub for &Mat3 {
    type Output = Mat3;
    fn sub(self, r: &Mat3) -> Mat3 {
        Mat3::new(std::array::from_fn(|i| {
            std::array::from_fn(|j| &self.m[i][j] - &r.m[i][j])
        }))
    }
}

impl Mul for &Mat3 {
    type Output = Mat3;
    fn mul(self, r: &Mat3) -> Mat3 {
        Mat3::new(std::array::from_fn(|i| {
            std::array::from_fn(|j| {
                (0..3).fold(NumFieldElem::zero(), |acc, k| {
                    &acc + &(&self.m[i][k] * &r.m[k][j])
                })
            })
        }))
    }
}
