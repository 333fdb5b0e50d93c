//! The trace engine ring `ℤ[λ][s]/(s² + λs + 1)` and 2×2 matrices over it.
//!
//! The generators are `X = [[0,1],[-1,0]]` and `Y = [[0,s],[λ+s,1]]`, giving
//! `tr X = 0`, `tr Y = 1`, `tr XY = λ` and `det X = det Y = 1`.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use super::IntPoly;

/// `p + q·s` with `s² = -λs - 1`.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct QuadExtElem {
    pub p: IntPoly,
    pub q: IntPoly,
}

impl QuadExtElem {
    pub fn new(p: IntPoly, q: IntPoly) -> Self {
        QuadExtElem { p, q }
    }

    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::from_poly(IntPoly::one())
    }

    pub fn from_poly(p: IntPoly) -> Self {
        QuadExtElem {
            p,
            q: IntPoly::zero(),
        }
    }

    pub fn s() -> Self {
        QuadExtElem {
            p: IntPoly::zero(),
            q: IntPoly::one(),
        }
    }

    pub fn is_zero(&self) -> bool {
        self.p.is_zero() && self.q.is_zero()
    }

    /// The involution `s ↦ -λ - s` (the other root of `s² + λs + 1`).
    pub fn conjugate(&self) -> Self {
        QuadExtElem {
            p: &self.p - &(&self.q * &IntPoly::lambda()),
            q: -&self.q,
        }
    }

    pub fn norm(&self) -> Self {
        self * &self.conjugate()
    }

    /// Multiplication by `s`: `(p + qs)s = -q + (p - λq)s`.
    pub fn mul_s(&self) -> Self {
        QuadExtElem {
            p: -&self.q,
            q: &self.p - &self.q.shift(1),
        }
    }

    /// Multiplication by `λ + s`: `(p + qs)(λ + s) = (λp - q) + ps`.
    pub fn mul_lambda_plus_s(&self) -> Self {
        QuadExtElem {
            p: &self.p.shift(1) - &self.q,
            q: self.p.clone(),
        }
    }
}

impl fmt::Debug for QuadExtElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}) + ({})·s", self.p, self.q)
    }
}

impl Add for &QuadExtElem {
    type Output = QuadExtElem;
    fn add(self, rhs: &QuadExtElem) -> QuadExtElem {
        QuadExtElem {
            p: &self.p + &rhs.p,
            q: &self.q + &rhs.q,
        }
    }
}

impl Sub for &QuadExtElem {
    type Output = QuadExtElem;
    fn sub(self, rhs: &QuadExtElem) -> QuadExtElem {
        QuadExtElem {
            p: &self.p - &rhs.p,
            q: &self.q - &rhs.q,
        }
    }
}

impl Neg for &QuadExtElem {
    type Output = QuadExtElem;
    fn neg(self) -> QuadExtElem {
        QuadExtElem {
            p: -&self.p,
            q: -&self.q,
        }
    }
}

impl Mul for &QuadExtElem {
    type Output = QuadExtElem;
    fn mul(self, rhs: &QuadExtElem) -> QuadExtElem {
        let qq = &self.q * &rhs.q;
        let cross = &(&self.p * &rhs.q) + &(&self.q * &rhs.p);
        QuadExtElem {
            p: &(&self.p * &rhs.p) - &qq,
            q: &cross - &(&qq * &IntPoly::lambda()),
        }
    }
}

/// 2×2 matrix over [`QuadExtElem`], row-major.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Mat2 {
    pub m: [[QuadExtElem; 2]; 2],
}

impl Mat2 {
    pub fn new(m: [[QuadExtElem; 2]; 2]) -> Self {
        Mat2 { m }
    }

    pub fn identity() -> Self {
        Mat2::new([
            [QuadExtElem::one(), QuadExtElem::zero()],
            [QuadExtElem::zero(), QuadExtElem::one()],
        ])
    }

    /// `X = [[0,1],[-1,0]]`.
    pub fn gen_x() -> Self {
        Mat2::new([
            [QuadExtElem::zero(), QuadExtElem::one()],
            [-&QuadExtElem::one(), QuadExtElem::zero()],
        ])
    }

    /// `Y = [[0,s],[λ+s,1]]`.
    pub fn gen_y() -> Self {
        Mat2::new([
            [QuadExtElem::zero(), QuadExtElem::s()],
            [
                QuadExtElem::new(IntPoly::lambda(), IntPoly::one()),
                QuadExtElem::one(),
            ],
        ])
    }

    pub fn trace(&self) -> QuadExtElem {
        &self.m[0][0] + &self.m[1][1]
    }

    pub fn det(&self) -> QuadExtElem {
        &(&self.m[0][0] * &self.m[1][1]) - &(&self.m[0][1] * &self.m[1][0])
    }

    pub fn pow(&self, mut exp: u32) -> Mat2 {
        let mut base = self.clone();
        let mut acc = Mat2::identity();
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
}

impl Mul for &Mat2 {
    type Output = Mat2;
    fn mul(self, rhs: &Mat2) -> Mat2 {
        let a = &self.m;
        let b = &rhs.m;
        let entry = |i: usize, j: usize| &(&a[i][0] * &b[0][j]) + &(&a[i][1] * &b[1][j]);
        Mat2::new([[entry(0, 0), entry(0, 1)], [entry(1, 0), entry(1, 1)]])
    }
}
