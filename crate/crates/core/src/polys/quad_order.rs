use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_traits::Zero;

/// Defining relation `u² = a·u + b` of a quadratic order `ℤ[u]`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct QuadOrder {
    pub a: i64,
    pub b: i64,
}

impl QuadOrder {
    /// `ℤ[√2]`: `u² = 2`.
    pub const SQRT2: QuadOrder = QuadOrder { a: 0, b: 2 };
    /// `ℤ[φ]` with `φ = (1+√5)/2`: `u² = u + 1`.
    pub const GOLDEN: QuadOrder = QuadOrder { a: 1, b: 1 };

    pub fn generator(self) -> QuadOrderElem {
        QuadOrderElem {
            a: BigInt::zero(),
            b: BigInt::from(1),
            order: self,
        }
    }

    /// Real value of the generator (the larger root of `u² - a·u - b`).
    pub fn generator_f64(self) -> f64 {
        let (a, b) = (self.a as f64, self.b as f64);
        (a + (a * a + 4.0 * b).sqrt()) / 2.0
    }
}

/// Element `a + b·u` of a quadratic order.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct QuadOrderElem {
    pub a: BigInt,
    pub b: BigInt,
    order: QuadOrder,
}

impl QuadOrderElem {
    pub fn new(a: impl Into<BigInt>, b: impl Into<BigInt>, order: QuadOrder) -> Self {
        QuadOrderElem {
            a: a.into(),
            b: b.into(),
            order,
        }
    }

    pub fn zero(order: QuadOrder) -> Self {
        Self::new(0, 0, order)
    }

    pub fn from_int(a: BigInt, order: QuadOrder) -> Self {
        QuadOrderElem {
            a,
            b: BigInt::zero(),
            order,
        }
    }

    pub fn order(&self) -> QuadOrder {
        self.order
    }

    pub fn is_zero(&self) -> bool {
        self.a.is_zero() && self.b.is_zero()
    }

    fn check(&self, other: &Self) {
        assert_eq!(self.order, other.order, "mixed quadratic orders");
    }
}

impl fmt::Debug for QuadOrderElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{} + {}·u (u²={}u+{})",
            self.a, self.b, self.order.a, self.order.b
        )
    }
}

impl Add for &QuadOrderElem {
    type Output = QuadOrderElem;
    fn add(self, rhs: &QuadOrderElem) -> QuadOrderElem {
        self.check(rhs);
        QuadOrderElem {
            a: &self.a + &rhs.a,
            b: &self.b + &rhs.b,
            order: self.order,
        }
    }
}

impl Sub for &QuadOrderElem {
    type Output = QuadOrderElem;
    fn sub(self, rhs: &QuadOrderElem) -> QuadOrderElem {
        self.check(rhs);
        QuadOrderElem {
            a: &self.a - &rhs.a,
            b: &self.b - &rhs.b,
            order: self.order,
        }
    }
}

impl Neg for &QuadOrderElem {
    type Output = QuadOrderElem;
    fn neg(self) -> QuadOrderElem {
        QuadOrderElem {
            a: -&self.a,
            b: -&self.b,
            order: self.order,
        }
    }
}

impl Mul for &QuadOrderElem {
    type Output = QuadOrderElem;
    fn mul(self, rhs: &QuadOrderElem) -> QuadOrderElem {
        self.check(rhs);
        let bb = &self.b * &rhs.b;
        QuadOrderElem {
            a: &self.a * &rhs.a + &bb * self.order.b,
            b: &self.a * &rhs.b + &self.b * &rhs.a + &bb * self.order.a,
            order: self.order,
        }
    }
}
