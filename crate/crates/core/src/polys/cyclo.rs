use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

/// Element `m + n·ω` of `ℤ[ω]`, `ω = exp(iπ/3)`, so `ω² = ω - 1`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Default)]
pub struct CycloElem {
    pub m: i64,
    pub n: i64,
}

impl CycloElem {
    pub const ZERO: CycloElem = CycloElem { m: 0, n: 0 };
    pub const ONE: CycloElem = CycloElem { m: 1, n: 0 };
    pub const OMEGA: CycloElem = CycloElem { m: 0, n: 1 };

    pub const fn new(m: i64, n: i64) -> Self {
        CycloElem { m, n }
    }

    /// `ω^k` for any integer `k`.
    pub fn omega_pow(k: i64) -> Self {
        (0..k.rem_euclid(6)).fold(Self::ONE, |acc, _| acc * Self::OMEGA)
    }

    pub fn conj(self) -> Self {
        CycloElem::new(self.m + self.n, -self.n)
    }

    /// The imaginary part vanishes exactly when `n = 0`.
    pub fn as_integer(self) -> Option<i64> {
        (self.n == 0).then_some(self.m)
    }

    pub fn to_complex(self) -> (f64, f64) {
        let h = 3f64.sqrt() / 2.0;
        (self.m as f64 + self.n as f64 / 2.0, self.n as f64 * h)
    }
}

impl fmt::Debug for CycloElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}{:+}ω", self.m, self.n)
    }
}

impl Add for CycloElem {
    type Output = CycloElem;
    fn add(self, r: CycloElem) -> CycloElem {
        CycloElem::new(self.m + r.m, self.n + r.n)
    }
}

impl Sub for CycloElem {
    type Output = CycloElem;
    fn sub(self, r: CycloElem) -> CycloElem {
        CycloElem::new(self.m - r.m, self.n - r.n)
    }
}

impl Neg for CycloElem {
    type Output = CycloElem;
    fn neg(self) -> CycloElem {
        CycloElem::new(-self.m, -self.n)
    }
}

impl Mul for CycloElem {
    type Output = CycloElem;
    fn mul(self, r: CycloElem) -> CycloElem {
        let nn = self.n * r.n;
        CycloElem::new(self.m * r.m - nn, self.m * r.n + self.n * r.m + nn)
    }
}

impl std::iter::Sum for CycloElem {
    fn sum<I: Iterator<Item = CycloElem>>(iter: I) -> Self {
        iter.fold(CycloElem::ZERO, |a, b| a + b)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn sixth_root_of_unity() {
        assert_eq!(CycloElem::omega_pow(6), CycloElem::ONE);
        assert_eq!(CycloElem::omega_pow(3), -CycloElem::ONE);
        assert_eq!(CycloElem::omega_pow(-1), CycloElem::OMEGA.conj());
        assert_eq!(CycloElem::OMEGA * CycloElem::OMEGA.conj(), CycloElem::ONE);
    }

    #[test]
    fn complex_embedding_matches() {
        let z = CycloElem::new(2, -3) * CycloElem::new(-1, 5);
        let (a, b) = CycloElem::new(2, -3).to_complex();
        let (c, d) = CycloElem::new(-1, 5).to_complex();
        let (re, im) = z.to_complex();
        assert!((re - (a * c - b * d)).abs() < 1e-12);
        assert!((im - (a * d + b * c)).abs() < 1e-12);
    }
}
