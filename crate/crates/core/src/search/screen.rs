//! Cheap necessary conditions for `τ_W = λ(λ²-2)^c(λ⁴-3λ²+1)^e`.
//!
//! The trace recurrence of [`crate::trace`] is replayed with `λ` specialised
//! to a root of the target: `√2` when `c > 0` and `φ` when `e > 0`. Exact mode
//! works in `ℤ[u][s]/(s² + us + 1)` with checked `i64` arithmetic; float mode
//! uses complex doubles and also compares at a generic point.

use std::fmt;
use std::str::FromStr;

use num_complex::Complex64;

use crate::polys::{IntPoly, QuadOrder};
use crate::trace::{target_poly, trace_at};

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash)]
pub enum ScreenMode {
    Float,
    #[default]
    Exact,
    None,
}

impl fmt::Display for ScreenMode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            ScreenMode::Float => "float",
            ScreenMode::Exact => "exact",
            ScreenMode::None => "none",
        })
    }
}

impl FromStr for ScreenMode {
    type Err = String;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "float" => Ok(ScreenMode::Float),
            "exact" => Ok(ScreenMode::Exact),
            "none" => Ok(ScreenMode::None),
            other => Err(format!(
                "unknown screen mode '{other}' (expected float, exact or none)"
            )),
        }
    }
}

/// `a + b·u` in `ℤ[u]`, `u² = A·u + B`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
struct Zu {
    a: i64,
    b: i64,
}

/// `p + q·s` over `ℤ[u]`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
struct Zus {
    p: Zu,
    q: Zu,
}

#[derive(Clone, Copy)]
struct Ring {
    ua: i64,
    ub: i64,
}

impl Ring {
    #[inline]
    fn add(a: Zu, b: Zu) -> Option<Zu> {
        Some(Zu {
            a: a.a.checked_add(b.a)?,
            b: a.b.checked_add(b.b)?,
        })
    }

    #[inline]
    fn sub(a: Zu, b: Zu) -> Option<Zu> {
        Some(Zu {
            a: a.a.checked_sub(b.a)?,
            b: a.b.checked_sub(b.b)?,
        })
    }

    #[inline]
    fn neg(a: Zu) -> Option<Zu> {
        Some(Zu {
            a: a.a.checked_neg()?,
            b: a.b.checked_neg()?,
        })
    }

    /// `(a + bu)u = bB + (a + bA)u`.
    #[inline]
    fn mul_u(self, x: Zu) -> Option<Zu> {
        Some(Zu {
            a: x.b.checked_mul(self.ub)?,
            b: x.a.checked_add(x.b.checked_mul(self.ua)?)?,
        })
    }

    /// `(p + qs)s = -q + (p - uq)s`.
    #[inline]
    fn mul_s(self, x: Zus) -> Option<Zus> {
        Some(Zus {
            p: Self::neg(x.q)?,
            q: Self::sub(x.p, self.mul_u(x.q)?)?,
        })
    }

    /// `(p + qs)(u + s) = (up - q) + ps`.
    #[inline]
    fn mul_u_plus_s(self, x: Zus) -> Option<Zus> {
        Some(Zus {
            p: Self::sub(self.mul_u(x.p)?, x.q)?,
            q: x.p,
        })
    }

    /// `tr W = 0` at `λ = u`; `true` on overflow, leaving the decision to
    /// the exact polynomial check.
    fn vanishes(self, lengths: &[u8]) -> bool {
        let zero = Zu { a: 0, b: 0 };
        self.trace_blocks(lengths)
            .is_none_or(|tr| tr == Zus { p: zero, q: zero })
    }

    /// `tr W` at `λ = u`, or `None` on overflow.
    fn trace_blocks(self, lengths: &[u8]) -> Option<Zus> {
        let zero = Zu { a: 0, b: 0 };
        let one = Zu { a: 1, b: 0 };
        let z = |p| Zus { p, q: zero };
        let mut m = [[z(one), z(zero)], [z(zero), z(one)]];
        for (k, &len) in lengths.iter().enumerate() {
            let alpha = 1 + (k % 2) as u8;
            for _ in 0..len {
                for row in m.iter_mut() {
                    let [a, b] = *row;
                    let a_ls = self.mul_u_plus_s(a)?;
                    let b_s = self.mul_s(b)?;
                    *row = if alpha == 1 {
                        [
                            a_ls,
                            Zus {
                                p: Self::sub(a.p, b_s.p)?,
                                q: Self::sub(a.q, b_s.q)?,
                            },
                        ]
                    } else {
                        [
                            Zus {
                                p: Self::add(a_ls.p, b.p)?,
                                q: Self::add(a_ls.q, b.q)?,
                            },
                            Zus {
                                p: Self::neg(b_s.p)?,
                                q: Self::neg(b_s.q)?,
                            },
                        ]
                    };
                }
            }
        }
        Some(Zus {
            p: Self::add(m[0][0].p, m[1][1].p)?,
            q: Self::add(m[0][0].q, m[1][1].q)?,
        })
    }
}

fn trace_blocks_f64(lambda: f64, lengths: &[u8]) -> Complex64 {
    let alphas = lengths
        .iter()
        .enumerate()
        .flat_map(|(k, &len)| std::iter::repeat_n(1 + (k % 2) as u8, len as usize));
    trace_at(alphas, lambda)
}

/// Generic evaluation point for float mode.
const GENERIC_POINT: f64 = 0.5;

/// A screen configured for one `(c, e)`.
#[derive(Clone)]
pub struct Screener {
    mode: ScreenMode,
    tolerance: f64,
    rings: Vec<Ring>,
    points: Vec<(f64, f64)>,
}

impl Screener {
    pub fn new(c: u32, e: u32, mode: ScreenMode, tolerance: f64) -> Screener {
        let mut orders = Vec::new();
        if c > 0 {
            orders.push(QuadOrder::SQRT2);
        }
        if e > 0 {
            orders.push(QuadOrder::GOLDEN);
        }
        let target: IntPoly = target_poly(c, e);
        let mut points: Vec<(f64, f64)> = orders.iter().map(|o| (o.generator_f64(), 0.0)).collect();
        points.push((GENERIC_POINT, target.eval_f64(GENERIC_POINT)));
        Screener {
            mode,
            tolerance,
            rings: orders.iter().map(|o| Ring { ua: o.a, ub: o.b }).collect(),
            points,
        }
    }

    pub fn mode(&self) -> ScreenMode {
        self.mode
    }

    pub fn pass_candidate(&self, cand: &super::Candidate) -> bool {
        let lengths: Vec<u8> = cand.lengths.lengths.iter().map(|&b| b as u8).collect();
        self.pass(&lengths)
    }

    /// `false` only if the candidate certainly (exact) or apparently (float)
    /// misses the target. Lengths alternate `xy`, `xy²` starting with `xy`.
    pub fn pass(&self, lengths: &[u8]) -> bool {
        match self.mode {
            ScreenMode::None => true,
            ScreenMode::Exact => self.rings.iter().all(|r| r.vanishes(lengths)),
            ScreenMode::Float => self
                .points
                .iter()
                .all(|&(x, want)| (trace_blocks_f64(x, lengths) - want).norm() <= self.tolerance),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::polys::QuadOrderElem;
    use crate::trace::trace_poly;
    use crate::words::BlockList;

    fn u8s(v: &[usize]) -> Vec<u8> {
        v.iter().map(|&x| x as u8).collect()
    }

    #[test]
    fn exact_ring_trace_matches_polynomial() {
        for lengths in [
            vec![2usize, 1],
            vec![3, 1, 1, 2],
            vec![1, 1, 1, 1],
            vec![4, 3, 2, 2, 1, 1],
            vec![5],
        ] {
            let w = BlockList::xy(lengths.clone()).unwrap().to_word().unwrap();
            let tau = trace_poly(&w).unwrap();
            for order in [QuadOrder::SQRT2, QuadOrder::GOLDEN] {
                let want = tau.eval_quad(&order.generator());
                let got = Ring {
                    ua: order.a,
                    ub: order.b,
                }
                .trace_blocks(&u8s(&lengths))
                .unwrap();
                assert_eq!(got.q, Zu { a: 0, b: 0 });
                assert_eq!(
                    QuadOrderElem::new(got.p.a, got.p.b, order),
                    want,
                    "{lengths:?}"
                );
            }
            let x = 0.3;
            assert!((trace_blocks_f64(x, &u8s(&lengths)).re - tau.eval_f64(x)).abs() < 1e-9);
        }
    }

    #[test]
    fn screens() {
        // (xy)²xy² has τ = λ³ - 2λ
        let row4 = [2u8, 1];
        for mode in [ScreenMode::Exact, ScreenMode::Float, ScreenMode::None] {
            assert!(Screener::new(1, 0, mode, 1e-6).pass(&row4));
        }
        let rejected = [1u8, 1, 1, 1];
        assert!(!Screener::new(0, 1, ScreenMode::Exact, 1e-6).pass(&rejected));
        assert!(!Screener::new(0, 1, ScreenMode::Float, 1e-6).pass(&rejected));
        assert!(Screener::new(0, 1, ScreenMode::None, 1e-6).pass(&rejected));
    }

    #[test]
    fn overflow_defers() {
        // u = 10 is far outside (-2, 2), so entries grow geometrically
        let r = Ring { ua: 0, ub: 100 };
        assert!(r.trace_blocks(&[30, 30]).is_none());
        assert!(r.vanishes(&[30, 30]));
        assert!(!r.vanishes(&[1, 1]));
    }

    #[test]
    fn mode_text() {
        for m in [ScreenMode::Float, ScreenMode::Exact, ScreenMode::None] {
            assert_eq!(m.to_string().parse::<ScreenMode>(), Ok(m));
        }
        assert!("fast".parse::<ScreenMode>().is_err());
    }
}
