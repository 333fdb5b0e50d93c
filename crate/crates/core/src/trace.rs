//! Trace polynomials `τ_W(λ) = tr W(X, Y)` and the facts derived from them.
//!
//! `X` and `Y` are the generators of [`Mat2`]: `tr X = 0`, `tr Y = 1`,
//! `tr XY = λ`. The polynomial is independent of that choice, monic of degree
//! `ℓ`, and odd or even with `ℓ`.

use num_bigint::BigInt;
use num_complex::Complex64;
use num_traits::ToPrimitive;
use thiserror::Error;

use crate::polys::{CycloElem, IntPoly, Mat2, QuadExtElem};
use crate::words::Word;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum TraceError {
    #[error("trace has a non-zero s-component {0}; arithmetic invariant violated")]
    NonZeroSPart(String),
    #[error("cannot classify the zero polynomial")]
    ZeroPolynomial,
    #[error("word of length {ell} is too short for this coefficient (needs {needed})")]
    TooShort { ell: usize, needed: usize },
    #[error("{what} has non-zero imaginary part: {value:?}")]
    Imaginary {
        what: &'static str,
        value: CycloElem,
    },
    #[error("{what}: β-sum gives {from_betas}, trace polynomial gives {from_poly}")]
    CoefficientMismatch {
        what: &'static str,
        from_betas: i64,
        from_poly: BigInt,
    },
    #[error("sampling step must be positive and finite")]
    BadStep,
}

/// Right-multiplies `m` in place by `X·Y^α`, using
/// `XY = [[λ+s, 1], [0, -s]]` and `XY² = [[λ+s, 0], [1, -s]]`.
fn push_syllable(m: &mut [[QuadExtElem; 2]; 2], alpha: u8) {
    for row in m.iter_mut() {
        let [a, b] = &*row;
        let a_ls = a.mul_lambda_plus_s();
        let b_s = b.mul_s();
        *row = if alpha == 1 {
            [a_ls, a - &b_s]
        } else {
            [&a_ls + b, -&b_s]
        };
    }
}

/// Computes `W(X, Y)` for `W = Π x y^α(j)`.
pub fn word_matrix(w: &Word) -> Mat2 {
    let mut m = Mat2::identity().m;
    for &a in w.alphas() {
        push_syllable(&mut m, a);
    }
    Mat2::new(m)
}

/// The trace polynomial `τ_W`.
pub fn trace_poly(w: &Word) -> Result<IntPoly, TraceError> {
    let QuadExtElem { p, q } = word_matrix(w).trace();
    if !q.is_zero() {
        return Err(TraceError::NonZeroSPart(q.to_string()));
    }
    Ok(p)
}

/// `τ_W` coefficients computed in `i64`; `None` on overflow.
pub fn trace_coeffs_i64(alphas: &[u8]) -> Option<Vec<i64>> {
    let n = alphas.len() + 1;
    // entries m00, m01, m10, m11, each as (p, q), coefficient arrays of length n
    let mut m = vec![0i64; 8 * n];
    m[0] = 1;
    m[6 * n] = 1;
    let mut na = vec![0i64; 2 * n];
    let mut nb = vec![0i64; 2 * n];
    for (step, &alpha) in alphas.iter().enumerate() {
        // degrees are at most `step` before this syllable
        let d = step + 1;
        for row in 0..2 {
            let base = 4 * n * row;
            let (ap, rest) = m[base..base + 4 * n].split_at(n);
            let (aq, rest) = rest.split_at(n);
            let (bp, bq) = rest.split_at(n);
            for i in 0..=d.min(n - 1) {
                let lam = |v: &[i64]| if i == 0 { 0 } else { v[i - 1] };
                // a(λ+s) = (λa.p - a.q) + a.p·s;  b·s = -b.q + (b.p - λb.q)·s
                let als_p = lam(ap).checked_sub(aq[i])?;
                let als_q = ap[i];
                let bs_p = bq[i].checked_neg()?;
                let bs_q = bp[i].checked_sub(lam(bq))?;
                if alpha == 1 {
                    na[i] = als_p;
                    na[n + i] = als_q;
                    nb[i] = ap[i].checked_sub(bs_p)?;
                    nb[n + i] = aq[i].checked_sub(bs_q)?;
                } else {
                    na[i] = als_p.checked_add(bp[i])?;
                    na[n + i] = als_q.checked_add(bq[i])?;
                    nb[i] = -bs_p;
                    nb[n + i] = bs_q.checked_neg()?;
                }
            }
            m[base..base + 2 * n].copy_from_slice(&na);
            m[base + 2 * n..base + 4 * n].copy_from_slice(&nb);
        }
    }
    let mut out = Vec::with_capacity(n);
    for i in 0..n {
        if m[n + i].checked_add(m[7 * n + i])? != 0 {
            return None;
        }
        out.push(m[i].checked_add(m[6 * n + i])?);
    }
    while out.last() == Some(&0) {
        out.pop();
    }
    Some(out)
}

fn f_poly() -> IntPoly {
    IntPoly::from_i64(&[1, 0, -3, 0, 1])
}

fn l2m2() -> IntPoly {
    IntPoly::from_i64(&[-2, 0, 1])
}

/// `λ(λ²-2)^c(λ⁴-3λ²+1)^e`.
pub fn target_poly(c: u32, e: u32) -> IntPoly {
    &(&IntPoly::lambda() * &l2m2().pow(c)) * &f_poly().pow(e)
}

/// `unit · λ^a (λ²-1)^b (λ²-2)^c (λ²-3)^d (λ⁴-3λ²+1)^e`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct ElementaryForm {
    pub a: u32,
    pub b: u32,
    pub c: u32,
    pub d: u32,
    pub e: u32,
    pub unit: i8,
}

impl ElementaryForm {
    pub fn degree(&self) -> u32 {
        self.a + 2 * self.b + 2 * self.c + 2 * self.d + 4 * self.e
    }

    pub fn exponents(&self) -> (u32, u32, u32, u32, u32) {
        (self.a, self.b, self.c, self.d, self.e)
    }

    pub fn expand(&self) -> IntPoly {
        let factors = elementary_factors();
        let exps = [self.a, self.b, self.c, self.d, self.e];
        factors
            .iter()
            .zip(exps)
            .fold(IntPoly::constant(self.unit as i64), |acc, (f, k)| {
                &acc * &f.pow(k)
            })
    }
}

impl std::fmt::Display for ElementaryForm {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let sign = if self.unit < 0 { "-" } else { "" };
        write!(
            f,
            "{sign}(a,b,c,d,e)=({},{},{},{},{})",
            self.a, self.b, self.c, self.d, self.e
        )
    }
}

/// `λ, λ²-1, λ²-2, λ²-3, λ⁴-3λ²+1`: the factors whose roots give elementary
/// representations.
pub fn elementary_factors() -> [IntPoly; 5] {
    [
        IntPoly::lambda(),
        IntPoly::from_i64(&[-1, 0, 1]),
        l2m2(),
        IntPoly::from_i64(&[-3, 0, 1]),
        f_poly(),
    ]
}

/// Divides out each elementary factor to maximal multiplicity; `None` when
/// the remaining cofactor is not `±1`.
pub fn classify_elementary(p: &IntPoly) -> Result<Option<ElementaryForm>, TraceError> {
    if p.is_zero() {
        return Err(TraceError::ZeroPolynomial);
    }
    let mut rest = p.clone();
    let mut exps = [0u32; 5];
    for (factor, k) in elementary_factors().iter().zip(exps.iter_mut()) {
        while let Ok(q) = rest.div_exact(factor) {
            rest = q;
            *k += 1;
        }
    }
    let unit = match rest.coeffs() {
        [c] if *c == BigInt::from(1) => 1,
        [c] if *c == BigInt::from(-1) => -1,
        _ => return Ok(None),
    };
    let [a, b, c, d, e] = exps;
    Ok(Some(ElementaryForm {
        a,
        b,
        c,
        d,
        e,
        unit,
    }))
}

/// Top coefficients of `τ_W` expressed through `β(j) = -ω^(α(j+1)-α(j))`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CoeffReport {
    /// Coefficient of `λ^(ℓ-2)`: `Σ β(j)`.
    pub b1: i64,
    /// Coefficient of `λ^(ℓ-4)`: `Σ β(j)β(k)` over non-adjacent pairs; `ℓ ≥ 4` only.
    pub b2: Option<i64>,
    pub sum_beta_sq: i64,
    pub sum_beta_adj: i64,
    pub betas: Vec<CycloElem>,
}

impl CoeffReport {
    /// `B₁² = 2B₂ + Σβ² + 2Σβ(j)β(j+1)`.
    pub fn identity_holds(&self) -> Option<bool> {
        self.b2
            .map(|b2| self.b1 * self.b1 == 2 * b2 + self.sum_beta_sq + 2 * self.sum_beta_adj)
    }
}

pub fn betas(w: &Word) -> Vec<CycloElem> {
    let a = w.alphas();
    let n = a.len();
    (0..n)
        .map(|j| -CycloElem::omega_pow(a[(j + 1) % n] as i64 - a[j] as i64))
        .collect()
}

fn real(what: &'static str, z: CycloElem) -> Result<i64, TraceError> {
    z.as_integer()
        .ok_or(TraceError::Imaginary { what, value: z })
}

/// Computes `B₁`, `B₂`, `Σβ²`, `Σβ(j)β(j+1)` in `ℤ[ω]` and cross-checks `B₁`
/// and `B₂` against the trace polynomial.
pub fn coeff_report(w: &Word) -> Result<CoeffReport, TraceError> {
    let n = w.len();
    if n < 2 {
        return Err(TraceError::TooShort { ell: n, needed: 2 });
    }
    let bs = betas(w);
    let b1 = real("B1", bs.iter().copied().sum())?;
    let sum_beta_sq = real("sum of beta^2", bs.iter().map(|&b| b * b).sum())?;
    let sum_beta_adj = real(
        "sum of beta(j)beta(j+1)",
        (0..n).map(|j| bs[j] * bs[(j + 1) % n]).sum(),
    )?;
    let b2 = if n >= 4 {
        let mut acc = CycloElem::ZERO;
        for j in 0..n {
            for k in j + 2..n {
                // skip the wrap-around neighbour pair {0, n-1}
                if j == 0 && k == n - 1 {
                    continue;
                }
                acc = acc + bs[j] * bs[k];
            }
        }
        Some(real("B2", acc)?)
    } else {
        None
    };

    let tau = trace_poly(w)?;
    let check = |what, v: i64, deg: usize| {
        let c = tau.coeff(deg);
        if c == BigInt::from(v) {
            Ok(())
        } else {
            Err(TraceError::CoefficientMismatch {
                what,
                from_betas: v,
                from_poly: c,
            })
        }
    };
    check("B1", b1, n - 2)?;
    if let Some(b2) = b2 {
        check("B2", b2, n - 4)?;
    }
    Ok(CoeffReport {
        b1,
        b2,
        sum_beta_sq,
        sum_beta_adj,
        betas: bs,
    })
}

/// `tr W` at real `λ` with `|λ| < 2`, taking `s = (-λ + i√(4-λ²))/2`.
///
/// The matrix product stays bounded there, unlike Horner on the expanded
/// polynomial whose coefficients grow exponentially with `ℓ`.
pub fn trace_at(alphas: impl IntoIterator<Item = u8>, lambda: f64) -> Complex64 {
    let s = Complex64::new(-lambda / 2.0, (4.0 - lambda * lambda).sqrt() / 2.0);
    let ls = s + lambda;
    let one = Complex64::new(1.0, 0.0);
    let zero = Complex64::new(0.0, 0.0);
    let mut m = [[one, zero], [zero, one]];
    for alpha in alphas {
        for row in m.iter_mut() {
            let [a, b] = *row;
            *row = if alpha == 1 {
                [a * ls, a - b * s]
            } else {
                [a * ls + b, -(b * s)]
            };
        }
    }
    m[0][0] + m[1][1]
}

fn segment_points(samples: usize) -> impl Iterator<Item = f64> {
    let r = 3f64.sqrt();
    let samples = samples.max(1);
    (0..samples).map(move |i| {
        if samples == 1 {
            0.0
        } else {
            -r + 2.0 * r * i as f64 / (samples - 1) as f64
        }
    })
}

/// Largest `|τ_W(z)|` over `samples` evenly spaced points of `[-√3, √3]`
/// (endpoints included when `samples ≥ 2`).
pub fn sup_check(w: &Word, samples: usize) -> Result<f64, TraceError> {
    // checks the s-component as a side effect
    trace_poly(w)?;
    Ok(segment_points(samples)
        .map(|z| trace_at(w.alphas().iter().copied(), z).norm())
        .fold(0.0, f64::max))
}

/// Same sampling for an arbitrary polynomial, by Horner; only reliable for
/// small coefficients.
pub fn sup_on_interval(tau: &IntPoly, samples: usize) -> f64 {
    segment_points(samples)
        .map(|z| tau.eval_f64(z).abs())
        .fold(0.0, f64::max)
}

/// Evaluation points used to bound `c` and `e`.
pub const LAMBDA_0: f64 = 0.1;
pub const LAMBDA_1: f64 = 1.15;

/// The numeric constants behind the bounds `c ≤ 4`, `e ≤ 2c + 2`.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct BoundConstants {
    pub f_at_l0: f64,
    pub f_at_l1: f64,
    pub g_at_l0: f64,
    pub g_at_l1: f64,
    pub sigma0: f64,
    pub sigma1: f64,
}

impl BoundConstants {
    /// The strict inequalities the bound argument needs, with labels.
    pub fn inequalities(&self) -> Vec<(&'static str, bool)> {
        vec![
            ("|f(l1)| > 1", self.f_at_l1 > 1.0),
            ("|f(l0)| < 1", self.f_at_l0 < 1.0),
            ("|g(l0)| > 1", self.g_at_l0 > 1.0),
            ("|g(l1)| > 1", self.g_at_l1 > 1.0),
            ("|sigma0| > 2", self.sigma0 > 2.0),
            ("|sigma1| > 2", self.sigma1 > 2.0),
        ]
    }

    pub fn all_hold(&self) -> bool {
        self.inequalities().iter().all(|(_, ok)| *ok)
    }
}

/// Curves whose samples regenerate the plots used in the bound argument.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Curve {
    /// `f(x) = x⁴ - 3x² + 1`
    F,
    /// `g(x) = (x² - 2) f(x)²`
    G,
    /// `σ₀(x) = x (x² - 2)⁵ f(x)¹²`
    Sigma0,
}

impl Curve {
    pub fn poly(self) -> IntPoly {
        match self {
            Curve::F => f_poly(),
            Curve::G => &l2m2() * &f_poly().pow(2),
            Curve::Sigma0 => target_poly(5, 12),
        }
    }
}

impl std::str::FromStr for Curve {
    type Err = String;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "f" => Ok(Curve::F),
            "g" => Ok(Curve::G),
            "sigma0" => Ok(Curve::Sigma0),
            other => Err(format!("unknown curve '{other}' (expected f, g or sigma0)")),
        }
    }
}

pub fn bound_constants() -> BoundConstants {
    let f = Curve::F.poly();
    let g = Curve::G.poly();
    let sigma1 = &IntPoly::lambda() * &f.pow(3);
    BoundConstants {
        f_at_l0: f.eval_f64(LAMBDA_0).abs(),
        f_at_l1: f.eval_f64(LAMBDA_1).abs(),
        g_at_l0: g.eval_f64(LAMBDA_0).abs(),
        g_at_l1: g.eval_f64(LAMBDA_1).abs(),
        sigma0: Curve::Sigma0.poly().eval_f64(LAMBDA_0).abs(),
        sigma1: sigma1.eval_f64(LAMBDA_1).abs(),
    }
}

/// `(x, y)` samples of a curve at `from, from + step, …` up to `to`.
pub fn figure_data(
    curve: Curve,
    from: f64,
    to: f64,
    step: f64,
) -> Result<Vec<(f64, f64)>, TraceError> {
    if !(step > 0.0 && step.is_finite()) {
        return Err(TraceError::BadStep);
    }
    let p = curve.poly();
    let n = ((to - from) / step + 1e-9).floor();
    if n < 0.0 {
        return Ok(Vec::new());
    }
    Ok((0..=n as usize)
        .map(|i| {
            let x = from + i as f64 * step;
            (x, p.eval_f64(x))
        })
        .collect())
}

/// A parameter pair allowed by the bounds, with its length parameter.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Admissible {
    pub c: u32,
    pub e: u32,
}

impl Admissible {
    /// `ℓ = 1 + 2c + 4e`.
    pub fn ell(&self) -> usize {
        (1 + 2 * self.c + 4 * self.e) as usize
    }
}

/// All `(c, e)` with `c ≤ 4` and `max(0, c-2) ≤ e ≤ 2c+2`.
pub fn admissible_params() -> Vec<Admissible> {
    (0..=4u32)
        .flat_map(|c| (c.saturating_sub(2)..=2 * c + 2).map(move |e| Admissible { c, e }))
        .collect()
}

/// `τ` coefficients as `i64`, for compact reporting.
pub fn coeffs_i64(p: &IntPoly) -> Option<Vec<i64>> {
    p.coeffs().iter().map(ToPrimitive::to_i64).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn w(s: &str) -> Word {
        s.parse().unwrap()
    }

    #[test]
    fn small_trace_polynomials() {
        assert_eq!(trace_poly(&w("xy")).unwrap(), IntPoly::lambda());
        assert_eq!(trace_poly(&w("xy^2")).unwrap(), IntPoly::lambda());
        assert_eq!(
            trace_poly(&w("(xy)^2xy^2")).unwrap(),
            IntPoly::from_i64(&[0, -2, 0, 1])
        );
        assert_eq!(
            trace_poly(&w("(xy)^2xy^2xyxy^2")).unwrap(),
            IntPoly::from_i64(&[0, 1, 0, -3, 0, 1])
        );
    }

    #[test]
    fn machine_word_trace_agrees() {
        for word in [
            "xy",
            "(xy)^2xy^2",
            "(xy)^4(xy^2)^3(xy)^2(xy^2)^2",
            "xy^2xy^2xy",
            "(xy)^9",
        ] {
            let word = w(word);
            let fast = trace_coeffs_i64(word.alphas()).unwrap();
            assert_eq!(IntPoly::from_i64(&fast), trace_poly(&word).unwrap());
        }
        assert_eq!(trace_coeffs_i64(&[1; 200]), None);
    }

    #[test]
    fn sparse_steps_match_generic_product() {
        let x = Mat2::gen_x();
        let y = Mat2::gen_y();
        let xy = &x * &y;
        let xy2 = &x * &y.pow(2);
        for word in ["xy", "(xy)^3xy^2xy(xy^2)^2", "xy^2xy^2xy"] {
            let word = w(word);
            let generic = word.alphas().iter().fold(Mat2::identity(), |acc, &a| {
                &acc * if a == 1 { &xy } else { &xy2 }
            });
            assert_eq!(word_matrix(&word), generic);
        }
    }

    #[test]
    fn targets() {
        assert_eq!(target_poly(0, 0), IntPoly::lambda());
        assert_eq!(target_poly(1, 0), IntPoly::from_i64(&[0, -2, 0, 1]));
        assert_eq!(
            target_poly(1, 1),
            IntPoly::from_i64(&[0, -2, 0, 7, 0, -5, 0, 1])
        );
        assert_eq!(target_poly(4, 10).degree(), Some(49));
    }

    #[test]
    fn classification() {
        let f = classify_elementary(&IntPoly::from_i64(&[0, 1, 0, -3, 0, 1]))
            .unwrap()
            .unwrap();
        assert_eq!(f.exponents(), (1, 0, 0, 0, 1));
        assert_eq!(f.unit, 1);
        assert_eq!(
            classify_elementary(&IntPoly::from_i64(&[1, 1])).unwrap(),
            None
        );
        let sq = classify_elementary(&IntPoly::from_i64(&[0, 0, 1]))
            .unwrap()
            .unwrap();
        assert_eq!(sq.exponents(), (2, 0, 0, 0, 0));
        let neg = classify_elementary(&IntPoly::from_i64(&[0, -1]))
            .unwrap()
            .unwrap();
        assert_eq!((neg.a, neg.unit), (1, -1));
        assert_eq!(
            classify_elementary(&IntPoly::zero()),
            Err(TraceError::ZeroPolynomial)
        );
        let mixed = ElementaryForm {
            a: 1,
            b: 2,
            c: 0,
            d: 1,
            e: 1,
            unit: -1,
        };
        assert_eq!(classify_elementary(&mixed.expand()).unwrap(), Some(mixed));
    }

    #[test]
    fn coefficient_report_for_w5() {
        let r = coeff_report(&w("(xy)^3xy^2xy(xy^2)^2")).unwrap();
        assert_eq!(r.b1, -5);
        assert_eq!(r.b2, Some(7));
        assert_eq!(r.sum_beta_adj, 5);
        assert_eq!(r.identity_holds(), Some(true));
        assert!(matches!(
            coeff_report(&w("xy")),
            Err(TraceError::TooShort { .. })
        ));
    }

    #[test]
    fn sup_of_identity_trace() {
        let m = sup_check(&w("xy"), 11).unwrap();
        assert!((m - 3f64.sqrt()).abs() < 1e-12);
    }

    #[test]
    fn constants() {
        let b = bound_constants();
        assert!((b.f_at_l1 - 1.22).abs() < 0.01);
        assert!((b.f_at_l0 - 0.97).abs() < 0.01);
        assert!((b.g_at_l0 - 1.87).abs() < 0.01);
        assert!((b.g_at_l1 - 1.01).abs() < 0.01);
        assert!((b.sigma0 - 2.17).abs() < 0.01);
        assert!((b.sigma1 - 2.08).abs() < 0.01);
        assert!(b.all_hold());
    }

    #[test]
    fn admissible_region() {
        let ps = admissible_params();
        assert_eq!(ps.len(), 32);
        assert!(ps.contains(&Admissible { c: 4, e: 10 }));
        assert_eq!(Admissible { c: 4, e: 10 }.ell(), 49);
        assert!(!ps.contains(&Admissible { c: 5, e: 0 }));
        assert!(!ps.contains(&Admissible { c: 3, e: 0 }));
        assert!(ps.iter().all(|p| p.ell() <= 49));
    }

    #[test]
    fn figure_samples() {
        let f = figure_data(Curve::F, 0.0, 1.0, 0.5).unwrap();
        assert_eq!(f.len(), 3);
        assert_eq!(f[0], (0.0, 1.0));
        let g = figure_data(Curve::G, 2f64.sqrt(), 2f64.sqrt(), 0.1).unwrap();
        assert!(g[0].1.abs() < 1e-12);
        let s = figure_data(Curve::Sigma0, 0.1, 0.1, 1.0).unwrap();
        assert!((s[0].1.abs() - 2.17).abs() < 0.01);
        assert_eq!(
            figure_data(Curve::F, 0.0, 1.0, 0.0),
            Err(TraceError::BadStep)
        );
    }

    #[test]
    fn pointwise_trace_matches_polynomial() {
        let word = w("(xy)^3xy^2xy(xy^2)^2");
        let tau = trace_poly(&word).unwrap();
        for z in [-1.7, -0.3, 0.0, 0.9, 1.73] {
            let t = trace_at(word.alphas().iter().copied(), z);
            assert!(
                (t.re - tau.eval_f64(z)).abs() < 1e-9 && t.im.abs() < 1e-9,
                "{z}"
            );
        }
    }
}
