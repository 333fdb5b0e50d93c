//! Independent reference implementations used by the integration tests.
//!
//! Nothing here calls into the trace engine, the search enumerator or the
//! piece index; each oracle recomputes its answer from first principles.

#![allow(dead_code)]

use std::collections::BTreeSet;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};

use gtg_core::words::{Letter, Word};
use gtg_core::IntPoly;

pub type Q = BigRational;

fn q(n: i64) -> Q {
    Q::from_integer(BigInt::from(n))
}

type M2 = [[Q; 2]; 2];

fn mul(a: &M2, b: &M2) -> M2 {
    let e = |i: usize, j: usize| &a[i][0] * &b[0][j] + &a[i][1] * &b[1][j];
    [[e(0, 0), e(0, 1)], [e(1, 0), e(1, 1)]]
}

/// Rational `X`, `Y` with `tr X = 0`, `tr Y = 1`, `det = 1`, `tr XY = λ(v)`.
///
/// `λ = (v + 4/v)/2`, `r = (4/v - v)/2` satisfy `λ² - r² = 4`; with
/// `a = (r+1)/2`, `k = a - a² - 1 = (1-λ²)/4` and `u = (λ+1)/2` one has
/// `u - k/u = λ`.
pub fn rational_rep(v: &Q) -> (Q, M2, M2) {
    let four = q(4);
    let two = q(2);
    let lambda = (v + &four / v) / &two;
    let r = (&four / v - v) / &two;
    let a = (&r + q(1)) / &two;
    let k = &a - &a * &a - q(1);
    let u = (&lambda + q(1)) / &two;
    let x = [[q(0), u.clone()], [-(q(1) / &u), q(0)]];
    let y = [[a.clone(), k], [q(1), q(1) - a]];
    (lambda, x, y)
}

/// `tr W(X, Y)` for the rational representation at parameter `v`.
pub fn rational_trace(alphas: &[u8], v: &Q) -> (Q, Q) {
    let (lambda, x, y) = rational_rep(v);
    let xy = mul(&x, &y);
    let xy2 = mul(&xy, &y);
    let mut m: M2 = [[q(1), q(0)], [q(0), q(1)]];
    for &a in alphas {
        m = mul(&m, if a == 1 { &xy } else { &xy2 });
    }
    (lambda, &m[0][0] + &m[1][1])
}

/// Sample parameters giving distinct `λ > 2`.
pub fn sample_params(n: usize) -> Vec<Q> {
    (3..3 + n as i64).map(q).collect()
}

/// Lagrange interpolation through `(x_i, y_i)`, ascending coefficients.
pub fn interpolate(points: &[(Q, Q)]) -> Vec<Q> {
    let n = points.len();
    let mut coeffs = vec![Q::zero(); n];
    for (i, (xi, yi)) in points.iter().enumerate() {
        // basis polynomial Π_{j≠i} (x - x_j)/(x_i - x_j)
        let mut basis = vec![Q::one()];
        let mut denom = Q::one();
        for (j, (xj, _)) in points.iter().enumerate() {
            if i == j {
                continue;
            }
            let mut next = vec![Q::zero(); basis.len() + 1];
            for (k, c) in basis.iter().enumerate() {
                next[k + 1] += c;
                next[k] -= c * xj;
            }
            basis = next;
            denom *= xi - xj;
        }
        let scale = yi / denom;
        for (k, c) in basis.iter().enumerate() {
            coeffs[k] += c * &scale;
        }
    }
    while coeffs.last().is_some_and(Zero::is_zero) {
        coeffs.pop();
    }
    coeffs
}

/// `τ_W` by interpolating `ℓ+1` rational traces; `None` if a coefficient is
/// not an integer.
pub fn trace_by_interpolation(alphas: &[u8]) -> Option<Vec<BigInt>> {
    let pts: Vec<(Q, Q)> = sample_params(alphas.len() + 1)
        .iter()
        .map(|v| rational_trace(alphas, v))
        .collect();
    interpolate(&pts)
        .into_iter()
        .map(|c| c.is_integer().then(|| c.to_integer()))
        .collect()
}

/// Coefficients of `λ(λ²-2)^c(λ⁴-3λ²+1)^e` by repeated convolution.
pub fn target_coeffs(c: u32, e: u32) -> Vec<i64> {
    let conv = |a: &[i64], b: &[i64]| {
        let mut out = vec![0i64; a.len() + b.len() - 1];
        for (i, x) in a.iter().enumerate() {
            for (j, y) in b.iter().enumerate() {
                out[i + j] += x * y;
            }
        }
        out
    };
    let mut p = vec![0, 1];
    for _ in 0..c {
        p = conv(&p, &[-2, 0, 1]);
    }
    for _ in 0..e {
        p = conv(&p, &[1, 0, -3, 0, 1]);
    }
    p
}

pub fn poly_to_big(p: &IntPoly) -> Vec<BigInt> {
    p.coeffs().to_vec()
}

/// Maximal cyclic runs of equal exponents, starting at a run boundary.
pub fn naive_blocks(alphas: &[u8]) -> Vec<usize> {
    let n = alphas.len();
    let Some(start) = (0..n).find(|&i| alphas[i] != alphas[(i + n - 1) % n]) else {
        return vec![n];
    };
    let mut out = Vec::new();
    let mut run = 0;
    for k in 0..n {
        run += 1;
        let i = (start + k) % n;
        if alphas[(i + 1) % n] != alphas[i] || k + 1 == n {
            out.push(run);
            run = 0;
        }
    }
    out
}

/// Least element of the full list of rotations and reflections.
pub fn naive_canonical(seq: &[usize]) -> Vec<usize> {
    let n = seq.len();
    let mut images = Vec::with_capacity(2 * n);
    for r in 0..n {
        let rot: Vec<usize> = seq[r..].iter().chain(&seq[..r]).copied().collect();
        let mut rev = rot.clone();
        rev.reverse();
        images.push(rot);
        images.push(rev);
    }
    images.into_iter().min().unwrap()
}

/// All α-sequences of length `ell` whose trace (evaluated exactly at `ell+1`
/// rational points) matches the target, as canonical block lists.
pub fn naive_search(c: u32, e: u32) -> BTreeSet<Vec<usize>> {
    let ell = (1 + 2 * c + 4 * e) as usize;
    let target = target_coeffs(c, e);
    let params = sample_params(ell + 1);
    let target_at: Vec<Q> = params
        .iter()
        .map(|v| {
            let (lambda, _, _) = rational_rep(v);
            let mut acc = Q::zero();
            for &t in target.iter().rev() {
                acc = acc * &lambda + q(t);
            }
            acc
        })
        .collect();
    let mut found = BTreeSet::new();
    for bits in 0u32..(1 << ell) {
        let alphas: Vec<u8> = (0..ell).map(|j| 1 + (bits >> j & 1) as u8).collect();
        // two polynomials of degree ≤ ℓ agreeing at ℓ+1 points are equal
        let hit = params
            .iter()
            .zip(&target_at)
            .all(|(v, want)| rational_trace(&alphas, v).1 == *want);
        if hit {
            found.insert(naive_canonical(&naive_blocks(&alphas)));
        }
    }
    found
}

fn letters_of(alphas: &[u8]) -> Vec<Letter> {
    alphas
        .iter()
        .flat_map(|&a| [Letter::X, if a == 1 { Letter::Y } else { Letter::Y2 }])
        .collect()
}

fn inverse_letters(ls: &[Letter]) -> Vec<Letter> {
    ls.iter().rev().map(|l| l.inverse()).collect()
}

/// Piece test straight from the definition: collect the completions `V` of
/// `U` over every cyclic permutation of `W` and `W⁻¹`.
pub fn naive_is_piece(w: &Word, u: &[Letter]) -> bool {
    let base = letters_of(w.alphas());
    let mut completions = BTreeSet::new();
    for word in [base.clone(), inverse_letters(&base)] {
        let n = word.len();
        for r in 0..n {
            let rot: Vec<Letter> = word[r..].iter().chain(&word[..r]).copied().collect();
            if rot.len() >= u.len() && rot[..u.len()] == *u {
                completions.insert(rot[u.len()..].to_vec());
            }
        }
    }
    completions.len() >= 2
}

pub fn rng(seed: u64) -> StdRng {
    StdRng::seed_from_u64(seed)
}

pub fn random_word(rng: &mut StdRng, min_len: usize, max_len: usize) -> Word {
    let ell = rng.gen_range(min_len..=max_len);
    Word::new((0..ell).map(|_| rng.gen_range(1..=2)).collect()).unwrap()
}
