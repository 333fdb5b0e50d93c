//! Exact check of a representation of `⟨x, y | x³ = y³ = R = 1⟩` into
//! `GL(3, K)`, `K = ℚ[t]/(t⁶ - 3t³ + 1)`, with
//! `R = x y x y² x y² x² y x y x² y x² y²`.
//!
//! `m = xy` has eigenvalues `1, -1, -1` with a one-dimensional `(-1)`-space.
//! The plane `P` spanned by eigenvectors of `m` is cut out by `q`, and `n = yx`
//! does not preserve it.

use std::fmt;

use crate::polys::{dot, Mat3, NumFieldElem, Vec3};

fn nf(coeffs: &[i64]) -> NumFieldElem {
    NumFieldElem::from_ints(coeffs)
}

/// The matrices `x`, `y`.
#[derive(Clone, Debug)]
pub struct LrsMatrices {
    pub x: Mat3,
    pub y: Mat3,
}

impl LrsMatrices {
    pub fn new() -> LrsMatrices {
        let t = NumFieldElem::t();
        let a = nf(&[0, 8, 0, 0, -3]);
        let b = nf(&[0, 11, 0, 0, -4]);
        let c = nf(&[-6, 0, 0, 2]);
        let d = nf(&[0, 0, 14, 0, 0, -5]);
        let e = nf(&[0, 0, 19, 0, 0, -7]);
        let zero = NumFieldElem::zero;
        let one = NumFieldElem::one;
        let three = NumFieldElem::from_int(3);
        let x = Mat3::new([
            [a.clone(), b.clone(), c.clone()],
            [zero(), zero(), one()],
            [d.clone(), e.clone(), -&a],
        ]);
        let y = Mat3::new([
            [d.clone(), e, -&a],
            [&three * &(&(&b * &t) - &d), -&d, -&(&c * &t)],
            [one(), zero(), zero()],
        ]);
        LrsMatrices { x, y }
    }

    /// Product of `x^i` and `y^j` factors.
    pub fn eval(&self, syllables: &[(char, u32)]) -> Mat3 {
        syllables.iter().fold(Mat3::identity(), |acc, &(g, k)| {
            let base = if g == 'x' { &self.x } else { &self.y };
            &acc * &base.pow(k)
        })
    }
}

impl Default for LrsMatrices {
    fn default() -> Self {
        Self::new()
    }
}

/// `x y x y² x y² x² y x y x² y x² y²`.
pub const RELATOR: [(char, u32); 14] = [
    ('x', 1),
    ('y', 1),
    ('x', 1),
    ('y', 2),
    ('x', 1),
    ('y', 2),
    ('x', 2),
    ('y', 1),
    ('x', 1),
    ('y', 1),
    ('x', 2),
    ('y', 1),
    ('x', 2),
    ('y', 2),
];

/// `m = xy`, `n = yx`, eigenvectors `ev1`, `ev2` of `m` and the plane
/// equation `q`.
#[derive(Clone, Debug)]
pub struct EigenData {
    pub m: Mat3,
    pub n: Mat3,
    pub ev1: Vec3,
    pub ev2: Vec3,
    pub q: Vec3,
}

impl EigenData {
    pub fn new(lrs: &LrsMatrices) -> EigenData {
        let t = NumFieldElem::t();
        let i = NumFieldElem::from_int;
        EigenData {
            m: &lrs.x * &lrs.y,
            n: &lrs.y * &lrs.x,
            ev1: [i(1), i(1), &i(4) * &t],
            ev2: [i(1), i(-1), i(0)],
            q: [&i(2) * &t, &i(2) * &t, i(-1)],
        }
    }
}

/// One named sub-check.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SubCheck {
    pub name: &'static str,
    pub ok: bool,
    pub detail: String,
}

impl fmt::Display for SubCheck {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let status = if self.ok { "PASS" } else { "FAIL" };
        write!(f, "{status} {}: {}", self.name, self.detail)
    }
}

fn vec_text(v: &Vec3) -> String {
    format!("[{}, {}, {}]", v[0], v[1], v[2])
}

fn identity_check(name: &'static str, m: &Mat3) -> SubCheck {
    SubCheck {
        name,
        ok: m.is_identity(),
        detail: if m.is_identity() {
            "identity".into()
        } else {
            format!("{m:?}")
        },
    }
}

fn equal_check(name: &'static str, got: String, want: String) -> SubCheck {
    SubCheck {
        name,
        ok: got == want,
        detail: if got == want {
            got
        } else {
            format!("{got}, expected {want}")
        },
    }
}

/// `x³ = y³ = R = 1`.
pub fn verify_relators() -> Vec<SubCheck> {
    let lrs = LrsMatrices::new();
    vec![
        identity_check("x^3", &lrs.x.pow(3)),
        identity_check("y^3", &lrs.y.pow(3)),
        identity_check(
            "x*y*x*y^2*x*y^2*x^2*y*x*y*x^2*y*x^2*y^2",
            &lrs.eval(&RELATOR),
        ),
    ]
}

/// Shape of `m`, ranks of `m ∓ 1`, eigenvectors, trace and determinant.
pub fn verify_eigenstructure() -> Vec<SubCheck> {
    let lrs = LrsMatrices::new();
    let ed = EigenData::new(&lrs);
    let id = Mat3::identity();
    let rank = |m: &Mat3| {
        m.rank()
            .map(|r| r.to_string())
            .unwrap_or_else(|e| e.to_string())
    };
    let expected_m = Mat3::new([
        [
            NumFieldElem::from_int(-2),
            NumFieldElem::from_int(-1),
            nf(&[0, 0, 3, 0, 0, -1]),
        ],
        [
            NumFieldElem::one(),
            NumFieldElem::zero(),
            NumFieldElem::zero(),
        ],
        [
            NumFieldElem::zero(),
            NumFieldElem::zero(),
            NumFieldElem::one(),
        ],
    ]);
    let neg_ev2: Vec3 = std::array::from_fn(|k| -&ed.ev2[k]);
    vec![
        equal_check("m = x*y", format!("{:?}", ed.m), format!("{expected_m:?}")),
        equal_check("Rank(m-Id)", rank(&(&ed.m - &id)), "2".into()),
        equal_check("Rank(m+Id)", rank(&(&ed.m + &id)), "2".into()),
        equal_check("m*ev1", vec_text(&ed.m.mul_vec(&ed.ev1)), vec_text(&ed.ev1)),
        equal_check(
            "m*ev2",
            vec_text(&ed.m.mul_vec(&ed.ev2)),
            vec_text(&neg_ev2),
        ),
        equal_check("tr(m)", ed.m.trace().to_string(), "-1".into()),
        equal_check("det(m)", ed.m.det().to_string(), "1".into()),
    ]
}

/// `q` vanishes on `ev1`, `ev2` but not on `n·ev1`, `n·ev2`.
pub fn verify_nonelementary_witness() -> Vec<SubCheck> {
    let lrs = LrsMatrices::new();
    let ed = EigenData::new(&lrs);
    let qn = |v: &Vec3| dot(&ed.q, &ed.n.mul_vec(v));
    let nonzero = |name, got: NumFieldElem, want: &str| {
        let mut c = equal_check(name, got.to_string(), want.into());
        c.ok &= !got.is_zero();
        c
    };
    vec![
        equal_check("q*ev1", dot(&ed.q, &ed.ev1).to_string(), "0".into()),
        equal_check("q*ev2", dot(&ed.q, &ed.ev2).to_string(), "0".into()),
        nonzero("q*n*ev1", qn(&ed.ev1), "t^4+t"),
        nonzero("q*n*ev2", qn(&ed.ev2), "t^4-t"),
    ]
}

/// All three groups of checks in order.
pub fn verify_all() -> Vec<SubCheck> {
    let mut out = verify_relators();
    out.extend(verify_eigenstructure());
    out.extend(verify_nonelementary_witness());
    out
}
