//! Reference word lists.
//!
//! [`TABLE1`] lists, up to equivalence, every word of odd length parameter
//! whose trace polynomial is `λ(λ²-2)^c(λ⁴-3λ²+1)^e`. [`TABLE2`] gives, for
//! sixteen of them, a cyclic conjugate written as a product of three
//! non-pieces.

use crate::words::{parse_fragment, parse_word, Fragment, Word};

#[derive(Clone, Copy, Debug)]
pub struct Table1Row {
    pub n: u32,
    pub c: u32,
    pub e: u32,
    pub word: &'static str,
}

impl Table1Row {
    pub fn word(&self) -> Word {
        parse_word(self.word).expect("built-in word parses")
    }

    pub fn ell(&self) -> usize {
        (1 + 2 * self.c + 4 * self.e) as usize
    }
}

macro_rules! rows1 {
    ($(($n:expr, $c:expr, $e:expr, $w:expr)),* $(,)?) => {
        [$(Table1Row { n: $n, c: $c, e: $e, word: $w }),*]
    };
}

pub const TABLE1: [Table1Row; 31] = rows1![
    (1, 0, 0, "xy"),
    (2, 0, 1, "(xy)^2xy^2xyxy^2"),
    (3, 0, 2, "(xy)^3xy^2xy(xy^2)^2xyxy^2"),
    (4, 1, 0, "(xy)^2xy^2"),
    (5, 1, 1, "(xy)^3xy^2xy(xy^2)^2"),
    (6, 1, 2, "(xy)^3(xy^2)^3xyxy^2(xy)^2xy^2"),
    (7, 1, 2, "(xy)^4(xy^2)^2xyxy^2xy(xy^2)^2"),
    (8, 1, 3, "(xy)^4xy^2xy(xy^2)^3(xy)^2xy^2xy(xy^2)^2"),
    (9, 1, 4, "(xy)^4xy^2xy(xy^2)^3xy(xy^2)^2xyxy^2(xy)^2(xy^2)^3"),
    (10, 1, 4, "(xy)^4xy^2xy(xy^2)^3(xy)^3(xy^2)^2xy(xy^2)^2xyxy^2"),
    (11, 2, 0, "(xy)^3(xy^2)^2"),
    (12, 2, 1, "(xy)^3(xy^2)^3xy(xy^2)^2"),
    (13, 2, 2, "(xy)^4(xy^2)^3(xy)^2(xy^2)^2xyxy^2"),
    (14, 2, 3, "(xy)^4xy^2xy(xy^2)^2(xy)^3(xy^2)^3xy(xy^2)^2"),
    (15, 2, 3, "(xy)^4(xy^2)^3xyxy^2(xy)^2(xy^2)^3(xy)^2xy^2"),
    (16, 2, 3, "(xy)^4(xy^2)^3xy(xy^2)^3(xy)^2xy^2xy(xy^2)^2"),
    (17, 2, 4, "(xy)^4(xy^2)^2xyxy^2xy(xy^2)^2(xy)^3(xy^2)^4(xy)^2xy^2"),
    (18, 2, 4, "(xy)^4(xy^2)^3xy(xy^2)^2(xy)^3(xy^2)^3xyxy^2(xy)^2xy^2"),
    (19, 2, 4, "(xy)^4(xy^2)^4xyxy^2xy(xy^2)^2xy(xy^2)^2(xy)^3(xy^2)^2"),
    (20, 3, 1, "(xy)^4(xy^2)^3(xy)^2(xy^2)^2"),
    (21, 3, 2, "(xy)^4(xy^2)^3xy(xy^2)^2(xy)^3(xy^2)^2"),
    (22, 3, 2, "(xy)^4(xy^2)^3(xy)^2(xy^2)^3xy(xy^2)^2"),
    (23, 3, 4, "(xy)^4xy^2xy(xy^2)^4(xy)^2(xy^2)^3(xy)^2xy^2(xy)^2(xy^2)^3"),
    (24, 3, 6, "(xy)^4(xy^2)^4xyxy^2(xy)^2(xy^2)^3(xy)^3(xy^2)^2xy(xy^2)^3(xy)^3xy^2(xy)^2xy^2"),
    (25, 3, 6, "(xy)^5(xy^2)^3xy(xy^2)^2xyxy^2(xy)^3(xy^2)^4(xy)^2xy^2xy(xy^2)^2(xy)^3(xy^2)^2"),
    (26, 3, 8, "(xy)^5(xy^2)^4(xy)^3(xy^2)^2xyxy^2(xy)^2xy^2(xy)^3(xy^2)^3(xy)^2xy^2xy(xy^2)^4(xy)^2(xy^2)^2xyxy^2"),
    (27, 4, 4, "(xy)^4(xy^2)^3(xy)^2xy^2(xy)^3(xy^2)^2(xy)^3(xy^2)^4xy(xy^2)^2"),
    (28, 4, 4, "(xy)^4(xy^2)^3xy(xy^2)^2(xy)^3(xy^2)^4(xy)^2(xy^2)^3(xy)^2xy^2"),
    (29, 4, 4, "(xy)^4(xy^2)^4(xy)^2(xy^2)^3xy(xy^2)^2(xy)^3(xy^2)^3(xy)^2xy^2"),
    (30, 4, 5, "(xy)^4(xy^2)^3(xy)^2(xy^2)^2xy(xy^2)^4(xy)^4(xy^2)^2(xy)^3(xy^2)^2xyxy^2"),
    (31, 4, 6, "(xy)^4(xy^2)^2xyxy^2(xy)^2xy^2(xy)^3(xy^2)^4xy(xy^2)^3(xy)^4(xy^2)^3(xy)^2(xy^2)^2"),
];

pub fn table1_row(n: u32) -> Option<&'static Table1Row> {
    TABLE1.iter().find(|r| r.n == n)
}

#[derive(Clone, Copy, Debug)]
pub struct Table2Row {
    /// Row number of the factored word in [`TABLE1`].
    pub n: u32,
    pub factors: [&'static str; 3],
}

impl Table2Row {
    pub fn fragments(&self) -> Vec<Fragment> {
        self.factors
            .iter()
            .map(|f| parse_fragment(f).expect("built-in factor parses"))
            .collect()
    }

    /// Bracketed text form, e.g. `[(xy)^4]·[...]·[...]`.
    pub fn text(&self) -> String {
        self.factors
            .iter()
            .map(|f| format!("[{f}]"))
            .collect::<Vec<_>>()
            .join("·")
    }
}

macro_rules! rows2 {
    ($(($n:expr, $a:expr, $b:expr, $c:expr)),* $(,)?) => {
        [$(Table2Row { n: $n, factors: [$a, $b, $c] }),*]
    };
}

pub const TABLE2: [Table2Row; 16] = rows2![
    (
        9,
        "(xy)^4",
        "xy^2xy(xy^2)^3xy",
        "(xy^2)^2xyxy^2(xy)^2(xy^2)^3"
    ),
    (
        10,
        "(xy)^4",
        "xy^2xy(xy^2)^3xy",
        "(xy)^2(xy^2)^2xy(xy^2)^2xyxy^2"
    ),
    (
        14,
        "(xy)^4",
        "xy^2xy(xy^2)^2(xy)^3xy^2",
        "(xy^2)^2xy(xy^2)^2"
    ),
    (15, "(xy)^4", "(xy^2)^3xyxy^2xy", "xy(xy^2)^3(xy)^2xy^2"),
    (
        17,
        "(xy)^2(xy^2)^2xy",
        "xy^2xy(xy^2)^2(xy)^3xy^2",
        "(xy^2)^3(xy)^2xy^2(xy)^2"
    ),
    (
        18,
        "(xy)^4",
        "(xy^2)^3xy(xy^2)^2(xy)^2",
        "xy(xy^2)^3xyxy^2(xy)^2xy^2"
    ),
    (
        19,
        "(xy)^4(xy^2)^4xyxy^2",
        "xy(xy^2)^2xyxy^2",
        "xy^2(xy)^3(xy^2)^2"
    ),
    (22, "(xy)^4", "(xy^2)^3(xy)^2(xy^2)^2", "xy^2xy(xy^2)^2"),
    (
        23,
        "xyxy^2xy(xy^2)^4(xy)^2xy^2",
        "(xy^2)^2(xy)^2xy^2xy",
        "xy(xy^2)^3(xy)^3"
    ),
    (
        24,
        "(xy)^3(xy^2)^4xyxy^2xy",
        "xy(xy^2)^3(xy)^3(xy^2)^2xy(xy^2)^2",
        "xy^2(xy)^3xy^2(xy)^2xy^2xy"
    ),
    (
        25,
        "(xy)^5",
        "(xy^2)^3xy(xy^2)^2",
        "xyxy^2(xy)^3(xy^2)^4(xy)^2xy^2xy(xy^2)^2(xy)^3(xy^2)^2"
    ),
    (
        26,
        "(xy)^5",
        "(xy^2)^4(xy)^3",
        "(xy^2)^2xyxy^2(xy)^2xy^2(xy)^3(xy^2)^3(xy)^2xy^2xy(xy^2)^4(xy)^2(xy^2)^2xyxy^2"
    ),
    (
        27,
        "(xy)^4(xy^2)^3(xy)^2xy^2xy",
        "(xy)^2(xy^2)^2xy",
        "(xy)^2(xy^2)^4xy(xy^2)^2"
    ),
    (
        28,
        "(xy^2)^3xy(xy^2)^2(xy)^3(xy^2)^3",
        "xy^2(xy)^2(xy^2)^2",
        "xy^2(xy)^2xy^2(xy)^4"
    ),
    (
        30,
        "(xy)^4(xy^2)^3",
        "(xy)^2(xy^2)^2xy(xy^2)^2",
        "(xy^2)^2(xy)^4(xy^2)^2(xy)^3(xy^2)^2xyxy^2"
    ),
    (
        31,
        "(xy)^4(xy^2)^2xy",
        "xy^2(xy)^2xy^2xy",
        "(xy)^2(xy^2)^4xy(xy^2)^3(xy)^4(xy^2)^3(xy)^2(xy^2)^2"
    ),
];

/// `W₁₃` indexed as in the piece analysis: `α(0..C)` with `y^-1` written `y²`.
pub fn w13_hex_indexed() -> Word {
    Word::new(vec![1, 2, 1, 1, 1, 1, 2, 2, 2, 1, 1, 2, 2]).expect("valid exponents")
}

/// The five intervals whose product is a proper subword of `W₁₃²`, plus `[7..B]`.
pub const W13_NON_PIECES: [&str; 6] = ["0..4", "5..9", "A..1", "2..5", "6..A", "7..B"];
