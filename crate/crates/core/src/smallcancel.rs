//! Pieces and non-pieces of a cyclically reduced word, and decompositions of
//! `W` into non-piece factors.
//!
//! A subword `U` is a piece when there are two different words `V₁ ≠ V₂` with
//! both `U·V₁` and `U·V₂` cyclic permutations of `W` or `W⁻¹`. Words are
//! compared letter by letter over `{x, y, y²}`, so two occurrences with equal
//! completions count once.

use std::collections::{BTreeSet, HashMap};
use std::fmt;

use thiserror::Error;

use crate::tables::{Table2Row, TABLE2};
use crate::words::{Fragment, Interval, Letter, Word};

/// Number of distinct cyclic permutations of `W^{±1}` beginning with each
/// subword.
#[derive(Clone, Debug)]
pub struct PieceIndex {
    word: Word,
    prefix_counts: HashMap<Vec<Letter>, u32>,
}

/// All distinct cyclic permutations of `W` and `W⁻¹` as letter sequences.
fn rotations(w: &Word) -> BTreeSet<Vec<Letter>> {
    let mut out = BTreeSet::new();
    for base in [w.letters(), w.invert().letters()] {
        let n = base.len();
        for r in 0..n {
            out.insert((0..n).map(|k| base[(r + k) % n]).collect());
        }
    }
    out
}

impl PieceIndex {
    pub fn new(w: &Word) -> PieceIndex {
        let mut prefix_counts = HashMap::new();
        for rot in rotations(w) {
            for k in 1..=rot.len() {
                *prefix_counts.entry(rot[..k].to_vec()).or_insert(0) += 1;
            }
        }
        PieceIndex {
            word: w.clone(),
            prefix_counts,
        }
    }

    pub fn word(&self) -> &Word {
        &self.word
    }

    /// Number of distinct completions of `u`; `0` when `u` is not a cyclic
    /// subword of `W^{±1}`.
    pub fn completions(&self, u: &[Letter]) -> u32 {
        self.prefix_counts.get(u).copied().unwrap_or(0)
    }

    pub fn is_piece_letters(&self, u: &[Letter]) -> bool {
        self.completions(u) >= 2
    }

    pub fn is_piece(&self, iv: Interval) -> bool {
        self.is_piece_letters(&self.word.subword(iv).letters())
    }

    /// The set of pieces as letter sequences, sorted.
    pub fn pieces(&self) -> BTreeSet<Vec<Letter>> {
        self.prefix_counts
            .iter()
            .filter(|(_, &n)| n >= 2)
            .map(|(k, _)| k.clone())
            .collect()
    }

    /// For each syllable `i`, the fewest syllables `m` with `[i..i+m-1]` a
    /// non-piece; `None` if even the whole word is a piece.
    pub fn min_non_piece(&self) -> Vec<Option<usize>> {
        let ell = self.word.len();
        (0..ell)
            .map(|i| (1..=ell).find(|&m| !self.is_piece(Interval::starting_at(i, m, ell))))
            .collect()
    }
}

pub fn build_piece_index(w: &Word) -> PieceIndex {
    PieceIndex::new(w)
}

pub fn is_piece(w: &Word, iv: Interval) -> bool {
    PieceIndex::new(w).is_piece(iv)
}

/// Requirements on a decomposition.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Constraints {
    pub factors: usize,
    /// Minimum free-product length of each factor.
    pub min_len: usize,
    pub even: bool,
}

impl Default for Constraints {
    fn default() -> Self {
        Constraints {
            factors: 3,
            min_len: 8,
            even: true,
        }
    }
}

/// Consecutive syllable intervals covering a cyclic conjugate of `W` once.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Decomposition {
    pub factors: Vec<Interval>,
    pub constraints: Constraints,
}

impl Decomposition {
    pub fn fragments(&self, w: &Word) -> Vec<Fragment> {
        self.factors.iter().map(|&iv| w.subword(iv)).collect()
    }

    /// Bracketed factors, e.g. `[(xy)^4]·[...]·[...]`.
    pub fn text(&self, w: &Word) -> String {
        self.fragments(w)
            .iter()
            .map(|f| format!("[{f}]"))
            .collect::<Vec<_>>()
            .join("·")
    }

    /// Locates consecutive fragments in `w`, starting at the first rotation
    /// where their concatenation matches.
    pub fn from_fragments(
        w: &Word,
        frags: &[Fragment],
        constraints: Constraints,
    ) -> Option<Decomposition> {
        let ell = w.len();
        let joined: Vec<u8> = frags
            .iter()
            .flat_map(|f| f.alphas().iter().copied())
            .collect();
        if joined.len() != ell || frags.iter().any(Fragment::is_empty) {
            return None;
        }
        let a = w.alphas();
        let start = (0..ell).find(|&r| (0..ell).all(|k| a[(r + k) % ell] == joined[k]))?;
        let mut pos = start;
        let factors = frags
            .iter()
            .map(|f| {
                let iv = Interval::starting_at(pos, f.len(), ell);
                pos += f.len();
                iv
            })
            .collect();
        Some(Decomposition {
            factors,
            constraints,
        })
    }
}

/// Why a decomposition fails, labelled by the condition it breaks.
#[derive(Clone, Debug, PartialEq, Eq, Error)]
pub enum DecompFailure {
    #[error("(i) factors do not tile a cyclic conjugate of the word: {0}")]
    Partition(String),
    #[error("(ii) factor {index} {text} is a piece")]
    Piece { index: usize, text: String },
    #[error("(iii) factor {index} {text} has length {len}, need {} at least {min}", if *.even { "an even length" } else { "length" })]
    Length {
        index: usize,
        text: String,
        len: usize,
        min: usize,
        even: bool,
    },
    #[error("(iv) {got} factors, expected {want}")]
    Count { got: usize, want: usize },
}

fn check_partition(w: &Word, d: &Decomposition) -> Result<(), DecompFailure> {
    let ell = w.len();
    if d.factors.is_empty() {
        return Err(DecompFailure::Partition("no factors".into()));
    }
    let mut total = 0;
    for (i, iv) in d.factors.iter().enumerate() {
        if iv.start >= ell || iv.end >= ell {
            return Err(DecompFailure::Partition(format!(
                "{iv} out of range for ℓ = {ell}"
            )));
        }
        let next = &d.factors[(i + 1) % d.factors.len()];
        if (iv.end + 1) % ell != next.start {
            return Err(DecompFailure::Partition(format!(
                "{iv} is not followed by {next}"
            )));
        }
        total += iv.len_in(ell);
    }
    if total != ell {
        return Err(DecompFailure::Partition(format!(
            "factors cover {total} syllables, word has {ell}"
        )));
    }
    Ok(())
}

/// Checks conditions (i)-(iv), collecting every failure.
pub fn verify_decomposition(w: &Word, d: &Decomposition) -> Result<(), Vec<DecompFailure>> {
    if let Err(e) = check_partition(w, d) {
        return Err(vec![e]);
    }
    let index = PieceIndex::new(w);
    let mut fails = Vec::new();
    for (i, &iv) in d.factors.iter().enumerate() {
        let frag = w.subword(iv);
        if index.is_piece_letters(&frag.letters()) {
            fails.push(DecompFailure::Piece {
                index: i + 1,
                text: format!("[{frag}]"),
            });
        }
        let len = frag.free_length();
        if len < d.constraints.min_len || (d.constraints.even && len % 2 != 0) {
            fails.push(DecompFailure::Length {
                index: i + 1,
                text: format!("[{frag}]"),
                len,
                min: d.constraints.min_len,
                even: d.constraints.even,
            });
        }
    }
    if d.factors.len() != d.constraints.factors {
        fails.push(DecompFailure::Count {
            got: d.factors.len(),
            want: d.constraints.factors,
        });
    }
    if fails.is_empty() {
        Ok(())
    } else {
        Err(fails)
    }
}

/// First decomposition into `constraints.factors` non-pieces, scanning the
/// starting syllable upwards and then factor lengths lexicographically.
///
/// Factors are syllable aligned, so their free-product lengths are always
/// even. A factor starting at `i` is a non-piece exactly when it is at least
/// as long as the shortest non-piece starting at `i`.
pub fn find_decomposition(w: &Word, constraints: Constraints) -> Option<Decomposition> {
    let ell = w.len();
    let k = constraints.factors;
    if k == 0 {
        return None;
    }
    let index = PieceIndex::new(w);
    let min_np = index.min_non_piece();
    let min_syl = constraints.min_len.div_ceil(2).max(1);
    let floor: Vec<Option<usize>> = min_np.iter().map(|m| m.map(|m| m.max(min_syl))).collect();

    fn place(
        ell: usize,
        floor: &[Option<usize>],
        pos: usize,
        left: usize,
        parts: usize,
        out: &mut Vec<usize>,
    ) -> bool {
        let lo = match floor[pos % ell] {
            Some(lo) => lo,
            None => return false,
        };
        if parts == 1 {
            if left >= lo {
                out.push(left);
                return true;
            }
            return false;
        }
        for len in lo..=left {
            out.push(len);
            if place(ell, floor, pos + len, left - len, parts - 1, out) {
                return true;
            }
            out.pop();
        }
        false
    }

    for start in 0..ell {
        let mut lens = Vec::with_capacity(k);
        if place(ell, &floor, start, ell, k, &mut lens) {
            let mut pos = start;
            let factors = lens
                .iter()
                .map(|&len| {
                    let iv = Interval::starting_at(pos, len, ell);
                    pos += len;
                    iv
                })
                .collect();
            return Some(Decomposition {
                factors,
                constraints,
            });
        }
    }
    None
}

/// Result of checking one factorisation row.
#[derive(Clone, Debug)]
pub struct Table2Check {
    pub n: u32,
    pub ok: bool,
    pub text: String,
    pub problems: Vec<String>,
}

impl fmt::Display for Table2Check {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let status = if self.ok { "PASS" } else { "FAIL" };
        write!(f, "row {}: {status} {}", self.n, self.text)?;
        for p in &self.problems {
            write!(f, "\n  {p}")?;
        }
        Ok(())
    }
}

pub fn verify_table2_row(row: &Table2Row) -> Table2Check {
    let mut problems = Vec::new();
    let constraints = Constraints::default();
    let frags = row.fragments();
    match crate::tables::table1_row(row.n) {
        None => problems.push(format!("no reference word numbered {}", row.n)),
        Some(t1) => {
            let w = t1.word();
            match Decomposition::from_fragments(&w, &frags, constraints) {
                None => problems.push(
                    "(i) factors do not multiply to a cyclic conjugate of the reference word"
                        .into(),
                ),
                Some(d) => {
                    if let Err(fails) = verify_decomposition(&w, &d) {
                        problems.extend(fails.iter().map(ToString::to_string));
                    }
                }
            }
        }
    }
    Table2Check {
        n: row.n,
        ok: problems.is_empty(),
        text: row.text(),
        problems,
    }
}

pub fn verify_table2() -> Vec<Table2Check> {
    TABLE2.iter().map(verify_table2_row).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::tables::{table1_row, w13_hex_indexed, W13_NON_PIECES};

    fn w(s: &str) -> Word {
        s.parse().unwrap()
    }

    #[test]
    fn short_words() {
        let idx = PieceIndex::new(&w("(xy)^2xy^2"));
        assert!(idx.is_piece_letters(&[Letter::X, Letter::Y]));
        assert!(idx.is_piece_letters(&[Letter::X]));
        let xy = w("xy");
        let idx = PieceIndex::new(&xy);
        assert!(idx.is_piece_letters(&[Letter::X]));
        assert!(!idx.is_piece_letters(&[Letter::X, Letter::Y]));
        assert_eq!(idx.completions(&[Letter::Y, Letter::Y]), 0);
    }

    #[test]
    fn inverse_has_same_pieces() {
        let u = w("(xy)^4(xy^2)^3(xy)^2(xy^2)^2");
        assert_eq!(
            PieceIndex::new(&u).pieces(),
            PieceIndex::new(&u.invert()).pieces()
        );
    }

    #[test]
    fn w13_non_pieces() {
        let u = w13_hex_indexed();
        assert!(u.is_rotation_of(&table1_row(13).unwrap().word()));
        let idx = PieceIndex::new(&u);
        for iv in W13_NON_PIECES {
            assert!(!idx.is_piece(iv.parse().unwrap()), "{iv}");
        }
        assert!(idx.is_piece("0..0".parse().unwrap()));
    }

    #[test]
    fn table2_rows() {
        for check in verify_table2() {
            assert!(check.ok, "{check}");
        }
    }

    #[test]
    fn shortened_factor_fails_length() {
        let row = &TABLE2[0];
        let word = table1_row(row.n).unwrap().word();
        let d =
            Decomposition::from_fragments(&word, &row.fragments(), Constraints::default()).unwrap();
        let ell = word.len();
        // move one syllable from the first factor to the second
        let mut short = d.clone();
        short.factors[0] =
            Interval::starting_at(d.factors[0].start, d.factors[0].len_in(ell) - 1, ell);
        short.factors[1] = Interval::new((short.factors[0].end + 1) % ell, d.factors[1].end);
        let fails = verify_decomposition(&word, &short).unwrap_err();
        assert!(
            fails.iter().any(|f| matches!(
                f,
                DecompFailure::Length {
                    index: 1,
                    len: 6,
                    ..
                }
            )),
            "{fails:?}"
        );
    }

    #[test]
    fn malformed_partition() {
        let word = w("(xy)^4(xy^2)^4");
        let d = Decomposition {
            factors: vec![Interval::new(0, 2), Interval::new(4, 7)],
            constraints: Constraints::default(),
        };
        assert!(matches!(
            verify_decomposition(&word, &d).unwrap_err()[..],
            [DecompFailure::Partition(_)]
        ));
    }

    #[test]
    fn finds_and_rejects() {
        assert_eq!(find_decomposition(&w("xy"), Constraints::default()), None);
        let row9 = table1_row(9).unwrap().word();
        let d = find_decomposition(&row9, Constraints::default()).unwrap();
        assert_eq!(verify_decomposition(&row9, &d), Ok(()));
    }
}
