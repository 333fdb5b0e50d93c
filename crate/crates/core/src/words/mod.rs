//! Words in `ℤ₂ ∗ ℤ₃ = ⟨x, y | x² = y³ = 1⟩`.
//!
//! A cyclically reduced word of length parameter `ℓ` is `x y^α(1) ⋯ x y^α(ℓ)`
//! with every `α(j) ∈ {1, 2}`; it is stored as that exponent sequence. Maximal
//! runs `(xy)^b` and `(xy²)^b` are *blocks*; a word is encoded by its list of
//! block lengths, and the search works with those lists up to rotation and
//! reversal.

mod parse;

use std::fmt;
use std::str::FromStr;

use thiserror::Error;

pub use parse::{parse_fragment, parse_word};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum WordError {
    #[error("syntax error at position {pos}: {message}")]
    Syntax { pos: usize, message: String },
    #[error("word reduces to the identity")]
    Empty,
    #[error("word is not of alternating form x y^a x y^b ... after cyclic reduction")]
    NotAlternating,
    #[error("subword must have the form x y^a ... x y^b")]
    NotSyllableAligned,
    #[error("syllable exponent {0} is not 1 or 2")]
    BadExponent(u8),
    #[error("a block list needs one block or an even number of blocks, got {0}")]
    OddBlockCount(usize),
    #[error("block lengths must be positive")]
    ZeroBlock,
    #[error("malformed block list: {0}")]
    BadBlockList(String),
    #[error("malformed interval: {0}")]
    BadInterval(String),
}

/// A letter of `ℤ₂ ∗ ℤ₃` in normal form.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Letter {
    X,
    Y,
    Y2,
}

impl Letter {
    pub fn inverse(self) -> Letter {
        match self {
            Letter::X => Letter::X,
            Letter::Y => Letter::Y2,
            Letter::Y2 => Letter::Y,
        }
    }

    fn y_power(alpha: u8) -> Letter {
        if alpha == 1 {
            Letter::Y
        } else {
            Letter::Y2
        }
    }
}

/// Cyclically reduced word `x y^α(1) ⋯ x y^α(ℓ)`, `ℓ ≥ 1`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Word {
    alphas: Vec<u8>,
}

impl Word {
    pub fn new(alphas: Vec<u8>) -> Result<Word, WordError> {
        if alphas.is_empty() {
            return Err(WordError::Empty);
        }
        if let Some(&bad) = alphas.iter().find(|&&a| a != 1 && a != 2) {
            return Err(WordError::BadExponent(bad));
        }
        Ok(Word { alphas })
    }

    pub fn alphas(&self) -> &[u8] {
        &self.alphas
    }

    /// Length parameter `ℓ` (free-product length is `2ℓ`).
    pub fn len(&self) -> usize {
        self.alphas.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    /// Free-product normal form, `2ℓ` letters.
    pub fn letters(&self) -> Vec<Letter> {
        self.alphas
            .iter()
            .flat_map(|&a| [Letter::X, Letter::y_power(a)])
            .collect()
    }

    pub fn rotate(&self, k: usize) -> Word {
        let mut alphas = self.alphas.clone();
        alphas.rotate_left(k % self.len());
        Word { alphas }
    }

    /// The cyclic normalization of `W⁻¹`: reverse and swap `y ↔ y²`.
    pub fn invert(&self) -> Word {
        Word {
            alphas: self.alphas.iter().rev().map(|&a| 3 - a).collect(),
        }
    }

    /// Image under the automorphism `y ↦ y²`.
    pub fn complement(&self) -> Word {
        Word {
            alphas: self.alphas.iter().map(|&a| 3 - a).collect(),
        }
    }

    /// True if `other` is a cyclic rotation of `self`.
    pub fn is_rotation_of(&self, other: &Word) -> bool {
        self.len() == other.len() && (0..self.len()).any(|k| other.rotate(k) == *self)
    }

    /// Exponent sums of `x` and `y`.
    pub fn exponent_sums(&self) -> (usize, usize) {
        (self.len(), self.alphas.iter().map(|&a| a as usize).sum())
    }

    /// Whether `⟨x,y | x², y³, W²⟩` maps essentially onto a cyclic group: the
    /// `x` exponent sum is odd and the `y` exponent sum is divisible by 3.
    pub fn has_essential_cyclic_rep(&self) -> bool {
        let (xs, ys) = self.exponent_sums();
        xs % 2 == 1 && ys % 3 == 0
    }

    /// Block decomposition, rotated so that the first block starts at a block
    /// boundary. `from_blocks(to_blocks(w))` is therefore a rotation of `w`,
    /// and equals `w` whenever `w` already starts a block.
    pub fn to_blocks(&self) -> BlockList {
        let n = self.len();
        let start = (0..n)
            .find(|&i| self.alphas[i] != self.alphas[(i + n - 1) % n])
            .unwrap_or(0);
        let mut lengths = Vec::new();
        let mut run = 0;
        for k in 0..n {
            let i = (start + k) % n;
            run += 1;
            if k + 1 == n || self.alphas[(i + 1) % n] != self.alphas[i] {
                lengths.push(run);
                run = 0;
            }
        }
        BlockList {
            lengths,
            first: BlockType::from_alpha(self.alphas[start]),
        }
    }

    pub fn from_blocks(b: &BlockList) -> Result<Word, WordError> {
        b.validate()?;
        let mut alphas = Vec::with_capacity(b.lengths.iter().sum());
        let mut ty = b.first;
        for &len in &b.lengths {
            alphas.extend(std::iter::repeat_n(ty.alpha(), len));
            ty = ty.other();
        }
        Ok(Word { alphas })
    }

    /// The cyclic interval `[start..end]` as a linear syllable sequence.
    pub fn subword(&self, iv: Interval) -> Fragment {
        let n = self.len();
        let len = iv.len_in(n);
        Fragment {
            alphas: (0..len).map(|k| self.alphas[(iv.start + k) % n]).collect(),
        }
    }
}

impl fmt::Display for Word {
    /// Compressed form with maximal linear runs as powers, e.g. `(xy)^2xy^2`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_alphas(f, &self.alphas)
    }
}

impl fmt::Debug for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Word({self})")
    }
}

impl FromStr for Word {
    type Err = WordError;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        parse_word(s)
    }
}

fn write_alphas(f: &mut fmt::Formatter<'_>, alphas: &[u8]) -> fmt::Result {
    for run in alphas.chunk_by(|a, b| a == b) {
        let unit = if run[0] == 1 { "xy" } else { "xy^2" };
        match run.len() {
            1 => f.write_str(unit)?,
            n => write!(f, "({unit})^{n}")?,
        }
    }
    Ok(())
}

/// A linear syllable-aligned subword `x y^α ⋯ x y^α`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Fragment {
    alphas: Vec<u8>,
}

impl Fragment {
    pub fn new(alphas: Vec<u8>) -> Fragment {
        Fragment { alphas }
    }

    pub fn alphas(&self) -> &[u8] {
        &self.alphas
    }

    /// Number of syllable pairs `x y^α`.
    pub fn len(&self) -> usize {
        self.alphas.len()
    }

    pub fn is_empty(&self) -> bool {
        self.alphas.is_empty()
    }

    /// Length in the free-product sense.
    pub fn free_length(&self) -> usize {
        2 * self.alphas.len()
    }

    pub fn letters(&self) -> Vec<Letter> {
        self.alphas
            .iter()
            .flat_map(|&a| [Letter::X, Letter::y_power(a)])
            .collect()
    }
}

impl fmt::Display for Fragment {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_alphas(f, &self.alphas)
    }
}

impl fmt::Debug for Fragment {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Fragment({self})")
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum BlockType {
    /// `(xy)^b`
    Xy,
    /// `(xy²)^b`
    Xy2,
}

impl BlockType {
    fn from_alpha(a: u8) -> BlockType {
        if a == 1 {
            BlockType::Xy
        } else {
            BlockType::Xy2
        }
    }

    fn alpha(self) -> u8 {
        match self {
            BlockType::Xy => 1,
            BlockType::Xy2 => 2,
        }
    }

    pub fn other(self) -> BlockType {
        match self {
            BlockType::Xy => BlockType::Xy2,
            BlockType::Xy2 => BlockType::Xy,
        }
    }
}

/// Block lengths `b(1..t)` of a word, alternating between `xy` and `xy²` blocks.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct BlockList {
    pub lengths: Vec<usize>,
    pub first: BlockType,
}

impl BlockList {
    pub fn new(lengths: Vec<usize>, first: BlockType) -> Result<BlockList, WordError> {
        let b = BlockList { lengths, first };
        b.validate()?;
        Ok(b)
    }

    /// Block list whose first block is `(xy)^b(1)`.
    pub fn xy(lengths: Vec<usize>) -> Result<BlockList, WordError> {
        Self::new(lengths, BlockType::Xy)
    }

    fn validate(&self) -> Result<(), WordError> {
        let t = self.lengths.len();
        if t == 0 {
            return Err(WordError::Empty);
        }
        if t > 1 && t % 2 == 1 {
            return Err(WordError::OddBlockCount(t));
        }
        if self.lengths.contains(&0) {
            return Err(WordError::ZeroBlock);
        }
        Ok(())
    }

    pub fn block_count(&self) -> usize {
        self.lengths.len()
    }

    /// Sum of the block lengths, the length parameter of the encoded word.
    pub fn total(&self) -> usize {
        self.lengths.iter().sum()
    }

    /// Canonical representative under rotation and reversal of the lengths;
    /// the block type is dropped (reset to `xy`).
    pub fn canonicalize(&self) -> BlockList {
        BlockList {
            lengths: canonical_sequence(&self.lengths),
            first: BlockType::Xy,
        }
    }

    pub fn to_word(&self) -> Result<Word, WordError> {
        Word::from_blocks(self)
    }
}

impl fmt::Display for BlockList {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.lengths.iter().map(ToString::to_string).collect();
        write!(f, "[{}]", parts.join(","))
    }
}

impl FromStr for BlockList {
    type Err = WordError;

    /// Parses `[b1,b2,...,bt]`; the first block is taken to be `(xy)^b1`.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let bad = || WordError::BadBlockList(s.to_string());
        let inner = s
            .trim()
            .strip_prefix('[')
            .and_then(|r| r.strip_suffix(']'))
            .ok_or_else(bad)?;
        let lengths = inner
            .split(',')
            .map(|t| t.trim().parse::<usize>())
            .collect::<Result<Vec<_>, _>>()
            .map_err(|_| bad())?;
        BlockList::xy(lengths)
    }
}

/// Lexicographically least sequence among all rotations of `seq` and of its
/// reversal.
pub fn canonical_sequence<T: Ord + Copy>(seq: &[T]) -> Vec<T> {
    let n = seq.len();
    let mut best = seq.to_vec();
    let mut cand = Vec::with_capacity(n);
    for reflect in [false, true] {
        for r in 0..n {
            cand.clear();
            cand.extend((0..n).map(|k| {
                if reflect {
                    seq[(r + n - k) % n]
                } else {
                    seq[(r + k) % n]
                }
            }));
            if cand < best {
                std::mem::swap(&mut best, &mut cand);
            }
        }
    }
    best
}

/// True if `seq` is its own canonical form; exits at the first smaller
/// rotation or reflection.
pub fn is_canonical<T: Ord + Copy>(seq: &[T]) -> bool {
    let n = seq.len();
    for r in 1..n {
        if compare_image(seq, |k| seq[(r + k) % n]) == std::cmp::Ordering::Greater {
            return false;
        }
    }
    for r in 0..n {
        if compare_image(seq, |k| seq[(r + n - k) % n]) == std::cmp::Ordering::Greater {
            return false;
        }
    }
    true
}

#[inline]
fn compare_image<T: Ord + Copy>(seq: &[T], image: impl Fn(usize) -> T) -> std::cmp::Ordering {
    for (k, &a) in seq.iter().enumerate() {
        match a.cmp(&image(k)) {
            std::cmp::Ordering::Equal => continue,
            other => return other,
        }
    }
    std::cmp::Ordering::Equal
}

/// Cyclic syllable interval `[start..end]`, indices taken modulo `ℓ`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Interval {
    pub start: usize,
    pub end: usize,
}

impl Interval {
    pub fn new(start: usize, end: usize) -> Interval {
        Interval { start, end }
    }

    /// Interval of `len ≥ 1` syllables starting at `start`.
    pub fn starting_at(start: usize, len: usize, ell: usize) -> Interval {
        Interval {
            start: start % ell,
            end: (start + len - 1) % ell,
        }
    }

    /// Indices reduced modulo `ell`.
    pub fn reduce(self, ell: usize) -> Interval {
        Interval::new(self.start % ell, self.end % ell)
    }

    /// Number of syllables covered in a word of length parameter `ell`.
    pub fn len_in(self, ell: usize) -> usize {
        let r = self.reduce(ell);
        (r.end + ell - r.start) % ell + 1
    }
}

impl fmt::Display for Interval {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{:X}..{:X}]", self.start, self.end)
    }
}

impl FromStr for Interval {
    type Err = WordError;

    /// Parses `I..J` or `[I..J]` with hexadecimal indices.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let bad = || WordError::BadInterval(s.to_string());
        let t = s.trim();
        let t = t
            .strip_prefix('[')
            .and_then(|r| r.strip_suffix(']'))
            .unwrap_or(t);
        let (a, b) = t.split_once("..").ok_or_else(bad)?;
        let parse = |x: &str| usize::from_str_radix(x.trim(), 16).map_err(|_| bad());
        Ok(Interval::new(parse(a)?, parse(b)?))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn w(a: &[u8]) -> Word {
        Word::new(a.to_vec()).unwrap()
    }

    #[test]
    fn printing() {
        assert_eq!(w(&[1, 1, 2]).to_string(), "(xy)^2xy^2");
        assert_eq!(w(&[1]).to_string(), "xy");
        assert_eq!(
            w(&[1, 1, 1, 1, 2, 2, 2, 1, 1, 2, 2]).to_string(),
            "(xy)^4(xy^2)^3(xy)^2(xy^2)^2"
        );
    }

    #[test]
    fn blocks() {
        let b = w(&[1, 1, 2, 1, 2]).to_blocks();
        assert_eq!(b.lengths, vec![2, 1, 1, 1]);
        assert_eq!(b.first, BlockType::Xy);
        let b = w(&[2, 2, 2]).to_blocks();
        assert_eq!((b.lengths, b.first), (vec![3], BlockType::Xy2));
        assert_eq!(w(&[1, 2]).to_blocks().lengths, vec![1, 1]);
        // wraps around: [1,2,1] is cyclically (xy^2)(xy)^2
        let b = w(&[1, 2, 1]).to_blocks();
        assert_eq!((b.lengths.clone(), b.first), (vec![1, 2], BlockType::Xy2));
        assert!(Word::from_blocks(&b)
            .unwrap()
            .is_rotation_of(&w(&[1, 2, 1])));
    }

    #[test]
    fn from_blocks_checks_parity() {
        let b = BlockList::xy(vec![2, 1, 1, 1]).unwrap();
        assert_eq!(Word::from_blocks(&b).unwrap().alphas(), &[1, 1, 2, 1, 2]);
        assert_eq!(
            BlockList::xy(vec![3]).unwrap().to_word().unwrap().alphas(),
            &[1, 1, 1]
        );
        assert_eq!(
            BlockList::xy(vec![1, 2, 1]),
            Err(WordError::OddBlockCount(3))
        );
        assert_eq!(BlockList::xy(vec![1, 0]), Err(WordError::ZeroBlock));
    }

    #[test]
    fn inversion() {
        assert_eq!(w(&[1, 1, 2]).invert().alphas(), &[1, 2, 2]);
        assert_eq!(w(&[1]).invert().alphas(), &[2]);
    }

    #[test]
    fn canonical_forms() {
        let b = BlockList::xy(vec![4, 3, 2, 2, 1, 1]).unwrap();
        // the reversal [1,1,2,2,3,4] beats the rotation [1,1,4,3,2,2]
        assert_eq!(b.canonicalize().lengths, vec![1, 1, 2, 2, 3, 4]);
        assert_eq!(
            BlockList::xy(vec![1]).unwrap().canonicalize().lengths,
            vec![1]
        );
        assert!(is_canonical(&[1, 1, 2, 2, 3, 4]));
        assert!(!is_canonical(&[1, 1, 4, 3, 2, 2]));
        assert!(!is_canonical(&[4, 3, 2, 2, 1, 1]));
        assert!(is_canonical(&[1, 1, 1, 1]));
    }

    #[test]
    fn exponent_sums_and_cyclic_reps() {
        let w20 = w(&[1, 1, 1, 1, 2, 2, 2, 1, 1, 2, 2]);
        assert_eq!(w20.exponent_sums(), (11, 16));
        assert!(!w20.has_essential_cyclic_rep());
        assert_eq!(w(&[1]).exponent_sums(), (1, 1));
        assert_eq!(w(&[2]).exponent_sums(), (1, 2));
        assert!(w(&[1, 1, 1]).has_essential_cyclic_rep());
        assert!(!w(&[1, 2, 1, 2]).has_essential_cyclic_rep());
    }

    #[test]
    fn intervals() {
        let iv: Interval = "7..B".parse().unwrap();
        assert_eq!(iv, Interval::new(7, 11));
        assert_eq!("[C..0]".parse::<Interval>().unwrap().len_in(13), 2);
        assert_eq!(Interval::new(0, 0).len_in(13), 1);
        assert_eq!(Interval::new(3, 2).len_in(13), 13);
        assert!("7-B".parse::<Interval>().is_err());
        assert_eq!(Interval::new(7, 11).to_string(), "[7..B]");
    }

    #[test]
    fn hex_indexed_subword() {
        // W13 indexed 0..C with α(1), α(6..8), α(B), α(C) equal to y^-1 = y^2
        let w13 = w(&[1, 2, 1, 1, 1, 1, 2, 2, 2, 1, 1, 2, 2]);
        assert_eq!(w13.subword(Interval::new(7, 11)).alphas(), &[2, 2, 1, 1, 2]);
        assert_eq!(w13.subword(Interval::new(0, 0)).alphas(), &[1]);
        assert_eq!(w13.subword(Interval::new(12, 0)).alphas(), &[2, 1]);
    }

    #[test]
    fn block_list_text() {
        let b: BlockList = "[2, 1,1,1]".parse().unwrap();
        assert_eq!(b.to_string(), "[2,1,1,1]");
        assert!("[2,1,1]".parse::<BlockList>().is_err());
        assert!("2,1".parse::<BlockList>().is_err());
    }
}
