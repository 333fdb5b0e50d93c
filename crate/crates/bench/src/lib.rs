//! Shared inputs for the benchmarks.

use gtg_core::tables::TABLE1;
use gtg_core::Word;

/// The reference words, parsed.
pub fn table1_words() -> Vec<Word> {
    TABLE1.iter().map(|r| r.word()).collect()
}
