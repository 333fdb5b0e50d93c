//! Exhaustive search for words with trace polynomial `λ(λ²-2)^c(λ⁴-3λ²+1)^e`.
//!
//! Candidates are block lists of `2e+2` entries summing to `ℓ = 1+2c+4e` with
//! exactly `e+2-c` ones. They are produced from a composition `L` of `2c+2e-1`
//! into `c+e` parts and a subset `C` of the `2e+2` positions: positions in `C`
//! hold `1`, the others hold `L[i]+1` in order. Only dihedrally canonical
//! lists are screened, and only screen survivors get an exact trace.

mod enumerate;
mod report;
mod screen;

use std::path::PathBuf;
use std::time::{Duration, Instant};

use thiserror::Error;

use crate::polys::IntPoly;
use crate::trace::{
    admissible_params, coeffs_i64, target_poly, trace_coeffs_i64, trace_poly, Admissible,
};
use crate::words::{BlockList, Word};

pub use enumerate::{
    assemble, binomial, c_shape, candidates, composition_count, composition_unrank, compositions,
    enumerate_c, enumerate_l, l_shape, next_composition, subset_masks, Candidate,
};
pub use report::Checkpoint;
pub use screen::{ScreenMode, Screener};

use enumerate::{fill_lengths, is_canonical_fast};

/// Largest `ℓ` searched without `huge`.
pub const DESK_MAX_ELL: usize = 33;
/// Largest `ℓ` any admissible pair can have.
pub const MAX_ELL: usize = 49;
/// Candidates between checkpoint writes.
pub const CHECKPOINT_EVERY: u64 = 10_000_000;

#[derive(Debug, Error)]
pub enum SearchError {
    #[error("(c,e) = (0,0) has no L/C enumeration; the only word is xy")]
    EmptyParams,
    #[error("(c,e) = ({c},{e}) is not admissible (need c ≤ 4 and max(0,c-2) ≤ e ≤ 2c+2); use force to override")]
    NotAdmissible { c: u32, e: u32 },
    #[error("(c,e) = ({c},{e}) has no candidates: e+2-c < 0")]
    NoCandidates { c: u32, e: u32 },
    #[error("ℓ = {ell} exceeds {DESK_MAX_ELL}; this search needs the huge flag")]
    HugeRequired { ell: usize },
    #[error("maximum length {0} exceeds {MAX_ELL}")]
    MaxLenTooLarge(usize),
    #[error("worker count must be positive")]
    NoWorkers,
    #[error("bad candidate: {0}")]
    BadCandidate(String),
    #[error("checkpoint {path}: {message}")]
    Checkpoint { path: PathBuf, message: String },
}

#[derive(Clone, Debug)]
pub struct SearchParams {
    pub c: u32,
    pub e: u32,
    pub workers: usize,
    pub screen: ScreenMode,
    /// Float-mode tolerance on `|τ - target|`.
    pub tolerance: f64,
    /// Allow non-admissible `(c, e)`.
    pub force: bool,
    /// Allow `ℓ > 33`.
    pub huge: bool,
    /// Resume from and periodically save to this file.
    pub checkpoint: Option<PathBuf>,
    /// Candidates between checkpoint writes.
    pub checkpoint_every: u64,
    /// Stop once at least this many candidates were scanned in this run,
    /// leaving a partial report (and checkpoint) behind.
    pub stop_after: Option<u64>,
}

impl SearchParams {
    pub fn new(c: u32, e: u32) -> SearchParams {
        SearchParams {
            c,
            e,
            workers: 1,
            screen: ScreenMode::Exact,
            tolerance: 1e-6,
            force: false,
            huge: false,
            checkpoint: None,
            checkpoint_every: CHECKPOINT_EVERY,
            stop_after: None,
        }
    }

    pub fn workers(mut self, n: usize) -> Self {
        self.workers = n;
        self
    }

    pub fn screen(mut self, mode: ScreenMode) -> Self {
        self.screen = mode;
        self
    }

    pub fn ell(&self) -> usize {
        (1 + 2 * self.c + 4 * self.e) as usize
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Hit {
    /// Canonical block list, first block `xy`.
    pub blocks: BlockList,
    pub word: Word,
    pub tau: IntPoly,
}

/// Counts over one search. `canonical = screened_out + exact_checked`.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct Counters {
    /// Every `(L, C)` pair.
    pub raw: u64,
    /// Pairs whose list is its own dihedral canonical form.
    pub canonical: u64,
    /// Canonical lists rejected by the screen.
    pub screened_out: u64,
    /// Canonical lists whose exact trace polynomial was computed.
    pub exact_checked: u64,
}

impl std::ops::AddAssign for Counters {
    fn add_assign(&mut self, o: Counters) {
        self.raw += o.raw;
        self.canonical += o.canonical;
        self.screened_out += o.screened_out;
        self.exact_checked += o.exact_checked;
    }
}

#[derive(Clone, Debug)]
pub struct SearchReport {
    pub c: u32,
    pub e: u32,
    pub screen: ScreenMode,
    pub workers: usize,
    pub hits: Vec<Hit>,
    pub counters: Counters,
    pub wall_time: Duration,
    /// `false` when the run stopped early.
    pub complete: bool,
}

impl SearchReport {
    pub fn ell(&self) -> usize {
        (1 + 2 * self.c + 4 * self.e) as usize
    }
}

fn is_admissible(c: u32, e: u32) -> bool {
    admissible_params().contains(&Admissible { c, e })
}

/// Exact comparison of `τ` with the target, in `i64` when that suffices.
fn exact_hit(lengths: &[u8], target: &IntPoly, target_i64: Option<&[i64]>) -> Option<Hit> {
    let blocks = BlockList::xy(lengths.iter().map(|&b| b as usize).collect())
        .expect("assembled list is valid");
    let word = blocks.to_word().expect("assembled list is valid");
    if let (Some(want), Some(got)) = (target_i64, trace_coeffs_i64(word.alphas())) {
        if got != want {
            return None;
        }
    }
    let tau = trace_poly(&word).expect("trace of a word has zero s-part");
    (tau == *target).then_some(Hit { blocks, word, tau })
}

struct Space {
    n: u32,
    k: usize,
    t: usize,
    masks: Vec<u64>,
    l_total: u64,
}

impl Space {
    fn new(c: u32, e: u32) -> Space {
        let (n, k) = l_shape(c, e);
        let (t, m) = c_shape(c, e).unwrap_or((2 * e as usize + 2, usize::MAX));
        let masks = if m == usize::MAX {
            Vec::new()
        } else {
            subset_masks(t, m)
        };
        Space {
            n,
            k,
            t,
            masks,
            l_total: composition_count(n as u64, k as u64),
        }
    }
}

/// Scans the `L` indices `lo..hi` against every `C`.
fn scan(
    space: &Space,
    lo: u64,
    hi: u64,
    screener: &Screener,
    target: &IntPoly,
) -> (Counters, Vec<Hit>) {
    let target_i64 = coeffs_i64(target);
    let mut counters = Counters::default();
    let mut hits = Vec::new();
    if lo >= hi {
        return (counters, hits);
    }
    let mut l = composition_unrank(space.n as u64, space.k, lo).expect("index in range");
    let mut buf = vec![0u8; space.t];
    let mut scratch = vec![0u8; 4 * space.t];
    for idx in lo..hi {
        if idx > lo {
            next_composition(&mut l);
        }
        for &mask in &space.masks {
            counters.raw += 1;
            fill_lengths(&l, mask, &mut buf);
            if !is_canonical_fast(&buf, &mut scratch) {
                continue;
            }
            counters.canonical += 1;
            if !screener.pass(&buf) {
                counters.screened_out += 1;
                continue;
            }
            counters.exact_checked += 1;
            if let Some(hit) = exact_hit(&buf, target, target_i64.as_deref()) {
                hits.push(hit);
            }
        }
    }
    (counters, hits)
}

/// Splits `lo..hi` into `workers` contiguous ranges and scans them in parallel.
fn scan_parallel(
    space: &Space,
    lo: u64,
    hi: u64,
    workers: usize,
    screener: &Screener,
    target: &IntPoly,
) -> (Counters, Vec<Hit>) {
    let span = hi - lo;
    let w = workers as u64;
    let bounds: Vec<(u64, u64)> = (0..w)
        .map(|i| (lo + span * i / w, lo + span * (i + 1) / w))
        .collect();
    let parts: Vec<(Counters, Vec<Hit>)> = if workers == 1 {
        vec![scan(space, lo, hi, screener, target)]
    } else {
        std::thread::scope(|s| {
            let handles: Vec<_> = bounds
                .iter()
                .map(|&(a, b)| s.spawn(move || scan(space, a, b, screener, target)))
                .collect();
            handles
                .into_iter()
                .map(|h| h.join().expect("worker panicked"))
                .collect()
        })
    };
    let mut counters = Counters::default();
    let mut hits = Vec::new();
    for (c, h) in parts {
        counters += c;
        hits.extend(h);
    }
    (counters, hits)
}

pub fn run_search(params: &SearchParams) -> Result<SearchReport, SearchError> {
    let started = Instant::now();
    let (c, e) = (params.c, params.e);
    if params.workers == 0 {
        return Err(SearchError::NoWorkers);
    }
    if !params.force && !is_admissible(c, e) {
        return Err(SearchError::NotAdmissible { c, e });
    }
    if params.ell() > DESK_MAX_ELL && !params.huge {
        return Err(SearchError::HugeRequired { ell: params.ell() });
    }
    let target = target_poly(c, e);
    let mut report = SearchReport {
        c,
        e,
        screen: params.screen,
        workers: params.workers,
        hits: Vec::new(),
        counters: Counters::default(),
        wall_time: Duration::ZERO,
        complete: true,
    };

    if c + e == 0 {
        // a single syllable: the only candidate is xy itself
        let hit = exact_hit(&[1], &target, None).expect("τ(xy) = λ");
        report.counters = Counters {
            raw: 1,
            canonical: 1,
            screened_out: 0,
            exact_checked: 1,
        };
        report.hits.push(hit);
        report.wall_time = started.elapsed();
        return Ok(report);
    }

    let space = Space::new(c, e);
    let screener = Screener::new(c, e, params.screen, params.tolerance);
    let mut next_l = 0;
    if let Some(path) = &params.checkpoint {
        if let Some(cp) = Checkpoint::load(path)? {
            cp.check_matches(path, params)?;
            next_l = cp.next_l;
            report.counters = cp.counters;
            report.hits = cp.hits;
        }
    }

    let per_l = space.masks.len().max(1) as u64;
    let batch = if params.checkpoint.is_some() || params.stop_after.is_some() {
        (params.checkpoint_every / per_l).max(1)
    } else {
        space.l_total.max(1)
    };
    let mut scanned = 0;
    while next_l < space.l_total {
        if params.stop_after.is_some_and(|limit| scanned >= limit) {
            report.complete = false;
            break;
        }
        let hi = (next_l + batch).min(space.l_total);
        let (counters, hits) =
            scan_parallel(&space, next_l, hi, params.workers, &screener, &target);
        scanned += counters.raw;
        report.counters += counters;
        report.hits.extend(hits);
        next_l = hi;
        if let Some(path) = &params.checkpoint {
            Checkpoint::from_progress(params, next_l, &report).save(path)?;
        }
    }

    report
        .hits
        .sort_by(|a, b| a.blocks.lengths.cmp(&b.blocks.lengths));
    report.wall_time = started.elapsed();
    Ok(report)
}

/// Every admissible `(c, e)` with `ℓ ≤ max_len`, ordered by `ℓ` then `c`.
pub fn search_all(
    max_len: usize,
    template: &SearchParams,
) -> Result<Vec<SearchReport>, SearchError> {
    if max_len > MAX_ELL {
        return Err(SearchError::MaxLenTooLarge(max_len));
    }
    let mut params: Vec<Admissible> = admissible_params()
        .into_iter()
        .filter(|p| p.ell() <= max_len)
        .collect();
    params.sort_by_key(|p| (p.ell(), p.c));
    params
        .into_iter()
        .map(|p| {
            let mut sp = template.clone();
            sp.c = p.c;
            sp.e = p.e;
            sp.checkpoint = None;
            run_search(&sp)
        })
        .collect()
}

/// Outcome of checking one reference row.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RowCheck {
    pub n: u32,
    pub ok: bool,
    pub detail: String,
}

/// For each reference row: the trace equals the target, and the block list
/// has `2e+2` blocks of which `c+e` are longer than one.
pub fn verify_table1() -> Vec<RowCheck> {
    crate::tables::TABLE1
        .iter()
        .map(|row| {
            let w = row.word();
            let mut problems = Vec::new();
            match trace_poly(&w) {
                Ok(tau) if tau == target_poly(row.c, row.e) => {}
                Ok(tau) => problems.push(format!("τ = {tau}, expected {}", target_poly(row.c, row.e))),
                Err(err) => problems.push(err.to_string()),
            }
            if w.len() != row.ell() {
                problems.push(format!("ℓ = {}, expected {}", w.len(), row.ell()));
            }
            let b = w.to_blocks();
            let (want_t, want_long) = if row.c + row.e == 0 {
                (1, 0)
            } else {
                (2 * row.e as usize + 2, (row.c + row.e) as usize)
            };
            let long = b.lengths.iter().filter(|&&x| x > 1).count();
            if b.block_count() != want_t || long != want_long {
                problems.push(format!(
                    "blocks {b}: {} blocks with {long} longer than 1, expected {want_t} and {want_long}",
                    b.block_count()
                ));
            }
            RowCheck {
                n: row.n,
                ok: problems.is_empty(),
                detail: if problems.is_empty() {
                    format!("τ = {}", target_poly(row.c, row.e))
                } else {
                    problems.join("; ")
                },
            }
        })
        .collect()
}
