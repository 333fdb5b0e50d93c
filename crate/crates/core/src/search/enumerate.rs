//! The candidate space: compositions `L`, subsets `C` and their assembly into
//! block lists.

use super::SearchError;
use crate::words::BlockList;

/// `n choose k`, saturating at `u64::MAX`.
pub fn binomial(n: u64, k: u64) -> u64 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    let mut acc: u128 = 1;
    for i in 0..k {
        acc = acc * (n - i) as u128 / (i + 1) as u128;
        if acc > u64::MAX as u128 {
            return u64::MAX;
        }
    }
    acc as u64
}

/// Number of compositions of `n` into `k` positive parts.
pub fn composition_count(n: u64, k: u64) -> u64 {
    match (n, k) {
        (0, 0) => 1,
        (_, 0) => 0,
        _ if n < k => 0,
        _ => binomial(n - 1, k - 1),
    }
}

/// The `idx`-th composition of `n` into `k` parts in lexicographic order.
pub fn composition_unrank(mut n: u64, k: usize, mut idx: u64) -> Option<Vec<u32>> {
    if idx >= composition_count(n, k as u64) {
        return None;
    }
    let mut parts = Vec::with_capacity(k);
    for i in 0..k.saturating_sub(1) {
        let rest = (k - i - 1) as u64;
        let mut p = 1;
        loop {
            let cnt = composition_count(n - p, rest);
            if idx < cnt {
                break;
            }
            idx -= cnt;
            p += 1;
        }
        parts.push(p as u32);
        n -= p;
    }
    if k > 0 {
        parts.push(n as u32);
    }
    Some(parts)
}

/// Advances `parts` to its lexicographic successor; `false` at the last one.
pub fn next_composition(parts: &mut [u32]) -> bool {
    let k = parts.len();
    let mut suffix = 0;
    for i in (0..k.saturating_sub(1)).rev() {
        suffix += parts[i + 1];
        let tail = (k - i - 1) as u32;
        if suffix > tail {
            parts[i] += 1;
            let rem = suffix - 1;
            parts[i + 1..k - 1].fill(1);
            parts[k - 1] = rem - (tail - 1);
            return true;
        }
    }
    false
}

/// Compositions of `n` into `k` positive parts, in lexicographic order.
pub fn compositions(n: u32, k: usize) -> impl Iterator<Item = Vec<u32>> {
    let mut cur = composition_unrank(n as u64, k, 0);
    std::iter::from_fn(move || {
        let out = cur.clone()?;
        let mut next = out.clone();
        cur = next_composition(&mut next).then_some(next);
        Some(out)
    })
}

/// `(n, k)` for the `L` stream: `n = 2c+2e-1`, `k = c+e`.
pub fn l_shape(c: u32, e: u32) -> (u32, usize) {
    ((2 * c + 2 * e).saturating_sub(1), (c + e) as usize)
}

/// `(t, m)` for the `C` stream: subsets of `{1..t}` of size `m`, `t = 2e+2`,
/// `m = e+2-c`; `None` when `m` would be negative.
pub fn c_shape(c: u32, e: u32) -> Option<(usize, usize)> {
    let m = (e + 2).checked_sub(c)?;
    Some((2 * e as usize + 2, m as usize))
}

pub fn enumerate_l(c: u32, e: u32) -> Result<impl Iterator<Item = Vec<u32>>, SearchError> {
    if c + e == 0 {
        return Err(SearchError::EmptyParams);
    }
    let (n, k) = l_shape(c, e);
    Ok(compositions(n, k))
}

/// Size-`m` subsets of `{0..t-1}` as bit masks in colexicographic order.
pub fn subset_masks(t: usize, m: usize) -> Vec<u64> {
    assert!(t < 64, "subset universe too large");
    if m > t {
        return Vec::new();
    }
    if m == 0 {
        return vec![0];
    }
    let last = ((1u64 << m) - 1) << (t - m);
    let mut out = Vec::with_capacity(binomial(t as u64, m as u64) as usize);
    let mut v = (1u64 << m) - 1;
    loop {
        out.push(v);
        if v == last {
            return out;
        }
        // Gosper's hack
        let c = v & v.wrapping_neg();
        let r = v + c;
        v = (((r ^ v) >> 2) / c) | r;
    }
}

/// The `C` stream as 1-based position sets, colexicographic order.
pub fn enumerate_c(c: u32, e: u32) -> Vec<Vec<usize>> {
    let Some((t, m)) = c_shape(c, e) else {
        return Vec::new();
    };
    subset_masks(t, m)
        .into_iter()
        .map(|mask| {
            (0..t)
                .filter(|j| mask >> j & 1 == 1)
                .map(|j| j + 1)
                .collect()
        })
        .collect()
}

/// A block list from the `L × C` space with its position in the enumeration.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Candidate {
    pub lengths: BlockList,
    pub l_index: u64,
    pub c_index: u64,
}

/// Writes `L[i]+1` into the positions outside `mask` and `1` into those in it.
#[inline]
pub(crate) fn fill_lengths(l: &[u32], mask: u64, out: &mut [u8]) {
    let mut it = l.iter();
    for (j, slot) in out.iter_mut().enumerate() {
        *slot = if mask >> j & 1 == 1 {
            1
        } else {
            (*it.next().expect("L fills the free positions") + 1) as u8
        };
    }
}

/// Inserts `1` at the (1-based) positions `cs` and `L[i]+1` elsewhere.
pub fn assemble(c: u32, e: u32, l: &[u32], cs: &[usize]) -> Result<BlockList, SearchError> {
    let (n, k) = l_shape(c, e);
    let (t, m) = c_shape(c, e).ok_or(SearchError::NoCandidates { c, e })?;
    if c + e == 0 {
        return Err(SearchError::EmptyParams);
    }
    if l.len() != k || l.iter().sum::<u32>() != n || l.contains(&0) {
        return Err(SearchError::BadCandidate(format!(
            "L={l:?} is not a composition of {n} into {k} parts"
        )));
    }
    let mut mask = 0u64;
    for &p in cs {
        if p == 0 || p > t || mask >> (p - 1) & 1 == 1 {
            return Err(SearchError::BadCandidate(format!(
                "C={cs:?} is not a subset of 1..{t}"
            )));
        }
        mask |= 1 << (p - 1);
    }
    if cs.len() != m {
        return Err(SearchError::BadCandidate(format!(
            "|C|={} but {m} ones are required",
            cs.len()
        )));
    }
    let mut buf = vec![0u8; t];
    fill_lengths(l, mask, &mut buf);
    BlockList::xy(buf.into_iter().map(usize::from).collect())
        .map_err(|err| SearchError::BadCandidate(err.to_string()))
}

/// Every `(L, C)` pair in enumeration order: `L` outer, `C` inner.
pub fn candidates(c: u32, e: u32) -> Result<impl Iterator<Item = Candidate>, SearchError> {
    let ls = enumerate_l(c, e)?;
    let (t, m) = c_shape(c, e).ok_or(SearchError::NoCandidates { c, e })?;
    let masks = subset_masks(t, m);
    Ok(ls.enumerate().flat_map(move |(li, l)| {
        let masks = masks.clone();
        masks.into_iter().enumerate().map(move |(ci, mask)| {
            let mut buf = vec![0u8; t];
            fill_lengths(&l, mask, &mut buf);
            Candidate {
                lengths: BlockList::xy(buf.into_iter().map(usize::from).collect())
                    .expect("assembled list is valid"),
                l_index: li as u64,
                c_index: ci as u64,
            }
        })
    }))
}

/// `seq` is the least of its rotations and reflections; `scratch` needs room
/// for `4·len` entries.
#[inline]
pub(crate) fn is_canonical_fast(seq: &[u8], scratch: &mut [u8]) -> bool {
    let t = seq.len();
    let (fwd, rev) = scratch[..4 * t].split_at_mut(2 * t);
    fwd[..t].copy_from_slice(seq);
    fwd[t..].copy_from_slice(seq);
    for (dst, src) in rev.iter_mut().zip(fwd.iter().rev()) {
        *dst = *src;
    }
    let first = seq[0];
    for r in 1..t {
        if fwd[r] <= first && fwd[r..r + t] < *seq {
            return false;
        }
    }
    for r in 0..t {
        if rev[r] <= first && rev[r..r + t] < *seq {
            return false;
        }
    }
    true
}
