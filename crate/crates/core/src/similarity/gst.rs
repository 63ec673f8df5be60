//! Greedy String Tiling with Karp–Rabin window matching.
//!
//! Each round finds the length `L` of the longest common substring that lies
//! entirely in unmarked regions of both streams, then marks every match of
//! length `L` that does not overlap an earlier tile, in order of lowest start
//! in `a` then lowest start in `b`. Rounds repeat until `L < min_match`.
//!
//! Window hashes are rolling polynomial hashes over unmarked runs; every hash
//! hit is verified element-wise, so collisions cannot produce false tiles.

use std::collections::HashMap;

use serde::{Deserialize, Serialize};

use super::{intern, Normalization, SimilarityError};
use crate::frontend::TokenStream;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct Tile {
    pub a_start: usize,
    pub b_start: usize,
    pub len: usize,
}

const BASE: u64 = 0x100_0000_01b3;

struct Marks {
    a: Vec<bool>,
    b: Vec<bool>,
}

/// Longest stretch of consecutive unmarked positions.
fn longest_unmarked_run(marked: &[bool]) -> usize {
    let mut best = 0;
    let mut run = 0;
    for &m in marked {
        run = if m { 0 } else { run + 1 };
        best = best.max(run);
    }
    best
}

/// Start positions and hashes of every fully unmarked window of `len`.
fn window_hashes(seq: &[u32], marked: &[bool], len: usize) -> Vec<(usize, u64)> {
    let mut out = Vec::new();
    if len == 0 || seq.len() < len {
        return out;
    }
    let high = BASE.wrapping_pow(len as u32 - 1);
    let mut hash = 0u64;
    let mut run = 0usize;
    for (i, &x) in seq.iter().enumerate() {
        if marked[i] {
            run = 0;
            hash = 0;
            continue;
        }
        let v = u64::from(x) + 1;
        if run == len {
            let old = u64::from(seq[i - len]) + 1;
            hash = hash.wrapping_sub(old.wrapping_mul(high));
        } else {
            run += 1;
        }
        hash = hash.wrapping_mul(BASE).wrapping_add(v);
        if run == len {
            out.push((i + 1 - len, hash));
        }
    }
    out
}

/// All verified pairs `(i, j)` with `a[i..i+len] == b[j..j+len]`, both unmarked,
/// sorted by `i` then `j`. With `first_only`, stops at the first hit.
fn matches_of_len(a: &[u32], b: &[u32], marks: &Marks, len: usize, first_only: bool) -> Vec<(usize, usize)> {
    let mut table: HashMap<u64, Vec<usize>> = HashMap::new();
    for (j, h) in window_hashes(b, &marks.b, len) {
        table.entry(h).or_default().push(j);
    }
    let mut out = Vec::new();
    for (i, h) in window_hashes(a, &marks.a, len) {
        let Some(starts) = table.get(&h) else { continue };
        for &j in starts {
            if a[i..i + len] == b[j..j + len] {
                out.push((i, j));
                if first_only {
                    return out;
                }
            }
        }
    }
    out
}

fn longest_common_unmarked(a: &[u32], b: &[u32], marks: &Marks, min_match: usize) -> Option<usize> {
    let upper = longest_unmarked_run(&marks.a).min(longest_unmarked_run(&marks.b));
    if upper < min_match {
        return None;
    }
    let exists = |len| !matches_of_len(a, b, marks, len, true).is_empty();
    if !exists(min_match) {
        return None;
    }
    // existence is monotone in the length, so binary search for the maximum
    let (mut lo, mut hi) = (min_match, upper);
    while lo < hi {
        let mid = lo + (hi - lo).div_ceil(2);
        if exists(mid) {
            lo = mid;
        } else {
            hi = mid - 1;
        }
    }
    Some(lo)
}

/// Runs greedy tiling and returns the tiles in the order they were marked.
pub fn greedy_tiles(a: &[u32], b: &[u32], min_match: usize) -> Vec<Tile> {
    assert!(min_match >= 1, "minimum match length must be >= 1");
    let mut marks = Marks { a: vec![false; a.len()], b: vec![false; b.len()] };
    let mut tiles = Vec::new();
    while let Some(len) = longest_common_unmarked(a, b, &marks, min_match) {
        for (i, j) in matches_of_len(a, b, &marks, len, false) {
            let occluded = marks.a[i..i + len].iter().any(|&m| m) || marks.b[j..j + len].iter().any(|&m| m);
            if occluded {
                continue;
            }
            marks.a[i..i + len].iter_mut().for_each(|m| *m = true);
            marks.b[j..j + len].iter_mut().for_each(|m| *m = true);
            tiles.push(Tile { a_start: i, b_start: j, len });
        }
    }
    tiles
}

/// Number of positions covered by tiles (identical in both streams).
pub fn gst_coverage(a: &[u32], b: &[u32], min_match: usize) -> usize {
    greedy_tiles(a, b, min_match).iter().map(|t| t.len).sum()
}

pub(crate) fn score(
    a: &[u32],
    b: &[u32],
    min_match: usize,
    norm: Normalization,
) -> Result<f64, SimilarityError> {
    if min_match == 0 {
        return Err(SimilarityError::InvalidConfig("minimum match length must be >= 1".into()));
    }
    if a.is_empty() {
        return Err(SimilarityError::EmptyStream);
    }
    let covered = gst_coverage(a, b, min_match) as f64;
    Ok(100.0 * covered / norm.denominator(a.len(), b.len()))
}

/// Tiled coverage of `a` as a percentage.
pub fn gst_similarity(
    a: &TokenStream,
    b: &TokenStream,
    min_match: usize,
    norm: Normalization,
) -> Result<f64, SimilarityError> {
    let (ia, ib) = intern(a, b);
    score(&ia, &ib, min_match, norm)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::similarity::{lcs_similarity, test_util::stream};
    use Normalization::SourceNormalized;

    #[test]
    fn identity_is_one_tile() {
        let a = stream("abcabcxy");
        let (ia, ib) = intern(&a, &a);
        assert_eq!(greedy_tiles(&ia, &ib, 2), vec![Tile { a_start: 0, b_start: 0, len: 8 }]);
        assert_eq!(gst_similarity(&a, &a, 3, SourceNormalized).unwrap(), 100.0);
    }

    #[test]
    fn transposed_blocks() {
        let a = stream("pqrs");
        let b = stream("rspq");
        assert_eq!(gst_similarity(&a, &b, 2, SourceNormalized).unwrap(), 100.0);
        assert_eq!(lcs_similarity(&a, &b, SourceNormalized).unwrap(), 50.0);
    }

    #[test]
    fn nothing_in_common() {
        for m in 1..=3 {
            assert_eq!(gst_similarity(&stream("pqr"), &stream("xyz"), m, SourceNormalized).unwrap(), 0.0);
        }
    }

    #[test]
    fn min_match_filters_short_tiles() {
        // only unit matches exist
        assert_eq!(gst_similarity(&stream("abc"), &stream("cba"), 1, SourceNormalized).unwrap(), 100.0);
        assert_eq!(gst_similarity(&stream("abc"), &stream("cba"), 2, SourceNormalized).unwrap(), 0.0);
    }

    #[test]
    fn ties_break_by_lowest_start() {
        // "ab" occurs twice in b; the first occurrence wins
        let (ia, ib) = intern(&stream("ab"), &stream("abab"));
        assert_eq!(greedy_tiles(&ia, &ib, 1), vec![Tile { a_start: 0, b_start: 0, len: 2 }]);
    }

    #[test]
    fn longest_tile_is_marked_first() {
        let (ia, ib) = intern(&stream("xyzabcd"), &stream("abcdxyz"));
        let tiles = greedy_tiles(&ia, &ib, 2);
        assert_eq!(tiles[0], Tile { a_start: 3, b_start: 0, len: 4 });
        assert_eq!(tiles[1], Tile { a_start: 0, b_start: 4, len: 3 });
    }

    #[test]
    fn rolling_hash_matches_direct_hash() {
        let seq = [3u32, 1, 4, 1, 5, 9, 2, 6];
        let marked = [false, false, false, true, false, false, false, false];
        let got = window_hashes(&seq, &marked, 2);
        let direct = |i: usize| (u64::from(seq[i]) + 1).wrapping_mul(BASE).wrapping_add(u64::from(seq[i + 1]) + 1);
        let want: Vec<_> = [0, 1, 4, 5, 6].iter().map(|&i| (i, direct(i))).collect();
        assert_eq!(got, want);
    }
}
