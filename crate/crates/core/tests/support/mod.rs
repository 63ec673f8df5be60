//! Brute-force reference implementations used only by tests.
#![allow(dead_code)]

use std::path::PathBuf;

/// Longest common subsequence by trying every subsequence of `a`.
pub fn lcs_exhaustive(a: &[u32], b: &[u32]) -> usize {
    assert!(a.len() <= 16, "exhaustive oracle is exponential");
    let is_subsequence = |s: &[u32]| {
        let mut it = b.iter();
        s.iter().all(|x| it.any(|y| y == x))
    };
    let mut best = 0;
    for mask in 0u32..(1 << a.len()) {
        let size = mask.count_ones() as usize;
        if size <= best {
            continue;
        }
        let s: Vec<u32> = (0..a.len()).filter(|i| mask & (1 << i) != 0).map(|i| a[i]).collect();
        if is_subsequence(&s) {
            best = size;
        }
    }
    best
}

/// Shared n-grams by listing every window and striking matches one by one.
pub fn shared_ngrams_brute(a: &[u32], b: &[u32], n: usize) -> usize {
    let windows = |s: &[u32]| -> Vec<Vec<u32>> {
        if s.len() < n {
            Vec::new()
        } else {
            (0..=s.len() - n).map(|i| s[i..i + n].to_vec()).collect()
        }
    };
    let mut pool = windows(b);
    let mut shared = 0;
    for w in windows(a) {
        if let Some(k) = pool.iter().position(|x| *x == w) {
            pool.remove(k);
            shared += 1;
        }
    }
    shared
}

/// Greedy tiling by scanning every `(i, j, len)` directly, without hashing:
/// repeatedly find the longest unmarked common substring, mark all of its
/// non-overlapping occurrences in `(i, j)` order, stop below `min_match`.
pub fn gst_exhaustive(a: &[u32], b: &[u32], min_match: usize) -> usize {
    let mut ma = vec![false; a.len()];
    let mut mb = vec![false; b.len()];
    let free = |m: &[bool], s: usize, len: usize| m[s..s + len].iter().all(|x| !x);
    let mut covered = 0;
    loop {
        let mut longest = 0;
        for i in 0..a.len() {
            for j in 0..b.len() {
                let mut len = 0;
                while i + len < a.len() && j + len < b.len() && a[i + len] == b[j + len] && !ma[i + len] && !mb[j + len] {
                    len += 1;
                }
                longest = longest.max(len);
            }
        }
        if longest < min_match || longest == 0 {
            return covered;
        }
        for i in 0..=a.len() - longest {
            for j in 0..=b.len() - longest {
                if a[i..i + longest] == b[j..j + longest] && free(&ma, i, longest) && free(&mb, j, longest) {
                    ma[i..i + longest].iter_mut().for_each(|m| *m = true);
                    mb[j..j + longest].iter_mut().for_each(|m| *m = true);
                    covered += longest;
                }
            }
        }
    }
}

/// Largest coverage achievable by any set of disjoint common tiles of length
/// at least `min_match`; an upper bound on the greedy result.
pub fn best_tiling_exhaustive(a: &[u32], b: &[u32], min_match: usize) -> usize {
    fn go(a: &[u32], b: &[u32], ma: &mut [bool], mb: &mut [bool], from: usize, min_match: usize) -> usize {
        let mut best = 0;
        for i in from..a.len() {
            if ma[i] {
                continue;
            }
            for j in 0..b.len() {
                let mut len = 0;
                while i + len < a.len() && j + len < b.len() && a[i + len] == b[j + len] && !ma[i + len] && !mb[j + len] {
                    len += 1;
                    if len >= min_match {
                        ma[i..i + len].iter_mut().for_each(|m| *m = true);
                        mb[j..j + len].iter_mut().for_each(|m| *m = true);
                        best = best.max(len + go(a, b, ma, mb, i + len, min_match));
                        ma[i..i + len].iter_mut().for_each(|m| *m = false);
                        mb[j..j + len].iter_mut().for_each(|m| *m = false);
                    }
                }
            }
        }
        best
    }
    go(a, b, &mut vec![false; a.len()], &mut vec![false; b.len()], 0, min_match)
}

/// Corpus location: `IPCA_ROOT` or the bundled copy.
pub fn corpus_root() -> PathBuf {
    std::env::var_os("IPCA_ROOT")
        .map(PathBuf::from)
        .unwrap_or_else(|| PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("../../data/ipca"))
}
