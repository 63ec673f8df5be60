use std::collections::HashMap;

use super::{intern, Normalization, SimilarityError};
use crate::frontend::TokenStream;

/// Size of the multiset intersection of contiguous `n`-windows.
pub fn shared_ngrams(a: &[u32], b: &[u32], n: usize) -> usize {
    if n == 0 || a.len() < n || b.len() < n {
        return 0;
    }
    let mut counts: HashMap<&[u32], usize> = HashMap::new();
    for w in b.windows(n) {
        *counts.entry(w).or_default() += 1;
    }
    let mut shared = 0;
    for w in a.windows(n) {
        if let Some(c) = counts.get_mut(w) {
            if *c > 0 {
                *c -= 1;
                shared += 1;
            }
        }
    }
    shared
}

pub(crate) fn score(a: &[u32], b: &[u32], n: usize, norm: Normalization) -> Result<f64, SimilarityError> {
    let grams_a = (a.len() + 1).saturating_sub(n);
    let grams_b = (b.len() + 1).saturating_sub(n);
    if grams_a == 0 && grams_b == 0 {
        return Err(SimilarityError::EmptyStream);
    }
    if grams_a == 0 {
        return Ok(0.0);
    }
    let shared = shared_ngrams(a, b, n) as f64;
    Ok(100.0 * shared / norm.denominator(grams_a, grams_b))
}

/// Percentage of `a`'s `n`-grams also present in `b` (multiset semantics).
pub fn ngram_overlap(
    a: &TokenStream,
    b: &TokenStream,
    n: usize,
    norm: Normalization,
) -> Result<f64, SimilarityError> {
    if n == 0 {
        return Err(SimilarityError::InvalidConfig("n-gram order must be >= 1".into()));
    }
    let (ia, ib) = intern(a, b);
    score(&ia, &ib, n, norm)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::similarity::test_util::stream;
    use Normalization::*;

    #[test]
    fn identity() {
        let a = stream("abcab");
        for n in 1..=5 {
            assert_eq!(ngram_overlap(&a, &a, n, SourceNormalized).unwrap(), 100.0);
        }
    }

    #[test]
    fn bigram_half_shared() {
        let s = ngram_overlap(&stream("xyz"), &stream("yzw"), 2, SourceNormalized).unwrap();
        assert_eq!(s, 50.0);
    }

    #[test]
    fn disjoint_alphabets() {
        assert_eq!(ngram_overlap(&stream("xy"), &stream("pq"), 1, SourceNormalized).unwrap(), 0.0);
    }

    #[test]
    fn multiset_not_set() {
        // a has "aa" twice, b once: only one of a's two windows is matched
        assert_eq!(ngram_overlap(&stream("aaa"), &stream("aa"), 2, SourceNormalized).unwrap(), 50.0);
    }

    #[test]
    fn short_source_and_undefined_case() {
        assert_eq!(ngram_overlap(&stream("ab"), &stream("abc"), 3, SourceNormalized).unwrap(), 0.0);
        assert_eq!(ngram_overlap(&stream("abc"), &stream("ab"), 3, SourceNormalized).unwrap(), 0.0);
        assert_eq!(
            ngram_overlap(&stream("ab"), &stream("a"), 3, SourceNormalized),
            Err(SimilarityError::EmptyStream)
        );
    }

    #[test]
    fn symmetric_uses_mean_count() {
        // windows: a has 3 bigrams, b has 1; shared 1; mean count 2
        assert_eq!(ngram_overlap(&stream("abcd"), &stream("bc"), 2, Symmetric).unwrap(), 50.0);
    }
}
