use super::{intern, Normalization, SimilarityError};
use crate::frontend::TokenStream;

/// Longest common subsequence length, O(|a|·|b|) time and O(|b|) space.
pub fn lcs_length<T: PartialEq>(a: &[T], b: &[T]) -> usize {
    let mut prev = vec![0usize; b.len() + 1];
    let mut cur = vec![0usize; b.len() + 1];
    for x in a {
        for (j, y) in b.iter().enumerate() {
            cur[j + 1] = if x == y { prev[j] + 1 } else { cur[j].max(prev[j + 1]) };
        }
        std::mem::swap(&mut prev, &mut cur);
    }
    prev[b.len()]
}

pub(crate) fn score(a: &[u32], b: &[u32], norm: Normalization) -> Result<f64, SimilarityError> {
    if a.is_empty() {
        return Err(SimilarityError::EmptyStream);
    }
    Ok(100.0 * lcs_length(a, b) as f64 / norm.denominator(a.len(), b.len()))
}

/// LCS length as a percentage of the source stream `a`.
pub fn lcs_similarity(
    a: &TokenStream,
    b: &TokenStream,
    norm: Normalization,
) -> Result<f64, SimilarityError> {
    let (ia, ib) = intern(a, b);
    score(&ia, &ib, norm)
}
