mod support;

use plagsim::dataset::{smote_detailed, Dataset, SmoteConfig, SYNTHETIC};
use plagsim::frontend::{token_stream, tokenize, Atom, TokenKind, TokenStream};
use plagsim::label::Label;
use plagsim::learn::logistic::{log_loss, log_loss_gradient};
use plagsim::learn::{
    stratified_folds, train, weighted_average, ClassMetrics, ClassifierKind, ConfusionCounts, Model,
};
use plagsim::similarity::{
    gst_coverage, gst_similarity, lcs_length, lcs_similarity, ngram_overlap, shared_ngrams, similarity_vector,
    Normalization, SimilarityConfig,
};
use proptest::prelude::*;
use support::{best_tiling_exhaustive, gst_exhaustive, lcs_exhaustive, shared_ngrams_brute};

fn letters(s: &str) -> Vec<u32> {
    s.bytes().map(u32::from).collect()
}

fn atoms(seq: &[u32]) -> TokenStream {
    seq.iter().map(|&x| Atom::new(TokenKind::Identifier, format!("t{x}"))).collect()
}

#[test]
fn oracle_values_for_worked_examples() {
    // each pair: brute-force value, then the frozen number it must keep producing
    let (a, b) = (letters("ABCBDAB"), letters("BDCABA"));
    assert_eq!(lcs_exhaustive(&a, &b), 4);
    assert_eq!(lcs_length(&a, &b), 4);

    let (a, b) = (letters("xyz"), letters("yzw"));
    assert_eq!(shared_ngrams_brute(&a, &b, 2), 1);
    assert_eq!(shared_ngrams(&a, &b, 2), 1);

    let (a, b) = (letters("pqrs"), letters("rspq"));
    assert_eq!(gst_exhaustive(&a, &b, 2), 4);
    assert_eq!(best_tiling_exhaustive(&a, &b, 2), 4);
    assert_eq!(gst_coverage(&a, &b, 2), 4);
    assert_eq!(lcs_exhaustive(&a, &b), 2);
}

#[test]
fn ngram_order_monotonicity_is_not_universal() {
    // a repeated bigram in `a` is capped by its single copy in `b`, while the
    // trigrams around it all match
    let a = [3, 0, 2, 3, 3, 0, 3];
    let b = [3, 3, 0, 2, 0, 2, 3, 3, 1];
    assert_eq!((shared_ngrams_brute(&a, &b, 2), shared_ngrams_brute(&a, &b, 3)), (4, 4));
    let v = similarity_vector(&atoms(&a), &atoms(&b), &SimilarityConfig::default()).unwrap();
    assert!(v.n3 > v.n2);
}

#[test]
fn ngram_scores_fall_with_order_on_corpus_pairs() {
    use plagsim::corpus::{load_corpus, LoadOptions, PairOrdering, PairPolicy};
    use plagsim::dataset::pair_vectors;
    let corpus = load_corpus(&support::corpus_root(), LoadOptions::default()).unwrap();
    let policy = PairPolicy { include_comment_copies: true, ordering: PairOrdering::Ordered };
    for (pair, v) in pair_vectors(&corpus, policy, &SimilarityConfig::default()).unwrap() {
        assert!(v.n1 >= v.n2 && v.n2 >= v.n3, "{}: {:?}", pair.id(), v);
    }
}

fn stream_strategy(max: usize) -> impl Strategy<Value = Vec<u32>> {
    prop::collection::vec(0u32..4, 1..=max)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(400))]

    #[test]
    fn dp_lcs_matches_exhaustive(a in stream_strategy(10), b in stream_strategy(10)) {
        prop_assert_eq!(lcs_length(&a, &b), lcs_exhaustive(&a, &b));
    }

    #[test]
    fn gst_matches_exhaustive_greedy(a in stream_strategy(10), b in stream_strategy(10), m in 1usize..=3) {
        let got = gst_coverage(&a, &b, m);
        prop_assert_eq!(got, gst_exhaustive(&a, &b, m));
        prop_assert!(got <= best_tiling_exhaustive(&a, &b, m));
    }

    #[test]
    fn ngrams_match_brute_force(a in stream_strategy(10), b in stream_strategy(10), n in 1usize..=3) {
        prop_assert_eq!(shared_ngrams(&a, &b, n), shared_ngrams_brute(&a, &b, n));
    }

    #[test]
    fn scores_in_range_with_consistent_summary(a in prop::collection::vec(0u32..4, 3..=30), b in prop::collection::vec(0u32..4, 3..=30)) {
        let v = similarity_vector(&atoms(&a), &atoms(&b), &SimilarityConfig::default()).unwrap();
        for s in v.scores() {
            prop_assert!((0.0..=100.0).contains(&s));
        }
        let scores = v.scores();
        let mean = scores.iter().sum::<f64>() / 7.0;
        let sd = (scores.iter().map(|s| (s - mean).powi(2)).sum::<f64>() / 6.0).sqrt();
        prop_assert!((v.avg - mean).abs() < 1e-9 && (v.stdv - sd).abs() < 1e-9);
    }

    #[test]
    fn identity_scores_are_100(a in stream_strategy(30)) {
        let s = atoms(&a);
        let v = similarity_vector(&s, &s, &SimilarityConfig::default());
        if a.len() >= 3 {
            let v = v.unwrap();
            prop_assert!(v.scores().iter().all(|&x| x == 100.0));
            prop_assert_eq!(v.stdv, 0.0);
        }
        prop_assert_eq!(lcs_similarity(&s, &s, Normalization::SourceNormalized).unwrap(), 100.0);
        prop_assert_eq!(ngram_overlap(&s, &s, 1, Normalization::Symmetric).unwrap(), 100.0);
    }

    #[test]
    fn block_permutation_keeps_gst_at_100(blocks in prop::collection::vec(prop::collection::vec(0u32..50, 3..6), 2..5), rot in 1usize..4) {
        let a: Vec<u32> = blocks.concat();
        let k = rot % blocks.len();
        let b: Vec<u32> = blocks[k..].iter().chain(&blocks[..k]).flatten().copied().collect();
        let g = gst_similarity(&atoms(&a), &atoms(&b), 3, Normalization::SourceNormalized).unwrap();
        prop_assert_eq!(g, 100.0);
        prop_assert!(lcs_similarity(&atoms(&a), &atoms(&b), Normalization::SourceNormalized).unwrap() <= 100.0);
    }
}

const SEPARATORS: [&str; 6] = [" ", "\n", "\t", " /* note */ ", " // note\n", "\r\n   "];

/// Rebuilds `source` with the chosen separators between tokens.
fn respace(source: &str, picks: &[usize]) -> String {
    let tokens = tokenize(source).unwrap();
    let mut out = String::new();
    for (i, t) in tokens.iter().enumerate() {
        if t.kind == TokenKind::PreprocessorInclude {
            out.push_str(&format!("\n#include<{}>\n", t.text));
            continue;
        }
        out.push_str(&t.text);
        out.push_str(SEPARATORS[picks[i % picks.len()] % SEPARATORS.len()]);
    }
    out
}

fn corpus_sources() -> Vec<String> {
    walkdir::WalkDir::new(support::corpus_root())
        .sort_by_file_name()
        .into_iter()
        .map(|e| e.unwrap().into_path())
        .filter(|p| p.extension().is_some_and(|e| e == "cpp"))
        .map(|p| std::fs::read_to_string(p).unwrap())
        .collect()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn layout_and_comments_do_not_change_the_stream(file in 0usize..60, picks in prop::collection::vec(0usize..6, 1..20)) {
        let sources = corpus_sources();
        let src = &sources[file % sources.len()];
        let original = token_stream(src).unwrap();
        prop_assert_eq!(token_stream(&respace(src, &picks)).unwrap(), original);
    }

    #[test]
    fn renaming_a_variable_changes_the_stream(file in 0usize..60) {
        let sources = corpus_sources();
        let src = &sources[file % sources.len()];
        let tokens = tokenize(src).unwrap();
        let Some(victim) = tokens.iter().find(|t| t.kind == TokenKind::Identifier && t.text != "main") else {
            return Ok(());
        };
        let renamed: String = tokens
            .iter()
            .map(|t| match t.kind {
                TokenKind::PreprocessorInclude => format!("\n#include<{}>\n", t.text),
                TokenKind::Identifier if t.text == victim.text => "zz_renamed ".to_string(),
                _ => format!("{} ", t.text),
            })
            .collect();
        let (a, b) = (token_stream(src).unwrap(), token_stream(&renamed).unwrap());
        prop_assert_ne!(&a, &b);
        prop_assert!(ngram_overlap(&a, &b, 1, Normalization::SourceNormalized).unwrap() < 100.0);
    }
}

fn dataset_from(rows: &[(Vec<f64>, bool)]) -> Dataset {
    let mut ds = Dataset::new(vec!["a".into(), "b".into(), "c".into()]);
    for (i, (f, p)) in rows.iter().enumerate() {
        ds.push(f.clone(), if *p { Label::P } else { Label::NP }, format!("r{i}"));
    }
    ds
}

fn rows_strategy() -> impl Strategy<Value = Vec<(Vec<f64>, bool)>> {
    prop::collection::vec((prop::collection::vec(0.0f64..100.0, 3), prop::bool::weighted(0.3)), 20..60)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn synthetic_rows_lie_between_parents(rows in rows_strategy(), seed in any::<u64>(), percent in 0.0f64..400.0) {
        let ds = dataset_from(&rows);
        let minority = ds.count(Label::P).min(ds.count(Label::NP));
        let Ok((out, origins)) = smote_detailed(&ds, &SmoteConfig { percent, k: 3, seed }) else {
            prop_assert!(minority < 4);
            return Ok(());
        };
        prop_assert_eq!(origins.len(), (percent / 100.0 * minority as f64).round() as usize);
        for (row, o) in out.instances[ds.len()..].iter().zip(&origins) {
            prop_assert_eq!(row.provenance.as_str(), SYNTHETIC);
            let (x, y) = (&ds.instances[o.donor].features, &ds.instances[o.neighbor].features);
            for f in 0..3 {
                let (lo, hi) = (x[f].min(y[f]), x[f].max(y[f]));
                prop_assert!(row.features[f] >= lo - 1e-9 && row.features[f] <= hi + 1e-9);
            }
        }
    }

    #[test]
    fn folds_partition_the_rows(labels in prop::collection::vec(prop::bool::weighted(0.4), 20..80), k in 2usize..6, seed in any::<u64>()) {
        let labels: Vec<Label> = labels.into_iter().map(|p| if p { Label::P } else { Label::NP }).collect();
        let Ok(folds) = stratified_folds(&labels, k, seed) else {
            prop_assert!(labels.iter().filter(|&&l| l == Label::P).count() < k
                || labels.iter().filter(|&&l| l == Label::NP).count() < k);
            return Ok(());
        };
        let mut all = folds.concat();
        all.sort_unstable();
        prop_assert_eq!(all, (0..labels.len()).collect::<Vec<_>>());
        let p_share = labels.iter().filter(|&&l| l == Label::P).count() as f64 / labels.len() as f64;
        for f in &folds {
            let p = f.iter().filter(|&&i| labels[i] == Label::P).count() as f64;
            prop_assert!((p - p_share * f.len() as f64).abs() <= 1.0 + 1e-9);
        }
    }

    #[test]
    fn metric_identities(tp in 0usize..500, fp in 0usize..500, fn_ in 0usize..500, tn in 0usize..500) {
        let c = ConfusionCounts { tp, fp, fn_, tn };
        if tp + fp > 0 {
            prop_assert!((c.precision() - tp as f64 / (tp + fp) as f64).abs() < 1e-9);
        }
        if tp + fn_ > 0 {
            prop_assert!((c.recall() - tp as f64 / (tp + fn_) as f64).abs() < 1e-9);
        }
        if tp > 0 {
            prop_assert!((c.f1() - 2.0 * tp as f64 / (2 * tp + fp + fn_) as f64).abs() < 1e-9);
        }
        let per_class: Vec<ClassMetrics> = [(Label::P, c), (Label::NP, c.flipped())]
            .iter()
            .map(|(l, k)| ClassMetrics { label: *l, support: k.tp + k.fn_, precision: k.precision(), recall: k.recall(), f1: k.f1() })
            .collect();
        let w = weighted_average(&per_class);
        let n = c.total();
        if n > 0 {
            // weighted recall is accuracy
            prop_assert!((w.recall - (tp + tn) as f64 / n as f64).abs() < 1e-9);
        }
    }

    #[test]
    fn naive_bayes_posteriors_sum_to_one(rows in rows_strategy()) {
        let ds = dataset_from(&rows);
        let Model::NaiveBayes(m) = train(&ClassifierKind::NaiveBayes.spec(0), &ds).unwrap() else { unreachable!() };
        for inst in &ds.instances {
            let p = m.posterior(&inst.features);
            prop_assert!((p[0] + p[1] - 1.0).abs() < 1e-9);
        }
    }

    #[test]
    fn logistic_gradient_matches_finite_differences(rows in prop::collection::vec((prop::collection::vec(-3.0f64..3.0, 3), any::<bool>()), 3..15), w in prop::collection::vec(-2.0f64..2.0, 3), bias in -1.0f64..1.0) {
        let x: Vec<&[f64]> = rows.iter().map(|(f, _)| f.as_slice()).collect();
        let y: Vec<Label> = rows.iter().map(|(_, p)| if *p { Label::P } else { Label::NP }).collect();
        let lambda = 0.01;
        let (gw, gb) = log_loss_gradient(&w, bias, &x, &y, lambda);
        let h = 1e-5;
        let close = |analytic: f64, numeric: f64| (analytic - numeric).abs() <= 1e-4 * analytic.abs().max(numeric.abs()).max(1e-3);
        for i in 0..3 {
            let (mut up, mut down) = (w.clone(), w.clone());
            up[i] += h;
            down[i] -= h;
            let numeric = (log_loss(&up, bias, &x, &y, lambda) - log_loss(&down, bias, &x, &y, lambda)) / (2.0 * h);
            prop_assert!(close(gw[i], numeric), "w{}: {} vs {}", i, gw[i], numeric);
        }
        let numeric = (log_loss(&w, bias + h, &x, &y, lambda) - log_loss(&w, bias - h, &x, &y, lambda)) / (2.0 * h);
        prop_assert!(close(gb, numeric));
    }
}
