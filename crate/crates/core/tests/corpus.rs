mod support;

use plagsim::corpus::{generate_pairs, load_corpus, CorpusError, LoadOptions, PairPolicy, Provenance};
use plagsim::frontend::{parse, token_stream, tokenize, TokenStream};
use plagsim::Label;

use support::corpus_root;

#[test]
fn full_corpus_loads() {
    let corpus = load_corpus(&corpus_root(), LoadOptions::default()).unwrap();
    assert_eq!(corpus.len(), 60);
    assert!(corpus.warnings.is_empty());
    let counts = corpus.counts();
    assert_eq!(counts.len(), 6);
    let originals: usize = counts.values().map(|c| c.original).sum();
    let plagiarized: usize = counts.values().map(|c| c.plagiarized).sum();
    assert_eq!((originals, plagiarized), (24, 36));

    let m = &corpus.find("A1-P-Sol-3-variables").unwrap().meta;
    assert_eq!((m.assignment, m.base_solution, m.provenance), (1, 3, Provenance::PlagVariables));
}

#[test]
fn linearization_reproduces_lexed_atoms_for_every_file() {
    let corpus = load_corpus(&corpus_root(), LoadOptions::default()).unwrap();
    for s in &corpus.solutions {
        let source = std::fs::read_to_string(&s.meta.path).unwrap();
        let tokens = tokenize(&source).unwrap();
        assert_eq!(TokenStream::from_tokens(&tokens), s.stream, "{}", s.meta.name);
        // re-rendered text parses back to the same stream
        let again = token_stream(&s.stream.render()).unwrap();
        assert_eq!(again, s.stream, "{}", s.meta.name);
        parse(&tokens).unwrap();
    }
}

#[test]
fn default_pairs_over_full_corpus() {
    let corpus = load_corpus(&corpus_root(), LoadOptions::default()).unwrap();
    let pairs = generate_pairs(&corpus, PairPolicy::default());
    assert_eq!(pairs.len(), 6 * 28);
    assert_eq!(pairs.iter().filter(|p| p.label == Label::P).count(), 36);
    for p in &pairs {
        assert_eq!(p.left.assignment, p.right.assignment);
        assert_ne!(p.left.name, p.right.name);
        assert!(p.left.name < p.right.name);
        if p.label == Label::P {
            assert_eq!(p.left.base_solution, p.right.base_solution);
        }
    }
}

#[test]
fn empty_directory_warns() {
    let dir = tempfile::tempdir().unwrap();
    let corpus = load_corpus(dir.path(), LoadOptions::default()).unwrap();
    assert!(corpus.is_empty());
    assert!(matches!(corpus.warnings.as_slice(), [CorpusError::Layout { .. }]));
}

#[test]
fn broken_file_aborts_unless_permissive() {
    let dir = tempfile::tempdir().unwrap();
    std::fs::write(dir.path().join("A1-NP-Sol-1.cpp"), "int main(){return 0;}").unwrap();
    std::fs::write(dir.path().join("A1-NP-Sol-2.cpp"), "int main(){ for( }").unwrap();
    let err = load_corpus(dir.path(), LoadOptions::default()).unwrap_err();
    assert!(matches!(err, CorpusError::Parse { .. }), "{err}");
    assert!(err.to_string().contains("A1-NP-Sol-2.cpp:1:"), "{err}");

    let corpus = load_corpus(dir.path(), LoadOptions { permissive: true }).unwrap();
    assert_eq!(corpus.len(), 1);
    assert_eq!(corpus.warnings.len(), 1);
}

#[test]
fn unknown_names_and_orphans_are_layout_errors() {
    let dir = tempfile::tempdir().unwrap();
    std::fs::write(dir.path().join("solution.cpp"), "int main(){}").unwrap();
    assert!(matches!(load_corpus(dir.path(), LoadOptions::default()), Err(CorpusError::Layout { .. })));

    let dir = tempfile::tempdir().unwrap();
    std::fs::write(dir.path().join("A1-P-Sol-2-loops.cpp"), "int main(){}").unwrap();
    assert!(matches!(load_corpus(dir.path(), LoadOptions::default()), Err(CorpusError::Layout { .. })));
    let corpus = load_corpus(dir.path(), LoadOptions { permissive: true }).unwrap();
    assert!(corpus.solutions.is_empty());
}

#[test]
fn manifest_records_relative_paths() {
    let root = corpus_root();
    let corpus = load_corpus(&root, LoadOptions::default()).unwrap();
    let manifest = corpus.manifest(&root);
    assert_eq!(manifest.len(), 60);
    assert_eq!(manifest[0].path, "A1/A1-NP-Sol-1.cpp");
    assert!(manifest.iter().all(|r| r.token_count > 0));
}
