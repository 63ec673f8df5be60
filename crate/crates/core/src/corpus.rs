//! Loading an assignment corpus laid out one directory per assignment, and
//! enumerating labeled solution pairs.
//!
//! Accepted file names:
//!
//! ```text
//! A<a>-NP-Sol-<b>.cpp                         original
//! A<a>-P-Sol-<b>-comments.cpp                 comments added
//! A<a>-P-Sol-<b>-variables.cpp                identifiers renamed
//! A<a>-P-Sol-<b>-loops.cpp                    loop kind changed
//! A<a>-P-Sol-<b>.cpp                          comments added (short form)
//! ```
//!
//! Separators may be `-` or `_`, `Sol` may be spelled `Solution`, and the
//! suffix may be singular (`comment`, `variable`, `loop`); matching is
//! case-insensitive. Anything else is a layout error.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;
use std::path::{Path, PathBuf};
use std::sync::OnceLock;

use rayon::prelude::*;
use regex::Regex;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::frontend::{token_stream, FrontendError, TokenStream};
use crate::label::Label;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CorpusError {
    #[error("corpus root {0} does not exist or is not a directory")]
    MissingRoot(PathBuf),
    #[error("layout error at {path}: {reason}")]
    Layout { path: PathBuf, reason: String },
    #[error("{}:{}:{}: {source}", path.display(), source.position().0, source.position().1)]
    Parse { path: PathBuf, source: FrontendError },
    #[error("cannot read {path}: {message}")]
    Io { path: PathBuf, message: String },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum Provenance {
    Original,
    PlagComments,
    PlagVariables,
    PlagLoops,
}

impl Provenance {
    pub fn is_original(self) -> bool {
        self == Provenance::Original
    }
}

impl fmt::Display for Provenance {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Provenance::Original => "Original",
            Provenance::PlagComments => "PlagComments",
            Provenance::PlagVariables => "PlagVariables",
            Provenance::PlagLoops => "PlagLoops",
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SolutionMeta {
    pub assignment: u32,
    pub base_solution: u32,
    pub provenance: Provenance,
    pub path: PathBuf,
    /// File name without the `.cpp` extension, e.g. `A1-P-Sol-3-variables`.
    pub name: String,
}

fn name_pattern() -> &'static Regex {
    static RE: OnceLock<Regex> = OnceLock::new();
    RE.get_or_init(|| {
        Regex::new(
            r"(?i)^A(\d+)[-_](NP|P)[-_]Sol(?:ution)?[-_]?(\d+)(?:[-_](comments?|variables?|loops?))?$",
        )
        .unwrap()
    })
}

/// Recovers assignment, base solution and provenance from a file name.
pub fn parse_solution_name(path: &Path) -> Result<SolutionMeta, CorpusError> {
    let layout = |reason: &str| CorpusError::Layout { path: path.to_path_buf(), reason: reason.to_string() };
    let file_name = path.file_name().and_then(|n| n.to_str()).ok_or_else(|| layout("file name is not UTF-8"))?;
    let stem = file_name
        .strip_suffix(".cpp")
        .ok_or_else(|| layout("not a .cpp file"))?;
    let caps = name_pattern()
        .captures(stem)
        .ok_or_else(|| layout("unrecognized solution file name"))?;

    let assignment: u32 = caps[1].parse().map_err(|_| layout("assignment number out of range"))?;
    let base_solution: u32 = caps[3].parse().map_err(|_| layout("solution number out of range"))?;
    if assignment == 0 || base_solution == 0 {
        return Err(layout("assignment and solution numbers start at 1"));
    }
    let plagiarized = caps[2].eq_ignore_ascii_case("P");
    let suffix = caps.get(4).map(|m| m.as_str().to_ascii_lowercase());
    let provenance = match (plagiarized, suffix.as_deref()) {
        (false, None) => Provenance::Original,
        (false, Some(_)) => return Err(layout("non-plagiarized solution with a plagiarism suffix")),
        (true, None) | (true, Some("comment" | "comments")) => Provenance::PlagComments,
        (true, Some("variable" | "variables")) => Provenance::PlagVariables,
        (true, Some(_)) => Provenance::PlagLoops,
    };
    Ok(SolutionMeta { assignment, base_solution, provenance, path: path.to_path_buf(), name: stem.to_string() })
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Solution {
    pub meta: SolutionMeta,
    pub stream: TokenStream,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize)]
pub struct AssignmentCounts {
    pub original: usize,
    pub plagiarized: usize,
}

#[derive(Debug, Clone, Default)]
pub struct Corpus {
    /// Sorted by assignment, then file name.
    pub solutions: Vec<Solution>,
    /// Problems tolerated during a permissive load, or an empty-corpus notice.
    pub warnings: Vec<CorpusError>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ManifestRecord {
    pub path: String,
    pub assignment: u32,
    pub base: u32,
    pub provenance: Provenance,
    pub token_count: usize,
}

impl Corpus {
    pub fn len(&self) -> usize {
        self.solutions.len()
    }

    pub fn is_empty(&self) -> bool {
        self.solutions.is_empty()
    }

    pub fn counts(&self) -> BTreeMap<u32, AssignmentCounts> {
        let mut counts: BTreeMap<u32, AssignmentCounts> = BTreeMap::new();
        for s in &self.solutions {
            let c = counts.entry(s.meta.assignment).or_default();
            if s.meta.provenance.is_original() {
                c.original += 1;
            } else {
                c.plagiarized += 1;
            }
        }
        counts
    }

    pub fn find(&self, name: &str) -> Option<&Solution> {
        self.solutions.iter().find(|s| s.meta.name == name)
    }

    /// One record per solution, paths relative to `root` with `/` separators.
    pub fn manifest(&self, root: &Path) -> Vec<ManifestRecord> {
        self.solutions
            .iter()
            .map(|s| {
                let rel = s.meta.path.strip_prefix(root).unwrap_or(&s.meta.path);
                let path = rel.components().map(|c| c.as_os_str().to_string_lossy()).collect::<Vec<_>>().join("/");
                ManifestRecord {
                    path,
                    assignment: s.meta.assignment,
                    base: s.meta.base_solution,
                    provenance: s.meta.provenance,
                    token_count: s.stream.len(),
                }
            })
            .collect()
    }
}

#[derive(Debug, Clone, Copy, Default)]
pub struct LoadOptions {
    /// Record unparseable or misnamed files as warnings instead of aborting.
    pub permissive: bool,
}

/// Loads and parses every `.cpp` file under `root`.
pub fn load_corpus(root: &Path, opts: LoadOptions) -> Result<Corpus, CorpusError> {
    if !root.is_dir() {
        return Err(CorpusError::MissingRoot(root.to_path_buf()));
    }
    let mut paths = Vec::new();
    for entry in walkdir::WalkDir::new(root).sort_by_file_name() {
        let entry = entry.map_err(|e| CorpusError::Io {
            path: e.path().map(Path::to_path_buf).unwrap_or_else(|| root.to_path_buf()),
            message: e.to_string(),
        })?;
        if entry.file_type().is_file() && entry.path().extension().is_some_and(|e| e == "cpp") {
            paths.push(entry.into_path());
        }
    }

    let loaded: Vec<Result<Solution, CorpusError>> = paths
        .par_iter()
        .map(|path| {
            let meta = parse_solution_name(path)?;
            let source = std::fs::read_to_string(path)
                .map_err(|e| CorpusError::Io { path: path.clone(), message: e.to_string() })?;
            let stream = token_stream(&source).map_err(|source| CorpusError::Parse { path: path.clone(), source })?;
            Ok(Solution { meta, stream })
        })
        .collect();

    let mut corpus = Corpus::default();
    for result in loaded {
        match result {
            Ok(s) => corpus.solutions.push(s),
            Err(e @ CorpusError::Io { .. }) => return Err(e),
            Err(e) if opts.permissive => corpus.warnings.push(e),
            Err(e) => return Err(e),
        }
    }
    corpus.solutions.sort_by(|x, y| (x.meta.assignment, &x.meta.name).cmp(&(y.meta.assignment, &y.meta.name)));

    check_consistency(&mut corpus, opts)?;
    if corpus.solutions.is_empty() {
        corpus.warnings.push(CorpusError::Layout {
            path: root.to_path_buf(),
            reason: "no solution files found".to_string(),
        });
    }
    Ok(corpus)
}

/// Rejects duplicate metadata and derivatives without an original.
fn check_consistency(corpus: &mut Corpus, opts: LoadOptions) -> Result<(), CorpusError> {
    let mut seen = BTreeSet::new();
    let mut problems = Vec::new();
    for s in &corpus.solutions {
        let key = (s.meta.assignment, s.meta.base_solution, s.meta.provenance);
        if !seen.insert(key) {
            problems.push((s.meta.name.clone(), s.meta.path.clone(), "duplicate solution metadata"));
        }
    }
    for s in &corpus.solutions {
        let has_original = seen.contains(&(s.meta.assignment, s.meta.base_solution, Provenance::Original));
        if !s.meta.provenance.is_original() && !has_original {
            problems.push((s.meta.name.clone(), s.meta.path.clone(), "plagiarized copy without its original"));
        }
    }
    if problems.is_empty() {
        return Ok(());
    }
    if !opts.permissive {
        let (_, path, reason) = problems.swap_remove(0);
        return Err(CorpusError::Layout { path, reason: reason.to_string() });
    }
    let bad: BTreeSet<String> = problems.iter().map(|p| p.0.clone()).collect();
    corpus.solutions.retain(|s| !bad.contains(&s.meta.name));
    corpus
        .warnings
        .extend(problems.into_iter().map(|(_, path, reason)| CorpusError::Layout { path, reason: reason.to_string() }));
    Ok(())
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize, Deserialize)]
pub enum PairOrdering {
    /// Each unordered pair once, the lexicographically smaller name first.
    #[default]
    Unordered,
    /// Both directions of every pair.
    Ordered,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize, Deserialize)]
pub struct PairPolicy {
    pub include_comment_copies: bool,
    pub ordering: PairOrdering,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct LabeledPair {
    /// Source solution (normalization denominator).
    pub left: SolutionMeta,
    pub right: SolutionMeta,
    pub label: Label,
}

impl LabeledPair {
    pub fn id(&self) -> String {
        format!("{}|{}", self.left.name, self.right.name)
    }
}

/// Plagiarized iff both share a base solution and at least one is a derivative.
pub fn pair_label(a: &SolutionMeta, b: &SolutionMeta) -> Label {
    let related = a.assignment == b.assignment && a.base_solution == b.base_solution;
    if related && !(a.provenance.is_original() && b.provenance.is_original()) {
        Label::P
    } else {
        Label::NP
    }
}

/// All within-assignment pairs, excluding self-pairs.
pub fn generate_pairs(corpus: &Corpus, policy: PairPolicy) -> Vec<LabeledPair> {
    let mut by_assignment: BTreeMap<u32, Vec<&SolutionMeta>> = BTreeMap::new();
    for s in &corpus.solutions {
        if s.meta.provenance == Provenance::PlagComments && !policy.include_comment_copies {
            continue;
        }
        by_assignment.entry(s.meta.assignment).or_default().push(&s.meta);
    }
    let mut pairs = Vec::new();
    for members in by_assignment.values_mut() {
        members.sort_by(|x, y| x.name.cmp(&y.name));
        for (i, left) in members.iter().enumerate() {
            for right in &members[i + 1..] {
                let label = pair_label(left, right);
                pairs.push(LabeledPair { left: (*left).clone(), right: (*right).clone(), label });
                if policy.ordering == PairOrdering::Ordered {
                    pairs.push(LabeledPair { left: (*right).clone(), right: (*left).clone(), label });
                }
            }
        }
    }
    pairs
}

#[cfg(test)]
mod tests {
    use super::*;

    fn meta(name: &str) -> SolutionMeta {
        parse_solution_name(Path::new(&format!("{name}.cpp"))).unwrap()
    }

    fn fake_corpus(names: &[&str]) -> Corpus {
        Corpus {
            solutions: names
                .iter()
                .map(|n| Solution { meta: meta(n), stream: TokenStream::default() })
                .collect(),
            warnings: vec![],
        }
    }

    fn one_assignment() -> Corpus {
        fake_corpus(&[
            "A1-NP-Sol-1",
            "A1-NP-Sol-2",
            "A1-NP-Sol-3",
            "A1-NP-Sol-4",
            "A1-P-Sol-3-comments",
            "A1-P-Sol-3-variables",
            "A1-P-Sol-3-loops",
            "A1-P-Sol-4-comments",
            "A1-P-Sol-4-variables",
            "A1-P-Sol-4-loops",
        ])
    }

    #[test]
    fn names_map_to_metadata() {
        let m = meta("A1-P-Sol-3-variables");
        assert_eq!((m.assignment, m.base_solution, m.provenance), (1, 3, Provenance::PlagVariables));
        assert_eq!(meta("A6-NP-Sol-2").provenance, Provenance::Original);
        assert_eq!(meta("A2-P-Sol-4").provenance, Provenance::PlagComments);
        assert_eq!(meta("a2_p_solution4_loop").provenance, Provenance::PlagLoops);
    }

    #[test]
    fn bad_names_are_layout_errors() {
        for name in ["Solution3.cpp", "A1-NP-Sol-3-loops.cpp", "A0-NP-Sol-1.cpp", "A1-X-Sol-1.cpp", "A1-NP-Sol-1.c"] {
            assert!(
                matches!(parse_solution_name(Path::new(name)), Err(CorpusError::Layout { .. })),
                "{name}"
            );
        }
    }

    #[test]
    fn default_policy_drops_comment_copies() {
        let pairs = generate_pairs(&one_assignment(), PairPolicy::default());
        assert_eq!(pairs.len(), 28);
        let mut positives: Vec<String> = pairs.iter().filter(|p| p.label == Label::P).map(LabeledPair::id).collect();
        positives.sort();
        assert_eq!(
            positives,
            [
                "A1-NP-Sol-3|A1-P-Sol-3-loops",
                "A1-NP-Sol-3|A1-P-Sol-3-variables",
                "A1-NP-Sol-4|A1-P-Sol-4-loops",
                "A1-NP-Sol-4|A1-P-Sol-4-variables",
                "A1-P-Sol-3-loops|A1-P-Sol-3-variables",
                "A1-P-Sol-4-loops|A1-P-Sol-4-variables",
            ]
        );
    }

    #[test]
    fn comment_copies_can_be_included() {
        let policy = PairPolicy { include_comment_copies: true, ..Default::default() };
        assert_eq!(generate_pairs(&one_assignment(), policy).len(), 45);
    }

    #[test]
    fn ordered_policy_doubles_pairs() {
        let policy = PairPolicy { ordering: PairOrdering::Ordered, ..Default::default() };
        let pairs = generate_pairs(&one_assignment(), policy);
        assert_eq!(pairs.len(), 56);
        assert_eq!(pairs[0].left, pairs[1].right);
    }

    #[test]
    fn single_solution_has_no_pairs() {
        assert!(generate_pairs(&fake_corpus(&["A1-NP-Sol-1"]), PairPolicy::default()).is_empty());
    }

    #[test]
    fn pairs_never_cross_assignments() {
        let corpus = fake_corpus(&["A1-NP-Sol-1", "A1-NP-Sol-2", "A2-NP-Sol-1", "A2-P-Sol-1-loops"]);
        let pairs = generate_pairs(&corpus, PairPolicy::default());
        assert_eq!(pairs.len(), 2);
        assert!(pairs.iter().all(|p| p.left.assignment == p.right.assignment));
        assert_eq!(pairs[1].label, Label::P);
    }

    #[test]
    fn missing_root() {
        let err = load_corpus(Path::new("/nonexistent/corpus/root"), LoadOptions::default()).unwrap_err();
        assert!(matches!(err, CorpusError::MissingRoot(_)));
    }
}
