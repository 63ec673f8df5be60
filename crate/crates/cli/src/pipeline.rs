use std::path::{Path, PathBuf};

use serde_json::json;

use plagsim::dataset::{build_dataset, smote, Dataset, SmoteConfig};
use plagsim::learn::{cross_validate, rank_features, ClassifierKind, EvaluationReport, FeatureRank};
use plagsim::similarity::SimilarityConfig;

use crate::args::{CorpusArgs, PolicyArg};
use crate::commands::{load, report_json};
use crate::render::{self, json_text, metadata, stamped, text_table, to_value};
use crate::{CliError, TOOL, VERSION};

pub const BUNDLE_FILES: [&str; 6] =
    ["dataset.csv", "dataset-smote.csv", "eval-original.json", "eval-smote.json", "feature-ranks.json", "summary.txt"];

#[derive(Debug, Clone)]
pub struct PipelineOptions {
    pub corpus_root: PathBuf,
    pub out_dir: PathBuf,
    pub seed: u64,
    pub policy: PolicyArg,
    pub permissive: bool,
    pub similarity: SimilarityConfig,
    pub smote_percent: f64,
    pub folds: usize,
}

struct Variant {
    name: &'static str,
    data: Dataset,
    reports: Vec<EvaluationReport>,
    ranks: FeatureRank,
}

fn evaluate(name: &'static str, data: Dataset, opts: &PipelineOptions) -> Result<Variant, CliError> {
    let reports = ClassifierKind::ALL
        .iter()
        .map(|k| cross_validate(&k.spec(opts.seed), &data, opts.folds, opts.seed))
        .collect::<Result<Vec<_>, _>>()?;
    let ranks = rank_features(&data, opts.folds, opts.seed)?;
    Ok(Variant { name, data, reports, ranks })
}

fn summary(opts: &PipelineOptions, variants: &[Variant]) -> String {
    let mut s = format!("{TOOL} {VERSION}\nseed: {}\nfolds: {}\nsmote percent: {}\n\n", opts.seed, opts.folds, opts.smote_percent);

    s.push_str("Class distribution\n");
    let rows: Vec<Vec<String>> = variants
        .iter()
        .map(|v| {
            let [np, p] = v.data.class_counts();
            vec![v.name.to_string(), p.to_string(), np.to_string(), v.data.len().to_string()]
        })
        .collect();
    s.push_str(&text_table(&["Dataset", "P", "NP", "Total"], &rows, 1));

    s.push_str("\nClassification, weighted averages\n");
    let mut header = vec!["Classifier".to_string()];
    for v in variants {
        for m in ["P", "R", "F1"] {
            header.push(format!("{m}({})", v.name));
        }
    }
    let rows: Vec<Vec<String>> = ClassifierKind::ALL
        .iter()
        .enumerate()
        .map(|(i, k)| {
            let mut row = vec![k.name().to_string()];
            for v in variants {
                let w = v.reports[i].weighted;
                row.extend([w.precision, w.recall, w.f1].iter().map(|x| format!("{:.3}", render::round(*x, 3))));
            }
            row
        })
        .collect();
    let header_refs: Vec<&str> = header.iter().map(String::as_str).collect();
    s.push_str(&text_table(&header_refs, &rows, 1));

    s.push_str("\nFeature ranks\n");
    let mut header = vec!["Feature".to_string()];
    header.extend(variants.iter().map(|v| v.name.to_string()));
    let rows: Vec<Vec<String>> = variants[0]
        .ranks
        .ranks
        .iter()
        .map(|r| {
            let mut row = vec![r.feature.clone()];
            row.extend(variants.iter().map(|v| v.ranks.rank_of(&r.feature).unwrap_or(0).to_string()));
            row
        })
        .collect();
    let header_refs: Vec<&str> = header.iter().map(String::as_str).collect();
    s.push_str(&text_table(&header_refs, &rows, 1));
    s
}

fn render_bundle(opts: &PipelineOptions, variants: &[Variant]) -> Result<Vec<(&'static str, Vec<u8>)>, CliError> {
    let policy = format!("{:?}", opts.policy).to_lowercase();
    let mut files = Vec::new();
    for (file, v) in BUNDLE_FILES[..2].iter().zip(variants) {
        let meta = metadata(
            opts.seed,
            &[("policy", policy.clone()), ("variant", v.name.to_string()), ("smote_percent", opts.smote_percent.to_string())],
        );
        let mut buf = Vec::new();
        v.data.write_csv(&mut buf, &meta)?;
        files.push((*file, buf));
    }
    for (file, v) in BUNDLE_FILES[2..4].iter().zip(variants) {
        let [np, p] = v.data.class_counts();
        let body = json!({
            "dataset": v.name,
            "folds": opts.folds,
            "class_counts": {"NP": np, "P": p},
            "reports": report_json(&v.reports),
        });
        files.push((*file, json_text(&stamped(opts.seed, body)).into_bytes()));
    }
    let mut ranks = serde_json::Map::new();
    ranks.insert("folds".into(), json!(opts.folds));
    for v in variants {
        ranks.insert(v.name.into(), to_value(&v.ranks.ranks));
    }
    files.push((BUNDLE_FILES[4], json_text(&stamped(opts.seed, serde_json::Value::Object(ranks))).into_bytes()));
    files.push((BUNDLE_FILES[5], summary(opts, variants).into_bytes()));
    Ok(files)
}

fn staging_dir(out: &Path) -> PathBuf {
    let name = out.file_name().map_or_else(|| "bundle".into(), |n| n.to_string_lossy().into_owned());
    out.with_file_name(format!(".{name}.staging-{}", std::process::id()))
}

/// Builds both dataset variants, evaluates every classifier, ranks features
/// and writes the bundle. Files are staged first so a failure leaves no
/// partial bundle behind. Returns the summary text.
pub fn run_pipeline(opts: &PipelineOptions) -> Result<String, CliError> {
    if !(opts.smote_percent >= 0.0 && opts.smote_percent.is_finite()) {
        return Err(CliError::Config("--percent must be a finite value >= 0".into()));
    }
    if opts.folds < 2 {
        return Err(CliError::Config("--folds must be >= 2".into()));
    }
    let corpus = load(&CorpusArgs { corpus: opts.corpus_root.clone(), policy: opts.policy, permissive: opts.permissive })?;
    let original = build_dataset(&corpus, opts.policy.policy(), &opts.similarity)?;
    let balanced = smote(&original, &SmoteConfig { percent: opts.smote_percent, k: 5, seed: opts.seed })?;
    let variants = [evaluate("original", original, opts)?, evaluate("smote", balanced, opts)?];
    let files = render_bundle(opts, &variants)?;

    let staging = staging_dir(&opts.out_dir);
    let result = write_staged(&staging, &opts.out_dir, &files);
    if staging.exists() {
        let _ = std::fs::remove_dir_all(&staging);
    }
    if result.is_err() {
        for (name, _) in &files {
            let _ = std::fs::remove_file(opts.out_dir.join(name));
        }
    }
    result?;
    Ok(summary(opts, &variants))
}

fn write_staged(staging: &Path, out: &Path, files: &[(&str, Vec<u8>)]) -> Result<(), CliError> {
    std::fs::create_dir_all(staging).map_err(|e| CliError::io(staging, e))?;
    for (name, bytes) in files {
        render::write_file(&staging.join(name), bytes)?;
    }
    std::fs::create_dir_all(out).map_err(|e| CliError::io(out, e))?;
    for (name, _) in files {
        let target = out.join(name);
        std::fs::rename(staging.join(name), &target).map_err(|e| CliError::io(&target, e))?;
    }
    Ok(())
}
