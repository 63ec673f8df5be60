use std::collections::BTreeMap;
use std::fs::File;
use std::io::{BufWriter, Write};
use std::path::Path;

use serde_json::{json, Value};

use plagsim::corpus::{load_corpus, pair_label, parse_solution_name, Corpus, LoadOptions};
use plagsim::dataset::{build_dataset, pair_vectors, smote as oversample, Dataset, SmoteConfig};
use plagsim::frontend::{dump_tree, parse, token_stream, tokenize, FrontendError};
use plagsim::learn::{cross_validate, rank_features, train, EvaluationReport};
use plagsim::similarity::{similarity_vector, SimilarityConfig, SimilarityError};

use crate::args::{CompareArgs, CorpusArgs, DatasetArgs, DumpArgs, EvalArgs, MatrixArgs, PipelineArgs, RankArgs, SmoteArgs};
use crate::pipeline::{run_pipeline, PipelineOptions};
use crate::render::{self, json_text, metadata, round_floats, stamped, to_value, METRIC_DECIMALS};
use crate::{Cli, CliError};

fn emit(out: &mut dyn Write, text: &str) -> Result<(), CliError> {
    out.write_all(text.as_bytes()).map_err(|e| CliError::Io(format!("standard output: {e}")))
}

fn read_source(path: &Path) -> Result<String, CliError> {
    std::fs::read_to_string(path).map_err(|e| CliError::io(path, e))
}

fn similarity_config(cli: &Cli) -> SimilarityConfig {
    SimilarityConfig { normalization: cli.normalization(), ..SimilarityConfig::default() }
}

fn create(path: &Path) -> Result<BufWriter<File>, CliError> {
    File::create(path).map(BufWriter::new).map_err(|e| CliError::io(path, e))
}

pub(crate) fn load(args: &CorpusArgs) -> Result<Corpus, CliError> {
    let corpus = load_corpus(&args.corpus, LoadOptions { permissive: args.permissive })?;
    for w in &corpus.warnings {
        eprintln!("warning: {w}");
    }
    if corpus.is_empty() {
        return Err(CliError::Input(format!("{}: no solutions found", args.corpus.display())));
    }
    Ok(corpus)
}

pub(crate) fn read_dataset(path: &Path) -> Result<Dataset, CliError> {
    let file = File::open(path).map_err(|e| CliError::io(path, e))?;
    Dataset::read_csv(file).map_err(|e| CliError::from(e).with_context(path))
}

pub(crate) fn write_dataset(ds: &Dataset, path: &Path, meta: &[(&str, String)]) -> Result<(), CliError> {
    let mut buf = Vec::new();
    ds.write_csv(&mut buf, meta)?;
    render::write_file(path, &buf)
}

pub fn compare(cli: &Cli, args: &CompareArgs, out: &mut dyn Write) -> Result<(), CliError> {
    let stream_of = |path: &Path| {
        let text = read_source(path)?;
        token_stream(&text).map_err(|e| CliError::frontend(path, &e))
    };
    let (a, b) = (stream_of(&args.file_a)?, stream_of(&args.file_b)?);
    let v = similarity_vector(&a, &b, &similarity_config(cli)).map_err(|e| match e {
        SimilarityError::EmptyStream => CliError::Input(format!("{e}")),
        SimilarityError::InvalidConfig(_) => CliError::Config(e.to_string()),
    })?;
    let name = |p: &Path| p.file_stem().map_or_else(|| p.display().to_string(), |s| s.to_string_lossy().into_owned());
    let (name_a, name_b) = (name(&args.file_a), name(&args.file_b));
    let gold = match (parse_solution_name(&args.file_a), parse_solution_name(&args.file_b)) {
        (Ok(x), Ok(y)) => Some(pair_label(&x, &y)),
        _ => None,
    };
    let predicted = match &args.train {
        Some(path) => {
            let ds = read_dataset(path)?;
            let model = train(&args.classifier.spec(cli.seed), &ds)?;
            Some(model.predict(&v.scores()))
        }
        None => None,
    };
    if cli.json {
        let body = json!({
            "solution_i": name_a,
            "solution_j": name_b,
            "scores": render::scores_json(&v),
            "gold": gold.map(|l| l.as_str()),
            "predicted": predicted.map(|l| l.as_str()),
        });
        return emit(out, &json_text(&stamped(cli.seed, body)));
    }
    let row = render::matrix_record(1, &name_a, &name_b, &v);
    let mut text = render::text_table(&render::MATRIX_HEADER[1..], &[row[1..].to_vec()], 2);
    if let Some(l) = gold {
        text.push_str(&format!("gold: {l}\n"));
    }
    if let Some(l) = predicted {
        text.push_str(&format!("predicted ({}): {l}\n", args.classifier.name()));
    }
    emit(out, &text)
}

pub fn matrix(cli: &Cli, args: &MatrixArgs, out: &mut dyn Write) -> Result<(), CliError> {
    let corpus = load(&args.corpus)?;
    let rows = pair_vectors(&corpus, args.corpus.policy.policy(), &similarity_config(cli))?;
    let mut by_assignment: BTreeMap<u32, Vec<_>> = BTreeMap::new();
    for (pair, v) in rows {
        by_assignment.entry(pair.left.assignment).or_default().push((pair, v));
    }
    std::fs::create_dir_all(&args.out).map_err(|e| CliError::io(&args.out, e))?;
    let meta = metadata(cli.seed, &[("policy", format!("{:?}", args.corpus.policy).to_lowercase())]);
    let mut summary = Vec::new();
    for (assignment, mut rows) in by_assignment {
        rows.sort_by(|(pa, va), (pb, vb)| vb.avg.total_cmp(&va.avg).then_with(|| pa.id().cmp(&pb.id())));
        let path = args.out.join(format!("A{assignment}-matrix.csv"));
        let mut buf: Vec<u8> = Vec::new();
        for (k, v) in &meta {
            buf.extend(format!("# {k}: {v}\n").as_bytes());
        }
        {
            let mut w = csv::WriterBuilder::new().terminator(csv::Terminator::Any(b'\n')).from_writer(&mut buf);
            let io = |e: csv::Error| CliError::io(&path, e);
            w.write_record(render::MATRIX_HEADER).map_err(io)?;
            for (sn, (pair, v)) in rows.iter().enumerate() {
                w.write_record(render::matrix_record(sn + 1, &pair.left.name, &pair.right.name, v)).map_err(io)?;
            }
            w.flush().map_err(|e| CliError::io(&path, e))?;
        }
        render::write_file(&path, &buf)?;
        summary.push(vec![path.display().to_string(), rows.len().to_string()]);
    }
    if cli.json {
        let files: Vec<Value> = summary.iter().map(|r| json!({"path": r[0], "rows": r[1].parse::<usize>().unwrap_or(0)})).collect();
        return emit(out, &json_text(&stamped(cli.seed, json!({ "files": files }))));
    }
    emit(out, &render::text_table(&["File", "Rows"], &summary, 1))
}

pub fn dataset(cli: &Cli, args: &DatasetArgs, out: &mut dyn Write) -> Result<(), CliError> {
    let corpus = load(&args.corpus)?;
    let ds = build_dataset(&corpus, args.corpus.policy.policy(), &similarity_config(cli))?;
    let meta = metadata(cli.seed, &[("policy", format!("{:?}", args.corpus.policy).to_lowercase())]);
    write_dataset(&ds, &args.out, &meta)?;
    if let Some(path) = &args.arff {
        let mut w = create(path)?;
        ds.write_arff(&mut w, "plagiarism", &meta).and_then(|_| w.flush()).map_err(|e| CliError::io(path, e))?;
    }
    if let Some(path) = &args.manifest {
        let body = json!({ "solutions": to_value(&corpus.manifest(&args.corpus.corpus)) });
        render::write_file(path, json_text(&stamped(cli.seed, body)).as_bytes())?;
    }
    report_counts(cli, out, &[("dataset", &ds)])
}

fn report_counts(cli: &Cli, out: &mut dyn Write, sets: &[(&str, &Dataset)]) -> Result<(), CliError> {
    if cli.json {
        let body: serde_json::Map<String, Value> = sets
            .iter()
            .map(|(name, ds)| {
                let [np, p] = ds.class_counts();
                (name.to_string(), json!({"NP": np, "P": p, "total": ds.len()}))
            })
            .collect();
        return emit(out, &json_text(&stamped(cli.seed, Value::Object(body))));
    }
    let rows: Vec<Vec<String>> = sets
        .iter()
        .map(|(name, ds)| {
            let [np, p] = ds.class_counts();
            vec![name.to_string(), p.to_string(), np.to_string(), ds.len().to_string()]
        })
        .collect();
    emit(out, &render::text_table(&["Dataset", "P", "NP", "Total"], &rows, 1))
}

pub fn smote(cli: &Cli, args: &SmoteArgs, out: &mut dyn Write) -> Result<(), CliError> {
    let ds = read_dataset(&args.input)?;
    let cfg = SmoteConfig { percent: args.percent, k: args.k, seed: cli.seed };
    let balanced = oversample(&ds, &cfg)?;
    let meta = metadata(cli.seed, &[("smote_percent", args.percent.to_string()), ("smote_k", args.k.to_string())]);
    write_dataset(&balanced, &args.out, &meta)?;
    report_counts(cli, out, &[("input", &ds), ("output", &balanced)])
}

pub(crate) fn report_json(reports: &[EvaluationReport]) -> Value {
    round_floats(to_value(&reports), METRIC_DECIMALS)
}

pub fn eval(cli: &Cli, args: &EvalArgs, out: &mut dyn Write) -> Result<(), CliError> {
    let ds = read_dataset(&args.input)?;
    let report = cross_validate(&args.classifier.spec(cli.seed), &ds, args.folds, cli.seed)?;
    let value = stamped(cli.seed, json!({ "report": report_json(std::slice::from_ref(&report))[0] }));
    if let Some(path) = &args.out {
        render::write_file(path, json_text(&value).as_bytes())?;
    }
    if cli.json {
        emit(out, &json_text(&value))
    } else {
        emit(out, &report.to_text())
    }
}

pub fn rank(cli: &Cli, args: &RankArgs, out: &mut dyn Write) -> Result<(), CliError> {
    let ds = read_dataset(&args.input)?;
    let ranks = rank_features(&ds, args.folds, cli.seed)?;
    let value = stamped(cli.seed, json!({ "folds": ranks.folds, "ranks": to_value(&ranks.ranks) }));
    if let Some(path) = &args.out {
        render::write_file(path, json_text(&value).as_bytes())?;
    }
    if cli.json {
        emit(out, &json_text(&value))
    } else {
        emit(out, &ranks.to_text())
    }
}

pub fn pipeline(cli: &Cli, args: &PipelineArgs, out: &mut dyn Write) -> Result<(), CliError> {
    let opts = PipelineOptions {
        corpus_root: args.corpus.corpus.clone(),
        out_dir: args.out.clone(),
        seed: cli.seed,
        policy: args.corpus.policy,
        permissive: args.corpus.permissive,
        similarity: similarity_config(cli),
        smote_percent: args.percent,
        folds: args.folds,
    };
    let summary = run_pipeline(&opts)?;
    if cli.json {
        let files: Vec<String> =
            crate::BUNDLE_FILES.iter().map(|f| args.out.join(f).display().to_string()).collect();
        emit(out, &json_text(&stamped(cli.seed, json!({ "files": files }))))
    } else {
        emit(out, &summary)
    }
}

pub fn dump(args: &DumpArgs, out: &mut dyn Write) -> Result<(), CliError> {
    let text = read_source(&args.file)?;
    let fail = |e: FrontendError| CliError::frontend(&args.file, &e);
    let tokens = tokenize(&text).map_err(|e| fail(e.into()))?;
    let tree = parse(&tokens).map_err(|e| fail(e.into()))?;
    if args.tree {
        emit(out, &dump_tree(&tree))
    } else {
        emit(out, &plagsim::frontend::linearize(&tree).dump())
    }
}
