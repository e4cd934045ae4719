//! Dataset, prediction and metadata files.
//!
//! A split file holds one pair per line, `input<TAB>target`, tokens separated
//! by single spaces. Prediction files hold one output per line. Metadata is a
//! sidecar of `key=value` lines.

use std::collections::BTreeMap;
use std::fmt::Write as _;
use std::fs::{self, File};
use std::io::{self, BufRead, BufReader, BufWriter, Write};
use std::path::{Path, PathBuf};

use lambda_forge_core::gen::{compute_stats, Dataset, DatasetStats, ExamplePair, Summary};

use crate::exit;

#[derive(Debug, thiserror::Error)]
pub enum FileError {
    #[error("{}: {source}", path.display())]
    Io { path: PathBuf, source: io::Error },
    #[error("{}:{line}: expected `input<TAB>target`", path.display())]
    MalformedPair { path: PathBuf, line: usize },
    #[error("{}:{line}: expected `key=value`", path.display())]
    MalformedMeta { path: PathBuf, line: usize },
}

impl FileError {
    pub fn exit_code(&self) -> i32 {
        match self {
            FileError::Io { .. } => exit::IO_ERROR,
            FileError::MalformedPair { .. } | FileError::MalformedMeta { .. } => exit::VALIDATION_ERROR,
        }
    }
}

fn io_err(path: &Path) -> impl FnOnce(io::Error) -> FileError + '_ {
    move |source| FileError::Io { path: path.to_owned(), source }
}

pub const SPLITS: [&str; 3] = ["train", "valid", "test"];

/// `<dir>/<base>.<split>`.
pub fn split_path(dir: &Path, base: &str, split: &str) -> PathBuf {
    dir.join(format!("{base}.{split}"))
}

pub fn meta_path(dir: &Path, base: &str) -> PathBuf {
    dir.join(format!("{base}.meta"))
}

pub fn write_pairs(path: &Path, pairs: &[ExamplePair]) -> Result<(), FileError> {
    let file = File::create(path).map_err(io_err(path))?;
    let mut w = BufWriter::new(file);
    for p in pairs {
        writeln!(w, "{}\t{}", p.input, p.target).map_err(io_err(path))?;
    }
    w.flush().map_err(io_err(path))
}

fn push_summary(out: &mut String, prefix: &str, s: &Summary) {
    writeln!(out, "{prefix}_count={}", s.count).unwrap();
    writeln!(out, "{prefix}_min={}", s.min).unwrap();
    writeln!(out, "{prefix}_max={}", s.max).unwrap();
    writeln!(out, "{prefix}_mean={}", s.mean).unwrap();
    writeln!(out, "{prefix}_stddev={}", s.stddev).unwrap();
}

/// Metadata sidecar contents.
pub fn format_meta(ds: &Dataset, stats: Option<&DatasetStats>) -> String {
    let spec = &ds.spec;
    let c = &spec.config;
    let mut out = String::new();
    let mut kv = |k: &str, v: &dyn std::fmt::Display| writeln!(out, "{k}={v}").unwrap();
    kv("task", &spec.task);
    kv("kind", &spec.kind);
    kv("convention", &spec.convention);
    kv("seed", &spec.seed);
    kv("max_tokens", &c.max_tokens);
    kv("max_internal", &c.max_internal);
    kv("p_free", &c.p_free);
    kv("max_steps", &c.max_steps);
    kv("chain_size_limit", &c.chain_size_limit);
    kv("source_terms", &ds.source_terms);
    kv("raw_pairs", &ds.cleaning.before);
    kv("removed_capture", &ds.cleaning.capture);
    kv("removed_normal_input", &ds.cleaning.normal_input);
    kv("removed_duplicate", &ds.cleaning.duplicate);
    kv("train", &ds.train.len());
    kv("valid", &ds.valid.len());
    kv("test", &ds.test.len());
    if let Some(st) = stats {
        push_summary(&mut out, "input_tokens", &st.input_tokens);
        if let Some(r) = &st.reductions {
            push_summary(&mut out, "reductions", r);
        }
    }
    out
}

/// Writes the three split files and the sidecar into `dir` (created if
/// missing). Returns the stats, `None` for an empty dataset.
pub fn write_dataset(dir: &Path, ds: &Dataset) -> Result<Option<DatasetStats>, FileError> {
    fs::create_dir_all(dir).map_err(io_err(dir))?;
    let base = ds.spec.base_name();
    for (split, pairs) in SPLITS.iter().zip([&ds.train, &ds.valid, &ds.test]) {
        write_pairs(&split_path(dir, &base, split), pairs)?;
    }
    let stats = compute_stats(ds).ok();
    let meta = meta_path(dir, &base);
    fs::write(&meta, format_meta(ds, stats.as_ref())).map_err(io_err(&meta))?;
    Ok(stats)
}

fn read_lines(path: &Path) -> Result<Vec<String>, FileError> {
    let file = File::open(path).map_err(io_err(path))?;
    BufReader::new(file)
        .lines()
        .collect::<Result<_, _>>()
        .map_err(io_err(path))
}

pub fn read_pairs(path: &Path) -> Result<Vec<(String, String)>, FileError> {
    read_lines(path)?
        .into_iter()
        .enumerate()
        .map(|(i, line)| match line.split_once('\t') {
            Some((a, b)) if !b.contains('\t') => Ok((a.to_owned(), b.to_owned())),
            _ => Err(FileError::MalformedPair { path: path.to_owned(), line: i + 1 }),
        })
        .collect()
}

/// Output column of a prediction or dataset file: the part after the TAB
/// when a line has one, the whole line otherwise.
pub fn read_targets(path: &Path) -> Result<Vec<String>, FileError> {
    Ok(read_lines(path)?
        .into_iter()
        .map(|line| match line.split_once('\t') {
            Some((_, target)) => target.to_owned(),
            None => line,
        })
        .collect())
}

pub fn read_meta(path: &Path) -> Result<BTreeMap<String, String>, FileError> {
    read_lines(path)?
        .into_iter()
        .enumerate()
        .filter(|(_, line)| !line.trim().is_empty())
        .map(|(i, line)| match line.split_once('=') {
            Some((k, v)) => Ok((k.trim().to_owned(), v.trim().to_owned())),
            None => Err(FileError::MalformedMeta { path: path.to_owned(), line: i + 1 }),
        })
        .collect()
}
