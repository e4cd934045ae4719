//! Exact-match accuracy and Levenshtein string similarity.

use alloc::string::String;
use alloc::vec::Vec;

use crate::debruijn::{from_debruijn, to_debruijn, NameOrder};
use crate::gen::{Convention, Task};
use crate::reduce::{beta_reduce_once, normalize, normalize_db, reduce_db_once, Strategy, DEFAULT_MAX_STEPS};
use crate::syntax::{parse_debruijn, parse_traditional};

/// Edit distance over characters, two-row DP with `O(min(|a|, |b|))` memory.
pub fn levenshtein(a: &str, b: &str) -> usize {
    let a: Vec<char> = a.chars().collect();
    let b: Vec<char> = b.chars().collect();
    let (short, long) = if a.len() <= b.len() { (&a, &b) } else { (&b, &a) };
    if short.is_empty() {
        return long.len();
    }

    let mut prev: Vec<usize> = (0..=short.len()).collect();
    let mut cur = alloc::vec![0; short.len() + 1];
    for (j, lc) in long.iter().enumerate() {
        cur[0] = j + 1;
        for (i, sc) in short.iter().enumerate() {
            let substitution = prev[i] + usize::from(sc != lc);
            cur[i + 1] = substitution.min(prev[i + 1] + 1).min(cur[i] + 1);
        }
        core::mem::swap(&mut prev, &mut cur);
    }
    prev[short.len()]
}

/// `1 - lev(a, b) / max(|a|, |b|)` in characters. Two empty strings are
/// identical and score 1.
pub fn string_similarity(a: &str, b: &str) -> f64 {
    let longest = a.chars().count().max(b.chars().count());
    if longest == 0 {
        return 1.0;
    }
    1.0 - levenshtein(a, b) as f64 / longest as f64
}

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct ExampleScore {
    pub similarity: f64,
    pub matched: bool,
}

#[derive(Clone, Debug, PartialEq)]
pub struct EvalReport {
    pub n: usize,
    pub exact_match_accuracy: f64,
    pub mean_string_similarity: f64,
    pub per_example: Option<Vec<ExampleScore>>,
}

#[derive(Clone, Debug, PartialEq, Eq, thiserror::Error)]
pub enum MetricsError {
    #[error("{predictions} predictions for {references} references")]
    LengthMismatch { predictions: usize, references: usize },
    #[error("nothing to evaluate")]
    EmptyInput,
}

pub fn evaluate<P, R>(predictions: &[P], references: &[R]) -> Result<EvalReport, MetricsError>
where
    P: AsRef<str>,
    R: AsRef<str>,
{
    if predictions.len() != references.len() {
        return Err(MetricsError::LengthMismatch {
            predictions: predictions.len(),
            references: references.len(),
        });
    }
    if predictions.is_empty() {
        return Err(MetricsError::EmptyInput);
    }
    let scores: Vec<ExampleScore> = predictions
        .iter()
        .zip(references)
        .map(|(p, r)| score(p.as_ref(), r.as_ref()))
        .collect();
    Ok(report_from_scores(scores))
}

pub fn score(prediction: &str, reference: &str) -> ExampleScore {
    let matched = prediction == reference;
    let similarity = if matched { 1.0 } else { string_similarity(prediction, reference) };
    ExampleScore { similarity, matched }
}

/// Aggregates per-example scores in order. Callers that score in parallel
/// get the same numbers as [`evaluate`].
pub fn report_from_scores(scores: Vec<ExampleScore>) -> EvalReport {
    let n = scores.len();
    let matched = scores.iter().filter(|s| s.matched).count();
    let total: f64 = scores.iter().map(|s| s.similarity).sum();
    EvalReport {
        n,
        exact_match_accuracy: matched as f64 / n as f64,
        mean_string_similarity: total / n as f64,
        per_example: Some(scores),
    }
}

/// Maps a model input line to a predicted output line.
pub trait Predictor {
    fn predict(&self, input: &str) -> String;
}

impl<F: Fn(&str) -> String> Predictor for F {
    fn predict(&self, input: &str) -> String {
        self(input)
    }
}

/// Ground-truth predictor built from the reduction engine.
///
/// Named inputs are reduced in place, keeping their names, which is how
/// dataset targets are produced. Unparseable input predicts an empty line.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SymbolicOracle {
    pub task: Task,
    pub convention: Convention,
}

impl Predictor for SymbolicOracle {
    fn predict(&self, input: &str) -> String {
        use alloc::string::ToString;
        match self.convention {
            Convention::DeBruijn => {
                let Ok(t) = parse_debruijn(input) else { return String::new() };
                match self.task {
                    Task::Obr => reduce_db_once(&t, Strategy::Lazy).unwrap_or(t).to_string(),
                    Task::Mbr => normalize_db(&t, Strategy::Lazy, DEFAULT_MAX_STEPS).term.to_string(),
                }
            }
            Convention::Traditional | Convention::RandomVars => {
                let Ok(t) = parse_traditional(input) else { return String::new() };
                // inputs that would capture are renamed first
                let t = if t.satisfies_barendregt() {
                    t
                } else {
                    from_debruijn(&to_debruijn(&t), &NameOrder::Alphabetical)
                        .expect("alphabetical supply is unbounded")
                };
                match self.task {
                    Task::Obr => beta_reduce_once(&t, Strategy::Lazy).map_or(t, |o| o.term).to_string(),
                    Task::Mbr => normalize(&t, Strategy::Lazy, DEFAULT_MAX_STEPS).term.to_string(),
                }
            }
        }
    }
}

/// One evaluated test split.
pub struct EvalSet<'a> {
    pub name: String,
    pub inputs: Vec<&'a str>,
    pub references: Vec<&'a str>,
}

#[derive(Clone, Debug, PartialEq)]
pub struct CrossEvalRow {
    pub model: String,
    pub cells: Vec<EvalReport>,
    pub average_accuracy: f64,
    pub average_similarity: f64,
}

#[derive(Clone, Debug, PartialEq)]
pub struct CrossEvalMatrix {
    pub columns: Vec<String>,
    pub rows: Vec<CrossEvalRow>,
}

/// Evaluates every model on every set; rows are models, columns are sets,
/// plus per-row averages.
pub fn cross_eval_matrix(
    models: &[(&str, &dyn Predictor)],
    sets: &[EvalSet<'_>],
) -> Result<CrossEvalMatrix, MetricsError> {
    let mut rows = Vec::with_capacity(models.len());
    for (name, model) in models {
        let mut cells = Vec::with_capacity(sets.len());
        for set in sets {
            let predictions: Vec<String> = set.inputs.iter().map(|i| model.predict(i)).collect();
            let mut report = evaluate(&predictions, &set.references)?;
            report.per_example = None;
            cells.push(report);
        }
        let k = cells.len().max(1) as f64;
        rows.push(CrossEvalRow {
            model: String::from(*name),
            average_accuracy: cells.iter().map(|c| c.exact_match_accuracy).sum::<f64>() / k,
            average_similarity: cells.iter().map(|c| c.mean_string_similarity).sum::<f64>() / k,
            cells,
        });
    }
    Ok(CrossEvalMatrix {
        columns: sets.iter().map(|s| s.name.clone()).collect(),
        rows,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::vec;

    #[test]
    fn levenshtein_examples() {
        assert_eq!(levenshtein("abc", "abc"), 0);
        assert_eq!(levenshtein("", "abc"), 3);
        assert_eq!(levenshtein("abc", ""), 3);
        assert_eq!(levenshtein("", ""), 0);
        assert_eq!(levenshtein("kitten", "sitting"), 3);
        assert_eq!(levenshtein("sitting", "kitten"), 3);
        assert_eq!(levenshtein("λx", "λy"), 1);
    }

    #[test]
    fn similarity_examples() {
        assert_eq!(string_similarity("L a a", "L a a"), 1.0);
        assert!((string_similarity("kitten", "sitting") - (1.0 - 3.0 / 7.0)).abs() < 1e-12);
        assert_eq!(string_similarity("abc", "xyz"), 0.0);
        assert_eq!(string_similarity("", ""), 1.0);
        assert_eq!(string_similarity("", "ab"), 0.0);
    }

    #[test]
    fn evaluate_examples() {
        let refs = ["L a a", "@ a b"];
        let r = evaluate(&refs, &refs).unwrap();
        assert_eq!((r.exact_match_accuracy, r.mean_string_similarity), (1.0, 1.0));

        let preds = ["L a a", ""];
        let r = evaluate(&preds, &refs).unwrap();
        assert_eq!(r.exact_match_accuracy, 0.5);
        assert_eq!(r.mean_string_similarity, 0.5);
        let per = r.per_example.unwrap();
        assert!(per[0].matched && per[0].similarity == 1.0);

        assert_eq!(
            evaluate(&["a"], &["a", "b"]),
            Err(MetricsError::LengthMismatch { predictions: 1, references: 2 })
        );
        let empty: [&str; 0] = [];
        assert_eq!(evaluate(&empty, &empty), Err(MetricsError::EmptyInput));
    }

    #[test]
    fn oracle_predictions() {
        let obr = SymbolicOracle { task: Task::Obr, convention: Convention::Traditional };
        assert_eq!(obr.predict("@ L x x y"), "y");
        assert_eq!(obr.predict("x"), "x");
        assert_eq!(obr.predict("L"), "");
        let mbr = SymbolicOracle { task: Task::Mbr, convention: Convention::DeBruijn };
        assert_eq!(mbr.predict("@ L 1 @ L 1 0"), "0");
    }

    #[test]
    fn matrix_shape() {
        let oracle = SymbolicOracle { task: Task::Obr, convention: Convention::Traditional };
        let echo = |s: &str| String::from(s);
        let sets = vec![
            EvalSet { name: "a".into(), inputs: vec!["@ L x x y"], references: vec!["y"] },
            EvalSet { name: "b".into(), inputs: vec!["@ L x x z", "@ L x L y x w"], references: vec!["z", "L y w"] },
        ];
        let m = cross_eval_matrix(&[("oracle", &oracle), ("echo", &echo)], &sets).unwrap();
        assert_eq!(m.columns, ["a", "b"]);
        assert_eq!(m.rows.len(), 2);
        assert!(m.rows.iter().all(|r| r.cells.len() == 2));
        assert_eq!(m.rows[0].average_accuracy, 1.0);
        assert_eq!(m.rows[1].average_accuracy, 0.0);
    }
}
