use super::dataset::Dataset;
use super::GenError;

/// Population summary of a sample.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Summary {
    pub count: usize,
    pub min: f64,
    pub max: f64,
    pub mean: f64,
    pub stddev: f64,
}

impl Summary {
    /// `None` for an empty sample.
    pub fn of<I: IntoIterator<Item = f64>>(values: I) -> Option<Summary> {
        let mut count = 0usize;
        let (mut min, mut max) = (f64::INFINITY, f64::NEG_INFINITY);
        let (mut sum, mut sum_sq) = (0.0, 0.0);
        for v in values {
            count += 1;
            min = min.min(v);
            max = max.max(v);
            sum += v;
            sum_sq += v * v;
        }
        if count == 0 {
            return None;
        }
        let n = count as f64;
        let mean = sum / n;
        let variance = (sum_sq / n - mean * mean).max(0.0);
        Some(Summary { count, min, max, mean, stddev: libm::sqrt(variance) })
    }
}

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct DatasetStats {
    /// Input token counts over every stored pair.
    pub input_tokens: Summary,
    /// Reduction-sequence lengths of source terms that reduce at least once.
    pub reductions: Option<Summary>,
}

pub fn compute_stats(ds: &Dataset) -> Result<DatasetStats, GenError> {
    let input_tokens = Summary::of(ds.pairs().map(|p| p.input_tokens() as f64)).ok_or(GenError::EmptyDataset)?;
    let reductions = Summary::of(ds.reductions.iter().filter(|&&r| r >= 1).map(|&r| f64::from(r)));
    Ok(DatasetStats { input_tokens, reductions })
}
