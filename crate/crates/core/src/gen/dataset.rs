use alloc::string::{String, ToString};
use alloc::vec::Vec;

use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use super::lambda_set::{build_lambda_set, LambdaSet};
use super::pairs::{check_sources, check_task, derive_term, RawPair, TermDerivation};
use super::{derive_seed, stream, Convention, GenConfig, GenError, LambdaSetKind, Task};
use crate::debruijn::{from_debruijn, NameOrder, NameSupplyExhausted};
use crate::reduce::{beta_reduce_once, find_redex, normalize, Strategy};
use crate::syntax::{parse_debruijn, parse_traditional};

/// A rendered pair: space-separated prefix tokens on both sides.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ExamplePair {
    pub input: String,
    pub target: String,
    pub task: Task,
    pub convention: Convention,
    pub steps: u32,
    pub capture_required: bool,
}

impl ExamplePair {
    pub fn input_tokens(&self) -> usize {
        self.input.split_ascii_whitespace().count()
    }

    pub fn target_tokens(&self) -> usize {
        self.target.split_ascii_whitespace().count()
    }

    /// Whether the input has no redex, read back in the pair's convention.
    /// Unparseable input counts as normal.
    pub fn input_is_normal(&self) -> bool {
        match self.convention {
            Convention::DeBruijn => parse_debruijn(&self.input).map_or(true, |t| t.is_normal()),
            _ => parse_traditional(&self.input).map_or(true, |t| find_redex(&t, Strategy::Lazy).is_none()),
        }
    }
}

/// Renders raw pairs in one convention. Named conventions reduce the named
/// input in place, so the target keeps the input's names. Random names come
/// from a stream keyed on the pair's source term and step, so rendering can be
/// split across threads freely.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Renderer {
    pub task: Task,
    pub convention: Convention,
    pub seed: u64,
}

impl Renderer {
    pub fn new(task: Task, convention: Convention, seed: u64) -> Self {
        Renderer { task, convention, seed }
    }

    /// Renders step `step` of source term `term`.
    pub fn pair(&self, raw: &RawPair, term: usize, step: usize) -> Result<ExamplePair, NameSupplyExhausted> {
        let pair = |input: String, target: String, capture: bool| ExamplePair {
            input,
            target,
            task: self.task,
            convention: self.convention,
            steps: raw.steps,
            capture_required: raw.capture_required || capture,
        };
        if self.convention == Convention::DeBruijn {
            return Ok(pair(raw.input.to_string(), raw.target.to_string(), false));
        }

        let order = match self.convention {
            Convention::RandomVars => {
                let key = [stream::RENDER, term as u64, step as u64];
                let mut rng = ChaCha8Rng::seed_from_u64(derive_seed(self.seed, &key));
                NameOrder::shuffled(&mut rng, raw.input.abstraction_count() + 1)
            }
            _ => NameOrder::Alphabetical,
        };
        let input = from_debruijn(&raw.input, &order)?;
        let (target, capture) = match self.task {
            Task::Obr => match beta_reduce_once(&input, Strategy::Lazy) {
                Some(out) => (out.term, out.capture_required),
                None => (input.clone(), false),
            },
            Task::Mbr => {
                let n = normalize(&input, Strategy::Lazy, raw.steps as usize);
                (n.term, n.capture_required)
            }
        };
        Ok(pair(input.to_string(), target.to_string(), capture))
    }

    /// Renders every pair derived from source term `term`.
    pub fn term(&self, term: usize, derivation: &TermDerivation) -> Result<Vec<ExamplePair>, NameSupplyExhausted> {
        derivation
            .pairs
            .iter()
            .enumerate()
            .map(|(step, raw)| self.pair(raw, term, step))
            .collect()
    }
}

/// Pairs removed by each cleaning rule, applied in order.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct CleaningReport {
    pub before: usize,
    pub capture: usize,
    pub normal_input: usize,
    pub duplicate: usize,
    pub kept: usize,
}

/// Drops pairs that needed a renaming, pairs whose input is already normal,
/// and repeated (input, target) pairs, keeping survivors in order.
pub fn clean_pairs_with_report(pairs: Vec<ExamplePair>) -> (Vec<ExamplePair>, CleaningReport) {
    let mut report = CleaningReport { before: pairs.len(), ..CleaningReport::default() };
    let pairs: Vec<ExamplePair> = pairs
        .into_iter()
        .filter(|p| {
            if p.capture_required {
                report.capture += 1;
                false
            } else if p.input_is_normal() {
                report.normal_input += 1;
                false
            } else {
                true
            }
        })
        .collect();

    // sort positions instead of hashing copies; the first position of each
    // run of equal pairs survives
    let key = |i: usize| (pairs[i].input.as_str(), pairs[i].target.as_str());
    let mut order: Vec<usize> = (0..pairs.len()).collect();
    order.sort_unstable_by(|&a, &b| key(a).cmp(&key(b)).then(a.cmp(&b)));
    let mut keep = alloc::vec![false; pairs.len()];
    for (n, &i) in order.iter().enumerate() {
        keep[i] = n == 0 || key(order[n - 1]) != key(i);
    }
    drop(order);

    let kept: Vec<ExamplePair> = pairs.into_iter().zip(keep).filter_map(|(p, k)| k.then_some(p)).collect();
    report.duplicate = report.before - report.capture - report.normal_input - kept.len();
    report.kept = kept.len();
    (kept, report)
}

pub fn clean_pairs(pairs: Vec<ExamplePair>) -> Vec<ExamplePair> {
    clean_pairs_with_report(pairs).0
}

/// Requested validation and test sizes.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SplitSizes {
    pub valid: usize,
    pub test: usize,
}

impl Default for SplitSizes {
    fn default() -> Self {
        SplitSizes { valid: 10_000, test: 10_000 }
    }
}

impl SplitSizes {
    /// Sizes used for `n` pairs: the request when `n` is at least three times
    /// it, a tenth of `n` otherwise.
    pub fn resolve(self, n: usize) -> (usize, usize) {
        let pick = |req: usize| if n >= 3 * req { req } else { n / 10 };
        (pick(self.valid), pick(self.test))
    }
}

/// Splits into (train, valid, test) by a seeded shuffle of positions. Each
/// part keeps the original relative order.
pub fn split_pairs<T>(pairs: Vec<T>, sizes: SplitSizes, seed: u64) -> (Vec<T>, Vec<T>, Vec<T>) {
    let n = pairs.len();
    let (n_valid, n_test) = sizes.resolve(n);
    let mut order: Vec<usize> = (0..n).collect();
    order.shuffle(&mut ChaCha8Rng::seed_from_u64(derive_seed(seed, &[stream::SPLIT])));
    // 0 = train, 1 = valid, 2 = test
    let mut part = alloc::vec![0u8; n];
    for &i in &order[..n_valid] {
        part[i] = 1;
    }
    for &i in &order[n_valid..n_valid + n_test] {
        part[i] = 2;
    }
    let (mut train, mut valid, mut test) = (Vec::new(), Vec::with_capacity(n_valid), Vec::with_capacity(n_test));
    for (p, which) in pairs.into_iter().zip(part) {
        match which {
            0 => train.push(p),
            1 => valid.push(p),
            _ => test.push(p),
        }
    }
    (train, valid, test)
}

/// What to generate. The seed drives every random choice.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct DatasetSpec {
    pub kind: LambdaSetKind,
    pub task: Task,
    pub convention: Convention,
    pub seed: u64,
    pub config: GenConfig,
    pub sizes: SplitSizes,
}

impl DatasetSpec {
    /// `<task>_<kind>_<convention>`.
    pub fn base_name(&self) -> String {
        alloc::format!("{}_{}_{}", self.task, self.kind, self.convention)
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct Dataset {
    pub spec: DatasetSpec,
    pub train: Vec<ExamplePair>,
    pub valid: Vec<ExamplePair>,
    pub test: Vec<ExamplePair>,
    /// Reduction-sequence lengths of the source terms.
    pub reductions: Vec<u32>,
    pub source_terms: usize,
    pub cleaning: CleaningReport,
}

impl Dataset {
    /// Cleans and splits rendered pairs.
    pub fn assemble(spec: DatasetSpec, source_terms: usize, reductions: Vec<u32>, rendered: Vec<ExamplePair>) -> Self {
        let (clean, cleaning) = clean_pairs_with_report(rendered);
        let (train, valid, test) = split_pairs(clean, spec.sizes, spec.seed);
        Dataset { spec, train, valid, test, reductions, source_terms, cleaning }
    }

    pub fn len(&self) -> usize {
        self.train.len() + self.valid.len() + self.test.len()
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    pub fn pairs(&self) -> impl Iterator<Item = &ExamplePair> {
        self.train.iter().chain(&self.valid).chain(&self.test)
    }
}

/// Derives, renders, cleans and splits, one source term at a time so only
/// rendered pairs are kept in memory.
pub fn render_dataset(spec: DatasetSpec, ls: &LambdaSet) -> Result<Dataset, GenError> {
    check_sources(ls.sources(), spec.task)?;
    let renderer = Renderer::new(spec.task, spec.convention, spec.seed);
    let mut reductions = Vec::with_capacity(ls.terms.len());
    let mut rendered = Vec::new();
    for (i, t) in ls.terms.iter().enumerate() {
        let d = derive_term(t, spec.task, &spec.config);
        rendered.extend(renderer.term(i, &d)?);
        reductions.extend(d.reductions);
    }
    Ok(Dataset::assemble(spec, ls.terms.len(), reductions, rendered))
}

/// The whole pipeline on one thread: a lambda set of `count` terms, then
/// [`render_dataset`].
pub fn generate_dataset(spec: DatasetSpec, count: usize) -> Result<Dataset, GenError> {
    check_task(spec.kind, spec.task)?;
    let ls = build_lambda_set(spec.kind, spec.task, count, spec.seed, &spec.config);
    render_dataset(spec, &ls)
}
