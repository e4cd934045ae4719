//! Multi-threaded versions of the generation and evaluation pipelines.
//!
//! Work is split into units whose random streams are fixed by their index
//! (lambda-set shards, source terms, pairs), and results are gathered in
//! index order, so the output matches the single-threaded functions in
//! [`lambda_forge_core::gen`] byte for byte for any thread count.

use rayon::prelude::*;
use rayon::{ThreadPool, ThreadPoolBuildError, ThreadPoolBuilder};

use lambda_forge_core::gen::{
    build_lambda_set_with, check_sources, check_task, derive_term, Dataset, DatasetSpec, ExamplePair, GenConfig, GenError,
    LambdaSet, LambdaSetKind, Renderer, Task,
};
use lambda_forge_core::metrics::{report_from_scores, score, EvalReport, MetricsError};

pub struct Pipeline {
    pool: ThreadPool,
}

impl Pipeline {
    /// `jobs = None` uses one thread per core.
    pub fn new(jobs: Option<usize>) -> Result<Self, ThreadPoolBuildError> {
        let mut b = ThreadPoolBuilder::new();
        if let Some(n) = jobs {
            b = b.num_threads(n.max(1));
        }
        Ok(Pipeline { pool: b.build()? })
    }

    pub fn threads(&self) -> usize {
        self.pool.current_num_threads()
    }

    pub fn build_lambda_set(
        &self,
        kind: LambdaSetKind,
        task: Task,
        count: usize,
        seed: u64,
        config: &GenConfig,
    ) -> LambdaSet {
        self.pool.install(|| {
            build_lambda_set_with(kind, task, count, seed, config, &mut |source, range| {
                range.into_par_iter().map(|i| source.shard(i)).collect()
            })
        })
    }

    pub fn render_dataset(&self, spec: DatasetSpec, ls: &LambdaSet) -> Result<Dataset, GenError> {
        check_sources(ls.sources(), spec.task)?;
        let renderer = Renderer::new(spec.task, spec.convention, spec.seed);
        let per_term: Vec<(Vec<ExamplePair>, Option<u32>)> = self.pool.install(|| {
            ls.terms
                .par_iter()
                .enumerate()
                .map(|(i, t)| {
                    let d = derive_term(t, spec.task, &spec.config);
                    Ok((renderer.term(i, &d)?, d.reductions))
                })
                .collect::<Result<_, GenError>>()
        })?;
        let mut rendered = Vec::with_capacity(per_term.iter().map(|(p, _)| p.len()).sum());
        let mut reductions = Vec::with_capacity(per_term.len());
        for (pairs, r) in per_term {
            rendered.extend(pairs);
            reductions.extend(r);
        }
        Ok(Dataset::assemble(spec, ls.terms.len(), reductions, rendered))
    }

    pub fn generate(&self, spec: DatasetSpec, count: usize) -> Result<Dataset, GenError> {
        check_task(spec.kind, spec.task)?;
        let ls = self.build_lambda_set(spec.kind, spec.task, count, spec.seed, &spec.config);
        self.render_dataset(spec, &ls)
    }

    pub fn evaluate<P, R>(&self, predictions: &[P], references: &[R]) -> Result<EvalReport, MetricsError>
    where
        P: AsRef<str> + Sync,
        R: AsRef<str> + Sync,
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
        let scores = self.pool.install(|| {
            predictions
                .par_iter()
                .zip(references)
                .map(|(p, r)| score(p.as_ref(), r.as_ref()))
                .collect()
        });
        Ok(report_from_scores(scores))
    }

    /// Applies `f` to every item, keeping order.
    pub fn map<T: Sync, U: Send>(&self, items: &[T], f: impl Fn(&T) -> U + Sync + Send) -> Vec<U> {
        self.pool.install(|| items.par_iter().map(f).collect())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use lambda_forge_core::gen::{generate_dataset, Convention, SplitSizes};
    use lambda_forge_core::metrics::evaluate;

    #[test]
    fn matches_the_sequential_pipeline() {
        let spec = DatasetSpec {
            kind: LambdaSetKind::Mixed,
            task: Task::Obr,
            convention: Convention::RandomVars,
            seed: 21,
            config: GenConfig::default(),
            sizes: SplitSizes { valid: 20, test: 20 },
        };
        let seq = generate_dataset(spec, 150).unwrap();
        for jobs in [1, 3] {
            assert_eq!(Pipeline::new(Some(jobs)).unwrap().generate(spec, 150).unwrap(), seq);
        }
    }

    #[test]
    fn rejects_random_multi_step() {
        let spec = DatasetSpec {
            kind: LambdaSetKind::Random,
            task: Task::Mbr,
            convention: Convention::DeBruijn,
            seed: 0,
            config: GenConfig::default(),
            sizes: SplitSizes::default(),
        };
        let p = Pipeline::new(Some(2)).unwrap();
        assert_eq!(p.generate(spec, 10), Err(GenError::RandomSetForMbr));
    }

    #[test]
    fn parallel_evaluation_matches() {
        let preds = ["L a a", "@ a b", "x", ""];
        let refs = ["L a a", "@ a c", "y", "z"];
        let p = Pipeline::new(Some(2)).unwrap();
        assert_eq!(p.evaluate(&preds, &refs), evaluate(&preds, &refs));
        assert_eq!(p.map(&[1, 2, 3], |x| x * 2), [2, 4, 6]);
    }
}
