use alloc::collections::BTreeSet;
use alloc::string::ToString;
use alloc::vec::Vec;
use core::ops::Range;

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use super::terms::{BoolExprGen, RandomTermGen};
use super::{derive_seed, stream, GenConfig, LambdaSetKind, SourceKind, Task};
use crate::debruijn::to_debruijn;
use crate::encodings::encode_bool_expr;
use crate::term::DbTerm;

/// Candidates per shard. Each shard has its own random stream, so shards
/// can be produced in any order or in parallel.
pub const SHARD_SIZE: usize = 256;

/// Shards fetched per round by [`build_lambda_set`].
const BATCH: u64 = 8;

/// A pool of distinct source terms.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LambdaSet {
    pub kind: LambdaSetKind,
    /// Task the set was built for; only changes the sources of `Mixed`.
    pub task: Task,
    pub terms: Vec<DbTerm>,
    pub seed: u64,
    pub target_count: usize,
}

impl LambdaSet {
    pub fn sources(&self) -> &'static [SourceKind] {
        self.kind.sources(self.task)
    }
}

enum Generator {
    Random(RandomTermGen),
    Bool(BoolExprGen),
}

/// Candidate terms of one source kind, addressable by shard index.
pub struct TermSource {
    kind: SourceKind,
    seed: u64,
    max_tokens: usize,
    generator: Generator,
}

impl TermSource {
    pub fn new(kind: SourceKind, seed: u64, config: &GenConfig) -> Self {
        let generator = match kind {
            SourceKind::Random => Generator::Random(RandomTermGen::new(config.max_tokens, config.p_free)),
            SourceKind::ClosedBool => Generator::Bool(BoolExprGen::new(config.max_internal, false)),
            SourceKind::OpenBool => Generator::Bool(BoolExprGen::new(config.max_internal, true)),
        };
        TermSource { kind, seed, max_tokens: config.max_tokens, generator }
    }

    pub fn kind(&self) -> SourceKind {
        self.kind
    }

    /// Candidates of shard `index` within the token cap; may repeat terms.
    pub fn shard(&self, index: u64) -> Vec<DbTerm> {
        let tag = self.kind as u64;
        let mut rng = ChaCha8Rng::seed_from_u64(derive_seed(self.seed, &[stream::SOURCE, tag, index]));
        (0..SHARD_SIZE)
            .map(|_| match &self.generator {
                Generator::Random(g) => g.sample(&mut rng),
                Generator::Bool(g) => to_debruijn(&encode_bool_expr(&g.sample(&mut rng))),
            })
            .filter(|t| t.named_token_count() <= self.max_tokens)
            .collect()
    }

    /// Shard budget for `count` distinct terms. Generation stops short of
    /// `count` when a small term space is exhausted.
    fn shard_limit(count: usize) -> u64 {
        (count as u64 * 64).div_ceil(SHARD_SIZE as u64) + 16
    }
}

/// Produces the shards of a range, in order.
pub type ShardFetch<'a> = dyn FnMut(&TermSource, Range<u64>) -> Vec<Vec<DbTerm>> + 'a;

/// First `count` distinct terms over shards `0, 1, 2, ...` of `source`.
/// `fetch` produces the shards of a range in order; any executor gives the
/// same result.
fn collect_distinct(
    source: &TermSource,
    count: usize,
    fetch: &mut ShardFetch<'_>,
) -> Vec<DbTerm> {
    let limit = TermSource::shard_limit(count);
    // keyed on the printed form, which is far smaller than a cloned tree
    let mut seen = BTreeSet::new();
    let mut terms = Vec::with_capacity(count);
    let mut next = 0;
    while terms.len() < count && next < limit {
        let end = (next + BATCH).min(limit);
        for shard in fetch(source, next..end) {
            for t in shard {
                if terms.len() == count {
                    break;
                }
                if seen.insert(t.to_string()) {
                    terms.push(t);
                }
            }
        }
        next = end;
    }
    terms
}

/// Builds a lambda set, letting `fetch` produce batches of shards (for
/// example in parallel). The result only depends on the arguments.
pub fn build_lambda_set_with(
    kind: LambdaSetKind,
    task: Task,
    count: usize,
    seed: u64,
    config: &GenConfig,
    fetch: &mut ShardFetch<'_>,
) -> LambdaSet {
    let sources = kind.sources(task);
    let k = sources.len();
    let parts: Vec<Vec<DbTerm>> = sources
        .iter()
        .enumerate()
        .map(|(i, &src)| {
            let share = count / k + usize::from(i < count % k);
            collect_distinct(&TermSource::new(src, seed, config), share, fetch)
        })
        .collect();

    // round-robin interleave; cross-source duplicates keep their first copy
    let mut seen = BTreeSet::new();
    let mut terms = Vec::with_capacity(count);
    let longest = parts.iter().map(Vec::len).max().unwrap_or(0);
    for i in 0..longest {
        for part in &parts {
            if let Some(t) = part.get(i) {
                if k == 1 || seen.insert(t.to_string()) {
                    terms.push(t.clone());
                }
            }
        }
    }
    LambdaSet { kind, task, terms, seed, target_count: count }
}

pub fn build_lambda_set(
    kind: LambdaSetKind,
    task: Task,
    count: usize,
    seed: u64,
    config: &GenConfig,
) -> LambdaSet {
    build_lambda_set_with(kind, task, count, seed, config, &mut |source, range| {
        range.map(|i| source.shard(i)).collect()
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn build(kind: LambdaSetKind, task: Task, count: usize) -> LambdaSet {
        build_lambda_set(kind, task, count, 17, &GenConfig::default())
    }

    #[test]
    fn closed_and_open_bool_sets() {
        let cb = build(LambdaSetKind::ClosedBool, Task::Obr, 300);
        assert_eq!(cb.terms.len(), 300);
        assert!(cb.terms.iter().all(DbTerm::is_closed));
        let ob = build(LambdaSetKind::OpenBool, Task::Obr, 300);
        assert_eq!(ob.terms.len(), 300);
        assert!(ob.terms.iter().all(|t| !t.is_closed()));
    }

    #[test]
    fn terms_are_distinct_and_capped() {
        let ls = build(LambdaSetKind::Random, Task::Obr, 1000);
        let distinct: BTreeSet<_> = ls.terms.iter().collect();
        assert_eq!(distinct.len(), ls.terms.len());
        assert!(ls.terms.iter().all(|t| t.named_token_count() <= 250));
    }

    #[test]
    fn mixed_proportions() {
        let mix = build(LambdaSetKind::Mixed, Task::Obr, 301);
        let closed_bool: BTreeSet<_> = build(LambdaSetKind::ClosedBool, Task::Obr, 100).terms.into_iter().collect();
        let open_bool: BTreeSet<_> = build(LambdaSetKind::OpenBool, Task::Obr, 100).terms.into_iter().collect();
        let cb = mix.terms.iter().filter(|t| closed_bool.contains(*t)).count();
        let ob = mix.terms.iter().filter(|t| open_bool.contains(*t)).count();
        let random = mix.terms.len() - cb - ob;
        assert_eq!((random, cb, ob), (101, 100, 100));

        let mix = build(LambdaSetKind::Mixed, Task::Mbr, 200);
        assert_eq!(mix.terms.len(), 200);
        assert_eq!(mix.terms.iter().filter(|t| t.is_closed()).count(), 100);
    }

    #[test]
    fn exhausted_space_stops_short() {
        let config = GenConfig { max_internal: 1, ..GenConfig::default() };
        // 2 constants under not, 4 pairs under each of and/or: 10 expressions
        let ls = build_lambda_set(LambdaSetKind::ClosedBool, Task::Obr, 50, 3, &config);
        assert_eq!(ls.terms.len(), 10);
    }

    #[test]
    fn executor_does_not_change_the_result() {
        let config = GenConfig::default();
        let a = build_lambda_set(LambdaSetKind::Mixed, Task::Obr, 700, 5, &config);
        let b = build_lambda_set_with(LambdaSetKind::Mixed, Task::Obr, 700, 5, &config, &mut |s, r| {
            // fetch in reverse, then restore order
            let mut v: Vec<_> = r.rev().map(|i| s.shard(i)).collect();
            v.reverse();
            v
        });
        assert_eq!(a, b);
    }
}
