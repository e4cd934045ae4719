//! Lambda-set generation and reduction datasets.
//!
//! The pipeline is: build a [`LambdaSet`] of source terms (stored in de
//! Bruijn form), derive raw reduction pairs from it, render the pairs in a
//! naming convention, clean them, and split into train/valid/test.
//!
//! Every random choice is drawn from a ChaCha stream seeded by
//! [`derive_seed`] from the user seed and a fixed tag, so the output does not
//! depend on how work is scheduled.

mod dataset;
mod lambda_set;
mod pairs;
mod stats;
mod terms;
mod tree;

use core::fmt;

pub use dataset::{
    clean_pairs, clean_pairs_with_report, generate_dataset, render_dataset, split_pairs,
    CleaningReport, Dataset, DatasetSpec, ExamplePair, Renderer, SplitSizes,
};
pub use lambda_set::{
    build_lambda_set, build_lambda_set_with, LambdaSet, ShardFetch, TermSource, SHARD_SIZE,
};
pub use pairs::{check_sources, check_task, derive_pairs, derive_term, RawPair, TermDerivation};
pub use stats::{compute_stats, DatasetStats, Summary};
pub use terms::{gen_bool_expr, gen_random_term, BoolExprGen, RandomTermGen};
pub use tree::{Node, TreeSampler};

use crate::debruijn::NameSupplyExhausted;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Task {
    /// One-step beta reduction.
    Obr,
    /// Multi-step beta reduction to normal form.
    Mbr,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Convention {
    /// Names in alphabetical pre-order.
    Traditional,
    /// Names in a random order, drawn per pair.
    RandomVars,
    DeBruijn,
}

/// Where source terms come from.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum SourceKind {
    Random,
    ClosedBool,
    OpenBool,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum LambdaSetKind {
    Random,
    ClosedBool,
    OpenBool,
    /// Equal shares of the task's sources: random, closed and open booleans
    /// for one-step; closed and open booleans for multi-step.
    Mixed,
}

impl Task {
    pub const ALL: [Task; 2] = [Task::Obr, Task::Mbr];

    pub fn tag(self) -> &'static str {
        match self {
            Task::Obr => "obr",
            Task::Mbr => "mbr",
        }
    }

    pub fn from_tag(tag: &str) -> Option<Self> {
        Self::ALL.into_iter().find(|t| t.tag() == tag)
    }

    /// Lambda-set kinds that yield datasets for this task.
    pub fn kinds(self) -> &'static [LambdaSetKind] {
        match self {
            Task::Obr => &[
                LambdaSetKind::Random,
                LambdaSetKind::ClosedBool,
                LambdaSetKind::OpenBool,
                LambdaSetKind::Mixed,
            ],
            Task::Mbr => &[LambdaSetKind::ClosedBool, LambdaSetKind::OpenBool, LambdaSetKind::Mixed],
        }
    }
}

impl Convention {
    pub const ALL: [Convention; 3] = [Convention::Traditional, Convention::RandomVars, Convention::DeBruijn];

    pub fn tag(self) -> &'static str {
        match self {
            Convention::Traditional => "trad",
            Convention::RandomVars => "randvars",
            Convention::DeBruijn => "db",
        }
    }

    pub fn from_tag(tag: &str) -> Option<Self> {
        Self::ALL.into_iter().find(|c| c.tag() == tag)
    }
}

impl LambdaSetKind {
    pub const ALL: [LambdaSetKind; 4] = [
        LambdaSetKind::Random,
        LambdaSetKind::ClosedBool,
        LambdaSetKind::OpenBool,
        LambdaSetKind::Mixed,
    ];

    pub fn tag(self) -> &'static str {
        match self {
            LambdaSetKind::Random => "random",
            LambdaSetKind::ClosedBool => "cb",
            LambdaSetKind::OpenBool => "ob",
            LambdaSetKind::Mixed => "mixed",
        }
    }

    pub fn from_tag(tag: &str) -> Option<Self> {
        Self::ALL.into_iter().find(|k| k.tag() == tag)
    }

    /// The sources this kind draws from, in interleaving order.
    pub fn sources(self, task: Task) -> &'static [SourceKind] {
        match (self, task) {
            (LambdaSetKind::Random, _) => &[SourceKind::Random],
            (LambdaSetKind::ClosedBool, _) => &[SourceKind::ClosedBool],
            (LambdaSetKind::OpenBool, _) => &[SourceKind::OpenBool],
            (LambdaSetKind::Mixed, Task::Obr) => {
                &[SourceKind::Random, SourceKind::ClosedBool, SourceKind::OpenBool]
            }
            (LambdaSetKind::Mixed, Task::Mbr) => &[SourceKind::ClosedBool, SourceKind::OpenBool],
        }
    }
}

impl fmt::Display for Task {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.tag())
    }
}

impl fmt::Display for Convention {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.tag())
    }
}

impl fmt::Display for LambdaSetKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.tag())
    }
}

/// Generation parameters.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct GenConfig {
    /// Token cap on every rendered side of every pair.
    pub max_tokens: usize,
    /// Internal-node cap for boolean expressions.
    pub max_internal: usize,
    /// Probability that a leaf under at least one binder is free.
    pub p_free: f64,
    /// Reduction cap per source term.
    pub max_steps: usize,
    /// A reduction chain is abandoned once a term grows past this size.
    pub chain_size_limit: usize,
}

impl Default for GenConfig {
    fn default() -> Self {
        GenConfig {
            max_tokens: crate::DEFAULT_MAX_TOKENS,
            max_internal: 5,
            p_free: 0.25,
            max_steps: crate::reduce::DEFAULT_MAX_STEPS,
            chain_size_limit: 8 * crate::DEFAULT_MAX_TOKENS,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, thiserror::Error)]
pub enum GenError {
    #[error("multi-step datasets cannot be built from random terms, which may not normalize")]
    RandomSetForMbr,
    #[error(transparent)]
    NameSupplyExhausted(#[from] NameSupplyExhausted),
    #[error("dataset has no pairs")]
    EmptyDataset,
}

/// SplitMix64 finalizer.
fn mix(mut z: u64) -> u64 {
    z = z.wrapping_add(0x9e37_79b9_7f4a_7c15);
    z = (z ^ (z >> 30)).wrapping_mul(0xbf58_476d_1ce4_e5b9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94d0_49bb_1331_11eb);
    z ^ (z >> 31)
}

/// Seed of an independent stream identified by `parts` under `seed`.
pub fn derive_seed(seed: u64, parts: &[u64]) -> u64 {
    parts.iter().fold(mix(seed), |acc, &p| mix(acc ^ mix(p)))
}

pub(crate) mod stream {
    pub const SOURCE: u64 = 1;
    pub const RENDER: u64 = 2;
    pub const SPLIT: u64 = 3;
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn tags_roundtrip() {
        for t in Task::ALL {
            assert_eq!(Task::from_tag(t.tag()), Some(t));
        }
        for c in Convention::ALL {
            assert_eq!(Convention::from_tag(c.tag()), Some(c));
        }
        for k in LambdaSetKind::ALL {
            assert_eq!(LambdaSetKind::from_tag(k.tag()), Some(k));
        }
    }

    #[test]
    fn dataset_counts_per_task() {
        assert_eq!(Task::Obr.kinds().len() * Convention::ALL.len(), 12);
        assert_eq!(Task::Mbr.kinds().len() * Convention::ALL.len(), 9);
    }

    #[test]
    fn derived_seeds_differ() {
        assert_ne!(derive_seed(1, &[0]), derive_seed(1, &[1]));
        assert_ne!(derive_seed(1, &[0]), derive_seed(2, &[0]));
        assert_ne!(derive_seed(1, &[0, 1]), derive_seed(1, &[1, 0]));
        assert_eq!(derive_seed(9, &[4, 2]), derive_seed(9, &[4, 2]));
    }
}
