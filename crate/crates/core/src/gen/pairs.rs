use alloc::vec::Vec;

use super::{GenConfig, GenError, LambdaSet, LambdaSetKind, SourceKind, Task};
use crate::debruijn::{from_debruijn, to_debruijn, NameOrder};
use crate::reduce::{beta_reduce_once, Strategy};
use crate::term::{DbTerm, Term};

/// A reduction pair before rendering, in canonical de Bruijn form.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RawPair {
    pub input: DbTerm,
    pub target: DbTerm,
    /// 1 for one-step pairs; reductions to normal form for multi-step pairs.
    pub steps: u32,
    /// Reducing the named term in place needed a renaming somewhere on the
    /// way from `input` to `target`.
    pub capture_required: bool,
}

/// Pairs derived from one source term.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TermDerivation {
    pub pairs: Vec<RawPair>,
    /// Length of the term's lazy reduction sequence: steps to normal form, or
    /// the step cap when it has none. `None` when the term was dropped.
    pub reductions: Option<u32>,
}

fn alphabetical(t: &DbTerm) -> Term {
    from_debruijn(t, &NameOrder::Alphabetical).expect("alphabetical supply is unbounded")
}

/// One lazy step on a named term, keeping its names. A step that would
/// capture is replaced by the correct reduct under fresh names.
fn step(t: &Term) -> Option<(Term, bool)> {
    let out = beta_reduce_once(t, Strategy::Lazy)?;
    if !out.capture_required {
        return Some((out.term, false));
    }
    let renamed = alphabetical(&to_debruijn(t));
    let fixed = beta_reduce_once(&renamed, Strategy::Lazy).expect("renaming keeps the redex");
    debug_assert!(!fixed.capture_required);
    Some((fixed.term, true))
}

/// Walks the lazy reduction sequence of `t`, named alphabetically.
///
/// One-step: every step whose two sides fit the token cap becomes a pair.
/// Multi-step: a single (source, normal form) pair, or nothing when the term
/// does not normalize within the step cap. In both tasks a sequence that grows
/// past `chain_size_limit` tokens is abandoned.
pub fn derive_term(t: &DbTerm, task: Task, config: &GenConfig) -> TermDerivation {
    let fits = |n: usize| n <= config.max_tokens;
    let mut cur = alphabetical(t);
    let mut cur_db = t.clone();
    let mut pairs = Vec::new();
    let mut steps = 0u32;
    let mut any_capture = false;
    let mut normal = false;

    while (steps as usize) < config.max_steps {
        let Some((next, capture)) = step(&cur) else {
            normal = true;
            break;
        };
        steps += 1;
        any_capture |= capture;
        let next_size = next.token_count();
        if next_size > config.chain_size_limit {
            return TermDerivation { pairs, reductions: None };
        }
        let next_db = to_debruijn(&next);
        if task == Task::Obr && fits(cur.token_count()) && fits(next_size) {
            pairs.push(RawPair {
                input: cur_db,
                target: next_db.clone(),
                steps: 1,
                capture_required: capture,
            });
        }
        cur = next;
        cur_db = next_db;
    }
    normal |= crate::reduce::find_redex(&cur, Strategy::Lazy).is_none();

    match task {
        Task::Obr => TermDerivation { pairs, reductions: Some(steps) },
        Task::Mbr if normal && fits(t.named_token_count()) && fits(cur.token_count()) => TermDerivation {
            pairs: alloc::vec![RawPair {
                input: t.clone(),
                target: cur_db,
                steps,
                capture_required: any_capture,
            }],
            reductions: Some(steps),
        },
        Task::Mbr => TermDerivation { pairs: Vec::new(), reductions: None },
    }
}

/// Multi-step datasets need sources that normalize, which random terms may not.
pub fn check_task(kind: LambdaSetKind, task: Task) -> Result<(), GenError> {
    check_sources(kind.sources(task), task)
}

/// Same check for an explicit source list.
pub fn check_sources(sources: &[SourceKind], task: Task) -> Result<(), GenError> {
    if task == Task::Mbr && sources.contains(&SourceKind::Random) {
        return Err(GenError::RandomSetForMbr);
    }
    Ok(())
}

/// Derives raw pairs from every term of a lambda set, in set order.
pub fn derive_pairs(ls: &LambdaSet, task: Task, config: &GenConfig) -> Result<Vec<TermDerivation>, GenError> {
    check_sources(ls.sources(), task)?;
    Ok(ls.terms.iter().map(|t| derive_term(t, task, config)).collect())
}
