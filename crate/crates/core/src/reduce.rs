//! Substitution, redex selection and beta-reduction.
//!
//! Substitution never renames binders. When a naive replacement would capture
//! a free variable of the argument it is still performed, and the outcome is
//! flagged with `capture_required` so callers can discard it.

use alloc::collections::BTreeSet;
use alloc::vec::Vec;

use crate::debruijn::{from_debruijn, to_debruijn, NameOrder};
use crate::term::{DbTerm, Term, VarName};

pub use crate::term::PathStep;

/// Reduction cap used when none is given.
pub const DEFAULT_MAX_STEPS: usize = 100;

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash)]
pub enum Strategy {
    /// Leftmost-outermost redex (normal order).
    #[default]
    Lazy,
    /// Leftmost-innermost redex.
    Strict,
}

/// A located redex `(λbinder. body) argument`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Redex<'a> {
    pub path: Vec<PathStep>,
    pub binder: &'a VarName,
    pub body: &'a Term,
    pub argument: &'a Term,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ReductionOutcome {
    pub term: Term,
    /// A binder of the body captured a free variable of the argument.
    pub capture_required: bool,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Normalization {
    pub term: Term,
    pub steps: usize,
    pub reached_normal_form: bool,
    pub capture_required: bool,
}

/// `body[var := replacement]` without renaming.
pub fn substitute(body: &Term, var: &VarName, replacement: &Term) -> ReductionOutcome {
    struct Subst<'a> {
        var: &'a VarName,
        replacement: &'a Term,
        replacement_free: BTreeSet<VarName>,
        captured: bool,
    }

    impl Subst<'_> {
        // Returns the new term and whether `var` occurred free in `t`.
        fn go(&mut self, t: &Term) -> (Term, bool) {
            match t {
                Term::Var(x) if x == self.var => (self.replacement.clone(), true),
                Term::Var(_) => (t.clone(), false),
                Term::Abs(x, _) if x == self.var => (t.clone(), false),
                Term::Abs(x, inner) => {
                    let (inner, hit) = self.go(inner);
                    if hit && self.replacement_free.contains(x) {
                        self.captured = true;
                    }
                    (Term::abs(x.clone(), inner), hit)
                }
                Term::App(fun, arg) => {
                    let (fun, hit_fun) = self.go(fun);
                    let (arg, hit_arg) = self.go(arg);
                    (Term::app(fun, arg), hit_fun || hit_arg)
                }
            }
        }
    }

    let mut s = Subst {
        var,
        replacement,
        replacement_free: replacement.free_variables(),
        captured: false,
    };
    let (term, _) = s.go(body);
    ReductionOutcome { term, capture_required: s.captured }
}

fn as_redex<'a>(t: &'a Term, path: &[PathStep]) -> Option<Redex<'a>> {
    match t {
        Term::App(fun, argument) => match &**fun {
            Term::Abs(binder, body) => Some(Redex {
                path: path.to_vec(),
                binder,
                body,
                argument,
            }),
            _ => None,
        },
        _ => None,
    }
}

/// The redex `strategy` contracts next, or `None` for a normal form.
pub fn find_redex(t: &Term, strategy: Strategy) -> Option<Redex<'_>> {
    let mut path = Vec::new();
    match strategy {
        Strategy::Lazy => outermost(t, &mut path),
        Strategy::Strict => innermost(t, &mut path),
    }
}

// First redex in pre-order.
fn outermost<'a>(t: &'a Term, path: &mut Vec<PathStep>) -> Option<Redex<'a>> {
    if let Some(r) = as_redex(t, path) {
        return Some(r);
    }
    descend(t, path, outermost)
}

// First redex in pre-order among those containing no other redex.
fn innermost<'a>(t: &'a Term, path: &mut Vec<PathStep>) -> Option<Redex<'a>> {
    descend(t, path, innermost).or_else(|| as_redex(t, path))
}

fn descend<'a>(
    t: &'a Term,
    path: &mut Vec<PathStep>,
    find: fn(&'a Term, &mut Vec<PathStep>) -> Option<Redex<'a>>,
) -> Option<Redex<'a>> {
    let mut visit = |step, child| {
        path.push(step);
        let found = find(child, path);
        path.pop();
        found
    };
    match t {
        Term::Var(_) => None,
        Term::Abs(_, body) => visit(PathStep::AbsBody, body),
        Term::App(fun, arg) => {
            visit(PathStep::AppFun, fun).or_else(|| visit(PathStep::AppArg, arg))
        }
    }
}

/// Contracts the redex chosen by `strategy`; `None` for a normal form.
pub fn beta_reduce_once(t: &Term, strategy: Strategy) -> Option<ReductionOutcome> {
    let redex = find_redex(t, strategy)?;
    let contracted = substitute(redex.body, redex.binder, redex.argument);
    let term = t
        .replace_at(&redex.path, contracted.term)
        .expect("redex path addresses a subterm");
    Some(ReductionOutcome { term, capture_required: contracted.capture_required })
}

/// Reduces until a normal form or `max_steps` contractions.
pub fn normalize(t: &Term, strategy: Strategy, max_steps: usize) -> Normalization {
    let mut term = t.clone();
    let mut steps = 0;
    let mut capture_required = false;
    while steps < max_steps {
        match beta_reduce_once(&term, strategy) {
            None => break,
            Some(out) => {
                term = out.term;
                capture_required |= out.capture_required;
                steps += 1;
            }
        }
    }
    let reached_normal_form = find_redex(&term, strategy).is_none();
    Normalization { term, steps, reached_normal_form, capture_required }
}

/// One step on a de Bruijn term. The term is renamed to satisfy the
/// Barendregt convention before contracting, so the step never captures.
pub fn reduce_db_once(t: &DbTerm, strategy: Strategy) -> Option<DbTerm> {
    let named = from_debruijn(t, &NameOrder::Alphabetical).expect("alphabetical supply is unbounded");
    beta_reduce_once(&named, strategy).map(|out| {
        debug_assert!(!out.capture_required);
        to_debruijn(&out.term)
    })
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DbNormalization {
    pub term: DbTerm,
    pub steps: usize,
    pub reached_normal_form: bool,
}

pub fn normalize_db(t: &DbTerm, strategy: Strategy, max_steps: usize) -> DbNormalization {
    let mut term = t.clone();
    let mut steps = 0;
    while steps < max_steps {
        match reduce_db_once(&term, strategy) {
            None => break,
            Some(next) => {
                term = next;
                steps += 1;
            }
        }
    }
    let reached_normal_form = term.is_normal();
    DbNormalization { term, steps, reached_normal_form }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::debruijn::alpha_equal;
    use crate::syntax::{parse_debruijn, parse_traditional};
    use alloc::string::ToString;

    fn t(s: &str) -> Term {
        parse_traditional(s).unwrap()
    }

    fn v(s: &str) -> VarName {
        VarName::new(s).unwrap()
    }

    const OMEGA: &str = "@ L x @ x x L x @ x x";

    #[test]
    fn substitution_examples() {
        let out = substitute(&t("x"), &v("x"), &t("L z z"));
        assert_eq!(out.term.to_string(), "L z z");
        assert!(!out.capture_required);

        let out = substitute(&t("@ x y"), &v("x"), &t("w"));
        assert_eq!(out.term.to_string(), "@ w y");
        assert!(!out.capture_required);

        let out = substitute(&t("L y @ x y"), &v("x"), &t("y"));
        assert_eq!(out.term.to_string(), "L y @ y y");
        assert!(out.capture_required);
    }

    #[test]
    fn substitution_respects_shadowing() {
        let out = substitute(&t("@ x L x x"), &v("x"), &t("y"));
        assert_eq!(out.term.to_string(), "@ y L x x");
        assert!(!out.capture_required);
        // binder named like a free variable of the argument, but `x` absent below it
        let out = substitute(&t("@ x L y y"), &v("x"), &t("y"));
        assert_eq!(out.term.to_string(), "@ y L y y");
        assert!(!out.capture_required);
    }

    #[test]
    fn redex_selection() {
        assert!(find_redex(&t("x"), Strategy::Lazy).is_none());
        let term = t("@ L x x @ L y y z");
        assert_eq!(find_redex(&term, Strategy::Lazy).unwrap().path, []);
        assert_eq!(find_redex(&term, Strategy::Strict).unwrap().path, [PathStep::AppArg]);

        let r = find_redex(&term, Strategy::Lazy).unwrap();
        assert_eq!(r.binder.as_str(), "x");
        assert_eq!(r.body.to_string(), "x");
        assert_eq!(r.argument.to_string(), "@ L y y z");
    }

    #[test]
    fn strict_prefers_leftmost_among_innermost() {
        // two innermost redexes, in the function and the argument
        let term = t("@ @ L a a b @ L c c d");
        let r = find_redex(&term, Strategy::Strict).unwrap();
        assert_eq!(r.path, [PathStep::AppFun]);
        // innermost inside the body of an outer redex
        let term = t("@ L x @ L y y x z");
        let r = find_redex(&term, Strategy::Strict).unwrap();
        assert_eq!(r.path, [PathStep::AppFun, PathStep::AbsBody]);
    }

    #[test]
    fn one_step_examples() {
        assert_eq!(beta_reduce_once(&t("@ L x x y"), Strategy::Lazy).unwrap().term.to_string(), "y");
        let omega = t(OMEGA);
        let out = beta_reduce_once(&omega, Strategy::Lazy).unwrap();
        assert_eq!(out.term, omega);
        assert!(!out.capture_required);
        let out = beta_reduce_once(&t("@ @ L x L y @ x y a b"), Strategy::Lazy).unwrap();
        assert_eq!(out.term.to_string(), "@ L y @ a y b");
        assert!(beta_reduce_once(&t("L x @ x x"), Strategy::Lazy).is_none());
    }

    #[test]
    fn normalization_examples() {
        let n = normalize(&t("@ L x x y"), Strategy::Lazy, 100);
        assert_eq!((n.term.to_string().as_str(), n.steps, n.reached_normal_form, n.capture_required), ("y", 1, true, false));

        let omega = t(OMEGA);
        let n = normalize(&omega, Strategy::Lazy, 100);
        assert_eq!(n.term, omega);
        assert_eq!(n.steps, 100);
        assert!(!n.reached_normal_form);
        assert!(!n.capture_required);

        let nf = t("L x x");
        let n = normalize(&nf, Strategy::Strict, 5);
        assert_eq!((n.term, n.steps, n.reached_normal_form, n.capture_required), (nf, 0, true, false));
    }

    #[test]
    fn lazy_finds_normal_form_strict_misses() {
        // (λx.y) Ω
        let term = t("@ L z y @ L x @ x x L x @ x x");
        let lazy = normalize(&term, Strategy::Lazy, 100);
        assert!(lazy.reached_normal_form);
        assert_eq!(lazy.term.to_string(), "y");
        let strict = normalize(&term, Strategy::Strict, 100);
        assert!(!strict.reached_normal_form);
    }

    #[test]
    fn capture_propagates_through_normalize() {
        // (λx.λy. x) y  -- naive result λy.y captures
        let term = t("@ L x L y x y");
        let out = beta_reduce_once(&term, Strategy::Lazy).unwrap();
        assert!(out.capture_required);
        assert!(normalize(&term, Strategy::Lazy, 10).capture_required);
    }

    #[test]
    fn de_bruijn_steps() {
        let term = parse_debruijn("@ L 1 0").unwrap();
        assert_eq!(reduce_db_once(&term, Strategy::Lazy).unwrap().to_string(), "0");
        // the named counterpart would capture; the de Bruijn step does not
        let term = parse_debruijn("L @ L L 2 1").unwrap();
        assert_eq!(reduce_db_once(&term, Strategy::Lazy).unwrap().to_string(), "L L 2");
        let n = normalize_db(&parse_debruijn("@ L @ 1 1 L @ 1 1").unwrap(), Strategy::Lazy, 7);
        assert_eq!((n.steps, n.reached_normal_form), (7, false));
        let named = normalize(&t("@ @ L x L y @ x y a b"), Strategy::Lazy, 10);
        assert!(alpha_equal(&named.term, &t("@ a b")));
    }
}
