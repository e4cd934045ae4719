//! Church encodings of booleans, boolean operators and numerals.
//!
//! ```text
//! true  = λa.λb.a          not = λp.λa.λb. p b a
//! false = λa.λb.b          and = λp.λq. p q p
//! n     = λf.λx. fⁿ x      or  = λp.λq. p p q
//! mult  = λm.λn.λf. m (n f)
//! ```

use alloc::boxed::Box;
use alloc::collections::{BTreeMap, BTreeSet};

use crate::debruijn::{from_debruijn, NameOrder};
use crate::syntax::parse_traditional;
use crate::term::{DbTerm, Term, VarName};

const NOT: &str = "L p L a L b @ @ p b a";
const AND: &str = "L p L q @ @ p q p";
const OR: &str = "L p L q @ @ p p q";
const MULT: &str = "L m L n L f @ m @ n f";

fn combinator(src: &str) -> Term {
    parse_traditional(src).expect("combinator source is well formed")
}

fn alphabetical(t: &DbTerm) -> Term {
    from_debruijn(t, &NameOrder::Alphabetical).expect("alphabetical supply is unbounded")
}

pub fn church_bool_db(value: bool) -> DbTerm {
    DbTerm::abs(DbTerm::abs(DbTerm::Var(if value { 2 } else { 1 })))
}

/// `λa.λb.a` for true, `λa.λb.b` for false.
pub fn church_bool(value: bool) -> Term {
    alphabetical(&church_bool_db(value))
}

pub fn church_numeral_db(n: usize) -> DbTerm {
    let body = (0..n).fold(DbTerm::Var(1), |acc, _| DbTerm::app(DbTerm::Var(2), acc));
    DbTerm::abs(DbTerm::abs(body))
}

/// `λa.λb. a (a (... b))` with `n` applications.
pub fn church_numeral(n: usize) -> Term {
    alphabetical(&church_numeral_db(n))
}

/// `(λm.λn.λf. m (n f)) a b`, renamed to satisfy the Barendregt convention.
pub fn church_mult(a: &Term, b: &Term) -> Term {
    Term::apply_all(combinator(MULT), [a.clone(), b.clone()]).freshened()
}

/// A boolean expression over Church booleans and free variables.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum BoolExpr {
    ConstTrue,
    ConstFalse,
    FreeVar(VarName),
    Not(Box<BoolExpr>),
    And(Box<BoolExpr>, Box<BoolExpr>),
    Or(Box<BoolExpr>, Box<BoolExpr>),
}

impl BoolExpr {
    #[allow(clippy::should_implement_trait)]
    pub fn not(e: BoolExpr) -> Self {
        BoolExpr::Not(Box::new(e))
    }

    pub fn and(l: BoolExpr, r: BoolExpr) -> Self {
        BoolExpr::And(Box::new(l), Box::new(r))
    }

    pub fn or(l: BoolExpr, r: BoolExpr) -> Self {
        BoolExpr::Or(Box::new(l), Box::new(r))
    }

    pub fn internal_nodes(&self) -> usize {
        match self {
            BoolExpr::ConstTrue | BoolExpr::ConstFalse | BoolExpr::FreeVar(_) => 0,
            BoolExpr::Not(e) => 1 + e.internal_nodes(),
            BoolExpr::And(l, r) | BoolExpr::Or(l, r) => 1 + l.internal_nodes() + r.internal_nodes(),
        }
    }

    pub fn free_variables(&self) -> BTreeSet<VarName> {
        let mut out = BTreeSet::new();
        self.collect_vars(&mut out);
        out
    }

    fn collect_vars(&self, out: &mut BTreeSet<VarName>) {
        match self {
            BoolExpr::ConstTrue | BoolExpr::ConstFalse => {}
            BoolExpr::FreeVar(v) => {
                out.insert(v.clone());
            }
            BoolExpr::Not(e) => e.collect_vars(out),
            BoolExpr::And(l, r) | BoolExpr::Or(l, r) => {
                l.collect_vars(out);
                r.collect_vars(out);
            }
        }
    }
}

/// Structural encoding; the whole term satisfies the Barendregt convention.
pub fn encode_bool_expr(e: &BoolExpr) -> Term {
    fn raw(e: &BoolExpr) -> Term {
        match e {
            BoolExpr::ConstTrue => church_bool(true),
            BoolExpr::ConstFalse => church_bool(false),
            BoolExpr::FreeVar(v) => Term::var(v),
            BoolExpr::Not(e) => Term::app(combinator(NOT), raw(e)),
            BoolExpr::And(l, r) => Term::apply_all(combinator(AND), [raw(l), raw(r)]),
            BoolExpr::Or(l, r) => Term::apply_all(combinator(OR), [raw(l), raw(r)]),
        }
    }
    raw(e).freshened()
}

#[derive(Clone, Debug, PartialEq, Eq, thiserror::Error)]
#[error("unbound variable `{0}`")]
pub struct UnboundVariable(pub VarName);

pub fn eval_bool_expr(e: &BoolExpr, env: &BTreeMap<VarName, bool>) -> Result<bool, UnboundVariable> {
    Ok(match e {
        BoolExpr::ConstTrue => true,
        BoolExpr::ConstFalse => false,
        BoolExpr::FreeVar(v) => *env.get(v).ok_or_else(|| UnboundVariable(v.clone()))?,
        BoolExpr::Not(e) => !eval_bool_expr(e, env)?,
        BoolExpr::And(l, r) => eval_bool_expr(l, env)? && eval_bool_expr(r, env)?,
        BoolExpr::Or(l, r) => eval_bool_expr(l, env)? || eval_bool_expr(r, env)?,
    })
}
