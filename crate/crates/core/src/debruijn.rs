//! Conversion between named terms and de Bruijn terms.

use alloc::vec::Vec;

use rand::seq::SliceRandom;
use rand::Rng;

use crate::term::{DbTerm, Term, VarName};

/// Order in which names are handed out when a de Bruijn term is named.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum NameOrder {
    /// The supply `a..z, a1..z1, ...` in order.
    Alphabetical,
    /// An explicit finite sequence of names.
    Permuted(Vec<VarName>),
}

impl NameOrder {
    /// A random permutation of the first `max(26, needed)` names of the
    /// supply, rounded up to whole alphabets.
    pub fn shuffled<R: Rng + ?Sized>(rng: &mut R, needed: usize) -> Self {
        let size = needed.max(1).div_ceil(26) * 26;
        let mut names: Vec<VarName> = (0..size).map(VarName::nth).collect();
        names.shuffle(rng);
        NameOrder::Permuted(names)
    }

    pub fn name(&self, index: usize) -> Option<VarName> {
        match self {
            NameOrder::Alphabetical => Some(VarName::nth(index)),
            NameOrder::Permuted(names) => names.get(index).cloned(),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, thiserror::Error)]
#[error("name supply exhausted: {needed} names needed, {available} available")]
pub struct NameSupplyExhausted {
    pub needed: usize,
    pub available: usize,
}

/// Bound occurrences become the distance to their binder (innermost = 1);
/// all free occurrences become 0.
pub fn to_debruijn(t: &Term) -> DbTerm {
    fn go<'a>(t: &'a Term, scope: &mut Vec<&'a VarName>) -> DbTerm {
        match t {
            Term::Var(x) => {
                let index = scope
                    .iter()
                    .rev()
                    .position(|b| *b == x)
                    .map_or(0, |p| p as u32 + 1);
                DbTerm::Var(index)
            }
            Term::Abs(x, body) => {
                scope.push(x);
                let body = go(body, scope);
                scope.pop();
                DbTerm::abs(body)
            }
            Term::App(fun, arg) => DbTerm::app(go(fun, scope), go(arg, scope)),
        }
    }
    go(t, &mut Vec::new())
}

/// Names binders in pre-order from `order`. Every free occurrence (index 0)
/// receives the single name following the last binder's.
pub fn from_debruijn(t: &DbTerm, order: &NameOrder) -> Result<Term, NameSupplyExhausted> {
    struct Namer<'o> {
        order: &'o NameOrder,
        next: usize,
        free: Option<VarName>,
        binders: usize,
        needed: usize,
    }

    impl Namer<'_> {
        fn take(&mut self, index: usize) -> Result<VarName, NameSupplyExhausted> {
            self.order.name(index).ok_or(NameSupplyExhausted {
                needed: self.needed,
                available: match self.order {
                    NameOrder::Alphabetical => usize::MAX,
                    NameOrder::Permuted(names) => names.len(),
                },
            })
        }

        fn go(&mut self, t: &DbTerm, scope: &mut Vec<VarName>) -> Result<Term, NameSupplyExhausted> {
            Ok(match t {
                DbTerm::Var(0) => {
                    if self.free.is_none() {
                        self.free = Some(self.take(self.binders)?);
                    }
                    Term::Var(self.free.clone().unwrap())
                }
                DbTerm::Var(i) => {
                    let i = *i as usize;
                    debug_assert!(i <= scope.len(), "ill-scoped de Bruijn index");
                    match scope.len().checked_sub(i).and_then(|p| scope.get(p)) {
                        Some(name) => Term::Var(name.clone()),
                        // ill-scoped index: treat as free
                        None => return self.go(&DbTerm::Var(0), scope),
                    }
                }
                DbTerm::Abs(body) => {
                    let name = self.take(self.next)?;
                    self.next += 1;
                    scope.push(name.clone());
                    let body = self.go(body, scope)?;
                    scope.pop();
                    Term::abs(name, body)
                }
                DbTerm::App(fun, arg) => {
                    let fun = self.go(fun, scope)?;
                    Term::app(fun, self.go(arg, scope)?)
                }
            })
        }
    }

    let binders = t.abstraction_count();
    let needed = binders + usize::from(!t.is_closed());
    let mut namer = Namer { order, next: 0, free: None, binders, needed };
    namer.go(t, &mut Vec::new())
}

/// Structural equality of de Bruijn forms. Exact alpha-equivalence on closed
/// terms; on open terms all free variables are identified.
pub fn alpha_equal(a: &Term, b: &Term) -> bool {
    to_debruijn(a) == to_debruijn(b)
}
