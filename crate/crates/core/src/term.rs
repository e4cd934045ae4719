use alloc::boxed::Box;
use alloc::collections::BTreeSet;
use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;

/// A variable name: one or more lowercase ASCII letters followed by an
/// optional decimal suffix (`a`, `z`, `a1`, `foo12`).
///
/// The prefix-notation keywords `L` and `@` can never be names.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct VarName(String);

impl VarName {
    pub fn new(name: &str) -> Option<Self> {
        Self::is_valid(name).then(|| VarName(String::from(name)))
    }

    pub fn is_valid(name: &str) -> bool {
        let letters = name.bytes().take_while(u8::is_ascii_lowercase).count();
        letters > 0 && name.bytes().skip(letters).all(|b| b.is_ascii_digit())
    }

    /// The `index`-th name of the supply `a..z, a1..z1, a2..z2, ...`.
    pub fn nth(index: usize) -> Self {
        let letter = char::from(b'a' + (index % 26) as u8);
        let round = index / 26;
        let mut name = String::new();
        name.push(letter);
        if round > 0 {
            use core::fmt::Write;
            let _ = write!(name, "{round}");
        }
        VarName(name)
    }

    pub fn as_str(&self) -> &str {
        &self.0
    }
}

impl fmt::Display for VarName {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0)
    }
}

impl fmt::Debug for VarName {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0)
    }
}

/// Child selector used to address a subterm from the root.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum PathStep {
    AbsBody,
    AppFun,
    AppArg,
}

/// A named lambda term.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Term {
    Var(VarName),
    Abs(VarName, Box<Term>),
    App(Box<Term>, Box<Term>),
}

impl Term {
    pub fn var(name: &VarName) -> Term {
        Term::Var(name.clone())
    }

    pub fn abs(param: VarName, body: Term) -> Term {
        Term::Abs(param, Box::new(body))
    }

    pub fn app(fun: Term, arg: Term) -> Term {
        Term::App(Box::new(fun), Box::new(arg))
    }

    /// Left-nested application `head a1 a2 ... an`.
    pub fn apply_all(head: Term, args: impl IntoIterator<Item = Term>) -> Term {
        args.into_iter().fold(head, Term::app)
    }

    pub fn is_redex(&self) -> bool {
        matches!(self, Term::App(fun, _) if matches!(**fun, Term::Abs(..)))
    }

    /// Number of tokens in the prefix serialization.
    pub fn token_count(&self) -> usize {
        match self {
            Term::Var(_) => 1,
            Term::Abs(_, body) => 2 + body.token_count(),
            Term::App(fun, arg) => 1 + fun.token_count() + arg.token_count(),
        }
    }

    pub fn free_variables(&self) -> BTreeSet<VarName> {
        let mut free = BTreeSet::new();
        let mut bound = Vec::new();
        collect_free(self, &mut bound, &mut free);
        free
    }

    /// All binder names in pre-order, duplicates included.
    pub fn binders(&self) -> Vec<&VarName> {
        let mut out = Vec::new();
        let mut stack = alloc::vec![self];
        while let Some(t) = stack.pop() {
            match t {
                Term::Var(_) => {}
                Term::Abs(x, body) => {
                    out.push(x);
                    stack.push(body);
                }
                Term::App(fun, arg) => {
                    stack.push(arg);
                    stack.push(fun);
                }
            }
        }
        out
    }

    /// Binders pairwise distinct and disjoint from the free variables.
    pub fn satisfies_barendregt(&self) -> bool {
        let free = self.free_variables();
        let mut seen = BTreeSet::new();
        self.binders()
            .into_iter()
            .all(|x| !free.contains(x) && seen.insert(x))
    }

    /// Renames every binder to the next unused name of the supply, skipping
    /// the free variables, so the result satisfies the Barendregt convention.
    pub fn freshened(&self) -> Term {
        let free = self.free_variables();
        let mut next = 0usize;
        let mut scope: Vec<(&VarName, VarName)> = Vec::new();
        freshen(self, &free, &mut next, &mut scope)
    }

    pub fn subterm_at(&self, path: &[PathStep]) -> Option<&Term> {
        path.iter().try_fold(self, |t, step| match (t, step) {
            (Term::Abs(_, body), PathStep::AbsBody) => Some(&**body),
            (Term::App(fun, _), PathStep::AppFun) => Some(&**fun),
            (Term::App(_, arg), PathStep::AppArg) => Some(&**arg),
            _ => None,
        })
    }

    /// Copy of `self` with the subterm at `path` replaced. `None` if the
    /// path does not address a subterm.
    pub fn replace_at(&self, path: &[PathStep], replacement: Term) -> Option<Term> {
        let Some((step, rest)) = path.split_first() else {
            return Some(replacement);
        };
        Some(match (self, step) {
            (Term::Abs(x, body), PathStep::AbsBody) => {
                Term::abs(x.clone(), body.replace_at(rest, replacement)?)
            }
            (Term::App(fun, arg), PathStep::AppFun) => {
                Term::app(fun.replace_at(rest, replacement)?, (**arg).clone())
            }
            (Term::App(fun, arg), PathStep::AppArg) => {
                Term::app((**fun).clone(), arg.replace_at(rest, replacement)?)
            }
            _ => return None,
        })
    }
}

fn collect_free<'a>(t: &'a Term, bound: &mut Vec<&'a VarName>, free: &mut BTreeSet<VarName>) {
    match t {
        Term::Var(x) => {
            if !bound.contains(&x) {
                free.insert(x.clone());
            }
        }
        Term::Abs(x, body) => {
            bound.push(x);
            collect_free(body, bound, free);
            bound.pop();
        }
        Term::App(fun, arg) => {
            collect_free(fun, bound, free);
            collect_free(arg, bound, free);
        }
    }
}

fn freshen<'a>(
    t: &'a Term,
    free: &BTreeSet<VarName>,
    next: &mut usize,
    scope: &mut Vec<(&'a VarName, VarName)>,
) -> Term {
    match t {
        Term::Var(x) => match scope.iter().rev().find(|(old, _)| *old == x) {
            Some((_, new)) => Term::Var(new.clone()),
            None => Term::Var(x.clone()),
        },
        Term::Abs(x, body) => {
            let fresh = loop {
                let candidate = VarName::nth(*next);
                *next += 1;
                if !free.contains(&candidate) {
                    break candidate;
                }
            };
            scope.push((x, fresh.clone()));
            let body = freshen(body, free, next, scope);
            scope.pop();
            Term::abs(fresh, body)
        }
        Term::App(fun, arg) => {
            let fun = freshen(fun, free, next, scope);
            let arg = freshen(arg, free, next, scope);
            Term::app(fun, arg)
        }
    }
}

/// A de Bruijn term. Index `0` is a free variable; bound indices count
/// enclosing binders starting at `1`.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum DbTerm {
    Var(u32),
    Abs(Box<DbTerm>),
    App(Box<DbTerm>, Box<DbTerm>),
}

impl DbTerm {
    pub fn abs(body: DbTerm) -> DbTerm {
        DbTerm::Abs(Box::new(body))
    }

    pub fn app(fun: DbTerm, arg: DbTerm) -> DbTerm {
        DbTerm::App(Box::new(fun), Box::new(arg))
    }

    pub fn token_count(&self) -> usize {
        match self {
            DbTerm::Var(_) => 1,
            DbTerm::Abs(body) => 1 + body.token_count(),
            DbTerm::App(fun, arg) => 1 + fun.token_count() + arg.token_count(),
        }
    }

    pub fn abstraction_count(&self) -> usize {
        match self {
            DbTerm::Var(_) => 0,
            DbTerm::Abs(body) => 1 + body.abstraction_count(),
            DbTerm::App(fun, arg) => fun.abstraction_count() + arg.abstraction_count(),
        }
    }

    /// Token count of any named rendering of this term.
    pub fn named_token_count(&self) -> usize {
        self.token_count() + self.abstraction_count()
    }

    pub fn is_closed(&self) -> bool {
        match self {
            DbTerm::Var(i) => *i != 0,
            DbTerm::Abs(body) => body.is_closed(),
            DbTerm::App(fun, arg) => fun.is_closed() && arg.is_closed(),
        }
    }

    /// No redex anywhere in the term.
    pub fn is_normal(&self) -> bool {
        match self {
            DbTerm::Var(_) => true,
            DbTerm::Abs(body) => body.is_normal(),
            DbTerm::App(fun, arg) => {
                !matches!(**fun, DbTerm::Abs(_)) && fun.is_normal() && arg.is_normal()
            }
        }
    }

    /// Every nonzero index is bound by an enclosing abstraction.
    pub fn is_well_scoped(&self) -> bool {
        fn go(t: &DbTerm, depth: u32) -> bool {
            match t {
                DbTerm::Var(i) => *i <= depth,
                DbTerm::Abs(body) => go(body, depth + 1),
                DbTerm::App(fun, arg) => go(fun, depth) && go(arg, depth),
            }
        }
        go(self, 0)
    }
}

/// Writes tokens in pre-order separated by single spaces.
fn write_prefix<'t, T>(
    f: &mut fmt::Formatter<'_>,
    root: &'t T,
    mut visit: impl FnMut(&'t T, &mut Vec<&'t T>, &mut fmt::Formatter<'_>) -> fmt::Result,
) -> fmt::Result {
    let mut stack = alloc::vec![root];
    let mut first = true;
    while let Some(t) = stack.pop() {
        if !first {
            f.write_str(" ")?;
        }
        first = false;
        visit(t, &mut stack, f)?;
    }
    Ok(())
}

impl fmt::Display for Term {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_prefix(f, self, |t, stack, f| match t {
            Term::Var(x) => f.write_str(x.as_str()),
            Term::Abs(x, body) => {
                stack.push(body);
                write!(f, "L {x}")
            }
            Term::App(fun, arg) => {
                stack.push(arg);
                stack.push(fun);
                f.write_str("@")
            }
        })
    }
}

impl fmt::Debug for Term {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "`{self}`")
    }
}

impl fmt::Display for DbTerm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_prefix(f, self, |t, stack, f| match t {
            DbTerm::Var(i) => write!(f, "{i}"),
            DbTerm::Abs(body) => {
                stack.push(body);
                f.write_str("L")
            }
            DbTerm::App(fun, arg) => {
                stack.push(arg);
                stack.push(fun);
                f.write_str("@")
            }
        })
    }
}

impl fmt::Debug for DbTerm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "`{self}`")
    }
}
