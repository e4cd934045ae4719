//! Graphviz export of term trees.

use std::fmt::Write;

use lambda_forge_core::{DbTerm, Term};

enum Label<'a> {
    Abs(Option<&'a str>),
    App,
    Var(String),
}

trait Tree: Sized {
    fn node(&self) -> (Label<'_>, Vec<&Self>);
}

impl Tree for Term {
    fn node(&self) -> (Label<'_>, Vec<&Self>) {
        match self {
            Term::Var(x) => (Label::Var(x.as_str().to_owned()), vec![]),
            Term::Abs(x, body) => (Label::Abs(Some(x.as_str())), vec![body]),
            Term::App(fun, arg) => (Label::App, vec![fun, arg]),
        }
    }
}

impl Tree for DbTerm {
    fn node(&self) -> (Label<'_>, Vec<&Self>) {
        match self {
            DbTerm::Var(i) => (Label::Var(i.to_string()), vec![]),
            DbTerm::Abs(body) => (Label::Abs(None), vec![body]),
            DbTerm::App(fun, arg) => (Label::App, vec![fun, arg]),
        }
    }
}

fn render<T: Tree>(root: &T) -> String {
    let mut out = String::from("digraph term {\n  ordering=out;\n  node [shape=plaintext];\n");
    let mut next_id = 0usize;
    // (node, id, parent id)
    let mut stack = vec![(root, 0usize, None::<usize>)];
    next_id += 1;
    while let Some((t, id, parent)) = stack.pop() {
        let (label, children) = t.node();
        let label = match label {
            Label::Abs(Some(x)) => format!("L {x}"),
            Label::Abs(None) => "L".to_owned(),
            Label::App => "@".to_owned(),
            Label::Var(v) => v,
        };
        writeln!(out, "  n{id} [label=\"{label}\"];").unwrap();
        if let Some(p) = parent {
            writeln!(out, "  n{p} -> n{id};").unwrap();
        }
        // pushed in reverse so the function side is emitted first
        let ids: Vec<usize> = (0..children.len()).map(|k| next_id + k).collect();
        next_id += children.len();
        for (child, cid) in children.into_iter().zip(ids).rev() {
            stack.push((child, cid, Some(id)));
        }
    }
    out.push_str("}\n");
    out
}

pub fn term_to_dot(t: &Term) -> String {
    render(t)
}

pub fn db_term_to_dot(t: &DbTerm) -> String {
    render(t)
}
