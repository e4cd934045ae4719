//! Independent oracles shared by the integration tests. Nothing here calls the
//! engine under test.
#![allow(dead_code)]

use std::collections::HashMap;

/// De Bruijn token: `L`, `@` or an index.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Tok {
    Lam,
    App,
    Idx(u32),
}

pub fn tokens(text: &str) -> Vec<Tok> {
    text.split_ascii_whitespace()
        .map(|t| match t {
            "L" => Tok::Lam,
            "@" => Tok::App,
            n => Tok::Idx(n.parse().expect("index token")),
        })
        .collect()
}

pub fn untokens(toks: &[Tok]) -> String {
    toks.iter()
        .map(|t| match t {
            Tok::Lam => "L".to_owned(),
            Tok::App => "@".to_owned(),
            Tok::Idx(i) => i.to_string(),
        })
        .collect::<Vec<_>>()
        .join(" ")
}

/// End (exclusive) of the subterm starting at `start`.
fn subterm_end(toks: &[Tok], start: usize) -> usize {
    let mut open = 1usize;
    let mut i = start;
    while open > 0 {
        open += match toks[i] {
            Tok::Lam => 0,
            Tok::App => 1,
            Tok::Idx(_) => 0,
        };
        if matches!(toks[i], Tok::Idx(_)) {
            open -= 1;
        }
        i += 1;
    }
    i
}

/// Binder depth of every token within `toks`, counted from the slice start.
fn depths(toks: &[Tok]) -> Vec<u32> {
    // stack of (depth, children still expected)
    let mut out = Vec::with_capacity(toks.len());
    let mut stack: Vec<(u32, u32)> = vec![(0, 1)];
    for t in toks {
        let top = stack.last_mut().expect("well-formed term");
        let d = top.0;
        top.1 -= 1;
        if top.1 == 0 {
            stack.pop();
        }
        out.push(d);
        match t {
            Tok::Lam => stack.push((d + 1, 1)),
            Tok::App => stack.push((d, 2)),
            Tok::Idx(_) => {}
        }
    }
    out
}

/// Adds `by` to every index of `toks` that points outside the slice.
fn shift(toks: &[Tok], by: u32) -> Vec<Tok> {
    toks.iter()
        .zip(depths(toks))
        .map(|(t, d)| match *t {
            Tok::Idx(i) if i > d => Tok::Idx(i + by),
            other => other,
        })
        .collect()
}

/// One leftmost-outermost step on a de Bruijn term (index 0 = free).
/// `None` for a normal form.
pub fn reference_step(text: &str) -> Option<String> {
    let toks = tokens(text);
    let at = (0..toks.len().saturating_sub(1)).find(|&i| toks[i] == Tok::App && toks[i + 1] == Tok::Lam)?;
    let body_start = at + 2;
    let body_end = subterm_end(&toks, body_start);
    let arg_end = subterm_end(&toks, body_end);
    let body = &toks[body_start..body_end];
    let arg = &toks[body_end..arg_end];

    let mut contracted = Vec::new();
    for (t, d) in body.iter().zip(depths(body)) {
        match *t {
            Tok::Idx(i) if i == d + 1 => contracted.extend(shift(arg, d)),
            Tok::Idx(i) if i > d + 1 => contracted.push(Tok::Idx(i - 1)),
            other => contracted.push(other),
        }
    }
    let mut out = toks[..at].to_vec();
    out.extend(contracted);
    out.extend_from_slice(&toks[arg_end..]);
    Some(untokens(&out))
}

/// Memoized recursive edit distance over characters.
pub fn levenshtein_memo(a: &str, b: &str) -> usize {
    fn go(a: &[char], b: &[char], memo: &mut HashMap<(usize, usize), usize>) -> usize {
        if a.is_empty() {
            return b.len();
        }
        if b.is_empty() {
            return a.len();
        }
        let key = (a.len(), b.len());
        if let Some(&d) = memo.get(&key) {
            return d;
        }
        let (ah, at) = a.split_last().unwrap();
        let (bh, bt) = b.split_last().unwrap();
        let d = (go(at, bt, memo) + usize::from(ah != bh))
            .min(go(at, b, memo) + 1)
            .min(go(a, bt, memo) + 1);
        memo.insert(key, d);
        d
    }
    let a: Vec<char> = a.chars().collect();
    let b: Vec<char> = b.chars().collect();
    go(&a, &b, &mut HashMap::new())
}

/// Every string over `alphabet` of length at most `max_len`, shortest first.
pub fn all_strings(alphabet: &[char], max_len: usize) -> Vec<String> {
    let mut out = vec![String::new()];
    let mut layer = vec![String::new()];
    for _ in 0..max_len {
        layer = layer
            .iter()
            .flat_map(|s| alphabet.iter().map(move |c| format!("{s}{c}")))
            .collect();
        out.extend(layer.iter().cloned());
    }
    out
}

/// Visits every `b` over `alphabet` with `|b| <= max_len` together with
/// `lev(a, b)`. The distance column for a prefix of `b` is memoized and
/// extended one character at a time along a depth-first walk.
pub fn for_each_distance(a: &[char], alphabet: &[char], max_len: usize, f: &mut impl FnMut(&str, usize)) {
    fn walk(
        a: &[char],
        alphabet: &[char],
        left: usize,
        b: &mut String,
        column: &[usize],
        f: &mut impl FnMut(&str, usize),
    ) {
        f(b, column[a.len()]);
        if left == 0 {
            return;
        }
        for &c in alphabet {
            // column[i] = lev(a[..i], b); next[i] = lev(a[..i], b + c)
            let mut next = vec![column[0] + 1; a.len() + 1];
            for i in 1..=a.len() {
                next[i] = (column[i - 1] + usize::from(a[i - 1] != c))
                    .min(column[i] + 1)
                    .min(next[i - 1] + 1);
            }
            b.push(c);
            walk(a, alphabet, left - 1, b, &next, f);
            b.pop();
        }
    }
    let column: Vec<usize> = (0..=a.len()).collect();
    walk(a, alphabet, max_len, &mut String::new(), &column, f);
}

/// Closed boolean expression over constants, for truth-table checks.
#[derive(Clone, Debug)]
pub enum Bool {
    T,
    F,
    Not(Box<Bool>),
    And(Box<Bool>, Box<Bool>),
    Or(Box<Bool>, Box<Bool>),
}

impl Bool {
    pub fn truth(&self) -> bool {
        match self {
            Bool::T => true,
            Bool::F => false,
            Bool::Not(e) => !e.truth(),
            Bool::And(l, r) => l.truth() & r.truth(),
            Bool::Or(l, r) => l.truth() | r.truth(),
        }
    }
}

/// All closed expressions with exactly `n` internal nodes.
pub fn bool_exprs(n: usize) -> Vec<Bool> {
    if n == 0 {
        return vec![Bool::T, Bool::F];
    }
    let mut out: Vec<Bool> = bool_exprs(n - 1).into_iter().map(|e| Bool::Not(Box::new(e))).collect();
    for k in 0..n {
        let lefts = bool_exprs(k);
        let rights = bool_exprs(n - 1 - k);
        for l in &lefts {
            for r in &rights {
                out.push(Bool::And(Box::new(l.clone()), Box::new(r.clone())));
                out.push(Bool::Or(Box::new(l.clone()), Box::new(r.clone())));
            }
        }
    }
    out
}

/// Church numeral in de Bruijn notation, written out by hand.
pub fn numeral_db(n: usize) -> String {
    let mut s = String::from("L L");
    for _ in 0..n {
        s.push_str(" @ 2");
    }
    s.push_str(" 1");
    s
}

/// Church booleans in de Bruijn notation.
pub fn bool_db(b: bool) -> &'static str {
    if b {
        "L L 2"
    } else {
        "L L 1"
    }
}
