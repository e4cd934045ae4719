//! Prefix-notation parsers.
//!
//! ```text
//! term    := var | "L" var term | "@" term term      (traditional)
//! db-term := nat | "L" db-term | "@" db-term db-term (de Bruijn)
//! ```
//!
//! Both parsers are iterative so arbitrarily deep input cannot overflow the
//! stack. Printing is the `Display` impl of [`Term`] and [`DbTerm`].

use alloc::string::{String, ToString};
use alloc::vec::Vec;
use core::str::FromStr;

use crate::term::{DbTerm, Term, VarName};

#[derive(Clone, Debug, PartialEq, Eq, thiserror::Error)]
pub enum ParseErrorKind {
    #[error("term ends before it is complete")]
    TruncatedTerm,
    #[error("unexpected trailing token `{0}` after a complete term")]
    TrailingTokens(String),
    #[error("invalid token `{0}`")]
    InvalidToken(String),
    #[error("binder expected after `L`, found `{0}`")]
    MalformedBinder(String),
    #[error("index {index} is not bound by the {depth} enclosing abstraction(s)")]
    IndexOutOfScope { index: u32, depth: u32 },
}

/// Parse failure. `position` is the zero-based index of the offending token
/// (the token count for a truncated term).
#[derive(Clone, Debug, PartialEq, Eq, thiserror::Error)]
#[error("{kind} at token {position}")]
pub struct ParseError {
    pub kind: ParseErrorKind,
    pub position: usize,
}

impl ParseError {
    fn at(kind: ParseErrorKind, position: usize) -> Self {
        ParseError { kind, position }
    }
}

enum Frame<T, B> {
    Abs(B),
    AppFun,
    AppArg(T),
}

/// Shared prefix-grammar driver. `binder` reads the token after `L` (if the
/// grammar has one) and `leaf` turns a token into a complete term given the
/// current abstraction depth.
fn parse_prefix<T, B>(
    text: &str,
    mut binder: impl FnMut(&mut dyn Iterator<Item = (usize, &str)>) -> Result<B, ParseError>,
    mut leaf: impl FnMut(&str, usize, u32) -> Result<T, ParseError>,
    mk_abs: impl Fn(B, T) -> T,
    mk_app: impl Fn(T, T) -> T,
) -> Result<T, ParseError> {
    let mut tokens = text.split_ascii_whitespace().enumerate();
    let mut stack: Vec<Frame<T, B>> = Vec::new();
    let mut depth = 0u32;
    loop {
        let Some((pos, tok)) = tokens.next() else {
            let len = text.split_ascii_whitespace().count();
            return Err(ParseError::at(ParseErrorKind::TruncatedTerm, len));
        };
        let mut done = match tok {
            "L" => {
                let b = binder(&mut tokens)?;
                stack.push(Frame::Abs(b));
                depth += 1;
                continue;
            }
            "@" => {
                stack.push(Frame::AppFun);
                continue;
            }
            _ => leaf(tok, pos, depth)?,
        };
        loop {
            match stack.pop() {
                None => {
                    return match tokens.next() {
                        None => Ok(done),
                        Some((pos, tok)) => Err(ParseError::at(
                            ParseErrorKind::TrailingTokens(tok.to_string()),
                            pos,
                        )),
                    };
                }
                Some(Frame::Abs(b)) => {
                    depth -= 1;
                    done = mk_abs(b, done);
                }
                Some(Frame::AppFun) => {
                    stack.push(Frame::AppArg(done));
                    break;
                }
                Some(Frame::AppArg(fun)) => done = mk_app(fun, done),
            }
        }
    }
}

pub fn parse_traditional(text: &str) -> Result<Term, ParseError> {
    parse_prefix(
        text,
        |tokens| match tokens.next() {
            Some((pos, tok)) => VarName::new(tok).ok_or_else(|| {
                ParseError::at(ParseErrorKind::MalformedBinder(tok.to_string()), pos)
            }),
            None => Err(ParseError::at(
                ParseErrorKind::TruncatedTerm,
                text.split_ascii_whitespace().count(),
            )),
        },
        |tok, pos, _| {
            VarName::new(tok)
                .map(Term::Var)
                .ok_or_else(|| ParseError::at(ParseErrorKind::InvalidToken(tok.to_string()), pos))
        },
        Term::abs,
        Term::app,
    )
}

pub fn parse_debruijn(text: &str) -> Result<DbTerm, ParseError> {
    parse_prefix(
        text,
        |_| Ok(()),
        |tok, pos, depth| {
            let index = parse_index(tok)
                .ok_or_else(|| ParseError::at(ParseErrorKind::InvalidToken(tok.to_string()), pos))?;
            if index > depth {
                return Err(ParseError::at(
                    ParseErrorKind::IndexOutOfScope { index, depth },
                    pos,
                ));
            }
            Ok(DbTerm::Var(index))
        },
        |(), body| DbTerm::abs(body),
        DbTerm::app,
    )
}

fn parse_index(tok: &str) -> Option<u32> {
    if tok.is_empty() || !tok.bytes().all(|b| b.is_ascii_digit()) {
        return None;
    }
    tok.parse().ok()
}

impl FromStr for Term {
    type Err = ParseError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        parse_traditional(s)
    }
}

impl FromStr for DbTerm {
    type Err = ParseError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        parse_debruijn(s)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::string::ToString;

    fn kind(r: Result<Term, ParseError>) -> ParseErrorKind {
        r.unwrap_err().kind
    }

    #[test]
    fn parses_examples() {
        let id = parse_traditional("L x x").unwrap();
        assert!(matches!(&id, Term::Abs(x, b) if x.as_str() == "x" && matches!(&**b, Term::Var(y) if y.as_str() == "x")));
        let t = parse_traditional("@ L x x y").unwrap();
        assert!(t.is_redex());
        let omega = parse_traditional("@ L x @ x x L x @ x x").unwrap();
        let half = parse_traditional("L x @ x x").unwrap();
        assert_eq!(omega, Term::app(half.clone(), half));
    }

    #[test]
    fn parses_debruijn_examples() {
        let t = parse_debruijn("L L 2").unwrap();
        assert_eq!(t, DbTerm::abs(DbTerm::abs(DbTerm::Var(2))));
        let f = parse_debruijn("L L 1").unwrap();
        assert_eq!(f, DbTerm::abs(DbTerm::abs(DbTerm::Var(1))));
        assert_eq!(
            parse_debruijn("L 3").unwrap_err(),
            ParseError { kind: ParseErrorKind::IndexOutOfScope { index: 3, depth: 1 }, position: 1 }
        );
        assert_eq!(parse_debruijn("@ 0 0").unwrap().to_string(), "@ 0 0");
        // index bound only inside its own abstraction
        assert!(matches!(
            parse_debruijn("@ L 1 1").unwrap_err().kind,
            ParseErrorKind::IndexOutOfScope { index: 1, depth: 0 }
        ));
    }

    #[test]
    fn errors() {
        assert_eq!(kind(parse_traditional("")), ParseErrorKind::TruncatedTerm);
        assert_eq!(kind(parse_traditional("@ x")), ParseErrorKind::TruncatedTerm);
        assert_eq!(kind(parse_traditional("L")), ParseErrorKind::TruncatedTerm);
        assert_eq!(kind(parse_traditional("L x")), ParseErrorKind::TruncatedTerm);
        assert_eq!(
            parse_traditional("x y").unwrap_err(),
            ParseError { kind: ParseErrorKind::TrailingTokens("y".into()), position: 1 }
        );
        assert_eq!(
            parse_traditional("@ x 3").unwrap_err(),
            ParseError { kind: ParseErrorKind::InvalidToken("3".into()), position: 2 }
        );
        assert_eq!(kind(parse_traditional("L @ x")), ParseErrorKind::MalformedBinder("@".into()));
        assert_eq!(kind(parse_traditional("L L x")), ParseErrorKind::MalformedBinder("L".into()));
        assert_eq!(kind_db("L x"), ParseErrorKind::InvalidToken("x".into()));
        assert_eq!(kind_db("L -1"), ParseErrorKind::InvalidToken("-1".into()));
        assert_eq!(kind_db("1 0"), ParseErrorKind::IndexOutOfScope { index: 1, depth: 0 });
        assert_eq!(kind_db("0 0"), ParseErrorKind::TrailingTokens("0".into()));
    }

    fn kind_db(s: &str) -> ParseErrorKind {
        parse_debruijn(s).unwrap_err().kind
    }

    #[test]
    fn error_messages_carry_position() {
        let e = parse_traditional("@ x 3").unwrap_err();
        assert_eq!(e.to_string(), "invalid token `3` at token 2");
        let e = parse_traditional("@ x").unwrap_err();
        assert_eq!(e.to_string(), "term ends before it is complete at token 2");
    }

    #[test]
    fn whitespace_is_normalized_by_printing() {
        let t = parse_traditional("  @   L x x\ty ").unwrap();
        assert_eq!(t.to_string(), "@ L x x y");
    }

    #[test]
    fn deep_input_does_not_overflow() {
        let mut s = String::new();
        for _ in 0..10_000 {
            s.push_str("L ");
        }
        s.push('1');
        let t = parse_debruijn(&s).unwrap();
        assert_eq!(t.token_count(), 10_001);
    }
}
