use alloc::vec::Vec;

use rand::Rng;

use super::tree::{Node, TreeSampler};
use crate::encodings::BoolExpr;
use crate::term::{DbTerm, VarName};

/// Random de Bruijn terms: abstractions are unary nodes, applications binary
/// nodes, variables leaves.
///
/// A tree with `n` internal nodes always renders to `2n + 1` named tokens, so
/// `n` is drawn uniformly from `0..=(max_tokens - 1) / 2` and no sample ever
/// exceeds the cap.
#[derive(Clone, Debug)]
pub struct RandomTermGen {
    sampler: TreeSampler,
    p_free: f64,
}

impl RandomTermGen {
    pub fn new(max_tokens: usize, p_free: f64) -> Self {
        assert!(max_tokens >= 1, "a term has at least one token");
        RandomTermGen {
            sampler: TreeSampler::new(1, 1, (max_tokens - 1) / 2),
            p_free,
        }
    }

    pub fn sample<R: Rng + ?Sized>(&self, rng: &mut R) -> DbTerm {
        let n = rng.random_range(0..=self.sampler.max_internal());
        self.sample_with_internal(rng, n)
    }

    pub fn sample_with_internal<R: Rng + ?Sized>(&self, rng: &mut R, internal: usize) -> DbTerm {
        let shape = self.sampler.sample(rng, internal);
        let mut nodes = shape.into_iter();
        self.build(&mut nodes, 0, rng)
    }

    fn build<R: Rng + ?Sized>(&self, nodes: &mut impl Iterator<Item = Node>, depth: u32, rng: &mut R) -> DbTerm {
        match nodes.next().expect("complete tree") {
            Node::Leaf => {
                if depth == 0 || rng.random_bool(self.p_free) {
                    DbTerm::Var(0)
                } else {
                    DbTerm::Var(rng.random_range(1..=depth))
                }
            }
            Node::Unary => DbTerm::abs(self.build(nodes, depth + 1, rng)),
            Node::Binary => {
                let fun = self.build(nodes, depth, rng);
                DbTerm::app(fun, self.build(nodes, depth, rng))
            }
        }
    }
}

pub fn gen_random_term<R: Rng + ?Sized>(rng: &mut R, max_tokens: usize, p_free: f64) -> DbTerm {
    RandomTermGen::new(max_tokens, p_free).sample(rng)
}

/// Random boolean expressions over `not`, `and`, `or`.
///
/// The number of internal nodes is uniform on `1..=max_internal` (just `0`
/// when the cap is 0) and the tree uniform among labelled trees of that size.
/// Leaves are `true`/`false`, plus free variables when `open`; an open
/// expression always has at least one free variable, each with a distinct
/// name.
#[derive(Clone, Debug)]
pub struct BoolExprGen {
    sampler: TreeSampler,
    open: bool,
}

#[derive(Clone, Copy)]
enum Leaf {
    True,
    False,
    Var,
}

impl BoolExprGen {
    pub fn new(max_internal: usize, open: bool) -> Self {
        BoolExprGen { sampler: TreeSampler::new(1, 2, max_internal), open }
    }

    pub fn sample<R: Rng + ?Sized>(&self, rng: &mut R) -> BoolExpr {
        let max = self.sampler.max_internal();
        let n = rng.random_range(max.min(1)..=max);
        let shape = self.sampler.sample(rng, n);
        let leaf_count = shape.iter().filter(|n| **n == Node::Leaf).count();
        let leaves = loop {
            let leaves: Vec<Leaf> = (0..leaf_count)
                .map(|_| match rng.random_range(0..if self.open { 3 } else { 2 }) {
                    0 => Leaf::True,
                    1 => Leaf::False,
                    _ => Leaf::Var,
                })
                .collect();
            if !self.open || leaves.iter().any(|l| matches!(l, Leaf::Var)) {
                break leaves;
            }
        };
        let mut nodes = shape.into_iter();
        let mut leaves = leaves.into_iter();
        let mut vars = 0;
        build_bool(&mut nodes, &mut leaves, &mut vars, rng)
    }
}

fn build_bool<R: Rng + ?Sized>(
    nodes: &mut impl Iterator<Item = Node>,
    leaves: &mut impl Iterator<Item = Leaf>,
    vars: &mut usize,
    rng: &mut R,
) -> BoolExpr {
    match nodes.next().expect("complete tree") {
        Node::Leaf => match leaves.next().expect("one label per leaf") {
            Leaf::True => BoolExpr::ConstTrue,
            Leaf::False => BoolExpr::ConstFalse,
            Leaf::Var => {
                // x, y, z, a1, b1, ...
                let name = VarName::nth(23 + *vars);
                *vars += 1;
                BoolExpr::FreeVar(name)
            }
        },
        Node::Unary => BoolExpr::not(build_bool(nodes, leaves, vars, rng)),
        Node::Binary => {
            let is_and = rng.random_bool(0.5);
            let l = build_bool(nodes, leaves, vars, rng);
            let r = build_bool(nodes, leaves, vars, rng);
            if is_and {
                BoolExpr::and(l, r)
            } else {
                BoolExpr::or(l, r)
            }
        }
    }
}

pub fn gen_bool_expr<R: Rng + ?Sized>(rng: &mut R, max_internal: usize, open: bool) -> BoolExpr {
    BoolExprGen::new(max_internal, open).sample(rng)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::syntax::parse_debruijn;
    use alloc::string::ToString;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    #[test]
    fn smallest_random_term_is_a_free_variable() {
        let g = RandomTermGen::new(3, 0.25);
        let mut rng = ChaCha8Rng::seed_from_u64(0);
        assert_eq!(g.sample_with_internal(&mut rng, 0).to_string(), "0");
    }

    #[test]
    fn random_terms_respect_the_cap_and_reparse() {
        let g = RandomTermGen::new(250, 0.25);
        let mut rng = ChaCha8Rng::seed_from_u64(1);
        for _ in 0..500 {
            let t = g.sample(&mut rng);
            assert!(t.named_token_count() <= 250);
            assert!(t.named_token_count() % 2 == 1);
            assert!(t.is_well_scoped());
            assert_eq!(parse_debruijn(&t.to_string()).unwrap(), t);
        }
    }

    #[test]
    fn random_terms_are_deterministic() {
        let a = gen_random_term(&mut ChaCha8Rng::seed_from_u64(42), 250, 0.25);
        let b = gen_random_term(&mut ChaCha8Rng::seed_from_u64(42), 250, 0.25);
        assert_eq!(a, b);
    }

    #[test]
    fn p_free_extremes() {
        let mut rng = ChaCha8Rng::seed_from_u64(5);
        let closed = RandomTermGen::new(101, 0.0);
        let open = RandomTermGen::new(101, 1.0);
        for _ in 0..100 {
            let t = closed.sample_with_internal(&mut rng, 50);
            if let DbTerm::Abs(_) = t {
                assert!(t.is_closed());
            }
            let t = open.sample_with_internal(&mut rng, 50);
            assert!(t.to_string().split(' ').all(|tok| matches!(tok, "L" | "@" | "0")));
        }
    }

    #[test]
    fn bool_exprs() {
        let mut rng = ChaCha8Rng::seed_from_u64(9);
        for _ in 0..50 {
            let e = gen_bool_expr(&mut rng, 0, false);
            assert!(matches!(e, BoolExpr::ConstTrue | BoolExpr::ConstFalse));
            let e = gen_bool_expr(&mut rng, 0, true);
            assert!(matches!(e, BoolExpr::FreeVar(_)));
        }
        let closed = BoolExprGen::new(5, false);
        let open = BoolExprGen::new(5, true);
        for _ in 0..1000 {
            let e = closed.sample(&mut rng);
            assert!((1..=5).contains(&e.internal_nodes()));
            assert!(e.free_variables().is_empty());
            let e = open.sample(&mut rng);
            assert!(e.internal_nodes() <= 5);
            assert!(!e.free_variables().is_empty());
        }
    }
}
