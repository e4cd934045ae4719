//! Uniform sampling of unary-binary trees with a fixed number of internal
//! nodes.
//!
//! `D(e, n)` counts the ways to complete a partial tree with `e` empty slots
//! and `n` internal nodes still to place, given `p1` unary and `p2` binary
//! operator symbols:
//!
//! ```text
//! D(0, n) = 0   (n > 0)
//! D(e, 0) = 1
//! D(e, n) = D(e - 1, n) + p1 D(e, n - 1) + p2 D(e + 1, n - 1)
//! ```
//!
//! Slots are filled in pre-order: each step turns the next `k` slots into
//! leaves and the following one into an operator of arity `a`, with
//! probability `p_a D(e - k - 1 + a, n - 1) / D(e, n)`.

use alloc::vec::Vec;

use rand::Rng;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Node {
    Leaf,
    Unary,
    Binary,
}

#[derive(Clone, Debug)]
pub struct TreeSampler {
    unary: f64,
    binary: f64,
    max_internal: usize,
    // counts[n][e]
    counts: Vec<Vec<f64>>,
}

impl TreeSampler {
    pub fn new(unary_ops: u32, binary_ops: u32, max_internal: usize) -> Self {
        let unary = f64::from(unary_ops);
        let binary = f64::from(binary_ops);
        let width = 2 * max_internal + 3;
        let mut counts = alloc::vec![alloc::vec![0.0; width + max_internal + 1]; max_internal + 1];
        counts[0].iter_mut().for_each(|c| *c = 1.0);
        for n in 1..=max_internal {
            // level n needs e + 1 at level n - 1, so each level is one shorter
            let len = counts[n].len() - n;
            for e in 1..len {
                counts[n][e] =
                    counts[n][e - 1] + unary * counts[n - 1][e] + binary * counts[n - 1][e + 1];
            }
        }
        TreeSampler { unary, binary, max_internal, counts }
    }

    pub fn max_internal(&self) -> usize {
        self.max_internal
    }

    /// Number of distinct trees (operator labels included) completing `empty`
    /// slots with `internal` nodes.
    pub fn count(&self, empty: usize, internal: usize) -> f64 {
        self.counts[internal][empty]
    }

    /// A uniformly random tree with exactly `internal` internal nodes, as its
    /// pre-order node sequence.
    pub fn sample<R: Rng + ?Sized>(&self, rng: &mut R, internal: usize) -> Vec<Node> {
        assert!(internal <= self.max_internal, "tree larger than the sampler table");
        let mut out = Vec::with_capacity(3 * internal + 1);
        let mut empty = 1usize;
        let mut n = internal;
        while n > 0 {
            let total = self.count(empty, n);
            let mut u = rng.random::<f64>() * total;
            let mut choice = None;
            'search: for k in 0..empty {
                for (node, weight) in [
                    (Node::Unary, self.unary * self.count(empty - k, n - 1)),
                    (Node::Binary, self.binary * self.count(empty - k + 1, n - 1)),
                ] {
                    if weight <= 0.0 {
                        continue;
                    }
                    choice = Some((k, node));
                    if u < weight {
                        break 'search;
                    }
                    u -= weight;
                }
            }
            // rounding can leave u just past the last weight; keep the last valid choice
            let (k, node) = choice.expect("a tree with internal nodes always has a valid step");
            out.extend(core::iter::repeat_n(Node::Leaf, k));
            out.push(node);
            empty = empty - k - 1 + if node == Node::Unary { 1 } else { 2 };
            n -= 1;
        }
        out.extend(core::iter::repeat_n(Node::Leaf, empty));
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::collections::BTreeMap;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    // Trees with exactly n internal nodes, counted by splitting at the root.
    fn brute_count(n: usize, unary: u32, binary: u32) -> u64 {
        if n == 0 {
            return 1;
        }
        let mut total = u64::from(unary) * brute_count(n - 1, unary, binary);
        for left in 0..n {
            total += u64::from(binary) * brute_count(left, unary, binary) * brute_count(n - 1 - left, unary, binary);
        }
        total
    }

    #[test]
    fn counts_match_recursive_enumeration() {
        let s = TreeSampler::new(1, 1, 8);
        for n in 0..=8 {
            assert_eq!(s.count(1, n), brute_count(n, 1, 1) as f64, "n = {n}");
        }
        let s = TreeSampler::new(1, 2, 5);
        for n in 0..=5 {
            assert_eq!(s.count(1, n), brute_count(n, 1, 2) as f64, "n = {n}");
        }
    }

    fn is_complete(nodes: &[Node]) -> bool {
        let mut open = 1i64;
        for (i, n) in nodes.iter().enumerate() {
            open += match n {
                Node::Leaf => -1,
                Node::Unary => 0,
                Node::Binary => 1,
            };
            if open == 0 {
                return i + 1 == nodes.len();
            }
        }
        false
    }

    #[test]
    fn samples_are_complete_trees_of_the_requested_size() {
        let s = TreeSampler::new(1, 1, 124);
        let mut rng = ChaCha8Rng::seed_from_u64(3);
        for n in [0, 1, 2, 7, 60, 124] {
            let nodes = s.sample(&mut rng, n);
            assert!(is_complete(&nodes));
            assert_eq!(nodes.iter().filter(|x| **x != Node::Leaf).count(), n);
        }
    }

    #[test]
    fn small_trees_are_uniform() {
        // one unary and one binary symbol: 6 trees with 2 internal nodes
        let s = TreeSampler::new(1, 1, 2);
        let mut rng = ChaCha8Rng::seed_from_u64(11);
        let mut seen: BTreeMap<Vec<u8>, usize> = BTreeMap::new();
        let draws = 50_000;
        for _ in 0..draws {
            let key = s.sample(&mut rng, 2).iter().map(|n| *n as u8).collect();
            *seen.entry(key).or_default() += 1;
        }
        assert_eq!(seen.len(), 6);
        for count in seen.values() {
            let share = *count as f64 / draws as f64;
            assert!((share - 1.0 / 6.0).abs() < 0.01, "share {share}");
        }
    }
}
