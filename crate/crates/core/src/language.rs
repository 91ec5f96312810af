//! Admissible words, suffix statistics and enumeration.
//!
//! A word `w_1..w_n` is admissible when every suffix `w_k..w_n` lies between
//! the equal-length prefixes of `a` and `b` in lexicographic order.

use std::cmp::Ordering;

use num_bigint::BigUint;
use num_traits::{One, Zero};
use serde::Serialize;

use crate::error::{Error, Result};
use crate::expansion::{AbShift, Bounds};
use crate::graph::{LabeledGraph, Vertex};
use crate::word::{Digit, Word};

/// Lexicographic comparison of the first `len` digits of `x` and `y`.
///
/// Panics if either slice is shorter than `len`.
pub fn lex_compare(x: &[Digit], y: &[Digit], len: usize) -> Ordering {
    x[..len].cmp(&y[..len])
}

/// Which boundary the longest matching suffix belongs to.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub enum SuffixTag {
    /// Neither `a` nor `b` has a nonempty prefix that is a suffix of the word.
    #[serde(rename = "eps")]
    Empty,
    /// The longest matching suffix is an `a`-prefix.
    #[serde(rename = "a")]
    A,
    /// The longest matching suffix is a `b`-prefix.
    #[serde(rename = "b")]
    B,
}

/// `w = head ++ suffix` where `suffix` is the longest suffix of `w` that is a
/// prefix of `a` or `b`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SuffixDecomposition {
    pub head: Word,
    pub suffix: Word,
    pub tag: SuffixTag,
    pub k1: usize,
    pub k2: usize,
}

impl Bounds {
    /// Admissibility test; `self` must hold at least `w.len()` digits.
    pub fn is_admissible(&self, w: &[Digit]) -> bool {
        let n = w.len();
        (0..n).all(|k| {
            let tail = &w[k..];
            let m = n - k;
            tail >= &self.a[..m] && tail <= &self.b[..m]
        })
    }

    /// Length of the longest suffix of `w` that is a prefix of `seq`.
    fn longest_suffix_prefix(seq: &[Digit], w: &[Digit]) -> usize {
        let n = w.len();
        (1..=n).rev().find(|&k| w[n - k..] == seq[..k]).unwrap_or(0)
    }

    /// `(k1, k2)`: longest suffixes of `w` that are prefixes of `a` and `b`.
    pub fn k_values(&self, w: &[Digit]) -> (usize, usize) {
        (
            Self::longest_suffix_prefix(&self.a, w),
            Self::longest_suffix_prefix(&self.b, w),
        )
    }

    pub fn decompose(&self, w: &[Digit]) -> SuffixDecomposition {
        let (k1, k2) = self.k_values(w);
        let (tag, k) = match k1.cmp(&k2) {
            Ordering::Greater => (SuffixTag::A, k1),
            Ordering::Less => (SuffixTag::B, k2),
            Ordering::Equal => {
                debug_assert_eq!(k1, 0, "a and b prefixes cannot coincide");
                (SuffixTag::Empty, 0)
            }
        };
        let split = w.len() - k;
        SuffixDecomposition {
            head: Word::from(&w[..split]),
            suffix: Word::from(&w[split..]),
            tag,
            k1,
            k2,
        }
    }
}

/// Is `w` in the language of the shift? Digits above `lambda` are an error.
pub fn is_admissible(shift: &AbShift, w: &[Digit]) -> Result<bool> {
    shift.params().check_word(w)?;
    Ok(shift.bounds(w.len()).is_admissible(w))
}

pub fn k_values(shift: &AbShift, w: &[Digit]) -> Result<(usize, usize)> {
    shift.params().check_word(w)?;
    Ok(shift.bounds(w.len()).k_values(w))
}

/// Splits an admissible word into head and maximal boundary suffix.
pub fn suffix_decompose(shift: &AbShift, w: &[Digit]) -> Result<SuffixDecomposition> {
    let bounds = admissible_bounds(shift, w)?;
    Ok(bounds.decompose(w))
}

/// The graph vertex `[k1(w), k2(w)]` reached by reading `w` from `[0, 0]`.
pub fn follower_vertex(shift: &AbShift, w: &[Digit]) -> Result<Vertex> {
    let bounds = admissible_bounds(shift, w)?;
    let (k1, k2) = bounds.k_values(w);
    Ok(Vertex::new(k1 as u32, k2 as u32))
}

pub(crate) fn admissible_bounds(shift: &AbShift, w: &[Digit]) -> Result<Bounds> {
    shift.params().check_word(w)?;
    let bounds = shift.bounds(w.len() + 1);
    if bounds.is_admissible(w) {
        Ok(bounds)
    } else {
        Err(Error::Inadmissible(Word::from(w)))
    }
}

/// Iterator over the admissible words of a fixed length, in lexicographic
/// order. Walks the follower graph depth first, so only admissible prefixes
/// are ever visited.
pub struct Words {
    graph: LabeledGraph,
    len: usize,
    word: Vec<Digit>,
    states: Vec<u32>,
    next_label: Vec<u16>,
    done: bool,
}

impl Iterator for Words {
    type Item = Word;

    fn next(&mut self) -> Option<Word> {
        if self.done {
            return None;
        }
        loop {
            if self.word.len() == self.len {
                let out = Word::from(&self.word[..]);
                self.backtrack();
                return Some(out);
            }
            let depth = self.word.len();
            let cur = self.states[depth];
            let mut advanced = false;
            while self.next_label[depth] <= self.graph.lambda() as u16 {
                let c = self.next_label[depth] as Digit;
                self.next_label[depth] += 1;
                if let Some(t) = self.graph.target(cur, c) {
                    self.word.push(c);
                    self.states.push(t);
                    self.next_label.push(0);
                    advanced = true;
                    break;
                }
            }
            if !advanced && !self.backtrack() {
                return None;
            }
        }
    }
}

impl Words {
    /// Pops one level; returns `false` once the root is exhausted.
    fn backtrack(&mut self) -> bool {
        if self.word.is_empty() {
            self.done = true;
            return false;
        }
        self.word.pop();
        self.states.pop();
        self.next_label.pop();
        true
    }
}

/// All admissible words of length `n`, lexicographically increasing.
pub fn enumerate(shift: &AbShift, n: usize) -> Words {
    Words {
        graph: LabeledGraph::build(shift, n),
        len: n,
        word: Vec::with_capacity(n),
        states: vec![0],
        next_label: vec![0],
        done: false,
    }
}

/// Calls `f` on every admissible word of length `n` together with its
/// follower vertex, without allocating per word.
pub fn for_each_word<F: FnMut(&[Digit], Vertex)>(shift: &AbShift, n: usize, mut f: F) {
    let graph = LabeledGraph::build(shift, n);
    graph
        .for_each_path(n, |w, id| f(w, graph.vertex(id)))
        .expect("graph built to the requested depth");
}

/// `|L_n|`, by dynamic programming over the follower graph.
pub fn count(shift: &AbShift, n: usize) -> BigUint {
    let graph = LabeledGraph::build(shift, n);
    count_in(&graph, n)
}

pub(crate) fn count_in(graph: &LabeledGraph, n: usize) -> BigUint {
    let v = graph.vertex_count();
    let mut cur = vec![BigUint::zero(); v];
    cur[0] = BigUint::one();
    for _ in 0..n {
        let mut next = vec![BigUint::zero(); v];
        for (id, c) in cur.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            for d in 0..=graph.lambda() {
                if let Some(t) = graph.target(id as u32, d) {
                    next[t as usize] += c;
                }
            }
        }
        cur = next;
    }
    cur.into_iter().sum()
}
