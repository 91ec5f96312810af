//! Partition sums over padded configurations.
//!
//! Every sum here ranges over admissible words `w` of some length `m`, each
//! turned into the configuration `w` placed on `[1, m]`, `g(w)` at `m + 1`
//! and 1 elsewhere, weighted by `exp sum_{j=1}^{m} phi(sigma^j x)`. The
//! exponent reads coordinates `2 ..= m + r`: the core without its first
//! digit, then `g(w)`, then fill.
//!
//! The sums are evaluated by a transfer recursion over states
//! `(graph vertex, last r-1 digits)`; `g(w)` depends only on the final vertex.

use num_bigint::BigUint;
use num_traits::{One, Zero};

use crate::expansion::{AbShift, Bounds};
use crate::graph::LabeledGraph;
use crate::thermo::configuration::FILL;
use crate::thermo::potential::Potential;
use crate::word::Digit;

/// Restrictions on the words summed over.
#[derive(Clone, Copy, Debug, Default)]
pub(crate) struct Constraints<'a> {
    /// `(p, v)`: digits `p ..= p + |v| - 1` (1-based) must spell `v`.
    pub fixed: Option<(usize, &'a [Digit])>,
    /// The graph vertex after the first `p` digits must be the origin.
    pub origin_after: Option<usize>,
    /// The final vertex must be the origin.
    pub final_origin: bool,
}

pub(crate) trait Semiring: Clone {
    fn zero() -> Self;
    fn one() -> Self;
    fn is_zero(&self) -> bool;
    fn plus(&mut self, other: &Self);
    fn times(&self, term: f64) -> Self;
}

/// Log-domain weight `ln w`, with `-inf` for the empty sum.
#[derive(Clone, Copy, Debug, PartialEq)]
pub(crate) struct LogWeight(pub f64);

impl Semiring for LogWeight {
    fn zero() -> Self {
        LogWeight(f64::NEG_INFINITY)
    }
    fn one() -> Self {
        LogWeight(0.0)
    }
    fn is_zero(&self) -> bool {
        self.0 == f64::NEG_INFINITY
    }
    fn plus(&mut self, other: &Self) {
        self.0 = log_add(self.0, other.0);
    }
    fn times(&self, term: f64) -> Self {
        LogWeight(self.0 + term)
    }
}

/// Plain word count; the potential is ignored.
#[derive(Clone, Debug, PartialEq)]
pub(crate) struct Count(pub BigUint);

impl Semiring for Count {
    fn zero() -> Self {
        Count(BigUint::zero())
    }
    fn one() -> Self {
        Count(BigUint::one())
    }
    fn is_zero(&self) -> bool {
        self.0.is_zero()
    }
    fn plus(&mut self, other: &Self) {
        self.0 += &other.0;
    }
    fn times(&self, _term: f64) -> Self {
        self.clone()
    }
}

/// `ln(e^a + e^b)` without overflow.
pub fn log_add(a: f64, b: f64) -> f64 {
    let (hi, lo) = if a >= b { (a, b) } else { (b, a) };
    if lo == f64::NEG_INFINITY {
        hi
    } else {
        hi + (lo - hi).exp().ln_1p()
    }
}

/// `ln sum_i e^{x_i}`.
pub fn log_sum_exp(xs: impl IntoIterator<Item = f64>) -> f64 {
    xs.into_iter().fold(f64::NEG_INFINITY, log_add)
}

/// Everything the recursion needs for words of length `m`.
pub(crate) struct Engine<'a> {
    pub bounds: Bounds,
    pub graph: LabeledGraph,
    pub phi: &'a Potential,
    pub m: usize,
}

impl<'a> Engine<'a> {
    pub fn new(shift: &AbShift, phi: &'a Potential, m: usize) -> Self {
        let bounds = shift.bounds(m + 2);
        let graph = LabeledGraph::from_bounds(&bounds, m);
        Engine {
            bounds,
            graph,
            phi,
            m,
        }
    }

    fn g_of(&self, vid: u32) -> Digit {
        let v = self.graph.vertex(vid);
        if v.j == 0 && v.k > 0 && self.bounds.b(v.k as usize + 1) <= 1 {
            0
        } else {
            1
        }
    }

    /// Terms that read past the last core digit, given the packed history of
    /// the last `min(m, r-1)` digits and the extension letter.
    fn tail(&self, hist: usize, g: Digit) -> f64 {
        let r = self.phi.range();
        let m = self.m;
        let base = self.phi.lambda() as usize + 1;
        let h = m.min(r - 1);
        let mut seq = vec![0 as Digit; h];
        let mut x = hist;
        for slot in seq.iter_mut().rev() {
            *slot = (x % base) as Digit;
            x /= base;
        }
        seq.push(g);
        seq.extend(std::iter::repeat_n(FILL, r));
        // position p of the configuration sits at seq[p - (m - h + 1)]
        let first = (m + 1).saturating_sub(r).max(1);
        (first..=m)
            .map(|q| {
                let lo = q + 1 - (m - h + 1);
                self.phi.eval(&seq[lo..lo + r])
            })
            .sum()
    }

    pub fn run<S: Semiring>(&self, c: Constraints<'_>) -> S {
        let r = self.phi.range();
        let base = self.phi.lambda() as usize + 1;
        let hsize = base.pow((r - 1) as u32);
        let nv = self.graph.vertex_count();
        let mut cur: Vec<S> = vec![S::zero(); nv * hsize];
        cur[0] = S::one();
        for p in 1..=self.m {
            let mut next: Vec<S> = vec![S::zero(); nv * hsize];
            let forced = c
                .fixed
                .and_then(|(start, v)| (p >= start && p < start + v.len()).then(|| v[p - start]));
            for (idx, w) in cur.iter().enumerate() {
                if w.is_zero() {
                    continue;
                }
                let vid = (idx / hsize) as u32;
                let hist = idx % hsize;
                let labels = match forced {
                    Some(d) => d..=d,
                    None => 0..=self.graph.lambda(),
                };
                for d in labels {
                    let Some(t) = self.graph.target(vid, d) else {
                        continue;
                    };
                    let key = hist * base + d as usize;
                    let nw = if p > r {
                        w.times(self.phi.eval_key(key))
                    } else {
                        w.clone()
                    };
                    next[t as usize * hsize + key % hsize].plus(&nw);
                }
            }
            if c.origin_after == Some(p) {
                for s in next.iter_mut().skip(hsize) {
                    *s = S::zero();
                }
            }
            cur = next;
        }
        let mut tails = [vec![f64::NAN; hsize], vec![f64::NAN; hsize]];
        let mut total = S::zero();
        for (idx, w) in cur.iter().enumerate() {
            if w.is_zero() {
                continue;
            }
            let vid = (idx / hsize) as u32;
            if c.final_origin && vid != 0 {
                continue;
            }
            let hist = idx % hsize;
            let g = self.g_of(vid);
            let slot = &mut tails[g as usize][hist];
            if slot.is_nan() {
                *slot = self.tail(hist, g);
            }
            total.plus(&w.times(*slot));
        }
        total
    }

    pub fn log_sum(&self, c: Constraints<'_>) -> f64 {
        self.run::<LogWeight>(c).0
    }

    pub fn count(&self, c: Constraints<'_>) -> BigUint {
        self.run::<Count>(c).0
    }
}
