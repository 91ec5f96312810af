//! Word surgery in the reciprocal family `alpha = 1/beta`, `beta > 3`.
//!
//! `hat` rewrites the maximal boundary suffix of a word so the result ends at
//! the graph origin (or, for `a`-suffixes, at worst in a `b`-suffix); `tilde`
//! applies it twice. `g` is the one-digit extension that lets a word padded
//! with 1s on both sides live in the two-sided shift.
//!
//! The `check_suite` runs every structural property of these maps
//! exhaustively over `L_n` and reports counterexamples.

use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};
use rayon::prelude::*;
use serde::Serialize;

use crate::criterion;
use crate::error::{Error, Result};
use crate::expansion::{AbShift, Bounds};
use crate::graph::{LabeledGraph, Vertex};
use crate::language::{self, SuffixTag};
use crate::thermo::configuration::{padded_word, Configuration};
use crate::word::{hamming, Digit, Word};

/// Declared kind of a boundary prefix: empty, `a`-prefix or `b`-prefix.
pub type PrefixKind = SuffixTag;

/// Class of a word by its maximal boundary suffix.
pub type ClassTag = SuffixTag;

impl Bounds {
    /// Rewrites a boundary prefix of the declared kind. No validation beyond
    /// the index check of the short-digit `b` case.
    pub(crate) fn hat_prefix_raw(&self, u: &[Digit], kind: PrefixKind) -> Result<Vec<Digit>> {
        let l = u.len();
        let mut v = u.to_vec();
        match kind {
            SuffixTag::Empty => {}
            SuffixTag::A => v[l - 1] += 1,
            SuffixTag::B if u[l - 1] >= 3 => v[l - 1] -= 1,
            SuffixTag::B => {
                let (k, _) = self.k_values(&u[..l - 1]);
                if l < k + 2 || u[l - k - 2] == 0 {
                    return Err(Error::Invariant(format!(
                        "b-prefix {} has no room for the two-digit rewrite",
                        Word::from(u)
                    )));
                }
                // 1-based positions l-k-1 and l-k
                v[l - k - 2] -= 1;
                v[l - k - 1] = self.lambda - 1;
            }
        }
        Ok(v)
    }

    pub(crate) fn hat_raw(&self, w: &[Digit]) -> Result<Vec<Digit>> {
        let (k1, k2) = self.k_values(w);
        let (kind, k) = if k1 > k2 {
            (SuffixTag::A, k1)
        } else if k2 > k1 {
            (SuffixTag::B, k2)
        } else {
            return Ok(w.to_vec());
        };
        let split = w.len() - k;
        let mut out = w[..split].to_vec();
        out.extend(self.hat_prefix_raw(&w[split..], kind)?);
        Ok(out)
    }

    pub(crate) fn tilde_raw(&self, w: &[Digit]) -> Result<Vec<Digit>> {
        self.hat_raw(&self.hat_raw(w)?)
    }

    pub(crate) fn class_raw(&self, w: &[Digit]) -> ClassTag {
        let (k1, k2) = self.k_values(w);
        match k1.cmp(&k2) {
            std::cmp::Ordering::Greater => SuffixTag::A,
            std::cmp::Ordering::Less => SuffixTag::B,
            std::cmp::Ordering::Equal => SuffixTag::Empty,
        }
    }

    /// Needs `w.len() + 1` digits.
    pub(crate) fn g_raw(&self, w: &[Digit]) -> Digit {
        let (k1, k2) = self.k_values(w);
        if k1 == 0 && k2 > 0 && self.b(k2 + 1) <= 1 {
            0
        } else {
            1
        }
    }
}

fn main_mode_bounds(shift: &AbShift, w: &[Digit], extra: usize) -> Result<Bounds> {
    shift.params().require_main_mode()?;
    shift.params().check_word(w)?;
    Ok(shift.bounds(w.len() + extra))
}

/// `u-hat` for a boundary prefix `u` of the declared kind.
pub fn hat_prefix(shift: &AbShift, u: &[Digit], kind: PrefixKind) -> Result<Word> {
    let bounds = main_mode_bounds(shift, u, 1)?;
    let (seq, which) = match kind {
        SuffixTag::Empty => (&[][..], "empty"),
        SuffixTag::A => (bounds.a_prefix(u.len()), "a"),
        SuffixTag::B => (bounds.b_prefix(u.len()), "b"),
    };
    let ok = match kind {
        SuffixTag::Empty => u.is_empty(),
        _ => !u.is_empty() && seq == u,
    };
    if !ok {
        return Err(Error::NotAPrefix {
            word: Word::from(u),
            which,
        });
    }
    bounds.hat_prefix_raw(u, kind).map(Word::new)
}

/// `w-hat`: the head of `w` followed by the rewritten boundary suffix.
pub fn hat(shift: &AbShift, w: &[Digit]) -> Result<Word> {
    let bounds = admissible_main_mode(shift, w)?;
    bounds.hat_raw(w).map(Word::new)
}

/// `w-tilde`: `hat` applied twice.
pub fn tilde(shift: &AbShift, w: &[Digit]) -> Result<Word> {
    let bounds = admissible_main_mode(shift, w)?;
    bounds.tilde_raw(w).map(Word::new)
}

/// Class of an admissible word by its maximal boundary suffix.
pub fn class_of(shift: &AbShift, w: &[Digit]) -> Result<ClassTag> {
    Ok(language::suffix_decompose(shift, w)?.tag)
}

/// The extension letter: 0 exactly when `k1(w) = 0 < k2(w)` and `b_{k2+1} <= 1`.
pub fn g_letter(shift: &AbShift, w: &[Digit]) -> Result<Digit> {
    let bounds = admissible_main_mode(shift, w)?;
    Ok(bounds.g_raw(w))
}

/// `w` placed on `[start, start + |w| - 1]`, `g(w)` right after it, 1 elsewhere.
pub fn sharp(shift: &AbShift, w: &[Digit], start: i64) -> Result<Configuration> {
    let g = g_letter(shift, w)?;
    Ok(Configuration::raw(start, Word::from(w), g))
}

fn admissible_main_mode(shift: &AbShift, w: &[Digit]) -> Result<Bounds> {
    let bounds = main_mode_bounds(shift, w, 1)?;
    if bounds.is_admissible(w) {
        Ok(bounds)
    } else {
        Err(Error::Inadmissible(Word::from(w)))
    }
}

/// Observed preimage counts of `hat` and `tilde` on `L_n`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct MultiplicityProfile {
    pub n: usize,
    pub words: u64,
    pub max_tilde: usize,
    pub max_hat_on_b_class: usize,
    /// Number of `L^eps` words sharing a `hat` image with another `L^eps` word.
    pub hat_on_empty_class_collisions: u64,
    pub class_flow_ok: bool,
}

/// Packs a word into a base-`(lambda+1)` integer.
fn pack(w: &[Digit], base: u128) -> u128 {
    w.iter().fold(0u128, |acc, &d| acc * base + d as u128)
}

fn max_run(keys: &mut [u128]) -> (usize, u64) {
    keys.par_sort_unstable();
    let mut best = 0;
    let mut colliding = 0u64;
    let mut i = 0;
    while i < keys.len() {
        let mut j = i + 1;
        while j < keys.len() && keys[j] == keys[i] {
            j += 1;
        }
        best = best.max(j - i);
        if j - i > 1 {
            colliding += (j - i) as u64;
        }
        i = j;
    }
    (best, colliding)
}

/// Names of the properties verified by [`check_suite`].
pub mod checks {
    pub const PREFIX_HAT_LANDS_ON_ORIGIN: &str = "prefix_hat_lands_on_origin";
    pub const PREFIX_HAT_HAMMING_AT_MOST_2: &str = "prefix_hat_hamming_at_most_2";
    pub const EMPTY_SUFFIX_IFF_ORIGIN: &str = "empty_suffix_iff_origin";
    pub const HAT_FIXES_EMPTY_CLASS: &str = "hat_fixes_empty_class";
    pub const HAT_SENDS_A_CLASS_OUT_OF_A: &str = "hat_sends_a_class_out_of_a";
    pub const HAT_SENDS_B_CLASS_TO_EMPTY: &str = "hat_sends_b_class_to_empty";
    pub const TILDE_ADMISSIBLE_ENDS_AT_ORIGIN: &str = "tilde_admissible_ends_at_origin";
    pub const HAT_HAMMING_AT_MOST_2: &str = "hat_hamming_at_most_2";
    pub const TILDE_HAMMING_AT_MOST_3: &str = "tilde_hamming_at_most_3";
    pub const SHARP_HAMMING_AT_MOST_4: &str = "sharp_hamming_at_most_4";
    pub const PADDING_ADMISSIBLE: &str = "padding_admissible";
    pub const HAT_INJECTIVE_ON_EMPTY_CLASS: &str = "hat_injective_on_empty_class";
    pub const TILDE_MULTIPLICITY_BOUND: &str = "tilde_multiplicity_bound";
    pub const HAT_ON_B_CLASS_MULTIPLICITY_BOUND: &str = "hat_on_b_class_multiplicity_bound";
    pub const RANDOM_LONG_WORDS: &str = "random_long_words";

    pub(super) const WORD_CHECKS: [&str; 9] = [
        EMPTY_SUFFIX_IFF_ORIGIN,
        HAT_FIXES_EMPTY_CLASS,
        HAT_SENDS_A_CLASS_OUT_OF_A,
        HAT_SENDS_B_CLASS_TO_EMPTY,
        TILDE_ADMISSIBLE_ENDS_AT_ORIGIN,
        HAT_HAMMING_AT_MOST_2,
        TILDE_HAMMING_AT_MOST_3,
        SHARP_HAMMING_AT_MOST_4,
        PADDING_ADMISSIBLE,
    ];
}

/// Outcome of one property over all cases examined.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CheckOutcome {
    pub name: String,
    pub passed: bool,
    pub cases: u64,
    pub failures: u64,
    /// Lexicographically least failing input, if any.
    pub counterexample: Option<String>,
}

/// Random sampling of long admissible words on top of the exhaustive sweep.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct RandomSample {
    pub seed: u64,
    pub count: usize,
    pub length: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SuiteConfig {
    /// Exhaustive sweep over `L_n` for `n <= max_n`.
    pub max_n: usize,
    /// Longest boundary prefix fed to `hat_prefix`.
    pub max_prefix_len: usize,
    /// Padding membership is checked for `n <= max_padding_n`.
    pub max_padding_n: usize,
    pub random: Option<RandomSample>,
}

impl SuiteConfig {
    pub fn new(max_n: usize) -> Self {
        SuiteConfig {
            max_n,
            max_prefix_len: 30,
            max_padding_n: max_n.min(10),
            random: None,
        }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct SurgeryReport {
    pub config: SuiteConfig,
    pub p1: usize,
    pub tilde_bound: usize,
    pub hat_on_b_class_bound: usize,
    pub checks: Vec<CheckOutcome>,
    pub multiplicity: Vec<MultiplicityProfile>,
    pub all_passed: bool,
}

impl SurgeryReport {
    pub fn check(&self, name: &str) -> Option<&CheckOutcome> {
        self.checks.iter().find(|c| c.name == name)
    }
}

#[derive(Clone, Debug, Default)]
struct Tally {
    cases: u64,
    failures: u64,
    first: Option<Vec<Digit>>,
}

impl Tally {
    fn record(&mut self, ok: bool, w: &[Digit]) {
        self.cases += 1;
        if !ok {
            self.failures += 1;
            if self
                .first
                .as_deref()
                .is_none_or(|f| (f.len(), f) > (w.len(), w))
            {
                self.first = Some(w.to_vec());
            }
        }
    }

    fn merge(mut self, other: Tally) -> Tally {
        self.cases += other.cases;
        self.failures += other.failures;
        self.first = match (self.first, other.first) {
            (Some(a), Some(b)) => Some(if (a.len(), &a) <= (b.len(), &b) { a } else { b }),
            (a, b) => a.or(b),
        };
        self
    }

    fn outcome(self, name: &str) -> CheckOutcome {
        CheckOutcome {
            name: name.to_string(),
            passed: self.failures == 0,
            cases: self.cases,
            failures: self.failures,
            counterexample: self.first.map(|w| Word::new(w).to_string()),
        }
    }
}

const N_WORD_CHECKS: usize = checks::WORD_CHECKS.len();

#[derive(Clone, Debug, Default)]
struct WordTallies([Tally; N_WORD_CHECKS]);

impl WordTallies {
    fn merge(mut self, other: WordTallies) -> WordTallies {
        for (a, b) in self.0.iter_mut().zip(other.0) {
            *a = std::mem::take(a).merge(b);
        }
        self
    }
}

/// Per-word results that feed the multiplicity counts.
struct WordImages {
    tilde: Option<Vec<Digit>>,
    hat: Option<Vec<Digit>>,
    class: ClassTag,
    hat_class: Option<ClassTag>,
}

struct Checker<'a> {
    bounds: &'a Bounds,
    graph: &'a LabeledGraph,
}

impl Checker<'_> {
    fn vertex(&self, w: &[Digit]) -> Option<Vertex> {
        self.graph.run_from(0, w).map(|id| self.graph.vertex(id))
    }

    fn word(&self, w: &[Digit], padding: bool, t: &mut WordTallies) -> WordImages {
        let b = self.bounds;
        let class = b.class_raw(w);
        let vtx = self.vertex(w);
        t.0[0].record(
            vtx.is_some() && ((class == SuffixTag::Empty) == vtx.unwrap().is_origin()),
            w,
        );

        let hat = b.hat_raw(w).ok();
        let hat_ok = hat.as_deref().filter(|h| b.is_admissible(h));
        let hat_class = hat_ok.map(|h| b.class_raw(h));
        match class {
            SuffixTag::Empty => t.0[1].record(hat.as_deref() == Some(w), w),
            SuffixTag::A => t.0[2].record(matches!(hat_class, Some(c) if c != SuffixTag::A), w),
            SuffixTag::B => t.0[3].record(hat_class == Some(SuffixTag::Empty), w),
        }

        let tilde = hat_ok.and_then(|h| b.hat_raw(h).ok());
        let tilde_ok = tilde.as_deref().filter(|x| b.is_admissible(x));
        t.0[4].record(
            tilde_ok.is_some_and(|x| {
                b.class_raw(x) == SuffixTag::Empty && self.vertex(x) == Some(Vertex::ORIGIN)
            }),
            w,
        );
        t.0[5].record(hat.as_deref().is_some_and(|h| hamming(w, h) <= 2), w);
        t.0[6].record(tilde.as_deref().is_some_and(|x| hamming(w, x) <= 3), w);
        t.0[7].record(
            tilde_ok.is_some_and(|x| hamming(w, x) + usize::from(b.g_raw(w) != b.g_raw(x)) <= 4),
            w,
        );
        if padding {
            let k = w.len() + 2;
            let padded = padded_word(w, b.g_raw(w), k);
            t.0[8].record(b.is_admissible(&padded), w);
        }
        WordImages {
            tilde: tilde_ok.map(<[Digit]>::to_vec),
            hat: hat_ok.map(<[Digit]>::to_vec),
            class,
            hat_class,
        }
    }
}

/// All admissible words of length `n` as one flat buffer with stride `n`.
fn flat_language(graph: &LabeledGraph, n: usize) -> (Vec<Digit>, u64) {
    let mut flat = Vec::new();
    let mut count = 0u64;
    graph
        .for_each_path(n, |w, _| {
            flat.extend_from_slice(w);
            count += 1;
        })
        .expect("graph deep enough");
    (flat, count)
}

struct LevelResult {
    tallies: WordTallies,
    profile: MultiplicityProfile,
}

fn run_level(shift: &AbShift, bounds: &Bounds, n: usize, padding: bool) -> Result<LevelResult> {
    let base = shift.lambda() as u128 + 1;
    if (n as f64) * (base as f64).log2() >= 127.0 {
        return Err(Error::InvalidArgument(format!(
            "words of length {n} are too long to pack"
        )));
    }
    let graph = LabeledGraph::from_bounds(bounds, n.max(1));
    let checker = Checker {
        bounds,
        graph: &graph,
    };
    let (flat, count) = flat_language(&graph, n);

    #[derive(Default)]
    struct Acc {
        tallies: WordTallies,
        tilde: Vec<u128>,
        hat_b: Vec<u128>,
        hat_eps: Vec<u128>,
        flow_ok: bool,
        broken_images: u64,
    }
    let fold = |mut acc: Acc, w: &[Digit]| {
        let img = checker.word(w, padding, &mut acc.tallies);
        match &img.tilde {
            Some(x) => acc.tilde.push(pack(x, base)),
            None => acc.broken_images += 1,
        }
        if let Some(h) = &img.hat {
            match img.class {
                SuffixTag::B => acc.hat_b.push(pack(h, base)),
                SuffixTag::Empty => acc.hat_eps.push(pack(h, base)),
                SuffixTag::A => {}
            }
        }
        acc.flow_ok &= matches!(
            (img.class, img.hat_class),
            (SuffixTag::Empty, Some(SuffixTag::Empty))
                | (SuffixTag::A, Some(SuffixTag::Empty | SuffixTag::B))
                | (SuffixTag::B, Some(SuffixTag::Empty))
        );
        acc
    };
    let start = || Acc {
        flow_ok: true,
        ..Acc::default()
    };
    let reduce = |mut a: Acc, b: Acc| {
        a.tallies = a.tallies.merge(b.tallies);
        a.tilde.extend(b.tilde);
        a.hat_b.extend(b.hat_b);
        a.hat_eps.extend(b.hat_eps);
        a.flow_ok &= b.flow_ok;
        a.broken_images += b.broken_images;
        a
    };
    let mut acc = if n == 0 {
        fold(start(), &[])
    } else {
        flat.par_chunks_exact(n)
            .fold(start, fold)
            .reduce(start, reduce)
    };
    let (max_tilde, _) = max_run(&mut acc.tilde);
    let (max_hat_b, _) = max_run(&mut acc.hat_b);
    let (_, eps_collisions) = max_run(&mut acc.hat_eps);
    Ok(LevelResult {
        tallies: acc.tallies,
        profile: MultiplicityProfile {
            n,
            words: count,
            max_tilde,
            max_hat_on_b_class: max_hat_b,
            hat_on_empty_class_collisions: eps_collisions,
            class_flow_ok: acc.flow_ok && acc.broken_images == 0,
        },
    })
}

/// Exhaustive preimage counts of `hat` and `tilde` over `L_n`.
pub fn multiplicity_profile(shift: &AbShift, n: usize) -> Result<MultiplicityProfile> {
    shift.params().require_main_mode()?;
    let bounds = shift.bounds(n + 2);
    Ok(run_level(shift, &bounds, n, false)?.profile)
}

/// Uniformly random labelled walk of length `len` from the graph origin.
pub fn random_admissible_word<R: Rng>(graph: &LabeledGraph, len: usize, rng: &mut R) -> Word {
    let mut cur = 0u32;
    let mut w = Vec::with_capacity(len);
    for _ in 0..len {
        let options: Vec<(Digit, u32)> = (0..=graph.lambda())
            .filter_map(|c| graph.target(cur, c).map(|t| (c, t)))
            .collect();
        let (c, t) = options[rng.gen_range(0..options.len())];
        w.push(c);
        cur = t;
    }
    Word::new(w)
}

fn prefix_checks(bounds: &Bounds, max_len: usize) -> (Tally, Tally) {
    let graph = LabeledGraph::from_bounds(bounds, max_len.max(1));
    let mut lands = Tally::default();
    let mut close = Tally::default();
    for l in 1..=max_len {
        for (kind, seq) in [(SuffixTag::A, &bounds.a), (SuffixTag::B, &bounds.b)] {
            let u = &seq[..l];
            match bounds.hat_prefix_raw(u, kind) {
                Ok(h) => {
                    let end = graph.run_from(0, &h).map(|id| graph.vertex(id));
                    lands.record(bounds.is_admissible(&h) && end == Some(Vertex::ORIGIN), u);
                    close.record(hamming(u, &h) <= 2, u);
                }
                Err(_) => {
                    lands.record(false, u);
                    close.record(false, u);
                }
            }
        }
    }
    (lands, close)
}

/// Runs every surgery property exhaustively and collects a report.
pub fn check_suite(shift: &AbShift, config: &SuiteConfig) -> Result<SurgeryReport> {
    shift.params().require_main_mode()?;
    let p1 = criterion::p1(shift)?;
    let random_len = config.random.map_or(0, |r| r.length);
    let horizon = (3 * config.max_n.max(random_len) + 6).max(config.max_prefix_len + 2);
    let bounds = shift.bounds(horizon);

    let (lands, close) = prefix_checks(&bounds, config.max_prefix_len);
    let mut tallies = WordTallies::default();
    let mut profiles = Vec::new();
    for n in 0..=config.max_n {
        let level = run_level(shift, &bounds, n, n <= config.max_padding_n)?;
        tallies = tallies.merge(level.tallies);
        profiles.push(level.profile);
    }

    let tilde_bound = 2 * p1 + 7;
    let hat_b_bound = p1 + 3;
    let mut checks_out = vec![
        lands.outcome(checks::PREFIX_HAT_LANDS_ON_ORIGIN),
        close.outcome(checks::PREFIX_HAT_HAMMING_AT_MOST_2),
    ];
    for (t, name) in tallies.0.into_iter().zip(checks::WORD_CHECKS) {
        checks_out.push(t.outcome(name));
    }
    let level_check = |name: &str, bad: &dyn Fn(&MultiplicityProfile) -> bool| {
        let failing: Vec<_> = profiles.iter().filter(|p| bad(p)).collect();
        CheckOutcome {
            name: name.to_string(),
            passed: failing.is_empty(),
            cases: profiles.len() as u64,
            failures: failing.len() as u64,
            counterexample: failing.first().map(|p| format!("n={}", p.n)),
        }
    };
    checks_out.push(level_check(checks::HAT_INJECTIVE_ON_EMPTY_CLASS, &|p| {
        p.hat_on_empty_class_collisions > 0 || !p.class_flow_ok
    }));
    checks_out.push(level_check(checks::TILDE_MULTIPLICITY_BOUND, &|p| {
        p.max_tilde > tilde_bound
    }));
    checks_out.push(level_check(
        checks::HAT_ON_B_CLASS_MULTIPLICITY_BOUND,
        &|p| p.max_hat_on_b_class > hat_b_bound,
    ));

    if let Some(sample) = config.random {
        let graph = LabeledGraph::from_bounds(&bounds, sample.length);
        let checker = Checker {
            bounds: &bounds,
            graph: &graph,
        };
        let mut rng = StdRng::seed_from_u64(sample.seed);
        let mut per = WordTallies::default();
        for _ in 0..sample.count {
            let w = random_admissible_word(&graph, sample.length, &mut rng);
            checker.word(&w, true, &mut per);
        }
        let mut all = Tally::default();
        for t in per.0 {
            all = all.merge(t);
        }
        checks_out.push(all.outcome(checks::RANDOM_LONG_WORDS));
    }

    let all_passed = checks_out.iter().all(|c| c.passed);
    Ok(SurgeryReport {
        config: config.clone(),
        p1,
        tilde_bound,
        hat_on_b_class_bound: hat_b_bound,
        checks: checks_out,
        multiplicity: profiles,
        all_passed,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::Rational;

    fn seven_halves() -> AbShift {
        AbShift::reciprocal("7/2".parse::<Rational>().unwrap()).unwrap()
    }

    fn w(d: &[Digit]) -> Word {
        Word::from(d)
    }

    #[test]
    fn prefix_rewrites() {
        let s = seven_halves();
        assert_eq!(hat_prefix(&s, &[0], SuffixTag::A).unwrap(), w(&[1]));
        assert_eq!(hat_prefix(&s, &[0, 1], SuffixTag::A).unwrap(), w(&[0, 2]));
        assert_eq!(
            hat_prefix(&s, &[0, 1, 1], SuffixTag::A).unwrap(),
            w(&[0, 1, 2])
        );
        assert_eq!(hat_prefix(&s, &[3], SuffixTag::B).unwrap(), w(&[2]));
        assert_eq!(
            hat_prefix(&s, &[3, 3, 0], SuffixTag::B).unwrap(),
            w(&[3, 2, 2])
        );
        assert_eq!(
            hat_prefix(&s, &[], SuffixTag::Empty).unwrap(),
            Word::empty()
        );
        assert!(matches!(
            hat_prefix(&s, &[3, 2], SuffixTag::B),
            Err(Error::NotAPrefix { which: "b", .. })
        ));
        assert!(matches!(
            hat_prefix(&s, &[3], SuffixTag::A),
            Err(Error::NotAPrefix { .. })
        ));
        assert!(matches!(
            hat_prefix(&s, &[3], SuffixTag::Empty),
            Err(Error::NotAPrefix { .. })
        ));
    }

    #[test]
    fn word_rewrites() {
        let s = seven_halves();
        assert_eq!(hat(&s, &[2, 0, 1]).unwrap(), w(&[2, 0, 2]));
        assert_eq!(hat(&s, &[1, 3]).unwrap(), w(&[1, 2]));
        assert_eq!(hat(&s, &[2, 2]).unwrap(), w(&[2, 2]));
        assert_eq!(tilde(&s, &[2, 0, 1]).unwrap(), w(&[2, 0, 2]));
        assert_eq!(tilde(&s, &[3]).unwrap(), w(&[2]));
        assert!(matches!(hat(&s, &[0, 0]), Err(Error::Inadmissible(_))));
    }

    #[test]
    fn classes_and_extension_letter() {
        let s = seven_halves();
        assert_eq!(class_of(&s, &[]).unwrap(), SuffixTag::Empty);
        assert_eq!(class_of(&s, &[0]).unwrap(), SuffixTag::A);
        assert_eq!(class_of(&s, &[3, 3]).unwrap(), SuffixTag::B);
        assert_eq!(g_letter(&s, &[3]).unwrap(), 1);
        assert_eq!(g_letter(&s, &[3, 3]).unwrap(), 0);
        assert_eq!(g_letter(&s, &[2]).unwrap(), 1);
        assert_eq!(g_letter(&s, &[]).unwrap(), 1);
    }

    #[test]
    fn sharp_configurations() {
        let s = seven_halves();
        let c = sharp(&s, &[3, 3], 1).unwrap();
        assert_eq!(c.slice(0, 4), vec![1, 3, 3, 0, 1]);
        assert!(c.certify(&s));
        let e = sharp(&s, &[], 0).unwrap();
        assert_eq!(e.extension, 1);
        assert_eq!(sharp(&s, &[3, 3], -4).unwrap(), c.placed_at(-4));
    }

    #[test]
    fn requires_main_mode() {
        let s = AbShift::from_strs("0", "7/2").unwrap();
        assert!(matches!(hat(&s, &[3]), Err(Error::NotMainMode { .. })));
        let s = AbShift::reciprocal("5/2".parse().unwrap()).unwrap();
        assert!(matches!(g_letter(&s, &[1]), Err(Error::NotMainMode { .. })));
    }

    #[test]
    fn small_suite_passes() {
        for beta in ["7/2", "4", "10/3", "9/2"] {
            let s = AbShift::reciprocal(beta.parse().unwrap()).unwrap();
            let mut cfg = SuiteConfig::new(7);
            cfg.random = Some(RandomSample {
                seed: 7,
                count: 200,
                length: 40,
            });
            let report = check_suite(&s, &cfg).unwrap();
            for c in &report.checks {
                assert!(c.passed, "beta={beta}: {c:?}");
            }
            assert!(report.all_passed);
        }
    }

    #[test]
    fn profile_matches_naive_count() {
        let s = seven_halves();
        let n = 6;
        let words: Vec<Word> = language::enumerate(&s, n).collect();
        let mut counts: std::collections::HashMap<Word, usize> = Default::default();
        for x in &words {
            *counts.entry(tilde(&s, x).unwrap()).or_default() += 1;
        }
        let p = multiplicity_profile(&s, n).unwrap();
        assert_eq!(p.words as usize, words.len());
        assert_eq!(p.max_tilde, *counts.values().max().unwrap());
        assert!(p.class_flow_ok);
        assert_eq!(p.hat_on_empty_class_collisions, 0);
    }
}
