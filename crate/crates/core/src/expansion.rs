//! Exact (alpha, beta)-expansions.
//!
//! The transformation is `T(x) = beta*x + alpha mod 1` on `[0, 1)`. Everything
//! downstream is parameterized by two boundary sequences: `a`, the itinerary
//! of 0 under `T`, and `b`, the left-limit itinerary of 1. Both are produced
//! with exact rational arithmetic and cached lazily inside [`AbShift`].

use std::sync::RwLock;

use num_traits::ToPrimitive;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::rational::Rational;
use crate::word::{Digit, Word};

/// Largest letter accepted for the alphabet `{0, ..., lambda}`.
pub const MAX_LAMBDA: u8 = 63;

/// Parameters `(alpha, beta)` with the derived largest letter `lambda`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Params {
    alpha: Rational,
    beta: Rational,
    lambda: Digit,
    main_mode: bool,
}

impl Params {
    /// Validates `0 <= alpha < 1`, `beta > 1` and `lambda <= 63`.
    pub fn new(alpha: Rational, beta: Rational) -> Result<Self> {
        if alpha.is_negative() || alpha >= Rational::one() {
            return Err(Error::InvalidParams(format!(
                "alpha = {alpha} must lie in [0, 1)"
            )));
        }
        if beta <= Rational::one() {
            return Err(Error::InvalidParams(format!("beta = {beta} must exceed 1")));
        }
        let top = (&alpha + &beta).ceil_int() - num_bigint::BigInt::from(1);
        let lambda = top.to_u8().filter(|&l| l <= MAX_LAMBDA).ok_or_else(|| {
            Error::InvalidParams(format!("alphabet too large: lambda = {top} > {MAX_LAMBDA}"))
        })?;
        let main_mode = (&alpha * &beta) == Rational::one() && beta > Rational::from_integer(3);
        Ok(Params {
            alpha,
            beta,
            lambda,
            main_mode,
        })
    }

    /// The `alpha = 1/beta` family.
    pub fn reciprocal(beta: Rational) -> Result<Self> {
        if beta <= Rational::one() {
            return Err(Error::InvalidParams(format!("beta = {beta} must exceed 1")));
        }
        Params::new(beta.recip(), beta)
    }

    pub fn alpha(&self) -> &Rational {
        &self.alpha
    }

    pub fn beta(&self) -> &Rational {
        &self.beta
    }

    pub fn lambda(&self) -> Digit {
        self.lambda
    }

    pub fn alphabet_size(&self) -> usize {
        self.lambda as usize + 1
    }

    /// `alpha * beta = 1` and `beta > 3`.
    pub fn main_mode(&self) -> bool {
        self.main_mode
    }

    pub fn require_main_mode(&self) -> Result<()> {
        if self.main_mode {
            Ok(())
        } else {
            Err(Error::NotMainMode {
                alpha: self.alpha.to_string(),
                beta: self.beta.to_string(),
            })
        }
    }

    pub fn check_word(&self, w: &[Digit]) -> Result<()> {
        match w.iter().find(|&&d| d > self.lambda) {
            Some(&digit) => Err(Error::DigitOutOfRange {
                digit,
                lambda: self.lambda,
            }),
            None => Ok(()),
        }
    }

    fn affine(&self, x: &Rational) -> Rational {
        &(&self.beta * x) + &self.alpha
    }
}

/// One step of `T`: `(floor(beta*x + alpha), beta*x + alpha mod 1)` for `x` in `[0, 1)`.
pub fn lower_step(p: &Params, x: &Rational) -> Result<(Digit, Rational)> {
    if x.is_negative() || *x >= Rational::one() {
        return Err(Error::Domain {
            x: x.to_string(),
            domain: "[0, 1)",
        });
    }
    let y = p.affine(x);
    let d = y.floor_int();
    let next = &y - &Rational::from_integer(d.clone());
    Ok((to_digit(p, d)?, next))
}

/// Left-limit step on `(0, 1]`: digit `ceil(beta*x + alpha) - 1`, remainder in `(0, 1]`.
pub fn upper_step(p: &Params, x: &Rational) -> Result<(Digit, Rational)> {
    if !(x > &Rational::zero() && *x <= Rational::one()) {
        return Err(Error::Domain {
            x: x.to_string(),
            domain: "(0, 1]",
        });
    }
    let y = p.affine(x);
    let d = y.ceil_int() - num_bigint::BigInt::from(1);
    let next = &y - &Rational::from_integer(d.clone());
    Ok((to_digit(p, d)?, next))
}

fn to_digit(p: &Params, d: num_bigint::BigInt) -> Result<Digit> {
    d.to_u8()
        .filter(|&d| d <= p.lambda)
        .ok_or_else(|| Error::Invariant(format!("digit {d} outside alphabet 0..={}", p.lambda)))
}

/// First `n` digits of the itinerary of `x` together with the orbit points
/// `x, T(x), ..., T^{n-1}(x)`.
pub fn itinerary_with_orbit(p: &Params, x: &Rational, n: usize) -> Result<(Word, Vec<Rational>)> {
    let mut digits = Vec::with_capacity(n);
    let mut orbit = Vec::with_capacity(n);
    let mut cur = x.clone();
    for _ in 0..n {
        let (d, next) = lower_step(p, &cur)?;
        orbit.push(std::mem::replace(&mut cur, next));
        digits.push(d);
    }
    if n == 0 {
        lower_step(p, x)?;
    }
    Ok((Word::new(digits), orbit))
}

/// First `n` digits of the (alpha, beta)-expansion of `x`.
pub fn itinerary(p: &Params, x: &Rational, n: usize) -> Result<Word> {
    itinerary_with_orbit(p, x, n).map(|(w, _)| w)
}

#[derive(Debug)]
struct Orbit {
    digits: Vec<Digit>,
    points: Vec<Rational>,
    next: Rational,
}

impl Orbit {
    fn new(start: Rational) -> Self {
        Orbit {
            digits: Vec::new(),
            points: Vec::new(),
            next: start,
        }
    }
}

#[derive(Debug)]
struct BoundaryCache {
    a: Orbit,
    b: Orbit,
}

/// Snapshot of the first `len` digits of both boundary sequences.
///
/// Indices in the accessor methods are 1-based to match the usual notation
/// `a_1 a_2 ...`; the slices themselves are 0-based.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Bounds {
    pub(crate) a: Vec<Digit>,
    pub(crate) b: Vec<Digit>,
    pub(crate) lambda: Digit,
}

impl Bounds {
    pub fn len(&self) -> usize {
        self.a.len()
    }

    pub fn is_empty(&self) -> bool {
        self.a.is_empty()
    }

    pub fn lambda(&self) -> Digit {
        self.lambda
    }

    /// `a_i`, 1-based.
    #[inline]
    pub fn a(&self, i: usize) -> Digit {
        self.a[i - 1]
    }

    /// `b_i`, 1-based.
    #[inline]
    pub fn b(&self, i: usize) -> Digit {
        self.b[i - 1]
    }

    pub fn a_prefix(&self, n: usize) -> &[Digit] {
        &self.a[..n]
    }

    pub fn b_prefix(&self, n: usize) -> &[Digit] {
        &self.b[..n]
    }
}

/// An (alpha, beta)-shift: validated parameters plus the lazily extended
/// boundary sequences `a` (itinerary of 0) and `b` (left-limit itinerary of 1).
///
/// Extension happens under a write lock; reads of already generated prefixes
/// only take the read lock, so an `AbShift` can be shared across threads.
#[derive(Debug)]
pub struct AbShift {
    params: Params,
    cache: RwLock<BoundaryCache>,
}

impl AbShift {
    pub fn new(params: Params) -> Self {
        let cache = BoundaryCache {
            a: Orbit::new(Rational::zero()),
            b: Orbit::new(Rational::one()),
        };
        AbShift {
            params,
            cache: RwLock::new(cache),
        }
    }

    pub fn from_strs(alpha: &str, beta: &str) -> Result<Self> {
        Ok(AbShift::new(Params::new(alpha.parse()?, beta.parse()?)?))
    }

    /// Shift with `alpha = 1/beta`.
    pub fn reciprocal(beta: Rational) -> Result<Self> {
        Ok(AbShift::new(Params::reciprocal(beta)?))
    }

    pub fn params(&self) -> &Params {
        &self.params
    }

    pub fn lambda(&self) -> Digit {
        self.params.lambda
    }

    fn ensure(&self, n: usize) {
        {
            let c = self.cache.read().expect("boundary cache poisoned");
            if c.a.digits.len() >= n && c.b.digits.len() >= n {
                return;
            }
        }
        let mut c = self.cache.write().expect("boundary cache poisoned");
        let p = &self.params;
        while c.a.digits.len() < n {
            let (d, next) = lower_step(p, &c.a.next).expect("lower orbit stays in [0, 1)");
            let o = &mut c.a;
            o.points.push(std::mem::replace(&mut o.next, next));
            o.digits.push(d);
        }
        while c.b.digits.len() < n {
            let (d, next) = upper_step(p, &c.b.next).expect("upper orbit stays in (0, 1]");
            let o = &mut c.b;
            o.points.push(std::mem::replace(&mut o.next, next));
            o.digits.push(d);
        }
    }

    fn read<R>(&self, n: usize, f: impl FnOnce(&BoundaryCache) -> R) -> R {
        self.ensure(n);
        let c = self.cache.read().expect("boundary cache poisoned");
        f(&c)
    }

    /// First `n` digits of `a`, the expansion of 0.
    pub fn expansion_of_zero(&self, n: usize) -> Word {
        self.read(n, |c| Word::from(&c.a.digits[..n]))
    }

    /// First `n` digits of `b`, the left-limit expansion of 1.
    pub fn expansion_of_one(&self, n: usize) -> Word {
        self.read(n, |c| Word::from(&c.b.digits[..n]))
    }

    /// Orbit points `T^{i}(0)` for `i < n`.
    pub fn zero_orbit(&self, n: usize) -> Vec<Rational> {
        self.read(n, |c| c.a.points[..n].to_vec())
    }

    /// Upper orbit points starting at 1, `n` of them.
    pub fn one_orbit(&self, n: usize) -> Vec<Rational> {
        self.read(n, |c| c.b.points[..n].to_vec())
    }

    /// Upper orbit point from which `b_i` is read (1-based).
    pub fn one_orbit_point(&self, i: usize) -> Rational {
        self.read(i, |c| c.b.points[i - 1].clone())
    }

    /// `a_i`, 1-based.
    pub fn a(&self, i: usize) -> Digit {
        self.read(i, |c| c.a.digits[i - 1])
    }

    /// `b_i`, 1-based.
    pub fn b(&self, i: usize) -> Digit {
        self.read(i, |c| c.b.digits[i - 1])
    }

    /// Snapshot of at least `n` digits of `a` and `b`.
    pub fn bounds(&self, n: usize) -> Bounds {
        self.read(n, |c| Bounds {
            a: c.a.digits[..n].to_vec(),
            b: c.b.digits[..n].to_vec(),
            lambda: self.params.lambda,
        })
    }
}
