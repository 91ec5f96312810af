use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::thermo::configuration::Configuration;
use crate::word::{Digit, Word};

/// Largest supported range of a locally constant potential.
pub const MAX_RANGE: usize = 4;

/// Locally constant potential: `phi(x)` depends on `x_1 .. x_r` only.
///
/// The table is dense over all `(lambda+1)^r` strings, admissible or not.
#[derive(Clone, Debug, PartialEq)]
pub struct Potential {
    range: usize,
    lambda: Digit,
    values: Vec<f64>,
}

#[derive(Serialize, Deserialize)]
struct PotentialFile {
    range: usize,
    #[serde(default)]
    table: BTreeMap<String, f64>,
}

impl Potential {
    fn check_shape(range: usize, lambda: Digit) -> Result<usize> {
        if range == 0 || range > MAX_RANGE {
            return Err(Error::Potential(format!(
                "range {range} outside 1..={MAX_RANGE}"
            )));
        }
        Ok((lambda as usize + 1).pow(range as u32))
    }

    /// The constant potential `c`.
    pub fn constant(lambda: Digit, c: f64) -> Self {
        Potential {
            range: 1,
            lambda,
            values: vec![c; lambda as usize + 1],
        }
    }

    pub fn zero(lambda: Digit) -> Self {
        Self::constant(lambda, 0.0)
    }

    /// Tabulates `f` over every string of length `range`.
    pub fn from_fn(lambda: Digit, range: usize, f: impl Fn(&[Digit]) -> f64) -> Result<Self> {
        let size = Self::check_shape(range, lambda)?;
        let base = lambda as usize + 1;
        let mut key = vec![0 as Digit; range];
        let values = (0..size)
            .map(|i| {
                let mut x = i;
                for slot in key.iter_mut().rev() {
                    *slot = (x % base) as Digit;
                    x /= base;
                }
                f(&key)
            })
            .collect::<Vec<_>>();
        if let Some(v) = values.iter().find(|v| !v.is_finite()) {
            return Err(Error::Potential(format!("non-finite value {v}")));
        }
        Ok(Potential {
            range,
            lambda,
            values,
        })
    }

    /// Parses `{"range": r, "table": {"0,1": 0.5, ...}}`; missing keys are 0.
    pub fn from_json(text: &str, lambda: Digit) -> Result<Self> {
        let file: PotentialFile =
            serde_json::from_str(text).map_err(|e| Error::Potential(e.to_string()))?;
        let size = Self::check_shape(file.range, lambda)?;
        let mut values = vec![0.0; size];
        for (k, v) in &file.table {
            let w: Word = k.parse()?;
            if w.len() != file.range {
                return Err(Error::Potential(format!(
                    "key {k:?} has length {}, expected {}",
                    w.len(),
                    file.range
                )));
            }
            if let Some(&d) = w.iter().find(|&&d| d > lambda) {
                return Err(Error::Potential(format!(
                    "key {k:?} uses digit {d} > {lambda}"
                )));
            }
            if !v.is_finite() {
                return Err(Error::Potential(format!("non-finite value for key {k:?}")));
            }
            values[pack(&w, lambda)] = *v;
        }
        Ok(Potential {
            range: file.range,
            lambda,
            values,
        })
    }

    /// JSON form listing the nonzero entries.
    pub fn to_json(&self) -> String {
        let base = self.lambda as usize + 1;
        let table = self
            .values
            .iter()
            .enumerate()
            .filter(|(_, v)| **v != 0.0)
            .map(|(i, v)| (Word::new(unpack(i, self.range, base)).to_string(), *v))
            .collect();
        serde_json::to_string(&PotentialFile {
            range: self.range,
            table,
        })
        .expect("plain data")
    }

    pub fn range(&self) -> usize {
        self.range
    }

    pub fn lambda(&self) -> Digit {
        self.lambda
    }

    /// `phi` of a string of exactly `range` digits.
    #[inline]
    pub fn eval(&self, x: &[Digit]) -> f64 {
        debug_assert_eq!(x.len(), self.range);
        self.values[pack(x, self.lambda)]
    }

    /// `phi` by packed key (most significant digit first).
    #[inline]
    pub(crate) fn eval_key(&self, key: usize) -> f64 {
        self.values[key]
    }

    /// `sum_i delta_i`, where `delta_i` is the largest change of `phi` under a
    /// change of coordinate `i` alone.
    pub fn total_oscillation(&self) -> f64 {
        let base = self.lambda as usize + 1;
        (0..self.range)
            .map(|i| {
                let stride = base.pow((self.range - 1 - i) as u32);
                let mut delta = 0.0f64;
                for key in 0..self.values.len() {
                    if !(key / stride).is_multiple_of(base) {
                        continue;
                    }
                    let column = (0..base).map(|d| self.values[key + d * stride]);
                    let (lo, hi) = column
                        .fold((f64::INFINITY, f64::NEG_INFINITY), |(lo, hi), v| {
                            (lo.min(v), hi.max(v))
                        });
                    delta = delta.max(hi - lo);
                }
                delta
            })
            .sum()
    }

    /// `sum_{j=from}^{to} phi(sigma^j x)`, reading coordinates `j+1 ..= j+r`.
    pub fn birkhoff_window(&self, x: &Configuration, from: i64, to: i64) -> f64 {
        let r = self.range as i64;
        (from..=to).map(|j| self.eval(&x.slice(j + 1, j + r))).sum()
    }
}

fn pack(w: &[Digit], lambda: Digit) -> usize {
    let base = lambda as usize + 1;
    w.iter().fold(0usize, |acc, &d| acc * base + d as usize)
}

fn unpack(mut i: usize, len: usize, base: usize) -> Vec<Digit> {
    let mut w = vec![0; len];
    for slot in w.iter_mut().rev() {
        *slot = (i % base) as Digit;
        i /= base;
    }
    w
}
