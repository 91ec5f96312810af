use serde::Serialize;

use crate::expansion::AbShift;
use crate::word::{Digit, Word};

/// Digit written at every coordinate outside the core and extension.
pub const FILL: Digit = 1;

/// Bi-infinite sequence that is `core` on `[start, start + |core| - 1]`,
/// `extension` at `start + |core|`, and [`FILL`] everywhere else.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct Configuration {
    pub start: i64,
    pub core: Word,
    pub extension: Digit,
}

impl Configuration {
    /// Builds a configuration without any membership check.
    pub fn raw(start: i64, core: Word, extension: Digit) -> Self {
        Configuration {
            start,
            core,
            extension,
        }
    }

    /// Last core coordinate (`start - 1` for an empty core).
    pub fn end(&self) -> i64 {
        self.start + self.core.len() as i64 - 1
    }

    pub fn extension_index(&self) -> i64 {
        self.start + self.core.len() as i64
    }

    /// Coordinate `i`.
    #[inline]
    pub fn at(&self, i: i64) -> Digit {
        let off = i - self.start;
        if off >= 0 && (off as usize) < self.core.len() {
            self.core[off as usize]
        } else if i == self.extension_index() {
            self.extension
        } else {
            FILL
        }
    }

    /// Coordinates `from..=to`.
    pub fn slice(&self, from: i64, to: i64) -> Vec<Digit> {
        (from..=to).map(|i| self.at(i)).collect()
    }

    /// The same configuration translated so the core starts at `start`.
    pub fn placed_at(&self, start: i64) -> Self {
        Configuration {
            start,
            ..self.clone()
        }
    }

    /// Smallest interval containing every coordinate that may differ from [`FILL`].
    pub fn support(&self) -> (i64, i64) {
        (self.start, self.extension_index())
    }

    /// Finite membership certificate: `1^K core extension 1^K` is admissible
    /// with `K = |core| + 2`. Every factor of an admissible word is
    /// admissible, so this covers all windows of that length.
    pub fn certify(&self, shift: &AbShift) -> bool {
        let k = self.core.len() + 2;
        let padded = padded_word(&self.core, self.extension, k);
        shift.params().check_word(&padded).is_ok()
            && shift.bounds(padded.len()).is_admissible(&padded)
    }
}

/// `1^k w e 1^k`.
pub fn padded_word(w: &[Digit], extension: Digit, k: usize) -> Vec<Digit> {
    let mut v = Vec::with_capacity(w.len() + 2 * k + 1);
    v.extend(std::iter::repeat_n(FILL, k));
    v.extend_from_slice(w);
    v.push(extension);
    v.extend(std::iter::repeat_n(FILL, k));
    v
}

/// Number of coordinates where two configurations differ.
pub fn config_hamming(x: &Configuration, y: &Configuration) -> usize {
    let lo = x.start.min(y.start);
    let hi = x.extension_index().max(y.extension_index());
    (lo..=hi).filter(|&i| x.at(i) != y.at(i)).count()
}
