use std::fmt;

use crate::error::{Error, Result};

/// Largest value accepted for any of `d`, `l`, `m`. Keeps all position
/// arithmetic comfortably inside `i64`.
pub const MAX_PARAM: i64 = 1 << 20;

/// An admissible triple `(d, l, m)` with `d` even and `m - 1 = d * l / 2`.
///
/// The category has `period = m + l - 1` indecomposables per copy of the
/// higher module category, and `Σ^d` translates global positions by exactly
/// one period.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct FamilyParams {
    d: i64,
    l: i64,
    m: i64,
    period: i64,
}

impl FamilyParams {
    pub fn new(d: i64, l: i64, m: i64) -> Result<Self> {
        if d < 2 {
            return Err(Error::ConstraintViolation(format!("d = {d} must be at least 2")));
        }
        if d % 2 != 0 {
            return Err(Error::ConstraintViolation(format!("d = {d} is odd")));
        }
        if l < 2 {
            return Err(Error::ConstraintViolation(format!("l = {l} must be at least 2")));
        }
        if m < 3 {
            return Err(Error::ConstraintViolation(format!("m = {m} must be at least 3")));
        }
        if d > MAX_PARAM || l > MAX_PARAM || m > MAX_PARAM {
            return Err(Error::ConstraintViolation(format!("parameters must not exceed {MAX_PARAM}")));
        }
        if m - 1 != d * l / 2 {
            return Err(Error::ConstraintViolation(format!(
                "m - 1 = {} differs from d * l / 2 = {}",
                m - 1,
                d * l / 2
            )));
        }
        let period = m + l - 1;
        debug_assert_eq!(period, l * (d + 2) / 2);
        Ok(FamilyParams { d, l, m, period })
    }

    pub fn d(&self) -> i64 {
        self.d
    }

    pub fn l(&self) -> i64 {
        self.l
    }

    pub fn m(&self) -> i64 {
        self.m
    }

    /// Number of indecomposables in one copy, `m + l - 1 = l (d + 2) / 2`.
    pub fn period(&self) -> i64 {
        self.period
    }

    /// Number of object slots `X^0, ..., X^{d+1}` of an angle.
    pub fn slots(&self) -> usize {
        (self.d + 2) as usize
    }

    /// Splits a global position into `(shift, index)` with `index` in `[1, period]`.
    pub fn split(&self, pos: i64) -> (i64, i64) {
        let shift = (pos - 1).div_euclid(self.period);
        (shift, pos - shift * self.period)
    }

    pub fn index_of(&self, pos: i64) -> i64 {
        self.split(pos).1
    }

    pub fn join(&self, shift: i64, index: i64) -> i64 {
        shift * self.period + index
    }
}

impl fmt::Display for FamilyParams {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(d={}, l={}, m={}; period {})", self.d, self.l, self.m, self.period)
    }
}

/// Checks `(d, l, m)` and returns the validated parameters.
pub fn validate_params(d: i64, l: i64, m: i64) -> Result<FamilyParams> {
    FamilyParams::new(d, l, m)
}
