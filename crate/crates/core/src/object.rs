//! Objects of the category: indecomposables are vertices of the infinite
//! linear quiver `... -> Σ^{-d} f_period -> f_1 -> ... -> f_period -> Σ^d f_1 -> ...`,
//! addressed by a single global position `pos = shift * period + index`.

use std::fmt;

use crate::params::FamilyParams;

/// The indecomposable `Σ^{shift·d} f_index`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct IndecObject {
    pub pos: i64,
}

impl IndecObject {
    pub const fn at(pos: i64) -> Self {
        IndecObject { pos }
    }

    /// `Σ^{shift·d} f_index`.
    pub fn f(params: &FamilyParams, shift: i64, index: i64) -> Self {
        IndecObject { pos: params.join(shift, index) }
    }

    pub fn shift(&self, params: &FamilyParams) -> i64 {
        params.split(self.pos).0
    }

    pub fn index(&self, params: &FamilyParams) -> i64 {
        params.split(self.pos).1
    }

    /// Applies `Σ^{r·d}`.
    pub fn shifted(&self, params: &FamilyParams, r: i64) -> Self {
        IndecObject { pos: self.pos + r * params.period() }
    }

    /// Human-readable label, `f5` for shift zero and `s-1:f8` otherwise.
    pub fn label(&self, params: &FamilyParams) -> String {
        let (s, i) = params.split(self.pos);
        if s == 0 {
            format!("f{i}")
        } else {
            format!("s{s}:f{i}")
        }
    }
}

/// A finite direct sum of indecomposables. Summands are kept sorted by
/// position so that structural equality is isomorphism of objects.
#[derive(Debug, Clone, Default, PartialEq, Eq, Hash)]
pub struct SumObject {
    summands: Vec<IndecObject>,
}

impl SumObject {
    pub fn zero() -> Self {
        SumObject::default()
    }

    pub fn new(mut summands: Vec<IndecObject>) -> Self {
        summands.sort();
        SumObject { summands }
    }

    pub fn from_positions<I: IntoIterator<Item = i64>>(positions: I) -> Self {
        Self::new(positions.into_iter().map(IndecObject::at).collect())
    }

    pub fn summands(&self) -> &[IndecObject] {
        &self.summands
    }

    #[allow(clippy::len_without_is_empty)]
    pub fn len(&self) -> usize {
        self.summands.len()
    }

    pub fn is_zero(&self) -> bool {
        self.summands.is_empty()
    }

    /// Returns the single summand when the object is indecomposable.
    pub fn as_indec(&self) -> Option<IndecObject> {
        match self.summands.as_slice() {
            [x] => Some(*x),
            _ => None,
        }
    }

    pub fn positions(&self) -> impl Iterator<Item = i64> + '_ {
        self.summands.iter().map(|x| x.pos)
    }

    pub fn shifted(&self, params: &FamilyParams, r: i64) -> Self {
        SumObject { summands: self.summands.iter().map(|x| x.shifted(params, r)).collect() }
    }

    /// Direct sum of several objects. Returns the sum together with, for each
    /// input and each of its summands, the summand index in the result.
    /// Ties between equal positions are broken by input order.
    pub fn merge(parts: &[&SumObject]) -> (SumObject, Vec<Vec<usize>>) {
        let mut tagged: Vec<(i64, usize, usize)> = parts
            .iter()
            .enumerate()
            .flat_map(|(b, obj)| obj.summands.iter().enumerate().map(move |(k, x)| (x.pos, b, k)))
            .collect();
        tagged.sort();
        let mut placement: Vec<Vec<usize>> = parts.iter().map(|o| vec![0; o.len()]).collect();
        for (slot, &(_, b, k)) in tagged.iter().enumerate() {
            placement[b][k] = slot;
        }
        let sum = SumObject { summands: tagged.into_iter().map(|(p, _, _)| IndecObject::at(p)).collect() };
        (sum, placement)
    }

    pub fn label(&self, params: &FamilyParams) -> String {
        if self.is_zero() {
            return "0".to_string();
        }
        self.summands.iter().map(|x| x.label(params)).collect::<Vec<_>>().join("+")
    }
}

impl From<IndecObject> for SumObject {
    fn from(x: IndecObject) -> Self {
        SumObject { summands: vec![x] }
    }
}

impl fmt::Display for IndecObject {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "p{}", self.pos)
    }
}
