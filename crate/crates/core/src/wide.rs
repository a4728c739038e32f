//! Wide subcategories of `F` and `F̄`.
//!
//! A `Σ^{±d}`-closed additive subcategory of `F̄` is determined by the set
//! `S ⊆ {1, …, period}` of indices it contains. The classification used here:
//! `S` is wide iff it is semisimple (all distinct indices `i, j` satisfy
//! `l ≤ |i − j| ≤ m − 1`) or `l`-periodic. [`is_wide_oracle`] checks the
//! same property from first principles (closure under `d`-extensions).

use std::collections::BTreeSet;
use std::fmt;

use crate::error::{Error, Result};
use crate::object::IndecObject;
use crate::params::FamilyParams;

/// The subcategory `add{Σ^{rd} f_s : s ∈ S, r ∈ Z}`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SubcatSpec {
    indices: BTreeSet<i64>,
    period: i64,
}

impl SubcatSpec {
    pub fn new<I: IntoIterator<Item = i64>>(params: &FamilyParams, indices: I) -> Result<Self> {
        let indices: BTreeSet<i64> = indices.into_iter().collect();
        if let Some(&bad) = indices.iter().find(|&&i| !(1..=params.period()).contains(&i)) {
            return Err(Error::OutOfWindow(bad));
        }
        Ok(SubcatSpec { indices, period: params.period() })
    }

    pub fn empty(params: &FamilyParams) -> Self {
        SubcatSpec { indices: BTreeSet::new(), period: params.period() }
    }

    pub fn full(params: &FamilyParams) -> Self {
        SubcatSpec { indices: (1..=params.period()).collect(), period: params.period() }
    }

    pub fn indices(&self) -> impl Iterator<Item = i64> + '_ {
        self.indices.iter().copied()
    }

    pub fn len(&self) -> usize {
        self.indices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.indices.is_empty()
    }

    pub fn contains_index(&self, i: i64) -> bool {
        self.indices.contains(&i)
    }

    pub fn contains_pos(&self, pos: i64) -> bool {
        self.indices.contains(&((pos - 1).rem_euclid(self.period) + 1))
    }

    pub fn contains(&self, x: IndecObject) -> bool {
        self.contains_pos(x.pos)
    }
}

impl fmt::Display for SubcatSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.indices.iter().map(i64::to_string).collect();
        write!(f, "{{{}}}", parts.join(","))
    }
}

pub fn is_semisimple_wide(params: &FamilyParams, s: &SubcatSpec) -> bool {
    let v: Vec<i64> = s.indices().collect();
    v.iter().enumerate().all(|(a, &i)| {
        v[a + 1..].iter().all(|&j| {
            let gap = (i - j).abs();
            params.l() <= gap && gap < params.m()
        })
    })
}

pub fn is_l_periodic(params: &FamilyParams, s: &SubcatSpec) -> bool {
    let l = params.l();
    s.indices().all(|q| {
        let step_up = q + l > params.period() || s.contains_index(q + l);
        let step_down = q - l < 1 || s.contains_index(q - l);
        step_up && step_down
    })
}

pub fn is_wide(params: &FamilyParams, s: &SubcatSpec) -> bool {
    is_semisimple_wide(params, s) || is_l_periodic(params, s)
}

/// A connecting morphism `δ: y → Σ^d x` between members whose minimal angle
/// leaves the subcategory.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ExtensionWitness {
    /// Position of `y`.
    pub source: i64,
    /// Position of `Σ^d x`.
    pub target: i64,
    /// First middle object of the angle that is not a member.
    pub escaping: i64,
}

/// Closure under `d`-extensions for a membership predicate on positions.
///
/// Only indecomposable connecting maps need checking: a general `δ` is
/// isomorphic to a direct sum of basis morphisms and zero maps, whose angles
/// are rotated minimal angles and split angles. For `δ = u_{y→z}` with
/// `Δ = pos(z) − pos(y)` in `[1, l−1]` the middle objects are at
/// `pos(z) − r·l` and `pos(y) − r·l` for `1 ≤ r ≤ d/2`; `Δ = 0` gives a split
/// angle with zero middle terms. The predicate is assumed `Σ^d`-invariant,
/// so `y` ranges over one period.
pub fn extension_closure_witness(params: &FamilyParams, member: impl Fn(i64) -> bool) -> Option<ExtensionWitness> {
    let l = params.l();
    for y in 1..=params.period() {
        if !member(y) {
            continue;
        }
        for delta in 1..l {
            let z = y + delta;
            if !member(z) {
                continue;
            }
            let middles = (1..=params.d() / 2).flat_map(|r| [z - r * l, y - r * l]);
            if let Some(escaping) = middles.into_iter().find(|&p| !member(p)) {
                return Some(ExtensionWitness { source: y, target: z, escaping });
            }
        }
    }
    None
}

/// `Σ^{±d}`-closure of a predicate, checked on positions in `window`.
pub fn is_shift_closed(
    params: &FamilyParams,
    member: impl Fn(i64) -> bool,
    window: std::ops::RangeInclusive<i64>,
) -> bool {
    window.into_iter().all(|p| member(p) == member(p + params.period()))
}

pub fn is_wide_oracle(params: &FamilyParams, s: &SubcatSpec) -> bool {
    wide_oracle_witness(params, s).is_none()
}

pub fn wide_oracle_witness(params: &FamilyParams, s: &SubcatSpec) -> Option<ExtensionWitness> {
    extension_closure_witness(params, |p| s.contains_pos(p))
}

/// Largest period for which [`enumerate_wide`] runs.
pub const MAX_ENUMERATION_PERIOD: i64 = 40;

/// All wide index sets, sorted lexicographically by their sorted index lists.
///
/// The periodic branch is the `2^l` unions of residue classes mod `l`; the
/// semisimple branch is enumerated by backtracking over increasing indices,
/// extending only by indices at distance `[l, m − 1]` from every chosen one.
pub fn enumerate_wide(params: &FamilyParams) -> Result<Vec<SubcatSpec>> {
    if params.period() > MAX_ENUMERATION_PERIOD {
        return Err(Error::ConstraintViolation(format!(
            "period {} is too large to enumerate (limit {MAX_ENUMERATION_PERIOD})",
            params.period()
        )));
    }
    let mut found: BTreeSet<Vec<i64>> = BTreeSet::new();
    let l = params.l();
    let period = params.period();
    for mask in 0u64..(1u64 << l) {
        let set: Vec<i64> = (1..=period).filter(|i| mask >> ((i - 1) % l) & 1 == 1).collect();
        found.insert(set);
    }
    let mut chosen = Vec::new();
    semisimple_extend(params, &mut chosen, 1, &mut found);
    Ok(found.into_iter().map(|v| SubcatSpec::new(params, v).expect("indices come from the window")).collect())
}

fn semisimple_extend(params: &FamilyParams, chosen: &mut Vec<i64>, from: i64, out: &mut BTreeSet<Vec<i64>>) {
    out.insert(chosen.clone());
    for next in from..=params.period() {
        let ok = chosen.iter().all(|&c| {
            let gap = next - c;
            params.l() <= gap && gap < params.m()
        });
        if ok {
            chosen.push(next);
            semisimple_extend(params, chosen, next + 1, out);
            chosen.pop();
        }
    }
}

/// Membership predicate of `W̄` for a subcategory `W` of `F`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Barred {
    spec: SubcatSpec,
}

impl Barred {
    pub fn contains(&self, x: IndecObject) -> bool {
        self.spec.contains(x)
    }

    pub fn contains_pos(&self, pos: i64) -> bool {
        self.spec.contains_pos(pos)
    }
}

/// `W ↦ W̄`.
pub fn bar(spec: &SubcatSpec) -> Barred {
    Barred { spec: spec.clone() }
}

/// `X ↦ X ∩ F`: reads the predicate on the fundamental window.
pub fn unbar(params: &FamilyParams, member: impl Fn(IndecObject) -> bool) -> SubcatSpec {
    let indices: Vec<i64> = (1..=params.period()).filter(|&i| member(IndecObject::at(i))).collect();
    SubcatSpec::new(params, indices).expect("window indices")
}

/// Fails with [`Error::NotWide`] unless `spec` is wide.
pub fn require_wide(params: &FamilyParams, spec: &SubcatSpec) -> Result<()> {
    if is_wide(params, spec) {
        Ok(())
    } else {
        Err(Error::NotWide(spec.to_string()))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p449() -> FamilyParams {
        FamilyParams::new(4, 4, 9).unwrap()
    }

    fn spec(p: &FamilyParams, v: &[i64]) -> SubcatSpec {
        SubcatSpec::new(p, v.iter().copied()).unwrap()
    }

    #[test]
    fn semisimple_examples() {
        let p = p449();
        assert!(is_semisimple_wide(&p, &spec(&p, &[1, 5, 9])));
        assert!(is_semisimple_wide(&p, &spec(&p, &[])));
        assert!(is_semisimple_wide(&p, &spec(&p, &[7])));
        assert!(!is_semisimple_wide(&p, &spec(&p, &[1, 2])));
        assert!(!is_semisimple_wide(&p, &spec(&p, &[1, 10])));
    }

    #[test]
    fn periodic_examples() {
        let p = p449();
        assert!(is_l_periodic(&p, &spec(&p, &[1, 2, 5, 6, 9, 10])));
        assert!(is_l_periodic(&p, &spec(&p, &[])));
        assert!(!is_l_periodic(&p, &spec(&p, &[1, 5])));
        assert!(!is_l_periodic(&p, &spec(&p, &[5, 9])));
    }

    #[test]
    fn wide_examples() {
        let p = p449();
        assert!(is_wide(&p, &spec(&p, &[1, 2, 5, 6, 9, 10])));
        assert!(!is_wide(&p, &spec(&p, &[1, 2])));
        assert!(is_wide(&p, &SubcatSpec::full(&p)));
        assert_eq!(require_wide(&p, &spec(&p, &[1, 2])), Err(Error::NotWide("{1,2}".into())));
    }

    #[test]
    fn oracle_examples() {
        let p = p449();
        assert!(is_wide_oracle(&p, &spec(&p, &[1, 2, 5, 6, 9, 10])));
        assert!(is_wide_oracle(&p, &SubcatSpec::empty(&p)));
        let w = wide_oracle_witness(&p, &spec(&p, &[1, 2])).unwrap();
        assert_eq!((w.source, w.target), (1, 2));
        assert!(!spec(&p, &[1, 2]).contains_pos(w.escaping));
    }

    #[test]
    fn bar_unbar() {
        let p = p449();
        let s = spec(&p, &[1, 5, 9]);
        let b = bar(&s);
        assert!(b.contains(IndecObject::f(&p, -1, 5)));
        assert!(!b.contains(IndecObject::at(2)));
        assert_eq!(unbar(&p, |x| b.contains(x)), s);
    }

    #[test]
    fn out_of_window_indices() {
        let p = p449();
        assert_eq!(SubcatSpec::new(&p, [0]), Err(Error::OutOfWindow(0)));
        assert_eq!(SubcatSpec::new(&p, [13]), Err(Error::OutOfWindow(13)));
    }
}
