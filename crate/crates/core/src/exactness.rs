//! Hom-exactness oracle.
//!
//! A `(d+2)`-angle becomes a long exact sequence under `Hom(t, −)` and
//! `Hom(−, t)`. The oracle unrolls the angle over three consecutive
//! `Σ^d`-periods, applies both functors for every indecomposable `t` whose
//! Hom support can meet the angle, and checks exactness at each interior
//! term by exact rank computation. Hom vanishes beyond distance `l − 1`, so
//! test objects outside `[min − period − l + 1, max + period]` only see zero
//! spaces in the unrolled window.

use std::collections::BTreeSet;

use crate::angle::Angle;
use crate::linalg::{QMatrix, Q};
use crate::morphism::{hom_dim, Morphism};
use crate::object::{IndecObject, SumObject};
use crate::params::FamilyParams;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Variance {
    /// `Hom(t, −)`
    Covariant,
    /// `Hom(−, t)`
    Contravariant,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ExactnessFailure {
    pub test_object: IndecObject,
    pub variance: Variance,
    /// Index into the unrolled sequence; `(d+2) + k` is slot `k` of the angle itself.
    pub position: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct ExactnessReport {
    pub tested_objects: usize,
    pub failures: Vec<ExactnessFailure>,
}

impl ExactnessReport {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }
}

/// Matrix of `Hom(t, f): Hom(t, X) → Hom(t, Y)` in the summand bases.
fn covariant_matrix(params: &FamilyParams, t: IndecObject, f: &Morphism) -> QMatrix {
    let src = Morphism::hom_basis(params, &SumObject::from(t), f.source());
    let tgt_support: Vec<usize> =
        Morphism::support(params, &SumObject::from(t), f.target()).into_iter().map(|(r, _)| r).collect();
    let cols: Vec<Vec<Q>> = src
        .iter()
        .map(|g| {
            let img = f.compose(g).expect("composable");
            tgt_support.iter().map(|&r| img.entry(r, 0).clone()).collect()
        })
        .collect();
    QMatrix::from_cols(tgt_support.len(), &cols)
}

/// Matrix of `Hom(f, t): Hom(Y, t) → Hom(X, t)`.
fn contravariant_matrix(params: &FamilyParams, t: IndecObject, f: &Morphism) -> QMatrix {
    let src = Morphism::hom_basis(params, f.target(), &SumObject::from(t));
    let tgt_support: Vec<usize> =
        Morphism::support(params, f.source(), &SumObject::from(t)).into_iter().map(|(_, c)| c).collect();
    let cols: Vec<Vec<Q>> = src
        .iter()
        .map(|h| {
            let img = h.compose(f).expect("composable");
            tgt_support.iter().map(|&c| img.entry(0, c).clone()).collect()
        })
        .collect();
    QMatrix::from_cols(tgt_support.len(), &cols)
}

fn hom_count(params: &FamilyParams, t: IndecObject, obj: &SumObject, variance: Variance) -> usize {
    obj.summands()
        .iter()
        .filter(|&&z| match variance {
            Variance::Covariant => hom_dim(params, t, z) == 1,
            Variance::Contravariant => hom_dim(params, z, t) == 1,
        })
        .count()
}

/// Checks exactness of a sequence of composable maps under `Hom(t, −)` or
/// `Hom(−, t)` at every interior object; returns the failing indices.
///
/// `objects[k]` is the source of `maps[k]` and `objects[k+1]` its target.
/// Indices listed in `skip` are not checked.
pub fn exactness_failures(
    params: &FamilyParams,
    objects: &[SumObject],
    maps: &[Morphism],
    t: IndecObject,
    variance: Variance,
    check: &[usize],
) -> Vec<usize> {
    debug_assert_eq!(objects.len(), maps.len() + 1);
    let mats: Vec<QMatrix> = maps
        .iter()
        .map(|f| match variance {
            Variance::Covariant => covariant_matrix(params, t, f),
            Variance::Contravariant => contravariant_matrix(params, t, f),
        })
        .collect();
    let mut failures = Vec::new();
    for &k in check {
        if k == 0 || k + 1 >= objects.len() {
            continue;
        }
        let dim = hom_count(params, t, &objects[k], variance);
        // in the contravariant case the arrows reverse: maps[k] feeds objects[k]
        let (incoming, outgoing) = match variance {
            Variance::Covariant => (&mats[k - 1], &mats[k]),
            Variance::Contravariant => (&mats[k], &mats[k - 1]),
        };
        let composite_zero = outgoing.mul(incoming).is_zero();
        if !composite_zero || incoming.rank() + outgoing.rank() != dim {
            failures.push(k);
        }
    }
    failures
}

/// Hom-exactness of an angle against every relevant test object.
pub fn check_hom_exactness(angle: &Angle) -> ExactnessReport {
    let params = *angle.params();
    let Some((lo, hi)) = angle.span() else {
        return ExactnessReport::default();
    };
    let n = params.slots();
    let mut objects = Vec::with_capacity(3 * n + 1);
    let mut maps = Vec::with_capacity(3 * n);
    for s in -1..=1 {
        let shifted = angle.shifted(s);
        objects.extend_from_slice(shifted.objects());
        maps.extend_from_slice(shifted.maps());
    }
    objects.push(angle.object(0).shifted(&params, 2));
    let interior: Vec<usize> = (1..3 * n).collect();

    // A test object further than l - 1 from every summand sees only zero Hom
    // spaces, so only the neighbourhoods of summands need checking.
    let window = (lo - params.period() - params.l() + 1)..=(hi + params.period());
    let candidates: BTreeSet<i64> = objects
        .iter()
        .flat_map(|o| o.positions().collect::<Vec<_>>())
        .flat_map(|q| (q - params.l() + 1)..=(q + params.l() - 1))
        .filter(|q| window.contains(q))
        .collect();

    let mut report = ExactnessReport::default();
    for pos in candidates {
        let t = IndecObject::at(pos);
        report.tested_objects += 1;
        for variance in [Variance::Covariant, Variance::Contravariant] {
            for k in exactness_failures(&params, &objects, &maps, t, variance, &interior) {
                report.failures.push(ExactnessFailure { test_object: t, variance, position: k });
            }
        }
    }
    report
}
