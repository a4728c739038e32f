//! Morphisms between finite sums of indecomposables.
//!
//! Every Hom space between indecomposables is at most one-dimensional:
//! `Hom(x, y) ≠ 0` iff `0 ≤ pos(y) − pos(x) ≤ l − 1`. Each nonzero space is
//! spanned by a canonical morphism `u_{x→y}`, and these compose by
//! `u_{y→z} ∘ u_{x→y} = u_{x→z}` when `pos(z) − pos(x) ≤ l − 1` and `0`
//! otherwise (the composite of `l` consecutive arrows vanishes). A morphism
//! between sums is then a rational matrix whose `(y, x)` entry is the
//! coefficient of `u_{x→y}`.

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::linalg::{QMatrix, Q};
use crate::object::{IndecObject, SumObject};
use crate::params::FamilyParams;

/// Dimension of `Hom(x, y)`, either 0 or 1.
pub fn hom_dim(params: &FamilyParams, x: IndecObject, y: IndecObject) -> u8 {
    let delta = y.pos - x.pos;
    u8::from((0..params.l()).contains(&delta))
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Morphism {
    params: FamilyParams,
    source: SumObject,
    target: SumObject,
    /// Indexed `(target summand, source summand)`.
    entries: QMatrix,
}

impl Morphism {
    /// Builds a morphism from a row-per-target-summand matrix, rejecting
    /// nonzero entries outside the Hom support.
    pub fn new(params: &FamilyParams, source: SumObject, target: SumObject, entries: Vec<Vec<Q>>) -> Result<Self> {
        if entries.len() != target.len() || entries.iter().any(|r| r.len() != source.len()) {
            return Err(Error::ShapeMismatch(format!("expected a {}x{} matrix", target.len(), source.len())));
        }
        let entries = QMatrix::from_rows(target.len(), source.len(), entries);
        for (r, y) in target.summands().iter().enumerate() {
            for (c, x) in source.summands().iter().enumerate() {
                if !entries[(r, c)].is_zero() && hom_dim(params, *x, *y) == 0 {
                    return Err(Error::ZeroHom { from: x.pos, to: y.pos });
                }
            }
        }
        Ok(Morphism { params: *params, source, target, entries })
    }

    pub fn zero(params: &FamilyParams, source: SumObject, target: SumObject) -> Self {
        let entries = QMatrix::zeros(target.len(), source.len());
        Morphism { params: *params, source, target, entries }
    }

    pub fn identity(params: &FamilyParams, object: SumObject) -> Self {
        let n = object.len();
        let mut entries = QMatrix::zeros(n, n);
        for i in 0..n {
            entries[(i, i)] = Q::one();
        }
        Morphism { params: *params, source: object.clone(), target: object, entries }
    }

    /// The canonical basis morphism `u_{x→y}`.
    pub fn basis(params: &FamilyParams, x: IndecObject, y: IndecObject) -> Result<Self> {
        if hom_dim(params, x, y) == 0 {
            return Err(Error::ZeroHom { from: x.pos, to: y.pos });
        }
        let mut entries = QMatrix::zeros(1, 1);
        entries[(0, 0)] = Q::one();
        Ok(Morphism { params: *params, source: x.into(), target: y.into(), entries })
    }

    /// The standard basis of `Hom(source, target)`: one matrix unit per
    /// supported entry, in row-major order.
    pub fn hom_basis(params: &FamilyParams, source: &SumObject, target: &SumObject) -> Vec<Self> {
        Self::support(params, source, target)
            .into_iter()
            .map(|(r, c)| {
                let mut m = Morphism::zero(params, source.clone(), target.clone());
                m.entries[(r, c)] = Q::one();
                m
            })
            .collect()
    }

    /// Positions `(row, col)` where a morphism `source → target` may be nonzero.
    pub fn support(params: &FamilyParams, source: &SumObject, target: &SumObject) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for (r, y) in target.summands().iter().enumerate() {
            for (c, x) in source.summands().iter().enumerate() {
                if hom_dim(params, *x, *y) == 1 {
                    out.push((r, c));
                }
            }
        }
        out
    }

    pub fn params(&self) -> &FamilyParams {
        &self.params
    }

    pub fn source(&self) -> &SumObject {
        &self.source
    }

    pub fn target(&self) -> &SumObject {
        &self.target
    }

    pub fn entry(&self, row: usize, col: usize) -> &Q {
        &self.entries[(row, col)]
    }

    pub fn entries(&self) -> &QMatrix {
        &self.entries
    }

    pub fn rows(&self) -> Vec<Vec<Q>> {
        (0..self.target.len()).map(|r| (0..self.source.len()).map(|c| self.entries[(r, c)].clone()).collect()).collect()
    }

    pub fn is_zero(&self) -> bool {
        self.entries.is_zero()
    }

    pub fn scaled(&self, c: &Q) -> Self {
        let mut out = self.clone();
        for r in 0..self.target.len() {
            for k in 0..self.source.len() {
                out.entries[(r, k)] = &self.entries[(r, k)] * c;
            }
        }
        out
    }

    pub fn add(&self, other: &Morphism) -> Result<Self> {
        if self.source != other.source || self.target != other.target {
            return Err(Error::ShapeMismatch("sum of morphisms with different endpoints".into()));
        }
        let mut out = self.clone();
        for r in 0..self.target.len() {
            for k in 0..self.source.len() {
                out.entries[(r, k)] += &other.entries[(r, k)];
            }
        }
        Ok(out)
    }

    /// `self ∘ f`.
    pub fn compose(&self, f: &Morphism) -> Result<Self> {
        if f.target != self.source {
            return Err(Error::ShapeMismatch(format!(
                "cannot compose: target {:?} of the first map differs from source {:?} of the second",
                f.target.positions().collect::<Vec<_>>(),
                self.source.positions().collect::<Vec<_>>()
            )));
        }
        if f.params != self.params {
            return Err(Error::ShapeMismatch("morphisms over different parameters".into()));
        }
        let mut prod = self.entries.mul(&f.entries);
        let reach = self.params.l() - 1;
        for (r, z) in self.target.summands().iter().enumerate() {
            for (c, x) in f.source.summands().iter().enumerate() {
                if z.pos - x.pos > reach {
                    prod[(r, c)] = Q::zero();
                }
            }
        }
        Ok(Morphism { params: self.params, source: f.source.clone(), target: self.target.clone(), entries: prod })
    }

    /// Applies `Σ^{r·d}`: positions move by `r` periods, entries are unchanged.
    pub fn shifted(&self, r: i64) -> Self {
        Morphism {
            params: self.params,
            source: self.source.shifted(&self.params, r),
            target: self.target.shifted(&self.params, r),
            entries: self.entries.clone(),
        }
    }

    /// No component between isomorphic indecomposables is invertible.
    pub fn is_radical(&self) -> bool {
        for (r, y) in self.target.summands().iter().enumerate() {
            for (c, x) in self.source.summands().iter().enumerate() {
                if y.pos == x.pos && !self.entries[(r, c)].is_zero() {
                    return false;
                }
            }
        }
        true
    }

    /// Coordinates in [`Morphism::hom_basis`].
    fn coords(&self) -> Vec<Q> {
        Self::support(&self.params, &self.source, &self.target)
            .into_iter()
            .map(|(r, c)| self.entries[(r, c)].clone())
            .collect()
    }

    fn from_coords(params: &FamilyParams, source: &SumObject, target: &SumObject, coords: &[Q]) -> Self {
        let mut m = Morphism::zero(params, source.clone(), target.clone());
        for ((r, c), v) in Self::support(params, source, target).into_iter().zip(coords) {
            m.entries[(r, c)] = v.clone();
        }
        m
    }

    /// Finds `g` with `self ∘ g = f` (a lift of `f` along `self`).
    pub fn lift(&self, f: &Morphism) -> Option<Morphism> {
        if f.target != self.target {
            return None;
        }
        let basis = Self::hom_basis(&self.params, &f.source, &self.source);
        let images: Vec<Vec<Q>> = basis.iter().map(|g| self.compose(g).expect("shapes agree").coords()).collect();
        let rows = Self::support(&self.params, &f.source, &f.target).len();
        let system = QMatrix::from_cols(rows, &images);
        let sol = system.solve(&f.coords())?;
        Some(Self::from_coords(&self.params, &f.source, &self.source, &sol))
    }

    /// Finds `h` with `h ∘ self = f` (an extension of `f` along `self`).
    pub fn colift(&self, f: &Morphism) -> Option<Morphism> {
        if f.source != self.source {
            return None;
        }
        let basis = Self::hom_basis(&self.params, &self.target, &f.target);
        let images: Vec<Vec<Q>> = basis.iter().map(|h| h.compose(self).expect("shapes agree").coords()).collect();
        let rows = Self::support(&self.params, &f.source, &f.target).len();
        let system = QMatrix::from_cols(rows, &images);
        let sol = system.solve(&f.coords())?;
        Some(Self::from_coords(&self.params, &self.target, &f.target, &sol))
    }

    /// A section `g` with `self ∘ g = id` exists.
    pub fn is_split_epi(&self) -> bool {
        self.lift(&Morphism::identity(&self.params, self.target.clone())).is_some()
    }

    /// A retraction `g` with `g ∘ self = id` exists.
    pub fn is_split_mono(&self) -> bool {
        self.colift(&Morphism::identity(&self.params, self.source.clone())).is_some()
    }

    pub fn is_iso(&self) -> bool {
        self.source.len() == self.target.len() && self.is_split_epi() && self.is_split_mono()
    }

    /// Every endomorphism `φ` of the source with `self ∘ φ = self` is invertible.
    ///
    /// The set of such `φ` is `1 + K` with `K = {ψ : self ∘ ψ = 0}` a right
    /// ideal of `End(source)`, and `1 + K` consists of units iff `K` lies in
    /// the radical. The radical is a subspace, so checking a basis of `K`
    /// suffices.
    pub fn is_right_minimal(&self) -> bool {
        self.annihilator_basis(true).iter().all(Morphism::is_radical)
    }

    /// Dual of [`Morphism::is_right_minimal`].
    pub fn is_left_minimal(&self) -> bool {
        self.annihilator_basis(false).iter().all(Morphism::is_radical)
    }

    fn annihilator_basis(&self, right: bool) -> Vec<Morphism> {
        let obj = if right { &self.source } else { &self.target };
        let basis = Self::hom_basis(&self.params, obj, obj);
        let images: Vec<Vec<Q>> = basis
            .iter()
            .map(|psi| {
                let prod = if right { self.compose(psi) } else { psi.compose(self) };
                prod.expect("shapes agree").coords()
            })
            .collect();
        let rows = Self::support(&self.params, &self.source, &self.target).len();
        QMatrix::from_cols(rows, &images)
            .kernel()
            .into_iter()
            .map(|v| Self::from_coords(&self.params, obj, obj, &v))
            .collect()
    }

    /// Places several morphisms block-diagonally into `source → target`.
    /// Each part comes with the summand indices its source and target occupy.
    pub fn embed(
        params: &FamilyParams,
        source: SumObject,
        target: SumObject,
        parts: &[(&Morphism, &[usize], &[usize])],
    ) -> Self {
        let mut out = Morphism::zero(params, source, target);
        for (m, src_place, tgt_place) in parts {
            for r in 0..m.target.len() {
                for c in 0..m.source.len() {
                    let v = &m.entries[(r, c)];
                    if !v.is_zero() {
                        out.entries[(tgt_place[r], src_place[c])] = v.clone();
                    }
                }
            }
        }
        out
    }

    /// Matrix unit style constructor: one entry `value` at `(row, col)`.
    pub fn single(
        params: &FamilyParams,
        source: SumObject,
        target: SumObject,
        row: usize,
        col: usize,
        value: Q,
    ) -> Result<Self> {
        let mut m = Morphism::zero(params, source, target);
        let (x, y) = (m.source.summands()[col], m.target.summands()[row]);
        if !value.is_zero() && hom_dim(params, x, y) == 0 {
            return Err(Error::ZeroHom { from: x.pos, to: y.pos });
        }
        m.entries[(row, col)] = value;
        Ok(m)
    }

    pub(crate) fn set_entry(&mut self, row: usize, col: usize, value: Q) {
        self.entries[(row, col)] = value;
    }
}

/// `g ∘ f`.
pub fn compose(g: &Morphism, f: &Morphism) -> Result<Morphism> {
    g.compose(f)
}

/// Morphisms that can be translated by `Σ^{r·d}`.
pub trait Shift {
    fn shift(&self, params: &FamilyParams, r: i64) -> Self;
}

impl Shift for IndecObject {
    fn shift(&self, params: &FamilyParams, r: i64) -> Self {
        self.shifted(params, r)
    }
}

impl Shift for SumObject {
    fn shift(&self, params: &FamilyParams, r: i64) -> Self {
        self.shifted(params, r)
    }
}

impl Shift for Morphism {
    fn shift(&self, _params: &FamilyParams, r: i64) -> Self {
        self.shifted(r)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::q;

    fn p449() -> FamilyParams {
        FamilyParams::new(4, 4, 9).unwrap()
    }

    fn at(pos: i64) -> IndecObject {
        IndecObject::at(pos)
    }

    #[test]
    fn hom_dim_examples() {
        let p = p449();
        assert_eq!(hom_dim(&p, at(1), at(4)), 1);
        assert_eq!(hom_dim(&p, at(7), at(7)), 1);
        assert_eq!(hom_dim(&p, at(12), IndecObject::f(&p, 1, 2)), 1);
        assert_eq!(hom_dim(&p, at(1), at(5)), 0);
        assert_eq!(hom_dim(&p, at(5), at(1)), 0);
    }

    #[test]
    fn basis_examples() {
        let p = p449();
        let u = Morphism::basis(&p, at(1), at(2)).unwrap();
        assert_eq!(u.entry(0, 0), &q(1));
        assert_eq!(Morphism::basis(&p, at(1), at(5)), Err(Error::ZeroHom { from: 1, to: 5 }));
        let v = Morphism::basis(&p, IndecObject::f(&p, -1, 12), at(1)).unwrap();
        assert_eq!(v.source().as_indec(), Some(at(0)));
    }

    #[test]
    fn compose_examples() {
        let p = p449();
        let u12 = Morphism::basis(&p, at(1), at(2)).unwrap();
        let u23 = Morphism::basis(&p, at(2), at(3)).unwrap();
        assert_eq!(compose(&u23, &u12).unwrap(), Morphism::basis(&p, at(1), at(3)).unwrap());
        let u14 = Morphism::basis(&p, at(1), at(4)).unwrap();
        let u45 = Morphism::basis(&p, at(4), at(5)).unwrap();
        let zero = compose(&u45, &u14).unwrap();
        assert!(zero.is_zero());
        assert_eq!(zero.source(), &SumObject::from(at(1)));
        let id = Morphism::identity(&p, at(1).into());
        assert_eq!(compose(&u12, &id).unwrap(), u12);
        assert!(matches!(compose(&u12, &u45), Err(Error::ShapeMismatch(_))));
    }

    #[test]
    fn shift_examples() {
        let p = p449();
        let u = Morphism::basis(&p, at(4), at(5)).unwrap();
        assert_eq!(u.shifted(-1), Morphism::basis(&p, at(-8), at(-7)).unwrap());
        assert_eq!(u.shifted(1).shifted(-1), u);
    }

    #[test]
    fn radical_examples() {
        let p = p449();
        assert!(Morphism::basis(&p, at(1), at(2)).unwrap().is_radical());
        assert!(!Morphism::identity(&p, at(1).into()).is_radical());
        let two = SumObject::from_positions([1, 1]);
        let diag = Morphism::new(&p, two.clone(), two, vec![vec![q(0), q(0)], vec![q(0), q(1)]]).unwrap();
        assert!(!diag.is_radical());
    }

    #[test]
    fn split_examples() {
        let p = p449();
        let id = Morphism::identity(&p, SumObject::from_positions([1, 2]));
        assert!(id.is_split_epi() && id.is_split_mono() && id.is_iso());
        let u = Morphism::basis(&p, at(1), at(2)).unwrap();
        assert!(!u.is_split_epi() && !u.is_split_mono() && !u.is_iso());
        let proj = Morphism::new(&p, SumObject::from_positions([1, 2]), at(1).into(), vec![vec![q(1), q(0)]]).unwrap();
        assert!(proj.is_split_epi());
        assert!(!proj.is_split_mono());
        assert!(!proj.is_iso());
    }

    #[test]
    fn support_rule_enforced() {
        let p = p449();
        let bad = Morphism::new(&p, at(1).into(), at(5).into(), vec![vec![q(1)]]);
        assert_eq!(bad, Err(Error::ZeroHom { from: 1, to: 5 }));
        let bad_shape = Morphism::new(&p, at(1).into(), at(2).into(), vec![]);
        assert!(matches!(bad_shape, Err(Error::ShapeMismatch(_))));
    }

    #[test]
    fn right_minimal_examples() {
        let p = p449();
        assert!(Morphism::identity(&p, at(3).into()).is_right_minimal());
        assert!(Morphism::basis(&p, at(1), at(2)).unwrap().is_right_minimal());
        let pair = Morphism::new(&p, SumObject::from_positions([1, 1]), at(2).into(), vec![vec![q(1), q(0)]]).unwrap();
        assert!(!pair.is_right_minimal());
        // a zero map out of a nonzero object is never right minimal
        assert!(!Morphism::zero(&p, at(1).into(), at(2).into()).is_right_minimal());
        assert!(Morphism::zero(&p, SumObject::zero(), at(2).into()).is_right_minimal());
    }

    #[test]
    fn lift_and_colift() {
        let p = p449();
        let u14 = Morphism::basis(&p, at(1), at(4)).unwrap();
        let u24 = Morphism::basis(&p, at(2), at(4)).unwrap();
        let u12 = Morphism::basis(&p, at(1), at(2)).unwrap();
        assert_eq!(u24.lift(&u14), Some(u12.clone()));
        assert!(u14.lift(&u24).is_none());
        assert_eq!(u12.colift(&u14), Some(u24));
    }
}
