//! `(d+2)`-angles: `Σ^d`-sequences
//! `X^0 → X^1 → ⋯ → X^{d+1} → Σ^d X^0` and the constructions on them.

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::linalg::Q;
use crate::morphism::Morphism;
use crate::object::{IndecObject, SumObject};
use crate::params::FamilyParams;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Angle {
    params: FamilyParams,
    objects: Vec<SumObject>,
    maps: Vec<Morphism>,
}

impl Angle {
    /// Assembles a `Σ^d`-sequence, checking that `maps[k]` runs
    /// `objects[k] → objects[k+1]` and the last map ends at `Σ^d objects[0]`.
    pub fn new(params: &FamilyParams, objects: Vec<SumObject>, maps: Vec<Morphism>) -> Result<Self> {
        let n = params.slots();
        if objects.len() != n || maps.len() != n {
            return Err(Error::ShapeMismatch(format!(
                "an angle needs {n} objects and {n} maps, got {} and {}",
                objects.len(),
                maps.len()
            )));
        }
        for (k, map) in maps.iter().enumerate() {
            let target = if k + 1 < n { objects[k + 1].clone() } else { objects[0].shifted(params, 1) };
            if map.source() != &objects[k] || map.target() != &target || map.params() != params {
                return Err(Error::ShapeMismatch(format!("map {k} does not match its slots")));
            }
        }
        Ok(Angle { params: *params, objects, maps })
    }

    pub fn params(&self) -> &FamilyParams {
        &self.params
    }

    pub fn objects(&self) -> &[SumObject] {
        &self.objects
    }

    pub fn maps(&self) -> &[Morphism] {
        &self.maps
    }

    pub fn object(&self, k: usize) -> &SumObject {
        &self.objects[k]
    }

    pub fn map(&self, k: usize) -> &Morphism {
        &self.maps[k]
    }

    /// The map `X^{d+1} → Σ^d X^0`.
    pub fn connecting(&self) -> &Morphism {
        self.maps.last().expect("angles have d+2 maps")
    }

    /// Replaces one map, keeping the endpoints.
    pub fn with_map(&self, k: usize, map: Morphism) -> Result<Self> {
        let mut maps = self.maps.clone();
        maps[k] = map;
        Angle::new(&self.params, self.objects.clone(), maps)
    }

    /// Smallest and largest position of any summand.
    pub fn span(&self) -> Option<(i64, i64)> {
        let mut it = self.objects.iter().flat_map(|o| o.positions());
        let first = it.next()?;
        Some(it.fold((first, first), |(lo, hi), p| (lo.min(p), hi.max(p))))
    }

    /// Every consecutive composite vanishes, including the wrap-around
    /// `ξ^0 ∘ Σ^{-d} ξ^{d+1}`.
    pub fn is_complex(&self) -> bool {
        let n = self.maps.len();
        let consecutive =
            (0..n - 1).all(|k| self.maps[k + 1].compose(&self.maps[k]).map(|c| c.is_zero()).unwrap_or(false));
        let wrap = self.maps[0].compose(&self.maps[n - 1].shifted(-1)).map(|c| c.is_zero()).unwrap_or(false);
        consecutive && wrap
    }

    pub fn shifted(&self, r: i64) -> Self {
        Angle {
            params: self.params,
            objects: self.objects.iter().map(|o| o.shifted(&self.params, r)).collect(),
            maps: self.maps.iter().map(|m| m.shifted(r)).collect(),
        }
    }

    /// Left rotation
    /// `X^1 → ⋯ → X^{d+1} → Σ^d X^0 → Σ^d X^1` with last map `(−1)^d Σ^d ξ^0`;
    /// `d` is even, so the sign is `+1`.
    pub fn rotate_left(&self) -> Self {
        let mut objects: Vec<SumObject> = self.objects[1..].to_vec();
        objects.push(self.objects[0].shifted(&self.params, 1));
        let mut maps: Vec<Morphism> = self.maps[1..].to_vec();
        maps.push(self.maps[0].shifted(1));
        Angle { params: self.params, objects, maps }
    }

    /// Inverse of [`Angle::rotate_left`].
    pub fn rotate_right(&self) -> Self {
        let n = self.objects.len();
        let mut objects = vec![self.objects[n - 1].shifted(&self.params, -1)];
        objects.extend_from_slice(&self.objects[..n - 1]);
        let mut maps = vec![self.maps[n - 1].shifted(-1)];
        maps.extend_from_slice(&self.maps[..n - 1]);
        Angle { params: self.params, objects, maps }
    }

    /// Rotates left `k` times (right for negative `k`).
    pub fn rotate(&self, k: i64) -> Self {
        let mut a = self.clone();
        for _ in 0..k.unsigned_abs() {
            a = if k > 0 { a.rotate_left() } else { a.rotate_right() };
        }
        a
    }

    /// Number of slots holding a nonzero object.
    pub fn nonzero_slots(&self) -> usize {
        self.objects.iter().filter(|o| !o.is_zero()).count()
    }
}

/// Summand placements produced by [`direct_sum_all`]: `placement[b][k][j]` is
/// the index in slot `k` of the result occupied by summand `j` of slot `k`
/// of input `b`.
pub type Placement = Vec<Vec<Vec<usize>>>;

/// Slotwise direct sum with block-diagonal maps.
pub fn direct_sum(a: &Angle, b: &Angle) -> Result<Angle> {
    direct_sum_all(&[a, b]).map(|(s, _)| s)
}

pub fn direct_sum_all(parts: &[&Angle]) -> Result<(Angle, Placement)> {
    let Some(first) = parts.first() else {
        return Err(Error::ShapeMismatch("empty direct sum".into()));
    };
    let params = first.params;
    if parts.iter().any(|a| a.params != params) {
        return Err(Error::ShapeMismatch("angles over different parameters".into()));
    }
    let n = params.slots();
    let mut objects = Vec::with_capacity(n);
    let mut placement: Placement = vec![Vec::with_capacity(n); parts.len()];
    for k in 0..n {
        let slot: Vec<&SumObject> = parts.iter().map(|a| &a.objects[k]).collect();
        let (sum, place) = SumObject::merge(&slot);
        objects.push(sum);
        for (b, p) in place.into_iter().enumerate() {
            placement[b].push(p);
        }
    }
    let mut maps = Vec::with_capacity(n);
    for k in 0..n {
        let next = if k + 1 < n { k + 1 } else { 0 };
        let target = if k + 1 < n { objects[k + 1].clone() } else { objects[0].shifted(&params, 1) };
        let blocks: Vec<(&Morphism, &[usize], &[usize])> = parts
            .iter()
            .enumerate()
            .map(|(b, a)| (&a.maps[k], placement[b][k].as_slice(), placement[b][next].as_slice()))
            .collect();
        maps.push(Morphism::embed(&params, objects[k].clone(), target, &blocks));
    }
    Ok((Angle { params, objects, maps }, placement))
}

/// `x →1→ x → 0 → ⋯ → 0 → Σ^d x`.
pub fn trivial_angle(params: &FamilyParams, x: SumObject) -> Angle {
    let n = params.slots();
    let mut objects = vec![SumObject::zero(); n];
    objects[0] = x.clone();
    objects[1] = x.clone();
    let mut maps = vec![Morphism::identity(params, x.clone())];
    maps.push(Morphism::zero(params, x, SumObject::zero()));
    for _ in 2..n - 1 {
        maps.push(Morphism::zero(params, SumObject::zero(), SumObject::zero()));
    }
    maps.push(Morphism::zero(params, SumObject::zero(), objects[0].shifted(params, 1)));
    Angle { params: *params, objects, maps }
}

/// The all-zero angle.
pub fn zero_angle(params: &FamilyParams) -> Angle {
    trivial_angle(params, SumObject::zero())
}

fn indec_endpoints(mu: &Morphism) -> Result<(IndecObject, IndecObject, Q)> {
    let x = mu.source().as_indec().ok_or(Error::NotIndecomposable(mu.source().len()))?;
    let y = mu.target().as_indec().ok_or(Error::NotIndecomposable(mu.target().len()))?;
    Ok((x, y, mu.entry(0, 0).clone()))
}

/// Builds the angle on consecutive indecomposables at `positions` (sorted,
/// each gap in `[1, l-1]`) with canonical maps, except that `slot_map`
/// replaces the canonical map at the given slot.
fn chain_angle(
    params: &FamilyParams,
    positions: &[i64],
    connecting_scalar: Q,
    slot_map: Option<(usize, Morphism)>,
) -> Result<Angle> {
    let n = params.slots();
    debug_assert_eq!(positions.len(), n);
    let objects: Vec<SumObject> = positions.iter().map(|&p| SumObject::from(IndecObject::at(p))).collect();
    let mut maps = Vec::with_capacity(n);
    for k in 0..n - 1 {
        maps.push(Morphism::basis(params, IndecObject::at(positions[k]), IndecObject::at(positions[k + 1]))?);
    }
    let head = IndecObject::at(positions[0]).shifted(params, 1);
    maps.push(Morphism::basis(params, IndecObject::at(positions[n - 1]), head)?.scaled(&connecting_scalar));
    if let Some((k, m)) = slot_map {
        maps[k] = m;
    }
    Angle::new(params, objects, maps)
}

/// The minimal angle on a morphism `μ: x → y` between indecomposables.
///
/// For `Δ = pos(y) − pos(x)` in `[1, l−1]` the objects sit at the positions
/// `pos(y) − r·l` and `pos(x) − r·l` for `0 ≤ r ≤ d/2`, with `μ` in the slot
/// `X^d → X^{d+1}`; consecutive gaps alternate between `Δ` and `l − Δ`, so
/// every map is a nonzero canonical morphism and every composite of two
/// spans `l` positions and vanishes. For an isomorphism (`Δ = 0`) the result
/// is the contractible angle `x →μ→ y → 0 → ⋯ → Σ^d x`.
pub fn min_angle(mu: &Morphism) -> Result<Angle> {
    let params = *mu.params();
    let (x, y, scalar) = indec_endpoints(mu)?;
    let delta = y.pos - x.pos;
    if scalar.is_zero() || !(0..params.l()).contains(&delta) {
        return Err(Error::BadDistance(delta));
    }
    if delta == 0 {
        let n = params.slots();
        let mut objects = vec![SumObject::zero(); n];
        objects[0] = x.into();
        objects[1] = y.into();
        let mut maps = vec![mu.clone(), Morphism::zero(&params, y.into(), SumObject::zero())];
        for _ in 2..n - 1 {
            maps.push(Morphism::zero(&params, SumObject::zero(), SumObject::zero()));
        }
        maps.push(Morphism::zero(&params, SumObject::zero(), SumObject::from(x).shifted(&params, 1)));
        return Angle::new(&params, objects, maps);
    }
    let half = params.d() / 2;
    let mut positions: Vec<i64> = (0..=half).flat_map(|r| [y.pos - r * params.l(), x.pos - r * params.l()]).collect();
    positions.sort_unstable();
    chain_angle(&params, &positions, Q::one(), Some((params.slots() - 2, mu.clone())))
}

/// An angle `x → X^1 → ⋯ → X^d → y →δ→ Σ^d x` for an arbitrary morphism
/// `δ: y → Σ^d x`.
///
/// `δ` is first brought to monomial form `δ' = P δ Q` by automorphisms of
/// `Σ^d x` and `y`; the angle is then the direct sum of one block per
/// nonzero entry of `δ'` (a rotated minimal angle), a trivial angle per
/// unused summand of `x` and a rotated trivial angle per unused summand of
/// `y`, transported back along the automorphisms.
pub fn extend(delta: &Morphism) -> Result<Angle> {
    let params = *delta.params();
    let y = delta.source().clone();
    let sx = delta.target().clone();
    let x = sx.shifted(&params, -1);

    let reduced = Monomial::reduce(delta)?;
    let mut blocks: Vec<Angle> = Vec::new();
    // (x summand, y summand) carried by each block's X^0 and X^{d+1}
    let mut labels: Vec<(Option<usize>, Option<usize>)> = Vec::new();
    for &(i, j) in &reduced.pivots {
        let c = reduced.delta.entry(i, j).clone();
        let yj = y.summands()[j];
        let xi = x.summands()[i];
        let unit = Morphism::basis(&params, yj, sx.summands()[i])?.scaled(&c);
        let block = if yj.pos == sx.summands()[i].pos {
            split_connecting_block(&params, xi, yj, unit)?
        } else {
            min_angle(&unit)?.rotate_right()
        };
        blocks.push(block);
        labels.push((Some(i), Some(j)));
    }
    for i in (0..x.len()).filter(|i| !reduced.pivots.iter().any(|p| p.0 == *i)) {
        blocks.push(trivial_angle(&params, x.summands()[i].into()));
        labels.push((Some(i), None));
    }
    for j in (0..y.len()).filter(|j| !reduced.pivots.iter().any(|p| p.1 == *j)) {
        let base = SumObject::from(y.summands()[j]).shifted(&params, -1);
        blocks.push(trivial_angle(&params, base).rotate(2));
        labels.push((None, Some(j)));
    }
    if blocks.is_empty() {
        return Ok(zero_angle(&params));
    }
    let refs: Vec<&Angle> = blocks.iter().collect();
    let (sum, placement) = direct_sum_all(&refs)?;
    let last = params.slots() - 1;

    // permutation isos x → X'^0 and y → X'^{d+1}
    let mut pi0 = Morphism::zero(&params, x.clone(), sum.objects[0].clone());
    let mut pi_end = Morphism::zero(&params, y.clone(), sum.objects[last].clone());
    for (b, (i, j)) in labels.iter().enumerate() {
        if let Some(i) = i {
            pi0.set_entry(placement[b][0][0], *i, Q::one());
        }
        if let Some(j) = j {
            pi_end.set_entry(placement[b][last][0], *j, Q::one());
        }
    }
    let pi0_inv = transpose_permutation(&params, &pi0);
    let pi_end_inv = transpose_permutation(&params, &pi_end);

    // ψ: X'^0 → x with Σ^d ψ = P^{-1} ∘ Σ^d π0^{-1};  φ: X'^{d+1} → y with φ = Q ∘ π_end^{-1}
    let psi = reduced.p_inv.shifted(-1).compose(&pi0_inv)?;
    let psi_inv = pi0.compose(&reduced.p.shifted(-1))?;
    let phi = reduced.q.compose(&pi_end_inv)?;
    let phi_inv = pi_end.compose(&reduced.q_inv)?;

    let mut objects = sum.objects.clone();
    objects[0] = x;
    objects[last] = y;
    let mut maps = sum.maps.clone();
    maps[0] = maps[0].compose(&psi_inv)?;
    maps[last - 1] = phi.compose(&maps[last - 1])?;
    maps[last] = psi.shifted(1).compose(&maps[last].compose(&phi_inv)?)?;
    let out = Angle::new(&params, objects, maps)?;
    debug_assert_eq!(out.connecting(), delta);
    Ok(out)
}

/// `x → 0 → ⋯ → 0 → y` with an isomorphism `y → Σ^d x` as connecting map.
fn split_connecting_block(params: &FamilyParams, x: IndecObject, y: IndecObject, iso: Morphism) -> Result<Angle> {
    let n = params.slots();
    let mut objects = vec![SumObject::zero(); n];
    objects[0] = x.into();
    objects[n - 1] = y.into();
    let mut maps = vec![Morphism::zero(params, x.into(), SumObject::zero())];
    for _ in 1..n - 2 {
        maps.push(Morphism::zero(params, SumObject::zero(), SumObject::zero()));
    }
    maps.push(Morphism::zero(params, SumObject::zero(), y.into()));
    maps.push(iso);
    Angle::new(params, objects, maps)
}

fn transpose_permutation(params: &FamilyParams, pi: &Morphism) -> Morphism {
    let mut out = Morphism::zero(params, pi.target().clone(), pi.source().clone());
    for r in 0..pi.target().len() {
        for c in 0..pi.source().len() {
            if !pi.entry(r, c).is_zero() {
                out.set_entry(c, r, pi.entry(r, c).clone());
            }
        }
    }
    out
}

/// `δ' = P ∘ δ ∘ Q` with at most one nonzero entry per row and column.
struct Monomial {
    delta: Morphism,
    pivots: Vec<(usize, usize)>,
    p: Morphism,
    p_inv: Morphism,
    q: Morphism,
    q_inv: Morphism,
}

impl Monomial {
    /// Pivot choice: among unpivoted entries take the lowest target position,
    /// then the highest source position in that row. Column operations then
    /// clear the row (they only move along morphisms `y_{j''} → y_j` that the
    /// row's support guarantees), and row operations clear the column.
    fn reduce(delta: &Morphism) -> Result<Self> {
        let params = *delta.params();
        let (y, t) = (delta.source().clone(), delta.target().clone());
        let mut cur = delta.clone();
        let mut p = Morphism::identity(&params, t.clone());
        let mut p_inv = p.clone();
        let mut q = Morphism::identity(&params, y.clone());
        let mut q_inv = q.clone();
        let mut row_done = vec![false; t.len()];
        let mut col_done = vec![false; y.len()];
        let mut pivots = Vec::new();
        loop {
            let mut best: Option<(usize, usize)> = None;
            for i in (0..t.len()).filter(|&i| !row_done[i]) {
                for j in (0..y.len()).filter(|&j| !col_done[j]) {
                    if cur.entry(i, j).is_zero() {
                        continue;
                    }
                    let better = match best {
                        None => true,
                        Some((bi, bj)) => {
                            let (ti, tb) = (t.summands()[i].pos, t.summands()[bi].pos);
                            ti < tb || (ti == tb && i == bi && y.summands()[j].pos > y.summands()[bj].pos)
                        }
                    };
                    if better {
                        best = Some((i, j));
                    }
                }
            }
            let Some((i, j)) = best else { break };
            let pivot = cur.entry(i, j).clone();
            for jj in (0..y.len()).filter(|&jj| jj != j && !col_done[jj]) {
                let v = cur.entry(i, jj).clone();
                if v.is_zero() {
                    continue;
                }
                let c = -(&v / &pivot);
                let e = Morphism::identity(&params, y.clone()).add(&Morphism::single(
                    &params,
                    y.clone(),
                    y.clone(),
                    j,
                    jj,
                    c.clone(),
                )?)?;
                let e_inv = Morphism::identity(&params, y.clone()).add(&Morphism::single(
                    &params,
                    y.clone(),
                    y.clone(),
                    j,
                    jj,
                    -c,
                )?)?;
                cur = cur.compose(&e)?;
                q = q.compose(&e)?;
                q_inv = e_inv.compose(&q_inv)?;
            }
            for ii in (0..t.len()).filter(|&ii| ii != i && !row_done[ii]) {
                let v = cur.entry(ii, j).clone();
                if v.is_zero() {
                    continue;
                }
                let c = -(&v / &pivot);
                let e = Morphism::identity(&params, t.clone()).add(&Morphism::single(
                    &params,
                    t.clone(),
                    t.clone(),
                    ii,
                    i,
                    c.clone(),
                )?)?;
                let e_inv = Morphism::identity(&params, t.clone()).add(&Morphism::single(
                    &params,
                    t.clone(),
                    t.clone(),
                    ii,
                    i,
                    -c,
                )?)?;
                cur = e.compose(&cur)?;
                p = e.compose(&p)?;
                p_inv = p_inv.compose(&e_inv)?;
            }
            row_done[i] = true;
            col_done[j] = true;
            pivots.push((i, j));
        }
        Ok(Monomial { delta: cur, pivots, p, p_inv, q, q_inv })
    }
}
