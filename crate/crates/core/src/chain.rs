//! `d`-kernels, `d`-cokernels and `d`-exact sequences in the higher module
//! category `F` (indices `1..=period`, shift zero).
//!
//! For `μ: f_i → f_j` with `1 ≤ j − i ≤ l − 1` the relevant chain is the
//! alternating sequence `⋯ → f_{i−l} → f_{j−l} → f_i → f_j → f_{i+l} → f_{j+l} → ⋯`
//! cut down to the fundamental window.

use crate::error::{Error, Result};
use crate::exactness::{exactness_failures, Variance};
use crate::morphism::Morphism;
use crate::object::{IndecObject, SumObject};
use crate::params::FamilyParams;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ChainKind {
    /// `A^0 → ⋯ → A^d`, a `d`-kernel of `μ: A^d → A^{d+1}`.
    Kernel,
    /// `A^1 → ⋯ → A^{d+1}`, a `d`-cokernel of `μ: A^0 → A^1`.
    Cokernel,
    /// `0 → A^0 → ⋯ → A^{d+1} → 0`.
    Exact,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FLevelChain {
    pub kind: ChainKind,
    /// `d + 1` objects for kernels and cokernels, `d + 2` for exact sequences.
    pub objects: Vec<SumObject>,
    /// Maps between consecutive objects.
    pub maps: Vec<Morphism>,
    /// The morphism the chain was built from.
    pub morphism: Morphism,
}

fn check_input(mu: &Morphism) -> Result<(FamilyParams, IndecObject, IndecObject)> {
    let params = *mu.params();
    let x = mu.source().as_indec().ok_or(Error::NotIndecomposable(mu.source().len()))?;
    let y = mu.target().as_indec().ok_or(Error::NotIndecomposable(mu.target().len()))?;
    for z in [x, y] {
        if !(1..=params.period()).contains(&z.pos) {
            return Err(Error::OutOfWindow(z.pos));
        }
    }
    let delta = y.pos - x.pos;
    if mu.is_zero() || !(1..params.l()).contains(&delta) {
        return Err(Error::BadDistance(delta));
    }
    Ok((params, x, y))
}

/// Positions `i + r·l` and `j + r·l` inside `[1, period]`, sorted.
fn full_chain(params: &FamilyParams, i: i64, j: i64) -> Vec<i64> {
    let l = params.l();
    let mut out: Vec<i64> =
        (1..=params.period()).filter(|p| (p - i).rem_euclid(l) == 0 || (p - j).rem_euclid(l) == 0).collect();
    out.sort_unstable();
    out
}

/// Canonical maps between consecutive slots, with `mu` at `mu_slot`.
fn chain_maps(params: &FamilyParams, objects: &[SumObject], mu: &Morphism, mu_slot: Option<usize>) -> Vec<Morphism> {
    objects
        .windows(2)
        .enumerate()
        .map(|(k, w)| {
            if Some(k) == mu_slot {
                return mu.clone();
            }
            match (w[0].as_indec(), w[1].as_indec()) {
                (Some(a), Some(b)) => Morphism::basis(params, a, b).expect("chain gaps stay below l"),
                _ => Morphism::zero(params, w[0].clone(), w[1].clone()),
            }
        })
        .collect()
}

fn as_objects(positions: &[i64]) -> Vec<SumObject> {
    positions.iter().map(|&p| SumObject::from(IndecObject::at(p))).collect()
}

pub fn d_kernel(mu: &Morphism) -> Result<FLevelChain> {
    let (params, x, y) = check_input(mu)?;
    let left: Vec<i64> = full_chain(&params, x.pos, y.pos).into_iter().filter(|&p| p <= x.pos).collect();
    let slots = params.d() as usize + 1;
    let mut objects = vec![SumObject::zero(); slots - left.len()];
    objects.extend(as_objects(&left));
    let maps = chain_maps(&params, &objects, mu, None);
    Ok(FLevelChain { kind: ChainKind::Kernel, objects, maps, morphism: mu.clone() })
}

pub fn d_cokernel(mu: &Morphism) -> Result<FLevelChain> {
    let (params, x, y) = check_input(mu)?;
    let right: Vec<i64> = full_chain(&params, x.pos, y.pos).into_iter().filter(|&p| p >= y.pos).collect();
    let slots = params.d() as usize + 1;
    let mut objects = as_objects(&right);
    objects.resize(slots, SumObject::zero());
    let maps = chain_maps(&params, &objects, mu, None);
    Ok(FLevelChain { kind: ChainKind::Cokernel, objects, maps, morphism: mu.clone() })
}

pub fn d_exact_seq(mu: &Morphism) -> Result<FLevelChain> {
    let (params, x, y) = check_input(mu)?;
    let positions = full_chain(&params, x.pos, y.pos);
    let objects = as_objects(&positions);
    let mu_slot = positions.iter().position(|&p| p == x.pos);
    let maps = chain_maps(&params, &objects, mu, mu_slot);
    Ok(FLevelChain { kind: ChainKind::Exact, objects, maps, morphism: mu.clone() })
}

impl FLevelChain {
    pub fn nonzero_terms(&self) -> usize {
        self.objects.iter().filter(|o| !o.is_zero()).count()
    }

    /// Exactness under `Hom(f_t, −)` (kernel side) and `Hom(−, f_t)`
    /// (cokernel side) for every `t` in `[1, period]`. Returns the failing
    /// `(t, variance, position)` triples; empty means the chain is a
    /// `d`-kernel / `d`-cokernel / `d`-exact sequence.
    pub fn exactness_failures(&self) -> Vec<(i64, Variance, usize)> {
        let params = *self.morphism.params();
        let zero = SumObject::zero();
        let mut out = Vec::new();
        // kernel side: 0 → A^0 → ⋯ → A^d → A^{d+1}, exact at A^0..A^d
        let kernel_side = match self.kind {
            ChainKind::Kernel => {
                let mut objs = vec![zero.clone()];
                objs.extend(self.objects.iter().cloned());
                objs.push(self.morphism.target().clone());
                let mut maps = vec![Morphism::zero(&params, zero.clone(), objs[1].clone())];
                maps.extend(self.maps.iter().cloned());
                maps.push(self.morphism.clone());
                Some((objs, maps))
            }
            ChainKind::Exact => {
                let mut objs = vec![zero.clone()];
                objs.extend(self.objects.iter().cloned());
                let mut maps = vec![Morphism::zero(&params, zero.clone(), objs[1].clone())];
                maps.extend(self.maps.iter().cloned());
                Some((objs, maps))
            }
            ChainKind::Cokernel => None,
        };
        if let Some((objs, maps)) = kernel_side {
            let d = params.d() as usize;
            let check: Vec<usize> = (1..=d + 1).collect();
            for t in 1..=params.period() {
                for k in exactness_failures(&params, &objs, &maps, IndecObject::at(t), Variance::Covariant, &check) {
                    out.push((t, Variance::Covariant, k));
                }
            }
        }
        // cokernel side: A^0 → A^1 → ⋯ → A^{d+1} → 0, exact at A^1..A^{d+1}
        let cokernel_side = match self.kind {
            ChainKind::Cokernel => {
                let mut objs = vec![self.morphism.source().clone()];
                objs.extend(self.objects.iter().cloned());
                objs.push(zero.clone());
                let mut maps = vec![self.morphism.clone()];
                maps.extend(self.maps.iter().cloned());
                maps.push(Morphism::zero(&params, objs[objs.len() - 2].clone(), zero.clone()));
                Some((objs, maps))
            }
            ChainKind::Exact => {
                let mut objs = self.objects.clone();
                objs.push(zero.clone());
                let mut maps = self.maps.clone();
                maps.push(Morphism::zero(&params, objs[objs.len() - 2].clone(), zero.clone()));
                Some((objs, maps))
            }
            ChainKind::Kernel => None,
        };
        if let Some((objs, maps)) = cokernel_side {
            let d = params.d() as usize;
            let check: Vec<usize> = (1..=d + 1).collect();
            for t in 1..=params.period() {
                for k in exactness_failures(&params, &objs, &maps, IndecObject::at(t), Variance::Contravariant, &check)
                {
                    out.push((t, Variance::Contravariant, k));
                }
            }
        }
        out
    }
}
