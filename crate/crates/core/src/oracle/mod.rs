//! Brute-force ground truth: submodule lattices by enumeration and direct
//! quantifier checks of every definitional predicate.

use std::collections::BTreeSet;
use std::sync::Arc;

use crate::error::{Error, Result};
use crate::exactla::Subspace;
use crate::flmod::{
    colon_sub, hom_space, ideal_module, min_generators, mult_sub, pull_back, quotient, FinModule, Submodule,
};
use crate::ring::{close_under, FiniteLocalAlgebra, Ideal};

pub mod catalog;
pub mod verify;

pub use catalog::{Catalog, CatalogRing, NamedModule};
pub use verify::{verify, Budgets, CaseResult, VerificationReport, Verdict, THEOREM_IDS};

/// Default bound on `p^dim` for lattice enumeration (covers `p = 2, dim ≤ 8` and `p = 3, dim ≤ 5`).
pub const DEFAULT_LATTICE_BUDGET: u128 = 256;
/// Default bound on `p^dim Hom` for the generation oracle.
pub const DEFAULT_HOM_BUDGET: u128 = 1 << 16;

fn power_count(p: u8, d: usize) -> u128 {
    (p as u128).checked_pow(d as u32).unwrap_or(u128::MAX)
}

/// All submodules of a module, in canonical order (by dimension, then reduced basis).
#[derive(Clone, Debug)]
pub struct SubmoduleLattice {
    module: Arc<FinModule>,
    members: Vec<Submodule>,
}

impl SubmoduleLattice {
    pub fn module(&self) -> &Arc<FinModule> {
        &self.module
    }

    pub fn members(&self) -> &[Submodule] {
        &self.members
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    pub fn index_of(&self, s: &Submodule) -> Option<usize> {
        self.members.iter().position(|m| m == s)
    }

    /// Pairwise comparability. Members are sorted by dimension, so a chain is
    /// exactly a strictly increasing sequence of inclusions.
    pub fn is_totally_ordered(&self) -> bool {
        self.members
            .windows(2)
            .all(|w| w[0].dim() < w[1].dim() && w[1].contains(&w[0]).unwrap_or(false))
    }

    /// Covering pairs `(i, j)`: `members[i] ⊊ members[j]` with nothing strictly between.
    pub fn hasse(&self) -> Vec<(usize, usize)> {
        let n = self.members.len();
        let below = |i: usize, j: usize| {
            self.members[i].dim() < self.members[j].dim() && self.members[j].contains(&self.members[i]).unwrap_or(false)
        };
        let mut out = Vec::new();
        for j in 0..n {
            for i in 0..n {
                if below(i, j) && !(0..n).any(|k| below(i, k) && below(k, j)) {
                    out.push((i, j));
                }
            }
        }
        out
    }

    /// Closed under sum and intersection, with `0` and `M` present.
    pub fn is_closed(&self) -> bool {
        let has = |s: &Submodule| self.index_of(s).is_some();
        has(&Submodule::zero(&self.module))
            && has(&Submodule::full(&self.module))
            && self.members.iter().all(|a| {
                self.members.iter().all(|b| {
                    a.sum(b).map(|s| has(&s)).unwrap_or(false) && a.intersect(b).map(|s| has(&s)).unwrap_or(false)
                })
            })
    }

    /// The members as ideals, when the module is the regular representation.
    pub fn ideals(&self, ring: &Arc<FiniteLocalAlgebra>) -> Result<Vec<Ideal>> {
        self.members.iter().map(|s| Ideal::from_space(ring, s.space().clone())).collect()
    }
}

/// Every submodule is a sum of cyclic ones: collect the cyclic closures of all
/// vectors, then close `{0}` under adding one cyclic at a time.
pub fn enumerate_submodules(m: &Arc<FinModule>, budget: u128) -> Result<SubmoduleLattice> {
    let (p, dim) = (m.p(), m.dim());
    let needed = power_count(p, dim);
    if needed > budget {
        return Err(Error::BudgetExceeded { needed, budget });
    }
    let mut cyclic = BTreeSet::new();
    for v in Subspace::full(p, dim).elements() {
        // one representative per line
        if v.iter().find(|&&c| c != 0) != Some(&1) {
            continue;
        }
        let start = Subspace::span(p, dim, vec![v])?;
        cyclic.insert(close_under(&start, m.actions())?);
    }
    let zero = Subspace::zero(p, dim);
    let mut found = BTreeSet::from([zero.clone()]);
    let mut queue = vec![zero];
    while let Some(s) = queue.pop() {
        for c in &cyclic {
            if s.contains(c)? {
                continue;
            }
            let t = s.sum(c)?;
            if found.insert(t.clone()) {
                queue.push(t);
            }
        }
    }
    let members = found
        .into_iter()
        .map(|s| Submodule::from_space(m, s))
        .collect::<Result<_>>()?;
    Ok(SubmoduleLattice {
        module: m.clone(),
        members,
    })
}

/// The ideal lattice of `R`.
pub fn enumerate_ideals(ring: &Arc<FiniteLocalAlgebra>, budget: u128) -> Result<SubmoduleLattice> {
    enumerate_submodules(&FinModule::regular(ring), budget)
}

/// All submodules `U ⊆ M` of the parent of `M`.
pub fn submodules_within(m: &Submodule, budget: u128) -> Result<Vec<Submodule>> {
    let inner = m.as_module()?;
    let lattice = enumerate_submodules(&inner, budget)?;
    Ok(lattice.members().iter().map(|u| m.lift(u.space())).collect())
}

/// All intermediate submodules `B ⊆ C ⊆ A`.
pub fn intermediates(b: &Submodule, budget: u128) -> Result<Vec<Submodule>> {
    let (q, proj) = quotient(b)?;
    let lattice = enumerate_submodules(&q, budget)?;
    lattice.members().iter().map(|c| pull_back(c, b.parent(), &proj)).collect()
}

/// Some intermediate `M ⊆ X' ⊆ X` has `M = IX'`.
#[allow(non_snake_case)]
pub fn oracle_I_klein(m: &Submodule, i: &Ideal, budget: u128) -> Result<bool> {
    for x in intermediates(m, budget)? {
        if mult_sub(i, &x)? == *m {
            return Ok(true);
        }
    }
    Ok(false)
}

/// At most `v(M)` homomorphisms `I → M` have images summing to `M`.
///
/// Enumerates the whole Hom space, keeps the inclusion-maximal images and
/// searches their subfamilies of size `≤ v(M)`.
#[allow(non_snake_case)]
pub fn oracle_I_generated(m: &Arc<FinModule>, i: &Ideal, budget: u128) -> Result<bool> {
    if m.is_zero() {
        return Ok(true);
    }
    let homs = hom_space(&ideal_module(i)?, m)?;
    let needed = power_count(m.p(), homs.dim());
    if needed > budget {
        return Err(Error::BudgetExceeded { needed, budget });
    }
    let mut images = BTreeSet::new();
    let all = Subspace::full(m.p(), homs.dim()).elements();
    for c in all {
        images.insert(homs.combine(&c).image());
    }
    let images: Vec<Subspace> = images.into_iter().collect();
    let maximal: Vec<&Subspace> = images
        .iter()
        .filter(|s| !images.iter().any(|t| t.dim() > s.dim() && t.contains(s).unwrap_or(false)))
        .collect();
    let target = min_generators(m)?;
    fn search(pool: &[&Subspace], from: usize, acc: &Subspace, left: usize) -> bool {
        if acc.is_full() {
            return true;
        }
        if left == 0 {
            return false;
        }
        (from..pool.len()).any(|k| {
            let next = acc.sum(pool[k]).expect("same ambient space");
            next.dim() > acc.dim() && search(pool, k + 1, &next, left - 1)
        })
    }
    Ok(search(&maximal, 0, &Subspace::zero(m.p(), m.dim()), target))
}

/// No proper `V ⊊ M` with `V + U = M`.
pub fn oracle_small(u: &Submodule, m: &Submodule, budget: u128) -> Result<bool> {
    for v in submodules_within(m, budget)? {
        if v != *m && v.sum(u)? == *m {
            return Ok(false);
        }
    }
    Ok(true)
}

/// For every `U ⊆ M`: `U :_X I + M = M :_X I` forces `U = M`.
pub fn oracle_strongly_klein(m: &Submodule, i: &Ideal, budget: u128) -> Result<bool> {
    let target = colon_sub(m, i)?;
    for u in submodules_within(m, budget)? {
        if u != *m && colon_sub(&u, i)?.sum(m)? == target {
            return Ok(false);
        }
    }
    Ok(true)
}

/// For every `B ⊆ C ⊆ A`: `B ∩ IC = IB` forces `B = C`.
pub fn oracle_strongly_gross(b: &Submodule, i: &Ideal, budget: u128) -> Result<bool> {
    let ib = mult_sub(i, b)?;
    for c in intermediates(b, budget)? {
        if c != *b && b.intersect(&mult_sub(i, &c)?)? == ib {
            return Ok(false);
        }
    }
    Ok(true)
}

/// `M_*` is the largest submodule of `M` that is klein in the parent.
pub fn check_lower_star_maximal(m: &Submodule, i: &Ideal, budget: u128) -> Result<bool> {
    let lower = crate::closures::lower_star(m, i)?;
    let klein: Vec<Submodule> = submodules_within(m, budget)?
        .into_iter()
        .filter(|u| crate::closures::is_I_klein(u, i).unwrap_or(false))
        .collect();
    Ok(klein.contains(&lower) && klein.iter().all(|u| lower.contains(u).unwrap_or(false)))
}

/// `B^*` is the smallest gross submodule between `B` and the parent.
pub fn check_upper_star_minimal(b: &Submodule, i: &Ideal, budget: u128) -> Result<bool> {
    let upper = crate::closures::upper_star(b, i)?;
    let gross: Vec<Submodule> = intermediates(b, budget)?
        .into_iter()
        .filter(|c| crate::closures::is_I_gross(c, i).unwrap_or(false))
        .collect();
    Ok(gross.contains(&upper) && gross.iter().all(|c| c.contains(&upper).unwrap_or(false)))
}
