//! Finite-length modules over a [`FiniteLocalAlgebra`].
//!
//! A module is a coordinate space `GF(p)^dim` with one commuting action
//! matrix per ring variable. Since the residue field is the coefficient
//! field, the length of a module is its dimension.

use std::fmt;
use std::sync::Arc;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::exactla::{self, preimage, FpMatrix, Subspace};
use crate::presentation::{degree, ModulePresentation};
use crate::ring::{close_under, same_ring, FiniteLocalAlgebra, Ideal};

/// Default number of candidate homomorphisms the isomorphism search may enumerate.
pub const DEFAULT_ISO_BUDGET: u128 = 1 << 20;

/// How a module came to be, when that is known.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Provenance {
    None,
    /// `R^free_rank / <relations>`; relations are flattened block coordinates.
    Presented {
        free_rank: usize,
        relations: Vec<Vec<u8>>,
    },
    /// `left ⊕ right`, the first `left_dim` coordinates spanning `left`.
    DirectSum { left_dim: usize },
}

#[derive(Debug)]
pub struct FinModule {
    ring: Arc<FiniteLocalAlgebra>,
    dim: usize,
    actions: Vec<FpMatrix>,
    /// Action of each ring basis monomial, in ring basis order.
    monomial_actions: Vec<FpMatrix>,
    provenance: Provenance,
}

impl FinModule {
    /// Validates that the actions commute and satisfy the ring's relations.
    pub fn new(
        ring: &Arc<FiniteLocalAlgebra>,
        actions: Vec<FpMatrix>,
        provenance: Provenance,
    ) -> Result<Arc<Self>> {
        if actions.len() != ring.nvars() {
            return Err(Error::InvalidModule(format!(
                "{} action matrices for {} variables",
                actions.len(),
                ring.nvars()
            )));
        }
        let dim = actions.first().map_or(0, FpMatrix::nrows);
        let p = ring.p();
        for a in &actions {
            if a.nrows() != dim || a.ncols() != dim || a.modulus() != p {
                return Err(Error::InvalidModule("action matrices must be square of equal size".into()));
            }
        }
        for (i, a) in actions.iter().enumerate() {
            for b in &actions[i + 1..] {
                if !a.commutes_with(b) {
                    return Err(Error::InvalidModule("actions do not commute".into()));
                }
            }
        }
        let mono = |exps: &[u32]| -> Result<FpMatrix> {
            let mut m = FpMatrix::identity(p, dim);
            for (v, &e) in exps.iter().enumerate() {
                for _ in 0..e {
                    m = actions[v].mul(&m)?;
                }
            }
            Ok(m)
        };
        for rel in &ring.presentation().rels {
            let mut acc = FpMatrix::zeros(p, dim, dim);
            for (m, c) in rel.terms() {
                acc.add_scaled(c, &mono(m)?);
            }
            if !acc.is_zero() {
                return Err(Error::InvalidModule("a ring relation does not act as zero".into()));
            }
        }
        for m in monomials_of_degree(ring.nvars(), ring.trunc()) {
            if !mono(&m)?.is_zero() {
                return Err(Error::InvalidModule("m^trunc does not act as zero".into()));
            }
        }
        let monomial_actions = ring.basis().iter().map(|b| mono(b)).collect::<Result<_>>()?;
        Ok(Arc::new(Self {
            ring: ring.clone(),
            dim,
            actions,
            monomial_actions,
            provenance,
        }))
    }

    /// `R` as a module over itself.
    pub fn regular(ring: &Arc<FiniteLocalAlgebra>) -> Arc<Self> {
        Self::new(ring, ring.var_actions().to_vec(), Provenance::Presented {
            free_rank: 1,
            relations: Vec::new(),
        })
        .expect("regular representation is a module")
    }

    pub fn free(ring: &Arc<FiniteLocalAlgebra>, rank: usize) -> Arc<Self> {
        let actions = ring
            .var_actions()
            .iter()
            .map(|a| block_diag_power(a, rank, ring.p()))
            .collect();
        Self::new(ring, actions, Provenance::Presented {
            free_rank: rank,
            relations: Vec::new(),
        })
        .expect("free module is a module")
    }

    pub fn zero(ring: &Arc<FiniteLocalAlgebra>) -> Arc<Self> {
        let actions = vec![FpMatrix::zeros(ring.p(), 0, 0); ring.nvars()];
        Self::new(ring, actions, Provenance::None).expect("zero module")
    }

    /// `k = R/m`.
    pub fn residue_field(ring: &Arc<FiniteLocalAlgebra>) -> Arc<Self> {
        let actions = vec![FpMatrix::zeros(ring.p(), 1, 1); ring.nvars()];
        Self::new(ring, actions, Provenance::None).expect("residue field")
    }

    pub fn ring(&self) -> &Arc<FiniteLocalAlgebra> {
        &self.ring
    }

    pub fn p(&self) -> u8 {
        self.ring.p()
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn is_zero(&self) -> bool {
        self.dim == 0
    }

    pub fn actions(&self) -> &[FpMatrix] {
        &self.actions
    }

    pub fn provenance(&self) -> &Provenance {
        &self.provenance
    }

    /// Action of a ring element given in ring coordinates.
    pub fn element_action(&self, r: &[u8]) -> FpMatrix {
        let mut m = FpMatrix::zeros(self.p(), self.dim, self.dim);
        for (c, a) in r.iter().zip(&self.monomial_actions) {
            if *c != 0 {
                m.add_scaled(*c, a);
            }
        }
        m
    }

    pub fn monomial_actions(&self) -> &[FpMatrix] {
        &self.monomial_actions
    }

    /// Structural equality: same ring, same coordinates, same actions.
    pub fn same_as(self: &Arc<Self>, other: &Arc<Self>) -> bool {
        Arc::ptr_eq(self, other)
            || (same_ring(&self.ring, &other.ring) && self.dim == other.dim && self.actions == other.actions)
    }
}

fn monomials_of_degree(nvars: usize, d: u32) -> Vec<Vec<u32>> {
    fn rec(prefix: &mut Vec<u32>, nvars: usize, left: u32, out: &mut Vec<Vec<u32>>) {
        if prefix.len() + 1 == nvars {
            prefix.push(left);
            out.push(prefix.clone());
            prefix.pop();
            return;
        }
        for e in 0..=left {
            prefix.push(e);
            rec(prefix, nvars, left - e, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    rec(&mut Vec::new(), nvars, d, &mut out);
    debug_assert!(out.iter().all(|m| degree(m) == d));
    out
}

fn block_diag_power(a: &FpMatrix, copies: usize, p: u8) -> FpMatrix {
    (0..copies).fold(FpMatrix::zeros(p, 0, 0), |acc, _| acc.block_diag(a))
}

/// `R^rank / <relations>`, keeping the presentation as provenance.
pub fn from_presentation(ring: &Arc<FiniteLocalAlgebra>, pres: &ModulePresentation) -> Result<Arc<FinModule>> {
    let relations: Vec<Vec<u8>> = pres
        .relations
        .iter()
        .map(|rel| rel.iter().flat_map(|f| ring.element_from_poly(f)).collect())
        .collect();
    presented(ring, pres.free_rank, relations)
}

/// Cokernel of the given relation vectors in `R^rank` (flattened block coordinates).
pub fn presented(ring: &Arc<FiniteLocalAlgebra>, rank: usize, relations: Vec<Vec<u8>>) -> Result<Arc<FinModule>> {
    let free = FinModule::free(ring, rank);
    let b = Submodule::generated(&free, relations.clone())?;
    let (q, _) = quotient_with_provenance(&b, Provenance::Presented {
        free_rank: rank,
        relations,
    })?;
    Ok(q)
}

/// `R / a` as a presented cyclic module.
pub fn cyclic_quotient(ideal: &Ideal) -> Result<Arc<FinModule>> {
    presented(ideal.ring(), 1, ideal.space().basis().to_vec())
}

/// The ideal as an abstract module, coordinatized by its reduced basis.
pub fn ideal_module(ideal: &Ideal) -> Result<Arc<FinModule>> {
    let regular = FinModule::regular(ideal.ring());
    Submodule::from_space(&regular, ideal.space().clone())?.as_module()
}

pub fn direct_sum(a: &Arc<FinModule>, b: &Arc<FinModule>) -> Result<Arc<FinModule>> {
    if !same_ring(a.ring(), b.ring()) {
        return Err(Error::RingMismatch);
    }
    let actions = a
        .actions
        .iter()
        .zip(&b.actions)
        .map(|(x, y)| x.block_diag(y))
        .collect();
    FinModule::new(a.ring(), actions, Provenance::DirectSum { left_dim: a.dim() })
}

/// The two summands of a module built by [`direct_sum`].
pub fn summands(x: &Arc<FinModule>) -> Option<(Submodule, Submodule)> {
    let Provenance::DirectSum { left_dim } = *x.provenance() else {
        return None;
    };
    let n = x.dim();
    let left = (0..left_dim).map(|i| exactla::unit_vector(n, i)).collect();
    let right = (left_dim..n).map(|i| exactla::unit_vector(n, i)).collect();
    Some((
        Submodule::from_space(x, Subspace::span(x.p(), n, left).ok()?).ok()?,
        Submodule::from_space(x, Subspace::span(x.p(), n, right).ok()?).ok()?,
    ))
}

/// A submodule of a fixed parent module.
#[derive(Clone, Debug)]
pub struct Submodule {
    parent: Arc<FinModule>,
    space: Subspace,
}

impl PartialEq for Submodule {
    fn eq(&self, other: &Self) -> bool {
        self.parent.same_as(&other.parent) && self.space == other.space
    }
}

impl Eq for Submodule {}

impl Submodule {
    /// Smallest submodule containing the given vectors.
    pub fn generated(parent: &Arc<FinModule>, vectors: Vec<Vec<u8>>) -> Result<Self> {
        let start = Subspace::span(parent.p(), parent.dim(), vectors)?;
        Ok(Self {
            parent: parent.clone(),
            space: close_under(&start, parent.actions())?,
        })
    }

    /// Wraps an action-stable subspace; errors if it is not stable.
    pub fn from_space(parent: &Arc<FinModule>, space: Subspace) -> Result<Self> {
        if space.ambient_dim() != parent.dim() {
            return Err(Error::ModuleMismatch);
        }
        if !parent.actions().iter().all(|a| space.is_stable_under(a)) {
            return Err(Error::InvalidModule("subspace is not a submodule".into()));
        }
        Ok(Self {
            parent: parent.clone(),
            space,
        })
    }

    pub(crate) fn from_space_unchecked(parent: &Arc<FinModule>, space: Subspace) -> Self {
        debug_assert!(parent.actions().iter().all(|a| space.is_stable_under(a)));
        Self {
            parent: parent.clone(),
            space,
        }
    }

    pub fn zero(parent: &Arc<FinModule>) -> Self {
        Self {
            parent: parent.clone(),
            space: Subspace::zero(parent.p(), parent.dim()),
        }
    }

    pub fn full(parent: &Arc<FinModule>) -> Self {
        Self {
            parent: parent.clone(),
            space: Subspace::full(parent.p(), parent.dim()),
        }
    }

    pub fn parent(&self) -> &Arc<FinModule> {
        &self.parent
    }

    pub fn space(&self) -> &Subspace {
        &self.space
    }

    pub fn dim(&self) -> usize {
        self.space.dim()
    }

    pub fn is_zero(&self) -> bool {
        self.space.is_zero()
    }

    pub fn is_full(&self) -> bool {
        self.space.is_full()
    }

    fn check(&self, other: &Submodule) -> Result<()> {
        if self.parent.same_as(&other.parent) {
            Ok(())
        } else {
            Err(Error::ModuleMismatch)
        }
    }

    /// `other ⊆ self`.
    pub fn contains(&self, other: &Submodule) -> Result<bool> {
        self.check(other)?;
        Ok(self.space.contains(&other.space)?)
    }

    pub fn sum(&self, other: &Submodule) -> Result<Submodule> {
        self.check(other)?;
        Ok(Self::from_space_unchecked(&self.parent, self.space.sum(&other.space)?))
    }

    pub fn intersect(&self, other: &Submodule) -> Result<Submodule> {
        self.check(other)?;
        Ok(Self::from_space_unchecked(&self.parent, self.space.intersect(&other.space)?))
    }

    /// The submodule as a module in its own right, coordinatized by its reduced basis.
    pub fn as_module(&self) -> Result<Arc<FinModule>> {
        let d = self.dim();
        let actions = self
            .parent
            .actions()
            .iter()
            .map(|a| {
                let cols: Vec<Vec<u8>> = self
                    .space
                    .basis()
                    .iter()
                    .map(|b| self.space.coordinates(&a.apply(b)).expect("stable subspace"))
                    .collect();
                FpMatrix::from_columns(self.parent.p(), d, &cols)
            })
            .collect();
        FinModule::new(self.parent.ring(), actions, Provenance::None)
    }

    /// Inclusion map of [`Submodule::as_module`] into the parent.
    pub fn inclusion(&self) -> FpMatrix {
        FpMatrix::from_columns(self.parent.p(), self.parent.dim(), self.space.basis())
    }

    /// Pushes a submodule of `self.as_module()` back into the parent.
    pub fn lift(&self, inner: &Subspace) -> Submodule {
        let vs = inner.basis().iter().map(|c| self.space.combine(c)).collect();
        Self::from_space_unchecked(&self.parent, Subspace::span_unchecked(self.parent.p(), self.parent.dim(), vs))
    }
}

pub fn submodule_generated(m: &Arc<FinModule>, vectors: Vec<Vec<u8>>) -> Result<Submodule> {
    Submodule::generated(m, vectors)
}

fn quotient_with_provenance(b: &Submodule, provenance: Provenance) -> Result<(Arc<FinModule>, FpMatrix)> {
    let q = b.space.quotient_projection();
    let l = b.space.quotient_lift();
    let actions = b
        .parent
        .actions()
        .iter()
        .map(|a| q.mul(a)?.mul(&l))
        .collect::<std::result::Result<Vec<_>, _>>()?;
    Ok((FinModule::new(b.parent.ring(), actions, provenance)?, q))
}

/// `M / B` with its projection matrix (pivot-complement coordinates).
pub fn quotient(b: &Submodule) -> Result<(Arc<FinModule>, FpMatrix)> {
    quotient_with_provenance(b, Provenance::None)
}

/// Image of a submodule under the quotient projection onto `quotient`.
pub fn project(sub: &Submodule, quotient: &Arc<FinModule>, projection: &FpMatrix) -> Result<Submodule> {
    let img = sub.space.image_under(projection)?;
    Ok(Submodule::from_space_unchecked(quotient, img))
}

/// Preimage in the parent of a submodule of a quotient.
pub fn pull_back(sub: &Submodule, parent: &Arc<FinModule>, projection: &FpMatrix) -> Result<Submodule> {
    Ok(Submodule::from_space_unchecked(parent, preimage(projection, &sub.space)?))
}

fn check_ring(i: &Ideal, m: &FinModule) -> Result<()> {
    if same_ring(i.ring(), m.ring()) {
        Ok(())
    } else {
        Err(Error::RingMismatch)
    }
}

/// `B :_A I = {a ∈ A : I a ⊆ B}` inside the parent of `b`.
pub fn colon_sub(b: &Submodule, i: &Ideal) -> Result<Submodule> {
    check_ring(i, &b.parent)?;
    let mut acc = Subspace::full(b.parent.p(), b.parent.dim());
    for g in i.space().basis() {
        let act = b.parent.element_action(g);
        acc = acc.intersect(&preimage(&act, &b.space)?)?;
    }
    Ok(Submodule::from_space_unchecked(&b.parent, acc))
}

/// `I · B`.
pub fn mult_sub(i: &Ideal, b: &Submodule) -> Result<Submodule> {
    check_ring(i, &b.parent)?;
    let mut vs = Vec::new();
    for g in i.space().basis() {
        let act = b.parent.element_action(g);
        vs.extend(b.space.basis().iter().map(|v| act.apply(v)));
    }
    Submodule::generated(&b.parent, vs)
}

/// `M[I] = {u : I u = 0}`.
pub fn kill(m: &Arc<FinModule>, i: &Ideal) -> Result<Submodule> {
    colon_sub(&Submodule::zero(m), i)
}

/// `So(M) = M[m]`.
pub fn socle(m: &Arc<FinModule>) -> Result<Submodule> {
    kill(m, &Ideal::maximal(m.ring()))
}

/// `mM`.
pub fn radical(m: &Arc<FinModule>) -> Result<Submodule> {
    mult_sub(&Ideal::maximal(m.ring()), &Submodule::full(m))
}

pub fn length(m: &FinModule) -> usize {
    m.dim()
}

/// `v(M) = dim M/mM`.
pub fn min_generators(m: &Arc<FinModule>) -> Result<usize> {
    Ok(m.dim() - radical(m)?.dim())
}

/// Minimal generators of a submodule (reduced basis rows independent modulo `mB`).
pub fn minimal_generators(b: &Submodule) -> Result<Vec<Vec<u8>>> {
    let mut acc = mult_sub(&Ideal::maximal(b.parent.ring()), b)?.space;
    let mut gens = Vec::new();
    for v in b.space.basis() {
        if !acc.contains_vector(v) {
            gens.push(v.clone());
            acc = acc.sum(&Subspace::span(b.parent.p(), b.parent.dim(), vec![v.clone()])?)?;
        }
    }
    Ok(gens)
}

/// `Ann_R(M)`: kernel of `R → End_k(M)`.
pub fn annihilator_module(m: &Arc<FinModule>) -> Result<Ideal> {
    let ring = m.ring();
    let n = m.dim() * m.dim();
    let cols: Vec<Vec<u8>> = m
        .monomial_actions()
        .iter()
        .map(|a| (0..m.dim()).flat_map(|i| a.row(i).to_vec()).collect())
        .collect();
    let space = FpMatrix::from_columns(ring.p(), n, &cols).kernel();
    Ideal::from_space(ring, space)
}

/// Basis of `Hom_R(source, target)`; each element is a `target.dim × source.dim` matrix.
#[derive(Clone, Debug)]
pub struct HomSpace {
    source: Arc<FinModule>,
    target: Arc<FinModule>,
    basis: Vec<FpMatrix>,
}

impl HomSpace {
    pub fn source(&self) -> &Arc<FinModule> {
        &self.source
    }

    pub fn target(&self) -> &Arc<FinModule> {
        &self.target
    }

    pub fn basis(&self) -> &[FpMatrix] {
        &self.basis
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn combine(&self, coeffs: &[u8]) -> FpMatrix {
        let mut f = FpMatrix::zeros(self.source.p(), self.target.dim(), self.source.dim());
        for (c, b) in coeffs.iter().zip(&self.basis) {
            if *c != 0 {
                f.add_scaled(*c, b);
            }
        }
        f
    }

    /// Whether `f` intertwines every variable action.
    pub fn is_homomorphism(&self, f: &FpMatrix) -> bool {
        is_homomorphism(&self.source, &self.target, f)
    }
}

pub fn is_homomorphism(source: &FinModule, target: &FinModule, f: &FpMatrix) -> bool {
    source.actions().iter().zip(target.actions()).all(|(a, b)| {
        matches!((f.mul(a), b.mul(f)), (Ok(x), Ok(y)) if x == y)
    })
}

/// Solves the intertwining system `f·A_v = B_v·f` for every variable `v`.
pub fn hom_space(source: &Arc<FinModule>, target: &Arc<FinModule>) -> Result<HomSpace> {
    if !same_ring(source.ring(), target.ring()) {
        return Err(Error::RingMismatch);
    }
    let p = source.p();
    let (m, n) = (source.dim(), target.dim());
    let unknowns = n * m;
    let mut rows = Vec::new();
    for (a, b) in source.actions().iter().zip(target.actions()) {
        for i in 0..n {
            for j in 0..m {
                let mut row = vec![0u8; unknowns];
                for k in 0..m {
                    let c = a.get(k, j);
                    if c != 0 {
                        row[i * m + k] = exactla::add(row[i * m + k], c, p);
                    }
                }
                for k in 0..n {
                    let c = b.get(i, k);
                    if c != 0 {
                        row[k * m + j] = exactla::sub(row[k * m + j], c, p);
                    }
                }
                if !exactla::is_zero_vec(&row) {
                    rows.push(row);
                }
            }
        }
    }
    let kernel = FpMatrix::from_vectors(p, unknowns, &rows).kernel();
    let basis = kernel
        .basis()
        .iter()
        .map(|v| {
            let rows: Vec<Vec<u8>> = (0..n).map(|i| v[i * m..(i + 1) * m].to_vec()).collect();
            FpMatrix::from_vectors(p, m, &rows)
        })
        .collect();
    Ok(HomSpace {
        source: source.clone(),
        target: target.clone(),
        basis,
    })
}

/// Image of a homomorphism as a submodule of its target.
pub fn image(target: &Arc<FinModule>, f: &FpMatrix) -> Submodule {
    Submodule::from_space_unchecked(target, f.image())
}

/// `Tr_I(M) = Σ_{f : I → M} im f`, summed over a basis of the Hom space.
pub fn trace_ideal_in(i: &Ideal, m: &Arc<FinModule>) -> Result<Submodule> {
    check_ring(i, m)?;
    let source = ideal_module(i)?;
    let homs = hom_space(&source, m)?;
    let mut vs = Vec::new();
    for f in homs.basis() {
        vs.extend(f.columns());
    }
    Ok(Submodule::from_space_unchecked(m, Subspace::span(m.p(), m.dim(), vs)?))
}

/// Whether some homomorphism `M → N` is invertible.
///
/// Sound invariants are compared first; then the Hom space is enumerated when
/// `p^dim Hom ≤ budget`, otherwise random combinations are tried and an
/// unsuccessful search is reported as [`Error::BudgetExceeded`].
pub fn is_isomorphic_with_budget(m: &Arc<FinModule>, n: &Arc<FinModule>, budget: u128) -> Result<bool> {
    if !same_ring(m.ring(), n.ring()) {
        return Err(Error::RingMismatch);
    }
    if m.dim() != n.dim() {
        return Ok(false);
    }
    if m.dim() == 0 || m.same_as(n) {
        return Ok(true);
    }
    if annihilator_module(m)? != annihilator_module(n)?
        || socle(m)?.dim() != socle(n)?.dim()
        || min_generators(m)? != min_generators(n)?
    {
        return Ok(false);
    }
    let homs = hom_space(m, n)?;
    let h = homs.dim();
    if h == 0 {
        return Ok(false);
    }
    let p = m.p();
    let total = (p as u128).checked_pow(h as u32).unwrap_or(u128::MAX);
    let invertible = |f: &FpMatrix| f.rank() == m.dim();
    if homs.basis().iter().any(invertible) {
        return Ok(true);
    }
    if total <= budget {
        let mut coeffs = vec![0u8; h];
        loop {
            let mut i = h;
            loop {
                if i == 0 {
                    return Ok(false);
                }
                i -= 1;
                coeffs[i] += 1;
                if coeffs[i] == p {
                    coeffs[i] = 0;
                } else {
                    break;
                }
            }
            if invertible(&homs.combine(&coeffs)) {
                return Ok(true);
            }
        }
    }
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed);
    let trials = budget.min(1 << 14) as usize;
    for _ in 0..trials {
        let coeffs: Vec<u8> = (0..h).map(|_| rng.gen_range(0..p)).collect();
        if invertible(&homs.combine(&coeffs)) {
            return Ok(true);
        }
    }
    Err(Error::BudgetExceeded { needed: total, budget })
}

pub fn is_isomorphic(m: &Arc<FinModule>, n: &Arc<FinModule>) -> Result<bool> {
    is_isomorphic_with_budget(m, n, DEFAULT_ISO_BUDGET)
}

impl fmt::Display for FinModule {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "module(dim={}", self.dim)?;
        for (v, a) in self.ring.vars().iter().zip(&self.actions) {
            write!(f, ", {v}={a}")?;
        }
        write!(f, ")")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::presentation::{parse_module, parse_poly, parse_ring};
    use crate::ring::{build, ideal_from_polys, socle_ring};

    fn ring(text: &str) -> Arc<FiniteLocalAlgebra> {
        build(parse_ring(text).unwrap()).unwrap()
    }

    fn r4() -> Arc<FiniteLocalAlgebra> {
        ring("p=2 vars=x,y rels=x^2,y^2 trunc=3")
    }

    fn u4() -> Arc<FiniteLocalAlgebra> {
        ring("p=2 vars=x rels= trunc=4")
    }

    fn ideal(r: &Arc<FiniteLocalAlgebra>, gens: &[&str]) -> Ideal {
        let polys: Vec<_> = gens.iter().map(|g| parse_poly(g, r.p(), r.vars()).unwrap()).collect();
        ideal_from_polys(r, &polys).unwrap()
    }

    fn module(r: &Arc<FiniteLocalAlgebra>, text: &str) -> Arc<FinModule> {
        from_presentation(r, &parse_module(text, r).unwrap()).unwrap()
    }

    #[test]
    fn presentations() {
        let r = r4();
        assert_eq!(module(&r, "rank=1 rels=[x]").dim(), 2);
        assert_eq!(module(&r, "rank=1 rels=[]").dim(), 4);
        assert_eq!(module(&r, "rank=1 rels=[x],[y]").dim(), 1);
        // R·(x,y) ≅ R/((x)∩(y)) = R/(xy) has dimension 3, so 8 - 3 = 5
        assert_eq!(module(&r, "rank=2 rels=[x, y]").dim(), 5);
    }

    #[test]
    fn rank_mismatch_rejected() {
        let r = r4();
        assert!(matches!(
            parse_module("rank=1 rels=[x, y]", &r),
            Err(crate::presentation::PresentationError::RankMismatch { .. })
        ));
    }

    #[test]
    fn kills_quotients() {
        let r = r4();
        let reg = FinModule::regular(&r);
        let m = Ideal::maximal(&r);
        assert_eq!(kill(&reg, &m).unwrap().space(), socle_ring(&r).unwrap().space());
        let (q, _) = quotient(&Submodule::full(&reg)).unwrap();
        assert_eq!(q.dim(), 0);
        assert!(kill(&reg, &Ideal::zero(&r)).unwrap().is_full());
    }

    #[test]
    fn colon_and_product_in_modules() {
        let r = r4();
        let reg = FinModule::regular(&r);
        let m = Ideal::maximal(&r);
        let m2 = Submodule::from_space(&reg, m.power(2).unwrap().space().clone()).unwrap();
        assert_eq!(colon_sub(&m2, &m).unwrap().space(), m.space());
        assert_eq!(colon_sub(&m2, &Ideal::unit(&r)).unwrap(), m2);
        let u = u4();
        let ureg = FinModule::regular(&u);
        let s = colon_sub(&Submodule::zero(&ureg), &Ideal::maximal(&u)).unwrap();
        assert_eq!(s.space(), ideal(&u, &["x^3"]).space());

        assert_eq!(mult_sub(&m, &Submodule::full(&reg)).unwrap().space(), m.space());
        assert!(mult_sub(&m, &m2).unwrap().is_zero());
        assert!(mult_sub(&Ideal::zero(&r), &Submodule::full(&reg)).unwrap().is_zero());
    }

    #[test]
    fn generator_counts() {
        let r = r4();
        let mm = ideal_module(&Ideal::maximal(&r)).unwrap();
        assert_eq!(min_generators(&mm).unwrap(), 2);
        assert_eq!(min_generators(&FinModule::free(&r, 3)).unwrap(), 3);
        assert_eq!(min_generators(&FinModule::zero(&r)).unwrap(), 0);
    }

    #[test]
    fn annihilators() {
        let r = r4();
        assert_eq!(annihilator_module(&module(&r, "rank=1 rels=[x]")).unwrap(), ideal(&r, &["x"]));
        assert!(annihilator_module(&FinModule::regular(&r)).unwrap().is_zero());
        assert_eq!(
            annihilator_module(&FinModule::residue_field(&r)).unwrap(),
            Ideal::maximal(&r)
        );
    }

    #[test]
    fn hom_and_trace() {
        let r = r4();
        let mm = ideal_module(&Ideal::maximal(&r)).unwrap();
        let k = FinModule::residue_field(&r);
        let h = hom_space(&mm, &k).unwrap();
        assert_eq!(h.dim(), 2);
        assert!(h.basis().iter().all(|f| h.is_homomorphism(f)));
        assert!(trace_ideal_in(&Ideal::maximal(&r), &k).unwrap().is_full());
        let z = FinModule::zero(&r);
        assert!(trace_ideal_in(&Ideal::maximal(&r), &z).unwrap().is_zero());
    }

    #[test]
    fn isomorphism_tests() {
        let r = r4();
        let a = module(&r, "rank=1 rels=[x]");
        let b = module(&r, "rank=1 rels=[y]");
        assert!(is_isomorphic(&a, &a).unwrap());
        assert!(!is_isomorphic(&a, &b).unwrap());
        let xi = ideal_module(&ideal(&r, &["x"])).unwrap();
        assert!(is_isomorphic(&a, &xi).unwrap());
        let k = FinModule::residue_field(&r);
        let mm = ideal_module(&Ideal::maximal(&r)).unwrap();
        assert!(!is_isomorphic(&k, &mm).unwrap());
        let kk = direct_sum(&k, &k).unwrap();
        let c = module(&r, "rank=1 rels=[x],[y]");
        let mm2 = ideal_module(&Ideal::maximal(&r).power(2).unwrap()).unwrap();
        assert!(is_isomorphic(&c, &mm2).unwrap());
        assert!(!is_isomorphic(&kk, &a).unwrap());
    }

    #[test]
    fn invalid_actions_rejected() {
        let r = u4();
        // a nilpotent of order 5 violates x^4 = 0
        let mut a = FpMatrix::zeros(2, 5, 5);
        for i in 0..4 {
            a.set(i + 1, i, 1);
        }
        assert!(FinModule::new(&r, vec![a], Provenance::None).is_err());
    }

    #[test]
    fn direct_sum_summands() {
        let r = r4();
        let k = FinModule::residue_field(&r);
        let x = direct_sum(&k, &FinModule::regular(&r)).unwrap();
        let (a, b) = summands(&x).unwrap();
        assert_eq!(a.dim(), 1);
        assert_eq!(b.dim(), 4);
        assert!(a.intersect(&b).unwrap().is_zero());
    }
}
