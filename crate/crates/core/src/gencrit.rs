//! Decision procedures for generation by an ideal and for uniserial modules.

use std::sync::Arc;

use crate::error::{Error, Result};
use crate::exactla::{FpMatrix, Subspace};
use crate::flmod::{
    self, annihilator_module, colon_sub, cyclic_quotient, hom_space, ideal_module, is_isomorphic, min_generators,
    mult_sub, quotient, socle, trace_ideal_in, FinModule, Submodule,
};
use crate::matlis::injective_embedding;
use crate::oracle::{enumerate_ideals, DEFAULT_LATTICE_BUDGET};
use crate::ring::{socle_ring, Ideal};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GenerationReport {
    pub generated: bool,
    /// `Tr_I(M) = M`.
    pub method_trace: bool,
    /// `M = I(M :_Y I)` inside an injective `Y ⊇ M`.
    pub method_injective: bool,
    pub witness: Option<String>,
}

/// Image of `M` inside `Y = E^t`, the module `Y` and the embedding matrix.
pub(crate) fn embedded(m: &Arc<FinModule>) -> Result<(Submodule, FpMatrix)> {
    let (y, f) = injective_embedding(m)?;
    let img = flmod::image(&y, &f);
    Ok((img, f))
}

/// Decides `M ∈ Gen(I)` by the trace and by the injective colon; the two
/// must agree.
#[allow(non_snake_case)]
pub fn is_I_generated(m: &Arc<FinModule>, i: &Ideal) -> Result<GenerationReport> {
    let trace = trace_ideal_in(i, m)?;
    let method_trace = trace.is_full();
    let (img, _) = embedded(m)?;
    let lower = mult_sub(i, &colon_sub(&img, i)?)?;
    let method_injective = lower == img;
    if method_trace != method_injective {
        return Err(Error::CrossCheck(format!(
            "generation by {i}: trace criterion {method_trace}, injective criterion {method_injective}"
        )));
    }
    let witness = if method_trace {
        format!("Tr_I(M) = M, M = I(M :_Y I) with length(Y) = {}", img.parent().dim())
    } else {
        format!("Tr_I(M) has length {} < {}", trace.dim(), m.dim())
    };
    Ok(GenerationReport {
        generated: method_trace,
        method_trace,
        method_injective,
        witness: Some(witness),
    })
}

/// Every chain of submodules is totally ordered, decided from the annihilator.
/// The zero module counts as uniserial.
pub fn is_uniserial(m: &Arc<FinModule>) -> Result<bool> {
    let n = m.dim();
    if n == 0 {
        return Ok(true);
    }
    let top = Ideal::maximal(m.ring()).power((n - 1) as u32)?;
    Ok(!annihilator_module(m)?.contains(&top)?)
}

/// For principal `I`: `Ann_R(I)·M = 0`.
pub fn example2_principal_criterion(m: &Arc<FinModule>, i: &Ideal) -> Result<bool> {
    if !i.is_principal()? {
        return Err(Error::NotPrincipal);
    }
    Ok(mult_sub(&i.annihilator()?, &Submodule::full(m))?.is_zero())
}

fn uniserial_length(m: &Arc<FinModule>) -> Result<usize> {
    if m.dim() == 0 || !is_uniserial(m)? {
        return Err(Error::NotUniserial);
    }
    Ok(m.dim())
}

/// The three equivalent conditions for a uniserial module: generation,
/// `a = (aI) : I` and `m^(n-1) I ⊄ a I` with `a = Ann_R(M)`.
pub fn satz14(m: &Arc<FinModule>, i: &Ideal) -> Result<(bool, bool, bool)> {
    let n = uniserial_length(m)?;
    let generated = is_I_generated(m, i)?.generated;
    let a = annihilator_module(m)?;
    let ai = a.product(i)?;
    let full_colon = ai.colon(i)? == a;
    let top = Ideal::maximal(m.ring()).power((n - 1) as u32)?.product(i)?;
    Ok((generated, full_colon, !ai.contains(&top)?))
}

/// `M_i = m^i M`, the length `n - i` member of the composition series.
pub fn composition_term(m: &Arc<FinModule>, i: usize) -> Result<Submodule> {
    mult_sub(&Ideal::maximal(m.ring()).power(i as u32)?, &Submodule::full(m))
}

/// Entry `i - 1` says whether `M / M_i` is I-generated, by `m^(i-1) I ⊄ Ann_R(M) I`.
pub fn folgerung15(m: &Arc<FinModule>, i: &Ideal) -> Result<Vec<bool>> {
    let n = uniserial_length(m)?;
    let ai = annihilator_module(m)?.product(i)?;
    let mm = Ideal::maximal(m.ring());
    (1..=n)
        .map(|k| Ok(!ai.contains(&mm.power((k - 1) as u32)?.product(i)?)?))
        .collect()
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum CyclicTag {
    NotGenerated,
    UniserialQuotient,
}

#[derive(Clone, Debug)]
pub struct CyclicClassification {
    pub tag: CyclicTag,
    /// A uniserial `C` with `C / So(C) ≅ M`.
    pub witness_c: Option<Arc<FinModule>>,
    /// The kernel `c` of a surjection `m → M`, so that `C = R/c`.
    pub kernel: Option<Ideal>,
}

/// Classifies a cyclic module by generation through `m`; a generated one is
/// realized as `C / So(C)` with `C` uniserial.
pub fn classify_cyclic_m_generated(m: &Arc<FinModule>) -> Result<CyclicClassification> {
    if min_generators(m)? > 1 {
        return Err(Error::NotCyclic);
    }
    let ring = m.ring();
    let mm = Ideal::maximal(ring);
    if !is_I_generated(m, &mm)?.generated {
        return Ok(CyclicClassification {
            tag: CyclicTag::NotGenerated,
            witness_c: None,
            kernel: None,
        });
    }
    let (c, kernel) = if m.is_zero() {
        (FinModule::residue_field(ring), None)
    } else {
        let source = ideal_module(&mm)?;
        let homs = hom_space(&source, m)?;
        let radical = flmod::radical(m)?;
        // for cyclic M a map is onto iff its image leaves mM, and if no basis
        // map does then no combination does
        let f = homs
            .basis()
            .iter()
            .find(|f| !radical.space().contains(&f.image()).unwrap_or(true))
            .ok_or_else(|| Error::CrossCheck("generated cyclic module admits no surjection from m".into()))?;
        let ker = f.kernel();
        let vs = ker.basis().iter().map(|c| mm.space().combine(c)).collect();
        let c_ideal = Ideal::from_space(ring, Subspace::span(ring.p(), ring.dim(), vs)?)?;
        (cyclic_quotient(&c_ideal)?, Some(c_ideal))
    };
    let (top, _) = quotient(&socle(&c)?)?;
    if !is_uniserial(&c)? || !is_isomorphic(&top, m)? {
        return Err(Error::CrossCheck("classification witness failed validation".into()));
    }
    Ok(CyclicClassification {
        tag: CyclicTag::UniserialQuotient,
        witness_c: Some(c),
        kernel,
    })
}

/// For cyclic `M` with `Ann_R(M) ⊆ m²`: ideal lattice totally ordered and `So(R)·M = 0`.
pub fn folgerung22(m: &Arc<FinModule>) -> Result<bool> {
    let ring = m.ring();
    let m2 = Ideal::maximal(ring).power(2)?;
    if min_generators(m)? > 1 || !m2.contains(&annihilator_module(m)?)? {
        return Err(Error::PreconditionViolated(
            "module must be cyclic with annihilator inside m^2".into(),
        ));
    }
    let chain = enumerate_ideals(ring, DEFAULT_LATTICE_BUDGET)?.is_totally_ordered();
    let so_kills = mult_sub(&socle_ring(ring)?, &Submodule::full(m))?.is_zero();
    Ok(chain && so_kills)
}

/// An extension `X ⊇ M` inside `Y = E^t` with `M = IX` and `v(X) ≤ v(M)`.
#[derive(Clone, Debug)]
pub struct Lemma12Witness {
    /// `M` as a submodule of `Y`.
    pub inner: Submodule,
    /// `X` as a submodule of `Y`.
    pub extension: Submodule,
    pub generators_of_extension: usize,
}

/// Selects, among cyclic pieces `R g` of `M :_Y I`, a subfamily whose images
/// `I g` span `M / mM`; by Nakayama their sum `X` satisfies `IX = M`.
/// Returns `None` if no such family is found.
pub fn lemma12_witness(m: &Arc<FinModule>, i: &Ideal) -> Result<Option<Lemma12Witness>> {
    if !is_I_generated(m, i)?.generated {
        return Err(Error::NotGenerated);
    }
    let (img, _) = embedded(m)?;
    let y = img.parent().clone();
    let mm = Ideal::maximal(m.ring());
    let rad = mult_sub(&mm, &img)?;
    let pool = colon_sub(&img, i)?;
    let mut chosen: Vec<Vec<u8>> = Vec::new();
    let mut covered = rad.clone();
    for g in flmod::minimal_generators(&pool)? {
        if covered == img {
            break;
        }
        let piece = mult_sub(i, &Submodule::generated(&y, vec![g.clone()])?)?;
        let next = covered.sum(&piece)?;
        if next.dim() > covered.dim() {
            chosen.push(g);
            covered = next;
        }
    }
    let x = Submodule::generated(&y, chosen.clone())?;
    if mult_sub(i, &x)? != img || !x.contains(&img)? {
        return Ok(None);
    }
    let v = min_generators(&x.as_module()?)?;
    if v > min_generators(m)? {
        return Ok(None);
    }
    Ok(Some(Lemma12Witness {
        inner: img,
        extension: x,
        generators_of_extension: v,
    }))
}
