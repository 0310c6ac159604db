//! Matlis duality at finite length.
//!
//! The injective hull `E` of the residue field is the k-dual of `R` with the
//! contragredient action `(r·f)(s) = f(rs)`. In coordinates every variable
//! acts on `E` by the transpose of its action on `R`, and the dual of any
//! module is its k-dual with transposed actions.

use std::sync::Arc;

use crate::error::{Error, Result};
use crate::exactla::{self, FpMatrix};
use crate::flmod::{
    self, colon_sub, hom_space, is_homomorphism, min_generators, mult_sub, socle, FinModule, Provenance, Submodule,
};
use crate::gencrit::is_I_generated;
use crate::ring::{FiniteLocalAlgebra, Ideal};

#[derive(Clone, Debug)]
pub struct InjectiveHull {
    module: Arc<FinModule>,
}

impl InjectiveHull {
    pub fn module(&self) -> &Arc<FinModule> {
        &self.module
    }

    /// The evaluation pairing `R × E → k`.
    pub fn pairing(&self, r: &[u8], f: &[u8]) -> u8 {
        exactla::dot(r, f, self.module.p())
    }
}

pub fn injective_hull(ring: &Arc<FiniteLocalAlgebra>) -> Result<InjectiveHull> {
    let actions = ring.var_actions().iter().map(FpMatrix::transpose).collect();
    let module = FinModule::new(ring, actions, Provenance::None)?;
    if socle(&module)?.dim() != 1 {
        return Err(Error::CrossCheck("socle of the injective hull is not simple".into()));
    }
    Ok(InjectiveHull { module })
}

#[derive(Clone, Debug)]
pub struct DualModule {
    module: Arc<FinModule>,
    origin: Arc<FinModule>,
}

impl DualModule {
    pub fn module(&self) -> &Arc<FinModule> {
        &self.module
    }

    pub fn origin(&self) -> &Arc<FinModule> {
        &self.origin
    }

    /// Evaluation map `M → M°°`. With transposed coordinates this is the identity matrix.
    pub fn double_dual_map(&self) -> Result<(Arc<FinModule>, FpMatrix)> {
        let dd = matlis_dual(&self.module)?;
        let f = FpMatrix::identity(self.origin.p(), self.origin.dim());
        if !is_homomorphism(&self.origin, &dd.module, &f) {
            return Err(Error::CrossCheck("evaluation map is not a homomorphism".into()));
        }
        Ok((dd.module, f))
    }
}

pub fn matlis_dual(m: &Arc<FinModule>) -> Result<DualModule> {
    let actions = m.actions().iter().map(FpMatrix::transpose).collect();
    Ok(DualModule {
        module: FinModule::new(m.ring(), actions, Provenance::None)?,
        origin: m.clone(),
    })
}

/// `Ann_{X°}(M) = {f ∈ X° : f(M) = 0}` for a submodule `M` of `X`.
pub fn ann_in_dual(m: &Submodule, dual: &DualModule) -> Result<Submodule> {
    if !m.parent().same_as(dual.origin()) {
        return Err(Error::ModuleMismatch);
    }
    Submodule::from_space(dual.module(), m.space().annihilator())
}

/// An injective homomorphism `M ↪ E^t` with `t = dim So(M)`.
///
/// Each socle basis vector is detected by the coordinate at its pivot column;
/// the functional `φ` extends to the homomorphism `u ↦ (r ↦ φ(r u))`.
pub fn injective_embedding(m: &Arc<FinModule>) -> Result<(Arc<FinModule>, FpMatrix)> {
    let ring = m.ring();
    let hull = injective_hull(ring)?;
    let so = socle(m)?;
    let p = m.p();
    let mut y = FinModule::zero(ring);
    let mut f = FpMatrix::zeros(p, 0, m.dim());
    for &pivot in so.space().pivots() {
        let rows: Vec<Vec<u8>> = m.monomial_actions().iter().map(|a| a.row(pivot).to_vec()).collect();
        f = f.vconcat(&FpMatrix::from_vectors(p, m.dim(), &rows));
        y = if y.is_zero() {
            hull.module().clone()
        } else {
            flmod::direct_sum(&y, hull.module())?
        };
    }
    if !is_homomorphism(m, &y, &f) || f.rank() != m.dim() {
        return Err(Error::CrossCheck("socle extension is not an injective homomorphism".into()));
    }
    Ok((y, f))
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CogenerationReport {
    pub cogenerated: bool,
    /// `M°` is I-generated.
    pub via_dual: bool,
    /// `B = (IB) :_A I` for a recorded presentation `M = A/B`.
    pub via_presentation: Option<bool>,
}

/// The relation submodule `B ≤ A = R^rank` of a presented module.
pub fn presentation_pair(m: &FinModule) -> Result<Option<Submodule>> {
    let Provenance::Presented { free_rank, relations } = m.provenance() else {
        return Ok(None);
    };
    let a = FinModule::free(m.ring(), *free_rank);
    Ok(Some(Submodule::generated(&a, relations.clone())?))
}

/// Whether `M` is I°-cogenerated, decided through the dual and, when a
/// presentation is known, cross-checked against the relation module.
pub fn cogeneration_report(m: &Arc<FinModule>, i: &Ideal) -> Result<CogenerationReport> {
    let dual = matlis_dual(m)?;
    let via_dual = is_I_generated(dual.module(), i)?.generated;
    let via_presentation = match presentation_pair(m)? {
        Some(b) => Some(colon_sub(&mult_sub(i, &b)?, i)? == b),
        None => None,
    };
    if let Some(vp) = via_presentation {
        if vp != via_dual {
            return Err(Error::CrossCheck(format!(
                "cogeneration: dual criterion {via_dual}, presentation criterion {vp}"
            )));
        }
    }
    Ok(CogenerationReport {
        cogenerated: via_dual,
        via_dual,
        via_presentation,
    })
}

#[allow(non_snake_case)]
pub fn is_I_cogenerated(m: &Arc<FinModule>, i: &Ideal) -> Result<bool> {
    Ok(cogeneration_report(m, i)?.cogenerated)
}

/// Embeds into `E`, i.e. the socle is zero or simple.
pub fn is_cocyclic(m: &Arc<FinModule>) -> Result<bool> {
    Ok(socle(m)?.dim() <= 1)
}

/// For cyclic and cocyclic `M`: cogeneration agrees with generation. Also
/// confirms `M ≅ M°`.
pub fn folgerung33_check(m: &Arc<FinModule>, i: &Ideal) -> Result<bool> {
    if min_generators(m)? > 1 || !is_cocyclic(m)? {
        return Err(Error::PreconditionViolated("module must be cyclic and cocyclic".into()));
    }
    let dual = matlis_dual(m)?;
    if !flmod::is_isomorphic(m, dual.module())? {
        return Err(Error::CrossCheck("cyclic cocyclic module is not self-dual".into()));
    }
    Ok(is_I_cogenerated(m, i)? == is_I_generated(m, i)?.generated)
}

/// `dim Hom_R(A, E) - dim Hom_R(B, E)` for `B ≤ A`; zero exactly when every
/// map `B → E` extends over `A` given exactness on the left.
pub fn extension_defect(b: &Submodule, hull: &InjectiveHull) -> Result<i64> {
    let a = b.parent();
    let (q, _) = flmod::quotient(b)?;
    let ha = hom_space(a, hull.module())?.dim() as i64;
    let hq = hom_space(&q, hull.module())?.dim() as i64;
    let hb = hom_space(&b.as_module()?, hull.module())?.dim() as i64;
    Ok(hb - (ha - hq))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::flmod::{cyclic_quotient, ideal_module, is_isomorphic};
    use crate::presentation::{parse_poly, parse_ring};
    use crate::ring::{build, ideal_from_polys};

    fn ring(text: &str) -> Arc<FiniteLocalAlgebra> {
        build(parse_ring(text).unwrap()).unwrap()
    }

    fn r4() -> Arc<FiniteLocalAlgebra> {
        ring("p=2 vars=x,y rels=x^2,y^2 trunc=3")
    }

    fn ideal(r: &Arc<FiniteLocalAlgebra>, gens: &[&str]) -> Ideal {
        let polys: Vec<_> = gens.iter().map(|g| parse_poly(g, r.p(), r.vars()).unwrap()).collect();
        ideal_from_polys(r, &polys).unwrap()
    }

    #[test]
    fn hulls() {
        let r = r4();
        let e = injective_hull(&r).unwrap();
        assert!(is_isomorphic(e.module(), &FinModule::regular(&r)).unwrap());
        let u = ring("p=2 vars=x trunc=4");
        assert!(is_isomorphic(injective_hull(&u).unwrap().module(), &FinModule::regular(&u)).unwrap());
        let n = ring("p=2 vars=x,y trunc=2");
        let e = injective_hull(&n).unwrap();
        assert_eq!(e.module().dim(), 3);
        assert!(!is_isomorphic(e.module(), &FinModule::regular(&n)).unwrap());
        assert_eq!(e.pairing(&[1, 0, 0], &[1, 1, 0]), 1);
    }

    #[test]
    fn hull_is_injective_on_small_inclusions() {
        let r = ring("p=2 vars=x,y rels=x^2,x*y trunc=4");
        let e = injective_hull(&r).unwrap();
        let reg = FinModule::regular(&r);
        for gens in [vec!["x"], vec!["y"], vec!["x", "y^2"], vec!["y^3"]] {
            let i = ideal(&r, &gens);
            let b = Submodule::from_space(&reg, i.space().clone()).unwrap();
            assert_eq!(extension_defect(&b, &e).unwrap(), 0);
        }
    }

    #[test]
    fn duals() {
        let r = r4();
        let m = cyclic_quotient(&ideal(&r, &["x"])).unwrap();
        let d = matlis_dual(&m).unwrap();
        assert_eq!(d.module().dim(), 2);
        let e = injective_hull(&r).unwrap();
        let kill_x = flmod::kill(e.module(), &ideal(&r, &["x"])).unwrap().as_module().unwrap();
        assert!(is_isomorphic(d.module(), &kill_x).unwrap());
        let k = FinModule::residue_field(&r);
        assert!(is_isomorphic(matlis_dual(&k).unwrap().module(), &k).unwrap());
        let (dd, f) = d.double_dual_map().unwrap();
        assert_eq!(f.rank(), m.dim());
        assert!(m.same_as(&dd));
    }

    #[test]
    fn annihilators_in_dual() {
        let r = r4();
        let reg = FinModule::regular(&r);
        let dual = matlis_dual(&reg).unwrap();
        let m = Ideal::maximal(&r);
        let m2 = Submodule::from_space(&reg, m.power(2).unwrap().space().clone()).unwrap();
        let ann = ann_in_dual(&m2, &dual).unwrap();
        // X° ≅ R; the annihilator of a length-one socle has colength one
        assert_eq!(ann.dim(), 3);
        assert!(ann_in_dual(&Submodule::zero(&reg), &dual).unwrap().is_full());
        assert!(ann_in_dual(&Submodule::full(&reg), &dual).unwrap().is_zero());
    }

    #[test]
    fn embedding() {
        let r = r4();
        let m = ideal_module(&Ideal::maximal(&r)).unwrap();
        let (y, f) = injective_embedding(&m).unwrap();
        assert_eq!(y.dim(), 4);
        assert_eq!(f.rank(), 3);
        let kk = flmod::direct_sum(&FinModule::residue_field(&r), &FinModule::residue_field(&r)).unwrap();
        let (y, _) = injective_embedding(&kk).unwrap();
        assert_eq!(y.dim(), 8);
    }

    #[test]
    fn cogeneration_of_quotients() {
        let r = r4();
        let m = Ideal::maximal(&r);
        let rm = cyclic_quotient(&m).unwrap();
        let rep = cogeneration_report(&rm, &m).unwrap();
        assert!(rep.cogenerated);
        assert_eq!(rep.via_presentation, Some(true));
        assert!(!is_I_cogenerated(&cyclic_quotient(&ideal(&r, &["x"])).unwrap(), &m).unwrap());
        assert!(is_I_cogenerated(&cyclic_quotient(&m.power(2).unwrap()).unwrap(), &m).unwrap());
    }

    #[test]
    fn cocyclic_checks() {
        let r = r4();
        let m = Ideal::maximal(&r);
        let rx = cyclic_quotient(&ideal(&r, &["x"])).unwrap();
        assert!(is_cocyclic(&rx).unwrap());
        assert!(folgerung33_check(&rx, &m).unwrap());
        let mm = ideal_module(&m).unwrap();
        assert!(is_cocyclic(&mm).unwrap());
        assert!(matches!(folgerung33_check(&mm, &m), Err(Error::PreconditionViolated(_))));
        let k = FinModule::residue_field(&r);
        assert!(folgerung33_check(&k, &m).unwrap());
    }
}
