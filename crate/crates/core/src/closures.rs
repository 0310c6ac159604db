//! Lower and upper star operators and the small/large extension predicates.
//!
//! Every operation takes submodules of a common parent; the parent plays the
//! role of the ambient module `X` (for the lower star) or `A` (for the upper star).

use std::sync::Arc;

use crate::error::{Error, Result};
use crate::flmod::{colon_sub, mult_sub, project, quotient, summands, FinModule, Submodule};
use crate::matlis::{ann_in_dual, matlis_dual};
use crate::oracle::{self, DEFAULT_LATTICE_BUDGET};
use crate::ring::Ideal;

/// `M_* = I(M :_X I)`.
pub fn lower_star(m: &Submodule, i: &Ideal) -> Result<Submodule> {
    mult_sub(i, &colon_sub(m, i)?)
}

/// `B^* = (IB) :_A I`.
pub fn upper_star(b: &Submodule, i: &Ideal) -> Result<Submodule> {
    colon_sub(&mult_sub(i, b)?, i)
}

#[allow(non_snake_case)]
pub fn is_I_klein(m: &Submodule, i: &Ideal) -> Result<bool> {
    Ok(lower_star(m, i)? == *m)
}

#[allow(non_snake_case)]
pub fn is_I_gross(b: &Submodule, i: &Ideal) -> Result<bool> {
    Ok(upper_star(b, i)? == *b)
}

/// `U` is superfluous in `M` (both submodules of one parent): `U ⊆ mM`.
pub fn is_small_submodule(u: &Submodule, m: &Submodule) -> Result<bool> {
    if !m.contains(u)? {
        return Err(Error::PreconditionViolated("U must lie in M".into()));
    }
    mult_sub(&Ideal::maximal(m.parent().ring()), m)?.contains(u)
}

/// Some power of `I` kills `M`.
#[allow(non_snake_case)]
pub fn is_I_torsion(m: &Arc<FinModule>, i: &Ideal) -> Result<bool> {
    let mut current = Submodule::full(m);
    loop {
        if current.is_zero() {
            return Ok(true);
        }
        let next = mult_sub(i, &current)?;
        if next == current {
            return Ok(false);
        }
        current = next;
    }
}

/// Strong small extension by the criterion: klein and `IM` small in `M`.
#[allow(non_snake_case)]
pub fn strongly_klein_criterion(m: &Submodule, i: &Ideal) -> Result<bool> {
    Ok(is_I_klein(m, i)? && is_small_submodule(&mult_sub(i, m)?, m)?)
}

/// Strong large extension by the criterion: gross and `A/B` I-torsion.
#[allow(non_snake_case)]
pub fn strongly_gross_criterion(b: &Submodule, i: &Ideal) -> Result<bool> {
    Ok(is_I_gross(b, i)? && is_I_torsion(&quotient(b)?.0, i)?)
}

/// Criterion verdict, cross-checked against the quantifier over all
/// submodules of `M` whenever that lattice fits the default budget.
#[allow(non_snake_case)]
pub fn is_strongly_I_klein(m: &Submodule, i: &Ideal) -> Result<bool> {
    let criterion = strongly_klein_criterion(m, i)?;
    match oracle::oracle_strongly_klein(m, i, DEFAULT_LATTICE_BUDGET) {
        Ok(q) if q != criterion => Err(Error::CrossCheck(format!(
            "strong klein: criterion {criterion}, quantifier {q}"
        ))),
        Ok(_) | Err(Error::BudgetExceeded { .. }) => Ok(criterion),
        Err(e) => Err(e),
    }
}

/// As [`is_strongly_I_klein`], quantifying over intermediates `B ⊆ C ⊆ A`.
#[allow(non_snake_case)]
pub fn is_strongly_I_gross(b: &Submodule, i: &Ideal) -> Result<bool> {
    let criterion = strongly_gross_criterion(b, i)?;
    match oracle::oracle_strongly_gross(b, i, DEFAULT_LATTICE_BUDGET) {
        Ok(q) if q != criterion => Err(Error::CrossCheck(format!(
            "strong gross: criterion {criterion}, quantifier {q}"
        ))),
        Ok(_) | Err(Error::BudgetExceeded { .. }) => Ok(criterion),
        Err(e) => Err(e),
    }
}

#[derive(Clone, Debug)]
pub struct StarReport {
    pub input: Submodule,
    pub lower_star: Submodule,
    pub upper_star: Submodule,
    pub is_small_ext: bool,
    pub is_large_ext: bool,
    pub strong_small: bool,
    pub strong_large: bool,
}

pub fn star_report(m: &Submodule, i: &Ideal) -> Result<StarReport> {
    let lower = lower_star(m, i)?;
    let upper = upper_star(m, i)?;
    Ok(StarReport {
        input: m.clone(),
        is_small_ext: lower == *m,
        is_large_ext: upper == *m,
        strong_small: is_strongly_I_klein(m, i)?,
        strong_large: is_strongly_I_gross(m, i)?,
        lower_star: lower,
        upper_star: upper,
    })
}

/// Strong smallness of `(M + X1)/X1` in `X/X1`, given `M` strongly klein in `X`.
pub fn lemma45_transfer(m: &Submodule, x1: &Submodule, i: &Ideal) -> Result<bool> {
    if !is_strongly_I_klein(m, i)? {
        return Err(Error::PreconditionViolated("M must be strongly I-klein".into()));
    }
    let (q, proj) = quotient(x1)?;
    let image = project(&m.sum(x1)?, &q, &proj)?;
    is_strongly_I_klein(&image, i)
}

/// `(klein M, gross Ann(M), strongly klein M, strongly gross Ann(M))`, the
/// annihilators taken in the dual of the parent.
pub fn duality_bridge(m: &Submodule, i: &Ideal) -> Result<(bool, bool, bool, bool)> {
    let dual = matlis_dual(m.parent())?;
    let ann = ann_in_dual(m, &dual)?;
    Ok((
        is_I_klein(m, i)?,
        is_I_gross(&ann, i)?,
        is_strongly_I_klein(m, i)?,
        is_strongly_I_gross(&ann, i)?,
    ))
}

/// `(gross B, klein Ann(B))` for `B ≤ A`, annihilator in `A°`.
pub fn gross_klein_bridge(b: &Submodule, i: &Ideal) -> Result<(bool, bool)> {
    let dual = matlis_dual(b.parent())?;
    let ann = ann_in_dual(b, &dual)?;
    Ok((is_I_gross(b, i)?, is_I_klein(&ann, i)?))
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Bem42Report {
    /// `M = IX`.
    pub equals_ix: bool,
    pub klein: bool,
    /// `M ⊆ IX`.
    pub within_ix: bool,
    /// The chain of implications holds on this instance.
    pub chain_holds: bool,
    /// For principal `I`: `M_* = M ∩ IX`, and klein iff `M ⊆ IX`.
    pub principal: Option<(bool, bool)>,
    /// For a known split `X = M ⊕ N`: `M_* = IM`.
    pub split: Option<bool>,
}

impl Bem42Report {
    pub fn holds(&self) -> bool {
        self.chain_holds
            && self.principal.is_none_or(|(a, b)| a && b)
            && self.split.unwrap_or(true)
    }
}

pub fn bemerkung42_checks(m: &Submodule, i: &Ideal) -> Result<Bem42Report> {
    let x = m.parent();
    let ix = mult_sub(i, &Submodule::full(x))?;
    let lower = lower_star(m, i)?;
    let equals_ix = ix == *m;
    let klein = lower == *m;
    let within_ix = ix.contains(m)?;
    let chain_holds = (!equals_ix || klein) && (!klein || within_ix);
    let principal = if i.is_principal()? {
        Some((lower == m.intersect(&ix)?, klein == within_ix))
    } else {
        None
    };
    let split = match summands(x) {
        Some((left, right)) if left == *m || right == *m => Some(lower == mult_sub(i, m)?),
        _ => None,
    };
    Ok(Bem42Report {
        equals_ix,
        klein,
        within_ix,
        chain_holds,
        principal,
        split,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::flmod::direct_sum;
    use crate::presentation::{parse_poly, parse_ring};
    use crate::ring::{build, ideal_from_polys, FiniteLocalAlgebra};

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

    fn sub(x: &Arc<FinModule>, i: &Ideal) -> Submodule {
        Submodule::from_space(x, i.space().clone()).unwrap()
    }

    #[test]
    fn star_table_entries() {
        let r = r4();
        let x = FinModule::regular(&r);
        let m = Ideal::maximal(&r);
        let m2 = m.power(2).unwrap();
        let cases = [
            (Ideal::zero(&r), Ideal::zero(&r), m2.clone()),
            (m2.clone(), m2.clone(), m2.clone()),
            (ideal(&r, &["x"]), m2.clone(), m.clone()),
            (ideal(&r, &["x+y"]), m2.clone(), m.clone()),
            (m.clone(), m.clone(), m.clone()),
            (Ideal::unit(&r), m.clone(), Ideal::unit(&r)),
        ];
        for (b, lower, upper) in cases {
            let bs = sub(&x, &b);
            assert_eq!(lower_star(&bs, &m).unwrap(), sub(&x, &lower), "lower star of {b}");
            assert_eq!(upper_star(&bs, &m).unwrap(), sub(&x, &upper), "upper star of {b}");
        }
    }

    #[test]
    fn klein_and_gross() {
        let r = r4();
        let x = FinModule::regular(&r);
        let m = Ideal::maximal(&r);
        assert!(is_I_klein(&sub(&x, &m.power(2).unwrap()), &m).unwrap());
        assert!(!is_I_klein(&sub(&x, &ideal(&r, &["x"])), &m).unwrap());
        assert!(is_I_gross(&sub(&x, &m), &m).unwrap());
    }

    #[test]
    fn smallness_and_torsion() {
        let r = r4();
        let x = FinModule::regular(&r);
        let full = Submodule::full(&x);
        let m = Ideal::maximal(&r);
        assert!(is_small_submodule(&sub(&x, &m), &full).unwrap());
        assert!(is_small_submodule(&sub(&x, &ideal(&r, &["x"])), &full).unwrap());
        assert!(!is_small_submodule(&full, &full).unwrap());
        assert!(is_I_torsion(&x, &m).unwrap());
        assert!(!is_I_torsion(&x, &Ideal::unit(&r)).unwrap());
        assert!(is_I_torsion(&FinModule::zero(&r), &Ideal::unit(&r)).unwrap());
    }

    #[test]
    fn strong_variants() {
        let r = r4();
        let x = FinModule::regular(&r);
        let m = Ideal::maximal(&r);
        assert!(is_strongly_I_klein(&sub(&x, &m.power(2).unwrap()), &m).unwrap());
        assert!(!is_strongly_I_klein(&sub(&x, &ideal(&r, &["x"])), &m).unwrap());
        assert!(is_strongly_I_gross(&sub(&x, &m), &m).unwrap());
        assert!(!is_strongly_I_klein(&Submodule::full(&x), &Ideal::unit(&r)).unwrap());
        assert!(is_strongly_I_klein(&Submodule::zero(&x), &Ideal::unit(&r)).unwrap());
    }

    #[test]
    fn transfer() {
        let r = r4();
        let x = FinModule::regular(&r);
        let m = Ideal::maximal(&r);
        let m2 = sub(&x, &m.power(2).unwrap());
        assert!(lemma45_transfer(&m2, &Submodule::zero(&x), &m).unwrap());
        assert!(lemma45_transfer(&m2, &Submodule::full(&x), &m).unwrap());
        assert!(lemma45_transfer(&m2, &sub(&x, &ideal(&r, &["x"])), &m).unwrap());
        assert!(lemma45_transfer(&sub(&x, &ideal(&r, &["x"])), &Submodule::zero(&x), &m).is_err());
    }

    #[test]
    fn bridges() {
        let r = r4();
        let x = FinModule::regular(&r);
        let m = Ideal::maximal(&r);
        assert_eq!(duality_bridge(&sub(&x, &m.power(2).unwrap()), &m).unwrap(), (true, true, true, true));
        assert_eq!(duality_bridge(&Submodule::zero(&x), &m).unwrap(), (true, true, true, true));
        assert_eq!(duality_bridge(&sub(&x, &ideal(&r, &["x"])), &m).unwrap(), (false, false, false, false));
    }

    #[test]
    fn remark_checks() {
        let r = r4();
        let x = FinModule::regular(&r);
        let m = Ideal::maximal(&r);
        let rep = bemerkung42_checks(&sub(&x, &m.power(2).unwrap()), &m).unwrap();
        assert!(rep.klein && !rep.equals_ix && rep.holds());

        let u = ring("p=2 vars=x trunc=4");
        let ux = FinModule::regular(&u);
        let x2 = sub(&ux, &ideal(&u, &["x^2"]));
        let rep = bemerkung42_checks(&x2, &ideal(&u, &["x"])).unwrap();
        assert!(rep.klein && rep.within_ix && rep.holds());
        assert_eq!(lower_star(&x2, &ideal(&u, &["x"])).unwrap(), x2);

        let k = FinModule::residue_field(&r);
        let kk = direct_sum(&k, &k).unwrap();
        let (left, _) = summands(&kk).unwrap();
        let rep = bemerkung42_checks(&left, &m).unwrap();
        assert_eq!(rep.split, Some(true));
        assert!(lower_star(&left, &m).unwrap().is_zero());
    }
}
