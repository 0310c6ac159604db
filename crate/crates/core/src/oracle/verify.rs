//! Theorem sweeps over the catalog.
//!
//! Each theorem id expands into independent cases (ring, module, ideal);
//! cases run in parallel and are reported in enumeration order.

use std::collections::BTreeSet;
use std::fmt::Write as _;
use std::sync::Arc;

use rayon::prelude::*;

use crate::closures::{
    bemerkung42_checks, gross_klein_bridge, is_I_gross, is_I_klein, is_strongly_I_gross, is_strongly_I_klein,
    lemma45_transfer, lower_star, strongly_gross_criterion, strongly_klein_criterion, upper_star,
};
use crate::error::{Error, Result};
use crate::flmod::{
    self, annihilator_module, colon_sub, cyclic_quotient, ideal_module, is_isomorphic, kill, min_generators,
    mult_sub, quotient, FinModule, Provenance, Submodule,
};
use crate::gencrit::{
    classify_cyclic_m_generated, composition_term, example2_principal_criterion, folgerung15, folgerung22,
    is_I_generated, is_uniserial, lemma12_witness, satz14, CyclicTag,
};
use crate::matlis::{
    ann_in_dual, cogeneration_report, folgerung33_check, injective_hull, is_I_cogenerated, is_cocyclic,
    matlis_dual, presentation_pair,
};
use crate::ring::{is_quasi_frobenius, FiniteLocalAlgebra, Ideal};

use super::catalog::{catalog_ideals, catalog_modules, Catalog, NamedModule};
use super::{
    check_lower_star_maximal, check_upper_star_minimal, enumerate_ideals, enumerate_submodules, oracle_I_generated,
    oracle_strongly_gross, oracle_strongly_klein, power_count, DEFAULT_HOM_BUDGET, DEFAULT_LATTICE_BUDGET,
};

pub const THEOREM_IDS: [&str; 25] = [
    "prop11", "lemma12", "lemma13", "satz14", "folg15", "beisp1", "beisp2", "satz21", "folg22", "beisp_s2", "prop31",
    "folg32", "folg33", "ex3_1", "ex3_4", "ex3_5", "lemma41", "bem42", "beisp_s4", "lemma43", "bem44", "lemma45",
    "satz46", "bem47", "folg48",
];

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Verdict {
    Pass,
    Fail(String),
    Inconclusive(String),
    Skipped(String),
}

impl Verdict {
    pub fn label(&self) -> &'static str {
        match self {
            Verdict::Pass => "pass",
            Verdict::Fail(_) => "FAIL",
            Verdict::Inconclusive(_) => "inconclusive",
            Verdict::Skipped(_) => "skipped",
        }
    }

    pub fn detail(&self) -> Option<&str> {
        match self {
            Verdict::Pass => None,
            Verdict::Fail(d) | Verdict::Inconclusive(d) | Verdict::Skipped(d) => Some(d),
        }
    }
}

fn verdict(ok: bool, detail: impl FnOnce() -> String) -> Verdict {
    if ok {
        Verdict::Pass
    } else {
        Verdict::Fail(detail())
    }
}

#[derive(Clone, Debug)]
pub struct CaseResult {
    pub theorem: String,
    pub ring: String,
    pub module: String,
    pub ideal: String,
    pub verdict: Verdict,
}

#[derive(Clone, Debug)]
pub struct VerificationReport {
    pub theorem: String,
    pub cases: Vec<CaseResult>,
}

impl VerificationReport {
    pub fn passed(&self) -> bool {
        !self.cases.iter().any(|c| matches!(c.verdict, Verdict::Fail(_)))
    }

    pub fn count(&self, label: &str) -> usize {
        self.cases.iter().filter(|c| c.verdict.label() == label).count()
    }

    pub fn counterexamples(&self) -> impl Iterator<Item = &CaseResult> {
        self.cases.iter().filter(|c| matches!(c.verdict, Verdict::Fail(_)))
    }

    pub fn summary(&self) -> String {
        format!(
            "{}: {} cases, {} pass, {} fail, {} inconclusive, {} skipped",
            self.theorem,
            self.cases.len(),
            self.count("pass"),
            self.count("FAIL"),
            self.count("inconclusive"),
            self.count("skipped"),
        )
    }

    /// One line per non-passing case, then the summary.
    pub fn to_text(&self) -> String {
        let mut out = String::new();
        for c in self.cases.iter().filter(|c| c.verdict != Verdict::Pass) {
            let _ = writeln!(
                out,
                "{} ring={} module={} ideal={}: {}",
                c.verdict.label(),
                c.ring,
                c.module,
                c.ideal,
                c.verdict.detail().unwrap_or("")
            );
        }
        let _ = writeln!(out, "{}", self.summary());
        out
    }

    /// Tab-separated: theorem, ring, module, ideal, verdict.
    pub fn to_tsv(&self) -> String {
        let mut out = String::new();
        for c in &self.cases {
            let _ = writeln!(out, "{}\t{}\t{}\t{}\t{}", c.theorem, c.ring, c.module, c.ideal, c.verdict.label());
        }
        out
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Budgets {
    /// Bound on `p^dim` for lattice enumeration.
    pub lattice: u128,
    /// Bound on `p^dim Hom` for the generation oracle.
    pub homs: u128,
    /// Largest ambient module dimension in submodule-pair sweeps.
    pub max_dim: usize,
}

impl Default for Budgets {
    fn default() -> Self {
        Self {
            lattice: DEFAULT_LATTICE_BUDGET,
            homs: DEFAULT_HOM_BUDGET,
            max_dim: 6,
        }
    }
}

/// A catalog ring with its ideals and derived modules.
#[derive(Clone, Debug)]
pub struct RingData {
    pub name: String,
    pub ring: Arc<FiniteLocalAlgebra>,
    pub ideals: Vec<Ideal>,
    pub modules: Vec<NamedModule>,
}

pub fn expand_catalog(catalog: &Catalog) -> Result<Vec<RingData>> {
    catalog
        .rings()
        .par_iter()
        .map(|cr| {
            let ideals = catalog_ideals(&cr.ring)?;
            let modules = catalog_modules(&cr.ring, &ideals)?;
            Ok(RingData {
                name: cr.name.clone(),
                ring: cr.ring.clone(),
                ideals,
                modules,
            })
        })
        .collect()
}

type Check = Box<dyn Fn() -> Result<Verdict> + Send + Sync>;

struct Case {
    ring: String,
    module: String,
    ideal: String,
    check: Check,
}

fn case(rd: &RingData, module: impl Into<String>, ideal: impl Into<String>, check: Check) -> Case {
    Case {
        ring: rd.name.clone(),
        module: module.into(),
        ideal: ideal.into(),
        check,
    }
}

/// A submodule `M` of a catalog module `X`.
#[derive(Clone)]
struct Pair {
    label: String,
    sub: Submodule,
}

fn is_regular(x: &Arc<FinModule>) -> bool {
    x.same_as(&FinModule::regular(x.ring()))
}

fn pairs(rd: &RingData, budgets: Budgets) -> Vec<Pair> {
    let mut out = Vec::new();
    for nm in &rd.modules {
        let x = &nm.module;
        if x.dim() > budgets.max_dim {
            continue;
        }
        let Ok(lattice) = enumerate_submodules(x, budgets.lattice) else {
            continue;
        };
        let regular = is_regular(x);
        for (idx, sub) in lattice.members().iter().enumerate() {
            let inner = if regular {
                Ideal::from_space(&rd.ring, sub.space().clone())
                    .map(|i| i.describe())
                    .unwrap_or_default()
            } else {
                format!("#{idx}[len {}]", sub.dim())
            };
            out.push(Pair {
                label: format!("{inner}<={}", nm.name),
                sub: sub.clone(),
            });
        }
    }
    out
}

/// Rings of the shape `QF, not uniserial, m^2 ≠ 0, m^3 = 0`.
fn is_special_qf(rd: &RingData) -> Result<bool> {
    let m = Ideal::maximal(&rd.ring);
    Ok(is_quasi_frobenius(&rd.ring)?
        && !enumerate_ideals(&rd.ring, power_count(rd.ring.p(), rd.ring.dim()))?.is_totally_ordered()
        && !m.power(2)?.is_zero()
        && m.power(3)?.is_zero())
}

fn names(ideals: impl IntoIterator<Item = Ideal>) -> BTreeSet<String> {
    ideals.into_iter().map(|i| i.describe()).collect()
}

fn set(items: &[&str]) -> BTreeSet<String> {
    items.iter().map(|s| s.to_string()).collect()
}

fn uniserial_cyclics(rd: &RingData) -> Vec<NamedModule> {
    rd.modules
        .iter()
        .filter(|nm| nm.module.dim() > 0 && is_uniserial(&nm.module).unwrap_or(false))
        .cloned()
        .collect()
}

fn cyclic_modules(rd: &RingData) -> Vec<NamedModule> {
    rd.modules
        .iter()
        .filter(|nm| min_generators(&nm.module).map(|v| v <= 1).unwrap_or(false))
        .cloned()
        .collect()
}

/// For each module and ideal of each ring.
fn per_module_ideal(
    data: &[RingData],
    select: impl Fn(&RingData) -> Vec<NamedModule>,
    keep_ideal: impl Fn(&Ideal) -> bool,
    check: impl Fn(Arc<FinModule>, Ideal) -> Result<Verdict> + Send + Sync + Clone + 'static,
) -> Vec<Case> {
    let mut out = Vec::new();
    for rd in data {
        for nm in select(rd) {
            for i in rd.ideals.iter().filter(|i| keep_ideal(i)) {
                let (m, i2, f) = (nm.module.clone(), i.clone(), check.clone());
                out.push(case(rd, nm.name.clone(), i.describe(), Box::new(move || f(m.clone(), i2.clone()))));
            }
        }
    }
    out
}

/// For each submodule pair and ideal of each ring.
fn per_pair_ideal(
    data: &[RingData],
    budgets: Budgets,
    check: impl Fn(Submodule, Ideal, Budgets) -> Result<Verdict> + Send + Sync + Clone + 'static,
) -> Vec<Case> {
    let mut out = Vec::new();
    for rd in data {
        for pr in pairs(rd, budgets) {
            for i in &rd.ideals {
                let (s, i2, f) = (pr.sub.clone(), i.clone(), check.clone());
                out.push(case(rd, pr.label.clone(), i.describe(), Box::new(move || f(s.clone(), i2.clone(), budgets))));
            }
        }
    }
    out
}

/// For each ring satisfying `applies`; others produce a skipped case.
fn per_ring(
    data: &[RingData],
    applies: impl Fn(&RingData) -> Result<bool>,
    check: impl Fn(RingData) -> Result<Verdict> + Send + Sync + Clone + 'static,
) -> Vec<Case> {
    data.iter()
        .map(|rd| {
            let (rd2, f) = (rd.clone(), check.clone());
            match applies(rd) {
                Ok(true) => case(rd, "R", "m", Box::new(move || f(rd2.clone()))),
                Ok(false) => case(rd, "R", "m", Box::new(|| Ok(Verdict::Skipped("ring shape does not apply".into())))),
                Err(e) => {
                    let msg = e.to_string();
                    case(rd, "R", "m", Box::new(move || Ok(Verdict::Skipped(msg.clone()))))
                }
            }
        })
        .collect()
}

fn generated(m: &Arc<FinModule>, i: &Ideal) -> Result<bool> {
    Ok(is_I_generated(m, i)?.generated)
}

fn iso_to_ring(i: &Ideal) -> Result<bool> {
    is_isomorphic(&ideal_module(i)?, &FinModule::regular(i.ring()))
}

fn build_cases(id: &str, data: &[RingData], budgets: Budgets) -> Result<Vec<Case>> {
    let all = |rd: &RingData| rd.modules.clone();
    let any = |_: &Ideal| true;
    let cases = match id {
        "prop11" => per_module_ideal(data, all, any, move |m, i| {
            let rep = is_I_generated(&m, &i)?;
            let oracle = oracle_I_generated(&m, &i, budgets.homs)?;
            Ok(verdict(rep.generated == oracle, || {
                format!("criterion {} but oracle {oracle}", rep.generated)
            }))
        }),
        "lemma12" => per_module_ideal(data, all, any, |m, i| {
            if !generated(&m, &i)? {
                return Ok(Verdict::Skipped("not generated".into()));
            }
            match lemma12_witness(&m, &i)? {
                None => Ok(Verdict::Inconclusive("no witness within the search space".into())),
                Some(w) => {
                    let ok = mult_sub(&i, &w.extension)? == w.inner
                        && w.extension.contains(&w.inner)?
                        && w.generators_of_extension <= min_generators(&m)?;
                    Ok(verdict(ok, || "witness fails M = IX or v(X) <= v(M)".into()))
                }
            }
        }),
        "lemma13" => {
            let mut out = Vec::new();
            for rd in data {
                for nm in &rd.modules {
                    let m = nm.module.clone();
                    if m.dim() > budgets.max_dim || power_count(m.p(), m.dim()) > budgets.lattice {
                        continue;
                    }
                    out.push(case(
                        rd,
                        nm.name.clone(),
                        "-",
                        Box::new(move || {
                            let crit = is_uniserial(&m)?;
                            let chain = enumerate_submodules(&m, budgets.lattice)?.is_totally_ordered();
                            Ok(verdict(crit == chain, || format!("criterion {crit}, lattice chain {chain}")))
                        }),
                    ));
                }
            }
            out
        }
        "satz14" => per_module_ideal(data, uniserial_cyclics, any, |m, i| {
            let (a, b, c) = satz14(&m, &i)?;
            Ok(verdict(a == b && b == c, || format!("({a}, {b}, {c})")))
        }),
        "folg15" => per_module_ideal(data, uniserial_cyclics, any, |m, i| {
            let n = m.dim();
            let entries = folgerung15(&m, &i)?;
            let mm = Ideal::maximal(m.ring());
            for (k, entry) in (1..=n).zip(entries) {
                let (q, _) = quotient(&composition_term(&m, k)?)?;
                let gen = generated(&q, &i)?;
                if gen != entry {
                    return Ok(Verdict::Fail(format!("i={k}: criterion {entry}, generation {gen}")));
                }
                if !generated(&q, &mm.power((n - k) as u32)?)? {
                    return Ok(Verdict::Fail(format!("i={k}: M/M_i not generated by m^(n-i)")));
                }
            }
            Ok(Verdict::Pass)
        }),
        "beisp1" => per_ring(
            data,
            |_| Ok(true),
            |rd| {
                let k = FinModule::residue_field(&rd.ring);
                let r = FinModule::regular(&rd.ring);
                for i in &rd.ideals {
                    if generated(&k, i)? == i.is_zero() {
                        return Ok(Verdict::Fail(format!("k versus I = {i}")));
                    }
                    if generated(&r, i)? != iso_to_ring(i)? {
                        return Ok(Verdict::Fail(format!("R versus I = {i}")));
                    }
                }
                Ok(Verdict::Pass)
            },
        ),
        "beisp2" => per_module_ideal(
            data,
            all,
            |i| i.is_principal().unwrap_or(false),
            |m, i| {
                let crit = example2_principal_criterion(&m, &i)?;
                let gen = generated(&m, &i)?;
                Ok(verdict(crit == gen, || format!("Ann(I)M = 0 is {crit}, generation {gen}")))
            },
        ),
        "satz21" => per_module_ideal(data, cyclic_modules, |i| i.is_unit(), move |m, _| {
            let gen = generated(&m, &Ideal::maximal(m.ring()))?;
            let c = classify_cyclic_m_generated(&m)?;
            let tagged = c.tag == CyclicTag::UniserialQuotient;
            if tagged != gen {
                return Ok(Verdict::Fail(format!("tag {:?} but generation {gen}", c.tag)));
            }
            if let Some(w) = &c.witness_c {
                let chain = match enumerate_submodules(w, budgets.lattice) {
                    Ok(l) => l.is_totally_ordered(),
                    Err(Error::BudgetExceeded { .. }) => is_uniserial(w)?,
                    Err(e) => return Err(e),
                };
                let (top, _) = quotient(&flmod::socle(w)?)?;
                if !chain || !is_isomorphic(&top, &m)? {
                    return Ok(Verdict::Fail("witness C invalid".into()));
                }
            }
            Ok(Verdict::Pass)
        }),
        "folg22" => per_module_ideal(
            data,
            |rd| {
                let m2 = Ideal::maximal(&rd.ring).power(2).expect("power");
                cyclic_modules(rd)
                    .into_iter()
                    .filter(|nm| annihilator_module(&nm.module).and_then(|a| m2.contains(&a)).unwrap_or(false))
                    .collect()
            },
            |i| i.is_unit(),
            |m, _| {
                let crit = folgerung22(&m)?;
                let gen = generated(&m, &Ideal::maximal(m.ring()))?;
                Ok(verdict(crit == gen, || format!("criterion {crit}, generation {gen}")))
            },
        ),
        "beisp_s2" => per_ring(data, is_special_qf, |rd| {
            let m = Ideal::maximal(&rd.ring);
            let mut subs = Vec::new();
            let mut quots = Vec::new();
            for a in &rd.ideals {
                if generated(&ideal_module(a)?, &m)? {
                    subs.push(a.clone());
                }
                if generated(&cyclic_quotient(a)?, &m)? {
                    quots.push(a.clone());
                }
            }
            let (subs, quots) = (names(subs), names(quots));
            Ok(verdict(subs == set(&["0", "m^2", "m"]) && quots == set(&["R", "m"]), || {
                format!("submodules {subs:?}, quotients by {quots:?}")
            }))
        }),
        "prop31" => per_module_ideal(
            data,
            |rd| {
                rd.modules
                    .iter()
                    .filter(|nm| matches!(nm.module.provenance(), Provenance::Presented { .. }))
                    .cloned()
                    .collect()
            },
            any,
            |m, i| {
                let rep = cogeneration_report(&m, &i)?;
                let b = presentation_pair(&m)?.expect("presented module");
                let c_mod = quotient(&mult_sub(&i, &b)?)?.0;
                let (top, _) = quotient(&kill(&c_mod, &i)?)?;
                let iso = is_isomorphic(&top, &m)?;
                Ok(verdict(iso == rep.cogenerated, || {
                    format!("cogenerated {}, C/C[I] ≅ M is {iso}", rep.cogenerated)
                }))
            },
        ),
        "folg32" => per_module_ideal(data, cyclic_modules, any, |m, i| {
            if !generated(&m, &i)? {
                return Ok(Verdict::Pass);
            }
            Ok(verdict(is_I_cogenerated(&m, &i)?, || "generated but not cogenerated".into()))
        }),
        "folg33" => per_module_ideal(
            data,
            |rd| {
                cyclic_modules(rd)
                    .into_iter()
                    .filter(|nm| is_cocyclic(&nm.module).unwrap_or(false))
                    .collect()
            },
            any,
            |m, i| Ok(verdict(folgerung33_check(&m, &i)?, || "cogeneration differs from generation".into())),
        ),
        "ex3_1" => per_module_ideal(
            data,
            |rd| {
                rd.modules
                    .iter()
                    .filter(|nm| {
                        let m = &nm.module;
                        if m.dim() > 0 && is_uniserial(m).unwrap_or(false) {
                            return true;
                        }
                        flmod::summands(m).is_some_and(|(a, b)| {
                            [a, b].iter().all(|s| {
                                s.as_module().and_then(|x| is_uniserial(&x)).unwrap_or(false)
                            })
                        })
                    })
                    .cloned()
                    .collect()
            },
            any,
            |m, i| {
                let cog = is_I_cogenerated(&m, &i)?;
                let gen = generated(&m, &i)?;
                Ok(verdict(cog == gen, || format!("cogenerated {cog}, generated {gen}")))
            },
        ),
        "ex3_4" => {
            let mut out = Vec::new();
            for rd in data {
                let e = injective_hull(&rd.ring)?.module().clone();
                for i in &rd.ideals {
                    let (e, i2) = (e.clone(), i.clone());
                    out.push(case(
                        rd,
                        "E",
                        i.describe(),
                        Box::new(move || {
                            let cog = is_I_cogenerated(&e, &i2)?;
                            let iso = iso_to_ring(&i2)?;
                            Ok(verdict(cog == iso, || format!("cogenerated {cog}, I ≅ R is {iso}")))
                        }),
                    ));
                }
            }
            out
        }
        "ex3_5" => per_ring(data, is_special_qf, |rd| {
            let m = Ideal::maximal(&rd.ring);
            let mut subs = Vec::new();
            let mut quots = Vec::new();
            for a in &rd.ideals {
                if is_I_cogenerated(&ideal_module(a)?, &m)? {
                    subs.push(a.clone());
                }
                if is_I_cogenerated(&cyclic_quotient(a)?, &m)? {
                    quots.push(a.clone());
                }
            }
            let (subs, quots) = (names(subs), names(quots));
            Ok(verdict(subs == set(&["0", "m^2"]) && quots == set(&["R", "m", "m^2"]), || {
                format!("submodules {subs:?}, quotients by {quots:?}")
            }))
        }),
        "lemma41" => per_pair_ideal(data, budgets, |m, i, b| {
            let lower = lower_star(&m, &i)?;
            let im = mult_sub(&i, &m)?;
            if !lower.contains(&im)? || !m.contains(&lower)? {
                return Ok(Verdict::Fail("IM ⊆ M_* ⊆ M fails".into()));
            }
            if colon_sub(&lower, &i)? != colon_sub(&m, &i)? {
                return Ok(Verdict::Fail("M_* : I differs from M : I".into()));
            }
            if lower_star(&lower, &i)? != lower {
                return Ok(Verdict::Fail("M_** differs from M_*".into()));
            }
            if !check_lower_star_maximal(&m, &i, b.lattice)? {
                return Ok(Verdict::Fail("M_* is not the largest klein submodule".into()));
            }
            if !check_upper_star_minimal(&m, &i, b.lattice)? {
                return Ok(Verdict::Fail("M^* is not the smallest gross intermediate".into()));
            }
            Ok(Verdict::Pass)
        }),
        "bem42" => per_pair_ideal(data, budgets, |m, i, _| {
            let rep = bemerkung42_checks(&m, &i)?;
            Ok(verdict(rep.holds(), || format!("{rep:?}")))
        }),
        "beisp_s4" => per_ring(data, is_special_qf, |rd| {
            let r = &rd.ring;
            let x = FinModule::regular(r);
            let m = Ideal::maximal(r);
            let m2 = m.power(2)?;
            let as_sub = |i: &Ideal| Submodule::from_space(&x, i.space().clone());
            for b in &rd.ideals {
                let (lo, up) = if b.is_zero() {
                    (Ideal::zero(r), m2.clone())
                } else if *b == m2 {
                    (m2.clone(), m2.clone())
                } else if *b == m {
                    (m.clone(), m.clone())
                } else if b.is_unit() {
                    (m.clone(), Ideal::unit(r))
                } else {
                    (m2.clone(), m.clone())
                };
                let bs = as_sub(b)?;
                if lower_star(&bs, &m)? != as_sub(&lo)? || upper_star(&bs, &m)? != as_sub(&up)? {
                    return Ok(Verdict::Fail(format!("row b = {b}")));
                }
            }
            Ok(Verdict::Pass)
        }),
        "lemma43" => per_pair_ideal(data, budgets, |m, i, _| {
            let dual = matlis_dual(m.parent())?;
            let ann = ann_in_dual(&m, &dual)?;
            let (k, g) = (is_I_klein(&m, &i)?, is_I_gross(&ann, &i)?);
            Ok(verdict(k == g, || format!("klein {k}, Ann gross {g}")))
        }),
        "bem44" => per_pair_ideal(data, budgets, |b, i, _| {
            let (g, k) = gross_klein_bridge(&b, &i)?;
            Ok(verdict(g == k, || format!("gross {g}, Ann klein {k}")))
        }),
        "lemma45" => per_pair_ideal(data, budgets, |m, i, b| {
            if !strongly_klein_criterion(&m, &i)? {
                return Ok(Verdict::Skipped("not strongly klein".into()));
            }
            for x1 in enumerate_submodules(m.parent(), b.lattice)?.members() {
                if !lemma45_transfer(&m, x1, &i)? {
                    return Ok(Verdict::Fail(format!("image fails in X/X1 with len X1 = {}", x1.dim())));
                }
            }
            Ok(Verdict::Pass)
        }),
        "satz46" => per_pair_ideal(data, budgets, |m, i, b| {
            let crit = strongly_klein_criterion(&m, &i)?;
            let quant = oracle_strongly_klein(&m, &i, b.lattice)?;
            Ok(verdict(crit == quant, || format!("criterion {crit}, quantifier {quant}")))
        }),
        "bem47" => per_pair_ideal(data, budgets, |m, i, b| {
            let crit = strongly_gross_criterion(&m, &i)?;
            let quant = oracle_strongly_gross(&m, &i, b.lattice)?;
            Ok(verdict(crit == quant, || format!("criterion {crit}, quantifier {quant}")))
        }),
        "folg48" => per_pair_ideal(data, budgets, |m, i, _| {
            let dual = matlis_dual(m.parent())?;
            let ann = ann_in_dual(&m, &dual)?;
            let (k, g) = (is_strongly_I_klein(&m, &i)?, is_strongly_I_gross(&ann, &i)?);
            Ok(verdict(k == g, || format!("strongly klein {k}, Ann strongly gross {g}")))
        }),
        other => return Err(Error::UnknownTheorem(other.to_string())),
    };
    Ok(cases)
}

/// Sweeps the catalog for one theorem.
pub fn verify(theorem_id: &str, catalog: &Catalog, budgets: Budgets) -> Result<VerificationReport> {
    if !THEOREM_IDS.contains(&theorem_id) {
        return Err(Error::UnknownTheorem(theorem_id.to_string()));
    }
    let data = expand_catalog(catalog)?;
    verify_expanded(theorem_id, &data, budgets)
}

/// As [`verify`], reusing an expanded catalog.
pub fn verify_expanded(theorem_id: &str, data: &[RingData], budgets: Budgets) -> Result<VerificationReport> {
    let cases = build_cases(theorem_id, data, budgets)?;
    let results = cases
        .par_iter()
        .map(|c| {
            let verdict = match (c.check)() {
                Ok(v) => v,
                Err(Error::BudgetExceeded { needed, budget }) => {
                    Verdict::Skipped(format!("budget exceeded: {needed} > {budget}"))
                }
                Err(e) => Verdict::Fail(format!("error: {e}")),
            };
            CaseResult {
                theorem: theorem_id.to_string(),
                ring: c.ring.clone(),
                module: c.module.clone(),
                ideal: c.ideal.clone(),
                verdict,
            }
        })
        .collect();
    Ok(VerificationReport {
        theorem: theorem_id.to_string(),
        cases: results,
    })
}
