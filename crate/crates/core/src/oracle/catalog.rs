//! The shipped test catalog: ring files in a directory, and the modules
//! derived from each ring.

use std::path::Path;
use std::sync::Arc;

use crate::error::{Error, Result};
use crate::flmod::{cyclic_quotient, direct_sum, ideal_module, FinModule};
use crate::gencrit::is_uniserial;
use crate::matlis::{injective_hull, matlis_dual};
use crate::presentation::parse_ring;
use crate::ring::{build, FiniteLocalAlgebra, Ideal};

use super::enumerate_ideals;

/// Ideal enumeration bound for catalog rings.
const CATALOG_IDEAL_BUDGET: u128 = 1 << 12;
/// Number of uniserial cyclic modules paired up into direct sums.
const SUMMAND_POOL: usize = 3;

#[derive(Clone, Debug)]
pub struct CatalogRing {
    pub name: String,
    pub ring: Arc<FiniteLocalAlgebra>,
}

#[derive(Clone, Debug)]
pub struct NamedModule {
    pub name: String,
    pub module: Arc<FinModule>,
}

#[derive(Clone, Debug, Default)]
pub struct Catalog {
    rings: Vec<CatalogRing>,
}

impl Catalog {
    pub fn new(rings: Vec<CatalogRing>) -> Self {
        Self { rings }
    }

    /// Reads every `*.ring` file of a directory, ordered by file name.
    pub fn load_dir(dir: impl AsRef<Path>) -> Result<Self> {
        let dir = dir.as_ref();
        let entries = std::fs::read_dir(dir).map_err(|e| Error::Io(format!("{}: {e}", dir.display())))?;
        let mut paths: Vec<_> = entries
            .filter_map(|e| e.ok().map(|e| e.path()))
            .filter(|p| p.extension().is_some_and(|x| x == "ring"))
            .collect();
        paths.sort();
        let mut rings = Vec::new();
        for path in paths {
            let text = std::fs::read_to_string(&path).map_err(|e| Error::Io(format!("{}: {e}", path.display())))?;
            let name = path.file_stem().unwrap_or_default().to_string_lossy().into_owned();
            rings.push(CatalogRing {
                name,
                ring: build(parse_ring(&text)?)?,
            });
        }
        if rings.is_empty() {
            return Err(Error::Io(format!("{}: no .ring files", dir.display())));
        }
        Ok(Self { rings })
    }

    /// The sub-catalog holding only the ring called `name`.
    pub fn only(&self, name: &str) -> Self {
        self.filtered(|r| r.name == name)
    }

    pub fn filtered(&self, keep: impl Fn(&CatalogRing) -> bool) -> Self {
        Self {
            rings: self.rings.iter().filter(|r| keep(r)).cloned().collect(),
        }
    }

    pub fn rings(&self) -> &[CatalogRing] {
        &self.rings
    }
}

/// All ideals of a catalog ring, in lattice order.
pub fn catalog_ideals(ring: &Arc<FiniteLocalAlgebra>) -> Result<Vec<Ideal>> {
    enumerate_ideals(ring, CATALOG_IDEAL_BUDGET)?.ideals(ring)
}

/// `0, k, R, E`, every `R/a` and its dual, every proper nonzero ideal as a
/// module, and pairwise sums of a few uniserial cyclics. Structural
/// duplicates keep their first name.
pub fn catalog_modules(ring: &Arc<FiniteLocalAlgebra>, ideals: &[Ideal]) -> Result<Vec<NamedModule>> {
    let mut out: Vec<NamedModule> = Vec::new();
    let mut push = |name: String, module: Arc<FinModule>| {
        if !out.iter().any(|m| m.module.same_as(&module)) {
            out.push(NamedModule { name, module });
        }
    };
    push("0".into(), FinModule::zero(ring));
    push("k".into(), FinModule::residue_field(ring));
    push("R".into(), FinModule::regular(ring));
    push("E".into(), injective_hull(ring)?.module().clone());
    let proper: Vec<&Ideal> = ideals.iter().filter(|a| !a.is_unit()).collect();
    let mut uniserial = Vec::new();
    for a in &proper {
        let q = cyclic_quotient(a)?;
        let name = format!("R/{}", a.describe());
        if uniserial.len() < SUMMAND_POOL && q.dim() > 0 && is_uniserial(&q)? {
            uniserial.push((name.clone(), q.clone()));
        }
        let dual = matlis_dual(&q)?.module().clone();
        push(name.clone(), q);
        push(format!("({name})°"), dual);
    }
    for a in proper.iter().filter(|a| !a.is_zero()) {
        push(a.describe(), ideal_module(a)?);
    }
    for (i, (na, a)) in uniserial.iter().enumerate() {
        for (nb, b) in &uniserial[i..] {
            push(format!("{na}+{nb}"), direct_sum(a, b)?);
        }
    }
    Ok(out)
}
