//! Finite local algebras `GF(p)[vars] / ((rels) + m^D)` and their ideals.
//!
//! The algebra is coordinatized by its standard monomials in ascending
//! degree-lex order (so coordinate 0 is always the unit). Ideals are
//! subspaces stable under every variable action.

use std::collections::HashMap;
use std::fmt;
use std::sync::Arc;

use crate::error::{Error, Result};
use crate::exactla::{self, preimage, FpMatrix, Subspace};
use crate::presentation::{
    cmp_deglex, degree, format_monomial, AnnArg, IdealExpr, Monomial, Poly, PolyStyle, RingPresentation,
};

#[derive(Debug)]
pub struct FiniteLocalAlgebra {
    presentation: RingPresentation,
    basis: Vec<Monomial>,
    var_action: Vec<FpMatrix>,
    basis_action: Vec<FpMatrix>,
    /// Truncated monomials, descending degree-lex: the column order used for reduction.
    columns: Vec<Monomial>,
    column_of: HashMap<Monomial, usize>,
    relation_space: Subspace,
    basis_column: Vec<usize>,
}

fn monomials_below(nvars: usize, trunc: u32) -> Vec<Monomial> {
    fn rec(prefix: &mut Vec<u32>, nvars: usize, budget: u32, out: &mut Vec<Monomial>) {
        if prefix.len() == nvars {
            out.push(prefix.clone());
            return;
        }
        for e in 0..=budget {
            prefix.push(e);
            rec(prefix, nvars, budget - e, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    rec(&mut Vec::new(), nvars, trunc - 1, &mut out);
    out
}

impl FiniteLocalAlgebra {
    pub fn build(presentation: RingPresentation) -> Result<Arc<Self>> {
        let p = presentation.p;
        let nvars = presentation.vars.len();
        if nvars == 0 {
            return Err(Error::InvalidRing("no variables".into()));
        }
        let trunc = presentation.trunc;
        let mut columns = monomials_below(nvars, trunc);
        columns.sort_by(|a, b| cmp_deglex(b, a));
        let column_of: HashMap<Monomial, usize> =
            columns.iter().enumerate().map(|(i, m)| (m.clone(), i)).collect();
        let ncols = columns.len();

        let mut rows = Vec::new();
        for rel in &presentation.rels {
            if rel.constant_term() != 0 {
                return Err(Error::InvalidRing("relation with nonzero constant term".into()));
            }
            for u in &columns {
                let mut v = vec![0u8; ncols];
                for (m, c) in rel.terms() {
                    let prod: Monomial = m.iter().zip(u).map(|(a, b)| a + b).collect();
                    if let Some(&col) = column_of.get(&prod) {
                        v[col] = exactla::add(v[col], c, p);
                    }
                }
                if !exactla::is_zero_vec(&v) {
                    rows.push(v);
                }
            }
        }
        let relation_space = Subspace::span(p, ncols, rows)?;
        let mut is_pivot = vec![false; ncols];
        for &c in relation_space.pivots() {
            is_pivot[c] = true;
        }
        let mut basis_column: Vec<usize> = (0..ncols).filter(|&c| !is_pivot[c]).collect();
        basis_column.sort_by_key(|&c| (degree(&columns[c]), std::cmp::Reverse(columns[c].clone())));
        let basis: Vec<Monomial> = basis_column.iter().map(|&c| columns[c].clone()).collect();
        let dim = basis.len();

        let mut ring = Self {
            presentation,
            basis,
            var_action: Vec::new(),
            basis_action: Vec::new(),
            columns,
            column_of,
            relation_space,
            basis_column,
        };

        ring.var_action = (0..nvars)
            .map(|v| {
                let cols: Vec<Vec<u8>> = ring
                    .basis
                    .iter()
                    .map(|b| {
                        let mut m = b.clone();
                        m[v] += 1;
                        ring.monomial_coords(&m)
                    })
                    .collect();
                FpMatrix::from_columns(p, dim, &cols)
            })
            .collect();
        ring.basis_action = ring
            .basis
            .iter()
            .map(|b| ring.monomial_action(b))
            .collect::<Result<_>>()?;
        ring.check_invariants()?;
        Ok(Arc::new(ring))
    }

    /// Product of variable actions along the exponent vector.
    fn monomial_action(&self, exps: &[u32]) -> Result<FpMatrix> {
        let mut m = FpMatrix::identity(self.p(), self.dim());
        for (v, &e) in exps.iter().enumerate() {
            for _ in 0..e {
                m = self.var_action[v].mul(&m)?;
            }
        }
        Ok(m)
    }

    /// Coordinates of a monomial's normal form.
    fn monomial_coords(&self, m: &[u32]) -> Vec<u8> {
        let mut v = vec![0u8; self.columns.len()];
        match self.column_of.get(m) {
            Some(&c) => v[c] = 1,
            None => return vec![0; self.dim()],
        }
        self.reduce_columns(&v)
    }

    fn reduce_columns(&self, v: &[u8]) -> Vec<u8> {
        let r = self.relation_space.reduce(v);
        self.basis_column.iter().map(|&c| r[c]).collect()
    }

    fn check_invariants(&self) -> Result<()> {
        let n = self.dim();
        let p = self.p();
        if n == 0 || self.basis[0].iter().any(|&e| e != 0) {
            return Err(Error::InvalidRing("unit is not a standard monomial".into()));
        }
        if self.basis_action[0] != FpMatrix::identity(p, n) {
            return Err(Error::InvalidRing("1 is not neutral".into()));
        }
        for a in &self.var_action {
            for b in &self.var_action {
                if !a.commutes_with(b) {
                    return Err(Error::InvalidRing("variable actions do not commute".into()));
                }
            }
        }
        for i in 0..n {
            for j in 0..n {
                let ij = self.basis_action[i].column(j);
                if ij != self.basis_action[j].column(i) {
                    return Err(Error::InvalidRing(format!("b{i}*b{j} != b{j}*b{i}")));
                }
                let l_ij = self.element_action(&ij);
                for k in 0..n {
                    let left = l_ij.column(k);
                    let right = self.basis_action[i].apply(&self.basis_action[j].column(k));
                    if left != right {
                        return Err(Error::InvalidRing(format!("associativity fails at ({i},{j},{k})")));
                    }
                }
            }
        }
        for a in &self.var_action {
            let mut pw = FpMatrix::identity(p, n);
            for _ in 0..self.presentation.trunc {
                pw = a.mul(&pw)?;
            }
            if !pw.is_zero() {
                return Err(Error::InvalidRing("variable is not nilpotent".into()));
            }
        }
        Ok(())
    }

    pub fn presentation(&self) -> &RingPresentation {
        &self.presentation
    }

    pub fn p(&self) -> u8 {
        self.presentation.p
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn nvars(&self) -> usize {
        self.presentation.vars.len()
    }

    pub fn vars(&self) -> &[String] {
        &self.presentation.vars
    }

    pub fn trunc(&self) -> u32 {
        self.presentation.trunc
    }

    pub fn basis(&self) -> &[Monomial] {
        &self.basis
    }

    /// Multiplication operators, one per variable.
    pub fn var_actions(&self) -> &[FpMatrix] {
        &self.var_action
    }

    /// Multiplication operator of each basis monomial.
    pub fn basis_actions(&self) -> &[FpMatrix] {
        &self.basis_action
    }

    /// Structure constants: coordinates of `basis[i] * basis[j]`.
    pub fn mult_table(&self, i: usize, j: usize) -> Vec<u8> {
        self.basis_action[i].column(j)
    }

    /// Left multiplication by an element.
    pub fn element_action(&self, a: &[u8]) -> FpMatrix {
        let n = self.dim();
        let mut m = FpMatrix::zeros(self.p(), n, n);
        for (c, l) in a.iter().zip(&self.basis_action) {
            if *c != 0 {
                m.add_scaled(*c, l);
            }
        }
        m
    }

    pub fn mul(&self, a: &[u8], b: &[u8]) -> Vec<u8> {
        self.element_action(a).apply(b)
    }

    pub fn one(&self) -> Vec<u8> {
        exactla::unit_vector(self.dim(), 0)
    }

    pub fn is_unit(&self, a: &[u8]) -> bool {
        a[0] != 0
    }

    /// Solves `a * x = 1`.
    pub fn inverse(&self, a: &[u8]) -> Option<Vec<u8>> {
        let l = self.element_action(a);
        let inv = l.inverse()?;
        Some(inv.apply(&self.one()))
    }

    /// Reduces a polynomial to normal form.
    pub fn normal_form(&self, f: &Poly) -> Poly {
        self.element_to_poly(&self.element_from_poly(f))
    }

    pub fn element_from_poly(&self, f: &Poly) -> Vec<u8> {
        let mut v = vec![0u8; self.columns.len()];
        for (m, c) in f.terms() {
            if let Some(&col) = self.column_of.get(m) {
                v[col] = exactla::add(v[col], c, self.p());
            }
        }
        self.reduce_columns(&v)
    }

    pub fn element_to_poly(&self, v: &[u8]) -> Poly {
        let mut f = Poly::zero(self.p(), self.nvars());
        for (c, m) in v.iter().zip(&self.basis) {
            f.add_term(m.clone(), *c);
        }
        f
    }

    pub fn format_element(&self, v: &[u8]) -> String {
        self.element_to_poly(v).display(self.vars(), PolyStyle::Compact).to_string()
    }

    pub fn format_basis(&self) -> Vec<String> {
        self.basis
            .iter()
            .map(|m| format_monomial(m, self.vars(), PolyStyle::Compact))
            .collect()
    }

    /// Degree of each basis monomial.
    pub fn basis_degrees(&self) -> Vec<u32> {
        self.basis.iter().map(|m| degree(m)).collect()
    }
}

pub fn same_ring(a: &Arc<FiniteLocalAlgebra>, b: &Arc<FiniteLocalAlgebra>) -> bool {
    Arc::ptr_eq(a, b) || (a.presentation == b.presentation && a.basis == b.basis)
}

pub fn build(pres: RingPresentation) -> Result<Arc<FiniteLocalAlgebra>> {
    FiniteLocalAlgebra::build(pres)
}

/// An ideal, stored as a variable-stable subspace of the ring.
#[derive(Clone, Debug)]
pub struct Ideal {
    ring: Arc<FiniteLocalAlgebra>,
    space: Subspace,
}

impl PartialEq for Ideal {
    fn eq(&self, other: &Self) -> bool {
        same_ring(&self.ring, &other.ring) && self.space == other.space
    }
}

impl Eq for Ideal {}

impl Ideal {
    /// Smallest ideal containing the span of `vectors`.
    pub fn generated_by(ring: &Arc<FiniteLocalAlgebra>, vectors: Vec<Vec<u8>>) -> Result<Self> {
        let start = Subspace::span(ring.p(), ring.dim(), vectors)?;
        Ok(Self {
            ring: ring.clone(),
            space: close_under(&start, ring.var_actions())?,
        })
    }

    /// Wraps a subspace already known to be stable.
    pub fn from_space(ring: &Arc<FiniteLocalAlgebra>, space: Subspace) -> Result<Self> {
        if space.ambient_dim() != ring.dim() {
            return Err(Error::RingMismatch);
        }
        if !ring.var_actions().iter().all(|a| space.is_stable_under(a)) {
            return Err(Error::InvalidModule("subspace is not an ideal".into()));
        }
        Ok(Self {
            ring: ring.clone(),
            space,
        })
    }

    pub fn zero(ring: &Arc<FiniteLocalAlgebra>) -> Self {
        Self {
            ring: ring.clone(),
            space: Subspace::zero(ring.p(), ring.dim()),
        }
    }

    pub fn unit(ring: &Arc<FiniteLocalAlgebra>) -> Self {
        Self {
            ring: ring.clone(),
            space: Subspace::full(ring.p(), ring.dim()),
        }
    }

    /// The span of all non-unit standard monomials.
    pub fn maximal(ring: &Arc<FiniteLocalAlgebra>) -> Self {
        let n = ring.dim();
        let vs = (1..n).map(|i| exactla::unit_vector(n, i)).collect();
        Self {
            ring: ring.clone(),
            space: Subspace::span_unchecked(ring.p(), n, vs),
        }
    }

    pub fn ring(&self) -> &Arc<FiniteLocalAlgebra> {
        &self.ring
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

    pub fn is_unit(&self) -> bool {
        self.space.is_full()
    }

    fn check(&self, other: &Ideal) -> Result<()> {
        if same_ring(&self.ring, &other.ring) {
            Ok(())
        } else {
            Err(Error::RingMismatch)
        }
    }

    /// `other ⊆ self`.
    pub fn contains(&self, other: &Ideal) -> Result<bool> {
        self.check(other)?;
        Ok(self.space.contains(&other.space)?)
    }

    pub fn sum(&self, other: &Ideal) -> Result<Ideal> {
        self.check(other)?;
        Ok(Ideal {
            ring: self.ring.clone(),
            space: self.space.sum(&other.space)?,
        })
    }

    pub fn intersect(&self, other: &Ideal) -> Result<Ideal> {
        self.check(other)?;
        Ok(Ideal {
            ring: self.ring.clone(),
            space: self.space.intersect(&other.space)?,
        })
    }

    pub fn product(&self, other: &Ideal) -> Result<Ideal> {
        self.check(other)?;
        let mut vs = Vec::new();
        for a in self.space.basis() {
            let la = self.ring.element_action(a);
            vs.extend(other.space.basis().iter().map(|b| la.apply(b)));
        }
        Ideal::generated_by(&self.ring, vs)
    }

    pub fn power(&self, n: u32) -> Result<Ideal> {
        let mut acc = Ideal::unit(&self.ring);
        for _ in 0..n {
            acc = acc.product(self)?;
            if acc.is_zero() {
                break;
            }
        }
        Ok(acc)
    }

    /// `(self : divisor) = {r : r * divisor ⊆ self}`; `(J : 0) = R`.
    pub fn colon(&self, divisor: &Ideal) -> Result<Ideal> {
        self.check(divisor)?;
        let n = self.ring.dim();
        let mut acc = Subspace::full(self.ring.p(), n);
        for g in divisor.space.basis() {
            // r ↦ r g is multiplication by g (commutative ring)
            let lg = self.ring.element_action(g);
            acc = acc.intersect(&preimage(&lg, &self.space)?)?;
        }
        Ok(Ideal {
            ring: self.ring.clone(),
            space: acc,
        })
    }

    /// `Ann_R(self) = 0 : self`.
    pub fn annihilator(&self) -> Result<Ideal> {
        Ideal::zero(&self.ring).colon(self)
    }

    /// `dim I / mI`.
    pub fn min_generator_count(&self) -> Result<usize> {
        let mi = Ideal::maximal(&self.ring).product(self)?;
        Ok(self.dim() - mi.dim())
    }

    pub fn is_principal(&self) -> Result<bool> {
        Ok(self.min_generator_count()? <= 1)
    }

    /// Minimal generators: reduced basis rows that are independent modulo `mI`.
    pub fn minimal_generators(&self) -> Result<Vec<Vec<u8>>> {
        let mut acc = Ideal::maximal(&self.ring).product(self)?.space;
        let mut gens = Vec::new();
        for b in self.space.basis() {
            if !acc.contains_vector(b) {
                gens.push(b.clone());
                acc = acc.sum(&Subspace::span_unchecked(self.ring.p(), self.ring.dim(), vec![b.clone()]))?;
            }
        }
        Ok(gens)
    }

    /// Symbolic alias when the ideal is `0`, `R`, `m`, `m^k` or `So(R)`.
    pub fn alias(&self) -> Option<String> {
        if self.is_zero() {
            return Some("0".into());
        }
        if self.is_unit() {
            return Some("R".into());
        }
        let m = Ideal::maximal(&self.ring);
        let mut pw = m.clone();
        let mut k = 1;
        while !pw.is_zero() {
            if *self == pw {
                return Some(if k == 1 { "m".into() } else { format!("m^{k}") });
            }
            let next = pw.product(&m).ok()?;
            if next == pw {
                break;
            }
            pw = next;
            k += 1;
        }
        if socle_ring(&self.ring).ok()? == *self {
            return Some("So(R)".into());
        }
        None
    }

    /// Canonical generator list, e.g. `(x,y^2)`.
    pub fn generator_string(&self) -> String {
        if self.is_zero() {
            return "(0)".into();
        }
        let gens = self.minimal_generators().unwrap_or_default();
        let parts: Vec<String> = gens.iter().map(|g| self.ring.format_element(g)).collect();
        format!("({})", parts.join(","))
    }

    /// Alias if one applies, otherwise the canonical generators.
    pub fn describe(&self) -> String {
        self.alias().unwrap_or_else(|| self.generator_string())
    }
}

impl fmt::Display for Ideal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.describe())
    }
}

/// Smallest subspace containing `start` and stable under every matrix in `actions`.
pub fn close_under(start: &Subspace, actions: &[FpMatrix]) -> Result<Subspace> {
    let mut current = start.clone();
    loop {
        let mut vs: Vec<Vec<u8>> = current.basis().to_vec();
        for a in actions {
            vs.extend(current.basis().iter().map(|b| a.apply(b)));
        }
        let next = Subspace::span(current.modulus(), current.ambient_dim(), vs)?;
        if next.dim() == current.dim() {
            return Ok(current);
        }
        current = next;
    }
}

pub fn ideal_from_polys(ring: &Arc<FiniteLocalAlgebra>, gens: &[Poly]) -> Result<Ideal> {
    Ideal::generated_by(ring, gens.iter().map(|g| ring.element_from_poly(g)).collect())
}

pub fn product(a: &Ideal, b: &Ideal) -> Result<Ideal> {
    a.product(b)
}

pub fn power(a: &Ideal, n: u32) -> Result<Ideal> {
    a.power(n)
}

pub fn colon(j: &Ideal, i: &Ideal) -> Result<Ideal> {
    j.colon(i)
}

/// `So(R) = 0 : m`.
pub fn socle_ring(ring: &Arc<FiniteLocalAlgebra>) -> Result<Ideal> {
    Ideal::zero(ring).colon(&Ideal::maximal(ring))
}

/// Local Artinian rings are self-injective exactly when the socle is one-dimensional.
pub fn is_quasi_frobenius(ring: &Arc<FiniteLocalAlgebra>) -> Result<bool> {
    Ok(socle_ring(ring)?.dim() == 1)
}

pub fn is_principal(i: &Ideal) -> Result<bool> {
    i.is_principal()
}

pub fn annihilator_ideal(i: &Ideal) -> Result<Ideal> {
    i.annihilator()
}

/// Evaluates an ideal expression; `Ann(<module file>)` goes through `ann_module`.
pub fn eval_ideal(
    ring: &Arc<FiniteLocalAlgebra>,
    expr: &IdealExpr,
    ann_module: &dyn Fn(&str) -> Result<Ideal>,
) -> Result<Ideal> {
    let rec = |e: &IdealExpr| eval_ideal(ring, e, ann_module);
    match expr {
        IdealExpr::Gens(gens) => ideal_from_polys(ring, gens),
        IdealExpr::Maximal => Ok(Ideal::maximal(ring)),
        IdealExpr::Unit => Ok(Ideal::unit(ring)),
        IdealExpr::Zero => Ok(Ideal::zero(ring)),
        IdealExpr::Product(a, b) => rec(a)?.product(&rec(b)?),
        IdealExpr::Colon(a, b) => rec(a)?.colon(&rec(b)?),
        IdealExpr::Power(a, n) => rec(a)?.power(*n),
        IdealExpr::Socle(a) => rec(a)?.intersect(&socle_ring(ring)?),
        IdealExpr::Ann(AnnArg::Ideal(a)) => rec(a)?.annihilator(),
        IdealExpr::Ann(AnnArg::ModuleFile(path)) => ann_module(path),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::presentation::parse_ring;

    fn ring(text: &str) -> Arc<FiniteLocalAlgebra> {
        build(parse_ring(text).unwrap()).unwrap()
    }

    fn r4() -> Arc<FiniteLocalAlgebra> {
        ring("p=2 vars=x,y rels=x^2,y^2 trunc=3")
    }

    fn gen(r: &Arc<FiniteLocalAlgebra>, s: &str) -> Ideal {
        let f = crate::presentation::parse_poly(s, r.p(), r.vars()).unwrap();
        ideal_from_polys(r, &[f]).unwrap()
    }

    #[test]
    fn r4_basis() {
        let r = r4();
        assert_eq!(r.dim(), 4);
        assert_eq!(r.format_basis(), vec!["1", "x", "y", "xy"]);
    }

    #[test]
    fn chain_ring_basis() {
        let u4 = ring("p=2 vars=x rels= trunc=4");
        assert_eq!(u4.format_basis(), vec!["1", "x", "x^2", "x^3"]);
    }

    #[test]
    fn trunc_only_basis() {
        let r = ring("p=3 vars=x,y rels= trunc=2");
        assert_eq!(r.format_basis(), vec!["1", "x", "y"]);
    }

    #[test]
    fn relation_with_lower_order_term_is_reduced() {
        // x = x^2 forces x = 0 once x^3 = 0
        let r = ring("p=2 vars=x rels=x+x^2 trunc=3");
        assert_eq!(r.dim(), 1);
    }

    #[test]
    fn principal_ideal_closure() {
        let r = r4();
        let x = gen(&r, "x");
        assert_eq!(x.dim(), 2);
        assert!(x.space().contains_vector(&[0, 0, 0, 1]));
        assert!(Ideal::generated_by(&r, vec![vec![0; 4]]).unwrap().is_zero());
        assert!(gen(&r, "1").is_unit());
    }

    #[test]
    fn products_and_powers() {
        let r = r4();
        let m = Ideal::maximal(&r);
        let m2 = m.product(&m).unwrap();
        assert_eq!(m2, gen(&r, "x*y"));
        assert!(m.power(3).unwrap().is_zero());
        assert_eq!(m.power(0).unwrap(), Ideal::unit(&r));
        let x = gen(&r, "x");
        assert_eq!(x.product(&Ideal::unit(&r)).unwrap(), x);
    }

    #[test]
    fn colons() {
        let r = r4();
        let m = Ideal::maximal(&r);
        let m2 = m.power(2).unwrap();
        assert_eq!(m2.colon(&m).unwrap(), m);
        assert_eq!(Ideal::zero(&r).colon(&m).unwrap(), m2);
        let x = gen(&r, "x");
        assert_eq!(x.colon(&Ideal::unit(&r)).unwrap(), x);
        assert_eq!(x.colon(&Ideal::zero(&r)).unwrap(), Ideal::unit(&r));
    }

    #[test]
    fn socles_and_qf() {
        let r = r4();
        assert_eq!(socle_ring(&r).unwrap(), gen(&r, "x*y"));
        assert!(is_quasi_frobenius(&r).unwrap());
        let u4 = ring("p=2 vars=x rels= trunc=4");
        assert_eq!(socle_ring(&u4).unwrap(), gen(&u4, "x^3"));
        assert!(is_quasi_frobenius(&u4).unwrap());
        let k = ring("p=2 vars=x rels= trunc=1");
        assert_eq!(socle_ring(&k).unwrap(), Ideal::unit(&k));
        let sq = ring("p=2 vars=x,y rels= trunc=2");
        assert!(!is_quasi_frobenius(&sq).unwrap());
        assert_eq!(socle_ring(&sq).unwrap().dim(), 2);
    }

    #[test]
    fn principal_and_annihilators() {
        let r = r4();
        let x = gen(&r, "x");
        assert!(x.is_principal().unwrap());
        assert_eq!(x.annihilator().unwrap(), x);
        let m = Ideal::maximal(&r);
        assert!(!m.is_principal().unwrap());
        assert_eq!(m.min_generator_count().unwrap(), 2);
        let z = Ideal::zero(&r);
        assert!(z.is_principal().unwrap());
        assert_eq!(z.annihilator().unwrap(), Ideal::unit(&r));
    }

    #[test]
    fn ring_mismatch() {
        let a = r4();
        let b = ring("p=2 vars=x rels= trunc=4");
        assert_eq!(
            Ideal::maximal(&a).product(&Ideal::maximal(&b)).unwrap_err(),
            Error::RingMismatch
        );
    }

    #[test]
    fn aliases_and_generators() {
        let r = r4();
        assert_eq!(Ideal::maximal(&r).describe(), "m");
        assert_eq!(socle_ring(&r).unwrap().describe(), "m^2");
        assert_eq!(gen(&r, "x").describe(), "(x)");
        assert_eq!(gen(&r, "x+y").describe(), "(x+y)");
        assert_eq!(Ideal::zero(&r).describe(), "0");
        let ng = ring("p=2 vars=x,y rels=x^2,x*y trunc=4");
        let so = socle_ring(&ng).unwrap();
        assert_eq!(so.dim(), 2);
        assert_eq!(so.alias().as_deref(), Some("So(R)"));
    }

    #[test]
    fn units_invert() {
        let r = r4();
        let u = vec![1, 1, 0, 1];
        let v = r.inverse(&u).unwrap();
        assert_eq!(r.mul(&u, &v), r.one());
        assert!(r.inverse(&[0, 1, 1, 0]).is_none());
    }

    #[test]
    fn eval_expressions() {
        let r = r4();
        let pres = r.presentation().clone();
        let no_files = |_: &str| -> Result<Ideal> { Err(Error::Io("no files".into())) };
        let e = crate::presentation::parse_ideal("(x*y) : m", &pres).unwrap();
        assert_eq!(eval_ideal(&r, &e, &no_files).unwrap(), Ideal::maximal(&r));
        let so = crate::presentation::parse_ideal("So(R)", &pres).unwrap();
        assert_eq!(eval_ideal(&r, &so, &no_files).unwrap(), socle_ring(&r).unwrap());
        let ann = crate::presentation::parse_ideal("Ann((x))", &pres).unwrap();
        assert_eq!(eval_ideal(&r, &ann, &no_files).unwrap(), gen(&r, "x"));
    }
}
