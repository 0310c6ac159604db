#![allow(dead_code)]

use std::sync::Arc;

use locring::flmod::{presented, submodule_generated, FinModule, Submodule};
use locring::presentation::parse_ring;
use locring::ring::{build, FiniteLocalAlgebra, Ideal};
use proptest::prelude::*;

pub const RINGS: [&str; 5] = [
    "p=2 vars=x,y rels=x^2,y^2 trunc=3",
    "p=3 vars=x,y rels=x^2,y^2 trunc=3",
    "p=2 vars=x rels= trunc=4",
    "p=2 vars=x,y rels=x^2,x*y trunc=4",
    "p=3 vars=x rels= trunc=3",
];

pub fn ring(i: usize) -> Arc<FiniteLocalAlgebra> {
    build(parse_ring(RINGS[i % RINGS.len()]).unwrap()).unwrap()
}

/// Raw material for a random object: a ring index and a pool of byte
/// vectors, reduced mod p and truncated to the right length on use.
#[derive(Clone, Debug)]
pub struct Seed {
    pub ring: usize,
    pub rank: usize,
    pub vecs: Vec<Vec<u8>>,
}

pub fn seed() -> impl Strategy<Value = Seed> {
    (0..RINGS.len(), 1..=2usize, prop::collection::vec(prop::collection::vec(any::<u8>(), 24), 0..6))
        .prop_map(|(ring, rank, vecs)| Seed { ring, rank, vecs })
}

pub fn vectors(p: u8, len: usize, raw: &[Vec<u8>]) -> Vec<Vec<u8>> {
    raw.iter().map(|v| v.iter().take(len).map(|b| b % p).collect()).collect()
}

pub fn ideal_from(r: &Arc<FiniteLocalAlgebra>, raw: &[Vec<u8>]) -> Ideal {
    Ideal::generated_by(r, vectors(r.p(), r.dim(), raw)).unwrap()
}

/// A presented module `R^rank / <relations>` built from the seed.
pub fn module_from(r: &Arc<FiniteLocalAlgebra>, s: &Seed) -> Arc<FinModule> {
    let rels = vectors(r.p(), r.dim() * s.rank, &s.vecs[..s.vecs.len().min(2)]);
    presented(r, s.rank, rels).unwrap()
}

pub fn sub_from(m: &Arc<FinModule>, raw: &[Vec<u8>]) -> Submodule {
    let vecs: Vec<Vec<u8>> = vectors(m.p(), 24, raw).into_iter().map(|v| pad(v, m.dim())).collect();
    submodule_generated(m, vecs).unwrap()
}

fn pad(mut v: Vec<u8>, n: usize) -> Vec<u8> {
    v.resize(n, 0);
    v
}
