#![allow(dead_code)]

use liestruct::enumerate::SubspacesOfDim;
use liestruct::{hunt, Field, LieAlgebra, Subspace};

pub const CORPUS_SEED: u64 = 20_240_601;

/// 200 seeded algebras of dimension at most 4 over `GF(p)`.
pub fn corpus(p: u32) -> Vec<LieAlgebra> {
    hunt::corpus(Field::Prime(p), 4, 200, CORPUS_SEED)
        .unwrap()
        .into_iter()
        .map(|(_, _, l)| l)
        .collect()
}

/// Every subspace of `GF(q)^n`, by increasing dimension.
pub fn all_subspaces(field: Field, n: usize) -> Vec<Subspace> {
    (0..=n).flat_map(|k| SubspacesOfDim::new(field, n, k)).collect()
}

/// Every subspace of `s`, as subspaces of the ambient space.
pub fn subspaces_of(s: &Subspace) -> Vec<Subspace> {
    let k = s.dim();
    all_subspaces(s.field(), k)
        .into_iter()
        .map(|c| {
            let vs: Vec<_> = c.basis().iter().map(|v| s.from_coordinates(v)).collect();
            Subspace::span(s.field(), s.ambient_dim(), &vs)
        })
        .collect()
}

/// A valid algebra of dimension `n` over `field`, reproducible from `seed`.
pub fn random_algebra(field: Field, n: usize, seed: u64) -> LieAlgebra {
    let cfg = hunt::HuntConfig::new(field, n, n, u64::MAX, seed).unwrap();
    (0..)
        .find_map(|i| hunt::sample(&cfg, i).1)
        .expect("the sampler eventually accepts")
}
