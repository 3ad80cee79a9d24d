//! `parse ∘ serialize` is the identity, and serialization is canonical.

mod common;

use common::random_algebra;
use liestruct::{catalog, format, Field, LieAlgebra, Matrix};
use proptest::prelude::*;

fn round_trip(l: &LieAlgebra) {
    let text = format::serialize(l);
    let back = format::parse(&text).unwrap();
    assert_eq!(&back, l);
    assert_eq!(format::serialize(&back), text);
}

/// `Q^a ⋊ Q` acting by a random rational matrix, in a random rational basis.
fn rational_algebra(a: usize, entries: &[(i64, i64)], basis: &[(i64, i64)]) -> Option<LieAlgebra> {
    let q = Field::Rationals;
    let r = |&(n, d): &(i64, i64)| q.parse_scalar(&format!("{n}/{d}")).unwrap();
    let rows: Vec<_> = entries.chunks(a).map(|c| c.iter().map(r).collect()).collect();
    let rho = Matrix::from_rows(q, a, &rows).ok()?;
    let b = LieAlgebra::abelian(q, 1).with_names(vec!["x".into()]).ok()?;
    let l = catalog::semidirect(q, (0..a).map(|i| format!("a{i}")).collect(), &b, &[rho]).ok()?;
    let n = a + 1;
    let vs: Vec<_> = basis.chunks(n).map(|c| c.iter().map(r).collect()).collect();
    let m = Matrix::from_rows(q, n, &vs).ok()?;
    (m.rank() == n).then(|| l.change_basis(&m.row_vectors()).ok()).flatten()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(500))]

    #[test]
    fn gf2_round_trip(n in 1usize..=4, seed in any::<u64>()) {
        round_trip(&random_algebra(Field::Prime(2), n, seed));
    }

    #[test]
    fn gf3_dim4_round_trip(seed in any::<u64>()) {
        round_trip(&random_algebra(Field::Prime(3), 4, seed));
    }

    #[test]
    fn gf5_round_trip(n in 1usize..=3, seed in any::<u64>()) {
        round_trip(&random_algebra(Field::Prime(5), n, seed));
    }

    #[test]
    fn rational_round_trip(
        entries in prop::collection::vec((-4i64..=4, 1i64..=3), 9),
        basis in prop::collection::vec((-3i64..=3, 1i64..=2), 16),
    ) {
        if let Some(l) = rational_algebra(3, &entries, &basis) {
            round_trip(&l);
        }
    }
}

#[test]
fn every_catalog_fixture_round_trips() {
    for e in catalog::fixtures() {
        round_trip(&e.algebra);
    }
}
