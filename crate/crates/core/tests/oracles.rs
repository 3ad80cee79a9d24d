//! Structural deciders against brute force over seeded random corpora.

mod common;

use common::{all_subspaces, corpus, subspaces_of};
use liestruct::enumerate::{all_vectors_of, SubspacesOfDim};
use liestruct::props::{self, SeriesKind};
use liestruct::{triang, Caps, LieAlgebra, ScanConfig, Subspace};

fn engel_nilpotent(l: &LieAlgebra, s: &Subspace) -> bool {
    all_vectors_of(s).iter().all(|x| l.adjoint(x).is_nilpotent())
}

fn literal_quasi_abelian(l: &LieAlgebra) -> bool {
    SubspacesOfDim::new(l.field(), l.dim(), 2).all(|s| l.is_subalgebra(&s))
}

fn ideals(l: &LieAlgebra) -> Vec<Subspace> {
    all_subspaces(l.field(), l.dim())
        .into_iter()
        .filter(|s| l.is_ideal(s))
        .collect()
}

fn brute_supersolvable(l: &LieAlgebra) -> bool {
    let ideals = ideals(l);
    let mut layer = vec![l.zero_space()];
    for k in 1..=l.dim() {
        layer = ideals
            .iter()
            .filter(|i| i.dim() == k && layer.iter().any(|j| i.contains_subspace(j)))
            .cloned()
            .collect();
        if layer.is_empty() {
            return false;
        }
    }
    true
}

fn brute_simple(l: &LieAlgebra) -> bool {
    !l.is_abelian() && ideals(l).iter().all(|i| i.is_zero() || i.is_full())
}

fn sum_all(l: &LieAlgebra, spaces: &[Subspace]) -> Subspace {
    spaces.iter().fold(l.zero_space(), |acc, s| acc.sum(s).unwrap())
}

/// `(F(L), φ(L))` from the full subalgebra lattice.
fn brute_frattini(l: &LieAlgebra) -> (Subspace, Subspace) {
    let proper: Vec<Subspace> = all_subspaces(l.field(), l.dim())
        .into_iter()
        .filter(|s| !s.is_full() && l.is_subalgebra(s))
        .collect();
    let maximal: Vec<&Subspace> = proper
        .iter()
        .filter(|m| !proper.iter().any(|t| t.dim() > m.dim() && t.contains_subspace(m)))
        .collect();
    let f = maximal.iter().fold(l.full_space(), |acc, m| acc.intersect(m).unwrap());
    let inside: Vec<Subspace> = ideals(l).into_iter().filter(|i| f.contains_subspace(i)).collect();
    (f, sum_all(l, &inside))
}

/// nil(S): the largest ideal of `S` made of elements ad-nilpotent on `L`.
fn brute_nil(l: &LieAlgebra, s: &Subspace) -> Subspace {
    let candidates: Vec<Subspace> = subspaces_of(s)
        .into_iter()
        .filter(|i| i.contains_subspace(&l.bracket_spaces(s, i)))
        .filter(|i| engel_nilpotent(l, i))
        .collect();
    let top = candidates.iter().max_by_key(|i| i.dim()).unwrap().clone();
    assert!(candidates.iter().all(|i| top.contains_subspace(i)), "nil(S) not unique");
    top
}

fn each_corpus_algebra(mut f: impl FnMut(usize, &LieAlgebra)) {
    for p in [2, 3] {
        for (i, l) in corpus(p).iter().enumerate() {
            f(i, l);
        }
    }
}

#[test]
fn corpus_is_reproducible_and_varied() {
    let a = corpus(3);
    assert_eq!(a.len(), 200);
    assert_eq!(a, corpus(3));
    let nonsolvable = a.iter().filter(|l| !props::is_solvable(l)).count();
    let nonnilpotent = a.iter().filter(|l| !props::is_nilpotent(l)).count();
    assert!(nonsolvable > 0 && nonnilpotent > 20, "{nonsolvable} {nonnilpotent}");
}

#[test]
fn quasi_abelian_matches_literal_check() {
    each_corpus_algebra(|i, l| {
        let q = props::quasi_abelian_check(l);
        assert_eq!(q.holds, literal_quasi_abelian(l), "algebra {i}");
        if let Some((x, y)) = q.witness {
            let s = Subspace::span(l.field(), l.dim(), &[x, y]);
            assert_eq!(s.dim(), 2);
            assert!(!l.is_subalgebra(&s), "algebra {i}: witness spans a subalgebra");
        }
    });
}

#[test]
fn nilpotency_matches_engel() {
    each_corpus_algebra(|i, l| {
        assert_eq!(
            props::is_nilpotent(l),
            engel_nilpotent(l, &l.full_space()),
            "algebra {i}"
        );
        let d = l.derived_algebra();
        let r = l.restrict(&d).unwrap();
        assert_eq!(
            props::is_strongly_solvable(l),
            engel_nilpotent(&r, &r.full_space()),
            "algebra {i}"
        );
    });
}

#[test]
fn supersolvable_flag_is_an_ideal_flag_and_matches_brute_force() {
    each_corpus_algebra(|i, l| {
        let brute = brute_supersolvable(l);
        assert_eq!(props::is_supersolvable(l), brute, "algebra {i}");
        match props::supersolvable_flag(l) {
            Some(flag) => {
                assert!(brute, "algebra {i}");
                assert_eq!(flag.kind, SeriesKind::SupersolvableFlag);
                let dims: Vec<usize> = flag.terms.iter().map(Subspace::dim).collect();
                assert_eq!(dims, (0..=l.dim()).collect::<Vec<_>>(), "algebra {i}");
                for w in flag.terms.windows(2) {
                    assert!(w[1].contains_subspace(&w[0]));
                }
                assert!(flag.terms.iter().all(|t| l.is_ideal(t)), "algebra {i}");
            }
            None => assert!(!brute, "algebra {i}"),
        }
    });
}

#[test]
fn simplicity_matches_ideal_lattice() {
    each_corpus_algebra(|i, l| {
        assert_eq!(
            props::is_simple(l, &Caps::default()).unwrap(),
            brute_simple(l),
            "algebra {i}"
        );
    });
}

#[test]
fn frattini_matches_subalgebra_lattice() {
    each_corpus_algebra(|i, l| {
        let f = props::frattini(l, &ScanConfig::default()).unwrap();
        let (fs, phi) = brute_frattini(l);
        assert_eq!(f.subalgebra, fs, "algebra {i}");
        assert_eq!(f.ideal, phi, "algebra {i}");
        assert_eq!(f.phi_free, phi.is_zero());
    });
}

#[test]
fn nil_matches_brute_force_on_every_subalgebra() {
    each_corpus_algebra(|i, l| {
        for s in all_subspaces(l.field(), l.dim())
            .into_iter()
            .filter(|s| l.is_subalgebra(s))
        {
            let nil = triang::nil_exact(l, &s, &Caps::default()).unwrap();
            assert_eq!(nil, brute_nil(l, &s), "algebra {i}, S = {}", s.render());
        }
    });
}

#[test]
fn triangulable_iff_derived_part_is_nil() {
    each_corpus_algebra(|i, l| {
        for s in all_subspaces(l.field(), l.dim())
            .into_iter()
            .filter(|s| l.is_subalgebra(s))
        {
            let t = triang::is_triangulable_on(l, &s).unwrap();
            let s2 = l.bracket_spaces(&s, &s);
            assert_eq!(
                t.triangulable,
                engel_nilpotent(l, &s2),
                "algebra {i}, S = {}",
                s.render()
            );
        }
    });
}

#[test]
fn derived_and_lower_central_terms_are_ideals() {
    each_corpus_algebra(|i, l| {
        for chain in [props::derived_series(l), props::lower_central_series(l)] {
            assert!(chain.terms[0].is_full());
            for w in chain.terms.windows(2) {
                assert!(w[0].contains_subspace(&w[1]), "algebra {i}");
            }
            assert!(chain.terms.iter().all(|t| l.is_ideal(t)), "algebra {i}");
        }
    });
}
