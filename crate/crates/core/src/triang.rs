//! Nil-on-L tests, `nil(S)`, triangulability and Fitting decompositions.
//!
//! A subalgebra `S` is nil on `L` when every `ad_L s` is nilpotent. By
//! Engel–Jacobson this happens iff the descending chain
//! `V_0 = L, V_{k+1} = [V_k, S]` reaches zero, which is the certificate
//! returned by [`is_nil_on`].

use rayon::prelude::*;

use crate::algebra::{LieAlgebra, Subalgebra};
use crate::enumerate::{projective_count, projective_points_of, Caps};
use crate::error::{Error, Result};
use crate::field::Field;
use crate::matrix::{Matrix, Vector};
use crate::subspace::{SpanBuilder, Subspace};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NilCertificate {
    /// `L = V_0 ⊋ V_1 ⊋ ...`; ends in `0` when nil, otherwise in the
    /// nonzero subspace where the chain stalls.
    pub chain: Vec<Subspace>,
}

impl NilCertificate {
    pub fn is_nil(&self) -> bool {
        self.chain.last().is_some_and(Subspace::is_zero)
    }

    /// Index of the stalling term, when not nil.
    pub fn stall_index(&self) -> Option<usize> {
        (!self.is_nil()).then(|| self.chain.len() - 1)
    }
}

fn require_subalgebra(l: &LieAlgebra, s: &Subspace) -> Result<()> {
    if s.ambient_dim() != l.dim() || s.field() != l.field() {
        return Err(Error::DimensionMismatch {
            expected: l.dim(),
            found: s.ambient_dim(),
        });
    }
    if !l.is_subalgebra(s) {
        return Err(Error::NotASubalgebra);
    }
    Ok(())
}

pub fn is_nil_on(l: &LieAlgebra, s: &Subspace) -> Result<NilCertificate> {
    require_subalgebra(l, s)?;
    let mut chain = vec![l.full_space()];
    loop {
        let cur = chain.last().expect("nonempty");
        if cur.is_zero() {
            break;
        }
        let next = l.bracket_spaces(cur, s);
        if &next == cur {
            break;
        }
        chain.push(next);
    }
    Ok(NilCertificate { chain })
}

/// Whether `ad_L x` is nilpotent.
pub fn is_ad_nilpotent(l: &LieAlgebra, x: &[crate::field::Scalar]) -> bool {
    l.adjoint(x).is_nilpotent()
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Triangulability {
    pub triangulable: bool,
    /// `S^2`.
    pub derived: Subspace,
    /// Nil certificate of `S^2` on `L`.
    pub chain: Vec<Subspace>,
}

/// `S` is triangulable on `L` iff `S^2` is nil on `L`.
pub fn is_triangulable_on(l: &LieAlgebra, s: &Subspace) -> Result<Triangulability> {
    require_subalgebra(l, s)?;
    let derived = l.bracket_spaces(s, s);
    let cert = is_nil_on(l, &derived)?;
    Ok(Triangulability {
        triangulable: cert.is_nil(),
        chain: cert.chain,
        derived,
    })
}

/// Smallest subspace of `s` containing `seed` and closed under `ad s`.
fn s_ideal_closure(l: &LieAlgebra, s: &Subspace, seed: &Subspace) -> Subspace {
    let mut b = SpanBuilder::new(l.field(), l.dim());
    let mut list: Vec<Vector> = seed.basis().iter().filter_map(|v| b.insert(v)).collect();
    let mut k = 0;
    while k < list.len() && b.dim() < s.dim() {
        let v = list[k].clone();
        for t in s.basis() {
            if let Some(r) = b.insert(&l.bracket(&v, t)) {
                list.push(r);
            }
        }
        k += 1;
    }
    b.finish()
}

/// `nil(S)`: the largest ideal of `S` consisting of elements ad-nilpotent on `L`.
///
/// When `S` is triangulable on `L`, `nil(S)` is exactly the set of
/// ad-nilpotent elements of `S`. Over GF(q) that set is enumerated directly
/// (within caps); over Q it is cut out by the linear trace conditions of
/// [`nil_by_traces`]. Otherwise, over GF(q), `nil(S)` is the sum of the nil
/// principal `S`-ideals; over Q this case is unsupported.
pub fn nil_ideal(l: &LieAlgebra, s: &Subspace, caps: &Caps) -> Result<Subalgebra> {
    let tri = is_triangulable_on(l, s)?;
    let out = match (l.field(), tri.triangulable) {
        (Field::Rationals, true) => nil_by_traces(l, s)?,
        (Field::Rationals, false) => return Err(Error::Unsupported("nil(S) over Q needs S triangulable on L".into())),
        (Field::Prime(_), true) => match ad_nilpotent_elements(l, s, caps) {
            Ok(elements) => {
                let span = Subspace::span(l.field(), l.dim(), &elements);
                // in the triangulable case the ad-nilpotent elements form a subspace
                assert!(
                    span.basis().iter().all(|v| is_ad_nilpotent(l, v)),
                    "ad-nilpotent elements of a triangulable subalgebra must form a subspace"
                );
                span
            }
            Err(Error::CapExceeded { .. }) => nil_exact(l, s, caps)?,
            Err(e) => return Err(e),
        },
        (Field::Prime(_), false) => nil_exact(l, s, caps)?,
    };
    l.subalgebra(out)
}

/// Finite-field `nil(S)` as the sum of the nil principal `S`-ideals.
pub fn nil_exact(l: &LieAlgebra, s: &Subspace, caps: &Caps) -> Result<Subspace> {
    require_subalgebra(l, s)?;
    let q = crate::enumerate::require_finite(l.field(), "exact nil(S)")?;
    let count = projective_count(s.dim(), q);
    if count > caps.max_elements {
        return Err(Error::CapExceeded {
            what: "principal ideals of S".into(),
            estimate: count,
            cap: caps.max_elements,
        });
    }
    let mut sum = l.zero_space();
    for v in projective_points_of(s) {
        if sum.contains(&v) || !is_ad_nilpotent(l, &v) {
            continue;
        }
        let c = s_ideal_closure(l, s, &Subspace::span(l.field(), l.dim(), &[v]));
        if is_nil_on(l, &c)?.is_nil() {
            sum = sum.sum(&c)?;
        }
    }
    // the sum of nil ideals is nil
    assert!(is_nil_on(l, &sum)?.is_nil(), "sum of nil ideals of S is not nil on L");
    Ok(sum)
}

/// `{x ∈ S : tr(ad x · W) = 0 for all W in A}` where `A` is the unital
/// associative algebra generated by `ad_L S`.
///
/// Over the algebraic closure a triangulable `ad_L S` is simultaneously
/// upper triangular, so `tr(ad x · W) = Σ λ_i(x) w_i` in terms of diagonal
/// entries. Nilpotent `x` (all `λ_i(x) = 0`) satisfy every condition.
/// Conversely `(ad x)^k ∈ A`, so the conditions force the power sums
/// `Σ λ_i(x)^k` to vanish for `k = 1..dim L`, and by Newton's identities all
/// `λ_i(x) = 0` — valid in characteristic 0 or `p > dim L`.
pub fn nil_by_traces(l: &LieAlgebra, s: &Subspace) -> Result<Subspace> {
    require_subalgebra(l, s)?;
    let n = l.dim();
    let p = l.field().characteristic() as usize;
    if p != 0 && p <= n {
        return Err(Error::Unsupported(format!(
            "trace method needs characteristic 0 or > {n}"
        )));
    }
    if !is_triangulable_on(l, s)?.triangulable {
        return Err(Error::NotTriangulable);
    }
    let gens: Vec<Matrix> = s.basis().iter().map(|x| l.adjoint(x)).collect();
    let algebra = associative_closure(l.field(), n, &gens);
    // one linear condition on the S-coordinates per basis element of A
    let rows: Vec<Vector> = algebra
        .iter()
        .map(|w| gens.iter().map(|g| g.mul(w).trace()).collect())
        .collect();
    let m = Matrix::from_rows(l.field(), s.dim(), &rows)?;
    let coords = m.kernel();
    let vs: Vec<Vector> = coords.basis().iter().map(|c| s.from_coordinates(c)).collect();
    Ok(Subspace::span(l.field(), n, &vs))
}

/// Basis of the unital associative algebra generated by `gens`.
fn associative_closure(field: Field, n: usize, gens: &[Matrix]) -> Vec<Matrix> {
    let flatten = |m: &Matrix| -> Vector { (0..n).flat_map(|i| m.row(i).to_vec()).collect() };
    let mut b = SpanBuilder::new(field, n * n);
    let mut basis = Vec::new();
    let id = Matrix::identity(field, n);
    b.insert(&flatten(&id));
    basis.push(id);
    let mut k = 0;
    while k < basis.len() {
        let w = basis[k].clone();
        for g in gens {
            let prod = w.mul(g);
            if b.insert(&flatten(&prod)).is_some() {
                basis.push(prod);
            }
        }
        k += 1;
    }
    basis
}

/// Projective representatives `x ≠ 0` of `S` with `ad_L x` nilpotent.
pub fn ad_nilpotent_elements(l: &LieAlgebra, s: &Subspace, caps: &Caps) -> Result<Vec<Vector>> {
    let q = crate::enumerate::require_finite(l.field(), "ad-nilpotent element scan")?;
    let total = (q as u128).saturating_pow(s.dim() as u32);
    if total > caps.max_elements {
        return Err(Error::CapExceeded {
            what: "elements of S".into(),
            estimate: total,
            cap: caps.max_elements,
        });
    }
    Ok(projective_points_of(s)
        .into_par_iter()
        .filter(|x| is_ad_nilpotent(l, x))
        .collect())
}

/// Fitting decomposition of `L` relative to a nilpotent subalgebra `H`:
/// `L_0 = ∩ ker (ad x)^n` and `L_1 = Σ im (ad x)^n` over a basis of `H`.
pub fn fitting_decomposition(l: &LieAlgebra, h: &Subspace) -> Result<(Subspace, Subspace)> {
    require_subalgebra(l, h)?;
    if !crate::props::lower_central_of(l, h).reaches_zero() {
        return Err(Error::NotNilpotent);
    }
    let n = l.dim() as u32;
    let mut l0 = l.full_space();
    let mut l1 = l.zero_space();
    for x in h.basis() {
        let p = l.adjoint(x).pow(n);
        l0 = l0.intersect(&p.kernel())?;
        l1 = l1.sum(&p.image())?;
    }
    assert_eq!(l0.dim() + l1.dim(), l.dim(), "Fitting components must be complementary");
    assert!(l0.intersect(&l1)?.is_zero());
    assert!(l0.contains_subspace(h));
    for comp in [&l0, &l1] {
        assert!(l.bracket_spaces(comp, h).basis().iter().all(|v| comp.contains(v)));
    }
    Ok((l0, l1))
}
