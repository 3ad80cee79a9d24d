//! Named algebras with their expected-property tables.
//!
//! Basis orders:
//! - `heisenberg`: `a, b, c` with `[a,b] = c`.
//! - `sl2`: `e, f, h` with `[e,f] = h`, `[h,e] = 2e`, `[h,f] = -2f`.
//! - `almost_abelian(n)`: `a0..a{n-2}, x` with `[a_i,x] = a_i`.
//! - `gein1`, `gein2`: `a1, a2, x`.
//! - `stitzinger`: `a0..a{k-1}, x`; column `j` of the action is `[a_j, x]`.
//! - `thm31_type_i`: `e0..e{p-1}, m, x`; `thm31_type_ii`: `e0..e{p-1}, s, x, c`.
//! - `ev_type_a`: `x, y, e0..e{p-1}`; `ev_type_b`: `x, y, z, e0..e{p-1}`.
//! - `cross_product`: `e1, e2, e3`; `witt(p)`: `w-1, w0, ..., w{p-2}`.

use std::collections::BTreeMap;

use crate::algebra::LieAlgebra;
use crate::enumerate::{projective_points, Caps};
use crate::error::{Error, Result};
use crate::field::{Field, Scalar};
use crate::matrix::{vector, Matrix, Vector};
use crate::props::Property;
use crate::subspace::{SpanBuilder, Subspace};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ExpectMode {
    Assert,
    ReportOnly,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Expectation {
    pub property: Property,
    pub value: bool,
    pub mode: ExpectMode,
    pub note: &'static str,
}

fn expect(property: Property, value: bool, mode: ExpectMode) -> Expectation {
    Expectation {
        property,
        value,
        mode,
        note: "",
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CatalogEntry {
    pub name: String,
    pub params: Vec<(String, String)>,
    pub algebra: LieAlgebra,
    pub expectations: Vec<Expectation>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ExpectationOutcome {
    pub expectation: Expectation,
    pub actual: bool,
}

impl ExpectationOutcome {
    pub fn matches(&self) -> bool {
        self.actual == self.expectation.value
    }

    /// A mismatch on an asserted expectation.
    pub fn is_failure(&self) -> bool {
        !self.matches() && self.expectation.mode == ExpectMode::Assert
    }
}

impl CatalogEntry {
    fn new(name: &str, params: &[(&str, String)], algebra: LieAlgebra, expectations: Vec<Expectation>) -> Self {
        Self {
            name: name.to_string(),
            params: params.iter().map(|(k, v)| (k.to_string(), v.clone())).collect(),
            algebra,
            expectations,
        }
    }

    /// `name[k=v,...]`
    pub fn label(&self) -> String {
        let ps: Vec<String> = self.params.iter().map(|(k, v)| format!("{k}={v}")).collect();
        format!("{}[{}]", self.name, ps.join(","))
    }

    pub fn check_expectations(&self) -> Result<Vec<ExpectationOutcome>> {
        self.expectations
            .iter()
            .map(|e| {
                Ok(ExpectationOutcome {
                    expectation: e.clone(),
                    actual: e.property.decide(&self.algebra)?,
                })
            })
            .collect()
    }
}

fn names(prefix: &str, range: impl Iterator<Item = i64>) -> Vec<String> {
    range.map(|i| format!("{prefix}{i}")).collect()
}

fn named(xs: &[&str]) -> Vec<String> {
    xs.iter().map(|s| s.to_string()).collect()
}

fn vec_of(field: Field, n: usize, terms: &[(usize, i64)]) -> Vector {
    let mut v = vector::zero(field, n);
    for &(k, c) in terms {
        v[k] = &v[k] + &field.from_i64(c);
    }
    v
}

pub fn heisenberg(field: Field) -> LieAlgebra {
    LieAlgebra::new(
        field,
        3,
        [((0, 1), vec_of(field, 3, &[(2, 1)]))],
        Some(named(&["a", "b", "c"])),
    )
    .expect("Heisenberg algebra")
}

pub fn sl2(field: Field) -> LieAlgebra {
    LieAlgebra::new(
        field,
        3,
        [
            ((0, 1), vec_of(field, 3, &[(2, 1)])),
            ((0, 2), vec_of(field, 3, &[(0, -2)])),
            ((1, 2), vec_of(field, 3, &[(1, 2)])),
        ],
        Some(named(&["e", "f", "h"])),
    )
    .expect("sl(2)")
}

/// `L = A + Fx`, `A` abelian of dimension `n - 1`, `ad x` the identity on `A`.
pub fn almost_abelian(n: usize, field: Field) -> Result<LieAlgebra> {
    if n < 2 {
        return Err(Error::BadParameter(
            "almost abelian algebras have dimension at least 2".into(),
        ));
    }
    let x = n - 1;
    let brackets = (0..x).map(|i| ((i, x), vec_of(field, n, &[(i, 1)])));
    let mut ns = names("a", 0..x as i64);
    ns.push("x".into());
    LieAlgebra::new(field, n, brackets, Some(ns))
}

/// `[a1,x] = a1`, `[a2,x] = α a2`, `α ≠ 1`.
pub fn gein_family1(alpha: &Scalar, field: Field) -> Result<LieAlgebra> {
    if !field.contains(alpha) {
        return Err(Error::FieldMismatch(format!("α = {alpha} is not in {field}")));
    }
    if alpha.is_one() {
        return Err(Error::AlphaEqualsOne);
    }
    let mut a2 = vector::zero(field, 3);
    a2[1] = alpha.clone();
    LieAlgebra::new(
        field,
        3,
        [((0, 2), vec_of(field, 3, &[(0, 1)])), ((1, 2), a2)],
        Some(named(&["a1", "a2", "x"])),
    )
}

/// `[a1,x] = a1`, `[a2,x] = a1 + a2`.
pub fn gein_family2(field: Field) -> LieAlgebra {
    LieAlgebra::new(
        field,
        3,
        [
            ((0, 2), vec_of(field, 3, &[(0, 1)])),
            ((1, 2), vec_of(field, 3, &[(0, 1), (1, 1)])),
        ],
        Some(named(&["a1", "a2", "x"])),
    )
    .expect("Gein family 2")
}

/// A proper nonzero subspace of `F^k` invariant under `m`, if any.
///
/// Over GF(q) every invariant subspace contains the cyclic (Krylov) span of
/// each of its vectors, so testing the Krylov span of each projective point
/// is complete. Over Q with `k ≤ 3` an invariant subspace exists iff the
/// characteristic polynomial has a rational root (a line, or a plane whose
/// quotient line is invariant).
pub fn invariant_subspace(m: &Matrix) -> Result<Option<Subspace>> {
    let k = m.rows();
    let field = m.field();
    let krylov = |v: &Vector| -> Subspace {
        let mut b = SpanBuilder::new(field, k);
        let mut cur = v.clone();
        while b.insert(&cur).is_some() {
            cur = m.mul_vec(&cur);
        }
        b.finish()
    };
    match field {
        Field::Prime(q) => {
            let count = crate::enumerate::projective_count(k, q as u64);
            let cap = Caps::default().max_elements;
            if count > cap {
                return Err(Error::CapExceeded {
                    what: "invariant subspace search".into(),
                    estimate: count,
                    cap,
                });
            }
            Ok(projective_points(field, k).iter().map(krylov).find(|s| !s.is_full()))
        }
        Field::Rationals => {
            if k > 3 {
                return Err(Error::Unsupported(
                    "irreducibility over Q is only decided for dimension at most 3".into(),
                ));
            }
            let Some(lambda) = m.eigenvalues().into_iter().next() else {
                return Ok(None);
            };
            if k == 1 {
                return Ok(None);
            }
            // an eigenvector of m spans an invariant line
            let line = m.shift(&lambda).kernel();
            let v = line.basis()[0].clone();
            Ok(Some(krylov(&v)))
        }
    }
}

/// `A + Fx` with `A` abelian and `ad x` acting on `A` by `action`
/// (column convention), which must be irreducible.
pub fn stitzinger_min_nonabelian(action: &Matrix, field: Field) -> Result<LieAlgebra> {
    let k = action.rows();
    if k == 0 || action.cols() != k {
        return Err(Error::BadParameter("action must be a nonempty square matrix".into()));
    }
    if action.field() != field {
        return Err(Error::FieldMismatch(format!(
            "action over {}, algebra over {field}",
            action.field()
        )));
    }
    if let Some(inv) = invariant_subspace(action)? {
        return Err(Error::ReducibleAction(inv.render()));
    }
    let n = k + 1;
    let brackets = (0..k).map(|j| {
        let mut col = action.column(j);
        col.push(field.zero());
        ((j, k), col)
    });
    let mut ns = names("a", 0..k as i64);
    ns.push("x".into());
    LieAlgebra::new(field, n, brackets, Some(ns))
}

/// `A ∔ B` with `A` abelian of dimension `a_dim`, `B` a Lie algebra acting on
/// `A` by `rho` (one matrix per basis vector of `B`, column convention:
/// `[a_j, b] = rho(b) a_j`). Basis: `A` first, then `B`.
pub fn semidirect(field: Field, a_names: Vec<String>, b: &LieAlgebra, rho: &[Matrix]) -> Result<LieAlgebra> {
    let a = a_names.len();
    let n = a + b.dim();
    if rho.len() != b.dim() {
        return Err(Error::DimensionMismatch {
            expected: b.dim(),
            found: rho.len(),
        });
    }
    let mut brackets = Vec::new();
    for (bi, m) in rho.iter().enumerate() {
        if m.rows() != a || m.cols() != a {
            return Err(Error::DimensionMismatch {
                expected: a,
                found: m.rows(),
            });
        }
        for j in 0..a {
            let mut v = m.column(j);
            v.resize(n, field.zero());
            if !vector::is_zero(&v) {
                brackets.push(((j, a + bi), v));
            }
        }
    }
    for (i, j, w) in b.nonzero_brackets() {
        let mut v = vector::zero(field, a);
        v.extend(w.iter().cloned());
        brackets.push(((a + i, a + j), v));
    }
    let mut ns = a_names;
    ns.extend(b.names().iter().cloned());
    LieAlgebra::new(field, n, brackets, Some(ns))
}

fn check_char(p: u32, field: Field) -> Result<()> {
    if field.characteristic() != p {
        return Err(Error::CharMismatch {
            expected: p,
            found: field.characteristic(),
        });
    }
    Ok(())
}

/// Cyclic shift `e_i -> e_{i+1 mod p}`.
fn cyclic_shift(field: Field, p: usize) -> Matrix {
    let mut m = Matrix::zeros(field, p, p);
    for i in 0..p {
        m.set((i + 1) % p, i, field.one());
    }
    m
}

/// Type I: `A = F^p`, `B = Fm ∔ Fx` with `[m,x] = m`, `m` acting as the
/// cyclic shift and `x` as `diag(0, 1, ..., p-1)`.
pub fn thm31_type_i(p: u32, field: Field) -> Result<LieAlgebra> {
    check_char(p, field)?;
    let pu = p as usize;
    let b = LieAlgebra::new(
        field,
        2,
        [((0, 1), vec_of(field, 2, &[(0, 1)]))],
        Some(named(&["m", "x"])),
    )?;
    let mut diag = Matrix::zeros(field, pu, pu);
    for i in 0..pu {
        diag.set(i, i, field.from_i64(i as i64));
    }
    semidirect(field, names("e", 0..p as i64), &b, &[cyclic_shift(field, pu), diag])
}

/// Type II: `A = F^p`, `B` Heisenberg on `s, x, c` with `[s,x] = c`; `s` acts
/// as the cyclic shift, `x` by `e_i -> i e_{i-1}` and `c` as the identity.
/// With `zero_action` `B` acts trivially and becomes an ideal.
pub fn thm31_type_ii(p: u32, field: Field, zero_action: bool) -> Result<LieAlgebra> {
    check_char(p, field)?;
    let pu = p as usize;
    let b = LieAlgebra::new(
        field,
        3,
        [((0, 1), vec_of(field, 3, &[(2, 1)]))],
        Some(named(&["s", "x", "c"])),
    )?;
    let rho = if zero_action {
        vec![Matrix::zeros(field, pu, pu); 3]
    } else {
        let mut d = Matrix::zeros(field, pu, pu);
        for i in 1..pu {
            d.set(i - 1, i, field.from_i64(i as i64));
        }
        vec![cyclic_shift(field, pu), d, Matrix::identity(field, pu)]
    };
    semidirect(field, names("e", 0..p as i64), &b, &rho)
}

/// `[e_i,y] = (α+i) e_i`, `[e_i,x] = e_{i+1}` (indices mod p), `[x,y] = x`.
pub fn ev_type_a(p: u32, alpha: &Scalar, field: Field) -> Result<LieAlgebra> {
    check_char(p, field)?;
    if !field.contains(alpha) {
        return Err(Error::FieldMismatch(format!("α = {alpha} is not in {field}")));
    }
    let pu = p as usize;
    let n = pu + 2;
    let (x, y) = (0, 1);
    let e = |i: usize| 2 + i;
    let mut brackets = vec![((x, y), vec_of(field, n, &[(x, 1)]))];
    for i in 0..pu {
        // [x, e_i] = -e_{i+1}
        brackets.push(((x, e(i)), vec_of(field, n, &[(e((i + 1) % pu), -1)])));
        // [y, e_i] = -(α+i) e_i
        let coeff = -&(alpha + &field.from_i64(i as i64));
        let mut v = vector::zero(field, n);
        v[e(i)] = coeff;
        brackets.push(((y, e(i)), v));
    }
    let mut ns = named(&["x", "y"]);
    ns.extend(names("e", 0..p as i64));
    LieAlgebra::new(field, n, brackets, Some(ns))
}

/// `[e_i,z] = e_i` for all `i`, `[e_i,x] = e_{i+1}` for `i ≤ p-2`, all other
/// products zero (as printed).
pub fn ev_type_b(p: u32, field: Field) -> Result<LieAlgebra> {
    check_char(p, field)?;
    let pu = p as usize;
    let n = pu + 3;
    let (x, z) = (0, 2);
    let e = |i: usize| 3 + i;
    let mut brackets = Vec::new();
    for i in 0..pu {
        brackets.push(((z, e(i)), vec_of(field, n, &[(e(i), -1)])));
        if i + 1 < pu {
            brackets.push(((x, e(i)), vec_of(field, n, &[(e(i + 1), -1)])));
        }
    }
    let mut ns = named(&["x", "y", "z"]);
    ns.extend(names("e", 0..p as i64));
    LieAlgebra::new(field, n, brackets, Some(ns))
}

/// `[e1,e2] = e3`, `[e2,e3] = e1`, `[e3,e1] = e2`.
pub fn cross_product(field: Field) -> LieAlgebra {
    LieAlgebra::new(
        field,
        3,
        [
            ((0, 1), vec_of(field, 3, &[(2, 1)])),
            ((0, 2), vec_of(field, 3, &[(1, -1)])),
            ((1, 2), vec_of(field, 3, &[(0, 1)])),
        ],
        Some(named(&["e1", "e2", "e3"])),
    )
    .expect("cross product algebra")
}

/// The Witt algebra `W(1;1)` over GF(p): basis `w_{-1}, ..., w_{p-2}` with
/// `[w_i, w_j] = (j - i) w_{i+j}`, zero when `i + j` is out of range.
pub fn witt(p: u32) -> Result<LieAlgebra> {
    if p < 5 {
        return Err(Error::BadParameter(format!("witt needs p >= 5, got {p}")));
    }
    let field = Field::prime(p as u64)?;
    let n = p as usize;
    let idx = |i: i64| (i + 1) as usize;
    let mut brackets = Vec::new();
    for i in -1..(p as i64 - 1) {
        for j in i + 1..(p as i64 - 1) {
            let k = i + j;
            if (-1..p as i64 - 1).contains(&k) {
                let v = vec_of(field, n, &[(idx(k), j - i)]);
                if !vector::is_zero(&v) {
                    brackets.push(((idx(i), idx(j)), v));
                }
            }
        }
    }
    LieAlgebra::new(field, n, brackets, Some(names("w", -1..p as i64 - 1)))
}

/// `key=value` parameters for [`build`].
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Params(pub BTreeMap<String, String>);

impl Params {
    pub fn parse<'a>(pairs: impl IntoIterator<Item = &'a str>) -> Result<Self> {
        let mut map = BTreeMap::new();
        for pair in pairs {
            let (k, v) = pair
                .split_once('=')
                .ok_or_else(|| Error::BadParameter(format!("expected key=value, got `{pair}`")))?;
            map.insert(k.trim().to_string(), v.trim().to_string());
        }
        Ok(Self(map))
    }

    fn get(&self, key: &str) -> Option<&str> {
        self.0.get(key).map(String::as_str)
    }

    fn uint(&self, key: &str) -> Result<Option<u64>> {
        self.get(key)
            .map(|v| {
                v.parse()
                    .map_err(|_| Error::BadParameter(format!("{key} must be a nonnegative integer, got `{v}`")))
            })
            .transpose()
    }

    /// `field=...`, else GF(p) when `p` is given, else `default`.
    fn field(&self, default: Field) -> Result<Field> {
        if let Some(f) = self.get("field") {
            return f.parse();
        }
        match self.uint("p")? {
            Some(p) => Field::prime(p),
            None => Ok(default),
        }
    }

    fn p(&self, field: Field) -> Result<u32> {
        match self.uint("p")? {
            Some(p) => Ok(p as u32),
            None if field.is_finite() => Ok(field.characteristic()),
            None => Err(Error::BadParameter("parameter p is required".into())),
        }
    }

    fn check_known(&self, known: &[&str]) -> Result<()> {
        match self.0.keys().find(|k| !known.contains(&k.as_str())) {
            Some(k) => Err(Error::BadParameter(format!("unknown parameter `{k}`"))),
            None => Ok(()),
        }
    }
}

/// Parse `"a,b;c,d"` as a square matrix given by rows.
pub fn parse_matrix(text: &str, field: Field) -> Result<Matrix> {
    let rows: Vec<Vector> = text
        .split(';')
        .map(|r| r.split(',').map(|x| field.parse_scalar(x)).collect::<Result<Vector>>())
        .collect::<Result<_>>()?;
    let cols = rows.first().map_or(0, Vec::len);
    Matrix::from_rows(field, cols, &rows)
}

pub const NAMES: [&str; 12] = [
    "heisenberg",
    "sl2",
    "almost_abelian",
    "gein1",
    "gein2",
    "stitzinger",
    "thm31_type_i",
    "thm31_type_ii",
    "ev_type_a",
    "ev_type_b",
    "cross_product",
    "witt",
];

/// Build a named entry with its expectation table.
pub fn build(name: &str, params: &Params) -> Result<CatalogEntry> {
    use ExpectMode::{Assert, ReportOnly};
    use Property::*;
    let q = Field::Rationals;
    match name {
        "heisenberg" => {
            params.check_known(&["field", "p"])?;
            let f = params.field(q)?;
            Ok(CatalogEntry::new(
                name,
                &[("field", f.to_string())],
                heisenberg(f),
                vec![
                    expect(Nilpotent, true, Assert),
                    expect(Supersolvable, true, Assert),
                    expect(Simple, false, Assert),
                ],
            ))
        }
        "sl2" => {
            params.check_known(&["field", "p"])?;
            let f = params.field(q)?;
            let mode = if matches!(f.characteristic(), 2 | 3) {
                ReportOnly
            } else {
                Assert
            };
            Ok(CatalogEntry::new(
                name,
                &[("field", f.to_string())],
                sl2(f),
                vec![expect(Simple, true, mode), expect(Solvable, false, mode)],
            ))
        }
        "almost_abelian" => {
            params.check_known(&["field", "p", "n"])?;
            let f = params.field(q)?;
            let n = params.uint("n")?.unwrap_or(3) as usize;
            Ok(CatalogEntry::new(
                name,
                &[("n", n.to_string()), ("field", f.to_string())],
                almost_abelian(n, f)?,
                vec![expect(AlmostAbelian, true, Assert), expect(QuasiAbelian, true, Assert)],
            ))
        }
        "gein1" => {
            params.check_known(&["field", "p", "alpha"])?;
            let f = params.field(q)?;
            let alpha = f.parse_scalar(params.get("alpha").unwrap_or("2"))?;
            let mode = if alpha.is_zero() { ReportOnly } else { Assert };
            Ok(CatalogEntry::new(
                name,
                &[("alpha", alpha.to_string()), ("field", f.to_string())],
                gein_family1(&alpha, f)?,
                vec![expect(QuasiAbelian, false, mode), expect(Solvable, true, Assert)],
            ))
        }
        "gein2" => {
            params.check_known(&["field", "p"])?;
            let f = params.field(q)?;
            Ok(CatalogEntry::new(
                name,
                &[("field", f.to_string())],
                gein_family2(f),
                vec![expect(QuasiAbelian, false, Assert), expect(Solvable, true, Assert)],
            ))
        }
        "stitzinger" => {
            params.check_known(&["field", "p", "action"])?;
            let f = params.field(Field::Prime(3))?;
            let text = params.get("action").unwrap_or("0,-1;1,0");
            let m = parse_matrix(text, f)?;
            let nonzero = !m.is_zero();
            Ok(CatalogEntry::new(
                name,
                &[("action", text.to_string()), ("field", f.to_string())],
                stitzinger_min_nonabelian(&m, f)?,
                vec![expect(Abelian, !nonzero, Assert), expect(Solvable, true, Assert)],
            ))
        }
        "thm31_type_i" | "thm31_type_ii" => {
            params.check_known(&["field", "p", "zero_action"])?;
            let f = params.field(Field::Prime(3))?;
            let p = params.p(f)?;
            let zero = match params.get("zero_action") {
                None | Some("false") => false,
                Some("true") => true,
                Some(v) => {
                    return Err(Error::BadParameter(format!(
                        "zero_action must be true or false, got `{v}`"
                    )))
                }
            };
            let (alg, mut ps) = if name == "thm31_type_i" {
                if zero {
                    return Err(Error::BadParameter("zero_action applies to thm31_type_ii".into()));
                }
                (thm31_type_i(p, f)?, vec![("p", p.to_string())])
            } else {
                (thm31_type_ii(p, f, zero)?, vec![("p", p.to_string())])
            };
            if zero {
                ps.push(("zero_action", "true".into()));
            }
            ps.push(("field", f.to_string()));
            Ok(CatalogEntry::new(name, &ps, alg, vec![expect(Solvable, true, Assert)]))
        }
        "ev_type_a" => {
            params.check_known(&["field", "p", "alpha"])?;
            let f = params.field(Field::Prime(3))?;
            let p = params.p(f)?;
            let alpha = f.parse_scalar(params.get("alpha").unwrap_or("1"))?;
            Ok(CatalogEntry::new(
                name,
                &[
                    ("p", p.to_string()),
                    ("alpha", alpha.to_string()),
                    ("field", f.to_string()),
                ],
                ev_type_a(p, &alpha, f)?,
                vec![
                    expect(Solvable, true, Assert),
                    expect(StronglySolvable, false, Assert),
                    // supersolvable implies strongly solvable
                    expect(Supersolvable, false, Assert),
                ],
            ))
        }
        "ev_type_b" => {
            params.check_known(&["field", "p"])?;
            let f = params.field(Field::Prime(3))?;
            let p = params.p(f)?;
            Ok(CatalogEntry::new(
                name,
                &[("p", p.to_string()), ("field", f.to_string())],
                ev_type_b(p, f)?,
                vec![
                    Expectation {
                        property: StronglySolvable,
                        value: false,
                        mode: ReportOnly,
                        note: "printed table has abelian L^2, so it is strongly solvable",
                    },
                    expect(Supersolvable, false, ReportOnly),
                ],
            ))
        }
        "cross_product" => {
            params.check_known(&["field", "p"])?;
            let f = params.field(q)?;
            let mode = if f == q { Assert } else { ReportOnly };
            Ok(CatalogEntry::new(
                name,
                &[("field", f.to_string())],
                cross_product(f),
                vec![expect(Simple, true, mode)],
            ))
        }
        "witt" => {
            params.check_known(&["p", "field"])?;
            let p = params.uint("p")?.unwrap_or(5) as u32;
            if let Some(f) = params.get("field") {
                check_char(p, f.parse()?)?;
            }
            Ok(CatalogEntry::new(
                name,
                &[("p", p.to_string())],
                witt(p)?,
                vec![expect(Simple, true, Assert), expect(Solvable, false, Assert)],
            ))
        }
        _ => Err(Error::BadParameter(format!(
            "unknown catalog entry `{name}` (known: {})",
            NAMES.join(", ")
        ))),
    }
}

/// A representative set of instances across fields, used by the test suites.
pub fn fixtures() -> Vec<CatalogEntry> {
    let specs: &[(&str, &[&str])] = &[
        ("heisenberg", &["field=Q"]),
        ("heisenberg", &["field=GF(2)"]),
        ("heisenberg", &["field=GF(3)"]),
        ("sl2", &["field=Q"]),
        ("sl2", &["field=GF(2)"]),
        ("sl2", &["field=GF(3)"]),
        ("sl2", &["field=GF(5)"]),
        ("sl2", &["field=GF(7)"]),
        ("almost_abelian", &["n=3", "field=Q"]),
        ("almost_abelian", &["n=3", "field=GF(2)"]),
        ("almost_abelian", &["n=4", "field=GF(3)"]),
        ("gein1", &["alpha=2", "field=Q"]),
        ("gein1", &["alpha=2", "field=GF(5)"]),
        ("gein1", &["alpha=0", "field=GF(3)"]),
        ("gein2", &["field=GF(3)"]),
        ("gein2", &["field=Q"]),
        ("stitzinger", &["action=0,-1;1,0", "field=GF(3)"]),
        ("stitzinger", &["action=0,1;1,1", "field=GF(2)"]),
        ("thm31_type_i", &["p=3"]),
        ("thm31_type_ii", &["p=3"]),
        ("thm31_type_ii", &["p=3", "zero_action=true"]),
        ("thm31_type_ii", &["p=2"]),
        ("ev_type_a", &["p=3", "alpha=1"]),
        ("ev_type_a", &["p=3", "alpha=0"]),
        ("ev_type_a", &["p=2", "alpha=1"]),
        ("ev_type_b", &["p=3"]),
        ("ev_type_b", &["p=2"]),
        ("cross_product", &["field=Q"]),
        ("cross_product", &["field=GF(3)"]),
        ("cross_product", &["field=GF(7)"]),
        ("witt", &["p=5"]),
    ];
    specs
        .iter()
        .map(|(name, ps)| {
            build(name, &Params::parse(ps.iter().copied()).expect("fixture params"))
                .unwrap_or_else(|e| panic!("fixture {name} {ps:?}: {e}"))
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::props;

    #[test]
    fn every_fixture_meets_asserted_expectations() {
        for entry in fixtures() {
            for outcome in entry.check_expectations().unwrap() {
                assert!(!outcome.is_failure(), "{}: {:?}", entry.label(), outcome);
            }
        }
    }

    #[test]
    fn rebuild_is_identical() {
        let ps = Params::parse(["p=3", "alpha=1"]).unwrap();
        assert_eq!(build("ev_type_a", &ps).unwrap(), build("ev_type_a", &ps).unwrap());
    }

    #[test]
    fn sl2_products() {
        let l = sl2(Field::Rationals);
        let (e, f, h) = (l.unit(0), l.unit(1), l.unit(2));
        assert_eq!(l.bracket(&e, &f), h);
        assert_eq!(l.bracket(&h, &e), vector::scale(&Field::Rationals.from_i64(2), &e));
        assert_eq!(l.bracket(&h, &f), vector::scale(&Field::Rationals.from_i64(-2), &f));
    }

    #[test]
    fn ev_type_a_series() {
        let f = Field::Prime(3);
        let l = ev_type_a(3, &f.one(), f).unwrap();
        let dims = props::derived_series(&l).dims();
        assert_eq!(dims, vec![5, 4, 3, 0]);
        let d = props::derived_series(&l);
        let es = Subspace::span(f, 5, &(2..5).map(|i| l.unit(i)).collect::<Vec<_>>());
        assert_eq!(d.terms[2], es);
        assert!(ev_type_a(3, &Field::Prime(5).one(), Field::Prime(5)).is_err());
        assert!(ev_type_a(3, &f.zero(), f).is_ok());
    }

    #[test]
    fn ev_type_b_is_strongly_solvable_as_printed() {
        let l = ev_type_b(3, Field::Prime(3)).unwrap();
        assert!(props::is_strongly_solvable(&l));
        assert!(l.bracket_spaces(&l.derived_algebra(), &l.derived_algebra()).is_zero());
    }

    #[test]
    fn stitzinger_irreducibility() {
        let f3 = Field::Prime(3);
        assert!(stitzinger_min_nonabelian(&parse_matrix("0,-1;1,0", f3).unwrap(), f3).is_ok());
        assert!(matches!(
            stitzinger_min_nonabelian(&Matrix::identity(f3, 2), f3),
            Err(Error::ReducibleAction(_))
        ));
        // companion matrix of t^2 - 1
        assert!(matches!(
            stitzinger_min_nonabelian(&parse_matrix("0,1;1,0", f3).unwrap(), f3),
            Err(Error::ReducibleAction(_))
        ));
        let q = Field::Rationals;
        assert!(stitzinger_min_nonabelian(&parse_matrix("0,-1;1,0", q).unwrap(), q).is_ok());
        assert!(stitzinger_min_nonabelian(&parse_matrix("0,0,2;1,0,0;0,1,0", q).unwrap(), q).is_ok());
        assert!(matches!(
            stitzinger_min_nonabelian(&parse_matrix("0,0,1;1,0,0;0,1,0", q).unwrap(), q),
            Err(Error::ReducibleAction(_))
        ));
    }

    #[test]
    fn gein_alpha_one_rejected() {
        let q = Field::Rationals;
        assert_eq!(gein_family1(&q.one(), q), Err(Error::AlphaEqualsOne));
    }

    #[test]
    fn witt_bounds_and_simplicity() {
        assert!(witt(3).is_err());
        let w = witt(5).unwrap();
        assert_eq!(w.dim(), 5);
        assert!(props::is_simple(&w, &Caps::default()).unwrap());
    }

    #[test]
    fn thm31_builds() {
        let f = Field::Prime(3);
        assert!(thm31_type_i(3, f).is_ok());
        let ii = thm31_type_ii(3, f, false).unwrap();
        assert!(props::is_solvable(&ii) && !props::is_strongly_solvable(&ii));
        let zero = thm31_type_ii(3, f, true).unwrap();
        let b = Subspace::span(f, 6, &[zero.unit(3), zero.unit(4), zero.unit(5)]);
        assert!(zero.is_ideal(&b));
        assert!(matches!(
            thm31_type_i(3, Field::Prime(5)),
            Err(Error::CharMismatch { .. })
        ));
    }

    #[test]
    fn unknown_names_and_params() {
        assert!(build("nope", &Params::default()).is_err());
        assert!(build("sl2", &Params::parse(["colour=red"]).unwrap()).is_err());
    }
}
