//! Randomized search for counterexamples to "every simple minimal
//! non-solvable algebra is two-generated".
//!
//! Sample `i` is drawn from its own RNG stream (`ScanConfig::rng_for(i)`), so
//! any instance is reproducible from `(seed, index)` alone and output does
//! not depend on the worker count. Sources rotate per sample:
//! - `sparse`: each structure constant nonzero with probability 1/3,
//!   rejected unless Jacobi holds;
//! - `semidirect`: abelian `A` extended by a random algebra `B` acting by
//!   random matrices, rejected unless Jacobi holds;
//! - `catalog:<name>`: a catalog algebra of the right dimension in a random
//!   basis.

use rand::Rng;
use rayon::prelude::*;

use crate::algebra::LieAlgebra;
use crate::catalog;
use crate::enumerate::{random_vector, ScanConfig};
use crate::error::{Error, Result};
use crate::field::Field;
use crate::format;
use crate::harness::{self, HarnessReport, Hypothesis};
use crate::matrix::{vector, Matrix, Vector};
use crate::props;
use crate::report::Record;

#[derive(Clone, Debug)]
pub struct HuntConfig {
    pub field: Field,
    pub dim_min: usize,
    pub dim_max: usize,
    pub scan: ScanConfig,
}

impl HuntConfig {
    pub fn new(field: Field, dim_min: usize, dim_max: usize, samples: u64, seed: u64) -> Result<Self> {
        if !field.is_finite() {
            return Err(Error::Unsupported("the hunt needs a finite field".into()));
        }
        if dim_min == 0 || dim_min > dim_max {
            return Err(Error::BadParameter(format!(
                "bad dimension range {dim_min}..={dim_max}"
            )));
        }
        Ok(Self {
            field,
            dim_min,
            dim_max,
            scan: ScanConfig {
                samples,
                seed,
                ..ScanConfig::default()
            },
        })
    }
}

#[derive(Clone, Debug)]
pub struct HuntInstance {
    pub index: u64,
    pub seed: u64,
    pub source: String,
    pub algebra: LieAlgebra,
    pub report: HarnessReport,
}

impl HuntInstance {
    pub fn is_counterexample(&self) -> bool {
        self.report.failed()
    }

    pub fn to_record(&self) -> Record {
        let mut r = Record::new("hunt_instance")
            .with("index", self.index)
            .with("seed", self.seed)
            .with("source", &self.source)
            .with("field", self.algebra.field())
            .with("dim", self.algebra.dim())
            .with("counterexample", self.is_counterexample());
        for (k, v) in self.report.to_record().fields().iter().skip(1) {
            r.push(k, v);
        }
        r
    }

    /// The algebra in `lie-sc v1` form with provenance comments.
    pub fn dump(&self) -> String {
        format!(
            "# counterexample candidate: seed={} index={} source={}\n{}",
            self.seed,
            self.index,
            self.source,
            format::serialize(&self.algebra)
        )
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct HuntSummary {
    pub samples: u64,
    pub valid: u64,
    pub rejected: u64,
    pub sparse_drawn: u64,
    pub sparse_valid: u64,
    pub hypothesis_met: u64,
    pub counterexamples: u64,
    /// Fewer than 0.1% of sparse tensors satisfied Jacobi.
    pub low_acceptance: bool,
}

impl HuntSummary {
    pub fn to_record(&self) -> Record {
        Record::new("hunt_summary")
            .with("samples", self.samples)
            .with("valid", self.valid)
            .with("rejected", self.rejected)
            .with("sparse_valid", self.sparse_valid)
            .with("sparse_drawn", self.sparse_drawn)
            .with("hypothesis_met", self.hypothesis_met)
            .with("counterexamples", self.counterexamples)
            .with("low_acceptance", self.low_acceptance)
    }
}

fn random_nonzero(field: Field, rng: &mut impl Rng) -> crate::field::Scalar {
    let p = field.characteristic() as i64;
    field.from_i64(rng.gen_range(1..p))
}

/// Sparse random upper-triangle tensor; `None` when Jacobi fails.
pub fn sparse_random(field: Field, n: usize, rng: &mut impl Rng) -> Option<LieAlgebra> {
    let mut brackets = Vec::new();
    for i in 0..n {
        for j in i + 1..n {
            let mut v = vector::zero(field, n);
            for x in v.iter_mut() {
                if rng.gen_ratio(1, 3) {
                    *x = random_nonzero(field, rng);
                }
            }
            brackets.push(((i, j), v));
        }
    }
    LieAlgebra::new(field, n, brackets, None).ok()
}

fn random_matrix(field: Field, n: usize, rng: &mut impl Rng) -> Matrix {
    let rows: Vec<Vector> = (0..n).map(|_| random_vector(field, n, rng)).collect();
    Matrix::from_rows(field, n, &rows).expect("square")
}

/// `A ∔ B`, `A` abelian, `B` random of dimension `1..n`, acting randomly.
pub fn semidirect_random(field: Field, n: usize, rng: &mut impl Rng) -> Option<LieAlgebra> {
    if n < 2 {
        return None;
    }
    let b_dim = rng.gen_range(1..n);
    let a_dim = n - b_dim;
    let b = if b_dim == 1 {
        LieAlgebra::abelian(field, 1)
    } else {
        sparse_random(field, b_dim, rng)?
    };
    let rho: Vec<Matrix> = (0..b_dim).map(|_| random_matrix(field, a_dim, rng)).collect();
    let names = (0..a_dim).map(|i| format!("a{i}")).collect();
    let b = b.with_names((0..b_dim).map(|i| format!("b{i}")).collect()).ok()?;
    let l = catalog::semidirect(field, names, &b, &rho).ok()?;
    let n = l.dim();
    l.with_names((0..n).map(|i| format!("e{i}")).collect()).ok()
}

/// Catalog algebras over `field` of dimension `n`.
fn catalog_candidates(field: Field, n: usize) -> Vec<(String, LieAlgebra)> {
    let p = field.characteristic();
    let mut out = Vec::new();
    let mut push = |name: &str, l: Result<LieAlgebra>| {
        if let Ok(l) = l {
            if l.dim() == n {
                out.push((name.to_string(), l));
            }
        }
    };
    push("heisenberg", Ok(catalog::heisenberg(field)));
    push("sl2", Ok(catalog::sl2(field)));
    push("cross_product", Ok(catalog::cross_product(field)));
    push("gein2", Ok(catalog::gein_family2(field)));
    push("almost_abelian", catalog::almost_abelian(n, field));
    push("thm31_type_i", catalog::thm31_type_i(p, field));
    push("thm31_type_ii", catalog::thm31_type_ii(p, field, false));
    push("ev_type_a", catalog::ev_type_a(p, &field.one(), field));
    push("ev_type_b", catalog::ev_type_b(p, field));
    push("witt", catalog::witt(p));
    out
}

fn random_basis_change(l: &LieAlgebra, rng: &mut impl Rng) -> Option<LieAlgebra> {
    for _ in 0..32 {
        let m = random_matrix(l.field(), l.dim(), rng);
        if m.rank() == l.dim() {
            return l.change_basis(&m.row_vectors()).ok();
        }
    }
    None
}

/// Regenerate sample `index`: `(source, algebra)`, or `(source, None)` when
/// the draw was rejected.
pub fn sample(cfg: &HuntConfig, index: u64) -> (String, Option<LieAlgebra>) {
    let mut rng = cfg.scan.rng_for(index);
    let n = rng.gen_range(cfg.dim_min..=cfg.dim_max);
    match index % 3 {
        0 => ("sparse".into(), sparse_random(cfg.field, n, &mut rng)),
        1 => ("semidirect".into(), semidirect_random(cfg.field, n, &mut rng)),
        _ => {
            let cands = catalog_candidates(cfg.field, n);
            if cands.is_empty() {
                return ("sparse".into(), sparse_random(cfg.field, n, &mut rng));
            }
            let (name, l) = &cands[rng.gen_range(0..cands.len())];
            (format!("catalog:{name}"), random_basis_change(l, &mut rng))
        }
    }
}

/// The first `count` valid samples of a hunt over dimensions `1..=dim_max`,
/// as `(index, source, algebra)`; a reproducible test corpus.
pub fn corpus(field: Field, dim_max: usize, count: usize, seed: u64) -> Result<Vec<(u64, String, LieAlgebra)>> {
    let cfg = HuntConfig::new(field, 1, dim_max, u64::MAX, seed)?;
    let mut out = Vec::with_capacity(count);
    let mut index = 0;
    while out.len() < count {
        if let (source, Some(l)) = sample(&cfg, index) {
            out.push((index, source, l));
        }
        index += 1;
    }
    Ok(out)
}

const CHUNK: u64 = 256;

/// Run the hunt; `on_instance` sees every instance whose hypothesis is met,
/// in index order.
pub fn conjecture_hunt(cfg: &HuntConfig, mut on_instance: impl FnMut(&HuntInstance)) -> Result<HuntSummary> {
    let mut summary = HuntSummary {
        samples: cfg.scan.samples,
        ..HuntSummary::default()
    };
    let inner = cfg.scan.with_workers(1);
    let mut start = 0;
    while start < cfg.scan.samples {
        let end = (start + CHUNK).min(cfg.scan.samples);
        let batch: Vec<Result<(String, Option<HuntInstance>)>> = cfg.scan.install(|| {
            (start..end)
                .into_par_iter()
                .map(|i| {
                    let (source, l) = sample(cfg, i);
                    let Some(l) = l else { return Ok((source, None)) };
                    let report = harness::verify_conjecture(&l, &inner)?;
                    Ok((
                        source.clone(),
                        Some(HuntInstance {
                            index: i,
                            seed: cfg.scan.seed,
                            source,
                            algebra: l,
                            report,
                        }),
                    ))
                })
                .collect()
        });
        for item in batch {
            let (source, inst) = item?;
            if source == "sparse" {
                summary.sparse_drawn += 1;
            }
            let Some(inst) = inst else {
                summary.rejected += 1;
                continue;
            };
            summary.valid += 1;
            if source == "sparse" {
                summary.sparse_valid += 1;
            }
            if inst.report.hypothesis == Hypothesis::Met {
                summary.hypothesis_met += 1;
                if inst.is_counterexample() {
                    summary.counterexamples += 1;
                }
                on_instance(&inst);
            }
        }
        start = end;
    }
    summary.low_acceptance = summary.sparse_drawn > 0 && summary.sparse_valid * 1000 < summary.sparse_drawn;
    Ok(summary)
}

/// Re-verify a claimed counterexample from its dump: the algebra must be
/// simple, have only solvable proper subalgebras, and not be two-generated.
/// Returns `false` for a fake claim.
pub fn reverify_counterexample(dump: &str, cfg: &ScanConfig) -> Result<bool> {
    let l = format::parse(dump)?;
    if !props::is_simple(&l, &cfg.caps)? {
        return Ok(false);
    }
    let report = harness::verify_conjecture(&l, cfg)?;
    Ok(report.hypothesis == Hypothesis::Met && report.failed())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn samples_are_reproducible() {
        let cfg = HuntConfig::new(Field::Prime(2), 3, 4, 30, 7).unwrap();
        for i in 0..30 {
            let (s1, a1) = sample(&cfg, i);
            let (s2, a2) = sample(&cfg, i);
            assert_eq!((s1, a1), (s2, a2));
        }
    }

    #[test]
    fn small_hunt_independent_of_workers() {
        let mut cfg = HuntConfig::new(Field::Prime(2), 1, 4, 300, 42).unwrap();
        let mut a = Vec::new();
        let s1 = conjecture_hunt(&cfg, |i| a.push(i.to_record().render())).unwrap();
        cfg.scan = cfg.scan.with_workers(4);
        let mut b = Vec::new();
        let s2 = conjecture_hunt(&cfg, |i| b.push(i.to_record().render())).unwrap();
        assert_eq!(s1, s2);
        assert_eq!(a, b);
        assert_eq!(s1.counterexamples, 0);
        assert_eq!(s1.valid + s1.rejected, 300);
    }

    #[test]
    fn planted_fake_counterexample_is_rejected() {
        let sl2 = catalog::sl2(Field::Prime(5));
        assert!(!reverify_counterexample(&format::serialize(&sl2), &ScanConfig::default()).unwrap());
        let heis = catalog::heisenberg(Field::Prime(2));
        assert!(!reverify_counterexample(&format::serialize(&heis), &ScanConfig::default()).unwrap());
    }

    #[test]
    fn sl2_gf5_meets_hypothesis_and_is_two_generated() {
        let r = harness::verify_conjecture(&catalog::sl2(Field::Prime(5)), &ScanConfig::default()).unwrap();
        assert_eq!(r.hypothesis, Hypothesis::Met);
        assert!(r.held());
    }
}
