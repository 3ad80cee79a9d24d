//! Exhaustive and sampled search over finite-field objects: projective
//! points, subspaces, subalgebras, generating pairs.
//!
//! Pair scans only visit projective representatives (first nonzero
//! coordinate equal to one). Brackets are bilinear, so `<ax, by> = <x, y>`
//! for nonzero scalars `a, b` and nothing is lost.
//!
//! Every parallel scan partitions a fixed index range and merges results in
//! index order, so output never depends on the number of workers.

use std::collections::HashMap;
use std::sync::{Arc, Mutex, OnceLock};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use crate::algebra::{LieAlgebra, Subalgebra};
use crate::error::{Error, Result};
use crate::field::{Field, Scalar};
use crate::matrix::{vector, Vector};
use crate::props::Property;
use crate::subspace::Subspace;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Caps {
    pub max_subspaces: u128,
    pub max_pairs: u128,
    pub max_elements: u128,
}

impl Default for Caps {
    fn default() -> Self {
        Self {
            max_subspaces: 500_000,
            max_pairs: 10_000_000,
            max_elements: 1_000_000,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum ScanMode {
    Exhaustive,
    Sampled,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct ScanConfig {
    pub mode: ScanMode,
    pub samples: u64,
    pub seed: u64,
    pub caps: Caps,
    pub workers: usize,
}

impl Default for ScanConfig {
    fn default() -> Self {
        Self {
            mode: ScanMode::Exhaustive,
            samples: 1000,
            seed: 0,
            caps: Caps::default(),
            workers: 1,
        }
    }
}

fn pool(workers: usize) -> Arc<rayon::ThreadPool> {
    static POOLS: OnceLock<Mutex<HashMap<usize, Arc<rayon::ThreadPool>>>> = OnceLock::new();
    let mut pools = POOLS.get_or_init(Default::default).lock().expect("pool registry");
    pools
        .entry(workers.max(1))
        .or_insert_with(|| {
            Arc::new(
                rayon::ThreadPoolBuilder::new()
                    .num_threads(workers.max(1))
                    .build()
                    .expect("thread pool"),
            )
        })
        .clone()
}

impl ScanConfig {
    pub fn sampled(samples: u64, seed: u64) -> Self {
        Self {
            mode: ScanMode::Sampled,
            samples,
            seed,
            ..Self::default()
        }
    }

    pub fn with_workers(mut self, workers: usize) -> Self {
        self.workers = workers.max(1);
        self
    }

    /// Run `f` on a pool with the configured number of worker threads.
    pub fn install<T: Send>(&self, f: impl FnOnce() -> T + Send) -> T {
        pool(self.workers).install(f)
    }

    /// Independent RNG stream for sample number `index`.
    pub fn rng_for(&self, index: u64) -> ChaCha8Rng {
        ChaCha8Rng::seed_from_u64(self.seed ^ index.wrapping_mul(0x9E37_79B9_7F4A_7C15))
    }
}

fn cap_check(what: &str, estimate: u128, cap: u128) -> Result<()> {
    if estimate > cap {
        return Err(Error::CapExceeded {
            what: what.to_string(),
            estimate,
            cap,
        });
    }
    Ok(())
}

pub(crate) fn require_finite(field: Field, what: &str) -> Result<u64> {
    field
        .size()
        .ok_or_else(|| Error::Unsupported(format!("{what} needs a finite field, got {field}")))
}

/// Gaussian binomial `[n choose k]_q`, saturating.
pub fn gaussian_binomial(n: usize, k: usize, q: u64) -> u128 {
    if k > n {
        return 0;
    }
    let q = q as u128;
    let mut num: u128 = 1;
    let mut den: u128 = 1;
    for i in 0..k {
        let a = q.saturating_pow((n - i) as u32).saturating_sub(1);
        let b = q.saturating_pow((i + 1) as u32).saturating_sub(1);
        num = num.saturating_mul(a);
        den = den.saturating_mul(b);
        // keep the running quotient exact: the partial products are
        // themselves Gaussian binomials times a unit
        let g = gcd(num, den);
        num /= g;
        den /= g;
    }
    num / den
}

fn gcd(mut a: u128, mut b: u128) -> u128 {
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a.max(1)
}

/// Number of subspaces of `GF(q)^n`.
pub fn galois_number(n: usize, q: u64) -> u128 {
    (0..=n).fold(0u128, |acc, k| acc.saturating_add(gaussian_binomial(n, k, q)))
}

/// `(q^n - 1) / (q - 1)`
pub fn projective_count(n: usize, q: u64) -> u128 {
    let q = q as u128;
    (0..n).fold(0u128, |acc, i| acc.saturating_add(q.saturating_pow(i as u32)))
}

/// The `index`-th projective point of `GF(q)^n`. Points are ordered by the
/// position of the leading one, then by the remaining coordinates read as a
/// base-`q` number.
pub fn projective_point(field: Field, n: usize, mut index: u128) -> Vector {
    let q = field.size().expect("finite field") as u128;
    let mut v = vector::zero(field, n);
    for lead in 0..n {
        let block = q.pow((n - 1 - lead) as u32);
        if index < block {
            v[lead] = field.one();
            for pos in (lead + 1..n).rev() {
                v[pos] = field.from_i64((index % q) as i64);
                index /= q;
            }
            return v;
        }
        index -= block;
    }
    panic!("projective index out of range")
}

pub fn projective_points(field: Field, n: usize) -> Vec<Vector> {
    let q = field.size().expect("finite field");
    (0..projective_count(n, q))
        .map(|i| projective_point(field, n, i))
        .collect()
}

/// Projective representatives of the nonzero vectors of `s`, in the order of
/// their coordinates with respect to the echelon basis.
pub fn projective_points_of(s: &Subspace) -> Vec<Vector> {
    let field = s.field();
    projective_points(field, s.dim())
        .into_iter()
        .map(|c| s.from_coordinates(&c))
        .collect()
}

/// All vectors of a subspace, including zero.
pub fn all_vectors_of(s: &Subspace) -> Vec<Vector> {
    let field = s.field();
    let q = field.size().expect("finite field") as u128;
    let d = s.dim();
    (0..q.pow(d as u32))
        .map(|mut idx| {
            let coeffs: Vec<Scalar> = (0..d)
                .map(|_| {
                    let c = field.from_i64((idx % q) as i64);
                    idx /= q;
                    c
                })
                .collect();
            s.from_coordinates(&coeffs)
        })
        .collect()
}

/// Iterator over the `k`-dimensional subspaces of `GF(q)^n`, produced
/// directly as reduced echelon forms: first the pivot columns, then every
/// assignment of the free entries.
pub struct SubspacesOfDim {
    field: Field,
    n: usize,
    pivots: Option<Vec<usize>>,
    free: Vec<(usize, usize)>,
    digits: Vec<u64>,
    q: u64,
    fresh: bool,
}

impl SubspacesOfDim {
    pub fn new(field: Field, n: usize, k: usize) -> Self {
        let q = field.size().expect("finite field");
        let pivots = (k <= n).then(|| (0..k).collect::<Vec<_>>());
        let mut it = Self {
            field,
            n,
            pivots,
            free: Vec::new(),
            digits: Vec::new(),
            q,
            fresh: true,
        };
        it.reset_free();
        it
    }

    fn reset_free(&mut self) {
        self.free.clear();
        if let Some(p) = &self.pivots {
            for (r, &pc) in p.iter().enumerate() {
                for c in pc + 1..self.n {
                    if !p.contains(&c) {
                        self.free.push((r, c));
                    }
                }
            }
        }
        self.digits = vec![0; self.free.len()];
        self.fresh = true;
    }

    fn next_pivots(&mut self) {
        let Some(p) = self.pivots.as_mut() else { return };
        let k = p.len();
        let n = self.n;
        let mut i = k;
        while i > 0 {
            i -= 1;
            if p[i] < n - k + i {
                p[i] += 1;
                for j in i + 1..k {
                    p[j] = p[j - 1] + 1;
                }
                self.reset_free();
                return;
            }
        }
        self.pivots = None;
    }

    fn advance_digits(&mut self) -> bool {
        for d in self.digits.iter_mut().rev() {
            *d += 1;
            if *d < self.q {
                return true;
            }
            *d = 0;
        }
        false
    }
}

impl Iterator for SubspacesOfDim {
    type Item = Subspace;

    fn next(&mut self) -> Option<Subspace> {
        loop {
            let pivots = self.pivots.clone()?;
            if !self.fresh && !self.advance_digits() {
                self.next_pivots();
                continue;
            }
            self.fresh = false;
            let mut rows: Vec<Vector> = pivots.iter().map(|&pc| vector::unit(self.field, self.n, pc)).collect();
            for (&(r, c), &d) in self.free.iter().zip(&self.digits) {
                rows[r][c] = self.field.from_i64(d as i64);
            }
            return Some(Subspace::from_rref_rows(self.field, self.n, rows));
        }
    }
}

const CHUNK: usize = 4096;

/// All subalgebras of `l` (including `0` and `l`), in canonical order.
pub fn enumerate_subalgebras(l: &LieAlgebra, cfg: &ScanConfig) -> Result<Vec<Subalgebra>> {
    let q = require_finite(l.field(), "subalgebra enumeration")?;
    let n = l.dim();
    cap_check("subspace enumeration", galois_number(n, q), cfg.caps.max_subspaces)?;
    let mut out: Vec<Subspace> = Vec::new();
    cfg.install(|| {
        for k in 0..=n {
            let mut it = SubspacesOfDim::new(l.field(), n, k).peekable();
            while it.peek().is_some() {
                let chunk: Vec<Subspace> = it.by_ref().take(CHUNK).collect();
                let kept: Vec<Subspace> = chunk.into_par_iter().filter(|s| l.is_subalgebra(s)).collect();
                out.extend(kept);
            }
        }
    });
    out.sort();
    Ok(out
        .into_iter()
        .map(|s| l.subalgebra(s).expect("filtered subalgebra"))
        .collect())
}

/// Maximal proper subalgebras, in canonical order.
pub fn maximal_subalgebras(l: &LieAlgebra, cfg: &ScanConfig) -> Result<Vec<Subalgebra>> {
    let all = enumerate_subalgebras(l, cfg)?;
    Ok(maximal_among(l, &all))
}

/// The maximal proper members of a complete subalgebra list.
pub fn maximal_among(l: &LieAlgebra, all: &[Subalgebra]) -> Vec<Subalgebra> {
    let mut proper: Vec<&Subalgebra> = all.iter().filter(|s| s.dim() < l.dim()).collect();
    proper.sort_by(|a, b| b.dim().cmp(&a.dim()).then_with(|| a.cmp(b)));
    let mut maximal: Vec<Subalgebra> = Vec::new();
    for s in proper {
        // anything strictly larger and proper lies in some maximal one
        // already found, which has strictly larger dimension
        if !maximal
            .iter()
            .any(|m| m.dim() > s.dim() && m.space().contains_subspace(s.space()))
        {
            maximal.push(s.clone());
        }
    }
    maximal.sort();
    maximal
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum TwoGenVerdict {
    /// `<x, y> = L`.
    Generated(Vector, Vector),
    /// Exhaustive search proved no pair generates.
    NotGenerated,
    /// Sampling found no generating pair; not a disproof.
    Unknown { samples: u64 },
}

impl TwoGenVerdict {
    pub fn is_generated(&self) -> bool {
        matches!(self, TwoGenVerdict::Generated(..))
    }
}

/// Decide whether `l` is generated by two elements.
pub fn is_two_generated(l: &LieAlgebra, cfg: &ScanConfig) -> Result<TwoGenVerdict> {
    let n = l.dim();
    if n <= 2 {
        let x = if n >= 1 { l.unit(0) } else { l.zero_vector() };
        let y = if n == 2 { l.unit(1) } else { l.zero_vector() };
        return Ok(TwoGenVerdict::Generated(x, y));
    }
    if cfg.mode == ScanMode::Sampled {
        return sampled_two_generated(l, cfg);
    }
    let q = require_finite(l.field(), "exhaustive two-generation scan")?;
    // L/L^2 is abelian, so it needs at most two generators
    if n - l.derived_algebra().dim() > 2 {
        return Ok(TwoGenVerdict::NotGenerated);
    }
    let pts = projective_count(n, q);
    cap_check(
        "generating-pair scan",
        pts * (pts.saturating_sub(1)) / 2,
        cfg.caps.max_pairs,
    )?;
    let points = projective_points(l.field(), n);
    let found = cfg.install(|| {
        (0..points.len()).into_par_iter().find_map_first(|i| {
            (i + 1..points.len()).find_map(|j| {
                let s = l.generated_subalgebra(&[points[i].clone(), points[j].clone()]);
                s.space().is_full().then(|| (points[i].clone(), points[j].clone()))
            })
        })
    });
    Ok(match found {
        Some((x, y)) => TwoGenVerdict::Generated(x, y),
        None => TwoGenVerdict::NotGenerated,
    })
}

/// Random vector: uniform over GF(p), integer coordinates in `[-3, 3]` over Q.
pub fn random_vector(field: Field, n: usize, rng: &mut impl Rng) -> Vector {
    (0..n)
        .map(|_| match field {
            Field::Prime(p) => field.from_i64(rng.gen_range(0..p as i64)),
            Field::Rationals => field.from_i64(rng.gen_range(-3..=3)),
        })
        .collect()
}

fn sampled_two_generated(l: &LieAlgebra, cfg: &ScanConfig) -> Result<TwoGenVerdict> {
    let n = l.dim();
    let found = cfg.install(|| {
        (0..cfg.samples).into_par_iter().find_map_first(|i| {
            let mut rng = cfg.rng_for(i);
            let x = random_vector(l.field(), n, &mut rng);
            let y = random_vector(l.field(), n, &mut rng);
            l.generated_subalgebra(&[x.clone(), y.clone()])
                .space()
                .is_full()
                .then_some((x, y))
        })
    });
    Ok(match found {
        Some((x, y)) => TwoGenVerdict::Generated(x, y),
        None => TwoGenVerdict::Unknown { samples: cfg.samples },
    })
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ScanOutcome {
    /// Every proper subalgebra `<x, y>` has the property.
    AllHold { pairs: u64, distinct: usize },
    /// `<x, y>` is proper and lacks the property.
    Witness { x: Vector, y: Vector, subalgebra: Subspace },
    /// Sampling found no witness; heuristic only.
    NoWitnessFound { samples: u64 },
}

impl ScanOutcome {
    pub fn all_hold(&self) -> bool {
        matches!(self, ScanOutcome::AllHold { .. })
    }
}

/// Check `prop` on every proper subalgebra generated by two elements.
pub fn twogen_subalgebra_scan(l: &LieAlgebra, prop: Property, cfg: &ScanConfig) -> Result<ScanOutcome> {
    if cfg.mode == ScanMode::Sampled {
        return sampled_twogen_scan(l, prop, cfg);
    }
    let q = require_finite(l.field(), "exhaustive two-generated subalgebra scan")?;
    let n = l.dim();
    let pts = projective_count(n, q);
    cap_check("pair scan", pts * (pts + 1) / 2, cfg.caps.max_pairs)?;
    let points = projective_points(l.field(), n);
    let mut cache: HashMap<Subspace, bool> = HashMap::new();
    let mut pairs = 0u64;
    let rows_per_chunk = (CHUNK / points.len().max(1)).max(1);

    let mut start = 0;
    while start < points.len() {
        let end = (start + rows_per_chunk).min(points.len());
        let closures: Vec<(usize, usize, Subspace)> = cfg.install(|| {
            (start..end)
                .into_par_iter()
                .flat_map_iter(|i| {
                    let points = &points;
                    (i..points.len()).map(move |j| {
                        let s = l.generated_subalgebra(&[points[i].clone(), points[j].clone()]);
                        (i, j, s.into_space())
                    })
                })
                .collect()
        });
        pairs += closures.len() as u64;
        let mut fresh: Vec<Subspace> = Vec::new();
        for (_, _, s) in &closures {
            if !s.is_full() && !cache.contains_key(s) && !fresh.contains(s) {
                fresh.push(s.clone());
            }
        }
        let verdicts: Vec<Result<bool>> = cfg.install(|| fresh.par_iter().map(|s| prop.holds_on(l, s)).collect());
        for (s, v) in fresh.into_iter().zip(verdicts) {
            cache.insert(s, v?);
        }
        for (i, j, s) in closures {
            if !s.is_full() && !cache[&s] {
                return Ok(ScanOutcome::Witness {
                    x: points[i].clone(),
                    y: points[j].clone(),
                    subalgebra: s,
                });
            }
        }
        start = end;
    }
    Ok(ScanOutcome::AllHold {
        pairs,
        distinct: cache.len(),
    })
}

fn sampled_twogen_scan(l: &LieAlgebra, prop: Property, cfg: &ScanConfig) -> Result<ScanOutcome> {
    let n = l.dim();
    let found: Option<Result<ScanOutcome>> = cfg.install(|| {
        (0..cfg.samples).into_par_iter().find_map_first(|i| {
            let mut rng = cfg.rng_for(i);
            let x = random_vector(l.field(), n, &mut rng);
            let y = random_vector(l.field(), n, &mut rng);
            let s = l.generated_subalgebra(&[x.clone(), y.clone()]).into_space();
            if s.is_full() || s.is_zero() {
                return None;
            }
            match prop.holds_on(l, &s) {
                Ok(true) => None,
                Ok(false) => Some(Ok(ScanOutcome::Witness { x, y, subalgebra: s })),
                Err(e) => Some(Err(e)),
            }
        })
    });
    found.unwrap_or(Ok(ScanOutcome::NoWitnessFound { samples: cfg.samples }))
}
