//! Mechanical checks of the structure theorems on concrete algebras.
//!
//! Every verifier computes its hypothesis (never assumes it) and, when the
//! hypothesis holds, evaluates each conclusion separately. A failed
//! conclusion carries vectors/subspaces that re-check through the public API.

use std::fmt;
use std::time::{Duration, Instant};

use rand::Rng;

use crate::algebra::{LieAlgebra, Subalgebra};
use crate::enumerate::{self, ScanConfig, ScanMode, ScanOutcome, TwoGenVerdict};
use crate::error::Result;
use crate::matrix::{vector, Vector};
use crate::props::{self, Property};
use crate::report::Record;
use crate::subspace::Subspace;
use crate::triang;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Hypothesis {
    Met,
    NotMet,
    /// Cannot be met for structural reasons (e.g. too small).
    Vacuous,
    /// Decided from sampling only.
    Heuristic,
}

impl fmt::Display for Hypothesis {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Hypothesis::Met => "met",
            Hypothesis::NotMet => "not_met",
            Hypothesis::Vacuous => "vacuous",
            Hypothesis::Heuristic => "heuristic",
        })
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Witness {
    pub note: String,
    pub vectors: Vec<Vector>,
    pub subspaces: Vec<Subspace>,
}

impl Witness {
    pub fn new(note: impl Into<String>) -> Self {
        Self {
            note: note.into(),
            ..Self::default()
        }
    }

    pub fn vectors(mut self, vs: impl IntoIterator<Item = Vector>) -> Self {
        self.vectors.extend(vs);
        self
    }

    pub fn subspaces(mut self, ss: impl IntoIterator<Item = Subspace>) -> Self {
        self.subspaces.extend(ss);
        self
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Conclusion {
    Held,
    Failed(Witness),
    Skipped,
}

impl Conclusion {
    fn label(&self) -> &'static str {
        match self {
            Conclusion::Held => "held",
            Conclusion::Failed(_) => "failed",
            Conclusion::Skipped => "skipped",
        }
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Stats {
    pub pairs: u64,
    pub subalgebras: u64,
    pub elapsed: Duration,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HarnessReport {
    pub theorem: String,
    pub hypothesis: Hypothesis,
    /// Why the hypothesis is (not) met.
    pub reason: String,
    pub conclusions: Vec<(String, Conclusion)>,
    pub stats: Stats,
    pub seed: Option<u64>,
    /// A subspace or vector explaining a not-met hypothesis.
    pub evidence: Option<Witness>,
}

impl HarnessReport {
    fn new(theorem: &str) -> Self {
        Self {
            theorem: theorem.into(),
            hypothesis: Hypothesis::Met,
            reason: String::new(),
            conclusions: Vec::new(),
            stats: Stats::default(),
            seed: None,
            evidence: None,
        }
    }

    fn not_met(mut self, reason: impl Into<String>) -> Self {
        self.hypothesis = Hypothesis::NotMet;
        self.reason = reason.into();
        self
    }

    fn with_evidence(mut self, w: Witness) -> Self {
        self.evidence = Some(w);
        self
    }

    fn check(&mut self, name: &str, ok: bool, witness: impl FnOnce() -> Witness) {
        let c = if ok {
            Conclusion::Held
        } else {
            Conclusion::Failed(witness())
        };
        self.conclusions.push((name.into(), c));
    }

    fn skip(&mut self, name: &str) {
        self.conclusions.push((name.into(), Conclusion::Skipped));
    }

    fn timed(mut self, start: Instant) -> Self {
        self.stats.elapsed = start.elapsed();
        self
    }

    pub fn conclusion(&self) -> &'static str {
        if !matches!(self.hypothesis, Hypothesis::Met | Hypothesis::Heuristic) {
            return "skipped";
        }
        if self.conclusions.iter().any(|(_, c)| matches!(c, Conclusion::Failed(_))) {
            "failed"
        } else if !self.conclusions.is_empty() && self.conclusions.iter().all(|(_, c)| *c == Conclusion::Held) {
            "held"
        } else {
            "skipped"
        }
    }

    pub fn failed(&self) -> bool {
        self.conclusion() == "failed"
    }

    pub fn held(&self) -> bool {
        self.conclusion() == "held"
    }

    pub fn failures(&self) -> impl Iterator<Item = (&str, &Witness)> {
        self.conclusions.iter().filter_map(|(n, c)| match c {
            Conclusion::Failed(w) => Some((n.as_str(), w)),
            _ => None,
        })
    }

    /// One report-v1 record (timing is added by the emitter).
    pub fn to_record(&self) -> Record {
        let mut r = Record::new("harness")
            .with("theorem", &self.theorem)
            .with("hypothesis", self.hypothesis)
            .with("conclusion", self.conclusion());
        if !self.reason.is_empty() {
            r.push("reason", &self.reason);
        }
        for (name, c) in &self.conclusions {
            r.push(name, c.label());
        }
        r.push("pairs", self.stats.pairs);
        r.push("subalgebras", self.stats.subalgebras);
        if let Some(seed) = self.seed {
            r.push("seed", seed);
        }
        let mut put = |prefix: &str, w: &Witness| {
            r.push(&format!("{prefix}_note"), &w.note);
            if !w.vectors.is_empty() {
                let vs: Vec<String> = w.vectors.iter().map(|v| vector::render(v)).collect();
                r.push(&format!("{prefix}_vectors"), vs.join("|"));
            }
            for (i, s) in w.subspaces.iter().enumerate() {
                r.push(&format!("{prefix}_subspace{i}"), s.render());
            }
        };
        if let Some(w) = &self.evidence {
            put("evidence", w);
        }
        for (name, w) in self.failures() {
            put(&format!("witness_{name}"), w);
        }
        r
    }
}

/// Subalgebra lattice of a finite-field algebra, computed once per check.
struct Lattice {
    all: Vec<Subalgebra>,
    maximal: Vec<Subalgebra>,
}

impl Lattice {
    fn new(l: &LieAlgebra, cfg: &ScanConfig, stats: &mut Stats) -> Result<Self> {
        let all = enumerate::enumerate_subalgebras(l, cfg)?;
        stats.subalgebras += all.len() as u64;
        let maximal = enumerate::maximal_among(l, &all);
        Ok(Self { all, maximal })
    }

    fn proper<'a>(&'a self, l: &LieAlgebra) -> impl Iterator<Item = &'a Subalgebra> + 'a {
        let n = l.dim();
        self.all.iter().filter(move |s| s.dim() < n)
    }

    /// First proper subalgebra lacking `prop`.
    fn proper_without(&self, l: &LieAlgebra, prop: Property) -> Result<Option<Subspace>> {
        for s in self.proper(l) {
            if !prop.holds_on(l, s.space())? {
                return Ok(Some(s.space().clone()));
            }
        }
        Ok(None)
    }
}

fn exhaustive(cfg: &ScanConfig) -> ScanConfig {
    ScanConfig {
        mode: ScanMode::Exhaustive,
        ..*cfg
    }
}

/// Conclusion "L is two-generated" with the generating pair re-checked.
fn check_two_generated(rep: &mut HarnessReport, l: &LieAlgebra, cfg: &ScanConfig, name: &str) -> Result<()> {
    match enumerate::is_two_generated(l, cfg)? {
        TwoGenVerdict::Generated(x, y) => {
            let ok = l.generated_subalgebra(&[x.clone(), y.clone()]).space().is_full();
            assert!(ok, "generating pair does not regenerate L");
            rep.check(name, true, Witness::default);
        }
        TwoGenVerdict::NotGenerated => rep.check(name, false, || {
            Witness::new("no pair of elements generates L (exhaustive)")
        }),
        TwoGenVerdict::Unknown { .. } => rep.skip(name),
    }
    Ok(())
}

fn scan_stats(outcome: &ScanOutcome, stats: &mut Stats) {
    if let ScanOutcome::AllHold { pairs, distinct } = outcome {
        stats.pairs += pairs;
        stats.subalgebras += *distinct as u64;
    }
}

/// Condition (*): if every two-generated proper subalgebra has `prop`, then
/// `L` has `prop` or is two-generated.
///
/// For `simple_or_1dim` in characteristic other than 2 and 3, also checks
/// that every subalgebra of dimension > 1 is simple.
pub fn verify_condition_star(l: &LieAlgebra, prop: Property, cfg: &ScanConfig) -> Result<HarnessReport> {
    let start = Instant::now();
    let mut rep = HarnessReport::new(&format!("star:{prop}"));
    let outcome = enumerate::twogen_subalgebra_scan(l, prop, cfg)?;
    scan_stats(&outcome, &mut rep.stats);
    match &outcome {
        ScanOutcome::Witness { x, y, subalgebra } => {
            let reason = format!("a two-generated proper subalgebra is not {prop}");
            return Ok(rep
                .not_met(reason)
                .with_evidence(
                    Witness::new("generators and subalgebra")
                        .vectors([x.clone(), y.clone()])
                        .subspaces([subalgebra.clone()]),
                )
                .timed(start));
        }
        ScanOutcome::NoWitnessFound { samples } => {
            rep.hypothesis = Hypothesis::Heuristic;
            rep.reason = format!("no counterexample among {samples} sampled pairs");
        }
        ScanOutcome::AllHold { .. } => {}
    }
    if prop.decide(l)? {
        rep.check("property_or_two_generated", true, Witness::default);
    } else {
        match enumerate::is_two_generated(l, cfg)? {
            TwoGenVerdict::Generated(..) => rep.check("property_or_two_generated", true, Witness::default),
            TwoGenVerdict::NotGenerated => rep.check("property_or_two_generated", false, || {
                Witness::new(format!("L is not {prop} and not two-generated"))
            }),
            TwoGenVerdict::Unknown { .. } => rep.skip("property_or_two_generated"),
        }
    }
    let p = l.field().characteristic();
    if prop == Property::SimpleOr1Dim && p != 2 && p != 3 && l.field().is_finite() && outcome.all_hold() {
        let lat = Lattice::new(l, cfg, &mut rep.stats)?;
        let mut bad = None;
        for s in lat.all.iter().filter(|s| s.dim() > 1) {
            if !Property::Simple.holds_on(l, s.space())? {
                bad = Some(s.space().clone());
                break;
            }
        }
        rep.check("subalgebras_simple", bad.is_none(), || {
            Witness::new("non-simple subalgebra of dimension > 1").subspaces(bad)
        });
        check_two_generated(&mut rep, l, &exhaustive(cfg), "two_generated")?;
    }
    Ok(rep.timed(start))
}

/// Simplicity hypothesis shared by the simple-algebra theorems.
fn simple_or_reason(l: &LieAlgebra, cfg: &ScanConfig) -> Result<std::result::Result<(), (String, Witness)>> {
    Ok(match props::simplicity(l, &cfg.caps)? {
        props::Simplicity::Simple => Ok(()),
        props::Simplicity::TooSmall => Err(("dimension at most 1".into(), Witness::new("too small"))),
        props::Simplicity::NotPerfect(d) => Err((
            "L is not perfect".into(),
            Witness::new("derived algebra").subspaces([d]),
        )),
        props::Simplicity::ProperIdeal(i) => Err(("L has a proper ideal".into(), Witness::new("ideal").subspaces([i]))),
    })
}

/// Nonzero elements of `s` acting nilpotently on `L`.
fn ad_nilpotent_in(l: &LieAlgebra, s: &Subspace, cfg: &ScanConfig) -> Result<Vec<Vector>> {
    triang::ad_nilpotent_elements(l, s, &cfg.caps)
}

fn pairwise_intersections(maximal: &[Subalgebra]) -> impl Iterator<Item = (usize, usize, Subspace)> + '_ {
    (0..maximal.len()).flat_map(move |i| {
        (i + 1..maximal.len()).map(move |j| {
            (
                i,
                j,
                maximal[i].space().intersect(maximal[j].space()).expect("same ambient"),
            )
        })
    })
}

/// Gein: `L` simple with every proper subalgebra nilpotent implies
/// (1) distinct maximal subalgebras meet in 0, (2) no nonzero ad-nilpotent
/// elements, (3) `L` two-generated.
pub fn verify_gein(l: &LieAlgebra, cfg: &ScanConfig) -> Result<HarnessReport> {
    let start = Instant::now();
    let rep = HarnessReport::new("gein");
    if l.dim() <= 1 {
        let mut r = rep.not_met("dimension at most 1");
        r.hypothesis = Hypothesis::Vacuous;
        return Ok(r.timed(start));
    }
    if let Err((reason, w)) = simple_or_reason(l, cfg)? {
        return Ok(rep
            .not_met(format!("not simple: {reason}"))
            .with_evidence(w)
            .timed(start));
    }
    let mut rep = rep;
    let lat = Lattice::new(l, cfg, &mut rep.stats)?;
    if let Some(s) = lat.proper_without(l, Property::Nilpotent)? {
        return Ok(rep
            .not_met("a proper subalgebra is not nilpotent")
            .with_evidence(Witness::new("non-nilpotent proper subalgebra").subspaces([s]))
            .timed(start));
    }
    let bad = pairwise_intersections(&lat.maximal).find(|(_, _, m)| !m.is_zero());
    rep.check("maximal_intersections_zero", bad.is_none(), || {
        let (i, j, m) = bad.clone().expect("failure");
        Witness::new("two maximal subalgebras and their intersection").subspaces([
            lat.maximal[i].space().clone(),
            lat.maximal[j].space().clone(),
            m,
        ])
    });
    let nil = ad_nilpotent_in(l, &l.full_space(), cfg)?;
    rep.check("no_ad_nilpotent_elements", nil.is_empty(), || {
        Witness::new("ad-nilpotent element").vectors(nil.first().cloned())
    });
    check_two_generated(&mut rep, l, &exhaustive(cfg), "two_generated")?;
    Ok(rep.timed(start))
}

/// Simple `L` with every proper subalgebra triangulable on `L`.
pub fn verify_simple_triangulable(l: &LieAlgebra, cfg: &ScanConfig) -> Result<HarnessReport> {
    let start = Instant::now();
    let mut rep = HarnessReport::new("simple_triangulable");
    if let Err((reason, w)) = simple_or_reason(l, cfg)? {
        return Ok(rep
            .not_met(format!("not simple: {reason}"))
            .with_evidence(w)
            .timed(start));
    }
    let lat = Lattice::new(l, cfg, &mut rep.stats)?;
    if let Some(s) = lat.proper_without(l, Property::TriangulableOnL)? {
        return Ok(rep
            .not_met("a proper subalgebra is not triangulable on L")
            .with_evidence(Witness::new("non-triangulable proper subalgebra").subspaces([s]))
            .timed(start));
    }
    check_simple_triangulable_conclusions(&mut rep, l, &lat, cfg)?;
    Ok(rep.timed(start))
}

fn check_simple_triangulable_conclusions(
    rep: &mut HarnessReport,
    l: &LieAlgebra,
    lat: &Lattice,
    cfg: &ScanConfig,
) -> Result<()> {
    let mut nil_subalgebras: Vec<&Subalgebra> = Vec::new();
    for s in &lat.all {
        if triang::is_nil_on(l, s.space())?.is_nil() {
            nil_subalgebras.push(s);
        }
    }
    let is_maximal_nil = |k: &Subspace| {
        !nil_subalgebras
            .iter()
            .any(|t| t.dim() > k.dim() && t.space().contains_subspace(k))
    };

    // (1) each maximal M: abelian without ad-nilpotent elements, or nil(M) ≠ 0 maximal nil
    let mut bad1 = None;
    for m in &lat.maximal {
        let nil_m = triang::nil_ideal(l, m.space(), &cfg.caps)?.into_space();
        let ok = if nil_m.is_zero() {
            l.restrict(m.space())?.is_abelian() && ad_nilpotent_in(l, m.space(), cfg)?.is_empty()
        } else {
            is_maximal_nil(&nil_m)
        };
        if !ok {
            bad1 = Some((m.space().clone(), nil_m));
            break;
        }
    }
    rep.check("maximal_abelian_or_nil_maximal", bad1.is_none(), || {
        let (m, n) = bad1.clone().expect("failure");
        Witness::new("maximal subalgebra and its nil ideal").subspaces([m, n])
    });

    // (2) maximal nil K ≠ 0 has a maximal normalizer
    let full = l.full_space();
    let mut bad2 = None;
    for k in nil_subalgebras
        .iter()
        .filter(|k| k.dim() > 0 && is_maximal_nil(k.space()))
    {
        let nk = l.normalizer(&full, k.space())?;
        if !lat.maximal.iter().any(|m| *m.space() == nk) {
            bad2 = Some((k.space().clone(), nk));
            break;
        }
    }
    rep.check("nil_normalizer_maximal", bad2.is_none(), || {
        let (k, n) = bad2.clone().expect("failure");
        Witness::new("maximal nil subalgebra and its normalizer").subspaces([k, n])
    });

    // (3) pairwise intersections have no ad-nilpotent elements, hence are abelian
    let mut bad3 = None;
    for (i, j, m) in pairwise_intersections(&lat.maximal) {
        let nil = ad_nilpotent_in(l, &m, cfg)?;
        if let Some(x) = nil.first() {
            bad3 = Some((i, j, Some(x.clone())));
            break;
        }
        if !l.restrict(&m)?.is_abelian() {
            bad3 = Some((i, j, None));
            break;
        }
    }
    rep.check("intersections_no_ad_nilpotent", bad3.is_none(), || {
        let (i, j, x) = bad3.clone().expect("failure");
        Witness::new("maximal subalgebras whose intersection has an ad-nilpotent element or is nonabelian")
            .vectors(x)
            .subspaces([lat.maximal[i].space().clone(), lat.maximal[j].space().clone()])
    });

    // (4)
    check_two_generated(rep, l, &exhaustive(cfg), "two_generated")
}

/// (1) solvable with every two-generated proper subalgebra triangulable on
/// `L` implies `L` triangulable; (2) every proper subalgebra triangulable on
/// `L` but not `L` implies `L` two-generated and `L/φ(L)` simple.
pub fn verify_thm47(l: &LieAlgebra, cfg: &ScanConfig) -> Result<HarnessReport> {
    let start = Instant::now();
    let mut rep = HarnessReport::new("triangulable_two_generated");
    let scan = enumerate::twogen_subalgebra_scan(l, Property::TriangulableOnL, cfg)?;
    scan_stats(&scan, &mut rep.stats);
    if let ScanOutcome::Witness { x, y, subalgebra } = scan {
        return Ok(rep
            .not_met("a two-generated proper subalgebra is not triangulable on L")
            .with_evidence(
                Witness::new("generators and subalgebra")
                    .vectors([x, y])
                    .subspaces([subalgebra]),
            )
            .timed(start));
    }
    if matches!(scan, ScanOutcome::NoWitnessFound { .. }) {
        rep.hypothesis = Hypothesis::Heuristic;
    }
    let triangulable = Property::TriangulableOnL.decide(l)?;
    if props::is_solvable(l) {
        rep.reason = "solvable; two-generated proper subalgebras triangulable".into();
        rep.check("triangulable", triangulable, || {
            Witness::new("solvable L is not triangulable on itself").subspaces([l.derived_algebra()])
        });
        return Ok(rep.timed(start));
    }
    let lat = Lattice::new(l, cfg, &mut rep.stats)?;
    if let Some(s) = lat.proper_without(l, Property::TriangulableOnL)? {
        return Ok(rep
            .not_met("not solvable and a proper subalgebra is not triangulable on L")
            .with_evidence(Witness::new("non-triangulable proper subalgebra").subspaces([s]))
            .timed(start));
    }
    if triangulable {
        return Ok(rep.not_met("L is triangulable on itself").timed(start));
    }
    rep.hypothesis = Hypothesis::Met;
    rep.reason = "proper subalgebras triangulable on L, L not".into();
    check_two_generated(&mut rep, l, &exhaustive(cfg), "two_generated")?;
    let fr = props::frattini_from_maximal(l, &lat.maximal);
    let (quot, _) = l.quotient(&fr.ideal)?;
    let simple = props::is_simple(&quot, &cfg.caps)?;
    rep.check("quotient_by_phi_simple", simple, || {
        Witness::new("L/phi(L) is not simple").subspaces([fr.ideal.clone()])
    });
    Ok(rep.timed(start))
}

/// Solvable, not strongly solvable, every two-generated proper subalgebra
/// strongly solvable implies every proper subalgebra strongly solvable and
/// `L` two-generated.
pub fn verify_thm33(l: &LieAlgebra, cfg: &ScanConfig) -> Result<HarnessReport> {
    let start = Instant::now();
    let mut rep = HarnessReport::new("strongly_solvable_two_generated");
    if !props::is_solvable(l) {
        return Ok(rep.not_met("not solvable").timed(start));
    }
    if props::is_strongly_solvable(l) {
        return Ok(rep.not_met("strongly solvable").timed(start));
    }
    let scan = enumerate::twogen_subalgebra_scan(l, Property::StronglySolvable, cfg)?;
    scan_stats(&scan, &mut rep.stats);
    match scan {
        ScanOutcome::Witness { x, y, subalgebra } => {
            return Ok(rep
                .not_met("a two-generated proper subalgebra is not strongly solvable")
                .with_evidence(
                    Witness::new("generators and subalgebra")
                        .vectors([x, y])
                        .subspaces([subalgebra]),
                )
                .timed(start));
        }
        ScanOutcome::NoWitnessFound { .. } => rep.hypothesis = Hypothesis::Heuristic,
        ScanOutcome::AllHold { .. } => {}
    }
    if l.field().is_finite() {
        let lat = Lattice::new(l, cfg, &mut rep.stats)?;
        let bad = lat.proper_without(l, Property::StronglySolvable)?;
        rep.check("proper_subalgebras_strongly_solvable", bad.is_none(), || {
            Witness::new("proper subalgebra that is not strongly solvable").subspaces(bad.clone())
        });
    } else {
        rep.skip("proper_subalgebras_strongly_solvable");
    }
    check_two_generated(&mut rep, l, cfg, "two_generated")?;
    Ok(rep.timed(start))
}

/// Solvable `L`: every two-generated proper subalgebra supersolvable but `L`
/// not implies every proper subalgebra supersolvable (so `L` is minimal
/// non-supersolvable) and `L` two-generated.
pub fn verify_thm35(l: &LieAlgebra, cfg: &ScanConfig) -> Result<HarnessReport> {
    let start = Instant::now();
    let mut rep = HarnessReport::new("supersolvable_two_generated");
    if !props::is_solvable(l) {
        return Ok(rep.not_met("not solvable").timed(start));
    }
    if props::is_supersolvable(l) {
        return Ok(rep.not_met("supersolvable").timed(start));
    }
    let scan = enumerate::twogen_subalgebra_scan(l, Property::Supersolvable, cfg)?;
    scan_stats(&scan, &mut rep.stats);
    match scan {
        ScanOutcome::Witness { x, y, subalgebra } => {
            return Ok(rep
                .not_met("a two-generated proper subalgebra is not supersolvable")
                .with_evidence(
                    Witness::new("generators and subalgebra")
                        .vectors([x, y])
                        .subspaces([subalgebra]),
                )
                .timed(start));
        }
        ScanOutcome::NoWitnessFound { .. } => rep.hypothesis = Hypothesis::Heuristic,
        ScanOutcome::AllHold { .. } => {}
    }
    if l.field().is_finite() {
        let lat = Lattice::new(l, cfg, &mut rep.stats)?;
        let bad = lat.proper_without(l, Property::Supersolvable)?;
        rep.check("proper_subalgebras_supersolvable", bad.is_none(), || {
            Witness::new("proper subalgebra that is not supersolvable").subspaces(bad.clone())
        });
    } else {
        rep.skip("proper_subalgebras_supersolvable");
    }
    check_two_generated(&mut rep, l, cfg, "two_generated")?;
    Ok(rep.timed(start))
}

/// Does `b` have the type I (`M ∔ Fx`, `M` an abelian minimal ideal) or
/// type II (Heisenberg) shape?
fn complement_shape(b: &LieAlgebra, cfg: &ScanConfig) -> Result<Option<&'static str>> {
    let d = b.derived_algebra();
    if b.dim() == 3 && d.dim() == 1 && b.center().contains_subspace(&d) {
        return Ok(Some("II"));
    }
    for m in props::minimal_ideals(b, &cfg.caps)? {
        if m.dim() + 1 == b.dim() && b.restrict(m.space())?.is_abelian() {
            return Ok(Some("I"));
        }
    }
    Ok(None)
}

/// Solvable, φ-free, minimal non-strongly-solvable implies characteristic
/// `p > 0`, `L = A ∔ B` with `A` the unique minimal ideal, `dim A ≥ 2`,
/// `A² = 0`, `B` of type I or II; and `L` is two-generated.
pub fn verify_thm31_shape(l: &LieAlgebra, cfg: &ScanConfig) -> Result<HarnessReport> {
    let start = Instant::now();
    let mut rep = HarnessReport::new("minimal_non_strongly_solvable_shape");
    if !props::is_solvable(l) {
        return Ok(rep.not_met("not solvable").timed(start));
    }
    if props::is_strongly_solvable(l) {
        return Ok(rep.not_met("strongly solvable").timed(start));
    }
    let lat = Lattice::new(l, cfg, &mut rep.stats)?;
    if let Some(s) = lat.proper_without(l, Property::StronglySolvable)? {
        return Ok(rep
            .not_met("a proper subalgebra is not strongly solvable")
            .with_evidence(Witness::new("proper subalgebra").subspaces([s]))
            .timed(start));
    }
    let fr = props::frattini_from_maximal(l, &lat.maximal);
    if !fr.phi_free {
        return Ok(rep
            .not_met("not phi-free")
            .with_evidence(Witness::new("Frattini ideal").subspaces([fr.ideal]))
            .timed(start));
    }
    let p = l.field().characteristic();
    rep.check("positive_characteristic", p > 0, Witness::default);
    let minimal = props::minimal_ideals(l, &cfg.caps)?;
    rep.check("unique_minimal_ideal", minimal.len() == 1, || {
        Witness::new("minimal ideals").subspaces(minimal.iter().map(|m| m.space().clone()))
    });
    let Some(a) = minimal.first().map(|m| m.space().clone()) else {
        rep.skip("dim_a_at_least_2");
        rep.skip("a_abelian");
        rep.skip("complement_shape");
        check_two_generated(&mut rep, l, cfg, "two_generated")?;
        return Ok(rep.timed(start));
    };
    rep.check("dim_a_at_least_2", a.dim() >= 2, || {
        Witness::new("A").subspaces([a.clone()])
    });
    rep.check("a_abelian", l.bracket_spaces(&a, &a).is_zero(), || {
        Witness::new("A").subspaces([a.clone()])
    });
    let mut shape = None;
    for b in lat.all.iter().filter(|b| b.dim() + a.dim() == l.dim()) {
        if !b.space().intersect(&a)?.is_zero() {
            continue;
        }
        if let Some(t) = complement_shape(&l.restrict(b.space())?, cfg)? {
            shape = Some((t, b.space().clone()));
            break;
        }
    }
    rep.check("complement_shape", shape.is_some(), || {
        Witness::new("no complement of type I or II").subspaces([a.clone()])
    });
    if let Some((t, _)) = &shape {
        rep.reason = format!("type {t}");
    }
    check_two_generated(&mut rep, l, cfg, "two_generated")?;
    Ok(rep.timed(start))
}

/// `L` is two-generated iff `L/φ(L)` is.
pub fn verify_lemma21(l: &LieAlgebra, cfg: &ScanConfig) -> Result<HarnessReport> {
    let start = Instant::now();
    let mut rep = HarnessReport::new("two_generated_mod_phi");
    let cfg = exhaustive(cfg);
    let fr = props::frattini(l, &cfg)?;
    let (quot, _) = l.quotient(&fr.ideal)?;
    let a = enumerate::is_two_generated(l, &cfg)?.is_generated();
    let b = enumerate::is_two_generated(&quot, &cfg)?.is_generated();
    rep.reason = format!("two_generated={a} quotient_two_generated={b}");
    rep.check("equivalence", a == b, || {
        Witness::new("phi(L)").subspaces([fr.ideal.clone()])
    });
    Ok(rep.timed(start))
}

/// Saturation: `P(L/φ(L)) = P(L)` for solvable, strongly solvable,
/// supersolvable and nilpotent; and `φ(L/φ(L)) = 0`.
pub fn verify_saturation(l: &LieAlgebra, cfg: &ScanConfig) -> Result<HarnessReport> {
    let start = Instant::now();
    let mut rep = HarnessReport::new("saturation");
    let fr = props::frattini(l, &exhaustive(cfg))?;
    let (quot, _) = l.quotient(&fr.ideal)?;
    for p in [
        Property::Solvable,
        Property::StronglySolvable,
        Property::Supersolvable,
        Property::Nilpotent,
    ] {
        let ok = p.decide(l)? == p.decide(&quot)?;
        rep.check(p.name(), ok, || Witness::new("phi(L)").subspaces([fr.ideal.clone()]));
    }
    assert!(fr.subalgebra.contains_subspace(&fr.ideal));
    let again = props::frattini(&quot, &exhaustive(cfg))?;
    rep.check("quotient_phi_free", again.phi_free, || {
        Witness::new("phi(L/phi(L)) in quotient coordinates").subspaces([again.ideal.clone()])
    });
    Ok(rep.timed(start))
}

/// For nil subalgebras `S, T` with `[S,T] ⊆ T`, `S + T` is nil on `L`.
pub fn verify_lemma41(l: &LieAlgebra, cfg: &ScanConfig) -> Result<HarnessReport> {
    let start = Instant::now();
    let mut rep = HarnessReport::new("nil_sum");
    let lat = Lattice::new(l, cfg, &mut rep.stats)?;
    let mut nil: Vec<&Subspace> = Vec::new();
    for s in &lat.all {
        if s.dim() > 0 && triang::is_nil_on(l, s.space())?.is_nil() {
            nil.push(s.space());
        }
    }
    let pairs = (nil.len() as u128).pow(2);
    let sampled = pairs > cfg.caps.max_pairs;
    if sampled && cfg.mode == ScanMode::Exhaustive {
        return Err(crate::error::Error::CapExceeded {
            what: "nil subalgebra pairs".into(),
            estimate: pairs,
            cap: cfg.caps.max_pairs,
        });
    }
    let candidates: Box<dyn Iterator<Item = (&Subspace, &Subspace)>> = if sampled {
        // too many pairs: check seeded random ones, which proves nothing
        rep.hypothesis = Hypothesis::Heuristic;
        rep.seed = Some(cfg.seed);
        Box::new((0..cfg.samples).map(|i| {
            let mut rng = cfg.rng_for(i);
            (nil[rng.gen_range(0..nil.len())], nil[rng.gen_range(0..nil.len())])
        }))
    } else {
        Box::new(nil.iter().flat_map(|s| nil.iter().map(move |t| (*s, *t))))
    };
    let mut bad = None;
    for (s, t) in candidates {
        if !t.contains_subspace(&l.bracket_spaces(s, t)) {
            continue;
        }
        rep.stats.pairs += 1;
        let sum = s.sum(t)?;
        if !triang::is_nil_on(l, &sum)?.is_nil() {
            bad = Some((s.clone(), t.clone()));
            break;
        }
    }
    rep.check("sum_nil", bad.is_none(), || {
        let (s, t) = bad.clone().expect("failure");
        Witness::new("S and T").subspaces([s, t])
    });
    Ok(rep.timed(start))
}

/// For triangulable `S`, `nil(S)` is exactly the set of ad-nilpotent
/// elements of `S`, and that set is a subspace.
pub fn verify_prop42(l: &LieAlgebra, cfg: &ScanConfig) -> Result<HarnessReport> {
    let start = Instant::now();
    let mut rep = HarnessReport::new("nil_is_nilpotent_set");
    let lat = Lattice::new(l, cfg, &mut rep.stats)?;
    let q = l.field().size().expect("finite field");
    let mut bad = None;
    for s in &lat.all {
        if !triang::is_triangulable_on(l, s.space())?.triangulable {
            continue;
        }
        let exact = triang::nil_exact(l, s.space(), &cfg.caps)?;
        let elems = ad_nilpotent_in(l, s.space(), cfg)?;
        let span = Subspace::span(l.field(), l.dim(), &elems);
        let is_subspace = elems.len() as u128 == enumerate::projective_count(span.dim(), q);
        if span != exact || !is_subspace {
            bad = Some((s.space().clone(), exact));
            break;
        }
    }
    rep.check("nil_equals_nilpotent_elements", bad.is_none(), || {
        let (s, n) = bad.clone().expect("failure");
        Witness::new("S and nil(S)").subspaces([s, n])
    });
    Ok(rep.timed(start))
}

/// (1) `nil(S/φ(L)) = nil(S)/φ(L)` for every subalgebra `S ⊇ φ(L)`;
/// (2) every two-generated proper subalgebra triangulable on `L` implies the
/// same in `L/φ(L)`.
pub fn verify_lemma46(l: &LieAlgebra, cfg: &ScanConfig) -> Result<HarnessReport> {
    let start = Instant::now();
    let mut rep = HarnessReport::new("nil_mod_phi");
    let lat = Lattice::new(l, cfg, &mut rep.stats)?;
    let fr = props::frattini_from_maximal(l, &lat.maximal);
    let (quot, map) = l.quotient(&fr.ideal)?;
    let mut bad = None;
    for s in lat.all.iter().filter(|s| s.space().contains_subspace(&fr.ideal)) {
        if !check_lemma46_for(l, &quot, &map, s.space(), cfg)? {
            bad = Some(s.space().clone());
            break;
        }
    }
    rep.check("nil_commutes_with_quotient", bad.is_none(), || {
        Witness::new("S").subspaces(bad.clone())
    });
    let ecfg = exhaustive(cfg);
    if enumerate::twogen_subalgebra_scan(l, Property::TriangulableOnL, &ecfg)?.all_hold() {
        let q = enumerate::twogen_subalgebra_scan(&quot, Property::TriangulableOnL, &ecfg)?;
        rep.check("triangulable_pairs_pass_to_quotient", q.all_hold(), || match &q {
            ScanOutcome::Witness { x, y, subalgebra } => Witness::new("quotient generators and subalgebra")
                .vectors([x.clone(), y.clone()])
                .subspaces([subalgebra.clone()]),
            _ => Witness::default(),
        });
    } else {
        rep.skip("triangulable_pairs_pass_to_quotient");
    }
    Ok(rep.timed(start))
}

/// Lemma 4.6(1) for a single `S` (which must contain `φ(L)`).
pub fn verify_lemma46_for(l: &LieAlgebra, s: &Subspace, cfg: &ScanConfig) -> Result<HarnessReport> {
    let start = Instant::now();
    let mut rep = HarnessReport::new("nil_mod_phi");
    let fr = props::frattini(l, &exhaustive(cfg))?;
    if !l.is_subalgebra(s) {
        return Ok(rep.not_met("S is not a subalgebra").timed(start));
    }
    if !s.contains_subspace(&fr.ideal) {
        return Ok(rep
            .not_met("S does not contain phi(L)")
            .with_evidence(Witness::new("phi(L)").subspaces([fr.ideal]))
            .timed(start));
    }
    let (quot, map) = l.quotient(&fr.ideal)?;
    let ok = check_lemma46_for(l, &quot, &map, s, cfg)?;
    rep.check("nil_commutes_with_quotient", ok, || {
        Witness::new("S").subspaces([s.clone()])
    });
    Ok(rep.timed(start))
}

fn check_lemma46_for(
    l: &LieAlgebra,
    quot: &LieAlgebra,
    map: &crate::algebra::QuotientMap,
    s: &Subspace,
    cfg: &ScanConfig,
) -> Result<bool> {
    let nil_s = triang::nil_ideal(l, s, &cfg.caps)?.into_space();
    let nil_bar = triang::nil_ideal(quot, &map.project_space(s), &cfg.caps)?.into_space();
    Ok(map.project_space(&nil_s) == nil_bar)
}

/// Conjecture: a simple algebra whose proper subalgebras are all solvable is
/// two-generated.
pub fn verify_conjecture(l: &LieAlgebra, cfg: &ScanConfig) -> Result<HarnessReport> {
    let start = Instant::now();
    let mut rep = HarnessReport::new("simple_minimal_non_solvable");
    if l.dim() <= 2 {
        rep.hypothesis = Hypothesis::Vacuous;
        rep.reason = "dimension at most 2".into();
        return Ok(rep.timed(start));
    }
    if let Err((reason, w)) = simple_or_reason(l, cfg)? {
        return Ok(rep
            .not_met(format!("not simple: {reason}"))
            .with_evidence(w)
            .timed(start));
    }
    let lat = Lattice::new(l, cfg, &mut rep.stats)?;
    // every proper subalgebra lies in a maximal one
    for m in &lat.maximal {
        if !Property::Solvable.holds_on(l, m.space())? {
            return Ok(rep
                .not_met("a maximal subalgebra is not solvable")
                .with_evidence(Witness::new("non-solvable maximal subalgebra").subspaces([m.space().clone()]))
                .timed(start));
        }
    }
    check_two_generated(&mut rep, l, &exhaustive(cfg), "two_generated")?;
    Ok(rep.timed(start))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Suite {
    Star,
    Gein,
    T31,
    T33,
    T35,
    T44,
    T47,
    Lemmas,
}

impl std::str::FromStr for Suite {
    type Err = crate::error::Error;

    fn from_str(s: &str) -> Result<Self> {
        Ok(match s {
            "star" => Suite::Star,
            "gein" => Suite::Gein,
            "t31" => Suite::T31,
            "t33" => Suite::T33,
            "t35" => Suite::T35,
            "t44" => Suite::T44,
            "t47" => Suite::T47,
            "lemmas" => Suite::Lemmas,
            _ => {
                return Err(crate::error::Error::BadParameter(format!(
                    "unknown suite `{s}` (star, gein, t31, t33, t35, t44, t47, lemmas)"
                )))
            }
        })
    }
}

/// Properties checked by the condition (*) suite.
pub const STAR_PROPERTIES: [Property; 8] = [
    Property::Abelian,
    Property::Nilpotent,
    Property::QuasiAbelian,
    Property::Solvable,
    Property::StronglySolvable,
    Property::Supersolvable,
    Property::SimpleOr1Dim,
    Property::TriangulableOnL,
];

pub fn run_suite(l: &LieAlgebra, suite: Suite, cfg: &ScanConfig) -> Result<Vec<HarnessReport>> {
    Ok(match suite {
        Suite::Star => STAR_PROPERTIES
            .iter()
            .map(|&p| verify_condition_star(l, p, cfg))
            .collect::<Result<_>>()?,
        Suite::Gein => vec![verify_gein(l, cfg)?],
        Suite::T31 => vec![verify_thm31_shape(l, cfg)?],
        Suite::T33 => vec![verify_thm33(l, cfg)?],
        Suite::T35 => vec![verify_thm35(l, cfg)?],
        Suite::T44 => vec![verify_simple_triangulable(l, cfg)?],
        Suite::T47 => vec![verify_thm47(l, cfg)?],
        Suite::Lemmas => vec![
            verify_lemma21(l, cfg)?,
            verify_lemma41(l, cfg)?,
            verify_prop42(l, cfg)?,
            verify_lemma46(l, cfg)?,
            verify_saturation(l, cfg)?,
        ],
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog;
    use crate::field::Field;

    fn cfg() -> ScanConfig {
        ScanConfig::default()
    }

    #[test]
    fn gein_on_heisenberg_and_cross_product() {
        let h = verify_gein(&catalog::heisenberg(Field::Prime(3)), &cfg()).unwrap();
        assert_eq!(h.hypothesis, Hypothesis::NotMet);
        assert!(h.reason.starts_with("not simple"));
        let c = verify_gein(&catalog::cross_product(Field::Prime(7)), &cfg()).unwrap();
        assert_eq!(c.hypothesis, Hypothesis::NotMet, "{c:?}");
        assert!(c.evidence.unwrap().subspaces[0].dim() == 2);
    }

    #[test]
    fn simple_triangulable_on_sl2_gf5() {
        let r = verify_simple_triangulable(&catalog::sl2(Field::Prime(5)), &cfg()).unwrap();
        assert_eq!(r.hypothesis, Hypothesis::Met);
        assert!(r.held(), "{r:?}");
        assert_eq!(r.conclusions.len(), 4);
    }

    #[test]
    fn witt_has_non_triangulable_proper_subalgebra() {
        let r = verify_simple_triangulable(&catalog::witt(5).unwrap(), &cfg()).unwrap();
        assert_eq!(r.hypothesis, Hypothesis::NotMet, "{r:?}");
    }

    #[test]
    fn thm47_on_sl2_gf5() {
        let r = verify_thm47(&catalog::sl2(Field::Prime(5)), &cfg()).unwrap();
        assert_eq!(r.hypothesis, Hypothesis::Met);
        assert!(r.held(), "{r:?}");
    }

    #[test]
    fn star_on_heisenberg() {
        let l = catalog::heisenberg(Field::Prime(2));
        for p in STAR_PROPERTIES {
            let r = verify_condition_star(&l, p, &cfg()).unwrap();
            assert!(!r.failed(), "{p}: {r:?}");
        }
    }

    #[test]
    fn thm31_shape_on_builders() {
        let f = Field::Prime(3);
        let ii = verify_thm31_shape(&catalog::thm31_type_ii(3, f, false).unwrap(), &cfg()).unwrap();
        assert!(!ii.failed(), "{ii:?}");
        let zero = verify_thm31_shape(&catalog::thm31_type_ii(3, f, true).unwrap(), &cfg()).unwrap();
        assert_eq!(zero.hypothesis, Hypothesis::NotMet);
    }

    #[test]
    fn lemmas_on_small_catalog() {
        for l in [
            catalog::heisenberg(Field::Prime(3)),
            catalog::sl2(Field::Prime(5)),
            catalog::almost_abelian(3, Field::Prime(2)).unwrap(),
        ] {
            for r in run_suite(&l, Suite::Lemmas, &cfg()).unwrap() {
                assert!(r.held(), "{r:?}");
            }
        }
    }

    #[test]
    fn record_lists_conclusions() {
        let r = verify_lemma21(&catalog::heisenberg(Field::Prime(3)), &cfg()).unwrap();
        let line = r.to_record().render();
        assert!(line.starts_with("record=harness theorem=two_generated_mod_phi hypothesis=met conclusion=held"));
        assert!(line.contains("equivalence=held"));
    }
}
