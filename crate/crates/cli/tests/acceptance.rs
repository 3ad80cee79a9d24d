//! Acceptance suite: one PASS/FAIL line per criterion, nonzero exit on any
//! failure. Runs without the libtest harness so the lines always print.

use std::fs;
use std::path::{Path, PathBuf};
use std::process::Command;
use std::time::{Duration, Instant};

use liestruct::enumerate::{
    all_vectors_of, enumerate_subalgebras, is_two_generated, maximal_subalgebras, twogen_subalgebra_scan, ScanOutcome,
    SubspacesOfDim, TwoGenVerdict,
};
use liestruct::harness::{self, Conclusion, HarnessReport, Hypothesis, Suite};
use liestruct::props::{self, SeriesKind};
use liestruct::report::{parse_report, Record};
use liestruct::{catalog, format, hunt, triang, Error, Field, LieAlgebra, Property, ScanConfig};

const CORPUS_SEED: u64 = 20_240_601;

type Outcome = Result<String, String>;
type Criterion<'a> = (&'static str, Box<dyn Fn() -> Outcome + 'a>);

fn corpus() -> Vec<(String, LieAlgebra)> {
    let mut out = Vec::new();
    for p in [2, 3] {
        for (i, source, l) in hunt::corpus(Field::Prime(p), 4, 200, CORPUS_SEED).unwrap() {
            out.push((format!("GF({p})#{i}:{source}"), l));
        }
    }
    out
}

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn within(start: Instant, limit: Duration) -> Result<(), String> {
    ensure(start.elapsed() <= limit, || {
        format!("took {:?}, limit {limit:?}", start.elapsed())
    })
}

fn no_failures(label: &str, reports: &[HarnessReport]) -> Result<(), String> {
    for r in reports {
        if let Some((name, w)) = r.failures().next() {
            return Err(format!("{label}: {} failed {name}: {}", r.theorem, w.note));
        }
    }
    Ok(())
}

/// Rebuild `l` with `delta` added to the coefficient of `e_k` in `[e_i,e_j]`.
fn mutate(l: &LieAlgebra, i: usize, j: usize, k: usize) -> liestruct::Result<LieAlgebra> {
    let f = l.field();
    let mut brackets: Vec<((usize, usize), Vec<_>)> =
        l.nonzero_brackets().map(|(a, b, v)| ((a, b), v.clone())).collect();
    match brackets.iter_mut().find(|(ab, _)| *ab == (i, j)) {
        Some((_, v)) => v[k] = &v[k] + &f.one(),
        None => {
            let mut v = l.zero_vector();
            v[k] = f.one();
            brackets.push(((i, j), v));
        }
    }
    LieAlgebra::new(f, l.dim(), brackets, Some(l.names().to_vec()))
}

fn criterion_1() -> Outcome {
    let start = Instant::now();
    let entries = catalog::fixtures();
    let mut mutated = 0;
    for e in &entries {
        let l = &e.algebra;
        let label = e.label();
        let back = format::parse(&format::serialize(l)).map_err(|err| format!("{label}: {err}"))?;
        ensure(&back == l, || format!("{label}: round trip changed the algebra"))?;
        let n = l.dim();
        let triples = (0..n).flat_map(|i| (i + 1..n).flat_map(move |j| (0..n).map(move |k| (i, j, k))));
        let mut rejected = None;
        for (i, j, k) in triples {
            if let Err(err @ Error::JacobiViolation { .. }) = mutate(l, i, j, k) {
                rejected = Some(err);
                break;
            }
        }
        match rejected {
            Some(Error::JacobiViolation { triple, .. }) if !triple.is_empty() => mutated += 1,
            _ => return Err(format!("{label}: no single-constant mutation was rejected")),
        }
    }
    within(start, Duration::from_secs(5))?;
    Ok(format!(
        "{} entries validate; {mutated} mutants rejected with a named triple",
        entries.len()
    ))
}

fn engel(l: &LieAlgebra) -> bool {
    all_vectors_of(&l.full_space())
        .iter()
        .all(|x| l.adjoint(x).is_nilpotent())
}

fn criterion_2(corpus: &[(String, LieAlgebra)]) -> Outcome {
    let start = Instant::now();
    let mut flags = 0;
    for (label, l) in corpus {
        let literal = SubspacesOfDim::new(l.field(), l.dim(), 2).all(|s| l.is_subalgebra(&s));
        ensure(props::quasi_abelian_check(l).holds == literal, || {
            format!("{label}: quasi_abelian mismatch")
        })?;
        ensure(props::is_nilpotent(l) == engel(l), || {
            format!("{label}: nilpotency mismatch")
        })?;
        if let Some(flag) = props::supersolvable_flag(l) {
            flags += 1;
            let genuine = flag.kind == SeriesKind::SupersolvableFlag
                && flag
                    .terms
                    .iter()
                    .enumerate()
                    .all(|(k, t)| t.dim() == k && l.is_ideal(t))
                && flag.terms.windows(2).all(|w| w[1].contains_subspace(&w[0]))
                && flag.terms.len() == l.dim() + 1;
            ensure(genuine, || format!("{label}: supersolvable flag is not an ideal flag"))?;
        }
    }
    within(start, Duration::from_secs(120))?;
    Ok(format!(
        "{} algebras, 0 mismatches, {flags} flags verified",
        corpus.len()
    ))
}

fn criterion_3(corpus: &[(String, LieAlgebra)]) -> Outcome {
    let cfg = ScanConfig::default();
    let mut met = 0;
    for (label, l) in corpus {
        for p in [Property::Nilpotent, Property::Abelian, Property::QuasiAbelian] {
            let r = harness::verify_condition_star(l, p, &cfg).map_err(|e| format!("{label}: {e}"))?;
            met += usize::from(r.hypothesis == Hypothesis::Met);
            no_failures(label, &[r])?;
        }
    }
    Ok(format!(
        "{} runs, {met} with hypothesis met, 0 failures",
        corpus.len() * 3
    ))
}

fn criterion_4() -> Outcome {
    let start = Instant::now();
    let f = Field::Prime(3);
    let l = catalog::ev_type_a(3, &f.one(), f).map_err(|e| e.to_string())?;
    ensure(props::is_solvable(&l), || "not solvable".into())?;
    ensure(!props::is_strongly_solvable(&l), || "strongly solvable".into())?;
    ensure(!props::is_supersolvable(&l), || "supersolvable".into())?;
    let cfg = ScanConfig::default();
    let mut notes = Vec::new();
    for p in [Property::StronglySolvable, Property::Supersolvable] {
        match twogen_subalgebra_scan(&l, p, &cfg).map_err(|e| e.to_string())? {
            ScanOutcome::AllHold { pairs, .. } => match is_two_generated(&l, &cfg).map_err(|e| e.to_string())? {
                TwoGenVerdict::Generated(x, y) => {
                    ensure(
                        l.generated_subalgebra(&[x.clone(), y.clone()]).space().is_full(),
                        || format!("{}: pair does not regenerate L", p.name()),
                    )?;
                    notes.push(format!(
                        "{}: all {pairs} pairs hold, L = <{},{}>",
                        p.name(),
                        liestruct::matrix::vector::render(&x),
                        liestruct::matrix::vector::render(&y)
                    ));
                }
                other => return Err(format!("{}: scan holds but L is {other:?}", p.name())),
            },
            ScanOutcome::Witness { subalgebra, .. } => {
                ensure(!p.holds_on(&l, &subalgebra).unwrap() && !subalgebra.is_full(), || {
                    format!("{}: bogus witness", p.name())
                })?;
                notes.push(format!(
                    "{}: hypothesis not met (witness dim {})",
                    p.name(),
                    subalgebra.dim()
                ));
            }
            ScanOutcome::NoWitnessFound { .. } => return Err("exhaustive scan returned a sampled outcome".into()),
        }
    }
    within(start, Duration::from_secs(300))?;
    Ok(notes.join("; "))
}

fn criterion_5() -> Outcome {
    let mut notes = Vec::new();
    for p in [5, 7] {
        let start = Instant::now();
        let r = harness::verify_simple_triangulable(&catalog::sl2(Field::Prime(p)), &ScanConfig::default())
            .map_err(|e| e.to_string())?;
        ensure(r.hypothesis == Hypothesis::Met, || {
            format!("GF({p}): hypothesis {}", r.hypothesis)
        })?;
        ensure(r.conclusions.len() == 4, || {
            format!("GF({p}): {} conclusions", r.conclusions.len())
        })?;
        ensure(r.conclusions.iter().all(|(_, c)| *c == Conclusion::Held), || {
            format!("GF({p}): {r:?}")
        })?;
        ensure(
            r.conclusions.iter().any(|(n, _)| n == "intersections_no_ad_nilpotent"),
            || format!("GF({p}): intersection conclusion missing"),
        )?;
        within(start, Duration::from_secs(600))?;
        notes.push(format!("sl2/GF({p}) 4/4 held over {} subalgebras", r.stats.subalgebras));
    }
    Ok(notes.join("; "))
}

fn criterion_6() -> Outcome {
    let l = catalog::sl2(Field::Prime(5));
    let cfg = ScanConfig::default();
    let err = |e: Error| e.to_string();
    ensure(
        !triang::is_triangulable_on(&l, &l.full_space())
            .map_err(err)?
            .triangulable,
        || "L is triangulable on itself".into(),
    )?;
    let all = enumerate_subalgebras(&l, &cfg).map_err(err)?;
    for s in all.iter().filter(|s| s.dim() < l.dim()) {
        ensure(
            triang::is_triangulable_on(&l, s.space()).map_err(err)?.triangulable,
            || format!("proper subalgebra {} not triangulable", s.space().render()),
        )?;
    }
    let r = harness::verify_thm47(&l, &cfg).map_err(err)?;
    ensure(r.hypothesis == Hypothesis::Met && r.held(), || format!("{r:?}"))?;
    let f = props::frattini_from_maximal(&l, &maximal_subalgebras(&l, &cfg).map_err(err)?);
    ensure(f.ideal.is_zero() && f.subalgebra.is_zero(), || {
        "phi(L) is not zero".into()
    })?;
    let names: Vec<&str> = r.conclusions.iter().map(|(n, _)| n.as_str()).collect();
    Ok(format!(
        "{} proper subalgebras triangulable; {} held; phi(L) = 0",
        all.len() - 1,
        names.join(", ")
    ))
}

fn criterion_7(corpus: &[(String, LieAlgebra)]) -> Outcome {
    let cfg = ScanConfig::default();
    let mut runs = 0;
    let mut sampled = Vec::new();
    let catalog_entries = catalog::fixtures()
        .into_iter()
        .filter(|e| e.algebra.field().is_finite())
        .map(|e| (e.label(), e.algebra));
    for (label, l) in corpus.iter().cloned().chain(catalog_entries) {
        let reports = match harness::run_suite(&l, Suite::Lemmas, &cfg) {
            Ok(r) => r,
            Err(Error::CapExceeded { .. }) => {
                sampled.push(label.clone());
                harness::run_suite(&l, Suite::Lemmas, &ScanConfig::sampled(20_000, 7)).map_err(|e| e.to_string())?
            }
            Err(e) => return Err(format!("{label}: {e}")),
        };
        runs += reports.len();
        no_failures(&label, &reports)?;
    }
    let mut note = format!("{runs} lemma runs, 0 failures");
    if !sampled.is_empty() {
        note.push_str(&format!(
            "; nil-pair scan sampled (over caps) for {}",
            sampled.join(",")
        ));
    }
    Ok(note)
}

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_liestruct"))
}

fn golden(name: &str) -> PathBuf {
    Path::new(env!("CARGO_MANIFEST_DIR")).join("tests/golden").join(name)
}

fn cli(args: &[&str]) -> Result<String, String> {
    let out = bin().args(args).output().map_err(|e| e.to_string())?;
    if !out.status.success() {
        return Err(format!("{args:?}: {}", String::from_utf8_lossy(&out.stderr).trim()));
    }
    String::from_utf8(out.stdout).map_err(|e| e.to_string())
}

fn criterion_8() -> Outcome {
    for name in ["heisenberg_gf3", "abelian_gf2_3"] {
        let input = golden(&format!("{name}.lie"));
        let got = cli(&["--no-timing", "frattini", input.to_str().unwrap()])?;
        let want = fs::read_to_string(golden(&format!("{name}.frattini"))).map_err(|e| e.to_string())?;
        ensure(got == want, || format!("{name}: output differs from golden file"))?;
    }
    let heis = parse_report(&fs::read_to_string(golden("heisenberg_gf3.frattini")).unwrap()).unwrap();
    let ab = parse_report(&fs::read_to_string(golden("abelian_gf2_3.frattini")).unwrap()).unwrap();
    ensure(
        heis[1].get("frattini_subalgebra") == Some("(0,0,1)") && heis[1].get("phi") == Some("(0,0,1)"),
        || "Heisenberg golden is not F = phi = Fc".into(),
    )?;
    ensure(ab[1].get("phi") == Some("0"), || "abelian golden has phi != 0".into())?;
    Ok("Heisenberg/GF(3): F = phi = Fc; abelian GF(2)^3: phi = 0; bit-exact".into())
}

/// A counterexample claim stands only if `check` finds the dumped algebra
/// simple and `twogen` proves it is not two-generated.
fn reverify(dump: &Path) -> Result<bool, String> {
    let p = dump.to_str().unwrap();
    let check = parse_report(&cli(&["--no-timing", "check", "--props", "simple", p])?).map_err(|e| e.to_string())?;
    let simple = check
        .iter()
        .any(|r| r.kind() == "check" && r.get("simple") == Some("true"));
    let twogen = parse_report(&cli(&["--no-timing", "twogen", p])?).map_err(|e| e.to_string())?;
    let generated = twogen
        .iter()
        .any(|r| r.kind() == "twogen" && r.get("verdict") == Some("generated"));
    Ok(simple && !generated)
}

fn criterion_9() -> Outcome {
    let dir = tempfile::tempdir().map_err(|e| e.to_string())?;
    let dumps = dir.path().join("dumps");
    let text = cli(&[
        "--no-timing",
        "hunt",
        "--field",
        "GF(2)",
        "--dim-max",
        "4",
        "--samples",
        "10000",
        "--seed",
        "42",
        "--dump-dir",
        dumps.to_str().unwrap(),
    ])?;
    let records = parse_report(&text).map_err(|e| e.to_string())?;
    let summary = records
        .iter()
        .find(|r| r.kind() == "hunt_summary")
        .ok_or("no summary record")?;
    let met: usize = summary.get("hypothesis_met").unwrap().parse().unwrap();
    let instances: Vec<&Record> = records.iter().filter(|r| r.kind() == "hunt_instance").collect();
    ensure(met >= 1 && instances.len() >= met, || {
        format!("{} records for {met} met instances", instances.len())
    })?;
    ensure(summary.get("counterexamples") == Some("0"), || {
        "hunt reports counterexamples".into()
    })?;
    // plant fake claims (a simple two-generated algebra and a solvable one)
    // among the real records; every claim must survive re-verification
    let mut claims: Vec<Record> = instances.iter().map(|r| (*r).clone()).collect();
    for (name, l) in [
        ("cross_product", catalog::cross_product(Field::Prime(2))),
        ("heisenberg", catalog::heisenberg(Field::Prime(2))),
    ] {
        let dump = dir.path().join(format!("fake_{name}.lie"));
        fs::write(&dump, format::serialize(&l)).unwrap();
        claims.push(
            Record::new("hunt_instance")
                .with("source", format!("planted:{name}"))
                .with("counterexample", true)
                .with("dump", dump.display()),
        );
    }
    let mut rejected = 0;
    for r in claims.iter().filter(|r| r.get("counterexample") == Some("true")) {
        let source = r.get("source").unwrap_or("-");
        let dump = r
            .get("dump")
            .ok_or_else(|| format!("claim from {source} has no dump"))?;
        ensure(!reverify(Path::new(dump))?, || {
            format!("claim from {source} re-verified as genuine")
        })?;
        ensure(source.starts_with("planted:"), || {
            format!("real counterexample claim from {source}")
        })?;
        rejected += 1;
    }
    ensure(rejected == 2, || format!("{rejected} planted fakes seen"))?;
    Ok(format!(
        "{} samples, {met} hypothesis-met instances recorded, 0 counterexamples; {rejected}/2 planted fakes rejected",
        summary.get("samples").unwrap()
    ))
}

fn criterion_10() -> Outcome {
    let dir = tempfile::tempdir().map_err(|e| e.to_string())?;
    let sl2 = dir.path().join("sl2.lie");
    let eva = dir.path().join("ev.lie");
    cli(&["catalog", "sl2", "--param", "field=GF(5)", "-o", sl2.to_str().unwrap()])?;
    cli(&[
        "catalog",
        "ev_type_a",
        "--param",
        "p=3",
        "--param",
        "alpha=1",
        "-o",
        eva.to_str().unwrap(),
    ])?;
    let heis = golden("heisenberg_gf3.lie");
    let mut commands: Vec<Vec<String>> = Vec::new();
    for f in [&sl2, &eva, &heis] {
        let f = f.to_str().unwrap().to_string();
        let n = if f == eva.to_str().unwrap() { 5 } else { 3 };
        let zero_vec = vec!["0"; n].join(",");
        let per_file: Vec<Vec<&str>> = vec![
            vec!["check"],
            vec!["series", "--kind", "derived"],
            vec!["series", "--kind", "lower-central"],
            vec!["series", "--kind", "supersolvable-flag"],
            vec!["frattini"],
            vec!["subalgebras"],
            vec!["subalgebras", "--maximal"],
            vec!["triang"],
            vec!["nil", "--subalgebra", &zero_vec],
            vec!["twogen"],
            vec!["twogen", "--samples", "200", "--seed", "3"],
            vec!["twogen", "--property", "supersolvable"],
            vec!["theorems", "--suite", "star"],
            vec!["theorems", "--suite", "t33"],
            vec!["theorems", "--suite", "t44"],
            vec!["theorems", "--suite", "t47"],
            vec!["theorems", "--suite", "lemmas"],
        ];
        for mut c in per_file
            .into_iter()
            .map(|c| c.into_iter().map(String::from).collect::<Vec<_>>())
        {
            c.push(f.clone());
            commands.push(c);
        }
    }
    commands.push(
        [
            "hunt",
            "--field",
            "GF(2)",
            "--dim-max",
            "4",
            "--samples",
            "10000",
            "--seed",
            "42",
        ]
        .map(String::from)
        .to_vec(),
    );
    commands.push(["catalog", "witt", "--param", "p=5"].map(String::from).to_vec());
    for c in &commands {
        let args: Vec<&str> = c.iter().map(String::as_str).collect();
        let run = |w: &str| cli(&[&["--no-timing", "--workers", w], &args[..]].concat());
        let a = run("1")?;
        ensure(a == run("1")?, || format!("{args:?}: repeated run differs"))?;
        ensure(a == run("4")?, || format!("{args:?}: 1 vs 4 workers differ"))?;
    }
    Ok(format!(
        "{} commands byte-identical across repeats and 1/4 workers",
        commands.len()
    ))
}

fn main() {
    let corpus = corpus();
    let criteria: Vec<Criterion> = vec![
        ("validation and mutation", Box::new(criterion_1)),
        ("deciders vs brute force", Box::new(|| criterion_2(&corpus))),
        (
            "condition (*) for nilpotent/abelian/quasi_abelian",
            Box::new(|| criterion_3(&corpus)),
        ),
        ("minimal non-strongly-solvable ev_type_a", Box::new(criterion_4)),
        ("simple triangulable sl2 over GF(5), GF(7)", Box::new(criterion_5)),
        ("minimal non-triangulable sl2 over GF(5)", Box::new(criterion_6)),
        ("lemma suite over corpus and catalog", Box::new(|| criterion_7(&corpus))),
        ("Frattini golden files", Box::new(criterion_8)),
        ("conjecture hunt smoke run", Box::new(criterion_9)),
        ("determinism", Box::new(criterion_10)),
    ];
    let mut failed = 0;
    for (i, (name, run)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let outcome = run();
        let secs = start.elapsed().as_secs_f64();
        match outcome {
            Ok(detail) => println!("criterion {:>2} PASS [{name}] {detail} ({secs:.2}s)", i + 1),
            Err(why) => {
                failed += 1;
                println!("criterion {:>2} FAIL [{name}] {why} ({secs:.2}s)", i + 1);
            }
        }
    }
    println!(
        "acceptance: {}/{} criteria passed",
        criteria.len() - failed,
        criteria.len()
    );
    if failed > 0 {
        std::process::exit(1);
    }
}
