use std::fs;
use std::io::{self, Write};
use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::time::Instant;

use clap::{Parser, Subcommand, ValueEnum};
use liestruct::catalog::{self, Params};
use liestruct::enumerate::{self, ScanOutcome, TwoGenVerdict};
use liestruct::format;
use liestruct::harness::{self, Suite};
use liestruct::hunt::{self, HuntConfig};
use liestruct::props::{self, SeriesKind};
use liestruct::report::{self, Emitter, Record};
use liestruct::triang;
use liestruct::{Error, Field, LieAlgebra, Property, ScanConfig, Subspace};

#[derive(Parser)]
#[command(
    name = "liestruct",
    version,
    about = "Structure of finite-dimensional Lie algebras over GF(p) and Q"
)]
struct Cli {
    /// Omit elapsed_ms fields so output is byte-stable.
    #[arg(long, global = true)]
    no_timing: bool,

    /// Worker threads for scans; never changes output.
    #[arg(long, global = true, default_value_t = 1)]
    workers: usize,

    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum Kind {
    Derived,
    LowerCentral,
    SupersolvableFlag,
}

#[derive(Subcommand)]
enum Command {
    /// Decide structural properties.
    Check {
        file: PathBuf,
        /// Comma-separated property names (default: all reported properties).
        #[arg(long)]
        props: Option<String>,
    },
    /// Derived or lower central series, or a supersolvable flag.
    Series {
        file: PathBuf,
        #[arg(long, value_enum, default_value = "derived")]
        kind: Kind,
    },
    /// Frattini subalgebra and Frattini ideal (finite fields).
    Frattini { file: PathBuf },
    /// Enumerate subalgebras (finite fields).
    Subalgebras {
        file: PathBuf,
        #[arg(long)]
        maximal: bool,
        #[arg(long)]
        count_only: bool,
    },
    /// Triangulability of a subalgebra on L (default: L itself).
    Triang {
        file: PathBuf,
        /// Basis vectors as `v1;v2;...`, coordinates comma-separated.
        #[arg(long)]
        subalgebra: Option<String>,
    },
    /// nil(S) for a subalgebra S.
    Nil {
        file: PathBuf,
        #[arg(long)]
        subalgebra: String,
    },
    /// Two-generation, or a property scan over two-generated proper subalgebras.
    Twogen {
        file: PathBuf,
        #[arg(long)]
        property: Option<String>,
        /// Sample instead of scanning exhaustively.
        #[arg(long)]
        samples: Option<u64>,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
    /// Run a theorem-verification suite.
    Theorems {
        file: PathBuf,
        #[arg(long)]
        suite: String,
    },
    /// Random search for counterexamples to the two-generation conjecture.
    Hunt {
        #[arg(long)]
        field: String,
        #[arg(long, default_value_t = 1)]
        dim_min: usize,
        #[arg(long)]
        dim_max: usize,
        #[arg(long)]
        samples: u64,
        #[arg(long)]
        seed: u64,
        /// Write counterexample candidates here as lie-sc files.
        #[arg(long)]
        dump_dir: Option<PathBuf>,
    },
    /// Build a catalog algebra.
    Catalog {
        /// Entry name; omit with --list.
        name: Option<String>,
        #[arg(long = "param")]
        params: Vec<String>,
        #[arg(short = 'o', long)]
        output: Option<PathBuf>,
        #[arg(long)]
        list: bool,
    },
}

fn one_line(s: &str) -> String {
    s.split_whitespace().collect::<Vec<_>>().join(" ")
}

fn load(path: &Path) -> Result<LieAlgebra, Error> {
    let text = fs::read_to_string(path).map_err(|e| Error::Io(format!("cannot read {}: {e}", path.display())))?;
    format::parse(&text)
}

fn parse_subspace(l: &LieAlgebra, text: &str) -> Result<Subspace, Error> {
    let field = l.field();
    let vectors = text
        .split(';')
        .filter(|v| !v.trim().is_empty())
        .map(|v| {
            let coords = v
                .split(',')
                .map(|x| field.parse_scalar(x))
                .collect::<Result<Vec<_>, _>>()?;
            if coords.len() != l.dim() {
                return Err(Error::DimensionMismatch {
                    expected: l.dim(),
                    found: coords.len(),
                });
            }
            Ok(coords)
        })
        .collect::<Result<Vec<_>, _>>()?;
    Subspace::try_span(field, l.dim(), &vectors)
}

fn algebra_record(l: &LieAlgebra) -> Record {
    Record::new("algebra").with("field", l.field()).with("dim", l.dim())
}

fn run(cli: Cli) -> Result<(), Error> {
    let stdout = io::stdout();
    let mut out = Emitter::new(stdout.lock(), !cli.no_timing);
    let cfg = ScanConfig::default().with_workers(cli.workers);
    let io_err = |e: io::Error| {
        // a closed downstream pipe (e.g. `| head`) is not an error
        if e.kind() == io::ErrorKind::BrokenPipe {
            std::process::exit(0);
        }
        Error::Io(format!("write failed: {e}"))
    };
    let start = Instant::now();

    match cli.command {
        Command::Check { file, props: list } => {
            let l = load(&file)?;
            let wanted = match list {
                Some(s) => s
                    .split(',')
                    .map(|p| p.trim().parse())
                    .collect::<Result<Vec<Property>, _>>()?,
                None => Vec::new(),
            };
            let r = props::property_report(&l, &wanted, &cfg.caps)?;
            out.emit(&algebra_record(&l)).map_err(io_err)?;
            let mut recs = report::property_records(&r).into_iter();
            let head = recs.next().expect("check record");
            out.emit_timed(head, start.elapsed()).map_err(io_err)?;
            for rec in recs {
                out.emit(&rec).map_err(io_err)?;
            }
        }
        Command::Series { file, kind } => {
            let l = load(&file)?;
            let chain = match kind {
                Kind::Derived => Some(props::derived_series(&l)),
                Kind::LowerCentral => Some(props::lower_central_series(&l)),
                Kind::SupersolvableFlag => props::supersolvable_flag(&l),
            };
            out.emit(&algebra_record(&l)).map_err(io_err)?;
            let rec = match chain {
                Some(c) => report::series_record(&c),
                None => Record::new("series")
                    .with("kind", SeriesKind::SupersolvableFlag)
                    .with("exists", false),
            };
            out.emit_timed(rec, start.elapsed()).map_err(io_err)?;
        }
        Command::Frattini { file } => {
            let l = load(&file)?;
            let f = props::frattini(&l, &cfg)?;
            out.emit(&algebra_record(&l)).map_err(io_err)?;
            out.emit_timed(report::frattini_record(&f), start.elapsed())
                .map_err(io_err)?;
        }
        Command::Subalgebras {
            file,
            maximal,
            count_only,
        } => {
            let l = load(&file)?;
            let all = enumerate::enumerate_subalgebras(&l, &cfg)?;
            let list = if maximal {
                enumerate::maximal_among(&l, &all)
            } else {
                all
            };
            out.emit(&algebra_record(&l)).map_err(io_err)?;
            if !count_only {
                for s in &list {
                    out.emit(
                        &Record::new("subalgebra")
                            .with("dim", s.dim())
                            .with("ideal", s.is_ideal())
                            .subspace("basis", s.space()),
                    )
                    .map_err(io_err)?;
                }
            }
            let rec = Record::new("subalgebra_count")
                .with("which", if maximal { "maximal" } else { "all" })
                .with("count", list.len());
            out.emit_timed(rec, start.elapsed()).map_err(io_err)?;
        }
        Command::Triang { file, subalgebra } => {
            let l = load(&file)?;
            let s = match subalgebra {
                Some(t) => parse_subspace(&l, &t)?,
                None => l.full_space(),
            };
            let t = triang::is_triangulable_on(&l, &s)?;
            let rec = Record::new("triang")
                .subspace("subalgebra", &s)
                .with("triangulable", t.triangulable)
                .subspace("derived", &t.derived)
                .chain(&t.chain);
            out.emit(&algebra_record(&l)).map_err(io_err)?;
            out.emit_timed(rec, start.elapsed()).map_err(io_err)?;
        }
        Command::Nil { file, subalgebra } => {
            let l = load(&file)?;
            let s = parse_subspace(&l, &subalgebra)?;
            let cert = triang::is_nil_on(&l, &s)?;
            let n = triang::nil_ideal(&l, &s, &cfg.caps)?;
            let rec = Record::new("nil")
                .subspace("subalgebra", &s)
                .with("nil_on_l", cert.is_nil())
                .with("nil_dim", n.dim())
                .subspace("nil", n.space());
            out.emit(&algebra_record(&l)).map_err(io_err)?;
            out.emit_timed(rec, start.elapsed()).map_err(io_err)?;
        }
        Command::Twogen {
            file,
            property,
            samples,
            seed,
        } => {
            let l = load(&file)?;
            let cfg = match samples {
                Some(n) => ScanConfig::sampled(n, seed).with_workers(cli.workers),
                None => cfg,
            };
            let mode = if samples.is_some() { "sampled" } else { "exhaustive" };
            let rec = match property {
                None => {
                    let v = enumerate::is_two_generated(&l, &cfg)?;
                    let rec = Record::new("twogen").with("mode", mode);
                    match v {
                        TwoGenVerdict::Generated(x, y) => {
                            rec.with("verdict", "generated").vector("x", &x).vector("y", &y)
                        }
                        TwoGenVerdict::NotGenerated => rec.with("verdict", "not_generated"),
                        TwoGenVerdict::Unknown { samples } => rec.with("verdict", "unknown").with("samples", samples),
                    }
                }
                Some(p) => {
                    let p: Property = p.parse()?;
                    let o = enumerate::twogen_subalgebra_scan(&l, p, &cfg)?;
                    let rec = Record::new("twogen_scan").with("property", p).with("mode", mode);
                    match o {
                        ScanOutcome::AllHold { pairs, distinct } => rec
                            .with("outcome", "all_hold")
                            .with("pairs", pairs)
                            .with("distinct", distinct),
                        ScanOutcome::Witness { x, y, subalgebra } => rec
                            .with("outcome", "witness")
                            .vector("x", &x)
                            .vector("y", &y)
                            .subspace("subalgebra", &subalgebra),
                        ScanOutcome::NoWitnessFound { samples } => {
                            rec.with("outcome", "no_witness_found").with("samples", samples)
                        }
                    }
                }
            };
            out.emit(&algebra_record(&l)).map_err(io_err)?;
            out.emit_timed(rec, start.elapsed()).map_err(io_err)?;
        }
        Command::Theorems { file, suite } => {
            let l = load(&file)?;
            let suite: Suite = suite.parse()?;
            out.emit(&algebra_record(&l)).map_err(io_err)?;
            for r in harness::run_suite(&l, suite, &cfg)? {
                let elapsed = r.stats.elapsed;
                out.emit_timed(r.to_record(), elapsed).map_err(io_err)?;
            }
        }
        Command::Hunt {
            field,
            dim_min,
            dim_max,
            samples,
            seed,
            dump_dir,
        } => {
            let field: Field = field.parse()?;
            let mut hc = HuntConfig::new(field, dim_min, dim_max, samples, seed)?;
            hc.scan = hc.scan.with_workers(cli.workers);
            if let Some(dir) = &dump_dir {
                fs::create_dir_all(dir).map_err(|e| Error::Io(format!("{}: {e}", dir.display())))?;
            }
            out.header().map_err(io_err)?;
            let mut failure: Option<Error> = None;
            let summary = hunt::conjecture_hunt(&hc, |inst| {
                let mut rec = inst.to_record();
                if inst.is_counterexample() {
                    if let Some(dir) = &dump_dir {
                        let path = dir.join(format!("counterexample_{}_{}.lie", inst.seed, inst.index));
                        if let Err(e) = fs::write(&path, inst.dump()) {
                            failure.get_or_insert(Error::Io(format!("{}: {e}", path.display())));
                        }
                        rec.push("dump", path.display());
                    }
                }
                if let Err(e) = out.emit(&rec) {
                    failure.get_or_insert(io_err(e));
                }
            })?;
            if let Some(e) = failure {
                return Err(e);
            }
            if summary.low_acceptance {
                eprintln!("warning kind=LowAcceptance message=fewer than 0.1% of sparse samples satisfied Jacobi");
            }
            out.emit_timed(summary.to_record(), start.elapsed()).map_err(io_err)?;
        }
        Command::Catalog {
            name,
            params,
            output,
            list,
        } => {
            if list {
                for n in catalog::NAMES {
                    println!("{n}");
                }
                return Ok(());
            }
            let name = name.ok_or_else(|| Error::BadParameter("catalog needs NAME or --list".into()))?;
            let params = Params::parse(params.iter().map(String::as_str))?;
            let entry = catalog::build(&name, &params)?;
            let text = format!("# {}\n{}", entry.label(), format::serialize(&entry.algebra));
            match output {
                Some(path) => {
                    fs::write(&path, text).map_err(|e| Error::Io(format!("cannot write {}: {e}", path.display())))?
                }
                None => io::stdout().write_all(text.as_bytes()).map_err(io_err)?,
            }
        }
    }
    Ok(())
}

fn exit_code(e: &Error) -> u8 {
    match e {
        Error::CapExceeded { .. } => 3,
        Error::BadParameter(_) | Error::UnknownProperty(_) => 2,
        _ => 1,
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            use clap::error::ErrorKind;
            if matches!(e.kind(), ErrorKind::DisplayHelp | ErrorKind::DisplayVersion) {
                print!("{e}");
                return ExitCode::SUCCESS;
            }
            let msg = e.to_string();
            let first = msg.lines().next().unwrap_or("").trim_start_matches("error: ");
            eprintln!("error kind=Usage message={}", one_line(first));
            return ExitCode::from(2);
        }
    };
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            let line = match &e {
                Error::Parse { line, .. } => format!(
                    "error kind={} line={line} message={}",
                    e.kind(),
                    one_line(&e.to_string())
                ),
                _ => format!("error kind={} message={}", e.kind(), one_line(&e.to_string())),
            };
            eprintln!("{line}");
            ExitCode::from(exit_code(&e))
        }
    }
}
