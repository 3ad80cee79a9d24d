//! `report-v1` line records: a version header line, then one record per
//! line as space-separated `key=value` pairs, `record=<kind>` first.
//!
//! Vectors render as `(a,b,c)`, subspaces and lists as `|`-separated items,
//! the zero subspace as `0` and an empty list as `-`. Series are flattened
//! into `term0=...`, `term1=...` keys.

use std::fmt::Display;
use std::io::{self, Write};
use std::time::Duration;

use crate::error::{Error, Result};
use crate::field::Scalar;
use crate::matrix::vector;
use crate::props::{Certificate, Frattini, PropertyReport, SeriesChain};
use crate::subspace::Subspace;

pub const REPORT_HEADER: &str = "report-v1";

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Record {
    fields: Vec<(String, String)>,
}

fn clean(value: String) -> String {
    if value.is_empty() {
        return "-".into();
    }
    // values never contain whitespace, so a record stays one line of pairs
    value.split_whitespace().collect::<Vec<_>>().join("_")
}

impl Record {
    pub fn new(kind: &str) -> Self {
        Self {
            fields: vec![("record".into(), kind.into())],
        }
    }

    pub fn kind(&self) -> &str {
        &self.fields[0].1
    }

    pub fn with(mut self, key: &str, value: impl Display) -> Self {
        self.push(key, value);
        self
    }

    pub fn push(&mut self, key: &str, value: impl Display) {
        self.fields.push((key.into(), clean(value.to_string())));
    }

    pub fn vector(self, key: &str, v: &[Scalar]) -> Self {
        self.with(key, vector::render(v))
    }

    pub fn subspace(self, key: &str, s: &Subspace) -> Self {
        self.with(key, s.render())
    }

    pub fn list<T: Display>(self, key: &str, items: impl IntoIterator<Item = T>) -> Self {
        let parts: Vec<String> = items.into_iter().map(|x| x.to_string()).collect();
        self.with(key, parts.join("|"))
    }

    /// `dims=...` plus one `term<i>` key per subspace.
    pub fn chain(mut self, terms: &[Subspace]) -> Self {
        self = self.list("dims", terms.iter().map(Subspace::dim));
        for (i, t) in terms.iter().enumerate() {
            self = self.subspace(&format!("term{i}"), t);
        }
        self
    }

    pub fn get(&self, key: &str) -> Option<&str> {
        self.fields.iter().find(|(k, _)| k == key).map(|(_, v)| v.as_str())
    }

    pub fn fields(&self) -> &[(String, String)] {
        &self.fields
    }

    pub fn render(&self) -> String {
        self.fields
            .iter()
            .map(|(k, v)| format!("{k}={v}"))
            .collect::<Vec<_>>()
            .join(" ")
    }

    pub fn parse(line: &str) -> Result<Self> {
        let mut fields = Vec::new();
        for pair in line.split_whitespace() {
            let (k, v) = pair
                .split_once('=')
                .ok_or_else(|| Error::BadParameter(format!("record field `{pair}` is not key=value")))?;
            fields.push((k.to_string(), v.to_string()));
        }
        match fields.first() {
            Some((k, _)) if k == "record" => Ok(Self { fields }),
            _ => Err(Error::BadParameter(format!(
                "record line must start with record=: `{line}`"
            ))),
        }
    }
}

/// Writes the header once, then records; `elapsed_ms` only when timing is on.
pub struct Emitter<W: Write> {
    out: W,
    timing: bool,
    started: bool,
}

impl<W: Write> Emitter<W> {
    pub fn new(out: W, timing: bool) -> Self {
        Self {
            out,
            timing,
            started: false,
        }
    }

    pub fn header(&mut self) -> io::Result<()> {
        if !self.started {
            writeln!(self.out, "{REPORT_HEADER}")?;
            self.started = true;
        }
        Ok(())
    }

    pub fn emit(&mut self, record: &Record) -> io::Result<()> {
        self.header()?;
        writeln!(self.out, "{}", record.render())
    }

    pub fn emit_timed(&mut self, mut record: Record, elapsed: Duration) -> io::Result<()> {
        if self.timing {
            record.push("elapsed_ms", elapsed.as_millis());
        }
        self.emit(&record)
    }

    pub fn into_inner(self) -> W {
        self.out
    }
}

/// Parse a whole report, checking the header.
pub fn parse_report(text: &str) -> Result<Vec<Record>> {
    let mut lines = text.lines();
    match lines.next() {
        Some(REPORT_HEADER) => lines.filter(|l| !l.trim().is_empty()).map(Record::parse).collect(),
        _ => Err(Error::BadParameter(format!("missing `{REPORT_HEADER}` header"))),
    }
}

pub fn series_record(s: &SeriesChain) -> Record {
    Record::new("series")
        .with("kind", s.kind)
        .with("reaches_zero", s.reaches_zero())
        .chain(&s.terms)
}

/// One `check` record with all verdicts, then one record per certificate.
pub fn property_records(r: &PropertyReport) -> Vec<Record> {
    let mut head = Record::new("check");
    for (p, v) in &r.verdicts {
        head.push(p.name(), v);
    }
    let mut out = vec![head];
    for (p, c) in &r.certificates {
        let rec = Record::new("certificate").with("property", p);
        out.push(match c {
            Certificate::Chain(s) => rec.with("kind", "chain").with("series", s.kind).chain(&s.terms),
            Certificate::Engel(chain) => rec.with("kind", "engel").chain(chain),
            Certificate::Pair(u, v) => rec.with("kind", "pair").vector("x", u).vector("y", v),
            Certificate::Subspace(s) => rec.with("kind", "subspace").subspace("subspace", s),
            Certificate::Generator(x) => rec.with("kind", "generator").vector("x", x),
        });
    }
    out
}

pub fn frattini_record(f: &Frattini) -> Record {
    Record::new("frattini")
        .with("frattini_dim", f.subalgebra.dim())
        .subspace("frattini_subalgebra", &f.subalgebra)
        .with("phi_dim", f.ideal.dim())
        .subspace("phi", &f.ideal)
        .with("phi_free", f.phi_free)
}
