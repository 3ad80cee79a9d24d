//! The `lie-sc v1` structure-constants text format.
//!
//! ```text
//! lie-sc v1
//! field Q
//! dim 3
//! basis a b c
//! [a,b] = 1*c
//! ```
//!
//! Only brackets `[b_i,b_j]` with `i < j` may be listed; unlisted products are
//! zero. Coefficients are integers, or `n/d` over Q. `#` starts a comment.

use std::collections::HashMap;

use crate::algebra::LieAlgebra;
use crate::error::{Error, ParseErrorKind, Result};
use crate::field::{Field, Scalar};
use crate::matrix::{vector, Vector};

pub const HEADER: &str = "lie-sc v1";

fn err(line: usize, kind: ParseErrorKind) -> Error {
    Error::Parse { line, kind }
}

fn syntax(line: usize, msg: impl Into<String>) -> Error {
    err(line, ParseErrorKind::Syntax(msg.into()))
}

fn valid_name(name: &str) -> bool {
    !name.is_empty() && !name.chars().any(|c| c.is_whitespace() || "[],*+=#/".contains(c))
}

pub fn parse(text: &str) -> Result<LieAlgebra> {
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.split('#').next().unwrap_or("").trim()))
        .filter(|(_, l)| !l.is_empty());

    let mut next = |what: &str| {
        lines
            .next()
            .ok_or_else(|| syntax(text.lines().count().max(1), format!("missing {what} line")))
    };
    let (ln, head) = next("header")?;
    if head.split_whitespace().collect::<Vec<_>>() != ["lie-sc", "v1"] {
        return Err(syntax(ln, format!("expected `{HEADER}`, got `{head}`")));
    }
    let (ln, fline) = next("field")?;
    let field = match fline.strip_prefix("field") {
        Some(rest) if rest.starts_with(char::is_whitespace) => {
            rest.trim().parse::<Field>().map_err(|e| syntax(ln, e.to_string()))?
        }
        _ => {
            return Err(syntax(
                ln,
                format!("expected `field Q` or `field GF(p)`, got `{fline}`"),
            ))
        }
    };
    let (ln, dline) = next("dim")?;
    let dim: usize = match dline.split_whitespace().collect::<Vec<_>>()[..] {
        ["dim", n] => n.parse().map_err(|_| syntax(ln, format!("bad dimension `{n}`")))?,
        _ => return Err(syntax(ln, format!("expected `dim <n>`, got `{dline}`"))),
    };

    let mut names: Option<Vec<String>> = None;
    let mut products: Vec<((usize, usize), Vector)> = Vec::new();
    let mut seen: HashMap<(usize, usize), usize> = HashMap::new();
    let mut index: HashMap<String, usize> = HashMap::new();
    let default_names: Vec<String> = (0..dim).map(|i| format!("e{i}")).collect();

    for (ln, line) in lines {
        if let Some(rest) = line.strip_prefix("basis") {
            if !rest.is_empty() && !rest.starts_with(char::is_whitespace) {
                return Err(syntax(ln, format!("unexpected `{line}`")));
            }
            if names.is_some() || !products.is_empty() {
                return Err(syntax(ln, "basis line must directly follow the dim line"));
            }
            let ns: Vec<String> = rest.split_whitespace().map(str::to_string).collect();
            if ns.len() != dim {
                return Err(syntax(ln, format!("basis lists {} names, dim is {dim}", ns.len())));
            }
            for (i, n) in ns.iter().enumerate() {
                if !valid_name(n) {
                    return Err(syntax(ln, format!("invalid basis name `{n}`")));
                }
                if index.insert(n.clone(), i).is_some() {
                    return Err(syntax(ln, format!("basis name `{n}` repeated")));
                }
            }
            names = Some(ns);
            continue;
        }
        if index.is_empty() {
            names.get_or_insert_with(|| default_names.clone());
            for (i, n) in default_names.iter().enumerate() {
                index.insert(n.clone(), i);
            }
        }
        let lookup = |name: &str| {
            index
                .get(name)
                .copied()
                .ok_or_else(|| err(ln, ParseErrorKind::UnknownBasisName(name.to_string())))
        };

        let (lhs, rhs) = line
            .split_once('=')
            .ok_or_else(|| syntax(ln, format!("expected `[x,y] = ...`, got `{line}`")))?;
        let inner = lhs
            .trim()
            .strip_prefix('[')
            .and_then(|s| s.strip_suffix(']'))
            .ok_or_else(|| syntax(ln, format!("malformed bracket `{}`", lhs.trim())))?;
        let (a, b) = inner
            .split_once(',')
            .ok_or_else(|| syntax(ln, format!("malformed bracket `{}`", lhs.trim())))?;
        let (a, b) = (a.trim(), b.trim());
        let (i, j) = (lookup(a)?, lookup(b)?);
        if j <= i {
            return Err(err(ln, ParseErrorKind::UpperTriangleViolation(a.into(), b.into())));
        }
        if seen.insert((i, j), ln).is_some() {
            return Err(err(ln, ParseErrorKind::DuplicateBracket(a.into(), b.into())));
        }

        let mut v = vector::zero(field, dim);
        for term in rhs.split('+') {
            let term = term.trim();
            let (coeff, name) = term
                .split_once('*')
                .ok_or_else(|| syntax(ln, format!("expected `<coeff>*<name>`, got `{term}`")))?;
            let c = parse_coeff(field, coeff.trim(), ln)?;
            let k = lookup(name.trim())?;
            v[k] = &v[k] + &c;
        }
        products.push(((i, j), v));
    }
    LieAlgebra::new(field, dim, products, names.or(Some(default_names)))
}

fn parse_coeff(field: Field, text: &str, ln: usize) -> Result<Scalar> {
    if text.contains('/') && field.is_finite() {
        return Err(err(
            ln,
            ParseErrorKind::FieldMismatch(format!("fraction `{text}` over {field}; use integer residues")),
        ));
    }
    field.parse_scalar(text).map_err(|e| match e {
        Error::DivisionByZero => syntax(ln, format!("zero denominator in `{text}`")),
        _ => syntax(ln, format!("bad coefficient `{text}`")),
    })
}

/// Canonical text: basis line always present, brackets in `(i, j)` order,
/// zero products and zero coefficients omitted.
pub fn serialize(l: &LieAlgebra) -> String {
    let names = l.names();
    let mut out = format!("{HEADER}\nfield {}\ndim {}\n", l.field(), l.dim());
    if l.dim() > 0 {
        out.push_str(&format!("basis {}\n", names.join(" ")));
    }
    for (i, j, v) in l.nonzero_brackets() {
        let terms: Vec<String> = v
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(|(k, c)| format!("{c}*{}", names[k]))
            .collect();
        out.push_str(&format!("[{},{}] = {}\n", names[i], names[j], terms.join(" + ")));
    }
    out
}
