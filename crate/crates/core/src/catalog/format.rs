//! Line-oriented catalog files.
//!
//! ```text
//! witt U5
//! # coxeter [3,3,3,4,3]
//! dim 5
//! vertex 1 0 0 0 0 1 ideal
//! ...
//! form 0 0 0 0 0 1
//! ...
//! diagram 0-1:3 1-2:3 2-3:3 3-4:4 4-5:3
//! volume zeta3 7/46080
//! ```
//!
//! Entries are algexpr tokens without spaces, or double-quoted. A comment of
//! the form `# coxeter <symbol>` carries the Coxeter symbol; other comments
//! are ignored.

use std::fmt::Write as _;
use std::path::Path;

use crate::algexpr::AlgExpr;
use crate::catalog::{CoxeterSimplex, Diagram, VolumeDescriptor};
use crate::error::{Error, Result};
use crate::lorentz::Weight;

fn tokenize(line: &str, lineno: usize) -> Result<Vec<String>> {
    let mut out = Vec::new();
    let mut chars = line.chars().peekable();
    while let Some(&c) = chars.peek() {
        if c.is_whitespace() {
            chars.next();
        } else if c == '"' {
            chars.next();
            let mut tok = String::new();
            loop {
                match chars.next() {
                    Some('"') => break,
                    Some(ch) => tok.push(ch),
                    None => return Err(Error::Catalog { line: lineno, message: "unterminated quote".into() }),
                }
            }
            out.push(tok);
        } else {
            let mut tok = String::new();
            while let Some(&ch) = chars.peek() {
                if ch.is_whitespace() {
                    break;
                }
                tok.push(ch);
                chars.next();
            }
            out.push(tok);
        }
    }
    Ok(out)
}

fn expr(tok: &str, lineno: usize) -> Result<AlgExpr> {
    AlgExpr::parse(tok).map_err(|e| Error::Catalog { line: lineno, message: format!("`{tok}`: {e}") })
}

fn parse_edge(tok: &str, lineno: usize) -> Result<(usize, usize, Weight)> {
    let bad = || Error::Catalog { line: lineno, message: format!("bad diagram edge `{tok}`, want i-j:k") };
    let (pair, w) = tok.split_once(':').ok_or_else(bad)?;
    let (i, j) = pair.split_once('-').ok_or_else(bad)?;
    let i: usize = i.parse().map_err(|_| bad())?;
    let j: usize = j.parse().map_err(|_| bad())?;
    if i == j {
        return Err(bad());
    }
    let w = match w {
        "inf" => Weight::Infinite,
        k => match k.parse::<u32>() {
            Ok(k) if k >= 2 => Weight::Finite(k),
            _ => return Err(bad()),
        },
    };
    Ok((i, j, w))
}

fn parse_volume(toks: &[String], lineno: usize) -> Result<VolumeDescriptor> {
    let bad = |m: &str| Error::Catalog { line: lineno, message: m.to_string() };
    match toks.first().map(String::as_str) {
        Some("zeta3") if toks.len() == 2 => Ok(VolumeDescriptor::Zeta { k: 3, coef: expr(&toks[1], lineno)? }),
        Some("L") if toks.len() == 4 => {
            let s = toks[1].parse().map_err(|_| bad("bad L order"))?;
            let d = toks[2].parse().map_err(|_| bad("bad L modulus"))?;
            Ok(VolumeDescriptor::Dirichlet { s, d, coef: expr(&toks[3], lineno)? })
        }
        Some("literal") if toks.len() == 2 => {
            toks[1].parse::<f64>().map_err(|_| bad("bad decimal literal"))?;
            Ok(VolumeDescriptor::Literal(toks[1].clone()))
        }
        _ => Err(bad("volume must be `zeta3 <coef>`, `L <s> <d> <coef>` or `literal <decimal>`")),
    }
}

/// Parses catalog text. Structural invariants are not checked here; see
/// [`verify`](crate::catalog::verify).
pub fn load_str(text: &str) -> Result<CoxeterSimplex> {
    let mut witt: Option<String> = None;
    let mut coxeter = String::new();
    let mut dim: Option<usize> = None;
    let mut vertices = Vec::new();
    let mut ideal = Vec::new();
    let mut forms = Vec::new();
    let mut diagram: Option<Diagram> = None;
    let mut volume = None;
    let mut last_line = 0;

    for (idx, raw) in text.lines().enumerate() {
        let lineno = idx + 1;
        last_line = lineno;
        let trimmed = raw.trim();
        if let Some(comment) = trimmed.strip_prefix('#') {
            if let Some(sym) = comment.trim().strip_prefix("coxeter ") {
                coxeter = sym.trim().to_string();
            }
            continue;
        }
        let line = raw.split('#').next().unwrap_or("");
        let toks = tokenize(line, lineno)?;
        let Some((key, rest)) = toks.split_first() else { continue };
        let err = |m: String| Error::Catalog { line: lineno, message: m };
        let need_dim = || dim.ok_or_else(|| err(format!("`{key}` before `dim`")));
        match key.as_str() {
            "witt" => {
                if witt.is_some() {
                    return Err(err("duplicate `witt` section".into()));
                }
                match rest {
                    [sym] => witt = Some(sym.clone()),
                    _ => return Err(err("`witt` takes one symbol".into())),
                }
            }
            "dim" => {
                if dim.is_some() {
                    return Err(err("duplicate `dim` section".into()));
                }
                match rest {
                    [n] => match n.parse::<usize>() {
                        Ok(n) if n >= 2 => dim = Some(n),
                        _ => return Err(err(format!("bad dimension `{n}`"))),
                    },
                    _ => return Err(err("`dim` takes one integer".into())),
                }
            }
            "vertex" => {
                let n = need_dim()?;
                if !forms.is_empty() {
                    return Err(err("vertex after form lines".into()));
                }
                if vertices.len() == n + 1 {
                    return Err(err(format!("more than {} vertices", n + 1)));
                }
                let (entries, flag) = match rest.split_last() {
                    Some((last, init)) if last == "ideal" => (init, true),
                    _ => (rest, false),
                };
                if entries.len() != n + 1 {
                    return Err(err(format!("vertex needs {} coordinates, found {}", n + 1, entries.len())));
                }
                vertices.push(entries.iter().map(|t| expr(t, lineno)).collect::<Result<Vec<_>>>()?);
                ideal.push(flag);
            }
            "form" => {
                let n = need_dim()?;
                if forms.len() == n + 1 {
                    return Err(err(format!("more than {} forms", n + 1)));
                }
                if rest.len() != n + 1 {
                    return Err(err(format!("form needs {} coefficients, found {}", n + 1, rest.len())));
                }
                forms.push(rest.iter().map(|t| expr(t, lineno)).collect::<Result<Vec<_>>>()?);
            }
            "diagram" => {
                let n = need_dim()?;
                if diagram.is_some() {
                    return Err(err("duplicate `diagram` section".into()));
                }
                let edges = rest.iter().map(|t| parse_edge(t, lineno)).collect::<Result<Vec<_>>>()?;
                if let Some(&(i, j, _)) = edges.iter().find(|(i, j, _)| *i > n || *j > n) {
                    return Err(err(format!("diagram edge {i}-{j} out of range")));
                }
                diagram = Some(Diagram::new(edges));
            }
            "volume" => {
                if volume.is_some() {
                    return Err(err("duplicate `volume` section".into()));
                }
                volume = Some(parse_volume(rest, lineno)?);
            }
            other => return Err(err(format!("unknown directive `{other}`"))),
        }
    }

    let at_end = |m: String| Error::Catalog { line: last_line, message: m };
    let witt = witt.ok_or_else(|| at_end("missing `witt` line".into()))?;
    let dim = dim.ok_or_else(|| at_end("missing `dim` line".into()))?;
    if vertices.len() != dim + 1 {
        return Err(at_end(format!("expected {} vertices, found {}", dim + 1, vertices.len())));
    }
    if forms.len() != dim + 1 {
        return Err(at_end(format!("expected {} forms, found {}", dim + 1, forms.len())));
    }
    let diagram = diagram.ok_or_else(|| at_end("missing `diagram` line".into()))?;
    Ok(CoxeterSimplex::new(witt, coxeter, dim, vertices, ideal, forms, diagram, volume))
}

pub fn load(path: impl AsRef<Path>) -> Result<CoxeterSimplex> {
    load_str(&std::fs::read_to_string(path)?)
}

/// Deterministic text form accepted by [`load_str`].
pub fn serialize(s: &CoxeterSimplex) -> String {
    let mut out = String::new();
    let row = |r: &[AlgExpr]| r.iter().map(ToString::to_string).collect::<Vec<_>>().join(" ");
    writeln!(out, "witt {}", s.witt).unwrap();
    if !s.coxeter_symbol.is_empty() {
        writeln!(out, "# coxeter {}", s.coxeter_symbol).unwrap();
    }
    writeln!(out, "dim {}", s.dim).unwrap();
    for (v, &flag) in s.vertices.iter().zip(&s.ideal) {
        writeln!(out, "vertex {}{}", row(v), if flag { " ideal" } else { "" }).unwrap();
    }
    for f in &s.forms {
        writeln!(out, "form {}", row(f)).unwrap();
    }
    writeln!(out, "diagram {}", s.diagram).unwrap();
    match &s.volume {
        Some(VolumeDescriptor::Zeta { coef, .. }) => writeln!(out, "volume zeta3 {coef}").unwrap(),
        Some(VolumeDescriptor::Dirichlet { s, d, coef }) => writeln!(out, "volume L {s} {d} {coef}").unwrap(),
        Some(VolumeDescriptor::Literal(text)) => writeln!(out, "volume literal {text}").unwrap(),
        None => {}
    }
    out
}
