//! Line-oriented text formats for algebras, morphisms and additive maps.
//!
//! Algebra files:
//!
//! ```text
//! # comment
//! algebra fig1
//! elements: 0 a b c d
//! zero: 0
//! top: 1            # optional; makes the file an effect algebra
//! sum: a b c        # a + b = c
//! ```
//!
//! Zero sums and the mirrored orientation of each sum are implied.
//! Morphism files carry `kind: gea|ea`, `target: REF` and `map: a -> x`
//! lines. Additive map files carry `val: a = 1/4` lines.

use std::collections::BTreeMap;
use std::fmt::Write as _;

use effalg_core::states::Rational;
use effalg_core::{Algebra, Elem, FiniteEa, FiniteGea, Kind, Morphism};
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("line {line}: {message}")]
pub struct ParseError {
    /// 1-based; 0 when the problem is not tied to one line.
    pub line: usize,
    pub message: String,
}

fn err(line: usize, message: impl Into<String>) -> ParseError {
    ParseError {
        line,
        message: message.into(),
    }
}

/// Significant lines with their 1-based numbers, comments stripped.
fn lines(text: &str) -> impl Iterator<Item = (usize, &str)> {
    text.lines().enumerate().filter_map(|(i, raw)| {
        let line = raw.split('#').next().unwrap_or("").trim();
        (!line.is_empty()).then_some((i + 1, line))
    })
}

/// Splits `key: rest` or `key rest`.
fn directive(line: &str) -> (&str, &str) {
    match line.split_once(|c: char| c == ':' || c.is_whitespace()) {
        Some((key, rest)) => (key.trim(), rest.trim()),
        None => (line, ""),
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AlgebraFile {
    pub name: String,
    pub algebra: Algebra,
}

pub fn parse_algebra(text: &str) -> Result<AlgebraFile, ParseError> {
    let mut name: Option<String> = None;
    let mut elements: Option<(usize, Vec<String>)> = None;
    let mut zero: Option<(usize, String)> = None;
    let mut top: Option<(usize, String)> = None;
    let mut sums: Vec<(usize, [String; 3])> = Vec::new();

    for (no, line) in lines(text) {
        let (key, rest) = directive(line);
        let once = |set: bool, what: &str| {
            if set {
                Err(err(no, format!("duplicate `{what}` line")))
            } else {
                Ok(())
            }
        };
        match key {
            "algebra" => {
                once(name.is_some(), "algebra")?;
                if rest.is_empty() || rest.contains(char::is_whitespace) {
                    return Err(err(no, "expected `algebra NAME`"));
                }
                name = Some(rest.to_string());
            }
            "elements" => {
                once(elements.is_some(), "elements")?;
                let list: Vec<String> = rest.split_whitespace().map(str::to_string).collect();
                if list.is_empty() {
                    return Err(err(no, "empty element list"));
                }
                elements = Some((no, list));
            }
            "zero" | "top" => {
                let slot = if key == "zero" { &mut zero } else { &mut top };
                once(slot.is_some(), key)?;
                let words: Vec<&str> = rest.split_whitespace().collect();
                if words.len() != 1 {
                    return Err(err(no, format!("expected `{key}: ELEMENT`")));
                }
                *slot = Some((no, words[0].to_string()));
            }
            "sum" => {
                let words: Vec<&str> = rest.split_whitespace().collect();
                let [a, b, c] = words[..] else {
                    return Err(err(no, "expected `sum: A B C`"));
                };
                sums.push((no, [a.to_string(), b.to_string(), c.to_string()]));
            }
            other => return Err(err(no, format!("unknown directive `{other}`"))),
        }
    }

    let (elements_line, names) = elements.ok_or_else(|| err(0, "missing `elements` line"))?;
    let mut index = BTreeMap::new();
    for (i, n) in names.iter().enumerate() {
        if index.insert(n.clone(), Elem(i)).is_some() {
            return Err(err(elements_line, format!("duplicate element `{n}`")));
        }
    }
    let lookup = |no: usize, n: &str| {
        index
            .get(n)
            .copied()
            .ok_or_else(|| err(no, format!("unknown element `{n}`")))
    };
    let (zero_line, zero_name) = zero.ok_or_else(|| err(0, "missing `zero` line"))?;
    let zero = lookup(zero_line, &zero_name)?;

    let mut seen: BTreeMap<(Elem, Elem), (Elem, usize)> = BTreeMap::new();
    let mut triples = Vec::with_capacity(sums.len());
    for (no, [a, b, c]) in &sums {
        let (a, b, c) = (lookup(*no, a)?, lookup(*no, b)?, lookup(*no, c)?);
        if a == zero || b == zero {
            let other = if a == zero { b } else { a };
            if c != other {
                return Err(err(
                    *no,
                    format!(
                        "{} + {} must be {}",
                        names[zero.0], names[other.0], names[other.0]
                    ),
                ));
            }
        }
        let key = (a.min(b), a.max(b));
        if let Some(&(prev, prev_line)) = seen.get(&key) {
            if prev != c {
                return Err(err(
                    *no,
                    format!(
                        "{} + {} = {} conflicts with {} on line {prev_line}",
                        names[a.0], names[b.0], names[c.0], names[prev.0]
                    ),
                ));
            }
        }
        seen.insert(key, (c, *no));
        triples.push((a, b, c));
    }

    let gea =
        FiniteGea::from_sums(names.clone(), zero, &triples).map_err(|e| err(0, e.to_string()))?;
    let algebra = match top {
        Some((no, t)) => {
            let top = lookup(no, &t)?;
            Algebra::Ea(FiniteEa::new(gea, top).map_err(|e| err(no, e.to_string()))?)
        }
        None => Algebra::Gea(gea),
    };
    Ok(AlgebraFile {
        name: name.unwrap_or_else(|| "unnamed".to_string()),
        algebra,
    })
}

/// Canonical serialization: nonzero sums ordered by `(a, b)` index with
/// `a <= b`.
pub fn emit_algebra(name: &str, algebra: &Algebra) -> String {
    let g = algebra.as_gea();
    let mut out = String::new();
    writeln!(out, "algebra {name}").unwrap();
    writeln!(out, "elements: {}", g.names().join(" ")).unwrap();
    writeln!(out, "zero: {}", g.name(g.zero())).unwrap();
    if let Some(top) = algebra.top() {
        writeln!(out, "top: {}", g.name(top)).unwrap();
    }
    for (a, b, c) in g.table().entries() {
        if a != g.zero() && b != g.zero() {
            writeln!(out, "sum: {} {} {}", g.name(a), g.name(b), g.name(c)).unwrap();
        }
    }
    out
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MorphismFile {
    pub name: Option<String>,
    pub kind: Kind,
    /// Reference to the target algebra, as written.
    pub target: String,
    pub entries: Vec<(usize, String, String)>,
}

pub fn parse_morphism(text: &str) -> Result<MorphismFile, ParseError> {
    let mut name = None;
    let mut kind = None;
    let mut target = None;
    let mut entries = Vec::new();
    for (no, line) in lines(text) {
        let (key, rest) = directive(line);
        match key {
            "morphism" => name = Some(rest.to_string()),
            "kind" => {
                kind = Some(match rest {
                    "gea" => Kind::Gea,
                    "ea" => Kind::Ea,
                    other => return Err(err(no, format!("unknown kind `{other}`"))),
                })
            }
            "target" => {
                if rest.is_empty() {
                    return Err(err(no, "expected `target: REF`"));
                }
                target = Some(rest.to_string());
            }
            "map" => {
                let Some((a, x)) = rest.split_once("->") else {
                    return Err(err(no, "expected `map: A -> X`"));
                };
                let (a, x) = (a.trim(), x.trim());
                if a.is_empty()
                    || x.is_empty()
                    || a.contains(char::is_whitespace)
                    || x.contains(char::is_whitespace)
                {
                    return Err(err(no, "expected `map: A -> X`"));
                }
                entries.push((no, a.to_string(), x.to_string()));
            }
            other => return Err(err(no, format!("unknown directive `{other}`"))),
        }
    }
    Ok(MorphismFile {
        name,
        kind: kind.unwrap_or(Kind::Gea),
        target: target.ok_or_else(|| err(0, "missing `target` line"))?,
        entries,
    })
}

impl MorphismFile {
    /// Builds the morphism once both endpoints are known. Every source
    /// element must be mapped exactly once.
    pub fn resolve(&self, source: &Algebra, target: &Algebra) -> Result<Morphism, ParseError> {
        let n = source.len();
        let mut map: Vec<Option<Elem>> = vec![None; n];
        for (no, a, x) in &self.entries {
            let a_el = source
                .element(a)
                .ok_or_else(|| err(*no, format!("unknown source element `{a}`")))?;
            let x_el = target
                .element(x)
                .ok_or_else(|| err(*no, format!("unknown target element `{x}`")))?;
            if map[a_el.0].replace(x_el).is_some_and(|old| old != x_el) {
                return Err(err(*no, format!("`{a}` mapped twice")));
            }
        }
        let g = source.as_gea();
        let map = map
            .into_iter()
            .enumerate()
            .map(|(i, m)| m.ok_or_else(|| err(0, format!("no image for `{}`", g.name(Elem(i))))))
            .collect::<Result<Vec<_>, _>>()?;
        let (source, target) = match self.kind {
            Kind::Gea => (source.forget(), target.forget()),
            Kind::Ea => (source.clone(), target.clone()),
        };
        Morphism::new(self.kind, source, target, map).map_err(|e| err(0, e.to_string()))
    }
}

pub fn emit_morphism(name: Option<&str>, target_ref: &str, f: &Morphism) -> String {
    let mut out = String::new();
    if let Some(name) = name {
        writeln!(out, "morphism {name}").unwrap();
    }
    let kind = match f.kind() {
        Kind::Gea => "gea",
        Kind::Ea => "ea",
    };
    writeln!(out, "kind: {kind}").unwrap();
    writeln!(out, "target: {target_ref}").unwrap();
    let (src, tgt) = (f.source().as_gea(), f.target().as_gea());
    for x in src.elements() {
        writeln!(out, "map: {} -> {}", src.name(x), tgt.name(f.apply(x))).unwrap();
    }
    out
}

/// One-line rendering `0->0 a->x ...`.
pub fn morphism_line(f: &Morphism) -> String {
    let (src, tgt) = (f.source().as_gea(), f.target().as_gea());
    src.elements()
        .map(|x| format!("{}->{}", src.name(x), tgt.name(f.apply(x))))
        .collect::<Vec<_>>()
        .join(" ")
}

/// Reads `val: a = p/q` lines. Every element needs exactly one value.
pub fn parse_values(text: &str, algebra: &FiniteGea) -> Result<Vec<Rational>, ParseError> {
    let mut values: Vec<Option<Rational>> = vec![None; algebra.len()];
    for (no, line) in lines(text) {
        let (key, rest) = directive(line);
        if key != "val" {
            return Err(err(no, format!("unknown directive `{key}`")));
        }
        let Some((a, v)) = rest.split_once('=') else {
            return Err(err(no, "expected `val: A = P/Q`"));
        };
        let (a, v) = (a.trim(), v.trim());
        let e = algebra
            .element(a)
            .ok_or_else(|| err(no, format!("unknown element `{a}`")))?;
        let value: Rational = v
            .parse()
            .map_err(|_| err(no, format!("bad rational `{v}`")))?;
        if values[e.0].replace(value).is_some() {
            return Err(err(no, format!("duplicate value for `{a}`")));
        }
    }
    values
        .into_iter()
        .enumerate()
        .map(|(i, v)| v.ok_or_else(|| err(0, format!("no value for `{}`", algebra.name(Elem(i))))))
        .collect()
}

pub fn emit_values(algebra: &FiniteGea, values: &[Rational]) -> String {
    let mut out = String::new();
    for x in algebra.elements() {
        writeln!(out, "val: {} = {}", algebra.name(x), values[x.0]).unwrap();
    }
    out
}
