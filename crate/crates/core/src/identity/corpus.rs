use std::fmt;
use std::str::FromStr;

use thiserror::Error;

use super::{Expect, IdentityCase, Sample};
use crate::dsl::{eval_monomial, parse, Binding};
use crate::series::Rational;

/// Default comparison order when a stanza has no `order:` line.
pub const DEFAULT_ORDER: i64 = 50;

/// A stanza that could not be turned into a case.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("line {line}: {msg}")]
pub struct StanzaError {
    pub id: String,
    pub line: usize,
    pub msg: String,
}

/// One corpus entry: a case, or the reason its stanza was rejected.
pub type Entry = Result<IdentityCase, StanzaError>;

#[derive(Default)]
struct Raw {
    id: String,
    line: usize,
    lhs: Option<(usize, String)>,
    rhs: Option<(usize, String)>,
    binds: Vec<(usize, String)>,
    order: Option<(usize, String)>,
    expect: Option<(usize, String)>,
    note: String,
    error: Option<StanzaError>,
}

/// Parse corpus text. Stanzas start at `id:` lines; blank lines and lines
/// starting with `#` are ignored.
pub fn parse_corpus(text: &str) -> Vec<Entry> {
    let mut raws: Vec<Raw> = Vec::new();
    for (i, line) in text.lines().enumerate() {
        let n = i + 1;
        let line = line.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let Some((key, value)) = line.split_once(':') else {
            reject(&mut raws, n, format!("expected `key: value`, found `{line}`"));
            continue;
        };
        let value = value.trim().to_string();
        if key.trim() == "id" {
            raws.push(Raw {
                id: value,
                line: n,
                ..Raw::default()
            });
            continue;
        }
        let Some(raw) = raws.last_mut() else {
            raws.push(Raw {
                id: "<unnamed>".into(),
                line: n,
                error: Some(StanzaError {
                    id: "<unnamed>".into(),
                    line: n,
                    msg: "stanza must start with `id:`".into(),
                }),
                ..Raw::default()
            });
            continue;
        };
        match key.trim() {
            "lhs" => raw.lhs = Some((n, value)),
            "rhs" => raw.rhs = Some((n, value)),
            "bind" => raw.binds.push((n, value)),
            "order" => raw.order = Some((n, value)),
            "expect" => raw.expect = Some((n, value)),
            "note" => raw.note = value,
            other => reject(&mut raws, n, format!("unknown key `{other}`")),
        }
    }
    raws.into_iter().map(build).collect()
}

fn reject(raws: &mut [Raw], line: usize, msg: String) {
    if let Some(raw) = raws.last_mut() {
        if raw.error.is_none() {
            raw.error = Some(StanzaError {
                id: raw.id.clone(),
                line,
                msg,
            });
        }
    }
}

fn build(raw: Raw) -> Entry {
    let err = |line: usize, msg: String| StanzaError {
        id: raw.id.clone(),
        line,
        msg,
    };
    if let Some(e) = raw.error.clone() {
        return Err(e);
    }
    let (lhs_line, lhs_text) = raw.lhs.clone().ok_or_else(|| err(raw.line, "missing `lhs:`".into()))?;
    let (rhs_line, rhs_text) = raw.rhs.clone().ok_or_else(|| err(raw.line, "missing `rhs:`".into()))?;
    let lhs = parse(&lhs_text).map_err(|e| err(lhs_line, format!("lhs: {e}")))?;
    let rhs = parse(&rhs_text).map_err(|e| err(rhs_line, format!("rhs: {e}")))?;

    let mut samples = Vec::new();
    for (line, text) in &raw.binds {
        let binding = parse_binding(text).map_err(|msg| err(*line, msg))?;
        samples.push(Sample {
            label: text.clone(),
            binding,
        });
    }
    if samples.is_empty() {
        samples.push(Sample {
            label: "-".into(),
            binding: Binding::new(),
        });
    }
    let mut free = lhs.symbols();
    for s in rhs.symbols() {
        if !free.contains(&s) {
            free.push(s);
        }
    }
    for s in &samples {
        if let Some(missing) = free.iter().find(|v| !s.binding.contains_key(*v)) {
            return Err(err(raw.line, format!("symbol `{missing}` is not bound by `{}`", s.label)));
        }
    }

    let default_order = match &raw.order {
        None => Rational::from_integer(DEFAULT_ORDER),
        Some((line, text)) => {
            let r = parse_rational(text).ok_or_else(|| err(*line, format!("bad order `{text}`")))?;
            if r <= Rational::from_integer(0) {
                return Err(err(*line, "order must be positive".into()));
            }
            r
        }
    };
    let expect = match &raw.expect {
        None => Expect::Pass,
        Some((line, text)) => text.parse().map_err(|_| err(*line, format!("bad expectation `{text}`")))?,
    };
    Ok(IdentityCase {
        id: raw.id,
        lhs,
        rhs,
        samples,
        default_order,
        expect,
        note: raw.note,
    })
}

fn parse_rational(text: &str) -> Option<Rational> {
    let text = text.trim();
    match text.split_once('/') {
        Some((a, b)) => {
            let a: i64 = a.trim().parse().ok()?;
            let b: i64 = b.trim().parse().ok()?;
            (b != 0).then(|| Rational::new(a, b))
        }
        None => Some(Rational::from_integer(text.parse().ok()?)),
    }
}

/// Split on commas outside parentheses.
fn split_top(text: &str) -> Vec<&str> {
    let mut out = Vec::new();
    let mut depth = 0i32;
    let mut start = 0;
    for (i, ch) in text.char_indices() {
        match ch {
            '(' => depth += 1,
            ')' => depth -= 1,
            ',' if depth == 0 => {
                out.push(&text[start..i]);
                start = i + 1;
            }
            _ => {}
        }
    }
    out.push(&text[start..]);
    out
}

/// Parse `x=2*q, z=-q^(1/2)` into a binding.
pub fn parse_binding(text: &str) -> Result<Binding, String> {
    let mut b = Binding::new();
    for part in split_top(text) {
        let (name, value) = part
            .split_once('=')
            .ok_or_else(|| format!("expected `symbol=monomial`, found `{}`", part.trim()))?;
        let name = name.trim();
        if name.is_empty() || !name.chars().all(|c| c.is_ascii_alphanumeric() || c == '_') {
            return Err(format!("bad symbol name `{name}`"));
        }
        let expr = parse(value).map_err(|e| format!("{name}: {e}"))?;
        let m = eval_monomial(&expr, &Binding::new()).map_err(|e| format!("{name}: {e}"))?;
        b.insert(name.to_string(), m);
    }
    Ok(b)
}

impl FromStr for Expect {
    type Err = ();
    fn from_str(s: &str) -> Result<Self, ()> {
        match s.trim() {
            "pass" => Ok(Expect::Pass),
            "fail" => Ok(Expect::Fail),
            "nongeneric" => Ok(Expect::NonGeneric),
            _ => Err(()),
        }
    }
}

impl fmt::Display for Expect {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Expect::Pass => "pass",
            Expect::Fail => "fail",
            Expect::NonGeneric => "nongeneric",
        })
    }
}
