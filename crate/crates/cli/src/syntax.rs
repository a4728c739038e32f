//! Textual syntax for objects and subcategories.
//!
//! Objects: `f<i>` (shift zero), `s<k>:f<i>` (`Σ^{k·d} f_i`), or a raw global
//! position `p<n>`. Subcategories: comma-separated index lists such as
//! `1,2,5,6,9,10`; the empty string and `{}` denote the empty set.

use angulated::{FamilyParams, IndecObject, SubcatSpec};
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ParseError {
    #[error("invalid object `{0}`: expected f<i>, s<k>:f<i> or p<n>")]
    Object(String),
    #[error("index {index} outside [1, {period}]")]
    Index { index: i64, period: i64 },
    #[error("invalid index list `{0}`")]
    Subcat(String),
    #[error("invalid rational `{0}`")]
    Rational(String),
    #[error("config line {line}: {message}")]
    Config { line: usize, message: String },
}

fn parse_int(s: &str) -> Option<i64> {
    let s = s.trim();
    if s.is_empty() || s.len() > 19 {
        return None;
    }
    s.parse().ok()
}

/// Parses one object. Positions are bounded so that downstream arithmetic
/// cannot overflow.
pub fn parse_object(params: &FamilyParams, text: &str) -> Result<IndecObject, ParseError> {
    const LIMIT: i64 = 1 << 40;
    let bad = || ParseError::Object(text.to_string());
    let t = text.trim();
    if let Some(raw) = t.strip_prefix('p') {
        let pos = parse_int(raw).ok_or_else(bad)?;
        if pos.abs() > LIMIT {
            return Err(bad());
        }
        return Ok(IndecObject::at(pos));
    }
    let (shift, rest) = match t.strip_prefix('s') {
        Some(tail) => {
            let (k, f) = tail.split_once(':').ok_or_else(bad)?;
            (parse_int(k).ok_or_else(bad)?, f)
        }
        None => (0, t),
    };
    let index = match rest.strip_prefix('f') {
        Some(i) => parse_int(i).ok_or_else(bad)?,
        None if shift == 0 && !t.starts_with('s') => parse_int(rest).ok_or_else(bad)?,
        None => return Err(bad()),
    };
    if !(1..=params.period()).contains(&index) {
        return Err(ParseError::Index { index, period: params.period() });
    }
    if shift.abs() > LIMIT / params.period().max(1) {
        return Err(bad());
    }
    Ok(IndecObject::f(params, shift, index))
}

pub fn format_object(params: &FamilyParams, x: IndecObject) -> String {
    x.label(params)
}

pub fn parse_subcat(params: &FamilyParams, text: &str) -> Result<SubcatSpec, ParseError> {
    let t = text.trim().trim_start_matches('{').trim_end_matches('}').trim();
    if t.is_empty() {
        return Ok(SubcatSpec::empty(params));
    }
    let mut out = Vec::new();
    for part in t.split(',') {
        let part = part.trim();
        let part = part.strip_prefix('f').unwrap_or(part);
        let i = parse_int(part).ok_or_else(|| ParseError::Subcat(text.to_string()))?;
        if !(1..=params.period()).contains(&i) {
            return Err(ParseError::Index { index: i, period: params.period() });
        }
        out.push(i);
    }
    Ok(SubcatSpec::new(params, out).expect("indices checked"))
}

pub fn format_subcat(spec: &SubcatSpec) -> String {
    spec.indices().map(|i| i.to_string()).collect::<Vec<_>>().join(",")
}
