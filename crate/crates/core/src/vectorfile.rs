//! Integer-only text format for configurations.
//!
//! ```text
//! kissfile 1 dim <n> count <N> scale <s> tags <m_1> ... <m_n>
//! <a_1> ... <a_n>
//! tags <m_1> ... <m_n>
//! <a_1> ... <a_n>
//! ```
//!
//! Each vector line holds `n` integers `a_i`, standing for
//! `a_i sqrt(m_i) / s`. A `tags` line switches the layout for the vector
//! lines after it; `count` covers vector lines only.

use std::fmt::Write as _;
use std::sync::Arc;

use thiserror::Error;

use crate::configurations::{ExactScaledVector, KissingConfiguration};

pub const MAGIC: &str = "kissfile";
pub const VERSION: u32 = 1;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("line {line}: {message}")]
pub struct ParseError {
    pub line: usize,
    pub message: String,
}

fn err(line: usize, message: impl Into<String>) -> ParseError {
    ParseError {
        line,
        message: message.into(),
    }
}

fn join<T: ToString>(xs: &[T]) -> String {
    xs.iter().map(T::to_string).collect::<Vec<_>>().join(" ")
}

pub fn export(config: &KissingConfiguration) -> String {
    let dim = config.dimension;
    let default_tags: Arc<[u64]> = vec![1; dim].into();
    let first = config
        .vectors
        .first()
        .map_or(default_tags, |v| v.tags.clone());
    let mut out = String::with_capacity(config.len() * (3 * dim + 1) + 64);
    writeln!(
        out,
        "{MAGIC} {VERSION} dim {dim} count {} scale {} tags {}",
        config.len(),
        config.scale,
        join(&first)
    )
    .expect("writing to a string");
    let mut current = first;
    for v in &config.vectors {
        if v.tags != current {
            writeln!(out, "tags {}", join(&v.tags)).expect("writing to a string");
            current = v.tags.clone();
        }
        writeln!(out, "{}", join(&v.coords)).expect("writing to a string");
    }
    out
}

fn parse_ints<T: std::str::FromStr>(line: usize, toks: &[&str], what: &str) -> Result<Vec<T>, ParseError> {
    toks.iter()
        .map(|t| t.parse().map_err(|_| err(line, format!("bad {what} {t:?}"))))
        .collect()
}

fn expect_key(line: usize, tok: Option<&&str>, key: &str) -> Result<(), ParseError> {
    match tok {
        Some(&t) if t == key => Ok(()),
        Some(t) => Err(err(line, format!("expected {key:?}, found {t:?}"))),
        None => Err(err(line, format!("missing {key:?}"))),
    }
}

fn header_number<T: std::str::FromStr>(line: usize, tok: Option<&&str>, key: &str) -> Result<T, ParseError> {
    let t = tok.ok_or_else(|| err(line, format!("missing value for {key}")))?;
    t.parse().map_err(|_| err(line, format!("bad {key} {t:?}")))
}

pub fn import(text: &str, label: &str) -> Result<KissingConfiguration, ParseError> {
    let mut lines = text.lines().enumerate().map(|(i, l)| (i + 1, l));
    let (_, header) = lines.next().ok_or_else(|| err(1, "empty file"))?;
    let h: Vec<&str> = header.split_whitespace().collect();
    expect_key(1, h.first(), MAGIC)?;
    let version: u32 = header_number(1, h.get(1), "version")?;
    if version != VERSION {
        return Err(err(1, format!("unsupported version {version}")));
    }
    expect_key(1, h.get(2), "dim")?;
    let dim: usize = header_number(1, h.get(3), "dim")?;
    expect_key(1, h.get(4), "count")?;
    let count: usize = header_number(1, h.get(5), "count")?;
    expect_key(1, h.get(6), "scale")?;
    let scale: u64 = header_number(1, h.get(7), "scale")?;
    expect_key(1, h.get(8), "tags")?;
    let tag_toks = &h[9.min(h.len())..];
    if tag_toks.len() != dim {
        return Err(err(1, format!("{} tags for dimension {dim}", tag_toks.len())));
    }
    let mut tags: Arc<[u64]> = parse_ints::<u64>(1, tag_toks, "tag")?.into();

    let mut vectors = Vec::with_capacity(count);
    let mut last_line = 1;
    for (no, line) in lines {
        last_line = no;
        let toks: Vec<&str> = line.split_whitespace().collect();
        if toks.first() == Some(&"tags") {
            if toks.len() != dim + 1 {
                return Err(err(no, format!("{} tags for dimension {dim}", toks.len() - 1)));
            }
            tags = parse_ints::<u64>(no, &toks[1..], "tag")?.into();
            continue;
        }
        if toks.len() != dim {
            return Err(err(no, format!("{} coordinates, expected {dim}", toks.len())));
        }
        let coords = parse_ints::<i64>(no, &toks, "coordinate")?;
        let v = ExactScaledVector::new(coords, tags.clone(), scale).map_err(|e| err(no, e.to_string()))?;
        vectors.push(v);
    }
    if vectors.len() != count {
        return Err(err(
            last_line,
            format!("header count {count}, found {} vectors", vectors.len()),
        ));
    }
    let config = KissingConfiguration::new(label, vectors).map_err(|e| err(1, e.to_string()))?;
    if config.dimension != dim && count > 0 {
        return Err(err(1, "dimension mismatch"));
    }
    Ok(KissingConfiguration {
        dimension: dim,
        scale,
        ..config
    })
}

/// Decimal coordinates with 17 significant digits, one vector per line,
/// for use outside this crate. Never read back for verification.
pub fn float_sidecar(config: &KissingConfiguration) -> String {
    let mut out = String::new();
    writeln!(out, "kissfloat 1 dim {} count {}", config.dimension, config.len()).expect("writing to a string");
    for v in &config.vectors {
        let parts: Vec<String> = v.to_f64().iter().map(|x| format!("{x:.16e}")).collect();
        writeln!(out, "{}", parts.join(" ")).expect("writing to a string");
    }
    out
}

/// Largest deviation between sidecar values and the exact coordinates
/// evaluated in 64-bit floating point.
pub fn sidecar_max_error(config: &KissingConfiguration, sidecar: &str) -> Result<f64, ParseError> {
    let mut worst = 0f64;
    let mut lines = sidecar.lines().enumerate().skip(1);
    for v in &config.vectors {
        let (no, line) = lines.next().ok_or_else(|| err(0, "sidecar too short"))?;
        let xs: Vec<f64> = parse_ints(no + 1, &line.split_whitespace().collect::<Vec<_>>(), "float")?;
        if xs.len() != v.dimension() {
            return Err(err(no + 1, "wrong number of values"));
        }
        for ((&x, &a), &m) in xs.iter().zip(&v.coords).zip(v.tags.iter()) {
            let exact = a as f64 * (m as f64).sqrt() / v.scale as f64;
            worst = worst.max((x - exact).abs());
        }
    }
    Ok(worst)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::configurations::{build_dim16, build_record_19_20_21, Parity};

    #[test]
    fn round_trip_is_byte_identical() {
        let c = build_record_19_20_21(19).unwrap();
        let text = export(&c);
        assert!(text.starts_with("kissfile 1 dim 19 count 11692 scale 19 tags 1 1"));
        assert_eq!(text.lines().filter(|l| l.starts_with("tags")).count(), 1);
        let back = import(&text, &c.label).unwrap();
        assert_eq!(back, c);
        assert_eq!(export(&back), text);
    }

    #[test]
    fn parse_errors_carry_lines() {
        assert_eq!(import("", "x").unwrap_err().line, 1);
        assert_eq!(import("kissfile 2 dim 2 count 0 scale 1 tags 1 1\n", "x").unwrap_err().line, 1);
        let bad = "kissfile 1 dim 2 count 2 scale 1 tags 1 1\n2 2\n2 x\n";
        let e = import(bad, "x").unwrap_err();
        assert_eq!(e.line, 3);
        let short = "kissfile 1 dim 2 count 2 scale 1 tags 1 1\n2 2\n2\n";
        assert_eq!(import(short, "x").unwrap_err().line, 3);
        let few = "kissfile 1 dim 2 count 3 scale 1 tags 1 1\n2 2\n2 -2\n";
        assert!(import(few, "x").unwrap_err().message.contains("count 3"));
        let tags = "kissfile 1 dim 2 count 1 scale 1 tags 1 4\n2 2\n";
        assert!(import(tags, "x").is_err());
    }

    #[test]
    fn empty_configuration() {
        let text = "kissfile 1 dim 3 count 0 scale 2 tags 1 1 1\n";
        let c = import(text, "empty").unwrap();
        assert_eq!((c.dimension, c.scale, c.len()), (3, 2, 0));
        assert_eq!(export(&c), text);
    }

    #[test]
    fn sidecar_is_close() {
        let c = build_dim16(Parity::Odd).unwrap();
        let s = float_sidecar(&c);
        assert_eq!(s.lines().count(), c.len() + 1);
        assert!(sidecar_max_error(&c, &s).unwrap() <= 1e-12);
        let c = build_record_19_20_21(20).unwrap();
        let s = float_sidecar(&c);
        assert!(sidecar_max_error(&c, &s).unwrap() <= 1e-12);
    }
}
