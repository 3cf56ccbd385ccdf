//! Exact validation of kissing configurations and their inner-product
//! spectra.
//!
//! Every inner product of a configuration at scale `s` with mixed radicand
//! `M` has the form `(p + q sqrt(M)) / s^2` with integers `p`, `q`. The pair
//! scan works on those integers only.

use std::cmp::Ordering;
use std::collections::{HashMap, HashSet};
use std::fmt;
use std::time::{Duration, Instant};

use rayon::prelude::*;
use thiserror::Error;

use crate::configurations::{ExactScaledVector, KissingConfiguration};
use crate::exact_arith::{sign_of_surd_int, squarefree_decompose, ExtendedValue, Rational};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum VerifyError {
    #[error("configuration is not a valid kissing configuration: {0}")]
    InvalidConfiguration(String),
    #[error("vector does not fit the configuration: {0}")]
    Incompatible(String),
}

pub type Result<T> = std::result::Result<T, VerifyError>;

/// Integer numerator `(p, q)` of `(p + q sqrt(M)) / s^2`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
struct PairValue {
    p: i64,
    q: i64,
}

fn cmp_values(a: PairValue, b: PairValue, m: u64) -> Ordering {
    if a.q == b.q {
        a.p.cmp(&b.p)
    } else if a.p == b.p {
        a.q.cmp(&b.q)
    } else {
        sign_of_surd_int(i128::from(a.p - b.p), i128::from(a.q - b.q), m)
    }
}

/// Per-coordinate weights for one pair of tag layouts: coordinate `i`
/// contributes `a_i b_i f_i` to `p` or to `q`, where `m_i m'_i = f_i^2 r_i`.
#[derive(Debug, Clone)]
struct PairKernel {
    rational: Vec<i64>,
    surd: Vec<i64>,
    unit: bool,
}

impl PairKernel {
    fn new(a: &[u64], b: &[u64], radicand: u64) -> Result<PairKernel> {
        let mut rational = vec![0; a.len()];
        let mut surd = vec![0; a.len()];
        for (i, (&x, &y)) in a.iter().zip(b).enumerate() {
            let (f, r) = squarefree_decompose(x * y);
            if r == 1 {
                rational[i] = f as i64;
            } else if r == radicand {
                surd[i] = f as i64;
            } else {
                return Err(VerifyError::Incompatible(format!(
                    "coordinate {i} needs sqrt({r}), configuration uses sqrt({radicand})"
                )));
            }
        }
        let unit = rational.iter().all(|&w| w == 1);
        Ok(PairKernel { rational, surd, unit })
    }

    #[inline]
    fn eval(&self, a: &[i32], b: &[i32]) -> PairValue {
        if self.unit {
            let p = a.iter().zip(b).map(|(&x, &y)| i64::from(x) * i64::from(y)).sum();
            return PairValue { p, q: 0 };
        }
        let (mut p, mut q) = (0i64, 0i64);
        for i in 0..a.len() {
            let ab = i64::from(a[i]) * i64::from(b[i]);
            p += ab * self.rational[i];
            q += ab * self.surd[i];
        }
        PairValue { p, q }
    }
}

/// A maximal block of consecutive vectors sharing a tag layout.
#[derive(Debug, Clone, Copy)]
struct Run {
    start: usize,
    end: usize,
    layout: usize,
}

/// Flat integer copy of a configuration, grouped by layout runs.
struct Packed {
    dim: usize,
    s2: i64,
    radicand: u64,
    coords: Vec<i32>,
    runs: Vec<Run>,
    run_of: Vec<usize>,
    layouts: Vec<Vec<u64>>,
    kernels: Vec<PairKernel>,
}

impl Packed {
    fn new(config: &KissingConfiguration) -> Result<Packed> {
        let dim = config.dimension;
        let s = i64::try_from(config.scale).map_err(|_| VerifyError::Incompatible("scale".into()))?;
        let mut coords = Vec::with_capacity(dim * config.len());
        let mut runs: Vec<Run> = Vec::new();
        let mut run_of = Vec::with_capacity(config.len());
        let mut layouts: Vec<Vec<u64>> = Vec::new();
        for (idx, v) in config.vectors.iter().enumerate() {
            if v.dimension() != dim || v.scale != config.scale {
                return Err(VerifyError::Incompatible(format!("vector {idx} has a different shape")));
            }
            for &c in &v.coords {
                coords.push(
                    i32::try_from(c).map_err(|_| VerifyError::Incompatible(format!("coordinate {c}")))?,
                );
            }
            let layout = match layouts.iter().position(|l| l[..] == v.tags[..]) {
                Some(l) => l,
                None => {
                    layouts.push(v.tags.to_vec());
                    layouts.len() - 1
                }
            };
            match runs.last_mut() {
                Some(r) if r.layout == layout && r.end == idx => r.end += 1,
                _ => runs.push(Run {
                    start: idx,
                    end: idx + 1,
                    layout,
                }),
            }
            run_of.push(runs.len() - 1);
        }
        let radicand = config.mixed_radicand.max(1);
        let mut kernels = Vec::with_capacity(layouts.len() * layouts.len());
        for a in &layouts {
            for b in &layouts {
                kernels.push(PairKernel::new(a, b, radicand)?);
            }
        }
        Ok(Packed {
            dim,
            s2: s * s,
            radicand,
            coords,
            runs,
            run_of,
            layouts,
            kernels,
        })
    }

    fn row(&self, i: usize) -> &[i32] {
        &self.coords[i * self.dim..(i + 1) * self.dim]
    }

    fn kernel(&self, a: usize, b: usize) -> &PairKernel {
        &self.kernels[a * self.layouts.len() + b]
    }

    fn len(&self) -> usize {
        self.run_of.len()
    }

    fn exceeds_half(&self, v: PairValue) -> bool {
        cmp_values(v, PairValue { p: 4 * self.s2, q: 0 }, self.radicand) == Ordering::Greater
    }

    fn to_value(&self, v: PairValue, denom: i64) -> ExtendedValue {
        let d = i128::from(denom);
        ExtendedValue::new(
            Rational::frac(i128::from(v.p), d),
            Rational::frac(i128::from(v.q), d),
            self.radicand,
        )
        .expect("radicand is square-free")
    }

    /// Calls `visit(j, value)` for every `j >= from` paired with row `i`.
    fn for_each_partner(&self, i: usize, from: usize, mut visit: impl FnMut(usize, PairValue)) {
        let a = self.row(i);
        let la = self.runs[self.run_of[i]].layout;
        for run in &self.runs {
            if run.end <= from {
                continue;
            }
            let k = self.kernel(la, run.layout);
            for j in run.start.max(from)..run.end {
                visit(j, k.eval(a, self.row(j)));
            }
        }
    }
}

#[derive(Debug, Clone, Copy, Default)]
struct RowOutcome {
    max: Option<(PairValue, (usize, usize))>,
    violation: Option<((usize, usize), PairValue)>,
}

fn merge(a: RowOutcome, b: RowOutcome, m: u64) -> RowOutcome {
    let max = match (a.max, b.max) {
        (Some(x), Some(y)) => match cmp_values(x.0, y.0, m) {
            Ordering::Less => Some(y),
            Ordering::Greater => Some(x),
            Ordering::Equal => Some(if x.1 <= y.1 { x } else { y }),
        },
        (x, y) => x.or(y),
    };
    let violation = match (a.violation, b.violation) {
        (Some(x), Some(y)) => Some(if x.0 <= y.0 { x } else { y }),
        (x, y) => x.or(y),
    };
    RowOutcome { max, violation }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VerificationReport {
    pub vector_count: usize,
    pub norm_ok: bool,
    /// First vector whose squared norm is not 8.
    pub bad_norm: Option<usize>,
    /// Largest inner product over distinct pairs (none for fewer than two
    /// vectors).
    pub max_inner_product: Option<ExtendedValue>,
    /// Lowest pair `(i, j)` with inner product above 4.
    pub violating_pair: Option<(usize, usize)>,
    pub violating_value: Option<ExtendedValue>,
    /// Lowest pair of identical vectors.
    pub duplicate_pair: Option<(usize, usize)>,
    pub elapsed: Duration,
}

impl VerificationReport {
    pub fn is_valid(&self) -> bool {
        self.norm_ok && self.duplicate_pair.is_none() && self.violating_pair.is_none()
    }
}

impl fmt::Display for VerificationReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let pair = |p: Option<(usize, usize)>| p.map_or("none".to_string(), |(i, j)| format!("{i} {j}"));
        writeln!(f, "vectors        {}", self.vector_count)?;
        match self.bad_norm {
            None => writeln!(f, "norms          ok")?,
            Some(i) => writeln!(f, "norms          bad at {i}")?,
        }
        match &self.max_inner_product {
            Some(v) => writeln!(f, "max inner      {v}")?,
            None => writeln!(f, "max inner      none")?,
        }
        write!(f, "violating pair {}", pair(self.violating_pair))?;
        if let Some(v) = &self.violating_value {
            write!(f, " ({v})")?;
        }
        writeln!(f)?;
        writeln!(f, "duplicate pair {}", pair(self.duplicate_pair))?;
        writeln!(f, "elapsed        {:.3}s", self.elapsed.as_secs_f64())?;
        write!(
            f,
            "verdict        {}",
            if self.is_valid() { "valid" } else { "invalid" }
        )
    }
}

/// Canonical real vector: tags on zero coordinates do not matter.
fn canonical(v: &ExactScaledVector) -> Vec<(i64, u64)> {
    v.coords
        .iter()
        .zip(v.tags.iter())
        .map(|(&c, &m)| if c == 0 { (0, 1) } else { (c, m) })
        .collect()
}

fn duplicate_pair(config: &KissingConfiguration) -> Option<(usize, usize)> {
    let mut first: HashMap<Vec<(i64, u64)>, usize> = HashMap::new();
    let mut best: Option<(usize, usize)> = None;
    for (j, v) in config.vectors.iter().enumerate() {
        match first.get(&canonical(v)) {
            Some(&i) => best = Some(best.map_or((i, j), |b| b.min((i, j)))),
            None => {
                first.insert(canonical(v), j);
            }
        }
    }
    best
}

/// Checks all norms and all distinct pairs exactly. The verdict does not
/// depend on the thread count.
pub fn validate(config: &KissingConfiguration) -> Result<VerificationReport> {
    let start = Instant::now();
    let packed = Packed::new(config)?;
    let eight = 8 * i128::from(packed.s2);
    let bad_norm = config.vectors.iter().position(|v| v.norm_numerator() != eight);
    let duplicate = duplicate_pair(config);
    let m = packed.radicand;

    let outcome = (0..packed.len())
        .into_par_iter()
        .map(|i| {
            let mut out = RowOutcome::default();
            packed.for_each_partner(i, i + 1, |j, v| {
                match out.max {
                    Some((best, _)) if cmp_values(v, best, m) != Ordering::Greater => {}
                    _ => out.max = Some((v, (i, j))),
                }
                if out.violation.is_none() && packed.exceeds_half(v) {
                    out.violation = Some(((i, j), v));
                }
            });
            out
        })
        .reduce(RowOutcome::default, |a, b| merge(a, b, m));

    Ok(VerificationReport {
        vector_count: config.len(),
        norm_ok: bad_norm.is_none(),
        bad_norm,
        max_inner_product: outcome.max.map(|(v, _)| packed.to_value(v, packed.s2)),
        violating_pair: outcome.violation.map(|(p, _)| p),
        violating_value: outcome.violation.map(|(_, v)| packed.to_value(v, packed.s2)),
        duplicate_pair: duplicate,
        elapsed: start.elapsed(),
    })
}

/// Lowest index of a configuration vector whose inner product with `v`
/// exceeds 4, with that inner product.
pub fn first_conflict(
    config: &KissingConfiguration,
    v: &ExactScaledVector,
) -> Result<Option<(usize, ExtendedValue)>> {
    let mut extended = config.clone();
    extended.vectors.push(v.clone());
    let radicand = KissingConfiguration::new("probe", extended.vectors.clone())
        .map_err(|e| VerifyError::Incompatible(e.to_string()))?
        .mixed_radicand;
    extended.mixed_radicand = radicand;
    let packed = Packed::new(&extended)?;
    let last = packed.len() - 1;
    let a = packed.row(last);
    let la = packed.runs[packed.run_of[last]].layout;
    for run in &packed.runs {
        let k = packed.kernel(la, run.layout);
        for j in run.start..run.end.min(last) {
            let value = k.eval(a, packed.row(j));
            if packed.exceeds_half(value) {
                return Ok(Some((j, packed.to_value(value, packed.s2))));
            }
        }
    }
    Ok(None)
}

/// Sorted set of normalized inner products.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Spectrum {
    pub values: Vec<ExtendedValue>,
}

impl Spectrum {
    pub fn contains(&self, v: &ExtendedValue) -> bool {
        self.values.contains(v)
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }
}

impl fmt::Display for Spectrum {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for v in &self.values {
            writeln!(f, "{v}")?;
        }
        Ok(())
    }
}

#[derive(Debug, Clone, Default)]
struct SpectrumAcc {
    rational: Vec<bool>,
    surd: Vec<bool>,
    mixed: HashSet<PairValue>,
}

impl SpectrumAcc {
    fn new(bound: i64) -> SpectrumAcc {
        let width = (2 * bound + 1) as usize;
        SpectrumAcc {
            rational: vec![false; width],
            surd: vec![false; width],
            mixed: HashSet::new(),
        }
    }

    fn absorb(mut self, other: SpectrumAcc) -> SpectrumAcc {
        for (a, b) in self.rational.iter_mut().zip(other.rational) {
            *a |= b;
        }
        for (a, b) in self.surd.iter_mut().zip(other.surd) {
            *a |= b;
        }
        self.mixed.extend(other.mixed);
        self
    }
}

/// The set of normalized inner products `<x, y> / 8` over all ordered
/// pairs, including `x = y` (which contributes 1).
pub fn spectrum(config: &KissingConfiguration) -> Result<Spectrum> {
    let report = validate(config)?;
    if !report.is_valid() {
        return Err(VerifyError::InvalidConfiguration(format!(
            "violating pair {:?}, duplicate pair {:?}, bad norm {:?}",
            report.violating_pair, report.duplicate_pair, report.bad_norm
        )));
    }
    let packed = Packed::new(config)?;
    // Cauchy-Schwarz bounds |p| and |q| by 8 s^2 on the pure parts.
    let bound = 8 * packed.s2;
    let acc = (0..packed.len())
        .into_par_iter()
        .fold(
            || SpectrumAcc::new(bound),
            |mut acc, i| {
                packed.for_each_partner(i, i, |_, v| {
                    if v.q == 0 {
                        acc.rational[(v.p + bound) as usize] = true;
                    } else if v.p == 0 {
                        acc.surd[(v.q + bound) as usize] = true;
                    } else {
                        acc.mixed.insert(v);
                    }
                });
                acc
            },
        )
        .reduce(|| SpectrumAcc::new(bound), SpectrumAcc::absorb);

    let mut raw: Vec<PairValue> = Vec::new();
    for (k, &hit) in acc.rational.iter().enumerate() {
        if hit {
            raw.push(PairValue { p: k as i64 - bound, q: 0 });
        }
    }
    for (k, &hit) in acc.surd.iter().enumerate() {
        if hit {
            raw.push(PairValue { p: 0, q: k as i64 - bound });
        }
    }
    raw.extend(acc.mixed);
    let mut values: Vec<ExtendedValue> = raw.into_iter().map(|v| packed.to_value(v, bound)).collect();
    values.sort_by(|a, b| a.try_cmp(b).expect("one extension"));
    values.dedup();
    Ok(Spectrum { values })
}

/// Normalized inner products among the Leech lattice minimal vectors.
pub fn leech_values() -> [Rational; 7] {
    [
        Rational::integer(-1),
        Rational::frac(-1, 2),
        Rational::frac(-1, 4),
        Rational::ZERO,
        Rational::frac(1, 4),
        Rational::frac(1, 2),
        Rational::ONE,
    ]
}

/// `true` when some value lies outside the Leech set, so the
/// configuration cannot be a cross section of the Leech minimal vectors.
pub fn cross_section_test(s: &Spectrum) -> bool {
    let leech = leech_values();
    s.values
        .iter()
        .any(|v| !v.is_rational() || !leech.contains(&v.rational_part()))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::binary_codes::{chain_code, BinaryWord};
    use crate::configurations::{build_dim16, build_leech_19_20_21, hole_vector, Parity};
    use std::sync::Arc;

    fn small(vectors: Vec<Vec<i64>>, tags: &[u64], scale: u64) -> KissingConfiguration {
        let tags: Arc<[u64]> = tags.into();
        KissingConfiguration::new(
            "test",
            vectors
                .into_iter()
                .map(|c| ExactScaledVector::new(c, tags.clone(), scale).unwrap())
                .collect(),
        )
        .unwrap()
    }

    #[test]
    fn tiny_configurations() {
        // Hexagon-like: three vectors at 60 degrees scaled to norm 8.
        let c = small(vec![vec![2, 2], vec![2, -2], vec![-2, 2]], &[1, 1], 1);
        let r = validate(&c).unwrap();
        assert!(r.is_valid());
        assert_eq!(r.max_inner_product, Some(ExtendedValue::ZERO));

        let bad = small(vec![vec![2, 2], vec![2, 2]], &[1, 1], 1);
        let r = validate(&bad).unwrap();
        assert_eq!(r.duplicate_pair, Some((0, 1)));
        assert_eq!(r.violating_pair, Some((0, 1)));
        assert!(!r.is_valid());

        let off = small(vec![vec![2, 2], vec![3, 0]], &[1, 1], 1);
        let r = validate(&off).unwrap();
        assert_eq!(r.bad_norm, Some(1));
        assert!(!r.is_valid());
    }

    #[test]
    fn dim16_even_is_valid_and_compatible() {
        let c = build_dim16(Parity::Even).unwrap();
        let r = validate(&c).unwrap();
        assert!(r.is_valid(), "{r}");
        assert_eq!(r.max_inner_product, Some(ExtendedValue::from_rational(Rational::integer(4))));
        let s = spectrum(&c).unwrap();
        assert!(!cross_section_test(&s));
        assert!(s.values.iter().all(|v| leech_values().contains(&v.rational_part())));
    }

    #[test]
    fn permutation_does_not_change_verdict() {
        let c = build_dim16(Parity::Odd).unwrap();
        let r = validate(&c).unwrap();
        let mut shuffled = c.clone();
        shuffled.vectors.reverse();
        shuffled.vectors.swap(3, 4000);
        let r2 = validate(&shuffled).unwrap();
        assert_eq!(r.is_valid(), r2.is_valid());
        assert_eq!(r.max_inner_product, r2.max_inner_product);
    }

    #[test]
    fn even_base_with_hole_fails() {
        let n = 19;
        let base = build_leech_19_20_21(n).unwrap();
        let hole = hole_vector(n, BinaryWord::new(0, n).unwrap());
        let (j, value) = first_conflict(&base, &hole).unwrap().unwrap();
        // 8 sqrt(8/19) = (16/19) sqrt(38).
        assert_eq!(value, ExtendedValue::new(Rational::ZERO, Rational::frac(16, 19), 38).unwrap());
        assert!(base.vectors[j].coords.iter().filter(|&&x| x != 0).count() == 8);

        let mut vectors = base.vectors.clone();
        vectors.push(hole);
        let with_hole = KissingConfiguration::new("even+hole", vectors).unwrap();
        let r = validate(&with_hole).unwrap();
        assert!(!r.is_valid());
        assert!(r.violating_pair.is_some());
        assert!(chain_code(n).unwrap().contains(0));
    }

    #[test]
    fn invalid_configuration_has_no_spectrum() {
        let bad = small(vec![vec![2, 2], vec![2, 2]], &[1, 1], 1);
        assert!(matches!(spectrum(&bad), Err(VerifyError::InvalidConfiguration(_))));
    }

    #[test]
    fn cross_section_detects_surds() {
        let s = Spectrum {
            values: vec![
                ExtendedValue::from_rational(Rational::frac(1, 4)),
                ExtendedValue::new(Rational::ZERO, Rational::frac(1, 19), 38).unwrap(),
            ],
        };
        assert!(cross_section_test(&s));
        let s = Spectrum {
            values: vec![ExtendedValue::from_rational(Rational::frac(1, 3))],
        };
        assert!(cross_section_test(&s));
        let s = Spectrum {
            values: leech_values().iter().map(|&q| q.into()).collect(),
        };
        assert!(!cross_section_test(&s));
    }

    #[test]
    fn report_rendering() {
        let c = small(vec![vec![2, 2], vec![2, -2]], &[1, 1], 1);
        let text = validate(&c).unwrap().to_string();
        assert!(text.contains("vectors        2"));
        assert!(text.contains("max inner      0"));
        assert!(text.ends_with("verdict        valid"));
    }
}
