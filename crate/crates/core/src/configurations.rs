//! Builders for the kissing configurations in dimensions 16 through 21.
//!
//! Every coordinate is stored as an integer `a` with a per-coordinate
//! square-free tag `m` and a configuration-wide scale `s`, standing for
//! `a * sqrt(m) / s`. Squared norms are all exactly 8.

use std::cmp::Ordering;
use std::fmt;
use std::sync::Arc;

use thiserror::Error;

use crate::binary_codes::{
    chain_code, min_distance, mutually_orthogonal, shortened_steiner, BinaryCode, BinaryWord,
    CodeError,
};
use crate::exact_arith::{is_squarefree, squarefree_decompose, ArithError, ExtendedValue, Rational};
use crate::grid_codes::{
    build_c10, build_c6, build_c8, classify_word, disjoint_192_subcodes, orbit_decomposition,
    GridError, GridWord, WordClass,
};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ConfigError {
    #[error("bad code parameters: {0}")]
    BadCodeParameters(String),
    #[error("chain subcode invalid: {0}")]
    ChainInvalid(String),
    #[error("construction invalid: {0}")]
    ConstructionInvalid(String),
    #[error("hole candidates come from different contexts")]
    MixedContext,
    #[error("unknown configuration {0:?}")]
    UnknownName(String),
    #[error("inconsistent vectors: {0}")]
    Inconsistent(String),
    #[error(transparent)]
    Code(#[from] CodeError),
    #[error(transparent)]
    Grid(#[from] GridError),
    #[error(transparent)]
    Arith(#[from] ArithError),
}

pub type Result<T> = std::result::Result<T, ConfigError>;

/// A vector with coordinates `coords[i] * sqrt(tags[i]) / scale`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct ExactScaledVector {
    pub coords: Vec<i64>,
    pub tags: Arc<[u64]>,
    pub scale: u64,
}

impl ExactScaledVector {
    pub fn new(coords: Vec<i64>, tags: Arc<[u64]>, scale: u64) -> Result<Self> {
        if coords.len() != tags.len() {
            return Err(ConfigError::Inconsistent(format!(
                "{} coordinates but {} tags",
                coords.len(),
                tags.len()
            )));
        }
        if scale == 0 {
            return Err(ConfigError::Inconsistent("scale 0".into()));
        }
        if let Some(&m) = tags.iter().find(|&&m| m == 0 || !is_squarefree(m)) {
            return Err(ConfigError::Inconsistent(format!("tag {m} is not square-free")));
        }
        Ok(ExactScaledVector { coords, tags, scale })
    }

    pub fn dimension(&self) -> usize {
        self.coords.len()
    }

    /// `sum coords[i]^2 * tags[i]` (the squared norm times scale^2).
    pub fn norm_numerator(&self) -> i128 {
        self.coords
            .iter()
            .zip(self.tags.iter())
            .map(|(&a, &m)| i128::from(a) * i128::from(a) * i128::from(m))
            .sum()
    }

    pub fn squared_norm(&self) -> Rational {
        let s = i128::from(self.scale);
        Rational::frac(self.norm_numerator(), s * s)
    }

    /// Exact inner product; both vectors must share dimension and scale.
    pub fn inner_product(&self, other: &Self) -> Result<ExtendedValue> {
        if self.dimension() != other.dimension() || self.scale != other.scale {
            return Err(ConfigError::Inconsistent("dimension or scale differs".into()));
        }
        let (mut p, mut q, mut radicand) = (0i128, 0i128, 1u64);
        for i in 0..self.dimension() {
            let ab = i128::from(self.coords[i]) * i128::from(other.coords[i]);
            if ab == 0 {
                continue;
            }
            let (f, r) = squarefree_decompose(self.tags[i] * other.tags[i]);
            let term = ab * i128::from(f);
            if r == 1 {
                p += term;
            } else if radicand == 1 || radicand == r {
                radicand = r;
                q += term;
            } else {
                return Err(ArithError::IncompatibleRadicands(radicand, r).into());
            }
        }
        let s2 = i128::from(self.scale) * i128::from(self.scale);
        Ok(ExtendedValue::new(
            Rational::new(p, s2)?,
            Rational::new(q, s2)?,
            radicand,
        )?)
    }

    pub fn to_f64(&self) -> Vec<f64> {
        self.coords
            .iter()
            .zip(self.tags.iter())
            .map(|(&a, &m)| a as f64 * (m as f64).sqrt() / self.scale as f64)
            .collect()
    }

    fn sort_key(&self) -> (&[u64], &[i64]) {
        (&self.tags, &self.coords)
    }
}

impl Ord for ExactScaledVector {
    fn cmp(&self, other: &Self) -> Ordering {
        self.sort_key()
            .cmp(&other.sort_key())
            .then(self.scale.cmp(&other.scale))
    }
}

impl PartialOrd for ExactScaledVector {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct KissingConfiguration {
    pub label: String,
    pub dimension: usize,
    pub scale: u64,
    pub vectors: Vec<ExactScaledVector>,
    /// The single square-free radicand that may appear in inner products
    /// (1 when all inner products are rational).
    pub mixed_radicand: u64,
}

impl KissingConfiguration {
    /// Sorts the vectors and derives dimension, scale and the mixed
    /// radicand, rejecting vectors that do not share one extension.
    pub fn new(label: impl Into<String>, mut vectors: Vec<ExactScaledVector>) -> Result<Self> {
        let label = label.into();
        let (dimension, scale) = vectors
            .first()
            .map_or((0, 1), |v| (v.dimension(), v.scale));
        if let Some(v) = vectors
            .iter()
            .find(|v| v.dimension() != dimension || v.scale != scale)
        {
            return Err(ConfigError::Inconsistent(format!(
                "vector of dimension {} scale {} among dimension {dimension} scale {scale}",
                v.dimension(),
                v.scale
            )));
        }
        vectors.sort();
        let mut layouts: Vec<Arc<[u64]>> = Vec::new();
        for v in &vectors {
            if !layouts.iter().any(|l| **l == *v.tags) {
                layouts.push(v.tags.clone());
            }
        }
        let mut radicand = 1u64;
        for a in &layouts {
            for b in &layouts {
                for (x, y) in a.iter().zip(b.iter()) {
                    let (_, r) = squarefree_decompose(x * y);
                    if r == 1 || r == radicand {
                        continue;
                    }
                    if radicand != 1 {
                        return Err(ConfigError::Inconsistent(format!(
                            "inner products need both sqrt({radicand}) and sqrt({r})"
                        )));
                    }
                    radicand = r;
                }
            }
        }
        Ok(KissingConfiguration {
            label,
            dimension,
            scale,
            vectors,
            mixed_radicand: radicand,
        })
    }

    pub fn len(&self) -> usize {
        self.vectors.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vectors.is_empty()
    }
}

impl fmt::Display for KissingConfiguration {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{}: {} vectors in dimension {} (scale {}, radicand {})",
            self.label,
            self.len(),
            self.dimension,
            self.scale,
            self.mixed_radicand
        )
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Parity {
    Even,
    Odd,
}

impl Parity {
    fn bit(self) -> u32 {
        match self {
            Parity::Even => 0,
            Parity::Odd => 1,
        }
    }
}

fn uniform_tags(n: usize, m: u64) -> Arc<[u64]> {
    vec![m; n].into()
}

fn positions(support: u32) -> Vec<usize> {
    (0..32).filter(|&p| support >> p & 1 == 1).collect()
}

/// All sign patterns of `value` on `support` with minus-sign count of the
/// given parity, as full coordinate vectors of length `n`.
fn signed_patterns(n: usize, support: u32, parity: Parity, value: i64) -> Vec<Vec<i64>> {
    let pos = positions(support);
    (0..1u32 << pos.len())
        .filter(|m| m.count_ones() % 2 == parity.bit())
        .map(|m| {
            let mut v = vec![0i64; n];
            for (k, &p) in pos.iter().enumerate() {
                v[p] = if m >> k & 1 == 1 { -value } else { value };
            }
            v
        })
        .collect()
}

/// The `4 C(n,2)` vectors with two entries `±value`.
fn two_coordinate_vectors(n: usize, value: i64) -> Vec<Vec<i64>> {
    let mut out = Vec::with_capacity(2 * n * (n - 1));
    for p in 0..n {
        for q in p + 1..n {
            for a in [value, -value] {
                for b in [value, -value] {
                    let mut v = vec![0i64; n];
                    v[p] = a;
                    v[q] = b;
                    out.push(v);
                }
            }
        }
    }
    out
}

fn check_codeword_parameters(n: usize, code: &BinaryCode) -> Result<()> {
    if !(16..=24).contains(&n) || code.length() != n {
        return Err(ConfigError::BadCodeParameters(format!(
            "code of length {} for n = {n}",
            code.length()
        )));
    }
    if let Some(w) = code.words().iter().find(|w| w.count_ones() != 8) {
        return Err(ConfigError::BadCodeParameters(format!(
            "word {w:b} does not have weight 8"
        )));
    }
    if code.len() > 1 && min_distance(code)? < 8 {
        return Err(ConfigError::BadCodeParameters("minimum distance below 8".into()));
    }
    Ok(())
}

fn codeword_vectors(
    n: usize,
    code: &BinaryCode,
    parity: Parity,
    scale: u64,
) -> Result<Vec<ExactScaledVector>> {
    check_codeword_parameters(n, code)?;
    let tags = uniform_tags(n, 1);
    let s = scale as i64;
    let mut coords = two_coordinate_vectors(n, 2 * s);
    for &w in code.words() {
        coords.extend(signed_patterns(n, w, parity, s));
    }
    coords
        .into_iter()
        .map(|c| ExactScaledVector::new(c, tags.clone(), scale))
        .collect()
}

/// The `4 C(n,2) + 128 |C|` vectors of norm 8 from a constant-weight-8 code
/// with minimum distance 8.
pub fn build_codeword_config(
    n: usize,
    code: &BinaryCode,
    parity: Parity,
) -> Result<KissingConfiguration> {
    let label = format!("codeword-{n}-{}", parity_name(parity));
    KissingConfiguration::new(label, codeword_vectors(n, code, parity, 1)?)
}

fn parity_name(p: Parity) -> &'static str {
    match p {
        Parity::Even => "even",
        Parity::Odd => "odd",
    }
}

/// Hole radicand and integer coordinate magnitude at scale `n`:
/// `sqrt(8/n) = f * sqrt(m) * 2 / n` with `f^2 m = 2n`.
pub fn hole_layout(n: usize) -> (u64, i64) {
    let (f, m) = squarefree_decompose(2 * n as u64);
    (m, 2 * f as i64)
}

/// `v_i = (-1)^{c_i} sqrt(8/n)`, at scale `n`.
pub fn hole_vector(n: usize, c: BinaryWord) -> ExactScaledVector {
    let (m, mag) = hole_layout(n);
    let coords = (0..n).map(|i| if c.bit(i) { -mag } else { mag }).collect();
    ExactScaledVector::new(coords, uniform_tags(n, m), n as u64).expect("hole layout is valid")
}

/// Odd-parity base (at scale `n`) plus one hole vector per word of the
/// Golay chain code of length `n`.
pub fn build_record_19_20_21(n: usize) -> Result<KissingConfiguration> {
    if !(19..=21).contains(&n) {
        return Err(ConfigError::BadCodeParameters(format!("no record for n = {n}")));
    }
    let steiner = shortened_steiner(n)?;
    let chain = chain_code(n).ok_or_else(|| ConfigError::ChainInvalid(format!("no chain code of length {n}")))?;
    if !mutually_orthogonal(&chain, &steiner) {
        return Err(ConfigError::ChainInvalid("chain code not orthogonal to the octads".into()));
    }
    let d = min_distance(&chain)? as usize;
    if 4 * d < n {
        return Err(ConfigError::ChainInvalid(format!("minimum distance {d} below n/4")));
    }
    let mut vectors = codeword_vectors(n, &steiner, Parity::Odd, n as u64)?;
    vectors.extend(chain.iter().map(|c| hole_vector(n, c)));
    KissingConfiguration::new(format!("dim{n}-record"), vectors)
}

/// Even-parity base, the configuration the records improve on.
pub fn build_leech_19_20_21(n: usize) -> Result<KissingConfiguration> {
    let steiner = shortened_steiner(n)?;
    KissingConfiguration::new(
        format!("dim{n}-leech"),
        codeword_vectors(n, &steiner, Parity::Even, n as u64)?,
    )
}

fn grid_supports(classes: &[WordClass]) -> Vec<GridWord> {
    build_c6()
        .words()
        .filter(|&w| classes.contains(&classify_word(w)))
        .collect()
}

/// Grid vectors of the sixteen-dimensional configuration at `scale`, as
/// 16-entry coordinate lists.
fn dim16_coords(parity: Parity, scale: u64) -> Vec<Vec<i64>> {
    let s = scale as i64;
    let mut coords = two_coordinate_vectors(16, 2 * s);
    for w in grid_supports(&[WordClass::Pair, WordClass::Square]) {
        coords.extend(signed_patterns(16, u32::from(w.0), parity, s));
    }
    coords
}

fn padded(mut v: Vec<i64>, tail: &[i64]) -> Vec<i64> {
    v.extend_from_slice(tail);
    v
}

fn assemble(
    label: &str,
    coords: Vec<Vec<i64>>,
    tags: &[u64],
    scale: u64,
) -> Result<KissingConfiguration> {
    let tags: Arc<[u64]> = tags.into();
    let vectors = coords
        .into_iter()
        .map(|c| ExactScaledVector::new(c, tags.clone(), scale))
        .collect::<Result<Vec<_>>>()?;
    KissingConfiguration::new(label, vectors)
}

/// 480 two-coordinate vectors plus 3840 sign patterns on the pair and
/// square words of C6.
pub fn build_dim16(parity: Parity) -> Result<KissingConfiguration> {
    let label = format!("dim16-{}", parity_name(parity));
    assemble(&label, dim16_coords(parity, 1), &[1; 16], 1)
}

const DIM17_TAGS: [u64; 17] = [1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 2];
const DIM18_TAGS: [u64; 18] = [1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 1, 2, 6];

/// The 5346 odd vectors at `scale`: the 16-dimensional ones, crosses with
/// odd signs and 17th coordinate `±sqrt(2)`, and `(0, ±sqrt(8))`.
fn dim17_base_coords(scale: u64) -> Vec<Vec<i64>> {
    let s = scale as i64;
    let mut coords: Vec<Vec<i64>> = dim16_coords(Parity::Odd, scale)
        .into_iter()
        .map(|v| padded(v, &[0]))
        .collect();
    for w in grid_supports(&[WordClass::Cross]) {
        for v in signed_patterns(16, u32::from(w.0), Parity::Odd, s) {
            coords.push(padded(v.clone(), &[s]));
            coords.push(padded(v, &[-s]));
        }
    }
    for t in [2 * s, -2 * s] {
        coords.push(padded(vec![0; 16], &[t]));
    }
    coords
}

/// Grid part `(-1)^{c_i} * 2/3` at scale `scale` (a multiple of 3).
fn hole_grid(c: GridWord, scale: u64) -> Vec<i64> {
    let mag = 2 * scale as i64 / 3;
    (0..16).map(|p| if c.0 >> p & 1 == 1 { -mag } else { mag }).collect()
}

pub fn build_dim17_base() -> Result<KissingConfiguration> {
    assemble("dim17-base", dim17_base_coords(3), &DIM17_TAGS, 3)
}

/// The 5346 base plus `(c, +sqrt(8)/3)` for `c` in the first distance-6
/// subcode and `(c, -sqrt(8)/3)` for `c` in the second.
pub fn build_dim17_record() -> Result<KissingConfiguration> {
    let table = orbit_decomposition()?;
    let (first, second) = disjoint_192_subcodes(&table)?;
    let mut coords = dim17_base_coords(3);
    // sqrt(8)/3 = 2 sqrt(2) / 3.
    for (code, t) in [(&first, 2), (&second, -2)] {
        for c in code.words() {
            coords.push(padded(hole_grid(c, 3), &[t]));
        }
    }
    assemble("dim17-record", coords, &DIM17_TAGS, 3)
}

/// Context a hole candidate is drawn from.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum HoleContext {
    /// Words of C10 with 17th coordinate `sign * sqrt(8)/3`.
    Grid17,
    /// Words of the length-`n` chain code, as hole vectors.
    Chain(usize),
}

/// A candidate hole `(c, sign)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct HoleCandidate {
    pub context: HoleContext,
    pub codeword: u32,
    pub sign: i8,
}

impl HoleCandidate {
    pub fn grid(c: GridWord, sign: i8) -> HoleCandidate {
        HoleCandidate {
            context: HoleContext::Grid17,
            codeword: u32::from(c.0),
            sign,
        }
    }

    pub fn chain(n: usize, c: BinaryWord) -> HoleCandidate {
        HoleCandidate {
            context: HoleContext::Chain(n),
            codeword: c.bits(),
            sign: 1,
        }
    }

    /// Checks the codeword lies in the ambient code of its context.
    pub fn validate(&self) -> Result<()> {
        let ok = match self.context {
            HoleContext::Grid17 => {
                u16::try_from(self.codeword).is_ok_and(|w| build_c10().contains(GridWord(w)))
            }
            HoleContext::Chain(n) => chain_code(n).is_some_and(|c| c.contains(self.codeword)),
        };
        if ok && (self.sign == 1 || self.sign == -1) {
            Ok(())
        } else {
            Err(ConfigError::ConstructionInvalid(format!("candidate {self:?} outside its code")))
        }
    }

    pub fn vector(&self) -> ExactScaledVector {
        match self.context {
            HoleContext::Grid17 => {
                let grid = hole_grid(GridWord(self.codeword as u16), 3);
                ExactScaledVector::new(
                    padded(grid, &[2 * i64::from(self.sign)]),
                    DIM17_TAGS.as_slice().into(),
                    3,
                )
                .expect("valid layout")
            }
            HoleContext::Chain(n) => {
                hole_vector(n, BinaryWord::new(self.codeword, n).expect("fits in n bits"))
            }
        }
    }
}

/// Combinatorial compatibility rule for two candidates (`true` when their
/// inner product is at most 4).
pub fn hole_compatibility(a: &HoleCandidate, b: &HoleCandidate) -> Result<bool> {
    if a.context != b.context {
        return Err(ConfigError::MixedContext);
    }
    let d = (a.codeword ^ b.codeword).count_ones() as usize;
    Ok(match a.context {
        HoleContext::Grid17 => {
            if a.codeword == b.codeword {
                false
            } else {
                a.sign != b.sign || d > 4
            }
        }
        HoleContext::Chain(n) => a.codeword != b.codeword && 4 * d >= n,
    })
}

/// The set `A` or `B` grid supports: the 16 cyclic row/column shifts of
/// `base`, asserted distinct.
fn rotations(base: GridWord) -> Result<Vec<GridWord>> {
    let mut out: Vec<GridWord> = (0..4)
        .flat_map(|dr| (0..4).map(move |dc| (dr, dc)))
        .map(|(dr, dc)| {
            let mut w = 0u16;
            for p in base.support() {
                let (r, c) = (p / 4, p % 4);
                w |= 1 << (4 * ((r + dr) % 4) + (c + dc) % 4);
            }
            GridWord(w)
        })
        .collect();
    out.sort_unstable();
    out.dedup();
    if out.len() != 16 {
        return Err(ConfigError::ConstructionInvalid(format!(
            "{} distinct rotations, expected 16",
            out.len()
        )));
    }
    Ok(out)
}

pub const DIM18_A_BASE: GridWord = GridWord::from_rows(["0000", "1100", "1010", "1001"]);
pub const DIM18_B_BASE: GridWord = GridWord::from_rows(["1110", "0010", "0100", "1000"]);
pub const DIM18_PARITY: GridWord = GridWord::from_rows(["1100", "1100", "0000", "0000"]);

/// Dimension 18 at scale 6: the 5346 odd vectors, `(0, ±sqrt 2, ±sqrt 6)`,
/// and the A and B families with tails `±(sqrt 2/2, sqrt 6/2)` and
/// `±(sqrt 2/2, -sqrt 6/2)`.
fn dim18_base_coords() -> Result<Vec<Vec<i64>>> {
    let s = 6i64;
    let mut coords: Vec<Vec<i64>> = dim17_base_coords(6)
        .into_iter()
        .map(|v| padded(v, &[0]))
        .collect();
    for a in [s, -s] {
        for b in [s, -s] {
            coords.push(padded(vec![0; 16], &[a, b]));
        }
    }
    let half = s / 2;
    for (base, tails) in [
        (DIM18_A_BASE, [[half, half], [-half, -half]]),
        (DIM18_B_BASE, [[half, -half], [-half, half]]),
    ] {
        for w in rotations(base)? {
            for v in signed_patterns(16, u32::from(w.0), Parity::Odd, s) {
                for t in &tails {
                    coords.push(padded(v.clone(), t));
                }
            }
        }
    }
    Ok(coords)
}

pub fn build_dim18_base() -> Result<KissingConfiguration> {
    assemble("dim18-base", dim18_base_coords()?, &DIM18_TAGS, 6)
}

/// The base plus `(c, (-1)^{<c,v>} sqrt(8)/3, 0)` for every `c` in C8.
pub fn build_dim18_record() -> Result<KissingConfiguration> {
    let mut coords = dim18_base_coords()?;
    for c in build_c8().words() {
        // sqrt(8)/3 = 4 sqrt(2) / 6.
        let t = if c.dot(DIM18_PARITY) { -4 } else { 4 };
        coords.push(padded(hole_grid(c, 6), &[t, 0]));
    }
    assemble("dim18-record", coords, &DIM18_TAGS, 6)
}

/// Registry names accepted by [`build_named`].
pub const REGISTRY: [&str; 12] = [
    "dim16-even",
    "dim16-odd",
    "dim17-base",
    "dim17-record",
    "dim18-base",
    "dim18-record",
    "dim19-record",
    "dim20-record",
    "dim21-record",
    "dim19-leech",
    "dim20-leech",
    "dim21-leech",
];

pub fn build_named(name: &str) -> Result<KissingConfiguration> {
    match name {
        "dim16-even" => build_dim16(Parity::Even),
        "dim16-odd" => build_dim16(Parity::Odd),
        "dim17-base" => build_dim17_base(),
        "dim17-record" => build_dim17_record(),
        "dim18-base" => build_dim18_base(),
        "dim18-record" => build_dim18_record(),
        "dim19-record" => build_record_19_20_21(19),
        "dim20-record" => build_record_19_20_21(20),
        "dim21-record" => build_record_19_20_21(21),
        "dim19-leech" => build_leech_19_20_21(19),
        "dim20-leech" => build_leech_19_20_21(20),
        "dim21-leech" => build_leech_19_20_21(21),
        _ => Err(ConfigError::UnknownName(name.to_string())),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::collections::HashSet;

    fn all_norms_eight(c: &KissingConfiguration) -> bool {
        c.vectors.iter().all(|v| v.squared_norm() == Rational::integer(8))
    }

    fn distinct(c: &KissingConfiguration) -> bool {
        c.vectors.iter().collect::<HashSet<_>>().len() == c.len()
    }

    #[test]
    fn codeword_config_sizes() {
        let table2 = [
            (16, 30, 4320),
            (17, 30, 4384),
            (18, 46, 6500),
            (19, 78, 10668),
            (20, 130, 17400),
            (21, 210, 27720),
            (22, 330, 43164),
            (23, 506, 65780),
            (24, 759, 98256),
        ];
        for (n, words, size) in table2 {
            let code = shortened_steiner(n).unwrap();
            assert_eq!(code.len(), words, "n = {n}");
            let c = build_codeword_config(n, &code, Parity::Odd).unwrap();
            assert_eq!(c.len(), size, "n = {n}");
        }
    }

    #[test]
    fn codeword_config_rejects_bad_codes() {
        let code = BinaryCode::from_words(16, [0b1111]).unwrap();
        assert!(matches!(
            build_codeword_config(16, &code, Parity::Even),
            Err(ConfigError::BadCodeParameters(_))
        ));
        let code = BinaryCode::from_words(16, [0xFF, 0x1FE]).unwrap();
        assert!(matches!(
            build_codeword_config(16, &code, Parity::Even),
            Err(ConfigError::BadCodeParameters(_))
        ));
    }

    #[test]
    fn hole_vectors() {
        for n in 19..=21 {
            let zero = BinaryWord::new(0, n).unwrap();
            let v = hole_vector(n, zero);
            assert_eq!(v.squared_norm(), Rational::integer(8));
            for d in [0, 3, 5, 9] {
                let w = hole_vector(n, BinaryWord::new((1 << d) - 1, n).unwrap());
                let ip = v.inner_product(&w).unwrap();
                let expected = Rational::frac(8 * (n as i128 - 2 * d as i128), n as i128);
                assert_eq!(ip, ExtendedValue::from_rational(expected));
            }
        }
        assert_eq!(hole_layout(19), (38, 2));
        assert_eq!(hole_layout(20), (10, 4));
        assert_eq!(hole_layout(21), (42, 2));
    }

    #[test]
    fn hole_against_odd_codeword_is_bounded() {
        // Support positions 0..8, signs agreeing with c except one.
        let n = 19;
        let h = hole_vector(n, BinaryWord::new(0, n).unwrap());
        let mut coords = vec![0i64; n];
        for x in coords.iter_mut().take(8) {
            *x = n as i64;
        }
        coords[0] = -(n as i64);
        let w = ExactScaledVector::new(coords, uniform_tags(n, 1), n as u64).unwrap();
        let ip = w.inner_product(&h).unwrap();
        // 6 sqrt(8/19) = (12/19) sqrt(38).
        assert_eq!(ip, ExtendedValue::new(Rational::ZERO, Rational::frac(12, 19), 38).unwrap());
    }

    #[test]
    fn records_19_to_21_sizes() {
        for (n, size) in [(19, 11692), (20, 19448), (21, 29768)] {
            let c = build_record_19_20_21(n).unwrap();
            assert_eq!(c.len(), size);
            assert!(all_norms_eight(&c));
            assert_eq!(c.mixed_radicand, hole_layout(n).0);
            assert_eq!(build_leech_19_20_21(n).unwrap().len(), size - chain_code(n).unwrap().len());
        }
        assert!(build_record_19_20_21(18).is_err());
    }

    #[test]
    fn dim16_variants() {
        let odd = build_dim16(Parity::Odd).unwrap();
        let even = build_dim16(Parity::Even).unwrap();
        assert_eq!((odd.len(), even.len()), (4320, 4320));
        assert_ne!(odd.vectors, even.vectors);
        assert!(all_norms_eight(&odd) && distinct(&odd) && distinct(&even));
        let supports = grid_supports(&[WordClass::Pair, WordClass::Square]);
        assert_eq!(supports.len(), 30);
    }

    #[test]
    fn dim17_sizes_and_norms() {
        let base = build_dim17_base().unwrap();
        assert_eq!(base.len(), 5346);
        let rec = build_dim17_record().unwrap();
        assert_eq!(rec.len(), 5730);
        assert!(all_norms_eight(&rec) && distinct(&rec));
        assert_eq!(rec.mixed_radicand, 1);
        let crosses = base.vectors.iter().filter(|v| v.coords[16].abs() == 3).count();
        assert_eq!(crosses, 1024);
    }

    #[test]
    fn same_codeword_opposite_signs() {
        let c = GridWord::from_rows(["1100", "1100", "0000", "0000"]);
        let a = HoleCandidate::grid(c, 1);
        let b = HoleCandidate::grid(c, -1);
        assert!(!hole_compatibility(&a, &b).unwrap());
        let ip = a.vector().inner_product(&b.vector()).unwrap();
        assert_eq!(ip, ExtendedValue::from_rational(Rational::frac(56, 9)));
        let chain = HoleCandidate::chain(19, BinaryWord::new(0, 19).unwrap());
        assert_eq!(hole_compatibility(&a, &chain), Err(ConfigError::MixedContext));
        assert!(a.validate().is_ok() && chain.validate().is_ok());
        assert!(HoleCandidate::grid(GridWord(1), 1).validate().is_err());
    }

    #[test]
    fn compatibility_rule_matches_inner_products_in_dim17() {
        let words: Vec<GridWord> = build_c10().words().collect();
        let cands: Vec<HoleCandidate> = words
            .iter()
            .flat_map(|&w| [HoleCandidate::grid(w, 1), HoleCandidate::grid(w, -1)])
            .collect();
        let vecs: Vec<ExactScaledVector> = cands.iter().map(HoleCandidate::vector).collect();
        let four = Rational::integer(4);
        for i in 0..cands.len() {
            for j in i + 1..cands.len() {
                let ip = vecs[i].inner_product(&vecs[j]).unwrap();
                let exact = crate::exact_arith::compare_extended(&ip, four) != Ordering::Greater;
                assert_eq!(hole_compatibility(&cands[i], &cands[j]).unwrap(), exact);
            }
        }
    }

    #[test]
    fn dim18_sizes_and_norms() {
        assert_eq!(rotations(DIM18_A_BASE).unwrap().len(), 16);
        assert_eq!(rotations(DIM18_B_BASE).unwrap().len(), 16);
        let base = build_dim18_base().unwrap();
        assert_eq!(base.len(), 7398);
        let families = base
            .vectors
            .iter()
            .filter(|v| v.coords[16].abs() == 3)
            .count();
        assert_eq!(families, 2048);
        let rec = build_dim18_record().unwrap();
        assert_eq!(rec.len(), 7654);
        assert!(all_norms_eight(&rec) && distinct(&rec));
        let added: Vec<_> = rec.vectors.iter().filter(|v| v.coords[16].abs() == 4).collect();
        assert_eq!(added.len(), 256);
        assert!(added.iter().all(|v| v.coords[17] == 0));
    }

    #[test]
    fn registry_is_complete() {
        assert!(matches!(build_named("nonexistent"), Err(ConfigError::UnknownName(_))));
        for name in ["dim16-even", "dim17-base"] {
            assert_eq!(build_named(name).unwrap().label, name);
        }
    }

    #[test]
    fn vectors_are_sorted() {
        let c = build_record_19_20_21(19).unwrap();
        assert!(c.vectors.windows(2).all(|w| w[0] < w[1]));
        assert!(c.vectors.first().unwrap().tags.iter().all(|&m| m == 1));
        assert!(c.vectors.last().unwrap().tags.iter().all(|&m| m == 38));
    }
}
