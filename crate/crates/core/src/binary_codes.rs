//! Binary codes of block length at most 24.
//!
//! Words are `u32` bit vectors with coordinate 0 in the least significant
//! bit. "Last coordinate" always means the highest index.

use std::fmt;

use rayon::prelude::*;
use thiserror::Error;

pub const MAX_LENGTH: usize = 24;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CodeError {
    #[error("position {position} out of range for length {length}")]
    PositionOutOfRange { position: usize, length: usize },
    #[error("code has {0} words; at least two are needed")]
    TooFewWords(usize),
    #[error("block {word:#b} has weight {weight}, expected {expected}")]
    NonConstantWeight { word: u32, weight: u32, expected: u32 },
    #[error("operation requires a linear code")]
    NotLinear,
    #[error("invalid length {0}; must be in 1..=24")]
    BadLength(usize),
    #[error("word {word:#b} does not fit in length {length}")]
    WordTooLong { word: u32, length: usize },
}

pub type Result<T> = std::result::Result<T, CodeError>;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct BinaryWord {
    bits: u32,
    length: u8,
}

impl BinaryWord {
    pub fn new(bits: u32, length: usize) -> Result<Self> {
        check_length(length)?;
        if bits & !mask(length) != 0 {
            return Err(CodeError::WordTooLong { word: bits, length });
        }
        Ok(BinaryWord {
            bits,
            length: length as u8,
        })
    }

    pub fn bits(&self) -> u32 {
        self.bits
    }

    pub fn len(&self) -> usize {
        usize::from(self.length)
    }

    pub fn is_empty(&self) -> bool {
        self.length == 0
    }

    pub fn weight(&self) -> u32 {
        self.bits.count_ones()
    }

    pub fn bit(&self, i: usize) -> bool {
        (self.bits >> i) & 1 == 1
    }

    pub fn distance(&self, other: &BinaryWord) -> u32 {
        (self.bits ^ other.bits).count_ones()
    }

    /// Inner product mod 2.
    pub fn dot(&self, other: &BinaryWord) -> bool {
        (self.bits & other.bits).count_ones() % 2 == 1
    }
}

impl fmt::Display for BinaryWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_bits(f, self.bits, self.len())
    }
}

fn write_bits(f: &mut impl fmt::Write, bits: u32, length: usize) -> fmt::Result {
    for i in (0..length).rev() {
        f.write_char(if (bits >> i) & 1 == 1 { '1' } else { '0' })?;
    }
    Ok(())
}

fn check_length(length: usize) -> Result<()> {
    if length == 0 || length > MAX_LENGTH {
        return Err(CodeError::BadLength(length));
    }
    Ok(())
}

pub(crate) fn mask(length: usize) -> u32 {
    if length >= 32 {
        u32::MAX
    } else {
        (1u32 << length) - 1
    }
}

/// Reduces `gens` to a basis in reduced row-echelon form (pivot = highest
/// set bit of each row, pivots cleared from every other row).
pub(crate) fn echelon_basis(gens: impl IntoIterator<Item = u32>) -> Vec<u32> {
    let mut basis: Vec<u32> = Vec::new();
    for g in gens {
        let mut x = g;
        for &b in &basis {
            x = x.min(x ^ b);
        }
        if x != 0 {
            // Keep the basis fully reduced against the new pivot.
            let pivot = 1u32 << (31 - x.leading_zeros());
            for b in basis.iter_mut() {
                if *b & pivot != 0 {
                    *b ^= x;
                }
            }
            basis.push(x);
            basis.sort_unstable_by(|a, b| b.cmp(a));
        }
    }
    basis
}

pub(crate) fn span(basis: &[u32]) -> Vec<u32> {
    let mut words = vec![0u32];
    for &b in basis {
        let extra: Vec<u32> = words.iter().map(|w| w ^ b).collect();
        words.extend(extra);
    }
    words.sort_unstable();
    words
}

fn delete_coordinate(word: u32, position: usize) -> u32 {
    let low = word & mask(position);
    let high = (word >> (position + 1)) << position;
    low | high
}

/// A fixed-length binary code, stored as a sorted duplicate-free word list.
/// Linear codes also carry a basis.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BinaryCode {
    length: usize,
    words: Vec<u32>,
    basis: Option<Vec<u32>>,
}

impl BinaryCode {
    /// An unstructured code from explicit words.
    pub fn from_words(length: usize, words: impl IntoIterator<Item = u32>) -> Result<Self> {
        check_length(length)?;
        let m = mask(length);
        let mut words: Vec<u32> = words.into_iter().collect();
        if let Some(&w) = words.iter().find(|&&w| w & !m != 0) {
            return Err(CodeError::WordTooLong { word: w, length });
        }
        words.sort_unstable();
        words.dedup();
        Ok(BinaryCode {
            length,
            words,
            basis: None,
        })
    }

    /// The linear span of `generators`.
    pub fn linear_span(length: usize, generators: impl IntoIterator<Item = u32>) -> Result<Self> {
        check_length(length)?;
        let m = mask(length);
        let gens: Vec<u32> = generators.into_iter().collect();
        if let Some(&w) = gens.iter().find(|&&w| w & !m != 0) {
            return Err(CodeError::WordTooLong { word: w, length });
        }
        let basis = echelon_basis(gens);
        Ok(BinaryCode {
            length,
            words: span(&basis),
            basis: Some(basis),
        })
    }

    pub fn length(&self) -> usize {
        self.length
    }

    pub fn len(&self) -> usize {
        self.words.len()
    }

    pub fn is_empty(&self) -> bool {
        self.words.is_empty()
    }

    pub fn is_linear(&self) -> bool {
        self.basis.is_some()
    }

    pub fn basis(&self) -> Option<&[u32]> {
        self.basis.as_deref()
    }

    pub fn dimension(&self) -> Option<usize> {
        self.basis.as_ref().map(Vec::len)
    }

    pub fn words(&self) -> &[u32] {
        &self.words
    }

    pub fn iter(&self) -> impl Iterator<Item = BinaryWord> + '_ {
        let length = self.length as u8;
        self.words.iter().map(move |&bits| BinaryWord { bits, length })
    }

    pub fn contains(&self, word: u32) -> bool {
        self.words.binary_search(&word).is_ok()
    }

    pub fn is_subset_of(&self, other: &BinaryCode) -> bool {
        self.length == other.length && self.words.iter().all(|&w| other.contains(w))
    }

    /// Number of words of each weight `0..=length`.
    pub fn weight_distribution(&self) -> Vec<usize> {
        let mut dist = vec![0; self.length + 1];
        for w in &self.words {
            dist[w.count_ones() as usize] += 1;
        }
        dist
    }

    /// Checks closure under addition directly on the word set.
    pub fn is_closed_under_addition(&self) -> bool {
        self.contains(0)
            && self
                .words
                .par_iter()
                .all(|&a| self.words.iter().all(|&b| self.contains(a ^ b)))
    }
}

impl fmt::Display for BinaryCode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(
            f,
            "length {} count {} linear {}",
            self.length,
            self.words.len(),
            u8::from(self.is_linear())
        )?;
        for &w in &self.words {
            write_bits(f, w, self.length)?;
            writeln!(f)?;
        }
        Ok(())
    }
}

/// Complement of the icosahedron's adjacency matrix (with ones on the
/// diagonal). Vertex 0 is the top, 1..=5 the upper ring, 6..=10 the lower
/// ring and 11 the bottom.
fn icosahedron_complement() -> [u32; 12] {
    let mut adj = [[false; 12]; 12];
    let mut join = |a: usize, b: usize| {
        adj[a][b] = true;
        adj[b][a] = true;
    };
    for i in 0..5 {
        let up = 1 + i;
        let up_next = 1 + (i + 1) % 5;
        let low = 6 + i;
        let low_next = 6 + (i + 1) % 5;
        join(0, up);
        join(11, low);
        join(up, up_next);
        join(low, low_next);
        join(up, low);
        join(up, low_next);
    }
    let mut rows = [0u32; 12];
    for (r, row) in rows.iter_mut().enumerate() {
        for (c, &a) in adj[r].iter().enumerate() {
            if !a {
                *row |= 1 << c;
            }
        }
    }
    rows
}

fn swap_bits(word: u32, i: usize, j: usize) -> u32 {
    if ((word >> i) ^ (word >> j)) & 1 == 1 {
        word ^ (1 << i) ^ (1 << j)
    } else {
        word
    }
}

/// The rows of the generator matrix `[I | A]` of the extended Golay code,
/// with `A` the icosahedron complement in coordinates 12..24, after
/// relabelling so that coordinates 16..24 carry an octad.
///
/// Shortening the octads down to length 16 keeps 30 words at lengths 17
/// and 16 only when the deleted coordinates lie in a common octad.
pub fn golay_generator_rows() -> [u32; 12] {
    let a = icosahedron_complement();
    let mut rows = [0u32; 12];
    for (i, row) in rows.iter_mut().enumerate() {
        *row = (1 << i) | (a[i] << 12);
    }
    let top: u32 = 0b11111 << 19;
    let octad = span(&echelon_basis(rows))
        .into_iter()
        .find(|w| w.count_ones() == 8 && w & top == top)
        .expect("five points lie in exactly one octad");
    let slots: u32 = 0b111 << 16;
    let mut movers = octad & !top & !slots;
    let mut free = slots & !octad;
    while movers != 0 {
        let (src, dst) = (movers.trailing_zeros() as usize, free.trailing_zeros() as usize);
        for row in rows.iter_mut() {
            *row = swap_bits(*row, src, dst);
        }
        movers &= movers - 1;
        free &= free - 1;
    }
    rows
}

/// The extended binary Golay code: linear `[24, 12, 8]`, self-dual.
pub fn golay_extended() -> BinaryCode {
    BinaryCode::linear_span(24, golay_generator_rows()).expect("generator rows fit in 24 bits")
}

/// Words of Hamming weight exactly `w`. Only the weight-0 subcode is linear.
pub fn weight_subcode(code: &BinaryCode, w: usize) -> BinaryCode {
    let words: Vec<u32> = code
        .words
        .iter()
        .copied()
        .filter(|x| x.count_ones() as usize == w)
        .collect();
    let basis = (w == 0 && !words.is_empty()).then(Vec::new);
    BinaryCode {
        length: code.length,
        words,
        basis,
    }
}

/// Keeps the words with 0 at `position` and deletes that coordinate.
pub fn shorten(code: &BinaryCode, position: usize) -> Result<BinaryCode> {
    if position >= code.length {
        return Err(CodeError::PositionOutOfRange {
            position,
            length: code.length,
        });
    }
    let new_length = code.length - 1;
    check_length(new_length)?;
    let kept = code
        .words
        .iter()
        .filter(|&&w| (w >> position) & 1 == 0)
        .map(|&w| delete_coordinate(w, position));
    rebuild(new_length, kept, code.is_linear())
}

/// Deletes coordinate `position` from every word and deduplicates.
pub fn puncture(code: &BinaryCode, position: usize) -> Result<BinaryCode> {
    if position >= code.length {
        return Err(CodeError::PositionOutOfRange {
            position,
            length: code.length,
        });
    }
    let new_length = code.length - 1;
    check_length(new_length)?;
    let words = code.words.iter().map(|&w| delete_coordinate(w, position));
    rebuild(new_length, words, code.is_linear())
}

fn rebuild(length: usize, words: impl Iterator<Item = u32>, linear: bool) -> Result<BinaryCode> {
    let mut code = BinaryCode::from_words(length, words)?;
    if linear {
        code.basis = Some(echelon_basis(code.words.iter().copied()));
    }
    Ok(code)
}

/// Exact minimum distance. Linear codes use the minimum nonzero weight.
pub fn min_distance(code: &BinaryCode) -> Result<u32> {
    if code.len() < 2 {
        return Err(CodeError::TooFewWords(code.len()));
    }
    if code.is_linear() {
        return Ok(code
            .words
            .iter()
            .filter(|&&w| w != 0)
            .map(|w| w.count_ones())
            .min()
            .expect("a linear code with two words has a nonzero word"));
    }
    min_distance_pairwise(code)
}

/// Minimum distance over all unordered pairs, ignoring any structure.
pub fn min_distance_pairwise(code: &BinaryCode) -> Result<u32> {
    if code.len() < 2 {
        return Err(CodeError::TooFewWords(code.len()));
    }
    let words = &code.words;
    Ok((0..words.len())
        .into_par_iter()
        .map(|i| {
            words[i + 1..]
                .iter()
                .map(|&b| (words[i] ^ b).count_ones())
                .min()
                .unwrap_or(u32::MAX)
        })
        .min()
        .expect("at least two words"))
}

fn binomial(n: u64, k: u64) -> u64 {
    if k > n {
        return 0;
    }
    (0..k).fold(1, |acc, i| acc * (n - i) / (i + 1))
}

/// Iterates all `t`-subsets of `0..length` as bit masks (Gosper's hack).
pub(crate) fn subsets_of_size(length: usize, t: usize) -> impl Iterator<Item = u32> {
    let limit = 1u64 << length;
    let first = if t == 0 { 0u64 } else { (1u64 << t) - 1 };
    let mut next = Some(first).filter(|&f| f < limit || (t == 0));
    std::iter::from_fn(move || {
        let cur = next?;
        next = if cur == 0 {
            None
        } else {
            let c = cur & cur.wrapping_neg();
            let r = cur + c;
            let n = (((r ^ cur) >> 2) / c) | r;
            (n < limit).then_some(n)
        };
        Some(cur as u32)
    })
}

/// True iff every `t`-subset of coordinates lies in exactly one block.
///
/// Checked exhaustively over all `C(length, t)` subsets.
pub fn is_steiner_system(blocks: &BinaryCode, t: usize, k: usize) -> Result<bool> {
    for &b in &blocks.words {
        if b.count_ones() as usize != k {
            return Err(CodeError::NonConstantWeight {
                word: b,
                weight: b.count_ones(),
                expected: k as u32,
            });
        }
    }
    let subsets: Vec<u32> = subsets_of_size(blocks.length, t).collect();
    debug_assert_eq!(subsets.len() as u64, binomial(blocks.length as u64, t as u64));
    Ok(subsets.par_iter().all(|&s| {
        blocks
            .words
            .iter()
            .filter(|&&b| b & s == s)
            .take(2)
            .count()
            == 1
    }))
}

/// All words orthogonal mod 2 to every word of a linear code.
pub fn dual(code: &BinaryCode) -> Result<BinaryCode> {
    let basis = code.basis.as_ref().ok_or(CodeError::NotLinear)?;
    let n = code.length;
    // `basis` is fully reduced with distinct pivots; free coordinates are the
    // non-pivot positions. Each free coordinate f yields the dual vector
    // e_f + sum of pivots p whose row has a 1 at f.
    let pivots: Vec<(usize, u32)> = basis
        .iter()
        .map(|&b| (31 - b.leading_zeros() as usize, b))
        .collect();
    let pivot_mask: u32 = pivots.iter().map(|&(p, _)| 1u32 << p).fold(0, |a, b| a | b);
    let gens = (0..n).filter(|f| pivot_mask & (1 << f) == 0).map(|f| {
        let mut v = 1u32 << f;
        for &(p, row) in &pivots {
            if (row >> f) & 1 == 1 {
                v |= 1 << p;
            }
        }
        v
    });
    BinaryCode::linear_span(n, gens.collect::<Vec<_>>())
}

/// One stage of the Golay puncture/shorten chain.
#[derive(Debug, Clone)]
pub struct ChainStage {
    pub operation: &'static str,
    pub code: BinaryCode,
}

/// Golay (24) -> puncture -> (23) -> puncture -> (22) -> shorten -> (21)
/// -> puncture -> (20) -> shorten -> (19), always acting on the highest
/// coordinate.
pub fn golay_dual_chain() -> Vec<ChainStage> {
    let golay = golay_extended();
    type Step = fn(&BinaryCode, usize) -> Result<BinaryCode>;
    let steps: [(&'static str, Step); 5] = [
        ("puncture", puncture),
        ("puncture", puncture),
        ("shorten", shorten),
        ("puncture", puncture),
        ("shorten", shorten),
    ];
    let mut stages = vec![ChainStage {
        operation: "golay",
        code: golay,
    }];
    for (name, op) in steps {
        let prev = &stages.last().expect("nonempty").code;
        let next = op(prev, prev.length() - 1).expect("chain stays in range");
        stages.push(ChainStage {
            operation: name,
            code: next,
        });
    }
    stages
}

/// The chain code of length `n`, for `n` in `{19, 20, 21, 22, 24}`.
pub fn chain_code(n: usize) -> Option<BinaryCode> {
    golay_dual_chain()
        .into_iter()
        .map(|s| s.code)
        .find(|c| c.length() == n)
}

/// Weight-8 Golay words, shortened at the last coordinate down to length `n`.
pub fn shortened_steiner(n: usize) -> Result<BinaryCode> {
    if !(1..=24).contains(&n) {
        return Err(CodeError::BadLength(n));
    }
    let mut code = weight_subcode(&golay_extended(), 8);
    while code.length() > n {
        code = shorten(&code, code.length() - 1)?;
    }
    Ok(code)
}

/// Every word of `a` is orthogonal mod 2 to every word of `b`.
pub fn mutually_orthogonal(a: &BinaryCode, b: &BinaryCode) -> bool {
    a.length == b.length
        && a
            .words
            .par_iter()
            .all(|&x| b.words.iter().all(|&y| (x & y).count_ones() % 2 == 0))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn golay_parameters() {
        let g = golay_extended();
        assert_eq!(g.len(), 4096);
        assert_eq!(g.dimension(), Some(12));
        assert_eq!(min_distance(&g).unwrap(), 8);
        let dist = g.weight_distribution();
        for (w, &count) in dist.iter().enumerate() {
            let expected = match w {
                0 | 24 => 1,
                8 | 16 => 759,
                12 => 2576,
                _ => 0,
            };
            assert_eq!(count, expected, "weight {w}");
        }
        assert_eq!(dual(&g).unwrap(), g);
    }

    #[test]
    fn generator_rows_have_weight_eight() {
        for row in golay_generator_rows() {
            assert_eq!(row.count_ones(), 8);
        }
    }

    #[test]
    fn weight_subcodes() {
        let g = golay_extended();
        assert_eq!(weight_subcode(&g, 8).len(), 759);
        let zero = weight_subcode(&g, 0);
        assert_eq!(zero.words(), &[0]);
        assert!(zero.is_linear());
        assert!(weight_subcode(&g, 4).is_empty());
        assert!(!weight_subcode(&g, 8).is_linear());
    }

    #[test]
    fn shorten_small() {
        let c = BinaryCode::from_words(2, [0b00, 0b11]).unwrap();
        let s = shorten(&c, 1).unwrap();
        assert_eq!(s.words(), &[0]);
        assert_eq!(s.length(), 1);
        assert!(matches!(
            shorten(&c, 2),
            Err(CodeError::PositionOutOfRange { position: 2, length: 2 })
        ));
    }

    #[test]
    fn puncture_small() {
        let c = BinaryCode::from_words(2, [0b00, 0b11]).unwrap();
        let p = puncture(&c, 0).unwrap();
        assert_eq!(p.words(), &[0, 1]);
        assert!(puncture(&c, 5).is_err());
    }

    #[test]
    fn delete_coordinate_shifts_high_bits() {
        assert_eq!(delete_coordinate(0b1011, 1), 0b101);
        assert_eq!(delete_coordinate(0b1011, 0), 0b101);
        assert_eq!(delete_coordinate(0b1011, 3), 0b011);
    }

    #[test]
    fn steiner_shortening_reproduces_sizes() {
        let expected = [759, 506, 330, 210, 130, 78, 46, 30, 30];
        let mut code = weight_subcode(&golay_extended(), 8);
        for (step, &size) in expected.iter().enumerate() {
            assert_eq!(code.len(), size, "length {}", 24 - step);
            if code.length() > 16 {
                code = shorten(&code, code.length() - 1).unwrap();
            }
        }
    }

    #[test]
    fn dual_chain_sizes_and_distances() {
        let stages = golay_dual_chain();
        let got: Vec<(usize, usize, u32)> = stages
            .iter()
            .map(|s| (s.code.length(), s.code.len(), min_distance(&s.code).unwrap()))
            .collect();
        assert_eq!(
            got,
            vec![
                (24, 4096, 8),
                (23, 4096, 7),
                (22, 4096, 6),
                (21, 2048, 6),
                (20, 2048, 5),
                (19, 1024, 5)
            ]
        );
        for s in &stages {
            assert!(s.code.is_linear());
            assert_eq!(
                min_distance(&s.code).unwrap(),
                min_distance_pairwise(&s.code).unwrap()
            );
        }
    }

    #[test]
    fn puncture_moves_distance_by_at_most_one() {
        let stages = golay_dual_chain();
        for pair in stages.windows(2) {
            if pair[1].operation == "puncture" {
                let before = min_distance(&pair[0].code).unwrap();
                let after = min_distance(&pair[1].code).unwrap();
                assert!(after <= before && after + 1 >= before);
            }
        }
    }

    #[test]
    fn shortened_chain_length_21_then_puncture() {
        let c21 = chain_code(21).unwrap();
        assert_eq!(shorten(&c21, 20).unwrap().len(), 1024);
        let c22 = chain_code(22).unwrap();
        assert_eq!(shorten(&c22, 21).unwrap().len(), 2048);
    }

    #[test]
    fn small_distances() {
        let c = BinaryCode::from_words(3, [0b000, 0b111]).unwrap();
        assert_eq!(min_distance(&c).unwrap(), 3);
        let one = BinaryCode::from_words(3, [0b101]).unwrap();
        assert_eq!(min_distance(&one), Err(CodeError::TooFewWords(1)));
    }

    #[test]
    fn steiner_system_checks() {
        let blocks = weight_subcode(&golay_extended(), 8);
        assert!(is_steiner_system(&blocks, 5, 8).unwrap());

        // {0,1,2} and {1,2,3}: the pair {1,2} is covered twice, and the
        // pairs {0,3} not at all.
        let two = BinaryCode::from_words(4, [0b0111, 0b1110]).unwrap();
        let mut covered = [0; 16];
        for s in subsets_of_size(4, 2) {
            covered[s as usize] = two.words().iter().filter(|&&b| b & s == s).count();
        }
        assert_eq!(covered[0b0110], 2);
        assert_eq!(covered[0b1001], 0);
        assert!(!is_steiner_system(&two, 2, 3).unwrap());

        let whole = BinaryCode::from_words(5, [0b11111]).unwrap();
        assert!(is_steiner_system(&whole, 3, 5).unwrap());

        let mixed = BinaryCode::from_words(4, [0b0111, 0b0011]).unwrap();
        assert!(matches!(
            is_steiner_system(&mixed, 2, 3),
            Err(CodeError::NonConstantWeight { .. })
        ));
    }

    #[test]
    fn subset_enumeration_counts() {
        assert_eq!(subsets_of_size(24, 5).count(), 42504);
        assert_eq!(subsets_of_size(6, 0).collect::<Vec<_>>(), vec![0]);
        assert_eq!(subsets_of_size(6, 6).collect::<Vec<_>>(), vec![0b111111]);
        assert_eq!(subsets_of_size(4, 5).count(), 0);
        assert!(subsets_of_size(16, 4).all(|s| s.count_ones() == 4));
    }

    #[test]
    fn dual_of_full_space_is_zero() {
        let full = BinaryCode::linear_span(5, (0..5).map(|i| 1 << i)).unwrap();
        assert_eq!(dual(&full).unwrap().words(), &[0]);
        let nonlinear = BinaryCode::from_words(3, [0b001]).unwrap();
        assert_eq!(dual(&nonlinear), Err(CodeError::NotLinear));
    }

    #[test]
    fn dual_matches_enumeration() {
        let code = BinaryCode::linear_span(7, [0b1101000, 0b0110100, 0b0011010]).unwrap();
        let d = dual(&code).unwrap();
        let brute: Vec<u32> = (0..128u32)
            .filter(|&x| code.words().iter().all(|&c| (x & c).count_ones() % 2 == 0))
            .collect();
        assert_eq!(d.words(), brute.as_slice());
        assert_eq!(d.dimension(), Some(4));
    }

    #[test]
    fn rendering_header_and_bit_order() {
        let c = BinaryCode::linear_span(4, [0b0011]).unwrap();
        assert_eq!(c.to_string(), "length 4 count 2 linear 1\n0000\n0011\n");
        let w = BinaryWord::new(0b0001, 4).unwrap();
        assert_eq!(w.to_string(), "0001");
        assert!(BinaryWord::new(0b10000, 4).is_err());
    }

    #[test]
    fn chain_is_orthogonal_to_steiner_codes() {
        for n in [19, 20, 21] {
            let chain = chain_code(n).unwrap();
            let c = shortened_steiner(n).unwrap();
            assert!(mutually_orthogonal(&chain, &c), "n = {n}");
        }
    }

    mod props {
        use super::super::*;
        use proptest::prelude::*;

        proptest! {
            #[test]
            fn double_dual_is_identity(
                length in 1usize..=12,
                gens in proptest::collection::vec(any::<u32>(), 0..8),
            ) {
                let gens: Vec<u32> = gens.into_iter().map(|g| g & mask(length)).collect();
                let code = BinaryCode::linear_span(length, gens).unwrap();
                let d = dual(&code).unwrap();
                prop_assert_eq!(d.dimension().unwrap() + code.dimension().unwrap(), length);
                prop_assert_eq!(dual(&d).unwrap(), code.clone());
                prop_assert!(code.is_closed_under_addition());
                if code.len() >= 2 {
                    prop_assert_eq!(min_distance(&code).unwrap(), min_distance_pairwise(&code).unwrap());
                }
            }
        }
    }
}
