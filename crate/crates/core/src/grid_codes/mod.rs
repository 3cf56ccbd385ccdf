//! Codes in the space of 4x4 binary matrices.
//!
//! A [`GridWord`] stores the matrix entry at `(row, col)` in bit
//! `4 * row + col`. The codes built here are nested as
//! `C5 ⊆ C6 ⊆ C10` and `C8 ⊆ C10`.

mod automorphism;
mod cosets;
mod group;
mod orbits;

use std::fmt;
use std::sync::OnceLock;

use thiserror::Error;

use crate::binary_codes::{self, BinaryCode};

pub use automorphism::{
    alignment_graph_automorphisms, code_automorphisms, verify_automorphism_group,
    AutomorphismReport,
};
pub use cosets::{coset_map_f, disjoint_192_subcodes, CosetMap, DISTANCE_FOUR_FREE_SET};
pub use group::{build_group_g, GroupElement};
pub use orbits::{orbit_decomposition, Orbit, OrbitTable, TABLE3};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GridError {
    #[error("orbit decomposition disagrees with the reference table: {0}")]
    OrbitMismatch(String),
    #[error("coset map is not a bijection onto the even-weight words: {0}")]
    NotBijective(String),
    #[error("coset distance correspondence failed: {0}")]
    DistanceCorrespondenceFailed(String),
    #[error("construction check failed: {0}")]
    ConstructionInvalid(String),
}

pub type Result<T> = std::result::Result<T, GridError>;

#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct GridWord(pub u16);

impl GridWord {
    pub const ZERO: GridWord = GridWord(0);
    pub const ONES: GridWord = GridWord(0xFFFF);

    pub const fn position(row: usize, col: usize) -> usize {
        4 * row + col
    }

    /// Parses four rows written left to right, e.g. `["1100", "1100", "0000", "0000"]`.
    pub const fn from_rows(rows: [&str; 4]) -> GridWord {
        let mut bits = 0u16;
        let mut r = 0;
        while r < 4 {
            let row = rows[r].as_bytes();
            assert!(row.len() == 4, "grid rows have four entries");
            let mut c = 0;
            while c < 4 {
                match row[c] {
                    b'1' => bits |= 1 << (4 * r + c),
                    b'0' => {}
                    _ => panic!("grid entries are 0 or 1"),
                }
                c += 1;
            }
            r += 1;
        }
        GridWord(bits)
    }

    pub fn bits(self) -> u16 {
        self.0
    }

    pub fn get(self, row: usize, col: usize) -> bool {
        (self.0 >> Self::position(row, col)) & 1 == 1
    }

    /// The four bits of row `r`, column 0 in the lowest bit.
    pub fn row_mask(self, r: usize) -> u16 {
        (self.0 >> (4 * r)) & 0xF
    }

    pub fn col_mask(self, c: usize) -> u16 {
        (0..4).fold(0, |acc, r| acc | (u16::from(self.get(r, c)) << r))
    }

    pub fn weight(self) -> u32 {
        self.0.count_ones()
    }

    pub fn distance(self, other: GridWord) -> u32 {
        (self.0 ^ other.0).count_ones()
    }

    pub fn dot(self, other: GridWord) -> bool {
        (self.0 & other.0).count_ones() % 2 == 1
    }

    pub fn support(self) -> impl Iterator<Item = usize> {
        (0..16).filter(move |&p| (self.0 >> p) & 1 == 1)
    }

    fn row_parity(self, r: usize) -> u32 {
        self.row_mask(r).count_ones() % 2
    }

    fn col_parity(self, c: usize) -> u32 {
        self.col_mask(c).count_ones() % 2
    }

    fn cells_parity(self, cells: &[(usize, usize)]) -> u32 {
        cells.iter().filter(|&&(r, c)| self.get(r, c)).count() as u32 % 2
    }
}

impl std::ops::BitXor for GridWord {
    type Output = GridWord;
    fn bitxor(self, rhs: GridWord) -> GridWord {
        GridWord(self.0 ^ rhs.0)
    }
}

impl fmt::Display for GridWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for r in 0..4 {
            for c in 0..4 {
                write!(f, "{}", u8::from(self.get(r, c)))?;
            }
            if r < 3 {
                writeln!(f)?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for GridWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let rows: Vec<String> = (0..4)
            .map(|r| (0..4).map(|c| if self.get(r, c) { '1' } else { '0' }).collect())
            .collect();
        write!(f, "GridWord[{}]", rows.join("/"))
    }
}

/// A set of grid words; linear codes carry their dimension.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GridCode {
    code: BinaryCode,
}

impl GridCode {
    pub fn from_words(words: impl IntoIterator<Item = GridWord>) -> GridCode {
        GridCode {
            code: BinaryCode::from_words(16, words.into_iter().map(|w| u32::from(w.0)))
                .expect("16-bit words fit"),
        }
    }

    pub fn linear_span(generators: impl IntoIterator<Item = GridWord>) -> GridCode {
        GridCode {
            code: BinaryCode::linear_span(16, generators.into_iter().map(|w| u32::from(w.0)))
                .expect("16-bit words fit"),
        }
    }

    pub fn from_binary(code: BinaryCode) -> GridCode {
        assert_eq!(code.length(), 16, "grid codes have length 16");
        GridCode { code }
    }

    pub fn as_binary(&self) -> &BinaryCode {
        &self.code
    }

    pub fn len(&self) -> usize {
        self.code.len()
    }

    pub fn is_empty(&self) -> bool {
        self.code.is_empty()
    }

    pub fn dimension(&self) -> Option<usize> {
        self.code.dimension()
    }

    pub fn is_linear(&self) -> bool {
        self.code.is_linear()
    }

    pub fn contains(&self, w: GridWord) -> bool {
        self.code.contains(u32::from(w.0))
    }

    pub fn words(&self) -> impl Iterator<Item = GridWord> + '_ {
        self.code.words().iter().map(|&w| GridWord(w as u16))
    }

    pub fn is_subset_of(&self, other: &GridCode) -> bool {
        self.code.is_subset_of(&other.code)
    }

    pub fn min_distance(&self) -> binary_codes::Result<u32> {
        binary_codes::min_distance(&self.code)
    }

    pub fn intersects(&self, other: &GridCode) -> bool {
        self.words().any(|w| other.contains(w))
    }
}

/// Matrices whose four row sums and four column sums all agree mod 2.
pub fn build_c10() -> GridCode {
    let words = (0..=u16::MAX).map(GridWord).filter(|w| {
        let p = w.row_parity(0);
        (1..4).all(|r| w.row_parity(r) == p) && (0..4).all(|c| w.col_parity(c) == p)
    });
    GridCode::linear_span(words.collect::<Vec<_>>())
}

/// The dual of `C10`.
pub fn build_c6() -> GridCode {
    let c10 = build_c10();
    GridCode::from_binary(binary_codes::dual(c10.as_binary()).expect("C10 is linear"))
}

const MAIN_DIAGONAL: [(usize, usize); 4] = [(0, 0), (1, 1), (2, 2), (3, 3)];
const SHIFTED_DIAGONAL: [(usize, usize); 4] = [(0, 1), (1, 2), (2, 3), (3, 0)];

/// Matrices whose rows, columns, main diagonal and shifted main diagonal all
/// have the same sum.
pub fn build_c8() -> GridCode {
    let c10 = build_c10();
    let words = c10.words().filter(|w| {
        let p = w.row_parity(0);
        w.cells_parity(&MAIN_DIAGONAL) == p && w.cells_parity(&SHIFTED_DIAGONAL) == p
    });
    GridCode::linear_span(words.collect::<Vec<_>>())
}

/// Span of the pair and square words of `C6`: the Reed-Muller code RM(1,4).
pub fn build_c5() -> GridCode {
    let gens: Vec<GridWord> = build_c6()
        .words()
        .filter(|&w| matches!(classify_word(w), WordClass::Pair | WordClass::Square))
        .collect();
    GridCode::linear_span(gens)
}

pub const SQUARE_TEMPLATE: GridWord = GridWord::from_rows(["1100", "1100", "0011", "0011"]);
pub const PAIR_TEMPLATE: GridWord = GridWord::from_rows(["1111", "1111", "0000", "0000"]);
pub const CROSS_TEMPLATE: GridWord = GridWord::from_rows(["0111", "1000", "1000", "1000"]);
pub const ANTICROSS_TEMPLATE: GridWord = GridWord::from_rows(["1000", "0111", "0111", "0111"]);

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum WordClass {
    Zero,
    Square,
    Pair,
    Cross,
    Anticross,
    Ones,
    Other,
}

fn template_orbits() -> &'static [(WordClass, Vec<u16>); 4] {
    static ORBITS: OnceLock<[(WordClass, Vec<u16>); 4]> = OnceLock::new();
    ORBITS.get_or_init(|| {
        let g = group::group();
        let orbit = |t: GridWord| {
            let mut v: Vec<u16> = g.iter().map(|e| e.apply(t).0).collect();
            v.sort_unstable();
            v.dedup();
            v
        };
        [
            (WordClass::Square, orbit(SQUARE_TEMPLATE)),
            (WordClass::Pair, orbit(PAIR_TEMPLATE)),
            (WordClass::Cross, orbit(CROSS_TEMPLATE)),
            (WordClass::Anticross, orbit(ANTICROSS_TEMPLATE)),
        ]
    })
}

/// Classifies a word by G-equivalence to the four template shapes.
pub fn classify_word(w: GridWord) -> WordClass {
    match w {
        GridWord::ZERO => WordClass::Zero,
        GridWord::ONES => WordClass::Ones,
        _ => template_orbits()
            .iter()
            .find(|(_, members)| members.binary_search(&w.0).is_ok())
            .map_or(WordClass::Other, |(class, _)| *class),
    }
}
