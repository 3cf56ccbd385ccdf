//! Cosets of C5 in C10 and the two disjoint minimum-distance-6 subcodes.

use super::{build_c10, build_c5, GridCode, GridError, GridWord, OrbitTable, Result};

/// Orbit indices of the coset representatives x2, x3, x4, x5, x10.
pub const COSET_REPRESENTATIVE_ORBITS: [usize; 5] = [2, 3, 4, 5, 10];

/// Prescribed images `f(x_i + C5)` as tuples `(v1, ..., v6)`.
pub const COSET_IMAGES: [[u8; 6]; 5] = [
    [1, 1, 1, 1, 0, 0],
    [1, 1, 0, 0, 1, 1],
    [1, 1, 1, 1, 1, 1],
    [0, 1, 1, 0, 0, 0],
    [0, 1, 1, 1, 0, 1],
];

/// Six even-weight points of F2^6 with no two at Hamming distance 4.
pub const DISTANCE_FOUR_FREE_SET: [[u8; 6]; 6] = [
    [0, 0, 0, 0, 0, 0],
    [1, 1, 0, 0, 0, 0],
    [1, 0, 1, 0, 0, 0],
    [1, 0, 0, 1, 0, 0],
    [1, 0, 0, 0, 1, 0],
    [1, 0, 0, 0, 0, 1],
];

/// Packs `(v1, ..., v6)` with `v1` in bit 0.
pub fn pack6(v: &[u8; 6]) -> u8 {
    v.iter()
        .enumerate()
        .fold(0, |acc, (k, &b)| acc | ((b & 1) << k))
}

/// The linear map `f: C10/C5 -> {v in F2^6 : sum v = 0}`.
///
/// Cosets are identified by a 5-bit mask selecting which of the
/// representatives x2, x3, x4, x5, x10 are summed.
#[derive(Debug, Clone)]
pub struct CosetMap {
    representatives: [GridWord; 5],
    /// Coset mask of each word of C10 (0xFF elsewhere).
    coset_of: Vec<u8>,
    /// `f` of each coset mask.
    images: [u8; 32],
    cosets: Vec<Vec<GridWord>>,
}

impl CosetMap {
    pub fn representatives(&self) -> [GridWord; 5] {
        self.representatives
    }

    /// Coset mask of a word of C10.
    pub fn coset_of(&self, w: GridWord) -> Option<u8> {
        match self.coset_of[usize::from(w.0)] {
            0xFF => None,
            m => Some(m),
        }
    }

    /// `f(w + C5)` packed as in [`pack6`].
    pub fn f(&self, w: GridWord) -> Option<u8> {
        self.coset_of(w).map(|m| self.images[usize::from(m)])
    }

    pub fn image_of_coset(&self, mask: u8) -> u8 {
        self.images[usize::from(mask)]
    }

    pub fn coset(&self, mask: u8) -> &[GridWord] {
        &self.cosets[usize::from(mask)]
    }

    /// Cosets whose image lies in `points`.
    pub fn preimage(&self, points: &[u8]) -> Vec<u8> {
        (0..32u8)
            .filter(|&m| points.contains(&self.images[usize::from(m)]))
            .collect()
    }

    /// Minimum Hamming distance between two distinct cosets.
    pub fn coset_distance(&self, a: u8, b: u8) -> u32 {
        let (ca, cb) = (self.coset(a), self.coset(b));
        ca.iter()
            .flat_map(|x| cb.iter().map(move |y| x.distance(*y)))
            .min()
            .expect("cosets are nonempty")
    }
}

/// Builds `f` from its values on x2, x3, x4, x5, x10 and checks that it is a
/// bijection onto the even-weight words and that coset distance 4
/// corresponds exactly to image distance 4.
pub fn coset_map_f(table: &OrbitTable) -> Result<CosetMap> {
    let c10 = build_c10();
    let c5 = build_c5();
    let reps = COSET_REPRESENTATIVE_ORBITS.map(|i| table.representative(i));
    let gens = COSET_IMAGES.map(|v| pack6(&v));

    let mut coset_of = vec![0xFFu8; 1 << 16];
    let mut images = [0u8; 32];
    let mut cosets = Vec::with_capacity(32);
    for mask in 0..32u8 {
        let (mut rep, mut img) = (GridWord::ZERO, 0u8);
        for k in 0..5 {
            if (mask >> k) & 1 == 1 {
                rep = rep ^ reps[k];
                img ^= gens[k];
            }
        }
        let coset: Vec<GridWord> = c5.words().map(|x| x ^ rep).collect();
        for w in &coset {
            if !c10.contains(*w) {
                return Err(GridError::NotBijective(format!("{w:?} is not in C10")));
            }
            let slot = &mut coset_of[usize::from(w.0)];
            if *slot != 0xFF {
                return Err(GridError::NotBijective(format!(
                    "cosets {slot} and {mask} coincide"
                )));
            }
            *slot = mask;
        }
        images[usize::from(mask)] = img;
        cosets.push(coset);
    }

    let mut seen = 0u64;
    for &img in &images {
        if img.count_ones() % 2 == 1 {
            return Err(GridError::NotBijective(format!("image {img:06b} has odd weight")));
        }
        if seen & (1 << img) != 0 {
            return Err(GridError::NotBijective(format!("image {img:06b} repeats")));
        }
        seen |= 1 << img;
    }

    let map = CosetMap {
        representatives: reps,
        coset_of,
        images,
        cosets,
    };
    for a in 0..32u8 {
        for b in a + 1..32 {
            let d = map.coset_distance(a, b);
            let image_d = (images[usize::from(a)] ^ images[usize::from(b)]).count_ones();
            if d != 4 && d != 6 {
                return Err(GridError::DistanceCorrespondenceFailed(format!(
                    "cosets {a} and {b} at distance {d}"
                )));
            }
            if (d == 4) != (image_d == 4) {
                return Err(GridError::DistanceCorrespondenceFailed(format!(
                    "cosets {a} and {b}: coset distance {d}, image distance {image_d}"
                )));
            }
        }
    }
    Ok(map)
}

/// Two disjoint subcodes of C10 of size 192 and minimum distance 6: the
/// preimages under `f` of the distance-4-free six-point set and of its
/// translate by the all-ones word.
pub fn disjoint_192_subcodes(table: &OrbitTable) -> Result<(GridCode, GridCode)> {
    let map = coset_map_f(table)?;
    let first: Vec<u8> = DISTANCE_FOUR_FREE_SET.iter().map(pack6).collect();
    let second: Vec<u8> = first.iter().map(|p| p ^ 0b11_1111).collect();

    let build = |points: &[u8]| -> Result<GridCode> {
        let cosets = map.preimage(points);
        if cosets.len() != 6 {
            return Err(GridError::ConstructionInvalid(format!(
                "preimage has {} cosets, expected 6",
                cosets.len()
            )));
        }
        let code = GridCode::from_words(cosets.iter().flat_map(|&m| map.coset(m).iter().copied()));
        if code.len() != 192 {
            return Err(GridError::ConstructionInvalid(format!(
                "subcode has {} words",
                code.len()
            )));
        }
        let d = code.min_distance().map_err(|e| GridError::ConstructionInvalid(e.to_string()))?;
        if d < 6 {
            return Err(GridError::ConstructionInvalid(format!(
                "subcode has minimum distance {d}"
            )));
        }
        Ok(code)
    };
    let a = build(&first)?;
    let b = build(&second)?;
    if a.intersects(&b) {
        return Err(GridError::ConstructionInvalid("subcodes intersect".into()));
    }
    Ok((a, b))
}
