use std::sync::OnceLock;

use super::GridWord;

/// A coordinate permutation of the 4x4 grid of the form
/// `(r, c) -> (rows[r], cols[c])`, optionally followed by the transpose.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct GroupElement {
    rows: [u8; 4],
    cols: [u8; 4],
    transpose: bool,
    perm: [u8; 16],
}

impl GroupElement {
    pub fn new(rows: [u8; 4], cols: [u8; 4], transpose: bool) -> GroupElement {
        let mut perm = [0u8; 16];
        for r in 0..4 {
            for c in 0..4 {
                let (mut r2, mut c2) = (rows[r], cols[c]);
                if transpose {
                    std::mem::swap(&mut r2, &mut c2);
                }
                perm[4 * r + c] = 4 * r2 + c2;
            }
        }
        GroupElement {
            rows,
            cols,
            transpose,
            perm,
        }
    }

    pub fn identity() -> GroupElement {
        GroupElement::new([0, 1, 2, 3], [0, 1, 2, 3], false)
    }

    /// Image of each coordinate position.
    pub fn permutation(&self) -> [u8; 16] {
        self.perm
    }

    pub fn is_transpose(&self) -> bool {
        self.transpose
    }

    pub fn row_permutation(&self) -> [u8; 4] {
        self.rows
    }

    pub fn col_permutation(&self) -> [u8; 4] {
        self.cols
    }

    pub fn apply(&self, w: GridWord) -> GridWord {
        apply_perm(&self.perm, w)
    }

    pub fn bijective(&self) -> bool {
        let mut seen = 0u16;
        for &p in &self.perm {
            seen |= 1 << p;
        }
        seen == u16::MAX
    }
}

pub(crate) fn apply_perm(perm: &[u8; 16], w: GridWord) -> GridWord {
    let mut out = 0u16;
    let mut bits = w.0;
    while bits != 0 {
        let p = bits.trailing_zeros() as usize;
        out |= 1 << perm[p];
        bits &= bits - 1;
    }
    GridWord(out)
}

#[cfg(test)]
pub(crate) fn compose(outer: &[u8; 16], inner: &[u8; 16]) -> [u8; 16] {
    let mut out = [0u8; 16];
    for p in 0..16 {
        out[p] = outer[inner[p] as usize];
    }
    out
}

fn permutations4() -> Vec<[u8; 4]> {
    let mut out = Vec::with_capacity(24);
    for a in 0..4u8 {
        for b in 0..4u8 {
            for c in 0..4u8 {
                for d in 0..4u8 {
                    let p = [a, b, c, d];
                    let mask = p.iter().fold(0u8, |m, &x| m | (1 << x));
                    if mask == 0xF {
                        out.push(p);
                    }
                }
            }
        }
    }
    out
}

/// All row permutations, column permutations and transposes: 4!·4!·2 = 1152
/// distinct coordinate permutations, sorted by their action.
pub fn build_group_g() -> Vec<GroupElement> {
    let perms = permutations4();
    let mut g = Vec::with_capacity(1152);
    for &rows in &perms {
        for &cols in &perms {
            for transpose in [false, true] {
                g.push(GroupElement::new(rows, cols, transpose));
            }
        }
    }
    g.sort_by_key(|e| e.perm);
    g.dedup_by_key(|e| e.perm);
    g
}

pub(crate) fn group() -> &'static [GroupElement] {
    static G: OnceLock<Vec<GroupElement>> = OnceLock::new();
    G.get_or_init(build_group_g)
}
