use std::fmt;

use super::group::group;
use super::{build_c10, GridError, GridWord, Result};

/// Reference orbit list: `(weight, size, representative)` for orbits 1..=17,
/// read column by column from the published table.
pub const TABLE3: [(u32, usize, GridWord); 17] = [
    (0, 1, GridWord::from_rows(["0000", "0000", "0000", "0000"])),
    (4, 24, GridWord::from_rows(["1000", "0100", "0010", "0001"])),
    (4, 36, GridWord::from_rows(["1100", "1100", "0000", "0000"])),
    (6, 16, GridWord::from_rows(["1110", "0001", "0001", "0001"])),
    (6, 96, GridWord::from_rows(["1100", "1010", "0110", "0000"])),
    (6, 144, GridWord::from_rows(["1110", "1000", "1000", "0001"])),
    (8, 12, GridWord::from_rows(["1111", "1111", "0000", "0000"])),
    (8, 18, GridWord::from_rows(["1100", "1100", "0011", "0011"])),
    (8, 72, GridWord::from_rows(["1100", "1010", "0101", "0011"])),
    (8, 144, GridWord::from_rows(["1111", "1100", "0011", "0000"])),
    (8, 144, GridWord::from_rows(["1110", "1101", "1000", "0100"])),
    (10, 16, GridWord::from_rows(["1110", "1110", "1110", "0001"])),
    (10, 96, GridWord::from_rows(["1111", "1100", "1010", "1001"])),
    (10, 144, GridWord::from_rows(["1110", "1110", "1101", "0010"])),
    (12, 24, GridWord::from_rows(["1110", "1101", "1011", "0111"])),
    (12, 36, GridWord::from_rows(["1111", "1111", "1100", "1100"])),
    (16, 1, GridWord::from_rows(["1111", "1111", "1111", "1111"])),
];

#[derive(Debug, Clone)]
pub struct Orbit {
    /// 1-based index in the reference order.
    pub index: usize,
    pub weight: u32,
    pub size: usize,
    pub representative: GridWord,
    pub members: Vec<GridWord>,
}

/// The 17 orbits of G on C10 plus a word -> orbit lookup.
#[derive(Clone)]
pub struct OrbitTable {
    orbits: Vec<Orbit>,
    lookup: Vec<u8>,
}

const NOT_IN_C10: u8 = u8::MAX;

impl OrbitTable {
    pub fn orbits(&self) -> &[Orbit] {
        &self.orbits
    }

    /// Orbit `i` with `1 <= i <= 17`.
    pub fn orbit(&self, index: usize) -> &Orbit {
        &self.orbits[index - 1]
    }

    /// 1-based orbit index of `w`, or `None` outside C10.
    pub fn orbit_of(&self, w: GridWord) -> Option<usize> {
        match self.lookup[usize::from(w.0)] {
            NOT_IN_C10 => None,
            i => Some(usize::from(i) + 1),
        }
    }

    /// Representative `x_i` of orbit `i`.
    pub fn representative(&self, index: usize) -> GridWord {
        self.orbit(index).representative
    }

    pub fn sizes(&self) -> Vec<usize> {
        self.orbits.iter().map(|o| o.size).collect()
    }
}

impl fmt::Debug for OrbitTable {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("OrbitTable")
            .field("sizes", &self.sizes())
            .finish()
    }
}

impl fmt::Display for OrbitTable {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for o in &self.orbits {
            let rows: Vec<String> = (0..4)
                .map(|r| {
                    (0..4)
                        .map(|c| if o.representative.get(r, c) { '1' } else { '0' })
                        .collect()
                })
                .collect();
            writeln!(
                f,
                "{:>2} weight {:>2} size {:>3} {}",
                o.index,
                o.weight,
                o.size,
                rows.join(" ")
            )?;
        }
        Ok(())
    }
}

/// Partitions C10 into G-orbits and indexes them by the reference
/// representatives.
pub fn orbit_decomposition() -> Result<OrbitTable> {
    let c10 = build_c10();
    let g = group();
    let mut raw = vec![usize::MAX; 1 << 16];
    let mut orbits: Vec<Vec<GridWord>> = Vec::new();
    for w in c10.words() {
        if raw[usize::from(w.0)] != usize::MAX {
            continue;
        }
        let mut members: Vec<GridWord> = g.iter().map(|e| e.apply(w)).collect();
        members.sort_unstable();
        members.dedup();
        for m in &members {
            if !c10.contains(*m) {
                return Err(GridError::OrbitMismatch(format!(
                    "G maps {m:?} outside C10"
                )));
            }
            raw[usize::from(m.0)] = orbits.len();
        }
        orbits.push(members);
    }
    if orbits.len() != TABLE3.len() {
        return Err(GridError::OrbitMismatch(format!(
            "found {} orbits, expected {}",
            orbits.len(),
            TABLE3.len()
        )));
    }

    let mut lookup = vec![NOT_IN_C10; 1 << 16];
    let mut indexed: Vec<Option<Orbit>> = vec![None; TABLE3.len()];
    for (i, &(weight, size, rep)) in TABLE3.iter().enumerate() {
        let raw_index = raw[usize::from(rep.0)];
        if raw_index == usize::MAX {
            return Err(GridError::OrbitMismatch(format!(
                "representative of orbit {} is not in C10",
                i + 1
            )));
        }
        let members = std::mem::take(&mut orbits[raw_index]);
        if members.is_empty() {
            return Err(GridError::OrbitMismatch(format!(
                "representative of orbit {} shares an orbit with an earlier one",
                i + 1
            )));
        }
        if rep.weight() != weight || members.len() != size {
            return Err(GridError::OrbitMismatch(format!(
                "orbit {}: computed weight {} size {}, expected weight {} size {}",
                i + 1,
                rep.weight(),
                members.len(),
                weight,
                size
            )));
        }
        for m in &members {
            lookup[usize::from(m.0)] = i as u8;
        }
        indexed[i] = Some(Orbit {
            index: i + 1,
            weight,
            size,
            representative: rep,
            members,
        });
    }
    Ok(OrbitTable {
        orbits: indexed.into_iter().map(|o| o.expect("all assigned")).collect(),
        lookup,
    })
}
