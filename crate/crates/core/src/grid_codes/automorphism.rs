//! Computational checks around the automorphism group of C6 and C10.

use std::collections::BTreeSet;
use std::fmt;

use super::group::{apply_perm, group};
use super::{build_c6, classify_word, GridCode, GridWord, WordClass};

fn aligned(p: usize, q: usize) -> bool {
    p != q && (p / 4 == q / 4 || p % 4 == q % 4)
}

fn alignment_adjacency() -> [u16; 16] {
    let mut adj = [0u16; 16];
    for (p, row) in adj.iter_mut().enumerate() {
        for q in 0..16 {
            if aligned(p, q) {
                *row |= 1 << q;
            }
        }
    }
    adj
}

fn graph_backtrack(adj: &[u16; 16], perm: &mut Vec<u8>, used: u16, out: &mut Vec<[u8; 16]>) {
    let v = perm.len();
    if v == 16 {
        out.push(perm.as_slice().try_into().expect("16 entries"));
        return;
    }
    for t in 0..16u8 {
        if used & (1 << t) != 0 || adj[v].count_ones() != adj[usize::from(t)].count_ones() {
            continue;
        }
        let consistent = perm.iter().enumerate().all(|(u, &pu)| {
            let edge = adj[u] & (1 << v) != 0;
            let image_edge = adj[usize::from(pu)] & (1 << t) != 0;
            edge == image_edge
        });
        if consistent {
            perm.push(t);
            graph_backtrack(adj, perm, used | (1 << t), out);
            perm.pop();
        }
    }
}

/// All automorphisms of the rook graph on the 16 grid positions (two
/// positions adjacent iff they share a row or a column), by backtracking.
pub fn alignment_graph_automorphisms() -> Vec<[u8; 16]> {
    let adj = alignment_adjacency();
    let mut out = Vec::new();
    graph_backtrack(&adj, &mut Vec::with_capacity(16), 0, &mut out);
    out.sort_unstable();
    out
}

struct CodeSearch<'a> {
    code: &'a GridCode,
    blocks: Vec<u16>,
    out: Vec<[u8; 16]>,
}

impl CodeSearch<'_> {
    fn partial_ok(&self, perm: &[u8]) -> bool {
        let k = perm.len();
        let assigned: u16 = if k == 16 { u16::MAX } else { (1u16 << k) - 1 };
        self.blocks.iter().all(|&b| {
            let part = b & assigned;
            if part == 0 {
                return true;
            }
            let mut img = 0u16;
            let mut bits = part;
            while bits != 0 {
                let p = bits.trailing_zeros() as usize;
                img |= 1 << perm[p];
                bits &= bits - 1;
            }
            if b & !assigned == 0 {
                self.blocks.binary_search(&img).is_ok()
            } else {
                self.blocks.iter().any(|&c| c & img == img)
            }
        })
    }

    fn run(&mut self, perm: &mut Vec<u8>, used: u16) {
        if perm.len() == 16 {
            let p: [u8; 16] = perm.as_slice().try_into().expect("16 entries");
            if self.code.words().all(|w| self.code.contains(apply_perm(&p, w))) {
                self.out.push(p);
            }
            return;
        }
        for t in 0..16u8 {
            if used & (1 << t) != 0 {
                continue;
            }
            perm.push(t);
            if self.partial_ok(perm) {
                self.run(perm, used | (1 << t));
            }
            perm.pop();
        }
    }
}

/// Every coordinate permutation preserving `code`, by backtracking pruned on
/// the minimum-weight words (which any automorphism must permute).
pub fn code_automorphisms(code: &GridCode) -> Vec<[u8; 16]> {
    let min_weight = code
        .words()
        .filter(|w| w.0 != 0)
        .map(GridWord::weight)
        .min()
        .unwrap_or(0);
    let mut blocks: Vec<u16> = code
        .words()
        .filter(|w| w.0 != 0 && w.weight() == min_weight)
        .map(|w| w.0)
        .collect();
    blocks.sort_unstable();
    let mut search = CodeSearch {
        code,
        blocks,
        out: Vec::new(),
    };
    search.run(&mut Vec::with_capacity(16), 0);
    let mut out = search.out;
    out.sort_unstable();
    out
}

/// Outcome of each step of the computational route to "Aut(C6) = G".
#[derive(Debug, Clone)]
pub struct AutomorphismReport {
    /// (a) number of weight-6 words of C6, and whether all are crosses.
    pub weight6_count: usize,
    pub weight6_all_crosses: bool,
    /// (b) number of crosses containing both coordinates, over aligned and
    /// over unaligned pairs.
    pub aligned_counts: BTreeSet<usize>,
    pub unaligned_counts: BTreeSet<usize>,
    /// Every coordinate is aligned with this many others.
    pub alignment_degrees: BTreeSet<u32>,
    /// (c) automorphisms of the alignment graph.
    pub graph_automorphisms: usize,
    /// (d) each of them preserves C6, and as a set they equal G.
    pub all_preserve_c6: bool,
    pub equals_g: bool,
    /// Order of the full automorphism group of C6 found by direct search.
    pub code_automorphisms: usize,
}

impl AutomorphismReport {
    pub fn step_a(&self) -> bool {
        self.weight6_count == 16 && self.weight6_all_crosses
    }

    /// Alignment is recoverable from cross co-membership counts only if each
    /// class sees a single count and the two counts differ.
    pub fn step_b(&self) -> bool {
        self.aligned_counts.len() == 1
            && self.unaligned_counts.len() == 1
            && self.aligned_counts != self.unaligned_counts
    }

    pub fn step_c(&self) -> bool {
        self.graph_automorphisms == 1152
    }

    pub fn step_d(&self) -> bool {
        self.all_preserve_c6 && self.equals_g
    }

    pub fn failed_steps(&self) -> Vec<&'static str> {
        [
            (self.step_a(), "a"),
            (self.step_b(), "b"),
            (self.step_c(), "c"),
            (self.step_d(), "d"),
        ]
        .into_iter()
        .filter(|(ok, _)| !ok)
        .map(|(_, name)| name)
        .collect()
    }

    pub fn passed(&self) -> bool {
        self.failed_steps().is_empty()
    }
}

impl fmt::Display for AutomorphismReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mark = |ok: bool| if ok { "PASS" } else { "FAIL" };
        writeln!(
            f,
            "{} (a) weight-6 words of C6: {} (all crosses: {})",
            mark(self.step_a()),
            self.weight6_count,
            self.weight6_all_crosses
        )?;
        writeln!(
            f,
            "{} (b) crosses through aligned pairs {:?}, unaligned pairs {:?}",
            mark(self.step_b()),
            self.aligned_counts,
            self.unaligned_counts
        )?;
        writeln!(
            f,
            "{} (c) alignment graph automorphisms: {} (degrees {:?})",
            mark(self.step_c()),
            self.graph_automorphisms,
            self.alignment_degrees
        )?;
        writeln!(
            f,
            "{} (d) all preserve C6: {}, equal to G: {}",
            mark(self.step_d()),
            self.all_preserve_c6,
            self.equals_g
        )?;
        write!(
            f,
            "info: permutations preserving C6 found by direct search: {}",
            self.code_automorphisms
        )
    }
}

/// Runs steps (a)-(d) and a direct search of Aut(C6).
pub fn verify_automorphism_group() -> AutomorphismReport {
    let c6 = build_c6();
    let weight6: Vec<GridWord> = c6.words().filter(|w| w.weight() == 6).collect();
    let weight6_all_crosses = weight6
        .iter()
        .all(|&w| classify_word(w) == WordClass::Cross);

    let mut aligned_counts = BTreeSet::new();
    let mut unaligned_counts = BTreeSet::new();
    for p in 0..16 {
        for q in p + 1..16 {
            let both = (1u16 << p) | (1u16 << q);
            let count = weight6.iter().filter(|w| w.0 & both == both).count();
            if aligned(p, q) {
                aligned_counts.insert(count);
            } else {
                unaligned_counts.insert(count);
            }
        }
    }
    let alignment_degrees = alignment_adjacency().iter().map(|r| r.count_ones()).collect();

    let autos = alignment_graph_automorphisms();
    let all_preserve_c6 = autos
        .iter()
        .all(|p| c6.words().all(|w| c6.contains(apply_perm(p, w))));
    let mut g: Vec<[u8; 16]> = group().iter().map(|e| e.permutation()).collect();
    g.sort_unstable();

    AutomorphismReport {
        weight6_count: weight6.len(),
        weight6_all_crosses,
        aligned_counts,
        unaligned_counts,
        alignment_degrees,
        graph_automorphisms: autos.len(),
        all_preserve_c6,
        equals_g: autos == g,
        code_automorphisms: code_automorphisms(&c6).len(),
    }
}
