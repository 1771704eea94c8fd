//! Quantum symmetrizers `S_m` and the graded dimensions of `T(V) / ⊕ ker S_m`.
//!
//! `S_{1,j} = id + C₁₂⁻¹ + C₁₂⁻¹C₂₃⁻¹ + … + C₁₂⁻¹⋯C_{j,j+1}⁻¹` on `V^{⊗ j+1}` and
//! `S_m = ∏_{j=1}^{m-1} (id^{⊗ m-j-1} ⊗ S_{1,j})`. Basis words index as
//! base-`|X|` numbers with the first tensor leg most significant.

use std::collections::HashMap;

use rayon::prelude::*;
use serde::Serialize;
use smallvec::SmallVec;

use super::linalg::{rank, IntMatrix};
use super::BraidedSpace;
use crate::error::{Error, Result};
use crate::rack::FiniteRack;

type Word = SmallVec<[u8; 16]>;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct Budget {
    pub max_points: usize,
    /// Largest `|X|^m` handled.
    pub max_rows: u64,
    /// Largest braid-group orbit eliminated as one dense block.
    pub max_block: usize,
    /// Largest `|X|^m` for which [`symmetrizer`] builds the full matrix.
    pub max_dense: usize,
}

impl Default for Budget {
    fn default() -> Self {
        Budget {
            max_points: 12,
            max_rows: 3_000_000,
            max_block: 4096,
            max_dense: 4096,
        }
    }
}

fn decode(mut index: u64, n: usize, m: usize) -> Word {
    let mut w: Word = SmallVec::from_elem(0, m);
    for leg in (0..m).rev() {
        w[leg] = (index % n as u64) as u8;
        index /= n as u64;
    }
    w
}

fn encode(w: &[u8], n: usize) -> u64 {
    w.iter().fold(0u64, |acc, &x| acc * n as u64 + x as u64)
}

/// `C_{p}⁻¹ C_{p+1}⁻¹ ⋯ C_{p+k-1}⁻¹ w`, legs 0-indexed, rightmost factor first.
fn inverse_chain(space: &BraidedSpace, w: &mut Word, p: usize, k: usize) -> i8 {
    let mut sign = 1;
    for l in (p..p + k).rev() {
        let (s, a, b) = space.apply_c_inv(w[l] as usize, w[l + 1] as usize);
        w[l] = a as u8;
        w[l + 1] = b as u8;
        sign *= s;
    }
    sign
}

/// `S_m e_w` as a sparse vector.
fn symmetrize_word(space: &BraidedSpace, m: usize, word: u64) -> HashMap<u64, i64> {
    let n = space.dimension();
    let mut v: HashMap<u64, i64> = HashMap::from([(word, 1)]);
    for j in (1..m).rev() {
        // id^{⊗ m-j-1} ⊗ S_{1,j} touches legs m-j-1 ..= m-1
        let p = m - j - 1;
        let mut next: HashMap<u64, i64> = HashMap::with_capacity(v.len() * (j + 1));
        for (&w, &coef) in &v {
            let base = decode(w, n, m);
            for k in 0..=j {
                let mut t = base.clone();
                let s = inverse_chain(space, &mut t, p, k);
                *next.entry(encode(&t, n)).or_insert(0) += coef * s as i64;
            }
        }
        next.retain(|_, c| *c != 0);
        v = next;
    }
    v
}

fn tensor_dim(n: usize, m: usize) -> Option<u64> {
    (n as u64).checked_pow(m as u32)
}

/// The full matrix of `S_m` (column `w` is `S_m e_w`).
pub fn symmetrizer(space: &BraidedSpace, m: usize, budget: &Budget) -> Result<IntMatrix> {
    if m < 2 {
        return Err(Error::Precondition(format!("symmetrizer degree {m} < 2")));
    }
    let n = space.dimension();
    let dim = tensor_dim(n, m)
        .filter(|&d| d <= budget.max_dense as u64)
        .ok_or_else(|| Error::BudgetExceeded(format!("{n}^{m} exceeds dense limit {}", budget.max_dense)))?
        as usize;
    let mut out = IntMatrix::zeros(dim, dim);
    for w in 0..dim {
        for (r, c) in symmetrize_word(space, m, w as u64) {
            out.set(r as usize, w, c);
        }
    }
    Ok(out)
}

fn find(parent: &mut [u32], mut x: u32) -> u32 {
    while parent[x as usize] != x {
        let up = parent[parent[x as usize] as usize];
        parent[x as usize] = up;
        x = up;
    }
    x
}

/// Orbits of the braid group on words of length `m`, generated by
/// `(x, y) ↦ (x ▷ y, x)` at each adjacent pair. Each orbit is sorted and the
/// orbits are ordered by least word.
pub fn hurwitz_orbits(rack: &FiniteRack, m: usize) -> Vec<Vec<u64>> {
    let n = rack.size();
    let total = tensor_dim(n, m).expect("caller checks budget") as usize;
    let mut parent: Vec<u32> = (0..total as u32).collect();
    for w in 0..total {
        let word = decode(w as u64, n, m);
        for l in 0..m.saturating_sub(1) {
            let mut t = word.clone();
            let (x, y) = (t[l] as usize, t[l + 1] as usize);
            t[l] = rack.op(x, y) as u8;
            t[l + 1] = x as u8;
            let (a, b) = (find(&mut parent, w as u32), find(&mut parent, encode(&t, n) as u32));
            if a != b {
                parent[a.max(b) as usize] = a.min(b);
            }
        }
    }
    let mut slot: HashMap<u32, usize> = HashMap::new();
    let mut orbits: Vec<Vec<u64>> = Vec::new();
    for w in 0..total as u32 {
        let root = find(&mut parent, w);
        let i = *slot.entry(root).or_insert_with(|| {
            orbits.push(Vec::new());
            orbits.len() - 1
        });
        orbits[i].push(w as u64);
    }
    orbits
}

fn block_rank(space: &BraidedSpace, m: usize, orbit: &[u64]) -> Result<usize> {
    let local: HashMap<u64, usize> = orbit.iter().enumerate().map(|(i, &w)| (w, i)).collect();
    let mut block = IntMatrix::zeros(orbit.len(), orbit.len());
    for (col, &w) in orbit.iter().enumerate() {
        for (r, c) in symmetrize_word(space, m, w) {
            let row = *local
                .get(&r)
                .ok_or_else(|| Error::InvariantViolated(format!("S_{m} left the braid orbit of word {w}")))?;
            block.set(row, col, c);
        }
    }
    Ok(rank(&block))
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct DegreeRow {
    pub degree: usize,
    pub tensor_dim: u64,
    pub rank: u64,
    pub kernel: u64,
    /// `|X|^m - dim ker S_m`.
    pub dim: u64,
    pub blocks: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "camelCase")]
pub struct GradedReport {
    pub points: usize,
    pub max_degree: usize,
    pub degrees: Vec<DegreeRow>,
    pub truncated: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub truncation_reason: Option<String>,
    /// Sum of the computed graded dimensions.
    pub total: u64,
    /// First degree whose dimension is zero; every later degree then vanishes.
    pub vanishes_from: Option<usize>,
}

impl GradedReport {
    pub fn dims(&self) -> Vec<u64> {
        self.degrees.iter().map(|d| d.dim).collect()
    }
}

/// Graded dimensions in degrees `0..=max_degree`, stopping early (and
/// flagging truncation) once `|X|^m` or an orbit block exceeds the budget.
pub fn graded_dims(space: &BraidedSpace, max_degree: usize, budget: &Budget) -> Result<GradedReport> {
    let n = space.dimension();
    if n > budget.max_points {
        return Err(Error::BudgetExceeded(format!("{n} points > limit {}", budget.max_points)));
    }
    let mut degrees = Vec::new();
    let mut truncation_reason = None;
    for m in 0..=max_degree {
        let Some(dim) = tensor_dim(n, m).filter(|&d| d <= budget.max_rows) else {
            truncation_reason = Some(format!("{n}^{m} rows exceed limit {}", budget.max_rows));
            break;
        };
        if m < 2 {
            degrees.push(DegreeRow {
                degree: m,
                tensor_dim: dim,
                rank: dim,
                kernel: 0,
                dim,
                blocks: dim as usize,
            });
            continue;
        }
        let orbits = hurwitz_orbits(space.rack(), m);
        if let Some(big) = orbits.iter().map(Vec::len).max().filter(|&l| l > budget.max_block) {
            truncation_reason = Some(format!("degree {m} orbit of {big} words exceeds block limit {}", budget.max_block));
            break;
        }
        let ranks: Vec<Result<usize>> = orbits.par_iter().map(|o| block_rank(space, m, o)).collect();
        let r = ranks.into_iter().sum::<Result<usize>>()? as u64;
        degrees.push(DegreeRow {
            degree: m,
            tensor_dim: dim,
            rank: r,
            kernel: dim - r,
            dim: r,
            blocks: orbits.len(),
        });
    }
    Ok(GradedReport {
        points: n,
        max_degree,
        total: degrees.iter().map(|d| d.dim).sum(),
        vanishes_from: degrees.iter().find(|d| d.dim == 0).map(|d| d.degree),
        truncated: truncation_reason.is_some(),
        truncation_reason,
        degrees,
    })
}
