//! Brute-force graded dimensions: the symmetrizer as `Σ_{w ∈ S_m} T_w`
//! (inverse braidings along reduced words), ranked by dense rational
//! elimination. Shares no code with the library's symmetrizer.

use std::collections::{HashMap, VecDeque};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use weyl_racks::rack::FiniteRack;

/// Dense matrix of `c(x ⊗ y) = q(x, y) (x ▷ y) ⊗ x`.
fn dense_braiding(rack: &FiniteRack, q: &dyn Fn(usize, usize) -> i64) -> Vec<Vec<i64>> {
    let n = rack.size();
    let mut b = vec![vec![0i64; n * n]; n * n];
    for x in 0..n {
        for y in 0..n {
            b[rack.op(x, y) * n + x][x * n + y] = q(x, y);
        }
    }
    b
}

/// Reduced words of every permutation of `m`, by breadth-first search on
/// one-line notation with right multiplication by adjacent transpositions.
fn reduced_words(m: usize) -> Vec<Vec<usize>> {
    let id: Vec<usize> = (0..m).collect();
    let mut words = HashMap::from([(id.clone(), Vec::new())]);
    let mut queue = VecDeque::from([id]);
    while let Some(w) = queue.pop_front() {
        for i in 0..m.saturating_sub(1) {
            let mut v = w.clone();
            v.swap(i, i + 1);
            if !words.contains_key(&v) {
                let mut word = words[&w].clone();
                word.push(i);
                words.insert(v.clone(), word);
                queue.push_back(v);
            }
        }
    }
    let mut out: Vec<Vec<usize>> = words.into_values().collect();
    out.sort();
    out
}

pub fn oracle_matrix(rack: &FiniteRack, q: &dyn Fn(usize, usize) -> i64, m: usize) -> Vec<Vec<i64>> {
    let n = rack.size();
    let b = dense_braiding(rack, q);
    // C⁻¹ = Bᵀ for a signed permutation matrix: column `col` of Bᵀ is row `col` of B
    let inv_on_pair = |col: usize| -> (usize, i64) {
        let r = (0..n * n).find(|&r| b[col][r] != 0).unwrap();
        (r, b[col][r])
    };
    let dim = n.pow(m as u32);
    let digits = |mut v: usize| {
        let mut d = vec![0; m];
        for leg in (0..m).rev() {
            d[leg] = v % n;
            v /= n;
        }
        d
    };
    let number = |d: &[usize]| d.iter().fold(0, |acc, &x| acc * n + x);
    let mut s = vec![vec![0i64; dim]; dim];
    for word in reduced_words(m) {
        for col in 0..dim {
            let mut d = digits(col);
            let mut coef = 1;
            // T_w = C_{i1}⁻¹ ⋯ C_{ik}⁻¹: apply the rightmost letter first
            for &i in word.iter().rev() {
                let (r, c) = inv_on_pair(d[i] * n + d[i + 1]);
                d[i] = r / n;
                d[i + 1] = r % n;
                coef *= c;
            }
            s[number(&d)][col] += coef;
        }
    }
    s
}

pub fn rational_rank(rows: &[Vec<i64>]) -> usize {
    let mut a: Vec<Vec<BigRational>> = rows
        .iter()
        .map(|r| r.iter().map(|&v| BigRational::from_integer(BigInt::from(v))).collect())
        .collect();
    let (h, w) = (a.len(), a.first().map_or(0, Vec::len));
    let mut rank = 0;
    for c in 0..w {
        let Some(p) = (rank..h).find(|&i| !a[i][c].is_zero()) else {
            continue;
        };
        a.swap(rank, p);
        let inv = BigRational::one() / a[rank][c].clone();
        for i in 0..h {
            if i != rank && !a[i][c].is_zero() {
                let f = a[i][c].clone() * inv.clone();
                for j in c..w {
                    let t = f.clone() * a[rank][j].clone();
                    a[i][j] -= t;
                }
            }
        }
        rank += 1;
    }
    rank
}

pub fn oracle_dims(rack: &FiniteRack, q: i64, max: usize) -> Vec<u64> {
    let n = rack.size() as u64;
    let mut dims = vec![1, n];
    for m in 2..=max {
        dims.push(rational_rank(&oracle_matrix(rack, &|_, _| q, m)) as u64);
    }
    dims
}
