//! Reduced integral simplicial homology.
//!
//! Boundary matrices use the sorted-vertex sign convention and include the
//! augmentation `C_0 → C_{-1} = ℤ{∅}`, so the groups computed are reduced.
//! Ranks and torsion come from a Smith normal form over arbitrary-precision
//! integers.

use std::collections::{BTreeMap, BTreeSet, HashMap};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::simplicial::{Complex, Simplex};

/// Homology in one dimension.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct HomologyGroup {
    pub q: isize,
    pub betti: usize,
    pub torsion: Vec<BigInt>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct HomologyProfile {
    pub groups: Vec<HomologyGroup>,
    pub reduced: bool,
}

impl HomologyProfile {
    /// Betti numbers for `q = 0..=dim`.
    pub fn betti(&self) -> Vec<usize> {
        self.groups.iter().filter(|g| g.q >= 0).map(|g| g.betti).collect()
    }

    pub fn betti_at(&self, q: isize) -> usize {
        self.groups.iter().find(|g| g.q == q).map_or(0, |g| g.betti)
    }

    pub fn is_torsion_free(&self) -> bool {
        self.groups.iter().all(|g| g.torsion.is_empty())
    }

    /// `Σ (−1)^q β_q`, equal to the reduced Euler characteristic.
    pub fn euler_characteristic(&self) -> i64 {
        self.groups
            .iter()
            .map(|g| if g.q.rem_euclid(2) == 0 { g.betti as i64 } else { -(g.betti as i64) })
            .sum()
    }

    /// True when every listed group vanishes for `q ≤ c`.
    pub fn vanishes_through(&self, c: isize) -> bool {
        self.groups.iter().filter(|g| g.q <= c).all(|g| g.betti == 0 && g.torsion.is_empty())
    }
}

/// Sparse integer matrix, row-major with a column occupancy index.
#[derive(Clone, Debug, Default)]
pub struct SparseMatrix {
    rows: Vec<BTreeMap<usize, BigInt>>,
    cols: Vec<BTreeSet<usize>>,
}

impl SparseMatrix {
    pub fn zeros(nrows: usize, ncols: usize) -> Self {
        SparseMatrix { rows: vec![BTreeMap::new(); nrows], cols: vec![BTreeSet::new(); ncols] }
    }

    pub fn from_dense(rows: &[Vec<i64>]) -> Self {
        let ncols = rows.first().map_or(0, Vec::len);
        let mut m = Self::zeros(rows.len(), ncols);
        for (i, r) in rows.iter().enumerate() {
            for (j, &v) in r.iter().enumerate() {
                m.set(i, j, BigInt::from(v));
            }
        }
        m
    }

    pub fn nrows(&self) -> usize {
        self.rows.len()
    }

    pub fn ncols(&self) -> usize {
        self.cols.len()
    }

    pub fn get(&self, i: usize, j: usize) -> BigInt {
        self.rows[i].get(&j).cloned().unwrap_or_default()
    }

    pub fn set(&mut self, i: usize, j: usize, v: BigInt) {
        if v.is_zero() {
            self.rows[i].remove(&j);
            self.cols[j].remove(&i);
        } else {
            self.rows[i].insert(j, v);
            self.cols[j].insert(i);
        }
    }

    pub fn to_dense(&self) -> Vec<Vec<BigInt>> {
        (0..self.nrows()).map(|i| (0..self.ncols()).map(|j| self.get(i, j)).collect()).collect()
    }

    /// `row[target] += factor * row[source]`.
    pub fn add_row_multiple(&mut self, target: usize, source: usize, factor: &BigInt) {
        if factor.is_zero() || target == source {
            return;
        }
        let src: Vec<(usize, BigInt)> =
            self.rows[source].iter().map(|(&j, v)| (j, v.clone())).collect();
        for (j, v) in src {
            let new = self.get(target, j) + factor * v;
            self.set(target, j, new);
        }
    }

    /// `col[target] += factor * col[source]`.
    pub fn add_col_multiple(&mut self, target: usize, source: usize, factor: &BigInt) {
        if factor.is_zero() || target == source {
            return;
        }
        let rows: Vec<usize> = self.cols[source].iter().copied().collect();
        for i in rows {
            let new = self.get(i, target) + factor * self.get(i, source);
            self.set(i, target, new);
        }
    }

    pub fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        let ra = std::mem::take(&mut self.rows[a]);
        let rb = std::mem::take(&mut self.rows[b]);
        for &j in ra.keys() {
            self.cols[j].remove(&a);
        }
        for &j in rb.keys() {
            self.cols[j].remove(&b);
        }
        for &j in ra.keys() {
            self.cols[j].insert(b);
        }
        for &j in rb.keys() {
            self.cols[j].insert(a);
        }
        self.rows[a] = rb;
        self.rows[b] = ra;
    }

    /// Product of two matrices; used to verify `∂∂ = 0`.
    pub fn mul(&self, other: &SparseMatrix) -> SparseMatrix {
        assert_eq!(self.ncols(), other.nrows());
        let mut out = SparseMatrix::zeros(self.nrows(), other.ncols());
        for (i, row) in self.rows.iter().enumerate() {
            let mut acc: BTreeMap<usize, BigInt> = BTreeMap::new();
            for (k, a) in row {
                for (j, b) in &other.rows[*k] {
                    *acc.entry(*j).or_default() += a * b;
                }
            }
            for (j, v) in acc {
                out.set(i, j, v);
            }
        }
        out
    }

    pub fn is_zero(&self) -> bool {
        self.rows.iter().all(BTreeMap::is_empty)
    }
}

/// Nonzero diagonal of a Smith normal form: `d_1 | d_2 | … | d_rank`, all
/// positive.
pub fn smith_invariants(matrix: &SparseMatrix) -> Vec<BigInt> {
    let mut m = matrix.clone();
    let mut active_rows: BTreeSet<usize> = (0..m.nrows()).filter(|&i| !m.rows[i].is_empty()).collect();
    let mut diagonal = Vec::new();

    loop {
        // Pivot of minimal absolute value among active entries; units end the scan.
        let mut pivot: Option<(usize, usize, BigInt)> = None;
        for &i in &active_rows {
            for (&j, v) in &m.rows[i] {
                let a = v.abs();
                if pivot.as_ref().is_none_or(|(_, _, b)| a < *b) {
                    let unit = a.is_one();
                    pivot = Some((i, j, a));
                    if unit {
                        break;
                    }
                }
            }
            if pivot.as_ref().is_some_and(|(_, _, b)| b.is_one()) {
                break;
            }
        }
        let Some((pi, pj, _)) = pivot else { break };
        let p = m.get(pi, pj);

        // Clear the pivot column with row operations.
        let mut smaller = None;
        let others: Vec<usize> = m.cols[pj].iter().copied().filter(|&i| i != pi).collect();
        for i in others {
            let a = m.get(i, pj);
            let q = a.div_floor(&p);
            m.add_row_multiple(i, pi, &-q);
            if !m.get(i, pj).is_zero() {
                smaller = Some(());
            }
            if m.rows[i].is_empty() {
                active_rows.remove(&i);
            }
        }
        // Clear the pivot row with column operations.
        let others: Vec<usize> = m.rows[pi].keys().copied().filter(|&j| j != pj).collect();
        for j in others {
            let a = m.get(pi, j);
            let q = a.div_floor(&p);
            m.add_col_multiple(j, pj, &-q);
            if !m.get(pi, j).is_zero() {
                smaller = Some(());
            }
        }
        // A nonzero remainder is strictly smaller than the pivot; pick again.
        if smaller.is_some() {
            for i in 0..m.nrows() {
                if !m.rows[i].is_empty() {
                    active_rows.insert(i);
                } else {
                    active_rows.remove(&i);
                }
            }
            continue;
        }
        diagonal.push(p.abs());
        m.set(pi, pj, BigInt::zero());
        active_rows.remove(&pi);
    }
    normalize_diagonal(diagonal)
}

/// Turns an arbitrary positive diagonal into the divisibility chain of
/// invariant factors by repeated `(a, b) ↦ (gcd, lcm)`.
fn normalize_diagonal(mut d: Vec<BigInt>) -> Vec<BigInt> {
    d.sort();
    let n = d.len();
    for i in 0..n {
        for j in i + 1..n {
            if !(&d[j] % &d[i]).is_zero() {
                let g = d[i].gcd(&d[j]);
                let l = d[i].lcm(&d[j]);
                d[i] = g;
                d[j] = l;
            }
        }
    }
    d
}

/// Boundary matrix `∂_q : C_q → C_{q-1}` with rows indexed by `lower` and
/// columns by `upper`.
pub fn boundary_matrix(lower: &[Simplex], upper: &[Simplex]) -> SparseMatrix {
    let index: HashMap<&Simplex, usize> = lower.iter().enumerate().map(|(i, s)| (s, i)).collect();
    let mut m = SparseMatrix::zeros(lower.len(), upper.len());
    for (j, s) in upper.iter().enumerate() {
        for (k, face) in s.boundary_faces().enumerate() {
            let i = index[&face];
            m.set(i, j, BigInt::from(if k % 2 == 0 { 1 } else { -1 }));
        }
    }
    m
}

/// All boundary matrices `∂_0, …, ∂_dim` of the augmented chain complex.
pub fn boundary_matrices(k: &Complex) -> Vec<SparseMatrix> {
    let faces = k.faces_by_dim();
    faces.windows(2).map(|w| boundary_matrix(&w[0], &w[1])).collect()
}

/// Reduced integral homology of `k` in every dimension `0..=dim`; dimension
/// −1 is listed only when it is nonzero, which happens exactly for `{∅}`.
pub fn betti_and_torsion(k: &Complex) -> HomologyProfile {
    let faces = k.faces_by_dim();
    // faces[i] holds dimension i - 1.
    let sizes: Vec<usize> = faces.iter().map(Vec::len).collect();
    let mut ranks = vec![0usize; faces.len() + 1];
    let mut invariants: Vec<Vec<BigInt>> = vec![Vec::new(); faces.len() + 1];
    // ranks[i] = rank of the map out of faces[i].
    for i in 1..faces.len() {
        let inv = smith_invariants(&boundary_matrix(&faces[i - 1], &faces[i]));
        ranks[i] = inv.len();
        invariants[i] = inv;
    }
    let mut groups = Vec::new();
    for i in 0..faces.len() {
        let q = i as isize - 1;
        let betti = sizes[i] - ranks[i] - ranks[i + 1];
        let torsion: Vec<BigInt> =
            invariants[i + 1].iter().filter(|d| !d.is_one()).cloned().collect();
        if q >= 0 || betti > 0 || !torsion.is_empty() {
            groups.push(HomologyGroup { q, betti, torsion });
        }
    }
    HomologyProfile { groups, reduced: true }
}

/// Whether reduced homology vanishes in every dimension `≤ c` and `k` has a
/// vertex.
///
/// This is homological connectivity only: a vanishing result is necessary
/// for topological `c`-connectivity but does not certify `π_1 = 0`.
pub fn homological_connectivity(k: &Complex, c: isize) -> bool {
    if k.dim() < 0 {
        return false;
    }
    if c < 0 {
        return true;
    }
    let trimmed = crate::simplicial::skeleton(k, c + 1);
    betti_and_torsion(&trimmed).vanishes_through(c)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::simplicial::{build_complex, join};

    fn cycle(n: usize) -> Complex {
        build_complex(0..n, (0..n).map(|i| vec![i, (i + 1) % n])).unwrap()
    }

    #[test]
    fn circle_and_sphere() {
        let p = betti_and_torsion(&cycle(6));
        assert_eq!(p.betti(), vec![0, 1]);
        let s2 = Complex::simplex_boundary(0..4);
        assert_eq!(betti_and_torsion(&s2).betti(), vec![0, 0, 1]);
    }

    #[test]
    fn empty_face_complex_has_minus_one_homology() {
        let p = betti_and_torsion(&Complex::empty_face());
        assert_eq!(p.groups, vec![HomologyGroup { q: -1, betti: 1, torsion: vec![] }]);
    }

    #[test]
    fn two_points_are_not_connected() {
        let k = build_complex([0, 1], [vec![0], vec![1]]).unwrap();
        assert_eq!(betti_and_torsion(&k).betti(), vec![1]);
        assert!(homological_connectivity(&k, -1));
        assert!(!homological_connectivity(&k, 0));
    }

    #[test]
    fn hexagon_connectivity() {
        assert!(homological_connectivity(&cycle(6), 0));
        assert!(!homological_connectivity(&cycle(6), 1));
    }

    #[test]
    fn projective_plane_has_two_torsion() {
        // Six-vertex triangulation of RP^2.
        let facets = vec![
            vec![0, 1, 2], vec![0, 2, 3], vec![0, 3, 4], vec![0, 4, 5], vec![0, 5, 1],
            vec![1, 2, 4], vec![2, 3, 5], vec![3, 4, 1], vec![4, 5, 2], vec![5, 1, 3],
        ];
        let rp2 = build_complex(0..6, facets).unwrap();
        let p = betti_and_torsion(&rp2);
        assert_eq!(p.betti(), vec![0, 0, 0]);
        assert_eq!(p.groups[1].torsion, vec![BigInt::from(2)]);
        assert_eq!(p.euler_characteristic(), rp2.reduced_euler_characteristic());
    }

    #[test]
    fn boundary_squares_to_zero() {
        let k = join(&cycle(5), &Complex::simplex_boundary(0..3)).complex;
        let ms = boundary_matrices(&k);
        for w in ms.windows(2) {
            assert!(w[0].mul(&w[1]).is_zero());
        }
    }

    #[test]
    fn smith_of_small_matrices() {
        let m = SparseMatrix::from_dense(&[vec![2, 4, 4], vec![-6, 6, 12], vec![10, -4, -16]]);
        assert_eq!(smith_invariants(&m), vec![BigInt::from(2), BigInt::from(6), BigInt::from(12)]);
        let m = SparseMatrix::from_dense(&[vec![4, 0], vec![0, 6]]);
        assert_eq!(smith_invariants(&m), vec![BigInt::from(2), BigInt::from(12)]);
        assert!(smith_invariants(&SparseMatrix::zeros(3, 2)).is_empty());
    }
}
