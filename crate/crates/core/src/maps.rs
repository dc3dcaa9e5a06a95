//! θ-collapse maps between chessboard pseudomanifolds and their degrees.
//!
//! A surjection `θ : [m′] → [m]` merges board columns; capacities add up
//! along fibers. The degree is available both as a closed factorial quotient
//! and as a signed count of preimages of one target facet.

use std::collections::{BTreeMap, BTreeSet};

use num_bigint::{BigInt, BigUint};
use num_traits::{One, ToPrimitive, Zero};
use serde::{Deserialize, Serialize};

use crate::chessboard::{
    build_chessboard, facet_sign, fixed_dimension, sorting_sign, Cell, ChessboardSpec,
    RowPermutation, Subgroup,
};
use crate::error::{input, Error, Result};
use crate::simplicial::Simplex;

/// Default guard on `p^k` for [`obstruction_report`].
pub const OBSTRUCTION_ORDER_GUARD: u64 = 16;

/// A surjection of column sets, 0-based; serialises as the 1-based array
/// `theta[j] = i`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "Vec<usize>", into = "Vec<usize>")]
pub struct CollapseTheta {
    assignment: Vec<usize>,
    target_columns: usize,
}

impl TryFrom<Vec<usize>> for CollapseTheta {
    type Error = Error;

    fn try_from(one_based: Vec<usize>) -> Result<Self> {
        CollapseTheta::from_one_based(&one_based)
    }
}

impl From<CollapseTheta> for Vec<usize> {
    fn from(t: CollapseTheta) -> Self {
        t.assignment.iter().map(|i| i + 1).collect()
    }
}

impl CollapseTheta {
    /// From 0-based images; the target is `0..=max`.
    pub fn new(assignment: Vec<usize>) -> Result<Self> {
        let target_columns = assignment.iter().max().map_or(0, |m| m + 1);
        Self::with_target(assignment, target_columns)
    }

    pub fn with_target(assignment: Vec<usize>, target_columns: usize) -> Result<Self> {
        if assignment.is_empty() {
            return input("θ needs at least one source column");
        }
        let image: BTreeSet<usize> = assignment.iter().copied().collect();
        if let Some(&bad) = image.iter().find(|&&i| i >= target_columns) {
            return input(format!("θ maps to column {} beyond target size {target_columns}", bad + 1));
        }
        if image.len() != target_columns {
            return input(format!("θ = {:?} is not surjective onto {target_columns} columns",
                assignment.iter().map(|i| i + 1).collect::<Vec<_>>()));
        }
        Ok(CollapseTheta { assignment, target_columns })
    }

    pub fn from_one_based(theta: &[usize]) -> Result<Self> {
        if theta.contains(&0) {
            return input("θ entries are 1-based");
        }
        Self::new(theta.iter().map(|i| i - 1).collect())
    }

    pub fn constant(source_columns: usize) -> Result<Self> {
        Self::new(vec![0; source_columns])
    }

    pub fn identity(columns: usize) -> Result<Self> {
        Self::new((0..columns).collect())
    }

    /// The L-collapse `[Σ l] → [m]` whose fiber over `i` has `l_i` consecutive
    /// elements.
    pub fn l_collapse(caps: &[usize]) -> Result<Self> {
        let assignment = caps.iter().enumerate().flat_map(|(i, &l)| std::iter::repeat_n(i, l)).collect();
        Self::with_target(assignment, caps.len())
    }

    pub fn source_columns(&self) -> usize {
        self.assignment.len()
    }

    pub fn target_columns(&self) -> usize {
        self.target_columns
    }

    pub fn apply(&self, j: usize) -> usize {
        self.assignment[j]
    }

    pub fn assignment(&self) -> &[usize] {
        &self.assignment
    }

    /// Fiber `θ^{-1}(i)`, sorted.
    pub fn fiber(&self, i: usize) -> Vec<usize> {
        (0..self.assignment.len()).filter(|&j| self.assignment[j] == i).collect()
    }

    /// `b_i = Σ_{θ(j)=i} a_j`.
    pub fn collapse_caps(&self, caps: &[usize]) -> Result<Vec<usize>> {
        if caps.len() != self.assignment.len() {
            return input(format!("θ has {} source columns, cap vector has {}", self.assignment.len(), caps.len()));
        }
        let mut b = vec![0; self.target_columns];
        for (j, &a) in caps.iter().enumerate() {
            b[self.assignment[j]] += a;
        }
        Ok(b)
    }

    /// `self ∘ first`: apply `first`, then `self`.
    pub fn after(&self, first: &CollapseTheta) -> Result<CollapseTheta> {
        if first.target_columns != self.assignment.len() {
            return input("collapse maps are not composable");
        }
        Self::with_target(first.assignment.iter().map(|&j| self.assignment[j]).collect(), self.target_columns)
    }
}

/// A collapse map realised on complexes.
#[derive(Clone, Debug)]
pub struct Collapse {
    pub source: ChessboardSpec,
    pub target: ChessboardSpec,
    /// Cell id ↦ cell id.
    pub vertex_map: BTreeMap<usize, usize>,
    /// Each source facet with its image.
    pub facet_map: Vec<(Simplex, Simplex)>,
}

impl Collapse {
    pub fn image(&self, s: &Simplex) -> Simplex {
        Simplex::new(s.vertices().iter().map(|v| self.vertex_map[v]).collect())
    }
}

fn require_matching(theta: &CollapseTheta, source: &ChessboardSpec) -> Result<()> {
    if !source.has_unit_rows() {
        return input("collapse maps are defined for unit row caps");
    }
    if theta.source_columns() != source.m() {
        return input(format!("θ has {} source columns, board has {}", theta.source_columns(), source.m()));
    }
    Ok(())
}

/// Target spec of the collapse: same rows, θ-summed column caps.
pub fn collapse_spec(theta: &CollapseTheta, source: &ChessboardSpec) -> Result<ChessboardSpec> {
    require_matching(theta, source)?;
    ChessboardSpec::with_unit_rows(theta.collapse_caps(source.col_caps())?, source.n())
}

fn map_cell(theta: &CollapseTheta, source: &ChessboardSpec, target: &ChessboardSpec, id: usize) -> usize {
    let Cell(col, row) = source.cell(id);
    target.cell_id(Cell(theta.apply(col - 1) + 1, row))
}

/// Builds `Ω_θ` on every facet, checking that images are faces and that the
/// map commutes with the row action (adjacent transpositions generate `S_n`).
pub fn collapse_complex(theta: &CollapseTheta, source: &ChessboardSpec) -> Result<Collapse> {
    let target = collapse_spec(theta, source)?;
    let vertex_map: BTreeMap<usize, usize> =
        source.universe().into_iter().map(|v| (v, map_cell(theta, source, &target, v))).collect();
    let src = build_chessboard(source);
    let tgt = build_chessboard(&target);
    let mut facet_map = Vec::with_capacity(src.facets().len());
    for f in src.facets() {
        let image = Simplex::new(f.vertices().iter().map(|v| vertex_map[v]).collect());
        if image.len() != f.len() || !tgt.contains_face(&image) {
            return Err(Error::Internal(format!("Ω_θ sends facet {f} to a non-face")));
        }
        facet_map.push((f.clone(), image));
    }
    let n = source.n();
    for t in 0..n.saturating_sub(1) {
        let mut images: Vec<usize> = (0..n).collect();
        images.swap(t, t + 1);
        let g = RowPermutation::from_images(images)?;
        for (f, image) in &facet_map {
            let moved = Simplex::new(f.vertices().iter().map(|&v| vertex_map[&g.act_on_cell(source, v)]).collect());
            let image_moved = Simplex::new(image.vertices().iter().map(|&v| g.act_on_cell(&target, v)).collect());
            if moved != image_moved {
                return Err(Error::Internal(format!("Ω_θ does not commute with rows {} and {}", t + 1, t + 2)));
            }
        }
    }
    Ok(Collapse { source: source.clone(), target, vertex_map, facet_map })
}

fn factorial(n: usize) -> BigUint {
    (1..=n).fold(BigUint::one(), |acc, i| acc * BigUint::from(i))
}

/// `∏ b_i! / ∏ a_j!` for `B = θ(A)`.
pub fn degree_formula(caps: &[usize], theta: &CollapseTheta) -> Result<BigUint> {
    let b = theta.collapse_caps(caps)?;
    let num = b.iter().fold(BigUint::one(), |acc, &x| acc * factorial(x));
    let den = caps.iter().fold(BigUint::one(), |acc, &x| acc * factorial(x));
    if !(&num % &den).is_zero() {
        return Err(Error::Internal("factorial quotient is not integral".into()));
    }
    Ok(num / den)
}

/// Signed count of source facets over the first facet of the target in
/// canonical order.
pub fn degree_by_counting(theta: &CollapseTheta, source: &ChessboardSpec) -> Result<BigInt> {
    let target = collapse_spec(theta, source)?;
    target.require_pseudomanifold()?;
    let facet = build_chessboard(&target)
        .facets()
        .first()
        .cloned()
        .ok_or_else(|| Error::Internal("target has no facets".into()))?;
    degree_by_counting_at(theta, source, &facet)
}

/// Signed count of the source facets mapped onto `target_facet`, each
/// weighted by the product of source orientation, target orientation and the
/// sign of the vertex reordering under `Ω_θ`.
pub fn degree_by_counting_at(
    theta: &CollapseTheta,
    source: &ChessboardSpec,
    target_facet: &Simplex,
) -> Result<BigInt> {
    source.require_pseudomanifold()?;
    let target = collapse_spec(theta, source)?;
    let target_sign = facet_sign(&target, target_facet)?;
    let target_cells = target.cells(target_facet);

    // For every occupied target cell the source cell lies in the same row and
    // in a column of the fiber over the target column.
    let choices: Vec<(usize, Vec<usize>)> = target_cells
        .iter()
        .map(|c| (c.row(), theta.fiber(c.column() - 1)))
        .collect();
    let mut total = BigInt::zero();
    let mut load = vec![0usize; source.m()];
    let mut picked = Vec::with_capacity(choices.len());
    let mut stack_err = None;
    count_preimages(
        source, &target, theta, &choices, target_facet, target_sign, 0,
        &mut load, &mut picked, &mut total, &mut stack_err,
    );
    match stack_err {
        Some(e) => Err(e),
        None => Ok(total),
    }
}

#[allow(clippy::too_many_arguments)]
fn count_preimages(
    source: &ChessboardSpec,
    target: &ChessboardSpec,
    theta: &CollapseTheta,
    choices: &[(usize, Vec<usize>)],
    target_facet: &Simplex,
    target_sign: i64,
    depth: usize,
    load: &mut [usize],
    picked: &mut Vec<usize>,
    total: &mut BigInt,
    err: &mut Option<Error>,
) {
    if err.is_some() {
        return;
    }
    if depth == choices.len() {
        let facet = Simplex::new(picked.clone());
        let image: Vec<usize> = picked.iter().map(|&v| map_cell(theta, source, target, v)).collect();
        if Simplex::new(image.clone()) != *target_facet {
            *err = Some(Error::Internal(format!("{facet} does not map onto {target_facet}")));
            return;
        }
        match facet_sign(source, &facet) {
            Ok(s) => *total += s * target_sign * sorting_sign(&image),
            Err(e) => *err = Some(e),
        }
        return;
    }
    let (row, fiber) = &choices[depth];
    for &j in fiber {
        if load[j] < source.col_caps()[j] {
            load[j] += 1;
            picked.push(source.cell_id(Cell(j + 1, *row)));
            count_preimages(source, target, theta, choices, target_facet, target_sign, depth + 1, load, picked, total, err);
            picked.pop();
            load[j] -= 1;
        }
    }
}

/// Whether `p` is prime (trial division).
pub fn is_prime(p: u64) -> bool {
    if p < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= p {
        if p.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

/// `ord_p(m!) = Σ_{i ≥ 1} ⌊m / p^i⌋`.
pub fn legendre_valuation(p: u64, m: u64) -> Result<u64> {
    if !is_prime(p) {
        return input(format!("{p} is not prime"));
    }
    let mut total = 0;
    let mut q = m / p;
    while q > 0 {
        total += q;
        q /= p;
    }
    Ok(total)
}

/// `ord_p(x)` for a nonzero integer.
pub fn valuation(p: u64, x: &BigUint) -> u64 {
    let p = BigUint::from(p);
    let mut x = x.clone();
    let mut v = 0;
    while !x.is_zero() && (&x % &p).is_zero() {
        x /= &p;
        v += 1;
    }
    v
}

/// The multiplicity vector `(1, p, …, p^{k−1})` repeated `p − 1` times.
pub fn l_vector(p: u64, k: u32) -> Vec<usize> {
    let block: Vec<usize> = (0..k).map(|e| p.pow(e) as usize).collect();
    (0..p - 1).flat_map(|_| block.iter().copied()).collect()
}

/// All subspaces of `F_p^k`, each given by a basis in reduced row echelon form.
pub fn subspaces(p: u64, k: usize) -> Vec<Vec<Vec<u64>>> {
    let mut out = Vec::new();
    for dim in 0..=k {
        // Choose pivot columns, then free entries to the right of each pivot
        // in non-pivot columns.
        for pivots in combinations(k, dim) {
            let free: Vec<(usize, usize)> = pivots
                .iter()
                .enumerate()
                .flat_map(|(r, &pc)| (pc + 1..k).filter(|c| !pivots.contains(c)).map(move |c| (r, c)))
                .collect();
            let count = (p as usize).pow(free.len() as u32);
            for code in 0..count {
                let mut basis = vec![vec![0u64; k]; dim];
                for (r, &pc) in pivots.iter().enumerate() {
                    basis[r][pc] = 1;
                }
                let mut c = code;
                for &(r, col) in &free {
                    basis[r][col] = (c % p as usize) as u64;
                    c /= p as usize;
                }
                out.push(basis);
            }
        }
    }
    out
}

fn combinations(n: usize, k: usize) -> Vec<Vec<usize>> {
    let s = Simplex::new((0..n).collect());
    s.subsets_of_size(k).into_iter().map(|c| c.vertices().to_vec()).collect()
}

/// Gaussian binomial `[k choose j]_p`, the number of `j`-dimensional subspaces.
pub fn gaussian_binomial(p: u64, k: u32, j: u32) -> u64 {
    if j > k {
        return 0;
    }
    let mut num: u128 = 1;
    let mut den: u128 = 1;
    for i in 0..j {
        num *= (p as u128).pow(k - i) - 1;
        den *= (p as u128).pow(i + 1) - 1;
    }
    (num / den) as u64
}

/// Translation by `v` on `F_p^k ≅ [p^k]`, indices written in base `p`.
fn translation(p: u64, k: usize, v: &[u64]) -> Result<RowPermutation> {
    let order = (p as usize).pow(k as u32);
    let images = (0..order)
        .map(|x| {
            let mut y = 0;
            let mut rest = x;
            let mut place = 1;
            for &vi in v.iter().take(k) {
                let digit = (rest % p as usize + vi as usize) % p as usize;
                y += digit * place;
                rest /= p as usize;
                place *= p as usize;
            }
            y
        })
        .collect();
    RowPermutation::from_images(images)
}

/// Big integers as decimal strings.
mod decimal {
    use num_bigint::BigUint;
    use serde::{de, Deserialize, Deserializer, Serializer};

    pub fn serialize<S: Serializer>(x: &BigUint, s: S) -> Result<S::Ok, S::Error> {
        s.collect_str(x)
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<BigUint, D::Error> {
        String::deserialize(d)?.parse().map_err(de::Error::custom)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SubgroupResult {
    /// Basis of the subspace of `F_p^k`, rows in reduced echelon form.
    pub basis: Vec<Vec<u64>>,
    pub order: usize,
    pub orbit_sizes: Vec<usize>,
    pub dim_fixed_source: isize,
    pub dim_fixed_target: isize,
    pub inequality_holds: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ObstructionReport {
    pub p: u64,
    pub k: u32,
    pub d: u32,
    pub col_caps: Vec<usize>,
    #[serde(with = "decimal")]
    pub degree: BigUint,
    pub degree_mod_p: u64,
    /// `deg^{d+1} mod p`, the degree of the joined map.
    pub joined_degree_mod_p: u64,
    pub numerator_valuation: u64,
    pub denominator_valuation: u64,
    pub subgroup_count: usize,
    pub gaussian_count: u64,
    pub subgroup_results: Vec<SubgroupResult>,
    pub verdict: bool,
}

/// Computes both ingredients of the mod-p degree argument for
/// `Ω_θ : Δ^{𝟙;L}_{k(p−1), p^k} → ∂Δ_[p^k]`: the degree and its residue,
/// and the fixed-point dimension comparison for every subgroup of `(ℤ_p)^k`
/// acting regularly on the rows.
pub fn obstruction_report(p: u64, k: u32, d: u32) -> Result<ObstructionReport> {
    obstruction_report_guarded(p, k, d, OBSTRUCTION_ORDER_GUARD)
}

pub fn obstruction_report_guarded(p: u64, k: u32, d: u32, guard: u64) -> Result<ObstructionReport> {
    if !is_prime(p) {
        return input(format!("{p} is not prime"));
    }
    if k == 0 || d == 0 {
        return input("k and d must be positive");
    }
    let order = p.checked_pow(k).filter(|&o| o <= guard).ok_or_else(|| {
        Error::Resource(format!("p^k = {p}^{k} exceeds the guard {guard}"))
    })?;
    let caps = l_vector(p, k);
    let source = ChessboardSpec::pseudomanifold(caps.clone())?;
    let sphere = ChessboardSpec::simplex_boundary(order as usize)?;
    let theta = CollapseTheta::constant(caps.len())?;
    let degree = degree_formula(&caps, &theta)?;
    let pb = BigUint::from(p);
    let degree_mod_p = (&degree % &pb).to_u64().unwrap_or(0);
    let joined_degree_mod_p = degree.modpow(&BigUint::from(d + 1), &pb).to_u64().unwrap_or(0);
    let numerator_valuation = legendre_valuation(p, order - 1)?;
    let denominator_valuation =
        caps.iter().map(|&a| legendre_valuation(p, a as u64)).sum::<Result<u64>>()?;

    let spaces = subspaces(p, k as usize);
    let gaussian_count = (0..=k).map(|j| gaussian_binomial(p, k, j)).sum();
    let mut subgroup_results = Vec::with_capacity(spaces.len());
    for basis in spaces {
        let gens = basis.iter().map(|v| translation(p, k as usize, v)).collect::<Result<Vec<_>>>()?;
        let h = Subgroup::from_generators(order as usize, gens)?;
        let dim_fixed_source = fixed_dimension(&source, &h)?;
        let dim_fixed_target = fixed_dimension(&sphere, &h)?;
        subgroup_results.push(SubgroupResult {
            basis,
            order: h.order(),
            orbit_sizes: h.orbits().iter().map(Vec::len).collect(),
            dim_fixed_source,
            dim_fixed_target,
            inequality_holds: dim_fixed_source <= dim_fixed_target,
        });
    }
    let verdict = degree_mod_p != 0 && subgroup_results.iter().all(|r| r.inequality_holds);
    Ok(ObstructionReport {
        p,
        k,
        d,
        col_caps: caps,
        degree,
        degree_mod_p,
        joined_degree_mod_p,
        numerator_valuation,
        denominator_valuation,
        subgroup_count: subgroup_results.len(),
        gaussian_count,
        subgroup_results,
        verdict,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::chessboard::orient;

    fn spec(cols: &[usize]) -> ChessboardSpec {
        ChessboardSpec::pseudomanifold(cols.to_vec()).unwrap()
    }

    #[test]
    fn theta_validation() {
        assert!(CollapseTheta::new(vec![0, 2]).is_err());
        assert!(CollapseTheta::from_one_based(&[1, 0]).is_err());
        let t: CollapseTheta = serde_json::from_str("[1,2,2]").unwrap();
        assert_eq!(t.collapse_caps(&[1, 1, 1]).unwrap(), vec![1, 2]);
        assert_eq!(serde_json::to_string(&t).unwrap(), "[1,2,2]");
        assert!(serde_json::from_str::<CollapseTheta>("[2,2]").is_err());
    }

    #[test]
    fn constant_collapse_onto_sphere() {
        let c = collapse_complex(&CollapseTheta::constant(2).unwrap(), &spec(&[1, 2])).unwrap();
        assert_eq!(c.target, ChessboardSpec::simplex_boundary(4).unwrap());
        assert_eq!(c.facet_map.len(), 12);
    }

    #[test]
    fn identity_collapse() {
        let s = spec(&[1, 2]);
        let c = collapse_complex(&CollapseTheta::identity(2).unwrap(), &s).unwrap();
        assert_eq!(c.target, s);
        assert!(c.vertex_map.iter().all(|(a, b)| a == b));
        assert_eq!(degree_by_counting(&CollapseTheta::identity(2).unwrap(), &s).unwrap(), BigInt::one());
    }

    #[test]
    fn partial_collapse_of_standard_board() {
        let theta = CollapseTheta::from_one_based(&[1, 1, 2]).unwrap();
        let c = collapse_complex(&theta, &ChessboardSpec::standard(3, 4).unwrap()).unwrap();
        assert_eq!(c.target, ChessboardSpec::with_unit_rows(vec![2, 1], 4).unwrap());
    }

    #[test]
    fn non_matching_theta_is_rejected() {
        assert!(collapse_complex(&CollapseTheta::constant(3).unwrap(), &spec(&[1, 2])).is_err());
    }

    #[test]
    fn closed_formula_values() {
        let c2 = CollapseTheta::constant(2).unwrap();
        assert_eq!(degree_formula(&[1, 2], &c2).unwrap(), BigUint::from(3u32));
        let t = CollapseTheta::from_one_based(&[1, 1, 2]).unwrap();
        assert_eq!(degree_formula(&[1, 1, 1], &t).unwrap(), BigUint::from(2u32));
        let c3 = CollapseTheta::constant(3).unwrap();
        assert_eq!(degree_formula(&[1, 2, 4], &c3).unwrap(), BigUint::from(105u32));
    }

    #[test]
    fn counting_on_named_facets() {
        let s = spec(&[1, 2]);
        let theta = CollapseTheta::constant(2).unwrap();
        let sphere = ChessboardSpec::simplex_boundary(4).unwrap();
        let rows_234 = Simplex::new((2..=4).map(|r| sphere.cell_id(Cell(1, r))).collect());
        assert_eq!(degree_by_counting_at(&theta, &s, &rows_234).unwrap(), BigInt::from(3));
        let std = ChessboardSpec::standard(2, 3).unwrap();
        assert_eq!(degree_by_counting(&theta, &std).unwrap(), BigInt::from(2));
    }

    #[test]
    fn preimages_are_positively_oriented() {
        // Every preimage facet contributes +1 on each target facet.
        let s = spec(&[1, 2]);
        let theta = CollapseTheta::constant(2).unwrap();
        let c = collapse_complex(&theta, &s).unwrap();
        let src_tau = orient(&s).unwrap();
        let tgt_tau = orient(&c.target).unwrap();
        for (f, img) in &c.facet_map {
            assert_eq!(src_tau.get(f) * tgt_tau.get(img), 1);
        }
    }

    #[test]
    fn legendre() {
        assert_eq!(legendre_valuation(2, 8).unwrap(), 7);
        for p in [2, 3, 5, 7, 11] {
            assert_eq!(legendre_valuation(p, p).unwrap(), 1);
        }
        assert_eq!(legendre_valuation(2, 3).unwrap(), 1);
        assert_eq!(legendre_valuation(2, 4).unwrap() - 2, 1);
        assert!(legendre_valuation(4, 8).is_err());
        assert_eq!(legendre_valuation(3, 0).unwrap(), 0);
    }

    #[test]
    fn subspace_counts_match_gaussian_binomials() {
        for (p, k) in [(2u64, 1u32), (2, 2), (2, 3), (3, 1), (3, 2), (5, 1), (2, 4)] {
            let expected: u64 = (0..=k).map(|j| gaussian_binomial(p, k, j)).sum();
            assert_eq!(subspaces(p, k as usize).len() as u64, expected, "p={p} k={k}");
        }
        assert_eq!(gaussian_binomial(2, 2, 1), 3);
    }

    #[test]
    fn obstruction_small_cases() {
        let r = obstruction_report(2, 2, 1).unwrap();
        assert_eq!(r.degree, BigUint::from(3u32));
        assert_eq!(r.degree_mod_p, 1);
        assert_eq!(r.subgroup_results.len(), 5);
        assert!(r.subgroup_results.iter().all(|s| s.inequality_holds));
        assert!(r.verdict);

        let r = obstruction_report(3, 1, 1).unwrap();
        assert_eq!(r.degree, BigUint::from(2u32));
        assert_eq!(r.degree_mod_p, 2);

        let r = obstruction_report(2, 1, 1).unwrap();
        assert_eq!(r.degree, BigUint::one());
        assert_eq!(r.col_caps, vec![1]);

        assert!(matches!(obstruction_report(5, 2, 1), Err(Error::Resource(_))));
        assert!(matches!(obstruction_report(4, 1, 1), Err(Error::Input(_))));
    }
}
