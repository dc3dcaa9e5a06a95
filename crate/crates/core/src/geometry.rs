//! Exact rational point configurations and the search for rainbow Tverberg
//! partitions under multiplicity, disjointness and dimension constraints.
//!
//! Faces are sets of point indices. A candidate collection of `r` faces is
//! accepted when an exact LP finds convex coefficients on every face that
//! produce one common point; the coefficients are kept as a certificate and
//! can be re-checked by [`verify_certificate`] without the solver.

pub mod lp;

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;
use std::str::FromStr;
use std::sync::atomic::{AtomicUsize, Ordering};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{input, Error, Result};
use crate::maps::{is_prime, l_vector, CollapseTheta};
use crate::simplicial::{build_complex, Complex, Simplex};

/// Default guard on `p^k` for [`build_example_a`].
pub const EXAMPLE_A_ORDER_GUARD: u64 = 9;

/// An exact rational serialised as the canonical string `"p/q"`.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(try_from = "String", into = "String")]
pub struct Rational(pub BigRational);

impl Rational {
    pub fn new(numer: i64, denom: i64) -> Result<Self> {
        if denom == 0 {
            return input("zero denominator");
        }
        Ok(Rational(BigRational::new(numer.into(), denom.into())))
    }

    pub fn integer(n: i64) -> Self {
        Rational(BigRational::from_integer(n.into()))
    }

    pub fn value(&self) -> &BigRational {
        &self.0
    }
}

impl FromStr for Rational {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        let (num, den) = s.split_once('/').unwrap_or((s, "1"));
        let parse = |t: &str| {
            t.trim().parse::<BigInt>().map_err(|_| Error::Input(format!("malformed rational {s:?}")))
        };
        let (num, den) = (parse(num)?, parse(den)?);
        if den.is_zero() {
            return input(format!("malformed rational {s:?}: zero denominator"));
        }
        Ok(Rational(BigRational::new(num, den)))
    }
}

impl TryFrom<String> for Rational {
    type Error = Error;

    fn try_from(s: String) -> Result<Self> {
        s.parse()
    }
}

impl From<Rational> for String {
    fn from(q: Rational) -> Self {
        q.to_string()
    }
}

impl fmt::Display for Rational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}/{}", self.0.numer(), self.0.denom())
    }
}

impl From<BigRational> for Rational {
    fn from(q: BigRational) -> Self {
        Rational(q)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Point {
    pub coords: Vec<Rational>,
    pub color: usize,
    pub multiplicity: usize,
}

impl Point {
    pub fn new(coords: Vec<Rational>, color: usize, multiplicity: usize) -> Self {
        Point { coords, color, multiplicity }
    }
}

/// Colored points in `Q^d`, each with a positive multiplicity.
///
/// Colors are arbitrary labels here; the search modes decide whether empty
/// color classes are allowed.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(try_from = "ConfigData", into = "ConfigData")]
pub struct PointConfig {
    d: usize,
    points: Vec<Point>,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct ConfigData {
    pub d: usize,
    pub points: Vec<Point>,
}

impl TryFrom<ConfigData> for PointConfig {
    type Error = Error;

    fn try_from(c: ConfigData) -> Result<Self> {
        PointConfig::new(c.d, c.points)
    }
}

impl From<PointConfig> for ConfigData {
    fn from(c: PointConfig) -> Self {
        ConfigData { d: c.d, points: c.points }
    }
}

impl PointConfig {
    pub fn new(d: usize, points: Vec<Point>) -> Result<Self> {
        if d == 0 {
            return input("ambient dimension must be positive");
        }
        if points.is_empty() {
            return input("configuration has no points");
        }
        for (i, p) in points.iter().enumerate() {
            if p.coords.len() != d {
                return input(format!("point {i} has {} coordinates, expected {d}", p.coords.len()));
            }
            if p.multiplicity == 0 {
                return input(format!("point {i} has multiplicity 0"));
            }
        }
        Ok(PointConfig { d, points })
    }

    pub fn d(&self) -> usize {
        self.d
    }

    pub fn points(&self) -> &[Point] {
        &self.points
    }

    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }

    pub fn color_count(&self) -> usize {
        self.points.iter().map(|p| p.color + 1).max().unwrap_or(0)
    }

    /// Point indices by color, `0..color_count()`.
    pub fn color_classes(&self) -> Vec<Vec<usize>> {
        let mut classes = vec![Vec::new(); self.color_count()];
        for (i, p) in self.points.iter().enumerate() {
            classes[p.color].push(i);
        }
        classes
    }

    pub fn colors_contiguous(&self) -> bool {
        self.color_classes().iter().all(|c| !c.is_empty())
    }

    pub fn is_rainbow(&self, face: &Simplex) -> bool {
        let mut seen = BTreeSet::new();
        face.vertices().iter().all(|&v| seen.insert(self.points[v].color))
    }

    pub fn total_weight(&self) -> usize {
        self.points.iter().map(|p| p.multiplicity).sum()
    }

    fn coord(&self, v: usize, c: usize) -> &BigRational {
        &self.points[v].coords[c].0
    }
}

/// Which theorem's hypotheses an instance claims to satisfy.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Mode {
    #[serde(rename = "prime-power-1.3")]
    PrimePower,
    #[serde(rename = "lifted-1.4")]
    Lifted,
    #[serde(rename = "generalized-6.2")]
    Generalized,
    #[serde(rename = "equal-classes-6.3")]
    EqualClasses,
    #[serde(rename = "balanced-1.6")]
    Balanced,
    #[serde(rename = "free")]
    Free,
}

impl Mode {
    /// Whether an `Exhausted` result contradicts a theorem.
    pub fn is_theorem_backed(self) -> bool {
        self != Mode::Free
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Disjointness {
    #[serde(rename = "multiset-proper")]
    MultisetProper,
    #[serde(rename = "vertex-disjoint")]
    VertexDisjoint,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum DimPolicy {
    /// Faces of dimension at most `k`, at most `s` of dimension exactly `k`.
    #[serde(rename = "literal-k")]
    LiteralK,
    /// Faces of dimension at most `k + 1`, at most `s` of dimension `k + 1`.
    #[serde(rename = "shifted-k-plus-1")]
    ShiftedKPlus1,
}

impl DimPolicy {
    /// The dimension that at most `s` faces may reach.
    fn top(self, caps: &DimCaps) -> usize {
        match self {
            DimPolicy::LiteralK => caps.k,
            DimPolicy::ShiftedKPlus1 => caps.k + 1,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct DimCaps {
    pub k: usize,
    pub s: usize,
    #[serde(default = "default_policy")]
    pub policy: DimPolicy,
}

fn default_policy() -> DimPolicy {
    DimPolicy::ShiftedKPlus1
}

/// One vertex added back when enlarging the multiset.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct AddedVertex {
    pub color: usize,
    pub multiplicity: usize,
}

/// Data showing that the points extend to `L^{⊕(d+c+1)} ⊕ [1]` by adding
/// `c` pairwise disjoint sets of light weight.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Enlargement {
    pub c: usize,
    pub sets: Vec<Vec<AddedVertex>>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(try_from = "InstanceData", into = "InstanceData")]
pub struct TverbergInstance {
    pub config: PointConfig,
    pub r: usize,
    pub mode: Mode,
    pub dim_caps: Option<DimCaps>,
    pub disjointness: Disjointness,
    pub enlargement: Option<Enlargement>,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct InstanceData {
    pub d: usize,
    pub points: Vec<Point>,
    pub r: usize,
    pub mode: Mode,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub dim_caps: Option<DimCaps>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub disjointness: Option<Disjointness>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub enlargement: Option<Enlargement>,
}

impl TryFrom<InstanceData> for TverbergInstance {
    type Error = Error;

    fn try_from(data: InstanceData) -> Result<Self> {
        let config = PointConfig::new(data.d, data.points)?;
        let disjointness = data.disjointness.unwrap_or(match data.mode {
            Mode::Lifted | Mode::Balanced => Disjointness::VertexDisjoint,
            _ => Disjointness::MultisetProper,
        });
        let mut inst = TverbergInstance::new(config, data.r, data.mode, disjointness)?;
        inst.dim_caps = data.dim_caps;
        inst.enlargement = data.enlargement;
        Ok(inst)
    }
}

impl From<TverbergInstance> for InstanceData {
    fn from(i: TverbergInstance) -> Self {
        InstanceData {
            d: i.config.d,
            points: i.config.points,
            r: i.r,
            mode: i.mode,
            dim_caps: i.dim_caps,
            disjointness: Some(i.disjointness),
            enlargement: i.enlargement,
        }
    }
}

/// `r = p^k` with `p` prime.
pub fn prime_power(r: u64) -> Option<(u64, u32)> {
    if r < 2 {
        return None;
    }
    let p = (2..=r).find(|&q| r.is_multiple_of(q))?;
    let mut rest = r;
    let mut k = 0;
    while rest.is_multiple_of(p) {
        rest /= p;
        k += 1;
    }
    (rest == 1 && is_prime(p)).then_some((p, k))
}

/// `(k, s)` with `rk + s = (r−1)d` and `0 ≤ s < r`; `k` must be positive.
pub fn balanced_parameters(r: usize, d: usize) -> Result<(usize, usize)> {
    let total = (r - 1) * d;
    let (k, s) = (total / r, total % r);
    if k == 0 {
        return input(format!(
            "no positive k solves {r}k + s = {total} with 0 ≤ s < {r}; the dimension caps are undefined for r={r}, d={d}"
        ));
    }
    Ok((k, s))
}

impl TverbergInstance {
    pub fn new(config: PointConfig, r: usize, mode: Mode, disjointness: Disjointness) -> Result<Self> {
        if r < 2 {
            return input("r must be at least 2");
        }
        Ok(TverbergInstance { config, r, mode, dim_caps: None, disjointness, enlargement: None })
    }

    pub fn with_dim_caps(mut self, caps: DimCaps) -> Self {
        self.dim_caps = Some(caps);
        self
    }

    pub fn with_enlargement(mut self, e: Enlargement) -> Self {
        self.enlargement = Some(e);
        self
    }

    /// Usage budget per point.
    pub fn budgets(&self) -> Vec<usize> {
        match self.disjointness {
            Disjointness::VertexDisjoint => vec![1; self.config.len()],
            Disjointness::MultisetProper => self.config.points.iter().map(|p| p.multiplicity).collect(),
        }
    }

    fn prime_power_r(&self) -> Result<(u64, u32)> {
        prime_power(self.r as u64).ok_or_else(|| Error::Input(format!("r = {} is not a prime power", self.r)))
    }

    fn require_disjointness(&self, want: Disjointness) -> Result<()> {
        if self.disjointness != want {
            return input(format!("mode {:?} requires {:?} faces", self.mode, want));
        }
        Ok(())
    }

    /// Checks the hypotheses of the instance's mode.
    pub fn validate(&self) -> Result<()> {
        if self.r < 2 {
            return input("r must be at least 2");
        }
        let cfg = &self.config;
        let d = cfg.d;
        match self.mode {
            Mode::Free => {}
            Mode::PrimePower => {
                let (p, k) = self.prime_power_r()?;
                self.require_disjointness(Disjointness::MultisetProper)?;
                let classes = contiguous_classes(cfg, d + 2)?;
                let l = sorted(l_vector(p, k));
                for (i, class) in classes.iter().take(d + 1).enumerate() {
                    let got = sorted(class.iter().map(|&v| cfg.points[v].multiplicity).collect());
                    if got != l {
                        return input(format!("color {i} has multiplicities {got:?}, expected {l:?}"));
                    }
                }
                let exc = &classes[d + 1];
                if exc.len() != 1 || cfg.points[exc[0]].multiplicity != 1 {
                    return input(format!("color {} must be a single point of multiplicity 1", d + 1));
                }
            }
            Mode::Lifted => {
                let (p, k) = self.prime_power_r()?;
                self.require_disjointness(Disjointness::VertexDisjoint)?;
                let classes = contiguous_classes(cfg, d + 2)?;
                if cfg.points.iter().any(|pt| pt.multiplicity != 1) {
                    return input("lifted instances carry multiplicity 1 everywhere");
                }
                let l = l_vector(p, k);
                for (i, class) in classes.iter().take(d + 1).enumerate() {
                    if class.len() != self.r - 1 {
                        return input(format!("color {i} has {} points, expected {}", class.len(), self.r - 1));
                    }
                    let clusters = coincidence_sizes(cfg, class);
                    if !packs_into(&l, &clusters) {
                        return input(format!("color {i} does not factor through an L-collapse: cluster sizes {clusters:?}"));
                    }
                }
                if classes[d + 1].len() != 1 {
                    return input(format!("color {} must be a single point", d + 1));
                }
            }
            Mode::Generalized => self.validate_generalized()?,
            Mode::EqualClasses => {
                let (p, k) = self.prime_power_r()?;
                self.require_disjointness(Disjointness::MultisetProper)?;
                if cfg.color_count() > d + 2 {
                    return input(format!("at most {} colors allowed, found {}", d + 2, cfg.color_count()));
                }
                let allowed: Vec<usize> = (0..k).map(|e| p.pow(e) as usize).collect();
                for (i, class) in cfg.color_classes().iter().enumerate() {
                    let mut counts = BTreeMap::new();
                    for &v in class {
                        let m = cfg.points[v].multiplicity;
                        if !allowed.contains(&m) {
                            return input(format!("multiplicity {m} in color {i} is not in {allowed:?}"));
                        }
                        *counts.entry(m).or_insert(0u64) += 1;
                    }
                    if let Some((m, c)) = counts.iter().find(|(_, &c)| c > p - 1) {
                        return input(format!("multiplicity {m} used {c} times in color {i}, limit {}", p - 1));
                    }
                }
                let want = (self.r - 1) * (d + 1) + 1;
                if cfg.total_weight() != want {
                    return input(format!("total multiplicity {} differs from {want}", cfg.total_weight()));
                }
            }
            Mode::Balanced => {
                self.prime_power_r()?;
                self.require_disjointness(Disjointness::VertexDisjoint)?;
                let n = (self.r - 1) * (d + 2);
                if cfg.len() != n + 1 {
                    return input(format!("balanced instances need {} points, found {}", n + 1, cfg.len()));
                }
                if cfg.points.iter().any(|pt| pt.multiplicity != 1) {
                    return input("balanced instances carry multiplicity 1 everywhere");
                }
                let q = self.r.div_ceil(2);
                if let Some((i, c)) = cfg.color_classes().iter().enumerate().find(|(_, c)| c.len() > q) {
                    return input(format!("color {i} has {} points, limit ⌊(r+1)/2⌋ = {q}", c.len()));
                }
                let (k, s) = balanced_parameters(self.r, d)?;
                if let Some(caps) = self.dim_caps {
                    if (caps.k, caps.s) != (k, s) {
                        return input(format!("dim caps (k,s) = ({},{}) differ from ({k},{s})", caps.k, caps.s));
                    }
                }
            }
        }
        Ok(())
    }

    fn validate_generalized(&self) -> Result<()> {
        let cfg = &self.config;
        let d = cfg.d;
        let (p, k) = self.prime_power_r()?;
        self.require_disjointness(Disjointness::MultisetProper)?;
        let e = self.enlargement.as_ref().ok_or_else(|| Error::Input("generalized mode needs enlargement data".into()))?;
        if e.c == 0 || e.sets.len() != e.c {
            return input(format!("enlargement declares c = {} but lists {} sets", e.c, e.sets.len()));
        }
        let colors = d + e.c + 2;
        let n = k as usize * (p as usize - 1) * (d + 1);
        if cfg.len() != n + 1 {
            return input(format!("expected {} points, found {}", n + 1, cfg.len()));
        }
        if cfg.color_count() > colors {
            return input(format!("at most {colors} colors allowed, found {}", cfg.color_count()));
        }
        for (i, s) in e.sets.iter().enumerate() {
            let w: usize = s.iter().map(|a| a.multiplicity).sum();
            if w > self.r - 1 {
                return input(format!("added set {i} has weight {w} > r − 1 = {}", self.r - 1));
            }
            if let Some(a) = s.iter().find(|a| a.color >= colors || a.multiplicity == 0) {
                return input(format!("added vertex {a:?} is invalid"));
            }
        }
        let mut per_color: Vec<Vec<usize>> = vec![Vec::new(); colors];
        for pt in &cfg.points {
            per_color[pt.color].push(pt.multiplicity);
        }
        for a in e.sets.iter().flatten() {
            per_color[a.color].push(a.multiplicity);
        }
        let l = sorted(l_vector(p, k));
        for (i, ms) in per_color.iter().enumerate() {
            let want = if i == colors - 1 { vec![1] } else { l.clone() };
            if sorted(ms.clone()) != want {
                return input(format!("enlarged color {i} has multiplicities {:?}, expected {want:?}", sorted(ms.clone())));
            }
        }
        Ok(())
    }
}

fn sorted(mut v: Vec<usize>) -> Vec<usize> {
    v.sort_unstable();
    v
}

fn contiguous_classes(cfg: &PointConfig, count: usize) -> Result<Vec<Vec<usize>>> {
    let classes = cfg.color_classes();
    if classes.len() != count || !cfg.colors_contiguous() {
        return input(format!("expected exactly the colors 0..{}", count - 1));
    }
    Ok(classes)
}

/// Sizes of the groups of coinciding points within `class`.
fn coincidence_sizes(cfg: &PointConfig, class: &[usize]) -> Vec<usize> {
    let mut groups: BTreeMap<&[Rational], usize> = BTreeMap::new();
    for &v in class {
        *groups.entry(cfg.points[v].coords.as_slice()).or_insert(0) += 1;
    }
    groups.into_values().collect()
}

/// Whether the parts can be distributed into bins of exactly the given sizes.
fn packs_into(parts: &[usize], bins: &[usize]) -> bool {
    fn go(parts: &[usize], room: &mut [usize]) -> bool {
        let Some((&first, rest)) = parts.split_first() else {
            return room.iter().all(|&r| r == 0);
        };
        for i in 0..room.len() {
            if room[i] >= first && !room[..i].contains(&room[i]) {
                room[i] -= first;
                if go(rest, room) {
                    return true;
                }
                room[i] += first;
            }
        }
        false
    }
    let mut parts = parts.to_vec();
    parts.sort_unstable_by(|a, b| b.cmp(a));
    go(&parts, &mut bins.to_vec())
}

/// Convex coefficients per face and the common point they produce.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Intersection {
    pub witness: Vec<Rational>,
    /// `certificates[i][j]` weights the `j`-th vertex of face `i`.
    pub certificates: Vec<Vec<Rational>>,
}

/// Exact test whether the convex hulls of the faces share a point.
pub fn hulls_intersect(config: &PointConfig, faces: &[Simplex]) -> Option<Intersection> {
    assert!(!faces.is_empty() && faces.iter().all(|f| !f.is_empty()), "faces must be nonempty");
    let d = config.d;
    let offsets: Vec<usize> = faces
        .iter()
        .scan(0, |acc, f| {
            let o = *acc;
            *acc += f.len();
            Some(o)
        })
        .collect();
    let nvars: usize = faces.iter().map(Simplex::len).sum();
    let mut a = Vec::with_capacity(faces.len() * (d + 1));
    let mut b = Vec::with_capacity(faces.len() * (d + 1));
    for (i, f) in faces.iter().enumerate() {
        let mut row = vec![BigRational::zero(); nvars];
        for j in 0..f.len() {
            row[offsets[i] + j] = BigRational::one();
        }
        a.push(row);
        b.push(BigRational::one());
    }
    for (i, f) in faces.iter().enumerate().skip(1) {
        for c in 0..d {
            let mut row = vec![BigRational::zero(); nvars];
            for (j, &v) in f.vertices().iter().enumerate() {
                row[offsets[i] + j] = config.coord(v, c).clone();
            }
            for (j, &u) in faces[0].vertices().iter().enumerate() {
                row[offsets[0] + j] = -config.coord(u, c);
            }
            a.push(row);
            b.push(BigRational::zero());
        }
    }
    let x = lp::find_nonnegative_solution(&a, &b)?;
    let certificates: Vec<Vec<Rational>> = faces
        .iter()
        .enumerate()
        .map(|(i, f)| (0..f.len()).map(|j| Rational(x[offsets[i] + j].clone())).collect())
        .collect();
    let witness = combination(config, &faces[0], &certificates[0]);
    Some(Intersection { witness, certificates })
}

fn combination(config: &PointConfig, face: &Simplex, coeffs: &[Rational]) -> Vec<Rational> {
    (0..config.d)
        .map(|c| {
            Rational(face.vertices().iter().zip(coeffs).fold(BigRational::zero(), |acc, (&v, l)| {
                acc + config.coord(v, c) * &l.0
            }))
        })
        .collect()
}

/// Re-substitutes a certificate: every face's coefficients must be
/// nonnegative, sum to one and reproduce the witness exactly.
pub fn verify_certificate(
    config: &PointConfig,
    faces: &[Simplex],
    witness: &[Rational],
    certificates: &[Vec<Rational>],
) -> bool {
    if faces.len() != certificates.len() || witness.len() != config.d {
        return false;
    }
    faces.iter().zip(certificates).all(|(f, coeffs)| {
        if f.is_empty() || coeffs.len() != f.len() || f.vertices().iter().any(|&v| v >= config.len()) {
            return false;
        }
        let nonneg = coeffs.iter().all(|l| !l.0.is_negative());
        let sum = coeffs.iter().fold(BigRational::zero(), |acc, l| acc + &l.0);
        nonneg && sum.is_one() && combination(config, f, coeffs) == witness
    })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TverbergSolution {
    pub faces: Vec<Simplex>,
    pub witness: Vec<Rational>,
    pub certificates: Vec<Vec<Rational>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub policy: Option<DimPolicy>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "status", rename_all = "lowercase")]
pub enum SearchOutcome {
    Found { solution: TverbergSolution },
    Exhausted,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SearchReport {
    #[serde(flatten)]
    pub outcome: SearchOutcome,
    /// Number of intersection tests performed, in canonical order up to the
    /// reported solution.
    pub candidates: u64,
}

impl SearchReport {
    pub fn solution(&self) -> Option<&TverbergSolution> {
        match &self.outcome {
            SearchOutcome::Found { solution } => Some(solution),
            SearchOutcome::Exhausted => None,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SearchOptions {
    pub workers: usize,
}

impl Default for SearchOptions {
    fn default() -> Self {
        SearchOptions { workers: 1 }
    }
}

/// Canonical face order: by size, then by vertex ids.
fn face_key(f: &Simplex) -> (usize, &[usize]) {
    (f.len(), f.vertices())
}

/// All nonempty rainbow faces, optionally bounded in dimension, in canonical order.
pub fn rainbow_faces(config: &PointConfig, max_dim: Option<usize>) -> Vec<Simplex> {
    let classes: Vec<Vec<usize>> = config.color_classes().into_iter().filter(|c| !c.is_empty()).collect();
    let mut out = Vec::new();
    let mut current = Vec::new();
    fn go(classes: &[Vec<usize>], i: usize, limit: usize, current: &mut Vec<usize>, out: &mut Vec<Simplex>) {
        if i == classes.len() {
            if !current.is_empty() {
                out.push(Simplex::new(current.clone()));
            }
            return;
        }
        go(classes, i + 1, limit, current, out);
        if current.len() < limit {
            for &v in &classes[i] {
                current.push(v);
                go(classes, i + 1, limit, current, out);
                current.pop();
            }
        }
    }
    go(&classes, 0, max_dim.map_or(usize::MAX, |k| k + 1), &mut current, &mut out);
    out.sort_by(|a, b| face_key(a).cmp(&face_key(b)));
    out
}

/// The complex of rainbow faces, a join of one discrete set per color.
pub fn rainbow_complex(config: &PointConfig) -> Complex {
    let classes: Vec<Vec<usize>> = config.color_classes().into_iter().filter(|c| !c.is_empty()).collect();
    let mut facets: Vec<Vec<usize>> = vec![Vec::new()];
    for class in &classes {
        facets = facets
            .into_iter()
            .flat_map(|f: Vec<usize>| class.iter().map(move |&v| [f.clone(), vec![v]].concat()))
            .collect();
    }
    build_complex(0..config.len(), facets).expect("rainbow facets lie in the universe")
}

/// LP calls made and the first solution found, as face indices.
type SubtreeResult = (u64, Option<(Vec<usize>, Intersection)>);

struct Searcher<'a> {
    config: &'a PointConfig,
    r: usize,
    faces: Vec<Simplex>,
    budgets: Vec<usize>,
    top: Option<(usize, usize)>,
    abort_above: Option<&'a AtomicUsize>,
}

struct Node {
    chosen: Vec<usize>,
    usage: Vec<usize>,
    top_used: usize,
}

enum Collect<'a> {
    First(Option<(Vec<usize>, Intersection)>),
    All(&'a mut Vec<Vec<Simplex>>),
}

impl<'a> Searcher<'a> {
    fn new(inst: &'a TverbergInstance) -> Self {
        let (max_dim, top) = match inst.dim_caps {
            Some(caps) => {
                let t = caps.policy.top(&caps);
                (Some(t), Some((t, caps.s)))
            }
            None => (None, None),
        };
        Searcher {
            config: &inst.config,
            r: inst.r,
            faces: rainbow_faces(&inst.config, max_dim),
            budgets: inst.budgets(),
            top,
            abort_above: None,
        }
    }

    fn admits(&self, node: &Node, f: usize) -> bool {
        let face = &self.faces[f];
        if face.vertices().iter().any(|&v| node.usage[v] >= self.budgets[v]) {
            return false;
        }
        match self.top {
            Some((t, s)) if face.dim() == t as isize => node.top_used < s,
            _ => true,
        }
    }

    fn push(&self, node: &mut Node, f: usize) {
        for &v in self.faces[f].vertices() {
            node.usage[v] += 1;
        }
        if matches!(self.top, Some((t, _)) if self.faces[f].dim() == t as isize) {
            node.top_used += 1;
        }
        node.chosen.push(f);
    }

    fn pop(&self, node: &mut Node) {
        let f = node.chosen.pop().expect("nonempty prefix");
        for &v in self.faces[f].vertices() {
            node.usage[v] -= 1;
        }
        if matches!(self.top, Some((t, _)) if self.faces[f].dim() == t as isize) {
            node.top_used -= 1;
        }
    }

    fn aborted(&self, first: usize) -> bool {
        self.abort_above.is_some_and(|a| a.load(Ordering::Relaxed) < first)
    }

    /// Depth-first over non-decreasing face indices below the current prefix.
    /// Returns `true` to stop.
    fn descend(&self, node: &mut Node, count: &mut u64, out: &mut Collect) -> bool {
        let last = *node.chosen.last().expect("search starts from a first face");
        if self.aborted(node.chosen[0]) {
            return true;
        }
        for f in last..self.faces.len() {
            if !self.admits(node, f) {
                continue;
            }
            self.push(node, f);
            let tuple: Vec<Simplex> = node.chosen.iter().map(|&i| self.faces[i].clone()).collect();
            *count += 1;
            let hit = hulls_intersect(self.config, &tuple);
            let stop = match hit {
                Some(x) if node.chosen.len() == self.r => match out {
                    Collect::First(slot) => {
                        *slot = Some((node.chosen.clone(), x));
                        true
                    }
                    Collect::All(sols) => {
                        sols.push(tuple);
                        false
                    }
                },
                Some(_) => self.descend(node, count, out),
                None => false,
            };
            self.pop(node);
            if stop {
                return true;
            }
        }
        false
    }

    fn subtree(&self, first: usize, out: &mut Collect) -> u64 {
        let mut node = Node { chosen: Vec::new(), usage: vec![0; self.config.len()], top_used: 0 };
        if !self.admits(&node, first) {
            return 0;
        }
        self.push(&mut node, first);
        let mut count = 0;
        self.descend(&mut node, &mut count, out);
        count
    }

    fn first_solution(&self) -> SubtreeResult {
        let mut total = 0;
        for first in 0..self.faces.len() {
            let mut out = Collect::First(None);
            total += self.subtree(first, &mut out);
            if let Collect::First(Some(sol)) = out {
                return (total, Some(sol));
            }
        }
        (total, None)
    }
}

fn run_search(inst: &TverbergInstance, opts: &SearchOptions) -> Result<SearchReport> {
    let best = AtomicUsize::new(usize::MAX);
    let searcher = Searcher { abort_above: Some(&best), ..Searcher::new(inst) };
    let (candidates, found) = if opts.workers <= 1 {
        searcher.first_solution()
    } else {
        let pool = rayon::ThreadPoolBuilder::new()
            .num_threads(opts.workers)
            .build()
            .map_err(|e| Error::Resource(format!("cannot start worker pool: {e}")))?;
        let per_first: Vec<SubtreeResult> = pool.install(|| {
            (0..searcher.faces.len())
                .into_par_iter()
                .map(|first| {
                    if searcher.aborted(first) {
                        return (0, None);
                    }
                    let mut out = Collect::First(None);
                    let count = searcher.subtree(first, &mut out);
                    match out {
                        Collect::First(Some(sol)) => {
                            best.fetch_min(first, Ordering::Relaxed);
                            (count, Some(sol))
                        }
                        _ => (count, None),
                    }
                })
                .collect()
        });
        // Subtrees before the least success ran to completion, so the
        // accumulated count matches the sequential one.
        let mut total = 0;
        let mut found = None;
        for (count, sol) in per_first {
            total += count;
            if sol.is_some() {
                found = sol;
                break;
            }
        }
        (total, found)
    };
    let outcome = match found {
        Some((chosen, x)) => SearchOutcome::Found {
            solution: TverbergSolution {
                faces: chosen.iter().map(|&i| searcher.faces[i].clone()).collect(),
                witness: x.witness,
                certificates: x.certificates,
                policy: inst.dim_caps.map(|c| c.policy),
            },
        },
        None => SearchOutcome::Exhausted,
    };
    Ok(SearchReport { outcome, candidates })
}

/// Searches for `r` rainbow faces with intersecting hulls within the usage
/// budgets. The first success in canonical order is returned.
pub fn search_tverberg(inst: &TverbergInstance, opts: &SearchOptions) -> Result<SearchReport> {
    inst.validate()?;
    run_search(inst, opts)
}

/// [`search_tverberg`] for balanced instances; missing dimension caps are
/// derived from `rk + s = (r−1)d` with the shifted policy.
pub fn search_balanced(inst: &TverbergInstance, opts: &SearchOptions) -> Result<SearchReport> {
    if inst.mode != Mode::Balanced {
        return input("balanced search needs a balanced-1.6 instance");
    }
    let mut inst = inst.clone();
    if inst.dim_caps.is_none() {
        let (k, s) = balanced_parameters(inst.r, inst.config.d)?;
        inst.dim_caps = Some(DimCaps { k, s, policy: DimPolicy::ShiftedKPlus1 });
    }
    search_tverberg(&inst, opts)
}

/// Every solution of the pruned search, as canonical face multisets.
pub fn all_solutions(inst: &TverbergInstance) -> Result<Vec<Vec<Simplex>>> {
    inst.validate()?;
    let searcher = Searcher::new(inst);
    let mut sols = Vec::new();
    for first in 0..searcher.faces.len() {
        searcher.subtree(first, &mut Collect::All(&mut sols));
    }
    sols.sort();
    Ok(sols)
}

/// Exhaustive enumeration of ordered `r`-tuples of nonempty point subsets
/// with no pruning; shares only the LP with the main search.
pub fn naive_solutions(inst: &TverbergInstance) -> Result<Vec<Vec<Simplex>>> {
    inst.validate()?;
    let cfg = &inst.config;
    let n = cfg.len();
    if n > 16 {
        return Err(Error::Resource("naive enumeration is limited to 16 points".into()));
    }
    let subsets: Vec<Simplex> =
        (1u32..1 << n).map(|mask| Simplex::new((0..n).filter(|&i| mask >> i & 1 == 1).collect())).collect();
    let budgets = inst.budgets();
    let mut found = BTreeSet::new();
    let mut idx = vec![0usize; inst.r];
    loop {
        let tuple: Vec<Simplex> = idx.iter().map(|&i| subsets[i].clone()).collect();
        if naive_admissible(inst, &budgets, &tuple) && hulls_intersect(cfg, &tuple).is_some() {
            let mut canon = tuple;
            canon.sort_by(|a, b| face_key(a).cmp(&face_key(b)));
            found.insert(canon);
        }
        // Odometer over all ordered tuples.
        let mut pos = 0;
        loop {
            if pos == inst.r {
                let mut sols: Vec<Vec<Simplex>> = found.into_iter().collect();
                sols.sort();
                return Ok(sols);
            }
            idx[pos] += 1;
            if idx[pos] < subsets.len() {
                break;
            }
            idx[pos] = 0;
            pos += 1;
        }
    }
}

fn naive_admissible(inst: &TverbergInstance, budgets: &[usize], tuple: &[Simplex]) -> bool {
    let cfg = &inst.config;
    let rainbow = tuple.iter().all(|f| {
        let colors: BTreeSet<usize> = f.vertices().iter().map(|&v| cfg.points[v].color).collect();
        colors.len() == f.len()
    });
    let within_budget = (0..cfg.len()).all(|v| tuple.iter().filter(|f| f.contains(v)).count() <= budgets[v]);
    let caps_ok = inst.dim_caps.is_none_or(|caps| {
        let t = caps.policy.top(&caps) as isize;
        tuple.iter().all(|f| f.dim() <= t) && tuple.iter().filter(|f| f.dim() == t).count() <= caps.s
    });
    rainbow && within_budget && caps_ok
}

/// Checks a solution against the instance as literal predicates: `r`
/// nonempty rainbow faces within budget (and caps), with a valid
/// certificate. Returns a description of the first violation.
pub fn check_solution(inst: &TverbergInstance, sol: &TverbergSolution) -> std::result::Result<(), String> {
    let cfg = &inst.config;
    if sol.faces.len() != inst.r {
        return Err(format!("{} faces, expected {}", sol.faces.len(), inst.r));
    }
    for f in &sol.faces {
        if f.is_empty() || f.vertices().iter().any(|&v| v >= cfg.len()) {
            return Err(format!("face {f} is empty or out of range"));
        }
        if !cfg.is_rainbow(f) {
            return Err(format!("face {f} is not rainbow"));
        }
    }
    let budgets = inst.budgets();
    for (v, &b) in budgets.iter().enumerate() {
        let used = sol.faces.iter().filter(|f| f.contains(v)).count();
        if used > b {
            return Err(format!("point {v} used {used} times, budget {b}"));
        }
    }
    if let Some(caps) = inst.dim_caps {
        let t = caps.policy.top(&caps) as isize;
        if sol.faces.iter().any(|f| f.dim() > t) {
            return Err(format!("a face exceeds dimension {t}"));
        }
        let at_top = sol.faces.iter().filter(|f| f.dim() == t).count();
        if at_top > caps.s {
            return Err(format!("{at_top} faces of dimension {t}, limit {}", caps.s));
        }
    }
    if !verify_certificate(cfg, &sol.faces, &sol.witness, &sol.certificates) {
        return Err("certificate does not verify".into());
    }
    Ok(())
}

/// A solution transported to the complex `K_{r′,…,r′,1}`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Lift {
    pub config: PointConfig,
    pub solution: TverbergSolution,
    /// Lifted point id ↦ original point id.
    pub alpha: Vec<usize>,
}

/// Replaces each use of a point of multiplicity `m` by a distinct element of
/// its `θ`-fiber, so that the faces become pairwise disjoint.
///
/// Within a color class of `θ.target_columns()` points, the `j`-th point (in
/// index order) owns the fiber `θ^{-1}(j)`, which must have exactly as many
/// elements as that point's multiplicity. Any other class must be a single
/// point of multiplicity 1.
pub fn lift_to_vertex_disjoint(config: &PointConfig, sol: &TverbergSolution, theta: &CollapseTheta) -> Result<Lift> {
    let mut fibers: Vec<Vec<usize>> = vec![Vec::new(); config.len()];
    let mut alpha = Vec::new();
    let mut points = Vec::new();
    for (color, class) in config.color_classes().iter().enumerate() {
        let base = alpha.len();
        if class.len() == theta.target_columns() {
            for (j, &v) in class.iter().enumerate() {
                let fiber = theta.fiber(j);
                let m = config.points[v].multiplicity;
                if fiber.len() != m {
                    return input(format!(
                        "fiber over {} has {} elements but point {v} has multiplicity {m}",
                        j + 1,
                        fiber.len()
                    ));
                }
                fibers[v] = fiber.iter().map(|s| base + s).collect();
            }
            alpha.extend((0..theta.source_columns()).map(|s| class[theta.apply(s)]));
        } else if class.len() == 1 && config.points[class[0]].multiplicity == 1 {
            fibers[class[0]] = vec![base];
            alpha.push(class[0]);
        } else if !class.is_empty() {
            return input(format!("color {color} matches neither θ nor a singleton"));
        }
        points.extend(alpha[base..].iter().map(|&v| Point::new(config.points[v].coords.clone(), color, 1)));
    }
    let mut next = vec![0usize; config.len()];
    let mut faces = Vec::with_capacity(sol.faces.len());
    for f in &sol.faces {
        let mut lifted = Vec::with_capacity(f.len());
        for &v in f.vertices() {
            let slot = fibers[v].get(next[v]).copied().ok_or_else(|| {
                Error::Input(format!("point {v} is used more often than its multiplicity"))
            })?;
            next[v] += 1;
            lifted.push((slot, v));
        }
        faces.push(lifted);
    }
    let lifted_config = PointConfig::new(config.d, points)?;
    let certificates = sol
        .faces
        .iter()
        .zip(&faces)
        .zip(&sol.certificates)
        .map(|((f, lifted), coeffs)| {
            let mut pairs: Vec<(usize, Rational)> = lifted
                .iter()
                .map(|&(slot, v)| (slot, coeffs[f.vertices().binary_search(&v).expect("vertex of face")].clone()))
                .collect();
            pairs.sort_by_key(|(slot, _)| *slot);
            pairs.into_iter().map(|(_, c)| c).collect()
        })
        .collect();
    let solution = TverbergSolution {
        faces: faces.iter().map(|l| Simplex::new(l.iter().map(|&(s, _)| s).collect())).collect(),
        witness: sol.witness.clone(),
        certificates,
        policy: sol.policy,
    };
    Ok(Lift { config: lifted_config, solution, alpha })
}

/// Random displacement of each point by `eps` times a vector with entries in
/// `[−1, 1]`, drawn from a seeded stream.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Scatter {
    pub eps: Rational,
    pub seed: u64,
}

/// The simplex `A_0 = 0`, `A_i = 3 e_i` with its barycenter: each vertex
/// carries a cluster of `k(p−1)` points with multiplicities `L`, and the
/// barycenter is a single exceptional point.
pub fn build_example_a(p: u64, k: u32, d: usize, scatter: Option<&Scatter>) -> Result<TverbergInstance> {
    build_example_a_guarded(p, k, d, scatter, EXAMPLE_A_ORDER_GUARD)
}

pub fn build_example_a_guarded(
    p: u64,
    k: u32,
    d: usize,
    scatter: Option<&Scatter>,
    guard: u64,
) -> Result<TverbergInstance> {
    if !is_prime(p) {
        return input(format!("{p} is not prime"));
    }
    if k == 0 || d == 0 {
        return input("k and d must be positive");
    }
    let r = p
        .checked_pow(k)
        .filter(|&r| r <= guard)
        .ok_or_else(|| Error::Resource(format!("p^k = {p}^{k} exceeds the guard {guard}")))?;
    let mut rng = scatter.map(|s| ChaCha8Rng::seed_from_u64(s.seed));
    let mut jitter = |x: BigRational| -> Rational {
        match (&mut rng, scatter) {
            (Some(rng), Some(s)) => {
                let u = BigRational::new(rng.gen_range(-1000i64..=1000).into(), 1000.into());
                Rational(x + &s.eps.0 * u)
            }
            _ => Rational(x),
        }
    };
    let three = BigRational::from_integer(3.into());
    let mut points = Vec::new();
    for i in 0..=d {
        for &m in &l_vector(p, k) {
            let coords = (0..d)
                .map(|c| jitter(if i > 0 && c == i - 1 { three.clone() } else { BigRational::zero() }))
                .collect();
            points.push(Point::new(coords, i, m));
        }
    }
    let bary = BigRational::new(3.into(), BigInt::from(d + 1));
    points.push(Point::new(vec![Rational(bary); d], d + 1, 1));
    TverbergInstance::new(PointConfig::new(d, points)?, r as usize, Mode::PrimePower, Disjointness::MultisetProper)
}

/// Seeded configuration with pairwise distinct points: `classes[c]` lists the
/// multiplicities of the points of color `c`. Coordinates are multiples of
/// `1/100` in `[−100, 100]`.
pub fn random_configuration(d: usize, classes: &[Vec<usize>], seed: u64) -> Result<PointConfig> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut seen = BTreeSet::new();
    let mut points = Vec::new();
    for (color, mults) in classes.iter().enumerate() {
        for &m in mults {
            let coords = loop {
                let c: Vec<Rational> = (0..d)
                    .map(|_| Rational(BigRational::new(rng.gen_range(-10_000i64..=10_000).into(), 100.into())))
                    .collect();
                if seen.insert(c.clone()) {
                    break c;
                }
            };
            points.push(Point::new(coords, color, m));
        }
    }
    PointConfig::new(d, points)
}

/// Whether every `d + 1` points are affinely independent.
pub fn in_general_position(config: &PointConfig) -> bool {
    let d = config.d;
    let n = config.len();
    let all = Simplex::new((0..n).collect());
    all.subsets_of_size((d + 1).min(n)).iter().all(|s| {
        let v = s.vertices();
        let rows: Vec<Vec<BigRational>> = v[1..]
            .iter()
            .map(|&x| (0..d).map(|c| config.coord(x, c) - config.coord(v[0], c)).collect())
            .collect();
        rank(rows) == v.len() - 1
    })
}

fn rank(mut rows: Vec<Vec<BigRational>>) -> usize {
    let mut rank = 0;
    let cols = rows.first().map_or(0, Vec::len);
    for c in 0..cols {
        let Some(p) = (rank..rows.len()).find(|&i| !rows[i][c].is_zero()) else { continue };
        rows.swap(rank, p);
        for i in rank + 1..rows.len() {
            let f = &rows[i][c] / &rows[rank][c];
            let pivot = rows[rank].clone();
            for (x, y) in rows[i].iter_mut().zip(&pivot) {
                *x -= &f * y;
            }
        }
        rank += 1;
    }
    rank
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(s: &str) -> Rational {
        s.parse().unwrap()
    }

    fn pt(coords: &[&str], color: usize, m: usize) -> Point {
        Point::new(coords.iter().map(|s| q(s)).collect(), color, m)
    }

    fn face(v: &[usize]) -> Simplex {
        Simplex::new(v.to_vec())
    }

    #[test]
    fn rational_strings() {
        assert_eq!(q("2/4").to_string(), "1/2");
        assert_eq!(q("-3").to_string(), "-3/1");
        assert_eq!(q("3/-6").to_string(), "-1/2");
        assert!("1/0".parse::<Rational>().is_err());
        assert!("x".parse::<Rational>().is_err());
        let v: Vec<Rational> = serde_json::from_str(r#"["1/3","4"]"#).unwrap();
        assert_eq!(serde_json::to_string(&v).unwrap(), r#"["1/3","4/1"]"#);
    }

    #[test]
    fn crossing_segments() {
        let cfg = PointConfig::new(
            2,
            vec![pt(&["0", "0"], 0, 1), pt(&["2", "2"], 1, 1), pt(&["0", "2"], 2, 1), pt(&["2", "0"], 3, 1)],
        )
        .unwrap();
        let faces = [face(&[0, 1]), face(&[2, 3])];
        let x = hulls_intersect(&cfg, &faces).unwrap();
        assert_eq!(x.witness, vec![q("1"), q("1")]);
        assert!(verify_certificate(&cfg, &faces, &x.witness, &x.certificates));
        assert!(!verify_certificate(&cfg, &faces, &[q("1"), q("0")], &x.certificates));
    }

    #[test]
    fn separated_triangles() {
        let cfg = PointConfig::new(
            2,
            vec![
                pt(&["0", "0"], 0, 1),
                pt(&["1", "0"], 1, 1),
                pt(&["0", "1"], 2, 1),
                pt(&["10", "10"], 0, 1),
                pt(&["11", "10"], 1, 1),
                pt(&["10", "11"], 2, 1),
            ],
        )
        .unwrap();
        assert!(hulls_intersect(&cfg, &[face(&[0, 1, 2]), face(&[3, 4, 5])]).is_none());
    }

    fn radon_1d() -> TverbergInstance {
        let cfg = PointConfig::new(1, vec![pt(&["0"], 0, 1), pt(&["1"], 1, 1), pt(&["1/2"], 2, 1)]).unwrap();
        TverbergInstance::new(cfg, 2, Mode::PrimePower, Disjointness::MultisetProper).unwrap()
    }

    #[test]
    fn colored_radon_on_a_line() {
        let inst = radon_1d();
        let rep = search_tverberg(&inst, &SearchOptions::default()).unwrap();
        let sol = rep.solution().unwrap();
        assert_eq!(sol.faces, vec![face(&[2]), face(&[0, 1])]);
        assert_eq!(sol.witness, vec![q("1/2")]);
        check_solution(&inst, sol).unwrap();
    }

    fn abridged_221() -> TverbergInstance {
        let cfg = PointConfig::new(
            1,
            vec![
                pt(&["0"], 0, 1),
                pt(&["1/10"], 0, 2),
                pt(&["1"], 1, 1),
                pt(&["9/10"], 1, 2),
                pt(&["1/2"], 2, 1),
            ],
        )
        .unwrap();
        TverbergInstance::new(cfg, 4, Mode::PrimePower, Disjointness::MultisetProper).unwrap()
    }

    #[test]
    fn prime_power_instance_on_a_line() {
        let inst = abridged_221();
        let rep = search_tverberg(&inst, &SearchOptions::default()).unwrap();
        let sol = rep.solution().unwrap();
        // Points: 0→0, 1→1/10, 2→1, 3→9/10, 4→1/2.
        assert_eq!(sol.faces, vec![face(&[4]), face(&[0, 2]), face(&[1, 3]), face(&[1, 3])]);
        assert_eq!(sol.witness, vec![q("1/2")]);
        check_solution(&inst, sol).unwrap();
        let other = vec![face(&[4]), face(&[0, 3]), face(&[1, 2]), face(&[1, 3])];
        assert!(all_solutions(&inst).unwrap().contains(&other));
        let par = search_tverberg(&inst, &SearchOptions { workers: 4 }).unwrap();
        assert_eq!(par, rep);
    }

    #[test]
    fn two_points_exhaust() {
        let cfg = PointConfig::new(1, vec![pt(&["0"], 0, 1), pt(&["1"], 1, 1)]).unwrap();
        let inst = TverbergInstance::new(cfg, 2, Mode::Free, Disjointness::MultisetProper).unwrap();
        let rep = search_tverberg(&inst, &SearchOptions::default()).unwrap();
        assert_eq!(rep.outcome, SearchOutcome::Exhausted);
        assert!(rep.candidates > 0);
    }

    #[test]
    fn pruned_matches_naive_small() {
        for inst in [radon_1d(), abridged_221()] {
            assert_eq!(all_solutions(&inst).unwrap(), naive_solutions(&inst).unwrap());
        }
    }

    #[test]
    fn mode_validation() {
        let mut bad = abridged_221();
        bad.config.points[1].multiplicity = 1;
        assert!(search_tverberg(&bad, &SearchOptions::default()).is_err());
        let mut bad = abridged_221();
        bad.r = 6;
        assert!(bad.validate().is_err());
        let mut bad = abridged_221();
        bad.disjointness = Disjointness::VertexDisjoint;
        assert!(bad.validate().is_err());
        assert!(balanced_parameters(3, 1).is_err());
        assert_eq!(balanced_parameters(2, 2).unwrap(), (1, 0));
        assert_eq!(prime_power(8), Some((2, 3)));
        assert_eq!(prime_power(12), None);
    }

    fn square_and_center() -> TverbergInstance {
        let cfg = PointConfig::new(
            2,
            vec![
                pt(&["0", "0"], 0, 1),
                pt(&["2", "0"], 1, 1),
                pt(&["2", "2"], 2, 1),
                pt(&["0", "2"], 3, 1),
                pt(&["1", "1"], 4, 1),
            ],
        )
        .unwrap();
        TverbergInstance::new(cfg, 2, Mode::Balanced, Disjointness::VertexDisjoint).unwrap()
    }

    #[test]
    fn balanced_policies() {
        let inst = square_and_center();
        let rep = search_balanced(&inst, &SearchOptions::default()).unwrap();
        let sol = rep.solution().unwrap();
        assert_eq!(sol.policy, Some(DimPolicy::ShiftedKPlus1));
        assert!(sol.faces.iter().all(|f| f.dim() <= 1));
        check_solution(&inst.clone().with_dim_caps(DimCaps { k: 1, s: 0, policy: DimPolicy::ShiftedKPlus1 }), sol)
            .unwrap();

        let literal = inst.with_dim_caps(DimCaps { k: 1, s: 0, policy: DimPolicy::LiteralK });
        let rep = search_balanced(&literal, &SearchOptions::default()).unwrap();
        assert_eq!(rep.outcome, SearchOutcome::Exhausted);
    }

    #[test]
    fn diagonals_cross_at_center() {
        let mut inst = square_and_center();
        inst.config.points.pop();
        inst.mode = Mode::Free;
        inst.dim_caps = Some(DimCaps { k: 1, s: 0, policy: DimPolicy::ShiftedKPlus1 });
        let sol = search_tverberg(&inst, &SearchOptions::default()).unwrap().solution().unwrap().clone();
        assert_eq!(sol.faces, vec![face(&[0, 2]), face(&[1, 3])]);
        assert_eq!(sol.witness, vec![q("1"), q("1")]);
    }

    #[test]
    fn lift_prime_power_solution() {
        let inst = abridged_221();
        let sol = search_tverberg(&inst, &SearchOptions::default()).unwrap().solution().unwrap().clone();
        let theta = CollapseTheta::l_collapse(&[1, 2]).unwrap();
        let lift = lift_to_vertex_disjoint(&inst.config, &sol, &theta).unwrap();
        assert_eq!(lift.config.len(), 7);
        let faces = &lift.solution.faces;
        assert_eq!(faces.len(), 4);
        for i in 0..4 {
            for j in i + 1..4 {
                assert!(faces[i].is_disjoint(&faces[j]));
            }
            let image = Simplex::new(faces[i].vertices().iter().map(|&v| lift.alpha[v]).collect());
            assert_eq!(image, sol.faces[i]);
        }
        assert_eq!(lift.solution.witness, sol.witness);
        assert!(verify_certificate(&lift.config, faces, &lift.solution.witness, &lift.solution.certificates));
        let lifted_inst = TverbergInstance::new(lift.config.clone(), 4, Mode::Lifted, Disjointness::VertexDisjoint).unwrap();
        lifted_inst.validate().unwrap();
        check_solution(&lifted_inst, &lift.solution).unwrap();
    }

    #[test]
    fn lift_with_bijective_theta_is_relabeling() {
        let inst = radon_1d();
        let sol = search_tverberg(&inst, &SearchOptions::default()).unwrap().solution().unwrap().clone();
        let theta = CollapseTheta::identity(1).unwrap();
        let lift = lift_to_vertex_disjoint(&inst.config, &sol, &theta).unwrap();
        assert_eq!(lift.alpha, vec![0, 1, 2]);
        assert_eq!(lift.solution.faces, sol.faces);
    }

    #[test]
    fn lift_rejects_mismatched_fibers() {
        let inst = abridged_221();
        let sol = search_tverberg(&inst, &SearchOptions::default()).unwrap().solution().unwrap().clone();
        let theta = CollapseTheta::l_collapse(&[2, 1]).unwrap();
        assert!(lift_to_vertex_disjoint(&inst.config, &sol, &theta).is_err());
    }

    #[test]
    fn example_a_coordinates() {
        let inst = build_example_a(2, 1, 1, None).unwrap();
        let coords: Vec<String> = inst.config.points().iter().map(|p| p.coords[0].to_string()).collect();
        assert_eq!(coords, vec!["0/1", "3/1", "3/2"]);
        let inst = build_example_a(2, 2, 2, None).unwrap();
        assert_eq!(inst.config.len(), 7);
        assert_eq!(inst.config.points()[6].coords, vec![q("1"), q("1")]);
        inst.validate().unwrap();
        assert!(matches!(build_example_a(2, 4, 1, None), Err(Error::Resource(_))));
    }

    #[test]
    fn example_a_witness_is_barycenter() {
        let inst = build_example_a(2, 2, 2, None).unwrap();
        let sol = search_tverberg(&inst, &SearchOptions::default()).unwrap().solution().unwrap().clone();
        assert_eq!(sol.witness, vec![q("1"), q("1")]);
        check_solution(&inst, &sol).unwrap();
    }

    #[test]
    fn rainbow_complex_is_a_join() {
        let inst = abridged_221();
        let k = rainbow_complex(&inst.config);
        assert_eq!(k.facets().len(), 4);
        assert_eq!(k.dim(), 2);
        assert_eq!(rainbow_faces(&inst.config, None).len(), 17);
    }

    #[test]
    fn general_position() {
        let inst = square_and_center();
        assert!(!in_general_position(&inst.config));
        let cfg = random_configuration(2, &[vec![1], vec![1], vec![1], vec![1], vec![1]], 3).unwrap();
        assert!(in_general_position(&cfg));
    }

    #[test]
    fn instance_json_round_trip() {
        let inst = abridged_221();
        let text = serde_json::to_string(&inst).unwrap();
        let back: TverbergInstance = serde_json::from_str(&text).unwrap();
        assert_eq!(back, inst);
        let bad = text.replace("\"1/2\"", "\"1/0\"");
        assert!(serde_json::from_str::<TverbergInstance>(&bad).is_err());
    }
}
