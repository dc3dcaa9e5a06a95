//! Facet-presented abstract simplicial complexes.
//!
//! A [`Complex`] stores only its maximal faces. Face membership is decided by
//! inclusion in some facet, so joins of moderately large complexes stay cheap
//! to hold even when their face lattices are not.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{input, Result};

/// A finite set of vertex ids, stored strictly increasing.
#[derive(Clone, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(from = "Vec<usize>", into = "Vec<usize>")]
pub struct Simplex(Vec<usize>);

impl Simplex {
    /// Builds a simplex from arbitrary vertex ids; duplicates collapse.
    pub fn new(mut vertices: Vec<usize>) -> Self {
        vertices.sort_unstable();
        vertices.dedup();
        Simplex(vertices)
    }

    pub fn empty() -> Self {
        Simplex(Vec::new())
    }

    /// Wraps an already strictly increasing vertex list.
    pub(crate) fn from_sorted(vertices: Vec<usize>) -> Self {
        debug_assert!(vertices.windows(2).all(|w| w[0] < w[1]));
        Simplex(vertices)
    }

    pub fn vertices(&self) -> &[usize] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// `len - 1`; the empty simplex has dimension −1.
    pub fn dim(&self) -> isize {
        self.0.len() as isize - 1
    }

    pub fn contains(&self, v: usize) -> bool {
        self.0.binary_search(&v).is_ok()
    }

    pub fn is_subset_of(&self, other: &Simplex) -> bool {
        let mut it = other.0.iter();
        'outer: for v in &self.0 {
            for w in it.by_ref() {
                if w == v {
                    continue 'outer;
                }
                if w > v {
                    return false;
                }
            }
            return false;
        }
        true
    }

    pub fn is_disjoint(&self, other: &Simplex) -> bool {
        let (mut i, mut j) = (0, 0);
        while i < self.0.len() && j < other.0.len() {
            match self.0[i].cmp(&other.0[j]) {
                std::cmp::Ordering::Less => i += 1,
                std::cmp::Ordering::Greater => j += 1,
                std::cmp::Ordering::Equal => return false,
            }
        }
        true
    }

    pub fn union(&self, other: &Simplex) -> Simplex {
        let mut v = self.0.clone();
        v.extend_from_slice(&other.0);
        Simplex::new(v)
    }

    pub fn difference(&self, other: &Simplex) -> Simplex {
        Simplex(self.0.iter().copied().filter(|v| !other.contains(*v)).collect())
    }

    /// The codimension-one faces, in the order obtained by deleting vertex
    /// 0, 1, 2, … of the sorted list.
    pub fn boundary_faces(&self) -> impl Iterator<Item = Simplex> + '_ {
        (0..self.0.len()).map(move |i| {
            let mut v = self.0.clone();
            v.remove(i);
            Simplex(v)
        })
    }

    /// Every subset with exactly `size` vertices, in lexicographic order.
    pub fn subsets_of_size(&self, size: usize) -> Vec<Simplex> {
        let n = self.0.len();
        if size > n {
            return Vec::new();
        }
        let mut out = Vec::new();
        let mut idx: Vec<usize> = (0..size).collect();
        loop {
            out.push(Simplex(idx.iter().map(|&i| self.0[i]).collect()));
            let Some(i) = (0..size).rev().find(|&i| idx[i] < i + n - size) else {
                return out;
            };
            idx[i] += 1;
            for j in i + 1..size {
                idx[j] = idx[j - 1] + 1;
            }
        }
    }
}

impl fmt::Display for Simplex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (i, v) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{v}")?;
        }
        write!(f, "}}")
    }
}

impl From<Simplex> for Vec<usize> {
    fn from(s: Simplex) -> Self {
        s.0
    }
}

impl From<Vec<usize>> for Simplex {
    fn from(v: Vec<usize>) -> Self {
        Simplex::new(v)
    }
}

/// An abstract simplicial complex given by its facets.
///
/// A complex with no facets has no faces at all (the void complex). The
/// complex whose single facet is the empty simplex is the unit for joins and
/// has dimension −1.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(try_from = "ComplexData", into = "ComplexData")]
pub struct Complex {
    universe: BTreeSet<usize>,
    facets: Vec<Simplex>,
}

/// Wire format: `{"universe":[ints],"facets":[[ints],...]}`.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct ComplexData {
    pub universe: Vec<usize>,
    pub facets: Vec<Vec<usize>>,
}

impl TryFrom<ComplexData> for Complex {
    type Error = crate::Error;

    fn try_from(data: ComplexData) -> Result<Self> {
        build_complex(data.universe, data.facets)
    }
}

impl From<Complex> for ComplexData {
    fn from(k: Complex) -> Self {
        ComplexData {
            universe: k.universe.into_iter().collect(),
            facets: k.facets.into_iter().map(|s| s.0).collect(),
        }
    }
}

/// Canonicalises a facet list: sorts, deduplicates, and drops every simplex
/// contained in another one.
pub(crate) fn reduce_to_antichain(mut facets: Vec<Simplex>) -> Vec<Simplex> {
    facets.sort_unstable_by(|a, b| b.len().cmp(&a.len()).then_with(|| a.cmp(b)));
    facets.dedup();
    let mut kept: Vec<Simplex> = Vec::with_capacity(facets.len());
    // Group by size: a simplex can only be swallowed by a strictly larger one.
    let mut start = 0;
    while start < facets.len() {
        let size = facets[start].len();
        let end = facets[start..]
            .iter()
            .position(|s| s.len() != size)
            .map_or(facets.len(), |p| start + p);
        let larger = kept.len();
        for s in &facets[start..end] {
            if !kept[..larger].iter().any(|k| s.is_subset_of(k)) {
                kept.push(s.clone());
            }
        }
        start = end;
    }
    kept.sort_unstable();
    kept
}

/// Builds a complex from a vertex universe and a list of generating faces.
pub fn build_complex<U, F>(universe: U, facets: F) -> Result<Complex>
where
    U: IntoIterator<Item = usize>,
    F: IntoIterator<Item = Vec<usize>>,
{
    let universe: BTreeSet<usize> = universe.into_iter().collect();
    let mut simplices = Vec::new();
    for f in facets {
        if let Some(v) = f.iter().find(|v| !universe.contains(v)) {
            return input(format!("vertex {v} of facet {f:?} is not in the universe"));
        }
        simplices.push(Simplex::new(f));
    }
    Ok(Complex::from_parts(universe, simplices))
}

impl Complex {
    /// Canonicalises `facets`; the caller guarantees they lie in `universe`.
    pub(crate) fn from_parts(universe: BTreeSet<usize>, facets: Vec<Simplex>) -> Self {
        debug_assert!(facets.iter().all(|f| f.vertices().iter().all(|v| universe.contains(v))));
        Complex { universe, facets: reduce_to_antichain(facets) }
    }

    /// The complex with no faces at all.
    pub fn void(universe: BTreeSet<usize>) -> Self {
        Complex { universe, facets: Vec::new() }
    }

    /// The complex whose only face is the empty simplex.
    pub fn empty_face() -> Self {
        Complex { universe: BTreeSet::new(), facets: vec![Simplex::empty()] }
    }

    /// All subsets of `vertices`.
    pub fn full_simplex(vertices: impl IntoIterator<Item = usize>) -> Self {
        let universe: BTreeSet<usize> = vertices.into_iter().collect();
        let facet = Simplex::from_sorted(universe.iter().copied().collect());
        Complex { universe, facets: vec![facet] }
    }

    /// Boundary of the full simplex on `vertices`.
    pub fn simplex_boundary(vertices: impl IntoIterator<Item = usize>) -> Self {
        let universe: BTreeSet<usize> = vertices.into_iter().collect();
        let top = Simplex::from_sorted(universe.iter().copied().collect());
        let facets = if top.is_empty() { Vec::new() } else { top.boundary_faces().collect() };
        Complex::from_parts(universe, facets)
    }

    pub fn universe(&self) -> &BTreeSet<usize> {
        &self.universe
    }

    pub fn facets(&self) -> &[Simplex] {
        &self.facets
    }

    pub fn is_void(&self) -> bool {
        self.facets.is_empty()
    }

    /// Vertices that actually occur in some facet.
    pub fn vertex_set(&self) -> BTreeSet<usize> {
        self.facets.iter().flat_map(|f| f.vertices().iter().copied()).collect()
    }

    /// Maximum facet dimension; −1 for `{∅}` and for the void complex.
    pub fn dim(&self) -> isize {
        self.facets.iter().map(Simplex::dim).max().unwrap_or(-1)
    }

    pub fn is_pure(&self) -> bool {
        self.facets.windows(2).all(|w| w[0].len() == w[1].len())
    }

    pub fn contains_face(&self, s: &Simplex) -> bool {
        self.facets.iter().any(|f| s.is_subset_of(f))
    }

    /// All faces of dimension `q`, sorted.
    pub fn faces_of_dim(&self, q: isize) -> Vec<Simplex> {
        if q < -1 {
            return Vec::new();
        }
        let size = (q + 1) as usize;
        let set: BTreeSet<Simplex> =
            self.facets.iter().flat_map(|f| f.subsets_of_size(size)).collect();
        set.into_iter().collect()
    }

    /// Faces grouped by dimension, index `q + 1` for dimension `q`.
    pub fn faces_by_dim(&self) -> Vec<Vec<Simplex>> {
        let top = self.dim();
        (-1..=top).map(|q| self.faces_of_dim(q)).collect()
    }

    /// Face counts `f_{-1}, f_0, …, f_dim`.
    pub fn f_vector(&self) -> Vec<usize> {
        self.faces_by_dim().iter().map(Vec::len).collect()
    }

    /// Reduced Euler characteristic `Σ_{q ≥ -1} (−1)^q f_q`.
    pub fn reduced_euler_characteristic(&self) -> i64 {
        self.f_vector()
            .iter()
            .enumerate()
            .map(|(i, &c)| if i % 2 == 0 { -(c as i64) } else { c as i64 })
            .sum()
    }

    /// Relabels vertices through `map`; faces keep their sets.
    pub fn relabel(&self, map: &BTreeMap<usize, usize>) -> Complex {
        let universe = self.universe.iter().map(|v| map[v]).collect();
        let facets = self
            .facets
            .iter()
            .map(|f| Simplex::new(f.vertices().iter().map(|v| map[v]).collect()))
            .collect();
        Complex::from_parts(universe, facets)
    }

    /// Subcomplex of faces avoiding every vertex in `removed`.
    pub fn induced_on_complement(&self, removed: &BTreeSet<usize>) -> Complex {
        let universe: BTreeSet<usize> = self.universe.difference(removed).copied().collect();
        let facets = self
            .facets
            .iter()
            .map(|f| {
                Simplex::from_sorted(
                    f.vertices().iter().copied().filter(|v| !removed.contains(v)).collect(),
                )
            })
            .collect();
        Complex::from_parts(universe, facets)
    }
}

/// The link `{T : T ∩ S = ∅, T ∪ S ∈ K}`.
pub fn link(k: &Complex, s: &Simplex) -> Result<Complex> {
    let facets: Vec<Simplex> =
        k.facets.iter().filter(|f| s.is_subset_of(f)).map(|f| f.difference(s)).collect();
    if facets.is_empty() {
        return input(format!("{s} is not a face of the complex"));
    }
    let universe = k.universe.iter().copied().filter(|v| !s.contains(*v)).collect();
    Ok(Complex::from_parts(universe, facets))
}

/// A join together with the vertex relabelings used to make the factors
/// disjoint.
#[derive(Clone, Debug)]
pub struct Join {
    pub complex: Complex,
    pub left: BTreeMap<usize, usize>,
    pub right: BTreeMap<usize, usize>,
}

/// Join of two complexes. Vertices of `k1` keep their ids; vertices of `k2`
/// are shifted past the largest id of `k1`.
pub fn join(k1: &Complex, k2: &Complex) -> Join {
    let left: BTreeMap<usize, usize> = k1.universe.iter().map(|&v| (v, v)).collect();
    let offset = k1.universe.iter().next_back().map_or(0, |m| m + 1);
    let right: BTreeMap<usize, usize> = k2.universe.iter().map(|&v| (v, v + offset)).collect();
    let universe = left.values().chain(right.values()).copied().collect();
    let mut facets = Vec::with_capacity(k1.facets.len() * k2.facets.len());
    for a in &k1.facets {
        for b in &k2.facets {
            let mut v = a.vertices().to_vec();
            v.extend(b.vertices().iter().map(|x| right[x]));
            facets.push(Simplex::from_sorted(v));
        }
    }
    Join { complex: Complex::from_parts(universe, facets), left, right }
}

/// Iterated join; returns the complex only.
pub fn join_all<'a>(factors: impl IntoIterator<Item = &'a Complex>) -> Complex {
    factors.into_iter().fold(Complex::empty_face(), |acc, k| join(&acc, k).complex)
}

/// All faces of dimension at most `k`.
pub fn skeleton(c: &Complex, k: isize) -> Complex {
    let size = (k.max(-1) + 1) as usize;
    let mut facets = Vec::new();
    for f in &c.facets {
        if f.len() <= size {
            facets.push(f.clone());
        } else {
            facets.extend(f.subsets_of_size(size));
        }
    }
    Complex::from_parts(c.universe.clone(), facets)
}

/// Integer chain on the top-dimensional faces of a complex.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Chain {
    coefficients: BTreeMap<Simplex, i64>,
}

impl Chain {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn insert(&mut self, s: Simplex, c: i64) {
        if c == 0 {
            self.coefficients.remove(&s);
        } else {
            self.coefficients.insert(s, c);
        }
    }

    pub fn get(&self, s: &Simplex) -> i64 {
        self.coefficients.get(s).copied().unwrap_or(0)
    }

    pub fn len(&self) -> usize {
        self.coefficients.len()
    }

    pub fn is_empty(&self) -> bool {
        self.coefficients.is_empty()
    }

    pub fn iter(&self) -> impl Iterator<Item = (&Simplex, i64)> {
        self.coefficients.iter().map(|(s, &c)| (s, c))
    }

    /// Simplicial boundary with the sorted-vertex sign convention.
    pub fn boundary(&self) -> Chain {
        let mut out: BTreeMap<Simplex, i64> = BTreeMap::new();
        for (s, c) in &self.coefficients {
            for (i, face) in s.boundary_faces().enumerate() {
                let sign = if i % 2 == 0 { 1 } else { -1 };
                *out.entry(face).or_insert(0) += sign * c;
            }
        }
        out.retain(|_, c| *c != 0);
        Chain { coefficients: out }
    }

    pub fn negated(&self) -> Chain {
        Chain { coefficients: self.coefficients.iter().map(|(s, c)| (s.clone(), -c)).collect() }
    }
}
