//! Multiple chessboard complexes `Δ^{K;L}_{m,n}`.
//!
//! The board has `m` columns and `n` rows. Columns carry the capacities
//! `col_caps = L`, rows carry `row_caps = K`; a face is a set of cells with at
//! most `k_i` cells in row `i` and at most `l_j` cells in column `j`. For the
//! main family `row_caps = (1, …, 1)`.
//!
//! Cell `(column j, row i)` (both 1-based) has vertex id `(i−1)·m + (j−1)`, so
//! sorting a rook placement by vertex id sorts it by row.

use std::collections::{BTreeMap, BTreeSet, HashMap, VecDeque};

use serde::{Deserialize, Serialize};

use crate::error::{input, Error, Result};
use crate::simplicial::{Chain, Complex, Simplex};

/// Upper bound on the number of group elements produced by closure.
pub const SUBGROUP_ELEMENT_CAP: usize = 100_000;

#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "SpecData", into = "SpecData")]
pub struct ChessboardSpec {
    m: usize,
    n: usize,
    row_caps: Vec<usize>,
    col_caps: Vec<usize>,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct SpecData {
    pub m: usize,
    pub n: usize,
    pub row_caps: Vec<usize>,
    pub col_caps: Vec<usize>,
}

impl TryFrom<SpecData> for ChessboardSpec {
    type Error = Error;

    fn try_from(d: SpecData) -> Result<Self> {
        ChessboardSpec::new(d.m, d.n, d.row_caps, d.col_caps)
    }
}

impl From<ChessboardSpec> for SpecData {
    fn from(s: ChessboardSpec) -> Self {
        SpecData { m: s.m, n: s.n, row_caps: s.row_caps, col_caps: s.col_caps }
    }
}

/// A board cell, 1-based; serialises as `[column, row]`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct Cell(pub usize, pub usize);

impl Cell {
    pub fn column(self) -> usize {
        self.0
    }

    pub fn row(self) -> usize {
        self.1
    }
}

impl ChessboardSpec {
    pub fn new(m: usize, n: usize, row_caps: Vec<usize>, col_caps: Vec<usize>) -> Result<Self> {
        if m == 0 || n == 0 {
            return input("a chessboard needs at least one column and one row");
        }
        if row_caps.len() != n {
            return input(format!("expected {n} row caps, got {}", row_caps.len()));
        }
        if col_caps.len() != m {
            return input(format!("expected {m} column caps, got {}", col_caps.len()));
        }
        Ok(ChessboardSpec { m, n, row_caps, col_caps })
    }

    /// `Δ^{𝟙;L}_{m,n}` with `m = col_caps.len()`.
    pub fn with_unit_rows(col_caps: Vec<usize>, n: usize) -> Result<Self> {
        Self::new(col_caps.len(), n, vec![1; n], col_caps)
    }

    /// The pseudomanifold `Δ^{𝟙;L}_{m,n}` with `n = Σ l_j + 1`.
    pub fn pseudomanifold(col_caps: Vec<usize>) -> Result<Self> {
        let n = col_caps.iter().sum::<usize>() + 1;
        Self::with_unit_rows(col_caps, n)
    }

    /// Standard chessboard complex: `m` columns, `n` rows, all caps one.
    pub fn standard(m: usize, n: usize) -> Result<Self> {
        Self::with_unit_rows(vec![1; m], n)
    }

    /// `∂Δ_[n]` presented as `Δ^{𝟙;(n−1)}_{1,n}`.
    pub fn simplex_boundary(n: usize) -> Result<Self> {
        Self::with_unit_rows(vec![n.saturating_sub(1)], n)
    }

    pub fn m(&self) -> usize {
        self.m
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn row_caps(&self) -> &[usize] {
        &self.row_caps
    }

    pub fn col_caps(&self) -> &[usize] {
        &self.col_caps
    }

    pub fn has_unit_rows(&self) -> bool {
        self.row_caps.iter().all(|&k| k == 1)
    }

    /// `row_caps = 𝟙` and `n = Σ l_j + 1`.
    pub fn satisfies_pseudomanifold_condition(&self) -> bool {
        self.has_unit_rows() && self.n == self.col_caps.iter().sum::<usize>() + 1
    }

    pub fn cell_id(&self, cell: Cell) -> usize {
        (cell.row() - 1) * self.m + (cell.column() - 1)
    }

    pub fn cell(&self, id: usize) -> Cell {
        Cell(id % self.m + 1, id / self.m + 1)
    }

    pub fn cells(&self, s: &Simplex) -> Vec<Cell> {
        s.vertices().iter().map(|&v| self.cell(v)).collect()
    }

    pub fn universe(&self) -> BTreeSet<usize> {
        (0..self.m * self.n).collect()
    }

    fn require_unit_rows(&self) -> Result<()> {
        if self.has_unit_rows() {
            Ok(())
        } else {
            input("operation requires row caps all equal to 1")
        }
    }

    pub(crate) fn require_pseudomanifold(&self) -> Result<()> {
        if self.satisfies_pseudomanifold_condition() {
            Ok(())
        } else {
            input(format!(
                "spec with n = {} and column caps {:?} violates n = Σl + 1 with unit row caps",
                self.n, self.col_caps
            ))
        }
    }
}

/// Enumerates the facets (maximal rook placements) of the chessboard complex.
pub fn build_chessboard(spec: &ChessboardSpec) -> Complex {
    let mut facets = Vec::new();
    let mut col_used = vec![0usize; spec.m];
    let mut row_used = vec![0usize; spec.n];
    let mut cells = Vec::new();
    place_rows(spec, 0, &mut col_used, &mut row_used, &mut cells, &mut facets);
    Complex::from_parts(spec.universe(), facets)
}

fn place_rows(
    spec: &ChessboardSpec,
    row: usize,
    col_used: &mut [usize],
    row_used: &mut [usize],
    cells: &mut Vec<usize>,
    out: &mut Vec<Simplex>,
) {
    if row == spec.n {
        let maximal = (0..spec.n).all(|i| {
            row_used[i] >= spec.row_caps[i]
                || (0..spec.m).all(|j| {
                    col_used[j] >= spec.col_caps[j] || cells.contains(&(i * spec.m + j))
                })
        });
        if maximal {
            out.push(Simplex::from_sorted(cells.clone()));
        }
        return;
    }
    place_in_row(spec, row, 0, col_used, row_used, cells, out);
}

/// Chooses the set of columns used in `row`, scanning columns from `from`.
fn place_in_row(
    spec: &ChessboardSpec,
    row: usize,
    from: usize,
    col_used: &mut [usize],
    row_used: &mut [usize],
    cells: &mut Vec<usize>,
    out: &mut Vec<Simplex>,
) {
    place_rows(spec, row + 1, col_used, row_used, cells, out);
    if row_used[row] >= spec.row_caps[row] {
        return;
    }
    for j in from..spec.m {
        if col_used[j] < spec.col_caps[j] {
            col_used[j] += 1;
            row_used[row] += 1;
            cells.push(row * spec.m + j);
            place_in_row(spec, row, j + 1, col_used, row_used, cells, out);
            cells.pop();
            row_used[row] -= 1;
            col_used[j] -= 1;
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct OffendingRidge {
    pub face: Simplex,
    /// Number of facets containing the ridge.
    pub degree: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PseudomanifoldReport {
    pub pure: bool,
    pub ridge_degrees_ok: bool,
    pub strongly_connected: bool,
    pub offending_faces: Vec<OffendingRidge>,
}

impl PseudomanifoldReport {
    pub fn is_pseudomanifold(&self) -> bool {
        self.pure && self.ridge_degrees_ok && self.strongly_connected
    }
}

/// Exhaustive audit of purity, ridge degrees and strong connectivity.
pub fn check_pseudomanifold(k: &Complex) -> PseudomanifoldReport {
    let facets = k.facets();
    let pure = k.is_pure();
    let mut ridges: HashMap<Simplex, Vec<usize>> = HashMap::new();
    for (idx, f) in facets.iter().enumerate() {
        for r in f.boundary_faces() {
            ridges.entry(r).or_default().push(idx);
        }
    }
    let mut offending: Vec<OffendingRidge> = ridges
        .iter()
        .filter(|(_, fs)| fs.len() != 2)
        .map(|(r, fs)| OffendingRidge { face: r.clone(), degree: fs.len() })
        .collect();
    offending.sort_by(|a, b| a.face.cmp(&b.face));

    let mut parent: Vec<usize> = (0..facets.len()).collect();
    fn find(p: &mut [usize], mut x: usize) -> usize {
        while p[x] != x {
            p[x] = p[p[x]];
            x = p[x];
        }
        x
    }
    for fs in ridges.values() {
        for w in fs.windows(2) {
            let (a, b) = (find(&mut parent, w[0]), find(&mut parent, w[1]));
            if a != b {
                parent[a] = b;
            }
        }
    }
    let roots: BTreeSet<usize> = (0..facets.len()).map(|i| find(&mut parent, i)).collect();

    PseudomanifoldReport {
        pure,
        ridge_degrees_ok: !facets.is_empty() && offending.is_empty(),
        strongly_connected: roots.len() == 1,
        offending_faces: offending,
    }
}

/// Orientation sign of a top-dimensional rook placement of a pseudomanifold
/// spec: the sign of the facet of `∂Δ_[n]` obtained by forgetting columns,
/// where `∂Δ_[n]` carries the boundary orientation of `[1, …, n]` and
/// vertices are listed by increasing row. The facet missing row `ω` gets
/// `(−1)^(ω−1)`.
pub fn facet_sign(spec: &ChessboardSpec, s: &Simplex) -> Result<i64> {
    if s.len() + 1 != spec.n {
        return input(format!("{s} is not top-dimensional"));
    }
    let rows: Vec<usize> = spec.cells(s).iter().map(|c| c.row()).collect();
    if rows.windows(2).any(|w| w[0] >= w[1]) {
        return input(format!("{s} has two cells in one row"));
    }
    let omega = (1..=spec.n).find(|&i| rows.get(i - 1) != Some(&i)).unwrap_or(spec.n);
    Ok(if (omega - 1) % 2 == 0 { 1 } else { -1 })
}

/// Fundamental cycle of `Δ^{𝟙;L}_{m,n}` pulled back from `∂Δ_[n]`.
pub fn orient(spec: &ChessboardSpec) -> Result<Chain> {
    spec.require_pseudomanifold()?;
    let k = build_chessboard(spec);
    let mut chain = Chain::new();
    for f in k.facets() {
        chain.insert(f.clone(), facet_sign(spec, f)?);
    }
    Ok(chain)
}

/// A permutation of the rows `0..n` (0-based internally).
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct RowPermutation {
    images: Vec<usize>,
}

impl RowPermutation {
    pub fn identity(n: usize) -> Self {
        RowPermutation { images: (0..n).collect() }
    }

    /// From 0-based images.
    pub fn from_images(images: Vec<usize>) -> Result<Self> {
        let mut seen = vec![false; images.len()];
        for &x in &images {
            if x >= images.len() || seen[x] {
                return input(format!("{images:?} is not a permutation"));
            }
            seen[x] = true;
        }
        Ok(RowPermutation { images })
    }

    /// From 1-based cycles, e.g. `&[&[1, 2], &[3, 4]]`.
    pub fn from_cycles(n: usize, cycles: &[&[usize]]) -> Result<Self> {
        let mut images: Vec<usize> = (0..n).collect();
        let mut touched = BTreeSet::new();
        for cycle in cycles {
            for (i, &a) in cycle.iter().enumerate() {
                let b = cycle[(i + 1) % cycle.len()];
                if a == 0 || a > n || b == 0 || b > n || !touched.insert(a) {
                    return input(format!("bad cycle {cycle:?} on {n} points"));
                }
                images[a - 1] = b - 1;
            }
        }
        Self::from_images(images)
    }

    /// Parses cycle notation such as `(1 2)(3 4)` or `(1,2,3)`; `()` or an
    /// empty string is the identity.
    pub fn parse_cycles(n: usize, text: &str) -> Result<Self> {
        let mut cycles: Vec<Vec<usize>> = Vec::new();
        for part in text.split('(').skip(1) {
            let body = part.split(')').next().unwrap_or_default();
            let nums: std::result::Result<Vec<usize>, _> = body
                .split(|c: char| c == ',' || c.is_whitespace())
                .filter(|t| !t.is_empty())
                .map(str::parse)
                .collect();
            let nums = nums.map_err(|e| Error::Input(format!("bad cycle '{body}': {e}")))?;
            if !nums.is_empty() {
                cycles.push(nums);
            }
        }
        let refs: Vec<&[usize]> = cycles.iter().map(Vec::as_slice).collect();
        Self::from_cycles(n, &refs)
    }

    pub fn degree(&self) -> usize {
        self.images.len()
    }

    pub fn apply(&self, i: usize) -> usize {
        self.images[i]
    }

    pub fn images(&self) -> &[usize] {
        &self.images
    }

    /// `self ∘ other`: apply `other` first.
    pub fn compose(&self, other: &RowPermutation) -> RowPermutation {
        RowPermutation { images: other.images.iter().map(|&i| self.images[i]).collect() }
    }

    pub fn inverse(&self) -> RowPermutation {
        let mut inv = vec![0; self.images.len()];
        for (i, &j) in self.images.iter().enumerate() {
            inv[j] = i;
        }
        RowPermutation { images: inv }
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(i, &j)| i == j)
    }

    /// `+1` for even permutations, `−1` for odd ones.
    pub fn sign(&self) -> i64 {
        let mut seen = vec![false; self.images.len()];
        let mut transpositions = 0;
        for start in 0..self.images.len() {
            let mut len = 0;
            let mut i = start;
            while !seen[i] {
                seen[i] = true;
                i = self.images[i];
                len += 1;
            }
            if len > 0 {
                transpositions += len - 1;
            }
        }
        if transpositions % 2 == 0 {
            1
        } else {
            -1
        }
    }

    pub fn is_even(&self) -> bool {
        self.sign() == 1
    }

    /// Image of a board cell id under the row action.
    pub fn act_on_cell(&self, spec: &ChessboardSpec, id: usize) -> usize {
        let Cell(col, row) = spec.cell(id);
        spec.cell_id(Cell(col, self.images[row - 1] + 1))
    }
}

/// Sign of the permutation sorting `seq` (distinct entries).
pub(crate) fn sorting_sign(seq: &[usize]) -> i64 {
    let mut inversions = 0usize;
    for i in 0..seq.len() {
        for j in i + 1..seq.len() {
            if seq[i] > seq[j] {
                inversions += 1;
            }
        }
    }
    if inversions.is_multiple_of(2) {
        1
    } else {
        -1
    }
}

/// Outcome of pushing an oriented chessboard through a row permutation.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RowAction {
    pub vertex_map: BTreeMap<usize, usize>,
    /// `g·τ = sign · τ`.
    pub sign: i64,
}

/// Applies `g` to `k = build_chessboard(spec)` and compares `g·τ` with `τ`.
pub fn act_row_permutation(
    k: &Complex,
    spec: &ChessboardSpec,
    g: &RowPermutation,
    tau: &Chain,
) -> Result<RowAction> {
    if g.degree() != spec.n {
        return input(format!("permutation of {} rows on a board with {} rows", g.degree(), spec.n));
    }
    let vertex_map: BTreeMap<usize, usize> =
        k.universe().iter().map(|&v| (v, g.act_on_cell(spec, v))).collect();
    let facet_set: BTreeSet<&Simplex> = k.facets().iter().collect();
    let mut sign: Option<i64> = None;
    let mut images = BTreeSet::new();
    for f in k.facets() {
        let mapped: Vec<usize> = f.vertices().iter().map(|v| vertex_map[v]).collect();
        let image = Simplex::new(mapped.clone());
        if !facet_set.contains(&image) {
            return Err(Error::Internal(format!("row permutation maps facet {f} outside the complex")));
        }
        images.insert(image.clone());
        let pushed = tau.get(f) * sorting_sign(&mapped);
        let here = tau.get(&image);
        if here == 0 || pushed == 0 {
            continue;
        }
        let ratio = if pushed == here { 1 } else if pushed == -here { -1 } else { 0 };
        match sign {
            None => sign = Some(ratio),
            Some(s) if s == ratio => {}
            Some(_) => return Err(Error::Internal("g·τ is not a multiple of τ".into())),
        }
    }
    if images.len() != facet_set.len() {
        return Err(Error::Internal("row permutation is not a bijection on facets".into()));
    }
    match sign {
        Some(s) if s != 0 => Ok(RowAction { vertex_map, sign: s }),
        _ => Err(Error::Internal("g·τ is not ±τ".into())),
    }
}

/// A permutation group on the rows, given by generators.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Subgroup {
    degree: usize,
    generators: Vec<RowPermutation>,
    elements: Vec<RowPermutation>,
    orbits: Vec<Vec<usize>>,
}

impl Subgroup {
    /// Closes the generators under composition (breadth first).
    pub fn from_generators(degree: usize, generators: Vec<RowPermutation>) -> Result<Self> {
        Self::from_generators_capped(degree, generators, SUBGROUP_ELEMENT_CAP)
    }

    pub fn from_generators_capped(
        degree: usize,
        generators: Vec<RowPermutation>,
        cap: usize,
    ) -> Result<Self> {
        if let Some(g) = generators.iter().find(|g| g.degree() != degree) {
            return input(format!("generator {:?} does not act on {degree} rows", g.images()));
        }
        let id = RowPermutation::identity(degree);
        let mut seen: BTreeSet<RowPermutation> = BTreeSet::from([id.clone()]);
        let mut queue = VecDeque::from([id]);
        while let Some(x) = queue.pop_front() {
            for g in &generators {
                let y = g.compose(&x);
                if seen.insert(y.clone()) {
                    if seen.len() > cap {
                        return Err(Error::Resource(format!(
                            "subgroup has more than {cap} elements"
                        )));
                    }
                    queue.push_back(y);
                }
            }
        }

        let mut parent: Vec<usize> = (0..degree).collect();
        fn find(p: &mut [usize], mut x: usize) -> usize {
            while p[x] != x {
                p[x] = p[p[x]];
                x = p[x];
            }
            x
        }
        for g in &generators {
            for i in 0..degree {
                let (a, b) = (find(&mut parent, i), find(&mut parent, g.apply(i)));
                if a != b {
                    parent[a.max(b)] = a.min(b);
                }
            }
        }
        let mut orbit_map: BTreeMap<usize, Vec<usize>> = BTreeMap::new();
        for i in 0..degree {
            let r = find(&mut parent, i);
            orbit_map.entry(r).or_default().push(i);
        }
        let mut orbits: Vec<Vec<usize>> = orbit_map.into_values().collect();
        orbits.sort();
        Ok(Subgroup { degree, generators, elements: seen.into_iter().collect(), orbits })
    }

    pub fn trivial(degree: usize) -> Self {
        Self::from_generators(degree, Vec::new()).expect("trivial group")
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn generators(&self) -> &[RowPermutation] {
        &self.generators
    }

    pub fn elements(&self) -> &[RowPermutation] {
        &self.elements
    }

    pub fn order(&self) -> usize {
        self.elements.len()
    }

    /// Orbits of `0..degree` (0-based), sorted by least element.
    pub fn orbits(&self) -> &[Vec<usize>] {
        &self.orbits
    }
}

fn check_fixed_inputs(spec: &ChessboardSpec, h: &Subgroup) -> Result<()> {
    spec.require_unit_rows()?;
    if h.degree() != spec.n {
        return input(format!("group acts on {} rows, board has {}", h.degree(), spec.n));
    }
    Ok(())
}

/// Simplicial model of the `H`-fixed points of `Δ^{𝟙;L}_{m,n}`.
///
/// Vertex `(column i, orbit j)` is the barycenter of `{i} × O_j`; it gets id
/// `(j−1)·m + (i−1)` with orbits numbered by least element, so for the
/// trivial group the ids coincide with the board's cell ids. A set of such
/// vertices is a face when every orbit is used in at most one column and the
/// orbit sizes placed in column `i` sum to at most `l_i`.
pub fn fixed_subcomplex(spec: &ChessboardSpec, h: &Subgroup) -> Result<Complex> {
    check_fixed_inputs(spec, h)?;
    let weights: Vec<usize> = h.orbits().iter().map(Vec::len).collect();
    let m = spec.m;
    let mut facets = Vec::new();
    let mut load = vec![0usize; m];
    let mut chosen: Vec<Option<usize>> = vec![None; weights.len()];
    assign_orbits(spec.col_caps(), &weights, 0, &mut load, &mut chosen, &mut facets);
    let universe = (0..m * weights.len())
        .filter(|id| weights[id / m] <= spec.col_caps()[id % m])
        .collect();
    Ok(Complex::from_parts(universe, facets))
}

fn assign_orbits(
    caps: &[usize],
    weights: &[usize],
    j: usize,
    load: &mut [usize],
    chosen: &mut [Option<usize>],
    out: &mut Vec<Simplex>,
) {
    let m = caps.len();
    if j == weights.len() {
        let maximal = (0..weights.len())
            .all(|o| chosen[o].is_some() || (0..m).all(|i| load[i] + weights[o] > caps[i]));
        if maximal {
            let ids = chosen
                .iter()
                .enumerate()
                .filter_map(|(o, c)| c.map(|i| o * m + i))
                .collect();
            out.push(Simplex::from_sorted(ids));
        }
        return;
    }
    assign_orbits(caps, weights, j + 1, load, chosen, out);
    for i in 0..m {
        if load[i] + weights[j] <= caps[i] {
            load[i] += weights[j];
            chosen[j] = Some(i);
            assign_orbits(caps, weights, j + 1, load, chosen, out);
            chosen[j] = None;
            load[i] -= weights[j];
        }
    }
}

/// Dimension of [`fixed_subcomplex`] without enumerating its facets: one less
/// than the largest number of orbits that can be packed into the columns.
pub fn fixed_dimension(spec: &ChessboardSpec, h: &Subgroup) -> Result<isize> {
    check_fixed_inputs(spec, h)?;
    let mut weights: Vec<usize> = h.orbits().iter().map(Vec::len).collect();
    weights.sort_unstable();
    let mut memo: HashMap<(usize, Vec<usize>), usize> = HashMap::new();
    let best = max_packed(&weights, 0, spec.col_caps().to_vec(), &mut memo);
    Ok(best as isize - 1)
}

fn max_packed(
    weights: &[usize],
    j: usize,
    mut remaining: Vec<usize>,
    memo: &mut HashMap<(usize, Vec<usize>), usize>,
) -> usize {
    if j == weights.len() {
        return 0;
    }
    remaining.sort_unstable();
    if let Some(&v) = memo.get(&(j, remaining.clone())) {
        return v;
    }
    let mut best = max_packed(weights, j + 1, remaining.clone(), memo);
    let mut tried = BTreeSet::new();
    for i in 0..remaining.len() {
        if remaining[i] >= weights[j] && tried.insert(remaining[i]) {
            let mut next = remaining.clone();
            next[i] -= weights[j];
            best = best.max(1 + max_packed(weights, j + 1, next, memo));
        }
    }
    memo.insert((j, remaining), best);
    best
}
