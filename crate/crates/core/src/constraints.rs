//! Multisets, 𝕍-proper collections and unavoidable complexes.

use std::collections::{BTreeMap, BTreeSet};

use serde::{Deserialize, Serialize};

use crate::error::{input, Error, Result};
use crate::simplicial::{build_complex, Complex, Simplex};

/// Default cap on search nodes visited by [`is_unavoidable`].
pub const UNAVOIDABLE_NODE_GUARD: u64 = 10_000_000;
/// Default cap on `|V|`; minimal non-faces are found among all `2^|V|` subsets.
pub const UNAVOIDABLE_VERTEX_GUARD: usize = 22;

/// A vertex set with positive multiplicities.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(try_from = "MultisetData", into = "MultisetData")]
pub struct Multiset {
    multiplicity: BTreeMap<usize, usize>,
}

/// JSON form; vertices missing from `multiplicity` count once.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct MultisetData {
    pub vertices: Vec<usize>,
    #[serde(default)]
    pub multiplicity: BTreeMap<String, usize>,
}

impl TryFrom<MultisetData> for Multiset {
    type Error = Error;

    fn try_from(data: MultisetData) -> Result<Self> {
        let mut m: BTreeMap<usize, usize> = data.vertices.iter().map(|&v| (v, 1)).collect();
        for (key, &mult) in &data.multiplicity {
            let v: usize = key.parse().map_err(|_| Error::Input(format!("vertex key {key:?} is not an integer")))?;
            match m.get_mut(&v) {
                Some(slot) => *slot = mult,
                None => return input(format!("multiplicity given for {v}, which is not a vertex")),
            }
        }
        Multiset::new(m)
    }
}

impl From<Multiset> for MultisetData {
    fn from(m: Multiset) -> Self {
        MultisetData {
            vertices: m.multiplicity.keys().copied().collect(),
            multiplicity: m.multiplicity.iter().map(|(v, c)| (v.to_string(), *c)).collect(),
        }
    }
}

impl Multiset {
    pub fn new(multiplicity: BTreeMap<usize, usize>) -> Result<Self> {
        if let Some((v, _)) = multiplicity.iter().find(|(_, &c)| c == 0) {
            return input(format!("vertex {v} has multiplicity 0"));
        }
        Ok(Multiset { multiplicity })
    }

    /// Vertices `0..weights.len()` with the given multiplicities.
    pub fn from_weights(weights: &[usize]) -> Result<Self> {
        Self::new(weights.iter().copied().enumerate().collect())
    }

    pub fn universe(&self) -> BTreeSet<usize> {
        self.multiplicity.keys().copied().collect()
    }

    pub fn multiplicity(&self, v: usize) -> Option<usize> {
        self.multiplicity.get(&v).copied()
    }

    pub fn len(&self) -> usize {
        self.multiplicity.len()
    }

    pub fn is_empty(&self) -> bool {
        self.multiplicity.is_empty()
    }

    pub fn total_weight(&self) -> usize {
        self.multiplicity.values().sum()
    }

    /// `m(S)`; errors on vertices outside the universe.
    pub fn weight(&self, s: &Simplex) -> Result<usize> {
        s.vertices()
            .iter()
            .map(|&v| self.multiplicity(v).ok_or_else(|| Error::Input(format!("vertex {v} is not in the multiset"))))
            .sum()
    }

    /// Disjoint union: the right summand's vertices are shifted past the
    /// largest vertex on the left.
    pub fn disjoint_union(&self, other: &Multiset) -> Multiset {
        let shift = self.multiplicity.keys().next_back().map_or(0, |m| m + 1);
        let mut m = self.multiplicity.clone();
        m.extend(other.multiplicity.iter().map(|(v, c)| (v + shift, *c)));
        Multiset { multiplicity: m }
    }
}

/// Whether the `r` sets use every vertex at most its multiplicity.
pub fn is_v_proper(v: &Multiset, collection: &[Simplex], r: usize) -> Result<bool> {
    if collection.len() != r {
        return input(format!("collection has {} members, expected {r}", collection.len()));
    }
    let mut usage: BTreeMap<usize, usize> = BTreeMap::new();
    for s in collection {
        for &x in s.vertices() {
            if v.multiplicity(x).is_none() {
                return input(format!("vertex {x} is not in the multiset"));
            }
            *usage.entry(x).or_insert(0) += 1;
        }
    }
    Ok(usage.iter().all(|(x, &u)| u <= v.multiplicity[x]))
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct UnavoidabilityVerdict {
    pub unavoidable: bool,
    /// A 𝕍-proper collection none of whose members is a face.
    pub counterexample: Option<Vec<Simplex>>,
}

/// All subsets of `universe` outside `k` whose proper subsets all lie in `k`.
pub fn minimal_non_faces(k: &Complex, universe: &BTreeSet<usize>) -> Vec<Simplex> {
    let verts: Vec<usize> = universe.iter().copied().collect();
    let n = verts.len();
    let mut is_face = vec![false; 1 << n];
    let mut out = Vec::new();
    for mask in 0usize..1 << n {
        let s = Simplex::new((0..n).filter(|&i| mask >> i & 1 == 1).map(|i| verts[i]).collect());
        is_face[mask] = k.contains_face(&s);
        if !is_face[mask] && (0..n).filter(|&i| mask >> i & 1 == 1).all(|i| is_face[mask & !(1 << i)]) {
            out.push(s);
        }
    }
    out.sort_by(|a, b| (a.len(), a.vertices()).cmp(&(b.len(), b.vertices())));
    out
}

/// Decides `(r, 𝕍)`-unavoidability of `k`.
///
/// A collection avoids `k` exactly when each member contains a minimal
/// non-face, and shrinking members keeps the collection 𝕍-proper, so it
/// suffices to search `r`-multisets of minimal non-faces. The counterexample
/// is the least such multiset in (size, vertex) order.
pub fn is_unavoidable(k: &Complex, r: usize, v: &Multiset) -> Result<UnavoidabilityVerdict> {
    is_unavoidable_guarded(k, r, v, UNAVOIDABLE_NODE_GUARD)
}

pub fn is_unavoidable_guarded(k: &Complex, r: usize, v: &Multiset, node_guard: u64) -> Result<UnavoidabilityVerdict> {
    if r == 0 {
        return input("r must be positive");
    }
    let universe = v.universe();
    if let Some(x) = k.vertex_set().iter().find(|x| !universe.contains(x)) {
        return input(format!("complex vertex {x} is not in the multiset"));
    }
    if universe.len() > UNAVOIDABLE_VERTEX_GUARD {
        return Err(Error::Resource(format!(
            "|V| = {} exceeds the enumeration guard {UNAVOIDABLE_VERTEX_GUARD}",
            universe.len()
        )));
    }
    let candidates = minimal_non_faces(k, &universe);
    let mut usage: BTreeMap<usize, usize> = BTreeMap::new();
    let mut chosen = Vec::with_capacity(r);
    let mut visited = 0u64;
    let found = pick(&candidates, v, r, 0, &mut usage, &mut chosen, &mut visited, node_guard)?;
    Ok(UnavoidabilityVerdict {
        unavoidable: !found,
        counterexample: found.then(|| chosen.iter().map(|&i| candidates[i].clone()).collect()),
    })
}

#[allow(clippy::too_many_arguments)]
fn pick(
    candidates: &[Simplex],
    v: &Multiset,
    r: usize,
    from: usize,
    usage: &mut BTreeMap<usize, usize>,
    chosen: &mut Vec<usize>,
    visited: &mut u64,
    guard: u64,
) -> Result<bool> {
    if chosen.len() == r {
        return Ok(true);
    }
    for i in from..candidates.len() {
        *visited += 1;
        if *visited > guard {
            return Err(Error::Resource(format!("unavoidability search exceeded {guard} nodes")));
        }
        let s = &candidates[i];
        if s.vertices().iter().any(|x| usage.get(x).copied().unwrap_or(0) >= v.multiplicity[x]) {
            continue;
        }
        for &x in s.vertices() {
            *usage.entry(x).or_insert(0) += 1;
        }
        chosen.push(i);
        if pick(candidates, v, r, i, usage, chosen, visited, guard)? {
            return Ok(true);
        }
        chosen.pop();
        for &x in s.vertices() {
            *usage.get_mut(&x).expect("counted above") -= 1;
        }
    }
    Ok(false)
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct AvoidanceReport {
    pub weight: usize,
    /// Whether `m(S) ≤ r − 1`.
    pub hypothesis_holds: bool,
    /// Exhaustive verdict, when the enumeration fits within the guard.
    pub verdict: Option<UnavoidabilityVerdict>,
}

/// Examines the full simplex on `V ∖ S` as a candidate unavoidable complex.
pub fn check_face_avoidance_unavoidable(v: &Multiset, s: &Simplex, r: usize) -> Result<AvoidanceReport> {
    let weight = v.weight(s)?;
    let rest: Vec<usize> = v.universe().into_iter().filter(|x| !s.contains(*x)).collect();
    let complex = build_complex(v.universe(), [rest])?;
    let verdict = match is_unavoidable(&complex, r, v) {
        Ok(verdict) => Some(verdict),
        Err(Error::Resource(_)) => None,
        Err(e) => return Err(e),
    };
    Ok(AvoidanceReport { weight, hypothesis_holds: weight < r, verdict })
}

/// The full subcomplex of `k` on the vertices outside every avoid set.
pub fn constrain_complex(k: &Complex, avoid_sets: &[Simplex]) -> Result<Complex> {
    let mut removed = BTreeSet::new();
    for s in avoid_sets {
        for &x in s.vertices() {
            if !removed.insert(x) {
                return input(format!("avoid sets overlap in vertex {x}"));
            }
        }
    }
    Ok(k.induced_on_complement(&removed))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn s(v: &[usize]) -> Simplex {
        Simplex::new(v.to_vec())
    }

    fn full(universe: std::ops::Range<usize>, face: Vec<usize>) -> Complex {
        build_complex(universe, [face]).unwrap()
    }

    fn abc() -> Multiset {
        Multiset::from_weights(&[1, 1, 1]).unwrap()
    }

    #[test]
    fn proper_collections() {
        let a2 = Multiset::from_weights(&[2]).unwrap();
        assert!(is_v_proper(&a2, &[s(&[0]), s(&[0])], 2).unwrap());
        let a1 = Multiset::from_weights(&[1]).unwrap();
        assert!(!is_v_proper(&a1, &[s(&[0]), s(&[0])], 2).unwrap());
        assert!(is_v_proper(&a1, &[s(&[]), s(&[0])], 2).unwrap());
        assert!(is_v_proper(&a1, &[s(&[1]), s(&[0])], 2).is_err());
        assert!(is_v_proper(&a1, &[s(&[0])], 2).is_err());
    }

    #[test]
    fn unavoidable_examples() {
        let v = abc();
        let bc = full(0..3, vec![1, 2]);
        assert!(is_unavoidable(&bc, 2, &v).unwrap().unavoidable);
        let c = full(0..3, vec![2]);
        let verdict = is_unavoidable(&c, 2, &v).unwrap();
        assert!(!verdict.unavoidable);
        assert_eq!(verdict.counterexample, Some(vec![s(&[0]), s(&[1])]));
        let full = full(0..3, vec![0, 1, 2]);
        for r in 1..5 {
            assert!(is_unavoidable(&full, r, &v).unwrap().unavoidable);
        }
    }

    #[test]
    fn void_complex_is_avoidable() {
        let verdict = is_unavoidable(&Complex::void([0, 1, 2].into()), 2, &abc()).unwrap();
        assert_eq!(verdict.counterexample, Some(vec![s(&[]), s(&[])]));
    }

    #[test]
    fn face_avoidance() {
        let v = abc();
        let rep = check_face_avoidance_unavoidable(&v, &s(&[0]), 2).unwrap();
        assert_eq!(rep.weight, 1);
        assert!(rep.hypothesis_holds);
        assert!(rep.verdict.unwrap().unavoidable);

        let rep = check_face_avoidance_unavoidable(&v, &s(&[0, 1]), 2).unwrap();
        assert!(!rep.hypothesis_holds);
        assert_eq!(rep.verdict.unwrap().counterexample, Some(vec![s(&[0]), s(&[1])]));

        let rep = check_face_avoidance_unavoidable(&v, &s(&[]), 2).unwrap();
        assert_eq!(rep.weight, 0);
        assert!(rep.verdict.unwrap().unavoidable);
    }

    #[test]
    fn guards() {
        let big = Multiset::from_weights(&[1; 23]).unwrap();
        let k = full(0..23, vec![0]);
        assert!(matches!(is_unavoidable(&k, 2, &big), Err(Error::Resource(_))));
        let v = Multiset::from_weights(&[3; 6]).unwrap();
        let k = Complex::void((0..6).collect());
        let k2 = full(0..6, vec![]);
        assert!(is_unavoidable_guarded(&k, 4, &v, 4).is_ok());
        assert!(matches!(is_unavoidable_guarded(&k2, 9, &v, 3), Err(Error::Resource(_))));
    }

    #[test]
    fn constrain() {
        let k = full(0..4, vec![0, 1, 2, 3]);
        assert_eq!(constrain_complex(&k, &[]).unwrap(), k);
        let c = constrain_complex(&k, &[s(&[0]), s(&[2])]).unwrap();
        assert_eq!(c.facets(), &[s(&[1, 3])]);
        assert!(constrain_complex(&k, &[s(&[0, 1]), s(&[1])]).is_err());
    }

    #[test]
    fn multiset_json() {
        let m: Multiset = serde_json::from_str(r#"{"vertices":[0,1,2],"multiplicity":{"1":2}}"#).unwrap();
        assert_eq!(m.multiplicity(1), Some(2));
        assert_eq!(m.total_weight(), 4);
        let back: Multiset = serde_json::from_str(&serde_json::to_string(&m).unwrap()).unwrap();
        assert_eq!(back, m);
        assert!(serde_json::from_str::<Multiset>(r#"{"vertices":[0],"multiplicity":{"0":0}}"#).is_err());
        assert!(serde_json::from_str::<Multiset>(r#"{"vertices":[0],"multiplicity":{"5":1}}"#).is_err());
    }
}
