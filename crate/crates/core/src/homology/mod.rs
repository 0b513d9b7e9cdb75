//! Finite simplicial complexes, order complexes of finite posets, and their
//! reduced integral homology.

mod snf;

pub use snf::{smith_normal_form, SparseMatrix};

use std::collections::{BTreeMap, BTreeSet, HashMap};
use std::fmt;

use num_bigint::BigInt;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::scalar::SnfRing;

/// A finite abstract simplicial complex on an indexed vertex list.
///
/// `simplices[d]` holds the `d`-simplices as strictly increasing vertex-index
/// tuples, sorted lexicographically. The set is closed under faces.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SimplicialComplex<V> {
    vertices: Vec<V>,
    simplices: Vec<Vec<Vec<u32>>>,
}

impl<V> SimplicialComplex<V> {
    /// The complex generated by `faces` (all their subsets are added).
    pub fn from_face_list(vertices: Vec<V>, faces: Vec<Vec<usize>>) -> Self {
        let mut by_dim: Vec<BTreeSet<Vec<u32>>> = Vec::new();
        for face in faces {
            let mut f: Vec<u32> = face.into_iter().map(|v| v as u32).collect();
            f.sort_unstable();
            f.dedup();
            if f.is_empty() {
                continue;
            }
            assert!(
                f.iter().all(|&v| (v as usize) < vertices.len()),
                "vertex index out of range"
            );
            let k = f.len();
            // every nonempty subset
            for mask in 1u64..(1u64 << k) {
                let sub: Vec<u32> = (0..k)
                    .filter(|i| mask & (1 << i) != 0)
                    .map(|i| f[i])
                    .collect();
                let d = sub.len() - 1;
                if by_dim.len() <= d {
                    by_dim.resize_with(d + 1, BTreeSet::new);
                }
                by_dim[d].insert(sub);
            }
        }
        let simplices = by_dim
            .into_iter()
            .map(|s| s.into_iter().collect())
            .collect();
        Self {
            vertices,
            simplices,
        }
    }

    pub fn vertices(&self) -> &[V] {
        &self.vertices
    }

    /// Dimension, or `None` for the empty complex.
    pub fn dim(&self) -> Option<usize> {
        self.simplices.len().checked_sub(1)
    }

    pub fn count(&self, d: usize) -> usize {
        self.simplices.get(d).map_or(0, Vec::len)
    }

    pub fn simplices(&self, d: usize) -> &[Vec<u32>] {
        self.simplices.get(d).map_or(&[], Vec::as_slice)
    }

    pub fn dims(&self) -> Vec<usize> {
        self.simplices.iter().map(Vec::len).collect()
    }

    pub fn euler_characteristic(&self) -> i64 {
        self.simplices
            .iter()
            .enumerate()
            .map(|(d, s)| {
                if d % 2 == 0 {
                    s.len() as i64
                } else {
                    -(s.len() as i64)
                }
            })
            .sum()
    }

    fn spans_all_subsets_except_top(&self) -> (bool, bool) {
        let k = self.vertices.len();
        if k == 0 || k > 62 {
            return (false, false);
        }
        let full_counts = (1..=k).map(|s| binomial(k, s)).collect::<Vec<_>>();
        let proper = (0..k - 1).all(|d| self.count(d) == full_counts[d]);
        (proper, self.count(k - 1) == 1)
    }

    /// Every subset of the vertices is a simplex.
    pub fn is_full_simplex(&self) -> bool {
        let (proper, top) = self.spans_all_subsets_except_top();
        proper && top
    }

    /// Every proper subset is a simplex but the whole vertex set is not.
    pub fn is_simplex_boundary(&self) -> bool {
        let (proper, top) = self.spans_all_subsets_except_top();
        proper && !top && self.dim().map_or(0, |d| d + 1) + 1 == self.vertices.len()
    }

    /// Same complex with vertex `i` renamed to `perm[i]`.
    pub fn relabel(&self, perm: &[usize]) -> SimplicialComplex<usize> {
        let faces = self
            .simplices
            .iter()
            .flatten()
            .map(|s| s.iter().map(|&v| perm[v as usize]).collect())
            .collect();
        SimplicialComplex::from_face_list((0..self.vertices.len()).collect(), faces)
    }

    /// Boundary map from `d`-chains to `(d-1)`-chains (`d >= 1`).
    pub fn boundary_matrix<R: SnfRing>(&self, d: usize) -> SparseMatrix<R> {
        assert!(d >= 1);
        let lower = self.simplices(d - 1);
        let index: HashMap<&[u32], usize> = lower
            .iter()
            .enumerate()
            .map(|(i, s)| (s.as_slice(), i))
            .collect();
        let columns = self
            .simplices(d)
            .iter()
            .map(|s| {
                let mut face = Vec::with_capacity(d);
                (0..=d)
                    .map(|drop| {
                        face.clear();
                        face.extend(
                            s.iter()
                                .enumerate()
                                .filter(|(k, _)| *k != drop)
                                .map(|(_, v)| *v),
                        );
                        let row = index[face.as_slice()];
                        let sign = if drop % 2 == 0 { R::one() } else { -R::one() };
                        (row, sign)
                    })
                    .collect()
            })
            .collect();
        SparseMatrix::from_columns(lower.len(), columns)
    }

    /// Augmentation `C_0 → Z`.
    pub fn augmentation<R: SnfRing>(&self) -> SparseMatrix<R> {
        let columns = (0..self.count(0)).map(|_| vec![(0, R::one())]).collect();
        SparseMatrix::from_columns(1, columns)
    }
}

fn binomial(n: usize, k: usize) -> usize {
    (0..k).fold(1usize, |acc, i| acc * (n - i) / (i + 1))
}

/// The order complex: all nonempty chains of a finite poset.
///
/// `leq` must be a partial order; a violation of antisymmetry is reported.
/// `max_dim` caps the length of enumerated chains.
pub fn order_complex<V>(
    vertices: Vec<V>,
    leq: impl Fn(&V, &V) -> bool,
    max_dim: Option<usize>,
) -> Result<SimplicialComplex<V>> {
    let n = vertices.len();
    let mut up: Vec<Vec<u32>> = vec![Vec::new(); n];
    for a in 0..n {
        for b in 0..n {
            if a != b && leq(&vertices[a], &vertices[b]) {
                if b < a && leq(&vertices[b], &vertices[a]) {
                    return Err(Error::InconsistentOrder(b, a));
                }
                up[a].push(b as u32);
            }
        }
    }
    let cap = max_dim.unwrap_or(usize::MAX);
    let mut by_dim: Vec<Vec<Vec<u32>>> = Vec::new();
    let mut chain: Vec<u32> = Vec::new();
    fn extend(chain: &mut Vec<u32>, up: &[Vec<u32>], cap: usize, by_dim: &mut Vec<Vec<Vec<u32>>>) {
        let d = chain.len() - 1;
        if by_dim.len() <= d {
            by_dim.push(Vec::new());
        }
        let mut sorted = chain.clone();
        sorted.sort_unstable();
        by_dim[d].push(sorted);
        if d >= cap {
            return;
        }
        let last = *chain.last().unwrap() as usize;
        for &next in &up[last] {
            chain.push(next);
            extend(chain, up, cap, by_dim);
            chain.pop();
        }
    }
    for start in 0..n {
        chain.push(start as u32);
        extend(&mut chain, &up, cap, &mut by_dim);
        chain.pop();
    }
    for s in by_dim.iter_mut() {
        s.sort_unstable();
    }
    Ok(SimplicialComplex {
        vertices,
        simplices: by_dim,
    })
}

/// Reduced integral homology: free rank and torsion coefficients per degree.
///
/// Only nonzero groups are stored, so profiles compare equal exactly when the
/// homology groups agree. Degree `-1` carries the class of the empty complex.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct HomologyProfile {
    pub betti: BTreeMap<i64, usize>,
    #[serde(with = "torsion_serde")]
    pub torsion: BTreeMap<i64, Vec<BigInt>>,
}

impl HomologyProfile {
    pub fn betti(&self, d: i64) -> usize {
        self.betti.get(&d).copied().unwrap_or(0)
    }

    pub fn torsion(&self, d: i64) -> &[BigInt] {
        self.torsion.get(&d).map_or(&[], Vec::as_slice)
    }

    pub fn is_acyclic(&self) -> bool {
        self.betti.is_empty() && self.torsion.is_empty()
    }

    pub fn has_torsion(&self) -> bool {
        !self.torsion.is_empty()
    }

    /// Homology of the `d`-sphere (`d = -1` is the empty complex).
    pub fn is_sphere(&self, d: i64) -> bool {
        self.torsion.is_empty() && self.betti.len() == 1 && self.betti(d) == 1
    }

    pub fn sphere(d: i64) -> Self {
        Self {
            betti: [(d, 1)].into_iter().collect(),
            torsion: BTreeMap::new(),
        }
    }

    /// Short label: `acyclic`, `S^2`, or a list of groups.
    pub fn label(&self) -> String {
        if self.is_acyclic() {
            return "acyclic".into();
        }
        if let Some((&d, 1)) = self.betti.iter().next() {
            if self.is_sphere(d) {
                return format!("S^{d}");
            }
        }
        self.to_string()
    }
}

impl fmt::Display for HomologyProfile {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_acyclic() {
            return write!(f, "0");
        }
        let degrees: BTreeSet<i64> = self
            .betti
            .keys()
            .chain(self.torsion.keys())
            .copied()
            .collect();
        let parts: Vec<String> = degrees
            .into_iter()
            .map(|d| {
                let mut summands = Vec::new();
                match self.betti(d) {
                    0 => {}
                    1 => summands.push("Z".to_string()),
                    b => summands.push(format!("Z^{b}")),
                }
                summands.extend(self.torsion(d).iter().map(|t| format!("Z/{t}")));
                format!("H{d}={}", summands.join("+"))
            })
            .collect();
        write!(f, "{}", parts.join(", "))
    }
}

mod torsion_serde {
    use std::collections::BTreeMap;

    use num_bigint::BigInt;
    use num_traits::ToPrimitive;
    use serde::{Deserialize, Deserializer, Serialize, Serializer};

    #[derive(Serialize, Deserialize)]
    #[serde(untagged)]
    enum Entry {
        Small(i64),
        Big(String),
    }

    pub fn serialize<S: Serializer>(
        map: &BTreeMap<i64, Vec<BigInt>>,
        serializer: S,
    ) -> Result<S::Ok, S::Error> {
        let out: BTreeMap<i64, Vec<Entry>> = map
            .iter()
            .map(|(d, ts)| {
                let entries = ts
                    .iter()
                    .map(|t| {
                        t.to_i64()
                            .map_or_else(|| Entry::Big(t.to_string()), Entry::Small)
                    })
                    .collect();
                (*d, entries)
            })
            .collect();
        out.serialize(serializer)
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(
        deserializer: D,
    ) -> Result<BTreeMap<i64, Vec<BigInt>>, D::Error> {
        let raw = BTreeMap::<i64, Vec<Entry>>::deserialize(deserializer)?;
        raw.into_iter()
            .map(|(d, es)| {
                let ts = es
                    .into_iter()
                    .map(|e| match e {
                        Entry::Small(v) => Ok(BigInt::from(v)),
                        Entry::Big(s) => s.parse().map_err(serde::de::Error::custom),
                    })
                    .collect::<Result<Vec<_>, _>>()?;
                Ok((d, ts))
            })
            .collect()
    }
}

/// Homology together with the simplex counts it was computed from.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ComplexHomology {
    pub dims: BTreeMap<usize, usize>,
    #[serde(flatten)]
    pub profile: HomologyProfile,
}

/// Reduced homology over a chosen integer ring. Fails with
/// [`Error::Overflow`] if a fixed-width ring is too small.
pub fn reduced_homology_over<R: SnfRing, V>(
    cx: &SimplicialComplex<V>,
    max_degree: Option<usize>,
) -> Result<ComplexHomology> {
    let dims: BTreeMap<usize, usize> = cx.dims().into_iter().enumerate().collect();
    let mut profile = HomologyProfile::default();
    let Some(top) = cx.dim() else {
        profile.betti.insert(-1, 1);
        return Ok(ComplexHomology { dims, profile });
    };
    let report_top = max_degree.map_or(top, |m| m.min(top));
    // ranks[d] = rank of ∂_d, with ∂_0 the augmentation
    let mut ranks = vec![1usize];
    let mut torsion_of: Vec<Vec<R>> = vec![Vec::new()];
    for d in 1..=(report_top + 1).min(top) {
        let factors = cx.boundary_matrix::<R>(d).smith_normal_form()?;
        ranks.push(factors.len());
        torsion_of.push(factors.into_iter().filter(|f| !f.is_one()).collect());
    }
    ranks.resize(report_top + 2, 0);
    torsion_of.resize(report_top + 2, Vec::new());
    for d in 0..=report_top {
        let betti = cx.count(d) - ranks[d] - ranks[d + 1];
        if betti > 0 {
            profile.betti.insert(d as i64, betti);
        }
        let torsion: Vec<BigInt> = torsion_of[d + 1].iter().map(SnfRing::to_big).collect();
        if !torsion.is_empty() {
            profile.torsion.insert(d as i64, torsion);
        }
    }
    Ok(ComplexHomology { dims, profile })
}

/// Exact reduced homology. Elimination runs in `i64` with checked arithmetic
/// and is repeated over `BigInt` if any intermediate overflows.
pub fn reduced_homology<V>(
    cx: &SimplicialComplex<V>,
    max_degree: Option<usize>,
) -> ComplexHomology {
    match reduced_homology_over::<i64, V>(cx, max_degree) {
        Ok(h) => h,
        Err(_) => reduced_homology_over::<BigInt, V>(cx, max_degree)
            .expect("arbitrary precision elimination cannot overflow"),
    }
}

/// Alternating sum of reduced Betti numbers, including degree `-1`.
pub fn reduced_euler_from_betti(profile: &HomologyProfile) -> i64 {
    profile
        .betti
        .iter()
        .map(|(d, b)| {
            if d.rem_euclid(2) == 0 {
                *b as i64
            } else {
                -(*b as i64)
            }
        })
        .sum()
}
