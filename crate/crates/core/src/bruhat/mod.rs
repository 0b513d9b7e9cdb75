//! The symmetric group under the weak (right) Bruhat order.
//!
//! `σ ≤ τ` iff every inversion of `σ` is an inversion of `τ`. The order is a
//! lattice with minimum the identity and maximum `w_0 = [n, ..., 1]`; its
//! proper part `PW_n` and the reversing vertex sets `Rev_n(i, j)` are the
//! ambient complexes for ascending links.

mod permutation;

pub use permutation::{AllPermutations, InversionSet, Permutation};

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::homology::SimplicialComplex;

fn common_n<'a>(perms: impl IntoIterator<Item = &'a Permutation>) -> Result<Option<usize>> {
    let mut n = None;
    for p in perms {
        match n {
            None => n = Some(p.n()),
            Some(m) if m != p.n() => {
                return Err(Error::StrandMismatch {
                    left: m,
                    right: p.n(),
                })
            }
            _ => {}
        }
    }
    Ok(n)
}

pub fn inversion_set(sigma: &Permutation) -> InversionSet {
    sigma.inversion_set()
}

pub fn coxeter_length(sigma: &Permutation) -> usize {
    sigma.coxeter_length()
}

pub fn weak_leq(sigma: &Permutation, tau: &Permutation) -> Result<bool> {
    if sigma.n() != tau.n() {
        return Err(Error::StrandMismatch {
            left: sigma.n(),
            right: tau.n(),
        });
    }
    Ok(sigma.weak_leq_same_n(tau))
}

/// Least upper bound, found by scanning `S_n` for the shortest common upper
/// bound. Meant for `n <= 8`.
pub fn join(set: &[Permutation]) -> Result<Permutation> {
    let n = common_n(set)?.ok_or(Error::EmptySet)?;
    if let [only] = set {
        return Ok(only.clone());
    }
    Permutation::all(n)
        .filter(|t| set.iter().all(|s| s.weak_leq_same_n(t)))
        .min_by_key(|t| t.coxeter_length())
        .ok_or(Error::EmptySet)
}

/// Greatest lower bound, dual to [`join`].
pub fn meet(set: &[Permutation]) -> Result<Permutation> {
    let n = common_n(set)?.ok_or(Error::EmptySet)?;
    if let [only] = set {
        return Ok(only.clone());
    }
    Permutation::all(n)
        .filter(|t| set.iter().all(|s| t.weak_leq_same_n(s)))
        .max_by_key(|t| t.coxeter_length())
        .ok_or(Error::EmptySet)
}

/// Vertices of `PW_n`: everything except the identity and `w_0`, sorted.
pub fn pw_vertices(n: usize) -> Result<Vec<Permutation>> {
    if n < 2 {
        return Err(Error::InvalidStrandCount { n, min: 2 });
    }
    Ok(Permutation::all(n)
        .filter(|p| !p.is_identity() && !p.is_longest())
        .collect())
}

pub fn check_pair(n: usize, i: usize, j: usize) -> Result<()> {
    if i < 1 || i >= j || j > n {
        return Err(Error::InvalidPair { i, j, n });
    }
    Ok(())
}

/// Vertices of `Rev_n(i, j)`: those of `PW_n` with `(i)σ > (j)σ`.
pub fn rev_vertices(n: usize, i: usize, j: usize) -> Result<Vec<Permutation>> {
    check_pair(n, i, j)?;
    Ok(pw_vertices(n)?
        .into_iter()
        .filter(|p| p.is_inverted(i, j))
        .collect())
}

pub fn minimal_vertices(vertices: &[Permutation]) -> Vec<Permutation> {
    vertices
        .iter()
        .filter(|v| !vertices.iter().any(|u| u != *v && u.weak_leq_same_n(v)))
        .cloned()
        .collect()
}

pub fn maximal_vertices(vertices: &[Permutation]) -> Vec<Permutation> {
    vertices
        .iter()
        .filter(|v| !vertices.iter().any(|u| u != *v && v.weak_leq_same_n(u)))
        .cloned()
        .collect()
}

/// Which bound decides whether a set of stars intersects.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum StarMode {
    /// Stars of minimal vertices; intersection governed by the join.
    Min,
    /// Stars of maximal vertices; intersection governed by the meet.
    Max,
}

const MAX_CENTERS: usize = 20;

/// Nerve of the cover by stars of `centers`: a set of centers spans a simplex
/// iff its join (`Min`) or meet (`Max`) lies in the ambient set.
pub fn nerve_of_stars(
    centers: &[Permutation],
    ambient: impl Fn(&Permutation) -> bool,
    mode: StarMode,
) -> Result<SimplicialComplex<Permutation>> {
    let k = centers.len();
    if k > MAX_CENTERS {
        return Err(Error::TooManyCenters(k));
    }
    common_n(centers)?;
    let mut faces = Vec::new();
    // the bound of a subset is the bound of (subset minus top element) with that element
    let mut bound: Vec<Option<Permutation>> = vec![None; 1 << k];
    for mask in 1usize..(1 << k) {
        let top = usize::BITS as usize - 1 - mask.leading_zeros() as usize;
        let rest = mask & !(1 << top);
        let b = match &bound[rest] {
            None => centers[top].clone(),
            Some(r) => {
                let pair = [r.clone(), centers[top].clone()];
                match mode {
                    StarMode::Min => join(&pair)?,
                    StarMode::Max => meet(&pair)?,
                }
            }
        };
        if ambient(&b) {
            faces.push((0..k).filter(|i| mask & (1 << i) != 0).collect::<Vec<_>>());
        }
        bound[mask] = Some(b);
    }
    Ok(SimplicialComplex::from_face_list(centers.to_vec(), faces))
}
