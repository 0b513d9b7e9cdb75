use std::collections::BTreeSet;
use std::fmt;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};

/// An element of `S_n` in bracket notation `[k_1, ..., k_n]`.
///
/// `k_j` is the label of the strand that ends at position `j`, so the right
/// action is `(i)σ = j` exactly when `k_j = i`. Composition `σ.then(τ)` applies
/// `σ` first.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Permutation {
    // 0-based label sitting at each position
    labels: Vec<u8>,
    // 0-based position of each label
    positions: Vec<u8>,
}

impl Permutation {
    pub fn identity(n: usize) -> Self {
        let labels: Vec<u8> = (0..n as u8).collect();
        Self {
            positions: labels.clone(),
            labels,
        }
    }

    /// The longest element `w_0 = [n, ..., 1]`.
    pub fn longest(n: usize) -> Self {
        let labels: Vec<u8> = (0..n as u8).rev().collect();
        Self {
            positions: labels.clone(),
            labels,
        }
    }

    pub fn from_bracket(bracket: &[usize]) -> Result<Self> {
        let n = bracket.len();
        if n > u8::MAX as usize {
            return Err(Error::InvalidPermutation(format!("{bracket:?}")));
        }
        let mut positions = vec![u8::MAX; n];
        for (pos, &label) in bracket.iter().enumerate() {
            if label == 0 || label > n || positions[label - 1] != u8::MAX {
                return Err(Error::InvalidPermutation(format!("{bracket:?}")));
            }
            positions[label - 1] = pos as u8;
        }
        let labels = bracket.iter().map(|&k| (k - 1) as u8).collect();
        Ok(Self { labels, positions })
    }

    fn from_labels(labels: Vec<u8>) -> Self {
        let mut positions = vec![0u8; labels.len()];
        for (pos, &l) in labels.iter().enumerate() {
            positions[l as usize] = pos as u8;
        }
        Self { labels, positions }
    }

    fn from_positions(positions: Vec<u8>) -> Self {
        let mut labels = vec![0u8; positions.len()];
        for (label, &p) in positions.iter().enumerate() {
            labels[p as usize] = label as u8;
        }
        Self { labels, positions }
    }

    /// Parses `[2,3,1]`, `2,3,1` or `2 3 1`.
    pub fn parse(text: &str) -> Result<Self> {
        let inner = text.trim().trim_start_matches('[').trim_end_matches(']');
        let bracket = inner
            .split(|c: char| c == ',' || c.is_whitespace())
            .filter(|t| !t.is_empty())
            .map(|t| {
                t.parse::<usize>()
                    .map_err(|_| Error::InvalidPermutation(text.to_string()))
            })
            .collect::<Result<Vec<_>>>()?;
        Self::from_bracket(&bracket)
    }

    pub fn n(&self) -> usize {
        self.labels.len()
    }

    pub fn bracket(&self) -> Vec<usize> {
        self.labels.iter().map(|&l| l as usize + 1).collect()
    }

    /// `(i)σ`: the final position of the strand labelled `i` (1-based).
    pub fn image(&self, i: usize) -> usize {
        self.positions[i - 1] as usize + 1
    }

    /// Label at 1-based position `j`, i.e. `k_j`.
    pub fn label_at(&self, j: usize) -> usize {
        self.labels[j - 1] as usize + 1
    }

    pub fn is_identity(&self) -> bool {
        self.labels
            .iter()
            .enumerate()
            .all(|(p, &l)| p == l as usize)
    }

    pub fn is_longest(&self) -> bool {
        let n = self.n();
        self.labels
            .iter()
            .enumerate()
            .all(|(p, &l)| p + l as usize + 1 == n)
    }

    /// `σ` followed by `τ`: `(i)(στ) = ((i)σ)τ`.
    pub fn then(&self, other: &Self) -> Self {
        debug_assert_eq!(self.n(), other.n());
        let positions = self
            .positions
            .iter()
            .map(|&p| other.positions[p as usize])
            .collect();
        Self::from_positions(positions)
    }

    pub fn inverse(&self) -> Self {
        Self::from_labels(self.positions.clone())
    }

    /// `σ · s_t`: exchange the strands at positions `t` and `t+1` (1-based).
    pub fn times_generator(&self, t: usize) -> Self {
        let mut labels = self.labels.clone();
        labels.swap(t - 1, t);
        Self::from_labels(labels)
    }

    /// `s_t · σ`: exchange the roles of labels `t` and `t+1` (1-based).
    pub fn generator_times(&self, t: usize) -> Self {
        let mut positions = self.positions.clone();
        positions.swap(t - 1, t);
        Self::from_positions(positions)
    }

    /// `w_0 σ w_0`, the image under `s_i ↦ s_{n-i}`.
    pub fn flip(&self) -> Self {
        let n = self.n() as u8;
        let labels = self.labels.iter().rev().map(|&l| n - 1 - l).collect();
        Self::from_labels(labels)
    }

    /// True when `(i)σ > (j)σ`.
    pub fn is_inverted(&self, i: usize, j: usize) -> bool {
        self.positions[i - 1] > self.positions[j - 1]
    }

    pub fn inversion_set(&self) -> InversionSet {
        let n = self.n();
        let mut pairs = BTreeSet::new();
        for i in 1..=n {
            for j in i + 1..=n {
                if self.is_inverted(i, j) {
                    pairs.insert((i, j));
                }
            }
        }
        InversionSet(pairs)
    }

    pub fn coxeter_length(&self) -> usize {
        let p = &self.positions;
        let mut len = 0;
        for i in 0..p.len() {
            for j in i + 1..p.len() {
                if p[i] > p[j] {
                    len += 1;
                }
            }
        }
        len
    }

    /// Generators `t` with `ℓ(σ s_t) < ℓ(σ)`.
    pub fn right_descents(&self) -> impl Iterator<Item = usize> + '_ {
        self.labels
            .windows(2)
            .enumerate()
            .filter(|(_, w)| w[0] > w[1])
            .map(|(t, _)| t + 1)
    }

    /// Generators `t` with `ℓ(s_t σ) < ℓ(σ)`.
    pub fn left_descents(&self) -> impl Iterator<Item = usize> + '_ {
        self.positions
            .windows(2)
            .enumerate()
            .filter(|(_, w)| w[0] > w[1])
            .map(|(t, _)| t + 1)
    }

    pub fn has_right_descent(&self, t: usize) -> bool {
        self.labels[t - 1] > self.labels[t]
    }

    pub fn has_left_descent(&self, t: usize) -> bool {
        self.positions[t - 1] > self.positions[t]
    }

    /// Weak order comparison without a strand-count check.
    pub(crate) fn weak_leq_same_n(&self, other: &Self) -> bool {
        let (p, q) = (&self.positions, &other.positions);
        for i in 0..p.len() {
            for j in i + 1..p.len() {
                if p[i] > p[j] && q[i] < q[j] {
                    return false;
                }
            }
        }
        true
    }

    /// All of `S_n` in lexicographic bracket order.
    pub fn all(n: usize) -> AllPermutations {
        AllPermutations {
            next: Some((0..n as u8).collect()),
        }
    }
}

/// Lexicographic enumeration of `S_n`.
pub struct AllPermutations {
    next: Option<Vec<u8>>,
}

impl Iterator for AllPermutations {
    type Item = Permutation;

    fn next(&mut self) -> Option<Permutation> {
        let current = self.next.take()?;
        let mut a = current.clone();
        // standard next-permutation step
        if a.len() > 1 {
            if let Some(i) = (0..a.len() - 1).rev().find(|&i| a[i] < a[i + 1]) {
                let j = (i + 1..a.len()).rev().find(|&j| a[j] > a[i]).unwrap();
                a.swap(i, j);
                a[i + 1..].reverse();
                self.next = Some(a);
            }
        }
        Some(Permutation::from_labels(current))
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for (idx, l) in self.labels.iter().enumerate() {
            if idx > 0 {
                write!(f, ",")?;
            }
            write!(f, "{}", l + 1)?;
        }
        write!(f, "]")
    }
}

impl fmt::Debug for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl Serialize for Permutation {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        self.bracket().serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for Permutation {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let bracket = Vec::<usize>::deserialize(deserializer)?;
        Permutation::from_bracket(&bracket).map_err(serde::de::Error::custom)
    }
}

/// Pairs `i < j` with `(i)σ > (j)σ`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct InversionSet(pub BTreeSet<(usize, usize)>);

impl InversionSet {
    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn contains(&self, i: usize, j: usize) -> bool {
        self.0.contains(&(i.min(j), i.max(j)))
    }

    pub fn is_subset(&self, other: &Self) -> bool {
        self.0.is_subset(&other.0)
    }

    pub fn iter(&self) -> impl Iterator<Item = &(usize, usize)> {
        self.0.iter()
    }
}
