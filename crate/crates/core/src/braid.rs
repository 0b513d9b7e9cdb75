//! Braid words and their exact invariants.
//!
//! Strands are labelled `1..=n` at the top. A letter `+t` is the positive
//! crossing `s_t` of the strands at positions `t` and `t+1`; `-t` is its
//! inverse. Winding numbers are stored doubled so they stay integral.

use std::fmt;
use std::str::FromStr;

use serde::{Serialize, Serializer};

use crate::bruhat::Permutation;
use crate::error::{Error, Result};

#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct BraidWord {
    n: usize,
    letters: Vec<i32>,
}

impl BraidWord {
    pub fn new(n: usize, letters: Vec<i32>) -> Result<Self> {
        if n < 1 {
            return Err(Error::InvalidStrandCount { n, min: 1 });
        }
        for &l in &letters {
            if l == 0 || l.unsigned_abs() as usize >= n {
                return Err(Error::GeneratorOutOfRange { index: l as i64, n });
            }
        }
        Ok(Self { n, letters })
    }

    pub fn identity(n: usize) -> Result<Self> {
        Self::new(n, Vec::new())
    }

    /// `s_t` as a one-letter word.
    pub fn generator(n: usize, t: usize) -> Result<Self> {
        Self::new(n, vec![t as i32])
    }

    pub(crate) fn from_letters_unchecked(n: usize, letters: Vec<i32>) -> Self {
        debug_assert!(letters
            .iter()
            .all(|&l| l != 0 && (l.unsigned_abs() as usize) < n));
        Self { n, letters }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn letters(&self) -> &[i32] {
        &self.letters
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    pub fn is_positive(&self) -> bool {
        self.letters.iter().all(|&l| l > 0)
    }

    pub fn kappa(&self) -> i64 {
        self.letters.iter().map(|&l| l.signum() as i64).sum()
    }

    pub fn invariants(&self) -> BraidInvariants {
        invariants_of(self)
    }

    pub fn concat(&self, other: &Self) -> Result<Self> {
        concat(self, other)
    }

    pub fn inverse(&self) -> Self {
        inverse_word(self)
    }

    pub fn mirror(&self) -> Self {
        mirror(self)
    }

    /// Cancels adjacent `s_t s_t^{-1}` pairs until none remain.
    pub fn free_reduce(&self) -> Self {
        let mut out: Vec<i32> = Vec::with_capacity(self.letters.len());
        for &l in &self.letters {
            if out.last() == Some(&-l) {
                out.pop();
            } else {
                out.push(l);
            }
        }
        Self {
            n: self.n,
            letters: out,
        }
    }

    /// `x^k` for any integer `k`.
    pub fn pow(&self, k: i64) -> Self {
        let base = if k < 0 { self.inverse() } else { self.clone() };
        let letters = base.letters.repeat(k.unsigned_abs() as usize);
        Self { n: self.n, letters }
    }
}

impl fmt::Display for BraidWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let tokens: Vec<String> = self.letters.iter().map(|l| l.to_string()).collect();
        write!(f, "{}", tokens.join(" "))
    }
}

impl Serialize for BraidWord {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        #[derive(Serialize)]
        struct Repr<'a> {
            n: usize,
            letters: &'a [i32],
        }
        Repr {
            n: self.n,
            letters: &self.letters,
        }
        .serialize(serializer)
    }
}

fn parse_token(token: &str, n: usize) -> Result<i32> {
    let malformed = || Error::MalformedToken(token.to_string());
    let value: i64 = if let Some(rest) = token.strip_prefix('s') {
        let (index, inverted) = match rest.split_once('^') {
            None => (rest, false),
            Some((idx, "-1")) | Some((idx, "{-1}")) => (idx, true),
            Some((idx, "1")) => (idx, false),
            Some(_) => return Err(malformed()),
        };
        if index.is_empty() || !index.bytes().all(|b| b.is_ascii_digit()) {
            return Err(malformed());
        }
        let i: i64 = index.parse().map_err(|_| malformed())?;
        if inverted {
            -i
        } else {
            i
        }
    } else {
        i64::from_str(token).map_err(|_| malformed())?
    };
    if value == 0 || value.unsigned_abs() as usize >= n {
        return Err(Error::GeneratorOutOfRange { index: value, n });
    }
    Ok(value as i32)
}

/// Whitespace-separated letters: signed integers (`1 2 -1`) or
/// `s1 s2^-1` forms. No normalization is applied.
pub fn parse_braid_word(text: &str, n: usize) -> Result<BraidWord> {
    if n < 1 {
        return Err(Error::InvalidStrandCount { n, min: 1 });
    }
    let letters = text
        .split_whitespace()
        .map(|t| parse_token(t, n))
        .collect::<Result<Vec<_>>>()?;
    Ok(BraidWord { n, letters })
}

/// Symmetric matrix of doubled winding numbers `2ω_{i,j}`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct TwiceWindings {
    n: usize,
    entries: Vec<i64>,
}

impl TwiceWindings {
    fn zeros(n: usize) -> Self {
        Self {
            n,
            entries: vec![0; n * n],
        }
    }

    /// `2ω_{i,j}` for 1-based labels; symmetric, zero on the diagonal.
    pub fn get(&self, i: usize, j: usize) -> i64 {
        self.entries[(i - 1) * self.n + (j - 1)]
    }

    fn add(&mut self, i: usize, j: usize, v: i64) {
        self.entries[(i - 1) * self.n + (j - 1)] += v;
        self.entries[(j - 1) * self.n + (i - 1)] += v;
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// `(i, j, 2ω_{i,j})` over pairs `i < j`.
    pub fn pairs(&self) -> impl Iterator<Item = (usize, usize, i64)> + '_ {
        (1..=self.n).flat_map(move |i| (i + 1..=self.n).map(move |j| (i, j, self.get(i, j))))
    }

    pub fn rows(&self) -> Vec<Vec<i64>> {
        self.entries
            .chunks(self.n.max(1))
            .map(<[i64]>::to_vec)
            .take(self.n)
            .collect()
    }
}

impl Serialize for TwiceWindings {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        self.rows().serialize(serializer)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct BraidInvariants {
    pub perm: Permutation,
    pub kappa: i64,
    pub twice_windings: TwiceWindings,
}

/// Tracks the top labels through the word: each letter swaps the labels at
/// its two positions and adds its sign to their doubled winding number.
pub fn invariants_of(w: &BraidWord) -> BraidInvariants {
    let n = w.n;
    let mut order: Vec<usize> = (1..=n).collect();
    let mut tw = TwiceWindings::zeros(n);
    let mut kappa = 0i64;
    for &l in &w.letters {
        let t = l.unsigned_abs() as usize;
        let sign = l.signum() as i64;
        let (u, v) = (order[t - 1], order[t]);
        tw.add(u, v, sign);
        order.swap(t - 1, t);
        kappa += sign;
    }
    let perm = Permutation::from_bracket(&order).expect("strand order is a permutation");
    BraidInvariants {
        perm,
        kappa,
        twice_windings: tw,
    }
}

/// `Δ = s_1 ⋯ s_{n-1} s_1 ⋯ s_{n-2} ⋯ s_1`.
pub fn delta_word(n: usize) -> Result<BraidWord> {
    if n < 1 {
        return Err(Error::InvalidStrandCount { n, min: 1 });
    }
    let letters = (1..n).rev().flat_map(|top| 1..=top as i32).collect();
    Ok(BraidWord { n, letters })
}

pub fn mirror(w: &BraidWord) -> BraidWord {
    BraidWord {
        n: w.n,
        letters: w.letters.iter().map(|l| -l).collect(),
    }
}

pub fn concat(x: &BraidWord, y: &BraidWord) -> Result<BraidWord> {
    if x.n != y.n {
        return Err(Error::StrandMismatch {
            left: x.n,
            right: y.n,
        });
    }
    let mut letters = x.letters.clone();
    letters.extend_from_slice(&y.letters);
    Ok(BraidWord { n: x.n, letters })
}

pub fn inverse_word(x: &BraidWord) -> BraidWord {
    BraidWord {
        n: x.n,
        letters: x.letters.iter().rev().map(|l| -l).collect(),
    }
}

/// Erases every strand whose top label is not in `keep`. The result lives on
/// `|keep|` strands, relabelled in increasing order; a crossing survives
/// exactly when both of its strands are kept.
pub fn erase_strands(w: &BraidWord, keep: &[usize]) -> Result<BraidWord> {
    if keep.is_empty() {
        return Err(Error::EmptyLabelSet);
    }
    let mut kept = vec![false; w.n + 1];
    for &a in keep {
        if a == 0 || a > w.n {
            return Err(Error::LabelOutOfRange { label: a, n: w.n });
        }
        kept[a] = true;
    }
    let m = kept.iter().filter(|&&k| k).count();
    let mut order: Vec<usize> = (1..=w.n).collect();
    let mut letters = Vec::new();
    for &l in &w.letters {
        let t = l.unsigned_abs() as usize;
        if kept[order[t - 1]] && kept[order[t]] {
            let rank = order[..t].iter().filter(|&&lab| kept[lab]).count();
            letters.push(l.signum() * rank as i32);
        }
        order.swap(t - 1, t);
    }
    Ok(BraidWord { n: m, letters })
}
