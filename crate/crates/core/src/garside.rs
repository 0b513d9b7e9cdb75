//! Garside structure of `B_n`: permutation braids, left-greedy normal form,
//! and the prefix order it decides.
//!
//! A braid is written `Δ^inf · p_1 ⋯ p_k` where each `p_t` is a permutation
//! braid strictly between `1` and `Δ`, and every adjacent pair is
//! left-weighted: each generator that left-divides `p_{t+1}` already
//! right-divides `p_t`. All factor arithmetic is done on permutations through
//! descent sets; no word rewriting is involved.

use std::fmt;

use serde::Serialize;

use crate::braid::{concat, delta_word, inverse_word, BraidWord};
use crate::bruhat::Permutation;
use crate::error::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct NormalForm {
    pub n: usize,
    pub inf: i64,
    pub factors: Vec<Permutation>,
}

impl NormalForm {
    pub fn identity(n: usize) -> Self {
        Self {
            n,
            inf: 0,
            factors: Vec::new(),
        }
    }

    /// `inf + k`, the smallest `m` with `x ≤ Δ^m`.
    pub fn sup(&self) -> i64 {
        self.inf + self.factors.len() as i64
    }

    pub fn is_positive(&self) -> bool {
        self.inf >= 0
    }

    /// A word for the braid: `Δ^inf` followed by the canonical word of each factor.
    pub fn to_word(&self) -> BraidWord {
        let delta = delta_word(self.n).expect("n >= 1");
        let mut letters = delta.pow(self.inf).letters().to_vec();
        for f in &self.factors {
            letters.extend_from_slice(perm_braid_word(f).letters());
        }
        BraidWord::from_letters_unchecked(self.n, letters)
    }

    /// Checks the structural invariants: proper factors, left-weighted pairs.
    pub fn is_valid(&self) -> bool {
        self.factors
            .iter()
            .all(|f| f.n() == self.n && !f.is_identity() && !f.is_longest())
            && self
                .factors
                .windows(2)
                .all(|w| is_left_weighted(&w[0], &w[1]))
    }
}

impl fmt::Display for NormalForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Δ^{}", self.inf)?;
        for p in &self.factors {
            write!(f, " · {p}")?;
        }
        Ok(())
    }
}

/// True when every generator left-dividing `b` right-divides `a`.
pub fn is_left_weighted(a: &Permutation, b: &Permutation) -> bool {
    b.left_descents().all(|t| a.has_right_descent(t))
}

/// Moves generators from the front of `b` to the back of `a` until the pair
/// is left-weighted. Returns whether anything moved.
fn make_left_weighted(a: &mut Permutation, b: &mut Permutation) -> bool {
    let mut moved = false;
    loop {
        let Some(t) = b.left_descents().find(|&t| !a.has_right_descent(t)) else {
            break;
        };
        *a = a.times_generator(t);
        *b = b.generator_times(t);
        moved = true;
    }
    moved
}

struct Builder {
    n: usize,
    inf: i64,
    factors: Vec<Permutation>,
}

impl Builder {
    fn new(n: usize) -> Self {
        Self {
            n,
            inf: 0,
            factors: Vec::new(),
        }
    }

    fn push_factor(&mut self, p: Permutation) {
        if p.is_identity() {
            return;
        }
        self.factors.push(p);
        let mut t = self.factors.len() - 1;
        while t > 0 {
            let (head, tail) = self.factors.split_at_mut(t);
            if !make_left_weighted(&mut head[t - 1], &mut tail[0]) {
                break;
            }
            t -= 1;
        }
        let leading = self.factors.iter().take_while(|f| f.is_longest()).count();
        if leading > 0 {
            self.factors.drain(..leading);
            self.inf += leading as i64;
        }
        while self.factors.last().is_some_and(Permutation::is_identity) {
            self.factors.pop();
        }
    }

    /// Right multiplication by `Δ^{-1}`: conjugating each factor by `Δ` lets
    /// the inverse slide to the front.
    fn push_delta_inverse(&mut self) {
        self.inf -= 1;
        for f in self.factors.iter_mut() {
            *f = f.flip();
        }
    }

    fn push_letter(&mut self, letter: i32) {
        let t = letter.unsigned_abs() as usize;
        if letter > 0 {
            self.push_factor(Permutation::identity(self.n).times_generator(t));
        } else {
            // s_t^{-1} = Δ^{-1} · (Δ s_t^{-1}), and Δ s_t^{-1} has permutation w_0 s_t
            self.push_delta_inverse();
            self.push_factor(Permutation::longest(self.n).times_generator(t));
        }
    }

    fn finish(self) -> NormalForm {
        NormalForm {
            n: self.n,
            inf: self.inf,
            factors: self.factors,
        }
    }
}

/// The canonical positive word of a permutation braid: repeatedly strip the
/// smallest left descent.
pub fn perm_braid_word(sigma: &Permutation) -> BraidWord {
    let mut rest = sigma.clone();
    let mut letters = Vec::with_capacity(sigma.coxeter_length());
    loop {
        let Some(t) = rest.left_descents().next() else {
            break;
        };
        letters.push(t as i32);
        rest = rest.generator_times(t);
    }
    BraidWord::from_letters_unchecked(sigma.n(), letters)
}

/// Left-greedy normal form of any braid word.
pub fn normal_form(w: &BraidWord) -> NormalForm {
    let mut b = Builder::new(w.n());
    for &l in w.letters() {
        b.push_letter(l);
    }
    b.finish()
}

/// `p ∧ Δ` for a positive word `p`, returned as a permutation.
pub fn gcd_with_delta(p: &BraidWord) -> Result<Permutation> {
    if !p.is_positive() {
        return Err(Error::NonPositiveWord);
    }
    let nf = normal_form(p);
    Ok(if nf.inf > 0 {
        Permutation::longest(p.n())
    } else {
        nf.factors
            .first()
            .cloned()
            .unwrap_or_else(|| Permutation::identity(p.n()))
    })
}

fn same_n(x: &BraidWord, y: &BraidWord) -> Result<()> {
    if x.n() != y.n() {
        return Err(Error::StrandMismatch {
            left: x.n(),
            right: y.n(),
        });
    }
    Ok(())
}

pub fn braids_equal(x: &BraidWord, y: &BraidWord) -> Result<bool> {
    same_n(x, y)?;
    Ok(normal_form(x) == normal_form(y))
}

/// `x ≤ y` iff `x^{-1} y` is a positive braid.
pub fn prefix_leq(x: &BraidWord, y: &BraidWord) -> Result<bool> {
    same_n(x, y)?;
    Ok(normal_form(&concat(&inverse_word(x), y)?).is_positive())
}

/// `x ⪯ y` iff `x ≤ y ≤ xΔ`.
pub fn sandwich(x: &BraidWord, y: &BraidWord) -> Result<bool> {
    same_n(x, y)?;
    let x_delta = concat(x, &delta_word(x.n())?)?;
    Ok(prefix_leq(x, y)? && prefix_leq(y, &x_delta)?)
}
