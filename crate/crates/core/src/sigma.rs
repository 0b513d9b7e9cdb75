//! Characters of the pure braid group viewed as height functions on `B_n`,
//! and the ascending links of the Morse function `(χ, κ̇)`.
//!
//! A character is `χ = Σ a_{i,j} ω_{i,j}`. On a braid `x` followed by `y`,
//! `χ(xy) = χ(x) + χ^x(y)` where `χ^x` relabels the pair `{i, j}` as
//! `{(i)π(x), (j)π(x)}`. Because `χ(xΔ) = χ(x) + χ(Δ)`, only characters with
//! `χ(Δ) = 0` have ascending links worth computing, and then the positive
//! ascending link of `x` depends only on `χ^x` and `κ(x)`.

use std::cmp::Ordering;
use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::ops::Neg;

use rayon::prelude::*;
use serde::{Serialize, Serializer};

use crate::braid::BraidWord;
use crate::bruhat::{pw_vertices, Permutation};
use crate::error::{Error, Result};
use crate::homology::{order_complex, reduced_homology, ComplexHomology, HomologyProfile};
use crate::scalar::Coefficient;

#[derive(Clone, Debug, PartialEq)]
pub struct Character<S> {
    n: usize,
    // nonzero coefficients keyed by (i, j) with i < j
    coefficients: BTreeMap<(usize, usize), S>,
}

fn ordered_pair(n: usize, i: usize, j: usize) -> Result<(usize, usize)> {
    let (a, b) = (i.min(j), i.max(j));
    if a < 1 || a == b || b > n {
        return Err(Error::InvalidPair { i, j, n });
    }
    Ok((a, b))
}

impl<S: Coefficient> Character<S> {
    pub fn zero(n: usize) -> Self {
        Self {
            n,
            coefficients: BTreeMap::new(),
        }
    }

    /// Builds `Σ c ω_{i,j}`; `(i, j)` and `(j, i)` name the same character and
    /// repeated pairs accumulate.
    pub fn new(n: usize, terms: impl IntoIterator<Item = ((usize, usize), S)>) -> Result<Self> {
        let mut chi = Self::zero(n);
        for ((i, j), c) in terms {
            chi.add_term(i, j, c)?;
        }
        Ok(chi)
    }

    /// The winding number character `ω_{i,j}`.
    pub fn omega(n: usize, i: usize, j: usize) -> Result<Self> {
        Self::new(n, [((i, j), S::one())])
    }

    fn add_term(&mut self, i: usize, j: usize, c: S) -> Result<()> {
        let key = ordered_pair(self.n, i, j)?;
        let sum = self.coefficient(key.0, key.1) + c;
        if sum.is_zero() {
            self.coefficients.remove(&key);
        } else {
            self.coefficients.insert(key, sum);
        }
        Ok(())
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn coefficient(&self, i: usize, j: usize) -> S {
        self.coefficients
            .get(&(i.min(j), i.max(j)))
            .cloned()
            .unwrap_or_else(S::zero)
    }

    /// Nonzero coefficients, keyed by `(i, j)` with `i < j`.
    pub fn terms(&self) -> impl Iterator<Item = (&(usize, usize), &S)> {
        self.coefficients.iter()
    }

    /// Every pair `i < j`, zeros included.
    pub fn all_coefficients(&self) -> Vec<((usize, usize), S)> {
        let n = self.n;
        (1..=n)
            .flat_map(|i| (i + 1..=n).map(move |j| (i, j)))
            .map(|(i, j)| ((i, j), self.coefficient(i, j)))
            .collect()
    }

    pub fn is_zero(&self) -> bool {
        self.coefficients.is_empty()
    }

    pub fn coefficient_sum(&self) -> S {
        self.coefficients
            .values()
            .fold(S::zero(), |acc, c| acc + c.clone())
    }

    /// `χ(Δ) = ½ Σ a_{i,j}`, since every pair winds half a turn in `Δ`.
    pub fn delta_value(&self) -> S {
        self.coefficient_sum().half()
    }

    fn check_n(&self, n: usize) -> Result<()> {
        if n != self.n {
            return Err(Error::StrandMismatch {
                left: self.n,
                right: n,
            });
        }
        Ok(())
    }

    /// `χ(x) = Σ a_{i,j} ω_{i,j}(x)` with windings read from top labels.
    pub fn eval_on_braid(&self, w: &BraidWord) -> Result<S> {
        self.check_n(w.n())?;
        let tw = w.invariants().twice_windings;
        let doubled = self
            .coefficients
            .iter()
            .fold(S::zero(), |acc, ((i, j), c)| {
                acc + c.clone() * S::from_int(tw.get(*i, *j))
            });
        Ok(doubled.half())
    }

    /// Value on the permutation braid of `tau`: half the coefficients over
    /// its inversions.
    pub fn eval_on_perm(&self, tau: &Permutation) -> Result<S> {
        self.check_n(tau.n())?;
        Ok(self.eval_on_perm_unchecked(tau))
    }

    fn eval_on_perm_unchecked(&self, tau: &Permutation) -> S {
        self.coefficients
            .iter()
            .filter(|((i, j), _)| tau.is_inverted(*i, *j))
            .fold(S::zero(), |acc, (_, c)| acc + c.clone())
            .half()
    }

    /// `χ^x` for any `x` with `π(x) = sigma`.
    pub fn twist(&self, sigma: &Permutation) -> Result<Self> {
        self.check_n(sigma.n())?;
        let coefficients = self
            .coefficients
            .iter()
            .map(|((i, j), c)| {
                let (a, b) = (sigma.image(*i), sigma.image(*j));
                ((a.min(b), a.max(b)), c.clone())
            })
            .collect();
        Ok(Self {
            n: self.n,
            coefficients,
        })
    }
}

impl<S: Coefficient> Neg for Character<S> {
    type Output = Self;

    fn neg(self) -> Self {
        let coefficients = self
            .coefficients
            .into_iter()
            .map(|(k, c)| (k, -c))
            .collect();
        Self {
            n: self.n,
            coefficients,
        }
    }
}

impl<S: Coefficient> fmt::Display for Character<S> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        for (idx, ((i, j), c)) in self.coefficients.iter().enumerate() {
            let negative = c.is_negative();
            match (idx, negative) {
                (0, true) => write!(f, "-")?,
                (0, false) => {}
                (_, true) => write!(f, " - ")?,
                (_, false) => write!(f, " + ")?,
            }
            let magnitude = c.abs();
            if magnitude.is_one() {
                write!(f, "w[{i},{j}]")?;
            } else {
                write!(f, "{magnitude}*w[{i},{j}]")?;
            }
        }
        Ok(())
    }
}

impl<S: Coefficient> Serialize for Character<S> {
    fn serialize<Z: Serializer>(&self, serializer: Z) -> std::result::Result<Z::Ok, Z::Error> {
        #[derive(Serialize)]
        struct Repr {
            n: usize,
            text: String,
            coefficients: BTreeMap<String, String>,
            delta_value: String,
        }
        Repr {
            n: self.n,
            text: self.to_string(),
            coefficients: self
                .coefficients
                .iter()
                .map(|((i, j), c)| (format!("{i},{j}"), c.to_string()))
                .collect(),
            delta_value: self.delta_value().to_string(),
        }
        .serialize(serializer)
    }
}

/// `χ^m_n`: `+1` on every pair inside `{1..m}` except `(1,2)`, which carries
/// `-(C(m,2) - 1)` so that the coefficients sum to zero.
pub fn chi_m_n<S: Coefficient>(m: usize, n: usize) -> Result<Character<S>> {
    if m < 3 || m > n {
        return Err(Error::InvalidCharacterParams { m, n });
    }
    let pairs = m * (m - 1) / 2;
    let mut terms = vec![((1, 2), -S::from_int(pairs as i64 - 1))];
    for i in 1..=m {
        for j in i + 1..=m {
            if (i, j) != (1, 2) {
                terms.push(((i, j), S::one()));
            }
        }
    }
    Character::new(n, terms)
}

/// Splits at top-level `+`/`-` signs, keeping the sign with each term.
fn split_terms(text: &str) -> Vec<(bool, String)> {
    let mut terms = Vec::new();
    let mut current = String::new();
    let mut negative = false;
    let mut depth = 0i32;
    for ch in text.chars().filter(|c| !c.is_whitespace()) {
        match ch {
            '[' | '(' => depth += 1,
            ']' | ')' => depth -= 1,
            _ => {}
        }
        if depth == 0 && (ch == '+' || ch == '-') && !current.ends_with(['*', '/']) {
            if !current.is_empty() {
                terms.push((negative, std::mem::take(&mut current)));
                negative = false;
            }
            if ch == '-' {
                negative = !negative;
            }
            continue;
        }
        current.push(ch);
    }
    if !current.is_empty() || negative {
        terms.push((negative, current));
    }
    terms
}

fn parse_indices(inner: &str, whole: &str) -> Result<Vec<usize>> {
    inner
        .split(',')
        .map(|t| {
            t.parse::<usize>()
                .map_err(|_| Error::MalformedCharacter(whole.to_string()))
        })
        .collect()
}

/// Parses sums of terms `c*w[i,j]`, with `c` optional (default 1). A term
/// may also be `chi(m)` or `chi(m,n)`, expanding to `χ^m_n`.
pub fn parse_character<S: Coefficient>(text: &str, n: usize) -> Result<Character<S>> {
    let mut chi = Character::zero(n);
    if text.trim() == "0" {
        return Ok(chi);
    }
    for (negative, body) in split_terms(text) {
        let malformed = || Error::MalformedCharacter(body.clone());
        let (coef_text, atom) = match (body.find("w["), body.find("chi(")) {
            (Some(p), _) | (None, Some(p)) => (&body[..p], &body[p..]),
            (None, None) => return Err(malformed()),
        };
        let coef_text = coef_text.strip_suffix('*').unwrap_or(coef_text);
        let mut coef = if coef_text.is_empty() {
            S::one()
        } else {
            coef_text.parse::<S>().map_err(|_| malformed())?
        };
        if negative {
            coef = -coef;
        }
        if let Some(inner) = atom.strip_prefix("w[").and_then(|a| a.strip_suffix(']')) {
            match parse_indices(inner, &body)?.as_slice() {
                [i, j] => chi.add_term(*i, *j, coef)?,
                _ => return Err(malformed()),
            }
        } else if let Some(inner) = atom.strip_prefix("chi(").and_then(|a| a.strip_suffix(')')) {
            let (m, target) = match parse_indices(inner, &body)?.as_slice() {
                [m] => (*m, n),
                [m, k] => (*m, *k),
                _ => return Err(malformed()),
            };
            if target != n {
                return Err(Error::StrandMismatch {
                    left: n,
                    right: target,
                });
            }
            for ((i, j), c) in chi_m_n::<S>(m, n)?.coefficients {
                chi.add_term(i, j, coef.clone() * c)?;
            }
        } else {
            return Err(malformed());
        }
    }
    Ok(chi)
}

/// Smallest strand count the character text can live on, if it names any
/// strands at all.
pub fn strand_count_hint(text: &str) -> Option<usize> {
    let mut best: Option<usize> = None;
    let mut bump = |v: usize| best = Some(best.map_or(v, |b| b.max(v)));
    for (_, body) in split_terms(text) {
        if let Some(p) = body.find("w[") {
            if let Some(inner) = body[p + 2..].strip_suffix(']') {
                inner
                    .split(',')
                    .filter_map(|t| t.parse().ok())
                    .for_each(&mut bump);
            }
        } else if let Some(p) = body.find("chi(") {
            if let Some(inner) = body[p + 4..].strip_suffix(')') {
                if let Some(v) = inner.split(',').filter_map(|t| t.parse().ok()).next_back() {
                    bump(v);
                }
            }
        }
    }
    best
}

/// `a ⋖ b` in `⋯ ⋖ 3 ⋖ 2 ⋖ 1 ⋖ ⋯ ⋖ -2 ⋖ -1 ⋖ 0`: positives lie below every
/// non-positive and run backwards; non-positives keep their usual order.
pub fn kdot_less(a: i64, b: i64) -> bool {
    kdot_cmp(a, b) == Ordering::Less
}

pub fn kdot_cmp(a: i64, b: i64) -> Ordering {
    let key = |v: i64| if v > 0 { (0, -v) } else { (1, v) };
    key(a).cmp(&key(b))
}

/// Parameters of a positive ascending link: the twisted character `χ^x`
/// depends on `σ = π(x)`, and `k = -κ(x)` bounds the flat vertices.
#[derive(Clone, Debug, PartialEq)]
pub struct AscendingLinkSpec<S> {
    chi: Character<S>,
    sigma: Permutation,
    k: usize,
}

impl<S: Coefficient> AscendingLinkSpec<S> {
    pub fn new(chi: Character<S>, sigma: Permutation, k: usize) -> Result<Self> {
        chi.check_n(sigma.n())?;
        let delta = chi.delta_value();
        if !delta.is_zero() {
            return Err(Error::NonzeroDeltaValue(delta.to_string()));
        }
        let bound = chi.n * (chi.n - 1) / 2;
        if k >= bound {
            return Err(Error::KOutOfRange { k, bound });
        }
        Ok(Self { chi, sigma, k })
    }

    pub fn chi(&self) -> &Character<S> {
        &self.chi
    }

    pub fn sigma(&self) -> &Permutation {
        &self.sigma
    }

    pub fn k(&self) -> usize {
        self.k
    }
}

/// Vertices of `PW_n` that are ascending from `x`: `χ^x(τ) > 0`, or
/// `χ^x(τ) = 0` with `ℓ(τ) <= k`. Sorted by bracket.
pub fn ascending_link_vertices<S: Coefficient>(spec: &AscendingLinkSpec<S>) -> Vec<Permutation> {
    let twisted = spec
        .chi
        .twist(&spec.sigma)
        .expect("strand counts checked at construction");
    pw_vertices(spec.chi.n)
        .expect("n >= 2")
        .into_iter()
        .filter(|tau| {
            let v = twisted.eval_on_perm_unchecked(tau);
            v.is_positive() || (v.is_zero() && tau.coxeter_length() <= spec.k)
        })
        .collect()
}

/// Where the ascending link of a braid vertex `x` sits.
#[derive(Clone, Debug, PartialEq)]
pub enum LinkRegime<S> {
    /// `κ(x) > 0`: the link deformation retracts to a cone on `xΔ^{-1}`.
    PeelsDown,
    /// `κ(xΔ) <= 0`: the positive ascending link is a cone on `xΔ`.
    ConeOnDelta,
    /// `κ(x) <= 0 < κ(xΔ)`: the link is the positive ascending link below.
    Positive(AscendingLinkSpec<S>),
}

impl<S> LinkRegime<S> {
    pub fn is_contractible_without_computation(&self) -> bool {
        !matches!(self, LinkRegime::Positive(_))
    }
}

/// Classifies the ascending link at the vertex `x` of the Garside complex.
pub fn link_regime<S: Coefficient>(chi: &Character<S>, x: &BraidWord) -> Result<LinkRegime<S>> {
    chi.check_n(x.n())?;
    let delta = chi.delta_value();
    if !delta.is_zero() {
        return Err(Error::NonzeroDeltaValue(delta.to_string()));
    }
    let inv = x.invariants();
    let delta_len = (x.n() * (x.n() - 1) / 2) as i64;
    if inv.kappa > 0 {
        Ok(LinkRegime::PeelsDown)
    } else if inv.kappa + delta_len <= 0 {
        Ok(LinkRegime::ConeOnDelta)
    } else {
        let spec = AscendingLinkSpec::new(chi.clone(), inv.perm, (-inv.kappa) as usize)?;
        Ok(LinkRegime::Positive(spec))
    }
}

/// Outcome of the one-positive-coefficient test.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct OnePositive {
    /// The pair carrying the lone positive coefficient (after negation when
    /// `antipode` is set).
    pub pair: (usize, usize),
    /// True when the lone sign was negative and `-χ` was used.
    pub antipode: bool,
    pub has_zero_coefficients: bool,
    /// No proper nonempty subset of the nonzero coefficients sums to zero.
    /// `None` when there are too many coefficients to enumerate.
    pub generic: Option<bool>,
}

impl OnePositive {
    /// All hypotheses hold: no zero coefficients and no vanishing sub-sums.
    pub fn strict(&self) -> bool {
        !self.has_zero_coefficients && self.generic == Some(true)
    }
}

const MAX_SUBSET_TERMS: usize = 20;

pub fn one_positive_pair<S: Coefficient>(chi: &Character<S>) -> Option<OnePositive> {
    if chi.is_zero() || !chi.coefficient_sum().is_zero() {
        return None;
    }
    let all = chi.all_coefficients();
    let positives: Vec<_> = all.iter().filter(|(_, c)| c.is_positive()).collect();
    let negatives: Vec<_> = all.iter().filter(|(_, c)| c.is_negative()).collect();
    let (pair, antipode) = match (positives.as_slice(), negatives.as_slice()) {
        ([only], _) => (only.0, false),
        (_, [only]) => (only.0, true),
        _ => return None,
    };
    let nonzero: Vec<S> = chi.coefficients.values().cloned().collect();
    let generic = (nonzero.len() <= MAX_SUBSET_TERMS).then(|| {
        let full = (1u32 << nonzero.len()) - 1;
        (1..full).all(|mask| {
            let sum = (0..nonzero.len())
                .filter(|b| mask & (1 << b) != 0)
                .fold(S::zero(), |acc, b| acc + nonzero[b].clone());
            !sum.is_zero()
        })
    });
    Some(OnePositive {
        pair,
        antipode,
        has_zero_coefficients: all.iter().any(|(_, c)| c.is_zero()),
        generic,
    })
}

#[derive(Clone, Debug, Default)]
pub struct ClassifyOptions {
    /// Defaults to every `k` in `0..n(n-1)/2`.
    pub k_values: Option<Vec<usize>>,
    /// Defaults to all of `S_n`.
    pub sigma_subset: Option<Vec<Permutation>>,
    pub max_degree: Option<usize>,
    /// Worker threads; the global pool is used when unset.
    pub jobs: Option<usize>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CellKey {
    pub sigma: Permutation,
    pub k: usize,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct LinkCell {
    pub sigma: Permutation,
    pub k: usize,
    pub vertex_count: usize,
    pub profile: ComplexHomology,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ProfileClass {
    pub profile: HomologyProfile,
    pub label: String,
    pub count: usize,
    pub representative: CellKey,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ClassificationReport {
    pub character: String,
    pub n: usize,
    pub cells: Vec<LinkCell>,
    pub profiles: Vec<ProfileClass>,
}

impl ClassificationReport {
    pub fn class(&self, profile: &HomologyProfile) -> Option<&ProfileClass> {
        self.profiles.iter().find(|c| &c.profile == profile)
    }
}

/// Sweeps `(σ, k)` cells, computing the reduced homology of each positive
/// ascending link. Cells with identical vertex sets share one computation;
/// output order is by `σ` bracket, then `k`, independent of scheduling.
pub fn classify_links<S: Coefficient>(
    chi: &Character<S>,
    options: &ClassifyOptions,
) -> Result<ClassificationReport> {
    if chi.is_zero() {
        return Err(Error::TrivialCharacter);
    }
    let delta = chi.delta_value();
    if !delta.is_zero() {
        return Err(Error::NonzeroDeltaValue(delta.to_string()));
    }
    let n = chi.n;
    let bound = n * (n - 1) / 2;
    let k_values = options
        .k_values
        .clone()
        .unwrap_or_else(|| (0..bound).collect());
    let mut sigmas = options
        .sigma_subset
        .clone()
        .unwrap_or_else(|| Permutation::all(n).collect());
    sigmas.sort();
    sigmas.dedup();

    let mut keys = Vec::new();
    for sigma in &sigmas {
        let mut ks = k_values.clone();
        ks.sort_unstable();
        ks.dedup();
        for k in ks {
            keys.push(AscendingLinkSpec::new(chi.clone(), sigma.clone(), k)?);
        }
    }

    let vertex_sets: Vec<Vec<Permutation>> = keys.iter().map(ascending_link_vertices).collect();
    let mut distinct: Vec<&Vec<Permutation>> = vertex_sets.iter().collect();
    distinct.sort();
    distinct.dedup();

    let compute = || -> Vec<ComplexHomology> {
        distinct
            .par_iter()
            .map(|vs| {
                let cx = order_complex(
                    vs.to_vec(),
                    |a: &Permutation, b| a.weak_leq_same_n(b),
                    options.max_degree.map(|d| d + 1),
                )
                .expect("weak order is a partial order");
                reduced_homology(&cx, options.max_degree)
            })
            .collect()
    };
    let results = match options.jobs {
        Some(j) => rayon::ThreadPoolBuilder::new()
            .num_threads(j.max(1))
            .build()
            .expect("thread pool")
            .install(compute),
        None => compute(),
    };
    let lookup: HashMap<&Vec<Permutation>, &ComplexHomology> =
        distinct.iter().copied().zip(results.iter()).collect();

    let cells: Vec<LinkCell> = keys
        .iter()
        .zip(&vertex_sets)
        .map(|(spec, vs)| LinkCell {
            sigma: spec.sigma.clone(),
            k: spec.k,
            vertex_count: vs.len(),
            profile: lookup[vs].clone(),
        })
        .collect();

    let mut classes: BTreeMap<HomologyProfile, ProfileClass> = BTreeMap::new();
    for cell in &cells {
        classes
            .entry(cell.profile.profile.clone())
            .and_modify(|c| c.count += 1)
            .or_insert_with(|| ProfileClass {
                profile: cell.profile.profile.clone(),
                label: cell.profile.profile.label(),
                count: 1,
                representative: CellKey {
                    sigma: cell.sigma.clone(),
                    k: cell.k,
                },
            });
    }
    Ok(ClassificationReport {
        character: chi.to_string(),
        n,
        cells,
        profiles: classes.into_values().collect(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::braid::delta_word;
    use crate::bruhat::rev_vertices;
    use num_rational::BigRational;
    use num_traits::{Signed, Zero};

    type Chi = Character<BigRational>;

    fn q(v: i64) -> BigRational {
        BigRational::from_integer(v.into())
    }

    fn p(b: &[usize]) -> Permutation {
        Permutation::from_bracket(b).unwrap()
    }

    fn chi3() -> Chi {
        parse_character("2*w[1,2]-w[1,3]-w[2,3]", 3).unwrap()
    }

    #[test]
    fn parse_examples() {
        let c: Chi = parse_character("w[1,3]+w[2,3]-2*w[1,2]", 3).unwrap();
        assert_eq!(c.coefficient(1, 3), q(1));
        assert_eq!(c.coefficient(2, 3), q(1));
        assert_eq!(c.coefficient(1, 2), q(-2));
        let c: Chi = parse_character("w[1,2]-w[3,4]", 4).unwrap();
        assert_eq!((c.coefficient(1, 2), c.coefficient(3, 4)), (q(1), q(-1)));
        assert!(parse_character::<BigRational>("", 4).unwrap().is_zero());
        let c: Chi = parse_character("1/2*w[2,1] + w[1,2]", 3).unwrap();
        assert_eq!(c.coefficient(2, 1), BigRational::new(3.into(), 2.into()));
        let c: Chi = parse_character("-chi(4,4)", 4).unwrap();
        assert_eq!(c, -chi_m_n(4, 4).unwrap());
    }

    #[test]
    fn parse_errors() {
        assert!(matches!(
            parse_character::<BigRational>("w[1,5]", 4),
            Err(Error::InvalidPair { .. })
        ));
        assert!(matches!(
            parse_character::<BigRational>("w[2,2]", 4),
            Err(Error::InvalidPair { .. })
        ));
        assert!(matches!(
            parse_character::<BigRational>("2*v[1,2]", 4),
            Err(Error::MalformedCharacter(_))
        ));
        assert!(matches!(
            parse_character::<BigRational>("x*w[1,2]", 4),
            Err(Error::MalformedCharacter(_))
        ));
        assert!(matches!(
            parse_character::<BigRational>("w[1,2,3]", 4),
            Err(Error::MalformedCharacter(_))
        ));
        assert!(parse_character::<BigRational>("chi(4,5)", 4).is_err());
        assert!(parse_character::<BigRational>("chi(2)", 4).is_err());
    }

    #[test]
    fn display_round_trips() {
        for text in ["2*w[1,2] - w[1,3] - w[2,3]", "-w[1,2] + 1/3*w[2,4]", "0"] {
            let c: Chi = parse_character(text, 4).unwrap();
            assert_eq!(c.to_string(), text);
        }
    }

    #[test]
    fn strand_hints() {
        assert_eq!(strand_count_hint("w[1,2]+w[1,3]"), Some(3));
        assert_eq!(strand_count_hint("chi(4,6)"), Some(6));
        assert_eq!(strand_count_hint("-chi(4)"), Some(4));
        assert_eq!(strand_count_hint(""), None);
    }

    #[test]
    fn chi_m_n_examples() {
        let c: Chi = chi_m_n(3, 3).unwrap();
        assert_eq!(
            c.all_coefficients(),
            vec![((1, 2), q(-2)), ((1, 3), q(1)), ((2, 3), q(1))]
        );
        let c: Chi = chi_m_n(4, 4).unwrap();
        assert!(c.coefficient_sum().is_zero());
        assert_eq!(
            c.all_coefficients()
                .iter()
                .filter(|(_, v)| v.is_negative())
                .count(),
            1
        );
        assert!(c.all_coefficients().iter().all(|(_, v)| !v.is_zero()));
        let c: Chi = chi_m_n(3, 5).unwrap();
        for (i, j) in [(1, 4), (2, 5), (4, 5), (3, 4)] {
            assert!(c.coefficient(i, j).is_zero());
        }
        assert!(chi_m_n::<BigRational>(2, 4).is_err());
        assert!(chi_m_n::<BigRational>(5, 4).is_err());
    }

    #[test]
    fn evaluation() {
        for n in 3..=6 {
            for m in 3..=n {
                assert!(chi_m_n::<BigRational>(m, n)
                    .unwrap()
                    .delta_value()
                    .is_zero());
            }
        }
        let w12: Character<BigRational> = Character::omega(2, 1, 2).unwrap();
        let s1sq = BraidWord::new(2, vec![1, 1]).unwrap();
        assert_eq!(w12.eval_on_braid(&s1sq).unwrap(), q(1));
        assert!(chi3()
            .eval_on_braid(&BraidWord::identity(3).unwrap())
            .unwrap()
            .is_zero());
        assert!(chi3()
            .eval_on_braid(&BraidWord::identity(4).unwrap())
            .is_err());
    }

    #[test]
    fn eval_on_perm_examples() {
        let c: Chi = chi_m_n(3, 3).unwrap();
        assert!(c.eval_on_perm(&Permutation::identity(3)).unwrap().is_zero());
        assert_eq!(
            c.eval_on_perm(&p(&[2, 3, 1])).unwrap(),
            BigRational::new((-1).into(), 2.into())
        );
        let c: Chi = parse_character("3*w[1,2] - 1/2*w[2,4] + w[3,4]", 4).unwrap();
        assert_eq!(
            c.eval_on_perm(&Permutation::longest(4)).unwrap(),
            c.delta_value()
        );
        for tau in Permutation::all(4) {
            let via_word = c
                .eval_on_braid(&crate::garside::perm_braid_word(&tau))
                .unwrap();
            assert_eq!(c.eval_on_perm(&tau).unwrap(), via_word);
        }
    }

    #[test]
    fn twist_examples() {
        let c = chi3();
        assert_eq!(c.twist(&Permutation::identity(3)).unwrap(), c);
        let t = c.twist(&p(&[2, 3, 1])).unwrap();
        assert_eq!(t, parse_character("2*w[1,3] - w[2,3] - w[1,2]", 3).unwrap());
        for s in Permutation::all(4) {
            for u in Permutation::all(4) {
                let c: Chi = parse_character("w[1,2] - 2*w[1,3] + 5*w[2,4] - 4*w[3,4]", 4).unwrap();
                assert_eq!(
                    c.twist(&s).unwrap().twist(&u).unwrap(),
                    c.twist(&s.then(&u)).unwrap()
                );
            }
        }
    }

    #[test]
    fn kdot_examples() {
        assert!(kdot_less(3, 2));
        assert!(kdot_less(1, -5));
        assert!(kdot_less(-2, -1));
        for x in -10..=10 {
            if x != 0 {
                assert!(kdot_less(x, 0));
            }
            assert!(!kdot_less(0, x));
        }
        for a in -10..=10 {
            for b in -10..=10 {
                assert_eq!(a == b, !kdot_less(a, b) && !kdot_less(b, a));
                for c in -10..=10 {
                    if kdot_less(a, b) && kdot_less(b, c) {
                        assert!(kdot_less(a, c));
                    }
                }
            }
        }
    }

    #[test]
    fn ascending_link_examples() {
        let spec = AscendingLinkSpec::new(chi3(), Permutation::identity(3), 0).unwrap();
        assert_eq!(
            ascending_link_vertices(&spec),
            vec![p(&[2, 1, 3]), p(&[2, 3, 1])]
        );
        assert_eq!(
            ascending_link_vertices(&spec),
            rev_vertices(3, 1, 2).unwrap()
        );
        let spec = AscendingLinkSpec::new(chi3(), p(&[2, 3, 1]), 0).unwrap();
        assert_eq!(
            ascending_link_vertices(&spec),
            rev_vertices(3, 1, 3).unwrap()
        );
        for k in 0..3 {
            let spec = AscendingLinkSpec::new(chi3(), p(&[3, 1, 2]), k).unwrap();
            let base = AscendingLinkSpec::new(chi3(), p(&[3, 1, 2]), 0).unwrap();
            assert_eq!(
                ascending_link_vertices(&spec),
                ascending_link_vertices(&base)
            );
        }
    }

    #[test]
    fn spec_validation() {
        let bad: Chi = parse_character("w[1,2]+w[1,3]", 3).unwrap();
        assert!(matches!(
            AscendingLinkSpec::new(bad, Permutation::identity(3), 0),
            Err(Error::NonzeroDeltaValue(_))
        ));
        assert!(matches!(
            AscendingLinkSpec::new(chi3(), Permutation::identity(3), 3),
            Err(Error::KOutOfRange { .. })
        ));
    }

    #[test]
    fn flat_vertices_enter_with_k() {
        // w[1,2] - w[3,4] has flat vertices; the set grows with k
        let c: Chi = parse_character("w[1,2] - w[3,4]", 4).unwrap();
        let sizes: Vec<usize> = (0..6)
            .map(|k| {
                ascending_link_vertices(
                    &AscendingLinkSpec::new(c.clone(), Permutation::identity(4), k).unwrap(),
                )
                .len()
            })
            .collect();
        assert!(sizes.windows(2).all(|w| w[0] <= w[1]));
        assert!(sizes[0] < sizes[5]);
    }

    #[test]
    fn regimes() {
        let c = chi3();
        let pos = BraidWord::new(3, vec![1]).unwrap();
        assert_eq!(link_regime(&c, &pos).unwrap(), LinkRegime::PeelsDown);
        let deep = delta_word(3).unwrap().mirror();
        assert_eq!(link_regime(&c, &deep).unwrap(), LinkRegime::ConeOnDelta);
        let x = BraidWord::new(3, vec![-1, 2, -2]).unwrap();
        match link_regime(&c, &x).unwrap() {
            LinkRegime::Positive(spec) => {
                assert_eq!(spec.k(), 1);
                assert_eq!(spec.sigma(), &p(&[2, 1, 3]));
            }
            other => panic!("unexpected {other:?}"),
        }
    }

    #[test]
    fn one_positive_examples() {
        let r = one_positive_pair(&chi_m_n::<BigRational>(4, 4).unwrap()).unwrap();
        assert_eq!(r.pair, (1, 2));
        assert!(r.antipode);
        assert!(r.strict());

        let c: Chi = parse_character("w[1,2]-w[3,4]", 4).unwrap();
        let r = one_positive_pair(&c).unwrap();
        assert_eq!(r.pair, (1, 2));
        assert!(!r.antipode);
        assert_eq!(r.generic, Some(true));
        assert!(r.has_zero_coefficients);
        assert!(!r.strict());

        let c: Chi = parse_character("w[1,2]+w[1,3]", 3).unwrap();
        assert_eq!(one_positive_pair(&c), None);
        let c: Chi = parse_character("w[1,2]+w[1,3]-w[2,3]-w[1,4]", 4).unwrap();
        assert_eq!(one_positive_pair(&c), None);
        let c: Chi = parse_character("3*w[1,2]-w[1,3]-w[2,3]-w[3,4]", 4).unwrap();
        let r = one_positive_pair(&c).unwrap();
        assert_eq!(r.generic, Some(true));
        let c: Chi = parse_character("2*w[1,2]-w[1,3]-w[2,3]+w[3,4]-w[1,4]", 4).unwrap();
        assert_eq!(one_positive_pair(&c), None);
    }

    #[test]
    fn float_coefficients_work_too() {
        let c: Character<f64> = parse_character("2*w[1,2]-w[1,3]-w[2,3]", 3).unwrap();
        let spec = AscendingLinkSpec::new(c, p(&[2, 3, 1]), 0).unwrap();
        assert_eq!(
            ascending_link_vertices(&spec),
            rev_vertices(3, 1, 3).unwrap()
        );
    }

    #[test]
    fn classify_small() {
        let report = classify_links(
            &chi3(),
            &ClassifyOptions {
                k_values: Some(vec![0]),
                ..Default::default()
            },
        )
        .unwrap();
        assert_eq!(report.cells.len(), 6);
        let s0 = report.class(&HomologyProfile::sphere(0)).unwrap();
        assert_eq!(s0.count, 2);
        assert_eq!(report.class(&HomologyProfile::default()).unwrap().count, 4);
        for cell in &report.cells {
            let pair = [cell.sigma.image(1), cell.sigma.image(2)];
            let far = pair.contains(&1) && pair.contains(&3);
            assert_eq!(cell.profile.profile.is_sphere(0), far);
        }
        assert!(report
            .cells
            .windows(2)
            .all(|w| (&w[0].sigma, w[0].k) < (&w[1].sigma, w[1].k)));
    }

    #[test]
    fn classify_guards() {
        let bad: Chi = parse_character("w[1,2]+w[1,3]", 3).unwrap();
        assert!(matches!(
            classify_links(&bad, &ClassifyOptions::default()),
            Err(Error::NonzeroDeltaValue(_))
        ));
        assert_eq!(
            classify_links(&Chi::zero(3), &ClassifyOptions::default()),
            Err(Error::TrivialCharacter)
        );
        let opts = ClassifyOptions {
            sigma_subset: Some(vec![Permutation::identity(4)]),
            ..Default::default()
        };
        assert!(classify_links(&chi3(), &opts).is_err());
    }

    #[test]
    fn classification_is_independent_of_worker_count() {
        let c: Chi = parse_character("w[1,2] - w[3,4]", 4).unwrap();
        let one = classify_links(
            &c,
            &ClassifyOptions {
                jobs: Some(1),
                ..Default::default()
            },
        )
        .unwrap();
        let four = classify_links(
            &c,
            &ClassifyOptions {
                jobs: Some(4),
                ..Default::default()
            },
        )
        .unwrap();
        assert_eq!(one, four);
        let neg = classify_links(&-c, &ClassifyOptions::default()).unwrap();
        assert_eq!(neg.cells.len(), one.cells.len());
    }
}
