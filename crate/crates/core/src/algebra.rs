//! Linear combinations of words and the Rota-Baxter product of weight λ.

use std::collections::btree_map::{self, Entry};
use std::collections::BTreeMap;
use std::ops::{Add, Neg, Sub};

use crate::error::{Error, Result};
use crate::scalar::Coefficient;
use crate::terms::{Generator, Prime, Word};

/// The weight λ together with the ordered generator names.
#[derive(Debug, Clone, PartialEq)]
pub struct AlgebraContext<C> {
    lambda: C,
    names: Vec<String>,
}

pub(crate) fn is_identifier(name: &str) -> bool {
    let mut chars = name.chars();
    matches!(chars.next(), Some(c) if c.is_ascii_alphabetic()) && chars.all(|c| c.is_ascii_alphanumeric())
}

impl<C: Coefficient> AlgebraContext<C> {
    pub fn new<S: Into<String>>(lambda: C, names: impl IntoIterator<Item = S>) -> Result<Self> {
        let names: Vec<String> = names.into_iter().map(Into::into).collect();
        if names.is_empty() {
            return Err(Error::NoGenerators);
        }
        for (i, name) in names.iter().enumerate() {
            if !is_identifier(name) || name == "P" {
                return Err(Error::InvalidGeneratorName(name.clone()));
            }
            if names[..i].contains(name) {
                return Err(Error::DuplicateGenerator(name.clone()));
            }
        }
        Ok(AlgebraContext { lambda, names })
    }

    /// Weight-zero context, mostly for tests and word-only work.
    pub fn with_generators(names: &[&str]) -> Result<Self> {
        AlgebraContext::new(C::zero(), names.iter().copied())
    }

    pub fn lambda(&self) -> &C {
        &self.lambda
    }

    pub fn with_lambda(&self, lambda: C) -> Self {
        AlgebraContext {
            lambda,
            names: self.names.clone(),
        }
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn len(&self) -> usize {
        self.names.len()
    }

    pub fn is_empty(&self) -> bool {
        self.names.is_empty()
    }

    pub fn generators(&self) -> Vec<Generator> {
        (0..self.names.len() as u32).map(Generator).collect()
    }

    pub fn generator(&self, name: &str) -> Option<Generator> {
        self.names.iter().position(|n| n == name).map(|i| Generator(i as u32))
    }

    pub fn name(&self, g: Generator) -> &str {
        &self.names[g.rank()]
    }

    /// The generator word named `name`.
    pub fn word(&self, name: &str) -> Result<Word> {
        self.generator(name)
            .map(Word::generator)
            .ok_or_else(|| Error::UnknownGenerator(name.to_string()))
    }

    pub fn check_word(&self, w: &Word) -> Result<()> {
        match w.max_generator() {
            Some(g) if g.rank() >= self.names.len() => Err(Error::ContextMismatch {
                index: g.rank(),
                available: self.names.len(),
            }),
            _ => Ok(()),
        }
    }

    pub fn check_poly(&self, p: &Polynomial<C>) -> Result<()> {
        p.words().try_for_each(|w| self.check_word(w))
    }

    pub fn multiply(&self, p: &Polynomial<C>, q: &Polynomial<C>) -> Polynomial<C> {
        multiply(p, q, &self.lambda)
    }
}

/// A finite linear combination of words with nonzero coefficients.
///
/// Terms are kept in a map ordered by the monomial order, so the leading
/// term is the last entry.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Polynomial<C> {
    terms: BTreeMap<Word, C>,
}

impl<C> Default for Polynomial<C> {
    fn default() -> Self {
        Polynomial { terms: BTreeMap::new() }
    }
}

impl<C: Coefficient> Polynomial<C> {
    pub fn zero() -> Self {
        Polynomial::default()
    }

    pub fn monomial(w: Word) -> Self {
        Polynomial::term(w, C::one())
    }

    pub fn term(w: Word, c: C) -> Self {
        let mut p = Polynomial::zero();
        p.add_term(w, c);
        p
    }

    pub fn from_terms(terms: impl IntoIterator<Item = (Word, C)>) -> Self {
        let mut p = Polynomial::zero();
        for (w, c) in terms {
            p.add_term(w, c);
        }
        p
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Terms in descending monomial order.
    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&Word, &C)> + '_ {
        self.terms.iter().rev()
    }

    /// Words in descending monomial order.
    pub fn words(&self) -> impl DoubleEndedIterator<Item = &Word> + '_ {
        self.terms.keys().rev()
    }

    pub fn coeff(&self, w: &Word) -> Option<&C> {
        self.terms.get(w)
    }

    pub fn contains(&self, w: &Word) -> bool {
        self.terms.contains_key(w)
    }

    /// Adds `c·w`, dropping the entry if it cancels.
    pub fn add_term(&mut self, w: Word, c: C) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(w) {
            Entry::Vacant(slot) => {
                slot.insert(c);
            }
            Entry::Occupied(mut slot) => {
                let sum = slot.get().clone() + c;
                if sum.is_zero() {
                    slot.remove();
                } else {
                    *slot.get_mut() = sum;
                }
            }
        }
    }

    /// `self += c·other`.
    pub fn add_scaled(&mut self, other: &Polynomial<C>, c: &C) {
        if c.is_zero() {
            return;
        }
        for (w, d) in &other.terms {
            self.add_term(w.clone(), d.clone() * c.clone());
        }
    }

    pub fn scale(&self, c: &C) -> Self {
        if c.is_zero() {
            return Polynomial::zero();
        }
        Polynomial {
            terms: self
                .terms
                .iter()
                .map(|(w, d)| (w.clone(), d.clone() * c.clone()))
                .collect(),
        }
    }

    /// Wraps every word in one `P`.
    pub fn apply_p(&self) -> Self {
        Polynomial {
            terms: self.terms.iter().map(|(w, c)| (w.wrap(), c.clone())).collect(),
        }
    }

    /// Leading word and its coefficient.
    pub fn leading(&self) -> Result<(&Word, &C)> {
        self.terms.iter().next_back().ok_or(Error::ZeroPolynomial)
    }

    pub fn leading_word(&self) -> Option<&Word> {
        self.terms.keys().next_back()
    }

    /// Removes and returns the leading term.
    pub fn pop_leading(&mut self) -> Option<(Word, C)> {
        self.terms.pop_last()
    }

    pub fn make_monic(&self) -> Result<Self> {
        let (_, lc) = self.leading()?;
        let inv = C::one() / lc.clone();
        Ok(self.scale(&inv))
    }

    pub fn is_monic(&self) -> bool {
        matches!(self.leading(), Ok((_, c)) if c.is_one())
    }

    pub fn max_total_deg(&self) -> usize {
        self.terms.keys().map(Word::total_deg).max().unwrap_or(0)
    }
}

impl<C: Coefficient> IntoIterator for Polynomial<C> {
    type Item = (Word, C);
    type IntoIter = std::iter::Rev<btree_map::IntoIter<Word, C>>;

    fn into_iter(self) -> Self::IntoIter {
        self.terms.into_iter().rev()
    }
}

impl<C: Coefficient> Add for &Polynomial<C> {
    type Output = Polynomial<C>;

    fn add(self, rhs: &Polynomial<C>) -> Polynomial<C> {
        let mut out = self.clone();
        out.add_scaled(rhs, &C::one());
        out
    }
}

impl<C: Coefficient> Sub for &Polynomial<C> {
    type Output = Polynomial<C>;

    fn sub(self, rhs: &Polynomial<C>) -> Polynomial<C> {
        let mut out = self.clone();
        out.add_scaled(rhs, &-C::one());
        out
    }
}

impl<C: Coefficient> Neg for &Polynomial<C> {
    type Output = Polynomial<C>;

    fn neg(self) -> Polynomial<C> {
        self.scale(&-C::one())
    }
}

impl<C: std::fmt::Display> std::fmt::Debug for Polynomial<C> {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        for (i, (w, c)) in self.terms.iter().rev().enumerate() {
            if i > 0 {
                f.write_str(" + ")?;
            }
            write!(f, "({c})*{w}")?;
        }
        Ok(())
    }
}

/// Bilinear extension of the word product.
pub fn multiply<C: Coefficient>(p: &Polynomial<C>, q: &Polynomial<C>, lambda: &C) -> Polynomial<C> {
    let mut out = Polynomial::zero();
    for (u, a) in &p.terms {
        for (v, b) in &q.terms {
            let coeff = a.clone() * b.clone();
            out.add_scaled(&multiply_words(u, v, lambda), &coeff);
        }
    }
    out
}

/// Product of two words. Only the junction `u_s · v_1` can expand, and only
/// when both sides are `P`-primes:
/// `P(a)·P(b) = P(P(a)·b) + P(a·P(b)) + λ P(a·b)`.
pub fn multiply_words<C: Coefficient>(u: &Word, v: &Word, lambda: &C) -> Polynomial<C> {
    let (Prime::P(a), Prime::P(b)) = (u.last(), v.first()) else {
        let joined = u.concat(v).expect("junction has a generator side");
        return Polynomial::monomial(joined);
    };

    let mut middle = multiply_words(&a.wrap(), b, lambda).apply_p();
    middle.add_scaled(&multiply_words(a, &b.wrap(), lambda).apply_p(), &C::one());
    if !lambda.is_zero() {
        middle.add_scaled(&multiply_words(a, b, lambda).apply_p(), lambda);
    }

    let prefix = &u.primes()[..u.breadth() - 1];
    let suffix = &v.primes()[1..];
    if prefix.is_empty() && suffix.is_empty() {
        return middle;
    }
    // Every middle word is a single P-prime; the prefix ends and the suffix
    // starts with generators, so plain concatenation stays valid.
    Polynomial::from_terms(middle.into_iter().map(|(w, c)| {
        let mut primes = Vec::with_capacity(prefix.len() + 1 + suffix.len());
        primes.extend_from_slice(prefix);
        primes.extend_from_slice(w.primes());
        primes.extend_from_slice(suffix);
        (Word::from_primes_unchecked(primes), c)
    }))
}

/// Coefficient tables of the expansion of `P^n(u)·P^m(v)`: `alpha[s-1]` for
/// the terms `P^{n+m-s}(P^s(u)·v)` and `beta[l-1]` for `P^{n+m-l}(u·P^l(v))`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PnmCoefficients {
    pub n: usize,
    pub m: usize,
    pub alpha: Vec<u64>,
    pub beta: Vec<u64>,
}

impl PnmCoefficients {
    pub fn alpha(&self, s: usize) -> u64 {
        self.alpha[s - 1]
    }

    pub fn beta(&self, l: usize) -> u64 {
        self.beta[l - 1]
    }
}

/// Computes the tables from the Pascal-type recursion with boundary values
/// `α(n,0,s) = 0`, `α(n,1,s) = 1` for `s < n` and `α(n,m,n) = 1`; `β` is the
/// mirror image.
pub fn pnm_coefficients(n: usize, m: usize) -> Result<PnmCoefficients> {
    if n == 0 || m == 0 {
        return Err(Error::InvalidBound("n and m must be positive"));
    }
    let mut memo = BTreeMap::new();
    let alpha = (1..=n).map(|s| alpha_rec(n, m, s, &mut memo)).collect();
    let mut memo = BTreeMap::new();
    // β(n,m,l) obeys the α recursion with the roles of n and m swapped.
    let beta = (1..=m).map(|l| alpha_rec(m, n, l, &mut memo)).collect();
    Ok(PnmCoefficients { n, m, alpha, beta })
}

fn alpha_rec(n: usize, m: usize, s: usize, memo: &mut BTreeMap<(usize, usize, usize), u64>) -> u64 {
    if m == 0 {
        return 0;
    }
    if s == n {
        return 1;
    }
    debug_assert!(s >= 1 && s < n);
    if m == 1 {
        return 1;
    }
    if let Some(&v) = memo.get(&(n, m, s)) {
        return v;
    }
    let v = alpha_rec(n - 1, m, s, memo) + alpha_rec(n, m - 1, s, memo);
    memo.insert((n, m, s), v);
    v
}

/// Leading word of `u·v` without expanding the product.
///
/// At a `P·P` junction with `P^n(a)` and `P^m(b)` (`a`, `b` not `P`-primes)
/// the leading word is `P^{n+m-1}` of the leading word of `P(a)·b`, which
/// recurses along the left spine of `b` only.
pub fn predict_product_leading(u: &Word, v: &Word) -> Word {
    if !(u.last().is_p() && v.first().is_p()) {
        return u.concat(v).expect("junction has a generator side");
    }
    let left = Word::from_primes_unchecked(vec![u.last().clone()]);
    let right = Word::from_primes_unchecked(vec![v.first().clone()]);
    let (n, a) = left.p_power_split();
    let (m, b) = right.p_power_split();
    let middle = predict_product_leading(&a.wrap(), &b).wrap_n(n + m - 1);

    let prefix = &u.primes()[..u.breadth() - 1];
    let suffix = &v.primes()[1..];
    let mut primes = Vec::with_capacity(prefix.len() + 1 + suffix.len());
    primes.extend_from_slice(prefix);
    primes.extend_from_slice(middle.primes());
    primes.extend_from_slice(suffix);
    Word::from_primes_unchecked(primes)
}
