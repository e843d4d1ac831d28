//! Rota-Baxter words.
//!
//! A [`Word`] is a nonempty sequence of [`Prime`]s, each either a generator or
//! a `P`-wrapped word, with no two `P`-primes adjacent. These are exactly the
//! basis monomials of the free Rota-Baxter algebra without unity. Words are
//! immutable and cheap to clone; structural equality is the only equality.

use std::fmt;
use std::hash::{Hash, Hasher};
use std::sync::Arc;

use crate::error::{Error, Result};

/// A free generator, identified by its rank in the context's declaration
/// order. The rank is the generator's position in the well order on `X`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Generator(pub u32);

impl Generator {
    pub fn rank(self) -> usize {
        self.0 as usize
    }
}

/// One prime factor of a word.
#[derive(Clone, PartialEq, Eq, Hash)]
pub enum Prime {
    Gen(Generator),
    P(Word),
}

impl Prime {
    pub fn is_p(&self) -> bool {
        matches!(self, Prime::P(_))
    }

    fn total(&self) -> u32 {
        match self {
            Prime::Gen(_) => 1,
            Prime::P(w) => w.0.total + 1,
        }
    }

    fn p_deg(&self) -> u32 {
        match self {
            Prime::Gen(_) => 0,
            Prime::P(w) => w.0.p_deg + 1,
        }
    }
}

/// The pair `(deg_{P ∪ X}, deg_P)`, ordered lexicographically.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Deg {
    pub total: u32,
    pub p: u32,
}

impl std::ops::Add for Deg {
    type Output = Deg;

    fn add(self, rhs: Deg) -> Deg {
        Deg {
            total: self.total + rhs.total,
            p: self.p + rhs.p,
        }
    }
}

/// A symbol whose occurrences [`Word::deg_count`] can count.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Symbol {
    P,
    Gen(Generator),
}

#[derive(PartialEq, Eq)]
struct WordData {
    primes: Vec<Prime>,
    total: u32,
    p_deg: u32,
}

#[derive(Clone)]
pub struct Word(Arc<WordData>);

impl PartialEq for Word {
    fn eq(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.0, &other.0) || self.0 == other.0
    }
}

impl Eq for Word {}

impl Hash for Word {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.0.primes.hash(state);
    }
}

/// Checks the structural invariants of a prime sequence.
pub fn validate_primes(primes: &[Prime]) -> Result<()> {
    if primes.is_empty() {
        return Err(Error::EmptyWord);
    }
    for (i, pair) in primes.windows(2).enumerate() {
        if pair[0].is_p() && pair[1].is_p() {
            return Err(Error::AdjacentPrimes(i, i + 1));
        }
    }
    Ok(())
}

impl Word {
    /// Builds a word from primes, rejecting empty and `P`-adjacent sequences.
    pub fn new(primes: Vec<Prime>) -> Result<Word> {
        validate_primes(&primes)?;
        Ok(Word::from_primes_unchecked(primes))
    }

    pub(crate) fn from_primes_unchecked(primes: Vec<Prime>) -> Word {
        debug_assert!(validate_primes(&primes).is_ok());
        let total = primes.iter().map(Prime::total).sum();
        let p_deg = primes.iter().map(Prime::p_deg).sum();
        Word(Arc::new(WordData { primes, total, p_deg }))
    }

    /// Like [`Word::new`] but returns `None` instead of an error.
    pub fn try_from_primes(primes: Vec<Prime>) -> Option<Word> {
        validate_primes(&primes).ok()?;
        Some(Word::from_primes_unchecked(primes))
    }

    pub fn generator(g: Generator) -> Word {
        Word::from_primes_unchecked(vec![Prime::Gen(g)])
    }

    /// The single-prime word `P(self)`.
    pub fn wrap(&self) -> Word {
        Word::from_primes_unchecked(vec![Prime::P(self.clone())])
    }

    /// `P^n(self)`.
    pub fn wrap_n(&self, n: usize) -> Word {
        (0..n).fold(self.clone(), |w, _| w.wrap())
    }

    pub fn primes(&self) -> &[Prime] {
        &self.0.primes
    }

    /// Number of prime factors.
    pub fn breadth(&self) -> usize {
        self.0.primes.len()
    }

    pub fn deg(&self) -> Deg {
        Deg {
            total: self.0.total,
            p: self.0.p_deg,
        }
    }

    /// Total number of symbols, generators and `P` alike.
    pub fn total_deg(&self) -> usize {
        self.0.total as usize
    }

    pub fn p_deg(&self) -> usize {
        self.0.p_deg as usize
    }

    /// Number of generator occurrences at every nesting level.
    pub fn x_deg(&self) -> usize {
        (self.0.total - self.0.p_deg) as usize
    }

    /// Counts occurrences of the listed symbols throughout the word.
    pub fn deg_count(&self, symbols: &[Symbol]) -> usize {
        self.0
            .primes
            .iter()
            .map(|prime| match prime {
                Prime::Gen(g) => usize::from(symbols.contains(&Symbol::Gen(*g))),
                Prime::P(inner) => usize::from(symbols.contains(&Symbol::P)) + inner.deg_count(symbols),
            })
            .sum()
    }

    /// The payload when this word is a single `P`-prime.
    pub fn as_p_prime(&self) -> Option<&Word> {
        match self.0.primes.as_slice() {
            [Prime::P(inner)] => Some(inner),
            _ => None,
        }
    }

    pub fn is_p_prime(&self) -> bool {
        self.as_p_prime().is_some()
    }

    /// Splits `self = P^n(core)` with `core` not a single `P`-prime.
    pub fn p_power_split(&self) -> (usize, Word) {
        let mut n = 0;
        let mut core = self;
        while let Some(inner) = core.as_p_prime() {
            n += 1;
            core = inner;
        }
        (n, core.clone())
    }

    pub fn first(&self) -> &Prime {
        &self.0.primes[0]
    }

    pub fn last(&self) -> &Prime {
        self.0.primes.last().expect("words are nonempty")
    }

    /// Juxtaposition `self · other` as plain words; `None` when the junction
    /// would put two `P`-primes side by side.
    pub fn concat(&self, other: &Word) -> Option<Word> {
        if self.last().is_p() && other.first().is_p() {
            return None;
        }
        let mut primes = Vec::with_capacity(self.breadth() + other.breadth());
        primes.extend_from_slice(self.primes());
        primes.extend_from_slice(other.primes());
        Some(Word::from_primes_unchecked(primes))
    }

    /// Largest generator rank appearing anywhere in the word.
    pub fn max_generator(&self) -> Option<Generator> {
        self.0
            .primes
            .iter()
            .filter_map(|prime| match prime {
                Prime::Gen(g) => Some(*g),
                Prime::P(inner) => inner.max_generator(),
            })
            .max()
    }

    pub(crate) fn ptr_eq(&self, other: &Word) -> bool {
        Arc::ptr_eq(&self.0, &other.0)
    }
}

impl fmt::Display for Word {
    /// Generic rendering with generators named `x1, x2, ...` by rank.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, prime) in self.primes().iter().enumerate() {
            if i > 0 {
                f.write_str("*")?;
            }
            match prime {
                Prime::Gen(g) => write!(f, "x{}", g.rank() + 1)?,
                Prime::P(inner) => write!(f, "P({inner})")?,
            }
        }
        Ok(())
    }
}

impl fmt::Debug for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Word({self})")
    }
}

impl fmt::Debug for Prime {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Prime::Gen(g) => write!(f, "x{}", g.rank() + 1),
            Prime::P(inner) => write!(f, "P({inner})"),
        }
    }
}

/// All words of total degree at most `max_total` over `gens`, ascending in
/// the monomial order.
pub fn enumerate_words(gens: &[Generator], max_total: usize) -> Result<Vec<Word>> {
    if gens.is_empty() {
        return Err(Error::NoGenerators);
    }
    if max_total == 0 {
        return Err(Error::InvalidBound("max_total must be at least 1"));
    }
    let by_degree = words_by_degree(gens, max_total);
    let mut all: Vec<Word> = by_degree.into_iter().flatten().collect();
    all.sort();
    all.dedup();
    Ok(all)
}

/// Words grouped by exact total degree: entry `d` holds degree `d`
/// (entry 0 is empty).
pub(crate) fn words_by_degree(gens: &[Generator], max_total: usize) -> Vec<Vec<Word>> {
    // Per degree: words ending in a generator, words ending in a P-prime,
    // and the P-primes themselves.
    let mut end_gen: Vec<Vec<Vec<Prime>>> = vec![Vec::new(); max_total + 1];
    let mut end_p: Vec<Vec<Vec<Prime>>> = vec![Vec::new(); max_total + 1];
    let mut p_primes: Vec<Vec<Prime>> = vec![Vec::new(); max_total + 1];
    let mut words: Vec<Vec<Word>> = vec![Vec::new(); max_total + 1];

    for d in 1..=max_total {
        if d >= 2 {
            p_primes[d] = words[d - 1].iter().map(|w| Prime::P(w.clone())).collect();
        }

        let mut g_seqs = Vec::new();
        if d == 1 {
            g_seqs.extend(gens.iter().map(|g| vec![Prime::Gen(*g)]));
        } else {
            for prefix in end_gen[d - 1].iter().chain(end_p[d - 1].iter()) {
                for g in gens {
                    let mut seq = prefix.clone();
                    seq.push(Prime::Gen(*g));
                    g_seqs.push(seq);
                }
            }
        }

        let mut p_seqs: Vec<Vec<Prime>> = p_primes[d].iter().map(|p| vec![p.clone()]).collect();
        for k in 2..d {
            for prefix in &end_gen[d - k] {
                for p in &p_primes[k] {
                    let mut seq = prefix.clone();
                    seq.push(p.clone());
                    p_seqs.push(seq);
                }
            }
        }

        words[d] = g_seqs
            .iter()
            .chain(p_seqs.iter())
            .map(|seq| Word::from_primes_unchecked(seq.clone()))
            .collect();
        end_gen[d] = g_seqs;
        end_p[d] = p_seqs;
    }
    words
}

/// Convenience: the first `n` generators.
pub fn generators(n: usize) -> Vec<Generator> {
    (0..n as u32).map(Generator).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn x(i: u32) -> Word {
        Word::generator(Generator(i))
    }

    fn cat(parts: &[Word]) -> Word {
        let primes = parts.iter().flat_map(|w| w.primes().to_vec()).collect();
        Word::new(primes).unwrap()
    }

    #[test]
    fn deg_count_examples() {
        // P(x1 x2) x1
        let w = cat(&[cat(&[x(0), x(1)]).wrap(), x(0)]);
        assert_eq!(w.deg_count(&[Symbol::P]), 1);
        assert_eq!(w.deg_count(&[Symbol::Gen(Generator(0))]), 2);
        let ppx = x(0).wrap_n(2);
        assert_eq!(ppx.deg_count(&[Symbol::P, Symbol::Gen(Generator(0))]), 3);
    }

    #[test]
    fn deg_profile_examples() {
        assert_eq!(cat(&[x(0), x(1)]).deg(), Deg { total: 2, p: 0 });
        assert_eq!(x(0).wrap().deg(), Deg { total: 2, p: 1 });
        let w = cat(&[x(0).wrap(), x(1), x(2).wrap_n(2)]);
        assert_eq!(w.deg(), Deg { total: 6, p: 3 });
    }

    #[test]
    fn p_power_split_examples() {
        assert_eq!(x(0).wrap_n(2).p_power_split(), (2, x(0)));
        let xy = cat(&[x(0), x(1)]);
        assert_eq!(xy.p_power_split(), (0, xy.clone()));
        assert_eq!(xy.wrap().p_power_split(), (1, xy));
    }

    #[test]
    fn adjacent_p_primes_rejected() {
        let bad = vec![Prime::P(x(0)), Prime::P(x(1))];
        assert!(matches!(Word::new(bad), Err(Error::AdjacentPrimes(0, 1))));
        assert!(matches!(Word::new(vec![]), Err(Error::EmptyWord)));
        assert!(x(0).wrap().concat(&x(1).wrap()).is_none());
    }

    #[test]
    fn enumerate_small_cases() {
        let g = generators(1);
        assert_eq!(enumerate_words(&g, 1).unwrap(), vec![x(0)]);
        assert_eq!(enumerate_words(&g, 2).unwrap().len(), 3);
        let three = enumerate_words(&g, 3).unwrap();
        let expected = [
            x(0),
            cat(&[x(0), x(0)]),
            x(0).wrap(),
            cat(&[x(0), x(0), x(0)]),
            cat(&[x(0), x(0).wrap()]),
            cat(&[x(0).wrap(), x(0)]),
            cat(&[x(0), x(0)]).wrap(),
            x(0).wrap_n(2),
        ];
        assert_eq!(three.len(), 8);
        for w in &expected {
            assert!(three.contains(w), "missing {w}");
        }
    }

    #[test]
    fn enumerate_rejects_bad_input() {
        assert!(matches!(enumerate_words(&[], 3), Err(Error::NoGenerators)));
        assert!(enumerate_words(&generators(1), 0).is_err());
    }

    /// Independent count: sequences of primes by degree, via a generating
    /// recurrence on (ends-in-generator, ends-in-P) counts.
    fn count_words(n_gens: u64, max_total: usize) -> Vec<u64> {
        let mut eg = vec![0u64; max_total + 1];
        let mut ep = vec![0u64; max_total + 1];
        for d in 1..=max_total {
            let pp = if d >= 2 { eg[d - 1] + ep[d - 1] } else { 0 };
            eg[d] = if d == 1 {
                n_gens
            } else {
                (eg[d - 1] + ep[d - 1]) * n_gens
            };
            ep[d] = pp;
            for k in 2..d {
                let pk = eg[k - 1] + ep[k - 1];
                ep[d] += eg[d - k] * pk;
            }
        }
        (0..=max_total).map(|d| eg[d] + ep[d]).collect()
    }

    #[test]
    fn enumeration_matches_counting_recurrence() {
        for n in 1..=3 {
            let counts = count_words(n as u64, 5);
            let words = enumerate_words(&generators(n), 5).unwrap();
            for (d, &expected) in counts.iter().enumerate().skip(1) {
                let got = words.iter().filter(|w| w.total_deg() == d).count() as u64;
                assert_eq!(got, expected, "n={n} d={d}");
            }
        }
    }

    #[test]
    fn enumerated_words_invariants() {
        let mut previous = 0;
        for bound in 1..=5 {
            let words = enumerate_words(&generators(2), bound).unwrap();
            assert!(words.len() > previous);
            previous = words.len();
            for w in &words {
                assert!(validate_primes(w.primes()).is_ok());
                let (n, core) = w.p_power_split();
                assert_eq!(&core.wrap_n(n), w);
                assert!(!core.is_p_prime());
                let wrapped = w.wrap().deg();
                assert_eq!(wrapped, w.deg() + Deg { total: 1, p: 1 });
            }
            assert!(words.windows(2).all(|p| p[0] < p[1]));
        }
    }
}
