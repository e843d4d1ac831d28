//! Seeded generators of random words, frames and polynomials for property
//! tests and benchmarks. All functions take the RNG explicitly.

use rand::Rng;

use crate::algebra::Polynomial;
use crate::scalar::Coefficient;
use crate::starwords::StarWord;
use crate::terms::{Generator, Prime, Word};

/// Shape limits for random terms.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Shape {
    /// Upper bound on total degree.
    pub max_total: usize,
    /// Upper bound on `P`-nesting depth.
    pub max_depth: usize,
}

impl Shape {
    pub fn new(max_total: usize, max_depth: usize) -> Self {
        assert!(max_total >= 1, "a word has at least one symbol");
        Shape { max_total, max_depth }
    }
}

/// A random word over `gens` within `shape`.
pub fn random_word<R: Rng + ?Sized>(rng: &mut R, gens: &[Generator], shape: Shape) -> Word {
    assert!(!gens.is_empty(), "need at least one generator");
    let target = rng.gen_range(1..=shape.max_total);
    word_of_budget(rng, gens, target, shape.max_depth)
}

/// A word of total degree at most `budget` (and at least one symbol).
fn word_of_budget<R: Rng + ?Sized>(rng: &mut R, gens: &[Generator], budget: usize, depth: usize) -> Word {
    let mut primes: Vec<Prime> = Vec::new();
    let mut left = budget;
    while left > 0 {
        let prev_is_p = primes.last().is_some_and(Prime::is_p);
        let can_wrap = depth > 0 && left >= 2 && !prev_is_p;
        let prime = if can_wrap && rng.gen_bool(0.4) {
            let inner_budget = rng.gen_range(1..left);
            let inner = word_of_budget(rng, gens, inner_budget, depth - 1);
            left -= inner.total_deg() + 1;
            Prime::P(inner)
        } else {
            left -= 1;
            Prime::Gen(gens[rng.gen_range(0..gens.len())])
        };
        primes.push(prime);
        if rng.gen_bool(0.3) {
            break;
        }
    }
    Word::new(primes).expect("construction never places P-primes side by side")
}

/// A random star word: a random word with one generator occurrence
/// replaced by the hole.
pub fn random_star_word<R: Rng + ?Sized>(rng: &mut R, gens: &[Generator], shape: Shape) -> StarWord {
    let w = random_word(rng, gens, shape);
    let slots = generator_slots(&w);
    let pick = rng.gen_range(0..slots);
    punch(&w, pick).expect("pick is in range")
}

fn generator_slots(w: &Word) -> usize {
    w.primes()
        .iter()
        .map(|p| match p {
            Prime::Gen(_) => 1,
            Prime::P(inner) => generator_slots(inner),
        })
        .sum()
}

/// Replaces the `k`-th generator occurrence (preorder) by the hole.
fn punch(w: &Word, mut k: usize) -> Option<StarWord> {
    let primes = w.primes();
    for (i, p) in primes.iter().enumerate() {
        match p {
            Prime::Gen(_) if k == 0 => return Some(StarWord::around(&primes[..i], &primes[i + 1..])),
            Prime::Gen(_) => k -= 1,
            Prime::P(inner) => {
                let n = generator_slots(inner);
                if k < n {
                    let frame = punch(inner, k)?;
                    return Some(StarWord::wrapping(&primes[..i], frame, &primes[i + 1..]));
                }
                k -= n;
            }
        }
    }
    None
}

/// A small nonzero rational `p/q` with `|p| ≤ 5`, `1 ≤ q ≤ 4`.
pub fn random_coefficient<C: Coefficient, R: Rng + ?Sized>(rng: &mut R) -> C {
    let numer = loop {
        let n: i64 = rng.gen_range(-5..=5);
        if n != 0 {
            break n;
        }
    };
    let denom: i64 = rng.gen_range(1..=4);
    C::from_i64(numer) / C::from_i64(denom)
}

/// A random polynomial with up to `max_terms` terms (may cancel to fewer).
pub fn random_polynomial<C: Coefficient, R: Rng + ?Sized>(
    rng: &mut R,
    gens: &[Generator],
    shape: Shape,
    max_terms: usize,
) -> Polynomial<C> {
    let n = rng.gen_range(1..=max_terms.max(1));
    Polynomial::from_terms((0..n).map(|_| (random_word(rng, gens, shape), random_coefficient(rng))))
}
