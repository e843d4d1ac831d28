//! The monomial well order on words.
//!
//! Words compare by `Deg` first. At equal `Deg`, two single `P`-primes compare
//! by payload and everything else compares lexicographically on the prime
//! sequences, primes themselves being compared as words. A generator is
//! below every `P`-prime because its `Deg` is `(1, 0)`.

use std::cmp::Ordering;

use crate::algebra::AlgebraContext;
use crate::error::Result;
use crate::scalar::Coefficient;
use crate::terms::{Prime, Word};

impl Ord for Word {
    fn cmp(&self, other: &Self) -> Ordering {
        if self.ptr_eq(other) {
            return Ordering::Equal;
        }
        self.deg()
            .cmp(&other.deg())
            .then_with(|| cmp_prime_sequences(self.primes(), other.primes()))
    }
}

impl PartialOrd for Word {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Lexicographic comparison of prime sequences of words with equal `Deg`.
fn cmp_prime_sequences(lhs: &[Prime], rhs: &[Prime]) -> Ordering {
    for (a, b) in lhs.iter().zip(rhs) {
        match cmp_primes(a, b) {
            Ordering::Equal => continue,
            decided => return decided,
        }
    }
    // Equal Deg and an all-equal common prefix leave nothing for a longer
    // suffix to carry, so the sequences have the same length.
    assert_eq!(lhs.len(), rhs.len(), "words with equal Deg differ only by a suffix");
    Ordering::Equal
}

fn cmp_primes(a: &Prime, b: &Prime) -> Ordering {
    match (a, b) {
        (Prime::Gen(x), Prime::Gen(y)) => x.cmp(y),
        (Prime::Gen(_), Prime::P(_)) => Ordering::Less,
        (Prime::P(_), Prime::Gen(_)) => Ordering::Greater,
        // Deg(P(u)) = Deg(u) + (1, 1), so comparing payloads is the same as
        // comparing the primes as words.
        (Prime::P(u), Prime::P(v)) => u.cmp(v),
    }
}

/// Compares two words after checking both belong to `ctx`.
pub fn compare<C: Coefficient>(u: &Word, v: &Word, ctx: &AlgebraContext<C>) -> Result<Ordering> {
    ctx.check_word(u)?;
    ctx.check_word(v)?;
    Ok(u.cmp(v))
}
