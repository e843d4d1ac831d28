//! Words with a single hole `★`: substitution, normality and occurrence search.

use std::fmt;

use crate::algebra::{multiply, Polynomial};
use crate::scalar::Coefficient;
use crate::terms::{validate_primes, Prime, Word};

/// A word over `X ∪ {★}` with exactly one `★`, stored as a zipper:
/// `left · hole · right` where the hole is either `★` itself or a `P`-prime
/// containing a smaller star word.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct StarWord {
    left: Vec<Prime>,
    hole: Hole,
    right: Vec<Prime>,
}

#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
enum Hole {
    Star,
    Wrap(Box<StarWord>),
}

// Primes only need an order here so star words can be sorted and
// de-duplicated; the monomial order on words is reused.
impl PartialOrd for Prime {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Prime {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        let a = Word::from_primes_unchecked(vec![self.clone()]);
        let b = Word::from_primes_unchecked(vec![other.clone()]);
        a.cmp(&b)
    }
}

impl StarWord {
    /// The identity frame `★`.
    pub fn identity() -> Self {
        StarWord {
            left: Vec::new(),
            hole: Hole::Star,
            right: Vec::new(),
        }
    }

    /// `left ★ right`; either side may be empty.
    pub fn around(left: &[Prime], right: &[Prime]) -> Self {
        StarWord {
            left: left.to_vec(),
            hole: Hole::Star,
            right: right.to_vec(),
        }
    }

    /// `left P(inner) right`.
    pub fn wrapping(left: &[Prime], inner: StarWord, right: &[Prime]) -> Self {
        StarWord {
            left: left.to_vec(),
            hole: Hole::Wrap(Box::new(inner)),
            right: right.to_vec(),
        }
    }

    /// `P(self)`.
    pub fn wrap(self) -> Self {
        StarWord::wrapping(&[], self, &[])
    }

    pub fn is_identity(&self) -> bool {
        self.left.is_empty() && self.right.is_empty() && self.hole == Hole::Star
    }

    /// Symbol count of the frame, with `★` counting as one symbol.
    pub fn total_deg(&self) -> usize {
        let side: usize = self
            .left
            .iter()
            .chain(&self.right)
            .map(|p| Word::from_primes_unchecked(vec![p.clone()]).total_deg())
            .sum();
        side + match &self.hole {
            Hole::Star => 1,
            Hole::Wrap(inner) => 1 + inner.total_deg(),
        }
    }

    /// Nesting depth of `★` below `P`s.
    pub fn depth(&self) -> usize {
        match &self.hole {
            Hole::Star => 0,
            Hole::Wrap(inner) => 1 + inner.depth(),
        }
    }

    /// Textual replacement of `★` by `w`; `None` if that creates adjacent
    /// `P`-primes.
    pub fn substitute_word_strict(&self, w: &Word) -> Option<Word> {
        let mut primes = Vec::with_capacity(self.left.len() + w.breadth() + self.right.len());
        primes.extend_from_slice(&self.left);
        match &self.hole {
            Hole::Star => primes.extend_from_slice(w.primes()),
            Hole::Wrap(inner) => primes.push(Prime::P(inner.substitute_word_strict(w)?)),
        }
        primes.extend_from_slice(&self.right);
        validate_primes(&primes).ok()?;
        Some(Word::from_primes_unchecked(primes))
    }

    /// Evaluates `c|_p` in the free Rota-Baxter algebra; any `P`-adjacency
    /// created by the substitution is resolved through the product.
    pub fn substitute<C: Coefficient>(&self, p: &Polynomial<C>, lambda: &C) -> Polynomial<C> {
        let inner = match &self.hole {
            Hole::Star => p.clone(),
            Hole::Wrap(frame) => frame.substitute(p, lambda).apply_p(),
        };
        let mut out = inner;
        if !self.left.is_empty() {
            let left = Polynomial::monomial(Word::from_primes_unchecked(self.left.clone()));
            out = multiply(&left, &out, lambda);
        }
        if !self.right.is_empty() {
            let right = Polynomial::monomial(Word::from_primes_unchecked(self.right.clone()));
            out = multiply(&out, &right, lambda);
        }
        out
    }

    /// Whether `c|_s` is a normal `s`-word, decided by checking that the
    /// textual substitution of the leading word of `s` is itself a word.
    /// Returns `None` for the zero polynomial.
    pub fn is_normal_s_word<C: Coefficient>(&self, s: &Polynomial<C>) -> Option<bool> {
        let lead = s.leading_word()?;
        Some(self.substitute_word_strict(lead).is_some())
    }

    /// Same verdict computed from the definition: the leading word of the
    /// evaluated `c|_s` equals the textual substitution of the leading word.
    pub fn is_normal_s_word_checked<C: Coefficient>(&self, s: &Polynomial<C>, lambda: &C) -> Option<bool> {
        let lead = s.leading_word()?;
        let Some(strict) = self.substitute_word_strict(lead) else {
            return Some(false);
        };
        Some(self.substitute(s, lambda).leading_word() == Some(&strict))
    }

    pub(crate) fn fmt_with(
        &self,
        f: &mut dyn fmt::Write,
        gen_name: &dyn Fn(&Prime, &mut dyn fmt::Write) -> fmt::Result,
    ) -> fmt::Result {
        let mut first = true;
        let mut sep = |f: &mut dyn fmt::Write| -> fmt::Result {
            if !std::mem::take(&mut first) {
                f.write_str("*")?;
            }
            Ok(())
        };
        for p in &self.left {
            sep(f)?;
            gen_name(p, f)?;
        }
        sep(f)?;
        match &self.hole {
            Hole::Star => f.write_str("★")?,
            Hole::Wrap(inner) => {
                f.write_str("P(")?;
                inner.fmt_with(f, gen_name)?;
                f.write_str(")")?;
            }
        }
        for p in &self.right {
            sep(f)?;
            gen_name(p, f)?;
        }
        Ok(())
    }
}

impl fmt::Display for StarWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut out = String::new();
        self.fmt_with(&mut out, &|p, f| match p {
            Prime::Gen(g) => write!(f, "x{}", g.rank() + 1),
            Prime::P(w) => write!(f, "P({w})"),
        })?;
        f.write_str(&out)
    }
}

impl fmt::Debug for StarWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "StarWord({self})")
    }
}

/// Every frame `c` with `c|_{pattern} = host`, in leftmost-outermost order.
///
/// The pattern is matched as a contiguous block of primes at every nesting
/// level. Since `host` is a valid word, each frame found this way is normal.
pub fn find_occurrences(host: &Word, pattern: &Word) -> Vec<StarWord> {
    let mut out = Vec::new();
    collect_occurrences(host.primes(), pattern.primes(), &mut out);
    out
}

fn collect_occurrences(host: &[Prime], pattern: &[Prime], out: &mut Vec<StarWord>) {
    let width = pattern.len();
    for i in 0..host.len() {
        if i + width <= host.len() && host[i..i + width] == *pattern {
            out.push(StarWord::around(&host[..i], &host[i + width..]));
        }
        if let Prime::P(inner) = &host[i] {
            let mut nested = Vec::new();
            collect_occurrences(inner.primes(), pattern, &mut nested);
            out.extend(
                nested
                    .into_iter()
                    .map(|c| StarWord::wrapping(&host[..i], c, &host[i + 1..])),
            );
        }
    }
}

/// A top-level overlap `w = w1·a = b·w2` with `a`, `b` nonempty.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Overlap {
    pub a: Word,
    pub b: Word,
    pub w: Word,
}

/// All overlaps where a proper nonempty suffix of `w1`'s primes equals a
/// proper nonempty prefix of `w2`'s primes, shortest glued word first.
pub fn proper_overlaps(w1: &Word, w2: &Word) -> Vec<Overlap> {
    let (p1, p2) = (w1.primes(), w2.primes());
    let max_shared = p1.len().min(p2.len()).saturating_sub(1);
    let mut out = Vec::new();
    for shared in (1..=max_shared).rev() {
        if p1[p1.len() - shared..] != p2[..shared] {
            continue;
        }
        let a = Word::from_primes_unchecked(p2[shared..].to_vec());
        let b = Word::from_primes_unchecked(p1[..p1.len() - shared].to_vec());
        let mut glued = p1.to_vec();
        glued.extend_from_slice(&p2[shared..]);
        let w = Word::from_primes_unchecked(glued);
        debug_assert!(w.total_deg() < w1.total_deg() + w2.total_deg());
        out.push(Overlap { a, b, w });
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::terms::Generator;
    use num_rational::BigRational;
    use num_traits::{One, Zero};

    type Q = BigRational;

    fn x(i: u32) -> Word {
        Word::generator(Generator(i))
    }

    fn cat(parts: &[Word]) -> Word {
        Word::new(parts.iter().flat_map(|w| w.primes().to_vec()).collect()).unwrap()
    }

    fn prime(w: &Word) -> Prime {
        w.primes()[0].clone()
    }

    #[test]
    fn substitute_examples() {
        // P(★) x2 with x1
        let c = StarWord::wrapping(&[], StarWord::identity(), &[prime(&x(1))]);
        let got = c.substitute(&Polynomial::<Q>::monomial(x(0)), &Q::zero());
        assert_eq!(got, Polynomial::monomial(cat(&[x(0).wrap(), x(1)])));

        // ★P(y) with P(x), weight 1
        let c = StarWord::around(&[], &[prime(&x(1).wrap())]);
        let got = c.substitute(&Polynomial::<Q>::monomial(x(0).wrap()), &Q::one());
        let expected = Polynomial::from_terms([
            (cat(&[x(0).wrap(), x(1)]).wrap(), Q::one()),
            (cat(&[x(0), x(1).wrap()]).wrap(), Q::one()),
            (cat(&[x(0), x(1)]).wrap(), Q::one()),
        ]);
        assert_eq!(got, expected);

        let p = Polynomial::from_terms([(x(0), Q::one()), (x(1).wrap(), -Q::one())]);
        assert_eq!(StarWord::identity().substitute(&p, &Q::one()), p);
    }

    #[test]
    fn strict_substitution_examples() {
        let c = StarWord::wrapping(&[], StarWord::around(&[], &[prime(&x(1))]), &[]);
        assert_eq!(
            c.substitute_word_strict(&x(0).wrap()),
            Some(cat(&[x(0).wrap(), x(1)]).wrap())
        );
        let c = StarWord::around(&[], &[prime(&x(1).wrap())]);
        assert_eq!(c.substitute_word_strict(&x(0).wrap()), None);
        let c = StarWord::around(&[prime(&x(0))], &[]);
        assert_eq!(
            c.substitute_word_strict(&cat(&[x(1), x(2)])),
            Some(cat(&[x(0), x(1), x(2)]))
        );
    }

    #[test]
    fn normality_examples() {
        let s = Polynomial::from_terms([
            (cat(&[x(0).wrap(), x(1)]), Q::one()),
            (cat(&[x(1), x(0).wrap()]), -Q::one()),
        ]);
        let c = StarWord::wrapping(&[], StarWord::identity(), &[prime(&x(2))]);
        assert_eq!(c.is_normal_s_word(&s), Some(true));
        assert_eq!(c.is_normal_s_word_checked(&s, &Q::one()), Some(true));

        let s = Polynomial::<Q>::monomial(x(0).wrap());
        let c = StarWord::around(&[], &[prime(&x(1).wrap())]);
        assert_eq!(c.is_normal_s_word(&s), Some(false));
        assert_eq!(c.is_normal_s_word_checked(&s, &Q::one()), Some(false));

        assert_eq!(StarWord::identity().is_normal_s_word(&s), Some(true));
        assert_eq!(StarWord::identity().is_normal_s_word(&Polynomial::<Q>::zero()), None);
    }

    #[test]
    fn occurrence_examples() {
        let host = cat(&[cat(&[x(0), x(1)]).wrap(), x(0)]);
        let found = find_occurrences(&host, &x(0));
        assert_eq!(found.len(), 2);
        assert_eq!(found[0].depth(), 1);
        assert_eq!(found[1].depth(), 0);
        for c in &found {
            assert_eq!(c.substitute_word_strict(&x(0)).as_ref(), Some(&host));
        }

        let pattern = cat(&[x(0).wrap(), x(1)]);
        let found = find_occurrences(&pattern.wrap(), &pattern);
        assert_eq!(found, vec![StarWord::identity().wrap()]);

        assert!(find_occurrences(&cat(&[x(0), x(1)]), &cat(&[x(1), x(0)])).is_empty());
    }

    #[test]
    fn self_occurrence_is_identity_only() {
        let words = crate::terms::enumerate_words(&crate::terms::generators(2), 4).unwrap();
        for w in &words {
            assert_eq!(find_occurrences(w, w), vec![StarWord::identity()]);
        }
    }

    #[test]
    fn overlap_examples() {
        let found = proper_overlaps(&cat(&[x(0), x(1)]), &cat(&[x(1), x(2)]));
        assert_eq!(
            found,
            vec![Overlap {
                a: x(2),
                b: x(0),
                w: cat(&[x(0), x(1), x(2)])
            }]
        );

        let u = cat(&[x(0), x(1)]).wrap();
        let found = proper_overlaps(&cat(&[u.clone(), x(0)]), &cat(&[x(0), x(1)]));
        assert_eq!(found.len(), 1);
        assert_eq!(found[0].a, x(1));
        assert_eq!(found[0].b, u);

        assert!(proper_overlaps(&cat(&[x(0), x(0)]), &cat(&[x(1), x(1)])).is_empty());
    }

    #[test]
    fn overlaps_satisfy_gluing_equation() {
        let words = crate::terms::enumerate_words(&crate::terms::generators(2), 4).unwrap();
        for w1 in &words {
            for w2 in &words {
                for o in proper_overlaps(w1, w2) {
                    assert_eq!(w1.concat(&o.a).as_ref(), Some(&o.w));
                    assert_eq!(o.b.concat(w2).as_ref(), Some(&o.w));
                    assert!(o.w.total_deg() < w1.total_deg() + w2.total_deg());
                }
            }
        }
    }
}
