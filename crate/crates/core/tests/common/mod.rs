//! Reference implementations used as oracles by the integration tests.
//! They share no code paths with the engine beyond the `Word` container.

#![allow(dead_code)]

use std::collections::BTreeMap;

use num_rational::BigRational;
use num_traits::{One, Zero};
use rbgs::algebra::Polynomial;
use rbgs::gsb::RelationSet;
use rbgs::presets::DendriformData;
use rbgs::{enumerate_words, generators, multiply_words, pnm_coefficients, Generator, Prime, StarWord, Word};

pub type Q = BigRational;

pub fn q(n: i64, d: i64) -> Q {
    Q::new(n.into(), d.into())
}

pub fn x(i: u32) -> Word {
    Word::generator(Generator(i))
}

pub fn cat(parts: &[Word]) -> Word {
    Word::new(parts.iter().flat_map(|w| w.primes().to_vec()).collect()).unwrap()
}

/// A raw term tree: a sequence of generators and `P`-nodes with no
/// adjacency restriction.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub enum Raw {
    Gen(u32),
    P(Vec<Raw>),
}

pub fn to_raw(w: &Word) -> Vec<Raw> {
    w.primes()
        .iter()
        .map(|p| match p {
            Prime::Gen(g) => Raw::Gen(g.0),
            Prime::P(inner) => Raw::P(to_raw(inner)),
        })
        .collect()
}

pub fn from_raw(seq: &[Raw]) -> Word {
    let primes = seq
        .iter()
        .map(|r| match r {
            Raw::Gen(g) => Prime::Gen(Generator(*g)),
            Raw::P(inner) => Prime::P(from_raw(inner)),
        })
        .collect();
    Word::new(primes).expect("normalized raw sequence is a word")
}

/// Linear combination of raw sequences keyed by the sequence.
pub type RawPoly = BTreeMap<Vec<Raw>, Q>;

fn add_into(acc: &mut RawPoly, key: Vec<Raw>, c: Q) {
    let e = acc.entry(key.clone()).or_insert_with(Q::zero);
    *e += c;
    if e.is_zero() {
        acc.remove(&key);
    }
}

/// Normalizes a raw sequence by rewriting the leftmost, outermost adjacent
/// `P(a)P(b)` pair with `P(P(a)b) + P(aP(b)) + λP(ab)` until none is left,
/// at any depth.
pub fn naive_normalize(seq: Vec<Raw>, lambda: &Q) -> RawPoly {
    let mut done = RawPoly::new();
    let mut work: Vec<(Vec<Raw>, Q)> = vec![(seq, Q::one())];
    while let Some((s, c)) = work.pop() {
        match rewrite_once(&s, lambda) {
            None => add_into(&mut done, s, c),
            Some(parts) => {
                for (t, d) in parts {
                    work.push((t, d * c.clone()));
                }
            }
        }
    }
    done
}

fn rewrite_once(seq: &[Raw], lambda: &Q) -> Option<Vec<(Vec<Raw>, Q)>> {
    for i in 0..seq.len() {
        if i + 1 < seq.len() {
            if let (Raw::P(a), Raw::P(b)) = (&seq[i], &seq[i + 1]) {
                let splice = |middle: Vec<Raw>| {
                    let mut out = seq[..i].to_vec();
                    out.push(Raw::P(middle));
                    out.extend_from_slice(&seq[i + 2..]);
                    out
                };
                let mut left = vec![Raw::P(a.clone())];
                left.extend(b.iter().cloned());
                let mut right = a.clone();
                right.push(Raw::P(b.clone()));
                let mut both = a.clone();
                both.extend(b.iter().cloned());
                let mut out = vec![(splice(left), Q::one()), (splice(right), Q::one())];
                if !lambda.is_zero() {
                    out.push((splice(both), lambda.clone()));
                }
                return Some(out);
            }
        }
        if let Raw::P(inner) = &seq[i] {
            if let Some(parts) = rewrite_once(inner, lambda) {
                return Some(
                    parts
                        .into_iter()
                        .map(|(t, d)| {
                            let mut out = seq[..i].to_vec();
                            out.push(Raw::P(t));
                            out.extend_from_slice(&seq[i + 1..]);
                            (out, d)
                        })
                        .collect(),
                );
            }
        }
    }
    None
}

/// Converts an engine polynomial into the oracle's representation.
pub fn poly_to_raw(p: &rbgs::Poly) -> RawPoly {
    p.terms().map(|(w, c)| (to_raw(w), c.clone())).collect()
}

/// Product of two words computed by the oracle.
pub fn naive_product(u: &Word, v: &Word, lambda: &Q) -> RawPoly {
    let mut seq = to_raw(u);
    seq.extend(to_raw(v));
    naive_normalize(seq, lambda)
}

/// Token stream of a word: generators, `(` and `)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
enum Tok {
    Gen(u32),
    Open,
    Close,
}

fn tokens(w: &Word, out: &mut Vec<Tok>) {
    for p in w.primes() {
        match p {
            Prime::Gen(g) => out.push(Tok::Gen(g.0)),
            Prime::P(inner) => {
                out.push(Tok::Open);
                tokens(inner, out);
                out.push(Tok::Close);
            }
        }
    }
}

/// Whether `pattern` occurs as a block of primes anywhere inside `host`.
/// A balanced token block can only match at prime boundaries, so plain
/// substring search on token streams decides it.
pub fn occurs_in(pattern: &Word, host: &Word) -> bool {
    let (mut p, mut h) = (Vec::new(), Vec::new());
    tokens(pattern, &mut p);
    tokens(host, &mut h);
    h.windows(p.len()).any(|w| w == p.as_slice())
}

/// Reference order key: `Deg`, then the prime sequence with generators
/// below `P`-primes and `P`-primes compared by payload.
#[derive(PartialEq, Eq, PartialOrd, Ord)]
pub struct Key(usize, usize, Vec<PrimeKey>);

#[derive(PartialEq, Eq, PartialOrd, Ord)]
pub enum PrimeKey {
    Gen(u32),
    P(Box<Key>),
}

pub fn key(w: &Word) -> Key {
    let primes = w
        .primes()
        .iter()
        .map(|p| match p {
            Prime::Gen(g) => PrimeKey::Gen(g.0),
            Prime::P(inner) => PrimeKey::P(Box::new(key(inner))),
        })
        .collect();
    Key(w.total_deg(), w.p_deg(), primes)
}

/// Rank of a list of polynomials by plain Gaussian elimination on dense
/// rows indexed by word.
pub fn dense_rank(polys: &[Polynomial<Q>]) -> usize {
    let mut index: BTreeMap<Word, usize> = BTreeMap::new();
    for p in polys {
        for w in p.words() {
            let next = index.len();
            index.entry(w.clone()).or_insert(next);
        }
    }
    let cols = index.len();
    let mut rows: Vec<Vec<Q>> = polys
        .iter()
        .map(|p| {
            let mut row = vec![Q::zero(); cols];
            for (w, c) in p.terms() {
                row[index[w]] = c.clone();
            }
            row
        })
        .collect();
    let mut rank = 0;
    for col in 0..cols {
        let Some(pivot) = (rank..rows.len()).find(|&r| !rows[r][col].is_zero()) else {
            continue;
        };
        rows.swap(rank, pivot);
        let inv = Q::one() / rows[rank][col].clone();
        let pivot_row: Vec<Q> = rows[rank].iter().map(|c| c.clone() * inv.clone()).collect();
        for (r, row) in rows.iter_mut().enumerate() {
            if r != rank && !row[col].is_zero() {
                let f = row[col].clone();
                for (a, b) in row.iter_mut().zip(&pivot_row) {
                    *a -= f.clone() * b.clone();
                }
            }
        }
        rows[rank] = pivot_row;
        rank += 1;
    }
    rank
}

/// Every frame of total degree at most `max_deg`: words over `X ∪ {★}`
/// with exactly one `★`, where `★` is the extra generator of rank `n`.
pub fn frames(n: usize, max_deg: usize) -> Vec<StarWord> {
    let star = Generator(n as u32);
    enumerate_words(&generators(n + 1), max_deg)
        .unwrap()
        .into_iter()
        .filter(|w| count(w, star) == 1)
        .map(|w| punch(&w, star))
        .collect()
}

fn count(w: &Word, g: Generator) -> usize {
    w.primes()
        .iter()
        .map(|p| match p {
            Prime::Gen(h) => usize::from(*h == g),
            Prime::P(inner) => count(inner, g),
        })
        .sum()
}

fn punch(w: &Word, g: Generator) -> StarWord {
    let primes = w.primes();
    for (i, p) in primes.iter().enumerate() {
        match p {
            Prime::Gen(h) if *h == g => return StarWord::around(&primes[..i], &primes[i + 1..]),
            Prime::P(inner) if count(inner, g) == 1 => {
                return StarWord::wrapping(&primes[..i], punch(inner, g), &primes[i + 1..]);
            }
            _ => {}
        }
    }
    unreachable!("the hole generator occurs once")
}

pub fn brute_span_dim(set: &RelationSet<Q>, max_deg: usize) -> usize {
    let mut polys = Vec::new();
    for frame in frames(set.ctx().len(), max_deg) {
        for s in set.relations() {
            let lead = s.leading_word().unwrap();
            if frame.total_deg() - 1 + lead.total_deg() <= max_deg {
                polys.push(frame.substitute(s, set.lambda()));
            }
        }
    }
    dense_rank(&polys)
}

/// Coordinates of `a ≺ b` or `a ≻ b` from structure constants.
pub fn act(table: &[Vec<Vec<Q>>], a: &[Q], b: &[Q]) -> Vec<Q> {
    let n = a.len();
    let mut out = vec![Q::zero(); n];
    for i in 0..n {
        for j in 0..n {
            for k in 0..n {
                out[k] += a[i].clone() * b[j].clone() * table[i][j][k].clone();
            }
        }
    }
    out
}

fn unit(n: usize, i: usize) -> Vec<Q> {
    (0..n).map(|k| if k == i { Q::one() } else { Q::zero() }).collect()
}

fn as_poly(v: &[Q]) -> Polynomial<Q> {
    Polynomial::from_terms(v.iter().enumerate().map(|(k, c)| (x(k as u32), c.clone())))
}

fn wrap_n(p: &Polynomial<Q>, n: usize) -> Polynomial<Q> {
    (0..n).fold(p.clone(), |acc, _| acc.apply_p())
}

/// Checks the expansion of `P^n(u)·P^m(v)` against the coefficient tables:
/// exact at weight zero, and at nonzero weight the leftover must lie in
/// `P(RB(X))` with the predicted degrees of its leading word.
pub fn pnm_identity(u: &Word, v: &Word, n: usize, m: usize) -> Result<(), String> {
    let table = pnm_coefficients(n, m).map_err(|e| e.to_string())?;
    for lambda in [Q::zero(), Q::one(), q(-1, 2)] {
        let full = multiply_words(&u.wrap_n(n), &v.wrap_n(m), &lambda);
        let mut rest = full;
        for s in 1..=n {
            let inner = multiply_words(&u.wrap_n(s), v, &lambda);
            rest.add_scaled(&wrap_n(&inner, n + m - s), &-Q::from_integer(table.alpha(s).into()));
        }
        for l in 1..=m {
            let inner = multiply_words(u, &v.wrap_n(l), &lambda);
            rest.add_scaled(&wrap_n(&inner, n + m - l), &-Q::from_integer(table.beta(l).into()));
        }
        let context = format!("n={n} m={m} u={u} v={v} lambda={lambda}");
        if lambda.is_zero() {
            if !rest.is_zero() {
                return Err(format!("{context}: expansion differs from the tables"));
            }
            continue;
        }
        let Some(lead) = rest.leading_word() else { continue };
        if !rest.words().all(Word::is_p_prime) {
            return Err(format!("{context}: weight term is not in P(RB(X))"));
        }
        if lead.p_deg() != n + u.p_deg() + m + v.p_deg() - 1 || lead.x_deg() != u.x_deg() + v.x_deg() {
            return Err(format!("{context}: weight term leads with {lead}"));
        }
    }
    Ok(())
}

/// Reads the coefficient tables off the weight-zero expansion of
/// `P^n(x)·P^m(y)`, where every table entry owns a distinct word.
pub fn extract_pnm(n: usize, m: usize) -> (Vec<u64>, Vec<u64>) {
    let (u, v) = (x(0), x(1));
    let full = multiply_words(&u.wrap_n(n), &v.wrap_n(m), &Q::zero());
    let coeff = |w: Word| -> u64 {
        let c = full.coeff(&w).cloned().unwrap_or_else(Q::zero);
        assert!(c.is_integer(), "coefficient {c} of {w}");
        c.to_integer().try_into().expect("nonnegative coefficient")
    };
    let alpha = (1..=n)
        .map(|s| coeff(cat(&[u.wrap_n(s), v.clone()]).wrap_n(n + m - s)))
        .collect();
    let beta = (1..=m)
        .map(|l| coeff(cat(&[u.clone(), v.wrap_n(l)]).wrap_n(n + m - l)))
        .collect();
    (alpha, beta)
}

/// `-(x_i ≻ x_j) ≺ x_l + x_i ≻ (x_j ≺ x_l)` as a linear polynomial, which
/// vanishes exactly when the middle dialgebra axiom holds at `(i, j, l)`.
pub fn middle_axiom_defect(data: &DendriformData<Q>, i: usize, j: usize, l: usize) -> Polynomial<Q> {
    let n = data.dimension();
    let (ei, ej, el) = (unit(n, i), unit(n, j), unit(n, l));
    let mut out = as_poly(&act(&data.prec, &act(&data.succ, &ei, &ej), &el)).scale(&-Q::one());
    out.add_scaled(&as_poly(&act(&data.succ, &ei, &act(&data.prec, &ej, &el))), &Q::one());
    out
}
