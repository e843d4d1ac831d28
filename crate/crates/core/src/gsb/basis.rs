use std::collections::BTreeMap;
use std::fmt;

use serde::Serialize;

use crate::algebra::Polynomial;
use crate::error::Result;
use crate::scalar::Coefficient;
use crate::starwords::StarWord;
use crate::terms::{enumerate_words, Generator, Prime, Word};

use super::{ensure_positive, RelationSet};

/// Words of total degree at most `max_deg` with no occurrence of any
/// leading word of `set`, ascending.
pub fn irr_enumerate<C: Coefficient>(set: &RelationSet<C>, max_deg: usize) -> Result<Vec<Word>> {
    ensure_positive(max_deg, "max_deg must be at least 1")?;
    let words = enumerate_words(&set.ctx().generators(), max_deg)?;
    Ok(words.into_iter().filter(|w| !set.is_reducible(w)).collect())
}

/// Row-echelon basis of a subspace, one row per distinct leading word.
#[derive(Clone, Default)]
pub struct EchelonBasis<C> {
    rows: BTreeMap<Word, Polynomial<C>>,
}

impl<C: Coefficient> EchelonBasis<C> {
    pub fn new() -> Self {
        EchelonBasis { rows: BTreeMap::new() }
    }

    /// Eliminates `p` against the current rows and keeps what is left.
    /// Returns whether the rank grew.
    pub fn insert(&mut self, p: &Polynomial<C>) -> bool {
        let mut p = p.clone();
        loop {
            let Ok((lead, coeff)) = p.leading() else {
                return false;
            };
            match self.rows.get(lead) {
                Some(row) => {
                    let factor = -coeff.clone();
                    p.add_scaled(row, &factor);
                }
                None => {
                    let lead = lead.clone();
                    let monic = p.make_monic().expect("nonzero");
                    self.rows.insert(lead, monic);
                    return true;
                }
            }
        }
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    pub fn pivots(&self) -> impl Iterator<Item = &Word> + '_ {
        self.rows.keys()
    }
}

impl<C: Coefficient> fmt::Debug for EchelonBasis<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_list().entries(self.rows.values()).finish()
    }
}

/// Converts a word over `X ∪ {star}` with exactly one `star` into a frame.
fn star_word_from(word: &Word, star: Generator) -> Option<StarWord> {
    let primes = word.primes();
    for (i, p) in primes.iter().enumerate() {
        match p {
            Prime::Gen(g) if *g == star => return Some(StarWord::around(&primes[..i], &primes[i + 1..])),
            Prime::P(inner) => {
                if let Some(frame) = star_word_from(inner, star) {
                    return Some(StarWord::wrapping(&primes[..i], frame, &primes[i + 1..]));
                }
            }
            Prime::Gen(_) => {}
        }
    }
    None
}

fn star_count(word: &Word, star: Generator) -> usize {
    word.primes()
        .iter()
        .map(|p| match p {
            Prime::Gen(g) => usize::from(*g == star),
            Prime::P(inner) => star_count(inner, star),
        })
        .sum()
}

/// All star words over the context's generators with total degree at most
/// `max_total` (the star counting as one symbol).
pub(crate) fn enumerate_star_words(gens: &[Generator], max_total: usize) -> Vec<StarWord> {
    let star = Generator(gens.iter().map(|g| g.0 + 1).max().unwrap_or(0));
    let mut extended = gens.to_vec();
    extended.push(star);
    enumerate_words(&extended, max_total)
        .expect("generator list is nonempty and bound is positive")
        .into_iter()
        .filter(|w| star_count(w, star) == 1)
        .map(|w| star_word_from(&w, star).expect("word contains the star"))
        .collect()
}

/// Dimension of the span of all `c|_s` (`s` in `set`, `c` any star word)
/// whose words have total degree at most `max_deg`.
///
/// This equals the dimension of the degree-`max_deg` truncation of the ideal
/// when `set` is certified at that bound; otherwise it is a lower bound.
pub fn ideal_span_dim<C: Coefficient>(set: &RelationSet<C>, max_deg: usize) -> Result<usize> {
    ensure_positive(max_deg, "max_deg must be at least 1")?;
    let gens = set.ctx().generators();
    let mut basis = EchelonBasis::new();
    let frames = enumerate_star_words(&gens, max_deg);
    for s in set.relations() {
        let s_deg = s.max_total_deg();
        if s_deg > max_deg {
            continue;
        }
        for frame in frames.iter().filter(|c| c.total_deg() - 1 + s_deg <= max_deg) {
            basis.insert(&frame.substitute(s, set.lambda()));
        }
    }
    Ok(basis.rank())
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct OracleRow {
    pub max_deg: usize,
    pub words: usize,
    pub irreducible: usize,
    pub span_dim: usize,
}

impl OracleRow {
    /// Whether `|Irr| + dim = |Φ|` holds at this degree.
    pub fn balanced(&self) -> bool {
        self.irreducible + self.span_dim == self.words
    }
}

/// Rank-nullity cross-check of `irr_enumerate` against `ideal_span_dim`
/// at every degree up to `max_deg`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct OracleSummary {
    pub rows: Vec<OracleRow>,
}

impl OracleSummary {
    pub fn balanced(&self) -> bool {
        self.rows.iter().all(OracleRow::balanced)
    }
}

pub fn ideal_oracle<C: Coefficient>(set: &RelationSet<C>, max_deg: usize) -> Result<OracleSummary> {
    ensure_positive(max_deg, "max_deg must be at least 1")?;
    let gens = set.ctx().generators();
    let rows = (1..=max_deg)
        .map(|d| {
            Ok(OracleRow {
                max_deg: d,
                words: enumerate_words(&gens, d)?.len(),
                irreducible: irr_enumerate(set, d)?.len(),
                span_dim: ideal_span_dim(set, d)?,
            })
        })
        .collect::<Result<_>>()?;
    Ok(OracleSummary { rows })
}
