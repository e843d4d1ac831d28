use std::fmt;

use crate::algebra::Polynomial;
use crate::error::Result;
use crate::scalar::Coefficient;
use crate::starwords::StarWord;
use crate::terms::Word;

use super::RelationSet;

/// Which reducible word to rewrite next.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Strategy {
    /// The greatest reducible word, lowest applicable rule.
    #[default]
    GreatestWord,
    /// The lowest rule index applicable anywhere, at its greatest word.
    RuleIndexFirst,
}

/// One rewrite `p := p - coeff · frame|_{rule}`.
#[derive(Debug, Clone, PartialEq)]
pub struct ReductionStep<C> {
    pub word: Word,
    pub rule: usize,
    pub frame: StarWord,
    pub coeff: C,
}

#[derive(Clone, PartialEq)]
pub struct Reduction<C> {
    pub normal_form: Polynomial<C>,
    pub steps: Vec<ReductionStep<C>>,
}

impl<C: Coefficient> fmt::Debug for Reduction<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Reduction")
            .field("normal_form", &self.normal_form)
            .field("steps", &self.steps)
            .finish()
    }
}

/// Reduces `p` to normal form with the default strategy.
pub fn reduce<C: Coefficient>(p: &Polynomial<C>, set: &RelationSet<C>) -> Result<Reduction<C>> {
    reduce_with(p, set, Strategy::GreatestWord)
}

pub fn reduce_with<C: Coefficient>(
    p: &Polynomial<C>,
    set: &RelationSet<C>,
    strategy: Strategy,
) -> Result<Reduction<C>> {
    set.ctx().check_poly(p)?;
    Ok(match strategy {
        Strategy::GreatestWord => reduce_greatest(p, set),
        Strategy::RuleIndexFirst => reduce_rule_first(p, set),
    })
}

/// Subtracts `coeff · frame|_s` from `work`, where `word` has already been
/// removed from `work` and is the leading word of the subtrahend.
fn rewrite<C: Coefficient>(
    work: &mut Polynomial<C>,
    word: &Word,
    coeff: &C,
    frame: &StarWord,
    relation: &Polynomial<C>,
    lambda: &C,
) {
    let s_word = frame.substitute(relation, lambda);
    // Each step must strictly lower the word multiset, otherwise the
    // rewrite loop would not terminate.
    assert_eq!(
        s_word.leading().map(|(w, c)| (w.clone(), c.is_one())).ok(),
        Some((word.clone(), true)),
        "occurrence is not a normal s-word"
    );
    let neg = -coeff.clone();
    for (v, d) in s_word.terms().skip(1) {
        work.add_term(v.clone(), d.clone() * neg.clone());
    }
}

fn reduce_greatest<C: Coefficient>(p: &Polynomial<C>, set: &RelationSet<C>) -> Reduction<C> {
    let mut work = p.clone();
    let mut normal_form = Polynomial::zero();
    let mut steps = Vec::new();
    while let Some((word, coeff)) = work.pop_leading() {
        match set.first_match(&word) {
            None => normal_form.add_term(word, coeff),
            Some(m) => {
                rewrite(&mut work, &word, &coeff, &m.frame, set.get(m.rule), set.lambda());
                steps.push(ReductionStep {
                    word,
                    rule: m.rule,
                    frame: m.frame,
                    coeff,
                });
            }
        }
    }
    Reduction { normal_form, steps }
}

fn reduce_rule_first<C: Coefficient>(p: &Polynomial<C>, set: &RelationSet<C>) -> Reduction<C> {
    let mut work = p.clone();
    let mut steps = Vec::new();
    loop {
        let mut chosen: Option<(Word, super::Match)> = None;
        for w in work.words() {
            if let Some(m) = set.first_match(w) {
                if chosen.as_ref().is_none_or(|(_, best)| m.rule < best.rule) {
                    chosen = Some((w.clone(), m));
                }
            }
        }
        let Some((word, m)) = chosen else {
            return Reduction {
                normal_form: work,
                steps,
            };
        };
        let coeff = work.coeff(&word).cloned().expect("word is in the polynomial");
        work.add_term(word.clone(), -coeff.clone());
        rewrite(&mut work, &word, &coeff, &m.frame, set.get(m.rule), set.lambda());
        steps.push(ReductionStep {
            word,
            rule: m.rule,
            frame: m.frame,
            coeff,
        });
    }
}
