use std::fmt;

use crate::algebra::Polynomial;
use crate::error::Result;
use crate::scalar::Coefficient;

use super::compositions::{enumerate_compositions, Bounds, KindSet};
use super::reduce::reduce;
use super::{ensure_positive, RelationSet};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CompletionStatus {
    /// A full round produced no nontrivial composition.
    Quiescent,
    /// The round budget ran out while compositions were still being added.
    RoundLimit,
}

#[derive(Clone)]
pub struct Completion<C> {
    pub relations: RelationSet<C>,
    pub status: CompletionStatus,
    pub rounds: usize,
    /// Every rule adjoined along the way, in insertion order, including
    /// ones later evicted by inter-reduction.
    pub added: Vec<Polynomial<C>>,
}

impl<C: Coefficient> fmt::Debug for Completion<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Completion")
            .field("relations", &self.relations)
            .field("status", &self.status)
            .field("rounds", &self.rounds)
            .field("added", &self.added)
            .finish()
    }
}

/// Bounded completion.
///
/// Each round enumerates the compositions of the current set within
/// `bounds`, walks them in increasing ambiguity order and adjoins the monic
/// normal form of every nontrivial one. The input relations are kept as
/// given; only rules whose leading word becomes reducible by a newly added
/// rule are re-reduced.
pub fn complete<C: Coefficient>(
    set: &RelationSet<C>,
    bounds: Bounds,
    kinds: KindSet,
    max_rounds: usize,
) -> Result<Completion<C>> {
    ensure_positive(max_rounds, "max_rounds must be at least 1")?;
    let mut current = set.clone();
    let mut added = Vec::new();
    for round in 1..=max_rounds {
        let comps = enumerate_compositions(&current, bounds, kinds)?;
        let mut changed = false;
        for comp in comps {
            let remainder = reduce(&comp.difference, &current)?.normal_form;
            if remainder.is_zero() {
                continue;
            }
            changed = true;
            current = insert_rule(current, remainder.make_monic()?, &mut added)?;
        }
        if !changed {
            return Ok(Completion {
                relations: current,
                status: CompletionStatus::Quiescent,
                rounds: round,
                added,
            });
        }
    }
    Ok(Completion {
        relations: current,
        status: CompletionStatus::RoundLimit,
        rounds: max_rounds,
        added,
    })
}

/// Adds an irreducible monic rule, then evicts and re-reduces every other
/// rule whose leading word it divides.
fn insert_rule<C: Coefficient>(
    mut set: RelationSet<C>,
    rule: Polynomial<C>,
    added: &mut Vec<Polynomial<C>>,
) -> Result<RelationSet<C>> {
    let mut queue = vec![rule];
    while let Some(rule) = queue.pop() {
        let rule = reduce(&rule, &set)?.normal_form;
        if rule.is_zero() {
            continue;
        }
        let rule = rule.make_monic()?;
        let probe = RelationSet::new(set.ctx().clone(), [rule.clone()])?;
        let evicted: Vec<usize> = (0..set.len()).filter(|&i| probe.is_reducible(set.leading(i))).collect();
        queue.extend(evicted.iter().map(|&i| set.get(i).clone()));
        if !evicted.is_empty() {
            set = set.without(&evicted);
        }
        added.push(rule.clone());
        set.push(rule)?;
    }
    Ok(set)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::AlgebraContext;
    use crate::terms::{Generator, Word};
    use num_rational::BigRational;
    use num_traits::One;

    type Q = BigRational;

    fn x(i: u32) -> Word {
        Word::generator(Generator(i))
    }

    fn cat(parts: &[Word]) -> Word {
        Word::new(parts.iter().flat_map(|w| w.primes().to_vec()).collect()).unwrap()
    }

    #[test]
    fn empty_set_is_fixed() {
        let ctx = AlgebraContext::<Q>::with_generators(&["x"]).unwrap();
        let done = complete(&RelationSet::empty(ctx), Bounds::new(4, 2), KindSet::ALL, 3).unwrap();
        assert!(done.relations.is_empty());
        assert_eq!(done.status, CompletionStatus::Quiescent);
        assert_eq!(done.rounds, 1);
    }

    #[test]
    fn conflicting_rewrites_are_joined() {
        // yy -> x and yy -> y force x - y.
        let ctx = AlgebraContext::<Q>::with_generators(&["x", "y"]).unwrap();
        let yy = cat(&[x(1), x(1)]);
        let set = RelationSet::new(
            ctx,
            [
                Polynomial::from_terms([(yy.clone(), Q::one()), (x(0), -Q::one())]),
                Polynomial::from_terms([(yy, Q::one()), (x(1), -Q::one())]),
            ],
        )
        .unwrap();
        let done = complete(&set, Bounds::new(3, 1), KindSet::AMBIGUITIES, 5).unwrap();
        assert_eq!(done.status, CompletionStatus::Quiescent);
        assert_eq!(
            done.added[0],
            Polynomial::from_terms([(x(1), Q::one()), (x(0), -Q::one())])
        );
        // Both yy rules are evicted and rebuilt against y -> x.
        assert!(done
            .relations
            .relations()
            .iter()
            .all(|r| r.leading_word() != Some(&cat(&[x(1), x(1)]))));
    }

    #[test]
    fn round_limit_is_reported() {
        let ctx = AlgebraContext::<Q>::with_generators(&["x", "y"]).unwrap();
        let yy = cat(&[x(1), x(1)]);
        let set = RelationSet::new(
            ctx,
            [
                Polynomial::from_terms([(yy.clone(), Q::one()), (x(0), -Q::one())]),
                Polynomial::from_terms([(yy, Q::one()), (x(1), -Q::one())]),
            ],
        )
        .unwrap();
        let done = complete(&set, Bounds::new(3, 1), KindSet::AMBIGUITIES, 1).unwrap();
        assert_eq!(done.status, CompletionStatus::RoundLimit);
    }
}
