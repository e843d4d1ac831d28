//! Reduction modulo a relation set, compositions, triviality checking,
//! bounded completion and normal-form bases.

mod basis;
mod complete;
mod compositions;
mod reduce;

use std::collections::HashMap;
use std::fmt;

pub use basis::{ideal_oracle, ideal_span_dim, irr_enumerate, EchelonBasis, OracleRow, OracleSummary};
pub use complete::{complete, Completion, CompletionStatus};
pub use compositions::{
    check_compositions, check_gsb, enumerate_compositions, is_trivial, Bounds, CheckedComposition, Composition,
    CompositionKind, CompositionRecord, CompositionStatus, GsbReport, GsbSummary, KindCount, KindSet,
};
pub use reduce::{reduce, reduce_with, Reduction, ReductionStep, Strategy};

use crate::algebra::{AlgebraContext, Polynomial};
use crate::error::{Error, Result};
use crate::scalar::Coefficient;
use crate::starwords::StarWord;
use crate::terms::{Prime, Word};

/// An ordered list of monic relations in a fixed context.
#[derive(Clone)]
pub struct RelationSet<C> {
    ctx: AlgebraContext<C>,
    relations: Vec<Polynomial<C>>,
    /// Leading-word prime sequence -> relation indices, ascending.
    index: HashMap<Vec<Prime>, Vec<usize>>,
    breadths: Vec<usize>,
}

/// One normal occurrence of a relation's leading word inside a host word.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Match {
    pub rule: usize,
    pub frame: StarWord,
}

impl<C: Coefficient> fmt::Debug for RelationSet<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("RelationSet")
            .field("ctx", &self.ctx)
            .field("relations", &self.relations)
            .finish()
    }
}

impl<C: Coefficient> RelationSet<C> {
    pub fn empty(ctx: AlgebraContext<C>) -> Self {
        RelationSet {
            ctx,
            relations: Vec::new(),
            index: HashMap::new(),
            breadths: Vec::new(),
        }
    }

    /// Makes every relation monic; zero relations are rejected.
    pub fn new(ctx: AlgebraContext<C>, relations: impl IntoIterator<Item = Polynomial<C>>) -> Result<Self> {
        let mut set = RelationSet::empty(ctx);
        for r in relations {
            set.push(r)?;
        }
        Ok(set)
    }

    pub fn push(&mut self, relation: Polynomial<C>) -> Result<()> {
        self.ctx.check_poly(&relation)?;
        let monic = relation.make_monic()?;
        let lead = monic.leading_word().expect("nonzero").primes().to_vec();
        let breadth = lead.len();
        self.index.entry(lead).or_default().push(self.relations.len());
        if let Err(pos) = self.breadths.binary_search(&breadth) {
            self.breadths.insert(pos, breadth);
        }
        self.relations.push(monic);
        Ok(())
    }

    pub fn ctx(&self) -> &AlgebraContext<C> {
        &self.ctx
    }

    pub fn lambda(&self) -> &C {
        self.ctx.lambda()
    }

    pub fn relations(&self) -> &[Polynomial<C>] {
        &self.relations
    }

    pub fn get(&self, i: usize) -> &Polynomial<C> {
        &self.relations[i]
    }

    pub fn leading(&self, i: usize) -> &Word {
        self.relations[i].leading_word().expect("relations are nonzero")
    }

    pub fn len(&self) -> usize {
        self.relations.len()
    }

    pub fn is_empty(&self) -> bool {
        self.relations.is_empty()
    }

    pub fn into_relations(self) -> Vec<Polynomial<C>> {
        self.relations
    }

    /// Every normal occurrence of any leading word in `host`, in
    /// leftmost-outermost order (ties at one position by rule index).
    pub fn matches(&self, host: &Word) -> Vec<Match> {
        let mut out = Vec::new();
        self.collect_matches(host.primes(), &mut out);
        out
    }

    fn collect_matches(&self, host: &[Prime], out: &mut Vec<Match>) {
        for i in 0..host.len() {
            for &width in &self.breadths {
                if i + width > host.len() {
                    break;
                }
                if let Some(rules) = self.index.get(&host[i..i + width]) {
                    let frame = StarWord::around(&host[..i], &host[i + width..]);
                    out.extend(rules.iter().map(|&rule| Match {
                        rule,
                        frame: frame.clone(),
                    }));
                }
            }
            if let Prime::P(inner) = &host[i] {
                let mut nested = Vec::new();
                self.collect_matches(inner.primes(), &mut nested);
                out.extend(nested.into_iter().map(|m| Match {
                    rule: m.rule,
                    frame: StarWord::wrapping(&host[..i], m.frame, &host[i + 1..]),
                }));
            }
        }
    }

    /// The rewrite chosen for `host`: lowest rule index, then the
    /// leftmost-outermost occurrence of that rule.
    pub fn first_match(&self, host: &Word) -> Option<Match> {
        let mut best: Option<Match> = None;
        for m in self.matches(host) {
            if best.as_ref().is_none_or(|b| m.rule < b.rule) {
                best = Some(m);
            }
        }
        best
    }

    pub fn is_reducible(&self, host: &Word) -> bool {
        self.has_match(host.primes())
    }

    fn has_match(&self, host: &[Prime]) -> bool {
        for i in 0..host.len() {
            for &width in &self.breadths {
                if i + width > host.len() {
                    break;
                }
                if self.index.contains_key(&host[i..i + width]) {
                    return true;
                }
            }
            if let Prime::P(inner) = &host[i] {
                if self.has_match(inner.primes()) {
                    return true;
                }
            }
        }
        false
    }

    /// The relations with the given indices removed, order preserved.
    pub(crate) fn without(&self, drop: &[usize]) -> Self {
        let kept = self
            .relations
            .iter()
            .enumerate()
            .filter(|(i, _)| !drop.contains(i))
            .map(|(_, r)| r.clone());
        RelationSet::new(self.ctx.clone(), kept).expect("relations were valid")
    }
}

pub(crate) fn ensure_positive(value: usize, what: &'static str) -> Result<()> {
    if value == 0 {
        Err(Error::InvalidBound(what))
    } else {
        Ok(())
    }
}
