use std::fmt;
use std::str::FromStr;

use rayon::prelude::*;
use serde::Serialize;

use crate::algebra::{multiply, AlgebraContext, Polynomial};
use crate::error::{Error, Result};
use crate::scalar::Coefficient;
use crate::starwords::{find_occurrences, proper_overlaps, StarWord};
use crate::terms::{enumerate_words, Word};
use crate::textio::{print_poly, print_star_word, print_word};

use super::reduce::{reduce, Reduction};
use super::{ensure_positive, RelationSet};

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum CompositionKind {
    Intersection,
    Inclusion,
    RightMult,
    LeftMult,
}

impl CompositionKind {
    pub const ALL: [CompositionKind; 4] = [
        CompositionKind::Intersection,
        CompositionKind::Inclusion,
        CompositionKind::RightMult,
        CompositionKind::LeftMult,
    ];

    pub fn name(self) -> &'static str {
        match self {
            CompositionKind::Intersection => "intersection",
            CompositionKind::Inclusion => "inclusion",
            CompositionKind::RightMult => "right_mult",
            CompositionKind::LeftMult => "left_mult",
        }
    }

    pub fn is_multiplication(self) -> bool {
        matches!(self, CompositionKind::RightMult | CompositionKind::LeftMult)
    }
}

impl fmt::Display for CompositionKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// A subset of the four composition kinds.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct KindSet([bool; 4]);

impl KindSet {
    pub const ALL: KindSet = KindSet([true; 4]);
    /// Intersection and inclusion only.
    pub const AMBIGUITIES: KindSet = KindSet([true, true, false, false]);

    pub fn empty() -> Self {
        KindSet([false; 4])
    }

    pub fn with(mut self, kind: CompositionKind) -> Self {
        self.0[kind as usize] = true;
        self
    }

    pub fn contains(&self, kind: CompositionKind) -> bool {
        self.0[kind as usize]
    }

    pub fn kinds(&self) -> Vec<CompositionKind> {
        CompositionKind::ALL.into_iter().filter(|k| self.contains(*k)).collect()
    }

    pub fn has_multiplication(&self) -> bool {
        self.contains(CompositionKind::RightMult) || self.contains(CompositionKind::LeftMult)
    }
}

/// Parses `all`, `ambiguities`, or a comma-separated list of kind names.
impl FromStr for KindSet {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        let mut set = KindSet::empty();
        for part in s.split(',').map(str::trim) {
            set = match part {
                "all" => KindSet::ALL,
                "ambiguities" => set.with(CompositionKind::Intersection).with(CompositionKind::Inclusion),
                _ => {
                    let kind = CompositionKind::ALL
                        .into_iter()
                        .find(|k| k.name() == part)
                        .ok_or_else(|| format!("unknown composition kind `{part}`"))?;
                    set.with(kind)
                }
            };
        }
        Ok(set)
    }
}

/// Degree limits for composition enumeration.
///
/// `ambiguity_deg` bounds the total degree of the ambiguity (or of the
/// product for multiplication kinds); `multiplier_deg` bounds `v` in the
/// multipliers `P(v)` and is only consulted when a multiplication kind is
/// requested.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct Bounds {
    pub ambiguity_deg: usize,
    pub multiplier_deg: usize,
}

impl Bounds {
    pub fn new(ambiguity_deg: usize, multiplier_deg: usize) -> Self {
        Bounds {
            ambiguity_deg,
            multiplier_deg,
        }
    }

    fn validate(&self, kinds: KindSet) -> Result<()> {
        ensure_positive(self.ambiguity_deg, "ambiguity degree must be at least 1")?;
        if kinds.has_multiplication() {
            ensure_positive(self.multiplier_deg, "multiplier degree must be at least 1")?;
        }
        Ok(())
    }
}

/// One critical pair together with its difference polynomial.
#[derive(Clone, PartialEq)]
pub struct Composition<C> {
    pub kind: CompositionKind,
    pub f: usize,
    /// Second relation; absent for multiplication kinds.
    pub g: Option<usize>,
    /// The ambiguity `w`, or the leading word of the product for
    /// multiplication kinds. Compositions are processed in increasing order
    /// of this word.
    pub word: Word,
    /// The multiplier `P(v)` for multiplication kinds.
    pub multiplier: Option<Word>,
    /// The frame `c` with `f̄ = c|_ḡ` for inclusions.
    pub frame: Option<StarWord>,
    pub difference: Polynomial<C>,
}

impl<C: Coefficient> Composition<C> {
    /// The ambiguity word, if this is an intersection or inclusion.
    pub fn ambiguity(&self) -> Option<&Word> {
        (!self.kind.is_multiplication()).then_some(&self.word)
    }

    fn ambiguous(
        kind: CompositionKind,
        f: usize,
        g: usize,
        w: Word,
        frame: Option<StarWord>,
        difference: Polynomial<C>,
    ) -> Self {
        if let Some(lead) = difference.leading_word() {
            assert!(lead < &w, "composition difference must lie below its ambiguity");
        }
        Composition {
            kind,
            f,
            g: Some(g),
            word: w,
            multiplier: None,
            frame,
            difference,
        }
    }
}

impl<C: Coefficient> fmt::Debug for Composition<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Composition")
            .field("kind", &self.kind)
            .field("f", &self.f)
            .field("g", &self.g)
            .field("word", &self.word)
            .field("multiplier", &self.multiplier)
            .field("frame", &self.frame)
            .field("difference", &self.difference)
            .finish()
    }
}

/// All compositions of the requested kinds within `bounds`, sorted by
/// ambiguity word (stable, so ties keep enumeration order: kind, then `f`,
/// then `g`).
pub fn enumerate_compositions<C: Coefficient>(
    set: &RelationSet<C>,
    bounds: Bounds,
    kinds: KindSet,
) -> Result<Vec<Composition<C>>> {
    bounds.validate(kinds)?;
    let lambda = set.lambda();
    let max = bounds.ambiguity_deg;
    let mut out = Vec::new();

    if kinds.contains(CompositionKind::Intersection) {
        for f in 0..set.len() {
            for g in 0..set.len() {
                for o in proper_overlaps(set.leading(f), set.leading(g)) {
                    if o.w.total_deg() > max {
                        continue;
                    }
                    let fa = multiply(set.get(f), &Polynomial::monomial(o.a.clone()), lambda);
                    let bg = multiply(&Polynomial::monomial(o.b.clone()), set.get(g), lambda);
                    out.push(Composition::ambiguous(
                        CompositionKind::Intersection,
                        f,
                        g,
                        o.w,
                        None,
                        &fa - &bg,
                    ));
                }
            }
        }
    }

    if kinds.contains(CompositionKind::Inclusion) {
        for f in 0..set.len() {
            let w = set.leading(f);
            if w.total_deg() > max {
                continue;
            }
            for g in 0..set.len() {
                if f == g {
                    continue;
                }
                for frame in find_occurrences(w, set.leading(g)) {
                    // Equal leading words give one composition per pair.
                    if frame.is_identity() && g < f {
                        continue;
                    }
                    let diff = set.get(f) - &frame.substitute(set.get(g), lambda);
                    out.push(Composition::ambiguous(
                        CompositionKind::Inclusion,
                        f,
                        g,
                        w.clone(),
                        Some(frame),
                        diff,
                    ));
                }
            }
        }
    }

    if kinds.has_multiplication() {
        let multipliers: Vec<Word> = enumerate_words(&set.ctx().generators(), bounds.multiplier_deg)?
            .into_iter()
            .map(|v| v.wrap())
            .collect();
        for kind in [CompositionKind::RightMult, CompositionKind::LeftMult] {
            if !kinds.contains(kind) {
                continue;
            }
            for f in 0..set.len() {
                let lead = set.leading(f);
                let applies = match kind {
                    CompositionKind::RightMult => lead.last().is_p(),
                    _ => lead.first().is_p(),
                };
                if !applies {
                    continue;
                }
                for u in &multipliers {
                    if lead.total_deg() + u.total_deg() > max {
                        continue;
                    }
                    let mono = Polynomial::monomial(u.clone());
                    let product = match kind {
                        CompositionKind::RightMult => multiply(set.get(f), &mono, lambda),
                        _ => multiply(&mono, set.get(f), lambda),
                    };
                    let word = product
                        .leading_word()
                        .expect("products of nonzero polynomials are nonzero")
                        .clone();
                    out.push(Composition {
                        kind,
                        f,
                        g: None,
                        word,
                        multiplier: Some(u.clone()),
                        frame: None,
                        difference: product,
                    });
                }
            }
        }
    }

    out.sort_by(|a, b| a.word.cmp(&b.word));
    Ok(out)
}

/// Whether the composition reduces to zero modulo `set`.
pub fn is_trivial<C: Coefficient>(comp: &Composition<C>, set: &RelationSet<C>) -> Result<bool> {
    Ok(reduce(&comp.difference, set)?.normal_form.is_zero())
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum CompositionStatus {
    Trivial,
    Nontrivial,
}

/// A composition with the reduction of its difference.
#[derive(Clone, PartialEq)]
pub struct CheckedComposition<C> {
    pub composition: Composition<C>,
    pub reduction: Reduction<C>,
}

impl<C: Coefficient> CheckedComposition<C> {
    pub fn status(&self) -> CompositionStatus {
        if self.reduction.normal_form.is_zero() {
            CompositionStatus::Trivial
        } else {
            CompositionStatus::Nontrivial
        }
    }

    pub fn is_trivial(&self) -> bool {
        self.status() == CompositionStatus::Trivial
    }

    pub fn remainder(&self) -> &Polynomial<C> {
        &self.reduction.normal_form
    }

    pub fn record(&self, ctx: &AlgebraContext<C>) -> CompositionRecord {
        let c = &self.composition;
        CompositionRecord {
            kind: c.kind,
            f: c.f + 1,
            g: c.g.map(|g| g + 1),
            ambiguity: c.ambiguity().map(|w| print_word(w, ctx)),
            multiplier: c.multiplier.as_ref().map(|u| print_word(u, ctx)),
            frame: c.frame.as_ref().map(|s| print_star_word(s, ctx)),
            leading: print_word(&c.word, ctx),
            difference: print_poly(&c.difference, ctx),
            status: self.status(),
            remainder: print_poly(self.remainder(), ctx),
            steps: self.reduction.steps.len(),
        }
    }
}

impl<C: Coefficient> fmt::Debug for CheckedComposition<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("CheckedComposition")
            .field("composition", &self.composition)
            .field("reduction", &self.reduction)
            .finish()
    }
}

/// Text form of one checked composition, as serialized in reports.
/// Relations are numbered from 1 in file order.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CompositionRecord {
    pub kind: CompositionKind,
    pub f: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub g: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub ambiguity: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub multiplier: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub frame: Option<String>,
    pub leading: String,
    pub difference: String,
    pub status: CompositionStatus,
    pub remainder: String,
    pub steps: usize,
}

/// Reduces every composition, using `jobs` worker threads (0 picks the
/// number of CPUs). Results come back in input order.
pub fn check_compositions<C: Coefficient>(
    set: &RelationSet<C>,
    comps: Vec<Composition<C>>,
    jobs: usize,
) -> Result<Vec<CheckedComposition<C>>> {
    let check = |composition: Composition<C>| -> Result<CheckedComposition<C>> {
        let reduction = reduce(&composition.difference, set)?;
        Ok(CheckedComposition { composition, reduction })
    };
    if jobs == 1 {
        return comps.into_iter().map(check).collect();
    }
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(jobs)
        .build()
        .map_err(|e| Error::WorkerPool(e.to_string()))?;
    pool.install(|| comps.into_par_iter().map(check).collect())
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct KindCount {
    pub kind: CompositionKind,
    pub total: usize,
    pub nontrivial: usize,
}

/// Outcome of a bounded Gröbner-Shirshov check.
#[derive(Clone, PartialEq)]
pub struct GsbReport<C> {
    pub bounds: Bounds,
    pub kinds: KindSet,
    pub checked: Vec<CheckedComposition<C>>,
}

impl<C: Coefficient> fmt::Debug for GsbReport<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("GsbReport")
            .field("bounds", &self.bounds)
            .field("kinds", &self.kinds)
            .field("checked", &self.checked)
            .finish()
    }
}

impl<C: Coefficient> GsbReport<C> {
    pub fn pass(&self) -> bool {
        self.checked.iter().all(CheckedComposition::is_trivial)
    }

    pub fn failures(&self) -> impl Iterator<Item = &CheckedComposition<C>> + '_ {
        self.checked.iter().filter(|c| !c.is_trivial())
    }

    pub fn counts(&self) -> Vec<KindCount> {
        self.kinds
            .kinds()
            .into_iter()
            .map(|kind| {
                let of_kind = self.checked.iter().filter(|c| c.composition.kind == kind);
                let (total, nontrivial) = of_kind.fold((0, 0), |(t, n), c| (t + 1, n + usize::from(!c.is_trivial())));
                KindCount {
                    kind,
                    total,
                    nontrivial,
                }
            })
            .collect()
    }

    /// One-line bounded verdict.
    pub fn verdict(&self) -> String {
        let mut scope = format!("degree {}", self.bounds.ambiguity_deg);
        if self.kinds.has_multiplication() {
            scope.push_str(&format!(", multiplier degree {}", self.bounds.multiplier_deg));
        }
        let kinds: Vec<&str> = self.kinds.kinds().into_iter().map(CompositionKind::name).collect();
        if self.pass() {
            format!("GSB certified up to {scope} ({})", kinds.join(", "))
        } else {
            let n = self.failures().count();
            format!(
                "not a GSB: {n} nontrivial composition(s) up to {scope} ({})",
                kinds.join(", ")
            )
        }
    }

    pub fn summary(&self, ctx: &AlgebraContext<C>) -> GsbSummary {
        GsbSummary {
            pass: self.pass(),
            verdict: self.verdict(),
            bounds: self.bounds,
            kinds: self.kinds.kinds(),
            counts: self.counts(),
            failures: self.failures().map(|c| c.record(ctx)).collect(),
        }
    }
}

/// Serializable form of a [`GsbReport`].
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct GsbSummary {
    pub pass: bool,
    pub verdict: String,
    pub bounds: Bounds,
    pub kinds: Vec<CompositionKind>,
    pub counts: Vec<KindCount>,
    pub failures: Vec<CompositionRecord>,
}

/// Enumerates and checks all compositions within `bounds`.
pub fn check_gsb<C: Coefficient>(
    set: &RelationSet<C>,
    bounds: Bounds,
    kinds: KindSet,
    jobs: usize,
) -> Result<GsbReport<C>> {
    let comps = enumerate_compositions(set, bounds, kinds)?;
    Ok(GsbReport {
        bounds,
        kinds,
        checked: check_compositions(set, comps, jobs)?,
    })
}
