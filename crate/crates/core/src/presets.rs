//! Relation sets for commutative Rota-Baxter algebras and for the
//! enveloping algebras of dendriform dialgebras and trialgebras, plus the
//! structure-constant file format for the latter.

use std::collections::BTreeSet;

use serde::Serialize;

use crate::algebra::{AlgebraContext, Polynomial};
use crate::error::{Error, ParseError, Result};
use crate::gsb::RelationSet;
use crate::scalar::Coefficient;
use crate::terms::{enumerate_words, Generator, Prime, Word};
use crate::textio::parse_rational;

/// Structure constants of a finite-dimensional dendriform algebra:
/// `prec[i][j]` is the coordinate vector of `x_i ≺ x_j`, likewise `succ`
/// for `≻` and `circ` for `∘` (all zero for a dialgebra).
#[derive(Debug, Clone, PartialEq)]
pub struct DendriformData<C> {
    pub names: Vec<String>,
    pub prec: Vec<Vec<Vec<C>>>,
    pub succ: Vec<Vec<Vec<C>>>,
    pub circ: Vec<Vec<Vec<C>>>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum DendriformKind {
    Di,
    Tri,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum Op {
    Prec,
    Succ,
    Circ,
}

impl<C: Coefficient> DendriformData<C> {
    /// All products zero.
    pub fn zero(names: Vec<String>) -> Self {
        let n = names.len();
        let table = vec![vec![vec![C::zero(); n]; n]; n];
        DendriformData {
            names,
            prec: table.clone(),
            succ: table.clone(),
            circ: table,
        }
    }

    pub fn dimension(&self) -> usize {
        self.names.len()
    }

    fn table(&self, op: Op) -> &Vec<Vec<Vec<C>>> {
        match op {
            Op::Prec => &self.prec,
            Op::Succ => &self.succ,
            Op::Circ => &self.circ,
        }
    }

    fn check_shape(&self) -> Result<()> {
        let n = self.dimension();
        for (name, table) in [("prec", &self.prec), ("succ", &self.succ), ("circ", &self.circ)] {
            let ok = table.len() == n
                && table
                    .iter()
                    .all(|row| row.len() == n && row.iter().all(|v| v.len() == n));
            if !ok {
                return Err(Error::Dimension(format!("`{name}` table is not {n}x{n}x{n}")));
            }
        }
        Ok(())
    }

    /// Bilinear product of two coordinate vectors.
    fn apply(&self, op: Op, a: &[C], b: &[C]) -> Vec<C> {
        let n = self.dimension();
        let table = self.table(op);
        let mut out = vec![C::zero(); n];
        for (i, ai) in a.iter().enumerate().filter(|(_, c)| !c.is_zero()) {
            for (j, bj) in b.iter().enumerate().filter(|(_, c)| !c.is_zero()) {
                let scale = ai.clone() * bj.clone();
                for (k, c) in table[i][j].iter().enumerate() {
                    out[k] = out[k].clone() + scale.clone() * c.clone();
                }
            }
        }
        out
    }

    /// `x * y = x ≺ y + x ≻ y + x ∘ y`.
    fn star(&self, a: &[C], b: &[C]) -> Vec<C> {
        let sum = add(&self.apply(Op::Prec, a, b), &self.apply(Op::Succ, a, b));
        add(&sum, &self.apply(Op::Circ, a, b))
    }

    fn unit(&self, i: usize) -> Vec<C> {
        let mut v = vec![C::zero(); self.dimension()];
        v[i] = C::one();
        v
    }

    /// `[x_i, x_j]`, `[[x_i, x_j]]` and `⟨x_i, x_j⟩` as polynomials.
    fn bracket(&self, op: Op, i: usize, j: usize) -> Polynomial<C> {
        Polynomial::from_terms(
            self.table(op)[i][j]
                .iter()
                .enumerate()
                .map(|(k, c)| (gen_word(k), c.clone())),
        )
    }
}

fn add<C: Coefficient>(a: &[C], b: &[C]) -> Vec<C> {
    a.iter().zip(b).map(|(x, y)| x.clone() + y.clone()).collect()
}

fn gen_word(i: usize) -> Word {
    Word::generator(Generator(i as u32))
}

/// Parses structure constants:
///
/// ```text
/// dimension 2
/// basis a b
/// prec 1 2 -> 1 -1/2
/// succ 2 2 -> 0 1
/// ```
///
/// Indices are 1-based; rows not given are zero; `#` starts a comment.
pub fn parse_dendriform<C: Coefficient>(text: &str) -> Result<DendriformData<C>> {
    let mut dimension: Option<usize> = None;
    let mut data: Option<DendriformData<C>> = None;
    let mut seen = BTreeSet::new();
    for (idx, raw) in text.lines().enumerate() {
        let line_no = idx + 1;
        let line = raw.split('#').next().unwrap_or("");
        let fields = fields_with_columns(line);
        let Some(&(keyword, kw_col)) = fields.first() else {
            continue;
        };
        let err = |col: usize, msg: String| -> Error { ParseError::new(line_no, col, msg).into() };
        match keyword {
            "dimension" => {
                if dimension.is_some() {
                    return Err(err(kw_col, "`dimension` given twice".into()));
                }
                let &(value, col) = fields.get(1).ok_or_else(|| err(kw_col, "missing dimension".into()))?;
                let n: usize = value
                    .parse()
                    .map_err(|_| err(col, format!("`{value}` is not a dimension")))?;
                if n == 0 || fields.len() != 2 {
                    return Err(err(col, "dimension must be a single positive integer".into()));
                }
                dimension = Some(n);
            }
            "basis" => {
                let n = dimension.ok_or_else(|| err(kw_col, "`basis` before `dimension`".into()))?;
                if data.is_some() {
                    return Err(err(kw_col, "`basis` given twice".into()));
                }
                let names: Vec<String> = fields[1..].iter().map(|(s, _)| s.to_string()).collect();
                if names.len() != n {
                    return Err(err(kw_col, format!("expected {n} basis names, found {}", names.len())));
                }
                // Reuse the context's name validation.
                AlgebraContext::<C>::with_generators(&names.iter().map(String::as_str).collect::<Vec<_>>())
                    .map_err(|e| err(kw_col, e.to_string()))?;
                data = Some(DendriformData::zero(names));
            }
            "prec" | "succ" | "circ" => {
                let d = data
                    .as_mut()
                    .ok_or_else(|| err(kw_col, "product row before `basis`".into()))?;
                let n = d.dimension();
                if fields.len() < 4 || fields[3].0 != "->" {
                    return Err(err(kw_col, "expected `op i j -> c1 ... cn`".into()));
                }
                let index = |k: usize| -> Result<usize> {
                    let (s, col) = fields[k];
                    match s.parse::<usize>() {
                        Ok(i) if (1..=n).contains(&i) => Ok(i - 1),
                        _ => Err(err(col, format!("index `{s}` is not in 1..={n}"))),
                    }
                };
                let (i, j) = (index(1)?, index(2)?);
                if !seen.insert((keyword, i, j)) {
                    return Err(err(kw_col, format!("duplicate row `{keyword} {} {}`", i + 1, j + 1)));
                }
                let coeffs = &fields[4..];
                if coeffs.len() != n {
                    return Err(err(
                        kw_col,
                        format!("expected {n} coefficients, found {}", coeffs.len()),
                    ));
                }
                let values = coeffs
                    .iter()
                    .map(|&(s, col)| parse_rational::<C>(s).map_err(|_| err(col, format!("`{s}` is not a rational"))))
                    .collect::<Result<Vec<C>>>()?;
                let table = match keyword {
                    "prec" => &mut d.prec,
                    "succ" => &mut d.succ,
                    _ => &mut d.circ,
                };
                table[i][j] = values;
            }
            other => return Err(err(kw_col, format!("unknown keyword `{other}`"))),
        }
    }
    data.ok_or_else(|| ParseError::new(1, 1, "missing `dimension` and `basis` headers").into())
}

fn fields_with_columns(line: &str) -> Vec<(&str, usize)> {
    let mut out = Vec::new();
    let mut start = None;
    for (i, c) in line.char_indices().chain(std::iter::once((line.len(), ' '))) {
        match (c.is_whitespace(), start) {
            (false, None) => start = Some(i),
            (true, Some(s)) => {
                out.push((&line[s..i], line[..s].chars().count() + 1));
                start = None;
            }
            _ => {}
        }
    }
    out
}

/// One failed axiom instance on basis elements `(i, j, l)` (0-based).
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct AxiomViolation {
    pub axiom: usize,
    pub i: usize,
    pub j: usize,
    pub l: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct AxiomReport {
    pub kind: DendriformKind,
    pub violations: Vec<AxiomViolation>,
}

impl AxiomReport {
    pub fn pass(&self) -> bool {
        self.violations.is_empty()
    }

    /// Axiom numbers with at least one violation.
    pub fn failed_axioms(&self) -> BTreeSet<usize> {
        self.violations.iter().map(|v| v.axiom).collect()
    }
}

/// Evaluates every dendriform axiom on every basis triple.
pub fn dendriform_axiom_check<C: Coefficient>(data: &DendriformData<C>, kind: DendriformKind) -> Result<AxiomReport> {
    data.check_shape()?;
    let n = data.dimension();
    let mut violations = Vec::new();
    for i in 0..n {
        for j in 0..n {
            for l in 0..n {
                let (x, y, z) = (data.unit(i), data.unit(j), data.unit(l));
                let sides = match kind {
                    DendriformKind::Di => di_axioms(data, &x, &y, &z),
                    DendriformKind::Tri => tri_axioms(data, &x, &y, &z),
                };
                for (k, (lhs, rhs)) in sides.into_iter().enumerate() {
                    if lhs != rhs {
                        violations.push(AxiomViolation { axiom: k + 1, i, j, l });
                    }
                }
            }
        }
    }
    Ok(AxiomReport { kind, violations })
}

type Sides<C> = Vec<(Vec<C>, Vec<C>)>;

fn di_axioms<C: Coefficient>(d: &DendriformData<C>, x: &[C], y: &[C], z: &[C]) -> Sides<C> {
    use Op::{Prec, Succ};
    let xy_prec = d.apply(Prec, x, y);
    let xy_succ = d.apply(Succ, x, y);
    let yz_prec = d.apply(Prec, y, z);
    let yz_succ = d.apply(Succ, y, z);
    vec![
        (d.apply(Prec, &xy_prec, z), d.apply(Prec, x, &add(&yz_prec, &yz_succ))),
        (d.apply(Prec, &xy_succ, z), d.apply(Succ, x, &yz_prec)),
        (d.apply(Succ, &add(&xy_prec, &xy_succ), z), d.apply(Succ, x, &yz_succ)),
    ]
}

fn tri_axioms<C: Coefficient>(d: &DendriformData<C>, x: &[C], y: &[C], z: &[C]) -> Sides<C> {
    use Op::{Circ, Prec, Succ};
    let xy_prec = d.apply(Prec, x, y);
    let xy_succ = d.apply(Succ, x, y);
    let xy_circ = d.apply(Circ, x, y);
    vec![
        (d.apply(Prec, &xy_prec, z), d.apply(Prec, x, &d.star(y, z))),
        (d.apply(Prec, &xy_succ, z), d.apply(Succ, x, &d.apply(Prec, y, z))),
        (d.apply(Succ, &d.star(x, y), z), d.apply(Succ, x, &d.apply(Succ, y, z))),
        (d.apply(Circ, &xy_succ, z), d.apply(Succ, x, &d.apply(Circ, y, z))),
        (d.apply(Circ, &xy_prec, z), d.apply(Circ, x, &d.apply(Succ, y, z))),
        (d.apply(Prec, &xy_circ, z), d.apply(Circ, x, &d.apply(Prec, y, z))),
        (d.apply(Circ, &xy_circ, z), d.apply(Circ, x, &d.apply(Circ, y, z))),
    ]
}

/// Smallest instantiation degree for `P(u)x_i - x_iP(u)` that lets every
/// instance take part in an ambiguity of total degree `ambiguity_deg`.
pub fn default_instantiation_deg(ambiguity_deg: usize) -> usize {
    ambiguity_deg.saturating_sub(2).max(1)
}

/// `x_i x_j - x_j x_i` for `i > j`, then `P(u)x_i - x_i P(u)` for every word
/// `u` of total degree at most `instantiation_deg` (ordered by `u`, then `i`).
pub fn commutative_relations<C: Coefficient>(
    ctx: &AlgebraContext<C>,
    instantiation_deg: usize,
) -> Result<RelationSet<C>> {
    if instantiation_deg == 0 {
        return Err(Error::InvalidBound("instantiation degree must be at least 1"));
    }
    let gens = ctx.generators();
    let mut rels = Vec::new();
    for i in 0..gens.len() {
        for j in 0..i {
            rels.push(binomial(
                concat(&[gen_word(i), gen_word(j)]),
                concat(&[gen_word(j), gen_word(i)]),
            ));
        }
    }
    for u in enumerate_words(&gens, instantiation_deg)? {
        let pu = u.wrap();
        for i in 0..gens.len() {
            rels.push(binomial(
                concat(&[pu.clone(), gen_word(i)]),
                concat(&[gen_word(i), pu.clone()]),
            ));
        }
    }
    RelationSet::new(ctx.clone(), rels)
}

fn binomial<C: Coefficient>(a: Word, b: Word) -> Polynomial<C> {
    Polynomial::from_terms([(a, C::one()), (b, -C::one())])
}

fn concat(parts: &[Word]) -> Word {
    Word::new(parts.iter().flat_map(|w| w.primes().iter().cloned()).collect()).expect("valid concatenation")
}

/// The closed-form normal-form basis of the commutative presentation:
/// `Y1` (non-decreasing generator words), `Y2` (`P^l(u)` and `P^l(u·y)`
/// with `u` in `Y1`, `y` in `Y2`, `l ≥ 1`) and `Y3 = Y1·Y2`, up to total
/// degree `max_deg`, ascending.
pub fn commutative_basis_closed_form(gens: &[Generator], max_deg: usize) -> Result<Vec<Word>> {
    if gens.is_empty() {
        return Err(Error::NoGenerators);
    }
    if max_deg == 0 {
        return Err(Error::InvalidBound("max_deg must be at least 1"));
    }
    // y1[d]: sorted generator words of degree d.
    let mut y1: Vec<Vec<Word>> = vec![Vec::new(); max_deg + 1];
    let mut seqs: Vec<Vec<Generator>> = gens.iter().map(|g| vec![*g]).collect();
    for slot in y1.iter_mut().skip(1) {
        *slot = seqs
            .iter()
            .map(|s| Word::new(s.iter().map(|g| Prime::Gen(*g)).collect()).expect("nonempty"))
            .collect();
        seqs = seqs
            .iter()
            .flat_map(|s| {
                let last = *s.last().expect("nonempty");
                gens.iter().filter(move |g| **g >= last).map(move |g| {
                    let mut t = s.clone();
                    t.push(*g);
                    t
                })
            })
            .collect();
    }

    // y2[d]: elements of Y2 of degree d; inner[d] are the payloads `u` and
    // `u·y` of degree d that get wrapped.
    let mut y2: Vec<Vec<Word>> = vec![Vec::new(); max_deg + 1];
    let mut inner: Vec<Vec<Word>> = vec![Vec::new(); max_deg + 1];
    for d in 1..=max_deg {
        inner[d] = y1[d].clone();
        for du in 1..d {
            for u in &y1[du] {
                for y in &y2[d - du] {
                    inner[d].push(concat(&[u.clone(), y.clone()]));
                }
            }
        }
        for l in 1..d {
            let wrapped: Vec<Word> = inner[d - l].iter().map(|w| w.wrap_n(l)).collect();
            y2[d].extend(wrapped);
        }
    }

    let mut out: Vec<Word> = Vec::new();
    for d in 1..=max_deg {
        out.extend(y1[d].iter().cloned());
        out.extend(y2[d].iter().cloned());
        for du in 1..d {
            for u in &y1[du] {
                for y in &y2[d - du] {
                    out.push(concat(&[u.clone(), y.clone()]));
                }
            }
        }
    }
    out.sort();
    out.dedup();
    Ok(out)
}

/// Which of the three dialgebra relation families to emit.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct DialgebraFamilies {
    pub f1: bool,
    pub f2: bool,
    pub f3: bool,
}

impl DialgebraFamilies {
    pub const ALL: DialgebraFamilies = DialgebraFamilies {
        f1: true,
        f2: true,
        f3: true,
    };
}

/// Presentation of the enveloping Rota-Baxter algebra of a dendriform
/// dialgebra, for `λ ≠ 0`:
///
/// - `f1 = x_iP(x_j) + λx_ix_j - [x_i,x_j]`
/// - `f2 = P(x_i)x_j - [[x_i,x_j]]`
/// - `f3 = x_ix_jx_l - λ⁻¹[x_i,x_j]x_l + λ⁻¹x_i[[x_j,x_l]]`
///
/// with `[·,·]` for `≺` and `[[·,·]]` for `≻`.
pub fn dialgebra_enveloping_relations<C: Coefficient>(
    data: &DendriformData<C>,
    lambda: C,
    families: DialgebraFamilies,
) -> Result<RelationSet<C>> {
    data.check_shape()?;
    if lambda.is_zero() {
        return Err(Error::ZeroWeight);
    }
    let ctx = AlgebraContext::new(lambda.clone(), data.names.clone())?;
    let n = data.dimension();
    let inv = C::one() / lambda.clone();
    let x = |i: usize| Polynomial::<C>::monomial(gen_word(i));
    let px = |i: usize| Polynomial::<C>::monomial(gen_word(i).wrap());
    let mut rels = Vec::new();
    if families.f1 {
        for i in 0..n {
            for j in 0..n {
                let mut f = ctx.multiply(&x(i), &px(j));
                f.add_scaled(&ctx.multiply(&x(i), &x(j)), &lambda);
                f.add_scaled(&data.bracket(Op::Prec, i, j), &-C::one());
                rels.push(f);
            }
        }
    }
    if families.f2 {
        for i in 0..n {
            for j in 0..n {
                let mut f = ctx.multiply(&px(i), &x(j));
                f.add_scaled(&data.bracket(Op::Succ, i, j), &-C::one());
                rels.push(f);
            }
        }
    }
    if families.f3 {
        for i in 0..n {
            for j in 0..n {
                for l in 0..n {
                    let mut f = ctx.multiply(&ctx.multiply(&x(i), &x(j)), &x(l));
                    f.add_scaled(&ctx.multiply(&data.bracket(Op::Prec, i, j), &x(l)), &-inv.clone());
                    f.add_scaled(&ctx.multiply(&x(i), &data.bracket(Op::Succ, j, l)), &inv);
                    rels.push(f);
                }
            }
        }
    }
    RelationSet::new(ctx, rels)
}

/// Presentation of the enveloping Rota-Baxter algebra of a dendriform
/// trialgebra, for `λ ≠ 0`, with every relation made monic:
///
/// - `f4 = x_iP(x_j) - [x_i,x_j]`
/// - `f5 = P(x_i)x_j - [[x_i,x_j]]`
/// - `f6 = λx_ix_j - ⟨x_i,x_j⟩`
pub fn trialgebra_enveloping_relations<C: Coefficient>(data: &DendriformData<C>, lambda: C) -> Result<RelationSet<C>> {
    data.check_shape()?;
    if lambda.is_zero() {
        return Err(Error::ZeroWeight);
    }
    let ctx = AlgebraContext::new(lambda.clone(), data.names.clone())?;
    let n = data.dimension();
    let x = |i: usize| Polynomial::<C>::monomial(gen_word(i));
    let px = |i: usize| Polynomial::<C>::monomial(gen_word(i).wrap());
    let mut rels = Vec::new();
    for i in 0..n {
        for j in 0..n {
            let mut f = ctx.multiply(&x(i), &px(j));
            f.add_scaled(&data.bracket(Op::Prec, i, j), &-C::one());
            rels.push(f);
        }
    }
    for i in 0..n {
        for j in 0..n {
            let mut f = ctx.multiply(&px(i), &x(j));
            f.add_scaled(&data.bracket(Op::Succ, i, j), &-C::one());
            rels.push(f);
        }
    }
    for i in 0..n {
        for j in 0..n {
            let mut f = ctx.multiply(&x(i), &x(j)).scale(&lambda);
            f.add_scaled(&data.bracket(Op::Circ, i, j), &-C::one());
            rels.push(f);
        }
    }
    RelationSet::new(ctx, rels)
}
