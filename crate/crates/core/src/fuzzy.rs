//! `(∈, ∈∨q_k)`-fuzzy subsets over exact rational grades.
//!
//! Two independent evaluators decide the fuzzy ideal notions: the inequality
//! form ([`is_fuzzy_ideal`]) and the literal fuzzy-point implication form
//! ([`is_fuzzy_ideal_pointwise`]). A third route goes through level sets
//! ([`level_characterization_check`]).

use std::fmt;

use num_traits::{One, Zero};
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::grade::{Grade, KParam, Rational};
use crate::groupoid::Groupoid;
use crate::ideals::{self, IdealKind, Notion};
use crate::subset::ElementSubset;

/// A total map from carrier elements to grades.
#[derive(Clone, PartialEq, Eq, Hash, Serialize)]
#[serde(transparent)]
pub struct FuzzySubset {
    grades: Vec<Grade>,
}

impl FuzzySubset {
    pub fn new(grades: Vec<Grade>) -> Self {
        FuzzySubset { grades }
    }

    pub fn constant(order: usize, value: Grade) -> Self {
        FuzzySubset {
            grades: vec![value; order],
        }
    }

    /// The whole carrier seen as a fuzzy subset (constant 1).
    pub fn carrier(order: usize) -> Self {
        Self::constant(order, Grade::ONE)
    }

    pub fn from_fn(order: usize, f: impl FnMut(usize) -> Grade) -> Self {
        FuzzySubset {
            grades: (0..order).map(f).collect(),
        }
    }

    #[inline]
    pub fn order(&self) -> usize {
        self.grades.len()
    }

    #[inline]
    pub fn get(&self, x: usize) -> Grade {
        self.grades[x]
    }

    #[inline]
    pub(crate) fn val(&self, x: usize) -> Rational {
        self.grades[x].value()
    }

    pub fn grades(&self) -> &[Grade] {
        &self.grades
    }

    /// Pointwise `self ≤ other`.
    pub fn le(&self, other: &FuzzySubset) -> bool {
        self.grades.iter().zip(&other.grades).all(|(a, b)| a <= b)
    }

    /// Least element where `self ≤ other` fails.
    pub fn first_exceeding(&self, other: &FuzzySubset) -> Option<usize> {
        (0..self.order()).find(|&x| self.grades[x] > other.grades[x])
    }

    /// Distinct grades, ascending.
    pub fn distinct_grades(&self) -> Vec<Grade> {
        let mut g = self.grades.clone();
        g.sort();
        g.dedup();
        g
    }

    fn check_same(&self, other: &FuzzySubset) -> Result<()> {
        if self.order() == other.order() {
            Ok(())
        } else {
            Err(Error::OrderMismatch {
                subset: other.order(),
                groupoid: self.order(),
            })
        }
    }

    fn check_groupoid(&self, g: &Groupoid) -> Result<()> {
        if self.order() == g.order() {
            Ok(())
        } else {
            Err(Error::OrderMismatch {
                subset: self.order(),
                groupoid: g.order(),
            })
        }
    }
}

impl fmt::Debug for FuzzySubset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_list().entries(&self.grades).finish()
    }
}

/// `x_t`: grade `t > 0` at `element`, zero elsewhere.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct FuzzyPoint {
    element: usize,
    value: Grade,
}

impl FuzzyPoint {
    pub fn new(element: usize, value: Grade) -> Result<Self> {
        if value.is_zero() {
            return Err(Error::ZeroThreshold);
        }
        Ok(FuzzyPoint { element, value })
    }

    pub fn element(&self) -> usize {
        self.element
    }

    pub fn value(&self) -> Grade {
        self.value
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct PointRelation {
    pub belongs: bool,
    pub quasi_coincident: bool,
    pub in_or_qk: bool,
}

fn relation(fx: Rational, t: Rational, k: KParam) -> PointRelation {
    let belongs = fx >= t;
    let quasi_coincident = fx + t + k.k() > Rational::one();
    PointRelation {
        belongs,
        quasi_coincident,
        in_or_qk: belongs || quasi_coincident,
    }
}

pub fn point_relation(f: &FuzzySubset, p: &FuzzyPoint, k: KParam) -> Result<PointRelation> {
    if p.element >= f.order() {
        return Err(Error::ElementOutOfRange {
            index: p.element,
            order: f.order(),
        });
    }
    Ok(relation(f.val(p.element), p.value.value(), k))
}

#[inline]
fn min3(a: Rational, b: Rational, c: Rational) -> Rational {
    a.min(b).min(c)
}

fn grade(r: Rational) -> Grade {
    Grade::new(r).expect("closed under min/max in [0,1]")
}

/// `(f ∧_k g)(a) = min{f(a), g(a), (1-k)/2}`.
pub fn meet_k(f: &FuzzySubset, g: &FuzzySubset, k: KParam) -> Result<FuzzySubset> {
    f.check_same(g)?;
    Ok(FuzzySubset::from_fn(f.order(), |a| {
        grade(min3(f.val(a), g.val(a), k.half()))
    }))
}

/// `(f ∨_k g)(a) = max{f(a), g(a), (1-k)/2}`.
pub fn join_k(f: &FuzzySubset, g: &FuzzySubset, k: KParam) -> Result<FuzzySubset> {
    f.check_same(g)?;
    Ok(FuzzySubset::from_fn(f.order(), |a| {
        grade(f.val(a).max(g.val(a)).max(k.half()))
    }))
}

/// Plain pointwise minimum.
pub fn meet(f: &FuzzySubset, g: &FuzzySubset) -> Result<FuzzySubset> {
    f.check_same(g)?;
    Ok(FuzzySubset::from_fn(f.order(), |a| f.get(a).min(g.get(a))))
}

/// `f_k = f ∧_k S`.
pub fn truncate_k(f: &FuzzySubset, k: KParam) -> FuzzySubset {
    FuzzySubset::from_fn(f.order(), |a| grade(f.val(a).min(k.half())))
}

/// `(f ∘_k g)(a)`: the largest `f(p) ∧_k g(q)` over factorizations
/// `a = p·q`, or 0 when `a` has none.
pub fn compose_k(g: &Groupoid, f: &FuzzySubset, h: &FuzzySubset, k: KParam) -> Result<FuzzySubset> {
    f.check_groupoid(g)?;
    h.check_groupoid(g)?;
    Ok(compose(g, f, h, k))
}

pub(crate) fn compose(g: &Groupoid, f: &FuzzySubset, h: &FuzzySubset, k: KParam) -> FuzzySubset {
    let n = g.order();
    let mut out = vec![Rational::zero(); n];
    for p in 0..n {
        let fp = f.val(p).min(k.half());
        if fp.is_zero() {
            continue;
        }
        for q in 0..n {
            let v = fp.min(h.val(q));
            let a = g.mul(p, q);
            if v > out[a] {
                out[a] = v;
            }
        }
    }
    FuzzySubset::new(out.into_iter().map(grade).collect())
}

/// `U(f, t) = { x : f(x) ≥ t }` for `t > 0`.
pub fn level_set(f: &FuzzySubset, t: Grade) -> Result<ElementSubset> {
    if t.is_zero() {
        return Err(Error::ZeroThreshold);
    }
    Ok(level(f, t.value()))
}

fn level(f: &FuzzySubset, t: Rational) -> ElementSubset {
    let mut s = ElementSubset::empty(f.order());
    for x in 0..f.order() {
        if f.val(x) >= t {
            s.insert(x);
        }
    }
    s
}

/// `(C_A)_k`: grade `(1-k)/2` on `A`, 0 elsewhere.
pub fn characteristic_k(a: &ElementSubset, k: KParam) -> FuzzySubset {
    FuzzySubset::from_fn(a.order(), |x| {
        if a.contains(x) {
            k.half_grade()
        } else {
            Grade::ZERO
        }
    })
}

/// `C_A`: grade 1 on `A`, 0 elsewhere.
pub fn indicator(a: &ElementSubset) -> FuzzySubset {
    FuzzySubset::from_fn(a.order(), |x| {
        if a.contains(x) {
            Grade::ONE
        } else {
            Grade::ZERO
        }
    })
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct FuzzyVerdict {
    pub holds: bool,
    /// Least violating operand tuple, tagged with the failing inequality.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub counterexample: Option<FuzzyViolation>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct FuzzyViolation {
    pub condition: &'static str,
    pub operands: Vec<usize>,
}

fn pairs(n: usize) -> impl Iterator<Item = (usize, usize)> {
    (0..n).flat_map(move |x| (0..n).map(move |y| (x, y)))
}

fn triples(n: usize) -> impl Iterator<Item = (usize, usize, usize)> {
    (0..n).flat_map(move |x| (0..n).flat_map(move |y| (0..n).map(move |z| (x, y, z))))
}

fn functional_violation(
    g: &Groupoid,
    f: &FuzzySubset,
    k: KParam,
    notion: Notion,
) -> Option<FuzzyViolation> {
    let n = g.order();
    let h = k.half();
    let v = |x| f.val(x);
    let found2 = |name: &'static str, ok: &dyn Fn(usize, usize) -> bool| {
        pairs(n)
            .find(|&(x, y)| !ok(x, y))
            .map(|(x, y)| FuzzyViolation {
                condition: name,
                operands: vec![x, y],
            })
    };
    let found3 = |name: &'static str, ok: &dyn Fn(usize, usize, usize) -> bool| {
        triples(n)
            .find(|&(x, y, z)| !ok(x, y, z))
            .map(|(x, y, z)| FuzzyViolation {
                condition: name,
                operands: vec![x, y, z],
            })
    };
    let sub = || found2("subgroupoid", &|x, y| v(g.mul(x, y)) >= min3(v(x), v(y), h));
    let left = || found2("left", &|x, y| v(g.mul(x, y)) >= v(y).min(h));
    let right = || found2("right", &|x, y| v(g.mul(x, y)) >= v(x).min(h));
    let gbi = || {
        found3("generalized-bi", &|x, y, z| {
            v(g.mul(g.mul(x, y), z)) >= min3(v(x), v(z), h)
        })
    };
    let gint = || {
        found3("generalized-interior", &|x, y, z| {
            v(g.mul(g.mul(x, y), z)) >= v(y).min(h)
        })
    };
    match notion {
        Notion::Kind(IdealKind::Subgroupoid) => sub(),
        Notion::Kind(IdealKind::Left) => left(),
        Notion::Kind(IdealKind::Right) => right(),
        Notion::Kind(IdealKind::TwoSided) => left().or_else(right),
        Notion::Kind(IdealKind::GeneralizedBi) => gbi(),
        Notion::Kind(IdealKind::Bi) => sub().or_else(gbi),
        Notion::Kind(IdealKind::GeneralizedInterior) => gint(),
        Notion::Kind(IdealKind::Interior) => sub().or_else(gint),
        Notion::Kind(IdealKind::Quasi) => {
            let s = FuzzySubset::carrier(n);
            let sf = compose(g, &s, f, k);
            let fs = compose(g, f, &s, k);
            (0..n)
                .find(|&a| v(a) < min3(sf.val(a), fs.val(a), h))
                .map(|a| FuzzyViolation {
                    condition: "quasi",
                    operands: vec![a],
                })
        }
        Notion::Semiprime => {
            (0..n)
                .find(|&a| v(a) < v(g.square(a)).min(h))
                .map(|a| FuzzyViolation {
                    condition: "semiprime",
                    operands: vec![a],
                })
        }
    }
}

/// Decides a fuzzy notion through its inequality characterization.
pub fn is_fuzzy_ideal(
    g: &Groupoid,
    f: &FuzzySubset,
    k: KParam,
    notion: impl Into<Notion>,
) -> Result<FuzzyVerdict> {
    f.check_groupoid(g)?;
    let c = functional_violation(g, f, k, notion.into());
    Ok(FuzzyVerdict {
        holds: c.is_none(),
        counterexample: c,
    })
}

pub(crate) fn fuzzy_holds(g: &Groupoid, f: &FuzzySubset, k: KParam, notion: Notion) -> bool {
    functional_violation(g, f, k, notion).is_none()
}

/// Parameter values worth testing for a premise `x_t ∈ f` when the
/// conclusion concerns `product`: the largest admissible `t`, and the
/// largest `t` for which quasi-coincidence with `product` still fails.
fn critical_params(f: &FuzzySubset, x: usize, product: usize, k: KParam) -> Vec<Rational> {
    let top = f.val(x);
    let mut out = Vec::with_capacity(2);
    if top > Rational::zero() {
        out.push(top);
    }
    let edge = Rational::one() - k.k() - f.val(product);
    if edge > Rational::zero() && edge < top {
        out.push(edge);
    }
    out
}

/// `x_t ∈ f ⇒ (p)_t ∈∨q_k f` over every relevant `t`.
fn one_param(f: &FuzzySubset, premise: usize, product: usize, k: KParam) -> bool {
    critical_params(f, premise, product, k)
        .into_iter()
        .all(|t| !relation(f.val(premise), t, k).belongs || relation(f.val(product), t, k).in_or_qk)
}

/// `x_r, z_t ∈ f ⇒ (p)_{min(r,t)} ∈∨q_k f` over every relevant `r, t`.
fn two_param(f: &FuzzySubset, x: usize, z: usize, product: usize, k: KParam) -> bool {
    let rs = critical_params(f, x, product, k);
    let ts = critical_params(f, z, product, k);
    rs.iter().all(|&r| {
        ts.iter().all(|&t| {
            let premise = relation(f.val(x), r, k).belongs && relation(f.val(z), t, k).belongs;
            !premise || relation(f.val(product), r.min(t), k).in_or_qk
        })
    })
}

/// Decides a fuzzy notion from its fuzzy-point definition.
///
/// The quantifier over `t ∈ (0,1]` is reduced to finitely many values. For a
/// premise `y_t ∈ f` and conclusion point at `p`, the conclusion fails exactly
/// for `t ∈ (f(p), 1-k-f(p)]`; intersected with the admissible `(0, f(y)]`
/// that interval is nonempty iff it contains `min(f(y), 1-k-f(p))`, so
/// testing `t = f(y)` and `t = 1-k-f(p)` (when admissible) is decisive.
pub fn is_fuzzy_ideal_pointwise(
    g: &Groupoid,
    f: &FuzzySubset,
    k: KParam,
    kind: IdealKind,
) -> Result<bool> {
    f.check_groupoid(g)?;
    let n = g.order();
    let sub = || pairs(n).all(|(x, y)| two_param(f, x, y, g.mul(x, y), k));
    let left = || pairs(n).all(|(x, y)| one_param(f, y, g.mul(x, y), k));
    let right = || pairs(n).all(|(x, y)| one_param(f, x, g.mul(x, y), k));
    let gbi = || triples(n).all(|(x, y, z)| two_param(f, x, z, g.mul(g.mul(x, y), z), k));
    let gint = || triples(n).all(|(x, y, z)| one_param(f, y, g.mul(g.mul(x, y), z), k));
    Ok(match kind {
        IdealKind::Subgroupoid => sub(),
        IdealKind::Left => left(),
        IdealKind::Right => right(),
        IdealKind::TwoSided => left() && right(),
        IdealKind::GeneralizedBi => gbi(),
        IdealKind::Bi => sub() && gbi(),
        IdealKind::GeneralizedInterior => gint(),
        IdealKind::Interior => sub() && gint(),
        IdealKind::Quasi => return Err(Error::NoPointwiseForm(kind.to_string())),
    })
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct LevelCheck {
    pub threshold: Grade,
    pub level: ElementSubset,
    pub passes: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct LevelReport {
    pub levels: Vec<LevelCheck>,
    pub levels_ok: bool,
    pub predicate_ok: bool,
    pub agree: bool,
}

/// Compares the fuzzy predicate with "every nonempty level `U(f,t)`,
/// `0 < t ≤ (1-k)/2`, is a crisp ideal of the same kind".
///
/// Levels only change at grades of `f`, so the thresholds tested are the
/// grades in `(0, (1-k)/2]` together with `(1-k)/2` itself.
pub fn level_characterization_check(
    g: &Groupoid,
    f: &FuzzySubset,
    k: KParam,
    notion: impl Into<Notion>,
) -> Result<LevelReport> {
    let notion = notion.into();
    f.check_groupoid(g)?;
    let levels = critical_levels(f, k)
        .into_iter()
        .map(|(t, level)| LevelCheck {
            threshold: t,
            level,
            passes: ideals::notion_holds(g, &level, notion),
        })
        .collect::<Vec<_>>();
    let levels_ok = levels.iter().all(|l| l.passes);
    let predicate_ok = fuzzy_holds(g, f, k, notion);
    Ok(LevelReport {
        levels,
        levels_ok,
        predicate_ok,
        agree: levels_ok == predicate_ok,
    })
}

/// Nonempty levels at every critical threshold, ascending by threshold.
fn critical_levels(f: &FuzzySubset, k: KParam) -> Vec<(Grade, ElementSubset)> {
    let mut ts: Vec<Grade> = f
        .distinct_grades()
        .into_iter()
        .filter(|t| !t.is_zero() && t.value() <= k.half())
        .collect();
    ts.push(k.half_grade());
    ts.sort();
    ts.dedup();
    ts.into_iter()
        .map(|t| (t, level(f, t.value())))
        .filter(|(_, l)| !l.is_empty())
        .collect()
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct Correspondence {
    pub crisp: bool,
    pub fuzzy: bool,
}

impl Correspondence {
    pub fn agrees(&self) -> bool {
        self.crisp == self.fuzzy
    }
}

/// `A` has the crisp property iff `(C_A)_k` has the fuzzy one.
pub fn check_characteristic_correspondence(
    g: &Groupoid,
    a: &ElementSubset,
    k: KParam,
    notion: impl Into<Notion>,
) -> Result<Correspondence> {
    let notion = notion.into();
    let crisp = ideals::check_notion(g, a, notion)?.holds;
    let fuzzy = fuzzy_holds(g, &characteristic_k(a, k), k, notion);
    Ok(Correspondence { crisp, fuzzy })
}

/// Pointwise comparison of characteristic maps of `A∩B`, `A∪B`, `AB`.
///
/// The meet and product clauses compare `(C_X)_k` with combinations of the
/// value-1 maps `C_A`, `C_B`. The union clause has no reading under which it
/// is an identity: `(C_A)_k ∨_k (C_B)_k` is `(1-k)/2` everywhere while
/// `(C_{A∪B})_k` vanishes off `A∪B`. It is reported literally and restricted
/// to `A∪B`; `union_mismatches` lists where the literal equality fails.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Lemma27Report {
    pub intersection_eq: bool,
    pub product_eq: bool,
    pub union_eq_literal: bool,
    pub union_eq_on_support: bool,
    pub union_mismatches: ElementSubset,
}

pub fn check_lemma27(
    g: &Groupoid,
    a: &ElementSubset,
    b: &ElementSubset,
    k: KParam,
) -> Result<Lemma27Report> {
    g.check_subset(a)?;
    g.check_subset(b)?;
    if a.is_empty() || b.is_empty() {
        return Err(Error::EmptySubset);
    }
    let (ca, cb) = (indicator(a), indicator(b));
    let intersection_eq = characteristic_k(&a.intersection(b), k) == meet_k(&ca, &cb, k)?;
    let product_eq = characteristic_k(&g.product(a, b), k) == compose(g, &ca, &cb, k);

    let u = a.union(b);
    let lhs = characteristic_k(&u, k);
    let rhs = join_k(&characteristic_k(a, k), &characteristic_k(b, k), k)?;
    let mut mismatches = ElementSubset::empty(g.order());
    for x in 0..g.order() {
        if lhs.get(x) != rhs.get(x) {
            mismatches.insert(x);
        }
    }
    Ok(Lemma27Report {
        intersection_eq,
        product_eq,
        union_eq_literal: mismatches.is_empty(),
        union_eq_on_support: mismatches.intersection(&u).is_empty(),
        union_mismatches: mismatches,
    })
}

/// Map constant on the layers of a chain `I₁ ⊂ I₂ ⊂ … ⊂ I_m`: grade
/// `grades[j]` on `I_{j+1} \ I_j`, 0 outside `I_m`.
pub fn fuzzy_from_chain(chain: &[ElementSubset], grades: &[Grade]) -> Result<FuzzySubset> {
    let first = chain.first().ok_or(Error::EmptySubset)?;
    if chain.len() != grades.len() {
        return Err(Error::LabelCount {
            expected: chain.len(),
            got: grades.len(),
        });
    }
    let n = first.order();
    let mut out = vec![Grade::ZERO; n];
    let mut covered = ElementSubset::empty(n);
    for (layer, &gr) in chain.iter().zip(grades) {
        if layer.order() != n {
            return Err(Error::OrderMismatch {
                subset: layer.order(),
                groupoid: n,
            });
        }
        for x in layer.difference(&covered).iter() {
            out[x] = gr;
        }
        covered = covered.union(layer);
    }
    Ok(FuzzySubset::new(out))
}

/// Standard grid `{0, 1/d, 2/d, .., 1}`.
pub fn grade_grid(denominator: i64) -> Vec<Grade> {
    (0..=denominator)
        .map(|i| Grade::ratio(i, denominator).expect("in range"))
        .collect()
}

fn rng_for(seed: u64, index: u64) -> ChaCha8Rng {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(index);
    rng
}

/// Deterministic sampler of fuzzy subsets of one notion.
///
/// Each sample is constant on the layers of a random chain of crisp subsets
/// of the notion ending in `S`, with strictly decreasing grades drawn from the
/// grid. Every level of such a map is a chain member, so every sample has
/// the fuzzy notion for every `k`. Sample `i` depends only on `(seed, i)`.
#[derive(Debug, Clone)]
pub struct FuzzyIdealSampler {
    members: Vec<ElementSubset>,
    grid: Vec<Grade>,
    seed: u64,
}

impl FuzzyIdealSampler {
    pub fn new(
        g: &Groupoid,
        notion: impl Into<Notion>,
        grade_grid: &[Grade],
        seed: u64,
    ) -> Result<Self> {
        if grade_grid.is_empty() {
            return Err(Error::EmptyGrid);
        }
        if g.order() > ideals::ENUMERATION_CAP {
            return Err(Error::OrderTooLarge {
                order: g.order(),
                max: ideals::ENUMERATION_CAP,
            });
        }
        let mut grid = grade_grid.to_vec();
        grid.sort();
        grid.dedup();
        let members = ideals::all_of(g, notion.into());
        debug_assert!(members.last() == Some(&g.carrier()));
        Ok(FuzzyIdealSampler {
            members,
            grid,
            seed,
        })
    }

    pub fn members(&self) -> &[ElementSubset] {
        &self.members
    }

    pub fn sample(&self, index: u64) -> FuzzySubset {
        let mut rng = rng_for(self.seed, index);
        let full = *self.members.last().expect("S is always a member");
        let max_len = self.grid.len();
        let wanted = rng.gen_range(1..=max_len);
        let mut chain = vec![full];
        while chain.len() < wanted {
            let top = chain.last().unwrap();
            let below: Vec<&ElementSubset> = self
                .members
                .iter()
                .filter(|m| m.is_subset(top) && *m != top)
                .collect();
            match below.choose(&mut rng) {
                Some(&&m) => chain.push(m),
                None => break,
            }
        }
        chain.reverse();
        let mut picks: Vec<Grade> = self
            .grid
            .choose_multiple(&mut rng, chain.len())
            .copied()
            .collect();
        picks.sort_by(|a, b| b.cmp(a));
        fuzzy_from_chain(&chain, &picks).expect("chain and grades agree")
    }

    pub fn iter(&self, count: usize) -> impl Iterator<Item = FuzzySubset> + '_ {
        (0..count as u64).map(move |i| self.sample(i))
    }
}

/// `count` generated fuzzy subsets of `notion`; a pure function of `seed`.
pub fn generate_fuzzy_ideals(
    g: &Groupoid,
    notion: impl Into<Notion>,
    grade_grid: &[Grade],
    count: usize,
    seed: u64,
) -> Result<Vec<FuzzySubset>> {
    let sampler = FuzzyIdealSampler::new(g, notion, grade_grid, seed)?;
    Ok(sampler.iter(count).collect())
}

/// Uniformly random grid-valued map; sample `i` depends only on `(seed, i)`.
pub fn random_fuzzy_subset(order: usize, grid: &[Grade], seed: u64, index: u64) -> FuzzySubset {
    let mut rng = rng_for(seed, index);
    FuzzySubset::from_fn(order, |_| *grid.choose(&mut rng).expect("nonempty grid"))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::known;

    fn q(p: i64, d: i64) -> Grade {
        Grade::ratio(p, d).unwrap()
    }

    fn k(p: i64, d: i64) -> KParam {
        KParam::ratio(p, d).unwrap()
    }

    fn single(x: Rational) -> FuzzySubset {
        FuzzySubset::new(vec![grade(x)])
    }

    /// f(1)=0.9, f(2)=0.8, 0.5 elsewhere on the six-element fixture.
    fn fixture_fuzzy() -> FuzzySubset {
        FuzzySubset::new(vec![q(9, 10), q(4, 5), q(1, 2), q(1, 2), q(1, 2), q(1, 2)])
    }

    fn f_prime() -> FuzzySubset {
        let mut g = vec![Grade::ZERO; 6];
        g[1] = Grade::ONE;
        FuzzySubset::new(g)
    }

    #[test]
    fn point_relations() {
        let p = |t| FuzzyPoint::new(0, t).unwrap();
        let r = point_relation(&single(q(9, 10).value()), &p(q(9, 10)), KParam::zero()).unwrap();
        assert!(r.belongs);
        let r = point_relation(&single(q(1, 2).value()), &p(q(3, 5)), KParam::zero()).unwrap();
        assert!(r.quasi_coincident && !r.belongs && r.in_or_qk);
        let r = point_relation(&single(q(2, 5).value()), &p(q(2, 5)), k(1, 5)).unwrap();
        assert!(!r.quasi_coincident);
        assert!(r.belongs && r.in_or_qk);
        assert!(FuzzyPoint::new(0, Grade::ZERO).is_err());
    }

    #[test]
    fn operations_pointwise() {
        let f = single(q(9, 10).value());
        let g = single(q(4, 5).value());
        assert_eq!(meet_k(&f, &g, KParam::zero()).unwrap().get(0), q(1, 2));
        assert_eq!(join_k(&f, &g, KParam::zero()).unwrap().get(0), q(9, 10));
        assert_eq!(truncate_k(&f, k(1, 2)).get(0), q(1, 4));
        assert!(meet_k(&f, &FuzzySubset::carrier(2), KParam::zero()).is_err());
    }

    #[test]
    fn composition_on_example3() {
        let g = known::example3();
        let z = KParam::zero();
        let a = g.subset_of_labels(&["1"]).unwrap();
        let b = g.subset_of_labels(&["1", "2"]).unwrap();
        let c = compose_k(&g, &characteristic_k(&a, z), &characteristic_k(&b, z), z).unwrap();
        let one = g.index_of("1").unwrap();
        for x in 0..6 {
            let expected = if x == one { q(1, 2) } else { Grade::ZERO };
            assert_eq!(c.get(x), expected);
        }
        let zero = FuzzySubset::constant(6, Grade::ZERO);
        for kk in [z, k(1, 2)] {
            let c = compose_k(&g, &zero, &fixture_fuzzy(), kk).unwrap();
            assert_eq!(c, zero);
        }
    }

    #[test]
    fn levels() {
        let g = known::example3();
        let l = level_set(&fixture_fuzzy(), q(4, 5)).unwrap();
        assert_eq!(l, g.subset_of_labels(&["1", "2"]).unwrap());
        assert!(level_set(&FuzzySubset::carrier(6), Grade::ONE)
            .unwrap()
            .is_full());
        assert!(level_set(&fixture_fuzzy(), q(19, 20)).unwrap().is_empty());
        assert_eq!(
            level_set(&fixture_fuzzy(), Grade::ZERO),
            Err(Error::ZeroThreshold)
        );
    }

    #[test]
    fn characteristic_maps() {
        let g = known::example3();
        let a = g.subset_of_labels(&["1", "2"]).unwrap();
        let c = characteristic_k(&a, KParam::zero());
        assert_eq!(
            c.grades(),
            &[
                q(1, 2),
                q(1, 2),
                Grade::ZERO,
                Grade::ZERO,
                Grade::ZERO,
                Grade::ZERO
            ]
        );
        let c = characteristic_k(&g.carrier(), k(1, 2));
        assert!(c.grades().iter().all(|&x| x == q(1, 4)));
        let t = known::trivial();
        assert_eq!(
            characteristic_k(&t.carrier(), KParam::zero()).grades(),
            &[q(1, 2)]
        );
    }

    #[test]
    fn fixture_fuzzy_ideal_and_its_failing_variant() {
        let g = known::example3();
        for kk in [KParam::zero(), k(2, 5), k(4, 5)] {
            assert!(
                is_fuzzy_ideal(&g, &fixture_fuzzy(), kk, IdealKind::TwoSided)
                    .unwrap()
                    .holds
            );
            assert!(is_fuzzy_ideal_pointwise(&g, &fixture_fuzzy(), kk, IdealKind::TwoSided).unwrap());
        }
        let v = is_fuzzy_ideal(&g, &f_prime(), KParam::zero(), IdealKind::Left).unwrap();
        assert!(!v.holds);
        assert_eq!(v.counterexample.unwrap().operands, vec![0, 1]);
        assert!(
            !is_fuzzy_ideal_pointwise(&g, &f_prime(), KParam::zero(), IdealKind::Left).unwrap()
        );
        let one = FuzzySubset::carrier(6);
        for notion in Notion::ALL {
            assert!(is_fuzzy_ideal(&g, &one, k(1, 3), notion).unwrap().holds);
        }
        for kind in IdealKind::ALL
            .into_iter()
            .filter(|&k| k != IdealKind::Quasi)
        {
            assert!(is_fuzzy_ideal_pointwise(&g, &one, k(1, 3), kind).unwrap());
        }
        assert!(is_fuzzy_ideal_pointwise(&g, &one, KParam::zero(), IdealKind::Quasi).is_err());
    }

    /// A pair where the conclusion holds at `t = f(y)` only by
    /// quasi-coincidence and fails at a smaller `t`.
    #[test]
    fn pointwise_needs_the_quasi_edge() {
        // 2-element left-zero-ish table: x·y = 0 for all x, y.
        let g = Groupoid::from_rows(&[vec![0, 0], vec![0, 0]]).unwrap();
        let f = FuzzySubset::new(vec![q(3, 10), q(4, 5)]);
        // f(0·1) = 0.3 < min(0.8, 0.5): not a fuzzy left ideal.
        assert!(
            !is_fuzzy_ideal(&g, &f, KParam::zero(), IdealKind::Left)
                .unwrap()
                .holds
        );
        // at t = f(1) = 0.8: 0.3 + 0.8 > 1, so t = f(y) alone would accept.
        assert!(!is_fuzzy_ideal_pointwise(&g, &f, KParam::zero(), IdealKind::Left).unwrap());
    }

    #[test]
    fn level_reports() {
        let g = known::example3();
        let r =
            level_characterization_check(&g, &fixture_fuzzy(), KParam::zero(), IdealKind::TwoSided)
                .unwrap();
        assert_eq!(r.levels.len(), 1);
        assert!(r.levels[0].level.is_full());
        assert!(r.levels_ok && r.predicate_ok && r.agree);
        let r = level_characterization_check(
            &g,
            &FuzzySubset::carrier(6),
            KParam::zero(),
            IdealKind::Left,
        )
        .unwrap();
        assert!(r.agree && r.levels_ok);
        let r =
            level_characterization_check(&g, &f_prime(), KParam::zero(), IdealKind::Left).unwrap();
        assert_eq!(r.levels[0].level, g.subset_of_labels(&["2"]).unwrap());
        assert!(!r.levels_ok && !r.predicate_ok && r.agree);
    }

    #[test]
    fn correspondence_examples() {
        let g = known::example3();
        let c = check_characteristic_correspondence(
            &g,
            &g.subset_of_labels(&["1"]).unwrap(),
            k(1, 2),
            IdealKind::Left,
        )
        .unwrap();
        assert_eq!(
            c,
            Correspondence {
                crisp: true,
                fuzzy: true
            }
        );
        let c = check_characteristic_correspondence(
            &g,
            &g.subset_of_labels(&["5"]).unwrap(),
            KParam::zero(),
            IdealKind::Left,
        )
        .unwrap();
        assert_eq!(
            c,
            Correspondence {
                crisp: false,
                fuzzy: false
            }
        );
        for notion in Notion::ALL {
            let c =
                check_characteristic_correspondence(&g, &g.carrier(), k(9, 10), notion).unwrap();
            assert!(c.crisp && c.fuzzy);
        }
    }

    #[test]
    fn lemma27_examples() {
        let g = known::example3();
        let a = g.subset_of_labels(&["1"]).unwrap();
        let b = g.subset_of_labels(&["1", "2"]).unwrap();
        let r = check_lemma27(&g, &a, &b, KParam::zero()).unwrap();
        assert!(r.intersection_eq && r.product_eq);
        let s = g.carrier();
        for kk in [KParam::zero(), k(1, 2)] {
            let r = check_lemma27(&g, &s, &s, kk).unwrap();
            assert!(r.intersection_eq && r.product_eq && r.union_eq_literal);
        }
        let b = g.subset_of_labels(&["2"]).unwrap();
        let r = check_lemma27(&g, &a, &b, KParam::zero()).unwrap();
        assert!(!r.union_eq_literal && r.union_eq_on_support);
        assert_eq!(r.union_mismatches, a.union(&b).complement());
        assert!(check_lemma27(&g, &ElementSubset::empty(6), &b, KParam::zero()).is_err());
    }

    #[test]
    fn chain_reproduces_the_fixture_map() {
        let g = known::example3();
        let chain = [
            g.subset_of_labels(&["1"]).unwrap(),
            g.subset_of_labels(&["1", "2"]).unwrap(),
            g.carrier(),
        ];
        let f = fuzzy_from_chain(&chain, &[q(9, 10), q(4, 5), q(1, 2)]).unwrap();
        assert_eq!(f, fixture_fuzzy());
        let f = fuzzy_from_chain(&[g.carrier()], &[Grade::ONE]).unwrap();
        assert_eq!(f, FuzzySubset::carrier(6));
    }

    #[test]
    fn generated_streams_are_deterministic_and_valid() {
        let g = known::example3();
        let grid = grade_grid(8);
        for kind in IdealKind::ALL {
            let a = generate_fuzzy_ideals(&g, kind, &grid, 40, 7).unwrap();
            let b = generate_fuzzy_ideals(&g, kind, &grid, 40, 7).unwrap();
            assert_eq!(a, b);
            for f in &a {
                for kk in [KParam::zero(), k(1, 2), k(9, 10)] {
                    assert!(
                        is_fuzzy_ideal(&g, f, kk, kind).unwrap().holds,
                        "{kind} {f:?}"
                    );
                }
            }
        }
        assert!(generate_fuzzy_ideals(&g, IdealKind::Left, &[], 1, 0).is_err());
    }

    #[test]
    fn truncation_is_monotone_and_idempotent() {
        for i in 0..50 {
            let f = random_fuzzy_subset(5, &grade_grid(8), 3, i);
            for kk in [KParam::zero(), k(1, 2)] {
                let t = truncate_k(&f, kk);
                assert!(t.le(&f));
                assert_eq!(truncate_k(&t, kk), t);
            }
        }
    }
}
