//! Machine checks of the characterizations of unitary intra-regular
//! AG-groupoids on one finite instance.
//!
//! Every statement is a list of conditions evaluated independently of each
//! other. Crisp conditions quantify over subsets or elements and are decided
//! exhaustively. Fuzzy conditions quantify over uncountably many maps; they
//! are checked on generated samples and can only ever hold "on sample".

use std::collections::BTreeMap;
use std::sync::Mutex;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::fuzzy::{self, FuzzyIdealSampler, FuzzySubset};
use crate::grade::{Grade, KParam};
use crate::groupoid::Groupoid;
use crate::ideals::{self, IdealKind, Notion};
use crate::subset::ElementSubset;
use crate::witness;

/// Largest order accepted by [`check_statement`]; triple quantifiers over
/// all subsets cost `(2^n - 1)^3` bitset products.
pub const VERIFY_CAP: usize = 6;

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct FuzzyConfig {
    /// Samples per condition and per `k`.
    pub samples: usize,
    pub seed: u64,
    pub k_values: Vec<KParam>,
    /// Grades are drawn from `{0, 1/d, .., 1}`.
    pub grid_denominator: i64,
}

impl Default for FuzzyConfig {
    fn default() -> Self {
        FuzzyConfig {
            samples: 200,
            seed: 0,
            k_values: vec![KParam::zero(), KParam::ratio(1, 2).expect("1/2")],
            grid_denominator: 8,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Verdict {
    Holds,
    Fails,
    HoldsOnSample,
    NotApplicable,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Mode {
    /// Exhaustive crisp check; enters the agreement computation.
    Decisive,
    /// Checked on generated fuzzy subsets only.
    Sampled,
    /// Reported, never counted.
    Informational,
}

/// A witness or counterexample. Element indices, not labels.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "type", rename_all = "kebab-case")]
pub enum Evidence {
    Element {
        element: usize,
    },
    Subsets {
        subsets: Vec<ElementSubset>,
        #[serde(skip_serializing_if = "Option::is_none")]
        element: Option<usize>,
    },
    Fuzzy {
        k: KParam,
        sample: u64,
        maps: Vec<FuzzySubset>,
        element: usize,
    },
    Witnesses {
        per_element: Vec<witness::Lemma34Witnesses>,
    },
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ConditionEntry {
    pub label: String,
    pub mode: Mode,
    pub verdict: Verdict,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<Evidence>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub counterexample: Option<Evidence>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub sample_size: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub seed: Option<u64>,
}

impl ConditionEntry {
    fn decisive(label: impl Into<String>, failure: Option<Evidence>) -> Self {
        Self::crisp(label, Mode::Decisive, failure)
    }

    fn informational(label: impl Into<String>, failure: Option<Evidence>) -> Self {
        Self::crisp(label, Mode::Informational, failure)
    }

    fn crisp(label: impl Into<String>, mode: Mode, failure: Option<Evidence>) -> Self {
        ConditionEntry {
            label: label.into(),
            mode,
            verdict: if failure.is_some() {
                Verdict::Fails
            } else {
                Verdict::Holds
            },
            witness: None,
            counterexample: failure,
            sample_size: None,
            seed: None,
        }
    }

    fn with_witness(mut self, w: Evidence) -> Self {
        self.witness = Some(w);
        self
    }

    pub fn holds(&self) -> bool {
        matches!(self.verdict, Verdict::Holds | Verdict::HoldsOnSample)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Shape {
    /// All decisive conditions must have the same truth value.
    Equivalence,
    /// Every decisive and sampled condition must hold.
    Assertion,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ConditionReport {
    pub statement_id: String,
    pub shape: Shape,
    pub applicable: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub reason: Option<String>,
    pub conditions: Vec<ConditionEntry>,
    /// Decisive conditions all have the same truth value.
    pub agreement: bool,
    /// The instance is consistent with the statement: for equivalences,
    /// agreement and no sampled failure while the decisive side holds; for
    /// assertions, no decisive or sampled failure.
    pub confirmed: bool,
}

impl ConditionReport {
    fn not_applicable(id: &str, shape: Shape, reason: &str) -> Self {
        ConditionReport {
            statement_id: id.to_string(),
            shape,
            applicable: false,
            reason: Some(reason.to_string()),
            conditions: Vec::new(),
            agreement: true,
            confirmed: true,
        }
    }

    fn finish(id: &str, shape: Shape, conditions: Vec<ConditionEntry>) -> Self {
        let decisive: Vec<bool> = conditions
            .iter()
            .filter(|c| c.mode == Mode::Decisive)
            .map(|c| c.holds())
            .collect();
        let agreement = decisive.windows(2).all(|w| w[0] == w[1]);
        let sampled_fail = conditions
            .iter()
            .any(|c| c.mode == Mode::Sampled && c.verdict == Verdict::Fails);
        let confirmed = match shape {
            Shape::Equivalence => {
                let decisive_true = decisive.first().copied().unwrap_or(true);
                agreement && !(decisive_true && sampled_fail)
            }
            Shape::Assertion => decisive.iter().all(|&b| b) && !sampled_fail,
        };
        ConditionReport {
            statement_id: id.to_string(),
            shape,
            applicable: true,
            reason: None,
            conditions,
            agreement,
            confirmed,
        }
    }

    pub fn condition(&self, label_prefix: &str) -> Option<&ConditionEntry> {
        self.conditions
            .iter()
            .find(|c| c.label.starts_with(label_prefix))
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct StatementInfo {
    pub id: &'static str,
    pub shape: Shape,
    pub requires_unit: bool,
    pub requires_intra_regular: bool,
    pub summary: &'static str,
}

const fn eqv(id: &'static str, summary: &'static str) -> StatementInfo {
    StatementInfo {
        id,
        shape: Shape::Equivalence,
        requires_unit: true,
        requires_intra_regular: false,
        summary,
    }
}

const fn asrt(
    id: &'static str,
    requires_unit: bool,
    requires_intra_regular: bool,
    summary: &'static str,
) -> StatementInfo {
    StatementInfo {
        id,
        shape: Shape::Assertion,
        requires_unit,
        requires_intra_regular,
        summary,
    }
}

/// Every checkable statement. `C4.9` is an alias of `C3.4`.
pub const STATEMENTS: &[StatementInfo] = &[
    asrt(
        "P2.2",
        false,
        false,
        "fuzzy-point definitions agree with the inequality forms",
    ),
    asrt(
        "C2.6",
        true,
        false,
        "fuzzy right ideals are fuzzy left ideals",
    ),
    asrt(
        "P2.3",
        false,
        false,
        "fuzzy notions are characterized by their levels",
    ),
    asrt(
        "P2.5",
        false,
        false,
        "A has a crisp property iff (C_A)_k has the fuzzy one",
    ),
    asrt("L2.7", false, false, "characteristic maps of A∩B, A∪B, AB"),
    asrt(
        "L3.4",
        true,
        true,
        "eight elementwise identities have witnesses",
    ),
    asrt(
        "C3.5",
        true,
        true,
        "fuzzy left/right/generalized ideals are fuzzy semiprime",
    ),
    asrt(
        "R3.5",
        false,
        true,
        "generalized interior ideals are semiprime",
    ),
    asrt(
        "C3.6",
        true,
        true,
        "f(a) = f(a²) ≥ f(e) for generated fuzzy ideals",
    ),
    asrt(
        "C3.7",
        true,
        true,
        "left/right/generalized bi/generalized interior ideals are semiprime",
    ),
    eqv("T3.8", "intra-regular iff a ∈ Sa² for all a"),
    eqv(
        "C3.9",
        "intra-regular iff right (interior) ideals are semiprime",
    ),
    eqv(
        "T3.10",
        "intra-regular iff A∩B∩C ⊆ (AB)C when one is a left ideal",
    ),
    eqv("C3.11", "intra-regular iff A∩B∩C ⊆ (AB)C for left ideals"),
    eqv("T3.12", "intra-regular iff A∩B ⊆ AB∩BA for left ideals"),
    eqv("T3.13", "intra-regular iff A∩B∩C = (AB)C for a bi-ideal A"),
    eqv("C3.14", "intra-regular iff A∩B∩C = (AB)C for bi-ideals"),
    eqv("T3.15", "intra-regular iff A∩B ⊆ AB∩BA for a bi-ideal A"),
    eqv("C3.16", "intra-regular iff A∩B ⊆ AB∩BA for bi-ideals"),
    eqv(
        "T3.17",
        "intra-regular iff A = A² (A = A²A) for left ideals",
    ),
    asrt("P4.1", true, false, "Sa∩aS, Sa and Sa² are quasi-ideals"),
    asrt("C4.2", true, false, "Sa·Sa = Sa² = Sa²·S"),
    asrt("P4.3", true, true, "quasi-ideals are semiprime"),
    asrt(
        "P4.5",
        false,
        false,
        "fuzzy quasi-ideals are characterized by their levels",
    ),
    asrt(
        "P4.6",
        false,
        false,
        "Q is a quasi-ideal iff (C_Q)_k is a fuzzy quasi-ideal",
    ),
    asrt(
        "C4.7",
        false,
        false,
        "fuzzy left ideals are fuzzy quasi-ideals",
    ),
    eqv(
        "T4.8",
        "intra-regular iff Sa ⊆ Sa² iff I∩J ⊆ IJ for quasi-ideals",
    ),
    eqv(
        "C3.4",
        "intra-regular iff Q² = Q for quasi-ideals iff Sa = Sa²",
    ),
];

/// The equivalences whose crisp sides are decided exhaustively.
pub const CRISP_EQUIVALENCES: &[&str] = &[
    "T3.8", "C3.9", "T3.10", "C3.11", "T3.12", "T3.13", "C3.14", "T3.15", "C3.16", "T3.17", "T4.8",
    "C3.4",
];

pub fn statement(id: &str) -> Result<&'static StatementInfo> {
    let norm = id.trim().to_ascii_uppercase();
    let norm = if norm == "C4.9" {
        "C3.4".to_string()
    } else {
        norm
    };
    STATEMENTS
        .iter()
        .find(|s| s.id == norm)
        .ok_or_else(|| Error::UnknownStatement(id.to_string()))
}

pub fn all_statement_ids() -> Vec<&'static str> {
    STATEMENTS.iter().map(|s| s.id).collect()
}

/// Evaluates one statement on one groupoid.
pub fn check_statement(g: &Groupoid, id: &str, cfg: &FuzzyConfig) -> Result<ConditionReport> {
    let info = statement(id)?;
    if g.order() > VERIFY_CAP {
        return Err(Error::OrderTooLarge {
            order: g.order(),
            max: VERIFY_CAP,
        });
    }
    if cfg.grid_denominator < 1 {
        return Err(Error::EmptyGrid);
    }
    let sid = info.id;
    if !g.is_left_invertive() {
        return Ok(ConditionReport::not_applicable(
            sid,
            info.shape,
            "not an AG-groupoid",
        ));
    }
    if info.requires_unit && !g.is_unitary() {
        return Ok(ConditionReport::not_applicable(
            sid,
            info.shape,
            "no left identity",
        ));
    }
    let ctx = Ctx::new(g, cfg);
    if info.requires_intra_regular && !ctx.ir.holds {
        return Ok(ConditionReport::not_applicable(
            sid,
            info.shape,
            "not intra-regular",
        ));
    }
    let conditions = ctx.conditions(sid);
    Ok(ConditionReport::finish(sid, info.shape, conditions))
}

struct Ctx<'a> {
    g: &'a Groupoid,
    n: usize,
    full: u64,
    cfg: &'a FuzzyConfig,
    grid: Vec<Grade>,
    ir: witness::IntraRegularVerdict,
    /// `prod[a * 2^n + b]` = bits of `A·B`.
    prod: Vec<u64>,
    members: Mutex<BTreeMap<Notion, Vec<u64>>>,
}

fn bits_to_set(n: usize, bits: u64) -> ElementSubset {
    ElementSubset::from_bits(n, bits).expect("in range")
}

impl<'a> Ctx<'a> {
    fn new(g: &'a Groupoid, cfg: &'a FuzzyConfig) -> Self {
        let n = g.order();
        let size = 1usize << n;
        let mut prod = vec![0u64; size * size];
        for a in 1..size {
            let sa = bits_to_set(n, a as u64);
            for b in 1..size {
                prod[a * size + b] = g.product(&sa, &bits_to_set(n, b as u64)).bits();
            }
        }
        Ctx {
            g,
            n,
            full: (size - 1) as u64,
            cfg,
            grid: fuzzy::grade_grid(cfg.grid_denominator),
            ir: witness::is_intra_regular(g),
            prod,
            members: Mutex::new(BTreeMap::new()),
        }
    }

    #[inline]
    fn p(&self, a: u64, b: u64) -> u64 {
        self.prod[(a as usize) << self.n | b as usize]
    }

    fn set(&self, bits: u64) -> ElementSubset {
        bits_to_set(self.n, bits)
    }

    fn subsets(&self, bits: &[u64]) -> Vec<ElementSubset> {
        bits.iter().map(|&b| self.set(b)).collect()
    }

    fn members(&self, notion: impl Into<Notion>) -> Vec<u64> {
        let notion = notion.into();
        let mut cache = self.members.lock().expect("not poisoned");
        cache
            .entry(notion)
            .or_insert_with(|| {
                ideals::all_of(self.g, notion)
                    .into_iter()
                    .map(|s| s.bits())
                    .collect()
            })
            .clone()
    }

    fn nonempty(&self) -> impl Iterator<Item = u64> {
        1..=self.full
    }

    fn single(&self, a: usize) -> u64 {
        1 << a
    }

    fn sa(&self, a: usize) -> u64 {
        self.p(self.full, self.single(a))
    }

    fn sa2(&self, a: usize) -> u64 {
        self.p(self.full, self.single(self.g.square(a)))
    }

    fn first_escape(&self, lhs: u64, rhs: u64) -> Option<usize> {
        let d = lhs & !rhs;
        (d != 0).then(|| d.trailing_zeros() as usize)
    }

    fn ir_condition(&self) -> ConditionEntry {
        ConditionEntry::decisive(
            "(i) S is intra-regular",
            self.ir
                .failing_element
                .map(|element| Evidence::Element { element }),
        )
    }

    fn forall_elements(&self, label: &str, ok: impl Fn(usize) -> bool) -> ConditionEntry {
        ConditionEntry::decisive(
            label,
            (0..self.n)
                .find(|&a| !ok(a))
                .map(|element| Evidence::Element { element }),
        )
    }

    /// `lhs(xs) ⊆ rhs(xs)` over every tuple from the given families.
    fn forall_tuples(
        &self,
        label: &str,
        mode: Mode,
        families: &[&[u64]],
        lhs: impl Fn(&[u64]) -> u64,
        rhs: impl Fn(&[u64]) -> u64,
    ) -> ConditionEntry {
        let mut idx = vec![0usize; families.len()];
        let mut tuple = vec![0u64; families.len()];
        let failure = if families.iter().any(|f| f.is_empty()) {
            None
        } else {
            loop {
                for (t, (f, &i)) in tuple.iter_mut().zip(families.iter().zip(&idx)) {
                    *t = f[i];
                }
                if let Some(e) = self.first_escape(lhs(&tuple), rhs(&tuple)) {
                    break Some(Evidence::Subsets {
                        subsets: self.subsets(&tuple),
                        element: Some(e),
                    });
                }
                // odometer, last position fastest
                let mut pos = families.len();
                loop {
                    if pos == 0 {
                        break;
                    }
                    pos -= 1;
                    idx[pos] += 1;
                    if idx[pos] < families[pos].len() {
                        break;
                    }
                    idx[pos] = 0;
                    if pos == 0 {
                        pos = usize::MAX;
                        break;
                    }
                }
                if pos == usize::MAX {
                    break None;
                }
            }
        };
        ConditionEntry::crisp(label, mode, failure)
    }

    fn all_semiprime(&self, label: &str, notion: impl Into<Notion>) -> ConditionEntry {
        let failure = self.members(notion).into_iter().find_map(|bits| {
            let a = self.set(bits);
            ideals::semiprime_violation(self.g, &a).map(|v| Evidence::Subsets {
                subsets: vec![a],
                element: Some(v.operands[0]),
            })
        });
        ConditionEntry::decisive(label, failure)
    }

    fn sampler(&self, notion: impl Into<Notion>, salt: u64) -> FuzzyIdealSampler {
        FuzzyIdealSampler::new(self.g, notion, &self.grid, self.cfg.seed ^ salt)
            .expect("order checked and grid nonempty")
    }

    fn arbitrary(&self, i: u64, slot: u64) -> FuzzySubset {
        fuzzy::random_fuzzy_subset(
            self.n,
            &self.grid,
            self.cfg.seed ^ 0xA5A5_0000,
            i * 4 + slot,
        )
    }

    /// Runs `check(k, i)` for every configured `k` and sample index; the first
    /// failure is the counterexample.
    fn sampled(
        &self,
        label: &str,
        per_k: bool,
        check: impl Fn(KParam, u64) -> Option<Evidence>,
    ) -> ConditionEntry {
        let ks: Vec<KParam> = if per_k {
            self.cfg.k_values.clone()
        } else {
            vec![KParam::zero()]
        };
        let mut failure = None;
        'outer: for &k in &ks {
            for i in 0..self.cfg.samples as u64 {
                if let Some(e) = check(k, i) {
                    failure = Some(e);
                    break 'outer;
                }
            }
        }
        ConditionEntry {
            label: label.to_string(),
            mode: Mode::Sampled,
            verdict: if failure.is_some() {
                Verdict::Fails
            } else {
                Verdict::HoldsOnSample
            },
            witness: None,
            counterexample: failure,
            sample_size: Some(self.cfg.samples * ks.len()),
            seed: Some(self.cfg.seed),
        }
    }

    /// Evidence for `lhs ≤ rhs` failing, if it does.
    fn le_or(
        &self,
        k: KParam,
        i: u64,
        maps: &[&FuzzySubset],
        lhs: &FuzzySubset,
        rhs: &FuzzySubset,
    ) -> Option<Evidence> {
        lhs.first_exceeding(rhs).map(|element| Evidence::Fuzzy {
            k,
            sample: i,
            maps: maps.iter().map(|m| (*m).clone()).collect(),
            element,
        })
    }

    fn compose(&self, f: &FuzzySubset, h: &FuzzySubset, k: KParam) -> FuzzySubset {
        fuzzy::compose(self.g, f, h, k)
    }

    fn meet_k(&self, f: &FuzzySubset, h: &FuzzySubset, k: KParam) -> FuzzySubset {
        fuzzy::meet_k(f, h, k).expect("same carrier")
    }

    /// `f ∧_k g ∧_k h ≤ (f ∘_k g) ∘_k h`.
    fn triple_ineq(
        &self,
        k: KParam,
        i: u64,
        f: &FuzzySubset,
        g: &FuzzySubset,
        h: &FuzzySubset,
    ) -> Option<Evidence> {
        let lhs = self.meet_k(&self.meet_k(f, g, k), h, k);
        let rhs = self.compose(&self.compose(f, g, k), h, k);
        self.le_or(k, i, &[f, g, h], &lhs, &rhs)
    }

    /// `f ∧_k g ≤ (f ∘_k g) ∧ (g ∘_k f)`.
    fn pair_ineq(&self, k: KParam, i: u64, f: &FuzzySubset, g: &FuzzySubset) -> Option<Evidence> {
        let lhs = self.meet_k(f, g, k);
        let rhs = fuzzy::meet(&self.compose(f, g, k), &self.compose(g, f, k)).expect("same");
        self.le_or(k, i, &[f, g], &lhs, &rhs)
    }

    fn conditions(&self, id: &str) -> Vec<ConditionEntry> {
        use IdealKind::*;
        let n = self.n;
        let all: Vec<u64> = self.nonempty().collect();
        let inter3 = |t: &[u64]| t[0] & t[1] & t[2];
        let prod3 = |t: &[u64]| self.p(self.p(t[0], t[1]), t[2]);
        let inter2 = |t: &[u64]| t[0] & t[1];
        let both2 = |t: &[u64]| self.p(t[0], t[1]) & self.p(t[1], t[0]);
        match id {
            "T3.8" => vec![
                self.ir_condition(),
                self.forall_elements("(ii) a ∈ Sa² for every a", |a| self.sa2(a) >> a & 1 == 1),
            ],
            "C3.9" => vec![
                self.ir_condition(),
                self.all_semiprime("(ii) every right ideal is semiprime", Right),
                self.all_semiprime("(iii) every interior ideal is semiprime", Interior),
            ],
            "T3.10" | "C3.11" => {
                let left = self.members(Left);
                let crisp = if id == "T3.10" {
                    // one of the three is a left ideal, the others arbitrary
                    let is_left = |b: u64| left.contains(&b);
                    let failure = (|| {
                        for &a in &all {
                            for &b in &all {
                                let ab = self.p(a, b);
                                for &c in &all {
                                    if !(is_left(a) || is_left(b) || is_left(c)) {
                                        continue;
                                    }
                                    let lhs = a & b & c;
                                    if let Some(e) = self.first_escape(lhs, self.p(ab, c)) {
                                        return Some(Evidence::Subsets {
                                            subsets: self.subsets(&[a, b, c]),
                                            element: Some(e),
                                        });
                                    }
                                }
                            }
                        }
                        None
                    })();
                    ConditionEntry::decisive(
                        "(ii) A∩B∩C ⊆ (AB)C whenever one of A, B, C is a left ideal",
                        failure,
                    )
                } else {
                    self.forall_tuples(
                        "(ii) A∩B∩C ⊆ (AB)C for all left ideals",
                        Mode::Decisive,
                        &[&left, &left, &left],
                        inter3,
                        prod3,
                    )
                };
                let sampler = self.sampler(Left, 0x10);
                let fuzzy = if id == "T3.10" {
                    self.sampled(
                        "(iii) f∧g∧h ≤ (f∘g)∘h when one of f, g, h is a fuzzy left ideal",
                        true,
                        |k, i| {
                            let f = sampler.sample(i);
                            let (g, h) = (self.arbitrary(i, 0), self.arbitrary(i, 1));
                            self.triple_ineq(k, i, &f, &g, &h)
                                .or_else(|| self.triple_ineq(k, i, &g, &f, &h))
                                .or_else(|| self.triple_ineq(k, i, &g, &h, &f))
                        },
                    )
                } else {
                    let m = self.cfg.samples as u64;
                    self.sampled(
                        "(iii) f∧g∧h ≤ (f∘g)∘h for fuzzy left ideals",
                        true,
                        |k, i| {
                            let (f, g, h) = (
                                sampler.sample(i),
                                sampler.sample(i + m),
                                sampler.sample(i + 2 * m),
                            );
                            self.triple_ineq(k, i, &f, &g, &h)
                        },
                    )
                };
                vec![self.ir_condition(), crisp, fuzzy]
            }
            "T3.12" => {
                let left = self.members(Left);
                let sampler = self.sampler(Left, 0x12);
                let m = self.cfg.samples as u64;
                vec![
                    self.ir_condition(),
                    self.forall_tuples(
                        "(ii) A∩B ⊆ AB∩BA for all left ideals",
                        Mode::Decisive,
                        &[&left, &left],
                        inter2,
                        both2,
                    ),
                    self.sampled(
                        "(iii) f∧g ≤ (f∘g)∧(g∘f) for fuzzy left ideals",
                        true,
                        |k, i| self.pair_ineq(k, i, &sampler.sample(i), &sampler.sample(i + m)),
                    ),
                ]
            }
            "T3.13" | "C3.14" => {
                let bi = self.members(Bi);
                let (fb, fc): (&[u64], &[u64]) = if id == "T3.13" {
                    (&all, &all)
                } else {
                    (&bi, &bi)
                };
                let which = if id == "T3.13" {
                    "a bi-ideal A and arbitrary B, C"
                } else {
                    "all bi-ideals"
                };
                let bi_s = self.sampler(Bi, 0x13);
                let gbi_s = self.sampler(GeneralizedBi, 0x14);
                let m = self.cfg.samples as u64;
                let arbitrary = id == "T3.13";
                let others = |s: &FuzzyIdealSampler, i: u64| {
                    if arbitrary {
                        (self.arbitrary(i, 0), self.arbitrary(i, 1))
                    } else {
                        (s.sample(i + m), s.sample(i + 2 * m))
                    }
                };
                vec![
                    self.ir_condition(),
                    self.forall_tuples(
                        &format!("(ii) A∩B∩C ⊆ (AB)C for {which}"),
                        Mode::Decisive,
                        &[&bi, fb, fc],
                        inter3,
                        prod3,
                    ),
                    self.forall_tuples(
                        &format!("(ii, reverse) (AB)C ⊆ A∩B∩C for {which}"),
                        Mode::Informational,
                        &[&bi, fb, fc],
                        prod3,
                        inter3,
                    ),
                    self.sampled(
                        "(iii) f∧g∧h ≤ (f∘g)∘h for a fuzzy bi-ideal f",
                        true,
                        |k, i| {
                            let f = bi_s.sample(i);
                            let (g, h) = others(&bi_s, i);
                            self.triple_ineq(k, i, &f, &g, &h)
                        },
                    ),
                    self.sampled(
                        "(iv) f∧g∧h ≤ (f∘g)∘h for a fuzzy generalized bi-ideal f",
                        true,
                        |k, i| {
                            let f = gbi_s.sample(i);
                            let (g, h) = others(&gbi_s, i);
                            self.triple_ineq(k, i, &f, &g, &h)
                        },
                    ),
                ]
            }
            "T3.15" | "C3.16" => {
                let bi = self.members(Bi);
                let arbitrary = id == "T3.15";
                let fb: &[u64] = if arbitrary { &all } else { &bi };
                let which = if arbitrary {
                    "a bi-ideal A and any subset B"
                } else {
                    "all bi-ideals"
                };
                let bi_s = self.sampler(Bi, 0x15);
                let m = self.cfg.samples as u64;
                vec![
                    self.ir_condition(),
                    self.forall_tuples(
                        &format!("(ii) A∩B ⊆ AB∩BA for {which}"),
                        Mode::Decisive,
                        &[&bi, fb],
                        inter2,
                        both2,
                    ),
                    self.sampled(
                        &format!(
                            "(iii) f∧g ≤ (f∘g)∧(g∘f) for a fuzzy bi-ideal f and {}",
                            if arbitrary {
                                "any fuzzy subset g"
                            } else {
                                "a fuzzy bi-ideal g"
                            }
                        ),
                        true,
                        |k, i| {
                            let f = bi_s.sample(i);
                            let g = if arbitrary {
                                self.arbitrary(i, 0)
                            } else {
                                bi_s.sample(i + m)
                            };
                            self.pair_ineq(k, i, &f, &g)
                        },
                    ),
                ]
            }
            "T3.17" => {
                let left = self.members(Left);
                let bi = self.members(Bi);
                let gbi = self.members(GeneralizedBi);
                let sq = |t: &[u64]| self.p(t[0], t[0]);
                let id1 = |t: &[u64]| t[0];
                let sq_a = |t: &[u64]| self.p(self.p(t[0], t[0]), t[0]);
                let eq = |label: &str, fam: &[u64], rhs: &dyn Fn(&[u64]) -> u64, mode: Mode| {
                    let a = self.forall_tuples(label, mode, &[fam], id1, rhs);
                    let b = self.forall_tuples(label, mode, &[fam], rhs, id1);
                    if a.holds() {
                        b
                    } else {
                        a
                    }
                };
                let sampler = self.sampler(Left, 0x17);
                vec![
                    self.ir_condition(),
                    eq("(i) A = A² for all left ideals", &left, &sq, Mode::Decisive),
                    eq(
                        "(ii) A = A²A for all left ideals",
                        &left,
                        &sq_a,
                        Mode::Decisive,
                    ),
                    self.forall_tuples(
                        "(i') A ⊆ A² for all left ideals",
                        Mode::Decisive,
                        &[&left],
                        id1,
                        sq,
                    ),
                    eq("(i'') A = A² for all bi-ideals", &bi, &sq, Mode::Decisive),
                    self.forall_tuples(
                        "(i''') A ⊆ A² for all bi-ideals",
                        Mode::Decisive,
                        &[&bi],
                        id1,
                        sq,
                    ),
                    self.forall_tuples(
                        "(i'''') A ⊆ A² for all generalized bi-ideals",
                        Mode::Decisive,
                        &[&gbi],
                        id1,
                        sq,
                    ),
                    self.sampled("(iii) f_k ≤ f∘f for fuzzy left ideals", true, |k, i| {
                        let f = sampler.sample(i);
                        let lhs = fuzzy::truncate_k(&f, k);
                        self.le_or(k, i, &[&f], &lhs, &self.compose(&f, &f, k))
                    }),
                    self.sampled(
                        "(iv) f_k ≤ (f∘f)∘f for fuzzy left ideals",
                        true,
                        |k, i| {
                            let f = sampler.sample(i);
                            let lhs = fuzzy::truncate_k(&f, k);
                            let rhs = self.compose(&self.compose(&f, &f, k), &f, k);
                            self.le_or(k, i, &[&f], &lhs, &rhs)
                        },
                    ),
                ]
            }
            "T4.8" => {
                let quasi = self.members(Quasi);
                let sampler = self.sampler(Quasi, 0x48);
                let m = self.cfg.samples as u64;
                vec![
                    self.ir_condition(),
                    self.forall_elements("(ii) Sa ⊆ Sa² for every a", |a| {
                        self.sa(a) & !self.sa2(a) == 0
                    }),
                    self.forall_tuples(
                        "(iii) I∩J ⊆ IJ for all quasi-ideals",
                        Mode::Decisive,
                        &[&quasi, &quasi],
                        inter2,
                        |t| self.p(t[0], t[1]),
                    ),
                    self.sampled(
                        "(iv) f∧g ≤ f∘g for fuzzy quasi-ideals",
                        true,
                        |k, i| {
                            let (f, g) = (sampler.sample(i), sampler.sample(i + m));
                            let lhs = self.meet_k(&f, &g, k);
                            self.le_or(k, i, &[&f, &g], &lhs, &self.compose(&f, &g, k))
                        },
                    ),
                ]
            }
            "C3.4" => {
                let quasi = self.members(Quasi);
                let sampler = self.sampler(Quasi, 0x34);
                let sq = |t: &[u64]| self.p(t[0], t[0]);
                let id1 = |t: &[u64]| t[0];
                let q_eq = {
                    let a = self.forall_tuples(
                        "(i) Q² = Q for all quasi-ideals",
                        Mode::Decisive,
                        &[&quasi],
                        id1,
                        sq,
                    );
                    if a.holds() {
                        self.forall_tuples(
                            "(i) Q² = Q for all quasi-ideals",
                            Mode::Decisive,
                            &[&quasi],
                            sq,
                            id1,
                        )
                    } else {
                        a
                    }
                };
                vec![
                    self.ir_condition(),
                    q_eq,
                    self.forall_elements("(ii) Sa = Sa² for every a", |a| {
                        self.sa(a) == self.sa2(a)
                    }),
                    self.sampled(
                        "(iii) f_k ≤ f∘f for fuzzy quasi-ideals",
                        true,
                        |k, i| {
                            let f = sampler.sample(i);
                            let lhs = fuzzy::truncate_k(&f, k);
                            self.le_or(k, i, &[&f], &lhs, &self.compose(&f, &f, k))
                        },
                    ),
                ]
            }
            "P4.1" => {
                let quasi = |bits: u64| ideals::holds(self.g, &self.set(bits), Quasi);
                vec![
                    self.forall_elements("Sa∩aS is a quasi-ideal for every a", |a| {
                        let s = self.sa(a) & self.p(self.single(a), self.full);
                        s != 0 && quasi(s)
                    }),
                    self.forall_elements("Sa is a quasi-ideal for every a", |a| quasi(self.sa(a))),
                    self.forall_elements("Sa² is a quasi-ideal for every a", |a| {
                        quasi(self.sa2(a))
                    }),
                ]
            }
            "C4.2" => vec![
                self.forall_elements("Sa·Sa = Sa² for every a", |a| {
                    self.p(self.sa(a), self.sa(a)) == self.sa2(a)
                }),
                self.forall_elements("Sa² = Sa²·S for every a", |a| {
                    self.sa2(a) == self.p(self.sa2(a), self.full)
                }),
            ],
            "P4.3" => vec![self.all_semiprime("every quasi-ideal is semiprime", Quasi)],
            "C3.7" => vec![
                self.all_semiprime("every left ideal is semiprime", Left),
                self.all_semiprime("every right ideal is semiprime", Right),
                self.all_semiprime("every generalized bi-ideal is semiprime", GeneralizedBi),
                self.all_semiprime(
                    "every generalized interior ideal is semiprime",
                    GeneralizedInterior,
                ),
            ],
            "R3.5" => vec![self.all_semiprime(
                "every generalized interior ideal is semiprime",
                GeneralizedInterior,
            )],
            "C3.5" => [Left, Right, GeneralizedBi, GeneralizedInterior]
                .into_iter()
                .enumerate()
                .map(|(j, kind)| {
                    let s = self.sampler(kind, 0x35 + j as u64);
                    self.sampled(
                        &format!("fuzzy {kind} ideals are fuzzy semiprime"),
                        true,
                        |k, i| {
                            let f = s.sample(i);
                            fuzzy::is_fuzzy_ideal(self.g, &f, k, Notion::Semiprime)
                                .expect("same carrier")
                                .counterexample
                                .map(|v| Evidence::Fuzzy {
                                    k,
                                    sample: i,
                                    maps: vec![f],
                                    element: v.operands[0],
                                })
                        },
                    )
                })
                .collect(),
            "C3.6" => {
                let units: Vec<usize> = self.g.left_identities().iter().collect();
                [Left, Right, GeneralizedBi, GeneralizedInterior]
                    .into_iter()
                    .enumerate()
                    .map(|(j, kind)| {
                        let s = self.sampler(kind, 0x36 + j as u64);
                        self.sampled(
                            &format!("f(a) = f(a²) ≥ f(e) for fuzzy {kind} ideals"),
                            false,
                            |k, i| {
                                let f = s.sample(i);
                                (0..n)
                                    .find(|&a| {
                                        let fa2 = f.get(self.g.square(a));
                                        f.get(a) != fa2 || units.iter().any(|&e| fa2 < f.get(e))
                                    })
                                    .map(|element| Evidence::Fuzzy {
                                        k,
                                        sample: i,
                                        maps: vec![f],
                                        element,
                                    })
                            },
                        )
                    })
                    .collect()
            }
            "C2.6" => {
                let right = self.members(Right);
                let left = self.members(Left);
                let sampler = self.sampler(Right, 0x26);
                vec![
                    ConditionEntry::decisive(
                        "every right ideal is a left ideal",
                        right
                            .iter()
                            .find(|b| !left.contains(b))
                            .map(|&b| Evidence::Subsets {
                                subsets: vec![self.set(b)],
                                element: None,
                            }),
                    ),
                    self.sampled(
                        "generated fuzzy right ideals are fuzzy left ideals",
                        true,
                        |k, i| self.implied(k, i, &sampler.sample(i), Left),
                    ),
                    self.sampled(
                        "random fuzzy right ideals are fuzzy left ideals",
                        true,
                        |k, i| {
                            let f = self.arbitrary(i, 2);
                            if fuzzy::fuzzy_holds(self.g, &f, k, Right.into()) {
                                self.implied(k, i, &f, Left)
                            } else {
                                None
                            }
                        },
                    ),
                ]
            }
            "C4.7" => {
                let quasi = self.members(Quasi);
                let sampler = self.sampler(Left, 0x47);
                let one_sided: Vec<u64> = {
                    let mut v = self.members(Left);
                    v.extend(self.members(Right));
                    v.sort_unstable();
                    v.dedup();
                    v
                };
                vec![
                    ConditionEntry::decisive(
                        "every left or right ideal is a quasi-ideal",
                        one_sided
                            .iter()
                            .find(|b| !quasi.contains(b))
                            .map(|&b| Evidence::Subsets {
                                subsets: vec![self.set(b)],
                                element: None,
                            }),
                    ),
                    self.sampled(
                        "generated fuzzy left ideals are fuzzy quasi-ideals",
                        true,
                        |k, i| self.implied(k, i, &sampler.sample(i), Quasi),
                    ),
                    self.sampled(
                        "random fuzzy left ideals are fuzzy quasi-ideals",
                        true,
                        |k, i| {
                            let f = self.arbitrary(i, 3);
                            if fuzzy::fuzzy_holds(self.g, &f, k, Left.into()) {
                                self.implied(k, i, &f, Quasi)
                            } else {
                                None
                            }
                        },
                    ),
                ]
            }
            "P2.2" => {
                let kinds: Vec<IdealKind> =
                    IdealKind::ALL.into_iter().filter(|&k| k != Quasi).collect();
                let mut out = Vec::new();
                for &kind in &kinds {
                    let exhaustive = self.cfg.k_values.iter().find_map(|&k| {
                        self.nonempty().find_map(|bits| {
                            let f = fuzzy::characteristic_k(&self.set(bits), k);
                            self.pointwise_disagrees(k, 0, &f, kind)
                        })
                    });
                    out.push(ConditionEntry::decisive(
                        format!("{kind}: both forms agree on every (C_A)_k"),
                        exhaustive,
                    ));
                    let gen = self.sampler(kind, 0x22);
                    out.push(self.sampled(
                        &format!("{kind}: both forms agree on random and generated maps"),
                        true,
                        |k, i| {
                            self.pointwise_disagrees(k, i, &self.arbitrary(i, 0), kind)
                                .or_else(|| self.pointwise_disagrees(k, i, &gen.sample(i), kind))
                        },
                    ));
                }
                out
            }
            "P2.3" | "P4.5" => {
                let notions: Vec<Notion> = if id == "P4.5" {
                    vec![Quasi.into()]
                } else {
                    Notion::ALL
                        .into_iter()
                        .filter(|&x| x != Notion::Kind(Quasi))
                        .collect()
                };
                notions
                    .into_iter()
                    .map(|notion| {
                        let gen = self.sampler(notion, 0x23);
                        self.sampled(
                            &format!("{notion}: predicate iff every level is crisp {notion}"),
                            true,
                            |k, i| {
                                self.levels_disagree(k, i, &self.arbitrary(i, 1), notion)
                                    .or_else(|| self.levels_disagree(k, i, &gen.sample(i), notion))
                            },
                        )
                    })
                    .collect()
            }
            "P2.5" | "P4.6" => {
                let notions: Vec<Notion> = if id == "P4.6" {
                    vec![Quasi.into()]
                } else {
                    Notion::ALL
                        .into_iter()
                        .filter(|&x| x != Notion::Kind(Quasi))
                        .collect()
                };
                notions
                    .into_iter()
                    .map(|notion| {
                        let failure = self.cfg.k_values.iter().find_map(|&k| {
                            self.nonempty().find_map(|bits| {
                                let a = self.set(bits);
                                let c = fuzzy::check_characteristic_correspondence(
                                    self.g, &a, k, notion,
                                )
                                .expect("nonempty");
                                (!c.agrees()).then(|| Evidence::Subsets {
                                    subsets: vec![a],
                                    element: None,
                                })
                            })
                        });
                        ConditionEntry::decisive(
                            format!("A is {notion} iff (C_A)_k is fuzzy {notion}"),
                            failure,
                        )
                    })
                    .collect()
            }
            "L2.7" => self.lemma27(&all),
            "L3.4" => {
                let per: Vec<witness::Lemma34Witnesses> = (0..n)
                    .map(|a| witness::lemma34_unchecked(self.g, a))
                    .collect();
                const ROMAN: [&str; 8] = ["i", "ii", "iii", "iv", "v", "vi", "vii", "viii"];
                let mut out: Vec<ConditionEntry> = ROMAN
                    .iter()
                    .map(|clause| {
                        let failing = per.iter().position(|w| w.missing().contains(clause));
                        ConditionEntry::decisive(
                            format!("({clause}) has a witness for every element"),
                            failing.map(|element| Evidence::Element { element }),
                        )
                    })
                    .collect();
                if let Some(first) = out.first_mut() {
                    *first = first
                        .clone()
                        .with_witness(Evidence::Witnesses { per_element: per });
                }
                out
            }
            _ => unreachable!("registry and dispatch disagree on {id}"),
        }
    }

    fn implied(&self, k: KParam, i: u64, f: &FuzzySubset, target: IdealKind) -> Option<Evidence> {
        fuzzy::is_fuzzy_ideal(self.g, f, k, target)
            .expect("same carrier")
            .counterexample
            .map(|v| Evidence::Fuzzy {
                k,
                sample: i,
                maps: vec![f.clone()],
                element: v.operands[0],
            })
    }

    fn pointwise_disagrees(
        &self,
        k: KParam,
        i: u64,
        f: &FuzzySubset,
        kind: IdealKind,
    ) -> Option<Evidence> {
        let a = fuzzy::fuzzy_holds(self.g, f, k, kind.into());
        let b = fuzzy::is_fuzzy_ideal_pointwise(self.g, f, k, kind).expect("has pointwise form");
        (a != b).then(|| Evidence::Fuzzy {
            k,
            sample: i,
            maps: vec![f.clone()],
            element: 0,
        })
    }

    fn levels_disagree(
        &self,
        k: KParam,
        i: u64,
        f: &FuzzySubset,
        notion: Notion,
    ) -> Option<Evidence> {
        let r = fuzzy::level_characterization_check(self.g, f, k, notion).expect("same carrier");
        (!r.agree).then(|| Evidence::Fuzzy {
            k,
            sample: i,
            maps: vec![f.clone()],
            element: r
                .levels
                .iter()
                .find(|l| !l.passes)
                .map_or(0, |l| l.level.iter().next().unwrap_or(0)),
        })
    }

    fn lemma27(&self, all: &[u64]) -> Vec<ConditionEntry> {
        let mut inter = None;
        let mut prod = None;
        let mut support = None;
        let mut pattern = None;
        let mut literal = None;
        for &k in &self.cfg.k_values {
            for &a in all {
                for &b in all {
                    let (sa, sb) = (self.set(a), self.set(b));
                    let r = fuzzy::check_lemma27(self.g, &sa, &sb, k).expect("nonempty");
                    let ev = || Evidence::Subsets {
                        subsets: vec![sa, sb],
                        element: None,
                    };
                    if !r.intersection_eq && inter.is_none() {
                        inter = Some(ev());
                    }
                    if !r.product_eq && prod.is_none() {
                        prod = Some(ev());
                    }
                    if !r.union_eq_on_support && support.is_none() {
                        support = Some(ev());
                    }
                    if r.union_mismatches != sa.union(&sb).complement() && pattern.is_none() {
                        pattern = Some(ev());
                    }
                    if !r.union_eq_literal && literal.is_none() {
                        literal = Some(Evidence::Subsets {
                            subsets: vec![sa, sb],
                            element: r.union_mismatches.iter().next(),
                        });
                    }
                }
            }
        }
        vec![
            ConditionEntry::decisive("(i) (C_{A∩B})_k = C_A ∧_k C_B", inter),
            ConditionEntry::decisive("(iii) (C_{AB})_k = C_A ∘_k C_B", prod),
            ConditionEntry::decisive("(ii) (C_{A∪B})_k = (C_A)_k ∨_k (C_B)_k on A∪B", support),
            ConditionEntry::decisive("(ii) the literal equality fails exactly off A∪B", pattern),
            ConditionEntry::informational(
                "(ii) (C_{A∪B})_k = (C_A)_k ∨_k (C_B)_k everywhere",
                literal,
            ),
        ]
    }
}
