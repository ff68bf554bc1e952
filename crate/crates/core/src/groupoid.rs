//! Finite groupoids given by Cayley tables, the AG identities, and subset
//! products.

use std::collections::HashSet;
use std::fmt;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::subset::{ElementSubset, MAX_ORDER};

/// A finite magma. Entry `(i, j)` of the table is `i·j`.
///
/// Elements are addressed by index; labels only matter for reading and
/// printing tables.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Groupoid {
    order: usize,
    table: Vec<u8>,
    labels: Vec<String>,
}

impl Groupoid {
    /// Builds a groupoid with labels `0..n`.
    pub fn from_rows(rows: &[Vec<usize>]) -> Result<Self> {
        let labels = (0..rows.len()).map(|i| i.to_string()).collect();
        Self::new(rows, labels)
    }

    pub fn new(rows: &[Vec<usize>], labels: Vec<String>) -> Result<Self> {
        let order = rows.len();
        if order == 0 {
            return Err(Error::EmptyCarrier);
        }
        if order > MAX_ORDER {
            return Err(Error::OrderTooLarge {
                order,
                max: MAX_ORDER,
            });
        }
        if labels.len() != order {
            return Err(Error::LabelCount {
                expected: order,
                got: labels.len(),
            });
        }
        let mut seen = HashSet::with_capacity(order);
        for l in &labels {
            if !seen.insert(l.as_str()) {
                return Err(Error::DuplicateLabel(l.clone()));
            }
        }
        let mut table = Vec::with_capacity(order * order);
        for (row, cells) in rows.iter().enumerate() {
            if cells.len() != order {
                return Err(Error::ColumnCount {
                    row,
                    cols: cells.len(),
                    order,
                });
            }
            for (col, &value) in cells.iter().enumerate() {
                if value >= order {
                    return Err(Error::EntryOutOfRange {
                        row,
                        col,
                        value,
                        order,
                    });
                }
                table.push(value as u8);
            }
        }
        Ok(Groupoid {
            order,
            table,
            labels,
        })
    }

    pub fn from_fn(order: usize, f: impl Fn(usize, usize) -> usize) -> Result<Self> {
        let rows: Vec<Vec<usize>> = (0..order)
            .map(|a| (0..order).map(|b| f(a, b)).collect())
            .collect();
        Self::from_rows(&rows)
    }

    /// Trusted constructor for tables produced inside the crate.
    pub(crate) fn from_flat(order: usize, table: Vec<u8>, labels: Vec<String>) -> Self {
        debug_assert_eq!(table.len(), order * order);
        debug_assert!(table.iter().all(|&v| (v as usize) < order));
        Groupoid {
            order,
            table,
            labels,
        }
    }

    pub(crate) fn default_labels(order: usize) -> Vec<String> {
        (0..order).map(|i| i.to_string()).collect()
    }

    #[inline]
    pub fn order(&self) -> usize {
        self.order
    }

    #[inline]
    pub fn mul(&self, a: usize, b: usize) -> usize {
        self.table[a * self.order + b] as usize
    }

    #[inline]
    pub fn square(&self, a: usize) -> usize {
        self.mul(a, a)
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn label(&self, index: usize) -> &str {
        &self.labels[index]
    }

    pub fn index_of(&self, label: &str) -> Option<usize> {
        self.labels.iter().position(|l| l == label)
    }

    /// Row-major flattened table.
    pub fn flat(&self) -> &[u8] {
        &self.table
    }

    pub fn rows(&self) -> Vec<Vec<usize>> {
        self.table
            .chunks(self.order)
            .map(|r| r.iter().map(|&v| v as usize).collect())
            .collect()
    }

    /// Same multiplication table, labels ignored.
    pub fn same_table(&self, other: &Groupoid) -> bool {
        self.order == other.order && self.table == other.table
    }

    pub fn with_labels(mut self, labels: Vec<String>) -> Result<Self> {
        let g = Groupoid::new(&self.rows(), labels)?;
        self.labels = g.labels;
        Ok(self)
    }

    pub fn check_element(&self, a: usize) -> Result<()> {
        if a < self.order {
            Ok(())
        } else {
            Err(Error::ElementOutOfRange {
                index: a,
                order: self.order,
            })
        }
    }

    pub fn check_subset(&self, s: &ElementSubset) -> Result<()> {
        if s.order() == self.order {
            Ok(())
        } else {
            Err(Error::OrderMismatch {
                subset: s.order(),
                groupoid: self.order,
            })
        }
    }

    pub fn carrier(&self) -> ElementSubset {
        ElementSubset::full(self.order)
    }

    pub fn subset(&self, elements: &[usize]) -> Result<ElementSubset> {
        ElementSubset::from_indices(self.order, elements.iter().copied())
    }

    /// Subset from element labels.
    pub fn subset_of_labels(&self, labels: &[&str]) -> Option<ElementSubset> {
        let mut s = ElementSubset::empty(self.order);
        for l in labels {
            s.insert(self.index_of(l)?);
        }
        Some(s)
    }

    /// Relabels through `perm`: element `i` becomes `perm[i]`.
    pub fn permuted(&self, perm: &[usize]) -> Groupoid {
        let n = self.order;
        let mut table = vec![0u8; n * n];
        let mut labels = vec![String::new(); n];
        for a in 0..n {
            labels[perm[a]] = self.labels[a].clone();
            for b in 0..n {
                table[perm[a] * n + perm[b]] = perm[self.mul(a, b)] as u8;
            }
        }
        Groupoid::from_flat(n, table, labels)
    }

    /// `{ a·b : a ∈ A, b ∈ B }`.
    pub fn subset_product(&self, a: &ElementSubset, b: &ElementSubset) -> Result<ElementSubset> {
        self.check_subset(a)?;
        self.check_subset(b)?;
        Ok(self.product(a, b))
    }

    /// Unchecked [`Groupoid::subset_product`] for internal hot loops.
    #[inline]
    pub(crate) fn product(&self, a: &ElementSubset, b: &ElementSubset) -> ElementSubset {
        let mut bits = 0u64;
        for x in a.iter() {
            let row = &self.table[x * self.order..(x + 1) * self.order];
            for y in b.iter() {
                bits |= 1 << row[y];
            }
        }
        ElementSubset::from_bits(self.order, bits).expect("product stays in carrier")
    }

    pub fn left_identities(&self) -> ElementSubset {
        let n = self.order;
        let mut out = ElementSubset::empty(n);
        for e in 0..n {
            if (0..n).all(|x| self.mul(e, x) == x) {
                out.insert(e);
            }
        }
        out
    }

    pub fn is_unitary(&self) -> bool {
        !self.left_identities().is_empty()
    }

    pub fn is_left_invertive(&self) -> bool {
        self.first_violation3(|a, b, c| self.mul(self.mul(a, b), c) == self.mul(self.mul(c, b), a))
            .is_none()
    }

    pub fn is_associative(&self) -> bool {
        self.first_violation3(|a, b, c| self.mul(self.mul(a, b), c) == self.mul(a, self.mul(b, c)))
            .is_none()
    }

    fn first_violation2(&self, ok: impl Fn(usize, usize) -> bool) -> Option<Vec<usize>> {
        let n = self.order;
        for a in 0..n {
            for b in 0..n {
                if !ok(a, b) {
                    return Some(vec![a, b]);
                }
            }
        }
        None
    }

    fn first_violation3(&self, ok: impl Fn(usize, usize, usize) -> bool) -> Option<Vec<usize>> {
        let n = self.order;
        for a in 0..n {
            for b in 0..n {
                for c in 0..n {
                    if !ok(a, b, c) {
                        return Some(vec![a, b, c]);
                    }
                }
            }
        }
        None
    }

    fn first_violation4(
        &self,
        ok: impl Fn(usize, usize, usize, usize) -> bool,
    ) -> Option<Vec<usize>> {
        let n = self.order;
        for a in 0..n {
            for b in 0..n {
                for c in 0..n {
                    for d in 0..n {
                        if !ok(a, b, c, d) {
                            return Some(vec![a, b, c, d]);
                        }
                    }
                }
            }
        }
        None
    }

    /// Exhaustively checks the AG identities and a few companions.
    pub fn check_identity_laws(&self) -> LawReport {
        let m = |a, b| self.mul(a, b);
        let left_invertive = self.first_violation3(|a, b, c| m(m(a, b), c) == m(m(c, b), a));
        let medial = self.first_violation4(|a, b, c, d| m(m(a, b), m(c, d)) == m(m(a, c), m(b, d)));
        let paramedial =
            self.first_violation4(|a, b, c, d| m(m(a, b), m(c, d)) == m(m(d, b), m(c, a)));
        let law4 = self.first_violation3(|a, b, c| m(a, m(b, c)) == m(b, m(a, c)));
        let law5 = self.first_violation4(|a, b, c, d| m(m(a, b), m(c, d)) == m(m(d, c), m(b, a)));
        let associative = self.first_violation3(|a, b, c| m(m(a, b), c) == m(a, m(b, c)));
        let commutative = self.first_violation2(|a, b| m(a, b) == m(b, a));
        let image = self.product(&self.carrier(), &self.carrier());
        let surjective = self.carrier().first_outside(&image).map(|x| vec![x]);
        LawReport {
            left_invertive: LawCheck::from_violation(left_invertive),
            medial: LawCheck::from_violation(medial),
            paramedial: LawCheck::from_violation(paramedial),
            law4: LawCheck::from_violation(law4),
            law5: LawCheck::from_violation(law5),
            associative: LawCheck::from_violation(associative),
            commutative: LawCheck::from_violation(commutative),
            surjective: LawCheck::from_violation(surjective),
        }
    }

    /// `Sa`, `aS`, `Sa²` and `Sa ∩ aS` for one element.
    pub fn principal_sets(&self, a: usize) -> Result<PrincipalSets> {
        self.check_element(a)?;
        let s = self.carrier();
        let single = ElementSubset::singleton(self.order, a);
        let sq = ElementSubset::singleton(self.order, self.square(a));
        let sa = self.product(&s, &single);
        let a_s = self.product(&single, &s);
        Ok(PrincipalSets {
            sa,
            a_s,
            sa2: self.product(&s, &sq),
            sa_cap_as: sa.intersection(&a_s),
        })
    }

    /// Turns an abelian group `(G, ∘)` into the groupoid `x·y = x⁻¹∘y`.
    ///
    /// The group axioms are checked first and the failing one is named in
    /// the error.
    pub fn from_abelian_group(group: &Groupoid) -> Result<Groupoid> {
        let n = group.order;
        let m = |a, b| group.mul(a, b);
        if let Some(v) = group.first_violation3(|a, b, c| m(m(a, b), c) == m(a, m(b, c))) {
            return Err(Error::NotAbelianGroup(format!(
                "not associative at ({}, {}, {})",
                group.label(v[0]),
                group.label(v[1]),
                group.label(v[2])
            )));
        }
        if let Some(v) = group.first_violation2(|a, b| m(a, b) == m(b, a)) {
            return Err(Error::NotAbelianGroup(format!(
                "not commutative at ({}, {})",
                group.label(v[0]),
                group.label(v[1])
            )));
        }
        let identity = (0..n)
            .find(|&e| (0..n).all(|x| m(e, x) == x && m(x, e) == x))
            .ok_or_else(|| Error::NotAbelianGroup("no two-sided identity".into()))?;
        let mut inverse = Vec::with_capacity(n);
        for x in 0..n {
            let inv = (0..n)
                .find(|&y| m(x, y) == identity && m(y, x) == identity)
                .ok_or_else(|| {
                    Error::NotAbelianGroup(format!("{} has no inverse", group.label(x)))
                })?;
            inverse.push(inv);
        }
        let mut table = Vec::with_capacity(n * n);
        for x in 0..n {
            for y in 0..n {
                table.push(m(inverse[x], y) as u8);
            }
        }
        Ok(Groupoid::from_flat(n, table, group.labels.clone()))
    }
}

impl fmt::Debug for Groupoid {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Groupoid{:?}", self.rows())
    }
}

impl Serialize for Groupoid {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        #[derive(Serialize)]
        struct Doc<'a> {
            order: usize,
            labels: &'a [String],
            table: Vec<Vec<&'a str>>,
        }
        let table = (0..self.order)
            .map(|a| {
                (0..self.order)
                    .map(|b| self.label(self.mul(a, b)))
                    .collect()
            })
            .collect();
        Doc {
            order: self.order,
            labels: &self.labels,
            table,
        }
        .serialize(serializer)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct LawCheck {
    pub holds: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub counterexample: Option<Vec<usize>>,
}

impl LawCheck {
    fn from_violation(v: Option<Vec<usize>>) -> Self {
        LawCheck {
            holds: v.is_none(),
            counterexample: v,
        }
    }
}

/// Verdicts for the identities `(ab)c = (cb)a`, `(ab)(cd) = (ac)(bd)`,
/// `(ab)(cd) = (db)(ca)`, `a(bc) = b(ac)`, `(ab)(cd) = (dc)(ba)`, plus
/// associativity, commutativity and `S·S = S`.
///
/// Counterexamples are the lexicographically least operand tuples.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct LawReport {
    pub left_invertive: LawCheck,
    pub medial: LawCheck,
    pub paramedial: LawCheck,
    pub law4: LawCheck,
    pub law5: LawCheck,
    pub associative: LawCheck,
    pub commutative: LawCheck,
    pub surjective: LawCheck,
}

impl LawReport {
    pub fn entries(&self) -> [(&'static str, &LawCheck); 8] {
        [
            ("left_invertive", &self.left_invertive),
            ("medial", &self.medial),
            ("paramedial", &self.paramedial),
            ("law4", &self.law4),
            ("law5", &self.law5),
            ("associative", &self.associative),
            ("commutative", &self.commutative),
            ("surjective", &self.surjective),
        ]
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct PrincipalSets {
    pub sa: ElementSubset,
    pub a_s: ElementSubset,
    pub sa2: ElementSubset,
    pub sa_cap_as: ElementSubset,
}
