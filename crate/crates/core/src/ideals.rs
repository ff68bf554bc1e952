//! Crisp ideal notions: (generalized) bi-ideals, (generalized) interior
//! ideals, one- and two-sided ideals, quasi-ideals and semiprime subsets.

use std::fmt;
use std::str::FromStr;

use rayon::prelude::*;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::groupoid::Groupoid;
use crate::subset::ElementSubset;

/// Largest order for which [`enumerate_ideals`] scans all subsets.
pub const ENUMERATION_CAP: usize = 16;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum IdealKind {
    Subgroupoid,
    Left,
    Right,
    TwoSided,
    GeneralizedBi,
    Bi,
    GeneralizedInterior,
    Interior,
    Quasi,
}

impl IdealKind {
    pub const ALL: [IdealKind; 9] = [
        IdealKind::Subgroupoid,
        IdealKind::Left,
        IdealKind::Right,
        IdealKind::TwoSided,
        IdealKind::GeneralizedBi,
        IdealKind::Bi,
        IdealKind::GeneralizedInterior,
        IdealKind::Interior,
        IdealKind::Quasi,
    ];

    pub fn name(self) -> &'static str {
        match self {
            IdealKind::Subgroupoid => "subgroupoid",
            IdealKind::Left => "left",
            IdealKind::Right => "right",
            IdealKind::TwoSided => "two-sided",
            IdealKind::GeneralizedBi => "generalized-bi",
            IdealKind::Bi => "bi",
            IdealKind::GeneralizedInterior => "generalized-interior",
            IdealKind::Interior => "interior",
            IdealKind::Quasi => "quasi",
        }
    }
}

impl fmt::Display for IdealKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for IdealKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let norm = s.to_ascii_lowercase().replace('_', "-");
        let kind = match norm.as_str() {
            "subgroupoid" | "sub" => IdealKind::Subgroupoid,
            "left" => IdealKind::Left,
            "right" => IdealKind::Right,
            "two-sided" | "twosided" | "ideal" => IdealKind::TwoSided,
            "generalized-bi" | "gbi" => IdealKind::GeneralizedBi,
            "bi" => IdealKind::Bi,
            "generalized-interior" | "ginterior" => IdealKind::GeneralizedInterior,
            "interior" => IdealKind::Interior,
            "quasi" => IdealKind::Quasi,
            _ => return Err(Error::UnknownKind(s.to_string())),
        };
        Ok(kind)
    }
}

/// An ideal kind or semiprimeness; the set of notions that have both a crisp
/// and a fuzzy form.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Notion {
    Kind(IdealKind),
    Semiprime,
}

impl Notion {
    pub const ALL: [Notion; 10] = [
        Notion::Kind(IdealKind::Subgroupoid),
        Notion::Kind(IdealKind::Left),
        Notion::Kind(IdealKind::Right),
        Notion::Kind(IdealKind::TwoSided),
        Notion::Kind(IdealKind::GeneralizedBi),
        Notion::Kind(IdealKind::Bi),
        Notion::Kind(IdealKind::GeneralizedInterior),
        Notion::Kind(IdealKind::Interior),
        Notion::Kind(IdealKind::Quasi),
        Notion::Semiprime,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Notion::Kind(k) => k.name(),
            Notion::Semiprime => "semiprime",
        }
    }
}

impl From<IdealKind> for Notion {
    fn from(k: IdealKind) -> Self {
        Notion::Kind(k)
    }
}

impl fmt::Display for Notion {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Notion {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        if s.eq_ignore_ascii_case("semiprime") {
            Ok(Notion::Semiprime)
        } else {
            s.parse().map(Notion::Kind)
        }
    }
}

impl Serialize for Notion {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(self.name())
    }
}

/// The least product that escapes the subset.
///
/// `condition` names the atomic containment that failed (for conjunctive
/// kinds this tells which half broke).
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Violation {
    pub condition: &'static str,
    pub operands: Vec<usize>,
    pub product: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct IdealVerdict {
    pub holds: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub counterexample: Option<Violation>,
}

impl IdealVerdict {
    fn from_violation(v: Option<Violation>) -> Self {
        IdealVerdict {
            holds: v.is_none(),
            counterexample: v,
        }
    }
}

/// Containment test only; callers guarantee `a` is nonempty and bound to `g`.
pub(crate) fn holds(g: &Groupoid, a: &ElementSubset, kind: IdealKind) -> bool {
    let s = g.carrier();
    match kind {
        IdealKind::Subgroupoid => g.product(a, a).is_subset(a),
        IdealKind::Left => g.product(&s, a).is_subset(a),
        IdealKind::Right => g.product(a, &s).is_subset(a),
        IdealKind::TwoSided => holds(g, a, IdealKind::Left) && holds(g, a, IdealKind::Right),
        IdealKind::GeneralizedBi => g.product(&g.product(a, &s), a).is_subset(a),
        IdealKind::Bi => {
            holds(g, a, IdealKind::Subgroupoid) && holds(g, a, IdealKind::GeneralizedBi)
        }
        IdealKind::GeneralizedInterior => g.product(&g.product(&s, a), &s).is_subset(a),
        IdealKind::Interior => {
            holds(g, a, IdealKind::Subgroupoid) && holds(g, a, IdealKind::GeneralizedInterior)
        }
        IdealKind::Quasi => g
            .product(&s, a)
            .intersection(&g.product(a, &s))
            .is_subset(a),
    }
}

pub(crate) fn semiprime(g: &Groupoid, a: &ElementSubset) -> bool {
    (0..g.order()).all(|x| !a.contains(g.square(x)) || a.contains(x))
}

pub(crate) fn notion_holds(g: &Groupoid, a: &ElementSubset, notion: Notion) -> bool {
    match notion {
        Notion::Kind(k) => holds(g, a, k),
        Notion::Semiprime => semiprime(g, a),
    }
}

fn first_pair(
    g: &Groupoid,
    left: &ElementSubset,
    right: &ElementSubset,
    target: &ElementSubset,
    condition: &'static str,
) -> Option<Violation> {
    for x in left.iter() {
        for y in right.iter() {
            let p = g.mul(x, y);
            if !target.contains(p) {
                return Some(Violation {
                    condition,
                    operands: vec![x, y],
                    product: p,
                });
            }
        }
    }
    None
}

fn first_triple(
    g: &Groupoid,
    sets: [&ElementSubset; 3],
    target: &ElementSubset,
    condition: &'static str,
) -> Option<Violation> {
    for x in sets[0].iter() {
        for y in sets[1].iter() {
            let xy = g.mul(x, y);
            for z in sets[2].iter() {
                let p = g.mul(xy, z);
                if !target.contains(p) {
                    return Some(Violation {
                        condition,
                        operands: vec![x, y, z],
                        product: p,
                    });
                }
            }
        }
    }
    None
}

fn violation(g: &Groupoid, a: &ElementSubset, kind: IdealKind) -> Option<Violation> {
    let s = g.carrier();
    match kind {
        IdealKind::Subgroupoid => first_pair(g, a, a, a, "subgroupoid"),
        IdealKind::Left => first_pair(g, &s, a, a, "left"),
        IdealKind::Right => first_pair(g, a, &s, a, "right"),
        IdealKind::TwoSided => {
            violation(g, a, IdealKind::Left).or_else(|| violation(g, a, IdealKind::Right))
        }
        IdealKind::GeneralizedBi => first_triple(g, [a, &s, a], a, "generalized-bi"),
        IdealKind::Bi => violation(g, a, IdealKind::Subgroupoid)
            .or_else(|| violation(g, a, IdealKind::GeneralizedBi)),
        IdealKind::GeneralizedInterior => first_triple(g, [&s, a, &s], a, "generalized-interior"),
        IdealKind::Interior => violation(g, a, IdealKind::Subgroupoid)
            .or_else(|| violation(g, a, IdealKind::GeneralizedInterior)),
        IdealKind::Quasi => {
            let both = g.product(&s, a).intersection(&g.product(a, &s));
            both.first_outside(a).map(|x| Violation {
                condition: "quasi",
                operands: vec![x],
                product: x,
            })
        }
    }
}

fn check_nonempty(g: &Groupoid, a: &ElementSubset) -> Result<()> {
    g.check_subset(a)?;
    if a.is_empty() {
        Err(Error::EmptySubset)
    } else {
        Ok(())
    }
}

pub fn is_ideal(g: &Groupoid, a: &ElementSubset, kind: IdealKind) -> Result<IdealVerdict> {
    check_nonempty(g, a)?;
    Ok(IdealVerdict::from_violation(violation(g, a, kind)))
}

pub fn is_semiprime_subset(g: &Groupoid, a: &ElementSubset) -> Result<bool> {
    check_nonempty(g, a)?;
    Ok(semiprime(g, a))
}

/// Least `x` with `x² ∈ A` but `x ∉ A`.
pub fn semiprime_violation(g: &Groupoid, a: &ElementSubset) -> Option<Violation> {
    (0..g.order())
        .find(|&x| a.contains(g.square(x)) && !a.contains(x))
        .map(|x| Violation {
            condition: "semiprime",
            operands: vec![x],
            product: g.square(x),
        })
}

pub fn check_notion(g: &Groupoid, a: &ElementSubset, notion: Notion) -> Result<IdealVerdict> {
    match notion {
        Notion::Kind(k) => is_ideal(g, a, k),
        Notion::Semiprime => {
            check_nonempty(g, a)?;
            Ok(IdealVerdict::from_violation(semiprime_violation(g, a)))
        }
    }
}

/// Every nonempty subset of kind `kind`, ascending by bitset.
pub fn enumerate_ideals(
    g: &Groupoid,
    kind: IdealKind,
    semiprime_only: bool,
) -> Result<Vec<ElementSubset>> {
    let n = g.order();
    if n > ENUMERATION_CAP {
        return Err(Error::OrderTooLarge {
            order: n,
            max: ENUMERATION_CAP,
        });
    }
    let last = (1u64 << n) - 1;
    let keep = |bits: u64| {
        let a = ElementSubset::from_bits(n, bits).expect("in range");
        (holds(g, &a, kind) && (!semiprime_only || semiprime(g, &a))).then_some(a)
    };
    if n <= 8 {
        Ok((1..=last).filter_map(keep).collect())
    } else {
        Ok((1..=last).into_par_iter().filter_map(keep).collect())
    }
}

/// Every nonempty subset with the notion, ascending by bitset.
pub fn enumerate_notion(g: &Groupoid, notion: Notion) -> Result<Vec<ElementSubset>> {
    if g.order() > ENUMERATION_CAP {
        return Err(Error::OrderTooLarge {
            order: g.order(),
            max: ENUMERATION_CAP,
        });
    }
    Ok(all_of(g, notion))
}

/// Same as [`enumerate_ideals`] for any notion, without the cap check.
pub(crate) fn all_of(g: &Groupoid, notion: Notion) -> Vec<ElementSubset> {
    ElementSubset::all_nonempty(g.order())
        .filter(|a| notion_holds(g, a, notion))
        .collect()
}
