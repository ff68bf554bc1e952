//! Intra-regularity witnesses and the identities that unitary intra-regular
//! AG-groupoids satisfy elementwise.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::groupoid::Groupoid;

/// Least `(x, y)` in lexicographic order with `(x·a²)·y = a`.
pub fn intra_regular_witness(g: &Groupoid, a: usize) -> Result<Option<(usize, usize)>> {
    g.check_element(a)?;
    Ok(witness(g, a))
}

pub(crate) fn witness(g: &Groupoid, a: usize) -> Option<(usize, usize)> {
    let n = g.order();
    let sq = g.square(a);
    for x in 0..n {
        let left = g.mul(x, sq);
        for y in 0..n {
            if g.mul(left, y) == a {
                return Some((x, y));
            }
        }
    }
    None
}

pub fn verify_intra_witness(g: &Groupoid, a: usize, x: usize, y: usize) -> Result<bool> {
    for i in [a, x, y] {
        g.check_element(i)?;
    }
    Ok(g.mul(g.mul(x, g.square(a)), y) == a)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct IntraRegularVerdict {
    pub holds: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub failing_element: Option<usize>,
}

pub fn is_intra_regular(g: &Groupoid) -> IntraRegularVerdict {
    let failing_element = (0..g.order()).find(|&a| witness(g, a).is_none());
    IntraRegularVerdict {
        holds: failing_element.is_none(),
        failing_element,
    }
}

/// Least witnesses for the eight identities below, for one element `a`:
///
/// ```text
/// (i)    a = a·(z·a)
/// (ii)   a = (w·a)·a
/// (iii)  a = (a²·(x²·y²))·a
/// (iv)   a = (a·(x²·y²))·a²
/// (v)    a = a²·((a·y²)·x²)
/// (vi)   a = (a·((y²·x²)·a))·a
/// (vii)  a = (a²·z)·a²
/// (viii) a² = (a·z)·a
/// ```
///
/// A `None` entry is a violation of the identity, not an input error.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct Lemma34Witnesses {
    pub clause1: Option<usize>,
    pub clause2: Option<usize>,
    pub clause3: Option<(usize, usize)>,
    pub clause4: Option<(usize, usize)>,
    pub clause5: Option<(usize, usize)>,
    pub clause6: Option<(usize, usize)>,
    pub clause7: Option<usize>,
    pub clause8: Option<usize>,
}

impl Lemma34Witnesses {
    pub fn complete(&self) -> bool {
        self.missing().is_empty()
    }

    /// Roman numerals of clauses with no witness.
    pub fn missing(&self) -> Vec<&'static str> {
        let singles = [
            ("i", self.clause1),
            ("ii", self.clause2),
            ("vii", self.clause7),
            ("viii", self.clause8),
        ];
        let pairs = [
            ("iii", self.clause3),
            ("iv", self.clause4),
            ("v", self.clause5),
            ("vi", self.clause6),
        ];
        let mut out: Vec<&'static str> = singles
            .iter()
            .filter(|(_, w)| w.is_none())
            .map(|(c, _)| *c)
            .chain(pairs.iter().filter(|(_, w)| w.is_none()).map(|(c, _)| *c))
            .collect();
        out.sort_by_key(|c| CLAUSES.iter().position(|x| x == c));
        out
    }
}

const CLAUSES: [&str; 8] = ["i", "ii", "iii", "iv", "v", "vi", "vii", "viii"];

/// Does `(x, y)` (or `z` in `x`) satisfy the given clause for `a`?
pub fn lemma34_clause_holds(g: &Groupoid, a: usize, clause: usize, x: usize, y: usize) -> bool {
    let m = |p, q| g.mul(p, q);
    let a2 = g.square(a);
    let (x2, y2) = (g.square(x), g.square(y));
    match clause {
        1 => m(a, m(x, a)) == a,
        2 => m(m(x, a), a) == a,
        3 => m(m(a2, m(x2, y2)), a) == a,
        4 => m(m(a, m(x2, y2)), a2) == a,
        5 => m(a2, m(m(a, y2), x2)) == a,
        6 => m(m(a, m(m(y2, x2), a)), a) == a,
        7 => m(m(a2, x), a2) == a,
        8 => m(m(a, x), a) == a2,
        _ => false,
    }
}

pub fn lemma34_witnesses(g: &Groupoid, a: usize) -> Result<Lemma34Witnesses> {
    g.check_element(a)?;
    if !g.is_unitary() {
        return Err(Error::NotUnitary);
    }
    if witness(g, a).is_none() {
        return Err(Error::NotIntraRegular(a));
    }
    Ok(lemma34_unchecked(g, a))
}

pub(crate) fn lemma34_unchecked(g: &Groupoid, a: usize) -> Lemma34Witnesses {
    let n = g.order();
    let single = |c| (0..n).find(|&z| lemma34_clause_holds(g, a, c, z, 0));
    let pair = |c| {
        (0..n)
            .flat_map(|x| (0..n).map(move |y| (x, y)))
            .find(|&(x, y)| lemma34_clause_holds(g, a, c, x, y))
    };
    Lemma34Witnesses {
        clause1: single(1),
        clause2: single(2),
        clause3: pair(3),
        clause4: pair(4),
        clause5: pair(5),
        clause6: pair(6),
        clause7: single(7),
        clause8: single(8),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::known;

    fn idx(g: &Groupoid, l: &str) -> usize {
        g.index_of(l).unwrap()
    }

    #[test]
    fn example3_witnesses() {
        let g = known::example3();
        let w = intra_regular_witness(&g, idx(&g, "4")).unwrap().unwrap();
        assert_eq!((g.label(w.0), g.label(w.1)), ("3", "6"));
        let printed = [
            ("1", "1", "1"),
            ("2", "2", "2"),
            ("3", "3", "5"),
            ("4", "6", "3"),
            ("5", "5", "5"),
            ("6", "4", "3"),
        ];
        for (a, x, y) in printed {
            assert!(verify_intra_witness(&g, idx(&g, a), idx(&g, x), idx(&g, y)).unwrap());
        }
        assert!(!verify_intra_witness(&g, idx(&g, "3"), idx(&g, "1"), idx(&g, "1")).unwrap());
        assert!(is_intra_regular(&g).holds);
    }

    #[test]
    fn multiplication_mod_4_is_not_intra_regular() {
        let g = known::mult_mod(4);
        assert_eq!(intra_regular_witness(&g, 2).unwrap(), None);
        assert_eq!(is_intra_regular(&g).failing_element, Some(2));
    }

    #[test]
    fn trivial_cases() {
        let g = known::trivial();
        assert_eq!(intra_regular_witness(&g, 0).unwrap(), Some((0, 0)));
        assert!(verify_intra_witness(&g, 0, 0, 0).unwrap());
        assert!(intra_regular_witness(&g, 1).is_err());
    }

    #[test]
    fn group_derived_witnesses() {
        let g = Groupoid::from_abelian_group(&known::cyclic_group(3)).unwrap();
        assert!(is_intra_regular(&g).holds);
        let w = lemma34_witnesses(&g, 1).unwrap();
        // x·y = y - x (mod 3): a·(z·a) = -z, and (a·z)·a = 2a - z.
        assert_eq!(w.clause1, Some(2));
        assert_eq!(w.clause8, Some(2));
        assert!(w.complete());
        let e = g.left_identities().iter().next().unwrap();
        assert!(lemma34_clause_holds(&g, e, 1, e, 0));
    }

    #[test]
    fn lemma34_preconditions() {
        assert_eq!(
            lemma34_witnesses(&known::example3(), 0),
            Err(Error::NotUnitary)
        );
        assert_eq!(
            lemma34_witnesses(&known::mult_mod(4), 2),
            Err(Error::NotIntraRegular(2))
        );
    }
}
