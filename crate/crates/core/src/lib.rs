//! Finite AG-groupoids (left almost semigroups): identity checks, crisp and
//! `(∈, ∈∨q_k)`-fuzzy ideals, intra-regularity witnesses, exhaustive
//! enumeration, and machine checks of the characterizations of unitary
//! intra-regular AG-groupoids.

pub mod corpus;
pub mod enumerate;
pub mod error;
pub mod fuzzy;
pub mod grade;
pub mod groupoid;
pub mod ideals;
pub mod known;
pub mod subset;
pub mod verify;
pub mod witness;

pub use error::{Error, Result};
pub use grade::{Grade, KParam};
pub use groupoid::{Groupoid, LawReport};
pub use ideals::{IdealKind, Notion};
pub use subset::ElementSubset;
pub use verify::{check_statement, ConditionReport, FuzzyConfig};
