//! Statement checks over every small AG-groupoid up to isomorphism.

use rayon::prelude::*;
use serde::Serialize;

use crate::enumerate::{self, SearchConstraints, DEFAULT_ORDER_CAP};
use crate::error::{Error, Result};
use crate::groupoid::Groupoid;
use crate::verify::{self, ConditionReport, FuzzyConfig};

/// AG-groupoids without a left identity are only enumerated up to this
/// order; order 5 has tens of thousands of isomorphism classes.
pub const NON_UNITARY_CAP: usize = 4;

#[derive(Debug, Clone, Serialize)]
pub struct CorpusViolation {
    pub groupoid: Groupoid,
    pub report: ConditionReport,
}

#[derive(Debug, Clone, Default, Serialize)]
pub struct CorpusSummary {
    pub order_max: usize,
    pub statements: Vec<String>,
    pub groupoids_checked: usize,
    pub unitary_checked: usize,
    pub non_unitary_checked: usize,
    /// Applicable (groupoid, statement) pairs that were confirmed.
    pub agreements: usize,
    pub not_applicable: usize,
    pub violations: Vec<CorpusViolation>,
}

/// Unitary AG-groupoids of order `1..=order_max`, then the non-unitary ones
/// of order up to `min(order_max, NON_UNITARY_CAP)`, each in canonical form
/// and ascending order.
pub fn corpus(order_max: usize) -> Result<(Vec<Groupoid>, Vec<Groupoid>)> {
    if order_max == 0 {
        return Err(Error::EmptyCarrier);
    }
    if order_max > DEFAULT_ORDER_CAP {
        return Err(Error::OrderTooLarge {
            order: order_max,
            max: DEFAULT_ORDER_CAP,
        });
    }
    let mut unitary = Vec::new();
    let mut other = Vec::new();
    for n in 1..=order_max {
        unitary.extend(enumerate::enumerate_ag(
            SearchConstraints::all(n).unitary().up_to_iso(),
        )?);
        if n <= NON_UNITARY_CAP {
            other.extend(
                enumerate::enumerate_ag(SearchConstraints::all(n).up_to_iso())?
                    .into_iter()
                    .filter(|g| !g.is_unitary()),
            );
        }
    }
    Ok((unitary, other))
}

pub fn corpus_verify(
    order_max: usize,
    statement_ids: &[&str],
    cfg: &FuzzyConfig,
) -> Result<CorpusSummary> {
    let infos = statement_ids
        .iter()
        .map(|id| verify::statement(id))
        .collect::<Result<Vec<_>>>()?;
    let (unitary, other) = corpus(order_max)?;
    let any_non_unitary = infos.iter().any(|s| !s.requires_unit);
    let other = if any_non_unitary { other } else { Vec::new() };

    let jobs: Vec<(&Groupoid, &'static str)> = unitary
        .iter()
        .chain(other.iter())
        .flat_map(|g| {
            infos
                .iter()
                .filter(move |s| !s.requires_unit || g.is_unitary())
                .map(move |s| (g, s.id))
        })
        .collect();
    let reports = jobs
        .par_iter()
        .map(|&(g, id)| verify::check_statement(g, id, cfg))
        .collect::<Result<Vec<_>>>()?;

    let mut summary = CorpusSummary {
        order_max,
        statements: infos.iter().map(|s| s.id.to_string()).collect(),
        groupoids_checked: unitary.len() + other.len(),
        unitary_checked: unitary.len(),
        non_unitary_checked: other.len(),
        ..CorpusSummary::default()
    };
    for (&(g, _), report) in jobs.iter().zip(reports) {
        if !report.applicable {
            summary.not_applicable += 1;
        } else if report.confirmed {
            summary.agreements += 1;
        } else {
            summary.violations.push(CorpusViolation {
                groupoid: g.clone(),
                report,
            });
        }
    }
    Ok(summary)
}
