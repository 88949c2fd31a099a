//! Portfolio diagnostics: value breadth and vision gap.
//!
//! Value breadth counts the distinct single values with at least one
//! passing opportunity. The vision gap compares the value types those
//! values belong to, expert group against consumer group.

use alloc::collections::BTreeSet;
use alloc::string::String;
use alloc::vec::Vec;

use serde::Serialize;

use crate::balance::{
    dedup_by_single_value, portfolio_opportunities, radar_pair, AnalysisError, RadarSeries,
    Thresholds,
};
use crate::circumplex::{SingleValue, ValueType};
use crate::portfolio::{Outcome, Portfolio};
use crate::session::GroupKind;

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct BreadthResult {
    pub technology: String,
    pub group: GroupKind,
    pub breadth: usize,
    pub singles: Vec<SingleValue>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum GapClass {
    /// Every consumer type is also an expert type.
    Encompassing,
    /// Some overlap, but consumers have types the experts lack.
    Partial,
    /// Consumers found types and none of them overlap the experts'.
    Disjoint,
}

impl GapClass {
    pub fn label(self) -> &'static str {
        match self {
            GapClass::Encompassing => "Encompassing",
            GapClass::Partial => "Partial",
            GapClass::Disjoint => "Disjoint",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct VisionGapResult {
    pub technology: String,
    pub expert_types: BTreeSet<ValueType>,
    pub consumer_types: BTreeSet<ValueType>,
    pub classification: GapClass,
    /// Expert types consumers did not reach.
    pub gap_types: BTreeSet<ValueType>,
    /// Consumer types the experts did not reach.
    pub mismatch_types: BTreeSet<ValueType>,
    /// Set when the consumer set is empty, so containment holds trivially.
    pub vacuous: bool,
}

/// Classifies two type sets. Only set membership matters.
pub fn classify(expert: &BTreeSet<ValueType>, consumer: &BTreeSet<ValueType>) -> GapClass {
    if consumer.is_subset(expert) {
        GapClass::Encompassing
    } else if expert.is_disjoint(consumer) {
        GapClass::Disjoint
    } else {
        GapClass::Partial
    }
}

fn passing_singles(
    portfolio: &Portfolio,
    technology: &str,
    group: GroupKind,
    thresholds: Thresholds,
) -> Result<Vec<SingleValue>, AnalysisError> {
    let opportunities = portfolio_opportunities(portfolio, technology, group, thresholds)?;
    Ok(dedup_by_single_value(opportunities).into_keys().collect())
}

/// Value types of the deduplicated passing single values.
pub fn derived_value_types(
    portfolio: &Portfolio,
    technology: &str,
    group: GroupKind,
    thresholds: Thresholds,
) -> Result<BTreeSet<ValueType>, AnalysisError> {
    let singles = passing_singles(portfolio, technology, group, thresholds)?;
    Ok(singles.into_iter().map(SingleValue::value_type).collect())
}

/// Distinct passing single values for `group`. The expert group is the
/// headline figure; the consumer count is reported alongside it.
pub fn value_breadth(
    portfolio: &Portfolio,
    technology: &str,
    group: GroupKind,
    thresholds: Thresholds,
) -> Result<BreadthResult, AnalysisError> {
    let singles = passing_singles(portfolio, technology, group, thresholds)?;
    Ok(BreadthResult {
        technology: technology.into(),
        group,
        breadth: singles.len(),
        singles,
    })
}

pub fn vision_gap(
    portfolio: &Portfolio,
    technology: &str,
    thresholds: Thresholds,
) -> Result<VisionGapResult, AnalysisError> {
    let tech = portfolio
        .technology(technology)
        .ok_or_else(|| AnalysisError::UnknownTechnology(technology.into()))?;
    for group in GroupKind::ALL {
        if !portfolio.sessions_for(tech, group).any(|s| s.is_complete()) {
            return Err(AnalysisError::MissingGroup {
                technology: technology.into(),
                group,
            });
        }
    }
    let expert = derived_value_types(
        portfolio,
        technology,
        GroupKind::TechnologyDeployment,
        thresholds,
    )?;
    let consumer = derived_value_types(
        portfolio,
        technology,
        GroupKind::GeneralConsumers,
        thresholds,
    )?;
    Ok(VisionGapResult {
        technology: technology.into(),
        classification: classify(&expert, &consumer),
        gap_types: expert.difference(&consumer).copied().collect(),
        mismatch_types: consumer.difference(&expert).copied().collect(),
        vacuous: consumer.is_empty(),
        expert_types: expert,
        consumer_types: consumer,
    })
}

/// Everything computed for one technology at one threshold pair.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct TechnologyAnalysis {
    pub technology: String,
    pub name: String,
    pub outcome: Outcome,
    pub thresholds: Thresholds,
    pub expert_breadth: BreadthResult,
    pub consumer_breadth: BreadthResult,
    pub vision_gap: VisionGapResult,
    pub radar: [RadarSeries; 2],
}

pub fn analyze_technology(
    portfolio: &Portfolio,
    technology: &str,
    thresholds: Thresholds,
) -> Result<TechnologyAnalysis, AnalysisError> {
    let tech = portfolio
        .technology(technology)
        .ok_or_else(|| AnalysisError::UnknownTechnology(technology.into()))?;
    Ok(TechnologyAnalysis {
        technology: tech.id.clone(),
        name: tech.name.clone(),
        outcome: tech.outcome,
        thresholds,
        expert_breadth: value_breadth(
            portfolio,
            technology,
            GroupKind::TechnologyDeployment,
            thresholds,
        )?,
        consumer_breadth: value_breadth(
            portfolio,
            technology,
            GroupKind::GeneralConsumers,
            thresholds,
        )?,
        vision_gap: vision_gap(portfolio, technology, thresholds)?,
        radar: radar_pair(portfolio, technology, thresholds)?,
    })
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct PortfolioReport {
    pub thresholds: Thresholds,
    /// Sorted by expert breadth, largest first; ties keep portfolio order.
    pub technologies: Vec<TechnologyAnalysis>,
}

pub fn portfolio_report(
    portfolio: &Portfolio,
    thresholds: Thresholds,
) -> Result<PortfolioReport, AnalysisError> {
    let mut technologies = portfolio
        .technologies
        .iter()
        .map(|t| analyze_technology(portfolio, &t.id, thresholds))
        .collect::<Result<Vec<_>, _>>()?;
    technologies.sort_by_key(|t| core::cmp::Reverse(t.expert_breadth.breadth));
    Ok(PortfolioReport {
        thresholds,
        technologies,
    })
}
