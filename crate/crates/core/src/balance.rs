//! Dual-threshold balancing: a scene becomes an opportunity when both its
//! market score and its readiness level reach their thresholds.

use alloc::collections::BTreeMap;
use alloc::string::String;
use alloc::vec::Vec;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::circumplex::SingleValue;
use crate::portfolio::{Portfolio, Technology};
use crate::readiness::{MAX_LEVEL, MIN_LEVEL};
use crate::session::{GroupKind, WorkshopSession, MAX_SCORE};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Error)]
pub enum ThresholdError {
    #[error("market threshold {0} is outside 0..=7")]
    Market(i64),
    #[error("TRL threshold {0} is outside 1..=9")]
    Trl(i64),
}

/// Inclusive lower bounds on market score and TRL.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(try_from = "RawThresholds")]
pub struct Thresholds {
    market_min: u8,
    trl_min: u8,
}

#[derive(Deserialize)]
struct RawThresholds {
    market_min: i64,
    trl_min: i64,
}

impl TryFrom<RawThresholds> for Thresholds {
    type Error = ThresholdError;

    fn try_from(raw: RawThresholds) -> Result<Self, Self::Error> {
        Thresholds::new(raw.market_min, raw.trl_min)
    }
}

impl Default for Thresholds {
    fn default() -> Self {
        Thresholds {
            market_min: 5,
            trl_min: 5,
        }
    }
}

impl Thresholds {
    pub fn new(market_min: i64, trl_min: i64) -> Result<Thresholds, ThresholdError> {
        if !(0..=MAX_SCORE as i64).contains(&market_min) {
            return Err(ThresholdError::Market(market_min));
        }
        if !(MIN_LEVEL as i64..=MAX_LEVEL as i64).contains(&trl_min) {
            return Err(ThresholdError::Trl(trl_min));
        }
        Ok(Thresholds {
            market_min: market_min as u8,
            trl_min: trl_min as u8,
        })
    }

    pub fn market_min(self) -> u8 {
        self.market_min
    }

    pub fn trl_min(self) -> u8 {
        self.trl_min
    }

    pub fn passes(self, market_score: u8, trl: u8) -> bool {
        market_score >= self.market_min && trl >= self.trl_min
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum AnalysisError {
    #[error("unknown technology `{0}`")]
    UnknownTechnology(String),
    #[error("session `{0}` is not complete")]
    IncompleteSession(String),
    #[error("session `{session}` does not evaluate a function of `{technology}`")]
    MixedTechnology { session: String, technology: String },
    #[error("session `{session}` belongs to group {actual}, expected {expected}")]
    MixedGroup {
        session: String,
        expected: GroupKind,
        actual: GroupKind,
    },
    #[error("technology `{technology}` has no completed {group} session")]
    MissingGroup {
        technology: String,
        group: GroupKind,
    },
}

impl AnalysisError {
    pub fn code(&self) -> &'static str {
        match self {
            AnalysisError::UnknownTechnology(_) => "unknown_technology",
            AnalysisError::IncompleteSession(_) => "incomplete_session",
            AnalysisError::MixedTechnology { .. } => "mixed_technology",
            AnalysisError::MixedGroup { .. } => "mixed_group",
            AnalysisError::MissingGroup { .. } => "missing_group",
        }
    }
}

/// A scene that cleared both thresholds.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Opportunity {
    pub technology: String,
    pub function: String,
    pub session: String,
    pub group: GroupKind,
    pub single_value: SingleValue,
    pub scene: String,
    pub market_score: u8,
    pub trl: u8,
}

/// Passing scenes from `sessions`, which must all be complete and belong
/// to `group` working on functions of `technology`. Ordered by function id,
/// then catalog order.
pub fn identify_opportunities(
    technology: &Technology,
    group: GroupKind,
    sessions: &[&WorkshopSession],
    thresholds: Thresholds,
) -> Result<Vec<Opportunity>, AnalysisError> {
    let mut out = Vec::new();
    for session in sessions {
        if !technology.owns_function(session.function()) {
            return Err(AnalysisError::MixedTechnology {
                session: session.id().into(),
                technology: technology.id.clone(),
            });
        }
        if session.group() != group {
            return Err(AnalysisError::MixedGroup {
                session: session.id().into(),
                expected: group,
                actual: session.group(),
            });
        }
        if !session.is_complete() {
            return Err(AnalysisError::IncompleteSession(session.id().into()));
        }
        for (v, record) in session.feasibility() {
            let Some(score) = session.score(v).filter(|s| !s.implicit_zero) else {
                continue;
            };
            if thresholds.passes(score.score, record.trl) {
                out.push(Opportunity {
                    technology: technology.id.clone(),
                    function: session.function().into(),
                    session: session.id().into(),
                    group,
                    single_value: v,
                    scene: session.scene(v).unwrap_or_default().into(),
                    market_score: score.score,
                    trl: record.trl,
                });
            }
        }
    }
    out.sort_by(|a, b| {
        (&a.function, a.single_value, &a.session).cmp(&(&b.function, b.single_value, &b.session))
    });
    Ok(out)
}

/// [`identify_opportunities`] over every session the portfolio holds for
/// `technology` and `group`.
pub fn portfolio_opportunities(
    portfolio: &Portfolio,
    technology: &str,
    group: GroupKind,
    thresholds: Thresholds,
) -> Result<Vec<Opportunity>, AnalysisError> {
    let tech = portfolio
        .technology(technology)
        .ok_or_else(|| AnalysisError::UnknownTechnology(technology.into()))?;
    let sessions: Vec<&WorkshopSession> = portfolio.sessions_for(tech, group).collect();
    identify_opportunities(tech, group, &sessions, thresholds)
}

/// Keeps one opportunity per single value: the highest market score, then
/// the smallest function id, then the highest TRL.
pub fn dedup_by_single_value(
    opportunities: impl IntoIterator<Item = Opportunity>,
) -> BTreeMap<SingleValue, Opportunity> {
    let mut best: BTreeMap<SingleValue, Opportunity> = BTreeMap::new();
    for opp in opportunities {
        match best.get(&opp.single_value) {
            Some(current) if !outranks(&opp, current) => {}
            _ => {
                best.insert(opp.single_value, opp);
            }
        }
    }
    best
}

fn outranks(a: &Opportunity, b: &Opportunity) -> bool {
    use core::cmp::Ordering::*;
    match a.market_score.cmp(&b.market_score) {
        Greater => true,
        Less => false,
        Equal => match a.function.cmp(&b.function) {
            Less => true,
            Greater => false,
            Equal => a.trl > b.trl,
        },
    }
}

/// One group's polygon on a technology's radar. `values[i]` is the best
/// passing score on `axes[i]`, or `None` when the group has nothing there.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct RadarSeries {
    pub technology: String,
    pub group: GroupKind,
    pub axes: Vec<SingleValue>,
    pub values: Vec<Option<u8>>,
}

impl RadarSeries {
    pub fn is_empty(&self) -> bool {
        self.values.iter().all(Option::is_none)
    }

    pub fn populated(&self) -> impl Iterator<Item = (SingleValue, u8)> + '_ {
        self.axes
            .iter()
            .zip(&self.values)
            .filter_map(|(a, v)| v.map(|v| (*a, v)))
    }
}

/// Both groups' series over the union of their deduplicated passing
/// values, technology deployment first.
pub fn radar_pair(
    portfolio: &Portfolio,
    technology: &str,
    thresholds: Thresholds,
) -> Result<[RadarSeries; 2], AnalysisError> {
    let best = GroupKind::ALL.map(|g| {
        portfolio_opportunities(portfolio, technology, g, thresholds).map(dedup_by_single_value)
    });
    let [expert, consumer] = best;
    let (expert, consumer) = (expert?, consumer?);
    let mut axes: Vec<SingleValue> = expert.keys().chain(consumer.keys()).copied().collect();
    axes.sort();
    axes.dedup();
    let series = |group, best: &BTreeMap<SingleValue, Opportunity>| RadarSeries {
        technology: technology.into(),
        group,
        values: axes
            .iter()
            .map(|a| best.get(a).map(|o| o.market_score))
            .collect(),
        axes: axes.clone(),
    };
    Ok([
        series(GroupKind::TechnologyDeployment, &expert),
        series(GroupKind::GeneralConsumers, &consumer),
    ])
}

pub fn radar_series(
    portfolio: &Portfolio,
    technology: &str,
    group: GroupKind,
    thresholds: Thresholds,
) -> Result<RadarSeries, AnalysisError> {
    let [expert, consumer] = radar_pair(portfolio, technology, thresholds)?;
    Ok(match group {
        GroupKind::TechnologyDeployment => expert,
        GroupKind::GeneralConsumers => consumer,
    })
}
