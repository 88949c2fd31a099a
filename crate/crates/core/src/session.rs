//! Workshop sessions: one participant group working through one technology
//! function, stage by stage.
//!
//! Every mutation takes the revision the caller last saw. A mismatch fails
//! with [`SessionError::Conflict`] before anything else is checked, and a
//! successful mutation bumps the revision by exactly one.

use alloc::collections::{BTreeMap, BTreeSet};
use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;
use core::str::FromStr;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::circumplex::{SingleValue, ValueType};
use crate::readiness::{Trl, MAX_LEVEL, MIN_LEVEL};

/// Highest market-side score.
pub const MAX_SCORE: u8 = 7;

/// Market threshold applied at technology-side evaluation unless reconfigured.
pub const DEFAULT_MARKET_THRESHOLD: u8 = 5;

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum GroupKind {
    GeneralConsumers,
    TechnologyDeployment,
}

impl GroupKind {
    pub const ALL: [GroupKind; 2] = [GroupKind::TechnologyDeployment, GroupKind::GeneralConsumers];

    pub fn as_str(self) -> &'static str {
        match self {
            GroupKind::GeneralConsumers => "general_consumers",
            GroupKind::TechnologyDeployment => "technology_deployment",
        }
    }

    pub fn label(self) -> &'static str {
        match self {
            GroupKind::GeneralConsumers => "General Consumers",
            GroupKind::TechnologyDeployment => "Technology Deployment",
        }
    }

    pub fn other(self) -> GroupKind {
        match self {
            GroupKind::GeneralConsumers => GroupKind::TechnologyDeployment,
            GroupKind::TechnologyDeployment => GroupKind::GeneralConsumers,
        }
    }
}

impl fmt::Display for GroupKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for GroupKind {
    type Err = SessionError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "general_consumers" => Ok(GroupKind::GeneralConsumers),
            "technology_deployment" => Ok(GroupKind::TechnologyDeployment),
            other => Err(SessionError::UnknownGroup(other.into())),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Stage {
    Setup,
    ValueIdentification,
    SceneDescription,
    Scoring,
    TechEvaluation,
    Complete,
}

impl Stage {
    pub const ALL: [Stage; 6] = [
        Stage::Setup,
        Stage::ValueIdentification,
        Stage::SceneDescription,
        Stage::Scoring,
        Stage::TechEvaluation,
        Stage::Complete,
    ];

    pub fn next(self) -> Option<Stage> {
        match self {
            Stage::Setup => Some(Stage::ValueIdentification),
            Stage::ValueIdentification => Some(Stage::SceneDescription),
            Stage::SceneDescription => Some(Stage::Scoring),
            Stage::Scoring => Some(Stage::TechEvaluation),
            Stage::TechEvaluation => Some(Stage::Complete),
            Stage::Complete => None,
        }
    }
}

impl fmt::Display for Stage {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            Stage::Setup => "setup",
            Stage::ValueIdentification => "value_identification",
            Stage::SceneDescription => "scene_description",
            Stage::Scoring => "scoring",
            Stage::TechEvaluation => "tech_evaluation",
            Stage::Complete => "complete",
        };
        f.write_str(s)
    }
}

/// Calendar date in `YYYY-MM-DD` form.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(try_from = "String", into = "String")]
pub struct WorkshopDate {
    year: u16,
    month: u8,
    day: u8,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("invalid date `{0}`, expected YYYY-MM-DD")]
pub struct InvalidDate(pub String);

impl WorkshopDate {
    pub fn new(year: u16, month: u8, day: u8) -> Result<WorkshopDate, InvalidDate> {
        let leap = (year.is_multiple_of(4) && !year.is_multiple_of(100)) || year.is_multiple_of(400);
        let days = match month {
            1 | 3 | 5 | 7 | 8 | 10 | 12 => 31,
            4 | 6 | 9 | 11 => 30,
            2 if leap => 29,
            2 => 28,
            _ => 0,
        };
        if day == 0 || day > days {
            return Err(InvalidDate(format!("{year:04}-{month:02}-{day:02}")));
        }
        Ok(WorkshopDate { year, month, day })
    }
}

impl FromStr for WorkshopDate {
    type Err = InvalidDate;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let err = || InvalidDate(s.into());
        let b = s.as_bytes();
        if b.len() != 10 || b[4] != b'-' || b[7] != b'-' {
            return Err(err());
        }
        let year = s[0..4].parse().map_err(|_| err())?;
        let month = s[5..7].parse().map_err(|_| err())?;
        let day = s[8..10].parse().map_err(|_| err())?;
        WorkshopDate::new(year, month, day).map_err(|_| err())
    }
}

impl TryFrom<String> for WorkshopDate {
    type Error = InvalidDate;

    fn try_from(s: String) -> Result<Self, Self::Error> {
        s.parse()
    }
}

impl From<WorkshopDate> for String {
    fn from(d: WorkshopDate) -> String {
        format!("{d}")
    }
}

impl fmt::Display for WorkshopDate {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:04}-{:02}-{:02}", self.year, self.month, self.day)
    }
}

/// Outcome of the value-identification stage.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ValueIdentification {
    pub selected_type: ValueType,
    pub related: Vec<SingleValue>,
    pub irrelevant: Vec<SingleValue>,
}

impl ValueIdentification {
    /// Checks that `related` and `irrelevant` split the candidate list of
    /// the selected type exactly, with no repeats.
    pub fn check_partition(&self) -> Result<(), PartitionViolation> {
        let candidates: BTreeSet<SingleValue> = self
            .selected_type
            .candidate_single_values()
            .into_iter()
            .collect();
        let mut seen = BTreeSet::new();
        let mut violation = PartitionViolation::default();
        for v in self.related.iter().chain(&self.irrelevant) {
            if !seen.insert(*v) {
                violation.repeated.push(*v);
            }
            if !candidates.contains(v) {
                violation.outside_candidates.push(*v);
            }
        }
        violation.missing = candidates.difference(&seen).copied().collect();
        violation.empty_related = self.related.is_empty();
        if violation.is_empty() {
            Ok(())
        } else {
            Err(violation)
        }
    }

    pub fn is_related(&self, v: SingleValue) -> bool {
        self.related.contains(&v)
    }
}

/// What is wrong with a related/irrelevant split.
#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize)]
pub struct PartitionViolation {
    /// Candidates placed in neither list.
    pub missing: Vec<SingleValue>,
    /// Values listed that are not candidates for the selected type.
    pub outside_candidates: Vec<SingleValue>,
    /// Values listed more than once, including in both lists.
    pub repeated: Vec<SingleValue>,
    pub empty_related: bool,
}

impl PartitionViolation {
    fn is_empty(&self) -> bool {
        self.missing.is_empty()
            && self.outside_candidates.is_empty()
            && self.repeated.is_empty()
            && !self.empty_related
    }
}

impl fmt::Display for PartitionViolation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut parts = Vec::new();
        let list = |vs: &[SingleValue]| vs.iter().map(|v| v.name()).collect::<Vec<_>>().join(", ");
        if !self.missing.is_empty() {
            parts.push(format!("missing candidates: {}", list(&self.missing)));
        }
        if !self.outside_candidates.is_empty() {
            parts.push(format!(
                "not candidates: {}",
                list(&self.outside_candidates)
            ));
        }
        if !self.repeated.is_empty() {
            parts.push(format!("listed twice: {}", list(&self.repeated)));
        }
        if self.empty_related {
            parts.push("related list is empty".into());
        }
        f.write_str(&parts.join("; "))
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct ScoreAssignment {
    pub score: u8,
    #[serde(default, skip_serializing_if = "is_false")]
    pub implicit_zero: bool,
}

fn is_false(b: &bool) -> bool {
    !*b
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct FeasibilityRecord {
    pub trl: u8,
    #[serde(default)]
    pub justification: String,
}

/// Item still outstanding before a stage can be left.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", content = "single_value", rename_all = "snake_case")]
pub enum MissingItem {
    Identification,
    Score(SingleValue),
    Trl(SingleValue),
}

/// Non-fatal observations about the score anchors.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum AnchorWarning {
    /// No scene received the top score.
    NoTopAnchor,
    /// No described scene received 0; the bottom anchor rests on scene-less
    /// pairs, if any.
    NoSceneAtZero,
}

impl AnchorWarning {
    pub fn message(self) -> &'static str {
        match self {
            AnchorWarning::NoTopAnchor => "no scene is scored 7",
            AnchorWarning::NoSceneAtZero => "no described scene is scored 0",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SessionError {
    #[error("revision conflict: expected {expected}, session is at {actual}")]
    Conflict { expected: u64, actual: u64 },
    #[error("operation requires stage {expected}, session is at {actual}")]
    WrongStage { expected: Stage, actual: Stage },
    #[error("stage {stage} is incomplete ({} item(s) outstanding)", missing.len())]
    StageIncomplete {
        stage: Stage,
        missing: Vec<MissingItem>,
    },
    #[error("identification does not partition the candidate list: {0}")]
    PartitionViolation(PartitionViolation),
    #[error("`{0}` is not in the related list")]
    NotInRelatedList(SingleValue),
    #[error("scene text is empty")]
    EmptyScene,
    #[error("`{0}` has no scene and cannot be scored explicitly")]
    NoScene(SingleValue),
    #[error("score {score} for `{single_value}` is outside 0..=7")]
    ScoreOutOfRange {
        single_value: SingleValue,
        score: i64,
    },
    #[error("scene for `{0}` has no score")]
    MissingScore(SingleValue),
    #[error("market threshold {0} is outside 0..=7")]
    ThresholdOutOfRange(i64),
    #[error("`{0}` is not eligible for feasibility assessment")]
    NotEligible(SingleValue),
    #[error(transparent)]
    TrlOutOfRange(#[from] crate::readiness::TrlOutOfRange),
    #[error("participant count must be positive")]
    NoParticipants,
    #[error("unknown function `{0}`")]
    UnknownFunction(String),
    #[error("unknown session `{0}`")]
    UnknownSession(String),
    #[error("unknown group kind `{0}`")]
    UnknownGroup(String),
}

impl SessionError {
    /// Stable machine-readable code.
    pub fn code(&self) -> &'static str {
        match self {
            SessionError::Conflict { .. } => "revision_conflict",
            SessionError::WrongStage { .. } => "wrong_stage",
            SessionError::StageIncomplete { .. } => "stage_incomplete",
            SessionError::PartitionViolation(_) => "partition_violation",
            SessionError::NotInRelatedList(_) => "not_in_related_list",
            SessionError::EmptyScene => "empty_scene",
            SessionError::NoScene(_) => "no_scene",
            SessionError::ScoreOutOfRange { .. } => "score_out_of_range",
            SessionError::MissingScore(_) => "missing_score",
            SessionError::ThresholdOutOfRange(_) => "threshold_out_of_range",
            SessionError::NotEligible(_) => "not_eligible",
            SessionError::TrlOutOfRange(_) => "trl_out_of_range",
            SessionError::NoParticipants => "no_participants",
            SessionError::UnknownFunction(_) => "unknown_function",
            SessionError::UnknownSession(_) => "unknown_session",
            SessionError::UnknownGroup(_) => "unknown_group",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct WorkshopSession {
    id: String,
    date: WorkshopDate,
    group: GroupKind,
    participants: u32,
    function: String,
    stage: Stage,
    revision: u64,
    #[serde(default = "default_market_threshold")]
    market_threshold: u8,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    identification: Option<ValueIdentification>,
    #[serde(default, skip_serializing_if = "BTreeMap::is_empty")]
    scenes: BTreeMap<SingleValue, String>,
    #[serde(default, skip_serializing_if = "BTreeMap::is_empty")]
    scores: BTreeMap<SingleValue, ScoreAssignment>,
    #[serde(default, skip_serializing_if = "BTreeMap::is_empty")]
    feasibility: BTreeMap<SingleValue, FeasibilityRecord>,
}

fn default_market_threshold() -> u8 {
    DEFAULT_MARKET_THRESHOLD
}

impl WorkshopSession {
    /// A fresh session at `Setup`, revision 0. The function id is not
    /// resolved here; see [`crate::Portfolio::create_session`].
    pub fn new(
        id: impl Into<String>,
        date: WorkshopDate,
        group: GroupKind,
        participants: u32,
        function: impl Into<String>,
    ) -> Result<WorkshopSession, SessionError> {
        if participants == 0 {
            return Err(SessionError::NoParticipants);
        }
        Ok(WorkshopSession {
            id: id.into(),
            date,
            group,
            participants,
            function: function.into(),
            stage: Stage::Setup,
            revision: 0,
            market_threshold: DEFAULT_MARKET_THRESHOLD,
            identification: None,
            scenes: BTreeMap::new(),
            scores: BTreeMap::new(),
            feasibility: BTreeMap::new(),
        })
    }

    pub fn id(&self) -> &str {
        &self.id
    }

    pub fn date(&self) -> WorkshopDate {
        self.date
    }

    pub fn group(&self) -> GroupKind {
        self.group
    }

    pub fn participants(&self) -> u32 {
        self.participants
    }

    pub fn function(&self) -> &str {
        &self.function
    }

    pub fn stage(&self) -> Stage {
        self.stage
    }

    pub fn revision(&self) -> u64 {
        self.revision
    }

    pub fn market_threshold(&self) -> u8 {
        self.market_threshold
    }

    pub fn is_complete(&self) -> bool {
        self.stage == Stage::Complete
    }

    pub fn identification(&self) -> Option<&ValueIdentification> {
        self.identification.as_ref()
    }

    pub fn scene(&self, v: SingleValue) -> Option<&str> {
        self.scenes.get(&v).map(String::as_str)
    }

    pub fn scenes(&self) -> impl Iterator<Item = (SingleValue, &str)> {
        self.scenes.iter().map(|(v, s)| (*v, s.as_str()))
    }

    pub fn score(&self, v: SingleValue) -> Option<ScoreAssignment> {
        self.scores.get(&v).copied()
    }

    pub fn scores(&self) -> impl Iterator<Item = (SingleValue, ScoreAssignment)> + '_ {
        self.scores.iter().map(|(v, s)| (*v, *s))
    }

    pub fn feasibility(&self) -> impl Iterator<Item = (SingleValue, &FeasibilityRecord)> {
        self.feasibility.iter().map(|(v, r)| (*v, r))
    }

    pub fn feasibility_of(&self, v: SingleValue) -> Option<&FeasibilityRecord> {
        self.feasibility.get(&v)
    }

    fn begin(&self, expected_revision: u64, stage: Stage) -> Result<(), SessionError> {
        if expected_revision != self.revision {
            return Err(SessionError::Conflict {
                expected: expected_revision,
                actual: self.revision,
            });
        }
        if self.stage != stage {
            return Err(SessionError::WrongStage {
                expected: stage,
                actual: self.stage,
            });
        }
        Ok(())
    }

    fn commit(&mut self) -> u64 {
        self.revision += 1;
        self.revision
    }

    /// Stores the related/irrelevant split. Both lists are kept in catalog
    /// order.
    pub fn record_value_identification(
        &mut self,
        expected_revision: u64,
        selected_type: ValueType,
        mut related: Vec<SingleValue>,
        mut irrelevant: Vec<SingleValue>,
    ) -> Result<u64, SessionError> {
        self.begin(expected_revision, Stage::ValueIdentification)?;
        related.sort();
        irrelevant.sort();
        let identification = ValueIdentification {
            selected_type,
            related,
            irrelevant,
        };
        identification
            .check_partition()
            .map_err(SessionError::PartitionViolation)?;
        self.identification = Some(identification);
        Ok(self.commit())
    }

    /// Stores or replaces the unified scene for a related single value.
    pub fn record_scene(
        &mut self,
        expected_revision: u64,
        single_value: SingleValue,
        text: impl Into<String>,
    ) -> Result<u64, SessionError> {
        self.begin(expected_revision, Stage::SceneDescription)?;
        let text = text.into();
        if text.trim().is_empty() {
            return Err(SessionError::EmptyScene);
        }
        if !self.related_contains(single_value) {
            return Err(SessionError::NotInRelatedList(single_value));
        }
        self.scenes.insert(single_value, text);
        Ok(self.commit())
    }

    /// Scores every scene at once. Related values without a scene are set
    /// to an implicit 0. Returns anchor warnings; they never block.
    pub fn assign_scores(
        &mut self,
        expected_revision: u64,
        scores: &BTreeMap<SingleValue, i64>,
    ) -> Result<Vec<AnchorWarning>, SessionError> {
        self.begin(expected_revision, Stage::Scoring)?;
        for (&v, &score) in scores {
            if !self.related_contains(v) {
                return Err(SessionError::NotInRelatedList(v));
            }
            if !self.scenes.contains_key(&v) {
                return Err(SessionError::NoScene(v));
            }
            if !(0..=MAX_SCORE as i64).contains(&score) {
                return Err(SessionError::ScoreOutOfRange {
                    single_value: v,
                    score,
                });
            }
        }
        if let Some(v) = self.scenes.keys().find(|v| !scores.contains_key(v)) {
            return Err(SessionError::MissingScore(*v));
        }
        self.scores = scores
            .iter()
            .map(|(v, s)| {
                let assignment = ScoreAssignment {
                    score: *s as u8,
                    implicit_zero: false,
                };
                (*v, assignment)
            })
            .collect();
        self.fill_implicit_zeros();
        self.commit();
        Ok(self.anchor_warnings())
    }

    /// Sets the market threshold used when technology-side evaluation
    /// starts. Fixed once that stage is entered.
    pub fn set_market_threshold(
        &mut self,
        expected_revision: u64,
        threshold: i64,
    ) -> Result<u64, SessionError> {
        if expected_revision != self.revision {
            return Err(SessionError::Conflict {
                expected: expected_revision,
                actual: self.revision,
            });
        }
        if self.stage >= Stage::TechEvaluation {
            return Err(SessionError::WrongStage {
                expected: Stage::Scoring,
                actual: self.stage,
            });
        }
        if !(0..=MAX_SCORE as i64).contains(&threshold) {
            return Err(SessionError::ThresholdOutOfRange(threshold));
        }
        self.market_threshold = threshold as u8;
        Ok(self.commit())
    }

    /// Described scenes whose market score reaches `threshold` (inclusive).
    /// Scene-less pairs are never eligible, whatever the threshold.
    pub fn eligible_for_feasibility(
        &self,
        threshold: u8,
    ) -> Result<BTreeSet<SingleValue>, SessionError> {
        if self.stage < Stage::TechEvaluation {
            return Err(SessionError::WrongStage {
                expected: Stage::TechEvaluation,
                actual: self.stage,
            });
        }
        Ok(self.eligible_unchecked(threshold))
    }

    fn eligible_unchecked(&self, threshold: u8) -> BTreeSet<SingleValue> {
        self.scores
            .iter()
            .filter(|(v, s)| {
                !s.implicit_zero && s.score >= threshold && self.scenes.contains_key(v)
            })
            .map(|(v, _)| *v)
            .collect()
    }

    pub fn record_feasibility(
        &mut self,
        expected_revision: u64,
        single_value: SingleValue,
        trl: i64,
        justification: impl Into<String>,
    ) -> Result<u64, SessionError> {
        self.begin(expected_revision, Stage::TechEvaluation)?;
        let trl = Trl::new(trl)?;
        if !self
            .eligible_unchecked(self.market_threshold)
            .contains(&single_value)
        {
            return Err(SessionError::NotEligible(single_value));
        }
        self.feasibility.insert(
            single_value,
            FeasibilityRecord {
                trl: trl.get(),
                justification: justification.into(),
            },
        );
        Ok(self.commit())
    }

    /// Items that must be resolved before the current stage can be left.
    pub fn outstanding(&self) -> Vec<MissingItem> {
        match self.stage {
            Stage::Setup | Stage::SceneDescription | Stage::Complete => Vec::new(),
            Stage::ValueIdentification if self.identification.is_none() => {
                alloc::vec![MissingItem::Identification]
            }
            Stage::ValueIdentification => Vec::new(),
            Stage::Scoring => self
                .scenes
                .keys()
                .filter(|v| !self.scores.contains_key(v))
                .map(|v| MissingItem::Score(*v))
                .collect(),
            Stage::TechEvaluation => self
                .eligible_unchecked(self.market_threshold)
                .into_iter()
                .filter(|v| !self.feasibility.contains_key(v))
                .map(MissingItem::Trl)
                .collect(),
        }
    }

    /// Moves one stage forward once the current stage is complete.
    pub fn advance_stage(&mut self, expected_revision: u64) -> Result<Stage, SessionError> {
        self.begin(expected_revision, self.stage)?;
        let Some(next) = self.stage.next() else {
            return Err(SessionError::WrongStage {
                expected: Stage::TechEvaluation,
                actual: Stage::Complete,
            });
        };
        let missing = self.outstanding();
        if !missing.is_empty() {
            return Err(SessionError::StageIncomplete {
                stage: self.stage,
                missing,
            });
        }
        if self.stage == Stage::Scoring {
            self.fill_implicit_zeros();
        }
        self.stage = next;
        self.commit();
        Ok(next)
    }

    fn related_contains(&self, v: SingleValue) -> bool {
        self.identification
            .as_ref()
            .is_some_and(|id| id.is_related(v))
    }

    fn fill_implicit_zeros(&mut self) {
        let Some(identification) = &self.identification else {
            return;
        };
        for v in &identification.related {
            if !self.scenes.contains_key(v) {
                self.scores.insert(
                    *v,
                    ScoreAssignment {
                        score: 0,
                        implicit_zero: true,
                    },
                );
            }
        }
    }

    pub fn anchor_warnings(&self) -> Vec<AnchorWarning> {
        let scened = || {
            self.scores
                .iter()
                .filter(|(v, s)| !s.implicit_zero && self.scenes.contains_key(v))
        };
        let mut warnings = Vec::new();
        if !scened().any(|(_, s)| s.score == MAX_SCORE) {
            warnings.push(AnchorWarning::NoTopAnchor);
        }
        if !scened().any(|(_, s)| s.score == 0) {
            warnings.push(AnchorWarning::NoSceneAtZero);
        }
        warnings
    }

    /// Checks a session against the procedural rules without mutating it.
    /// Used on stored data, which may have been edited outside the engine.
    pub fn audit(&self) -> Vec<Finding> {
        let mut findings = Vec::new();
        let path = |suffix: &str| {
            if suffix.is_empty() {
                format!("sessions[{}]", self.id)
            } else {
                format!("sessions[{}].{suffix}", self.id)
            }
        };
        let mut error = |p: String, code: &'static str, message: String| {
            findings.push(Finding::error(p, code, message));
        };

        if self.participants == 0 {
            error(
                path("participants"),
                "no_participants",
                "participant count must be positive".into(),
            );
        }
        if self.market_threshold > MAX_SCORE {
            error(
                path("market_threshold"),
                "threshold_out_of_range",
                format!(
                    "market threshold {} is outside 0..=7",
                    self.market_threshold
                ),
            );
        }

        let identification = match &self.identification {
            Some(id) => {
                if let Err(v) = id.check_partition() {
                    error(
                        path("identification"),
                        "partition_violation",
                        format!("{v}"),
                    );
                }
                Some(id)
            }
            None => {
                if self.stage > Stage::ValueIdentification {
                    error(
                        path("identification"),
                        "missing_identification",
                        format!("stage {} requires an identification record", self.stage),
                    );
                }
                None
            }
        };
        let related = |v: &SingleValue| identification.is_some_and(|id| id.is_related(*v));

        if self.stage < Stage::SceneDescription && !self.scenes.is_empty() {
            error(
                path("scenes"),
                "premature_record",
                format!("scenes present at stage {}", self.stage),
            );
        }
        for (v, text) in &self.scenes {
            if !related(v) {
                error(
                    path(&format!("scenes.{v}")),
                    "not_in_related_list",
                    format!("`{v}` is not in the related list"),
                );
            }
            if text.trim().is_empty() {
                error(
                    path(&format!("scenes.{v}")),
                    "empty_scene",
                    "scene text is empty".into(),
                );
            }
        }

        if self.stage < Stage::Scoring && !self.scores.is_empty() {
            error(
                path("scores"),
                "premature_record",
                format!("scores present at stage {}", self.stage),
            );
        }
        for (v, s) in &self.scores {
            let p = path(&format!("scores.{v}"));
            if !related(v) {
                error(
                    p.clone(),
                    "not_in_related_list",
                    format!("`{v}` is not in the related list"),
                );
            }
            if s.score > MAX_SCORE {
                error(
                    p.clone(),
                    "score_out_of_range",
                    format!("score {} is outside 0..=7", s.score),
                );
            }
            if s.implicit_zero && (s.score != 0 || self.scenes.contains_key(v)) {
                error(
                    p,
                    "implicit_zero_mismatch",
                    "implicit zero must score 0 and have no scene".into(),
                );
            } else if !s.implicit_zero && !self.scenes.contains_key(v) {
                error(p, "no_scene", format!("`{v}` is scored but has no scene"));
            }
        }
        if self.stage >= Stage::TechEvaluation {
            if let Some(id) = identification {
                for v in id.related.iter().filter(|v| !self.scores.contains_key(v)) {
                    error(
                        path(&format!("scores.{v}")),
                        "missing_score",
                        format!("`{v}` has no score"),
                    );
                }
            }
        }

        if self.stage < Stage::TechEvaluation && !self.feasibility.is_empty() {
            error(
                path("feasibility"),
                "premature_record",
                format!("feasibility present at stage {}", self.stage),
            );
        }
        let eligible = self.eligible_unchecked(self.market_threshold);
        for (v, r) in &self.feasibility {
            let p = path(&format!("feasibility.{v}"));
            if !(MIN_LEVEL..=MAX_LEVEL).contains(&r.trl) {
                error(
                    p.clone(),
                    "trl_out_of_range",
                    format!("TRL {} is outside 1..=9", r.trl),
                );
            }
            if !eligible.contains(v) {
                error(
                    p,
                    "not_eligible",
                    format!(
                        "`{v}` is below the market threshold {}",
                        self.market_threshold
                    ),
                );
            }
        }
        if self.stage == Stage::Complete {
            for v in eligible
                .iter()
                .filter(|v| !self.feasibility.contains_key(v))
            {
                error(
                    path(&format!("feasibility.{v}")),
                    "missing_trl",
                    format!("`{v}` is eligible but has no TRL"),
                );
            }
        }

        if self.stage >= Stage::TechEvaluation {
            for w in self.anchor_warnings() {
                findings.push(Finding::warning(
                    path("scores"),
                    w.code(),
                    w.message().into(),
                ));
            }
        }
        findings
    }
}

impl AnchorWarning {
    pub fn code(self) -> &'static str {
        match self {
            AnchorWarning::NoTopAnchor => "no_top_anchor",
            AnchorWarning::NoSceneAtZero => "no_scene_at_zero",
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Severity {
    Error,
    Warning,
}

/// One validation observation, addressed by a record path.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Finding {
    pub severity: Severity,
    pub path: String,
    pub code: &'static str,
    pub message: String,
}

impl Finding {
    pub fn error(path: String, code: &'static str, message: String) -> Finding {
        Finding {
            severity: Severity::Error,
            path,
            code,
            message,
        }
    }

    pub fn warning(path: String, code: &'static str, message: String) -> Finding {
        Finding {
            severity: Severity::Warning,
            path,
            code,
            message,
        }
    }

    pub fn is_error(&self) -> bool {
        self.severity == Severity::Error
    }
}

impl fmt::Display for Finding {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let tag = match self.severity {
            Severity::Error => "error",
            Severity::Warning => "warning",
        };
        write!(f, "{tag}[{}] {}: {}", self.code, self.path, self.message)
    }
}
