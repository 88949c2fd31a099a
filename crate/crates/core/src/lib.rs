//! Technology opportunity discovery engine.
//!
//! Market-side elicitation over the ten-type value circumplex, readiness
//! screening of high-scoring scenes, and dual-threshold balancing into
//! opportunities, with the value-breadth and vision-gap diagnostics on top.
//!
//! The crate is `no_std` and only needs `alloc`. File formats, the CLI and
//! the HTTP service live in `tod-workbench`.

#![no_std]

extern crate alloc;

pub mod analytics;
pub mod balance;
pub mod circumplex;
pub mod portfolio;
pub mod readiness;
pub mod session;

pub use analytics::{
    analyze_technology, classify, derived_value_types, portfolio_report, value_breadth, vision_gap,
    BreadthResult, GapClass, PortfolioReport, TechnologyAnalysis, VisionGapResult,
};
pub use balance::{
    dedup_by_single_value, identify_opportunities, portfolio_opportunities, radar_pair,
    radar_series, AnalysisError, Opportunity, RadarSeries, ThresholdError, Thresholds,
};
pub use circumplex::{value_type_of, CircumplexError, SingleValue, ValueType, Wedge};
pub use portfolio::{FunctionSpec, Outcome, Portfolio, Technology};
pub use readiness::{trl_descriptor, validate_trl, Trl, TrlLevel, TrlOutOfRange};
pub use session::{
    AnchorWarning, Finding, GroupKind, MissingItem, SessionError, Severity, Stage, WorkshopDate,
    WorkshopSession,
};
