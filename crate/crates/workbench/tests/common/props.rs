//! Randomized checks shared by the acceptance suite and the property tests.
//! Each returns the shrunk counterexample as text on failure.

use std::cmp::Reverse;
use std::collections::{BTreeMap, BTreeSet};

use proptest::prelude::*;
use proptest::test_runner::{Config, TestRunner};
use tod_core::{
    classify, dedup_by_single_value, derived_value_types, portfolio_opportunities, FunctionSpec,
    GapClass, GroupKind, Outcome, Portfolio, SessionError, SingleValue, Stage, Technology,
    Thresholds, ValueType, WorkshopDate, WorkshopSession,
};
use tod_workbench::bundle::{load_bundle, save_bundle};

use super::fixture;

fn runner(cases: u32) -> TestRunner {
    TestRunner::new(Config {
        cases,
        failure_persistence: None,
        ..Config::default()
    })
}

fn report<T: std::fmt::Debug>(
    r: Result<(), proptest::test_runner::TestError<T>>,
) -> Result<(), String> {
    r.map_err(|e| e.to_string())
}

pub fn threshold_strategy() -> impl Strategy<Value = Thresholds> {
    (0i64..=7, 1i64..=9).prop_map(|(m, t)| Thresholds::new(m, t).unwrap())
}

/// A looser and a stricter threshold pair.
fn nested_thresholds() -> impl Strategy<Value = (Thresholds, Thresholds)> {
    (threshold_strategy(), threshold_strategy()).prop_map(|(a, b)| {
        let lo = Thresholds::new(
            a.market_min().min(b.market_min()) as i64,
            a.trl_min().min(b.trl_min()) as i64,
        )
        .unwrap();
        let hi = Thresholds::new(
            a.market_min().max(b.market_min()) as i64,
            a.trl_min().max(b.trl_min()) as i64,
        )
        .unwrap();
        (lo, hi)
    })
}

/// Raising either threshold never adds an opportunity, a single value or a
/// value type.
pub fn threshold_monotonicity(cases: u32) -> Result<(), String> {
    let portfolio = fixture();
    report(runner(cases).run(&nested_thresholds(), |(lo, hi)| {
        for tech in &portfolio.technologies {
            for group in GroupKind::ALL {
                let loose = portfolio_opportunities(&portfolio, &tech.id, group, lo).unwrap();
                let strict = portfolio_opportunities(&portfolio, &tech.id, group, hi).unwrap();
                for o in &strict {
                    prop_assert!(loose.contains(o), "{o:?} passes {hi:?} but not {lo:?}");
                }
                let loose_v: BTreeSet<_> = dedup_by_single_value(loose).into_keys().collect();
                let strict_v: BTreeSet<_> = dedup_by_single_value(strict).into_keys().collect();
                prop_assert!(strict_v.is_subset(&loose_v));
                let loose_t = derived_value_types(&portfolio, &tech.id, group, lo).unwrap();
                let strict_t = derived_value_types(&portfolio, &tech.id, group, hi).unwrap();
                prop_assert!(strict_t.is_subset(&loose_t));
            }
        }
        Ok(())
    }))
}

/// What happens to one candidate single value in a synthetic session.
#[derive(Debug, Clone)]
pub struct Slot {
    pub related: bool,
    pub scene: bool,
    pub score: u8,
    pub trl: u8,
}

#[derive(Debug, Clone)]
pub struct SessionPlan {
    pub selected: ValueType,
    pub slots: Vec<Slot>,
    pub market_threshold: u8,
}

impl SessionPlan {
    /// (single value, slot) for every candidate; the first is always related.
    fn candidates(&self) -> Vec<(SingleValue, Slot)> {
        self.selected
            .candidate_single_values()
            .into_iter()
            .zip(self.slots.iter().cloned())
            .enumerate()
            .map(|(i, (v, mut s))| {
                s.related |= i == 0;
                (v, s)
            })
            .collect()
    }

    /// Scenes that get a TRL, with their score and TRL.
    pub fn assessed(&self) -> Vec<(SingleValue, u8, u8)> {
        self.candidates()
            .into_iter()
            .filter(|(_, s)| s.related && s.scene && s.score >= self.market_threshold)
            .map(|(v, s)| (v, s.score, s.trl))
            .collect()
    }
}

fn plan_strategy() -> impl Strategy<Value = SessionPlan> {
    let slot = (any::<bool>(), any::<bool>(), 0u8..=7, 1u8..=9).prop_map(
        |(related, scene, score, trl)| Slot {
            related,
            scene,
            score,
            trl,
        },
    );
    (0usize..10, prop::collection::vec(slot, 56), 0u8..=7).prop_map(
        |(t, slots, market_threshold)| SessionPlan {
            selected: ValueType::ALL[t],
            slots,
            market_threshold,
        },
    )
}

/// One technology with up to six functions; each function gets one plan
/// per group.
#[derive(Debug, Clone)]
pub struct PortfolioPlan {
    pub functions: Vec<[SessionPlan; 2]>,
}

pub fn portfolio_plan_strategy() -> impl Strategy<Value = PortfolioPlan> {
    prop::collection::vec([plan_strategy(), plan_strategy()], 1..=6)
        .prop_map(|functions| PortfolioPlan { functions })
}

pub const SYNTH: &str = "synth";

fn function_name(i: usize) -> String {
    format!("{SYNTH}-{}", i + 1)
}

/// Runs every plan through the session operations, start to finish.
pub fn build_portfolio(plan: &PortfolioPlan) -> Portfolio {
    let mut portfolio = Portfolio {
        thresholds: Thresholds::default(),
        technologies: vec![Technology {
            id: SYNTH.into(),
            name: "Synthetic".into(),
            description: String::new(),
            outcome: Outcome::Unknown,
            functions: (0..plan.functions.len())
                .map(|i| FunctionSpec {
                    id: function_name(i),
                    verb: "renders".into(),
                    noun_phrase: format!("thing {i}"),
                    description: String::new(),
                })
                .collect(),
        }],
        sessions: Vec::new(),
    };
    for (i, plans) in plan.functions.iter().enumerate() {
        for (group, p) in GroupKind::ALL.into_iter().zip(plans) {
            let id = portfolio
                .create_session(
                    group,
                    4,
                    &function_name(i),
                    WorkshopDate::new(2024, 5, 17).unwrap(),
                )
                .unwrap()
                .id()
                .to_string();
            drive(portfolio.session_mut(&id).unwrap(), p).unwrap();
        }
    }
    portfolio
}

pub fn drive(s: &mut WorkshopSession, plan: &SessionPlan) -> Result<(), SessionError> {
    let candidates = plan.candidates();
    s.advance_stage(s.revision())?;
    let (related, irrelevant): (Vec<_>, Vec<_>) =
        candidates.iter().partition(|(_, slot)| slot.related);
    s.record_value_identification(
        s.revision(),
        plan.selected,
        related.iter().map(|(v, _)| *v).collect(),
        irrelevant.iter().map(|(v, _)| *v).collect(),
    )?;
    s.advance_stage(s.revision())?;
    let mut scores = BTreeMap::new();
    for (v, slot) in &related {
        if slot.scene {
            s.record_scene(s.revision(), *v, format!("scene for {}", v.name()))?;
            scores.insert(*v, slot.score as i64);
        }
    }
    s.advance_stage(s.revision())?;
    s.assign_scores(s.revision(), &scores)?;
    s.set_market_threshold(s.revision(), plan.market_threshold as i64)?;
    s.advance_stage(s.revision())?;
    for (v, _, trl) in plan.assessed() {
        s.record_feasibility(s.revision(), v, trl as i64, "")?;
    }
    s.advance_stage(s.revision())?;
    Ok(())
}

/// The per-value winner from dedup equals the maximum over all passing
/// scenes by (score, then smallest function, then TRL), computed straight
/// from the plans.
pub fn dedup_matches_brute_force(cases: u32) -> Result<(), String> {
    let strategy = (portfolio_plan_strategy(), threshold_strategy());
    report(runner(cases).run(&strategy, |(plan, thresholds)| {
        let portfolio = build_portfolio(&plan);
        for (g, group) in GroupKind::ALL.into_iter().enumerate() {
            let mut expected: BTreeMap<SingleValue, (u8, Reverse<String>, u8)> = BTreeMap::new();
            for (i, plans) in plan.functions.iter().enumerate() {
                for (v, score, trl) in plans[g].assessed() {
                    if score < thresholds.market_min() || trl < thresholds.trl_min() {
                        continue;
                    }
                    let key = (score, Reverse(function_name(i)), trl);
                    let best = expected.entry(v).or_insert_with(|| key.clone());
                    if key > *best {
                        *best = key;
                    }
                }
            }
            let opportunities =
                portfolio_opportunities(&portfolio, SYNTH, group, thresholds).unwrap();
            let actual: BTreeMap<SingleValue, (u8, Reverse<String>, u8)> =
                dedup_by_single_value(opportunities)
                    .into_iter()
                    .map(|(v, o)| (v, (o.market_score, Reverse(o.function), o.trl)))
                    .collect();
            prop_assert_eq!(actual, expected);
        }
        Ok(())
    }))
}

#[derive(Debug, Clone, Copy)]
pub enum Op {
    Identify,
    Scene,
    Scores,
    Threshold,
    Feasibility,
    Advance,
}

fn op_strategy() -> impl Strategy<Value = (Op, bool)> {
    let op = prop_oneof![
        Just(Op::Identify),
        Just(Op::Scene),
        Just(Op::Scores),
        Just(Op::Threshold),
        Just(Op::Feasibility),
        Just(Op::Advance),
    ];
    // One in eight operations carries a stale revision.
    (op, prop::bool::weighted(0.125))
}

fn sv(name: &str) -> SingleValue {
    SingleValue::canonicalize(name).unwrap()
}

fn apply(s: &mut WorkshopSession, op: Op, revision: u64) -> Result<(), SessionError> {
    match op {
        Op::Identify => {
            let related = vec![sv("Influential"), sv("Ambitious"), sv("Successful")];
            let irrelevant = ValueType::Achievement
                .candidate_single_values()
                .into_iter()
                .filter(|v| !related.contains(v))
                .collect();
            s.record_value_identification(revision, ValueType::Achievement, related, irrelevant)
                .map(drop)
        }
        Op::Scene => {
            let target = if s.scene(sv("Influential")).is_some() {
                "Ambitious"
            } else {
                "Influential"
            };
            s.record_scene(revision, sv(target), "a scene").map(drop)
        }
        Op::Scores => {
            let scores = BTreeMap::from([(sv("Influential"), 7), (sv("Ambitious"), 0)]);
            s.assign_scores(revision, &scores).map(drop)
        }
        Op::Threshold => s.set_market_threshold(revision, 5).map(drop),
        Op::Feasibility => s
            .record_feasibility(revision, sv("Influential"), 6, "prototype")
            .map(drop),
        Op::Advance => s.advance_stage(revision).map(drop),
    }
}

/// Which stage an operation is legal in, given the current stage.
fn legal_in(op: Op, stage: Stage) -> bool {
    match op {
        Op::Identify => stage == Stage::ValueIdentification,
        Op::Scene => stage == Stage::SceneDescription,
        Op::Scores => stage == Stage::Scoring,
        Op::Threshold => stage < Stage::TechEvaluation,
        Op::Feasibility => stage == Stage::TechEvaluation,
        Op::Advance => stage != Stage::Complete,
    }
}

/// Random interleavings of operations: anything issued in the wrong stage
/// or against a stale revision is rejected and leaves the session as it
/// was; accepted operations bump the revision by one and never move the
/// stage backwards.
pub fn stage_machine_rejects_out_of_order(cases: u32) -> Result<(), String> {
    let strategy = prop::collection::vec(op_strategy(), 0..48);
    report(runner(cases).run(&strategy, |ops| {
        let mut s = WorkshopSession::new(
            "f-1.general_consumers",
            WorkshopDate::new(2024, 5, 17).unwrap(),
            GroupKind::GeneralConsumers,
            3,
            "f-1",
        )
        .unwrap();
        for (op, stale) in ops {
            let before = s.clone();
            let revision = if stale {
                s.revision() + 1
            } else {
                s.revision()
            };
            let result = apply(&mut s, op, revision);
            if stale {
                prop_assert!(
                    matches!(result, Err(SessionError::Conflict { .. })),
                    "{op:?}: {result:?}"
                );
            } else if !legal_in(op, before.stage()) {
                prop_assert!(
                    matches!(result, Err(SessionError::WrongStage { .. })),
                    "{op:?} at {}: {result:?}",
                    before.stage()
                );
            }
            match result {
                Err(_) => prop_assert_eq!(&s, &before),
                Ok(()) => {
                    prop_assert_eq!(s.revision(), before.revision() + 1);
                    prop_assert!(s.stage() >= before.stage());
                }
            }
        }
        Ok(())
    }))
}

/// save -> load gives back the same portfolio, and saving again gives
/// the same bytes.
pub fn bundle_round_trip(cases: u32) -> Result<(), String> {
    let fixture = fixture();
    let text = save_bundle(&fixture);
    if load_bundle(&text).map_err(|e| e.to_string())? != fixture {
        return Err("fixture does not round-trip".into());
    }
    report(runner(cases).run(&portfolio_plan_strategy(), |plan| {
        let portfolio = build_portfolio(&plan);
        let text = save_bundle(&portfolio);
        let loaded = load_bundle(&text).unwrap();
        prop_assert_eq!(&loaded, &portfolio);
        prop_assert_eq!(save_bundle(&loaded), text);
        Ok(())
    }))
}

fn types_of(mask: u16) -> BTreeSet<ValueType> {
    ValueType::ALL
        .into_iter()
        .enumerate()
        .filter(|(i, _)| mask & (1 << i) != 0)
        .map(|(_, t)| t)
        .collect()
}

/// Exactly one class applies to every pair of type sets, decided here by
/// bit arithmetic.
pub fn classification_trichotomy(cases: u32) -> Result<(), String> {
    report(runner(cases).run(&(0u16..1024, 0u16..1024), |(e, c)| {
        let encompassing = e & c == c;
        let disjoint = c != 0 && e & c == 0;
        let partial = !encompassing && !disjoint;
        prop_assert_eq!(
            [encompassing, disjoint, partial]
                .iter()
                .filter(|b| **b)
                .count(),
            1
        );
        let expected = if encompassing {
            GapClass::Encompassing
        } else if disjoint {
            GapClass::Disjoint
        } else {
            GapClass::Partial
        };
        prop_assert_eq!(classify(&types_of(e), &types_of(c)), expected);
        Ok(())
    }))
}
