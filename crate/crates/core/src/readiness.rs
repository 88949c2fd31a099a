//! Nine-level readiness scale, worded for judging whether a usage scene
//! could be realised with the technology as it stands.

use core::fmt;

use serde::{Deserialize, Serialize};
use thiserror::Error;

pub const MIN_LEVEL: u8 = 1;
pub const MAX_LEVEL: u8 = 9;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Error)]
#[error("TRL {0} is outside 1..=9")]
pub struct TrlOutOfRange(pub i64);

/// A validated readiness level in `1..=9`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(try_from = "i64", into = "u8")]
pub struct Trl(u8);

impl Trl {
    pub fn new(level: i64) -> Result<Trl, TrlOutOfRange> {
        if (MIN_LEVEL as i64..=MAX_LEVEL as i64).contains(&level) {
            Ok(Trl(level as u8))
        } else {
            Err(TrlOutOfRange(level))
        }
    }

    pub fn get(self) -> u8 {
        self.0
    }

    pub fn descriptor(self) -> &'static TrlLevel {
        &SCENE_SCALE[(self.0 - 1) as usize]
    }

    pub fn all() -> impl Iterator<Item = Trl> {
        (MIN_LEVEL..=MAX_LEVEL).map(Trl)
    }
}

impl TryFrom<i64> for Trl {
    type Error = TrlOutOfRange;

    fn try_from(level: i64) -> Result<Self, Self::Error> {
        Trl::new(level)
    }
}

impl From<Trl> for u8 {
    fn from(trl: Trl) -> u8 {
        trl.0
    }
}

impl fmt::Display for Trl {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

/// One row of the scene scale.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct TrlLevel {
    pub level: u8,
    pub horizon_label: &'static str,
    pub scene_explanations: &'static [&'static str],
}

pub fn validate_trl(level: i64) -> Result<Trl, TrlOutOfRange> {
    Trl::new(level)
}

pub fn trl_descriptor(level: i64) -> Result<&'static TrlLevel, TrlOutOfRange> {
    Trl::new(level).map(Trl::descriptor)
}

/// The full scale, level 1 first.
pub fn scene_scale() -> &'static [TrlLevel; 9] {
    &SCENE_SCALE
}

static SCENE_SCALE: [TrlLevel; 9] = [
    TrlLevel {
        level: 1,
        horizon_label: "Basic principles observed",
        scene_explanations: &[
            "Stage where engineers understand the basic principles, methods, and theoretical certainty to some extent.",
            "Concepts are formed, and the basic principles to achieve them are understood to some extent.",
        ],
    },
    TrlLevel {
        level: 2,
        horizon_label: "Technology concept formulated",
        scene_explanations: &[
            "Basic concept is clarified or formulated.",
            "The technology can be adequately explained.",
        ],
    },
    TrlLevel {
        level: 3,
        horizon_label: "Experimental proof of concept",
        scene_explanations: &[
            "Concept has been demonstrated in the form of a laboratory or PoC (Proof of Concept).",
        ],
    },
    TrlLevel {
        level: 4,
        horizon_label: "Technology validated in laboratory",
        scene_explanations: &[
            "Validation of feasibility at a laboratory or simulation level has been done or could be done soon.",
        ],
    },
    TrlLevel {
        level: 5,
        horizon_label: "Technology validated in relevant environment",
        scene_explanations: &[
            "Validation of feasibility in a relevant field has been done or could be done soon.",
        ],
    },
    TrlLevel {
        level: 6,
        horizon_label: "Technology demonstrated in relevant environment",
        scene_explanations: &["Demonstrated in a relevant field or could be demonstrated."],
    },
    TrlLevel {
        level: 7,
        horizon_label: "System prototype demonstration in operational environment",
        scene_explanations: &[
            "A prototype system is built, and its operation in the real world has been demonstrated (or can be soon), although limited in scope.",
        ],
    },
    TrlLevel {
        level: 8,
        horizon_label: "System complete and qualified",
        scene_explanations: &[
            "A system that can operate properly in the real world is constructed or can be constructed immediately.",
            "Although no system can be immediately implemented, other related technologies are prepared and can be constructed immediately.",
        ],
    },
    TrlLevel {
        level: 9,
        horizon_label: "Actual system proven in operational environment",
        scene_explanations: &[
            "Stage where the system is actually implemented in the real world.",
            "Can be immediately implemented in the real world.",
        ],
    },
];

/// The original seven-level NASA scale. Reference text only.
pub const NASA_SEVEN_LEVELS: [&str; 7] = [
    "Basic principles observed and reported",
    "Potential application validated",
    "Proof-of-Concept demonstrated analytically and/or experimentally",
    "Component and/or breadboard laboratory validated",
    "Component and/or breadboard validated in simulated or real-space environment",
    "System adequacy validated in simulated environment",
    "System adequacy validated in space",
];

/// The nine-level NASA scale. Reference text only.
pub const NASA_NINE_LEVELS: [&str; 9] = [
    "Basic principles observed and reported",
    "Technology concept and/or application formulated",
    "Analytical and experimental critical function and/or characteristic proof-of-concept",
    "Component/subsystem validation in a laboratory environment",
    "System/subsystem/component validation in a relevant environment",
    "System/subsystem model or prototyping demonstration in a relevant end-to-end environment (ground or space)",
    "System prototyping demonstration in an operational environment (ground or space)",
    "Actual system completed and \"mission qualified\" through test and demonstration in an operational environment (ground or space)",
    "Actual system \"mission proven\" through successful mission operations (ground or space)",
];
