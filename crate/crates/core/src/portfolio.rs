//! Technologies, their functions, and the sessions run against them.

use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;

use serde::{Deserialize, Serialize};

use crate::balance::Thresholds;
use crate::session::{GroupKind, SessionError, WorkshopDate, WorkshopSession};

/// Commercial outcome as reported for a technology. Never used in any
/// computation.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Outcome {
    Success,
    Failure,
    #[default]
    Unknown,
}

impl Outcome {
    pub fn as_str(self) -> &'static str {
        match self {
            Outcome::Success => "success",
            Outcome::Failure => "failure",
            Outcome::Unknown => "unknown",
        }
    }
}

/// A capability phrased as a verb acting on a noun phrase.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct FunctionSpec {
    pub id: String,
    pub verb: String,
    pub noun_phrase: String,
    #[serde(default)]
    pub description: String,
}

impl FunctionSpec {
    pub fn label(&self) -> String {
        format!("{} {}", self.verb, self.noun_phrase)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Technology {
    pub id: String,
    pub name: String,
    #[serde(default)]
    pub description: String,
    #[serde(default)]
    pub outcome: Outcome,
    pub functions: Vec<FunctionSpec>,
}

impl Technology {
    pub fn function(&self, id: &str) -> Option<&FunctionSpec> {
        self.functions.iter().find(|f| f.id == id)
    }

    pub fn owns_function(&self, id: &str) -> bool {
        self.function(id).is_some()
    }
}

/// Everything the engine knows: technologies, sessions, and the default
/// thresholds used when a caller does not supply its own.
#[derive(Debug, Clone, PartialEq, Eq, Default, Serialize, Deserialize)]
pub struct Portfolio {
    #[serde(default)]
    pub thresholds: Thresholds,
    pub technologies: Vec<Technology>,
    #[serde(default)]
    pub sessions: Vec<WorkshopSession>,
}

impl Portfolio {
    pub fn technology(&self, id: &str) -> Option<&Technology> {
        self.technologies.iter().find(|t| t.id == id)
    }

    /// The technology owning a function id.
    pub fn technology_of_function(&self, function_id: &str) -> Option<&Technology> {
        self.technologies
            .iter()
            .find(|t| t.owns_function(function_id))
    }

    pub fn session(&self, id: &str) -> Option<&WorkshopSession> {
        self.sessions.iter().find(|s| s.id() == id)
    }

    pub fn session_mut(&mut self, id: &str) -> Option<&mut WorkshopSession> {
        self.sessions.iter_mut().find(|s| s.id() == id)
    }

    /// Sessions run by `group` on any function of `technology`.
    pub fn sessions_for<'a>(
        &'a self,
        technology: &'a Technology,
        group: GroupKind,
    ) -> impl Iterator<Item = &'a WorkshopSession> + 'a {
        self.sessions
            .iter()
            .filter(move |s| s.group() == group && technology.owns_function(s.function()))
    }

    /// Opens a new session at `Setup`. The id is `<function>.<group>`, with a
    /// numeric suffix when that is already taken.
    pub fn create_session(
        &mut self,
        group: GroupKind,
        participants: u32,
        function: &str,
        date: WorkshopDate,
    ) -> Result<&WorkshopSession, SessionError> {
        if self.technology_of_function(function).is_none() {
            return Err(SessionError::UnknownFunction(function.into()));
        }
        let base = format!("{function}.{group}");
        let mut id = base.clone();
        let mut n = 2;
        while self.session(&id).is_some() {
            id = format!("{base}.{n}");
            n += 1;
        }
        let session = WorkshopSession::new(id, date, group, participants, function)?;
        self.sessions.push(session);
        Ok(self.sessions.last().expect("just pushed"))
    }
}
