//! The bundle file: one JSON document holding a whole portfolio.

use std::collections::HashSet;
use std::fs;
use std::io;
use std::path::Path;

use serde::{Deserialize, Serialize};
use thiserror::Error;
use tod_core::{Finding, Portfolio, Technology, Thresholds, WorkshopSession};

pub const SCHEMA_VERSION: u64 = 1;
pub const CATALOG_NAME: &str = "schwartz-56";
pub const CATALOG_VERSION: u64 = 1;

/// The bundled workshop dataset: four technologies, twelve sessions.
pub const FIXTURE: &str = include_str!("../fixtures/sonycsl.bundle");

#[derive(Debug, Error)]
pub enum BundleError {
    #[error("parse error at line {line}, column {column}: {message}")]
    Parse {
        line: usize,
        column: usize,
        message: String,
    },
    #[error("unsupported schema version {0}")]
    SchemaVersion(String),
    #[error("integrity error at {path}: {message}")]
    Integrity { path: String, message: String },
    #[error("cannot read {path}: {source}")]
    Unreadable { path: String, source: io::Error },
    #[error("cannot write {path}: {source}")]
    SinkUnwritable { path: String, source: io::Error },
}

impl BundleError {
    pub fn code(&self) -> &'static str {
        match self {
            BundleError::Parse { .. } => "parse_error",
            BundleError::SchemaVersion(_) => "schema_version_unsupported",
            BundleError::Integrity { .. } => "integrity_error",
            BundleError::Unreadable { .. } => "source_unreadable",
            BundleError::SinkUnwritable { .. } => "sink_unwritable",
        }
    }

    fn integrity(path: impl Into<String>, message: impl Into<String>) -> BundleError {
        BundleError::Integrity {
            path: path.into(),
            message: message.into(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct CatalogRef {
    pub name: String,
    pub version: u64,
}

/// On-disk layout. Field order here is the canonical field order.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PortfolioBundle {
    pub schema_version: u64,
    pub catalog: CatalogRef,
    pub thresholds: Thresholds,
    pub technologies: Vec<Technology>,
    #[serde(default)]
    pub sessions: Vec<WorkshopSession>,
}

impl PortfolioBundle {
    pub fn from_portfolio(portfolio: &Portfolio) -> PortfolioBundle {
        PortfolioBundle {
            schema_version: SCHEMA_VERSION,
            catalog: CatalogRef {
                name: CATALOG_NAME.into(),
                version: CATALOG_VERSION,
            },
            thresholds: portfolio.thresholds,
            technologies: portfolio.technologies.clone(),
            sessions: portfolio.sessions.clone(),
        }
    }

    pub fn into_portfolio(self) -> Portfolio {
        Portfolio {
            thresholds: self.thresholds,
            technologies: self.technologies,
            sessions: self.sessions,
        }
    }
}

/// Parses and checks a bundle. Names are canonicalized on the way in;
/// every id a record refers to must resolve.
pub fn load_bundle(source: &str) -> Result<Portfolio, BundleError> {
    let value: serde_json::Value =
        serde_json::from_str(source).map_err(|e| BundleError::Parse {
            line: e.line(),
            column: e.column(),
            message: e.to_string(),
        })?;
    match value.get("schema_version") {
        Some(v) if v.as_u64() == Some(SCHEMA_VERSION) => {}
        Some(v) => return Err(BundleError::SchemaVersion(v.to_string())),
        None => return Err(BundleError::SchemaVersion("missing".into())),
    }
    let bundle: PortfolioBundle = serde_path_to_error::deserialize(value)
        .map_err(|e| BundleError::integrity(e.path().to_string(), e.inner().to_string()))?;
    if bundle.catalog.name != CATALOG_NAME || bundle.catalog.version != CATALOG_VERSION {
        return Err(BundleError::integrity(
            "catalog",
            format!(
                "unknown value catalog {} v{}",
                bundle.catalog.name, bundle.catalog.version
            ),
        ));
    }
    check_references(&bundle)?;
    Ok(bundle.into_portfolio())
}

fn check_references(bundle: &PortfolioBundle) -> Result<(), BundleError> {
    let mut tech_ids = HashSet::new();
    let mut function_ids = HashSet::new();
    for (i, tech) in bundle.technologies.iter().enumerate() {
        if !tech_ids.insert(tech.id.as_str()) {
            return Err(BundleError::integrity(
                format!("technologies[{i}].id"),
                format!("duplicate technology id `{}`", tech.id),
            ));
        }
        for (j, f) in tech.functions.iter().enumerate() {
            if !function_ids.insert(f.id.as_str()) {
                return Err(BundleError::integrity(
                    format!("technologies[{i}].functions[{j}].id"),
                    format!("duplicate function id `{}`", f.id),
                ));
            }
        }
    }
    let mut session_ids = HashSet::new();
    for (i, s) in bundle.sessions.iter().enumerate() {
        if !session_ids.insert(s.id()) {
            return Err(BundleError::integrity(
                format!("sessions[{i}].id"),
                format!("duplicate session id `{}`", s.id()),
            ));
        }
        if !function_ids.contains(s.function()) {
            return Err(BundleError::integrity(
                format!("sessions[{i}].function"),
                format!("unknown function `{}`", s.function()),
            ));
        }
    }
    Ok(())
}

pub fn load_bundle_file(path: &Path) -> Result<Portfolio, BundleError> {
    let text = fs::read_to_string(path).map_err(|source| BundleError::Unreadable {
        path: path.display().to_string(),
        source,
    })?;
    load_bundle(&text)
}

/// Canonical text form: pretty-printed, trailing newline.
pub fn save_bundle(portfolio: &Portfolio) -> String {
    let bundle = PortfolioBundle::from_portfolio(portfolio);
    let mut out = serde_json::to_string_pretty(&bundle).expect("bundle is always serializable");
    out.push('\n');
    out
}

pub fn save_bundle_file(portfolio: &Portfolio, path: &Path) -> Result<(), BundleError> {
    fs::write(path, save_bundle(portfolio)).map_err(|source| BundleError::SinkUnwritable {
        path: path.display().to_string(),
        source,
    })
}

/// Procedural checks over a loaded portfolio. Errors and warnings are both
/// returned as findings; this never fails.
pub fn validate_bundle(portfolio: &Portfolio) -> Vec<Finding> {
    let mut findings = Vec::new();
    for tech in &portfolio.technologies {
        if tech.functions.is_empty() {
            findings.push(Finding::error(
                format!("technologies[{}].functions", tech.id),
                "no_functions",
                "a technology needs at least one function".into(),
            ));
        }
        for f in &tech.functions {
            if f.verb.trim().is_empty() || f.noun_phrase.trim().is_empty() {
                findings.push(Finding::error(
                    format!("technologies[{}].functions[{}]", tech.id, f.id),
                    "incomplete_function",
                    "functions need a verb and a noun phrase".into(),
                ));
            }
        }
    }
    for session in &portfolio.sessions {
        if portfolio
            .technology_of_function(session.function())
            .is_none()
        {
            findings.push(Finding::error(
                format!("sessions[{}].function", session.id()),
                "unknown_function",
                format!("unknown function `{}`", session.function()),
            ));
        }
        findings.extend(session.audit());
    }
    findings
}
