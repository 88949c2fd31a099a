//! HTTP service over a shared portfolio. Session mutations are guarded by
//! revision; analysis endpoints read a snapshot taken under the lock.

use std::collections::BTreeMap;
use std::convert::Infallible;
use std::net::SocketAddr;
use std::path::PathBuf;
use std::sync::{Arc, Mutex, MutexGuard};

use axum::body::Bytes;
use axum::extract::{Path, Query, State};
use axum::http::{header, StatusCode};
use axum::response::sse::{Event, KeepAlive, Sse};
use axum::response::{IntoResponse, Response};
use axum::routing::{get, post};
use axum::{Json, Router};
use futures::stream::{self, Stream, StreamExt};
use serde::de::DeserializeOwned;
use serde::{Deserialize, Serialize};
use tod_core::{
    analyze_technology, portfolio_report, AnalysisError, AnchorWarning, Finding, GroupKind,
    MissingItem, Portfolio, SessionError, SingleValue, ThresholdError, Thresholds, ValueType,
    WorkshopDate, WorkshopSession,
};
use tokio::sync::broadcast;

use crate::bundle::{save_bundle_file, validate_bundle, BundleError};
use crate::catalog::catalog_document;
use crate::export::{export_radar, export_report, RadarFormat, ReportFormat, UnsupportedFormat};

/// Error body for every non-2xx response.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ApiError {
    #[serde(skip)]
    pub status: u16,
    pub code: String,
    pub message: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub path: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub detail: Option<serde_json::Value>,
}

impl ApiError {
    fn new(status: StatusCode, code: &str, message: impl Into<String>) -> ApiError {
        ApiError {
            status: status.as_u16(),
            code: code.into(),
            message: message.into(),
            path: None,
            detail: None,
        }
    }
}

impl IntoResponse for ApiError {
    fn into_response(self) -> Response {
        let status = StatusCode::from_u16(self.status).unwrap_or(StatusCode::INTERNAL_SERVER_ERROR);
        (status, Json(self)).into_response()
    }
}

impl From<SessionError> for ApiError {
    fn from(e: SessionError) -> ApiError {
        let status = match &e {
            SessionError::Conflict { .. } => StatusCode::CONFLICT,
            SessionError::UnknownSession(_) => StatusCode::NOT_FOUND,
            _ => StatusCode::UNPROCESSABLE_ENTITY,
        };
        let detail = match &e {
            SessionError::Conflict { expected, actual } => {
                Some(serde_json::json!({ "expected": expected, "actual": actual }))
            }
            SessionError::WrongStage { expected, actual } => {
                Some(serde_json::json!({ "expected": expected, "actual": actual }))
            }
            SessionError::StageIncomplete { stage, missing } => {
                Some(serde_json::json!({ "stage": stage, "missing": missing }))
            }
            SessionError::PartitionViolation(v) => Some(serde_json::json!({
                "missing": v.missing,
                "outside_candidates": v.outside_candidates,
                "repeated": v.repeated,
                "empty_related": v.empty_related,
            })),
            _ => None,
        };
        ApiError {
            detail,
            ..ApiError::new(status, e.code(), e.to_string())
        }
    }
}

impl From<AnalysisError> for ApiError {
    fn from(e: AnalysisError) -> ApiError {
        let status = match e {
            AnalysisError::UnknownTechnology(_) => StatusCode::NOT_FOUND,
            _ => StatusCode::UNPROCESSABLE_ENTITY,
        };
        ApiError::new(status, e.code(), e.to_string())
    }
}

impl From<ThresholdError> for ApiError {
    fn from(e: ThresholdError) -> ApiError {
        ApiError::new(StatusCode::BAD_REQUEST, "invalid_threshold", e.to_string())
    }
}

impl From<UnsupportedFormat> for ApiError {
    fn from(e: UnsupportedFormat) -> ApiError {
        ApiError::new(StatusCode::BAD_REQUEST, "unsupported_format", e.to_string())
    }
}

impl From<BundleError> for ApiError {
    fn from(e: BundleError) -> ApiError {
        ApiError::new(StatusCode::INTERNAL_SERVER_ERROR, e.code(), e.to_string())
    }
}

/// A session as served: the stored record plus what blocks its stage.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SessionView {
    pub session: WorkshopSession,
    pub outstanding: Vec<MissingItem>,
}

impl SessionView {
    fn of(session: &WorkshopSession) -> SessionView {
        SessionView {
            session: session.clone(),
            outstanding: session.outstanding(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct WarningView {
    pub code: String,
    pub message: String,
}

impl From<AnchorWarning> for WarningView {
    fn from(w: AnchorWarning) -> WarningView {
        WarningView {
            code: w.code().into(),
            message: w.message().into(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct MutationResponse {
    #[serde(flatten)]
    pub view: SessionView,
    #[serde(default)]
    pub warnings: Vec<WarningView>,
}

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct CreateSession {
    pub function: String,
    pub group: GroupKind,
    pub participants: u32,
    pub date: WorkshopDate,
}

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct IdentificationBody {
    pub expected_revision: u64,
    pub selected_type: ValueType,
    pub related: Vec<SingleValue>,
    pub irrelevant: Vec<SingleValue>,
}

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SceneBody {
    pub expected_revision: u64,
    pub single_value: SingleValue,
    pub text: String,
}

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ScoresBody {
    pub expected_revision: u64,
    pub scores: BTreeMap<SingleValue, i64>,
}

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ThresholdBody {
    pub expected_revision: u64,
    pub market_threshold: i64,
}

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct FeasibilityBody {
    pub expected_revision: u64,
    pub single_value: SingleValue,
    pub trl: i64,
    #[serde(default)]
    pub justification: String,
}

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct AdvanceBody {
    pub expected_revision: u64,
}

#[derive(Debug, Default, Deserialize)]
pub struct ThresholdQuery {
    pub market_min: Option<i64>,
    pub trl_min: Option<i64>,
}

impl ThresholdQuery {
    pub fn resolve(&self) -> Result<Thresholds, ThresholdError> {
        let d = Thresholds::default();
        Thresholds::new(
            self.market_min.unwrap_or(d.market_min() as i64),
            self.trl_min.unwrap_or(d.trl_min() as i64),
        )
    }
}

#[derive(Debug, Default, Deserialize)]
pub struct ReportQuery {
    pub market_min: Option<i64>,
    pub trl_min: Option<i64>,
    pub format: Option<String>,
}

#[derive(Debug, Default, Deserialize)]
pub struct EligibleQuery {
    pub threshold: Option<i64>,
}

#[derive(Debug, Serialize, Deserialize)]
pub struct EligibleResponse {
    pub threshold: u8,
    pub single_values: Vec<SingleValue>,
}

struct Shared {
    portfolio: Mutex<Portfolio>,
    store: Option<PathBuf>,
    events: broadcast::Sender<SessionView>,
}

/// Cheap to clone; all clones share one portfolio.
#[derive(Clone)]
pub struct AppState {
    shared: Arc<Shared>,
}

impl AppState {
    /// `store`, when set, receives the whole bundle after every accepted
    /// mutation. A failed write rejects the mutation.
    pub fn new(portfolio: Portfolio, store: Option<PathBuf>) -> AppState {
        let (events, _) = broadcast::channel(256);
        AppState {
            shared: Arc::new(Shared {
                portfolio: Mutex::new(portfolio),
                store,
                events,
            }),
        }
    }

    fn lock(&self) -> MutexGuard<'_, Portfolio> {
        self.shared
            .portfolio
            .lock()
            .unwrap_or_else(|p| p.into_inner())
    }

    /// A copy of the current portfolio.
    pub fn snapshot(&self) -> Portfolio {
        self.lock().clone()
    }

    fn mutate<T>(
        &self,
        id: &str,
        op: impl FnOnce(&mut WorkshopSession) -> Result<T, SessionError>,
    ) -> Result<(T, SessionView), ApiError> {
        let mut portfolio = self.lock();
        let mut session = portfolio
            .session(id)
            .cloned()
            .ok_or_else(|| SessionError::UnknownSession(id.into()))?;
        let out = op(&mut session)?;
        let view = SessionView::of(&session);
        self.commit(&mut portfolio, |p| {
            *p.session_mut(id).expect("looked up above") = session;
        })?;
        let _ = self.shared.events.send(view.clone());
        Ok((out, view))
    }

    fn commit(
        &self,
        portfolio: &mut Portfolio,
        change: impl FnOnce(&mut Portfolio),
    ) -> Result<(), ApiError> {
        match &self.shared.store {
            None => change(portfolio),
            Some(path) => {
                let mut next = portfolio.clone();
                change(&mut next);
                save_bundle_file(&next, path)?;
                *portfolio = next;
            }
        }
        Ok(())
    }
}

pub fn router(state: AppState) -> Router {
    Router::new()
        .route("/sessions", post(create_session).get(list_sessions))
        .route("/sessions/{id}", get(get_session))
        .route("/sessions/{id}/identification", post(post_identification))
        .route("/sessions/{id}/scenes", post(post_scene))
        .route("/sessions/{id}/scores", post(post_scores))
        .route("/sessions/{id}/threshold", post(post_threshold))
        .route("/sessions/{id}/feasibility", post(post_feasibility))
        .route("/sessions/{id}/advance", post(post_advance))
        .route("/sessions/{id}/eligible", get(get_eligible))
        .route("/sessions/{id}/events", get(session_events))
        .route("/technologies/{id}/analysis", get(get_analysis))
        .route("/technologies/{id}/radar.svg", get(get_radar_svg))
        .route("/technologies/{id}/radar.json", get(get_radar_json))
        .route("/portfolio/report", get(get_report))
        .route("/portfolio/findings", get(get_findings))
        .route("/catalog", get(get_catalog))
        .fallback(|| async {
            ApiError::new(StatusCode::NOT_FOUND, "not_found", "no such endpoint")
        })
        .with_state(state)
}

pub async fn serve(state: AppState, addr: SocketAddr) -> std::io::Result<()> {
    let listener = tokio::net::TcpListener::bind(addr).await?;
    axum::serve(listener, router(state)).await
}

fn parse_body<T: DeserializeOwned>(body: &[u8]) -> Result<T, ApiError> {
    let mut de = serde_json::Deserializer::from_slice(body);
    serde_path_to_error::deserialize(&mut de).map_err(|e| {
        let path = e.path().to_string();
        ApiError {
            path: (path != ".").then_some(path),
            ..ApiError::new(
                StatusCode::BAD_REQUEST,
                "invalid_body",
                e.inner().to_string(),
            )
        }
    })
}

fn mutation(view: SessionView, warnings: Vec<WarningView>) -> Json<MutationResponse> {
    Json(MutationResponse { view, warnings })
}

async fn create_session(
    State(state): State<AppState>,
    body: Bytes,
) -> Result<(StatusCode, Json<SessionView>), ApiError> {
    let req: CreateSession = parse_body(&body)?;
    let mut portfolio = state.lock();
    let mut created = None;
    let mut failure = None;
    state.commit(&mut portfolio, |p| {
        match p.create_session(req.group, req.participants, &req.function, req.date) {
            Ok(s) => created = Some(SessionView::of(s)),
            Err(e) => failure = Some(e),
        }
    })?;
    if let Some(e) = failure {
        return Err(e.into());
    }
    let view = created.expect("either created or failed");
    let _ = state.shared.events.send(view.clone());
    Ok((StatusCode::CREATED, Json(view)))
}

async fn list_sessions(State(state): State<AppState>) -> Json<Vec<SessionView>> {
    let portfolio = state.lock();
    Json(portfolio.sessions.iter().map(SessionView::of).collect())
}

async fn get_session(
    State(state): State<AppState>,
    Path(id): Path<String>,
) -> Result<Json<SessionView>, ApiError> {
    let portfolio = state.lock();
    let session = portfolio
        .session(&id)
        .ok_or(SessionError::UnknownSession(id.clone()))?;
    Ok(Json(SessionView::of(session)))
}

async fn post_identification(
    State(state): State<AppState>,
    Path(id): Path<String>,
    body: Bytes,
) -> Result<Json<MutationResponse>, ApiError> {
    let req: IdentificationBody = parse_body(&body)?;
    let (_, view) = state.mutate(&id, |s| {
        s.record_value_identification(
            req.expected_revision,
            req.selected_type,
            req.related,
            req.irrelevant,
        )
    })?;
    Ok(mutation(view, Vec::new()))
}

async fn post_scene(
    State(state): State<AppState>,
    Path(id): Path<String>,
    body: Bytes,
) -> Result<Json<MutationResponse>, ApiError> {
    let req: SceneBody = parse_body(&body)?;
    let (_, view) = state.mutate(&id, |s| {
        s.record_scene(req.expected_revision, req.single_value, req.text)
    })?;
    Ok(mutation(view, Vec::new()))
}

async fn post_scores(
    State(state): State<AppState>,
    Path(id): Path<String>,
    body: Bytes,
) -> Result<Json<MutationResponse>, ApiError> {
    let req: ScoresBody = parse_body(&body)?;
    let (warnings, view) =
        state.mutate(&id, |s| s.assign_scores(req.expected_revision, &req.scores))?;
    Ok(mutation(
        view,
        warnings.into_iter().map(Into::into).collect(),
    ))
}

async fn post_threshold(
    State(state): State<AppState>,
    Path(id): Path<String>,
    body: Bytes,
) -> Result<Json<MutationResponse>, ApiError> {
    let req: ThresholdBody = parse_body(&body)?;
    let (_, view) = state.mutate(&id, |s| {
        s.set_market_threshold(req.expected_revision, req.market_threshold)
    })?;
    Ok(mutation(view, Vec::new()))
}

async fn post_feasibility(
    State(state): State<AppState>,
    Path(id): Path<String>,
    body: Bytes,
) -> Result<Json<MutationResponse>, ApiError> {
    let req: FeasibilityBody = parse_body(&body)?;
    let (_, view) = state.mutate(&id, |s| {
        s.record_feasibility(
            req.expected_revision,
            req.single_value,
            req.trl,
            req.justification,
        )
    })?;
    Ok(mutation(view, Vec::new()))
}

async fn post_advance(
    State(state): State<AppState>,
    Path(id): Path<String>,
    body: Bytes,
) -> Result<Json<MutationResponse>, ApiError> {
    let req: AdvanceBody = parse_body(&body)?;
    let (_, view) = state.mutate(&id, |s| s.advance_stage(req.expected_revision))?;
    let warnings = if view.session.stage() == tod_core::Stage::TechEvaluation {
        view.session
            .anchor_warnings()
            .into_iter()
            .map(Into::into)
            .collect()
    } else {
        Vec::new()
    };
    Ok(mutation(view, warnings))
}

async fn get_eligible(
    State(state): State<AppState>,
    Path(id): Path<String>,
    Query(query): Query<EligibleQuery>,
) -> Result<Json<EligibleResponse>, ApiError> {
    let portfolio = state.lock();
    let session = portfolio
        .session(&id)
        .ok_or(SessionError::UnknownSession(id.clone()))?;
    let threshold = match query.threshold {
        None => session.market_threshold(),
        Some(t) if (0..=tod_core::session::MAX_SCORE as i64).contains(&t) => t as u8,
        Some(t) => return Err(SessionError::ThresholdOutOfRange(t).into()),
    };
    let single_values = session
        .eligible_for_feasibility(threshold)?
        .into_iter()
        .collect();
    Ok(Json(EligibleResponse {
        threshold,
        single_values,
    }))
}

fn sse_event(view: &SessionView) -> Event {
    Event::default()
        .event("session")
        .id(view.session.revision().to_string())
        .data(serde_json::to_string(view).expect("serializable"))
}

/// Current snapshot first, then one event per accepted mutation of this
/// session. Each event id is the session revision.
async fn session_events(
    State(state): State<AppState>,
    Path(id): Path<String>,
) -> Result<Sse<impl Stream<Item = Result<Event, Infallible>>>, ApiError> {
    let (initial, receiver) = {
        let portfolio = state.lock();
        let session = portfolio
            .session(&id)
            .ok_or(SessionError::UnknownSession(id.clone()))?;
        // Subscribing under the lock means no mutation falls between the
        // snapshot and the first update.
        (SessionView::of(session), state.shared.events.subscribe())
    };
    let after = initial.session.revision();
    let updates = stream::unfold(receiver, |mut rx| async move {
        loop {
            match rx.recv().await {
                Ok(view) => return Some((view, rx)),
                Err(broadcast::error::RecvError::Lagged(_)) => continue,
                Err(broadcast::error::RecvError::Closed) => return None,
            }
        }
    })
    .filter(move |view| {
        let keep = view.session.id() == id && view.session.revision() > after;
        async move { keep }
    });
    let events = stream::once(async move { initial })
        .chain(updates)
        .map(|view| Ok(sse_event(&view)));
    Ok(Sse::new(events).keep_alive(KeepAlive::default()))
}

async fn get_analysis(
    State(state): State<AppState>,
    Path(id): Path<String>,
    Query(query): Query<ThresholdQuery>,
) -> Result<Response, ApiError> {
    let thresholds = query.resolve()?;
    let portfolio = state.snapshot();
    let analysis = analyze_technology(&portfolio, &id, thresholds)?;
    Ok(Json(analysis).into_response())
}

async fn radar(
    state: AppState,
    id: String,
    query: ThresholdQuery,
    format: RadarFormat,
) -> Result<String, ApiError> {
    let thresholds = query.resolve()?;
    let portfolio = state.snapshot();
    Ok(export_radar(&portfolio, &id, thresholds, format)?)
}

async fn get_radar_svg(
    State(state): State<AppState>,
    Path(id): Path<String>,
    Query(query): Query<ThresholdQuery>,
) -> Result<Response, ApiError> {
    let svg = radar(state, id, query, RadarFormat::Svg).await?;
    Ok(([(header::CONTENT_TYPE, "image/svg+xml")], svg).into_response())
}

async fn get_radar_json(
    State(state): State<AppState>,
    Path(id): Path<String>,
    Query(query): Query<ThresholdQuery>,
) -> Result<Response, ApiError> {
    let json = radar(state, id, query, RadarFormat::Json).await?;
    Ok(([(header::CONTENT_TYPE, "application/json")], json).into_response())
}

async fn get_report(
    State(state): State<AppState>,
    Query(query): Query<ReportQuery>,
) -> Result<Response, ApiError> {
    let thresholds = ThresholdQuery {
        market_min: query.market_min,
        trl_min: query.trl_min,
    }
    .resolve()?;
    let format: ReportFormat = query.format.as_deref().unwrap_or("json").parse()?;
    let portfolio = state.snapshot();
    let report = portfolio_report(&portfolio, thresholds)?;
    let content_type = match format {
        ReportFormat::Markdown => "text/markdown; charset=utf-8",
        ReportFormat::Csv => "text/csv; charset=utf-8",
        ReportFormat::Json => "application/json",
    };
    Ok((
        [(header::CONTENT_TYPE, content_type)],
        export_report(&report, format),
    )
        .into_response())
}

async fn get_findings(State(state): State<AppState>) -> Json<Vec<Finding>> {
    let portfolio = state.snapshot();
    Json(validate_bundle(&portfolio))
}

async fn get_catalog() -> Response {
    Json(catalog_document()).into_response()
}
