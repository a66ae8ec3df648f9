//! HTTP service over the generate/rerank API.
//!
//! Routes:
//! - `POST /api/generate`: [`GenerationRequest`] in, [`GenerationResponse`] out
//! - `POST /api/rerank`: [`RerankRequest`] in, [`GenerationResponse`] out
//! - `GET /api/health`: version and resource checksums
//!
//! Malformed bodies get 400, pipeline failures 422 and everything else 500.
//! The resource store is loaded once and shared read-only by all requests.

use std::collections::BTreeMap;
use std::net::SocketAddr;
use std::sync::Arc;

use axum::body::Bytes;
use axum::extract::State;
use axum::http::{header, HeaderValue, StatusCode};
use axum::response::{IntoResponse, Response};
use axum::routing::{get, post};
use axum::{Json, Router};
use serde::de::DeserializeOwned;
use serde::{Deserialize, Serialize};

use crate::api::{generate, rerank, GenerationRequest, GenerationResponse, RerankRequest};
use crate::error::RequestError;
use crate::resources::ResourceStore;

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ErrorBody {
    pub error: String,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Health {
    pub status: String,
    pub version: String,
    pub resources: BTreeMap<String, String>,
}

struct ApiError(StatusCode, String);

impl IntoResponse for ApiError {
    fn into_response(self) -> Response {
        (self.0, Json(ErrorBody { error: self.1 })).into_response()
    }
}

impl From<RequestError> for ApiError {
    fn from(err: RequestError) -> Self {
        let status = match err {
            RequestError::Invalid(_) => StatusCode::BAD_REQUEST,
            RequestError::Pipeline(_) => StatusCode::UNPROCESSABLE_ENTITY,
            RequestError::Score(_) => StatusCode::INTERNAL_SERVER_ERROR,
        };
        ApiError(status, err.to_string())
    }
}

fn parse_body<T: DeserializeOwned>(body: &[u8]) -> Result<T, ApiError> {
    serde_json::from_slice(body).map_err(|e| ApiError(StatusCode::BAD_REQUEST, format!("invalid request body: {e}")))
}

fn respond(result: Result<GenerationResponse, RequestError>) -> Result<Response, ApiError> {
    let body = result?;
    let elapsed = body.elapsed_ms;
    let mut response = Json(body).into_response();
    if let Ok(v) = HeaderValue::from_str(&elapsed.to_string()) {
        response.headers_mut().insert("x-elapsed-ms", v);
    }
    Ok(response)
}

async fn generate_handler(State(store): State<Arc<ResourceStore>>, body: Bytes) -> Result<Response, ApiError> {
    let request: GenerationRequest = parse_body(&body)?;
    let result = tokio::task::spawn_blocking(move || generate(&store, &request))
        .await
        .map_err(|e| ApiError(StatusCode::INTERNAL_SERVER_ERROR, e.to_string()))?;
    respond(result)
}

async fn rerank_handler(body: Bytes) -> Result<Response, ApiError> {
    let request: RerankRequest = parse_body(&body)?;
    respond(rerank(&request))
}

async fn health_handler(State(store): State<Arc<ResourceStore>>) -> impl IntoResponse {
    (
        [(header::CACHE_CONTROL, "no-store")],
        Json(Health {
            status: "ok".into(),
            version: crate::VERSION.into(),
            resources: store.checksums().clone(),
        }),
    )
}

pub fn router(store: Arc<ResourceStore>) -> Router {
    Router::new()
        .route("/api/generate", post(generate_handler))
        .route("/api/rerank", post(rerank_handler))
        .route("/api/health", get(health_handler))
        .with_state(store)
}

/// Binds `addr` and serves until Ctrl-C.
pub async fn serve(store: Arc<ResourceStore>, addr: SocketAddr) -> std::io::Result<()> {
    let listener = tokio::net::TcpListener::bind(addr).await?;
    eprintln!("blendsmith listening on http://{}", listener.local_addr()?);
    axum::serve(listener, router(store))
        .with_graceful_shutdown(async {
            let _ = tokio::signal::ctrl_c().await;
        })
        .await
}
