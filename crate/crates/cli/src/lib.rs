//! HTTP front end. Handlers are stateless: each body carries its document.

use axum::http::{header, StatusCode};
use axum::response::{IntoResponse, Response as HttpResponse};
use axum::routing::post;
use axum::Router;
use calissons::api::{self, Request, Response};

fn reply(r: Response) -> HttpResponse {
    let code = StatusCode::from_u16(r.status.http_code()).expect("valid status");
    (code, [(header::CONTENT_TYPE, r.content_type())], r.text()).into_response()
}

fn handle(body: &str, op: fn(&Request) -> Response) -> HttpResponse {
    match Request::from_json(body) {
        Ok(req) => reply(op(&req)),
        Err(e) => reply(Response::error(&e)),
    }
}

async fn solve(body: String) -> HttpResponse {
    handle(&body, api::solve)
}

async fn decide(body: String) -> HttpResponse {
    handle(&body, api::decide)
}

async fn check(body: String) -> HttpResponse {
    handle(&body, api::check_tiling)
}

async fn extremes(body: String) -> HttpResponse {
    handle(&body, api::extremes)
}

async fn render(body: String) -> HttpResponse {
    handle(&body, api::render_picture)
}

pub fn router() -> Router {
    Router::new()
        .route("/solve", post(solve))
        .route("/decide", post(decide))
        .route("/check", post(check))
        .route("/extremes", post(extremes))
        .route("/render", post(render))
}

pub async fn serve(addr: &str) -> std::io::Result<()> {
    let listener = tokio::net::TcpListener::bind(addr).await?;
    eprintln!("listening on {}", listener.local_addr()?);
    axum::serve(listener, router()).await
}
