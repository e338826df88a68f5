use std::process::Command;

use axum::body::Body;
use axum::http::{Request, StatusCode};
use calissons::tiling::HeightField;
use http_body_util::BodyExt;
use tower::ServiceExt;

async fn post(path: &str, body: &str) -> (StatusCode, String, String) {
    let req = Request::post(path).header("content-type", "application/json").body(Body::from(body.to_owned())).unwrap();
    let res = calissons_cli::router().oneshot(req).await.unwrap();
    let status = res.status();
    let ct = res.headers()["content-type"].to_str().unwrap().to_owned();
    let bytes = res.into_body().collect().await.unwrap().to_bytes();
    (status, ct, String::from_utf8(bytes.to_vec()).unwrap())
}

fn json(s: &str) -> serde_json::Value {
    serde_json::from_str(s).unwrap()
}

fn fixture() -> String {
    std::fs::read_to_string(concat!(env!("CARGO_MANIFEST_DIR"), "/tests/data/hexagon6.json")).unwrap()
}

#[tokio::test]
async fn solve_matches_cli_bytes() {
    let (status, ct, body) = post("/solve", &fixture()).await;
    assert_eq!(status, StatusCode::OK);
    assert_eq!(ct, "application/json");
    let cli = Command::new(env!("CARGO_BIN_EXE_calissons"))
        .args(["solve", concat!(env!("CARGO_MANIFEST_DIR"), "/tests/data/hexagon6.json")])
        .output()
        .unwrap();
    assert_eq!(body.as_bytes(), cli.stdout.as_slice());

    let envelope = format!(r#"{{"document":{},"extremal":"lowest","method":"bellman-ford"}}"#, fixture());
    let (_, _, low_http) = post("/solve", &envelope).await;
    let cli = Command::new(env!("CARGO_BIN_EXE_calissons"))
        .args([
            "solve",
            concat!(env!("CARGO_MANIFEST_DIR"), "/tests/data/hexagon6.json"),
            "--lowest",
            "--method",
            "bellman-ford",
        ])
        .output()
        .unwrap();
    assert_eq!(low_http.as_bytes(), cli.stdout.as_slice());
}

#[tokio::test]
async fn solve_can_attach_the_graph() {
    let body = r#"{"document":{"region":{"type":"hexagon","n":1}},"graph":true}"#;
    let (status, _, text) = post("/solve", body).await;
    assert_eq!(status, StatusCode::OK);
    let v = json(&text);
    assert_eq!(v["graph"]["vertices"].as_array().unwrap().len(), 7);
    assert_eq!(v["graph"]["arcs"].as_array().unwrap().len(), 18);
}

#[tokio::test]
async fn check_one_overlapped_edge() {
    let body = r#"{"document":{"region":{"type":"hexagon","n":1},"edges":[{"v":[0,0],"axis":"x"}]},
        "tiling":[{"cube":[1,0,0],"normal":"x"},{"cube":[0,1,0],"normal":"y"},{"cube":[0,0,1],"normal":"z"}]}"#;
    let (status, _, text) = post("/check", body).await;
    assert_eq!(status, StatusCode::OK);
    let v = json(&text);
    let violations = v["violations"].as_array().unwrap();
    assert_eq!(violations.len(), 1);
    assert_eq!(violations[0]["kind"], "x_overlapped");
}

#[tokio::test]
async fn extremes_are_pointwise_ordered() {
    let (status, _, text) = post("/extremes", r#"{"region":{"type":"hexagon","n":3}}"#).await;
    assert_eq!(status, StatusCode::OK);
    let v = json(&text);
    assert_eq!(v["verdict"], "solution");
    let lo: HeightField = serde_json::from_value(v["lowest"]["heights"].clone()).unwrap();
    let hi: HeightField = serde_json::from_value(v["highest"]["heights"].clone()).unwrap();
    assert!(lo.below(&hi));
    assert_eq!(v["lowest"]["tiling"].as_array().unwrap().len(), 27);
    assert_eq!(v["highest"]["tiling"].as_array().unwrap().len(), 27);
}

#[tokio::test]
async fn decide_and_render() {
    let tri = r#"{"region":{"type":"infinite"},"edges":[{"v":[0,0],"axis":"x"},{"v":[1,0],"axis":"y"},{"v":[1,1],"axis":"z"}]}"#;
    let (status, _, text) = post("/decide", tri).await;
    assert_eq!(status, StatusCode::OK);
    assert_eq!(json(&text)["verdict"], "unsolvable");
    let (status, ct, svg) = post("/render", &fixture()).await;
    assert_eq!(status, StatusCode::OK);
    assert_eq!(ct, "image/svg+xml");
    assert!(svg.starts_with("<svg"));
    let (_, _, again) = post("/render", &fixture()).await;
    assert_eq!(svg, again);
}

#[tokio::test]
async fn error_statuses() {
    let (status, _, text) = post("/solve", "{\"region\":").await;
    assert_eq!(status, StatusCode::BAD_REQUEST);
    assert_eq!(json(&text)["error"]["code"], "parse_error");
    let (status, _, text) = post("/solve", r#"{"region":{"type":"hexagon","n":1},"edges":[{"v":[1,0],"axis":"y"}]}"#).await;
    assert_eq!(status, StatusCode::UNPROCESSABLE_ENTITY);
    assert_eq!(json(&text)["error"]["code"], "edge_on_boundary");
    let (status, _, _) = post("/check", r#"{"region":{"type":"hexagon","n":1}}"#).await;
    assert_eq!(status, StatusCode::BAD_REQUEST);
}
