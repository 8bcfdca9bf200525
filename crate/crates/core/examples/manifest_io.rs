//! Reading a JSON manifest and rendering a deterministic JSON result.
//!
//! cargo run --example manifest_io

use hilbert_persistence::manifest::{parse_manifest, poly_json, render_result};
use hilbert_persistence::persistence::interpolate_hilbert_polynomial;
use serde_json::json;

const DOC: &str = r#"{
  "ring": {"type": "product", "blocks": [1, 1]},
  "ideal": {"generators": [[1, 0, 0, 0], [0, 1, 1, 0]]},
  "polynomial": {"terms": [{"coeff": "1", "powers": [0, 0]}]},
  "options": {"anchor": [2, 2]}
}"#;

fn main() {
    let m = parse_manifest(DOC).unwrap();
    let ideal = m.monomial_ideal().unwrap();
    let p = m.polynomial.as_ref().unwrap().resolve(2).unwrap();
    let a = m.options.anchor.clone().unwrap();
    let found = interpolate_hilbert_polynomial(&ideal, &a).unwrap();
    let out = json!({
        "ideal": ideal.format_generators(),
        "given": poly_json(&p),
        "interpolated": poly_json(&found),
        "equal": p == found,
    });
    print!("{}", render_result(&out));

    if let Err(e) = parse_manifest(r#"{"ring": {"type": "product", "blocks": "one"}}"#) {
        println!("{e}");
    }
}
