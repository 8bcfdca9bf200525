//! JSON manifests for rings, ideals, polynomials and options, and deterministic JSON output.
//!
//! A manifest is either a document with any of the keys `ring`, `ideal`, `polynomial`,
//! `options`, or one of those objects on its own:
//!
//! ```json
//! {"type": "product", "blocks": [1, 1]}
//! {"type": "cox", "degree_matrix": [[1, -1, 1, 0], [0, 1, 0, 1]], "nef_basis": [[1, 0], [0, 1]], "regular_index": 1}
//! {"generators": [[1, 0, 0, 0], [0, 1, 1, 0]], "ring": {"blocks": [1, 1]}}
//! {"terms": [{"coeff": "1/2", "powers": [2, 0]}, {"coeff": "2", "powers": [0, 0]}]}
//! ```
//!
//! Exponent vectors are dense over the ring's variable order. Polynomials may also be
//! given as expression strings in `t1, ..., ts`.

use std::str::FromStr;

use serde::Deserialize;
use serde_json::{json, Value};

use crate::error::{Error, Result};
use crate::poly::{parse_poly, MultiPoly, Rational};
use crate::ring::{DegreeVector, Monomial, MonomialIdeal, ProductRing};
use crate::toric::{CoxIdeal, CoxRing, NefBasis};

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct RawDoc {
    ring: Option<RawRing>,
    ideal: Option<RawIdeal>,
    polynomial: Option<RawPoly>,
    options: Option<RawOptions>,
    #[serde(flatten)]
    bare: RawBare,
}

/// Keys allowed at top level when the document is a bare ring, ideal, nef basis or polynomial.
#[derive(Deserialize, Default)]
struct RawBare {
    #[serde(rename = "type")]
    kind: Option<String>,
    blocks: Option<Vec<usize>>,
    degree_matrix: Option<Vec<Vec<i64>>>,
    nef_basis: Option<Vec<Vec<i64>>>,
    regular_index: Option<usize>,
    names: Option<Vec<String>>,
    generators: Option<Vec<Vec<u32>>>,
    terms: Option<Vec<RawTerm>>,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct RawRing {
    #[serde(rename = "type")]
    kind: Option<String>,
    blocks: Option<Vec<usize>>,
    degree_matrix: Option<Vec<Vec<i64>>>,
    nef_basis: Option<Vec<Vec<i64>>>,
    regular_index: Option<usize>,
    names: Option<Vec<String>>,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct RawIdeal {
    generators: Vec<Vec<u32>>,
    ring: Option<RawRing>,
}

#[derive(Deserialize)]
#[serde(untagged)]
enum RawPoly {
    Expr(String),
    Terms { terms: Vec<RawTerm> },
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct RawTerm {
    coeff: RawCoeff,
    powers: Vec<u32>,
}

#[derive(Deserialize)]
#[serde(untagged)]
enum RawCoeff {
    Text(String),
    Int(i64),
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct RawOptions {
    anchor: Option<Vec<i64>>,
    strict_gotzmann: Option<bool>,
    scan_cap: Option<i64>,
}

/// A parsed ring description.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum RingDesc {
    Product(ProductRing),
    Cox { ring: CoxRing, nef: Option<NefBasis> },
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IdealDesc {
    pub generators: Vec<Vec<u32>>,
    pub ring: Option<RingDesc>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum PolyDesc {
    Expression(String),
    Terms(MultiPoly),
}

impl PolyDesc {
    /// Resolves to a polynomial in `nvars` variables.
    pub fn resolve(&self, nvars: usize) -> Result<MultiPoly> {
        match self {
            PolyDesc::Expression(s) => parse_poly(s, nvars),
            PolyDesc::Terms(p) if p.nvars() == nvars => Ok(p.clone()),
            PolyDesc::Terms(p) => Err(Error::RingMismatch(format!(
                "polynomial has {} variables, expected {nvars}",
                p.nvars()
            ))),
        }
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct ManifestOptions {
    pub anchor: Option<Vec<i64>>,
    pub strict_gotzmann: bool,
    pub scan_cap: Option<i64>,
}

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Manifest {
    pub ring: Option<RingDesc>,
    pub ideal: Option<IdealDesc>,
    pub polynomial: Option<PolyDesc>,
    /// A nef basis given on its own, without a degree matrix.
    pub nef: Option<NefBasis>,
    pub options: ManifestOptions,
}

fn field_error(field: &str, msg: impl std::fmt::Display) -> Error {
    Error::Parse(format!("field `{field}`: {msg}"))
}

pub fn parse_manifest(text: &str) -> Result<Manifest> {
    let raw: RawDoc = serde_json::from_str(text).map_err(|e| Error::Parse(e.to_string()))?;
    let bare = raw.bare;
    let mut m = Manifest::default();

    let bare_ring = bare.kind.is_some() || bare.blocks.is_some() || bare.degree_matrix.is_some();
    if bare_ring {
        if raw.ring.is_some() {
            return Err(field_error("ring", "given both at top level and under `ring`"));
        }
        let r = RawRing {
            kind: bare.kind,
            blocks: bare.blocks,
            degree_matrix: bare.degree_matrix,
            nef_basis: bare.nef_basis,
            regular_index: bare.regular_index,
            names: bare.names,
        };
        m.ring = Some(build_ring(r, "")?);
    } else {
        if let Some(classes) = bare.nef_basis {
            m.nef = Some(build_nef(classes, bare.regular_index, "nef_basis")?);
        } else if bare.regular_index.is_some() {
            return Err(field_error("regular_index", "given without `nef_basis`"));
        }
        if bare.names.is_some() {
            return Err(field_error("names", "given without `degree_matrix`"));
        }
        if let Some(r) = raw.ring {
            m.ring = Some(build_ring(r, "ring.")?);
        }
    }

    match (bare.generators, raw.ideal) {
        (Some(_), Some(_)) => return Err(field_error("generators", "given both at top level and under `ideal`")),
        (Some(generators), None) => m.ideal = Some(IdealDesc { generators, ring: None }),
        (None, Some(i)) => {
            let ring = i.ring.map(|r| build_ring(r, "ideal.ring.")).transpose()?;
            m.ideal = Some(IdealDesc { generators: i.generators, ring });
        }
        (None, None) => {}
    }

    match (bare.terms, raw.polynomial) {
        (Some(_), Some(_)) => return Err(field_error("terms", "given both at top level and under `polynomial`")),
        (Some(terms), None) => m.polynomial = Some(build_terms(terms, "terms")?),
        (None, Some(RawPoly::Terms { terms })) => m.polynomial = Some(build_terms(terms, "polynomial.terms")?),
        (None, Some(RawPoly::Expr(s))) => m.polynomial = Some(PolyDesc::Expression(s)),
        (None, None) => {}
    }

    if let Some(o) = raw.options {
        m.options = ManifestOptions {
            anchor: o.anchor,
            strict_gotzmann: o.strict_gotzmann.unwrap_or(false),
            scan_cap: o.scan_cap,
        };
    }
    Ok(m)
}

fn build_nef(classes: Vec<Vec<i64>>, regular_index: Option<usize>, field: &str) -> Result<NefBasis> {
    let r = regular_index.unwrap_or(1);
    if r == 0 {
        return Err(field_error("regular_index", "is one-based"));
    }
    NefBasis::with_regular(classes, r - 1).map_err(|e| field_error(field, e))
}

fn build_ring(r: RawRing, prefix: &str) -> Result<RingDesc> {
    let f = |name: &str| format!("{prefix}{name}");
    let kind = match (r.kind.as_deref(), &r.blocks, &r.degree_matrix) {
        (Some("product"), _, _) | (None, Some(_), None) => "product",
        (Some("cox"), _, _) | (None, None, Some(_)) => "cox",
        (Some(other), _, _) => return Err(field_error(&f("type"), format!("unknown ring type {other:?}"))),
        (None, _, _) => return Err(field_error(&f("type"), "cannot tell a product ring from a Cox ring")),
    };
    if kind == "product" {
        if r.degree_matrix.is_some() || r.nef_basis.is_some() || r.regular_index.is_some() || r.names.is_some() {
            return Err(field_error(&f("type"), "a product ring takes only `blocks`"));
        }
        let blocks = r.blocks.ok_or_else(|| field_error(&f("blocks"), "missing"))?;
        return ProductRing::new(blocks).map(RingDesc::Product).map_err(|e| field_error(&f("blocks"), e));
    }
    if r.blocks.is_some() {
        return Err(field_error(&f("blocks"), "not allowed for a Cox ring"));
    }
    let rows = r.degree_matrix.ok_or_else(|| field_error(&f("degree_matrix"), "missing"))?;
    let mut ring = CoxRing::from_rows(&rows).map_err(|e| field_error(&f("degree_matrix"), e))?;
    if let Some(names) = r.names {
        ring = CoxRing::with_names(ring.columns().to_vec(), names).map_err(|e| field_error(&f("names"), e))?;
    }
    let nef = match r.nef_basis {
        Some(c) => Some(build_nef(c, r.regular_index, &f("nef_basis"))?),
        None if r.regular_index.is_some() => {
            return Err(field_error(&f("regular_index"), "given without `nef_basis`"));
        }
        None => None,
    };
    if let Some(c) = &nef {
        if c.rank() != ring.rank() {
            return Err(field_error(
                &f("nef_basis"),
                format!("rank {} does not match the degree matrix rank {}", c.rank(), ring.rank()),
            ));
        }
    }
    Ok(RingDesc::Cox { ring, nef })
}

fn build_terms(terms: Vec<RawTerm>, field: &str) -> Result<PolyDesc> {
    let nvars = terms.first().map(|t| t.powers.len()).ok_or_else(|| {
        field_error(field, "an empty term list has no variable count; use the expression \"0\"")
    })?;
    let mut parsed = Vec::new();
    for (k, t) in terms.into_iter().enumerate() {
        let c = match t.coeff {
            RawCoeff::Int(n) => Rational::from_integer(n.into()),
            RawCoeff::Text(s) => parse_rational(&s).map_err(|e| field_error(&format!("{field}[{k}].coeff"), e))?,
        };
        parsed.push((t.powers, c));
    }
    MultiPoly::from_terms(nvars, parsed).map(PolyDesc::Terms).map_err(|e| field_error(field, e))
}

/// Parses `"p"` or `"p/q"`.
pub fn parse_rational(s: &str) -> Result<Rational> {
    let s = s.trim();
    if let Some((_, den)) = s.split_once('/') {
        if den.trim().trim_start_matches('+').chars().all(|c| c == '0') {
            return Err(Error::Parse(format!("zero denominator in {s:?}")));
        }
    }
    Rational::from_str(s).map_err(|_| Error::Parse(format!("{s:?} is not a rational number")))
}

impl Manifest {
    /// The product ring, from `ring` or the ideal's own `ring`.
    pub fn product_ring(&self) -> Result<ProductRing> {
        match self.ring_desc()? {
            RingDesc::Product(r) => Ok(r.clone()),
            RingDesc::Cox { .. } => Err(Error::RingMismatch("expected a product ring, got a Cox ring".into())),
        }
    }

    pub fn cox_ring(&self) -> Result<(CoxRing, Option<NefBasis>)> {
        match self.ring_desc()? {
            RingDesc::Cox { ring, nef } => Ok((ring.clone(), nef.clone().or_else(|| self.nef.clone()))),
            RingDesc::Product(r) => {
                // A product of projective spaces is also a toric variety.
                let s = r.num_blocks();
                let cols = r.blocks().iter().enumerate().flat_map(|(i, &n)| std::iter::repeat_n(DegreeVector::unit(s, i).0, n + 1));
                Ok((CoxRing::new(cols.collect())?, self.nef.clone()))
            }
        }
    }

    fn ring_desc(&self) -> Result<&RingDesc> {
        self.ring
            .as_ref()
            .or_else(|| self.ideal.as_ref().and_then(|i| i.ring.as_ref()))
            .ok_or_else(|| Error::Parse("no ring given".into()))
    }

    pub fn monomial_ideal(&self) -> Result<MonomialIdeal> {
        let gens = &self.ideal.as_ref().ok_or_else(|| Error::Parse("no ideal given".into()))?.generators;
        MonomialIdeal::from_dense(self.product_ring()?, gens)
    }

    pub fn cox_ideal(&self) -> Result<CoxIdeal> {
        let gens = &self.ideal.as_ref().ok_or_else(|| Error::Parse("no ideal given".into()))?.generators;
        CoxIdeal::from_dense(self.cox_ring()?.0, gens)
    }

    /// Overlays the parts present in `other`.
    pub fn merge(mut self, other: Manifest) -> Manifest {
        if other.ring.is_some() {
            self.ring = other.ring;
        }
        if other.ideal.is_some() {
            self.ideal = other.ideal;
        }
        if other.polynomial.is_some() {
            self.polynomial = other.polynomial;
        }
        if other.nef.is_some() {
            self.nef = other.nef;
        }
        if other.options != ManifestOptions::default() {
            self.options = other.options;
        }
        self
    }
}

pub fn rational_json(q: &Rational) -> Value {
    Value::String(q.to_string())
}

pub fn poly_json(p: &MultiPoly) -> Value {
    let terms: Vec<Value> = p
        .ordered_terms()
        .into_iter()
        .map(|(e, c)| json!({"coeff": c.to_string(), "powers": e}))
        .collect();
    json!({"expression": p.to_string(), "terms": terms})
}

pub fn monomial_json(m: &Monomial, nvars: usize) -> Value {
    json!(m.to_dense(nvars))
}

/// Pretty JSON with sorted object keys and a trailing newline.
pub fn render_result(value: &Value) -> String {
    let mut s = serde_json::to_string_pretty(value).expect("values built from JSON types serialize");
    s.push('\n');
    s
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::rat;

    #[test]
    fn bare_product_ring_and_ideal() {
        let m = parse_manifest(r#"{"ring": {"blocks": [1, 1]}, "ideal": {"generators": [[1,0,0,0],[0,1,1,0]]}}"#).unwrap();
        let i = m.monomial_ideal().unwrap();
        assert_eq!(i.format_generators(), "(x1_1*x2_0, x1_0)");
        let m = parse_manifest(r#"{"generators": [[1,0,0,0]], "ring": {"type": "product", "blocks": [1, 1]}}"#).unwrap();
        assert_eq!(m.monomial_ideal().unwrap().generators().len(), 1);
        let m = parse_manifest(r#"{"ideal": {"generators": [[1,0,0,0]], "ring": {"type": "product", "blocks": [1, 1]}}}"#)
            .unwrap();
        assert_eq!(m.monomial_ideal().unwrap().generators().len(), 1);
    }

    #[test]
    fn polynomial_terms() {
        let text = r#"{"terms":[{"coeff":"1/2","powers":[2,0]},{"coeff":"3/2","powers":[1,0]},
                       {"coeff":"2","powers":[0,1]},{"coeff":"2","powers":[0,0]}]}"#;
        let p = parse_manifest(text).unwrap().polynomial.unwrap().resolve(2).unwrap();
        assert_eq!(p.to_string(), "1/2*t1^2 + 3/2*t1 + 2*t2 + 2");
        assert_eq!(p.eval_int(&[3, 3]), rat(17));
        let back = poly_json(&p);
        assert_eq!(back["terms"][0]["coeff"], "1/2");
        assert_eq!(back["terms"][0]["powers"], json!([2, 0]));
        assert!(PolyDesc::Terms(p).resolve(3).is_err());
    }

    #[test]
    fn hirzebruch_degree_matrix() {
        let text = r#"{"type":"cox","degree_matrix":[[1,-1,1,0],[0,1,0,1]],"nef_basis":[[1,0],[0,1]],"regular_index":1}"#;
        let (ring, nef) = parse_manifest(text).unwrap().cox_ring().unwrap();
        assert_eq!(ring.columns(), &[vec![1, 0], vec![-1, 1], vec![1, 0], vec![0, 1]]);
        assert_eq!(nef.unwrap().regular_index(), 0);
    }

    #[test]
    fn diagnostics_name_the_field_or_line() {
        let e = parse_manifest("{\n  \"ring\": {\"blocks\": [1, -1]}\n}").unwrap_err().to_string();
        assert!(e.contains("line 2"), "{e}");
        let e = parse_manifest(r#"{"ring": {"blocks": []}}"#).unwrap_err().to_string();
        assert!(e.contains("ring.blocks"), "{e}");
        let e = parse_manifest(r#"{"terms":[{"coeff":"1/0","powers":[1]}]}"#).unwrap_err().to_string();
        assert!(e.contains("terms[0].coeff"), "{e}");
        let e = parse_manifest(r#"{"rign": {}}"#).unwrap_err().to_string();
        assert!(e.contains("rign"), "{e}");
        let e = parse_manifest(r#"{"nef_basis":[[1,2],[2,4]]}"#).unwrap_err().to_string();
        assert!(e.contains("nef_basis"), "{e}");
    }

    #[test]
    fn rationals_round_trip() {
        for s in ["0", "7", "-3/4", "5/6"] {
            assert_eq!(parse_rational(s).unwrap().to_string(), s);
        }
        assert_eq!(parse_rational("4/6").unwrap().to_string(), "2/3");
        assert!(parse_rational("1/0").is_err());
        assert!(parse_rational("x").is_err());
    }

    #[test]
    fn rendering_is_deterministic() {
        let v = json!({"b": 1, "a": [1, 2], "c": {"z": "1/2", "y": null}});
        assert_eq!(render_result(&v), render_result(&v.clone()));
        assert!(render_result(&v).find("\"a\"").unwrap() < render_result(&v).find("\"b\"").unwrap());
    }

    #[test]
    fn product_ring_as_toric() {
        let m = parse_manifest(r#"{"blocks":[1,2]}"#).unwrap();
        let (r, _) = m.cox_ring().unwrap();
        assert_eq!(r.num_vars(), 5);
        assert_eq!(r.columns()[2], vec![0, 1]);
    }
}
