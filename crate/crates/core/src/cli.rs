//! The `hilbpers` command line.
//!
//! Exit status: 0 success or confirmed, 1 rejected or mismatch, 2 usage or input
//! error, 3 a user-asserted hypothesis (surjectivity of `τ`) is false.

use std::path::Path;

use clap::{Parser, Subcommand};
use serde_json::{json, Value};

use crate::error::{Error, Result};
use crate::hilbpoly::{check_admissible, standard_decomposition, FTable};
use crate::macaulay::{crona_division, crona_growth, gotzmann_rep, macaulay_growth, macaulay_rep};
use crate::manifest::{parse_manifest, poly_json, render_result, Manifest, PolyDesc};
use crate::persistence::{
    find_persistence_point, interpolate_hilbert_polynomial, verify_polynomial, CheckedPoint, PersistenceOptions,
    PersistencePoint, Rejection, Verdict,
};
use crate::poly::MultiPoly;
use crate::ring::{DegreeVector, MonomialIdeal};
use crate::stable::{is_multilex_ideal, is_multilex_ideal_up_to, is_strongly_multistable, multilex_ideal};
use crate::stanley::{decomposition_polynomial, partial_decomposition};
use crate::toric::{f_map, toric_hilbert_function, verify_toric, zonotope, NefBasis};

#[derive(Parser, Debug)]
#[command(name = "hilbpers", version, about = "Multigraded Hilbert functions and persistence checks")]
struct Cli {
    #[command(subcommand)]
    command: Command,
    /// Ring manifest (JSON file).
    #[arg(long, global = true)]
    ring: Option<String>,
    /// Ideal manifest (JSON file); may carry its own ring.
    #[arg(long, global = true)]
    ideal: Option<String>,
    /// Polynomial: an expression such as "3*t1+2*t2+1" or a JSON file.
    #[arg(long, global = true)]
    poly: Option<String>,
    /// Degree vector, e.g. 3,3.
    #[arg(long, global = true)]
    degree: Option<String>,
    /// Anchor degree `a`; defaults to max(generation bound, (2,...,2)).
    #[arg(long, global = true)]
    anchor: Option<String>,
    /// Take d_1 = max(a_1, D + 1) instead of max(a_1, D).
    #[arg(long, global = true)]
    strict_gotzmann: bool,
    /// Upper end of the scan for c-values.
    #[arg(long, global = true)]
    scan_cap: Option<i64>,
    /// Machine-readable output.
    #[arg(long, global = true)]
    json: bool,
    /// Check multilex slices up to bound + (n_1 + 1, ..., n_s + 1) instead of bound + (1, ..., 1).
    #[arg(long, global = true)]
    deep_check: bool,
    /// Nef basis manifest (JSON file).
    #[arg(long, global = true)]
    nef: Option<String>,
    /// Cube corner `d` for `zonotope`.
    #[arg(long, global = true)]
    d: Option<String>,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Hilbert function H(b) of S/I.
    Hilb,
    /// Hilbert polynomial of S/I.
    Hpoly,
    /// Gotzmann representation of a univariate polynomial.
    Gotzmann,
    /// Macaulay representation of ALPHA in degree D and its growth bound.
    Growth {
        alpha: u64,
        #[arg(value_name = "D")]
        growth_degree: u32,
        /// Use Crona's bound for P^N instead of Macaulay's.
        #[arg(long)]
        crona: Option<usize>,
    },
    /// Multilex ideal with the same Hilbert function up to --degree.
    Multilex,
    /// Partial Stanley decomposition at the anchor.
    Stanley,
    /// F table of a polynomial at the anchor.
    Decompose,
    /// Persistence point d for a polynomial.
    PersistPoint,
    /// Decide whether --poly is the Hilbert polynomial of --ideal.
    Verify,
    /// Interpolate the Hilbert polynomial from H on a + [0, n].
    Interpolate,
    /// Hilbert function of R/J for a Cox ring.
    ToricHilb,
    /// The points f(b) for b_i in {d_i, d_i + 1}.
    Zonotope,
    /// Decide whether --poly is the Hilbert polynomial of a toric ideal.
    ToricVerify,
}

/// Exit status plus what to print on stdout and stderr.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CommandOutput {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

struct Report {
    code: i32,
    json: Value,
    text: String,
}

impl Report {
    fn ok(json: Value, text: String) -> Self {
        Report { code: 0, json, text }
    }
}

pub fn run_command<I, T>(argv: I) -> CommandOutput
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            let text = e.render().to_string();
            return if code == 0 {
                CommandOutput { code, stdout: text, stderr: String::new() }
            } else {
                CommandOutput { code, stdout: String::new(), stderr: text }
            };
        }
    };
    match dispatch(&cli) {
        Ok(r) => {
            let stdout = if cli.json { render_result(&r.json) } else { r.text };
            CommandOutput { code: r.code, stdout, stderr: String::new() }
        }
        Err(e) => {
            let code = if e.is_assumption_violation() { 3 } else { 2 };
            let stdout = if cli.json {
                render_result(&json!({"error": e.to_string(), "exit": code}))
            } else {
                String::new()
            };
            CommandOutput { code, stdout, stderr: format!("error: {e}\n") }
        }
    }
}

fn load(path: &str) -> Result<Manifest> {
    let text = std::fs::read_to_string(path).map_err(|e| Error::Parse(format!("{path}: {e}")))?;
    parse_manifest(&text).map_err(|e| Error::Parse(format!("{path}: {e}")))
}

fn parse_vector(flag: &str, s: &str) -> Result<Vec<i64>> {
    s.trim()
        .trim_start_matches('(')
        .trim_end_matches(')')
        .split(',')
        .map(|x| x.trim().parse::<i64>().map_err(|_| Error::Parse(format!("--{flag}: {s:?} is not a list of integers"))))
        .collect()
}

impl Cli {
    fn manifest(&self) -> Result<Manifest> {
        let mut m = Manifest::default();
        for path in [&self.ideal, &self.ring, &self.nef].into_iter().flatten() {
            m = m.merge(load(path)?);
        }
        if let Some(p) = &self.poly {
            if p.ends_with(".json") && Path::new(p).exists() {
                m = m.merge(load(p)?);
            } else {
                m.polynomial = Some(PolyDesc::Expression(p.clone()));
            }
        }
        Ok(m)
    }

    fn vector(&self, flag: &str, value: &Option<String>) -> Result<Option<Vec<i64>>> {
        value.as_deref().map(|s| parse_vector(flag, s)).transpose()
    }

    fn required(&self, flag: &str, value: &Option<String>) -> Result<Vec<i64>> {
        self.vector(flag, value)?.ok_or_else(|| Error::Parse(format!("--{flag} is required")))
    }

    fn options(&self, m: &Manifest) -> PersistenceOptions {
        PersistenceOptions {
            strict_gotzmann: self.strict_gotzmann || m.options.strict_gotzmann,
            scan_cap: self.scan_cap.or(m.options.scan_cap),
        }
    }

    fn anchor(&self, m: &Manifest, gb: Option<&DegreeVector>, s: usize) -> Result<Vec<i64>> {
        if let Some(a) = self.vector("anchor", &self.anchor)?.or_else(|| m.options.anchor.clone()) {
            if a.len() != s {
                return Err(Error::Parse(format!("--anchor has {} entries, expected {s}", a.len())));
            }
            return Ok(a);
        }
        let twos = DegreeVector(vec![2; s]);
        Ok(gb.map_or(twos.clone(), |g| g.sup(&twos)).0)
    }
}

fn polynomial(m: &Manifest, nvars: usize) -> Result<MultiPoly> {
    m.polynomial.as_ref().ok_or_else(|| Error::Parse("--poly is required".into()))?.resolve(nvars)
}

fn dispatch(cli: &Cli) -> Result<Report> {
    match &cli.command {
        Command::Hilb => hilb(cli),
        Command::Hpoly => hpoly(cli),
        Command::Gotzmann => gotzmann(cli),
        Command::Growth { alpha, growth_degree, crona } => growth(*alpha, *growth_degree, *crona),
        Command::Multilex => multilex(cli),
        Command::Stanley => stanley(cli),
        Command::Decompose => decompose(cli),
        Command::PersistPoint => persist_point(cli),
        Command::Verify => verify(cli),
        Command::Interpolate => interpolate(cli),
        Command::ToricHilb => toric_hilb(cli),
        Command::Zonotope => zonotope_cmd(cli),
        Command::ToricVerify => toric_verify(cli),
    }
}

fn ideal_json(ideal: &MonomialIdeal) -> Value {
    let n = ideal.ring().num_vars();
    json!({
        "blocks": ideal.ring().blocks(),
        "generators": ideal.generators().iter().map(|g| g.to_dense(n)).collect::<Vec<_>>(),
        "text": ideal.format_generators(),
    })
}

fn hilb(cli: &Cli) -> Result<Report> {
    let ideal = cli.manifest()?.monomial_ideal()?;
    let b = cli.required("degree", &cli.degree)?;
    if b.len() != ideal.ring().num_blocks() {
        return Err(Error::Parse(format!("--degree has {} entries, expected {}", b.len(), ideal.ring().num_blocks())));
    }
    let h = ideal.hilbert_function(&b);
    Ok(Report::ok(json!({"degree": b, "value": h}), format!("{h}\n")))
}

fn hpoly(cli: &Cli) -> Result<Report> {
    let m = cli.manifest()?;
    let ideal = m.monomial_ideal()?;
    let gb = ideal.generation_bound();
    let a = cli.anchor(&m, Some(&gb), gb.len())?;
    let (p, method) = if is_strongly_multistable(&ideal) {
        (decomposition_polynomial(&partial_decomposition(&ideal, &a)?), "stanley")
    } else {
        (interpolate_hilbert_polynomial(&ideal, &a)?, "interpolation")
    };
    let text = format!("{p}\n");
    Ok(Report::ok(json!({"anchor": a, "method": method, "polynomial": poly_json(&p)}), text))
}

fn gotzmann(cli: &Cli) -> Result<Report> {
    let m = cli.manifest()?;
    let p = polynomial(&m, 1)?.to_std(0).expect("a polynomial in one variable");
    let rep = gotzmann_rep(&p)?;
    let terms: Vec<String> = rep
        .a
        .iter()
        .enumerate()
        .map(|(k, &ai)| match ai as i64 - k as i64 {
            0 => format!("binom(t, {ai})"),
            sh if sh > 0 => format!("binom(t+{sh}, {ai})"),
            sh => format!("binom(t{sh}, {ai})"),
        })
        .collect();
    let text = format!("D = {}\nP = {}\na = {:?}\n", rep.number(), terms.join(" + "), rep.a);
    Ok(Report::ok(json!({"polynomial": p.to_string(), "number": rep.number(), "a": rep.a}), text))
}

fn growth(alpha: u64, d: u32, crona: Option<usize>) -> Result<Report> {
    let rep = macaulay_rep(alpha, d)?;
    let mut j = json!({"alpha": alpha, "d": d, "kappa": rep.kappas});
    let mut text = format!("{alpha} = {}\n", macaulay_text(&rep.kappas, d));
    match crona {
        None => {
            let g = macaulay_growth(alpha, d)?;
            j["growth"] = json!(g);
            text.push_str(&format!("{alpha}^<{d}> = {g}\n"));
        }
        Some(n) => {
            let div = crona_division(alpha, n, d as u64);
            let g = crona_growth(alpha, n, d as u64)?;
            j["crona"] = json!({"n": n, "q": div.q, "r": div.r, "divisor": div.divisor, "growth": g});
            text.push_str(&format!("q = {}, r = {}, bound = {g}\n", div.q, div.r));
        }
    }
    Ok(Report::ok(j, text))
}

fn macaulay_text(kappas: &[u64], d: u32) -> String {
    let terms: Vec<String> = kappas
        .iter()
        .zip((1..=d as u64).rev())
        .filter(|(&k, i)| k >= *i)
        .map(|(k, i)| format!("binom({k}, {i})"))
        .collect();
    if terms.is_empty() {
        "0".into()
    } else {
        terms.join(" + ")
    }
}

fn multilex(cli: &Cli) -> Result<Report> {
    let ideal = cli.manifest()?.monomial_ideal()?;
    let gb = ideal.generation_bound();
    let bound = cli.vector("degree", &cli.degree)?.unwrap_or_else(|| gb.0.clone());
    let lex = multilex_ideal(&ideal, &bound)?;
    let is_lex = if cli.deep_check {
        let extra: Vec<i64> = lex.ring().blocks().iter().map(|&n| n as i64 + 1).collect();
        is_multilex_ideal_up_to(&lex, &lex.generation_bound().add(&extra))
    } else {
        is_multilex_ideal(&lex)
    };
    let text = format!("{}\nmultilex: {is_lex}\n", lex.format_generators());
    Ok(Report::ok(json!({"bound": bound, "ideal": ideal_json(&lex), "multilex": is_lex}), text))
}

fn stanley(cli: &Cli) -> Result<Report> {
    let m = cli.manifest()?;
    let ideal = m.monomial_ideal()?;
    let gb = ideal.generation_bound();
    let a = cli.anchor(&m, Some(&gb), gb.len())?;
    let d = partial_decomposition(&ideal, &a)?;
    let n = ideal.ring().num_vars();
    let pairs: Vec<Value> = d
        .pairs()
        .iter()
        .map(|p| json!({"base": p.base.to_dense(n), "text": ideal.ring().format_monomial(&p.base), "suffix_starts": p.suffix_starts}))
        .collect();
    let p = decomposition_polynomial(&d);
    let mut text = String::new();
    for pair in d.pairs() {
        text.push_str(&format!("{}\t{:?}\n", ideal.ring().format_monomial(&pair.base), pair.suffix_starts));
    }
    text.push_str(&format!("P = {p}\n"));
    Ok(Report::ok(json!({"anchor": a, "pairs": pairs, "polynomial": poly_json(&p)}), text))
}

fn table_json(f: &FTable) -> Value {
    let entries: Vec<Value> = f.entries.iter().map(|(k, v)| json!({"index": k, "poly": v.to_string()})).collect();
    json!({"anchor": f.anchor.0, "maxdeg": f.maxdeg, "entries": entries})
}

fn table_text(f: &FTable) -> String {
    let mut t = String::new();
    for (k, v) in &f.entries {
        let idx: String = k.iter().map(|x| x.to_string()).collect();
        t.push_str(&format!("F[{idx}] = {v}\n"));
    }
    if f.entries.is_empty() {
        t.push_str("(all entries zero)\n");
    }
    t
}

fn decompose(cli: &Cli) -> Result<Report> {
    let m = cli.manifest()?;
    let ring = m.product_ring()?;
    let p = polynomial(&m, ring.num_blocks())?;
    let a = cli.anchor(&m, None, ring.num_blocks())?;
    let table = standard_decomposition(&p, &a, &ring)?;
    let admissible = check_admissible(&p, &a, &ring).map(|_| None).or_else(|e| match e {
        Error::NotHilbertPolynomial(why) => Ok(Some(why)),
        other => Err(other),
    })?;
    let mut text = table_text(&table);
    text.push_str(&format!("admissible: {}\n", admissible.is_none()));
    let j = json!({"polynomial": poly_json(&p), "table": table_json(&table), "admissible": admissible.is_none(), "reason": admissible});
    Ok(Report::ok(j, text))
}

fn point_json(pt: &PersistencePoint) -> Value {
    let axes: Vec<Value> = pt
        .provenance
        .iter()
        .map(|a| {
            let scans: Vec<Value> = a
                .scans
                .iter()
                .map(|s| json!({"fixed": s.fixed, "poly": s.poly.to_string(), "c": s.value.c, "unrestricted": s.value.unrestricted}))
                .collect();
            let gotz: Vec<Value> = a.gotzmann.iter().map(|(k, d)| json!({"index": k, "number": d})).collect();
            json!({"axis": a.axis, "anchor": a.anchor, "d": a.d, "c": a.c, "gotzmann": gotz, "scans": scans})
        })
        .collect();
    json!({"d": pt.d.0, "table": table_json(&pt.table), "axes": axes})
}

fn point_text(pt: &PersistencePoint) -> String {
    let mut t = format!("d = {}\n", pt.d);
    for a in &pt.provenance {
        match a.c {
            None => {
                let g = a.gotzmann.iter().map(|(_, d)| *d).max().unwrap_or(0);
                t.push_str(&format!("  axis {}: anchor {}, max Gotzmann number {g} -> {}\n", a.axis, a.anchor, a.d));
            }
            Some(c) => t.push_str(&format!("  axis {}: anchor {}, c = {c} -> {}\n", a.axis, a.anchor, a.d)),
        }
    }
    t
}

fn persist_point(cli: &Cli) -> Result<Report> {
    let m = cli.manifest()?;
    let ring = m.product_ring()?;
    let p = polynomial(&m, ring.num_blocks())?;
    let a = cli.anchor(&m, None, ring.num_blocks())?;
    let pt = find_persistence_point(&p, &a, &ring, &cli.options(&m))?;
    let text = format!("{}{}", point_text(&pt), table_text(&pt.table));
    Ok(Report::ok(point_json(&pt), text))
}

fn checked_json(c: &CheckedPoint) -> Value {
    json!({"point": c.point.0, "expected": c.expected.to_string(), "actual": c.actual, "match": c.matches()})
}

fn verdict_parts(v: &Verdict) -> (Value, String) {
    let mut t = String::from("point\tH\tP\n");
    for c in &v.checked {
        t.push_str(&format!("{}\t{}\t{}{}\n", c.point, c.actual, c.expected, if c.matches() { "" } else { "\t<-- mismatch" }));
    }
    let rejection = match &v.rejection {
        None => {
            t.push_str(&format!("confirmed: {} points matched\n", v.checked.len()));
            Value::Null
        }
        Some(Rejection::Mismatch(c)) => {
            t.push_str(&format!("rejected at {}\n", c.point));
            json!({"kind": "mismatch", "point": c.point.0})
        }
        Some(Rejection::Inadmissible(why)) => {
            t.push_str(&format!("rejected: {why}\n"));
            json!({"kind": "inadmissible", "reason": why})
        }
    };
    let checked: Vec<Value> = v.checked.iter().map(checked_json).collect();
    (json!({"checked": checked, "confirmed": v.confirmed(), "rejection": rejection}), t)
}

fn verify(cli: &Cli) -> Result<Report> {
    let m = cli.manifest()?;
    let ideal = m.monomial_ideal()?;
    let s = ideal.ring().num_blocks();
    let p = polynomial(&m, s)?;
    let gb = ideal.generation_bound();
    let a = cli.anchor(&m, Some(&gb), s)?;
    let v = verify_polynomial(&ideal, &p, &a, &cli.options(&m))?;
    let (mut j, vt) = verdict_parts(&v.verdict);
    j["anchor"] = json!(a);
    j["polynomial"] = poly_json(&p);
    j["point"] = v.point.as_ref().map_or(Value::Null, point_json);
    let text = format!("{}{vt}", v.point.as_ref().map(point_text).unwrap_or_default());
    Ok(Report { code: if v.verdict.confirmed() { 0 } else { 1 }, json: j, text })
}

fn interpolate(cli: &Cli) -> Result<Report> {
    let m = cli.manifest()?;
    let ideal = m.monomial_ideal()?;
    let gb = ideal.generation_bound();
    let a = cli.anchor(&m, Some(&gb), gb.len())?;
    let p = interpolate_hilbert_polynomial(&ideal, &a)?;
    Ok(Report::ok(json!({"anchor": a, "polynomial": poly_json(&p)}), format!("{p}\n")))
}

fn nef_of(m: &Manifest) -> Result<NefBasis> {
    m.cox_ring()?.1.ok_or_else(|| Error::Parse("no nef basis given; use --nef or `nef_basis` in the ring".into()))
}

fn toric_hilb(cli: &Cli) -> Result<Report> {
    let ideal = cli.manifest()?.cox_ideal()?;
    let b = cli.required("degree", &cli.degree)?;
    let h = toric_hilbert_function(&ideal, &b)?;
    Ok(Report::ok(json!({"degree": b, "value": h}), format!("{h}\n")))
}

fn zonotope_cmd(cli: &Cli) -> Result<Report> {
    let m = cli.manifest()?;
    let c = match &m.nef {
        Some(c) => c.clone(),
        None => nef_of(&m)?,
    };
    let d = cli.required("d", &cli.d)?;
    if d.len() != c.rank() {
        return Err(Error::Parse(format!("--d has {} entries, expected {}", d.len(), c.rank())));
    }
    let corners = crate::stable::degree_box(&d, &DegreeVector::from(&d[..]).add(&vec![1; d.len()]));
    let rows: Vec<Value> = corners.iter().map(|b| json!({"b": b.0, "f": f_map(&c, b).0})).collect();
    let pts: Vec<Vec<i64>> = zonotope(&c, &d).into_iter().map(|v| v.0).collect();
    let mut text = String::from("b\tf(b)\n");
    for b in &corners {
        text.push_str(&format!("{b}\t{}\n", f_map(&c, b)));
    }
    Ok(Report::ok(json!({"d": d, "corners": rows, "points": pts}), text))
}

fn toric_verify(cli: &Cli) -> Result<Report> {
    let m = cli.manifest()?;
    let ideal = m.cox_ideal()?;
    let c = nef_of(&m)?;
    let s = c.rank();
    let p = polynomial(&m, s)?;
    let a = cli.anchor(&m, None, s)?;
    let v = verify_toric(&ideal, &p, &c, &a, &cli.options(&m))?;
    let (mut j, vt) = verdict_parts(&v.verdict);
    let slices: Vec<Value> = v
        .slices
        .iter()
        .map(|t| json!({"b": t.degree.0, "f": t.target_degree.0, "images": t.images, "target": t.target_size, "surjective": t.surjective, "surviving": t.surviving}))
        .collect();
    j["anchor"] = json!(a);
    j["companion_blocks"] = json!(v.companion.ring.blocks());
    j["pulled_back"] = poly_json(&v.pulled_back);
    j["point"] = v.point.as_ref().map_or(Value::Null, point_json);
    j["slices"] = json!(slices);
    let mut text = format!("companion blocks {:?}\nf#P = {}\n", v.companion.ring.blocks(), v.pulled_back);
    text.push_str(&v.point.as_ref().map(point_text).unwrap_or_default());
    for t in &v.slices {
        text.push_str(&format!("tau{} onto R{}: {}/{} monomials\n", t.degree, t.target_degree, t.images, t.target_size));
    }
    text.push_str(&vt);
    Ok(Report { code: if v.verdict.confirmed() { 0 } else { 1 }, json: j, text })
}
