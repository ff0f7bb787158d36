//! Command-line front end.
//!
//! Exit codes: 0 pass, 1 a check failed, 2 usage error, 3 invalid input.

use std::collections::BTreeMap;
use std::ffi::OsString;
use std::fmt::Write as _;
use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand, ValueEnum};
use serde::{Deserialize, Serialize};

use crate::amodel;
use crate::error::MirrorError;
use crate::homcat;
use crate::matfac::{basic_objects, build_basic_object, verify_mf};
use crate::mirror_core::{self, Family};
use crate::quiverlab;

pub const EXIT_PASS: i32 = 0;
pub const EXIT_FAIL: i32 = 1;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_INPUT: i32 = 3;

#[derive(Parser, Debug)]
#[command(name = "bhmirror", version, about = "Mirror symmetry checks for two-variable invertible polynomials")]
struct Cli {
    #[command(subcommand)]
    command: Option<Command>,

    /// Flat key = value file with defaults for the flags below
    #[arg(long, global = true)]
    config: Option<PathBuf>,
}

#[derive(Subcommand, Debug, Clone)]
enum Command {
    /// Polynomial data: transpose, weights, Milnor number, grading group, tilting length, FJRW dimension
    Analyze(CommonArgs),
    /// Build every basic object and run the factorisation, Hom, Serre and quiver checks
    Verify(VerifyArgs),
    /// Compare vanishing-cycle intersections with degree-0 Hom dimensions
    Compare(CommonArgs),
    /// Export the quiver with relations
    Export(ExportArgs),
    /// Sweep every family and admissible index with p, q up to --max
    Grid(GridArgs),
}

#[derive(clap::Args, Debug, Clone)]
struct CommonArgs {
    /// loop:p,q, chain:p,q, bp:p,q or an exponent matrix such as [[3,1],[1,3]]
    family: Option<String>,
    #[arg(long)]
    index: Option<u32>,
    #[arg(long)]
    json: bool,
    #[arg(long)]
    dot: Option<PathBuf>,
}

#[derive(clap::Args, Debug, Clone)]
struct VerifyArgs {
    #[command(flatten)]
    common: CommonArgs,
    /// Half-width of the Hom degree window
    #[arg(long)]
    window: Option<i64>,
    /// Inject a known fault; the only value is `demo`
    #[arg(long)]
    corrupt: Option<String>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum, Serialize, Deserialize)]
pub enum ExportFormat {
    Json,
    Dot,
}

#[derive(clap::Args, Debug, Clone)]
struct ExportArgs {
    #[command(flatten)]
    common: CommonArgs,
    #[arg(long, value_enum)]
    format: Option<ExportFormat>,
}

#[derive(clap::Args, Debug, Clone)]
struct GridArgs {
    #[arg(long)]
    max: Option<u32>,
    #[arg(long)]
    json: bool,
}

/// Everything one invocation needs, after merging the config file and the flags.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct RunConfig {
    pub command: String,
    pub family: Option<String>,
    pub index: Option<u32>,
    pub json: bool,
    pub dot: Option<PathBuf>,
    pub window: Option<i64>,
    pub max: Option<u32>,
    pub corrupt: Option<String>,
    pub format: Option<ExportFormat>,
}

impl RunConfig {
    /// Serialise as `key = value` lines, omitting unset keys.
    pub fn to_config_string(&self) -> String {
        let mut s = format!("command = {}\n", self.command);
        let mut line = |k: &str, v: Option<String>| {
            if let Some(v) = v {
                let _ = writeln!(s, "{k} = {v}");
            }
        };
        line("family", self.family.clone());
        line("index", self.index.map(|v| v.to_string()));
        line("json", self.json.then(|| "true".to_string()));
        line("dot", self.dot.as_ref().map(|p| p.display().to_string()));
        line("window", self.window.map(|v| v.to_string()));
        line("max", self.max.map(|v| v.to_string()));
        line("corrupt", self.corrupt.clone());
        line("format", self.format.map(|f| format!("{f:?}").to_lowercase()));
        s
    }

    /// Parse `key = value` lines; blank lines and `#` comments are skipped.
    pub fn from_config_string(text: &str) -> Result<Self, String> {
        let mut kv = BTreeMap::new();
        for (n, raw) in text.lines().enumerate() {
            let line = raw.trim();
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            let (k, v) = line.split_once('=').ok_or_else(|| format!("line {}: expected key = value", n + 1))?;
            kv.insert(k.trim().to_string(), v.trim().to_string());
        }
        let mut cfg = RunConfig::default();
        for (k, v) in kv {
            let bad = || format!("bad value for {k}: {v}");
            match k.as_str() {
                "command" => cfg.command = v,
                "family" => cfg.family = Some(v),
                "index" => cfg.index = Some(v.parse().map_err(|_| bad())?),
                "json" => cfg.json = v.parse().map_err(|_| bad())?,
                "dot" => cfg.dot = Some(PathBuf::from(v)),
                "window" => cfg.window = Some(v.parse().map_err(|_| bad())?),
                "max" => cfg.max = Some(v.parse().map_err(|_| bad())?),
                "corrupt" => cfg.corrupt = Some(v),
                "format" => cfg.format = Some(ExportFormat::from_str(&v, true).map_err(|_| bad())?),
                _ => return Err(format!("unknown key {k}")),
            }
        }
        Ok(cfg)
    }

    fn overlay_common(&mut self, a: &CommonArgs) {
        if a.family.is_some() {
            self.family = a.family.clone();
        }
        if a.index.is_some() {
            self.index = a.index;
        }
        self.json |= a.json;
        if a.dot.is_some() {
            self.dot = a.dot.clone();
        }
    }
}

/// Text written to stdout and stderr plus the exit code.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

impl Outcome {
    fn new(code: i32, stdout: String) -> Self {
        Outcome { code, stdout, stderr: String::new() }
    }

    fn error(code: i32, msg: impl Into<String>) -> Self {
        Outcome { code, stdout: String::new(), stderr: msg.into() + "\n" }
    }
}

fn error_code(e: &MirrorError) -> i32 {
    match e {
        MirrorError::Parse(_) | MirrorError::UnknownFormat(_) => EXIT_USAGE,
        MirrorError::BadIndex { .. } | MirrorError::NotInvertible(_) | MirrorError::UnsupportedCase { .. } => EXIT_INPUT,
        _ => EXIT_FAIL,
    }
}

fn fail(e: MirrorError) -> Outcome {
    Outcome::error(error_code(&e), format!("error: {e}"))
}

/// Parse arguments (program name first) and run the command.
pub fn run<I, T>(args: I) -> Outcome
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_PASS };
            let text = e.render().to_string();
            return if code == EXIT_PASS { Outcome::new(code, text) } else { Outcome::error(code, text.trim_end()) };
        }
    };
    let mut cfg = match &cli.config {
        Some(path) => match std::fs::read_to_string(path) {
            Ok(text) => match RunConfig::from_config_string(&text) {
                Ok(c) => c,
                Err(e) => return Outcome::error(EXIT_USAGE, format!("config {}: {e}", path.display())),
            },
            Err(e) => return Outcome::error(EXIT_USAGE, format!("config {}: {e}", path.display())),
        },
        None => RunConfig::default(),
    };
    match &cli.command {
        Some(Command::Analyze(a)) => {
            cfg.command = "analyze".into();
            cfg.overlay_common(a);
        }
        Some(Command::Compare(a)) => {
            cfg.command = "compare".into();
            cfg.overlay_common(a);
        }
        Some(Command::Verify(v)) => {
            cfg.command = "verify".into();
            cfg.overlay_common(&v.common);
            cfg.window = v.window.or(cfg.window);
            cfg.corrupt = v.corrupt.clone().or(cfg.corrupt);
        }
        Some(Command::Export(x)) => {
            cfg.command = "export".into();
            cfg.overlay_common(&x.common);
            cfg.format = x.format.or(cfg.format);
        }
        Some(Command::Grid(g)) => {
            cfg.command = "grid".into();
            cfg.max = g.max.or(cfg.max);
            cfg.json |= g.json;
        }
        None => {}
    }
    run_config(&cfg)
}

pub fn run_config(cfg: &RunConfig) -> Outcome {
    match cfg.command.as_str() {
        "analyze" => with_family(cfg, run_analyze),
        "verify" => with_family(cfg, run_verify),
        "compare" => with_family(cfg, run_compare),
        "export" => with_family(cfg, run_export),
        "grid" => run_grid(cfg),
        "" => Outcome::error(EXIT_USAGE, "error: no command given (analyze, verify, compare, export, grid)"),
        other => Outcome::error(EXIT_USAGE, format!("error: unknown command {other}")),
    }
}

fn with_family(cfg: &RunConfig, f: fn(&RunConfig, &Family, u32) -> Outcome) -> Outcome {
    let Some(spec) = &cfg.family else {
        return Outcome::error(EXIT_USAGE, "error: missing family, e.g. loop:5,3");
    };
    let poly = match mirror_core::parse_polynomial(spec) {
        Ok(p) => p,
        Err(e) => return fail(e),
    };
    let Some(family) = poly.family() else {
        return Outcome::error(EXIT_INPUT, format!("error: {poly} is not a two-variable loop, chain or Brieskorn–Pham polynomial"));
    };
    let ell = cfg.index.unwrap_or(1);
    if let Err(e) = family.check_index(ell) {
        return fail(e);
    }
    f(cfg, &family, ell)
}

fn write_dot(path: &Path, text: &str, out: &mut String) -> Result<(), Outcome> {
    std::fs::write(path, text).map_err(|e| Outcome::error(EXIT_USAGE, format!("error: cannot write {}: {e}", path.display())))?;
    let _ = writeln!(out, "wrote {}", path.display());
    Ok(())
}

fn json_text(v: &serde_json::Value) -> String {
    serde_json::to_string_pretty(v).expect("json value") + "\n"
}

pub fn analyze_json(family: &Family, ell: u32) -> crate::Result<serde_json::Value> {
    let poly = family.polynomial();
    let transpose = family.transpose_polynomial();
    let ws = mirror_core::weight_system(&poly);
    let sym = mirror_core::symmetry_data(family, ell)?;
    let tilt = mirror_core::tilting_length(family, ell)?;
    let fjrw = mirror_core::fjrw_dimension(&transpose, ell)?;
    let (a, b) = sym.c_coeffs;
    Ok(serde_json::json!({
        "family": family.to_string(),
        "polynomial": poly.to_string(),
        "transpose": transpose.to_string(),
        "ell": ell,
        "d_max": sym.d_max,
        "weights": { "d": ws.d, "h": ws.h, "d0": ws.d0 },
        "milnor_number": mirror_core::milnor_number(&poly)?,
        "milnor_number_transpose": tilt.mu_transpose,
        "grading_group": {
            "relation": format!("{}x⃗ = {}y⃗", sym.group.rel_x, sym.group.rel_y),
            "torsion": sym.torsion_order,
            "c": format!("{a}x⃗ + {b}y⃗"),
            "quotient_order": sym.quotient_order,
        },
        "gorenstein_parameter": sym.alpha.free,
        "tilting_length": tilt.length,
        "fjrw": {
            "total": fjrw.total,
            "sectors": fjrw.sectors.iter().map(|s| serde_json::json!({"k": s.k, "narrow": s.narrow, "dim": s.dim})).collect::<Vec<_>>(),
        },
    }))
}

fn run_analyze(cfg: &RunConfig, family: &Family, ell: u32) -> Outcome {
    let v = match analyze_json(family, ell) {
        Ok(v) => v,
        Err(e) => return fail(e),
    };
    if cfg.json {
        return Outcome::new(EXIT_PASS, json_text(&v));
    }
    let mut s = String::new();
    let _ = writeln!(s, "family              {}  (ℓ = {ell}, d_max = {})", v["family"].as_str().unwrap(), v["d_max"]);
    let _ = writeln!(s, "polynomial          {}", v["polynomial"].as_str().unwrap());
    let _ = writeln!(s, "transpose           {}", v["transpose"].as_str().unwrap());
    let _ = writeln!(s, "weights (d; h)      {}; {}", v["weights"]["d"], v["weights"]["h"]);
    let _ = writeln!(s, "Milnor number       {} (transpose {})", v["milnor_number"], v["milnor_number_transpose"]);
    let g = &v["grading_group"];
    let _ = writeln!(
        s,
        "grading group L     ⟨x⃗, y⃗⟩ / ({}), torsion {}, c⃗ = {}",
        g["relation"].as_str().unwrap(),
        g["torsion"],
        g["c"].as_str().unwrap()
    );
    let _ = writeln!(s, "Gorenstein param.   {}", v["gorenstein_parameter"]);
    let _ = writeln!(s, "tilting length      {}", v["tilting_length"]);
    let sectors: Vec<String> = v["fjrw"]["sectors"]
        .as_array()
        .unwrap()
        .iter()
        .map(|x| format!("ξ^{}:{}", x["k"], x["dim"]))
        .collect();
    let _ = writeln!(s, "FJRW dimension      {} = {}", v["fjrw"]["total"], sectors.join(" + "));
    Outcome::new(EXIT_PASS, s)
}

#[derive(Clone, Debug, Serialize)]
struct Check {
    name: String,
    passed: bool,
    detail: String,
}

fn run_verify(cfg: &RunConfig, family: &Family, ell: u32) -> Outcome {
    let half = cfg.window.unwrap_or(homcat::WINDOW.1).abs();
    let mut checks = Vec::new();
    let objects = match basic_objects(family, ell) {
        Ok(o) => o,
        Err(e) => return fail(e),
    };
    let mut mfs = Vec::new();
    for id in &objects {
        match build_basic_object(family, ell, *id) {
            Ok(k) => mfs.push(k),
            Err(e) => return fail(e),
        }
    }
    match cfg.corrupt.as_deref() {
        None => {}
        Some("demo") => {
            let e = &mut mfs[0].d0[0][0];
            *e = e.add(e);
        }
        Some(other) => return Outcome::error(EXIT_USAGE, format!("error: unknown corruption {other}; use demo")),
    }
    let mut valid = Vec::new();
    for k in &mfs {
        let r = verify_mf(k);
        checks.push(Check { name: format!("mf {}", k.label), passed: r.passed(), detail: r.failures.join("; ") });
        if r.passed() {
            valid.push(k);
        }
    }
    let table = match homcat::assemble_endomorphism_table(family, ell) {
        Ok(t) => t,
        Err(e) => return fail(e),
    };
    checks.push(Check {
        name: "hom concentrated in degree 0".into(),
        passed: table.concentrated_in_degree_zero(),
        detail: String::new(),
    });
    let exceptional = (0..objects.len()).all(|s| table.dim(s, s, 0) == 1);
    checks.push(Check { name: "exceptional objects".into(), passed: exceptional, detail: String::new() });
    // Hom complexes only make sense between genuine factorisations
    let serre_failures: Vec<String> = valid
        .iter()
        .flat_map(|m| valid.iter().map(move |n| (*m, *n)))
        .filter_map(|(m, n)| {
            let alpha = m.group.x() + m.group.y() - m.c;
            let left = homcat::hom_dims(m, n, -half, half);
            let right = homcat::hom_dims(n, &crate::matfac::shift(m, -alpha), -half, half);
            let ok = left.iter().zip(right.iter().rev()).all(|(a, b)| a == b);
            (!ok).then(|| format!("{} → {}", m.label, n.label))
        })
        .collect();
    checks.push(Check { name: "Serre duality".into(), passed: serre_failures.is_empty(), detail: serre_failures.join(", ") });
    match quiverlab::expected_quiver(family, ell) {
        Ok(q) => {
            let r = quiverlab::compare_with_homcat(&q, &table);
            let detail = r
                .dim_mismatches
                .iter()
                .map(|(s, t, a, b)| format!("{s}→{t}: paths {a}, Hom {b}"))
                .collect::<Vec<_>>()
                .join(", ");
            checks.push(Check { name: "quiver with relations".into(), passed: r.passed(), detail });
        }
        Err(e) => return fail(e),
    }
    let passed = checks.iter().all(|c| c.passed);
    let code = if passed { EXIT_PASS } else { EXIT_FAIL };
    if cfg.json {
        let v = serde_json::json!({ "family": family.to_string(), "ell": ell, "passed": passed, "checks": checks });
        return Outcome::new(code, json_text(&v));
    }
    let mut s = format!("verify {family} ℓ = {ell}\n");
    for c in &checks {
        let _ = write!(s, "{} {}", if c.passed { "PASS" } else { "FAIL" }, c.name);
        if !c.detail.is_empty() {
            let _ = write!(s, "  [{}]", c.detail);
        }
        s.push('\n');
    }
    let _ = writeln!(s, "{}", if passed { "all checks passed" } else { "some checks failed" });
    Outcome::new(code, s)
}

fn run_compare(cfg: &RunConfig, family: &Family, ell: u32) -> Outcome {
    let report = match amodel::compare_ab(family, ell) {
        Ok(r) => r,
        Err(MirrorError::UnsupportedCase { reason, reduction: Some(target) }) => {
            let mut s = format!("{family} ℓ = {ell}: {reason}; the A-model reduces to {target}\n");
            let mut sub = RunConfig { command: "compare".into(), ..cfg.clone() };
            let (spec, index) = target.split_once(" --index ").expect("reduction target carries an index");
            sub.family = Some(spec.to_string());
            sub.index = index.parse().ok();
            let inner = run_config(&sub);
            s.push_str(&inner.stdout);
            return Outcome { code: inner.code, stdout: s, stderr: inner.stderr };
        }
        Err(e) => return fail(e),
    };
    let mut s = String::new();
    if let Some(path) = &cfg.dot {
        if let Err(o) = write_dot(path, &amodel::incidence_dot(&report), &mut s) {
            return o;
        }
    }
    let code = if report.passed() { EXIT_PASS } else { EXIT_FAIL };
    if cfg.json {
        s.push_str(&json_text(&report.to_json()));
        return Outcome::new(code, s);
    }
    let _ = writeln!(s, "compare {family} ℓ = {ell}: {} cycles", report.cycles.len());
    let _ = writeln!(s, "order: {}", report.cycles.join(" ≺ "));
    if let Some(r) = &report.regrouping {
        let _ = writeln!(s, "regrouped critical points ({r})");
    }
    let inv = &report.invariants;
    let _ = writeln!(s, "fibre: genus {}, punctures {}, rank H1 {}, χ {}", inv.genus, inv.punctures, inv.rank_h1, inv.euler);
    let _ = writeln!(s, "{:<12} {:<12} {:>5} {:>5}  flags", "a", "b", "A", "B");
    for row in report.pairs.iter().filter(|r| r.count_a > 0 || r.dim_b > 0 || !r.matches) {
        let mut flags = Vec::new();
        if !row.matches {
            flags.push("MISMATCH");
        }
        if row.degenerate_flag {
            flags.push("degenerate");
        }
        let _ = writeln!(s, "{:<12} {:<12} {:>5} {:>5}  {}", row.a, row.b, row.count_a, row.dim_b, flags.join(" "));
    }
    let bad = report.mismatches().len();
    let _ = writeln!(s, "{} of {} ordered pairs match", report.pairs.len() - bad, report.pairs.len());
    Outcome::new(code, s)
}

fn run_export(cfg: &RunConfig, family: &Family, ell: u32) -> Outcome {
    let quiver = match quiverlab::expected_quiver(family, ell) {
        Ok(q) => q,
        Err(e) => return fail(e),
    };
    let mut s = String::new();
    if let Some(path) = &cfg.dot {
        let dot = quiverlab::export(&quiver, "dot").expect("dot export");
        if let Err(o) = write_dot(path, &dot, &mut s) {
            return o;
        }
        return Outcome::new(EXIT_PASS, s);
    }
    let format = match cfg.format {
        Some(ExportFormat::Dot) => "dot",
        Some(ExportFormat::Json) => "json",
        None if cfg.json => "json",
        None => "dot",
    };
    match quiverlab::export(&quiver, format) {
        Ok(text) => Outcome::new(EXIT_PASS, text),
        Err(e) => fail(e),
    }
}

/// One grid cell of the sweep.
#[derive(Clone, Debug, Serialize)]
pub struct GridCell {
    pub family: String,
    pub ell: u32,
    pub objects: usize,
    pub quiver: Option<bool>,
    pub a_equals_b: Option<bool>,
    pub note: String,
}

impl GridCell {
    pub fn passed(&self) -> bool {
        self.quiver != Some(false) && self.a_equals_b != Some(false)
    }
}

pub fn grid_cell(family: &Family, ell: u32) -> GridCell {
    let mut cell = GridCell { family: family.to_string(), ell, objects: 0, quiver: None, a_equals_b: None, note: String::new() };
    match homcat::assemble_endomorphism_table(family, ell) {
        Ok(table) => {
            cell.objects = table.objects.len();
            cell.quiver = quiverlab::expected_quiver(family, ell).ok().map(|q| quiverlab::compare_with_homcat(&q, &table).passed());
        }
        Err(e) => cell.note = e.to_string(),
    }
    match amodel::compare_ab(family, ell) {
        Ok(r) => cell.a_equals_b = Some(r.passed()),
        Err(MirrorError::UnsupportedCase { reason, reduction }) if cell.note.is_empty() => {
            cell.note = match reduction {
                Some(t) => format!("{reason}; reduces to {t}"),
                None => reason,
            }
        }
        Err(_) => {}
    }
    cell
}

fn run_grid(cfg: &RunConfig) -> Outcome {
    use rayon::prelude::*;
    let max = cfg.max.unwrap_or(7);
    let mut points = Vec::new();
    for kind in ["loop", "chain", "bp"] {
        for p in 2..=max {
            for q in 2..=max {
                let f = mirror_core::parse_family(&format!("{kind}:{p},{q}")).expect("grid family");
                points.extend(f.admissible_indices().into_iter().map(|ell| (f, ell)));
            }
        }
    }
    let cells: Vec<GridCell> = points.par_iter().map(|(f, ell)| grid_cell(f, *ell)).collect();
    let passed = cells.iter().all(GridCell::passed);
    let code = if passed { EXIT_PASS } else { EXIT_FAIL };
    if cfg.json {
        return Outcome::new(code, json_text(&serde_json::json!({ "max": max, "passed": passed, "cells": cells })));
    }
    let show = |b: Option<bool>| match b {
        Some(true) => "pass",
        Some(false) => "FAIL",
        None => "-",
    };
    let mut s = String::new();
    for c in &cells {
        let _ = writeln!(s, "{:<12} ℓ={:<2} objects {:>3}  quiver {:<4}  A=B {:<4}  {}", c.family, c.ell, c.objects, show(c.quiver), show(c.a_equals_b), c.note);
    }
    let _ = writeln!(s, "{} cells, {}", cells.len(), if passed { "all passed" } else { "failures present" });
    Outcome::new(code, s)
}

#[cfg(test)]
mod tests;
