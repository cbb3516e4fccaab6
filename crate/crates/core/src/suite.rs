//! Verification runs and exports.
//!
//! Every check is a [`Claim`]: a list of residual polynomials that must
//! vanish. Exact mode tests them structurally; pit mode evaluates them at
//! seeded random integer points.

use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::str::FromStr;
use std::time::{Duration, Instant};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::claim::Claim;
use crate::dubrovin::{generate_relations, verify_relations_vanish, JacobiMap, XRing};
use crate::exactpoly::{Poly, PolyMatrix, Rational, Var};
use crate::genus_fields::{
    bracket_table, build_genus, field_matrix, solve_genus2_normalization, verify_classical_tables,
    verify_field_determinant, verify_field_determinant_factored, verify_grading, verify_jacobi,
    verify_projectability, verify_table, GenusBuild,
};
use crate::lambda_space::{
    bracket_coefficients, commutator_matrix, commutator_pairs, verify_commutator_matrix,
    verify_parameter_fields, CurveModel,
};

pub const SCHEMA_VERSION: &str = "1";

/// Caps the worker pool; unset or invalid means one worker per core.
pub const THREADS_ENV: &str = "HYPERDERIV_THREADS";

#[derive(Debug, Clone, thiserror::Error, PartialEq)]
pub enum SuiteError {
    #[error("genus {0} is not supported (1, 2 or 3)")]
    Genus(u32),
    #[error("sample count must be at least 1")]
    NoSamples,
    #[error("coordinate bound {bound} is below 2 * {degree}, twice the largest residual degree")]
    BoundTooSmall { bound: u64, degree: u32 },
    #[error("unknown {kind} {value:?}")]
    Selector { kind: &'static str, value: String },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Mode {
    Exact,
    Pit,
}

impl FromStr for Mode {
    type Err = SuiteError;
    fn from_str(s: &str) -> Result<Self, SuiteError> {
        match s {
            "exact" => Ok(Mode::Exact),
            "pit" => Ok(Mode::Pit),
            _ => Err(SuiteError::Selector { kind: "mode", value: s.into() }),
        }
    }
}

impl fmt::Display for Mode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Mode::Exact => "exact",
            Mode::Pit => "pit",
        })
    }
}

/// Random evaluation settings. A residual of total degree `d` that is not
/// identically zero vanishes at a uniform point of `[-B, B]^n` with
/// probability at most `d / (2B + 1)`, so each extra sample multiplies the
/// false-pass odds by that factor.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct PitConfig {
    pub sample_count: u32,
    pub coordinate_bound: u64,
    pub seed: u64,
}

impl PitConfig {
    pub fn new(sample_count: u32, coordinate_bound: u64, seed: u64) -> Result<Self, SuiteError> {
        if sample_count == 0 {
            return Err(SuiteError::NoSamples);
        }
        if coordinate_bound < 2 {
            return Err(SuiteError::BoundTooSmall { bound: coordinate_bound, degree: 1 });
        }
        Ok(PitConfig { sample_count, coordinate_bound, seed })
    }

    fn check_degree(&self, degree: u32) -> Result<(), SuiteError> {
        if self.coordinate_bound < 2 * degree as u64 {
            return Err(SuiteError::BoundTooSmall { bound: self.coordinate_bound, degree });
        }
        Ok(())
    }
}

impl Default for PitConfig {
    fn default() -> Self {
        PitConfig { sample_count: 3, coordinate_bound: 1 << 20, seed: 0 }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
}

#[derive(Debug, Clone, Serialize)]
pub struct Entry {
    pub id: String,
    pub anchor: String,
    pub status: Status,
    /// Nonzero residuals (exact mode) or the failing evaluations (pit mode).
    #[serde(skip_serializing_if = "Option::is_none")]
    pub residual: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub detail: Option<String>,
    /// Residual polynomials tested.
    pub checked: usize,
    /// Time of the task that produced the entry plus its own zero test.
    #[serde(serialize_with = "millis")]
    pub wall_time: Duration,
}

fn millis<S: serde::Serializer>(d: &Duration, s: S) -> Result<S::Ok, S::Error> {
    s.serialize_f64((d.as_secs_f64() * 1e6).round() / 1e3)
}

#[derive(Debug, Clone, Serialize)]
pub struct VerificationReport {
    pub schema_version: &'static str,
    pub genus: u32,
    pub mode: Mode,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub pit: Option<PitConfig>,
    pub entries: Vec<Entry>,
}

impl VerificationReport {
    pub fn passed(&self) -> bool {
        self.entries.iter().all(|e| e.status == Status::Pass)
    }

    pub fn failures(&self) -> impl Iterator<Item = &Entry> {
        self.entries.iter().filter(|e| e.status == Status::Fail)
    }

    pub fn entry(&self, id: &str) -> Option<&Entry> {
        self.entries.iter().find(|e| e.id == id)
    }

    pub fn to_text(&self) -> String {
        let mut out = format!("genus {} ({} mode)\n", self.genus, self.mode);
        for e in &self.entries {
            let tag = match e.status {
                Status::Pass => "PASS",
                Status::Fail => "FAIL",
            };
            out.push_str(&format!("  {tag} {:<40} {:>9.1} ms  {}\n", e.id, e.wall_time.as_secs_f64() * 1e3, e.anchor));
            if let Some(d) = &e.detail {
                out.push_str(&format!("       {d}\n"));
            }
            if let Some(r) = &e.residual {
                for line in r.lines().take(8) {
                    out.push_str(&format!("       {}\n", truncate(line, 200)));
                }
            }
        }
        let failed = self.failures().count();
        out.push_str(&format!("  {} passed, {failed} failed\n", self.entries.len() - failed));
        out
    }
}

fn truncate(s: &str, n: usize) -> String {
    if s.chars().count() <= n {
        s.to_string()
    } else {
        format!("{}...", s.chars().take(n).collect::<String>())
    }
}

type Task<'a> = Box<dyn Fn() -> Vec<Claim> + Send + Sync + 'a>;

/// The checks of one genus. `build_slot` receives the index of the task
/// that reports the construction claims.
fn tasks_for<'a>(genus: u32, build: &'a Result<GenusBuild, String>, build_slot: &mut usize) -> Vec<Task<'a>> {
    let mut tasks: Vec<Task<'_>> = Vec::new();
    tasks.push(Box::new(move || {
        let model = CurveModel::new(genus).expect("genus checked");
        let mut claims = verify_parameter_fields(&model).claims;
        if genus == 1 {
            let mut c = Claim::new("g1_discriminant", "Res(f, f') = 4 l4^3 + 27 l6^2");
            c.expect_eq("R", &model.discriminant(), &crate::exactpoly::poly("4*l4^3 + 27*l6^2"));
            claims.push(c);
        }
        claims
    }));
    if genus == 3 {
        tasks.push(Box::new(|| {
            let model = CurveModel::new(3).expect("genus 3");
            let m = commutator_matrix(&model).expect("genus 3");
            let mut claims = verify_commutator_matrix(&model, &m);
            let fields = model.fields();
            let mut c = Claim::new("M_from_fields", "structure matrix recovered from the fields alone");
            for (row, (i, j)) in commutator_pairs(3).into_iter().enumerate() {
                let found = bracket_coefficients(&model, &fields[i as usize / 2], &fields[j as usize / 2]);
                for (k, p) in found.iter().enumerate() {
                    c.expect_eq(format!("row {} col {k}", row + 1), p, m.get(row, k));
                }
            }
            claims.push(c);
            claims
        }));
    }
    tasks.push(Box::new(move || {
        let ring = XRing::new(genus);
        let rels = generate_relations(&ring);
        let mut count = Claim::new(format!("g{genus}_relation_count"), "g(g+3)/2 defining relations");
        count.push(
            "count",
            Poly::int(rels.len() as i64 - (genus * (genus + 3) / 2) as i64),
        );
        let vanish = match JacobiMap::for_genus(genus) {
            Ok(jm) => verify_relations_vanish(&format!("g{genus}_relations_vanish"), &rels, &jm),
            Err(e) => Claim::fail(format!("g{genus}_relations_vanish"), "relations vanish on the eliminated map", e.to_string()),
        };
        vec![count, vanish]
    }));

    let b = match build {
        Ok(b) => b,
        Err(e) => {
            let e = e.clone();
            tasks.push(Box::new(move || vec![Claim::fail(format!("g{genus}_fields"), "lifted fields", e.clone())]));
            return tasks;
        }
    };
    tasks.push(Box::new(move || b.claims.clone()));
    *build_slot = tasks.len() - 1;
    tasks.push(Box::new(move || verify_projectability(&b.ctx, &b.catalog)));
    tasks.push(Box::new(move || {
        let zero = b.catalog.with_params_zero();
        if genus == 3 {
            vec![verify_field_determinant_factored(&b.ctx, &zero)]
        } else {
            let mut f = verify_field_determinant_factored(&b.ctx, &zero);
            f.id = format!("g{genus}_field_det_factored");
            vec![verify_field_determinant(&b.ctx, &zero), f]
        }
    }));
    tasks.push(Box::new(move || vec![verify_grading(&b.catalog)]));
    tasks.push(Box::new(move || match bracket_table(b) {
        Ok(t) => verify_table(&format!("g{genus}_bracket"), &b.catalog, &t),
        Err(e) => vec![Claim::fail(format!("g{genus}_bracket"), "commutator table", e.to_string())],
    }));
    tasks.push(Box::new(move || verify_classical_tables(b)));
    if genus == 2 {
        tasks.push(Box::new(move || vec![normalization_claim(b)]));
    }
    tasks.push(Box::new(move || vec![verify_jacobi(&b.catalog)]));
    tasks
}

fn normalization_claim(b: &GenusBuild) -> Claim {
    let anchor = "prescribed brackets with L1 fix alpha = beta = gamma1 = gamma2 = 0";
    match solve_genus2_normalization(b) {
        Ok(sol) => {
            let mut c = Claim::new("g2_normalization", anchor).with_detail(
                sol.values
                    .iter()
                    .map(|(v, q)| format!("{v} = {q}"))
                    .collect::<Vec<_>>()
                    .join(", "),
            );
            if !sol.unique {
                c.push("solution is not unique", Poly::one());
            }
            for (v, q) in &sol.values {
                c.push(format!("{v}"), Poly::constant(q.clone()));
            }
            c
        }
        Err(e) => Claim::fail("g2_normalization", anchor, e.to_string()),
    }
}

fn pool() -> rayon::ThreadPool {
    let n = std::env::var(THREADS_ENV)
        .ok()
        .and_then(|s| s.parse::<usize>().ok())
        .filter(|&n| n > 0)
        .unwrap_or(0);
    rayon::ThreadPoolBuilder::new()
        .num_threads(n)
        .build()
        .expect("thread pool")
}

/// Runs every check for one genus.
pub fn run_suite(genus: u32, mode: Mode, pit: PitConfig) -> Result<VerificationReport, SuiteError> {
    if !(1..=3).contains(&genus) {
        return Err(SuiteError::Genus(genus));
    }
    use rayon::prelude::*;
    pool().install(|| {
        let start = Instant::now();
        let build = build_genus(genus).map_err(|e| e.to_string());
        let build_time = start.elapsed();
        let mut build_slot = usize::MAX;
        let tasks = tasks_for(genus, &build, &mut build_slot);
        let produced: Vec<(Vec<Claim>, Duration)> = tasks
            .par_iter()
            .enumerate()
            .map(|(i, t)| {
                let start = Instant::now();
                let claims = t();
                let extra = if i == build_slot { build_time } else { Duration::ZERO };
                (claims, start.elapsed() + extra)
            })
            .collect();
        if mode == Mode::Pit {
            let degree = produced.iter().flat_map(|(cs, _)| cs).map(Claim::max_degree).max().unwrap_or(0);
            pit.check_degree(degree)?;
        }
        let mut entries: Vec<Entry> = produced
            .into_par_iter()
            .flat_map_iter(|(claims, elapsed)| claims.into_iter().map(move |c| (c, elapsed)))
            .map(|(c, elapsed)| judge(c, elapsed, mode, &pit))
            .collect();
        entries.sort_by(|a, b| a.id.cmp(&b.id));
        Ok(VerificationReport {
            schema_version: SCHEMA_VERSION,
            genus,
            mode,
            pit: (mode == Mode::Pit).then_some(pit),
            entries,
        })
    })
}

fn judge(c: Claim, elapsed: Duration, mode: Mode, pit: &PitConfig) -> Entry {
    let start = Instant::now();
    let failure = match mode {
        Mode::Exact => c.witness(),
        Mode::Pit => pit_witness(&c, pit),
    };
    Entry {
        status: if failure.is_none() { Status::Pass } else { Status::Fail },
        residual: failure,
        checked: c.residuals.len(),
        wall_time: elapsed + start.elapsed(),
        id: c.id,
        anchor: c.anchor,
        detail: c.detail,
    }
}

fn claim_rng(seed: u64, id: &str) -> ChaCha8Rng {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    // one stream per claim, so results do not depend on evaluation order
    rng.set_stream(id.bytes().fold(0xcbf2_9ce4_8422_2325u64, |h, b| (h ^ b as u64).wrapping_mul(0x100_0000_01b3)));
    rng
}

/// Evaluates every residual at `sample_count` shared random points.
pub fn pit_witness(c: &Claim, cfg: &PitConfig) -> Option<String> {
    let mut vars: Vec<Var> = c.residuals.iter().flat_map(|(_, p)| p.vars()).collect();
    vars.sort();
    vars.dedup();
    let mut rng = claim_rng(cfg.seed, &c.id);
    let b = cfg.coordinate_bound.min(i64::MAX as u64) as i64;
    let mut lines = Vec::new();
    for _ in 0..cfg.sample_count {
        let point: HashMap<Var, Rational> = vars
            .iter()
            .map(|v| (*v, Rational::from_integer(rng.random_range(-b..=b).into())))
            .collect();
        for (label, p) in &c.residuals {
            let value = p.evaluate(&point).expect("point covers every variable");
            if value != Rational::from_integer(0.into()) {
                let at: BTreeMap<String, String> = point.iter().map(|(v, q)| (v.to_string(), q.to_string())).collect();
                lines.push(format!("{label}: {value} at {at:?}"));
            }
        }
        if !lines.is_empty() {
            break;
        }
    }
    (!lines.is_empty()).then(|| lines.join("\n"))
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ExportKind {
    Fields,
    Map,
    Brackets,
    Matrices,
}

impl FromStr for ExportKind {
    type Err = SuiteError;
    fn from_str(s: &str) -> Result<Self, SuiteError> {
        match s {
            "fields" => Ok(ExportKind::Fields),
            "map" => Ok(ExportKind::Map),
            "brackets" => Ok(ExportKind::Brackets),
            "matrices" => Ok(ExportKind::Matrices),
            _ => Err(SuiteError::Selector { kind: "export selector", value: s.into() }),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Format {
    Json,
    Latex,
}

impl FromStr for Format {
    type Err = SuiteError;
    fn from_str(s: &str) -> Result<Self, SuiteError> {
        match s {
            "json" => Ok(Format::Json),
            "latex" => Ok(Format::Latex),
            _ => Err(SuiteError::Selector { kind: "format", value: s.into() }),
        }
    }
}

fn matrix_rows(m: &PolyMatrix) -> Vec<Vec<String>> {
    (0..m.rows()).map(|i| m.row(i).iter().map(|p| p.to_string()).collect()).collect()
}

fn latex_matrix(m: &PolyMatrix) -> String {
    let rows: Vec<String> = (0..m.rows())
        .map(|i| m.row(i).iter().map(|p| p.to_latex()).collect::<Vec<_>>().join(" & "))
        .collect();
    format!("\\begin{{pmatrix}}\n{}\n\\end{{pmatrix}}", rows.join(" \\\\\n"))
}

fn field_latex_name(name: &str) -> String {
    format!("\\mathcal{{L}}_{{{}}}", &name[1..])
}

/// A deterministic document describing one family of objects.
pub fn export(what: ExportKind, genus: u32, format: Format) -> Result<String, SuiteError> {
    if !(1..=3).contains(&genus) {
        return Err(SuiteError::Genus(genus));
    }
    let build = || build_genus(genus).expect("genus in range builds");
    let model = CurveModel::new(genus).expect("genus in range");
    let doc = match (what, format) {
        (ExportKind::Fields, Format::Json) => {
            let b = build();
            serde_json::to_string_pretty(&serde_json::json!({
                "genus": genus,
                "params": b.catalog.params.iter().map(|v| v.to_string()).collect::<Vec<_>>(),
                "fields": b.catalog.fields,
                "aux": b.ctx.aux.iter().map(|(k, v)| (k.clone(), v.to_string())).collect::<BTreeMap<_, _>>(),
            }))
        }
        (ExportKind::Fields, Format::Latex) => {
            let b = build();
            let mut lines: Vec<String> = b
                .catalog
                .fields
                .iter()
                .map(|f| format!("{} &= {}", field_latex_name(&f.name), f.to_latex()))
                .collect();
            lines.extend(b.ctx.aux.iter().map(|(k, v)| format!("{} &= {}", crate::exactpoly::latex_var(k), v.to_latex())));
            Ok(align(&lines))
        }
        (ExportKind::Map, Format::Json) => {
            let b = build();
            serde_json::to_string_pretty(&serde_json::json!({
                "genus": genus,
                "map": b.ctx.map,
                "w": b.ctx.ring.w_vars().iter().map(|v| (v.to_string(), b.ctx.jm.resolve(&Poly::var(*v)).to_string())).collect::<BTreeMap<_, _>>(),
            }))
        }
        (ExportKind::Map, Format::Latex) => {
            let b = build();
            let lines: Vec<String> = b
                .ctx
                .map
                .components()
                .iter()
                .map(|(v, p)| format!("{} &= {}", crate::exactpoly::latex_var(&v.name()), p.to_latex()))
                .collect();
            Ok(align(&lines))
        }
        (ExportKind::Brackets, f) => {
            let b = build();
            let table = bracket_table(&b).map_err(|e| SuiteError::Selector { kind: "table", value: e.to_string() })?;
            let order: Vec<String> = b.catalog.fields.iter().map(|f| f.name.clone()).collect();
            match f {
                Format::Json => {
                    let rows: Vec<serde_json::Value> = table
                        .iter()
                        .map(|e| {
                            serde_json::json!({
                                "bracket": e.label(),
                                "terms": e.collected(&order).iter().map(|(c, n)| (n.clone(), c.to_string())).collect::<Vec<_>>(),
                            })
                        })
                        .collect();
                    serde_json::to_string_pretty(&serde_json::json!({ "genus": genus, "brackets": rows }))
                }
                Format::Latex => {
                    let lines: Vec<String> = table
                        .iter()
                        .map(|e| {
                            let rhs: Vec<String> = e
                                .collected(&order)
                                .iter()
                                .map(|(c, n)| {
                                    let c = if *c == Poly::one() {
                                        String::new()
                                    } else if *c == -Poly::one() {
                                        "-".into()
                                    } else if c.len() > 1 {
                                        format!("\\left({}\\right)\\,", c.to_latex())
                                    } else {
                                        format!("{}\\,", c.to_latex())
                                    };
                                    format!("{c}{}", field_latex_name(n))
                                })
                                .collect();
                            format!(
                                "[{}, {}] &= {}",
                                field_latex_name(&e.left),
                                field_latex_name(&e.right),
                                signed_sum(&rhs)
                            )
                        })
                        .collect();
                    Ok(align(&lines))
                }
            }
        }
        (ExportKind::Matrices, f) => {
            let t = model.t_matrix();
            let b = build();
            let rows: Vec<&crate::derivation::Derivation> = b.catalog.fields.iter().collect();
            let lifted = field_matrix(&b.ctx, &rows);
            let m = (genus == 3).then(|| commutator_matrix(&model).expect("genus 3"));
            match f {
                Format::Json => {
                    let mut doc = serde_json::json!({
                        "genus": genus,
                        "T": matrix_rows(&t),
                        "lifted": {
                            "rows": b.catalog.fields.iter().map(|f| f.name.clone()).collect::<Vec<_>>(),
                            "columns": b.ctx.ring.x_vars().iter().map(|v| v.to_string()).collect::<Vec<_>>(),
                            "entries": matrix_rows(&lifted),
                        },
                    });
                    if let Some(m) = &m {
                        doc["M"] = serde_json::json!(matrix_rows(m));
                    }
                    serde_json::to_string_pretty(&doc)
                }
                Format::Latex => {
                    let mut out = format!("T = {}\n", latex_matrix(&t));
                    out.push_str(&format!("\\mathcal{{T}} = {}\n", latex_matrix(&lifted)));
                    if let Some(m) = &m {
                        out.push_str(&format!("\\mathcal{{M}} = {}\n", latex_matrix(m)));
                    }
                    Ok(out)
                }
            }
        }
    };
    Ok(doc.expect("export documents serialize"))
}

/// Joins terms with `+`, folding a leading minus into the operator.
fn signed_sum(terms: &[String]) -> String {
    let mut out = String::new();
    for (i, t) in terms.iter().enumerate() {
        match (i, t.strip_prefix('-')) {
            (0, _) => out.push_str(t),
            (_, Some(rest)) => out.push_str(&format!(" - {rest}")),
            (_, None) => out.push_str(&format!(" + {t}")),
        }
    }
    if out.is_empty() {
        out.push('0');
    }
    out
}

fn align(lines: &[String]) -> String {
    format!("\\begin{{align*}}\n{}\n\\end{{align*}}\n", lines.join(" \\\\\n"))
}
