//! One function per subcommand. Each returns a fully rendered [`Report`];
//! the caller decides where it goes.
//!
//! Per-genus (or per-`m`) work fans out on a thread pool, but results are
//! collected in parameter order before rendering, so output never depends
//! on scheduling.

use std::fmt::Write;

use motivic_core::dsl::{self, EvalError, MotiveExpr, ParseError};
use motivic_core::formulas::{
    moduli_motive_delbano, sym_power_curve, symmetric_power_decomposition, ProofChain,
};
use motivic_core::realization::{
    atiyah_bott_oracle, block_decomposition_report, hodge_polynomial, key_identity_lhs,
    key_identity_rhs, macdonald_oracle, poincare_polynomial, verify_key_identity, BlockReport,
};
use motivic_core::{Genus, MotiveClass};
use rayon::prelude::*;
use serde::Serialize;
use thiserror::Error;

use crate::config::{Format, RunConfig};
use crate::json::{self, BlockReportJson};
use crate::render;

/// Process exit status; the numeric values are part of the interface.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Status {
    Success = 0,
    Failed = 1,
    Usage = 2,
    Evaluation = 3,
}

impl Status {
    pub fn code(self) -> i32 {
        self as i32
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Report {
    pub body: String,
    pub status: Status,
    /// Lines for the error stream.
    pub diagnostics: Vec<String>,
}

impl Report {
    fn ok(body: String) -> Self {
        Report {
            body,
            status: Status::Success,
            diagnostics: Vec::new(),
        }
    }
}

#[derive(Debug, Error)]
pub enum CommandError {
    #[error(transparent)]
    Parse(#[from] ParseError),
    #[error("g={genus}: {source}")]
    Eval { genus: u32, source: EvalError },
}

impl CommandError {
    pub fn status(&self) -> Status {
        match self {
            CommandError::Parse(_) => Status::Usage,
            CommandError::Eval { .. } => Status::Evaluation,
        }
    }
}

/// Maps `f` over `items` on a pool sized by `--jobs`, keeping input order.
fn par_map<T, R, F>(cfg: &RunConfig, items: &[T], f: F) -> Vec<R>
where
    T: Sync,
    R: Send,
    F: Fn(&T) -> R + Sync + Send,
{
    if cfg.jobs == Some(1) {
        return items.iter().map(f).collect();
    }
    rayon::ThreadPoolBuilder::new()
        .num_threads(cfg.jobs.unwrap_or(0))
        // Evaluation recurses on the expression tree.
        .stack_size(8 << 20)
        .build()
        .expect("thread pool")
        .install(|| items.par_iter().map(f).collect())
}

fn evaluate_all(
    cfg: &RunConfig,
    expr: &MotiveExpr,
) -> Result<Vec<(Genus, MotiveClass)>, CommandError> {
    let genera = cfg.genera();
    par_map(cfg, &genera, |&g| {
        dsl::evaluate(expr, g)
            .map(|m| (g, m))
            .map_err(|source| CommandError::Eval {
                genus: g.get(),
                source,
            })
    })
    .into_iter()
    .collect()
}

fn csv_body(header: &[&str], rows: impl IntoIterator<Item = Vec<String>>) -> String {
    let mut w = csv::Writer::from_writer(Vec::new());
    w.write_record(header).expect("in-memory write");
    for row in rows {
        w.write_record(&row).expect("in-memory write");
    }
    String::from_utf8(w.into_inner().expect("in-memory flush")).expect("UTF-8 input")
}

fn json_line<T: Serialize>(value: &T) -> String {
    let mut s = serde_json::to_string(value).expect("plain data serializes");
    s.push('\n');
    s
}

/// One text line per genus, prefixed with `g=N: ` only for ranges.
fn per_genus_text<T>(cfg: &RunConfig, items: &[(Genus, T)], f: impl Fn(&T) -> String) -> String {
    let mut out = String::new();
    for (g, item) in items {
        if !cfg.single_genus() {
            let _ = write!(out, "g={g}: ");
        }
        out.push_str(&f(item));
        out.push('\n');
    }
    out
}

pub fn eval(source: &str, cfg: &RunConfig) -> Result<Report, CommandError> {
    let expr = dsl::parse(source)?;
    let results = evaluate_all(cfg, &expr)?;
    let body = match cfg.format {
        Format::Json => results
            .iter()
            .map(|(_, m)| {
                let mut s = json::motive_to_json(m);
                s.push('\n');
                s
            })
            .collect(),
        Format::Text => per_genus_text(cfg, &results, |m| m.to_string()),
        Format::Csv => csv_body(
            &["genus", "lambda", "lefschetz", "mult"],
            results.iter().flat_map(|(g, m)| {
                m.terms()
                    .map(|(k, v)| {
                        vec![
                            g.to_string(),
                            k.lambda_index.to_string(),
                            k.lefschetz_power.to_string(),
                            v.to_string(),
                        ]
                    })
                    .collect::<Vec<_>>()
            }),
        ),
    };
    Ok(Report::ok(body))
}

#[derive(Debug, Serialize)]
struct TermDiffJson {
    lambda: u32,
    lefschetz: u32,
    left: String,
    right: String,
}

#[derive(Debug, Serialize)]
struct GenusDiffJson {
    genus: u32,
    equal: bool,
    diff: Vec<TermDiffJson>,
}

#[derive(Debug, Serialize)]
struct EqualJson {
    equal: bool,
    genera: Vec<GenusDiffJson>,
}

pub fn equal(left: &str, right: &str, cfg: &RunConfig) -> Result<Report, CommandError> {
    let (l, r) = (dsl::parse(left)?, dsl::parse(right)?);
    let lv = evaluate_all(cfg, &l)?;
    let rv = evaluate_all(cfg, &r)?;
    let genera: Vec<GenusDiffJson> = lv
        .iter()
        .zip(&rv)
        .map(|((g, a), (_, b))| {
            let diff: Vec<TermDiffJson> = a
                .diff(b)
                .map(|(k, x, y)| TermDiffJson {
                    lambda: k.lambda_index,
                    lefschetz: k.lefschetz_power,
                    left: x.to_string(),
                    right: y.to_string(),
                })
                .collect();
            GenusDiffJson {
                genus: g.get(),
                equal: diff.is_empty(),
                diff,
            }
        })
        .collect();
    let all_equal = genera.iter().all(|g| g.equal);
    let body = match cfg.format {
        Format::Json => json_line(&EqualJson {
            equal: all_equal,
            genera,
        }),
        Format::Text if all_equal => "EQUAL\n".to_string(),
        Format::Text => {
            let mut out = String::from("NOT EQUAL\n");
            for g in genera.iter().filter(|g| !g.equal) {
                let _ = writeln!(out, "g={}:", g.genus);
                for d in &g.diff {
                    let key = motivic_core::BasisKey::new(d.lambda, d.lefschetz);
                    let _ = writeln!(out, "  {key}: {} vs {}", d.left, d.right);
                }
            }
            out
        }
        Format::Csv => csv_body(
            &["genus", "equal", "lambda", "lefschetz", "left", "right"],
            genera.iter().flat_map(|g| {
                if g.equal {
                    vec![vec![
                        g.genus.to_string(),
                        "true".into(),
                        String::new(),
                        String::new(),
                        String::new(),
                        String::new(),
                    ]]
                } else {
                    g.diff
                        .iter()
                        .map(|d| {
                            vec![
                                g.genus.to_string(),
                                "false".into(),
                                d.lambda.to_string(),
                                d.lefschetz.to_string(),
                                d.left.clone(),
                                d.right.clone(),
                            ]
                        })
                        .collect()
                }
            }),
        ),
    };
    Ok(Report {
        body,
        status: if all_equal {
            Status::Success
        } else {
            Status::Failed
        },
        diagnostics: Vec::new(),
    })
}

/// The four independent checks run for each genus.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Check {
    MainEquality,
    ProofChain,
    AtiyahBott,
    Macdonald,
}

impl Check {
    fn name(self) -> &'static str {
        match self {
            Check::MainEquality => "main-equality",
            Check::ProofChain => "proof-chain",
            Check::AtiyahBott => "atiyah-bott",
            Check::Macdonald => "macdonald",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Failure {
    pub check: Check,
    /// `i` for the proof chain, `n` for Macdonald.
    pub index: Option<u32>,
    #[serde(skip)]
    pub detail: String,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GenusVerdict {
    pub genus: u32,
    pub failures: Vec<Failure>,
}

impl GenusVerdict {
    fn passed(&self, check: Check) -> bool {
        self.failures.iter().all(|f| f.check != check)
    }
}

/// Runs all four checks at one genus. `far_shift` perturbs the
/// symmetric-power side (zero for the real theorem).
pub fn verify_genus(genus: Genus, far_shift: u32) -> GenusVerdict {
    let mut failures = Vec::new();
    let delbano = moduli_motive_delbano(genus);
    let conjectural = symmetric_power_decomposition(genus, far_shift);

    if conjectural != delbano {
        let first = conjectural
            .diff(&delbano)
            .next()
            .map(|(k, l, r)| format!("first difference at {k}: {l} vs {r}"))
            .unwrap_or_default();
        failures.push(Failure {
            check: Check::MainEquality,
            index: None,
            detail: first,
        });
    }

    let unshifted = symmetric_power_decomposition(genus, 0);
    if let Some(chain) = (0..=genus.get())
        .map(|i| ProofChain::from_sides(i, &unshifted, &delbano))
        .find(|c| !c.holds())
    {
        let (a, b) = chain.first_break().expect("chain fails");
        failures.push(Failure {
            check: Check::ProofChain,
            index: Some(chain.lambda_index),
            detail: format!("\"{}\" differs from \"{}\"", a.label, b.label),
        });
    }

    let poincare = poincare_polynomial(&delbano);
    match atiyah_bott_oracle(genus) {
        Ok(p) if p == poincare => {}
        Ok(p) => failures.push(Failure {
            check: Check::AtiyahBott,
            index: None,
            detail: format!(
                "oracle {} vs motive {}",
                p.display('t'),
                poincare.display('t')
            ),
        }),
        Err(e) => failures.push(Failure {
            check: Check::AtiyahBott,
            index: None,
            detail: e.to_string(),
        }),
    }

    if let Some(n) = (0..=genus.h1_rank())
        .find(|&n| macdonald_oracle(n, genus) != poincare_polynomial(&sym_power_curve(n, genus)))
    {
        failures.push(Failure {
            check: Check::Macdonald,
            index: Some(n),
            detail: format!("C^({n}) disagrees with the generating function"),
        });
    }

    GenusVerdict {
        genus: genus.get(),
        failures,
    }
}

#[derive(Debug, Serialize)]
struct ChecksJson {
    main_equality: &'static str,
    proof_chain: &'static str,
    atiyah_bott: &'static str,
    macdonald: &'static str,
}

#[derive(Debug, Serialize)]
struct VerdictJson<'a> {
    genus: u32,
    checks: ChecksJson,
    first_failure: Option<&'a Failure>,
}

#[derive(Debug, Serialize)]
struct VerifyJson<'a> {
    genus_min: u32,
    genus_max: u32,
    results: Vec<VerdictJson<'a>>,
    all_pass: bool,
}

fn pass_fail(ok: bool) -> &'static str {
    if ok {
        "pass"
    } else {
        "fail"
    }
}

pub fn verify_theorem(cfg: &RunConfig, far_shift: u32) -> Report {
    let genera = cfg.genera();
    let verdicts = par_map(cfg, &genera, |&g| verify_genus(g, far_shift));
    let first_failure = verdicts
        .iter()
        .find_map(|v| v.failures.first().map(|f| (v.genus, f)));
    let all_pass = first_failure.is_none();

    let body = match cfg.format {
        Format::Json => json_line(&VerifyJson {
            genus_min: cfg.genus_min,
            genus_max: cfg.genus_max,
            results: verdicts
                .iter()
                .map(|v| VerdictJson {
                    genus: v.genus,
                    checks: ChecksJson {
                        main_equality: pass_fail(v.passed(Check::MainEquality)),
                        proof_chain: pass_fail(v.passed(Check::ProofChain)),
                        atiyah_bott: pass_fail(v.passed(Check::AtiyahBott)),
                        macdonald: pass_fail(v.passed(Check::Macdonald)),
                    },
                    first_failure: v.failures.first(),
                })
                .collect(),
            all_pass,
        }),
        Format::Text => {
            let mut out = String::new();
            for v in &verdicts {
                let g = v.genus;
                let _ = writeln!(
                    out,
                    "g={g}: main-equality {}; proof-chain {} (i=0..{g}); atiyah-bott {}; macdonald {} (n=0..{})",
                    pass_fail(v.passed(Check::MainEquality)),
                    pass_fail(v.passed(Check::ProofChain)),
                    pass_fail(v.passed(Check::AtiyahBott)),
                    pass_fail(v.passed(Check::Macdonald)),
                    2 * g
                );
            }
            match first_failure {
                None => {
                    let _ = writeln!(
                        out,
                        "all checks pass for g={}..{}",
                        cfg.genus_min, cfg.genus_max
                    );
                }
                Some((g, f)) => {
                    let _ = writeln!(out, "FAIL at g={g}: {}", f.check.name());
                }
            }
            out
        }
        Format::Csv => csv_body(
            &["genus", "check", "status", "index"],
            verdicts.iter().flat_map(|v| {
                [
                    Check::MainEquality,
                    Check::ProofChain,
                    Check::AtiyahBott,
                    Check::Macdonald,
                ]
                .into_iter()
                .map(|c| {
                    let failure = v.failures.iter().find(|f| f.check == c);
                    vec![
                        v.genus.to_string(),
                        c.name().to_string(),
                        pass_fail(failure.is_none()).to_string(),
                        failure
                            .and_then(|f| f.index)
                            .map(|i| i.to_string())
                            .unwrap_or_default(),
                    ]
                })
                .collect::<Vec<_>>()
            }),
        ),
    };

    let diagnostics = match first_failure {
        None => Vec::new(),
        Some((g, f)) => {
            let at = match (f.check, f.index) {
                (Check::ProofChain, Some(i)) => format!(", i={i}"),
                (Check::Macdonald, Some(n)) => format!(", n={n}"),
                _ => String::new(),
            };
            vec![format!(
                "first failure: g={g}, check {}{at}: {}",
                f.check.name(),
                f.detail
            )]
        }
    };
    Report {
        body,
        status: if all_pass {
            Status::Success
        } else {
            Status::Failed
        },
        diagnostics,
    }
}

#[derive(Debug, Serialize)]
struct IdentityRow {
    m: u32,
    holds: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    lhs: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    rhs: Option<String>,
}

#[derive(Debug, Serialize)]
struct IdentityJson {
    m_min: u32,
    m_max: u32,
    results: Vec<IdentityRow>,
    all_hold: bool,
}

pub fn identity(cfg: &RunConfig) -> Report {
    let ms: Vec<u32> = (cfg.m_min..=cfg.m_max).collect();
    let show_sides = cfg.m_min == cfg.m_max;
    let rows: Vec<IdentityRow> = par_map(cfg, &ms, |&m| {
        // m >= 1 is guaranteed by the validated config.
        let holds = verify_key_identity(m).expect("m >= 1");
        let side = |p: motivic_core::IntPolynomial| p.display('x').to_string();
        IdentityRow {
            m,
            holds,
            lhs: show_sides.then(|| side(key_identity_lhs(m, 0).expect("m >= 1"))),
            rhs: show_sides.then(|| side(key_identity_rhs(m).expect("m >= 1"))),
        }
    });
    let first_failure = rows.iter().find(|r| !r.holds).map(|r| r.m);
    let body = match cfg.format {
        Format::Json => json_line(&IdentityJson {
            m_min: cfg.m_min,
            m_max: cfg.m_max,
            all_hold: first_failure.is_none(),
            results: rows,
        }),
        Format::Text => {
            let mut out = String::new();
            for r in &rows {
                let _ = writeln!(
                    out,
                    "m={}: {}",
                    r.m,
                    if r.holds { "holds" } else { "FAILS" }
                );
                if let (Some(l), Some(rh)) = (&r.lhs, &r.rhs) {
                    let _ = writeln!(out, "  lhs = {l}");
                    let _ = writeln!(out, "  rhs = {rh}");
                }
            }
            match first_failure {
                None => {
                    let _ = writeln!(out, "identity holds for m={}..{}", cfg.m_min, cfg.m_max);
                }
                Some(m) => {
                    let _ = writeln!(out, "FAIL at m={m}");
                }
            }
            out
        }
        Format::Csv => csv_body(
            &["m", "holds"],
            rows.iter()
                .map(|r| vec![r.m.to_string(), r.holds.to_string()]),
        ),
    };
    Report {
        body,
        status: if first_failure.is_none() {
            Status::Success
        } else {
            Status::Failed
        },
        diagnostics: first_failure
            .map(|m| vec![format!("identity fails at m={m}")])
            .unwrap_or_default(),
    }
}

#[derive(Debug, Serialize)]
struct PoincareJson {
    genus: u32,
    poincare: Vec<(u32, String)>,
}

pub fn poincare(source: &str, cfg: &RunConfig) -> Result<Report, CommandError> {
    let expr = dsl::parse(source)?;
    let results: Vec<_> = evaluate_all(cfg, &expr)?
        .into_iter()
        .map(|(g, m)| (g, poincare_polynomial(&m)))
        .collect();
    let body = match cfg.format {
        Format::Json => results
            .iter()
            .map(|(g, p)| {
                json_line(&PoincareJson {
                    genus: g.get(),
                    poincare: json::poly_terms(p),
                })
            })
            .collect(),
        Format::Text => per_genus_text(cfg, &results, |p| p.display('t').to_string()),
        Format::Csv => csv_body(
            &["genus", "degree", "coeff"],
            results.iter().flat_map(|(g, p)| {
                json::poly_terms(p)
                    .into_iter()
                    .map(move |(d, c)| vec![g.to_string(), d.to_string(), c])
            }),
        ),
    };
    Ok(Report::ok(body))
}

#[derive(Debug, Serialize)]
struct HodgeJson {
    genus: u32,
    hodge: Vec<(u32, u32, String)>,
    #[serde(skip_serializing_if = "Option::is_none")]
    diamond: Option<Vec<Vec<String>>>,
}

pub fn hodge(source: &str, cfg: &RunConfig) -> Result<Report, CommandError> {
    let expr = dsl::parse(source)?;
    let results: Vec<_> = evaluate_all(cfg, &expr)?
        .into_iter()
        .map(|(g, m)| (g, hodge_polynomial(&m)))
        .collect();
    let body = match cfg.format {
        Format::Json => results
            .iter()
            .map(|(g, h)| {
                json_line(&HodgeJson {
                    genus: g.get(),
                    hodge: json::hodge_terms(h),
                    diamond: cfg.diamond.then(|| render::diamond_rows(h)),
                })
            })
            .collect(),
        Format::Text if cfg.diamond => {
            let mut out = String::new();
            for (n, (g, h)) in results.iter().enumerate() {
                if !cfg.single_genus() {
                    if n > 0 {
                        out.push('\n');
                    }
                    let _ = writeln!(out, "g={g}:");
                }
                out.push_str(&render::diamond(h));
            }
            out
        }
        Format::Text => per_genus_text(cfg, &results, |h| h.to_string()),
        Format::Csv => csv_body(
            &["genus", "p", "q", "coeff"],
            results.iter().flat_map(|(g, h)| {
                json::hodge_terms(h)
                    .into_iter()
                    .map(move |(p, q, c)| vec![g.to_string(), p.to_string(), q.to_string(), c])
            }),
        ),
    };
    Ok(Report::ok(body))
}

fn report_table(r: &BlockReport) -> String {
    let mut rows: Vec<Vec<String>> = r
        .blocks
        .iter()
        .map(|b| {
            vec![
                b.label(),
                b.sym_power.to_string(),
                b.twist.to_string(),
                b.hodge.to_string(),
            ]
        })
        .collect();
    rows.push(vec![
        "total".into(),
        String::new(),
        String::new(),
        r.total.to_string(),
    ]);
    render::table(&["block", "sym_power", "twist", "hodge"], &rows)
}

pub fn decompose(cfg: &RunConfig) -> Report {
    let genera = cfg.genera();
    let reports = par_map(cfg, &genera, |&g| block_decomposition_report(g));
    let body = match cfg.format {
        Format::Json => reports
            .iter()
            .map(|r| json_line(&BlockReportJson::from(r)))
            .collect(),
        Format::Text => {
            let mut out = String::new();
            for (n, r) in reports.iter().enumerate() {
                if n > 0 {
                    out.push('\n');
                }
                let _ = writeln!(out, "g={}: {} blocks", r.genus, r.blocks.len());
                out.push_str(&report_table(r));
            }
            out
        }
        Format::Csv => csv_body(
            &["genus", "sym_power", "twist", "p", "q", "coeff"],
            reports.iter().flat_map(|r| {
                r.blocks
                    .iter()
                    .flat_map(|b| {
                        json::hodge_terms(&b.hodge)
                            .into_iter()
                            .map(move |(p, q, c)| {
                                vec![
                                    r.genus.to_string(),
                                    b.sym_power.to_string(),
                                    b.twist.to_string(),
                                    p.to_string(),
                                    q.to_string(),
                                    c,
                                ]
                            })
                    })
                    .collect::<Vec<_>>()
            }),
        ),
    };
    Report::ok(body)
}
