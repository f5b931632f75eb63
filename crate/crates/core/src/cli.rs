//! Command-line front end. [`run`] takes the argument list and returns the
//! text to print and the exit code, so the binary is a two-line wrapper.
//!
//! | code | meaning |
//! |------|---------|
//! | 0 | success |
//! | 1 | `verify` found a failing check |
//! | 2 | unreadable or schema-invalid manifest, bad arguments, inapplicable fault |
//! | 3 | manifest violates an invariant |
//! | 4 | comparison outside `d = 1` |

use std::fmt::Write as _;
use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand};
use rayon::prelude::*;
use serde_json::{json, Value};

use crate::cohomology_oracle::{
    distinguishing_invariant, inject_fault, verify_decomposition, Fault, Status,
};
use crate::decompose::{
    compare, double_suspension, stage, suspension_splitting, DecomposeError, Stage,
};
use crate::homotopy_tables::PiQuery;
use crate::ktheory::{k_of_manifold, render_ko};
use crate::manifold::{Manifest, ManifoldInvariants};
use crate::space_expr::Atom;

#[derive(Parser, Debug)]
#[command(
    name = "susp6",
    version,
    about = "Double suspensions of simply connected 6-manifolds"
)]
pub struct Cli {
    /// Emit JSON instead of text.
    #[arg(long, global = true)]
    pub json: bool,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Print the splitting of Σ²M (or ΣM with --single).
    Decompose {
        manifest: Option<PathBuf>,
        #[arg(long)]
        single: bool,
        #[arg(long)]
        trace: bool,
        /// Run on every *.json file in a directory.
        #[arg(long, conflicts_with = "manifest")]
        batch: Option<PathBuf>,
    },
    /// K and KO groups of M.
    K {
        manifest: Option<PathBuf>,
        #[arg(long, conflicts_with = "manifest")]
        batch: Option<PathBuf>,
    },
    /// Decide whether two d = 1 manifolds have equivalent double suspensions.
    Compare { a: PathBuf, b: PathBuf },
    /// Check the splitting against homology, operations and K-theory.
    Verify {
        manifest: Option<PathBuf>,
        #[arg(long, conflicts_with = "manifest")]
        batch: Option<PathBuf>,
        /// Corrupt the splitting first: swap-branch, drop-moore, flip-lambda, swap-cp3-v3.
        #[arg(long)]
        inject_fault: Option<String>,
    },
    /// Look up a homotopy group, e.g. `pi 'P^5(7)' 7`.
    Pi { atom: String, k: u32 },
    /// Show the derivation stages.
    Trace {
        manifest: Option<PathBuf>,
        /// One of M3, M5, SigmaM5, Sigma2V.
        #[arg(long)]
        stage: Option<String>,
        #[arg(long, conflicts_with = "manifest")]
        batch: Option<PathBuf>,
    },
}

/// Output and exit code of one invocation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub text: String,
    pub code: i32,
}

impl Outcome {
    fn ok(text: impl Into<String>) -> Self {
        Outcome {
            text: text.into(),
            code: 0,
        }
    }

    fn err(code: i32, text: impl Into<String>) -> Self {
        Outcome {
            text: text.into(),
            code,
        }
    }
}

pub fn run<I, S>(args: I) -> Outcome
where
    I: IntoIterator<Item = S>,
    S: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 2 } else { 0 };
            return Outcome::err(code, e.to_string());
        }
    };
    let json = cli.json;
    match cli.command {
        Command::Decompose {
            manifest,
            single,
            trace,
            batch,
        } => each(manifest, batch, json, |m| {
            cmd_decompose(m, single, trace, json)
        }),
        Command::K { manifest, batch } => each(manifest, batch, json, |m| cmd_k(m, json)),
        Command::Verify {
            manifest,
            batch,
            inject_fault,
        } => {
            let fault = match inject_fault.as_deref().map(str::parse::<Fault>) {
                None => None,
                Some(Ok(f)) => Some(f),
                Some(Err(e)) => return Outcome::err(2, e),
            };
            each(manifest, batch, json, |m| cmd_verify(m, fault, json))
        }
        Command::Trace {
            manifest,
            stage,
            batch,
        } => {
            let stage = match stage.as_deref().map(str::parse::<Stage>) {
                None => None,
                Some(Ok(s)) => Some(s),
                Some(Err(e)) => return Outcome::err(2, e.to_string()),
            };
            each(manifest, batch, json, |m| cmd_trace(m, stage, json))
        }
        Command::Compare { a, b } => match (load(&a), load(&b)) {
            (Ok(a), Ok(b)) => cmd_compare(&a, &b, json),
            (Err(e), _) | (_, Err(e)) => e,
        },
        Command::Pi { atom, k } => cmd_pi(&atom, k, json),
    }
}

/// Reads and validates a manifest, mapping failures to exit codes 2 and 3.
pub fn load(path: &Path) -> Result<ManifoldInvariants, Outcome> {
    let raw =
        Manifest::load(path).map_err(|e| Outcome::err(2, format!("{}: {e}", path.display())))?;
    raw.validate()
        .map_err(|e| Outcome::err(3, format!("{}: ValidationError: {e}", path.display())))
}

fn each<F>(manifest: Option<PathBuf>, batch: Option<PathBuf>, json: bool, f: F) -> Outcome
where
    F: Fn(&ManifoldInvariants) -> Outcome + Sync,
{
    let one = |p: &Path| match load(p) {
        Ok(m) => f(&m),
        Err(e) => e,
    };
    match (manifest, batch) {
        (Some(p), None) => one(&p),
        (None, Some(dir)) => {
            let mut files: Vec<PathBuf> = match std::fs::read_dir(&dir) {
                Ok(rd) => rd
                    .filter_map(|e| e.ok().map(|e| e.path()))
                    .filter(|p| p.extension().is_some_and(|x| x == "json"))
                    .collect(),
                Err(e) => return Outcome::err(2, format!("{}: {e}", dir.display())),
            };
            files.sort();
            let results: Vec<(PathBuf, Outcome)> = files
                .into_par_iter()
                .map(|p| {
                    let o = one(&p);
                    (p, o)
                })
                .collect();
            let code = results.iter().map(|(_, o)| o.code).max().unwrap_or(0);
            let text = if json {
                let items: Vec<Value> = results
                    .iter()
                    .map(|(p, o)| {
                        let body = serde_json::from_str(&o.text)
                            .unwrap_or_else(|_| Value::String(o.text.clone()));
                        json!({ "file": p.display().to_string(), "exit": o.code, "result": body })
                    })
                    .collect();
                serde_json::to_string_pretty(&items).expect("serializable")
            } else {
                let mut s = String::new();
                for (p, o) in &results {
                    let _ = writeln!(s, "== {} (exit {}) ==\n{}", p.display(), o.code, o.text);
                }
                s.trim_end().to_string()
            };
            Outcome { text, code }
        }
        _ => Outcome::err(2, "give a manifest path or --batch <dir>"),
    }
}

fn pretty(v: Value) -> String {
    serde_json::to_string_pretty(&v).expect("serializable")
}

pub fn cmd_decompose(m: &ManifoldInvariants, single: bool, trace: bool, json: bool) -> Outcome {
    let (e, t) = double_suspension(m);
    let rendered = if single {
        suspension_splitting(m).to_string()
    } else {
        e.to_string()
    };
    if json {
        let stages: Vec<Value> = t
            .stages
            .iter()
            .map(|s| json!({ "stage": s.name, "expr": s.expr.to_string(), "citation": s.citation }))
            .collect();
        let mut v = json!({
            "suspensions": if single { 1 } else { 2 },
            "expression": rendered,
            "atoms": if single { Vec::new() } else { e.atoms().iter().map(Atom::to_string).collect() },
        });
        if trace {
            v["trace"] = json!(stages);
            v["notes"] = json!(t.notes);
        }
        return Outcome::ok(pretty(v));
    }
    let mut out = rendered;
    if trace {
        out.push('\n');
        out.push_str(t.to_string().trim_end());
    }
    Outcome::ok(out)
}

pub fn cmd_k(m: &ManifoldInvariants, json: bool) -> Outcome {
    match k_of_manifold(m) {
        Ok(r) if json => Outcome::ok(pretty(json!({
            "K": r.k.group.to_string(),
            "KO": render_ko(&r.ko.group),
            "predicted_K": r.predicted_k.to_string(),
            "predicted_KO": render_ko(&r.predicted_ko),
            "k_agree": r.k_agrees(),
            "ko_agree": r.ko_agrees(),
        }))),
        Ok(r) => Outcome::ok(r.to_string()),
        Err(e) => Outcome::err(2, e.to_string()),
    }
}

pub fn cmd_compare(a: &ManifoldInvariants, b: &ManifoldInvariants, json: bool) -> Outcome {
    let same = match compare(a, b) {
        Ok(s) => s,
        Err(e @ DecomposeError::Scope(_)) => return Outcome::err(4, e.to_string()),
        Err(e) => return Outcome::err(2, e.to_string()),
    };
    let (ea, _) = double_suspension(a);
    let (eb, _) = double_suspension(b);
    let reason = distinguishing_invariant(&ea, &eb);
    if json {
        return Outcome::ok(pretty(json!({
            "verdict": if same { "EQUIVALENT" } else { "DISTINCT" },
            "reason": reason.map(|r| r.to_string()),
            "a": ea.to_string(),
            "b": eb.to_string(),
        })));
    }
    let text = match (same, reason) {
        (true, _) => "EQUIVALENT".to_string(),
        (false, Some(r)) => format!("DISTINCT (reason: {r})"),
        (false, None) => "DISTINCT (reason: none found)".to_string(),
    };
    Outcome::ok(format!("{text}\n  {ea}\n  {eb}"))
}

pub fn cmd_verify(m: &ManifoldInvariants, fault: Option<Fault>, json: bool) -> Outcome {
    let e = match fault {
        None => double_suspension(m).0,
        Some(f) => match inject_fault(m, f) {
            Some(e) => e,
            None => return Outcome::err(2, format!("fault {f} does not apply to this manifold")),
        },
    };
    let report = verify_decomposition(m, &e);
    let code = if report.passed() { 0 } else { 1 };
    let text = if json {
        let checks: Vec<Value> = report
            .checks
            .iter()
            .map(|c| {
                let status = match c.status {
                    Status::Pass => "pass",
                    Status::Fail => "fail",
                    Status::NotApplicable => "n/a",
                };
                json!({ "name": c.name, "status": status, "expected": c.expected, "actual": c.actual })
            })
            .collect();
        pretty(
            json!({ "expression": e.to_string(), "passed": report.passed(), "checks": checks, "notes": report.notes }),
        )
    } else {
        format!("{e}\n{report}")
    };
    Outcome { text, code }
}

pub fn cmd_trace(m: &ManifoldInvariants, which: Option<Stage>, json: bool) -> Outcome {
    if let Some(s) = which {
        let expr = stage(m, s).to_string();
        return Outcome::ok(if json {
            pretty(json!({ "stage": format!("{s:?}"), "expr": expr }))
        } else {
            expr
        });
    }
    cmd_decompose(m, false, true, json)
}

pub fn cmd_pi(atom: &str, k: u32, json: bool) -> Outcome {
    let atom: Atom = match atom.parse() {
        Ok(a) => a,
        Err(e) => return Outcome::err(2, e.to_string()),
    };
    match PiQuery::new(atom, k).and_then(|q| q.evaluate()) {
        Ok(v) if json => Outcome::ok(pretty(
            json!({ "space": atom.to_string(), "k": k, "value": v.to_string() }),
        )),
        Ok(v) => Outcome::ok(v.to_string()),
        Err(e) => Outcome::err(2, e.to_string()),
    }
}
