//! Command-line surface: load algebras (catalog keys or description files),
//! run verification suites, normalize expressions, enumerate and certify PBW
//! bases, and emit machine-readable reports.
//!
//! Exit codes: 0 success / all-pass, 1 mathematical failure (failed check,
//! refuted certificate, non-member), 2 usage or input error, 3 bounds error.

pub mod expr;
pub mod specfile;

use std::collections::BTreeMap;
use std::io::Write;

use clap::{Parser, Subcommand};
use num::Zero;
use serde_json::json;

use crate::algebra::{TLieSpec, TensorPoly};
use crate::axioms::{self, AdequacyMethod, CheckId, VerifyOptions};
use crate::catalog::{self, CatalogKey};
use crate::enveloping::{self, MembershipOutcome};
use crate::scalar::Rational;
use crate::symrep::{self, CertificateOutcome, RefutationWitness};

pub const EXIT_OK: i32 = 0;
pub const EXIT_MATH_FAIL: i32 = 1;
pub const EXIT_USAGE: i32 = 2;
pub const EXIT_BOUNDS: i32 = 3;

#[derive(Parser)]
#[command(
    name = "tlie",
    about = "Exact computation in basic T-Lie algebras: axiom verification, PBW normal forms, and PBW-basis certificates",
    version
)]
struct Cli {
    /// Emit a machine-readable JSON report instead of text.
    #[arg(long, global = true)]
    json: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Run axiom and condition checks against an algebra.
    Verify {
        /// Catalog key (e.g. `sl_plus_q:4`) or description file path.
        spec: String,
        /// Comma-separated check names, or `all`.
        #[arg(long, value_delimiter = ',', default_value = "all")]
        checks: Vec<String>,
        /// Adequacy η-sum bound (default: cover every decreasing triple).
        #[arg(long)]
        r_max: Option<u64>,
        /// Adequacy method: rewrite, linear, or auto.
        #[arg(long, default_value = "auto")]
        adequacy_method: String,
    },
    /// Rewrite an expression to its PBW normal form.
    Normalize {
        spec: String,
        expr: String,
        /// Show every rewriting step.
        #[arg(long)]
        trace: bool,
    },
    /// Enumerate PBW monomials up to a length.
    Pbw {
        spec: String,
        #[arg(long)]
        max_len: usize,
    },
    /// Compare the two one-step reductions of every small critical word.
    Diamond {
        spec: String,
        #[arg(long)]
        max_delta: u64,
    },
    /// Decide truncated ideal membership of an expression, with certificate.
    Member {
        spec: String,
        expr: String,
        #[arg(long)]
        max_len: usize,
        #[arg(long)]
        max_delta: u64,
    },
    /// Act by an expression on 1 in the q-symmetric algebra.
    Act { spec: String, expr: String },
    /// Certify (or refute) PBW linear independence up to a length.
    Certify {
        spec: String,
        #[arg(long)]
        max_len: usize,
    },
    /// Specialize the scalars at rational values (e.g. `q=1 p=1`).
    Specialize {
        spec: String,
        /// Assignments `var=value` with nonzero rational values.
        assignments: Vec<String>,
    },
    /// List built-in algebras or dump one as a description file.
    Catalog {
        #[command(subcommand)]
        action: CatalogAction,
    },
}

#[derive(Subcommand)]
enum CatalogAction {
    List,
    Dump { key: String },
}

/// Entry point used by the binary and by tests; writes all output to `out`
/// and returns the process exit code.
pub fn run_command<W: Write>(argv: &[String], out: &mut W) -> i32 {
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            let _ = write!(out, "{e}");
            // clap treats --help/--version as "errors" that should exit 0
            return if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
        }
    };
    match run(cli, out) {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(out, "error: {}", e.message);
            e.code
        }
    }
}

struct CommandError {
    code: i32,
    message: String,
}

fn usage(message: impl Into<String>) -> CommandError {
    CommandError {
        code: EXIT_USAGE,
        message: message.into(),
    }
}

fn load_spec(name: &str) -> Result<TLieSpec, CommandError> {
    match CatalogKey::parse(name) {
        Ok(key) => key.build().map_err(|e| usage(e.to_string())),
        Err(_) => {
            let text = std::fs::read_to_string(name).map_err(|e| {
                usage(format!(
                    "`{name}` is neither a catalog key nor a readable file ({e})"
                ))
            })?;
            let raw = specfile::parse(&text).map_err(|e| usage(format!("{name}: {e}")))?;
            TLieSpec::build(&raw).map_err(|e| usage(format!("{name}: {e}")))
        }
    }
}

fn parse_expr(spec: &TLieSpec, src: &str) -> Result<TensorPoly, CommandError> {
    expr::parse_for_spec(src, spec).map_err(|e| usage(e.to_string()))
}

fn emit<W: Write>(out: &mut W, text: String) {
    let _ = writeln!(out, "{}", text.trim_end());
}

fn run<W: Write>(cli: Cli, out: &mut W) -> Result<i32, CommandError> {
    match cli.command {
        Command::Verify {
            spec,
            checks,
            r_max,
            adequacy_method,
        } => {
            let spec = load_spec(&spec)?;
            let selected: Vec<CheckId> = if checks.iter().any(|c| c == "all") {
                CheckId::ALL.to_vec()
            } else {
                checks
                    .iter()
                    .map(|c| {
                        CheckId::parse(c).ok_or_else(|| {
                            usage(format!(
                                "unknown check `{c}` (valid: {}, all)",
                                CheckId::ALL.map(|c| c.as_str()).join(", ")
                            ))
                        })
                    })
                    .collect::<Result<_, _>>()?
            };
            let method = match adequacy_method.as_str() {
                "rewrite" => AdequacyMethod::Rewrite,
                "linear" => AdequacyMethod::Linear,
                "auto" => AdequacyMethod::Auto,
                other => return Err(usage(format!("unknown adequacy method `{other}`"))),
            };
            let report = axioms::verify(
                &spec,
                &selected,
                &VerifyOptions {
                    r_max,
                    adequacy_method: method,
                },
            );
            if cli.json {
                emit(out, report.to_json(&spec).to_string());
            } else {
                emit(out, report.render_table(&spec));
            }
            Ok(if report.all_passed() { EXIT_OK } else { EXIT_MATH_FAIL })
        }

        Command::Normalize { spec, expr, trace } => {
            let spec = load_spec(&spec)?;
            let input = parse_expr(&spec, &expr)?;
            let (nf, steps) = if trace {
                let (nf, steps) = enveloping::normalize_traced(&spec, &input);
                (nf, Some(steps))
            } else {
                (enveloping::normalize(&spec, &input), None)
            };
            if cli.json {
                let doc = json!({
                    "command": "normalize",
                    "spec": spec.name(),
                    "input": spec.render_poly(&input),
                    "normal_form": nf.terms().map(|(w, c)| json!({
                        "word": spec.render_word(w),
                        "coefficient": c.render(spec.variables()),
                    })).collect::<Vec<_>>(),
                    "trace": steps.as_ref().map(|steps| steps.iter().map(|s| json!({
                        "rule": match s.rule {
                            enveloping::RuleKind::Swap => "swap",
                            enveloping::RuleKind::Diagonal => "diagonal",
                        },
                        "position": s.position,
                        "before": spec.render_word(&s.before),
                        "after": spec.render_poly(&s.after),
                    })).collect::<Vec<_>>()),
                });
                emit(out, doc.to_string());
            } else {
                emit(out, spec.render_poly(&nf.as_tensor()));
                if let Some(steps) = steps {
                    for s in steps {
                        emit(
                            out,
                            format!(
                                "  step {:?}@{}: {} -> {}",
                                s.rule,
                                s.position,
                                spec.render_word(&s.before),
                                spec.render_poly(&s.after)
                            ),
                        );
                    }
                }
            }
            Ok(EXIT_OK)
        }

        Command::Pbw { spec, max_len } => {
            let spec = load_spec(&spec)?;
            let monomials = enveloping::enumerate_pbw(&spec, max_len);
            if cli.json {
                let doc = json!({
                    "command": "pbw",
                    "spec": spec.name(),
                    "max_len": max_len,
                    "count": monomials.len(),
                    "monomials": monomials.iter().map(|m| spec.render_word(m.word())).collect::<Vec<_>>(),
                });
                emit(out, doc.to_string());
            } else {
                emit(out, format!("{} monomials of length <= {max_len}", monomials.len()));
                for m in &monomials {
                    emit(out, spec.render_word(m.word()));
                }
            }
            Ok(EXIT_OK)
        }

        Command::Diamond { spec, max_delta } => {
            let spec = load_spec(&spec)?;
            let report = enveloping::diamond_check(&spec, max_delta);
            if cli.json {
                let doc = json!({
                    "command": "diamond",
                    "spec": spec.name(),
                    "max_delta": max_delta,
                    "checked": report.checked,
                    "passed": report.passed(),
                    "witnesses": report.witnesses.iter().map(|w| json!({
                        "triple": w.triple.iter().map(|&x| spec.element(x).id.clone()).collect::<Vec<_>>(),
                        "left_first": spec.render_poly(&w.left_first.as_tensor()),
                        "right_first": spec.render_poly(&w.right_first.as_tensor()),
                        "discrepancy": spec.render_poly(&w.discrepancy.as_tensor()),
                    })).collect::<Vec<_>>(),
                });
                emit(out, doc.to_string());
            } else if report.passed() {
                emit(
                    out,
                    format!("diamond: pass ({} critical words, delta <= {max_delta})", report.checked),
                );
            } else {
                emit(out, format!("diamond: FAIL ({} witnesses)", report.witnesses.len()));
                for w in &report.witnesses {
                    let ids: Vec<String> =
                        w.triple.iter().map(|&x| spec.element(x).id.clone()).collect();
                    emit(
                        out,
                        format!(
                            "  {}: left-first {} vs right-first {}",
                            ids.join("."),
                            spec.render_poly(&w.left_first.as_tensor()),
                            spec.render_poly(&w.right_first.as_tensor())
                        ),
                    );
                }
            }
            Ok(if report.passed() { EXIT_OK } else { EXIT_MATH_FAIL })
        }

        Command::Member {
            spec,
            expr,
            max_len,
            max_delta,
        } => {
            let spec = load_spec(&spec)?;
            let input = parse_expr(&spec, &expr)?;
            let outcome = enveloping::ideal_member_truncated(&spec, &input, max_len, max_delta)
                .map_err(|e| CommandError {
                    code: EXIT_BOUNDS,
                    message: e.to_string(),
                })?;
            match outcome {
                MembershipOutcome::Member(cert) => {
                    let combo: Vec<(String, String)> = cert
                        .combination
                        .iter()
                        .map(|(idx, c)| {
                            let ctx = &cert.contexts[*idx];
                            let (x, y) = ctx.pair;
                            let g = format!(
                                "{} | g({}, {}) | {}",
                                spec.render_word(&ctx.left),
                                spec.element(x).id,
                                spec.element(y).id,
                                spec.render_word(&ctx.right)
                            );
                            (g, c.render(spec.variables()))
                        })
                        .collect();
                    if cli.json {
                        let doc = json!({
                            "command": "member",
                            "spec": spec.name(),
                            "input": spec.render_poly(&input),
                            "result": "member",
                            "ring_exact": cert.ring_exact,
                            "clearing_denominator": cert.clearing.render(spec.variables()),
                            "verified": cert.verified,
                            "combination": combo.iter().map(|(g, c)| json!({
                                "generator": g,
                                "coefficient": c,
                            })).collect::<Vec<_>>(),
                        });
                        emit(out, doc.to_string());
                    } else {
                        emit(out, "member".into());
                        if !cert.ring_exact {
                            emit(
                                out,
                                format!(
                                    "  over the fraction field; clearing denominator {} gives a ring identity",
                                    cert.clearing.render(spec.variables())
                                ),
                            );
                        }
                        for (g, c) in &combo {
                            emit(out, format!("  {c}  x  {g}"));
                        }
                    }
                    Ok(EXIT_OK)
                }
                MembershipOutcome::NotMemberWithinBounds { generators } => {
                    if cli.json {
                        let doc = json!({
                            "command": "member",
                            "spec": spec.name(),
                            "input": spec.render_poly(&input),
                            "result": "not-member-within-bounds",
                            "generators": generators,
                        });
                        emit(out, doc.to_string());
                    } else {
                        emit(
                            out,
                            format!("not a member within bounds ({generators} spanning elements)"),
                        );
                    }
                    Ok(EXIT_MATH_FAIL)
                }
            }
        }

        Command::Act { spec, expr } => {
            let spec = load_spec(&spec)?;
            let input = parse_expr(&spec, &expr)?;
            let mut cache = symrep::ActionCache::new();
            let acted = symrep::act_tensor(&spec, &mut cache, &input, &crate::algebra::Word::empty())
                .map_err(|e| CommandError {
                    code: EXIT_MATH_FAIL,
                    message: e.to_string(),
                })?;
            if cli.json {
                let doc = json!({
                    "command": "act",
                    "spec": spec.name(),
                    "input": spec.render_poly(&input),
                    "result": spec.render_poly(&acted.as_tensor()),
                    "clause_b_violations": cache.clause_b_violations().len(),
                });
                emit(out, doc.to_string());
            } else {
                emit(out, spec.render_poly(&acted.as_tensor()));
            }
            Ok(EXIT_OK)
        }

        Command::Certify { spec, max_len } => {
            let spec = load_spec(&spec)?;
            let outcome = symrep::independence_certificate(&spec, max_len).map_err(|e| match e {
                symrep::CertError::PreconditionViolated { .. } => CommandError {
                    code: EXIT_BOUNDS,
                    message: e.to_string(),
                },
                symrep::CertError::Action(_) => CommandError {
                    code: EXIT_MATH_FAIL,
                    message: e.to_string(),
                },
            })?;
            match outcome {
                CertificateOutcome::Certified {
                    monomials,
                    lemma_c_bound,
                } => {
                    if cli.json {
                        emit(
                            out,
                            json!({
                                "command": "certify",
                                "spec": spec.name(),
                                "max_len": max_len,
                                "result": "certified",
                                "monomials": monomials,
                                "lemma_c_bound": lemma_c_bound,
                            })
                            .to_string(),
                        );
                    } else {
                        emit(
                            out,
                            format!(
                                "certified: {monomials} PBW monomials of length <= {max_len} are free (clause C verified up to eta {lemma_c_bound})"
                            ),
                        );
                    }
                    Ok(EXIT_OK)
                }
                CertificateOutcome::Refuted { witness } => {
                    let detail = match *witness {
                        RefutationWitness::LemmaC(w) => format!(
                            "representation property fails at ({}, {}) on {}: {}",
                            spec.element(w.lambda).id,
                            spec.element(w.mu).id,
                            spec.render_word(&w.monomial),
                            spec.render_poly(&w.discrepancy.as_tensor())
                        ),
                        RefutationWitness::Monomial { monomial, acts_to } => format!(
                            "monomial {} acts on 1 as {}",
                            spec.render_word(&monomial),
                            spec.render_poly(&acts_to.as_tensor())
                        ),
                    };
                    if cli.json {
                        emit(
                            out,
                            json!({
                                "command": "certify",
                                "spec": spec.name(),
                                "max_len": max_len,
                                "result": "refuted",
                                "witness": detail,
                            })
                            .to_string(),
                        );
                    } else {
                        emit(out, format!("refuted: {detail}"));
                    }
                    Ok(EXIT_MATH_FAIL)
                }
            }
        }

        Command::Specialize { spec, assignments } => {
            let spec = load_spec(&spec)?;
            let mut values: BTreeMap<String, Rational> = BTreeMap::new();
            for a in &assignments {
                let (var, value) = a
                    .split_once('=')
                    .ok_or_else(|| usage(format!("expected `var=value`, got `{a}`")))?;
                let value: Rational = value
                    .trim()
                    .parse()
                    .map_err(|_| usage(format!("`{value}` is not a rational number")))?;
                if !spec.variables().contains(&var.trim().to_string()) {
                    return Err(usage(format!("`{var}` is not a variable of {}", spec.name())));
                }
                values.insert(var.trim().to_string(), value);
            }
            let ordered: Vec<Rational> = spec
                .variables()
                .iter()
                .map(|v| {
                    values
                        .get(v)
                        .cloned()
                        .ok_or_else(|| usage(format!("missing assignment for `{v}`")))
                })
                .collect::<Result<_, _>>()?;
            if ordered.iter().any(|v| v.is_zero()) {
                return Err(usage("unit variables must be assigned nonzero values"));
            }
            let specialized = enveloping::specialize_enveloping(&spec, &ordered)
                .map_err(|e| usage(e.to_string()))?;
            if cli.json {
                emit(
                    out,
                    json!({
                        "command": "specialize",
                        "spec": spec.name(),
                        "result": specfile::print(&specialized.to_raw()),
                    })
                    .to_string(),
                );
            } else {
                emit(out, specfile::print(&specialized.to_raw()));
            }
            Ok(EXIT_OK)
        }

        Command::Catalog { action } => match action {
            CatalogAction::List => {
                let keys = catalog::builtin_keys();
                if cli.json {
                    emit(out, json!({ "command": "catalog", "keys": keys }).to_string());
                } else {
                    for key in keys {
                        emit(out, key);
                    }
                }
                Ok(EXIT_OK)
            }
            CatalogAction::Dump { key } => {
                let spec = CatalogKey::parse(&key)
                    .and_then(|k| k.build())
                    .map_err(|e| usage(e.to_string()))?;
                emit(out, specfile::print(&spec.to_raw()));
                Ok(EXIT_OK)
            }
        },
    }
}
