//! Subcommands. Each produces text and JSON renderings of the same result.

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};
use symop_core::identities::{self, Bounds, VerificationReport};
use symop_core::operators::{independent, rank};
use symop_core::tableaux::{self, JdtBijectionReport};
use symop_core::{kron_coeff, lr_coeff, matrix_of, mn_character, skew_schur, Partition, SkewShape, SymFunc};
use thiserror::Error;

use crate::expr::{eval_op, eval_str, parse_op, render, ParseError};

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
}

#[derive(Debug, Parser)]
#[command(name = "symop", version, about = "Exact symmetric functions, operators and identity checks")]
pub struct Cli {
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    pub format: Format,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Evaluate an expression in the Schur basis
    Expand { expr: String },
    /// Kronecker product of two expressions
    Kron { a: String, b: String },
    /// Schur expansion of a skew Schur function, e.g. `3,1/1`
    Skew { shape: String },
    /// Littlewood-Richardson coefficient c^ν_{λμ}
    Lrcoeff { nu: String, lambda: String, mu: String },
    /// Kronecker coefficient g_{λμν}
    Kroncoeff { lambda: String, mu: String, nu: String },
    /// Character value χ^λ(ρ)
    Char { lambda: String, rho: String },
    /// Check catalog identities by exhaustion
    Verify {
        /// identity id, or `all`
        id: String,
        #[arg(long, default_value_t = 3)]
        max_ab: usize,
        #[arg(long, default_value_t = 4)]
        max_g: usize,
    },
    /// List the identity catalog
    Identities,
    /// s_{α/δ} s_{γ/β} by the skew Littlewood-Richardson rule
    Skewlr {
        a: String,
        b: String,
        /// list every ASSYT/SSYT pair
        #[arg(long, conflicts_with = "collapsed")]
        terms: bool,
        /// Schur expansion (default)
        #[arg(long)]
        collapsed: bool,
        /// with --terms, only pairs contributing s_{γ⁺/β⁻}
        #[arg(long, requires_all = ["terms", "gamma_plus"])]
        beta_minus: Option<String>,
        #[arg(long, requires_all = ["terms", "beta_minus"])]
        gamma_plus: Option<String>,
    },
    /// h_k s_{γ/β} by the skew Pieri rule
    Skewpieri {
        k: usize,
        shape: String,
        #[arg(long)]
        terms: bool,
    },
    /// s_{α/θ} ∗ s_{(n−k−1,1)} by corners, checked against the direct product
    Skewcorners { alpha: String, theta: String },
    /// Jeu de taquin slides behind the corner formula, every instance
    Jdt { alpha: String, theta: String },
    /// Matrix of an operator on Schur functions of degree ≤ dom
    Matrix {
        op: String,
        #[arg(long, default_value_t = 3)]
        dom: usize,
    },
    /// Rank of operators as vectors of truncated matrices
    Rank {
        #[arg(required = true)]
        ops: Vec<String>,
        #[arg(long, default_value_t = 3)]
        dom: usize,
    },
    /// Apply an operator expression to a symmetric function
    Apply { op: String, expr: String },
}

#[derive(Debug, Error)]
pub enum CliError {
    #[error(transparent)]
    Parse(#[from] ParseError),
    #[error(transparent)]
    Core(#[from] symop_core::Error),
}

pub struct Outcome {
    pub text: String,
    pub json: Value,
    /// false for a failed verification
    pub ok: bool,
}

impl Outcome {
    fn ok(text: String, json: Value) -> Self {
        Outcome { text, json, ok: true }
    }

    fn value(f: &SymFunc) -> Self {
        Outcome::ok(render(f), serde_json::to_value(f.to_schur()).expect("serializable"))
    }

    pub fn render(&self, format: Format) -> String {
        match format {
            Format::Text => self.text.trim_end().to_string(),
            Format::Json => serde_json::to_string_pretty(&self.json).expect("serializable"),
        }
    }
}

fn partition(s: &str) -> Result<Partition, CliError> {
    Ok(s.parse()?)
}

fn shape(s: &str) -> Result<SkewShape, CliError> {
    Ok(s.parse()?)
}

fn reports_json(reports: &[VerificationReport]) -> Value {
    serde_json::to_value(reports).expect("serializable")
}

fn verify(id: &str, bounds: Bounds) -> Result<Outcome, CliError> {
    let reports = if id == "all" { identities::run_suite(&bounds) } else { vec![identities::verify_identity(id, &bounds)?] };
    let ok = reports.iter().all(VerificationReport::passed);
    let text: String = reports.iter().map(ToString::to_string).collect();
    Ok(Outcome { text, json: reports_json(&reports), ok })
}

fn jdt_text(r: &JdtBijectionReport) -> String {
    let mut out = format!("α = ({}), θ = ({}), entries ≤ {}\n", r.alpha, r.theta, r.max_entry);
    out += &format!("k = {}, excluded = {}, instances = {}\n", r.k, r.excluded, r.instances);
    for (case, n) in &r.case_counts {
        out += &format!("case {case:?}: {n}\n");
    }
    for ((delta, gamma), cases) in &r.shape_cases {
        let names: Vec<String> = cases.iter().map(|c| format!("{c:?}")).collect();
        out += &format!("  δ = ({delta}), γ = ({gamma}): {}\n", names.join(","));
    }
    out += if r.passed() { "bijection: PASS\n" } else { "bijection: FAIL\n" };
    for f in &r.failures {
        out += &format!("  {f}\n");
    }
    out
}

fn jdt(alpha: &Partition, theta: &Partition) -> Result<Outcome, CliError> {
    let report = tableaux::verify_jdt_bijection(alpha, theta)?;
    let (restrict, _) = tableaux::add_restrict(theta, alpha);
    let mut slides = Vec::new();
    for gamma in alpha.add_set() {
        for delta in &restrict {
            let sh = SkewShape::new(gamma.clone(), delta.clone())?;
            for t in tableaux::enumerate_ssyt_bounded(&sh, alpha.size()) {
                slides.push(tableaux::classify_jdt(alpha, theta, &t)?);
            }
        }
    }
    let ok = report.passed();
    let json = json!({ "report": report, "slides": slides });
    Ok(Outcome { text: jdt_text(&report), json, ok })
}

pub fn run(cli: &Cli) -> Result<Outcome, CliError> {
    match &cli.command {
        Command::Expand { expr } => Ok(Outcome::value(&eval_str(expr)?)),
        Command::Kron { a, b } => Ok(Outcome::value(&eval_str(a)?.kronecker(&eval_str(b)?))),
        Command::Skew { shape: s } => Ok(Outcome::value(&skew_schur(&shape(s)?))),
        Command::Lrcoeff { nu, lambda, mu } => {
            let c = lr_coeff(&partition(nu)?, &partition(lambda)?, &partition(mu)?);
            Ok(Outcome::ok(c.to_string(), json!(c)))
        }
        Command::Kroncoeff { lambda, mu, nu } => {
            let c = kron_coeff(&partition(lambda)?, &partition(mu)?, &partition(nu)?)?;
            Ok(Outcome::ok(c.to_string(), json!(c)))
        }
        Command::Char { lambda, rho } => {
            let c = mn_character(&partition(lambda)?, &partition(rho)?)?;
            Ok(Outcome::ok(c.to_string(), json!(c.to_string())))
        }
        Command::Verify { id, max_ab, max_g } => verify(id, Bounds { max_ab: *max_ab, max_g: *max_g }),
        Command::Identities => {
            let entries = identities::catalog();
            let text = entries.iter().map(|e| format!("{:<16} {}\n", e.id, e.statement)).collect();
            let json = entries.iter().map(|e| json!({ "id": e.id, "statement": e.statement, "params": e.needs })).collect();
            Ok(Outcome::ok(text, Value::Array(json)))
        }
        Command::Skewlr { a, b, terms, beta_minus, gamma_plus, .. } => {
            let (a, b) = (shape(a)?, shape(b)?);
            if *terms {
                let pairs = match (beta_minus, gamma_plus) {
                    (Some(bm), Some(gp)) => tableaux::skew_lr_pairs_with_shapes(&a, &b, &partition(bm)?, &partition(gp)?),
                    _ => tableaux::skew_lr_pairs(&a, &b),
                };
                let text = pairs
                    .iter()
                    .map(|p| {
                        let w1: String = p.assyt.reverse_reading_word().iter().map(ToString::to_string).collect::<Vec<_>>().join(",");
                        let w2: String = p.ssyt.reverse_reading_word().iter().map(ToString::to_string).collect::<Vec<_>>().join(",");
                        format!("{}  word {w1} | {w2}\n", p.term)
                    })
                    .collect();
                Ok(Outcome::ok(text, serde_json::to_value(&pairs).expect("serializable")))
            } else {
                Ok(Outcome::value(&tableaux::skew_lr_product(&a, &b)))
            }
        }
        Command::Skewpieri { k, shape: s, terms } => {
            let sh = shape(s)?;
            if *terms {
                let ts = tableaux::skew_pieri_terms(*k, &sh);
                let text = ts.iter().map(|t| format!("{t}\n")).collect();
                Ok(Outcome::ok(text, serde_json::to_value(&ts).expect("serializable")))
            } else {
                Ok(Outcome::value(&tableaux::skew_pieri(*k, &sh)))
            }
        }
        Command::Skewcorners { alpha, theta } => {
            let (a, t) = (partition(alpha)?, partition(theta)?);
            let rhs = tableaux::skew_corners_rhs(&a, &t)?;
            let m = (a.size() - t.size()) as i64;
            let direct = symop_core::skew_schur(&SkewShape::new(a, t)?).kronecker(&symop_core::jacobi_trudi(&[m - 1, 1]).to_symfunc());
            let ok = direct == rhs;
            let text = format!("{}\ndirect Kronecker product: {}\n", render(&rhs), if ok { "agrees" } else { "DIFFERS" });
            let json = json!({ "rhs": rhs, "direct": direct.to_schur(), "agree": ok });
            Ok(Outcome { text, json, ok })
        }
        Command::Jdt { alpha, theta } => jdt(&partition(alpha)?, &partition(theta)?),
        Command::Matrix { op, dom } => {
            let m = matrix_of(&eval_op(&parse_op(op)?), *dom);
            Ok(Outcome::ok(m.to_string(), m.to_json()))
        }
        Command::Rank { ops, dom } => {
            let exprs = ops.iter().map(|o| Ok(eval_op(&parse_op(o)?))).collect::<Result<Vec<_>, CliError>>()?;
            let r = rank(&exprs, *dom);
            let ind = independent(&exprs, *dom);
            let verdict = if ind { "independent" } else { "dependent at this truncation" };
            let text = format!("rank {r} of {} ({verdict})", exprs.len());
            Ok(Outcome::ok(text, json!({ "rank": r, "count": exprs.len(), "independent": ind, "dom": dom })))
        }
        Command::Apply { op, expr } => Ok(Outcome::value(&eval_op(&parse_op(op)?).apply(&eval_str(expr)?))),
    }
}
