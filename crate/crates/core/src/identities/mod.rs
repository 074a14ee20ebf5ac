//! A catalog of identities between symmetric functions and operators,
//! checked exactly over finite parameter ranges.
//!
//! Operator identities are compared extensionally: both sides are applied to
//! every `s_γ` with `|γ| ≤ max_g`.

mod catalog;

use std::fmt;
use std::time::{Duration, Instant};

use rayon::prelude::*;
use serde::{Deserialize, Serialize, Serializer};

use crate::error::{Error, Result};
use crate::operators::OperatorExpr;
use crate::partition::{partitions_up_to, Partition};
use crate::symfunc::SymFunc;
use crate::tableaux::JdtBijectionReport;

pub use catalog::catalog;

/// Parameters of one instance. Which fields are required depends on the identity.
#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct Params {
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub alpha: Option<Partition>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub beta: Option<Partition>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub gamma: Option<Partition>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub theta: Option<Partition>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub f: Option<Partition>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub g: Option<Partition>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub m: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub n: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub k: Option<usize>,
    /// degree bound on test vectors `s_γ`
    pub max_g: usize,
}

macro_rules! setter {
    ($name:ident, $ty:ty) => {
        pub fn $name(mut self, v: $ty) -> Self {
            self.$name = Some(v);
            self
        }
    };
}

impl Params {
    pub fn new(max_g: usize) -> Self {
        Params { max_g, ..Default::default() }
    }

    setter!(alpha, Partition);
    setter!(beta, Partition);
    setter!(gamma, Partition);
    setter!(theta, Partition);
    setter!(f, Partition);
    setter!(g, Partition);
    setter!(m, usize);
    setter!(n, usize);
    setter!(k, usize);

    fn has(&self, name: &str) -> bool {
        match name {
            "alpha" => self.alpha.is_some(),
            "beta" => self.beta.is_some(),
            "gamma" => self.gamma.is_some(),
            "theta" => self.theta.is_some(),
            "f" => self.f.is_some(),
            "g" => self.g.is_some(),
            "m" => self.m.is_some(),
            "n" => self.n.is_some(),
            "k" => self.k.is_some(),
            _ => false,
        }
    }

    pub(crate) fn part(&self, name: &str) -> &Partition {
        match name {
            "alpha" => self.alpha.as_ref(),
            "beta" => self.beta.as_ref(),
            "gamma" => self.gamma.as_ref(),
            "theta" => self.theta.as_ref(),
            "f" => self.f.as_ref(),
            "g" => self.g.as_ref(),
            _ => None,
        }
        .expect("presence checked against the schema")
    }

    pub(crate) fn int(&self, name: &str) -> usize {
        match name {
            "m" => self.m,
            "n" => self.n,
            "k" => self.k,
            _ => None,
        }
        .expect("presence checked against the schema")
    }
}

impl fmt::Display for Params {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut items = Vec::new();
        let parts = [("α", &self.alpha), ("β", &self.beta), ("γ", &self.gamma), ("θ", &self.theta), ("f", &self.f), ("g", &self.g)];
        for (name, v) in parts {
            if let Some(p) = v {
                items.push(format!("{name}=({p})"));
            }
        }
        for (name, v) in [("m", self.m), ("n", self.n), ("k", self.k)] {
            if let Some(x) = v {
                items.push(format!("{name}={x}"));
            }
        }
        items.push(format!("|γ|≤{}", self.max_g));
        f.write_str(&items.join(" "))
    }
}

/// Degree bounds for [`run_suite`]: `max_ab` bounds the operator indices and
/// other small parameters, `max_g` the test vectors and the main partition of
/// value identities.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct Bounds {
    pub max_ab: usize,
    pub max_g: usize,
}

impl Default for Bounds {
    fn default() -> Self {
        Bounds { max_ab: 3, max_g: 4 }
    }
}

/// One asserted equality within an instance.
pub enum Claim {
    /// Two operators with the same action on every `s_γ`, `|γ| ≤ max_g`.
    Operators { label: String, lhs: OperatorExpr, rhs: OperatorExpr },
    Values { label: String, lhs: SymFunc, rhs: SymFunc },
    Bijection { label: String, report: Box<JdtBijectionReport> },
}

impl Claim {
    pub fn ops(label: impl Into<String>, lhs: OperatorExpr, rhs: OperatorExpr) -> Self {
        Claim::Operators { label: label.into(), lhs, rhs }
    }

    pub fn values(label: impl Into<String>, lhs: SymFunc, rhs: SymFunc) -> Self {
        Claim::Values { label: label.into(), lhs, rhs }
    }
}

pub type CheckFn = fn(&Params) -> Result<Vec<Claim>>;
pub type InstancesFn = fn(&Bounds) -> Vec<Params>;

pub struct Identity {
    pub id: &'static str,
    pub statement: &'static str,
    /// parameter names that must be present
    pub needs: &'static [&'static str],
    pub check: CheckFn,
    pub instances: InstancesFn,
}

#[derive(Debug, Clone, Serialize)]
pub struct Failure {
    pub params: String,
    pub claim: String,
    pub lhs: SymFunc,
    pub rhs: SymFunc,
    /// `lhs − rhs`
    pub difference: SymFunc,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub detail: Option<String>,
}

#[derive(Debug, Clone, Serialize)]
pub struct VerificationReport {
    pub id: String,
    pub parameters: String,
    pub instances: usize,
    pub failures: Vec<Failure>,
    #[serde(serialize_with = "seconds")]
    pub elapsed: Duration,
}

fn seconds<S: Serializer>(d: &Duration, s: S) -> std::result::Result<S::Ok, S::Error> {
    s.serialize_f64(d.as_secs_f64())
}

impl VerificationReport {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }
}

impl fmt::Display for VerificationReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let status = if self.passed() { "PASS" } else { "FAIL" };
        writeln!(
            f,
            "{status} {} [{}] {} checks, {} failures, {:.3}s",
            self.id,
            self.parameters,
            self.instances,
            self.failures.len(),
            self.elapsed.as_secs_f64()
        )?;
        for x in self.failures.iter().take(10) {
            writeln!(f, "  at {} ({})", x.params, x.claim)?;
            writeln!(f, "    lhs  = {}", x.lhs)?;
            writeln!(f, "    rhs  = {}", x.rhs)?;
            writeln!(f, "    diff = {}", x.difference)?;
            if let Some(d) = &x.detail {
                writeln!(f, "    {d}")?;
            }
        }
        if self.failures.len() > 10 {
            writeln!(f, "  ... {} more", self.failures.len() - 10)?;
        }
        Ok(())
    }
}

pub fn find(id: &str) -> Result<&'static Identity> {
    catalog().iter().find(|e| e.id == id).ok_or_else(|| Error::UnknownIdentity(id.to_string()))
}

/// Counts and failures of a single instance.
fn evaluate(entry: &Identity, params: &Params) -> Result<(usize, Vec<Failure>)> {
    if let Some(missing) = entry.needs.iter().find(|n| !params.has(n)) {
        return Err(Error::MalformedParams(format!("`{}` requires parameter `{missing}`", entry.id)));
    }
    let claims = (entry.check)(params)?;
    let mut count = 0;
    let mut failures = Vec::new();
    let mut fail = |label: &str, at: String, lhs: SymFunc, rhs: SymFunc, detail: Option<String>| {
        failures.push(Failure { params: at, claim: label.to_string(), difference: &lhs - &rhs, lhs, rhs, detail });
    };
    for claim in claims {
        match claim {
            Claim::Operators { label, lhs, rhs } => {
                for gamma in partitions_up_to(params.max_g) {
                    let g = SymFunc::schur(gamma.clone());
                    let (l, r) = (lhs.apply(&g), rhs.apply(&g));
                    count += 1;
                    if l != r {
                        fail(&label, format!("{params} on s[{gamma}]"), l, r, None);
                    }
                }
            }
            Claim::Values { label, lhs, rhs } => {
                count += 1;
                if lhs != rhs {
                    fail(&label, params.to_string(), lhs, rhs, None);
                }
            }
            Claim::Bijection { label, report } => {
                count += 1;
                if !report.passed() {
                    let n = SymFunc::constant(crate::symfunc::rational(report.failures.len() as i64));
                    fail(&label, params.to_string(), n, SymFunc::zero(), Some(report.failures.join("; ")));
                }
            }
        }
    }
    Ok((count, failures))
}

/// Checks one instance of a catalog identity.
pub fn verify_instance(id: &str, params: &Params) -> Result<VerificationReport> {
    let entry = find(id)?;
    verify_entry(entry, std::slice::from_ref(params), params.to_string())
}

/// Checks `entry` on every instance, in parallel, keeping instance order.
pub fn verify_entry(entry: &Identity, instances: &[Params], description: String) -> Result<VerificationReport> {
    let start = Instant::now();
    let results: Vec<Result<(usize, Vec<Failure>)>> = instances.par_iter().map(|p| evaluate(entry, p)).collect();
    let mut report = VerificationReport {
        id: entry.id.to_string(),
        parameters: description,
        instances: 0,
        failures: Vec::new(),
        elapsed: Duration::ZERO,
    };
    for r in results {
        let (n, f) = r?;
        report.instances += n;
        report.failures.extend(f);
    }
    report.elapsed = start.elapsed();
    Ok(report)
}

/// Every instance of one identity within `bounds`.
pub fn verify_identity(id: &str, bounds: &Bounds) -> Result<VerificationReport> {
    let entry = find(id)?;
    let instances = (entry.instances)(bounds);
    verify_entry(entry, &instances, format!("max_ab={} max_g={}", bounds.max_ab, bounds.max_g))
}

/// Runs the whole catalog, one report per identity in catalog order.
pub fn run_suite(bounds: &Bounds) -> Vec<VerificationReport> {
    catalog()
        .iter()
        .map(|e| verify_identity(e.id, bounds).expect("catalog instances satisfy their schemas"))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str) -> Partition {
        s.parse().unwrap()
    }

    #[test]
    fn ids_are_unique() {
        let mut ids: Vec<_> = catalog().iter().map(|e| e.id).collect();
        ids.sort();
        let n = ids.len();
        ids.dedup();
        assert_eq!(ids.len(), n);
    }

    #[test]
    fn unknown_and_malformed() {
        assert!(matches!(verify_instance("nope", &Params::new(2)), Err(Error::UnknownIdentity(_))));
        assert!(matches!(verify_instance("thm_main_1", &Params::new(2)), Err(Error::MalformedParams(_))));
    }

    #[test]
    fn small_instances_pass() {
        let r = verify_instance("thm_main_1", &Params::new(3).alpha(p("1")).beta(p("1"))).unwrap();
        assert!(r.passed(), "{r}");
        let r = verify_instance("straightcorners", &Params::new(0).alpha(p("2,1"))).unwrap();
        assert!(r.passed(), "{r}");
        let r = verify_instance("skew_corners", &Params::new(0).alpha(p("2,1")).theta(p("1"))).unwrap();
        assert!(r.passed(), "{r}");
    }

    #[test]
    fn corrupted_entry_reports_counterexample() {
        fn flipped(p: &Params) -> Result<Vec<Claim>> {
            let one = OperatorExpr::identity();
            let u = OperatorExpr::u_s(&Partition::row(1));
            let d = OperatorExpr::d_s(&Partition::row(1));
            let _ = p;
            // correct: D U = U D + 1
            Ok(vec![Claim::ops("flipped", d * u.clone(), u * OperatorExpr::d_s(&Partition::row(1)) - one)])
        }
        let entry = Identity { id: "corrupt", statement: "", needs: &[], check: flipped, instances: |_| vec![Params::new(2)] };
        let r = verify_entry(&entry, &[Params::new(2)], String::new()).unwrap();
        assert!(!r.passed());
        assert_eq!(r.failures[0].difference, SymFunc::one().scale_int(2));
    }
}
