//! Verification reports: per-check verdicts with exact residuals, grouped
//! by suite, rendered as JSON or text.

use serde::Serialize;
use std::collections::BTreeMap;
use std::fmt::Write as _;
use std::time::Instant;

/// Longest residual text kept in a report; longer ones are cut and marked.
pub const RESIDUAL_LIMIT: usize = 4000;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Tier {
    /// Exact equality of operators.
    OperatorIdentity,
    /// Agreement on `X^n + X^-n` up to the configured depth.
    BasisAgreement,
}

/// Whether a check encodes a statement as printed or a correction of it.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Variant {
    /// As printed; no correction applies.
    Stated,
    /// As printed, with a corrected counterpart in the same suite.
    Superseded,
    /// The corrected form of a superseded statement.
    Corrected,
}

impl Variant {
    pub fn included(self, filter: VariantFilter) -> bool {
        match filter {
            VariantFilter::All => true,
            VariantFilter::Printed => self != Variant::Corrected,
            VariantFilter::Corrected => self != Variant::Superseded,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, clap::ValueEnum)]
#[serde(rename_all = "lowercase")]
pub enum VariantFilter {
    All,
    Printed,
    Corrected,
}

#[derive(Clone, Debug, Serialize)]
pub struct Check {
    pub desc: String,
    pub pass: bool,
    pub tier: Tier,
    pub variant: Variant,
    pub residual_text: String,
    pub millis: u64,
}

/// One suite: its checks and the constants it extracted.
#[derive(Clone, Debug, Serialize)]
pub struct TheoremCheck {
    pub name: String,
    pub checks: Vec<Check>,
    pub constants: BTreeMap<String, String>,
}

impl TheoremCheck {
    pub fn new(name: &str) -> Self {
        TheoremCheck { name: name.to_string(), checks: Vec::new(), constants: BTreeMap::new() }
    }

    pub fn pass(&self) -> bool {
        self.checks.iter().all(|c| c.pass)
    }

    pub fn retain(&mut self, filter: VariantFilter) {
        self.checks.retain(|c| c.variant.included(filter));
    }

    pub fn find(&self, desc_prefix: &str) -> Option<&Check> {
        self.checks.iter().find(|c| c.desc.starts_with(desc_prefix))
    }
}

/// Collects checks, timing each one when `timing` is set.
pub struct SuiteBuilder {
    pub suite: TheoremCheck,
    timing: bool,
}

/// Outcome of one check body: verdict and residual text.
pub type Outcome = (bool, String);

impl SuiteBuilder {
    pub fn new(name: &str, timing: bool) -> Self {
        SuiteBuilder { suite: TheoremCheck::new(name), timing }
    }

    /// Runs `body`; an error counts as a failure with its message as residual.
    pub fn check<E: std::fmt::Display>(
        &mut self,
        desc: impl Into<String>,
        tier: Tier,
        variant: Variant,
        body: impl FnOnce() -> Result<Outcome, E>,
    ) -> bool {
        let start = Instant::now();
        let (pass, residual) = match body() {
            Ok(r) => r,
            Err(e) => (false, format!("error: {}", e)),
        };
        let millis = if self.timing { start.elapsed().as_millis() as u64 } else { 0 };
        self.suite.checks.push(Check {
            desc: desc.into(),
            pass,
            tier,
            variant,
            residual_text: clip(residual),
            millis,
        });
        pass
    }

    pub fn constant(&mut self, name: impl Into<String>, text: impl Into<String>) {
        self.suite.constants.insert(name.into(), text.into());
    }

    pub fn finish(self) -> TheoremCheck {
        self.suite
    }
}

fn clip(s: String) -> String {
    if s.len() <= RESIDUAL_LIMIT {
        return s;
    }
    let mut cut = RESIDUAL_LIMIT;
    while !s.is_char_boundary(cut) {
        cut -= 1;
    }
    format!("{} ... [{} bytes total]", &s[..cut], s.len())
}

#[derive(Clone, Debug, Serialize)]
pub struct Report<C: Serialize> {
    pub version: String,
    pub config: C,
    pub suites: Vec<TheoremCheck>,
    pub total_millis: u64,
    pub pass: bool,
}

impl<C: Serialize> Report<C> {
    pub fn new(config: C, suites: Vec<TheoremCheck>, total_millis: u64) -> Self {
        let pass = suites.iter().all(TheoremCheck::pass);
        Report { version: env!("CARGO_PKG_VERSION").to_string(), config, suites, total_millis, pass }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes") + "\n"
    }

    /// Line-oriented rendering carrying the same fields as the JSON form.
    pub fn to_text(&self) -> String {
        let mut out = String::new();
        let config = serde_json::to_string(&self.config).expect("config serializes");
        writeln!(out, "version {}", self.version).unwrap();
        writeln!(out, "config {}", config).unwrap();
        for s in &self.suites {
            writeln!(out, "suite {} {}", s.name, verdict(s.pass())).unwrap();
            for c in &s.checks {
                let tier = serde_json::to_value(c.tier).unwrap();
                let variant = serde_json::to_value(c.variant).unwrap();
                writeln!(
                    out,
                    "  {} [{} {} {}ms] {}",
                    verdict(c.pass),
                    tier.as_str().unwrap(),
                    variant.as_str().unwrap(),
                    c.millis,
                    c.desc
                )
                .unwrap();
                writeln!(out, "    residual: {}", c.residual_text).unwrap();
            }
            for (k, v) in &s.constants {
                writeln!(out, "  constant {} = {}", k, v).unwrap();
            }
        }
        writeln!(out, "total_millis {}", self.total_millis).unwrap();
        writeln!(out, "overall {}", verdict(self.pass)).unwrap();
        out
    }
}

fn verdict(b: bool) -> &'static str {
    if b {
        "PASS"
    } else {
        "FAIL"
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn builder_records_errors_as_failures() {
        let mut b = SuiteBuilder::new("s", false);
        assert!(b.check("ok", Tier::OperatorIdentity, Variant::Stated, || Ok::<_, String>((true, "0".into()))));
        assert!(!b.check("err", Tier::OperatorIdentity, Variant::Corrected, || Err::<Outcome, _>("boom")));
        let s = b.finish();
        assert!(!s.pass());
        assert_eq!(s.checks[1].residual_text, "error: boom");
        assert_eq!(s.checks[0].millis, 0);
    }

    #[test]
    fn variant_filters() {
        assert!(!Variant::Corrected.included(VariantFilter::Printed));
        assert!(!Variant::Superseded.included(VariantFilter::Corrected));
        assert!(Variant::Stated.included(VariantFilter::Corrected));
    }

    #[test]
    fn long_residuals_are_clipped() {
        let s = clip("x".repeat(RESIDUAL_LIMIT + 10));
        assert!(s.ends_with(&format!("[{} bytes total]", RESIDUAL_LIMIT + 10)));
    }
}
