use std::fmt::Write as _;

use serde::{Deserialize, Serialize};

use super::compare::{Comparison, Exponent, PrecisionConfig, Verdict};

/// One certified comparison.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct VerdictEntry {
    pub case: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub q: Option<u64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub n: Option<u64>,
    pub verdict: Verdict,
    /// Enclosure of `ln(rhs) − ln(lhs)`.
    pub margin_lo: f64,
    pub margin_hi: f64,
    pub precision: u32,
}

impl VerdictEntry {
    /// `scale` divides the comparison margin, for comparisons that were
    /// raised to a power before being decided.
    pub fn from_comparison(case: String, q: Option<u64>, n: Option<u64>, c: &Comparison, scale: i64) -> Self {
        let m = c.margin.div_int(&scale.into());
        VerdictEntry {
            case,
            q,
            n,
            verdict: c.verdict,
            margin_lo: m.lo_f64(),
            margin_hi: m.hi_f64(),
            precision: c.precision,
        }
    }

    pub fn midpoint(&self) -> f64 {
        (self.margin_lo + self.margin_hi) / 2.0
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TailStatus {
    pub certified: bool,
    pub method: String,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub notes: Vec<String>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum FailureKind {
    /// The inequality is false.
    Inequality,
    /// The precision cap was reached without a decision.
    Undecidable,
    /// A tail certificate was refuted or could not be decided.
    Tail,
    /// Embedded data disagrees with a recomputation.
    Data,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Failure {
    pub case: String,
    pub kind: FailureKind,
    pub detail: String,
}

impl Failure {
    pub fn new(case: impl Into<String>, kind: FailureKind, detail: impl Into<String>) -> Self {
        Failure {
            case: case.into(),
            kind,
            detail: detail.into(),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct VerdictReport {
    pub family: String,
    /// Name of the swept parameter (`q`, `n` or `row`).
    pub swept_param: String,
    pub swept: [u64; 2],
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub ranks: Option<[u64; 2]>,
    pub verdicts: Vec<VerdictEntry>,
    pub tail: TailStatus,
    pub failures: Vec<Failure>,
    /// Margin decreases between consecutive sweep points; informational.
    #[serde(default)]
    pub review: Vec<String>,
    pub paper_location: String,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Status {
    Pass,
    Fail,
    Undecidable,
}

impl VerdictReport {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }

    pub fn count(&self, v: Verdict) -> usize {
        self.verdicts.iter().filter(|e| e.verdict == v).count()
    }

    /// Flags margin decreases larger than the enclosure widths within each
    /// group of entries sharing `key`, in sweep order.
    pub fn flag_decreases<K: PartialEq>(&mut self, key: impl Fn(&VerdictEntry) -> K) {
        for pair in self.verdicts.windows(2) {
            let (a, b) = (&pair[0], &pair[1]);
            if key(a) != key(b) || a.verdict == Verdict::Undecidable || b.verdict == Verdict::Undecidable {
                continue;
            }
            let tol = (a.margin_hi - a.margin_lo) + (b.margin_hi - b.margin_lo);
            if b.midpoint() < a.midpoint() - tol {
                self.review.push(format!(
                    "margin decreases from {} ({:.6}) to {} ({:.6})",
                    a.case,
                    a.midpoint(),
                    b.case,
                    b.midpoint()
                ));
            }
        }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct ConfigSummary {
    pub exponent: Exponent,
    pub psl2_q_max: u64,
    pub family_q_max: u64,
    pub classical_n_max: u64,
    pub psln_n_max: u64,
    pub alt_n_max: u32,
    pub sym_search_max: u32,
    pub precision: PrecisionConfig,
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct Counts {
    pub less: usize,
    pub equal: usize,
    pub greater: usize,
    pub undecidable: usize,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct AggregateReport {
    pub status: Status,
    pub config: ConfigSummary,
    pub counts: Counts,
    pub all_tails_certified: bool,
    pub reports: Vec<VerdictReport>,
}

impl AggregateReport {
    pub fn new(config: ConfigSummary, reports: Vec<VerdictReport>) -> Self {
        let mut counts = Counts::default();
        for e in reports.iter().flat_map(|r| &r.verdicts) {
            match e.verdict {
                Verdict::Less => counts.less += 1,
                Verdict::Equal => counts.equal += 1,
                Verdict::Greater => counts.greater += 1,
                Verdict::Undecidable => counts.undecidable += 1,
            }
        }
        let mut failures = reports.iter().flat_map(|r| &r.failures).peekable();
        let status = if failures.peek().is_none() {
            Status::Pass
        } else if failures.all(|f| f.kind == FailureKind::Undecidable) {
            Status::Undecidable
        } else {
            Status::Fail
        };
        AggregateReport {
            status,
            all_tails_certified: reports.iter().all(|r| r.tail.certified),
            config,
            counts,
            reports,
        }
    }

    pub fn report(&self, family: &str) -> Option<&VerdictReport> {
        self.reports.iter().find(|r| r.family == family)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }

    /// Summary tables; per-point verdicts are listed only for failures.
    pub fn to_markdown(&self) -> String {
        let mut out = String::new();
        let _ = writeln!(out, "# Verification report\n");
        let _ = writeln!(out, "Status: **{:?}**  ", self.status);
        let _ = writeln!(out, "Exponent: `{}`  ", self.config.exponent);
        let c = &self.counts;
        let _ = writeln!(
            out,
            "Verdicts: {} less, {} equal, {} greater, {} undecidable  ",
            c.less, c.equal, c.greater, c.undecidable
        );
        let _ = writeln!(out, "All tails certified: {}\n", self.all_tails_certified);
        let _ = writeln!(out, "| family | swept | cases | min margin | tail | failures | review |");
        let _ = writeln!(out, "|---|---|---|---|---|---|---|");
        for r in &self.reports {
            let min = r
                .verdicts
                .iter()
                .map(|e| e.margin_lo)
                .fold(f64::INFINITY, f64::min);
            let _ = writeln!(
                out,
                "| {} | {} {}..{} | {} | {:.6} | {} | {} | {} |",
                r.family,
                r.swept_param,
                r.swept[0],
                r.swept[1],
                r.verdicts.len(),
                min,
                if r.tail.certified { "certified" } else { "not certified" },
                r.failures.len(),
                r.review.len()
            );
        }
        for r in self.reports.iter().filter(|r| !r.failures.is_empty()) {
            let _ = writeln!(out, "\n## Failures in {}\n", r.family);
            for f in &r.failures {
                let _ = writeln!(out, "- {} ({:?}): {}", f.case, f.kind, f.detail);
            }
        }
        let _ = writeln!(out, "\n## Tail certificates\n");
        for r in &self.reports {
            let _ = writeln!(out, "- **{}**: {}", r.family, r.tail.method);
            for note in &r.tail.notes {
                let _ = writeln!(out, "  - {note}");
            }
        }
        out
    }
}
