//! Machine-readable verification reports.

use serde::{Deserialize, Serialize};

use crate::qpoly::QPoly;

/// One checked instance. For boolean properties `lhs` counts the passing
/// cases and `rhs` the cases examined, both as constant polynomials.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ReportEntry {
    pub theorem: String,
    pub instance: String,
    pub lhs: QPoly,
    pub rhs: QPoly,
    pub pass: bool,
}

impl ReportEntry {
    pub fn compare(theorem: &str, instance: impl Into<String>, lhs: QPoly, rhs: QPoly) -> Self {
        let pass = lhs == rhs;
        ReportEntry { theorem: theorem.to_string(), instance: instance.into(), lhs, rhs, pass }
    }

    pub fn count(theorem: &str, instance: impl Into<String>, passed: u64, total: u64) -> Self {
        Self::compare(theorem, instance, QPoly::constant(passed.into()), QPoly::constant(total.into()))
    }

    /// An entry that passes exactly when `lhs != rhs`, for expected failures
    /// such as counterexamples.
    pub fn differ(theorem: &str, instance: impl Into<String>, lhs: QPoly, rhs: QPoly) -> Self {
        let pass = lhs != rhs;
        ReportEntry { theorem: theorem.to_string(), instance: instance.into(), lhs, rhs, pass }
    }
}

#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Report {
    pub entries: Vec<ReportEntry>,
}

impl Report {
    pub fn new(entries: Vec<ReportEntry>) -> Self {
        Report { entries }
    }

    pub fn all_pass(&self) -> bool {
        self.entries.iter().all(|e| e.pass)
    }

    pub fn failures(&self) -> impl Iterator<Item = &ReportEntry> {
        self.entries.iter().filter(|e| !e.pass)
    }

    pub fn extend(&mut self, other: Report) {
        self.entries.extend(other.entries);
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    /// One CSV row per entry; polynomials in their pretty form.
    pub fn to_csv(&self) -> String {
        let mut out = String::from("theorem,instance,lhs,rhs,pass\n");
        for e in &self.entries {
            out.push_str(&format!(
                "{},{},{},{},{}\n",
                csv_field(&e.theorem),
                csv_field(&e.instance),
                csv_field(&e.lhs.to_string()),
                csv_field(&e.rhs.to_string()),
                e.pass
            ));
        }
        out
    }

    pub fn to_pretty(&self) -> String {
        let mut out = String::new();
        for e in &self.entries {
            let tag = if e.pass { "PASS" } else { "FAIL" };
            out.push_str(&format!("[{tag}] {} {}", e.theorem, e.instance));
            if !e.pass {
                out.push_str(&format!("\n    lhs = {}\n    rhs = {}", e.lhs, e.rhs));
            }
            out.push('\n');
        }
        let failed = self.failures().count();
        out.push_str(&format!("{} instances, {} failed\n", self.len(), failed));
        out
    }
}

fn csv_field(s: &str) -> String {
    if s.contains([',', '"', '\n']) {
        format!("\"{}\"", s.replace('"', "\"\""))
    } else {
        s.to_string()
    }
}
