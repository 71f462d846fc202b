//! Machine-readable reports. Field order is fixed by the struct layout and
//! every collection is ordered, so serialization is byte-stable across runs
//! for identical inputs.

use serde::Serialize;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
    Skipped,
}

#[derive(Clone, Debug, Serialize)]
pub struct CheckResult {
    pub name: String,
    pub status: Status,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub detail: Option<String>,
}

#[derive(Clone, Debug, Serialize)]
pub struct Table {
    pub name: String,
    pub rows: Vec<(String, String)>,
}

#[derive(Clone, Debug, Serialize)]
pub struct Provenance {
    pub field: String,
    pub truncation: usize,
    pub max_hdeg: usize,
    pub budget: usize,
    pub seed: u64,
}

#[derive(Clone, Debug, Serialize)]
pub struct Report {
    pub subcommand: String,
    pub provenance: Provenance,
    pub checks: Vec<CheckResult>,
    pub tables: Vec<Table>,
    pub notes: Vec<String>,
}

impl Report {
    pub fn new(subcommand: impl Into<String>, provenance: Provenance) -> Self {
        Report {
            subcommand: subcommand.into(),
            provenance,
            checks: Vec::new(),
            tables: Vec::new(),
            notes: Vec::new(),
        }
    }

    pub fn check(&mut self, name: impl Into<String>, ok: bool, detail: Option<String>) {
        self.checks.push(CheckResult {
            name: name.into(),
            status: if ok { Status::Pass } else { Status::Fail },
            detail,
        });
    }

    pub fn skip(&mut self, name: impl Into<String>, reason: impl Into<String>) {
        self.checks.push(CheckResult {
            name: name.into(),
            status: Status::Skipped,
            detail: Some(reason.into()),
        });
    }

    pub fn table(&mut self, name: impl Into<String>, rows: Vec<(String, String)>) {
        self.tables.push(Table {
            name: name.into(),
            rows,
        });
    }

    pub fn note(&mut self, text: impl Into<String>) {
        self.notes.push(text.into());
    }

    pub fn all_passed(&self) -> bool {
        self.checks.iter().all(|c| c.status != Status::Fail)
    }

    /// 0 when every check passed or was skipped with a reason, 1 otherwise.
    pub fn exit_code(&self) -> i32 {
        if self.all_passed() {
            0
        } else {
            1
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }

    pub fn to_text(&self) -> String {
        let mut out = String::new();
        out.push_str(&format!("# {}\n", self.subcommand));
        out.push_str(&format!(
            "field: {}, truncation: {}, max-hdeg: {}, budget: {}, seed: {}\n",
            self.provenance.field,
            self.provenance.truncation,
            self.provenance.max_hdeg,
            self.provenance.budget,
            self.provenance.seed
        ));
        for check in &self.checks {
            let tag = match check.status {
                Status::Pass => "PASS",
                Status::Fail => "FAIL",
                Status::Skipped => "SKIP",
            };
            match &check.detail {
                Some(d) => out.push_str(&format!("[{tag}] {} ({d})\n", check.name)),
                None => out.push_str(&format!("[{tag}] {}\n", check.name)),
            }
        }
        for table in &self.tables {
            out.push_str(&format!("-- {}\n", table.name));
            for (k, v) in &table.rows {
                out.push_str(&format!("   {k}: {v}\n"));
            }
        }
        for note in &self.notes {
            out.push_str(&format!("note: {note}\n"));
        }
        out
    }
}

pub fn fmt_dims(dims: &[usize]) -> String {
    let strs: Vec<String> = dims.iter().map(|d| d.to_string()).collect();
    format!("({})", strs.join(", "))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn provenance() -> Provenance {
        Provenance {
            field: "rational".into(),
            truncation: 6,
            max_hdeg: 2,
            budget: 200_000,
            seed: 0,
        }
    }

    #[test]
    fn exit_codes_follow_statuses() {
        let mut r = Report::new("test", provenance());
        r.check("a", true, None);
        r.skip("b", "outside range");
        assert_eq!(r.exit_code(), 0);
        r.check("c", false, Some("counterexample".into()));
        assert_eq!(r.exit_code(), 1);
    }

    #[test]
    fn serialization_is_stable() {
        let mut r = Report::new("test", provenance());
        r.check("a", true, None);
        r.table("dims", vec![("HH^0".into(), "2".into())]);
        assert_eq!(r.to_json(), r.clone().to_json());
        assert!(r.to_text().contains("[PASS] a"));
    }
}
