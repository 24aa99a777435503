//! Verification items and their JSON and markdown renderings.

use std::fmt;

use serde::{Serialize, Serializer};

#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Debug, Hash)]
pub enum Status {
    Pass,
    Fail,
    Flag,
}

impl Status {
    pub fn as_str(self) -> &'static str {
        match self {
            Status::Pass => "PASS",
            Status::Fail => "FAIL",
            Status::Flag => "FLAG",
        }
    }

    fn mark(self) -> &'static str {
        match self {
            Status::Pass => "✓",
            Status::Fail => "✗",
            Status::Flag => "⚑",
        }
    }
}

impl fmt::Display for Status {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl Serialize for Status {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(self.as_str())
    }
}

/// Library area a check belongs to; used only for markdown grouping.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Debug, Hash)]
pub enum Module {
    ScalarRing,
    OctonionCore,
    FieldTheory,
    FermionSymbolic,
    Cli,
}

impl Module {
    pub const ALL: [Module; 5] =
        [Module::ScalarRing, Module::OctonionCore, Module::FieldTheory, Module::FermionSymbolic, Module::Cli];

    pub fn name(self) -> &'static str {
        match self {
            Module::ScalarRing => "scalar_ring",
            Module::OctonionCore => "octonion_core",
            Module::FieldTheory => "field_theory",
            Module::FermionSymbolic => "fermion_symbolic",
            Module::Cli => "cli",
        }
    }
}

/// One verification item. Field order is the serialized order.
#[derive(Clone, PartialEq, Debug, Serialize)]
pub struct CheckResult {
    pub check_id: String,
    pub paper_anchor: String,
    pub computed: String,
    pub claimed: String,
    pub status: Status,
    #[serde(skip)]
    pub module: Module,
}

impl CheckResult {
    pub fn new(
        module: Module,
        check_id: impl Into<String>,
        anchor: impl Into<String>,
        computed: impl Into<String>,
        claimed: impl Into<String>,
        status: Status,
    ) -> Self {
        CheckResult {
            check_id: check_id.into(),
            paper_anchor: anchor.into(),
            computed: computed.into(),
            claimed: claimed.into(),
            status,
            module,
        }
    }
}

#[derive(Clone, PartialEq, Debug, Default)]
pub struct Report {
    items: Vec<CheckResult>,
}

#[derive(Clone, Copy, PartialEq, Eq, Debug, Default)]
pub struct Counts {
    pub pass: usize,
    pub fail: usize,
    pub flag: usize,
}

impl Report {
    /// Sorts by `check_id`; a repeated id keeps its first occurrence.
    pub fn new(mut items: Vec<CheckResult>) -> Self {
        items.sort_by(|a, b| a.check_id.cmp(&b.check_id));
        items.dedup_by(|b, a| a.check_id == b.check_id);
        Report { items }
    }

    pub fn items(&self) -> &[CheckResult] {
        &self.items
    }

    pub fn get(&self, id: &str) -> Option<&CheckResult> {
        self.items
            .binary_search_by(|c| c.check_id.as_str().cmp(id))
            .ok()
            .map(|k| &self.items[k])
    }

    pub fn counts(&self) -> Counts {
        let mut c = Counts::default();
        for it in &self.items {
            match it.status {
                Status::Pass => c.pass += 1,
                Status::Fail => c.fail += 1,
                Status::Flag => c.flag += 1,
            }
        }
        c
    }

    /// 0 without FAIL (and without FLAG when strict), else 1.
    pub fn exit_code(&self, strict: bool) -> i32 {
        let c = self.counts();
        if c.fail > 0 || (strict && c.flag > 0) {
            1
        } else {
            0
        }
    }

    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(&self.items).expect("report serializes");
        s.push('\n');
        s
    }

    pub fn to_markdown(&self) -> String {
        let c = self.counts();
        let mut out = String::from("# Verification report\n\n");
        out.push_str(&format!("{} checks: {} PASS, {} FAIL, {} FLAG\n", self.items.len(), c.pass, c.fail, c.flag));
        for m in Module::ALL {
            let rows: Vec<&CheckResult> = self.items.iter().filter(|it| it.module == m).collect();
            if rows.is_empty() {
                continue;
            }
            out.push_str(&format!("\n## {}\n\n", m.name()));
            out.push_str("| | check | computed | claimed | anchor |\n|---|---|---|---|---|\n");
            for it in rows {
                out.push_str(&format!(
                    "| {} {} | `{}` | {} | {} | {} |\n",
                    it.status.mark(),
                    it.status,
                    it.check_id,
                    cell(&it.computed),
                    cell(&it.claimed),
                    cell(&it.paper_anchor)
                ));
            }
        }
        out
    }

    /// One `STATUS check_id` line per item.
    pub fn summary_lines(&self) -> String {
        let mut out = String::new();
        for it in &self.items {
            out.push_str(&format!("{:<4} {}\n", it.status, it.check_id));
        }
        let c = self.counts();
        out.push_str(&format!("{} PASS, {} FAIL, {} FLAG\n", c.pass, c.fail, c.flag));
        out
    }
}

fn cell(s: &str) -> String {
    s.replace('|', "\\|").replace('\n', " ")
}

#[cfg(test)]
mod tests {
    use super::*;

    fn item(id: &str, status: Status) -> CheckResult {
        CheckResult::new(Module::OctonionCore, id, "anchor", "1", "n/a", status)
    }

    #[test]
    fn empty_report_is_empty_array() {
        let r = Report::new(Vec::new());
        assert_eq!(r.to_json().trim(), "[]");
        assert_eq!(r.exit_code(true), 0);
    }

    #[test]
    fn pass_row_has_check_mark() {
        let md = Report::new(vec![item("a", Status::Pass)]).to_markdown();
        assert!(md.contains("| ✓ PASS | `a` |"));
        assert!(md.contains("## octonion_core"));
    }

    #[test]
    fn field_order_and_sorting() {
        let r = Report::new(vec![item("b", Status::Flag), item("a", Status::Pass)]);
        let j = r.to_json();
        let a = j.find("\"check_id\": \"a\"").unwrap();
        assert!(a < j.find("\"check_id\": \"b\"").unwrap());
        let keys = ["check_id", "paper_anchor", "computed", "claimed", "status"];
        let pos: Vec<usize> = keys.iter().map(|k| j.find(&format!("\"{k}\"")).unwrap()).collect();
        assert!(pos.windows(2).all(|w| w[0] < w[1]));
        assert!(!j.contains("module"));
    }

    #[test]
    fn exit_codes() {
        let r = Report::new(vec![item("a", Status::Pass), item("b", Status::Flag)]);
        assert_eq!((r.exit_code(false), r.exit_code(true)), (0, 1));
        let r = Report::new(vec![item("a", Status::Fail)]);
        assert_eq!(r.exit_code(false), 1);
        assert_eq!(r.get("a").unwrap().status, Status::Fail);
    }

    #[test]
    fn pipes_escaped() {
        let mut x = item("a", Status::Flag);
        x.computed = "|x|".into();
        assert!(Report::new(vec![x]).to_markdown().contains("\\|x\\|"));
    }
}
