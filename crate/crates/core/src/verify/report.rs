use std::fmt::Write as _;
use std::time::Duration;

use serde_json::{json, Value};

use crate::status::Status;
use crate::table::HodgeTable;

/// How two tables must relate.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Relation {
    Equal,
    /// `right` is `left` with `Q_- -> ĉ - Q_-`.
    ReflectMinus,
}

impl Relation {
    fn name(self) -> &'static str {
        match self {
            Relation::Equal => "equal",
            Relation::ReflectMinus => "reflect_minus",
        }
    }

    fn parse(s: &str) -> Option<Relation> {
        match s {
            "equal" => Some(Relation::Equal),
            "reflect_minus" => Some(Relation::ReflectMinus),
            _ => None,
        }
    }

    pub fn holds(self, left: &HodgeTable, right: &HodgeTable) -> bool {
        match self {
            Relation::Equal => left == right,
            Relation::ReflectMinus => &left.reflect_minus() == right,
        }
    }
}

/// A comparison between two named tables of the report.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TableCheck {
    pub left: &'static str,
    pub right: &'static str,
    pub relation: Relation,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Verdict {
    pub name: String,
    pub status: Status,
    /// Empty for verdicts not decided by tables.
    pub checks: Vec<TableCheck>,
    pub detail: String,
}

#[derive(Clone, Debug)]
pub struct DualityReport {
    pub summary: Value,
    pub tables: Vec<(&'static str, HodgeTable)>,
    pub verdicts: Vec<Verdict>,
    pub anomalies: Vec<String>,
    /// Wall-clock time per stage; shown in text output, kept out of JSON so
    /// that serialized reports are reproducible byte for byte.
    pub timings: Vec<(String, Duration)>,
}

impl DualityReport {
    pub fn table(&self, name: &str) -> Option<&HodgeTable> {
        self.tables.iter().find(|(n, _)| *n == name).map(|(_, t)| t)
    }

    pub fn verdict(&self, name_prefix: &str) -> Option<&Verdict> {
        self.verdicts
            .iter()
            .find(|v| v.name.starts_with(name_prefix))
    }

    /// No verdict failed or stayed unknown; skipped verdicts do not count.
    pub fn passed(&self) -> bool {
        self.verdicts
            .iter()
            .all(|v| matches!(v.status, Status::Pass | Status::Skipped))
    }

    pub fn to_json(&self) -> Value {
        let mut tables = serde_json::Map::new();
        for (name, t) in &self.tables {
            tables.insert(name.to_string(), t.to_json());
        }
        let verdicts: Vec<Value> = self
            .verdicts
            .iter()
            .map(|v| {
                let checks: Vec<Value> = v
                    .checks
                    .iter()
                    .map(|c| json!({"left": c.left, "right": c.right, "relation": c.relation.name()}))
                    .collect();
                json!({"name": v.name, "status": v.status.to_string(), "checks": checks, "detail": v.detail})
            })
            .collect();
        json!({
            "summary": self.summary,
            "tables": tables,
            "verdicts": verdicts,
            "anomalies": self.anomalies,
        })
    }

    /// Human-readable report with Hodge grids.
    pub fn render(&self) -> String {
        let mut out = String::new();
        for (name, t) in &self.tables {
            let _ = writeln!(out, "table {name}: {t}");
            if let Some(grid) = t.grid() {
                out.push_str(&grid);
            }
        }
        for v in &self.verdicts {
            let _ = writeln!(
                out,
                "{:<13} {} — {}",
                v.status.to_string(),
                v.name,
                v.detail
            );
        }
        for a in &self.anomalies {
            let _ = writeln!(out, "anomaly: {a}");
        }
        for (stage, d) in &self.timings {
            let _ = writeln!(out, "time {stage}: {:.3} s", d.as_secs_f64());
        }
        out
    }
}

/// Statuses of the table-decided verdicts, recomputed from a serialized
/// report alone. `None` if the document is malformed.
pub fn recompute_table_verdicts(report: &Value) -> Option<Vec<(String, Status)>> {
    let tables = report.get("tables")?.as_object()?;
    let mut out = Vec::new();
    for v in report.get("verdicts")?.as_array()? {
        let checks = v.get("checks")?.as_array()?;
        if checks.is_empty() {
            continue;
        }
        let mut ok = true;
        for c in checks {
            let left = HodgeTable::from_json(tables.get(c.get("left")?.as_str()?)?)?;
            let right = HodgeTable::from_json(tables.get(c.get("right")?.as_str()?)?)?;
            ok &= Relation::parse(c.get("relation")?.as_str()?)?.holds(&left, &right);
        }
        out.push((v.get("name")?.as_str()?.to_string(), Status::from_bool(ok)));
    }
    Some(out)
}
