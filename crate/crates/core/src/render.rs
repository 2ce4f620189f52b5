//! Deterministic text, JSON and CSV renderings of every artifact the CLI
//! exposes. Identical inputs produce byte-identical output.

use std::fmt::Write as _;
use std::str::FromStr;

use serde_json::{json, Value};

use crate::algebra::FiniteAlgebraTable;
use crate::classify::Classification;
use crate::code::{BlockCode, CodeClass};
use crate::ideal::IdealIndex;
use crate::report::Report;
use crate::ring::RingSpec;
use crate::suites::{SuiteReport, Witness};
use crate::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum OutputFormat {
    #[default]
    Text,
    Json,
    Csv,
}

impl FromStr for OutputFormat {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "text" => Ok(OutputFormat::Text),
            "json" => Ok(OutputFormat::Json),
            "csv" => Ok(OutputFormat::Csv),
            other => Err(Error::InvalidArgument(format!(
                "unknown format `{other}`; expected text, json or csv"
            ))),
        }
    }
}

/// Cayley-table operations exposed by the `table` subcommand.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum TableOp {
    Imp,
    Oplus,
    Sum,
    Product,
    Ann,
}

impl TableOp {
    pub fn symbol(&self) -> &'static str {
        match self {
            TableOp::Imp => "->",
            TableOp::Oplus => "(+)",
            TableOp::Sum => "+",
            TableOp::Product => "(x)",
            TableOp::Ann => "Ann",
        }
    }

    pub fn as_str(&self) -> &'static str {
        match self {
            TableOp::Imp => "imp",
            TableOp::Oplus => "oplus",
            TableOp::Sum => "sum",
            TableOp::Product => "product",
            TableOp::Ann => "ann",
        }
    }

    pub fn entry(&self, t: &FiniteAlgebraTable, row: usize, col: usize) -> usize {
        match self {
            TableOp::Imp => t.imp(row, col),
            TableOp::Oplus => t.oplus(row, col),
            TableOp::Sum => t.join(row, col),
            TableOp::Product => t.times(row, col),
            TableOp::Ann => t.star(row),
        }
    }
}

impl FromStr for TableOp {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "imp" => Ok(TableOp::Imp),
            "oplus" => Ok(TableOp::Oplus),
            "sum" => Ok(TableOp::Sum),
            "product" => Ok(TableOp::Product),
            "ann" => Ok(TableOp::Ann),
            other => Err(Error::InvalidArgument(format!(
                "unknown op `{other}`; expected imp, oplus, sum, product or ann"
            ))),
        }
    }
}

fn pad(s: &str, w: usize) -> String {
    format!("{s:<w$}")
}

/// Row-operand-first grid: header row of column labels, one row per carrier
/// element. `min_width` widens every cell.
pub fn table_text(t: &FiniteAlgebraTable, op: TableOp, min_width: usize) -> String {
    let w = t
        .names()
        .iter()
        .map(|n| n.len())
        .chain(std::iter::once(op.symbol().len()))
        .max()
        .unwrap_or(1)
        .max(min_width);
    let mut out = String::new();
    if let TableOp::Ann = op {
        let _ = writeln!(out, "{} |", pad(op.symbol(), w));
        let _ = writeln!(out, "{}-+-{}", "-".repeat(w), "-".repeat(w));
        for i in 0..t.size() {
            let line = format!("{} | {}", pad(t.name(i), w), pad(t.name(t.star(i)), w));
            let _ = writeln!(out, "{}", line.trim_end());
        }
        return out;
    }
    let header: Vec<String> = (0..t.size()).map(|j| pad(t.name(j), w)).collect();
    let line = format!("{} | {}", pad(op.symbol(), w), header.join(" "));
    let _ = writeln!(out, "{}", line.trim_end());
    let _ = writeln!(
        out,
        "{}-+-{}",
        "-".repeat(w),
        "-".repeat((w + 1) * t.size() - 1)
    );
    for i in 0..t.size() {
        let cells: Vec<String> = (0..t.size())
            .map(|j| pad(t.name(op.entry(t, i, j)), w))
            .collect();
        let line = format!("{} | {}", pad(t.name(i), w), cells.join(" "));
        let _ = writeln!(out, "{}", line.trim_end());
    }
    out
}

pub fn table_json(spec: &RingSpec, t: &FiniteAlgebraTable, op: TableOp) -> Value {
    let exponents: Vec<Vec<u32>> = spec
        .ideals()
        .iter()
        .map(|i| i.exponents().to_vec())
        .collect();
    let mut obj = json!({
        "ring": spec.to_string(),
        "op": op.as_str(),
        "carrier": t.names(),
        "exponents": exponents,
    });
    match op {
        TableOp::Ann => {
            let map: Vec<usize> = (0..t.size()).map(|i| t.star(i)).collect();
            obj["ann"] = json!(map);
        }
        _ => {
            let rows: Vec<Vec<usize>> = (0..t.size())
                .map(|i| (0..t.size()).map(|j| op.entry(t, i, j)).collect())
                .collect();
            obj[op.as_str()] = json!(rows);
        }
    }
    obj
}

pub fn table_csv(t: &FiniteAlgebraTable, op: TableOp) -> String {
    let mut out = String::new();
    if let TableOp::Ann = op {
        let _ = writeln!(out, "I,Ann(I)");
        for i in 0..t.size() {
            let _ = writeln!(out, "{},{}", t.name(i), t.name(t.star(i)));
        }
        return out;
    }
    let _ = writeln!(out, "{},{}", op.as_str(), t.names().join(","));
    for i in 0..t.size() {
        let cells: Vec<&str> = (0..t.size()).map(|j| t.name(op.entry(t, i, j))).collect();
        let _ = writeln!(out, "{},{}", t.name(i), cells.join(","));
    }
    out
}

fn ideal_members_json(ideal: &IdealIndex) -> Result<Value> {
    let set = ideal.materialize()?;
    let members: Vec<Vec<u64>> = set
        .members()
        .iter()
        .map(|e| e.residues().to_vec())
        .collect();
    Ok(json!(members))
}

pub fn ideals_text(spec: &RingSpec, with_members: bool) -> Result<String> {
    let ideals = spec.ideals();
    let labels = crate::algebra::canonical_labels(ideals.len());
    let mut out = String::new();
    let _ = writeln!(
        out,
        "{spec}  |A| = {}  ideals = {}",
        spec.cardinality(),
        spec.ideal_count()
    );
    for (ideal, label) in ideals.iter().zip(&labels) {
        let mut line = format!("{label}  e={ideal}  |I| = {}", ideal.cardinality());
        if with_members {
            let set = ideal.materialize()?;
            let members: Vec<String> = set.members().iter().map(|m| m.to_string()).collect();
            let _ = write!(line, "  {{{}}}", members.join(","));
        }
        let _ = writeln!(out, "{line}");
    }
    Ok(out)
}

pub fn ideals_json(spec: &RingSpec, with_members: bool) -> Result<Value> {
    let ideals = spec.ideals();
    let labels = crate::algebra::canonical_labels(ideals.len());
    let mut items = Vec::new();
    for (ideal, label) in ideals.iter().zip(&labels) {
        let mut obj = json!({
            "label": label,
            "exponents": ideal.exponents(),
            "cardinality": ideal.cardinality() as u64,
        });
        if with_members {
            obj["members"] = ideal_members_json(ideal)?;
        }
        items.push(obj);
    }
    Ok(json!({
        "ring": spec.to_string(),
        "cardinality": spec.cardinality() as u64,
        "ideals": items,
    }))
}

pub fn ideals_csv(spec: &RingSpec) -> String {
    let ideals = spec.ideals();
    let labels = crate::algebra::canonical_labels(ideals.len());
    let mut out = String::new();
    let cols: Vec<String> = (1..=spec.factors().len()).map(|i| format!("e{i}")).collect();
    let _ = writeln!(out, "label,{},cardinality", cols.join(","));
    for (ideal, label) in ideals.iter().zip(&labels) {
        let exps: Vec<String> = ideal.exponents().iter().map(|e| e.to_string()).collect();
        let _ = writeln!(out, "{label},{},{}", exps.join(","), ideal.cardinality());
    }
    out
}

/// Human-readable counterexample, phrased for ideal-lattice tables.
pub fn witness_message(t: &FiniteAlgebraTable, w: &Witness) -> String {
    let labels: Vec<&str> = w.tuple.iter().map(|&i| t.name(i)).collect();
    match w.axiom {
        "complement" => format!("{0}: {0} + Ann({0}) != A", labels[0]),
        "idempotent" => format!("{0}: {0} (x) {0} != {0}", labels[0]),
        "DN" => format!("{0}: Ann(Ann({0})) != {0}", labels[0]),
        "C" => format!(
            "({0},{1}): {0} + {1} != (({1}:{0}):({1}:{0})) form",
            labels[0], labels[1]
        ),
        _ => format!("{} fails at ({})", w.axiom, labels.join(",")),
    }
}

pub fn suite_reports_text(t: &FiniteAlgebraTable, reports: &[SuiteReport]) -> String {
    let mut out = String::new();
    for report in reports {
        let verdict = if report.pass { "PASS" } else { "FAIL" };
        let _ = writeln!(out, "suite {}: {verdict}", report.suite);
        if !report.conditions.is_empty() {
            let conds: Vec<String> = report
                .conditions
                .iter()
                .map(|c| format!("{}={}", c.id, c.holds))
                .collect();
            let _ = writeln!(out, "  conditions: {}", conds.join(" "));
        }
        for w in &report.witnesses {
            let _ = writeln!(out, "  witness {}", witness_message(t, w));
        }
    }
    out
}

pub fn suite_reports_json(
    spec: &RingSpec,
    t: &FiniteAlgebraTable,
    reports: &[SuiteReport],
) -> Value {
    let items: Vec<Value> = reports
        .iter()
        .map(|r| {
            let witnesses: Vec<Value> = r
                .witnesses
                .iter()
                .map(|w| {
                    json!({
                        "axiom": w.axiom,
                        "tuple": w.tuple,
                        "message": witness_message(t, w),
                    })
                })
                .collect();
            json!({
                "suite": r.suite.as_str(),
                "pass": r.pass,
                "conditions": r.conditions,
                "witnesses": witnesses,
            })
        })
        .collect();
    json!({ "ring": spec.to_string(), "suites": items })
}

pub fn suite_reports_csv(t: &FiniteAlgebraTable, reports: &[SuiteReport]) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "suite,pass,witnesses");
    for r in reports {
        let witnesses: Vec<String> = r.witnesses.iter().map(|w| witness_message(t, w)).collect();
        let _ = writeln!(out, "{},{},{}", r.suite, r.pass, witnesses.join("; "));
    }
    out
}

pub fn code_text(code: &BlockCode, d: Option<u32>, class: Option<CodeClass>) -> String {
    let mut out = String::new();
    for word in &code.words {
        let _ = writeln!(out, "{word}");
    }
    if let Some(d) = d {
        let _ = writeln!(out, "d_H = {d}");
    }
    if let Some(class) = class {
        let _ = writeln!(out, "classification: {class}");
    }
    out
}

pub fn code_json(code: &BlockCode, d: Option<u32>, class: Option<CodeClass>) -> Value {
    let words: Vec<Value> = code
        .words
        .iter()
        .map(|w| json!({ "label": w.label, "bits": w.bit_string() }))
        .collect();
    let mut obj = json!({
        "length": code.length,
        "words": words,
        "coordinate_order": code.coordinate_order,
    });
    if let Some(d) = d {
        obj["min_distance"] = json!(d);
    }
    if let Some(class) = class {
        obj["classification"] = json!(class.to_string());
    }
    obj
}

pub fn code_csv(code: &BlockCode, d: Option<u32>, class: Option<CodeClass>) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "label,bits");
    for w in &code.words {
        let _ = writeln!(out, "{},{}", w.label, w.bit_string());
    }
    if let Some(d) = d {
        let _ = writeln!(out, "d_H,{d}");
    }
    if let Some(class) = class {
        let _ = writeln!(out, "classification,{class}");
    }
    out
}

pub fn classification_text(c: &Classification, min_width: usize) -> String {
    let mut out = String::new();
    let _ = writeln!(
        out,
        "n = {}: {} MV-algebras (chains: {}, boolean: {})",
        c.n,
        c.total(),
        c.chain_count,
        c.boolean_count
    );
    for rep in &c.representatives {
        let kind = match (rep.is_chain, rep.is_boolean) {
            (true, true) => "Boole chain",
            (true, false) => "MV chain",
            (false, true) => "Boole",
            (false, false) => "MV",
        };
        let _ = writeln!(out);
        let _ = writeln!(
            out,
            "partition {}  ring {}  ({kind})",
            rep.partition, rep.ring
        );
        let t = rep.algebra.table();
        out.push_str(&table_text(t, TableOp::Oplus, min_width));
        out.push_str(&table_text(t, TableOp::Ann, min_width));
        out.push_str(&table_text(t, TableOp::Imp, min_width));
    }
    out
}

pub fn classification_json(c: &Classification) -> Value {
    let reps: Vec<Value> = c
        .representatives
        .iter()
        .map(|rep| {
            let t = rep.algebra.table();
            let m = t.size();
            let oplus: Vec<Vec<usize>> = (0..m)
                .map(|i| (0..m).map(|j| t.oplus(i, j)).collect())
                .collect();
            let star: Vec<usize> = (0..m).map(|i| t.star(i)).collect();
            let imp: Vec<Vec<usize>> = (0..m)
                .map(|i| (0..m).map(|j| t.imp(i, j)).collect())
                .collect();
            json!({
                "partition": rep.partition.factors(),
                "ring": rep.ring.to_string(),
                "is_chain": rep.is_chain,
                "is_boolean": rep.is_boolean,
                "carrier": t.names(),
                "oplus": oplus,
                "star": star,
                "imp": imp,
            })
        })
        .collect();
    json!({
        "n": c.n,
        "total": c.total(),
        "chains": c.chain_count,
        "boolean": c.boolean_count,
        "representatives": reps,
    })
}

pub fn classification_csv(c: &Classification) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "partition,ring,is_chain,is_boolean");
    for rep in &c.representatives {
        let _ = writeln!(
            out,
            "{},{},{},{}",
            rep.partition, rep.ring, rep.is_chain, rep.is_boolean
        );
    }
    out
}

pub fn report_text(report: &Report) -> String {
    let mut out = String::new();
    match report {
        Report::Counts(rows) => {
            let w = 9;
            let ns: Vec<String> = rows.iter().map(|r| format!("{:<3}", r.n)).collect();
            let mv: Vec<String> = rows.iter().map(|r| format!("{:<3}", r.mv_count)).collect();
            let bo: Vec<String> = rows
                .iter()
                .map(|r| {
                    if r.boolean_count == 0 {
                        format!("{:<3}", "-")
                    } else {
                        format!("{:<3}", r.boolean_count)
                    }
                })
                .collect();
            let _ = writeln!(out, "{} {}", pad("n", w), ns.join(" ").trim_end());
            let _ = writeln!(out, "{} {}", pad("MV-alg", w), mv.join(" ").trim_end());
            let _ = writeln!(out, "{} {}", pad("Boole alg", w), bo.join(" ").trim_end());
        }
        Report::Verdicts(rows) => {
            let ring_w = rows.iter().map(|r| r.ring.len()).max().unwrap_or(4).max(4);
            let _ = writeln!(out, "{} {} Id(A)", pad("n", 3), pad("ring", ring_w));
            for r in rows {
                let _ = writeln!(
                    out,
                    "{} {} {}",
                    pad(&r.n.to_string(), 3),
                    pad(&r.ring, ring_w),
                    r.verdict
                );
            }
        }
        Report::Generators(rows) => {
            let _ = writeln!(out, "{} {} generators", pad("n", 3), pad("count", 5));
            for r in rows {
                let gens: Vec<String> = r
                    .generators
                    .iter()
                    .map(|g| format!("{} ({})", g.pattern, g.kind))
                    .collect();
                let _ = writeln!(
                    out,
                    "{} {} {}",
                    pad(&r.n.to_string(), 3),
                    pad(&r.count.to_string(), 5),
                    gens.join("; ")
                );
            }
        }
    }
    out
}

pub fn report_json(report: &Report) -> Value {
    match report {
        Report::Counts(rows) => json!({ "table": "table1", "rows": rows }),
        Report::Verdicts(rows) => json!({ "table": "table2", "rows": rows }),
        Report::Generators(rows) => json!({ "table": "table3", "rows": rows }),
    }
}

pub fn report_csv(report: &Report) -> String {
    let mut out = String::new();
    match report {
        Report::Counts(rows) => {
            let _ = writeln!(out, "n,mv_count,boolean_count");
            for r in rows {
                let _ = writeln!(out, "{},{},{}", r.n, r.mv_count, r.boolean_count);
            }
        }
        Report::Verdicts(rows) => {
            let _ = writeln!(out, "n,ring,verdict");
            for r in rows {
                let _ = writeln!(out, "{},{},{}", r.n, r.ring, r.verdict);
            }
        }
        Report::Generators(rows) => {
            let _ = writeln!(out, "n,count,generators");
            for r in rows {
                let gens: Vec<String> = r
                    .generators
                    .iter()
                    .map(|g| format!("{} ({})", g.pattern, g.kind))
                    .collect();
                let _ = writeln!(out, "{},{},{}", r.n, r.count, gens.join("; "));
            }
        }
    }
    out
}
