//! Regeneration of the three summary tables: MV/Boolean counts per size,
//! the lattice verdict of every ring of a given order, and the generator
//! rings behind each MV-algebra size. All contents are recomputed, never
//! transcribed.

use serde::Serialize;
use std::str::FromStr;

use crate::algebra::{FiniteAlgebraTable, LatticeClass};
use crate::classify::{classify_all, multiplicative_partitions, ring_for_partition};
use crate::ring::RingSpec;
use crate::{Error, Result};

pub const MAX_TABLE1_N: u64 = 12;
pub const MAX_TABLE2_ORDER: u64 = 16;
pub const MAX_TABLE3_N: u64 = 12;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ReportKind {
    Table1,
    Table2,
    Table3,
}

impl FromStr for ReportKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "table1" => Ok(ReportKind::Table1),
            "table2" => Ok(ReportKind::Table2),
            "table3" => Ok(ReportKind::Table3),
            other => Err(Error::InvalidArgument(format!(
                "unknown report `{other}`; expected table1, table2 or table3"
            ))),
        }
    }
}

/// Counts of MV-algebras and Boolean algebras with `n` elements.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CountRow {
    pub n: u64,
    pub mv_count: usize,
    pub boolean_count: usize,
}

/// One ring of order `n` and the classification of its ideal lattice.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct VerdictRow {
    pub n: u64,
    pub ring: String,
    pub verdict: LatticeClass,
}

/// One generator pattern `Z_{p^{m1-1}} x ...` behind an MV-algebra size.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct GeneratorEntry {
    pub partition: Vec<u64>,
    /// Symbolic ring pattern with `p` left free, e.g. `Z_p x Z_p^2`.
    pub pattern: String,
    /// `MV chain`, `Boole chain`, `MV` or `Boole`, computed from the suites.
    pub kind: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct GeneratorRow {
    pub n: u64,
    pub count: usize,
    pub generators: Vec<GeneratorEntry>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Report {
    Counts(Vec<CountRow>),
    Verdicts(Vec<VerdictRow>),
    Generators(Vec<GeneratorRow>),
}

/// Recompute one of the summary tables up to `n_max`.
pub fn report_tables(kind: ReportKind, n_max: u64) -> Result<Report> {
    match kind {
        ReportKind::Table1 => {
            check_bound("table1 size", n_max, MAX_TABLE1_N)?;
            let rows = (2..=n_max)
                .map(|n| {
                    let c = classify_all(n)?;
                    Ok(CountRow {
                        n,
                        mv_count: c.total(),
                        boolean_count: c.boolean_count,
                    })
                })
                .collect::<Result<Vec<_>>>()?;
            Ok(Report::Counts(rows))
        }
        ReportKind::Table2 => {
            check_bound("table2 ring order", n_max, MAX_TABLE2_ORDER)?;
            let mut rows = Vec::new();
            for n in 2..=n_max {
                for spec in RingSpec::all_with_cardinality(n) {
                    let table = FiniteAlgebraTable::from_ideal_lattice(&spec)?;
                    rows.push(VerdictRow {
                        n,
                        ring: spec.to_string(),
                        verdict: table.classify(),
                    });
                }
            }
            Ok(Report::Verdicts(rows))
        }
        ReportKind::Table3 => {
            check_bound("table3 size", n_max, MAX_TABLE3_N)?;
            let mut rows = Vec::new();
            for n in 2..=n_max {
                let partitions = multiplicative_partitions(n)?;
                let mut generators = Vec::new();
                for partition in &partitions {
                    let ring = ring_for_partition(partition, 2)?;
                    let table = FiniteAlgebraTable::from_ideal_lattice(&ring)?;
                    let chain = table.is_chain();
                    let boolean = matches!(table.classify(), LatticeClass::Boolean);
                    let kind = match (chain, boolean) {
                        (true, true) => "Boole chain",
                        (true, false) => "MV chain",
                        (false, true) => "Boole",
                        (false, false) => "MV",
                    };
                    generators.push(GeneratorEntry {
                        partition: partition.factors().to_vec(),
                        pattern: pattern_for(partition.factors()),
                        kind: kind.to_string(),
                    });
                }
                rows.push(GeneratorRow {
                    n,
                    count: partitions.len(),
                    generators,
                });
            }
            Ok(Report::Generators(rows))
        }
    }
}

fn check_bound(what: &'static str, n: u64, limit: u64) -> Result<()> {
    if n < 2 || n > limit {
        return Err(Error::SizeBound {
            what,
            limit: limit as u128,
            actual: n as u128,
        });
    }
    Ok(())
}

fn pattern_for(factors: &[u64]) -> String {
    factors
        .iter()
        .map(|&m| {
            if m == 2 {
                "Z_p".to_string()
            } else {
                format!("Z_p^{}", m - 1)
            }
        })
        .collect::<Vec<_>>()
        .join(" x ")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn table1_counts() {
        let Report::Counts(rows) = report_tables(ReportKind::Table1, 8).unwrap() else {
            panic!("wrong report variant");
        };
        let mv: Vec<usize> = rows.iter().map(|r| r.mv_count).collect();
        let boole: Vec<usize> = rows.iter().map(|r| r.boolean_count).collect();
        assert_eq!(mv, vec![1, 1, 2, 1, 2, 1, 3]);
        assert_eq!(boole, vec![1, 0, 1, 0, 0, 0, 1]);
    }

    #[test]
    fn table2_verdicts() {
        let Report::Verdicts(rows) = report_tables(ReportKind::Table2, 10).unwrap() else {
            panic!("wrong report variant");
        };
        let find = |ring: &str| {
            rows.iter()
                .find(|r| r.ring == ring)
                .unwrap_or_else(|| panic!("{ring} missing"))
                .verdict
        };
        assert_eq!(find("Z9"), LatticeClass::MvNotBoolean);
        assert_eq!(find("Z4"), LatticeClass::MvNotBoolean);
        assert_eq!(find("Z2 x Z2"), LatticeClass::Boolean);
        assert_eq!(find("Z2 x Z3"), LatticeClass::Boolean);
        assert_eq!(find("Z2 x Z4"), LatticeClass::MvNotBoolean);
        assert!(rows
            .iter()
            .all(|r| matches!(r.verdict, LatticeClass::Boolean | LatticeClass::MvNotBoolean)));
    }

    #[test]
    fn table3_generators() {
        let Report::Generators(rows) = report_tables(ReportKind::Table3, 8).unwrap() else {
            panic!("wrong report variant");
        };
        let row6 = rows.iter().find(|r| r.n == 6).unwrap();
        assert_eq!(row6.count, 2);
        assert_eq!(row6.generators[0].pattern, "Z_p^5");
        assert_eq!(row6.generators[0].kind, "MV chain");
        assert_eq!(row6.generators[1].pattern, "Z_p x Z_p^2");
        assert_eq!(row6.generators[1].kind, "MV");

        let row8 = rows.iter().find(|r| r.n == 8).unwrap();
        assert_eq!(row8.count, 3);
        assert_eq!(row8.generators[2].pattern, "Z_p x Z_p x Z_p");
        assert_eq!(row8.generators[2].kind, "Boole");

        let row2 = rows.iter().find(|r| r.n == 2).unwrap();
        assert_eq!(row2.generators[0].kind, "Boole chain");
    }

    #[test]
    fn bounds() {
        assert!(report_tables(ReportKind::Table1, 13).is_err());
        assert!(report_tables(ReportKind::Table2, 17).is_err());
        assert!(report_tables(ReportKind::Table3, 1).is_err());
    }
}
