//! Finite residuated-lattice candidates as Cayley tables.
//!
//! A [`FiniteAlgebraTable`] stores the order relation and the four binary
//! operations (meet, join, times, imp) over an indexed carrier together with
//! the two constants. Nothing about the tables is assumed: the axiom suites
//! in [`crate::suites`] check every law exhaustively, so deliberately broken
//! tables (see [`FiniteAlgebraTable::mutate_imp`]) are representable and are
//! used to prove the checkers can detect violations.
//!
//! [`FiniteAlgebraTable::from_ideal_lattice`] builds the table of
//! `(Id(A), /\, +, (x), ->, {0}, A)` with `I -> J = (J : I)` over the
//! canonical ideal order.

use crate::ideal::IdealIndex;
use crate::ring::RingSpec;
use crate::suites::{check_suite, SuiteId};
use crate::{Error, Result};

/// Largest carrier for which an ideal-lattice table is built.
pub const MAX_CARRIER: u64 = 4096;

/// Cayley tables for `(carrier, meet, join, times, imp, bottom, top)` plus
/// the order relation they are supposed to realize.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FiniteAlgebraTable {
    size: usize,
    names: Vec<String>,
    leq: Vec<Vec<bool>>,
    meet: Vec<Vec<usize>>,
    join: Vec<Vec<usize>>,
    times: Vec<Vec<usize>>,
    imp: Vec<Vec<usize>>,
    bottom: usize,
    top: usize,
}

/// Derived unary/binary operations, all defined from `imp` and `bottom`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum DerivedOp {
    /// `x* = x -> 0`
    Star,
    /// `x (+) y = x* -> y`
    Oplus,
    /// table lookup of `->`
    Imp,
}

/// Verdict of [`FiniteAlgebraTable::classify`].
#[derive(Debug, Clone, Copy, PartialEq, Eq, serde::Serialize)]
pub enum LatticeClass {
    Boolean,
    MvNotBoolean,
    HeytingNotMv,
    Other,
}

impl std::fmt::Display for LatticeClass {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let s = match self {
            LatticeClass::Boolean => "Boolean algebra",
            LatticeClass::MvNotBoolean => "MV-algebra (not Boolean)",
            LatticeClass::HeytingNotMv => "Heyting algebra (not MV)",
            LatticeClass::Other => "other",
        };
        f.write_str(s)
    }
}

impl FiniteAlgebraTable {
    /// Shape-check a raw table. Axioms are deliberately not verified here;
    /// run the suites for that.
    #[allow(clippy::too_many_arguments)]
    pub fn new(
        names: Vec<String>,
        leq: Vec<Vec<bool>>,
        meet: Vec<Vec<usize>>,
        join: Vec<Vec<usize>>,
        times: Vec<Vec<usize>>,
        imp: Vec<Vec<usize>>,
        bottom: usize,
        top: usize,
    ) -> Result<Self> {
        let m = names.len();
        if m == 0 {
            return Err(Error::MalformedTable("empty carrier".into()));
        }
        if bottom >= m || top >= m {
            return Err(Error::MalformedTable("constants out of range".into()));
        }
        if leq.len() != m || leq.iter().any(|row| row.len() != m) {
            return Err(Error::MalformedTable("leq is not m x m".into()));
        }
        for (label, table) in [("meet", &meet), ("join", &join), ("times", &times), ("imp", &imp)]
        {
            if table.len() != m || table.iter().any(|row| row.len() != m) {
                return Err(Error::MalformedTable(format!("{label} is not m x m")));
            }
            if table.iter().flatten().any(|&v| v >= m) {
                return Err(Error::MalformedTable(format!("{label} entry out of range")));
            }
        }
        Ok(Self {
            size: m,
            names,
            leq,
            meet,
            join,
            times,
            imp,
            bottom,
            top,
        })
    }

    /// The residuated lattice of ideals of `spec` over the canonical ideal
    /// order: meet is intersection, join is sum, times is ideal product and
    /// `imp(I, J) = (J : I)`.
    pub fn from_ideal_lattice(spec: &RingSpec) -> Result<Self> {
        let n = spec.ideal_count();
        if n > MAX_CARRIER {
            return Err(Error::SizeBound {
                what: "ideal lattice carrier",
                limit: MAX_CARRIER as u128,
                actual: n as u128,
            });
        }
        let carrier = spec.ideals();
        let m = carrier.len();
        let positions: std::collections::HashMap<&[u32], usize> = carrier
            .iter()
            .enumerate()
            .map(|(i, ideal)| (ideal.exponents(), i))
            .collect();
        let index_of = |ideal: &IdealIndex| -> usize {
            positions[ideal.exponents()]
        };
        let mut leq = vec![vec![false; m]; m];
        let mut meet = vec![vec![0usize; m]; m];
        let mut join = vec![vec![0usize; m]; m];
        let mut times = vec![vec![0usize; m]; m];
        let mut imp = vec![vec![0usize; m]; m];
        for (i, a) in carrier.iter().enumerate() {
            for (j, b) in carrier.iter().enumerate() {
                leq[i][j] = a.is_subset_of(b).expect("same spec");
                meet[i][j] = index_of(&a.intersect(b).expect("same spec"));
                join[i][j] = index_of(&a.sum(b).expect("same spec"));
                times[i][j] = index_of(&a.product(b).expect("same spec"));
                imp[i][j] = index_of(&b.quotient(a).expect("same spec"));
            }
        }
        Self::new(canonical_labels(m), leq, meet, join, times, imp, 0, m - 1)
    }

    pub fn size(&self) -> usize {
        self.size
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn name(&self, i: usize) -> &str {
        &self.names[i]
    }

    pub fn bottom(&self) -> usize {
        self.bottom
    }

    pub fn top(&self) -> usize {
        self.top
    }

    pub fn leq(&self, x: usize, y: usize) -> bool {
        self.leq[x][y]
    }

    pub fn meet(&self, x: usize, y: usize) -> usize {
        self.meet[x][y]
    }

    pub fn join(&self, x: usize, y: usize) -> usize {
        self.join[x][y]
    }

    pub fn times(&self, x: usize, y: usize) -> usize {
        self.times[x][y]
    }

    pub fn imp(&self, x: usize, y: usize) -> usize {
        self.imp[x][y]
    }

    pub fn imp_rows(&self) -> &[Vec<usize>] {
        &self.imp
    }

    /// `x* = x -> bottom`.
    pub fn star(&self, x: usize) -> usize {
        self.imp[x][self.bottom]
    }

    /// `x (+) y = x* -> y`.
    pub fn oplus(&self, x: usize, y: usize) -> usize {
        self.imp[self.star(x)][y]
    }

    /// Bounds-checked derived operation; `y` is ignored for `Star`.
    pub fn derived(&self, kind: DerivedOp, x: usize, y: usize) -> Result<usize> {
        if x >= self.size {
            return Err(Error::IndexOutOfRange);
        }
        match kind {
            DerivedOp::Star => Ok(self.star(x)),
            _ if y >= self.size => Err(Error::IndexOutOfRange),
            DerivedOp::Oplus => Ok(self.oplus(x, y)),
            DerivedOp::Imp => Ok(self.imp[x][y]),
        }
    }

    /// Copy of the table with one imp entry overwritten. The result is
    /// shape-valid but typically violates the axiom suites; suites must
    /// report the damage rather than trust any table.
    pub fn mutate_imp(&self, x: usize, y: usize, value: usize) -> Result<Self> {
        if x >= self.size || y >= self.size || value >= self.size {
            return Err(Error::IndexOutOfRange);
        }
        let mut out = self.clone();
        out.imp[x][y] = value;
        Ok(out)
    }

    /// True when `leq` is a total order.
    pub fn is_chain(&self) -> bool {
        (0..self.size).all(|i| (0..self.size).all(|j| self.leq[i][j] || self.leq[j][i]))
    }

    /// Boolean iff the boolean suite passes; MV iff Chang holds; Heyting iff
    /// times is idempotent.
    pub fn classify(&self) -> LatticeClass {
        let boolean = check_suite(self, SuiteId::Boolean).pass;
        if boolean {
            return LatticeClass::Boolean;
        }
        let chang = check_suite(self, SuiteId::Chang).pass;
        if chang {
            return LatticeClass::MvNotBoolean;
        }
        if check_suite(self, SuiteId::Heyting).pass {
            return LatticeClass::HeytingNotMv;
        }
        LatticeClass::Other
    }
}

/// Deterministic carrier labels in the style used throughout the reports:
/// first element `O`, last element `E`, the rest drawn from a fixed letter
/// pool, falling back to `i<position>` when the pool runs out.
pub fn canonical_labels(m: usize) -> Vec<String> {
    const POOL: [char; 22] = [
        'R', 'B', 'C', 'D', 'F', 'G', 'H', 'J', 'K', 'L', 'M', 'N', 'P', 'Q', 'S', 'T', 'U', 'V',
        'W', 'X', 'Y', 'Z',
    ];
    if m == 1 {
        return vec!["O".to_string()];
    }
    let mut out = Vec::with_capacity(m);
    out.push("O".to_string());
    for k in 0..m.saturating_sub(2) {
        match POOL.get(k) {
            Some(c) => out.push(c.to_string()),
            None => out.push(format!("i{}", k + 1)),
        }
    }
    out.push("E".to_string());
    out
}
