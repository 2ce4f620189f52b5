//! Exhaustive axiom suites over [`FiniteAlgebraTable`]s.
//!
//! Each suite evaluates a family of laws over every tuple of carrier
//! elements, in lexicographic scan order, and reports the first failing tuple
//! per law (at most ten witnesses per suite). Nothing is assumed about the
//! input table, so the checkers also work on deliberately corrupted tables.
//!
//! Three suites (`prop35`, `prop3181`, `prop333`) are agreement bundles: a
//! list of conditions that are equivalent on genuine residuated lattices.
//! Such a bundle passes when the conditions all hold or all fail together;
//! the report records each condition's individual truth so a broken
//! equivalence can be pinpointed.

use std::fmt;
use std::str::FromStr;

use serde::Serialize;

use crate::algebra::FiniteAlgebraTable;
use crate::{Error, Result};

/// Identifier of one axiom suite.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub enum SuiteId {
    Residuated,
    Bck,
    Chang,
    Wajsberg,
    Mv,
    Divisible,
    DoubleNegation,
    Heyting,
    Boolean,
    Prop35,
    Prop3181,
    Prop333,
}

impl SuiteId {
    pub const ALL: [SuiteId; 12] = [
        SuiteId::Residuated,
        SuiteId::Bck,
        SuiteId::Chang,
        SuiteId::Wajsberg,
        SuiteId::Mv,
        SuiteId::Divisible,
        SuiteId::DoubleNegation,
        SuiteId::Heyting,
        SuiteId::Boolean,
        SuiteId::Prop35,
        SuiteId::Prop3181,
        SuiteId::Prop333,
    ];

    /// Suites that hold on the ideal lattice of every finite commutative
    /// unitary ring; the default set for `check`.
    pub const UNIVERSAL: [SuiteId; 10] = [
        SuiteId::Residuated,
        SuiteId::Bck,
        SuiteId::Chang,
        SuiteId::Wajsberg,
        SuiteId::Mv,
        SuiteId::Divisible,
        SuiteId::DoubleNegation,
        SuiteId::Prop35,
        SuiteId::Prop3181,
        SuiteId::Prop333,
    ];

    pub fn as_str(&self) -> &'static str {
        match self {
            SuiteId::Residuated => "residuated",
            SuiteId::Bck => "bck",
            SuiteId::Chang => "chang",
            SuiteId::Wajsberg => "wajsberg",
            SuiteId::Mv => "mv",
            SuiteId::Divisible => "divisible",
            SuiteId::DoubleNegation => "double_negation",
            SuiteId::Heyting => "heyting",
            SuiteId::Boolean => "boolean",
            SuiteId::Prop35 => "prop35",
            SuiteId::Prop3181 => "prop3181",
            SuiteId::Prop333 => "prop333",
        }
    }
}

impl fmt::Display for SuiteId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for SuiteId {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        SuiteId::ALL
            .into_iter()
            .find(|id| id.as_str() == s)
            .ok_or_else(|| Error::UnknownSuite(s.to_string()))
    }
}

/// First failing tuple of one law.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Witness {
    pub axiom: &'static str,
    pub tuple: Vec<usize>,
}

/// Truth value of one condition in an agreement bundle.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Condition {
    pub id: &'static str,
    pub holds: bool,
}

/// Result of running one suite over a table.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SuiteReport {
    pub suite: SuiteId,
    pub pass: bool,
    pub witnesses: Vec<Witness>,
    /// Per-condition truth, populated only for agreement bundles.
    pub conditions: Vec<Condition>,
}

const WITNESS_CAP: usize = 10;

/// Accumulates one witness per axiom, capped per suite.
struct Law<'t> {
    t: &'t FiniteAlgebraTable,
    witnesses: Vec<Witness>,
}

impl<'t> Law<'t> {
    fn new(t: &'t FiniteAlgebraTable) -> Self {
        Self {
            t,
            witnesses: Vec::new(),
        }
    }

    fn m(&self) -> usize {
        self.t.size()
    }

    fn record(&mut self, axiom: &'static str, tuple: Vec<usize>) {
        if self.witnesses.len() < WITNESS_CAP {
            self.witnesses.push(Witness { axiom, tuple });
        }
    }

    /// Scan all unary instances; record the first failure. Returns whether
    /// the law holds everywhere.
    fn unary(&mut self, axiom: &'static str, law: impl Fn(&FiniteAlgebraTable, usize) -> bool) -> bool {
        for x in 0..self.m() {
            if !law(self.t, x) {
                self.record(axiom, vec![x]);
                return false;
            }
        }
        true
    }

    fn binary(
        &mut self,
        axiom: &'static str,
        law: impl Fn(&FiniteAlgebraTable, usize, usize) -> bool,
    ) -> bool {
        for x in 0..self.m() {
            for y in 0..self.m() {
                if !law(self.t, x, y) {
                    self.record(axiom, vec![x, y]);
                    return false;
                }
            }
        }
        true
    }

    fn ternary(
        &mut self,
        axiom: &'static str,
        law: impl Fn(&FiniteAlgebraTable, usize, usize, usize) -> bool,
    ) -> bool {
        for x in 0..self.m() {
            for y in 0..self.m() {
                for z in 0..self.m() {
                    if !law(self.t, x, y, z) {
                        self.record(axiom, vec![x, y, z]);
                        return false;
                    }
                }
            }
        }
        true
    }
}

/// Run one suite over `t`, scanning every tuple.
pub fn check_suite(t: &FiniteAlgebraTable, suite: SuiteId) -> SuiteReport {
    let mut law = Law::new(t);
    let mut conditions = Vec::new();
    let pass = match suite {
        SuiteId::Residuated => residuated(&mut law),
        SuiteId::Bck => bck(&mut law),
        SuiteId::Chang => chang(&mut law),
        SuiteId::Wajsberg => wajsberg(&mut law),
        SuiteId::Mv => mv(&mut law),
        SuiteId::Divisible => {
            law.binary("div", |t, x, y| t.times(x, t.imp(x, y)) == t.meet(x, y))
        }
        SuiteId::DoubleNegation => law.unary("DN", |t, x| t.star(t.star(x)) == x),
        SuiteId::Heyting => law.unary("idempotent", |t, x| t.times(x, x) == x),
        SuiteId::Boolean => law.unary("complement", |t, x| t.join(x, t.star(x)) == t.top()),
        SuiteId::Prop35 => agreement(&mut law, &mut conditions, prop35_conditions()),
        SuiteId::Prop3181 => agreement(&mut law, &mut conditions, prop3181_conditions()),
        SuiteId::Prop333 => agreement(&mut law, &mut conditions, prop333_conditions()),
    };
    let mut witnesses = law.witnesses;
    if pass {
        // agreement bundles may record counterexamples of individually false
        // conditions even when the bundle agrees
        witnesses.clear();
    }
    SuiteReport {
        suite,
        pass,
        witnesses,
        conditions,
    }
}

fn residuated(law: &mut Law) -> bool {
    let mut ok = law.unary("LR1.reflexive", |t, x| t.leq(x, x));
    ok &= law.binary("LR1.antisymmetric", |t, x, y| {
        !(t.leq(x, y) && t.leq(y, x)) || x == y
    });
    ok &= law.ternary("LR1.transitive", |t, x, y, z| {
        !(t.leq(x, y) && t.leq(y, z)) || t.leq(x, z)
    });
    ok &= law.unary("LR1.bottom", |t, x| t.leq(t.bottom(), x));
    ok &= law.unary("LR1.top", |t, x| t.leq(x, t.top()));
    ok &= law.ternary("LR1.meet", |t, x, y, z| {
        let m = t.meet(x, y);
        t.leq(m, x) && t.leq(m, y) && (!(t.leq(z, x) && t.leq(z, y)) || t.leq(z, m))
    });
    ok &= law.ternary("LR1.join", |t, x, y, z| {
        let j = t.join(x, y);
        t.leq(x, j) && t.leq(y, j) && (!(t.leq(x, z) && t.leq(y, z)) || t.leq(j, z))
    });
    ok &= law.binary("LR2.commutative", |t, x, y| t.times(x, y) == t.times(y, x));
    ok &= law.ternary("LR2.associative", |t, x, y, z| {
        t.times(t.times(x, y), z) == t.times(x, t.times(y, z))
    });
    ok &= law.unary("LR2.unit", |t, x| t.times(x, t.top()) == x);
    ok &= law.ternary("LR2.monotone", |t, x, y, z| {
        !t.leq(x, y) || t.leq(t.times(x, z), t.times(y, z))
    });
    ok &= law.ternary("LR3.adjoint", |t, x, y, z| {
        t.leq(z, t.imp(x, y)) == t.leq(t.times(x, z), y)
    });
    ok
}

fn bck(law: &mut Law) -> bool {
    let mut ok = law.ternary("BCK1", |t, x, y, z| {
        t.leq(t.imp(x, y), t.imp(t.imp(y, z), t.imp(x, z)))
    });
    ok &= law.binary("BCK2", |t, x, y| t.leq(x, t.imp(t.imp(x, y), y)));
    ok &= law.binary("BCK3", |t, x, y| t.leq(x, y) == (t.imp(x, y) == t.top()));
    ok
}

fn chang(law: &mut Law) -> bool {
    law.binary("C", |t, x, y| t.join(x, y) == t.imp(t.imp(x, y), y))
}

fn wajsberg(law: &mut Law) -> bool {
    let mut ok = law.unary("W1", |t, x| t.imp(t.top(), x) == x);
    ok &= law.ternary("W2", |t, x, y, z| {
        t.imp(t.imp(x, y), t.imp(t.imp(y, z), t.imp(x, z))) == t.top()
    });
    ok &= law.binary("W3", |t, x, y| {
        t.imp(t.imp(x, y), y) == t.imp(t.imp(y, x), x)
    });
    ok &= law.binary("W4", |t, x, y| {
        t.imp(t.imp(t.star(x), t.star(y)), t.imp(y, x)) == t.top()
    });
    ok
}

fn mv(law: &mut Law) -> bool {
    let mut ok = law.binary("oplus.commutative", |t, x, y| {
        t.oplus(x, y) == t.oplus(y, x)
    });
    ok &= law.ternary("oplus.associative", |t, x, y, z| {
        t.oplus(t.oplus(x, y), z) == t.oplus(x, t.oplus(y, z))
    });
    ok &= law.unary("oplus.unit", |t, x| t.oplus(x, t.bottom()) == x);
    ok &= law.unary("MV1", |t, x| t.star(t.star(x)) == x);
    ok &= law.unary("MV2", |t, x| {
        t.oplus(x, t.star(t.bottom())) == t.star(t.bottom())
    });
    ok &= law.binary("MV3", |t, x, y| {
        t.oplus(t.star(t.oplus(t.star(x), y)), y) == t.oplus(t.star(t.oplus(t.star(y), x)), x)
    });
    ok
}

type Cond = (&'static str, fn(&mut Law) -> bool);

/// Equivalent characterizations of the Chang condition on a residuated
/// lattice.
fn prop35_conditions() -> Vec<Cond> {
    vec![
        ("i", |law| {
            law.binary("prop35.i", |t, x, y| {
                t.imp(t.imp(x, y), y) == t.imp(t.imp(y, x), x)
            })
        }),
        ("ii", |law| {
            law.binary("prop35.ii", |t, x, y| t.join(x, y) == t.imp(t.imp(x, y), y))
        }),
        ("iii", |law| {
            let mut ok = law.unary("prop35.iii.dn", |t, x| t.star(t.star(x)) == x);
            ok &= law.binary("prop35.iii.div", |t, x, y| {
                t.meet(x, y) == t.times(x, t.imp(x, y))
            });
            ok &= law.binary("prop35.iii.prelinear", |t, x, y| {
                t.join(t.imp(x, y), t.imp(y, x)) == t.top()
            });
            ok
        }),
        ("iv", |law| {
            law.binary("prop35.iv", |t, x, y| {
                t.imp(t.imp(t.imp(x, y), y), x) == t.imp(y, x)
            })
        }),
        ("v", |law| {
            law.binary("prop35.v", |t, x, y| {
                !t.leq(x, y) || t.leq(t.imp(t.imp(y, x), x), y)
            })
        }),
    ]
}

/// Equivalent characterizations of an idempotent (Heyting) product.
fn prop3181_conditions() -> Vec<Cond> {
    vec![
        ("i", |law| {
            law.ternary("prop3181.i", |t, x, y, z| {
                !(t.leq(t.times(x, y), z) && t.leq(x, y)) || t.leq(x, z)
            })
        }),
        ("ii", |law| {
            // D_z = { x : z <= x } is a deductive system: contains top and is
            // closed under modus ponens
            let mut ok = law.unary("prop3181.ii.top", |t, z| t.leq(z, t.top()));
            ok &= law.ternary("prop3181.ii.mp", |t, z, x, y| {
                !(t.leq(z, x) && t.leq(z, t.imp(x, y))) || t.leq(z, y)
            });
            ok
        }),
        ("iii", |law| {
            law.binary("prop3181.iii", |t, x, y| {
                !t.leq(t.times(x, x), y) || t.leq(x, y)
            })
        }),
        ("iv", |law| {
            law.ternary("prop3181.iv", |t, x, y, z| {
                !t.leq(t.times(x, y), z) || t.leq(t.times(x, t.imp(x, y)), z)
            })
        }),
        ("v", |law| {
            law.unary("prop3181.v", |t, x| t.times(x, x) == x)
        }),
    ]
}

/// Equivalent characterizations of a Boolean residuated lattice.
fn prop333_conditions() -> Vec<Cond> {
    vec![
        ("i", |law| {
            let mut ok = law.unary("prop333.i.idem", |t, x| t.times(x, x) == x);
            ok &= law.unary("prop333.i.dn", |t, x| t.star(t.star(x)) == x);
            ok
        }),
        ("ii", |law| {
            let mut ok = law.unary("prop333.ii.idem", |t, x| t.times(x, x) == x);
            ok &= law.unary("prop333.ii.dense", |t, y| {
                t.star(y) != t.bottom() || y == t.top()
            });
            ok
        }),
        ("iii", |law| {
            law.unary("prop333.iii", |t, x| t.join(x, t.star(x)) == t.top())
        }),
    ]
}

fn agreement(law: &mut Law, out: &mut Vec<Condition>, conds: Vec<Cond>) -> bool {
    let mut truths = Vec::with_capacity(conds.len());
    for (id, run) in conds {
        let holds = run(law);
        out.push(Condition { id, holds });
        truths.push(holds);
    }
    truths.windows(2).all(|w| w[0] == w[1])
}
