//! Classification of finite MV-algebras via ring constructions.
//!
//! Every finite MV-algebra is a product of MV-chains, and the chain with
//! `m` elements is unique up to isomorphism (realized by `Id(Z_{p^{m-1}})`).
//! The MV-algebras with `n` elements are therefore indexed by the
//! multiplicative partitions of `n`: each partition `[m1, ..., mk]` yields
//! the ideal lattice of `Z_{p^{m1-1}} x ... x Z_{p^{mk-1}}`, and distinct
//! partitions yield non-isomorphic algebras. [`classify_all`] builds one
//! representative per partition (at `p = 2`) and verifies pairwise
//! non-isomorphism by exhaustive search.

use std::fmt;

use serde::Serialize;

use crate::algebra::{canonical_labels, FiniteAlgebraTable};
use crate::ring::RingSpec;
use crate::suites::{check_suite, SuiteId};
use crate::{Error, Result};

/// Largest carrier for which isomorphism is decided by exhaustive search.
pub const MAX_ISO_SIZE: usize = 12;
/// Bounds for [`classify_all`].
pub const MAX_CLASSIFY_N: u64 = 12;
/// Bound for [`multiplicative_partitions`].
pub const MAX_PARTITION_N: u64 = 1_000_000;

/// An unordered factorization of `n` into integers `>= 2`, stored ascending.
/// The singleton `[n]` is the chain case.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize)]
pub struct MultiplicativePartition {
    factors: Vec<u64>,
}

impl MultiplicativePartition {
    pub fn factors(&self) -> &[u64] {
        &self.factors
    }

    pub fn product(&self) -> u64 {
        self.factors.iter().product()
    }

    pub fn is_singleton(&self) -> bool {
        self.factors.len() == 1
    }

    pub fn is_all_twos(&self) -> bool {
        self.factors.iter().all(|&f| f == 2)
    }
}

impl fmt::Display for MultiplicativePartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for (i, v) in self.factors.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{v}")?;
        }
        write!(f, "]")
    }
}

/// All unordered factorizations of `n` into factors `>= 2`, including the
/// singleton `[n]`. Sorted by factor count, then lexicographically, so the
/// chain case comes first. The count equals `pi(n) + 1` when `pi` counts
/// only the multi-factor decompositions.
pub fn multiplicative_partitions(n: u64) -> Result<Vec<MultiplicativePartition>> {
    if !(2..=MAX_PARTITION_N).contains(&n) {
        return Err(Error::InvalidArgument(format!(
            "partitions need 2 <= n <= {MAX_PARTITION_N}, got {n}"
        )));
    }
    fn go(rest: u64, min_factor: u64, prefix: &mut Vec<u64>, out: &mut Vec<Vec<u64>>) {
        if rest == 1 {
            out.push(prefix.clone());
            return;
        }
        let mut d = min_factor;
        while d * d <= rest {
            if rest.is_multiple_of(d) {
                prefix.push(d);
                go(rest / d, d, prefix, out);
                prefix.pop();
            }
            d += 1;
        }
        if rest >= min_factor {
            prefix.push(rest);
            out.push(prefix.clone());
            prefix.pop();
        }
    }
    let mut raw = Vec::new();
    go(n, 2, &mut Vec::new(), &mut raw);
    let mut parts: Vec<MultiplicativePartition> = raw
        .into_iter()
        .map(|factors| MultiplicativePartition { factors })
        .collect();
    parts.sort_by(|a, b| {
        a.factors
            .len()
            .cmp(&b.factors.len())
            .then_with(|| a.factors.cmp(&b.factors))
    });
    Ok(parts)
}

/// Where an [`MvAlgebra`] came from.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Provenance {
    Ring(RingSpec),
    Chain(usize),
    Partition(MultiplicativePartition),
}

impl fmt::Display for Provenance {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Provenance::Ring(spec) => write!(f, "Id({spec})"),
            Provenance::Chain(m) => write!(f, "chain of {m} elements"),
            Provenance::Partition(p) => write!(f, "partition {p}"),
        }
    }
}

/// A table verified to satisfy the MV suite, with its provenance.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MvAlgebra {
    table: FiniteAlgebraTable,
    provenance: Provenance,
}

impl MvAlgebra {
    /// Wrap a table after running the MV suite on it.
    pub fn new(table: FiniteAlgebraTable, provenance: Provenance) -> Result<Self> {
        let report = check_suite(&table, SuiteId::Mv);
        if !report.pass {
            return Err(Error::SuiteViolation {
                suite: SuiteId::Mv,
                detail: format!("{provenance}: {:?}", report.witnesses),
            });
        }
        if table.size() >= 2 && table.bottom() == table.top() {
            return Err(Error::MalformedTable("0 and 1 must be distinct".into()));
        }
        Ok(Self { table, provenance })
    }

    pub fn table(&self) -> &FiniteAlgebraTable {
        &self.table
    }

    pub fn provenance(&self) -> &Provenance {
        &self.provenance
    }

    pub fn size(&self) -> usize {
        self.table.size()
    }
}

/// The unique MV-chain with `m` elements, built from the closed forms on a
/// `(k+1)`-chain with `k = m - 1`:
/// `imp(i, j) = top` if `i <= j`, else `k - i + j`; `star(i) = k - i`;
/// `oplus(i, j) = min(i + j, k)`; `times(i, j) = max(i + j - k, 0)`.
pub fn chain_mv(m: usize) -> Result<MvAlgebra> {
    if m < 2 {
        return Err(Error::InvalidArgument(format!(
            "an MV-chain needs at least 2 elements, got {m}"
        )));
    }
    let k = m - 1;
    let leq: Vec<Vec<bool>> = (0..m).map(|i| (0..m).map(|j| i <= j).collect()).collect();
    let meet: Vec<Vec<usize>> = (0..m).map(|i| (0..m).map(|j| i.min(j)).collect()).collect();
    let join: Vec<Vec<usize>> = (0..m).map(|i| (0..m).map(|j| i.max(j)).collect()).collect();
    let times: Vec<Vec<usize>> = (0..m)
        .map(|i| (0..m).map(|j| (i + j).saturating_sub(k)).collect())
        .collect();
    let imp: Vec<Vec<usize>> = (0..m)
        .map(|i| (0..m).map(|j| if i <= j { k } else { k - i + j }).collect())
        .collect();
    let table = FiniteAlgebraTable::new(canonical_labels(m), leq, meet, join, times, imp, 0, k)?;
    MvAlgebra::new(table, Provenance::Chain(m))
}

/// The ring whose ideal lattice realizes a partition: factor `m` contributes
/// `Z_{p^{m-1}}`, so the lattice has `prod m = n` elements.
pub fn ring_for_partition(part: &MultiplicativePartition, p: u64) -> Result<RingSpec> {
    RingSpec::new(
        part.factors()
            .iter()
            .map(|&m| (p, (m - 1) as u32))
            .collect(),
    )
}

/// Decide isomorphism of two MV-algebras by backtracking over bijections
/// that preserve `oplus` and `star`. Candidates are pruned by per-element
/// invariants (down-set and up-set size, `oplus`-idempotency, `star`
/// fixedness); bottom and top are pinned first. Returns the witness
/// bijection when one exists.
pub fn is_isomorphic(a: &MvAlgebra, b: &MvAlgebra) -> Result<Option<Vec<usize>>> {
    let (ta, tb) = (a.table(), b.table());
    let m = ta.size();
    if m.max(tb.size()) > MAX_ISO_SIZE {
        return Err(Error::SizeBound {
            what: "isomorphism search",
            limit: MAX_ISO_SIZE as u128,
            actual: m.max(tb.size()) as u128,
        });
    }
    if m != tb.size() {
        return Ok(None);
    }

    // the order definable from (oplus, star, 0): x <= y iff x* (+) y = 1;
    // preserved by any (oplus, star)-isomorphism, unlike the stored leq of
    // an arbitrary table
    fn fingerprint(t: &FiniteAlgebraTable, x: usize) -> (usize, usize, bool, bool) {
        let one = t.star(t.bottom());
        let below = |u: usize, v: usize| t.oplus(t.star(u), v) == one;
        let down = (0..t.size()).filter(|&y| below(y, x)).count();
        let up = (0..t.size()).filter(|&y| below(x, y)).count();
        (down, up, t.oplus(x, x) == x, t.star(x) == x)
    }
    let fa: Vec<_> = (0..m).map(|x| fingerprint(ta, x)).collect();
    let fb: Vec<_> = (0..m).map(|x| fingerprint(tb, x)).collect();
    {
        let mut sa = fa.clone();
        let mut sb = fb.clone();
        sa.sort();
        sb.sort();
        if sa != sb {
            return Ok(None);
        }
    }

    // map[x] = image of x in b, usize::MAX while unassigned; 0 is the unique
    // oplus-identity so it must map to 0, and star-preservation then pins 1
    const UNSET: usize = usize::MAX;
    let mut map = vec![UNSET; m];
    let mut used = vec![false; m];
    map[ta.bottom()] = tb.bottom();
    used[tb.bottom()] = true;
    let (one_a, one_b) = (ta.star(ta.bottom()), tb.star(tb.bottom()));
    if one_a != ta.bottom() {
        if one_b == tb.bottom() {
            return Ok(None);
        }
        if map[one_a] == UNSET {
            map[one_a] = one_b;
            used[one_b] = true;
        }
    }

    fn consistent(ta: &FiniteAlgebraTable, tb: &FiniteAlgebraTable, map: &[usize], x: usize) -> bool {
        const UNSET: usize = usize::MAX;
        for y in 0..ta.size() {
            if map[y] == UNSET {
                continue;
            }
            let sx = ta.star(x);
            if map[sx] != UNSET && tb.star(map[x]) != map[sx] {
                return false;
            }
            for (u, v) in [(x, y), (y, x)] {
                let r = ta.oplus(u, v);
                if map[r] != UNSET && tb.oplus(map[u], map[v]) != map[r] {
                    return false;
                }
            }
        }
        true
    }

    fn search(
        ta: &FiniteAlgebraTable,
        tb: &FiniteAlgebraTable,
        fa: &[(usize, usize, bool, bool)],
        fb: &[(usize, usize, bool, bool)],
        map: &mut Vec<usize>,
        used: &mut Vec<bool>,
    ) -> bool {
        const UNSET: usize = usize::MAX;
        let Some(x) = (0..ta.size()).find(|&x| map[x] == UNSET) else {
            // complete assignment: verify both operations everywhere
            for u in 0..ta.size() {
                if tb.star(map[u]) != map[ta.star(u)] {
                    return false;
                }
                for v in 0..ta.size() {
                    if tb.oplus(map[u], map[v]) != map[ta.oplus(u, v)] {
                        return false;
                    }
                }
            }
            return true;
        };
        for candidate in 0..tb.size() {
            if used[candidate] || fb[candidate] != fa[x] {
                continue;
            }
            map[x] = candidate;
            used[candidate] = true;
            if consistent(ta, tb, map, x)
                && search(ta, tb, fa, fb, map, used)
            {
                return true;
            }
            map[x] = UNSET;
            used[candidate] = false;
        }
        false
    }

    if map.iter().all(|&v| v != UNSET) || search(ta, tb, &fa, &fb, &mut map, &mut used) {
        // tiny algebras may be fully pinned by the constants
        for u in 0..m {
            if tb.star(map[u]) != map[ta.star(u)] {
                return Ok(None);
            }
            for v in 0..m {
                if tb.oplus(map[u], map[v]) != map[ta.oplus(u, v)] {
                    return Ok(None);
                }
            }
        }
        return Ok(Some(map));
    }
    Ok(None)
}

/// One entry of a classification: the partition, the ring realizing it at
/// `p = 2`, and the verified algebra.
#[derive(Debug, Clone)]
pub struct Representative {
    pub partition: MultiplicativePartition,
    pub ring: RingSpec,
    pub algebra: MvAlgebra,
    pub is_chain: bool,
    pub is_boolean: bool,
}

/// All MV-algebras with `n` elements, one per multiplicative partition.
#[derive(Debug, Clone)]
pub struct Classification {
    pub n: u64,
    pub representatives: Vec<Representative>,
    pub chain_count: usize,
    pub boolean_count: usize,
}

impl Classification {
    pub fn total(&self) -> usize {
        self.representatives.len()
    }
}

/// Build one representative per multiplicative partition of `n` (rings at
/// `p = 2`) and verify the representatives are pairwise non-isomorphic.
pub fn classify_all(n: u64) -> Result<Classification> {
    if !(2..=MAX_CLASSIFY_N).contains(&n) {
        return Err(Error::InvalidArgument(format!(
            "classification needs 2 <= n <= {MAX_CLASSIFY_N}, got {n}"
        )));
    }
    let mut representatives = Vec::new();
    for partition in multiplicative_partitions(n)? {
        let ring = ring_for_partition(&partition, 2)?;
        let table = FiniteAlgebraTable::from_ideal_lattice(&ring)?;
        let is_chain = table.is_chain();
        let is_boolean = check_suite(&table, SuiteId::Boolean).pass;
        let algebra = MvAlgebra::new(table, Provenance::Ring(ring.clone()))?;
        representatives.push(Representative {
            partition,
            ring,
            algebra,
            is_chain,
            is_boolean,
        });
    }
    for (i, a) in representatives.iter().enumerate() {
        for b in &representatives[i + 1..] {
            if is_isomorphic(&a.algebra, &b.algebra)?.is_some() {
                return Err(Error::InvalidArgument(format!(
                    "representatives {} and {} are isomorphic",
                    a.partition, b.partition
                )));
            }
        }
    }
    let chain_count = representatives.iter().filter(|r| r.is_chain).count();
    let boolean_count = representatives.iter().filter(|r| r.is_boolean).count();
    Ok(Classification {
        n,
        representatives,
        chain_count,
        boolean_count,
    })
}
