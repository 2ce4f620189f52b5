//! Ideals of a product ring, in two representations.
//!
//! An ideal of `Z_{p1^a1} x ... x Z_{pr^ar}` is determined by an exponent
//! vector `e` with `0 <= e_i <= a_i`: the ideal is
//! `{ x : x_i = 0 mod p_i^{e_i} }`. [`IdealIndex`] carries that vector and
//! implements the five ideal operations as componentwise closed forms:
//!
//! - sum        `min(e_i, f_i)`
//! - product    `min(e_i + f_i, a_i)`
//! - intersect  `max(e_i, f_i)`
//! - quotient   `max(e_i - f_i, 0)`      (`(I : J)`)
//! - annihilator `a_i - e_i`             (`(0 : I)`)
//!
//! The closed forms are not taken on faith: [`ExplicitIdeal`] computes the
//! same operations literally on element sets (`I + J = {i + j}`,
//! `(I : J) = {x : x.J in I}`, ...) and the test suites prove agreement on
//! every ideal pair of every ring up to the size bound.
//!
//! The canonical ideal order is descending lexicographic on exponent vectors.
//! It starts at the zero ideal, ends at the whole ring, and is a linear
//! extension of inclusion.

use std::collections::BTreeSet;
use std::fmt;

use crate::ring::{RingElement, RingSpec};
use crate::{Error, Result};

/// The five ideal operations, used to drive fast-path/oracle comparisons.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum IdealOpKind {
    Sum,
    Product,
    Quotient,
    Annihilator,
    Intersect,
}

impl IdealOpKind {
    pub const ALL: [IdealOpKind; 5] = [
        IdealOpKind::Sum,
        IdealOpKind::Product,
        IdealOpKind::Quotient,
        IdealOpKind::Annihilator,
        IdealOpKind::Intersect,
    ];
}

impl fmt::Display for IdealOpKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            IdealOpKind::Sum => "sum",
            IdealOpKind::Product => "product",
            IdealOpKind::Quotient => "quotient",
            IdealOpKind::Annihilator => "ann",
            IdealOpKind::Intersect => "intersect",
        };
        f.write_str(s)
    }
}

/// An ideal as an exponent vector tied to its ring spec.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct IdealIndex {
    spec: RingSpec,
    exponents: Vec<u32>,
}

impl IdealIndex {
    pub fn new(spec: RingSpec, exponents: Vec<u32>) -> Result<Self> {
        if exponents.len() != spec.factors().len() {
            return Err(Error::InvalidIdealIndex);
        }
        for (e, f) in exponents.iter().zip(spec.factors()) {
            if *e > f.exponent() {
                return Err(Error::InvalidIdealIndex);
            }
        }
        Ok(Self { spec, exponents })
    }

    /// The zero ideal `{0}`, exponent vector `(a_1, ..., a_r)`.
    pub fn zero(spec: &RingSpec) -> Self {
        let exponents = spec.factors().iter().map(|f| f.exponent()).collect();
        Self {
            spec: spec.clone(),
            exponents,
        }
    }

    /// The whole ring `A`, exponent vector `(0, ..., 0)`.
    pub fn full(spec: &RingSpec) -> Self {
        Self {
            spec: spec.clone(),
            exponents: vec![0; spec.factors().len()],
        }
    }

    pub fn spec(&self) -> &RingSpec {
        &self.spec
    }

    pub fn exponents(&self) -> &[u32] {
        &self.exponents
    }

    pub fn is_zero(&self) -> bool {
        self.exponents
            .iter()
            .zip(self.spec.factors())
            .all(|(e, f)| *e == f.exponent())
    }

    pub fn is_full(&self) -> bool {
        self.exponents.iter().all(|e| *e == 0)
    }

    /// `|I| = prod p_i^{a_i - e_i}`.
    pub fn cardinality(&self) -> u128 {
        self.exponents
            .iter()
            .zip(self.spec.factors())
            .map(|(e, f)| (f.prime() as u128).pow(f.exponent() - e))
            .product()
    }

    fn check_same_spec(&self, other: &Self) -> Result<()> {
        if self.spec != other.spec {
            return Err(Error::MismatchedSpecs);
        }
        Ok(())
    }

    fn zip_map(&self, other: &Self, op: impl Fn(u32, u32, u32) -> u32) -> Self {
        let exponents = self
            .exponents
            .iter()
            .zip(&other.exponents)
            .zip(self.spec.factors())
            .map(|((e, f), pp)| op(*e, *f, pp.exponent()))
            .collect();
        Self {
            spec: self.spec.clone(),
            exponents,
        }
    }

    /// `I + J`, the ideal generated by the union.
    pub fn sum(&self, other: &Self) -> Result<Self> {
        self.check_same_spec(other)?;
        Ok(self.zip_map(other, |e, f, _| e.min(f)))
    }

    /// `I (x) J`, the ideal generated by pairwise products.
    pub fn product(&self, other: &Self) -> Result<Self> {
        self.check_same_spec(other)?;
        Ok(self.zip_map(other, |e, f, a| (e + f).min(a)))
    }

    /// `I /\ J` as sets.
    pub fn intersect(&self, other: &Self) -> Result<Self> {
        self.check_same_spec(other)?;
        Ok(self.zip_map(other, |e, f, _| e.max(f)))
    }

    /// `(I : J) = { x : x.J in I }`.
    pub fn quotient(&self, other: &Self) -> Result<Self> {
        self.check_same_spec(other)?;
        Ok(self.zip_map(other, |e, f, _| e.saturating_sub(f)))
    }

    /// `Ann(I) = (0 : I)`.
    pub fn annihilator(&self) -> Self {
        let exponents = self
            .exponents
            .iter()
            .zip(self.spec.factors())
            .map(|(e, f)| f.exponent() - e)
            .collect();
        Self {
            spec: self.spec.clone(),
            exponents,
        }
    }

    /// `I^n`, iterated product with `I^0 = A`.
    pub fn power(&self, n: u32) -> Self {
        let mut acc = Self::full(&self.spec);
        for _ in 0..n {
            acc = acc.product(self).expect("same spec");
        }
        acc
    }

    /// `I + J = A`.
    pub fn is_coprime(&self, other: &Self) -> Result<bool> {
        Ok(self.sum(other)?.is_full())
    }

    /// `I` contained in `J`, i.e. `e_i >= f_i` for all `i`.
    pub fn is_subset_of(&self, other: &Self) -> Result<bool> {
        self.check_same_spec(other)?;
        Ok(self
            .exponents
            .iter()
            .zip(&other.exponents)
            .all(|(e, f)| e >= f))
    }

    /// Membership test by divisibility; works at any ring size.
    pub fn contains_element(&self, x: &RingElement) -> Result<bool> {
        if x.residues().len() != self.exponents.len() {
            return Err(Error::MismatchedSpecs);
        }
        Ok(x.residues()
            .iter()
            .zip(&self.exponents)
            .zip(self.spec.factors())
            .all(|((r, e), f)| *r % f.prime().pow(*e) == 0))
    }

    /// Apply one of the five operations; `other` is ignored for `Annihilator`.
    pub fn apply(&self, kind: IdealOpKind, other: &Self) -> Result<Self> {
        match kind {
            IdealOpKind::Sum => self.sum(other),
            IdealOpKind::Product => self.product(other),
            IdealOpKind::Quotient => self.quotient(other),
            IdealOpKind::Annihilator => Ok(self.annihilator()),
            IdealOpKind::Intersect => self.intersect(other),
        }
    }

    /// Expand to the element set `{ x : x_i = 0 mod p_i^{e_i} }`.
    pub fn materialize(&self) -> Result<ExplicitIdeal> {
        let members: BTreeSet<RingElement> = self
            .spec
            .elements()?
            .into_iter()
            .filter(|x| self.contains_element(x).expect("same spec"))
            .collect();
        Ok(ExplicitIdeal {
            spec: self.spec.clone(),
            members,
        })
    }
}

impl fmt::Display for IdealIndex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, e) in self.exponents.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{e}")?;
        }
        write!(f, ")")
    }
}

impl RingSpec {
    /// All ideals in canonical order: descending lexicographic exponent
    /// vectors, so the zero ideal comes first and the whole ring last, and
    /// every ideal precedes the ideals that contain it.
    pub fn ideals(&self) -> Vec<IdealIndex> {
        let radixes: Vec<u32> = self.factors().iter().map(|f| f.exponent() + 1).collect();
        let mut out = Vec::with_capacity(self.ideal_count() as usize);
        let mut current: Vec<u32> = self.factors().iter().map(|f| f.exponent()).collect();
        loop {
            out.push(IdealIndex {
                spec: self.clone(),
                exponents: current.clone(),
            });
            // decrement, last coordinate fastest
            let mut pos = current.len();
            loop {
                if pos == 0 {
                    return out;
                }
                pos -= 1;
                if current[pos] > 0 {
                    current[pos] -= 1;
                    break;
                }
                current[pos] = radixes[pos] - 1;
            }
        }
    }

    /// Brute-force ideal enumeration: the fixpoint closure of all principal
    /// ideals under pairwise ideal sum. Independent of the exponent-vector
    /// machinery; returns each ideal as an explicit set, sorted.
    pub fn ideals_oracle(&self) -> Result<Vec<ExplicitIdeal>> {
        let elements = self.elements()?;
        let mut found: BTreeSet<BTreeSet<RingElement>> = BTreeSet::new();
        for x in &elements {
            found.insert(ExplicitIdeal::principal(self, x)?.members);
        }
        loop {
            let snapshot: Vec<BTreeSet<RingElement>> = found.iter().cloned().collect();
            let before = found.len();
            for (i, a) in snapshot.iter().enumerate() {
                for b in &snapshot[i..] {
                    let mut sum = BTreeSet::new();
                    for x in a {
                        for y in b {
                            sum.insert(self.add(x, y)?);
                        }
                    }
                    found.insert(sum);
                }
            }
            if found.len() == before {
                break;
            }
        }
        let mut out: Vec<ExplicitIdeal> = found
            .into_iter()
            .map(|members| ExplicitIdeal {
                spec: self.clone(),
                members,
            })
            .collect();
        out.sort();
        Ok(out)
    }
}

/// An ideal as a literal element set; the oracle representation.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
pub struct ExplicitIdeal {
    spec: RingSpec,
    members: BTreeSet<RingElement>,
}

impl ExplicitIdeal {
    /// Validate that `members` really is an ideal: contains 0, closed under
    /// addition and under multiplication by every ring element.
    pub fn from_members(spec: &RingSpec, members: BTreeSet<RingElement>) -> Result<Self> {
        if !members.contains(&spec.zero()) {
            return Err(Error::InvalidArgument("ideal must contain 0".into()));
        }
        for x in &members {
            for y in &members {
                if !members.contains(&spec.add(x, y)?) {
                    return Err(Error::InvalidArgument(
                        "ideal must be closed under addition".into(),
                    ));
                }
            }
            for a in spec.elements()? {
                if !members.contains(&spec.mul(&a, x)?) {
                    return Err(Error::InvalidArgument(
                        "ideal must absorb ring multiplication".into(),
                    ));
                }
            }
        }
        Ok(Self {
            spec: spec.clone(),
            members,
        })
    }

    /// `<x> = { a.x : a in A }`, the principal ideal generated by `x`.
    pub fn principal(spec: &RingSpec, x: &RingElement) -> Result<Self> {
        let mut members = BTreeSet::new();
        for a in spec.elements()? {
            members.insert(spec.mul(&a, x)?);
        }
        Ok(Self {
            spec: spec.clone(),
            members,
        })
    }

    pub fn spec(&self) -> &RingSpec {
        &self.spec
    }

    pub fn members(&self) -> &BTreeSet<RingElement> {
        &self.members
    }

    pub fn cardinality(&self) -> usize {
        self.members.len()
    }

    pub fn contains(&self, x: &RingElement) -> bool {
        self.members.contains(x)
    }

    pub fn is_full(&self) -> bool {
        self.members.len() as u128 == self.spec.cardinality()
    }

    fn check_same_spec(&self, other: &Self) -> Result<()> {
        if self.spec != other.spec {
            return Err(Error::MismatchedSpecs);
        }
        Ok(())
    }

    /// `{ i + j : i in I, j in J }`.
    pub fn sum(&self, other: &Self) -> Result<Self> {
        self.check_same_spec(other)?;
        let mut members = BTreeSet::new();
        for x in &self.members {
            for y in &other.members {
                members.insert(self.spec.add(x, y)?);
            }
        }
        Ok(Self {
            spec: self.spec.clone(),
            members,
        })
    }

    /// All finite sums of pairwise products: the additive closure of
    /// `{ f.g : f in I, g in J }`.
    pub fn product(&self, other: &Self) -> Result<Self> {
        self.check_same_spec(other)?;
        let mut members = BTreeSet::new();
        members.insert(self.spec.zero());
        for x in &self.members {
            for y in &other.members {
                members.insert(self.spec.mul(x, y)?);
            }
        }
        loop {
            let snapshot: Vec<RingElement> = members.iter().cloned().collect();
            let before = members.len();
            for x in &snapshot {
                for y in &snapshot {
                    members.insert(self.spec.add(x, y)?);
                }
            }
            if members.len() == before {
                break;
            }
        }
        Ok(Self {
            spec: self.spec.clone(),
            members,
        })
    }

    /// `(I : J) = { x in A : x.J in I }`.
    pub fn quotient(&self, other: &Self) -> Result<Self> {
        self.check_same_spec(other)?;
        let mut members = BTreeSet::new();
        for x in self.spec.elements()? {
            let mut ok = true;
            for j in &other.members {
                if !self.members.contains(&self.spec.mul(&x, j)?) {
                    ok = false;
                    break;
                }
            }
            if ok {
                members.insert(x);
            }
        }
        Ok(Self {
            spec: self.spec.clone(),
            members,
        })
    }

    /// `Ann(I) = ({0} : I)`.
    pub fn annihilator(&self) -> Result<Self> {
        let zero = Self {
            spec: self.spec.clone(),
            members: std::iter::once(self.spec.zero()).collect(),
        };
        zero.quotient(self)
    }

    pub fn intersect(&self, other: &Self) -> Result<Self> {
        self.check_same_spec(other)?;
        Ok(Self {
            spec: self.spec.clone(),
            members: self.members.intersection(&other.members).cloned().collect(),
        })
    }

    /// Literal-set counterpart of [`IdealIndex::apply`].
    pub fn apply(&self, kind: IdealOpKind, other: &Self) -> Result<Self> {
        match kind {
            IdealOpKind::Sum => self.sum(other),
            IdealOpKind::Product => self.product(other),
            IdealOpKind::Quotient => self.quotient(other),
            IdealOpKind::Annihilator => self.annihilator(),
            IdealOpKind::Intersect => self.intersect(other),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn spec(s: &str) -> RingSpec {
        s.parse().unwrap()
    }

    fn ideal(spec: &RingSpec, exps: &[u32]) -> IdealIndex {
        IdealIndex::new(spec.clone(), exps.to_vec()).unwrap()
    }

    fn members(i: &ExplicitIdeal) -> Vec<Vec<u64>> {
        i.members().iter().map(|e| e.residues().to_vec()).collect()
    }

    #[test]
    fn principal_ideals() {
        let z4 = spec("Z4");
        let two = RingElement::new(vec![2]);
        let gen2 = ExplicitIdeal::principal(&z4, &two).unwrap();
        assert_eq!(members(&gen2), vec![vec![0], vec![2]]);

        let full = ExplicitIdeal::principal(&z4, &z4.one()).unwrap();
        assert!(full.is_full());

        // <3> in Z6: close {3} under + and ring multiplication; 3 is (1,0)
        let z6 = spec("Z6");
        let three = RingElement::new(vec![1, 0]);
        let gen3 = ExplicitIdeal::principal(&z6, &three).unwrap();
        assert_eq!(members(&gen3), vec![vec![0, 0], vec![1, 0]]);
    }

    #[test]
    fn index_validation() {
        let z4 = spec("Z4");
        assert!(IdealIndex::new(z4.clone(), vec![3]).is_err());
        assert!(IdealIndex::new(z4.clone(), vec![0, 0]).is_err());
        assert!(IdealIndex::new(z4, vec![2]).is_ok());
    }

    #[test]
    fn fast_ops_on_known_values() {
        let z4 = spec("Z4");
        let r = ideal(&z4, &[1]);
        // R + R = R, R (x) R = 0, Ann(R) = R, (0 : R) = R
        assert_eq!(r.sum(&r).unwrap(), r);
        assert!(r.product(&r).unwrap().is_zero());
        assert_eq!(r.annihilator(), r);
        assert_eq!(IdealIndex::zero(&z4).quotient(&r).unwrap(), r);
        assert_eq!(r.intersect(&r.annihilator()).unwrap(), r);

        let z8 = spec("Z8");
        let b = ideal(&z8, &[1]);
        let r8 = ideal(&z8, &[2]);
        assert_eq!(b.product(&b).unwrap(), r8); // B (x) B = R
        assert_eq!(r8.quotient(&b).unwrap(), b); // (R : B) = B

        let z6 = spec("Z6");
        // Ann({0,3}) = {0,2,4}: exponents (0,1) -> (1,0)
        assert_eq!(ideal(&z6, &[0, 1]).annihilator(), ideal(&z6, &[1, 0]));

        let z2z4 = spec("Z2xZ4");
        assert_eq!(
            ideal(&z2z4, &[1, 1]).sum(&ideal(&z2z4, &[0, 2])).unwrap(),
            ideal(&z2z4, &[0, 1])
        );
        assert_eq!(
            ideal(&z2z4, &[1, 0])
                .intersect(&ideal(&z2z4, &[0, 2]))
                .unwrap(),
            ideal(&z2z4, &[1, 2])
        );
        // Ann(R) = D where R = {(0,0),(0,2)}, D = Z2 x 2Z4
        assert_eq!(ideal(&z2z4, &[1, 1]).annihilator(), ideal(&z2z4, &[0, 1]));
    }

    #[test]
    fn quotient_identities() {
        let z12 = spec("Z12");
        let full = IdealIndex::full(&z12);
        let zero = IdealIndex::zero(&z12);
        for i in z12.ideals() {
            assert_eq!(i.quotient(&full).unwrap(), i); // (I : A) = I
            assert!(i.quotient(&i).unwrap().is_full()); // (I : I) = A
            assert_eq!(full.quotient(&i).unwrap(), full); // (A : I) = A
        }
        assert_eq!(zero.annihilator(), full); // Ann(0) = A
        assert_eq!(full.annihilator(), zero); // Ann(A) = 0
    }

    #[test]
    fn canonical_ideal_order() {
        let z4 = spec("Z4");
        let ids = z4.ideals();
        assert_eq!(ids.len(), 3);
        assert!(ids[0].is_zero());
        assert!(ids[2].is_full());

        let z2z4 = spec("Z2xZ4");
        let ids = z2z4.ideals();
        assert_eq!(ids.len(), 6);
        let exps: Vec<&[u32]> = ids.iter().map(|i| i.exponents()).collect();
        assert_eq!(
            exps,
            vec![
                &[1, 2][..],
                &[1, 1],
                &[1, 0],
                &[0, 2],
                &[0, 1],
                &[0, 0]
            ]
        );
        // linear extension of inclusion
        for (i, a) in ids.iter().enumerate() {
            for b in &ids[i + 1..] {
                assert!(!b.is_subset_of(a).unwrap() || a == b);
            }
        }
    }

    #[test]
    fn chain_rings_have_chains_of_ideals() {
        let z27 = spec("Z27");
        let ids = z27.ideals();
        assert_eq!(ids.len(), 4); // k + 1
        for pair in ids.windows(2) {
            assert!(pair[0].is_subset_of(&pair[1]).unwrap());
        }
    }

    #[test]
    fn materialize_matches_cardinality() {
        let z2z4 = spec("Z2xZ4");
        let d = ideal(&z2z4, &[0, 1]);
        let set = d.materialize().unwrap();
        assert_eq!(set.cardinality() as u128, d.cardinality());
        assert_eq!(
            members(&set),
            vec![vec![0, 0], vec![0, 2], vec![1, 0], vec![1, 2]]
        );
        assert_eq!(IdealIndex::zero(&z2z4).materialize().unwrap().cardinality(), 1);
    }

    #[test]
    fn explicit_ops_on_known_values() {
        let z4 = spec("Z4");
        let r = ideal(&z4, &[1]).materialize().unwrap();
        let prod = r.product(&r).unwrap();
        assert_eq!(members(&prod), vec![vec![0]]); // I (x) I = {0}

        assert!(r.quotient(&r).unwrap().is_full()); // (I : I) = A

        let z6 = spec("Z6");
        let b = ideal(&z6, &[1, 0]).materialize().unwrap(); // {0,2,4}
        let ann = b.annihilator().unwrap();
        assert_eq!(members(&ann), vec![vec![0, 0], vec![1, 0]]); // {0,3}
    }

    #[test]
    fn oracle_enumeration() {
        let z4 = spec("Z4");
        let oracle = z4.ideals_oracle().unwrap();
        assert_eq!(oracle.len(), 3);
        let sizes: Vec<usize> = oracle.iter().map(|i| i.cardinality()).collect();
        assert!(sizes.contains(&1) && sizes.contains(&2) && sizes.contains(&4));

        let z2z2 = spec("Z2xZ2");
        assert_eq!(z2z2.ideals_oracle().unwrap().len(), 4);

        let z12 = spec("Z12");
        let oracle = z12.ideals_oracle().unwrap();
        assert_eq!(oracle.len(), 6);
        assert_eq!(oracle.len() as u64, z12.ideal_count());
    }

    #[test]
    fn coprimality() {
        let z4 = spec("Z4");
        let r = ideal(&z4, &[1]);
        assert!(!r.is_coprime(&r.annihilator()).unwrap());

        let z2z2 = spec("Z2xZ2");
        let r = ideal(&z2z2, &[1, 0]);
        assert!(r.is_coprime(&r.annihilator()).unwrap());

        let z12 = spec("Z12");
        // {0,6} = 6Z12: divisible by 2 and by 3, exponents (1,1) over Z4 x Z3
        let i = ideal(&z12, &[1, 1]);
        let set = i.materialize().unwrap();
        assert_eq!(set.cardinality(), 2);
        assert!(!i.is_coprime(&i.annihilator()).unwrap());
    }

    #[test]
    fn mismatched_specs_rejected() {
        let a = IdealIndex::zero(&spec("Z4"));
        let b = IdealIndex::zero(&spec("Z9"));
        assert!(matches!(a.sum(&b), Err(Error::MismatchedSpecs)));
        let am = a.materialize().unwrap();
        let bm = b.materialize().unwrap();
        assert!(matches!(am.sum(&bm), Err(Error::MismatchedSpecs)));
    }

    #[test]
    fn from_members_validates() {
        let z4 = spec("Z4");
        let not_ideal: BTreeSet<RingElement> =
            [RingElement::new(vec![0]), RingElement::new(vec![1])]
                .into_iter()
                .collect();
        assert!(ExplicitIdeal::from_members(&z4, not_ideal).is_err());
        let no_zero: BTreeSet<RingElement> = [RingElement::new(vec![2])].into_iter().collect();
        assert!(ExplicitIdeal::from_members(&z4, no_zero).is_err());
        let good: BTreeSet<RingElement> =
            [RingElement::new(vec![0]), RingElement::new(vec![2])]
                .into_iter()
                .collect();
        assert!(ExplicitIdeal::from_members(&z4, good).is_ok());
    }
}
