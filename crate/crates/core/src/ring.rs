//! Finite commutative unitary rings `Z_{k1} x ... x Z_{kr}` with prime-power
//! `k_i`, their elements, and componentwise arithmetic.
//!
//! A [`RingSpec`] is the single source of truth for the ring: an ordered list
//! of prime-power factors in canonical form (sorted ascending by
//! `(prime, exponent)`). Composite moduli in the text grammar are split into
//! prime-power factors, so `Z6` and `Z2xZ3` name the same spec. Elements are
//! residue tuples; the canonical element order is mixed-radix ascending with
//! the last factor varying fastest.

use std::fmt;
use std::str::FromStr;

use serde::Serialize;

use crate::{Error, Result};

/// Largest ring order the text parser accepts.
pub const MAX_PARSE_ORDER: u128 = 1 << 16;
/// Largest ring order for which elements are enumerated exhaustively.
pub const MAX_EXHAUSTIVE_ORDER: u128 = 256;

/// One factor `Z_{p^a}` of a product ring.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub struct PrimePower {
    prime: u64,
    exponent: u32,
}

impl PrimePower {
    pub fn new(prime: u64, exponent: u32) -> Result<Self> {
        if !is_prime(prime) {
            return Err(Error::ParseSpec(format!("{prime} is not prime")));
        }
        if exponent == 0 {
            return Err(Error::ParseSpec("exponent must be at least 1".into()));
        }
        prime
            .checked_pow(exponent)
            .ok_or_else(|| Error::ParseSpec(format!("{prime}^{exponent} overflows")))?;
        Ok(Self { prime, exponent })
    }

    pub fn prime(&self) -> u64 {
        self.prime
    }

    pub fn exponent(&self) -> u32 {
        self.exponent
    }

    /// The factor's modulus `p^a`.
    pub fn modulus(&self) -> u64 {
        self.prime.pow(self.exponent)
    }
}

/// A finite commutative unitary ring as its canonical prime-power factor list.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub struct RingSpec {
    factors: Vec<PrimePower>,
}

/// An element of a product ring: one residue per factor.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub struct RingElement {
    residues: Vec<u64>,
}

impl RingElement {
    pub fn new(residues: Vec<u64>) -> Self {
        Self { residues }
    }

    pub fn residues(&self) -> &[u64] {
        &self.residues
    }
}

impl fmt::Display for RingElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.residues.len() == 1 {
            return write!(f, "{}", self.residues[0]);
        }
        write!(f, "(")?;
        for (i, r) in self.residues.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{r}")?;
        }
        write!(f, ")")
    }
}

impl RingSpec {
    /// Build a spec from `(prime, exponent)` pairs; the list is sorted into
    /// canonical form, so two specs compare equal iff they name the same ring.
    pub fn new(factors: Vec<(u64, u32)>) -> Result<Self> {
        if factors.is_empty() {
            return Err(Error::ParseSpec("a ring needs at least one factor".into()));
        }
        let mut parsed = factors
            .into_iter()
            .map(|(p, a)| PrimePower::new(p, a))
            .collect::<Result<Vec<_>>>()?;
        parsed.sort();
        Ok(Self { factors: parsed })
    }

    pub fn factors(&self) -> &[PrimePower] {
        &self.factors
    }

    /// Number of ring elements, `prod p_i^{a_i}`.
    pub fn cardinality(&self) -> u128 {
        self.factors
            .iter()
            .map(|f| f.modulus() as u128)
            .product()
    }

    /// Number of ideals, `prod (a_i + 1)`.
    pub fn ideal_count(&self) -> u64 {
        self.factors
            .iter()
            .map(|f| f.exponent as u64 + 1)
            .product()
    }

    /// True when every exponent is 1, i.e. the ring is a product of fields
    /// (the Von Neumann regular case).
    pub fn is_product_of_fields(&self) -> bool {
        self.factors.iter().all(|f| f.exponent == 1)
    }

    pub fn zero(&self) -> RingElement {
        RingElement::new(vec![0; self.factors.len()])
    }

    pub fn one(&self) -> RingElement {
        RingElement::new(vec![1; self.factors.len()])
    }

    fn check_element(&self, x: &RingElement) -> Result<()> {
        if x.residues.len() != self.factors.len() {
            return Err(Error::MismatchedSpecs);
        }
        for (r, f) in x.residues.iter().zip(&self.factors) {
            if *r >= f.modulus() {
                return Err(Error::InvalidElement);
            }
        }
        Ok(())
    }

    pub fn add(&self, x: &RingElement, y: &RingElement) -> Result<RingElement> {
        self.check_element(x)?;
        self.check_element(y)?;
        let residues = x
            .residues
            .iter()
            .zip(&y.residues)
            .zip(&self.factors)
            .map(|((a, b), f)| (a + b) % f.modulus())
            .collect();
        Ok(RingElement::new(residues))
    }

    pub fn mul(&self, x: &RingElement, y: &RingElement) -> Result<RingElement> {
        self.check_element(x)?;
        self.check_element(y)?;
        let residues = x
            .residues
            .iter()
            .zip(&y.residues)
            .zip(&self.factors)
            .map(|((a, b), f)| {
                let m = f.modulus() as u128;
                ((*a as u128 * *b as u128) % m) as u64
            })
            .collect();
        Ok(RingElement::new(residues))
    }

    pub fn neg(&self, x: &RingElement) -> Result<RingElement> {
        self.check_element(x)?;
        let residues = x
            .residues
            .iter()
            .zip(&self.factors)
            .map(|(a, f)| (f.modulus() - a) % f.modulus())
            .collect();
        Ok(RingElement::new(residues))
    }

    fn require_exhaustive(&self, what: &'static str) -> Result<usize> {
        let n = self.cardinality();
        if n > MAX_EXHAUSTIVE_ORDER {
            return Err(Error::SizeBound {
                what,
                limit: MAX_EXHAUSTIVE_ORDER,
                actual: n,
            });
        }
        Ok(n as usize)
    }

    /// All elements in canonical order: mixed-radix ascending, last factor
    /// varying fastest. Deterministic and a bijection onto the tuple space.
    pub fn elements(&self) -> Result<Vec<RingElement>> {
        let n = self.require_exhaustive("element enumeration")?;
        let mut out = Vec::with_capacity(n);
        let mut current = vec![0u64; self.factors.len()];
        loop {
            out.push(RingElement::new(current.clone()));
            // increment with the last factor as the fastest digit
            let mut pos = self.factors.len();
            loop {
                if pos == 0 {
                    return Ok(out);
                }
                pos -= 1;
                current[pos] += 1;
                if current[pos] < self.factors[pos].modulus() {
                    break;
                }
                current[pos] = 0;
            }
        }
    }

    /// All canonical specs with exactly `n` elements.
    pub fn all_with_cardinality(n: u64) -> Vec<RingSpec> {
        if n < 2 {
            return Vec::new();
        }
        let mut per_prime: Vec<Vec<Vec<(u64, u32)>>> = Vec::new();
        for (p, a) in factorize(n) {
            let choices = integer_partitions(a)
                .into_iter()
                .map(|parts| parts.into_iter().map(|e| (p, e)).collect::<Vec<_>>())
                .collect::<Vec<_>>();
            per_prime.push(choices);
        }
        let mut combos: Vec<Vec<(u64, u32)>> = vec![Vec::new()];
        for choices in per_prime {
            let mut next = Vec::new();
            for combo in &combos {
                for choice in &choices {
                    let mut merged = combo.clone();
                    merged.extend_from_slice(choice);
                    next.push(merged);
                }
            }
            combos = next;
        }
        let mut specs: Vec<RingSpec> = combos
            .into_iter()
            .map(|factors| RingSpec::new(factors).expect("prime-power factors"))
            .collect();
        specs.sort();
        specs
    }

    /// All canonical specs with at most `n` elements, ascending.
    pub fn all_with_cardinality_at_most(n: u64) -> Vec<RingSpec> {
        (2..=n).flat_map(RingSpec::all_with_cardinality).collect()
    }
}

impl fmt::Display for RingSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, factor) in self.factors.iter().enumerate() {
            if i > 0 {
                write!(f, " x ")?;
            }
            write!(f, "Z{}", factor.modulus())?;
        }
        Ok(())
    }
}

impl FromStr for RingSpec {
    type Err = Error;

    /// Grammar: tokens separated by `x`, each token either `Z<k>` with
    /// `k >= 2` (composite `k` is CRT-decomposed) or `<p>^<a>` with `p`
    /// prime and `a >= 1`.
    fn from_str(s: &str) -> Result<Self> {
        let trimmed = s.trim();
        if trimmed.is_empty() {
            return Err(Error::ParseSpec("empty ring spec".into()));
        }
        let mut factors: Vec<(u64, u32)> = Vec::new();
        for raw in trimmed.split(['x', 'X']) {
            let tok = raw.trim();
            if tok.is_empty() {
                return Err(Error::ParseSpec("empty factor token".into()));
            }
            if let Some(rest) = tok.strip_prefix(['Z', 'z']) {
                let k: u64 = rest
                    .parse()
                    .map_err(|_| Error::ParseSpec(format!("`{tok}` is not Z<integer>")))?;
                if k < 2 {
                    return Err(Error::ParseSpec(format!("modulus {k} is below 2")));
                }
                factors.extend(factorize(k));
            } else if let Some((p_str, a_str)) = tok.split_once('^') {
                let p: u64 = p_str
                    .trim()
                    .parse()
                    .map_err(|_| Error::ParseSpec(format!("`{p_str}` is not an integer")))?;
                let a: u32 = a_str
                    .trim()
                    .parse()
                    .map_err(|_| Error::ParseSpec(format!("`{a_str}` is not an integer")))?;
                factors.push((p, a));
            } else {
                return Err(Error::ParseSpec(format!(
                    "`{tok}` is neither Z<k> nor <p>^<a>"
                )));
            }
        }
        let spec = RingSpec::new(factors)?;
        let n = spec.cardinality();
        if n > MAX_PARSE_ORDER {
            return Err(Error::SizeBound {
                what: "parsed ring order",
                limit: MAX_PARSE_ORDER,
                actual: n,
            });
        }
        Ok(spec)
    }
}

pub(crate) fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    if n.is_multiple_of(2) {
        return n == 2;
    }
    let mut d = 3;
    while d * d <= n {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 2;
    }
    true
}

pub(crate) fn factorize(mut n: u64) -> Vec<(u64, u32)> {
    let mut out = Vec::new();
    let mut p = 2;
    while p * p <= n {
        if n.is_multiple_of(p) {
            let mut a = 0;
            while n.is_multiple_of(p) {
                n /= p;
                a += 1;
            }
            out.push((p, a));
        }
        p += if p == 2 { 1 } else { 2 };
    }
    if n > 1 {
        out.push((n, 1));
    }
    out
}

/// All partitions of `a` into unordered positive parts, each partition with
/// nonincreasing parts.
fn integer_partitions(a: u32) -> Vec<Vec<u32>> {
    fn go(rest: u32, max: u32, prefix: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
        if rest == 0 {
            out.push(prefix.clone());
            return;
        }
        let mut part = rest.min(max);
        while part >= 1 {
            prefix.push(part);
            go(rest - part, part, prefix, out);
            prefix.pop();
            part -= 1;
        }
    }
    let mut out = Vec::new();
    go(a, a, &mut Vec::new(), &mut out);
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn spec(s: &str) -> RingSpec {
        s.parse().unwrap()
    }

    fn pairs(spec: &RingSpec) -> Vec<(u64, u32)> {
        spec.factors()
            .iter()
            .map(|f| (f.prime(), f.exponent()))
            .collect()
    }

    #[test]
    fn parse_prime_power() {
        assert_eq!(pairs(&spec("Z4")), vec![(2, 2)]);
        assert_eq!(pairs(&spec("2^2")), vec![(2, 2)]);
    }

    #[test]
    fn parse_composite_modulus_splits() {
        assert_eq!(pairs(&spec("Z6")), vec![(2, 1), (3, 1)]);
        assert_eq!(pairs(&spec("Z12")), vec![(2, 2), (3, 1)]);
    }

    #[test]
    fn parse_product() {
        assert_eq!(pairs(&spec("Z2xZ4")), vec![(2, 1), (2, 2)]);
        assert_eq!(pairs(&spec("2^1 x 2^2")), vec![(2, 1), (2, 2)]);
    }

    #[test]
    fn canonical_form_is_order_insensitive() {
        assert_eq!(spec("Z4xZ2"), spec("Z2xZ4"));
        assert_eq!(spec("Z6"), spec("Z2xZ3"));
        assert_eq!(spec("Z3xZ2"), spec("Z6"));
    }

    #[test]
    fn parse_errors() {
        for bad in ["", "Z1", "Z0", "Zx", "Z2x", "4^2", "2^0", "foo", "Z2yZ3"] {
            assert!(bad.parse::<RingSpec>().is_err(), "{bad} should fail");
        }
    }

    #[test]
    fn parse_respects_order_bound() {
        assert!("Z65536".parse::<RingSpec>().is_ok());
        assert!(matches!(
            "Z65536xZ2".parse::<RingSpec>(),
            Err(Error::SizeBound { .. })
        ));
    }

    #[test]
    fn counts() {
        assert_eq!(spec("Z4").cardinality(), 4);
        assert_eq!(spec("Z2xZ4").cardinality(), 8);
        assert_eq!(spec("Z2xZ4").ideal_count(), 6);
        assert_eq!(spec("Z12").ideal_count(), 6);
    }

    #[test]
    fn element_order_is_mixed_radix() {
        let z4 = spec("Z4");
        let elems: Vec<_> = z4.elements().unwrap();
        assert_eq!(
            elems,
            (0..4).map(|i| RingElement::new(vec![i])).collect::<Vec<_>>()
        );

        let z2z2 = spec("Z2xZ2");
        let elems: Vec<Vec<u64>> = z2z2
            .elements()
            .unwrap()
            .into_iter()
            .map(|e| e.residues().to_vec())
            .collect();
        assert_eq!(
            elems,
            vec![vec![0, 0], vec![0, 1], vec![1, 0], vec![1, 1]]
        );

        assert_eq!(spec("Z2xZ4").elements().unwrap().len(), 8);
    }

    #[test]
    fn element_enumeration_bound() {
        let big = RingSpec::new(vec![(2, 9)]).unwrap();
        assert!(matches!(big.elements(), Err(Error::SizeBound { .. })));
    }

    #[test]
    fn arithmetic() {
        let z6 = spec("Z6");
        let x = RingElement::new(vec![1, 2]);
        assert_eq!(z6.add(&x, &x).unwrap(), RingElement::new(vec![0, 1]));

        let z4 = spec("Z4");
        let two = RingElement::new(vec![2]);
        assert_eq!(z4.mul(&two, &two).unwrap(), RingElement::new(vec![0]));
        assert_eq!(z4.neg(&two).unwrap(), RingElement::new(vec![2]));
        assert_eq!(z4.neg(&z4.zero()).unwrap(), z4.zero());
    }

    #[test]
    fn arithmetic_rejects_foreign_elements() {
        let z4 = spec("Z4");
        let z6 = spec("Z6");
        let x = z6.one();
        assert!(matches!(
            z4.add(&x, &z6.zero()),
            Err(Error::MismatchedSpecs)
        ));
        assert!(matches!(
            z4.mul(&RingElement::new(vec![4]), &z4.one()),
            Err(Error::InvalidElement)
        ));
    }

    #[test]
    fn idempotents_of_z6() {
        // brute force x*x = x; as integers mod 6 these are {0, 1, 3, 4}
        let z6 = spec("Z6");
        let idem: Vec<RingElement> = z6
            .elements()
            .unwrap()
            .into_iter()
            .filter(|x| z6.mul(x, x).unwrap() == *x)
            .collect();
        let expected = [vec![0, 0], vec![0, 1], vec![1, 0], vec![1, 1]];
        assert_eq!(idem.len(), 4);
        for e in expected {
            assert!(idem.contains(&RingElement::new(e)));
        }
    }

    #[test]
    fn specs_by_cardinality() {
        let at_8 = RingSpec::all_with_cardinality(8);
        assert_eq!(at_8, vec![spec("Z2xZ2xZ2"), spec("Z2xZ4"), spec("Z8")]);
        assert_eq!(RingSpec::all_with_cardinality(12).len(), 2);
        assert_eq!(RingSpec::all_with_cardinality(1).len(), 0);
        assert_eq!(RingSpec::all_with_cardinality(7), vec![spec("Z7")]);
    }

    #[test]
    fn display_is_canonical() {
        assert_eq!(spec("Z4xZ2").to_string(), "Z2 x Z4");
        assert_eq!(spec("Z6").to_string(), "Z2 x Z3");
        assert_eq!(spec("Z9").to_string(), "Z9");
    }
}
