//! Binary block codes attached to an ideal lattice.
//!
//! The membership code has one word per ideal, of length `|A|`: bit `i` is
//! set iff the `i`-th ring element (canonical order) lies in the ideal. The
//! reduced code has one word per ideal, of length `N_A`: bit `j` is set iff
//! the ideal is below the `j`-th ideal, i.e. the rows of the order-incidence
//! matrix over the canonical ideal order.
//!
//! Both codes are generally nonlinear; the only statistics computed here are
//! the minimum Hamming distance and the detect/correct thresholds.

use std::fmt;

use serde::Serialize;

use crate::algebra::FiniteAlgebraTable;
use crate::ring::RingSpec;
use crate::suites::{check_suite, SuiteId};
use crate::{Error, Result};

/// One codeword with the carrier label it came from.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Codeword {
    pub label: String,
    pub bits: Vec<bool>,
}

impl Codeword {
    /// MSB-left bit string, e.g. `0101`.
    pub fn bit_string(&self) -> String {
        self.bits.iter().map(|b| if *b { '1' } else { '0' }).collect()
    }

    pub fn weight(&self) -> usize {
        self.bits.iter().filter(|b| **b).count()
    }
}

impl fmt::Display for Codeword {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.bit_string())
    }
}

/// A list of equal-length codewords with a declared coordinate order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BlockCode {
    pub length: usize,
    pub words: Vec<Codeword>,
    pub coordinate_order: String,
}

impl BlockCode {
    fn new(words: Vec<Codeword>, coordinate_order: String) -> Result<Self> {
        let length = words.first().map(|w| w.bits.len()).unwrap_or(0);
        if words.iter().any(|w| w.bits.len() != length) {
            return Err(Error::InvalidArgument("codewords differ in length".into()));
        }
        for (i, a) in words.iter().enumerate() {
            for b in &words[i + 1..] {
                if a.bits == b.bits {
                    return Err(Error::InvalidArgument("codewords must be distinct".into()));
                }
            }
        }
        Ok(Self {
            length,
            words,
            coordinate_order,
        })
    }

    /// The set of bit strings, sorted.
    pub fn word_set(&self) -> Vec<String> {
        let mut out: Vec<String> = self.words.iter().map(Codeword::bit_string).collect();
        out.sort();
        out
    }
}

/// Verdict of [`classify_code`].
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum CodeClass {
    None,
    Detecting,
    Correcting,
}

impl fmt::Display for CodeClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            CodeClass::None => "none",
            CodeClass::Detecting => "detecting",
            CodeClass::Correcting => "correcting",
        };
        f.write_str(s)
    }
}

/// The membership code of `spec`: one word per ideal in canonical ideal
/// order, bit `i` set iff the `i`-th element lies in the ideal.
pub fn membership_code(spec: &RingSpec) -> Result<BlockCode> {
    let elements = spec.elements()?;
    let ideals = spec.ideals();
    let labels = crate::algebra::canonical_labels(ideals.len());
    let words = ideals
        .iter()
        .zip(labels)
        .map(|(ideal, label)| {
            let bits = elements
                .iter()
                .map(|x| ideal.contains_element(x).expect("same spec"))
                .collect();
            Codeword { label, bits }
        })
        .collect();
    BlockCode::new(
        words,
        format!("elements of {spec} in canonical ascending order"),
    )
}

/// The reduced code of a table passing the BCK suite: bit `j` of the word of
/// carrier element `I` is set iff `imp(I, J_j) = 1`, i.e. `I <= J_j`.
pub fn reduced_code(t: &FiniteAlgebraTable) -> Result<BlockCode> {
    let report = check_suite(t, SuiteId::Bck);
    if !report.pass {
        return Err(Error::SuiteViolation {
            suite: SuiteId::Bck,
            detail: format!("{:?}", report.witnesses),
        });
    }
    let m = t.size();
    let words = (0..m)
        .map(|i| Codeword {
            label: t.name(i).to_string(),
            bits: (0..m).map(|j| t.imp(i, j) == t.top()).collect(),
        })
        .collect();
    BlockCode::new(words, "carrier in canonical order".to_string())
}

/// The cut subset `S_w = { s in S : w -> f(s) = 1 }` of a map `f : S -> W`
/// given by the carrier index of each `f(s)`. Returns positions into `S`.
pub fn cut_subset(t: &FiniteAlgebraTable, w: usize, f: &[usize]) -> Result<Vec<usize>> {
    if w >= t.size() || f.iter().any(|&v| v >= t.size()) {
        return Err(Error::IndexOutOfRange);
    }
    Ok(f.iter()
        .enumerate()
        .filter(|(_, &fx)| t.imp(w, fx) == t.top())
        .map(|(s, _)| s)
        .collect())
}

/// Minimum Hamming distance over unordered pairs of distinct words.
pub fn min_distance(code: &BlockCode) -> Result<u32> {
    if code.words.len() < 2 {
        return Err(Error::TooFewWords);
    }
    let mut best = u32::MAX;
    for (i, a) in code.words.iter().enumerate() {
        for b in &code.words[i + 1..] {
            let d = a
                .bits
                .iter()
                .zip(&b.bits)
                .filter(|(x, y)| x != y)
                .count() as u32;
            best = best.min(d);
        }
    }
    Ok(best)
}

/// `d_H >= 2` detects single errors, `d_H >= 3` corrects them.
pub fn classify_code(code: &BlockCode) -> Result<CodeClass> {
    let d = min_distance(code)?;
    Ok(if d >= 3 {
        CodeClass::Correcting
    } else if d >= 2 {
        CodeClass::Detecting
    } else {
        CodeClass::None
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn spec(s: &str) -> RingSpec {
        s.parse().unwrap()
    }

    fn table(s: &str) -> FiniteAlgebraTable {
        FiniteAlgebraTable::from_ideal_lattice(&spec(s)).unwrap()
    }

    #[test]
    fn membership_words_of_z4() {
        let code = membership_code(&spec("Z4")).unwrap();
        assert_eq!(code.length, 4);
        let words: Vec<String> = code.words.iter().map(Codeword::bit_string).collect();
        assert_eq!(words, vec!["1000", "1010", "1111"]);
    }

    #[test]
    fn membership_weight_is_ideal_size() {
        for s in ["Z4", "Z6", "Z2xZ4", "Z2xZ2xZ2", "Z9"] {
            let spec = spec(s);
            let code = membership_code(&spec).unwrap();
            for (ideal, word) in spec.ideals().iter().zip(&code.words) {
                assert_eq!(word.weight() as u128, ideal.cardinality());
            }
            assert!(code.words.last().unwrap().bits.iter().all(|b| *b));
            assert_eq!(code.words[0].weight(), 1);
        }
    }

    #[test]
    fn reduced_words_of_z4() {
        let code = reduced_code(&table("Z4")).unwrap();
        let words: Vec<String> = code.words.iter().map(Codeword::bit_string).collect();
        assert_eq!(words, vec!["111", "011", "001"]);
    }

    #[test]
    fn reduced_words_of_z2z2() {
        let code = reduced_code(&table("Z2xZ2")).unwrap();
        assert_eq!(code.word_set(), vec!["0001", "0011", "0101", "1111"]);
    }

    #[test]
    fn reduced_words_of_z2z4() {
        let code = reduced_code(&table("Z2xZ4")).unwrap();
        let words: Vec<String> = code.words.iter().map(Codeword::bit_string).collect();
        assert_eq!(
            words,
            vec!["111111", "011011", "001001", "000111", "000011", "000001"]
        );
    }

    #[test]
    fn reduced_code_requires_bck() {
        let bad = table("Z4").mutate_imp(2, 0, 2).unwrap();
        assert!(matches!(
            reduced_code(&bad),
            Err(Error::SuiteViolation { .. })
        ));
    }

    #[test]
    fn cut_subsets_of_z4() {
        let t = table("Z4");
        let identity: Vec<usize> = (0..t.size()).collect();
        assert_eq!(cut_subset(&t, 0, &identity).unwrap(), vec![0, 1, 2]);
        assert_eq!(cut_subset(&t, 1, &identity).unwrap(), vec![1, 2]);
        // all three cut subsets are distinct, so every ~-class is a singleton
        let cuts: Vec<Vec<usize>> = (0..3)
            .map(|w| cut_subset(&t, w, &identity).unwrap())
            .collect();
        assert_eq!(cuts.iter().collect::<std::collections::BTreeSet<_>>().len(), 3);
        assert!(cut_subset(&t, 5, &identity).is_err());
    }

    #[test]
    fn distances() {
        assert_eq!(min_distance(&membership_code(&spec("Z4")).unwrap()).unwrap(), 1);
        assert_eq!(min_distance(&membership_code(&spec("Z9")).unwrap()).unwrap(), 2);
        assert_eq!(min_distance(&membership_code(&spec("Z25")).unwrap()).unwrap(), 4);
    }

    #[test]
    fn classification_thresholds() {
        assert_eq!(
            classify_code(&membership_code(&spec("Z9")).unwrap()).unwrap(),
            CodeClass::Detecting
        );
        assert_eq!(
            classify_code(&membership_code(&spec("Z25")).unwrap()).unwrap(),
            CodeClass::Correcting
        );
        assert_eq!(
            classify_code(&reduced_code(&table("Z2xZ4")).unwrap()).unwrap(),
            CodeClass::None
        );
    }

    #[test]
    fn too_few_words() {
        let one = BlockCode::new(
            vec![Codeword { label: "O".into(), bits: vec![true] }],
            "test".into(),
        )
        .unwrap();
        assert!(matches!(min_distance(&one), Err(Error::TooFewWords)));
    }

    #[test]
    fn meet_compatibility() {
        // bitwise AND of membership words equals the word of the intersection
        for s in ["Z12", "Z2xZ4", "Z36"] {
            let spec = spec(s);
            let code = membership_code(&spec).unwrap();
            let ideals = spec.ideals();
            for (i, a) in ideals.iter().enumerate() {
                for (j, b) in ideals.iter().enumerate() {
                    let both = a.intersect(b).unwrap();
                    let k = ideals.iter().position(|c| *c == both).unwrap();
                    let anded: Vec<bool> = code.words[i]
                        .bits
                        .iter()
                        .zip(&code.words[j].bits)
                        .map(|(x, y)| *x && *y)
                        .collect();
                    assert_eq!(anded, code.words[k].bits);
                }
            }
        }
    }
}
