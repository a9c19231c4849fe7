//! Monomial orders.
//!
//! All orders here are global (1 is smallest), which Buchberger's algorithm
//! requires.  The block order is the elimination workhorse: comparing the
//! first block of variables before the rest makes any Groebner basis
//! eliminate the first block.

use crate::{Error, Result};
use std::cmp::Ordering;

use super::Monomial;

#[derive(Debug, Clone, PartialEq, Eq, Hash, serde::Serialize, serde::Deserialize)]
pub enum MonomialOrder {
    /// Pure lexicographic.
    Lex,
    /// Degree reverse lexicographic (the default for plain computations).
    DegRevLex,
    /// Block order: exponents of the first `split` variables are compared
    /// with `left`; on a tie the remaining variables are compared with
    /// `right`.  With both blocks degrevlex this is the standard
    /// elimination order for the first block.
    Block {
        split: usize,
        left: Box<MonomialOrder>,
        right: Box<MonomialOrder>,
    },
    /// Compare by a weighted degree first, break ties with `then`.
    WeightThen {
        weights: Vec<i64>,
        then: Box<MonomialOrder>,
    },
}

fn lex(a: &[u16], b: &[u16]) -> Ordering {
    for (x, y) in a.iter().zip(b.iter()) {
        match x.cmp(y) {
            Ordering::Equal => continue,
            ord => return ord,
        }
    }
    Ordering::Equal
}

fn degrevlex(a: &[u16], b: &[u16]) -> Ordering {
    let da: u32 = a.iter().map(|&e| e as u32).sum();
    let db: u32 = b.iter().map(|&e| e as u32).sum();
    match da.cmp(&db) {
        Ordering::Equal => {}
        ord => return ord,
    }
    // Same degree: the monomial with the smaller exponent at the last
    // position where they differ is the larger one.
    for (x, y) in a.iter().zip(b.iter()).rev() {
        match x.cmp(y) {
            Ordering::Equal => continue,
            Ordering::Less => return Ordering::Greater,
            Ordering::Greater => return Ordering::Less,
        }
    }
    Ordering::Equal
}

impl MonomialOrder {
    /// Standard elimination order: the first `split` variables are
    /// eliminated; both blocks use degrevlex.
    pub fn elimination(split: usize) -> MonomialOrder {
        MonomialOrder::Block {
            split,
            left: Box::new(MonomialOrder::DegRevLex),
            right: Box::new(MonomialOrder::DegRevLex),
        }
    }

    pub(crate) fn validate(&self, nvars: usize) -> Result<()> {
        match self {
            MonomialOrder::Lex | MonomialOrder::DegRevLex => Ok(()),
            MonomialOrder::Block { split, left, right } => {
                if *split == 0 || *split >= nvars {
                    return Err(Error::Invalid(format!(
                        "block split {split} out of range for {nvars} variables"
                    )));
                }
                left.validate(*split)?;
                right.validate(nvars - split)
            }
            MonomialOrder::WeightThen { weights, then } => {
                if weights.len() != nvars {
                    return Err(Error::DimensionMismatch(format!(
                        "{} weights for {} variables",
                        weights.len(),
                        nvars
                    )));
                }
                if weights.iter().any(|&w| w <= 0) {
                    return Err(Error::Invalid(
                        "weight order requires positive weights to stay global".to_string(),
                    ));
                }
                then.validate(nvars)
            }
        }
    }

    pub fn compare(&self, a: &Monomial, b: &Monomial) -> Ordering {
        self.compare_slices(&a.0, &b.0)
    }

    fn compare_slices(&self, a: &[u16], b: &[u16]) -> Ordering {
        debug_assert_eq!(a.len(), b.len());
        match self {
            MonomialOrder::Lex => lex(a, b),
            MonomialOrder::DegRevLex => degrevlex(a, b),
            MonomialOrder::Block { split, left, right } => {
                match left.compare_slices(&a[..*split], &b[..*split]) {
                    Ordering::Equal => right.compare_slices(&a[*split..], &b[*split..]),
                    ord => ord,
                }
            }
            MonomialOrder::WeightThen { weights, then } => {
                let wa: i64 = a.iter().zip(weights).map(|(&e, &w)| e as i64 * w).sum();
                let wb: i64 = b.iter().zip(weights).map(|(&e, &w)| e as i64 * w).sum();
                match wa.cmp(&wb) {
                    Ordering::Equal => then.compare_slices(a, b),
                    ord => ord,
                }
            }
        }
    }
}
