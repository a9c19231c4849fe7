//! Multigraded Hilbert series of quotients by homogeneous ideals.
//!
//! The series of R/I is N(t) / prod_i (1 - t^{deg x_i}) where the
//! numerator N is computed from the leading-term ideal (a monomial ideal,
//! which has the same Hilbert function) by pivot recursion: for a monomial
//! P,  N(G) = N(G + P) + t^{deg P} * N(G : P).  Pivots are chosen as a
//! median power of the most frequent variable, which keeps both branches
//! strictly simpler; results are memoized on the minimalized generator set.

use super::GroebnerBasis;
use crate::poly::{Monomial, Ring};
use crate::{Error, Result};
use std::collections::{BTreeMap, HashMap};
use std::fmt;

/// A Hilbert series in rational form: integer numerator over the product
/// of (1 - t^{deg x}) across ring variables.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HilbertSeries {
    grading_rank: usize,
    /// Sorted (multi-exponent, coefficient) pairs, zero coefficients absent.
    numerator: Vec<(Vec<i64>, i64)>,
    /// One degree vector per ring variable.
    denominator: Vec<Vec<i64>>,
}

type Sparse = BTreeMap<Vec<i64>, i64>;

struct NumeratorEngine<'a> {
    ring: &'a Ring,
    memo: HashMap<Vec<Monomial>, Sparse>,
    calls: usize,
    budget: usize,
}

fn minimalize(mut gens: Vec<Monomial>) -> Vec<Monomial> {
    gens.sort_by_key(|m| m.total_degree());
    gens.dedup();
    let mut out: Vec<Monomial> = Vec::with_capacity(gens.len());
    for m in gens {
        if !out.iter().any(|g| g.divides(&m)) {
            out.push(m);
        }
    }
    out
}

impl<'a> NumeratorEngine<'a> {
    fn run(&mut self, gens: Vec<Monomial>) -> Result<Sparse> {
        self.calls += 1;
        if self.calls > self.budget {
            return Err(Error::BudgetExceeded(
                "Hilbert numerator recursion exceeded its budget".to_string(),
            ));
        }
        let gens = minimalize(gens);
        if let Some(hit) = self.memo.get(&gens) {
            return Ok(hit.clone());
        }
        let result = self.compute(&gens)?;
        self.memo.insert(gens, result.clone());
        Ok(result)
    }

    fn compute(&mut self, gens: &[Monomial]) -> Result<Sparse> {
        let k = self.ring.grading_rank();
        if gens.is_empty() {
            let mut one = Sparse::new();
            one.insert(vec![0; k], 1);
            return Ok(one);
        }
        if gens.iter().any(Monomial::is_one) {
            return Ok(Sparse::new());
        }
        if gens.iter().all(|m| m.support().len() <= 1) {
            // Pairwise-distinct pure powers: N = prod (1 - t^{deg m}).
            let mut acc = Sparse::new();
            acc.insert(vec![0; k], 1);
            for m in gens {
                let d = self.ring.multidegree(m);
                let mut next = Sparse::new();
                for (e, c) in &acc {
                    *next.entry(e.clone()).or_insert(0) += c;
                    let shifted: Vec<i64> = e.iter().zip(d.iter()).map(|(a, b)| a + b).collect();
                    let slot = next.entry(shifted).or_insert(0);
                    *slot -= c;
                }
                next.retain(|_, c| *c != 0);
                acc = next;
            }
            return Ok(acc);
        }
        // Pivot: median power of the most frequent variable.
        let n = self.ring.num_vars();
        let mut freq = vec![0usize; n];
        for m in gens {
            for v in m.support() {
                freq[v] += 1;
            }
        }
        let v = (0..n).max_by_key(|&i| freq[i]).expect("nonempty ring");
        let mut exps: Vec<u16> = gens.iter().map(|m| m.0[v]).filter(|&e| e > 0).collect();
        exps.sort_unstable();
        let e = exps[exps.len() / 2].max(1);
        let pivot = {
            let mut p = Monomial::one(n);
            p.0[v] = e;
            p
        };
        // Branch 1: ideal plus the pivot.
        let mut plus = gens.to_vec();
        plus.push(pivot.clone());
        let n_plus = self.run(plus)?;
        // Branch 2: ideal colon the pivot.
        let quot: Vec<Monomial> = gens
            .iter()
            .map(|m| m.div(&m.gcd(&pivot)))
            .collect();
        let n_colon = self.run(quot)?;
        let shift = self.ring.multidegree(&pivot);
        let mut out = n_plus;
        for (e, c) in n_colon {
            let key: Vec<i64> = e.iter().zip(shift.iter()).map(|(a, b)| a + b).collect();
            *out.entry(key).or_insert(0) += c;
        }
        out.retain(|_, c| *c != 0);
        Ok(out)
    }
}

/// Hilbert series of R/I from a Groebner basis of the homogeneous ideal I.
pub fn hilbert_series(gb: &GroebnerBasis) -> Result<HilbertSeries> {
    let ring = gb.ring();
    for g in gb.elements() {
        g.multidegree()?; // must be multihomogeneous
    }
    for v in 0..ring.num_vars() {
        if ring.var_degree(v).iter().all(|&w| w == 0) || ring.var_degree(v).iter().any(|&w| w < 0) {
            return Err(Error::Invalid(
                "Hilbert series requires nonnegative, nonzero variable degrees".to_string(),
            ));
        }
    }
    let mut engine = NumeratorEngine { ring, memo: HashMap::new(), calls: 0, budget: 500_000 };
    let num = engine.run(gb.leading_monomials())?;
    Ok(HilbertSeries {
        grading_rank: ring.grading_rank(),
        numerator: num.into_iter().collect(),
        denominator: (0..ring.num_vars()).map(|v| ring.var_degree(v).to_vec()).collect(),
    })
}

impl HilbertSeries {
    pub fn grading_rank(&self) -> usize {
        self.grading_rank
    }

    /// Sorted (multi-exponent, coefficient) pairs of the numerator.
    pub fn numerator(&self) -> &[(Vec<i64>, i64)] {
        &self.numerator
    }

    /// Degree vectors of the denominator factors (1 - t^d), one per ring
    /// variable, in ring order.
    pub fn denominator(&self) -> &[Vec<i64>] {
        &self.denominator
    }

    /// Expands the series as a table of dimensions over the box
    /// 0 <= deg_i <= bounds_i.
    pub fn dimensions(&self, bounds: &[i64]) -> Result<BTreeMap<Vec<i64>, i64>> {
        if bounds.len() != self.grading_rank || bounds.iter().any(|&b| b < 0) {
            return Err(Error::DimensionMismatch(format!(
                "expected {} nonnegative bounds",
                self.grading_rank
            )));
        }
        let dims: Vec<usize> = bounds.iter().map(|&b| b as usize + 1).collect();
        let total: usize = dims.iter().product();
        let stride = {
            let mut s = vec![1usize; dims.len()];
            for i in (0..dims.len().saturating_sub(1)).rev() {
                s[i] = s[i + 1] * dims[i + 1];
            }
            s
        };
        let mut grid = vec![0i64; total];
        for (e, c) in &self.numerator {
            if e.iter().zip(bounds.iter()).all(|(a, b)| a <= b) {
                let idx: usize =
                    e.iter().zip(stride.iter()).map(|(&a, &s)| a as usize * s).sum();
                grid[idx] += c;
            }
        }
        // Multiply by 1/(1 - t^d) = 1 + t^d + t^{2d} + ... via prefix sums.
        for d in &self.denominator {
            for flat in 0..total {
                // Reconstruct the multi-index and check the shifted source.
                let mut rem = flat;
                let mut ok = true;
                let mut src = 0usize;
                for (i, &s) in stride.iter().enumerate() {
                    let coord = rem / s;
                    rem %= s;
                    let from = coord as i64 - d[i];
                    if from < 0 {
                        ok = false;
                        break;
                    }
                    src += from as usize * s;
                }
                if ok {
                    grid[flat] += grid[src];
                }
            }
        }
        let mut out = BTreeMap::new();
        for flat in 0..total {
            let mut rem = flat;
            let mut key = Vec::with_capacity(dims.len());
            for &s in &stride {
                key.push((rem / s) as i64);
                rem %= s;
            }
            out.insert(key, grid[flat]);
        }
        Ok(out)
    }

    /// Convenience accessor for singly graded series.
    pub fn dimension_1d(&self, d: i64) -> Result<i64> {
        if self.grading_rank != 1 {
            return Err(Error::Invalid("dimension_1d needs a singly graded ring".to_string()));
        }
        Ok(*self.dimensions(&[d])?.get(&vec![d]).expect("within bounds"))
    }
}

impl fmt::Display for HilbertSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let var = |i: usize| -> String {
            if self.grading_rank == 1 {
                "t".to_string()
            } else {
                format!("t{}", i + 1)
            }
        };
        let fmt_term = |e: &[i64]| -> String {
            let mut parts = Vec::new();
            for (i, &p) in e.iter().enumerate() {
                if p == 1 {
                    parts.push(var(i));
                } else if p > 1 {
                    parts.push(format!("{}^{}", var(i), p));
                }
            }
            parts.join("*")
        };
        if self.numerator.is_empty() {
            write!(f, "0")?;
            return Ok(());
        }
        write!(f, "(")?;
        for (k, (e, c)) in self.numerator.iter().enumerate() {
            let mono = fmt_term(e);
            let mag = c.abs();
            if k == 0 {
                if *c < 0 {
                    write!(f, "-")?;
                }
            } else if *c < 0 {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            if mono.is_empty() {
                write!(f, "{mag}")?;
            } else if mag == 1 {
                write!(f, "{mono}")?;
            } else {
                write!(f, "{mag}*{mono}")?;
            }
        }
        write!(f, ") / (")?;
        // Group denominator factors by degree vector.
        let mut groups: BTreeMap<&Vec<i64>, usize> = BTreeMap::new();
        for d in &self.denominator {
            *groups.entry(d).or_insert(0) += 1;
        }
        for (k, (d, count)) in groups.iter().enumerate() {
            if k > 0 {
                write!(f, " * ")?;
            }
            let mono = fmt_term(d);
            if *count == 1 {
                write!(f, "(1 - {mono})")?;
            } else {
                write!(f, "(1 - {mono})^{count}")?;
            }
        }
        write!(f, ")")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::FieldDescriptor;
    use crate::groebner::{groebner_basis, Ideal};
    use crate::poly::{parse_polynomial, MonomialOrder};

    fn series(ring: &Ring, gens: &[&str]) -> HilbertSeries {
        let ideal = Ideal::new(
            ring,
            gens.iter().map(|s| parse_polynomial(ring, s).unwrap()).collect(),
        )
        .unwrap();
        let gb = groebner_basis(&ideal, &MonomialOrder::DegRevLex, None).unwrap();
        hilbert_series(&gb).unwrap()
    }

    #[test]
    fn polynomial_ring_series() {
        let r = Ring::standard(&["x", "y", "z"], FieldDescriptor::Rationals);
        let h = series(&r, &[]);
        assert_eq!(h.numerator(), &[(vec![0], 1)]);
        for d in 0..6 {
            assert_eq!(h.dimension_1d(d).unwrap(), (d + 1) * (d + 2) / 2);
        }
    }

    #[test]
    fn complete_intersection_series() {
        let r = Ring::standard(&["x", "y", "z"], FieldDescriptor::Rationals);
        let h = series(&r, &["x^2", "y^2", "z^2"]);
        // (1 - t^2)^3 / (1 - t)^3 expands to 1 + 3t + 3t^2 + t^3.
        let dims: Vec<i64> = (0..5).map(|d| h.dimension_1d(d).unwrap()).collect();
        assert_eq!(dims, vec![1, 3, 3, 1, 0]);
    }

    #[test]
    fn dims_match_standard_monomial_counts() {
        let r = Ring::standard(&["x", "y", "z"], FieldDescriptor::prime(32003).unwrap());
        let gens = ["x^2 - y*z", "x*y^2", "y^3 - z^3"];
        let ideal = Ideal::new(
            &r,
            gens.iter().map(|s| parse_polynomial(&r, s).unwrap()).collect(),
        )
        .unwrap();
        let gb = groebner_basis(&ideal, &MonomialOrder::DegRevLex, None).unwrap();
        let h = hilbert_series(&gb).unwrap();
        for d in 0..10 {
            assert_eq!(
                h.dimension_1d(d).unwrap(),
                gb.quotient_slice_dim(&[d]) as i64,
                "degree {d}"
            );
        }
    }

    #[test]
    fn bigraded_series_of_segre_quadric() {
        // K[x1,x2,t1,t2] with deg x = (1,0), deg t = (0,1), modulo the
        // 2x2 determinant x1*t2 - x2*t1: dims are (p+1)(q+1) - p*q ... the
        // quotient has dimension (p + q + 1) choose nothing fancy: compare
        // against standard monomial counts instead of a closed form.
        let r = Ring::bigraded(&["x1", "x2"], &["t1", "t2"], FieldDescriptor::Rationals);
        let det = parse_polynomial(&r, "x1*t2 - x2*t1").unwrap();
        let ideal = Ideal::new(&r, vec![det]).unwrap();
        let gb = groebner_basis(&ideal, &MonomialOrder::DegRevLex, None).unwrap();
        let h = hilbert_series(&gb).unwrap();
        let dims = h.dimensions(&[4, 4]).unwrap();
        for p in 0..=4i64 {
            for q in 0..=4i64 {
                assert_eq!(
                    dims[&vec![p, q]],
                    gb.quotient_slice_dim(&[p, q]) as i64,
                    "bidegree ({p},{q})"
                );
            }
        }
        // Explicit corner: bidegree (1,1) has the 4 monomials minus 1.
        assert_eq!(dims[&vec![1, 1]], 3);
    }

    #[test]
    fn display_is_reasonable() {
        let r = Ring::standard(&["x", "y"], FieldDescriptor::Rationals);
        let h = series(&r, &["x^2"]);
        assert_eq!(h.to_string(), "(1 - t^2) / ((1 - t)^2)");
    }
}
