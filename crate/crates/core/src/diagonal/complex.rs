//! The two-periodic complex attached to a Rees presentation.
//!
//! Over B = S/(f1, f2) the identity t3*f3 = -(t1*f1 + t2*f2) makes f3 and
//! t3 annihilate each other, giving the complex
//!
//! ```text
//!   ... -> B(-4,-4) --t3--> B(-4,-3) --f3--> B(-2,-2) --t3--> B(-2,-1) --f3--> B -> 0
//! ```
//!
//! with F_i = B(-i,-i) for even i and B(-i-1,-i) for odd i.  Its homology
//! is the Rees algebra at 0, vanishes in positive even spots, and in odd
//! spot i is the x-variable polynomial ring shifted by (-i-3,-i) — so it
//! dies on the (1,1)-diagonal, which is the engine behind the regularity
//! bound for the diagonal of the Rees algebra.  Every statement here is
//! checked by exact bigraded linear algebra on standard-monomial slices.

use super::ReesPresentation;
use crate::arith::matrix::Matrix;
use crate::groebner::{groebner_basis, GroebnerBasis};
use crate::poly::{Monomial, MonomialOrder, Polynomial};
use crate::Result;
use std::collections::HashMap;

/// Which multiplier a differential uses.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
enum Step {
    MinorF3,
    VariableT3,
}

/// The two-periodic complex with cached slice data.
pub struct TwoPeriodicComplex {
    rees: ReesPresentation,
    /// Groebner basis of (f1, f2): presents B.
    pair_gb: GroebnerBasis,
    /// Groebner basis of (f1, f2, f3): presents the Rees algebra.
    full_gb: GroebnerBasis,
    /// Multiplication slice matrices keyed by multiplier and source
    /// bidegree of B.
    matrices: HashMap<(Step, i64, i64), Matrix>,
}

/// Builds the complex for a Rees presentation.
pub fn build_complex(
    rees: &ReesPresentation,
    budget: Option<usize>,
) -> Result<TwoPeriodicComplex> {
    let pair = rees.pair_ideal()?;
    let pair_gb = groebner_basis(&pair, &MonomialOrder::DegRevLex, budget)?;
    let full_gb = groebner_basis(rees.ideal(), &MonomialOrder::DegRevLex, budget)?;
    Ok(TwoPeriodicComplex { rees: rees.clone(), pair_gb, full_gb, matrices: HashMap::new() })
}

impl TwoPeriodicComplex {
    pub fn rees(&self) -> &ReesPresentation {
        &self.rees
    }

    /// Shift of the i-th term: F_i = B(-shift).
    pub fn shift(i: usize) -> (i64, i64) {
        let i = i as i64;
        if i % 2 == 0 {
            (i, i)
        } else {
            (i + 1, i)
        }
    }

    /// The differential d_i: F_i -> F_(i-1) multiplies by f3 for odd i and
    /// by t3 for even i >= 2.
    fn step(&self, i: usize) -> (Step, Polynomial) {
        debug_assert!(i >= 1);
        if i % 2 == 1 {
            (Step::MinorF3, self.rees.minors()[2].clone())
        } else {
            (Step::VariableT3, self.rees.t_var(2))
        }
    }

    /// Exact check that consecutive differentials compose to zero:
    /// f3 * t3 lies in (f1, f2).
    pub fn composition_is_zero(&self) -> Result<bool> {
        let prod = self.rees.minors()[2].mul(&self.rees.t_var(2))?;
        self.pair_gb.contains(&prod)
    }

    /// Dimension of the (p,q) slice of F_i.
    pub fn term_dimension(&self, i: usize, p: i64, q: i64) -> usize {
        let (a, b) = Self::shift(i);
        if p - a < 0 || q - b < 0 {
            return 0;
        }
        self.pair_gb.quotient_slice_dim(&[p - a, q - b])
    }

    /// Slice matrix of multiplication by the step multiplier on B, from
    /// bidegree (a,b); cached.
    fn multiplication_matrix(&mut self, step: Step, mult: &Polynomial, a: i64, b: i64) -> Result<Matrix> {
        if let Some(m) = self.matrices.get(&(step, a, b)) {
            return Ok(m.clone());
        }
        let field = self.rees.ring().field().clone();
        let source = self.pair_gb.standard_monomials(&[a, b]);
        let d = mult.multidegree()?.expect("multiplier is nonzero");
        let target = self.pair_gb.standard_monomials(&[a + d[0], b + d[1]]);
        let index: HashMap<&Monomial, usize> =
            target.iter().enumerate().map(|(r, m)| (m, r)).collect();
        let mut mat = Matrix::zeros(&field, target.len(), source.len());
        for (j, m) in source.iter().enumerate() {
            let image = self
                .pair_gb
                .normal_form(&mult.mul_term(m, &field.one())?)?;
            for (tm, c) in image.terms() {
                mat.set(index[tm], j, c);
            }
        }
        self.matrices.insert((step, a, b), mat.clone());
        Ok(mat)
    }

    /// Slice matrix of d_i at target degree... of the complex in ambient
    /// bidegree (p,q): the map (F_i)_(p,q) -> (F_(i-1))_(p,q).
    fn differential_matrix(&mut self, i: usize, p: i64, q: i64) -> Result<Matrix> {
        let (a, b) = Self::shift(i);
        let (sa, sb) = (p - a, q - b);
        let field = self.rees.ring().field().clone();
        if sa < 0 || sb < 0 {
            let rows = self.term_dimension(i - 1, p, q);
            return Ok(Matrix::zeros(&field, rows, 0));
        }
        let (step, mult) = self.step(i);
        self.multiplication_matrix(step, &mult, sa, sb)
    }

    /// Dimension of H_i of the complex in ambient bidegree (p,q),
    /// computed as dim ker(d_i) - rank(d_(i+1)).
    pub fn homology_dimension(&mut self, i: usize, p: i64, q: i64) -> Result<usize> {
        let dim_i = self.term_dimension(i, p, q);
        let ker = if i == 0 {
            dim_i
        } else {
            let d_i = self.differential_matrix(i, p, q)?;
            debug_assert_eq!(d_i.cols(), dim_i);
            dim_i - d_i.rank_into()
        };
        let d_next = self.differential_matrix(i + 1, p, q)?;
        let im = d_next.rank_into();
        debug_assert!(im <= ker, "image must land in the kernel");
        Ok(ker - im)
    }

    /// The dimension the homology must have: the Rees algebra slice at
    /// i = 0; zero in positive even spots; for odd i the polynomial ring
    /// on the base variables shifted by (-i-3, -i).
    pub fn expected_homology_dimension(&self, i: usize, p: i64, q: i64) -> usize {
        if i == 0 {
            return self.full_gb.quotient_slice_dim(&[p, q]);
        }
        if i % 2 == 0 {
            return 0;
        }
        let shift_p = p - (i as i64 + 3);
        let shift_q = q - i as i64;
        if shift_q != 0 || shift_p < 0 {
            return 0;
        }
        // Monomials of x-degree shift_p in the base variables.
        self.rees.ring().monomials_of_degree(&[shift_p, 0]).len()
    }

    /// Compares computed and expected homology over the whole window
    /// 0 <= p <= pmax, 0 <= q <= qmax, 0 <= i <= imax; returns mismatches
    /// as (i, p, q, computed, expected).
    pub fn verify_window(
        &mut self,
        imax: usize,
        pmax: i64,
        qmax: i64,
    ) -> Result<Vec<(usize, i64, i64, usize, usize)>> {
        let mut bad = Vec::new();
        for i in 0..=imax {
            for p in 0..=pmax {
                for q in 0..=qmax {
                    let got = self.homology_dimension(i, p, q)?;
                    let want = self.expected_homology_dimension(i, p, q);
                    if got != want {
                        bad.push((i, p, q, got, want));
                    }
                }
            }
        }
        Ok(bad)
    }

    /// True when H_i vanishes on the (1,1)-diagonal for all 1 <= i <= imax
    /// and diagonal degrees d <= dmax.
    pub fn diagonal_homology_vanishes(&mut self, imax: usize, dmax: i64) -> Result<bool> {
        for i in 1..=imax {
            for d in 0..=dmax {
                if self.homology_dimension(i, d, d)? != 0 {
                    return Ok(false);
                }
            }
        }
        Ok(true)
    }
}

#[cfg(test)]
mod tests {
    use super::super::rees_presentation;
    use super::*;
    use crate::arith::FieldDescriptor;
    use crate::poly::{parse_polynomial, Ring};

    fn squares_complex() -> TwoPeriodicComplex {
        let field = FieldDescriptor::prime(32003).unwrap();
        let r = Ring::standard(&["x1", "x2", "x3"], field);
        let gens: Vec<Polynomial> = ["x1^2", "x2^2", "x3^2"]
            .iter()
            .map(|s| parse_polynomial(&r, s).unwrap())
            .collect();
        let rp = rees_presentation(&gens, None).unwrap();
        build_complex(&rp, None).unwrap()
    }

    #[test]
    fn consecutive_differentials_compose_to_zero() {
        let c = squares_complex();
        assert!(c.composition_is_zero().unwrap());
    }

    #[test]
    fn term_dimensions_follow_the_shifts() {
        let c = squares_complex();
        // F_0 at (0,0) is the constants; F_1 = B(-2,-1) starts at (2,1).
        assert_eq!(c.term_dimension(0, 0, 0), 1);
        assert_eq!(c.term_dimension(1, 0, 0), 0);
        assert_eq!(c.term_dimension(1, 2, 1), 1);
        assert_eq!(c.term_dimension(2, 2, 2), 1);
    }

    #[test]
    fn homology_matches_the_expected_description_on_a_small_window() {
        let mut c = squares_complex();
        let bad = c.verify_window(3, 7, 3).unwrap();
        assert!(bad.is_empty(), "mismatches: {bad:?}");
    }

    #[test]
    fn first_odd_homology_appears_at_bidegree_four_one() {
        let mut c = squares_complex();
        // H_1 = K[x](-4,-1): one-dimensional at (4,1), three-dimensional
        // at (5,1), zero off the line q = 1.
        assert_eq!(c.homology_dimension(1, 4, 1).unwrap(), 1);
        assert_eq!(c.homology_dimension(1, 5, 1).unwrap(), 3);
        assert_eq!(c.homology_dimension(1, 4, 2).unwrap(), 0);
        assert_eq!(c.homology_dimension(1, 3, 1).unwrap(), 0);
    }

    #[test]
    fn homology_dies_on_the_diagonal() {
        let mut c = squares_complex();
        assert!(c.diagonal_homology_vanishes(4, 5).unwrap());
    }
}
