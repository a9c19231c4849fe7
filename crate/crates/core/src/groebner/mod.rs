//! Groebner bases via Buchberger's algorithm with the Gebauer-Moeller
//! pair criteria and the normal selection strategy.
//!
//! The output of [`groebner_basis`] is always the reduced Groebner basis:
//! minimal, tail-interreduced, with normalized scalars (monic over GF(p),
//! primitive integer with positive leading coefficient over QQ) and sorted
//! by increasing leading monomial.  Reduced bases are canonical for a given
//! ideal and order, so tests can compare them structurally.
//!
//! A work budget bounds the number of S-pairs reduced; exceeding it aborts
//! with [`Error::BudgetExceeded`] rather than spinning forever on an
//! accidentally hard input.

mod hilbert;
mod ops;

pub use hilbert::{hilbert_series, HilbertSeries};
pub use ops::{
    colon, eliminate, homogeneous_slice_dim, ideal_slice_basis, ideals_equal, intersect,
    krull_dimension, min_generators, MinimalGenerators,
};

use crate::arith::FieldElement;
use crate::poly::{Monomial, MonomialOrder, Polynomial, Ring};
use crate::{Error, Result};
use std::cmp::Reverse;
use std::collections::{BinaryHeap, HashSet};

/// Default S-pair budget, large enough for every computation in this crate
/// with a comfortable margin.
pub const DEFAULT_PAIR_BUDGET: usize = 200_000;

/// A finitely generated ideal in a polynomial ring.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Ideal {
    ring: Ring,
    gens: Vec<Polynomial>,
}

impl Ideal {
    /// Builds an ideal; zero generators are dropped, and every generator
    /// must live in `ring`.
    pub fn new(ring: &Ring, gens: Vec<Polynomial>) -> Result<Ideal> {
        for g in &gens {
            ring.check_compatible(g.ring())?;
        }
        let gens = gens.into_iter().filter(|g| !g.is_zero()).collect();
        Ok(Ideal { ring: ring.clone(), gens })
    }

    pub fn zero(ring: &Ring) -> Ideal {
        Ideal { ring: ring.clone(), gens: Vec::new() }
    }

    pub fn ring(&self) -> &Ring {
        &self.ring
    }

    pub fn gens(&self) -> &[Polynomial] {
        &self.gens
    }

    /// True when every generator is homogeneous for the ring grading.
    pub fn is_homogeneous(&self) -> bool {
        self.gens.iter().all(|g| g.is_homogeneous())
    }

    /// The ideal generated by both sets of generators.
    pub fn sum(&self, other: &Ideal) -> Result<Ideal> {
        self.ring.check_compatible(&other.ring)?;
        let mut gens = self.gens.clone();
        gens.extend(other.gens.iter().cloned());
        Ideal::new(&self.ring, gens)
    }
}

/// A reduced Groebner basis together with the data needed to reuse it.
#[derive(Debug, Clone)]
pub struct GroebnerBasis {
    ring: Ring,
    order: MonomialOrder,
    elements: Vec<Polynomial>,
    pairs_processed: usize,
}

impl GroebnerBasis {
    /// The ring the basis elements live in (carries `order`).
    pub fn ring(&self) -> &Ring {
        &self.ring
    }

    pub fn order(&self) -> &MonomialOrder {
        &self.order
    }

    pub fn elements(&self) -> &[Polynomial] {
        &self.elements
    }

    /// Number of S-pairs reduced while computing the basis.
    pub fn pairs_processed(&self) -> usize {
        self.pairs_processed
    }

    /// Leading monomials of the basis, i.e. the minimal generators of the
    /// leading-term ideal.
    pub fn leading_monomials(&self) -> Vec<Monomial> {
        self.elements
            .iter()
            .map(|g| g.leading_monomial().expect("basis elements are nonzero").clone())
            .collect()
    }

    /// Fully reduces `f` modulo the basis.  The input may live in a
    /// structurally identical ring with a different order; the result is
    /// returned in the basis ring.
    pub fn normal_form(&self, f: &Polynomial) -> Result<Polynomial> {
        let f = if f.ring() == &self.ring { f.clone() } else { f.into_order(&self.ring)? };
        normal_form(&f, &self.elements)
    }

    /// Ideal membership test.
    pub fn contains(&self, f: &Polynomial) -> Result<bool> {
        Ok(self.normal_form(f)?.is_zero())
    }

    /// True when the basis contains a nonzero constant, i.e. the ideal is
    /// the unit ideal.
    pub fn is_unit_ideal(&self) -> bool {
        self.elements.iter().any(|g| g.leading_monomial().is_some_and(Monomial::is_one))
    }

    /// Monomials of the given multidegree that survive in the quotient:
    /// those not divisible by any leading monomial.  Decreasing ring order.
    pub fn standard_monomials(&self, degree: &[i64]) -> Vec<Monomial> {
        let lts = self.leading_monomials();
        self.ring
            .monomials_of_degree(degree)
            .into_iter()
            .filter(|m| !lts.iter().any(|lt| lt.divides(m)))
            .collect()
    }

    /// Dimension of the quotient slice in the given multidegree.
    pub fn quotient_slice_dim(&self, degree: &[i64]) -> usize {
        self.standard_monomials(degree).len()
    }
}

/// Fully reduces `f` against an ordered list of nonzero polynomials (all in
/// the same ring).  Deterministic: the first divisor in list order wins.
pub fn normal_form(f: &Polynomial, basis: &[Polynomial]) -> Result<Polynomial> {
    let ring = f.ring().clone();
    let field = ring.field().clone();
    let lts: Vec<(Monomial, FieldElement)> = basis
        .iter()
        .map(|g| {
            let (m, c) = g.leading().expect("reducers are nonzero");
            (m.clone(), c.clone())
        })
        .collect();
    let mut work = f.clone();
    let mut result: Vec<(Monomial, FieldElement)> = Vec::new();
    'outer: loop {
        let Some((lm, lc)) = work.leading().map(|(m, c)| (m.clone(), c.clone())) else {
            break;
        };
        for (g, (glm, glc)) in basis.iter().zip(lts.iter()) {
            if glm.divides(&lm) {
                let q = lm.div(glm);
                let c = field.div(&lc, glc)?;
                work = work.sub_mul_term(&c, &q, g)?;
                continue 'outer;
            }
        }
        // Leading term is irreducible: move it to the result.
        result.push((lm, lc));
        work = work.drop_leading();
    }
    Ok(ring.assemble_sorted(result))
}

/// One reduction quotient: `f = sum q_i g_i + r`.  Returns the quotients
/// alongside the remainder; used by exact division and by tests that verify
/// the division identity.
pub fn divide(f: &Polynomial, basis: &[Polynomial]) -> Result<(Vec<Polynomial>, Polynomial)> {
    let ring = f.ring().clone();
    let field = ring.field().clone();
    let mut quots = vec![ring.zero(); basis.len()];
    let mut work = f.clone();
    let mut rem: Vec<(Monomial, FieldElement)> = Vec::new();
    'outer: loop {
        let Some((lm, lc)) = work.leading().map(|(m, c)| (m.clone(), c.clone())) else {
            break;
        };
        for (i, g) in basis.iter().enumerate() {
            let (glm, glc) = g.leading().expect("reducers are nonzero");
            if glm.divides(&lm) {
                let q = lm.div(glm);
                let c = field.div(&lc, glc)?;
                let term = ring.polynomial(vec![(q.clone(), c.clone())]);
                quots[i] = quots[i].add(&term)?;
                work = work.sub_mul_term(&c, &q, g)?;
                continue 'outer;
            }
        }
        rem.push((lm, lc));
        work = work.drop_leading();
    }
    Ok((quots, ring.assemble_sorted(rem)))
}

/// Exact division by a single polynomial; errors when the remainder is
/// nonzero.
pub fn div_exact(f: &Polynomial, g: &Polynomial) -> Result<Polynomial> {
    if g.is_zero() {
        return Err(Error::DivisionByZero);
    }
    let (mut quots, rem) = divide(f, std::slice::from_ref(g))?;
    if !rem.is_zero() {
        return Err(Error::Invalid(format!("`{f}` is not divisible by `{g}`")));
    }
    Ok(quots.remove(0))
}

struct Pair {
    lcm: Monomial,
    deg: u32,
    i: usize,
    j: usize,
}

/// Computes the reduced Groebner basis of `ideal` under `order`.
///
/// `budget` bounds the number of S-pairs reduced; `None` uses
/// [`DEFAULT_PAIR_BUDGET`].
pub fn groebner_basis(
    ideal: &Ideal,
    order: &MonomialOrder,
    budget: Option<usize>,
) -> Result<GroebnerBasis> {
    let budget = budget.unwrap_or(DEFAULT_PAIR_BUDGET);
    let work_ring = if ideal.ring().order() == order {
        ideal.ring().clone()
    } else {
        ideal.ring().with_order(order.clone())?
    };

    // Move generators into the work ring, dropping zeros and duplicates.
    let mut basis: Vec<Polynomial> = Vec::new();
    for g in ideal.gens() {
        let g = g.into_order(&work_ring)?.normalized();
        if !g.is_zero() && !basis.contains(&g) {
            basis.push(g);
        }
    }

    let mut pairs: BinaryHeap<Reverse<(u32, usize, usize)>> = BinaryHeap::new();
    let mut alive: HashSet<(usize, usize)> = HashSet::new();
    let mut lcms: std::collections::HashMap<(usize, usize), Monomial> =
        std::collections::HashMap::new();

    // Gebauer-Moeller update: install pairs of `t` against all previous
    // elements and prune.
    let update = |basis: &[Polynomial],
                  pairs: &mut BinaryHeap<Reverse<(u32, usize, usize)>>,
                  alive: &mut HashSet<(usize, usize)>,
                  lcms: &mut std::collections::HashMap<(usize, usize), Monomial>,
                  t: usize| {
        let lt_t = basis[t].leading_monomial().unwrap().clone();
        let mut cand: Vec<Pair> = Vec::new();
        for i in 0..t {
            let lt_i = basis[i].leading_monomial().unwrap();
            let lcm = lt_i.lcm(&lt_t);
            cand.push(Pair { deg: lcm.total_degree(), lcm, i, j: t });
        }
        // Prune old pairs made redundant by the new leading term.
        alive.retain(|&(i, j)| {
            let lcm_ij = &lcms[&(i, j)];
            let keep = !lt_t.divides(lcm_ij)
                || cand[i].lcm == *lcm_ij
                || cand[j].lcm == *lcm_ij;
            if !keep {
                lcms.remove(&(i, j));
            }
            keep
        });
        // Among the new pairs, drop those whose lcm is a proper multiple of
        // another new pair's lcm, then collapse equal lcms to the smallest
        // index (criteria M and F), and drop coprime pairs (criterion B).
        let mut keep_flags = vec![true; cand.len()];
        for a in 0..cand.len() {
            if !keep_flags[a] {
                continue;
            }
            for b in 0..cand.len() {
                if a == b || !keep_flags[b] {
                    continue;
                }
                if cand[b].lcm != cand[a].lcm && cand[b].lcm.divides(&cand[a].lcm) {
                    keep_flags[a] = false;
                    break;
                }
            }
        }
        for a in 0..cand.len() {
            if !keep_flags[a] {
                continue;
            }
            for b in (a + 1)..cand.len() {
                if keep_flags[b] && cand[a].lcm == cand[b].lcm {
                    keep_flags[b] = false;
                }
            }
        }
        for (a, p) in cand.into_iter().enumerate() {
            if !keep_flags[a] {
                continue;
            }
            let lt_i = basis[p.i].leading_monomial().unwrap();
            if lt_i.coprime(&lt_t) {
                continue; // Buchberger's coprimality criterion
            }
            alive.insert((p.i, p.j));
            lcms.insert((p.i, p.j), p.lcm.clone());
            pairs.push(Reverse((p.deg, p.i, p.j)));
        }
    };

    for t in 0..basis.len() {
        update(&basis, &mut pairs, &mut alive, &mut lcms, t);
    }

    let mut processed = 0usize;
    while let Some(Reverse((_, i, j))) = pairs.pop() {
        if !alive.remove(&(i, j)) {
            continue; // pruned after scheduling
        }
        lcms.remove(&(i, j));
        processed += 1;
        if processed > budget {
            return Err(Error::BudgetExceeded(format!(
                "Groebner computation exceeded {budget} S-pair reductions"
            )));
        }
        let s = s_polynomial(&basis[i], &basis[j])?;
        let r = normal_form(&s, &basis)?;
        if !r.is_zero() {
            basis.push(r.normalized());
            let t = basis.len() - 1;
            update(&basis, &mut pairs, &mut alive, &mut lcms, t);
        }
    }

    // Minimalize: drop elements whose leading monomial is divisible by a
    // different element's leading monomial.
    let mut minimal: Vec<Polynomial> = Vec::new();
    for (a, g) in basis.iter().enumerate() {
        let lm = g.leading_monomial().unwrap();
        let redundant = basis.iter().enumerate().any(|(b, h)| {
            if a == b {
                return false;
            }
            let hm = h.leading_monomial().unwrap();
            hm.divides(lm) && (hm != lm || b < a)
        });
        if !redundant {
            minimal.push(g.clone());
        }
    }

    // Tail-interreduce to the reduced basis.
    let mut reduced: Vec<Polynomial> = Vec::with_capacity(minimal.len());
    for a in 0..minimal.len() {
        let others: Vec<Polynomial> = minimal
            .iter()
            .enumerate()
            .filter(|(b, _)| *b != a)
            .map(|(_, h)| h.clone())
            .collect();
        let r = normal_form(&minimal[a], &others)?;
        debug_assert!(!r.is_zero(), "minimal basis element reduced to zero");
        reduced.push(r.normalized());
    }
    reduced.sort_by(|f, g| {
        work_ring.compare(f.leading_monomial().unwrap(), g.leading_monomial().unwrap())
    });

    Ok(GroebnerBasis { ring: work_ring, order: order.clone(), elements: reduced, pairs_processed: processed })
}

fn s_polynomial(f: &Polynomial, g: &Polynomial) -> Result<Polynomial> {
    let (fm, fc) = f.leading().expect("nonzero");
    let (gm, gc) = g.leading().expect("nonzero");
    let lcm = fm.lcm(gm);
    // gc * (lcm/fm) * f - fc * (lcm/gm) * g cancels the leading terms
    // without any field division, which keeps rational arithmetic tame.
    let a = f.mul_term(&lcm.div(fm), &gc.clone())?;
    let b = g.mul_term(&lcm.div(gm), &fc.clone())?;
    a.sub(&b)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::FieldDescriptor;
    use crate::poly::parse_polynomial;

    fn ring(field: FieldDescriptor) -> Ring {
        Ring::standard(&["x", "y", "z"], field)
    }

    fn ideal(r: &Ring, gens: &[&str]) -> Ideal {
        Ideal::new(r, gens.iter().map(|s| parse_polynomial(r, s).unwrap()).collect()).unwrap()
    }

    fn gb(r: &Ring, gens: &[&str]) -> GroebnerBasis {
        groebner_basis(&ideal(r, gens), &MonomialOrder::DegRevLex, None).unwrap()
    }

    #[test]
    fn textbook_basis_under_lex() {
        // Cox-Little-O'Shea: I = (x^2 - y, x^3 - z) under lex has reduced
        // basis {x^2 - y, x*y - z, x*z - y^2, y^3 - z^2}.
        let r = Ring::standard(&["x", "y", "z"], FieldDescriptor::Rationals);
        let i = ideal(&r, &["x^2 - y", "x^3 - z"]);
        let g = groebner_basis(&i, &MonomialOrder::Lex, None).unwrap();
        let printed: Vec<String> = g.elements().iter().map(|p| p.to_string()).collect();
        assert_eq!(
            printed,
            vec!["y^3 - z^2", "x*z - y^2", "x*y - z", "x^2 - y"],
        );
    }

    #[test]
    fn all_s_pairs_reduce_to_zero() {
        let r = ring(FieldDescriptor::prime(32003).unwrap());
        let g = gb(&r, &["x^2 + y*z", "x*y - z^2", "y^3 - x*z^2 + z^3"]);
        for a in 0..g.elements().len() {
            for b in (a + 1)..g.elements().len() {
                let s = s_polynomial(&g.elements()[a], &g.elements()[b]).unwrap();
                assert!(g.normal_form(&s).unwrap().is_zero());
            }
        }
    }

    #[test]
    fn membership_and_normal_form() {
        let r = ring(FieldDescriptor::Rationals);
        let g = gb(&r, &["x^2 - y", "y^2 - z"]);
        let f = parse_polynomial(&r, "x^4 - z").unwrap();
        assert!(g.contains(&f).unwrap());
        let h = parse_polynomial(&r, "x^4").unwrap();
        let nf = g.normal_form(&h).unwrap();
        assert_eq!(nf.to_string(), "z");
    }

    #[test]
    fn division_identity_holds() {
        let r = ring(FieldDescriptor::Rationals);
        let f = parse_polynomial(&r, "x^3*y + x*y^2 + y + 3").unwrap();
        let d1 = parse_polynomial(&r, "x*y - 1").unwrap();
        let d2 = parse_polynomial(&r, "y^2 - 1").unwrap();
        let (q, rem) = divide(&f, &[d1.clone(), d2.clone()]).unwrap();
        let mut acc = rem.clone();
        acc = acc.add(&q[0].mul(&d1).unwrap()).unwrap();
        acc = acc.add(&q[1].mul(&d2).unwrap()).unwrap();
        assert_eq!(acc, f);
        // No remainder term is divisible by any divisor leading term.
        for (m, _) in rem.terms() {
            assert!(!d1.leading_monomial().unwrap().divides(m));
            assert!(!d2.leading_monomial().unwrap().divides(m));
        }
    }

    #[test]
    fn exact_division() {
        let r = ring(FieldDescriptor::Rationals);
        let f = parse_polynomial(&r, "x^2*y + x*y^2").unwrap();
        let g = parse_polynomial(&r, "x + y").unwrap();
        let q = div_exact(&f, &g).unwrap();
        assert_eq!(q.to_string(), "x*y");
        assert!(div_exact(&f, &parse_polynomial(&r, "x + z").unwrap()).is_err());
    }

    #[test]
    fn reduced_basis_is_canonical_across_generator_order() {
        let r = ring(FieldDescriptor::prime(31991).unwrap());
        let g1 = gb(&r, &["x^2 - y*z", "y^2 - x*z", "z^2 - x*y"]);
        let g2 = gb(&r, &["z^2 - x*y", "x^2 - y*z", "y^2 - x*z"]);
        assert_eq!(g1.elements(), g2.elements());
    }

    #[test]
    fn unit_ideal_detection() {
        let r = ring(FieldDescriptor::Rationals);
        let g = gb(&r, &["x", "x + 1"]);
        assert!(g.is_unit_ideal());
        assert_eq!(g.elements().len(), 1);
        assert_eq!(g.elements()[0].to_string(), "1");
    }

    #[test]
    fn budget_is_enforced() {
        let r = ring(FieldDescriptor::prime(32003).unwrap());
        let i = ideal(&r, &["x^2 + y*z", "x*y - z^2", "y^3 - x*z^2 + z^3"]);
        let err = groebner_basis(&i, &MonomialOrder::DegRevLex, Some(1)).unwrap_err();
        assert!(matches!(err, Error::BudgetExceeded(_)));
    }

    #[test]
    fn standard_monomials_of_quotient() {
        // K[x,y,z]/(x^2, y^3) in degree 3.
        let r = ring(FieldDescriptor::Rationals);
        let g = gb(&r, &["x^2", "y^3"]);
        let std3 = g.standard_monomials(&[3]);
        // Degree-3 monomials avoiding x^2 and y^3: x*y^2, x*y*z, x*z^2,
        // y^2*z, y*z^2, z^3.
        assert_eq!(std3.len(), 6);
        assert_eq!(g.quotient_slice_dim(&[0]), 1);
        assert_eq!(g.quotient_slice_dim(&[1]), 3);
    }

    #[test]
    fn homogeneous_ideal_of_squares() {
        let r = ring(FieldDescriptor::Rationals);
        let g = gb(&r, &["x^2", "y^2", "z^2"]);
        // Complete intersection of quadrics: Hilbert function 1, 3, 3, 1.
        assert_eq!(g.quotient_slice_dim(&[0]), 1);
        assert_eq!(g.quotient_slice_dim(&[1]), 3);
        assert_eq!(g.quotient_slice_dim(&[2]), 3);
        assert_eq!(g.quotient_slice_dim(&[3]), 1);
        assert_eq!(g.quotient_slice_dim(&[4]), 0);
    }
}
