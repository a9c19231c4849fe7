//! Ideal-theoretic operations built on Groebner bases: elimination,
//! intersection, colon ideals, Krull dimension, slice dimensions and
//! minimal homogeneous generators.

use super::{div_exact, groebner_basis, GroebnerBasis, Ideal};
use crate::arith::matrix::Echelon;
use crate::poly::{Monomial, MonomialOrder, Polynomial, Ring};
use crate::{Error, Result};
use std::collections::BTreeMap;

/// Eliminates the listed variables: returns generators of `I` intersected
/// with the subring on the remaining variables, as an ideal of that smaller
/// ring (degrevlex).  The returned generators are the reduced Groebner
/// basis of the elimination ideal.
pub fn eliminate(ideal: &Ideal, drop_vars: &[usize], budget: Option<usize>) -> Result<Ideal> {
    let ring = ideal.ring();
    let n = ring.num_vars();
    let mut is_dropped = vec![false; n];
    for &v in drop_vars {
        if v >= n {
            return Err(Error::Invalid(format!("variable index {v} out of range")));
        }
        if is_dropped[v] {
            return Err(Error::Invalid(format!("variable index {v} listed twice")));
        }
        is_dropped[v] = true;
    }
    if drop_vars.is_empty() {
        return Ok(ideal.clone());
    }
    if drop_vars.len() == n {
        return Err(Error::Invalid("cannot eliminate every variable".to_string()));
    }

    // Work ring: dropped variables first, then the kept ones, under the
    // block elimination order.
    let mut names: Vec<String> = Vec::with_capacity(n);
    let mut grading: Vec<Vec<i64>> = Vec::with_capacity(n);
    for &v in drop_vars {
        names.push(ring.var_name(v).to_string());
        grading.push(ring.var_degree(v).to_vec());
    }
    let kept: Vec<usize> = (0..n).filter(|v| !is_dropped[*v]).collect();
    for &v in &kept {
        names.push(ring.var_name(v).to_string());
        grading.push(ring.var_degree(v).to_vec());
    }
    let work = Ring::new(
        names.iter().map(String::clone).collect(),
        grading,
        ring.field().clone(),
        MonomialOrder::elimination(drop_vars.len()),
    )?;
    let work_gens: Result<Vec<Polynomial>> =
        ideal.gens().iter().map(|g| g.map_by_names(&work)).collect();
    let work_ideal = Ideal::new(&work, work_gens?)?;
    let gb = groebner_basis(&work_ideal, work.order(), budget)?;

    // Keep basis elements free of the dropped block.
    let split = drop_vars.len();
    let survivors: Vec<&Polynomial> = gb
        .elements()
        .iter()
        .filter(|g| g.terms().iter().all(|(m, _)| m.0[..split].iter().all(|&e| e == 0)))
        .collect();

    let result_ring = Ring::new(
        kept.iter().map(|&v| ring.var_name(v).to_string()).collect(),
        kept.iter().map(|&v| ring.var_degree(v).to_vec()).collect(),
        ring.field().clone(),
        MonomialOrder::DegRevLex,
    )?;
    let gens: Result<Vec<Polynomial>> =
        survivors.iter().map(|g| g.map_by_names(&result_ring)).collect();
    Ideal::new(&result_ring, gens?)
}

/// Intersection of two ideals of the same ring, by the single-tag-variable
/// elimination `I cap J = (u*I + (1-u)*J) cap R`.
pub fn intersect(a: &Ideal, b: &Ideal, budget: Option<usize>) -> Result<Ideal> {
    let ring = a.ring();
    ring.check_compatible(b.ring())?;
    if a.gens().is_empty() || b.gens().is_empty() {
        return Ok(Ideal::zero(ring));
    }
    // Fresh tag variable name.
    let mut tag = "u".to_string();
    while ring.var_index(&tag).is_some() {
        tag.push('_');
    }
    let k = ring.grading_rank();
    let mut names = vec![tag.clone()];
    names.extend(ring.vars().iter().cloned());
    let mut grading = vec![vec![0i64; k]];
    grading.extend((0..ring.num_vars()).map(|v| ring.var_degree(v).to_vec()));
    let work = Ring::new(names, grading, ring.field().clone(), MonomialOrder::elimination(1))?;

    let u = work.var(0);
    let one_minus_u = work.one().sub(&u)?;
    let mut gens = Vec::new();
    for f in a.gens() {
        gens.push(u.mul(&f.map_by_names(&work)?)?);
    }
    for g in b.gens() {
        gens.push(one_minus_u.mul(&g.map_by_names(&work)?)?);
    }
    let work_ideal = Ideal::new(&work, gens)?;
    let eliminated = eliminate(&work_ideal, &[0], budget)?;
    let back: Result<Vec<Polynomial>> =
        eliminated.gens().iter().map(|g| g.map_by_names(ring)).collect();
    Ideal::new(ring, back?)
}

/// The colon ideal (I : f) for a single nonzero polynomial `f`, computed as
/// (I intersect (f)) / f.
pub fn colon(ideal: &Ideal, f: &Polynomial, budget: Option<usize>) -> Result<Ideal> {
    if f.is_zero() {
        return Err(Error::DivisionByZero);
    }
    let ring = ideal.ring();
    ring.check_compatible(f.ring())?;
    let principal = Ideal::new(ring, vec![f.clone()])?;
    let meet = intersect(ideal, &principal, budget)?;
    let gens: Result<Vec<Polynomial>> =
        meet.gens().iter().map(|g| div_exact(g, f)).collect();
    Ideal::new(ring, gens?)
}

/// True when the two ideals of the same ring are equal, decided by
/// comparing reduced degrevlex Groebner bases (which are canonical).
pub fn ideals_equal(a: &Ideal, b: &Ideal, budget: Option<usize>) -> Result<bool> {
    a.ring().check_compatible(b.ring())?;
    let ga = groebner_basis(a, &MonomialOrder::DegRevLex, budget)?;
    let gb = groebner_basis(b, &MonomialOrder::DegRevLex, budget)?;
    Ok(ga.elements() == gb.elements())
}

/// Krull dimension of the quotient ring R/I, via the maximal size of a set
/// of variables independent modulo the leading-term ideal.
pub fn krull_dimension(gb: &GroebnerBasis) -> Result<usize> {
    if gb.is_unit_ideal() {
        return Err(Error::ZeroRing);
    }
    let n = gb.ring().num_vars();
    if n > 24 {
        return Err(Error::Invalid(format!(
            "independent-set search not supported beyond 24 variables (got {n})"
        )));
    }
    let masks: Vec<u32> = gb
        .leading_monomials()
        .iter()
        .map(|m| {
            let mut mask = 0u32;
            for v in m.support() {
                mask |= 1 << v;
            }
            mask
        })
        .collect();
    let mut best = 0usize;
    for s in 0u32..(1 << n) {
        let size = s.count_ones() as usize;
        if size <= best {
            continue;
        }
        // Independent iff no leading monomial has support inside s.
        if masks.iter().all(|&g| g & !s != 0) {
            best = size;
        }
    }
    Ok(best)
}

/// Dimension of the degree-`degree` slice of the ideal itself (not the
/// quotient) inside a multigraded polynomial ring.
pub fn homogeneous_slice_dim(gb: &GroebnerBasis, degree: &[i64]) -> usize {
    let total = gb.ring().monomials_of_degree(degree).len();
    total - gb.quotient_slice_dim(degree)
}

/// An echelonized vector-space basis of the ideal slice in the given
/// multidegree, as polynomials.  Deterministic: coordinates are taken
/// against the decreasing monomial list of the degree, and basis vectors
/// come out sorted by decreasing leading monomial.
pub fn ideal_slice_basis(gb: &GroebnerBasis, degree: &[i64]) -> Result<Vec<Polynomial>> {
    let ring = gb.ring().clone();
    let mons = ring.monomials_of_degree(degree);
    let index: std::collections::HashMap<&Monomial, usize> =
        mons.iter().enumerate().map(|(i, m)| (m, i)).collect();
    let field = ring.field().clone();
    let mut ech = Echelon::new(&field, mons.len());
    for g in gb.elements() {
        let gdeg = ring.multidegree(g.leading_monomial().expect("nonzero"));
        // Multiplier degree needed to land in the target slice.
        let mult_deg: Vec<i64> = degree.iter().zip(gdeg.iter()).map(|(a, b)| a - b).collect();
        if mult_deg.iter().any(|&d| d < 0) {
            continue;
        }
        for m in ring.monomials_of_degree(&mult_deg) {
            let prod = g.mul_term(&m, &field.one())?;
            let mut row = vec![field.zero(); mons.len()];
            for (pm, pc) in prod.terms() {
                row[index[pm]] = pc.clone();
            }
            ech.insert(&row);
            if ech.is_full() {
                break;
            }
        }
        if ech.is_full() {
            break;
        }
    }
    let mut out = Vec::new();
    for row in ech.basis_rows() {
        let terms: Vec<(Monomial, crate::arith::FieldElement)> = row
            .into_iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(|(i, c)| (mons[i].clone(), c))
            .collect();
        out.push(ring.polynomial(terms));
    }
    Ok(out)
}

/// Degrees and counts of a minimal homogeneous generating set.
#[derive(Debug, Clone, PartialEq, Eq, serde::Serialize)]
pub struct MinimalGenerators {
    /// degree -> number of minimal generators in that degree
    pub counts: BTreeMap<i64, usize>,
    /// Degrees were scanned up to and including this cap.
    pub cap: i64,
}

impl MinimalGenerators {
    pub fn total(&self) -> usize {
        self.counts.values().sum()
    }
}

/// Counts minimal homogeneous generators of the ideal by degree, for
/// degrees up to `cap`: the count in degree d is dim I_d - dim (R_1 I_{d-1}).
/// Requires a singly graded ring with positive weights and a homogeneous
/// ideal.
pub fn min_generators(gb: &GroebnerBasis, cap: i64) -> Result<MinimalGenerators> {
    let ring = gb.ring().clone();
    if ring.grading_rank() != 1 {
        return Err(Error::Invalid(
            "minimal generator counting requires a singly graded ring".to_string(),
        ));
    }
    for g in gb.elements() {
        g.multidegree()?; // errors when inhomogeneous
    }
    let field = ring.field().clone();
    let mut counts = BTreeMap::new();
    for d in 0..=cap {
        let mons = ring.monomials_of_degree(&[d]);
        if mons.is_empty() {
            continue;
        }
        let dim_ideal = homogeneous_slice_dim(gb, &[d]);
        if dim_ideal == 0 {
            continue;
        }
        let index: std::collections::HashMap<&Monomial, usize> =
            mons.iter().enumerate().map(|(i, m)| (m, i)) .collect();
        // Span of R_1 * I_{d-1}: products m*g with deg m >= 1.  Since the
        // basis generates the ideal in every degree, these products span.
        let mut ech = Echelon::new(&field, mons.len());
        'outer: for g in gb.elements() {
            let gdeg = ring.weighted_degree(g.leading_monomial().expect("nonzero"));
            if gdeg > d - 1 {
                continue;
            }
            for m in ring.monomials_of_degree(&[d - gdeg]) {
                if m.is_one() {
                    continue;
                }
                let prod = g.mul_term(&m, &field.one())?;
                let mut row = vec![field.zero(); mons.len()];
                for (pm, pc) in prod.terms() {
                    row[index[pm]] = pc.clone();
                }
                ech.insert(&row);
                if ech.rank() == dim_ideal {
                    break 'outer;
                }
            }
        }
        let fresh = dim_ideal - ech.rank();
        if fresh > 0 {
            counts.insert(d, fresh);
        }
    }
    Ok(MinimalGenerators { counts, cap })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::FieldDescriptor;
    use crate::groebner::groebner_basis;
    use crate::poly::parse_polynomial;

    fn ring() -> Ring {
        Ring::standard(&["x", "y", "z"], FieldDescriptor::Rationals)
    }

    fn ideal(r: &Ring, gens: &[&str]) -> Ideal {
        Ideal::new(r, gens.iter().map(|s| parse_polynomial(r, s).unwrap()).collect()).unwrap()
    }

    #[test]
    fn eliminate_parametrized_twisted_cubic() {
        // x = t, y = t^2, z = t^3 -> relations (y - x^2, z - x^3); dropping
        // nothing to do with t here: eliminate x from (y - x^2, z - x*y).
        let r = ring();
        let i = ideal(&r, &["y - x^2", "z - x*y"]);
        let e = eliminate(&i, &[0], None).unwrap();
        assert_eq!(e.ring().vars(), &["y".to_string(), "z".to_string()]);
        let printed: Vec<String> = e.gens().iter().map(|p| p.to_string()).collect();
        assert_eq!(printed, vec!["y^3 - z^2"]);
    }

    #[test]
    fn intersect_monomial_ideals() {
        let r = ring();
        let a = ideal(&r, &["x"]);
        let b = ideal(&r, &["y"]);
        let m = intersect(&a, &b, None).unwrap();
        let printed: Vec<String> = m.gens().iter().map(|p| p.to_string()).collect();
        assert_eq!(printed, vec!["x*y"]);
    }

    #[test]
    fn intersect_with_containment() {
        let r = ring();
        let a = ideal(&r, &["x^2", "y"]);
        let b = ideal(&r, &["x"]);
        let m = intersect(&a, &b, None).unwrap();
        // (x^2, y) cap (x) = (x^2, x*y)
        let expected = ideal(&r, &["x^2", "x*y"]);
        assert!(ideals_equal(&m, &expected, None).unwrap());
    }

    #[test]
    fn colon_examples() {
        let r = ring();
        let i = ideal(&r, &["x^2*y", "x*z"]);
        let x = parse_polynomial(&r, "x").unwrap();
        let c = colon(&i, &x, None).unwrap();
        let expected = ideal(&r, &["x*y", "z"]);
        assert!(ideals_equal(&c, &expected, None).unwrap());
        // Colon by a nonzerodivisor leaves the ideal unchanged.
        let ci = ideal(&r, &["x^2", "y^2"]);
        let f = parse_polynomial(&r, "x + y + z").unwrap();
        let c2 = colon(&ci, &f, None).unwrap();
        assert!(ideals_equal(&c2, &ci, None).unwrap());
    }

    #[test]
    fn krull_dimension_examples() {
        let r = ring();
        let cases: &[(&[&str], usize)] = &[
            (&["x^2", "y^2", "z^2"], 0),
            (&["x*y", "x*z"], 2),   // plane x=0 union line y=z=0
            (&["x*y*z"], 2),
            (&["x"], 2),
            (&["x", "y"], 1),
        ];
        for (gens, want) in cases {
            let g = groebner_basis(&ideal(&r, gens), &MonomialOrder::DegRevLex, None).unwrap();
            assert_eq!(krull_dimension(&g).unwrap(), *want, "gens {gens:?}");
        }
        let unit = groebner_basis(&ideal(&r, &["x", "x + 1"]), &MonomialOrder::DegRevLex, None).unwrap();
        assert!(matches!(krull_dimension(&unit), Err(Error::ZeroRing)));
    }

    #[test]
    fn minimal_generators_of_complete_intersection() {
        let r = ring();
        let g = groebner_basis(&ideal(&r, &["x^2", "y^3", "z^4"]), &MonomialOrder::DegRevLex, None)
            .unwrap();
        let mg = min_generators(&g, 6).unwrap();
        let expected: BTreeMap<i64, usize> = [(2, 1), (3, 1), (4, 1)].into_iter().collect();
        assert_eq!(mg.counts, expected);
    }

    #[test]
    fn minimal_generators_seen_through_a_redundant_basis() {
        // The reduced GB of (x^2, x*y, y^2, (x+y)^2) under degrevlex has
        // three quadrics; the minimal generator count must still be 3.
        let r = ring();
        let g = groebner_basis(
            &ideal(&r, &["x^2", "x*y", "y^2", "x^2 + 2*x*y + y^2"]),
            &MonomialOrder::DegRevLex,
            None,
        )
        .unwrap();
        let mg = min_generators(&g, 4).unwrap();
        assert_eq!(mg.counts, [(2, 3)].into_iter().collect());
    }

    #[test]
    fn ideal_slice_basis_spans_the_slice() {
        let r = ring();
        let g = groebner_basis(&ideal(&r, &["x^2 - y*z", "x*y"]), &MonomialOrder::DegRevLex, None)
            .unwrap();
        for d in 2..5 {
            let basis = ideal_slice_basis(&g, &[d]).unwrap();
            assert_eq!(basis.len(), homogeneous_slice_dim(&g, &[d]));
            for p in &basis {
                assert!(g.contains(p).unwrap());
            }
        }
    }
}
