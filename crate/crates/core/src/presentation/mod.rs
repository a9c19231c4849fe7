//! Presentations of subalgebras generated by equal-degree forms.
//!
//! Given forms g_1..g_r of a common degree c in a standard-graded ring,
//! the subalgebra K[g_1..g_r] is presented as K[z_1..z_r]/I where I is the
//! kernel of z_j -> g_j.  The kernel is computed exactly by eliminating
//! the ambient variables from the graph ideal (z_j - g_j), and the result
//! is regraded so each z_j has degree one; the presentation is then a
//! standard-graded quotient whose degree-d slice matches the span of the
//! d-fold products of the generators.
//!
//! The main clients are coordinate rings of projections of the cubic
//! Veronese surface: the generators are the nine cubics apolar to a
//! ternary cubic F ([`projection_generators`]), with the projection from
//! the product of the three coordinate lines ([`pinched_veronese_generators`])
//! as the distinguished special case.

use crate::apolarity::{apolar_slice, DualPair};
use crate::arith::matrix::Echelon;
use crate::groebner::{
    groebner_basis, hilbert_series, min_generators, GroebnerBasis, HilbertSeries, Ideal,
    MinimalGenerators,
};
use crate::poly::{MonomialOrder, Polynomial, Ring};
use crate::{Error, Result};
use std::collections::HashMap;

/// The nine cubics apolar to a nonzero ternary cubic F: a deterministic
/// basis of the degree-three slice of the apolar ideal.  These generate
/// the coordinate ring of the projection of the cubic Veronese surface
/// away from the point [F].
pub fn projection_generators(pair: &DualPair, f: &Polynomial) -> Result<Vec<Polynomial>> {
    if pair.primal().num_vars() != 3 {
        return Err(Error::Invalid("projection generators need three variables".to_string()));
    }
    let Some(d) = f.multidegree()? else { return Err(Error::ZeroForm) };
    if d[0] != 3 {
        return Err(Error::Invalid("projection generators need a cubic form".to_string()));
    }
    let gens = apolar_slice(pair, f, 3)?;
    debug_assert_eq!(gens.len(), 9);
    Ok(gens)
}

/// Generators of the pinched Veronese: the projection away from the
/// product of the three coordinate linear forms, i.e. the nine cubic
/// monomials other than the squarefree one.
pub fn pinched_veronese_generators(pair: &DualPair) -> Result<Vec<Polynomial>> {
    let r = pair.primal();
    let product = r.polynomial(vec![(r.monomial(&[(0, 1), (1, 1), (2, 1)]), r.field().one())]);
    projection_generators(pair, &product)
}

/// A finite presentation K[z_1..z_r]/I of the subalgebra generated by
/// equal-degree forms, with its canonical reduced Groebner basis.
#[derive(Debug, Clone)]
pub struct Presentation {
    ring: Ring,
    generators: Vec<Polynomial>,
    degree: i64,
    ideal: Ideal,
    gb: GroebnerBasis,
}

/// Presents K[gens] with default presentation variables z1..zr.
pub fn subalgebra_presentation(
    gens: &[Polynomial],
    budget: Option<usize>,
) -> Result<Presentation> {
    let names: Vec<String> = (1..=gens.len()).map(|j| format!("z{j}")).collect();
    subalgebra_presentation_named(gens, &names, budget)
}

/// Presents K[gens] with caller-chosen presentation variable names.
pub fn subalgebra_presentation_named(
    gens: &[Polynomial],
    names: &[String],
    budget: Option<usize>,
) -> Result<Presentation> {
    let Some(first) = gens.first() else {
        return Err(Error::Invalid("no subalgebra generators given".to_string()));
    };
    if names.len() != gens.len() {
        return Err(Error::DimensionMismatch(format!(
            "{} names for {} generators",
            names.len(),
            gens.len()
        )));
    }
    let source = first.ring().clone();
    if source.grading_rank() != 1
        || (0..source.num_vars()).any(|v| source.var_degree(v) != [1])
    {
        return Err(Error::Invalid(
            "subalgebra presentation needs a standard-graded source ring".to_string(),
        ));
    }
    let mut degree = None;
    for g in gens {
        source.check_compatible(g.ring())?;
        let Some(d) = g.multidegree()? else { return Err(Error::ZeroForm) };
        if *degree.get_or_insert(d[0]) != d[0] {
            return Err(Error::Invalid(
                "subalgebra generators must share one degree".to_string(),
            ));
        }
    }
    let degree = degree.expect("nonempty generators");
    if degree < 1 {
        return Err(Error::Invalid("subalgebra generators must have positive degree".to_string()));
    }
    for name in names {
        if source.var_index(name).is_some() {
            return Err(Error::Invalid(format!(
                "presentation variable {name} collides with a source variable"
            )));
        }
    }

    // Graph ideal (z_j - g_j) in K[source vars, z's], with z graded by the
    // generator degree so the ideal is homogeneous.
    let n = source.num_vars();
    let mut work_names: Vec<String> = source.vars().to_vec();
    work_names.extend(names.iter().cloned());
    let mut grading = vec![vec![1i64]; n];
    grading.extend(std::iter::repeat(vec![degree]).take(gens.len()));
    let work = Ring::new(work_names, grading, source.field().clone(), MonomialOrder::DegRevLex)?;
    let mut graph = Vec::with_capacity(gens.len());
    for (j, g) in gens.iter().enumerate() {
        graph.push(work.var(n + j).sub(&g.map_by_names(&work)?)?);
    }
    let graph_ideal = Ideal::new(&work, graph)?;
    let eliminated = eliminate_source(&graph_ideal, n, budget)?;

    // Regrade: presentation ring is standard-graded in the z's.
    let target = Ring::new(
        names.to_vec(),
        vec![vec![1]; names.len()],
        source.field().clone(),
        MonomialOrder::DegRevLex,
    )?;
    let regraded: Result<Vec<Polynomial>> =
        eliminated.gens().iter().map(|g| g.map_by_names(&target)).collect();
    let ideal = Ideal::new(&target, regraded?)?;
    let gb = groebner_basis(&ideal, &MonomialOrder::DegRevLex, budget)?;
    Ok(Presentation { ring: target, generators: gens.to_vec(), degree, ideal, gb })
}

fn eliminate_source(graph: &Ideal, n: usize, budget: Option<usize>) -> Result<Ideal> {
    let drop: Vec<usize> = (0..n).collect();
    crate::groebner::eliminate(graph, &drop, budget)
}

impl Presentation {
    /// The standard-graded presentation ring K[z_1..z_r].
    pub fn ring(&self) -> &Ring {
        &self.ring
    }

    /// The subalgebra generators, in their source ring.
    pub fn generators(&self) -> &[Polynomial] {
        &self.generators
    }

    /// Common degree of the generators in the source ring.
    pub fn generator_degree(&self) -> i64 {
        self.degree
    }

    /// The defining ideal (its generators are the reduced Groebner basis).
    pub fn ideal(&self) -> &Ideal {
        &self.ideal
    }

    /// Canonical reduced degrevlex Groebner basis of the defining ideal.
    pub fn groebner(&self) -> &GroebnerBasis {
        &self.gb
    }

    /// Degrees and counts of a minimal homogeneous generating set of the
    /// defining ideal, up to and including `cap`.
    pub fn relation_profile(&self, cap: i64) -> Result<MinimalGenerators> {
        min_generators(&self.gb, cap)
    }

    /// True when the defining ideal is generated by quadrics through the
    /// inspected degree range.
    pub fn is_quadratic(&self, cap: i64) -> Result<bool> {
        Ok(self.relation_profile(cap)?.counts.keys().all(|&d| d == 2))
    }

    /// Dimension of the degree-d slice of the presented quotient ring.
    pub fn quotient_dimension(&self, d: i64) -> Result<usize> {
        Ok(self.gb.quotient_slice_dim(&[d]))
    }

    /// Hilbert series of the presented quotient ring.
    pub fn hilbert_series(&self) -> Result<HilbertSeries> {
        hilbert_series(&self.gb)
    }

    /// Independent consistency check: for each degree d <= `through`, the
    /// quotient slice dimension must equal the dimension of the span of
    /// the d-fold products of the generators inside the source ring.
    pub fn check_hilbert_consistency(&self, through: i64) -> Result<bool> {
        for d in 0..=through {
            if self.quotient_dimension(d)? != product_span_dimension(&self.generators, d)? {
                return Ok(false);
            }
        }
        Ok(true)
    }
}

/// Dimension of the span of all degree-d products of the given
/// equal-degree forms, inside their source ring.  Serves as a
/// linear-algebra oracle for presentation quotients.
pub fn product_span_dimension(gens: &[Polynomial], d: i64) -> Result<usize> {
    if d == 0 {
        return Ok(1);
    }
    let Some(first) = gens.first() else { return Ok(0) };
    let source = first.ring().clone();
    let degree = first
        .multidegree()?
        .ok_or(Error::ZeroForm)?[0];
    let slice = source.monomials_of_degree(&[degree * d]);
    let index: HashMap<_, _> = slice.iter().enumerate().map(|(i, m)| (m.clone(), i)).collect();
    let field = source.field();
    let mut ech = Echelon::new(field, slice.len());
    // Multisets of size d over the generators, built recursively with the
    // running product shared across the branch.
    fn visit(
        gens: &[Polynomial],
        from: usize,
        remaining: i64,
        acc: &Polynomial,
        index: &HashMap<crate::poly::Monomial, usize>,
        ech: &mut Echelon,
    ) -> Result<()> {
        if remaining == 0 {
            let mut row = vec![acc.ring().field().zero(); index.len()];
            for (m, c) in acc.terms() {
                row[index[m]] = c.clone();
            }
            ech.insert(&row);
            return Ok(());
        }
        for j in from..gens.len() {
            if ech.is_full() {
                return Ok(());
            }
            let next = acc.mul(&gens[j])?;
            visit(gens, j, remaining - 1, &next, index, ech)?;
        }
        Ok(())
    }
    let one = source.one();
    visit(gens, 0, d, &one, &index, &mut ech)?;
    Ok(ech.rank())
}

/// Convenience: presentation of the projection of the cubic Veronese away
/// from [F].
pub fn projection_presentation(
    pair: &DualPair,
    f: &Polynomial,
    budget: Option<usize>,
) -> Result<Presentation> {
    let gens = projection_generators(pair, f)?;
    subalgebra_presentation(&gens, budget)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::FieldDescriptor;
    use crate::poly::parse_polynomial;

    fn pair() -> DualPair {
        DualPair::new(2, FieldDescriptor::prime(32003).unwrap())
    }

    #[test]
    fn pinched_generators_are_the_nine_non_squarefree_cubics() {
        let p = pair();
        let gens = pinched_veronese_generators(&p).unwrap();
        assert_eq!(gens.len(), 9);
        let squarefree = p.dual().monomial(&[(0, 1), (1, 1), (2, 1)]);
        for g in &gens {
            assert_eq!(g.num_terms(), 1, "monomial form projects to monomials");
            assert_ne!(g.leading_monomial().unwrap(), &squarefree);
        }
    }

    #[test]
    fn pinched_veronese_is_presented_by_seventeen_quadrics() {
        let p = pair();
        let gens = pinched_veronese_generators(&p).unwrap();
        let pres = subalgebra_presentation(&gens, None).unwrap();
        let profile = pres.relation_profile(4).unwrap();
        assert_eq!(profile.counts, [(2, 17)].into_iter().collect());
        assert!(pres.is_quadratic(4).unwrap());
        assert!(pres.check_hilbert_consistency(4).unwrap());
    }

    #[test]
    fn monomial_orbit_representative_needs_a_cubic_relation() {
        // F = y1*y2^2: the projection misses x1*x2^2, and the monomial
        // x1*x2^5 of degree six is not a product of two remaining cubics,
        // which forces 18 quadrics and one cubic relation.
        let p = pair();
        let f = parse_polynomial(p.primal(), "y1*y2^2").unwrap();
        let pres = projection_presentation(&p, &f, None).unwrap();
        let profile = pres.relation_profile(4).unwrap();
        assert_eq!(profile.counts, [(2, 18), (3, 1)].into_iter().collect());
        assert!(!pres.is_quadratic(4).unwrap());
        assert!(pres.check_hilbert_consistency(4).unwrap());
    }

    #[test]
    fn quotient_dimensions_match_product_spans_for_a_dense_form() {
        let p = pair();
        let f = parse_polynomial(p.primal(), "y0^3 + y1^3 + y2^3").unwrap();
        let pres = projection_presentation(&p, &f, None).unwrap();
        assert!(pres.check_hilbert_consistency(3).unwrap());
        // Degree-one slice is the nine generators themselves.
        assert_eq!(pres.quotient_dimension(1).unwrap(), 9);
    }

    #[test]
    fn segre_style_product_ring_has_one_quadric() {
        // K[ac, ad, bc, bd] inside K[a, b, c, d]: one relation
        // z1*z4 - z2*z3.
        let field = FieldDescriptor::prime(32003).unwrap();
        let r = Ring::standard(&["a", "b", "c", "d"], field);
        let gens: Vec<Polynomial> = [("a", "c"), ("a", "d"), ("b", "c"), ("b", "d")]
            .iter()
            .map(|(u, v)| {
                parse_polynomial(&r, &format!("{u}*{v}")).unwrap()
            })
            .collect();
        let pres = subalgebra_presentation(&gens, None).unwrap();
        let profile = pres.relation_profile(3).unwrap();
        assert_eq!(profile.counts, [(2, 1)].into_iter().collect());
        let rel = parse_polynomial(pres.ring(), "z1*z4 - z2*z3").unwrap();
        assert!(pres.groebner().contains(&rel).unwrap());
    }

    #[test]
    fn degenerate_inputs_are_rejected() {
        let p = pair();
        assert!(subalgebra_presentation(&[], None).is_err());
        let mixed = vec![
            parse_polynomial(p.dual(), "x0^2").unwrap(),
            parse_polynomial(p.dual(), "x1^3").unwrap(),
        ];
        assert!(subalgebra_presentation(&mixed, None).is_err());
        let zero = vec![p.dual().zero()];
        assert!(subalgebra_presentation(&zero, None).is_err());
    }
}
