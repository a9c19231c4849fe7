//! Rees algebras of three-form complete intersections, their bigraded
//! presentations, and diagonal subalgebras.
//!
//! For a complete intersection I = (g1, g2, g3) in R = K[x1..xn], the Rees
//! algebra R[It] is presented on the bigraded ring S = K[x.., t1, t2, t3]
//! (deg x_i = (1,0), deg t_j = (0,1)) by the three signed 2x2 minors of
//!
//! ```text
//!   | g1 g2 g3 |
//!   | t1 t2 t3 |
//! ```
//!
//! with the signs chosen so both rows are syzygies of (f1, f2, f3).  The
//! module confirms this presentation against an elimination oracle, checks
//! the colon identities that drive the two-periodic complex (see
//! [`complex`]), and provides diagonal slice helpers: the (c,e)-diagonal of
//! a bigraded quotient collects the slices in bidegrees (cs, es), which for
//! (1,1) and I generated by quadrics is the subalgebra generated by the
//! cubics of I.

pub mod complex;

pub use complex::{build_complex, TwoPeriodicComplex};

use crate::groebner::{
    colon, eliminate, groebner_basis, ideals_equal, krull_dimension, GroebnerBasis, Ideal,
};
use crate::poly::{MonomialOrder, Polynomial, Ring};
use crate::presentation::{subalgebra_presentation_named, Presentation};
use crate::{Error, Result};

/// Bigraded presentation data of the Rees algebra of a codimension-three
/// complete intersection.
#[derive(Debug, Clone)]
pub struct ReesPresentation {
    ring: Ring,
    base_vars: usize,
    g: Vec<Polynomial>,
    f: Vec<Polynomial>,
    ideal: Ideal,
}

/// Builds the Rees presentation for three equal-degree forms that cut out
/// a complete intersection.
pub fn rees_presentation(gens: &[Polynomial], budget: Option<usize>) -> Result<ReesPresentation> {
    if gens.len() != 3 {
        return Err(Error::NotCompleteIntersection(format!(
            "expected three forms, got {}",
            gens.len()
        )));
    }
    let source = gens[0].ring().clone();
    if source.grading_rank() != 1
        || (0..source.num_vars()).any(|v| source.var_degree(v) != [1])
    {
        return Err(Error::Invalid(
            "Rees presentation needs a standard-graded base ring".to_string(),
        ));
    }
    let n = source.num_vars();
    if n < 3 {
        return Err(Error::NotCompleteIntersection(
            "three forms cannot be a complete intersection in fewer than three variables"
                .to_string(),
        ));
    }
    let mut degree = None;
    for g in gens {
        source.check_compatible(g.ring())?;
        let Some(d) = g.multidegree()? else { return Err(Error::ZeroForm) };
        if *degree.get_or_insert(d[0]) != d[0] {
            return Err(Error::Invalid("the three forms must share one degree".to_string()));
        }
    }
    // Complete intersection certificate: codimension equals the number of
    // generators.
    let base_ideal = Ideal::new(&source, gens.to_vec())?;
    let base_gb = groebner_basis(&base_ideal, &MonomialOrder::DegRevLex, budget)?;
    let dim = krull_dimension(&base_gb)?;
    if dim != n - 3 {
        return Err(Error::NotCompleteIntersection(format!(
            "quotient has dimension {dim}, expected {}",
            n - 3
        )));
    }

    // S = K[x.., t1..t3], deg x = (1,0), deg t = (0,1).
    let mut names: Vec<String> = source.vars().to_vec();
    for j in 1..=3 {
        let t = format!("t{j}");
        if source.var_index(&t).is_some() {
            return Err(Error::Invalid(format!(
                "base variable {t} collides with a Rees variable"
            )));
        }
        names.push(t);
    }
    let mut grading: Vec<Vec<i64>> = vec![vec![1, 0]; n];
    grading.extend(std::iter::repeat(vec![0, 1]).take(3));
    let ring = Ring::new(names, grading, source.field().clone(), MonomialOrder::DegRevLex)?;

    let g_in_s: Result<Vec<Polynomial>> = gens.iter().map(|g| g.map_by_names(&ring)).collect();
    let g_in_s = g_in_s?;
    let t: Vec<Polynomial> = (0..3).map(|j| ring.var(n + j)).collect();
    // Signed minors: f_i = (-1)^(i+1) * minor dropping column i, so that
    // g1 f1 + g2 f2 + g3 f3 = 0 and t1 f1 + t2 f2 + t3 f3 = 0.
    let f1 = g_in_s[1].mul(&t[2])?.sub(&g_in_s[2].mul(&t[1])?)?;
    let f2 = g_in_s[2].mul(&t[0])?.sub(&g_in_s[0].mul(&t[2])?)?;
    let f3 = g_in_s[0].mul(&t[1])?.sub(&g_in_s[1].mul(&t[0])?)?;
    let f = vec![f1, f2, f3];
    debug_assert!({
        let mut s = ring.zero();
        for i in 0..3 {
            s = s.add(&g_in_s[i].mul(&f[i]).unwrap()).unwrap();
        }
        s.is_zero()
    });
    let ideal = Ideal::new(&ring, f.clone())?;
    Ok(ReesPresentation { ring, base_vars: n, g: g_in_s, f, ideal })
}

impl ReesPresentation {
    /// The bigraded ambient ring S.
    pub fn ring(&self) -> &Ring {
        &self.ring
    }

    /// Number of base variables x_i.
    pub fn base_vars(&self) -> usize {
        self.base_vars
    }

    /// The three input forms, mapped into S.
    pub fn forms(&self) -> &[Polynomial] {
        &self.g
    }

    /// The signed minors f1, f2, f3.
    pub fn minors(&self) -> &[Polynomial] {
        &self.f
    }

    /// The presentation ideal J = (f1, f2, f3).
    pub fn ideal(&self) -> &Ideal {
        &self.ideal
    }

    /// The ideal (f1, f2) presenting the intermediate quotient that the
    /// two-periodic complex lives over.
    pub fn pair_ideal(&self) -> Result<Ideal> {
        Ideal::new(&self.ring, self.f[..2].to_vec())
    }

    /// The t-variables as elements of S.
    pub fn t_var(&self, j: usize) -> Polynomial {
        self.ring.var(self.base_vars + j)
    }

    /// Exact identity check: both rows of the defining matrix are syzygies
    /// of the signed minors.
    pub fn rows_are_syzygies(&self) -> Result<bool> {
        let mut by_g = self.ring.zero();
        let mut by_t = self.ring.zero();
        for i in 0..3 {
            by_g = by_g.add(&self.g[i].mul(&self.f[i])?)?;
            by_t = by_t.add(&self.t_var(i).mul(&self.f[i])?)?;
        }
        Ok(by_g.is_zero() && by_t.is_zero())
    }

    /// Independent oracle for the presentation ideal: the kernel of
    /// S -> R[s], t_j -> s*g_j, computed by eliminating s.
    pub fn kernel_oracle(&self, budget: Option<usize>) -> Result<Ideal> {
        let n = self.base_vars;
        let mut s_name = "s".to_string();
        while self.ring.var_index(&s_name).is_some() {
            s_name.push('_');
        }
        let mut names: Vec<String> = self.ring.vars().to_vec();
        names.push(s_name);
        let work = Ring::new(
            names,
            vec![vec![1]; n + 4],
            self.ring.field().clone(),
            MonomialOrder::DegRevLex,
        )?;
        let s = work.var(n + 3);
        let mut gens = Vec::with_capacity(3);
        for j in 0..3 {
            let tj = work.var(n + j);
            gens.push(tj.sub(&s.mul(&self.g[j].map_by_names(&work)?)?)?);
        }
        let graph = Ideal::new(&work, gens)?;
        let kernel = eliminate(&graph, &[n + 3], budget)?;
        let back: Result<Vec<Polynomial>> =
            kernel.gens().iter().map(|g| g.map_by_names(&self.ring)).collect();
        Ideal::new(&self.ring, back?)
    }

    /// True when (f1, f2, f3) equals the full kernel of the Rees map, i.e.
    /// the ideal is of linear type.
    pub fn is_linear_type(&self, budget: Option<usize>) -> Result<bool> {
        let oracle = self.kernel_oracle(budget)?;
        ideals_equal(&self.ideal, &oracle, budget)
    }
}

/// Outcome of the four exact identities behind the two-periodic complex.
#[derive(Debug, Clone, Copy, PartialEq, Eq, serde::Serialize)]
pub struct ColonIdentityReport {
    /// f1, f2 is a regular sequence (codimension two).
    pub pair_is_regular_sequence: bool,
    /// (f1, f2) : f3 = (g3, t3).
    pub colon_by_f3: bool,
    /// (f1, f2) : t3 = (f1, f2, f3).
    pub colon_by_t3: bool,
    /// (t3, f1, f2) : g3 = (t1, t2, t3).
    pub colon_by_g3: bool,
}

impl ColonIdentityReport {
    pub fn all_hold(&self) -> bool {
        self.pair_is_regular_sequence && self.colon_by_f3 && self.colon_by_t3 && self.colon_by_g3
    }
}

/// Verifies the four colon/regular-sequence identities for a Rees
/// presentation.
pub fn check_colon_identities(
    rp: &ReesPresentation,
    budget: Option<usize>,
) -> Result<ColonIdentityReport> {
    let ring = rp.ring();
    let pair = rp.pair_ideal()?;
    let pair_gb = groebner_basis(&pair, &MonomialOrder::DegRevLex, budget)?;
    // Regular sequence of two homogeneous elements in a polynomial ring
    // means codimension two.
    let regular = krull_dimension(&pair_gb)? == ring.num_vars() - 2;

    let g3 = &rp.forms()[2];
    let t3 = rp.t_var(2);
    let f3 = &rp.minors()[2];

    let colon_f3 = {
        let got = colon(&pair, f3, budget)?;
        let want = Ideal::new(ring, vec![g3.clone(), t3.clone()])?;
        ideals_equal(&got, &want, budget)?
    };
    let colon_t3 = {
        let got = colon(&pair, &t3, budget)?;
        ideals_equal(&got, rp.ideal(), budget)?
    };
    let colon_g3 = {
        let with_t3 = Ideal::new(ring, vec![t3.clone(), rp.minors()[0].clone(), rp.minors()[1].clone()])?;
        let got = colon(&with_t3, g3, budget)?;
        let want = Ideal::new(ring, (0..3).map(|j| rp.t_var(j)).collect())?;
        ideals_equal(&got, &want, budget)?
    };
    Ok(ColonIdentityReport {
        pair_is_regular_sequence: regular,
        colon_by_f3: colon_f3,
        colon_by_t3: colon_t3,
        colon_by_g3: colon_g3,
    })
}

/// Dimension of the s-th slice of the (c,e)-diagonal of the quotient by
/// the basis ideal, shifted by (a,b): the slice in bidegree
/// (c*s - a, e*s - b).
pub fn diagonal_slice_dim(
    gb: &GroebnerBasis,
    c: i64,
    e: i64,
    shift: (i64, i64),
    s: i64,
) -> usize {
    let (a, b) = shift;
    let p = c * s - a;
    let q = e * s - b;
    if p < 0 || q < 0 {
        return 0;
    }
    gb.quotient_slice_dim(&[p, q])
}

/// Balances bidegree-(a,b) generators onto the diagonal: each generator is
/// multiplied by all monomials in the deficient variable block so every
/// product has equal bidegree components.  For generators of bidegree
/// (2,1) this returns the generators times each t-variable — the induced
/// generators of the diagonal restriction of the ideal.
pub fn diagonal_restriction_gens(ideal: &Ideal) -> Result<Vec<Polynomial>> {
    let ring = ideal.ring();
    if ring.grading_rank() != 2 {
        return Err(Error::Invalid("diagonal restriction needs a bigraded ring".to_string()));
    }
    let mut out = Vec::new();
    for g in ideal.gens() {
        let Some(d) = g.multidegree()? else { continue };
        let (a, b) = (d[0], d[1]);
        if a == b {
            out.push(g.clone());
            continue;
        }
        // Multiply by all monomials of bidegree (b-a, 0) or (0, a-b).
        let want = if a < b { [b - a, 0] } else { [0, a - b] };
        for m in ring.monomials_of_degree(&want) {
            out.push(g.mul_term(&m, &ring.field().one())?);
        }
    }
    Ok(out)
}

/// The three 2x2 minors of the rectangular matrix
/// `| x1^2  x2^2  0 |` over `| 0  t2  t3 |` inside a Rees ambient ring:
/// (x1^2 t2, x1^2 t3, x2^2 t3).  A codimension-two determinantal ideal
/// with the same bidegrees as a Rees presentation but a non-prime
/// structure.
pub fn determinantal_comparison_ideal(ring: &Ring) -> Result<Ideal> {
    for name in ["x1", "x2", "t2", "t3"] {
        if ring.var_index(name).is_none() {
            return Err(Error::Invalid(format!("ring is missing variable {name}")));
        }
    }
    let x1 = ring.var(ring.var_index("x1").expect("checked"));
    let x2 = ring.var(ring.var_index("x2").expect("checked"));
    let t2 = ring.var(ring.var_index("t2").expect("checked"));
    let t3 = ring.var(ring.var_index("t3").expect("checked"));
    let x1sq = x1.mul(&x1)?;
    let x2sq = x2.mul(&x2)?;
    Ideal::new(
        ring,
        vec![x1sq.mul(&t2)?, x1sq.mul(&t3)?, x2sq.mul(&t3)?],
    )
}

/// Compares the diagonal Hilbert functions of two bigraded quotients of
/// the same ring through diagonal degree `through`: returns the first
/// disagreeing degree, or None when they agree everywhere.
pub fn diagonal_hilbert_mismatch(
    a: &GroebnerBasis,
    b: &GroebnerBasis,
    c: i64,
    e: i64,
    through: i64,
) -> Option<i64> {
    (0..=through).find(|&s| {
        diagonal_slice_dim(a, c, e, (0, 0), s) != diagonal_slice_dim(b, c, e, (0, 0), s)
    })
}

/// Presentation of the Segre product K[x_i t_j] of polynomial rings in m
/// and n variables, with the defining ideal checked against the 2x2
/// minors of the generic matrix (z_ij).
pub struct SegrePresentation {
    pub presentation: Presentation,
    /// Whether the computed defining ideal equals the 2x2 minors ideal.
    pub minors_verified: bool,
}

pub fn segre_presentation(
    field: &crate::arith::FieldDescriptor,
    m: usize,
    n: usize,
    budget: Option<usize>,
) -> Result<SegrePresentation> {
    if m == 0 || n == 0 || m > 9 || n > 9 {
        return Err(Error::Invalid("Segre factors must have 1..=9 variables".to_string()));
    }
    let mut names: Vec<String> = (1..=m).map(|i| format!("x{i}")).collect();
    names.extend((1..=n).map(|j| format!("t{j}")));
    let source = Ring::new(
        names,
        vec![vec![1]; m + n],
        field.clone(),
        MonomialOrder::DegRevLex,
    )?;
    let mut gens = Vec::with_capacity(m * n);
    let mut znames = Vec::with_capacity(m * n);
    for i in 0..m {
        for j in 0..n {
            gens.push(source.var(i).mul(&source.var(m + j))?);
            znames.push(format!("z{}{}", i + 1, j + 1));
        }
    }
    let presentation = subalgebra_presentation_named(&gens, &znames, budget)?;
    // Oracle: the ideal of 2x2 minors z_ij z_kl - z_il z_kj.
    let zring = presentation.ring();
    let mut minors = Vec::new();
    for i in 0..m {
        for k in (i + 1)..m {
            for j in 0..n {
                for l in (j + 1)..n {
                    let a = zring.var(i * n + j);
                    let b = zring.var(k * n + l);
                    let c = zring.var(i * n + l);
                    let d = zring.var(k * n + j);
                    minors.push(a.mul(&b)?.sub(&c.mul(&d)?)?);
                }
            }
        }
    }
    let minors_ideal = Ideal::new(zring, minors)?;
    let minors_verified = ideals_equal(presentation.ideal(), &minors_ideal, budget)?;
    Ok(SegrePresentation { presentation, minors_verified })
}
