//! Multivariate polynomials over exact fields with Z^k multigradings.
//!
//! A [`Ring`] is an immutable, cheaply clonable description of a polynomial
//! ring: named variables, a Z^k degree vector per variable, the coefficient
//! field and a monomial order.  [`Polynomial`] values carry a handle to
//! their ring; all arithmetic checks ring compatibility, so polynomials
//! from different rings never mix silently.
//!
//! Terms are kept sorted in strictly decreasing monomial order with no zero
//! coefficients and no duplicate monomials, so the zero polynomial is the
//! empty term list and equality is structural.

mod order;
mod parse;

pub use order::MonomialOrder;
pub use parse::parse_polynomial;

use crate::arith::{FieldDescriptor, FieldElement};
use crate::{Error, Result};
use smallvec::SmallVec;
use std::cmp::Ordering;
use std::collections::HashMap;
use std::fmt;
use std::sync::Arc;

/// Exponent vector; inline storage covers every ring in this crate
/// (at most fifteen variables appear, in the Segre elimination).
pub type Exponents = SmallVec<[u16; 16]>;

/// A monomial, i.e. an exponent vector relative to some ring.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Monomial(pub Exponents);

impl Monomial {
    pub fn one(nvars: usize) -> Monomial {
        Monomial(SmallVec::from_elem(0, nvars))
    }

    pub fn var(nvars: usize, i: usize) -> Monomial {
        let mut e = SmallVec::from_elem(0, nvars);
        e[i] = 1;
        Monomial(e)
    }

    pub fn is_one(&self) -> bool {
        self.0.iter().all(|&e| e == 0)
    }

    pub fn total_degree(&self) -> u32 {
        self.0.iter().map(|&e| e as u32).sum()
    }

    /// Product of two exponent vectors; errors on u16 overflow so runaway
    /// computations fail loudly instead of wrapping.
    pub fn mul(&self, other: &Monomial) -> Result<Monomial> {
        debug_assert_eq!(self.0.len(), other.0.len());
        let mut out = self.0.clone();
        for (a, b) in out.iter_mut().zip(other.0.iter()) {
            *a = a
                .checked_add(*b)
                .ok_or_else(|| Error::Invalid("monomial exponent overflow".to_string()))?;
        }
        Ok(Monomial(out))
    }

    /// True when `self` divides `other` componentwise.
    pub fn divides(&self, other: &Monomial) -> bool {
        self.0.iter().zip(other.0.iter()).all(|(a, b)| a <= b)
    }

    /// Exact quotient `self / other`; caller must ensure divisibility.
    pub fn div(&self, other: &Monomial) -> Monomial {
        debug_assert!(other.divides(self));
        let mut out = self.0.clone();
        for (a, b) in out.iter_mut().zip(other.0.iter()) {
            *a -= *b;
        }
        Monomial(out)
    }

    pub fn lcm(&self, other: &Monomial) -> Monomial {
        let mut out = self.0.clone();
        for (a, b) in out.iter_mut().zip(other.0.iter()) {
            *a = (*a).max(*b);
        }
        Monomial(out)
    }

    pub fn gcd(&self, other: &Monomial) -> Monomial {
        let mut out = self.0.clone();
        for (a, b) in out.iter_mut().zip(other.0.iter()) {
            *a = (*a).min(*b);
        }
        Monomial(out)
    }

    pub fn coprime(&self, other: &Monomial) -> bool {
        self.0.iter().zip(other.0.iter()).all(|(a, b)| *a == 0 || *b == 0)
    }

    /// Variables with positive exponent.
    pub fn support(&self) -> Vec<usize> {
        self.0
            .iter()
            .enumerate()
            .filter(|(_, &e)| e > 0)
            .map(|(i, _)| i)
            .collect()
    }
}

struct RingData {
    vars: Vec<String>,
    /// One Z^k degree vector per variable.
    grading: Vec<Vec<i64>>,
    grading_rank: usize,
    field: FieldDescriptor,
    order: MonomialOrder,
}

/// Immutable polynomial-ring descriptor, shared by handle.
#[derive(Clone)]
pub struct Ring(Arc<RingData>);

impl PartialEq for Ring {
    fn eq(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.0, &other.0)
            || (self.0.vars == other.0.vars
                && self.0.grading == other.0.grading
                && self.0.field == other.0.field
                && self.0.order == other.0.order)
    }
}
impl Eq for Ring {}

impl fmt::Debug for Ring {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}[{}]", self.0.field, self.0.vars.join(","))
    }
}

impl Ring {
    /// General constructor.  `grading` gives the Z^k degree of each
    /// variable; all vectors must share the same length k >= 1.
    pub fn new(
        vars: Vec<String>,
        grading: Vec<Vec<i64>>,
        field: FieldDescriptor,
        order: MonomialOrder,
    ) -> Result<Ring> {
        if vars.is_empty() {
            return Err(Error::Invalid("ring needs at least one variable".to_string()));
        }
        if vars.len() != grading.len() {
            return Err(Error::DimensionMismatch(format!(
                "{} variables but {} degree vectors",
                vars.len(),
                grading.len()
            )));
        }
        let k = grading.first().map_or(1, |g| g.len());
        if k == 0 || grading.iter().any(|g| g.len() != k) {
            return Err(Error::Invalid("grading vectors must share a positive length".to_string()));
        }
        {
            let mut seen = std::collections::HashSet::new();
            for v in &vars {
                if !seen.insert(v.clone()) {
                    return Err(Error::Invalid(format!("duplicate variable `{v}`")));
                }
            }
        }
        order.validate(vars.len())?;
        Ok(Ring(Arc::new(RingData { vars, grading_rank: k, grading, field, order })))
    }

    /// Standard graded ring (every variable of degree 1) under degrevlex.
    pub fn standard(vars: &[&str], field: FieldDescriptor) -> Ring {
        Ring::new(
            vars.iter().map(|s| s.to_string()).collect(),
            vec![vec![1]; vars.len()],
            field,
            MonomialOrder::DegRevLex,
        )
        .expect("standard ring construction cannot fail")
    }

    /// Z^2-graded ring: the first block of variables has degree (1,0), the
    /// second degree (0,1); degrevlex order.
    pub fn bigraded(x_vars: &[&str], t_vars: &[&str], field: FieldDescriptor) -> Ring {
        let vars: Vec<String> = x_vars.iter().chain(t_vars.iter()).map(|s| s.to_string()).collect();
        let mut grading = vec![vec![1, 0]; x_vars.len()];
        grading.extend(vec![vec![0, 1]; t_vars.len()]);
        Ring::new(vars, grading, field, MonomialOrder::DegRevLex)
            .expect("bigraded ring construction cannot fail")
    }

    /// Same ring under a different monomial order.
    pub fn with_order(&self, order: MonomialOrder) -> Result<Ring> {
        Ring::new(self.0.vars.clone(), self.0.grading.clone(), self.0.field.clone(), order)
    }

    pub fn num_vars(&self) -> usize {
        self.0.vars.len()
    }

    pub fn vars(&self) -> &[String] {
        &self.0.vars
    }

    pub fn var_name(&self, i: usize) -> &str {
        &self.0.vars[i]
    }

    pub fn var_index(&self, name: &str) -> Option<usize> {
        self.0.vars.iter().position(|v| v == name)
    }

    pub fn field(&self) -> &FieldDescriptor {
        &self.0.field
    }

    pub fn order(&self) -> &MonomialOrder {
        &self.0.order
    }

    /// Rank k of the Z^k grading.
    pub fn grading_rank(&self) -> usize {
        self.0.grading_rank
    }

    /// Z^k degree vector of a variable.
    pub fn var_degree(&self, i: usize) -> &[i64] {
        &self.0.grading[i]
    }

    /// Z^k degree of a monomial.
    pub fn multidegree(&self, m: &Monomial) -> Vec<i64> {
        let mut deg = vec![0i64; self.0.grading_rank];
        for (i, &e) in m.0.iter().enumerate() {
            if e > 0 {
                for (d, g) in deg.iter_mut().zip(self.0.grading[i].iter()) {
                    *d += e as i64 * g;
                }
            }
        }
        deg
    }

    /// Total degree under the grading when k = 1, i.e. the weighted degree.
    pub fn weighted_degree(&self, m: &Monomial) -> i64 {
        m.0.iter()
            .enumerate()
            .map(|(i, &e)| e as i64 * self.0.grading[i][0])
            .sum()
    }

    pub fn compare(&self, a: &Monomial, b: &Monomial) -> Ordering {
        self.0.order.compare(a, b)
    }

    /// The constant-one polynomial.
    pub fn one(&self) -> Polynomial {
        Polynomial {
            ring: self.clone(),
            terms: vec![(Monomial::one(self.num_vars()), self.0.field.one())],
        }
    }

    pub fn zero(&self) -> Polynomial {
        Polynomial { ring: self.clone(), terms: Vec::new() }
    }

    /// The i-th variable as a polynomial.
    pub fn var(&self, i: usize) -> Polynomial {
        Polynomial {
            ring: self.clone(),
            terms: vec![(Monomial::var(self.num_vars(), i), self.0.field.one())],
        }
    }

    /// Builds a polynomial from (monomial, coefficient) pairs, combining
    /// duplicates and dropping zeros.
    pub fn polynomial(&self, terms: Vec<(Monomial, FieldElement)>) -> Polynomial {
        let mut map: HashMap<Monomial, FieldElement> = HashMap::with_capacity(terms.len());
        for (m, c) in terms {
            debug_assert_eq!(m.0.len(), self.num_vars());
            match map.entry(m) {
                std::collections::hash_map::Entry::Occupied(mut e) => {
                    let s = self.0.field.add(e.get(), &c);
                    if s.is_zero() {
                        e.remove();
                    } else {
                        *e.get_mut() = s;
                    }
                }
                std::collections::hash_map::Entry::Vacant(e) => {
                    if !c.is_zero() {
                        e.insert(c);
                    }
                }
            }
        }
        let mut terms: Vec<(Monomial, FieldElement)> = map.into_iter().collect();
        terms.sort_by(|a, b| self.compare(&b.0, &a.0));
        Polynomial { ring: self.clone(), terms }
    }

    /// Builds a polynomial from terms that are already strictly decreasing
    /// in the ring order with nonzero coefficients (internal fast path for
    /// reduction loops, which produce terms in order).
    pub(crate) fn assemble_sorted(&self, terms: Vec<(Monomial, FieldElement)>) -> Polynomial {
        debug_assert!(terms
            .windows(2)
            .all(|w| self.compare(&w[0].0, &w[1].0) == Ordering::Greater));
        debug_assert!(terms.iter().all(|(_, c)| !c.is_zero()));
        Polynomial { ring: self.clone(), terms }
    }

    /// Monomial from a sparse list of (variable index, exponent).
    pub fn monomial(&self, exps: &[(usize, u16)]) -> Monomial {
        let mut m = Monomial::one(self.num_vars());
        for &(i, e) in exps {
            m.0[i] += e;
        }
        m
    }

    /// All monomials of the given Z^k multidegree, sorted decreasingly in
    /// the ring order (so the leading monomial of the slice comes first).
    /// Requires every variable degree to be componentwise nonnegative.
    pub fn monomials_of_degree(&self, degree: &[i64]) -> Vec<Monomial> {
        assert_eq!(degree.len(), self.0.grading_rank);
        let mut out = Vec::new();
        let mut current = Monomial::one(self.num_vars());
        let mut remaining = degree.to_vec();
        self.enumerate_monomials(0, &mut current, &mut remaining, &mut out);
        out.sort_by(|a, b| self.compare(b, a));
        out
    }

    fn enumerate_monomials(
        &self,
        var: usize,
        current: &mut Monomial,
        remaining: &mut [i64],
        out: &mut Vec<Monomial>,
    ) {
        if remaining.iter().all(|&d| d == 0) {
            // Remaining degree zero: the tail variables must all be absent
            // (their degrees are nonzero for every ring in this crate).
            out.push(current.clone());
            return;
        }
        if var == self.num_vars() {
            return;
        }
        let g = &self.0.grading[var];
        // Maximum exponent of this variable that keeps the degree feasible.
        let mut max_e = u16::MAX as i64;
        for (d, &w) in remaining.iter().zip(g.iter()) {
            if w > 0 {
                max_e = max_e.min(*d / w);
            } else if w < 0 {
                return; // negative weights unsupported in enumeration
            }
        }
        if g.iter().all(|&w| w == 0) {
            max_e = 0; // degree-0 variable would make slices infinite
        }
        for e in 0..=max_e {
            if e > 0 {
                current.0[var] += 1;
                for (d, &w) in remaining.iter_mut().zip(g.iter()) {
                    *d -= w;
                }
            }
            if remaining.iter().all(|&d| d >= 0) {
                self.enumerate_monomials(var + 1, current, remaining, out);
            }
            if e == max_e {
                // restore
                current.0[var] -= e as u16;
                for (d, &w) in remaining.iter_mut().zip(g.iter()) {
                    *d += e * w;
                }
            }
        }
    }

    pub fn check_compatible(&self, other: &Ring) -> Result<()> {
        if self == other {
            Ok(())
        } else {
            Err(Error::IncompatibleRings(format!("{self:?}"), format!("{other:?}")))
        }
    }

    pub(crate) fn format_monomial(&self, m: &Monomial) -> String {
        if m.is_one() {
            return "1".to_string();
        }
        let mut parts = Vec::new();
        for (i, &e) in m.0.iter().enumerate() {
            if e == 1 {
                parts.push(self.0.vars[i].clone());
            } else if e > 1 {
                parts.push(format!("{}^{}", self.0.vars[i], e));
            }
        }
        parts.join("*")
    }
}

/// A polynomial: a ring handle plus terms sorted strictly decreasingly in
/// the ring's monomial order.
#[derive(Clone, PartialEq, Eq)]
pub struct Polynomial {
    ring: Ring,
    terms: Vec<(Monomial, FieldElement)>,
}

impl Polynomial {
    pub fn ring(&self) -> &Ring {
        &self.ring
    }

    pub fn terms(&self) -> &[(Monomial, FieldElement)] {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    /// Leading term in the ring order.
    pub fn leading(&self) -> Option<(&Monomial, &FieldElement)> {
        self.terms.first().map(|(m, c)| (m, c))
    }

    /// The polynomial without its leading term.
    pub(crate) fn drop_leading(&self) -> Polynomial {
        Polynomial { ring: self.ring.clone(), terms: self.terms[1..].to_vec() }
    }

    pub fn leading_monomial(&self) -> Option<&Monomial> {
        self.terms.first().map(|(m, _)| m)
    }

    pub fn coefficient(&self, m: &Monomial) -> FieldElement {
        // Terms are sorted, but linear scan is fine at these sizes.
        for (tm, c) in &self.terms {
            if tm == m {
                return c.clone();
            }
        }
        self.ring.field().zero()
    }

    /// Total degree (unweighted); None for the zero polynomial.
    pub fn total_degree(&self) -> Option<u32> {
        self.terms.iter().map(|(m, _)| m.total_degree()).max()
    }

    /// The common Z^k multidegree of all terms, or an error if the
    /// polynomial is not multihomogeneous.  Zero has every degree; None.
    pub fn multidegree(&self) -> Result<Option<Vec<i64>>> {
        let Some((m0, _)) = self.terms.first() else {
            return Ok(None);
        };
        let d = self.ring.multidegree(m0);
        for (m, _) in &self.terms[1..] {
            if self.ring.multidegree(m) != d {
                return Err(Error::NotHomogeneous(self.to_string()));
            }
        }
        Ok(Some(d))
    }

    pub fn is_homogeneous(&self) -> bool {
        self.multidegree().is_ok()
    }

    pub fn add(&self, other: &Polynomial) -> Result<Polynomial> {
        self.ring.check_compatible(&other.ring)?;
        let field = self.ring.field();
        let mut out = Vec::with_capacity(self.terms.len() + other.terms.len());
        let (mut i, mut j) = (0, 0);
        while i < self.terms.len() && j < other.terms.len() {
            match self.ring.compare(&self.terms[i].0, &other.terms[j].0) {
                Ordering::Greater => {
                    out.push(self.terms[i].clone());
                    i += 1;
                }
                Ordering::Less => {
                    out.push(other.terms[j].clone());
                    j += 1;
                }
                Ordering::Equal => {
                    let c = field.add(&self.terms[i].1, &other.terms[j].1);
                    if !c.is_zero() {
                        out.push((self.terms[i].0.clone(), c));
                    }
                    i += 1;
                    j += 1;
                }
            }
        }
        out.extend_from_slice(&self.terms[i..]);
        out.extend_from_slice(&other.terms[j..]);
        Ok(Polynomial { ring: self.ring.clone(), terms: out })
    }

    pub fn neg(&self) -> Polynomial {
        let field = self.ring.field();
        Polynomial {
            ring: self.ring.clone(),
            terms: self.terms.iter().map(|(m, c)| (m.clone(), field.neg(c))).collect(),
        }
    }

    pub fn sub(&self, other: &Polynomial) -> Result<Polynomial> {
        self.add(&other.neg())
    }

    /// Multiplies by a scalar.
    pub fn scale(&self, c: &FieldElement) -> Polynomial {
        if c.is_zero() {
            return self.ring.zero();
        }
        let field = self.ring.field();
        Polynomial {
            ring: self.ring.clone(),
            terms: self.terms.iter().map(|(m, k)| (m.clone(), field.mul(k, c))).collect(),
        }
    }

    /// Multiplies by a single term `c * m`.  Order-preserving, so the term
    /// list stays sorted without re-sorting.
    pub fn mul_term(&self, m: &Monomial, c: &FieldElement) -> Result<Polynomial> {
        if c.is_zero() {
            return Ok(self.ring.zero());
        }
        let field = self.ring.field();
        let mut terms = Vec::with_capacity(self.terms.len());
        for (tm, tc) in &self.terms {
            terms.push((tm.mul(m)?, field.mul(tc, c)));
        }
        Ok(Polynomial { ring: self.ring.clone(), terms })
    }

    /// `self - c * m * g`, the Groebner reduction step, as one fused merge.
    pub fn sub_mul_term(&self, c: &FieldElement, m: &Monomial, g: &Polynomial) -> Result<Polynomial> {
        let scaled = g.mul_term(m, &self.ring.field().neg(c))?;
        self.add(&scaled)
    }

    pub fn mul(&self, other: &Polynomial) -> Result<Polynomial> {
        self.ring.check_compatible(&other.ring)?;
        if self.is_zero() || other.is_zero() {
            return Ok(self.ring.zero());
        }
        let field = self.ring.field();
        let mut acc: HashMap<Monomial, FieldElement> =
            HashMap::with_capacity(self.terms.len() * other.terms.len());
        for (ma, ca) in &self.terms {
            for (mb, cb) in &other.terms {
                let m = ma.mul(mb)?;
                let c = field.mul(ca, cb);
                match acc.entry(m) {
                    std::collections::hash_map::Entry::Occupied(mut e) => {
                        let s = field.add(e.get(), &c);
                        if s.is_zero() {
                            e.remove();
                        } else {
                            *e.get_mut() = s;
                        }
                    }
                    std::collections::hash_map::Entry::Vacant(e) => {
                        e.insert(c);
                    }
                }
            }
        }
        let mut terms: Vec<_> = acc.into_iter().collect();
        terms.sort_by(|a, b| self.ring.compare(&b.0, &a.0));
        Ok(Polynomial { ring: self.ring.clone(), terms })
    }

    pub fn pow(&self, e: u32) -> Result<Polynomial> {
        let mut acc = self.ring.one();
        for _ in 0..e {
            acc = acc.mul(self)?;
        }
        Ok(acc)
    }

    /// Scales so the leading coefficient is 1 (no-op on zero).
    pub fn monic(&self) -> Polynomial {
        match self.leading() {
            None => self.clone(),
            Some((_, c)) => {
                let inv = self.ring.field().inv(c).expect("leading coefficient is nonzero");
                self.scale(&inv)
            }
        }
    }

    /// Over the rationals, clears denominators and divides by the content,
    /// then makes the leading coefficient positive; over GF(p) just monic.
    /// Produces a canonical scalar multiple, used for reduced bases.
    pub fn normalized(&self) -> Polynomial {
        use num_bigint::BigInt;
        use num_integer::Integer;
        use num_traits::Signed;
        if self.is_zero() {
            return self.clone();
        }
        match self.ring.field() {
            FieldDescriptor::Prime(_) => self.monic(),
            FieldDescriptor::Rationals => {
                let mut denom_lcm = BigInt::from(1);
                let mut numer_gcd = BigInt::from(0);
                for (_, c) in &self.terms {
                    let FieldElement::Rational(r) = c else { unreachable!() };
                    denom_lcm = denom_lcm.lcm(r.denom());
                    numer_gcd = numer_gcd.gcd(r.numer());
                }
                let mut scale = num_rational::BigRational::new(denom_lcm, numer_gcd);
                let FieldElement::Rational(lead) = &self.terms[0].1 else { unreachable!() };
                if (lead * &scale).is_negative() {
                    scale = -scale;
                }
                self.scale(&FieldElement::Rational(scale))
            }
        }
    }

    /// Substitutes `subs[i]` for variable i.  All substitution targets must
    /// live in `target`, and `subs.len()` must equal the number of
    /// variables of `self`'s ring.
    pub fn substitute(&self, target: &Ring, subs: &[Polynomial]) -> Result<Polynomial> {
        if subs.len() != self.ring.num_vars() {
            return Err(Error::DimensionMismatch(format!(
                "{} substitution targets for {} variables",
                subs.len(),
                self.ring.num_vars()
            )));
        }
        for s in subs {
            target.check_compatible(s.ring())?;
        }
        // Cache powers per variable: powers[i][e] = subs[i]^e.
        let mut powers: Vec<Vec<Polynomial>> = subs.iter().map(|s| vec![target.one(), s.clone()]).collect();
        let field = target.field();
        let mut acc = target.zero();
        for (m, c) in &self.terms {
            let mut term = target.one();
            for (i, &e) in m.0.iter().enumerate() {
                if e == 0 {
                    continue;
                }
                while powers[i].len() <= e as usize {
                    let last = powers[i].last().unwrap().clone();
                    powers[i].push(last.mul(&subs[i])?);
                }
                term = term.mul(&powers[i][e as usize])?;
            }
            let cc = convert_element(self.ring.field(), field, c)?;
            acc = acc.add(&term.scale(&cc))?;
        }
        Ok(acc)
    }

    /// Linear change of coordinates: variable i is replaced by the linear
    /// form with coefficients `mat[i]` (row i) in the same ring.
    pub fn linear_substitute(&self, mat: &[Vec<FieldElement>]) -> Result<Polynomial> {
        let n = self.ring.num_vars();
        if mat.len() != n || mat.iter().any(|row| row.len() != n) {
            return Err(Error::DimensionMismatch("linear substitution matrix".to_string()));
        }
        let subs: Vec<Polynomial> = mat
            .iter()
            .map(|row| {
                self.ring.polynomial(
                    row.iter()
                        .enumerate()
                        .map(|(j, c)| (Monomial::var(n, j), c.clone()))
                        .collect(),
                )
            })
            .collect();
        self.substitute(&self.ring, &subs)
    }

    /// Moves the polynomial to a structurally identical ring that may use a
    /// different monomial order (same variables, grading, field).
    pub fn into_order(&self, target: &Ring) -> Result<Polynomial> {
        if self.ring.vars() != target.vars()
            || self.ring.field() != target.field()
            || self.ring.0.grading != target.0.grading
        {
            return Err(Error::IncompatibleRings(
                format!("{:?}", self.ring),
                format!("{target:?}"),
            ));
        }
        let mut terms = self.terms.clone();
        terms.sort_by(|a, b| target.compare(&b.0, &a.0));
        Ok(Polynomial { ring: target.clone(), terms })
    }

    /// Maps the polynomial into `target` by variable names: every variable
    /// occurring in `self` must exist in `target`.  Used to embed a ring
    /// into a larger one or restrict to a subring after elimination.
    pub fn map_by_names(&self, target: &Ring) -> Result<Polynomial> {
        let mut index = Vec::with_capacity(self.ring.num_vars());
        for v in self.ring.vars() {
            index.push(target.var_index(v));
        }
        let mut terms = Vec::with_capacity(self.terms.len());
        for (m, c) in &self.terms {
            let mut out = Monomial::one(target.num_vars());
            for (i, &e) in m.0.iter().enumerate() {
                if e == 0 {
                    continue;
                }
                match index[i] {
                    Some(j) => out.0[j] += e,
                    None => {
                        return Err(Error::Invalid(format!(
                            "variable `{}` is absent from the target ring",
                            self.ring.var_name(i)
                        )))
                    }
                }
            }
            let cc = convert_element(self.ring.field(), target.field(), c)?;
            terms.push((out, cc));
        }
        Ok(target.polynomial(terms))
    }
}

/// Converts an element between field representations; only identical
/// fields are allowed (no rational-to-prime reduction happens implicitly).
pub(crate) fn convert_element(
    from: &FieldDescriptor,
    to: &FieldDescriptor,
    c: &FieldElement,
) -> Result<FieldElement> {
    if from == to {
        Ok(c.clone())
    } else {
        Err(Error::IncompatibleFields(from.to_string(), to.to_string()))
    }
}

impl fmt::Display for Polynomial {
    /// Canonical text form: terms in decreasing ring order, `+`/`-`
    /// separators, coefficient 1 suppressed, `^` powers and `*` products.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let field = self.ring.field();
        for (i, (m, c)) in self.terms.iter().enumerate() {
            let neg = field.is_negative(c);
            if i == 0 {
                if neg {
                    write!(f, "-")?;
                }
            } else if neg {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            let a = field.abs(c);
            let coeff_is_one = field.eq_i64(&a, 1);
            if m.is_one() {
                write!(f, "{}", field.format(&a))?;
            } else if coeff_is_one {
                write!(f, "{}", self.ring.format_monomial(m))?;
            } else {
                write!(f, "{}*{}", field.format(&a), self.ring.format_monomial(m))?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}
