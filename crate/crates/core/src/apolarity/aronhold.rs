//! The degree-four invariant of ternary cubics, recovered by exact
//! interpolation.
//!
//! The locus of cubics expressible as a sum of three cubes is a quartic
//! hypersurface in the nine-dimensional projective space of cubics.  Its
//! defining equation — a quartic in the ten cubic coefficients — is
//! recovered here numerically-but-exactly: evaluate all 715 degree-four
//! monomials in the coefficients on enough random sums of three cubes and
//! take the (one-dimensional) nullspace.  The result is normalized so its
//! first nonzero coefficient, in decreasing monomial order on the
//! coefficient slots, equals one, which makes the output independent of
//! the sampling seed.

use crate::apolarity::{random_invertible_matrix, DualPair};
use crate::arith::matrix::Matrix;
use crate::arith::{FieldDescriptor, FieldElement};
use crate::poly::{MonomialOrder, Polynomial, Ring};
use crate::{Error, Result};
use rand::SeedableRng;
use std::collections::HashMap;
use std::path::Path;

/// A quartic form in the ten coefficients of a ternary cubic.
///
/// Coefficient slots are indexed by the decreasing degrevlex order on the
/// degree-three monomials of the primal ring, so slot 0 holds the
/// coefficient of the largest cubic monomial.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AronholdQuartic {
    field: FieldDescriptor,
    /// Nonzero terms: exponent vector over the ten slots, coefficient.
    /// Stored in decreasing monomial order on the slots.
    terms: Vec<(Vec<u16>, FieldElement)>,
}

/// Number of coefficient slots of a ternary cubic.
const SLOTS: usize = 10;
/// Number of degree-four monomials in ten slots.
const QUARTIC_MONOMIALS: usize = 715;

/// Helper ring whose monomials index the quartic terms.
fn slot_ring(field: &FieldDescriptor) -> Ring {
    let names: Vec<String> = (0..SLOTS).map(|i| format!("c{i}")).collect();
    Ring::new(names, vec![vec![1]; SLOTS], field.clone(), MonomialOrder::DegRevLex)
        .expect("valid slot ring")
}

/// Coefficient vector of a cubic against the decreasing degree-three
/// monomial basis of the primal ring.
fn coefficient_vector(pair: &DualPair, f: &Polynomial) -> Result<Vec<FieldElement>> {
    pair.primal().check_compatible(f.ring())?;
    let basis = pair.primal().monomials_of_degree(&[3]);
    let index: HashMap<_, _> = basis.iter().enumerate().map(|(i, m)| (m.clone(), i)).collect();
    let field = pair.field();
    let mut out = vec![field.zero(); basis.len()];
    for (m, c) in f.terms() {
        match index.get(m) {
            Some(&i) => out[i] = c.clone(),
            None => {
                return Err(Error::Invalid(format!(
                    "not a cubic form: stray monomial of degree {}",
                    m.total_degree()
                )))
            }
        }
    }
    Ok(out)
}

/// Interpolates the quartic invariant from `samples` random sums of three
/// cubes, drawn deterministically from `seed`.
///
/// At least 716 samples are needed for the evaluation matrix to have a
/// one-dimensional nullspace; anything smaller, or a degenerate draw,
/// produces [`Error::DegenerateSampling`].
pub fn build_invariant(pair: &DualPair, samples: usize, seed: u64) -> Result<AronholdQuartic> {
    if pair.primal().num_vars() != 3 {
        return Err(Error::Invalid("the invariant needs three variables".to_string()));
    }
    let field = pair.field().clone();
    let slots = slot_ring(&field);
    let quartics = slots.monomials_of_degree(&[4]);
    debug_assert_eq!(quartics.len(), QUARTIC_MONOMIALS);

    // Fermat cubic y0^3 + y1^3 + y2^3; its orbit closure is the whole
    // sum-of-three-cubes hypersurface.
    let r = pair.primal();
    let one = field.one();
    let fermat = r.polynomial(
        (0..3).map(|i| (r.monomial(&[(i, 3)]), one.clone())).collect(),
    );

    let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(seed);
    let mut rows = Vec::with_capacity(samples);
    for _ in 0..samples {
        let g = random_invertible_matrix(&field, 3, &mut rng);
        let sample = fermat.linear_substitute(&g)?;
        let coeffs = coefficient_vector(pair, &sample)?;
        // Power table coeffs[i]^e for e <= 4.
        let mut powers = Vec::with_capacity(SLOTS);
        for c in &coeffs {
            let mut row = vec![field.one()];
            for e in 1..=4usize {
                let prev = row[e - 1].clone();
                row.push(field.mul(&prev, c));
            }
            powers.push(row);
        }
        let mut row = Vec::with_capacity(QUARTIC_MONOMIALS);
        for q in &quartics {
            let mut v = field.one();
            for (i, &e) in q.0.iter().enumerate() {
                if e > 0 {
                    v = field.mul(&v, &powers[i][e as usize]);
                }
            }
            row.push(v);
        }
        rows.push(row);
    }
    let matrix = Matrix::from_rows(&field, rows)?;
    let ns = matrix.nullspace();
    if ns.basis.cols() != 1 {
        return Err(Error::DegenerateSampling(format!(
            "expected a one-dimensional space of quartic relations, found dimension {} \
             from {} samples",
            ns.basis.cols(),
            samples
        )));
    }
    // Normalize: first nonzero coefficient in slot-monomial order is 1.
    let mut column: Vec<FieldElement> =
        (0..QUARTIC_MONOMIALS).map(|i| ns.basis.get(i, 0)).collect();
    let lead = column
        .iter()
        .find(|c| !c.is_zero())
        .expect("nullspace basis vector is nonzero")
        .clone();
    let inv = field.inv(&lead)?;
    for c in column.iter_mut() {
        *c = field.mul(c, &inv);
    }
    let terms = quartics
        .iter()
        .zip(column)
        .filter(|(_, c)| !c.is_zero())
        .map(|(m, c)| (m.0.to_vec(), c))
        .collect();
    Ok(AronholdQuartic { field, terms })
}

impl AronholdQuartic {
    pub fn field(&self) -> &FieldDescriptor {
        &self.field
    }

    /// Number of nonzero terms.
    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    /// Evaluates the invariant on a ternary cubic.
    pub fn evaluate(&self, pair: &DualPair, f: &Polynomial) -> Result<FieldElement> {
        if pair.field() != &self.field {
            return Err(Error::IncompatibleFields(
                format!("{:?}", pair.field()),
                format!("{:?}", self.field),
            ));
        }
        if f.is_zero() {
            return Err(Error::ZeroForm);
        }
        let coeffs = coefficient_vector(pair, f)?;
        let field = &self.field;
        let mut powers = Vec::with_capacity(SLOTS);
        for c in &coeffs {
            let mut row = vec![field.one()];
            for e in 1..=4usize {
                let prev = row[e - 1].clone();
                row.push(field.mul(&prev, c));
            }
            powers.push(row);
        }
        let mut acc = field.zero();
        for (exps, coeff) in &self.terms {
            let mut v = coeff.clone();
            for (i, &e) in exps.iter().enumerate() {
                if e > 0 {
                    v = field.mul(&v, &powers[i][e as usize]);
                }
            }
            acc = field.add(&acc, &v);
        }
        Ok(acc)
    }

    /// True when the invariant vanishes on the cubic.
    pub fn vanishes(&self, pair: &DualPair, f: &Polynomial) -> Result<bool> {
        Ok(self.evaluate(pair, f)?.is_zero())
    }

    /// Writes the invariant to a JSON file.
    pub fn save(&self, path: &Path) -> Result<()> {
        let slots = slot_ring(&self.field);
        let file = FileFormat {
            schema: 1,
            field: self.field.clone(),
            slots: (0..SLOTS).map(|i| slots.var_name(i).to_string()).collect(),
            terms: self
                .terms
                .iter()
                .map(|(e, c)| FileTerm { exps: e.clone(), coeff: c.to_string() })
                .collect(),
        };
        let text = serde_json::to_string_pretty(&file)
            .map_err(|e| Error::Io(format!("serialize invariant: {e}")))?;
        std::fs::write(path, text)?;
        Ok(())
    }

    /// Reads an invariant back from a JSON file written by [`save`].
    ///
    /// [`save`]: AronholdQuartic::save
    pub fn load(path: &Path) -> Result<AronholdQuartic> {
        let text = std::fs::read_to_string(path)?;
        let file: FileFormat = serde_json::from_str(&text)
            .map_err(|e| Error::Io(format!("parse invariant file: {e}")))?;
        if file.schema != 1 {
            return Err(Error::Invalid(format!("unsupported schema {}", file.schema)));
        }
        let mut terms = Vec::with_capacity(file.terms.len());
        for t in &file.terms {
            if t.exps.len() != SLOTS {
                return Err(Error::Invalid("term with wrong slot count".to_string()));
            }
            if t.exps.iter().map(|&e| e as u32).sum::<u32>() != 4 {
                return Err(Error::Invalid("term of wrong degree".to_string()));
            }
            terms.push((t.exps.clone(), file.field.parse_element(&t.coeff)?));
        }
        Ok(AronholdQuartic { field: file.field, terms })
    }
}

#[derive(serde::Serialize, serde::Deserialize)]
struct FileFormat {
    schema: u32,
    field: FieldDescriptor,
    /// Names of the coefficient slots, for readers of the file.
    slots: Vec<String>,
    terms: Vec<FileTerm>,
}

#[derive(serde::Serialize, serde::Deserialize)]
struct FileTerm {
    exps: Vec<u16>,
    coeff: String,
}
