//! Dense exact linear algebra over the supported fields.
//!
//! The public [`Matrix`] type dispatches between two internal storage
//! layouts: machine-word rows with Barrett-reduced arithmetic for GF(p)
//! (the workhorse for large eliminations) and arbitrary-precision rational
//! rows for QQ.  The elimination kernels are written once, generically over
//! a small private field-context trait, and monomorphize to tight loops for
//! the prime-field case.
//!
//! Conventions used throughout the crate:
//!
//! - `rref` produces the reduced row echelon form and returns the pivot
//!   columns in increasing order; pivot choice is the first nonzero entry,
//!   so results are deterministic.
//! - `nullspace` returns a right-kernel basis in reduced column echelon
//!   form: basis vector `j` carries the value 1 at its signature coordinate
//!   (the `j`-th free column of the RREF) and 0 at every other signature
//!   coordinate.  A vector `w` in the span then has coordinate `j` equal to
//!   `w[signature[j]]`, which the resolution engine uses to re-express
//!   vectors in kernel coordinates without solving.

use super::{FieldDescriptor, FieldElement};
use crate::{Error, Result};
use num_rational::BigRational;
use num_traits::{One, Zero};

/// Private field context: the small amount of arithmetic the generic
/// elimination kernels need, chosen so the GF(p) instantiation works on
/// bare `u64` values.
trait LinearCtx: Clone {
    type Elem: Clone + PartialEq;
    fn zero(&self) -> Self::Elem;
    fn one(&self) -> Self::Elem;
    fn is_zero(&self, a: &Self::Elem) -> bool;
    fn neg(&self, a: &Self::Elem) -> Self::Elem;
    /// Multiplicative inverse of a nonzero element.
    fn inv(&self, a: &Self::Elem) -> Self::Elem;
    /// `dst[i] -= c * src[i]` for all i; the fusion point the prime-field
    /// path optimizes.
    fn row_sub_mul(&self, dst: &mut [Self::Elem], c: &Self::Elem, src: &[Self::Elem]);
    /// `dst[i] *= c` for all i.
    fn row_scale(&self, dst: &mut [Self::Elem], c: &Self::Elem);
    fn to_element(&self, a: &Self::Elem) -> FieldElement;
    fn from_element(&self, a: &FieldElement) -> Self::Elem;
}

/// GF(p) context with a precomputed Barrett constant.
#[derive(Clone)]
struct FpCtx {
    p: u64,
    /// floor(2^64 / p), used to reduce values below 2^62 with two
    /// multiplications instead of a hardware division.
    barrett: u64,
}

impl FpCtx {
    fn new(p: u64) -> Self {
        debug_assert!(p > 3 && p < (1 << 31));
        let barrett = ((1u128 << 64) / p as u128) as u64;
        FpCtx { p, barrett }
    }

    /// Reduces x < 2^62 modulo p.
    #[inline(always)]
    fn reduce(&self, x: u64) -> u64 {
        let q = ((x as u128 * self.barrett as u128) >> 64) as u64;
        let mut r = x.wrapping_sub(q.wrapping_mul(self.p));
        while r >= self.p {
            r -= self.p;
        }
        r
    }
}

impl LinearCtx for FpCtx {
    type Elem = u64;

    #[inline(always)]
    fn zero(&self) -> u64 {
        0
    }
    #[inline(always)]
    fn one(&self) -> u64 {
        1
    }
    #[inline(always)]
    fn is_zero(&self, a: &u64) -> bool {
        *a == 0
    }
    #[inline(always)]
    fn neg(&self, a: &u64) -> u64 {
        if *a == 0 {
            0
        } else {
            self.p - *a
        }
    }
    fn inv(&self, a: &u64) -> u64 {
        super::mod_inv_u64(*a, self.p)
    }

    fn row_sub_mul(&self, dst: &mut [u64], c: &u64, src: &[u64]) {
        let k = self.neg(c);
        if k == 0 {
            return;
        }
        // dst + k*src stays below p + p^2 < 2^62 for p < 2^31.
        for (d, s) in dst.iter_mut().zip(src.iter()) {
            *d = self.reduce(d.wrapping_add(k.wrapping_mul(*s)));
        }
    }

    fn row_scale(&self, dst: &mut [u64], c: &u64) {
        for d in dst.iter_mut() {
            *d = self.reduce(d.wrapping_mul(*c));
        }
    }

    fn to_element(&self, a: &u64) -> FieldElement {
        FieldElement::Prime(*a)
    }
    fn from_element(&self, a: &FieldElement) -> u64 {
        match a {
            FieldElement::Prime(v) => *v,
            _ => panic!("expected prime-field element"),
        }
    }
}

/// Rational context.
#[derive(Clone)]
struct QCtx;

impl LinearCtx for QCtx {
    type Elem = BigRational;

    fn zero(&self) -> BigRational {
        BigRational::zero()
    }
    fn one(&self) -> BigRational {
        BigRational::one()
    }
    fn is_zero(&self, a: &BigRational) -> bool {
        a.is_zero()
    }
    fn neg(&self, a: &BigRational) -> BigRational {
        -a
    }
    fn inv(&self, a: &BigRational) -> BigRational {
        a.recip()
    }

    fn row_sub_mul(&self, dst: &mut [BigRational], c: &BigRational, src: &[BigRational]) {
        if c.is_zero() {
            return;
        }
        for (d, s) in dst.iter_mut().zip(src.iter()) {
            if !s.is_zero() {
                *d -= c * s;
            }
        }
    }

    fn row_scale(&self, dst: &mut [BigRational], c: &BigRational) {
        for d in dst.iter_mut() {
            if !d.is_zero() {
                *d *= c;
            }
        }
    }

    fn to_element(&self, a: &BigRational) -> FieldElement {
        FieldElement::Rational(a.clone())
    }
    fn from_element(&self, a: &FieldElement) -> BigRational {
        match a {
            FieldElement::Rational(r) => r.clone(),
            _ => panic!("expected rational element"),
        }
    }
}

/// Generic dense row-major matrix.
#[derive(Clone)]
struct GenMat<C: LinearCtx> {
    ctx: C,
    rows: usize,
    cols: usize,
    data: Vec<C::Elem>,
}

impl<C: LinearCtx> GenMat<C> {
    fn zeros(ctx: C, rows: usize, cols: usize) -> Self {
        let data = vec![ctx.zero(); rows * cols];
        GenMat { ctx, rows, cols, data }
    }

    #[inline]
    fn at(&self, r: usize, c: usize) -> &C::Elem {
        &self.data[r * self.cols + c]
    }

    #[inline]
    fn set(&mut self, r: usize, c: usize, v: C::Elem) {
        self.data[r * self.cols + c] = v;
    }

    /// In-place reduced row echelon form; returns pivot columns.
    fn rref(&mut self) -> Vec<usize> {
        let mut pivots = Vec::new();
        let mut pr = 0usize; // next pivot row
        for pc in 0..self.cols {
            // Find a row at or below pr with a nonzero entry in column pc.
            let mut sel = None;
            for r in pr..self.rows {
                if !self.ctx.is_zero(self.at(r, pc)) {
                    sel = Some(r);
                    break;
                }
            }
            let Some(sel) = sel else { continue };
            if sel != pr {
                for c in 0..self.cols {
                    self.data.swap(sel * self.cols + c, pr * self.cols + c);
                }
            }
            // Normalize the pivot row.
            let inv = self.ctx.inv(self.at(pr, pc));
            let ctx = self.ctx.clone();
            ctx.row_scale(&mut self.data[pr * self.cols + pc..(pr + 1) * self.cols], &inv);
            // Eliminate the column everywhere else.  Only the suffix from pc
            // onward can be nonzero in the pivot row.
            let (before, rest) = self.data.split_at_mut(pr * self.cols);
            let (prow, after) = rest.split_at_mut(self.cols);
            let psuf = &prow[pc..];
            for (r, chunk) in before.chunks_exact_mut(self.cols).enumerate() {
                let _ = r;
                let c = chunk[pc].clone();
                if !ctx.is_zero(&c) {
                    ctx.row_sub_mul(&mut chunk[pc..], &c, psuf);
                }
            }
            for chunk in after.chunks_exact_mut(self.cols) {
                let c = chunk[pc].clone();
                if !ctx.is_zero(&c) {
                    ctx.row_sub_mul(&mut chunk[pc..], &c, psuf);
                }
            }
            pivots.push(pc);
            pr += 1;
            if pr == self.rows {
                break;
            }
        }
        pivots
    }

    /// Row echelon rank without back-substitution (cheaper than rref).
    fn rank(mut self) -> usize {
        let mut rank = 0usize;
        for pc in 0..self.cols {
            let mut sel = None;
            for r in rank..self.rows {
                if !self.ctx.is_zero(self.at(r, pc)) {
                    sel = Some(r);
                    break;
                }
            }
            let Some(sel) = sel else { continue };
            if sel != rank {
                for c in pc..self.cols {
                    self.data.swap(sel * self.cols + c, rank * self.cols + c);
                }
            }
            let inv = self.ctx.inv(self.at(rank, pc));
            let ctx = self.ctx.clone();
            ctx.row_scale(&mut self.data[rank * self.cols + pc..(rank + 1) * self.cols], &inv);
            let (top, bottom) = self.data.split_at_mut((rank + 1) * self.cols);
            let psuf = &top[rank * self.cols + pc..];
            for chunk in bottom.chunks_exact_mut(self.cols) {
                let c = chunk[pc].clone();
                if !ctx.is_zero(&c) {
                    ctx.row_sub_mul(&mut chunk[pc..], &c, psuf);
                }
            }
            rank += 1;
            if rank == self.rows {
                break;
            }
        }
        rank
    }

    /// Right kernel basis in reduced column echelon form, together with the
    /// signature coordinates (free columns of the RREF).
    fn nullspace(mut self) -> (GenMat<C>, Vec<usize>) {
        let pivots = self.rref();
        let is_pivot = {
            let mut v = vec![false; self.cols];
            for &p in &pivots {
                v[p] = true;
            }
            v
        };
        let free: Vec<usize> = (0..self.cols).filter(|c| !is_pivot[*c]).collect();
        let mut basis = GenMat::zeros(self.ctx.clone(), self.cols, free.len());
        for (j, &fc) in free.iter().enumerate() {
            basis.set(fc, j, self.ctx.one());
            for (i, &pc) in pivots.iter().enumerate() {
                let v = self.at(i, fc).clone();
                if !self.ctx.is_zero(&v) {
                    basis.set(pc, j, self.ctx.neg(&v));
                }
            }
        }
        (basis, free)
    }

    fn matmul(&self, other: &GenMat<C>) -> GenMat<C> {
        debug_assert_eq!(self.cols, other.rows);
        let mut out = GenMat::zeros(self.ctx.clone(), self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.at(i, k).clone();
                if self.ctx.is_zero(&a) {
                    continue;
                }
                let na = self.ctx.neg(&a);
                let src = &other.data[k * other.cols..(k + 1) * other.cols];
                let dst = &mut out.data[i * other.cols..(i + 1) * other.cols];
                // dst += a*src, phrased through the fused primitive.
                self.ctx.row_sub_mul(dst, &na, src);
            }
        }
        out
    }

    fn transpose(&self) -> GenMat<C> {
        let mut out = GenMat::zeros(self.ctx.clone(), self.cols, self.rows);
        for r in 0..self.rows {
            for c in 0..self.cols {
                out.set(c, r, self.at(r, c).clone());
            }
        }
        out
    }
}

enum Inner {
    Fp(GenMat<FpCtx>),
    Q(GenMat<QCtx>),
}

impl Clone for Inner {
    fn clone(&self) -> Self {
        match self {
            Inner::Fp(m) => Inner::Fp(m.clone()),
            Inner::Q(m) => Inner::Q(m.clone()),
        }
    }
}

/// Dense matrix over a runtime-selected field.
#[derive(Clone)]
pub struct Matrix {
    field: FieldDescriptor,
    inner: Inner,
}

/// Right-kernel basis in reduced column echelon form.
///
/// `signature[j]` is the coordinate at which basis column `j` carries 1 and
/// every other basis column carries 0; coordinates of a vector in the span
/// can therefore be read off at the signature positions.
pub struct NullspaceBasis {
    pub basis: Matrix,
    pub signature: Vec<usize>,
}

impl Matrix {
    pub fn zeros(field: &FieldDescriptor, rows: usize, cols: usize) -> Matrix {
        let inner = match field {
            FieldDescriptor::Prime(p) => Inner::Fp(GenMat::zeros(FpCtx::new(*p), rows, cols)),
            FieldDescriptor::Rationals => Inner::Q(GenMat::zeros(QCtx, rows, cols)),
        };
        Matrix { field: field.clone(), inner }
    }

    pub fn identity(field: &FieldDescriptor, n: usize) -> Matrix {
        let mut m = Matrix::zeros(field, n, n);
        let one = field.one();
        for i in 0..n {
            m.set(i, i, &one);
        }
        m
    }

    pub fn from_rows(field: &FieldDescriptor, rows: Vec<Vec<FieldElement>>) -> Result<Matrix> {
        let r = rows.len();
        let c = rows.first().map_or(0, |row| row.len());
        if rows.iter().any(|row| row.len() != c) {
            return Err(Error::DimensionMismatch("ragged rows".to_string()));
        }
        let mut m = Matrix::zeros(field, r, c);
        for (i, row) in rows.iter().enumerate() {
            for (j, v) in row.iter().enumerate() {
                m.set(i, j, v);
            }
        }
        Ok(m)
    }

    pub fn field(&self) -> &FieldDescriptor {
        &self.field
    }

    pub fn rows(&self) -> usize {
        match &self.inner {
            Inner::Fp(m) => m.rows,
            Inner::Q(m) => m.rows,
        }
    }

    pub fn cols(&self) -> usize {
        match &self.inner {
            Inner::Fp(m) => m.cols,
            Inner::Q(m) => m.cols,
        }
    }

    pub fn get(&self, r: usize, c: usize) -> FieldElement {
        match &self.inner {
            Inner::Fp(m) => m.ctx.to_element(m.at(r, c)),
            Inner::Q(m) => m.ctx.to_element(m.at(r, c)),
        }
    }

    pub fn set(&mut self, r: usize, c: usize, v: &FieldElement) {
        match &mut self.inner {
            Inner::Fp(m) => {
                let e = m.ctx.from_element(v);
                m.set(r, c, e)
            }
            Inner::Q(m) => {
                let e = m.ctx.from_element(v);
                m.set(r, c, e)
            }
        }
    }

    /// Adds `v` to the entry at (r, c).
    pub fn add_assign(&mut self, r: usize, c: usize, v: &FieldElement) {
        let cur = self.get(r, c);
        let s = self.field.add(&cur, v);
        self.set(r, c, &s);
    }

    pub fn column(&self, c: usize) -> Vec<FieldElement> {
        (0..self.rows()).map(|r| self.get(r, c)).collect()
    }

    /// Rank by forward elimination (consumes a clone of the data).
    pub fn rank(&self) -> usize {
        match self.inner.clone() {
            Inner::Fp(m) => m.rank(),
            Inner::Q(m) => m.rank(),
        }
    }

    /// Like [`Matrix::rank`], but destroys the matrix, avoiding the clone.
    pub fn rank_into(self) -> usize {
        match self.inner {
            Inner::Fp(m) => m.rank(),
            Inner::Q(m) => m.rank(),
        }
    }

    /// In-place reduced row echelon form; returns the pivot columns.
    pub fn rref(&mut self) -> Vec<usize> {
        match &mut self.inner {
            Inner::Fp(m) => m.rref(),
            Inner::Q(m) => m.rref(),
        }
    }

    /// Right-kernel basis in reduced column echelon form.
    pub fn nullspace(self) -> NullspaceBasis {
        let field = self.field.clone();
        match self.inner {
            Inner::Fp(m) => {
                let (b, sig) = m.nullspace();
                NullspaceBasis { basis: Matrix { field, inner: Inner::Fp(b) }, signature: sig }
            }
            Inner::Q(m) => {
                let (b, sig) = m.nullspace();
                NullspaceBasis { basis: Matrix { field, inner: Inner::Q(b) }, signature: sig }
            }
        }
    }

    pub fn matmul(&self, other: &Matrix) -> Result<Matrix> {
        if self.field != other.field {
            return Err(Error::IncompatibleFields(
                self.field.to_string(),
                other.field.to_string(),
            ));
        }
        if self.cols() != other.rows() {
            return Err(Error::DimensionMismatch(format!(
                "{}x{} * {}x{}",
                self.rows(),
                self.cols(),
                other.rows(),
                other.cols()
            )));
        }
        let inner = match (&self.inner, &other.inner) {
            (Inner::Fp(a), Inner::Fp(b)) => Inner::Fp(a.matmul(b)),
            (Inner::Q(a), Inner::Q(b)) => Inner::Q(a.matmul(b)),
            _ => unreachable!("field checked above"),
        };
        Ok(Matrix { field: self.field.clone(), inner })
    }

    pub fn transpose(&self) -> Matrix {
        let inner = match &self.inner {
            Inner::Fp(m) => Inner::Fp(m.transpose()),
            Inner::Q(m) => Inner::Q(m.transpose()),
        };
        Matrix { field: self.field.clone(), inner }
    }

    /// Applies the matrix to a vector.
    pub fn apply(&self, v: &[FieldElement]) -> Result<Vec<FieldElement>> {
        if v.len() != self.cols() {
            return Err(Error::DimensionMismatch(format!(
                "matrix has {} cols, vector has {}",
                self.cols(),
                v.len()
            )));
        }
        let mut out = vec![self.field.zero(); self.rows()];
        for r in 0..self.rows() {
            let mut acc = self.field.zero();
            for c in 0..self.cols() {
                let e = self.get(r, c);
                if !e.is_zero() && !v[c].is_zero() {
                    acc = self.field.add(&acc, &self.field.mul(&e, &v[c]));
                }
            }
            out[r] = acc;
        }
        Ok(out)
    }

    pub fn is_zero(&self) -> bool {
        (0..self.rows()).all(|r| (0..self.cols()).all(|c| self.get(r, c).is_zero()))
    }
}

enum EchInner {
    Fp { ctx: FpCtx, rows: Vec<Vec<u64>>, pivots: Vec<usize> },
    Q { rows: Vec<Vec<BigRational>>, pivots: Vec<usize> },
}

/// Incremental row-space accumulator.
///
/// Rows are inserted one at a time; each insertion reports whether the rank
/// grew.  Rows are kept normalized with leading coefficient 1 and sorted by
/// pivot position, which makes insertion order irrelevant to the final rank
/// and keeps the behavior deterministic.  Used for minimal-generator
/// selection (insert a spanning set, then complete with unit vectors) and
/// for early-exit surjectivity checks.
pub struct Echelon {
    dim: usize,
    inner: EchInner,
}

impl Echelon {
    pub fn new(field: &FieldDescriptor, dim: usize) -> Echelon {
        let inner = match field {
            FieldDescriptor::Prime(p) => {
                EchInner::Fp { ctx: FpCtx::new(*p), rows: Vec::new(), pivots: Vec::new() }
            }
            FieldDescriptor::Rationals => EchInner::Q { rows: Vec::new(), pivots: Vec::new() },
        };
        Echelon { dim, inner }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn rank(&self) -> usize {
        match &self.inner {
            EchInner::Fp { rows, .. } => rows.len(),
            EchInner::Q { rows, .. } => rows.len(),
        }
    }

    pub fn is_full(&self) -> bool {
        self.rank() == self.dim
    }

    /// Inserts a vector; returns true when it enlarged the row space.
    pub fn insert(&mut self, v: &[FieldElement]) -> bool {
        assert_eq!(v.len(), self.dim, "echelon dimension mismatch");
        match &mut self.inner {
            EchInner::Fp { ctx, rows, pivots } => {
                let mut w: Vec<u64> = v.iter().map(|e| ctx.from_element(e)).collect();
                Self::insert_fp(ctx, rows, pivots, &mut w)
            }
            EchInner::Q { rows, pivots } => {
                let ctx = QCtx;
                let mut w: Vec<BigRational> = v.iter().map(|e| ctx.from_element(e)).collect();
                Self::insert_gen(&ctx, rows, pivots, &mut w)
            }
        }
    }

    /// The accumulated echelon rows, in pivot order, as field elements.
    pub fn basis_rows(&self) -> Vec<Vec<FieldElement>> {
        match &self.inner {
            EchInner::Fp { ctx, rows, .. } => rows
                .iter()
                .map(|r| r.iter().map(|v| ctx.to_element(v)).collect())
                .collect(),
            EchInner::Q { rows, .. } => rows
                .iter()
                .map(|r| r.iter().map(|v| QCtx.to_element(v)).collect())
                .collect(),
        }
    }

    fn insert_fp(ctx: &FpCtx, rows: &mut Vec<Vec<u64>>, pivots: &mut Vec<usize>, w: &mut Vec<u64>) -> bool {
        for (row, &p) in rows.iter().zip(pivots.iter()) {
            let c = w[p];
            if c != 0 {
                ctx.row_sub_mul(&mut w[p..], &c, &row[p..]);
            }
        }
        match w.iter().position(|x| *x != 0) {
            None => false,
            Some(p) => {
                let inv = ctx.inv(&w[p]);
                ctx.row_scale(&mut w[p..], &inv);
                let at = pivots.partition_point(|&q| q < p);
                pivots.insert(at, p);
                rows.insert(at, std::mem::take(w));
                true
            }
        }
    }

    fn insert_gen(
        ctx: &QCtx,
        rows: &mut Vec<Vec<BigRational>>,
        pivots: &mut Vec<usize>,
        w: &mut Vec<BigRational>,
    ) -> bool {
        for (row, &p) in rows.iter().zip(pivots.iter()) {
            let c = w[p].clone();
            if !ctx.is_zero(&c) {
                ctx.row_sub_mul(&mut w[p..], &c, &row[p..]);
            }
        }
        match w.iter().position(|x| !ctx.is_zero(x)) {
            None => false,
            Some(p) => {
                let inv = ctx.inv(&w[p]);
                ctx.row_scale(&mut w[p..], &inv);
                let at = pivots.partition_point(|&q| q < p);
                pivots.insert(at, p);
                rows.insert(at, std::mem::take(w));
                true
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn gf(p: u64) -> FieldDescriptor {
        FieldDescriptor::prime(p).unwrap()
    }

    fn mat(field: &FieldDescriptor, rows: &[&[i64]]) -> Matrix {
        let rows: Vec<Vec<FieldElement>> = rows
            .iter()
            .map(|r| r.iter().map(|&v| field.from_i64(v)).collect())
            .collect();
        Matrix::from_rows(field, rows).unwrap()
    }

    #[test]
    fn rank_and_rref_prime_field() {
        let f = gf(32003);
        let m = mat(&f, &[&[1, 2, 3], &[2, 4, 6], &[1, 0, 1]]);
        assert_eq!(m.rank(), 2);
        let mut r = m.clone();
        let pivots = r.rref();
        assert_eq!(pivots, vec![0, 1]);
        // Row 0 must be reduced against the second pivot.
        assert!(r.get(0, 1).is_zero());
    }

    #[test]
    fn rank_matches_over_q_and_gf() {
        let data: &[&[i64]] = &[&[2, -1, 0, 3], &[4, -2, 0, 6], &[0, 5, 1, -1], &[2, 4, 1, 7]];
        let mq = mat(&FieldDescriptor::Rationals, data);
        let mp = mat(&gf(31991), data);
        assert_eq!(mq.rank(), mp.rank());
        assert_eq!(mq.rank(), 3);
    }

    #[test]
    fn nullspace_reduced_column_echelon() {
        let f = gf(32003);
        // x + y + z = 0 has a 2-dimensional kernel.
        let m = mat(&f, &[&[1, 1, 1]]);
        let ns = m.nullspace();
        assert_eq!(ns.basis.cols(), 2);
        assert_eq!(ns.signature, vec![1, 2]);
        for (j, &s) in ns.signature.iter().enumerate() {
            assert_eq!(ns.basis.get(s, j), f.one());
            for (k, _) in ns.signature.iter().enumerate() {
                if k != j {
                    assert!(ns.basis.get(ns.signature[k], j).is_zero());
                }
            }
        }
        // Every basis column is killed by the matrix.
        let prod = mat(&f, &[&[1, 1, 1]]).matmul(&ns.basis).unwrap();
        assert!(prod.is_zero());
    }

    #[test]
    fn nullspace_dimension_theorem() {
        let f = gf(31991);
        let m = mat(&f, &[&[1, 2, 3, 4], &[0, 1, 1, 1], &[1, 3, 4, 5]]);
        let rank = m.rank();
        let ns = m.nullspace();
        assert_eq!(rank + ns.basis.cols(), 4);
    }

    #[test]
    fn echelon_accumulator_rank_and_completion() {
        let f = gf(32003);
        let mut ech = Echelon::new(&f, 3);
        let v1: Vec<_> = [1, 2, 3].iter().map(|&v| f.from_i64(v)).collect();
        let v2: Vec<_> = [2, 4, 6].iter().map(|&v| f.from_i64(v)).collect();
        let v3: Vec<_> = [0, 1, 0].iter().map(|&v| f.from_i64(v)).collect();
        assert!(ech.insert(&v1));
        assert!(!ech.insert(&v2));
        assert!(ech.insert(&v3));
        assert_eq!(ech.rank(), 2);
        // Completion with unit vectors finds exactly one missing direction.
        let mut added = 0;
        for j in 0..3 {
            let mut e = vec![f.zero(); 3];
            e[j] = f.one();
            if ech.insert(&e) {
                added += 1;
            }
        }
        assert_eq!(added, 1);
        assert!(ech.is_full());
    }

    #[test]
    fn rational_elimination_is_exact() {
        let q = FieldDescriptor::Rationals;
        let mut m = Matrix::zeros(&q, 2, 2);
        m.set(0, 0, &q.from_fraction(1, 3).unwrap());
        m.set(0, 1, &q.from_fraction(1, 7).unwrap());
        m.set(1, 0, &q.from_fraction(2, 3).unwrap());
        m.set(1, 1, &q.from_fraction(2, 7).unwrap());
        assert_eq!(m.rank(), 1);
    }

    #[test]
    fn barrett_reduction_agrees_with_division() {
        let ctx = FpCtx::new(2147483647); // largest allowed prime
        for x in [0u64, 1, 2147483646, 1 << 40, (1 << 62) - 1, 123456789012345] {
            assert_eq!(ctx.reduce(x), x % 2147483647);
        }
    }

    #[test]
    fn matmul_identity() {
        let f = gf(32003);
        let m = mat(&f, &[&[1, 2], &[3, 4], &[5, 6]]);
        let id = Matrix::identity(&f, 2);
        let p = m.matmul(&id).unwrap();
        for r in 0..3 {
            for c in 0..2 {
                assert_eq!(p.get(r, c), m.get(r, c));
            }
        }
    }
}
