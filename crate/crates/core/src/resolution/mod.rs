//! Minimal graded free resolutions over standard graded algebras, by
//! exact linear algebra on degree slices.
//!
//! The coefficient algebra is given by its graded slices: either the
//! quotient of a standard graded polynomial ring by a Groebner basis, or
//! the (c,e)-diagonal of a bigraded quotient.  Modules are residue fields
//! or (shifted diagonals of) quotients by larger ideals of the same
//! ambient ring.  The resolver builds the minimal resolution level by
//! level inside a degree window: syzygies of a level are the nullspaces of
//! its slice matrices, and the next level's generators are an echelon
//! complement of the span of degree-one multiples of the previous
//! syzygies — so Betti numbers are read off as generator counts, exactly.
//!
//! Degrees are capped at `degree_cap`; everything the window shows is
//! exact, and the [`BettiTable`] records whether the resolution already
//! terminated inside the window.

use crate::arith::matrix::{Echelon, Matrix};
use crate::arith::{FieldDescriptor, FieldElement};
use crate::groebner::GroebnerBasis;
use crate::poly::Monomial;
use crate::{Error, Result};
use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::rc::Rc;

/// Sparse product table: entry `[i][j]` holds the coordinates of
/// (left basis i) * (right basis j) in the target slice basis.
type ProductTable = Vec<Vec<Vec<(usize, FieldElement)>>>;

/// Graded slice data for an algebra or module.
#[derive(Debug, Clone)]
enum SliceData {
    /// Quotient of a rank-1 standard graded ring: slice d is the standard
    /// monomials of degree d.
    Quotient { gb: GroebnerBasis },
    /// Diagonal of a bigraded quotient: slice s is the standard monomials
    /// in bidegree (c*s - a, e*s - b).
    Diagonal { gb: GroebnerBasis, c: i64, e: i64, a: i64, b: i64 },
    /// The residue field: one-dimensional in degree zero.
    Point { field: FieldDescriptor },
}

impl SliceData {
    fn field(&self) -> &FieldDescriptor {
        match self {
            SliceData::Quotient { gb } | SliceData::Diagonal { gb, .. } => gb.ring().field(),
            SliceData::Point { field } => field,
        }
    }

    fn bidegree(&self, s: i64) -> Option<Vec<i64>> {
        match self {
            SliceData::Quotient { .. } => {
                if s < 0 {
                    None
                } else {
                    Some(vec![s])
                }
            }
            SliceData::Diagonal { c, e, a, b, .. } => {
                let p = c * s - a;
                let q = e * s - b;
                if p < 0 || q < 0 {
                    None
                } else {
                    Some(vec![p, q])
                }
            }
            SliceData::Point { .. } => {
                if s == 0 {
                    Some(Vec::new())
                } else {
                    None
                }
            }
        }
    }

    fn basis(&self, s: i64) -> Vec<Monomial> {
        match self {
            SliceData::Point { .. } => {
                if s == 0 {
                    vec![Monomial::one(0)]
                } else {
                    Vec::new()
                }
            }
            SliceData::Quotient { gb } | SliceData::Diagonal { gb, .. } => {
                match self.bidegree(s) {
                    Some(d) => gb.standard_monomials(&d),
                    None => Vec::new(),
                }
            }
        }
    }

    fn dim(&self, s: i64) -> usize {
        self.basis(s).len()
    }
}

/// A standard graded algebra presented by its slices.
#[derive(Debug, Clone)]
pub struct SliceAlgebra {
    data: SliceData,
}

impl SliceAlgebra {
    /// The quotient of a standard graded polynomial ring by the ideal of
    /// the given Groebner basis.
    pub fn graded_quotient(gb: GroebnerBasis) -> Result<SliceAlgebra> {
        let ring = gb.ring();
        if ring.grading_rank() != 1
            || (0..ring.num_vars()).any(|v| ring.var_degree(v) != [1])
        {
            return Err(Error::Invalid(
                "slice algebra needs a standard graded ring".to_string(),
            ));
        }
        if gb.is_unit_ideal() {
            return Err(Error::ZeroRing);
        }
        Ok(SliceAlgebra { data: SliceData::Quotient { gb } })
    }

    /// The (c,e)-diagonal of a bigraded quotient.
    pub fn diagonal(gb: GroebnerBasis, c: i64, e: i64) -> Result<SliceAlgebra> {
        check_bigraded(&gb, c, e)?;
        if gb.is_unit_ideal() {
            return Err(Error::ZeroRing);
        }
        Ok(SliceAlgebra { data: SliceData::Diagonal { gb, c, e, a: 0, b: 0 } })
    }

    pub fn field(&self) -> &FieldDescriptor {
        self.data.field()
    }

    /// Dimension of the degree-d slice.
    pub fn dim(&self, d: i64) -> usize {
        self.data.dim(d)
    }
}

fn check_bigraded(gb: &GroebnerBasis, c: i64, e: i64) -> Result<()> {
    let ring = gb.ring();
    if ring.grading_rank() != 2 {
        return Err(Error::Invalid("diagonal slices need a bigraded ring".to_string()));
    }
    if c < 0 || e < 0 || c + e == 0 {
        return Err(Error::Invalid("diagonal direction must be nonnegative and nonzero".to_string()));
    }
    for v in 0..ring.num_vars() {
        let d = ring.var_degree(v);
        let ok = (d == [1, 0]) || (d == [0, 1]);
        if !ok {
            return Err(Error::Invalid(
                "diagonal slices need variables of bidegree (1,0) or (0,1)".to_string(),
            ));
        }
    }
    Ok(())
}

/// A graded module presented by its slices, resolvable over a compatible
/// [`SliceAlgebra`].
#[derive(Debug, Clone)]
pub struct SliceModule {
    data: SliceData,
}

impl SliceModule {
    /// The residue field K.
    pub fn residue_field(field: &FieldDescriptor) -> SliceModule {
        SliceModule { data: SliceData::Point { field: field.clone() } }
    }

    /// The quotient by a (possibly larger) ideal of the same ambient ring
    /// as the algebra.
    pub fn graded_quotient(gb: GroebnerBasis) -> SliceModule {
        SliceModule { data: SliceData::Quotient { gb } }
    }

    /// Shifted diagonal of a bigraded quotient: slice s is the bidegree
    /// (c*s - a, e*s - b) slice.
    pub fn diagonal(gb: GroebnerBasis, c: i64, e: i64, shift: (i64, i64)) -> SliceModule {
        SliceModule {
            data: SliceData::Diagonal { gb, c, e, a: shift.0, b: shift.1 },
        }
    }

    pub fn dim(&self, d: i64) -> usize {
        self.data.dim(d)
    }
}

/// Graded Betti numbers computed inside a window.
#[derive(Debug, Clone, PartialEq, Eq, serde::Serialize)]
pub struct BettiTable {
    /// Nonzero entries beta_(i,j), keyed by (homological degree, internal
    /// degree).
    pub entries: BTreeMap<(usize, i64), usize>,
    /// Levels computed (entries exist for i <= levels).
    pub levels: usize,
    /// Internal degree cap of the window.
    pub degree_cap: i64,
    /// True when the resolution terminated inside the window, so the
    /// table is the complete Betti table in degrees <= degree_cap.
    pub complete: bool,
}

impl BettiTable {
    pub fn entry(&self, i: usize, j: i64) -> usize {
        self.entries.get(&(i, j)).copied().unwrap_or(0)
    }

    /// Largest j - i over nonzero entries, or None for the zero module.
    pub fn max_slope(&self) -> Option<i64> {
        self.entries.keys().map(|&(i, j)| j - i as i64).max()
    }
}

impl fmt::Display for BettiTable {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.entries.is_empty() {
            return writeln!(f, "(zero module in the window)");
        }
        let max_i = self.levels;
        let min_slope = self.entries.keys().map(|&(i, j)| j - i as i64).min().unwrap_or(0);
        let max_slope = self.max_slope().unwrap_or(0);
        write!(f, "{:>6}", "")?;
        for i in 0..=max_i {
            write!(f, "{:>8}", i)?;
        }
        writeln!(f)?;
        for slope in min_slope..=max_slope {
            write!(f, "{:>6}", slope)?;
            for i in 0..=max_i {
                let v = self.entry(i, slope + i as i64);
                if v == 0 {
                    write!(f, "{:>8}", ".")?;
                } else {
                    write!(f, "{:>8}", v)?;
                }
            }
            writeln!(f)?;
        }
        Ok(())
    }
}

/// Regularity read off a Betti window.
#[derive(Debug, Clone, PartialEq, Eq, serde::Serialize)]
pub struct RegularityReport {
    /// max(j - i) over the window; None for the zero module.
    pub value: Option<i64>,
    /// True when the maximum is only attained on the window boundary
    /// (last level or capped degree), so deeper windows could exceed it.
    pub boundary: bool,
}

/// Computes the window regularity of a Betti table.
pub fn regularity(table: &BettiTable) -> RegularityReport {
    let Some(max) = table.max_slope() else {
        return RegularityReport { value: None, boundary: false };
    };
    let boundary = !table.complete
        && table
            .entries
            .keys()
            .filter(|&&(i, j)| j - i as i64 == max)
            .all(|&(i, j)| i == table.levels || j == table.degree_cap);
    RegularityReport { value: Some(max), boundary }
}

/// Verdict of a Koszulness probe on the resolution of the residue field.
#[derive(Debug, Clone, Copy, PartialEq, Eq, serde::Serialize)]
pub enum KoszulVerdict {
    /// All computed syzygies through the given homological degree are
    /// linear (beta_(i,j) = 0 for j != i within the degree window).
    LinearUpTo(usize),
    /// First nonlinear entry found, as (homological degree, internal
    /// degree).
    NonlinearAt(usize, i64),
}

impl fmt::Display for KoszulVerdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            KoszulVerdict::LinearUpTo(s) => write!(f, "linear-up-to {s}"),
            KoszulVerdict::NonlinearAt(i, j) => write!(f, "nonlinear-at ({i}, {j})"),
        }
    }
}

/// One level of the partially built resolution.
struct Level {
    gen_degrees: Vec<i64>,
    /// Generator vectors in the coordinates of the previous level's slice
    /// of matching degree (level 0: module slice coordinates).
    gen_vectors: Vec<Vec<FieldElement>>,
    /// Kernel bases of this level's map, per degree, in this level's
    /// slice coordinates; filled in while the next level is built.
    kernels: HashMap<i64, Rc<Vec<Vec<FieldElement>>>>,
}

/// Level-by-level resolver.
pub struct Resolver<'a> {
    algebra: &'a SliceAlgebra,
    module: &'a SliceModule,
    degree_cap: i64,
    levels: Vec<Level>,
    finished: bool,
    alg_products: HashMap<(i64, i64), Rc<ProductTable>>,
    mod_products: HashMap<(i64, i64), Rc<ProductTable>>,
    alg_dims: HashMap<i64, usize>,
    mod_dims: HashMap<i64, usize>,
}

impl<'a> Resolver<'a> {
    pub fn new(
        algebra: &'a SliceAlgebra,
        module: &'a SliceModule,
        degree_cap: i64,
    ) -> Result<Resolver<'a>> {
        if degree_cap < 0 {
            return Err(Error::Invalid("degree cap must be nonnegative".to_string()));
        }
        check_compatible(algebra, module)?;
        if algebra.dim(0) != 1 {
            return Err(Error::Invalid(
                "slice algebra must be connected (one-dimensional in degree zero)".to_string(),
            ));
        }
        Ok(Resolver {
            algebra,
            module,
            degree_cap,
            levels: Vec::new(),
            finished: false,
            alg_products: HashMap::new(),
            mod_products: HashMap::new(),
            alg_dims: HashMap::new(),
            mod_dims: HashMap::new(),
        })
    }

    fn alg_dim(&mut self, d: i64) -> usize {
        let data = &self.algebra.data;
        *self.alg_dims.entry(d).or_insert_with(|| data.dim(d))
    }

    fn mod_dim(&mut self, d: i64) -> usize {
        let data = &self.module.data;
        *self.mod_dims.entry(d).or_insert_with(|| data.dim(d))
    }

    /// Product table (algebra slice e) x (algebra slice f) -> slice e+f.
    fn alg_product(&mut self, e: i64, f: i64) -> Result<Rc<ProductTable>> {
        if let Some(t) = self.alg_products.get(&(e, f)) {
            return Ok(Rc::clone(t));
        }
        let t = Rc::new(product_table(&self.algebra.data, &self.algebra.data, e, f)?);
        self.alg_products.insert((e, f), Rc::clone(&t));
        Ok(t)
    }

    /// Product table (algebra slice e) x (module slice f) -> module slice
    /// e+f.
    fn mod_product(&mut self, e: i64, f: i64) -> Result<Rc<ProductTable>> {
        if let Some(t) = self.mod_products.get(&(e, f)) {
            return Ok(Rc::clone(t));
        }
        let t = Rc::new(product_table(&self.algebra.data, &self.module.data, e, f)?);
        self.mod_products.insert((e, f), Rc::clone(&t));
        Ok(t)
    }

    /// Coordinate layout of (F_level)_d: one block per generator, of size
    /// dim A_(d - gen degree).  Returns block offsets plus total size.
    fn layout(&mut self, level: usize, d: i64) -> (Vec<usize>, usize) {
        let degrees = self.levels[level].gen_degrees.clone();
        let mut offsets = Vec::with_capacity(degrees.len());
        let mut total = 0usize;
        for dj in degrees {
            offsets.push(total);
            total += self.alg_dim(d - dj);
        }
        (offsets, total)
    }

    /// Target slice dimension of the map out of `level` in degree d: the
    /// module slice for level 0, the previous free module's slice
    /// otherwise.
    fn target_dim(&mut self, level: usize, d: i64) -> usize {
        if level == 0 {
            self.mod_dim(d)
        } else {
            self.layout(level - 1, d).1
        }
    }

    /// Multiplies a generator vector (living in the target coordinates of
    /// `level`, i.e. the degree-(gen degree) slice) by the algebra basis
    /// element `ai` of degree e; output in degree gen_degree + e
    /// coordinates of the same target.
    fn multiply_into_target(
        &mut self,
        level: usize,
        gen_degree: i64,
        vector: &[FieldElement],
        e: i64,
        ai: usize,
        out: &mut [FieldElement],
    ) -> Result<()> {
        let field = self.algebra.field().clone();
        if level == 0 {
            // Vector lives in module slice coordinates.
            let table = self.mod_product(e, gen_degree)?;
            for (m, c) in vector.iter().enumerate() {
                if c.is_zero() {
                    continue;
                }
                for (row, w) in &table[ai][m] {
                    out[*row] = field.add(&out[*row], &field.mul(c, w));
                }
            }
        } else {
            // Vector lives in (F_(level-1))_(gen_degree) coordinates.
            let (src_offsets, _) = self.layout(level - 1, gen_degree);
            let (dst_offsets, _) = self.layout(level - 1, gen_degree + e);
            let degrees = self.levels[level - 1].gen_degrees.clone();
            for (k, dk) in degrees.iter().enumerate() {
                let f = gen_degree - dk;
                let src_dim = self.alg_dim(f);
                if src_dim == 0 {
                    continue;
                }
                let table = self.alg_product(e, f)?;
                let src0 = src_offsets[k];
                let dst0 = dst_offsets[k];
                for m in 0..src_dim {
                    let c = &vector[src0 + m];
                    if c.is_zero() {
                        continue;
                    }
                    for (row, w) in &table[ai][m] {
                        out[dst0 + *row] = field.add(&out[dst0 + *row], &field.mul(c, w));
                    }
                }
            }
        }
        Ok(())
    }

    /// Slice matrix of the map out of `level` in degree d.
    fn slice_matrix(&mut self, level: usize, d: i64) -> Result<Matrix> {
        let field = self.algebra.field().clone();
        let rows = self.target_dim(level, d);
        let (_, cols_total) = self.layout(level, d);
        let mut columns: Vec<Vec<FieldElement>> = Vec::with_capacity(cols_total);
        let degrees = self.levels[level].gen_degrees.clone();
        for (j, dj) in degrees.iter().enumerate() {
            let e = d - dj;
            let adim = self.alg_dim(e);
            if adim == 0 {
                continue;
            }
            let vector = self.levels[level].gen_vectors[j].clone();
            for ai in 0..adim {
                let mut out = vec![field.zero(); rows];
                self.multiply_into_target(level, *dj, &vector, e, ai, &mut out)?;
                columns.push(out);
            }
        }
        debug_assert_eq!(columns.len(), cols_total);
        // Transpose into a rows x cols matrix.
        let mut mat = Matrix::zeros(&field, rows, cols_total);
        for (j, col) in columns.iter().enumerate() {
            for (r, v) in col.iter().enumerate() {
                if !v.is_zero() {
                    mat.set(r, j, v);
                }
            }
        }
        Ok(mat)
    }

    /// Kernel basis of the map out of `level` in degree d, cached.
    fn kernel(&mut self, level: usize, d: i64) -> Result<Rc<Vec<Vec<FieldElement>>>> {
        if let Some(k) = self.levels[level].kernels.get(&d) {
            return Ok(Rc::clone(k));
        }
        let (_, dim) = self.layout(level, d);
        let basis = if dim == 0 {
            Vec::new()
        } else {
            let mat = self.slice_matrix(level, d)?;
            let ns = mat.nullspace();
            columns_of(&ns.basis)
        };
        let rc = Rc::new(basis);
        self.levels[level].kernels.insert(d, Rc::clone(&rc));
        Ok(rc)
    }

    /// Number of levels built so far (level i exists for i < count).
    pub fn levels_built(&self) -> usize {
        self.levels.len()
    }

    pub fn finished(&self) -> bool {
        self.finished
    }

    /// Builds the next level; returns its generator degrees and counts.
    pub fn advance(&mut self) -> Result<BTreeMap<i64, usize>> {
        let mut fresh: BTreeMap<i64, usize> = BTreeMap::new();
        if self.finished {
            self.levels.push(Level {
                gen_degrees: Vec::new(),
                gen_vectors: Vec::new(),
                kernels: HashMap::new(),
            });
            return Ok(fresh);
        }
        let i = self.levels.len();
        let field = self.algebra.field().clone();
        let a1 = self.alg_dim(1);
        let mut gen_degrees = Vec::new();
        let mut gen_vectors = Vec::new();
        for d in 0..=self.degree_cap {
            // Kernel of the previous map in degree d (the full module
            // slice when starting level 0).
            let (current, ambient): (Rc<Vec<Vec<FieldElement>>>, usize) = if i == 0 {
                let dim = self.mod_dim(d);
                let identity: Vec<Vec<FieldElement>> = (0..dim)
                    .map(|r| {
                        let mut v = vec![field.zero(); dim];
                        v[r] = field.one();
                        v
                    })
                    .collect();
                (Rc::new(identity), dim)
            } else {
                let (_, dim) = self.layout(i - 1, d);
                (self.kernel(i - 1, d)?, dim)
            };
            if current.is_empty() {
                continue;
            }
            // Span of degree-one multiples of the previous degree.
            let previous: Rc<Vec<Vec<FieldElement>>> = if i == 0 {
                let dim = self.mod_dim(d - 1);
                let identity: Vec<Vec<FieldElement>> = (0..dim)
                    .map(|r| {
                        let mut v = vec![field.zero(); dim];
                        v[r] = field.one();
                        v
                    })
                    .collect();
                Rc::new(identity)
            } else {
                self.kernel(i - 1, d - 1)?
            };
            let mut ech = Echelon::new(&field, ambient);
            let target_rank = current.len();
            'span: for v in previous.iter() {
                for ai in 0..a1 {
                    if ech.rank() == target_rank {
                        break 'span;
                    }
                    let mut out = vec![field.zero(); ambient];
                    self.multiply_into_target(i, d - 1, v, 1, ai, &mut out)?;
                    ech.insert(&out);
                }
            }
            // Complete with kernel vectors: the completions are the fresh
            // minimal generators in this degree.
            for v in current.iter() {
                if ech.rank() == target_rank {
                    break;
                }
                if ech.insert(v) {
                    gen_degrees.push(d);
                    gen_vectors.push(v.clone());
                    *fresh.entry(d).or_insert(0) += 1;
                }
            }
        }
        if gen_degrees.is_empty() {
            self.finished = true;
        }
        self.levels.push(Level { gen_degrees, gen_vectors, kernels: HashMap::new() });
        Ok(fresh)
    }

    /// The Betti table of everything built so far.
    pub fn betti(&self) -> BettiTable {
        let mut entries = BTreeMap::new();
        for (i, level) in self.levels.iter().enumerate() {
            for &d in &level.gen_degrees {
                *entries.entry((i, d)).or_insert(0) += 1;
            }
        }
        BettiTable {
            entries,
            levels: self.levels.len().saturating_sub(1),
            degree_cap: self.degree_cap,
            complete: self.finished,
        }
    }
}

fn check_compatible(algebra: &SliceAlgebra, module: &SliceModule) -> Result<()> {
    if algebra.field() != module.data.field() {
        return Err(Error::IncompatibleFields(
            format!("{:?}", algebra.field()),
            format!("{:?}", module.data.field()),
        ));
    }
    match (&algebra.data, &module.data) {
        (_, SliceData::Point { .. }) => Ok(()),
        (SliceData::Quotient { gb: ga }, SliceData::Quotient { gb: gm }) => {
            ga.ring().check_compatible(gm.ring())?;
            for g in ga.elements() {
                if !gm.contains(g)? {
                    return Err(Error::Invalid(
                        "module ideal must contain the algebra ideal".to_string(),
                    ));
                }
            }
            Ok(())
        }
        (
            SliceData::Diagonal { gb: ga, c: ca, e: ea, .. },
            SliceData::Diagonal { gb: gm, c: cm, e: em, .. },
        ) => {
            ga.ring().check_compatible(gm.ring())?;
            if (ca, ea) != (cm, em) {
                return Err(Error::Invalid(
                    "algebra and module must use the same diagonal".to_string(),
                ));
            }
            for g in ga.elements() {
                if !gm.contains(g)? {
                    return Err(Error::Invalid(
                        "module ideal must contain the algebra ideal".to_string(),
                    ));
                }
            }
            Ok(())
        }
        _ => Err(Error::Invalid(
            "algebra and module slice kinds do not match".to_string(),
        )),
    }
}

/// Builds a sparse product table between slices: entry `[i][j]` is the
/// normal form of (left basis i) * (right basis j) expanded in the target
/// basis.  The right side determines the reduction (its ideal contains the
/// left one when both are quotients).
fn product_table(left: &SliceData, right: &SliceData, e: i64, f: i64) -> Result<ProductTable> {
    let lb = left.basis(e);
    // Residue-field module: products vanish except in degree zero.
    if matches!(right, SliceData::Point { .. }) {
        let cols = right.dim(f);
        let one = left.field().one();
        let row: Vec<Vec<(usize, FieldElement)>> = (0..cols)
            .map(|_| {
                if e == 0 && f == 0 {
                    vec![(0usize, one.clone())]
                } else {
                    Vec::new()
                }
            })
            .collect();
        return Ok(vec![row; lb.len()]);
    }
    let (gb, target) = match right {
        SliceData::Quotient { gb } | SliceData::Diagonal { gb, .. } => {
            let td = match (right.bidegree(f), right.bidegree(e + f)) {
                (_, Some(td)) => td,
                _ => return Ok(vec![Vec::new(); lb.len()]),
            };
            (gb, gb.standard_monomials(&td))
        }
        SliceData::Point { .. } => unreachable!(),
    };
    let rb = right.basis(f);
    let index: HashMap<&Monomial, usize> =
        target.iter().enumerate().map(|(r, m)| (m, r)).collect();
    let ring = gb.ring();
    let field = ring.field();
    let mut table = Vec::with_capacity(lb.len());
    for lm in &lb {
        let mut row = Vec::with_capacity(rb.len());
        for rm in &rb {
            let prod = lm.mul(rm)?;
            let poly = ring.polynomial(vec![(prod, field.one())]);
            let nf = gb.normal_form(&poly)?;
            let mut entry = Vec::with_capacity(nf.num_terms());
            for (m, c) in nf.terms() {
                entry.push((index[m], c.clone()));
            }
            row.push(entry);
        }
        table.push(row);
    }
    Ok(table)
}

/// Extracts the columns of a matrix as dense vectors.
fn columns_of(m: &Matrix) -> Vec<Vec<FieldElement>> {
    (0..m.cols())
        .map(|j| (0..m.rows()).map(|r| m.get(r, j)).collect())
        .collect()
}

/// Resolves the module over the algebra through `levels` homological
/// degrees with internal degrees capped at `degree_cap`.
pub fn resolve(
    algebra: &SliceAlgebra,
    module: &SliceModule,
    levels: usize,
    degree_cap: i64,
) -> Result<BettiTable> {
    let mut r = Resolver::new(algebra, module, degree_cap)?;
    for _ in 0..=levels {
        r.advance()?;
        if r.finished() {
            break;
        }
    }
    Ok(r.betti())
}

/// Probes Koszulness: resolves the residue field through `levels`
/// homological degrees (internal degrees through `degree_cap`) and reports
/// the first nonlinear syzygy, if any.
pub fn koszul_probe(
    algebra: &SliceAlgebra,
    levels: usize,
    degree_cap: i64,
) -> Result<(KoszulVerdict, BettiTable)> {
    if (degree_cap as i128) < (levels as i128) + 1 {
        return Err(Error::WindowExceeded(format!(
            "degree cap {degree_cap} cannot certify linearity through level {levels}"
        )));
    }
    let module = SliceModule::residue_field(algebra.field());
    let mut r = Resolver::new(algebra, &module, degree_cap)?;
    for i in 0..=levels {
        let fresh = r.advance()?;
        if i == 0 {
            continue;
        }
        if let Some((&d, _)) = fresh.iter().find(|&(&d, _)| d != i as i64) {
            return Ok((KoszulVerdict::NonlinearAt(i, d), r.betti()));
        }
        if r.finished() {
            break;
        }
    }
    Ok((KoszulVerdict::LinearUpTo(levels), r.betti()))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::groebner::{groebner_basis, Ideal};
    use crate::poly::{parse_polynomial, MonomialOrder, Ring};

    fn gf() -> FieldDescriptor {
        FieldDescriptor::prime(32003).unwrap()
    }

    fn quotient_algebra(vars: &[&str], gens: &[&str]) -> SliceAlgebra {
        let r = Ring::standard(vars, gf());
        let ideal = Ideal::new(
            &r,
            gens.iter().map(|s| parse_polynomial(&r, s).unwrap()).collect(),
        )
        .unwrap();
        let gb = groebner_basis(&ideal, &MonomialOrder::DegRevLex, None).unwrap();
        SliceAlgebra::graded_quotient(gb).unwrap()
    }

    #[test]
    fn residue_field_over_a_polynomial_ring_is_the_koszul_complex() {
        // Over K[x,y,z] the Betti numbers of K are binomials 1,3,3,1 with
        // all syzygies linear.
        let a = quotient_algebra(&["x", "y", "z"], &[]);
        let (verdict, betti) = koszul_probe(&a, 4, 6).unwrap();
        assert_eq!(verdict, KoszulVerdict::LinearUpTo(4));
        assert!(betti.complete);
        for (i, want) in [1usize, 3, 3, 1].iter().enumerate() {
            assert_eq!(betti.entry(i, i as i64), *want, "beta_{i}");
        }
        assert_eq!(betti.entry(4, 4), 0);
    }

    #[test]
    fn hypersurface_residue_field_is_two_periodic_and_linear_for_a_quadric() {
        // A = K[x,y]/(x^2 + y^2) is Koszul with Poincare series
        // (1+t)^2/(1-t^2) = 1 + 2t + 2t^2 + ..., so beta_i = 1, 2, 2, 2.
        let a = quotient_algebra(&["x", "y"], &["x^2 + y^2"]);
        let (verdict, betti) = koszul_probe(&a, 3, 5).unwrap();
        assert_eq!(verdict, KoszulVerdict::LinearUpTo(3));
        for (i, want) in [1usize, 2, 2, 2].iter().enumerate() {
            assert_eq!(betti.entry(i, i as i64), *want, "beta_{i}");
        }
    }

    #[test]
    fn a_cubic_hypersurface_is_not_koszul() {
        let a = quotient_algebra(&["x", "y"], &["x^3"]);
        let (verdict, _) = koszul_probe(&a, 3, 5).unwrap();
        assert_eq!(verdict, KoszulVerdict::NonlinearAt(2, 3));
    }

    #[test]
    fn betti_numbers_of_a_complete_intersection_module() {
        // Resolve A/(x,y) = K over A = K[x,y]/(x*y): beta_i = (1,2,2,2..)
        // hmm — use the module form instead: M = A/(x) over A = K[x,y]:
        // 0 -> A(-1) -> A -> M -> 0.
        let r = Ring::standard(&["x", "y"], gf());
        let empty = groebner_basis(
            &Ideal::new(&r, vec![]).unwrap(),
            &MonomialOrder::DegRevLex,
            None,
        )
        .unwrap();
        let a = SliceAlgebra::graded_quotient(empty).unwrap();
        let mx = groebner_basis(
            &Ideal::new(&r, vec![parse_polynomial(&r, "x").unwrap()]).unwrap(),
            &MonomialOrder::DegRevLex,
            None,
        )
        .unwrap();
        let m = SliceModule::graded_quotient(mx);
        let betti = resolve(&a, &m, 3, 5).unwrap();
        assert!(betti.complete);
        assert_eq!(betti.entry(0, 0), 1);
        assert_eq!(betti.entry(1, 1), 1);
        assert_eq!(betti.entries.len(), 2);
    }

    #[test]
    fn segre_diagonal_of_the_bigraded_plane_is_koszul() {
        // The (1,1)-diagonal of K[x1,x2,t1,t2] is the Segre quadric cone
        // K[z]/(z11 z22 - z12 z21)-style ring; its residue field must
        // resolve linearly.
        let ring = Ring::bigraded(&["x1", "x2"], &["t1", "t2"], gf());
        let gb = groebner_basis(
            &Ideal::new(&ring, vec![]).unwrap(),
            &MonomialOrder::DegRevLex,
            None,
        )
        .unwrap();
        let a = SliceAlgebra::diagonal(gb, 1, 1).unwrap();
        assert_eq!(a.dim(1), 4);
        let (verdict, betti) = koszul_probe(&a, 3, 5).unwrap();
        assert_eq!(verdict, KoszulVerdict::LinearUpTo(3));
        assert_eq!(betti.entry(1, 1), 4);
    }

    #[test]
    fn shifted_diagonal_modules_of_the_segre_plane_have_linear_resolutions() {
        // Proposition-style check at the smallest size: over the Segre
        // diagonal of K[x1,x2,t1,t2], the shifted diagonal R(0,-1) has
        // regularity 1.
        let ring = Ring::bigraded(&["x1", "x2"], &["t1", "t2"], gf());
        let gb = groebner_basis(
            &Ideal::new(&ring, vec![]).unwrap(),
            &MonomialOrder::DegRevLex,
            None,
        )
        .unwrap();
        let a = SliceAlgebra::diagonal(gb.clone(), 1, 1).unwrap();
        let m = SliceModule::diagonal(gb, 1, 1, (0, 1));
        let betti = resolve(&a, &m, 3, 6).unwrap();
        let reg = regularity(&betti);
        assert_eq!(reg.value, Some(1));
        // Generated by the two degree-one elements t1, t2 ... in slice 1
        // the module is R_(1,0), two-dimensional.
        assert_eq!(betti.entry(0, 1), 2);
    }

    #[test]
    fn zero_module_resolves_to_an_empty_table() {
        let r = Ring::standard(&["x"], gf());
        let unit_free = groebner_basis(
            &Ideal::new(&r, vec![parse_polynomial(&r, "x").unwrap()]).unwrap(),
            &MonomialOrder::DegRevLex,
            None,
        )
        .unwrap();
        let empty = groebner_basis(
            &Ideal::new(&r, vec![]).unwrap(),
            &MonomialOrder::DegRevLex,
            None,
        )
        .unwrap();
        let a = SliceAlgebra::graded_quotient(empty).unwrap();
        // Module K[x]/(x) has slices only in degree 0 — resolve it and the
        // table stays the Koszul strand of the variable.
        let m = SliceModule::graded_quotient(unit_free);
        let betti = resolve(&a, &m, 2, 4).unwrap();
        assert_eq!(betti.entry(0, 0), 1);
        assert_eq!(betti.entry(1, 1), 1);
        assert!(betti.complete);
    }
}
