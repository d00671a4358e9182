//! Exact sparse linear algebra over Q and Z.
//!
//! Rank and span computations run on primitive integer rows with fraction-free
//! elimination; the rational view (pivot entries equal to one) is produced on
//! demand. Smith normal form and lattice saturation live in [`smith`].

mod int;
pub mod smith;

pub use int::Int;
pub use smith::{
    integer_kernel, quotient_structure, saturate, smith_normal_form, smith_with_transforms,
    IntMatrix, QuotientStructure, SmithForm,
};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};

pub type Rational = num_rational::BigRational;

/// Sparse vector with rational entries, sorted by column, no stored zeros.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct SparseVector {
    entries: Vec<(usize, Rational)>,
}

impl SparseVector {
    pub fn new() -> Self {
        SparseVector::default()
    }

    /// Builds a vector from arbitrary pairs; duplicates are summed, zeros dropped.
    pub fn from_pairs<I: IntoIterator<Item = (usize, Rational)>>(pairs: I) -> Self {
        let mut entries: Vec<(usize, Rational)> = pairs.into_iter().collect();
        entries.sort_by_key(|e| e.0);
        let mut out: Vec<(usize, Rational)> = Vec::with_capacity(entries.len());
        for (c, v) in entries {
            match out.last_mut() {
                Some(last) if last.0 == c => last.1 += v,
                _ => out.push((c, v)),
            }
        }
        out.retain(|e| !e.1.is_zero());
        SparseVector { entries: out }
    }

    pub fn from_ints<I: IntoIterator<Item = (usize, i64)>>(pairs: I) -> Self {
        SparseVector::from_pairs(
            pairs
                .into_iter()
                .map(|(c, v)| (c, Rational::from_integer(BigInt::from(v)))),
        )
    }

    pub fn from_dense(values: &[i64]) -> Self {
        SparseVector::from_ints(values.iter().copied().enumerate())
    }

    pub fn entries(&self) -> &[(usize, Rational)] {
        &self.entries
    }

    pub fn get(&self, col: usize) -> Rational {
        match self.entries.binary_search_by_key(&col, |e| e.0) {
            Ok(i) => self.entries[i].1.clone(),
            Err(_) => Rational::zero(),
        }
    }

    pub fn nnz(&self) -> usize {
        self.entries.len()
    }

    pub fn is_zero(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn max_index(&self) -> Option<usize> {
        self.entries.last().map(|e| e.0)
    }

    pub fn scale(&self, s: &Rational) -> SparseVector {
        if s.is_zero() {
            return SparseVector::new();
        }
        SparseVector {
            entries: self.entries.iter().map(|(c, v)| (*c, v * s)).collect(),
        }
    }

    pub fn add(&self, other: &SparseVector) -> SparseVector {
        SparseVector::from_pairs(self.entries.iter().chain(other.entries.iter()).cloned())
    }

    /// Clears denominators and divides by the content: the primitive integer
    /// multiple with the same sign.
    pub fn to_primitive(&self) -> IntVector {
        let mut lcm = BigInt::one();
        for (_, v) in &self.entries {
            lcm = lcm.lcm(v.denom());
        }
        let ints = self
            .entries
            .iter()
            .map(|(c, v)| (*c, Int::from(v.numer() * (&lcm / v.denom()))))
            .collect();
        let mut out = IntVector { entries: ints };
        out.make_primitive();
        out
    }
}

/// Sparse vector with exact integer entries, sorted by column, no stored zeros.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct IntVector {
    entries: Vec<(usize, Int)>,
}

impl IntVector {
    pub fn new() -> Self {
        IntVector::default()
    }

    /// Entries must be sorted by strictly increasing column and nonzero.
    pub fn from_sorted(entries: Vec<(usize, Int)>) -> Self {
        debug_assert!(entries.windows(2).all(|w| w[0].0 < w[1].0));
        debug_assert!(entries.iter().all(|e| !e.1.is_zero()));
        IntVector { entries }
    }

    /// Builds a vector from arbitrary pairs; duplicates are summed, zeros dropped.
    pub fn from_pairs<I: IntoIterator<Item = (usize, Int)>>(pairs: I) -> Self {
        let mut entries: Vec<(usize, Int)> = pairs.into_iter().collect();
        entries.sort_by_key(|e| e.0);
        let mut out: Vec<(usize, Int)> = Vec::with_capacity(entries.len());
        for (c, v) in entries {
            match out.last_mut() {
                Some(last) if last.0 == c => last.1 += &v,
                _ => out.push((c, v)),
            }
        }
        out.retain(|e| !e.1.is_zero());
        IntVector { entries: out }
    }

    pub fn from_dense(values: &[i64]) -> Self {
        IntVector::from_pairs(values.iter().enumerate().map(|(c, v)| (c, Int::from(*v))))
    }

    pub fn entries(&self) -> &[(usize, Int)] {
        &self.entries
    }

    pub fn into_entries(self) -> Vec<(usize, Int)> {
        self.entries
    }

    pub fn get(&self, col: usize) -> Int {
        match self.entries.binary_search_by_key(&col, |e| e.0) {
            Ok(i) => self.entries[i].1.clone(),
            Err(_) => Int::zero(),
        }
    }

    pub fn nnz(&self) -> usize {
        self.entries.len()
    }

    pub fn is_zero(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn max_index(&self) -> Option<usize> {
        self.entries.last().map(|e| e.0)
    }

    pub fn neg(&self) -> IntVector {
        IntVector {
            entries: self.entries.iter().map(|(c, v)| (*c, -v)).collect(),
        }
    }

    pub fn to_dense(&self, len: usize) -> Vec<Int> {
        let mut out = vec![Int::zero(); len];
        for (c, v) in &self.entries {
            out[*c] = v.clone();
        }
        out
    }

    pub fn to_rational(&self) -> SparseVector {
        SparseVector {
            entries: self
                .entries
                .iter()
                .map(|(c, v)| (*c, Rational::from_integer(v.to_bigint())))
                .collect(),
        }
    }

    /// Gcd of all entries (zero for the zero vector).
    pub fn content(&self) -> Int {
        let mut g = Int::zero();
        for (_, v) in &self.entries {
            g = g.gcd(v);
            if g.is_one() {
                break;
            }
        }
        g
    }

    /// Divides by the content and makes the leading entry positive.
    pub fn make_primitive(&mut self) {
        let g = self.content();
        if g.is_zero() {
            return;
        }
        let flip = self.entries[0].1.is_negative();
        if !g.is_one() {
            for e in &mut self.entries {
                e.1 = e.1.div_exact(&g);
            }
        }
        if flip {
            for e in &mut self.entries {
                e.1 = -&e.1;
            }
        }
    }

    /// `a * self - b * other`.
    pub fn combine(&self, a: &Int, other: &IntVector, b: &Int) -> IntVector {
        let mut out = Vec::with_capacity(self.entries.len() + other.entries.len());
        merge_combine(&self.entries, a, &other.entries, b, &mut out);
        IntVector { entries: out }
    }
}

/// Writes `a * x - b * y` into `out` (all sorted, no zeros kept).
fn merge_combine(x: &[(usize, Int)], a: &Int, y: &[(usize, Int)], b: &Int, out: &mut Vec<(usize, Int)>) {
    let (mut i, mut j) = (0, 0);
    let a_one = a.is_one();
    while i < x.len() || j < y.len() {
        if j == y.len() || (i < x.len() && x[i].0 < y[j].0) {
            let v = if a_one { x[i].1.clone() } else { a * &x[i].1 };
            out.push((x[i].0, v));
            i += 1;
        } else if i == x.len() || y[j].0 < x[i].0 {
            out.push((y[j].0, -(b * &y[j].1)));
            j += 1;
        } else {
            let v = Int::mul_sub(a, &x[i].1, b, &y[j].1);
            if !v.is_zero() {
                out.push((x[i].0, v));
            }
            i += 1;
            j += 1;
        }
    }
}

/// Matrix of sparse rational rows.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct SparseMatrix {
    ncols: usize,
    rows: Vec<SparseVector>,
}

impl SparseMatrix {
    pub fn new(ncols: usize) -> Self {
        SparseMatrix { ncols, rows: Vec::new() }
    }

    pub fn from_rows(ncols: usize, rows: Vec<SparseVector>) -> Self {
        for r in &rows {
            assert!(r.max_index().map_or(true, |c| c < ncols), "row index out of range");
        }
        SparseMatrix { ncols, rows }
    }

    pub fn from_dense(rows: &[Vec<i64>]) -> Self {
        let ncols = rows.first().map_or(0, |r| r.len());
        SparseMatrix::from_rows(ncols, rows.iter().map(|r| SparseVector::from_dense(r)).collect())
    }

    pub fn push(&mut self, row: SparseVector) {
        assert!(row.max_index().map_or(true, |c| c < self.ncols), "row index out of range");
        self.rows.push(row);
    }

    pub fn ncols(&self) -> usize {
        self.ncols
    }

    pub fn nrows(&self) -> usize {
        self.rows.len()
    }

    pub fn rows(&self) -> &[SparseVector] {
        &self.rows
    }
}

const NO_PIVOT: u32 = u32::MAX;

/// Row space of a growing set of vectors, kept in echelon form.
///
/// Stored rows are primitive integer vectors whose first entry (the pivot) is
/// positive and sits in a column no other row starts in. The pivot set depends
/// only on the row space, so reductions against it are canonical.
#[derive(Clone, Debug)]
pub struct IncrementalSpan {
    ncols: usize,
    rows: Vec<IntVector>,
    pivot_row: Vec<u32>,
}

impl IncrementalSpan {
    pub fn new(ncols: usize) -> Self {
        IncrementalSpan {
            ncols,
            rows: Vec::new(),
            pivot_row: vec![NO_PIVOT; ncols],
        }
    }

    pub fn ncols(&self) -> usize {
        self.ncols
    }

    pub fn dim(&self) -> usize {
        self.rows.len()
    }

    pub fn is_full(&self) -> bool {
        self.rows.len() == self.ncols
    }

    #[inline]
    fn pivot_of(&self, col: usize) -> Option<&IntVector> {
        match self.pivot_row[col] {
            NO_PIVOT => None,
            r => Some(&self.rows[r as usize]),
        }
    }

    /// Eliminates pivot columns of `v` in increasing order, starting at entry
    /// index `from`. If `stop_at_free`, returns as soon as the smallest
    /// surviving column is not a pivot. Multiplies `scale` by every factor
    /// applied to `v` (so that `v / scale` stays congruent to the input).
    fn eliminate(&self, mut v: Vec<(usize, Int)>, stop_at_free: bool, mut scale: Option<&mut Int>) -> Vec<(usize, Int)> {
        let mut idx = 0;
        let mut buf = Vec::new();
        while idx < v.len() {
            let col = v[idx].0;
            let Some(p) = self.pivot_of(col) else {
                if stop_at_free {
                    break;
                }
                idx += 1;
                continue;
            };
            let pe = &p.entries;
            let a = &pe[0].1;
            let b = &v[idx].1;
            let g = a.gcd(b);
            let (a, b) = (a.div_exact(&g), b.div_exact(&g));
            buf.clear();
            buf.reserve(v.len() + pe.len());
            for e in &v[..idx] {
                buf.push((e.0, if a.is_one() { e.1.clone() } else { &a * &e.1 }));
            }
            merge_combine(&v[idx..], &a, pe, &b, &mut buf);
            std::mem::swap(&mut v, &mut buf);
            if !a.is_one() {
                // Keep entries small: divide out the content (shared with the
                // scale when one is tracked).
                let mut c = Int::zero();
                for e in &v {
                    c = c.gcd(&e.1);
                    if c.is_one() {
                        break;
                    }
                }
                match scale.as_deref_mut() {
                    Some(s) => {
                        *s = &*s * &a;
                        c = c.gcd(s);
                        if !c.is_one() && !c.is_zero() {
                            *s = s.div_exact(&c);
                        }
                    }
                    None => {}
                }
                if !c.is_one() && !c.is_zero() {
                    for e in &mut v {
                        e.1 = e.1.div_exact(&c);
                    }
                }
            }
        }
        v
    }

    /// Adds `v` to the spanning set; returns whether it enlarged the span.
    pub fn insert(&mut self, v: IntVector) -> bool {
        assert!(v.max_index().map_or(true, |c| c < self.ncols), "vector index out of range");
        if v.is_zero() || self.is_full() {
            return false;
        }
        let r = self.eliminate(v.entries, true, None);
        if r.is_empty() {
            return false;
        }
        let mut row = IntVector { entries: r };
        row.make_primitive();
        let col = row.entries[0].0;
        debug_assert_eq!(self.pivot_row[col], NO_PIVOT);
        self.pivot_row[col] = self.rows.len() as u32;
        self.rows.push(row);
        true
    }

    pub fn insert_rational(&mut self, v: &SparseVector) -> bool {
        self.insert(v.to_primitive())
    }

    /// Canonical remainder of `v` modulo the span, as a primitive-direction
    /// integer vector together with its scale: the rational remainder is
    /// `vector / scale`. Zero at every pivot column.
    pub fn reduce_scaled(&self, v: &IntVector) -> (IntVector, Int) {
        let mut scale = Int::one();
        let r = self.eliminate(v.entries.clone(), false, Some(&mut scale));
        (IntVector { entries: r }, scale)
    }

    /// Canonical rational remainder of `v` modulo the span.
    pub fn reduce(&self, v: &SparseVector) -> SparseVector {
        let mut lcm = BigInt::one();
        for (_, x) in v.entries() {
            lcm = lcm.lcm(x.denom());
        }
        let iv = IntVector::from_sorted(
            v.entries()
                .iter()
                .map(|(c, x)| (*c, Int::from(x.numer() * (&lcm / x.denom()))))
                .collect(),
        );
        let (r, scale) = self.reduce_scaled(&iv);
        let denom = scale.to_bigint() * lcm;
        SparseVector {
            entries: r
                .entries
                .into_iter()
                .map(|(c, x)| (c, Rational::new(x.to_bigint(), denom.clone())))
                .collect(),
        }
    }

    pub fn contains(&self, v: &IntVector) -> bool {
        if v.is_zero() || self.is_full() {
            return true;
        }
        // Every nonzero element of the span starts in a pivot column, so the
        // early stop only triggers for vectors outside it.
        self.eliminate(v.entries.clone(), true, None).is_empty()
    }

    pub fn contains_rational(&self, v: &SparseVector) -> bool {
        self.contains(&v.to_primitive())
    }

    /// Pivot columns in increasing order.
    pub fn pivot_columns(&self) -> Vec<usize> {
        let mut cols: Vec<usize> = self.rows.iter().map(|r| r.entries[0].0).collect();
        cols.sort_unstable();
        cols
    }

    /// Stored integer rows in insertion order.
    pub fn int_rows(&self) -> &[IntVector] {
        &self.rows
    }

    /// Echelon basis over Q: rows sorted by pivot column, each pivot entry 1.
    pub fn basis(&self) -> Vec<SparseVector> {
        let mut rows: Vec<&IntVector> = self.rows.iter().collect();
        rows.sort_by_key(|r| r.entries[0].0);
        rows.into_iter()
            .map(|r| {
                let p = Rational::from_integer(r.entries[0].1.to_bigint());
                r.to_rational().scale(&(Rational::one() / p))
            })
            .collect()
    }

    /// Fully reduced basis over Z: every row vanishes at the other rows'
    /// pivot columns. Sorted by pivot column; each row primitive.
    pub fn reduced_rows(&self) -> Vec<IntVector> {
        let mut rows: Vec<IntVector> = self.rows.clone();
        rows.sort_by_key(|r| r.entries[0].0);
        let pivots: Vec<usize> = rows.iter().map(|r| r.entries[0].0).collect();
        let mut pos = vec![NO_PIVOT; self.ncols];
        for (i, &c) in pivots.iter().enumerate() {
            pos[c] = i as u32;
        }
        for i in (0..rows.len()).rev() {
            let mut v = std::mem::take(&mut rows[i]);
            loop {
                let hit = v.entries[1..]
                    .iter()
                    .find(|e| pos[e.0] != NO_PIVOT)
                    .map(|e| (pos[e.0] as usize, e.1.clone()));
                let Some((j, b)) = hit else { break };
                let p = &rows[j];
                let a = &p.entries[0].1;
                let g = a.gcd(&b);
                v = v.combine(&a.div_exact(&g), p, &b.div_exact(&g));
                v.make_primitive();
            }
            rows[i] = v;
        }
        rows
    }
}

/// Functional form of [`IncrementalSpan::insert`].
pub fn span_insert(mut s: IncrementalSpan, v: &SparseVector) -> (IncrementalSpan, bool) {
    let independent = s.insert_rational(v);
    (s, independent)
}

/// Rows converted to primitive integer vectors, ordered by fewest nonzeros
/// (ties by original position).
fn sparsity_order(rows: impl Iterator<Item = IntVector>) -> Vec<IntVector> {
    let mut rows: Vec<(usize, IntVector)> = rows.filter(|r| !r.is_zero()).enumerate().collect();
    rows.sort_by_key(|(i, r)| (r.nnz(), *i));
    rows.into_iter().map(|(_, r)| r).collect()
}

pub fn span_of_int_rows(ncols: usize, rows: impl Iterator<Item = IntVector>) -> IncrementalSpan {
    let mut s = IncrementalSpan::new(ncols);
    for r in sparsity_order(rows) {
        if s.is_full() {
            break;
        }
        s.insert(r);
    }
    s
}

/// Rank over Q of integer rows in `ncols` columns.
pub fn rank_int(ncols: usize, rows: impl Iterator<Item = IntVector>) -> usize {
    span_of_int_rows(ncols, rows).dim()
}

/// Rank of `m` over Q.
pub fn rank(m: &SparseMatrix) -> usize {
    rank_int(m.ncols, m.rows.iter().map(|r| r.to_primitive()))
}

/// Basis of the right null space of `m` over Q, one vector per free column
/// (in increasing column order), with a 1 in that free column.
pub fn kernel_basis(m: &SparseMatrix) -> Vec<SparseVector> {
    let span = span_of_int_rows(m.ncols, m.rows.iter().map(|r| r.to_primitive()));
    kernel_of_span(&span)
}

pub fn kernel_of_span(span: &IncrementalSpan) -> Vec<SparseVector> {
    let rows = span.reduced_rows();
    let ncols = span.ncols();
    let mut is_pivot = vec![false; ncols];
    for r in &rows {
        is_pivot[r.entries[0].0] = true;
    }
    // Column-major view of the non-pivot entries.
    let mut by_col: Vec<Vec<(usize, Rational)>> = vec![Vec::new(); ncols];
    for r in &rows {
        let (pc, pv) = (&r.entries[0].0, r.entries[0].1.to_bigint());
        for (c, v) in &r.entries[1..] {
            by_col[*c].push((*pc, -Rational::new(v.to_bigint(), pv.clone())));
        }
    }
    (0..ncols)
        .filter(|&c| !is_pivot[c])
        .map(|f| {
            let mut pairs = std::mem::take(&mut by_col[f]);
            pairs.push((f, Rational::one()));
            SparseVector::from_pairs(pairs)
        })
        .collect()
}

/// Coefficients expressing `target` in terms of `basis` (which must be
/// linearly independent), or `None` if `target` is outside their span.
pub fn solve_combination(basis: &[SparseVector], target: &SparseVector, ncols: usize) -> Option<Vec<Rational>> {
    let m = basis.len();
    let mut span = IncrementalSpan::new(ncols + m);
    for (i, b) in basis.iter().enumerate() {
        let mut pairs: Vec<(usize, Rational)> = b.entries().to_vec();
        pairs.push((ncols + i, Rational::one()));
        let ok = span.insert_rational(&SparseVector::from_pairs(pairs));
        assert!(ok, "solve_combination: basis vectors are dependent");
    }
    let r = span.reduce(target);
    if r.entries().iter().any(|(c, _)| *c < ncols) {
        return None;
    }
    let mut coeffs = vec![Rational::zero(); m];
    for (c, v) in r.entries() {
        coeffs[c - ncols] = -v.clone();
    }
    Some(coeffs)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(v: i64) -> Rational {
        Rational::from_integer(BigInt::from(v))
    }

    #[test]
    fn rank_examples() {
        assert_eq!(rank(&SparseMatrix::from_dense(&[vec![1, 0], vec![0, 1]])), 2);
        assert_eq!(rank(&SparseMatrix::from_dense(&[vec![0, 0], vec![0, 0]])), 0);
        assert_eq!(rank(&SparseMatrix::from_dense(&[vec![1, 2], vec![2, 4], vec![0, 1]])), 2);
    }

    #[test]
    fn kernel_examples() {
        let k = kernel_basis(&SparseMatrix::from_dense(&[vec![1, -1]]));
        assert_eq!(k.len(), 1);
        assert_eq!(k[0].get(0), k[0].get(1));
        assert!(kernel_basis(&SparseMatrix::from_dense(&[vec![1, 0], vec![0, 1]])).is_empty());
        let k = kernel_basis(&SparseMatrix::from_dense(&[vec![2, 4]]));
        assert_eq!(k.len(), 1);
        // proportional to (2, -1)
        assert_eq!(k[0].get(0), k[0].get(1) * q(-2));
    }

    #[test]
    fn span_insert_examples() {
        let s = IncrementalSpan::new(2);
        let (s, a) = span_insert(s, &SparseVector::from_dense(&[1, 0]));
        let (s, b) = span_insert(s, &SparseVector::from_dense(&[1, 0]));
        assert!(a && !b);
        assert_eq!(s.dim(), 1);
        let s = IncrementalSpan::new(2);
        let (s, a) = span_insert(s, &SparseVector::from_dense(&[1, 1]));
        let (s, b) = span_insert(s, &SparseVector::from_dense(&[1, -1]));
        assert!(a && b);
        assert_eq!(s.dim(), 2);
    }

    #[test]
    fn echelon_basis_has_unit_pivots() {
        let mut s = IncrementalSpan::new(4);
        s.insert(IntVector::from_dense(&[0, 3, 6, 9]));
        s.insert(IntVector::from_dense(&[2, 1, 0, 0]));
        let b = s.basis();
        assert_eq!(b.len(), 2);
        assert_eq!(b[0].get(0), q(1));
        assert_eq!(b[1].get(1), q(1));
        assert_eq!(b[1].get(2), q(2));
    }

    #[test]
    fn reduce_is_canonical() {
        let mut s1 = IncrementalSpan::new(3);
        s1.insert(IntVector::from_dense(&[1, 1, 0]));
        s1.insert(IntVector::from_dense(&[0, 1, 1]));
        let mut s2 = IncrementalSpan::new(3);
        s2.insert(IntVector::from_dense(&[1, 0, -1]));
        s2.insert(IntVector::from_dense(&[2, 3, 1]));
        let v = SparseVector::from_dense(&[5, 7, 11]);
        assert_eq!(s1.reduce(&v), s2.reduce(&v));
        // v - r lies in the span
        let r = s1.reduce(&v);
        assert!(s1.contains_rational(&v.add(&r.scale(&q(-1)))));
        assert!(!s1.contains(&IntVector::from_dense(&[0, 0, 1])));
    }

    #[test]
    fn solve_combination_recovers_coefficients() {
        let basis = vec![SparseVector::from_dense(&[1, 2, 0]), SparseVector::from_dense(&[0, 1, 3])];
        let target = SparseVector::from_dense(&[2, 1, -9]);
        let c = solve_combination(&basis, &target, 3).unwrap();
        assert_eq!(c, vec![q(2), q(-3)]);
        assert!(solve_combination(&basis, &SparseVector::from_dense(&[0, 0, 1]), 3).is_none());
    }
}
