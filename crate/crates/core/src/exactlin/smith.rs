//! Integer lattices: Smith normal form, saturation, integer kernels and
//! finitely generated abelian quotients.

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::{kernel_basis, Int, SparseMatrix, SparseVector};

/// Dense integer matrix stored by rows.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct IntMatrix {
    ncols: usize,
    rows: Vec<Vec<Int>>,
}

impl IntMatrix {
    pub fn zeros(nrows: usize, ncols: usize) -> Self {
        IntMatrix {
            ncols,
            rows: vec![vec![Int::zero(); ncols]; nrows],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = IntMatrix::zeros(n, n);
        for i in 0..n {
            m.rows[i][i] = Int::one();
        }
        m
    }

    pub fn new(ncols: usize, rows: Vec<Vec<Int>>) -> Self {
        assert!(rows.iter().all(|r| r.len() == ncols), "ragged integer matrix");
        IntMatrix { ncols, rows }
    }

    pub fn from_i64(ncols: usize, rows: &[Vec<i64>]) -> Self {
        IntMatrix::new(
            ncols,
            rows.iter().map(|r| r.iter().map(|&v| Int::from(v)).collect()).collect(),
        )
    }

    pub fn nrows(&self) -> usize {
        self.rows.len()
    }

    pub fn ncols(&self) -> usize {
        self.ncols
    }

    pub fn rows(&self) -> &[Vec<Int>] {
        &self.rows
    }

    pub fn get(&self, r: usize, c: usize) -> &Int {
        &self.rows[r][c]
    }

    pub fn push_row(&mut self, row: Vec<Int>) {
        assert_eq!(row.len(), self.ncols, "row length mismatch");
        self.rows.push(row);
    }

    pub fn mul(&self, other: &IntMatrix) -> IntMatrix {
        assert_eq!(self.ncols, other.nrows(), "dimension mismatch");
        let mut out = IntMatrix::zeros(self.nrows(), other.ncols);
        for (i, row) in self.rows.iter().enumerate() {
            for (k, a) in row.iter().enumerate() {
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.ncols {
                    let b = &other.rows[k][j];
                    if !b.is_zero() {
                        out.rows[i][j] += &(a * b);
                    }
                }
            }
        }
        out
    }

    pub fn transpose(&self) -> IntMatrix {
        let mut out = IntMatrix::zeros(self.ncols, self.nrows());
        for (i, row) in self.rows.iter().enumerate() {
            for (j, v) in row.iter().enumerate() {
                out.rows[j][i] = v.clone();
            }
        }
        out
    }

    pub fn to_sparse(&self) -> SparseMatrix {
        SparseMatrix::from_rows(
            self.ncols,
            self.rows
                .iter()
                .map(|r| {
                    SparseVector::from_pairs(r.iter().enumerate().filter(|(_, v)| !v.is_zero()).map(
                        |(c, v)| (c, super::Rational::from_integer(v.to_bigint())),
                    ))
                })
                .collect(),
        )
    }
}

/// Result of a Smith reduction with transforms: `u * a * v = d` where `d`
/// is diagonal with entries `divisors` followed by zeros.
#[derive(Clone, Debug)]
pub struct SmithForm {
    pub divisors: Vec<Int>,
    pub u: IntMatrix,
    pub v: IntMatrix,
}

fn ext_gcd(a: &Int, b: &Int) -> (Int, Int, Int) {
    if let (Some(x), Some(y)) = (a.to_i64(), b.to_i64()) {
        if x != i64::MIN && y != i64::MIN {
            let e = x.extended_gcd(&y);
            let (mut g, mut s, mut t) = (e.gcd, e.x, e.y);
            if g < 0 {
                g = -g;
                s = -s;
                t = -t;
            }
            return (Int::from(g), Int::from(s), Int::from(t));
        }
    }
    let e = a.to_bigint().extended_gcd(&b.to_bigint());
    let (mut g, mut s, mut t) = (e.gcd, e.x, e.y);
    if g.is_negative() {
        g = -g;
        s = -s;
        t = -t;
    }
    (Int::from(g), Int::from(s), Int::from(t))
}

struct Reducer {
    a: Vec<Vec<Int>>,
    u: Option<Vec<Vec<Int>>>,
    v: Option<Vec<Vec<Int>>>,
}

impl Reducer {
    fn swap_rows(&mut self, i: usize, j: usize) {
        self.a.swap(i, j);
        if let Some(u) = &mut self.u {
            u.swap(i, j);
        }
    }

    fn swap_cols(&mut self, i: usize, j: usize) {
        for r in &mut self.a {
            r.swap(i, j);
        }
        if let Some(v) = &mut self.v {
            for r in v.iter_mut() {
                r.swap(i, j);
            }
        }
    }

    /// row_i -= q * row_j
    fn row_sub(&mut self, i: usize, j: usize, q: &Int, from_col: usize) {
        let (ri, rj) = pair_mut(&mut self.a, i, j);
        for c in from_col..ri.len() {
            if !rj[c].is_zero() {
                ri[c] -= &(q * &rj[c]);
            }
        }
        if let Some(u) = &mut self.u {
            let (ri, rj) = pair_mut(u, i, j);
            for c in 0..ri.len() {
                if !rj[c].is_zero() {
                    ri[c] -= &(q * &rj[c]);
                }
            }
        }
    }

    /// col_i -= q * col_j
    fn col_sub(&mut self, i: usize, j: usize, q: &Int, from_row: usize) {
        for r in &mut self.a[from_row..] {
            if !r[j].is_zero() {
                let t = q * &r[j];
                r[i] -= &t;
            }
        }
        if let Some(v) = &mut self.v {
            for r in v.iter_mut() {
                if !r[j].is_zero() {
                    let t = q * &r[j];
                    r[i] -= &t;
                }
            }
        }
    }

    fn negate_row(&mut self, i: usize) {
        for x in &mut self.a[i] {
            *x = -&*x;
        }
        if let Some(u) = &mut self.u {
            for x in &mut u[i] {
                *x = -&*x;
            }
        }
    }

    /// Runs the reduction; returns the nonzero diagonal.
    fn run(&mut self) -> Vec<Int> {
        let nrows = self.a.len();
        let ncols = self.a.first().map_or(0, |r| r.len());
        let mut t = 0;
        while t < nrows.min(ncols) {
            // Pivot: smallest nonzero absolute value in the trailing block.
            let mut best: Option<(usize, usize)> = None;
            for i in t..nrows {
                for j in t..ncols {
                    let x = &self.a[i][j];
                    if x.is_zero() {
                        continue;
                    }
                    let better = match best {
                        None => true,
                        Some((bi, bj)) => x.abs() < self.a[bi][bj].abs(),
                    };
                    if better {
                        best = Some((i, j));
                        if x.abs().is_one() {
                            break;
                        }
                    }
                }
                if let Some((bi, bj)) = best {
                    if self.a[bi][bj].abs().is_one() {
                        break;
                    }
                }
            }
            let Some((pi, pj)) = best else { break };
            self.swap_rows(t, pi);
            self.swap_cols(t, pj);
            loop {
                let mut dirty = false;
                for i in t + 1..nrows {
                    if self.a[i][t].is_zero() {
                        continue;
                    }
                    let (q, _) = self.a[i][t].div_mod_floor(&self.a[t][t]);
                    self.row_sub(i, t, &q, t);
                    if !self.a[i][t].is_zero() {
                        dirty = true;
                    }
                }
                for j in t + 1..ncols {
                    if self.a[t][j].is_zero() {
                        continue;
                    }
                    let (q, _) = self.a[t][j].div_mod_floor(&self.a[t][t]);
                    self.col_sub(j, t, &q, t);
                    if !self.a[t][j].is_zero() {
                        dirty = true;
                    }
                }
                if !dirty {
                    // Pivot must divide the whole trailing block.
                    let p = self.a[t][t].clone();
                    let bad = (t + 1..nrows).find(|&i| (t + 1..ncols).any(|j| !self.a[i][j].div_mod_floor(&p).1.is_zero()));
                    match bad {
                        None => break,
                        Some(i) => {
                            // row_t += row_i, then continue reducing.
                            self.row_sub(t, i, &Int::from(-1), t);
                            continue;
                        }
                    }
                }
                // Move the smallest entry of row/column t onto the diagonal.
                let mut best = (t, t);
                for i in t + 1..nrows {
                    if !self.a[i][t].is_zero() && self.a[i][t].abs() < self.a[best.0][best.1].abs() {
                        best = (i, t);
                    }
                }
                for j in t + 1..ncols {
                    if !self.a[t][j].is_zero() && self.a[t][j].abs() < self.a[best.0][best.1].abs() {
                        best = (t, j);
                    }
                }
                if best.0 != t {
                    self.swap_rows(t, best.0);
                } else if best.1 != t {
                    self.swap_cols(t, best.1);
                }
            }
            if self.a[t][t].is_negative() {
                self.negate_row(t);
            }
            t += 1;
        }
        (0..t).map(|i| self.a[i][i].clone()).collect()
    }
}

fn pair_mut<T>(v: &mut [T], i: usize, j: usize) -> (&mut T, &T) {
    assert_ne!(i, j);
    if i < j {
        let (a, b) = v.split_at_mut(j);
        (&mut a[i], &b[0])
    } else {
        let (a, b) = v.split_at_mut(i);
        (&mut b[0], &a[j])
    }
}

/// Nonzero elementary divisors `d_1 | d_2 | ...` of an integer matrix.
pub fn smith_normal_form(m: &IntMatrix) -> Vec<Int> {
    let mut r = Reducer {
        a: m.rows.clone(),
        u: None,
        v: None,
    };
    r.run()
}

/// Smith normal form with unimodular transforms `u * m * v = diag(divisors)`.
pub fn smith_with_transforms(m: &IntMatrix) -> SmithForm {
    let mut r = Reducer {
        a: m.rows.clone(),
        u: Some(IntMatrix::identity(m.nrows()).rows),
        v: Some(IntMatrix::identity(m.ncols).rows),
    };
    let divisors = r.run();
    SmithForm {
        divisors,
        u: IntMatrix::new(m.nrows(), r.u.unwrap()),
        v: IntMatrix::new(m.ncols, r.v.unwrap()),
    }
}

/// Basis of the saturation `(Q-span of rows) ∩ Z^ncols` of a lattice.
///
/// Column-style Hermite reduction `m * w = [h | 0]` with `w` unimodular; the
/// first `rank` rows of `w^-1` form the saturated basis.
pub fn saturate(m: &IntMatrix) -> IntMatrix {
    let ncols = m.ncols;
    let mut a = m.rows.clone();
    let mut winv = IntMatrix::identity(ncols).rows;
    let mut c = 0;
    for t in 0..a.len() {
        if c == ncols {
            break;
        }
        for j in c + 1..ncols {
            if a[t][j].is_zero() {
                continue;
            }
            if a[t][c].is_zero() {
                for r in a.iter_mut() {
                    r.swap(c, j);
                }
                winv.swap(c, j);
                continue;
            }
            let (g, x, y) = ext_gcd(&a[t][c], &a[t][j]);
            let p = a[t][c].div_exact(&g);
            let q = a[t][j].div_exact(&g);
            // new col c = x*col_c + y*col_j ; new col j = -q*col_c + p*col_j
            for r in a.iter_mut() {
                let (uc, uj) = (r[c].clone(), r[j].clone());
                r[c] = &(&x * &uc) + &(&y * &uj);
                r[j] = &(&p * &uj) - &(&q * &uc);
            }
            // inverse on rows: new row c = p*row_c + q*row_j ; new row j = -y*row_c + x*row_j
            let (rc, rj) = (winv[c].clone(), winv[j].clone());
            for k in 0..ncols {
                winv[c][k] = &(&p * &rc[k]) + &(&q * &rj[k]);
                winv[j][k] = &(&x * &rj[k]) - &(&y * &rc[k]);
            }
        }
        if !a[t][c].is_zero() {
            c += 1;
        }
    }
    IntMatrix::new(ncols, winv.into_iter().take(c).collect())
}

/// Z-basis of the integer kernel `{x in Z^ncols : m x = 0}`: the rational
/// kernel with denominators cleared, then saturated.
pub fn integer_kernel(m: &IntMatrix) -> IntMatrix {
    let k = kernel_basis(&m.to_sparse());
    let rows: Vec<Vec<Int>> = k
        .iter()
        .map(|v| v.to_primitive().to_dense(m.ncols))
        .collect();
    if rows.is_empty() {
        return IntMatrix::new(m.ncols, Vec::new());
    }
    saturate(&IntMatrix::new(m.ncols, rows))
}

/// Finitely generated abelian group `Z^free_rank ⊕ Z/t_1 ⊕ ... ⊕ Z/t_s` with
/// `t_1 | t_2 | ... | t_s`, all `t_i > 1`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct QuotientStructure {
    pub free_rank: usize,
    pub torsion: Vec<Int>,
}

impl QuotientStructure {
    pub fn free(rank: usize) -> Self {
        QuotientStructure {
            free_rank: rank,
            torsion: Vec::new(),
        }
    }

    pub fn is_trivial(&self) -> bool {
        self.free_rank == 0 && self.torsion.is_empty()
    }

    /// Direct sum, with the torsion brought back to invariant-factor form.
    pub fn direct_sum(&self, other: &QuotientStructure) -> QuotientStructure {
        let all: Vec<Int> = self.torsion.iter().chain(other.torsion.iter()).cloned().collect();
        QuotientStructure {
            free_rank: self.free_rank + other.free_rank,
            torsion: invariant_factors(&all),
        }
    }

    pub fn torsion_i64(&self) -> Vec<i64> {
        self.torsion.iter().map(|t| t.to_i64().expect("torsion fits i64")).collect()
    }
}

fn invariant_factors(orders: &[Int]) -> Vec<Int> {
    let n = orders.len();
    let mut m = IntMatrix::zeros(n, n);
    for (i, t) in orders.iter().enumerate() {
        m.rows[i][i] = t.clone();
    }
    smith_normal_form(&m).into_iter().filter(|d| !d.is_one()).collect()
}

impl fmt::Display for QuotientStructure {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut parts = Vec::new();
        match self.free_rank {
            0 => {}
            1 => parts.push("Z".to_string()),
            r => parts.push(format!("Z^{r}")),
        }
        for t in &self.torsion {
            parts.push(format!("Z/{t}"));
        }
        if parts.is_empty() {
            write!(f, "0")
        } else {
            write!(f, "{}", parts.join(" + "))
        }
    }
}

/// Structure of `Z^ambient_dim / (row span of gens)`.
pub fn quotient_structure(ambient_dim: usize, gens: &IntMatrix) -> QuotientStructure {
    assert!(gens.nrows() == 0 || gens.ncols() <= ambient_dim, "generator width exceeds ambient");
    if gens.nrows() == 0 {
        return QuotientStructure::free(ambient_dim);
    }
    let d = smith_normal_form(gens);
    QuotientStructure {
        free_rank: ambient_dim - d.len(),
        torsion: d.into_iter().filter(|x| !x.is_one()).collect(),
    }
}

/// Gcd of all `r x r` minors; a brute-force oracle for small matrices.
pub fn minor_gcd(m: &IntMatrix, r: usize) -> BigInt {
    fn det(a: &[Vec<BigInt>]) -> BigInt {
        let n = a.len();
        if n == 0 {
            return BigInt::one();
        }
        let mut total = BigInt::zero();
        for j in 0..n {
            if a[0][j].is_zero() {
                continue;
            }
            let sub: Vec<Vec<BigInt>> = a[1..]
                .iter()
                .map(|row| row.iter().enumerate().filter(|(c, _)| *c != j).map(|(_, v)| v.clone()).collect())
                .collect();
            let term = &a[0][j] * det(&sub);
            if j % 2 == 0 {
                total += term;
            } else {
                total -= term;
            }
        }
        total
    }
    fn combos(n: usize, r: usize) -> Vec<Vec<usize>> {
        if r == 0 {
            return vec![vec![]];
        }
        if n < r {
            return vec![];
        }
        let mut out = combos(n - 1, r);
        for mut c in combos(n - 1, r - 1) {
            c.push(n - 1);
            out.push(c);
        }
        out
    }
    let mut g = BigInt::zero();
    for rs in combos(m.nrows(), r) {
        for cs in combos(m.ncols, r) {
            let sub: Vec<Vec<BigInt>> = rs
                .iter()
                .map(|&i| cs.iter().map(|&j| m.rows[i][j].to_bigint()).collect())
                .collect();
            g = g.gcd(&det(&sub));
        }
    }
    g
}
