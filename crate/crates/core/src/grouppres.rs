//! Finitely presented groups, integral lattice actions and twisted first
//! cohomology through crossed homomorphisms.
//!
//! A crossed homomorphism `f: F -> V` on the free group is determined by its
//! values on the generators, with `f(uv) = f(u) + u f(v)` and
//! `f(u^-1) = -u^-1 f(u)`. It descends to the presented group exactly when
//! every relator is sent to zero, which is a linear condition on the
//! generator values. `Z^1` is the integer kernel of that condition, `B^1` the
//! image of `v ↦ (g ↦ g v - v)`, and `H^1 = Z^1 / B^1`.

use std::fmt;
use std::str::FromStr;

use num_traits::{One, Zero};
use thiserror::Error;

use crate::exactlin::{
    integer_kernel, quotient_structure, solve_combination, Int, IntMatrix, QuotientStructure, Rational, SparseVector,
};
use crate::johnson::johnson_image;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum GroupError {
    #[error("unknown generator `{0}`")]
    UnknownGenerator(String),
    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },
    #[error("presentation needs n >= {min}, got {n}")]
    BadRank { n: usize, min: usize },
    #[error("action does not respect relator {index} ({relator})")]
    InconsistentAction { index: usize, relator: String },
    #[error("generator `{0}` has no known image in the symmetric group")]
    NoPermutation(String),
    #[error("matrix for generator `{0}` is not invertible over Z")]
    NotInvertible(String),
    #[error("inconsistent results: {0}")]
    Inconsistent(String),
}

/// A generator or its formal inverse.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Letter {
    pub generator: usize,
    pub inverse: bool,
}

impl Letter {
    pub fn new(generator: usize) -> Self {
        Letter {
            generator,
            inverse: false,
        }
    }

    pub fn inv(self) -> Self {
        Letter {
            generator: self.generator,
            inverse: !self.inverse,
        }
    }
}

pub type GroupWord = Vec<Letter>;

pub fn invert_word(w: &[Letter]) -> GroupWord {
    w.iter().rev().map(|l| l.inv()).collect()
}

/// `a^-1 b^-1 a b`.
pub fn commutator(a: &[Letter], b: &[Letter]) -> GroupWord {
    let mut w = invert_word(a);
    w.extend(invert_word(b));
    w.extend_from_slice(a);
    w.extend_from_slice(b);
    w
}

/// The relator `lhs * rhs^-1` of the relation `lhs = rhs`.
pub fn equality(lhs: &[Letter], rhs: &[Letter]) -> GroupWord {
    let mut w = lhs.to_vec();
    w.extend(invert_word(rhs));
    w
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Presentation {
    generators: Vec<String>,
    relators: Vec<GroupWord>,
    /// Family label of each relator (empty for imported presentations).
    families: Vec<String>,
}

impl Presentation {
    pub fn new(generators: Vec<String>) -> Self {
        Presentation {
            generators,
            relators: Vec::new(),
            families: Vec::new(),
        }
    }

    pub fn generators(&self) -> &[String] {
        &self.generators
    }

    pub fn relators(&self) -> &[GroupWord] {
        &self.relators
    }

    pub fn families(&self) -> &[String] {
        &self.families
    }

    pub fn family_count(&self, family: &str) -> usize {
        self.families.iter().filter(|f| *f == family).count()
    }

    pub fn add_relator(&mut self, family: &str, r: GroupWord) {
        assert!(r.iter().all(|l| l.generator < self.generators.len()));
        self.relators.push(r);
        self.families.push(family.to_string());
    }

    pub fn generator_index(&self, name: &str) -> Result<usize, GroupError> {
        self.generators
            .iter()
            .position(|g| g == name)
            .ok_or_else(|| GroupError::UnknownGenerator(name.to_string()))
    }

    pub fn letter(&self, name: &str) -> Letter {
        Letter::new(self.generator_index(name).expect("builtin generator"))
    }

    /// Parses word notation such as `g3^-1 g1 g2^2`.
    pub fn parse_word(&self, text: &str) -> Result<GroupWord, GroupError> {
        let mut w = Vec::new();
        for tok in text.split_whitespace() {
            if tok == "1" {
                continue;
            }
            let (name, exp) = match tok.split_once('^') {
                Some((name, e)) => {
                    let e: i64 = e.parse().map_err(|_| GroupError::Parse {
                        line: 0,
                        message: format!("bad exponent in `{tok}`"),
                    })?;
                    (name, e)
                }
                None => (tok, 1),
            };
            let l = Letter::new(self.generator_index(name)?);
            let l = if exp < 0 { l.inv() } else { l };
            w.extend(std::iter::repeat(l).take(exp.unsigned_abs() as usize));
        }
        Ok(w)
    }

    pub fn format_word(&self, w: &[Letter]) -> String {
        if w.is_empty() {
            return "1".to_string();
        }
        w.iter()
            .map(|l| {
                let name = &self.generators[l.generator];
                if l.inverse {
                    format!("{name}^-1")
                } else {
                    name.clone()
                }
            })
            .collect::<Vec<_>>()
            .join(" ")
    }

    /// Text export: the generator line followed by one relator per line.
    pub fn to_text(&self) -> String {
        let mut s = format!("generators: {}\n", self.generators.join(" "));
        for r in &self.relators {
            s.push_str(&self.format_word(r));
            s.push('\n');
        }
        s
    }
}

impl FromStr for Presentation {
    type Err = GroupError;

    /// Reads the text format: blank lines and `#` comments are skipped; the
    /// first line lists generators (optionally prefixed by `generators:`).
    fn from_str(s: &str) -> Result<Self, GroupError> {
        let mut lines = s
            .lines()
            .enumerate()
            .map(|(i, l)| (i + 1, l.split('#').next().unwrap().trim()))
            .filter(|(_, l)| !l.is_empty());
        let (_, head) = lines.next().ok_or(GroupError::Parse {
            line: 1,
            message: "missing generator line".to_string(),
        })?;
        let head = head.strip_prefix("generators:").unwrap_or(head);
        let generators: Vec<String> = head.split_whitespace().map(str::to_string).collect();
        for (i, g) in generators.iter().enumerate() {
            if g.contains('^') || g == "1" || generators[..i].contains(g) {
                return Err(GroupError::Parse {
                    line: 1,
                    message: format!("bad generator name `{g}`"),
                });
            }
        }
        let mut p = Presentation::new(generators);
        for (line, text) in lines {
            let w = p.parse_word(text).map_err(|e| match e {
                GroupError::Parse { message, .. } => GroupError::Parse { line, message },
                other => GroupError::Parse {
                    line,
                    message: other.to_string(),
                },
            })?;
            p.add_relator("", w);
        }
        Ok(p)
    }
}

impl fmt::Display for Presentation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.to_text())
    }
}

/// Which builtin presentation.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum GroupKind {
    McCool,
    BraidPermutation,
    Braid,
    Symmetric,
}

impl FromStr for GroupKind {
    type Err = GroupError;

    fn from_str(s: &str) -> Result<Self, GroupError> {
        match s {
            "mccool" => Ok(GroupKind::McCool),
            "bp" => Ok(GroupKind::BraidPermutation),
            "braid" => Ok(GroupKind::Braid),
            "sym" | "symmetric" => Ok(GroupKind::Symmetric),
            _ => Err(GroupError::Parse {
                line: 0,
                message: format!("unknown group `{s}`"),
            }),
        }
    }
}

pub fn builtin(kind: GroupKind, n: usize) -> Result<Presentation, GroupError> {
    if n < 2 {
        return Err(GroupError::BadRank { n, min: 2 });
    }
    Ok(match kind {
        GroupKind::McCool => mccool(n),
        GroupKind::BraidPermutation => braid_permutation(n),
        GroupKind::Braid => braid(n),
        GroupKind::Symmetric => symmetric(n),
    })
}

fn k_name(i: usize, j: usize) -> String {
    format!("K{i}_{j}")
}

/// Pure symmetric automorphism group with generators `K_ij` (`i != j`).
pub fn mccool(n: usize) -> Presentation {
    let mut gens = Vec::new();
    for i in 1..=n {
        for j in 1..=n {
            if i != j {
                gens.push(k_name(i, j));
            }
        }
    }
    let mut p = Presentation::new(gens);
    let k = |p: &Presentation, i: usize, j: usize| vec![p.letter(&k_name(i, j))];
    // [K_ij, K_kj], i < k.
    for j in 1..=n {
        for i in 1..=n {
            for kk in i + 1..=n {
                if i != j && kk != j {
                    let r = commutator(&k(&p, i, j), &k(&p, kk, j));
                    p.add_relator("P1", r);
                }
            }
        }
    }
    // [K_ij, K_kl], (i, j) < (k, l), all distinct.
    for i in 1..=n {
        for j in 1..=n {
            for kk in 1..=n {
                for l in 1..=n {
                    let idx = [i, j, kk, l];
                    let distinct = (0..4).all(|a| (0..a).all(|b| idx[a] != idx[b]));
                    if distinct && (i, j) < (kk, l) {
                        let r = commutator(&k(&p, i, j), &k(&p, kk, l));
                        p.add_relator("P2", r);
                    }
                }
            }
        }
    }
    // [K_ik, K_ij K_kj], (i, k, j) distinct.
    for i in 1..=n {
        for kk in 1..=n {
            for j in 1..=n {
                if i != kk && i != j && kk != j {
                    let mut prod = k(&p, i, j);
                    prod.extend(k(&p, kk, j));
                    let r = commutator(&k(&p, i, kk), &prod);
                    p.add_relator("P3", r);
                }
            }
        }
    }
    p
}

fn sigma(i: usize) -> String {
    format!("sigma{i}")
}

fn transposition(i: usize) -> String {
    format!("s{i}")
}

fn add_braid_relators(p: &mut Presentation, n: usize, name: fn(usize) -> String, f1: &str, f2: &str) {
    for i in 1..n - 1 {
        let (a, b) = (p.letter(&name(i)), p.letter(&name(i + 1)));
        p.add_relator(f1, equality(&[a, b, a], &[b, a, b]));
    }
    for i in 1..n {
        for j in i + 2..n {
            let r = commutator(&[p.letter(&name(i))], &[p.letter(&name(j))]);
            p.add_relator(f2, r);
        }
    }
}

/// Braid-permutation group with generators `sigma_i`, `s_i`.
pub fn braid_permutation(n: usize) -> Presentation {
    let mut gens: Vec<String> = (1..n).map(sigma).collect();
    gens.extend((1..n).map(transposition));
    let mut p = Presentation::new(gens);
    add_braid_relators(&mut p, n, sigma, "B1", "B2");
    for i in 1..n {
        let s = p.letter(&transposition(i));
        p.add_relator("SY1", vec![s, s]);
    }
    add_braid_relators(&mut p, n, transposition, "SY2", "SY3");
    for i in 1..n {
        for j in 1..n {
            if i.abs_diff(j) >= 2 {
                let (a, s) = (p.letter(&sigma(i)), p.letter(&transposition(j)));
                p.add_relator("BP1", equality(&[a, s], &[s, a]));
            }
        }
    }
    for i in 1..n - 1 {
        let (a, b) = (p.letter(&sigma(i)), p.letter(&sigma(i + 1)));
        let (s, t) = (p.letter(&transposition(i)), p.letter(&transposition(i + 1)));
        p.add_relator("BP2", equality(&[s, t, a], &[b, s, t]));
    }
    for i in 1..n - 1 {
        let (a, b) = (p.letter(&sigma(i)), p.letter(&sigma(i + 1)));
        let (s, t) = (p.letter(&transposition(i)), p.letter(&transposition(i + 1)));
        p.add_relator("BP3", equality(&[a, b, s], &[t, a, b]));
    }
    p
}

/// Artin braid group.
pub fn braid(n: usize) -> Presentation {
    let mut p = Presentation::new((1..n).map(sigma).collect());
    for i in 1..n - 1 {
        let (a, b) = (p.letter(&sigma(i)), p.letter(&sigma(i + 1)));
        p.add_relator("B1", vec![b, a, b, a.inv(), b.inv(), a.inv()]);
    }
    for i in 1..n {
        for j in i + 2..n {
            let r = commutator(&[p.letter(&sigma(i))], &[p.letter(&sigma(j))]);
            p.add_relator("B2", r);
        }
    }
    p
}

/// Coxeter presentation of the symmetric group.
pub fn symmetric(n: usize) -> Presentation {
    let mut p = Presentation::new((1..n).map(transposition).collect());
    for i in 1..n {
        let s = p.letter(&transposition(i));
        p.add_relator("SY1", vec![s, s]);
    }
    add_braid_relators(&mut p, n, transposition, "SY2", "SY3");
    p
}

/// Image of a generator in the symmetric group, read from its name:
/// `sigma{i}` and `s{i}` map to `(i, i+1)`, `K{i}_{j}` to the identity.
fn permutation_of(name: &str, n: usize) -> Result<Option<usize>, GroupError> {
    let parse = |s: &str| s.parse::<usize>().ok().filter(|&i| i >= 1 && i < n);
    if let Some(i) = name.strip_prefix("sigma").and_then(parse) {
        return Ok(Some(i));
    }
    if let Some(i) = name.strip_prefix('s').and_then(parse) {
        return Ok(Some(i));
    }
    if name.starts_with('K') {
        return Ok(None);
    }
    Err(GroupError::NoPermutation(name.to_string()))
}

/// A representation of the generators by invertible integer matrices.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LatticeAction {
    rank: usize,
    matrices: Vec<IntMatrix>,
    inverses: Vec<IntMatrix>,
}

/// Which lattice module to use.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Representation {
    /// `V = {sum x_i = 0}` in the basis `e_i - e_n`.
    Standard,
    Trivial,
    /// `H = Z^n` permuted.
    Permutation,
}

impl FromStr for Representation {
    type Err = GroupError;

    fn from_str(s: &str) -> Result<Self, GroupError> {
        match s {
            "standard" => Ok(Representation::Standard),
            "trivial" => Ok(Representation::Trivial),
            "perm" | "permutation" => Ok(Representation::Permutation),
            _ => Err(GroupError::Parse {
                line: 0,
                message: format!("unknown representation `{s}`"),
            }),
        }
    }
}

impl LatticeAction {
    pub fn new(matrices: Vec<IntMatrix>, names: &[String]) -> Result<Self, GroupError> {
        let rank = matrices.first().map_or(0, |m| m.ncols());
        let mut inverses = Vec::with_capacity(matrices.len());
        for (m, name) in matrices.iter().zip(names) {
            assert_eq!((m.nrows(), m.ncols()), (rank, rank), "square matrices of one size");
            inverses.push(integer_inverse(m).ok_or_else(|| GroupError::NotInvertible(name.clone()))?);
        }
        Ok(LatticeAction {
            rank,
            matrices,
            inverses,
        })
    }

    pub fn trivial(p: &Presentation, rank: usize) -> Self {
        let id = IntMatrix::identity(rank);
        LatticeAction {
            rank,
            matrices: vec![id.clone(); p.generators.len()],
            inverses: vec![id; p.generators.len()],
        }
    }

    /// Action through the symmetric group on `V` or `H` for `n` letters.
    pub fn symmetric(p: &Presentation, n: usize, rep: Representation) -> Result<Self, GroupError> {
        if rep == Representation::Trivial {
            return Ok(LatticeAction::trivial(p, 1));
        }
        let mut matrices = Vec::new();
        for g in &p.generators {
            let m = match permutation_of(g, n)? {
                None => IntMatrix::identity(if rep == Representation::Standard { n - 1 } else { n }),
                Some(i) => match rep {
                    Representation::Standard => standard_transposition(n, i),
                    _ => permutation_transposition(n, i),
                },
            };
            matrices.push(m);
        }
        let a = LatticeAction::new(matrices, &p.generators)?;
        a.check(p)?;
        Ok(a)
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn matrix(&self, g: usize) -> &IntMatrix {
        &self.matrices[g]
    }

    fn letter_matrix(&self, l: Letter) -> &IntMatrix {
        if l.inverse {
            &self.inverses[l.generator]
        } else {
            &self.matrices[l.generator]
        }
    }

    pub fn word_matrix(&self, w: &[Letter]) -> IntMatrix {
        w.iter()
            .fold(IntMatrix::identity(self.rank), |acc, l| acc.mul(self.letter_matrix(*l)))
    }

    /// Every relator must act as the identity.
    pub fn check(&self, p: &Presentation) -> Result<(), GroupError> {
        let id = IntMatrix::identity(self.rank);
        for (index, r) in p.relators.iter().enumerate() {
            if self.word_matrix(r) != id {
                return Err(GroupError::InconsistentAction {
                    index,
                    relator: p.format_word(r),
                });
            }
        }
        Ok(())
    }
}

/// Transposition `(i, i+1)` on `V` in the basis `b_j = e_j - e_n`.
fn standard_transposition(n: usize, i: usize) -> IntMatrix {
    let swap = |t: usize| if t == i { i + 1 } else if t == i + 1 { i } else { t };
    let mut rows = vec![vec![Int::zero(); n - 1]; n - 1];
    for j in 1..n {
        // Image of b_j in H coordinates; its first n-1 coordinates are the
        // coordinates in the b basis.
        let mut x = vec![0i64; n + 1];
        x[swap(j)] += 1;
        x[swap(n)] -= 1;
        for (r, row) in rows.iter_mut().enumerate() {
            row[j - 1] = Int::from(x[r + 1]);
        }
    }
    IntMatrix::new(n - 1, rows)
}

fn permutation_transposition(n: usize, i: usize) -> IntMatrix {
    let mut rows = IntMatrix::identity(n).rows().to_vec();
    rows.swap(i - 1, i);
    IntMatrix::new(n, rows)
}

/// Inverse over Z, if the determinant is a unit.
fn integer_inverse(m: &IntMatrix) -> Option<IntMatrix> {
    let n = m.nrows();
    let mut a: Vec<Vec<Rational>> = (0..n)
        .map(|r| {
            let mut row: Vec<Rational> = m.rows()[r].iter().map(|x| Rational::from_integer(x.to_bigint())).collect();
            row.extend((0..n).map(|c| if c == r { Rational::one() } else { Rational::zero() }));
            row
        })
        .collect();
    for c in 0..n {
        let p = (c..n).find(|&r| !a[r][c].is_zero())?;
        a.swap(c, p);
        let inv = a[c][c].recip();
        a[c].iter_mut().for_each(|x| *x = &*x * &inv);
        for r in 0..n {
            if r != c && !a[r][c].is_zero() {
                let f = a[r][c].clone();
                let pivot = a[c].clone();
                a[r].iter_mut().zip(&pivot).for_each(|(x, y)| *x = &*x - &(&f * y));
            }
        }
    }
    let rows: Option<Vec<Vec<Int>>> = a
        .iter()
        .map(|row| {
            row[n..]
                .iter()
                .map(|x| x.is_integer().then(|| Int::from(x.to_integer())))
                .collect()
        })
        .collect();
    Some(IntMatrix::new(n, rows?))
}

/// Values of a crossed homomorphism on the generators.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CrossedHom {
    pub values: Vec<Vec<Int>>,
}

impl CrossedHom {
    pub fn zero(generators: usize, rank: usize) -> Self {
        CrossedHom {
            values: vec![vec![Int::zero(); rank]; generators],
        }
    }

    /// `g ↦ g v - v`.
    pub fn principal(action: &LatticeAction, v: &[Int]) -> Self {
        let values = action
            .matrices
            .iter()
            .map(|m| {
                let gv = mat_vec(m, v);
                gv.iter().zip(v).map(|(a, b)| a - b).collect()
            })
            .collect();
        CrossedHom { values }
    }

    fn from_flat(flat: &[Int], rank: usize) -> Self {
        CrossedHom {
            values: flat.chunks(rank).map(|c| c.to_vec()).collect(),
        }
    }

    fn flatten(&self) -> Vec<Int> {
        self.values.iter().flatten().cloned().collect()
    }
}

fn mat_vec(m: &IntMatrix, v: &[Int]) -> Vec<Int> {
    m.rows().iter().map(|row| row.iter().zip(v).map(|(a, b)| a * b).sum()).collect()
}

/// `f(word)` from `f(uv) = f(u) + u f(v)` and `f(u^-1) = -u^-1 f(u)`.
pub fn evaluate_cocycle(f: &CrossedHom, action: &LatticeAction, word: &[Letter]) -> Result<Vec<Int>, GroupError> {
    let mut acc = vec![Int::zero(); action.rank];
    let mut prefix = IntMatrix::identity(action.rank);
    for l in word {
        let fg = f
            .values
            .get(l.generator)
            .ok_or_else(|| GroupError::UnknownGenerator(format!("#{}", l.generator)))?;
        let value = if l.inverse {
            mat_vec(&action.inverses[l.generator], fg).into_iter().map(|x| -x).collect()
        } else {
            fg.clone()
        };
        for (a, b) in acc.iter_mut().zip(mat_vec(&prefix, &value)) {
            *a += b;
        }
        prefix = prefix.mul(action.letter_matrix(*l));
    }
    Ok(acc)
}

/// Linear map from generator values to relator values: the row block of
/// relator `r` is `sum_g M_{r,g}` with `f(r) = sum_g M_{r,g} f(g)`.
pub fn relator_matrix(p: &Presentation, action: &LatticeAction) -> IntMatrix {
    let d = action.rank;
    let ncols = p.generators.len() * d;
    let mut rows = Vec::new();
    for r in &p.relators {
        let mut block = vec![vec![Int::zero(); ncols]; d];
        let mut prefix = IntMatrix::identity(d);
        for l in r {
            let contrib = if l.inverse {
                prefix.mul(&action.inverses[l.generator])
            } else {
                prefix.clone()
            };
            let sign = if l.inverse { Int::from(-1) } else { Int::one() };
            for (a, row) in block.iter_mut().enumerate() {
                for b in 0..d {
                    row[l.generator * d + b] += &sign * contrib.get(a, b);
                }
            }
            prefix = prefix.mul(action.letter_matrix(*l));
        }
        rows.extend(block);
    }
    IntMatrix::new(ncols, rows)
}

/// Lattice of crossed homomorphisms, one basis cocycle per row.
pub fn cocycle_lattice(p: &Presentation, action: &LatticeAction) -> IntMatrix {
    let a = relator_matrix(p, action);
    if a.nrows() == 0 {
        return IntMatrix::identity(a.ncols());
    }
    integer_kernel(&a)
}

/// Cohomology computation with its intermediate ranks.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct H1Report {
    pub cocycle_rank: usize,
    pub coboundary_rank: usize,
    pub structure: QuotientStructure,
}

pub fn h1_report(p: &Presentation, action: &LatticeAction) -> Result<H1Report, GroupError> {
    action.check(p)?;
    let z1 = cocycle_lattice(p, action);
    let r = z1.nrows();
    let basis: Vec<SparseVector> = z1.rows().iter().map(|row| int_row(row)).collect();
    let d = action.rank;
    let mut coords = Vec::with_capacity(d);
    for t in 0..d {
        let mut v = vec![Int::zero(); d];
        v[t] = Int::one();
        let b = CrossedHom::principal(action, &v).flatten();
        let c = solve_combination(&basis, &int_row(&b), z1.ncols())
            .ok_or_else(|| GroupError::Inconsistent("principal cocycle outside Z^1".to_string()))?;
        let c: Option<Vec<Int>> = c
            .into_iter()
            .map(|x| x.is_integer().then(|| Int::from(x.to_integer())))
            .collect();
        coords.push(c.ok_or_else(|| GroupError::Inconsistent("Z^1 basis is not saturated".to_string()))?);
    }
    let b1 = IntMatrix::new(r, coords);
    let coboundary_rank = crate::exactlin::rank(&b1.to_sparse());
    Ok(H1Report {
        cocycle_rank: r,
        coboundary_rank,
        structure: quotient_structure(r, &b1),
    })
}

fn int_row(row: &[Int]) -> SparseVector {
    SparseVector::from_pairs(
        row.iter()
            .enumerate()
            .filter(|(_, x)| !x.is_zero())
            .map(|(i, x)| (i, Rational::from_integer(x.to_bigint()))),
    )
}

/// `H^1(G; M) = Z^1 / B^1`.
pub fn h1_twisted(p: &Presentation, action: &LatticeAction) -> Result<QuotientStructure, GroupError> {
    Ok(h1_report(p, action)?.structure)
}

/// Cocycle reconstruction helper for tests and reports.
pub fn cocycle_basis(p: &Presentation, action: &LatticeAction) -> Vec<CrossedHom> {
    let z1 = cocycle_lattice(p, action);
    z1.rows().iter().map(|r| CrossedHom::from_flat(r, action.rank)).collect()
}

/// `H_1(G; Z)` from the exponent-sum matrix of the relators.
pub fn abelianization(p: &Presentation) -> QuotientStructure {
    let g = p.generators.len();
    let rows: Vec<Vec<Int>> = p
        .relators
        .iter()
        .map(|r| {
            let mut row = vec![0i64; g];
            for l in r {
                row[l.generator] += if l.inverse { -1 } else { 1 };
            }
            row.into_iter().map(Int::from).collect()
        })
        .collect();
    quotient_structure(g, &IntMatrix::new(g, rows))
}

/// The three expressions for the rank of `R / [F, R]` of the McCool group.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct H2Report {
    pub n: usize,
    pub from_image: usize,
    pub formula: usize,
    pub relator_count: usize,
}

impl H2Report {
    pub fn consistent(&self) -> bool {
        self.from_image == self.formula && self.formula == self.relator_count
    }
}

pub fn h2_report(n: usize) -> Result<H2Report, GroupError> {
    if n < 3 {
        return Err(GroupError::BadRank { n, min: 3 });
    }
    let m = n * (n - 1);
    let image = johnson_image(n, 2).dim();
    Ok(H2Report {
        n,
        from_image: m * (m - 1) / 2 - image,
        formula: n * n * (n - 1) * (n - 2) / 2,
        relator_count: mccool(n).relators.len(),
    })
}

/// `rank H^2(PΣ_n; Z)`, checked against the closed form and the relator count.
pub fn h2_psigma_rank(n: usize) -> Result<usize, GroupError> {
    let r = h2_report(n)?;
    if !r.consistent() {
        return Err(GroupError::Inconsistent(format!(
            "difference {} vs formula {} vs relators {}",
            r.from_image, r.formula, r.relator_count
        )));
    }
    Ok(r.from_image)
}
