//! Derivations of the free Lie algebra, the tangential subalgebra `p_n`,
//! the contraction `Φ` and the trace maps.
//!
//! A derivation of degree `k` is stored by its values on the generators.
//! Every derivation of `L_n` extends uniquely to an associative derivation of
//! the tensor algebra commuting with the embedding, which is how it is
//! applied and bracketed: [`TensorDerivation`] keeps the tensor images
//! `iota(f(x_i))`.
//!
//! Sign convention: `[f, g](x_i) = f(g(x_i)) - g(f(x_i))`.

use std::collections::BTreeMap;
use std::fmt;
use std::sync::Arc;

use num_traits::{One, Zero};
use thiserror::Error;

use crate::cyclic::{project_cyclic, reduce, CyclicElement, JElement, JModule, QuotientMode};
use crate::exactlin::{solve_combination, IncrementalSpan, Int, IntVector, Rational};
use crate::freelie::{
    bracket, lyndon_basis, lyndon_words_with_content, normalize, Expander, FreeLieError, LieElement, LieExpr,
    TensorElement, Word,
};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum TangentError {
    #[error("the J-trace is defined on degree 4 derivations, got degree {0}")]
    DegreeMismatch(usize),
    #[error("tau_1 generator needs distinct indices, got i = j = {0}")]
    DiagonalGenerator(u8),
    #[error("generator index {index} out of range 1..={n}")]
    BadIndex { index: u8, n: usize },
    #[error(transparent)]
    FreeLie(#[from] FreeLieError),
}

/// Derivation of `L_n` of degree `k`: `x_i ↦ f(x_i) ∈ L_n(k+1)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Derivation {
    n: usize,
    degree: usize,
    values: BTreeMap<u8, LieElement>,
}

impl Derivation {
    pub fn zero(n: usize, degree: usize) -> Self {
        Derivation {
            n,
            degree,
            values: BTreeMap::new(),
        }
    }

    /// `x_i^* ⊗ value`.
    pub fn single(n: usize, i: u8, value: LieElement) -> Result<Self, TangentError> {
        check_index(i, n)?;
        let mut d = Derivation::zero(n, value.degree().saturating_sub(1));
        if !value.is_zero() {
            d.values.insert(i, value);
        }
        Ok(d)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn is_zero(&self) -> bool {
        self.values.is_empty()
    }

    pub fn value(&self, i: u8) -> LieElement {
        self.values.get(&i).cloned().unwrap_or_else(|| LieElement::zero(self.degree + 1))
    }

    pub fn values(&self) -> &BTreeMap<u8, LieElement> {
        &self.values
    }

    pub fn add(&self, other: &Derivation) -> Derivation {
        assert_eq!(self.n, other.n, "rank mismatch");
        if self.is_zero() {
            return other.clone();
        }
        if other.is_zero() {
            return self.clone();
        }
        assert_eq!(self.degree, other.degree, "degree mismatch");
        let mut out = self.clone();
        for (i, v) in &other.values {
            let s = out.value(*i).add(v);
            if s.is_zero() {
                out.values.remove(i);
            } else {
                out.values.insert(*i, s);
            }
        }
        out
    }

    pub fn scale(&self, c: &Int) -> Derivation {
        let mut out = Derivation::zero(self.n, self.degree);
        if !c.is_zero() {
            out.values = self.values.iter().map(|(i, v)| (*i, v.scale(c))).collect();
        }
        out
    }

    pub fn neg(&self) -> Derivation {
        self.scale(&Int::from(-1))
    }

    pub fn to_tensor(&self, ex: &mut Expander) -> TensorDerivation {
        let mut values = vec![TensorElement::zero(self.degree + 1); self.n];
        for (i, v) in &self.values {
            values[*i as usize - 1] = ex.embed(v);
        }
        TensorDerivation {
            n: self.n,
            degree: self.degree,
            values,
        }
    }

    /// Coordinates in `Der(L_n)(k) = H^* ⊗ L_n(k+1)` with respect to the
    /// pairs `(i, Lyndon word)` indexed by [`DerIndex`].
    pub fn hall_coords(&self, index: &DerIndex) -> IntVector {
        let mut pairs = Vec::new();
        for (i, v) in &self.values {
            for (w, c) in v.terms() {
                pairs.push((index.position(*i, w), c.clone()));
            }
        }
        IntVector::from_pairs(pairs)
    }
}

impl fmt::Display for Derivation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let parts: Vec<String> = self.values.iter().map(|(i, v)| format!("x{i}*⊗({v})")).collect();
        write!(f, "{}", parts.join(" + "))
    }
}

fn check_index(i: u8, n: usize) -> Result<(), TangentError> {
    if i == 0 || i as usize > n {
        Err(TangentError::BadIndex { index: i, n })
    } else {
        Ok(())
    }
}

/// Global coordinates on `Der(L_n)(k)`: index `(i-1) * r_n(k+1) + pos(w)`.
#[derive(Clone, Debug)]
pub struct DerIndex {
    n: usize,
    degree: usize,
    words: Arc<Vec<Word>>,
}

impl DerIndex {
    pub fn new(n: usize, degree: usize) -> Self {
        DerIndex {
            n,
            degree,
            words: lyndon_basis(n, degree + 1),
        }
    }

    pub fn dim(&self) -> usize {
        self.n * self.words.len()
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn position(&self, i: u8, w: &Word) -> usize {
        let p = self.words.binary_search(w).expect("not a basis word");
        (i as usize - 1) * self.words.len() + p
    }
}

/// Coordinates on the multidegree-`alpha` block of `Der(L_n)(k)`: the
/// derivations sending each `x_i` into `L_n(k+1, alpha + e_i)`. Indexed by
/// `(i, Lyndon word of content alpha + e_i)`.
#[derive(Clone, Debug)]
pub struct DerBlockIndex {
    alpha: Vec<usize>,
    words: Vec<Arc<Vec<Word>>>,
    offsets: Vec<usize>,
}

impl DerBlockIndex {
    pub fn new(alpha: &[usize]) -> Self {
        let n = alpha.len();
        let mut words = Vec::with_capacity(n);
        let mut offsets = Vec::with_capacity(n + 1);
        let mut total = 0;
        for i in 0..n {
            let mut c = alpha.to_vec();
            c[i] += 1;
            let ws = lyndon_words_with_content(&c);
            offsets.push(total);
            total += ws.len();
            words.push(ws);
        }
        offsets.push(total);
        DerBlockIndex {
            alpha: alpha.to_vec(),
            words,
            offsets,
        }
    }

    pub fn alpha(&self) -> &[usize] {
        &self.alpha
    }

    pub fn dim(&self) -> usize {
        *self.offsets.last().unwrap()
    }

    pub fn position(&self, i: u8, w: &Word) -> Option<usize> {
        let k = i as usize - 1;
        self.words[k].binary_search(w).ok().map(|p| self.offsets[k] + p)
    }

    /// Coefficients of the Lyndon words in the tensor images. The map from
    /// the block to these coordinates is unitriangular, hence injective.
    pub fn leading_coords(&self, d: &TensorDerivation) -> IntVector {
        let mut pairs = Vec::new();
        for (k, t) in d.values.iter().enumerate() {
            if t.is_zero() {
                continue;
            }
            for (w, c) in t.iter() {
                if let Some(p) = self.position(k as u8 + 1, w) {
                    pairs.push((p, c.clone()));
                }
            }
        }
        IntVector::from_pairs(pairs)
    }
}

/// A derivation through the tensor images `iota(f(x_i))`, `i = 1..n`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TensorDerivation {
    n: usize,
    degree: usize,
    values: Vec<TensorElement>,
}

impl TensorDerivation {
    pub fn zero(n: usize, degree: usize) -> Self {
        TensorDerivation {
            n,
            degree,
            values: vec![TensorElement::zero(degree + 1); n],
        }
    }

    pub fn from_values(n: usize, degree: usize, values: Vec<TensorElement>) -> Self {
        assert_eq!(values.len(), n);
        TensorDerivation { n, degree, values }
    }

    /// `tau_1` generator `x_i^* ⊗ [x_j, x_i]` in tensor form.
    pub fn tau1(n: usize, i: u8, j: u8) -> Self {
        assert!(i != j && i >= 1 && j >= 1 && i as usize <= n && j as usize <= n);
        let mut d = TensorDerivation::zero(n, 1);
        let (xi, xj) = (Word::letter(i), Word::letter(j));
        d.values[i as usize - 1] =
            TensorElement::from_terms(2, [(xj.concat(xi), Int::one()), (xi.concat(xj), Int::from(-1))]);
        d
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn value(&self, i: u8) -> &TensorElement {
        &self.values[i as usize - 1]
    }

    pub fn is_zero(&self) -> bool {
        self.values.iter().all(|v| v.is_zero())
    }

    /// Image of a tensor under the associative extension.
    pub fn apply(&self, t: &TensorElement) -> TensorElement {
        let mut out = TensorElement::zero(t.degree() + self.degree);
        for (u, c) in t.iter() {
            let len = u.len();
            for p in 0..len {
                let img = &self.values[u.get(p) as usize - 1];
                if img.is_zero() {
                    continue;
                }
                let (pre, post) = (u.prefix(p), u.suffix(p + 1));
                for (v, x) in img.iter() {
                    out.add_term(pre.concat(*v).concat(post), &(c * x));
                }
            }
        }
        out
    }

    /// `[self, other]`.
    pub fn bracket(&self, other: &TensorDerivation) -> TensorDerivation {
        assert_eq!(self.n, other.n, "rank mismatch");
        let values = (0..self.n)
            .map(|k| {
                let mut v = self.apply(&other.values[k]);
                v.sub(&other.apply(&self.values[k]));
                v
            })
            .collect();
        TensorDerivation {
            n: self.n,
            degree: self.degree + other.degree,
            values,
        }
    }

    /// `[self, x_i^* ⊗ [x_j, x_i]]`, the step used to grow Johnson images.
    pub fn bracket_tau1(&self, i: u8, j: u8) -> TensorDerivation {
        let (xi, xj) = (Word::letter(i), Word::letter(j));
        let ki = i as usize - 1;
        let fi = &self.values[ki];
        let fj = &self.values[j as usize - 1];
        let mut values: Vec<TensorElement> = Vec::with_capacity(self.n);
        let minus = Int::from(-1);
        for k in 0..self.n {
            let mut v = TensorElement::zero(self.degree + 2);
            // - g(f(x_k)): replace every x_i by x_j x_i - x_i x_j.
            for (u, c) in self.values[k].iter() {
                for p in 0..u.len() {
                    if u.get(p) != i {
                        continue;
                    }
                    let (pre, post) = (u.prefix(p), u.suffix(p + 1));
                    v.add_term(pre.concat(xj).concat(xi).concat(post), &-c);
                    v.add_term(pre.concat(xi).concat(xj).concat(post), c);
                }
            }
            if k == ki {
                // f(g(x_i)) = f(x_j) x_i + x_j f(x_i) - f(x_i) x_j - x_i f(x_j)
                for (u, c) in fj.iter() {
                    v.add_term(u.concat(xi), c);
                    v.add_term(xi.concat(*u), &(c * &minus));
                }
                for (u, c) in fi.iter() {
                    v.add_term(xj.concat(*u), c);
                    v.add_term(u.concat(xj), &(c * &minus));
                }
            }
            values.push(v);
        }
        TensorDerivation {
            n: self.n,
            degree: self.degree + 1,
            values,
        }
    }

    /// Contraction `Φ`: keep words of `f(x_i)` starting with `x_i`, drop it.
    pub fn contract(&self) -> TensorElement {
        let mut out = TensorElement::zero(self.degree);
        for (k, t) in self.values.iter().enumerate() {
            let i = k as u8 + 1;
            for (w, c) in t.iter() {
                if w.first() == i {
                    out.add_term(w.suffix(1), c);
                }
            }
        }
        out
    }

    pub fn trace(&self, mode: QuotientMode) -> CyclicElement {
        reduce(&project_cyclic(&self.contract()), mode)
    }

    pub fn to_lie(&self, ex: &mut Expander) -> Result<Derivation, FreeLieError> {
        let mut d = Derivation::zero(self.n, self.degree);
        for (k, t) in self.values.iter().enumerate() {
            let v = ex.project(t)?;
            if !v.is_zero() {
                d.values.insert(k as u8 + 1, v);
            }
        }
        Ok(d)
    }
}

/// Leibniz extension `f(a)`.
pub fn apply(f: &Derivation, a: &LieElement) -> LieElement {
    let mut ex = Expander::new();
    let t = f.to_tensor(&mut ex).apply(&ex.embed(a));
    ex.project(&t).expect("derivations preserve the free Lie algebra")
}

/// `[f, g](x_i) = f(g(x_i)) - g(f(x_i))`.
pub fn der_bracket(f: &Derivation, g: &Derivation) -> Derivation {
    let mut ex = Expander::new();
    let b = f.to_tensor(&mut ex).bracket(&g.to_tensor(&mut ex));
    b.to_lie(&mut ex).expect("brackets of derivations are derivations")
}

/// Contraction `Φ^k`.
pub fn contract(f: &Derivation) -> TensorElement {
    f.to_tensor(&mut Expander::new()).contract()
}

/// `Tr_k = ϖ ∘ Φ^k`, followed by the quotient for `mode`.
pub fn trace(f: &Derivation, mode: QuotientMode) -> CyclicElement {
    f.to_tensor(&mut Expander::new()).trace(mode)
}

/// `Tr_J = f_1 ∘ Φ^4 - 2 f_2 ∘ Φ^4` on derivations of degree 4.
pub fn trace_j(f: &Derivation) -> Result<JElement, TangentError> {
    if f.degree != 4 {
        return Err(TangentError::DegreeMismatch(f.degree));
    }
    let phi = contract(f);
    let j = JModule::get(f.n);
    Ok(j.combine(&j.f1(&phi), &j.f2(&phi), 2))
}

/// `x_i^* ⊗ [u, x_i]` for a Hall monomial `u` of degree `k`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct PBasisIndex {
    pub i: u8,
    pub u: Word,
}

impl fmt::Display for PBasisIndex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "x{}*⊗[P({}),x{}]", self.i, self.u, self.i)
    }
}

/// Basis of `p_n(k)`: all `(i, u)` with `u` a Lyndon word of length `k`,
/// except `u = x_i` when `k = 1`. Ordered by `i`, then `u`.
pub fn p_basis(n: usize, k: usize) -> Vec<PBasisIndex> {
    assert!(n >= 2 && k >= 1);
    let words = lyndon_basis(n, k);
    let mut out = Vec::with_capacity(n * words.len());
    for i in 1..=n as u8 {
        for &u in words.iter() {
            if k == 1 && u.first() == i {
                continue;
            }
            out.push(PBasisIndex { i, u });
        }
    }
    out
}

/// The derivation `x_i^* ⊗ [P_u, x_i]`.
pub fn p_element(n: usize, idx: &PBasisIndex) -> Derivation {
    let v = bracket(&LieElement::monomial(idx.u), &LieElement::generator(idx.i));
    Derivation::single(n, idx.i, v).expect("index in range")
}

/// Tensor form of `x_i^* ⊗ [P_u, x_i]`.
pub fn p_element_tensor(n: usize, idx: &PBasisIndex, ex: &mut Expander) -> TensorDerivation {
    let k = idx.u.len();
    let mut d = TensorDerivation::zero(n, k);
    let xi = Word::letter(idx.i);
    let mut t = TensorElement::zero(k + 1);
    for (w, c) in ex.expand(idx.u).iter() {
        t.add_term(w.concat(xi), c);
        t.add_term(xi.concat(*w), &-c);
    }
    d.values[idx.i as usize - 1] = t;
    d
}

/// `Φ(x_i^* ⊗ [P_u, x_i])` computed directly: the part of `P_u` starting
/// with `x_i`, stripped and followed by `x_i`, minus `P_u`.
pub fn p_contraction(idx: &PBasisIndex, ex: &mut Expander) -> TensorElement {
    let xi = Word::letter(idx.i);
    let mut t = TensorElement::zero(idx.u.len());
    for (w, c) in ex.expand(idx.u).iter() {
        if w.first() == idx.i {
            t.add_term(w.suffix(1).concat(xi), c);
        }
        t.add_term(*w, &-c);
    }
    t
}

/// Rank check that the `p_basis` derivations are linearly independent.
pub fn certify_p_basis(n: usize, k: usize) -> bool {
    let basis = p_basis(n, k);
    let index = DerIndex::new(n, k);
    let mut span = IncrementalSpan::new(index.dim());
    basis.iter().all(|b| span.insert(p_element(n, b).hall_coords(&index)))
}

/// `x_i^* ⊗ [x_{j_1}, ..., x_{j_k}, x_i]`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct TangentialGenerator {
    pub i: u8,
    pub word: Vec<u8>,
}

pub fn tangential(n: usize, g: &TangentialGenerator) -> Result<Derivation, TangentError> {
    check_index(g.i, n)?;
    for &j in &g.word {
        check_index(j, n)?;
    }
    let mut letters = g.word.clone();
    letters.push(g.i);
    let v = normalize(&LieExpr::left_normed(&letters))?;
    let mut d = Derivation::zero(n, g.word.len());
    if !v.is_zero() {
        d.values.insert(g.i, v);
    }
    Ok(d)
}

/// `x_i^* ⊗ [x_j, x_i]`, the image of the McCool generator `K_ij`.
pub fn tau1_generator(n: usize, i: u8, j: u8) -> Result<Derivation, TangentError> {
    check_index(i, n)?;
    check_index(j, n)?;
    if i == j {
        return Err(TangentError::DiagonalGenerator(i));
    }
    tangential(n, &TangentialGenerator { i, word: vec![j] })
}

/// Coordinates of `f` in `p_basis(n, k)`, or `None` if `f` is not tangential.
pub fn p_coordinates(f: &Derivation) -> Option<Vec<(PBasisIndex, Rational)>> {
    let (n, k) = (f.n, f.degree);
    let index = DerIndex::new(n, k);
    let basis = p_basis(n, k);
    let rows: Vec<_> = basis.iter().map(|b| p_element(n, b).hall_coords(&index).to_rational()).collect();
    let coeffs = solve_combination(&rows, &f.hall_coords(&index).to_rational(), index.dim())?;
    Some(
        basis
            .into_iter()
            .zip(coeffs)
            .filter(|(_, c)| !c.is_zero())
            .collect(),
    )
}

/// Right-hand side of the contraction identity for
/// `x_i^* ⊗ [x_i, x_{i_1}, ..., x_{i_k}]` (with `i_1 != i`):
/// `x_{i_1}...x_{i_k} - sum_{l>=2, i_l = i} [x_i, x_{i_1}, ..., x_{i_{l-1}}] ⊗ x_{i_{l+1}}...x_{i_k}`.
pub fn contraction_identity_rhs(i: u8, idx: &[u8]) -> TensorElement {
    let k = idx.len();
    let mut out = TensorElement::from_word(Word::from_letters(idx));
    for l in 2..=k {
        if idx[l - 1] != i {
            continue;
        }
        let mut letters = vec![i];
        letters.extend_from_slice(&idx[..l - 1]);
        let head = LieExpr::left_normed(&letters).expand().expect("valid letters");
        let tail = Word::from_letters(&idx[l..]);
        for (w, c) in head.iter() {
            out.add_term(w.concat(tail), &-c);
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::freelie::LieExpr;

    fn w(s: &str) -> Word {
        Word::parse_digits(s).unwrap()
    }

    fn lie(letters: &[u8]) -> LieElement {
        normalize(&LieExpr::left_normed(letters)).unwrap()
    }

    #[test]
    fn apply_examples() {
        let f = tau1_generator(2, 1, 2).unwrap();
        assert_eq!(apply(&f, &LieElement::generator(1)), lie(&[2, 1]));
        assert!(apply(&f, &LieElement::generator(2)).is_zero());
        let a = lie(&[1, 2]);
        let expect = normalize(&LieExpr::bracket(LieExpr::left_normed(&[2, 1]), LieExpr::Gen(2))).unwrap();
        assert_eq!(apply(&f, &a), expect);
    }

    #[test]
    fn bracket_example() {
        let f = tau1_generator(2, 1, 2).unwrap();
        let g = tau1_generator(2, 2, 1).unwrap();
        let b = der_bracket(&f, &g);
        let expect = Derivation::single(2, 1, lie(&[2, 1, 1]))
            .unwrap()
            .add(&Derivation::single(2, 2, lie(&[2, 1, 2])).unwrap());
        assert_eq!(b, expect);
        assert!(der_bracket(&f, &f).is_zero());
    }

    #[test]
    fn contraction_examples() {
        let f = Derivation::single(3, 1, lie(&[1, 2, 3])).unwrap();
        assert_eq!(contract(&f), TensorElement::from_word(w("23")));
        let f = Derivation::single(3, 1, lie(&[2, 3, 2])).unwrap();
        assert!(contract(&f).is_zero());
        let f = Derivation::single(3, 1, lie(&[1, 2, 1])).unwrap();
        assert_eq!(
            contract(&f),
            TensorElement::from_terms(2, [(w("21"), Int::from(2)), (w("12"), Int::from(-1))])
        );
    }

    #[test]
    fn trace_examples() {
        let f = Derivation::single(2, 1, lie(&[1, 2, 1])).unwrap();
        assert_eq!(trace(&f, QuotientMode::Bar), CyclicElement::from_terms(2, [(w("12"), Int::one())]));
        let f = Derivation::single(2, 1, lie(&[1, 2, 1, 2, 1])).unwrap();
        assert_eq!(
            trace(&f, QuotientMode::Bar),
            CyclicElement::from_terms(4, [(w("1212"), Int::from(2)), (w("1122"), Int::from(-1))])
        );
        assert!(trace(&f, QuotientMode::Tilde).is_zero());
        let tj = trace_j(&f).unwrap();
        let j = JModule::get(2);
        assert_eq!(tj, j.scale(&j.project(1, 2, 1, 2), 5));
        assert!(matches!(trace_j(&tau1_generator(2, 1, 2).unwrap()), Err(TangentError::DegreeMismatch(1))));
    }

    #[test]
    fn p_basis_sizes() {
        assert_eq!(p_basis(3, 1).len(), 6);
        assert_eq!(p_basis(3, 4).len(), 54);
        assert!(certify_p_basis(3, 3));
        let z = tangential(3, &TangentialGenerator { i: 2, word: vec![2] }).unwrap();
        assert!(z.is_zero());
        assert!(matches!(tau1_generator(3, 2, 2), Err(TangentError::DiagonalGenerator(2))));
    }

    #[test]
    fn tensor_shortcuts_agree() {
        let mut ex = Expander::new();
        for idx in p_basis(3, 3) {
            let direct = p_element(3, &idx).to_tensor(&mut ex);
            assert_eq!(direct, p_element_tensor(3, &idx, &mut ex));
            assert_eq!(direct.contract(), p_contraction(&idx, &mut ex));
        }
        let f = TensorDerivation::tau1(3, 1, 2).bracket(&TensorDerivation::tau1(3, 2, 3));
        for (i, j) in [(1u8, 2u8), (3, 1), (2, 3)] {
            assert_eq!(f.bracket_tau1(i, j), f.bracket(&TensorDerivation::tau1(3, i, j)));
        }
    }

    #[test]
    fn p_coordinates_roundtrip() {
        let f = tau1_generator(3, 1, 2).unwrap();
        let g = tau1_generator(3, 2, 3).unwrap();
        let b = der_bracket(&f, &g);
        let coords = p_coordinates(&b).unwrap();
        let mut rebuilt = Derivation::zero(3, 2);
        for (idx, c) in coords {
            assert!(c.is_integer());
            rebuilt = rebuilt.add(&p_element(3, &idx).scale(&Int::from(c.to_integer())));
        }
        assert_eq!(rebuilt, b);
        assert!(p_coordinates(&Derivation::single(3, 1, lie(&[2, 3])).unwrap()).is_none());
    }
}
