//! The free Lie algebra `L_n` over Z with its Lyndon basis.
//!
//! A Lyndon word `w` stands for the bracketing `P_w` given by its standard
//! factorization. Lie elements are stored by their Lyndon coordinates; the
//! embedding into the tensor algebra expands brackets as commutators. Since
//! `P_w` equals `w` plus lexicographically larger words, the coordinates of a
//! Lie element can be read back from its tensor image by repeatedly taking
//! the smallest word.

mod word;

use std::collections::BTreeMap;
use std::fmt;
use std::sync::{Arc, OnceLock, RwLock};

use num_bigint::BigInt;
use num_traits::{One, Zero};
use rustc_hash::FxHashMap;
use thiserror::Error;

use crate::combinat::{divisors, factorial, gcd, mobius, pow};
use crate::exactlin::Int;

pub use word::{
    generate_lyndon, generate_lyndon_with_content, generate_necklaces, Word, MAX_LETTER, MAX_WORD_LEN,
};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum FreeLieError {
    #[error("tensor is not in the image of the free Lie algebra (leading word {0} is not Lyndon)")]
    NotLie(Word),
    #[error("expression is not homogeneous")]
    Inhomogeneous,
    #[error("generator index {0} out of range")]
    BadGenerator(u8),
    #[error("cached basis for (n={n}, k={k}) is invalid: {reason}")]
    BadCache { n: u8, k: usize, reason: String },
}

/// Letter-count vector of a word or Lie monomial.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Multidegree {
    counts: Vec<usize>,
}

impl Multidegree {
    pub fn new(counts: Vec<usize>) -> Self {
        Multidegree { counts }
    }

    pub fn of_word(w: &Word, n: usize) -> Self {
        Multidegree { counts: w.content(n) }
    }

    pub fn counts(&self) -> &[usize] {
        &self.counts
    }

    pub fn total(&self) -> usize {
        self.counts.iter().sum()
    }
}

impl fmt::Display for Multidegree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.counts.iter().map(|c| c.to_string()).collect();
        write!(f, "({})", parts.join(","))
    }
}

/// Rank of `L_n(k)`: `(1/k) sum_{d|k} mu(d) n^(k/d)`.
pub fn witt_rank(n: usize, k: usize) -> Int {
    assert!(n >= 1 && k >= 1);
    let mut total = BigInt::zero();
    for d in divisors(k) {
        total += pow(n, k / d) * mobius(d);
    }
    Int::from(total / BigInt::from(k))
}

pub fn witt_rank_usize(n: usize, k: usize) -> usize {
    witt_rank(n, k).to_i64().expect("rank fits i64") as usize
}

/// Rank of the multidegree-`alpha` part of the free Lie algebra:
/// `(1/k) sum_{d | gcd(alpha)} mu(d) (k/d)! / prod (alpha_i/d)!`.
pub fn multidegree_rank(alpha: &[usize]) -> Int {
    let k: usize = alpha.iter().sum();
    assert!(k >= 1, "empty multidegree");
    let g = alpha.iter().fold(0, |g, &a| gcd(g, a));
    let mut total = BigInt::zero();
    for d in divisors(g) {
        let mu = mobius(d);
        if mu == 0 {
            continue;
        }
        let mut term = factorial(k / d);
        for &a in alpha {
            term /= factorial(a / d);
        }
        total += term * mu;
    }
    Int::from(total / BigInt::from(k))
}

pub fn multidegree_rank_usize(alpha: &[usize]) -> usize {
    multidegree_rank(alpha).to_i64().expect("rank fits i64") as usize
}

type BasisCache = RwLock<FxHashMap<(u8, usize), Arc<Vec<Word>>>>;

fn basis_cache() -> &'static BasisCache {
    static CACHE: OnceLock<BasisCache> = OnceLock::new();
    CACHE.get_or_init(Default::default)
}

type ContentCache = RwLock<FxHashMap<Vec<usize>, Arc<Vec<Word>>>>;

fn content_cache() -> &'static ContentCache {
    static CACHE: OnceLock<ContentCache> = OnceLock::new();
    CACHE.get_or_init(Default::default)
}

/// Lyndon words of length `k` over `1..=n` in lexicographic order: the Hall
/// basis of `L_n(k)`. Cached per `(n, k)`.
pub fn lyndon_basis(n: usize, k: usize) -> Arc<Vec<Word>> {
    assert!(n >= 1 && n <= MAX_LETTER as usize, "n out of range");
    assert!(k >= 1 && k <= MAX_WORD_LEN, "k out of range");
    let key = (n as u8, k);
    if let Some(b) = basis_cache().read().unwrap().get(&key) {
        return b.clone();
    }
    let words = Arc::new(generate_lyndon(n as u8, k));
    basis_cache().write().unwrap().entry(key).or_insert(words).clone()
}

/// Whether a basis for `(n, k)` is already cached in memory.
pub fn lyndon_basis_cached(n: usize, k: usize) -> bool {
    basis_cache().read().unwrap().contains_key(&(n as u8, k))
}

/// Installs an externally stored basis after validating it (every word
/// Lyndon, over `1..=n`, of length `k`, strictly increasing, correct count).
pub fn seed_lyndon_basis(n: usize, k: usize, words: Vec<Word>) -> Result<(), FreeLieError> {
    let bad = |reason: &str| FreeLieError::BadCache {
        n: n as u8,
        k,
        reason: reason.to_string(),
    };
    if words.len() != witt_rank_usize(n, k) {
        return Err(bad("wrong number of words"));
    }
    if !words.windows(2).all(|p| p[0] < p[1]) {
        return Err(bad("words not strictly increasing"));
    }
    if !words.iter().all(|w| w.len() == k && w.is_lyndon() && w.max_letter() as usize <= n) {
        return Err(bad("non-Lyndon or out-of-range word"));
    }
    basis_cache().write().unwrap().insert((n as u8, k), Arc::new(words));
    Ok(())
}

/// Lyndon words of the given content, lexicographically ordered. Cached.
pub fn lyndon_words_with_content(content: &[usize]) -> Arc<Vec<Word>> {
    let mut key = content.to_vec();
    while key.last() == Some(&0) {
        key.pop();
    }
    if let Some(b) = content_cache().read().unwrap().get(&key) {
        return b.clone();
    }
    let words = Arc::new(generate_lyndon_with_content(&key));
    content_cache().write().unwrap().entry(key).or_insert(words).clone()
}

/// A Hall (Lyndon) basis monomial `P_w` of the free Lie algebra.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct HallMonomial {
    word: Word,
}

impl HallMonomial {
    pub fn new(word: Word) -> Self {
        assert!(word.is_lyndon(), "{word} is not a Lyndon word");
        HallMonomial { word }
    }

    pub fn word(&self) -> Word {
        self.word
    }

    pub fn degree(&self) -> usize {
        self.word.len()
    }

    pub fn multidegree(&self, n: usize) -> Multidegree {
        Multidegree::of_word(&self.word, n)
    }

    /// Bracket tree from the standard factorization.
    pub fn tree(&self) -> LieExpr {
        fn build(w: Word) -> LieExpr {
            if w.len() == 1 {
                LieExpr::Gen(w.first())
            } else {
                let (u, v) = w.standard_factorization();
                LieExpr::bracket(build(u), build(v))
            }
        }
        build(self.word)
    }

    /// Membership in the Hall set: the tree is the standard bracketing of a
    /// Lyndon word.
    pub fn is_hall_tree(tree: &LieExpr) -> bool {
        fn word_of(t: &LieExpr) -> Option<Word> {
            match t {
                LieExpr::Gen(a) => Some(Word::letter(*a)),
                LieExpr::Bracket(a, b) => {
                    let (u, v) = (word_of(a)?, word_of(b)?);
                    let w = u.concat(v);
                    (w.is_lyndon() && w.standard_factorization() == (u, v)).then_some(w)
                }
                LieExpr::Sum(_) => None,
            }
        }
        word_of(tree).is_some()
    }
}

impl fmt::Display for HallMonomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.tree())
    }
}

/// Bracket expression over generators with integer coefficients.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum LieExpr {
    Gen(u8),
    Bracket(Box<LieExpr>, Box<LieExpr>),
    Sum(Vec<(Int, LieExpr)>),
}

impl LieExpr {
    pub fn bracket(a: LieExpr, b: LieExpr) -> LieExpr {
        LieExpr::Bracket(Box::new(a), Box::new(b))
    }

    /// Left-normed bracket `[x_{j1}, x_{j2}, ..., x_{jm}]`.
    pub fn left_normed(letters: &[u8]) -> LieExpr {
        assert!(!letters.is_empty());
        let mut e = LieExpr::Gen(letters[0]);
        for &a in &letters[1..] {
            e = LieExpr::bracket(e, LieExpr::Gen(a));
        }
        e
    }

    /// Direct expansion in the tensor algebra.
    pub fn expand(&self) -> Result<TensorElement, FreeLieError> {
        match self {
            LieExpr::Gen(a) => {
                if !(1..=MAX_LETTER).contains(a) {
                    return Err(FreeLieError::BadGenerator(*a));
                }
                Ok(TensorElement::from_word(Word::letter(*a)))
            }
            LieExpr::Bracket(a, b) => {
                let (x, y) = (a.expand()?, b.expand()?);
                Ok(x.commutator(&y))
            }
            LieExpr::Sum(terms) => {
                let mut acc: Option<TensorElement> = None;
                for (c, e) in terms {
                    let t = e.expand()?;
                    match &mut acc {
                        None => acc = Some(t.scaled(c)),
                        Some(s) => {
                            if s.degree() != t.degree() {
                                return Err(FreeLieError::Inhomogeneous);
                            }
                            s.add_scaled(&t, c);
                        }
                    }
                }
                Ok(acc.unwrap_or_else(|| TensorElement::zero(0)))
            }
        }
    }
}

impl fmt::Display for LieExpr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            LieExpr::Gen(a) => write!(f, "x{a}"),
            LieExpr::Bracket(a, b) => write!(f, "[{a},{b}]"),
            LieExpr::Sum(terms) => {
                let parts: Vec<String> = terms.iter().map(|(c, e)| format!("{c}*{e}")).collect();
                write!(f, "{}", parts.join(" + "))
            }
        }
    }
}

/// Homogeneous element of `T(H)`: integer combination of words of one length.
#[derive(Clone, Debug, Default)]
pub struct TensorElement {
    degree: usize,
    terms: FxHashMap<Word, Int>,
}

impl PartialEq for TensorElement {
    fn eq(&self, other: &Self) -> bool {
        (self.is_zero() && other.is_zero()) || (self.degree == other.degree && self.terms == other.terms)
    }
}

impl Eq for TensorElement {}

impl TensorElement {
    pub fn zero(degree: usize) -> Self {
        TensorElement {
            degree,
            terms: FxHashMap::default(),
        }
    }

    pub fn from_word(w: Word) -> Self {
        let mut t = TensorElement::zero(w.len());
        t.terms.insert(w, Int::one());
        t
    }

    pub fn from_terms<I: IntoIterator<Item = (Word, Int)>>(degree: usize, terms: I) -> Self {
        let mut t = TensorElement::zero(degree);
        for (w, c) in terms {
            t.add_term(w, &c);
        }
        t
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coefficient(&self, w: &Word) -> Int {
        self.terms.get(w).cloned().unwrap_or_default()
    }

    pub fn iter(&self) -> impl Iterator<Item = (&Word, &Int)> {
        self.terms.iter()
    }

    /// Terms sorted by word.
    pub fn sorted_terms(&self) -> Vec<(Word, Int)> {
        let mut v: Vec<(Word, Int)> = self.terms.iter().map(|(w, c)| (*w, c.clone())).collect();
        v.sort_by_key(|e| e.0);
        v
    }

    #[inline]
    pub fn add_term(&mut self, w: Word, c: &Int) {
        if c.is_zero() {
            return;
        }
        debug_assert!(self.terms.is_empty() || w.len() == self.degree);
        if self.terms.is_empty() {
            self.degree = w.len();
        }
        match self.terms.entry(w) {
            std::collections::hash_map::Entry::Occupied(mut e) => {
                *e.get_mut() += c;
                if e.get().is_zero() {
                    e.remove();
                }
            }
            std::collections::hash_map::Entry::Vacant(e) => {
                e.insert(c.clone());
            }
        }
    }

    pub fn add_scaled(&mut self, other: &TensorElement, c: &Int) {
        if c.is_zero() {
            return;
        }
        for (w, x) in &other.terms {
            self.add_term(*w, &(x * c));
        }
    }

    pub fn add(&mut self, other: &TensorElement) {
        for (w, x) in &other.terms {
            self.add_term(*w, x);
        }
    }

    pub fn sub(&mut self, other: &TensorElement) {
        for (w, x) in &other.terms {
            self.add_term(*w, &-x);
        }
    }

    pub fn scaled(&self, c: &Int) -> TensorElement {
        if c.is_zero() {
            return TensorElement::zero(self.degree);
        }
        TensorElement {
            degree: self.degree,
            terms: self.terms.iter().map(|(w, x)| (*w, x * c)).collect(),
        }
    }

    /// Concatenation product.
    pub fn mul(&self, other: &TensorElement) -> TensorElement {
        let mut out = TensorElement::zero(self.degree + other.degree);
        for (u, a) in &self.terms {
            for (v, b) in &other.terms {
                out.add_term(u.concat(*v), &(a * b));
            }
        }
        out
    }

    /// `self * other - other * self`.
    pub fn commutator(&self, other: &TensorElement) -> TensorElement {
        let mut out = self.mul(other);
        for (v, b) in &other.terms {
            for (u, a) in &self.terms {
                out.add_term(v.concat(*u), &-(a * b));
            }
        }
        out
    }
}

impl fmt::Display for TensorElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let parts: Vec<String> = self.sorted_terms().iter().map(|(w, c)| format!("{c}*({w})")).collect();
        write!(f, "{}", parts.join(" + "))
    }
}

/// Memoized tensor expansions of Lyndon bracketings `P_w`.
#[derive(Default)]
pub struct Expander {
    cache: FxHashMap<Word, Arc<Vec<(Word, Int)>>>,
}

impl Expander {
    pub fn new() -> Self {
        Expander::default()
    }

    /// Terms of `iota(P_w)`, sorted by word; the first term is `(w, 1)`.
    pub fn expand(&mut self, w: Word) -> Arc<Vec<(Word, Int)>> {
        if let Some(e) = self.cache.get(&w) {
            return e.clone();
        }
        let terms = if w.len() == 1 {
            vec![(w, Int::one())]
        } else {
            let (u, v) = w.standard_factorization();
            let (eu, ev) = (self.expand(u), self.expand(v));
            let mut acc: FxHashMap<Word, Int> = FxHashMap::default();
            for (a, x) in eu.iter() {
                for (b, y) in ev.iter() {
                    let p = x * y;
                    *acc.entry(a.concat(*b)).or_default() += &p;
                    *acc.entry(b.concat(*a)).or_default() -= &p;
                }
            }
            let mut terms: Vec<(Word, Int)> = acc.into_iter().filter(|e| !e.1.is_zero()).collect();
            terms.sort_by_key(|e| e.0);
            debug_assert!(terms[0] == (w, Int::one()));
            terms
        };
        let terms = Arc::new(terms);
        self.cache.insert(w, terms.clone());
        terms
    }

    pub fn embed(&mut self, a: &LieElement) -> TensorElement {
        let mut t = TensorElement::zero(a.degree);
        for (w, c) in &a.terms {
            for (v, x) in self.expand(*w).iter() {
                t.add_term(*v, &(x * c));
            }
        }
        t
    }

    /// Lyndon coordinates of a tensor lying in the image of `L_n`.
    pub fn project(&mut self, t: &TensorElement) -> Result<LieElement, FreeLieError> {
        let mut work: BTreeMap<Word, Int> = t.terms.iter().map(|(w, c)| (*w, c.clone())).collect();
        let mut out = LieElement::zero(t.degree);
        while let Some((w, c)) = work.pop_first() {
            if !w.is_lyndon() {
                return Err(FreeLieError::NotLie(w));
            }
            for (v, x) in self.expand(w).iter().skip(1) {
                let e = work.entry(*v).or_default();
                *e -= &(x * &c);
                if e.is_zero() {
                    work.remove(v);
                }
            }
            out.terms.insert(w, c);
        }
        Ok(out)
    }
}

/// Element of `L_n(k)` in Lyndon coordinates.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct LieElement {
    degree: usize,
    terms: BTreeMap<Word, Int>,
}

impl LieElement {
    pub fn zero(degree: usize) -> Self {
        LieElement {
            degree,
            terms: BTreeMap::new(),
        }
    }

    pub fn generator(i: u8) -> Self {
        LieElement::monomial(Word::letter(i))
    }

    pub fn monomial(w: Word) -> Self {
        assert!(w.is_lyndon(), "{w} is not a Lyndon word");
        let mut e = LieElement::zero(w.len());
        e.terms.insert(w, Int::one());
        e
    }

    /// Builds from Lyndon coordinates; zero coefficients are dropped.
    pub fn from_terms<I: IntoIterator<Item = (Word, Int)>>(degree: usize, terms: I) -> Self {
        let mut e = LieElement::zero(degree);
        for (w, c) in terms {
            assert!(w.is_lyndon() && w.len() == degree, "bad Lyndon coordinate {w}");
            e.add_term(w, &c);
        }
        e
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> &BTreeMap<Word, Int> {
        &self.terms
    }

    pub fn monomials(&self) -> impl Iterator<Item = (HallMonomial, &Int)> {
        self.terms.iter().map(|(w, c)| (HallMonomial { word: *w }, c))
    }

    pub fn coefficient(&self, w: &Word) -> Int {
        self.terms.get(w).cloned().unwrap_or_default()
    }

    fn add_term(&mut self, w: Word, c: &Int) {
        if c.is_zero() {
            return;
        }
        let e = self.terms.entry(w).or_default();
        *e += c;
        if e.is_zero() {
            self.terms.remove(&w);
        }
    }

    pub fn add(&self, other: &LieElement) -> LieElement {
        assert!(self.is_zero() || other.is_zero() || self.degree == other.degree, "degree mismatch");
        let mut out = if self.is_zero() { other.clone() } else { self.clone() };
        if !self.is_zero() {
            for (w, c) in &other.terms {
                out.add_term(*w, c);
            }
        }
        out
    }

    pub fn scale(&self, c: &Int) -> LieElement {
        let mut out = LieElement::zero(self.degree);
        if !c.is_zero() {
            out.terms = self.terms.iter().map(|(w, x)| (*w, x * c)).collect();
        }
        out
    }

    pub fn neg(&self) -> LieElement {
        self.scale(&Int::from(-1))
    }

    /// Tensor image `iota(a)`.
    pub fn embed_tensor(&self) -> TensorElement {
        Expander::new().embed(self)
    }

    /// Multidegrees occurring in the element.
    pub fn multidegrees(&self, n: usize) -> Vec<Multidegree> {
        let mut v: Vec<Multidegree> = self.terms.keys().map(|w| Multidegree::of_word(w, n)).collect();
        v.sort();
        v.dedup();
        v
    }
}

impl fmt::Display for LieElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let parts: Vec<String> = self
            .monomials()
            .map(|(m, c)| format!("{c}*{m}"))
            .collect();
        write!(f, "{}", parts.join(" + "))
    }
}

/// Hall basis of `L_n(k)` as monomials.
pub fn hall_basis(n: usize, k: usize) -> Vec<HallMonomial> {
    lyndon_basis(n, k).iter().map(|w| HallMonomial { word: *w }).collect()
}

/// Coordinates of a bracket expression in the Hall basis.
pub fn normalize(expr: &LieExpr) -> Result<LieElement, FreeLieError> {
    let t = expr.expand()?;
    Expander::new().project(&t)
}

pub fn bracket(a: &LieElement, b: &LieElement) -> LieElement {
    if a.is_zero() || b.is_zero() {
        return LieElement::zero(a.degree + b.degree);
    }
    let mut ex = Expander::new();
    let t = ex.embed(a).commutator(&ex.embed(b));
    ex.project(&t).expect("brackets of Lie elements are Lie elements")
}

pub fn embed_tensor(a: &LieElement) -> TensorElement {
    a.embed_tensor()
}
