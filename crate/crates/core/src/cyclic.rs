//! Cyclic words: the necklace quotient `C_n(k)` of `H^{⊗k}`, its quotients
//! by power necklaces (bar) and by `N(k)` (tilde), and the degree-4 module `J`.

use std::collections::BTreeMap;
use std::fmt;
use std::sync::{Arc, OnceLock, RwLock};

use num_bigint::BigInt;
use num_traits::Zero;
use rustc_hash::FxHashMap;

use crate::combinat::{divisors, euler_phi, gcd, multinomial, orbit_size, partitions, pow};
use crate::exactlin::{quotient_structure, IncrementalSpan, Int, IntMatrix, IntVector, QuotientStructure, Rational, SparseVector};
use crate::freelie::{generate_necklaces, lyndon_words_with_content, TensorElement, Word};

/// Which quotient of `C_n(k)` to work in.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum QuotientMode {
    Full,
    /// Kills the power necklaces `x_i^k`.
    Bar,
    /// Kills `N(k)`: necklaces in which every occurring letter repeats.
    Tilde,
}

impl QuotientMode {
    /// Whether the basis necklace survives in this quotient.
    pub fn keeps(self, necklace: &Word) -> bool {
        match self {
            QuotientMode::Full => true,
            QuotientMode::Bar => !is_power(necklace),
            QuotientMode::Tilde => has_simple_letter(necklace),
        }
    }
}

impl std::str::FromStr for QuotientMode {
    type Err = String;
    fn from_str(s: &str) -> Result<Self, String> {
        match s {
            "full" => Ok(QuotientMode::Full),
            "bar" => Ok(QuotientMode::Bar),
            "tilde" => Ok(QuotientMode::Tilde),
            other => Err(format!("unknown quotient mode {other:?} (expected full, bar or tilde)")),
        }
    }
}

impl fmt::Display for QuotientMode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            QuotientMode::Full => "full",
            QuotientMode::Bar => "bar",
            QuotientMode::Tilde => "tilde",
        })
    }
}

fn is_power(w: &Word) -> bool {
    w.len() >= 1 && w.letters().all(|a| a == w.first())
}

fn has_simple_letter(w: &Word) -> bool {
    let mut counts = [0u8; 16];
    for a in w.letters() {
        counts[a as usize] += 1;
    }
    counts.iter().any(|&c| c == 1)
}

/// Canonical representative of a cyclic word: its least rotation.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Necklace(Word);

impl Necklace {
    pub fn word(&self) -> Word {
        self.0
    }
}

impl fmt::Display for Necklace {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({})", self.0)
    }
}

pub fn necklace_canonicalize(w: Word) -> Necklace {
    assert!(!w.is_empty(), "empty word has no necklace");
    Necklace(w.min_rotation())
}

/// Integer combination of necklaces of one length.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct CyclicElement {
    degree: usize,
    terms: BTreeMap<Word, Int>,
}

impl CyclicElement {
    pub fn zero(degree: usize) -> Self {
        CyclicElement {
            degree,
            terms: BTreeMap::new(),
        }
    }

    pub fn from_terms<I: IntoIterator<Item = (Word, Int)>>(degree: usize, terms: I) -> Self {
        let mut e = CyclicElement::zero(degree);
        for (w, c) in terms {
            e.add_word(w, &c);
        }
        e
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Terms keyed by canonical necklace words.
    pub fn terms(&self) -> &BTreeMap<Word, Int> {
        &self.terms
    }

    pub fn coefficient(&self, w: Word) -> Int {
        self.terms.get(&w.min_rotation()).cloned().unwrap_or_default()
    }

    /// Adds `c` times the necklace of an arbitrary word.
    pub fn add_word(&mut self, w: Word, c: &Int) {
        if c.is_zero() {
            return;
        }
        let key = w.min_rotation();
        let e = self.terms.entry(key).or_default();
        *e += c;
        if e.is_zero() {
            self.terms.remove(&key);
        }
    }

    pub fn add(&mut self, other: &CyclicElement) {
        for (w, c) in &other.terms {
            self.add_word(*w, c);
        }
    }
}

impl fmt::Display for CyclicElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let parts: Vec<String> = self.terms.iter().map(|(w, c)| format!("{c}*({w})")).collect();
        write!(f, "{}", parts.join(" + "))
    }
}

/// The natural projection `H^{⊗k} -> C_n(k)`.
pub fn project_cyclic(t: &TensorElement) -> CyclicElement {
    let mut e = CyclicElement::zero(t.degree());
    for (w, c) in t.iter() {
        e.add_word(*w, c);
    }
    e
}

/// Drops the coordinates of necklaces killed in the quotient.
pub fn reduce(e: &CyclicElement, mode: QuotientMode) -> CyclicElement {
    CyclicElement {
        degree: e.degree,
        terms: e
            .terms
            .iter()
            .filter(|(w, _)| mode.keeps(w))
            .map(|(w, c)| (*w, c.clone()))
            .collect(),
    }
}

/// Rank of `C_n(k)` or of its bar/tilde quotient.
pub fn cyclic_rank(n: usize, k: usize, mode: QuotientMode) -> Int {
    assert!(k >= 1);
    match mode {
        QuotientMode::Full => {
            let mut total = BigInt::zero();
            for d in divisors(k) {
                total += pow(n, k / d) * euler_phi(d);
            }
            Int::from(total / BigInt::from(k))
        }
        QuotientMode::Bar => &cyclic_rank(n, k, QuotientMode::Full) - &Int::from(n),
        QuotientMode::Tilde => {
            // Contents with a part equal to one are aperiodic, so each gives
            // multinomial / k necklaces.
            let mut total = BigInt::zero();
            for p in partitions(k, n) {
                if p.contains(&1) {
                    total += orbit_size(&p, n) * multinomial(&p);
                }
            }
            Int::from(total / BigInt::from(k))
        }
    }
}

/// Surviving basis necklaces of length `k` over `1..=n`, sorted.
pub fn necklace_basis(n: usize, k: usize, mode: QuotientMode) -> Vec<Word> {
    generate_necklaces(n as u8, k).into_iter().filter(|w| mode.keeps(w)).collect()
}

/// Least-rotation words of all necklaces with the given letter content, sorted.
pub fn necklaces_with_content(content: &[usize]) -> Vec<Word> {
    let g = content.iter().fold(0, |g, &c| gcd(g, c));
    if g == 0 {
        return Vec::new();
    }
    let mut out = Vec::new();
    for d in divisors(g) {
        let root: Vec<usize> = content.iter().map(|c| c / d).collect();
        for w in lyndon_words_with_content(&root).iter() {
            out.push((0..d).fold(Word::EMPTY, |acc, _| acc.concat(*w)));
        }
    }
    out.sort();
    out
}

/// The module `J`: `Λ²H ⊗ Λ²H` modulo symmetry and the exchange relation
/// `(v∧w)(x∧y) = (x∧w)(v∧y) + (v∧x)(w∧y)`, for `H` of rank `n`.
pub struct JModule {
    n: usize,
    pairs: Vec<(u8, u8)>,
    pair_index: FxHashMap<(u8, u8), usize>,
    relations: IncrementalSpan,
    relation_rows: Vec<IntVector>,
}

/// Element of `J` as its canonical remainder modulo the relation space.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct JElement {
    n: usize,
    coords: SparseVector,
}

impl JElement {
    pub fn is_zero(&self) -> bool {
        self.coords.is_zero()
    }

    pub fn coords(&self) -> &SparseVector {
        &self.coords
    }
}

impl JModule {
    pub fn new(n: usize) -> Self {
        assert!(n >= 2, "J needs n >= 2");
        let mut pairs = Vec::new();
        for a in 1..=n as u8 {
            for b in a + 1..=n as u8 {
                pairs.push((a, b));
            }
        }
        let pair_index = pairs.iter().enumerate().map(|(i, p)| (*p, i)).collect();
        let m = pairs.len();
        let mut j = JModule {
            n,
            pairs,
            pair_index,
            relations: IncrementalSpan::new(m * m),
            relation_rows: Vec::new(),
        };
        let letters: Vec<u8> = (1..=n as u8).collect();
        for &v in &letters {
            for &w in &letters {
                for &x in &letters {
                    for &y in &letters {
                        let mut r1 = j.raw(v, w, x, y);
                        r1.sub(&j.raw(x, y, v, w));
                        let mut r2 = j.raw(v, w, x, y);
                        r2.sub(&j.raw(x, w, v, y));
                        r2.sub(&j.raw(v, x, w, y));
                        for r in [r1, r2] {
                            let row = r.into_vector();
                            if !row.is_zero() {
                                j.relations.insert(row.clone());
                                j.relation_rows.push(row);
                            }
                        }
                    }
                }
            }
        }
        j
    }

    /// Shared instance per `n`.
    pub fn get(n: usize) -> Arc<JModule> {
        type Cache = RwLock<FxHashMap<usize, Arc<JModule>>>;
        static CACHE: OnceLock<Cache> = OnceLock::new();
        let cache = CACHE.get_or_init(Default::default);
        if let Some(j) = cache.read().unwrap().get(&n) {
            return j.clone();
        }
        let j = Arc::new(JModule::new(n));
        cache.write().unwrap().entry(n).or_insert(j).clone()
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// Size of the spanning set `{(a∧b)(c∧d) : a<b, c<d}`.
    pub fn spanning_size(&self) -> usize {
        self.pairs.len() * self.pairs.len()
    }

    pub fn relation_rank(&self) -> usize {
        self.relations.dim()
    }

    pub fn rank(&self) -> usize {
        self.spanning_size() - self.relation_rank()
    }

    /// Structure of `J` over Z (free rank and torsion of the quotient lattice).
    pub fn structure(&self) -> QuotientStructure {
        let m2 = self.spanning_size();
        let rows: Vec<Vec<Int>> = self.relation_rows.iter().map(|r| r.to_dense(m2)).collect();
        quotient_structure(m2, &IntMatrix::new(m2, rows))
    }

    fn wedge(&self, a: u8, b: u8) -> Option<(usize, i64)> {
        match a.cmp(&b) {
            std::cmp::Ordering::Equal => None,
            std::cmp::Ordering::Less => Some((self.pair_index[&(a, b)], 1)),
            std::cmp::Ordering::Greater => Some((self.pair_index[&(b, a)], -1)),
        }
    }

    /// `(a∧b)⊗(c∧d)` in the spanning-set coordinates, before reduction.
    fn raw(&self, a: u8, b: u8, c: u8, d: u8) -> Accum {
        let mut acc = Accum::default();
        if let (Some((p, s)), Some((q, t))) = (self.wedge(a, b), self.wedge(c, d)) {
            acc.add(p * self.pairs.len() + q, s * t);
        }
        acc
    }

    fn finish(&self, acc: Accum) -> JElement {
        let v = acc.into_vector();
        JElement {
            n: self.n,
            coords: self.relations.reduce(&v.to_rational()),
        }
    }

    /// Class of `(x_a∧x_b)·(x_c∧x_d)`.
    pub fn project(&self, a: u8, b: u8, c: u8, d: u8) -> JElement {
        self.finish(self.raw(a, b, c, d))
    }

    /// `f_1(v⊗w⊗x⊗y) = (v∧x)·(w∧y)` extended linearly.
    pub fn f1(&self, t: &TensorElement) -> JElement {
        self.apply_projection(t, |w| (w.get(0), w.get(2), w.get(1), w.get(3)))
    }

    /// `f_2(v⊗w⊗x⊗y) = (v∧y)·(w∧x)` extended linearly.
    pub fn f2(&self, t: &TensorElement) -> JElement {
        self.apply_projection(t, |w| (w.get(0), w.get(3), w.get(1), w.get(2)))
    }

    fn apply_projection(&self, t: &TensorElement, pick: impl Fn(&Word) -> (u8, u8, u8, u8)) -> JElement {
        assert!(t.is_zero() || t.degree() == 4, "J projections take degree-4 tensors");
        let mut acc = Accum::default();
        for (w, c) in t.iter() {
            let (a, b, x, y) = pick(w);
            if let (Some((p, s)), Some((q, u))) = (self.wedge(a, b), self.wedge(x, y)) {
                acc.add_int(p * self.pairs.len() + q, &(c * &Int::from(s * u)));
            }
        }
        self.finish(acc)
    }

    /// `a - c * b` for elements of this module.
    pub fn combine(&self, a: &JElement, b: &JElement, c: i64) -> JElement {
        let scaled = b.coords.scale(&Rational::from_integer(BigInt::from(-c)));
        JElement {
            n: self.n,
            coords: self.relations.reduce(&a.coords.add(&scaled)),
        }
    }

    pub fn scale(&self, a: &JElement, c: i64) -> JElement {
        JElement {
            n: self.n,
            coords: a.coords.scale(&Rational::from_integer(BigInt::from(c))),
        }
    }

    pub fn describe(&self, e: &JElement) -> String {
        if e.is_zero() {
            return "0".to_string();
        }
        let m = self.pairs.len();
        e.coords
            .entries()
            .iter()
            .map(|(i, c)| {
                let (p, q) = (self.pairs[i / m], self.pairs[i % m]);
                format!("{c}*({}^{})({}^{})", p.0, p.1, q.0, q.1)
            })
            .collect::<Vec<_>>()
            .join(" + ")
    }
}

#[derive(Default)]
struct Accum {
    map: BTreeMap<usize, Int>,
}

impl Accum {
    fn add(&mut self, i: usize, c: i64) {
        self.add_int(i, &Int::from(c));
    }

    fn add_int(&mut self, i: usize, c: &Int) {
        *self.map.entry(i).or_default() += c;
    }

    fn sub(&mut self, other: &Accum) {
        for (i, c) in &other.map {
            *self.map.entry(*i).or_default() -= c;
        }
    }

    fn into_vector(self) -> IntVector {
        IntVector::from_pairs(self.map)
    }
}

/// Rank of `J` for `H` of rank `n`.
pub fn j_rank(n: usize) -> usize {
    JModule::get(n).rank()
}

/// Class of `(x_a∧x_b)·(x_c∧x_d)` in `J` for rank `n`.
pub fn j_project(n: usize, a: u8, b: u8, c: u8, d: u8) -> JElement {
    JModule::get(n).project(a, b, c, d)
}

/// `c * (x_a∧x_b)·(x_c∧x_d)` as a `JElement`.
pub fn j_multiple(n: usize, c: i64, a: u8, b: u8, x: u8, y: u8) -> JElement {
    let j = JModule::get(n);
    j.scale(&j.project(a, b, x, y), c)
}

impl JElement {
    pub fn n(&self) -> usize {
        self.n
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn necklaces_by_content_partition_all() {
        for k in 1..=6 {
            let mut all = Vec::new();
            for c in crate::combinat::compositions(k, 3) {
                all.extend(necklaces_with_content(&c));
            }
            all.sort();
            assert_eq!(all, generate_necklaces(3, k));
        }
    }

    fn w(s: &str) -> Word {
        Word::parse_digits(s).unwrap()
    }

    #[test]
    fn canonical_necklaces() {
        assert_eq!(necklace_canonicalize(w("21")).word(), w("12"));
        assert_eq!(necklace_canonicalize(w("1212")).word(), w("1212"));
        let x = w("31213");
        for r in 0..x.len() {
            assert_eq!(necklace_canonicalize(x.rotate(r)), necklace_canonicalize(x));
        }
    }

    #[test]
    fn ranks() {
        for n in 1..=5 {
            assert_eq!(cyclic_rank(n, 2, QuotientMode::Full), Int::from(n * (n + 1) / 2));
            assert_eq!(cyclic_rank(n, 3, QuotientMode::Bar), Int::from(n * (n * n - 1) / 3));
        }
        assert_eq!(cyclic_rank(2, 4, QuotientMode::Tilde), Int::from(2));
        assert_eq!(necklace_basis(2, 4, QuotientMode::Tilde), vec![w("1112"), w("1222")]);
    }

    #[test]
    fn reductions() {
        let e = CyclicElement::from_terms(4, [(w("1111"), Int::from(1)), (w("1212"), Int::from(1)), (w("1122"), Int::from(1))]);
        assert_eq!(reduce(&e, QuotientMode::Bar).terms().len(), 2);
        assert!(reduce(&e, QuotientMode::Tilde).is_zero());
        let e = CyclicElement::from_terms(3, [(w("123"), Int::from(1))]);
        assert_eq!(reduce(&e, QuotientMode::Tilde), e);
    }

    #[test]
    fn project_kills_commutator() {
        let t = TensorElement::from_terms(2, [(w("12"), Int::from(1)), (w("21"), Int::from(-1))]);
        assert!(project_cyclic(&t).is_zero());
    }

    #[test]
    fn j_module_small() {
        assert_eq!(j_rank(2), 1);
        assert_eq!(j_rank(3), 6);
        assert!(j_project(3, 1, 1, 2, 3).is_zero());
        let j = JModule::get(4);
        // exchange relation with v,w,x,y = 1,2,3,4
        let lhs = j.project(1, 2, 3, 4);
        let r1 = j.project(3, 2, 1, 4);
        let r2 = j.project(1, 3, 2, 4);
        let diff = j.combine(&j.combine(&lhs, &r1, 1), &r2, 1);
        assert!(diff.is_zero());
    }
}
