//! Words over the alphabet `1..=15`, packed four bits per letter.

use std::cmp::Ordering;
use std::fmt;

pub const MAX_WORD_LEN: usize = 16;
pub const MAX_LETTER: u8 = 15;

/// A word of length at most 16 over letters `1..=15`.
///
/// The first letter occupies the most significant nibble, so for words of
/// equal length the derived order is the lexicographic order. Words of
/// different lengths compare by length first; use [`Word::lex_cmp`] for the
/// plain lexicographic order.
#[derive(Clone, Copy, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Word {
    len: u8,
    bits: u64,
}

#[inline]
fn mask(len: usize) -> u64 {
    if len >= 16 {
        u64::MAX
    } else {
        (1u64 << (4 * len)) - 1
    }
}

impl Word {
    pub const EMPTY: Word = Word { len: 0, bits: 0 };

    #[inline]
    pub fn letter(a: u8) -> Word {
        debug_assert!((1..=MAX_LETTER).contains(&a));
        Word { len: 1, bits: a as u64 }
    }

    pub fn from_letters(letters: &[u8]) -> Word {
        assert!(letters.len() <= MAX_WORD_LEN, "word longer than {MAX_WORD_LEN}");
        let mut w = Word::EMPTY;
        for &a in letters {
            assert!((1..=MAX_LETTER).contains(&a), "letter {a} out of range");
            w = w.push(a);
        }
        w
    }

    /// Parses a string of decimal digits `1..9`, e.g. `"1212"`.
    pub fn parse_digits(s: &str) -> Option<Word> {
        let letters: Option<Vec<u8>> = s
            .chars()
            .map(|c| c.to_digit(10).filter(|&d| d >= 1).map(|d| d as u8))
            .collect();
        let letters = letters?;
        (letters.len() <= MAX_WORD_LEN).then(|| Word::from_letters(&letters))
    }

    #[inline]
    pub fn len(&self) -> usize {
        self.len as usize
    }

    #[inline]
    pub fn is_empty(&self) -> bool {
        self.len == 0
    }

    #[inline]
    pub fn bits(&self) -> u64 {
        self.bits
    }

    #[inline]
    pub fn get(&self, p: usize) -> u8 {
        debug_assert!(p < self.len());
        ((self.bits >> (4 * (self.len() - 1 - p))) & 0xF) as u8
    }

    #[inline]
    pub fn first(&self) -> u8 {
        self.get(0)
    }

    #[inline]
    pub fn last(&self) -> u8 {
        (self.bits & 0xF) as u8
    }

    pub fn letters(&self) -> impl Iterator<Item = u8> + '_ {
        (0..self.len()).map(move |p| self.get(p))
    }

    pub fn to_vec(&self) -> Vec<u8> {
        self.letters().collect()
    }

    #[inline]
    pub fn push(self, a: u8) -> Word {
        debug_assert!(self.len() < MAX_WORD_LEN);
        Word {
            len: self.len + 1,
            bits: (self.bits << 4) | a as u64,
        }
    }

    #[inline]
    pub fn concat(self, other: Word) -> Word {
        debug_assert!(self.len() + other.len() <= MAX_WORD_LEN);
        if other.len == 0 {
            return self;
        }
        Word {
            len: self.len + other.len,
            bits: (self.bits << (4 * other.len())) | other.bits,
        }
    }

    /// First `l` letters.
    #[inline]
    pub fn prefix(self, l: usize) -> Word {
        debug_assert!(l <= self.len());
        Word {
            len: l as u8,
            bits: if l == 0 { 0 } else { self.bits >> (4 * (self.len() - l)) },
        }
    }

    /// The word with its first `s` letters removed.
    #[inline]
    pub fn suffix(self, s: usize) -> Word {
        debug_assert!(s <= self.len());
        let l = self.len() - s;
        Word {
            len: l as u8,
            bits: self.bits & mask(l),
        }
    }

    /// Cyclic rotation moving the first `r` letters to the end.
    pub fn rotate(self, r: usize) -> Word {
        let r = if self.len == 0 { 0 } else { r % self.len() };
        self.suffix(r).concat(self.prefix(r))
    }

    /// Plain lexicographic order (a proper prefix precedes the longer word).
    pub fn lex_cmp(&self, other: &Word) -> Ordering {
        let m = self.len().min(other.len());
        self.prefix(m)
            .bits
            .cmp(&other.prefix(m).bits)
            .then(self.len.cmp(&other.len))
    }

    /// Letter multiplicities `counts[a-1]` for `a` in `1..=n`.
    pub fn content(&self, n: usize) -> Vec<usize> {
        let mut c = vec![0; n];
        for a in self.letters() {
            c[a as usize - 1] += 1;
        }
        c
    }

    pub fn count(&self, a: u8) -> usize {
        self.letters().filter(|&b| b == a).count()
    }

    pub fn max_letter(&self) -> u8 {
        self.letters().max().unwrap_or(0)
    }

    /// Lyndon test: strictly smaller than each of its proper rotations.
    pub fn is_lyndon(&self) -> bool {
        let n = self.len();
        if n == 0 {
            return false;
        }
        let (mut i, mut j) = (0, 1);
        while j < n {
            let (a, b) = (self.get(i), self.get(j));
            if a < b {
                i = 0;
            } else if a == b {
                i += 1;
            } else {
                return false;
            }
            j += 1;
        }
        i == 0
    }

    /// Standard factorization `w = u v` of a Lyndon word of length >= 2, with
    /// `v` the longest proper Lyndon suffix.
    pub fn standard_factorization(&self) -> (Word, Word) {
        debug_assert!(self.len() >= 2);
        for s in 1..self.len() {
            let v = self.suffix(s);
            if v.is_lyndon() {
                return (self.prefix(s), v);
            }
        }
        unreachable!("the last letter is always a Lyndon suffix")
    }

    /// Lexicographically least rotation (Booth's algorithm).
    pub fn min_rotation(&self) -> Word {
        let n = self.len();
        if n <= 1 {
            return *self;
        }
        let s = |i: usize| self.get(i % n);
        let mut f: Vec<isize> = vec![-1; 2 * n];
        let mut k: usize = 0;
        for j in 1..2 * n {
            let sj = s(j);
            let mut i = f[j - k - 1];
            while i != -1 && sj != s(k + i as usize + 1) {
                if sj < s(k + i as usize + 1) {
                    k = j - i as usize - 1;
                }
                i = f[i as usize];
            }
            if i == -1 && sj != s(k) {
                if sj < s(k) {
                    k = j;
                }
                f[j - k] = -1;
            } else {
                f[j - k] = i + 1;
            }
        }
        self.rotate(k)
    }

    /// Smallest period `p` with `w` equal to its rotation by `p`.
    pub fn period(&self) -> usize {
        let n = self.len();
        (1..=n).find(|&p| n % p == 0 && self.rotate(p) == *self).unwrap_or(n)
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.letters().all(|a| a <= 9) {
            for a in self.letters() {
                write!(f, "{a}")?;
            }
            Ok(())
        } else {
            let parts: Vec<String> = self.letters().map(|a| a.to_string()).collect();
            write!(f, "{}", parts.join("."))
        }
    }
}

impl fmt::Debug for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "w{self}")
    }
}

/// Lyndon words of length exactly `k` over `1..=n`, in lexicographic order
/// (Duval's generation).
pub fn generate_lyndon(n: u8, k: usize) -> Vec<Word> {
    assert!(k >= 1 && k <= MAX_WORD_LEN && (1..=MAX_LETTER).contains(&n));
    let mut out = Vec::new();
    let mut w: Vec<u8> = vec![1];
    loop {
        if w.len() == k {
            out.push(Word::from_letters(&w));
        }
        // Extend periodically to length k, then increment.
        let m = w.len();
        while w.len() < k {
            let c = w[w.len() - m];
            w.push(c);
        }
        while matches!(w.last(), Some(&a) if a == n) {
            w.pop();
        }
        match w.last_mut() {
            None => break,
            Some(a) => *a += 1,
        }
    }
    out
}

/// Lyndon words with letter multiplicities `content` (letter `a` occurs
/// `content[a-1]` times), in lexicographic order.
pub fn generate_lyndon_with_content(content: &[usize]) -> Vec<Word> {
    let k: usize = content.iter().sum();
    assert!(k >= 1 && k <= MAX_WORD_LEN && content.len() <= MAX_LETTER as usize);
    let mut out = Vec::new();
    let mut counts = content.to_vec();
    let mut cur = Vec::with_capacity(k);
    fn rec(counts: &mut [usize], cur: &mut Vec<u8>, k: usize, out: &mut Vec<Word>) {
        if cur.len() == k {
            let w = Word::from_letters(cur);
            if w.is_lyndon() {
                out.push(w);
            }
            return;
        }
        for a in 0..counts.len() {
            if counts[a] == 0 {
                continue;
            }
            let letter = a as u8 + 1;
            // A Lyndon word starts with its smallest letter and no later
            // letter may be smaller than the first.
            if let Some(&f) = cur.first() {
                if letter < f {
                    continue;
                }
            }
            counts[a] -= 1;
            cur.push(letter);
            rec(counts, cur, k, out);
            cur.pop();
            counts[a] += 1;
        }
    }
    // The first letter must be the smallest letter present.
    if let Some(first) = content.iter().position(|&c| c > 0) {
        counts[first] -= 1;
        cur.push(first as u8 + 1);
        rec(&mut counts, &mut cur, k, &mut out);
    }
    out
}

/// Canonical necklace representatives of length `k` over `1..=n`, sorted.
pub fn generate_necklaces(n: u8, k: usize) -> Vec<Word> {
    let mut out = Vec::new();
    for d in crate::combinat::divisors(k) {
        for w in generate_lyndon(n, d) {
            let mut x = Word::EMPTY;
            for _ in 0..k / d {
                x = x.concat(w);
            }
            out.push(x);
        }
    }
    out.sort();
    out
}
