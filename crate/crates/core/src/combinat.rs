//! Small number-theoretic and enumeration helpers.

use num_bigint::BigInt;
use num_traits::{One, Zero};

pub fn divisors(k: usize) -> Vec<usize> {
    (1..=k).filter(|d| k % d == 0).collect()
}

pub fn mobius(mut n: usize) -> i64 {
    let mut result = 1;
    let mut p = 2;
    while p * p <= n {
        if n % p == 0 {
            n /= p;
            if n % p == 0 {
                return 0;
            }
            result = -result;
        }
        p += 1;
    }
    if n > 1 {
        result = -result;
    }
    result
}

pub fn euler_phi(n: usize) -> usize {
    let (mut n, mut result) = (n, n);
    let mut p = 2;
    while p * p <= n {
        if n % p == 0 {
            while n % p == 0 {
                n /= p;
            }
            result -= result / p;
        }
        p += 1;
    }
    if n > 1 {
        result -= result / n;
    }
    result
}

pub fn gcd(a: usize, b: usize) -> usize {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

pub fn factorial(n: usize) -> BigInt {
    (1..=n).fold(BigInt::one(), |acc, i| acc * BigInt::from(i))
}

pub fn binomial(n: usize, r: usize) -> BigInt {
    if r > n {
        return BigInt::zero();
    }
    let r = r.min(n - r);
    let mut acc = BigInt::one();
    for i in 0..r {
        acc = acc * BigInt::from(n - i) / BigInt::from(i + 1);
    }
    acc
}

pub fn binomial_usize(n: usize, r: usize) -> usize {
    usize::try_from(binomial(n, r)).expect("binomial fits usize")
}

/// `k! / prod(parts_i!)`.
pub fn multinomial(parts: &[usize]) -> BigInt {
    let k: usize = parts.iter().sum();
    parts.iter().fold(factorial(k), |acc, &p| acc / factorial(p))
}

/// All compositions of `k` into exactly `n` nonnegative parts, in
/// lexicographically decreasing order of the part vector.
pub fn compositions(k: usize, n: usize) -> Vec<Vec<usize>> {
    fn rec(k: usize, n: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if n == 1 {
            cur.push(k);
            out.push(cur.clone());
            cur.pop();
            return;
        }
        for first in (0..=k).rev() {
            cur.push(first);
            rec(k - first, n - 1, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    if n == 0 {
        if k == 0 {
            out.push(Vec::new());
        }
        return out;
    }
    rec(k, n, &mut Vec::with_capacity(n), &mut out);
    out
}

/// Partitions of `k` (parts in nonincreasing order) with at most `max_parts`
/// parts, ordered by number of parts and then lexicographically decreasing.
pub fn partitions(k: usize, max_parts: usize) -> Vec<Vec<usize>> {
    fn rec(k: usize, max_part: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if k == 0 {
            out.push(cur.clone());
            return;
        }
        for p in (1..=k.min(max_part)).rev() {
            cur.push(p);
            rec(k - p, p, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(k, k, &mut Vec::new(), &mut out);
    out.retain(|p| p.len() <= max_parts);
    out.sort_by(|a, b| a.len().cmp(&b.len()).then(b.cmp(a)));
    out
}

/// Size of the orbit of a partition (padded with zeros to length `n`) under
/// coordinate permutations.
pub fn orbit_size(partition: &[usize], n: usize) -> BigInt {
    assert!(partition.len() <= n);
    let mut padded = partition.to_vec();
    padded.resize(n, 0);
    padded.sort_unstable();
    let mut denom = BigInt::one();
    let mut run = 1;
    for i in 1..=padded.len() {
        if i < padded.len() && padded[i] == padded[i - 1] {
            run += 1;
        } else {
            denom *= factorial(run);
            run = 1;
        }
    }
    factorial(n) / denom
}

/// `n^e` as an exact integer.
pub fn pow(n: usize, e: usize) -> BigInt {
    num_traits::pow(BigInt::from(n), e)
}
