//! Type B set partitions: brute-force enumeration, the counting recursion,
//! and the identities built on top of them (the most-special-blocks
//! decomposition, the exponential generating function and the connection
//! constants to the odd falling basis).

use std::collections::BTreeSet;
use std::fmt;

use num_bigint::BigInt;
use num_integer::binomial;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::algebra::{QPoly, Series, SeriesVar};
use crate::error::{Error, Result};

/// Largest `n` the enumerator accepts.
pub const ENUMERATION_MAX_N: usize = 9;

/// A type B partition of `[±n]`.
///
/// Non-zero blocks come in pairs `{B, -B}`; only the member containing the
/// smallest positive element of `B ∪ -B` is stored, so the entry of least
/// absolute value in every stored block is positive.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct BPartition {
    pub n: usize,
    /// `C` such that the zero block is `{±i : i in C}`; empty if there is none.
    pub zero_block: BTreeSet<u32>,
    /// Representative non-zero blocks in order of their least element.
    pub blocks: Vec<Vec<i32>>,
}

impl BPartition {
    pub fn num_blocks(&self) -> usize {
        self.blocks.len()
    }

    /// Whether `1..=r` sit in `r` distinct non-zero blocks.
    pub fn separates_first(&self, r: usize) -> bool {
        let mut seen = BTreeSet::new();
        for s in 1..=r as i32 {
            if self.zero_block.contains(&(s as u32)) {
                return false;
            }
            let Some(b) = self.blocks.iter().position(|b| b.contains(&s) || b.contains(&-s)) else {
                return false;
            };
            if !seen.insert(b) {
                return false;
            }
        }
        true
    }
}

impl fmt::Display for BPartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut parts = Vec::new();
        if !self.zero_block.is_empty() {
            let z: Vec<String> = self.zero_block.iter().map(|i| format!("±{i}")).collect();
            parts.push(format!("0{{{}}}", z.join(",")));
        }
        for b in &self.blocks {
            let s: Vec<String> = b.iter().map(i32::to_string).collect();
            parts.push(format!("{{{}}}", s.join(",")));
        }
        write!(f, "{}", parts.join(" "))
    }
}

/// Calls `visit` on every type B partition of `[±n]`, built by inserting
/// `1..=n` in turn: into the zero block, into an existing block with either
/// sign, or as a new singleton.
pub fn for_each_b_partition(n: usize, mut visit: impl FnMut(&BPartition)) -> Result<()> {
    if n > ENUMERATION_MAX_N {
        return Err(Error::GuardExceeded(format!(
            "type B enumeration needs n <= {ENUMERATION_MAX_N}, got {n}"
        )));
    }
    fn go(i: usize, cur: &mut BPartition, visit: &mut dyn FnMut(&BPartition)) {
        if i > cur.n {
            visit(cur);
            return;
        }
        let e = i as i32;
        cur.zero_block.insert(i as u32);
        go(i + 1, cur, visit);
        cur.zero_block.remove(&(i as u32));
        for b in 0..cur.blocks.len() {
            for signed in [e, -e] {
                cur.blocks[b].push(signed);
                go(i + 1, cur, visit);
                cur.blocks[b].pop();
            }
        }
        cur.blocks.push(vec![e]);
        go(i + 1, cur, visit);
        cur.blocks.pop();
    }
    let mut cur = BPartition {
        n,
        zero_block: BTreeSet::new(),
        blocks: Vec::new(),
    };
    go(1, &mut cur, &mut visit);
    Ok(())
}

/// All type B partitions of `[±n]` with `k` representative non-zero blocks
/// in which `1..=r` lie in distinct non-zero blocks.
pub fn enumerate_b_partitions(n: usize, k: usize, r: usize) -> Result<Vec<BPartition>> {
    let mut out = Vec::new();
    for_each_b_partition(n, |p| {
        if p.num_blocks() == k && p.separates_first(r) {
            out.push(p.clone());
        }
    })?;
    Ok(out)
}

/// Number of type B partitions of `[±n]` regardless of block count.
pub fn count_all_b_partitions(n: usize) -> Result<u64> {
    let mut total = 0u64;
    for_each_b_partition(n, |_| total += 1)?;
    Ok(total)
}

/// The r-Stirling numbers of the second kind of type B, from
/// `S(n,k) = S(n-1,k-1) + (2k+1) S(n-1,k)` for `n > r`, `S(r,k) = [k = r]`,
/// and `S(n,k) = 0` for `n < r`.
pub fn count_b(n: i64, k: i64, r: i64) -> BigInt {
    if n < r || k < 0 || k > n || r < 0 {
        return BigInt::zero();
    }
    let width = (n + 1) as usize;
    let mut row = vec![BigInt::zero(); width];
    row[r as usize] = BigInt::one();
    for _ in r + 1..=n {
        let mut next = vec![BigInt::zero(); width];
        for j in 0..width {
            let mut v = BigInt::from(2 * j + 1) * &row[j];
            if j > 0 {
                v += &row[j - 1];
            }
            next[j] = v;
        }
        row = next;
    }
    row.swap_remove(k as usize)
}

/// `S(n,k,r) - sum_{m=0..n-r} C(n-r, m) S(n-p-m, k-p, r-p) (2p)^m` for the
/// first `p <= r` special elements.
pub fn special_removal_defect(n: usize, k: usize, r: usize, p_most: usize) -> Result<BigInt> {
    if !(p_most <= r && r <= k && k <= n) {
        return Err(Error::Precondition(format!(
            "need p <= r <= k <= n, got p={p_most} r={r} k={k} n={n}"
        )));
    }
    let (ni, ki, ri, pi) = (n as i64, k as i64, r as i64, p_most as i64);
    let two_p = BigInt::from(2 * p_most);
    let rhs: BigInt = (0..=n - r)
        .map(|m| {
            binomial(BigInt::from(n - r), BigInt::from(m))
                * count_b(ni - pi - m as i64, ki - pi, ri - pi)
                * num_traits::pow(two_p.clone(), m)
        })
        .sum();
    Ok(count_b(ni, ki, ri) - rhs)
}

fn exp_linear(c: i64, order: usize) -> Series<BigRational> {
    Series::monomial(SeriesVar::T, order, BigRational::from_integer(c.into()), 1)
        .exp()
        .expect("linear series has no constant term")
}

fn factorial(n: usize) -> BigInt {
    (1..=n).fold(BigInt::one(), |acc, i| acc * i)
}

/// `sum_n S(n+r, k+r, r) t^n/n! - e^((2r+1)t) (e^(2t) - 1)^k / (k! 2^k)`
/// through `t^order`.
pub fn egf_defect(k: usize, r: usize, order: usize) -> Result<Series<BigRational>> {
    let lhs = Series::from_coeffs(
        SeriesVar::T,
        order,
        (0..=order)
            .map(|n| {
                BigRational::new(
                    count_b((n + r) as i64, (k + r) as i64, r as i64),
                    factorial(n),
                )
            })
            .collect(),
    );
    let shifted = exp_linear(2 * r as i64 + 1, order);
    let bump = exp_linear(2, order).sub(&Series::one(SeriesVar::T, order))?;
    let norm = BigRational::new(BigInt::one(), factorial(k) * num_traits::pow(BigInt::from(2), k));
    let rhs = shifted.mul(&bump.pow(k))?.scale(&norm);
    lhs.sub(&rhs)
}

/// `(x + 2r)^n - sum_{k=0..n} S(n+r, k+r, r) (x-1)(x-3)...(x-2k+1)`, as an
/// integer polynomial in `x` (stored in a [`QPoly`], the variable renamed).
pub fn connection_defect(n: usize, r: usize) -> QPoly {
    let lhs = QPoly::from_i64s(&[2 * r as i64, 1]).pow(n);
    let mut basis = QPoly::one();
    let mut rhs = QPoly::zero();
    for k in 0..=n {
        if k > 0 {
            basis = &basis * &QPoly::from_i64s(&[-(2 * k as i64 - 1), 1]);
        }
        let c = count_b((n + r) as i64, (k + r) as i64, r as i64);
        rhs += &basis.scale(&c);
    }
    lhs - rhs
}

/// OEIS b-file reading for cross-checks against published tables.
pub mod bfile {
    use num_bigint::BigInt;

    use crate::error::{Error, Result};

    /// Parses `index value` lines; blank lines and `#` comments are skipped.
    pub fn parse(text: &str) -> Result<Vec<(u64, BigInt)>> {
        let mut out = Vec::new();
        for (no, line) in text.lines().enumerate() {
            let line = line.trim();
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            let bad = |msg: &str| Error::BFile {
                line: no + 1,
                msg: msg.to_string(),
            };
            let mut it = line.split_whitespace();
            let idx = it.next().ok_or_else(|| bad("missing index"))?;
            let val = it.next().ok_or_else(|| bad("missing value"))?;
            if it.next().is_some() {
                return Err(bad("trailing fields"));
            }
            let idx = idx.parse::<u64>().map_err(|_| bad("index is not a non-negative integer"))?;
            let val = val.parse::<BigInt>().map_err(|_| bad("value is not an integer"))?;
            out.push((idx, val));
        }
        Ok(out)
    }

    /// `(n, k)` of the `i`-th entry of a triangle read by rows, `0 <= k <= n`.
    pub fn triangle_position(i: u64) -> (u64, u64) {
        let mut n = 0;
        while (n + 1) * (n + 2) / 2 <= i {
            n += 1;
        }
        (n, i - n * (n + 1) / 2)
    }

    /// Compares each entry, read as the triangle `T(n, k)` by rows starting at
    /// the file's first index, with `table`. Returns the first mismatch as
    /// `(index, file value, table value)`.
    pub fn first_triangle_mismatch(
        entries: &[(u64, BigInt)],
        mut table: impl FnMut(u64, u64) -> BigInt,
    ) -> Option<(u64, BigInt, BigInt)> {
        let offset = entries.first()?.0;
        entries.iter().find_map(|(idx, val)| {
            let (n, k) = triangle_position(idx - offset);
            let want = table(n, k);
            (&want != val).then(|| (*idx, val.clone(), want))
        })
    }
}
