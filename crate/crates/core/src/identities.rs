//! Cross-family identities as defect computations (`lhs - rhs`).
//!
//! A zero defect certifies the identity on that instance; a nonzero one is
//! the offending polynomial.

use crate::algebra::{PSpec, QPoly};
use crate::error::{Error, Result};
use crate::triangles::{FamilySpec, Kind, QType, Triangle};

/// Both orthogonality defects
/// `sum_{k=l..n} S(n,k) s(k,l) - [n = l]` and `sum_{k=l..n} s(n,k) S(k,l) - [n = l]`
/// for `r <= l <= n`, `r < n`.
pub fn orthogonality_defect(p: &PSpec, r: usize, n: usize, l: usize, q_type: QType) -> Result<(QPoly, QPoly)> {
    if !(r <= l && l <= n && r < n) {
        return Err(Error::Precondition(format!(
            "orthogonality needs r <= l <= n and r < n, got r={r} l={l} n={n}"
        )));
    }
    let base = FamilySpec::new(Kind::SecondKind, q_type, p.clone(), r);
    let mut second = Triangle::new(base.clone());
    let mut first = Triangle::new(base.with_kind(Kind::FirstKindSigned));
    Ok(orthogonality_with(&mut second, &mut first, n, l))
}

/// Orthogonality defects over caller-owned triangles (reused across a grid).
pub fn orthogonality_with(second: &mut Triangle, first: &mut Triangle, n: usize, l: usize) -> (QPoly, QPoly) {
    let delta = if n == l { QPoly::one() } else { QPoly::zero() };
    let (n, l) = (n as i64, l as i64);
    let mut a = QPoly::zero();
    let mut b = QPoly::zero();
    for k in l..=n {
        a += &(second.value(n, k) * first.value(k, l));
        b += &(first.value(n, k) * second.value(k, l));
    }
    (a - &delta, b - &delta)
}

/// `sum_{j=r..n} a_j^k` with `a_j = [p(j)]_q` (type II) or `p([j]_q)` (type I).
pub fn power_sum_lhs(p: &PSpec, r: usize, n: usize, k: usize, q_type: QType) -> Result<QPoly> {
    check_power_sum(r, n, k)?;
    let spec = FamilySpec::new(Kind::SecondKind, q_type, p.clone(), r);
    Ok((r..=n).map(|j| spec.node(j).pow(k)).sum())
}

/// `-sum_{l=1..n-r+1} l * s(n+1, n+1-l) * S(n+k-l, n)` for the matching q-type.
pub fn power_sum_rhs(p: &PSpec, r: usize, n: usize, k: usize, q_type: QType) -> Result<QPoly> {
    check_power_sum(r, n, k)?;
    let base = FamilySpec::new(Kind::SecondKind, q_type, p.clone(), r);
    let mut second = Triangle::new(base.clone());
    let mut first = Triangle::new(base.with_kind(Kind::FirstKindSigned));
    Ok(-weighted_convolution(&mut first, &mut second, r, n, k))
}

fn check_power_sum(r: usize, n: usize, k: usize) -> Result<()> {
    if n < r || k == 0 {
        return Err(Error::Precondition(format!(
            "power sums need n >= r and k >= 1, got r={r} n={n} k={k}"
        )));
    }
    Ok(())
}

/// `sum_{l=1..n-r+1} l * s(n+1, n+1-l) * S(n+k-l, n)`; lookups outside the
/// triangle are zero.
pub fn weighted_convolution(first: &mut Triangle, second: &mut Triangle, r: usize, n: usize, k: usize) -> QPoly {
    let (n, k) = (n as i64, k as i64);
    let mut acc = QPoly::zero();
    for l in 1..=(n - r as i64 + 1) {
        let s = first.value(n + 1, n + 1 - l);
        if s.is_zero() {
            continue;
        }
        let big = second.value(n + k - l, n);
        acc += &(s * big).scale(&l.into());
    }
    acc
}

/// Type II sums for `p = x` with exponent `k u` minus type I sums for
/// `p = x^u` with exponent `k`.
pub fn mixed_relation_defect(u: usize, r: usize, n: usize, k: usize) -> Result<QPoly> {
    if u == 0 {
        return Err(Error::Precondition("mixed relation needs u >= 1".into()));
    }
    check_power_sum(r, n, k)?;
    let lin = FamilySpec::new(Kind::SecondKind, QType::TypeII, PSpec::x(), r);
    let pow = FamilySpec::new(Kind::SecondKind, QType::TypeI, PSpec::monomial(u), r);
    let lhs = weighted_convolution(
        &mut Triangle::new(lin.with_kind(Kind::FirstKindSigned)),
        &mut Triangle::new(lin),
        r,
        n,
        k * u,
    );
    let rhs = weighted_convolution(
        &mut Triangle::new(pow.with_kind(Kind::FirstKindSigned)),
        &mut Triangle::new(pow),
        r,
        n,
        k,
    );
    Ok(lhs - rhs)
}
