//! Independent computations of the triangles, one per characterization.
//!
//! Second kind: change of basis to the falling basis, complete recursion,
//! ordinary generating function, explicit composition sum (plus its nested
//! loop form) and the partial-fraction sum at a numeric `q`. First kind:
//! product expansion, complete recursion and the explicit subset sum.
//!
//! Everything is written in terms of the family's nodes `a_j` (`[p(j)]_q` or
//! `p([j]_q)`), so both q-types are covered by the same code.

use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::algebra::{complete_homogeneous, elem_symmetric, QPoly, Series, SeriesVar, XPoly};
use crate::error::{Error, Result};
use crate::triangles::{FamilySpec, Kind, Triangle};

/// Largest `n - k` the nested-sum oracle accepts.
pub const NESTED_MAX_DEPTH: usize = 6;
/// Largest `k - r` the nested-sum oracle accepts.
pub const NESTED_MAX_WIDTH: usize = 5;

fn require_second(spec: &FamilySpec) -> Result<()> {
    match spec.kind {
        Kind::SecondKind => Ok(()),
        other => Err(Error::WrongKind {
            expected: "second kind",
            got: other.name(),
        }),
    }
}

fn require_first(spec: &FamilySpec) -> Result<()> {
    match spec.kind {
        Kind::SecondKind => Err(Error::WrongKind {
            expected: "first kind",
            got: Kind::SecondKind.name(),
        }),
        _ => Ok(()),
    }
}

fn require(cond: bool, what: impl FnOnce() -> String) -> Result<()> {
    if cond {
        Ok(())
    } else {
        Err(Error::Precondition(what()))
    }
}

fn signed(kind: Kind, parity: usize, v: QPoly) -> QPoly {
    if kind == Kind::FirstKindSigned && parity % 2 == 1 {
        -v
    } else {
        v
    }
}

/// The basis `phi_r = 1`, `phi_k = (x - a_r)...(x - a_(k-1))`.
#[derive(Clone, Debug)]
pub struct FallingBasis {
    r: usize,
    nodes: Vec<QPoly>,
}

impl FallingBasis {
    /// Nodes `a_r..a_(top-1)`, enough for `phi_r..phi_top`.
    pub fn new(spec: &FamilySpec, top: usize) -> Self {
        FallingBasis {
            r: spec.r,
            nodes: spec.nodes(spec.r, top.max(spec.r)),
        }
    }

    pub fn r(&self) -> usize {
        self.r
    }

    pub fn nodes(&self) -> &[QPoly] {
        &self.nodes
    }

    /// All of `phi_r..=phi_top` expanded in powers of `x`.
    pub fn expanded(&self) -> Vec<XPoly> {
        let mut out = Vec::with_capacity(self.nodes.len() + 1);
        let mut cur = XPoly::one();
        out.push(cur.clone());
        for a in &self.nodes {
            cur = cur.mul_linear(&-a);
            out.push(cur.clone());
        }
        out
    }
}

/// Coefficients `S(n, k)`, `k = r..=n`, of `x^(n-r)` in the falling basis.
///
/// Each `phi_k` is monic of degree `k - r`, so the leading coefficient of
/// the remainder is the next basis coefficient, from `k = n` down to `r`.
pub fn comtet_basis_coeffs(spec: &FamilySpec, n: usize) -> Result<Vec<QPoly>> {
    require_second(spec)?;
    let r = spec.r;
    require(n >= r, || format!("n = {n} < r = {r}"))?;
    let phis = FallingBasis::new(spec, n).expanded();
    let mut rest = XPoly::x_pow(n - r);
    let mut out = vec![QPoly::zero(); n - r + 1];
    for k in (r..=n).rev() {
        let c = rest.coeff(k - r);
        rest = rest.sub_scaled(&phis[k - r], &c);
        out[k - r] = c;
    }
    debug_assert!(rest.is_zero());
    Ok(out)
}

/// Re-expand `sum_k coeffs[k] phi_k(x)` in powers of `x`.
pub fn expand_in_basis(spec: &FamilySpec, coeffs: &[QPoly]) -> XPoly {
    let top = spec.r + coeffs.len().saturating_sub(1);
    let phis = FallingBasis::new(spec, top).expanded();
    coeffs
        .iter()
        .zip(&phis)
        .fold(XPoly::zero(), |acc, (c, phi)| acc.add_scaled(phi, c))
}

/// `sum_{j=k..n} S(j-1, k-1) a_k^(n-j)` for `n >= k > r`.
pub fn comtet_complete_recursion(tri: &mut Triangle, n: usize, k: usize) -> Result<QPoly> {
    let spec = tri.spec().clone();
    require_second(&spec)?;
    require(n >= k && k > spec.r, || format!("need n >= k > r, got n={n} k={k} r={}", spec.r))?;
    let a = spec.node(k);
    let mut acc = QPoly::zero();
    let mut power = QPoly::one();
    for j in (k..=n).rev() {
        acc += &(tri.value(j as i64 - 1, k as i64 - 1) * &power);
        power = &power * &a;
    }
    Ok(acc)
}

/// Coefficient of `x^n` in `x^k / prod_{j=r..k} (1 - a_j x)`.
pub fn comtet_ogf_coeff(spec: &FamilySpec, k: usize, n: usize) -> Result<QPoly> {
    let column = comtet_ogf_column(spec, k, n)?;
    Ok(column[n - k].clone())
}

/// Coefficients of `x^k, x^(k+1), ..., x^n_max` in the same generating
/// function, from one truncated product of geometric series.
pub fn comtet_ogf_column(spec: &FamilySpec, k: usize, n_max: usize) -> Result<Vec<QPoly>> {
    require_second(spec)?;
    require(n_max >= k && k >= spec.r, || {
        format!("need n >= k >= r, got n={n_max} k={k} r={}", spec.r)
    })?;
    // the x^k factor is a shift, so the product only needs n_max - k orders
    let order = n_max - k;
    let mut series = Series::one(SeriesVar::X, order);
    for a in spec.nodes(spec.r, k + 1) {
        series = series.mul(&Series::geometric(SeriesVar::X, order, &a))?;
    }
    Ok(series.coeffs().to_vec())
}

/// `h_(n-k)(a_r, ..., a_k)`: the sum over compositions
/// `i_r + ... + i_k = n - k` of `prod a_l^(i_l)`.
pub fn comtet_explicit_sum(spec: &FamilySpec, n: usize, k: usize) -> Result<QPoly> {
    require_second(spec)?;
    require(spec.r <= k && k <= n, || format!("need r <= k <= n, got n={n} k={k} r={}", spec.r))?;
    Ok(complete_homogeneous(&spec.nodes(spec.r, k + 1), n - k))
}

/// Literal evaluation of the nested sums
/// `sum_{j_(k-1)=0}^{n-k} a_k^(n-k-j_(k-1)) sum_{j_(k-2)=0}^{j_(k-1)} ... a_r^(j_r)`.
///
/// Exponential in the depth; bounded by [`NESTED_MAX_DEPTH`] and [`NESTED_MAX_WIDTH`].
pub fn comtet_nested_sum(spec: &FamilySpec, n: usize, k: usize) -> Result<QPoly> {
    require_second(spec)?;
    let r = spec.r;
    require(r <= k && k <= n, || format!("need r <= k <= n, got n={n} k={k} r={r}"))?;
    if n - k > NESTED_MAX_DEPTH || k - r > NESTED_MAX_WIDTH {
        return Err(Error::GuardExceeded(format!(
            "nested sum needs n-k <= {NESTED_MAX_DEPTH} and k-r <= {NESTED_MAX_WIDTH}, got n-k={} k-r={}",
            n - k,
            k - r
        )));
    }
    let nodes = spec.nodes(r, k + 1);
    let powers: Vec<Vec<QPoly>> = nodes
        .iter()
        .map(|a| (0..=n - k).map(|e| a.pow(e)).collect())
        .collect();

    // level l sums over the prefix nodes[0..=l] with total exponent `total`
    fn level(powers: &[Vec<QPoly>], l: usize, total: usize) -> QPoly {
        if l == 0 {
            return powers[0][total].clone();
        }
        let mut acc = QPoly::zero();
        for j in 0..=total {
            acc += &(&powers[l][total - j] * &level(powers, l - 1, j));
        }
        acc
    }
    Ok(level(&powers, k - r, n - k))
}

/// `sum_{j=r..k} a_j^(n-r) / prod_{i != j} (a_j - a_i)` with `q = q0`.
///
/// Requires the evaluated nodes to be pairwise distinct.
pub fn comtet_partial_fraction(spec: &FamilySpec, n: usize, k: usize, q0: &BigRational) -> Result<BigRational> {
    require_second(spec)?;
    let r = spec.r;
    require(r <= k && k <= n, || format!("need r <= k <= n, got n={n} k={k} r={r}"))?;
    let vals: Vec<BigRational> = spec.nodes(r, k + 1).iter().map(|a| a.eval(q0)).collect();
    for i in 0..vals.len() {
        for j in i + 1..vals.len() {
            if vals[i] == vals[j] {
                return Err(Error::DegenerateNodes { i: r + i, j: r + j });
            }
        }
    }
    let mut total = BigRational::zero();
    for (j, aj) in vals.iter().enumerate() {
        let denom = vals
            .iter()
            .enumerate()
            .filter(|&(i, _)| i != j)
            .fold(BigRational::one(), |acc, (_, ai)| acc * (aj - ai));
        total += num_traits::pow(aj.clone(), n - r) / denom;
    }
    Ok(total)
}

/// Coefficients of `x^(k-r)`, `k = r..=n`, in `prod_{j=r..n-1} (x ± a_j)`;
/// the sign is `+` for the unsigned and `-` for the signed kind.
pub fn lancaster_product_coeffs(spec: &FamilySpec, n: usize) -> Result<Vec<QPoly>> {
    require_first(spec)?;
    let r = spec.r;
    require(n >= r, || format!("n = {n} < r = {r}"))?;
    let prod = spec.nodes(r, n).iter().fold(XPoly::one(), |acc, a| match spec.kind {
        Kind::FirstKindSigned => acc.mul_linear(&-a),
        _ => acc.mul_linear(a),
    });
    Ok((0..=n - r).map(|i| prod.coeff(i)).collect())
}

/// `sum_{j=k..n} (±1)^(n-j) c(j-1, k-1) prod_{i=j..n-1} a_i` for `n >= k > r`.
pub fn lancaster_complete_recursion(tri: &mut Triangle, n: usize, k: usize) -> Result<QPoly> {
    let spec = tri.spec().clone();
    require_first(&spec)?;
    require(n >= k && k > spec.r, || format!("need n >= k > r, got n={n} k={k} r={}", spec.r))?;
    let mut acc = QPoly::zero();
    let mut tail = QPoly::one();
    for j in (k..=n).rev() {
        let term = tri.value(j as i64 - 1, k as i64 - 1) * &tail;
        acc += &signed(spec.kind, n - j, term);
        if j > k {
            tail = &tail * &spec.node(j - 1);
        }
    }
    Ok(acc)
}

/// `prod_{j=r..n-1} a_j * sum_{r <= i_(r+1) < ... < i_k <= n-1} 1 / prod a_(i_l)`,
/// evaluated division-free as `e_(n-k)(a_r..a_(n-1))` (each reciprocal
/// product picks out the complementary `(n-k)`-subset), times `(-1)^(n-k)`
/// for the signed kind.
pub fn lancaster_explicit(spec: &FamilySpec, n: usize, k: usize) -> Result<QPoly> {
    require_first(spec)?;
    require(spec.r <= k && k <= n, || format!("need r <= k <= n, got n={n} k={k} r={}", spec.r))?;
    let e = elem_symmetric(&spec.nodes(spec.r, n), n - k)?;
    Ok(signed(spec.kind, n - k, e))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::PSpec;
    use crate::triangles::QType;
    use num_bigint::BigInt;

    fn spec(kind: Kind, p: &[u64], r: usize) -> FamilySpec {
        FamilySpec::new(kind, QType::TypeII, PSpec::new(p.to_vec()).unwrap(), r)
    }

    fn ones(v: &[QPoly]) -> Vec<i64> {
        v.iter().map(|c| i64::try_from(c.at_one()).unwrap()).collect()
    }

    fn rat(n: i64, d: i64) -> BigRational {
        BigRational::new(n.into(), d.into())
    }

    #[test]
    fn basis_coeffs_examples() {
        let s = spec(Kind::SecondKind, &[0, 1], 0);
        assert_eq!(comtet_basis_coeffs(&s, 0).unwrap(), vec![QPoly::one()]);
        assert_eq!(ones(&comtet_basis_coeffs(&s, 3).unwrap()), vec![0, 1, 3, 1]);
        let s = spec(Kind::SecondKind, &[1, 0, 3], 2);
        assert_eq!(comtet_basis_coeffs(&s, 3).unwrap(), vec![s.node(2), QPoly::one()]);
    }

    #[test]
    fn complete_recursion_examples() {
        let mut t = Triangle::new(spec(Kind::SecondKind, &[0, 1], 0));
        assert!(comtet_complete_recursion(&mut t, 3, 1).unwrap().is_one());
        assert!(comtet_complete_recursion(&mut t, 4, 4).unwrap().is_one());
        let mut t = Triangle::new(spec(Kind::SecondKind, &[1, 2], 1));
        let want = t.value(3, 2);
        assert_eq!(comtet_complete_recursion(&mut t, 3, 2).unwrap(), want);
        assert!(comtet_complete_recursion(&mut t, 3, 1).is_err());
    }

    #[test]
    fn ogf_examples() {
        let s = spec(Kind::SecondKind, &[1, 0, 3], 1);
        assert_eq!(comtet_ogf_coeff(&s, 1, 5).unwrap(), s.node(1).pow(4));
        assert!(comtet_ogf_coeff(&s, 3, 3).unwrap().is_one());
        let s = spec(Kind::SecondKind, &[0, 1], 0);
        assert_eq!(comtet_ogf_coeff(&s, 2, 4).unwrap().at_one(), BigInt::from(7));
    }

    #[test]
    fn explicit_and_nested_examples() {
        let s = spec(Kind::SecondKind, &[0, 1], 0);
        assert_eq!(comtet_explicit_sum(&s, 3, 2).unwrap(), QPoly::from_i64s(&[2, 1]));
        assert!(comtet_explicit_sum(&s, 5, 5).unwrap().is_one());
        let s2 = spec(Kind::SecondKind, &[1, 2], 1);
        assert_eq!(comtet_explicit_sum(&s2, 6, 1).unwrap(), s2.node(1).pow(5));
        assert!(comtet_nested_sum(&s, 4, 4).unwrap().is_one());
        assert_eq!(comtet_nested_sum(&s, 3, 2).unwrap().at_one(), BigInt::from(3));
        assert!(matches!(comtet_nested_sum(&s, 10, 2), Err(Error::GuardExceeded(_))));
        assert!(matches!(comtet_nested_sum(&s, 7, 6), Err(Error::GuardExceeded(_))));
    }

    #[test]
    fn partial_fraction_examples() {
        let s = spec(Kind::SecondKind, &[0, 1], 0);
        assert_eq!(comtet_partial_fraction(&s, 4, 2, &rat(1, 1)).unwrap(), rat(7, 1));
        assert_eq!(comtet_partial_fraction(&s, 3, 1, &rat(1, 1)).unwrap(), rat(1, 1));
        let s = spec(Kind::SecondKind, &[1, 2], 1);
        let a = s.node(1).eval(&rat(3, 2));
        assert_eq!(comtet_partial_fraction(&s, 5, 1, &rat(3, 2)).unwrap(), num_traits::pow(a, 4));
        let c = spec(Kind::SecondKind, &[1], 0);
        assert_eq!(
            comtet_partial_fraction(&c, 3, 1, &rat(1, 1)),
            Err(Error::DegenerateNodes { i: 0, j: 1 })
        );
    }

    #[test]
    fn lancaster_examples() {
        let u = spec(Kind::FirstKindUnsigned, &[0, 1], 0);
        assert_eq!(lancaster_product_coeffs(&u, 0).unwrap(), vec![QPoly::one()]);
        assert_eq!(ones(&lancaster_product_coeffs(&u, 3).unwrap()), vec![0, 2, 3, 1]);
        let s = u.with_kind(Kind::FirstKindSigned);
        assert_eq!(ones(&lancaster_product_coeffs(&s, 3).unwrap()), vec![0, 2, -3, 1]);

        let mut tu = Triangle::new(u.clone());
        assert_eq!(lancaster_complete_recursion(&mut tu, 4, 2).unwrap().at_one(), BigInt::from(11));
        assert!(lancaster_complete_recursion(&mut tu, 3, 3).unwrap().is_one());
        let mut ts = Triangle::new(s.clone());
        assert_eq!(lancaster_complete_recursion(&mut ts, 4, 2).unwrap().at_one(), BigInt::from(11));

        assert!(lancaster_explicit(&u, 5, 5).unwrap().is_one());
        let r1 = spec(Kind::FirstKindUnsigned, &[0, 1], 1);
        assert_eq!(lancaster_explicit(&r1, 4, 2).unwrap().at_one(), BigInt::from(11));
        let prod: QPoly = r1.nodes(1, 4).into_iter().product();
        assert_eq!(lancaster_explicit(&r1, 4, 1).unwrap(), prod);
        assert!(lancaster_explicit(&spec(Kind::SecondKind, &[0, 1], 0), 3, 1).is_err());
    }

    #[test]
    fn basis_round_trip() {
        let s = spec(Kind::SecondKind, &[1, 0, 3], 1);
        for n in 1..=7 {
            let c = comtet_basis_coeffs(&s, n).unwrap();
            assert_eq!(expand_in_basis(&s, &c), XPoly::x_pow(n - 1));
        }
    }
}
