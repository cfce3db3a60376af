use std::fmt::Debug;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use super::qpoly::QPoly;
use crate::error::{Error, Result};

/// Ring operations a series coefficient has to support.
pub trait Coefficient: Clone + Debug + PartialEq {
    fn zero() -> Self;
    fn one() -> Self;
    fn is_zero(&self) -> bool;
    fn add(&self, rhs: &Self) -> Self;
    fn sub(&self, rhs: &Self) -> Self;
    fn mul(&self, rhs: &Self) -> Self;
}

/// Coefficients that can be divided by a positive integer (needed by `exp`).
pub trait FieldCoefficient: Coefficient {
    fn div_int(&self, d: usize) -> Self;
    fn mul_int(&self, k: usize) -> Self;
}

impl Coefficient for QPoly {
    fn zero() -> Self {
        QPoly::zero()
    }
    fn one() -> Self {
        QPoly::one()
    }
    fn is_zero(&self) -> bool {
        QPoly::is_zero(self)
    }
    fn add(&self, rhs: &Self) -> Self {
        self + rhs
    }
    fn sub(&self, rhs: &Self) -> Self {
        self - rhs
    }
    fn mul(&self, rhs: &Self) -> Self {
        self * rhs
    }
}

impl Coefficient for BigRational {
    fn zero() -> Self {
        Zero::zero()
    }
    fn one() -> Self {
        One::one()
    }
    fn is_zero(&self) -> bool {
        Zero::is_zero(self)
    }
    fn add(&self, rhs: &Self) -> Self {
        self + rhs
    }
    fn sub(&self, rhs: &Self) -> Self {
        self - rhs
    }
    fn mul(&self, rhs: &Self) -> Self {
        self * rhs
    }
}

impl FieldCoefficient for BigRational {
    fn div_int(&self, d: usize) -> Self {
        self / BigRational::from_integer(BigInt::from(d))
    }
    fn mul_int(&self, k: usize) -> Self {
        self * BigRational::from_integer(BigInt::from(k))
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SeriesVar {
    T,
    X,
}

impl SeriesVar {
    fn symbol(self) -> char {
        match self {
            SeriesVar::T => 't',
            SeriesVar::X => 'x',
        }
    }
}

/// Power series truncated after the `order`-th power.
///
/// Coefficients are the plain coefficients of `t^n`; exponential generating
/// functions are compared by dividing by `n!` at the call site.
#[derive(Clone, Debug, PartialEq)]
pub struct Series<C> {
    var: SeriesVar,
    order: usize,
    coeffs: Vec<C>,
}

impl<C: Coefficient> Series<C> {
    pub fn zero(var: SeriesVar, order: usize) -> Self {
        Series {
            var,
            order,
            coeffs: vec![C::zero(); order + 1],
        }
    }

    pub fn one(var: SeriesVar, order: usize) -> Self {
        Series::monomial(var, order, C::one(), 0)
    }

    /// `c * var^deg` (zero if `deg` is past the order).
    pub fn monomial(var: SeriesVar, order: usize, c: C, deg: usize) -> Self {
        let mut s = Series::zero(var, order);
        if deg <= order {
            s.coeffs[deg] = c;
        }
        s
    }

    /// Takes the listed coefficients, zero-padding or truncating to `order`.
    pub fn from_coeffs(var: SeriesVar, order: usize, mut coeffs: Vec<C>) -> Self {
        coeffs.resize(order + 1, C::zero());
        Series { var, order, coeffs }
    }

    /// `1 / (1 - a var) = sum a^i var^i`.
    pub fn geometric(var: SeriesVar, order: usize, a: &C) -> Self {
        let mut coeffs = Vec::with_capacity(order + 1);
        let mut cur = C::one();
        for _ in 0..=order {
            let next = cur.mul(a);
            coeffs.push(cur);
            cur = next;
        }
        Series { var, order, coeffs }
    }

    pub fn var(&self) -> SeriesVar {
        self.var
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn coeffs(&self) -> &[C] {
        &self.coeffs
    }

    /// Coefficient of `var^n`; `None` past the truncation order.
    pub fn coeff_at(&self, n: usize) -> Option<&C> {
        self.coeffs.get(n)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(C::is_zero)
    }

    fn check(&self, other: &Self) -> Result<()> {
        if self.var != other.var {
            return Err(Error::VariableMismatch {
                left: self.var.symbol(),
                right: other.var.symbol(),
            });
        }
        if self.order != other.order {
            return Err(Error::OrderMismatch {
                left: self.order,
                right: other.order,
            });
        }
        Ok(())
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.check(other)?;
        Ok(self.zip_with(other, C::add))
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.check(other)?;
        Ok(self.zip_with(other, C::sub))
    }

    fn zip_with(&self, other: &Self, f: impl Fn(&C, &C) -> C) -> Self {
        Series {
            var: self.var,
            order: self.order,
            coeffs: self.coeffs.iter().zip(&other.coeffs).map(|(a, b)| f(a, b)).collect(),
        }
    }

    pub fn mul(&self, other: &Self) -> Result<Self> {
        self.check(other)?;
        Ok(self.mul_unchecked(other))
    }

    fn mul_unchecked(&self, other: &Self) -> Self {
        let mut out = Series::<C>::zero(self.var, self.order);
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs[..=self.order - i].iter().enumerate() {
                if !b.is_zero() {
                    out.coeffs[i + j] = out.coeffs[i + j].add(&a.mul(b));
                }
            }
        }
        out
    }

    /// Power by repeated squaring.
    pub fn pow(&self, mut e: usize) -> Self {
        let mut base = self.clone();
        let mut acc = Series::one(self.var, self.order);
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul_unchecked(&base);
            }
            e >>= 1;
            if e > 0 {
                base = base.mul_unchecked(&base);
            }
        }
        acc
    }

    pub fn scale(&self, c: &C) -> Self {
        Series {
            var: self.var,
            order: self.order,
            coeffs: self.coeffs.iter().map(|a| a.mul(c)).collect(),
        }
    }
}

impl<C: FieldCoefficient> Series<C> {
    /// `exp(f)` for `f(0) = 0`, from `n E_n = sum_{k=1..n} k f_k E_(n-k)`.
    pub fn exp(&self) -> Result<Self> {
        if !self.coeffs[0].is_zero() {
            return Err(Error::NonzeroConstantTerm);
        }
        let mut e: Vec<C> = Vec::with_capacity(self.order + 1);
        e.push(C::one());
        for n in 1..=self.order {
            let mut acc = C::zero();
            for k in 1..=n {
                let f = &self.coeffs[k];
                if f.is_zero() {
                    continue;
                }
                acc = acc.add(&f.mul(&e[n - k]).mul_int(k));
            }
            e.push(acc.div_int(n));
        }
        Ok(Series {
            var: self.var,
            order: self.order,
            coeffs: e,
        })
    }
}
