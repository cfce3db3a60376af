use num_bigint::{BigInt, BigUint};
use num_traits::{ToPrimitive, Zero};

use super::qpoly::{q_bracket, QPoly};
use crate::error::{Error, Result};

/// The polynomial `p(x)` that parameterizes a family: non-negative integer
/// coefficients, lowest degree first, not identically zero.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct PSpec {
    coeffs: Vec<u64>,
}

impl PSpec {
    pub fn new(mut coeffs: Vec<u64>) -> Result<Self> {
        while coeffs.last() == Some(&0) {
            coeffs.pop();
        }
        if coeffs.is_empty() {
            return Err(Error::ZeroPolynomial);
        }
        Ok(PSpec { coeffs })
    }

    /// `p(x) = x`.
    pub fn x() -> Self {
        PSpec { coeffs: vec![0, 1] }
    }

    /// `p(x) = x^u` for `u >= 0`.
    pub fn monomial(u: usize) -> Self {
        let mut coeffs = vec![0; u];
        coeffs.push(1);
        PSpec { coeffs }
    }

    /// `p(x) = c` for `c > 0`.
    pub fn constant(c: u64) -> Result<Self> {
        PSpec::new(vec![c])
    }

    pub fn coeffs(&self) -> &[u64] {
        &self.coeffs
    }

    pub fn degree(&self) -> usize {
        self.coeffs.len() - 1
    }

    /// Exact `p(n)`.
    pub fn eval(&self, n: u64) -> BigUint {
        let n = BigUint::from(n);
        self.coeffs
            .iter()
            .rev()
            .fold(BigUint::zero(), |acc, &c| acc * &n + c)
    }

    /// `p(n)` as a length, for materializing `[p(n)]_q`.
    fn eval_len(&self, n: u64) -> usize {
        self.eval(n)
            .to_usize()
            .expect("p(n) too large to build [p(n)]_q")
    }
}

pub fn p_eval_int(p: &PSpec, n: u64) -> BigUint {
    p.eval(n)
}

/// `[p(n)]_q`, the type II multiplier.
pub fn bracket_of_p(p: &PSpec, n: u64) -> QPoly {
    q_bracket(p.eval_len(n))
}

/// `p([n]_q)`, the type I multiplier.
pub fn p_of_bracket(p: &PSpec, n: u64) -> QPoly {
    let inner = q_bracket(n as usize);
    p.coeffs.iter().rev().fold(QPoly::zero(), |acc, &c| {
        let mut next = &acc * &inner;
        next += &QPoly::constant(BigInt::from(c));
        next
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(c: &[u64]) -> PSpec {
        PSpec::new(c.to_vec()).unwrap()
    }

    #[test]
    fn eval_examples() {
        assert_eq!(p_eval_int(&p(&[1, 2]), 3), BigUint::from(7u32));
        assert_eq!(p_eval_int(&PSpec::x(), 0), BigUint::zero());
        assert_eq!(p_eval_int(&p(&[1, 0, 3]), 2), BigUint::from(13u32));
    }

    #[test]
    fn zero_rejected_and_trimmed() {
        assert_eq!(PSpec::new(vec![0, 0]), Err(Error::ZeroPolynomial));
        assert_eq!(PSpec::new(vec![2, 1, 0]).unwrap().coeffs(), &[2, 1]);
    }

    #[test]
    fn bracket_of_p_examples() {
        assert_eq!(bracket_of_p(&p(&[1, 2]), 1), QPoly::from_i64s(&[1, 1, 1]));
        assert!(bracket_of_p(&PSpec::x(), 0).is_zero());
        assert_eq!(bracket_of_p(&PSpec::x(), 2).at_one(), BigInt::from(2));
    }

    #[test]
    fn p_of_bracket_examples() {
        assert_eq!(p_of_bracket(&PSpec::monomial(2), 2), QPoly::from_i64s(&[1, 2, 1]));
        assert_eq!(p_of_bracket(&PSpec::x(), 3), q_bracket(3));
        for n in 0..8 {
            let q = p(&[1, 0, 3]);
            assert_eq!(p_of_bracket(&q, n).at_one(), BigInt::from(q.eval(n)));
            assert!(p_of_bracket(&q, n).coeffs().iter().all(|c| c >= &BigInt::zero()));
        }
    }
}
