use super::qpoly::QPoly;

/// Polynomial in an auxiliary variable `x` whose coefficients are polynomials
/// in `q`. Lowest power of `x` first, no trailing zero coefficients.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct XPoly {
    coeffs: Vec<QPoly>,
}

impl XPoly {
    pub fn zero() -> Self {
        XPoly { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        XPoly::from_coeffs(vec![QPoly::one()])
    }

    /// `x^d`.
    pub fn x_pow(d: usize) -> Self {
        let mut coeffs = vec![QPoly::zero(); d];
        coeffs.push(QPoly::one());
        XPoly { coeffs }
    }

    pub fn from_coeffs(mut coeffs: Vec<QPoly>) -> Self {
        while coeffs.last().is_some_and(QPoly::is_zero) {
            coeffs.pop();
        }
        XPoly { coeffs }
    }

    pub fn coeffs(&self) -> &[QPoly] {
        &self.coeffs
    }

    pub fn coeff(&self, i: usize) -> QPoly {
        self.coeffs.get(i).cloned().unwrap_or_default()
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Multiply by the linear factor `x + c`.
    pub fn mul_linear(&self, c: &QPoly) -> XPoly {
        if self.is_zero() {
            return XPoly::zero();
        }
        let mut out = vec![QPoly::zero(); self.coeffs.len() + 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            out[i + 1] += a;
            out[i] += &(a * c);
        }
        XPoly::from_coeffs(out)
    }

    pub fn add_scaled(&self, other: &XPoly, s: &QPoly) -> XPoly {
        let len = self.coeffs.len().max(other.coeffs.len());
        let out = (0..len).map(|i| self.coeff(i) + &other.coeff(i) * s).collect();
        XPoly::from_coeffs(out)
    }

    pub fn sub_scaled(&self, other: &XPoly, s: &QPoly) -> XPoly {
        self.add_scaled(other, &-s)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn linear_products() {
        // (x - 1)(x - 2) = 2 - 3x + x^2
        let p = XPoly::one()
            .mul_linear(&QPoly::constant(-1))
            .mul_linear(&QPoly::constant(-2));
        assert_eq!(p.coeffs(), &[QPoly::constant(2), QPoly::constant(-3), QPoly::one()]);
        let back = p.sub_scaled(&XPoly::x_pow(2), &QPoly::one());
        assert_eq!(back.degree(), Some(1));
        assert!(p.sub_scaled(&p, &QPoly::one()).is_zero());
    }
}
