use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Zero;

use crate::algebra::PSpec;
use crate::error::{Error, Result};

struct Cursor<'a> {
    src: &'a [u8],
    pos: usize,
}

impl Cursor<'_> {
    fn skip_ws(&mut self) {
        while self.src.get(self.pos).is_some_and(u8::is_ascii_whitespace) {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.src.get(self.pos).copied()
    }

    fn expected(&self, what: &str) -> Error {
        Error::Parse {
            pos: self.pos,
            expected: what.to_string(),
        }
    }

    fn number(&mut self, what: &str) -> Result<Option<u64>> {
        match self.peek() {
            Some(b'-') => Err(Error::NegativeCoefficient { pos: self.pos }),
            Some(c) if c.is_ascii_digit() => {
                let start = self.pos;
                while self.src.get(self.pos).is_some_and(u8::is_ascii_digit) {
                    self.pos += 1;
                }
                let digits = std::str::from_utf8(&self.src[start..self.pos]).expect("ascii digits");
                digits.parse().map(Some).map_err(|_| Error::Parse {
                    pos: start,
                    expected: format!("{what} that fits in 64 bits"),
                })
            }
            _ => Ok(None),
        }
    }
}

/// Parses `term ("+" term)*` with `term = coefficient? "x" ("^" exponent)? | coefficient`.
/// Repeated exponents are summed.
pub fn parse_pspec(text: &str) -> Result<PSpec> {
    let mut cur = Cursor {
        src: text.as_bytes(),
        pos: 0,
    };
    let mut coeffs: Vec<u64> = Vec::new();
    loop {
        let coeff = cur.number("coefficient")?;
        let exp = if cur.peek() == Some(b'x') {
            cur.pos += 1;
            if cur.peek() == Some(b'^') {
                cur.pos += 1;
                match cur.number("exponent")? {
                    Some(e) => e,
                    None => return Err(cur.expected("exponent")),
                }
            } else {
                1
            }
        } else if coeff.is_some() {
            0
        } else {
            return Err(cur.expected("coefficient or 'x'"));
        };
        let exp = usize::try_from(exp).map_err(|_| cur.expected("smaller exponent"))?;
        if coeffs.len() <= exp {
            coeffs.resize(exp + 1, 0);
        }
        coeffs[exp] = coeffs[exp]
            .checked_add(coeff.unwrap_or(1))
            .ok_or_else(|| cur.expected("coefficients that fit in 64 bits"))?;
        match cur.peek() {
            None => break,
            Some(b'+') => cur.pos += 1,
            Some(b'-') => return Err(Error::NegativeCoefficient { pos: cur.pos }),
            Some(_) => return Err(cur.expected("'+' or end of input")),
        }
    }
    PSpec::new(coeffs)
}

/// Highest power first: `3x^2+1`, `x`, `2x+1`.
pub fn render_pspec(p: &PSpec) -> String {
    let mut terms = Vec::new();
    for (i, &c) in p.coeffs().iter().enumerate().rev() {
        if c == 0 {
            continue;
        }
        let coeff = if c == 1 && i > 0 { String::new() } else { c.to_string() };
        terms.push(match i {
            0 => coeff,
            1 => format!("{coeff}x"),
            _ => format!("{coeff}x^{i}"),
        });
    }
    terms.join("+")
}

impl FromStr for PSpec {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        parse_pspec(s)
    }
}

impl fmt::Display for PSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&render_pspec(self))
    }
}

/// `a/b` or `a`, optionally signed.
pub fn parse_rational(text: &str) -> Result<BigRational> {
    let bad = || Error::InvalidRational(text.to_string());
    let t = text.trim();
    let (num, den) = match t.split_once('/') {
        Some((a, b)) => (a.trim(), b.trim()),
        None => (t, "1"),
    };
    let num: BigInt = num.parse().map_err(|_| bad())?;
    let den: BigInt = den.parse().map_err(|_| bad())?;
    if den.is_zero() {
        return Err(bad());
    }
    Ok(BigRational::new(num, den))
}

/// How `q` is treated: as an indeterminate, or replaced by a rational.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub enum QMode {
    #[default]
    Symbolic,
    Numeric(BigRational),
}

impl fmt::Display for QMode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            QMode::Symbolic => f.write_str("symbolic"),
            QMode::Numeric(v) => write!(f, "{v}"),
        }
    }
}

pub fn parse_q(text: &str) -> Result<QMode> {
    if text.trim() == "symbolic" {
        Ok(QMode::Symbolic)
    } else {
        parse_rational(text).map(QMode::Numeric)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn pspec_examples() {
        assert_eq!(parse_pspec("2x+1").unwrap().coeffs(), &[1, 2]);
        assert_eq!(parse_pspec("3x^2+1").unwrap().coeffs(), &[1, 0, 3]);
        assert_eq!(parse_pspec("x^2+x^2").unwrap().coeffs(), &[0, 0, 2]);
        assert_eq!(parse_pspec(" x ").unwrap(), PSpec::x());
        assert_eq!(parse_pspec("1 + 2 x").unwrap().coeffs(), &[1, 2]);
        assert_eq!(parse_pspec("x^0").unwrap().coeffs(), &[1]);
    }

    #[test]
    fn pspec_errors() {
        assert_eq!(parse_pspec("-x"), Err(Error::NegativeCoefficient { pos: 0 }));
        assert_eq!(parse_pspec("x-1"), Err(Error::NegativeCoefficient { pos: 1 }));
        assert_eq!(parse_pspec("x^-2"), Err(Error::NegativeCoefficient { pos: 2 }));
        assert_eq!(parse_pspec("0"), Err(Error::ZeroPolynomial));
        assert_eq!(parse_pspec("0x^3+0"), Err(Error::ZeroPolynomial));
        assert!(matches!(parse_pspec(""), Err(Error::Parse { pos: 0, .. })));
        assert!(matches!(parse_pspec("x^"), Err(Error::Parse { pos: 2, .. })));
        assert!(matches!(parse_pspec("2y"), Err(Error::Parse { pos: 1, .. })));
        assert!(matches!(parse_pspec("x+"), Err(Error::Parse { pos: 2, .. })));
        assert!(matches!(parse_pspec("99999999999999999999x"), Err(Error::Parse { .. })));
    }

    #[test]
    fn render_round_trips_grid() {
        for s in ["x", "2x+1", "x^2", "3x^2+1", "5", "x^4+7x+1"] {
            let p = parse_pspec(s).unwrap();
            assert_eq!(render_pspec(&p), s);
            assert_eq!(parse_pspec(&render_pspec(&p)).unwrap(), p);
        }
    }

    #[test]
    fn rationals() {
        assert_eq!(parse_rational("3/2").unwrap(), BigRational::new(3.into(), 2.into()));
        assert_eq!(parse_rational("4").unwrap(), BigRational::from_integer(4.into()));
        assert_eq!(parse_rational("6/4").unwrap(), BigRational::new(3.into(), 2.into()));
        assert!(parse_rational("1/0").is_err());
        assert!(parse_rational("a").is_err());
        assert_eq!(parse_q("symbolic").unwrap(), QMode::Symbolic);
        assert_eq!(parse_q("2").unwrap().to_string(), "2");
    }
}
