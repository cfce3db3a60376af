use super::qpoly::QPoly;
use crate::error::{Error, Result};

/// Elementary symmetric polynomial `e_m` of `values`, by the one-pass table
/// update `e_j <- e_j + v * e_(j-1)`.
pub fn elem_symmetric(values: &[QPoly], m: usize) -> Result<QPoly> {
    if m > values.len() {
        return Err(Error::SymmetricDegree { m, len: values.len() });
    }
    let mut e = vec![QPoly::zero(); m + 1];
    e[0] = QPoly::one();
    let len = values.len();
    for (seen, v) in values.iter().enumerate() {
        // entries below `lowest` can no longer grow into e_m
        let lowest = (m + seen + 1).saturating_sub(len).max(1);
        for j in (lowest..=m.min(seen + 1)).rev() {
            let term = v * &e[j - 1];
            e[j] += &term;
        }
    }
    Ok(e.swap_remove(m))
}

/// Complete homogeneous symmetric polynomial `h_m` of `values`: the sum over
/// all compositions of `m` into `values.len()` parts of the product of powers.
/// Computed by the prefix recurrence `h_m(v_1..v_j) = h_m(v_1..v_(j-1)) + v_j * h_(m-1)(v_1..v_j)`.
pub fn complete_homogeneous(values: &[QPoly], m: usize) -> QPoly {
    if values.is_empty() {
        return if m == 0 { QPoly::one() } else { QPoly::zero() };
    }
    let mut h = vec![QPoly::zero(); m + 1];
    h[0] = QPoly::one();
    for v in values {
        for d in 1..=m {
            let term = v * &h[d - 1];
            h[d] += &term;
        }
    }
    h.swap_remove(m)
}
