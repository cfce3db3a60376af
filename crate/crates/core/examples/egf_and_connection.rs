//! Exponential generating function and connection constants for the type B
//! r-Stirling numbers, checked as exact defects.

use qrstirling::typeb::{connection_defect, egf_defect};

fn main() {
    for k in 0..=3 {
        for r in 0..=2 {
            let d = egf_defect(k, r, 10).unwrap();
            let zero = d.coeffs().iter().all(|c| *c.numer() == 0.into());
            println!("egf k={k} r={r}: defect zero through t^10: {zero}");
        }
    }
    for r in 0..=2 {
        println!("(x+{})^6 connection defect: {}", 2 * r, connection_defect(6, r));
    }
}
