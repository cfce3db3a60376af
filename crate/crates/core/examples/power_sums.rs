//! Power sums of the nodes from a weighted convolution of both kinds.

use qrstirling::identities::{power_sum_lhs, power_sum_rhs};
use qrstirling::{PSpec, QType};

fn main() {
    let p = PSpec::x();
    for k in 1..=3 {
        let lhs = power_sum_lhs(&p, 0, 3, k, QType::TypeII).unwrap();
        let rhs = power_sum_rhs(&p, 0, 3, k, QType::TypeII).unwrap();
        println!("k={k}: sum [j]_q^{k} = {lhs}");
        println!("      convolution = {rhs}");
        println!("      at q=1: {}", rhs.at_one());
    }
}
