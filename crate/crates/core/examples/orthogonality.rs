//! The second-kind and signed first-kind matrices are mutually inverse.

use qrstirling::identities::orthogonality_defect;
use qrstirling::QType;

fn main() {
    let p = "x^2+1".parse().unwrap();
    let (r, n) = (1, 6);
    for l in r..=n {
        let (a, b) = orthogonality_defect(&p, r, n, l, QType::TypeI).unwrap();
        println!("n={n} l={l}: S*s - delta = {a}, s*S - delta = {b}");
    }
}
