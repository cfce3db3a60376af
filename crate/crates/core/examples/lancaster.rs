//! First-kind triangles from the product `prod (x + a_j)` and from
//! elementary symmetric polynomials of the nodes.

use qrstirling::characterizations::{lancaster_explicit, lancaster_product_coeffs};
use qrstirling::{FamilySpec, Kind, QType, Triangle};

fn main() {
    for kind in [Kind::FirstKindUnsigned, Kind::FirstKindSigned] {
        let spec = FamilySpec::new(kind, QType::TypeII, "x".parse().unwrap(), 0);
        let mut t = Triangle::new(spec.clone());
        let n = 4;
        let product = lancaster_product_coeffs(&spec, n).unwrap();
        println!("{kind}, n = {n}:");
        for (k, c) in product.iter().enumerate() {
            let e = lancaster_explicit(&spec, n, k).unwrap();
            println!("  k={k}: product {c}, e-form {e}, recursion {}", t.value(n as i64, k as i64));
        }
    }
}
