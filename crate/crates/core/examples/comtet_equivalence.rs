//! Five routes to the same second-kind entry: recursion, basis change,
//! generating function, complete homogeneous sum, and nested sums.

use qrstirling::characterizations::{
    comtet_basis_coeffs, comtet_complete_recursion, comtet_explicit_sum, comtet_nested_sum, comtet_ogf_coeff,
};
use qrstirling::{FamilySpec, Kind, QType, Triangle};

fn main() {
    let spec = FamilySpec::new(Kind::SecondKind, QType::TypeII, "2x+1".parse().unwrap(), 1);
    let (n, k) = (6, 3);
    let mut t = Triangle::new(spec.clone());

    let routes = [
        ("recursion", t.value(n as i64, k as i64)),
        ("basis change", comtet_basis_coeffs(&spec, n).unwrap()[k - spec.r].clone()),
        ("complete recursion", comtet_complete_recursion(&mut t, n, k).unwrap()),
        ("generating function", comtet_ogf_coeff(&spec, k, n).unwrap()),
        ("h_(n-k) of the nodes", comtet_explicit_sum(&spec, n, k).unwrap()),
        ("nested sums", comtet_nested_sum(&spec, n, k).unwrap()),
    ];
    println!("S({n},{k}) for p = 2x+1, r = 1:");
    for (name, value) in &routes {
        println!("  {name:>22}: {value}");
    }
    assert!(routes.iter().all(|(_, v)| *v == routes[0].1));
    println!("all routes agree");
}
