//! Print the first rows of several q,r-poly-Stirling triangles.
//!
//! ```text
//! cargo run --example q_triangles
//! ```

use qrstirling::{FamilySpec, Kind, PSpec, QType, Triangle};

fn show(title: &str, spec: FamilySpec, n_max: usize) {
    println!("{title}");
    let r = spec.r;
    let mut t = Triangle::new(spec);
    for n in r..=n_max {
        let row: Vec<String> = t.row(n).unwrap().iter().map(ToString::to_string).collect();
        println!("  n={n}: {}", row.join(" | "));
    }
    println!();
}

fn main() {
    show(
        "q-Stirling numbers of the second kind (p = x, type II)",
        FamilySpec::new(Kind::SecondKind, QType::TypeII, PSpec::x(), 0),
        5,
    );
    show(
        "signed first kind, p = x, r = 1",
        FamilySpec::new(Kind::FirstKindSigned, QType::TypeII, PSpec::x(), 1),
        5,
    );
    let p: PSpec = "x^2".parse().unwrap();
    show(
        "second kind with p = x^2, type I (multiplier [k]_q^2)",
        FamilySpec::new(Kind::SecondKind, QType::TypeI, p.clone(), 0),
        4,
    );
    show(
        "second kind with p = x^2, type II (multiplier [k^2]_q)",
        FamilySpec::new(Kind::SecondKind, QType::TypeII, p, 0),
        4,
    );
}
