//! Second-kind values at a rational q from a partial-fraction sum, and the
//! error raised when two nodes coincide.

use qrstirling::characterizations::comtet_partial_fraction;
use qrstirling::{BigRational, Error, FamilySpec, Kind, PSpec, QType, Triangle};

fn main() {
    let spec = FamilySpec::new(Kind::SecondKind, QType::TypeI, "3x^2+1".parse().unwrap(), 0);
    let mut t = Triangle::new(spec.clone());
    let q0: BigRational = qrstirling::cli::parse_rational("3/2").unwrap();
    for (n, k) in [(4, 2), (6, 3), (8, 1)] {
        let pf = comtet_partial_fraction(&spec, n, k, &q0).unwrap();
        let direct = t.eval_at(n as i64, k as i64, &q0);
        println!("S({n},{k}) at q=3/2: {pf} (recursion: {direct})");
    }

    let flat = FamilySpec::new(Kind::SecondKind, QType::TypeII, PSpec::constant(1).unwrap(), 0);
    match comtet_partial_fraction(&flat, 4, 2, &q0) {
        Err(Error::DegenerateNodes { i, j }) => println!("p = 1: nodes {i} and {j} coincide"),
        other => println!("unexpected: {other:?}"),
    }
}
