//! Acceptance criteria 1-10, one PASS/FAIL line each. Every comparison is
//! exact; the time budget is part of each criterion.

use std::process::{Command, ExitCode};
use std::time::{Duration, Instant};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Zero;

use qrstirling::algebra::XPoly;
use qrstirling::characterizations::{
    comtet_basis_coeffs, comtet_complete_recursion, comtet_explicit_sum, comtet_nested_sum, comtet_ogf_coeff,
    comtet_partial_fraction, expand_in_basis, lancaster_complete_recursion, lancaster_explicit,
    lancaster_product_coeffs, NESTED_MAX_DEPTH, NESTED_MAX_WIDTH,
};
use qrstirling::cli::{cmd_verify, Suite, VerifyOptions};
use qrstirling::identities::{mixed_relation_defect, orthogonality_defect, power_sum_lhs, power_sum_rhs};
use qrstirling::triangles::with_multiplier_fault;
use qrstirling::typeb::{connection_defect, count_b, egf_defect, enumerate_b_partitions, special_removal_defect};
use qrstirling::{Error, FamilySpec, Kind, PSpec, QPoly, QType, Triangle};

#[derive(Default)]
struct Tally {
    cases: usize,
    first_failure: Option<String>,
}

impl Tally {
    fn check(&mut self, ok: bool, what: impl FnOnce() -> String) {
        self.cases += 1;
        if !ok && self.first_failure.is_none() {
            self.first_failure = Some(what());
        }
    }

    fn eq<T: PartialEq + std::fmt::Debug>(&mut self, label: impl FnOnce() -> String, got: T, want: T) {
        let ok = got == want;
        self.check(ok, || format!("{}: got {got:?}, want {want:?}", label()));
    }
}

fn grid_ps() -> Vec<PSpec> {
    ["x", "2x+1", "x^2", "3x^2+1"].iter().map(|s| s.parse().unwrap()).collect()
}

fn specs(kind: Kind) -> Vec<FamilySpec> {
    let mut out = Vec::new();
    for p in grid_ps() {
        for r in 0..=2 {
            for qt in QType::ALL {
                out.push(FamilySpec::new(kind, qt, p.clone(), r));
            }
        }
    }
    out
}

fn label(spec: &FamilySpec) -> String {
    format!("{} type{} p={} r={}", spec.kind, spec.q_type.number(), spec.p, spec.r)
}

fn rat(s: &str) -> BigRational {
    qrstirling::cli::parse_rational(s).unwrap()
}

fn comtet_equivalence(t: &mut Tally) {
    for spec in specs(Kind::SecondKind) {
        let mut tri = Triangle::new(spec.clone());
        let r = spec.r;
        let l = label(&spec);
        for n in r..=10 {
            let coeffs = comtet_basis_coeffs(&spec, n).unwrap();
            t.eq(|| format!("{l} round trip n={n}"), expand_in_basis(&spec, &coeffs), XPoly::x_pow(n - r));
            for k in r..=n {
                let want = tri.value(n as i64, k as i64);
                t.eq(|| format!("{l} basis ({n},{k})"), &coeffs[k - r], &want);
                t.eq(|| format!("{l} ogf ({n},{k})"), comtet_ogf_coeff(&spec, k, n).unwrap(), want.clone());
                t.eq(|| format!("{l} h ({n},{k})"), comtet_explicit_sum(&spec, n, k).unwrap(), want.clone());
                if k > r {
                    let got = comtet_complete_recursion(&mut tri, n, k).unwrap();
                    t.eq(|| format!("{l} complete recursion ({n},{k})"), got, want.clone());
                }
                if n - k <= NESTED_MAX_DEPTH && k - r <= NESTED_MAX_WIDTH {
                    t.eq(|| format!("{l} nested ({n},{k})"), comtet_nested_sum(&spec, n, k).unwrap(), want);
                }
            }
        }
    }
}

fn partial_fractions(t: &mut Tally) {
    let q0s = [rat("1"), rat("2"), rat("3/2")];
    for spec in specs(Kind::SecondKind) {
        let mut tri = Triangle::new(spec.clone());
        let l = label(&spec);
        for q0 in &q0s {
            for n in spec.r..=10 {
                for k in spec.r..=n {
                    let got = comtet_partial_fraction(&spec, n, k, q0).unwrap();
                    t.eq(|| format!("{l} q0={q0} ({n},{k})"), got, tri.eval_at(n as i64, k as i64, q0));
                }
            }
        }
    }
    for r in 0..=2 {
        let spec = FamilySpec::new(Kind::SecondKind, QType::TypeII, PSpec::constant(1).unwrap(), r);
        for n in r + 1..=10 {
            for k in r + 1..=n {
                for q0 in &q0s {
                    let got = comtet_partial_fraction(&spec, n, k, q0);
                    t.check(matches!(got, Err(Error::DegenerateNodes { .. })), || {
                        format!("p=1 r={r} ({n},{k}) q0={q0}: {got:?}")
                    });
                }
            }
        }
    }
}

fn lancaster_equivalence(t: &mut Tally) {
    for kind in [Kind::FirstKindUnsigned, Kind::FirstKindSigned] {
        for spec in specs(kind) {
            let mut tri = Triangle::new(spec.clone());
            let r = spec.r;
            let l = label(&spec);
            for n in r..=10 {
                let product = lancaster_product_coeffs(&spec, n).unwrap();
                for k in r..=n {
                    let want = tri.value(n as i64, k as i64);
                    t.eq(|| format!("{l} product ({n},{k})"), &product[k - r], &want);
                    t.eq(|| format!("{l} e ({n},{k})"), lancaster_explicit(&spec, n, k).unwrap(), want.clone());
                    if k > r {
                        let got = lancaster_complete_recursion(&mut tri, n, k).unwrap();
                        t.eq(|| format!("{l} complete recursion ({n},{k})"), got, want);
                    }
                }
            }
        }
    }
    for spec in specs(Kind::FirstKindSigned) {
        let mut signed = Triangle::new(spec.clone());
        let mut unsigned = Triangle::new(spec.with_kind(Kind::FirstKindUnsigned));
        for n in 0..=10i64 {
            for k in 0..=n {
                let u = unsigned.value(n, k);
                let want = if (n - k) % 2 == 0 { u } else { -u };
                t.eq(|| format!("{} sign ({n},{k})", label(&spec)), signed.value(n, k), want);
            }
        }
    }
}

fn orthogonality(t: &mut Tally) {
    for p in grid_ps() {
        for qt in QType::ALL {
            for r in 0..=2 {
                for n in r + 1..=8 {
                    for l in r..=n {
                        let (a, b) = orthogonality_defect(&p, r, n, l, qt).unwrap();
                        t.eq(|| format!("p={p} type{} r={r} n={n} l={l}", qt.number()), (a, b), (QPoly::zero(), QPoly::zero()));
                    }
                }
            }
        }
    }
}

fn power_sums(t: &mut Tally) {
    for p in grid_ps() {
        for qt in QType::ALL {
            for r in 0..=2 {
                for n in r..=8 {
                    for k in 1..=4 {
                        let lhs = power_sum_lhs(&p, r, n, k, qt).unwrap();
                        let rhs = power_sum_rhs(&p, r, n, k, qt).unwrap();
                        t.eq(|| format!("p={p} type{} r={r} n={n} k={k}", qt.number()), lhs, rhs);
                    }
                }
            }
        }
    }
    for n in 0..=8usize {
        for k in 1..=4usize {
            let classical: BigInt = (0..=n).map(|j| num_traits::pow(BigInt::from(j), k)).sum();
            let rhs = power_sum_rhs(&PSpec::x(), 0, n, k, QType::TypeII).unwrap().at_one();
            t.eq(|| format!("classical n={n} k={k}"), rhs, classical);
        }
    }
    let five = power_sum_rhs(&PSpec::x(), 0, 2, 2, QType::TypeII).unwrap().at_one();
    t.eq(|| "0^2+1^2+2^2".into(), five, BigInt::from(5));
}

fn mixed(t: &mut Tally) {
    for u in 1..=3 {
        for r in 0..=1 {
            for n in r..=6 {
                for k in 1..=3 {
                    let d = mixed_relation_defect(u, r, n, k).unwrap();
                    t.eq(|| format!("u={u} r={r} n={n} k={k}"), d, QPoly::zero());
                }
            }
        }
    }
}

fn typeb_oracle(t: &mut Tally) {
    for n in 0..=7usize {
        for k in 0..=n {
            for r in 0..=k {
                let found = enumerate_b_partitions(n, k, r).unwrap().len();
                t.eq(|| format!("enumeration ({n},{k},{r})"), BigInt::from(found), count_b(n as i64, k as i64, r as i64));
                for p in 0..=r {
                    let d = special_removal_defect(n, k, r, p).unwrap();
                    t.eq(|| format!("special removal ({n},{k},{r}) p={p}"), d, BigInt::zero());
                }
            }
        }
    }
    t.eq(|| "S^B(2,1)".into(), count_b(2, 1, 0), BigInt::from(4));
    t.eq(|| "S^B(2,1) enumerated".into(), enumerate_b_partitions(2, 1, 0).unwrap().len(), 4);
}

fn egf_and_connection(t: &mut Tally) {
    for k in 0..=4 {
        for r in 0..=2 {
            let d = egf_defect(k, r, 12).unwrap();
            t.check(d.coeffs().iter().all(Zero::is_zero), || format!("egf k={k} r={r}: {:?}", d.coeffs()));
        }
    }
    for n in 0..=10 {
        for r in 0..=3 {
            t.eq(|| format!("connection n={n} r={r}"), connection_defect(n, r), QPoly::zero());
        }
    }
}

fn type_collapse(t: &mut Tally) {
    for kind in Kind::ALL {
        for p in grid_ps() {
            for r in 0..=2 {
                let mut one = Triangle::new(FamilySpec::new(kind, QType::TypeI, p.clone(), r));
                let mut two = Triangle::new(FamilySpec::new(kind, QType::TypeII, p.clone(), r));
                for n in 0..=10i64 {
                    for k in 0..=n {
                        let (a, b) = (one.value(n, k).at_one(), two.value(n, k).at_one());
                        t.eq(|| format!("{kind} p={p} r={r} ({n},{k})"), a, b);
                    }
                }
            }
        }
    }
}

fn cli_contract(t: &mut Tally) {
    let out = Command::new(env!("CARGO_BIN_EXE_qrstirling"))
        .args(["verify", "--suite", "all"])
        .output()
        .expect("run binary");
    t.check(out.status.code() == Some(0), || {
        format!("verify all exited {:?}:\n{}", out.status.code(), String::from_utf8_lossy(&out.stdout))
    });

    let opts = VerifyOptions {
        n_max: Some(7),
        ..VerifyOptions::default()
    };
    for kind in Kind::ALL {
        for index in 0..=5 {
            let reports = with_multiplier_fault(kind, index, || cmd_verify(Suite::All, &opts)).unwrap();
            let failing: Vec<_> = reports.iter().filter(|r| !r.passed()).map(|r| r.suite.name()).collect();
            t.check(!failing.is_empty(), || format!("fault {kind} index {index} went undetected"));
        }
    }
}

type Criterion = (u32, &'static str, fn(&mut Tally), Duration);

fn main() -> ExitCode {
    let secs = Duration::from_secs;
    let criteria: [Criterion; 10] = [
        (1, "Comtet equivalence", comtet_equivalence, secs(30)),
        (2, "partial fractions", partial_fractions, secs(5)),
        (3, "Lancaster equivalence", lancaster_equivalence, secs(10)),
        (4, "orthogonality", orthogonality, secs(10)),
        (5, "power sums", power_sums, secs(10)),
        (6, "mixed relation", mixed, secs(10)),
        (7, "type B oracle", typeb_oracle, secs(30)),
        (8, "EGF and connection constants", egf_and_connection, secs(10)),
        (9, "type collapse at q=1", type_collapse, secs(5)),
        (10, "CLI contract and mutation smoke test", cli_contract, Duration::MAX),
    ];
    let mut all_ok = true;
    for (id, name, run, budget) in criteria {
        let mut tally = Tally::default();
        let start = Instant::now();
        run(&mut tally);
        let elapsed = start.elapsed();
        let in_time = elapsed <= budget;
        let ok = tally.first_failure.is_none() && in_time;
        all_ok &= ok;
        let budget_note = if budget == Duration::MAX {
            String::new()
        } else {
            format!(", budget {}s", budget.as_secs())
        };
        println!(
            "criterion {id:>2} {}: {name} ({} checks, {:.2}s{budget_note})",
            if ok { "PASS" } else { "FAIL" },
            tally.cases,
            elapsed.as_secs_f64()
        );
        if let Some(why) = tally.first_failure {
            println!("    first failure: {why}");
        }
        if !in_time {
            println!("    over time budget");
        }
    }
    if all_ok {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
