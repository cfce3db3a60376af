use std::fmt;
use std::path::PathBuf;
use std::str::FromStr;
use std::time::{Duration, Instant};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};
use serde_json::{json, Value};

use super::text::{parse_rational, render_pspec, QMode};
use crate::algebra::{PSpec, QPoly, XPoly};
use crate::characterizations::{
    comtet_basis_coeffs, comtet_complete_recursion, comtet_explicit_sum, comtet_nested_sum, comtet_ogf_column,
    comtet_partial_fraction, expand_in_basis, lancaster_complete_recursion, lancaster_explicit,
    lancaster_product_coeffs, NESTED_MAX_DEPTH, NESTED_MAX_WIDTH,
};
use crate::error::{Error, Result};
use crate::identities::{mixed_relation_defect, orthogonality_with, power_sum_lhs, weighted_convolution};
use crate::triangles::{FamilySpec, Kind, QType, Triangle};
use crate::typeb::{self, bfile, count_b, egf_defect, for_each_b_partition, special_removal_defect};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Suite {
    Comtet,
    Lancaster,
    Orthogonality,
    PowerSums,
    Mixed,
    TypebOracle,
    Egf,
    Connection,
    All,
}

impl Suite {
    /// Every concrete suite, in the order `all` runs them.
    pub const CONCRETE: [Suite; 8] = [
        Suite::Comtet,
        Suite::Lancaster,
        Suite::Orthogonality,
        Suite::PowerSums,
        Suite::Mixed,
        Suite::TypebOracle,
        Suite::Egf,
        Suite::Connection,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Suite::Comtet => "comtet",
            Suite::Lancaster => "lancaster",
            Suite::Orthogonality => "orthogonality",
            Suite::PowerSums => "power-sums",
            Suite::Mixed => "mixed",
            Suite::TypebOracle => "typeb-oracle",
            Suite::Egf => "egf",
            Suite::Connection => "connection",
            Suite::All => "all",
        }
    }
}

impl FromStr for Suite {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        Suite::CONCRETE
            .into_iter()
            .chain([Suite::All])
            .find(|suite| suite.name() == s)
            .ok_or_else(|| Error::UnknownSuite(s.to_string()))
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// Grid overrides; `None` keeps the suite's built-in grid.
#[derive(Clone, Debug, Default)]
pub struct VerifyOptions {
    pub n_max: Option<usize>,
    pub p: Option<PSpec>,
    pub r: Option<usize>,
    pub q: QMode,
    pub oeis_bfile: Option<PathBuf>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CaseResult {
    pub params: String,
    pub passed: bool,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Counterexample {
    pub params: String,
    pub lhs: String,
    pub rhs: String,
}

#[derive(Clone, Debug)]
pub struct VerifyReport {
    pub suite: Suite,
    pub grid: String,
    pub cases: Vec<CaseResult>,
    pub first_counterexample: Option<Counterexample>,
    pub elapsed: Duration,
}

impl VerifyReport {
    pub fn failures(&self) -> usize {
        self.cases.iter().filter(|c| !c.passed).count()
    }

    pub fn passed(&self) -> bool {
        self.failures() == 0
    }

    pub fn to_json(&self) -> Value {
        json!({
            "suite": self.suite.name(),
            "grid": self.grid,
            "cases": self.cases.len(),
            "failures": self.failures(),
            "first_counterexample": self.first_counterexample.as_ref().map(|c| json!({
                "params": c.params,
                "lhs": c.lhs,
                "rhs": c.rhs,
            })),
            "seconds": format!("{:.3}", self.elapsed.as_secs_f64()),
        })
    }
}

impl fmt::Display for VerifyReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let status = if self.passed() { "PASS" } else { "FAIL" };
        writeln!(
            f,
            "{status} {}: {} cases, {} failed ({:.2}s)",
            self.suite,
            self.cases.len(),
            self.failures(),
            self.elapsed.as_secs_f64()
        )?;
        writeln!(f, "  grid: {}", self.grid)?;
        if let Some(c) = &self.first_counterexample {
            writeln!(f, "  first counterexample: {}", c.params)?;
            writeln!(f, "    lhs = {}", c.lhs)?;
            writeln!(f, "    rhs = {}", c.rhs)?;
        }
        Ok(())
    }
}

struct Run<'a> {
    q: &'a QMode,
    cases: Vec<CaseResult>,
    first: Option<Counterexample>,
}

impl<'a> Run<'a> {
    fn new(q: &'a QMode) -> Self {
        Run {
            q,
            cases: Vec::new(),
            first: None,
        }
    }

    fn record(&mut self, params: String, passed: bool, lhs: impl FnOnce() -> String, rhs: impl FnOnce() -> String) {
        if !passed && self.first.is_none() {
            self.first = Some(Counterexample {
                params: params.clone(),
                lhs: lhs(),
                rhs: rhs(),
            });
        }
        self.cases.push(CaseResult { params, passed });
    }

    fn poly(&mut self, params: String, lhs: Result<QPoly>, rhs: &QPoly) {
        match lhs {
            Ok(lhs) => {
                let ok = match self.q {
                    QMode::Symbolic => &lhs == rhs,
                    QMode::Numeric(q0) => lhs.eval(q0) == rhs.eval(q0),
                };
                self.record(params, ok, || lhs.to_string(), || rhs.to_string());
            }
            Err(e) => self.record(params, false, || e.to_string(), || rhs.to_string()),
        }
    }

    fn zero(&mut self, params: String, defect: Result<QPoly>) {
        self.poly(params, defect, &QPoly::zero());
    }

    fn exact<T: PartialEq + fmt::Display>(&mut self, params: String, lhs: &T, rhs: &T) {
        self.record(params, lhs == rhs, || lhs.to_string(), || rhs.to_string());
    }

    fn finish(self, suite: Suite, grid: String, start: Instant) -> VerifyReport {
        VerifyReport {
            suite,
            grid,
            cases: self.cases,
            first_counterexample: self.first,
            elapsed: start.elapsed(),
        }
    }
}

fn default_ps() -> Vec<PSpec> {
    ["x", "2x+1", "x^2", "3x^2+1"]
        .iter()
        .map(|s| s.parse().expect("grid polynomial"))
        .collect()
}

struct Grid {
    ps: Vec<PSpec>,
    rs: Vec<usize>,
    n_max: usize,
}

impl Grid {
    fn new(opts: &VerifyOptions, rs: &[usize], n_max: usize) -> Self {
        Grid {
            ps: opts.p.clone().map(|p| vec![p]).unwrap_or_else(default_ps),
            rs: opts.r.map(|r| vec![r]).unwrap_or_else(|| rs.to_vec()),
            n_max: opts.n_max.unwrap_or(n_max),
        }
    }

    fn describe(&self, q: &QMode, extra: &str) -> String {
        let ps: Vec<String> = self.ps.iter().map(render_pspec).collect();
        let rs: Vec<String> = self.rs.iter().map(usize::to_string).collect();
        format!(
            "p in {{{}}}, r in {{{}}}, n <= {}, q {}{}",
            ps.join(", "),
            rs.join(","),
            self.n_max,
            q,
            extra
        )
    }

    fn specs(&self, kind: Kind) -> impl Iterator<Item = FamilySpec> + '_ {
        self.ps.iter().flat_map(move |p| {
            self.rs.iter().flat_map(move |&r| {
                QType::ALL
                    .into_iter()
                    .map(move |qt| FamilySpec::new(kind, qt, p.clone(), r))
            })
        })
    }
}

fn tag(spec: &FamilySpec) -> String {
    format!(
        "{} type{} p={} r={}",
        spec.kind,
        spec.q_type.number(),
        render_pspec(&spec.p),
        spec.r
    )
}

fn comtet(opts: &VerifyOptions) -> VerifyReport {
    let start = Instant::now();
    let grid = Grid::new(opts, &[0, 1, 2], 10);
    let mut run = Run::new(&opts.q);
    let n_max = grid.n_max;
    for spec in grid.specs(Kind::SecondKind) {
        let r = spec.r;
        let t = tag(&spec);
        let mut tri = Triangle::new(spec.clone());
        for n in r..=n_max {
            match comtet_basis_coeffs(&spec, n) {
                Ok(coeffs) => {
                    for (i, c) in coeffs.iter().enumerate() {
                        let k = r + i;
                        let want = tri.value(n as i64, k as i64);
                        run.poly(format!("basis {t} n={n} k={k}"), Ok(c.clone()), &want);
                    }
                    let back = expand_in_basis(&spec, &coeffs);
                    let want = XPoly::x_pow(n - r);
                    run.record(
                        format!("basis round-trip {t} n={n}"),
                        back == want,
                        || format!("{:?}", back.coeffs()),
                        || format!("x^{}", n - r),
                    );
                }
                Err(e) => run.record(format!("basis {t} n={n}"), false, || e.to_string(), String::new),
            }
        }
        for k in r..=n_max {
            match comtet_ogf_column(&spec, k, n_max) {
                Ok(col) => {
                    for (i, c) in col.into_iter().enumerate() {
                        let n = k + i;
                        let want = tri.value(n as i64, k as i64);
                        run.poly(format!("ogf {t} n={n} k={k}"), Ok(c), &want);
                    }
                }
                Err(e) => run.record(format!("ogf {t} k={k}"), false, || e.to_string(), String::new),
            }
        }
        for n in r..=n_max {
            for k in r..=n {
                let want = tri.value(n as i64, k as i64);
                if k > r {
                    let got = comtet_complete_recursion(&mut tri, n, k);
                    run.poly(format!("complete-recursion {t} n={n} k={k}"), got, &want);
                }
                run.poly(format!("explicit {t} n={n} k={k}"), comtet_explicit_sum(&spec, n, k), &want);
                if n - k <= NESTED_MAX_DEPTH && k - r <= NESTED_MAX_WIDTH {
                    run.poly(format!("nested {t} n={n} k={k}"), comtet_nested_sum(&spec, n, k), &want);
                }
            }
        }
    }

    let q0s: Vec<BigRational> = match &opts.q {
        QMode::Numeric(q0) => vec![q0.clone()],
        QMode::Symbolic => ["1", "2", "3/2"].iter().map(|s| parse_rational(s).expect("literal")).collect(),
    };
    for spec in grid.specs(Kind::SecondKind) {
        let t = tag(&spec);
        let mut tri = Triangle::new(spec.clone());
        for q0 in &q0s {
            for n in spec.r..=n_max {
                for k in spec.r..=n {
                    let params = format!("partial-fraction {t} q={q0} n={n} k={k}");
                    match comtet_partial_fraction(&spec, n, k, q0) {
                        Ok(v) => {
                            let want = tri.eval_at(n as i64, k as i64, q0);
                            run.exact(params, &v, &want);
                        }
                        Err(Error::DegenerateNodes { i, j }) => {
                            let ok = spec.node(i).eval(q0) == spec.node(j).eval(q0);
                            run.record(params, ok, || format!("DegenerateNodes({i},{j})"), || "distinct nodes".into());
                        }
                        Err(e) => run.record(params, false, || e.to_string(), String::new),
                    }
                }
            }
        }
    }
    // p = 1 puts every node at [1]_q = 1
    let constant = FamilySpec::new(Kind::SecondKind, QType::TypeII, PSpec::constant(1).expect("nonzero"), 0);
    for n in 1..=n_max.min(6) {
        for k in 1..=n {
            let got = comtet_partial_fraction(&constant, n, k, &BigRational::one());
            let ok = matches!(got, Err(Error::DegenerateNodes { .. }));
            run.record(
                format!("degenerate p=1 n={n} k={k}"),
                ok,
                || format!("{got:?}"),
                || "DegenerateNodes".into(),
            );
        }
    }
    collapse(&grid, Kind::SecondKind, &mut run);
    run.finish(Suite::Comtet, grid.describe(&opts.q, ", both q-types, q0 in partial fractions"), start)
}

/// Type I and type II triangles agree entrywise at q = 1.
fn collapse(grid: &Grid, kind: Kind, run: &mut Run) {
    for p in &grid.ps {
        for &r in &grid.rs {
            let mut one = Triangle::new(FamilySpec::new(kind, QType::TypeI, p.clone(), r));
            let mut two = Triangle::new(FamilySpec::new(kind, QType::TypeII, p.clone(), r));
            for n in 0..=grid.n_max as i64 {
                for k in 0..=n {
                    let a = one.value(n, k).at_one();
                    let b = two.value(n, k).at_one();
                    run.exact(format!("collapse {kind} p={} r={r} n={n} k={k}", render_pspec(p)), &a, &b);
                }
            }
        }
    }
}

fn lancaster(opts: &VerifyOptions) -> VerifyReport {
    let start = Instant::now();
    let grid = Grid::new(opts, &[0, 1, 2], 10);
    let mut run = Run::new(&opts.q);
    let n_max = grid.n_max;
    for kind in [Kind::FirstKindUnsigned, Kind::FirstKindSigned] {
        for spec in grid.specs(kind) {
            let r = spec.r;
            let t = tag(&spec);
            let mut tri = Triangle::new(spec.clone());
            for n in r..=n_max {
                match lancaster_product_coeffs(&spec, n) {
                    Ok(coeffs) => {
                        for (i, c) in coeffs.into_iter().enumerate() {
                            let k = r + i;
                            let want = tri.value(n as i64, k as i64);
                            run.poly(format!("product {t} n={n} k={k}"), Ok(c), &want);
                        }
                    }
                    Err(e) => run.record(format!("product {t} n={n}"), false, || e.to_string(), String::new),
                }
                for k in r..=n {
                    let want = tri.value(n as i64, k as i64);
                    if k > r {
                        let got = lancaster_complete_recursion(&mut tri, n, k);
                        run.poly(format!("complete-recursion {t} n={n} k={k}"), got, &want);
                    }
                    run.poly(format!("explicit {t} n={n} k={k}"), lancaster_explicit(&spec, n, k), &want);
                }
            }
        }
    }
    for spec in grid.specs(Kind::FirstKindSigned) {
        let t = tag(&spec);
        let mut signed = Triangle::new(spec.clone());
        let mut unsigned = Triangle::new(spec.with_kind(Kind::FirstKindUnsigned));
        for n in 0..=n_max as i64 {
            for k in 0..=n {
                let u = unsigned.value(n, k);
                let want = if (n - k) % 2 == 0 { u } else { -u };
                run.poly(format!("sign {t} n={n} k={k}"), Ok(signed.value(n, k)), &want);
            }
        }
    }
    collapse(&grid, Kind::FirstKindUnsigned, &mut run);
    collapse(&grid, Kind::FirstKindSigned, &mut run);
    run.finish(Suite::Lancaster, grid.describe(&opts.q, ", both kinds, both q-types"), start)
}

fn orthogonality(opts: &VerifyOptions) -> VerifyReport {
    let start = Instant::now();
    let grid = Grid::new(opts, &[0, 1, 2], 8);
    let mut run = Run::new(&opts.q);
    for spec in grid.specs(Kind::SecondKind) {
        let t = tag(&spec);
        let mut second = Triangle::new(spec.clone());
        let mut first = Triangle::new(spec.with_kind(Kind::FirstKindSigned));
        for n in spec.r + 1..=grid.n_max {
            for l in spec.r..=n {
                let (a, b) = orthogonality_with(&mut second, &mut first, n, l);
                run.zero(format!("S*s {t} n={n} l={l}"), Ok(a));
                run.zero(format!("s*S {t} n={n} l={l}"), Ok(b));
            }
        }
    }
    run.finish(Suite::Orthogonality, grid.describe(&opts.q, ", both q-types"), start)
}

const POWER_MAX: usize = 4;

fn power_sums(opts: &VerifyOptions) -> VerifyReport {
    let start = Instant::now();
    let grid = Grid::new(opts, &[0, 1, 2], 8);
    let mut run = Run::new(&opts.q);
    for spec in grid.specs(Kind::SecondKind) {
        let t = tag(&spec);
        let mut second = Triangle::new(spec.clone());
        let mut first = Triangle::new(spec.with_kind(Kind::FirstKindSigned));
        for n in spec.r..=grid.n_max {
            for k in 1..=POWER_MAX {
                let lhs = power_sum_lhs(&spec.p, spec.r, n, k, spec.q_type);
                let rhs = -weighted_convolution(&mut first, &mut second, spec.r, n, k);
                run.poly(format!("power-sum {t} n={n} k={k}"), lhs, &rhs);
            }
        }
    }
    // p = x, r = 0 at q = 1 gives the classical sums 0^k + ... + n^k
    let base = FamilySpec::new(Kind::SecondKind, QType::TypeII, PSpec::x(), 0);
    let mut second = Triangle::new(base.clone());
    let mut first = Triangle::new(base.with_kind(Kind::FirstKindSigned));
    for n in 0..=grid.n_max {
        for k in 1..=POWER_MAX {
            let classical: BigInt = (0..=n).map(|j| num_traits::pow(BigInt::from(j), k)).sum();
            let rhs = -weighted_convolution(&mut first, &mut second, 0, n, k);
            run.exact(format!("classical n={n} k={k}"), &rhs.at_one(), &classical);
        }
    }
    run.finish(Suite::PowerSums, grid.describe(&opts.q, ", k <= 4, both q-types"), start)
}

fn mixed(opts: &VerifyOptions) -> VerifyReport {
    let start = Instant::now();
    let rs = opts.r.map(|r| vec![r]).unwrap_or_else(|| vec![0, 1]);
    let n_max = opts.n_max.unwrap_or(6);
    let mut run = Run::new(&opts.q);
    for u in 1..=3 {
        for &r in &rs {
            for n in r..=n_max {
                for k in 1..=3 {
                    run.zero(format!("mixed u={u} r={r} n={n} k={k}"), mixed_relation_defect(u, r, n, k));
                }
            }
        }
    }
    let rs: Vec<String> = rs.iter().map(usize::to_string).collect();
    let grid = format!("u in {{1,2,3}}, r in {{{}}}, n <= {n_max}, k <= 3, q {}", rs.join(","), opts.q);
    run.finish(Suite::Mixed, grid, start)
}

fn typeb_oracle(opts: &VerifyOptions) -> Result<VerifyReport> {
    let start = Instant::now();
    let n_max = opts.n_max.unwrap_or(7).min(typeb::ENUMERATION_MAX_N);
    let mut run = Run::new(&opts.q);
    for n in 0..=n_max {
        // tally[k][r]: partitions with k blocks whose first r elements are separated
        let mut tally = vec![vec![0u64; n + 1]; n + 1];
        let mut total = 0u64;
        for_each_b_partition(n, |p| {
            total += 1;
            let k = p.num_blocks();
            for r in 0..=k {
                if !p.separates_first(r) {
                    break;
                }
                tally[k][r] += 1;
            }
        })?;
        for k in 0..=n {
            for r in 0..=k {
                let want = count_b(n as i64, k as i64, r as i64);
                run.exact(format!("enumeration n={n} k={k} r={r}"), &BigInt::from(tally[k][r]), &want);
            }
        }
        let row_sum: BigInt = (0..=n as i64).map(|k| count_b(n as i64, k, 0)).sum();
        run.exact(format!("row-sum n={n}"), &BigInt::from(total), &row_sum);
        for k in 0..=n {
            for r in 0..=k {
                for p in 0..=r {
                    let d = special_removal_defect(n, k, r, p)?;
                    run.exact(format!("special-removal n={n} k={k} r={r} p={p}"), &d, &BigInt::zero());
                }
            }
        }
    }
    let odd = PSpec::new(vec![1, 2]).expect("2x+1");
    for r in 0..=3usize {
        let mut tri = Triangle::new(FamilySpec::new(Kind::SecondKind, QType::TypeII, odd.clone(), r));
        for n in 0..=(n_max + 3) as i64 {
            for k in 0..=n {
                let want = count_b(n, k, r as i64);
                run.exact(format!("bridge 2x+1 r={r} n={n} k={k}"), &tri.value(n, k).at_one(), &want);
            }
        }
    }
    if let Some(path) = &opts.oeis_bfile {
        let text = std::fs::read_to_string(path).map_err(|e| Error::Io(format!("{}: {e}", path.display())))?;
        let entries = bfile::parse(&text)?;
        let mismatch = bfile::first_triangle_mismatch(&entries, |n, k| count_b(n as i64, k as i64, 0));
        run.record(
            format!("b-file {} ({} entries)", path.display(), entries.len()),
            mismatch.is_none(),
            || mismatch.as_ref().map(|(i, v, _)| format!("index {i}: {v}")).unwrap_or_default(),
            || mismatch.as_ref().map(|(_, _, w)| w.to_string()).unwrap_or_default(),
        );
    }
    let grid = format!("0 <= r <= k <= n <= {n_max}, bridge n <= {}", n_max + 3);
    Ok(run.finish(Suite::TypebOracle, grid, start))
}

fn egf(opts: &VerifyOptions) -> Result<VerifyReport> {
    let start = Instant::now();
    let order = opts.n_max.unwrap_or(12);
    let mut run = Run::new(&opts.q);
    for k in 0..=4 {
        for r in 0..=2 {
            let defect = egf_defect(k, r, order)?;
            let bad = defect.coeffs().iter().position(|c| !c.is_zero());
            run.record(
                format!("egf k={k} r={r}"),
                bad.is_none(),
                || bad.map(|i| format!("t^{i}: {}", defect.coeffs()[i])).unwrap_or_default(),
                || "0".into(),
            );
        }
    }
    Ok(run.finish(Suite::Egf, format!("k <= 4, r <= 2, through t^{order}"), start))
}

fn connection(opts: &VerifyOptions) -> VerifyReport {
    let start = Instant::now();
    let n_max = opts.n_max.unwrap_or(10);
    let mut run = Run::new(&QMode::Symbolic);
    for n in 0..=n_max {
        for r in 0..=3 {
            let d = typeb::connection_defect(n, r);
            run.exact(format!("connection n={n} r={r}"), &d, &QPoly::zero());
        }
    }
    run.finish(Suite::Connection, format!("n <= {n_max}, r <= 3 (polynomials in x)"), start)
}

/// Runs one concrete suite (`All` is expanded by [`cmd_verify`]).
pub fn run_suite(suite: Suite, opts: &VerifyOptions) -> Result<VerifyReport> {
    Ok(match suite {
        Suite::Comtet => comtet(opts),
        Suite::Lancaster => lancaster(opts),
        Suite::Orthogonality => orthogonality(opts),
        Suite::PowerSums => power_sums(opts),
        Suite::Mixed => mixed(opts),
        Suite::TypebOracle => typeb_oracle(opts)?,
        Suite::Egf => egf(opts)?,
        Suite::Connection => connection(opts),
        Suite::All => {
            return Err(Error::Precondition("`all` is not a single suite".into()));
        }
    })
}

/// Runs the named suite, or every suite for `all`.
pub fn cmd_verify(suite: Suite, opts: &VerifyOptions) -> Result<Vec<VerifyReport>> {
    match suite {
        Suite::All => Suite::CONCRETE.iter().map(|&s| run_suite(s, opts)).collect(),
        one => Ok(vec![run_suite(one, opts)?]),
    }
}
