//! Library side of the `qrstirling` command: text formats for `p(x)` and
//! rationals, triangle tables in CSV/JSON, and the verification suites.

mod table;
mod text;
mod verify;

pub use table::{cmd_table, OutputFormat, TableArgs};
pub use text::{parse_pspec, parse_q, parse_rational, render_pspec, QMode};
pub use verify::{cmd_verify, run_suite, CaseResult, Counterexample, Suite, VerifyOptions, VerifyReport};
