//! Exact computation of the six families of q,r-poly-Stirling numbers.
//!
//! Every number is a polynomial in `q` with big-integer coefficients
//! ([`QPoly`]). A family is fixed by a [`FamilySpec`]: the kind (second kind,
//! unsigned or signed first kind), the q-analogue type (`[p(k)]_q` versus
//! `p([k]_q)`), a polynomial `p(x)` with non-negative integer coefficients and
//! the Broder restriction `r`.
//!
//! Besides the defining recursions ([`triangles`]) the crate carries every
//! alternative characterization as an independent computation
//! ([`characterizations`]), the cross-family identities ([`identities`]),
//! and a brute-force model of type B set partitions ([`typeb`]). The [`cli`]
//! module drives all of it as named verification suites.
//!
//! ```
//! use qrstirling::{FamilySpec, Kind, PSpec, QType, Triangle};
//!
//! let spec = FamilySpec::new(Kind::SecondKind, QType::TypeII, PSpec::x(), 0);
//! let mut tri = Triangle::new(spec);
//! assert_eq!(tri.value(3, 2).to_string(), "2+q");
//! ```

pub mod algebra;
pub mod characterizations;
pub mod cli;
pub mod error;
pub mod identities;
pub mod triangles;
pub mod typeb;

pub use algebra::{q_bracket, BigInt, BigRational, PSpec, QPoly, Series, SeriesVar};
pub use error::{Error, Result};
pub use triangles::{FamilySpec, Kind, QType, Triangle};
