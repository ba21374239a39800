//! Exact umbral calculus over Q and Q(L).
//!
//! The kernel is generic over a coefficient [`Field`]; the two concrete fields
//! are [`Rat`] (arbitrary-precision rationals) and [`RatFunc`] (rational
//! functions in a formal parameter `L`). Everything is computed exactly on
//! truncated power series, so identities are checked by equality rather than
//! by tolerance.

pub mod combinat;
pub mod error;
pub mod families;
pub mod field;
pub mod identities;
pub mod poly;
pub mod ratfunc;
pub mod series;
pub mod umbral;

pub use error::{Error, Result};
pub use field::{parse_rat, rat_string, Field, Rat};
pub use poly::Poly;
pub use ratfunc::RatFunc;
pub use series::{Fps, SeriesKind};
pub use umbral::ShefferPair;

/// Polynomial in `x` over Q.
pub type QPoly = Poly<Rat>;
/// Polynomial in `x` over Q(L).
pub type LPoly = Poly<RatFunc>;
/// Truncated series in `t` over Q.
pub type QSeries = Fps<Rat>;
/// Truncated series in `t` over Q(L).
pub type LSeries = Fps<RatFunc>;
