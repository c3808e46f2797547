//! Bounded simple highest weight modules over basic classical Lie
//! superalgebras.
//!
//! The crate is organised bottom-up:
//!
//! * [`rootdata`] builds the root datum of `gl(m|n)`, `osp(m|2n)` (and their
//!   purely even degenerations), `D(2,1,a)`, `F(4)` and `G(3)`.
//! * [`basegraph`] walks the odd-reflection graph of bases, finds the
//!   distinguished bases and the nonisotropic simple roots `Π_ni`.
//! * [`classifier`] decides boundedness of `L(Σ, λ)` component by component.
//! * [`oracle`] realises `gl`/`osp` as supermatrices and computes exact weight
//!   multiplicities of `L(λ)` as ranks of Shapovalov matrices.
//! * [`characters`] does truncated formal-character arithmetic and the
//!   strongly typical product formula.
//!
//! All arithmetic is exact ([`Q`] is an arbitrary precision rational).

pub mod basegraph;
pub mod characters;
pub mod classifier;
mod error;
pub mod linalg;
pub mod oracle;
pub mod rootdata;

pub use error::{Error, Result};
pub use rootdata::{
    parse_algebra, Algebra, AlgebraSpec, Base, FormConvention, Parity, Root, Weight,
};

/// Exact rational scalar.
pub type Q = num::BigRational;

/// Shorthand for the rational `n/d`.
pub fn q(n: i64, d: i64) -> Q {
    Q::new(n.into(), d.into())
}

/// Report schema tag carried by every JSON document the crate emits.
pub const SCHEMA: &str = "lsb/1";
