//! Bar Codes for finite sets of monomials, star sets and Pommaret bases, and the
//! enumeration of zero-dimensional stable and strongly stable monomial ideals in
//! two and three variables with a prescribed constant affine Hilbert polynomial.
//!
//! The library is organised bottom-up:
//!
//! * [`monomials`]: terms, the Lex order, order ideals, minimal generators, stability tests.
//! * [`barcode`]: the Bar Code of a finite term set, decoding, e-lists, admissibility.
//! * [`starset`]: star sets, Janet multiplicative variables, Pommaret bases.
//! * [`partitions`]: integer, plane and solid partitions with brute-force enumerators.
//! * [`qpolys`]: exact polynomial arithmetic, Gaussian binomials and determinant formulas.
//! * [`counting`]: census pipelines over bar lists.
//! * [`bijections`]: partition, Bar Code and ideal correspondences, explicit listings.
//! * [`oracle`]: exhaustive enumeration of order ideals used as ground truth.
//!
//! Polynomials are generic over their coefficient ring; [`IntPoly`] is the
//! arbitrary-precision instance used by every counting pipeline.

pub mod barcode;
pub mod bijections;
pub mod counting;
mod error;
pub mod monomials;
pub mod oracle;
pub mod partitions;
pub mod qpolys;
pub mod starset;

pub use error::{Error, Result};

pub use barcode::BarCode;
pub use monomials::{MonomialIdeal, OrderIdeal, Term};
pub use partitions::{IntPartition, PlanePartition, SolidPartition};

/// Polynomials with arbitrary-precision integer coefficients.
pub type IntPoly = qpolys::Poly<num_bigint::BigInt>;

/// Polynomials with 128-bit coefficients; fine for small shapes, panics on overflow in debug builds.
pub type WidePoly = qpolys::Poly<i128>;

/// The two ideal classes this crate counts.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, serde::Serialize, serde::Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Class {
    Stable,
    StronglyStable,
}

impl std::fmt::Display for Class {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Class::Stable => f.write_str("stable"),
            Class::StronglyStable => f.write_str("strongly-stable"),
        }
    }
}

impl std::str::FromStr for Class {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "stable" => Ok(Class::Stable),
            "strongly-stable" | "strongly_stable" | "sstable" => Ok(Class::StronglyStable),
            other => Err(Error::Parse(format!("unknown class `{other}`"))),
        }
    }
}
