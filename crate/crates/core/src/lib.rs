//! Exact verification of skein algebra, spherical DAHA and quantized
//! K-theoretic Coulomb branch identities through q-difference operators.
//!
//! The core is generic over the coefficient field ([`coeff::Coeff`]); the
//! aliases below fix it to the Gaussian rationals, which every suite uses.

pub mod coeff;
pub mod daha;
pub mod exactring;
pub mod monopole;
pub mod params;
pub mod presentation;
pub mod qdiffop;
pub mod report;
pub mod skein;
pub mod theoremsuite;

pub use coeff::{Coeff, GaussRat};

pub type Poly = exactring::LaurentPoly<GaussRat>;
pub type Scalar = exactring::RatFn<GaussRat>;
pub type Op = qdiffop::DiffOp<GaussRat>;
