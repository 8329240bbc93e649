//! Triangle partition maps: forward iteration, transfer operators, the
//! tabulated eigenfunctions and densities, Hilbert-space kernel identities and
//! Gauss-Kuzmin digit statistics.

pub mod domain;
pub mod error;
pub mod expr;
pub mod gausskuzmin;
pub mod hilbert;
pub mod maps;
pub mod quadrature;
pub mod series;
pub mod spectral;
pub mod specfun;
mod tables;
pub mod transfer;
pub mod triangle;

pub use domain::{
    in_triangle, parse_triple, sample_points, spectral_data, DigitSequence, GridSpec, HilbertTriple, Perm, PermutationTriple,
    ScalarField, SpectralData, TrianglePoint,
};
pub use error::{Error, Result};
pub use series::{SeriesSum, TailModel, TruncationPolicy};
