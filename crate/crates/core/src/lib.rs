//! Exact rational homotopy computations for Sullivan models of homogeneous
//! spaces, biquotients and cohomogeneity-one manifolds.

pub mod cdga;
pub mod cohomology;
pub mod criteria;
pub mod ktheory;
pub mod linalg;
pub mod models;
pub mod poly;
#[cfg(feature = "sample")]
pub mod sample;

pub use cdga::{CdgaError, CdgaMorphism, Degree, Element, Generator, Monomial, SullivanAlgebra};
pub use cohomology::{CohomologyClass, CohomologyError, CohomologyTable, LowerGradedTable};
pub use linalg::{Rational, RationalMatrix, SubspaceBasis};
pub use models::{GroupData, GroupDiagram, GroupFlags, ModelError, RestrictionMap};
