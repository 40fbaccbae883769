//! Exact computations with the exceptional Lie superalgebra `D(2,1;alpha)`
//! realized inside the Poisson superalgebra of pseudodifferential symbols on
//! the supercircle `S^{1|2}`: the embedding, first cohomology by bigraded
//! blocks, cup products, formal deformations, and the `h`-quantized analogue.

pub mod cohomology;
pub mod deform;
pub mod error;
pub mod gamma;
pub mod linalg;
pub mod parse;
pub mod quantize;
pub mod report;
pub mod scalar;
pub mod symalg;

pub use error::{Error, Result};
pub use scalar::{AlphaPoly, Rat, RatFunc, Scalar};
pub use symalg::{Monomial, Parity, Symbol, Target};
