pub mod error;
pub mod exact;
pub mod function;
pub mod generators;
pub mod graph;
pub mod io;
pub mod jacobi;
pub mod spectral;

pub use error::{Error, Result};
pub use function::VertexFunction;
pub use graph::{Graph, Motif};
pub mod operations;
pub mod synthesis;

#[cfg(doctest)]
mod book {
    #[doc = include_str!("../../../README.md")]
    mod readme {}
    #[doc = include_str!("../../../book/src/intro.md")]
    mod intro {}
    #[doc = include_str!("../../../book/src/graphs.md")]
    mod graphs {}
    #[doc = include_str!("../../../book/src/spectrum.md")]
    mod spectrum {}
    #[doc = include_str!("../../../book/src/eigenvalue-one.md")]
    mod eigenvalue_one {}
    #[doc = include_str!("../../../book/src/operations.md")]
    mod operations {}
    #[doc = include_str!("../../../book/src/synthesis.md")]
    mod synthesis {}
}
