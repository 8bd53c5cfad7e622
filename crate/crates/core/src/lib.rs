//! Exact symbolic algebra for Capelli-type identities.
//!
//! Everything here works over the rationals with arbitrary precision:
//! polynomials, univariate rational functions, factorial Schur functions,
//! Weyl-algebra operators, PBW normal forms in universal enveloping algebras
//! of `gl_N`, `o_N` and `sp_N`, and matrices over tensor powers of `C^N`.
//!
//! The crate is `no_std` and only needs `alloc`.
#![no_std]

extern crate alloc;

pub mod combinat;
pub mod error;
pub mod genfun;
pub mod lie;
pub mod matrix;
pub mod pbw;
pub mod poly;
pub mod ratfun;
pub mod ring;
pub mod scalar;
pub mod symfun;
pub mod tensor;
pub mod uea;
pub mod weyl;

pub use error::{Error, Result};
pub use lie::{Family, Form, IndexSet, LieContext};
pub use pbw::{Element, PbwAlgebra, Word};
pub use poly::{SymPoly, UniPoly};
pub use ratfun::RatFun;
pub use ring::{Coeff, Ring};
pub use scalar::Scalar;
pub use weyl::{WeylContext, WeylOperator};
