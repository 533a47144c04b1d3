//! Exact CRT-module calculus for united K-theory.
//!
//! The crate is layered:
//!
//! * [`zlinalg`] — Smith normal form and finitely generated abelian groups;
//! * [`crt`] — CRT-modules (the triple `(M^O, M^U, M^T)` with the eight
//!   operations), relation and acyclicity checks, isomorphism search;
//! * [`free`] — monogenic free modules and morphisms between free modules;
//! * [`tensor`] — tensor products with free modules, resolutions, `⊗` and `Tor`;
//! * [`kunneth`] — the Künneth extension solver;
//! * [`catalog`] — named fixtures (the united K-theory of `ℝ`, `ℂ`, `T`, real
//!   Cuntz algebras and their tensor products).
//!
//! Every algorithm is generic over the integer [`Scalar`]; the aliases below
//! fix the default arbitrary-precision choice.

pub mod catalog;
pub mod crt;
pub mod error;
pub mod free;
pub mod kunneth;
pub mod scalar;
pub mod tensor;
pub mod zlinalg;

pub use error::{Error, Result};
pub use scalar::Scalar;

/// Default arbitrary-precision integer.
pub type Int = num_bigint::BigInt;
/// Integer matrix over [`Int`].
pub type IntMatrix = zlinalg::Matrix<Int>;
/// Canonical abelian group over [`Int`].
pub type Group = zlinalg::FinAbGroup<Int>;
/// Group homomorphism over [`Int`].
pub type Hom = zlinalg::GroupHom<Int>;
/// CRT-module over [`Int`].
pub type CrtModuleZ = crt::CrtModule<Int>;
