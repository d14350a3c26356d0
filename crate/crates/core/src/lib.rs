//! Exact computations in twisted group algebras `(K G)_J` over `Q(i, sqrt 5)`:
//! permutation groups, sparse group algebra elements, twists built from
//! 2-cocycles on elementary abelian subgroups, the double coset
//! decomposition of the twisted coalgebra, and integrality certificates.
//!
//! The algebra types are generic over the coefficient [`field::Field`]; the
//! aliases below fix the coefficients to [`field::QiSqrt5`].

pub mod cosetcoalg;
pub mod error;
pub mod field;
pub mod groupalg;
pub mod linalg;
pub mod obstruct;
pub mod perm;
pub mod subgroup;
pub mod twist;

pub use error::{Error, Result};
pub use field::{QiSqrt5, Rational, Root4, SmallRational};
pub use perm::Perm;

/// Default coefficient field.
pub type Scalar = QiSqrt5;
pub type AlgElt = groupalg::GroupAlgebraElement<Scalar>;
pub type Tensor2 = groupalg::Tensor2<Scalar>;
pub type Tensor3 = groupalg::Tensor3<Scalar>;
