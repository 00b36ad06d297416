//! Dense univariate polynomial algebra over `Z`, `Q` and prime fields.

pub mod bivariate;
pub mod dense;
pub mod exact;
pub mod factor;
pub mod field;
pub mod intpoly;
pub mod irreducible;
pub mod quotient;

pub use dense::{DensePoly, FpPoly, RatPoly};
pub use exact::{poly_gcd, resultant, squarefree_part, ExactPoly, Ring, Scalar};
pub use factor::factor_mod_p;
pub use field::Field;
pub use intpoly::IntPoly;
pub use irreducible::{certify_irreducible, IrreducibilityCertificate, IrreducibilityVerdict};
pub use quotient::{InverseOrSplit, QuotientElem};
