//! Certified emptiness checks for common zeros of power-sum polynomial
//! systems: exact polynomial algebra, certified interval numerics, the
//! arithmetic criteria, graded ideal membership and replayable certificates.

pub mod analytic;
pub mod criteria;
pub mod error;
pub mod exactnum;
pub mod membership;
pub mod par;
pub mod pipeline;
pub mod powersum;
pub mod unipoly;
