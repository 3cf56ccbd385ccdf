//! Exact constructions of kissing configurations in dimensions 16 to 21,
//! together with the code-theoretic certificates they rest on.

pub mod binary_codes;
pub mod exact_arith;
pub mod grid_codes;
pub mod lp_certificate;
pub mod configurations;
pub mod verifier;
pub mod vectorfile;
pub mod certify;
