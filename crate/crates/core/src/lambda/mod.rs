//! λ-ring machinery: the big Witt ring `Λ(A)`, ghost coordinates, Adams
//! operations, Grothendieck's universal polynomials and concrete λ-structures.

mod base;
mod universal;
mod witt;

pub use base::{adams_on_base, lambda_axioms_hold, special_check, LambdaContext, LambdaRing};
pub use universal::{
    universal_composition_poly, universal_product_poly, UniversalPoly, COMPOSITION_POLY_BOUND,
    PRODUCT_POLY_BOUND,
};
pub use witt::{adams_on_witt, from_ghosts, ghost, witt_add, witt_mul, witt_neg, WittSeries};
