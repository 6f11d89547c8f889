//! The `K₀` layer: classes, λ and λ_Σ series, evaluation of symmetric
//! functions at classes, the ring `R ⊗ K₀` with the induction product, and the
//! maps `h`, `g`, `μ`, `ξ`.

mod ops;
mod rd;

pub use ops::{
    alt_series, aw_check, complete_series, complex_class, euler_xi, ev, g_map, h_map, induction_product,
    k0_class, lambda_of_class, lambda_sigma, lambda_sigma_complex, lambda_sigma_complex_direct, mu_series,
    realize_class, schur_class, sym_series, VirtualGObject,
};
pub use rd::{format_schur_series, K0Class, RDElement, SchurSeries};
