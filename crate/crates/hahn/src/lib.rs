//! Exact arithmetic for series over `Z ⊕ Z ⊕ ...` with reverse lexicographic
//! order, the anisotropic form `⟨f,g⟩ = Σ fᵢ gᵢ tᵢ` on finite slices, types
//! in `Γ/2Γ`, and the `π` map on subspaces.

pub mod checks;
pub mod gamma;
pub mod literal;
pub mod scalar;
pub mod series;
pub mod space;

pub use gamma::{gamma_cmp, GammaExp, TypeClass, Val};
pub use literal::{parse_gamma, parse_series};
pub use scalar::HahnScalar;
pub use series::HahnSeries;
pub use space::{
    anisotropy_check, counting_types, form, norm, ortho_complement, orthogonalize, pi_map, pi_of_basis, type_of, Anisotropy,
    KVector, Subspace,
};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    #[error("division by zero")]
    DivisionByZero,
    #[error("dimension mismatch: {left} vs {right}")]
    DimensionMismatch { left: usize, right: usize },
    #[error("zero vector has no type")]
    ZeroVector,
    #[error("input vectors are linearly dependent")]
    DependentInput,
    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
