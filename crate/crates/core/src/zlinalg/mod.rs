//! Exact integer linear algebra: Smith normal form, canonical finitely
//! generated abelian groups, homomorphisms, kernels/images/cokernels,
//! exactness, and brute-force oracles.

pub mod extension;
pub mod group;
pub mod hom;
pub mod matrix;
pub mod oracle;
pub mod snf;

pub use extension::{abelian_groups_of_order, extension_candidates, extension_candidates_bounded};
pub use group::{group_from_presentation, FinAbGroup, Presentation};
pub use hom::{
    cokernel, hom_cokernel, hom_compose, hom_image, hom_kernel, image_subgroup, is_exact_at,
    kernel_subgroup, quotient, GroupHom, Quotient, Subgroup,
};
pub use matrix::Matrix;
pub use oracle::{oracle_enumerate, oracle_is_exact};
pub use snf::{integer_kernel, smith_normal_form, solve_integer, SmithDecomposition};
