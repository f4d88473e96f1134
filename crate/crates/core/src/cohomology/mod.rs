//! First cohomology of `Γ_r` with coefficients in rational modules, by two
//! independent routes: the equivariant-Hom formula for modules pulled back
//! from `S_{r+1}`, and Fox-derivative cocycle linear algebra on the finite
//! presentation. Also the restriction of classes to cyclic lattice subgroups.

mod h1;
mod hom;
mod module;
mod restriction;

pub use h1::{check_cocycle_condition, fox_cocycle_h1, h1_dim_hs, CohomologyResult, Method};
pub use hom::equivariant_hom_basis;
pub use module::GModule;
pub use restriction::{
    boundary_tangent_dim, primitive_loops, restrict_to_loop, restrict_to_loops, RestrictionReport,
    DEFAULT_BOUNDARY_LOOPS,
};
