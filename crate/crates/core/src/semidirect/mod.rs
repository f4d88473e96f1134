//! The groups `Γ_r = Λ_r ⋊ S_{r+1}` (and the doubled-lattice variant), their
//! finite quotients `(Z/m)^k ⋊ S_{r+1}`, orbits of dual characters, and the
//! little-groups construction of irreducible representations.

mod dual;
mod group;
mod little_groups;
mod presentation;

pub use dual::{
    dual_character_orbits, orbit_permutation_image, verify_torsion_claim, DualCharacter, DualOrbit,
    PermutationImage, TorsionReport,
};
pub use group::{build_group, Case, QElement, SemidirectGroup, MAX_ENUMERATED_ORDER};
pub use little_groups::{
    character_field, count_rank_r_irreps, count_rank_r_irreps_capped, little_groups_irreps,
    little_groups_irreps_capped, IrrepDescriptor, RankCount, MAX_LITTLE_GROUPS_ORDER,
};
pub use presentation::{gamma_presentation, Presentation, Word};
