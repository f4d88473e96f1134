//! Character tables: `S_n` through the Murnaghan–Nakayama rule, and small
//! abstract finite groups through the class algebra with exact cyclotomic
//! values.

mod dixon;
mod finite_group;
mod generic;
mod symmetric;

pub use finite_group::{FiniteGroup, MAX_GENERIC_ORDER};
pub use generic::{small_group_irreducible_characters, CharacterTable};
pub use symmetric::{
    character_table, decompose_class_function, inner_product,
    mn_character_value, ClassFunction, Decomposition, SymmetricCharacterTable, MAX_MN_DEGREE,
    MAX_TABLE_DEGREE,
};
