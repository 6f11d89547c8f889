//! The symmetric group: permutations, irreducible characters, the rational
//! group algebra and explicit irreducible modules.

mod algebra;
mod character;
mod irrep;
mod permutation;

pub use algebra::{isotypic_projector, GroupAlgebraElement};
pub use character::{character, character_table, character_table_bounded, CharacterTable, DEFAULT_TABLE_BOUND};
pub use irrep::{young_symmetrizer, SpechtModule};
pub use permutation::Permutation;
