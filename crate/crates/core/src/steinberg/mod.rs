//! Stokes data from asymptotic data: characters, alcove, cross-section.

pub mod alcove;
pub mod characters;
pub mod section;
pub mod pipeline;

pub use alcove::{alcove_map, AlcovePoint, AsymptoticData};
pub use characters::{fundamental_character, fundamental_characters, torus_character_values, CharacterTable};
pub use pipeline::{semisimple_spectrum_check, StokesContext, StokesData};
pub use section::{gamma_order, section_word, word_matrix};
