//! Square-free words over {0, 1, 2} and their irreducibility.
//!
//! A square-free word is irreducibly square-free when deleting any interior
//! letter creates a square. This crate provides the square tests, deletion
//! and (k-)irreducibility checks, square-free-preserving morphisms and their
//! certification, exhaustive enumeration with a census up to letter
//! permutation and reversal, an explicit construction for every admissible
//! length, and re-checks of the finitely verifiable facts behind it.

pub mod construct;
pub mod disposability;
pub mod enumerate;
pub mod error;
pub mod morphism;
pub mod replicate;
pub mod square;
pub mod symmetry;
pub mod word;

pub use construct::{construct, small_word, special_word, Branch, ConstructionTrace};
pub use disposability::{
    delete_factor, failing_ks, is_disposable, is_irreducibly_square_free, is_k_irreducible,
    DeletionSite, IrreducibilityReport, SiteWitness,
};
pub use enumerate::{
    census, census_range, enumerate_square_free, exists_irreducible, CensusRow, SearchOptions,
};
pub use error::{Error, Result};
pub use morphism::{
    alignment_test, apply_morphism, crochemore_test, fixed_point_prefix, procedure_i,
    procedure_i_k, Morphism, MorphismCertificate,
};
pub use replicate::{replicate_all, ClaimResult, Verdict};
pub use square::{extends_square_free, find_square, is_square_free, SquareWitness};
pub use symmetry::{apply_symmetry, canonical_key, Symmetry};
pub use word::{parse_word, Letter, Word};
