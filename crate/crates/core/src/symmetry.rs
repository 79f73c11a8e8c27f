//! The twelve symmetries of ternary words: letter permutations, optionally
//! followed by reversal.

use serde::{Deserialize, Serialize};

use crate::word::{Letter, Word};

/// A permutation of the alphabet together with an optional reversal.
///
/// `permutation[a]` is the image of letter `a`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Symmetry {
    permutation: [u8; 3],
    pub reversed: bool,
}

const PERMUTATIONS: [[u8; 3]; 6] = [
    [0, 1, 2],
    [0, 2, 1],
    [1, 0, 2],
    [1, 2, 0],
    [2, 0, 1],
    [2, 1, 0],
];

impl Symmetry {
    pub const IDENTITY: Symmetry = Symmetry {
        permutation: [0, 1, 2],
        reversed: false,
    };

    /// Returns `None` unless `permutation` is a bijection of {0, 1, 2}.
    pub fn new(permutation: [u8; 3], reversed: bool) -> Option<Symmetry> {
        let mut seen = [false; 3];
        for &p in &permutation {
            if p > 2 || seen[p as usize] {
                return None;
            }
            seen[p as usize] = true;
        }
        Some(Symmetry {
            permutation,
            reversed,
        })
    }

    /// Letter permutation `a -> a + shift (mod 3)`.
    pub fn rotation(shift: u8) -> Symmetry {
        let s = shift % 3;
        Symmetry {
            permutation: [s, (1 + s) % 3, (2 + s) % 3],
            reversed: false,
        }
    }

    pub fn reversal() -> Symmetry {
        Symmetry {
            reversed: true,
            ..Symmetry::IDENTITY
        }
    }

    /// All 12 symmetries: the 6 permutations in lexicographic order, first
    /// plain and then reversed.
    pub fn all() -> impl Iterator<Item = Symmetry> {
        [false, true].into_iter().flat_map(|reversed| {
            PERMUTATIONS.into_iter().map(move |permutation| Symmetry {
                permutation,
                reversed,
            })
        })
    }

    pub fn permutation(&self) -> [u8; 3] {
        self.permutation
    }

    #[inline]
    pub fn map_letter(&self, a: Letter) -> Letter {
        Letter::new(self.permutation[a.index()])
            .expect("permutation is a bijection on the alphabet")
    }

    pub fn apply(&self, w: &[Letter]) -> Word {
        let mapped = w.iter().map(|&a| self.map_letter(a));
        if self.reversed {
            mapped.rev().collect()
        } else {
            mapped.collect()
        }
    }
}

pub fn apply_symmetry(w: &[Letter], s: Symmetry) -> Word {
    s.apply(w)
}

/// The lexicographically least image of `w` under the twelve symmetries.
pub fn canonical_key(w: &[Letter]) -> Word {
    // For a fixed orientation the least permutation image is obtained by
    // relabelling letters in order of first appearance.
    let forward = relabel_by_first_appearance(w.iter().copied());
    let backward = relabel_by_first_appearance(w.iter().rev().copied());
    forward.min(backward)
}

fn relabel_by_first_appearance(letters: impl Iterator<Item = Letter>) -> Word {
    let mut map: [Option<u8>; 3] = [None; 3];
    let mut next = 0u8;
    letters
        .map(|a| {
            let image = *map[a.index()].get_or_insert_with(|| {
                next += 1;
                next - 1
            });
            Letter::new(image).expect("at most three distinct letters")
        })
        .collect()
}

impl Word {
    pub fn canonical_key(&self) -> Word {
        canonical_key(self)
    }
}
