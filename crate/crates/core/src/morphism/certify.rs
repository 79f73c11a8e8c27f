//! Certification of morphisms: square-freeness preservation on short words,
//! the alignment property, and the pairwise irreducibility checks.

use rayon::prelude::*;
use serde::Serialize;

use super::Morphism;
use crate::disposability::{is_k_irreducible, IrreducibilityReport};
use crate::enumerate::enumerate_square_free;
use crate::error::{Error, Result};
use crate::square::{find_square, SquareWitness};
use crate::word::{Letter, Word};

/// Longest input length probed by [`crochemore_test`].
pub const CROCHEMORE_LENGTH: usize = 5;

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CrochemoreWitness {
    pub input: Word,
    pub image: Word,
    pub square: SquareWitness,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CrochemoreOutcome {
    pub pass: bool,
    pub witness: Option<CrochemoreWitness>,
}

/// Occurrence of `image(a)` at `offset` inside `image(b)·image(c)` that is
/// neither the leading `image(b)` nor the trailing `image(c)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct AlignmentWitness {
    pub b: Letter,
    pub c: Letter,
    pub a: Letter,
    pub offset: usize,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct AlignmentOutcome {
    pub pass: bool,
    pub witness: Option<AlignmentWitness>,
}

/// Step 2 of the certification for one ordered pair of distinct letters.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct PairCheck {
    pub a: Letter,
    pub b: Letter,
    pub word: Word,
    pub verdict: bool,
    /// Set when `image(a)·image(b)` is itself not square-free.
    pub square: Option<SquareWitness>,
    pub report: Option<IrreducibilityReport>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct MorphismCertificate {
    pub k: usize,
    pub crochemore: CrochemoreOutcome,
    pub alignment: AlignmentOutcome,
    pub pair_checks: Vec<PairCheck>,
    pub procedure_pass: bool,
}

impl MorphismCertificate {
    pub fn pair(&self, a: Letter, b: Letter) -> Option<&PairCheck> {
        self.pair_checks.iter().find(|p| p.a == a && p.b == b)
    }
}

/// Applies `m` to every square-free word of length 1 to 5, shortest and
/// lexicographically least first, and reports the first image with a square.
pub fn crochemore_test(m: &Morphism) -> CrochemoreOutcome {
    for n in 1..=CROCHEMORE_LENGTH {
        let mut witness = None;
        enumerate_square_free(n, |w| {
            if witness.is_none() {
                let image = m.apply(w);
                if let Some(square) = find_square(&image) {
                    witness = Some(CrochemoreWitness {
                        input: Word::from(w),
                        image,
                        square,
                    });
                }
            }
        });
        if witness.is_some() {
            return CrochemoreOutcome {
                pass: false,
                witness,
            };
        }
    }
    CrochemoreOutcome {
        pass: true,
        witness: None,
    }
}

/// Scans every occurrence of every image inside every two-letter image
/// `image(b)·image(c)` (all nine ordered pairs). Passes iff each occurrence is
/// either `image(b)` at offset 0 with `a = b`, or `image(c)` flush right with
/// `a = c`.
pub fn alignment_test(m: &Morphism) -> AlignmentOutcome {
    for b in Letter::ALL {
        for c in Letter::ALL {
            let pair = m.apply(&[b, c]);
            for a in Letter::ALL {
                let image = m.image(a);
                for (offset, window) in pair.windows(image.len()).enumerate() {
                    if window != image.letters() {
                        continue;
                    }
                    let flush_left = offset == 0 && a == b;
                    let flush_right = offset + image.len() == pair.len() && a == c;
                    if !(flush_left || flush_right) {
                        return AlignmentOutcome {
                            pass: false,
                            witness: Some(AlignmentWitness { b, c, a, offset }),
                        };
                    }
                }
            }
        }
    }
    AlignmentOutcome {
        pass: true,
        witness: None,
    }
}

pub fn procedure_i(m: &Morphism) -> Result<MorphismCertificate> {
    procedure_i_k(m, 1)
}

/// Crochemore test plus k-irreducibility of `image(a)·image(b)` for the six
/// ordered pairs of distinct letters.
pub fn procedure_i_k(m: &Morphism, k: usize) -> Result<MorphismCertificate> {
    for a in Letter::ALL {
        let len = m.image_length(a);
        if len <= 1 {
            return Err(Error::ImageTooShort {
                letter: a.value(),
                len,
            });
        }
    }
    if k == 0 {
        return Err(Error::OutOfRange {
            what: "k",
            value: 0,
            min: 1,
            max: usize::MAX,
        });
    }
    let pairs: Vec<(Letter, Letter)> = Letter::ALL
        .iter()
        .flat_map(|&a| {
            Letter::ALL
                .iter()
                .filter(move |&&b| b != a)
                .map(move |&b| (a, b))
        })
        .collect();
    let pair_checks = pairs
        .par_iter()
        .map(|&(a, b)| pair_check(m, a, b, k))
        .collect::<Result<Vec<_>>>()?;
    let crochemore = crochemore_test(m);
    let alignment = alignment_test(m);
    let procedure_pass = crochemore.pass && pair_checks.iter().all(|p| p.verdict);
    Ok(MorphismCertificate {
        k,
        crochemore,
        alignment,
        pair_checks,
        procedure_pass,
    })
}

fn pair_check(m: &Morphism, a: Letter, b: Letter, k: usize) -> Result<PairCheck> {
    let word = m.apply(&[a, b]);
    match is_k_irreducible(&word, k) {
        Ok(report) => Ok(PairCheck {
            a,
            b,
            word,
            verdict: report.verdict,
            square: None,
            report: Some(report),
        }),
        Err(Error::NotSquareFree(square)) => Ok(PairCheck {
            a,
            b,
            word,
            verdict: false,
            square: Some(square),
            report: None,
        }),
        Err(e) => Err(e),
    }
}
