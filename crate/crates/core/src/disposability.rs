//! Deleting interior factors and the (k-)irreducibility tests.
//!
//! A factor occurrence is interior when letters remain on both sides of it.
//! It is disposable when deleting it leaves a square-free word. A square-free
//! word without disposable interior factors of length `k` is k-irreducibly
//! square-free; for `k = 1` this is plain irreducibility.

use std::collections::BTreeSet;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::square::{find_square, is_square_free, SquareWitness};
use crate::word::{Letter, Word};

/// Occurrence of a factor of length `length` starting at `start`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct DeletionSite {
    pub start: usize,
    pub length: usize,
}

impl DeletionSite {
    pub fn new(start: usize, length: usize) -> DeletionSite {
        DeletionSite { start, length }
    }

    pub fn letter(start: usize) -> DeletionSite {
        DeletionSite { start, length: 1 }
    }

    /// Both flanks nonempty.
    pub fn is_interior(&self, word_len: usize) -> bool {
        self.start >= 1 && self.length >= 1 && self.start + self.length < word_len
    }

    fn check(&self, word_len: usize) -> Result<()> {
        if self.is_interior(word_len) {
            Ok(())
        } else {
            Err(Error::NotInterior {
                start: self.start,
                length: self.length,
                word_len,
            })
        }
    }

    /// Interior sites of length `k` in a word of length `word_len`, left to right.
    pub fn interior_sites(word_len: usize, k: usize) -> impl Iterator<Item = DeletionSite> {
        let last = if k == 0 {
            0
        } else {
            word_len.saturating_sub(k + 1)
        };
        (1..=last).map(move |start| DeletionSite { start, length: k })
    }
}

/// Outcome of deleting one interior site.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SiteWitness {
    pub site: DeletionSite,
    /// Leftmost square of the shortened word, or `None` when the site is
    /// disposable.
    pub square: Option<SquareWitness>,
}

impl SiteWitness {
    pub fn is_disposable(&self) -> bool {
        self.square.is_none()
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct IrreducibilityReport {
    pub word: Word,
    pub k: usize,
    pub verdict: bool,
    pub first_disposable: Option<DeletionSite>,
    pub witnesses: Vec<SiteWitness>,
}

impl IrreducibilityReport {
    pub fn witness_for(&self, site: DeletionSite) -> Option<&SiteWitness> {
        self.witnesses.iter().find(|w| w.site == site)
    }

    pub fn disposable_sites(&self) -> impl Iterator<Item = DeletionSite> + '_ {
        self.witnesses
            .iter()
            .filter(|w| w.is_disposable())
            .map(|w| w.site)
    }
}

/// `w1·w2` where `w = w1·v·w2`, `|w1| = site.start`, `|v| = site.length`.
pub fn delete_factor(w: &[Letter], site: DeletionSite) -> Result<Word> {
    site.check(w.len())?;
    Ok(deleted(w, site))
}

fn deleted(w: &[Letter], site: DeletionSite) -> Word {
    let mut out = Word::new();
    out.extend(w[..site.start].iter().copied());
    out.extend(w[site.start + site.length..].iter().copied());
    out
}

fn require_square_free(w: &[Letter]) -> Result<()> {
    match find_square(w) {
        None => Ok(()),
        Some(sq) => Err(Error::NotSquareFree(sq)),
    }
}

pub fn is_disposable(w: &[Letter], site: DeletionSite) -> Result<bool> {
    site.check(w.len())?;
    require_square_free(w)?;
    Ok(is_square_free(&deleted(w, site)))
}

pub fn is_irreducibly_square_free(w: &[Letter]) -> Result<IrreducibilityReport> {
    if w.len() < 3 {
        return Err(Error::TooShort {
            len: w.len(),
            min: 3,
        });
    }
    is_k_irreducible(w, 1)
}

pub fn is_k_irreducible(w: &[Letter], k: usize) -> Result<IrreducibilityReport> {
    if k == 0 {
        return Err(Error::OutOfRange {
            what: "k",
            value: 0,
            min: 1,
            max: usize::MAX,
        });
    }
    if w.len() < k + 2 {
        return Err(Error::TooShort {
            len: w.len(),
            min: k + 2,
        });
    }
    require_square_free(w)?;
    let witnesses: Vec<SiteWitness> = DeletionSite::interior_sites(w.len(), k)
        .map(|site| SiteWitness {
            site,
            square: find_square(&deleted(w, site)),
        })
        .collect();
    let first_disposable = witnesses.iter().find(|s| s.is_disposable()).map(|s| s.site);
    Ok(IrreducibilityReport {
        word: Word::from(w),
        k,
        verdict: first_disposable.is_none(),
        first_disposable,
        witnesses,
    })
}

/// Interior sites of length `k` whose deletion keeps `w` square-free.
pub fn disposable_sites(w: &[Letter], k: usize) -> Result<Vec<DeletionSite>> {
    Ok(is_k_irreducible(w, k)?.disposable_sites().collect())
}

/// Every `k <= max_k` for which `w` is not k-irreducibly square-free.
/// Values of `k` with no interior site (`|w| < k + 2`) are skipped.
pub fn failing_ks(w: &[Letter], max_k: usize) -> Result<BTreeSet<usize>> {
    if w.len() < 3 {
        return Err(Error::TooShort {
            len: w.len(),
            min: 3,
        });
    }
    require_square_free(w)?;
    let mut scratch = Vec::with_capacity(w.len());
    Ok((1..=max_k.min(w.len() - 2))
        .filter(|&k| has_disposable_site(w, k, &mut scratch))
        .collect())
}

/// Fast verdict for a word already known to be square-free with
/// `|w| >= k + 2`: whether some interior length-`k` site is disposable.
/// `scratch` is reused across calls to avoid allocation.
pub fn has_disposable_site(w: &[Letter], k: usize, scratch: &mut Vec<Letter>) -> bool {
    DeletionSite::interior_sites(w.len(), k).any(|site| {
        scratch.clear();
        scratch.extend_from_slice(&w[..site.start]);
        scratch.extend_from_slice(&w[site.start + site.length..]);
        is_square_free(scratch)
    })
}

impl Word {
    pub fn is_irreducibly_square_free(&self) -> Result<IrreducibilityReport> {
        is_irreducibly_square_free(self)
    }
}
