//! Exhaustive depth-first generation of square-free words and the census of
//! irreducibly square-free words.
//!
//! The search extends a prefix by `0`, `1`, `2` in that order and prunes as
//! soon as the new last letter closes a square, so words come out in
//! lexicographic order. For parallel runs the tree is cut at a fixed depth and
//! the subtrees below each square-free prefix are searched independently; the
//! per-subtree results are merged with commutative operations, so totals do not
//! depend on the schedule.

use std::collections::BTreeSet;
use std::ops::ControlFlow;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::disposability::has_disposable_site;
use crate::error::{Error, Result};
use crate::square::ends_with_square;
use crate::symmetry::canonical_key;
use crate::word::{Letter, Word};

pub const DEFAULT_SPLIT_DEPTH: usize = 6;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SearchOptions {
    /// Worker threads; 0 uses the global rayon pool.
    pub threads: usize,
    /// Depth at which the search tree is partitioned into work items.
    pub split_depth: usize,
}

impl Default for SearchOptions {
    fn default() -> Self {
        SearchOptions {
            threads: 0,
            split_depth: DEFAULT_SPLIT_DEPTH,
        }
    }
}

impl SearchOptions {
    pub fn serial() -> Self {
        SearchOptions {
            threads: 1,
            ..Default::default()
        }
    }

    pub fn with_threads(threads: usize) -> Self {
        SearchOptions {
            threads,
            ..Default::default()
        }
    }

    /// Runs `f` on a pool with the configured number of threads.
    pub fn install<R: Send>(&self, f: impl FnOnce() -> R + Send) -> R {
        if self.threads == 0 {
            return f();
        }
        match rayon::ThreadPoolBuilder::new()
            .num_threads(self.threads)
            .build()
        {
            Ok(pool) => pool.install(f),
            Err(_) => f(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CensusRow {
    pub length: usize,
    pub square_free_count: u64,
    pub irreducible_count_raw: u64,
    pub irreducible_count_canonical: u64,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub representatives: Option<Vec<Word>>,
}

/// Depth-first extension of `prefix` to every square-free word of length `n`.
/// `prefix` must be square-free; it is restored before returning.
fn extend_to(
    prefix: &mut Vec<Letter>,
    n: usize,
    visit: &mut dyn FnMut(&[Letter]) -> ControlFlow<()>,
) -> ControlFlow<()> {
    if prefix.len() == n {
        return visit(prefix);
    }
    for a in Letter::ALL {
        prefix.push(a);
        let flow = if ends_with_square(prefix) {
            ControlFlow::Continue(())
        } else {
            extend_to(prefix, n, visit)
        };
        prefix.pop();
        flow?;
    }
    ControlFlow::Continue(())
}

/// Visits every square-free word of length `n` once, in lexicographic order.
/// Returns the number of words visited.
pub fn enumerate_square_free(n: usize, mut visitor: impl FnMut(&[Letter])) -> u64 {
    let mut count = 0u64;
    let mut prefix = Vec::with_capacity(n);
    let _ = extend_to(&mut prefix, n, &mut |w| {
        count += 1;
        visitor(w);
        ControlFlow::Continue(())
    });
    count
}

/// Like [`enumerate_square_free`] but stops as soon as the visitor breaks.
/// Returns `true` if the walk was interrupted.
pub fn search_square_free(n: usize, mut visitor: impl FnMut(&[Letter]) -> ControlFlow<()>) -> bool {
    let mut prefix = Vec::with_capacity(n);
    extend_to(&mut prefix, n, &mut visitor).is_break()
}

/// Square-free prefixes of length `min(depth, n)`, in lexicographic order.
fn split_points(n: usize, depth: usize) -> Vec<Vec<Letter>> {
    let mut out = Vec::new();
    enumerate_square_free(depth.min(n), |w| out.push(w.to_vec()));
    out
}

/// Folds over all square-free words of length `n`, partitioning the search
/// tree across workers. `merge` must be commutative and associative.
pub fn fold_square_free<A, I, F, M>(
    n: usize,
    opts: &SearchOptions,
    identity: I,
    fold: F,
    merge: M,
) -> A
where
    A: Send,
    I: Fn() -> A + Sync + Send,
    F: Fn(&mut A, &[Letter]) + Sync + Send,
    M: Fn(A, A) -> A + Sync + Send,
{
    let roots = split_points(n, opts.split_depth);
    opts.install(|| {
        roots
            .into_par_iter()
            .map(|mut prefix| {
                let mut acc = identity();
                prefix.reserve(n - prefix.len());
                let _ = extend_to(&mut prefix, n, &mut |w| {
                    fold(&mut acc, w);
                    ControlFlow::Continue(())
                });
                acc
            })
            .reduce(&identity, &merge)
    })
}

pub fn square_free_count(n: usize, opts: &SearchOptions) -> u64 {
    fold_square_free(n, opts, || 0u64, |c, _| *c += 1, |a, b| a + b)
}

/// Number of square-free words of length `n` up to permutation of letters
/// and reversal.
pub fn square_free_class_count(n: usize, opts: &SearchOptions) -> u64 {
    fold_square_free(
        n,
        opts,
        BTreeSet::new,
        |keys, w| {
            keys.insert(canonical_key(w));
        },
        union,
    )
    .len() as u64
}

fn union(mut a: BTreeSet<Word>, mut b: BTreeSet<Word>) -> BTreeSet<Word> {
    if a.len() < b.len() {
        std::mem::swap(&mut a, &mut b);
    }
    a.extend(b);
    a
}

fn require_min_length(n: usize) -> Result<()> {
    if n < 3 {
        Err(Error::TooShort { len: n, min: 3 })
    } else {
        Ok(())
    }
}

pub fn census(n: usize, with_representatives: bool) -> Result<CensusRow> {
    census_with(n, with_representatives, &SearchOptions::default())
}

#[derive(Default)]
struct Tally {
    square_free: u64,
    raw: u64,
    keys: BTreeSet<Word>,
    scratch: Vec<Letter>,
}

pub fn census_with(
    n: usize,
    with_representatives: bool,
    opts: &SearchOptions,
) -> Result<CensusRow> {
    require_min_length(n)?;
    let tally = fold_square_free(
        n,
        opts,
        Tally::default,
        |t, w| {
            t.square_free += 1;
            if !has_disposable_site(w, 1, &mut t.scratch) {
                t.raw += 1;
                t.keys.insert(canonical_key(w));
            }
        },
        |a, b| Tally {
            square_free: a.square_free + b.square_free,
            raw: a.raw + b.raw,
            keys: union(a.keys, b.keys),
            scratch: Vec::new(),
        },
    );
    Ok(CensusRow {
        length: n,
        square_free_count: tally.square_free,
        irreducible_count_raw: tally.raw,
        irreducible_count_canonical: tally.keys.len() as u64,
        representatives: with_representatives.then(|| tally.keys.into_iter().collect()),
    })
}

pub fn census_range(n_min: usize, n_max: usize) -> Result<Vec<CensusRow>> {
    census_range_with(n_min, n_max, false, &SearchOptions::default())
}

pub fn census_range_with(
    n_min: usize,
    n_max: usize,
    with_representatives: bool,
    opts: &SearchOptions,
) -> Result<Vec<CensusRow>> {
    require_min_length(n_min)?;
    if n_max < n_min {
        return Err(Error::OutOfRange {
            what: "upper length",
            value: n_max,
            min: n_min,
            max: usize::MAX,
        });
    }
    (n_min..=n_max)
        .map(|n| census_with(n, with_representatives, opts))
        .collect()
}

/// Whether an irreducibly square-free word of length `n` exists. Stops at the
/// first hit.
pub fn exists_irreducible(n: usize) -> Result<bool> {
    Ok(first_irreducible(n)?.is_some())
}

/// Lexicographically least irreducibly square-free word of length `n`.
pub fn first_irreducible(n: usize) -> Result<Option<Word>> {
    require_min_length(n)?;
    let mut scratch = Vec::with_capacity(n);
    let mut found = None;
    search_square_free(n, |w| {
        if has_disposable_site(w, 1, &mut scratch) {
            ControlFlow::Continue(())
        } else {
            found = Some(Word::from(w));
            ControlFlow::Break(())
        }
    });
    Ok(found)
}
