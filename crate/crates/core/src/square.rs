//! Square detection.
//!
//! A square `uu` with `|u| = h` starting at `s` is a run of `h` consecutive
//! positions `i` with `w[i] == w[i + h]`. Any such run contains exactly one
//! multiple of `h`, so for each half-length it suffices to probe the anchors
//! `0, h, 2h, ...` and extend matches left and right from each anchor. On
//! square-free input the extensions die out almost immediately, which keeps the
//! check close to `O(n log n)` in practice and `O(n^2)` in the worst case.

use serde::{Deserialize, Serialize};

use crate::word::{Letter, Word};

/// Occurrence of a square `w[start..start + 2 * half_length]`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct SquareWitness {
    pub start: usize,
    pub half_length: usize,
}

impl SquareWitness {
    pub fn end(&self) -> usize {
        self.start + 2 * self.half_length
    }

    /// The letters `uu` of the square inside `w`.
    pub fn slice<'a>(&self, w: &'a [Letter]) -> &'a [Letter] {
        &w[self.start..self.end()]
    }

    /// Checks independently that `w` really has this square.
    pub fn holds_in(&self, w: &[Letter]) -> bool {
        self.half_length > 0
            && self.end() <= w.len()
            && w[self.start..self.start + self.half_length]
                == w[self.start + self.half_length..self.end()]
    }
}

/// Leftmost square of `w`, ties broken by the shorter half-length.
pub fn find_square(w: &[Letter]) -> Option<SquareWitness> {
    let n = w.len();
    let mut best: Option<SquareWitness> = None;
    for h in 1..=n / 2 {
        // A square found at an earlier (smaller) h wins ties on start.
        let limit = best.map_or(usize::MAX, |b| b.start);
        if let Some(start) = leftmost_start(w, h, limit) {
            best = Some(SquareWitness {
                start,
                half_length: h,
            });
            if start == 0 {
                break;
            }
        }
    }
    best
}

pub fn is_square_free(w: &[Letter]) -> bool {
    let n = w.len();
    (1..=n / 2).all(|h| leftmost_start(w, h, usize::MAX).is_none())
}

/// Leftmost start of a square with half-length `h`, considering only starts
/// strictly below `limit`.
fn leftmost_start(w: &[Letter], h: usize, limit: usize) -> Option<usize> {
    let n = w.len();
    if 2 * h > n {
        return None;
    }
    // match positions i range over [0, n - h)
    let last = n - h;
    let mut anchor = 0;
    while anchor < last {
        // starts reachable from this anchor are >= anchor + 1 - h
        if anchor + 1 >= limit.saturating_add(h) {
            return None;
        }
        if w[anchor] == w[anchor + h] {
            let mut left = 0;
            while left < h - 1 && left < anchor && w[anchor - left - 1] == w[anchor - left - 1 + h]
            {
                left += 1;
            }
            let need = h - 1 - left;
            let mut right = 0;
            while right < need
                && anchor + right + 1 < last
                && w[anchor + right + 1] == w[anchor + right + 1 + h]
            {
                right += 1;
            }
            if right >= need {
                let start = anchor - left;
                return (start < limit).then_some(start);
            }
        }
        anchor += h;
    }
    None
}

/// Whether `w` ends with a square. Only the squares touching the last
/// position are examined.
pub fn ends_with_square(w: &[Letter]) -> bool {
    let n = w.len();
    (1..=n / 2).any(|h| {
        let tail = &w[n - h..];
        let before = &w[n - 2 * h..n - h];
        tail == before
    })
}

/// For square-free `w`, whether `w·a` is still square-free.
pub fn extends_square_free(w: &[Letter], a: Letter) -> bool {
    let n = w.len() + 1;
    let at = |i: usize| if i + 1 == n { a } else { w[i] };
    (1..=n / 2).all(|h| {
        // compare the final letter first; most candidates fail there
        if at(n - 1 - h) != a {
            return true;
        }
        (n - 2 * h..n - h).any(|i| at(i) != at(i + h))
    })
}

impl Word {
    pub fn find_square(&self) -> Option<SquareWitness> {
        find_square(self)
    }

    pub fn is_square_free(&self) -> bool {
        is_square_free(self)
    }
}
