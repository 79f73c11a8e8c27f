//! Irreducibly square-free words of every admissible length.
//!
//! Lengths up to 17 come from a fixed table of small words. Longer lengths
//! `n = 17k + i` use a prefix of length `17k` of the fixed point `Φ` of the
//! length-17 morphism `φ`, which is itself `φ` applied to a square-free prefix,
//! and for `i > 0` prepend a special word of length `i` whose extension by `Φ`
//! stays square-free.
//!
//! The infinite statements the construction rests on (a suffix of `φ(1)` or
//! `φ(2)` followed by `Φ` is square-free; so are `121·Φ` and `0102·Φ`) can only
//! be sampled here, on finite prefixes of `Φ`.

use serde::Serialize;

use crate::disposability::{is_irreducibly_square_free, DeletionSite};
use crate::error::{Error, Result};
use crate::morphism::Morphism;
use crate::square::{find_square, SquareWitness};
use crate::word::{word, Letter, Word};

/// Length of the images of `φ`.
pub const PHI_LENGTH: usize = 17;

/// Default prefix length used when sampling infinite claims.
pub const DEFAULT_DEPTH: usize = 10_000;

/// Lengths without any irreducibly square-free word.
pub const EXCLUDED_LENGTHS: [usize; 4] = [4, 5, 7, 12];

const SMALL_WORDS: [(usize, &str); 11] = [
    (3, "010"),
    (6, "010212"),
    (8, "01020121"),
    (9, "010212010"),
    (10, "0102012101"),
    (11, "01020120212"),
    (13, "0102012101202"),
    (14, "01020120212010"),
    (15, "010201210120212"),
    (16, "0102012021201020"),
    (17, "01202120102120210"),
];

const SPECIAL_WORDS: [&str; 16] = [
    "1",
    "02",
    "121",
    "2102",
    "12102",
    "020121",
    "2120102",
    "01020121",
    "121020121",
    "2021012102",
    "10121020121",
    "101202120121",
    "0210121020121",
    "01021201020121",
    "010201202120121",
    "0201021201020121",
];

/// Irreducibly square-free word of length `n` for `3 <= n <= 17`.
pub fn small_word(n: usize) -> Result<Word> {
    if EXCLUDED_LENGTHS.contains(&n) {
        return Err(Error::NoSuchLength(n));
    }
    SMALL_WORDS
        .iter()
        .find(|(len, _)| *len == n)
        .map(|(_, w)| word(w))
        .ok_or(Error::OutOfRange {
            what: "length",
            value: n,
            min: 3,
            max: 17,
        })
}

/// Special word `w_i`, `1 <= i <= 16`, of length `i`.
pub fn special_word(i: usize) -> Result<Word> {
    if !(1..=16).contains(&i) {
        return Err(Error::OutOfRange {
            what: "index",
            value: i,
            min: 1,
            max: 16,
        });
    }
    Ok(word(SPECIAL_WORDS[i - 1]))
}

/// Prefix of length `len` of `Φ`.
pub fn phi_prefix(len: usize) -> Word {
    Morphism::phi()
        .fixed_point_prefix(Letter::ZERO, len)
        .expect("phi is prolongable on 0")
}

fn require_depth(depth: usize) -> Result<()> {
    if depth < PHI_LENGTH {
        Err(Error::OutOfRange {
            what: "depth",
            value: depth,
            min: PHI_LENGTH,
            max: usize::MAX,
        })
    } else {
        Ok(())
    }
}

/// `w · Φ[..depth]` checked for squares.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct PrefixedCheck {
    pub prefix: Word,
    pub pass: bool,
    pub square: Option<SquareWitness>,
}

fn check_prefixed(prefix: &Word, phi: &Word) -> PrefixedCheck {
    let square = find_square(&prefix.concat(phi));
    PrefixedCheck {
        prefix: prefix.clone(),
        pass: square.is_none(),
        square,
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SuffixCheck {
    /// Letter whose image the suffix is taken from.
    pub source: Letter,
    #[serde(flatten)]
    pub check: PrefixedCheck,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ClaimAReport {
    pub depth: usize,
    pub checks: Vec<SuffixCheck>,
    pub pass: bool,
}

/// Every nonempty proper suffix `w` of `φ(1)` and `φ(2)`: is `w · Φ[..depth]`
/// square-free?
pub fn verify_claim_a(depth: usize) -> Result<ClaimAReport> {
    verify_suffix_claim(depth, &[Letter::ONE, Letter::TWO])
}

/// The same check for arbitrary source letters, including `0`, which the
/// construction does not rely on.
pub fn verify_suffix_claim(depth: usize, sources: &[Letter]) -> Result<ClaimAReport> {
    require_depth(depth)?;
    let phi = Morphism::phi();
    let prefix = phi_prefix(depth);
    let checks: Vec<SuffixCheck> = sources
        .iter()
        .flat_map(|&source| {
            let image = phi.image(source).clone();
            let prefix = &prefix;
            (1..PHI_LENGTH).map(move |start| SuffixCheck {
                source,
                check: check_prefixed(&Word::from(&image[start..]), prefix),
            })
        })
        .collect();
    let pass = checks.iter().all(|c| c.check.pass);
    Ok(ClaimAReport {
        depth,
        checks,
        pass,
    })
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ClaimBReport {
    pub depth: usize,
    pub checks: Vec<PrefixedCheck>,
    /// First eight letters of `0102 · Φ`.
    pub lead: Word,
    /// Whether `lead` occurs in `Φ[..depth]`.
    pub lead_occurs_in_phi: bool,
    pub pass: bool,
}

/// `121 · Φ[..depth]` and `0102 · Φ[..depth]` square-free, and the factor
/// `01020120` absent from `Φ[..depth]`.
pub fn verify_claim_b(depth: usize) -> Result<ClaimBReport> {
    require_depth(depth)?;
    let prefix = phi_prefix(depth);
    let checks: Vec<PrefixedCheck> = ["121", "0102"]
        .iter()
        .map(|w| check_prefixed(&word(w), &prefix))
        .collect();
    let lead = Word::from(&word("0102").concat(&prefix)[..8]);
    let lead_occurs_in_phi = prefix.contains_factor(&lead);
    let pass = checks.iter().all(|c| c.pass) && lead == word("01020120") && !lead_occurs_in_phi;
    Ok(ClaimBReport {
        depth,
        checks,
        lead,
        lead_occurs_in_phi,
        pass,
    })
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SpecialWordCheck {
    pub i: usize,
    pub word: Word,
    pub length_matches: bool,
    pub square_free: bool,
    pub extension: PrefixedCheck,
    /// `w_i · φ(0)` irreducibly square-free.
    pub irreducible_with_phi0: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SpecialWordsReport {
    pub depth: usize,
    pub entries: Vec<SpecialWordCheck>,
    pub pass: bool,
}

pub fn verify_special_words(depth: usize) -> Result<SpecialWordsReport> {
    require_depth(depth)?;
    let prefix = phi_prefix(depth);
    let phi0 = Morphism::phi().image(Letter::ZERO).clone();
    let entries: Vec<SpecialWordCheck> = (1..=16)
        .map(|i| {
            let w = special_word(i).expect("index in range");
            let irreducible_with_phi0 = is_irreducibly_square_free(&w.concat(&phi0))
                .map(|r| r.verdict)
                .unwrap_or(false);
            SpecialWordCheck {
                i,
                length_matches: w.len() == i,
                square_free: w.is_square_free(),
                extension: check_prefixed(&w, &prefix),
                irreducible_with_phi0,
                word: w,
            }
        })
        .collect();
    let pass = entries
        .iter()
        .all(|e| e.length_matches && e.square_free && e.extension.pass && e.irreducible_with_phi0);
    Ok(SpecialWordsReport {
        depth,
        entries,
        pass,
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Branch {
    Table2,
    PhiPower,
    SpecialPrefix,
}

impl Branch {
    pub fn as_str(&self) -> &'static str {
        match self {
            Branch::Table2 => "table2",
            Branch::PhiPower => "phi-power",
            Branch::SpecialPrefix => "special-prefix",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ConstructionTrace {
    pub n: usize,
    pub branch: Branch,
    pub i: usize,
    pub k: usize,
    pub parts: Vec<Word>,
    pub result: Word,
    pub verified: bool,
}

/// Builds an irreducibly square-free word of length `n` and verifies it.
pub fn construct(n: usize) -> Result<ConstructionTrace> {
    if n < 3 {
        return Err(Error::TooShort { len: n, min: 3 });
    }
    if EXCLUDED_LENGTHS.contains(&n) {
        return Err(Error::NoSuchLength(n));
    }
    let (k, i) = (n / PHI_LENGTH, n % PHI_LENGTH);
    let (branch, parts) = if n <= PHI_LENGTH {
        (Branch::Table2, vec![small_word(n)?])
    } else if i == 0 {
        (Branch::PhiPower, vec![phi_prefix(n)])
    } else {
        (
            Branch::SpecialPrefix,
            vec![special_word(i)?, phi_prefix(PHI_LENGTH * k)],
        )
    };
    let result: Word = parts.iter().flat_map(|p| p.iter().copied()).collect();
    let verified = result.len() == n
        && is_irreducibly_square_free(&result)
            .map(|r| r.verdict)
            .unwrap_or(false);
    if !verified {
        return Err(Error::VerificationFailed { n });
    }
    Ok(ConstructionTrace {
        n,
        branch,
        i,
        k,
        parts,
        result,
        verified,
    })
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct PrefixGapEntry {
    pub n: usize,
    pub verdict: bool,
    pub first_disposable: Option<DeletionSite>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct PrefixGapReport {
    /// `φ(0)`, the length-17 prefix, is irreducibly square-free.
    pub phi0_irreducible: bool,
    /// Prefixes of lengths 19 to 29, none of which should be irreducible.
    pub entries: Vec<PrefixGapEntry>,
    pub pass: bool,
}

pub const PREFIX_GAP: std::ops::RangeInclusive<usize> = 19..=29;

pub fn phi_prefix_gap_check() -> PrefixGapReport {
    let irreducible = |n: usize| {
        is_irreducibly_square_free(&phi_prefix(n)).expect("prefixes of phi are square-free")
    };
    let phi0_irreducible = irreducible(PHI_LENGTH).verdict;
    let entries: Vec<PrefixGapEntry> = PREFIX_GAP
        .map(|n| {
            let report = irreducible(n);
            PrefixGapEntry {
                n,
                verdict: report.verdict,
                first_disposable: report.first_disposable,
            }
        })
        .collect();
    let pass = phi0_irreducible && entries.iter().all(|e| !e.verdict);
    PrefixGapReport {
        phi0_irreducible,
        entries,
        pass,
    }
}
